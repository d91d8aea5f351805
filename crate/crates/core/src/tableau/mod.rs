//! Incomplete matrices indexing the fixed-point components, with their block
//! data, index functions and dimensions.

mod blocks;
mod general;
mod matrix;
mod spec;

pub use blocks::{block_decomposition, component_dimension, index_tables, BlockData, IndexTables, LevelBlocks};
pub use general::{canonical_labels, enumerate_general_components, general_dimension, weight_zero_rank, GeneralComponent};
pub use matrix::{enumerate_tableaux, nondecreasing_rows, Tableau};
pub use spec::{hquot_dimension, FlagSpec, MAX_N};
