//! Push-forwards along flag bundles, integration over fixed components and
//! the fixed-point oracle.

mod alphabet;
mod brion;
mod oracle;
mod schur;
mod tower;

pub use alphabet::{omega_class, BlockAlphabet, OmegaSpec};
pub use brion::{brion_pushforward, restrictive_pushforward, DEFAULT_COSET_BUDGET};
pub use oracle::{ab_integrate, LAMBDA_ATTEMPTS};
pub use schur::{complete_homogeneous, partitions_in_box, schur_bialternant, schur_polynomial};
pub use tower::{component_tower, integrate_over_component, integrate_to_point, integrate_tower_at, TowerLevel};

#[cfg(test)]
mod tests;
