//! Fixed-point components: tangent and normal weight ledgers, Euler classes
//! and torus-fixed points.

mod euler;
mod fixed;
mod ledger;

pub use euler::{
    closed_form_euler_factored, euler_class_closed_form, euler_class_from_ledger, euler_factored_with, grassmannian_euler_factored,
    grassmannian_euler_product, normal_euler_factored, normal_euler_factored_ambient_zero,
    inverse_normal_euler, inverse_normal_euler_ambient_zero, normal_euler_ambient_zero, slot_var,
};
pub use fixed::{
    check_block_symmetric, check_symmetric_in, fixed_point_map, specialize_at_fixed_point, tangent_euler_at, tangent_weight_pairs,
    torus_fixed_points, TorusFixedPoint,
};
pub use ledger::{
    hquot_restriction_ledger, normal_ledger, tangent_ledger, wt0, wt1, BlockRef, Ledger, LedgerTerm, Target,
};

#[cfg(test)]
mod tests;
