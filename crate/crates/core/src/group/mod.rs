//! Finite groups: permutation groups by closure, explicit multiplication
//! tables, automorphisms, cosets and `SL₂(F_p)`.

mod finite;
mod matrix;
mod perm_group;

pub use finite::{
    all_automorphisms, CosetSpace, FiniteGroup, GroupAutomorphism, GroupFile,
    EXHAUSTIVE_ASSOC_LIMIT, TABLE_LIMIT,
};
pub use matrix::{is_prime, mat_label, mat_mul, matrix_group_sl2, Mat2, MAX_SL2_PRIME};
pub use perm_group::{orbit_of, orbits_of, PermutationGroup, DEFAULT_CAP};
