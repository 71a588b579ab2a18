//! Modular plethysms `∇^ν Sym^l E` in the stable module category.

mod decompose;
mod reduction;
mod verdict;

pub use decompose::{
    decompose_plethysm, decompose_twisted, endotrivial_power, endotrivial_schur, expand_sum,
    heller_interchange, schur_functor, PlethysmResult,
};
pub use reduction::{folded_multisets, multiset_criterion, reduce_column, reduce_row};
pub use verdict::{
    is_projective_theorem, is_projective_twisted_theorem, is_stably_irreducible_pair,
    is_stably_irreducible_pl_small, is_stably_irreducible_theorem,
    is_stably_irreducible_twisted_theorem, twisted_partition, Verdict,
};
