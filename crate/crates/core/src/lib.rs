//! Exact computation in the stable module category of `SL₂(𝔽_p)`.
//!
//! The stable representation ring has a free basis of classes
//! `Ω^m(Sym^l E)`, with `E` the natural module, `0 ≤ l ≤ p-2` and `m` taken
//! modulo `p-1`. On top of the ring arithmetic this crate evaluates Schur
//! functors `∇^ν` for partitions with `|ν| < p` by mapping the height-zero
//! part of the ring into `ℤ[ζ_p + ζ_p⁻¹]`, where `∇^ν Sym^l E` becomes the
//! Schur polynomial `s_ν(ζ^{-l}, ζ^{-l+2}, …, ζ^l)`.

mod bigint_serde;
pub mod cyclotomic;
pub mod error;
pub mod laurent;
pub mod multiset;
pub mod partition;
pub mod plethysm;
pub mod prime;
pub mod schur;
pub mod stable;
pub mod tableau;

pub use cyclotomic::{g_unit, giambelli_op, lambda_op, CycInt, PowerMultiset, RealCycCoords};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use multiset::IntMultiset;
pub use partition::Partition;
pub use prime::OddPrime;
pub use stable::{Basis, StableElement};
