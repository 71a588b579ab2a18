//! Matrix-level ground truth for modular plethysms of `SL₂(𝔽_p)`.
//!
//! `∇^ν Sym^l E` is built explicitly over `𝔽_p` as a module for the
//! normaliser `N` of a Sylow `p`-subgroup, split into uniserial summands, and
//! carried back to the stable representation ring by Green correspondence.
//! Nothing here uses characters or cyclotomic arithmetic, so agreement with
//! [`stablerep::plethysm::decompose_plethysm`] is an independent check.

pub mod decompose;
pub mod error;
pub mod fp;
pub mod module;
pub mod schur;

pub use decompose::{
    decompose_kn, green_module, green_transport, omega_kn, omega_orbit, transport_summand,
    uniserial_label, KNDecomposition, KNDecompositionJson, Summand,
};
pub use error::{OracleError, Result};
pub use fp::{Fp, FpMatrix};
pub use module::FpModule;
pub use schur::{schur_apply, schur_apply_limited, DEFAULT_MAX_DIM};

use stablerep::{Basis, OddPrime, Partition, StableElement};

/// Stable class of `∇^ν(Ω^m Sym^l E)` computed through `kN`-modules.
pub fn oracle_plethysm(nu: &Partition, b: Basis, p: OddPrime, limit: u64) -> Result<StableElement> {
    let v = green_module(p, b)?;
    let w = schur_apply_limited(nu, &v, limit)?;
    green_transport(&decompose_kn(&w)?)
}

/// Stable class of a tensor product of basis elements through `kN`-modules.
pub fn oracle_tensor(p: OddPrime, a: Basis, b: Basis) -> Result<StableElement> {
    let v = green_module(p, a)?.tensor(&green_module(p, b)?)?;
    green_transport(&decompose_kn(&v)?)
}
