//! Concrete loop-algebra modules at desk scale: irreducible `g`-modules as
//! exact matrices, evaluation modules, tensor products, and the two-step
//! extension modules built from an equivariant map `g ⊗ V(λ) → V(μ)`.

pub mod analysis;
pub mod irrep;
pub mod lie;
pub mod module;
pub mod projection;

use thiserror::Error;

use crate::oracle::OracleError;
use crate::rootsys::RootSystemError;

pub use analysis::{is_irreducible, is_nonsplit, quotient_is_evaluation, spectral_character_of, Irreducibility};
pub use irrep::{build_irrep, build_irrep_capped, Irrep};
pub use lie::{Generator, LieAlgebra};
pub use module::{evaluation_module, ExtensionModule, JetKind, JetTerm, LaurentPoly, LoopModule};
pub use projection::{equivariant_projection, highest_weight_vectors, Projection};

/// Default largest irreducible module built on request.
pub const DEFAULT_DIM_CAP: usize = 64;

/// The dimension cap, overridable through `BLOCK_ATLAS_DIM_CAP`.
pub fn dim_cap() -> usize {
    std::env::var("BLOCK_ATLAS_DIM_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_DIM_CAP)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("module of dimension {dim} exceeds the cap of {cap}")]
    DimCap { dim: String, cap: usize },
    #[error("Hom vanishes: no nonzero g-map g ⊗ V({lambda}) → V({mu})")]
    HomVanishes { lambda: String, mu: String },
    #[error("the map is not g-equivariant")]
    NotEquivariant,
    #[error("spectral points must be nonzero")]
    ZeroPoint,
    #[error("modules of different types or shapes")]
    Mismatch,
    #[error("no spectral character: ℓ-weights {0} and {1} have different characters")]
    MixedCharacter(String, String),
    #[error("the h-action has non-integral eigenvalues")]
    NonIntegralSpectrum,
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Weight(#[from] RootSystemError),
}
