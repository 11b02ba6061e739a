//! Concrete modules over the twisted Heisenberg-Virasoro algebra.
//!
//! Every family implements [`ModuleOracle`]: a basis type, the action of a
//! basis generator on a basis vector, and a sampler for random vectors. Vector
//! arithmetic is that of [`SparseVec`].

mod ind;
mod kfamily;
mod mv;
mod omega;

use std::fmt::Debug;

use rand::RngCore;

use crate::algebra::{Generator, LieElement};
use crate::arith::{Scalar, SparseVec};

pub use ind::{ind_depth, HighestWeightData, IndModule, IndVector, PbwMonomial};
pub use kfamily::{
    a_act, a_irreducible, a_iso_check, kmod_del, kmod_t_pow, AModule, Degree2Basis, Degree2K,
    DegreeNBasis, DegreeNK, IntermediateK, IrreducibilityFlags, IrreducibilityVerdict, KFamily,
    LaurentVector, OmegaK,
};
pub use mv::{hbar_validate, HBarModuleData, MVBasis, MVModule};
pub use omega::{omega_act, omega_act_basis, OmegaModule, OmegaParams, OmegaVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("highest-weight data requires c3 = 0")]
    NonzeroC3,
    #[error(
        "highest-weight data is not admissible: c0 + (n-1) c2 vanishes for some nonzero integer n"
    )]
    InadmissibleHighestWeight,
    #[error("operation undefined on the zero vector")]
    ZeroVector,
    #[error("invalid truncated module: {0}")]
    InvalidHBarModule(String),
    #[error("degree-n family requires n >= 1")]
    InvalidDegree,
}

/// Scalars by which the central elements are declared to act.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCharacter {
    /// `None` when `I_0` is central but not a scalar on this module.
    pub i0: Option<Scalar>,
    pub c: [Scalar; 3],
}

impl CentralCharacter {
    pub fn trivial_c(i0: Option<Scalar>) -> Self {
        CentralCharacter {
            i0,
            c: [Scalar::default(), Scalar::default(), Scalar::default()],
        }
    }
}

/// A concrete module used as a black box: it can act and produce sample vectors.
pub trait ModuleOracle: Sync {
    type Basis: Ord + Clone + Debug + Send + Sync;

    /// Short human-readable description.
    fn label(&self) -> String;

    fn act_basis(&self, g: Generator, b: &Self::Basis) -> SparseVec<Self::Basis>;

    fn act(&self, g: Generator, v: &SparseVec<Self::Basis>) -> SparseVec<Self::Basis> {
        v.apply_linear(|b| self.act_basis(g, b))
    }

    fn act_element(&self, x: &LieElement, v: &SparseVec<Self::Basis>) -> SparseVec<Self::Basis> {
        let mut out = SparseVec::zero();
        for (g, c) in x {
            out.add_scaled(c, &self.act(*g, v));
        }
        out
    }

    fn random_vector(&self, rng: &mut dyn RngCore) -> SparseVec<Self::Basis>;

    fn central_character(&self) -> CentralCharacter;
}

/// Random small rational, used by the samplers.
pub(crate) fn random_coeff(rng: &mut dyn RngCore) -> Scalar {
    use rand::Rng;
    loop {
        let c = Scalar::frac(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        if c != Scalar::default() {
            return c;
        }
    }
}
