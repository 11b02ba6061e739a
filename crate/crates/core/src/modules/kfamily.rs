//! Modules over the associative algebra `K = C[t^±1, ∂]` (with `∂ = t d/dt`)
//! and their lifts `A_{α,β}`:
//!
//! ```text
//! L_m v = (t^m ∂ + m α t^m) v,   I_m v = β t^m v,   C_j v = 0
//! ```
//!
//! Each family only supplies the actions of `t^m` and `∂`; the algebra action
//! is always derived from them.

use std::fmt::Debug;

use num_traits::Zero;
use rand::{Rng, RngCore};

use super::omega::shifted_power;
use super::{random_coeff, CentralCharacter, ModuleError, ModuleOracle};
use crate::algebra::Generator;
use crate::arith::{Scalar, SparseVec};

/// Laurent polynomial in `t`, keyed by exponent.
pub type LaurentVector = SparseVec<i64>;

/// A `K`-module given by the actions of `t^m` and `∂` on a basis.
pub trait KFamily: Clone + Debug + Sync {
    type Basis: Ord + Clone + Debug + Send + Sync;

    fn label(&self) -> String;

    fn t_pow_basis(&self, m: i64, b: &Self::Basis) -> SparseVec<Self::Basis>;

    fn del_basis(&self, b: &Self::Basis) -> SparseVec<Self::Basis>;

    fn random_vector(&self, rng: &mut dyn RngCore) -> SparseVec<Self::Basis>;

    /// Structural facts about the module that are known without caller input.
    fn known_flags(&self) -> IrreducibilityFlags {
        IrreducibilityFlags::default()
    }
}

/// Action of `t^m`.
pub fn kmod_t_pow<F: KFamily>(family: &F, m: i64, v: &SparseVec<F::Basis>) -> SparseVec<F::Basis> {
    v.apply_linear(|b| family.t_pow_basis(m, b))
}

/// Action of `∂ = t d/dt`.
pub fn kmod_del<F: KFamily>(family: &F, v: &SparseVec<F::Basis>) -> SparseVec<F::Basis> {
    v.apply_linear(|b| family.del_basis(b))
}

/// Action of a generator on `A_{α,β}`.
pub fn a_act<F: KFamily>(
    g: Generator,
    alpha: &Scalar,
    beta: &Scalar,
    family: &F,
    v: &SparseVec<F::Basis>,
) -> SparseVec<F::Basis> {
    match g {
        Generator::C(_) => SparseVec::zero(),
        Generator::L(m) => {
            let mut out = kmod_t_pow(family, m, &kmod_del(family, v));
            let shift = kmod_t_pow(family, m, v);
            out.add_scaled(&(&Scalar::from_int(m) * alpha), &shift);
            out
        }
        Generator::I(m) => kmod_t_pow(family, m, v).scaled(beta),
    }
}

/// `Ω(λ)`: `t^m ∂^n = λ^m (∂ - m)^n`, `∂ ∂^n = ∂^{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaK {
    lambda: Scalar,
}

impl OmegaK {
    pub fn new(lambda: Scalar) -> Result<Self, ModuleError> {
        if lambda.is_zero() {
            return Err(ModuleError::ZeroLambda);
        }
        Ok(OmegaK { lambda })
    }
}

impl KFamily for OmegaK {
    type Basis = u32;

    fn label(&self) -> String {
        format!("Omega(lambda={})", self.lambda)
    }

    fn t_pow_basis(&self, m: i64, n: &u32) -> SparseVec<u32> {
        let lm = self.lambda.pow(m).expect("lambda is nonzero");
        shifted_power(&Scalar::from_int(m), *n).scaled(&lm)
    }

    fn del_basis(&self, n: &u32) -> SparseVec<u32> {
        SparseVec::basis(n + 1)
    }

    fn random_vector(&self, rng: &mut dyn RngCore) -> SparseVec<u32> {
        let mut v = SparseVec::zero();
        while v.is_zero() {
            for _ in 0..rng.gen_range(1..=3) {
                v.add_term(rng.gen_range(0..=3u32), random_coeff(rng));
            }
        }
        v
    }

    fn known_flags(&self) -> IrreducibilityFlags {
        // ∂ C[∂] misses the constants; the module is torsion over C[t^±1].
        IrreducibilityFlags {
            del_surjective: Some(false),
            is_natural_module: Some(false),
        }
    }
}

/// Intermediate series: basis `t^n`, `∂ t^n = (γ + n) t^n`, constant `γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntermediateK {
    pub gamma: Scalar,
}

impl KFamily for IntermediateK {
    type Basis = i64;

    fn label(&self) -> String {
        format!("Intermediate(gamma={})", self.gamma)
    }

    fn t_pow_basis(&self, m: i64, n: &i64) -> LaurentVector {
        SparseVec::basis(n + m)
    }

    fn del_basis(&self, n: &i64) -> LaurentVector {
        SparseVec::term(*n, &self.gamma + &Scalar::from_int(*n))
    }

    fn random_vector(&self, rng: &mut dyn RngCore) -> LaurentVector {
        let mut v = LaurentVector::zero();
        while v.is_zero() {
            for _ in 0..rng.gen_range(1..=3) {
                v.add_term(rng.gen_range(-4..=4), random_coeff(rng));
            }
        }
        v
    }

    fn known_flags(&self) -> IrreducibilityFlags {
        let integral = self.gamma.as_integer().is_some();
        // ∂ t^n = (γ+n) t^n is onto iff γ+n never vanishes; for integral γ the
        // shift t^n -> t^{n+γ} identifies the module with C[t^±1].
        IrreducibilityFlags {
            del_surjective: Some(!integral),
            is_natural_module: Some(integral),
        }
    }
}

/// Basis of the degree-two family: `t^n` or `t^n ∂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree2Basis {
    T(i64),
    TDel(i64),
}

/// `K / K(∂^2 - f(t))` with basis `{t^n, t^n ∂}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree2K {
    pub f: LaurentVector,
}

impl KFamily for Degree2K {
    type Basis = Degree2Basis;

    fn label(&self) -> String {
        let f: Vec<String> = self.f.iter().map(|(e, c)| format!("({c})t^{e}")).collect();
        format!("Degree2(f={})", f.join("+"))
    }

    fn t_pow_basis(&self, m: i64, b: &Degree2Basis) -> SparseVec<Degree2Basis> {
        match *b {
            Degree2Basis::T(n) => SparseVec::basis(Degree2Basis::T(n + m)),
            Degree2Basis::TDel(n) => SparseVec::basis(Degree2Basis::TDel(n + m)),
        }
    }

    fn del_basis(&self, b: &Degree2Basis) -> SparseVec<Degree2Basis> {
        let mut out = SparseVec::zero();
        match *b {
            // ∂ t^n = t^n (∂ + n)
            Degree2Basis::T(n) => {
                out.add_term(Degree2Basis::T(n), Scalar::from_int(n));
                out.add_term(Degree2Basis::TDel(n), Scalar::from_int(1));
            }
            // ∂ (t^n ∂) = t^n (f(t) + n ∂)
            Degree2Basis::TDel(n) => {
                for (e, c) in &self.f {
                    out.add_term(Degree2Basis::T(n + e), c.clone());
                }
                out.add_term(Degree2Basis::TDel(n), Scalar::from_int(n));
            }
        }
        out
    }

    fn random_vector(&self, rng: &mut dyn RngCore) -> SparseVec<Degree2Basis> {
        let mut v = SparseVec::zero();
        while v.is_zero() {
            for _ in 0..rng.gen_range(1..=3) {
                let n = rng.gen_range(-3..=3);
                let b = if rng.gen_bool(0.5) {
                    Degree2Basis::T(n)
                } else {
                    Degree2Basis::TDel(n)
                };
                v.add_term(b, random_coeff(rng));
            }
        }
        v
    }
}

/// Basis `t^power (d/dt)^deriv` of the degree-n family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeNBasis {
    pub power: i64,
    pub deriv: u32,
}

/// `K / K((d/dt)^n - t)` with basis `{t^r (d/dt)^m : 0 <= m < n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeNK {
    n: u32,
}

impl DegreeNK {
    pub fn new(n: u32) -> Result<Self, ModuleError> {
        if n == 0 {
            return Err(ModuleError::InvalidDegree);
        }
        Ok(DegreeNK { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

impl KFamily for DegreeNK {
    type Basis = DegreeNBasis;

    fn label(&self) -> String {
        format!("DegreeN(n={})", self.n)
    }

    fn t_pow_basis(&self, m: i64, b: &DegreeNBasis) -> SparseVec<DegreeNBasis> {
        SparseVec::basis(DegreeNBasis {
            power: b.power + m,
            deriv: b.deriv,
        })
    }

    // ∂ = t d/dt, and d/dt (t^r D^m) = r t^{r-1} D^m + t^r D^{m+1} with D^n = t.
    fn del_basis(&self, b: &DegreeNBasis) -> SparseVec<DegreeNBasis> {
        let mut out = SparseVec::zero();
        out.add_term(*b, Scalar::from_int(b.power));
        let raised = if b.deriv + 1 < self.n {
            DegreeNBasis {
                power: b.power + 1,
                deriv: b.deriv + 1,
            }
        } else {
            DegreeNBasis {
                power: b.power + 2,
                deriv: 0,
            }
        };
        out.add_term(raised, Scalar::from_int(1));
        out
    }

    fn random_vector(&self, rng: &mut dyn RngCore) -> SparseVec<DegreeNBasis> {
        let mut v = SparseVec::zero();
        while v.is_zero() {
            for _ in 0..rng.gen_range(1..=3) {
                let b = DegreeNBasis {
                    power: rng.gen_range(-3..=3),
                    deriv: rng.gen_range(0..self.n),
                };
                v.add_term(b, random_coeff(rng));
            }
        }
        v
    }
}

/// The lift `A_{α,β}` of a `K`-module.
#[derive(Clone, Debug)]
pub struct AModule<F: KFamily> {
    pub family: F,
    pub alpha: Scalar,
    pub beta: Scalar,
}

impl<F: KFamily> AModule<F> {
    pub fn new(family: F, alpha: Scalar, beta: Scalar) -> Self {
        AModule {
            family,
            alpha,
            beta,
        }
    }
}

impl<F: KFamily> ModuleOracle for AModule<F> {
    type Basis = F::Basis;

    fn label(&self) -> String {
        format!(
            "A[{}](alpha={}, beta={})",
            self.family.label(),
            self.alpha,
            self.beta
        )
    }

    fn act_basis(&self, g: Generator, b: &F::Basis) -> SparseVec<F::Basis> {
        a_act(
            g,
            &self.alpha,
            &self.beta,
            &self.family,
            &SparseVec::basis(b.clone()),
        )
    }

    fn random_vector(&self, rng: &mut dyn RngCore) -> SparseVec<F::Basis> {
        self.family.random_vector(rng)
    }

    fn central_character(&self) -> CentralCharacter {
        CentralCharacter::trivial_c(Some(self.beta.clone()))
    }
}

/// Facts about the underlying `K`-module that the irreducibility and
/// isomorphism criteria need. `None` means unknown.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IrreducibilityFlags {
    /// `∂ A = A`.
    pub del_surjective: Option<bool>,
    /// `A ≅ C[t^±1]` as `K`-modules.
    pub is_natural_module: Option<bool>,
}

impl IrreducibilityFlags {
    /// Fills unknown entries of `self` from `fallback`.
    pub fn or(self, fallback: IrreducibilityFlags) -> IrreducibilityFlags {
        IrreducibilityFlags {
            del_surjective: self.del_surjective.or(fallback.del_surjective),
            is_natural_module: self.is_natural_module.or(fallback.is_natural_module),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    Irreducible,
    Reducible,
    NotDetermined,
}

/// Irreducibility of `A_{α,β}` for an irreducible `K`-module `A`:
/// irreducible iff `α ∉ {0,1}` or `β ≠ 0`; or `α = 1, β = 0` and `∂A = A`;
/// or `α = β = 0` and `A` is not the natural module.
pub fn a_irreducible<F: KFamily>(
    family: &F,
    alpha: &Scalar,
    beta: &Scalar,
    supplied: IrreducibilityFlags,
) -> IrreducibilityVerdict {
    let flags = supplied.or(family.known_flags());
    let one = Scalar::from_int(1);
    if !beta.is_zero() || (!alpha.is_zero() && *alpha != one) {
        return IrreducibilityVerdict::Irreducible;
    }
    let decide = |flag: Option<bool>, irreducible_when: bool| match flag {
        Some(b) if b == irreducible_when => IrreducibilityVerdict::Irreducible,
        Some(_) => IrreducibilityVerdict::Reducible,
        None => IrreducibilityVerdict::NotDetermined,
    };
    if *alpha == one {
        decide(flags.del_surjective, true)
    } else {
        decide(flags.is_natural_module, false)
    }
}

/// Isomorphism of `A_{α1,β1}` and `B_{α2,β2}`. `same_k` asserts `A ≅ B` as
/// `K`-modules; unknown surjectivity flags count as false.
pub fn a_iso_check(
    (alpha1, beta1): (&Scalar, &Scalar),
    (alpha2, beta2): (&Scalar, &Scalar),
    same_k: bool,
    del_surjective_a: Option<bool>,
    del_surjective_b: Option<bool>,
) -> bool {
    if !same_k {
        return false;
    }
    if alpha1 == alpha2 && beta1 == beta2 {
        return true;
    }
    let zero = Scalar::zero();
    let one = Scalar::from_int(1);
    let betas_zero = beta1.is_zero() && beta2.is_zero();
    (betas_zero && *alpha1 == one && *alpha2 == zero && del_surjective_a == Some(true))
        || (betas_zero && *alpha1 == zero && *alpha2 == one && del_surjective_b == Some(true))
}
