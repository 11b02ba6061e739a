//! The polynomial modules `Ω(λ, α, β) = C[∂]`.
//!
//! Canonical action:
//!
//! ```text
//! L_k ∂^n = λ^k (∂ + kα)(∂ - k)^n,   I_k ∂^n = λ^k β (∂ - k)^n,   C_j ∂^n = 0
//! ```
//!
//! The variant `L_k ∂^n = λ^k (∂ + k(α - 1))(∂ - k)^n` obtained by lifting the
//! associative action of `C[t^±1, ∂]` is this module with `α` replaced by
//! `α - 1`; see [`super::OmegaK`].

use rand::{Rng, RngCore};

use super::{random_coeff, CentralCharacter, ModuleError, ModuleOracle};
use crate::algebra::Generator;
use crate::arith::{binomial, Scalar, SparseVec};

/// Polynomial in `∂`, keyed by exponent.
pub type OmegaVector = SparseVec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaParams {
    lambda: Scalar,
    pub alpha: Scalar,
    pub beta: Scalar,
}

impl OmegaParams {
    pub fn new(lambda: Scalar, alpha: Scalar, beta: Scalar) -> Result<Self, ModuleError> {
        if lambda == Scalar::default() {
            return Err(ModuleError::ZeroLambda);
        }
        Ok(OmegaParams {
            lambda,
            alpha,
            beta,
        })
    }

    pub fn ints(lambda: i64, alpha: i64, beta: i64) -> Result<Self, ModuleError> {
        Self::new(lambda.into(), alpha.into(), beta.into())
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }
}

/// `(∂ - shift)^n` expanded in powers of `∂`.
pub(crate) fn shifted_power(shift: &Scalar, n: u32) -> OmegaVector {
    let neg = -shift;
    let mut pow = Scalar::from_int(1);
    let mut out = OmegaVector::zero();
    // Term ∂^{n-j} carries C(n, j) (-shift)^j.
    for j in 0..=n {
        let c = &Scalar::from(binomial(n as u64, j as u64)) * &pow;
        out.add_term(n - j, c);
        pow = &pow * &neg;
    }
    out
}

/// Multiplies a polynomial in `∂` by `(∂ + c)`.
pub(crate) fn times_linear(p: &OmegaVector, c: &Scalar) -> OmegaVector {
    let mut out = OmegaVector::zero();
    for (e, coeff) in p {
        out.add_term(e + 1, coeff.clone());
        out.add_term(*e, coeff * c);
    }
    out
}

/// `Ω(λ, α, β)` with the canonical action.
#[derive(Clone, Debug)]
pub struct OmegaModule {
    pub params: OmegaParams,
}

impl OmegaModule {
    pub fn new(params: OmegaParams) -> Self {
        OmegaModule { params }
    }
}

/// Action of one generator on `∂^n`.
pub fn omega_act_basis(g: Generator, p: &OmegaParams, n: u32) -> OmegaVector {
    match g {
        Generator::C(_) => OmegaVector::zero(),
        Generator::L(k) => {
            let lk = p.lambda.pow(k).expect("lambda is nonzero");
            let base = shifted_power(&Scalar::from_int(k), n);
            times_linear(&base, &(&Scalar::from_int(k) * &p.alpha)).scaled(&lk)
        }
        Generator::I(k) => {
            let lk = p.lambda.pow(k).expect("lambda is nonzero");
            shifted_power(&Scalar::from_int(k), n).scaled(&(&lk * &p.beta))
        }
    }
}

/// Canonical action of a generator on a vector of `Ω(λ, α, β)`.
pub fn omega_act(g: Generator, p: &OmegaParams, v: &OmegaVector) -> OmegaVector {
    v.apply_linear(|n| omega_act_basis(g, p, *n))
}

impl ModuleOracle for OmegaModule {
    type Basis = u32;

    fn label(&self) -> String {
        format!(
            "Omega(lambda={}, alpha={}, beta={})",
            self.params.lambda, self.params.alpha, self.params.beta
        )
    }

    fn act_basis(&self, g: Generator, n: &u32) -> OmegaVector {
        omega_act_basis(g, &self.params, *n)
    }

    fn random_vector(&self, rng: &mut dyn RngCore) -> OmegaVector {
        let terms = rng.gen_range(1..=3);
        let mut v = OmegaVector::zero();
        while v.is_zero() {
            for _ in 0..terms {
                v.add_term(rng.gen_range(0..=3), random_coeff(rng));
            }
        }
        v
    }

    fn central_character(&self) -> CentralCharacter {
        CentralCharacter::trivial_c(Some(self.params.beta.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(u32, i64)]) -> OmegaVector {
        terms
            .iter()
            .map(|&(e, c)| (e, Scalar::from_int(c)))
            .collect()
    }

    #[test]
    fn l1_on_one() {
        let p = OmegaParams::ints(2, 3, 0).unwrap();
        // 2(∂ + 3)
        assert_eq!(
            omega_act(Generator::L(1), &p, &poly(&[(0, 1)])),
            poly(&[(1, 2), (0, 6)])
        );
    }

    #[test]
    fn l0_raises_degree() {
        let p = OmegaParams::new(Scalar::frac(1, 3), Scalar::frac(5, 7), 2.into()).unwrap();
        for n in 0..5 {
            assert_eq!(
                omega_act(Generator::L(0), &p, &poly(&[(n, 1)])),
                poly(&[(n + 1, 1)])
            );
        }
    }

    #[test]
    fn i2_on_del() {
        let p = OmegaParams::ints(1, 0, 5).unwrap();
        assert_eq!(
            omega_act(Generator::I(2), &p, &poly(&[(1, 1)])),
            poly(&[(1, 5), (0, -10)])
        );
    }

    #[test]
    fn central_elements_vanish() {
        let p = OmegaParams::ints(3, 1, 1).unwrap();
        for j in 1..=3 {
            assert!(omega_act(Generator::C(j), &p, &poly(&[(2, 1)])).is_zero());
        }
    }

    #[test]
    fn zero_lambda_rejected() {
        assert_eq!(OmegaParams::ints(0, 1, 1), Err(ModuleError::ZeroLambda));
    }

    #[test]
    fn shifted_power_expansion() {
        // (∂ - 2)^3 = ∂^3 - 6∂^2 + 12∂ - 8
        assert_eq!(
            shifted_power(&2.into(), 3),
            poly(&[(3, 1), (2, -6), (1, 12), (0, -8)])
        );
    }
}
