//! Tensor products `Ω(λ_1,α_1,β_1) ⊗ ⋯ ⊗ Ω(λ_m,α_m,β_m) ⊗ Ind(M)`.
//!
//! A vector is a sparse combination of `∂_1^{p_1}⋯∂_m^{p_m} ⊗ w` with `w` a PBW
//! monomial. Basis keys order first by the exponent vector (left
//! lexicographically, which is the degree order `≺`) and then by monomial.

mod chain;
mod reduce;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rand::{Rng, RngCore};

use crate::algebra::Generator;
use crate::analysis::AnalysisError;
use crate::arith::{Scalar, SparseVec};
use crate::modules::{
    omega_act_basis, CentralCharacter, HighestWeightData, IndModule, IndVector, ModuleOracle,
    OmegaParams, PbwMonomial, random_coeff,
};

pub use chain::submodule_chain_verify;
pub use reduce::{
    cyclic_generation_check, descend_to_ground, irreducibility_witness, reduce_degree,
    CyclicOptions, ReductionStep,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("operation undefined on the zero vector")]
    ZeroVector,
    #[error("vector already has degree zero")]
    DegreeZero,
    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("degree reduction failed: {0}")]
    ReductionFailed(String),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

/// Factors of the tensor product and the inducing data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorParams {
    factors: Vec<OmegaParams>,
    hw: HighestWeightData,
    repeated_lambda: bool,
}

impl TensorParams {
    /// Requires at least one factor, `α_i != 0` or `β_i != 0` for each factor,
    /// and pairwise distinct `λ_i`.
    pub fn new(factors: Vec<OmegaParams>, hw: HighestWeightData) -> Result<Self, TensorError> {
        let tp = Self::allow_repeated_lambda(factors, hw)?;
        for (i, a) in tp.factors.iter().enumerate() {
            if tp.factors[..i].iter().any(|b| b.lambda() == a.lambda()) {
                return Err(TensorError::DegenerateParams(format!(
                    "lambda = {} occurs twice",
                    a.lambda()
                )));
            }
        }
        Ok(TensorParams {
            repeated_lambda: false,
            ..tp
        })
    }

    /// As [`TensorParams::new`] but accepts repeated `λ_i`.
    pub fn allow_repeated_lambda(
        factors: Vec<OmegaParams>,
        hw: HighestWeightData,
    ) -> Result<Self, TensorError> {
        if factors.is_empty() {
            return Err(TensorError::InvalidParams("no factors".into()));
        }
        if let Some(f) = factors
            .iter()
            .find(|f| f.alpha.is_zero() && f.beta.is_zero())
        {
            return Err(TensorError::InvalidParams(format!(
                "factor with lambda = {} has alpha = beta = 0",
                f.lambda()
            )));
        }
        Ok(TensorParams {
            factors,
            hw,
            repeated_lambda: true,
        })
    }

    /// Valid parameters with `1..=max_factors` factors and small rational entries.
    pub fn random(rng: &mut dyn RngCore, max_factors: usize) -> Self {
        let small = |rng: &mut dyn RngCore| {
            if rng.gen_bool(0.25) {
                Scalar::zero()
            } else {
                random_coeff(rng)
            }
        };
        let count = rng.gen_range(1..=max_factors.max(1));
        let mut factors: Vec<OmegaParams> = Vec::with_capacity(count);
        while factors.len() < count {
            let lambda = random_coeff(rng);
            let (alpha, beta) = (small(rng), small(rng));
            if factors.iter().any(|f| *f.lambda() == lambda) || (alpha.is_zero() && beta.is_zero()) {
                continue;
            }
            factors.push(OmegaParams::new(lambda, alpha, beta).expect("nonzero lambda"));
        }
        let hw = loop {
            let (h, c0, c1, c2) = (small(rng), small(rng), small(rng), small(rng));
            if let Ok(hw) = HighestWeightData::new(h, c0, c1, c2, Scalar::zero()) {
                break hw;
            }
        };
        Self::new(factors, hw).expect("valid by construction")
    }

    pub fn factors(&self) -> &[OmegaParams] {
        &self.factors
    }

    pub fn hw(&self) -> &HighestWeightData {
        &self.hw
    }

    pub fn slots(&self) -> usize {
        self.factors.len()
    }

    /// Indices with `β_i != 0`.
    pub fn s_prime(&self) -> Vec<usize> {
        (0..self.factors.len())
            .filter(|&i| !self.factors[i].beta.is_zero())
            .collect()
    }

    pub fn lambdas_distinct(&self) -> bool {
        !self.repeated_lambda
            || self
                .factors
                .iter()
                .enumerate()
                .all(|(i, a)| self.factors[..i].iter().all(|b| b.lambda() != a.lambda()))
    }
}

/// Basis vector `∂^exps ⊗ mono`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorBasis {
    pub exps: Vec<u32>,
    pub mono: PbwMonomial,
}

impl fmt::Display for TensorBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("d{}", i + 1)
                } else {
                    format!("d{}^{}", i + 1, e)
                }
            })
            .collect();
        let left = if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        };
        write!(f, "{left} (x) {}", self.mono)
    }
}

pub type TensorVector = SparseVec<TensorBasis>;

/// `1 ⊗ ⋯ ⊗ 1 ⊗ w`.
pub fn ground_vector(slots: usize, w: &IndVector) -> TensorVector {
    w.map_keys(|mono| TensorBasis {
        exps: vec![0; slots],
        mono: mono.clone(),
    })
}

/// The Ind-valued coefficients `v_p` of `Σ_p ∂^p ⊗ v_p`.
pub fn components(v: &TensorVector) -> BTreeMap<Vec<u32>, IndVector> {
    let mut out: BTreeMap<Vec<u32>, IndVector> = BTreeMap::new();
    for (b, c) in v {
        out.entry(b.exps.clone())
            .or_default()
            .add_term(b.mono.clone(), c.clone());
    }
    out
}

/// Left-lexicographic order on exponent vectors.
pub fn deg_compare(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

/// The `≺`-largest exponent vector occurring in `v`.
pub fn deg(v: &TensorVector) -> Result<Vec<u32>, TensorError> {
    v.last_key()
        .map(|b| b.exps.clone())
        .ok_or(TensorError::ZeroVector)
}

/// The tensor product module.
#[derive(Clone, Debug)]
pub struct TensorModule {
    pub params: TensorParams,
    ind: IndModule,
    /// Largest exponent and PBW depth used by the sampler.
    pub sample_bounds: (u32, u32),
}

impl TensorModule {
    pub fn new(params: TensorParams) -> Self {
        let ind = IndModule::new(params.hw.clone());
        TensorModule {
            params,
            ind,
            sample_bounds: (2, 3),
        }
    }

    pub fn ind(&self) -> &IndModule {
        &self.ind
    }

    pub fn slots(&self) -> usize {
        self.params.slots()
    }

    /// `1 ⊗ ⋯ ⊗ 1 ⊗ v`.
    pub fn ground(&self) -> TensorVector {
        ground_vector(self.slots(), &self.ind.generator())
    }
}

impl ModuleOracle for TensorModule {
    type Basis = TensorBasis;

    fn label(&self) -> String {
        let factors: Vec<String> = self
            .params
            .factors
            .iter()
            .map(|f| format!("Omega({}, {}, {})", f.lambda(), f.alpha, f.beta))
            .collect();
        format!("{} (x) {}", factors.join(" (x) "), self.ind.label())
    }

    fn act_basis(&self, g: Generator, b: &TensorBasis) -> TensorVector {
        let mut out = TensorVector::zero();
        for (i, f) in self.params.factors.iter().enumerate() {
            for (e, c) in &omega_act_basis(g, f, b.exps[i]) {
                let mut exps = b.exps.clone();
                exps[i] = *e;
                out.add_term(
                    TensorBasis {
                        exps,
                        mono: b.mono.clone(),
                    },
                    c.clone(),
                );
            }
        }
        for (mono, c) in &self.ind.act_monomial(g, &b.mono) {
            out.add_term(
                TensorBasis {
                    exps: b.exps.clone(),
                    mono: mono.clone(),
                },
                c.clone(),
            );
        }
        out
    }

    fn random_vector(&self, rng: &mut dyn RngCore) -> TensorVector {
        let (max_exp, max_depth) = self.sample_bounds;
        let mut ind = self.ind.clone();
        ind.sample_depth = max_depth;
        let mut v = TensorVector::zero();
        while v.is_zero() {
            for _ in 0..rng.gen_range(1..=3) {
                let exps: Vec<u32> = (0..self.slots())
                    .map(|_| rng.gen_range(0..=max_exp))
                    .collect();
                for (mono, c) in &ind.random_vector(rng) {
                    v.add_term(
                        TensorBasis {
                            exps: exps.clone(),
                            mono: mono.clone(),
                        },
                        c.clone(),
                    );
                }
            }
        }
        v
    }

    fn central_character(&self) -> CentralCharacter {
        let hw = &self.params.hw;
        let beta_sum: Scalar = self.params.factors.iter().map(|f| f.beta.clone()).sum();
        CentralCharacter {
            i0: Some(&beta_sum + &hw.c0),
            c: [hw.c1.clone(), hw.c2.clone(), hw.c3.clone()],
        }
    }
}

/// Isomorphism test for two tensor products with distinct `λ` in each: equal
/// inducing data, equal factor counts and equal multisets of `(λ, α, β)`.
pub fn tensor_iso_check(a: &TensorParams, b: &TensorParams) -> bool {
    if a.hw != b.hw || a.slots() != b.slots() {
        return false;
    }
    let mut fa = a.factors.clone();
    let mut fb = b.factors.clone();
    fa.sort();
    fb.sort();
    fa == fb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::IndVector;

    fn hw() -> HighestWeightData {
        HighestWeightData::ints(1, 1, 0, 0).unwrap()
    }

    fn basis(exps: &[u32]) -> TensorBasis {
        TensorBasis {
            exps: exps.to_vec(),
            mono: PbwMonomial::one(),
        }
    }

    #[test]
    fn degree_order() {
        assert_eq!(deg_compare(&[1, 3], &[2, 1]), Ordering::Less);
        let v: TensorVector = [
            (basis(&[2, 1]), Scalar::from_int(1)),
            (basis(&[1, 3]), Scalar::from_int(4)),
        ]
        .into_iter()
        .collect();
        assert_eq!(deg(&v).unwrap(), vec![2, 1]);
        assert_eq!(
            deg(&ground_vector(3, &IndVector::basis(PbwMonomial::one()))).unwrap(),
            vec![0, 0, 0]
        );
        assert_eq!(deg(&TensorVector::zero()), Err(TensorError::ZeroVector));
    }

    #[test]
    fn scalar_action_on_ground() {
        let tp = TensorParams::new(vec![OmegaParams::ints(2, 0, 3).unwrap()], hw()).unwrap();
        let m = TensorModule::new(tp);
        let g = m.ground();
        for k in 1..6 {
            let expected = g.scaled(&Scalar::from_int(3 * (1 << k)));
            assert_eq!(m.act(Generator::I(k), &g), expected);
        }
        // I_k (∂ ⊗ v) = λ^k β (∂ - k) ⊗ v
        let d = TensorVector::basis(basis(&[1]));
        let out = m.act(Generator::I(3), &d);
        let expected: TensorVector = [
            (basis(&[1]), Scalar::from_int(24)),
            (basis(&[0]), Scalar::from_int(-72)),
        ]
        .into_iter()
        .collect();
        assert_eq!(out, expected);
    }

    #[test]
    fn l0_on_ground() {
        let tp = TensorParams::new(
            vec![
                OmegaParams::ints(1, 3, 0).unwrap(),
                OmegaParams::ints(2, 0, 5).unwrap(),
            ],
            hw(),
        )
        .unwrap();
        let m = TensorModule::new(tp);
        let expected: TensorVector = [
            (basis(&[1, 0]), Scalar::from_int(1)),
            (basis(&[0, 1]), Scalar::from_int(1)),
            (basis(&[0, 0]), Scalar::from_int(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(m.act(Generator::L(0), &m.ground()), expected);
    }

    #[test]
    fn params_validation() {
        let f = |l, a, b| OmegaParams::ints(l, a, b).unwrap();
        assert!(matches!(
            TensorParams::new(vec![f(1, 1, 0), f(1, 0, 2)], hw()),
            Err(TensorError::DegenerateParams(_))
        ));
        assert!(TensorParams::allow_repeated_lambda(vec![f(1, 1, 0), f(1, 0, 2)], hw()).is_ok());
        assert!(matches!(
            TensorParams::new(vec![f(1, 0, 0)], hw()),
            Err(TensorError::InvalidParams(_))
        ));
    }

    #[test]
    fn iso_examples() {
        let f = |l, a, b| OmegaParams::ints(l, a, b).unwrap();
        let a = TensorParams::new(vec![f(2, 1, 3), f(5, 7, 0)], hw()).unwrap();
        let b = TensorParams::new(vec![f(5, 7, 0), f(2, 1, 3)], hw()).unwrap();
        assert!(tensor_iso_check(&a, &a));
        assert!(tensor_iso_check(&a, &b));
        let c = TensorParams::new(vec![f(2, 1, 3)], hw()).unwrap();
        let d = TensorParams::new(vec![f(2, 1, 4)], hw()).unwrap();
        assert!(!tensor_iso_check(&c, &d));
    }
}
