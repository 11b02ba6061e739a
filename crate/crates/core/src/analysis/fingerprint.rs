//! Recovery of the parameters of `Ω(λ_1,α_1,β_1) ⊗ ⋯ ⊗ Ind(M)` from the action
//! on its ground vector `g = 1 ⊗ ⋯ ⊗ 1 ⊗ v`.
//!
//! For `k` beyond the depth of `v`, `I_k g = (Σ_i λ_i^k β_i) g` and the
//! coefficient of `g` in `L_k g` is `Σ_i λ_i^k k α_i`.

use std::collections::BTreeSet;

use num_traits::Zero;

use super::{prony_recover, vandermonde_extract, AnalysisError, ExpSumSpec};
use crate::algebra::Generator;
use crate::arith::{Rational, Scalar, SparseVec};
use crate::modules::{HighestWeightData, ModuleOracle, OmegaParams};
use crate::tensor::{TensorModule, TensorParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FingerprintOptions {
    /// First sampled mode; must exceed the depth of the ground vector.
    pub k_start: i64,
    /// Largest number of factors that can be recovered.
    pub bound: usize,
}

impl Default for FingerprintOptions {
    fn default() -> Self {
        FingerprintOptions {
            k_start: 1,
            bound: 4,
        }
    }
}

/// Recovered invariants: factors as `(λ, α, β)` sorted by `λ`, and the
/// scalars `h, c0, c1, c2, c3` on the ground vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub factors: Vec<(Rational, Scalar, Scalar)>,
    pub h: Scalar,
    pub c: [Scalar; 4],
}

impl Fingerprint {
    pub fn to_params(&self) -> Result<TensorParams, AnalysisError> {
        let invalid = |e: String| AnalysisError::InvalidRecovery(e);
        let factors = self
            .factors
            .iter()
            .map(|(l, a, b)| {
                OmegaParams::new(Scalar::real(l.clone()), a.clone(), b.clone())
                    .map_err(|e| invalid(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let [c0, c1, c2, c3] = self.c.clone();
        let hw = HighestWeightData::new(self.h.clone(), c0, c1, c2, c3)
            .map_err(|e| invalid(e.to_string()))?;
        TensorParams::new(factors, hw).map_err(|e| invalid(e.to_string()))
    }
}

/// Coefficient of `ground` in `sample`, read off at the first key of `ground`.
fn ground_coeff<K: Ord + Clone>(ground: &SparseVec<K>, sample: &SparseVec<K>) -> Scalar {
    let (key, c) = ground.iter().next().expect("ground vector is nonzero");
    sample
        .coeff(key)
        .checked_div(c)
        .expect("nonzero coefficient")
}

/// Recovers the invariants of a tensor product from black-box samples on a
/// ground vector. `module` is only used through its action.
pub fn fingerprint<M: ModuleOracle>(
    module: &M,
    ground: &SparseVec<M::Basis>,
    opts: FingerprintOptions,
) -> Result<Fingerprint, AnalysisError> {
    if ground.is_zero() {
        return Err(AnalysisError::ZeroVector);
    }
    let k0 = opts.k_start.max(1);
    let count = 2 * opts.bound + 2;
    let modes: Vec<i64> = (k0..k0 + count as i64).collect();

    let mut i_samples = Vec::with_capacity(count);
    for &k in &modes {
        let s = module.act(Generator::I(k), ground);
        let c = ground_coeff(ground, &s);
        if s != ground.scaled(&c) {
            return Err(AnalysisError::InvalidRecovery(format!(
                "I_{k} does not act by a scalar on the ground vector"
            )));
        }
        i_samples.push(c);
    }
    let with_beta: Vec<(Rational, Scalar)> = prony_recover(&i_samples, opts.bound)?
        .into_iter()
        .map(|(l, w)| {
            let beta = w
                .checked_div(&Scalar::real(l.clone()).pow(k0).expect("nonzero"))
                .expect("nonzero");
            (l, beta)
        })
        .collect();

    let l_samples: Vec<SparseVec<M::Basis>> = modes
        .iter()
        .map(|&k| module.act(Generator::L(k), ground))
        .collect();
    let l_coeffs: Vec<Scalar> = l_samples.iter().map(|s| ground_coeff(ground, s)).collect();

    // Off the ground support, L_k contributes λ_i^k ∂_i ⊗ w for every factor,
    // whatever α_i and β_i are.
    let off_ground: BTreeSet<&M::Basis> = l_samples
        .iter()
        .flat_map(|s| s.keys())
        .filter(|b| ground.get(b).is_none())
        .collect();
    let mut lambdas: BTreeSet<Rational> = with_beta.iter().map(|(l, _)| l.clone()).collect();
    for key in off_ground {
        let seq: Vec<Scalar> = l_samples.iter().map(|s| s.coeff(key)).collect();
        lambdas.extend(prony_recover(&seq, opts.bound)?.into_iter().map(|(l, _)| l));
    }
    let lambdas: Vec<Rational> = lambdas.into_iter().collect();
    let spec = ExpSumSpec::new(
        lambdas
            .iter()
            .map(|l| (Scalar::real(l.clone()), 1))
            .collect(),
    )?;
    let samples: Vec<(i64, SparseVec<u8>)> = modes
        .iter()
        .zip(&l_coeffs)
        .map(|(&k, a)| (k, SparseVec::term(0, a.clone())))
        .collect();
    let parts = vandermonde_extract(&samples, &spec)?;
    if lambdas
        .iter()
        .enumerate()
        .any(|(i, _)| !parts[&(i, 0)].is_zero())
    {
        return Err(AnalysisError::InvalidRecovery(
            "L-samples carry a k-independent ground component".into(),
        ));
    }

    let factors: Vec<(Rational, Scalar, Scalar)> = lambdas
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let alpha = parts[&(i, 1)].coeff(&0);
            let beta = with_beta
                .iter()
                .find(|(m, _)| m == l)
                .map_or_else(Scalar::zero, |(_, b)| b.clone());
            (l.clone(), alpha, beta)
        })
        .collect();

    let h = ground_coeff(ground, &module.act(Generator::L(0), ground));
    let beta_sum: Scalar = factors.iter().map(|(_, _, b)| b.clone()).sum();
    let i0 = ground_coeff(ground, &module.act(Generator::I(0), ground));
    let c = [
        &i0 - &beta_sum,
        ground_coeff(ground, &module.act(Generator::C(1), ground)),
        ground_coeff(ground, &module.act(Generator::C(2), ground)),
        ground_coeff(ground, &module.act(Generator::C(3), ground)),
    ];
    Ok(Fingerprint { factors, h, c })
}

/// [`fingerprint`] on the ground vector of a tensor product module.
pub fn fingerprint_tensor(
    module: &TensorModule,
    bound: usize,
) -> Result<Fingerprint, AnalysisError> {
    fingerprint(
        module,
        &module.ground(),
        FingerprintOptions { k_start: 1, bound },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::tensor_iso_check;

    #[test]
    fn recovers_two_factors() {
        let hw = HighestWeightData::ints(1, 1, 0, 0).unwrap();
        let tp = TensorParams::new(
            vec![
                OmegaParams::ints(1, 3, 0).unwrap(),
                OmegaParams::new(Scalar::frac(-1, 2), Scalar::frac(2, 3), 5.into()).unwrap(),
            ],
            hw,
        )
        .unwrap();
        let m = TensorModule::new(tp.clone());
        let fp = fingerprint_tensor(&m, 3).unwrap();
        assert_eq!(fp.factors.len(), 2);
        assert!(tensor_iso_check(&fp.to_params().unwrap(), &tp));
    }
}
