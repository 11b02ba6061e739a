//! Separation of sums `Σ_{i,j} μ_i^m m^j x_{i,j}` and recovery of pure
//! exponential sums from consecutive samples.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::AnalysisError;
use crate::arith::{
    linear_solve, linear_solve_sparse, rational_roots, Matrix, Rational, RationalPoly, Scalar,
    SparseVec,
};

/// Components `(μ_i, maxdeg_i)` of an exponential-polynomial sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpSumSpec {
    components: Vec<(Scalar, u32)>,
}

impl ExpSumSpec {
    /// Requires nonzero, pairwise distinct `μ_i`.
    pub fn new(components: Vec<(Scalar, u32)>) -> Result<Self, AnalysisError> {
        for (i, (mu, _)) in components.iter().enumerate() {
            if mu.is_zero() {
                return Err(AnalysisError::DegenerateSpec("mu = 0".into()));
            }
            if components[..i].iter().any(|(nu, _)| nu == mu) {
                return Err(AnalysisError::DegenerateSpec(format!("mu = {mu} repeated")));
            }
        }
        Ok(ExpSumSpec { components })
    }

    pub fn components(&self) -> &[(Scalar, u32)] {
        &self.components
    }

    /// Unknowns `(i, j)` in solve order.
    fn unknowns(&self) -> Vec<(usize, u32)> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, &(_, d))| (0..=d).map(move |j| (i, j)))
            .collect()
    }

    fn row(&self, unknowns: &[(usize, u32)], m: i64) -> Vec<Scalar> {
        let mm = Scalar::from_int(m);
        unknowns
            .iter()
            .map(|&(i, j)| {
                let mu = self.components[i].0.pow(m).expect("mu is nonzero");
                &mu * &mm.pow(j as i64).expect("nonnegative exponent")
            })
            .collect()
    }
}

/// Solves `Σ_{i,j} μ_i^m m^j x_{i,j} = sample(m)` for the vectors `x_{i,j}`.
///
/// The first `Σ (maxdeg_i + 1)` samples determine the solution; any further
/// samples must agree with it.
pub fn vandermonde_extract<K: Ord + Clone>(
    samples: &[(i64, SparseVec<K>)],
    spec: &ExpSumSpec,
) -> Result<BTreeMap<(usize, u32), SparseVec<K>>, AnalysisError> {
    let unknowns = spec.unknowns();
    let n = unknowns.len();
    if samples.len() < n {
        return Err(AnalysisError::InsufficientSamples {
            needed: n,
            got: samples.len(),
        });
    }
    let distinct: BTreeSet<i64> = samples.iter().map(|(m, _)| *m).collect();
    if distinct.len() != samples.len() {
        return Err(AnalysisError::DuplicateSampleIndex);
    }
    let (square, extra) = samples.split_at(n);
    let a = Matrix::from_rows(
        square
            .iter()
            .map(|(m, _)| spec.row(&unknowns, *m))
            .collect(),
    );
    let rhs: Vec<SparseVec<K>> = square.iter().map(|(_, v)| v.clone()).collect();
    let x = linear_solve_sparse(&a, &rhs)?;
    for (m, v) in extra {
        let mut fitted = SparseVec::zero();
        for (c, xi) in spec.row(&unknowns, *m).iter().zip(&x) {
            fitted.add_scaled(c, xi);
        }
        if fitted != *v {
            return Err(AnalysisError::InconsistentSamples(*m));
        }
    }
    Ok(unknowns.into_iter().zip(x).collect())
}

/// Recovers `{(λ_i, w_i)}` from `s_k = Σ_i w_i λ_i^k`, `k = 0, 1, …`, with at
/// most `bound` terms and nonzero, distinct rational `λ_i`. Needs at least
/// `2 * bound` samples; all samples are checked against the result.
pub fn prony_recover(
    samples: &[Scalar],
    bound: usize,
) -> Result<Vec<(Rational, Scalar)>, AnalysisError> {
    if samples.len() < 2 * bound {
        return Err(AnalysisError::InsufficientSamples {
            needed: 2 * bound,
            got: samples.len(),
        });
    }
    let Some((order, coeffs)) = (0..=bound).find_map(|r| recurrence(samples, r).map(|c| (r, c)))
    else {
        return Err(AnalysisError::RecurrenceNotFound);
    };
    if order == 0 {
        return Ok(Vec::new());
    }
    // x^r + c_{r-1} x^{r-1} + ... + c_0
    let mut poly = Vec::with_capacity(order + 1);
    for c in &coeffs {
        match c.as_rational() {
            Some(q) => poly.push(q.clone()),
            None => return Err(AnalysisError::NonRationalRootsRemain),
        }
    }
    poly.push(Rational::one());
    let split = rational_roots(&RationalPoly::new(poly), true)?;
    let roots = split.roots;
    if roots.iter().any(Zero::is_zero) || roots.windows(2).any(|w| w[0] == w[1]) {
        return Err(AnalysisError::RecurrenceNotFound);
    }
    let spec = ExpSumSpec::new(roots.iter().map(|r| (Scalar::real(r.clone()), 0)).collect())?;
    let indexed: Vec<(i64, SparseVec<u8>)> = samples
        .iter()
        .enumerate()
        .map(|(k, s)| (k as i64, SparseVec::term(0, s.clone())))
        .collect();
    let weights = vandermonde_extract(&indexed, &spec)?;
    Ok(roots
        .into_iter()
        .enumerate()
        .map(|(i, r)| (r, weights[&(i, 0)].coeff(&0)))
        .collect())
}

/// Coefficients `c_0..c_{r-1}` of a recurrence `s_{t+r} + Σ_j c_j s_{t+j} = 0`
/// valid on all samples, if the order-`r` Hankel system determines one.
fn recurrence(s: &[Scalar], r: usize) -> Option<Vec<Scalar>> {
    let coeffs = if r == 0 {
        Vec::new()
    } else {
        if s.len() < 2 * r {
            return None;
        }
        let h = Matrix::from_fn(r, r, |i, j| s[i + j].clone());
        let rhs: Vec<Vec<Scalar>> = (0..r).map(|i| vec![-&s[i + r]]).collect();
        linear_solve(&h, &rhs)
            .ok()?
            .into_iter()
            .map(|mut v| v.remove(0))
            .collect()
    };
    let fits = (0..s.len().saturating_sub(r)).all(|t| {
        let mut acc = s[t + r].clone();
        for (j, c) in coeffs.iter().enumerate() {
            acc += &(c * &s[t + j]);
        }
        acc.is_zero()
    });
    fits.then_some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn two_exponentials() {
        let spec = ExpSumSpec::new(vec![(1.into(), 0), (2.into(), 0)]).unwrap();
        let v = |a: i64, b: i64| -> SparseVec<u8> {
            [(0, Scalar::from_int(a)), (1, Scalar::from_int(b))]
                .into_iter()
                .collect()
        };
        let out = vandermonde_extract(&[(1, v(1, 2)), (2, v(1, 4))], &spec).unwrap();
        assert_eq!(out[&(0, 0)], v(1, 0));
        assert_eq!(out[&(1, 0)], v(0, 1));
    }

    #[test]
    fn linear_term() {
        let spec = ExpSumSpec::new(vec![(1.into(), 1)]).unwrap();
        let v = SparseVec::term(0u8, Scalar::frac(3, 2));
        let samples: Vec<_> = (1..=3)
            .map(|m| (m, v.scaled(&Scalar::from_int(m))))
            .collect();
        let out = vandermonde_extract(&samples, &spec).unwrap();
        assert!(out[&(0, 0)].is_zero());
        assert_eq!(out[&(0, 1)], v);
    }

    #[test]
    fn inconsistent_extra_sample() {
        let spec = ExpSumSpec::new(vec![(1.into(), 0)]).unwrap();
        let one = SparseVec::term(0u8, Scalar::one());
        let two = SparseVec::term(0u8, Scalar::from_int(2));
        assert_eq!(
            vandermonde_extract(&[(0, one), (1, two)], &spec),
            Err(AnalysisError::InconsistentSamples(1))
        );
    }

    #[test]
    fn prony_examples() {
        let s: Vec<Scalar> = [8, 1, 17, 19]
            .iter()
            .map(|&x| Scalar::from_int(x))
            .collect();
        assert_eq!(
            prony_recover(&s, 2).unwrap(),
            vec![(q(-1), Scalar::from_int(5)), (q(2), Scalar::from_int(3))]
        );
        let s = vec![Scalar::from_int(7); 2];
        assert_eq!(
            prony_recover(&s, 1).unwrap(),
            vec![(q(1), Scalar::from_int(7))]
        );
        let fib: Vec<Scalar> = [1, 1, 2, 3, 5, 8]
            .iter()
            .map(|&x| Scalar::from_int(x))
            .collect();
        assert_eq!(
            prony_recover(&fib[..4], 2),
            Err(AnalysisError::NonRationalRootsRemain)
        );
    }

    #[test]
    fn prony_rejects_long_recurrence() {
        let s: Vec<Scalar> = [1, 2, 4, 8, 16, 33]
            .iter()
            .map(|&x| Scalar::from_int(x))
            .collect();
        assert_eq!(prony_recover(&s, 2), Err(AnalysisError::RecurrenceNotFound));
    }
}
