//! The modules `ℳ(V, Ω(λ,α,β)) = V ⊗ C[t]` built from a finite-dimensional
//! module `V` over the truncated algebra with generators `L̄_0..L̄_r` and
//! `Ī_d..Ī_{r+d}`:
//!
//! ```text
//! L_m (v ⊗ f) = v ⊗ λ^m (t - mα) f(t-m) + Σ_i m^{i+1}/(i+1)! L̄_i v ⊗ λ^m f(t-m)
//! I_m (v ⊗ f) = Σ_i m^{i+d}/(i+d)! Ī_{i+d} v ⊗ λ^m β f(t-m)
//! ```
//!
//! with `0^0 = 1`.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, RngCore};

use super::omega::{shifted_power, times_linear, OmegaParams, OmegaVector};
use super::{random_coeff, CentralCharacter, ModuleError, ModuleOracle};
use crate::algebra::Generator;
use crate::arith::{linear_solve, Matrix, Scalar, SparseVec};
use crate::report::{Check, Report};

/// Images of `L̄_0..L̄_r` and `Ī_d..Ī_{r+d}` as `dim × dim` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HBarModuleData {
    pub r: u32,
    pub d: u32,
    pub dim: usize,
    /// `l_mats[i]` is `L̄_i`.
    pub l_mats: Vec<Matrix>,
    /// `i_mats[i]` is `Ī_{i+d}`.
    pub i_mats: Vec<Matrix>,
}

impl HBarModuleData {
    /// `L̄_i`, or `None` beyond the truncation.
    pub fn lbar(&self, i: u32) -> Option<&Matrix> {
        self.l_mats.get(i as usize)
    }

    /// `Ī_j`, or `None` outside `d..=r+d`.
    pub fn ibar(&self, j: u32) -> Option<&Matrix> {
        j.checked_sub(self.d)
            .and_then(|i| self.i_mats.get(i as usize))
    }

    /// Largest `i` with `Ī_{i+d} != 0`.
    pub fn r_prime(&self) -> Option<u32> {
        self.i_mats
            .iter()
            .rposition(|m| !m.is_zero())
            .map(|i| i as u32)
    }

    /// One-dimensional `V` with `L̄_0 = σ`, `Ī_0 = τ` (`r = d = 0`).
    pub fn scalar(sigma: Scalar, tau: Scalar) -> Self {
        HBarModuleData {
            r: 0,
            d: 0,
            dim: 1,
            l_mats: vec![Matrix::from_rows(vec![vec![sigma]])],
            i_mats: vec![Matrix::from_rows(vec![vec![tau]])],
        }
    }

    /// A random valid module of dimension `dim <= r + 1`.
    ///
    /// Built on `C[x]/(x^dim)` with `L̄_i = x^{i+1} d/dx + (c(i+1) + c') x^i`
    /// and `Ī_j = τ x^j`, then conjugated by a random unitriangular matrix.
    pub fn random(rng: &mut dyn RngCore, r: u32, d: u32, dim: usize) -> Self {
        assert!(dim >= 1 && dim <= r as usize + 1, "need 1 <= dim <= r + 1");
        assert!(d <= 1, "d is 0 or 1");
        let c = random_small(rng);
        let c_shift = random_small(rng);
        let tau = random_small(rng);
        let l_mats: Vec<Matrix> = (0..=r)
            .map(|i| {
                let a = &(&c * &Scalar::from_int(i as i64 + 1)) + &c_shift;
                Matrix::from_fn(dim, dim, |row, col| {
                    if row == col + i as usize {
                        &Scalar::from_int(col as i64) + &a
                    } else {
                        Scalar::zero()
                    }
                })
            })
            .collect();
        let i_mats: Vec<Matrix> = (d..=r + d)
            .map(|j| {
                Matrix::from_fn(dim, dim, |row, col| {
                    if row == col + j as usize {
                        tau.clone()
                    } else {
                        Scalar::zero()
                    }
                })
            })
            .collect();

        let p = Matrix::from_fn(dim, dim, |row, col| match row.cmp(&col) {
            std::cmp::Ordering::Equal => Scalar::one(),
            std::cmp::Ordering::Less => random_small(rng),
            std::cmp::Ordering::Greater => Scalar::zero(),
        });
        let identity: Vec<Vec<Scalar>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| Scalar::from_int((i == j) as i64))
                    .collect()
            })
            .collect();
        let cols = linear_solve(&p, &identity).expect("unitriangular matrices are invertible");
        // linear_solve returns the rows of P^{-1}.
        let p_inv = Matrix::from_rows(cols);
        let conj = |m: &Matrix| p.mul(m).mul(&p_inv);
        HBarModuleData {
            r,
            d,
            dim,
            l_mats: l_mats.iter().map(conj).collect(),
            i_mats: i_mats.iter().map(conj).collect(),
        }
    }
}

fn random_small(rng: &mut dyn RngCore) -> Scalar {
    Scalar::frac(rng.gen_range(-4..=4), rng.gen_range(1..=2))
}

/// Checks every truncated commutation relation; one check per relation family.
pub fn hbar_validate(v: &HBarModuleData) -> Report {
    let mut report = Report::new();
    let shape_ok = v.d <= 1
        && v.dim >= 1
        && v.l_mats.len() == v.r as usize + 1
        && v.i_mats.len() == v.r as usize + 1
        && v.l_mats
            .iter()
            .chain(&v.i_mats)
            .all(|m| m.rows() == v.dim && m.cols() == v.dim);
    report.push(Check::new(
        "shape",
        format!("r={}, d={}, dim={}", v.r, v.d, v.dim),
        "r+1 square matrices of each kind, d in {0,1}",
        format!(
            "{} L-matrices, {} I-matrices",
            v.l_mats.len(),
            v.i_mats.len()
        ),
        shape_ok,
    ));
    if !shape_ok {
        return report;
    }

    let zero = Matrix::zeros(v.dim, v.dim);
    let mut failures = [Vec::new(), Vec::new(), Vec::new()];
    for i in 0..=v.r {
        for j in 0..=v.r {
            let lhs = v.lbar(i).unwrap().commutator(v.lbar(j).unwrap());
            let rhs = v.lbar(i + j).map_or(zero.clone(), |m| {
                m.scale(&Scalar::from_int(j as i64 - i as i64))
            });
            if lhs != rhs {
                failures[0].push(format!("[L{i},L{j}]"));
            }
        }
        for j in v.d..=v.r + v.d {
            let lhs = v.lbar(i).unwrap().commutator(v.ibar(j).unwrap());
            let rhs = v
                .ibar(i + j)
                .map_or(zero.clone(), |m| m.scale(&Scalar::from_int(j as i64)));
            if lhs != rhs {
                failures[1].push(format!("[L{i},I{j}]"));
            }
        }
    }
    for i in v.d..=v.r + v.d {
        for j in v.d..=v.r + v.d {
            if !v.ibar(i).unwrap().commutator(v.ibar(j).unwrap()).is_zero() {
                failures[2].push(format!("[I{i},I{j}]"));
            }
        }
    }
    let names = ["L-L relations", "L-I relations", "I-I relations"];
    for (name, failed) in names.iter().zip(&failures) {
        if let Some(first) = failed.first() {
            report.counterexample(format!("{first} violates the truncated relation"));
        }
        report.push(Check::new(
            *name,
            format!("r={}, d={}", v.r, v.d),
            "all hold",
            if failed.is_empty() {
                "all hold".to_string()
            } else {
                format!("failing: {}", failed.join(", "))
            },
            failed.is_empty(),
        ));
    }
    report
}

/// Basis vector `e_index ⊗ t^power`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MVBasis {
    pub index: usize,
    pub power: u32,
}

impl fmt::Display for MVBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}*t^{}", self.index, self.power)
    }
}

#[derive(Clone, Debug)]
pub struct MVModule {
    pub v: HBarModuleData,
    pub params: OmegaParams,
}

impl MVModule {
    pub fn new(v: HBarModuleData, params: OmegaParams) -> Result<Self, ModuleError> {
        let report = hbar_validate(&v);
        if !report.passed() {
            let reason = report
                .counterexample
                .unwrap_or_else(|| "malformed matrices".to_string());
            return Err(ModuleError::InvalidHBarModule(reason));
        }
        Ok(MVModule { v, params })
    }

    /// `Σ_i m^{i+offset}/(i+offset)! M_i`, with `0^0 = 1`.
    fn weighted_sum(&self, m: i64, mats: &[Matrix], offset: u32) -> Matrix {
        let mut out = Matrix::zeros(self.v.dim, self.v.dim);
        let mut fact = Scalar::one();
        for e in 1..=offset {
            fact = &fact * &Scalar::from_int(e as i64);
        }
        for (i, mat) in mats.iter().enumerate() {
            let e = i as u32 + offset;
            if e > 0 {
                fact = &fact * &Scalar::from_int(e as i64);
            }
            let mpow = Scalar::from_int(m)
                .pow(e as i64)
                .expect("nonnegative exponent");
            let w = mpow.checked_div(&fact).expect("factorial is nonzero");
            if !w.is_zero() {
                out = out.add(&mat.scale(&w));
            }
        }
        out
    }

    fn tensor(&self, index: usize, mat: &Matrix, poly: &OmegaVector) -> SparseVec<MVBasis> {
        let mut out = SparseVec::zero();
        for row in 0..self.v.dim {
            let entry = &mat[(row, index)];
            if entry.is_zero() {
                continue;
            }
            for (p, c) in poly {
                out.add_term(
                    MVBasis {
                        index: row,
                        power: *p,
                    },
                    entry * c,
                );
            }
        }
        out
    }
}

impl ModuleOracle for MVModule {
    type Basis = MVBasis;

    fn label(&self) -> String {
        format!(
            "M(V[dim={}, r={}, d={}], Omega(lambda={}, alpha={}, beta={}))",
            self.v.dim,
            self.v.r,
            self.v.d,
            self.params.lambda(),
            self.params.alpha,
            self.params.beta
        )
    }

    fn act_basis(&self, g: Generator, b: &MVBasis) -> SparseVec<MVBasis> {
        let (m, is_l) = match g {
            Generator::C(_) => return SparseVec::zero(),
            Generator::L(m) => (m, true),
            Generator::I(m) => (m, false),
        };
        let lm = self.params.lambda().pow(m).expect("lambda is nonzero");
        let shifted = shifted_power(&Scalar::from_int(m), b.power).scaled(&lm);
        if is_l {
            let mut out = SparseVec::zero();
            let shift = -(&Scalar::from_int(m) * &self.params.alpha);
            for (p, c) in &times_linear(&shifted, &shift) {
                out.add_term(
                    MVBasis {
                        index: b.index,
                        power: *p,
                    },
                    c.clone(),
                );
            }
            let a = self.weighted_sum(m, &self.v.l_mats, 1);
            out.add_assign(&self.tensor(b.index, &a, &shifted));
            out
        } else {
            let bm = self.weighted_sum(m, &self.v.i_mats, self.v.d);
            self.tensor(b.index, &bm, &shifted.scaled(&self.params.beta))
        }
    }

    fn random_vector(&self, rng: &mut dyn RngCore) -> SparseVec<MVBasis> {
        let mut v = SparseVec::zero();
        while v.is_zero() {
            for _ in 0..rng.gen_range(1..=3) {
                let b = MVBasis {
                    index: rng.gen_range(0..self.v.dim),
                    power: rng.gen_range(0..=3),
                };
                v.add_term(b, random_coeff(rng));
            }
        }
        v
    }

    fn central_character(&self) -> CentralCharacter {
        // I_0 acts by β Ī_0, a scalar only when V is one-dimensional or d = 1.
        let i0 = if self.v.d == 1 {
            Some(Scalar::zero())
        } else if self.v.dim == 1 {
            Some(&self.v.i_mats[0][(0, 0)] * &self.params.beta)
        } else {
            None
        };
        CentralCharacter::trivial_c(i0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn e12() -> Matrix {
        Matrix::from_rows(vec![vec![0.into(), 1.into()], vec![0.into(), 0.into()]])
    }

    fn diag(a: i64, b: i64) -> Matrix {
        Matrix::from_rows(vec![vec![a.into(), 0.into()], vec![0.into(), b.into()]])
    }

    fn two_dim(l0: Matrix) -> HBarModuleData {
        HBarModuleData {
            r: 1,
            d: 0,
            dim: 2,
            l_mats: vec![l0, e12()],
            i_mats: vec![Matrix::zeros(2, 2), Matrix::zeros(2, 2)],
        }
    }

    #[test]
    fn validation_examples() {
        assert!(hbar_validate(&HBarModuleData::scalar(Scalar::frac(2, 3), 5.into())).passed());
        assert!(hbar_validate(&two_dim(diag(1, 0))).passed());
        let bad = hbar_validate(&two_dim(diag(0, 1)));
        assert!(!bad.passed());
        assert!(bad.counterexample.unwrap().contains("[L0,L1]"));
    }

    #[test]
    fn random_modules_are_valid() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for r in 0..=2 {
            for d in 0..=1 {
                for dim in 1..=(r as usize + 1).min(3) {
                    let v = HBarModuleData::random(&mut rng, r, d, dim);
                    assert!(hbar_validate(&v).passed(), "r={r} d={d} dim={dim}");
                }
            }
        }
    }

    #[test]
    fn scalar_v_actions() {
        let sigma = Scalar::frac(2, 3);
        let tau = Scalar::from_int(5);
        let alpha = Scalar::frac(1, 2);
        let beta = Scalar::from_int(3);
        let params = OmegaParams::new(1.into(), alpha.clone(), beta.clone()).unwrap();
        let m = MVModule::new(HBarModuleData::scalar(sigma.clone(), tau.clone()), params).unwrap();
        let one = SparseVec::basis(MVBasis { index: 0, power: 0 });
        // L_1 (v ⊗ 1) = v ⊗ (t - α) + σ v ⊗ 1
        let expected: SparseVec<MVBasis> = [
            (MVBasis { index: 0, power: 1 }, Scalar::one()),
            (MVBasis { index: 0, power: 0 }, &sigma - &alpha),
        ]
        .into_iter()
        .collect();
        assert_eq!(m.act(Generator::L(1), &one), expected);
        let f = SparseVec::basis(MVBasis { index: 0, power: 2 });
        assert_eq!(m.act(Generator::I(0), &f), f.scaled(&(&tau * &beta)));
        assert!(m.act(Generator::C(1), &f).is_zero());
    }

    #[test]
    fn r_prime() {
        let mut v = HBarModuleData::scalar(1.into(), 0.into());
        assert_eq!(v.r_prime(), None);
        v.i_mats[0] = Matrix::from_rows(vec![vec![2.into()]]);
        assert_eq!(v.r_prime(), Some(0));
    }
}
