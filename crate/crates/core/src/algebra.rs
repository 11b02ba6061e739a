//! The twisted Heisenberg-Virasoro algebra.
//!
//! Basis: `L_m`, `I_m` (`m` an integer) and central `C_1, C_2, C_3`, with
//!
//! ```text
//! [L_m, L_n] = (n - m) L_{m+n} + δ_{m+n,0} (m^3 - m)/12 C_1
//! [L_m, I_n] = n I_{m+n} + δ_{m+n,0} (m^2 + m) C_2
//! [I_m, I_n] = n δ_{m+n,0} C_3
//! ```

use std::fmt;

use num_traits::One;
use rand::Rng;

use crate::arith::{Scalar, SparseVec};
use crate::report::{Check, Report};

/// A basis element. Modes are machine integers; every procedure in this crate
/// works with modes far below the `i64` range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    L(i64),
    I(i64),
    /// Central element `C_1`, `C_2` or `C_3`.
    C(u8),
}

impl Generator {
    pub fn c(j: u8) -> Generator {
        assert!((1..=3).contains(&j), "central index must be 1, 2 or 3");
        Generator::C(j)
    }

    pub fn mode(&self) -> i64 {
        match *self {
            Generator::L(m) | Generator::I(m) => m,
            Generator::C(_) => 0,
        }
    }

    pub fn is_central(&self) -> bool {
        matches!(self, Generator::C(_) | Generator::I(0))
    }

    /// All basis elements with `|mode| <= window`, central ones included.
    pub fn window(window: i64) -> Vec<Generator> {
        let mut out = Vec::new();
        for m in -window..=window {
            out.push(Generator::L(m));
        }
        for m in -window..=window {
            out.push(Generator::I(m));
        }
        out.extend([Generator::C(1), Generator::C(2), Generator::C(3)]);
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::L(m) => write!(f, "L[{m}]"),
            Generator::I(m) => write!(f, "I[{m}]"),
            Generator::C(j) => write!(f, "C{j}"),
        }
    }
}

/// A finite linear combination of basis elements.
pub type LieElement = SparseVec<Generator>;

impl From<Generator> for LieElement {
    fn from(g: Generator) -> Self {
        SparseVec::basis(g)
    }
}

/// Bracket of two basis elements.
pub fn bracket_basis(x: Generator, y: Generator) -> LieElement {
    use Generator::*;
    let mut out = LieElement::zero();
    match (x, y) {
        (C(_), _) | (_, C(_)) => {}
        (L(m), L(n)) => {
            out.add_term(L(m + n), Scalar::from_int(n - m));
            if m + n == 0 {
                out.add_term(C(1), Scalar::frac(m * m * m - m, 12));
            }
        }
        (L(m), I(n)) => {
            out.add_term(I(m + n), Scalar::from_int(n));
            if m + n == 0 {
                out.add_term(C(2), Scalar::from_int(m * m + m));
            }
        }
        (I(_), L(_)) => return bracket_basis(y, x).neg(),
        (I(m), I(n)) => {
            if m + n == 0 {
                out.add_term(C(3), Scalar::from_int(n));
            }
        }
    }
    out
}

/// Bilinear extension of [`bracket_basis`].
pub fn bracket(x: &LieElement, y: &LieElement) -> LieElement {
    let mut out = LieElement::zero();
    for (gx, cx) in x {
        for (gy, cy) in y {
            out.add_scaled(&(cx * cy), &bracket_basis(*gx, *gy));
        }
    }
    out
}

fn jacobiator(x: &LieElement, y: &LieElement, z: &LieElement) -> LieElement {
    let mut s = bracket(&bracket(x, y), z);
    s.add_assign(&bracket(&bracket(y, z), x));
    s.add_assign(&bracket(&bracket(z, x), y));
    s
}

fn describe(e: &LieElement) -> String {
    if e.is_zero() {
        return "0".into();
    }
    e.iter()
        .map(|(g, c)| {
            if c.is_one() {
                g.to_string()
            } else {
                format!("({c})*{g}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Random element with up to three terms, modes within `window`.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, window: i64) -> LieElement {
    let basis = Generator::window(window);
    let n = rng.gen_range(1..=3);
    (0..n)
        .map(|_| {
            let g = basis[rng.gen_range(0..basis.len())];
            let c = Scalar::frac(rng.gen_range(-9..=9), rng.gen_range(1..=4));
            (g, c)
        })
        .collect()
}

/// Exhaustive Jacobi identity and antisymmetry over basis triples with
/// `|mode| <= window`, centrality of `I_0` and `C_j`, and `trials` random
/// element triples.
pub fn jacobi_check<R: Rng + ?Sized>(window: i64, trials: usize, rng: &mut R) -> Report {
    let mut report = Report::new();
    let basis = Generator::window(window);

    let mut antisym_failures = 0usize;
    for &x in &basis {
        for &y in &basis {
            let s = bracket_basis(x, y).add(&bracket_basis(y, x));
            if !s.is_zero() {
                antisym_failures += 1;
                report.counterexample(format!("[{x},{y}] + [{y},{x}] = {}", describe(&s)));
            }
        }
    }
    report.push(Check::new(
        "antisymmetry",
        format!("all basis pairs, |mode| <= {window}"),
        "0 failures",
        format!(
            "{antisym_failures} failures of {}",
            basis.len() * basis.len()
        ),
        antisym_failures == 0,
    ));

    let mut jacobi_failures = 0usize;
    let lifted: Vec<LieElement> = basis.iter().map(|&g| g.into()).collect();
    for x in &lifted {
        for y in &lifted {
            let xy = bracket(x, y);
            for z in &lifted {
                let j = {
                    let mut s = bracket(&xy, z);
                    s.add_assign(&bracket(&bracket(y, z), x));
                    s.add_assign(&bracket(&bracket(z, x), y));
                    s
                };
                if !j.is_zero() {
                    jacobi_failures += 1;
                    report.counterexample(format!(
                        "Jacobi({}, {}, {}) = {}",
                        describe(x),
                        describe(y),
                        describe(z),
                        describe(&j)
                    ));
                }
            }
        }
    }
    let triples = basis.len().pow(3);
    report.push(Check::new(
        "jacobi-exhaustive",
        format!("all basis triples, |mode| <= {window}"),
        "0 failures",
        format!("{jacobi_failures} failures of {triples}"),
        jacobi_failures == 0,
    ));

    let mut center_failures = 0usize;
    let central = [
        Generator::I(0),
        Generator::C(1),
        Generator::C(2),
        Generator::C(3),
    ];
    for &z in &central {
        for &x in &basis {
            let b = bracket_basis(x, z);
            if !b.is_zero() {
                center_failures += 1;
                report.counterexample(format!("[{x},{z}] = {}", describe(&b)));
            }
        }
    }
    report.push(Check::new(
        "center",
        format!("[x, z] for z in {{I[0], C1, C2, C3}}, |mode| <= {window}"),
        "0 failures",
        format!(
            "{center_failures} failures of {}",
            basis.len() * central.len()
        ),
        center_failures == 0,
    ));

    let mut random_failures = 0usize;
    for _ in 0..trials {
        let x = random_element(rng, window);
        let y = random_element(rng, window);
        let z = random_element(rng, window);
        let j = jacobiator(&x, &y, &z);
        let a = bracket(&x, &y).add(&bracket(&y, &x));
        if !j.is_zero() || !a.is_zero() {
            random_failures += 1;
            report.counterexample(format!(
                "x = {}, y = {}, z = {}: Jacobi = {}, [x,y]+[y,x] = {}",
                describe(&x),
                describe(&y),
                describe(&z),
                describe(&j),
                describe(&a)
            ));
        }
    }
    report.push(Check::new(
        "jacobi-random",
        format!("{trials} random element triples, |mode| <= {window}"),
        "0 failures",
        format!("{random_failures} failures"),
        random_failures == 0,
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use Generator::*;

    fn e(terms: &[(Generator, Scalar)]) -> LieElement {
        terms.iter().cloned().collect()
    }

    #[test]
    fn virasoro_bracket() {
        assert_eq!(bracket_basis(L(2), L(3)), e(&[(L(5), 1.into())]));
        assert_eq!(
            bracket_basis(L(3), L(-3)),
            e(&[(L(0), (-6).into()), (C(1), 2.into())])
        );
    }

    #[test]
    fn mixed_brackets() {
        assert_eq!(
            bracket_basis(L(2), I(-2)),
            e(&[(I(0), (-2).into()), (C(2), 6.into())])
        );
        assert_eq!(bracket_basis(I(4), I(-4)), e(&[(C(3), (-4).into())]));
        assert_eq!(bracket_basis(I(-4), I(4)), e(&[(C(3), 4.into())]));
    }

    #[test]
    fn hand_expanded_triples() {
        for (x, y, z) in [(L(1), L(2), L(3)), (L(2), L(-3), L(1)), (L(1), I(-1), I(0))] {
            assert!(jacobiator(&x.into(), &y.into(), &z.into()).is_zero());
        }
    }

    #[test]
    fn small_window_report_passes() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        let r = jacobi_check(3, 20, &mut rng);
        assert!(r.passed(), "{r:?}");
    }
}
