//! Binomial coefficients and univariate rational polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Rational};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    /// `prod (x - r)`.
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut p = RationalPoly::new(vec![Rational::one()]);
        for r in roots {
            let mut next = vec![Rational::zero(); p.coeffs.len() + 1];
            for (i, c) in p.coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            p = RationalPoly::new(next);
        }
        p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Divides by `(x - r)`, assuming `r` is a root.
    fn deflate(&self, r: &Rational) -> RationalPoly {
        let n = self.coeffs.len();
        let mut q = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for i in (1..n).rev() {
            carry = &self.coeffs[i] + &carry * r;
            q[i - 1] = carry.clone();
        }
        RationalPoly::new(q)
    }

    /// Integer coefficients with the same roots (denominators cleared, content removed).
    fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            ints
        } else {
            ints.into_iter().map(|c| c / &g).collect()
        }
    }
}

/// Rational roots found by [`rational_roots`], plus the factor left over.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSplit {
    /// Roots with multiplicity, ascending.
    pub roots: Vec<Rational>,
    /// Monic cofactor with no rational roots.
    pub residual: RationalPoly,
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All rational roots of a monic polynomial, by the rational-root candidate test.
///
/// With `require_full`, a residual factor of positive degree is an error.
/// Candidate enumeration factors the constant and leading coefficients by
/// trial division, so it is meant for polynomials with moderate coefficients.
pub fn rational_roots(p: &RationalPoly, require_full: bool) -> Result<RootSplit, ArithError> {
    match p.degree() {
        None | Some(0) => return Err(ArithError::InvalidPolynomial),
        _ if !p.is_monic() => return Err(ArithError::InvalidPolynomial),
        _ => {}
    }
    let mut roots = Vec::new();
    let mut rest = p.clone();
    while rest.coeffs.len() > 1 && rest.coeffs[0].is_zero() {
        roots.push(Rational::zero());
        rest = RationalPoly::new(rest.coeffs[1..].to_vec());
    }
    if rest.coeffs.len() > 1 {
        let ints = rest.primitive_integer_coeffs();
        let lead = ints.last().expect("nonzero polynomial").clone();
        let constant = ints[0].clone();
        let numerators = positive_divisors(&constant);
        let denominators = positive_divisors(&lead);
        let mut candidates: Vec<Rational> = Vec::new();
        for a in &numerators {
            for b in &denominators {
                let r = Rational::new(a.clone(), b.clone());
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
        candidates.sort();
        candidates.dedup();
        for c in candidates {
            while rest.coeffs.len() > 1 && rest.eval(&c).is_zero() {
                rest = rest.deflate(&c);
                roots.push(c.clone());
            }
        }
    }
    roots.sort();
    if require_full && rest.coeffs.len() > 1 {
        return Err(ArithError::NonRationalRootsRemain);
    }
    Ok(RootSplit {
        roots,
        residual: rest,
    })
}
