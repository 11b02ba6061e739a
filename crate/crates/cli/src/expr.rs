//! Text forms of scalars, generators and module vectors.
//!
//! Every printer emits a canonical form that its parser reads back exactly.

use std::collections::BTreeSet;
use std::fmt;

use hv_core::modules::{
    Degree2Basis, DegreeNBasis, HighestWeightData, IndModule, IndVector, LaurentVector, MVBasis,
    OmegaVector, PbwMonomial,
};
use hv_core::tensor::{TensorBasis, TensorVector};
use hv_core::{Generator, Rational, Scalar, SparseVec};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: expected one of {}", fmt_expected(.expected))]
pub struct ParseError {
    /// Byte offset of the furthest point the parser reached.
    pub position: usize,
    pub expected: BTreeSet<String>,
}

fn fmt_expected(set: &BTreeSet<String>) -> String {
    set.iter()
        .map(|s| format!("`{s}`"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Which grammar to parse with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Context {
    Scalar,
    Generator,
    /// Polynomials in `d`.
    Omega,
    /// Laurent polynomials in `t`.
    Laurent,
    /// `u(t) + w(t)*d`.
    Degree2,
    /// Sums of `t^r*D^m` with `m < n`.
    DegreeN(u32),
    /// Sums of `e<i>*t^p` with `i < dim`.
    MV(usize),
    Ind,
    /// Sums of `d1^a*d2^b (x) [..]` over the given number of slots.
    Tensor(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(Scalar),
    Generator(Generator),
    Omega(OmegaVector),
    Laurent(LaurentVector),
    Degree2(SparseVec<Degree2Basis>),
    DegreeN(SparseVec<DegreeNBasis>),
    MV(SparseVec<MVBasis>),
    Ind(IndVector),
    Tensor(TensorVector),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scalar(s) => write!(f, "{s}"),
            Expr::Generator(g) => write!(f, "{g}"),
            Expr::Omega(v) => f.write_str(&print_omega(v)),
            Expr::Laurent(v) => f.write_str(&print_laurent(v)),
            Expr::Degree2(v) => f.write_str(&print_degree2(v)),
            Expr::DegreeN(v) => f.write_str(&print_degree_n(v)),
            Expr::MV(v) => f.write_str(&print_mv(v)),
            Expr::Ind(v) => f.write_str(&print_ind(v)),
            Expr::Tensor(v) => f.write_str(&print_tensor(v)),
        }
    }
}

pub fn parse_expr(text: &str, context: Context) -> Result<Expr, ParseError> {
    Ok(match context {
        Context::Scalar => Expr::Scalar(parse_scalar(text)?),
        Context::Generator => Expr::Generator(parse_generator(text)?),
        Context::Omega => Expr::Omega(parse_omega(text)?),
        Context::Laurent => Expr::Laurent(parse_laurent(text)?),
        Context::Degree2 => Expr::Degree2(parse_degree2(text)?),
        Context::DegreeN(n) => Expr::DegreeN(parse_degree_n(text, n)?),
        Context::MV(dim) => Expr::MV(parse_mv(text, dim)?),
        Context::Ind => Expr::Ind(parse_ind(text)?),
        Context::Tensor(slots) => Expr::Tensor(parse_tensor(text, slots)?),
    })
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    furthest: usize,
    expected: BTreeSet<String>,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src,
            pos: 0,
            furthest: 0,
            expected: BTreeSet::new(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn rest(&mut self) -> &'a str {
        self.skip_ws();
        &self.src[self.pos..]
    }

    fn note(&mut self, what: &str) {
        if self.pos > self.furthest {
            self.furthest = self.pos;
            self.expected.clear();
        }
        if self.pos == self.furthest {
            self.expected.insert(what.to_string());
        }
    }

    fn peek(&mut self, tok: &str) -> bool {
        self.rest().starts_with(tok)
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.peek(tok) {
            self.pos += tok.len();
            true
        } else {
            self.note(tok);
            false
        }
    }

    fn error(&self) -> ParseError {
        ParseError {
            position: self.furthest,
            expected: self.expected.clone(),
        }
    }

    fn fail<T>(&mut self, what: &str) -> Result<T, ParseError> {
        self.note(what);
        Err(self.error())
    }

    fn expect(&mut self, tok: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error())
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        if self.rest().is_empty() {
            Ok(())
        } else {
            self.fail("end of input")
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let rest = self.rest();
        let n = rest.bytes().take_while(u8::is_ascii_digit).count();
        if n == 0 {
            self.note("integer");
            return None;
        }
        self.pos += n;
        Some(rest[..n].parse().expect("ascii digits"))
    }

    fn uint(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.digits().and_then(|d| u32::try_from(d).ok()) {
            Some(v) => Ok(v),
            None => {
                self.pos = start;
                self.fail("integer")
            }
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let neg = self.eat("-");
        match self.digits().and_then(|d| i64::try_from(d).ok()) {
            Some(v) => Ok(if neg { -v } else { v }),
            None => {
                self.pos = start;
                self.fail("integer")
            }
        }
    }

    /// `a` or `a/b` with `b != 0`.
    fn unsigned_rational(&mut self) -> Result<Option<Rational>, ParseError> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        if !self.eat("/") {
            return Ok(Some(Rational::from_integer(num)));
        }
        match self.digits() {
            Some(den) if !den.is_zero() => Ok(Some(Rational::new(num, den))),
            Some(_) => self.fail("nonzero denominator"),
            None => Err(self.error()),
        }
    }

    /// One signed real or imaginary part: `[-]a/b`, `[-]a/b i`, `[-]i`.
    fn scalar_part(&mut self, require_sign: bool) -> Result<Option<(Rational, bool)>, ParseError> {
        let start = self.pos;
        let negative = if self.eat("-") {
            true
        } else {
            let plus = self.eat("+");
            if require_sign && !plus {
                return Ok(None);
            }
            false
        };
        let value = self.unsigned_rational()?;
        let imaginary = self.eat("i");
        let value = match (value, imaginary) {
            (Some(v), _) => v,
            (None, true) => Rational::one(),
            (None, false) => {
                if require_sign {
                    self.pos = start;
                    return Ok(None);
                }
                return self.fail("scalar");
            }
        };
        Ok(Some((if negative { -value } else { value }, imaginary)))
    }

    fn scalar(&mut self) -> Result<Scalar, ParseError> {
        let (first, first_im) = self.scalar_part(false)?.expect("required part");
        if first_im {
            return Ok(Scalar::new(Rational::zero(), first));
        }
        let save = self.pos;
        match self.scalar_part(true)? {
            Some((im, true)) => Ok(Scalar::new(first, im)),
            Some((_, false)) => {
                self.pos = save;
                self.fail("i")
            }
            None => Ok(Scalar::real(first)),
        }
    }

    /// A term coefficient: an unsigned rational, or a parenthesized scalar.
    fn coefficient(&mut self) -> Result<Option<Scalar>, ParseError> {
        if self.peek("(") && !self.peek("(x)") {
            self.expect("(")?;
            let s = self.scalar()?;
            self.expect(")")?;
            return Ok(Some(s));
        }
        self.note("(");
        Ok(self.unsigned_rational()?.map(Scalar::real))
    }
}

pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let mut c = Cursor::new(text);
    let s = c.scalar()?;
    c.end()?;
    Ok(s)
}

pub fn parse_generator(text: &str) -> Result<Generator, ParseError> {
    let mut c = Cursor::new(text);
    let g = if c.eat("L") {
        c.expect("[")?;
        let m = c.int()?;
        c.expect("]")?;
        Generator::L(m)
    } else if c.eat("I") {
        c.expect("[")?;
        let m = c.int()?;
        c.expect("]")?;
        Generator::I(m)
    } else if c.eat("C") {
        c.skip_ws();
        let at = c.pos;
        match c.uint()? {
            j @ 1..=3 => Generator::c(j as u8),
            _ => {
                c.pos = at;
                return c.fail("1, 2 or 3");
            }
        }
    } else {
        return Err(c.error());
    };
    c.end()?;
    Ok(g)
}

/// How a family reads one basis atom.
trait Atoms {
    type Key: Ord + Clone;

    /// Parses an atom at the cursor, or returns `None` without consuming input.
    fn atom(&self, c: &mut Cursor) -> Result<Option<SparseVec<Self::Key>>, ParseError>;

    /// The vector denoted by a bare coefficient `c` (with no `*atom`).
    fn bare(&self, c: &mut Cursor) -> Result<SparseVec<Self::Key>, ParseError>;
}

fn parse_sum<A: Atoms>(text: &str, family: &A) -> Result<SparseVec<A::Key>, ParseError> {
    let mut c = Cursor::new(text);
    if c.rest() == "0" {
        return Ok(SparseVec::zero());
    }
    let mut out = SparseVec::zero();
    let mut negative = c.eat("-");
    loop {
        let coeff = c.coefficient()?;
        let vector = match coeff {
            Some(_) if c.eat("*") => match family.atom(&mut c)? {
                Some(v) => v,
                None => return Err(c.error()),
            },
            Some(_) => family.bare(&mut c)?,
            None => match family.atom(&mut c)? {
                Some(v) => v,
                None => return Err(c.error()),
            },
        };
        let mut k = coeff.unwrap_or_else(Scalar::one);
        if negative {
            k = -k;
        }
        out.add_scaled(&k, &vector);
        if c.eat("+") {
            negative = false;
        } else if c.eat("-") {
            negative = true;
        } else {
            c.end()?;
            return Ok(out);
        }
    }
}

/// Prints `Σ c_k atom_k`; `atom` returns `None` for the unit atom.
fn print_sum<'a, K: Ord + 'a>(
    terms: impl Iterator<Item = (&'a K, &'a Scalar)>,
    atom: impl Fn(&K) -> Option<String>,
) -> String {
    let mut out = String::new();
    for (key, c) in terms {
        let first = out.is_empty();
        let (negative, magnitude) = match c.as_rational() {
            Some(r) if r.is_negative() => (true, Scalar::real(-r.clone())),
            _ => (false, c.clone()),
        };
        out.push_str(match (first, negative) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        });
        let shown = if magnitude.is_real() {
            magnitude.to_string()
        } else {
            format!("({magnitude})")
        };
        match atom(key) {
            None => out.push_str(&shown),
            Some(a) if magnitude.is_one() => out.push_str(&a),
            Some(a) => {
                out.push_str(&shown);
                out.push('*');
                out.push_str(&a);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn power(var: &str, e: impl Into<i64>) -> Option<String> {
    match e.into() {
        0 => None,
        1 => Some(var.to_string()),
        e => Some(format!("{var}^{e}")),
    }
}

fn unit_atom<K: Ord + Clone>(c: &mut Cursor, key: Option<K>) -> Result<SparseVec<K>, ParseError> {
    match key {
        Some(k) => Ok(SparseVec::basis(k)),
        None => c.fail("*"),
    }
}

struct OmegaAtoms;

impl Atoms for OmegaAtoms {
    type Key = u32;

    fn atom(&self, c: &mut Cursor) -> Result<Option<OmegaVector>, ParseError> {
        if !c.eat("d") {
            return Ok(None);
        }
        let e = if c.eat("^") { c.uint()? } else { 1 };
        Ok(Some(SparseVec::basis(e)))
    }

    fn bare(&self, c: &mut Cursor) -> Result<OmegaVector, ParseError> {
        unit_atom(c, Some(0))
    }
}

pub fn parse_omega(text: &str) -> Result<OmegaVector, ParseError> {
    parse_sum(text, &OmegaAtoms)
}

pub fn print_omega(v: &OmegaVector) -> String {
    print_sum(v.iter().rev(), |&e| power("d", e))
}

struct LaurentAtoms;

fn t_power(c: &mut Cursor) -> Result<Option<i64>, ParseError> {
    if !c.eat("t") {
        return Ok(None);
    }
    Ok(Some(if c.eat("^") { c.int()? } else { 1 }))
}

impl Atoms for LaurentAtoms {
    type Key = i64;

    fn atom(&self, c: &mut Cursor) -> Result<Option<LaurentVector>, ParseError> {
        Ok(t_power(c)?.map(SparseVec::basis))
    }

    fn bare(&self, c: &mut Cursor) -> Result<LaurentVector, ParseError> {
        unit_atom(c, Some(0))
    }
}

pub fn parse_laurent(text: &str) -> Result<LaurentVector, ParseError> {
    parse_sum(text, &LaurentAtoms)
}

pub fn print_laurent(v: &LaurentVector) -> String {
    print_sum(v.iter().rev(), |&e| power("t", e))
}

struct Degree2Atoms;

impl Atoms for Degree2Atoms {
    type Key = Degree2Basis;

    fn atom(&self, c: &mut Cursor) -> Result<Option<SparseVec<Degree2Basis>>, ParseError> {
        if c.eat("d") {
            return Ok(Some(SparseVec::basis(Degree2Basis::TDel(0))));
        }
        let Some(n) = t_power(c)? else {
            return Ok(None);
        };
        let key = if c.eat("*") {
            c.expect("d")?;
            Degree2Basis::TDel(n)
        } else {
            Degree2Basis::T(n)
        };
        Ok(Some(SparseVec::basis(key)))
    }

    fn bare(&self, c: &mut Cursor) -> Result<SparseVec<Degree2Basis>, ParseError> {
        unit_atom(c, Some(Degree2Basis::T(0)))
    }
}

pub fn parse_degree2(text: &str) -> Result<SparseVec<Degree2Basis>, ParseError> {
    parse_sum(text, &Degree2Atoms)
}

pub fn print_degree2(v: &SparseVec<Degree2Basis>) -> String {
    print_sum(v.iter(), |b| match *b {
        Degree2Basis::T(n) => power("t", n),
        Degree2Basis::TDel(n) => Some(match power("t", n) {
            Some(t) => format!("{t}*d"),
            None => "d".to_string(),
        }),
    })
}

struct DegreeNAtoms(u32);

impl DegreeNAtoms {
    fn deriv(&self, c: &mut Cursor) -> Result<u32, ParseError> {
        let m = if c.eat("^") { c.uint()? } else { 1 };
        if m >= self.0 {
            return c.fail(&format!("derivative order below {}", self.0));
        }
        Ok(m)
    }
}

impl Atoms for DegreeNAtoms {
    type Key = DegreeNBasis;

    fn atom(&self, c: &mut Cursor) -> Result<Option<SparseVec<DegreeNBasis>>, ParseError> {
        let (power, deriv) = if c.eat("D") {
            (0, self.deriv(c)?)
        } else if let Some(r) = t_power(c)? {
            let m = if c.eat("*") {
                c.expect("D")?;
                self.deriv(c)?
            } else {
                0
            };
            (r, m)
        } else {
            return Ok(None);
        };
        Ok(Some(SparseVec::basis(DegreeNBasis { power, deriv })))
    }

    fn bare(&self, c: &mut Cursor) -> Result<SparseVec<DegreeNBasis>, ParseError> {
        unit_atom(c, Some(DegreeNBasis { power: 0, deriv: 0 }))
    }
}

pub fn parse_degree_n(text: &str, n: u32) -> Result<SparseVec<DegreeNBasis>, ParseError> {
    parse_sum(text, &DegreeNAtoms(n.max(1)))
}

pub fn print_degree_n(v: &SparseVec<DegreeNBasis>) -> String {
    print_sum(v.iter(), |b| {
        let parts: Vec<String> = [power("t", b.power), power("D", b.deriv)]
            .into_iter()
            .flatten()
            .collect();
        (!parts.is_empty()).then(|| parts.join("*"))
    })
}

struct MVAtoms(usize);

impl Atoms for MVAtoms {
    type Key = MVBasis;

    fn atom(&self, c: &mut Cursor) -> Result<Option<SparseVec<MVBasis>>, ParseError> {
        if !c.eat("e") {
            return Ok(None);
        }
        let index = c.uint()? as usize;
        if index >= self.0 {
            return c.fail(&format!("basis index below {}", self.0));
        }
        let power = if c.eat("*") {
            c.expect("t")?;
            if c.eat("^") {
                c.uint()?
            } else {
                1
            }
        } else {
            0
        };
        Ok(Some(SparseVec::basis(MVBasis { index, power })))
    }

    fn bare(&self, c: &mut Cursor) -> Result<SparseVec<MVBasis>, ParseError> {
        unit_atom(c, None)
    }
}

pub fn parse_mv(text: &str, dim: usize) -> Result<SparseVec<MVBasis>, ParseError> {
    parse_sum(text, &MVAtoms(dim))
}

pub fn print_mv(v: &SparseVec<MVBasis>) -> String {
    print_sum(v.iter(), |b| {
        Some(match power("t", b.power) {
            Some(t) => format!("e{}*{t}", b.index),
            None => format!("e{}", b.index),
        })
    })
}

/// A bracketed PBW word applied to `v`, straightened into normal form. Only
/// negative modes occur, so the result does not depend on the highest weight.
fn pbw_word(c: &mut Cursor) -> Result<Option<IndVector>, ParseError> {
    if !c.eat("[") {
        return Ok(None);
    }
    let mut word = Vec::new();
    loop {
        if c.eat("v") {
            if !word.is_empty() {
                return c.fail("|");
            }
            break;
        }
        let make: fn(i64) -> Generator = if c.eat("L") {
            Generator::L
        } else if c.eat("I") {
            Generator::I
        } else if word.is_empty() {
            return Err(c.error());
        } else if c.eat("|") {
            c.expect("v")?;
            break;
        } else {
            return Err(c.error());
        };
        c.expect("(")?;
        let at = c.pos;
        let m = c.int()?;
        if m >= 0 {
            c.pos = at;
            return c.fail("negative mode");
        }
        c.expect(")")?;
        word.push(make(m));
    }
    c.expect("]")?;
    Ok(Some(straighten(&word)))
}

fn straighten(word: &[Generator]) -> IndVector {
    let canonical = word.windows(2).all(|w| rank(w[0]) >= rank(w[1]));
    if canonical {
        let depth = |g: &Generator| (-g.mode()) as u32;
        let l = word.iter().filter(|g| matches!(g, Generator::L(_))).map(depth);
        let i = word.iter().filter(|g| matches!(g, Generator::I(_))).map(depth);
        return IndVector::basis(PbwMonomial::sorted(l.collect(), i.collect()));
    }
    let hw = HighestWeightData::ints(0, 1, 0, 0).expect("admissible");
    IndModule::new(hw).word_vector(word)
}

fn rank(g: Generator) -> (bool, i64) {
    (matches!(g, Generator::L(_)), -g.mode())
}

struct IndAtoms;

impl Atoms for IndAtoms {
    type Key = PbwMonomial;

    fn atom(&self, c: &mut Cursor) -> Result<Option<IndVector>, ParseError> {
        pbw_word(c)
    }

    fn bare(&self, c: &mut Cursor) -> Result<IndVector, ParseError> {
        unit_atom(c, None)
    }
}

pub fn parse_ind(text: &str) -> Result<IndVector, ParseError> {
    parse_sum(text, &IndAtoms)
}

pub fn print_ind(v: &IndVector) -> String {
    print_sum(v.iter(), |m| Some(m.to_string()))
}

struct TensorAtoms(usize);

impl TensorAtoms {
    fn right(&self, c: &mut Cursor, exps: Vec<u32>) -> Result<TensorVector, ParseError> {
        c.expect("(x)")?;
        match pbw_word(c)? {
            Some(w) => Ok(w.map_keys(|mono| TensorBasis {
                exps: exps.clone(),
                mono: mono.clone(),
            })),
            None => Err(c.error()),
        }
    }
}

impl Atoms for TensorAtoms {
    type Key = TensorBasis;

    fn atom(&self, c: &mut Cursor) -> Result<Option<TensorVector>, ParseError> {
        let mut exps = vec![0u32; self.0];
        if c.eat("1") {
            return self.right(c, exps).map(Some);
        }
        if !c.peek("d") {
            c.note("d");
            return Ok(None);
        }
        loop {
            c.expect("d")?;
            let at = c.pos;
            let slot = c.uint()? as usize;
            if slot == 0 || slot > self.0 {
                c.pos = at;
                return c.fail(&format!("slot in 1..={}", self.0));
            }
            exps[slot - 1] += if c.eat("^") { c.uint()? } else { 1 };
            if !c.eat("*") {
                break;
            }
        }
        self.right(c, exps).map(Some)
    }

    fn bare(&self, c: &mut Cursor) -> Result<TensorVector, ParseError> {
        self.right(c, vec![0; self.0])
    }
}

pub fn parse_tensor(text: &str, slots: usize) -> Result<TensorVector, ParseError> {
    parse_sum(text, &TensorAtoms(slots))
}

pub fn print_tensor(v: &TensorVector) -> String {
    print_sum(v.iter(), |b| Some(b.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_literals() {
        assert_eq!(parse_generator("L[-3]").unwrap(), Generator::L(-3));
        assert_eq!(parse_generator(" C2 ").unwrap(), Generator::C(2));
        let v = parse_omega("3/2*d^2 - 1").unwrap();
        assert_eq!(v.coeff(&2), Scalar::frac(3, 2));
        assert_eq!(v.coeff(&0), Scalar::from_int(-1));
        assert_eq!(v.len(), 2);
        assert_eq!(print_omega(&v), "3/2*d^2 - 1");
        let t = parse_tensor("d1*d2 (x) [L(-1) | v]", 2).unwrap();
        assert_eq!(print_tensor(&t), "d1*d2 (x) [L(-1) | v]");
    }

    #[test]
    fn scalars() {
        for (text, canon) in [
            ("3/2", "3/2"),
            ("-7", "-7"),
            ("i", "i"),
            ("-i", "-i"),
            ("1/2 + 3/4 i", "1/2+3/4i"),
            ("1/2-1/4i", "1/2-1/4i"),
            ("2/3i", "2/3i"),
            ("4/2", "2"),
        ] {
            assert_eq!(parse_scalar(text).unwrap().to_string(), canon, "{text}");
        }
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("1+2").is_err());
    }

    #[test]
    fn pbw_words_are_straightened() {
        // L_{-1} L_{-2} v = L_{-2} L_{-1} v - L_{-3} v
        let v = parse_ind("[L(-1) L(-2) | v]").unwrap();
        assert_eq!(print_ind(&v), "[L(-2) L(-1) | v] - [L(-3) | v]");
        // I_{-1} L_{-2} v = L_{-2} I_{-1} v + I_{-3} v
        let v = parse_ind("[I(-1) L(-2) | v]").unwrap();
        assert_eq!(print_ind(&v), "[I(-3) | v] + [L(-2) I(-1) | v]");
    }

    #[test]
    fn errors_carry_position_and_expectations() {
        let e = parse_generator("L[x]").unwrap_err();
        assert_eq!(e.position, 2);
        assert!(e.expected.contains("integer"));
        let e = parse_omega("2*d + ").unwrap_err();
        assert_eq!(e.position, 6);
        assert!(e.expected.contains("d"));
        let e = parse_tensor("d3 (x) [v]", 2).unwrap_err();
        assert!(e.expected.contains("slot in 1..=2"));
        assert!(parse_ind("[L(1) | v]").is_err());
        assert!(parse_degree_n("D^2", 2).is_err());
    }

    #[test]
    fn family_forms() {
        let v = parse_laurent("t^-3 + 2*t - 5").unwrap();
        assert_eq!(print_laurent(&v), "2*t - 5 + t^-3");
        let v = parse_degree2("t^2 + (1+i)*t^-1*d - d").unwrap();
        assert_eq!(print_degree2(&v), "t^2 + (1+i)*t^-1*d - d");
        let v = parse_degree_n("t^2*D + 3 - D^2", 3).unwrap();
        assert_eq!(print_degree_n(&v), "3 - D^2 + t^2*D");
        let v = parse_mv("e0*t^2 - 1/2*e1 + e1*t", 2).unwrap();
        assert_eq!(print_mv(&v), "e0*t^2 - 1/2*e1 + e1*t");
        let v = parse_tensor("2*1 (x) [v] - 1 (x) [I(-2) | v]", 1).unwrap();
        assert_eq!(print_tensor(&v), "2*1 (x) [v] - 1 (x) [I(-2) | v]");
        assert_eq!(parse_omega("0").unwrap(), SparseVec::zero());
        assert_eq!(print_ind(&SparseVec::zero()), "0");
    }
}
