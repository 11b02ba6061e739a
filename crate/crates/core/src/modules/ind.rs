//! Highest-weight induced modules `Ind(M)` from a one-dimensional `M = Cv`.
//!
//! `M` is annihilated by `L_m, I_m` for `m >= 1`, while `L_0, I_0, C_1, C_2, C_3`
//! act by `h, c0, c1, c2, c3`. A basis of `Ind(M)` is given by PBW monomials in
//! negative modes, written with all `L` factors first and each block ordered by
//! non-increasing depth.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_traits::Zero;
use rand::{Rng, RngCore};

use super::{random_coeff, CentralCharacter, ModuleError, ModuleOracle};
use crate::algebra::{bracket_basis, Generator};
use crate::arith::{Scalar, SparseVec};

/// `L_{-l_1} ⋯ L_{-l_a} I_{-j_1} ⋯ I_{-j_b}` with `l` and `j` non-increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial {
    l_part: Vec<u32>,
    i_part: Vec<u32>,
}

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial::default()
    }

    /// Sorts both blocks. Factors within a block do not commute in general, so
    /// this is only a reordering of the description, not an identity in `U`.
    pub fn sorted(mut l_part: Vec<u32>, mut i_part: Vec<u32>) -> Self {
        assert!(
            l_part.iter().chain(&i_part).all(|&d| d > 0),
            "PBW factors have positive depth"
        );
        l_part.sort_unstable_by(|a, b| b.cmp(a));
        i_part.sort_unstable_by(|a, b| b.cmp(a));
        PbwMonomial { l_part, i_part }
    }

    pub fn l_part(&self) -> &[u32] {
        &self.l_part
    }

    pub fn i_part(&self) -> &[u32] {
        &self.i_part
    }

    pub fn is_one(&self) -> bool {
        self.l_part.is_empty() && self.i_part.is_empty()
    }

    pub fn depth(&self) -> u64 {
        self.l_part
            .iter()
            .chain(&self.i_part)
            .map(|&d| d as u64)
            .sum()
    }

    /// The factors as generators, left to right.
    pub fn word(&self) -> Vec<Generator> {
        let l = self.l_part.iter().map(|&d| Generator::L(-(d as i64)));
        let i = self.i_part.iter().map(|&d| Generator::I(-(d as i64)));
        l.chain(i).collect()
    }

    fn first(&self) -> Option<Generator> {
        if let Some(&d) = self.l_part.first() {
            Some(Generator::L(-(d as i64)))
        } else {
            self.i_part.first().map(|&d| Generator::I(-(d as i64)))
        }
    }

    fn tail(&self) -> PbwMonomial {
        let mut t = self.clone();
        if t.l_part.is_empty() {
            t.i_part.remove(0);
        } else {
            t.l_part.remove(0);
        }
        t
    }

    /// Places `g` in front; the caller guarantees the result stays ordered.
    fn prepend(&self, g: Generator) -> PbwMonomial {
        let mut t = self.clone();
        match g {
            Generator::L(m) => t.l_part.insert(0, (-m) as u32),
            Generator::I(m) => t.i_part.insert(0, (-m) as u32),
            Generator::C(_) => unreachable!("central factors are never stored"),
        }
        t
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .word()
            .iter()
            .map(|g| match g {
                Generator::L(m) => format!("L({m})"),
                Generator::I(m) => format!("I({m})"),
                Generator::C(j) => format!("C{j}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "[v]")
        } else {
            write!(f, "[{} | v]", parts.join(" "))
        }
    }
}

/// Ordering key of a negative-mode factor: `L` before `I`, deeper first.
fn rank(g: Generator) -> (bool, i64) {
    match g {
        Generator::L(m) => (true, -m),
        Generator::I(m) => (false, -m),
        Generator::C(_) => unreachable!(),
    }
}

/// Linear combination of PBW monomials applied to the highest-weight vector.
pub type IndVector = SparseVec<PbwMonomial>;

/// Scalars `(h, c0, c1, c2, c3)` of the inducing module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HighestWeightData {
    pub h: Scalar,
    pub c0: Scalar,
    pub c1: Scalar,
    pub c2: Scalar,
    pub c3: Scalar,
}

impl HighestWeightData {
    /// Requires `c3 = 0` and `c0 + (n-1) c2 != 0` for every nonzero integer `n`.
    pub fn new(
        h: Scalar,
        c0: Scalar,
        c1: Scalar,
        c2: Scalar,
        c3: Scalar,
    ) -> Result<Self, ModuleError> {
        if !c3.is_zero() {
            return Err(ModuleError::NonzeroC3);
        }
        let admissible = if c2.is_zero() {
            !c0.is_zero()
        } else {
            let ratio = c0.checked_div(&c2).expect("c2 is nonzero");
            match ratio.as_integer() {
                Some(n) => n == 1.into(),
                None => true,
            }
        };
        if !admissible {
            return Err(ModuleError::InadmissibleHighestWeight);
        }
        Ok(HighestWeightData { h, c0, c1, c2, c3 })
    }

    pub fn ints(h: i64, c0: i64, c1: i64, c2: i64) -> Result<Self, ModuleError> {
        Self::new(h.into(), c0.into(), c1.into(), c2.into(), Scalar::zero())
    }

    fn central(&self, j: u8) -> &Scalar {
        match j {
            1 => &self.c1,
            2 => &self.c2,
            _ => &self.c3,
        }
    }
}

type StraightenCache = HashMap<(Generator, PbwMonomial), IndVector>;

/// `Ind(M)` with a memoized straightening table.
pub struct IndModule {
    hw: HighestWeightData,
    /// Upper bound on the depth of sampled monomials.
    pub sample_depth: u32,
    cache: Mutex<StraightenCache>,
}

impl Clone for IndModule {
    fn clone(&self) -> Self {
        IndModule {
            hw: self.hw.clone(),
            sample_depth: self.sample_depth,
            cache: Mutex::new(self.cache.lock().expect("cache poisoned").clone()),
        }
    }
}

impl fmt::Debug for IndModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IndModule")
            .field("hw", &self.hw)
            .field("sample_depth", &self.sample_depth)
            .finish()
    }
}

impl IndModule {
    pub fn new(hw: HighestWeightData) -> Self {
        IndModule {
            hw,
            sample_depth: 4,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn hw(&self) -> &HighestWeightData {
        &self.hw
    }

    /// The vector `1 ⊗ v`.
    pub fn generator(&self) -> IndVector {
        IndVector::basis(PbwMonomial::one())
    }

    /// `g · (w ⊗ v)` for a PBW monomial `w`, straightened.
    pub fn act_monomial(&self, g: Generator, w: &PbwMonomial) -> IndVector {
        if let Generator::C(j) = g {
            return IndVector::term(w.clone(), self.hw.central(j).clone());
        }
        if g == Generator::I(0) {
            return IndVector::term(w.clone(), self.hw.c0.clone());
        }
        let Some(y) = w.first() else {
            return match g {
                Generator::L(0) => IndVector::term(w.clone(), self.hw.h.clone()),
                _ if g.mode() < 0 => IndVector::basis(w.prepend(g)),
                _ => IndVector::zero(),
            };
        };
        if g.mode() < 0 && rank(g) >= rank(y) {
            return IndVector::basis(w.prepend(g));
        }

        let key = (g, w.clone());
        if let Some(hit) = self.cache.lock().expect("cache poisoned").get(&key) {
            return hit.clone();
        }
        // g y t = y (g t) + [g, y] t
        let tail = w.tail();
        let inner = self.act_monomial(g, &tail);
        let mut out = IndVector::zero();
        for (m, c) in &inner {
            out.add_scaled(c, &self.act_monomial(y, m));
        }
        for (z, c) in &bracket_basis(g, y) {
            out.add_scaled(c, &self.act_monomial(*z, &tail));
        }
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(key, out.clone());
        out
    }

    /// The product `g_1 g_2 ⋯ g_k · v` in PBW normal form.
    pub fn word_vector(&self, word: &[Generator]) -> IndVector {
        let mut v = self.generator();
        for &g in word.iter().rev() {
            v = self.act(g, &v);
        }
        v
    }

    fn random_monomial(&self, rng: &mut dyn RngCore) -> PbwMonomial {
        let budget = rng.gen_range(0..=self.sample_depth);
        let mut left = budget;
        let (mut l, mut i) = (Vec::new(), Vec::new());
        while left > 0 {
            let d = rng.gen_range(1..=left);
            if rng.gen_bool(0.5) {
                l.push(d);
            } else {
                i.push(d);
            }
            left -= d;
        }
        PbwMonomial::sorted(l, i)
    }
}

impl ModuleOracle for IndModule {
    type Basis = PbwMonomial;

    fn label(&self) -> String {
        let hw = &self.hw;
        format!(
            "Ind(h={}, c0={}, c1={}, c2={}, c3={})",
            hw.h, hw.c0, hw.c1, hw.c2, hw.c3
        )
    }

    fn act_basis(&self, g: Generator, b: &PbwMonomial) -> IndVector {
        self.act_monomial(g, b)
    }

    fn random_vector(&self, rng: &mut dyn RngCore) -> IndVector {
        let mut v = IndVector::zero();
        while v.is_zero() {
            for _ in 0..rng.gen_range(1..=3) {
                let m = self.random_monomial(rng);
                v.add_term(m, random_coeff(rng));
            }
        }
        v
    }

    fn central_character(&self) -> CentralCharacter {
        CentralCharacter {
            i0: Some(self.hw.c0.clone()),
            c: [self.hw.c1.clone(), self.hw.c2.clone(), self.hw.c3.clone()],
        }
    }
}

/// `1 +` the largest monomial depth; `L_k` and `I_k` kill `v` for `k >=` this.
pub fn ind_depth(v: &IndVector) -> Result<u64, ModuleError> {
    v.keys()
        .map(PbwMonomial::depth)
        .max()
        .map(|d| d + 1)
        .ok_or(ModuleError::ZeroVector)
}
