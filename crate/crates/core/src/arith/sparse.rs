//! Finitely supported coefficient maps over an ordered basis.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use num_traits::Zero;

use super::Scalar;

/// A vector `sum c_k e_k` with exact coefficients.
///
/// Zero coefficients are never stored, so two vectors are equal exactly when
/// their maps are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVec<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for SparseVec<K> {
    fn default() -> Self {
        SparseVec {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Scalar::from_int(1))
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut v = Self::zero();
        v.add_term(key, coeff);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn get(&self, key: &K) -> Option<&Scalar> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn first_key(&self) -> Option<&K> {
        self.terms.keys().next()
    }

    pub fn last_key(&self) -> Option<&K> {
        self.terms.keys().next_back()
    }

    /// Largest stored key strictly below `bound`.
    pub fn last_key_below(&self, bound: &K) -> Option<&K> {
        self.terms.range(..bound).next_back().map(|(k, _)| k)
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &SparseVec<K>) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn add_assign(&mut self, other: &SparseVec<K>) {
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &SparseVec<K>) {
        for (k, v) in other.iter() {
            self.add_term(k.clone(), -v);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> SparseVec<K> {
        if c.is_zero() {
            return Self::zero();
        }
        SparseVec {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), c * v)).collect(),
        }
    }

    pub fn add(&self, other: &SparseVec<K>) -> SparseVec<K> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &SparseVec<K>) -> SparseVec<K> {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn neg(&self) -> SparseVec<K> {
        SparseVec {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    /// Relabels the basis; colliding images are summed.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> SparseVec<K2> {
        let mut out = SparseVec::zero();
        for (k, v) in self.iter() {
            out.add_term(f(k), v.clone());
        }
        out
    }

    /// Extends a map on basis elements linearly.
    pub fn apply_linear<K2: Ord + Clone>(
        &self,
        mut f: impl FnMut(&K) -> SparseVec<K2>,
    ) -> SparseVec<K2> {
        let mut out = SparseVec::zero();
        for (k, c) in self.iter() {
            out.add_scaled(c, &f(k));
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<K, Scalar> {
        self.terms
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for SparseVec<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut v = SparseVec::zero();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

impl<'a, K: Ord> IntoIterator for &'a SparseVec<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for SparseVec<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeros_are_dropped() {
        let mut v = SparseVec::basis(3u32);
        v.add_term(3, Scalar::from_int(-1));
        assert!(v.is_zero());
        v.add_term(1, Scalar::zero());
        assert_eq!(v.len(), 0);
    }

    #[test]
    fn map_keys_merges() {
        let v: SparseVec<i64> = [(1, Scalar::from_int(2)), (-1, Scalar::from_int(3))]
            .into_iter()
            .collect();
        let w = v.map_keys(|k| k.abs());
        assert_eq!(w.coeff(&1), Scalar::from_int(5));
    }
}
