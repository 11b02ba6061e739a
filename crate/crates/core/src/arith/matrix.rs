//! Dense exact matrices, fraction-free elimination, and incremental span bases.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{ArithError, Scalar, SparseVec};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols)
                .filter(|&k| !self[(i, k)].is_zero())
                .map(|k| &self[(i, k)] * &rhs[(k, j)])
                .sum()
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| c * &self[(i, j)])
    }

    /// `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Exact rank via fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut work: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        bareiss_forward(&mut work, self.cols)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }
}

/// Bareiss forward elimination on the first `pivot_cols` columns of `rows`.
/// Rows are permuted in place so that the pivots sit on the leading diagonal
/// positions; returns the number of pivots found.
fn bareiss_forward(rows: &mut [Vec<Scalar>], pivot_cols: usize) -> usize {
    let n = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut prev = Scalar::one();
    let mut rank = 0;
    for col in 0..pivot_cols {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        let prev_inv = prev.inv().expect("previous pivot is nonzero");
        for r in rank + 1..n {
            let factor = rows[r][col].clone();
            for j in col..width {
                let updated = &(&pivot * &rows[r][j]) - &(&factor * &rows[rank][j]);
                rows[r][j] = &updated * &prev_inv;
            }
        }
        // Entries to the left of the pivot column in the eliminated rows are
        // already zero; columns skipped without a pivot are left untouched.
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Solves `A X = B` where each entry of `B` is a coefficient vector.
///
/// `rhs[i]` is the right-hand side of equation `i`; every `rhs[i]` must have
/// the same length. The result has one vector per unknown.
pub fn linear_solve(a: &Matrix, rhs: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>, ArithError> {
    if !a.is_square() || rhs.len() != a.rows() {
        return Err(ArithError::DimensionMismatch);
    }
    let n = a.rows();
    let width = rhs.first().map_or(0, Vec::len);
    if rhs.iter().any(|r| r.len() != width) {
        return Err(ArithError::DimensionMismatch);
    }
    let mut rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.extend(rhs[i].iter().cloned());
            row
        })
        .collect();
    if bareiss_forward(&mut rows, n) < n {
        return Err(ArithError::SingularMatrix);
    }
    // After Bareiss the system is upper triangular; back-substitute.
    let mut x: Vec<Vec<Scalar>> = vec![Vec::new(); n];
    for i in (0..n).rev() {
        let inv = rows[i][i].inv().expect("pivot is nonzero");
        let mut acc: Vec<Scalar> = rows[i][n..].to_vec();
        for j in i + 1..n {
            let c = &rows[i][j];
            if c.is_zero() {
                continue;
            }
            for (slot, xj) in acc.iter_mut().zip(&x[j]) {
                *slot -= &(c * xj);
            }
        }
        x[i] = acc.into_iter().map(|s| &s * &inv).collect();
    }
    Ok(x)
}

/// Solves `A X = B` with sparse vector right-hand sides.
pub fn linear_solve_sparse<K: Ord + Clone>(
    a: &Matrix,
    rhs: &[SparseVec<K>],
) -> Result<Vec<SparseVec<K>>, ArithError> {
    let keys: Vec<K> = {
        let mut all = std::collections::BTreeSet::new();
        for v in rhs {
            all.extend(v.keys().cloned());
        }
        all.into_iter().collect()
    };
    let dense: Vec<Vec<Scalar>> = rhs
        .iter()
        .map(|v| keys.iter().map(|k| v.coeff(k)).collect())
        .collect();
    let x = linear_solve(a, &dense)?;
    Ok(x.into_iter()
        .map(|col| keys.iter().cloned().zip(col).collect())
        .collect())
}

/// An echelon basis of a subspace, grown one vector at a time.
///
/// Each stored row is normalized to leading coefficient one at its largest key.
#[derive(Clone, Debug)]
pub struct SpanBasis<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for SpanBasis<K> {
    fn default() -> Self {
        SpanBasis {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> SpanBasis<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        let mut bound: Option<K> = None;
        loop {
            let next = match &bound {
                None => v.last_key().cloned(),
                Some(b) => v.last_key_below(b).cloned(),
            };
            let Some(k) = next else { break };
            if let Some(row) = self.rows.get(&k) {
                let c = v.coeff(&k);
                v.add_scaled(&-c, row);
            }
            bound = Some(k);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns the new normalized row if the dimension grew.
    pub fn insert(&mut self, v: &SparseVec<K>) -> Option<SparseVec<K>> {
        let r = self.reduce(v);
        let lead = r.last_key()?.clone();
        let inv = r
            .coeff(&lead)
            .inv()
            .expect("leading coefficient is nonzero");
        let row = r.scaled(&inv);
        self.rows.insert(lead, row.clone());
        Some(row)
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn two_by_two_vector_rhs() {
        // x1 + 2 x2 = (1,2), x1 + 4 x2 = (1,4)  =>  x1 = (1,0), x2 = (0,1)
        let a = m(&[&[1, 2], &[1, 4]]);
        let x = linear_solve(&a, &[v(&[1, 2]), v(&[1, 4])]).unwrap();
        assert_eq!(x, vec![v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn identity_returns_rhs() {
        let b = vec![v(&[3, -1]), v(&[0, 7]), v(&[5, 5])];
        assert_eq!(linear_solve(&Matrix::identity(3), &b).unwrap(), b);
    }

    #[test]
    fn singular_is_detected() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(
            linear_solve(&a, &[v(&[1]), v(&[2])]),
            Err(ArithError::SingularMatrix)
        );
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn pivoting_needed() {
        let a = m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let x = linear_solve(&a, &[v(&[1]), v(&[2]), v(&[3])]).unwrap();
        assert_eq!(x, vec![v(&[3]), v(&[1]), v(&[2])]);
    }

    #[test]
    fn span_membership() {
        let mut span = SpanBasis::new();
        let a: SparseVec<u32> = [(0, Scalar::from_int(1)), (1, Scalar::from_int(1))]
            .into_iter()
            .collect();
        let b: SparseVec<u32> = [(1, Scalar::from_int(1)), (2, Scalar::from_int(2))]
            .into_iter()
            .collect();
        assert!(span.insert(&a).is_some());
        assert!(span.insert(&b).is_some());
        assert!(span.insert(&a.add(&b)).is_none());
        assert!(span.contains(&a.sub(&b.scaled(&Scalar::frac(1, 3)))));
        assert!(!span.contains(&SparseVec::basis(2)));
        assert_eq!(span.dim(), 2);
    }
}
