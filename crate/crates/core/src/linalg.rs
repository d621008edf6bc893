//! Exact rational linear algebra: dense row reduction for small systems and a
//! row-sparse matrix type for representation matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational scalar used everywhere a field is needed.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `base^exp` for a nonzero rational and any integer exponent.
pub fn q_pow(base: &Q, exp: i64) -> Q {
    let mut acc = Q::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Reduce `rows` in place to reduced row echelon form; returns pivot columns.
pub fn rref(rows: &mut Vec<Vec<Q>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : A x = 0}` where `a` is given by rows.
pub fn nullspace(a: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &pc) in m.iter().zip(pivots.iter()) {
                if !row[f].is_zero() {
                    v[pc] = -row[f].clone();
                }
            }
            v
        })
        .collect()
}

/// One solution of `A x = b`, if the system is consistent.
pub fn solve(a: &[Vec<Q>], b: &[Q], ncols: usize) -> Option<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (row, &pc) in m.iter().zip(pivots.iter()) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

/// Row-sparse exact matrix. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<BTreeMap<usize, Q>>,
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix({}x{}, nnz={})", self.nrows, self.ncols, self.nnz())
    }
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_dense(d: &[Vec<Q>], ncols: usize) -> Self {
        let mut m = Self::zeros(d.len(), ncols);
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut d = vec![vec![Q::zero(); self.ncols]; self.nrows];
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, x) in row {
                d[i][j] = x.clone();
            }
        }
        d
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.rows[i].get(&j).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        if x.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, x);
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &Q) {
        if x.is_zero() {
            return;
        }
        let entry = self.rows[i].entry(j).or_insert_with(Q::zero);
        *entry += x;
        if entry.is_zero() {
            self.rows[i].remove(&j);
        }
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &Q)> {
        self.rows[i].iter().map(|(&j, x)| (j, x))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(&j, x)| (i, j, x)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        let mut m = self.clone();
        for row in m.rows.iter_mut() {
            for x in row.values_mut() {
                *x *= c;
            }
        }
        m
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut m = self.clone();
        for (i, j, x) in other.entries() {
            m.add_at(i, j, x);
        }
        m
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Q) {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        if c.is_zero() {
            return;
        }
        for (i, j, x) in other.entries() {
            self.add_at(i, j, &(x * c));
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut m = self.clone();
        m.add_scaled(other, &-Q::one());
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch in product");
        let mut out = Self::zeros(self.nrows, other.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
            for (&k, a) in row {
                for (&j, b) in &other.rows[k] {
                    *acc.entry(j).or_insert_with(Q::zero) += a * b;
                }
            }
            acc.retain(|_, x| !x.is_zero());
            out.rows[i] = acc;
        }
        out
    }

    /// `[self, other] = self·other − other·self`
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for (i, j, x) in self.entries() {
            t.set(j, i, x.clone());
        }
        t
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        self.rows
            .iter()
            .map(|row| {
                let mut s = Q::zero();
                for (&j, x) in row {
                    if !v[j].is_zero() {
                        s += x * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn trace(&self) -> Q {
        (0..self.nrows.min(self.ncols)).map(|i| self.get(i, i)).fold(Q::zero(), |a, b| a + b)
    }

    /// Kronecker product `self ⊗ other`, index `(i, k) ↦ i·other.n + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.nrows * other.nrows, self.ncols * other.ncols);
        for (i, j, a) in self.entries() {
            for (k, l, b) in other.entries() {
                out.set(i * other.nrows + k, j * other.ncols + l, a * b);
            }
        }
        out
    }

    /// Place `block` with its top-left corner at `(r0, c0)`.
    pub fn place(&mut self, r0: usize, c0: usize, block: &Self) {
        for (i, j, x) in block.entries() {
            self.set(r0 + i, c0 + j, x.clone());
        }
    }

    /// Extract the sub-block of rows `r0..r0+nr` and columns `c0..c0+nc`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        let mut out = Self::zeros(nr, nc);
        for i in 0..nr {
            for (&j, x) in self.rows[r0 + i].range(c0..c0 + nc) {
                out.set(i, j - c0, x.clone());
            }
        }
        out
    }

    pub fn max_abs_row_sum(&self) -> Q {
        self.rows
            .iter()
            .map(|r| r.values().map(|x| x.abs()).fold(Q::zero(), |a, b| a + b))
            .max()
            .unwrap_or_else(Q::zero)
    }
}

/// Columns of `basis` (given as vectors) span a subspace; express `v` in it.
pub fn coordinates_in(basis: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    if basis.is_empty() {
        return if v.iter().all(|x| x.is_zero()) { Some(vec![]) } else { None };
    }
    let n = v.len();
    let a: Vec<Vec<Q>> = (0..n).map(|i| basis.iter().map(|b| b[i].clone()).collect()).collect();
    solve(&a, v, basis.len())
}

/// Incrementally grown subspace of `Q^n`, kept in echelon form.
#[derive(Debug, Clone)]
pub struct Span {
    n: usize,
    rows: Vec<(usize, Vec<Q>)>,
}

impl Span {
    pub fn new(n: usize) -> Self {
        Span { n, rows: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    /// Remainder of `v` after eliminating against the stored rows.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Add `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        r.iter_mut().for_each(|x| *x *= &inv);
        self.rows.push((p, r));
        true
    }

    /// The stored (echelon) basis vectors.
    pub fn basis(&self) -> Vec<Vec<Q>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

/// Sparse rows in echelon form: each stored row has a distinct leading
/// column, and incoming rows are reduced against them.
#[derive(Debug, Clone, Default)]
pub struct SparseSpan {
    pivots: BTreeMap<usize, BTreeMap<usize, Q>>,
}

impl SparseSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn reduce(&self, v: &BTreeMap<usize, Q>) -> BTreeMap<usize, Q> {
        let mut v = v.clone();
        v.retain(|_, x| !x.is_zero());
        let mut cursor = 0;
        while let Some((&k, c)) = v.range(cursor..).next() {
            if let Some(row) = self.pivots.get(&k) {
                let c = c.clone();
                for (j, y) in row {
                    let e = v.entry(*j).or_insert_with(Q::zero);
                    *e -= &c * y;
                    if e.is_zero() {
                        v.remove(j);
                    }
                }
            }
            cursor = k + 1;
        }
        v
    }

    /// Add a row; returns its new leading column, or `None` if it was
    /// already in the span.
    pub fn insert(&mut self, v: &BTreeMap<usize, Q>) -> Option<usize> {
        let mut r = self.reduce(v);
        let (&lead, c) = r.iter().next()?;
        let inv = c.recip();
        r.values_mut().for_each(|x| *x *= &inv);
        self.pivots.insert(lead, r);
        Some(lead)
    }

    /// A nonzero solution of the homogeneous system given by the stored
    /// rows, in `ncols` unknowns: the first free unknown is set to 1, the
    /// others to 0.
    pub fn kernel_vector(&self, ncols: usize) -> Option<Vec<Q>> {
        let free = (0..ncols).find(|c| !self.pivots.contains_key(c))?;
        let mut x = vec![Q::zero(); ncols];
        x[free] = Q::one();
        for (&lead, row) in self.pivots.iter().rev() {
            let s: Q = row.range(lead + 1..).map(|(j, y)| y * &x[*j]).fold(Q::zero(), |a, b| a + b);
            x[lead] = -s;
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_span_kernel() {
        let mut s = SparseSpan::new();
        let row = |v: &[(usize, i64)]| v.iter().map(|&(j, x)| (j, q(x))).collect::<BTreeMap<_, _>>();
        assert_eq!(s.insert(&row(&[(0, 1), (1, 1), (2, 1)])), Some(0));
        assert_eq!(s.insert(&row(&[(0, 2), (1, 2), (2, 2)])), None);
        assert_eq!(s.insert(&row(&[(1, 1), (2, -1)])), Some(1));
        let x = s.kernel_vector(3).unwrap();
        assert_eq!(x, vec![q(-2), q(1), q(1)]);
    }

    #[test]
    fn span_grows_only_on_new_directions() {
        let mut s = Span::new(3);
        assert!(s.insert(&[q(1), q(1), q(0)]));
        assert!(!s.insert(&[q(2), q(2), q(0)]));
        assert!(s.insert(&[q(0), q(1), q(0)]));
        assert!(s.contains(&[q(5), q(-3), q(0)]));
        assert!(!s.contains(&[q(0), q(0), q(1)]));
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = vec![vec![q(1), q(2), q(3)]];
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s: Q = a[0].iter().zip(v.iter()).map(|(x, y)| x * y).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(solve(&a, &[q(1), q(3)], 2).is_none());
        let x = solve(&a, &[q(1), q(2)], 2).unwrap();
        assert_eq!(&x[0] + &x[1], q(1));
    }

    #[test]
    fn sparse_product_matches_dense() {
        let a = SparseMatrix::from_dense(&[vec![q(1), q(2)], vec![q(0), q_frac(1, 2)]], 2);
        let b = SparseMatrix::from_dense(&[vec![q(3), q(0)], vec![q(1), q(4)]], 2);
        let p = a.mul(&b).to_dense();
        assert_eq!(p, vec![vec![q(5), q(8)], vec![q_frac(1, 2), q(2)]]);
        assert!(a.commutator(&a).is_zero());
    }

    #[test]
    fn negative_powers() {
        assert_eq!(q_pow(&q(2), -2), q_frac(1, 4));
        assert_eq!(q_pow(&q(-1), 2), q(1));
        assert_eq!(q_pow(&q(5), 0), q(1));
    }
}
