//! Dense Gaussian elimination and subspaces of `F^n`.

use super::field::Field;

pub type Row<F> = Vec<<F as Field>::Elem>;

/// Brings `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref<F: Field>(f: &F, rows: &mut Vec<Row<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| !f.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = f.inv(&rows[rank][col]).expect("pivot is nonzero");
        for x in rows[rank][col..].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let (head, tail) = rows.split_at_mut(rank);
        let (pivot_row, tail) = tail.split_first_mut().expect("rank < len");
        for row in head.iter_mut().chain(tail.iter_mut()) {
            if f.is_zero(&row[col]) {
                continue;
            }
            let factor = f.neg(&row[col]);
            for k in col..ncols {
                if !f.is_zero(&pivot_row[k]) {
                    row[k] = f.mul_add(&factor, &pivot_row[k], &row[k]);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

/// Rank by forward elimination; `rows` is consumed as scratch space.
pub fn rank<F: Field>(f: &F, mut rows: Vec<Row<F>>, ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| !f.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = f.inv(&rows[rank][col]).expect("pivot is nonzero");
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if f.is_zero(&row[col]) {
                continue;
            }
            let factor = f.neg(&f.mul(&row[col], &inv));
            for k in col..ncols {
                if !f.is_zero(&pivot_row[k]) {
                    row[k] = f.mul_add(&factor, &pivot_row[k], &row[k]);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Basis of `{x : M x = 0}` for the matrix with the given rows.
pub fn kernel<F: Field>(f: &F, rows: &[Row<F>], ncols: usize) -> Vec<Row<F>> {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![f.zero(); ncols];
            v[free] = f.one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = f.neg(&row[free]);
            }
            v
        })
        .collect()
}

/// A subspace of `F^n` stored by its reduced echelon basis, so equal
/// subspaces have identical representations.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    n: usize,
    basis: Vec<Row<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.pivots == other.pivots && self.basis == other.basis
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(n: usize) -> Self {
        Self { n, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn span(f: &F, n: usize, mut rows: Vec<Row<F>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == n));
        let pivots = rref(f, &mut rows, n);
        Self { n, basis: rows, pivots }
    }

    pub fn full(f: &F, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![f.zero(); n];
                r[i] = f.one();
                r
            })
            .collect();
        Self { n, basis: rows, pivots: (0..n).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Row<F>] {
        &self.basis
    }

    pub fn contains(&self, f: &F, v: &[F::Elem]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let factor = f.neg(&v[p]);
            for k in p..self.n {
                v[k] = f.mul_add(&factor, &row[k], &v[k]);
            }
        }
        v.iter().all(|x| f.is_zero(x))
    }

    pub fn is_subspace_of(&self, f: &F, other: &Self) -> bool {
        self.basis.iter().all(|v| other.contains(f, v))
    }

    pub fn sum(&self, f: &F, other: &Self) -> Self {
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Self::span(f, self.n, rows)
    }

    /// Zassenhaus: reduce `[u | u]` and `[w | 0]`; the rows whose left half
    /// vanishes carry a basis of `U ∩ W` on the right.
    pub fn intersection(&self, f: &F, other: &Self) -> Self {
        let n = self.n;
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(n);
        }
        let mut rows: Vec<Row<F>> = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.basis {
            let mut r = u.clone();
            r.extend(u.iter().cloned());
            rows.push(r);
        }
        for w in &other.basis {
            let mut r = w.clone();
            r.extend(std::iter::repeat_n(f.zero(), n));
            rows.push(r);
        }
        let pivots = rref(f, &mut rows, 2 * n);
        let meet = rows
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        Self::span(f, n, meet)
    }
}
