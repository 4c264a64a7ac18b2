//! Brute-force linear algebra on graded pieces of `K[x0,x1,y0,y1]`.
//!
//! Everything here works one bidegree at a time: a piece of an ideal is a
//! subspace of `R_(a,b)` in the monomial basis of [`form`]. Generator and
//! syzygy counts come from Koszul homology of the piece grid, so they are
//! the true graded Betti numbers on the box, not a shape assumption.

pub mod field;
pub mod form;
pub mod linalg;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::configurations::{AcmConfig, GridPointSet, Label};
use crate::error::{Error, Result};
use crate::resolutions::BettiTable;
use crate::staircase::{Arrangement, Bidegree, Frame, GeneratorSet};
pub use field::{Field, NumField, PrimeField, Rationals, DEFAULT_PRIME};
pub use form::{space_dim, BiForm, Var};
pub use linalg::{Row, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// A finite union of points and rulings, by label.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Locus {
    pub points: BTreeSet<(Label, Label)>,
    pub h_lines: BTreeSet<Label>,
    pub v_lines: BTreeSet<Label>,
}

impl Locus {
    pub fn of_points(x: &GridPointSet) -> Self {
        Self { points: x.cells().clone(), ..Self::default() }
    }

    pub fn of_acm(c: &AcmConfig) -> Self {
        Self { points: c.cells().collect(), ..Self::default() }
    }

    pub fn of_arrangement(w: &Arrangement) -> Self {
        Self {
            points: w.points().cells().collect(),
            h_lines: w.h_line_labels().iter().copied().collect(),
            v_lines: w.v_line_labels().iter().copied().collect(),
        }
    }
}

/// Ways of describing an ideal so that each graded piece can be computed.
#[derive(Clone, Debug)]
pub enum IdealModel<E> {
    Generated(Vec<BiForm<E>>),
    Vanishing(Locus),
    Intersection(Box<IdealModel<E>>, Box<IdealModel<E>>),
    Sum(Box<IdealModel<E>>, Box<IdealModel<E>>),
    /// `f · I`.
    Multiple(BiForm<E>, Box<IdealModel<E>>),
}

impl<E> IdealModel<E> {
    pub fn intersection(a: Self, b: Self) -> Self {
        Self::Intersection(Box::new(a), Box::new(b))
    }

    pub fn sum(a: Self, b: Self) -> Self {
        Self::Sum(Box::new(a), Box::new(b))
    }

    pub fn multiple(f: BiForm<E>, i: Self) -> Self {
        Self::Multiple(f, Box::new(i))
    }
}

/// Bigraded Hilbert function values of an ideal on a box.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DimTable(BTreeMap<Bidegree, usize>);

#[derive(Serialize, Deserialize)]
struct DimEntry {
    a: usize,
    b: usize,
    dim: usize,
}

impl DimTable {
    pub fn get(&self, d: Bidegree) -> Option<usize> {
        self.0.get(&d).copied()
    }

    pub fn insert(&mut self, d: Bidegree, dim: usize) {
        self.0.insert(d, dim);
    }

    pub fn iter(&self) -> impl Iterator<Item = (Bidegree, usize)> + '_ {
        self.0.iter().map(|(d, n)| (*d, *n))
    }
}

impl Serialize for DimTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let list: Vec<DimEntry> = self.iter().map(|(d, dim)| DimEntry { a: d.a, b: d.b, dim }).collect();
        list.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DimTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let list = Vec::<DimEntry>::deserialize(d)?;
        Ok(Self(list.into_iter().map(|e| (Bidegree::new(e.a, e.b), e.dim)).collect()))
    }
}

/// Per-bidegree counts, nonzero entries only.
pub type Counts = BTreeMap<Bidegree, usize>;

/// The pieces `I_d` for every `d` in the box `[0, bound]`.
#[derive(Clone, Debug)]
pub struct PieceGrid<F: Field> {
    bound: Bidegree,
    pieces: Vec<Subspace<F>>,
}

impl<F: Field> PieceGrid<F> {
    pub fn bound(&self) -> Bidegree {
        self.bound
    }

    pub fn piece(&self, d: Bidegree) -> &Subspace<F> {
        assert!(d.divides(self.bound), "{d} lies outside the box {}", self.bound);
        &self.pieces[d.a * (self.bound.b + 1) + d.b]
    }

    pub fn dim(&self, d: Bidegree) -> usize {
        self.piece(d).dim()
    }

    pub fn dims(&self) -> DimTable {
        DimTable(self.bound.box_cells().map(|d| (d, self.dim(d))).collect())
    }
}

impl<F: Field> PartialEq for PieceGrid<F> {
    fn eq(&self, other: &Self) -> bool {
        self.bound == other.bound && self.pieces == other.pieces
    }
}

/// The smallest box the oracle uses for a frame: one past the ambient.
pub fn default_box(frame: &Frame) -> Bidegree {
    frame.ambient() + Bidegree::new(1, 1)
}

#[derive(Clone, Debug, Default)]
pub struct Oracle<F: Field> {
    field: F,
}

impl<F: Field> Oracle<F> {
    pub fn new(field: F) -> Self {
        Self { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// `x0 - n x1` or `y0 - n y1`, vanishing on the ruling through `[n:1]`.
    pub fn ruling_form(&self, o: Orientation, label: Label) -> Result<BiForm<F::Elem>> {
        let f = &self.field;
        let n = f.coordinate(label)?;
        let deg = match o {
            Orientation::Horizontal => Bidegree::new(1, 0),
            Orientation::Vertical => Bidegree::new(0, 1),
        };
        Ok(BiForm::new(deg, vec![f.one(), f.neg(&n)]))
    }

    /// Product of the rulings `H_1..H_a` and `V_1..V_b` of the frame.
    pub fn prefix_product(&self, frame: &Frame, g: Bidegree) -> Result<BiForm<F::Elem>> {
        let f = &self.field;
        let mut acc = BiForm::constant(f, f.one());
        for &h in &frame.h_labels()[..g.a] {
            acc = acc.mul(f, &self.ruling_form(Orientation::Horizontal, h)?);
        }
        for &v in &frame.v_labels()[..g.b] {
            acc = acc.mul(f, &self.ruling_form(Orientation::Vertical, v)?);
        }
        Ok(acc)
    }

    pub fn generator_forms(&self, s: &GeneratorSet) -> Result<Vec<BiForm<F::Elem>>> {
        s.standard_order().iter().map(|&g| self.prefix_product(s.frame(), g)).collect()
    }

    pub fn arrangement_forms(&self, w: &Arrangement) -> Result<Vec<BiForm<F::Elem>>> {
        self.generator_forms(&w.generators())
    }

    /// `I_W` from its generator products.
    pub fn arrangement_ideal(&self, w: &Arrangement) -> Result<IdealModel<F::Elem>> {
        Ok(IdealModel::Generated(self.arrangement_forms(w)?))
    }

    /// Linear conditions on `R_d` for vanishing on `locus`.
    pub fn vanishing_conditions(&self, locus: &Locus, d: Bidegree) -> Result<Vec<Row<F>>> {
        let f = &self.field;
        let n = space_dim(d);
        let powers = |label: Label, e: usize| -> Result<Vec<F::Elem>> {
            let c = f.coordinate(label)?;
            Ok((0..=e).map(|k| f.pow(&c, k as u32)).collect())
        };
        let mut rows = Vec::new();
        for &(h, v) in &locus.points {
            let (ph, pv) = (powers(h, d.a)?, powers(v, d.b)?);
            let mut row = Vec::with_capacity(n);
            for i in 0..=d.a {
                for j in 0..=d.b {
                    row.push(f.mul(&ph[d.a - i], &pv[d.b - j]));
                }
            }
            rows.push(row);
        }
        for &h in &locus.h_lines {
            let ph = powers(h, d.a)?;
            for j in 0..=d.b {
                let mut row = vec![f.zero(); n];
                for i in 0..=d.a {
                    row[form::index(d, i, j)] = ph[d.a - i].clone();
                }
                rows.push(row);
            }
        }
        for &v in &locus.v_lines {
            let pv = powers(v, d.b)?;
            for i in 0..=d.a {
                let mut row = vec![f.zero(); n];
                for j in 0..=d.b {
                    row[form::index(d, i, j)] = pv[d.b - j].clone();
                }
                rows.push(row);
            }
        }
        Ok(rows)
    }

    pub fn vanishing_piece(&self, locus: &Locus, d: Bidegree) -> Result<Subspace<F>> {
        let n = space_dim(d);
        let rows = self.vanishing_conditions(locus, d)?;
        Ok(Subspace::span(&self.field, n, linalg::kernel(&self.field, &rows, n)))
    }

    pub fn pointset_piece(&self, x: &GridPointSet, d: Bidegree) -> Result<Subspace<F>> {
        self.vanishing_piece(&Locus::of_points(x), d)
    }

    /// `space_dim(d)` minus the rank of the evaluation matrix.
    pub fn pointset_piece_dim(&self, x: &GridPointSet, d: Bidegree) -> Result<usize> {
        let rows = self.vanishing_conditions(&Locus::of_points(x), d)?;
        Ok(space_dim(d) - linalg::rank(&self.field, rows, space_dim(d)))
    }

    fn multiplication_rows(&self, gens: &[BiForm<F::Elem>], d: Bidegree) -> Vec<Row<F>> {
        gens.iter()
            .filter_map(|g| d.checked_sub(g.degree()).map(|m| g.multiples(&self.field, m)))
            .flatten()
            .collect()
    }

    pub fn generated_piece(&self, gens: &[BiForm<F::Elem>], d: Bidegree) -> Subspace<F> {
        Subspace::span(&self.field, space_dim(d), self.multiplication_rows(gens, d))
    }

    pub fn generated_piece_dim(&self, gens: &[BiForm<F::Elem>], d: Bidegree) -> usize {
        linalg::rank(&self.field, self.multiplication_rows(gens, d), space_dim(d))
    }

    pub fn piece(&self, ideal: &IdealModel<F::Elem>, d: Bidegree) -> Result<Subspace<F>> {
        let f = &self.field;
        Ok(match ideal {
            IdealModel::Generated(gens) => self.generated_piece(gens, d),
            IdealModel::Vanishing(locus) => self.vanishing_piece(locus, d)?,
            IdealModel::Intersection(a, b) => self.piece(a, d)?.intersection(f, &self.piece(b, d)?),
            IdealModel::Sum(a, b) => self.piece(a, d)?.sum(f, &self.piece(b, d)?),
            IdealModel::Multiple(g, i) => match d.checked_sub(g.degree()) {
                None => Subspace::zero(space_dim(d)),
                Some(rest) => {
                    let inner = self.piece(i, rest)?;
                    let rows = inner
                        .basis()
                        .iter()
                        .map(|v| BiForm::new(rest, v.clone()).mul(f, g).coeffs().to_vec())
                        .collect();
                    Subspace::span(f, space_dim(d), rows)
                }
            },
        })
    }

    pub fn piece_grid(&self, ideal: &IdealModel<F::Elem>, bound: Bidegree) -> Result<PieceGrid<F>> {
        let cells: Vec<Bidegree> = bound.box_cells().collect();
        let pieces = cells.par_iter().map(|&d| self.piece(ideal, d)).collect::<Result<Vec<_>>>()?;
        Ok(PieceGrid { bound, pieces })
    }

    pub fn dim_table(&self, ideal: &IdealModel<F::Elem>, bound: Bidegree) -> Result<DimTable> {
        Ok(self.piece_grid(ideal, bound)?.dims())
    }

    fn lower_rows(&self, grid: &PieceGrid<F>, d: Bidegree) -> Vec<Row<F>> {
        let mut rows = Vec::new();
        for z in Var::ALL {
            if let Some(src) = d.checked_sub(z.degree()) {
                rows.extend(grid.piece(src).basis().iter().map(|v| form::mul_var(&self.field, v, src, z)));
            }
        }
        rows
    }

    /// `R_(1,0) I_(d-(1,0)) + R_(0,1) I_(d-(0,1))`.
    pub fn lower_image(&self, grid: &PieceGrid<F>, d: Bidegree) -> Subspace<F> {
        Subspace::span(&self.field, space_dim(d), self.lower_rows(grid, d))
    }

    fn lower_rank(&self, grid: &PieceGrid<F>, d: Bidegree) -> usize {
        linalg::rank(&self.field, self.lower_rows(grid, d), space_dim(d))
    }

    fn check_interior(counts: &Counts, bound: Bidegree) -> Result<()> {
        match counts.keys().find(|d| d.a == bound.a || d.b == bound.b) {
            Some(_) => Err(Error::BoxTooSmall(bound)),
            None => Ok(()),
        }
    }

    /// Minimal generator counts: each piece modulo the image of the pieces
    /// one step below.
    pub fn beta0_box(&self, grid: &PieceGrid<F>) -> Result<Counts> {
        let cells: Vec<Bidegree> = grid.bound().box_cells().collect();
        let counts: Counts = cells
            .par_iter()
            .map(|&d| (d, grid.dim(d) - self.lower_rank(grid, d)))
            .filter(|(_, n)| *n > 0)
            .collect();
        Self::check_interior(&counts, grid.bound())?;
        Ok(counts)
    }

    /// Syzygy counts forced by the Hilbert function for an ideal with a
    /// resolution of length one.
    pub fn beta1_box(&self, dims: &DimTable, beta0: &Counts, bound: Bidegree) -> Result<Counts> {
        let mut beta1 = Counts::new();
        for d in bound.box_cells() {
            let dim = dims.get(d).ok_or(Error::BoxTooSmall(bound))? as i64;
            let spread = |counts: &Counts| -> i64 {
                counts
                    .iter()
                    .filter_map(|(c, n)| d.checked_sub(*c).map(|m| (*n * space_dim(m)) as i64))
                    .sum()
            };
            let value = spread(beta0) - dim - spread(&beta1);
            if value < 0 {
                return Err(Error::NegativeSyzygy(d));
            }
            if value > 0 {
                beta1.insert(d, value as usize);
            }
        }
        Self::check_interior(&beta1, bound)?;
        Ok(beta1)
    }

    /// Table from `beta0_box` and `beta1_box`.
    pub fn betti_table(&self, ideal: &IdealModel<F::Elem>, bound: Bidegree) -> Result<BettiTable> {
        let grid = self.piece_grid(ideal, bound)?;
        let beta0 = self.beta0_box(&grid)?;
        let beta1 = self.beta1_box(&grid.dims(), &beta0, bound)?;
        Ok(table_of(&[beta0, beta1]))
    }

    /// Rank of the Koszul differential `∂_k` landing in degree `d`.
    fn koszul_rank(&self, grid: &PieceGrid<F>, k: usize, d: Bidegree) -> usize {
        if k == 0 || k > 4 {
            return 0;
        }
        if k == 1 {
            return self.lower_rank(grid, d);
        }
        let f = &self.field;
        let targets: Vec<(Vec<usize>, Bidegree)> = subsets(k - 1)
            .into_iter()
            .filter_map(|t| d.checked_sub(wedge_degree(&t)).map(|m| (t, m)))
            .collect();
        let mut offsets = Vec::with_capacity(targets.len());
        let mut width = 0;
        for (_, m) in &targets {
            offsets.push(width);
            width += space_dim(*m);
        }
        let mut rows = Vec::new();
        for s in subsets(k) {
            let Some(src) = d.checked_sub(wedge_degree(&s)) else { continue };
            for v in grid.piece(src).basis() {
                let mut row = vec![f.zero(); width];
                for (t, &var) in s.iter().enumerate() {
                    let rest: Vec<usize> = s.iter().copied().filter(|&x| x != var).collect();
                    let slot = targets.iter().position(|(u, _)| *u == rest).expect("face degree fits");
                    let z = Var::ALL[var];
                    let image = form::mul_var(f, v, src, z);
                    for (x, y) in row[offsets[slot]..].iter_mut().zip(image) {
                        *x = if t % 2 == 0 { f.add(x, &y) } else { f.sub(x, &y) };
                    }
                }
                rows.push(row);
            }
        }
        linalg::rank(f, rows, width)
    }

    fn koszul_dim(grid: &PieceGrid<F>, k: usize, d: Bidegree) -> usize {
        subsets(k)
            .iter()
            .filter_map(|s| d.checked_sub(wedge_degree(s)))
            .map(|m| grid.dim(m))
            .sum()
    }

    /// Graded Betti numbers `β_0..=β_top` of the ideal, as Koszul homology
    /// of its pieces on the box.
    pub fn koszul_betti(&self, grid: &PieceGrid<F>, top: usize) -> Result<Vec<Counts>> {
        let cells: Vec<Bidegree> = grid.bound().box_cells().collect();
        let per_cell: Vec<Vec<usize>> = cells
            .par_iter()
            .map(|&d| {
                let ranks: Vec<usize> = (0..=top + 1).map(|k| self.koszul_rank(grid, k, d)).collect();
                (0..=top).map(|i| Self::koszul_dim(grid, i, d) - ranks[i] - ranks[i + 1]).collect()
            })
            .collect();
        let mut out = vec![Counts::new(); top + 1];
        for (d, betti) in cells.iter().zip(per_cell) {
            for (i, n) in betti.into_iter().enumerate() {
                if n > 0 {
                    out[i].insert(*d, n);
                }
            }
        }
        for counts in &out {
            Self::check_interior(counts, grid.bound())?;
        }
        Ok(out)
    }

    /// `β_0` and `β_1` from Koszul homology.
    pub fn koszul_table(&self, ideal: &IdealModel<F::Elem>, bound: Bidegree) -> Result<BettiTable> {
        let grid = self.piece_grid(ideal, bound)?;
        Ok(table_of(&self.koszul_betti(&grid, 1)?))
    }

    /// Whether `I_X` has projective dimension one, i.e. `X` is ACM.
    pub fn is_acm(&self, x: &GridPointSet, bound: Bidegree) -> Result<bool> {
        let grid = self.piece_grid(&IdealModel::Vanishing(Locus::of_points(x)), bound)?;
        Ok(self.koszul_betti(&grid, 2)?[2].is_empty())
    }

    /// `(dim J, dim K, dim J+K, dim J∩K)` with the last by inclusion–exclusion.
    pub fn sum_and_intersection_dims(
        &self,
        jgens: &[BiForm<F::Elem>],
        kgens: &[BiForm<F::Elem>],
        d: Bidegree,
    ) -> (usize, usize, usize, usize) {
        let j = self.generated_piece_dim(jgens, d);
        let k = self.generated_piece_dim(kgens, d);
        let both: Vec<BiForm<F::Elem>> = jgens.iter().chain(kgens).cloned().collect();
        let sum = self.generated_piece_dim(&both, d);
        (j, k, sum, j + k - sum)
    }

    /// Mutual containment of the pieces at every cell of the box.
    pub fn ideals_equal_on_box(
        &self,
        i1: &IdealModel<F::Elem>,
        i2: &IdealModel<F::Elem>,
        bound: Bidegree,
    ) -> Result<bool> {
        let f = &self.field;
        let cells: Vec<Bidegree> = bound.box_cells().collect();
        let verdicts = cells
            .par_iter()
            .map(|&d| {
                let (p, q) = (self.piece(i1, d)?, self.piece(i2, d)?);
                Ok(p.dim() == q.dim() && p.is_subspace_of(f, &q) && q.is_subspace_of(f, &p))
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(verdicts.into_iter().all(|ok| ok))
    }

    /// Generator degrees of `I_X` found by the oracle.
    pub fn point_generators(&self, x: &GridPointSet, bound: Bidegree) -> Result<Counts> {
        let grid = self.piece_grid(&IdealModel::Vanishing(Locus::of_points(x)), bound)?;
        self.beta0_box(&grid)
    }
}

/// Sorted index sets of size `k` in `{0,1,2,3}`.
fn subsets(k: usize) -> Vec<Vec<usize>> {
    (0u8..16)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..4).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn wedge_degree(s: &[usize]) -> Bidegree {
    s.iter().fold(Bidegree::ZERO, |acc, &i| acc + Var::ALL[i].degree())
}

fn table_of(levels: &[Counts]) -> BettiTable {
    let mut t = BettiTable::new();
    for (i, counts) in levels.iter().enumerate() {
        for (&d, &n) in counts {
            t.add(i, d, n);
        }
    }
    t
}

/// Box for a grid point set: one past its own rulings.
pub fn point_set_box(x: &GridPointSet) -> Bidegree {
    Bidegree::new(x.h_labels().len() + 1, x.v_labels().len() + 1)
}

pub type PrimeOracle = Oracle<PrimeField>;
pub type RationalOracle = Oracle<Rationals>;

impl PrimeOracle {
    pub fn with_prime(p: u64) -> Result<Self> {
        Ok(Self::new(PrimeField::new(p)?))
    }
}

#[cfg(test)]
mod tests;
