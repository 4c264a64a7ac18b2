//! Bipartitions of a minimal generating set: cut numbers, point splittings
//! and the Betti-splitting criterion.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::configurations::{AcmConfig, GridPointSet, Label};
use crate::error::{Error, Result};
use crate::oracle::{form, Counts, Field, IdealModel, Locus, Oracle, PieceGrid};
use crate::resolutions::{check_betti_splitting_numeric, BettiTable};
use crate::staircase::{intersect, min_gen_count, min_gens, recognize, Arrangement, Bidegree, GeneratorSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Self {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Number of adjacent positions on different sides.
pub fn cut_number_of(sides: &[Side]) -> Result<usize> {
    if !(sides.contains(&Side::A) && sides.contains(&Side::B)) {
        return Err(Error::ZeroPartition);
    }
    Ok(sides.windows(2).filter(|w| w[0] != w[1]).count())
}

/// A generating set in standard order with a side for every position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    gens: GeneratorSet,
    sides: Vec<Side>,
}

impl SplitPartition {
    pub fn new(gens: GeneratorSet, sides: Vec<Side>) -> Result<Self> {
        if sides.len() != gens.len() {
            return Err(Error::Inconsistent(format!(
                "{} sides given for {} generators",
                sides.len(),
                gens.len()
            )));
        }
        cut_number_of(&sides)?;
        Ok(Self { gens, sides })
    }

    /// Side `A` holds the given 0-based positions of the standard order.
    pub fn from_side_a(gens: GeneratorSet, positions: &[usize]) -> Result<Self> {
        let mut sides = vec![Side::B; gens.len()];
        for &p in positions {
            if p >= gens.len() {
                return Err(Error::IndexOutOfRange { index: p, len: gens.len() });
            }
            sides[p] = Side::A;
        }
        Self::new(gens, sides)
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn positions(&self, side: Side) -> Vec<usize> {
        (0..self.sides.len()).filter(|&i| self.sides[i] == side).collect()
    }

    pub fn part(&self, side: Side) -> GeneratorSet {
        self.gens.select(self.positions(side))
    }

    pub fn cut_number(&self) -> usize {
        cut_number_of(&self.sides).expect("both sides are nonempty")
    }

    pub fn swapped(&self) -> Self {
        Self { gens: self.gens.clone(), sides: self.sides.iter().map(|s| s.other()).collect() }
    }

    /// Arrangements of `⟨A⟩` and `⟨B⟩`.
    pub fn arrangements(&self) -> Result<(Arrangement, Arrangement)> {
        Ok((recognize(&self.part(Side::A))?, recognize(&self.part(Side::B))?))
    }
}

/// Every unordered bipartition once, with the first generator on side `A`.
pub fn enumerate_bipartitions(g: &GeneratorSet) -> Result<impl Iterator<Item = SplitPartition> + '_> {
    let n = g.len();
    if n < 2 {
        return Err(Error::NotSplittable(n));
    }
    Ok((1u64..1 << (n - 1)).map(move |mask| {
        let sides = (0..n).map(|i| if i > 0 && mask >> (i - 1) & 1 == 1 { Side::B } else { Side::A }).collect();
        SplitPartition { gens: g.clone(), sides }
    }))
}

/// Side `A` cuts out points: `⟨A⟩` has no line factor.
pub fn is_point_splitting(s: &SplitPartition) -> Result<bool> {
    Ok(recognize(&s.part(Side::A))?.line_degree() == Bidegree::ZERO)
}

/// The side whose generators cut out points, if any.
pub fn point_side(s: &SplitPartition) -> Result<Option<Side>> {
    if is_point_splitting(s)? {
        Ok(Some(Side::A))
    } else if is_point_splitting(&s.swapped())? {
        Ok(Some(Side::B))
    } else {
        Ok(None)
    }
}

/// `J ∩ K` for the two sides.
pub fn meet(s: &SplitPartition) -> Result<Arrangement> {
    let (j, k) = s.arrangements()?;
    intersect(&j, &k)
}

/// A 1-cut partition, checked against the generator count of `J ∩ K`.
pub fn is_betti_splitting_structural(s: &SplitPartition) -> Result<bool> {
    let by_cut = s.cut_number() == 1;
    let principal = min_gen_count(&meet(s)?) == 1;
    if by_cut != principal {
        return Err(Error::Inconsistent(format!(
            "cut number {} but J∩K has {} generator(s)",
            s.cut_number(),
            min_gen_count(&meet(s)?)
        )));
    }
    Ok(by_cut)
}

/// `A = {f1, f2} ∪ A'` for an ACM configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSplitting {
    pub partition: SplitPartition,
    pub j: AcmConfig,
    pub k: Arrangement,
}

/// The point splitting whose point side holds the two pure generators and
/// the chosen drop generators.
pub fn acm_point_splitting(c: &AcmConfig, a_prime: &[Bidegree]) -> Result<PointSplitting> {
    let g = min_gens(c);
    let tau = g.standard_order();
    let n = tau.len();
    let mut positions = vec![0, n - 1];
    for d in a_prime {
        match tau.iter().position(|t| t == d) {
            Some(p) if p != 0 && p != n - 1 => positions.push(p),
            _ => return Err(Error::NotDropGenerator(*d)),
        }
    }
    positions.sort_unstable();
    positions.dedup();
    if positions.len() == n {
        return Err(Error::EmptyComplement);
    }
    let partition = SplitPartition::from_side_a(g, &positions)?;
    let (jw, k) = partition.arrangements()?;
    debug_assert_eq!(jw.line_degree(), Bidegree::ZERO);
    Ok(PointSplitting { partition, j: jw.points(), k })
}

/// Every point splitting of an ACM configuration, one per subset of drops.
pub fn acm_point_splittings(c: &AcmConfig) -> Vec<PointSplitting> {
    let tau = min_gens(c).standard_order().to_vec();
    let drops = &tau[1..tau.len() - 1];
    (0u64..1 << drops.len())
        .filter_map(|mask| {
            let chosen: Vec<Bidegree> =
                drops.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, d)| *d).collect();
            acm_point_splitting(c, &chosen).ok()
        })
        .collect()
}

/// `J` is the grid of all rulings of `X`; `K` holds the other generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompleteIntersectionSplitting {
    pub j: AcmConfig,
    pub k_degrees: Vec<Bidegree>,
}

impl CompleteIntersectionSplitting {
    pub fn is_proper(&self) -> bool {
        !self.k_degrees.is_empty()
    }
}

fn pure_generators(gens: &Counts) -> Result<(Bidegree, Bidegree)> {
    let horizontal: Vec<(&Bidegree, &usize)> = gens.iter().filter(|(d, _)| d.b == 0 && d.a > 0).collect();
    let vertical: Vec<(&Bidegree, &usize)> = gens.iter().filter(|(d, _)| d.a == 0 && d.b > 0).collect();
    let count = |v: &[(&Bidegree, &usize)]| v.iter().map(|(_, n)| **n).sum::<usize>();
    let (h, v) = (count(&horizontal), count(&vertical));
    if h != 1 || v != 1 {
        return Err(Error::PureGeneratorCount { horizontal: h, vertical: v });
    }
    Ok((*horizontal[0].0, *vertical[0].0))
}

/// `gens` are the minimal generator degrees of `I_X`, from [`min_gens`] or
/// from the oracle.
pub fn complete_intersection_point_splitting(x: &GridPointSet, gens: &Counts) -> Result<CompleteIntersectionSplitting> {
    let (f2, f1) = pure_generators(gens)?;
    let (h, v) = (x.h_labels().len(), x.v_labels().len());
    if f2 != Bidegree::new(h, 0) || f1 != Bidegree::new(0, v) {
        return Err(Error::Inconsistent(format!("pure generators {f2}, {f1} for a {h}x{v} set")));
    }
    let grid = crate::partitions::Partition::rectangle(h, v);
    let j = AcmConfig::from_partition(grid, x.h_labels(), x.v_labels())?;
    let mut k_degrees = Vec::new();
    for (d, n) in gens {
        if *d != f1 && *d != f2 {
            k_degrees.extend(std::iter::repeat_n(*d, *n));
        }
    }
    Ok(CompleteIntersectionSplitting { j, k_degrees })
}

/// Exactly one generator of bidegree `(a,0)` and one of `(0,b)`, so no
/// bipartition can give both sides the two pure generators a point ideal
/// needs.
pub fn check_no_two_point_ideal_partition(gens: &Counts) -> Result<bool> {
    pure_generators(gens).map(|_| true)
}

/// Per-bipartition summary for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    /// 1-based positions in the standard order.
    #[serde(rename = "A")]
    pub side_a: Vec<usize>,
    #[serde(rename = "B")]
    pub side_b: Vec<usize>,
    pub cut: usize,
    pub point_splitting: bool,
    pub betti_splitting: bool,
    #[serde(rename = "J")]
    pub j: Arrangement,
    #[serde(rename = "K")]
    pub k: Arrangement,
    #[serde(rename = "JcapK")]
    pub jk: Arrangement,
    #[serde(rename = "JcapK_gens")]
    pub jk_gens: usize,
}

impl SplitReport {
    pub fn new(s: &SplitPartition) -> Result<Self> {
        let (j, k) = s.arrangements()?;
        let jk = intersect(&j, &k)?;
        let one_based = |side| s.positions(side).into_iter().map(|p| p + 1).collect();
        Ok(Self {
            side_a: one_based(Side::A),
            side_b: one_based(Side::B),
            cut: s.cut_number(),
            point_splitting: point_side(s)?.is_some(),
            betti_splitting: is_betti_splitting_structural(s)?,
            jk_gens: min_gen_count(&jk),
            j,
            k,
            jk,
        })
    }
}

/// Oracle Betti tables for `I`, `J`, `K` and `J ∩ K` of a bipartition.
pub struct SplitTables {
    pub i: BettiTable,
    pub j: BettiTable,
    pub k: BettiTable,
    pub jk: BettiTable,
}

impl SplitTables {
    pub fn additive(&self) -> bool {
        check_betti_splitting_numeric(&self.i, &self.j, &self.k, &self.jk)
    }
}

/// Computes all four tables by Koszul homology on `bound`.
pub fn oracle_split_tables<F: Field>(o: &Oracle<F>, s: &SplitPartition, bound: Bidegree) -> Result<SplitTables> {
    let model = |g: &GeneratorSet| -> Result<IdealModel<F::Elem>> { Ok(IdealModel::Generated(o.generator_forms(g)?)) };
    let (ja, kb) = (model(&s.part(Side::A))?, model(&s.part(Side::B))?);
    let table = |m: &IdealModel<F::Elem>| o.koszul_table(m, bound);
    Ok(SplitTables {
        i: table(&model(s.gens())?)?,
        j: table(&ja)?,
        k: table(&kb)?,
        jk: table(&IdealModel::intersection(ja, kb))?,
    })
}

/// Ruling products of the given bidegree that vanish on `x`.
fn ruling_products<F: Field>(o: &Oracle<F>, x: &GridPointSet, d: Bidegree) -> Result<Vec<(String, form::BiForm<F::Elem>)>> {
    let mut out = Vec::new();
    for hs in subsets_of(x.h_labels(), d.a) {
        for vs in subsets_of(x.v_labels(), d.b) {
            let covers = x.cells().iter().all(|(h, v)| hs.contains(h) || vs.contains(v));
            if !covers {
                continue;
            }
            let frame = crate::staircase::Frame::new(hs.clone(), vs.clone())?;
            let name = GeneratorSet::new([d], frame.clone())?.describe(d);
            out.push((name, o.prefix_product(&frame, d)?));
        }
    }
    Ok(out)
}

fn subsets_of(labels: &[Label], k: usize) -> Vec<Vec<Label>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if labels.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mut rest in subsets_of(&labels[1..], k - 1) {
        rest.insert(0, labels[0]);
        out.push(rest);
    }
    out.extend(subsets_of(&labels[1..], k));
    out
}

/// One choice of point side: the two pure generators plus `a_prime`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductCandidate {
    /// Products such as `H1·V1V2V4`.
    pub a_prime: Vec<String>,
    /// Grid points where every generator of the side vanishes.
    pub zero_set: BTreeSet<(Label, Label)>,
    /// The side generates the ideal of its zero set on the box.
    pub point_ideal: bool,
}

/// Minimal generators of `I_X` chosen among products of rulings where
/// possible, and the point ideals their subsets generate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductExperiment {
    pub generator_degrees: Vec<Bidegree>,
    pub product_degrees: Vec<Bidegree>,
    pub other_degrees: Vec<Bidegree>,
    /// Every proper choice of `A'` among the non-pure products, the full
    /// set first.
    pub candidates: Vec<ProductCandidate>,
}

impl ProductExperiment {
    /// Some generators could not be taken as products.
    pub fn has_others(&self) -> bool {
        !self.other_degrees.is_empty()
    }
}

fn zero_set_of<F: Field>(o: &Oracle<F>, x: &GridPointSet, forms: &[form::BiForm<F::Elem>]) -> Result<BTreeSet<(Label, Label)>> {
    let f = o.field();
    let one = f.one();
    let mut out = BTreeSet::new();
    for &h in x.h_labels() {
        for &v in x.v_labels() {
            let (hc, vc) = (f.coordinate(h)?, f.coordinate(v)?);
            if forms.iter().all(|g| f.is_zero(&g.eval(f, (&hc, &one), (&vc, &one)))) {
                out.insert((h, v));
            }
        }
    }
    Ok(out)
}

/// Picks, in each generator degree, ruling products independent modulo the
/// lower-degree image, then tries every point side `{f1, f2} ∪ A'` with
/// `A'` among the non-pure products.
pub fn ruling_product_experiment<F: Field>(o: &Oracle<F>, x: &GridPointSet, bound: Bidegree) -> Result<ProductExperiment> {
    let f = o.field();
    let ideal = IdealModel::Vanishing(Locus::of_points(x));
    let grid: PieceGrid<F> = o.piece_grid(&ideal, bound)?;
    let beta0 = o.beta0_box(&grid)?;
    let (pure_h, pure_v) = pure_generators(&beta0)?;
    let mut pure = Vec::new();
    let mut chosen = Vec::new();
    let mut generator_degrees = Vec::new();
    let mut product_degrees = Vec::new();
    let mut other_degrees = Vec::new();
    for (&d, &n) in &beta0 {
        generator_degrees.extend(std::iter::repeat_n(d, n));
        let mut span = o.lower_image(&grid, d);
        let mut taken = 0;
        for (name, p) in ruling_products(o, x, d)? {
            if taken == n {
                break;
            }
            if !span.contains(f, p.coeffs()) {
                span = span.sum(f, &crate::oracle::Subspace::span(f, span.ambient_dim(), vec![p.coeffs().to_vec()]));
                product_degrees.push(d);
                if d == pure_h || d == pure_v {
                    pure.push(p);
                } else {
                    chosen.push((name, p));
                }
                taken += 1;
            }
        }
        other_degrees.extend(std::iter::repeat_n(d, n - taken));
    }
    let n = chosen.len();
    let mut candidates = Vec::new();
    for mask in (0u64..1 << n).rev() {
        if mask == (1 << n) - 1 && other_degrees.is_empty() {
            continue;
        }
        let picked: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let mut side = pure.clone();
        side.extend(picked.iter().map(|&i| chosen[i].1.clone()));
        let zero_set = zero_set_of(o, x, &side)?;
        let y = GridPointSet::from_cells(zero_set.iter().copied())?;
        let a_prime = picked.iter().map(|&i| chosen[i].0.clone()).collect();
        let point_ideal =
            o.ideals_equal_on_box(&IdealModel::Generated(side), &IdealModel::Vanishing(Locus::of_points(&y)), bound)?;
        candidates.push(ProductCandidate { a_prime, zero_set, point_ideal });
    }
    Ok(ProductExperiment { generator_degrees, product_degrees, other_degrees, candidates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::{default_box, point_set_box, PrimeOracle};
    use crate::partitions::Partition;
    use crate::staircase::Frame;
    use proptest::prelude::*;

    fn bd(a: usize, b: usize) -> Bidegree {
        Bidegree::new(a, b)
    }

    fn runex_gens() -> GeneratorSet {
        min_gens(&fixtures::twenty_point_staircase())
    }

    fn sides(s: &str) -> Vec<Side> {
        s.chars().map(|c| if c == 'A' { Side::A } else { Side::B }).collect()
    }

    #[test]
    fn cut_numbers() {
        // a..h with A = {a,b,c,f}
        assert_eq!(cut_number_of(&sides("AAABBABB")).unwrap(), 3);
        assert_eq!(cut_number_of(&sides("AAAB")).unwrap(), 1);
        assert_eq!(cut_number_of(&sides("ABABA")).unwrap(), 4);
        assert_eq!(cut_number_of(&sides("AAA")), Err(Error::ZeroPartition));
    }

    #[test]
    fn enumeration_counts() {
        let frame = Frame::standard(6, 6);
        for n in 2..=6 {
            let gens: Vec<Bidegree> = (0..n).map(|i| bd(i, n - 1 - i)).collect();
            let g = GeneratorSet::new(gens, frame.clone()).unwrap();
            let all: Vec<SplitPartition> = enumerate_bipartitions(&g).unwrap().collect();
            assert_eq!(all.len(), (1 << (n - 1)) - 1);
            assert!(all.iter().all(|s| s.sides()[0] == Side::A));
            assert_eq!(all.iter().filter(|s| s.cut_number() == 1).count(), n - 1);
        }
        let single = GeneratorSet::new([bd(1, 1)], frame).unwrap();
        assert!(matches!(enumerate_bipartitions(&single), Err(Error::NotSplittable(1))));
    }

    #[test]
    fn complete_intersection_splittings() {
        let c = fixtures::twenty_point_staircase();
        let gens: Counts = min_gens(&c).standard_order().iter().map(|&d| (d, 1)).collect();
        let ci = complete_intersection_point_splitting(&c.to_point_set(), &gens).unwrap();
        assert_eq!(ci.j.num_points(), 35);
        assert_eq!(ci.k_degrees.len(), 4);
        assert!(ci.is_proper());

        let point = GridPointSet::from_cells([(1, 1)]).unwrap();
        let gens: Counts = [(bd(1, 0), 1), (bd(0, 1), 1)].into_iter().collect();
        let ci = complete_intersection_point_splitting(&point, &gens).unwrap();
        assert_eq!(ci.j.num_points(), 1);
        assert!(!ci.is_proper());

        let o = PrimeOracle::default();
        let x = fixtures::six_point_non_acm();
        let gens = o.point_generators(&x, point_set_box(&x)).unwrap();
        let ci = complete_intersection_point_splitting(&x, &gens).unwrap();
        assert_eq!(ci.j.alpha(), &Partition::rectangle(3, 4));
        assert_eq!(ci.k_degrees.len(), 4);
    }

    #[test]
    fn acm_point_splitting_examples() {
        let c = fixtures::twenty_point_staircase();
        let ps = acm_point_splitting(&c, &[bd(2, 3)]).unwrap();
        assert_eq!(ps.partition.positions(Side::A), vec![0, 2, 5]);
        assert_eq!(ps.j.alpha(), &Partition::new(vec![5, 5, 3, 3, 3, 3, 3]).unwrap());
        let expected_k = recognize(&GeneratorSet::new([bd(1, 4), bd(4, 2), bd(6, 1)], Frame::standard(7, 5)).unwrap()).unwrap();
        assert_eq!(ps.k, expected_k);

        let all_drops = [bd(1, 4), bd(2, 3), bd(4, 2), bd(6, 1)];
        assert_eq!(acm_point_splitting(&c, &all_drops), Err(Error::EmptyComplement));
        assert_eq!(acm_point_splitting(&c, &[bd(7, 0)]), Err(Error::NotDropGenerator(bd(7, 0))));
        let ci = acm_point_splitting(&c, &[]).unwrap();
        assert_eq!(ci.j.alpha(), &Partition::rectangle(7, 5));
        assert_eq!(acm_point_splittings(&c).len(), 15);
    }

    #[test]
    fn point_splitting_predicate() {
        let g = runex_gens();
        let ends = SplitPartition::from_side_a(g.clone(), &[0, 5]).unwrap();
        assert!(is_point_splitting(&ends).unwrap());
        let top = SplitPartition::from_side_a(g.clone(), &[0, 1]).unwrap();
        assert!(!is_point_splitting(&top).unwrap());
        let missing = SplitPartition::from_side_a(g, &[0, 2, 3]).unwrap();
        assert!(!is_point_splitting(&missing).unwrap());
        assert_eq!(point_side(&ends.swapped()).unwrap(), Some(Side::B));
    }

    #[test]
    fn betti_structural_examples() {
        let g = runex_gens();
        let first_two = SplitPartition::from_side_a(g.clone(), &[0, 1]).unwrap();
        assert!(is_betti_splitting_structural(&first_two).unwrap());
        for ps in acm_point_splittings(&fixtures::twenty_point_staircase()) {
            assert!(ps.partition.cut_number() >= 2);
            assert!(!is_betti_splitting_structural(&ps.partition).unwrap());
        }
        let exhaustive: Vec<bool> = enumerate_bipartitions(&g)
            .unwrap()
            .map(|s| is_betti_splitting_structural(&s).unwrap())
            .collect();
        assert_eq!(exhaustive.len(), 31);
        assert_eq!(exhaustive.iter().filter(|b| **b).count(), 5);
    }

    #[test]
    fn section_five_partition() {
        // τ1..τ5 of the twenty-point ideal; ω = τ6 is left out.
        let five = runex_gens().select(0..5);
        let s = SplitPartition::from_side_a(five, &[0, 2, 4]).unwrap();
        let report = SplitReport::new(&s).unwrap();
        assert_eq!(report.cut, 4);
        assert_eq!(report.jk_gens, 4);
        assert!(!report.betti_splitting);
        assert!(!report.point_splitting);
        assert_eq!(report.jk.alpha(), &Partition::new(vec![3, 2, 2, 1, 1]).unwrap());
    }

    #[test]
    fn pure_generator_check() {
        let o = PrimeOracle::default();
        for x in [fixtures::six_point_non_acm(), fixtures::twenty_point_staircase().to_point_set()] {
            let gens = o.point_generators(&x, point_set_box(&x)).unwrap();
            assert!(check_no_two_point_ideal_partition(&gens).unwrap());
        }
        let two: Counts = [(bd(2, 0), 1), (bd(3, 0), 1), (bd(0, 1), 1)].into_iter().collect();
        assert_eq!(
            check_no_two_point_ideal_partition(&two),
            Err(Error::PureGeneratorCount { horizontal: 2, vertical: 1 })
        );
    }

    #[test]
    fn numeric_tables_on_small_arrangement() {
        let o = PrimeOracle::default();
        let c = AcmConfig::standard(Partition::new(vec![3, 2, 1]).unwrap());
        let g = min_gens(&c);
        let bound = default_box(g.frame());
        for s in enumerate_bipartitions(&g).unwrap() {
            let t = oracle_split_tables(&o, &s, bound).unwrap();
            assert_eq!(t.additive(), is_betti_splitting_structural(&s).unwrap());
        }
    }

    #[test]
    fn product_experiment_on_six_points() {
        let o = PrimeOracle::default();
        let x = fixtures::six_point_non_acm();
        let e = ruling_product_experiment(&o, &x, point_set_box(&x)).unwrap();
        assert_eq!(e.generator_degrees.len(), 6);
        assert_eq!(e.product_degrees, e.generator_degrees);
        assert!(!e.has_others());
        assert_eq!(e.candidates.len(), 15);
        // {f1, f2, g1} with g1 = H1H2V4 cuts out nine points and is their ideal.
        let g1 = e.candidates.iter().find(|c| c.a_prime == ["H1H2·V4"]).unwrap();
        assert_eq!(g1.zero_set.len(), 9);
        assert!(g1.point_ideal);
        let ci = e.candidates.iter().find(|c| c.a_prime.is_empty()).unwrap();
        assert_eq!(ci.zero_set.len(), 12);
        assert!(ci.point_ideal);
    }

    proptest! {
        #[test]
        fn cut_theorem_structurally(parts in prop::collection::vec(1usize..5, 1..5), eh in 0usize..2, ev in 0usize..2, mask in 1u64..64) {
            let mut parts = parts;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let c = AcmConfig::standard(Partition::new(parts).unwrap());
            let w = crate::staircase::attach_fresh_lines(&c, eh, ev);
            let g = w.generators();
            prop_assume!(g.len() >= 2);
            let n = g.len();
            let sides: Vec<Side> = (0..n).map(|i| if i == 0 || mask >> i & 1 == 0 { Side::A } else { Side::B }).collect();
            prop_assume!(sides.contains(&Side::B));
            let s = SplitPartition::new(g, sides).unwrap();
            prop_assert_eq!(min_gen_count(&meet(&s).unwrap()), s.cut_number());
        }
    }
}
