use super::*;
use crate::fixtures;
use crate::partitions::Partition;
use crate::resolutions::{betti_table, cx_vx};
use crate::staircase::{min_gens, recognize};

fn oracle() -> PrimeOracle {
    Oracle::new(PrimeField::default())
}

fn bd(a: usize, b: usize) -> Bidegree {
    Bidegree::new(a, b)
}

fn counts(pairs: &[(usize, usize)]) -> Counts {
    pairs.iter().map(|&(a, b)| (bd(a, b), 1)).collect()
}

fn single_point() -> GridPointSet {
    GridPointSet::from_cells([(1, 1)]).unwrap()
}

/// `(x0_exp, x1_exp, y0_exp, y1_exp, coeff)` with the two coordinates of
/// each factor swapped, so `[1:n]` roots become `[n:1]` roots.
fn swapped(f: &PrimeField, terms: &[(usize, usize, usize, usize, i64)]) -> BiForm<u64> {
    let t: Vec<_> = terms.iter().map(|&(a, b, c, d, k)| (b, a, d, c, k)).collect();
    form::from_terms(f, &t)
}

fn linear_x(f: &PrimeField, c0: i64, c1: i64) -> BiForm<u64> {
    swapped(f, &[(1, 0, 0, 0, c0), (0, 1, 0, 0, c1)])
}

fn linear_y(f: &PrimeField, c0: i64, c1: i64) -> BiForm<u64> {
    swapped(f, &[(0, 0, 1, 0, c0), (0, 0, 0, 1, c1)])
}

fn product(f: &PrimeField, factors: &[BiForm<u64>]) -> BiForm<u64> {
    factors.iter().skip(1).fold(factors[0].clone(), |acc, g| acc.mul(f, g))
}

/// The six generators printed for the non-ACM six-point example, in the
/// order `f1, f2, g1, g2, g3, g4`.
fn printed_generators(f: &PrimeField) -> Vec<BiForm<u64>> {
    let x = |k| linear_x(f, k, -1);
    let y = |k| linear_y(f, k, -1);
    let f1 = product(f, &[y(1), y(2), y(3), y(4)]);
    let f2 = product(f, &[x(1), x(2), x(3)]);
    let g1 = product(f, &[x(1), x(2), y(4)]);
    let g2 = product(f, &[y(1), y(2), swapped(f, &[(0, 1, 1, 0, 24), (1, 0, 0, 1, -3), (0, 1, 0, 1, -5)])]);
    let g3 = product(f, &[y(1), y(2), swapped(f, &[(1, 0, 1, 0, 24), (1, 0, 0, 1, -9), (0, 1, 0, 1, 1)])]);
    let quartic = swapped(f, &[(0, 1, 2, 0, 16), (0, 1, 1, 1, -24), (1, 0, 0, 2, 18), (0, 1, 0, 2, -1)]);
    let g4 = product(f, &[x(1), quartic]);
    vec![f1, f2, g1, g2, g3, g4]
}

#[test]
fn ruling_forms() {
    let o = oracle();
    let f = o.field();
    let h2 = o.ruling_form(Orientation::Horizontal, 2).unwrap();
    assert_eq!(h2.degree(), bd(1, 0));
    assert_eq!(h2.coeffs(), &[1, DEFAULT_PRIME - 2]);
    assert_eq!(h2.eval(f, (&2, &1), (&7, &1)), 0);
    let v1 = o.ruling_form(Orientation::Vertical, 1).unwrap();
    assert_eq!(v1.coeffs(), &[1, DEFAULT_PRIME - 1]);
    let h3 = o.ruling_form(Orientation::Horizontal, 3).unwrap();
    assert_eq!(linalg::rank(f, vec![h2.coeffs().to_vec(), h3.coeffs().to_vec()], 2), 2);
    assert!(matches!(o.ruling_form(Orientation::Vertical, 0), Err(Error::LabelOutOfField { .. })));
    assert!(o.ruling_form(Orientation::Vertical, DEFAULT_PRIME).is_err());
}

#[test]
fn pointset_dims() {
    let o = oracle();
    assert_eq!(o.pointset_piece_dim(&single_point(), bd(1, 1)).unwrap(), 3);
    let runex = fixtures::twenty_point_staircase().to_point_set();
    assert_eq!(o.pointset_piece_dim(&runex, bd(7, 5)).unwrap(), 28);
    assert_eq!(o.pointset_piece_dim(&GridPointSet::empty(), bd(2, 3)).unwrap(), 12);
    assert_eq!(o.pointset_piece(&runex, bd(7, 5)).unwrap().dim(), 28);
}

#[test]
fn generated_dims() {
    let o = oracle();
    let h1 = o.ruling_form(Orientation::Horizontal, 1).unwrap();
    let v1 = o.ruling_form(Orientation::Vertical, 1).unwrap();
    assert_eq!(o.generated_piece_dim(std::slice::from_ref(&h1), bd(1, 0)), 1);
    assert_eq!(o.generated_piece_dim(&[h1.clone(), v1.clone()], bd(1, 1)), 3);
    assert_eq!(o.generated_piece_dim(&[], bd(2, 2)), 0);
    let point = o.pointset_piece(&single_point(), bd(1, 1)).unwrap();
    assert_eq!(o.generated_piece(&[h1, v1], bd(1, 1)), point);
}

#[test]
fn runex_generators_and_syzygies() {
    let o = oracle();
    let c = fixtures::twenty_point_staircase();
    let ideal = IdealModel::Vanishing(Locus::of_acm(&c));
    let grid = o.piece_grid(&ideal, bd(8, 6)).unwrap();
    let beta0 = o.beta0_box(&grid).unwrap();
    assert_eq!(beta0, counts(&[(7, 0), (0, 5), (1, 4), (2, 3), (4, 2), (6, 1)]));
    let beta1 = o.beta1_box(&grid.dims(), &beta0, bd(8, 6)).unwrap();
    assert_eq!(beta1, counts(&[(1, 5), (2, 4), (4, 3), (6, 2), (7, 1)]));
    let (cx, vx) = cx_vx(c.alpha()).unwrap();
    assert_eq!(beta0.keys().copied().collect::<BTreeSet<_>>(), cx);
    assert_eq!(beta1.keys().copied().collect::<BTreeSet<_>>(), vx);
    let koszul = o.koszul_betti(&grid, 2).unwrap();
    assert_eq!(koszul[0], beta0);
    assert_eq!(koszul[1], beta1);
    assert!(koszul[2].is_empty());
}

#[test]
fn single_point_and_principal_tables() {
    let o = oracle();
    let ideal = IdealModel::Vanishing(Locus::of_points(&single_point()));
    let t = o.betti_table(&ideal, bd(2, 2)).unwrap();
    assert_eq!(t.degree(0), counts(&[(1, 0), (0, 1)]));
    assert_eq!(t.degree(1), counts(&[(1, 1)]));
    let lines = Arrangement::standard(2, 1, Partition::empty());
    let ideal = o.arrangement_ideal(&lines).unwrap();
    let t = o.betti_table(&ideal, default_box(lines.frame())).unwrap();
    assert_eq!(t.degree(0), counts(&[(2, 1)]));
    assert!(t.degree(1).is_empty());
}

#[test]
fn arrangement_tables_match_closed_form() {
    let o = oracle();
    let w = recognize(&GeneratorSet::new([bd(1, 4), bd(4, 2), bd(7, 0)], crate::staircase::Frame::standard(7, 4)).unwrap())
        .unwrap();
    let ideal = o.arrangement_ideal(&w).unwrap();
    let bound = default_box(w.frame());
    assert_eq!(o.betti_table(&ideal, bound).unwrap(), betti_table(&w));
    assert_eq!(o.koszul_table(&ideal, bound).unwrap(), betti_table(&w));
}

#[test]
fn box_too_small_is_reported() {
    let o = oracle();
    let c = fixtures::twenty_point_staircase();
    let grid = o.piece_grid(&IdealModel::Vanishing(Locus::of_acm(&c)), bd(7, 5)).unwrap();
    assert_eq!(o.beta0_box(&grid), Err(Error::BoxTooSmall(bd(7, 5))));
}

#[test]
fn six_points() {
    let o = oracle();
    let x = fixtures::six_point_non_acm();
    let bound = point_set_box(&x);
    let gens = o.point_generators(&x, bound).unwrap();
    let pure: Vec<Bidegree> = gens.keys().copied().filter(|d| d.a == 0 || d.b == 0).collect();
    assert_eq!(pure, vec![bd(0, 4), bd(3, 0)]);
    assert_eq!(gens.values().sum::<usize>(), 6);
    assert!(!o.is_acm(&x, bound).unwrap());
    assert!(o.is_acm(&fixtures::twenty_point_staircase().to_point_set(), bd(8, 6)).unwrap());
}

#[test]
fn printed_generators_cut_out_the_six_points() {
    let o = oracle();
    let f = *o.field();
    let x = fixtures::six_point_non_acm();
    let gens = printed_generators(&f);
    let degrees: Vec<Bidegree> = gens.iter().map(|g| g.degree()).collect();
    assert_eq!(degrees, vec![bd(0, 4), bd(3, 0), bd(2, 1), bd(1, 3), bd(1, 3), bd(2, 2)]);
    let bound = point_set_box(&x);
    let printed = IdealModel::Generated(gens.clone());
    assert!(o.ideals_equal_on_box(&printed, &IdealModel::Vanishing(Locus::of_points(&x)), bound).unwrap());

    // A = {f1, f2, g2}: its zero set is eight points, but it is not their ideal.
    let a = IdealModel::Generated(vec![gens[0].clone(), gens[1].clone(), gens[3].clone()]);
    let zeros = zero_set(&o, &[&gens[0], &gens[1], &gens[3]]);
    assert_eq!(zeros.len(), 8);
    let y = GridPointSet::from_cells(zeros).unwrap();
    assert!(!o.ideals_equal_on_box(&a, &IdealModel::Vanishing(Locus::of_points(&y)), bound).unwrap());

    // A = {f1, f2, g1}: the ideal of nine points.
    let a = IdealModel::Generated(vec![gens[0].clone(), gens[1].clone(), gens[2].clone()]);
    let zeros = zero_set(&o, &[&gens[0], &gens[1], &gens[2]]);
    let expected = [(1, 1), (2, 1), (1, 2), (2, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)];
    assert_eq!(zeros, expected.into_iter().collect::<BTreeSet<_>>());
    let y = GridPointSet::from_cells(zeros).unwrap();
    assert!(o.ideals_equal_on_box(&a, &IdealModel::Vanishing(Locus::of_points(&y)), bound).unwrap());
}

fn zero_set(o: &PrimeOracle, gens: &[&BiForm<u64>]) -> BTreeSet<(Label, Label)> {
    let f = o.field();
    let mut out = BTreeSet::new();
    for h in 1..=3u64 {
        for v in 1..=4u64 {
            if gens.iter().all(|g| f.is_zero(&g.eval(f, (&h, &1), (&v, &1)))) {
                out.insert((h, v));
            }
        }
    }
    out
}

#[test]
fn intersection_dims() {
    let o = oracle();
    let h1 = o.ruling_form(Orientation::Horizontal, 1).unwrap();
    let v1 = o.ruling_form(Orientation::Vertical, 1).unwrap();
    assert_eq!(o.sum_and_intersection_dims(std::slice::from_ref(&h1), std::slice::from_ref(&v1), bd(1, 1)), (2, 2, 3, 1));
    let meet = o
        .piece(&IdealModel::intersection(IdealModel::Generated(vec![h1.clone()]), IdealModel::Generated(vec![v1.clone()])), bd(1, 1))
        .unwrap();
    assert_eq!(meet, o.generated_piece(&[h1.mul(o.field(), &v1)], bd(1, 1)));
    let j = [h1.clone(), v1];
    let (dj, _, _, dm) = o.sum_and_intersection_dims(&j, &j, bd(2, 2));
    assert_eq!(dj, dm);
}

#[test]
fn ideal_equality() {
    let o = oracle();
    let h1 = IdealModel::Generated(vec![o.ruling_form(Orientation::Horizontal, 1).unwrap()]);
    let h2 = IdealModel::Generated(vec![o.ruling_form(Orientation::Horizontal, 2).unwrap()]);
    assert!(!o.ideals_equal_on_box(&h1, &h2, bd(2, 2)).unwrap());
    assert!(o.ideals_equal_on_box(&h1, &h1.clone(), bd(2, 2)).unwrap());

    let c = fixtures::twenty_point_staircase();
    let s = min_gens(&c);
    let generated = IdealModel::Generated(o.generator_forms(&s).unwrap());
    let vanishing = IdealModel::Vanishing(Locus::of_acm(&c));
    assert!(o.ideals_equal_on_box(&generated, &vanishing, bd(8, 6)).unwrap());
}

#[test]
fn product_with_lines() {
    let o = oracle();
    let w = Arrangement::standard(1, 2, Partition::new(vec![2, 1]).unwrap());
    let lambda = o.prefix_product(w.frame(), w.line_degree()).unwrap();
    let points = IdealModel::Vanishing(Locus::of_acm(&w.points()));
    let bound = default_box(w.frame());
    let generated = o.arrangement_ideal(&w).unwrap();
    assert!(o.ideals_equal_on_box(&generated, &IdealModel::multiple(lambda, points), bound).unwrap());
    assert!(o.ideals_equal_on_box(&generated, &IdealModel::Vanishing(Locus::of_arrangement(&w)), bound).unwrap());
}

#[test]
fn rationals_agree_with_prime_field() {
    let q = RationalOracle::default();
    let p = oracle();
    let x = fixtures::six_point_non_acm();
    for d in bd(3, 4).box_cells() {
        assert_eq!(q.pointset_piece_dim(&x, d).unwrap(), p.pointset_piece_dim(&x, d).unwrap());
    }
}

#[test]
fn dim_table_json() {
    let o = oracle();
    let t = o.dim_table(&IdealModel::Vanishing(Locus::of_points(&single_point())), bd(1, 0)).unwrap();
    let json = serde_json::to_string(&t).unwrap();
    assert_eq!(json, r#"[{"a":0,"b":0,"dim":0},{"a":1,"b":0,"dim":1}]"#);
    assert_eq!(serde_json::from_str::<DimTable>(&json).unwrap(), t);
}
