//! Randomized theorem checking.
//!
//! Each suite draws its instances from a ChaCha stream keyed by
//! `(seed, suite, trial)`, so any failure is reproduced by rerunning that
//! single trial. Trials run in parallel and are merged by index.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::configurations::{AcmConfig, GridPointSet, Label};
use crate::error::Result;
use crate::oracle::{default_box, point_set_box, IdealModel, Locus, PrimeField, PrimeOracle};
use crate::partitions::Partition;
use crate::resolutions::{betti_table, cx_vx};
use crate::splittings::{oracle_split_tables, SplitPartition};
use crate::staircase::{self, min_gen_count, recognize, Arrangement, Frame, GeneratorSet};

pub type IntersectFn = fn(&Arrangement, &Arrangement) -> Result<Arrangement>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    ConjugateInvolution,
    AcmClassification,
    CutTheorem,
    BettiAdditivity,
    PureGenerators,
    ProductEquality,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::ConjugateInvolution,
        Suite::AcmClassification,
        Suite::CutTheorem,
        Suite::BettiAdditivity,
        Suite::PureGenerators,
        Suite::ProductEquality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ConjugateInvolution => "conjugate_involution",
            Suite::AcmClassification => "acm_classification",
            Suite::CutTheorem => "cut_theorem",
            Suite::BettiAdditivity => "betti_additivity",
            Suite::PureGenerators => "pure_generators",
            Suite::ProductEquality => "product_equality",
        }
    }

    fn index(self) -> u64 {
        Self::ALL.iter().position(|s| *s == self).expect("listed") as u64
    }
}

#[derive(Clone, Debug)]
pub struct Campaign {
    pub seed: u64,
    pub trials: usize,
    /// Largest number of horizontal and vertical rulings in an instance.
    pub bound: (usize, usize),
    pub prime: u64,
    pub intersect: IntersectFn,
}

impl Campaign {
    pub fn new(seed: u64, trials: usize) -> Self {
        Self { seed, trials, bound: (6, 6), prime: crate::oracle::DEFAULT_PRIME, intersect: staircase::intersect }
    }

    /// The random stream of one trial.
    pub fn rng(&self, suite: Suite, trial: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(suite.index() << 32 | trial as u64);
        rng
    }

    pub fn run(&self) -> Result<CampaignReport> {
        let suites = Suite::ALL.iter().map(|&s| self.run_suite(s)).collect::<Result<Vec<_>>>()?;
        Ok(CampaignReport { seed: self.seed, trials: self.trials, suites })
    }

    pub fn run_suite(&self, suite: Suite) -> Result<SuiteReport> {
        let oracle = PrimeOracle::new(PrimeField::new(self.prime)?);
        let outcomes: Vec<std::result::Result<(), Value>> =
            (0..self.trials).into_par_iter().map(|t| self.run_trial(&oracle, suite, t)).collect();
        let failures: Vec<Failure> = outcomes
            .into_iter()
            .enumerate()
            .filter_map(|(trial, r)| r.err().map(|detail| Failure { trial, detail }))
            .collect();
        Ok(SuiteReport {
            suite: suite.name(),
            passed: self.trials - failures.len(),
            failed: failures.len(),
            failures,
        })
    }

    /// One instance of one suite; `Err` carries the counterexample.
    pub fn run_trial(&self, o: &PrimeOracle, suite: Suite, trial: usize) -> std::result::Result<(), Value> {
        let mut rng = self.rng(suite, trial);
        let (mh, mv) = self.bound;
        let outcome = match suite {
            Suite::ConjugateInvolution => conjugate_trial(&mut rng, mh, mv),
            Suite::AcmClassification => acm_trial(o, &mut rng, mh, mv),
            Suite::CutTheorem => cut_trial(o, &mut rng, mh, mv, self.intersect),
            Suite::BettiAdditivity => additivity_trial(o, &mut rng, mh, mv),
            Suite::PureGenerators => pure_trial(o, &mut rng, mh.min(5), mv.min(5)),
            Suite::ProductEquality => product_trial(o, &mut rng, mh, mv),
        };
        outcome.map_err(|detail| json!({"seed": self.seed, "suite": suite.name(), "trial": trial, "detail": detail}))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteReport>,
}

impl CampaignReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(|s| s.failed == 0)
    }
}

type Trial = std::result::Result<(), Value>;

fn fail(e: crate::error::Error) -> Value {
    json!({"error": e.to_string()})
}

/// A partition with at most `rows` parts, each at most `cols`.
pub fn random_partition<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Partition {
    let n = rng.gen_range(1..=rows);
    Partition::normalize((0..n).map(|_| rng.gen_range(1..=cols)))
}

/// Distinct labels drawn from `1..=2k`, in random order.
fn random_labels<R: Rng>(rng: &mut R, k: usize) -> Vec<Label> {
    let mut pool: Vec<Label> = (1..=2 * k as Label).collect();
    pool.shuffle(rng);
    pool.truncate(k);
    pool
}

pub fn random_acm<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> AcmConfig {
    let alpha = random_partition(rng, rows, cols);
    let h = random_labels(rng, alpha.len());
    let v = random_labels(rng, alpha.largest());
    AcmConfig::from_partition(alpha, &h, &v).expect("labels fit")
}

/// Lines plus ACM points with at most `max_gens` minimal generators, inside
/// an `n_h x n_v` standard frame.
pub fn random_arrangement<R: Rng>(rng: &mut R, n_h: usize, n_v: usize, max_gens: usize) -> Arrangement {
    loop {
        let line_h = rng.gen_range(0..=n_h.min(2));
        let line_v = rng.gen_range(0..=n_v.min(2));
        let alpha = if line_h < n_h && line_v < n_v && rng.gen_bool(0.9) {
            random_partition(rng, n_h - line_h, n_v - line_v)
        } else {
            Partition::empty()
        };
        if line_h + line_v == 0 && alpha.is_empty() {
            continue;
        }
        let w = Arrangement::new(Frame::standard(n_h, n_v), line_h, line_v, alpha).expect("fits the frame");
        if min_gen_count(&w) <= max_gens {
            return w;
        }
    }
}

/// Between `min` and `max` distinct cells of an `h x v` grid.
pub fn random_grid_set<R: Rng>(rng: &mut R, h: usize, v: usize, min: usize, max: usize) -> GridPointSet {
    let mut cells: Vec<(Label, Label)> =
        (1..=h as Label).flat_map(|a| (1..=v as Label).map(move |b| (a, b))).collect();
    cells.shuffle(rng);
    let k = rng.gen_range(min..=max.min(cells.len()));
    cells.truncate(k);
    GridPointSet::from_cells(cells).expect("distinct cells")
}

/// A nonempty subset of the positions `0..n`.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    loop {
        let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

/// A random bipartition with both sides nonempty.
pub fn random_bipartition<R: Rng>(rng: &mut R, g: &GeneratorSet) -> Option<SplitPartition> {
    let n = g.len();
    if n < 2 {
        return None;
    }
    loop {
        let a = random_subset(rng, n);
        if a.len() < n {
            return Some(SplitPartition::from_side_a(g.clone(), &a).expect("proper"));
        }
    }
}

fn conjugate_trial(rng: &mut ChaCha8Rng, mh: usize, mv: usize) -> Trial {
    let p = random_partition(rng, mh, mv);
    let q = p.conjugate();
    if q.conjugate() != p || q.size() != p.size() {
        return Err(json!({"alpha": p, "conjugate": q}));
    }
    Ok(())
}

fn acm_trial(o: &PrimeOracle, rng: &mut ChaCha8Rng, mh: usize, mv: usize) -> Trial {
    let x = random_grid_set(rng, mh.min(5), mv.min(5), 1, 12);
    let oracle = o.is_acm(&x, point_set_box(&x)).map_err(fail)?;
    if oracle != x.is_acm() {
        return Err(json!({"points": x, "combinatorial": x.is_acm(), "oracle": oracle}));
    }
    Ok(())
}

fn cut_trial(o: &PrimeOracle, rng: &mut ChaCha8Rng, mh: usize, mv: usize, meet: IntersectFn) -> Trial {
    let w = random_arrangement(rng, mh, mv, 6);
    let Some(s) = random_bipartition(rng, &w.generators()) else { return Ok(()) };
    let (j, k) = s.arrangements().map_err(fail)?;
    let predicted = meet(&j, &k).map_err(fail)?;
    let count = min_gen_count(&predicted);
    let bound = default_box(w.frame());
    let jf = o.generator_forms(&j.generators()).map_err(fail)?;
    let kf = o.generator_forms(&k.generators()).map_err(fail)?;
    let model = IdealModel::intersection(IdealModel::Generated(jf), IdealModel::Generated(kf));
    let numeric: usize = o
        .piece_grid(&model, bound)
        .and_then(|g| o.beta0_box(&g))
        .map_err(fail)?
        .values()
        .sum();
    if count != s.cut_number() || numeric != count {
        return Err(json!({
            "arrangement": w,
            "A": s.positions(crate::splittings::Side::A),
            "cut": s.cut_number(),
            "intersect_gens": count,
            "oracle_gens": numeric,
        }));
    }
    Ok(())
}

fn additivity_trial(o: &PrimeOracle, rng: &mut ChaCha8Rng, mh: usize, mv: usize) -> Trial {
    let w = random_arrangement(rng, mh.min(5), mv.min(5), 6);
    let Some(s) = random_bipartition(rng, &w.generators()) else { return Ok(()) };
    let tables = oracle_split_tables(o, &s, default_box(w.frame())).map_err(fail)?;
    if tables.additive() != (s.cut_number() == 1) {
        return Err(json!({
            "arrangement": w,
            "A": s.positions(crate::splittings::Side::A),
            "cut": s.cut_number(),
            "additive": tables.additive(),
        }));
    }
    Ok(())
}

fn pure_trial(o: &PrimeOracle, rng: &mut ChaCha8Rng, mh: usize, mv: usize) -> Trial {
    let x = random_grid_set(rng, mh, mv, 3, 15);
    let gens = o.point_generators(&x, point_set_box(&x)).map_err(fail)?;
    crate::splittings::check_no_two_point_ideal_partition(&gens)
        .map(|_| ())
        .map_err(|e| json!({"points": x, "error": e.to_string()}))
}

fn product_trial(o: &PrimeOracle, rng: &mut ChaCha8Rng, mh: usize, mv: usize) -> Trial {
    let w = random_arrangement(rng, mh, mv, usize::MAX);
    let bound = default_box(w.frame());
    let generated = o.arrangement_ideal(&w).map_err(fail)?;
    let lambda = o.prefix_product(w.frame(), w.line_degree()).map_err(fail)?;
    let product = IdealModel::multiple(lambda, IdealModel::Vanishing(Locus::of_acm(&w.points())));
    if !o.ideals_equal_on_box(&generated, &product, bound).map_err(fail)? {
        return Err(json!({"arrangement": w, "check": "product"}));
    }
    let g = w.generators();
    let s = g.select(random_subset(rng, g.len()));
    let r = recognize(&s).map_err(fail)?;
    let sub = IdealModel::Generated(o.generator_forms(&s).map_err(fail)?);
    if !o.ideals_equal_on_box(&sub, &o.arrangement_ideal(&r).map_err(fail)?, bound).map_err(fail)? {
        return Err(json!({"generators": s, "recognized": r, "check": "subset"}));
    }
    Ok(())
}

/// The closed-form table of an ACM configuration against the oracle's
/// Koszul computation and the `β_0 = β_1 + 1` count.
pub fn resolution_matches_oracle(o: &PrimeOracle, c: &AcmConfig) -> Result<bool> {
    let w = Arrangement::from_acm(c);
    let bound = default_box(w.frame());
    let numeric = o.koszul_table(&IdealModel::Vanishing(Locus::of_acm(c)), bound)?;
    let closed = betti_table(&w);
    let (cx, vx) = cx_vx(c.alpha())?;
    Ok(numeric == closed && cx.len() == vx.len() + 1 && closed.total(0) == closed.total(1) + 1)
}
