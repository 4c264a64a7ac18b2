//! Ideals of unions of lines and ACM points in prefix-product normal form.
//!
//! Every generator here is a product `H_1⋯H_a · V_1⋯V_b` over a fixed
//! [`Frame`] of rulings, so it is recorded by its bidegree `(a, b)` alone.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::configurations::{render_grid, AcmConfig, Diagram, Label};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A bidegree `(a, b)`: degree `a` in the x-variables and `b` in the
/// y-variables. Serialized as `[a, b]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Bidegree {
    pub a: usize,
    pub b: usize,
}

impl Bidegree {
    pub const ZERO: Self = Self { a: 0, b: 0 };

    pub const fn new(a: usize, b: usize) -> Self {
        Self { a, b }
    }

    /// Componentwise `<=`.
    pub fn divides(self, other: Self) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    pub fn checked_sub(self, other: Self) -> Option<Self> {
        Some(Self { a: self.a.checked_sub(other.a)?, b: self.b.checked_sub(other.b)? })
    }

    pub fn meet(self, other: Self) -> Self {
        Self { a: self.a.min(other.a), b: self.b.min(other.b) }
    }

    /// Cells of the box `[0, self.a] x [0, self.b]` in increasing order.
    pub fn box_cells(self) -> impl Iterator<Item = Bidegree> {
        (0..=self.a).flat_map(move |a| (0..=self.b).map(move |b| Bidegree::new(a, b)))
    }
}

impl Add for Bidegree {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl From<(usize, usize)> for Bidegree {
    fn from((a, b): (usize, usize)) -> Self {
        Self { a, b }
    }
}

impl From<Bidegree> for (usize, usize) {
    fn from(d: Bidegree) -> Self {
        (d.a, d.b)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// The ordered rulings every prefix product refers to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frame {
    h_labels: Vec<Label>,
    v_labels: Vec<Label>,
}

impl Frame {
    pub fn new(h_labels: Vec<Label>, v_labels: Vec<Label>) -> Result<Self> {
        for labels in [&h_labels, &v_labels] {
            let mut seen = BTreeSet::new();
            for &l in labels {
                if l == 0 {
                    return Err(Error::ZeroLabel);
                }
                if !seen.insert(l) {
                    return Err(Error::DuplicateLabel(l));
                }
            }
        }
        Ok(Self { h_labels, v_labels })
    }

    /// Labels `1..=n_h` and `1..=n_v`.
    pub fn standard(n_h: usize, n_v: usize) -> Self {
        Self {
            h_labels: (1..=n_h as Label).collect(),
            v_labels: (1..=n_v as Label).collect(),
        }
    }

    pub fn h_labels(&self) -> &[Label] {
        &self.h_labels
    }

    pub fn v_labels(&self) -> &[Label] {
        &self.v_labels
    }

    /// `(n_h, n_v)`.
    pub fn ambient(&self) -> Bidegree {
        Bidegree::new(self.h_labels.len(), self.v_labels.len())
    }

    pub fn max_label(&self) -> Label {
        self.h_labels.iter().chain(&self.v_labels).copied().max().unwrap_or(0)
    }

    fn is_standard(&self) -> bool {
        *self == Self::standard(self.h_labels.len(), self.v_labels.len())
    }
}

/// A minimal generating set of prefix products: an antichain of bidegrees,
/// kept in standard order (decreasing `b`, equivalently increasing `a`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    gens: Vec<Bidegree>,
    frame: Frame,
}

impl GeneratorSet {
    pub fn new<I: IntoIterator<Item = Bidegree>>(gens: I, frame: Frame) -> Result<Self> {
        let mut gens: Vec<Bidegree> = gens.into_iter().collect();
        let ambient = frame.ambient();
        for &g in &gens {
            if !g.divides(ambient) {
                return Err(Error::OutOfAmbient { deg: g, n_h: ambient.a, n_v: ambient.b });
            }
        }
        for (i, &g) in gens.iter().enumerate() {
            for &h in &gens[i + 1..] {
                if g.divides(h) || h.divides(g) {
                    return Err(Error::NotAntichain(g, h));
                }
            }
        }
        gens.sort_by_key(|g| std::cmp::Reverse(g.b));
        Ok(Self { gens, frame })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// The tuple τ: generators in standard order.
    pub fn standard_order(&self) -> &[Bidegree] {
        &self.gens
    }

    pub fn contains(&self, g: Bidegree) -> bool {
        self.gens.contains(&g)
    }

    /// Generators at the given positions of τ (0-based).
    pub fn select(&self, positions: impl IntoIterator<Item = usize>) -> Self {
        let gens = positions.into_iter().map(|i| self.gens[i]).collect();
        Self { gens, frame: self.frame.clone() }
    }

    /// Symbolic product for a generator, e.g. `H1H2·V1V2V3`.
    pub fn describe(&self, g: Bidegree) -> String {
        describe_product(&self.frame, g)
    }
}

pub(crate) fn describe_product(frame: &Frame, g: Bidegree) -> String {
    let label = |prefix: char, labels: &[Label], n: usize| -> String {
        labels[..n].iter().map(|l| format!("{prefix}{l}")).collect()
    };
    let h = label('H', frame.h_labels(), g.a);
    let v = label('V', frame.v_labels(), g.b);
    match (h.is_empty(), v.is_empty()) {
        (true, true) => "1".to_string(),
        (false, true) => h,
        (true, false) => v,
        (false, false) => format!("{h}·{v}"),
    }
}

#[derive(Serialize, Deserialize)]
struct GeneratorSetJson {
    gens: Vec<Bidegree>,
    ambient: Bidegree,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h_labels: Option<Vec<Label>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v_labels: Option<Vec<Label>>,
}

impl Serialize for GeneratorSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let custom = !self.frame.is_standard();
        GeneratorSetJson {
            gens: self.gens.clone(),
            ambient: self.frame.ambient(),
            h_labels: custom.then(|| self.frame.h_labels.clone()),
            v_labels: custom.then(|| self.frame.v_labels.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneratorSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = GeneratorSetJson::deserialize(d)?;
        let (n_h, n_v) = (json.ambient.a, json.ambient.b);
        let h = json.h_labels.unwrap_or_else(|| (1..=n_h as Label).collect());
        let v = json.v_labels.unwrap_or_else(|| (1..=n_v as Label).collect());
        if h.len() != n_h || v.len() != n_v {
            return Err(D::Error::custom("label lists disagree with ambient"));
        }
        let frame = Frame::new(h, v).map_err(D::Error::custom)?;
        GeneratorSet::new(json.gens, frame).map_err(D::Error::custom)
    }
}

/// Generators of the ideal of an ACM configuration, over the configuration's
/// own rulings: `(h,0)`, `(0,α_1)` and `(i, α_{i+1})` for every drop `i`.
pub fn min_gens(c: &AcmConfig) -> GeneratorSet {
    let frame = Frame { h_labels: c.h_labels().to_vec(), v_labels: c.v_labels().to_vec() };
    GeneratorSet { gens: staircase_gens(c.alpha()), frame }
}

/// The bidegrees of [`min_gens`] in standard order, for a bare partition.
pub fn staircase_gens(alpha: &Partition) -> Vec<Bidegree> {
    if alpha.is_empty() {
        return vec![Bidegree::ZERO];
    }
    let mut gens = vec![Bidegree::new(0, alpha.largest())];
    gens.extend(alpha.drops().into_iter().map(|i| Bidegree::new(i, alpha.part(i + 1))));
    gens.push(Bidegree::new(alpha.len(), 0));
    gens
}

/// A union of lines and ACM points: the first `line_h` horizontal and
/// `line_v` vertical rulings of the frame are full lines, and the points form
/// the Ferrers diagram of `alpha` on the rulings immediately after them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrangement {
    frame: Frame,
    line_h: usize,
    line_v: usize,
    alpha: Partition,
}

impl Arrangement {
    pub fn new(frame: Frame, line_h: usize, line_v: usize, alpha: Partition) -> Result<Self> {
        let ambient = frame.ambient();
        if line_h + alpha.len() > ambient.a || line_v + alpha.largest() > ambient.b {
            return Err(Error::ArrangementOverflow);
        }
        Ok(Self { frame, line_h, line_v, alpha })
    }

    /// The smallest standard frame holding the lines and the points.
    pub fn standard(line_h: usize, line_v: usize, alpha: Partition) -> Self {
        let frame = Frame::standard(line_h + alpha.len(), line_v + alpha.largest());
        Self { frame, line_h, line_v, alpha }
    }

    pub fn from_acm(c: &AcmConfig) -> Self {
        let frame = Frame { h_labels: c.h_labels().to_vec(), v_labels: c.v_labels().to_vec() };
        Self { frame, line_h: 0, line_v: 0, alpha: c.alpha().clone() }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn line_h(&self) -> usize {
        self.line_h
    }

    pub fn line_v(&self) -> usize {
        self.line_v
    }

    /// `(line_h, line_v)`: the bidegree of the product of the lines.
    pub fn line_degree(&self) -> Bidegree {
        Bidegree::new(self.line_h, self.line_v)
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn is_pure_lines(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn h_line_labels(&self) -> &[Label] {
        &self.frame.h_labels[..self.line_h]
    }

    pub fn v_line_labels(&self) -> &[Label] {
        &self.frame.v_labels[..self.line_v]
    }

    /// The point part, on the rulings that follow the lines.
    pub fn points(&self) -> AcmConfig {
        AcmConfig::from_partition(
            self.alpha.clone(),
            &self.frame.h_labels[self.line_h..],
            &self.frame.v_labels[self.line_v..],
        )
        .expect("frame labels are distinct and sufficient")
    }

    /// Minimal generators: the point generators shifted by the line degree.
    pub fn generators(&self) -> GeneratorSet {
        let gens = staircase_gens(&self.alpha).into_iter().map(|g| g + self.line_degree()).collect();
        GeneratorSet { gens, frame: self.frame.clone() }
    }

    pub fn min_gen_count(&self) -> usize {
        min_gen_count(self)
    }

    /// Same arrangement over a larger frame whose leading rulings agree.
    pub fn with_frame(&self, frame: Frame) -> Result<Self> {
        let ok = frame.h_labels.starts_with(&self.frame.h_labels[..self.line_h + self.alpha.len()])
            && frame.v_labels.starts_with(&self.frame.v_labels[..self.line_v + self.alpha.largest()]);
        if !ok {
            return Err(Error::AmbientMismatch);
        }
        Self::new(frame, self.line_h, self.line_v, self.alpha.clone())
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lines ({},{}) + points {}", self.line_h, self.line_v, self.alpha)
    }
}

impl Diagram for Arrangement {
    fn render_ferrers(&self) -> String {
        let points: BTreeSet<_> = self.points().cells().collect();
        let h_lines = self.h_line_labels();
        let v_lines = self.v_line_labels();
        render_grid(&self.frame.h_labels, &self.frame.v_labels, |h, v| {
            match (h_lines.contains(&h), v_lines.contains(&v)) {
                (true, true) => '+',
                (true, false) => '-',
                (false, true) => '|',
                _ if points.contains(&(h, v)) => '*',
                _ => '.',
            }
        })
    }
}

#[derive(Serialize, Deserialize)]
struct ArrangementJson {
    line_h: usize,
    line_v: usize,
    alpha: Partition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ambient: Option<Bidegree>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h_labels: Option<Vec<Label>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v_labels: Option<Vec<Label>>,
}

impl Serialize for Arrangement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let minimal = Bidegree::new(self.line_h + self.alpha.len(), self.line_v + self.alpha.largest());
        let standard = self.frame.is_standard();
        ArrangementJson {
            line_h: self.line_h,
            line_v: self.line_v,
            alpha: self.alpha.clone(),
            ambient: (self.frame.ambient() != minimal || !standard).then(|| self.frame.ambient()),
            h_labels: (!standard).then(|| self.frame.h_labels.clone()),
            v_labels: (!standard).then(|| self.frame.v_labels.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Arrangement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = ArrangementJson::deserialize(d)?;
        let minimal = Bidegree::new(json.line_h + json.alpha.len(), json.line_v + json.alpha.largest());
        let ambient = json.ambient.unwrap_or_else(|| {
            Bidegree::new(
                json.h_labels.as_ref().map_or(minimal.a, Vec::len),
                json.v_labels.as_ref().map_or(minimal.b, Vec::len),
            )
        });
        let h = json.h_labels.unwrap_or_else(|| (1..=ambient.a as Label).collect());
        let v = json.v_labels.unwrap_or_else(|| (1..=ambient.b as Label).collect());
        if h.len() != ambient.a || v.len() != ambient.b {
            return Err(D::Error::custom("label lists disagree with ambient"));
        }
        let frame = Frame::new(h, v).map_err(D::Error::custom)?;
        Arrangement::new(frame, json.line_h, json.line_v, json.alpha).map_err(D::Error::custom)
    }
}

/// Splits `⟨S⟩` into its line factor (the gcd of the generators) and the ACM
/// point set generated by the quotients.
pub fn recognize(s: &GeneratorSet) -> Result<Arrangement> {
    let tau = s.standard_order();
    let gcd = tau
        .iter()
        .copied()
        .reduce(Bidegree::meet)
        .ok_or(Error::EmptyGenerators)?;
    // In standard order the quotients run (0, b_0), (a_1, b_1), ..., (a_m, 0)
    // with a increasing; rows a_k+1..=a_{k+1} hold b_k points each.
    let quotients: Vec<Bidegree> = tau.iter().map(|&g| g.checked_sub(gcd).expect("gcd divides")).collect();
    let mut parts = Vec::new();
    for w in quotients.windows(2) {
        parts.extend(std::iter::repeat_n(w[0].b, w[1].a - w[0].a));
    }
    let alpha = Partition::new(parts).map_err(|e| Error::Inconsistent(e.to_string()))?;
    Arrangement::new(s.frame().clone(), gcd.a, gcd.b, alpha)
}

/// Adds full lines to an ACM configuration. The new lines become the
/// leading rulings of the frame.
pub fn attach_lines(c: &AcmConfig, h_lines: &[Label], v_lines: &[Label]) -> Result<Arrangement> {
    for l in h_lines {
        if c.h_labels().contains(l) {
            return Err(Error::LabelCollision(*l));
        }
    }
    for l in v_lines {
        if c.v_labels().contains(l) {
            return Err(Error::LabelCollision(*l));
        }
    }
    let h: Vec<Label> = h_lines.iter().chain(c.h_labels()).copied().collect();
    let v: Vec<Label> = v_lines.iter().chain(c.v_labels()).copied().collect();
    let frame = Frame::new(h, v)?;
    Arrangement::new(frame, h_lines.len(), v_lines.len(), c.alpha().clone())
}

/// [`attach_lines`] with fresh labels above every label of the
/// configuration.
pub fn attach_fresh_lines(c: &AcmConfig, extra_h: usize, extra_v: usize) -> Arrangement {
    let top = c.h_labels().iter().chain(c.v_labels()).copied().max().unwrap_or(0);
    let h: Vec<Label> = (1..=extra_h as Label).map(|k| top + k).collect();
    let v: Vec<Label> = (1..=extra_v as Label).map(|k| top + k).collect();
    attach_lines(c, &h, &v).expect("fresh labels cannot collide")
}

/// The arrangement of `W_1 ∪ W_2`, i.e. the ideal `I(W_1) ∩ I(W_2)`.
///
/// Lines merge by taking the longer prefix. Points lying on a merged line are
/// dropped from each side; what remains of both point sets sits on the same
/// rulings, and the union is taken row by row.
pub fn intersect(w1: &Arrangement, w2: &Arrangement) -> Result<Arrangement> {
    if w1.frame != w2.frame {
        return Err(Error::AmbientMismatch);
    }
    let line_h = w1.line_h.max(w2.line_h);
    let line_v = w1.line_v.max(w2.line_v);
    let restrict = |w: &Arrangement| w.alpha.skip_rows(line_h - w.line_h).trim_columns(line_v - w.line_v);
    let alpha = restrict(w1).componentwise_max(&restrict(w2));
    Arrangement::new(w1.frame.clone(), line_h, line_v, alpha)
}

/// 1 for pure lines; otherwise two pure generators plus one per drop.
pub fn min_gen_count(w: &Arrangement) -> usize {
    if w.is_pure_lines() {
        1
    } else {
        w.alpha.drops().len() + 2
    }
}
