//! Reduced point sets on a grid of rulings, ACM classification and Ferrers
//! configurations.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Rulings are named by positive integers. The oracle places horizontal label
/// `n` at `[n:1]` on the first factor and vertical label `n` at `[n:1]` on the
/// second.
pub type Label = u64;

/// Anything that can be drawn as a dot diagram.
pub trait Diagram {
    /// `*` marks a point, `-` a horizontal line, `|` a vertical line, `+`
    /// the crossing of two lines and `.` an empty grid cell.
    fn render_ferrers(&self) -> String;
}

fn check_labels(labels: &[Label]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &l in labels {
        if l == 0 {
            return Err(Error::ZeroLabel);
        }
        if !seen.insert(l) {
            return Err(Error::DuplicateLabel(l));
        }
    }
    Ok(())
}

/// Orders labels by descending count, ties by ascending label.
fn relabel_order(counts: &BTreeMap<Label, usize>) -> Vec<Label> {
    let mut labels: Vec<Label> = counts.keys().copied().collect();
    labels.sort_by(|a, b| counts[b].cmp(&counts[a]).then(a.cmp(b)));
    labels
}

/// A finite set of reduced points `H_h ∩ V_v`, with the rulings that
/// minimally contain it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CellsJson", into = "CellsJson")]
pub struct GridPointSet {
    h_labels: Vec<Label>,
    v_labels: Vec<Label>,
    cells: BTreeSet<(Label, Label)>,
}

#[derive(Serialize, Deserialize)]
struct CellsJson {
    cells: Vec<(Label, Label)>,
}

impl TryFrom<CellsJson> for GridPointSet {
    type Error = Error;

    fn try_from(json: CellsJson) -> Result<Self> {
        Self::from_cells(json.cells)
    }
}

impl From<GridPointSet> for CellsJson {
    fn from(x: GridPointSet) -> Self {
        CellsJson { cells: x.cells.into_iter().collect() }
    }
}

impl GridPointSet {
    pub fn from_cells<I: IntoIterator<Item = (Label, Label)>>(cells: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        let mut rows: BTreeMap<Label, usize> = BTreeMap::new();
        let mut cols: BTreeMap<Label, usize> = BTreeMap::new();
        for (h, v) in cells {
            if h == 0 || v == 0 {
                return Err(Error::ZeroLabel);
            }
            if !set.insert((h, v)) {
                return Err(Error::DuplicateCell(h, v));
            }
            *rows.entry(h).or_default() += 1;
            *cols.entry(v).or_default() += 1;
        }
        Ok(Self {
            h_labels: relabel_order(&rows),
            v_labels: relabel_order(&cols),
            cells: set,
        })
    }

    pub fn empty() -> Self {
        Self { h_labels: Vec::new(), v_labels: Vec::new(), cells: BTreeSet::new() }
    }

    pub fn cells(&self) -> &BTreeSet<(Label, Label)> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Horizontal rulings, most populated first.
    pub fn h_labels(&self) -> &[Label] {
        &self.h_labels
    }

    /// Vertical rulings, most populated first.
    pub fn v_labels(&self) -> &[Label] {
        &self.v_labels
    }

    pub fn contains(&self, h: Label, v: Label) -> bool {
        self.cells.contains(&(h, v))
    }

    pub fn max_label(&self) -> Label {
        self.h_labels.iter().chain(&self.v_labels).copied().max().unwrap_or(0)
    }

    pub fn row_len(&self, h: Label) -> usize {
        self.cells.range((h, 0)..=(h, Label::MAX)).count()
    }

    pub fn col_len(&self, v: Label) -> usize {
        self.cells.iter().filter(|c| c.1 == v).count()
    }

    /// `(α, β)`: points per horizontal and per vertical ruling, each sorted
    /// non-increasingly.
    pub fn alpha_beta(&self) -> (Partition, Partition) {
        let alpha = Partition::normalize(self.h_labels.iter().map(|&h| self.row_len(h)));
        let beta = Partition::normalize(self.v_labels.iter().map(|&v| self.col_len(v)));
        (alpha, beta)
    }

    pub fn is_acm(&self) -> bool {
        let (alpha, beta) = self.alpha_beta();
        alpha.conjugate() == beta
    }

    /// The Ferrers description of an ACM set; `None` if the set is not ACM.
    pub fn to_acm(&self) -> Option<AcmConfig> {
        if !self.is_acm() {
            return None;
        }
        let (alpha, _) = self.alpha_beta();
        let config = AcmConfig::from_partition(alpha, &self.h_labels, &self.v_labels).ok()?;
        // Rows of an ACM set are nested, so the canonical order is Ferrers.
        debug_assert_eq!(config.to_point_set(), *self);
        Some(config)
    }

    /// Applies injective relabelings to the rulings.
    pub fn relabel(&self, h: impl Fn(Label) -> Label, v: impl Fn(Label) -> Label) -> Result<Self> {
        Self::from_cells(self.cells.iter().map(|&(a, b)| (h(a), v(b))))
    }
}

impl Diagram for GridPointSet {
    fn render_ferrers(&self) -> String {
        let mut rows = self.h_labels.clone();
        let mut cols = self.v_labels.clone();
        rows.sort_unstable();
        cols.sort_unstable();
        render_grid(&rows, &cols, |h, v| if self.contains(h, v) { '*' } else { '.' })
    }
}

pub(crate) fn render_grid(rows: &[Label], cols: &[Label], cell: impl Fn(Label, Label) -> char) -> String {
    let mut out = String::new();
    for &h in rows {
        out.extend(cols.iter().map(|&v| cell(h, v)));
        out.push('\n');
    }
    out
}

/// The Ferrers configuration `{H_{h_i} ∩ V_{v_j} : j <= α_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AcmJson")]
pub struct AcmConfig {
    alpha: Partition,
    h_labels: Vec<Label>,
    v_labels: Vec<Label>,
}

#[derive(Deserialize)]
struct AcmJson {
    alpha: Partition,
    h_labels: Option<Vec<Label>>,
    v_labels: Option<Vec<Label>>,
}

impl TryFrom<AcmJson> for AcmConfig {
    type Error = Error;

    fn try_from(json: AcmJson) -> Result<Self> {
        let h = json.h_labels.unwrap_or_else(|| (1..=json.alpha.len() as Label).collect());
        let v = json.v_labels.unwrap_or_else(|| (1..=json.alpha.largest() as Label).collect());
        Self::from_partition(json.alpha, &h, &v)
    }
}

impl AcmConfig {
    /// Places `alpha` on the given rulings. Extra labels past `len(alpha)`
    /// rows or `alpha[1]` columns are ignored.
    pub fn from_partition(alpha: Partition, h_labels: &[Label], v_labels: &[Label]) -> Result<Self> {
        let (h, v) = (alpha.len(), alpha.largest());
        if h_labels.len() < h {
            return Err(Error::LabelShortage { orientation: "horizontal", needed: h, got: h_labels.len() });
        }
        if v_labels.len() < v {
            return Err(Error::LabelShortage { orientation: "vertical", needed: v, got: v_labels.len() });
        }
        let h_labels = h_labels[..h].to_vec();
        let v_labels = v_labels[..v].to_vec();
        check_labels(&h_labels)?;
        check_labels(&v_labels)?;
        Ok(Self { alpha, h_labels, v_labels })
    }

    /// Labels `1..=h` and `1..=α_1`.
    pub fn standard(alpha: Partition) -> Self {
        let h: Vec<Label> = (1..=alpha.len() as Label).collect();
        let v: Vec<Label> = (1..=alpha.largest() as Label).collect();
        Self { alpha, h_labels: h, v_labels: v }
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn h_labels(&self) -> &[Label] {
        &self.h_labels
    }

    pub fn v_labels(&self) -> &[Label] {
        &self.v_labels
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn num_points(&self) -> usize {
        self.alpha.size()
    }

    pub fn cells(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        self.alpha
            .parts()
            .iter()
            .zip(&self.h_labels)
            .flat_map(move |(&len, &h)| self.v_labels[..len].iter().map(move |&v| (h, v)))
    }

    pub fn to_point_set(&self) -> GridPointSet {
        GridPointSet::from_cells(self.cells()).expect("Ferrers cells are distinct")
    }
}

impl Diagram for AcmConfig {
    fn render_ferrers(&self) -> String {
        let cells: BTreeSet<_> = self.cells().collect();
        render_grid(&self.h_labels, &self.v_labels, |h, v| {
            if cells.contains(&(h, v)) {
                '*'
            } else {
                '.'
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn runex() -> AcmConfig {
        AcmConfig::standard(Partition::new(vec![5, 4, 3, 3, 2, 2, 1]).unwrap())
    }

    fn non_acm_six() -> GridPointSet {
        GridPointSet::from_cells([(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 4)]).unwrap()
    }

    #[test]
    fn runex_alpha_beta() {
        let x = runex().to_point_set();
        assert_eq!(x.len(), 20);
        let (a, b) = x.alpha_beta();
        assert_eq!(a.parts(), &[5, 4, 3, 3, 2, 2, 1]);
        assert_eq!(b.parts(), &[7, 6, 4, 2, 1]);
        assert!(x.is_acm());
    }

    #[test]
    fn single_point() {
        let x = GridPointSet::from_cells([(1, 1)]).unwrap();
        let (a, b) = x.alpha_beta();
        assert_eq!(a.parts(), &[1]);
        assert_eq!(b.parts(), &[1]);
        assert!(x.is_acm());
        assert_eq!(x.render_ferrers(), "*\n");
    }

    #[test]
    fn six_points_are_not_acm() {
        let x = non_acm_six();
        let (a, b) = x.alpha_beta();
        assert_eq!(a.parts(), &[3, 2, 1]);
        assert_eq!(b.parts(), &[2, 2, 1, 1]);
        assert_eq!(b.conjugate().parts(), &[4, 2]);
        assert!(!x.is_acm());
        assert!(x.to_acm().is_none());
    }

    #[test]
    fn rectangle_is_acm() {
        let x = AcmConfig::standard(Partition::rectangle(3, 4)).to_point_set();
        assert!(x.is_acm());
        assert_eq!(x.len(), 12);
    }

    #[test]
    fn relabel_order_puts_fullest_ruling_first() {
        let x = GridPointSet::from_cells([(9, 4), (2, 4), (2, 7), (5, 7)]).unwrap();
        assert_eq!(x.h_labels(), &[2, 5, 9]);
        assert_eq!(x.v_labels(), &[4, 7]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(GridPointSet::from_cells([(1, 1), (1, 1)]), Err(Error::DuplicateCell(1, 1)));
        assert_eq!(GridPointSet::from_cells([(0, 1)]), Err(Error::ZeroLabel));
        let alpha = Partition::new(vec![2, 1]).unwrap();
        assert!(matches!(
            AcmConfig::from_partition(alpha.clone(), &[1], &[1, 2]),
            Err(Error::LabelShortage { .. })
        ));
        assert_eq!(AcmConfig::from_partition(alpha, &[3, 3], &[1, 2]), Err(Error::DuplicateLabel(3)));
    }

    #[test]
    fn acm_from_partition_examples() {
        let c = runex();
        assert_eq!(c.to_point_set(), c.to_point_set().to_acm().unwrap().to_point_set());
        let one = AcmConfig::standard(Partition::new(vec![1]).unwrap());
        assert_eq!(one.cells().collect::<Vec<_>>(), vec![(1, 1)]);
        let sq = AcmConfig::from_partition(Partition::rectangle(2, 2), &[2, 3], &[3, 4]).unwrap();
        let cells: Vec<_> = sq.cells().collect();
        assert_eq!(cells, vec![(2, 3), (2, 4), (3, 3), (3, 4)]);
    }

    #[test]
    fn ferrers_rendering() {
        let c = AcmConfig::standard(Partition::new(vec![2, 1]).unwrap());
        assert_eq!(c.render_ferrers(), "**\n*.\n");
        assert_eq!(c.to_point_set().render_ferrers(), "**\n*.\n");
    }

    #[test]
    fn json_forms() {
        let x: GridPointSet = serde_json::from_str(r#"{"cells": [[1,1],[1,2],[2,1]]}"#).unwrap();
        assert!(x.is_acm());
        let c: AcmConfig = serde_json::from_str(r#"{"alpha": [2,1]}"#).unwrap();
        assert_eq!(c.to_point_set(), x);
        let c: AcmConfig = serde_json::from_str(r#"{"alpha": [2,2], "h_labels": [2,3], "v_labels": [3,4]}"#).unwrap();
        assert_eq!(c.num_points(), 4);
        assert!(serde_json::from_str::<GridPointSet>(r#"{"cells": [[1,1],[1,1]]}"#).is_err());
    }

    fn small_partition(max: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0usize..=max, 0..=max).prop_map(Partition::normalize)
    }

    proptest! {
        #[test]
        fn counts_sum_to_size(cells in proptest::collection::btree_set((1u64..=8, 1u64..=8), 0..40)) {
            let x = GridPointSet::from_cells(cells).unwrap();
            let (a, b) = x.alpha_beta();
            prop_assert_eq!(a.size(), x.len());
            prop_assert_eq!(b.size(), x.len());
        }

        #[test]
        fn ferrers_round_trip(alpha in small_partition(8)) {
            let x = AcmConfig::standard(alpha.clone()).to_point_set();
            let (a, b) = x.alpha_beta();
            prop_assert_eq!(a, alpha.clone());
            prop_assert_eq!(b, alpha.conjugate());
            prop_assert!(x.is_acm());
        }

        #[test]
        fn acm_is_relabeling_invariant(
            cells in proptest::collection::btree_set((1u64..=6, 1u64..=6), 1..20),
            shift in 1u64..50,
        ) {
            let x = GridPointSet::from_cells(cells).unwrap();
            // reverse and shift both label sets: an injective relabeling
            let y = x.relabel(|h| 100 - h + shift, |v| 7 * v + shift).unwrap();
            prop_assert_eq!(x.is_acm(), y.is_acm());
            prop_assert_eq!(x.alpha_beta(), y.alpha_beta());
        }
    }
}
