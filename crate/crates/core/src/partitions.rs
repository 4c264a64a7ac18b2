//! Integer partitions: the row and column count tuples of point configurations.
//!
//! Indices in the public API are 1-based (`drops`, `remove_part`, `part`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-increasing tuple of positive integers. The empty partition is the
/// empty configuration.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ordered = parts.windows(2).all(|w| w[0] >= w[1]);
        if !ordered || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Drops zeros and sorts what remains in non-increasing order.
    pub fn normalize<I: IntoIterator<Item = usize>>(raw: I) -> Self {
        let mut parts: Vec<usize> = raw.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    /// A `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Self(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// The `i`-th part (1-based); 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let parts = (1..=self.largest())
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self(parts)
    }

    /// 1-based indices `i` with `p[i+1] < p[i]`. The last index is never a
    /// drop.
    pub fn drops(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] < w[0])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn componentwise_max(&self, other: &Self) -> Self {
        let n = self.len().max(other.len());
        Self::normalize((1..=n).map(|i| self.part(i).max(other.part(i))))
    }

    /// Deletes the `i`-th part (1-based).
    pub fn remove_part(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.len() });
        }
        let mut parts = self.0.clone();
        parts.remove(i - 1);
        Ok(Self(parts))
    }

    /// Subtracts `k` from every part, dropping parts that vanish. This is the
    /// row-count effect of deleting the first `k` columns of a Ferrers diagram.
    pub fn trim_columns(&self, k: usize) -> Self {
        Self::normalize(self.0.iter().map(|p| p.saturating_sub(k)))
    }

    /// Deletes the first `k` parts.
    pub fn skip_rows(&self, k: usize) -> Self {
        Self(self.0.iter().skip(k).copied().collect())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Direct count of `|{i : p_i >= j}|` for every `j`, no shortcuts.
    fn conjugate_by_counting(parts: &[usize]) -> Vec<usize> {
        let max = parts.iter().copied().max().unwrap_or(0);
        let mut out = Vec::new();
        for j in 1..=max {
            let mut c = 0;
            for &x in parts {
                if x >= j {
                    c += 1;
                }
            }
            out.push(c);
        }
        out
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(Partition::normalize([2, 5, 0, 3]), p(&[5, 3, 2]));
        assert_eq!(Partition::normalize([]), Partition::empty());
        assert_eq!(Partition::normalize([1, 1, 1]), p(&[1, 1, 1]));
    }

    #[test]
    fn rejects_invalid() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(serde_json::from_str::<Partition>("[3,4]").is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 4, 3, 3, 2, 2, 1]).conjugate(), p(&[7, 6, 4, 2, 1]));
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
        assert_eq!(conjugate_by_counting(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn drops_examples() {
        assert_eq!(p(&[5, 4, 3, 3, 2, 2, 1]).drops(), vec![1, 2, 4, 6]);
        assert!(p(&[3, 3, 3]).drops().is_empty());
        assert_eq!(p(&[4, 4, 2, 2, 2, 2]).drops(), vec![2]);
        assert!(Partition::empty().drops().is_empty());
    }

    #[test]
    fn componentwise_max_examples() {
        assert_eq!(p(&[3, 1, 1, 1, 1]).componentwise_max(&p(&[2, 2, 2])), p(&[3, 2, 2, 1, 1]));
        let q = p(&[4, 2]);
        assert_eq!(q.componentwise_max(&Partition::empty()), q);
        assert_eq!(p(&[2, 2]).componentwise_max(&p(&[2, 2])), p(&[2, 2]));
    }

    #[test]
    fn remove_part_examples() {
        assert_eq!(p(&[5, 4, 3, 3, 2, 2, 1]).remove_part(3).unwrap(), p(&[5, 4, 3, 2, 2, 1]));
        assert_eq!(p(&[1]).remove_part(1).unwrap(), Partition::empty());
        assert_eq!(p(&[4, 2, 2]).remove_part(1).unwrap(), p(&[2, 2]));
        assert_eq!(
            p(&[4, 2, 2]).remove_part(4),
            Err(Error::IndexOutOfRange { index: 4, len: 3 })
        );
        assert!(p(&[4]).remove_part(0).is_err());
    }

    #[test]
    fn display_and_json() {
        let q = p(&[5, 4, 3, 3, 2, 2, 1]);
        assert_eq!(q.to_string(), "(5,4,3,3,2,2,1)");
        assert_eq!(serde_json::to_string(&q).unwrap(), "[5,4,3,3,2,2,1]");
    }

    /// Every partition with at most 12 parts, each at most 12, is reached by
    /// normalizing an arbitrary vector in that range.
    fn small_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0usize..=12, 0..=12).prop_map(Partition::normalize)
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(q in small_partition()) {
            prop_assert_eq!(q.conjugate().conjugate(), q.clone());
            prop_assert_eq!(q.conjugate().parts().to_vec(), conjugate_by_counting(q.parts()));
        }

        #[test]
        fn conjugate_preserves_size(q in small_partition()) {
            prop_assert_eq!(q.size(), q.conjugate().size());
        }

        #[test]
        fn drops_are_genuine_descents(q in small_partition()) {
            let d = q.drops();
            prop_assert!(d.windows(2).all(|w| w[0] < w[1]));
            for &i in &d {
                prop_assert!(i < q.len());
                prop_assert!(q.part(i + 1) < q.part(i));
            }
            let descents = (1..q.len()).filter(|&i| q.part(i + 1) < q.part(i)).count();
            prop_assert_eq!(descents, d.len());
        }

        #[test]
        fn componentwise_max_is_a_semilattice(
            a in small_partition(), b in small_partition(), c in small_partition()
        ) {
            prop_assert_eq!(a.componentwise_max(&b), b.componentwise_max(&a));
            prop_assert_eq!(
                a.componentwise_max(&b).componentwise_max(&c),
                a.componentwise_max(&b.componentwise_max(&c))
            );
            prop_assert_eq!(a.componentwise_max(&a), a.clone());
        }
    }
}
