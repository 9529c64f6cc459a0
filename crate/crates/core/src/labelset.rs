use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest label a [`LabelSet`] can hold.
pub const MAX_LABEL: u32 = 64;

/// A finite set of labels drawn from `1..=64`, stored as a bitmask.
///
/// Ordered lexicographically by its sorted elements, so `{1,3} < {2}` and
/// `{1} < {1,2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelSet(u64);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    pub fn from_labels(labels: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut bits = 0u64;
        for l in labels {
            if l == 0 || l > MAX_LABEL {
                return Err(Error::InvalidInput(format!("label {l} outside 1..={MAX_LABEL}")));
            }
            bits |= 1 << (l - 1);
        }
        Ok(LabelSet(bits))
    }

    /// `{1, ..., k}`.
    pub fn prefix(k: u32) -> Self {
        assert!(k <= MAX_LABEL);
        LabelSet(if k == 64 { u64::MAX } else { (1u64 << k) - 1 })
    }

    /// Labels `lo..lo+len`.
    pub(crate) fn range(lo: u32, len: u32) -> Self {
        LabelSet(LabelSet::prefix(len).0 << (lo - 1))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        LabelSet(bits)
    }

    #[inline]
    pub fn contains(self, label: u32) -> bool {
        (1..=MAX_LABEL).contains(&label) && self.0 >> (label - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, label: u32) {
        assert!((1..=MAX_LABEL).contains(&label));
        self.0 |= 1 << (label - 1);
    }

    pub fn remove(&mut self, label: u32) {
        if (1..=MAX_LABEL).contains(&label) {
            self.0 &= !(1 << (label - 1));
        }
    }

    pub fn union(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 | other.0)
    }

    pub fn intersection(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_label(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn max_label(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let l = bits.trailing_zeros() + 1;
                bits &= bits - 1;
                l
            })
        })
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// All `d`-subsets of `1..=m` in lexicographic order.
    pub fn subsets_of_size(m: u32, d: u32) -> Vec<LabelSet> {
        let mut out = Vec::new();
        if d > m || m > MAX_LABEL {
            return out;
        }
        let mut combo: Vec<u32> = (1..=d).collect();
        loop {
            out.push(LabelSet::from_labels(combo.iter().copied()).expect("labels in range"));
            let Some(i) = (0..d as usize).rev().find(|&i| combo[i] < m - (d - 1 - i as u32)) else {
                break;
            };
            combo[i] += 1;
            for j in i + 1..d as usize {
                combo[j] = combo[j - 1] + 1;
            }
        }
        out
    }
}

impl Ord for LabelSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for LabelSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for LabelSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for LabelSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<u32>::deserialize(d)?;
        LabelSet::from_labels(labels).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s = LabelSet::from_labels([3, 1, 64]).unwrap();
        assert_eq!(s.to_vec(), vec![1, 3, 64]);
        assert_eq!((s.min_label(), s.max_label(), s.len()), (Some(1), Some(64), 3));
        assert!(s.contains(3) && !s.contains(2) && !s.contains(0) && !s.contains(65));
        assert!(LabelSet::from_labels([0]).is_err());
        assert!(LabelSet::from_labels([65]).is_err());
        assert_eq!(LabelSet::range(3, 2).to_vec(), vec![3, 4]);
        assert_eq!(LabelSet::prefix(64).len(), 64);
    }

    #[test]
    fn lexicographic_order() {
        let a = LabelSet::from_labels([1, 3]).unwrap();
        let b = LabelSet::from_labels([2]).unwrap();
        let c = LabelSet::from_labels([1]).unwrap();
        assert!(a < b);
        assert!(c < a);
    }

    #[test]
    fn subsets_are_sorted_and_complete() {
        let subs = LabelSet::subsets_of_size(5, 3);
        assert_eq!(subs.len(), 10);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|s| s.len() == 3 && s.max_label().unwrap() <= 5));
        assert_eq!(LabelSet::subsets_of_size(3, 0), vec![LabelSet::EMPTY]);
        assert!(LabelSet::subsets_of_size(2, 3).is_empty());
    }
}
