use num_traits::ToPrimitive;
use serde::Serialize;

use super::{total_sequences, FunctionFamily};
use crate::error::{Error, Result};
use crate::labelset::LabelSet;

pub const DEFAULT_SEQUENCE_CAP: u64 = 10_000_000;

/// One `d`-subset of the label universe per domain point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RelatedSequence {
    pub lists: Vec<LabelSet>,
}

impl RelatedSequence {
    /// Whether `values[a] ∈ lists[a]` at every point.
    pub fn admits(&self, values: &[u32]) -> bool {
        self.lists.iter().zip(values).all(|(l, &v)| l.contains(v))
    }
}

/// Explicit `B_(m,d)`: every sequence of `d`-subsets of `1..=m` related to
/// at least one function of the family, sorted lexicographically.
pub fn enumerate_b(fam: &FunctionFamily, cap: u64) -> Result<Vec<RelatedSequence>> {
    let (n, m, d) = (fam.domain(), fam.universe(), fam.list_size());
    let space = total_sequences(n, m, d)?;
    if space.to_u64().is_none_or(|s| s > cap) {
        return Err(Error::cap("sequence space C(m,d)^n", space, cap));
    }
    let choices = LabelSet::subsets_of_size(m, d);
    let mut out = Vec::new();
    if fam.is_empty() {
        return Ok(out);
    }
    let mut idx = vec![0usize; n];
    let mut lists = vec![choices[0]; n];
    loop {
        let covered = fam
            .functions()
            .iter()
            .any(|f| lists.iter().zip(f.labels()).all(|(l, &v)| l.contains(v)));
        if covered {
            out.push(RelatedSequence { lists: lists.clone() });
        }
        // Odometer with point 0 most significant keeps the output sorted.
        let mut pos = n;
        loop {
            if pos == 0 {
                debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices.len() {
                lists[pos] = choices[idx[pos]];
                break;
            }
            idx[pos] = 0;
            lists[pos] = choices[0];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> LabelSet {
        LabelSet::from_labels(v.iter().copied()).unwrap()
    }

    #[test]
    fn single_function() {
        let fam = FunctionFamily::from_values(&[&[1, 2]], 3, 2).unwrap();
        let b = enumerate_b(&fam, 1000).unwrap();
        assert_eq!(b.len(), 4);
        assert!(b.iter().all(|s| s.admits(&[1, 2])));
    }

    #[test]
    fn full_universe() {
        let fam = FunctionFamily::from_values(&[&[1, 3], &[2, 2]], 3, 3).unwrap();
        let b = enumerate_b(&fam, 1000).unwrap();
        assert_eq!(
            b,
            vec![RelatedSequence {
                lists: vec![set(&[1, 2, 3]); 2]
            }]
        );
    }

    #[test]
    fn two_singletons_by_hand() {
        let fam = FunctionFamily::from_values(&[&[1], &[2]], 3, 2).unwrap();
        let b = enumerate_b(&fam, 1000).unwrap();
        let expected: Vec<_> = [[1, 2], [1, 3], [2, 3]]
            .iter()
            .map(|l| RelatedSequence { lists: vec![set(l)] })
            .collect();
        assert_eq!(b, expected);
    }

    #[test]
    fn cap_is_enforced() {
        let fam = FunctionFamily::from_values(&[&[1, 1, 1, 1]], 10, 5).unwrap();
        assert!(enumerate_b(&fam, 1000).unwrap_err().is_cap_overflow());
    }
}
