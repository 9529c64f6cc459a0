//! List assignments and the list versions of the labeling invariants.
//!
//! Three independent routes lead to a list number:
//!
//! * [`list_number_direct`]: enumerate size-`k` list assignments up to label
//!   renaming and try to select a satisfying labeling from each;
//! * [`list_number_characterization`]: compare the related-sequence union of
//!   all satisfying labelings with the set of all sequences, for every
//!   universe size `m` up to a bound;
//! * [`friendship_list_labeling`] / [`book_list_labeling`]: greedy
//!   constructions that always succeed at `k = D` on those two families.
//!
//! All routes use lists of size exactly `k`. Allowing `|L(v)| >= k` gives
//! the same numbers: shrink each list to any `k` of its labels, select from
//! the shrunken lists, and the selection is valid for the original lists too.

mod canonical;
mod characterization;
mod constructive;
mod direct;
mod hunt;
mod select;

pub use canonical::{canonical_form, CanonicalAssignments, CanonicalForm};
pub use characterization::{
    characterization_holds_at, list_number_characterization, CharacterizationOptions, CharacterizationReport,
    ListNumberCharacterization, MStep, Strategy,
};
pub use constructive::{
    book_list_labeling, book_list_size, friendship_list_labeling, friendship_list_size, ConstructiveLabeler,
};
pub use direct::{check_k, direct_report, list_number_direct, DirectOptions, DirectReport, KResult};
pub use hunt::{hunt, hunt_graph, GraphVerdict, HuntHit, HuntOptions, HuntReport, HuntSkip};
pub use select::{select_satisfying, select_satisfying_brute_force, DEFAULT_PRODUCT_CAP};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::labelset::LabelSet;

/// One list of permitted labels per vertex, all of the same size.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ListAssignment {
    lists: Vec<LabelSet>,
    list_size: usize,
}

impl ListAssignment {
    /// Builds an assignment; every list must have the same non-zero size.
    pub fn new(lists: Vec<LabelSet>) -> Result<Self> {
        let list_size = lists.first().map_or(0, |l| l.len());
        if let Some(v) = lists.iter().position(|l| l.len() != list_size) {
            return Err(Error::InvalidInput(format!(
                "list of vertex {v} has size {}, expected {list_size}",
                lists[v].len()
            )));
        }
        if !lists.is_empty() && list_size == 0 {
            return Err(Error::InvalidInput("lists must be non-empty".into()));
        }
        Ok(ListAssignment { lists, list_size })
    }

    pub fn from_vecs(lists: &[&[u32]]) -> Result<Self> {
        let sets = lists
            .iter()
            .map(|l| {
                let s = LabelSet::from_labels(l.iter().copied())?;
                if s.len() != l.len() {
                    return Err(Error::InvalidInput(format!("repeated label in list {l:?}")));
                }
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        ListAssignment::new(sets)
    }

    /// Every vertex gets `{1..k}`.
    pub fn uniform(n: usize, k: u32) -> Self {
        ListAssignment {
            lists: vec![LabelSet::prefix(k); n],
            list_size: k as usize,
        }
    }

    pub fn lists(&self) -> &[LabelSet] {
        &self.lists
    }

    pub fn list(&self, v: usize) -> LabelSet {
        self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list_size(&self) -> usize {
        self.list_size
    }

    /// Largest label that occurs in any list.
    pub fn universe_bound(&self) -> u32 {
        self.lists.iter().filter_map(|l| l.max_label()).max().unwrap_or(0)
    }

    /// Number of distinct labels used.
    pub fn label_count(&self) -> usize {
        self.lists.iter().fold(LabelSet::EMPTY, |acc, &l| acc.union(l)).len()
    }

    /// Whether `labels[v] ∈ L(v)` for every vertex.
    pub fn admits(&self, labels: &[u32]) -> bool {
        labels.len() == self.lists.len() && self.lists.iter().zip(labels).all(|(l, &x)| l.contains(x))
    }

    /// Product of the list sizes, saturating.
    pub fn product_size(&self) -> u128 {
        self.lists
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.len() as u128))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ListAssignment::from_vecs(&[&[1, 2], &[3]]).is_err());
        assert!(ListAssignment::from_vecs(&[&[1, 1]]).is_err());
        assert!(ListAssignment::from_vecs(&[&[0]]).is_err());
        let l = ListAssignment::from_vecs(&[&[1, 5], &[2, 3]]).unwrap();
        assert_eq!((l.list_size(), l.universe_bound(), l.label_count()), (2, 5, 4));
        assert!(l.admits(&[5, 2]) && !l.admits(&[2, 2]));
        assert_eq!(ListAssignment::uniform(3, 2).product_size(), 8);
    }
}
