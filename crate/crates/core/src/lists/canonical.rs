//! List assignments up to renaming of labels.
//!
//! Lists are processed in vertex order while maintaining an ordered
//! partition of the labels seen so far into classes of labels with the same
//! membership pattern. Each new list splits every class into the part it
//! contains (kept first) and the rest, then appends its unseen labels as a
//! new class. Numbering labels by their final position gives a form that
//! depends only on the renaming orbit, and enumerating "how many labels to
//! take from each class" visits every orbit exactly once.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use num_traits::One;

use super::ListAssignment;
use crate::counting::Count;
use crate::labelset::{LabelSet, MAX_LABEL};

/// A class of interchangeable labels occupying `start..start + size`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Class {
    start: u32,
    size: u32,
    /// Number of lists containing these labels.
    occurrences: u32,
}

/// Renaming-orbit size in universe `1..=m` for an assignment using
/// `class_sizes.iter().sum()` labels: `m! / (Π size! · (m - used)!)`.
fn orbit_size(class_sizes: &[u32], m: u32) -> Count {
    let used: u32 = class_sizes.iter().sum();
    if used > m {
        return Count::default();
    }
    let mut out = Count::one();
    for x in (m - used + 1)..=m {
        out *= x;
    }
    for &s in class_sizes {
        for x in 2..=s {
            out /= x;
        }
    }
    out
}

/// Canonical representative of a list assignment's renaming orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub assignment: ListAssignment,
    /// Original label to canonical label.
    pub renaming: BTreeMap<u32, u32>,
    /// Sizes of the final label classes, in label order.
    pub class_sizes: Vec<u32>,
}

impl CanonicalForm {
    pub fn orbit_size(&self, m: u32) -> Count {
        orbit_size(&self.class_sizes, m)
    }
}

pub fn canonical_form(lists: &ListAssignment) -> CanonicalForm {
    let mut classes: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut seen = LabelSet::EMPTY;
    let mut used = 0u32;
    let mut canon = Vec::with_capacity(lists.len());
    for &list in lists.lists() {
        let mut next = Vec::with_capacity(classes.len() + 1);
        let mut out = LabelSet::EMPTY;
        for (start, labels) in classes {
            let (inside, outside): (Vec<u32>, Vec<u32>) = labels.into_iter().partition(|&l| list.contains(l));
            let taken = inside.len() as u32;
            if taken > 0 {
                out = out.union(LabelSet::range(start, taken));
                next.push((start, inside));
            }
            if !outside.is_empty() {
                next.push((start + taken, outside));
            }
        }
        let fresh: Vec<u32> = list.iter().filter(|&l| !seen.contains(l)).collect();
        if !fresh.is_empty() {
            out = out.union(LabelSet::range(used + 1, fresh.len() as u32));
            next.push((used + 1, fresh.clone()));
            used += fresh.len() as u32;
            for l in fresh {
                seen.insert(l);
            }
        }
        classes = next;
        canon.push(out);
    }
    let mut renaming = BTreeMap::new();
    for (start, labels) in &classes {
        for (i, &l) in labels.iter().enumerate() {
            renaming.insert(l, start + i as u32);
        }
    }
    CanonicalForm {
        assignment: ListAssignment::new(canon).expect("renaming preserves list sizes"),
        renaming,
        class_sizes: classes.iter().map(|(_, l)| l.len() as u32).collect(),
    }
}

/// Enumerates canonical size-`k` list assignments on `n` vertices using at
/// most `max_labels` distinct labels.
#[derive(Clone, Debug)]
pub struct CanonicalAssignments {
    n: usize,
    k: u32,
    max_labels: u32,
    shared_only: bool,
}

/// A canonical assignment handed to the visitor.
pub struct Representative<'a> {
    pub lists: &'a [LabelSet],
    class_sizes: Vec<u32>,
}

impl Representative<'_> {
    pub fn orbit_size(&self, m: u32) -> Count {
        orbit_size(&self.class_sizes, m)
    }

    pub fn label_count(&self) -> u32 {
        self.class_sizes.iter().sum()
    }

    pub fn to_assignment(&self) -> ListAssignment {
        ListAssignment::new(self.lists.to_vec()).expect("canonical lists are uniform")
    }
}

impl CanonicalAssignments {
    pub fn new(n: usize, k: u32, max_labels: u32) -> Self {
        CanonicalAssignments {
            n,
            k,
            max_labels: max_labels.min(MAX_LABEL),
            shared_only: false,
        }
    }

    /// Only visit assignments in which every label lies in at least two
    /// lists (ignored when `n < 2`).
    ///
    /// A label `x` lying only in `L(v)` can be swapped for a label `y ∉ L(v)`
    /// used elsewhere: any satisfying selection for the new assignment that
    /// picks `y` at `v` becomes one for the old assignment by picking `x`
    /// instead, since a label used once is fixed by every label-preserving
    /// automorphism and clashes with no neighbour. So if some assignment
    /// admits no selection, one without private labels also admits none.
    pub fn shared_only(mut self, on: bool) -> Self {
        self.shared_only = on;
        self
    }

    /// Visits representatives until the visitor breaks.
    pub fn try_for_each<B>(&self, mut visit: impl FnMut(&Representative) -> ControlFlow<B>) -> ControlFlow<B> {
        if self.k == 0 || self.k > self.max_labels {
            return ControlFlow::Continue(());
        }
        if self.n == 0 {
            return visit(&Representative {
                lists: &[],
                class_sizes: Vec::new(),
            });
        }
        let mut lists = vec![LabelSet::EMPTY; self.n];
        let first = Class {
            start: 1,
            size: self.k,
            occurrences: 1,
        };
        lists[0] = LabelSet::prefix(self.k);
        let mut state = Walk {
            spec: self,
            lists: &mut lists,
            counts: Vec::new(),
            visit: &mut visit,
        };
        if state.prune(0, &[first]) {
            return ControlFlow::Continue(());
        }
        state.vertex(1, vec![first], self.k)
    }

    pub fn count(&self) -> u64 {
        let mut total = 0u64;
        let _ = self.try_for_each(|_| {
            total += 1;
            ControlFlow::<()>::Continue(())
        });
        total
    }
}

struct Walk<'s, 'l, F> {
    spec: &'s CanonicalAssignments,
    lists: &'l mut [LabelSet],
    counts: Vec<u32>,
    visit: &'s mut F,
}

impl<B, F: FnMut(&Representative) -> ControlFlow<B>> Walk<'_, '_, F> {
    fn vertex(&mut self, j: usize, classes: Vec<Class>, used: u32) -> ControlFlow<B> {
        if j == self.spec.n {
            return (self.visit)(&Representative {
                lists: self.lists,
                class_sizes: classes.iter().map(|c| c.size).collect(),
            });
        }
        self.choose(j, &classes, 0, self.spec.k, used)
    }

    fn choose(&mut self, j: usize, classes: &[Class], ci: usize, remaining: u32, used: u32) -> ControlFlow<B> {
        if ci == classes.len() {
            if used + remaining > self.spec.max_labels {
                return ControlFlow::Continue(());
            }
            let mut list = LabelSet::EMPTY;
            let mut next = Vec::with_capacity(classes.len() * 2 + 1);
            for (c, &taken) in classes.iter().zip(&self.counts) {
                if taken > 0 {
                    list = list.union(LabelSet::range(c.start, taken));
                    next.push(Class {
                        start: c.start,
                        size: taken,
                        occurrences: c.occurrences + 1,
                    });
                }
                if taken < c.size {
                    next.push(Class {
                        start: c.start + taken,
                        size: c.size - taken,
                        occurrences: c.occurrences,
                    });
                }
            }
            if remaining > 0 {
                list = list.union(LabelSet::range(used + 1, remaining));
                next.push(Class {
                    start: used + 1,
                    size: remaining,
                    occurrences: 1,
                });
            }
            if self.prune(j, &next) {
                return ControlFlow::Continue(());
            }
            self.lists[j] = list;
            let saved = std::mem::take(&mut self.counts);
            let flow = self.vertex(j + 1, next, used + remaining);
            self.counts = saved;
            return flow;
        }
        let size = classes[ci].size;
        for taken in (0..=size.min(remaining)).rev() {
            self.counts.push(taken);
            let flow = self.choose(j, classes, ci + 1, remaining - taken, used);
            self.counts.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// True when labels still private after list `j` cannot all be covered
    /// by the lists that remain.
    fn prune(&self, j: usize, classes: &[Class]) -> bool {
        if !self.spec.shared_only || self.spec.n < 2 {
            return false;
        }
        let private: u32 = classes.iter().filter(|c| c.occurrences == 1).map(|c| c.size).sum();
        let capacity = (self.spec.n - j - 1) as u32 * self.spec.k;
        private > capacity
    }
}

#[cfg(test)]
mod tests {
    use std::collections::{BTreeMap, BTreeSet};

    use super::*;
    use crate::counting::total_sequences;

    fn all_assignments(n: usize, k: u32, m: u32) -> Vec<ListAssignment> {
        let subsets = LabelSet::subsets_of_size(m, k);
        let mut out = Vec::new();
        let mut idx = vec![0usize; n];
        loop {
            out.push(ListAssignment::new(idx.iter().map(|&i| subsets[i]).collect()).unwrap());
            let Some(p) = (0..n).rev().find(|&p| idx[p] + 1 < subsets.len()) else {
                return out;
            };
            idx[p] += 1;
            idx[p + 1..].fill(0);
        }
    }

    fn reps(n: usize, k: u32, m: u32, shared: bool) -> Vec<(ListAssignment, Count)> {
        let mut out = Vec::new();
        let _ = CanonicalAssignments::new(n, k, m)
            .shared_only(shared)
            .try_for_each(|r| {
                out.push((r.to_assignment(), r.orbit_size(m)));
                ControlFlow::<()>::Continue(())
            });
        out
    }

    #[test]
    fn enumeration_hits_each_orbit_once() {
        for (n, k, m) in [
            (1, 2, 4),
            (2, 2, 4),
            (3, 2, 4),
            (3, 2, 5),
            (2, 3, 5),
            (4, 1, 3),
            (3, 3, 4),
        ] {
            let mut orbits: BTreeMap<ListAssignment, u64> = BTreeMap::new();
            for l in all_assignments(n, k, m) {
                let cf = canonical_form(&l);
                // the renaming maps l onto its canonical form
                let renamed: Vec<LabelSet> = l
                    .lists()
                    .iter()
                    .map(|s| LabelSet::from_labels(s.iter().map(|x| cf.renaming[&x])).unwrap())
                    .collect();
                assert_eq!(renamed, cf.assignment.lists());
                *orbits.entry(cf.assignment).or_default() += 1;
            }
            let listed = reps(n, k, m, false);
            let listed_set: BTreeSet<_> = listed.iter().map(|(a, _)| a.clone()).collect();
            assert_eq!(listed_set.len(), listed.len(), "duplicate representative");
            assert_eq!(listed_set, orbits.keys().cloned().collect::<BTreeSet<_>>());
            for (rep, size) in &listed {
                assert_eq!(*size, Count::from(orbits[rep]));
                assert_eq!(canonical_form(rep).assignment, *rep, "representative is canonical");
            }
            let total: Count = listed.iter().map(|(_, s)| s).sum();
            assert_eq!(total, total_sequences(n, m, k).unwrap());
        }
    }

    #[test]
    fn shared_only_filters_private_labels() {
        let all = reps(3, 2, 6, false);
        let shared = reps(3, 2, 6, true);
        let expected: Vec<_> = all
            .into_iter()
            .filter(|(a, _)| {
                a.lists()
                    .iter()
                    .flat_map(|l| l.iter())
                    .all(|x| a.lists().iter().filter(|l| l.contains(x)).count() >= 2)
            })
            .collect();
        assert_eq!(shared, expected);
        assert!(!shared.is_empty());
    }

    #[test]
    fn identical_lists_come_first() {
        let first = reps(4, 3, 12, true).into_iter().next().unwrap().0;
        assert_eq!(first, ListAssignment::uniform(4, 3));
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(CanonicalAssignments::new(0, 2, 4).count(), 1);
        assert_eq!(CanonicalAssignments::new(3, 0, 4).count(), 0);
        assert_eq!(CanonicalAssignments::new(3, 5, 4).count(), 0);
        assert_eq!(CanonicalAssignments::new(1, 3, 9).count(), 1);
    }
}
