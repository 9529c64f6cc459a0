//! Greedy list labelings for friendship and book graphs.
//!
//! Both graphs fix their centre vertices under every automorphism, and the
//! remaining automorphisms only permute pages (and, for books, swap the two
//! sides). Giving every page a different label pattern, distinct labels
//! inside each friendship page, and distinct labels on the book spine leaves
//! only the identity. At `k = D` there are always enough patterns: a
//! friendship page offers at least `C(k,2) >= n` unordered pairs and a book
//! page at least `k^2 >= n` ordered pairs.

use std::collections::HashSet;

use super::ListAssignment;
use crate::automorphism::{automorphisms, AutomorphismGroup, DEFAULT_GROUP_CAP};
use crate::error::{Error, Result};
use crate::family::{generate_family, Family};
use crate::graph::Graph;
use crate::labeling::{satisfies, Labeling, Predicate};

/// `D(F_n)`: the least `k` with `k(k-1)/2 >= n`, which equals
/// `⌈(1 + √(8n+1)) / 2⌉`.
pub fn friendship_list_size(n: usize) -> usize {
    let mut k = 1;
    while k * (k - 1) / 2 < n {
        k += 1;
    }
    k
}

/// `D(B_n)`: the least `k` with `k^2 >= n`, i.e. `⌈√n⌉`.
pub fn book_list_size(n: usize) -> usize {
    let mut k = 0;
    while k * k < n {
        k += 1;
    }
    k
}

/// Holds a friendship or book graph and its automorphism group so many list
/// assignments can be labelled and verified without recomputing the group.
#[derive(Clone, Debug)]
pub struct ConstructiveLabeler {
    family: Family,
    n: usize,
    graph: Graph,
    aut: AutomorphismGroup,
}

impl ConstructiveLabeler {
    pub fn friendship(n: usize) -> Result<Self> {
        Self::build(Family::Friendship, n)
    }

    pub fn book(n: usize) -> Result<Self> {
        Self::build(Family::Book, n)
    }

    fn build(family: Family, n: usize) -> Result<Self> {
        let graph = generate_family(family, &[n])?;
        let aut = automorphisms(&graph, DEFAULT_GROUP_CAP)?;
        Ok(ConstructiveLabeler { family, n, graph, aut })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn automorphisms(&self) -> &AutomorphismGroup {
        &self.aut
    }

    /// The list size the construction is guaranteed to handle.
    pub fn list_size(&self) -> usize {
        match self.family {
            Family::Friendship => friendship_list_size(self.n),
            _ => book_list_size(self.n),
        }
    }

    /// Builds a distinguishing labeling drawn from `lists` and verifies it
    /// against the full automorphism group.
    pub fn label(&self, lists: &ListAssignment) -> Result<Labeling> {
        if lists.len() != self.graph.order() {
            return Err(Error::InvalidInput(format!(
                "{} lists for {} vertices",
                lists.len(),
                self.graph.order()
            )));
        }
        if lists.list_size() < self.list_size() {
            return Err(Error::InvalidInput(format!(
                "lists of size {} are smaller than the required {}",
                lists.list_size(),
                self.list_size()
            )));
        }
        let labels = match self.family {
            Family::Friendship => self.friendship_labels(lists)?,
            _ => self.book_labels(lists)?,
        };
        let c = Labeling::new(labels)?;
        if !lists.admits(c.labels()) || !satisfies(Predicate::Distinguishing, &self.graph, &self.aut, &c)? {
            return Err(Error::Internal(format!(
                "constructed labeling {c} for {} failed verification",
                self.graph.name().unwrap_or("graph")
            )));
        }
        Ok(c)
    }

    fn friendship_labels(&self, lists: &ListAssignment) -> Result<Vec<u32>> {
        let mut labels = vec![0u32; self.graph.order()];
        let mut taken = HashSet::new();
        for page in 1..=self.n {
            let (first, second) = (lists.list(2 * page - 1), lists.list(2 * page));
            let pool: Vec<u32> = first.union(second).iter().collect();
            let pick = pool
                .iter()
                .enumerate()
                .flat_map(|(i, &x)| pool[i + 1..].iter().map(move |&y| (x, y)))
                .find(|&(x, y)| {
                    let realizable =
                        (first.contains(x) && second.contains(y)) || (first.contains(y) && second.contains(x));
                    realizable && !taken.contains(&(x, y))
                })
                .ok_or_else(|| Error::Internal(format!("no unused label pair left for page {page}")))?;
            taken.insert(pick);
            let (x, y) = pick;
            let (a, b) = if first.contains(x) && second.contains(y) {
                (x, y)
            } else {
                (y, x)
            };
            labels[2 * page - 1] = a;
            labels[2 * page] = b;
        }
        labels[0] = lists.list(0).min_label().expect("lists are non-empty");
        Ok(labels)
    }

    fn book_labels(&self, lists: &ListAssignment) -> Result<Vec<u32>> {
        let mut labels = vec![0u32; self.graph.order()];
        let mut taken = HashSet::new();
        for page in 1..=self.n {
            let (left, right) = (lists.list(2 * page), lists.list(2 * page + 1));
            let pick = left
                .iter()
                .flat_map(|a| right.iter().map(move |b| (a, b)))
                .find(|p| !taken.contains(p))
                .ok_or_else(|| Error::Internal(format!("no unused label pair left for page {page}")))?;
            taken.insert(pick);
            labels[2 * page] = pick.0;
            labels[2 * page + 1] = pick.1;
        }
        labels[0] = lists.list(0).min_label().expect("lists are non-empty");
        let mut spine = lists.list(1);
        spine.remove(labels[0]);
        labels[1] = spine
            .min_label()
            .ok_or_else(|| Error::InvalidInput("w_0 needs a label different from v_0".into()))?;
        Ok(labels)
    }
}

/// One-shot friendship construction; see [`ConstructiveLabeler`].
pub fn friendship_list_labeling(n: usize, lists: &ListAssignment) -> Result<Labeling> {
    ConstructiveLabeler::friendship(n)?.label(lists)
}

/// One-shot book construction; see [`ConstructiveLabeler`].
pub fn book_list_labeling(n: usize, lists: &ListAssignment) -> Result<Labeling> {
    ConstructiveLabeler::book(n)?.label(lists)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_sizes_match_closed_forms() {
        for n in 2..5000usize {
            let f = ((1.0 + ((8 * n + 1) as f64).sqrt()) / 2.0).ceil() as usize;
            assert_eq!(friendship_list_size(n), f, "friendship n={n}");
            let b = (n as f64).sqrt().ceil() as usize;
            assert_eq!(book_list_size(n), b, "book n={n}");
        }
        let f: Vec<_> = (2..=6).map(friendship_list_size).collect();
        assert_eq!(f, vec![3, 3, 4, 4, 4]);
        let b: Vec<_> = (2..=6).map(book_list_size).collect();
        assert_eq!(b, vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn friendship_uniform_lists() {
        let c = friendship_list_labeling(2, &ListAssignment::uniform(5, 3)).unwrap();
        assert_eq!(c.labels(), &[1, 1, 2, 1, 3]);
        let c = friendship_list_labeling(3, &ListAssignment::uniform(7, 3)).unwrap();
        let mut pages: Vec<(u32, u32)> = (1..=3).map(|i| (c.get(2 * i - 1), c.get(2 * i))).collect();
        pages.sort();
        assert_eq!(pages, vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn friendship_cross_pair() {
        let lists = ListAssignment::from_vecs(&[&[1, 2, 3], &[1, 2, 3], &[4, 5, 6], &[1, 2, 3], &[1, 2, 3]]).unwrap();
        let c = friendship_list_labeling(2, &lists).unwrap();
        assert_eq!((c.get(1), c.get(2)), (1, 4));
        assert_eq!((c.get(3), c.get(4)), (1, 2));
    }

    #[test]
    fn friendship_orientation_when_reversed() {
        // The least pair {1,2} is only realizable as v_1 = 2, v_2 = 1.
        let lists = ListAssignment::from_vecs(&[&[1, 2, 3], &[2, 5, 6], &[1, 7, 8], &[1, 2, 3], &[1, 2, 3]]).unwrap();
        let c = friendship_list_labeling(2, &lists).unwrap();
        assert_eq!((c.get(1), c.get(2)), (2, 1));
    }

    #[test]
    fn book_uniform_lists() {
        let c = book_list_labeling(4, &ListAssignment::uniform(10, 2)).unwrap();
        assert_eq!(c.labels(), &[1, 2, 1, 1, 1, 2, 2, 1, 2, 2]);
        let c = book_list_labeling(2, &ListAssignment::uniform(6, 2)).unwrap();
        assert_eq!(c.labels(), &[1, 2, 1, 1, 1, 2]);
    }

    #[test]
    fn rejects_short_lists() {
        assert!(friendship_list_labeling(4, &ListAssignment::uniform(9, 3)).is_err());
        assert!(book_list_labeling(5, &ListAssignment::uniform(12, 2)).is_err());
        assert!(book_list_labeling(2, &ListAssignment::uniform(5, 2)).is_err());
    }
}
