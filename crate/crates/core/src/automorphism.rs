//! Exhaustive automorphism groups of small graphs.
//!
//! The search assigns images to vertices `0, 1, 2, ...` in order. A vertex
//! may only map to an unused vertex of the same degree whose adjacency to
//! every already-mapped vertex matches. No partition refinement is done;
//! target graphs have at most a dozen or so vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// The full automorphism group of a graph, stored element by element.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    order: usize,
    elements: Vec<Permutation>,
    complete: bool,
    cap: usize,
}

impl AutomorphismGroup {
    /// All elements; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Vertex count of the underlying graph.
    pub fn degree(&self) -> usize {
        self.order
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn non_identity(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().filter(|p| !p.is_identity())
    }

    /// Fails with [`Error::GroupTruncated`] unless the group is complete.
    pub fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::GroupTruncated { cap: self.cap })
        }
    }
}

/// Computes `Aut(g)`, failing if more than `cap` elements exist.
pub fn automorphisms(g: &Graph, cap: usize) -> Result<AutomorphismGroup> {
    let group = search_automorphisms(g, cap);
    group.require_complete()?;
    Ok(group)
}

/// Like [`automorphisms`] but returns a group flagged incomplete instead of
/// failing when the cap is hit.
pub fn search_automorphisms(g: &Graph, cap: usize) -> AutomorphismGroup {
    let n = g.order();
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut search = Search {
        g,
        degrees: &degrees,
        image: vec![usize::MAX; n],
        used: 0,
        found: Vec::new(),
        cap,
        truncated: false,
    };
    search.extend(0);
    let Search {
        mut found, truncated, ..
    } = search;
    // The all-smallest-choice branch is explored first, so the identity
    // leads unless the cap was zero.
    if let Some(pos) = found.iter().position(Permutation::is_identity) {
        found.swap(0, pos);
    }
    AutomorphismGroup {
        order: n,
        elements: found,
        complete: !truncated,
        cap,
    }
}

struct Search<'a> {
    g: &'a Graph,
    degrees: &'a [usize],
    image: Vec<usize>,
    used: u64,
    found: Vec<Permutation>,
    cap: usize,
    truncated: bool,
}

impl Search<'_> {
    fn extend(&mut self, v: usize) {
        if self.truncated {
            return;
        }
        let n = self.g.order();
        if v == n {
            if self.found.len() == self.cap {
                self.truncated = true;
                return;
            }
            self.found.push(Permutation::from_vec_unchecked(self.image.clone()));
            return;
        }
        for w in 0..n {
            if self.used >> w & 1 == 1 || self.degrees[w] != self.degrees[v] {
                continue;
            }
            let consistent = (0..v).all(|u| self.g.has_edge(u, v) == self.g.has_edge(self.image[u], w));
            if !consistent {
                continue;
            }
            self.image[v] = w;
            self.used |= 1 << w;
            self.extend(v + 1);
            self.used &= !(1 << w);
            if self.truncated {
                return;
            }
        }
        self.image[v] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate_family, Family};

    fn brute_force_order(g: &Graph) -> usize {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        loop {
            let p = Permutation::new(perm.clone()).unwrap();
            if p.preserves(g) {
                count += 1;
            }
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        count
    }

    #[test]
    fn small_orders() {
        let k3 = generate_family(Family::Complete, &[3]).unwrap();
        assert_eq!(automorphisms(&k3, 100).unwrap().len(), 6);
        let p3 = generate_family(Family::Path, &[3]).unwrap();
        assert_eq!(automorphisms(&p3, 100).unwrap().len(), 2);
        let c6 = generate_family(Family::Cycle, &[6]).unwrap();
        assert_eq!(automorphisms(&c6, 100).unwrap().len(), 12);
        let empty = Graph::empty(0).unwrap();
        assert_eq!(automorphisms(&empty, 1).unwrap().len(), 1);
    }

    #[test]
    fn friendship_order_matches_brute_force() {
        for n in 2..=4 {
            let g = generate_family(Family::Friendship, &[n]).unwrap();
            let aut = automorphisms(&g, DEFAULT_GROUP_CAP).unwrap();
            let expected = (1..=n).product::<usize>() << n;
            assert_eq!(aut.len(), expected);
            assert_eq!(brute_force_order(&g), expected);
        }
    }

    #[test]
    fn book_order() {
        for n in 2..=5 {
            let g = generate_family(Family::Book, &[n]).unwrap();
            let aut = automorphisms(&g, DEFAULT_GROUP_CAP).unwrap();
            assert_eq!(aut.len(), 2 * (1..=n).product::<usize>());
        }
    }

    #[test]
    fn identity_first_and_group_closed() {
        let g = generate_family(Family::Friendship, &[2]).unwrap();
        let aut = automorphisms(&g, 100).unwrap();
        assert!(aut.elements()[0].is_identity());
        let set: std::collections::HashSet<_> = aut.elements().iter().cloned().collect();
        assert_eq!(set.len(), aut.len());
        for a in aut.elements() {
            assert!(a.preserves(&g));
            assert!(set.contains(&a.inverse()));
            for b in aut.elements() {
                assert!(set.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn truncation_is_an_error() {
        let k5 = generate_family(Family::Complete, &[5]).unwrap();
        assert_eq!(automorphisms(&k5, 119).unwrap_err(), Error::GroupTruncated { cap: 119 });
        assert_eq!(automorphisms(&k5, 120).unwrap().len(), 120);
        let partial = search_automorphisms(&k5, 10);
        assert!(!partial.is_complete());
        assert_eq!(partial.len(), 10);
    }
}
