//! Simple undirected graphs on dense vertex sets `0..n`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order; adjacency rows are single `u64` bitmasks.
pub const MAX_ORDER: usize = 64;

/// An immutable simple undirected graph.
///
/// Equality is literal: same order and same edge set. The display name is
/// not part of equality.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::InvalidGraph(format!(
                "order {n} exceeds supported maximum {MAX_ORDER}"
            )));
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u},{v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u},{v}}}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            adj,
            edges: list,
            name: None,
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, std::iter::empty())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.adj[v];
        (0..self.n).filter(move |&u| mask >> u & 1 == 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// The graph obtained by renaming vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &Permutation) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "permutation of length {} applied to graph of order {}",
                perm.len(),
                self.n
            )));
        }
        let mut g = Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm.apply(u), perm.apply(v))))?;
        g.name = self.name.clone();
        Ok(g)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// A bijection on `0..n`; `image[v]` is where `v` goes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(Error::InvalidInput(format!("{image:?} is not a permutation of 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_vec_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(image.clone()).is_ok());
        Permutation { image }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }

    /// Whether this permutation maps edges to edges and non-edges to
    /// non-edges of `g`.
    pub fn preserves(&self, g: &Graph) -> bool {
        if self.len() != g.order() {
            return false;
        }
        g.edges().iter().all(|&(u, v)| g.has_edge(self.apply(u), self.apply(v)))
    }
}
