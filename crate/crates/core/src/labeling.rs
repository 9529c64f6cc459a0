//! Vertex labelings, the three labeling predicates, and exhaustive search
//! for minimum label counts and for all satisfying labelings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::automorphism::AutomorphismGroup;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default bound on the number of labelings [`enumerate_labelings`] keeps.
pub const DEFAULT_LABELING_CAP: usize = 5_000_000;

/// A total vertex labeling with positive integer labels.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labeling(Vec<u32>);

impl Labeling {
    pub fn new(labels: Vec<u32>) -> Result<Self> {
        if let Some(v) = labels.iter().position(|&l| l == 0) {
            return Err(Error::InvalidInput(format!(
                "label of vertex {v} is 0; labels start at 1"
            )));
        }
        Ok(Labeling(labels))
    }

    pub(crate) fn from_vec_unchecked(labels: Vec<u32>) -> Self {
        debug_assert!(labels.iter().all(|&l| l >= 1));
        Labeling(labels)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    /// Largest label used, or 0 for the empty labeling.
    pub fn max_label(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn distinct_labels(&self) -> usize {
        let mut l = self.0.clone();
        l.sort_unstable();
        l.dedup();
        l.len()
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    /// No non-identity automorphism preserves every label.
    Distinguishing,
    /// Adjacent vertices get different labels.
    Proper,
    ProperDistinguishing,
}

impl Predicate {
    pub const ALL: [Predicate; 3] = [
        Predicate::Distinguishing,
        Predicate::Proper,
        Predicate::ProperDistinguishing,
    ];

    pub fn needs_distinguishing(self) -> bool {
        matches!(self, Predicate::Distinguishing | Predicate::ProperDistinguishing)
    }

    pub fn needs_proper(self) -> bool {
        matches!(self, Predicate::Proper | Predicate::ProperDistinguishing)
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Predicate::Distinguishing => "dist",
            Predicate::Proper => "proper",
            Predicate::ProperDistinguishing => "propdist",
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Predicate::Distinguishing => "distinguishing",
            Predicate::Proper => "proper",
            Predicate::ProperDistinguishing => "proper_distinguishing",
        })
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dist" | "distinguishing" => Ok(Predicate::Distinguishing),
            "proper" => Ok(Predicate::Proper),
            "propdist" | "proper_distinguishing" => Ok(Predicate::ProperDistinguishing),
            _ => Err(Error::InvalidInput(format!("unknown predicate `{s}`"))),
        }
    }
}

/// Checks `c` against `pred` by scanning every element of `aut`.
pub fn satisfies(pred: Predicate, g: &Graph, aut: &AutomorphismGroup, c: &Labeling) -> Result<bool> {
    aut.require_complete()?;
    if c.len() != g.order() || aut.degree() != g.order() {
        return Err(Error::InvalidInput(format!(
            "labeling of length {} paired with graph of order {}",
            c.len(),
            g.order()
        )));
    }
    if pred.needs_proper() && g.edges().iter().any(|&(u, v)| c.get(u) == c.get(v)) {
        return Ok(false);
    }
    if pred.needs_distinguishing() {
        let fixed = aut
            .non_identity()
            .any(|s| (0..g.order()).all(|v| c.get(s.apply(v)) == c.get(v)));
        if fixed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Incremental constraint checker used by every backtracking search over
/// label vectors filled in vertex order.
///
/// Each non-identity automorphism is filed under the largest vertex it
/// moves. Once that vertex is labelled, every vertex the automorphism moves
/// is labelled, so whether it preserves the labeling is already decided.
pub(crate) struct PartialChecker<'a> {
    graph: &'a Graph,
    pred: Predicate,
    /// `by_last[v]`: moved pairs `(x, σ(x))` of automorphisms whose largest
    /// moved vertex is `v`.
    by_last: Vec<Vec<Vec<(u8, u8)>>>,
}

impl<'a> PartialChecker<'a> {
    pub(crate) fn new(pred: Predicate, graph: &'a Graph, aut: &AutomorphismGroup) -> Result<Self> {
        aut.require_complete()?;
        if aut.degree() != graph.order() {
            return Err(Error::InvalidInput(
                "automorphism group belongs to a different graph".into(),
            ));
        }
        let n = graph.order();
        let mut by_last = vec![Vec::new(); n];
        if pred.needs_distinguishing() {
            for s in aut.non_identity() {
                let moved: Vec<(u8, u8)> = (0..n)
                    .filter(|&v| s.apply(v) != v)
                    .map(|v| (v as u8, s.apply(v) as u8))
                    .collect();
                let last = moved.last().expect("non-identity moves a vertex").0 as usize;
                by_last[last].push(moved);
            }
        }
        Ok(PartialChecker { graph, pred, by_last })
    }

    /// Whether `labels[..=v]` can still extend to a satisfying labeling,
    /// assuming `labels[..v]` already passed.
    #[inline]
    pub(crate) fn accepts(&self, v: usize, labels: &[u32]) -> bool {
        if self.pred.needs_proper() {
            let mut earlier = self.graph.neighbor_mask(v) & ((1u64 << v) - 1);
            while earlier != 0 {
                let u = earlier.trailing_zeros() as usize;
                earlier &= earlier - 1;
                if labels[u] == labels[v] {
                    return false;
                }
            }
        }
        self.by_last[v]
            .iter()
            .all(|moved| moved.iter().any(|&(x, y)| labels[x as usize] != labels[y as usize]))
    }
}

/// Outcome of [`min_labels`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinLabels {
    pub count: usize,
    /// Lexicographically least satisfying labeling with labels `1..=count`.
    pub witness: Labeling,
}

/// Least `r` such that some labeling with labels `1..=r` satisfies `pred`.
///
/// Labels are introduced in first-occurrence order, which removes the `r!`
/// label-renaming symmetry. Returns 0 for the empty graph.
pub fn min_labels(pred: Predicate, g: &Graph, aut: &AutomorphismGroup) -> Result<MinLabels> {
    let checker = PartialChecker::new(pred, g, aut)?;
    let n = g.order();
    if n == 0 {
        return Ok(MinLabels {
            count: 0,
            witness: Labeling(Vec::new()),
        });
    }
    let mut labels = vec![0u32; n];
    for r in 1..=n as u32 {
        if canonical_search(&checker, &mut labels, 0, 0, r) {
            return Ok(MinLabels {
                count: r as usize,
                witness: Labeling(labels),
            });
        }
    }
    Err(Error::Internal(format!("no satisfying labeling with {n} labels")))
}

fn canonical_search(checker: &PartialChecker, labels: &mut [u32], v: usize, used: u32, r: u32) -> bool {
    if v == labels.len() {
        return true;
    }
    for l in 1..=(used + 1).min(r) {
        labels[v] = l;
        if checker.accepts(v, labels) && canonical_search(checker, labels, v + 1, used.max(l), r) {
            return true;
        }
    }
    false
}

/// Every labeling with labels in `1..=m` satisfying a predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelingSet {
    /// Sorted lexicographically, no duplicates.
    pub members: Vec<Labeling>,
    pub graph_order: usize,
    pub label_bound: u32,
    pub predicate: Predicate,
}

impl LabelingSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// All labelings `V -> {1..m}` satisfying `pred`, without quotienting by
/// label renaming. Fails once more than `cap` members are found.
pub fn enumerate_labelings(
    pred: Predicate,
    g: &Graph,
    aut: &AutomorphismGroup,
    m: u32,
    cap: usize,
) -> Result<LabelingSet> {
    if m == 0 {
        return Err(Error::InvalidInput("label bound m must be at least 1".into()));
    }
    let checker = PartialChecker::new(pred, g, aut)?;
    let mut members = Vec::new();
    let mut labels = vec![0u32; g.order()];
    full_search(&checker, &mut labels, 0, m, &mut members, cap)?;
    Ok(LabelingSet {
        members,
        graph_order: g.order(),
        label_bound: m,
        predicate: pred,
    })
}

fn full_search(
    checker: &PartialChecker,
    labels: &mut [u32],
    v: usize,
    m: u32,
    out: &mut Vec<Labeling>,
    cap: usize,
) -> Result<()> {
    if v == labels.len() {
        if out.len() == cap {
            return Err(Error::cap("satisfying labelings", format!("more than {cap}"), cap));
        }
        out.push(Labeling(labels.to_vec()));
        return Ok(());
    }
    for l in 1..=m {
        labels[v] = l;
        if checker.accepts(v, labels) {
            full_search(checker, labels, v + 1, m, out, cap)?;
        }
    }
    Ok(())
}
