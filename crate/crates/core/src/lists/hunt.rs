//! Scanning graphs for list numbers above the ordinary minimum.

use serde::Serialize;

use super::direct::{check_k, DirectOptions};
use super::select::select_satisfying_brute_force;
use super::ListAssignment;
use crate::automorphism::automorphisms;
use crate::error::Result;
use crate::format::encode_graph6;
use crate::graph::Graph;
use crate::labeling::{min_labels, Predicate};

#[derive(Clone, Debug)]
pub struct HuntOptions {
    pub group_cap: usize,
    pub direct: DirectOptions,
    /// Largest list product the brute-force re-check will walk.
    pub recheck_cap: u128,
}

impl Default for HuntOptions {
    fn default() -> Self {
        HuntOptions {
            group_cap: crate::automorphism::DEFAULT_GROUP_CAP,
            direct: DirectOptions::default(),
            recheck_cap: 1 << 32,
        }
    }
}

/// A graph where some assignment of size `base` admits no selection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntHit {
    pub index: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub base: usize,
    pub assignment: ListAssignment,
    /// The assignment was confirmed by an unpruned scan of its whole list
    /// product against the full automorphism group.
    pub reverified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntSkip {
    pub index: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntReport {
    pub predicate: Predicate,
    pub scanned: usize,
    pub skipped: Vec<HuntSkip>,
    pub hits: Vec<HuntHit>,
}

/// Result of examining a single graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphVerdict {
    pub base: usize,
    /// Failing assignment and whether the brute-force re-check confirmed it.
    pub violation: Option<(ListAssignment, bool)>,
}

/// Computes the ordinary minimum for `pred` and tests every canonical list
/// assignment of that size.
pub fn hunt_graph(pred: Predicate, g: &Graph, opts: &HuntOptions) -> Result<GraphVerdict> {
    let aut = automorphisms(g, opts.group_cap)?;
    let base = min_labels(pred, g, &aut)?.count;
    if base == 0 {
        return Ok(GraphVerdict { base, violation: None });
    }
    let result = check_k(pred, g, &aut, base, &opts.direct)?;
    let violation = match result.witness {
        Some(w) => {
            let confirmed = select_satisfying_brute_force(pred, g, &aut, &w, opts.recheck_cap)
                .map(|found| found.is_none())
                .unwrap_or(false);
            Some((w, confirmed))
        }
        None => None,
    };
    Ok(GraphVerdict { base, violation })
}

/// Runs [`hunt_graph`] over a stream. Graphs that overflow a cap are
/// reported as skipped.
pub fn hunt(pred: Predicate, graphs: impl IntoIterator<Item = Graph>, opts: &HuntOptions) -> HuntReport {
    let mut report = HuntReport {
        predicate: pred,
        scanned: 0,
        skipped: Vec::new(),
        hits: Vec::new(),
    };
    for (index, g) in graphs.into_iter().enumerate() {
        report.scanned += 1;
        match hunt_graph(pred, &g, opts) {
            Ok(GraphVerdict {
                base,
                violation: Some((assignment, reverified)),
            }) => report.hits.push(HuntHit {
                index,
                graph6: encode_graph6(&g),
                name: g.name().map(str::to_owned),
                order: g.order(),
                base,
                assignment,
                reverified,
            }),
            Ok(_) => {}
            Err(e) => report.skipped.push(HuntSkip {
                index,
                reason: e.to_string(),
            }),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate_family, Family};

    #[test]
    fn empty_stream() {
        let r = hunt(Predicate::Distinguishing, Vec::new(), &HuntOptions::default());
        assert_eq!((r.scanned, r.skipped.len(), r.hits.len()), (0, 0, 0));
    }

    #[test]
    fn k24_proper_is_a_hit() {
        let g = generate_family(Family::CompleteBipartite, &[2, 4]).unwrap();
        let r = hunt(Predicate::Proper, [g], &HuntOptions::default());
        assert_eq!(r.hits.len(), 1);
        let hit = &r.hits[0];
        assert_eq!(hit.base, 2);
        assert!(hit.reverified);
    }

    #[test]
    fn overflow_is_skipped_not_dropped() {
        let g = generate_family(Family::Complete, &[6]).unwrap();
        let opts = HuntOptions {
            group_cap: 10,
            ..HuntOptions::default()
        };
        let r = hunt(Predicate::Distinguishing, [g], &opts);
        assert_eq!((r.scanned, r.skipped.len(), r.hits.len()), (1, 1, 0));
    }
}
