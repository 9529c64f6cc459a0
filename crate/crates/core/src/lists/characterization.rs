//! List numbers through the related-sequence characterization.
//!
//! Fix a predicate, a list size `d` and a universe `1..=m`. Let
//! `C_1..C_t` be every labeling with labels in `1..=m` satisfying the
//! predicate. A sequence of `d`-subsets admits a satisfying selection
//! exactly when it is related to some `C_i`, i.e. lies in the union `B` of
//! their related-sequence sets. So every size-`d` assignment over `1..=m`
//! admits a selection iff `B` is the whole set `A` of sequences,
//! `|A| = C(m,d)^n`.
//!
//! The list number is the least `d` for which `B = A` at every `m ≥ d`.
//! Any size-`d` assignment on `n` vertices uses at most `n·d` labels, so it
//! is renamed into `1..=n·d`; the sweep therefore stops at `m = n·d` unless
//! told otherwise.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize, Serializer};

use super::canonical::CanonicalAssignments;
use super::select::{select_satisfying, DEFAULT_PRODUCT_CAP};
use super::ListAssignment;
use crate::automorphism::AutomorphismGroup;
use crate::counting::{total_sequences, union_count_paper, Count, FunctionFamily, DEFAULT_MAX_FUNCTIONS};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{enumerate_labelings, min_labels, Labeling, Predicate, DEFAULT_LABELING_CAP};
use crate::labelset::MAX_LABEL;

/// How `B = A` is decided at one `(d, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Test every canonical sequence of `A` for membership in `B`, weighting
    /// by renaming-orbit size to obtain `|B|`.
    Membership,
    /// Count `|B|` by inclusion-exclusion over the satisfying labelings.
    /// Only feasible for few labelings; falls back to membership otherwise.
    Counting,
    /// Run both and require agreement.
    Both,
}

#[derive(Clone, Debug)]
pub struct CharacterizationOptions {
    /// Largest universe size to sweep; `n·d` when `None`.
    pub m_max: Option<u32>,
    pub strategy: Strategy,
    pub labeling_cap: usize,
    pub max_functions: usize,
}

impl Default for CharacterizationOptions {
    fn default() -> Self {
        CharacterizationOptions {
            m_max: None,
            strategy: Strategy::Membership,
            labeling_cap: DEFAULT_LABELING_CAP,
            max_functions: DEFAULT_MAX_FUNCTIONS,
        }
    }
}

fn as_decimal<S: Serializer>(c: &Count, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

/// Comparison of `|B|` with `|A|` at one universe size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MStep {
    pub m: u32,
    /// Number of satisfying labelings over `1..=m`.
    pub labelings: usize,
    #[serde(serialize_with = "as_decimal")]
    pub b_count: Count,
    #[serde(serialize_with = "as_decimal")]
    pub a_count: Count,
    pub equal: bool,
    pub strategy: Strategy,
}

/// The sweep over `m` for one candidate list size `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    pub d: usize,
    pub m_max: u32,
    /// Stops at the first `m` where `B ≠ A`.
    pub per_m: Vec<MStep>,
    pub verdict: bool,
    /// A size-`d` assignment outside `B`, re-checked to admit no selection.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ListAssignment>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListNumberCharacterization {
    pub predicate: Predicate,
    /// The ordinary minimum label count, where the sweep starts.
    pub base: usize,
    pub value: usize,
    pub reports: Vec<CharacterizationReport>,
}

/// Whether the sorted labelings contain one with `c(v) ∈ L(v)` everywhere.
/// Walks the sorted list as a trie, one vertex per level.
fn related_to_any(members: &[Labeling], lists: &[crate::labelset::LabelSet], v: usize) -> bool {
    if members.is_empty() {
        return false;
    }
    if v == lists.len() {
        return true;
    }
    for x in lists[v].iter() {
        let lo = members.partition_point(|c| c.get(v) < x);
        let hi = members.partition_point(|c| c.get(v) <= x);
        if lo < hi && related_to_any(&members[lo..hi], lists, v + 1) {
            return true;
        }
    }
    false
}

fn membership(members: &[Labeling], n: usize, d: u32, m: u32) -> (Count, Count, Option<ListAssignment>) {
    let mut b = Count::default();
    let mut total = Count::default();
    let mut witness = None;
    let _ = CanonicalAssignments::new(n, d, m).try_for_each(|rep| {
        let weight = rep.orbit_size(m);
        total += &weight;
        if related_to_any(members, rep.lists, 0) {
            b += weight;
        } else if witness.is_none() {
            witness = Some(rep.to_assignment());
        }
        ControlFlow::<()>::Continue(())
    });
    (b, total, witness)
}

/// Decides `B = A` for list size `d` over universe `1..=m`.
pub fn characterization_holds_at(
    pred: Predicate,
    g: &Graph,
    aut: &AutomorphismGroup,
    d: usize,
    m: u32,
    opts: &CharacterizationOptions,
) -> Result<(MStep, Option<ListAssignment>)> {
    let n = g.order();
    let d32 = d as u32;
    if d == 0 || d32 > m {
        return Err(Error::InvalidInput(format!("need 1 <= d <= m, got d={d}, m={m}")));
    }
    if m > MAX_LABEL {
        return Err(Error::cap("label universe m", m, MAX_LABEL));
    }
    let set = enumerate_labelings(pred, g, aut, m, opts.labeling_cap).map_err(|e| match e {
        Error::CapExceeded { size, cap, .. } => Error::CapExceeded {
            what: "satisfying labelings for the characterization (neither strategy is feasible)",
            size,
            cap,
        },
        other => other,
    })?;
    let a_count = total_sequences(n, m, d32)?;
    let counting_ok = set.len() <= opts.max_functions;

    let mut counted = None;
    if counting_ok && matches!(opts.strategy, Strategy::Counting | Strategy::Both) {
        let fam = FunctionFamily::new(set.members.clone(), m, d32)?;
        counted = Some(union_count_paper(&fam, opts.max_functions)?);
    }
    let run_membership = opts.strategy != Strategy::Counting || counted.is_none() || counted.as_ref() != Some(&a_count);
    let mut witness = None;
    let mut member_count = None;
    if run_membership {
        let (b, total, w) = membership(&set.members, n, d32, m);
        if total != a_count {
            return Err(Error::Internal(format!(
                "canonical orbits cover {total} sequences, expected {a_count}"
            )));
        }
        witness = w;
        member_count = Some(b);
    }
    let (b_count, strategy) = match (counted, member_count) {
        (Some(c), Some(b)) => {
            if c != b {
                return Err(Error::Internal(format!(
                    "counting gives |B| = {c}, membership gives {b} (d={d}, m={m})"
                )));
            }
            (
                c,
                if opts.strategy == Strategy::Counting {
                    Strategy::Counting
                } else {
                    Strategy::Both
                },
            )
        }
        (Some(c), None) => (c, Strategy::Counting),
        (None, Some(b)) => (b, Strategy::Membership),
        (None, None) => unreachable!("at least one strategy runs"),
    };
    let equal = b_count == a_count;
    debug_assert_eq!(equal, witness.is_none());
    Ok((
        MStep {
            m,
            labelings: set.len(),
            b_count,
            a_count,
            equal,
            strategy,
        },
        witness,
    ))
}

/// Least `d` such that `B = A` for every `m` in `d..=m_max`, starting from
/// the ordinary minimum label count.
pub fn list_number_characterization(
    pred: Predicate,
    g: &Graph,
    aut: &AutomorphismGroup,
    opts: &CharacterizationOptions,
) -> Result<ListNumberCharacterization> {
    let n = g.order();
    let base = min_labels(pred, g, aut)?.count;
    let mut reports = Vec::new();
    if n == 0 {
        return Ok(ListNumberCharacterization {
            predicate: pred,
            base,
            value: 0,
            reports,
        });
    }
    for d in base..=n {
        let m_max = opts.m_max.unwrap_or((n * d) as u32).max(d as u32);
        let mut report = CharacterizationReport {
            d,
            m_max,
            per_m: Vec::new(),
            verdict: true,
            witness: None,
        };
        for m in d as u32..=m_max {
            let (step, witness) = characterization_holds_at(pred, g, aut, d, m, opts)?;
            let equal = step.equal;
            report.per_m.push(step);
            if !equal {
                let w = witness.ok_or_else(|| Error::Internal("B != A without a witness".into()))?;
                if select_satisfying(pred, g, aut, &w, DEFAULT_PRODUCT_CAP)?.is_some() {
                    return Err(Error::Internal(format!(
                        "sequence outside B admits a selection (d={d}, m={m})"
                    )));
                }
                report.verdict = false;
                report.witness = Some(w);
                break;
            }
        }
        let done = report.verdict;
        reports.push(report);
        if done {
            return Ok(ListNumberCharacterization {
                predicate: pred,
                base,
                value: d,
                reports,
            });
        }
    }
    Err(Error::Internal(format!(
        "no list size up to n = {n} satisfies the characterization"
    )))
}
