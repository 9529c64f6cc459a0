use std::ops::ControlFlow;

use serde::Serialize;

use super::canonical::CanonicalAssignments;
use super::select::select_with;
use super::ListAssignment;
use crate::automorphism::AutomorphismGroup;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{PartialChecker, Predicate};
use crate::labelset::MAX_LABEL;

#[derive(Clone, Debug)]
pub struct DirectOptions {
    /// Restrict to assignments whose labels each lie in two or more lists.
    /// See [`CanonicalAssignments::shared_only`].
    pub shared_only: bool,
    /// Upper bound on representatives examined per `k`.
    pub max_representatives: u64,
}

impl Default for DirectOptions {
    fn default() -> Self {
        DirectOptions {
            shared_only: true,
            max_representatives: 50_000_000,
        }
    }
}

/// Outcome for a single list size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KResult {
    pub k: usize,
    pub passed: bool,
    /// A canonical assignment with no satisfying selection.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ListAssignment>,
    pub representatives: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectReport {
    pub per_k: Vec<KResult>,
    /// Least passing `k`, if any passed.
    pub value: Option<usize>,
}

/// Tests every canonical size-`k` assignment over `1..=n·k` for each
/// `k ∈ 1..=k_max` and reports each `k` separately.
pub fn direct_report(
    pred: Predicate,
    g: &Graph,
    aut: &AutomorphismGroup,
    k_max: usize,
    opts: &DirectOptions,
) -> Result<DirectReport> {
    let per_k = (1..=k_max)
        .map(|k| check_k(pred, g, aut, k, opts))
        .collect::<Result<Vec<_>>>()?;
    let value = per_k.iter().find(|r| r.passed).map(|r| r.k);
    Ok(DirectReport { per_k, value })
}

/// Least `k ≤ k_max` such that every size-`k` list assignment admits a
/// selection satisfying `pred`, along with the per-`k` details.
pub fn list_number_direct(
    pred: Predicate,
    g: &Graph,
    aut: &AutomorphismGroup,
    k_max: usize,
    opts: &DirectOptions,
) -> Result<(usize, DirectReport)> {
    let report = direct_report(pred, g, aut, k_max, opts)?;
    match report.value {
        Some(k) => Ok((k, report)),
        None => Err(Error::InvalidInput(format!(
            "no list size up to k_max = {k_max} passes"
        ))),
    }
}

/// Checks a single list size.
pub fn check_k(pred: Predicate, g: &Graph, aut: &AutomorphismGroup, k: usize, opts: &DirectOptions) -> Result<KResult> {
    let n = g.order();
    let checker = PartialChecker::new(pred, g, aut)?;
    // Without private labels at most n·k/2 distinct labels occur.
    let needed = if opts.shared_only && n >= 2 { n * k / 2 } else { n * k };
    if needed > MAX_LABEL as usize {
        return Err(Error::cap("label universe", needed, MAX_LABEL));
    }
    let universe = (n * k).min(MAX_LABEL as usize) as u32;
    let mut labels = vec![0u32; n];
    let mut seen = 0u64;
    let mut overflow = false;
    let flow = CanonicalAssignments::new(n, k as u32, universe)
        .shared_only(opts.shared_only)
        .try_for_each(|rep| {
            if seen == opts.max_representatives {
                overflow = true;
                return ControlFlow::Break(None);
            }
            seen += 1;
            let lists = ListAssignment::new(rep.lists.to_vec()).expect("canonical lists are uniform");
            if select_with(&checker, &lists, &mut labels) {
                ControlFlow::Continue(())
            } else {
                ControlFlow::Break(Some(lists))
            }
        });
    if overflow {
        return Err(Error::cap(
            "list assignment representatives",
            format!("more than {seen}"),
            seen,
        ));
    }
    let witness = match flow {
        ControlFlow::Break(w) => w,
        ControlFlow::Continue(()) => None,
    };
    Ok(KResult {
        k,
        passed: witness.is_none(),
        witness,
        representatives: seen,
    })
}
