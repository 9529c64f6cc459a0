use super::ListAssignment;
use crate::automorphism::AutomorphismGroup;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{satisfies, Labeling, PartialChecker, Predicate};

/// Largest list product [`select_satisfying`] accepts.
pub const DEFAULT_PRODUCT_CAP: u128 = 1 << 40;

/// Finds a labeling with `c(v) ∈ L(v)` satisfying `pred`, or `None`.
///
/// Backtracks over vertices in order trying each vertex's labels in
/// increasing order, so the result is the lexicographically least
/// satisfying selection. Partial labelings are cut as soon as an edge
/// clashes (proper) or an automorphism whose moved vertices are all labelled
/// preserves the labels (distinguishing).
pub fn select_satisfying(
    pred: Predicate,
    g: &Graph,
    aut: &AutomorphismGroup,
    lists: &ListAssignment,
    cap: u128,
) -> Result<Option<Labeling>> {
    check_shape(g, lists, cap)?;
    let checker = PartialChecker::new(pred, g, aut)?;
    let mut labels = vec![0u32; g.order()];
    Ok(descend(&checker, lists, &mut labels, 0).then(|| Labeling::from_vec_unchecked(labels)))
}

pub(crate) fn select_with(checker: &PartialChecker, lists: &ListAssignment, labels: &mut [u32]) -> bool {
    descend(checker, lists, labels, 0)
}

fn descend(checker: &PartialChecker, lists: &ListAssignment, labels: &mut [u32], v: usize) -> bool {
    if v == labels.len() {
        return true;
    }
    for l in lists.list(v).iter() {
        labels[v] = l;
        if checker.accepts(v, labels) && descend(checker, lists, labels, v + 1) {
            return true;
        }
    }
    false
}

/// Reference search: tries every element of the list product and checks it
/// with [`satisfies`]. No pruning, no shared machinery with
/// [`select_satisfying`].
pub fn select_satisfying_brute_force(
    pred: Predicate,
    g: &Graph,
    aut: &AutomorphismGroup,
    lists: &ListAssignment,
    cap: u128,
) -> Result<Option<Labeling>> {
    check_shape(g, lists, cap)?;
    let n = g.order();
    let choices: Vec<Vec<u32>> = lists.lists().iter().map(|l| l.to_vec()).collect();
    let mut idx = vec![0usize; n];
    loop {
        let c = Labeling::from_vec_unchecked((0..n).map(|v| choices[v][idx[v]]).collect());
        if satisfies(pred, g, aut, &c)? {
            return Ok(Some(c));
        }
        let Some(p) = (0..n).rev().find(|&p| idx[p] + 1 < choices[p].len()) else {
            return Ok(None);
        };
        idx[p] += 1;
        idx[p + 1..].fill(0);
    }
}

fn check_shape(g: &Graph, lists: &ListAssignment, cap: u128) -> Result<()> {
    if lists.len() != g.order() {
        return Err(Error::InvalidInput(format!(
            "{} lists for a graph of order {}",
            lists.len(),
            g.order()
        )));
    }
    let product = lists.product_size();
    if product > cap {
        return Err(Error::cap("list product", product, cap));
    }
    Ok(())
}
