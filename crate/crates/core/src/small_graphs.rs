//! Every graph of a small order, one per isomorphism class.
//!
//! Classes are found by brute force: each edge subset is reduced to the
//! least adjacency code over all vertex permutations. That is fine up to
//! six vertices (32 768 subsets, 720 permutations each) and the functions
//! refuse anything larger.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_SMALL_ORDER: usize = 6;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap(n, &mut cur, &mut out);
    out
}

fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, cur, out);
        let j = if k % 2 == 0 { i } else { 0 };
        cur.swap(j, k - 1);
    }
}

/// All graphs on `n` vertices up to isomorphism, ordered by edge count and
/// then by canonical code. With `connected_only`, disconnected graphs are
/// dropped.
pub fn small_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n > MAX_SMALL_ORDER {
        return Err(Error::cap("small graph order", n, MAX_SMALL_ORDER));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).expect("pair exists")
    };
    // pair_image[p][i] is the index of pair i after applying permutation p.
    let pair_image: Vec<Vec<usize>> = permutations(n)
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut classes = BTreeSet::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let code = pair_image
            .iter()
            .map(|img| {
                img.iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &j)| acc | 1 << j)
            })
            .min()
            .unwrap_or(mask);
        classes.insert((code.count_ones(), code));
    }
    let mut out = Vec::new();
    for (_, code) in classes {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| code >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges)?;
        if !connected_only || g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}
