//! Counting `B_(m,d)` by recursion on the largest label.
//!
//! Sequences over `1..=M` split by the set `A` of points whose list
//! contains `M`. On `A` the remaining `d-1` slots come from `1..M-1`; off
//! `A` all `d` slots do. A function with value `M` at a point of `A` is
//! already satisfied there; at a point outside `A` it can no longer be.
//!
//! The union over the family does not factor across `A` and its
//! complement: a left part may be covered only by `f_1` and a right part
//! only by `f_2`. The exact recurrence therefore carries, for each
//! sub-domain, the number of list choices per *set* of still-compatible
//! functions and intersects those sets when recombining. Collapsing each
//! side to a union count first gives [`union_count_recurrence_literal`],
//! which is exact only for a single function.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};

use super::{Count, FunctionFamily};
use crate::error::{Error, Result};

/// Point index paired with the mask of functions already satisfied there.
type Points = Vec<(u8, u32)>;
type Distribution = BTreeMap<u32, Count>;

const MAX_RECURRENCE_FUNCTIONS: usize = 32;

/// Exact `|B_(m,d)|` via the largest-label recurrence.
pub fn union_count_recurrence(fam: &FunctionFamily, max_functions: usize) -> Result<Count> {
    check(fam, max_functions)?;
    if fam.is_empty() {
        return Ok(Count::zero());
    }
    let mut rec = Recurrence::new(fam);
    let dist = rec.distribution(&rec.initial_points(), fam.universe(), fam.list_size());
    Ok(dist.iter().filter(|(&mask, _)| mask != 0).map(|(_, c)| c).sum())
}

/// The same split with each side reduced to a union count and the two
/// multiplied. Agrees with the exact count when `t = 1`; overcounts in
/// general.
pub fn union_count_recurrence_literal(fam: &FunctionFamily, max_functions: usize) -> Result<Count> {
    check(fam, max_functions)?;
    if fam.is_empty() {
        return Ok(Count::zero());
    }
    let mut rec = Recurrence::new(fam);
    Ok(rec.literal(&rec.initial_points(), fam.universe(), fam.list_size()))
}

fn check(fam: &FunctionFamily, max_functions: usize) -> Result<()> {
    let limit = max_functions.min(MAX_RECURRENCE_FUNCTIONS);
    if fam.len() > limit {
        return Err(Error::cap("family size for the recurrence", fam.len(), limit));
    }
    if fam.domain() > 16 {
        return Err(Error::cap("domain size for the recurrence", fam.domain(), 16));
    }
    Ok(())
}

struct Recurrence<'a> {
    fam: &'a FunctionFamily,
    all: u32,
    exact: HashMap<(u32, u32, Points), Rc<Distribution>>,
    literal: HashMap<(u32, u32, Points), Count>,
}

impl<'a> Recurrence<'a> {
    fn new(fam: &'a FunctionFamily) -> Self {
        let t = fam.len() as u32;
        Recurrence {
            fam,
            all: if t == 32 { u32::MAX } else { (1 << t) - 1 },
            exact: HashMap::new(),
            literal: HashMap::new(),
        }
    }

    fn initial_points(&self) -> Points {
        (0..self.fam.domain()).map(|a| (a as u8, 0)).collect()
    }

    fn value(&self, j: usize, a: u8) -> u32 {
        self.fam.functions()[j].get(a as usize)
    }

    /// Functions taking exactly `label` at `a`.
    fn hitting(&self, a: u8, label: u32) -> u32 {
        (0..self.fam.len())
            .filter(|&j| self.value(j, a) == label)
            .fold(0, |acc, j| acc | 1 << j)
    }

    /// Functions whose value at `a` is at most `top`.
    fn within(&self, a: u8, top: u32) -> u32 {
        (0..self.fam.len())
            .filter(|&j| self.value(j, a) <= top)
            .fold(0, |acc, j| acc | 1 << j)
    }

    /// The compatible set when every remaining list is forced: empty lists
    /// (`d = 0`) or the whole universe (`d = top`).
    fn forced_mask(&self, points: &Points, top: u32, d: u32) -> u32 {
        points.iter().fold(self.all, |acc, &(a, sat)| {
            let extra = if d == 0 { 0 } else { self.within(a, top) };
            acc & (sat | extra)
        })
    }

    fn split(&self, points: &Points, side: u32, top: u32) -> (Points, Points) {
        let mut with_top = Vec::new();
        let mut without = Vec::new();
        for (i, &(a, sat)) in points.iter().enumerate() {
            if side >> i & 1 == 1 {
                with_top.push((a, sat | self.hitting(a, top)));
            } else {
                without.push((a, sat));
            }
        }
        (with_top, without)
    }

    /// Number of list sequences (lists of size `d` from `1..=top`) on
    /// `points`, keyed by the exact set of functions compatible everywhere.
    fn distribution(&mut self, points: &Points, top: u32, d: u32) -> Rc<Distribution> {
        if points.is_empty() {
            return Rc::new(BTreeMap::from([(self.all, Count::one())]));
        }
        if d > top {
            return Rc::new(BTreeMap::new());
        }
        if d == 0 || d == top {
            return Rc::new(BTreeMap::from([(self.forced_mask(points, top, d), Count::one())]));
        }
        let key = (top, d, points.clone());
        if let Some(hit) = self.exact.get(&key) {
            return Rc::clone(hit);
        }
        let mut out = Distribution::new();
        for side in 0u32..1 << points.len() {
            let (with_top, without) = self.split(points, side, top);
            let left = self.distribution(&with_top, top - 1, d - 1);
            if left.is_empty() {
                continue;
            }
            let right = self.distribution(&without, top - 1, d);
            for (lm, lc) in left.iter() {
                for (rm, rc) in right.iter() {
                    *out.entry(lm & rm).or_insert_with(Count::zero) += lc * rc;
                }
            }
        }
        let out = Rc::new(out);
        self.exact.insert(key, Rc::clone(&out));
        out
    }

    fn literal(&mut self, points: &Points, top: u32, d: u32) -> Count {
        if points.is_empty() {
            return Count::one();
        }
        if d > top {
            return Count::zero();
        }
        if d == 0 || d == top {
            return if self.forced_mask(points, top, d) != 0 {
                Count::one()
            } else {
                Count::zero()
            };
        }
        let key = (top, d, points.clone());
        if let Some(hit) = self.literal.get(&key) {
            return hit.clone();
        }
        let mut out = Count::zero();
        for side in 0u32..1 << points.len() {
            let (with_top, without) = self.split(points, side, top);
            let left = self.literal(&with_top, top - 1, d - 1);
            if left.is_zero() {
                continue;
            }
            out += left * self.literal(&without, top - 1, d);
        }
        self.literal.insert(key, out.clone());
        out
    }
}
