//! Counting related list sequences.
//!
//! For a function `f` on points `a_1..a_n` with values in `1..=m`, an
//! `(m,d)`-related sequence is a choice of one `d`-subset `L_i ⊆ {1..m}` per
//! point with `f(a_i) ∈ L_i`. Given a family `f_1..f_t`, `B_(m,d)` is the
//! union of their related-sequence sets. Its size is computed three ways
//! here (inclusion-exclusion in telescoped form, plain inclusion-exclusion
//! over subsets, and a recurrence on the largest label) and checked against
//! explicit enumeration.

mod enumerate;
mod recurrence;
mod union;

pub use enumerate::{enumerate_b, RelatedSequence, DEFAULT_SEQUENCE_CAP};
pub use recurrence::{union_count_recurrence, union_count_recurrence_literal};
pub use union::{union_count_paper, union_count_subsets, DEFAULT_MAX_FUNCTIONS};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::labeling::Labeling;
use crate::labelset::MAX_LABEL;

/// Exact non-negative count.
pub type Count = BigUint;

/// `C(n, k)`, zero when `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Count {
    if n < 0 || k < 0 || k > n {
        return Count::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = Count::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Number of `(m,d)`-related sequences to one function on `n` points:
/// `C(m-1, d-1)^n`.
pub fn related_sequence_count(n: usize, m: u32, d: u32) -> Result<Count> {
    if d == 0 || d > m {
        return Err(Error::InvalidInput(format!("need 1 <= d <= m, got d={d}, m={m}")));
    }
    Ok(binomial(m as i64 - 1, d as i64 - 1).pow(n as u32))
}

/// Number of sequences of `n` `d`-subsets of `1..=m`: `C(m, d)^n`.
pub fn total_sequences(n: usize, m: u32, d: u32) -> Result<Count> {
    if d > m {
        return Err(Error::InvalidInput(format!("need d <= m, got d={d}, m={m}")));
    }
    Ok(binomial(m as i64, d as i64).pow(n as u32))
}

/// Functions `f_1..f_t` on a common domain of `n` points with values in
/// `1..=m`, together with the list size `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionFamily {
    functions: Vec<Labeling>,
    domain: usize,
    m: u32,
    d: u32,
}

impl FunctionFamily {
    pub fn new(functions: Vec<Labeling>, m: u32, d: u32) -> Result<Self> {
        if d == 0 || d > m {
            return Err(Error::InvalidInput(format!("need 1 <= d <= m, got d={d}, m={m}")));
        }
        if m > MAX_LABEL {
            return Err(Error::InvalidInput(format!("label universe {m} exceeds {MAX_LABEL}")));
        }
        let domain = functions.first().map_or(0, Labeling::len);
        for (i, f) in functions.iter().enumerate() {
            if f.len() != domain {
                return Err(Error::InvalidInput(format!(
                    "function {i} has domain size {}, expected {domain}",
                    f.len()
                )));
            }
            if f.max_label() > m {
                return Err(Error::InvalidInput(format!(
                    "function {i} takes value {} outside 1..={m}",
                    f.max_label()
                )));
            }
        }
        Ok(FunctionFamily {
            functions,
            domain,
            m,
            d,
        })
    }

    /// Convenience constructor from raw value vectors.
    pub fn from_values(values: &[&[u32]], m: u32, d: u32) -> Result<Self> {
        let functions = values
            .iter()
            .map(|v| Labeling::new(v.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        FunctionFamily::new(functions, m, d)
    }

    pub fn functions(&self) -> &[Labeling] {
        &self.functions
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    /// Domain size `n`. Zero for an empty family.
    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn universe(&self) -> u32 {
        self.m
    }

    pub fn list_size(&self) -> u32 {
        self.d
    }

    /// Same functions, different `(m, d)`.
    pub fn with_bounds(&self, m: u32, d: u32) -> Result<Self> {
        FunctionFamily::new(self.functions.clone(), m, d)
    }

    /// Adds a function, keeping the family's bounds.
    pub fn push(&mut self, f: Labeling) -> Result<()> {
        let mut functions = self.functions.clone();
        functions.push(f);
        *self = FunctionFamily::new(functions, self.m, self.d)?;
        Ok(())
    }
}

/// `counts[p-1]` is the number of points where the chosen sub-family takes
/// exactly `p` distinct values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapProfile {
    pub counts: Vec<usize>,
}

impl OverlapProfile {
    /// Number of functions in the sub-family the profile describes.
    pub fn width(&self) -> usize {
        self.counts.len()
    }

    pub fn points(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Profile of the sub-family indexed by `subset` (zero-based, distinct).
pub fn overlap_profile(fam: &FunctionFamily, subset: &[usize]) -> Result<OverlapProfile> {
    if subset.is_empty() {
        return Err(Error::InvalidInput("overlap profile of an empty sub-family".into()));
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != subset.len() {
        return Err(Error::InvalidInput(format!("repeated index in sub-family {subset:?}")));
    }
    if let Some(&bad) = sorted.iter().find(|&&j| j >= fam.len()) {
        return Err(Error::InvalidInput(format!(
            "function index {bad} out of range for family of {}",
            fam.len()
        )));
    }
    Ok(profile_unchecked(fam, subset))
}

pub(crate) fn profile_unchecked(fam: &FunctionFamily, subset: &[usize]) -> OverlapProfile {
    let mut counts = vec![0usize; subset.len()];
    for a in 0..fam.domain() {
        let mut values = 0u64;
        for &j in subset {
            values |= 1 << (fam.functions[j].get(a) - 1);
        }
        counts[values.count_ones() as usize - 1] += 1;
    }
    OverlapProfile { counts }
}

/// `|∩_j L_(m,d)(f_j)|` for a sub-family with the given profile:
/// `Π_p C(m-p, d-p)^{n^(p)}`. A point carrying `p > d` forced values
/// contributes a zero factor.
pub fn intersection_count(profile: &OverlapProfile, m: u32, d: u32) -> Count {
    let mut acc = Count::one();
    for (i, &count) in profile.counts.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let p = i as i64 + 1;
        let factor = binomial(m as i64 - p, d as i64 - p);
        if factor.is_zero() {
            return Count::zero();
        }
        acc *= factor.pow(count as u32);
    }
    acc
}
