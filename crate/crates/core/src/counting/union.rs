use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use super::{binomial, intersection_count, profile_unchecked, Count, FunctionFamily};
use crate::error::{Error, Result};

/// Both inclusion-exclusion routes visit `2^t` sub-families.
pub const DEFAULT_MAX_FUNCTIONS: usize = 20;

fn check_width(fam: &FunctionFamily, max_functions: usize) -> Result<()> {
    if fam.len() > max_functions {
        return Err(Error::cap(
            "family size for inclusion-exclusion (use enumeration or membership instead)",
            fam.len(),
            max_functions,
        ));
    }
    if fam.len() >= usize::BITS as usize - 1 {
        return Err(Error::cap(
            "family size for inclusion-exclusion",
            fam.len(),
            usize::BITS - 2,
        ));
    }
    Ok(())
}

fn into_count(total: BigInt) -> Count {
    assert!(!total.is_negative(), "inclusion-exclusion produced a negative count");
    total.to_biguint().expect("non-negative")
}

/// `|B_(m,d)|` as `Σ_i S_i`, where `S_i` counts the sequences related to
/// `f_i` but to none of `f_1..f_{i-1}`:
///
/// `S_i = Σ_{T ⊆ {1..i-1}} (-1)^{|T|} |L(f_i) ∩ ∩_{j∈T} L(f_j)|`,
///
/// each intersection taken from the overlap profile of `T ∪ {i}`.
pub fn union_count_paper(fam: &FunctionFamily, max_functions: usize) -> Result<Count> {
    check_width(fam, max_functions)?;
    let (m, d) = (fam.universe(), fam.list_size());
    let mut total = BigInt::zero();
    let mut subset = Vec::with_capacity(fam.len());
    for i in 0..fam.len() {
        let mut s_i = BigInt::zero();
        for earlier in 0usize..1 << i {
            subset.clear();
            subset.extend((0..i).filter(|&j| earlier >> j & 1 == 1));
            subset.push(i);
            let term = BigInt::from_biguint(Sign::Plus, intersection_count(&profile_unchecked(fam, &subset), m, d));
            if earlier.count_ones() % 2 == 0 {
                s_i += term;
            } else {
                s_i -= term;
            }
        }
        debug_assert!(!s_i.is_negative());
        total += s_i;
    }
    Ok(into_count(total))
}

/// `|B_(m,d)|` by inclusion-exclusion over every non-empty sub-family, with
/// intersections computed point by point from the number of distinct
/// forced values.
pub fn union_count_subsets(fam: &FunctionFamily, max_functions: usize) -> Result<Count> {
    check_width(fam, max_functions)?;
    let (m, d) = (fam.universe() as i64, fam.list_size() as i64);
    let t = fam.len();
    let mut total = BigInt::zero();
    for mask in 1usize..1 << t {
        let mut product = Count::one();
        for a in 0..fam.domain() {
            let mut forced = 0u64;
            for (j, f) in fam.functions().iter().enumerate() {
                if mask >> j & 1 == 1 {
                    forced |= 1 << (f.get(a) - 1);
                }
            }
            let p = forced.count_ones() as i64;
            product *= binomial(m - p, d - p);
            if product.is_zero() {
                break;
            }
        }
        let term = BigInt::from_biguint(Sign::Plus, product);
        if mask.count_ones() % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(into_count(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::related_sequence_count;

    fn both(fam: &FunctionFamily) -> Count {
        let a = union_count_paper(fam, DEFAULT_MAX_FUNCTIONS).unwrap();
        let b = union_count_subsets(fam, DEFAULT_MAX_FUNCTIONS).unwrap();
        assert_eq!(a, b);
        a
    }

    #[test]
    fn single_function_is_closed_form() {
        let fam = FunctionFamily::from_values(&[&[2, 1, 3]], 5, 3).unwrap();
        assert_eq!(both(&fam), related_sequence_count(3, 5, 3).unwrap());
    }

    #[test]
    fn full_lists_give_one() {
        let fam = FunctionFamily::from_values(&[&[1, 2, 3], &[3, 3, 1], &[2, 1, 2]], 3, 3).unwrap();
        assert_eq!(both(&fam), Count::one());
    }

    #[test]
    fn two_singletons() {
        let fam = FunctionFamily::from_values(&[&[1], &[2]], 3, 2).unwrap();
        assert_eq!(both(&fam), Count::from(3u32));
    }

    #[test]
    fn empty_family_counts_zero() {
        let fam = FunctionFamily::new(Vec::new(), 3, 2).unwrap();
        assert_eq!(both(&fam), Count::zero());
    }

    #[test]
    fn order_does_not_matter() {
        let a = FunctionFamily::from_values(&[&[1, 2, 3], &[2, 2, 1], &[3, 1, 1]], 4, 2).unwrap();
        let b = FunctionFamily::from_values(&[&[3, 1, 1], &[1, 2, 3], &[2, 2, 1]], 4, 2).unwrap();
        assert_eq!(both(&a), both(&b));
    }

    #[test]
    fn cap_is_enforced() {
        let values: Vec<Vec<u32>> = (0..5).map(|i| vec![1 + i % 2]).collect();
        let refs: Vec<&[u32]> = values.iter().map(Vec::as_slice).collect();
        let fam = FunctionFamily::from_values(&refs, 2, 1).unwrap();
        assert!(union_count_paper(&fam, 4).unwrap_err().is_cap_overflow());
        assert!(union_count_subsets(&fam, 4).unwrap_err().is_cap_overflow());
    }
}
