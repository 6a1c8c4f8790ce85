//! Sign determination for `∑ cᵢ · ln(xᵢ)` with rational `cᵢ` and positive
//! rational `xᵢ`, by refining rational enclosures of each logarithm.
//!
//! The caller guarantees the combination is nonzero (distinct prime-exponent
//! vectors; `ln` of distinct primes are linearly independent over ℚ), so the
//! refinement loop terminates.

use super::{ArithError, Rational};
use alloc::vec::Vec;
use core::cmp::Ordering;
use num_traits::{One, Signed, Zero};

/// Enclosure of ln(x) for rational x > 0, with `terms` series terms.
///
/// Range-reduces to x = m·2^k with m ∈ [1,2), then uses
/// ln m = 2·atanh t with t = (m−1)/(m+1) ∈ [0,1/3).
fn ln_interval(x: &Rational, terms: usize) -> (Rational, Rational) {
    debug_assert!(x.is_positive());
    let k = floor_log2(x);
    let two = Rational::from_integer(2.into());
    let m = x / pow_rat(&two, k);
    debug_assert!(m >= Rational::one() && m < two);
    let (mlo, mhi) = atanh_based_ln(&m, terms);
    let (l2lo, l2hi) = ln2_interval(terms);
    if k >= 0 {
        let kq = Rational::from_integer(k.into());
        (&mlo + &kq * &l2lo, &mhi + &kq * &l2hi)
    } else {
        let kq = Rational::from_integer(k.into());
        // k negative: k·ln2 bounds swap.
        (&mlo + &kq * &l2hi, &mhi + &kq * &l2lo)
    }
}

fn pow_rat(b: &Rational, e: i64) -> Rational {
    let mut r = Rational::one();
    let (mut base, mut n) = if e >= 0 {
        (b.clone(), e as u64)
    } else {
        (b.recip(), (-e) as u64)
    };
    while n > 0 {
        if n & 1 == 1 {
            r *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    r
}

fn floor_log2(x: &Rational) -> i64 {
    let nb = x.numer().bits() as i64;
    let db = x.denom().bits() as i64;
    let mut k = nb - db;
    let two = Rational::from_integer(2.into());
    while pow_rat(&two, k) > *x {
        k -= 1;
    }
    while pow_rat(&two, k + 1) <= *x {
        k += 1;
    }
    k
}

/// ln m for m ∈ [1,2) via 2·atanh((m−1)/(m+1)); returns lower/upper bounds.
fn atanh_based_ln(m: &Rational, terms: usize) -> (Rational, Rational) {
    let one = Rational::one();
    let t = (m - &one) / (m + &one);
    if t.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    let t2 = &t * &t;
    let mut sum = Rational::zero();
    let mut tp = t.clone();
    for j in 0..terms {
        sum += &tp / Rational::from_integer((2 * j as i64 + 1).into());
        tp *= &t2;
    }
    // tail ≤ t^{2K+1}/((2K+1)(1−t²))
    let tail = &tp / (Rational::from_integer((2 * terms as i64 + 1).into()) * (&one - &t2));
    let two = Rational::from_integer(2.into());
    (&two * &sum, &two * (&sum + &tail))
}

fn ln2_interval(terms: usize) -> (Rational, Rational) {
    // ln 2 = 2·atanh(1/3)
    let m = Rational::from_integer(2.into());
    atanh_based_ln(&m, terms)
}

/// One term of a logarithmic combination: coefficient times ln(base).
pub(crate) struct LogTerm {
    pub coeff: Rational,
    pub base: Rational,
}

/// Sign of `∑ cᵢ ln(xᵢ)`, which the caller guarantees nonzero unless the
/// term list is empty (then `Equal`).
pub(crate) fn sign_of_log_combination(terms: &[LogTerm]) -> Result<Ordering, ArithError> {
    let live: Vec<&LogTerm> = terms.iter().filter(|t| !t.coeff.is_zero()).collect();
    if live.is_empty() {
        return Ok(Ordering::Equal);
    }
    let mut prec = 8usize;
    while prec <= (1 << 22) {
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for t in &live {
            let (llo, lhi) = ln_interval(&t.base, prec);
            if t.coeff.is_positive() {
                lo += &t.coeff * &llo;
                hi += &t.coeff * &lhi;
            } else {
                lo += &t.coeff * &lhi;
                hi += &t.coeff * &llo;
            }
        }
        if lo.is_positive() {
            return Ok(Ordering::Greater);
        }
        if hi.is_negative() {
            return Ok(Ordering::Less);
        }
        prec *= 4;
    }
    Err(ArithError::PrecisionExhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn ln_interval_brackets_known_values() {
        // ln 2 ≈ 0.693147
        let (lo, hi) = ln_interval(&q(2, 1), 16);
        assert!(lo < q(693148, 1000000));
        assert!(hi > q(693147, 1000000));
        assert!(lo <= hi);
        // ln(1/2) = −ln 2
        let (lo2, hi2) = ln_interval(&q(1, 2), 16);
        assert!(hi2 < Rational::zero());
        assert!(lo2 < hi2 || lo2 == hi2);
    }

    #[test]
    fn sign_detects_close_values() {
        // 2^10 vs 3^6.3: compare 10 ln2 − 63/10 ln3 : 1024 vs 3^6.3 ≈ 1013.6 → positive
        let s = sign_of_log_combination(&[
            LogTerm { coeff: q(10, 1), base: q(2, 1) },
            LogTerm { coeff: q(-63, 10), base: q(3, 1) },
        ])
        .unwrap();
        assert_eq!(s, Ordering::Greater);
        // 2^19 vs 3^12: 524288 vs 531441 → negative
        let s = sign_of_log_combination(&[
            LogTerm { coeff: q(19, 1), base: q(2, 1) },
            LogTerm { coeff: q(-12, 1), base: q(3, 1) },
        ])
        .unwrap();
        assert_eq!(s, Ordering::Less);
        assert_eq!(sign_of_log_combination(&[]).unwrap(), Ordering::Equal);
    }
}
