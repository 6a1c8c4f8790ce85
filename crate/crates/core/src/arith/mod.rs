//! Exact scalar arithmetic.
//!
//! Three layers, each closed under exactly the operations the rest of the
//! crate needs:
//!
//! * [`Rational`] — arbitrary precision rationals (re-exported from `num`).
//! * [`Monomial`] — positive reals of the form `∏ pᵢ^{eᵢ}` with `pᵢ` prime and
//!   `eᵢ ∈ ℚ`. Closed under multiplication, division and rational powers, so
//!   iterating maps like `x ↦ x⁴` or `x ↦ √x` on rational endpoints stays
//!   exact. Ordering is decided symbolically where possible and otherwise by
//!   refining rational enclosures of `∑ eᵢ ln pᵢ`.
//! * [`Radical`] — finite formal sums `∑ qᵢ·mᵢ` with `qᵢ ∈ ℚ` and `mᵢ`
//!   fractional monomials. This is where operator weights live; distinct
//!   normalized monomials are linearly independent over ℚ, so equality is
//!   coefficient-wise.
//!
//! [`Exact`] bundles a signed value that is either a plain rational or a
//! signed monomial; it is the endpoint type for interval arithmetic.

mod logcmp;
mod monomial;
mod radical;

pub use monomial::{Exact, Monomial, Sign};
pub use radical::Radical;

pub type Rational = num_rational::BigRational;
pub type BigInt = num_bigint::BigInt;
pub type BigUint = num_bigint::BigUint;

use alloc::string::String;
use alloc::vec::Vec;

/// Errors from exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// Addition of values that are not both rational.
    IrrationalSum,
    /// A rational whose factorization exceeds the trial-division budget.
    Unfactorable(String),
    /// Even root or fractional power of a negative value.
    NegativeRoot,
    /// Square root of a radical with more than one term.
    MultiTermRoot,
    /// Division by zero.
    DivisionByZero,
    /// A symbolic power too large to expand into a plain rational.
    PowerOverflow,
    /// The log-comparison loop failed to separate two distinct values
    /// within its precision budget.
    PrecisionExhausted,
}

impl core::fmt::Display for ArithError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ArithError::IrrationalSum => write!(f, "sum of irrational values is not representable"),
            ArithError::Unfactorable(s) => write!(f, "cannot factor {s} into primes"),
            ArithError::NegativeRoot => write!(f, "root of a negative value"),
            ArithError::MultiTermRoot => write!(f, "square root of a multi-term radical"),
            ArithError::DivisionByZero => write!(f, "division by zero"),
            ArithError::PowerOverflow => write!(f, "power too large to expand"),
            ArithError::PrecisionExhausted => write!(f, "log comparison precision exhausted"),
        }
    }
}

pub(crate) fn rational_from_u64(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical rendering: `n` when the denominator is 1, otherwise `n/d`.
pub fn rational_to_string(q: &Rational) -> String {
    use num_traits::One;
    if q.denom().is_one() {
        alloc::format!("{}", q.numer())
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// Deterministic trial-division factorization of a positive integer.
///
/// Returns prime/exponent pairs in ascending prime order. Gives up (returns
/// `None`) when a cofactor survives trial division up to 2²⁰ and is not
/// provably prime by the deterministic Miller–Rabin bases for u64.
pub(crate) fn factor_biguint(n: &BigUint) -> Option<Vec<(u64, u32)>> {
    use num_traits::{One, ToPrimitive, Zero};
    let mut out: Vec<(u64, u32)> = Vec::new();
    if n.is_zero() {
        return None;
    }
    let mut m = n.clone();
    let one = BigUint::one();
    let mut push = |p: u64, k: u32| {
        if k > 0 {
            out.push((p, k));
        }
    };
    let mut p: u64 = 2;
    while m > one {
        if p > (1 << 20) {
            // Residual cofactor: accept only if it fits u64 and is prime.
            let r = m.to_u64()?;
            if is_prime_u64(r) {
                push(r, 1);
                break;
            }
            return None;
        }
        let pb = BigUint::from(p);
        let mut k = 0u32;
        loop {
            let (q, r) = num_integer::Integer::div_rem(&m, &pb);
            if r.is_zero() {
                m = q;
                k += 1;
            } else {
                break;
            }
        }
        push(p, k);
        p = if p == 2 { 3 } else { p + 2 };
        // Stop trial division once p² exceeds the remaining cofactor.
        if m > one {
            let pb2 = BigUint::from(p) * BigUint::from(p);
            if pb2 > m {
                let r = m.to_u64();
                match r {
                    Some(r) => {
                        push(r, 1);
                        m = one.clone();
                    }
                    None => return None,
                }
            }
        }
    }
    Some(out)
}

/// Deterministic Miller–Rabin for u64.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_small_numbers() {
        assert_eq!(factor_biguint(&BigUint::from(360u32)), Some(alloc::vec![(2, 3), (3, 2), (5, 1)]));
        assert_eq!(factor_biguint(&BigUint::from(1u32)), Some(alloc::vec![]));
        assert_eq!(factor_biguint(&BigUint::from(97u32)), Some(alloc::vec![(97, 1)]));
    }

    #[test]
    fn miller_rabin_agrees_with_naive() {
        for n in 0u64..2000 {
            let naive = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime_u64(n), naive, "n = {n}");
        }
        assert!(is_prime_u64(0xffff_ffff_ffff_ffc5)); // largest u64 prime
    }
}
