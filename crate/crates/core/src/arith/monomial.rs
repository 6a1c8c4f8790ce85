//! Prime-power products with rational exponents, and the signed endpoint
//! scalar built on them.

use super::logcmp::{sign_of_log_combination, LogTerm};
use super::{factor_biguint, rational_from_u64, rational_to_string, ArithError, BigInt, Rational};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A positive real `∏ p^{e_p}` with `p` prime and `e_p ∈ ℚ \ {0}`.
///
/// The empty product is 1. Every positive rational embeds (by factoring), and
/// the class is closed under multiplication, division, and raising to any
/// rational power — which is exactly what exact iteration of monomial maps
/// `x ↦ c·x^p` needs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    factors: BTreeMap<u64, Rational>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: BTreeMap::new() }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.factors.iter().map(|(p, e)| (*p, e))
    }

    fn insert(&mut self, p: u64, e: Rational) {
        if e.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.factors.entry(p) {
            Entry::Vacant(v) => {
                v.insert(e);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &e;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Factor a positive rational into a monomial.
    pub fn from_positive_rational(q: &Rational) -> Result<Self, ArithError> {
        assert!(q.is_positive(), "monomials represent positive reals");
        let mut m = Monomial::one();
        let nf = factor_biguint(q.numer().magnitude())
            .ok_or_else(|| ArithError::Unfactorable(rational_to_string(q)))?;
        for (p, k) in nf {
            m.insert(p, Rational::from_integer((k as i64).into()));
        }
        let df = factor_biguint(q.denom().magnitude())
            .ok_or_else(|| ArithError::Unfactorable(rational_to_string(q)))?;
        for (p, k) in df {
            m.insert(p, Rational::from_integer((-(k as i64)).into()));
        }
        Ok(m)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.clone();
        for (p, e) in &other.factors {
            m.insert(*p, e.clone());
        }
        m
    }

    pub fn recip(&self) -> Monomial {
        Monomial {
            factors: self.factors.iter().map(|(p, e)| (*p, -e.clone())).collect(),
        }
    }

    pub fn pow(&self, r: &Rational) -> Monomial {
        if r.is_zero() {
            return Monomial::one();
        }
        Monomial {
            factors: self.factors.iter().map(|(p, e)| (*p, e * r)).collect(),
        }
    }

    /// True when every exponent is an integer (the value is rational).
    pub fn is_rational_valued(&self) -> bool {
        self.factors.values().all(|e| e.denom().is_one())
    }

    /// Expand into a plain rational when all exponents are integers and the
    /// result stays below a size budget.
    pub fn to_rational(&self) -> Result<Rational, ArithError> {
        if !self.is_rational_valued() {
            return Err(ArithError::PowerOverflow);
        }
        // Budget: total bit size of the expansion.
        let mut bits: u64 = 0;
        for (p, e) in &self.factors {
            let k = e.numer().to_i64().ok_or(ArithError::PowerOverflow)?;
            let plen = 64 - p.leading_zeros() as u64;
            bits = bits.saturating_add(k.unsigned_abs().saturating_mul(plen));
            if bits > 4096 {
                return Err(ArithError::PowerOverflow);
            }
        }
        let mut q = Rational::one();
        for (p, e) in &self.factors {
            let k = e.numer().to_i64().ok_or(ArithError::PowerOverflow)?;
            let pq = rational_from_u64(*p);
            let mut pw = Rational::one();
            for _ in 0..k.unsigned_abs() {
                pw *= &pq;
            }
            if k >= 0 {
                q *= pw;
            } else {
                q /= pw;
            }
        }
        Ok(q)
    }

    /// Split into an integer-exponent part (returned as a rational, expanded
    /// when affordable) and the fractional remainder with exponents in (0,1).
    ///
    /// Returns `None` when the integer part is too large to expand.
    pub fn split_fractional(&self) -> Option<(Rational, Monomial)> {
        let mut int_part = Monomial::one();
        let mut frac = Monomial::one();
        for (p, e) in &self.factors {
            let fl = e.floor();
            let fr = e - &fl;
            if !fl.is_zero() {
                int_part.insert(*p, fl);
            }
            if !fr.is_zero() {
                frac.insert(*p, fr);
            }
        }
        match int_part.to_rational() {
            Ok(q) => Some((q, frac)),
            Err(_) => None,
        }
    }

    /// Exact comparison of two positive reals.
    pub fn cmp_value(&self, other: &Monomial) -> Result<Ordering, ArithError> {
        if self == other {
            return Ok(Ordering::Equal);
        }
        // Distinct exponent vectors denote distinct reals; decide by logs.
        let mut terms: Vec<LogTerm> = Vec::new();
        let mut diff = self.clone();
        for (p, e) in &other.factors {
            diff.insert(*p, -e.clone());
        }
        for (p, e) in &diff.factors {
            terms.push(LogTerm { coeff: e.clone(), base: rational_from_u64(*p) });
        }
        sign_of_log_combination(&terms)
    }

    /// Compare against a positive rational without factoring it.
    pub fn cmp_positive_rational(&self, q: &Rational) -> Result<Ordering, ArithError> {
        debug_assert!(q.is_positive());
        if self.is_rational_valued() {
            // Equality is decidable by p-adic valuations.
            if self.equals_rational(q) {
                return Ok(Ordering::Equal);
            }
        }
        let mut terms: Vec<LogTerm> = self
            .factors
            .iter()
            .map(|(p, e)| LogTerm { coeff: e.clone(), base: rational_from_u64(*p) })
            .collect();
        terms.push(LogTerm { coeff: -Rational::one(), base: q.clone() });
        sign_of_log_combination(&terms)
    }

    /// Exact equality with a positive rational, via p-adic valuations; works
    /// even when exponents are astronomically large.
    fn equals_rational(&self, q: &Rational) -> bool {
        if !self.is_rational_valued() {
            return false;
        }
        let mut num = q.numer().magnitude().clone();
        let mut den = q.denom().magnitude().clone();
        use num_bigint::BigUint;
        for (p, e) in &self.factors {
            let pv = BigUint::from(*p);
            let vn = extract_valuation(&mut num, &pv);
            let vd = extract_valuation(&mut den, &pv);
            let val = BigInt::from(vn) - BigInt::from(vd);
            if &val != e.numer() {
                return false;
            }
        }
        num.is_one() && den.is_one()
    }
}

fn extract_valuation(n: &mut num_bigint::BigUint, p: &num_bigint::BigUint) -> u64 {
    let mut v = 0u64;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&*n, p);
        if r.is_zero() {
            *n = q;
            v += 1;
        } else {
            return v;
        }
    }
}

impl core::fmt::Display for Monomial {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, e) in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^({})", rational_to_string(e))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Neg,
    Pos,
}

/// An exact real scalar: either a rational, or a signed prime-power product.
///
/// `Pow` values with small integer exponents normalize themselves back into
/// `Rat`, so representations of rationals are canonical in practice; equality
/// and ordering are semantic regardless.
#[derive(Debug, Clone)]
pub enum Exact {
    Rat(Rational),
    Pow(Sign, Monomial),
}

impl Exact {
    pub fn zero() -> Self {
        Exact::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Exact::Rat(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Exact::Rat(q)
    }

    pub fn from_i64(n: i64) -> Self {
        Exact::Rat(Rational::from_integer(n.into()))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Exact::Pow(Sign::Pos, m).normalize()
    }

    fn normalize(self) -> Self {
        match self {
            Exact::Rat(q) => Exact::Rat(q),
            Exact::Pow(s, m) => match m.to_rational() {
                Ok(q) => match s {
                    Sign::Pos => Exact::Rat(q),
                    Sign::Neg => Exact::Rat(-q),
                },
                Err(_) => Exact::Pow(s, m),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Exact::Rat(q) if q.is_zero())
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Exact::Rat(q) => q.is_positive(),
            Exact::Pow(Sign::Pos, _) => true,
            Exact::Pow(Sign::Neg, _) => false,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Exact::Rat(q) => q.is_negative(),
            Exact::Pow(Sign::Neg, _) => true,
            Exact::Pow(Sign::Pos, _) => false,
        }
    }

    /// The rational value, when there is one.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Exact::Rat(q) => Some(q.clone()),
            Exact::Pow(s, m) => m.to_rational().ok().map(|q| match s {
                Sign::Pos => q,
                Sign::Neg => -q,
            }),
        }
    }

    /// Positive magnitude as a monomial (factoring rationals on demand).
    fn magnitude(&self) -> Result<Monomial, ArithError> {
        match self {
            Exact::Rat(q) => {
                if q.is_zero() {
                    Err(ArithError::DivisionByZero)
                } else {
                    Monomial::from_positive_rational(&q.abs())
                }
            }
            Exact::Pow(_, m) => Ok(m.clone()),
        }
    }

    pub fn neg(&self) -> Exact {
        match self {
            Exact::Rat(q) => Exact::Rat(-q.clone()),
            Exact::Pow(Sign::Pos, m) => Exact::Pow(Sign::Neg, m.clone()),
            Exact::Pow(Sign::Neg, m) => Exact::Pow(Sign::Pos, m.clone()),
        }
    }

    /// Addition — defined only when both operands are rational.
    pub fn add(&self, other: &Exact) -> Result<Exact, ArithError> {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => Ok(Exact::Rat(a + b)),
            _ => Err(ArithError::IrrationalSum),
        }
    }

    pub fn sub(&self, other: &Exact) -> Result<Exact, ArithError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Exact) -> Result<Exact, ArithError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Exact::zero());
        }
        match (self, other) {
            (Exact::Rat(a), Exact::Rat(b)) => Ok(Exact::Rat(a * b)),
            _ => {
                let sign = if self.is_positive() == other.is_positive() {
                    Sign::Pos
                } else {
                    Sign::Neg
                };
                let m = self.magnitude()?.mul(&other.magnitude()?);
                Ok(Exact::Pow(sign, m).normalize())
            }
        }
    }

    pub fn recip(&self) -> Result<Exact, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        match self {
            Exact::Rat(q) => Ok(Exact::Rat(q.recip())),
            Exact::Pow(s, m) => Ok(Exact::Pow(*s, m.recip()).normalize()),
        }
    }

    /// Raise to a rational power. Negative bases admit only integer powers;
    /// zero admits positive powers.
    pub fn pow(&self, r: &Rational) -> Result<Exact, ArithError> {
        if r.is_zero() {
            return Ok(Exact::one());
        }
        if self.is_zero() {
            return if r.is_positive() {
                Ok(Exact::zero())
            } else {
                Err(ArithError::DivisionByZero)
            };
        }
        if self.is_negative() {
            if !r.denom().is_one() {
                return Err(ArithError::NegativeRoot);
            }
            let k = r.numer().to_i64().ok_or(ArithError::PowerOverflow)?;
            let mag = self.magnitude()?.pow(r);
            let sign = if k % 2 == 0 { Sign::Pos } else { Sign::Neg };
            return Ok(Exact::Pow(sign, mag).normalize());
        }
        Ok(Exact::Pow(Sign::Pos, self.magnitude()?.pow(r)).normalize())
    }

    pub fn sqrt(&self) -> Result<Exact, ArithError> {
        self.pow(&Rational::new(1.into(), 2.into()))
    }

    pub fn compare(&self, other: &Exact) -> Result<Ordering, ArithError> {
        // Sign classes first.
        let sc = |x: &Exact| {
            if x.is_zero() {
                0i8
            } else if x.is_positive() {
                1
            } else {
                -1
            }
        };
        let (sa, sb) = (sc(self), sc(other));
        if sa != sb {
            return Ok(sa.cmp(&sb));
        }
        if sa == 0 {
            return Ok(Ordering::Equal);
        }
        // Same nonzero sign: compare magnitudes.
        let flip = sa < 0;
        let ord = match (self, other) {
            (Exact::Rat(a), Exact::Rat(b)) => a.abs().cmp(&b.abs()),
            (Exact::Pow(_, m), Exact::Rat(q)) => m.cmp_positive_rational(&q.abs())?,
            (Exact::Rat(q), Exact::Pow(_, m)) => m.cmp_positive_rational(&q.abs())?.reverse(),
            (Exact::Pow(_, a), Exact::Pow(_, b)) => a.cmp_value(b)?,
        };
        Ok(if flip { ord.reverse() } else { ord })
    }

    pub fn to_display_string(&self) -> String {
        match self {
            Exact::Rat(q) => rational_to_string(q),
            Exact::Pow(s, m) => {
                let sign = if matches!(s, Sign::Neg) { "-" } else { "" };
                alloc::format!("{sign}{m}")
            }
        }
    }
}

impl PartialEq for Exact {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other)
            .expect("endpoint comparison must be decidable")
            == Ordering::Equal
    }
}

impl Eq for Exact {}

impl PartialOrd for Exact {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exact {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
            .expect("endpoint comparison must be decidable")
    }
}

impl core::fmt::Display for Exact {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.to_display_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn monomial_roundtrip_and_pow() {
        let m = Monomial::from_positive_rational(&q(8, 27)).unwrap();
        assert_eq!(m.to_rational().unwrap(), q(8, 27));
        let r = m.pow(&q(1, 3));
        assert_eq!(r.to_rational().unwrap(), q(2, 3));
        let s = m.pow(&q(1, 2));
        assert!(!s.is_rational_valued());
    }

    #[test]
    fn exact_ordering_mixed_forms() {
        let sqrt2 = Exact::from_i64(2).sqrt().unwrap(); // 2^(1/2)
        assert!(sqrt2 > Exact::Rat(q(7, 5)));
        assert!(sqrt2 < Exact::Rat(q(3, 2)));
        let x = sqrt2.mul(&sqrt2).unwrap();
        assert_eq!(x, Exact::from_i64(2));
        // (1/4)^(1/4) = sqrt(2)/2
        let a = Exact::Rat(q(1, 4)).pow(&q(1, 4)).unwrap();
        let b = sqrt2.mul(&Exact::Rat(q(1, 2))).unwrap();
        assert_eq!(a, b);
        // negative values order below positives
        assert!(Exact::Rat(q(-1, 2)) < a);
        assert_eq!(Exact::Rat(q(-2, 1)).pow(&q(2, 1)).unwrap(), Exact::from_i64(4));
    }

    #[test]
    fn huge_exponents_compare_without_expansion() {
        // 2^(-2·4^20) vs 1/4 : clearly smaller.
        let m = Monomial::from_positive_rational(&q(2, 1))
            .unwrap()
            .pow(&q(-2 * (1i64 << 40), 1));
        let tiny = Exact::Pow(Sign::Pos, m);
        assert!(tiny < Exact::Rat(q(1, 4)));
        assert!(tiny > Exact::zero());
    }

    #[test]
    fn irrational_sum_is_rejected() {
        let sqrt2 = Exact::from_i64(2).sqrt().unwrap();
        assert_eq!(sqrt2.add(&Exact::one()), Err(ArithError::IrrationalSum));
        assert!(Exact::Rat(q(1, 3)).add(&Exact::Rat(q(1, 6))).unwrap() == Exact::Rat(q(1, 2)));
    }
}
