//! Formal finite sums `∑ qᵢ·mᵢ` with rational coefficients and fractional
//! prime-power monomials `mᵢ` (all exponents in (0,1)).
//!
//! Monomials with distinct fractional exponent vectors are linearly
//! independent over ℚ, so the representation is canonical: two radicals are
//! equal iff their coefficient maps coincide. Square roots are supported for
//! single-term nonnegative values, which is all the weight calculus needs
//! (weights arise as square roots of single-term Radon–Nikodym densities).

use super::monomial::{Exact, Monomial, Sign};
use super::{rational_to_string, ArithError, Rational};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Radical {
    /// basis monomial (fractional exponents only) → rational coefficient (nonzero)
    terms: BTreeMap<Monomial, Rational>,
}

impl Radical {
    pub fn zero() -> Self {
        Radical { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Radical::from_rational(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|q| q.is_one())
                .unwrap_or(false)
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut r = Radical::zero();
        r.push(Monomial::one(), q);
        r
    }

    pub fn from_i64(n: i64) -> Self {
        Radical::from_rational(Rational::from_integer(n.into()))
    }

    /// `q·m` with the monomial normalized into (coefficient, fractional part).
    pub fn from_term(q: Rational, m: Monomial) -> Result<Self, ArithError> {
        let (int_part, frac) = m.split_fractional().ok_or(ArithError::PowerOverflow)?;
        let mut r = Radical::zero();
        r.push(frac, q * int_part);
        Ok(r)
    }

    /// A positive monomial as a radical.
    pub fn from_monomial(m: Monomial) -> Result<Self, ArithError> {
        Radical::from_term(Rational::one(), m)
    }

    pub fn from_exact(x: &Exact) -> Result<Self, ArithError> {
        match x {
            Exact::Rat(q) => Ok(Radical::from_rational(q.clone())),
            Exact::Pow(s, m) => {
                let q = match s {
                    Sign::Pos => Rational::one(),
                    Sign::Neg => -Rational::one(),
                };
                Radical::from_term(q, m.clone())
            }
        }
    }

    fn push(&mut self, m: Monomial, q: Rational) {
        if q.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(q);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &q;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Radical) -> Radical {
        let mut r = self.clone();
        for (m, q) in &other.terms {
            r.push(m.clone(), q.clone());
        }
        r
    }

    pub fn neg(&self) -> Radical {
        Radical {
            terms: self.terms.iter().map(|(m, q)| (m.clone(), -q.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Radical) -> Radical {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Radical) -> Result<Radical, ArithError> {
        let mut r = Radical::zero();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &other.terms {
                let m = ma.mul(mb);
                let (int_part, frac) = m.split_fractional().ok_or(ArithError::PowerOverflow)?;
                r.push(frac, qa * qb * int_part);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, q: &Rational) -> Radical {
        if q.is_zero() {
            return Radical::zero();
        }
        Radical {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    /// Square root of a single-term nonnegative radical.
    pub fn sqrt(&self) -> Result<Radical, ArithError> {
        if self.is_zero() {
            return Ok(Radical::zero());
        }
        if self.terms.len() != 1 {
            return Err(ArithError::MultiTermRoot);
        }
        let (m, q) = self.terms.iter().next().unwrap();
        if q.is_negative() {
            return Err(ArithError::NegativeRoot);
        }
        let coeff_mono = Monomial::from_positive_rational(q)?;
        let half = Rational::new(1.into(), 2.into());
        let root = coeff_mono.mul(m).pow(&half);
        Radical::from_monomial(root)
    }

    pub fn recip(&self) -> Result<Radical, ArithError> {
        if self.terms.len() != 1 {
            return Err(ArithError::MultiTermRoot);
        }
        let (m, q) = self.terms.iter().next().unwrap();
        if q.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let coeff_mono = Monomial::from_positive_rational(&q.abs())?;
        let inv = coeff_mono.mul(m).recip();
        let r = Radical::from_monomial(inv)?;
        Ok(if q.is_negative() { r.neg() } else { r })
    }

    /// The rational value when the radical is a plain rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(q) = self.terms.get(&Monomial::one()) {
                return Some(q.clone());
            }
        }
        None
    }

    /// Exact numeric value as an `Exact` when single-term (or zero).
    pub fn as_exact(&self) -> Option<Exact> {
        if self.is_zero() {
            return Some(Exact::zero());
        }
        if self.terms.len() != 1 {
            return None;
        }
        let (m, q) = self.terms.iter().next().unwrap();
        if m.is_one() {
            return Some(Exact::Rat(q.clone()));
        }
        let coeff = Monomial::from_positive_rational(&q.abs()).ok()?;
        let sign = if q.is_negative() { Sign::Neg } else { Sign::Pos };
        Some(Exact::Pow(sign, coeff.mul(m)))
    }

    /// Terms in canonical (monomial-ascending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn to_display_string(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, q)| {
                if m.is_one() {
                    rational_to_string(q)
                } else if q.is_one() {
                    alloc::format!("{m}")
                } else {
                    alloc::format!("{}*{m}", rational_to_string(q))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl core::fmt::Display for Radical {
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

    fn sqrt_of(n: i64, d: i64) -> Radical {
        Radical::from_rational(q(n, d)).sqrt().unwrap()
    }

    #[test]
    fn sqrt_normalizes() {
        // √8 = 2·√2
        let s8 = sqrt_of(8, 1);
        let s2 = sqrt_of(2, 1);
        assert_eq!(s8, s2.scale(&q(2, 1)));
        // √(1/2)·√2 = 1
        let p = sqrt_of(1, 2).mul(&sqrt_of(2, 1)).unwrap();
        assert!(p.is_one());
    }

    #[test]
    fn sums_cancel_exactly() {
        let a = sqrt_of(2, 1).add(&sqrt_of(3, 1));
        let b = sqrt_of(3, 1).add(&sqrt_of(2, 1));
        assert_eq!(a, b);
        assert!(a.sub(&b).is_zero());
        let twice = a.add(&a);
        assert_eq!(twice, a.scale(&q(2, 1)));
    }

    #[test]
    fn square_of_sum_expands() {
        // (√2 + √3)² = 5 + 2·√6
        let a = sqrt_of(2, 1).add(&sqrt_of(3, 1));
        let sq = a.mul(&a).unwrap();
        let expected = Radical::from_rational(q(5, 1)).add(&sqrt_of(6, 1).scale(&q(2, 1)));
        assert_eq!(sq, expected);
    }

    #[test]
    fn multi_term_roots_are_rejected() {
        let a = sqrt_of(2, 1).add(&Radical::one());
        assert_eq!(a.sqrt(), Err(ArithError::MultiTermRoot));
    }
}
