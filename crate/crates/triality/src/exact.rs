//! Exact scalar arithmetic: arbitrary-precision rationals and the quadratic
//! extension Q(ω) where ω is a primitive cube root of unity.
//!
//! Rationals are [`num::BigRational`]: always stored reduced with positive
//! denominator, so equality is componentwise and canonical. Elements of Q(ω)
//! are kept in the basis {1, ω} with ω² rewritten as −1 − ω, which makes every
//! downstream equality test exact.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero in Q(omega)")]
    DivisionByZero,
}

/// An element a + b·ω of Q(ω), with ω² + ω + 1 = 0.
///
/// The coordinates are exact rationals; all products are reduced to the
/// {1, ω} basis immediately, so representation is canonical and `==` is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Eis {
    /// Coefficient of 1.
    pub re: Rat,
    /// Coefficient of ω.
    pub om: Rat,
}

impl Eis {
    pub fn new(re: Rat, om: Rat) -> Self {
        Eis { re, om }
    }

    pub fn from_rat(re: Rat) -> Self {
        Eis { re, om: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Eis::from_rat(rat(n))
    }

    pub fn zero() -> Self {
        Eis::from_int(0)
    }

    pub fn one() -> Self {
        Eis::from_int(1)
    }

    /// The generator ω.
    pub fn omega() -> Self {
        Eis { re: Rat::zero(), om: Rat::one() }
    }

    /// ω² = −1 − ω.
    pub fn omega_sq() -> Self {
        Eis { re: -Rat::one(), om: -Rat::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.om.is_zero()
    }

    /// Galois conjugation ω ↦ ω², i.e. a + bω ↦ (a − b) − bω.
    pub fn conj(&self) -> Self {
        Eis { re: &self.re - &self.om, om: -self.om.clone() }
    }

    /// Field norm x · conj(x) = a² − ab + b², always rational.
    pub fn norm(&self) -> Rat {
        let p = self * &self.conj();
        debug_assert!(p.om.is_zero());
        p.re
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Eis { re: c.re / &n, om: c.om / &n })
    }

    /// Exact division, with division by zero signalled explicitly.
    pub fn checked_div(&self, rhs: &Eis) -> Result<Eis, ExactError> {
        rhs.inv().map(|i| self * &i).ok_or(ExactError::DivisionByZero)
    }

    /// The rational part, provided the ω-coordinate vanishes.
    pub fn as_rat(&self) -> Option<Rat> {
        self.om.is_zero().then(|| self.re.clone())
    }

    /// The value as a rational integer, if it is one.
    pub fn as_int(&self) -> Option<BigInt> {
        if !self.om.is_zero() || !self.re.denom().is_one() {
            return None;
        }
        Some(self.re.numer().clone())
    }
}

impl Zero for Eis {
    fn zero() -> Self {
        Eis::zero()
    }
    fn is_zero(&self) -> bool {
        Eis::is_zero(self)
    }
}

impl One for Eis {
    fn one() -> Self {
        Eis::one()
    }
}

impl Add for Eis {
    type Output = Eis;
    fn add(self, rhs: Eis) -> Eis {
        Eis { re: self.re + rhs.re, om: self.om + rhs.om }
    }
}

impl Sub for Eis {
    type Output = Eis;
    fn sub(self, rhs: Eis) -> Eis {
        Eis { re: self.re - rhs.re, om: self.om - rhs.om }
    }
}

impl Neg for Eis {
    type Output = Eis;
    fn neg(self) -> Eis {
        Eis { re: -self.re, om: -self.om }
    }
}

impl Mul for Eis {
    type Output = Eis;
    fn mul(self, rhs: Eis) -> Eis {
        &self * &rhs
    }
}

// (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², and ω² = −1 − ω.
impl Mul for &Eis {
    type Output = Eis;
    fn mul(self, rhs: &Eis) -> Eis {
        let bd = &self.om * &rhs.om;
        Eis {
            re: &self.re * &rhs.re - &bd,
            om: &self.re * &rhs.om + &self.om * &rhs.re - &bd,
        }
    }
}

impl Add for &Eis {
    type Output = Eis;
    fn add(self, rhs: &Eis) -> Eis {
        Eis { re: &self.re + &rhs.re, om: &self.om + &rhs.om }
    }
}

impl Sub for &Eis {
    type Output = Eis;
    fn sub(self, rhs: &Eis) -> Eis {
        Eis { re: &self.re - &rhs.re, om: &self.om - &rhs.om }
    }
}

/// Panics on division by zero; use [`Eis::checked_div`] to handle it.
impl Div for Eis {
    type Output = Eis;
    fn div(self, rhs: Eis) -> Eis {
        self.checked_div(&rhs).expect("division by zero in Q(omega)")
    }
}

impl fmt::Display for Eis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.om.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}w", coeff(&self.om));
        }
        if self.om.is_negative() {
            write!(f, "{} - {}w", self.re, coeff(&-self.om.clone()))
        } else {
            write!(f, "{} + {}w", self.re, coeff(&self.om))
        }
    }
}

impl fmt::Debug for Eis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn coeff(r: &Rat) -> String {
    if r.is_one() {
        String::new()
    } else {
        format!("{r}*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w() -> Eis {
        Eis::omega()
    }

    #[test]
    fn rationals_are_canonical() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        let r = ratio(1, -2);
        assert!(r.denom().is_positive());
        assert_eq!(r, ratio(-1, 2));
        assert_eq!(rat(0), Rat::zero());
    }

    #[test]
    fn omega_satisfies_minimal_polynomial() {
        // ω·ω = −1 − ω and ω·ω² = 1.
        assert_eq!(&w() * &w(), Eis::omega_sq());
        assert_eq!(&w() * &Eis::omega_sq(), Eis::one());
        // 1 + ω + ω² = 0.
        assert_eq!(Eis::one() + w() + Eis::omega_sq(), Eis::zero());
        // (1 + ω)² = ω⁴ = ω.
        let x = Eis::one() + w();
        assert_eq!(&x * &x, w());
    }

    #[test]
    fn inverse_of_one_minus_omega() {
        // 1/(1−ω) = (2+ω)/3, cross-checked by multiplying back.
        let d = Eis::one() - w();
        let expected = Eis::new(ratio(2, 3), ratio(1, 3));
        assert_eq!(Eis::one().checked_div(&d).unwrap(), expected);
        assert_eq!(&d * &expected, Eis::one());
    }

    #[test]
    fn resolvent_sum_is_one() {
        // 1/(1−ω) + 1/(1−ω²) = 1.
        let a = Eis::one().checked_div(&(Eis::one() - w())).unwrap();
        let b = Eis::one().checked_div(&(Eis::one() - Eis::omega_sq())).unwrap();
        assert_eq!(a + b, Eis::one());
    }

    #[test]
    fn division_identities() {
        let x = Eis::new(ratio(3, 7), ratio(-2, 5));
        assert_eq!(x.clone().checked_div(&Eis::one()).unwrap(), x);
        assert_eq!(
            x.checked_div(&Eis::zero()),
            Err(ExactError::DivisionByZero)
        );
        assert_eq!(Eis::zero().inv(), None);
    }

    #[test]
    fn conjugation_formula() {
        let x = Eis::new(rat(2), rat(5));
        assert_eq!(x.conj(), Eis::new(rat(-3), rat(-5)));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn as_int_detects_integers() {
        assert_eq!(Eis::from_int(-7).as_int(), Some(BigInt::from(-7)));
        assert_eq!(Eis::new(ratio(1, 2), rat(0)).as_int(), None);
        assert_eq!(w().as_int(), None);
    }

    fn arb_eis() -> impl Strategy<Value = Eis> {
        (-40i64..40, 1i64..8, -40i64..40, 1i64..8)
            .prop_map(|(a, b, c, d)| Eis::new(ratio(a, b), ratio(c, d)))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_eis(), y in arb_eis(), z in arb_eis()) {
            let assoc = &(&x * &y) * &z == &x * &(&y * &z);
            prop_assert!(assoc);
            let distrib = &x * &(y.clone() + z.clone())
                == (&x * &y) + (&x * &z);
            prop_assert!(distrib);
            prop_assert_eq!(&x * &y, &y * &x);
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), Eis::one());
            }
        }

        #[test]
        fn conjugation_is_automorphism(x in arb_eis(), y in arb_eis()) {
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            prop_assert_eq!((x.clone() + y.clone()).conj(), x.conj() + y.conj());
            // The norm is rational: x·conj(x) has no ω-component.
            prop_assert!((&x * &x.conj()).om.is_zero());
        }
    }
}
