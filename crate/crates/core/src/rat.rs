//! Exact rationals.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use malachite::num::arithmetic::traits::{CheckedDiv, Pow, Sign};
use malachite::num::basic::traits::{One, Zero};
use malachite::{Integer, Rational};

use crate::error::ArithmeticError;
use crate::laurent::Summands;

/// A rational number in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(Rational);

impl Rat {
    pub fn zero() -> Self {
        Rat(Rational::ZERO)
    }

    pub fn one() -> Self {
        Rat(Rational::ONE)
    }

    pub fn from_int(n: i64) -> Self {
        Rat(Rational::from(n))
    }

    pub fn from_integer(n: Integer) -> Self {
        Rat(Rational::from(n))
    }

    /// `num / den`; fails when `den == 0`.
    pub fn new(num: i64, den: i64) -> Result<Self, ArithmeticError> {
        if den == 0 {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Rat(Rational::from_signeds(num, den)))
    }

    pub fn from_integers(num: Integer, den: Integer) -> Result<Self, ArithmeticError> {
        if den == 0 {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Rat(Rational::from_integers(num, den)))
    }

    pub fn numerator(&self) -> Integer {
        let n = Integer::from(self.0.to_numerator());
        if self.0.sign() == Ordering::Less {
            -n
        } else {
            n
        }
    }

    pub fn denominator(&self) -> Integer {
        Integer::from(self.0.to_denominator())
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }

    pub fn is_one(&self) -> bool {
        self.0 == 1
    }

    pub fn is_integer(&self) -> bool {
        *self.0.denominator_ref() == 1
    }

    pub fn signum(&self) -> Ordering {
        self.0.sign()
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat, ArithmeticError> {
        (&self.0)
            .checked_div(&rhs.0)
            .map(Rat)
            .ok_or(ArithmeticError::DivisionByZero)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Rat, ArithmeticError> {
        if e < 0 && self.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Rat((&self.0).pow(e)))
    }

    pub fn as_rational(&self) -> &Rational {
        &self.0
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<Integer> for Rat {
    fn from(n: Integer) -> Self {
        Rat::from_integer(n)
    }
}

macro_rules! rat_binop {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr<&Rat> for &Rat {
            type Output = Rat;
            fn $m(self, rhs: &Rat) -> Rat {
                Rat(std::ops::$tr::$m(&self.0, &rhs.0))
            }
        }
        impl std::ops::$tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat(std::ops::$tr::$m(self.0, rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);

impl std::ops::Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl std::ops::Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Summands for Rat {
    fn summands(&self) -> Vec<(bool, String)> {
        let neg = self.signum() == Ordering::Less;
        let abs = if neg { -self } else { self.clone() };
        vec![(neg, abs.to_string())]
    }
}

impl FromStr for Rat {
    type Err = ArithmeticError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| {
            Integer::from_str(t.trim()).map_err(|_| ArithmeticError::Parse(s.to_string()))
        };
        match s.split_once('/') {
            Some((n, d)) => Rat::from_integers(parse_int(n)?, parse_int(d)?),
            None => Ok(Rat::from_integer(parse_int(s)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_in_lowest_terms() {
        let x = &Rat::new(1, 2).unwrap() + &Rat::new(1, 3).unwrap();
        assert_eq!(x, Rat::new(5, 6).unwrap());
        assert_eq!(x.to_string(), "5/6");
        assert_eq!(Rat::new(4, -6).unwrap().to_string(), "-2/3");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            Rat::one().checked_div(&Rat::zero()),
            Err(ArithmeticError::DivisionByZero)
        );
        assert!(Rat::zero().pow(-1).is_err());
        assert!(Rat::new(1, 0).is_err());
    }

    #[test]
    fn parses_fractions() {
        assert_eq!("-3/9".parse::<Rat>().unwrap(), Rat::new(-1, 3).unwrap());
        assert_eq!("12".parse::<Rat>().unwrap(), Rat::from_int(12));
        assert!("x".parse::<Rat>().is_err());
        assert_eq!(Rat::new(-3, 4).unwrap().numerator(), Integer::from(-3));
        assert_eq!(Rat::new(2, 3).unwrap().pow(-2).unwrap(), Rat::new(9, 4).unwrap());
    }
}
