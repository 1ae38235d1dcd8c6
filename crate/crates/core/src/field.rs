//! Coefficient fields.
//!
//! Every algorithm in the crate is generic over [`Field`], so the same code
//! runs symbolically over [`ParamRat`] and numerically over [`Rat`] at a
//! sampled parameter point.

use std::fmt;

use malachite::Integer;

use crate::error::ArithmeticError;
use crate::laurent::Summands;
use crate::param::{Param, ParamPoly, ParamRat, Point};
use crate::rat::Rat;

pub trait Field:
    Clone + PartialEq + fmt::Debug + fmt::Display + Summands + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_integer(n: &Integer) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn try_div(&self, rhs: &Self) -> Result<Self, ArithmeticError>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Integer power; negative exponents require `self != 0`.
    fn pow_i(&self, e: i64) -> Result<Self, ArithmeticError> {
        let base = if e < 0 {
            Self::one().try_div(self)?
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.times(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.times(&sq);
            }
        }
        Ok(acc)
    }

    /// False when the value still carries an odd power of `q^(1/2)`. Numeric
    /// fields cannot tell and always answer true.
    fn is_integral_in_q(&self) -> bool {
        true
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn from_i64(n: i64) -> Self {
        Rat::from_int(n)
    }
    fn from_integer(n: &Integer) -> Self {
        Rat::from_integer(n.clone())
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        self.checked_div(rhs)
    }
    fn is_one(&self) -> bool {
        Rat::is_one(self)
    }
    fn pow_i(&self, e: i64) -> Result<Self, ArithmeticError> {
        self.pow(e)
    }
}

impl Field for ParamRat {
    fn zero() -> Self {
        ParamRat::zero()
    }
    fn one() -> Self {
        ParamRat::one()
    }
    fn from_i64(n: i64) -> Self {
        ParamRat::from_int(n)
    }
    fn from_integer(n: &Integer) -> Self {
        ParamRat::from_poly(ParamPoly::constant(n.clone()))
    }
    fn is_zero(&self) -> bool {
        ParamRat::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn try_div(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        self.div(rhs)
    }
    fn is_one(&self) -> bool {
        ParamRat::is_one(self)
    }
    fn pow_i(&self, e: i64) -> Result<Self, ArithmeticError> {
        self.pow(e)
    }
    fn is_integral_in_q(&self) -> bool {
        self.is_even_in_s()
    }
}

/// Values of `s = q^(1/2)`, `a`, `b`, `c` in a coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<F> {
    pub s: F,
    pub a: F,
    pub b: F,
    pub c: F,
}

impl<F: Field> Params<F> {
    pub fn q(&self) -> F {
        self.s.times(&self.s)
    }

    /// `q^e`.
    pub fn q_pow(&self, e: i64) -> Result<F, ArithmeticError> {
        self.q().pow_i(e)
    }

    pub fn get(&self, p: Param) -> &F {
        match p {
            Param::S => &self.s,
            Param::A => &self.a,
            Param::B => &self.b,
            Param::C => &self.c,
        }
    }

    /// Value of a polynomial in the parameters at these values.
    pub fn eval_poly(&self, poly: &ParamPoly) -> F {
        let mut powers: [Vec<F>; 4] = Default::default();
        let mut acc = F::zero();
        for (m, c) in poly.terms() {
            let mut term = F::from_integer(c);
            for (i, p) in Param::ALL.into_iter().enumerate() {
                let e = m.exponent(p) as usize;
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(F::one());
                }
                while cache.len() <= e {
                    let next = cache[cache.len() - 1].times(self.get(p));
                    cache.push(next);
                }
                term = term.times(&cache[e]);
            }
            acc = acc.plus(&term);
        }
        acc
    }

    /// Value of a rational function in the parameters; fails when the
    /// denominator vanishes.
    pub fn eval(&self, x: &ParamRat) -> Result<F, ArithmeticError> {
        let den = self.eval_poly(x.denom());
        if den.is_zero() {
            return Err(ArithmeticError::DenominatorVanishes);
        }
        self.eval_poly(x.numer()).try_div(&den)
    }

    pub fn with(&self, p: Param, value: F) -> Self {
        let mut out = self.clone();
        match p {
            Param::S => out.s = value,
            Param::A => out.a = value,
            Param::B => out.b = value,
            Param::C => out.c = value,
        }
        out
    }
}

impl Params<ParamRat> {
    /// The generic symbols.
    pub fn symbolic() -> Self {
        Params {
            s: ParamRat::var(Param::S),
            a: ParamRat::var(Param::A),
            b: ParamRat::var(Param::B),
            c: ParamRat::var(Param::C),
        }
    }
}

impl Params<Rat> {
    pub fn at(point: &Point) -> Self {
        Params {
            s: point.s.clone(),
            a: point.a.clone(),
            b: point.b.clone(),
            c: point.c.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers() {
        let x = Rat::new(2, 3).unwrap();
        assert_eq!(Field::pow_i(&x, 3).unwrap(), Rat::new(8, 27).unwrap());
        let p = Params::symbolic();
        assert_eq!(p.q_pow(-1).unwrap().to_string(), "1/q");
        assert_eq!(p.q_pow(3).unwrap(), ParamRat::s_pow(6));
        let generic: ParamRat = {
            let base = ParamRat::var(Param::A).add(&ParamRat::one());
            <ParamRat as Field>::pow_i(&base, 2).unwrap()
        };
        assert_eq!(generic.to_string(), "a^2 + 2*a + 1");
    }

    #[test]
    fn evaluation_in_any_field() {
        let x: ParamRat = "(q*a + b)/(a*b*c)".parse().unwrap();
        let sym = Params::symbolic();
        assert_eq!(sym.eval(&x).unwrap(), x);
        let d8 = sym.with(Param::A, ParamRat::zero());
        assert!(d8.eval(&x).is_err());
        assert_eq!(d8.eval(&"q*a + b".parse().unwrap()).unwrap(), ParamRat::var(Param::B));
        let point = Point {
            s: Rat::from_int(2),
            a: Rat::from_int(1),
            b: Rat::from_int(3),
            c: Rat::new(1, 2).unwrap(),
        };
        assert_eq!(Params::at(&point).eval(&x).unwrap(), Rat::new(14, 3).unwrap());
        assert_eq!(x.evaluate(&point).unwrap(), Rat::new(14, 3).unwrap());
    }
}
