//! Laurent polynomials in `z` over a coefficient field.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ArithmeticError, LaurentError};
use crate::field::Field;

/// A finite sum `sum_k c_k z^k`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly<F> {
    coeffs: BTreeMap<i64, F>,
}

/// Whether a substitution keeps `z` or inverts it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Keep,
    Invert,
}

/// The map `z -> unit * z^(+-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Substitution<F> {
    unit: F,
    direction: Direction,
}

impl<F: Field> Substitution<F> {
    pub fn new(unit: F, direction: Direction) -> Result<Self, ArithmeticError> {
        if unit.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Substitution { unit, direction })
    }

    pub fn identity() -> Self {
        Substitution {
            unit: F::one(),
            direction: Direction::Keep,
        }
    }

    /// `z -> z^-1`.
    pub fn inversion() -> Self {
        Substitution {
            unit: F::one(),
            direction: Direction::Invert,
        }
    }

    pub fn unit(&self) -> &F {
        &self.unit
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn is_identity(&self) -> bool {
        self.direction == Direction::Keep && self.unit.is_one()
    }
}

impl<F: Field> Default for LaurentPoly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * z^k`.
    pub fn monomial(c: F, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPoly { coeffs }
    }

    /// `z^k`.
    pub fn z_pow(k: i64) -> Self {
        Self::monomial(F::one(), k)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, F)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    fn add_term(&mut self, k: i64, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&k) {
            Some(existing) => {
                let sum = existing.plus(c);
                if sum.is_zero() {
                    self.coeffs.remove(&k);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.coeffs.insert(k, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &F)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// Coefficient of `z^k` (zero when absent).
    pub fn coeff(&self, k: i64) -> F {
        self.coeffs.get(&k).cloned().unwrap_or_else(F::zero)
    }

    pub fn min_deg(&self) -> Result<i64, LaurentError> {
        self.coeffs
            .keys()
            .next()
            .copied()
            .ok_or(LaurentError::EmptySupport)
    }

    pub fn max_deg(&self) -> Result<i64, LaurentError> {
        self.coeffs
            .keys()
            .next_back()
            .copied()
            .ok_or(LaurentError::EmptySupport)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, &c.negate());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.negate())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &other.coeffs {
                out.add_term(k1 + k2, &c1.times(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, x)| (*k, x.times(c)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `f[unit * z^(+-1)]`: each `c z^k` becomes `c unit^k z^(+-k)`.
    pub fn substitute(&self, sub: &Substitution<F>) -> Result<Self, ArithmeticError> {
        if sub.is_identity() {
            return Ok(self.clone());
        }
        let unit_is_one = sub.unit.is_one();
        let mut coeffs = BTreeMap::new();
        for (k, c) in &self.coeffs {
            let c = if unit_is_one || *k == 0 {
                c.clone()
            } else {
                c.times(&sub.unit.pow_i(*k)?)
            };
            let e = match sub.direction {
                Direction::Keep => *k,
                Direction::Invert => -k,
            };
            coeffs.insert(e, c);
        }
        Ok(LaurentPoly { coeffs })
    }

    /// The `h` with `self = divisor * h`, by long division from the lowest exponent.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, LaurentError> {
        let (gmin, gmax) = match (divisor.min_deg(), divisor.max_deg()) {
            (Ok(lo), Ok(hi)) => (lo, hi),
            _ => return Err(ArithmeticError::DivisionByZero.into()),
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let qmax = self.max_deg()? - gmax;
        let glow = &divisor.coeffs[&gmin];
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((&e, c)) = rem.coeffs.iter().next() {
            let k = e - gmin;
            if k > qmax {
                return Err(LaurentError::NonExactDivision);
            }
            let t = c.try_div(glow)?;
            for (ge, gc) in &divisor.coeffs {
                rem.add_term(ge + k, &t.times(gc).negate());
            }
            debug_assert!(!rem.coeffs.contains_key(&e));
            quot.insert(k, t);
        }
        Ok(LaurentPoly { coeffs: quot })
    }

    /// True when `f[z] = f[z^-1]`.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(k, c)| self.coeffs.get(&-k).is_some_and(|d| d == c))
    }

    pub fn try_map<G: Field, E>(
        &self,
        mut f: impl FnMut(&F) -> Result<G, E>,
    ) -> Result<LaurentPoly<G>, E> {
        let mut coeffs = BTreeMap::new();
        for (k, c) in &self.coeffs {
            let v = f(c)?;
            if !v.is_zero() {
                coeffs.insert(*k, v);
            }
        }
        Ok(LaurentPoly { coeffs })
    }

    pub fn to_json(&self) -> LaurentJson {
        LaurentJson {
            terms: self
                .coeffs
                .iter()
                .map(|(k, c)| TermJson {
                    z: *k,
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

/// Serialized form: terms by ascending `z` exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub z: i64,
    pub coeff: String,
}

/// Splits a coefficient into signed summands for flat text output.
pub trait Summands {
    /// `(negative, magnitude text)` pairs whose signed sum is the value.
    fn summands(&self) -> Vec<(bool, String)>;
}

fn z_text(k: i64) -> String {
    match k {
        1 => "z".to_string(),
        k => format!("z^{k}"),
    }
}

impl<F: Field> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in &self.coeffs {
            for (neg, body) in c.summands() {
                match (out.is_empty(), neg) {
                    (true, true) => out.push('-'),
                    (true, false) => {}
                    (false, true) => out.push_str(" - "),
                    (false, false) => out.push_str(" + "),
                }
                if *k == 0 {
                    out.push_str(&body);
                } else if body == "1" {
                    out.push_str(&z_text(*k));
                } else {
                    out.push_str(&body);
                    out.push('*');
                    out.push_str(&z_text(*k));
                }
            }
        }
        f.write_str(&out)
    }
}

impl<F: Field> fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{Param, ParamRat};

    type LP = LaurentPoly<ParamRat>;

    fn z(k: i64) -> LP {
        LP::z_pow(k)
    }

    fn c(p: Param) -> ParamRat {
        ParamRat::var(p)
    }

    fn q() -> ParamRat {
        ParamRat::q_pow(1)
    }

    #[test]
    fn ring_ops() {
        let f = z(1).add(&z(-1));
        let g = z(1).sub(&z(-1));
        assert_eq!(f.mul(&g), z(2).sub(&z(-2)));
        assert_eq!(z(-1).scale(&q()).to_string(), "q*z^-1");
        assert!(f.add(&f.scale(&ParamRat::from_int(-1))).is_zero());
    }

    #[test]
    fn substitutions() {
        let inv_q = Substitution::new(q(), Direction::Invert).unwrap();
        assert_eq!(z(-1).substitute(&inv_q).unwrap(), z(1).scale(&q().inv().unwrap()));
        assert_eq!(z(2).substitute(&Substitution::inversion()).unwrap(), z(-2));
        let f = z(1).add(&LP::constant(c(Param::C)));
        let shift_q = Substitution::new(q(), Direction::Keep).unwrap();
        assert_eq!(
            f.substitute(&shift_q).unwrap(),
            z(1).scale(&q()).add(&LP::constant(c(Param::C)))
        );
        assert!(Substitution::new(ParamRat::zero(), Direction::Keep).is_err());
    }

    #[test]
    fn exact_division() {
        let ab = c(Param::A).mul(&c(Param::B));
        let one_minus_z2 = LP::one().sub(&z(2));
        let f = z(2).sub(&LP::one()).scale(&ab);
        assert_eq!(f.exact_div(&one_minus_z2).unwrap(), LP::constant(ab.neg()));
        let g = LP::constant(q()).sub(&z(2));
        assert_eq!(z(2).sub(&LP::constant(q())).exact_div(&g).unwrap(), LP::constant(ParamRat::from_int(-1)));
        assert_eq!(
            z(1).add(&LP::one()).exact_div(&one_minus_z2),
            Err(LaurentError::NonExactDivision)
        );
        assert!(z(1).exact_div(&LP::zero()).is_err());
    }

    #[test]
    fn coefficients_and_degrees() {
        let f = z(1).add(&z(-1).scale(&q()));
        assert_eq!(f.coeff(-1), q());
        assert_eq!(z(3).add(&z(-2)).min_deg(), Ok(-2));
        assert_eq!(LP::zero().coeff(5), ParamRat::zero());
        assert_eq!(LP::zero().max_deg(), Err(LaurentError::EmptySupport));
    }

    #[test]
    fn symmetry() {
        assert!(!z(1).sub(&LP::constant(c(Param::C))).is_symmetric());
        assert!(LP::one().is_symmetric());
        assert!(z(3).add(&z(-3)).is_symmetric());
    }

    #[test]
    fn text_and_json() {
        let f = z(-1).add(&LP::constant(c(Param::A).neg()));
        assert_eq!(f.to_string(), "z^-1 - a");
        let json = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(json, r#"{"terms":[{"z":-1,"coeff":"1"},{"z":0,"coeff":"-a"}]}"#);
    }
}
