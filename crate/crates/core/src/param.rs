//! Polynomials and rational functions in the parameters `s, a, b, c`, where
//! `q = s^2`.
//!
//! [`ParamPoly`] keeps integer coefficients; any rational constant of a
//! [`ParamRat`] lives in its denominator. Fractions are reduced by the common
//! monomial factor and the integer content, and by exact division whenever the
//! denominator divides the numerator. Equality is decided by
//! cross-multiplication, so it does not depend on how far a fraction was
//! reduced.

use std::cmp::Ordering;
use std::fmt;

use malachite::num::arithmetic::traits::{DivExact, DivisibleBy, Gcd, Lcm, Sign, UnsignedAbs};
use malachite::num::basic::traits::{One, Zero};
use malachite::{Integer, Natural};

use crate::error::ArithmeticError;
use crate::laurent::Summands;
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    S,
    A,
    B,
    C,
}

impl Param {
    pub const ALL: [Param; 4] = [Param::S, Param::A, Param::B, Param::C];

    fn index(self) -> usize {
        self as usize
    }

    fn shift(self) -> u32 {
        48 - 16 * self as u32
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::S => "s",
            Param::A => "a",
            Param::B => "b",
            Param::C => "c",
        }
    }
}

/// A power product `s^i a^j b^k c^l`, packed 16 bits per exponent with `s`
/// in the most significant field.
///
/// The order is graded lexicographic on `(e_s, e_a, e_b, e_c)`; it is a
/// monomial order, so multiplying a sorted polynomial by a monomial keeps it
/// sorted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

const FIELD_MASK: u64 = 0xFFFF;

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_exponents(e: [u16; 4]) -> Self {
        Monomial(
            (e[0] as u64) << 48 | (e[1] as u64) << 32 | (e[2] as u64) << 16 | e[3] as u64,
        )
    }

    pub fn var(p: Param, e: u16) -> Self {
        Monomial((e as u64) << p.shift())
    }

    pub fn exponent(self, p: Param) -> u16 {
        ((self.0 >> p.shift()) & FIELD_MASK) as u16
    }

    pub fn exponents(self) -> [u16; 4] {
        Param::ALL.map(|p| self.exponent(p))
    }

    pub fn degree(self) -> u32 {
        self.exponents().iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Panics if an exponent leaves the 16-bit range.
    pub fn product(self, other: Monomial) -> Monomial {
        let mut out = [0u16; 4];
        for (i, p) in Param::ALL.iter().enumerate() {
            out[i] = self
                .exponent(*p)
                .checked_add(other.exponent(*p))
                .expect("parameter exponent overflow");
        }
        Monomial::from_exponents(out)
    }

    pub fn divides(self, other: Monomial) -> bool {
        Param::ALL
            .iter()
            .all(|&p| self.exponent(p) <= other.exponent(p))
    }

    /// `self / other`; requires `other.divides(self)`.
    pub fn quotient(self, other: Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0 - other.0)
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        let e = Param::ALL.map(|p| self.exponent(p).min(other.exponent(p)));
        Monomial::from_exponents(e)
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        let e = Param::ALL.map(|p| self.exponent(p).max(other.exponent(p)));
        Monomial::from_exponents(e)
    }

    fn fmt_factors(self, out: &mut String) {
        let mut first = true;
        let mut push = |out: &mut String, name: &str, e: u16| {
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(name);
            if e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        };
        let es = self.exponent(Param::S);
        if es > 0 {
            if es.is_multiple_of(2) {
                push(out, "q", es / 2);
            } else {
                push(out, "s", es);
            }
        }
        for p in [Param::A, Param::B, Param::C] {
            let e = self.exponent(p);
            if e > 0 {
                push(out, p.name(), e);
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.fmt_factors(&mut s);
        if s.is_empty() {
            s.push('1');
        }
        f.write_str(&s)
    }
}

/// Polynomial in `s, a, b, c` with integer coefficients, terms sorted in
/// decreasing monomial order, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: Vec<(Monomial, Integer)>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::ONE)
    }

    pub fn constant(c: Integer) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: Integer) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            ParamPoly { terms: vec![(m, c)] }
        }
    }

    pub fn var(p: Param) -> Self {
        Self::term(Monomial::var(p, 1), Integer::ONE)
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Integer)>>(terms: I) -> Self {
        let mut v: Vec<(Monomial, Integer)> = terms.into_iter().collect();
        v.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        ParamPoly {
            terms: combine_sorted(v),
        }
    }

    pub fn terms(&self) -> &[(Monomial, Integer)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn leading(&self) -> Option<&(Monomial, Integer)> {
        self.terms.first()
    }

    pub fn neg(&self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, other: &ParamPoly) -> ParamPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &ParamPoly) -> ParamPoly {
        self.merge(other, true)
    }

    fn merge(&self, other: &ParamPoly, negate: bool) -> ParamPoly {
        let (x, y) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                Ordering::Greater => {
                    out.push(x[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&y[j].1 } else { y[j].1.clone() };
                    out.push((y[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &x[i].1 - &y[j].1
                    } else {
                        &x[i].1 + &y[j].1
                    };
                    if c != 0 {
                        out.push((x[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&x[i..]);
        if negate {
            out.extend(y[j..].iter().map(|(m, c)| (*m, -c)));
        } else {
            out.extend_from_slice(&y[j..]);
        }
        ParamPoly { terms: out }
    }

    pub fn mul_term(&self, m: Monomial, c: &Integer) -> ParamPoly {
        if *c == 0 {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(mm, cc)| (mm.product(m), cc * c)).collect(),
        }
    }

    pub fn mul(&self, other: &ParamPoly) -> ParamPoly {
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        match small.len() {
            0 => ParamPoly::zero(),
            1 => big.mul_term(small.terms[0].0, &small.terms[0].1),
            n if n <= 8 => small
                .terms
                .iter()
                .fold(ParamPoly::zero(), |acc, (m, c)| acc.add(&big.mul_term(*m, c))),
            _ => {
                let mut prods = Vec::with_capacity(small.len() * big.len());
                for (m1, c1) in &small.terms {
                    for (m2, c2) in &big.terms {
                        prods.push((m1.product(*m2), c1 * c2));
                    }
                }
                prods.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
                ParamPoly {
                    terms: combine_sorted(prods),
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> ParamPoly {
        let mut acc = ParamPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Greatest common divisor of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> Natural {
        let mut g = Natural::ZERO;
        for (_, c) in &self.terms {
            g = g.gcd(c.unsigned_abs());
            if g == 1 {
                break;
            }
        }
        g
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.0;
        Some(it.fold(first, |g, (m, _)| g.gcd(*m)))
    }

    /// Divides every term by `m` and every coefficient by `c`; both must divide exactly.
    fn div_term_exact(&self, m: Monomial, c: &Integer) -> ParamPoly {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.quotient(m), cc.div_exact(c)))
                .collect(),
        }
    }

    fn max_exponents(&self) -> [u16; 4] {
        let mut e = [0u16; 4];
        for (m, _) in &self.terms {
            for p in Param::ALL {
                e[p.index()] = e[p.index()].max(m.exponent(p));
            }
        }
        e
    }

    /// Exact division in `Z[s, a, b, c]`, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &ParamPoly) -> Option<ParamPoly> {
        let (ld_m, ld_c) = divisor.leading()?.clone();
        if self.is_zero() {
            return Some(ParamPoly::zero());
        }
        if divisor.len() == 1 {
            let ok = self
                .terms
                .iter()
                .all(|(m, c)| ld_m.divides(*m) && c.divisible_by(&ld_c));
            return ok.then(|| self.div_term_exact(ld_m, &ld_c));
        }
        let (ea, eb) = (self.max_exponents(), divisor.max_exponents());
        if ea.iter().zip(eb.iter()).any(|(x, y)| x < y) {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading() {
            if !ld_m.divides(*m) || !c.divisible_by(&ld_c) {
                return None;
            }
            let t = (m.quotient(ld_m), c.div_exact(&ld_c));
            rem = rem.sub(&divisor.mul_term(t.0, &t.1));
            quot.push(t);
        }
        Some(ParamPoly { terms: quot })
    }

    pub fn evaluate(&self, point: &Point) -> Rat {
        let max = self.max_exponents();
        let powers: Vec<Vec<Rat>> = Param::ALL
            .iter()
            .map(|&p| {
                let base = point.get(p);
                let mut v = Vec::with_capacity(max[p.index()] as usize + 1);
                v.push(Rat::one());
                for i in 0..max[p.index()] as usize {
                    let next = &v[i] * base;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = Rat::from_integer(c.clone());
            for p in Param::ALL {
                let e = m.exponent(p) as usize;
                if e > 0 {
                    t = &t * &powers[p.index()][e];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Sets the parameter `p` to zero.
    pub fn substitute_zero(&self, p: Param) -> ParamPoly {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(p) == 0)
                .cloned()
                .collect(),
        }
    }

    pub fn is_even_in_s(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.exponent(Param::S) % 2 == 0)
    }
}

fn combine_sorted(v: Vec<(Monomial, Integer)>) -> Vec<(Monomial, Integer)> {
    let mut out: Vec<(Monomial, Integer)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 += c,
            _ => {
                if let Some(last) = out.last() {
                    if last.1 == 0 {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if out.last().is_some_and(|t| t.1 == 0) {
        out.pop();
    }
    out
}

fn fmt_term(out: &mut String, m: Monomial, abs: &Natural) {
    if m.is_one() {
        out.push_str(&abs.to_string());
    } else {
        if *abs != 1 {
            out.push_str(&abs.to_string());
            out.push('*');
        }
        m.fmt_factors(out);
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.sign() == Ordering::Less;
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            fmt_term(&mut out, *m, &c.unsigned_abs());
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An assignment of rational values to `s, a, b, c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub s: Rat,
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl Point {
    pub fn get(&self, p: Param) -> &Rat {
        match p {
            Param::S => &self.s,
            Param::A => &self.a,
            Param::B => &self.b,
            Param::C => &self.c,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={}, a={}, b={}, c={}", self.s, self.a, self.b, self.c)
    }
}

/// Rational function in the parameters: `num / den` with `den != 0`.
#[derive(Clone)]
pub struct ParamRat {
    num: ParamPoly,
    den: ParamPoly,
}

impl ParamRat {
    pub fn zero() -> Self {
        ParamRat {
            num: ParamPoly::zero(),
            den: ParamPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(ParamPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(ParamPoly::constant(Integer::from(n)))
    }

    pub fn from_rat(r: &Rat) -> Self {
        ParamRat::normalized(
            ParamPoly::constant(r.numerator()),
            ParamPoly::constant(r.denominator()),
        )
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        ParamRat {
            num: p,
            den: ParamPoly::one(),
        }
    }

    pub fn var(p: Param) -> Self {
        Self::from_poly(ParamPoly::var(p))
    }

    /// `s^e` for any integer `e`.
    pub fn s_pow(e: i64) -> Self {
        let m = Monomial::var(Param::S, e.unsigned_abs() as u16);
        let p = ParamPoly::term(m, Integer::ONE);
        if e >= 0 {
            Self::from_poly(p)
        } else {
            ParamRat {
                num: ParamPoly::one(),
                den: p,
            }
        }
    }

    /// `q^e = s^(2e)`.
    pub fn q_pow(e: i64) -> Self {
        Self::s_pow(2 * e)
    }

    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<Self, ArithmeticError> {
        if den.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(mut num: ParamPoly, mut den: ParamPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return ParamRat { num, den };
        }
        let mono = num
            .monomial_content()
            .unwrap()
            .gcd(den.monomial_content().unwrap());
        let content = Integer::from(num.content().gcd(den.content()));
        if !mono.is_one() || content != 1 {
            num = num.div_term_exact(mono, &content);
            den = den.div_term_exact(mono, &content);
        }
        if den.leading().unwrap().1.sign() == Ordering::Less {
            num = num.neg();
            den = den.neg();
        }
        if den.len() > 1 {
            if let Some(quot) = num.div_exact(&den) {
                return Self::from_poly(quot);
            }
        }
        ParamRat { num, den }
    }

    pub fn numer(&self) -> &ParamPoly {
        &self.num
    }

    pub fn denom(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn neg(&self) -> Self {
        ParamRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        if self.den.len() == 1 && other.den.len() == 1 {
            let (m1, c1) = &self.den.terms[0];
            let (m2, c2) = &other.den.terms[0];
            let m = m1.lcm(*m2);
            let c = Integer::from(c1.unsigned_abs().lcm(c2.unsigned_abs()));
            let num = self
                .num
                .mul_term(m.quotient(*m1), &(&c).div_exact(c1))
                .add(&other.num.mul_term(m.quotient(*m2), &(&c).div_exact(c2)));
            return Self::normalized(num, ParamPoly::term(m, c));
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn unit_sign(&self) -> Option<bool> {
        if !self.den.is_one() || self.num.len() != 1 || !self.num.terms[0].0.is_one() {
            return None;
        }
        let c = &self.num.terms[0].1;
        if *c == 1 {
            Some(false)
        } else if *c == -1 {
            Some(true)
        } else {
            None
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(neg) = other.unit_sign() {
            return if neg { self.neg() } else { self.clone() };
        }
        if let Some(neg) = self.unit_sign() {
            return if neg { other.neg() } else { other.clone() };
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self, ArithmeticError> {
        if self.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ArithmeticError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ArithmeticError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(ParamRat {
            num: base.num.pow(e.unsigned_abs() as u32),
            den: base.den.pow(e.unsigned_abs() as u32),
        })
    }

    pub fn evaluate(&self, point: &Point) -> Result<Rat, ArithmeticError> {
        let d = self.den.evaluate(point);
        if d.is_zero() {
            return Err(ArithmeticError::DenominatorVanishes);
        }
        self.num.evaluate(point).checked_div(&d)
    }

    pub fn substitute_zero(&self, p: Param) -> Result<Self, ArithmeticError> {
        let den = self.den.substitute_zero(p);
        if den.is_zero() {
            return Err(ArithmeticError::DenominatorVanishes);
        }
        Ok(Self::normalized(self.num.substitute_zero(p), den))
    }

    /// True when only integer powers of `q` occur. The common monomial factor
    /// is stripped on construction, so a pure-`s` factor shared by numerator and
    /// denominator cannot hide an odd power.
    pub fn is_even_in_s(&self) -> bool {
        self.num.is_even_in_s() && self.den.is_even_in_s()
    }

    /// Sign and magnitude text, used when the value is printed as a summand.
    pub(crate) fn signed_parts(&self) -> (bool, String) {
        if self.num.len() == 1 {
            let (m, c) = &self.num.terms[0];
            if c.sign() == Ordering::Less {
                let abs = ParamRat {
                    num: ParamPoly::term(*m, Integer::from(c.unsigned_abs())),
                    den: self.den.clone(),
                };
                return (true, abs.to_string());
            }
        }
        (false, self.to_string())
    }
}

impl Summands for ParamRat {
    fn summands(&self) -> Vec<(bool, String)> {
        if !self.den.is_one() {
            return vec![self.signed_parts()];
        }
        self.num
            .terms
            .iter()
            .map(|(m, c)| {
                let mut body = String::new();
                fmt_term(&mut body, *m, &c.unsigned_abs());
                (c.sign() == Ordering::Less, body)
            })
            .collect()
    }
}

fn is_atom(p: &ParamPoly) -> bool {
    if p.len() != 1 {
        return false;
    }
    let (m, c) = &p.terms[0];
    if m.is_one() {
        return true;
    }
    *c == 1 && m.exponents().iter().filter(|&&e| e > 0).count() == 1
}

impl fmt::Display for ParamRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return fmt::Display::fmt(&self.num, f);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if is_atom(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for ParamRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialEq for ParamRat {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for ParamRat {}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(p: Param) -> ParamRat {
        ParamRat::var(p)
    }

    fn int(n: i64) -> ParamRat {
        ParamRat::from_int(n)
    }

    fn q() -> ParamRat {
        ParamRat::q_pow(1)
    }

    #[test]
    fn rational_constants() {
        let x = int(1).div(&int(2)).unwrap().add(&int(1).div(&int(3)).unwrap());
        assert_eq!(x.to_string(), "5/6");
        assert_eq!(x, ParamRat::from_rat(&Rat::new(5, 6).unwrap()));
    }

    #[test]
    fn exact_cancellation() {
        let s = v(Param::S);
        let a = v(Param::A);
        let x = s.mul(&s).mul(&a).div(&s.mul(&a)).unwrap();
        assert_eq!(x, s);
        assert!(x.is_polynomial());
        assert_eq!(x.to_string(), "s");
    }

    #[test]
    fn expansion_in_q() {
        let x = q().sub(&int(1)).mul(&q().add(&int(1)));
        assert_eq!(x.to_string(), "q^2 - 1");
        assert_eq!(x, ParamRat::q_pow(2).sub(&int(1)));
    }

    #[test]
    fn zero_tests() {
        let (a, b) = (v(Param::A), v(Param::B));
        assert!(a.mul(&b).sub(&b.mul(&a)).is_zero());
        assert!(!q().sub(&int(1)).is_zero());
        let sq = a.add(&b).mul(&a.add(&b));
        let expanded = a.mul(&a).add(&int(2).mul(&a).mul(&b)).add(&b.mul(&b));
        assert!(sq.sub(&expanded).is_zero());
    }

    #[test]
    fn evaluation() {
        let pt = |s: i64, a: Rat, b: Rat| Point {
            s: Rat::from_int(s),
            a,
            b,
            c: Rat::one(),
        };
        assert_eq!(
            q().evaluate(&pt(2, Rat::one(), Rat::one())).unwrap(),
            Rat::from_int(4)
        );
        let inv_ab = int(1).div(&v(Param::A).mul(&v(Param::B))).unwrap();
        let p = pt(2, Rat::new(1, 2).unwrap(), Rat::from_int(3));
        assert_eq!(inv_ab.evaluate(&p).unwrap(), Rat::new(2, 3).unwrap());
        let bad = int(1).div(&q().sub(&int(1))).unwrap();
        assert_eq!(
            bad.evaluate(&pt(1, Rat::one(), Rat::one())),
            Err(ArithmeticError::DenominatorVanishes)
        );
    }

    #[test]
    fn parity_in_s() {
        let s = v(Param::S);
        let a = v(Param::A);
        assert!(s.mul(&s).mul(&a).is_even_in_s());
        assert!(!s.mul(&a).is_even_in_s());
        let s3 = s.pow(3).unwrap();
        let r = ParamRat::new(s3.numer().clone(), s.numer().clone()).unwrap();
        assert!(r.is_even_in_s());
    }

    #[test]
    fn canonical_order_and_text() {
        let (a, b) = (v(Param::A), v(Param::B));
        let x = ParamRat::q_pow(2).mul(&a).mul(&b).sub(&a).sub(&b);
        assert_eq!(x.to_string(), "q^2*a*b - a - b");
        let y = a.add(&b).div(&a.mul(&b)).unwrap();
        assert_eq!(y.to_string(), "(a + b)/(a*b)");
        assert_eq!(int(-1).div(&q()).unwrap().to_string(), "-1/q");
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(int(1).div(&ParamRat::zero()), Err(ArithmeticError::DivisionByZero));
    }

    #[test]
    fn non_monomial_denominators_cancel_when_exact() {
        let (a, b) = (v(Param::A), v(Param::B));
        let d = a.add(&b);
        let x = d.mul(&d).mul(&q()).div(&d).unwrap();
        assert!(x.is_polynomial());
        assert_eq!(x, d.mul(&q()));
        let y = int(1).div(&d).unwrap().add(&int(1).div(&a.sub(&b)).unwrap());
        let expect = int(2).mul(&a).div(&a.mul(&a).sub(&b.mul(&b))).unwrap();
        assert_eq!(y, expect);
    }

    #[test]
    fn substitution_of_zero() {
        let (a, c) = (v(Param::A), v(Param::C));
        let x = a.mul(&c).add(&a).add(&int(2));
        assert_eq!(x.substitute_zero(Param::C).unwrap().to_string(), "a + 2");
        let y = int(1).div(&c).unwrap();
        assert!(y.substitute_zero(Param::C).is_err());
    }
}
