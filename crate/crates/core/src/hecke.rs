//! Difference operators on Laurent polynomials, the basic representations of
//! the four algebras, and evaluation of noncommutative words in the
//! generators.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{HeckeError, LaurentError, ParseError};
use crate::expr::{self, Expr};
use crate::field::{Field, Params};
use crate::laurent::{Direction, LaurentPoly, Substitution};
use crate::param::{Param, ParamRat};
use crate::qpoly::FamilyKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraId {
    V,
    III,
    IIID7,
    IIID8,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 4] = [AlgebraId::V, AlgebraId::III, AlgebraId::IIID7, AlgebraId::IIID8];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::V => "v",
            AlgebraId::III => "iii",
            AlgebraId::IIID7 => "iii-d7",
            AlgebraId::IIID8 => "iii-d8",
        }
    }

    /// The polynomial family that diagonalizes the representation.
    pub fn family(self) -> FamilyKind {
        match self {
            AlgebraId::V => FamilyKind::DualQHahn,
            AlgebraId::III => FamilyKind::AlSalamChihara,
            AlgebraId::IIID7 => FamilyKind::BigQHermite,
            AlgebraId::IIID8 => FamilyKind::QHermite,
        }
    }

    /// True for the two algebras where `T1` is invertible and `Y`, `Z` exist.
    pub fn has_yz(self) -> bool {
        matches!(self, AlgebraId::V | AlgebraId::III)
    }

    /// Parameter values with the ones this algebra does not use set to zero.
    pub fn restrict<F: Field>(self, params: &Params<F>) -> Params<F> {
        let mut out = params.clone();
        let zeros: &[Param] = match self {
            AlgebraId::V => &[],
            AlgebraId::III => &[Param::C],
            AlgebraId::IIID7 => &[Param::B, Param::C],
            AlgebraId::IIID8 => &[Param::A, Param::B, Param::C],
        };
        for &p in zeros {
            out = out.with(p, F::zero());
        }
        out
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AlgebraId::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algebra {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    X,
    Xi,
    T0,
    T1,
    T1i,
    Y,
    Z,
}

impl Token {
    pub const ALL: [Token; 7] = [Token::X, Token::Xi, Token::T0, Token::T1, Token::T1i, Token::Y, Token::Z];

    pub fn name(self) -> &'static str {
        match self {
            Token::X => "X",
            Token::Xi => "Xi",
            Token::T0 => "T0",
            Token::T1 => "T1",
            Token::T1i => "T1i",
            Token::Y => "Y",
            Token::Z => "Z",
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A linear combination of words in the generators. The empty word is the
/// identity.
#[derive(Clone, Debug, PartialEq)]
pub struct NCExpression<F> {
    terms: Vec<(F, Vec<Token>)>,
}

impl<F: Field> NCExpression<F> {
    pub fn zero() -> Self {
        NCExpression { terms: Vec::new() }
    }

    pub fn scalar(c: F) -> Self {
        NCExpression::from_terms([(c, Vec::new())])
    }

    pub fn one() -> Self {
        NCExpression::scalar(F::one())
    }

    pub fn word(tokens: &[Token]) -> Self {
        NCExpression::from_terms([(F::one(), tokens.to_vec())])
    }

    pub fn token(t: Token) -> Self {
        NCExpression::word(&[t])
    }

    /// Collects equal words and drops zero coefficients, keeping first-seen order.
    pub fn from_terms<I: IntoIterator<Item = (F, Vec<Token>)>>(terms: I) -> Self {
        let mut out: Vec<(F, Vec<Token>)> = Vec::new();
        for (c, w) in terms {
            match out.iter_mut().find(|(_, v)| *v == w) {
                Some(slot) => slot.0 = slot.0.plus(&c),
                None => out.push((c, w)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        NCExpression { terms: out }
    }

    pub fn terms(&self) -> &[(F, Vec<Token>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        NCExpression::from_terms(self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().negate())
    }

    pub fn scale(&self, c: &F) -> Self {
        NCExpression::from_terms(self.terms.iter().map(|(k, w)| (k.times(c), w.clone())))
    }

    /// Noncommutative product: `self` applied after `other`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c1, w1) in &self.terms {
            for (c2, w2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.push((c1.times(c2), w));
            }
        }
        NCExpression::from_terms(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(NCExpression::one(), |acc, _| acc.mul(self))
    }

    /// Replaces every occurrence of each token by an expression.
    pub fn substitute(&self, rule: impl Fn(Token) -> Option<NCExpression<F>>) -> Self {
        let mut out = NCExpression::zero();
        for (c, w) in &self.terms {
            let mut acc = NCExpression::scalar(c.clone());
            for &t in w {
                let image = rule(t).unwrap_or_else(|| NCExpression::token(t));
                acc = acc.mul(&image);
            }
            out = out.add(&acc);
        }
        out
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<NCExpression<G>, E> {
        let terms = self
            .terms
            .iter()
            .map(|(c, w)| Ok((f(c)?, w.clone())))
            .collect::<Result<Vec<_>, E>>()?;
        Ok(NCExpression::from_terms(terms))
    }
}

impl NCExpression<ParamRat> {
    /// The same expression with coefficients evaluated at `params`.
    pub fn at<F: Field>(&self, params: &Params<F>) -> Result<NCExpression<F>, HeckeError> {
        Ok(self.try_map(|c| params.eval(c))?)
    }
}

impl<F: Field> fmt::Display for NCExpression<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (c, w)) in self.terms.iter().enumerate() {
            let word = w.iter().map(|t| t.name()).collect::<Vec<_>>().join("*");
            let parts = c.summands();
            let (neg, text) = if parts.len() == 1 {
                (parts[0].0, parts[0].1.clone())
            } else {
                (false, format!("({c})"))
            };
            let body = match (word.is_empty(), text.as_str()) {
                (true, _) => text.clone(),
                (false, "1") => word,
                (false, _) => format!("{text}*{word}"),
            };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        f.write_str(&out)
    }
}

fn eval_nc(e: &Expr) -> Result<NCExpression<ParamRat>, ParseError> {
    Ok(match e {
        Expr::Sym(s) => match Token::ALL.into_iter().find(|t| t.name() == s) {
            Some(t) => NCExpression::token(t),
            None => NCExpression::scalar(expr::eval_param(e)?),
        },
        Expr::Num(_) => NCExpression::scalar(expr::eval_param(e)?),
        Expr::Neg(x) => eval_nc(x)?.neg(),
        Expr::Add(x, y) => eval_nc(x)?.add(&eval_nc(y)?),
        Expr::Sub(x, y) => eval_nc(x)?.sub(&eval_nc(y)?),
        Expr::Mul(x, y) => eval_nc(x)?.mul(&eval_nc(y)?),
        Expr::Div(x, y) => {
            let d = eval_nc(y)?;
            match d.terms() {
                [(c, w)] if w.is_empty() => eval_nc(x)?.scale(&c.inv()?),
                _ => {
                    return Err(ParseError::Invalid(
                        "words can only be divided by scalars".to_string(),
                    ))
                }
            }
        }
        Expr::Pow(x, k) => {
            let base = eval_nc(x)?;
            if *k >= 0 {
                base.pow(*k as u32)
            } else {
                let inverse = match base.terms() {
                    [(c, w)] if c.is_one() && w.as_slice() == [Token::X] => Token::Xi,
                    [(c, w)] if c.is_one() && w.as_slice() == [Token::Xi] => Token::X,
                    [(c, w)] if c.is_one() && w.as_slice() == [Token::T1] => Token::T1i,
                    [(c, w)] if c.is_one() && w.as_slice() == [Token::T1i] => Token::T1,
                    [(_, w)] if w.is_empty() => {
                        return Ok(NCExpression::scalar(expr::eval_param(e)?));
                    }
                    _ => {
                        return Err(ParseError::Invalid(format!(
                            "negative powers are only supported for X and T1, got ({base})^{k}"
                        )))
                    }
                };
                NCExpression::token(inverse).pow(k.unsigned_abs() as u32)
            }
        }
    })
}

impl FromStr for NCExpression<ParamRat> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        eval_nc(&expr::parse(s)?)
    }
}

/// One summand `num / (den_1 * ... * den_r) * f[sub(z)]`.
#[derive(Clone, Debug, PartialEq)]
pub struct OpTerm<F: Field> {
    pub num: LaurentPoly<F>,
    pub den: Vec<LaurentPoly<F>>,
    pub sub: Substitution<F>,
}

/// A finite sum of rational prefactors times substitutions.
#[derive(Clone, Debug, PartialEq)]
pub struct DifferenceOperator<F: Field> {
    terms: Vec<OpTerm<F>>,
}

fn describe<F: Field>(f: &LaurentPoly<F>) -> String {
    if f.len() <= 8 {
        return f.to_string();
    }
    match (f.min_deg(), f.max_deg()) {
        (Ok(lo), Ok(hi)) => format!("a polynomial with {} terms in z^{lo}..z^{hi}", f.len()),
        _ => "0".to_string(),
    }
}

impl<F: Field> DifferenceOperator<F> {
    pub fn new(terms: Vec<OpTerm<F>>) -> Self {
        DifferenceOperator { terms }
    }

    /// Multiplication by `g`.
    pub fn multiplication(g: LaurentPoly<F>) -> Self {
        DifferenceOperator::new(vec![OpTerm {
            num: g,
            den: Vec::new(),
            sub: Substitution::identity(),
        }])
    }

    /// `prefactor * (f[z] - f[sub(z)])`.
    pub fn difference(
        num: LaurentPoly<F>,
        den: Vec<LaurentPoly<F>>,
        sub: Substitution<F>,
    ) -> Self {
        DifferenceOperator::new(vec![
            OpTerm {
                num: num.clone(),
                den: den.clone(),
                sub: Substitution::identity(),
            },
            OpTerm {
                num: num.neg(),
                den,
                sub,
            },
        ])
    }

    pub fn terms(&self) -> &[OpTerm<F>] {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        DifferenceOperator { terms }
    }

    pub fn scale(&self, c: &F) -> Self {
        DifferenceOperator {
            terms: self
                .terms
                .iter()
                .map(|t| OpTerm {
                    num: t.num.scale(c),
                    den: t.den.clone(),
                    sub: t.sub.clone(),
                })
                .collect(),
        }
    }

    /// The smallest multiset of denominator factors containing every term's.
    fn common_den(&self) -> Vec<LaurentPoly<F>> {
        let mut common: Vec<LaurentPoly<F>> = Vec::new();
        for t in &self.terms {
            let mut have = common.clone();
            for d in &t.den {
                match have.iter().position(|x| x == d) {
                    Some(i) => {
                        have.swap_remove(i);
                    }
                    None => common.push(d.clone()),
                }
            }
        }
        common
    }

    /// Applies the operator over the common denominator and divides exactly.
    pub fn apply(&self, f: &LaurentPoly<F>) -> Result<LaurentPoly<F>, HeckeError> {
        let common = self.common_den();
        let mut numer = LaurentPoly::zero();
        for t in &self.terms {
            let mut missing = common.clone();
            for d in &t.den {
                if let Some(i) = missing.iter().position(|x| x == d) {
                    missing.swap_remove(i);
                }
            }
            let mut piece = f.substitute(&t.sub)?.mul(&t.num);
            for m in &missing {
                piece = piece.mul(m);
            }
            numer = numer.add(&piece);
        }
        let den = common
            .iter()
            .fold(LaurentPoly::one(), |acc, d| acc.mul(d));
        numer.exact_div(&den).map_err(|e| match e {
            LaurentError::NonExactDivision => HeckeError::OperatorNotPolynomial { input: describe(f) },
            other => other.into(),
        })
    }
}

fn poly<F: Field>(terms: &[(i64, F)]) -> LaurentPoly<F> {
    LaurentPoly::from_terms(terms.iter().cloned())
}

fn one_minus_z2<F: Field>() -> LaurentPoly<F> {
    poly(&[(0, F::one()), (2, F::one().negate())])
}

fn q_minus_z2<F: Field>(q: &F) -> LaurentPoly<F> {
    poly(&[(0, q.clone()), (2, F::one().negate())])
}

fn q_over_z<F: Field>(q: &F) -> Substitution<F> {
    Substitution::new(q.clone(), Direction::Invert).expect("q is nonzero")
}

/// `1 - u z`.
fn one_minus<F: Field>(u: &F) -> LaurentPoly<F> {
    poly(&[(0, F::one()), (1, u.negate())])
}

/// The explicit two-difference form of `Y = T1 T0` in the representation of
/// `H_V`.
pub fn explicit_y_v<F: Field>(params: &Params<F>) -> DifferenceOperator<F> {
    let (a, b, c, q) = (&params.a, &params.b, &params.c, params.q());
    let ab = a.times(b);
    let z_minus_c = poly(&[(1, F::one()), (0, c.negate())]);
    let first = z_minus_c
        .mul(&LaurentPoly::z_pow(1))
        .mul(&poly(&[(0, F::one().plus(&ab)), (1, a.plus(b).negate())]));
    let second = one_minus(a).mul(&one_minus(b)).mul(&one_minus(c));
    let qz = Substitution::new(q.clone(), Direction::Keep).expect("q is nonzero");
    let up = vec![one_minus_z2(), q_minus_z2(&q)];
    let down = vec![one_minus_z2(), poly(&[(0, F::one()), (2, q.negate())])];
    DifferenceOperator::new(vec![
        OpTerm {
            num: first.clone(),
            den: up.clone(),
            sub: q_over_z(&q),
        },
        OpTerm {
            num: first.neg(),
            den: up,
            sub: Substitution::identity(),
        },
        OpTerm {
            num: second.clone(),
            den: down.clone(),
            sub: qz,
        },
        OpTerm {
            num: second.neg(),
            den: down,
            sub: Substitution::inversion(),
        },
    ])
}

/// The automorphism `T0 -> -X T0` fixing `T1` and `X`. `Y` and `Z` are first
/// expanded through their definitions in `H_III`.
pub fn eta_map<F: Field>(expr: &NCExpression<F>) -> NCExpression<F> {
    let expanded = expr.substitute(|t| match t {
        Token::Y | Token::Z => Some(yz_definition(AlgebraId::III, t)),
        _ => None,
    });
    expanded.substitute(|t| match t {
        Token::T0 => Some(NCExpression::word(&[Token::X, Token::T0]).neg()),
        _ => None,
    })
}

/// `Y` and `Z` as words in `T0`, `T1`, `T1i`, `X`.
fn yz_definition<F: Field>(algebra: AlgebraId, t: Token) -> NCExpression<F> {
    use Token::*;
    let w = NCExpression::<F>::word;
    match (algebra, t) {
        (AlgebraId::V, Y) => w(&[T1, T0]),
        (AlgebraId::V, Z) => w(&[T0, T1i]).add(&w(&[T1i])),
        (_, Y) => w(&[T1, X, T0]).neg(),
        (_, Z) => w(&[X, T0, T1i]).neg().add(&w(&[T1i])),
        _ => NCExpression::token(t),
    }
}

/// The basic representation of one algebra at given parameter values.
#[derive(Clone, Debug)]
pub struct Representation<F: Field> {
    algebra: AlgebraId,
    params: Params<F>,
    x: DifferenceOperator<F>,
    xi: DifferenceOperator<F>,
    t0: DifferenceOperator<F>,
    t1: DifferenceOperator<F>,
    t1i: Option<DifferenceOperator<F>>,
}

impl<F: Field> Representation<F> {
    /// Builds the generators. Parameters the algebra does not use are set to
    /// zero, so `iii-d8` is `iii-d7` at `a = 0`.
    pub fn new(algebra: AlgebraId, params: &Params<F>) -> Self {
        let params = algebra.restrict(params);
        let (a, b, c, q) = (&params.a, &params.b, &params.c, params.q());
        let ab = a.times(b);
        let one_plus_ab = F::one().plus(&ab);
        let t0 = match algebra {
            AlgebraId::V => DifferenceOperator::difference(
                poly(&[(2, F::one()), (1, c.negate())]),
                vec![q_minus_z2(&q)],
                q_over_z(&q),
            ),
            _ => DifferenceOperator::difference(
                poly(&[(1, F::one().negate())]),
                vec![q_minus_z2(&q)],
                q_over_z(&q),
            ),
        };
        let (t1, t1i) = match algebra {
            AlgebraId::V | AlgebraId::III => {
                let t1 = DifferenceOperator::new(vec![
                    OpTerm {
                        num: poly(&[(1, a.plus(b)), (0, one_plus_ab.negate())]),
                        den: vec![one_minus_z2()],
                        sub: Substitution::identity(),
                    },
                    OpTerm {
                        num: one_minus(a).mul(&one_minus(b)),
                        den: vec![one_minus_z2()],
                        sub: Substitution::inversion(),
                    },
                ]);
                // -(T1 + (1 + ab)) / (ab)
                let t1i = F::one().negate().try_div(&ab).ok().map(|minus_inv| {
                    t1.add(&DifferenceOperator::multiplication(LaurentPoly::constant(
                        one_plus_ab.clone(),
                    )))
                    .scale(&minus_inv)
                });
                (t1, t1i)
            }
            _ => (
                DifferenceOperator::difference(
                    poly(&[(1, a.clone()), (0, F::one().negate())]),
                    vec![one_minus_z2()],
                    Substitution::inversion(),
                ),
                None,
            ),
        };
        Representation {
            algebra,
            params,
            x: DifferenceOperator::multiplication(LaurentPoly::z_pow(1)),
            xi: DifferenceOperator::multiplication(LaurentPoly::z_pow(-1)),
            t0,
            t1,
            t1i,
        }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn params(&self) -> &Params<F> {
        &self.params
    }

    /// The operator of a generator token (`X`, `Xi`, `T0`, `T1`, `T1i`).
    pub fn operator(&self, t: Token) -> Result<&DifferenceOperator<F>, HeckeError> {
        match t {
            Token::X => Ok(&self.x),
            Token::Xi => Ok(&self.xi),
            Token::T0 => Ok(&self.t0),
            Token::T1 => Ok(&self.t1),
            Token::T1i => self.t1_inverse(),
            Token::Y | Token::Z => Err(HeckeError::UnknownToken {
                token: t.name().to_string(),
                algebra: self.algebra.name(),
            }),
        }
    }

    /// `-(T1 + 1 + ab) / (ab)`; only `H_V` and `H_III` have it.
    pub fn t1_inverse(&self) -> Result<&DifferenceOperator<F>, HeckeError> {
        self.t1i
            .as_ref()
            .ok_or(HeckeError::T1InvUnavailable(self.algebra.name()))
    }

    /// `Y` and `Z` as expressions in the generators.
    pub fn y_z(&self) -> Result<(NCExpression<F>, NCExpression<F>), HeckeError> {
        if !self.algebra.has_yz() {
            return Err(HeckeError::UnknownToken {
                token: "Y".to_string(),
                algebra: self.algebra.name(),
            });
        }
        Ok((
            yz_definition(self.algebra, Token::Y),
            yz_definition(self.algebra, Token::Z),
        ))
    }

    /// Rewrites `Y` and `Z` into generator words.
    pub fn expand(&self, expr: &NCExpression<F>) -> Result<NCExpression<F>, HeckeError> {
        let uses_yz = expr
            .terms()
            .iter()
            .any(|(_, w)| w.iter().any(|t| matches!(t, Token::Y | Token::Z)));
        if !uses_yz {
            return Ok(expr.clone());
        }
        let (y, z) = self.y_z()?;
        Ok(expr.substitute(|t| match t {
            Token::Y => Some(y.clone()),
            Token::Z => Some(z.clone()),
            _ => None,
        }))
    }

    /// Applies `expr` to `f`, each word right to left. Shared word suffixes are
    /// computed once.
    pub fn eval_word(&self, expr: &NCExpression<F>, f: &LaurentPoly<F>) -> Result<LaurentPoly<F>, HeckeError> {
        let expr = self.expand(expr)?;
        for (_, w) in expr.terms() {
            for &t in w {
                self.operator(t)?;
            }
        }
        let mut memo: HashMap<Vec<Token>, LaurentPoly<F>> = HashMap::new();
        let mut out = LaurentPoly::zero();
        for (c, w) in expr.terms() {
            let mut start = w.len();
            while start > 0 && memo.contains_key(&w[start - 1..]) {
                start -= 1;
            }
            let mut g = if start == w.len() {
                f.clone()
            } else {
                memo[&w[start..]].clone()
            };
            for i in (0..start).rev() {
                g = self.operator(w[i])?.apply(&g)?;
                memo.insert(w[i..].to_vec(), g.clone());
            }
            out = out.add(&g.scale(c));
        }
        Ok(out)
    }

    /// Applies a single token, expanding `Y` and `Z`.
    pub fn apply_token(&self, t: Token, f: &LaurentPoly<F>) -> Result<LaurentPoly<F>, HeckeError> {
        self.eval_word(&NCExpression::token(t), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_laurent;

    fn lp(text: &str) -> LaurentPoly<ParamRat> {
        parse_laurent(text).unwrap()
    }

    fn nc(text: &str) -> NCExpression<ParamRat> {
        text.parse().unwrap()
    }

    fn rep(alg: AlgebraId) -> Representation<ParamRat> {
        Representation::new(alg, &Params::symbolic())
    }

    #[test]
    fn generator_actions() {
        let v = rep(AlgebraId::V);
        assert_eq!(v.apply_token(Token::T0, &lp("1")).unwrap(), lp("0"));
        assert_eq!(v.apply_token(Token::T0, &lp("z^-1")).unwrap(), lp("(z - c)/q"));
        assert_eq!(v.apply_token(Token::T1, &lp("1")).unwrap(), lp("-a*b"));
        assert_eq!(v.apply_token(Token::T1i, &lp("1")).unwrap(), lp("-1/(a*b)"));
        let d7 = rep(AlgebraId::IIID7);
        assert_eq!(d7.apply_token(Token::T1, &lp("z")).unwrap(), lp("z^-1 - a"));
        assert!(matches!(d7.t1_inverse(), Err(HeckeError::T1InvUnavailable(_))));
        assert!(matches!(
            d7.apply_token(Token::Y, &lp("1")),
            Err(HeckeError::UnknownToken { .. })
        ));
    }

    #[test]
    fn inverse_of_t1() {
        let v = rep(AlgebraId::V);
        for k in -3..=3 {
            let f = LaurentPoly::z_pow(k);
            assert_eq!(v.eval_word(&nc("T1*T1i"), &f).unwrap(), f);
            assert_eq!(v.eval_word(&nc("T1i*T1"), &f).unwrap(), f);
        }
    }

    #[test]
    fn defining_relations_on_monomials() {
        let v = rep(AlgebraId::V);
        let iii = rep(AlgebraId::III);
        for k in -5..=5 {
            let f = LaurentPoly::z_pow(k);
            assert!(v.eval_word(&nc("q*T0*Xi + c - X*T0 - X"), &f).unwrap().is_zero());
            assert!(iii.eval_word(&nc("q*T0*Xi + 1 - X*T0"), &f).unwrap().is_zero());
            assert!(v.eval_word(&nc("T0*T0 + T0"), &f).unwrap().is_zero());
        }
        assert!(v.eval_word(&NCExpression::one(), &lp("z + a")).unwrap() == lp("z + a"));
    }

    #[test]
    fn explicit_form_of_y() {
        let p = Params::symbolic();
        let v = Representation::new(AlgebraId::V, &p);
        let y = explicit_y_v(&p);
        assert!(y.apply(&lp("1")).unwrap().is_zero());
        for k in -3..=3 {
            let f = LaurentPoly::z_pow(k);
            assert_eq!(y.apply(&f).unwrap(), v.eval_word(&nc("T1*T0"), &f).unwrap());
        }
    }

    #[test]
    fn non_polynomial_results_are_reported() {
        let broken = DifferenceOperator::multiplication(lp("z"))
            .add(&DifferenceOperator::new(vec![OpTerm {
                num: lp("1"),
                den: vec![lp("1 - z^2")],
                sub: Substitution::identity(),
            }]));
        assert!(matches!(
            broken.apply(&lp("z")),
            Err(HeckeError::OperatorNotPolynomial { .. })
        ));
    }

    #[test]
    fn word_syntax() {
        let e = nc("q*T0*X^-1 + c - X*(T0 + 1)");
        assert_eq!(e.to_string(), "q*T0*Xi + c - X*T0 - X");
        assert_eq!(nc("T1^-2").to_string(), "T1i*T1i");
        let mixed = nc("(a + b)/(a*b)*Z*T1 - c/q*X");
        assert_eq!(mixed.to_string(), "(a + b)/(a*b)*Z*T1 - c/q*X");
        assert_eq!(nc(&mixed.to_string()), mixed);
        assert_eq!(nc("(1 + a)*T1").to_string(), "(a + 1)*T1");
        assert_eq!(nc("T0 - T0").to_string(), "0");
        assert!("Y^-1".parse::<NCExpression<ParamRat>>().is_err());
        assert!("T0/T1".parse::<NCExpression<ParamRat>>().is_err());
        assert!("W*T0".parse::<NCExpression<ParamRat>>().is_err());
    }

    #[test]
    fn eta_rewrites_t0() {
        assert_eq!(eta_map(&nc("T0")), nc("-X*T0"));
        assert_eq!(eta_map(&nc("T1*X")), nc("T1*X"));
        let iii = rep(AlgebraId::III);
        for k in -5..=5 {
            let f = LaurentPoly::z_pow(k);
            let rel = eta_map(&nc("q*T0*Xi - X*T0 - X"));
            assert!(iii.eval_word(&rel, &f).unwrap().is_zero());
        }
    }

    #[test]
    fn d8_is_d7_at_zero() {
        let p = Params::symbolic();
        let d7 = Representation::new(AlgebraId::IIID7, &p.with(Param::A, ParamRat::zero()));
        let d8 = Representation::new(AlgebraId::IIID8, &p);
        assert_eq!(d7.operator(Token::T1).unwrap(), d8.operator(Token::T1).unwrap());
    }
}
