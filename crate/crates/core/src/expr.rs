//! Text syntax shared by parameter expressions, inline Laurent polynomials and
//! operator words: integers, identifiers, `+ - * /`, `^` with a signed integer
//! exponent, and parentheses.

use std::str::FromStr;

use malachite::Integer;

use crate::error::ParseError;
use crate::field::Field;
use crate::laurent::{LaurentJson, LaurentPoly};
use crate::param::{Param, ParamRat};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Integer),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Integer),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (off, ch) = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|c| c.1).collect();
            out.push(Tok::Num(Integer::from_str(&text).expect("digits")));
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().map(|c| c.1).collect()));
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(ParseError::UnexpectedChar {
                found: ch,
                offset: off,
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        match self.next() {
            Some(Tok::Num(n)) => {
                let e = i64::try_from(&n)
                    .map_err(|_| ParseError::Invalid(format!("exponent {n} too large")))?;
                Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
            }
            Some(t) => Err(ParseError::UnexpectedToken(format!("{t:?}"))),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(Expr::Num(n)),
            Some(Tok::Ident(s)) => Ok(Expr::Sym(s)),
            Some(Tok::Op('(')) => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return match self.peek() {
                        Some(t) => Err(ParseError::UnexpectedToken(format!("{t:?}"))),
                        None => Err(ParseError::UnexpectedEnd),
                    };
                }
                Ok(e)
            }
            Some(t) => Err(ParseError::UnexpectedToken(format!("{t:?}"))),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

/// Parses a complete expression.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    if p.toks.is_empty() {
        return Err(ParseError::UnexpectedEnd);
    }
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(t) => Err(ParseError::UnexpectedToken(format!("{t:?}"))),
    }
}

fn param_symbol(name: &str) -> Option<ParamRat> {
    match name {
        "s" => Some(ParamRat::var(Param::S)),
        "q" => Some(ParamRat::q_pow(1)),
        "a" => Some(ParamRat::var(Param::A)),
        "b" => Some(ParamRat::var(Param::B)),
        "c" => Some(ParamRat::var(Param::C)),
        _ => None,
    }
}

/// Evaluates an expression in the parameters `s, q, a, b, c`.
pub fn eval_param(e: &Expr) -> Result<ParamRat, ParseError> {
    Ok(match e {
        Expr::Num(n) => ParamRat::from_poly(crate::param::ParamPoly::constant(n.clone())),
        Expr::Sym(s) => param_symbol(s).ok_or_else(|| ParseError::UnknownSymbol(s.clone()))?,
        Expr::Neg(x) => eval_param(x)?.neg(),
        Expr::Add(x, y) => eval_param(x)?.add(&eval_param(y)?),
        Expr::Sub(x, y) => eval_param(x)?.sub(&eval_param(y)?),
        Expr::Mul(x, y) => eval_param(x)?.mul(&eval_param(y)?),
        Expr::Div(x, y) => eval_param(x)?.div(&eval_param(y)?)?,
        Expr::Pow(x, k) => eval_param(x)?.pow(*k)?,
    })
}

impl FromStr for ParamRat {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        eval_param(&parse(s)?)
    }
}

type Lp = LaurentPoly<ParamRat>;

fn monomial_inverse(f: &Lp) -> Result<Lp, ParseError> {
    let mut terms = f.terms();
    match (terms.next(), terms.next()) {
        (Some((k, c)), None) => Ok(Lp::monomial(c.inv()?, -k)),
        _ => Err(ParseError::Invalid(
            "only monomials in z can be inverted".to_string(),
        )),
    }
}

/// Evaluates an expression in `z` and the parameters.
pub fn eval_laurent(e: &Expr) -> Result<Lp, ParseError> {
    Ok(match e {
        Expr::Sym(s) if s == "z" => Lp::z_pow(1),
        Expr::Num(_) | Expr::Sym(_) => Lp::constant(eval_param(e)?),
        Expr::Neg(x) => eval_laurent(x)?.neg(),
        Expr::Add(x, y) => eval_laurent(x)?.add(&eval_laurent(y)?),
        Expr::Sub(x, y) => eval_laurent(x)?.sub(&eval_laurent(y)?),
        Expr::Mul(x, y) => eval_laurent(x)?.mul(&eval_laurent(y)?),
        Expr::Div(x, y) => eval_laurent(x)?.mul(&monomial_inverse(&eval_laurent(y)?)?),
        Expr::Pow(x, k) => {
            let base = eval_laurent(x)?;
            let base = if *k < 0 { monomial_inverse(&base)? } else { base };
            (0..k.unsigned_abs()).fold(Lp::one(), |acc, _| acc.mul(&base))
        }
    })
}

/// Parses either the JSON form `{"terms":[...]}` or inline text such as
/// `z^-1 + a*b*c - a - b`.
pub fn parse_laurent(src: &str) -> Result<Lp, ParseError> {
    let trimmed = src.trim();
    if trimmed.starts_with('{') {
        let json: LaurentJson = serde_json::from_str(trimmed)
            .map_err(|e| ParseError::Invalid(format!("bad polynomial JSON: {e}")))?;
        let mut out = Lp::zero();
        for t in json.terms {
            out = out.add(&Lp::monomial(t.coeff.parse()?, t.z));
        }
        return Ok(out);
    }
    eval_laurent(&parse(trimmed)?)
}

/// LaTeX rendering of a Laurent polynomial with parameter coefficients.
pub fn to_latex(f: &Lp) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let zpart = |k: i64| match k {
        0 => String::new(),
        1 => "z".to_string(),
        k => format!("z^{{{k}}}"),
    };
    let mut out = String::new();
    for (k, c) in f.terms() {
        let pieces: Vec<(bool, String)> = if c.is_polynomial() {
            c.numer()
                .terms()
                .iter()
                .map(|(m, n)| {
                    let neg = *n < 0;
                    let abs = if neg { -n.clone() } else { n.clone() };
                    (neg, latex_monomial(*m, &abs))
                })
                .collect()
        } else {
            let (neg, _) = c.signed_parts();
            let abs = if neg { c.neg() } else { c.clone() };
            let body = format!(
                "\\frac{{{}}}{{{}}}",
                latex_poly(abs.numer()),
                latex_poly(abs.denom())
            );
            vec![(neg, body)]
        };
        for (neg, body) in pieces {
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            let z = zpart(k);
            if body == "1" && !z.is_empty() {
                out.push_str(&z);
            } else if z.is_empty() {
                out.push_str(&body);
            } else {
                out.push_str(&body);
                out.push(' ');
                out.push_str(&z);
            }
        }
    }
    out
}

fn latex_monomial(m: crate::param::Monomial, abs: &Integer) -> String {
    let mut parts = Vec::new();
    if *abs != 1 || m.is_one() {
        parts.push(abs.to_string());
    }
    let es = m.exponent(Param::S);
    if es > 0 {
        let (name, e) = if es.is_multiple_of(2) { ("q", es / 2) } else { ("s", es) };
        parts.push(if e == 1 {
            name.to_string()
        } else {
            format!("{name}^{{{e}}}")
        });
    }
    for p in [Param::A, Param::B, Param::C] {
        let e = m.exponent(p);
        if e == 1 {
            parts.push(p.name().to_string());
        } else if e > 1 {
            parts.push(format!("{}^{{{e}}}", p.name()));
        }
    }
    parts.join(" ")
}

fn latex_poly(p: &crate::param::ParamPoly) -> String {
    let mut out = String::new();
    for (i, (m, n)) in p.terms().iter().enumerate() {
        let neg = *n < 0;
        let abs = if neg { -n.clone() } else { n.clone() };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&latex_monomial(*m, &abs));
    }
    out
}

impl<F: Field> LaurentPoly<F> {
    /// Terms in `[low, high]` only.
    pub fn support_within(&self, low: i64, high: i64) -> bool {
        self.terms().all(|(k, _)| (low..=high).contains(&k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_expressions() {
        let x: ParamRat = "q^2*a*b - a - b".parse().unwrap();
        assert_eq!(x.to_string(), "q^2*a*b - a - b");
        let y: ParamRat = "(a + b)/(a*b)".parse().unwrap();
        assert_eq!(y.to_string(), "(a + b)/(a*b)");
        let z: ParamRat = "s^2".parse().unwrap();
        assert_eq!(z, ParamRat::q_pow(1));
        assert_eq!("-1/q".parse::<ParamRat>().unwrap().to_string(), "-1/q");
        assert_eq!("q^-2".parse::<ParamRat>().unwrap().to_string(), "1/q^2");
        assert!("x + 1".parse::<ParamRat>().is_err());
        assert!("a +".parse::<ParamRat>().is_err());
        assert!("a $ b".parse::<ParamRat>().is_err());
        assert!("1/(a - a)".parse::<ParamRat>().is_err());
    }

    #[test]
    fn inline_laurent() {
        let f = parse_laurent("z^-1 + a*b*c - a - b").unwrap();
        assert_eq!(f.to_string(), "z^-1 + a*b*c - a - b");
        assert_eq!(parse_laurent("1").unwrap(), Lp::one());
        assert_eq!(parse_laurent("z").unwrap(), Lp::z_pow(1));
        assert_eq!(parse_laurent("(z + 1/z)^2").unwrap().to_string(), "z^-2 + 2 + z^2");
        assert_eq!(parse_laurent("a/z").unwrap().to_string(), "a*z^-1");
        assert!(parse_laurent("1/(1 + z)").is_err());
    }

    #[test]
    fn json_input() {
        let f = parse_laurent(r#"{"terms":[{"z":-1,"coeff":"q"},{"z":1,"coeff":"1"}]}"#).unwrap();
        assert_eq!(f.to_string(), "q*z^-1 + z");
        assert!(parse_laurent(r#"{"terms":[{"z":1}]}"#).is_err());
    }

    #[test]
    fn rational_coefficients_round_trip() {
        for text in ["(a + b)/(a*b)*z - 1/q", "-1/(a*b)", "(q*a + 1)/q*z^2 + a*b*z^-3"] {
            let f = parse_laurent(text).unwrap();
            let again = parse_laurent(&f.to_string()).unwrap();
            assert_eq!(f.to_string(), again.to_string());
            assert_eq!(f, again);
        }
    }

    #[test]
    fn latex_output() {
        let f = parse_laurent("z + q*z^-1 - q*a").unwrap();
        assert_eq!(to_latex(&f), "q z^{-1} - q a + z");
    }
}
