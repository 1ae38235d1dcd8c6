//! The checks of each suite, built for one evaluation context.

use std::sync::Arc;

use super::{Check, CheckKind, Ctx, Suite};
use crate::field::{Field, Params};
use crate::hecke::{eta_map, explicit_y_v, AlgebraId, NCExpression, Representation, Token};
use crate::laurent::{LaurentPoly, Substitution};
use crate::param::Param;
use crate::qpoly::{leading_of, qpoch, Family, FamilyCache, FamilyKind};

type Res<F> = Result<LaurentPoly<F>, String>;

pub(crate) fn build<'a, F: Field>(suite: Suite, ctx: &'a Ctx<F>, n: i64) -> Vec<Check<'a>> {
    match suite {
        Suite::Relations => relations(ctx, n),
        Suite::Bz => bz(ctx, n),
        Suite::Eigen => eigen(ctx, n),
        Suite::Actions => actions(ctx, n),
        Suite::Iterated => iterated(ctx, n),
        Suite::Leading => leading(ctx, n),
        Suite::ForwardShift => forward_shift(ctx, n),
        Suite::Degenerations => degenerations(ctx, n),
        Suite::Eta => eta(ctx, n),
        Suite::ExplicitY => explicit_y(ctx, n),
        Suite::Dagger => dagger(ctx, n),
        Suite::Basis => basis(ctx, n),
        Suite::Mutations => mutations(ctx, n),
    }
}

fn monomials(n: i64) -> String {
    format!("z^k for |k| <= {n}")
}

fn sign<F: Field>(e: i64) -> F {
    if e.rem_euclid(2) == 0 {
        F::one()
    } else {
        F::one().negate()
    }
}

fn q_pow<F: Field>(p: &Params<F>, e: i64) -> F {
    p.q_pow(e).expect("q is nonzero")
}

fn nonsym<F: Field>(cache: &FamilyCache<F>, idx: i64) -> Result<Arc<LaurentPoly<F>>, String> {
    cache.nonsym_poly(idx).map_err(|e| e.to_string())
}

fn apply<F: Field>(ctx: &Ctx<F>, word: &NCExpression<F>, f: &LaurentPoly<F>) -> Res<F> {
    ctx.rep.eval_word(word, f).map_err(|e| e.to_string())
}

fn e_name(idx: i64) -> String {
    format!("E_{idx}")
}

/// `X^m` as tokens.
fn x_power(m: i64) -> Vec<Token> {
    let t = if m < 0 { Token::Xi } else { Token::X };
    vec![t; m.unsigned_abs() as usize]
}

fn word<F: Field>(parts: &[&[Token]]) -> NCExpression<F> {
    NCExpression::word(&parts.concat())
}

/// `f` minus the claimed extreme terms: zero iff `f` lives in `[lo, hi]` with
/// the given coefficients at both ends.
fn extremes<F: Field>(f: &LaurentPoly<F>, lo: i64, hi: i64, c_lo: &F, c_hi: &F) -> LaurentPoly<F> {
    debug_assert!(lo < hi);
    let outside = LaurentPoly::from_terms(
        f.terms()
            .filter(|(k, _)| *k < lo || *k > hi)
            .map(|(k, c)| (k, c.clone())),
    );
    outside.add(&LaurentPoly::from_terms([
        (lo, f.coeff(lo).minus(c_lo)),
        (hi, f.coeff(hi).minus(c_hi)),
    ]))
}

pub(crate) fn relation_check<'a, F: Field>(
    ctx: &'a Ctx<F>,
    id: String,
    kind: CheckKind,
    expr: NCExpression<F>,
    n: i64,
) -> Check<'a> {
    let probe = move |t: &mut super::Tally| {
        for k in -n..=n {
            if t.done() {
                return;
            }
            t.record(|| format!("z^{k}"), ctx.rep.eval_word(&expr, &LaurentPoly::z_pow(k)));
        }
    };
    Check::new(id, kind, Box::new(probe)).window(monomials(n))
}

fn text_checks<'a, F: Field>(
    ctx: &'a Ctx<F>,
    suite: &str,
    kind: CheckKind,
    list: &[(&str, &str)],
    n: i64,
) -> Vec<Check<'a>> {
    list.iter()
        .map(|(name, text)| {
            let id = format!("{suite}/{}/{name}", ctx.algebra);
            relation_check(ctx, id, kind, ctx.expr(text), n).note(format!("{text} = 0"))
        })
        .collect()
}

fn relations<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let mut list: Vec<(&str, &str)> = match ctx.algebra {
        AlgebraId::V => vec![
            ("t1-quadratic", "(T1 + a*b)*(T1 + 1)"),
            ("t0-quadratic", "T0*(T0 + 1)"),
            ("t1x-quadratic", "(T1*X + a)*(T1*X + b)"),
            ("t0-x-exchange", "q*T0*Xi + c - X*(T0 + 1)"),
        ],
        AlgebraId::III => vec![
            ("t1-quadratic", "(T1 + a*b)*(T1 + 1)"),
            ("t0-square", "T0^2"),
            ("t1x-quadratic", "(T1*X + a)*(T1*X + b)"),
            ("t0-x-exchange", "q*T0*Xi + 1 - X*T0"),
        ],
        AlgebraId::IIID7 => vec![
            ("t1-quadratic", "T1*(T1 + 1)"),
            ("t0-square", "T0^2"),
            ("t1x-exchange", "T1*X + a - Xi*(T1 + 1)"),
            ("t0-x-exchange", "q*T0*Xi + 1 - X*T0"),
        ],
        AlgebraId::IIID8 => vec![
            ("t1-quadratic", "T1*(T1 + 1)"),
            ("t0-square", "T0^2"),
            ("t1x-exchange", "T1*X - Xi*(T1 + 1)"),
            ("t0-x-exchange", "q*T0*Xi + 1 - X*T0"),
        ],
    };
    list.push(("x-inverse-left", "Xi*X - 1"));
    list.push(("x-inverse-right", "X*Xi - 1"));
    text_checks(ctx, "relations", CheckKind::Identity, &list, n)
}

fn bz<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let v = ctx.algebra == AlgebraId::V;
    let mut list = vec![
        ("ld00-zy", "Z*Y"),
        ("ld00-yz", "Y*Z"),
        ("ld1-x-t1", "X*T1 + a*b*T1i*Xi + a + b"),
        ("ld2-t1i-y", "T1i*Y - Z*T1 + 1"),
        ("ld3-t1-quadratic", "(T1 + a*b)*(T1 + 1)"),
    ];
    if v {
        list.extend([
            (
                "ld4-y-x",
                "a*b*Y*X + q*T1^2*X*Y + q*(a + b)*T1*Y + a*b*T1*X - a*b*c*T1",
            ),
            (
                "reorder-y-xi",
                "Y*Xi - 1/q*Xi*Y - (1 + a*b)/q*Xi*Z*T1 + (a + b)/q*Z*T1 - 1/q*Xi*T1 + c/q*T1",
            ),
            (
                "reorder-z-x",
                "Z*X - 1/q*X*Z + q*(1 + a*b)/(a*b)*Xi*Z*T1 - (a + b)/(a*b)*Z*T1 \
                 + 1/(a*b)*Xi*T1 - c/(a*b*q)*T1 - (1 + a*b)*(q - 1)/(a*b)*(Xi - c/q)",
            ),
        ]);
    } else {
        list.extend([
            ("ld4-y-x", "a*b*Y*X + q*T1^2*X*Y + q*(a + b)*T1*Y + a*b*T1*X"),
            (
                "reorder-y-xi",
                "Y*Xi - 1/q*Xi*Y - (1 + a*b)/q*Xi*Z*T1 + (a + b)/q*Z*T1 - 1/q*Xi*T1",
            ),
            (
                "reorder-z-x",
                "Z*X - 1/q*X*Z + q*(1 + a*b)/(a*b)*Xi*Z*T1 - (a + b)/(a*b)*Z*T1 \
                 + 1/(a*b)*Xi*T1 - (1 + a*b)*(q - 1)/(a*b)*Xi",
            ),
        ]);
    }
    let mut out = text_checks(ctx, "bz", CheckKind::Identity, &list, n);
    if !v {
        let stated = [(
            "reorder-z-x-as-stated",
            "Z*X - 1/q*X*Z + q*(1 + a*b)/(a*b)*Xi*Z*T1 - (1 + a*b)/(a*b)*Z*T1 \
             + 1/(a*b)*Xi*T1 - (1 + a*b)*(q - 1)/(a*b)*Xi",
        )];
        out.extend(
            text_checks(ctx, "bz", CheckKind::Refutation, &stated, n)
                .into_iter()
                .map(|c| c.note("stated coefficient (1 + a*b)/(a*b) of Z*T1; the identity needs (a + b)/(a*b)")),
        );
    }
    out
}

/// `word E_idx - lambda E_idx`.
fn eigen_check<'a, F: Field>(
    ctx: &'a Ctx<F>,
    name: &str,
    kind: CheckKind,
    letter: Token,
    idx: i64,
    lambda: F,
) -> Check<'a> {
    let id = format!("eigen/{}/{name}/n={:02}", ctx.algebra, idx.abs());
    let w = NCExpression::token(letter);
    let probe = move |t: &mut super::Tally| {
        let r: Res<F> = (|| {
            let e = nonsym(&ctx.family, idx)?;
            Ok(apply(ctx, &w, &e)?.sub(&e.scale(&lambda)))
        })();
        t.record(|| format!("{letter} {}", e_name(idx)), r);
    };
    Check::new(id, kind, Box::new(probe))
}

fn eigen<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let p = &ctx.params;
    let ab = p.a.times(&p.b);
    let z_eigen = |m: i64| F::one().negate().try_div(&ab.times(&q_pow(p, m))).expect("ab is nonzero");
    let mut out = Vec::new();
    for m in 0..=n {
        if m >= 1 {
            out.push(eigen_check(ctx, "y-on-e-minus", CheckKind::Identity, Token::Y, -m, q_pow(p, -m)));
            out.push(eigen_check(ctx, "z-on-e-minus", CheckKind::Identity, Token::Z, -m, F::zero()));
        }
        out.push(eigen_check(ctx, "y-on-e-plus", CheckKind::Identity, Token::Y, m, F::zero()));
        if m >= 1 || ctx.algebra == AlgebraId::V {
            out.push(eigen_check(ctx, "z-on-e-plus", CheckKind::Identity, Token::Z, m, z_eigen(m)));
        }
    }
    if ctx.algebra == AlgebraId::III {
        out.push(
            eigen_check(ctx, "z-on-e0-derived", CheckKind::Identity, Token::Z, 0, z_eigen(0))
                .note("Z E_0 = -E_0/(a*b), from T0 1 = 0 and T1i 1 = -1/(a*b)"),
        );
        out.push(
            eigen_check(ctx, "z-on-e0-as-stated", CheckKind::Refutation, Token::Z, 0, F::zero())
                .note("the stated range n = 0, 1, 2, ... of Z E_-n = 0 includes E_0"),
        );
    }
    out
}

/// `word E_idx - sum c_i E_i`.
fn expansion_check<'a, F: Field>(
    ctx: &'a Ctx<F>,
    id: String,
    word: NCExpression<F>,
    idx: i64,
    rhs: Vec<(F, i64)>,
) -> Check<'a> {
    let probe = move |t: &mut super::Tally| {
        let r: Res<F> = (|| {
            let mut acc = apply(ctx, &word, &*nonsym(&ctx.family, idx)?)?;
            for (c, i) in &rhs {
                acc = acc.sub(&nonsym(&ctx.family, *i)?.scale(c));
            }
            Ok(acc)
        })();
        t.record(|| format!("{word} {}", e_name(idx)), r);
    };
    Check::new(id, CheckKind::Identity, Box::new(probe))
}

enum Expect<F> {
    Zero,
    Window(i64, i64, F, F),
}

/// The twelve leading-term claims for words `X^m Y^n T1^i` and `X^m Z^n T1^i`
/// applied to `E_-j` and `E_j`.
const ACTION_LIST: [(&str, Option<Token>, bool, bool); 12] = [
    ("x-e-minus", None, false, true),
    ("x-y-e-minus", Some(Token::Y), false, true),
    ("x-y-t1-e-minus", Some(Token::Y), true, true),
    ("x-t1-e-minus", None, true, true),
    ("x-z-e-minus", Some(Token::Z), false, true),
    ("x-z-t1-e-minus", Some(Token::Z), true, true),
    ("x-e-plus", None, false, false),
    ("x-y-e-plus", Some(Token::Y), false, false),
    ("x-y-t1-e-plus", Some(Token::Y), true, false),
    ("x-t1-e-plus", None, true, false),
    ("x-z-e-plus", Some(Token::Z), false, false),
    ("x-z-t1-e-plus", Some(Token::Z), true, false),
];

fn action_expectation<F: Field>(claim: usize, p: &Params<F>, j: i64, m: i64, n: i64) -> Expect<F> {
    let one = F::one();
    let ab = p.a.times(&p.b);
    let qj = q_pow(p, j);
    let top = p.c.times(&ab).times(&q_pow(p, j - 1)).minus(&p.a).minus(&p.b);
    let short = |f: F| Expect::Window(m - j, m + j - 1, f.clone(), f.times(&top));
    let long = |lo: F, hi: F| Expect::Window(m - j, m + j, lo, hi);
    let inv_ab = one.negate().try_div(&ab).expect("ab is nonzero");
    let inv_abqj = one.negate().try_div(&ab.times(&qj)).expect("ab is nonzero");
    match claim {
        0 => short(one),
        1 => short(q_pow(p, -j * n)),
        2 => short(one.plus(&ab).minus(&ab.times(&qj)).negate().times(&q_pow(p, -j * n))),
        3 => long(one.plus(&ab).negate(), ab.negate()),
        4 | 7 => Expect::Zero,
        5 => {
            let f = inv_ab.pow_i(n - 1).expect("nonzero").times(&q_pow(p, -n * j));
            long(f.times(&qj), f)
        }
        6 => long(qj, one),
        8 => short(
            one.minus(&qj)
                .times(&one.minus(&ab.times(&qj)))
                .times(&q_pow(p, -j * n)),
        ),
        9 => long(one.minus(&ab.times(&qj)).minus(&qj), ab.times(&qj).negate()),
        10 => {
            let f = inv_abqj.pow_i(n).expect("nonzero");
            long(f.times(&qj), f)
        }
        11 => {
            let f = inv_abqj.pow_i(n - 1).expect("nonzero");
            long(f.times(&qj), f)
        }
        _ => unreachable!("twelve claims"),
    }
}

fn action_list<F: Field>(ctx: &Ctx<F>, jmax: i64) -> Vec<Check<'_>> {
    let mut out = Vec::new();
    for (claim, &(name, letter, t1, minus)) in ACTION_LIST.iter().enumerate() {
        for j in 1..=jmax {
            let id = format!("actions/{}/list-{:02}-{name}/j={j:02}", ctx.algebra, claim + 1);
            let probe = move |t: &mut super::Tally| {
                let idx = if minus { -j } else { j };
                let e = match nonsym(&ctx.family, idx) {
                    Ok(e) => e,
                    Err(err) => return t.record::<F, _>(|| e_name(idx), Err(err)),
                };
                let powers: &[i64] = if letter.is_some() { &[1, 2, 3, 4] } else { &[0] };
                for m in [-2, 0, 2] {
                    for &n in powers {
                        if t.done() {
                            return;
                        }
                        let mut tokens = x_power(m);
                        if let Some(l) = letter {
                            tokens.extend(std::iter::repeat_n(l, n as usize));
                        }
                        if t1 {
                            tokens.push(Token::T1);
                        }
                        let w = NCExpression::word(&tokens);
                        let r = apply(ctx, &w, &e).map(|f| match action_expectation(claim, &ctx.params, j, m, n) {
                            Expect::Zero => f,
                            Expect::Window(lo, hi, c_lo, c_hi) => extremes(&f, lo, hi, &c_lo, &c_hi),
                        });
                        t.record(|| format!("{w} {}", e_name(idx)), r);
                    }
                }
            };
            out.push(
                Check::new(id, CheckKind::Identity, Box::new(probe))
                    .window("m in {-2, 0, 2}, powers of Y and Z up to 4"),
            );
        }
    }
    out
}

fn actions<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let p = &ctx.params;
    let alg = ctx.algebra;
    let one = F::one();
    let mut out = Vec::new();
    if alg.has_yz() {
        let ab = p.a.times(&p.b);
        let t1 = NCExpression::token(Token::T1);
        for j in 1..=n {
            let qj = q_pow(p, j);
            out.push(expansion_check(
                ctx,
                format!("actions/{alg}/t1-on-e-minus/j={j:02}"),
                t1.clone(),
                -j,
                vec![
                    (one.plus(&ab).minus(&ab.times(&qj)).negate(), -j),
                    (ab.negate(), j),
                ],
            ));
            out.push(expansion_check(
                ctx,
                format!("actions/{alg}/t1-on-e-plus/j={j:02}"),
                t1.clone(),
                j,
                vec![
                    (one.minus(&qj).times(&one.minus(&ab.times(&qj))), -j),
                    (ab.times(&qj).negate(), j),
                ],
            ));
        }
        out.extend(action_list(ctx, n.min(6)));
    } else {
        let t0 = NCExpression::token(Token::T0);
        let t1 = NCExpression::token(Token::T1);
        for j in 1..=n {
            let qj = q_pow(p, j);
            out.push(expansion_check(ctx, format!("actions/{alg}/t0-on-e-plus/j={j:02}"), t0.clone(), j, vec![]));
            out.push(expansion_check(
                ctx,
                format!("actions/{alg}/t0-on-e-minus/j={j:02}"),
                t0.clone(),
                -j,
                vec![(q_pow(p, -j).negate(), j - 1)],
            ));
            out.push(expansion_check(
                ctx,
                format!("actions/{alg}/t1-on-e-plus/j={j:02}"),
                t1.clone(),
                j,
                vec![(one.minus(&qj), -j)],
            ));
            out.push(expansion_check(
                ctx,
                format!("actions/{alg}/t1-on-e-minus/j={j:02}"),
                t1.clone(),
                -j,
                vec![(one.negate(), -j)],
            ));
        }
    }
    out
}

/// The four word shapes `(T0 T1)^l`, `(T0 T1)^l T0`, `(T1 T0)^l`, `(T1 T0)^l T1`.
#[derive(Clone, Copy)]
enum Shape {
    T0T1,
    T0T1T0,
    T1T0,
    T1T0T1,
}

fn shape_tokens(shape: Shape, l: i64) -> Vec<Token> {
    let (pair, tail): ([Token; 2], Option<Token>) = match shape {
        Shape::T0T1 => ([Token::T0, Token::T1], None),
        Shape::T0T1T0 => ([Token::T0, Token::T1], Some(Token::T0)),
        Shape::T1T0 => ([Token::T1, Token::T0], None),
        Shape::T1T0T1 => ([Token::T1, Token::T0], Some(Token::T1)),
    };
    let mut out: Vec<Token> = pair.iter().copied().cycle().take(2 * l as usize).collect();
    out.extend(tail);
    out
}

/// One of the six iterated formulas: shape, sign of the input index, the
/// index of the output polynomial, the scalar, and where it is claimed.
struct Iterated<F> {
    name: &'static str,
    shape: Shape,
    minus: bool,
    valid: fn(i64, i64) -> bool,
    target: fn(i64, i64) -> i64,
    factor: fn(&Params<F>, i64, i64) -> F,
}

fn tri(l: i64, j: i64) -> i64 {
    l * (1 + 2 * j - l) / 2
}

fn iterated_formulas<F: Field>() -> Vec<Iterated<F>> {
    vec![
        Iterated {
            name: "t0t1-on-e-plus",
            shape: Shape::T0T1,
            minus: false,
            valid: |j, l| j >= l,
            target: |j, l| j - l,
            factor: |p, j, l| {
                sign::<F>(l)
                    .times(&qpoch(&q_pow(p, j - l + 1), &p.q(), l as usize))
                    .times(&q_pow(p, -tri(l, j)))
            },
        },
        Iterated {
            name: "t0t1-on-e-minus",
            shape: Shape::T0T1,
            minus: true,
            valid: |j, l| j >= l,
            target: |j, l| j - l,
            factor: |p, j, l| {
                sign::<F>(l - 1)
                    .times(&qpoch(&q_pow(p, j - l + 1), &p.q(), (l - 1) as usize))
                    .times(&q_pow(p, -tri(l, j)))
            },
        },
        Iterated {
            name: "t0t1t0-on-e-minus",
            shape: Shape::T0T1T0,
            minus: true,
            valid: |j, l| j > l,
            target: |j, l| j - l - 1,
            factor: |p, j, l| {
                sign::<F>(l - 1)
                    .times(&qpoch(&q_pow(p, j - l), &p.q(), l as usize))
                    .times(&q_pow(p, -(l + 1) * (2 * j - l) / 2))
            },
        },
        Iterated {
            name: "t1t0-on-e-minus",
            shape: Shape::T1T0,
            minus: true,
            valid: |j, l| j >= l,
            target: |j, l| -j + l,
            factor: |p, j, l| {
                sign::<F>(l)
                    .times(&qpoch(&q_pow(p, j - l), &p.q(), l as usize))
                    .times(&q_pow(p, -tri(l, j)))
            },
        },
        Iterated {
            name: "t1t0t1-on-e-plus",
            shape: Shape::T1T0T1,
            minus: false,
            valid: |j, l| j >= l,
            target: |j, l| -j + l,
            factor: |p, j, l| {
                sign::<F>(l)
                    .times(&qpoch(&q_pow(p, j - l), &p.q(), (l + 1) as usize))
                    .times(&q_pow(p, -tri(l, j)))
            },
        },
        Iterated {
            name: "t1t0t1-on-e-minus",
            shape: Shape::T1T0T1,
            minus: true,
            valid: |j, l| j >= l,
            target: |j, l| -j + l,
            factor: |p, j, l| {
                sign::<F>(l - 1)
                    .times(&qpoch(&q_pow(p, j - l), &p.q(), l as usize))
                    .times(&q_pow(p, -tri(l, j)))
            },
        },
    ]
}

/// The single-step reductions: `X^k W_l E = c X^k W_(l-1) E'`.
struct Step<F> {
    name: &'static str,
    shape: Shape,
    minus: bool,
    min_j: i64,
    target: fn(i64) -> i64,
    factor: fn(&Params<F>, i64) -> F,
}

fn step_formulas<F: Field>() -> Vec<Step<F>> {
    vec![
        Step {
            name: "t0t1-on-e-plus",
            shape: Shape::T0T1,
            minus: false,
            min_j: 1,
            target: |j| j - 1,
            factor: |p, j| F::one().minus(&q_pow(p, j)).times(&q_pow(p, -j)).negate(),
        },
        Step {
            name: "t0t1-on-e-minus",
            shape: Shape::T0T1,
            minus: true,
            min_j: 1,
            target: |j| j - 1,
            factor: |p, j| q_pow(p, -j),
        },
        Step {
            name: "t0t1t0-on-e-minus",
            shape: Shape::T0T1T0,
            minus: true,
            min_j: 2,
            target: |j| j - 2,
            factor: |p, j| {
                q_pow(p, -j)
                    .times(&F::one().minus(&q_pow(p, j - 1)))
                    .times(&q_pow(p, 1 - j))
            },
        },
        Step {
            name: "t1t0-on-e-minus",
            shape: Shape::T1T0,
            minus: true,
            min_j: 1,
            target: |j| -j + 1,
            factor: |p, j| F::one().minus(&q_pow(p, j - 1)).times(&q_pow(p, -j)).negate(),
        },
        Step {
            name: "t1t0t1-on-e-plus",
            shape: Shape::T1T0T1,
            minus: false,
            min_j: 1,
            target: |j| -j + 1,
            factor: |p, j| {
                F::one()
                    .minus(&q_pow(p, j))
                    .times(&q_pow(p, -j))
                    .times(&F::one().minus(&q_pow(p, j - 1)))
                    .negate()
            },
        },
        Step {
            name: "t1t0t1-on-e-minus",
            shape: Shape::T1T0T1,
            minus: true,
            min_j: 1,
            target: |j| -j + 1,
            factor: |p, j| F::one().minus(&q_pow(p, j - 1)).times(&q_pow(p, -j)),
        },
    ]
}

const KS: [i64; 3] = [-2, 0, 3];

fn iterated<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let alg = ctx.algebra;
    let mut out = Vec::new();
    for (i, step) in step_formulas::<F>().into_iter().enumerate() {
        let step = Arc::new(step);
        for j in step.min_j..=n {
            let step = step.clone();
            let id = format!("iterated/{alg}/step-{}-{}/j={j:02}", i + 1, step.name);
            let probe = move |t: &mut super::Tally| {
                let idx = if step.minus { -j } else { j };
                let c = (step.factor)(&ctx.params, j);
                for l in 1..=n {
                    for k in KS {
                        if t.done() {
                            return;
                        }
                        let lhs_w: NCExpression<F> = word(&[&x_power(k), &shape_tokens(step.shape, l)]);
                        let rhs_w: NCExpression<F> = word(&[&x_power(k), &shape_tokens(step.shape, l - 1)]);
                        let rhs_w = if matches!(step.shape, Shape::T0T1T0 | Shape::T1T0T1) {
                            // the trailing letter is consumed by the first step
                            let mut toks = x_power(k);
                            let pair = match step.shape {
                                Shape::T0T1T0 => Shape::T0T1,
                                _ => Shape::T1T0,
                            };
                            toks.extend(shape_tokens(pair, l - 1));
                            NCExpression::word(&toks)
                        } else {
                            rhs_w
                        };
                        let r: Res<F> = (|| {
                            let lhs = apply(ctx, &lhs_w, &*nonsym(&ctx.family, idx)?)?;
                            let rhs = apply(ctx, &rhs_w, &*nonsym(&ctx.family, (step.target)(j))?)?;
                            Ok(lhs.sub(&rhs.scale(&c)))
                        })();
                        t.record(|| format!("{lhs_w} {}", e_name(idx)), r);
                    }
                }
            };
            out.push(
                Check::new(id, CheckKind::Identity, Box::new(probe))
                    .window(format!("1 <= l <= {n}, k in {{-2, 0, 3}}")),
            );
        }
    }
    for (i, f) in iterated_formulas::<F>().into_iter().enumerate() {
        let f = Arc::new(f);
        for j in (1..=n).filter(|&j| (f.valid)(j, 1)) {
            let f = f.clone();
            let id = format!("iterated/{alg}/power-{}-{}/j={j:02}", i + 1, f.name);
            let probe = move |t: &mut super::Tally| {
                let idx = if f.minus { -j } else { j };
                for l in (1..=n).filter(|&l| (f.valid)(j, l)) {
                    let c = (f.factor)(&ctx.params, j, l);
                    for k in KS {
                        if t.done() {
                            return;
                        }
                        let w: NCExpression<F> = word(&[&x_power(k), &shape_tokens(f.shape, l)]);
                        let r: Res<F> = (|| {
                            let lhs = apply(ctx, &w, &*nonsym(&ctx.family, idx)?)?;
                            let rhs = nonsym(&ctx.family, (f.target)(j, l))?.shift(k);
                            Ok(lhs.sub(&rhs.scale(&c)))
                        })();
                        t.record(|| format!("{w} {}", e_name(idx)), r);
                    }
                }
            };
            out.push(
                Check::new(id, CheckKind::Identity, Box::new(probe))
                    .window(format!("1 <= l <= {n}, k in {{-2, 0, 3}}")),
            );
        }
    }
    out.extend(estimates(ctx, n));
    out
}

/// Leading-term estimates derived from the iterated formulas, for `j > l`.
/// The third is checked both with the trailing coefficient `q^(j-l-1)` that
/// the formula implies and with the stated `q^(j-l)`.
fn estimates<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let alg = ctx.algebra;
    let mut out = Vec::new();
    let formulas: Vec<Arc<Iterated<F>>> = iterated_formulas::<F>().into_iter().map(Arc::new).collect();
    for (i, f) in formulas.iter().enumerate() {
        let variants: Vec<(String, CheckKind, i64)> = if i == 2 {
            vec![
                (format!("estimate-3-{}", f.name), CheckKind::Identity, 1),
                (format!("estimate-3-{}-as-stated", f.name), CheckKind::Refutation, 0),
            ]
        } else {
            vec![(format!("estimate-{}-{}", i + 1, f.name), CheckKind::Identity, 0)]
        };
        for (name, kind, trailing_shift) in variants {
            let min_gap = if i == 2 { 2 } else { 1 };
            for j in (min_gap + 1)..=n {
                let f = f.clone();
                let id = format!("iterated/{alg}/{name}/j={j:02}");
                let probe = move |t: &mut super::Tally| {
                    let p = &ctx.params;
                    let idx = if f.minus { -j } else { j };
                    for l in (1..=n).filter(|&l| j - l >= min_gap) {
                        let c = (f.factor)(p, j, l);
                        for k in KS {
                            if t.done() {
                                return;
                            }
                            let w: NCExpression<F> = word(&[&x_power(k), &shape_tokens(f.shape, l)]);
                            let (lo, hi, c_lo, c_hi) = match i {
                                0 | 1 => (k - j + l, k + j - l, c.times(&q_pow(p, j - l)), c.clone()),
                                2 => (
                                    k - j + l + 1,
                                    k + j - l - 1,
                                    c.times(&q_pow(p, j - l - trailing_shift)),
                                    c.clone(),
                                ),
                                _ => (k - j + l, k + j - l - 1, c.clone(), c.times(&p.a.negate())),
                            };
                            let r = nonsym(&ctx.family, idx)
                                .and_then(|e| apply(ctx, &w, &e))
                                .map(|g| extremes(&g, lo, hi, &c_lo, &c_hi));
                            t.record(|| format!("{w} {}", e_name(idx)), r);
                        }
                    }
                };
                let mut check = Check::new(id, kind, Box::new(probe))
                    .window(format!("l < j, l <= {n}, k in {{-2, 0, 3}}"));
                if kind == CheckKind::Refutation {
                    check = check.note("stated trailing coefficient q^(j-l); E_(j-l-1) ends in q^(j-l-1) z^(-(j-l-1))");
                }
                out.push(check);
            }
        }
    }
    out
}

fn fam_id(ctx: &Ctx<impl Field>) -> FamilyKind {
    ctx.algebra.family()
}

fn leading<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let fam = fam_id(ctx);
    let mut out = Vec::new();
    for m in 1..=n {
        for minus in [true, false] {
            let idx = if minus { -m } else { m };
            let id = format!("leading/{fam}/{}/n={m:02}", if minus { "e-minus" } else { "e-plus" });
            let probe = move |t: &mut super::Tally| {
                let p = &ctx.params;
                let (c_lo, c_hi) = if minus {
                    let top = if ctx.algebra.has_yz() {
                        p.a.times(&p.b).times(&p.c).times(&q_pow(p, m - 1)).minus(&p.a).minus(&p.b)
                    } else {
                        p.a.negate()
                    };
                    (F::one(), top)
                } else {
                    (q_pow(p, m), F::one())
                };
                let r = nonsym(&ctx.family, idx).and_then(|e| {
                    leading_of(idx, &e).map_err(|err| err.to_string())?;
                    let (lo, hi) = crate::qpoly::nominal_window(idx);
                    Ok(extremes(&e, lo, hi, &c_lo, &c_hi))
                });
                t.record(|| e_name(idx), r);
            };
            out.push(Check::new(id, CheckKind::Identity, Box::new(probe)));
        }
        let id = format!("leading/{fam}/sym-symmetric/n={m:02}");
        let probe = move |t: &mut super::Tally| {
            let r = ctx
                .family
                .sym_poly(m)
                .map_err(|e| e.to_string())
                .and_then(|f| Ok(f.sub(&f.substitute(&Substitution::inversion()).map_err(|e| e.to_string())?)));
            t.record(|| format!("P_{m}"), r);
        };
        out.push(Check::new(id, CheckKind::Identity, Box::new(probe)));
        let id = format!("leading/{fam}/sym-monic/n={m:02}");
        let probe = move |t: &mut super::Tally| {
            let r = ctx
                .family
                .sym_poly(m)
                .map_err(|e| e.to_string())
                .map(|f| LaurentPoly::monomial(f.coeff(m).minus(&F::one()), m));
            t.record(|| format!("P_{m}"), r);
        };
        out.push(Check::new(id, CheckKind::Identity, Box::new(probe)));
    }
    out
}

/// `(q^n - 1)(q - z^2) dagger_n + sgn q^n z (z - c) (P_n(z) - P_n(z/q))`.
fn forward_shift_residual<F: Field>(ctx: &Ctx<F>, m: i64, sgn: i64) -> Res<F> {
    let p = &ctx.params;
    let q = p.q();
    let qn = q_pow(p, m);
    let sym = ctx.family.sym_poly(m).map_err(|e| e.to_string())?;
    let dagger = ctx.family.dagger_poly(m).map_err(|e| e.to_string())?;
    let shifted = sym
        .substitute(&Substitution::new(q_pow(p, -1), crate::laurent::Direction::Keep).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let left = dagger
        .mul(&LaurentPoly::from_terms([(0, q), (2, F::one().negate())]))
        .scale(&qn.minus(&F::one()));
    let right = sym
        .sub(&shifted)
        .mul(&LaurentPoly::from_terms([(2, F::one()), (1, p.c.negate())]))
        .scale(&qn.times(&F::from_i64(sgn)));
    Ok(left.add(&right))
}

fn forward_shift<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let fam = fam_id(ctx);
    (1..=n)
        .map(|m| {
            let probe = move |t: &mut super::Tally| {
                t.record(|| format!("P_{m}"), forward_shift_residual(ctx, m, 1));
            };
            Check::new(format!("forward-shift/{fam}/n={m:02}"), CheckKind::Identity, Box::new(probe))
        })
        .collect()
}

fn degenerations<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let mut out = Vec::new();
    let mut kind = fam_id(ctx);
    while let Some((lower, param)) = kind.limit() {
        let upper = Arc::new(FamilyCache::new(Family::new(kind, ctx.params.clone()).specialize(&[param])));
        let limit = Arc::new(FamilyCache::new(Family::new(lower, ctx.params.clone())));
        let step = format!("{kind}-to-{lower}");
        for m in 0..=n {
            let (u, l) = (upper.clone(), limit.clone());
            let probe = move |t: &mut super::Tally| {
                let r = u
                    .sym_poly(m)
                    .and_then(|a| Ok(a.sub(&*l.sym_poly(m)?)))
                    .map_err(|e| e.to_string());
                t.record(|| format!("P_{m} at {}=0", param.name()), r);
            };
            out.push(Check::new(format!("degenerations/{step}/sym/n={m:02}"), CheckKind::Identity, Box::new(probe)));
            if m == 0 {
                continue;
            }
            for minus in [true, false] {
                let idx = if minus { -m } else { m };
                let (u, l) = (upper.clone(), limit.clone());
                let probe = move |t: &mut super::Tally| {
                    let r = u
                        .nonsym_poly(idx)
                        .and_then(|a| Ok(a.sub(&*l.nonsym_poly(idx)?)))
                        .map_err(|e| e.to_string());
                    t.record(|| format!("{} at {}=0", e_name(idx), param.name()), r);
                };
                let part = if minus { "e-minus" } else { "e-plus" };
                out.push(Check::new(
                    format!("degenerations/{step}/{part}/n={m:02}"),
                    CheckKind::Identity,
                    Box::new(probe),
                ));
            }
        }
        kind = lower;
    }
    out
}

fn eta<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let list = [
        ("tilde-t1-quadratic", "(T1 + a*b)*(T1 + 1)"),
        ("tilde-t0-quadratic", "T0^2 + T0"),
        ("tilde-t1x-quadratic", "(T1*X + a)*(T1*X + b)"),
        ("tilde-t0-x-exchange", "q*T0*Xi - X*(T0 + 1)"),
    ];
    let mut out: Vec<Check<'_>> = list
        .iter()
        .map(|(name, text)| {
            let id = format!("eta/{}/{name}", ctx.algebra);
            relation_check(ctx, id, CheckKind::Identity, eta_map(&ctx.expr(text)), n)
                .note(format!("image under T0 -> -X*T0 of {text} = 0"))
        })
        .collect();
    // Y and Z of H_III are the c -> 0 limits of those of H_V
    let limit = Arc::new(Representation::new(AlgebraId::V, &ctx.params.with(Param::C, F::zero())));
    for letter in [Token::Y, Token::Z] {
        let limit = limit.clone();
        let w = NCExpression::token(letter);
        let probe = move |t: &mut super::Tally| {
            for k in -n..=n {
                if t.done() {
                    return;
                }
                let f = LaurentPoly::z_pow(k);
                let r = ctx
                    .rep
                    .eval_word(&w, &f)
                    .and_then(|a| Ok(a.sub(&limit.eval_word(&w, &f)?)));
                t.record(|| format!("z^{k}"), r);
            }
        };
        out.push(
            Check::new(
                format!("eta/{}/{}-is-c0-limit", ctx.algebra, letter.name().to_lowercase()),
                CheckKind::Identity,
                Box::new(probe),
            )
            .window(monomials(n)),
        );
    }
    out
}

fn explicit_y<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let op = Arc::new(explicit_y_v(&ctx.params));
    let composed = NCExpression::word(&[Token::T1, Token::T0]);
    let y = op.clone();
    let probe = move |t: &mut super::Tally| {
        for k in -n..=n {
            if t.done() {
                return;
            }
            let f = LaurentPoly::z_pow(k);
            let r = y.apply(&f).and_then(|a| Ok(a.sub(&ctx.rep.eval_word(&composed, &f)?)));
            t.record(|| format!("z^{k}"), r);
        }
    };
    let mut out = vec![Check::new(
        format!("explicit-y/{}/matches-t1-t0", ctx.algebra),
        CheckKind::Identity,
        Box::new(probe),
    )
    .window(monomials(n))];
    for m in 1..=n.min(4) {
        let y = op.clone();
        let probe = move |t: &mut super::Tally| {
            let r = nonsym(&ctx.family, m).and_then(|e| y.apply(&e).map_err(|err| err.to_string()));
            t.record(|| e_name(m), r);
        };
        out.push(Check::new(
            format!("explicit-y/{}/kills-e-plus/n={m:02}", ctx.algebra),
            CheckKind::Identity,
            Box::new(probe),
        ));
    }
    out
}

fn dagger<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let fam = fam_id(ctx);
    (1..=n)
        .map(|m| {
            let probe = move |t: &mut super::Tally| {
                let r = ctx.family.dagger_poly(m).map(|_| LaurentPoly::<F>::zero());
                t.record(|| format!("dagger_{m}"), r);
            };
            Check::new(format!("dagger/{fam}/integral-q-powers/n={m:02}"), CheckKind::Identity, Box::new(probe))
                .note("every coefficient is even in s = q^(1/2)")
        })
        .collect()
}

/// Position of `z^k` in the order `1, z^-1, z, z^-2, z^2, ...`.
fn basis_position(k: i64) -> i64 {
    if k < 0 {
        -2 * k - 1
    } else {
        2 * k
    }
}

fn basis<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let fam = fam_id(ctx);
    let mut out = Vec::new();
    for idx in -n..=n {
        let probe = move |t: &mut super::Tally| {
            let r = nonsym(&ctx.family, idx).map(|e| {
                let row = basis_position(idx);
                let beyond = LaurentPoly::from_terms(
                    e.terms()
                        .filter(|(k, _)| basis_position(*k) > row)
                        .map(|(k, c)| (k, c.clone())),
                );
                beyond.add(&LaurentPoly::monomial(e.coeff(idx).minus(&F::one()), idx))
            });
            t.record(|| e_name(idx), r);
        };
        out.push(
            Check::new(
                format!("basis/{fam}/triangular/row={:02}", basis_position(idx)),
                CheckKind::Identity,
                Box::new(probe),
            )
            .note("E_i has no monomial later than its own in 1, z^-1, z, z^-2, z^2, ... and coefficient 1 on it"),
        );
    }
    out
}

fn mutations<F: Field>(ctx: &Ctx<F>, n: i64) -> Vec<Check<'_>> {
    let list: Vec<(&str, &str)> = match ctx.algebra {
        AlgebraId::V => vec![
            ("t0-x-exchange-sign", "q*T0*Xi + c + X*(T0 + 1)"),
            ("t0-x-exchange-c-shift", "q*T0*Xi + (c + 1) - X*(T0 + 1)"),
            ("t1-quadratic-dropped-term", "(T1 + a*b)*T1"),
            ("t0-quadratic-sign", "T0*(T0 - 1)"),
            ("t1x-quadratic-b-to-a", "(T1*X + a)*(T1*X + a)"),
            ("ld4-dropped-term", "a*b*Y*X + q*T1^2*X*Y + q*(a + b)*T1*Y + a*b*T1*X"),
        ],
        AlgebraId::III => vec![
            ("t0-x-exchange-sign", "q*T0*Xi - 1 - X*T0"),
            ("t0-x-exchange-constant-shift", "q*T0*Xi + 2 - X*T0"),
            ("t1-quadratic-dropped-term", "(T1 + a*b)*T1"),
            ("t0-square-extra-term", "T0^2 + T0"),
            ("t1x-quadratic-b-to-a", "(T1*X + a)*(T1*X + a)"),
            ("ld4-dropped-term", "a*b*Y*X + q*T1^2*X*Y + a*b*T1*X"),
        ],
        AlgebraId::IIID7 => vec![
            ("t1-quadratic-sign", "T1*(T1 - 1)"),
            ("t0-square-extra-term", "T0^2 + T0"),
            ("t1x-exchange-sign", "T1*X + a + Xi*(T1 + 1)"),
            ("t1x-exchange-a-shift", "T1*X + (a + 1) - Xi*(T1 + 1)"),
            ("t0-x-exchange-sign", "q*T0*Xi - 1 - X*T0"),
            ("t0-x-exchange-dropped-term", "q*T0*Xi - X*T0"),
        ],
        AlgebraId::IIID8 => vec![
            ("t1-quadratic-sign", "T1*(T1 - 1)"),
            ("t0-square-extra-term", "T0^2 + T0"),
            ("t1x-exchange-sign", "T1*X + Xi*(T1 + 1)"),
            ("t1x-exchange-constant-shift", "T1*X + 1 - Xi*(T1 + 1)"),
            ("t0-x-exchange-sign", "q*T0*Xi - 1 - X*T0"),
            ("t0-x-exchange-dropped-term", "q*T0*Xi - X*T0"),
        ],
    };
    let mut out = text_checks(ctx, "mutations", CheckKind::Control, &list, n);
    let probe = move |t: &mut super::Tally| {
        for m in 1..=n {
            if t.done() {
                return;
            }
            t.record(|| format!("P_{m}"), forward_shift_residual(ctx, m, -1));
        }
    };
    out.push(
        Check::new(
            format!("mutations/{}/forward-shift-sign", ctx.algebra),
            CheckKind::Control,
            Box::new(probe),
        )
        .note("forward shift relation with the sign of the difference term flipped"),
    );
    let (name, letter, lambda_shift): (&str, Token, i64) = if ctx.algebra.has_yz() {
        ("y-eigenvalue-shift", Token::Y, 1)
    } else {
        ("t1-on-e-minus-sign", Token::T1, 0)
    };
    let probe = move |t: &mut super::Tally| {
        let p = &ctx.params;
        for m in 1..=n {
            if t.done() {
                return;
            }
            let lambda = if ctx.algebra.has_yz() {
                q_pow(p, -m + lambda_shift)
            } else {
                F::one()
            };
            let r = nonsym(&ctx.family, -m).and_then(|e| {
                Ok(apply(ctx, &NCExpression::token(letter), &e)?.sub(&e.scale(&lambda)))
            });
            t.record(|| format!("{letter} {}", e_name(-m)), r);
        }
    };
    out.push(Check::new(format!("mutations/{}/{name}", ctx.algebra), CheckKind::Control, Box::new(probe)));
    out
}
