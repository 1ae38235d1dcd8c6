//! Verification suites: every identity is evaluated exactly, either over the
//! generic parameters or at seeded rational sample points, and reported as
//! machine-readable [`CheckReport`]s.

mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::VerifyError;
use crate::field::{Field, Params};
use crate::hecke::{AlgebraId, NCExpression, Representation};
use crate::laurent::{LaurentJson, LaurentPoly};
use crate::param::{ParamRat, Point};
use crate::qpoly::{Family, FamilyCache};
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Relations,
    Bz,
    Eigen,
    Actions,
    Iterated,
    Leading,
    ForwardShift,
    Degenerations,
    Eta,
    ExplicitY,
    Dagger,
    Basis,
    Mutations,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Relations,
        Suite::Bz,
        Suite::Eigen,
        Suite::Actions,
        Suite::Iterated,
        Suite::Leading,
        Suite::ForwardShift,
        Suite::Degenerations,
        Suite::Eta,
        Suite::ExplicitY,
        Suite::Dagger,
        Suite::Basis,
        Suite::Mutations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Bz => "bz",
            Suite::Eigen => "eigen",
            Suite::Actions => "actions",
            Suite::Iterated => "iterated",
            Suite::Leading => "leading",
            Suite::ForwardShift => "forward-shift",
            Suite::Degenerations => "degenerations",
            Suite::Eta => "eta",
            Suite::ExplicitY => "explicit-y",
            Suite::Dagger => "dagger",
            Suite::Basis => "basis",
            Suite::Mutations => "mutations",
        }
    }

    /// Whether the suite has anything to check for `algebra`.
    pub fn applies_to(self, algebra: AlgebraId) -> bool {
        match self {
            Suite::Bz | Suite::Eigen => algebra.has_yz(),
            Suite::Iterated => !algebra.has_yz(),
            Suite::Degenerations => algebra != AlgebraId::IIID8,
            Suite::Eta => algebra == AlgebraId::III,
            Suite::ExplicitY => algebra == AlgebraId::V,
            _ => true,
        }
    }

    /// Every suite that applies to `algebra`.
    pub fn all_for(algebra: AlgebraId) -> Vec<Suite> {
        Suite::ALL.into_iter().filter(|s| s.applies_to(algebra)).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Specialized { seed: u64, trials: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub algebra: AlgebraId,
    pub suites: Vec<Suite>,
    pub nmax: u32,
    pub mode: Mode,
}

impl CheckConfig {
    pub fn new(algebra: AlgebraId, suites: Vec<Suite>, nmax: u32, mode: Mode) -> Self {
        CheckConfig {
            algebra,
            suites,
            nmax,
            mode,
        }
    }

    pub fn symbolic(algebra: AlgebraId, suite: Suite, nmax: u32) -> Self {
        CheckConfig::new(algebra, vec![suite], nmax, Mode::Symbolic)
    }

    fn validate(&self) -> Result<(), VerifyError> {
        if self.nmax < 1 {
            return Err(VerifyError::InvalidConfig("nmax must be at least 1".into()));
        }
        if let Mode::Specialized { trials: 0, .. } = self.mode {
            return Err(VerifyError::InvalidConfig("trials must be at least 1".into()));
        }
        if self.suites.is_empty() {
            return Err(VerifyError::InvalidConfig("no suites selected".into()));
        }
        if let Some(s) = self.suites.iter().find(|s| !s.applies_to(self.algebra)) {
            return Err(VerifyError::InvalidConfig(format!(
                "suite {s} does not apply to algebra {}",
                self.algebra
            )));
        }
        Ok(())
    }

    fn to_json(&self) -> ConfigJson {
        let mut suites: Vec<&'static str> = self.suites.iter().map(|s| s.name()).collect();
        suites.sort_unstable();
        suites.dedup();
        let (mode, seed, trials) = match self.mode {
            Mode::Symbolic => ("symbolic", None, None),
            Mode::Specialized { seed, trials } => ("random", Some(seed), Some(trials)),
        };
        ConfigJson {
            algebra: self.algebra.name(),
            suites,
            nmax: self.nmax,
            mode,
            seed,
            trials,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
struct ConfigJson {
    algebra: &'static str,
    suites: Vec<&'static str>,
    nmax: u32,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trials: Option<u32>,
}

/// What a passing check means.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// The identity holds on every input.
    Identity,
    /// A claim stated as an identity that is expected not to hold; passes
    /// when a nonzero residual is found.
    Refutation,
    /// A deliberately perturbed identity; passes when a nonzero residual is
    /// found.
    Control,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first input on which a claimed identity did not hold.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<LaurentJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub kind: CheckKind,
    pub status: Status,
    /// Inputs on which the claim was evaluated and held.
    pub items: usize,
    /// Whether the claimed identity held on every input.
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<u64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    config: ConfigJson,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
}

impl RunReport {
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    /// Adds per-check elapsed milliseconds to the JSON output.
    pub fn with_timings(mut self) -> Self {
        for c in &mut self.checks {
            c.ms = Some(c.elapsed.as_millis() as u64);
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn get(&self, id: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// A seeded sample point with `s` outside `{0, 1, -1}` and `a, b, c` nonzero.
/// Numerators and denominators are bounded by 1000.
pub fn sample_point(seed: u64, trial: u64) -> Point {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let mut draw = |forbidden: &[i64]| loop {
        let num: i64 = rng.gen_range(-1000..=1000);
        let den: i64 = rng.gen_range(1..=1000);
        let r = Rat::new(num, den).expect("denominator is positive");
        if !forbidden.iter().any(|&f| r == Rat::from_int(f)) {
            return r;
        }
    };
    let s = draw(&[0, 1, -1]);
    let a = draw(&[0]);
    let b = draw(&[0]);
    let c = draw(&[0]);
    Point { s, a, b, c }
}

/// Accumulates the outcome of one check across its inputs.
#[derive(Default)]
pub(crate) struct Tally {
    items: usize,
    failure: Option<Witness>,
    point: Option<String>,
}

impl Tally {
    /// True once a nonzero residual or an error has been seen.
    pub(crate) fn done(&self) -> bool {
        self.failure.is_some()
    }

    pub(crate) fn record<F: Field, E: fmt::Display>(
        &mut self,
        input: impl FnOnce() -> String,
        residual: Result<LaurentPoly<F>, E>,
    ) {
        match residual {
            Ok(r) if r.is_zero() => self.items += 1,
            Ok(r) => {
                self.failure = Some(Witness {
                    input: input(),
                    point: self.point.clone(),
                    residual: Some(r.to_json()),
                    error: None,
                })
            }
            Err(e) => {
                self.failure = Some(Witness {
                    input: input(),
                    point: self.point.clone(),
                    residual: None,
                    error: Some(e.to_string()),
                })
            }
        }
    }
}

pub(crate) type Probe<'a> = Box<dyn Fn(&mut Tally) + Send + Sync + 'a>;

/// One check as built for one evaluation context.
pub(crate) struct Check<'a> {
    pub id: String,
    pub kind: CheckKind,
    pub window: Option<String>,
    pub note: Option<String>,
    pub probe: Probe<'a>,
}

impl<'a> Check<'a> {
    pub fn new(id: String, kind: CheckKind, probe: Probe<'a>) -> Self {
        Check {
            id,
            kind,
            window: None,
            note: None,
            probe,
        }
    }

    pub fn window(mut self, w: impl Into<String>) -> Self {
        self.window = Some(w.into());
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.note = Some(n.into());
        self
    }
}

/// Everything a suite needs at one parameter point.
pub(crate) struct Ctx<F: Field> {
    pub algebra: AlgebraId,
    pub params: Params<F>,
    pub rep: Representation<F>,
    pub family: FamilyCache<F>,
    pub label: Option<String>,
}

impl<F: Field> Ctx<F> {
    fn new(algebra: AlgebraId, params: &Params<F>, label: Option<String>) -> Self {
        let params = algebra.restrict(params);
        Ctx {
            algebra,
            rep: Representation::new(algebra, &params),
            family: FamilyCache::new(Family::new(algebra.family(), params.clone())),
            params,
            label,
        }
    }

    /// A word or relation written in text, with coefficients at this point.
    pub fn expr(&self, text: &str) -> NCExpression<F> {
        let parsed: NCExpression<ParamRat> = text
            .parse()
            .unwrap_or_else(|e| panic!("built-in expression {text:?} does not parse: {e}"));
        parsed
            .at(&self.params)
            .unwrap_or_else(|e| panic!("built-in expression {text:?} is singular: {e}"))
    }
}

fn point_label(p: &Point) -> String {
    p.to_string()
}

/// Runs every check of every selected suite. Reports are sorted by id and are
/// identical for identical configurations.
pub fn run_suite(cfg: &CheckConfig) -> Result<Vec<CheckReport>, VerifyError> {
    Ok(run(cfg)?.checks)
}

/// Like [`run_suite`], wrapped with the configuration and a summary.
pub fn run(cfg: &CheckConfig) -> Result<RunReport, VerifyError> {
    cfg.validate()?;
    let n = cfg.nmax as i64;
    let symbolic = Ctx::new(cfg.algebra, &Params::symbolic(), None);
    let points: Vec<Ctx<Rat>> = match cfg.mode {
        Mode::Symbolic => Vec::new(),
        Mode::Specialized { seed, trials } => (0..trials as u64)
            .map(|t| {
                let params = cfg.algebra.restrict(&Params::at(&sample_point(seed, t)));
                let label = point_label(&Point {
                    s: params.s.clone(),
                    a: params.a.clone(),
                    b: params.b.clone(),
                    c: params.c.clone(),
                });
                Ctx::new(cfg.algebra, &params, Some(label))
            })
            .collect(),
    };

    let mut grouped: BTreeMap<String, Vec<Check<'_>>> = BTreeMap::new();
    let mut suites = cfg.suites.clone();
    suites.sort_unstable();
    suites.dedup();
    for suite in suites {
        let checks: Vec<Check<'_>> = if points.is_empty() || suite == Suite::Dagger {
            suites::build(suite, &symbolic, n)
        } else {
            points.iter().flat_map(|ctx| suites::build(suite, ctx, n)).collect()
        };
        for c in checks {
            grouped.entry(c.id.clone()).or_default().push(c);
        }
    }

    let labels: Vec<Option<String>> = if points.is_empty() {
        vec![None]
    } else {
        points.iter().map(|c| c.label.clone()).collect()
    };
    let jobs: Vec<(String, Vec<Check<'_>>)> = grouped.into_iter().collect();
    let mut checks: Vec<CheckReport> = jobs
        .into_par_iter()
        .map(|(id, variants)| run_check(id, variants, &labels))
        .collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let pass = checks.iter().filter(|c| c.status == Status::Pass).count();
    Ok(RunReport {
        config: cfg.to_json(),
        summary: Summary {
            pass,
            fail: checks.len() - pass,
        },
        checks,
    })
}

fn run_check(id: String, variants: Vec<Check<'_>>, labels: &[Option<String>]) -> CheckReport {
    let start = Instant::now();
    let mut tally = Tally::default();
    let single = variants.len() == 1;
    for (i, check) in variants.iter().enumerate() {
        tally.point = if single && labels.len() > 1 {
            None
        } else {
            labels.get(i).cloned().flatten()
        };
        (check.probe)(&mut tally);
        if tally.done() {
            break;
        }
    }
    let first = &variants[0];
    let holds = tally.failure.is_none();
    let status = match (first.kind, holds) {
        (CheckKind::Identity, true) | (CheckKind::Refutation | CheckKind::Control, false) => Status::Pass,
        _ => Status::Fail,
    };
    CheckReport {
        id,
        kind: first.kind,
        status,
        items: tally.items,
        holds,
        window: first.window.clone(),
        note: first.note.clone(),
        witness: tally.failure,
        ms: None,
        elapsed: start.elapsed(),
    }
}

/// Evaluates a relation given as text on `z^k`, `|k| <= nmax`, as a single
/// identity check. Used for ad hoc relations and perturbed controls.
pub fn check_relation(
    algebra: AlgebraId,
    text: &str,
    nmax: u32,
    mode: Mode,
) -> Result<CheckReport, VerifyError> {
    let parsed: NCExpression<ParamRat> = text.parse()?;
    let n = nmax as i64;
    let id = format!("relation/{algebra}/{text}");
    let report = match mode {
        Mode::Symbolic => {
            let ctx = Ctx::new(algebra, &Params::symbolic(), None);
            let expr = parsed.at(&ctx.params)?;
            let check = suites::relation_check(&ctx, id.clone(), CheckKind::Identity, expr, n);
            run_check(id, vec![check], &[None])
        }
        Mode::Specialized { seed, trials } => {
            let ctxs: Vec<Ctx<Rat>> = (0..trials as u64)
                .map(|t| {
                    let p = sample_point(seed, t);
                    Ctx::new(algebra, &Params::at(&p), Some(point_label(&p)))
                })
                .collect();
            let labels: Vec<Option<String>> = ctxs.iter().map(|c| c.label.clone()).collect();
            let mut checks = Vec::new();
            for ctx in &ctxs {
                let expr = parsed.at(&ctx.params)?;
                checks.push(suites::relation_check(ctx, id.clone(), CheckKind::Identity, expr, n));
            }
            run_check(id, checks, &labels)
        }
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_points_are_generic_and_reproducible() {
        for t in 0..20 {
            let p = sample_point(7, t);
            assert_ne!(p.s, Rat::zero());
            assert_ne!(p.s, Rat::one());
            assert_ne!(p.s, Rat::from_int(-1));
            assert!(!p.a.is_zero() && !p.b.is_zero() && !p.c.is_zero());
            assert_eq!(p, sample_point(7, t));
        }
        assert_ne!(sample_point(7, 0), sample_point(7, 1));
        assert_ne!(sample_point(7, 0), sample_point(8, 0));
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let bad = CheckConfig::symbolic(AlgebraId::IIID7, Suite::Bz, 2);
        assert!(matches!(run(&bad), Err(VerifyError::InvalidConfig(_))));
        let zero = CheckConfig::symbolic(AlgebraId::V, Suite::Relations, 0);
        assert!(matches!(run(&zero), Err(VerifyError::InvalidConfig(_))));
        let no_trials = CheckConfig::new(
            AlgebraId::V,
            vec![Suite::Relations],
            2,
            Mode::Specialized { seed: 1, trials: 0 },
        );
        assert!(matches!(run(&no_trials), Err(VerifyError::InvalidConfig(_))));
    }

    #[test]
    fn perturbed_relation_fails_with_witness() {
        let r = check_relation(AlgebraId::V, "q*T0*Xi + (c + 1) - X*(T0 + 1)", 2, Mode::Symbolic).unwrap();
        assert_eq!(r.status, Status::Fail);
        let w = r.witness.unwrap();
        assert!(!w.residual.unwrap().terms.is_empty());
        let ok = check_relation(AlgebraId::V, "q*T0*Xi + c - X*(T0 + 1)", 2, Mode::Symbolic).unwrap();
        assert_eq!(ok.status, Status::Pass);
        assert_eq!(ok.items, 5);
    }
}
