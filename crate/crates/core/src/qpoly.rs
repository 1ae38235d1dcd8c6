//! The symmetric q-polynomial families, their dagger companions and the
//! non-symmetric polynomials `E_n` built from them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{ArithmeticError, FamilyError};
use crate::field::{Field, Params};
use crate::laurent::{Direction, LaurentPoly, Substitution};
use crate::param::{Param, ParamRat};

/// `(x; q)_n`.
pub fn qpoch<F: Field>(x: &F, q: &F, n: usize) -> F {
    let mut acc = F::one();
    let mut xq = x.clone();
    for _ in 0..n {
        acc = acc.times(&F::one().minus(&xq));
        xq = xq.times(q);
    }
    acc
}

/// Row `n` of the Gaussian binomials `[n, k]_q`, `k = 0..=n`.
pub fn gaussian_row<F: Field>(n: usize, q: &F) -> Vec<F> {
    let mut row = vec![F::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(F::one());
        let mut qk = q.clone();
        for k in 1..m {
            next.push(row[k - 1].plus(&qk.times(&row[k])));
            qk = qk.times(q);
        }
        next.push(F::one());
        row = next;
    }
    row
}

/// `(q^-n; q)_k / (q; q)_k` for `k = 0..=n`, written as
/// `(-1)^k q^(k(k-1)/2 - nk) [n, k]_q`.
fn lowering_ratios<F: Field>(n: usize, q: &F) -> Result<Vec<F>, ArithmeticError> {
    let row = gaussian_row(n, q);
    let n = n as i64;
    row.into_iter()
        .enumerate()
        .map(|(k, g)| {
            let k = k as i64;
            let sign = if k % 2 == 0 { F::one() } else { F::one().negate() };
            Ok(sign.times(&q.pow_i(k * (k - 1) / 2 - n * k)?).times(&g))
        })
        .collect()
}

/// The terminating balanced sum
/// `(d_1, ..., d_r; q)_n / a^n * 3phi2(q^-n, az, a/z; d_1, ..., d_r; q, q)`.
fn askey_sum<F: Field>(n: usize, a: &F, q: &F, lower: &[F]) -> Result<LaurentPoly<F>, ArithmeticError> {
    let ratios = lowering_ratios(n, q)?;
    let a_inv_n = a.pow_i(-(n as i64))?;
    let mut out = LaurentPoly::zero();
    let mut pair = LaurentPoly::one();
    let mut aq = a.clone();
    let mut qk = F::one();
    for (k, ratio) in ratios.iter().enumerate() {
        let mut coeff = ratio.times(&qk).times(&a_inv_n);
        for d in lower {
            coeff = coeff.times(&qpoch(&d.times(&qk), q, n - k));
        }
        out = out.add(&pair.scale(&coeff));
        if k < n {
            // (1 - a q^k z)(1 - a q^k / z)
            let step = LaurentPoly::from_terms([
                (-1, aq.negate()),
                (0, F::one().plus(&aq.times(&aq))),
                (1, aq.negate()),
            ]);
            pair = pair.mul(&step);
            aq = aq.times(q);
            qk = qk.times(q);
        }
    }
    Ok(out)
}

/// `z^n 2phi0(q^-n, az; -; q, q^n z^-2)` with the balancing factor
/// `(-1)^k q^(-k(k-1)/2)`.
fn hermite_sum<F: Field>(n: usize, a: &F, q: &F) -> Result<LaurentPoly<F>, ArithmeticError> {
    let ratios = lowering_ratios(n, q)?;
    let qn = q.pow_i(n as i64)?;
    let mut out = LaurentPoly::zero();
    let mut poch = LaurentPoly::one();
    let mut aq = a.clone();
    let mut arg = F::one();
    for (k, ratio) in ratios.iter().enumerate() {
        let ki = k as i64;
        let sign = if k % 2 == 0 { F::one() } else { F::one().negate() };
        let balance = sign.times(&q.pow_i(-ki * (ki - 1) / 2)?);
        let coeff = ratio.times(&arg).times(&balance);
        out = out.add(&poch.shift(n as i64 - 2 * ki).scale(&coeff));
        if k < n {
            poch = poch.mul(&LaurentPoly::from_terms([(0, F::one()), (1, aq.negate())]));
            aq = aq.times(q);
            arg = arg.times(&qn);
        }
    }
    Ok(out)
}

/// `sum_k [n, k]_q z^(n - 2k)`.
fn rogers_sum<F: Field>(n: usize, q: &F) -> LaurentPoly<F> {
    LaurentPoly::from_terms(
        gaussian_row(n, q)
            .into_iter()
            .enumerate()
            .map(|(k, g)| (n as i64 - 2 * k as i64, g)),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    DualQHahn,
    AlSalamChihara,
    BigQHermite,
    QHermite,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::DualQHahn,
        FamilyKind::AlSalamChihara,
        FamilyKind::BigQHermite,
        FamilyKind::QHermite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::DualQHahn => "dual-q-hahn",
            FamilyKind::AlSalamChihara => "al-salam-chihara",
            FamilyKind::BigQHermite => "big-q-hermite",
            FamilyKind::QHermite => "q-hermite",
        }
    }

    /// Parameters the family depends on.
    pub fn params(self) -> &'static [Param] {
        match self {
            FamilyKind::DualQHahn => &[Param::A, Param::B, Param::C],
            FamilyKind::AlSalamChihara => &[Param::A, Param::B],
            FamilyKind::BigQHermite => &[Param::A],
            FamilyKind::QHermite => &[],
        }
    }

    /// The next family down the confluence chain and the parameter sent to 0.
    pub fn limit(self) -> Option<(FamilyKind, Param)> {
        match self {
            FamilyKind::DualQHahn => Some((FamilyKind::AlSalamChihara, Param::C)),
            FamilyKind::AlSalamChihara => Some((FamilyKind::BigQHermite, Param::B)),
            FamilyKind::BigQHermite => Some((FamilyKind::QHermite, Param::A)),
            FamilyKind::QHermite => None,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// A family with concrete parameter values. Parameters the family does not
/// depend on are held at zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Family<F> {
    kind: FamilyKind,
    params: Params<F>,
}

impl Family<ParamRat> {
    /// The family over the generic symbols.
    pub fn symbolic(kind: FamilyKind) -> Self {
        Family::new(kind, Params::symbolic())
    }
}

impl<F: Field> Family<F> {
    pub fn new(kind: FamilyKind, params: Params<F>) -> Self {
        let mut params = params;
        for p in [Param::A, Param::B, Param::C] {
            if !kind.params().contains(&p) {
                params = params.with(p, F::zero());
            }
        }
        Family { kind, params }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn params(&self) -> &Params<F> {
        &self.params
    }

    /// The same formulas with some parameters set to zero.
    pub fn specialize(&self, zeros: &[Param]) -> Self {
        let mut params = self.params.clone();
        for &p in zeros {
            params = params.with(p, F::zero());
        }
        Family {
            kind: self.kind,
            params,
        }
    }

    fn sym_at(&self, n: usize, p: &Params<F>) -> Result<LaurentPoly<F>, ArithmeticError> {
        let q = p.q();
        match self.kind {
            FamilyKind::DualQHahn => {
                askey_sum(n, &p.a, &q, &[p.a.times(&p.b), p.a.times(&p.c)])
            }
            FamilyKind::AlSalamChihara => askey_sum(n, &p.a, &q, &[p.a.times(&p.b), F::zero()]),
            FamilyKind::BigQHermite => hermite_sum(n, &p.a, &q),
            FamilyKind::QHermite => Ok(rogers_sum(n, &q)),
        }
    }

    /// The symmetric polynomial of degree `n`.
    pub fn sym_poly(&self, n: usize) -> Result<LaurentPoly<F>, FamilyError> {
        Ok(self.sym_at(n, &self.params)?)
    }

    /// The dagger companion of degree `n >= 1`: `s^(n-1) w(z) P_(n-1)(z/s)`
    /// with the parameters scaled by `s`, where `w = z - c` for dual q-Hahn and
    /// `w = z` otherwise.
    pub fn dagger_poly(&self, n: i64) -> Result<LaurentPoly<F>, FamilyError> {
        if n < 1 {
            return Err(FamilyError::InvalidIndex(n));
        }
        let p = &self.params;
        let s = &p.s;
        let scaled = Params {
            s: s.clone(),
            a: s.times(&p.a),
            b: s.times(&p.b),
            c: s.times(&p.c),
        };
        let inner = self
            .sym_at(n as usize - 1, &scaled)?
            .substitute(&Substitution::new(s.pow_i(-1)?, Direction::Keep)?)?;
        let weight = match self.kind {
            FamilyKind::DualQHahn => LaurentPoly::from_terms([(1, F::one()), (0, p.c.negate())]),
            _ => LaurentPoly::z_pow(1),
        };
        let out = inner.mul(&weight).scale(&s.pow_i(n - 1)?);
        if let Some((k, c)) = out.terms().find(|(_, c)| !c.is_integral_in_q()) {
            return Err(FamilyError::HalfPowerResidue {
                exponent: k,
                coeff: c.to_string(),
            });
        }
        Ok(out)
    }

    /// `E_idx`: `E_0 = 1`, `E_-n = P_n - dagger_n`,
    /// `E_n = q^n P_n + (1 - q^n) dagger_n`.
    pub fn nonsym_poly(&self, idx: i64) -> Result<LaurentPoly<F>, FamilyError> {
        if idx == 0 {
            return Ok(LaurentPoly::one());
        }
        let n = idx.abs();
        let sym = self.sym_poly(n as usize)?;
        let dagger = self.dagger_poly(n)?;
        Ok(combine(idx, &self.params.q_pow(n)?, &sym, &dagger))
    }

    /// Extreme coefficients of `E_idx` at its nominal window.
    pub fn leading_data(&self, idx: i64) -> Result<LeadingData<F>, FamilyError> {
        leading_of(idx, &self.nonsym_poly(idx)?)
    }
}

fn combine<F: Field>(idx: i64, qn: &F, sym: &LaurentPoly<F>, dagger: &LaurentPoly<F>) -> LaurentPoly<F> {
    if idx < 0 {
        sym.sub(dagger)
    } else {
        sym.scale(qn).add(&dagger.scale(&F::one().minus(qn)))
    }
}

/// The window `[low, high]` that `E_idx` occupies: `[-n, n - 1]` for
/// `E_-n`, `[-n, n]` for `E_n`.
pub fn nominal_window(idx: i64) -> (i64, i64) {
    if idx < 0 {
        (idx, -idx - 1)
    } else {
        (-idx, idx)
    }
}

/// Coefficients at both ends of the nominal window.
#[derive(Clone, Debug, PartialEq)]
pub struct LeadingData<F> {
    pub index: i64,
    pub low_exp: i64,
    pub low_coeff: F,
    pub high_exp: i64,
    pub high_coeff: F,
}

/// Leading data of any polynomial expected to live in the window of `E_idx`.
pub fn leading_of<F: Field>(idx: i64, f: &LaurentPoly<F>) -> Result<LeadingData<F>, FamilyError> {
    let (low, high) = nominal_window(idx);
    if f.terms().any(|(k, _)| k < low || k > high) {
        return Err(FamilyError::SupportOutsideWindow {
            index: idx,
            low,
            high,
        });
    }
    Ok(LeadingData {
        index: idx,
        low_exp: low,
        low_coeff: f.coeff(low),
        high_exp: high,
        high_coeff: f.coeff(high),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Slot {
    Sym(i64),
    Dagger(i64),
    NonSym(i64),
}

type Entry<F> = Arc<OnceLock<Result<Arc<LaurentPoly<F>>, FamilyError>>>;

/// A memo table for one family, shareable between threads. Each entry is
/// computed once; concurrent requests for the same entry wait for it.
pub struct FamilyCache<F> {
    family: Family<F>,
    entries: Mutex<HashMap<Slot, Entry<F>>>,
}

impl<F: Field> FamilyCache<F> {
    pub fn new(family: Family<F>) -> Self {
        FamilyCache {
            family,
            entries: Mutex::new(HashMap::new()),
        }
    }

    pub fn family(&self) -> &Family<F> {
        &self.family
    }

    fn slot(
        &self,
        slot: Slot,
        compute: impl FnOnce() -> Result<LaurentPoly<F>, FamilyError>,
    ) -> Result<Arc<LaurentPoly<F>>, FamilyError> {
        let entry = {
            let mut map = self.entries.lock().unwrap_or_else(|e| e.into_inner());
            map.entry(slot).or_default().clone()
        };
        entry.get_or_init(|| compute().map(Arc::new)).clone()
    }

    pub fn sym_poly(&self, n: i64) -> Result<Arc<LaurentPoly<F>>, FamilyError> {
        if n < 0 {
            return Err(FamilyError::InvalidIndex(n));
        }
        self.slot(Slot::Sym(n), || self.family.sym_poly(n as usize))
    }

    pub fn dagger_poly(&self, n: i64) -> Result<Arc<LaurentPoly<F>>, FamilyError> {
        self.slot(Slot::Dagger(n), || self.family.dagger_poly(n))
    }

    pub fn nonsym_poly(&self, idx: i64) -> Result<Arc<LaurentPoly<F>>, FamilyError> {
        self.slot(Slot::NonSym(idx), || {
            if idx == 0 {
                return Ok(LaurentPoly::one());
            }
            let n = idx.abs();
            let sym = self.sym_poly(n)?;
            let dagger = self.dagger_poly(n)?;
            Ok(combine(idx, &self.family.params.q_pow(n)?, &sym, &dagger))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_laurent;

    fn lp(text: &str) -> LaurentPoly<ParamRat> {
        parse_laurent(text).unwrap()
    }

    #[test]
    fn pochhammer_and_gaussian() {
        let q = ParamRat::q_pow(1);
        let ab: ParamRat = "a*b".parse().unwrap();
        assert_eq!(qpoch(&ab, &q, 0), ParamRat::one());
        assert_eq!(qpoch(&ab, &q, 2), "(1 - a*b)*(1 - a*b*q)".parse().unwrap());
        let row = gaussian_row(3, &q);
        assert_eq!(row[1], "1 + q + q^2".parse().unwrap());
        assert_eq!(row[3], ParamRat::one());
    }

    #[test]
    fn first_members() {
        let dqh = Family::symbolic(FamilyKind::DualQHahn);
        assert_eq!(dqh.sym_poly(1).unwrap(), lp("z + z^-1 + a*b*c - a - b - c"));
        assert_eq!(dqh.sym_poly(0).unwrap(), lp("1"));
        let asc = Family::symbolic(FamilyKind::AlSalamChihara);
        assert_eq!(asc.sym_poly(1).unwrap(), lp("z + z^-1 - a - b"));
        let bqh = Family::symbolic(FamilyKind::BigQHermite);
        assert_eq!(bqh.sym_poly(1).unwrap(), lp("z + z^-1 - a"));
        assert_eq!(bqh.sym_poly(0).unwrap(), lp("1"));
    }

    #[test]
    fn daggers() {
        let dqh = Family::symbolic(FamilyKind::DualQHahn);
        assert_eq!(dqh.dagger_poly(1).unwrap(), lp("z - c"));
        assert_eq!(
            dqh.dagger_poly(2).unwrap(),
            lp("(z - c)*(z + q/z + q^2*a*b*c - q*(a + b + c))")
        );
        let asc = Family::symbolic(FamilyKind::AlSalamChihara);
        assert_eq!(asc.dagger_poly(1).unwrap(), lp("z"));
        assert!(matches!(dqh.dagger_poly(0), Err(FamilyError::InvalidIndex(0))));
    }

    #[test]
    fn nonsymmetric_members() {
        let dqh = Family::symbolic(FamilyKind::DualQHahn);
        assert_eq!(dqh.nonsym_poly(-1).unwrap(), lp("z^-1 + a*b*c - a - b"));
        assert_eq!(
            dqh.nonsym_poly(1).unwrap(),
            lp("z + q*z^-1 + q*a*b*c - q*a - q*b - c")
        );
        let bqh = Family::symbolic(FamilyKind::BigQHermite);
        assert_eq!(bqh.nonsym_poly(1).unwrap(), lp("z + q*z^-1 - q*a"));
        for kind in FamilyKind::ALL {
            assert_eq!(Family::symbolic(kind).nonsym_poly(0).unwrap(), lp("1"));
        }
    }

    #[test]
    fn leading_window() {
        let dqh = Family::symbolic(FamilyKind::DualQHahn);
        let d = dqh.leading_data(-2).unwrap();
        assert_eq!((d.low_exp, d.high_exp), (-2, 1));
        assert_eq!(d.low_coeff, ParamRat::one());
        assert_eq!(d.high_coeff, "q*a*b*c - a - b".parse().unwrap());
        let qh = Family::symbolic(FamilyKind::QHermite).leading_data(-2).unwrap();
        assert!(qh.high_coeff.is_zero());
        assert!(matches!(
            leading_of(-1, &lp("z^2")),
            Err(FamilyError::SupportOutsideWindow { .. })
        ));
    }

    #[test]
    fn cache_matches_direct() {
        let fam = Family::symbolic(FamilyKind::AlSalamChihara);
        let cache = FamilyCache::new(fam.clone());
        for idx in -3..=3 {
            assert_eq!(*cache.nonsym_poly(idx).unwrap(), fam.nonsym_poly(idx).unwrap());
        }
    }

    #[test]
    fn kinds_parse() {
        for k in FamilyKind::ALL {
            assert_eq!(k.name().parse::<FamilyKind>().unwrap(), k);
        }
        assert!("hahn".parse::<FamilyKind>().is_err());
    }
}
