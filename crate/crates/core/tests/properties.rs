use confluent::expr::parse_laurent;
use confluent::laurent::LaurentJson;
use confluent::{
    Direction, Field, LaurentPoly, Monomial, ParamPoly, ParamRat, Point, Rat, Substitution,
};
use malachite::Integer;
use proptest::prelude::*;

fn param_poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec((prop::array::uniform4(0u16..3), -3i64..=3), 0..4).prop_map(|terms| {
        ParamPoly::from_terms(
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(e), Integer::from(c))),
        )
    })
}

fn param_rat() -> impl Strategy<Value = ParamRat> {
    (param_poly(), param_poly()).prop_filter_map("zero denominator", |(n, d)| {
        ParamRat::new(n, d.add(&ParamPoly::one())).ok()
    })
}

fn rat() -> impl Strategy<Value = Rat> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

fn laurent<S: Strategy>(coeff: S) -> impl Strategy<Value = LaurentPoly<S::Value>>
where
    S::Value: Field,
{
    prop::collection::vec((-4i64..=4, coeff), 0..5).prop_map(LaurentPoly::from_terms)
}

fn point() -> impl Strategy<Value = Point> {
    (rat(), rat(), rat(), rat())
        .prop_filter("s must be nonzero", |(s, ..)| !s.is_zero())
        .prop_map(|(s, a, b, c)| Point { s, a, b, c })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn param_rat_field_axioms(x in param_rat(), y in param_rat(), z in param_rat()) {
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert!(x.sub(&x).is_zero());
        if !x.is_zero() {
            prop_assert!(x.mul(&x.inv().unwrap()).is_one());
            prop_assert_eq!(y.mul(&x).div(&x).unwrap(), y);
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(x in param_rat(), y in param_rat(), p in point()) {
        if let (Ok(ex), Ok(ey)) = (x.evaluate(&p), y.evaluate(&p)) {
            prop_assert_eq!(x.mul(&y).evaluate(&p).unwrap(), ex.times(&ey));
            prop_assert_eq!(x.add(&y).evaluate(&p).unwrap(), ex.plus(&ey));
        }
    }

    #[test]
    fn param_rat_text_round_trip(x in param_rat()) {
        let back: ParamRat = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn exact_division_inverts_multiplication(f in laurent(rat()), g in laurent(rat())) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!(f.mul(&g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn exact_division_over_parameters(f in laurent(param_rat()), g in laurent(param_rat())) {
        prop_assume!(!g.is_zero() && g.len() <= 2);
        prop_assert_eq!(f.mul(&g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn laurent_ring_axioms(f in laurent(rat()), g in laurent(rat()), h in laurent(rat())) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn reflections_are_involutions(f in laurent(param_rat())) {
        let inv = Substitution::inversion();
        prop_assert_eq!(f.substitute(&inv).unwrap().substitute(&inv).unwrap(), f.clone());
        let q_over_z = Substitution::new(ParamRat::q_pow(1), Direction::Invert).unwrap();
        prop_assert_eq!(f.substitute(&q_over_z).unwrap().substitute(&q_over_z).unwrap(), f.clone());
        let scale = Substitution::new(ParamRat::var(confluent::Param::A), Direction::Keep).unwrap();
        let unscale = Substitution::new(ParamRat::var(confluent::Param::A).inv().unwrap(), Direction::Keep).unwrap();
        prop_assert_eq!(f.substitute(&scale).unwrap().substitute(&unscale).unwrap(), f);
    }

    #[test]
    fn substitution_is_multiplicative(f in laurent(rat()), g in laurent(rat()), u in rat()) {
        prop_assume!(!u.is_zero());
        let sub = Substitution::new(u, Direction::Invert).unwrap();
        prop_assert_eq!(
            f.mul(&g).substitute(&sub).unwrap(),
            f.substitute(&sub).unwrap().mul(&g.substitute(&sub).unwrap())
        );
    }

    #[test]
    fn laurent_text_and_json_round_trip(f in laurent(param_rat())) {
        prop_assert_eq!(parse_laurent(&f.to_string()).unwrap(), f.clone());
        let json = serde_json::to_string(&f.to_json()).unwrap();
        let parsed: LaurentJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(parse_laurent(&json).unwrap(), f.clone());
        prop_assert_eq!(parsed.terms.len(), f.len());
    }
}
