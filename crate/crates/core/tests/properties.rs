mod common;

use common::{overpartition, same, series, truncation};
use proptest::prelude::*;
use qpair::durfee::k_conjugate;
use qpair::frobenius::{joichi_stanton, joichi_stanton_inverse, FrobeniusSymbol};
use qpair::overpartition::OverpartitionPair;
use qpair::partition::Partition;
use qpair::series::{geometric, GaussInt, Monomial, Specialization, TruncatedSeries, Var};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_commutative_and_associative(x in series(), y in series(), z in series()) {
        prop_assert_eq!(same(&(&x + &y), &(&y + &x)), Ok(()));
        prop_assert_eq!(same(&(&(&x + &y) + &z), &(&x + &(&y + &z))), Ok(()));
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn multiplication_is_a_ring_product(x in series(), y in series(), z in series()) {
        prop_assert_eq!(same(&(&x * &y), &(&y * &x)), Ok(()));
        prop_assert_eq!(same(&(&(&x * &y) * &z), &(&x * &(&y * &z))), Ok(()));
        prop_assert_eq!(same(&(&x * &(&y + &z)), &(&(&x * &y) + &(&x * &z))), Ok(()));
        prop_assert_eq!(same(&(&x * &TruncatedSeries::one(truncation())), &x), Ok(()));
    }

    #[test]
    fn geometric_series_inverts_one_minus(e in 1i64..4, re in -1i64..=1, im in -1i64..=1) {
        prop_assume!(re != 0 || im != 0);
        let m = Monomial::new(GaussInt::new(re, im), 0, 0, 1, e);
        let t = truncation();
        let one_minus = TruncatedSeries::polynomial([Monomial::q_pow(0), m.clone().neg()], t);
        prop_assert_eq!(same(&(&one_minus * &geometric(&m, t).unwrap()), &TruncatedSeries::one(t)), Ok(()));
    }

    #[test]
    fn specialization_is_a_homomorphism(x in series(), y in series(), shift in 0i64..2) {
        let spec = Specialization::new().set(Var::A, GaussInt::i(), shift).kill(Var::X);
        let (sx, sy) = (x.specialize(&spec).unwrap(), y.specialize(&spec).unwrap());
        let prod = (&x * &y).specialize(&spec).unwrap();
        prop_assert_eq!(same(&prod, &(&sx * &sy)), Ok(()));
        prop_assert_eq!(same(&(&x + &y).specialize(&spec).unwrap(), &(&sx + &sy)), Ok(()));
    }

    #[test]
    fn series_json_round_trips(x in series()) {
        let back = TruncatedSeries::from_json(&x.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), x.to_json());
        prop_assert_eq!(same(&back, &x), Ok(()));
    }

    #[test]
    fn joichi_stanton_round_trips(o in overpartition(9, true)) {
        let d = joichi_stanton(&o);
        prop_assert_eq!(d.weight(), o.weight());
        prop_assert_eq!(d.associated.len(), o.len());
        prop_assert!(d.marks.iter().all(|&m| (m as usize) < o.len()));
        prop_assert_eq!(joichi_stanton_inverse(&d).unwrap(), o);
    }

    #[test]
    fn conjugation_is_an_involution(parts in prop::collection::vec(1u32..10, 0..10)) {
        let p = Partition::from_unsorted(parts);
        prop_assert_eq!(p.conjugate().conjugate(), p.trimmed());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
        prop_assert_eq!(p.durfee_squares().reassemble(), p.trimmed());
    }

    #[test]
    fn k_conjugation_is_an_involution(top in overpartition(6, true), bottom in overpartition(6, true), k in 2u32..6) {
        let n = top.len().min(bottom.len());
        let cut = |o: &qpair::overpartition::Overpartition| {
            qpair::overpartition::Overpartition::new(o.parts()[o.len() - n..].to_vec()).unwrap()
        };
        let f = FrobeniusSymbol::new(cut(&top), cut(&bottom)).unwrap();
        let g = k_conjugate(&f, k);
        prop_assert_eq!(g.weight(), f.weight());
        prop_assert_eq!(k_conjugate(&g, k), f);
    }

    #[test]
    fn pair_json_round_trips(l in overpartition(8, false), m in overpartition(8, false)) {
        let p = OverpartitionPair::new(l, m).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<OverpartitionPair>(&text).unwrap(), p);
    }
}
