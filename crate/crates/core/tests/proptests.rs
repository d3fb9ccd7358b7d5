use proptest::prelude::*;

use lens_surgery::decider::decide_b;
use lens_surgery::exact::scalar::int;
use lens_surgery::exact::text::{parse_bilaurent, parse_laurent};
use lens_surgery::exact::{resultant, BiLaurentPoly, LaurentPoly, Modulus, Residue};
use lens_surgery::symlaurent::{sym_reduce, value_seq_equal, SymPoly};
use lens_surgery::torsion::{dnorm, franz_equal, lens_equivalent};

fn laurent(lo: i64, max_len: usize) -> impl Strategy<Value = LaurentPoly> {
    (lo..=0, prop::collection::vec(-5i64..=5, 1..=max_len))
        .prop_map(|(shift, cs)| LaurentPoly::from_ints(&cs).shift(shift))
}

fn nonzero(p: impl Strategy<Value = LaurentPoly>) -> impl Strategy<Value = LaurentPoly> {
    p.prop_filter("nonzero", |p| !p.is_zero())
}

fn bilaurent() -> impl Strategy<Value = BiLaurentPoly> {
    prop::collection::vec(((-4i64..=4, -4i64..=4), -5i64..=5), 0..8)
        .prop_map(|ts| BiLaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, int(c)))))
}

fn sym(max_idx: u64) -> impl Strategy<Value = SymPoly> {
    (-5i64..=5, prop::collection::vec((1..=max_idx, -5i64..=5), 0..6)).prop_map(|(a0, ts)| SymPoly::from_ints(a0, &ts))
}

fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

proptest! {
    #[test]
    fn normalize_unit_ignores_units(p in nonzero(laurent(-4, 6)), k in -6i64..=6, neg in any::<bool>()) {
        let u = if neg { -&p.shift(k) } else { p.shift(k) };
        prop_assert_eq!(u.normalize_unit().unwrap(), p.normalize_unit().unwrap());
        prop_assert!(u.unit_equivalent(&p));
    }

    #[test]
    fn laurent_text_round_trip(p in laurent(-4, 7)) {
        prop_assert_eq!(parse_laurent(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn bilaurent_text_round_trip(p in bilaurent()) {
        prop_assert_eq!(parse_bilaurent(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn resultant_is_multiplicative(f in nonzero(laurent(0, 5)), g in nonzero(laurent(0, 4)), h in nonzero(laurent(0, 4))) {
        let lhs = resultant(&f, &(&g * &h)).unwrap();
        prop_assert_eq!(lhs, resultant(&f, &g).unwrap() * resultant(&f, &h).unwrap());
    }

    #[test]
    fn residue_inverse(p in laurent(-3, 6), d in 2u64..=30) {
        let x = Residue::new(&p, Modulus::Cyclotomic(d)).unwrap();
        match x.inverse() {
            Ok(inv) => prop_assert!((&x * &inv).is_one()),
            Err(_) => prop_assert!(x.is_zero()),
        }
    }

    #[test]
    fn automorphism_is_multiplicative(p in laurent(-3, 6), q in laurent(-3, 6), n in 3u64..=24, k in 1i64..24) {
        prop_assume!(gcd(k, n as i64) == 1);
        let m = Modulus::AugCycle(n);
        let (x, y) = (Residue::new(&p, m).unwrap(), Residue::new(&q, m).unwrap());
        let lhs = (&x * &y).automorphism(k).unwrap();
        prop_assert_eq!(lhs, &x.automorphism(k).unwrap() * &y.automorphism(k).unwrap());
    }

    #[test]
    fn dnorm_is_multiplicative(x in laurent(-3, 5), y in laurent(-3, 5), d in 1u64..=24) {
        let lhs = dnorm(&(&x * &y), d).unwrap();
        prop_assert_eq!(lhs, dnorm(&x, d).unwrap() * dnorm(&y, d).unwrap());
    }

    #[test]
    fn sym_reduce_keeps_values(f in sym(40), n in 1u64..=40) {
        let r = sym_reduce(&f, n);
        prop_assert!(r.max_index() <= n / 2);
        prop_assert_eq!(r.at_one(), f.at_one());
        if n >= 2 {
            prop_assert!(value_seq_equal(&f, &r, n).unwrap());
        }
    }

    #[test]
    fn lens_equivalence_is_an_equivalence(p in 2i64..=40, a in 1i64..40, b in 1i64..40, c in 1i64..40, oriented in any::<bool>()) {
        prop_assume!(gcd(a, p) == 1 && gcd(b, p) == 1 && gcd(c, p) == 1);
        let eq = |x, y| lens_equivalent(p, x, y, oriented).unwrap();
        prop_assert!(eq(a, a));
        prop_assert_eq!(eq(a, b), eq(b, a));
        if eq(a, b) && eq(b, c) {
            prop_assert!(eq(a, c));
        }
        if oriented && eq(a, b) {
            prop_assert!(lens_equivalent(p, a, b, false).unwrap());
        }
    }

    #[test]
    fn franz_respects_sign_and_order(p in 2i64..=30, mut a in prop::collection::vec(1i64..60, 1..5), flips in prop::collection::vec(any::<bool>(), 5)) {
        prop_assume!(a.iter().all(|&x| gcd(x, p) == 1));
        let b: Vec<i64> = a.iter().zip(&flips).map(|(&x, &f)| if f { -x + 3 * p } else { x }).rev().collect();
        prop_assert!(franz_equal(&a, &b, p).unwrap());
        a.push(1);
        let mut b2 = b.clone();
        b2.push(p - 1);
        prop_assert!(franz_equal(&a, &b2, p).unwrap());
    }

    #[test]
    fn decide_b_matches_closed_form(p in 2i64..=12, q in 1i64..=9, alpha in -200i64..=200, beta in 1i64..=5) {
        prop_assume!(gcd(p, q) == 1 && gcd(alpha, beta) == 1);
        let v = decide_b(p, q, alpha, beta).unwrap();
        prop_assert_eq!(v.is_lens(), (alpha - p * q * beta).abs() == 1);
    }
}
