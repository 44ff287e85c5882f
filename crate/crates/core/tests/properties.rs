//! Shrinking property tests over random sequences and bases.

use std::cmp::Ordering;

use proptest::prelude::*;

use univoque::expansions::{greedy_expansion, is_parry_admissible, pi_beta_f64, BetaValue};
use univoque::thresholds::sharkovskii_cmp;
use univoque::trapezoid::{h_decode, h_encode, unimodal_cmp, Itinerary};
use univoque::words::{lex_cmp, mirror, mu, shift};
use univoque::{BinaryWord, PeriodicSeq, Rational};

fn seq() -> impl Strategy<Value = PeriodicSeq> {
    (
        prop::collection::vec(0u8..2, 0..6),
        prop::collection::vec(0u8..2, 1..10),
    )
        .prop_map(|(pre, per)| PeriodicSeq::new(BinaryWord::new(pre).unwrap(), BinaryWord::new(per).unwrap()).unwrap())
}

/// Enough digits to separate two distinct eventually periodic sequences.
fn horizon(a: &PeriodicSeq, b: &PeriodicSeq) -> usize {
    a.pre_len().max(b.pre_len()) + a.period_len() * b.period_len() + 1
}

fn prefix_cmp(a: &PeriodicSeq, b: &PeriodicSeq) -> Ordering {
    let n = horizon(a, b);
    a.prefix(n).bits().cmp(b.prefix(n).bits())
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn text_round_trip(s in seq()) {
        let back: PeriodicSeq = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn lex_order_matches_prefixes(a in seq(), b in seq()) {
        prop_assert_eq!(lex_cmp(&a, &b), prefix_cmp(&a, &b));
        prop_assert_eq!(lex_cmp(&a, &b) == Ordering::Equal, a == b);
    }

    #[test]
    fn mirror_reverses_order(a in seq(), b in seq()) {
        prop_assert_eq!(mirror(&mirror(&a)), a.clone());
        prop_assert_eq!(lex_cmp(&mirror(&a), &mirror(&b)), lex_cmp(&b, &a));
    }

    #[test]
    fn mu_is_strictly_monotone(a in seq(), b in seq()) {
        prop_assert_eq!(lex_cmp(&mu(&a), &mu(&b)), lex_cmp(&a, &b));
    }

    #[test]
    fn shift_drops_digits(s in seq(), j in 0usize..20) {
        let t = shift(&s, j);
        prop_assert_eq!(t.prefix(30), BinaryWord::new(s.prefix(30 + j).bits()[j..].to_vec()).unwrap());
    }

    #[test]
    fn h_is_an_order_isomorphism(a in seq(), b in seq()) {
        prop_assert_eq!(h_decode(&h_encode(&a)).unwrap(), a.clone());
        prop_assert_eq!(unimodal_cmp(&h_encode(&a), &h_encode(&b)), lex_cmp(&a, &b));
    }

    #[test]
    fn itinerary_text_round_trip(s in seq()) {
        let it = h_encode(&s);
        let back: Itinerary = it.to_string().parse().unwrap();
        prop_assert_eq!(back, it);
    }

    #[test]
    fn sharkovskii_is_a_strict_total_order(k in 1u64..200, l in 1u64..200, m in 1u64..200) {
        prop_assert_eq!(sharkovskii_cmp(k, l), sharkovskii_cmp(l, k).reverse());
        prop_assert_eq!(sharkovskii_cmp(k, l) == Ordering::Equal, k == l);
        if sharkovskii_cmp(k, l) == Ordering::Less && sharkovskii_cmp(l, m) == Ordering::Less {
            prop_assert_eq!(sharkovskii_cmp(k, m), Ordering::Less);
        }
    }

    #[test]
    fn greedy_digits_reconstruct_x(b in 1.05f64..1.95, num in 0u32..1000) {
        let beta = BetaValue::float(b).unwrap();
        let x = num as f64 / 1000.0;
        let r = Rational::new((num as i64).into(), 1000.into());
        let n = 60;
        let w = greedy_expansion(&beta, &r, n).unwrap();
        let approx: f64 = w.bits().iter().enumerate().map(|(i, &d)| d as f64 * b.powi(-(i as i32) - 1)).sum();
        // The greedy tail after n digits is at most beta^-n / (beta - 1).
        prop_assert!(approx <= x + 1e-12);
        prop_assert!(x - approx <= b.powi(-(n as i32)) / (b - 1.0) + 1e-12);
    }

    #[test]
    fn admissible_words_evaluate_below_one(t in 0.001f64..0.999, per in prop::collection::vec(0u8..2, 1..10)) {
        // Greedy expansions of 1 are admissible; the finite word made from the
        // largest rotation of a primitive word usually is one.
        let mut top = per.clone();
        for j in 1..per.len() {
            let mut r = per.clone();
            r.rotate_left(j);
            top = top.max(r);
        }
        let s = PeriodicSeq::finite(&BinaryWord::new(top).unwrap());
        prop_assume!(s.contains_digit(1) && is_parry_admissible(&s));
        let own = univoque::expansions::solve_base(&s);
        prop_assume!(own.is_ok());
        let own = own.unwrap().approx();
        prop_assert!((pi_beta_f64(own, &s) - 1.0).abs() < 1e-9);
        let b = own + t * (2.0 - own);
        prop_assert!(pi_beta_f64(b, &s) < 1.0);
    }
}
