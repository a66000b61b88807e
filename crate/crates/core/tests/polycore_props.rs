use hurwitz_core::polycore::{gcd, squarefree_part, ExactPoly, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly(max_len: usize) -> impl Strategy<Value = ExactPoly> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(ExactPoly::new)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = ExactPoly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(8), q in poly(8), r in poly(8)) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn product_rule(p in poly(21), q in poly(21)) {
        let lhs = (&p * &q).derivative();
        let rhs = &(&p.derivative() * &q) + &(&p * &q.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shift_roundtrip(p in poly(12), b in rational()) {
        let one = Rational::from_integer(1.into());
        let back = p.compose_linear(&one, &b).compose_linear(&one, &-b.clone());
        prop_assert_eq!(back, p);
    }

    #[test]
    fn compose_matches_evaluation(p in poly(8), a in rational(), b in rational(), x in rational()) {
        let composed = p.compose_linear(&a, &b);
        prop_assert_eq!(composed.eval(&x), p.eval(&(&a * &x + &b)));
    }

    #[test]
    fn gcd_of_multiples(
        roots_p in prop::collection::vec(-6i64..=6, 1..4),
        roots_q in prop::collection::vec(-6i64..=6, 1..4),
        g in nonzero_poly(4),
    ) {
        // p and q built from disjoint root sets are coprime
        let rp: Vec<Rational> = roots_p.iter().map(|&r| Rational::from_integer((2 * r).into())).collect();
        let rq: Vec<Rational> = roots_q.iter().map(|&r| Rational::from_integer((2 * r + 1).into())).collect();
        let (p, q) = (ExactPoly::from_roots(&rp), ExactPoly::from_roots(&rq));
        let lhs = gcd(&(&p * &g), &(&q * &g)).unwrap();
        let rhs = (&g * &gcd(&p, &q).unwrap()).monic().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn squarefree_part_properties(p in nonzero_poly(6), extra in nonzero_poly(3)) {
        // repeat a factor so the input is typically not squarefree
        let f = &(&p * &extra) * &extra;
        let s = squarefree_part(&f).unwrap();
        prop_assert!(s.divides(&f));
        prop_assert!(gcd(&s, &s.derivative()).unwrap().is_constant());
    }

    #[test]
    fn text_roundtrip(p in poly(10)) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<ExactPoly>().unwrap(), p);
    }
}
