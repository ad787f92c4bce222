use mgbracket::{LaurentPoly, Monomial, VarSym};
use proptest::collection::vec;
use proptest::prelude::*;

fn var(s: &str) -> VarSym {
    VarSym::new(s).unwrap()
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    vec((-5i64..=5, -3i32..=3, -3i32..=3, 0i32..=3), 0..6).prop_map(|terms| {
        let mut out = LaurentPoly::zero();
        for (c, a, b, d) in terms {
            let m = Monomial::var(var("A"), a)
                .mul(&Monomial::var(var("B"), b))
                .mul(&Monomial::var(var("d"), d));
            out += LaurentPoly::term(c, m);
        }
        out
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn exact_division_round_trip(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let q = (&a * &b).exact_div(&b);
        prop_assert!(q.is_ok(), "a = {a}, b = {b}");
        prop_assert_eq!(q.unwrap(), a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), v in poly()) {
        let d = var("d");
        let s = |x: &LaurentPoly| x.substitute(&d, &v).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn display_parses_back(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }
}
