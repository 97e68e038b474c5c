use std::sync::OnceLock;

use proptest::prelude::*;

use fockcan_core::bilinear::form_t;
use fockcan_core::fock::{h0_act, h0_act_bruteforce};
use fockcan_core::order::{self, bruhat_leq};
use fockcan_core::{Engine, FockVector, LaurentPoly, WeightFunction, ZeroOneSequence};

fn engine() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(Engine::default)
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..=4, -3i64..=3), 0..5).prop_map(LaurentPoly::from_terms)
}

fn seq(len: usize) -> impl Strategy<Value = ZeroOneSequence> {
    prop::collection::vec(0u8..=1, len).prop_map(|e| ZeroOneSequence::new(e).unwrap())
}

fn wf(len: usize, k: i32) -> impl Strategy<Value = WeightFunction> {
    prop::collection::vec(-k..=k, len).prop_map(WeightFunction)
}

fn vector(s: ZeroOneSequence, k: i32) -> impl Strategy<Value = FockVector> {
    let len = s.len();
    prop::collection::vec((wf(len, k), poly()), 0..4)
        .prop_map(move |terms| FockVector::from_terms(&s, k, terms).unwrap())
}

/// Two vectors in the same space at level 1.
fn vector_pair() -> impl Strategy<Value = (FockVector, FockVector, FockVector)> {
    (1usize..=3)
        .prop_flat_map(seq)
        .prop_flat_map(|s| (vector(s.clone(), 1), vector(s.clone(), 1), vector(s, 1)))
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
    }

    #[test]
    fn bar_is_a_ring_involution(a in poly(), b in poly()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn text_roundtrip(a in poly()) {
        let back: LaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn exact_division(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn bruhat_is_a_partial_order(s in seq(3), f in wf(3, 2), g in wf(3, 2), h in wf(3, 2)) {
        prop_assert!(bruhat_leq(&s, &f, &f));
        if bruhat_leq(&s, &f, &g) && bruhat_leq(&s, &g, &f) {
            prop_assert_eq!(&f, &g);
        }
        if bruhat_leq(&s, &f, &g) && bruhat_leq(&s, &g, &h) {
            prop_assert!(bruhat_leq(&s, &f, &h));
        }
        if bruhat_leq(&s, &f, &g) {
            prop_assert_eq!(order::wt(&s, &f).unwrap(), order::wt(&s, &g).unwrap());
        }
    }

    #[test]
    fn s_kappa_is_a_bijection(f in wf(4, 3), kappa in 1usize..4) {
        let g = order::s_kappa_f(&f, kappa).unwrap();
        prop_assert_eq!(order::s_kappa_f_inverse(&g, kappa).unwrap(), f);
    }

    #[test]
    fn h0_matches_word_expansion(v in (1usize..=3).prop_flat_map(seq).prop_flat_map(|s| vector(s, 2))) {
        prop_assert_eq!(h0_act(&v).unwrap(), h0_act_bruteforce(&v).unwrap());
    }

    #[test]
    fn psi_is_an_antilinear_involution((u, v, _) in vector_pair(), c in poly()) {
        let e = engine();
        prop_assert_eq!(e.psi(&e.psi(&u).unwrap()).unwrap(), u.clone());
        let mut lhs = u.clone();
        lhs.add_scaled(&v, &c).unwrap();
        let mut rhs = e.psi(&u).unwrap();
        rhs.add_scaled(&e.psi(&v).unwrap(), &c.bar()).unwrap();
        prop_assert_eq!(e.psi(&lhs).unwrap(), rhs);
    }

    #[test]
    fn form_is_bilinear((u, v, w) in vector_pair(), c in poly()) {
        let e = engine();
        let mut uv = u.clone();
        uv.add_scaled(&v, &c).unwrap();
        let left = form_t(e, &uv, &w).unwrap();
        prop_assert_eq!(left, &form_t(e, &u, &w).unwrap() + &(&c * &form_t(e, &v, &w).unwrap()));
        let right = form_t(e, &w, &uv).unwrap();
        prop_assert_eq!(right, &form_t(e, &w, &u).unwrap() + &(&c * &form_t(e, &w, &v).unwrap()));
    }
}
