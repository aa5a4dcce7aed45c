use confalg::diffalg::{adjoint, op_compose};
use confalg::lambda::{star, LAM};
use confalg::sample::Sampler;
use confalg::{Poly, Var};
use proptest::prelude::*;

fn triple(seed: u64) -> (Poly, Poly, Poly) {
    let mut s = Sampler::new(seed);
    (s.poly(2, 2, 2, 3), s.poly(2, 2, 2, 3), s.poly(2, 2, 2, 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let (a, b, c) = triple(seed);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn d_is_a_derivation(seed in any::<u64>()) {
        let (a, b, _) = triple(seed);
        prop_assert_eq!((&a * &b).d(), &(&a.d() * &b) + &(&a * &b.d()));
        prop_assert_eq!(a.dn(3), a.d().d().d());
    }

    #[test]
    fn star_is_an_involution(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let l = Poly::lam(LAM);
        let v = &(&l * &s.poly(2, 2, 1, 2)) + &s.poly(2, 2, 1, 2);
        prop_assert_eq!(star(&star(&v, Var::Lam(LAM)), Var::Lam(LAM)), v);
    }

    #[test]
    fn composition_is_associative_and_applies(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (a, b, c) = (s.op(2), s.op(2), s.op(2));
        let f = s.poly(2, 2, 1, 2);
        prop_assert_eq!(op_compose(&op_compose(&a, &b), &c), op_compose(&a, &op_compose(&b, &c)));
        prop_assert_eq!(op_compose(&a, &b).apply(&f), a.apply(&b.apply(&f)));
        prop_assert_eq!(adjoint(&adjoint(&a)), a);
    }
}
