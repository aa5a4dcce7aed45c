use confalg::catalogue::{boson_pair, gfz, virasoro};
use confalg::diffalg::{AlgebraSig, OpPoly};
use confalg::lambda::{fresh, marker, LAM, MU};
use confalg::lcad::*;
use confalg::poly::q;
use confalg::pva::{CDerElement, PVAModule, PVAStructure};
use confalg::sample::Sampler;
use confalg::{Poly, Var};

fn u(n: u16) -> Poly {
    Poly::var(Var::U(0, n))
}
fn e(a: u16, n: u16) -> Poly {
    Poly::var(Var::E(a, n))
}
fn w(l: u16, n: u16) -> Poly {
    Poly::var(Var::W(l, n))
}
fn l() -> Poly {
    Poly::lam(LAM)
}
fn m() -> Poly {
    Poly::lam(MU)
}

#[test]
fn anchor_examples_on_gfz() {
    let om = kahler_lcad(&gfz()).unwrap();
    assert_eq!(anchor_apply(&om, &e(0, 0), &u(0)).unwrap(), l());
    assert_eq!(anchor_apply(&om, &e(0, 0), &u(0).pow(2)).unwrap(), (&l() * &u(0)).scale(&q(2)));
    assert!(anchor_apply(&om, &e(0, 0), &Poly::one()).unwrap().is_zero());
}

#[test]
fn bracket_examples_on_gfz() {
    let om = kahler_lcad(&gfz()).unwrap();
    assert!(lcad_bracket(&om, &e(0, 0), &e(0, 0)).unwrap().is_zero());
    let got = lcad_bracket(&om, &(&u(0) * &e(0, 0)), &e(0, 0)).unwrap();
    assert_eq!(got, &(&l() * &e(0, 0)) + &e(0, 1));
}

#[test]
fn sesquilinearity_in_first_slot() {
    let om = kahler_lcad(&virasoro()).unwrap();
    let v = &u(0) * &e(0, 0);
    let wv = &u(1) * &e(0, 1);
    let lhs = lcad_bracket(&om, &v.d(), &wv).unwrap();
    let rhs = -&(&l() * &lcad_bracket(&om, &v, &wv).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn kahler_tables() {
    let om = kahler_lcad(&gfz()).unwrap();
    assert!(om.bracket[0][0].is_zero());
    assert_eq!(om.anchor[0].values[0], l());
    let vir = virasoro();
    let om = kahler_lcad(&vir).unwrap();
    assert_eq!(om.bracket[0][0], &e(0, 1) + &(&l() * &e(0, 0)).scale(&q(2)));
    assert_eq!(om.anchor[0].values[0], vir.table[0][0]);
    let zero = PVAStructure::new(AlgebraSig::new(&["u"], &[]), vec![vec![Poly::zero()]]).unwrap();
    let om = kahler_lcad(&zero).unwrap();
    assert!(om.bracket[0][0].is_zero() && om.anchor[0].is_zero());
}

#[test]
fn kahler_d_examples() {
    assert_eq!(kahler_d(&u(0)), e(0, 0));
    assert_eq!(kahler_d(&u(0).pow(2)), (&u(0) * &e(0, 0)).scale(&q(2)));
    assert_eq!(kahler_d(&(&u(0) * &u(2))), &(&u(2) * &e(0, 0)) + &(&u(0) * &e(0, 2)));
    let f = &u(0).pow(3) * &u(1);
    assert_eq!(kahler_d(&f.d()), kahler_d(&f).d());
}

#[test]
fn catalogue_lcads_pass() {
    for p in [gfz(), virasoro(), boson_pair()] {
        let om = kahler_lcad(&p).unwrap();
        let rep = check_lcad(&om).unwrap();
        assert!(rep.pass(), "{:?}", rep.failures().collect::<Vec<_>>());
        let rep = check_lcad_samples(&om, 7, 4).unwrap();
        assert!(rep.pass(), "{:?}", rep.failures().collect::<Vec<_>>());
    }
}

#[test]
fn zero_anchor_is_consistent() {
    // with Θ = 0 both sides of condition (ii) vanish
    let mut om = kahler_lcad(&virasoro()).unwrap();
    om.anchor[0] = CDerElement::zero(1);
    assert!(check_lcad(&om).unwrap().pass());
}

#[test]
fn foreign_anchor_breaks_condition_ii() {
    let mut om = kahler_lcad(&virasoro()).unwrap();
    om.anchor[0] = CDerElement { values: vec![l()] };
    let rep = check_lcad(&om).unwrap();
    assert!(!rep.pass());
    assert!(rep.failures().all(|r| r.id.starts_with("anchor")));
}

#[test]
fn kahler_direct_formula() {
    let p = virasoro();
    let om = kahler_lcad(&p).unwrap();
    let mut s = Sampler::new(11);
    for _ in 0..4 {
        let (a, f, b, g) = (s.poly(1, 1, 1, 2), s.poly(1, 2, 1, 2), s.poly(1, 1, 1, 2), s.poly(1, 2, 1, 2));
        let lhs = lcad_bracket(&om, &(&a * &kahler_d(&f)), &(&b * &kahler_d(&g))).unwrap();
        let x = fresh();
        let lx = &l() + &Poly::var(x);
        let mut rhs = marker(&(&b * &kahler_d(&p.bracket_at(&f, &g, &lx).unwrap())), x, &a);
        rhs += &marker(&(&p.bracket_at(&f, &b, &lx).unwrap() * &kahler_d(&g)), x, &a);
        let t = p.bracket_at(&a, &g, &lx).unwrap();
        let df = kahler_d(&f);
        for (k, c) in t.coeffs(x).iter().enumerate() {
            rhs += &(&(&b * c) * &df.dn(k as u32));
        }
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn lifts() {
    assert_eq!(lift_derivation(&[u(0)], &e(0, 0)).unwrap(), u(0));
    assert_eq!(lift_derivation(&[u(0)], &kahler_d(&u(0).pow(2))).unwrap(), u(0).pow(2).scale(&q(2)));
    assert!(lift_derivation(&[Poly::zero()], &e(0, 3)).unwrap().is_zero());
    assert_eq!(lift_conformal_derivation(&[l()], &(&u(0) * &e(0, 0)), &l()).unwrap(), &l() * &u(0));
    assert_eq!(lift_conformal_derivation(&[Poly::one()], &e(0, 1), &l()).unwrap(), l());
    // δ̃_λ ∘ d = δ_λ as a conformal derivation
    let vals = [&l() * &u(1)];
    let f = &u(0).pow(2) * &u(2);
    let lhs = lift_conformal_derivation(&vals, &kahler_d(&f), &l()).unwrap();
    let rhs = CDerElement { values: vals.to_vec() }.apply(&f);
    assert_eq!(lhs, rhs);
}

fn rank_one_abelian() -> LCAdStructure {
    LCAdStructure::new(
        AlgebraSig::new(&["u"], &[]),
        vec!["e".into()],
        vec![vec![Poly::zero()]],
        vec![CDerElement::zero(1)],
    )
    .unwrap()
}

#[test]
fn semidirect_examples() {
    let ab = rank_one_abelian();
    let md = LCAdModule::free(&["w"], vec![vec![w(0, 0)]]);
    assert!(check_module(&ab, &md, 3, 3).unwrap().pass());
    let sd = semidirect(&ab, &md).unwrap();
    assert_eq!(sd.bracket[0][1], e(1, 0));
    assert!(sd.bracket[1][1].is_zero());
    assert!(sd.anchor[1].is_zero());
    assert!(check_lcad(&sd).unwrap().pass());

    let om = kahler_lcad(&gfz()).unwrap();
    let zero = LCAdModule::free(&["w"], vec![vec![Poly::zero()]]);
    let sd = semidirect(&om, &zero).unwrap();
    assert!(sd.bracket[0][1].is_zero() && sd.bracket[1][0].is_zero());
    let rep = check_lcad(&sd).unwrap();
    assert!(rep.pass(), "{:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn modules() {
    let om = kahler_lcad(&virasoro()).unwrap();
    let rep = check_module(&om, &LCAdModule::Trivial, 5, 3).unwrap();
    assert!(rep.pass(), "{:?}", rep.failures().collect::<Vec<_>>());
    let tr = LCAdModule::Transfer {
        pva: virasoro(),
        module: PVAModule::Adjoint,
    };
    assert!(check_module(&om, &tr, 5, 3).unwrap().pass());

    // e λ w = (∂+λ)w is not compatible with [e λ e] = (∂+2λ)e
    let bad = LCAdModule::free(&["w"], vec![vec![w(0, 0)]]);
    let rep = check_module(&om, &bad, 5, 0).unwrap();
    assert!(!rep.pass());
    assert!(rep.failures().any(|r| r.id.starts_with("module.iii")));
}

#[test]
fn zero_free_module_and_its_dual() {
    let om = kahler_lcad(&gfz()).unwrap();
    let md = LCAdModule::free(&["w"], vec![vec![Poly::zero()]]);
    assert!(check_module(&om, &md, 2, 3).unwrap().pass());
    let dual = dual_module(&md).unwrap();
    let rep = check_module(&om, &dual, 2, 3).unwrap();
    assert!(rep.pass(), "{:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn dual_module_examples() {
    let om = kahler_lcad(&virasoro()).unwrap();
    let md = LCAdModule::free(&["w"], vec![vec![&u(0) * &w(0, 0)]]);
    let dual = dual_module(&md).unwrap();
    assert!(dual.act_gen_at(&om, 0, &Poly::zero(), &l()).unwrap().is_zero());
    // φ_ν(w) = 1: (e λ φ)_ν(w) = θ(e)_λ(1) − φ_{ν−λ}(u w) = −u
    let phi = dual_element(&[Poly::one()]);
    let got = dual.act_gen_at(&om, 0, &phi, &l()).unwrap();
    assert_eq!(got, -&(&u(0) * &w(0, 0)));
    let rep = check_module(&om, &dual, 4, 3).unwrap();
    let base = check_module(&om, &md, 4, 3).unwrap();
    assert_eq!(rep.pass(), base.pass());
}

#[test]
fn gauge_examples() {
    let sig = AlgebraSig::new(&["u"], &[]);
    let zero = GaugePair::new(Carrier::Free(1), vec![Poly::zero()], CDerElement::zero(1));
    assert!(gauge_check(&sig, &zero, 1).unwrap());
    let g = GaugePair::new(Carrier::Free(1), vec![&l() * &w(0, 0)], CDerElement::zero(1));
    assert!(gauge_check(&sig, &g, 1).unwrap());
    let fam = gauge_bracket(&g, &g).unwrap();
    assert!(fam.phi[0].is_zero());
    assert!(gauge_bracket(&zero, &g).unwrap().phi[0].is_zero());

    // φ extended through τ = 0 while σ_λ(u) = 1: mismatch
    let tau0 = GaugePair::new(Carrier::Free(1), vec![&u(0) * &w(0, 0)], CDerElement { values: vec![Poly::one()] }).with_phi_derivation(CDerElement::zero(1));
    assert!(!gauge_check(&sig, &tau0, 1).unwrap());

    let s1 = CDerElement { values: vec![&l() * &u(0)] };
    let s2 = CDerElement { values: vec![u(1)] };
    let g1 = GaugePair::new(Carrier::Free(1), vec![&u(0) * &w(0, 1)], s1.clone());
    let g2 = GaugePair::new(Carrier::Free(1), vec![&l() * &w(0, 0)], s2.clone());
    let rep = check_gauge_bracket(&sig, &g1, &g2, 9, 4).unwrap();
    assert!(rep.pass(), "{:?}", rep.failures().collect::<Vec<_>>());
    assert_eq!(gauge_bracket(&g1, &g2).unwrap().sigma.values, s1.commutator(&s2));
}

#[test]
fn modules_to_gauge() {
    let om = kahler_lcad(&virasoro()).unwrap();
    let rho = module_to_gauge(&om, &LCAdModule::Trivial).unwrap();
    assert_eq!(rho[0].sigma, om.anchor[0]);
    assert_eq!(rho[0].tau, om.anchor[0]);
    assert!(check_module_to_gauge(&om, &LCAdModule::Trivial, 3).unwrap().pass());
    let tr = LCAdModule::Transfer {
        pva: virasoro(),
        module: PVAModule::Adjoint,
    };
    assert!(check_module_to_gauge(&om, &tr, 3).unwrap().pass());
    let ab = rank_one_abelian();
    let zero = LCAdModule::free(&["w"], vec![vec![Poly::zero()]]);
    let rho = module_to_gauge(&ab, &zero).unwrap();
    assert!(rho[0].phi[0].is_zero() && rho[0].sigma.is_zero());
}

#[test]
fn transformation_examples() {
    let sig = AlgebraSig::new(&["u"], &[]);
    let ab = transformation_lcad(&sig, vec!["l".into()], vec![vec![Poly::zero()]], vec![CDerElement::zero(1)]).unwrap();
    assert!(ab.anchor[0].is_zero());
    let t = transformation_lcad(&sig, vec!["l".into()], vec![vec![Poly::zero()]], vec![CDerElement { values: vec![l()] }]).unwrap();
    assert_eq!(t.anchor[0].values[0], l());
    assert!(check_lcad(&t).unwrap().pass());

    // Virasoro LCA acting by φ(L)_λ(u) = (∂+λ)u
    let vir = vec![vec![&e(0, 1) + &(&l() * &e(0, 0)).scale(&q(2))]];
    let phi = vec![CDerElement {
        values: vec![&u(1) + &(&l() * &u(0))],
    }];
    let t = transformation_lcad(&sig, vec!["L".into()], vir, phi).unwrap();
    assert!(check_lcad(&t).unwrap().pass());
    let mut s = Sampler::new(5);
    for _ in 0..3 {
        let a = s.poly(1, 2, 1, 2);
        let b = s.poly(1, 2, 1, 2);
        let lhs = lcad_bracket(&t, &(&a * &e(0, 0)), &(&b * &e(0, 0))).unwrap();
        assert_eq!(lhs, transformation_bracket(&t, &a, 0, &b, 0));
    }
    let bad = vec![CDerElement { values: vec![u(0)] }];
    let vir = vec![vec![&e(0, 1) + &(&l() * &e(0, 0)).scale(&q(2))]];
    assert!(transformation_lcad(&sig, vec!["L".into()], vir, bad).is_err());
}

#[test]
fn sae_examples() {
    let om = kahler_lcad(&gfz()).unwrap();
    let p = sae_pva(&om).unwrap();
    assert_eq!(p.table[1][0], l());
    assert_eq!(p.table[0][1], l());
    assert!(p.table[1][1].is_zero());
    assert!(confalg::pva::check_pva(&p).unwrap().pass());
    let ab = sae_pva(&rank_one_abelian()).unwrap();
    assert!(ab.table.iter().flatten().all(Poly::is_zero));
    let p = sae_pva(&kahler_lcad(&virasoro()).unwrap()).unwrap();
    assert!(confalg::pva::check_pva(&p).unwrap().pass());
}

#[test]
fn quotient_examples() {
    let q0 = quotient_lad(&kahler_lcad(&gfz()).unwrap());
    assert!(q0.bracket[0][0].is_zero() && q0.anchor[0][0].is_zero());
    let empty = LCAdStructure::new(AlgebraSig::new(&["u"], &[]), vec![], vec![], vec![]).unwrap();
    assert_eq!(quotient_lad(&empty).rank(), 0);
    let qv = quotient_lad(&kahler_lcad(&virasoro()).unwrap());
    assert!(qv.bracket[0][0].is_zero());
}

#[test]
fn jacobiator_identities_hold_for_mu_lambda_variables() {
    let om = kahler_lcad(&boson_pair()).unwrap();
    let op = OpPoly::new(vec![u(0), Poly::one()]);
    let v = op.apply(&e(1, 0));
    let j = jacobiator(&om, &e(0, 0), &v, &e(1, 1), &l(), &m()).unwrap();
    assert!(j.is_zero());
}
