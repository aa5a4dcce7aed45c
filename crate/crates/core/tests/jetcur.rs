use confalg::catalogue::{affine_plane, euler_line, symplectic_plane, tangent_line};
use confalg::diffalg::AlgebraSig;
use confalg::jetcur::*;
use confalg::lambda::LAM;
use confalg::lcad::{check_lcad, quotient_lad};
use confalg::pva::check_pva;
use confalg::{Poly, Var};

fn x(j: u16, n: u16) -> Poly {
    Poly::var(Var::U(j, n))
}
fn f(a: u16) -> Poly {
    Poly::var(Var::E(a, 0))
}
fn l() -> Poly {
    Poly::lam(LAM)
}

#[test]
fn jet_algebra_keeps_names() {
    let r = AlgebraSig::new(&["x", "y"], &[]);
    assert_eq!(jet_algebra(&r).gens, r.gens);
    assert_eq!(jet_algebra(&AlgebraSig::default()).rank(), 0);
}

#[test]
fn jet_lift_examples() {
    let d = jet_lift_derivation(&[Poly::one()]);
    assert_eq!(d.apply(&x(0, 0)), Poly::one());
    // D̂_λ(x x') = x' + x(λ+∂)1 = x' + λx
    assert_eq!(d.apply(&(&x(0, 0) * &x(0, 1))), &x(0, 1) + &(&l() * &x(0, 0)));
    assert!(jet_lift_derivation(&[Poly::zero()]).apply(&x(0, 2)).is_zero());
    let sig = AlgebraSig::new(&["x", "y"], &[]);
    let rep = check_jet_lift(&sig, &[&x(0, 0) * &x(1, 0), x(1, 0).pow(2)], 3, 5).unwrap();
    assert!(rep.pass(), "{:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn current_lcad_examples() {
    let c = current_lcad(&tangent_line()).unwrap();
    assert!(c.bracket[0][0].is_zero());
    assert_eq!(c.anchor[0].values[0], Poly::one());
    assert!(check_lcad(&c).unwrap().pass());
    let c = current_lcad(&euler_line()).unwrap();
    assert_eq!(c.anchor[0].values[0], x(0, 0));
    assert!(check_lcad(&c).unwrap().pass());
}

#[test]
fn lie_algebroid_checks() {
    for lad in [tangent_line(), euler_line(), kahler_lad(&affine_plane()).unwrap()] {
        assert!(check_lad(&lad).unwrap().pass());
    }
    // anchor not a homomorphism: [f1,f2] = 0 but θ(f1) = ∂x, θ(f2) = x∂x
    let bad = LieAlgebroid::new(
        AlgebraSig::new(&["x"], &[]),
        vec!["a".into(), "b".into()],
        vec![vec![Poly::zero(); 2]; 2],
        vec![vec![Poly::one()], vec![x(0, 0)]],
    )
    .unwrap();
    assert!(!check_lad(&bad).unwrap().pass());
}

#[test]
fn roundtrips() {
    let abelian = LieAlgebroid::new(
        AlgebraSig::new(&["x"], &[]),
        vec!["a".into(), "b".into()],
        vec![vec![Poly::zero(); 2]; 2],
        vec![vec![Poly::zero()]; 2],
    )
    .unwrap();
    for lad in [tangent_line(), euler_line(), abelian, kahler_lad(&affine_plane()).unwrap()] {
        assert!(roundtrip_check(&lad).unwrap());
        assert_eq!(quotient_lad(&current_lcad(&lad).unwrap()), lad);
    }
}

#[test]
fn kahler_lad_examples() {
    let zero = PoissonAlgebra::from_entries(AlgebraSig::new(&["x", "y"], &[]), &[]).unwrap();
    let k = kahler_lad(&zero).unwrap();
    assert!(k.bracket.iter().flatten().all(Poly::is_zero));
    let k = kahler_lad(&symplectic_plane()).unwrap();
    assert!(k.bracket[0][1].is_zero());
    assert_eq!(k.anchor_apply(&f(0), &x(1, 0)).unwrap(), Poly::one());
    let k = kahler_lad(&affine_plane()).unwrap();
    assert_eq!(k.bracket[0][1], f(0));
    assert_eq!(k.anchor_apply(&f(0), &x(1, 0)).unwrap(), x(0, 0));
}

#[test]
fn jet_pva_examples() {
    let p = jet_pva(&symplectic_plane()).unwrap();
    assert_eq!(p.table[0][1], Poly::one());
    assert!(check_pva(&p).unwrap().pass());
    let p = jet_pva(&affine_plane()).unwrap();
    assert_eq!(p.table[0][1], x(0, 0));
    assert!(check_pva(&p).unwrap().pass());
    let zero = PoissonAlgebra::from_entries(AlgebraSig::new(&["x"], &[]), &[]).unwrap();
    assert!(jet_pva(&zero).unwrap().table[0][0].is_zero());
}

#[test]
fn jet_kahler_roundtrips() {
    let zero = PoissonAlgebra::from_entries(AlgebraSig::new(&["x", "y"], &[]), &[]).unwrap();
    for p in [zero, symplectic_plane(), affine_plane()] {
        assert!(check_poisson(&p).pass());
        assert!(jet_kahler_roundtrip(&p).unwrap());
    }
}

#[test]
fn poisson_jacobi_failure_is_reported() {
    // {x,y} = z, {y,z} = x·y fails Jacobi
    let sig = AlgebraSig::new(&["x", "y", "z"], &[]);
    let p = PoissonAlgebra::from_entries(sig, &[(0, 1, x(2, 0)), (1, 2, &x(0, 0) * &x(1, 0))]).unwrap();
    assert!(!check_poisson(&p).pass());
}
