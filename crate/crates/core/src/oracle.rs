//! Seeded identities that tie the kernel primitives to each other.

use crate::diffalg::{adjoint, d_total, op_compose, variational_deriv, AlgebraSig, OpPoly};
use crate::lambda::{adjoint_shifted, adjoint_symbol, eval_shifted, fresh, star, LAM};
use crate::poly::{Poly, Var};
use crate::report::Report;
use crate::sample::Sampler;
use crate::Result;

fn lam_poly(s: &mut Sampler, gens: usize) -> Poly {
    let l = Poly::lam(LAM);
    let mut out = Poly::zero();
    for n in 0..=s.int(0, 2) as u32 {
        out += &(&l.pow(n) * &s.poly(gens, 2, 1, 2));
    }
    out
}

/// Runs `samples` rounds of:
///
/// * `adjoint(adjoint(a)) = a` and `(ab)* = b*a*`;
/// * the symbol of `a*` agrees with `adjoint_symbol`;
/// * `δ/δu_i ∘ ∂ = 0`;
/// * left action on a conformal map, dualized, equals the right action on
///   its dual: `((aφ)_λ)* = a(λ+∂)φ*_λ`.
pub fn check_kernel_oracles(seed: u64, samples: usize) -> Result<Report> {
    let sig = AlgebraSig::new(&["u", "v"], &[]);
    let names = sig.names();
    let r = sig.rank();
    let mut s = Sampler::new(seed);
    let lam = Poly::lam(LAM);
    let mut rep = Report::new();
    let op_eq = |rep: &mut Report, id: String, a: &OpPoly, b: &OpPoly| {
        let ok = a == b;
        rep.push(id, None, a.render(&names), b.render(&names), ok);
    };
    for t in 0..samples {
        let a = s.op(r);
        let b = s.op(r);
        op_eq(&mut rep, format!("sample{t}.adjoint_involution"), &adjoint(&adjoint(&a)), &a);
        op_eq(
            &mut rep,
            format!("sample{t}.adjoint_antihom"),
            &adjoint(&op_compose(&a, &b)),
            &op_compose(&adjoint(&b), &adjoint(&a)),
        );
        rep.check_eq(
            format!("sample{t}.adjoint_symbol"),
            None,
            &names,
            &adjoint(&a).symbol(&lam),
            &adjoint_symbol(&a, &lam),
        );

        let f = s.poly(r, 3, 2, 3);
        let df = d_total(&f);
        for i in 0..r {
            let v = variational_deriv(&sig, &df, i)?;
            rep.check_eq(format!("sample{t}.var_of_total.{i}"), None, &names, &v, &Poly::zero());
        }

        let phi = lam_poly(&mut s, r);
        let x = fresh();
        let shifted = phi.subst(Var::Lam(LAM), &(&lam + &Poly::var(x)));
        let left = adjoint_shifted(&a, &lam, &shifted, x);
        let right = eval_shifted(&a, &lam, &star(&phi, Var::Lam(LAM)));
        rep.check_eq(format!("sample{t}.duality"), None, &names, &star(&left, Var::Lam(LAM)), &right);
    }
    Ok(rep)
}
