use crate::error::Result;
use crate::lambda::{fresh, shift_pow};
use crate::poly::{Poly, Var};
use crate::pva::{u_jets, CDerElement, PVAStructure};

use super::{e_terms, evar, LCAdStructure};

/// `d f = Σ ∂f/∂u_i^(n) ∂^n du_i`.
pub fn kahler_d(f: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (i, n) in u_jets(f) {
        out += &(&f.partial(Var::U(i, n)) * &evar(i as usize, n));
    }
    out
}

/// `Ω(V)` with `[du_i λ du_j] = d{u_i λ u_j}` and `θ(du_i) = {u_i λ ·}`.
pub fn kahler_lcad(p: &PVAStructure) -> Result<LCAdStructure> {
    let bracket = p.table.iter().map(|row| row.iter().map(kahler_d).collect()).collect();
    let anchor = p.table.iter().map(|row| CDerElement { values: row.clone() }).collect();
    let egens = p.sig.gens.iter().map(|g| format!("d{g}")).collect();
    LCAdStructure::new(p.sig.clone(), egens, bracket, anchor)
}

/// Extend `u_i ↦ δ(u_i)` to `Ω(V)` as an `A[∂]`-linear map on `v`.
pub fn lift_derivation(values: &[Poly], v: &Poly) -> Result<Poly> {
    let mut out = Poly::zero();
    for (a, n, c) in e_terms(v)? {
        out += &(&c * &values[a].dn(n as u32));
    }
    Ok(out)
}

/// Extend `u_i ↦ δ_λ(u_i)` to `Ω(V)`: `c ∂^n du_i ↦ c (λ+∂)^n δ_λ(u_i)`,
/// with λ replaced by `at`.
pub fn lift_conformal_derivation(values: &[Poly], v: &Poly, at: &Poly) -> Result<Poly> {
    let z = fresh();
    let zp = Poly::var(z);
    let mut out = Poly::zero();
    for (a, n, c) in e_terms(v)? {
        let va = values[a].subst(Var::Lam(crate::lambda::LAM), &zp);
        out += &(&c * &shift_pow(&zp, n as u32, &va));
    }
    Ok(out.subst(z, at))
}
