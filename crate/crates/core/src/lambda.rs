//! λ-variables and the marker engine.
//!
//! Values in `M[λ_1..λ_k]` are plain [`Poly`]s containing `Var::Lam` variables.
//! The notation `(|_{x=∂} b)` is compiled to two primitives on a bound
//! variable `x`:
//!
//! * [`resolve`]: `Σ_m ∂^m([x^m]F)` (∂ lands on the value's own coefficients);
//! * [`marker`]: `Σ_m [x^m]F · ∂^m(b)` (∂ lands on a designated factor `b`).

use std::sync::atomic::{AtomicU32, Ordering};

use num_traits::{One, Zero};

use crate::diffalg::OpPoly;
use crate::poly::{binom, q, Poly, Var, Q};

/// λ
pub const LAM: u32 = 0;
/// μ
pub const MU: u32 = 1;
/// ν, reserved for values of dual-module elements.
pub const NU: u32 = FRESH_BASE - 1;

const FRESH_BASE: u32 = 1 << 24;
static FRESH: AtomicU32 = AtomicU32::new(FRESH_BASE);

/// λ_i for cochain slots, `i >= 1`.
pub fn lam_k(i: usize) -> u32 {
    1 + i as u32
}

pub fn lam_name(id: u32) -> String {
    match id {
        LAM => "l".into(),
        MU => "m".into(),
        NU => "n".into(),
        _ if id < FRESH_BASE => format!("l{}", id - 1),
        _ => format!("x{}", id - FRESH_BASE),
    }
}

/// A bound variable that never escapes the computation creating it.
pub fn fresh() -> Var {
    Var::Lam(FRESH.fetch_add(1, Ordering::Relaxed))
}

/// `(s+∂)^n t` with ∂ acting on `t` only.
pub fn shift_pow(s: &Poly, n: u32, t: &Poly) -> Poly {
    let mut out = Poly::zero();
    let mut dt = t.clone();
    for j in 0..=n {
        if dt.is_zero() {
            break;
        }
        out += &(&s.pow(n - j) * &dt).scale(&binom(n, j));
        dt = dt.d();
    }
    out
}

/// `a(s+x)(|_{x=∂} b) = Σ_i a_i (s+∂)^i b`.
pub fn eval_shifted(a: &OpPoly, s: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (i, ai) in a.coeffs().iter().enumerate() {
        if !ai.is_zero() {
            out += &(ai * &shift_pow(s, i as u32, b));
        }
    }
    out
}

/// `Σ_m [x^m]F · ∂^m(b)`.
pub fn marker(f: &Poly, x: Var, b: &Poly) -> Poly {
    let mut out = Poly::zero();
    let mut db = b.clone();
    for c in f.coeffs(x) {
        if db.is_zero() {
            break;
        }
        if !c.is_zero() {
            out += &(&c * &db);
        }
        db = db.d();
    }
    out
}

/// `Σ_m ∂^m([x^m]F)`.
pub fn resolve(f: &Poly, x: Var) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in f.coeffs(x).iter().enumerate() {
        out += &c.dn(m as u32);
    }
    out
}

/// Replace `target` by `image + eps·∂`, ∂ acting on the coefficients of `v`.
pub fn subst_affine(v: &Poly, target: Var, image: &Poly, eps: &Q) -> Poly {
    if eps.is_zero() {
        return v.subst(target, image);
    }
    let x = fresh();
    let img = image + &Poly::var(x).scale(eps);
    resolve(&v.subst(target, &img), x)
}

/// `v(−λ−∂)` for the variable `lam`, i.e. the involution `φ ↦ φ*`.
pub fn star(v: &Poly, lam: Var) -> Poly {
    subst_affine(v, lam, &-&Poly::var(lam), &-Q::one())
}

/// `(|_{x=∂} c) (−λ−x)^n F(x)`: the marker contribution of the operator
/// `c∂^n` acting through its adjoint symbol at `lam`.
pub fn adj_term(n: u16, c: &Poly, lam: &Poly, f: &Poly, x: Var) -> Poly {
    let base = -&(lam + &Poly::var(x));
    marker(&(&base.pow(n as u32) * f), x, c)
}

/// `(|_{x=∂} a*(λ)) F(x)` where `F` is presented in the bound variable `x`.
pub fn adjoint_shifted(a: &OpPoly, lam: &Poly, f: &Poly, x: Var) -> Poly {
    let mut out = Poly::zero();
    for (i, ai) in a.coeffs().iter().enumerate() {
        if !ai.is_zero() {
            out += &adj_term(i as u16, ai, lam, f, x);
        }
    }
    out
}

/// The adjoint symbol `a*(λ) = Σ_i (−λ−∂)^i a_i`.
pub fn adjoint_symbol(a: &OpPoly, lam: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (i, ai) in a.coeffs().iter().enumerate() {
        out += &shift_pow(lam, i as u32, ai).scale(&q(if i % 2 == 0 { 1 } else { -1 }));
    }
    out
}

fn lam_sum(lams: &[u32]) -> Poly {
    let mut s = Poly::zero();
    for &l in lams {
        s += &Poly::lam(l);
    }
    s
}

/// Normal form in `M[λ_1..λ_k]/⟨∂+Σλ⟩`: eliminate the last variable.
pub fn quot_normalize(v: &Poly, lams: &[u32]) -> Poly {
    match lams.split_last() {
        None => v.clone(),
        Some((&last, rest)) => subst_affine(v, Var::Lam(last), &-&lam_sum(rest), &-Q::one()),
    }
}

/// The splitting `q`: `m(λ_i − (Λ+x)/k)` with `x = ∂` on the coefficients.
pub fn q_split(v: &Poly, lams: &[u32]) -> Poly {
    let k = lams.len();
    if k == 0 {
        return v.clone();
    }
    let x = fresh();
    let shift = (&lam_sum(lams) + &Poly::var(x)).scale(&Q::new(1.into(), (k as i64).into()));
    let map: Vec<(Var, Poly)> = lams.iter().map(|&l| (Var::Lam(l), &Poly::lam(l) - &shift)).collect();
    resolve(&v.subst_many(&map), x)
}

/// `(Σλ+∂)·v`.
pub fn times_shift(v: &Poly, lams: &[u32]) -> Poly {
    &(&lam_sum(lams) * v) + &v.d()
}

/// Solve `(Σλ+∂)F = v` exactly, if possible.
pub fn exact_divide_shift(v: &Poly, lams: &[u32]) -> Option<Poly> {
    let Some((&last, rest)) = lams.split_last() else {
        return if v.is_zero() { Some(Poly::zero()) } else { None };
    };
    let lr = lam_sum(rest);
    let op = |f: &Poly| &(&lr * f) + &f.d();
    let cs = v.coeffs(Var::Lam(last));
    if cs.is_empty() {
        return Some(Poly::zero());
    }
    let d = cs.len() - 1;
    let mut fs = vec![Poly::zero(); d.max(1)];
    if d == 0 {
        return if cs[0].is_zero() { Some(Poly::zero()) } else { None };
    }
    fs[d - 1] = cs[d].clone();
    for n in (1..d).rev() {
        fs[n - 1] = &cs[n] - &op(&fs[n]);
    }
    if !(&cs[0] - &op(&fs[0])).is_zero() {
        return None;
    }
    let l = Poly::lam(last);
    let mut out = Poly::zero();
    for (n, f) in fs.iter().enumerate() {
        out += &(&l.pow(n as u32) * f);
    }
    Some(out)
}
