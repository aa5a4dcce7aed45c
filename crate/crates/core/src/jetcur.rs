//! Lie algebroids over polynomial rings, jet algebras and the current LCAd.
//!
//! Ring elements are polynomials in the order-zero jets `U(j,0)`; elements of
//! a Lie algebroid are linear in the order-zero generators `E(a,0)`.

use crate::diffalg::AlgebraSig;
use crate::error::{Error, Result};
use crate::lambda::{fresh, marker, LAM};
use crate::lcad::{kahler_lcad, quotient_lad, LCAdStructure};
use crate::poly::{Names, Poly, Var};
use crate::pva::{CDerElement, PVAStructure};
use crate::report::Report;
use crate::sample::Sampler;

fn x(j: usize) -> Poly {
    Poly::var(Var::U(j as u16, 0))
}

fn f(a: usize) -> Poly {
    Poly::var(Var::E(a as u16, 0))
}

fn is_ring_poly(p: &Poly) -> bool {
    !p.has_var(|v| matches!(v, Var::Lam(_) | Var::E(..) | Var::W(..)) || v.order() > 0)
}

fn f_parts(v: &Poly) -> Result<Vec<(usize, Poly)>> {
    let (parts, free) = v.linear_parts(|w| matches!(w, Var::E(..))).ok_or(Error::NotLinear)?;
    if !free.is_zero() {
        return Err(Error::NotLinear);
    }
    parts
        .into_iter()
        .map(|(w, c)| match w {
            Var::E(a, 0) => Ok((a as usize, c)),
            _ => Err(Error::Signature("Lie algebroid elements carry no derivatives".into())),
        })
        .collect()
}

/// `d/dx_j` on the polynomial ring.
fn dx(p: &Poly, j: usize) -> Poly {
    p.partial(Var::U(j as u16, 0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebroid {
    pub ring: AlgebraSig,
    pub fgens: Vec<String>,
    /// `[f_a, f_b] = Σ_e c_ab^e f_e`.
    pub bracket: Vec<Vec<Poly>>,
    /// `θ(f_a) = Σ_j ρ_aj ∂/∂x_j`.
    pub anchor: Vec<Vec<Poly>>,
}

impl LieAlgebroid {
    pub fn new(ring: AlgebraSig, fgens: Vec<String>, bracket: Vec<Vec<Poly>>, anchor: Vec<Vec<Poly>>) -> Result<LieAlgebroid> {
        let m = fgens.len();
        if bracket.len() != m || bracket.iter().any(|r| r.len() != m) {
            return Err(Error::Signature(format!("bracket table must be {m}x{m}")));
        }
        if anchor.len() != m || anchor.iter().any(|r| r.len() != ring.rank()) {
            return Err(Error::Signature("anchor table has the wrong shape".into()));
        }
        for p in bracket.iter().flatten() {
            if !f_parts(p)?.iter().all(|(_, c)| is_ring_poly(c)) {
                return Err(Error::Signature("structure functions must be polynomials".into()));
            }
        }
        if !anchor.iter().flatten().all(is_ring_poly) {
            return Err(Error::Signature("anchor coefficients must be polynomials".into()));
        }
        Ok(LieAlgebroid { ring, fgens, bracket, anchor })
    }

    pub fn rank(&self) -> usize {
        self.fgens.len()
    }

    pub fn names(&self) -> Names {
        let mut n = self.ring.names();
        n.egens = self.fgens.clone();
        n
    }

    pub fn anchor_apply(&self, v: &Poly, p: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (a, c) in f_parts(v)? {
            for (j, r) in self.anchor[a].iter().enumerate() {
                out += &(&(&c * r) * &dx(p, j));
            }
        }
        Ok(out)
    }

    /// `[Σ g_a f_a, Σ h_b f_b]` via the Leibniz rule.
    pub fn bracket_apply(&self, v: &Poly, w: &Poly) -> Result<Poly> {
        let pv = f_parts(v)?;
        let pw = f_parts(w)?;
        let mut out = Poly::zero();
        for (a, g) in &pv {
            for (b, h) in &pw {
                out += &(&(g * h) * &self.bracket[*a][*b]);
                out += &(&self.anchor_apply(&(g * &f(*a)), h)? * &f(*b));
                out -= &(&self.anchor_apply(&(h * &f(*b)), g)? * &f(*a));
            }
        }
        Ok(out)
    }
}

/// Antisymmetry, Jacobi and the anchor homomorphism on generators.
pub fn check_lad(l: &LieAlgebroid) -> Result<Report> {
    let names = l.names();
    let mut rep = Report::new();
    let m = l.rank();
    for a in 0..m {
        for b in a..m {
            let s = &l.bracket[a][b] + &l.bracket[b][a];
            rep.check_eq(format!("lad.skew({a},{b})"), None, &names, &s, &Poly::zero());
        }
    }
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let mut j = l.bracket_apply(&l.bracket[a][b], &f(c))?;
                j += &l.bracket_apply(&l.bracket[b][c], &f(a))?;
                j += &l.bracket_apply(&l.bracket[c][a], &f(b))?;
                rep.check_eq(format!("lad.jacobi({a},{b},{c})"), None, &names, &j, &Poly::zero());
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            for j in 0..l.ring.rank() {
                let lhs = l.anchor_apply(&l.bracket[a][b], &x(j))?;
                let rhs = &l.anchor_apply(&f(a), &l.anchor_apply(&f(b), &x(j))?)? - &l.anchor_apply(&f(b), &l.anchor_apply(&f(a), &x(j))?)?;
                rep.check_eq(format!("lad.anchor({a},{b};{j})"), None, &names, &lhs, &rhs);
            }
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonAlgebra {
    pub ring: AlgebraSig,
    /// `π_ij = {x_i, x_j}`.
    pub pi: Vec<Vec<Poly>>,
}

impl PoissonAlgebra {
    pub fn new(ring: AlgebraSig, pi: Vec<Vec<Poly>>) -> Result<PoissonAlgebra> {
        let r = ring.rank();
        if pi.len() != r || pi.iter().any(|row| row.len() != r) {
            return Err(Error::Signature(format!("bivector table must be {r}x{r}")));
        }
        if !pi.iter().flatten().all(is_ring_poly) {
            return Err(Error::Signature("bivector entries must be polynomials".into()));
        }
        Ok(PoissonAlgebra { ring, pi })
    }

    /// Missing entries are filled by antisymmetry.
    pub fn from_entries(ring: AlgebraSig, entries: &[(usize, usize, Poly)]) -> Result<PoissonAlgebra> {
        let r = ring.rank();
        let mut pi = vec![vec![Poly::zero(); r]; r];
        for (i, j, p) in entries {
            if *i >= r || *j >= r {
                return Err(Error::UnknownGenerator((*i).max(*j)));
            }
            pi[*i][*j] = p.clone();
            pi[*j][*i] = -p;
        }
        PoissonAlgebra::new(ring, pi)
    }

    pub fn bracket(&self, p: &Poly, q: &Poly) -> Poly {
        let r = self.ring.rank();
        let mut out = Poly::zero();
        for i in 0..r {
            let pi_ = dx(p, i);
            if pi_.is_zero() {
                continue;
            }
            for j in 0..r {
                out += &(&(&pi_ * &dx(q, j)) * &self.pi[i][j]);
            }
        }
        out
    }
}

pub fn check_poisson(p: &PoissonAlgebra) -> Report {
    let names = p.ring.names();
    let mut rep = Report::new();
    let r = p.ring.rank();
    for i in 0..r {
        for j in i..r {
            let s = &p.pi[i][j] + &p.pi[j][i];
            rep.check_eq(format!("poisson.skew({i},{j})"), None, &names, &s, &Poly::zero());
        }
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let mut s = p.bracket(&x(i), &p.bracket(&x(j), &x(k)));
                s += &p.bracket(&x(j), &p.bracket(&x(k), &x(i)));
                s += &p.bracket(&x(k), &p.bracket(&x(i), &x(j)));
                rep.check_eq(format!("poisson.jacobi({i},{j},{k})"), None, &names, &s, &Poly::zero());
            }
        }
    }
    rep
}

/// The jet algebra of a polynomial ring has the same generator names.
pub fn jet_algebra(ring: &AlgebraSig) -> AlgebraSig {
    ring.clone()
}

/// `D̂_λ(p) = Σ ∂p/∂x_j^(n) (λ+∂)^n D(x_j)`.
pub fn jet_lift_derivation(values: &[Poly]) -> CDerElement {
    CDerElement { values: values.to_vec() }
}

/// `D̂_λ∘ι = ι∘D` on ring generators and seeded products, and the lift of
/// `r·D` equals `(|_{y=∂} r) D̂_{λ+y}` on seeded samples.
pub fn check_jet_lift(ring: &AlgebraSig, values: &[Poly], seed: u64, samples: usize) -> Result<Report> {
    let names = ring.names();
    let d = jet_lift_derivation(values);
    let lam = Poly::lam(LAM);
    let apply_d = |p: &Poly| -> Poly {
        let mut out = Poly::zero();
        for (j, v) in values.iter().enumerate() {
            out += &(&dx(p, j) * v);
        }
        out
    };
    let mut rep = Report::new();
    let mut s = Sampler::new(seed);
    let r = ring.rank();
    let mut probes: Vec<Poly> = (0..r).map(x).collect();
    probes.extend((0..samples).map(|_| s.poly(r, 3, 0, 3)));
    for (t, p) in probes.iter().enumerate() {
        rep.check_eq(format!("lift.iota{t}"), None, &names, &d.apply(p), &apply_d(p));
    }
    for t in 0..samples {
        let rr = s.poly(r, 2, 0, 2);
        let p = s.poly(r, 2, 1, 3);
        let twisted = jet_lift_derivation(&values.iter().map(|v| &rr * v).collect::<Vec<_>>());
        let y = fresh();
        let rhs = marker(&d.apply_at(&p, &(&lam + &Poly::var(y))), y, &rr);
        rep.check_eq(format!("lift.twist{t}"), None, &names, &twisted.apply(&p), &rhs);
    }
    Ok(rep)
}

pub fn current_lcad(l: &LieAlgebroid) -> Result<LCAdStructure> {
    let anchor = l.anchor.iter().map(|row| jet_lift_derivation(row)).collect();
    LCAdStructure::new(jet_algebra(&l.ring), l.fgens.clone(), l.bracket.clone(), anchor)
}

/// `quotient_lad(current_lcad(F)) = F` on tables.
pub fn roundtrip_check(l: &LieAlgebroid) -> Result<bool> {
    let back = quotient_lad(&current_lcad(l)?);
    Ok(back.bracket == l.bracket && back.anchor == l.anchor)
}

/// `[dx_i, dx_j] = d π_ij`, `θ(dx_i) = Σ_j π_ij ∂/∂x_j`.
pub fn kahler_lad(p: &PoissonAlgebra) -> Result<LieAlgebroid> {
    let r = p.ring.rank();
    let bracket =
        p.pi.iter()
            .map(|row| {
                row.iter()
                    .map(|pij| {
                        let mut out = Poly::zero();
                        for l in 0..r {
                            out += &(&dx(pij, l) * &f(l));
                        }
                        out
                    })
                    .collect()
            })
            .collect();
    let fgens = p.ring.gens.iter().map(|g| format!("d{g}")).collect();
    LieAlgebroid::new(p.ring.clone(), fgens, bracket, p.pi.clone())
}

/// The λ-free table `{x_i λ x_j} = ι(π_ij)` on the jet algebra.
pub fn jet_pva(p: &PoissonAlgebra) -> Result<PVAStructure> {
    PVAStructure::new(jet_algebra(&p.ring), p.pi.clone())
}

/// `current_lcad(kahler_lad(P))` against `kahler_lcad(jet_pva(P))` under
/// `dx_i ↔ 1⊗dx_i`.
pub fn jet_kahler_roundtrip(p: &PoissonAlgebra) -> Result<bool> {
    let a = current_lcad(&kahler_lad(p)?)?;
    let b = kahler_lcad(&jet_pva(p)?)?;
    Ok(a.bracket == b.bracket && a.anchor == b.anchor)
}
