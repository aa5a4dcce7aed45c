//! Abelian extensions of an LCAd by a module and their 2-cocycles.

use std::collections::BTreeMap;

use crate::diffalg::{guard, AlgebraSig};
use crate::error::{Error, Result};
use crate::lambda::{adj_term, fresh, resolve, shift_pow, star, LAM};
use crate::lcad::{e_terms, lcad_bracket, semidirect, Algebroid, Carrier, LCAdModule, LCAdStructure};
use crate::poly::{Names, Poly, Var};
use crate::report::Report;
use crate::sample::Sampler;

use super::{carrier_of_lcad, lcad_d, slot, Cochain, Repr};

/// `ω_λ(e_a, e_b)` in `λ`, with an optional `ψ` (values `ψ(e_a)`) of which
/// `ω` is the coboundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleData {
    pub omega: Vec<Vec<Poly>>,
    pub witness: Option<Vec<Poly>>,
}

impl CocycleData {
    pub fn new(omega: Vec<Vec<Poly>>) -> CocycleData {
        CocycleData { omega, witness: None }
    }

    pub fn zero(r: usize) -> CocycleData {
        CocycleData::new(vec![vec![Poly::zero(); r]; r])
    }

    fn validate(&self, l: &LCAdStructure) -> Result<()> {
        let r = l.rank();
        if self.omega.len() != r || self.omega.iter().any(|row| row.len() != r) {
            return Err(Error::Signature(format!("cocycle table must be {r}x{r}")));
        }
        if self.omega.iter().flatten().any(|p| p.has_var(|v| matches!(v, Var::E(..)))) {
            return Err(Error::Signature("cocycle values must lie in the module".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &CocycleData) -> CocycleData {
        let omega = self
            .omega
            .iter()
            .zip(&other.omega)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        CocycleData::new(omega)
    }
}

/// `ω_{at}(u, v)` for arbitrary `u, v ∈ E`, extended from the generator
/// table: `ω_λ(a(∂)u, b(∂)v) = (|_{x=∂}a*(λ)) b(λ+x+∂) ω_{λ+x}(u, v)`.
pub fn omega_at(omega: &[Vec<Poly>], u: &Poly, v: &Poly, at: &Poly) -> Result<Poly> {
    let z = fresh();
    let zp = Poly::var(z);
    let tv = e_terms(v)?;
    let mut out = Poly::zero();
    for (a, n, c) in e_terms(u)? {
        for (b, k, cb) in &tv {
            let w = &omega[a][*b];
            if w.is_zero() {
                continue;
            }
            let x = fresh();
            let zx = &zp + &Poly::var(x);
            let inner = cb * &shift_pow(&zx, *k as u32, &w.subst(Var::Lam(LAM), &zx));
            out += &adj_term(n, &c, &zp, &inner, x);
            guard(&out)?;
        }
    }
    Ok(out.subst(z, at))
}

/// `ρ(v)*_{s}(m) = (|_{x=∂} ρ(v)_{−s−x}(m))`.
fn rho_star_at(l: &LCAdStructure, md: &LCAdModule, v: &Poly, m: &Poly, s: &Poly) -> Result<Poly> {
    let x = fresh();
    let r = md.act_at(l, v, m, &-&(s + &Poly::var(x)))?;
    Ok(resolve(&r, x))
}

fn lam() -> Poly {
    Poly::lam(LAM)
}

fn mu() -> Poly {
    Poly::lam(crate::lambda::MU)
}

/// The 2-cocycle identities: skewsymmetry on generator pairs, the
/// Jacobi-type identity on generator triples, and closedness of the
/// associated quotient 2-cochain.
pub fn cocycle_check(l: &LCAdStructure, md: &LCAdModule, cd: &CocycleData) -> Result<Report> {
    cd.validate(l)?;
    let names = md.names(l);
    let om = &cd.omega;
    let r = l.rank();
    let mut rep = Report::new();
    for a in 0..r {
        for b in a..r {
            let rhs = -&star(&om[b][a], Var::Lam(LAM));
            rep.check_eq(format!("2cocycle2({a},{b})"), Some(2), &names, &om[a][b], &rhs);
        }
    }
    let lm = &lam() + &mu();
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let (u, v, w) = (l.gen(a), l.gen(b), l.gen(c));
                let mut t = md.act_at(l, &u, &om[b][c].subst(Var::Lam(LAM), &mu()), &lam())?;
                t -= &md.act_at(l, &v, &om[a][c], &mu())?;
                t += &rho_star_at(l, md, &w, &om[a][b], &lm)?;
                let vw = l.bracket_at(&v, &w, &mu())?;
                t += &omega_at(om, &u, &vw, &lam())?;
                let uw = l.bracket_at(&u, &w, &lam())?;
                t -= &omega_at(om, &v, &uw, &mu())?;
                let uv = l.bracket_at(&u, &v, &lam())?;
                t -= &omega_at(om, &uv, &w, &lm)?;
                rep.check_eq(format!("2cocycle3({a},{b},{c})"), Some(2), &names, &t, &Poly::zero());
            }
        }
    }
    let closed = match cocycle_cochain(l, cd) {
        Ok(ch) => lcad_d(l, md, &ch)?.is_zero(),
        Err(Error::Cochain(_)) => false,
        Err(e) => return Err(e),
    };
    rep.flag("closed", closed);
    Ok(rep)
}

/// The quotient 2-cochain `φ_{λ,−λ−∂}(e_a, e_b) = ω_λ(e_a, e_b)`; fails if
/// `ω` is not skewsymmetric.
pub fn cocycle_cochain(l: &LCAdStructure, cd: &CocycleData) -> Result<Cochain> {
    cd.validate(l)?;
    let r = l.rank();
    let mut values = BTreeMap::new();
    for a in 0..r {
        for b in a..r {
            if a < b && cd.omega[b][a] != -&star(&cd.omega[a][b], Var::Lam(LAM)) {
                return Err(Error::Cochain(format!("ω is not skewsymmetric on ({a},{b})")));
            }
            values.insert(vec![a, b], cd.omega[a][b].subst(Var::Lam(LAM), &slot(1)));
        }
    }
    Cochain::new(2, Repr::Quotient, r, values)
}

/// `E ⊕ M` with bracket `[u+m λ v+n] = [u λ v] + ω_λ(u,v) + ρ(u)_λ(n) − ρ(v)*_λ(m)`
/// and anchor `θ(u+m) = θ(u)`.
///
/// Elements are `E`-linear parts plus module parts; for `M = A` the module
/// part is the `E`-free part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianExtension {
    pub l: LCAdStructure,
    pub m: LCAdModule,
    pub omega: Vec<Vec<Poly>>,
}

impl AbelianExtension {
    fn split(&self, x: &Poly) -> Result<(Poly, Poly)> {
        let (parts, free) = x.linear_parts(|v| matches!(v, Var::E(..))).ok_or(Error::NotLinear)?;
        let mut e = Poly::zero();
        for (v, c) in parts {
            e += &(&c * &Poly::var(v));
        }
        Ok((e, free))
    }

    /// The extension as an LCAd on a free module (free `M` only).
    pub fn to_structure(&self) -> Result<LCAdStructure> {
        let mut s = semidirect(&self.l, &self.m)?;
        let r = self.l.rank() as u16;
        for (a, row) in self.omega.iter().enumerate() {
            for (b, w) in row.iter().enumerate() {
                let w = w.rename(|v| match v {
                    Var::W(g, n) => Var::E(g + r, n),
                    other => other,
                });
                s.bracket[a][b] += &w;
            }
        }
        LCAdStructure::new(s.sig, s.egens, s.bracket, s.anchor)
    }
}

impl Algebroid for AbelianExtension {
    fn sig(&self) -> &AlgebraSig {
        &self.l.sig
    }

    fn names(&self) -> Names {
        self.m.names(&self.l)
    }

    fn generators(&self) -> Vec<Poly> {
        let mut g = self.l.generators();
        match carrier_of_lcad(&self.m) {
            Ok(Carrier::Free(k)) => g.extend((0..k).map(|i| Poly::var(Var::W(i as u16, 0)))),
            _ => g.push(Poly::one()),
        }
        g
    }

    fn bracket_at(&self, x: &Poly, y: &Poly, at: &Poly) -> Result<Poly> {
        let (u, m) = self.split(x)?;
        let (v, n) = self.split(y)?;
        let mut out = self.l.bracket_at(&u, &v, at)?;
        out += &omega_at(&self.omega, &u, &v, at)?;
        out += &self.m.act_at(&self.l, &u, &n, at)?;
        out -= &rho_star_at(&self.l, &self.m, &v, &m, at)?;
        Ok(out)
    }

    fn anchor_at(&self, x: &Poly, f: &Poly, at: &Poly) -> Result<Poly> {
        let (u, _) = self.split(x)?;
        self.l.anchor_at(&u, f, at)
    }
}

/// The extension defined by a cocycle; errors if the identities fail.
pub fn extension_from_cocycle(l: &LCAdStructure, md: &LCAdModule, cd: &CocycleData) -> Result<AbelianExtension> {
    carrier_of_lcad(md)?;
    let rep = cocycle_check(l, md, cd)?;
    if let Some(f) = rep.failures().next() {
        return Err(Error::Precondition(format!("ω fails {}", f.id)));
    }
    Ok(AbelianExtension {
        l: l.clone(),
        m: md.clone(),
        omega: cd.omega.clone(),
    })
}

/// `ψ` extended to an `A[∂]`-module map `E → M`.
fn psi_apply(psi: &[Poly], v: &Poly) -> Result<Poly> {
    let mut out = Poly::zero();
    for (a, n, c) in e_terms(v)? {
        out += &(&c * &psi[a].dn(n as u32));
    }
    Ok(out)
}

/// `ω_λ(u,v) = ψ([u λ v]) − ρ(u)_λ(ψ(v)) + ρ(v)*_λ(ψ(u))` on generators.
pub fn coboundary(l: &LCAdStructure, md: &LCAdModule, psi: &[Poly]) -> Result<CocycleData> {
    carrier_of_lcad(md)?;
    let r = l.rank();
    if psi.len() != r {
        return Err(Error::Signature(format!("ψ needs {r} values")));
    }
    let mut omega = vec![vec![Poly::zero(); r]; r];
    for a in 0..r {
        for b in 0..r {
            let (u, v) = (l.gen(a), l.gen(b));
            let mut w = psi_apply(psi, &lcad_bracket(l, &u, &v)?)?;
            w -= &md.act_at(l, &u, &psi[b], &lam())?;
            w += &rho_star_at(l, md, &v, &psi[a], &lam())?;
            omega[a][b] = w;
        }
    }
    Ok(CocycleData {
        omega,
        witness: Some(psi.to_vec()),
    })
}

/// `χ(v+m) = v+m+ψ(v)` intertwines the extensions by `ω` and by
/// `ω + coboundary(ψ)`, on generators and seeded samples.
pub fn check_intertwining(l: &LCAdStructure, md: &LCAdModule, cd: &CocycleData, psi: &[Poly], seed: u64, samples: usize) -> Result<Report> {
    let shifted = cd.add(&coboundary(l, md, psi)?);
    let e1 = AbelianExtension {
        l: l.clone(),
        m: md.clone(),
        omega: cd.omega.clone(),
    };
    let e2 = AbelianExtension {
        omega: shifted.omega,
        ..e1.clone()
    };
    let chi = |x: &Poly| -> Result<Poly> {
        let (u, _) = e1.split(x)?;
        Ok(x + &psi_apply(psi, &u)?)
    };
    let names = e1.names();
    let mut elems = e1.generators();
    let mut s = Sampler::new(seed);
    for _ in 0..samples {
        elems.push(e1.sample(&mut s));
    }
    let mut rep = Report::new();
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            let lhs = e2.bracket_at(&chi(x)?, &chi(y)?, &lam())?;
            let rhs = chi(&e1.bracket_at(x, y, &lam())?)?;
            rep.check_eq(format!("intertwine({i},{j})"), None, &names, &lhs, &rhs);
        }
    }
    Ok(rep)
}
