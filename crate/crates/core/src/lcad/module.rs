use crate::diffalg::{guard, OpPoly};
use crate::error::{Error, Result};
use crate::lambda::{adjoint_shifted, fresh, shift_pow, LAM, NU};
use crate::poly::{binom, Names, Poly, Var};
use crate::pva::{pva_module_action_at, PVAModule, PVAStructure};
use crate::report::Report;
use crate::sample::Sampler;

use super::{e_terms, lam, mu, Algebroid, LCAdStructure};

/// A module over an LCAd.
///
/// Elements of the dual kind are encoded as `Σ_l φ_ν(w_l)·w_l`, with `ν`
/// the reserved variable [`NU`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LCAdModule {
    /// `A` with `u_λ a = θ(u)_λ(a)`.
    Trivial,
    /// Free of rank k with table `e_a λ w_l`.
    Free { names: Vec<String>, table: Vec<Vec<Poly>> },
    /// A module over the PVA `V`, viewed as a module over `Ω(V)` via
    /// `(du_i)_λ m = u_i λ m`.
    Transfer { pva: PVAStructure, module: PVAModule },
    /// `M†` for a free module `M` with the given table.
    Dual { names: Vec<String>, table: Vec<Vec<Poly>> },
}

fn w_parts(m: &Poly) -> Result<Vec<(u16, u16, Poly)>> {
    let (parts, free) = m.linear_parts(|w| matches!(w, Var::W(..))).ok_or(Error::NotLinear)?;
    if !free.is_zero() {
        return Err(Error::NotLinear);
    }
    Ok(parts
        .into_iter()
        .map(|(w, c)| match w {
            Var::W(l, n) => (l, n, c),
            _ => unreachable!(),
        })
        .collect())
}

fn wvar(l: usize, n: u16) -> Poly {
    Poly::var(Var::W(l as u16, n))
}

/// `a(s+∂)` as an operator with `s` among the coefficients.
fn op_shift(a: &OpPoly, s: &Poly) -> OpPoly {
    let mut out = vec![Poly::zero(); a.coeffs().len()];
    for (i, ai) in a.coeffs().iter().enumerate() {
        for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
            *slot += &(ai * &s.pow((i - j) as u32)).scale(&binom(i as u32, j as u32));
        }
    }
    OpPoly::new(out)
}

/// Encode a dual element from its values `φ_ν(w_l)` (written in `ν`).
pub fn dual_element(values: &[Poly]) -> Poly {
    let mut out = Poly::zero();
    for (l, v) in values.iter().enumerate() {
        out += &(v * &wvar(l, 0));
    }
    out
}

/// `φ_{at}(m)` for a dual element `φ` and an element `m` of the free module.
pub fn dual_eval_at(phi: &Poly, m: &Poly, at: &Poly) -> Result<Poly> {
    let vals = w_parts(phi)?;
    let z = fresh();
    let zp = Poly::var(z);
    let mut out = Poly::zero();
    for (l, n, c) in w_parts(m)? {
        for (l2, n2, v) in &vals {
            if *l2 == l && *n2 == 0 {
                out += &(&c * &shift_pow(&zp, n as u32, &v.subst(Var::Lam(NU), &zp)));
            }
        }
    }
    Ok(out.subst(z, at))
}

/// Apply a λ-family of dual maps componentwise: `value(l)` gives `φ_ν(w_l)`.
fn dual_from(k: usize, mut value: impl FnMut(usize) -> Result<Poly>) -> Result<Poly> {
    let mut out = Poly::zero();
    for l in 0..k {
        out += &(&value(l)? * &wvar(l, 0));
    }
    Ok(out)
}

pub fn dual_module(m: &LCAdModule) -> Result<LCAdModule> {
    match m {
        LCAdModule::Free { names, table } => Ok(LCAdModule::Dual {
            names: names.iter().map(|n| format!("{n}*")).collect(),
            table: table.clone(),
        }),
        _ => Err(Error::Precondition("the dual module is built from a free module".into())),
    }
}

impl LCAdModule {
    pub fn free(names: &[&str], table: Vec<Vec<Poly>>) -> LCAdModule {
        LCAdModule::Free {
            names: names.iter().map(|s| s.to_string()).collect(),
            table,
        }
    }

    fn rank(&self) -> usize {
        match self {
            LCAdModule::Free { names, .. } | LCAdModule::Dual { names, .. } => names.len(),
            _ => 0,
        }
    }

    fn is_algebra(&self) -> bool {
        matches!(
            self,
            LCAdModule::Trivial
                | LCAdModule::Transfer {
                    module: PVAModule::Adjoint,
                    ..
                }
        )
    }

    pub fn names(&self, l: &LCAdStructure) -> Names {
        let mut n = l.names();
        match self {
            LCAdModule::Free { names, .. } | LCAdModule::Dual { names, .. } => n.wgens = names.clone(),
            LCAdModule::Transfer {
                module: PVAModule::Free { names, .. },
                ..
            } => n.wgens = names.clone(),
            _ => {}
        }
        n
    }

    /// Elements used to test the axioms: `1` and the `u_i` for algebra
    /// carriers, the free generators otherwise.
    pub fn test_elements(&self, l: &LCAdStructure) -> Vec<Poly> {
        if self.is_algebra() {
            let mut v = vec![Poly::one()];
            v.extend((0..l.sig.rank()).map(|i| Poly::var(Var::U(i as u16, 0))));
            v
        } else {
            let k = match self {
                LCAdModule::Transfer {
                    module: PVAModule::Free { names, .. },
                    ..
                } => names.len(),
                _ => self.rank(),
            };
            (0..k).map(|i| wvar(i, 0)).collect()
        }
    }

    pub fn sample(&self, l: &LCAdStructure, s: &mut Sampler) -> Poly {
        let r = l.sig.rank();
        if self.is_algebra() {
            return s.poly(r, 2, 1, 2);
        }
        let gens = self.test_elements(l);
        let g = gens[s.index(gens.len())].clone();
        let a = s.op(r);
        self.op(&a, &g)
    }

    /// The `A[∂]`-action `a(∂)m`.
    pub fn op(&self, a: &OpPoly, m: &Poly) -> Poly {
        match self {
            LCAdModule::Dual { .. } => {
                let x = fresh();
                let shifted = m.subst(Var::Lam(NU), &(&Poly::lam(NU) + &Poly::var(x)));
                adjoint_shifted(a, &Poly::lam(NU), &shifted, x)
            }
            _ => a.apply(m),
        }
    }

    /// `e_a λ m` with λ replaced by `at`.
    pub fn act_gen_at(&self, l: &LCAdStructure, a: usize, m: &Poly, at: &Poly) -> Result<Poly> {
        match self {
            LCAdModule::Trivial => Ok(l.anchor[a].apply_at(m, at)),
            LCAdModule::Transfer { pva, module } => pva_module_action_at(pva, module, &Poly::var(Var::U(a as u16, 0)), m, at),
            LCAdModule::Free { table, .. } => {
                let z = fresh();
                let zp = Poly::var(z);
                let mut out = Poly::zero();
                for (w, n, c) in w_parts(m)? {
                    out += &(&l.anchor[a].apply_at(&c, &zp) * &wvar(w as usize, n));
                    let t = table[a][w as usize].subst(Var::Lam(LAM), &zp);
                    out += &(&c * &shift_pow(&zp, n as u32, &t));
                }
                guard(&out)?;
                Ok(out.subst(z, at))
            }
            LCAdModule::Dual { names, table } => {
                // (e_a λ φ)_ν(w_l) = θ(e_a)_λ(φ_{ν−λ}(w_l)) − φ_{ν−λ}(e_a λ w_l)
                let base = LCAdModule::Free {
                    names: names.clone(),
                    table: table.clone(),
                };
                let z = fresh();
                let zp = Poly::var(z);
                let nz = &Poly::lam(NU) - &zp;
                let out = dual_from(names.len(), |k| {
                    let w = wvar(k, 0);
                    let v = dual_eval_at(m, &w, &nz)?;
                    let aw = base.act_gen_at(l, a, &w, &zp)?;
                    Ok(&l.anchor[a].apply_at(&v, &zp) - &dual_eval_at(m, &aw, &nz)?)
                })?;
                Ok(out.subst(z, at))
            }
        }
    }

    /// `v_λ m` for an arbitrary `v ∈ E`, with λ replaced by `at`.
    pub fn act_at(&self, l: &LCAdStructure, v: &Poly, m: &Poly, at: &Poly) -> Result<Poly> {
        let z = fresh();
        let zp = Poly::var(z);
        let mut out = Poly::zero();
        for (a, n, c) in e_terms(v)? {
            let x = fresh();
            let xp = Poly::var(x);
            let f = &(-&(&zp + &xp)).pow(n as u32) * &self.act_gen_at(l, a, m, &(&zp + &xp))?;
            let mut dc = c.clone();
            for fm in f.coeffs(x) {
                if !fm.is_zero() {
                    out += &self.op(&OpPoly::scalar(dc.clone()), &fm);
                }
                dc = dc.d();
            }
            guard(&out)?;
        }
        Ok(out.subst(z, at))
    }
}

/// Module axiom (iii): `[u_λ v]_{λ+μ} m = u_λ(v_μ m) − v_μ(u_λ m)`.
fn axiom_iii(l: &LCAdStructure, md: &LCAdModule, u: &Poly, v: &Poly, m: &Poly) -> Result<(Poly, Poly)> {
    let uv = l.bracket_at(u, v, &lam())?;
    let lhs = md.act_at(l, &uv, m, &(&lam() + &mu()))?;
    let vm = md.act_at(l, v, m, &mu())?;
    let um = md.act_at(l, u, m, &lam())?;
    let rhs = &md.act_at(l, u, &vm, &lam())? - &md.act_at(l, v, &um, &mu())?;
    Ok((lhs, rhs))
}

/// Axioms (iii) on generators, then (i), (ii), (iii) on seeded samples.
pub fn check_module(l: &LCAdStructure, md: &LCAdModule, seed: u64, samples: usize) -> Result<Report> {
    let names = md.names(l);
    let gens = l.generators();
    let elems = md.test_elements(l);
    let mut rep = Report::new();
    for (a, u) in gens.iter().enumerate() {
        for (b, v) in gens.iter().enumerate() {
            for (k, m) in elems.iter().enumerate() {
                let (lhs, rhs) = axiom_iii(l, md, u, v, m)?;
                rep.check_eq(format!("module.iii({a},{b};{k})"), None, &names, &lhs, &rhs);
            }
        }
    }
    let mut s = Sampler::new(seed);
    let r = l.sig.rank();
    for t in 0..samples {
        let u = l.sample(&mut s);
        let v = l.sample(&mut s);
        let m = md.sample(l, &mut s);
        let a = s.op(r);

        let lhs = md.act_at(l, &u, &md.op(&a, &m), &lam())?;
        let um = md.act_at(l, &u, &m, &lam())?;
        let ta = OpPoly::new(a.coeffs().iter().map(|ai| l.anchor_at(&u, ai, &lam())).collect::<Result<_>>()?);
        let rhs = &md.op(&op_shift(&a, &lam()), &um) + &md.op(&ta, &m);
        rep.check_eq(format!("module.sample{t}.i"), None, &names, &lhs, &rhs);

        let lhs = md.act_at(l, &a.apply(&u), &m, &lam())?;
        let x = fresh();
        let shifted = md.act_at(l, &u, &m, &(&lam() + &Poly::var(x)))?;
        let mut rhs = Poly::zero();
        for (n, c) in a.coeffs().iter().enumerate() {
            let f = &(-&(&lam() + &Poly::var(x))).pow(n as u32) * &shifted;
            let mut dc = c.clone();
            for fm in f.coeffs(x) {
                rhs += &md.op(&OpPoly::scalar(dc.clone()), &fm);
                dc = dc.d();
            }
        }
        rep.check_eq(format!("module.sample{t}.ii"), None, &names, &lhs, &rhs);

        let (lhs, rhs) = axiom_iii(l, md, &u, &v, &m)?;
        rep.check_eq(format!("module.sample{t}.iii"), None, &names, &lhs, &rhs);
    }
    Ok(rep)
}
