use crate::diffalg::{AlgebraSig, OpPoly};
use crate::error::{Error, Result};
use crate::lambda::{eval_shifted, fresh, shift_pow, LAM, MU};
use crate::poly::{Poly, Var};
use crate::pva::{CDerElement, PVAModule};
use crate::report::Report;
use crate::sample::Sampler;

use super::{lam, mu, Algebroid, LCAdModule, LCAdStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Carrier {
    /// `M = A`.
    Algebra,
    /// `M` free of the given rank.
    Free(usize),
}

/// An element `(φ, σ)` of `CEnd(M) ⊕ CDer(A)`.
///
/// On a free carrier, `φ` is given by its values on the generators and is
/// extended to coefficients through `tau`; on `M = A` it is the conformal
/// derivation `tau`. The pair lies in the gauge algebroid iff `tau = σ`.
/// All values are written in the λ-variable `var`; other λ's are scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugePair {
    pub carrier: Carrier,
    pub var: u32,
    pub phi: Vec<Poly>,
    pub tau: CDerElement,
    pub sigma: CDerElement,
}

impl GaugePair {
    pub fn new(carrier: Carrier, phi: Vec<Poly>, sigma: CDerElement) -> GaugePair {
        GaugePair {
            carrier,
            var: LAM,
            phi,
            tau: sigma.clone(),
            sigma,
        }
    }

    pub fn with_phi_derivation(mut self, tau: CDerElement) -> GaugePair {
        self.tau = tau;
        self
    }

    pub fn phi_at(&self, m: &Poly, at: &Poly) -> Result<Poly> {
        match self.carrier {
            Carrier::Algebra => Ok(self.tau.apply_in(m, self.var, at)),
            Carrier::Free(_) => {
                let (parts, free) = m.linear_parts(|w| matches!(w, Var::W(..))).ok_or(Error::NotLinear)?;
                if !free.is_zero() {
                    return Err(Error::NotLinear);
                }
                let z = fresh();
                let zp = Poly::var(z);
                let mut out = Poly::zero();
                for (w, c) in parts {
                    let Var::W(l, n) = w else { unreachable!() };
                    out += &(&self.tau.apply_in(&c, self.var, &zp) * &Poly::var(w));
                    let p = self.phi[l as usize].subst(Var::Lam(self.var), &zp);
                    out += &(&c * &shift_pow(&zp, n as u32, &p));
                }
                Ok(out.subst(z, at))
            }
        }
    }

    pub fn sigma_at(&self, f: &Poly, at: &Poly) -> Poly {
        self.sigma.apply_in(f, self.var, at)
    }

    fn elements(&self, rank: usize) -> Vec<Poly> {
        match self.carrier {
            Carrier::Algebra => {
                let mut v = vec![Poly::one()];
                v.extend((0..rank).map(|i| Poly::var(Var::U(i as u16, 0))));
                v
            }
            Carrier::Free(k) => (0..k).map(|l| Poly::var(Var::W(l as u16, 0))).collect(),
        }
    }
}

fn test_ops(rank: usize, seed: u64) -> Vec<OpPoly> {
    let mut ops = vec![OpPoly::d(), OpPoly::monomial(Poly::one(), 2)];
    for j in 0..rank {
        let u = Poly::var(Var::U(j as u16, 0));
        ops.push(OpPoly::scalar(u.clone()));
        ops.push(OpPoly::monomial(u, 1));
    }
    let mut s = Sampler::new(seed);
    ops.extend((0..5).map(|_| s.op(rank)));
    ops
}

/// `φ_λ(a(∂)u) = σ_λ(a(x))(|_{x=∂}u) + a(λ+x)(|_{x=∂}φ_λ(u))` on carrier
/// generators and a fixed family of operators plus seeded ones.
pub fn gauge_check(sig: &AlgebraSig, g: &GaugePair, seed: u64) -> Result<bool> {
    let at = Poly::lam(g.var);
    for w in g.elements(sig.rank()) {
        let pw = g.phi_at(&w, &at)?;
        for a in test_ops(sig.rank(), seed) {
            let lhs = g.phi_at(&a.apply(&w), &at)?;
            let mut rhs = eval_shifted(&a, &at, &pw);
            let mut dw = w.clone();
            for ai in a.coeffs() {
                rhs += &(&g.sigma_at(ai, &at) * &dw);
                dw = dw.d();
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `[(φ,σ)_λ(ψ,τ)]` as a family in μ with λ as a scalar.
pub fn gauge_bracket(g1: &GaugePair, g2: &GaugePair) -> Result<GaugePair> {
    if g1.carrier != g2.carrier || g1.var != LAM || g2.var != LAM {
        return Err(Error::Precondition("gauge pairs must share a carrier and be written in λ".into()));
    }
    let ml = &mu() - &lam();
    let phi = match g1.carrier {
        Carrier::Algebra => Vec::new(),
        Carrier::Free(k) => (0..k)
            .map(|l| {
                let w = Poly::var(Var::W(l as u16, 0));
                let a = g1.phi_at(&g2.phi_at(&w, &ml)?, &lam())?;
                let b = g2.phi_at(&g1.phi_at(&w, &lam())?, &ml)?;
                Ok(&a - &b)
            })
            .collect::<Result<_>>()?,
    };
    Ok(GaugePair {
        carrier: g1.carrier,
        var: MU,
        phi,
        tau: CDerElement {
            values: g1.tau.commutator(&g2.tau),
        },
        sigma: CDerElement {
            values: g1.sigma.commutator(&g2.sigma),
        },
    })
}

/// The bracket family evaluated through its generator values agrees with the
/// direct commutator on seeded `a(∂)u`, for both components.
pub fn check_gauge_bracket(sig: &AlgebraSig, g1: &GaugePair, g2: &GaugePair, seed: u64, samples: usize) -> Result<Report> {
    let fam = gauge_bracket(g1, g2)?;
    let mut names = sig.names();
    names.wgens = Vec::new();
    let ml = &mu() - &lam();
    let mut rep = Report::new();
    let mut s = Sampler::new(seed);
    let elems = g1.elements(sig.rank());
    for t in 0..samples {
        let w = &elems[s.index(elems.len())];
        let a = s.op(sig.rank());
        let m = a.apply(w);
        let direct = &g1.phi_at(&g2.phi_at(&m, &ml)?, &lam())? - &g2.phi_at(&g1.phi_at(&m, &lam())?, &ml)?;
        let via = fam.phi_at(&m, &mu())?;
        rep.check_eq(format!("gauge.sample{t}.phi"), None, &names, &direct, &via);

        let f = s.poly(sig.rank(), 2, 1, 2);
        let direct = &g1.sigma_at(&g2.sigma_at(&f, &ml), &lam()) - &g2.sigma_at(&g1.sigma_at(&f, &lam()), &ml);
        rep.check_eq(format!("gauge.sample{t}.sigma"), None, &names, &direct, &fam.sigma_at(&f, &mu()));
    }
    rep.flag("gauge.bracket_in_G", gauge_check(sig, &fam, seed)?);
    Ok(rep)
}

/// `ρ(e_a) = (φ(e_a), θ(e_a))` for a module of trivial, free or transferred kind.
pub fn module_to_gauge(l: &LCAdStructure, m: &LCAdModule) -> Result<Vec<GaugePair>> {
    let pairs = (0..l.rank()).map(|a| {
        let sigma = l.anchor[a].clone();
        match m {
            LCAdModule::Trivial
            | LCAdModule::Transfer {
                module: PVAModule::Adjoint, ..
            } => Ok(GaugePair::new(Carrier::Algebra, Vec::new(), sigma)),
            LCAdModule::Free { table, .. }
            | LCAdModule::Transfer {
                module: PVAModule::Free { table, .. },
                ..
            } => Ok(GaugePair::new(Carrier::Free(table[a].len()), table[a].clone(), sigma)),
            LCAdModule::Dual { .. } => Err(Error::Precondition("dual modules have no gauge table".into())),
        }
    });
    pairs.collect()
}

/// Every `ρ(e_a)` lies in the gauge algebroid, and `ρ` intertwines brackets
/// and anchors on generator pairs.
pub fn check_module_to_gauge(l: &LCAdStructure, m: &LCAdModule, seed: u64) -> Result<Report> {
    let rho = module_to_gauge(l, m)?;
    let names = m.names(l);
    let mut rep = Report::new();
    for (a, g) in rho.iter().enumerate() {
        rep.flag(format!("gauge.rho({a})"), gauge_check(&l.sig, g, seed)?);
    }
    for a in 0..l.rank() {
        for b in 0..l.rank() {
            let fam = gauge_bracket(&rho[a], &rho[b])?;
            let bab = &l.bracket[a][b];
            for (k, w) in m.test_elements(l).iter().enumerate() {
                let lhs = m.act_at(l, bab, w, &mu())?;
                rep.check_eq(format!("gauge.hom({a},{b};{k})"), None, &names, &lhs, &fam.phi_at(w, &mu())?);
            }
            for i in 0..l.sig.rank() {
                let ui = Poly::var(Var::U(i as u16, 0));
                let lhs = l.anchor_at(bab, &ui, &mu())?;
                rep.check_eq(format!("gauge.anchor({a},{b};{i})"), None, &names, &lhs, &fam.sigma_at(&ui, &mu()));
            }
        }
    }
    Ok(rep)
}
