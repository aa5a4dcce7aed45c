//! Lie conformal algebroids on free finite-rank `A[∂]`-modules.

mod construct;
mod gauge;
mod kahler;
mod module;

pub use construct::{quotient_lad, sae_pva, semidirect, transformation_bracket, transformation_lcad};
pub use gauge::{check_gauge_bracket, check_module_to_gauge, gauge_bracket, gauge_check, module_to_gauge, Carrier, GaugePair};
pub use kahler::{kahler_d, kahler_lcad, lift_conformal_derivation, lift_derivation};
pub use module::{check_module, dual_element, dual_eval_at, dual_module, LCAdModule};

use crate::diffalg::{guard, AlgebraSig};
use crate::error::{Error, Result};
use crate::lambda::{adj_term, fresh, resolve, shift_pow, star, subst_affine, LAM, MU};
use crate::poly::{q, Names, Poly, Var};
use crate::pva::CDerElement;
use crate::report::Report;
use crate::sample::Sampler;

pub(crate) fn lam() -> Poly {
    Poly::lam(LAM)
}

pub(crate) fn mu() -> Poly {
    Poly::lam(MU)
}

/// A λ-bracket with anchor on some `A[∂]`-module whose elements are encoded
/// as polynomials. The generic verifier [`check_lcad`] only needs this.
pub trait Algebroid {
    fn sig(&self) -> &AlgebraSig;
    fn names(&self) -> Names;
    /// Generators of the module over `A[∂]`.
    fn generators(&self) -> Vec<Poly>;
    fn bracket_at(&self, x: &Poly, y: &Poly, at: &Poly) -> Result<Poly>;
    fn anchor_at(&self, x: &Poly, f: &Poly, at: &Poly) -> Result<Poly>;

    /// `a(∂)g` for a random operator and a random generator `g`.
    fn sample(&self, s: &mut Sampler) -> Poly {
        let gens = self.generators();
        let g = &gens[s.index(gens.len())];
        let a = s.op(self.sig().rank());
        a.apply(g)
    }
}

/// Term `c · ∂^n e_a` of an element of a free module.
pub(crate) type ETerm = (usize, u16, Poly);

pub(crate) fn e_terms(v: &Poly) -> Result<Vec<ETerm>> {
    let (parts, free) = v.linear_parts(|w| matches!(w, Var::E(..))).ok_or(Error::NotLinear)?;
    if !free.is_zero() {
        return Err(Error::NotLinear);
    }
    Ok(parts
        .into_iter()
        .map(|(w, c)| match w {
            Var::E(a, n) => (a as usize, n, c),
            _ => unreachable!(),
        })
        .collect())
}

pub(crate) fn evar(a: usize, n: u16) -> Poly {
    Poly::var(Var::E(a as u16, n))
}

/// `θ(e)*_{s}(c) = (|_{y=∂} θ(e)_{−s−y}(c))`.
pub(crate) fn cder_star_at(t: &CDerElement, c: &Poly, s: &Poly) -> Poly {
    let y = fresh();
    resolve(&t.apply_at(c, &-&(s + &Poly::var(y))), y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LCAdStructure {
    pub sig: AlgebraSig,
    pub egens: Vec<String>,
    /// `[e_a λ e_b]`, linear in `E` variables.
    pub bracket: Vec<Vec<Poly>>,
    /// `θ(e_a)` as a conformal derivation.
    pub anchor: Vec<CDerElement>,
}

impl LCAdStructure {
    pub fn new(sig: AlgebraSig, egens: Vec<String>, bracket: Vec<Vec<Poly>>, anchor: Vec<CDerElement>) -> Result<LCAdStructure> {
        let m = egens.len();
        if bracket.len() != m || bracket.iter().any(|r| r.len() != m) {
            return Err(Error::Signature(format!("bracket table must be {m}x{m}")));
        }
        if anchor.len() != m || anchor.iter().any(|t| t.values.len() != sig.rank()) {
            return Err(Error::Signature("anchor table has the wrong shape".into()));
        }
        for row in &bracket {
            for b in row {
                e_terms(b)?;
            }
        }
        Ok(LCAdStructure { sig, egens, bracket, anchor })
    }

    pub fn rank(&self) -> usize {
        self.egens.len()
    }

    pub fn gen(&self, a: usize) -> Poly {
        evar(a, 0)
    }

    fn anchor_bound(&self, v: &Poly, f: &Poly, z: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (a, n, c) in e_terms(v)? {
            let x = fresh();
            let inner = self.anchor[a].apply_at(f, &(z + &Poly::var(x)));
            out += &adj_term(n, &c, z, &inner, x);
        }
        Ok(out)
    }

    fn bracket_terms(&self, (a, n, c): &ETerm, (b, k, cb): &ETerm, z: &Poly) -> Poly {
        let x = fresh();
        let xp = Poly::var(x);
        let zx = z + &xp;
        let mut out = Poly::zero();
        // (|_{x=∂} a*(λ)) b(λ+x+y)(|_{y=∂}[u_{λ+x} v])
        let bab = &self.bracket[*a][*b];
        if !bab.is_zero() {
            let inner = cb * &shift_pow(&zx, *k as u32, &bab.subst(Var::Lam(LAM), &zx));
            out += &adj_term(*n, c, z, &inner, x);
        }
        // (|_{x=∂} a*(λ)) θ(u)_{λ+x}(b(y))(|_{y=∂} v)
        let t = self.anchor[*a].apply_at(cb, &zx);
        if !t.is_zero() {
            out += &adj_term(*n, c, z, &(&t * &evar(*b, *k)), x);
        }
        // − b(λ+x+y)(|_{y=∂} θ(v)*_{λ+x}(a(x)))(|_{x=∂} u)
        let s = cder_star_at(&self.anchor[*b], c, &zx);
        if !s.is_zero() {
            let h = cb * &shift_pow(&zx, *k as u32, &(&xp.pow(*n as u32) * &s));
            for (m, hm) in h.coeffs(x).into_iter().enumerate() {
                out -= &(&hm * &evar(*a, m as u16));
            }
        }
        out
    }

    fn bracket_bound(&self, v: &Poly, w: &Poly, z: &Poly) -> Result<Poly> {
        let tv = e_terms(v)?;
        let tw = e_terms(w)?;
        let mut out = Poly::zero();
        for s in &tv {
            for t in &tw {
                out += &self.bracket_terms(s, t, z);
                guard(&out)?;
            }
        }
        Ok(out)
    }
}

impl Algebroid for LCAdStructure {
    fn sig(&self) -> &AlgebraSig {
        &self.sig
    }

    fn names(&self) -> Names {
        let mut n = self.sig.names();
        n.egens = self.egens.clone();
        n
    }

    fn generators(&self) -> Vec<Poly> {
        (0..self.rank()).map(|a| self.gen(a)).collect()
    }

    fn bracket_at(&self, x: &Poly, y: &Poly, at: &Poly) -> Result<Poly> {
        let z = fresh();
        Ok(self.bracket_bound(x, y, &Poly::var(z))?.subst(z, at))
    }

    fn anchor_at(&self, x: &Poly, f: &Poly, at: &Poly) -> Result<Poly> {
        let z = fresh();
        Ok(self.anchor_bound(x, f, &Poly::var(z))?.subst(z, at))
    }
}

pub fn anchor_apply(l: &LCAdStructure, v: &Poly, f: &Poly) -> Result<Poly> {
    l.anchor_at(v, f, &lam())
}

pub fn lcad_bracket(l: &LCAdStructure, v: &Poly, w: &Poly) -> Result<Poly> {
    l.bracket_at(v, w, &lam())
}

/// `J_{s,t}(x,y,z) = [x_s[y_t z]] − [y_t[x_s z]] − [[x_s y]_{s+t} z]`.
pub fn jacobiator<L: Algebroid + ?Sized>(l: &L, x: &Poly, y: &Poly, z: &Poly, s: &Poly, t: &Poly) -> Result<Poly> {
    let yz = l.bracket_at(y, z, t)?;
    let xz = l.bracket_at(x, z, s)?;
    let xy = l.bracket_at(x, y, s)?;
    let mut j = l.bracket_at(x, &yz, s)?;
    j -= &l.bracket_at(y, &xz, t)?;
    j -= &l.bracket_at(&xy, z, &(s + t))?;
    Ok(j)
}

/// Both sides of condition (ii) applied to `f`:
/// `θ([x_λ y])_μ(f)` and `θ(x)_λ(θ(y)_{μ−λ}(f)) − θ(y)_{μ−λ}(θ(x)_λ(f))`.
pub fn anchor_hom_sides<L: Algebroid + ?Sized>(l: &L, x: &Poly, y: &Poly, f: &Poly) -> Result<(Poly, Poly)> {
    let xy = l.bracket_at(x, y, &lam())?;
    let lhs = l.anchor_at(&xy, f, &mu())?;
    let ml = &mu() - &lam();
    let yf = l.anchor_at(y, f, &ml)?;
    let xf = l.anchor_at(x, f, &lam())?;
    let rhs = &l.anchor_at(x, &yf, &lam())? - &l.anchor_at(y, &xf, &ml)?;
    Ok((lhs, rhs))
}

fn skew_sides<L: Algebroid + ?Sized>(l: &L, x: &Poly, y: &Poly) -> Result<(Poly, Poly)> {
    let yx = l.bracket_at(y, x, &lam())?;
    let xy = l.bracket_at(x, y, &lam())?;
    Ok((yx, -&star(&xy, Var::Lam(LAM))))
}

/// Skewsymmetry on generator pairs, Jacobi on generator triples and
/// condition (ii) on generator pairs against algebra generators.
pub fn check_lcad<L: Algebroid + ?Sized>(l: &L) -> Result<Report> {
    let names = l.names();
    let gens = l.generators();
    let mut rep = Report::new();
    let zero = Poly::zero();
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate().skip(i) {
            let (lhs, rhs) = skew_sides(l, x, y)?;
            rep.check_eq(format!("skew({i},{j})"), None, &names, &lhs, &rhs);
        }
    }
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate() {
            for (k, z) in gens.iter().enumerate() {
                let jac = jacobiator(l, x, y, z, &lam(), &mu())?;
                rep.check_eq(format!("jacobi({i},{j},{k})"), None, &names, &jac, &zero);
            }
        }
    }
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate() {
            for g in 0..l.sig().rank() {
                let f = Poly::var(Var::U(g as u16, 0));
                let (lhs, rhs) = anchor_hom_sides(l, x, y, &f)?;
                rep.check_eq(format!("anchor({i},{j};{g})"), None, &names, &lhs, &rhs);
            }
        }
    }
    Ok(rep)
}

/// The generators lemma on seeded `a(∂)g` samples: skewsymmetry, Jacobi,
/// condition (ii), and the two Jacobiator identities.
pub fn check_lcad_samples<L: Algebroid + ?Sized>(l: &L, seed: u64, count: usize) -> Result<Report> {
    let names = l.names();
    let mut s = Sampler::new(seed);
    let mut rep = Report::new();
    let zero = Poly::zero();
    let r = l.sig().rank();
    for t in 0..count {
        let x = l.sample(&mut s);
        let y = l.sample(&mut s);
        let z = l.sample(&mut s);
        let (lhs, rhs) = skew_sides(l, &x, &y)?;
        rep.check_eq(format!("sample{t}.skew"), None, &names, &lhs, &rhs);
        let jac = jacobiator(l, &x, &y, &z, &lam(), &mu())?;
        rep.check_eq(format!("sample{t}.jacobi"), None, &names, &jac, &zero);
        let f = s.poly(r, 2, 1, 2);
        let (lhs, rhs) = anchor_hom_sides(l, &x, &y, &f)?;
        rep.check_eq(format!("sample{t}.anchor"), None, &names, &lhs, &rhs);

        // J_{λ,μ}(x,y,c(∂)z) = c(λ+μ+∂) J_{λ,μ}(x,y,z)
        let gens = l.generators();
        let (x0, y0, z0) = (&gens[s.index(gens.len())], &gens[s.index(gens.len())], &gens[s.index(gens.len())]);
        let c = s.op(r);
        let lhs = jacobiator(l, x0, y0, &c.apply(z0), &lam(), &mu())?;
        let j0 = jacobiator(l, x0, y0, z0, &lam(), &mu())?;
        let rhs = crate::lambda::eval_shifted(&c, &(&lam() + &mu()), &j0);
        rep.check_eq(format!("sample{t}.jacobi_covariance"), None, &names, &lhs, &rhs);

        // J_{λ,μ}(x,y,z) = (|_{x=∂} J_{μ,−λ−μ−x}(y,z,x))
        let nu = fresh();
        let cyc = jacobiator(l, &y, &z, &x, &mu(), &Poly::var(nu))?;
        let rhs = subst_affine(&cyc, nu, &-&(&lam() + &mu()), &q(-1));
        rep.check_eq(format!("sample{t}.jacobi_cyclic"), None, &names, &jac, &rhs);
    }
    Ok(rep)
}
