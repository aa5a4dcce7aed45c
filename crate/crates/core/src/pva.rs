//! Poisson vertex algebras on differential polynomial algebras.

use crate::diffalg::{guard, AlgebraSig};
use crate::error::{Error, Result};
use crate::lambda::{fresh, marker, shift_pow, star, LAM, MU};
use crate::poly::{Names, Poly, Var};
use crate::report::Report;
use crate::sample::Sampler;

/// `{u_i λ u_j}` for every ordered pair, in the variable `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PVAStructure {
    pub sig: AlgebraSig,
    pub table: Vec<Vec<Poly>>,
}

fn lam() -> Poly {
    Poly::lam(LAM)
}

fn mu() -> Poly {
    Poly::lam(MU)
}

/// Jet variables `U(i, n)` occurring in `p`.
pub(crate) fn u_jets(p: &Poly) -> Vec<(u16, u16)> {
    p.vars()
        .into_iter()
        .filter_map(|v| match v {
            Var::U(i, n) => Some((i, n)),
            _ => None,
        })
        .collect()
}

impl PVAStructure {
    pub fn new(sig: AlgebraSig, table: Vec<Vec<Poly>>) -> Result<PVAStructure> {
        let r = sig.rank();
        if table.len() != r || table.iter().any(|row| row.len() != r) {
            return Err(Error::Signature(format!("bracket table must be {r}x{r}")));
        }
        Ok(PVAStructure { sig, table })
    }

    /// Build from given ordered pairs; a missing pair is filled by
    /// skewsymmetry from its transpose, or zero if both are missing.
    pub fn from_entries(sig: AlgebraSig, entries: &[(usize, usize, Poly)]) -> Result<PVAStructure> {
        let r = sig.rank();
        let mut table: Vec<Vec<Option<Poly>>> = vec![vec![None; r]; r];
        for (i, j, h) in entries {
            if *i >= r || *j >= r {
                return Err(Error::UnknownGenerator((*i).max(*j)));
            }
            table[*i][*j] = Some(h.clone());
        }
        let mut full = vec![vec![Poly::zero(); r]; r];
        for i in 0..r {
            for j in 0..r {
                full[i][j] = match (&table[i][j], &table[j][i]) {
                    (Some(h), _) => h.clone(),
                    (None, Some(h)) => -&star(h, Var::Lam(LAM)),
                    (None, None) => Poly::zero(),
                };
            }
        }
        PVAStructure::new(sig, full)
    }

    pub fn rank(&self) -> usize {
        self.sig.rank()
    }

    pub fn names(&self) -> Names {
        self.sig.names()
    }

    pub fn gen(&self, i: usize) -> Poly {
        Poly::var(Var::U(i as u16, 0))
    }

    /// `{f_z u_j}` for a bound `z`, via sesquilinearity and right Leibniz.
    fn bracket_with_gen(&self, f: &Poly, j: usize, z: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (i, m) in u_jets(f) {
            let h = &self.table[i as usize][j];
            if h.is_zero() {
                continue;
            }
            let x = fresh();
            let zx = z + &Poly::var(x);
            let shifted = h.subst(Var::Lam(LAM), &zx);
            let kernel = &(-&zx).pow(m as u32) * &shifted;
            out += &marker(&kernel, x, &f.partial(Var::U(i, m)));
        }
        out
    }

    fn bracket_bound(&self, f: &Poly, g: &Poly, z: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        let mut cache: Vec<Option<Poly>> = vec![None; self.rank()];
        for (j, n) in u_jets(g) {
            let kj = cache[j as usize].get_or_insert_with(|| self.bracket_with_gen(f, j as usize, z)).clone();
            if kj.is_zero() {
                continue;
            }
            out += &(&g.partial(Var::U(j, n)) * &shift_pow(z, n as u32, &kj));
            guard(&out)?;
        }
        Ok(out)
    }

    /// `{f_λ g}` with λ replaced by `at` (any polynomial in λ-variables).
    pub fn bracket_at(&self, f: &Poly, g: &Poly, at: &Poly) -> Result<Poly> {
        let z = fresh();
        let out = self.bracket_bound(f, g, &Poly::var(z))?;
        Ok(out.subst(z, at))
    }

    pub fn bracket(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.bracket_at(f, g, &lam())
    }

    /// Jacobi defect `{a_λ{b_μ c}} − {b_μ{a_λ c}} − {{a_λ b}_{λ+μ} c}` as
    /// (left, right) sides.
    pub fn jacobi_sides(&self, a: &Poly, b: &Poly, c: &Poly) -> Result<(Poly, Poly)> {
        let bc = self.bracket_at(b, c, &mu())?;
        let ac = self.bracket_at(a, c, &lam())?;
        let ab = self.bracket_at(a, b, &lam())?;
        let lhs = &self.bracket_at(a, &bc, &lam())? - &self.bracket_at(b, &ac, &mu())?;
        let rhs = self.bracket_at(&ab, c, &(&lam() + &mu()))?;
        Ok((lhs, rhs))
    }
}

pub fn pva_bracket(p: &PVAStructure, f: &Poly, g: &Poly) -> Result<Poly> {
    p.bracket(f, g)
}

/// Skewsymmetry on generator pairs, Jacobi on generator triples.
pub fn check_pva(p: &PVAStructure) -> Result<Report> {
    let names = p.names();
    let mut rep = Report::new();
    let r = p.rank();
    for i in 0..r {
        for j in i..r {
            let lhs = p.table[j][i].clone();
            let rhs = -&star(&p.table[i][j], Var::Lam(LAM));
            rep.check_eq(format!("skew({},{})", p.sig.gens[i], p.sig.gens[j]), None, &names, &lhs, &rhs);
        }
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let (lhs, rhs) = p.jacobi_sides(&p.gen(i), &p.gen(j), &p.gen(k))?;
                rep.check_eq(
                    format!("jacobi({},{},{})", p.sig.gens[i], p.sig.gens[j], p.sig.gens[k]),
                    None,
                    &names,
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    Ok(rep)
}

/// Skewsymmetry and Jacobi on random non-generator elements.
pub fn check_pva_samples(p: &PVAStructure, seed: u64, count: usize) -> Result<Report> {
    let names = p.names();
    let mut rep = Report::new();
    let mut s = Sampler::new(seed);
    let r = p.rank();
    for t in 0..count {
        let f = s.poly(r, 2, 1, 2);
        let g = s.poly(r, 2, 1, 2);
        let h = s.poly(r, 2, 1, 2);
        let fg = p.bracket(&f, &g)?;
        let gf = p.bracket(&g, &f)?;
        rep.check_eq(format!("sample{t}.skew"), None, &names, &gf, &-&star(&fg, Var::Lam(LAM)));
        let (lhs, rhs) = p.jacobi_sides(&f, &g, &h)?;
        rep.check_eq(format!("sample{t}.jacobi"), None, &names, &lhs, &rhs);
    }
    Ok(rep)
}

/// A conformal derivation of `A`, given by its values `F_i(λ)` on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CDerElement {
    pub values: Vec<Poly>,
}

impl CDerElement {
    pub fn zero(r: usize) -> CDerElement {
        CDerElement { values: vec![Poly::zero(); r] }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Poly::is_zero)
    }

    /// `σ_λ(p) = Σ ∂p/∂u_i^(n) (λ+∂)^n F_i(λ)`, with λ replaced by `at`.
    pub fn apply_at(&self, p: &Poly, at: &Poly) -> Poly {
        self.apply_in(p, LAM, at)
    }

    /// As [`CDerElement::apply_at`] for values written in the λ-variable `var`.
    pub fn apply_in(&self, p: &Poly, var: u32, at: &Poly) -> Poly {
        let z = fresh();
        let zp = Poly::var(z);
        let mut out = Poly::zero();
        for (i, n) in u_jets(p) {
            let Some(fi) = self.values.get(i as usize) else {
                continue;
            };
            if fi.is_zero() {
                continue;
            }
            let fz = fi.subst(Var::Lam(var), &zp);
            out += &(&p.partial(Var::U(i, n)) * &shift_pow(&zp, n as u32, &fz));
        }
        out.subst(z, at)
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        self.apply_at(p, &lam())
    }

    /// `[σ_λ τ]_μ(u_i) = σ_λ(τ_{μ−λ}(u_i)) − τ_{μ−λ}(σ_λ(u_i))`, in λ and μ.
    pub fn commutator(&self, other: &CDerElement) -> Vec<Poly> {
        let ml = &mu() - &lam();
        (0..self.values.len())
            .map(|i| {
                let ui = Poly::var(Var::U(i as u16, 0));
                let t = other.apply_at(&ui, &ml);
                let s = self.apply_at(&ui, &lam());
                &self.apply_at(&t, &lam()) - &other.apply_at(&s, &ml)
            })
            .collect()
    }
}

pub fn hamiltonian_cder(p: &PVAStructure, f: &Poly) -> Result<CDerElement> {
    let values = (0..p.rank()).map(|i| p.bracket(f, &p.gen(i))).collect::<Result<_>>()?;
    Ok(CDerElement { values })
}

/// `γ_λ({a_μ b}) = {γ_λ(a)_{λ+μ} b} + {a_μ γ_λ(b)}` on generator pairs.
pub fn in_b(p: &PVAStructure, g: &CDerElement) -> Result<bool> {
    let lm = &lam() + &mu();
    for i in 0..p.rank() {
        for j in 0..p.rank() {
            let hij = p.table[i][j].subst(Var::Lam(LAM), &mu());
            let lhs = g.apply_at(&hij, &lam());
            let gi = g.apply_at(&p.gen(i), &lam());
            let gj = g.apply_at(&p.gen(j), &lam());
            let rhs = &p.bracket_at(&gi, &p.gen(j), &lm)? + &p.bracket_at(&p.gen(i), &gj, &mu())?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_casimir(p: &PVAStructure, a: &Poly) -> Result<bool> {
    for i in 0..p.rank() {
        if !p.bracket(a, &p.gen(i))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A PVA module: the adjoint module, or a free `V[∂]`-module with an action
/// table `u_i λ w_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PVAModule {
    Adjoint,
    Free { names: Vec<String>, table: Vec<Vec<Poly>> },
}

impl PVAModule {
    pub fn free(names: &[&str], table: Vec<Vec<Poly>>) -> PVAModule {
        PVAModule::Free {
            names: names.iter().map(|s| s.to_string()).collect(),
            table,
        }
    }

    /// Generators of the module as a differential module.
    pub fn generators(&self, p: &PVAStructure) -> Vec<Poly> {
        match self {
            PVAModule::Adjoint => (0..p.rank()).map(|i| p.gen(i)).collect(),
            PVAModule::Free { names, .. } => (0..names.len()).map(|l| Poly::var(Var::W(l as u16, 0))).collect(),
        }
    }

    pub fn names(&self, p: &PVAStructure) -> Names {
        let mut n = p.names();
        if let PVAModule::Free { names, .. } = self {
            n.wgens = names.clone();
        }
        n
    }
}

/// `f_λ m`, with λ replaced by `at`.
pub fn pva_module_action_at(p: &PVAStructure, m: &PVAModule, f: &Poly, v: &Poly, at: &Poly) -> Result<Poly> {
    let table = match m {
        PVAModule::Adjoint => return p.bracket_at(f, v, at),
        PVAModule::Free { table, .. } => table,
    };
    let (parts, free) = v.linear_parts(|w| matches!(w, Var::W(..))).ok_or(Error::NotLinear)?;
    if !free.is_zero() {
        return Err(Error::NotLinear);
    }
    let z = fresh();
    let zp = Poly::var(z);
    let on_gen = |l: usize| {
        let mut out = Poly::zero();
        for (i, n) in u_jets(f) {
            let t = &table[i as usize][l];
            if t.is_zero() {
                continue;
            }
            let x = fresh();
            let zx = &zp + &Poly::var(x);
            let kernel = &(-&zx).pow(n as u32) * &t.subst(Var::Lam(LAM), &zx);
            out += &marker(&kernel, x, &f.partial(Var::U(i, n)));
        }
        out
    };
    let mut out = Poly::zero();
    for (w, c) in parts {
        let Var::W(l, n) = w else { unreachable!() };
        out += &(&p.bracket_bound(f, &c, &zp)? * &Poly::var(w));
        out += &(&c * &shift_pow(&zp, n as u32, &on_gen(l as usize)));
        guard(&out)?;
    }
    Ok(out.subst(z, at))
}

pub fn pva_module_action(p: &PVAStructure, m: &PVAModule, f: &Poly, v: &Poly) -> Result<Poly> {
    pva_module_action_at(p, m, f, v, &lam())
}

/// Module Jacobi `f_λ(g_μ m) − g_μ(f_λ m) = {f_λ g}_{λ+μ} m`.
fn module_jacobi(p: &PVAStructure, m: &PVAModule, f: &Poly, g: &Poly, v: &Poly) -> Result<(Poly, Poly)> {
    let gv = pva_module_action_at(p, m, g, v, &mu())?;
    let fv = pva_module_action_at(p, m, f, v, &lam())?;
    let lhs = &pva_module_action_at(p, m, f, &gv, &lam())? - &pva_module_action_at(p, m, g, &fv, &mu())?;
    let fg = p.bracket(f, g)?;
    let rhs = pva_module_action_at(p, m, &fg, v, &(&lam() + &mu()))?;
    Ok((lhs, rhs))
}

/// Jacobi for the action on generator pairs against module generators, plus
/// seeded random elements.
pub fn check_pva_module(p: &PVAStructure, m: &PVAModule, seed: u64, samples: usize) -> Result<Report> {
    let names = m.names(p);
    let mut rep = Report::new();
    let gens = m.generators(p);
    for i in 0..p.rank() {
        for j in 0..p.rank() {
            for (l, w) in gens.iter().enumerate() {
                let (lhs, rhs) = module_jacobi(p, m, &p.gen(i), &p.gen(j), w)?;
                rep.check_eq(format!("module.jacobi({i},{j};{l})"), None, &names, &lhs, &rhs);
            }
        }
    }
    let mut s = Sampler::new(seed);
    for t in 0..samples {
        let f = s.poly(p.rank(), 2, 1, 2);
        let g = s.poly(p.rank(), 2, 1, 2);
        let w = gens[s.index(gens.len())].clone();
        let v = match m {
            PVAModule::Adjoint => s.poly(p.rank(), 2, 1, 2),
            PVAModule::Free { .. } => &s.poly(p.rank(), 1, 1, 2) * &w.dn(s.int(0, 1) as u32),
        };
        let (lhs, rhs) = module_jacobi(p, m, &f, &g, &v)?;
        rep.check_eq(format!("module.sample{t}"), None, &names, &lhs, &rhs);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn u(n: u16) -> Poly {
        Poly::var(Var::U(0, n))
    }

    fn gfz() -> PVAStructure {
        PVAStructure::new(AlgebraSig::new(&["u"], &[]), vec![vec![lam()]]).unwrap()
    }

    fn vir() -> PVAStructure {
        let c = Poly::var(Var::Param(0));
        let h = &(&u(1) + &(&lam() * &u(0)).scale(&q(2))) + &(&c * &lam().pow(3));
        PVAStructure::new(AlgebraSig::new(&["u"], &["c"]), vec![vec![h]]).unwrap()
    }

    #[test]
    fn gfz_examples() {
        let p = gfz();
        let uu = &u(0) * &u(0);
        let want = &(&lam() * &u(0)).scale(&q(2)) + &u(1).scale(&q(2));
        assert_eq!(p.bracket(&uu, &u(0)).unwrap(), want);
        let want2 = &(&lam() * &uu).scale(&q(4)) + &(&u(0) * &u(1)).scale(&q(4));
        assert_eq!(p.bracket(&uu, &uu).unwrap(), want2);
        assert!(p.bracket(&Poly::one(), &uu).unwrap().is_zero());
    }

    #[test]
    fn catalogue_passes() {
        assert!(check_pva(&gfz()).unwrap().pass());
        assert!(check_pva(&vir()).unwrap().pass());
        assert!(check_pva_samples(&vir(), 7, 3).unwrap().pass());
    }

    #[test]
    fn broken_table_fails_skew() {
        let p = PVAStructure::new(AlgebraSig::new(&["u"], &[]), vec![vec![u(0)]]).unwrap();
        let rep = check_pva(&p).unwrap();
        assert!(rep.failures().any(|r| r.id.starts_with("skew")));
    }

    #[test]
    fn casimirs() {
        assert!(is_casimir(&gfz(), &Poly::one()).unwrap());
        assert!(!is_casimir(&gfz(), &u(0)).unwrap());
    }

    #[test]
    fn membership_in_b() {
        let p = gfz();
        assert!(in_b(&p, &CDerElement { values: vec![Poly::one()] }).unwrap());
        let x = hamiltonian_cder(&vir(), &(&u(0) * &u(1))).unwrap();
        assert!(in_b(&vir(), &x).unwrap());
        let bad = CDerElement { values: vec![&u(0) * &u(0)] };
        assert!(!in_b(&vir(), &bad).unwrap());
    }

    #[test]
    fn free_module_leibniz() {
        let p = gfz();
        let m = PVAModule::free(&["w"], vec![vec![Poly::var(Var::W(0, 0))]]);
        let w = Poly::var(Var::W(0, 0));
        let got = pva_module_action(&p, &m, &(&u(0) * &u(0)), &w).unwrap();
        assert_eq!(got, (&u(0) * &w).scale(&q(2)));
        assert!(pva_module_action(&p, &m, &Poly::one(), &w).unwrap().is_zero());
    }

    #[test]
    fn adjoint_module_passes() {
        assert!(check_pva_module(&vir(), &PVAModule::Adjoint, 3, 2).unwrap().pass());
    }
}
