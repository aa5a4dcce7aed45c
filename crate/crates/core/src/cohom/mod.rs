//! Cochain complexes of LCAds and PVAs with coefficients in a module.
//!
//! A k-cochain is stored by its values on non-decreasing generator tuples,
//! written in the slot variables `λ_1..λ_k` (`lam_k(i)`). Values on other
//! tuples and on arbitrary arguments are reconstructed on demand.

mod ext;

pub use ext::{check_intertwining, coboundary, cocycle_check, cocycle_cochain, extension_from_cocycle, omega_at, AbelianExtension, CocycleData};

use std::collections::BTreeMap;

use crate::diffalg::{guard, in_partial_image};
use crate::error::{Error, Result};
use crate::lambda::{exact_divide_shift, fresh, lam_k, marker, q_split, quot_normalize, times_shift};
use crate::lcad::{e_terms, kahler_lcad, Algebroid, Carrier, LCAdModule, LCAdStructure};
use crate::poly::{q, Names, Poly, Var, Q};
use crate::pva::{pva_module_action_at, u_jets, PVAModule, PVAStructure};
use crate::report::Report;
use crate::sample::Sampler;

/// Largest degree a differential may produce.
pub const MAX_TARGET_DEGREE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Repr {
    /// Values modulo `⟨∂+λ_1+…+λ_k⟩`, stored with `λ_k` eliminated.
    Quotient,
    /// Values in `M[λ_1..λ_k]`.
    Basic,
    /// Basic values modulo the image of the ∂-action.
    Reduced,
}

/// `(generator, n, c)`: the argument term `c ∂^n g`.
pub type SlotTerm = (usize, u16, Poly);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub repr: Repr,
    /// Number of generators of the argument module.
    pub gens: usize,
    values: BTreeMap<Vec<usize>, Poly>,
}

pub type LCAdCochain = Cochain;
pub type PVACochain = Cochain;

pub fn slot(i: usize) -> Poly {
    Poly::lam(lam_k(i))
}

fn slot_ids(k: usize) -> Vec<u32> {
    (1..=k).map(lam_k).collect()
}

/// Non-decreasing tuples of length `k` over `0..r`.
pub fn sorted_tuples(r: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for t in &out {
            let lo = t.last().copied().unwrap_or(0);
            for g in lo..r {
                let mut t2 = t.clone();
                t2.push(g);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut p2 = p.clone();
            p2.insert(pos, k - 1);
            out.push(p2);
        }
    }
    out
}

fn parity(p: &[usize]) -> Q {
    let inv = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    q(if inv % 2 == 0 { 1 } else { -1 })
}

/// `π` with `h[π(j)]` non-decreasing in `j`.
fn sorting_perm(h: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..h.len()).collect();
    p.sort_by_key(|&j| h[j]);
    p
}

/// `T[λ_j ← λ_{σ(j)}]`.
fn permute_slots(t: &Poly, sigma: &[usize]) -> Poly {
    let map: Vec<(Var, Poly)> = sigma.iter().enumerate().map(|(j, &s)| (Var::Lam(lam_k(j + 1)), slot(s + 1))).collect();
    t.subst_many(&map)
}

fn normal_form(repr: Repr, k: usize, v: &Poly) -> Poly {
    match repr {
        Repr::Quotient if k > 0 => quot_normalize(v, &slot_ids(k)),
        _ => v.clone(),
    }
}

/// Whether `v` is zero in the value space of a k-cochain in `repr`.
fn is_zero_value(repr: Repr, k: usize, v: &Poly) -> bool {
    if v.is_zero() {
        return true;
    }
    match (repr, k) {
        (Repr::Basic, _) => false,
        (_, 0) => in_partial_image(v),
        (Repr::Quotient, _) => quot_normalize(v, &slot_ids(k)).is_zero(),
        (Repr::Reduced, _) => quot_normalize(v, &slot_ids(k)).is_zero(),
    }
}

fn check_degree(k: usize) -> Result<()> {
    if k >= MAX_TARGET_DEGREE {
        return Err(Error::Degree {
            expected: MAX_TARGET_DEGREE - 1,
            got: k,
        });
    }
    Ok(())
}

impl Cochain {
    pub fn zero(degree: usize, repr: Repr, gens: usize) -> Cochain {
        Cochain {
            degree,
            repr,
            gens,
            values: BTreeMap::new(),
        }
    }

    /// Build from values on non-decreasing tuples (missing tuples are zero).
    /// Quotient values are normalized; skewsymmetry on repeated indices is
    /// validated.
    pub fn new(degree: usize, repr: Repr, gens: usize, values: BTreeMap<Vec<usize>, Poly>) -> Result<Cochain> {
        let mut out = Cochain::zero(degree, repr, gens);
        for (t, v) in values {
            if t.len() != degree {
                return Err(Error::Degree {
                    expected: degree,
                    got: t.len(),
                });
            }
            if t.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Cochain(format!("tuple {t:?} is not non-decreasing")));
            }
            if let Some(&g) = t.iter().find(|&&g| g >= gens) {
                return Err(Error::UnknownGenerator(g));
            }
            let v = normal_form(repr, degree, &v);
            if !v.is_zero() {
                out.values.insert(t, v);
            }
        }
        for (t, v) in &out.values {
            for a in 0..degree.saturating_sub(1) {
                if t[a] != t[a + 1] {
                    continue;
                }
                let mut sigma: Vec<usize> = (0..degree).collect();
                sigma.swap(a, a + 1);
                let sum = v + &permute_slots(v, &sigma);
                if !is_zero_value(repr, degree, &sum) {
                    return Err(Error::Cochain(format!("value on {t:?} is not skewsymmetric in slots {} and {}", a + 1, a + 2)));
                }
            }
        }
        Ok(out)
    }

    /// Build from arbitrary raw values, projecting each onto the part that is
    /// skewsymmetric under permutations fixing its tuple.
    pub fn antisymmetrized(degree: usize, repr: Repr, gens: usize, raw: BTreeMap<Vec<usize>, Poly>) -> Result<Cochain> {
        let perms = permutations(degree);
        let mut values = BTreeMap::new();
        for (t, v) in raw {
            let stab: Vec<&Vec<usize>> = perms.iter().filter(|p| p.iter().enumerate().all(|(j, &s)| t.get(j) == t.get(s))).collect();
            let mut acc = Poly::zero();
            for p in &stab {
                acc += &permute_slots(&v, p).scale(&parity(p));
            }
            values.insert(t, acc.scale(&Q::new(1.into(), (stab.len() as i64).into())));
        }
        Cochain::new(degree, repr, gens, values)
    }

    pub fn values(&self) -> &BTreeMap<Vec<usize>, Poly> {
        &self.values
    }

    /// Stored value on a non-decreasing tuple.
    pub fn value(&self, t: &[usize]) -> Poly {
        self.values.get(t).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|v| is_zero_value(self.repr, self.degree, v))
    }

    pub fn map_values(&self, repr: Repr, f: impl Fn(&Poly) -> Poly) -> Result<Cochain> {
        let values = self.values.iter().map(|(t, v)| (t.clone(), f(v))).collect();
        Cochain::new(self.degree, repr, self.gens, values)
    }

    /// Equality in the cochain space of `self.repr`.
    pub fn same(&self, other: &Cochain) -> bool {
        if self.degree != other.degree || self.gens != other.gens {
            return false;
        }
        sorted_tuples(self.gens, self.degree)
            .iter()
            .all(|t| is_zero_value(self.repr, self.degree, &(&self.value(t) - &other.value(t))))
    }

    /// Raw value on the given argument terms with slot `i` set to `slots[i]`.
    /// The result is a representative; see [`Cochain::normalize`].
    pub fn eval_terms(&self, args: &[Vec<SlotTerm>], slots: &[Poly]) -> Result<Poly> {
        let k = self.degree;
        if args.len() != k || slots.len() != k {
            return Err(Error::Degree { expected: k, got: args.len() });
        }
        if args.iter().any(Vec::is_empty) {
            return Ok(Poly::zero());
        }
        let mut out = Poly::zero();
        let mut idx = vec![0usize; k];
        loop {
            let terms: Vec<&SlotTerm> = (0..k).map(|i| &args[i][idx[i]]).collect();
            out += &self.eval_one(&terms, slots)?;
            guard(&out)?;
            let mut p = 0;
            loop {
                if p == k {
                    return Ok(out);
                }
                idx[p] += 1;
                if idx[p] < args[p].len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
        }
    }

    fn eval_one(&self, terms: &[&SlotTerm], slots: &[Poly]) -> Result<Poly> {
        let h: Vec<usize> = terms.iter().map(|t| t.0).collect();
        if let Some(&g) = h.iter().find(|&&g| g >= self.gens) {
            return Err(Error::UnknownGenerator(g));
        }
        let pi = sorting_perm(&h);
        let s: Vec<usize> = pi.iter().map(|&j| h[j]).collect();
        let t = self.value(&s);
        if t.is_zero() {
            return Ok(t);
        }
        let xs: Vec<Option<Var>> = terms
            .iter()
            .map(|(_, _, c)| if c.as_constant().is_some() { None } else { Some(fresh()) })
            .collect();
        let shifted: Vec<Poly> = (0..terms.len())
            .map(|i| match xs[i] {
                Some(x) => &slots[i] + &Poly::var(x),
                None => slots[i].clone(),
            })
            .collect();
        let map: Vec<(Var, Poly)> = pi.iter().enumerate().map(|(j, &p)| (Var::Lam(lam_k(j + 1)), shifted[p].clone())).collect();
        let mut v = t.subst_many(&map).scale(&parity(&pi));
        for (i, (_, n, _)) in terms.iter().enumerate() {
            if *n > 0 {
                v = &v * &(-&shifted[i]).pow(*n as u32);
            }
        }
        for (i, (_, _, c)) in terms.iter().enumerate() {
            v = match xs[i] {
                Some(x) => marker(&v, x, c),
                None => &v * c,
            };
        }
        Ok(v)
    }

    pub fn normalize(&self, v: &Poly) -> Poly {
        normal_form(self.repr, self.degree, v)
    }

    /// `φ_{λ_1..λ_k}(v_1..v_k)` for LCAd elements.
    pub fn eval_lcad(&self, args: &[Poly]) -> Result<Poly> {
        let terms = args.iter().map(e_terms).collect::<Result<Vec<_>>>()?;
        let v = self.eval_terms(&terms, &slots(args.len()))?;
        Ok(self.normalize(&v))
    }

    /// `γ_{λ_1..λ_k}(f_1..f_k)` for PVA elements, by sesquilinearity and
    /// the Leibniz rules.
    pub fn eval_pva(&self, args: &[Poly]) -> Result<Poly> {
        let terms: Vec<_> = args.iter().map(pva_terms).collect();
        let v = self.eval_terms(&terms, &slots(args.len()))?;
        Ok(self.normalize(&v))
    }

    pub fn render(&self, names: &Names) -> String {
        if self.values.is_empty() {
            return "0".into();
        }
        self.values
            .iter()
            .map(|(t, v)| {
                let t: Vec<String> = t.iter().map(|g| g.to_string()).collect();
                format!("({}) -> {}", t.join(","), names.render(v))
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// `a − b` in the representation of `a`.
pub fn difference(a: &Cochain, b: &Cochain) -> Result<Cochain> {
    let values = sorted_tuples(a.gens, a.degree)
        .into_iter()
        .map(|t| {
            let v = &a.value(&t) - &b.value(&t);
            (t, v)
        })
        .collect();
    Cochain::new(a.degree, a.repr, a.gens, values)
}

fn slots(k: usize) -> Vec<Poly> {
    (1..=k).map(slot).collect()
}

/// Argument terms of a PVA element: `(i, n, ∂f/∂u_i^(n))`.
pub fn pva_terms(f: &Poly) -> Vec<SlotTerm> {
    u_jets(f).into_iter().map(|(i, n)| (i as usize, n, f.partial(Var::U(i, n)))).collect()
}

fn gen_term(g: usize) -> Vec<SlotTerm> {
    vec![(g, 0, Poly::one())]
}

/// The common shape of both differentials: `act(g, m, s)` is the action of
/// generator `g` at `s`, `bracket(g, h, s)` the argument terms of `[g_s h]`.
fn differential(
    phi: &Cochain,
    act: impl Fn(usize, &Poly, &Poly) -> Result<Poly>,
    bracket: impl Fn(usize, usize, &Poly) -> Result<Vec<SlotTerm>>,
) -> Result<Cochain> {
    check_degree(phi.degree)?;
    let n = phi.degree + 1;
    let lams = slots(n);
    let mut values = BTreeMap::new();
    for t in sorted_tuples(phi.gens, n) {
        let mut out = Poly::zero();
        for i in 0..n {
            let rest: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            let args: Vec<_> = rest.iter().map(|&j| gen_term(t[j])).collect();
            let sl: Vec<Poly> = rest.iter().map(|&j| lams[j].clone()).collect();
            let inner = phi.eval_terms(&args, &sl)?;
            let acted = act(t[i], &inner, &lams[i])?;
            if i % 2 == 0 {
                out += &acted;
            } else {
                out -= &acted;
            }
            guard(&out)?;
        }
        for i in 0..n {
            for j in i + 1..n {
                let b = bracket(t[i], t[j], &lams[i])?;
                let rest: Vec<usize> = (0..n).filter(|&l| l != i && l != j).collect();
                let mut args = vec![b];
                args.extend(rest.iter().map(|&l| gen_term(t[l])));
                let mut sl = vec![&lams[i] + &lams[j]];
                sl.extend(rest.iter().map(|&l| lams[l].clone()));
                let v = phi.eval_terms(&args, &sl)?;
                if (i + j) % 2 == 0 {
                    out += &v;
                } else {
                    out -= &v;
                }
                guard(&out)?;
            }
        }
        values.insert(t, out);
    }
    Cochain::new(n, phi.repr, phi.gens, values)
}

fn reject_dual(m: &LCAdModule) -> Result<()> {
    if matches!(m, LCAdModule::Dual { .. }) {
        return Err(Error::Precondition("cochains with values in a dual module are not supported".into()));
    }
    Ok(())
}

fn check_gens(c: &Cochain, r: usize) -> Result<()> {
    if c.gens != r {
        return Err(Error::Signature(format!("cochain on {} generators, structure has {r}", c.gens)));
    }
    Ok(())
}

/// The LCAd differential.
pub fn lcad_d(l: &LCAdStructure, m: &LCAdModule, phi: &Cochain) -> Result<Cochain> {
    reject_dual(m)?;
    check_gens(phi, l.rank())?;
    differential(
        phi,
        |g, v, s| m.act_at(l, &l.gen(g), v, s),
        |g, h, s| e_terms(&l.bracket_at(&l.gen(g), &l.gen(h), s)?),
    )
}

/// The PVA differential.
pub fn pva_d(p: &PVAStructure, m: &PVAModule, gamma: &Cochain) -> Result<Cochain> {
    check_gens(gamma, p.rank())?;
    differential(
        gamma,
        |g, v, s| pva_module_action_at(p, m, &p.gen(g), v, s),
        |g, h, s| Ok(pva_terms(&p.bracket_at(&p.gen(g), &p.gen(h), s)?)),
    )
}

fn need_basic(phi: &Cochain) -> Result<()> {
    if phi.repr == Repr::Quotient {
        return Err(Error::Precondition("expected a basic or reduced cochain".into()));
    }
    Ok(())
}

/// `(∂φ̃)(…) = (λ_1+…+λ_k+∂) φ̃(…)`.
pub fn partial_action(phi: &Cochain) -> Result<Cochain> {
    need_basic(phi)?;
    let ids = slot_ids(phi.degree);
    phi.map_values(phi.repr, |v| times_shift(v, &ids))
}

/// `p∗(φ̃) = p∘φ̃`.
pub fn p_star(phi: &Cochain) -> Result<Cochain> {
    need_basic(phi)?;
    phi.map_values(Repr::Quotient, Poly::clone)
}

/// A basic preimage of a quotient cochain under `p∗`, built with the
/// splitting `q`.
pub fn q_preimage(phi: &Cochain) -> Result<Cochain> {
    if phi.repr != Repr::Quotient {
        return Err(Error::Precondition("expected a quotient cochain".into()));
    }
    let ids = slot_ids(phi.degree);
    phi.map_values(Repr::Basic, |v| q_split(v, &ids))
}

/// `ψ̃` with `∂ψ̃ = φ̃`, if one exists (degree ≥ 1).
pub fn partial_preimage(phi: &Cochain) -> Result<Option<Cochain>> {
    need_basic(phi)?;
    if phi.degree == 0 {
        return Err(Error::Degree { expected: 1, got: 0 });
    }
    let ids = slot_ids(phi.degree);
    let mut values = BTreeMap::new();
    for (t, v) in &phi.values {
        match exact_divide_shift(v, &ids) {
            Some(w) => values.insert(t.clone(), w),
            None => return Ok(None),
        };
    }
    Cochain::new(phi.degree, Repr::Basic, phi.gens, values).map(Some)
}

/// Both sides of `(d̃∘a − a∘d̃)φ̃ = Σ_i (−1)^{i+1} θ(u_i)_{λ_i}(a) φ̃(…, û_i, …)`
/// for `a ∈ A`.
pub fn nonleibniz_commutator(l: &LCAdStructure, m: &LCAdModule, a: &Poly, phi: &Cochain) -> Result<(Cochain, Cochain)> {
    need_basic(phi)?;
    let aphi = phi.map_values(phi.repr, |v| a * v)?;
    let d_aphi = lcad_d(l, m, &aphi)?;
    let a_dphi = lcad_d(l, m, phi)?.map_values(phi.repr, |v| a * v)?;
    let lhs = difference(&d_aphi, &a_dphi)?;
    let n = phi.degree + 1;
    let lams = slots(n);
    let mut values = BTreeMap::new();
    for t in sorted_tuples(phi.gens, n) {
        let mut out = Poly::zero();
        for i in 0..n {
            let ta = l.anchor_at(&l.gen(t[i]), a, &lams[i])?;
            if ta.is_zero() {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            let args: Vec<_> = rest.iter().map(|&j| gen_term(t[j])).collect();
            let sl: Vec<Poly> = rest.iter().map(|&j| lams[j].clone()).collect();
            let v = &ta * &phi.eval_terms(&args, &sl)?;
            if i % 2 == 0 {
                out += &v;
            } else {
                out -= &v;
            }
        }
        values.insert(t, out);
    }
    Ok((lhs, Cochain::new(n, phi.repr, phi.gens, values)?))
}

/// `Ω(V)` and the transferred module `M`, the setting of [`phi_iso`].
pub fn phi_setting(p: &PVAStructure, m: &PVAModule) -> Result<(LCAdStructure, LCAdModule)> {
    Ok((
        kahler_lcad(p)?,
        LCAdModule::Transfer {
            pva: p.clone(),
            module: m.clone(),
        },
    ))
}

/// `Φ(γ)(a_1du_1,…) = (|_{x_1=∂}a_1)… γ_{λ_1+x_1,…}(u_1,…)`; on generator
/// tables `Φ(γ)(du_{i_1},…) = γ(u_{i_1},…)`.
pub fn phi_iso(gamma: &PVACochain) -> LCAdCochain {
    gamma.clone()
}

/// `Φ⁻¹(φ)(u_1,…) = φ(du_1,…)`.
pub fn phi_inv(phi: &LCAdCochain) -> PVACochain {
    phi.clone()
}

fn carrier_of_lcad(m: &LCAdModule) -> Result<Carrier> {
    Ok(match m {
        LCAdModule::Trivial => Carrier::Algebra,
        LCAdModule::Free { names, .. } => Carrier::Free(names.len()),
        LCAdModule::Transfer { module, .. } => carrier_of_pva(module),
        LCAdModule::Dual { .. } => return reject_dual(m).map(|_| Carrier::Algebra),
    })
}

fn carrier_of_pva(m: &PVAModule) -> Carrier {
    match m {
        PVAModule::Adjoint => Carrier::Algebra,
        PVAModule::Free { names, .. } => Carrier::Free(names.len()),
    }
}

fn u(i: usize, n: u16) -> Poly {
    Poly::var(Var::U(i as u16, n))
}

fn w(l: usize, n: u16) -> Poly {
    Poly::var(Var::W(l as u16, n))
}

/// Simple coefficient elements: `1, u_i, u_i u_j, u_i'` or `w_l, u_i w_l, w_l'`.
fn basis_elements(c: Carrier, r: usize) -> Vec<Poly> {
    match c {
        Carrier::Algebra => {
            let mut out = vec![Poly::one()];
            for i in 0..r {
                out.push(u(i, 0));
                out.push(u(i, 1));
                for j in i..r {
                    out.push(&u(i, 0) * &u(j, 0));
                }
            }
            out
        }
        Carrier::Free(k) => {
            let mut out = Vec::new();
            for l in 0..k {
                out.push(w(l, 0));
                out.push(w(l, 1));
                out.extend((0..r).map(|i| &u(i, 0) * &w(l, 0)));
            }
            out
        }
    }
}

fn sample_element(c: Carrier, r: usize, s: &mut Sampler) -> Poly {
    match c {
        Carrier::Algebra => s.poly(r, 2, 1, 2),
        Carrier::Free(0) => Poly::zero(),
        Carrier::Free(k) => {
            let l = s.index(k);
            let n = s.int(0, 1) as u16;
            &s.poly(r, 1, 1, 2) * &w(l, n)
        }
    }
}

/// Basis-type cochains: a single tuple carrying a simple coefficient, times
/// `1` or `λ_1` (the latter in basic form only).
pub fn basis_cochains(c: Carrier, alg_rank: usize, gens: usize, degree: usize, repr: Repr) -> Result<Vec<Cochain>> {
    let mut out = Vec::new();
    let mut mults = vec![Poly::one()];
    if repr != Repr::Quotient && degree > 0 {
        mults.push(slot(1));
    }
    for t in sorted_tuples(gens, degree) {
        for e in basis_elements(c, alg_rank) {
            for mu in &mults {
                let raw = BTreeMap::from([(t.clone(), mu * &e)]);
                let ch = Cochain::antisymmetrized(degree, repr, gens, raw)?;
                if !ch.is_zero() {
                    out.push(ch);
                }
            }
        }
    }
    Ok(out)
}

/// A seeded random cochain: every tuple gets one or two terms
/// `coefficient · λ-monomial` with λ-degree at most 1.
pub fn sample_cochain(c: Carrier, alg_rank: usize, gens: usize, degree: usize, repr: Repr, s: &mut Sampler) -> Result<Cochain> {
    let mut raw = BTreeMap::new();
    for t in sorted_tuples(gens, degree) {
        let mut v = Poly::zero();
        for _ in 0..s.int(1, 2) {
            let mut e = sample_element(c, alg_rank, s);
            if degree > 0 && s.bool() {
                e = &e * &slot(1 + s.index(degree));
            }
            v += &e;
        }
        raw.insert(t, v);
    }
    Cochain::antisymmetrized(degree, repr, gens, raw)
}

fn record(rep: &mut Report, id: String, degree: usize, names: &Names, lhs: &Cochain, rhs: &Cochain) -> bool {
    let ok = lhs.same(rhs);
    rep.push(id, Some(degree), lhs.render(names), rhs.render(names), ok);
    ok
}

fn dd_family(c: Carrier, alg_rank: usize, gens: usize, k: usize, repr: Repr, seed: u64, samples: usize) -> Result<Vec<(String, Cochain)>> {
    let mut fam: Vec<(String, Cochain)> = basis_cochains(c, alg_rank, gens, k, repr)?
        .into_iter()
        .enumerate()
        .map(|(i, ch)| (format!("basis{i}"), ch))
        .collect();
    let mut s = Sampler::new(seed);
    for t in 0..samples {
        fam.push((format!("sample{t}"), sample_cochain(c, alg_rank, gens, k, repr, &mut s)?));
    }
    Ok(fam)
}

/// `d∘d = 0` on basis cochains of degree `k` and `samples` seeded ones.
pub fn dsq_check_lcad(l: &LCAdStructure, m: &LCAdModule, k: usize, repr: Repr, seed: u64, samples: usize) -> Result<Report> {
    check_degree(k + 1)?;
    let names = m.names(l);
    let mut rep = Report::new();
    for (id, phi) in dd_family(carrier_of_lcad(m)?, l.sig.rank(), l.rank(), k, repr, seed, samples)? {
        let dd = lcad_d(l, m, &lcad_d(l, m, &phi)?)?;
        record(&mut rep, format!("dd.{id}"), k, &names, &dd, &Cochain::zero(k + 2, repr, l.rank()));
    }
    Ok(rep)
}

pub fn dsq_check_pva(p: &PVAStructure, m: &PVAModule, k: usize, repr: Repr, seed: u64, samples: usize) -> Result<Report> {
    check_degree(k + 1)?;
    let names = m.names(p);
    let mut rep = Report::new();
    for (id, gamma) in dd_family(carrier_of_pva(m), p.rank(), p.rank(), k, repr, seed, samples)? {
        let dd = pva_d(p, m, &pva_d(p, m, &gamma)?)?;
        record(&mut rep, format!("dd.{id}"), k, &names, &dd, &Cochain::zero(k + 2, repr, p.rank()));
    }
    Ok(rep)
}

/// `Φ∘d = d∘Φ`, `Φ⁻¹∘Φ = id`, `Φ∘Φ⁻¹ = id`, and `Φ(γ)(a·df, du_j, …)`
/// against `(|_{x=∂}a) γ_{λ_1+x}(f, u_j, …)` on seeded `a`, `f`.
pub fn check_phi(p: &PVAStructure, m: &PVAModule, k: usize, repr: Repr, seed: u64, samples: usize) -> Result<Report> {
    let (l, lm) = phi_setting(p, m)?;
    let names = m.names(p);
    let mut rep = Report::new();
    let mut s = Sampler::new(seed ^ 0x5eed);
    let r = p.rank();
    for (id, gamma) in dd_family(carrier_of_pva(m), r, r, k, repr, seed, samples)? {
        let phi = phi_iso(&gamma);
        if k < MAX_TARGET_DEGREE {
            let lhs = phi_iso(&pva_d(p, m, &gamma)?);
            let rhs = lcad_d(&l, &lm, &phi)?;
            record(&mut rep, format!("phi.{id}.d"), k, &names, &lhs, &rhs);
        }
        record(&mut rep, format!("phi.{id}.inverse"), k, &names, &phi_inv(&phi), &gamma);
        record(&mut rep, format!("phi.{id}.inverse_right"), k, &names, &phi_iso(&phi_inv(&phi)), &phi);
        if k > 0 {
            let a = s.poly(r, 1, 1, 2);
            let f = s.poly(r, 2, 1, 2);
            let rest: Vec<usize> = (1..k).map(|_| s.index(r)).collect();
            let mut args = vec![&a * &crate::lcad::kahler_d(&f)];
            args.extend(rest.iter().map(|&j| l.gen(j)));
            let lhs = phi.eval_lcad(&args)?;
            let x = fresh();
            let mut terms = vec![pva_terms(&f)];
            terms.extend(rest.iter().map(|&j| gen_term(j)));
            let mut sl = slots(k);
            sl[0] = &sl[0] + &Poly::var(x);
            let rhs = gamma.normalize(&marker(&gamma.eval_terms(&terms, &sl)?, x, &a));
            let ok = is_zero_value(repr, k, &(&lhs - &rhs));
            rep.push(format!("phi.{id}.eval"), Some(k), names.render(&lhs), names.render(&rhs), ok);
        }
    }
    Ok(rep)
}

/// ∂-equivariance of `d̃`, `ker p∗ = im ∂`, `p∗∘q = id`, and the
/// commutator identity for seeded `a ∈ A`.
pub fn check_reduced_plumbing(l: &LCAdStructure, m: &LCAdModule, seed: u64, samples: usize) -> Result<Report> {
    let c = carrier_of_lcad(m)?;
    let names = m.names(l);
    let (r, g) = (l.sig.rank(), l.rank());
    let mut rep = Report::new();
    let mut s = Sampler::new(seed);
    for t in 0..samples {
        for k in 0..MAX_TARGET_DEGREE {
            let phi = sample_cochain(c, r, g, k, Repr::Basic, &mut s)?;
            let lhs = lcad_d(l, m, &partial_action(&phi)?)?;
            let rhs = partial_action(&lcad_d(l, m, &phi)?)?;
            record(&mut rep, format!("sample{t}.equivariance"), k, &names, &lhs, &rhs);
        }
        for k in 1..=MAX_TARGET_DEGREE {
            let phi = sample_cochain(c, r, g, k, Repr::Basic, &mut s)?;
            let dphi = partial_action(&phi)?;
            record(
                &mut rep,
                format!("sample{t}.p_kills_partial"),
                k,
                &names,
                &p_star(&dphi)?,
                &Cochain::zero(k, Repr::Quotient, g),
            );
            let back = partial_preimage(&dphi)?;
            let ok = back.as_ref().is_some_and(|b| b.same(&phi));
            rep.push(
                format!("sample{t}.kernel_witness"),
                Some(k),
                phi.render(&names),
                back.map_or("none".into(), |b| b.render(&names)),
                ok,
            );
            let quot = p_star(&phi)?;
            let lifted = q_preimage(&quot)?;
            record(&mut rep, format!("sample{t}.p_q"), k, &names, &p_star(&lifted)?, &quot);
            // φ̃ − q(p∗φ̃) lies in ker p∗, hence in im ∂
            let diff = difference(&phi, &lifted)?;
            rep.flag(format!("sample{t}.kernel_is_image.k{k}"), partial_preimage(&diff)?.is_some());
        }
        let a = s.poly(r, 2, 1, 2);
        let phi = sample_cochain(c, r, g, 1, Repr::Basic, &mut s)?;
        let (lhs, rhs) = nonleibniz_commutator(l, m, &a, &phi)?;
        record(&mut rep, format!("sample{t}.commutator"), 1, &names, &lhs, &rhs);
    }
    Ok(rep)
}
