//! Exact commutative polynomials over the rationals.
//!
//! One polynomial type carries every quantity in the library: jet variables of
//! the base algebra (`U`), jets of free-module generators (`E` for algebroid
//! generators, `W` for coefficient-module generators), parameter symbols and
//! formal λ-variables. The total derivative ∂ acts on all three jet kinds and
//! kills parameters and λ's.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qfrac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Param(u16),
    Lam(u32),
    /// u_g^(n) of the base algebra.
    U(u16, u16),
    /// ∂^n e_a for an algebroid generator.
    E(u16, u16),
    /// ∂^n w_l for a coefficient-module generator.
    W(u16, u16),
}

impl Var {
    pub fn is_jet(self) -> bool {
        matches!(self, Var::U(..) | Var::E(..) | Var::W(..))
    }

    /// The variable ∂ maps this one to, if it is a jet.
    pub fn next(self) -> Option<Var> {
        match self {
            Var::U(g, n) => Some(Var::U(g, n + 1)),
            Var::E(g, n) => Some(Var::E(g, n + 1)),
            Var::W(g, n) => Some(Var::W(g, n + 1)),
            _ => None,
        }
    }

    pub fn order(self) -> u16 {
        match self {
            Var::U(_, n) | Var::E(_, n) | Var::W(_, n) => n,
            _ => 0,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(Vec<(Var, u32)>);

impl Mono {
    pub fn one() -> Mono {
        Mono(Vec::new())
    }

    pub fn var(v: Var) -> Mono {
        Mono(vec![(v, 1)])
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn from_factors(mut f: Vec<(Var, u32)>) -> Mono {
        f.retain(|&(_, e)| e > 0);
        f.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(f.len());
        for (v, e) in f {
            match out.last_mut() {
                Some((w, k)) if *w == v => *k += e,
                _ => out.push((v, e)),
            }
        }
        Mono(out)
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map(|&(_, e)| e).unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Mono(out)
    }

    /// Remove `v` entirely, returning its exponent and the remaining monomial.
    pub fn split(&self, v: Var) -> (u32, Mono) {
        let mut e = 0;
        let rest = self
            .0
            .iter()
            .filter(|&&(w, k)| {
                if w == v {
                    e = k;
                    false
                } else {
                    true
                }
            })
            .copied()
            .collect();
        (e, Mono(rest))
    }

    fn with_exponent(&self, v: Var, e: u32) -> Mono {
        let (_, rest) = self.split(v);
        if e == 0 {
            rest
        } else {
            rest.mul(&Mono::var(v).pow(e))
        }
    }

    fn pow(&self, e: u32) -> Mono {
        Mono(self.0.iter().map(|&(v, k)| (v, k * e)).collect())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Poly {
        Poly::term(Mono::one(), c)
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(q(n))
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(Mono::var(v), Q::one())
    }

    pub fn term(m: Mono, c: Q) -> Poly {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn lam(id: u32) -> Poly {
        Poly::var(Var::Lam(id))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Mono, Q)>) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(n, k)| (n.mul(m), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn constant_term(&self) -> Q {
        self.terms.get(&Mono::one()).cloned().unwrap_or_else(Q::zero)
    }

    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&Mono::one()).cloned(),
            _ => None,
        }
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn has_var(&self, pred: impl Fn(Var) -> bool) -> bool {
        self.terms.keys().any(|m| m.0.iter().any(|&(v, _)| pred(v)))
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.degree(v)).max().unwrap_or(0)
    }

    /// Total derivative: a derivation on jets, zero on parameters and λ's.
    pub fn d(&self) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            for (idx, &(v, e)) in m.0.iter().enumerate() {
                if let Some(nv) = v.next() {
                    let mut f = m.0.clone();
                    if e == 1 {
                        f.remove(idx);
                    } else {
                        f[idx].1 = e - 1;
                    }
                    f.push((nv, 1));
                    out.add_term(Mono::from_factors(f), c * q(e as i64));
                }
            }
        }
        out
    }

    pub fn dn(&self, n: u32) -> Poly {
        let mut p = self.clone();
        for _ in 0..n {
            if p.is_zero() {
                break;
            }
            p = p.d();
        }
        p
    }

    pub fn partial(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.degree(v);
            if e > 0 {
                out.add_term(m.with_exponent(v, e - 1), c * q(e as i64));
            }
        }
        out
    }

    /// Coefficients of the powers of `v`: `self = Σ_k v^k · out[k]`.
    pub fn coeffs(&self, v: Var) -> Vec<Poly> {
        let mut out: Vec<Poly> = Vec::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            let e = e as usize;
            if out.len() <= e {
                out.resize(e + 1, Poly::zero());
            }
            out[e].add_term(rest, c.clone());
        }
        out
    }

    /// Commutative substitution of `v` by `img`.
    pub fn subst(&self, v: Var, img: &Poly) -> Poly {
        let cs = self.coeffs(v);
        let mut out = Poly::zero();
        let mut pw = Poly::one();
        for (k, c) in cs.iter().enumerate() {
            if k > 0 {
                pw = &pw * img;
            }
            if !c.is_zero() {
                out += &(c * &pw);
            }
        }
        out
    }

    /// Simultaneous commutative substitution.
    pub fn subst_many(&self, map: &[(Var, Poly)]) -> Poly {
        let mut out = Poly::zero();
        let mut cache: BTreeMap<(usize, u32), Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = Vec::new();
            let mut acc = Poly::constant(c.clone());
            for &(v, e) in &m.0 {
                match map.iter().position(|(w, _)| *w == v) {
                    Some(i) => {
                        let p = cache.entry((i, e)).or_insert_with(|| map[i].1.pow(e)).clone();
                        acc = &acc * &p;
                    }
                    None => rest.push((v, e)),
                }
            }
            out += &acc.mul_mono(&Mono(rest), &Q::one());
        }
        out
    }

    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Mono::from_factors(m.0.iter().map(|&(v, e)| (f(v), e)).collect()), c.clone())),
        )
    }

    /// Keep only the terms whose monomial satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&Mono) -> bool) -> Poly {
        Poly {
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Decompose a polynomial that is linear in the variables selected by
    /// `pick`: returns `(variable, coefficient)` pairs plus the part free of
    /// selected variables. `None` if some monomial is non-linear in them.
    pub fn linear_parts(&self, pick: impl Fn(Var) -> bool) -> Option<(Vec<(Var, Poly)>, Poly)> {
        let mut parts: BTreeMap<Var, Poly> = BTreeMap::new();
        let mut free = Poly::zero();
        for (m, c) in &self.terms {
            let sel: Vec<_> = m.0.iter().filter(|&&(v, _)| pick(v)).collect();
            match sel.as_slice() {
                [] => free.add_term(m.clone(), c.clone()),
                [&(v, 1)] => {
                    let (_, rest) = m.split(v);
                    parts.entry(v).or_default().add_term(rest, c.clone());
                }
                _ => return None,
            }
        }
        Some((parts.into_iter().collect(), free))
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut p = self.clone();
        p += rhs;
        p
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut p = self.clone();
        p -= rhs;
        p
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            for (n, k) in &rhs.terms {
                out.add_term(m.mul(n), c * k);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

/// Display names for every variable kind.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Names {
    pub gens: Vec<String>,
    pub params: Vec<String>,
    pub egens: Vec<String>,
    pub wgens: Vec<String>,
}

fn jet_name(base: &str, n: u16) -> String {
    match n {
        0..=3 => format!("{base}{}", "'".repeat(n as usize)),
        _ => format!("{base}^({n})"),
    }
}

fn pick(names: &[String], i: u16, fallback: &str) -> String {
    names.get(i as usize).cloned().unwrap_or_else(|| format!("{fallback}{}", i + 1))
}

impl Names {
    pub fn var(&self, v: Var) -> String {
        match v {
            Var::Param(p) => pick(&self.params, p, "c"),
            Var::Lam(id) => crate::lambda::lam_name(id),
            Var::U(g, n) => jet_name(&pick(&self.gens, g, "u"), n),
            Var::E(g, n) => jet_name(&pick(&self.egens, g, "e"), n),
            Var::W(g, n) => jet_name(&pick(&self.wgens, g, "w"), n),
        }
    }

    pub fn mono(&self, m: &Mono) -> String {
        m.0.iter()
            .map(|&(v, e)| {
                let s = self.var(v);
                let s = if s.contains('^') && e > 1 { format!("({s})") } else { s };
                if e == 1 {
                    s
                } else {
                    format!("{s}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn render(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in p.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let body = self.mono(m);
            if body.is_empty() {
                let _ = write!(s, "{a}");
            } else if a.is_one() {
                s.push_str(&body);
            } else {
                let _ = write!(s, "{a}*{body}");
            }
        }
        s
    }
}

pub fn binom(n: u32, k: u32) -> Q {
    if k > n {
        return Q::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Q::from_integer(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: u16) -> Poly {
        Poly::var(Var::U(0, n))
    }

    #[test]
    fn derivative_of_square() {
        let p = &u(0) * &u(0);
        assert_eq!(p.d(), (&u(0) * &u(1)).scale(&q(2)));
    }

    #[test]
    fn params_and_lambdas_are_constants() {
        assert!(Poly::var(Var::Param(0)).d().is_zero());
        assert!(Poly::lam(0).d().is_zero());
    }

    #[test]
    fn partials() {
        let p = &u(0) * &u(2);
        assert_eq!(p.partial(Var::U(0, 2)), u(0));
        assert_eq!(p.partial(Var::U(0, 0)), u(2));
        assert!(u(0).pow(3).partial(Var::U(0, 1)).is_zero());
    }

    #[test]
    fn subst_and_coeffs() {
        let l = Poly::lam(0);
        let p = &l.pow(2) + &u(0);
        let img = &l + &Poly::one();
        let s = p.subst(Var::Lam(0), &img);
        assert_eq!(s, &(&img * &img) + &u(0));
        let cs = p.coeffs(Var::Lam(0));
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], u(0));
    }

    #[test]
    fn render_primes() {
        let n = Names {
            gens: vec!["u".into()],
            ..Default::default()
        };
        let p = &(&u(1) + &u(4)) - &u(0).scale(&qfrac(3, 2));
        assert_eq!(n.render(&p), "-3/2*u + u' + u^(4)");
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), q(10));
        assert_eq!(binom(3, 4), q(0));
    }
}
