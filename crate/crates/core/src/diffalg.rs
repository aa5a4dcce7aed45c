//! Differential polynomial algebras and their operator rings.

use std::sync::atomic::{AtomicUsize, Ordering};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{binom, q, Names, Poly, Var};

pub const DEFAULT_MAX_TERMS: usize = 1_000_000;
static MAX_TERMS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_TERMS);

pub fn set_max_terms(n: usize) {
    MAX_TERMS.store(n, Ordering::Relaxed);
}

pub fn max_terms() -> usize {
    MAX_TERMS.load(Ordering::Relaxed)
}

/// Abort with [`Error::SizeGuard`] when `p` has grown past the limit.
pub fn guard(p: &Poly) -> Result<()> {
    guard_with(p, max_terms())
}

fn guard_with(p: &Poly, limit: usize) -> Result<()> {
    if p.len() > limit {
        Err(Error::SizeGuard { terms: p.len(), limit })
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraSig {
    pub gens: Vec<String>,
    pub params: Vec<String>,
}

impl AlgebraSig {
    pub fn new(gens: &[&str], params: &[&str]) -> AlgebraSig {
        AlgebraSig {
            gens: gens.iter().map(|s| s.to_string()).collect(),
            params: params.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn gen(&self, i: usize) -> Result<Poly> {
        if i < self.gens.len() {
            Ok(Poly::var(Var::U(i as u16, 0)))
        } else {
            Err(Error::UnknownGenerator(i))
        }
    }

    pub fn param(&self, p: usize) -> Poly {
        Poly::var(Var::Param(p as u16))
    }

    pub fn names(&self) -> Names {
        Names {
            gens: self.gens.clone(),
            params: self.params.clone(),
            ..Default::default()
        }
    }
}

pub fn d_total(p: &Poly) -> Poly {
    p.d()
}

pub fn partial_deriv(sig: &AlgebraSig, p: &Poly, i: usize, n: u16) -> Result<Poly> {
    if i >= sig.rank() {
        return Err(Error::UnknownGenerator(i));
    }
    Ok(p.partial(Var::U(i as u16, n)))
}

/// `δp/δv = Σ_n (−∂)^n ∂p/∂v^(n)` for the jet family containing `v`.
pub fn euler(p: &Poly, family: impl Fn(u16) -> Var) -> Poly {
    let top = p.vars().into_iter().filter(|&w| family(w.order()) == w).map(|w| w.order()).max();
    let mut out = Poly::zero();
    if let Some(top) = top {
        for n in 0..=top {
            let t = p.partial(family(n)).dn(n as u32);
            if n % 2 == 0 {
                out += &t;
            } else {
                out -= &t;
            }
        }
    }
    out
}

pub fn variational_deriv(sig: &AlgebraSig, p: &Poly, i: usize) -> Result<Poly> {
    if i >= sig.rank() {
        return Err(Error::UnknownGenerator(i));
    }
    Ok(euler(p, |n| Var::U(i as u16, n)))
}

/// Decide `p ∈ ∂A` (jets of every kind count as differential variables;
/// parameters and λ's as constants): all variational derivatives vanish and
/// the jet-free part is zero.
pub fn in_partial_image(p: &Poly) -> bool {
    if p.terms().any(|(m, _)| !m.factors().iter().any(|&(v, _)| v.is_jet())) {
        return false;
    }
    let mut families: Vec<Var> = p
        .vars()
        .into_iter()
        .filter(|v| v.is_jet())
        .map(|v| match v {
            Var::U(g, _) => Var::U(g, 0),
            Var::E(g, _) => Var::E(g, 0),
            Var::W(g, _) => Var::W(g, 0),
            other => other,
        })
        .collect();
    families.dedup();
    families.into_iter().all(|f| {
        euler(p, |n| match f {
            Var::U(g, _) => Var::U(g, n),
            Var::E(g, _) => Var::E(g, n),
            Var::W(g, _) => Var::W(g, n),
            other => other,
        })
        .is_zero()
    })
}

/// `Σ a_i ∂^i` with coefficients on the left.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OpPoly {
    coeffs: Vec<Poly>,
}

impl OpPoly {
    pub fn new(mut coeffs: Vec<Poly>) -> OpPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        OpPoly { coeffs }
    }

    pub fn zero() -> OpPoly {
        OpPoly::default()
    }

    pub fn scalar(a: Poly) -> OpPoly {
        OpPoly::new(vec![a])
    }

    /// The operator ∂.
    pub fn d() -> OpPoly {
        OpPoly::new(vec![Poly::zero(), Poly::one()])
    }

    pub fn monomial(c: Poly, n: usize) -> OpPoly {
        let mut v = vec![Poly::zero(); n + 1];
        v[n] = c;
        OpPoly::new(v)
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &OpPoly) -> OpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Poly::zero();
        OpPoly::new((0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z)).collect())
    }

    pub fn neg(&self) -> OpPoly {
        OpPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Apply to an element on which ∂ acts as the total derivative.
    pub fn apply(&self, b: &Poly) -> Poly {
        let mut out = Poly::zero();
        let mut db = b.clone();
        for c in &self.coeffs {
            if !c.is_zero() {
                out += &(c * &db);
            }
            db = db.d();
        }
        out
    }

    /// The symbol `Σ a_i λ^i`.
    pub fn symbol(&self, lam: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            out += &(c * &lam.pow(i as u32));
        }
        out
    }

    pub fn render(&self, names: &Names) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = match i {
                0 => String::new(),
                1 => "D".into(),
                _ => format!("D^{i}"),
            };
            let cs = names.render(c);
            parts.push(match (i, c.as_constant()) {
                (0, _) => format!("({cs})"),
                (_, Some(k)) if k == q(1) => d,
                _ => format!("({cs})*{d}"),
            });
        }
        parts.join(" + ")
    }
}

pub fn op_compose(a: &OpPoly, b: &OpPoly) -> OpPoly {
    // a_i ∂^i ∘ b_j ∂^j = Σ_k C(i,k) a_i ∂^k(b_j) ∂^{i−k+j}
    let mut out: Vec<Poly> = Vec::new();
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            let mut db = bj.clone();
            for k in 0..=i {
                if db.is_zero() {
                    break;
                }
                let deg = i - k + j;
                if out.len() <= deg {
                    out.resize(deg + 1, Poly::zero());
                }
                out[deg] += &(ai * &db).scale(&binom(i as u32, k as u32));
                db = db.d();
            }
        }
    }
    OpPoly::new(out)
}

/// `a*(∂) = Σ_i (−∂)^i ∘ a_i`.
pub fn adjoint(a: &OpPoly) -> OpPoly {
    let mut out: Vec<Poly> = vec![Poly::zero(); a.coeffs.len()];
    for (i, ai) in a.coeffs.iter().enumerate() {
        let sign = if i % 2 == 0 { q(1) } else { q(-1) };
        // ∂^i ∘ a_i = Σ_k C(i,k) ∂^{i−k}(a_i) ∂^k
        for (k, slot) in out.iter_mut().enumerate().take(i + 1) {
            let c = binom(i as u32, k as u32) * &sign;
            if !c.is_zero() {
                *slot += &ai.dn((i - k) as u32).scale(&c);
            }
        }
    }
    OpPoly::new(out)
}
