use crate::diffalg::AlgebraSig;
use crate::error::{Error, Result};
use crate::jetcur::LieAlgebroid;
use crate::lambda::{fresh, marker, star, LAM};
use crate::poly::{Poly, Var};
use crate::pva::{CDerElement, PVAStructure};

use super::{cder_star_at, check_lcad, evar, lam, mu, Algebroid, LCAdModule, LCAdStructure};

/// `E ⊕ M` for a free module `M`; the generators of `M` follow those of `E`.
pub fn semidirect(l: &LCAdStructure, m: &LCAdModule) -> Result<LCAdStructure> {
    let LCAdModule::Free { names, table } = m else {
        return Err(Error::Precondition("semidirect products need a free module".into()));
    };
    let r = l.rank();
    let k = names.len();
    let shift = |p: &Poly| {
        p.rename(|v| match v {
            Var::W(g, n) => Var::E(g + r as u16, n),
            other => other,
        })
    };
    let mut bracket = vec![vec![Poly::zero(); r + k]; r + k];
    for a in 0..r {
        for b in 0..r {
            bracket[a][b] = l.bracket[a][b].clone();
        }
        for w in 0..k {
            let t = shift(&table[a][w]);
            bracket[r + w][a] = -&star(&t, Var::Lam(LAM));
            bracket[a][r + w] = t;
        }
    }
    let mut anchor = l.anchor.clone();
    anchor.extend((0..k).map(|_| CDerElement::zero(l.sig.rank())));
    let mut egens = l.egens.clone();
    egens.extend(names.iter().cloned());
    LCAdStructure::new(l.sig.clone(), egens, bracket, anchor)
}

/// `A ⊗ L` for an LCA `L` (table with constant coefficients) and an LCA
/// homomorphism `φ: L → CDer(A)`.
pub fn transformation_lcad(sig: &AlgebraSig, names: Vec<String>, table: Vec<Vec<Poly>>, phi: Vec<CDerElement>) -> Result<LCAdStructure> {
    if table.iter().flatten().any(|p| p.has_var(|v| matches!(v, Var::U(..) | Var::W(..)))) {
        return Err(Error::Signature("LCA structure constants must not involve the algebra".into()));
    }
    let bare = LCAdStructure::new(sig.clone(), names.clone(), table.clone(), vec![CDerElement::zero(sig.rank()); names.len()])?;
    if !check_lcad(&bare)?.pass() {
        return Err(Error::Precondition("the table is not a Lie conformal algebra".into()));
    }
    let l = LCAdStructure::new(sig.clone(), names, table, phi)?;
    for a in 0..l.rank() {
        for b in 0..l.rank() {
            let comm = l.anchor[a].commutator(&l.anchor[b]);
            for (i, c) in comm.iter().enumerate() {
                let ui = Poly::var(Var::U(i as u16, 0));
                if &l.anchor_at(&l.bracket[a][b], &ui, &mu())? != c {
                    return Err(Error::Precondition(format!("φ does not preserve the bracket of generators {a} and {b}")));
                }
            }
        }
    }
    Ok(l)
}

/// The displayed bracket of `a ⊗ ℓ_u` with `b ⊗ ℓ_v` in a transformation LCAd.
pub fn transformation_bracket(l: &LCAdStructure, a: &Poly, u: usize, b: &Poly, v: usize) -> Poly {
    let x = fresh();
    let lx = &lam() + &Poly::var(x);
    let mut out = marker(&(b * &l.bracket[u][v].subst(Var::Lam(LAM), &lx)), x, a);
    out += &marker(&(&l.anchor[u].apply_at(b, &lx) * &evar(v, 0)), x, a);
    let h = b * &cder_star_at(&l.anchor[v], a, &lx);
    for (m, hm) in h.coeffs(x).into_iter().enumerate() {
        out -= &(&hm * &evar(u, m as u16));
    }
    out
}

/// `S_A(E)` on generators `(u_i, e_a)`.
pub fn sae_pva(l: &LCAdStructure) -> Result<PVAStructure> {
    let r = l.sig.rank();
    let m = l.rank();
    let lift = |p: &Poly| {
        p.rename(|v| match v {
            Var::E(a, n) => Var::U(a + r as u16, n),
            other => other,
        })
    };
    let mut table = vec![vec![Poly::zero(); r + m]; r + m];
    for a in 0..m {
        for i in 0..r {
            let t = &l.anchor[a].values[i];
            table[r + a][i] = t.clone();
            table[i][r + a] = -&star(t, Var::Lam(LAM));
        }
        for b in 0..m {
            table[r + a][r + b] = lift(&l.bracket[a][b]);
        }
    }
    let mut gens = l.sig.gens.clone();
    gens.extend(l.egens.iter().cloned());
    PVAStructure::new(
        AlgebraSig {
            gens,
            params: l.sig.params.clone(),
        },
        table,
    )
}

fn reduce(p: &Poly) -> Poly {
    p.subst(Var::Lam(LAM), &Poly::zero())
        .filter(|m| m.factors().iter().all(|&(v, _)| !v.is_jet() || v.order() == 0))
}

/// `Ē = E/A∂E` over `Ā = A/A∂A`, with bracket and anchor at `λ = 0`.
pub fn quotient_lad(l: &LCAdStructure) -> LieAlgebroid {
    LieAlgebroid {
        ring: l.sig.clone(),
        fgens: l.egens.clone(),
        bracket: l.bracket.iter().map(|row| row.iter().map(reduce).collect()).collect(),
        anchor: l.anchor.iter().map(|t| t.values.iter().map(reduce).collect()).collect(),
    }
}
