//! Built-in examples.

use crate::diffalg::AlgebraSig;
use crate::jetcur::{LieAlgebroid, PoissonAlgebra};
use crate::lambda::LAM;
use crate::poly::{Poly, Var};
use crate::pva::PVAStructure;

fn u(i: u16, n: u16) -> Poly {
    Poly::var(Var::U(i, n))
}

fn lam() -> Poly {
    Poly::lam(LAM)
}

/// `{u λ u} = λ`.
pub fn gfz() -> PVAStructure {
    PVAStructure::new(AlgebraSig::new(&["u"], &[]), vec![vec![lam()]]).expect("static table")
}

/// `{u λ u} = (∂+2λ)u + cλ³`.
pub fn virasoro() -> PVAStructure {
    let sig = AlgebraSig::new(&["u"], &["c"]);
    let h = &(&u(0, 1) + &(&lam() * &u(0, 0)).scale(&crate::poly::q(2))) + &(&sig.param(0) * &lam().pow(3));
    PVAStructure::new(sig, vec![vec![h]]).expect("static table")
}

/// `{u λ v} = {v λ u} = λ`, other entries zero.
pub fn boson_pair() -> PVAStructure {
    let z = Poly::zero();
    PVAStructure::new(AlgebraSig::new(&["u", "v"], &[]), vec![vec![z.clone(), lam()], vec![lam(), z]]).expect("static table")
}

/// `T F[x]`: rank one, `θ(f) = d/dx`.
pub fn tangent_line() -> LieAlgebroid {
    LieAlgebroid::new(
        AlgebraSig::new(&["x"], &[]),
        vec!["f".into()],
        vec![vec![Poly::zero()]],
        vec![vec![Poly::one()]],
    )
    .expect("static table")
}

/// Rank one, `θ(f) = x d/dx`.
pub fn euler_line() -> LieAlgebroid {
    LieAlgebroid::new(AlgebraSig::new(&["x"], &[]), vec!["f".into()], vec![vec![Poly::zero()]], vec![vec![u(0, 0)]]).expect("static table")
}

/// `{x, y} = 1`.
pub fn symplectic_plane() -> PoissonAlgebra {
    PoissonAlgebra::from_entries(AlgebraSig::new(&["x", "y"], &[]), &[(0, 1, Poly::one())]).expect("static table")
}

/// `{x, y} = x`.
pub fn affine_plane() -> PoissonAlgebra {
    PoissonAlgebra::from_entries(AlgebraSig::new(&["x", "y"], &[]), &[(0, 1, u(0, 0))]).expect("static table")
}
