//! Symbolic λ-bracket calculus over differential polynomial algebras.

pub mod catalogue;
pub mod cohom;
pub mod diffalg;
pub mod error;
pub mod jetcur;
pub mod lambda;
pub mod lcad;
pub mod oracle;
pub mod poly;
pub mod pva;
pub mod report;
pub mod sample;

pub use error::{Error, Result};
pub use poly::{Names, Poly, Var, Q};
