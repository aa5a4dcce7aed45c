//! Syntax tree of `.cfa` files and its canonical printer.
//!
//! `parse(print(d)) == d` for every declaration `d`; positions are ignored
//! by equality.

use std::fmt::{self, Display, Formatter};

/// 1-based source position.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

impl Eq for Pos {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub pos: Pos,
}

impl Display for Ident {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    /// A name with its jet order, `u''` or `u^(4)`.
    Name(Ident, u16),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Name(..) => 5,
        }
    }

    fn write_at(&self, f: &mut Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Name(id, n) => match n {
                0..=3 => write!(f, "{}{}", id.name, "'".repeat(*n as usize)),
                _ => write!(f, "{}^({n})", id.name),
            },
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.write_at(f, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(f, 1)?;
                write!(f, " {} ", if matches!(self, Expr::Add(..)) { '+' } else { '-' })?;
                b.write_at(f, 2)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.write_at(f, 2)?;
                write!(f, "{}", if matches!(self, Expr::Mul(..)) { '*' } else { '/' })?;
                b.write_at(f, 3)
            }
            Expr::Pow(a, e) => {
                a.write_at(f, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

impl Display for Expr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

/// `a b = expr`: a table entry for an ordered pair of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub left: Ident,
    pub right: Ident,
    pub value: Expr,
}

impl Display for Entry {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} = {}", self.left, self.right, self.value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Gens(Vec<Ident>),
    Params(Vec<Ident>),
    Bracket(Entry),
    Anchor(Entry),
    Entry(Entry),
    Degree(usize),
    Repr(Ident),
    Value(Vec<Ident>, Expr),
}

impl Display for Item {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Item::Gens(g) => write!(f, "gens {}", join(g, ", ")),
            Item::Params(p) => write!(f, "params {}", join(p, ", ")),
            Item::Bracket(e) => write!(f, "bracket {e}"),
            Item::Anchor(e) => write!(f, "anchor {e}"),
            Item::Entry(e) => write!(f, "{e}"),
            Item::Degree(k) => write!(f, "degree {k}"),
            Item::Repr(r) => write!(f, "repr {r}"),
            Item::Value(t, v) => write!(f, "[{}] = {v}", join(t, ", ")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Algebra,
    Pva,
    Poisson,
    Lad,
    Lcad,
    Module,
    Cochain,
    Cocycle,
}

impl Kind {
    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Pva => "pva",
            Kind::Poisson => "poisson",
            Kind::Lad => "lad",
            Kind::Lcad => "lcad",
            Kind::Module => "module",
            Kind::Cochain => "cochain",
            Kind::Cocycle => "cocycle",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Kind> {
        Some(match s {
            "algebra" => Kind::Algebra,
            "pva" => Kind::Pva,
            "poisson" => Kind::Poisson,
            "lad" => Kind::Lad,
            "lcad" => Kind::Lcad,
            "module" => Kind::Module,
            "cochain" => Kind::Cochain,
            "cocycle" => Kind::Cocycle,
            _ => return None,
        })
    }

    /// The word linking the name to its base: `on`, or `over` for modules.
    pub fn link(self) -> &'static str {
        match self {
            Kind::Module => "over",
            _ => "on",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    /// `{ item; item; … }`
    Items(Vec<Item>),
    /// `= op(arg, …)`
    Derived { op: Ident, args: Vec<Ident> },
}

/// `kind name [on base [in coeff]] body`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decl {
    pub kind: Kind,
    pub name: Ident,
    pub base: Option<Ident>,
    pub coeff: Option<Ident>,
    pub body: Body,
}

impl Display for Decl {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind.keyword(), self.name)?;
        if let Some(b) = &self.base {
            write!(f, " {} {b}", self.kind.link())?;
        }
        if let Some(c) = &self.coeff {
            write!(f, " in {c}")?;
        }
        match &self.body {
            Body::Derived { op, args } => write!(f, " = {op}({})", join(args, ", ")),
            Body::Items(items) if items.is_empty() => write!(f, " {{}}"),
            Body::Items(items) => {
                writeln!(f, " {{")?;
                for it in items {
                    writeln!(f, "  {it};")?;
                }
                write!(f, "}}")
            }
        }
    }
}

fn join<T: Display>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}
