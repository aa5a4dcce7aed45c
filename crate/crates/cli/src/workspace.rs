//! Name resolution and construction of core objects from declarations.

use std::collections::BTreeMap;

use num_traits::Zero;

use confalg::cohom::{Cochain, CocycleData, Repr};
use confalg::diffalg::{op_compose, AlgebraSig, OpPoly};
use confalg::jetcur::{current_lcad, jet_pva, kahler_lad, LieAlgebroid, PoissonAlgebra};
use confalg::lambda::{lam_k, star, LAM};
use confalg::lcad::{dual_module, kahler_lcad, quotient_lad, sae_pva, semidirect, LCAdModule, LCAdStructure};
use confalg::pva::{CDerElement, PVAModule, PVAStructure};
use confalg::{Poly, Var};

use crate::ast::{Body, Decl, Entry, Expr, Ident, Item, Kind};
use crate::error::{CliError, Result};
use crate::parser::{parse_expr, parse_file};

const RESERVED: &[&str] = &[
    "D", "l", "m", "adjoint", "trivial", "gens", "params", "bracket", "anchor", "degree", "repr", "in", "on", "over",
];

#[derive(Clone, Debug)]
pub enum Object {
    Algebra(AlgebraSig),
    Pva(PVAStructure),
    Poisson(PoissonAlgebra),
    Lad(LieAlgebroid),
    /// `kahler_of` names the PVA `V` when this is `Ω(V)`.
    Lcad {
        l: LCAdStructure,
        kahler_of: Option<String>,
    },
    PvaModule {
        over: String,
        m: PVAModule,
    },
    LcadModule {
        over: String,
        m: LCAdModule,
    },
    Cochain {
        on: String,
        coeff: String,
        c: Cochain,
    },
    Cocycle {
        on: String,
        coeff: String,
        cd: CocycleData,
    },
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra(_) => "algebra",
            Object::Pva(_) => "pva",
            Object::Poisson(_) => "poisson",
            Object::Lad(_) => "lad",
            Object::Lcad { .. } => "lcad",
            Object::PvaModule { .. } | Object::LcadModule { .. } => "module",
            Object::Cochain { .. } => "cochain",
            Object::Cocycle { .. } => "cocycle",
        }
    }
}

/// Which λ-variables an expression may use.
#[derive(Clone, Copy, Debug)]
pub enum Lams {
    None,
    /// `l`
    One,
    /// `l1, …, lk`
    Slots(usize),
}

/// Names visible to an expression.
#[derive(Clone, Copy, Debug)]
pub struct Scope<'a> {
    pub u: &'a [String],
    pub params: &'a [String],
    pub e: &'a [String],
    pub w: &'a [String],
    pub lams: Lams,
    /// Jet variables and `D` are available (false on plain polynomial rings).
    pub jets: bool,
}

impl<'a> Scope<'a> {
    pub fn of(sig: &'a AlgebraSig, lams: Lams) -> Scope<'a> {
        Scope {
            u: &sig.gens,
            params: &sig.params,
            e: &[],
            w: &[],
            lams,
            jets: true,
        }
    }

    fn name(&self, file: &str, id: &Ident, order: u16) -> Result<OpPoly> {
        let err = |msg: String| CliError::parse(file, id.pos, msg);
        let n = id.name.as_str();
        let no_jet = |what: &str| {
            if order > 0 {
                Err(err(format!("{what} `{n}` has no derivatives")))
            } else {
                Ok(())
            }
        };
        if order > 0 && !self.jets {
            return Err(err(format!("derivatives are not available here (`{n}`)")));
        }
        let find = |names: &[String]| names.iter().position(|s| s == n);
        let var = |v: Var| Ok(OpPoly::scalar(Poly::var(v)));
        if n == "D" {
            if !self.jets {
                return Err(err("`D` is not available here".into()));
            }
            no_jet("the operator")?;
            return Ok(OpPoly::d());
        }
        if let Some(i) = find(self.u) {
            return var(Var::U(i as u16, order));
        }
        if let Some(p) = find(self.params) {
            no_jet("parameter")?;
            return var(Var::Param(p as u16));
        }
        if let Some(a) = find(self.e) {
            return var(Var::E(a as u16, order));
        }
        if let Some(k) = find(self.w) {
            return var(Var::W(k as u16, order));
        }
        if let Some(id) = lam_id(n) {
            no_jet("λ-variable")?;
            let ok = match (self.lams, id) {
                (Lams::One, LamName::L) => Some(LAM),
                (Lams::Slots(k), LamName::Slot(i)) if (1..=k).contains(&i) => Some(lam_k(i)),
                _ => None,
            };
            return match ok {
                Some(v) => Ok(OpPoly::scalar(Poly::lam(v))),
                None => Err(err(format!("λ-variable `{n}` is not available here"))),
            };
        }
        Err(err(format!("unknown name `{n}`")))
    }

    fn eval_op(&self, file: &str, e: &Expr) -> Result<OpPoly> {
        Ok(match e {
            Expr::Int(n) => OpPoly::scalar(Poly::int(*n as i64)),
            Expr::Name(id, order) => self.name(file, id, *order)?,
            Expr::Neg(a) => self.eval_op(file, a)?.neg(),
            Expr::Add(a, b) => self.eval_op(file, a)?.add(&self.eval_op(file, b)?),
            Expr::Sub(a, b) => self.eval_op(file, a)?.add(&self.eval_op(file, b)?.neg()),
            Expr::Mul(a, b) => op_compose(&self.eval_op(file, a)?, &self.eval_op(file, b)?),
            Expr::Div(a, b) => {
                let d = self.eval_op(file, b)?;
                let c = match d.coeffs() {
                    [c] => c.as_constant().filter(|c| !c.is_zero()),
                    _ => None,
                };
                let c = c.ok_or_else(|| CliError::parse(file, first_pos(b), "division is only by nonzero constants"))?;
                let inv = c.recip();
                OpPoly::new(self.eval_op(file, a)?.coeffs().iter().map(|p| p.scale(&inv)).collect())
            }
            Expr::Pow(a, n) => {
                let base = self.eval_op(file, a)?;
                let mut out = OpPoly::scalar(Poly::one());
                for _ in 0..*n {
                    out = op_compose(&out, &base);
                }
                out
            }
        })
    }

    /// The value of `e`; operators act to the right, so `D*u = u'` and a
    /// trailing `D` acts on 1.
    pub fn eval(&self, file: &str, e: &Expr) -> Result<Poly> {
        let op = self.eval_op(file, e)?;
        Ok(op.coeffs().first().cloned().unwrap_or_else(Poly::zero))
    }

    /// Parse and evaluate a free-standing expression.
    pub fn eval_str(&self, label: &str, src: &str) -> Result<Poly> {
        self.eval(label, &parse_expr(label, src)?)
    }
}

enum LamName {
    L,
    Slot(usize),
    Other,
}

fn lam_id(n: &str) -> Option<LamName> {
    if n == "l" {
        return Some(LamName::L);
    }
    if n == "m" {
        return Some(LamName::Other);
    }
    let digits = n.strip_prefix('l')?;
    if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
        return Some(digits.parse().map(LamName::Slot).unwrap_or(LamName::Other));
    }
    None
}

fn first_pos(e: &Expr) -> crate::ast::Pos {
    match e {
        Expr::Name(id, _) => id.pos,
        Expr::Neg(a) | Expr::Pow(a, _) => first_pos(a),
        Expr::Add(a, _) | Expr::Sub(a, _) | Expr::Mul(a, _) | Expr::Div(a, _) => first_pos(a),
        Expr::Int(_) => Default::default(),
    }
}

/// All declarations of a set of files, built in order.
#[derive(Debug, Default)]
pub struct Workspace {
    pub decls: Vec<Decl>,
    objects: BTreeMap<String, Object>,
}

impl Workspace {
    pub fn new() -> Workspace {
        Workspace::default()
    }

    /// Parse `src` and add its declarations; names are global across files.
    pub fn load(&mut self, file: &str, src: &str) -> Result<()> {
        for d in parse_file(file, src)? {
            self.add(file, d)?;
        }
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.decls.iter().map(|d| &d.name.name)
    }

    /// Look up a name given on the command line.
    pub fn lookup(&self, name: &str) -> Result<&Object> {
        self.get(name).ok_or_else(|| CliError::Usage(format!("unknown name `{name}`")))
    }

    fn at(&self, file: &str, id: &Ident) -> Result<&Object> {
        self.get(&id.name)
            .ok_or_else(|| CliError::parse(file, id.pos, format!("unresolved reference `{}`", id.name)))
    }

    fn add(&mut self, file: &str, d: Decl) -> Result<()> {
        let name = &d.name;
        if RESERVED.contains(&name.name.as_str()) || self.objects.contains_key(&name.name) {
            let why = if self.objects.contains_key(&name.name) {
                "is already declared"
            } else {
                "is reserved"
            };
            return Err(CliError::parse(file, name.pos, format!("`{}` {why}", name.name)));
        }
        let obj = self.build(file, &d)?;
        self.objects.insert(name.name.clone(), obj);
        self.decls.push(d);
        Ok(())
    }

    fn build(&self, file: &str, d: &Decl) -> Result<Object> {
        let bad = |id: &Ident, msg: String| CliError::parse(file, id.pos, msg);
        if d.coeff.is_some() && !matches!(d.kind, Kind::Cochain | Kind::Cocycle) {
            return Err(bad(&d.name, format!("a {} takes no `in` clause", d.kind.keyword())));
        }
        match &d.body {
            Body::Derived { op, args } => {
                if let Some(b) = &d.base {
                    return Err(bad(b, format!("a derived {} takes no `{}` clause", d.kind.keyword(), d.kind.link())));
                }
                self.derived(file, d.kind, op, args)
            }
            Body::Items(items) => {
                if d.kind == Kind::Algebra {
                    if let Some(b) = &d.base {
                        return Err(bad(b, "an algebra takes no `on` clause".into()));
                    }
                    return self.algebra(file, items);
                }
                let base = d
                    .base
                    .as_ref()
                    .ok_or_else(|| bad(&d.name, format!("expected `{}` before the body", d.kind.link())))?;
                match d.kind {
                    Kind::Algebra => unreachable!(),
                    Kind::Pva => self.pva(file, base, items),
                    Kind::Poisson => self.poisson(file, base, items),
                    Kind::Lad => self.lad(file, base, items),
                    Kind::Lcad => self.lcad(file, base, items),
                    Kind::Module => self.module(file, base, items),
                    Kind::Cochain | Kind::Cocycle => {
                        let coeff = d.coeff.as_ref().ok_or_else(|| bad(base, "expected `in <module>` after the base".into()))?;
                        if d.kind == Kind::Cochain {
                            self.cochain(file, base, coeff, items)
                        } else {
                            self.cocycle(file, base, coeff, items)
                        }
                    }
                }
            }
        }
    }

    fn derived(&self, file: &str, kind: Kind, op: &Ident, args: &[Ident]) -> Result<Object> {
        let arity = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(CliError::parse(
                    file,
                    op.pos,
                    format!("`{}` takes {n} argument(s), got {}", op.name, args.len()),
                ))
            }
        };
        let wrong = |id: &Ident, want: &str| {
            CliError::parse(
                file,
                id.pos,
                format!(
                    "`{}` expects {want} but `{}` is a {}",
                    op.name,
                    id.name,
                    self.get(&id.name).map_or("?", |o| o.kind())
                ),
            )
        };
        match (kind, op.name.as_str()) {
            (Kind::Lcad, "kahler") => {
                arity(1)?;
                match self.at(file, &args[0])? {
                    Object::Pva(p) => Ok(Object::Lcad {
                        l: kahler_lcad(p)?,
                        kahler_of: Some(args[0].name.clone()),
                    }),
                    _ => Err(wrong(&args[0], "a pva")),
                }
            }
            (Kind::Lcad, "current") => {
                arity(1)?;
                match self.at(file, &args[0])? {
                    Object::Lad(l) => Ok(Object::Lcad {
                        l: current_lcad(l)?,
                        kahler_of: None,
                    }),
                    _ => Err(wrong(&args[0], "a lad")),
                }
            }
            (Kind::Lcad, "semidirect") => {
                arity(2)?;
                let l = self.lcad_of(file, &args[0])?;
                let m = self.lcad_module(file, &args[0], &args[1])?;
                Ok(Object::Lcad {
                    l: semidirect(l, &m)?,
                    kahler_of: None,
                })
            }
            (Kind::Pva, "sae") => {
                arity(1)?;
                Ok(Object::Pva(sae_pva(self.lcad_of(file, &args[0])?)?))
            }
            (Kind::Pva, "jet") => {
                arity(1)?;
                match self.at(file, &args[0])? {
                    Object::Poisson(p) => Ok(Object::Pva(jet_pva(p)?)),
                    _ => Err(wrong(&args[0], "a poisson algebra")),
                }
            }
            (Kind::Lad, "quotient") => {
                arity(1)?;
                Ok(Object::Lad(quotient_lad(self.lcad_of(file, &args[0])?)))
            }
            (Kind::Lad, "kahler") => {
                arity(1)?;
                match self.at(file, &args[0])? {
                    Object::Poisson(p) => Ok(Object::Lad(kahler_lad(p)?)),
                    _ => Err(wrong(&args[0], "a poisson algebra")),
                }
            }
            (Kind::Module, "dual") => {
                arity(1)?;
                match self.at(file, &args[0])? {
                    Object::LcadModule { over, m } => Ok(Object::LcadModule {
                        over: over.clone(),
                        m: dual_module(m)?,
                    }),
                    _ => Err(wrong(&args[0], "a module over an lcad")),
                }
            }
            _ => Err(CliError::parse(file, op.pos, format!("no construction `{}` for a {}", op.name, kind.keyword()))),
        }
    }

    fn algebra(&self, file: &str, items: &[Item]) -> Result<Object> {
        let mut gens = Vec::new();
        let mut params = Vec::new();
        for it in items {
            match it {
                Item::Gens(g) => gens.extend(g.iter().cloned()),
                Item::Params(p) => params.extend(p.iter().cloned()),
                _ => return Err(item_error(file, it, "an algebra holds only `gens` and `params`")),
            }
        }
        fresh_names(file, &[&gens, &params])?;
        Ok(Object::Algebra(AlgebraSig {
            gens: gens.into_iter().map(|i| i.name).collect(),
            params: params.into_iter().map(|i| i.name).collect(),
        }))
    }

    fn algebra_of(&self, file: &str, id: &Ident) -> Result<&AlgebraSig> {
        match self.at(file, id)? {
            Object::Algebra(s) => Ok(s),
            o => Err(CliError::parse(file, id.pos, format!("`{}` is a {}, expected an algebra", id.name, o.kind()))),
        }
    }

    pub(crate) fn lcad_of(&self, file: &str, id: &Ident) -> Result<&LCAdStructure> {
        match self.at(file, id)? {
            Object::Lcad { l, .. } => Ok(l),
            o => Err(CliError::parse(file, id.pos, format!("`{}` is a {}, expected an lcad", id.name, o.kind()))),
        }
    }

    /// Coefficients for an LCAd: `trivial`, `adjoint` (on `Ω(V)` only), a
    /// module over it, or a module over `V` when it is `Ω(V)`.
    pub(crate) fn lcad_module(&self, file: &str, lcad: &Ident, m: &Ident) -> Result<LCAdModule> {
        let kahler_of = match self.at(file, lcad)? {
            Object::Lcad { kahler_of, .. } => kahler_of.clone(),
            o => return Err(CliError::parse(file, lcad.pos, format!("`{}` is a {}, expected an lcad", lcad.name, o.kind()))),
        };
        let transfer = |module: PVAModule| -> Result<LCAdModule> {
            let v = kahler_of.as_ref().unwrap();
            let Some(Object::Pva(p)) = self.get(v) else { unreachable!() };
            Ok(LCAdModule::Transfer { pva: p.clone(), module })
        };
        match m.name.as_str() {
            "trivial" => return Ok(LCAdModule::Trivial),
            "adjoint" if kahler_of.is_some() => return transfer(PVAModule::Adjoint),
            "adjoint" => {
                return Err(CliError::parse(
                    file,
                    m.pos,
                    format!("adjoint coefficients need `{}` to be kahler(<pva>)", lcad.name),
                ))
            }
            _ => {}
        }
        match self.at(file, m)? {
            Object::LcadModule { over, m: md } if *over == lcad.name => Ok(md.clone()),
            Object::PvaModule { over, m: md } if Some(over) == kahler_of.as_ref() => transfer(md.clone()),
            Object::LcadModule { over, .. } | Object::PvaModule { over, .. } => Err(CliError::parse(
                file,
                m.pos,
                format!("`{}` is a module over `{over}`, not over `{}`", m.name, lcad.name),
            )),
            o => Err(CliError::parse(file, m.pos, format!("`{}` is a {}, expected a module", m.name, o.kind()))),
        }
    }

    pub(crate) fn pva_module(&self, file: &str, pva: &Ident, m: &Ident) -> Result<PVAModule> {
        if m.name == "adjoint" {
            return Ok(PVAModule::Adjoint);
        }
        match self.at(file, m)? {
            Object::PvaModule { over, m: md } if *over == pva.name => Ok(md.clone()),
            Object::PvaModule { over, .. } | Object::LcadModule { over, .. } => Err(CliError::parse(
                file,
                m.pos,
                format!("`{}` is a module over `{over}`, not over `{}`", m.name, pva.name),
            )),
            o => Err(CliError::parse(file, m.pos, format!("`{}` is a {}, expected a module", m.name, o.kind()))),
        }
    }

    fn pva(&self, file: &str, base: &Ident, items: &[Item]) -> Result<Object> {
        let sig = self.algebra_of(file, base)?;
        let scope = Scope::of(sig, Lams::One);
        let entries = self.table(file, items, &sig.gens, &sig.gens, &scope)?;
        Ok(Object::Pva(PVAStructure::from_entries(sig.clone(), &entries)?))
    }

    fn poisson(&self, file: &str, base: &Ident, items: &[Item]) -> Result<Object> {
        let sig = self.algebra_of(file, base)?;
        let scope = Scope {
            jets: false,
            ..Scope::of(sig, Lams::None)
        };
        let entries = self.table(file, items, &sig.gens, &sig.gens, &scope)?;
        Ok(Object::Poisson(PoissonAlgebra::from_entries(sig.clone(), &entries)?))
    }

    /// Entries `a b = expr` with `a ∈ rows`, `b ∈ cols`, each pair at most once.
    fn table(&self, file: &str, items: &[Item], rows: &[String], cols: &[String], scope: &Scope) -> Result<Vec<(usize, usize, Poly)>> {
        let mut out: Vec<(usize, usize, Poly)> = Vec::new();
        for it in items {
            let Item::Entry(e) = it else {
                return Err(item_error(file, it, "expected a table entry `a b = value`"));
            };
            out.push(self.entry(file, e, rows, cols, scope, &out)?);
        }
        Ok(out)
    }

    fn entry(&self, file: &str, e: &Entry, rows: &[String], cols: &[String], scope: &Scope, seen: &[(usize, usize, Poly)]) -> Result<(usize, usize, Poly)> {
        let i = index_of(file, &e.left, rows)?;
        let j = index_of(file, &e.right, cols)?;
        if seen.iter().any(|(a, b, _)| (*a, *b) == (i, j)) {
            return Err(CliError::parse(file, e.left.pos, format!("entry `{} {}` is given twice", e.left, e.right)));
        }
        Ok((i, j, scope.eval(file, &e.value)?))
    }

    /// `gens`, `bracket` and `anchor` items of an algebroid body.
    fn algebroid_items<'i>(&self, file: &str, items: &'i [Item]) -> Result<(Vec<Ident>, Vec<&'i Entry>, Vec<&'i Entry>)> {
        let (mut gens, mut br, mut an) = (Vec::new(), Vec::new(), Vec::new());
        for it in items {
            match it {
                Item::Gens(g) => gens.extend(g.iter().cloned()),
                Item::Bracket(e) => br.push(e),
                Item::Anchor(e) => an.push(e),
                _ => return Err(item_error(file, it, "expected `gens`, `bracket` or `anchor`")),
            }
        }
        Ok((gens, br, an))
    }

    fn lad(&self, file: &str, base: &Ident, items: &[Item]) -> Result<Object> {
        let ring = self.algebra_of(file, base)?;
        let (gens, br, an) = self.algebroid_items(file, items)?;
        fresh_names(file, &[&gens])?;
        clash(file, &gens, &[&ring.gens, &ring.params])?;
        let fgens: Vec<String> = gens.iter().map(|g| g.name.clone()).collect();
        let scope = Scope {
            e: &fgens,
            jets: false,
            ..Scope::of(ring, Lams::None)
        };
        let r = fgens.len();
        let mut seen = Vec::new();
        for e in &br {
            seen.push(self.entry(file, e, &fgens, &fgens, &scope, &seen)?);
        }
        let bracket = fill_skew(r, &seen, |p| -p);
        let mut anchor = vec![vec![Poly::zero(); ring.rank()]; r];
        let mut seen_a = Vec::new();
        for e in &an {
            let (a, x, v) = self.entry(file, e, &fgens, &ring.gens, &Scope { e: &[], ..scope }, &seen_a)?;
            anchor[a][x] = v.clone();
            seen_a.push((a, x, v));
        }
        Ok(Object::Lad(LieAlgebroid::new(ring.clone(), fgens, bracket, anchor)?))
    }

    fn lcad(&self, file: &str, base: &Ident, items: &[Item]) -> Result<Object> {
        let sig = self.algebra_of(file, base)?;
        let (gens, br, an) = self.algebroid_items(file, items)?;
        fresh_names(file, &[&gens])?;
        clash(file, &gens, &[&sig.gens, &sig.params])?;
        let egens: Vec<String> = gens.iter().map(|g| g.name.clone()).collect();
        let scope = Scope {
            e: &egens,
            ..Scope::of(sig, Lams::One)
        };
        let r = egens.len();
        let mut seen = Vec::new();
        for e in &br {
            seen.push(self.entry(file, e, &egens, &egens, &scope, &seen)?);
        }
        let bracket = fill_skew(r, &seen, |p| -&star(p, Var::Lam(LAM)));
        let mut anchor = vec![CDerElement::zero(sig.rank()); r];
        let mut seen_a = Vec::new();
        for e in &an {
            let (a, x, v) = self.entry(file, e, &egens, &sig.gens, &Scope { e: &[], ..scope }, &seen_a)?;
            anchor[a].values[x] = v.clone();
            seen_a.push((a, x, v));
        }
        Ok(Object::Lcad {
            l: LCAdStructure::new(sig.clone(), egens, bracket, anchor)?,
            kahler_of: None,
        })
    }

    fn module(&self, file: &str, base: &Ident, items: &[Item]) -> Result<Object> {
        let mut gens = Vec::new();
        let mut entries = Vec::new();
        for it in items {
            match it {
                Item::Gens(g) => gens.extend(g.iter().cloned()),
                Item::Entry(e) => entries.push(e),
                _ => return Err(item_error(file, it, "expected `gens` or an entry `a w = value`")),
            }
        }
        fresh_names(file, &[&gens])?;
        let wgens: Vec<String> = gens.iter().map(|g| g.name.clone()).collect();
        let (sig, rows, is_pva) = match self.at(file, base)? {
            Object::Pva(p) => (&p.sig, p.sig.gens.clone(), true),
            Object::Lcad { l, .. } => (&l.sig, l.egens.clone(), false),
            o => {
                return Err(CliError::parse(
                    file,
                    base.pos,
                    format!("`{}` is a {}, expected a pva or an lcad", base.name, o.kind()),
                ))
            }
        };
        clash(file, &gens, &[&sig.gens, &sig.params, &rows])?;
        let scope = Scope {
            w: &wgens,
            ..Scope::of(sig, Lams::One)
        };
        let mut table = vec![vec![Poly::zero(); wgens.len()]; rows.len()];
        let mut seen = Vec::new();
        for e in entries {
            let (a, k, v) = self.entry(file, e, &rows, &wgens, &scope, &seen)?;
            table[a][k] = v.clone();
            seen.push((a, k, v));
        }
        let over = base.name.clone();
        Ok(if is_pva {
            Object::PvaModule {
                over,
                m: PVAModule::Free { names: wgens, table },
            }
        } else {
            Object::LcadModule {
                over,
                m: LCAdModule::Free { names: wgens, table },
            }
        })
    }

    /// Generator names, signature and module generator names for cochains
    /// on `base` with coefficients `coeff`.
    fn cochain_setting(&self, file: &str, base: &Ident, coeff: &Ident) -> Result<(Vec<String>, AlgebraSig, Vec<String>)> {
        match self.at(file, base)? {
            Object::Lcad { l, .. } => {
                let m = self.lcad_module(file, base, coeff)?;
                Ok((l.egens.clone(), l.sig.clone(), lcad_module_names(&m)))
            }
            Object::Pva(p) => {
                let m = self.pva_module(file, base, coeff)?;
                let w = match m {
                    PVAModule::Free { names, .. } => names,
                    PVAModule::Adjoint => Vec::new(),
                };
                Ok((p.sig.gens.clone(), p.sig.clone(), w))
            }
            o => Err(CliError::parse(
                file,
                base.pos,
                format!("`{}` is a {}, expected a pva or an lcad", base.name, o.kind()),
            )),
        }
    }

    fn cochain(&self, file: &str, base: &Ident, coeff: &Ident, items: &[Item]) -> Result<Object> {
        let (gens, sig, w) = self.cochain_setting(file, base, coeff)?;
        let mut degree = None;
        let mut repr = None;
        let mut raw = Vec::new();
        for it in items {
            match it {
                Item::Degree(k) => degree = Some(*k),
                Item::Repr(r) => {
                    repr = Some(match r.name.as_str() {
                        "quotient" => Repr::Quotient,
                        "basic" => Repr::Basic,
                        "reduced" => Repr::Reduced,
                        _ => return Err(CliError::parse(file, r.pos, "expected one of `quotient`, `basic`, `reduced`")),
                    })
                }
                Item::Value(t, v) => raw.push((t, v)),
                _ => return Err(item_error(file, it, "expected `degree`, `repr` or a value `[a, b] = …`")),
            }
        }
        let k = degree.ok_or_else(|| CliError::parse(file, base.pos, "a cochain needs `degree k`"))?;
        let scope = Scope {
            w: &w,
            ..Scope::of(&sig, Lams::Slots(k))
        };
        let mut values = BTreeMap::new();
        for (t, v) in raw {
            let pos = t.first().map_or(base.pos, |i| i.pos);
            if t.len() != k {
                return Err(CliError::parse(
                    file,
                    pos,
                    format!("a degree-{k} cochain takes {k} argument(s), got {}", t.len()),
                ));
            }
            let idx = t.iter().map(|i| index_of(file, i, &gens)).collect::<Result<Vec<_>>>()?;
            if idx.windows(2).any(|p| p[0] > p[1]) {
                return Err(CliError::parse(
                    file,
                    pos,
                    "list arguments in generator order; other orders follow by skewsymmetry",
                ));
            }
            if values.insert(idx, scope.eval(file, v)?).is_some() {
                return Err(CliError::parse(file, pos, "value is given twice"));
            }
        }
        let c = Cochain::new(k, repr.unwrap_or(Repr::Quotient), gens.len(), values)?;
        Ok(Object::Cochain {
            on: base.name.clone(),
            coeff: coeff.name.clone(),
            c,
        })
    }

    fn cocycle(&self, file: &str, base: &Ident, coeff: &Ident, items: &[Item]) -> Result<Object> {
        let l = self.lcad_of(file, base)?;
        let m = self.lcad_module(file, base, coeff)?;
        let w = lcad_module_names(&m);
        let scope = Scope {
            w: &w,
            ..Scope::of(&l.sig, Lams::One)
        };
        let entries = self.table(file, items, &l.egens, &l.egens, &scope)?;
        let omega = fill_skew(l.rank(), &entries, |p| -&star(p, Var::Lam(LAM)));
        Ok(Object::Cocycle {
            on: base.name.clone(),
            coeff: coeff.name.clone(),
            cd: CocycleData::new(omega),
        })
    }
}

fn lcad_module_names(m: &LCAdModule) -> Vec<String> {
    match m {
        LCAdModule::Free { names, .. } | LCAdModule::Dual { names, .. } => names.clone(),
        LCAdModule::Transfer {
            module: PVAModule::Free { names, .. },
            ..
        } => names.clone(),
        _ => Vec::new(),
    }
}

/// Square table from ordered entries; a missing `(j,i)` is `skew((i,j))`.
fn fill_skew(r: usize, entries: &[(usize, usize, Poly)], skew: impl Fn(&Poly) -> Poly) -> Vec<Vec<Poly>> {
    let mut given: Vec<Vec<Option<Poly>>> = vec![vec![None; r]; r];
    for (i, j, v) in entries {
        given[*i][*j] = Some(v.clone());
    }
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| match (&given[i][j], &given[j][i]) {
                    (Some(v), _) => v.clone(),
                    (None, Some(v)) => skew(v),
                    (None, None) => Poly::zero(),
                })
                .collect()
        })
        .collect()
}

fn index_of(file: &str, id: &Ident, names: &[String]) -> Result<usize> {
    names
        .iter()
        .position(|n| *n == id.name)
        .ok_or_else(|| CliError::parse(file, id.pos, format!("`{}` is not one of the generators {}", id.name, names.join(", "))))
}

fn item_error(file: &str, it: &Item, msg: &str) -> CliError {
    let pos = match it {
        Item::Gens(g) | Item::Params(g) => g[0].pos,
        Item::Bracket(e) | Item::Anchor(e) | Item::Entry(e) => e.left.pos,
        Item::Repr(r) => r.pos,
        Item::Value(t, _) => t.first().map(|i| i.pos).unwrap_or_default(),
        Item::Degree(_) => Default::default(),
    };
    CliError::parse(file, pos, format!("{msg}, found `{it}`"))
}

/// New generator names: not reserved, not λ-like, pairwise distinct.
fn fresh_names(file: &str, groups: &[&[Ident]]) -> Result<()> {
    let mut seen: Vec<&str> = Vec::new();
    for id in groups.iter().flat_map(|g| g.iter()) {
        let n = id.name.as_str();
        if RESERVED.contains(&n) || lam_id(n).is_some() {
            return Err(CliError::parse(file, id.pos, format!("`{n}` is reserved")));
        }
        if seen.contains(&n) {
            return Err(CliError::parse(file, id.pos, format!("`{n}` is declared twice")));
        }
        seen.push(n);
    }
    Ok(())
}

fn clash(file: &str, new: &[Ident], old: &[&[String]]) -> Result<()> {
    for id in new {
        if old.iter().any(|g| g.contains(&id.name)) {
            return Err(CliError::parse(file, id.pos, format!("`{}` clashes with an existing name", id.name)));
        }
    }
    Ok(())
}
