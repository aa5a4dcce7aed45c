//! Command dispatch.

use confalg::cohom::{check_phi, cocycle_check, dsq_check_lcad, dsq_check_pva, extension_from_cocycle, lcad_d, pva_d, Cochain, Repr, MAX_TARGET_DEGREE};
use confalg::jetcur::{check_lad, check_poisson, current_lcad, jet_kahler_roundtrip, kahler_lad, roundtrip_check, LieAlgebroid};
use confalg::lcad::{check_lcad, check_lcad_samples, check_module, kahler_lcad, lcad_bracket, quotient_lad, sae_pva, semidirect, Algebroid, LCAdStructure};
use confalg::pva::{check_pva, check_pva_module, check_pva_samples, pva_bracket, PVAStructure};
use confalg::report::Report;
use confalg::Names;

use crate::ast::Ident;
use crate::error::{CliError, Result};
use crate::workspace::{Lams, Object, Scope, Workspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Check(String),
    Bracket(String, String, String),
    Kahler(String),
    Current(String),
    Quotient(String),
    Sae(String),
    Semidirect(String, String),
    D(String),
    Dsq(String, String, usize),
    Phi(String, String, usize),
    Extension(String, String, String),
    Roundtrip(String),
}

impl Command {
    /// The command as typed, for the report header.
    pub fn echo(&self) -> String {
        let words: Vec<String> = match self {
            Command::Check(a) => vec!["check".into(), a.clone()],
            Command::Bracket(a, f, g) => vec!["bracket".into(), a.clone(), f.clone(), g.clone()],
            Command::Kahler(a) => vec!["kahler".into(), a.clone()],
            Command::Current(a) => vec!["current".into(), a.clone()],
            Command::Quotient(a) => vec!["quotient".into(), a.clone()],
            Command::Sae(a) => vec!["sae".into(), a.clone()],
            Command::Semidirect(a, m) => vec!["semidirect".into(), a.clone(), m.clone()],
            Command::D(a) => vec!["d".into(), a.clone()],
            Command::Dsq(a, m, k) => vec!["dsq".into(), a.clone(), m.clone(), k.to_string()],
            Command::Phi(a, m, k) => vec!["phi".into(), a.clone(), m.clone(), k.to_string()],
            Command::Extension(a, m, c) => vec!["extension".into(), a.clone(), m.clone(), c.clone()],
            Command::Roundtrip(a) => vec!["roundtrip".into(), a.clone()],
        };
        words.join(" ")
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub seed: Option<u64>,
    /// Restrict cochain checks to one representation.
    pub repr: Option<Repr>,
    /// Overrides the per-command sample count.
    pub samples: Option<usize>,
}

impl Options {
    fn seed(&self, what: &str) -> Result<u64> {
        self.seed
            .ok_or_else(|| CliError::Usage(format!("{what} samples random elements; pass --seed N")))
    }

    fn samples(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    fn reprs(&self) -> Vec<Repr> {
        match self.repr {
            Some(r) => vec![r],
            None => vec![Repr::Quotient, Repr::Basic, Repr::Reduced],
        }
    }
}

const CHECK_SAMPLES: usize = 20;
const DSQ_SAMPLES: usize = 10;
const PHI_SAMPLES: usize = 3;

fn repr_name(r: Repr) -> &'static str {
    match r {
        Repr::Quotient => "quotient",
        Repr::Basic => "basic",
        Repr::Reduced => "reduced",
    }
}

fn arg(name: &str) -> Ident {
    Ident {
        name: name.to_string(),
        pos: Default::default(),
    }
}

/// Map workspace errors on command-line names to usage errors.
fn usage<T>(r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        CliError::Parse { msg, .. } => CliError::Usage(msg),
        e => e,
    })
}

fn wrong(name: &str, obj: &Object, want: &str) -> CliError {
    CliError::Usage(format!("`{name}` is a {}, expected {want}", obj.kind()))
}

pub fn run(ws: &Workspace, cmd: &Command, opts: &Options) -> Result<Report> {
    match cmd {
        Command::Check(n) => check(ws, n, opts),
        Command::Bracket(n, f, g) => bracket(ws, n, f, g),
        Command::Kahler(n) => match ws.lookup(n)? {
            Object::Pva(p) => lcad_report(&kahler_lcad(p)?),
            Object::Poisson(p) => lad_report(&kahler_lad(p)?),
            o => Err(wrong(n, o, "a pva or a poisson algebra")),
        },
        Command::Current(n) => match ws.lookup(n)? {
            Object::Lad(l) => lcad_report(&current_lcad(l)?),
            o => Err(wrong(n, o, "a lad")),
        },
        Command::Quotient(n) => lad_report(&quotient_lad(lcad(ws, n)?)),
        Command::Sae(n) => pva_report(&sae_pva(lcad(ws, n)?)?),
        Command::Semidirect(n, m) => {
            let md = usage(ws.lcad_module("<args>", &arg(n), &arg(m)))?;
            lcad_report(&semidirect(lcad(ws, n)?, &md)?)
        }
        Command::D(n) => differential(ws, n),
        Command::Dsq(n, m, k) => {
            let seed = opts.seed("dsq")?;
            let samples = opts.samples(DSQ_SAMPLES);
            let mut rep = Report::new();
            for r in opts.reprs() {
                let part = match ws.lookup(n)? {
                    Object::Lcad { l, .. } => {
                        let md = usage(ws.lcad_module("<args>", &arg(n), &arg(m)))?;
                        dsq_check_lcad(l, &md, *k, r, seed, samples)?
                    }
                    Object::Pva(p) => {
                        let md = usage(ws.pva_module("<args>", &arg(n), &arg(m)))?;
                        dsq_check_pva(p, &md, *k, r, seed, samples)?
                    }
                    o => return Err(wrong(n, o, "an lcad or a pva")),
                };
                rep.extend(part.prefixed(&format!("{}.", repr_name(r))));
            }
            Ok(rep)
        }
        Command::Phi(n, m, k) => {
            let seed = opts.seed("phi")?;
            let p = match ws.lookup(n)? {
                Object::Pva(p) => p,
                o => return Err(wrong(n, o, "a pva")),
            };
            let md = usage(ws.pva_module("<args>", &arg(n), &arg(m)))?;
            let mut rep = Report::new();
            for r in opts.reprs() {
                let part = check_phi(p, &md, *k, r, seed, opts.samples(PHI_SAMPLES))?;
                rep.extend(part.prefixed(&format!("{}.", repr_name(r))));
            }
            Ok(rep)
        }
        Command::Extension(n, m, c) => {
            let l = lcad(ws, n)?;
            let md = usage(ws.lcad_module("<args>", &arg(n), &arg(m)))?;
            let cd = match ws.lookup(c)? {
                Object::Cocycle { on, coeff, cd } if on == n && coeff == m => cd,
                Object::Cocycle { on, coeff, .. } => return Err(CliError::Usage(format!("`{c}` is a cocycle on `{on}` in `{coeff}`, not on `{n}` in `{m}`"))),
                o => return Err(wrong(c, o, "a cocycle")),
            };
            let mut rep = cocycle_check(l, &md, cd)?.prefixed("cocycle.");
            if rep.pass() {
                let ext = extension_from_cocycle(l, &md, cd)?;
                rep.extend(check_lcad(&ext)?.prefixed("extension."));
            }
            Ok(rep)
        }
        Command::Roundtrip(n) => {
            let mut rep = Report::new();
            match ws.lookup(n)? {
                Object::Lad(l) => {
                    rep.flag("roundtrip", roundtrip_check(l)?);
                    rep.extend(check_lcad(&current_lcad(l)?)?.prefixed("current."));
                }
                Object::Poisson(p) => {
                    rep.flag("roundtrip", jet_kahler_roundtrip(p)?);
                    rep.extend(check_poisson(p).prefixed("poisson."));
                }
                o => return Err(wrong(n, o, "a lad or a poisson algebra")),
            }
            Ok(rep)
        }
    }
}

fn lcad<'w>(ws: &'w Workspace, n: &str) -> Result<&'w LCAdStructure> {
    match ws.lookup(n)? {
        Object::Lcad { l, .. } => Ok(l),
        o => Err(wrong(n, o, "an lcad")),
    }
}

fn check(ws: &Workspace, n: &str, opts: &Options) -> Result<Report> {
    let samples = opts.samples(CHECK_SAMPLES);
    Ok(match ws.lookup(n)? {
        Object::Algebra(_) => Report::new(),
        Object::Pva(p) => {
            let mut rep = check_pva(p)?;
            if let Some(seed) = opts.seed {
                rep.extend(check_pva_samples(p, seed, samples)?);
            }
            rep
        }
        Object::Lcad { l, .. } => {
            let mut rep = check_lcad(l)?;
            if let Some(seed) = opts.seed {
                rep.extend(check_lcad_samples(l, seed, samples)?);
            }
            rep
        }
        Object::Lad(l) => check_lad(l)?,
        Object::Poisson(p) => check_poisson(p),
        Object::PvaModule { over, m } => {
            let Some(Object::Pva(p)) = ws.get(over) else { unreachable!() };
            check_pva_module(p, m, opts.seed("checking a module")?, samples)?
        }
        Object::LcadModule { over, m } => {
            let Some(Object::Lcad { l, .. }) = ws.get(over) else { unreachable!() };
            check_module(l, m, opts.seed("checking a module")?, samples)?
        }
        Object::Cocycle { on, coeff, cd } => {
            let l = lcad(ws, on)?;
            let md = usage(ws.lcad_module("<args>", &arg(on), &arg(coeff)))?;
            cocycle_check(l, &md, cd)?
        }
        Object::Cochain { .. } => {
            let mut rep = Report::new();
            rep.flag("well_defined", true);
            rep
        }
    })
}

fn bracket(ws: &Workspace, n: &str, f: &str, g: &str) -> Result<Report> {
    let mut rep = Report::new();
    let (lhs, value, names) = match ws.lookup(n)? {
        Object::Pva(p) => {
            let s = Scope::of(&p.sig, Lams::None);
            let (a, b) = (s.eval_str("<f>", f)?, s.eval_str("<g>", g)?);
            let names = p.names();
            let lhs = format!("{{{} l {}}}", names.render(&a), names.render(&b));
            (lhs, pva_bracket(p, &a, &b)?, names)
        }
        Object::Lcad { l, .. } => {
            let s = Scope {
                e: &l.egens,
                ..Scope::of(&l.sig, Lams::None)
            };
            let (a, b) = (s.eval_str("<f>", f)?, s.eval_str("<g>", g)?);
            let names = l.names();
            let lhs = format!("[{} l {}]", names.render(&a), names.render(&b));
            (lhs, lcad_bracket(l, &a, &b)?, names)
        }
        Object::Lad(l) => {
            let s = Scope {
                e: &l.fgens,
                jets: false,
                ..Scope::of(&l.ring, Lams::None)
            };
            let (a, b) = (s.eval_str("<f>", f)?, s.eval_str("<g>", g)?);
            let names = l.names();
            let lhs = format!("[{}, {}]", names.render(&a), names.render(&b));
            (lhs, l.bracket_apply(&a, &b)?, names)
        }
        Object::Poisson(p) => {
            let s = Scope {
                jets: false,
                ..Scope::of(&p.ring, Lams::None)
            };
            let (a, b) = (s.eval_str("<f>", f)?, s.eval_str("<g>", g)?);
            let names = p.ring.names();
            let lhs = format!("{{{}, {}}}", names.render(&a), names.render(&b));
            (lhs, p.bracket(&a, &b), names)
        }
        o => return Err(wrong(n, o, "a pva, lcad, lad or poisson algebra")),
    };
    rep.push("bracket", None, lhs, names.render(&value), true);
    Ok(rep)
}

fn differential(ws: &Workspace, n: &str) -> Result<Report> {
    let (on, coeff, c) = match ws.lookup(n)? {
        Object::Cochain { on, coeff, c } => (on, coeff, c),
        o => return Err(wrong(n, o, "a cochain")),
    };
    let k = c.degree;
    type D<'a> = Box<dyn Fn(&Cochain) -> confalg::Result<Cochain> + 'a>;
    let (d, names, gens): (D, Names, &[String]) = match ws.lookup(on)? {
        Object::Lcad { l, .. } => {
            let md = usage(ws.lcad_module("<args>", &arg(on), &arg(coeff)))?;
            let names = md.names(l);
            (Box::new(move |c| lcad_d(l, &md, c)), names, &l.egens)
        }
        Object::Pva(p) => {
            let md = usage(ws.pva_module("<args>", &arg(on), &arg(coeff)))?;
            let names = md.names(p);
            (Box::new(move |c| pva_d(p, &md, c)), names, &p.sig.gens)
        }
        o => return Err(wrong(on, o, "an lcad or a pva")),
    };
    let dc = d(c)?;
    let mut rep = Report::new();
    rep.push("d", Some(k), render_cochain(c, gens, &names), render_cochain(&dc, gens, &names), true);
    if k + 2 <= MAX_TARGET_DEGREE {
        let ddc = d(&dc)?;
        rep.push("dd", Some(k), render_cochain(&ddc, gens, &names), "0".into(), ddc.is_zero());
    }
    Ok(rep)
}

/// `[a, b] = value; …` over the stored tuples, or `0`.
fn render_cochain(c: &Cochain, gens: &[String], names: &Names) -> String {
    let parts: Vec<String> = c
        .values()
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(t, v)| {
            let args: Vec<&str> = t.iter().map(|&i| gens[i].as_str()).collect();
            format!("[{}] = {}", args.join(", "), names.render(v))
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("; ")
    }
}

fn pva_report(p: &PVAStructure) -> Result<Report> {
    let names = p.names();
    let mut rep = Report::new();
    for (i, a) in p.sig.gens.iter().enumerate() {
        for (j, b) in p.sig.gens.iter().enumerate() {
            rep.push(format!("bracket({a},{b})"), None, format!("{{{a} l {b}}}"), names.render(&p.table[i][j]), true);
        }
    }
    rep.extend(check_pva(p)?.prefixed("check."));
    Ok(rep)
}

fn lcad_report(l: &LCAdStructure) -> Result<Report> {
    let names = l.names();
    let mut rep = Report::new();
    for (a, ea) in l.egens.iter().enumerate() {
        for (b, eb) in l.egens.iter().enumerate() {
            rep.push(
                format!("bracket({ea},{eb})"),
                None,
                format!("[{ea} l {eb}]"),
                names.render(&l.bracket[a][b]),
                true,
            );
        }
    }
    for (a, ea) in l.egens.iter().enumerate() {
        for (i, u) in l.sig.gens.iter().enumerate() {
            rep.push(
                format!("anchor({ea},{u})"),
                None,
                format!("{ea} l {u}"),
                names.render(&l.anchor[a].values[i]),
                true,
            );
        }
    }
    rep.extend(check_lcad(l)?.prefixed("check."));
    Ok(rep)
}

fn lad_report(l: &LieAlgebroid) -> Result<Report> {
    let names = l.names();
    let mut rep = Report::new();
    for (a, fa) in l.fgens.iter().enumerate() {
        for (b, fb) in l.fgens.iter().enumerate() {
            rep.push(
                format!("bracket({fa},{fb})"),
                None,
                format!("[{fa}, {fb}]"),
                names.render(&l.bracket[a][b]),
                true,
            );
        }
    }
    for (a, fa) in l.fgens.iter().enumerate() {
        for (j, x) in l.ring.gens.iter().enumerate() {
            rep.push(format!("anchor({fa},{x})"), None, format!("{fa}({x})"), names.render(&l.anchor[a][j]), true);
        }
    }
    rep.extend(check_lad(l)?.prefixed("check."));
    Ok(rep)
}
