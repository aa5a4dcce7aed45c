//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use confalg::catalogue::{affine_plane, euler_line, gfz, symplectic_plane, tangent_line, virasoro};
use confalg::cohom::*;
use confalg::diffalg::AlgebraSig;
use confalg::jetcur::{current_lcad, jet_kahler_roundtrip, roundtrip_check, LieAlgebroid, PoissonAlgebra};
use confalg::lambda::{star, LAM};
use confalg::lcad::{check_lcad, check_lcad_samples, kahler_lcad, quotient_lad, sae_pva, LCAdModule};
use confalg::oracle::check_kernel_oracles;
use confalg::pva::{check_pva, check_pva_samples, PVAModule, PVAStructure};
use confalg::report::{Report, Verdict};
use confalg::sample::Sampler;
use confalg::{Poly, Result, Var};
use confalg_cli::Format;

type Outcome = std::result::Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn passes(what: &str, rep: Result<Report>) -> Outcome {
    let rep = rep.map_err(|e| format!("{what}: {e}"))?;
    let first = rep.failures().next().map(|r| format!("{what}: {} fails, lhs {} rhs {}", r.id, r.lhs, r.rhs));
    first.map_or(Ok(()), Err)
}

fn holds(what: &str, ok: Result<bool>) -> Outcome {
    match ok {
        Ok(true) => Ok(()),
        Ok(false) => Err(what.to_string()),
        Err(e) => Err(format!("{what}: {e}")),
    }
}

fn lam() -> Poly {
    Poly::lam(LAM)
}

fn pva_axioms() -> Outcome {
    passes("gfz", check_pva(&gfz()))?;
    passes("virasoro", check_pva(&virasoro()))?;
    let mutated = PVAStructure::new(AlgebraSig::new(&["u"], &[]), vec![vec![&lam() + &Poly::var(Var::U(0, 0))]]).unwrap();
    let rep = check_pva(&mutated).map_err(|e| e.to_string())?;
    let shown = rep.failures().next().is_some_and(|r| !r.lhs.is_empty() && r.lhs != r.rhs);
    if shown {
        Ok(())
    } else {
        Err("mutated table was not rejected with a counterexample".into())
    }
}

fn kahler() -> Outcome {
    for (name, p) in [("gfz", gfz()), ("virasoro", virasoro())] {
        let k = kahler_lcad(&p).map_err(|e| e.to_string())?;
        passes(name, check_lcad(&k))?;
    }
    Ok(())
}

fn d_squared() -> Outcome {
    for (name, p) in [("gfz", gfz()), ("virasoro", virasoro())] {
        let (k, m) = phi_setting(&p, &PVAModule::Adjoint).map_err(|e| e.to_string())?;
        for repr in [Repr::Quotient, Repr::Basic] {
            passes(name, dsq_check_lcad(&k, &m, 0, repr, 7, 0))?;
            passes(name, dsq_check_lcad(&k, &m, 1, repr, 7, 10))?;
        }
    }
    Ok(())
}

fn chain_isomorphism() -> Outcome {
    for (name, p) in [("gfz", gfz()), ("virasoro", virasoro())] {
        for repr in [Repr::Quotient, Repr::Basic, Repr::Reduced] {
            for k in 0..=2 {
                passes(name, check_phi(&p, &PVAModule::Adjoint, k, repr, 7, 2))?;
            }
        }
    }
    Ok(())
}

fn generators_lemma() -> Outcome {
    let k = kahler_lcad(&gfz()).map_err(|e| e.to_string())?;
    passes("kahler gfz", check_lcad_samples(&k, 7, 20))?;
    passes("gfz", check_pva_samples(&gfz(), 7, 20))?;
    passes("virasoro", check_pva_samples(&virasoro(), 7, 20))
}

fn reduced_plumbing() -> Outcome {
    for (name, p) in [("gfz", gfz()), ("virasoro", virasoro())] {
        let (k, m) = phi_setting(&p, &PVAModule::Adjoint).map_err(|e| e.to_string())?;
        passes(name, check_reduced_plumbing(&k, &m, 7, 5))?;
    }
    Ok(())
}

fn current_roundtrip() -> Outcome {
    let abelian = LieAlgebroid::new(
        AlgebraSig::new(&["x"], &[]),
        vec!["a".into(), "b".into()],
        vec![vec![Poly::zero(); 2]; 2],
        vec![vec![Poly::zero()]; 2],
    )
    .unwrap();
    for (name, lad) in [("tangent", tangent_line()), ("abelian", abelian), ("euler", euler_line())] {
        let c = current_lcad(&lad).map_err(|e| e.to_string())?;
        passes(name, check_lcad(&c))?;
        if quotient_lad(&c) != lad {
            return Err(format!("{name}: quotient differs from input"));
        }
        holds(name, roundtrip_check(&lad))?;
    }
    Ok(())
}

fn jet_kahler_square() -> Outcome {
    let zero = PoissonAlgebra::from_entries(AlgebraSig::new(&["x", "y"], &[]), &[]).unwrap();
    for (name, p) in [("zero", zero), ("symplectic", symplectic_plane()), ("affine", affine_plane())] {
        holds(name, jet_kahler_roundtrip(&p))?;
    }
    Ok(())
}

fn extensions() -> Outcome {
    let k = kahler_lcad(&gfz()).map_err(|e| e.to_string())?;
    let m = LCAdModule::Trivial;
    let cube = CocycleData::new(vec![vec![lam().pow(3)]]);
    passes("cube", cocycle_check(&k, &m, &cube))?;
    let ext = extension_from_cocycle(&k, &m, &cube).map_err(|e| e.to_string())?;
    passes("cube extension", check_lcad(&ext))?;
    let square = CocycleData::new(vec![vec![lam().pow(2)]]);
    let rep = cocycle_check(&k, &m, &square).map_err(|e| e.to_string())?;
    if !rep.failures().any(|r| r.id == "2cocycle2(0,0)") {
        return Err("square cocycle was accepted".into());
    }
    let u = Poly::var(Var::U(0, 0));
    passes("intertwining", check_intertwining(&k, &m, &cube, &[&u * &u], 7, 3))?;
    let mut s = Sampler::new(7);
    for t in 0..5 {
        let mut x = Poly::zero();
        for j in 0..=3 {
            x += &(&s.poly(1, 1, 1, 1) * &lam().pow(j));
        }
        let omega = if t == 4 { x } else { &x - &star(&x, Var::Lam(LAM)) };
        let rep = cocycle_check(&k, &m, &CocycleData::new(vec![vec![omega]])).map_err(|e| e.to_string())?;
        let identities = rep.records.iter().filter(|r| r.id != "closed").all(|r| r.verdict == Verdict::Pass);
        let closed = rep.records.iter().any(|r| r.id == "closed" && r.verdict == Verdict::Pass);
        if identities != closed {
            return Err(format!("omega {t}: identities {identities}, closed {closed}"));
        }
    }
    Ok(())
}

fn symmetric_algebra() -> Outcome {
    let k = kahler_lcad(&gfz()).map_err(|e| e.to_string())?;
    passes("kahler gfz", sae_pva(&k).and_then(|p| check_pva(&p)))?;
    let c = current_lcad(&euler_line()).map_err(|e| e.to_string())?;
    passes("current euler", sae_pva(&c).and_then(|p| check_pva(&p)))
}

fn kernel_oracles() -> Outcome {
    passes("oracles", check_kernel_oracles(7, 50))
}

fn cli_determinism() -> Outcome {
    let run = || -> Vec<(&'static str, String, String)> {
        common::suite()
            .iter()
            .map(|c| (c.slug, c.render(Format::Text).0, c.render(Format::Json).0))
            .collect()
    };
    let (a, b) = (run(), run());
    if a != b {
        return Err("two runs differ".into());
    }
    for (slug, text, json) in a {
        for (ext, out) in [("txt", text), ("json", json)] {
            let path = common::golden_path(slug, ext);
            if std::fs::read_to_string(&path).ok().as_deref() != Some(out.as_str()) {
                return Err(format!("{} differs from the report", path.display()));
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("pva axioms on gfz and virasoro", Duration::from_secs(10), pva_axioms),
        ("kahler lcad passes check_lcad", Duration::from_secs(30), kahler),
        ("d squared vanishes with adjoint coefficients", Duration::from_secs(120), d_squared),
        ("phi is a chain isomorphism", Duration::from_secs(120), chain_isomorphism),
        ("generator tables suffice on seeded samples", Duration::from_secs(60), generators_lemma),
        ("reduced complex plumbing", Duration::from_secs(60), reduced_plumbing),
        ("current lcad round trip", Duration::from_secs(30), current_roundtrip),
        ("jet and kahler constructions commute", Duration::from_secs(30), jet_kahler_square),
        ("abelian extensions from 2-cocycles", Duration::from_secs(60), extensions),
        ("symmetric algebra pva", Duration::from_secs(30), symmetric_algebra),
        ("kernel oracles", Duration::from_secs(10), kernel_oracles),
        ("cli reports are deterministic and match goldens", Duration::from_secs(120), cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let verdict = match (&outcome, took <= *budget) {
            (Ok(()), true) => "PASS",
            _ => "FAIL",
        };
        let mut line = format!("{verdict} criterion {:>2}: {name} ({} ms)", i + 1, took.as_millis());
        if let Err(e) = &outcome {
            line += &format!(": {e}");
        } else if took > *budget {
            line += &format!(": over budget of {} s", budget.as_secs());
        }
        println!("{line}");
        failed += (verdict == "FAIL") as usize;
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
