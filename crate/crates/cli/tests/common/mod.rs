#![allow(dead_code)]

use confalg_cli::{execute, Command, Format, Options};

pub const CATALOGUE: &str = include_str!("../../catalogue.cfa");
pub const SEED: u64 = 7;

pub struct Case {
    pub slug: &'static str,
    pub cmd: Command,
    pub opts: Options,
    /// Expected verdict of the whole report.
    pub pass: bool,
}

fn s(x: &str) -> String {
    x.to_string()
}

fn case(slug: &'static str, cmd: Command, samples: Option<usize>, pass: bool) -> Case {
    Case {
        slug,
        cmd,
        opts: Options {
            seed: Some(SEED),
            repr: None,
            samples,
        },
        pass,
    }
}

fn plain(slug: &'static str, cmd: Command) -> Case {
    Case {
        slug,
        cmd,
        opts: Options::default(),
        pass: true,
    }
}

/// Every catalogue command with a golden report.
pub fn suite() -> Vec<Case> {
    use Command::*;
    vec![
        plain("check_gfz", Check(s("GFZ"))),
        plain("check_vir", Check(s("Vir"))),
        case("check_vir_sampled", Check(s("Vir")), Some(5), true),
        case("check_omega_gfz_sampled", Check(s("OmegaGFZ")), Some(3), true),
        plain("check_omega_vir", Check(s("OmegaVir"))),
        plain("check_tangent_line", Check(s("TangentLine"))),
        plain("check_affine", Check(s("Affine"))),
        case("check_dens", Check(s("Dens")), Some(5), true),
        case("check_central", Check(s("Central")), Some(5), true),
        plain("check_cube", Check(s("Cube"))),
        plain("check_square", Check(s("Square"))).failing(),
        plain("bracket_vir", Bracket(s("Vir"), s("u"), s("u'"))),
        plain("bracket_omega_gfz", Bracket(s("OmegaGFZ"), s("du"), s("u*du'"))),
        plain("bracket_symplectic", Bracket(s("Symplectic"), s("x"), s("x*y"))),
        plain("bracket_euler_line", Bracket(s("EulerLine"), s("f"), s("x*f"))),
        plain("kahler_gfz", Kahler(s("GFZ"))),
        plain("kahler_vir", Kahler(s("Vir"))),
        plain("kahler_affine", Kahler(s("Affine"))),
        plain("current_tangent_line", Current(s("TangentLine"))),
        plain("current_euler_line", Current(s("EulerLine"))),
        plain("current_abelian", Current(s("Abelian"))),
        plain("quotient_cur_euler", Quotient(s("CurEuler"))),
        plain("sae_omega_gfz", Sae(s("OmegaGFZ"))),
        plain("sae_cur_euler", Sae(s("CurEuler"))),
        plain("semidirect_central", Semidirect(s("OmegaGFZ"), s("Central"))),
        plain("d_psi", D(s("Psi"))),
        plain("d_gamma", D(s("Gamma"))),
        case("dsq_omega_gfz_0", Dsq(s("OmegaGFZ"), s("adjoint"), 0), None, true),
        case("dsq_omega_gfz_1", Dsq(s("OmegaGFZ"), s("adjoint"), 1), None, true),
        case("dsq_omega_vir_1", Dsq(s("OmegaVir"), s("adjoint"), 1), None, true),
        case("dsq_omega_gfz_trivial_1", Dsq(s("OmegaGFZ"), s("trivial"), 1), None, true),
        case("dsq_gfz_1", Dsq(s("GFZ"), s("adjoint"), 1), None, true),
        case("dsq_vir_dens_1", Dsq(s("Vir"), s("Dens"), 1), None, true),
        case("phi_gfz_2", Phi(s("GFZ"), s("adjoint"), 2), None, true),
        case("phi_vir_1", Phi(s("Vir"), s("adjoint"), 1), None, true),
        case("phi_vir_dens_1", Phi(s("Vir"), s("Dens"), 1), None, true),
        plain("extension_cube", Extension(s("OmegaGFZ"), s("trivial"), s("Cube"))),
        plain("extension_square", Extension(s("OmegaGFZ"), s("trivial"), s("Square"))).failing(),
        plain("roundtrip_tangent_line", Roundtrip(s("TangentLine"))),
        plain("roundtrip_euler_line", Roundtrip(s("EulerLine"))),
        plain("roundtrip_abelian", Roundtrip(s("Abelian"))),
        plain("roundtrip_flat", Roundtrip(s("Flat"))),
        plain("roundtrip_symplectic", Roundtrip(s("Symplectic"))),
        plain("roundtrip_affine", Roundtrip(s("Affine"))),
    ]
}

impl Case {
    fn failing(mut self) -> Case {
        self.pass = false;
        self
    }

    pub fn render(&self, format: Format) -> (String, i32) {
        let files = vec![("catalogue.cfa".to_string(), CATALOGUE.to_string())];
        execute(&files, &self.cmd, &self.opts, format, false).unwrap_or_else(|e| panic!("{}: {e}", self.slug))
    }
}

pub fn golden_path(slug: &str, ext: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{slug}.{ext}"))
}
