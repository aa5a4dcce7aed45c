mod common;

use common::CATALOGUE;
use confalg::catalogue::{affine_plane, euler_line, gfz, symplectic_plane, tangent_line, virasoro};
use confalg::lcad::kahler_lcad;
use confalg_cli::parser::parse_file;
use confalg_cli::workspace::Object;
use confalg_cli::{CliError, Workspace};

fn load(src: &str) -> Result<Workspace, CliError> {
    let mut ws = Workspace::new();
    ws.load("t.cfa", src)?;
    Ok(ws)
}

fn err(src: &str) -> String {
    load(src).unwrap_err().to_string()
}

#[test]
fn declarations_reparse_to_equal_trees() {
    let decls = parse_file("c", CATALOGUE).unwrap();
    assert!(decls.len() > 20);
    let printed: String = decls.iter().map(|d| format!("{d}\n")).collect();
    assert_eq!(parse_file("p", &printed).unwrap(), decls);
    // printing is a fixed point
    let again: String = parse_file("p", &printed).unwrap().iter().map(|d| format!("{d}\n")).collect();
    assert_eq!(again, printed);
}

#[test]
fn catalogue_matches_builtin_structures() {
    let ws = load(CATALOGUE).unwrap();
    let pva = |n| match ws.get(n) {
        Some(Object::Pva(p)) => p.clone(),
        _ => panic!("{n}"),
    };
    assert_eq!(pva("GFZ"), gfz());
    assert_eq!(pva("Vir"), virasoro());
    match ws.get("OmegaVir") {
        Some(Object::Lcad { l, kahler_of }) => {
            assert_eq!(*l, kahler_lcad(&virasoro()).unwrap());
            assert_eq!(kahler_of.as_deref(), Some("Vir"));
        }
        _ => panic!(),
    }
    let lad = |n| match ws.get(n) {
        Some(Object::Lad(l)) => l.clone(),
        _ => panic!("{n}"),
    };
    assert_eq!(lad("TangentLine"), tangent_line());
    assert_eq!(lad("EulerLine"), euler_line());
    let poisson = |n| match ws.get(n) {
        Some(Object::Poisson(p)) => p.clone(),
        _ => panic!("{n}"),
    };
    assert_eq!(poisson("Symplectic"), symplectic_plane());
    assert_eq!(poisson("Affine"), affine_plane());
}

#[test]
fn operator_expressions_act_to_the_right() {
    let ws = load("algebra A { gens u, v; params c } pva P on A { u u = D*u - u*D + (D + l)^2*v/2; u v = -c*l^2 }").unwrap();
    let Some(Object::Pva(p)) = ws.get("P") else { panic!() };
    let names = p.names();
    // D*u - u*D = u' ; (D+l)^2 v / 2 = (v'' + 2 l v' + l^2 v)/2
    assert_eq!(names.render(&p.table[0][0]), "l*v' + 1/2*l^2*v + u' + 1/2*v''");
    assert_eq!(names.render(&p.table[0][1]), "-c*l^2");
    // omitted pairs follow by skewsymmetry
    assert_eq!(names.render(&p.table[1][0]), "c*l^2");
    assert_eq!(names.render(&p.table[1][1]), "0");
}

#[test]
fn jets_parse_in_both_notations() {
    let ws = load("algebra A { gens u } pva P on A { u u = u^(5) - u''''' + u^(2) }").unwrap();
    let Some(Object::Pva(p)) = ws.get("P") else { panic!() };
    assert_eq!(p.names().render(&p.table[0][0]), "u''");
}

#[test]
fn bad_table_parses_but_fails_its_check() {
    let ws = load("algebra V { gens u } pva Bad on V { u u = u }").unwrap();
    assert!(matches!(ws.get("Bad"), Some(Object::Pva(_))));
}

#[test]
fn resolution_errors_carry_positions() {
    assert_eq!(err("pva P on V { u u = l }"), "t.cfa:1:10: unresolved reference `V`");
    assert_eq!(
        err("algebra V { gens u }\npva P on V { u w = l }"),
        "t.cfa:2:16: `w` is not one of the generators u"
    );
    assert_eq!(err("algebra V { gens u }\npva P on V { u u = l*q }"), "t.cfa:2:22: unknown name `q`");
    assert_eq!(
        err("algebra V { gens u }\npva P on V { u u = l1 }"),
        "t.cfa:2:20: λ-variable `l1` is not available here"
    );
    assert_eq!(
        err("algebra V { gens u }\npoisson P on V { u u = u' }"),
        "t.cfa:2:24: derivatives are not available here (`u`)"
    );
    assert_eq!(
        err("algebra V { gens u }\npva P on V { u u = l; u u = 0 }"),
        "t.cfa:2:23: entry `u u` is given twice"
    );
    assert_eq!(err("algebra V { gens u }\nalgebra V { gens v }"), "t.cfa:2:9: `V` is already declared");
    assert_eq!(err("algebra V { gens l }"), "t.cfa:1:18: `l` is reserved");
    assert_eq!(err("algebra V { gens u, u }"), "t.cfa:1:21: `u` is declared twice");
    assert_eq!(
        err("algebra V { gens u }\npva P on V { u u = u/u }"),
        "t.cfa:2:22: division is only by nonzero constants"
    );
}

#[test]
fn signature_errors() {
    let base = "algebra V { gens u } pva G on V { u u = l } lcad K = kahler(G) algebra X { gens x } lad T on X { gens f; anchor f x = 1 }\n";
    assert_eq!(err(&format!("{base}lcad C = kahler(T)")), "t.cfa:2:17: `kahler` expects a pva but `T` is a lad");
    assert_eq!(
        err(&format!("{base}lcad C = current(T, T)")),
        "t.cfa:2:10: `current` takes 1 argument(s), got 2"
    );
    assert_eq!(
        err(&format!("{base}lcad C = frobnicate(T)")),
        "t.cfa:2:10: no construction `frobnicate` for a lcad"
    );
    assert_eq!(
        err(&format!("{base}cochain C on K in adjoint {{ degree 2; [du] = l1 }}")),
        "t.cfa:2:40: a degree-2 cochain takes 2 argument(s), got 1"
    );
    assert_eq!(
        err(&format!("{base}cochain C on T in trivial {{ degree 1 }}")),
        "t.cfa:2:14: `T` is a lad, expected a pva or an lcad"
    );
    let e = err(&format!("{base}lcad M on X {{ gens f }} cochain C on M in adjoint {{ degree 0 }}"));
    assert_eq!(e, "t.cfa:2:42: adjoint coefficients need `M` to be kahler(<pva>)");
}

#[test]
fn cochain_skewsymmetry_is_validated() {
    let base = "algebra V { gens u } pva G on V { u u = l } lcad K = kahler(G)\n";
    // a degree-2 value on (du, du) must be skew under swapping the slots
    assert!(load(&format!("{base}cochain C on K in trivial {{ degree 2; repr basic; [du, du] = l1^3 - l2^3 }}")).is_ok());
    let e = err(&format!("{base}cochain C on K in trivial {{ degree 2; repr basic; [du, du] = l1^2 + l2^2 }}"));
    assert!(e.starts_with("invalid cochain"), "{e}");
}
