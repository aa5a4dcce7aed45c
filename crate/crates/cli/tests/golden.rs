mod common;

use common::{golden_path, suite};
use confalg_cli::Format;

/// Set `UPDATE_GOLDEN=1` to rewrite the files after an intended change.
#[test]
fn catalogue_reports_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut stale = Vec::new();
    for case in suite() {
        for (format, ext) in [(Format::Text, "txt"), (Format::Json, "json")] {
            let (out, code) = case.render(format);
            assert_eq!(code == 0, case.pass, "{}: unexpected verdict\n{out}", case.slug);
            let path = golden_path(case.slug, ext);
            if update {
                std::fs::write(&path, &out).unwrap();
            } else if std::fs::read_to_string(&path).ok().as_deref() != Some(out.as_str()) {
                stale.push(path.display().to_string());
            }
        }
    }
    assert!(stale.is_empty(), "reports differ from golden files: {stale:#?}");
}

#[test]
fn golden_files_have_no_orphans() {
    let slugs: Vec<&str> = suite().iter().map(|c| c.slug).collect();
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for entry in std::fs::read_dir(dir).unwrap() {
        let p = entry.unwrap().path();
        let stem = p.file_stem().unwrap().to_str().unwrap().to_string();
        assert!(slugs.contains(&stem.as_str()), "orphan golden file {}", p.display());
    }
}
