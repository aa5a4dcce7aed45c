//! The `confalg` command line: a small declaration language (`.cfa`), a
//! command dispatcher over the core checks, and report emitters.

pub mod ast;
pub mod emit;
pub mod error;
pub mod lexer;
pub mod parser;
pub mod run;
pub mod workspace;

pub use emit::{emit, Format, Output};
pub use error::{CliError, Result};
pub use run::{run, Command, Options};
pub use workspace::Workspace;

/// Load `files`, run `cmd` and render the report; the exit status is 0 on
/// pass and 1 on a failed verdict.
pub fn execute(files: &[(String, String)], cmd: &Command, opts: &Options, format: Format, timing: bool) -> Result<(String, i32)> {
    let start = std::time::Instant::now();
    let mut ws = Workspace::new();
    for (name, src) in files {
        ws.load(name, src)?;
    }
    let report = run(&ws, cmd, opts)?;
    let elapsed = if timing { start.elapsed().as_millis() as u64 } else { 0 };
    let out = Output::new(cmd.echo(), opts.seed, &report, elapsed);
    let code = if out.pass { 0 } else { 1 };
    Ok((emit(&out, format, timing), code))
}
