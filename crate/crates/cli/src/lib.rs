//! Argument handling and dispatch for the `symcut` binary.
//!
//! Exit codes: 0 on success, 1 when a scenario is rejected or a check fails, 2 when the
//! input cannot be read or parsed. Reports go to stdout and diagnostics to stderr.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use symcut::cutcalc::{
    betti_identities, compute_cut_plus, compute_reduction, ses_dimension_check,
    validate_hypotheses, CutReport, Scenario,
};
use symcut::dsl::{self, BuildOptions, Format, ScenarioError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "symcut",
    version,
    about = "Cohomology rings of symplectic cuts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that i* is surjective and every delta pair lies in ker(p* - i*).
    Validate(ScenarioArgs),
    /// Compute H*(C) and H*(C_+) with every consistency check.
    Cut(ScenarioArgs),
    /// Compute H*(C_0) = H*(C_-) / Ann(pd).
    Reduce(ScenarioArgs),
    /// Check the Poincaré polynomial identities for C_-, C_0 and M_-.
    Betti(ScenarioArgs),
    /// Print minimal presentations of H*(C) and H*(C_+).
    Present(ScenarioArgs),
    /// Check the scenario's `iso` claims against the computed rings.
    VerifyIso(ScenarioArgs),
    /// Write the bundled example scenarios into a directory.
    Examples {
        #[arg(default_value = ".")]
        dir: PathBuf,
    },
}

#[derive(Args, Debug)]
struct ScenarioArgs {
    /// Scenario file in the `.cut` format.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Truncate every algebra at this degree and use it as n.
    #[arg(long)]
    max_degree: Option<usize>,
    /// Treat warnings as failures.
    #[arg(long)]
    strict: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Output {
    Text,
    Json,
}

impl From<Output> for Format {
    fn from(o: Output) -> Format {
        match o {
            Output::Text => Format::Text,
            Output::Json => Format::Json,
        }
    }
}

/// Runs the command line `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_INPUT
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let mut io = Io { stdout, stderr };
    match cli.command {
        Command::Examples { dir } => examples(&dir, &mut io),
        Command::Validate(a) => with_scenario(&a, &mut io, validate),
        Command::Cut(a) => with_scenario(&a, &mut io, cut),
        Command::Reduce(a) => with_scenario(&a, &mut io, reduce),
        Command::Betti(a) => with_scenario(&a, &mut io, betti),
        Command::Present(a) => with_scenario(&a, &mut io, present),
        Command::VerifyIso(a) => with_scenario(&a, &mut io, verify_iso),
    }
}

struct Io<'a> {
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn out(&mut self, text: &str) {
        let _ = self.stdout.write_all(text.as_bytes());
    }

    fn error(&mut self, msg: impl std::fmt::Display) {
        let _ = writeln!(self.stderr, "error: {msg}");
    }

    fn warn(&mut self, msg: impl std::fmt::Display) {
        let _ = writeln!(self.stderr, "warning: {msg}");
    }
}

struct Ctx<'a> {
    scenario: Scenario,
    format: Format,
    strict: bool,
    path: &'a Path,
}

fn with_scenario(
    a: &ScenarioArgs,
    io: &mut Io<'_>,
    f: impl FnOnce(&Ctx<'_>, &mut Io<'_>) -> i32,
) -> i32 {
    let text = match fs::read_to_string(&a.input) {
        Ok(t) => t,
        Err(e) => {
            io.error(format_args!("cannot read {}: {e}", a.input.display()));
            return EXIT_INPUT;
        }
    };
    let opts = BuildOptions {
        max_degree: a.max_degree,
    };
    let scenario = match dsl::parse_scenario_with(&text, opts) {
        Ok(s) => s,
        Err(ScenarioError::Parse(e)) => {
            io.error(format_args!("{}:{e}", a.input.display()));
            return EXIT_INPUT;
        }
        Err(e) => {
            io.error(format_args!("{}: {e}", a.input.display()));
            return EXIT_FAILED;
        }
    };
    let ctx = Ctx {
        scenario,
        format: a.output.into(),
        strict: a.strict,
        path: &a.input,
    };
    f(&ctx, io)
}

/// Reports warnings and folds them into the exit code under `--strict`.
fn conclude(ctx: &Ctx<'_>, io: &mut Io<'_>, warnings: &[String], failures: &[String]) -> i32 {
    for w in warnings {
        io.warn(w);
    }
    for f in failures {
        io.error(f);
    }
    if !failures.is_empty() || (ctx.strict && !warnings.is_empty()) {
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}

fn validate(ctx: &Ctx<'_>, io: &mut Io<'_>) -> i32 {
    let h = match validate_hypotheses(&ctx.scenario) {
        Ok(h) => h,
        Err(e) => {
            io.error(e);
            return EXIT_FAILED;
        }
    };
    io.out(&dsl::emit_validation(&ctx.scenario, &h, ctx.format));
    let mut warnings = Vec::new();
    let p_fail: Vec<String> = h
        .p_star_surjective
        .iter()
        .enumerate()
        .filter(|(_, ok)| !**ok)
        .map(|(d, _)| d.to_string())
        .collect();
    if !p_fail.is_empty() {
        warnings.push(format!(
            "p* is not surjective in degree {}",
            p_fail.join(", ")
        ));
    }
    match h.to_error() {
        Some(e) => {
            for w in &warnings {
                io.warn(w);
            }
            io.error(format_args!("{}: {e}", ctx.path.display()));
            EXIT_FAILED
        }
        None => conclude(ctx, io, &warnings, &[]),
    }
}

fn cut_report(ctx: &Ctx<'_>, io: &mut Io<'_>) -> Result<CutReport, i32> {
    compute_cut_plus(&ctx.scenario).map_err(|e| {
        io.error(format_args!("{}: {e}", ctx.path.display()));
        EXIT_FAILED
    })
}

fn cut(ctx: &Ctx<'_>, io: &mut Io<'_>) -> i32 {
    match cut_report(ctx, io) {
        Ok(r) => {
            io.out(&dsl::emit_report(&ctx.scenario, &r, ctx.format));
            conclude(ctx, io, &r.warnings, &r.failures())
        }
        Err(code) => code,
    }
}

fn present(ctx: &Ctx<'_>, io: &mut Io<'_>) -> i32 {
    match cut_report(ctx, io) {
        Ok(r) => {
            io.out(&dsl::emit_presentations(&r, ctx.format));
            conclude(ctx, io, &r.warnings, &[])
        }
        Err(code) => code,
    }
}

fn verify_iso(ctx: &Ctx<'_>, io: &mut Io<'_>) -> i32 {
    match cut_report(ctx, io) {
        Ok(r) => {
            io.out(&dsl::emit_isos(&r, ctx.format));
            let failures: Vec<String> = r
                .isos
                .iter()
                .filter(|i| !i.verdict.is_isomorphism)
                .map(|i| {
                    format!(
                        "presentation {} is not isomorphic to the computed ring",
                        i.name
                    )
                })
                .collect();
            conclude(ctx, io, &[], &failures)
        }
        Err(code) => code,
    }
}

fn pd_or_report(ctx: &Ctx<'_>, io: &mut Io<'_>) -> Option<symcut::graded::Element> {
    let pd = ctx.scenario.pd_class.clone();
    if pd.is_none() {
        io.error(format_args!(
            "{}: scenario declares no `pd` class",
            ctx.path.display()
        ));
    }
    pd
}

fn reduce(ctx: &Ctx<'_>, io: &mut Io<'_>) -> i32 {
    let Some(pd) = pd_or_report(ctx, io) else {
        return EXIT_FAILED;
    };
    let s = &ctx.scenario;
    match compute_reduction(&s.c_minus, &pd, Some(&s.m_minus.poincare())) {
        Ok(r) => {
            io.out(&dsl::emit_reduction(s, &r, ctx.format));
            let mut warnings = r.warnings.clone();
            if let Some(v) = r.ses_check.as_ref().filter(|v| !v.holds) {
                warnings.push(format!("identity {} fails by {}", v.name, v.difference));
            }
            conclude(ctx, io, &warnings, &[])
        }
        Err(e) => {
            io.error(format_args!("{}: {e}", ctx.path.display()));
            EXIT_FAILED
        }
    }
}

fn betti(ctx: &Ctx<'_>, io: &mut Io<'_>) -> i32 {
    let Some(pd) = pd_or_report(ctx, io) else {
        return EXIT_FAILED;
    };
    let s = &ctx.scenario;
    let p_m_minus = s.m_minus.poincare();
    let r = match compute_reduction(&s.c_minus, &pd, Some(&p_m_minus)) {
        Ok(r) => r,
        Err(e) => {
            io.error(format_args!("{}: {e}", ctx.path.display()));
            return EXIT_FAILED;
        }
    };
    let p_c0 = r.c0.algebra.poincare();
    let p_cm = s.c_minus.poincare();
    let b = betti_identities(&p_m_minus, s.n as i64, &p_c0, &p_cm);
    let ses = ses_dimension_check(&p_c0, &p_cm, &p_m_minus);
    io.out(&dsl::emit_betti(&b, &ses, ctx.format));
    let mut warnings = r.warnings.clone();
    warnings.extend(
        [&b.c0, &b.c_minus, &ses]
            .into_iter()
            .filter(|v| !v.holds)
            .map(|v| format!("identity {} fails by {}", v.name, v.difference)),
    );
    conclude(ctx, io, &warnings, &[])
}

fn examples(dir: &Path, io: &mut Io<'_>) -> i32 {
    if let Err(e) = fs::create_dir_all(dir) {
        io.error(format_args!("cannot create {}: {e}", dir.display()));
        return EXIT_FAILED;
    }
    for (name, text) in dsl::bundled_examples() {
        let path = dir.join(name);
        if let Err(e) = fs::write(&path, text) {
            io.error(format_args!("cannot write {}: {e}", path.display()));
            return EXIT_FAILED;
        }
        io.out(&format!("wrote {}\n", path.display()));
    }
    EXIT_OK
}
