//! Command-line reports for the secant-variety invariant library.
//!
//! Subcommands: `lines` (secant variety of lines of a variety given by its
//! Hodge diamond), `curve` (higher secant varieties of a curve), `verify`
//! (independent-oracle suite) and `plot` (support of the weight-graded
//! cohomology as TSV). Exit codes: 0 success, 1 failed verification,
//! 2 invalid input, 3 missing conditional input.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use secant_hodge::curves::{
    gl_bound, ic_weight_graded, ih_higher_table, ihl_numbers, sing_cohomology_higher,
    support_plot, vanishing_report, SecantCurveContext,
};
use secant_hodge::diamond::HodgeDiamond;
use secant_hodge::lines::{
    generation_levels, hl_numbers, ih_secant_table, lcdef_sigma, local_cohomology_weights,
    q_factoriality, rhm_defect_object, sing_cohomology_secant, singularity_invariants,
    LinesError, SecantLinesContext,
};
use secant_hodge::oracle::{run_verify, VerifyConfig};
use secant_hodge::ExtInt;

use secant_hodge_cli::report::*;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INVALID_INPUT: u8 = 2;
const EXIT_MISSING_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "secant-hodge", version, about = "Hodge-theoretic invariants of secant varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of the secant variety of lines of a smooth projective
    /// variety, from its Hodge diamond.
    Lines {
        /// JSON file: {"dim": n, "h": [[...]], "N": ..., "h11_rational": ...,
        /// "flags": {"qprime": p, "u2": bool}}
        #[arg(long)]
        diamond: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Invariants of the higher secant varieties of a genus-g curve.
    Curve {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        k: u32,
        #[arg(long = "N")]
        ambient: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the independent-oracle verification suite.
    Verify {
        #[arg(long, default_value_t = 2)]
        g_max: u64,
        #[arg(long, default_value_t = 4)]
        k_max: u32,
        #[arg(long, default_value_t = 2)]
        depth: u32,
        /// Test-harness hook: inject a deliberate perturbation.
        #[arg(long, hide = true, default_value_t = false)]
        inject_fault: bool,
    },
    /// Emit the support of the weight-graded cohomology of the higher
    /// secant varieties as "k<TAB>j<TAB>w<TAB>dim" lines.
    Plot {
        #[arg(long)]
        g: u64,
        #[arg(long, default_value_t = 7)]
        k_max: u32,
    },
}

#[derive(Deserialize)]
struct DiamondInput {
    dim: usize,
    h: Vec<Vec<u64>>,
    #[serde(rename = "N")]
    ambient: Option<usize>,
    h11_rational: Option<u64>,
    #[serde(default)]
    flags: DiamondFlags,
}

#[derive(Default, Deserialize)]
struct DiamondFlags {
    qprime: Option<usize>,
    #[serde(default)]
    u2: bool,
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match cli.command {
        Command::Lines { diamond, format } => cmd_lines(&diamond, format),
        Command::Curve {
            genus,
            k,
            ambient,
            format,
        } => cmd_curve(genus, k, ambient, format),
        Command::Verify {
            g_max,
            k_max,
            depth,
            inject_fault,
        } => cmd_verify(g_max, k_max, depth, inject_fault),
        Command::Plot { g, k_max } => cmd_plot(g, k_max),
    }
}

/// `SECANT_HODGE_THREADS` caps the verify parallelism.
#[cfg(feature = "parallel")]
fn configure_threads() {
    if let Some(n) = std::env::var("SECANT_HODGE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
    {
        // ignore failure: the global pool may already be initialized
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_threads() {}

fn invalid(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INVALID_INPUT)
}

/// Write to stdout, treating a closed pipe as a clean exit.
fn emit(text: &str) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if let Err(err) = lock.write_all(text.as_bytes()).and_then(|()| lock.flush()) {
        if err.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write output: {err}");
        std::process::exit(i32::from(EXIT_INVALID_INPUT));
    }
}

fn cmd_lines(path: &str, format: Format) -> ExitCode {
    let raw = match fs::read_to_string(path) {
        Ok(raw) => raw,
        Err(err) => return invalid(format_args!("cannot read {path}: {err}")),
    };
    let input: DiamondInput = match serde_json::from_str(&raw) {
        Ok(input) => input,
        Err(err) => return invalid(format_args!("invalid diamond JSON: {err}")),
    };
    let diamond = match HodgeDiamond::new(input.dim, input.h) {
        Ok(d) => d,
        Err(err) => return invalid(err),
    };
    let mut ctx = SecantLinesContext::new(diamond);
    if let Some(n_amb) = input.ambient {
        ctx = match ctx.with_ambient(n_amb) {
            Ok(ctx) => ctx,
            Err(err) => return invalid(err),
        };
    }
    if let Some(h11) = input.h11_rational {
        ctx = ctx.with_h11_rational(h11);
    }
    if let Some(p) = input.flags.qprime {
        ctx = match ctx.with_qprime(p) {
            Ok(ctx) => ctx,
            Err(err) => return invalid(err),
        };
    }
    if input.flags.u2 {
        ctx = ctx.with_u2();
    }

    let q_fact = match q_factoriality(&ctx) {
        Ok(rec) => rec,
        Err(err @ LinesError::MissingH11Rational) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_MISSING_INPUT);
        }
        Err(err) => return invalid(err),
    };

    let n = ctx.n() as i64;
    let local: Vec<LocalCohomologyRepr> = if ctx.ambient_dim.is_some() {
        (0..n)
            .map(|j| {
                LocalCohomologyRepr::from(&local_cohomology_weights(&ctx, j).expect("j in range"))
            })
            .collect()
    } else {
        Vec::new()
    };

    let betti = (0..=2 * ctx.n())
        .map(|j| ctx.diamond.betti(j as i64))
        .collect();
    let report = LinesReport {
        context: LinesContextRepr {
            dim: ctx.n(),
            betti,
            ambient_dim: ctx.ambient_dim,
            codim: ctx.codim(),
            h11_rational: ctx.h11_rational,
            qprime: ctx.qprime,
            u2: ctx.u2,
        },
        invariants: InvariantsRepr::from(&singularity_invariants(&ctx)),
        local_cohomology: local,
        rhm_defect: rhm_defect_object(&ctx)
            .iter()
            .map(|(shift, h)| RhmPieceRepr {
                shift: *shift,
                classes: classes(h),
            })
            .collect(),
        hodge_lyubeznik: HlRepr::from(&hl_numbers(&ctx)),
        generation_levels: GenerationLevelsRepr::from(&generation_levels(&ctx)),
        intersection_cohomology: table_entries(&ih_secant_table(&ctx)),
        cohomology: table_entries(&sing_cohomology_secant(&ctx)),
        q_factoriality: QFactorialityRepr::from(&q_fact),
    };
    debug_assert_eq!(report.invariants.lcdef, lcdef_sigma(&ctx));

    match format {
        Format::Json => emit(&format!(
            "{}\n",
            serde_json::to_string_pretty(&report).expect("serialize")
        )),
        Format::Csv => emit(&lines_csv(&report)),
        Format::Markdown => emit(&lines_markdown(&report)),
    }
    ExitCode::SUCCESS
}

fn cmd_curve(genus: u64, k: u32, ambient: Option<usize>, format: Format) -> ExitCode {
    let ctx = match SecantCurveContext::new(genus, k) {
        Ok(ctx) => ctx,
        Err(err) => return invalid(err),
    };
    let ctx = match ambient {
        Some(n_amb) => match ctx.with_ambient(n_amb) {
            Ok(ctx) => ctx,
            Err(err) => return invalid(err),
        },
        None => ctx,
    };

    let strata: Vec<StratumTableRepr> = if genus == 0 {
        Vec::new()
    } else {
        (1..k)
            .map(|a| {
                let table = ihl_numbers(&ctx, a).expect("valid stratum");
                StratumTableRepr {
                    stratum: a,
                    entries: table
                        .entries
                        .iter()
                        .map(|(&(r, p, q), &m)| (r, p, q, m))
                        .collect(),
                }
            })
            .collect()
    };

    let vanishing = ctx.ambient_dim.map(|_| vanishing_report(&ctx).expect("ambient present"));
    let report = CurveReport {
        context: CurveContextRepr {
            genus,
            order: k,
            ambient_dim: ctx.ambient_dim,
            codim: ctx.codim(),
            dim_sigma: ctx.dim_sigma(),
        },
        constant_sheaf: IcWeightGradedRepr::from(&ic_weight_graded(&ctx)),
        intersection_cohomology: table_entries(&ih_higher_table(&ctx)),
        cohomology: table_entries(&sing_cohomology_higher(&ctx)),
        intersection_hodge_lyubeznik: strata,
        generation_level: VanishingRepr::new(gl_bound(&ctx), vanishing.as_ref()),
        q_factoriality: CurveQFactorialityRepr {
            rational_homology_manifold: genus == 0,
            q_factorial: genus == 0,
            sigma: if genus == 0 {
                ExtInt::Int(0).into()
            } else {
                ExtInt::PosInf.into()
            },
        },
    };

    match format {
        Format::Json => emit(&format!(
            "{}\n",
            serde_json::to_string_pretty(&report).expect("serialize")
        )),
        Format::Csv => emit(&curve_csv(&report)),
        Format::Markdown => emit(&curve_markdown(&report)),
    }
    ExitCode::SUCCESS
}

fn cmd_verify(g_max: u64, k_max: u32, depth: u32, inject_fault: bool) -> ExitCode {
    if k_max < 2 {
        return invalid("k-max must be at least 2");
    }
    let config = VerifyConfig {
        g_max,
        k_max,
        depth,
        inject_fault,
    };
    let results = run_verify(&config);
    let mut failed = 0usize;
    let mut out = String::new();
    for r in &results {
        if r.passed {
            out.push_str(&format!("PASS {}\n", r.name));
        } else {
            failed += 1;
            if r.detail.is_empty() {
                out.push_str(&format!("FAIL {}\n", r.name));
            } else {
                out.push_str(&format!("FAIL {}: {}\n", r.name, r.detail));
            }
        }
    }
    out.push_str(&format!("{} checks, {} failed\n", results.len(), failed));
    emit(&out);
    if failed > 0 {
        ExitCode::from(EXIT_VERIFY_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_plot(g: u64, k_max: u32) -> ExitCode {
    if k_max < 2 {
        return invalid("k-max must be at least 2");
    }
    let mut out = String::new();
    for (k, j, w, dim) in support_plot(g, k_max) {
        out.push_str(&format!("{k}\t{j}\t{w}\t{dim}\n"));
    }
    emit(&out);
    ExitCode::SUCCESS
}

fn fmt_ext(v: &ExtIntRepr) -> String {
    match v {
        ExtIntRepr::Finite(n) => n.to_string(),
        ExtIntRepr::Infinite(Infinity::Pos) => "inf".to_string(),
        ExtIntRepr::Infinite(Infinity::Neg) => "-inf".to_string(),
    }
}

fn fmt_opt_ext(v: &Option<ExtIntRepr>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), fmt_ext)
}

fn fmt_classes(c: &Classes) -> String {
    c.iter()
        .map(|(p, q, m)| format!("({p},{q})x{m}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn table_rows(section: &str, entries: &[TableEntry], out: &mut String) {
    for e in entries {
        out.push_str(&format!(
            "{section},H^{},{}\n",
            e.degree,
            fmt_classes(&e.classes).replace(',', ";")
        ));
    }
}

fn lines_csv(report: &LinesReport) -> String {
    let mut out = String::from("section,key,value\n");
    out.push_str(&format!("context,dim,{}\n", report.context.dim));
    out.push_str(&format!("invariants,lcdef,{}\n", report.invariants.lcdef));
    out.push_str(&format!("invariants,c,{}\n", fmt_ext(&report.invariants.c)));
    out.push_str(&format!("invariants,hrh,{}\n", fmt_ext(&report.invariants.hrh)));
    out.push_str(&format!("invariants,w,{}\n", fmt_ext(&report.invariants.w)));
    out.push_str(&format!(
        "invariants,sigma,{}\n",
        fmt_opt_ext(&report.invariants.sigma)
    ));
    for (r, s, u, v, m) in &report.hodge_lyubeznik.lambda {
        out.push_str(&format!("hodge_lyubeznik,lambda[{r};{s};{u};{v}],{m}\n"));
    }
    for (r, u, v, m) in &report.hodge_lyubeznik.intersection {
        out.push_str(&format!("hodge_lyubeznik,intersection[{r};{u};{v}],{m}\n"));
    }
    table_rows("intersection_cohomology", &report.intersection_cohomology, &mut out);
    table_rows("cohomology", &report.cohomology, &mut out);
    out.push_str(&format!(
        "q_factoriality,sigma,{}\n",
        fmt_ext(&report.q_factoriality.sigma)
    ));
    out.push_str(&format!(
        "q_factoriality,q_factorial,{}\n",
        report.q_factoriality.q_factorial
    ));
    out
}

fn markdown_table(title: &str, entries: &[TableEntry], out: &mut String) {
    out.push_str(&format!("\n## {title}\n\n| degree | classes |\n|---|---|\n"));
    for e in entries {
        out.push_str(&format!("| {} | {} |\n", e.degree, fmt_classes(&e.classes)));
    }
}

fn lines_markdown(report: &LinesReport) -> String {
    let mut out = format!(
        "# Secant variety of lines (dim Y = {})\n\n",
        report.context.dim
    );
    out.push_str(&format!(
        "- lcdef = {}\n- c = {}\n- HRH = {}\n- w = {}\n- sigma = {}\n",
        report.invariants.lcdef,
        fmt_ext(&report.invariants.c),
        fmt_ext(&report.invariants.hrh),
        fmt_ext(&report.invariants.w),
        fmt_opt_ext(&report.invariants.sigma),
    ));
    markdown_table("Intersection cohomology", &report.intersection_cohomology, &mut out);
    markdown_table("Singular cohomology", &report.cohomology, &mut out);
    out
}

fn curve_csv(report: &CurveReport) -> String {
    let mut out = String::from("section,key,value\n");
    out.push_str(&format!("context,genus,{}\n", report.context.genus));
    out.push_str(&format!("context,order,{}\n", report.context.order));
    out.push_str(&format!(
        "generation_level,bound,{}\n",
        report.generation_level.gl_bound
    ));
    table_rows("intersection_cohomology", &report.intersection_cohomology, &mut out);
    table_rows("cohomology", &report.cohomology, &mut out);
    for stratum in &report.intersection_hodge_lyubeznik {
        for (r, p, q, m) in &stratum.entries {
            out.push_str(&format!(
                "intersection_hodge_lyubeznik,a{}[{r};{p};{q}],{m}\n",
                stratum.stratum
            ));
        }
    }
    out.push_str(&format!(
        "q_factoriality,rational_homology_manifold,{}\n",
        report.q_factoriality.rational_homology_manifold
    ));
    out
}

fn curve_markdown(report: &CurveReport) -> String {
    let mut out = format!(
        "# Secant variety sigma_{} of a genus-{} curve\n\n",
        report.context.order, report.context.genus
    );
    out.push_str(&format!(
        "- dim = {}\n- perverse constant sheaf: {}\n- generation level bound = {}\n- rational homology manifold: {}\n",
        report.context.dim_sigma,
        report.constant_sheaf.perverse,
        report.generation_level.gl_bound,
        report.q_factoriality.rational_homology_manifold,
    ));
    markdown_table("Intersection cohomology", &report.intersection_cohomology, &mut out);
    markdown_table("Singular cohomology", &report.cohomology, &mut out);
    out
}
