//! `gsieve`: generate, analyze and verify self-referential sieves.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sieve_core::double::run_double_capped;
use sieve_core::golden::{normalize, run_golden_capped};
use sieve_core::hiccup::{extraction_trace, hiccup_generate, HiccupParams};
use sieve_core::oeis::{compare, comparisons_csv, emit_bfile, parse_bfile};
use sieve_core::quad::slopes::{
    deletion_slope, metallic_mean, reverse_mean, slope_alpha, slope_gamma,
};
use sieve_core::quad::{cf_expand, cf_rows_csv, CfRow, QuadSurd};
use sieve_core::rank_transform::{check_equivalence, companion, fixed_point, BlockSequence};
use sieve_core::squares::run_squares_capped;
use sieve_core::verify::{list_suites, run_suite, GridOverride, ReportFormat};
use sieve_core::word::{
    balance_report, beatty_fit, factor_complexity, gap_word, ones_density, sturmian_verdict,
    BinaryWord,
};
use sieve_core::working_set::DEFAULT_MAX_INDEX;
use sieve_core::{Error, GroundSequence};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RUNTIME: u8 = 3;

/// Environment variable holding the hard working-set cap.
const MAX_INDEX_VAR: &str = "GSIEVE_MAX_INDEX";

#[derive(Parser)]
#[command(
    name = "gsieve",
    version,
    about = "Golden, double and extraction sieves with exact cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a sieve and print its trace.
    #[command(subcommand)]
    Sieve(SieveCmd),
    /// Generate a (j,x,y,z)-hiccup sequence.
    Hiccup(HiccupArgs),
    /// Analyze the gap word of the golden sieve on aN+b.
    Analyze(AnalyzeArgs),
    /// Continued fraction of a slope.
    Cf(CfArgs),
    /// Rank-transform fixed point of u_(a,b) and its companion.
    RankTransform(RankArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Read, write and compare b-files.
    #[command(subcommand)]
    Oeis(OeisCmd),
}

#[derive(Subcommand)]
enum SieveCmd {
    /// Golden sieve: delete the entry at the position named by the n-th entry.
    Golden {
        #[command(flatten)]
        ground: GroundArg,
        #[arg(long, default_value_t = 100)]
        steps: u64,
        /// Print ground indices instead of values (arithmetic grounds only).
        #[arg(long)]
        normalized: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Double sieve: delete both the pointer and its target.
    Double {
        #[command(flatten)]
        ground: GroundArg,
        #[arg(long, default_value_t = 100)]
        steps: u64,
        #[arg(long)]
        normalized: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Extraction sieve C_(j,y,z).
    Extract {
        #[arg(long)]
        j: u64,
        #[arg(long)]
        y: u64,
        #[arg(long)]
        z: u64,
        #[command(flatten)]
        ground: GroundArg,
        #[arg(long, visible_alias = "steps", default_value_t = 100)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct GroundArg {
    /// `naturals`, `squares`, or `arith A B` for aN+b.
    #[arg(long, num_args = 1..=3, value_names = ["KIND", "A", "B"], default_values_t = ["naturals".to_string()])]
    ground: Vec<String>,
}

impl GroundArg {
    fn parse(&self) -> Result<GroundSequence, Failure> {
        let words: Vec<&str> = self.ground.iter().map(String::as_str).collect();
        match words.as_slice() {
            ["naturals"] => Ok(GroundSequence::Naturals),
            ["squares"] => Ok(GroundSequence::Squares),
            ["arith", a, b] => {
                let num = |s: &str| {
                    s.parse::<u64>().map_err(|_| {
                        Failure::usage(format!("--ground arith: {s:?} is not an integer"))
                    })
                };
                GroundSequence::arith(num(a)?, num(b)?).map_err(|e| Failure::usage(e.to_string()))
            }
            _ => Err(Failure::usage(
                "--ground takes `naturals`, `squares` or `arith A B`",
            )),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Bfile,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Column written in bfile format.
    #[arg(long, default_value = "survivors")]
    column: String,
}

#[derive(Args)]
struct HiccupArgs {
    #[arg(long)]
    j: u64,
    #[arg(long)]
    x: u64,
    #[arg(long)]
    y: u64,
    #[arg(long)]
    z: u64,
    #[arg(long, default_value_t = 100)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Analysis {
    Gapword,
    Complexity,
    Density,
    Balance,
    BeattyFit,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(value_enum)]
    what: Analysis,
    #[arg(long, default_value_t = 1)]
    a: u64,
    #[arg(long, default_value_t = 0)]
    b: u64,
    /// Word length in bits, or sequence length for beatty-fit.
    #[arg(long, default_value_t = 100)]
    len: u64,
    /// Largest factor length for complexity and balance.
    #[arg(long, default_value_t = 12)]
    max_len: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Slope {
    /// Golden-sieve survivor slope alpha(a).
    Alpha,
    /// Deletion slope a alpha(a) + 1.
    Deletion,
    /// Double-sieve pointer slope gamma(a).
    Gamma,
    /// Metallic mean M_k.
    Mk,
    /// Reverse mean R_k.
    Rk,
}

#[derive(Args)]
struct CfArgs {
    #[arg(long, value_enum)]
    slope: Slope,
    #[arg(long)]
    param: u64,
    #[arg(long, default_value_t = sieve_core::quad::DEFAULT_CF_STEPS)]
    max_steps: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct RankArgs {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
    #[arg(long, default_value_t = 100)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyFormat {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "list")]
    suite: Option<String>,
    /// Parameter overrides, e.g. `a=2..4,n=500`.
    #[arg(long, default_value = "")]
    grid: String,
    /// List the available suites.
    #[arg(long)]
    list: bool,
    #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
    format: VerifyFormat,
}

#[derive(Subcommand)]
enum OeisCmd {
    /// Compare a sequence read from stdin with a b-file.
    Compare {
        #[arg(long)]
        bfile: PathBuf,
        /// Reference index aligned with the first input term.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        offset: i64,
        /// Read stdin as a b-file instead of a plain list.
        #[arg(long)]
        bfile_input: bool,
        #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
        format: VerifyFormat,
    },
    /// Write a sequence read from stdin as a b-file.
    Emit {
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        start: i64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Precondition(_)
            | Error::UnsupportedGround(_)
            | Error::InvalidGround(_)
            | Error::UnknownSuite(_) => EXIT_USAGE,
            Error::Parse { .. } | Error::Format { .. } => EXIT_USAGE,
            _ => EXIT_RUNTIME,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_RUNTIME,
            message: e.to_string(),
        }
    }
}

type Out = Result<(String, u8), Failure>;

fn max_index() -> Result<u64, Failure> {
    match std::env::var(MAX_INDEX_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{MAX_INDEX_VAR}={v:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_MAX_INDEX),
    }
}

fn with_params(e: Error, params: String) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("{params}: {}", f.message);
    f
}

fn table(header: &[&str], rows: &[Vec<String>], format: Format) -> Result<String, Failure> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let err = |e: csv::Error| Failure {
                code: EXIT_RUNTIME,
                message: e.to_string(),
            };
            w.write_record(header).map_err(err)?;
            for r in rows {
                w.write_record(r).map_err(err)?;
            }
            let bytes = w.into_inner().map_err(|e| Failure {
                code: EXIT_RUNTIME,
                message: e.to_string(),
            })?;
            Ok(String::from_utf8_lossy(&bytes).into_owned())
        }
        _ => {
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for r in rows {
                for (w, c) in widths.iter_mut().zip(r) {
                    *w = (*w).max(c.len());
                }
            }
            let line = |cells: &mut dyn Iterator<Item = &str>| {
                cells
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
                    + "\n"
            };
            let mut s = line(&mut header.iter().copied());
            for r in rows {
                s += &line(&mut r.iter().map(String::as_str));
            }
            Ok(s)
        }
    }
}

/// Renders named columns; bfile emits only `column`.
fn columns(cols: &[(&str, Vec<u64>)], out: &OutputArgs) -> Result<String, Failure> {
    if out.format == Format::Bfile {
        let (_, v) = cols
            .iter()
            .find(|(name, _)| *name == out.column)
            .ok_or_else(|| {
                Failure::usage(format!(
                    "unknown column {:?}; choose from {}",
                    out.column,
                    names(cols)
                ))
            })?;
        return Ok(emit_bfile(v, 1));
    }
    let len = cols.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    let mut header = vec!["n"];
    header.extend(cols.iter().map(|(n, _)| *n));
    let rows: Vec<Vec<String>> = (0..len)
        .map(|i| {
            let mut r = vec![(i + 1).to_string()];
            r.extend(
                cols.iter()
                    .map(|(_, v)| v.get(i).map(u64::to_string).unwrap_or_default()),
            );
            r
        })
        .collect();
    table(&header, &rows, out.format)
}

fn names(cols: &[(&str, Vec<u64>)]) -> String {
    cols.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", ")
}

fn sieve(cmd: &SieveCmd) -> Out {
    let cap = max_index()?;
    match cmd {
        SieveCmd::Golden {
            ground,
            steps,
            normalized,
            out,
        } => {
            let g = ground.parse()?;
            if let GroundSequence::Squares = g {
                if *normalized {
                    return Err(Failure::usage("--normalized needs an arithmetic ground"));
                }
                let t = run_squares_capped(*steps, *steps, cap)
                    .map_err(|e| with_params(e, format!("squares, steps {steps}")))?;
                let cols = [("survivor_root", t.mu), ("deletion_root", t.lambda)];
                return Ok((columns(&cols, out)?, 0));
            }
            let t = run_golden_capped(&g, *steps, *steps, cap)
                .map_err(|e| with_params(e, format!("ground {g}, steps {steps}")))?;
            let cols = if *normalized {
                let p = normalize(&t)?;
                vec![("sigma", p.sigma), ("delta", p.delta)]
            } else {
                vec![
                    ("pointers", t.pointers()),
                    ("deletions", t.deletions.clone()),
                    ("survivors", t.survivors.clone()),
                ]
            };
            Ok((columns(&cols, out)?, 0))
        }
        SieveCmd::Double {
            ground,
            steps,
            normalized,
            out,
        } => {
            let g = ground.parse()?;
            let t = run_double_capped(&g, *steps, cap)
                .map_err(|e| with_params(e, format!("ground {g}, steps {steps}")))?;
            let cols = if *normalized {
                vec![
                    ("pi", t.pointers),
                    ("tau", t.targets),
                    ("sigma", t.survivors),
                ]
            } else {
                let survivors = t
                    .survivors
                    .iter()
                    .map(|&k| g.term(k))
                    .collect::<Result<Vec<_>, _>>()?;
                vec![
                    ("pointers", t.steps.iter().map(|s| s.pointer).collect()),
                    ("targets", t.steps.iter().map(|s| s.target).collect()),
                    ("survivors", survivors),
                ]
            };
            Ok((columns(&cols, out)?, 0))
        }
        SieveCmd::Extract {
            j,
            y,
            z,
            ground,
            n,
            out,
        } => {
            let g = ground.parse()?;
            let steps = extraction_trace(*j, *y, *z, &g, *n)
                .map_err(|e| with_params(e, format!("C({j},{y},{z}) on {g}")))?;
            let cols = [
                ("survivors", steps.iter().map(|s| s.survivor).collect()),
                ("member", steps.iter().map(|s| s.member as u64).collect()),
                ("consumed", steps.iter().map(|s| s.consumed).collect()),
            ];
            Ok((columns(&cols, out)?, 0))
        }
    }
}

fn sequence_out(seq: &[u64], format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Text => seq.iter().map(u64::to_string).collect::<Vec<_>>().join(" ") + "\n",
        Format::Csv => table(
            &["n", "value"],
            &seq.iter()
                .enumerate()
                .map(|(i, v)| vec![(i + 1).to_string(), v.to_string()])
                .collect::<Vec<_>>(),
            Format::Csv,
        )?,
        Format::Bfile => emit_bfile(seq, 1),
    })
}

fn hiccup(args: &HiccupArgs) -> Out {
    let p = HiccupParams::new(args.j, args.x, args.y, args.z)?;
    Ok((sequence_out(&hiccup_generate(&p, args.n), args.format)?, 0))
}

fn sieve_word(a: u64, b: u64, len: u64) -> Result<BinaryWord, Failure> {
    let g = if (a, b) == (1, 0) {
        GroundSequence::Naturals
    } else {
        GroundSequence::arith(a, b)?
    };
    let t = run_golden_capped(&g, len + 1, len + 1, max_index()?)
        .map_err(|e| with_params(e, format!("ground {g}, len {len}")))?;
    Ok(gap_word(&normalize(&t)?.sigma[..len as usize + 1], 1)?)
}

fn analyze(args: &AnalyzeArgs) -> Out {
    if args.b >= args.a.max(1) && (args.a, args.b) != (1, 0) {
        return Err(Failure::usage("analyze needs 0 <= b < a"));
    }
    if args.format == Format::Bfile && args.what != Analysis::Gapword {
        return Err(Failure::usage("bfile output is only available for gapword"));
    }
    let (a, b) = (args.a, args.b);
    let text = match args.what {
        Analysis::Gapword => {
            let w = sieve_word(a, b, args.len)?;
            match args.format {
                Format::Text => w.to_ascii() + "\n",
                Format::Bfile => emit_bfile(&w.bits, 2),
                Format::Csv => table(
                    &["n", "bit"],
                    &w.bits
                        .iter()
                        .enumerate()
                        .map(|(i, b)| vec![(i + 2).to_string(), b.to_string()])
                        .collect::<Vec<_>>(),
                    Format::Csv,
                )?,
            }
        }
        Analysis::Complexity => {
            let w = sieve_word(a, b, args.len)?;
            let p = factor_complexity(&w, args.max_len);
            let rows: Vec<Vec<String>> = p
                .iter()
                .enumerate()
                .map(|(i, c)| vec![(i + 1).to_string(), c.to_string()])
                .collect();
            let mut s = table(&["length", "factors"], &rows, args.format)?;
            if args.format == Format::Text {
                s += &format!("{}\n", sturmian_verdict(&w, args.max_len));
            }
            s
        }
        Analysis::Density => {
            let w = sieve_word(a, b, args.len)?;
            let r = ones_density(&w, (b == 0 || a >= 2).then_some(a));
            let row = vec![
                r.ones.to_string(),
                r.length.to_string(),
                format!("{:.6}", r.empirical),
                r.theoretical.clone().unwrap_or_default(),
                r.error.map(|e| format!("{e:.3e}")).unwrap_or_default(),
            ];
            table(
                &["ones", "length", "empirical", "theoretical", "error"],
                &[row],
                args.format,
            )?
        }
        Analysis::Balance => {
            let w = sieve_word(a, b, args.len)?;
            let rows: Vec<Vec<String>> = balance_report(&w, args.max_len)
                .iter()
                .enumerate()
                .map(|(i, d)| vec![(i + 1).to_string(), d.to_string()])
                .collect();
            table(&["length", "imbalance"], &rows, args.format)?
        }
        Analysis::BeattyFit => {
            let g = if (a, b) == (1, 0) {
                GroundSequence::Naturals
            } else {
                GroundSequence::arith(a, b)?
            };
            let t = run_golden_capped(&g, args.len, args.len, max_index()?)?;
            let sigma = normalize(&t)?.sigma;
            let alpha = slope_alpha(a);
            let fit = beatty_fit(&sigma[..args.len as usize], &alpha)
                .ok_or_else(|| Failure::usage("--len must be positive"))?;
            let row = vec![
                fit.alpha.to_string(),
                fit.lo.to_decimal(12),
                fit.hi.to_decimal(12),
                fit.feasible().to_string(),
            ];
            table(
                &["alpha", "beta_lo", "beta_hi", "feasible"],
                &[row],
                args.format,
            )?
        }
    };
    Ok((text, 0))
}

fn cf(args: &CfArgs) -> Out {
    let p = args.param;
    if p == 0 {
        return Err(Failure::usage("--param must be positive"));
    }
    let x: QuadSurd = match args.slope {
        Slope::Alpha => slope_alpha(p),
        Slope::Deletion => deletion_slope(p),
        Slope::Gamma => slope_gamma(p),
        Slope::Mk => metallic_mean(p),
        Slope::Rk => reverse_mean(p),
    };
    let e = cf_expand(&x, args.max_steps)?;
    Ok((
        match args.format {
            Format::Csv => cf_rows_csv(&[CfRow::new(p, &x, &e)]),
            Format::Text => format!("{e} period {}\n", e.period.len()),
            Format::Bfile => emit_bfile(&e.quotients(e.preperiod.len() + e.period.len()), 0),
        },
        0,
    ))
}

fn rank_transform(args: &RankArgs) -> Out {
    let u = BlockSequence::new(args.a, args.b)?;
    let state = fixed_point(&u, args.n, 4 * args.n + 16);
    if !state.converged {
        return Err(Failure {
            code: EXIT_RUNTIME,
            message: format!("no fixed point after {} iterations", state.iterations),
        });
    }
    let c = companion(&state.r, args.a, args.b);
    let mut text = match args.format {
        Format::Bfile => emit_bfile(&state.r, 1),
        f => {
            let rows: Vec<Vec<String>> = (0..args.n)
                .map(|i| {
                    vec![
                        (i + 1).to_string(),
                        state.r[i].to_string(),
                        c[i].to_string(),
                    ]
                })
                .collect();
            table(&["n", "r", "c"], &rows, f)?
        }
    };
    let mut code = 0;
    if args.format == Format::Text && args.a >= 2 && args.b < args.a {
        match check_equivalence(args.a, args.b, args.n)? {
            None => {
                text += &format!(
                    "matches the golden sieve on {}N+{} for n <= {}\n",
                    args.a, args.b, args.n
                )
            }
            Some(m) => {
                text += &format!(
                    "differs from the golden sieve: {}({}) = {} vs {}\n",
                    m.which, m.n, m.transform, m.sieve
                );
                code = EXIT_VERIFY;
            }
        }
    }
    Ok((text, code))
}

fn verify(args: &VerifyArgs) -> Out {
    if args.list {
        let mut s = String::new();
        for suite in list_suites() {
            s += &format!("{:<16} {}\n", suite.name, suite.description);
            s += &format!("{:<16} tags: {}\n", "", suite.tags.join(", "));
            for c in &suite.checks {
                s += &format!("{:<16}   {:<32} {}\n", "", c.id, c.class);
            }
        }
        return Ok((s, 0));
    }
    let name = args
        .suite
        .as_deref()
        .ok_or_else(|| Failure::usage("--suite is required"))?;
    let grid: GridOverride = args.grid.parse()?;
    let report = run_suite(name, &grid)?;
    let format = match args.format {
        VerifyFormat::Text => ReportFormat::Text,
        VerifyFormat::Csv => ReportFormat::Csv,
        VerifyFormat::Json => ReportFormat::Json,
    };
    Ok((
        report.render(format)?,
        if report.ok() { 0 } else { EXIT_VERIFY },
    ))
}

fn read_stdin() -> Result<String, Failure> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

fn parse_list(text: &str) -> Result<Vec<i128>, Failure> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i128>()
                .map_err(|_| Failure::usage(format!("{t:?} is not an integer")))
        })
        .collect()
}

fn oeis(cmd: &OeisCmd) -> Out {
    match cmd {
        OeisCmd::Compare {
            bfile,
            offset,
            bfile_input,
            format,
        } => {
            let text = std::fs::read_to_string(bfile)
                .map_err(|e| Failure::usage(format!("{}: {e}", bfile.display())))?;
            let mut reference =
                parse_bfile(&text).map_err(|e| with_params(e, bfile.display().to_string()))?;
            if reference.id.is_none() {
                reference.id = bfile.file_stem().map(|s| s.to_string_lossy().into_owned());
            }
            let input = read_stdin()?;
            let seq = if *bfile_input {
                parse_bfile(&input)?.values()
            } else {
                parse_list(&input)?
            };
            let c = compare(&seq, &reference, *offset);
            let code = if c.matches() { 0 } else { EXIT_VERIFY };
            let text = match format {
                VerifyFormat::Csv => comparisons_csv(std::slice::from_ref(&c))?,
                VerifyFormat::Json => {
                    serde_json::to_string_pretty(&c).map_err(|e| Failure {
                        code: EXIT_RUNTIME,
                        message: e.to_string(),
                    })? + "\n"
                }
                VerifyFormat::Text => {
                    let id = c.id.clone().unwrap_or_default();
                    match c.mismatch {
                        None => format!("{id}: {} of {} terms match\n", c.match_length, c.compared),
                        Some(m) => format!(
                            "{id}: {} terms match; index {} expected {}, got {}\n",
                            c.match_length, m.index, m.expected, m.actual
                        ),
                    }
                }
            };
            Ok((text, code))
        }
        OeisCmd::Emit { start } => {
            let seq = parse_list(&read_stdin()?)?;
            Ok((emit_bfile(&seq, *start), 0))
        }
    }
}

fn run(cli: &Cli) -> Out {
    match &cli.command {
        Command::Sieve(s) => sieve(s),
        Command::Hiccup(h) => hiccup(h),
        Command::Analyze(a) => analyze(a),
        Command::Cf(c) => cf(c),
        Command::RankTransform(r) => rank_transform(r),
        Command::Verify(v) => verify(v),
        Command::Oeis(o) => oeis(o),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(EXIT_RUNTIME);
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("gsieve: {}", f.message);
            if f.code == EXIT_USAGE {
                eprintln!("run `gsieve --help` for the command grammar");
            }
            ExitCode::from(f.code)
        }
    }
}
