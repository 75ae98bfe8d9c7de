//! Command-line front end: reads a module file, runs one computation or
//! check suite, prints tables, and reports through the exit code
//! (0 success, 1 a check failed, 2 input error).

pub mod input;

use std::ffi::OsString;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use bicoh::cohomology::{cd_estimate, local_coh_tables, CechOracle, Theory};
use bicoh::duality::{
    check_corner, check_cm_degeneration, check_depth_sminus1_les, check_dim_r0_le1, check_euler, check_five_term,
    check_free, check_gencm_les, check_lemma_simple, check_structure1, CheckReport,
};
use bicoh::error::{Error, Result};
use bicoh::groebner::FreeModule;
use bicoh::poly::RingSpec;
use bicoh::resolve::{profile_from_resolution, resolve, Presentation};
use bicoh::table::{DimTable, Window};
use bicoh::tame::{limit_profile_check, reg_scan, tame_scan};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "bicoh", version, about = "Local cohomology of bigraded modules over F_p[x, y]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct WindowArgs {
    /// Bidegree window `aMin:aMax,bMin:bMax`.
    #[arg(long, allow_hyphen_values = true, default_value = "-4:4,-4:4")]
    window: Window,
    /// Write tables as `a,b,dim` CSV (one file per table).
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum Suite {
    Simple,
    Free,
    Euler,
    Cm,
    Corner,
    Gencm,
    Dimle1,
    Structure,
    Fiveterm,
    Depthles,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert function over the window.
    Hilbert {
        module: PathBuf,
        #[command(flatten)]
        out: WindowArgs,
    },
    /// Minimal free resolution: Betti numbers by bidegree.
    Resolve {
        module: PathBuf,
        /// Write the minimal presentation read off the resolution.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Dimension, depth, projective dimension, Cohen-Macaulayness.
    Profile {
        module: PathBuf,
        /// Window used for the cohomological dimension lower bound.
        #[arg(long, allow_hyphen_values = true, default_value = "-4:4,-4:4")]
        window: Window,
    },
    /// Local cohomology tables by local duality on strands.
    Locoh {
        module: PathBuf,
        #[arg(long)]
        theory: Theory,
        /// Cohomological index; all indices when omitted.
        #[arg(short = 'i')]
        index: Option<usize>,
        #[command(flatten)]
        out: WindowArgs,
    },
    /// Local cohomology tables from the Čech complex.
    Oracle {
        module: PathBuf,
        #[arg(long)]
        theory: Theory,
        #[arg(short = 'i')]
        index: Option<usize>,
        /// Compare against the local duality tables; exit 1 on a mismatch.
        #[arg(long)]
        compare: bool,
        #[command(flatten)]
        out: WindowArgs,
    },
    /// Run a verification suite.
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Module file (all suites except `simple`).
        module: Option<PathBuf>,
        /// Number of x variables (suite `simple`).
        #[arg(short = 'm')]
        m: Option<usize>,
        /// Number of y variables (suite `simple`).
        #[arg(short = 'n')]
        n: Option<usize>,
        /// Field characteristic (suite `simple`).
        #[arg(short = 'p', default_value_t = bicoh::arith::DEFAULT_PRIME)]
        p: u32,
        #[arg(long, allow_hyphen_values = true, default_value = "-4:4,-4:4")]
        window: Window,
    },
    /// Tameness evidence for H^k_Q(M) over strands j.
    Tame {
        module: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Strand range `jMin:jMax`.
        #[arg(long, allow_hyphen_values = true, default_value = "-10:10", value_parser = parse_range)]
        jwindow: RangeInclusive<i64>,
    },
    /// Stabilization of strand depth and dimension.
    Limit {
        module: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value = "0:10", value_parser = parse_range)]
        jwindow: RangeInclusive<i64>,
    },
    /// Regularity of the strands of the top Ext module.
    Regscan {
        module: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value = "0:10", value_parser = parse_range)]
        jwindow: RangeInclusive<i64>,
    },
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<i64>, String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected `lo:hi`, found `{s}`"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad integer `{lo}`"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad integer `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

/// Failure of a command: bad input, or a check that ran and failed.
enum Failure {
    Input(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

pub fn load_module(path: &Path) -> Result<Presentation> {
    let text = fs::read_to_string(path).map_err(|e| Error::Format {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    input::parse_module(&text)
}

/// Writes `contents` to `path` through a temporary file in the same directory.
fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = dir.join(format!(".{name}.tmp{}", std::process::id()));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}

/// `base` for a single table, `stem_<label>.ext` for several.
fn csv_path(base: &Path, label: &str, several: bool) -> PathBuf {
    if !several {
        return base.to_path_buf();
    }
    let stem = base.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match base.extension() {
        Some(ext) => format!("{stem}_{label}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{label}"),
    };
    base.with_file_name(name)
}

fn emit_tables(out: &mut impl std::io::Write, csv: Option<&Path>, tables: &[(String, DimTable)]) -> Outcome {
    for (label, table) in tables {
        writeln!(out, "{label}")?;
        write!(out, "{}", table.render())?;
        if let Some(base) = csv {
            write_atomic(&csv_path(base, &file_label(label), tables.len() > 1), &table.to_csv())?;
        }
    }
    Ok(())
}

fn file_label(label: &str) -> String {
    label
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect::<String>()
        .trim_matches('_')
        .to_string()
}

fn header(out: &mut impl std::io::Write, ring: RingSpec) -> std::io::Result<()> {
    writeln!(out, "p = {}, m = {}, n = {}", ring.p(), ring.m(), ring.n())
}

fn report(out: &mut impl std::io::Write, r: &CheckReport) -> Outcome {
    write!(out, "{r}")?;
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn indices(top: usize, index: Option<usize>) -> std::result::Result<Vec<usize>, Failure> {
    match index {
        Some(i) if i > top => Err(Failure::Input(format!("index {i} exceeds {top}"))),
        Some(i) => Ok(vec![i]),
        None => Ok((0..=top).collect()),
    }
}

fn execute(cmd: Command, out: &mut impl std::io::Write) -> Outcome {
    match cmd {
        Command::Hilbert { module, out: w } => {
            let m = load_module(&module)?;
            header(out, m.ring())?;
            emit_tables(out, w.csv.as_deref(), &[("Hilbert function".into(), m.hilbert_table(w.window))])
        }
        Command::Resolve { module, emit } => {
            let m = load_module(&module)?;
            header(out, m.ring())?;
            let res = resolve(&m);
            for (i, f) in res.modules().iter().enumerate() {
                let shifts: Vec<String> = f.shifts().iter().map(|d| d.to_string()).collect();
                writeln!(out, "F{i}: rank {} [{}]", f.rank(), shifts.join(" "))?;
            }
            writeln!(out, "length {}", res.length())?;
            if let Some(path) = emit {
                let min = match res.maps().first() {
                    Some(map) => Presentation::from_matrix(map.clone()),
                    None => Presentation::free(res.modules().first().cloned().unwrap_or_else(|| FreeModule::new(m.ring(), vec![]))),
                };
                write_atomic(&path, &input::write_module(&min))?;
            }
            Ok(())
        }
        Command::Profile { module, window } => {
            let m = load_module(&module)?;
            header(out, m.ring())?;
            let res = resolve(&m);
            let p = profile_from_resolution(&res)?;
            writeln!(out, "dim {}\ndepth {}\npd {}\ncm {}\ngeneralized cm {}", p.dim, p.depth, p.pd, p.is_cm, p.is_gen_cm)?;
            if m.ring().n() > 0 {
                writeln!(out, "cd >= {} (window {window})", cd_estimate(&m, window)?)?;
            }
            Ok(())
        }
        Command::Locoh { module, theory, index, out: w } => {
            let m = load_module(&module)?;
            header(out, m.ring())?;
            let wanted = indices(theory.top(m.ring()), index)?;
            let all = local_coh_tables(&m, theory, w.window)?;
            let tables: Vec<(String, DimTable)> = wanted
                .into_iter()
                .map(|i| (format!("H^{i}_{theory}(M)"), all[i].table.clone()))
                .collect();
            emit_tables(out, w.csv.as_deref(), &tables)
        }
        Command::Oracle { module, theory, index, compare, out: w } => {
            let m = load_module(&module)?;
            header(out, m.ring())?;
            let wanted = indices(theory.top(m.ring()), index)?;
            let oracle = CechOracle::new(&m, theory)?;
            let all = oracle.tables(w.window)?;
            let tables: Vec<(String, DimTable)> = wanted
                .iter()
                .map(|&i| (format!("H^{i}_{theory}(M) (Cech)"), all[i].clone()))
                .collect();
            emit_tables(out, w.csv.as_deref(), &tables)?;
            if compare {
                let dual = local_coh_tables(&m, theory, w.window)?;
                for &i in &wanted {
                    if let Some((d, v)) = all[i].iter().find(|&(d, v)| dual[i].at(d) != v) {
                        writeln!(out, "mismatch H^{i} at {d}: Cech {v}, local duality {}", dual[i].at(d))?;
                        return Err(Failure::Check);
                    }
                }
                writeln!(out, "Cech and local duality tables agree")?;
            }
            Ok(())
        }
        Command::Check { suite, module, m, n, p, window } => {
            if let Suite::Simple = suite {
                let (Some(m), Some(n)) = (m, n) else {
                    return Err(Failure::Input("suite simple needs -m and -n".into()));
                };
                let ring = RingSpec::new(p, m, n)?;
                header(out, ring)?;
                return report(out, &check_lemma_simple(ring, window)?);
            }
            let path = module.ok_or_else(|| Failure::Input("this suite needs a module file".into()))?;
            let pres = load_module(&path)?;
            header(out, pres.ring())?;
            let r = match suite {
                Suite::Simple => unreachable!("handled above"),
                Suite::Free => {
                    let min = pres.minimize();
                    if min.num_relations() > 0 {
                        return Err(Failure::Input("suite free needs a module without relations".into()));
                    }
                    check_free(min.generators(), window)?
                }
                Suite::Euler => check_euler(&pres, window)?,
                Suite::Cm => check_cm_degeneration(&pres, window)?,
                Suite::Corner => check_corner(&pres, window)?,
                Suite::Gencm => check_gencm_les(&pres, window)?,
                Suite::Dimle1 => check_dim_r0_le1(&pres, window)?,
                Suite::Structure => check_structure1(&pres, window)?,
                Suite::Fiveterm => check_five_term(&pres, window)?,
                Suite::Depthles => check_depth_sminus1_les(&pres, window)?,
            };
            report(out, &r)
        }
        Command::Tame { module, k, jwindow } => {
            let m = load_module(&module)?;
            header(out, m.ring())?;
            write!(out, "{}", tame_scan(&m, k, jwindow)?)?;
            Ok(())
        }
        Command::Limit { module, jwindow } => {
            let m = load_module(&module)?;
            header(out, m.ring())?;
            report(out, &limit_profile_check(&m, jwindow)?)
        }
        Command::Regscan { module, jwindow } => {
            let m = load_module(&module)?;
            header(out, m.ring())?;
            write!(out, "{}", reg_scan(&m, jwindow)?)?;
            Ok(())
        }
    }
}

/// Caps the worker pool from `BICOH_THREADS` (unset or 0 means automatic).
fn configure_threads() -> std::result::Result<(), String> {
    let Ok(v) = std::env::var("BICOH_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| format!("BICOH_THREADS: bad value `{v}`"))?;
    if n > 0 {
        // A pool that is already built (repeated calls in one process) is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

/// Runs one command line, writing to `out` and errors to standard error.
pub fn run<I, T>(argv: I, out: &mut impl std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return EXIT_INPUT;
    }
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Check) => EXIT_CHECK_FAILED,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
    }
}
