//! The `lattice16` command line.
//!
//! Exit codes: 0 on success, 1 when an internal check fails (oracle
//! disagreement, consistency triangle), 2 on usage or parse errors.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::census::Census;
use crate::classifier::{Classifier, ClassifierOptions};
use crate::error::Error;
use crate::lattice::{k_matrix, kappa, LatticeSubset};
use crate::linalg::{analytic_pt_spectrum, pt_spectrum};
use crate::notation::{parse_subset, render_grid, render_pairs, render_table};
use crate::oracle::verify_subsets;
use crate::separability::check_certificate;
use crate::symmetry::SymmetryGroup;
use crate::tolerance::NPT_DECISION;
use crate::witness::witness_scan;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Ascii,
}

#[derive(Debug, Parser)]
#[command(
    name = "lattice16",
    version,
    about = "Classify the lattice states of two ququarts"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Ascii)]
    pub format: Format,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, env = "LATTICE16_THREADS")]
    pub threads: Option<usize>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Margin for numeric PPT decisions, in (0, 1e-3].
    #[arg(long, global = true, default_value_t = NPT_DECISION)]
    pub tolerance: f64,
    /// Re-check every PPT/NPT verdict against the dense spectrum.
    #[arg(long, global = true)]
    pub numeric_double_check: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one subset.
    Classify { subset: String },
    /// Classify every orbit with N in [min, max].
    Census {
        #[arg(long, default_value_t = 1)]
        min: u32,
        #[arg(long, default_value_t = 16)]
        max: u32,
        /// JSON-lines output, one record per orbit.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Summary CSV output.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Canonical form, orbit size and stabilizer order.
    Orbit { subset: String },
    /// Witness reports at the k = 1 sites.
    Witness { subset: String },
    /// Exact decomposition over the rank-4 PPT basis.
    Decompose { subset: String },
    /// Dense and analytic partial-transpose spectra.
    Ptspectrum { subset: String },
    /// Grid, pair list, hex and table forms.
    Render { subset: String },
    /// Combinatorial vs dense oracle checks.
    Verify {
        /// All 65 535 nonempty subsets instead of a seeded sample of 1 000.
        #[arg(long)]
        full: bool,
    },
}

/// Validated runtime settings.
#[derive(Clone, Debug, PartialEq)]
pub struct CliConfig {
    pub tolerance: f64,
    pub threads: usize,
    pub seed: u64,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub numeric_double_check: bool,
}

impl CliConfig {
    pub fn from_args(
        g: &GlobalArgs,
        output_path: Option<PathBuf>,
    ) -> std::result::Result<Self, String> {
        if !(g.tolerance > 0.0 && g.tolerance <= 1e-3) {
            return Err(format!("tolerance {} outside (0, 1e-3]", g.tolerance));
        }
        let threads = g
            .threads
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        if threads == 0 {
            return Err("threads must be at least 1".into());
        }
        Ok(Self {
            tolerance: g.tolerance,
            threads,
            seed: g.seed,
            output_path,
            format: g.format,
            numeric_double_check: g.numeric_double_check,
        })
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptySubset
            | Error::NotPpt(_)
            | Error::IndexOutOfRange(_)
            | Error::Parse { .. }
            | Error::NotOnCross { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let output_path = match &cli.command {
        Command::Census { out, .. } => out.clone(),
        _ => None,
    };
    let config = match CliConfig::from_args(&cli.global, output_path) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let mut buffer = Vec::new();
    let result = pool.install(|| dispatch(&cli.command, &config, &mut buffer));
    if out.write_all(&buffer).and_then(|()| out.flush()).is_err() {
        return 1;
    }
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            1
        }
    }
}

fn classifier(config: &CliConfig) -> Classifier {
    Classifier::new(ClassifierOptions {
        numeric_double_check: config.numeric_double_check,
        canonicalize_lp: true,
        tolerance: config.tolerance,
    })
}

fn json<T: Serialize>(out: &mut dyn Write, value: &T) -> CmdResult {
    let s = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn no_csv(command: &str) -> Failure {
    Failure::Usage(format!("--format csv is not available for {command}"))
}

fn dispatch(command: &Command, config: &CliConfig, out: &mut dyn Write) -> CmdResult {
    let parse = |s: &str| parse_subset(s).map_err(Failure::from);
    match command {
        Command::Classify { subset } => {
            let s = parse(subset)?;
            let c = classifier(config);
            match config.format {
                Format::Json => json(out, &c.classify(s)?)?,
                Format::Csv => {
                    let r = c.classify(s)?;
                    writeln!(out, "subset,N,kappa,label,justification")?;
                    writeln!(
                        out,
                        "{},{},{},{},{}",
                        r.subset, r.n, r.kappa, r.label, r.justification
                    )?;
                }
                Format::Ascii => write!(out, "{}", c.explain(s)?)?,
            }
        }
        Command::Census {
            min, max, summary, ..
        } => {
            if min > max || *max > 16 {
                return Err(Failure::Usage(format!("invalid N range {min}..={max}")));
            }
            let census = Census::run(&classifier(config), (*min).max(1)..=*max)?;
            if let Some(path) = &config.output_path {
                let mut w = BufWriter::new(File::create(path)?);
                census.write_jsonl(&mut w)?;
                w.flush()?;
            }
            let table = census.summary();
            if let Some(path) = summary {
                let mut w = BufWriter::new(File::create(path)?);
                table.write_csv(&mut w)?;
                w.flush()?;
            }
            match config.format {
                Format::Json => {
                    for r in &census.records {
                        writeln!(
                            out,
                            "{}",
                            serde_json::to_string(r)
                                .map_err(|e| Failure::Internal(e.to_string()))?
                        )?;
                    }
                }
                Format::Csv => table.write_csv(&mut *out)?,
                Format::Ascii => {
                    writeln!(
                        out,
                        "{} orbits covering {} subsets",
                        census.records.len(),
                        census.total_subsets()
                    )?;
                    writeln!(
                        out,
                        "{:>3} {:>14} {:>14} {:>10} {:>8}",
                        "N", "NPT_ENTANGLED", "PPT_ENTANGLED", "SEPARABLE", "UNKNOWN"
                    )?;
                    for n in *min..=*max {
                        let c: Vec<usize> = crate::classifier::Label::ALL
                            .iter()
                            .map(|&l| table.subsets_with(n, l))
                            .collect();
                        writeln!(
                            out,
                            "{n:>3} {:>14} {:>14} {:>10} {:>8}",
                            c[0], c[1], c[2], c[3]
                        )?;
                    }
                }
            }
        }
        Command::Orbit { subset } => {
            let s = parse(subset)?;
            let r = SymmetryGroup::shared().canonical_form(s);
            match config.format {
                Format::Json => json(out, &r)?,
                Format::Csv => {
                    writeln!(out, "subset,canonical,orbit_size,stabilizer_order")?;
                    writeln!(
                        out,
                        "{s},{},{},{}",
                        r.canonical, r.orbit_size, r.stabilizer_order
                    )?;
                }
                Format::Ascii => {
                    writeln!(
                        out,
                        "canonical {}  orbit size {}  stabilizer order {}",
                        r.canonical, r.orbit_size, r.stabilizer_order
                    )?;
                    write!(out, "{}", render_table(r.canonical))?;
                }
            }
        }
        Command::Witness { subset } => {
            let s = parse(subset)?;
            let scan = witness_scan(s)?;
            match config.format {
                Format::Json => json(out, &scan)?,
                Format::Csv => return Err(no_csv("witness")),
                Format::Ascii => {
                    writeln!(out, "kappa = {}", kappa(s))?;
                    if scan.reports.is_empty() {
                        writeln!(out, "no k = 1 site")?;
                    }
                    for r in &scan.reports {
                        writeln!(
                            out,
                            "(mu,nu) = {}  center {}{}  point {}  V = {}  value {:.12}  dense {:.12}",
                            r.site_mu_nu,
                            r.center,
                            if r.center_in_i { " in I" } else { "" },
                            r.contributing_point,
                            r.v,
                            r.value,
                            r.dense_value
                        )?;
                    }
                    for p in &scan.kappa_zero_undecided {
                        writeln!(out, "(mu,nu) = {p}  kappa-zero, undecided")?;
                    }
                }
            }
        }
        Command::Decompose { subset } => {
            let s = parse(subset)?;
            let c = classifier(config);
            let cert = c.decompose(s)?;
            if let Some(cert) = &cert {
                check_certificate(c.basis(), cert)?;
            }
            match (config.format, &cert) {
                (Format::Json, _) => json(out, &cert)?,
                (Format::Csv, _) => return Err(no_csv("decompose")),
                (Format::Ascii, None) => {
                    writeln!(out, "no decomposition over the rank-4 separable basis")?
                }
                (Format::Ascii, Some(cert)) => {
                    writeln!(
                        out,
                        "{} = convex combination of {} rank-4 PPT states",
                        cert.target,
                        cert.len()
                    )?;
                    for (m, w) in &cert.weights {
                        writeln!(out, "  {w} x {m}  {}", render_grid(*m))?;
                    }
                }
            }
        }
        Command::Ptspectrum { subset } => {
            let s = parse(subset)?;
            let numeric = pt_spectrum(s)?;
            let analytic = analytic_pt_spectrum(s)?;
            match config.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Spectra<'a> {
                        subset: LatticeSubset,
                        numeric: &'a [f64],
                        analytic: &'a [f64],
                        max_deviation: f64,
                    }
                    json(
                        out,
                        &Spectra {
                            subset: s,
                            numeric: &numeric.eigenvalues,
                            analytic: &analytic.eigenvalues,
                            max_deviation: numeric.max_deviation(&analytic),
                        },
                    )?
                }
                Format::Csv => {
                    writeln!(out, "index,numeric,analytic")?;
                    for (i, (a, b)) in numeric
                        .eigenvalues
                        .iter()
                        .zip(&analytic.eigenvalues)
                        .enumerate()
                    {
                        writeln!(out, "{i},{a},{b}")?;
                    }
                }
                Format::Ascii => {
                    let k = k_matrix(s);
                    writeln!(
                        out,
                        "N = {}  kappa = {}  max k = {}",
                        s.len(),
                        k.min(),
                        k.max()
                    )?;
                    for (a, b) in numeric.eigenvalues.iter().zip(&analytic.eigenvalues) {
                        writeln!(out, "{a:>+.12}  {b:>+.12}")?;
                    }
                }
            }
        }
        Command::Render { subset } => {
            let s = parse(subset)?;
            match config.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Forms {
                        hex: LatticeSubset,
                        grid: String,
                        pairs: String,
                    }
                    json(
                        out,
                        &Forms {
                            hex: s,
                            grid: render_grid(s),
                            pairs: render_pairs(s),
                        },
                    )?
                }
                Format::Csv => return Err(no_csv("render")),
                Format::Ascii => {
                    writeln!(out, "{}  {}  {}", s, render_grid(s), render_pairs(s))?;
                    write!(out, "{}", render_table(s))?;
                }
            }
        }
        Command::Verify { full } => {
            let subsets: Vec<LatticeSubset> = if *full {
                LatticeSubset::all_nonempty().collect()
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                (0..1000)
                    .map(|_| LatticeSubset(rng.random_range(1..=u16::MAX)))
                    .collect()
            };
            let report = verify_subsets(&subsets, config.tolerance)?;
            match config.format {
                Format::Json => json(out, &report)?,
                Format::Csv => return Err(no_csv("verify")),
                Format::Ascii => writeln!(
                    out,
                    "verified {} subsets: {} PPT, {} witnessed, max spectrum deviation {:e}",
                    report.checked, report.ppt, report.witnessed, report.max_spectrum_deviation
                )?,
            }
        }
    }
    Ok(())
}
