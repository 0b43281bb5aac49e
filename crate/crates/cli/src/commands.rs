use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use edgereg_core::constructor::build;
use edgereg_core::edge_ideal::{hilbert_series, invariant_report};
use edgereg_core::oracle::verify_lemma_suite;
use edgereg_core::suspension::{
    check_domination_hypothesis, edge_s_suspension, predict_edge_s_suspension,
    predict_s_suspension, s_suspension,
};
use edgereg_core::{BaseGraphProvider, FieldSpec, Graph, VertexSet};

use crate::io::{graph_json, read_graph, to_dot, write_graph};
use crate::json::{pretty, CertificateJson, ReportJson, VerifyReportJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BASE_UNAVAILABLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "edgereg",
    version,
    about = "Invariants of edge ideals and graphs with prescribed (im, reg, deg h)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print im, m, reg, dim and the h-polynomial of a graph file.
    Invariants {
        path: PathBuf,
        /// q, f2 or fp:<p>
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        #[arg(long)]
        json: bool,
    },
    /// Build a connected graph with im = A, reg = R and deg h = S.
    Construct {
        a: usize,
        r: usize,
        s: usize,
        /// Directory with extra base graphs named L_<r>.json.
        #[arg(long)]
        base_dir: Option<PathBuf>,
        /// Seed for the base-graph search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random base-graph candidates to try per missing r.
        #[arg(long, default_value_t = 0)]
        budget: u64,
        /// Graph output; printed to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Certificate output; defaults to <out>.cert.json next to --out.
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
    },
    /// Apply an S-suspension, or with --edge an edge suspension.
    Suspend {
        path: PathBuf,
        /// Comma-separated independent set, e.g. "1,3"; empty for S = ∅.
        #[arg(long = "s", default_value = "")]
        s: String,
        /// Edge "i,j" for the edge suspension.
        #[arg(long)]
        edge: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the randomized lemma checks against the brute-force oracles.
    Verify {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        #[arg(long)]
        json: bool,
    },
    /// Print the Hilbert function of R/I(G) in degrees 0..=D.
    Expand {
        path: PathBuf,
        #[arg(long, default_value_t = 6)]
        degree: usize,
    },
    /// Write the graph in DOT format with vertices x1..xn.
    ExportDot {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code(&e);
            match e.downcast_ref::<edgereg_core::Error>() {
                Some(core) => {
                    let _ = writeln!(err, "error [{}]: {e:#}", core.name());
                }
                None => {
                    let _ = writeln!(err, "error: {e:#}");
                }
            }
            code
        }
    }
}

fn exit_code(e: &anyhow::Error) -> i32 {
    use edgereg_core::Error as E;
    match e.downcast_ref::<E>() {
        Some(E::BaseUnavailable(_)) => EXIT_BASE_UNAVAILABLE,
        Some(E::VerificationFailed(_) | E::SandwichViolation { .. }) => EXIT_VERIFICATION,
        _ => EXIT_USAGE,
    }
}

fn execute(command: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Invariants { path, field, json } => cmd_invariants(&path, field, json, out),
        Command::Construct {
            a,
            r,
            s,
            base_dir,
            seed,
            budget,
            out: out_path,
            cert,
            field,
        } => {
            let opts = ConstructOptions {
                base_dir,
                seed,
                budget,
                out: out_path,
                cert,
                field,
            };
            cmd_construct(a, r, s, &opts, out)
        }
        Command::Suspend {
            path,
            s,
            edge,
            out: out_path,
        } => cmd_suspend(&path, &s, edge.as_deref(), out_path.as_deref(), out),
        Command::Verify {
            trials,
            seed,
            max_n,
            field,
            json,
        } => cmd_verify(trials, seed, max_n, field, json, out),
        Command::Expand { path, degree } => cmd_expand(&path, degree, out),
        Command::ExportDot {
            path,
            out: out_path,
        } => cmd_export_dot(&path, out_path.as_deref(), out),
    }
}

pub fn cmd_invariants(
    path: &Path,
    field: FieldSpec,
    json: bool,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let g = read_graph(path)?;
    let report = invariant_report(&g, field)?;
    if json {
        write!(out, "{}", pretty(&ReportJson::from(&report)))?;
    } else {
        writeln!(
            out,
            "n={} connected={} field={}",
            report.n, report.connected, report.field
        )?;
        writeln!(out, "{report}")?;
    }
    Ok(EXIT_OK)
}

#[derive(Clone, Debug, Default)]
pub struct ConstructOptions {
    pub base_dir: Option<PathBuf>,
    pub seed: u64,
    pub budget: u64,
    pub out: Option<PathBuf>,
    pub cert: Option<PathBuf>,
    pub field: FieldSpec,
}

/// Registers every `L_<r>.json` in `dir`, in name order.
fn load_bases(dir: &Path, provider: &mut BaseGraphProvider) -> anyhow::Result<()> {
    let mut names = Vec::new();
    for entry in std::fs::read_dir(dir).with_context(|| format!("cannot list {}", dir.display()))? {
        names.push(entry?.file_name());
    }
    names.sort();
    for name in names {
        let Some(r) = name
            .to_str()
            .and_then(|n| n.strip_prefix("L_"))
            .and_then(|n| n.strip_suffix(".json"))
            .and_then(|n| n.parse::<usize>().ok())
        else {
            continue;
        };
        let g = read_graph(&dir.join(&name))?;
        provider.add_candidate(r, g, format!("file {}", name.to_string_lossy()));
    }
    Ok(())
}

fn default_cert_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    out.with_file_name(format!("{stem}.cert.json"))
}

pub fn cmd_construct(
    a: usize,
    r: usize,
    s: usize,
    opts: &ConstructOptions,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let mut provider = BaseGraphProvider::new(opts.field).with_search(opts.budget, opts.seed);
    if let Some(dir) = &opts.base_dir {
        load_bases(dir, &mut provider)?;
    }
    let cert = build(a, r, s, &mut provider, opts.field)?;
    cert.verify()?;
    let cert_json = CertificateJson::new(&cert)?;
    if cert_json.replay()? != cert.result {
        bail!(edgereg_core::Error::VerificationFailed(
            "certificate replay differs".into()
        ));
    }
    writeln!(
        out,
        "target (a, r, s) = ({a}, {r}, {s}): {} steps, n = {}",
        cert.steps.len(),
        cert.result.n()
    )?;
    writeln!(out, "{}", cert.report)?;
    let cert_path = opts
        .cert
        .clone()
        .or_else(|| opts.out.as_deref().map(default_cert_path));
    match &opts.out {
        Some(p) => write_graph(p, &cert.result)?,
        None => write!(out, "{}", graph_json(&cert.result))?,
    }
    if let Some(p) = cert_path {
        std::fs::write(&p, pretty(&cert_json))
            .with_context(|| format!("cannot write {}", p.display()))?;
    }
    Ok(EXIT_OK)
}

fn parse_vertex_list(text: &str) -> anyhow::Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .with_context(|| format!("bad vertex {t:?}"))
        })
        .collect()
}

fn check_labels(g: &Graph, vs: &[usize]) -> anyhow::Result<()> {
    if let Some(&v) = vs.iter().find(|&&v| v == 0 || v > g.n()) {
        return Err(edgereg_core::Error::InvalidVertex(v, g.n()).into());
    }
    Ok(())
}

pub fn cmd_suspend(
    path: &Path,
    s_text: &str,
    edge: Option<&str>,
    out_path: Option<&Path>,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let g = read_graph(path)?;
    let members = parse_vertex_list(s_text)?;
    check_labels(&g, &members)?;
    let s = VertexSet::try_from_vertices(&members)?;
    let before = hilbert_series(&g);
    let (result, predicted, formula) = match edge {
        None => {
            let h = s_suspension(&g, s)?;
            let p = predict_s_suspension(&before, s.len())?;
            (h, p, format!("H + λ/(1 - λ)^{}", s.len() + 1))
        }
        Some(e) => {
            let ends = parse_vertex_list(e)?;
            let [u, v] = ends[..] else {
                bail!(edgereg_core::Error::InvalidParameter(format!(
                    "--edge needs two vertices, got {e:?}"
                )));
            };
            check_labels(&g, &ends)?;
            let h = edge_s_suspension(&g, (u.min(v), u.max(v)), s)?;
            let dominated = check_domination_hypothesis(&g, (u.min(v), u.max(v)), s)?;
            writeln!(out, "domination hypothesis: {dominated}")?;
            let p = predict_edge_s_suspension(&before, s.len())?;
            (h, p, format!("H + λ(1 + λ)/(1 - λ)^{}", s.len() + 2))
        }
    };
    let after = hilbert_series(&result);
    writeln!(out, "before: {before}")?;
    writeln!(out, "prediction {formula}: {predicted}")?;
    writeln!(out, "after:  {after}")?;
    match out_path {
        Some(p) => write_graph(p, &result)?,
        None => write!(out, "{}", graph_json(&result))?,
    }
    if after != predicted {
        bail!(edgereg_core::Error::VerificationFailed(format!(
            "computed series {after} differs from the prediction {predicted}"
        )));
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(
    trials: usize,
    seed: u64,
    max_n: usize,
    field: FieldSpec,
    json: bool,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let report = verify_lemma_suite(seed, trials, max_n, field)?;
    if json {
        write!(out, "{}", pretty(&VerifyReportJson::from(&report)))?;
    } else {
        writeln!(out, "{report}")?;
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    })
}

pub fn cmd_expand(path: &Path, degree: usize, out: &mut dyn Write) -> anyhow::Result<i32> {
    let g = read_graph(path)?;
    let values: Vec<String> = hilbert_series(&g)
        .expansion(degree)
        .iter()
        .map(ToString::to_string)
        .collect();
    writeln!(out, "{}", values.join(" "))?;
    Ok(EXIT_OK)
}

pub fn cmd_export_dot(
    path: &Path,
    out_path: Option<&Path>,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let g = read_graph(path)?;
    match out_path {
        Some(p) => std::fs::write(p, to_dot(&g))
            .with_context(|| format!("cannot write {}", p.display()))?,
        None => write!(out, "{}", to_dot(&g))?,
    }
    Ok(EXIT_OK)
}
