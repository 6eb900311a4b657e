//! Batch experiment runner for the idealab workbench.
//!
//! One experiment per invocation: parameters are validated, dispatched to
//! the library, and the outcome is written as a schema-versioned JSON (or
//! CSV) report. Exit codes: 0 success, 1 validation error, 2 budget
//! exceeded.

mod io;
mod report;

use std::path::PathBuf;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use idealab_core::banach::{
    build_representation, bs_gap_audit, c0_hom1_audit, eval_norm, eval_norm_unit,
    schreier_lower_bound_audit, sign_average_report, tall_bound_audit, unconditional_norm,
    unit_coeffs, witness_family,
};
use idealab_core::colorings::{
    conv_color, cover_by_homogeneous, devlin_number, ramsey_extract, ColoringError,
    CoverOutcome, FrontColoring, PairColoring, RationalEnumeration,
};
use idealab_core::hyperlab::{
    chromatic_number, equi_concentration, gillis_bound, mono_cover_search, CardinalInterval,
    CoverVerdict, LabError, MazurAmalgam,
};
use idealab_core::measures::{
    covering_submeasure, kelley_number, kelley_witness, membership_profile, normalize_measures,
    quantize_measures, ProfileKind, RationalMeasure, SupSubmeasure,
};
use idealab_core::posets::{poset_from_coloring, window_duality_check, PosetError};
use idealab_core::rat::{parse_rat, rat_string, rint, to_f64};
use idealab_core::sets::{CompactFamily, FinSet};

use report::Report;

#[derive(Parser)]
#[command(name = "idealab", version, about = "finite-scale ideal and coloring workbench")]
struct Cli {
    /// Seed for every randomized operation (reports are deterministic in it).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Time budget in milliseconds for search operations (0 = unlimited).
    #[arg(long, global = true, default_value_t = 0)]
    budget_ms: u64,
    /// Deterministic work splitting where the operation supports it.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report format.
    #[arg(long, global = true, default_value = "json", value_parser = ["json", "csv"])]
    format: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Submeasure evaluation, ideal profiles and covering numbers.
    #[command(subcommand)]
    Measures(MeasuresCmd),
    /// Uniform fronts: ranks, steps and window enumeration.
    #[command(subcommand)]
    Fronts(FrontsCmd),
    /// Colorings: evaluation, extraction and exhaustive audits.
    #[command(subcommand)]
    Color(ColorCmd),
    /// Comparability posets: width, decompositions, duality.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// The covering-pathology laboratory.
    #[command(subcommand)]
    Lab(LabCmd),
    /// Evaluation norms, representations and sign averages.
    #[command(subcommand)]
    Banach(BanachCmd),
}

#[derive(Subcommand)]
enum MeasuresCmd {
    /// φ(A) for φ the supremum of a measure file.
    Eval {
        #[arg(long)]
        measures: PathBuf,
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 16)]
        window: u32,
    },
    /// Fin/Exh/Sum membership profile of a set.
    Profile {
        #[arg(long)]
        measures: PathBuf,
        #[arg(long)]
        set: String,
        #[arg(long, value_parser = ["fin", "exh", "sum"])]
        kind: String,
        #[arg(long)]
        bound: Option<String>,
        #[arg(long, default_value_t = 16)]
        window: u32,
    },
    /// Interleave capped measures with point masses; optionally quantize.
    Normalize {
        #[arg(long)]
        measures: PathBuf,
        #[arg(long)]
        window: u32,
        #[arg(long, default_value_t = false, action = clap::ArgAction::Set)]
        quantize: bool,
    },
    /// Kelley covering number of a cover, with a measure witness.
    Kelley {
        #[arg(long)]
        ground: String,
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        mu: Option<PathBuf>,
    },
    /// Covering submeasure ψ of a family inside a cardinal interval.
    Psi {
        #[arg(long)]
        ground: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        /// Family file; defaults to the whole interval.
        #[arg(long)]
        family: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FrontsCmd {
    /// Rank of a front expression, in Cantor normal form.
    Rank {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 16)]
        window: u32,
    },
    /// The unique initial segment of a prefix set.
    Step {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 16)]
        window: u32,
    },
    /// All members inside the window.
    Enumerate {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 12)]
        window: u32,
    },
}

#[derive(Args)]
struct NamedColoring {
    /// ed_fin | q | conv
    #[arg(long)]
    name: String,
    #[arg(long, default_value = "canonical", value_parser = ["canonical", "monotone"])]
    theta: String,
    #[arg(long, default_value_t = 16)]
    window: u32,
}

#[derive(Subcommand)]
enum ColorCmd {
    /// Evaluate a named coloring on a pair or triple.
    Eval {
        #[command(flatten)]
        coloring: NamedColoring,
        #[arg(long)]
        set: String,
    },
    /// Greedy homogeneous extraction on a named or random coloring.
    Extract {
        #[arg(long, default_value_t = 64)]
        window: u32,
        /// ed_fin | q | random
        #[arg(long, default_value = "random")]
        name: String,
        #[arg(long, default_value_t = 2)]
        colors: u8,
    },
    /// Exhaustive window audit of the convergence coloring's 0-homogeneous
    /// cardinality bound.
    AuditConv {
        #[arg(long, default_value_t = 14)]
        window: u32,
    },
    /// Partition a set into homogeneous pieces by exhaustive search.
    Cover {
        #[command(flatten)]
        coloring: NamedColoring,
        #[arg(long)]
        set: String,
        #[arg(long)]
        pieces: usize,
    },
    /// Devlin number t_d.
    Devlin {
        #[arg(long)]
        d: u32,
    },
}

#[derive(Subcommand)]
enum PosetCmd {
    /// Width and a minimum chain cover.
    Width(PosetArgs),
    /// Minimum chain cover (Dilworth).
    Dilworth(PosetArgs),
    /// Antichain levels (Mirsky).
    Mirsky(PosetArgs),
    /// Full window duality report.
    Duality(PosetArgs),
}

#[derive(Args)]
struct PosetArgs {
    /// ed_fin | q
    #[arg(long)]
    coloring: String,
    #[arg(long, default_value_t = 1)]
    color: u8,
    #[arg(long, default_value_t = 14)]
    window: u32,
}

#[derive(Subcommand)]
enum LabCmd {
    /// Gillis coefficients and the homogeneity cap.
    Gillis {
        #[arg(long)]
        d: u32,
        /// Symmetric case: α = (1−δ)/2, β = (1+δ)/2.
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
    },
    /// Exact chromatic number of a Mazur block hypergraph.
    Chi {
        /// Ground set [0, 2n).
        #[arg(long)]
        mazur_n: u32,
        #[arg(long, default_value = "1/2")]
        alpha: String,
        #[arg(long, default_value = "1/2")]
        beta: String,
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = 128)]
        cap: usize,
    },
    /// Exhaustive monochromatic-cover search on [n]^{n/p}.
    CoverSearch {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        prune: bool,
    },
    /// Monte-Carlo concentration probe on Equi_δ(n, p).
    Equi {
        /// Comma-separated list of n values for the trend report.
        #[arg(long, default_value = "8,16,24")]
        n_list: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value = "1/2")]
        delta: String,
        #[arg(long, default_value_t = 0.1)]
        eta: f64,
        #[arg(long, default_value_t = 0.25)]
        eps: f64,
        #[arg(long, default_value_t = 2000)]
        trials: u64,
    },
}

#[derive(Subcommand)]
enum BanachCmd {
    /// Evaluation norm over a family file.
    Norm {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        set: String,
        #[arg(long)]
        coeffs: Option<String>,
        #[arg(long, default_value_t = 16)]
        window: u32,
    },
    /// Schreier-closure norm and the #F/2 bound.
    Schreier {
        #[arg(long)]
        set: String,
    },
    /// Cylinder representation of a measure file, certified exhaustively.
    Represent {
        #[arg(long)]
        measures: PathBuf,
        #[arg(long)]
        window: u32,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        normalize: bool,
    },
    /// Seeded block-sequence audits (truncation gap and sup-norm cap).
    AuditBs {
        #[arg(long, default_value_t = 200)]
        instances: usize,
        #[arg(long, default_value_t = 8)]
        len: usize,
    },
    /// Seeded witness-family and tall-bound audits on node models.
    AuditTall {
        #[arg(long, default_value_t = 50)]
        instances: usize,
        #[arg(long, default_value_t = 6)]
        window: u32,
        #[arg(long, default_value_t = 4)]
        len: usize,
    },
    /// Sign-average identities over seeded rational tuples.
    Signs {
        #[arg(long, default_value_t = 100)]
        tuples: usize,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long)]
        q: Option<f64>,
        #[arg(long)]
        c: Option<f64>,
    },
    /// The unconditionalization norm of a seeded instance.
    Unconditional {
        #[arg(long, default_value_t = 6)]
        len: usize,
    },
}

/// Failures carry the process exit code.
enum Failure {
    Validation(anyhow::Error),
    Budget(String),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Validation(e.into())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            // argument problems are validation errors, not budget failures
            eprint!("{e}");
            std::process::exit(1);
        }
        Err(e) => {
            // --help / --version
            print!("{e}");
            std::process::exit(0);
        }
    };
    let start = Instant::now();
    let mut report = Report::new(&command_id(&cli.command));
    report.param("seed", cli.seed);
    if cli.budget_ms > 0 {
        report.param("budget_ms", cli.budget_ms);
    }
    if cli.workers > 1 {
        report.param("workers", cli.workers);
    }
    let outcome = run(&cli, &mut report);
    report.runtime_ms = start.elapsed().as_millis();
    match outcome {
        Ok(()) => {
            if let Err(e) = report.write(cli.out.as_deref(), &cli.format) {
                eprintln!("error: {e:#}");
                std::process::exit(1);
            }
        }
        Err(Failure::Budget(msg)) => {
            report.results(json!({ "error": "budget exceeded", "detail": msg }));
            let _ = report.write(cli.out.as_deref(), &cli.format);
            eprintln!("budget exceeded: {msg}");
            std::process::exit(2);
        }
        Err(Failure::Validation(e)) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn command_id(cmd: &Command) -> String {
    match cmd {
        Command::Measures(c) => format!("measures.{}", measures_id(c)),
        Command::Fronts(c) => format!(
            "fronts.{}",
            match c {
                FrontsCmd::Rank { .. } => "rank",
                FrontsCmd::Step { .. } => "step",
                FrontsCmd::Enumerate { .. } => "enumerate",
            }
        ),
        Command::Color(c) => format!(
            "color.{}",
            match c {
                ColorCmd::Eval { .. } => "eval",
                ColorCmd::Extract { .. } => "extract",
                ColorCmd::AuditConv { .. } => "audit-conv",
                ColorCmd::Cover { .. } => "cover",
                ColorCmd::Devlin { .. } => "devlin",
            }
        ),
        Command::Poset(c) => format!(
            "poset.{}",
            match c {
                PosetCmd::Width(_) => "width",
                PosetCmd::Dilworth(_) => "dilworth",
                PosetCmd::Mirsky(_) => "mirsky",
                PosetCmd::Duality(_) => "duality",
            }
        ),
        Command::Lab(c) => format!(
            "lab.{}",
            match c {
                LabCmd::Gillis { .. } => "gillis",
                LabCmd::Chi { .. } => "chi",
                LabCmd::CoverSearch { .. } => "cover-search",
                LabCmd::Equi { .. } => "equi",
            }
        ),
        Command::Banach(c) => format!(
            "banach.{}",
            match c {
                BanachCmd::Norm { .. } => "norm",
                BanachCmd::Schreier { .. } => "schreier",
                BanachCmd::Represent { .. } => "represent",
                BanachCmd::AuditBs { .. } => "audit-bs",
                BanachCmd::AuditTall { .. } => "audit-tall",
                BanachCmd::Signs { .. } => "signs",
                BanachCmd::Unconditional { .. } => "unconditional",
            }
        ),
    }
}

fn measures_id(c: &MeasuresCmd) -> &'static str {
    match c {
        MeasuresCmd::Eval { .. } => "eval",
        MeasuresCmd::Profile { .. } => "profile",
        MeasuresCmd::Normalize { .. } => "normalize",
        MeasuresCmd::Kelley { .. } => "kelley",
        MeasuresCmd::Psi { .. } => "psi",
    }
}

fn run(cli: &Cli, report: &mut Report) -> Result<(), Failure> {
    match &cli.command {
        Command::Measures(cmd) => run_measures(cmd, report),
        Command::Fronts(cmd) => run_fronts(cmd, report),
        Command::Color(cmd) => run_color(cli, cmd, report),
        Command::Poset(cmd) => run_poset(cmd, report),
        Command::Lab(cmd) => run_lab(cli, cmd, report),
        Command::Banach(cmd) => run_banach(cli, cmd, report),
    }
}

fn run_measures(cmd: &MeasuresCmd, report: &mut Report) -> Result<(), Failure> {
    match cmd {
        MeasuresCmd::Eval { measures, set, window } => {
            let ms = io::load_measures(measures)?;
            let a = io::parse_set(set)?;
            report.param("set", a).param("window", window);
            let phi = SupSubmeasure::new(ms, *window);
            report.results(json!({ "phi": rat_string(&phi.eval(&a)) }));
        }
        MeasuresCmd::Profile { measures, set, kind, bound, window } => {
            let ms = io::load_measures(measures)?;
            let a = io::parse_set(set)?;
            let phi = SupSubmeasure::new(ms, *window);
            let kind_v = match kind.as_str() {
                "fin" => ProfileKind::Fin,
                "exh" => ProfileKind::Exh,
                _ => ProfileKind::Sum,
            };
            let bound_v = bound
                .as_ref()
                .map(|b| parse_rat(b).map_err(anyhow::Error::msg))
                .transpose()?;
            report.param("set", a).param("kind", kind).param("window", window);
            let profile = membership_profile(&phi, &a, kind_v, bound_v);
            report.results(&profile);
        }
        MeasuresCmd::Normalize { measures, window, quantize } => {
            let ms = io::load_measures(measures)?;
            report.param("window", window).param("quantize", quantize);
            let mut out = normalize_measures(&ms, *window);
            if *quantize {
                out = quantize_measures(&out);
            }
            let rendered: Vec<serde_json::Value> =
                out.iter().map(RationalMeasure::to_json).collect();
            report.stat("count", out.len());
            report.results(rendered);
        }
        MeasuresCmd::Kelley { ground, cover, mu } => {
            let x = io::parse_set(ground)?;
            let window = x.max_elem().map_or(1, |m| m + 1);
            let cover = io::load_family(cover, window)?;
            let delta = kelley_number(&x, &cover).map_err(anyhow::Error::from)?;
            report.param("ground", x);
            let witness = match mu {
                Some(path) => {
                    let ms = io::load_measures(path)?;
                    let m = ms
                        .into_iter()
                        .next()
                        .context("measure file must contain at least one measure")?;
                    Some(kelley_witness(&x, &cover, &m).map_err(anyhow::Error::from)?)
                }
                None => None,
            };
            report.results(json!({
                "delta": rat_string(&delta),
                "witness": witness.map(|w| w.to_string()),
            }));
        }
        MeasuresCmd::Psi { ground, alpha, beta, family } => {
            let x = io::parse_set(ground)?;
            let alpha = parse_rat(alpha).map_err(anyhow::Error::msg)?;
            let beta = parse_rat(beta).map_err(anyhow::Error::msg)?;
            let interval = CardinalInterval::new(x, alpha.clone(), beta.clone())
                .map_err(anyhow::Error::from)?;
            let fam = match family {
                Some(path) => io::load_family(path, interval.members.window())?,
                None => interval.members.clone(),
            };
            report
                .param("ground", x)
                .param("alpha", rat_string(&alpha))
                .param("beta", rat_string(&beta));
            let psi =
                covering_submeasure(&x, &interval.members, &fam).map_err(anyhow::Error::from)?;
            report.stat("family_size", fam.len());
            report.results(json!({ "psi": psi }));
        }
    }
    Ok(())
}

fn run_fronts(cmd: &FrontsCmd, report: &mut Report) -> Result<(), Failure> {
    match cmd {
        FrontsCmd::Rank { expr, window } => {
            let front = io::parse_front(expr, *window)?;
            report.param("expr", expr);
            report.results(json!({ "rank": front.rank().to_string() }));
        }
        FrontsCmd::Step { expr, set, window } => {
            let front = io::parse_front(expr, *window)?;
            let m = io::parse_set(set)?;
            report.param("expr", expr).param("set", m);
            let step = front.step(&m).map_err(anyhow::Error::from)?;
            report.results(json!({ "step": step.to_string() }));
        }
        FrontsCmd::Enumerate { expr, window } => {
            let front = io::parse_front(expr, *window)?;
            report.param("expr", expr).param("window", window);
            let members = front.enumerate(&FinSet::window(*window));
            report.stat("count", members.len());
            let rendered: Vec<String> = members.iter().map(FinSet::to_string).collect();
            report.results(json!({ "rank": front.rank().to_string(), "members": rendered }));
        }
    }
    Ok(())
}

fn theta_of(name: &str) -> RationalEnumeration {
    if name == "monotone" {
        RationalEnumeration::Monotone
    } else {
        RationalEnumeration::Canonical
    }
}

fn named_pair_coloring(name: &str, theta: RationalEnumeration, window: u32) -> anyhow::Result<PairColoring> {
    match name {
        "ed_fin" => Ok(PairColoring::ed_fin(window)),
        "q" => Ok(PairColoring::q_coloring(theta, window)),
        other => anyhow::bail!("unknown pair coloring {other:?}; expected ed_fin or q"),
    }
}

fn run_color(cli: &Cli, cmd: &ColorCmd, report: &mut Report) -> Result<(), Failure> {
    match cmd {
        ColorCmd::Eval { coloring, set } => {
            let s = io::parse_set(set)?;
            let theta = theta_of(&coloring.theta);
            report.param("name", &coloring.name).param("set", s);
            let e = s.elems();
            let value = match (coloring.name.as_str(), e.len()) {
                ("conv", 3) => conv_color(theta, e[0], e[1], e[2]),
                ("conv", _) => {
                    return Err(anyhow::anyhow!("conv takes a triple").into());
                }
                (name, 2) => named_pair_coloring(name, theta, coloring.window)?.color(e[0], e[1]),
                (name, n) => {
                    return Err(anyhow::anyhow!("{name} takes a pair, got {n} elements").into());
                }
            };
            report.results(json!({ "color": value }));
        }
        ColorCmd::Extract { window, name, colors } => {
            let coloring = match name.as_str() {
                "random" => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    PairColoring::random(*window, *colors, &mut rng)
                }
                other => named_pair_coloring(other, RationalEnumeration::Canonical, *window)?,
            };
            report.param("window", window).param("name", name);
            let (set, color) =
                ramsey_extract(&coloring, &FinSet::window(*window)).map_err(anyhow::Error::from)?;
            let guarantee = (u32::BITS - 1 - window.leading_zeros()) as f64 / 2.0;
            report.stat("guarantee", guarantee);
            report.results(json!({
                "homogeneous": set.to_string(),
                "color": color,
                "size": set.card(),
            }));
        }
        ColorCmd::AuditConv { window } => {
            report.param("window", window);
            let theta = RationalEnumeration::Canonical;
            let conv = FrontColoring::conv(theta);
            let mut checked = 0u64;
            let mut zero_homogeneous = 0u64;
            for s in FinSet::window(*window).subsets() {
                checked += 1;
                let colors = conv.hom_check(&s);
                if colors.is_empty() || colors == std::collections::BTreeSet::from([0]) {
                    zero_homogeneous += 1;
                    let bound = s.min_elem().map_or(2, |m| m + 2);
                    if s.card() > bound {
                        report.results(json!({
                            "pass": false,
                            "witness": s.to_string(),
                        }));
                        return Ok(());
                    }
                }
            }
            report.stat("subsets_checked", checked);
            report.stat("zero_homogeneous", zero_homogeneous);
            report.results(json!({ "pass": true, "bound": "#s <= min s + 2" }));
        }
        ColorCmd::Cover { coloring, set, pieces } => {
            let s = io::parse_set(set)?;
            let theta = theta_of(&coloring.theta);
            report.param("name", &coloring.name).param("set", s).param("pieces", pieces);
            let front = match coloring.name.as_str() {
                "conv" => FrontColoring::conv(theta),
                name => FrontColoring::from_pair(named_pair_coloring(
                    name,
                    theta,
                    coloring.window,
                )?),
            };
            match cover_by_homogeneous(&front, &s, *pieces, 10_000_000) {
                Ok(CoverOutcome::Partition(parts)) => {
                    report.results(json!({
                        "partition": parts.iter().map(FinSet::to_string).collect::<Vec<_>>(),
                    }));
                }
                Ok(CoverOutcome::Impossible) => {
                    report.results(json!({ "partition": serde_json::Value::Null, "impossible": true }));
                }
                Err(ColoringError::BudgetExceeded(n)) => {
                    return Err(Failure::Budget(format!("homogeneous cover search, {n} nodes")));
                }
                Err(e) => return Err(anyhow::Error::from(e).into()),
            }
        }
        ColorCmd::Devlin { d } => {
            report.param("d", d);
            let t = devlin_number(*d).map_err(anyhow::Error::from)?;
            report.results(json!({ "t_d": t }));
        }
    }
    Ok(())
}

fn run_poset(cmd: &PosetCmd, report: &mut Report) -> Result<(), Failure> {
    let (args, which) = match cmd {
        PosetCmd::Width(a) => (a, "width"),
        PosetCmd::Dilworth(a) => (a, "dilworth"),
        PosetCmd::Mirsky(a) => (a, "mirsky"),
        PosetCmd::Duality(a) => (a, "duality"),
    };
    let coloring =
        named_pair_coloring(&args.coloring, RationalEnumeration::Canonical, args.window)?;
    let window = FinSet::window(args.window);
    report
        .param("coloring", &args.coloring)
        .param("color", args.color)
        .param("window", args.window);
    match which {
        "duality" => {
            let rep = match window_duality_check(&coloring, args.color, &window) {
                Ok(rep) => rep,
                Err(PosetError::BudgetExceeded(n)) => {
                    return Err(Failure::Budget(format!("duality check on {n} points")))
                }
                Err(e) => return Err(anyhow::Error::from(e).into()),
            };
            report.stat("eval_norm", rep.eval_norm);
            report.results(json!({
                "pass": rep.pass,
                "longest_chain": rep.longest_chain,
                "width": rep.width,
                "mirsky_pieces": rep.mirsky_pieces.iter().map(FinSet::to_string).collect::<Vec<_>>(),
                "dilworth_pieces": rep.dilworth_pieces.iter().map(FinSet::to_string).collect::<Vec<_>>(),
            }));
        }
        _ => {
            let poset = poset_from_coloring(&coloring, args.color, &window)
                .map_err(anyhow::Error::from)?;
            let (width, chains) = poset.width_and_dilworth();
            let mirsky = poset.mirsky_cover();
            let results = match which {
                "width" => json!({ "width": width }),
                "dilworth" => json!({ "width": width, "chains": chains }),
                _ => json!({ "longest_chain": mirsky.len(), "antichains": mirsky }),
            };
            report.results(results);
        }
    }
    Ok(())
}

fn run_lab(cli: &Cli, cmd: &LabCmd, report: &mut Report) -> Result<(), Failure> {
    match cmd {
        LabCmd::Gillis { d, delta, alpha, beta } => {
            let (a, b) = match (delta, alpha, beta) {
                (Some(delta), None, None) => {
                    let delta = parse_rat(delta).map_err(anyhow::Error::msg)?;
                    let two = rint(2);
                    ((rint(1) - delta.clone()) / two.clone(), (rint(1) + delta) / two)
                }
                (None, Some(alpha), Some(beta)) => (
                    parse_rat(alpha).map_err(anyhow::Error::msg)?,
                    parse_rat(beta).map_err(anyhow::Error::msg)?,
                ),
                _ => {
                    return Err(anyhow::anyhow!(
                        "pass either --delta or both --alpha and --beta"
                    )
                    .into())
                }
            };
            report
                .param("d", d)
                .param("alpha", rat_string(&a))
                .param("beta", rat_string(&b));
            let bound = gillis_bound(*d, &a, &b).map_err(anyhow::Error::from)?;
            report.results(json!({
                "coefficients": bound.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "m0": bound.m0,
                "k": bound.k,
            }));
        }
        LabCmd::Chi { mazur_n, alpha, beta, d, cap } => {
            let a = parse_rat(alpha).map_err(anyhow::Error::msg)?;
            let b = parse_rat(beta).map_err(anyhow::Error::msg)?;
            let interval = CardinalInterval::new(FinSet::window(2 * mazur_n), a, b)
                .map_err(anyhow::Error::from)?;
            let amalgam = MazurAmalgam::new(vec![interval], *d).map_err(anyhow::Error::from)?;
            let h0 = amalgam.hypergraph_h0().map_err(anyhow::Error::from)?;
            report.param("n", mazur_n).param("d", d);
            report.stat("vertices", h0.vertices);
            report.stat("edges", h0.edges.len());
            match chromatic_number(&h0, *cap) {
                Ok((chi, witness)) => {
                    report.results(json!({ "chi": chi, "witness": witness }));
                }
                Err(LabError::TooManyVertices { got, cap }) => {
                    return Err(Failure::Budget(format!("{got} vertices over the cap {cap}")));
                }
                Err(e) => return Err(anyhow::Error::from(e).into()),
            }
        }
        LabCmd::CoverSearch { n, p, r, prune } => {
            report.param("n", n).param("p", p).param("r", r);
            let rep = mono_cover_search(*n, *p, *r, cli.budget_ms, cli.workers.max(1), *prune)
                .map_err(anyhow::Error::from)?;
            report.stat("colorings_checked", rep.colorings_checked);
            report.stat("colorings_total", rep.colorings_total);
            report.stat("elapsed_ms", rep.elapsed_ms as u64);
            let (verdict, witness) = match &rep.verdict {
                CoverVerdict::Universal => ("UNIVERSAL", None),
                CoverVerdict::Counterexample(c) => ("COUNTEREXAMPLE", Some(c.clone())),
                CoverVerdict::Budget => ("BUDGET", None),
            };
            report.results(json!({
                "verdict": verdict,
                "coloring": witness,
                "sets": rep.sets.iter().map(FinSet::to_string).collect::<Vec<_>>(),
            }));
            if matches!(rep.verdict, CoverVerdict::Budget) {
                return Err(Failure::Budget(format!(
                    "cover search stopped after {} of {} colorings",
                    rep.colorings_checked, rep.colorings_total
                )));
            }
        }
        LabCmd::Equi { n_list, p, delta, eta, eps, trials } => {
            let delta = parse_rat(delta).map_err(anyhow::Error::msg)?;
            let ns: Vec<u32> = n_list
                .split(',')
                .map(|s| s.trim().parse::<u32>().context("bad n"))
                .collect::<anyhow::Result<_>>()?;
            report.param("p", p).param("delta", rat_string(&delta)).param("trials", trials);
            let mut rows = Vec::new();
            for n in &ns {
                let rep = equi_concentration(
                    *n,
                    *p,
                    &delta,
                    *eta,
                    *eps,
                    *trials,
                    cli.seed,
                    cli.workers.max(1),
                )
                .map_err(anyhow::Error::from)?;
                rows.push(json!({
                    "n": n,
                    "space_size": rep.space_size.to_string(),
                    "min_fattening": rep.min_fattening,
                    "estimate": rep.estimate,
                    "trials": rep.trials,
                }));
            }
            report.results(json!({ "trend": rows }));
        }
    }
    Ok(())
}

fn run_banach(cli: &Cli, cmd: &BanachCmd, report: &mut Report) -> Result<(), Failure> {
    match cmd {
        BanachCmd::Norm { family, set, coeffs, window } => {
            let fam = io::load_family(family, *window)?;
            let k = CompactFamily::generated_by(fam.members().iter().copied(), fam.window())
                .map_err(anyhow::Error::from)?;
            let f = io::parse_set(set)?;
            report.param("set", f);
            let value = match coeffs {
                Some(text) => {
                    let a = io::parse_coeffs(text, 0)?;
                    rat_string(&eval_norm(&k, &a, &f))
                }
                None => eval_norm_unit(&k, &f).to_string(),
            };
            report.results(json!({ "norm": value }));
        }
        BanachCmd::Schreier { set } => {
            let f = io::parse_set(set)?;
            report.param("set", f);
            let (norm, bound) = schreier_lower_bound_audit(&f);
            report.results(json!({ "norm": norm, "bound": rat_string(&bound) }));
        }
        BanachCmd::Represent { measures, window, normalize } => {
            let ms = io::load_measures(measures)?;
            report.param("window", window).param("normalize", normalize);
            let prepared = if *normalize {
                quantize_measures(&normalize_measures(&ms, *window))
            } else {
                ms
            };
            let rep = build_representation(&prepared, *window);
            let certified = rep.certify_all();
            report.stat("tree_nodes", rep.nodes.len());
            let rho: Vec<serde_json::Value> = rep
                .nodes
                .iter()
                .map(|n| {
                    json!({
                        "prefix": n.prefix.iter().map(rat_string).collect::<Vec<_>>(),
                        "code": n.code.iter().map(|b| u8::from(*b)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            report.results(json!({
                "certified_all_subsets": certified,
                "embedding": rho,
            }));
        }
        BanachCmd::AuditBs { instances, len } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            report.param("instances", instances).param("len", len);
            let mut gap_violations = 0u64;
            let mut cap_violations = 0u64;
            for _ in 0..*instances {
                let x = idealab_core::gen::bs_homogeneous_instance(&mut rng, *len);
                let h = FinSet::window(*len as u32);
                let a = idealab_core::gen::random_coeffs(&mut rng, *len, 3);
                let (lhs, rhs) = bs_gap_audit(&x, &h, &a).map_err(anyhow::Error::from)?;
                if lhs > rhs {
                    gap_violations += 1;
                }
                let (sup, bound) = c0_hom1_audit(&x, &h).map_err(anyhow::Error::from)?;
                if sup > bound {
                    cap_violations += 1;
                }
            }
            report.results(json!({
                "gap_violations": gap_violations,
                "cap_violations": cap_violations,
                "pass": gap_violations == 0 && cap_violations == 0,
            }));
        }
        BanachCmd::AuditTall { instances, window, len } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            report.param("instances", instances).param("window", window).param("len", len);
            let mut holds = 0u64;
            let mut violations = 0u64;
            let mut skipped = 0u64;
            for _ in 0..*instances {
                let (_, x) = idealab_core::gen::node_model_instance(&mut rng, *window, *len);
                if !x.nonneg() {
                    skipped += 1;
                    continue;
                }
                let (g, _) = witness_family(&x, *len).map_err(anyhow::Error::from)?;
                // largest bs-1-homogeneous prefix of the index set
                let mut r = FinSet::EMPTY;
                for n in 0..*len {
                    let candidate = r.insert(n as u32);
                    if x.is_bs_hom1(&candidate) {
                        r = candidate;
                    }
                }
                let audit = tall_bound_audit(&x, &r, &g).map_err(anyhow::Error::from)?;
                if audit.holds {
                    holds += 1;
                } else {
                    violations += 1;
                }
            }
            report.results(json!({
                "holds": holds,
                "violations": violations,
                "skipped": skipped,
            }));
        }
        BanachCmd::Signs { tuples, n, dim, q, c } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            report.param("tuples", tuples).param("n", n).param("dim", dim);
            let cotype = q.zip(*c);
            let mut cotype_failures = 0u64;
            let mut last = None;
            for _ in 0..*tuples {
                let vectors = idealab_core::gen::random_euclidean_tuple(&mut rng, *n, *dim);
                let rep = sign_average_report(&vectors, cotype).map_err(anyhow::Error::from)?;
                if rep.cotype_ok == Some(false) {
                    cotype_failures += 1;
                }
                last = Some(rep);
            }
            let last = last.context("at least one tuple required")?;
            report.results(json!({
                "identity": "E_theta ||sum theta y||^2 == sum ||y||^2 (exact, asserted)",
                "subset_bound": "E_theta <= 2 E_A (asserted)",
                "cotype_failures": cotype_failures,
                "sample_e_sq": rat_string(&last.e_sq),
                "sample_e_lin": last.e_lin,
                "sample_subset_avg": last.subset_avg,
            }));
        }
        BanachCmd::Unconditional { len } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let x = idealab_core::gen::bs_homogeneous_instance(&mut rng, *len);
            let a = idealab_core::gen::random_coeffs(&mut rng, *len, 3);
            report.param("len", len);
            let norm = match unconditional_norm(&x, &a) {
                Ok(v) => v,
                Err(e) => return Err(Failure::Budget(e.to_string())),
            };
            let ones = unit_coeffs(*len);
            let unit = unconditional_norm(&x, &ones).map_err(|e| Failure::Budget(e.to_string()))?;
            report.results(json!({
                "norm": rat_string(&norm),
                "unit_norm": rat_string(&unit),
                "sup_norm_f64": to_f64(&norm),
            }));
        }
    }
    Ok(())
}
