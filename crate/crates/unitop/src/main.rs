use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use unitop::census::{census_csv, census_json, run_census};
use unitop::formats::{
    hasse_dot, lattice_dump, parse_family, parse_space, set_label, summarize, summary_text,
};
use unitop::output::{check_writable, read_input, write_all_atomic};
use unitop::sweep::{check_paper, Fault, SweepOptions};
use unitop::{limits_from_env, AppError};
use unitop_core::census::{search_iso_nonhomeo, SearchRestriction};
use unitop_core::family::{inf_many, sup_many};
use unitop_core::functor::{
    check_continuity_equiv, check_injective_open_equiv, check_onto_equiv, induced_relation,
};
use unitop_core::space::all_maps;
use unitop_core::{InfMode, Limits, UniformLattice};

#[derive(Parser)]
#[command(name = "unitop", version, about = "Lattices of uniform-topology classes over finite spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Lift every search-space guard.
    #[arg(long, global = true)]
    unsafe_limits: bool,
    /// Worker threads for sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Reserved; no command uses randomness.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Predicates, special set families and lattice statistics of a space.
    Analyze {
        space: PathBuf,
        /// Directed families (family JSON) to normalise and combine.
        #[arg(long = "family")]
        families: Vec<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Hasse diagram and lattice dump. DOT goes to stdout without flags.
    Lattice {
        space: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Every map between two spaces with the three equivalence checks.
    Maps {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Topology and directed-family counts with the cardinality checks.
    Census {
        #[arg(long, default_value_t = 3)]
        max_points: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Non-homeomorphic spaces with isomorphic lattices.
    Search {
        #[arg(long, default_value_t = 3)]
        max_points: usize,
        #[arg(long, value_enum, default_value_t = Restrict::All)]
        restrict: Restrict,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run every checker over all spaces up to `--max-points`.
    CheckPaper {
        #[arg(long, default_value_t = 3)]
        max_points: usize,
        /// Report path.
        #[arg(long, alias = "json")]
        out: Option<PathBuf>,
        /// Allow four points.
        #[arg(long)]
        slow: bool,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Restrict {
    All,
    T0,
    Discrete,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    MeetTable,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    let limits = limits_from_env(cli.unsafe_limits)?;
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(AppError::Input("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| AppError::Input(format!("--jobs: {e}")))?;
    }
    let _ = cli.seed;
    match cli.command {
        Command::Analyze {
            space,
            families,
            json,
        } => analyze(&space, &families, json.as_deref(), &limits),
        Command::Lattice { space, dot, json } => lattice(&space, dot, json, &limits),
        Command::Maps {
            source,
            target,
            json,
        } => maps(&source, &target, json.as_deref(), &limits),
        Command::Census {
            max_points,
            json,
            csv,
        } => census(max_points, json, csv, &limits),
        Command::Search {
            max_points,
            restrict,
            json,
        } => search(max_points, restrict, json.as_deref(), &limits),
        Command::CheckPaper {
            max_points,
            out,
            slow,
            inject_fault,
        } => {
            let cap = if cli.unsafe_limits {
                usize::MAX
            } else if slow {
                4
            } else {
                3
            };
            if max_points > cap {
                return Err(AppError::Input(format!(
                    "--max-points {max_points} exceeds {cap}; use --slow for 4 or --unsafe-limits"
                )));
            }
            let fault = inject_fault.map(|FaultArg::MeetTable| Fault::MeetTable);
            check_paper_cmd(max_points, out.as_deref(), fault, limits)
        }
    }
}

fn check_outputs(paths: &[Option<&Path>]) -> Result<(), AppError> {
    paths.iter().flatten().try_for_each(|p| check_writable(p))
}

fn to_json<T: serde::Serialize>(value: &T) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s.into_bytes()
}

fn analyze(
    path: &Path,
    family_paths: &[PathBuf],
    json: Option<&Path>,
    limits: &Limits,
) -> Result<(), AppError> {
    check_outputs(&[json])?;
    let space = parse_space(&read_input(path)?, limits)?;
    let family_texts = family_paths
        .iter()
        .map(|p| read_input(p))
        .collect::<Result<Vec<_>, _>>()?;
    let families = family_texts
        .iter()
        .map(|t| parse_family(t, &space))
        .collect::<Result<Vec<_>, _>>()?;
    let summary = summarize(&space, limits)?;
    let mut text = summary_text(&summary);
    let mut fam_out = Vec::new();
    for (path, fam) in family_paths.iter().zip(&families) {
        let canon = fam.normal_form().canon();
        text.push_str(&format!(
            "family {}: normal form {}, hausdorff {}\n",
            path.display(),
            set_label(&space, canon),
            fam.hausdorff_flag()
        ));
        fam_out.push(serde_json::json!({
            "file": path.display().to_string(),
            "normal_form": space.labels_of(canon),
            "hausdorff": fam.hausdorff_flag(),
        }));
    }
    let mut combined = serde_json::Value::Null;
    if families.len() >= 2 {
        let sup = sup_many(&space, &families)?.normal_form().canon();
        let inf = inf_many(&space, &families, InfMode::Verbatim, limits)?
            .normal_form()
            .canon();
        text.push_str(&format!(
            "supremum {}, infimum {}\n",
            set_label(&space, sup),
            set_label(&space, inf)
        ));
        combined = serde_json::json!({"sup": space.labels_of(sup), "inf": space.labels_of(inf)});
    }
    match json {
        Some(p) => {
            let mut value = serde_json::to_value(&summary).expect("plain data serializes");
            if !fam_out.is_empty() {
                value["families"] = serde_json::Value::Array(fam_out);
                value["combined"] = combined;
            }
            write_all_atomic(&[(p.to_path_buf(), to_json(&value))])
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn lattice(
    path: &Path,
    dot: Option<PathBuf>,
    json: Option<PathBuf>,
    limits: &Limits,
) -> Result<(), AppError> {
    check_outputs(&[dot.as_deref(), json.as_deref()])?;
    let space = parse_space(&read_input(path)?, limits)?;
    let l = UniformLattice::build(&space, limits)?;
    let dot_text = hasse_dot(&l);
    if dot.is_none() && json.is_none() {
        print!("{dot_text}");
        return Ok(());
    }
    let mut files = Vec::new();
    if let Some(p) = dot {
        files.push((p, dot_text.into_bytes()));
    }
    if let Some(p) = json {
        files.push((p, to_json(&lattice_dump(&l)?)));
    }
    write_all_atomic(&files)
}

fn maps(source: &Path, target: &Path, json: Option<&Path>, limits: &Limits) -> Result<(), AppError> {
    check_outputs(&[json])?;
    let x = parse_space(&read_input(source)?, limits)?;
    let y = parse_space(&read_input(target)?, limits)?;
    let (lx, ly) = (
        UniformLattice::build(&x, limits)?,
        UniformLattice::build(&y, limits)?,
    );
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut failed = Vec::new();
    for f in all_maps(&x, &y, limits)? {
        let phi = induced_relation(&f, &lx, &ly)?;
        let reports = [
            check_continuity_equiv(&f, &lx, &ly)?,
            check_injective_open_equiv(&f, &lx, &ly)?,
            check_onto_equiv(&f, &lx, &ly)?,
        ];
        let labels: Vec<&str> = f.table().iter().map(|&q| y.label(q)).collect();
        text.push_str(&format!("map [{}]:", labels.join(" ")));
        let mut checks = Vec::new();
        for r in &reports {
            text.push_str(&format!(
                " {}={}/{}:{}",
                r.proposition.id(),
                r.lhs,
                r.rhs,
                r.verdict.name()
            ));
            if r.verdict == unitop_core::Verdict::Fails {
                failed.push(format!("{} on map {:?}", r.proposition.id(), f.table()));
            }
            checks.push(serde_json::json!({
                "proposition_id": r.proposition.id(),
                "hypothesis_class": r.hypothesis.name(),
                "lhs": r.lhs,
                "rhs": r.rhs,
                "verdict": r.verdict.name(),
            }));
        }
        text.push('\n');
        rows.push(serde_json::json!({
            "table": labels,
            "continuous": f.is_continuous(),
            "induced_relation": phi.pairs(),
            "checks": checks,
        }));
    }
    match json {
        Some(p) => write_all_atomic(&[(p.to_path_buf(), to_json(&rows))])?,
        None => print!("{text}"),
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(AppError::Assertion(failed.join("; ")))
    }
}

fn census(
    max_points: usize,
    json: Option<PathBuf>,
    csv: Option<PathBuf>,
    limits: &Limits,
) -> Result<(), AppError> {
    check_outputs(&[json.as_deref(), csv.as_deref()])?;
    let start = Instant::now();
    let report = run_census(max_points, limits)?;
    eprintln!("census: {:.3} s", start.elapsed().as_secs_f64());
    let mut files = Vec::new();
    if let Some(p) = json.clone() {
        files.push((p, census_json(&report).into_bytes()));
    }
    if let Some(p) = csv.clone() {
        files.push((p, census_csv(&report)?.into_bytes()));
    }
    if files.is_empty() {
        print!("{}", census_csv(&report)?);
    } else {
        write_all_atomic(&files)?;
    }
    let failed = report.failed_checks();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(AppError::Assertion(failed.join("; ")))
    }
}

fn search(
    max_points: usize,
    restrict: Restrict,
    json: Option<&Path>,
    limits: &Limits,
) -> Result<(), AppError> {
    check_outputs(&[json])?;
    let restriction = match restrict {
        Restrict::All => SearchRestriction::All,
        Restrict::T0 => SearchRestriction::T0,
        Restrict::Discrete => SearchRestriction::Discrete,
    };
    let findings = search_iso_nonhomeo(max_points, restriction, limits)?;
    let out: Vec<unitop::sweep::FindingOut> = findings
        .iter()
        .map(|f| unitop::sweep::FindingOut {
            left: (&f.left).into(),
            right: (&f.right).into(),
            left_flags: f.left_flags.into(),
            right_flags: f.right_flags.into(),
            lattice_size: f.lattice_size,
            non_t0: !f.left_flags.t0 || !f.right_flags.t0,
            caveat: "surrogate lattices only; a witness involves a non-Tychonoff space",
        })
        .collect();
    match json {
        Some(p) => write_all_atomic(&[(p.to_path_buf(), to_json(&out))])?,
        None => {
            for f in &findings {
                let opens = |s: &unitop_core::FiniteSpace| {
                    s.opens()
                        .iter()
                        .map(|&m| set_label(s, m))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                println!(
                    "{}-point [{}] ~ {}-point [{}]: lattice size {}, T0 {}/{}, non-Tychonoff",
                    f.left.n(),
                    opens(&f.left),
                    f.right.n(),
                    opens(&f.right),
                    f.lattice_size,
                    f.left_flags.t0,
                    f.right_flags.t0
                );
            }
            println!("{} findings", findings.len());
        }
    }
    Ok(())
}

fn check_paper_cmd(
    max_points: usize,
    out: Option<&Path>,
    fault: Option<Fault>,
    limits: Limits,
) -> Result<(), AppError> {
    check_outputs(&[out])?;
    let start = Instant::now();
    let report = check_paper(&SweepOptions {
        max_points,
        limits,
        fault,
    })?;
    eprintln!("check-paper: {:.3} s", start.elapsed().as_secs_f64());
    for p in &report.propositions {
        println!(
            "{:<36} {:<17} instances={} holds={} fails={} recorded={} (disagree {})",
            p.id, p.hypothesis_class, p.instances, p.holds, p.fails, p.recorded, p.recorded_disagree
        );
    }
    if let Some(p) = out {
        write_all_atomic(&[(p.to_path_buf(), report.to_json().into_bytes())])?;
    }
    let failing = report.failing_propositions();
    if failing.is_empty() {
        println!("all gated assertions hold");
        Ok(())
    } else {
        Err(AppError::Assertion(
            failing
                .iter()
                .map(|p| format!("{} ({} failing instances)", p.id, p.fails))
                .collect::<Vec<_>>()
                .join(", "),
        ))
    }
}
