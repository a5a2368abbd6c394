//! orthokit: load orthoset, map, Hermitian, and category-instance fixtures,
//! run the verification machinery, and report as text or JSON.
//!
//! Exit codes: 0 all checks passed, 1 a check failed (with witness),
//! 2 usage or input error.

mod report;

use clap::{Parser, Subcommand};
use ortho_core::{DaceyCriterion, FiniteOrthoset};
use report::{Report, Status};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "orthokit", version, about = "verification toolkit for orthosets, adjointable maps, and dagger categories")]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest orthoset carrier accepted (overridden by ORTHOKIT_MAX_N).
    #[arg(long, default_value_t = 24, global = true)]
    max_n: usize,
    /// Cap on materialized closed-set families and lattices.
    #[arg(long, default_value_t = 4096, global = true)]
    max_lattice: usize,
    /// Largest carrier for brute-force cross-checks of adjoint synthesis.
    #[arg(long, default_value_t = 4, global = true)]
    bruteforce_max: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basic statistics of an orthoset: size, rank, separation flags.
    Inspect { file: PathBuf },
    /// Materialize the closed-set ortholattice and its property flags.
    Lattice { file: PathBuf },
    /// Evaluate the Dacey criteria.
    Dacey {
        file: PathBuf,
        /// One of a, b, c, d, e, all.
        #[arg(long, default_value = "all")]
        criterion: String,
    },
    /// Compute the irredundant quotient.
    Quotient { file: PathBuf },
    /// Synthesize the adjoint of a map, or report the minimal witness.
    Adjoint { file: PathBuf },
    /// Classify a map through its synthesized adjoint.
    Classify { file: PathBuf },
    /// Exact Hermitian-space operations.
    Hermitian {
        #[command(subcommand)]
        op: HermitianOp,
    },
    /// Checks over a finite dagger-category instance.
    Category {
        #[command(subcommand)]
        op: CategoryOp,
    },
    /// Run the full acceptance battery.
    Suite,
}

#[derive(Subcommand)]
enum HermitianOp {
    /// The linear adjoint of a map file.
    Adjoint { file: PathBuf },
    /// Unitary/isometry/projection classification of a map file.
    Classify { file: PathBuf },
    /// Orthocomplement of a spanned subspace.
    Complement { file: PathBuf },
    /// Sample a finite orthoset from a list of lines.
    Sample { file: PathBuf },
}

#[derive(Subcommand)]
enum CategoryOp {
    /// Verify laws, the zero object, and declared biproduct witnesses.
    Check {
        file: PathBuf,
        /// Also evaluate hypotheses H1-H5 and H3'.
        #[arg(long)]
        hypotheses: bool,
        /// Also run the derived-lemma suite (orthoset instances).
        #[arg(long)]
        lemmas: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let max_n = std::env::var("ORTHOKIT_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(cli.max_n);
    let started = std::time::Instant::now();
    let result = dispatch(&cli, max_n);
    match result {
        Ok(mut report) => {
            report.timing_ms = started.elapsed().as_millis() as u64;
            report.render(cli.json);
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_orthoset(path: &PathBuf, max_n: usize) -> Result<FiniteOrthoset, String> {
    let x = ortho_core::format::parse_orthoset(&read_file(path)?).map_err(|e| e.to_string())?;
    if x.n() > max_n {
        return Err(format!(
            "orthoset has {} elements, over the --max-n bound of {max_n}",
            x.n()
        ));
    }
    Ok(x)
}

fn dispatch(cli: &Cli, max_n: usize) -> Result<Report, String> {
    match &cli.command {
        Command::Inspect { file } => {
            let x = load_orthoset(file, max_n)?;
            let rank = ortho_core::rank(&x, cli.max_lattice);
            let mut r = Report::new("inspect");
            r.value("n", x.n().to_string());
            r.value("rank", rank.value.to_string());
            r.value(
                "rank_method",
                match rank.method {
                    ortho_core::RankMethod::GreedyPerpSet => "greedy maximal ⊥-set".to_string(),
                    ortho_core::RankMethod::ExactClique => "exact clique search".to_string(),
                },
            );
            r.value("zero_orthoset", (x.n() == 1).to_string());
            r.value("unital", x.is_unital().to_string());
            r.value("singleton", x.is_singleton().to_string());
            r.value("irredundant", x.is_irredundant().to_string());
            r.value("atomistic", x.is_atomistic().to_string());
            Ok(r)
        }
        Command::Lattice { file } => {
            let x = load_orthoset(file, max_n)?;
            let lat = ortho_lattice::build_lattice(&x, cli.max_lattice).map_err(|e| e.to_string())?;
            let lr = ortho_lattice::lattice_report(&lat);
            let mut r = Report::new("lattice");
            r.value("size", lr.size.to_string());
            r.value("orthomodular", lr.orthomodular.to_string());
            r.value("atoms", lr.atoms.len().to_string());
            r.value("covering_property", lr.covering_property.to_string());
            r.value("atomistic", lr.atomistic.to_string());
            r.value("ac", lr.ac.to_string());
            r.value("length", lr.length.to_string());
            r.value("irreducible", lr.irreducible.to_string());
            r.payload = Some(serde_json::to_value(&lr).map_err(|e| e.to_string())?);
            Ok(r)
        }
        Command::Dacey { file, criterion } => {
            let x = load_orthoset(file, max_n)?;
            let c = DaceyCriterion::parse(criterion)
                .ok_or_else(|| format!("unknown criterion {criterion:?}; use a, b, c, d, e, or all"))?;
            let dr = ortho_core::dacey_check(&x, c, cli.max_lattice).map_err(|e| e.to_string())?;
            let mut r = Report::new("dacey");
            let letters: Vec<String> = dr.outcomes.iter().map(|(c, _)| c.to_string()).collect();
            r.value("criteria", letters.join(","));
            r.check(
                format!("dacey ({} agree)", letters.join(",")),
                if dr.is_dacey { Status::Pass } else { Status::Fail },
                dr.witness.clone(),
            );
            if !dr.agree {
                r.check(
                    "criteria agreement (internal consistency)",
                    Status::Fail,
                    Some(format!("{:?}", dr.outcomes)),
                );
            }
            Ok(r)
        }
        Command::Quotient { file } => {
            let x = load_orthoset(file, max_n)?;
            let q = ortho_core::irredundant_quotient(&x);
            let mut r = Report::new("quotient");
            r.value("classes", q.quotient.n().to_string());
            r.value("class_map", format!("{:?}", q.class_of));
            r.value(
                "edges",
                serde_json::to_string(&q.quotient.proper_edges()).map_err(|e| e.to_string())?,
            );
            r.payload = Some(serde_json::to_value(ortho_core::format::OrthosetFile::from(&q.quotient)).map_err(|e| e.to_string())?);
            Ok(r)
        }
        Command::Adjoint { file } => {
            let f = ortho_maps::format::parse_map(&read_file(file)?).map_err(|e| e.to_string())?;
            if f.dom().n() > max_n || f.cod().n() > max_n {
                return Err(format!("map carrier over the --max-n bound of {max_n}"));
            }
            let mut r = Report::new("adjoint");
            match ortho_maps::synthesize_adjoint(&f) {
                Ok(pair) => {
                    r.check("adjointable", Status::Pass, None);
                    r.value("adjoint_table", format!("{:?}", pair.g().table()));
                    if f.dom().n() <= cli.bruteforce_max && f.cod().n() <= cli.bruteforce_max {
                        let brute = ortho_maps::bruteforce::brute_force_adjoint_exhaustive(&f);
                        let agree = brute
                            .map(|g| g.equivalent_to(pair.g()).unwrap_or(false))
                            .unwrap_or(false);
                        r.check(
                            "brute-force cross-check",
                            if agree { Status::Pass } else { Status::Fail },
                            None,
                        );
                    }
                }
                Err(w) => {
                    r.check("adjointable", Status::Fail, Some(w.to_string()));
                }
            }
            Ok(r)
        }
        Command::Classify { file } => {
            let f = ortho_maps::format::parse_map(&read_file(file)?).map_err(|e| e.to_string())?;
            if f.dom().n() > max_n || f.cod().n() > max_n {
                return Err(format!("map carrier over the --max-n bound of {max_n}"));
            }
            let mut r = Report::new("classify");
            match ortho_maps::synthesize_adjoint(&f) {
                Ok(pair) => {
                    let labels = ortho_maps::classify(&pair);
                    r.value("labels", labels.names().join(", "));
                    let laws = ortho_maps::verify_lattice_adjoint_laws(&pair, cli.max_lattice)
                        .map_err(|e| e.to_string())?;
                    r.check(
                        "lattice adjoint laws",
                        if laws.closure_pushforward_ok && laws.join_preservation_ok {
                            Status::Pass
                        } else {
                            Status::Fail
                        },
                        laws.witness,
                    );
                }
                Err(w) => {
                    r.check("adjointable", Status::Fail, Some(w.to_string()));
                }
            }
            Ok(r)
        }
        Command::Hermitian { op } => run_hermitian(op, cli),
        Command::Category { op } => {
            let CategoryOp::Check {
                file,
                hypotheses,
                lemmas,
            } = op;
            let loaded =
                dagger_harness::format::parse_instance(&read_file(file)?).map_err(|e| e.to_string())?;
            let outcomes = dagger_harness::runner::run_category_check(&loaded, *hypotheses, *lemmas)
                .map_err(|e| e.to_string())?;
            let mut r = Report::new("category check");
            for o in outcomes {
                let status = match o.status.as_str() {
                    "pass" => Status::Pass,
                    "fail" => Status::Fail,
                    "gap" => Status::Gap,
                    _ => Status::NotApplicable,
                };
                r.check(o.name, status, o.detail);
            }
            Ok(r)
        }
        Command::Suite => {
            let mut r = Report::new("suite");
            for report in dagger_harness::acceptance::run_all() {
                r.check(
                    format!("criterion {:02}: {}", report.id, report.name),
                    if report.passed { Status::Pass } else { Status::Fail },
                    Some(report.detail.clone()),
                );
            }
            Ok(r)
        }
    }
}

#[derive(serde::Deserialize)]
struct SubspaceTask {
    space: hermitian::format::SpaceFile,
    vectors: Vec<Vec<String>>,
}

fn run_hermitian(op: &HermitianOp, _cli: &Cli) -> Result<Report, String> {
    use hermitian::format::{parse_map, parse_matrix, render_matrix, AnyMap, AnySpace};
    match op {
        HermitianOp::Adjoint { file } => {
            let mut r = Report::new("hermitian adjoint");
            match parse_map(&read_file(file)?).map_err(|e| e.to_string())? {
                AnyMap::Q(phi) => {
                    r.value("scalars", "Q".into());
                    r.payload = Some(serde_json::json!({"adjoint": render_matrix(phi.adjoint().matrix())}));
                }
                AnyMap::Qi(phi) => {
                    r.value("scalars", "Q(i)".into());
                    r.payload = Some(serde_json::json!({"adjoint": render_matrix(phi.adjoint().matrix())}));
                }
            }
            Ok(r)
        }
        HermitianOp::Classify { file } => {
            let mut r = Report::new("hermitian classify");
            fn labels<K: hermitian::Scalar>(phi: &hermitian::LinearMap<K>) -> Vec<String> {
                let l = hermitian::classify_linear(phi);
                let mut v = Vec::new();
                if l.unitary {
                    v.push("unitary".into());
                }
                if l.isometry {
                    v.push("isometry".into());
                }
                if l.self_adjoint {
                    v.push("self_adjoint".into());
                }
                if let Some(s) = &l.projection_onto {
                    v.push(format!("projection onto a dim-{} subspace", s.dim()));
                }
                if v.is_empty() {
                    v.push("none".into());
                }
                v
            }
            let names = match parse_map(&read_file(file)?).map_err(|e| e.to_string())? {
                AnyMap::Q(phi) => labels(&phi),
                AnyMap::Qi(phi) => labels(&phi),
            };
            r.value("labels", names.join(", "));
            Ok(r)
        }
        HermitianOp::Complement { file } => {
            let task: SubspaceTask =
                serde_json::from_str(&read_file(file)?).map_err(|e| e.to_string())?;
            let mut r = Report::new("hermitian complement");
            match task.space.to_space().map_err(|e| e.to_string())? {
                AnySpace::Q(h) => {
                    let m = parse_matrix::<hermitian::Rational>(&task.vectors)
                        .map_err(|e| e.to_string())?;
                    let s = h
                        .span(&(0..m.rows()).map(|k| m.row(k)).collect::<Vec<_>>())
                        .map_err(|e| e.to_string())?;
                    let c = h.orthocomplement(&s);
                    r.value("dim", c.dim().to_string());
                    r.value("splitting", h.is_splitting(&s).to_string());
                    r.payload =
                        Some(serde_json::json!({"basis": render_matrix(c.basis())}));
                }
                AnySpace::Qi(h) => {
                    let m = parse_matrix::<hermitian::Gaussian>(&task.vectors)
                        .map_err(|e| e.to_string())?;
                    let s = h
                        .span(&(0..m.rows()).map(|k| m.row(k)).collect::<Vec<_>>())
                        .map_err(|e| e.to_string())?;
                    let c = h.orthocomplement(&s);
                    r.value("dim", c.dim().to_string());
                    r.value("splitting", h.is_splitting(&s).to_string());
                    r.payload =
                        Some(serde_json::json!({"basis": render_matrix(c.basis())}));
                }
            }
            Ok(r)
        }
        HermitianOp::Sample { file } => {
            let task: SubspaceTask =
                serde_json::from_str(&read_file(file)?).map_err(|e| e.to_string())?;
            let mut r = Report::new("hermitian sample");
            let sample_result = match task.space.to_space().map_err(|e| e.to_string())? {
                AnySpace::Q(h) => {
                    let m = parse_matrix::<hermitian::Rational>(&task.vectors)
                        .map_err(|e| e.to_string())?;
                    let vectors: Vec<_> = (0..m.rows()).map(|k| m.row(k)).collect();
                    hermitian::orthoset_sample(&h, &vectors)
                        .map(|s| (s.orthoset, s.closure_faithful))
                }
                AnySpace::Qi(h) => {
                    let m = parse_matrix::<hermitian::Gaussian>(&task.vectors)
                        .map_err(|e| e.to_string())?;
                    let vectors: Vec<_> = (0..m.rows()).map(|k| m.row(k)).collect();
                    hermitian::orthoset_sample(&h, &vectors)
                        .map(|s| (s.orthoset, s.closure_faithful))
                }
            };
            let (orthoset, faithful) = sample_result.map_err(|e| e.to_string())?;
            r.value("n", orthoset.n().to_string());
            r.value("closure_faithful", faithful.to_string());
            r.value(
                "rank",
                ortho_core::rank(&orthoset, ortho_core::DEFAULT_FAMILY_CAP)
                    .value
                    .to_string(),
            );
            r.payload = Some(
                serde_json::to_value(ortho_core::format::OrthosetFile::from(&orthoset))
                    .map_err(|e| e.to_string())?,
            );
            Ok(r)
        }
    }
}
