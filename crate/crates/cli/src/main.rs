//! Command-line driver: validate structure files, run the constructions,
//! and run the verification suites.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 input error, 3 bound
//! exceeded.

use clap::{Parser, Subcommand};
use serde::Deserialize;
use starcat::bounds::Budget;
use starcat::corpus::NamedCategory;
use starcat::equivariant::FinGroup;
use starcat::fincat::{as_groupoid, Functor};
use starcat::report::Report;
use starcat::{json, suites};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "starcat", version, about = "Workbench for finite marked *-categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a JSON file (category, linear category, simplicial set, or
    /// coarse space) against its flavor's invariants.
    Check {
        file: PathBuf,
    },
    /// Build a construction and write it to a file.
    Construct {
        /// One of: sharp, funu, cylinder, path, fixed-points, orbit, vplus,
        /// linearize.
        kind: String,
        /// Category input (marked *-category JSON).
        #[arg(long)]
        category: Option<PathBuf>,
        /// Groupoid input (a category JSON whose base is a groupoid).
        #[arg(long)]
        groupoid: Option<PathBuf>,
        /// Morphism input ({"dom": .., "cod": .., "obj": [..], "mor": [..]}).
        #[arg(long)]
        morphism: Option<PathBuf>,
        /// Group action input.
        #[arg(long)]
        action: Option<PathBuf>,
        /// Coarse space input.
        #[arg(long)]
        space: Option<PathBuf>,
        /// Use the cyclic group of this order where a group is needed.
        #[arg(long)]
        cyclic: Option<usize>,
        /// Carrier-size bound for vplus.
        #[arg(long, default_value_t = 2)]
        max_carrier: usize,
        /// Linearize the input first (orbit: produces the ⊗ flavor).
        #[arg(long)]
        linear: bool,
        #[arg(short, long)]
        out: PathBuf,
        /// Output format: json or dot.
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run the verification suites over the built-in corpus or a directory
    /// of structure files.
    VerifySuite {
        /// Directory of JSON files replacing the built-in corpus.
        #[arg(long)]
        corpus_dir: Option<PathBuf>,
        /// all, representability, equivalence, exponential-law,
        /// factorization, model, fixed-point, orbit, controlled, pi.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_objects: usize,
        #[arg(long, default_value_t = 16)]
        max_morphisms: usize,
        #[arg(long, default_value_t = 6)]
        word_length: usize,
        /// Cap on candidate steps in any enumeration.
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
        /// Seed for sampled checks (reports are deterministic under a fixed
        /// seed).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the summary JSON here (byte-identical across runs).
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            eprintln!("input error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Bound(msg)) => {
            eprintln!("bound exceeded: {msg}");
            ExitCode::from(3)
        }
    }
}

enum CliError {
    Input(String),
    Bound(String),
}

impl From<starcat::bounds::BoundExceeded> for CliError {
    fn from(e: starcat::bounds::BoundExceeded) -> Self {
        CliError::Bound(e.to_string())
    }
}

fn read_json(path: &Path) -> Result<serde_json::Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Check { file } => cmd_check(&file),
        Command::Construct {
            kind,
            category,
            groupoid,
            morphism,
            action,
            space,
            cyclic,
            max_carrier,
            linear,
            out,
            format,
        } => cmd_construct(
            &kind,
            category.as_deref(),
            groupoid.as_deref(),
            morphism.as_deref(),
            action.as_deref(),
            space.as_deref(),
            cyclic,
            max_carrier,
            linear,
            &out,
            &format,
        ),
        Command::VerifySuite {
            corpus_dir,
            suite,
            max_objects,
            max_morphisms,
            bound,
            seed,
            json_out,
            ..
        } => cmd_verify_suite(
            corpus_dir.as_deref(),
            &suite,
            max_objects,
            max_morphisms,
            bound,
            seed,
            json_out.as_deref(),
        ),
    }
}

fn cmd_check(file: &Path) -> Result<ExitCode, CliError> {
    let value = read_json(file)?;
    let outcome: Result<String, String> = if value.get("points").is_some() {
        let j: json::SpaceJson =
            serde_json::from_value(value).map_err(|e| CliError::Input(e.to_string()))?;
        match json::g_space_from_json(&j) {
            Ok(Some(_)) => Ok("valid G-bornological coarse space".into()),
            Ok(None) => json::space_from_json(&j)
                .map(|_| "valid bornological coarse space".into())
                .map_err(|e| e.to_string()),
            Err(e) => Err(e.to_string()),
        }
    } else if value.get("s0").is_some() {
        let j: json::SimplicialJson =
            serde_json::from_value(value).map_err(|e| CliError::Input(e.to_string()))?;
        json::simplicial_from_json(&j)
            .map(|_| "valid simplicial set".into())
            .map_err(|e| e.to_string())
    } else if value.get("scalars").is_some() {
        let j: json::LinearCategoryJson =
            serde_json::from_value(value).map_err(|e| CliError::Input(e.to_string()))?;
        json::linear_from_json(&j)
            .map(|_| "valid linear *-category".into())
            .map_err(|e| e.to_string())
    } else {
        let j: json::CategoryJson =
            serde_json::from_value(value).map_err(|e| CliError::Input(e.to_string()))?;
        if j.star.is_some() {
            json::marked_star_from_json(&j)
                .map(|_| "valid marked *-category".into())
                .map_err(|e| e.to_string())
        } else {
            json::category_from_json(&j)
                .map(|_| "valid category".into())
                .map_err(|e| e.to_string())
        }
    };
    match outcome {
        Ok(msg) => {
            println!("{}: {msg}", file.display());
            Ok(ExitCode::SUCCESS)
        }
        Err(witness) => {
            eprintln!("{}: invalid — {witness}", file.display());
            Ok(ExitCode::from(1))
        }
    }
}

#[derive(Deserialize)]
struct MorphismFile {
    dom: json::CategoryJson,
    cod: json::CategoryJson,
    obj: Vec<usize>,
    mor: Vec<usize>,
}

fn load_category(
    path: Option<&Path>,
    what: &str,
) -> Result<starcat::star::MarkedStarCategory, CliError> {
    let path = path.ok_or_else(|| CliError::Input(format!("--{what} is required")))?;
    let value = read_json(path)?;
    let j: json::CategoryJson =
        serde_json::from_value(value).map_err(|e| CliError::Input(e.to_string()))?;
    json::marked_star_from_json(&j).map_err(|e| CliError::Input(e.to_string()))
}

fn load_groupoid(path: Option<&Path>) -> Result<starcat::fincat::FinGroupoid, CliError> {
    let path = path.ok_or_else(|| CliError::Input("--groupoid is required".into()))?;
    let value = read_json(path)?;
    let j: json::CategoryJson =
        serde_json::from_value(value).map_err(|e| CliError::Input(e.to_string()))?;
    let cat = json::category_from_json(&j).map_err(|e| CliError::Input(e.to_string()))?;
    as_groupoid(&cat).map_err(|e| CliError::Input(e.to_string()))
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    kind: &str,
    category: Option<&Path>,
    groupoid: Option<&Path>,
    morphism: Option<&Path>,
    action: Option<&Path>,
    space: Option<&Path>,
    cyclic: Option<usize>,
    max_carrier: usize,
    linear: bool,
    out: &Path,
    format: &str,
) -> Result<ExitCode, CliError> {
    let budget = Budget::default();
    let write_marked = |cat: &starcat::star::MarkedStarCategory| -> Result<(), CliError> {
        let text = if format == "dot" {
            json::to_dot(cat.base(), "construction")
        } else {
            serde_json::to_string_pretty(&json::marked_star_to_json(cat))
                .map_err(|e| CliError::Input(e.to_string()))?
        };
        std::fs::write(out, text).map_err(|e| CliError::Input(e.to_string()))
    };
    let write_linear = |cat: &starcat::star::LinearStarCategory| -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(&json::linear_to_json(cat))
            .map_err(|e| CliError::Input(e.to_string()))?;
        std::fs::write(out, text).map_err(|e| CliError::Input(e.to_string()))
    };
    let group = || -> Result<FinGroup, CliError> {
        Ok(FinGroup::cyclic(
            cyclic.ok_or_else(|| CliError::Input("--cyclic is required".into()))?,
        ))
    };
    match kind {
        "sharp" => {
            let a = load_category(category, "category")?;
            let g = load_groupoid(groupoid)?;
            write_marked(&starcat::gtensor::sharp_times(&a, &g).cat)?;
        }
        "funu" => {
            let a = load_category(category, "category")?;
            let g = load_groupoid(groupoid)?;
            let fu = starcat::gtensor::funu(&g, &a, true, &budget)?;
            write_marked(&fu.cat)?;
        }
        "cylinder" | "path" => {
            let path_file =
                morphism.ok_or_else(|| CliError::Input("--morphism is required".into()))?;
            let value = read_json(path_file)?;
            let mf: MorphismFile =
                serde_json::from_value(value).map_err(|e| CliError::Input(e.to_string()))?;
            let dom =
                json::marked_star_from_json(&mf.dom).map_err(|e| CliError::Input(e.to_string()))?;
            let cod =
                json::marked_star_from_json(&mf.cod).map_err(|e| CliError::Input(e.to_string()))?;
            let f = Functor { obj: mf.obj, mor: mf.mor };
            starcat::star::star_functor_ok(&dom, &cod, &f, true)
                .map_err(|e| CliError::Input(e.to_string()))?;
            if kind == "cylinder" {
                let cyl = starcat::model::cylinder_factorize(&dom, &cod, &f);
                write_marked(&cyl.fact.mid)?;
            } else {
                let p = starcat::model::path_factorize(&dom, &cod, &f, true, &budget)?;
                write_marked(&p.fact.mid)?;
            }
        }
        "fixed-points" => {
            let a = load_category(category, "category")?;
            let action_path =
                action.ok_or_else(|| CliError::Input("--action is required".into()))?;
            let value = read_json(action_path)?;
            let aj: json::ActionJson =
                serde_json::from_value(value).map_err(|e| CliError::Input(e.to_string()))?;
            let ga = json::action_from_json(&aj, &a).map_err(|e| CliError::Input(e.to_string()))?;
            let fp = starcat::equivariant::fixed_points(&ga, true);
            write_marked(&fp.cat)?;
        }
        "orbit" => {
            let a = load_category(category, "category")?;
            let g = group()?;
            if linear {
                let lin = starcat::star::linearize(&a);
                let t = starcat::equivariant::orbit_linear(&lin.cat, &g);
                write_linear(&t.cat)?;
            } else {
                write_marked(&starcat::equivariant::orbit(&a, &g).cat)?;
            }
        }
        "vplus" => {
            let space_path = space.ok_or_else(|| CliError::Input("--space is required".into()))?;
            let value = read_json(space_path)?;
            let sj: json::SpaceJson =
                serde_json::from_value(value).map_err(|e| CliError::Input(e.to_string()))?;
            let s = json::space_from_json(&sj).map_err(|e| CliError::Input(e.to_string()))?;
            let v = starcat::controlled::build_vplus(&s, max_carrier)?;
            write_marked(&v.cat)?;
        }
        "linearize" => {
            let a = load_category(category, "category")?;
            write_linear(&starcat::star::linearize(&a).cat)?;
        }
        other => return Err(CliError::Input(format!("unknown construction kind {other:?}"))),
    }
    println!("wrote {}", out.display());
    Ok(ExitCode::SUCCESS)
}

/// Corpus data loaded from a directory: categories, groupoids derived from
/// them, and coarse spaces.
struct LoadedCorpus {
    cats: Vec<NamedCategory>,
    groupoids: Vec<(String, starcat::fincat::FinGroupoid)>,
    spaces: Vec<(String, starcat::controlled::GCoarseSpace)>,
}

fn load_corpus(dir: &Path) -> Result<LoadedCorpus, CliError> {
    let mut cats = Vec::new();
    let mut groupoids = Vec::new();
    let mut spaces = Vec::new();
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    entries.sort();
    for path in entries {
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let value = read_json(&path)?;
        if value.get("points").is_some() {
            let j: json::SpaceJson =
                serde_json::from_value(value).map_err(|e| CliError::Input(e.to_string()))?;
            match json::g_space_from_json(&j).map_err(|e| CliError::Input(e.to_string()))? {
                Some(gx) => spaces.push((name, gx)),
                None => {
                    let s =
                        json::space_from_json(&j).map_err(|e| CliError::Input(e.to_string()))?;
                    let gx = starcat::controlled::GCoarseSpace::validate(
                        s,
                        FinGroup::trivial(),
                        vec![(0..j.points.len()).collect()],
                    )
                    .map_err(|e| CliError::Input(e.to_string()))?;
                    spaces.push((name, gx));
                }
            }
        } else if value.get("s0").is_some() || value.get("scalars").is_some() {
            // Simplicial sets and linear categories are validated by
            // `check`; the directory suites quantify over categories and
            // spaces.
            continue;
        } else {
            let j: json::CategoryJson =
                serde_json::from_value(value).map_err(|e| CliError::Input(e.to_string()))?;
            let cat =
                json::marked_star_from_json(&j).map_err(|e| CliError::Input(e.to_string()))?;
            if let Ok(g) = as_groupoid(cat.base()) {
                groupoids.push((name.clone(), g));
            }
            cats.push(NamedCategory { name, cat });
        }
    }
    Ok(LoadedCorpus { cats, groupoids, spaces })
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify_suite(
    corpus_dir: Option<&Path>,
    suite: &str,
    max_objects: usize,
    max_morphisms: usize,
    bound: u64,
    seed: u64,
    json_out: Option<&Path>,
) -> Result<ExitCode, CliError> {
    let budget = Budget::new(bound);
    let _ = seed; // all built-in checks are exhaustive; the seed is reserved
                  // for sampled checks.
    let reports: Vec<Report> = match corpus_dir {
        None => match suite {
            "all" => suites::all_suites(&budget),
            "representability" => {
                vec![suites::representability_suite(&starcat::corpus::categories(), &budget)]
            }
            "equivalence" => vec![suites::equivalence_suite(
                &starcat::corpus::categories(),
                &starcat::corpus::morphisms(),
                &budget,
            )],
            "exponential-law" => vec![suites::exponential_suite(
                suites::builtin_triples_times(),
                suites::builtin_triples_tensor(),
                &budget,
            )],
            "factorization" => vec![suites::factorization_suite(
                &starcat::corpus::categories(),
                &starcat::corpus::morphisms(),
                &budget,
            )],
            "model" => vec![suites::model_suite(
                &starcat::corpus::categories(),
                &starcat::corpus::morphisms(),
                &starcat::corpus::retract_diagrams(6),
                &budget,
            )],
            "fixed-point" => vec![suites::fixed_point_suite(
                &starcat::corpus::actions(),
                &starcat::corpus::linear_actions(),
                &budget,
            )],
            "orbit" => vec![suites::orbit_suite(
                &[FinGroup::cyclic(2), FinGroup::cyclic(3)],
                &suites::builtin_groupoids(),
                true,
                &budget,
            )],
            "controlled" => vec![suites::controlled_suite(&suites::builtin_spaces(), &budget)],
            "pi" => vec![suites::pi_suite(&suites::builtin_groupoids(), &budget)],
            other => return Err(CliError::Input(format!("unknown suite {other:?}"))),
        },
        Some(dir) => {
            let mut corpus = load_corpus(dir)?;
            corpus.cats.retain(|c| {
                c.cat.base().ob_count() <= max_objects
                    && c.cat.base().mor_count() <= max_morphisms
            });
            let morphisms = starcat::corpus::morphisms_over(&corpus.cats, 2, &budget);
            let actions: Vec<starcat::corpus::CorpusAction> = corpus
                .cats
                .iter()
                .filter(|c| c.cat.base().ob_count() <= 3)
                .map(|c| starcat::corpus::CorpusAction {
                    name: "z2_trivial",
                    action: starcat::equivariant::GAction::trivial(
                        FinGroup::cyclic(2),
                        c.cat.clone(),
                    ),
                    marked: true,
                })
                .collect();
            let triples: Vec<_> = corpus
                .cats
                .iter()
                .filter(|c| c.cat.base().ob_count() <= 2)
                .map(|c| {
                    (
                        format!("pt_i_{}", c.name),
                        starcat::star::MarkedStarCategory::point(),
                        starcat::fincat::FinGroupoid::indiscrete(2),
                        c.cat.clone(),
                    )
                })
                .collect();
            let run = |name: &str| -> Report {
                match name {
                    "representability" => suites::representability_suite(&corpus.cats, &budget),
                    "equivalence" => suites::equivalence_suite(&corpus.cats, &morphisms, &budget),
                    "exponential-law" => {
                        suites::exponential_suite(triples.clone(), vec![], &budget)
                    }
                    "factorization" => {
                        suites::factorization_suite(&corpus.cats, &morphisms, &budget)
                    }
                    "model" => suites::model_suite(
                        &corpus.cats,
                        &morphisms,
                        &starcat::corpus::retract_diagrams_over(&corpus.cats, &morphisms, 6),
                        &budget,
                    ),
                    "fixed-point" => suites::fixed_point_suite(&actions, &[], &budget),
                    "orbit" => suites::orbit_suite(
                        &[FinGroup::cyclic(2)],
                        &corpus.groupoids,
                        false,
                        &budget,
                    ),
                    "controlled" => suites::controlled_suite(&corpus.spaces, &budget),
                    "pi" => suites::pi_suite(&corpus.groupoids, &budget),
                    _ => Report::new(name.to_string()),
                }
            };
            let names = [
                "representability",
                "equivalence",
                "exponential-law",
                "factorization",
                "model",
                "fixed-point",
                "orbit",
                "controlled",
                "pi",
            ];
            if suite == "all" {
                names.iter().map(|n| run(n)).collect()
            } else if names.contains(&suite) {
                vec![run(suite)]
            } else {
                return Err(CliError::Input(format!("unknown suite {suite:?}")));
            }
        }
    };
    let mut all_pass = true;
    let mut bound_hit = false;
    for r in &reports {
        print!("{}", r.table());
        all_pass &= r.passed();
        bound_hit |= r
            .checks
            .iter()
            .any(|c| c.witness.as_deref().is_some_and(|w| w.contains("search bound exceeded")));
    }
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    println!("total: {total} checks");
    if let Some(path) = json_out {
        let text =
            serde_json::to_string_pretty(&reports).map_err(|e| CliError::Input(e.to_string()))?;
        std::fs::write(path, text).map_err(|e| CliError::Input(e.to_string()))?;
    }
    Ok(if bound_hit {
        ExitCode::from(3)
    } else if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
