use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use orlov_core::layers::{global_dimension, layer_step};
use orlov_core::morphism::{coghost_lemma_check, irreducible_coghosts, tm_generator};
use orlov_core::oracle::{verify_algebra, DEFAULT_CAP};
use orlov_core::verify::{Verifier, CRITERIA, DEFAULT_SEED};
use orlov_core::{
    algebra_llts, ar_quiver, injective_dimension, layer_generation_times, orlov_spectrum,
    projective_dimension, radical_layer_length, Algebra, AlgebraDescriptor, Error,
    ExtensionClosure, IndecSet, ModuleSum, SpectrumOptions, TorsionSpec,
};

const SCHEMA: &str = "orlov-kit/1";
/// Largest indecomposable count for an exhaustive `coghost-lemma` sweep without `--force`.
const LEMMA_LIMIT: usize = 15;

#[derive(Parser)]
#[command(
    name = "orlov",
    version,
    about = "Extension closures, generation times and Orlov spectra of Nakayama algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraArg {
    /// Algebra descriptor JSON file.
    #[arg(long, value_name = "FILE")]
    algebra: PathBuf,
}

#[derive(Args)]
struct JobsArg {
    /// Worker threads, 0 for one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Kupisch series and basic invariants.
    Algebra(AlgebraArg),
    /// The indecomposable modules.
    Indec(AlgebraArg),
    /// The levels [T]_k of a generator.
    Closure {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Generator as a module literal, e.g. "1-1+2-1".
        #[arg(long)]
        gen: String,
        /// Report only this level.
        #[arg(long)]
        level: Option<usize>,
    },
    /// Generation time of a generator.
    Gentime {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        gen: String,
    },
    /// Orlov spectrum by exhaustive enumeration of multiplicity-free generators.
    Ospec {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        jobs: JobsArg,
        /// Enumerate even beyond the size limit.
        #[arg(long)]
        force: bool,
    },
    /// Radical layer length for the torsion class given by a set of simples.
    Llts {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Vertices of the simples, comma separated.
        #[arg(long, value_delimiter = ',')]
        simples: Vec<usize>,
        /// Module to measure; the regular module by default.
        #[arg(long)]
        module: Option<String>,
    },
    /// Layer length of the algebra and the generation times it forces.
    Thm2 {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_delimiter = ',')]
        simples: Vec<usize>,
    },
    /// Projective and injective dimension.
    Pd {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        module: String,
    },
    /// Coghosts of the generator T_m.
    Coghost {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        m: usize,
        /// List the irreducible maps that are coghosts.
        #[arg(long)]
        list_irreducible: bool,
    },
    /// Compare chain searches with Sub/Fac levels.
    CoghostLemma {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        /// Check one generator instead of all multiplicity-free ones.
        #[arg(long)]
        gen: Option<String>,
        #[command(flatten)]
        jobs: JobsArg,
        #[arg(long)]
        force: bool,
    },
    /// Auslander-Reiten quiver of A_n.
    Arquiver {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Emit graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Checks against the linear-algebra oracle.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
    /// The acceptance table.
    Paper {
        #[command(subcommand)]
        action: PaperAction,
    },
}

#[derive(Subcommand)]
enum OracleAction {
    Verify {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

#[derive(Subcommand)]
enum PaperAction {
    Verify {
        #[command(flatten)]
        jobs: JobsArg,
        /// Seed for the randomized chains.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run a single criterion.
        #[arg(long)]
        only: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Input(String),
    Refused(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 3,
            Failure::Refused(_) => 4,
            Failure::Verification(_) => 5,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Refused(_) => Failure::Refused(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Input(m) | Failure::Refused(m) => eprintln!("error: {m}"),
                Failure::Verification(out) => println!("{out}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn load(path: &Path) -> Result<Algebra, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let desc: AlgebraDescriptor = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(Algebra::new(desc)?)
}

fn module(alg: &Algebra, literal: &str) -> Result<ModuleSum, Failure> {
    let m: ModuleSum = literal.parse()?;
    alg.check_module(&m)?;
    Ok(m)
}

fn generator(alg: &Algebra, literal: &str) -> Result<IndecSet, Failure> {
    Ok(IndecSet::from_module(alg, &module(alg, literal)?)?)
}

fn emit(mut v: Value) -> String {
    v.as_object_mut()
        .expect("object output")
        .insert("schema".into(), SCHEMA.into());
    v.to_string()
}

fn literal(alg: &Algebra, s: IndecSet) -> String {
    s.to_module(alg).to_string()
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Algebra(a) => {
            let alg = load(&a.algebra)?;
            Ok(emit(json!({
                "descriptor": alg.descriptor(),
                "kupisch": alg.kupisch(),
                "dimension": alg.dimension(),
                "loewy_length": alg.loewy_length(),
                "indecomposables": alg.indecomposable_count(),
                "hereditary": alg.is_hereditary(),
                "spi": format!("{:?}", alg.spi_classify()).to_lowercase(),
                "global_dimension": global_dimension(&alg),
            })))
        }
        Command::Indec(a) => {
            let alg = load(&a.algebra)?;
            let items: Vec<Value> = alg
                .indecomposables()
                .iter()
                .map(|u| {
                    json!({
                        "module": u.to_string(),
                        "top": u.top,
                        "length": u.len,
                        "socle": alg.socle_vertex(u),
                        "projective": alg.is_projective(u),
                        "injective": alg.is_injective(u),
                    })
                })
                .collect();
            Ok(emit(json!({ "indecomposables": items })))
        }
        Command::Closure {
            algebra,
            gen,
            level,
        } => {
            let alg = load(&algebra.algebra)?;
            let c = ExtensionClosure::new(&alg)?;
            let t = generator(&alg, &gen)?;
            match level {
                Some(k) => {
                    let members = c.bracket(t, k);
                    Ok(emit(json!({
                        "generator": literal(&alg, t),
                        "level": k,
                        "members": literal(&alg, members),
                        "count": members.len(),
                        "everything": members == c.all(),
                    })))
                }
                None => {
                    let levels: Vec<String> =
                        c.levels(t).into_iter().map(|l| literal(&alg, l)).collect();
                    Ok(emit(
                        json!({ "generator": literal(&alg, t), "levels": levels }),
                    ))
                }
            }
        }
        Command::Gentime { algebra, gen } => {
            let alg = load(&algebra.algebra)?;
            let c = ExtensionClosure::new(&alg)?;
            let t = generator(&alg, &gen)?;
            Ok(emit(json!({
                "generator": literal(&alg, t),
                "generation_time": c.generation_time(t),
                "strong_generator": c.is_strong_generator(t),
            })))
        }
        Command::Ospec {
            algebra,
            jobs,
            force,
        } => {
            let alg = load(&algebra.algebra)?;
            let s = orlov_spectrum(
                &alg,
                SpectrumOptions {
                    force,
                    jobs: jobs.jobs,
                    prune: true,
                },
            )?;
            let witnesses: BTreeMap<String, String> = s
                .witnesses
                .iter()
                .map(|(t, g)| (t.to_string(), literal(&alg, *g)))
                .collect();
            Ok(emit(json!({
                "spectrum": s.spectrum,
                "ext_dim": s.ext_dim(),
                "u_dim": s.u_dim(),
                "witnesses": witnesses,
                "generators": s.generators,
            })))
        }
        Command::Llts {
            algebra,
            simples,
            module: m,
        } => {
            let alg = load(&algebra.algebra)?;
            let spec = TorsionSpec::new(&alg, simples)?;
            let target = match &m {
                Some(lit) => module(&alg, lit)?,
                None => alg.regular_module(),
            };
            let mut layers = Vec::new();
            let mut cur = target.clone();
            while !cur.is_zero() {
                layers.push(cur.to_string());
                cur = layer_step(&alg, &spec, &cur);
            }
            Ok(emit(json!({
                "simples": spec.simples(),
                "module": target.to_string(),
                "llts": radical_layer_length(&alg, &spec, &target),
                "layers": layers,
            })))
        }
        Command::Thm2 { algebra, simples } => {
            let alg = load(&algebra.algebra)?;
            let spec = TorsionSpec::new(&alg, simples)?;
            let l = algebra_llts(&alg, &spec);
            Ok(emit(
                json!({ "simples": spec.simples(), "llts": l, "spectrum_subset": layer_generation_times(l) }),
            ))
        }
        Command::Pd { algebra, module: m } => {
            let alg = load(&algebra.algebra)?;
            let target = module(&alg, &m)?;
            Ok(emit(json!({
                "module": target.to_string(),
                "projective_dimension": projective_dimension(&alg, &target),
                "injective_dimension": injective_dimension(&alg, &target),
            })))
        }
        Command::Coghost {
            algebra,
            m,
            list_irreducible,
        } => {
            let alg = load(&algebra.algebra)?;
            let t = tm_generator(&alg, m)?;
            let arrows = irreducible_coghosts(&alg, t)?;
            let mut out =
                json!({ "m": m, "generator": literal(&alg, t), "irreducible_count": arrows.len() });
            if list_irreducible {
                out["irreducible"] =
                    json!(arrows.iter().map(ToString::to_string).collect::<Vec<_>>());
            }
            Ok(emit(out))
        }
        Command::CoghostLemma {
            algebra,
            nmax,
            gen,
            jobs,
            force,
        } => {
            let alg = load(&algebra.algebra)?;
            let gens: Vec<IndecSet> = match gen {
                Some(g) => vec![generator(&alg, &g)?],
                None => {
                    let count = alg.indecomposable_count();
                    if count > LEMMA_LIMIT && !force {
                        return Err(Failure::Refused(format!(
                            "{count} indecomposables give 2^{count} generators; pass --force to check them all"
                        )));
                    }
                    IndecSet::check_capacity(&alg)?;
                    if count >= 64 {
                        return Err(Failure::Refused(format!(
                            "{count} indecomposables cannot be enumerated"
                        )));
                    }
                    (1..1u128 << count).map(IndecSet).collect()
                }
            };
            let violations = lemma_sweep(&alg, &gens, nmax, jobs.jobs)?;
            let ok = violations.is_empty();
            let out =
                emit(json!({ "nmax": nmax, "generators": gens.len(), "violations": violations }));
            if ok {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Arquiver { algebra, dot } => {
            let alg = load(&algebra.algebra)?;
            let q = ar_quiver(&alg)?;
            if dot {
                Ok(q.to_dot().trim_end().to_string())
            } else {
                Ok(emit(
                    json!({ "nodes": q.nodes.iter().map(ToString::to_string).collect::<Vec<_>>(), "arrows": q.arrows }),
                ))
            }
        }
        Command::Oracle {
            action: OracleAction::Verify { algebra, cap },
        } => {
            let alg = load(&algebra.algebra)?;
            let checks = verify_algebra(&alg, cap)?;
            let ok = checks.iter().all(|c| c.passed());
            let report: Vec<Value> = checks
                .iter()
                .map(|c| json!({ "check": c.name, "cases": c.cases, "passed": c.passed(), "failures": c.failures }))
                .collect();
            let out = emit(json!({ "cap": cap, "passed": ok, "checks": report }));
            if ok {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Paper {
            action:
                PaperAction::Verify {
                    jobs,
                    seed,
                    only,
                    json,
                },
        } => {
            let v = Verifier::new(jobs.jobs).with_seed(seed);
            let ids: Vec<usize> = match only {
                Some(id) if (1..=CRITERIA.len()).contains(&id) => vec![id],
                Some(id) => {
                    return Err(Failure::Input(format!(
                        "no criterion {id}; criteria are 1..={}",
                        CRITERIA.len()
                    )))
                }
                None => CRITERIA.iter().map(|c| c.0).collect(),
            };
            let results = ids
                .into_iter()
                .map(|id| v.run(id))
                .collect::<Result<Vec<_>, _>>()?;
            let ok = results.iter().all(|r| r.passed);
            let out = if json {
                let rows: Vec<Value> = results
                    .iter()
                    .map(|r| json!({ "id": r.id, "label": r.label, "passed": r.passed, "details": r.details }))
                    .collect();
                emit(json!({ "seed": seed, "passed": ok, "criteria": rows }))
            } else {
                let mut lines = vec![format!("seed {seed}")];
                for r in &results {
                    lines.push(format!(
                        "[{}] {:>2} {}",
                        if r.passed { "PASS" } else { "FAIL" },
                        r.id,
                        r.label
                    ));
                    lines.extend(r.details.iter().map(|d| format!("       {d}")));
                }
                let failed = results.iter().filter(|r| !r.passed).count();
                lines.push(format!(
                    "{} of {} criteria passed",
                    results.len() - failed,
                    results.len()
                ));
                lines.join("\n")
            };
            if ok {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}

fn lemma_sweep(
    alg: &Algebra,
    gens: &[IndecSet],
    nmax: usize,
    jobs: usize,
) -> Result<Vec<String>, Failure> {
    let pool = rayon_pool(jobs)?;
    let per: Vec<Vec<String>> = pool.install(|| {
        use rayon::prelude::*;
        gens.par_iter()
            .map(|&t| coghost_lemma_check(alg, t, nmax))
            .collect::<Result<_, _>>()
    })?;
    Ok(per.concat())
}

fn rayon_pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Refused(format!("cannot start worker pool: {e}")))
}
