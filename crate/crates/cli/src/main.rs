use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use preproj::export::{exchange_dot, fan_csv, fan_json, hasse_dot, ideal_dump, rank2_coordinates_csv, torsion_json};
use preproj::gfan::g_matrix_presentations;
use preproj::ideal::slice;
use preproj::scalar::{set_prime, DEFAULT_PRIME};
use preproj::tilt::{exchange_quiver, torsion_poset};
use preproj::verify::{all_passed, verify_all, Level, Status, VerifyConfig, VerifyError, DEFAULT_SAMPLES, DEFAULT_SEED};
use preproj::{parse_quiver, parse_word, DynkinQuiver, Field, Fp, PreprojSystem, Rational};

#[derive(Parser, Debug)]
#[command(name = "preproj", version, about = "Support τ-tilting modules over preprojective algebras of Dynkin type")]
struct Cli {
    /// Type code (A3, D4, E6, ...), JSON edge list, or path to a JSON edge list file
    #[arg(long, global = true, default_value = "A2")]
    quiver: String,

    #[arg(long, global = true, value_enum, default_value_t = FieldMode::Rational)]
    field: FieldMode,

    /// Modulus for --field prime
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u64,

    /// Worker threads (defaults to all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[arg(long, global = true, value_enum, default_value_t = LevelArg::Fast)]
    level: LevelArg,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Write the output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FieldMode {
    Rational,
    Prime,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Fast,
    Exhaustive,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of support τ-tilting modules against the closed formula
    Counts,
    /// Run the invariant suites
    Verify {
        /// Sample size for --level fast
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Exchange quiver of the ideals I_w (DOT by default)
    Hasse {
        /// Emit the Hasse quiver of the left weak order instead
        #[arg(long)]
        weak: bool,
    },
    /// Chamber fan of g-matrices (JSON by default)
    Gfan {
        /// Also write rank 2 ray coordinates as CSV to this file
        #[arg(long)]
        coords: Option<PathBuf>,
    },
    /// Poset of torsion classes Fac I_w as JSON
    Torsion,
    /// Reduced word, dimension vector, projectors, g-matrix and annihilator of I_w
    Info {
        /// 1-based generator indices separated by spaces or commas; empty for the identity
        #[arg(default_value = "")]
        word: String,
        /// Include the echelon basis of I_w
        #[arg(long)]
        dump: bool,
    },
}

enum Failure {
    Invalid(String),
    Check(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Invalid(_) => 2,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(e.to_string())
}

fn load_quiver(spec: &str) -> Result<DynkinQuiver, Failure> {
    let path = std::path::Path::new(spec);
    let text = if !spec.trim_start().starts_with('{') && path.is_file() {
        fs::read_to_string(path).map_err(invalid)?
    } else {
        spec.to_string()
    };
    parse_quiver(&text).map_err(invalid)
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(invalid),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(invalid)
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn run<F: Field>(cli: &Cli, quiver: &DynkinQuiver) -> Result<(), Failure> {
    match &cli.command {
        Command::Counts => counts::<F>(cli, quiver),
        Command::Verify { samples } => verify::<F>(cli, quiver, *samples),
        Command::Hasse { weak } => hasse::<F>(cli, quiver, *weak),
        Command::Gfan { coords } => gfan(cli, quiver, coords.as_ref()),
        Command::Torsion => torsion::<F>(cli, quiver),
        Command::Info { word, dump } => info::<F>(cli, quiver, word, *dump),
    }
}

fn system<F: Field>(quiver: &DynkinQuiver) -> Result<PreprojSystem<F>, Failure> {
    PreprojSystem::new(quiver).map_err(invalid)
}

fn counts<F: Field>(cli: &Cli, quiver: &DynkinQuiver) -> Result<(), Failure> {
    let t = quiver.dynkin_type();
    let expected = t.weyl_group_order();
    let (found, method) = if expected <= preproj::verify::EXHAUSTIVE_CAP {
        let sys = system::<F>(quiver)?;
        (exchange_quiver(&sys).vertices.len() as u128, "ideals")
    } else if expected <= 100_000 {
        let weyl = preproj::WeylGroup::new(quiver);
        (weyl.enumerate().len() as u128, "weyl-enumeration")
    } else {
        let weyl = preproj::WeylGroup::new(quiver);
        (weyl.order_by_orbits(), "weyl-orbits")
    };
    let ok = found == expected;
    let text = match cli.format {
        Some(Format::Json) => pretty(&json!({
            "type": t.to_string(),
            "enumerated": found.to_string(),
            "formula": expected.to_string(),
            "expression": t.order_formula(),
            "method": method,
            "equal": ok,
        })),
        Some(Format::Csv) => format!("type,enumerated,formula,method,equal\n{t},{found},{expected},{method},{ok}\n"),
        _ => format!(
            "{t}: enumerated {found} ({method}), formula {} = {expected}: {}\n",
            t.order_formula(),
            if ok { "equal" } else { "MISMATCH" }
        ),
    };
    emit(cli, &text)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Check(format!("count mismatch: {found} != {expected}")))
    }
}

fn verify<F: Field>(cli: &Cli, quiver: &DynkinQuiver, samples: usize) -> Result<(), Failure> {
    let sys = system::<F>(quiver)?;
    let config = VerifyConfig {
        level: match cli.level {
            LevelArg::Fast => Level::Fast,
            LevelArg::Exhaustive => Level::Exhaustive,
        },
        seed: cli.seed,
        samples,
    };
    let results = verify_all(&sys, &config).map_err(|e| match e {
        VerifyError::TooLarge { .. } => invalid(e),
    })?;
    let text = match cli.format {
        Some(Format::Json) => pretty(&json!({
            "type": quiver.dynkin_type().to_string(),
            "level": config.level,
            "seed": config.seed,
            "results": results,
        })),
        Some(Format::Csv) => {
            let mut s = String::from("invariant,status,checked,detail\n");
            for r in &results {
                let status = serde_json::to_value(r.status).expect("status serializes");
                s.push_str(&format!(
                    "{},{},{},\"{}\"\n",
                    r.name,
                    status.as_str().unwrap_or_default(),
                    r.checked,
                    r.detail.clone().unwrap_or_default().replace('"', "'")
                ));
            }
            s
        }
        _ => results.iter().map(|r| format!("{r}\n")).collect(),
    };
    emit(cli, &text)?;
    if all_passed(&results) {
        return Ok(());
    }
    let first = results
        .iter()
        .find(|r| r.status == Status::Fail)
        .map(|r| r.name)
        .unwrap_or_default();
    Err(Failure::Check(format!("invariant {first} failed")))
}

fn hasse<F: Field>(cli: &Cli, quiver: &DynkinQuiver, weak: bool) -> Result<(), Failure> {
    if weak {
        let graph = preproj::WeylGroup::new(quiver).hasse_weak();
        let text = match cli.format {
            Some(Format::Json) => pretty(&json!({
                "vertices": graph.vertices.iter().map(|w| w.word_one_based()).collect::<Vec<_>>(),
                "edges": graph.edges.iter().map(|e| json!([e.from, e.to, e.vertex + 1])).collect::<Vec<_>>(),
            })),
            Some(Format::Csv) => edges_csv(graph.edges.iter().map(|e| (e.from, e.to, e.vertex))),
            _ => hasse_dot(&graph),
        };
        return emit(cli, &text);
    }
    let sys = system::<F>(quiver)?;
    let q = exchange_quiver(&sys);
    let text = match cli.format {
        Some(Format::Json) => {
            let vertices: Vec<_> = q
                .vertices
                .iter()
                .map(|v| {
                    let w = sys.weyl.from_word(&v.word).expect("word from the search");
                    let projectors: Vec<usize> = (0..sys.rank())
                        .filter(|&i| slice(&sys.algebra, &v.ideal, i).is_zero())
                        .map(|i| sys.nakayama.sigma[i] + 1)
                        .collect();
                    json!({ "word": w.word_one_based(), "dims": v.dims, "projectors": projectors })
                })
                .collect();
            let edges: Vec<_> = q.edges.iter().map(|e| json!([e.from, e.to, e.vertex + 1])).collect();
            pretty(&json!({ "vertices": vertices, "edges": edges }))
        }
        Some(Format::Csv) => edges_csv(q.edges.iter().map(|e| (e.from, e.to, e.vertex))),
        _ => exchange_dot(&sys, &q),
    };
    emit(cli, &text)
}

fn edges_csv(edges: impl Iterator<Item = (usize, usize, usize)>) -> String {
    let mut s = String::from("from,to,vertex\n");
    for (a, b, i) in edges {
        s.push_str(&format!("{a},{b},{}\n", i + 1));
    }
    s
}

fn gfan(cli: &Cli, quiver: &DynkinQuiver, coords: Option<&PathBuf>) -> Result<(), Failure> {
    let weyl = preproj::WeylGroup::new(quiver);
    let elements = weyl.enumerate();
    let text = match cli.format {
        Some(Format::Csv) => fan_csv(&elements),
        _ => pretty(&fan_json(&weyl, &elements)),
    };
    if let Some(path) = coords {
        let csv = rank2_coordinates_csv(&weyl, &elements)
            .ok_or_else(|| invalid("coordinates are only written for rank 2"))?;
        fs::write(path, csv).map_err(invalid)?;
    }
    emit(cli, &text)
}

fn torsion<F: Field>(cli: &Cli, quiver: &DynkinQuiver) -> Result<(), Failure> {
    let sys = system::<F>(quiver)?;
    let elements = sys.weyl.enumerate();
    if elements.len() as u128 > preproj::verify::EXHAUSTIVE_CAP {
        return Err(invalid("torsion poset export is limited to |W| <= 1152"));
    }
    emit(cli, &pretty(&torsion_json(&torsion_poset(&sys, &elements))))
}

fn info<F: Field>(cli: &Cli, quiver: &DynkinQuiver, word: &str, dump: bool) -> Result<(), Failure> {
    let sys = system::<F>(quiver)?;
    let letters = parse_word(word, sys.rank()).map_err(invalid)?;
    let w = sys.weyl.from_word(&letters).map_err(invalid)?;
    let ideal = sys.ideal_of(&w);
    let dims = sys.rep(&ideal).dims().to_vec();
    let projectors: Vec<usize> = (0..sys.rank())
        .filter(|&i| slice(&sys.algebra, &ideal, i).is_zero())
        .map(|i| sys.nakayama.sigma[i] + 1)
        .collect();
    let g = g_matrix_presentations(&sys, &w).map_err(|e| Failure::Check(e.to_string()))?;
    let partner = sys.annihilator_partner(&w);
    let text = match cli.format {
        Some(Format::Json) => {
            let mut v = json!({
                "input": letters.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "word": w.word_one_based(),
                "length": w.length(),
                "dim": ideal.dim(),
                "dims": dims,
                "projectors": projectors,
                "g_matrix": g.rows(),
                "annihilator_word": partner.word_one_based(),
            });
            if dump {
                v["ideal"] = ideal_dump(&sys, &ideal);
            }
            pretty(&v)
        }
        _ => {
            let mut s = format!(
                "word: {}\nlength: {}\ndim I_w: {}\ndimension vector: {:?}\nprojectors: {:?}\ng-matrix: {}\nannihilator: I_({})\n",
                w.word_label(),
                w.length(),
                ideal.dim(),
                dims,
                projectors,
                g,
                partner.word_label()
            );
            if dump {
                s.push_str(&pretty(&ideal_dump(&sys, &ideal)));
            }
            s
        }
    };
    emit(cli, &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| {
        if let Some(j) = cli.jobs {
            if j == 0 {
                return Err(invalid("--jobs must be at least 1"));
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build_global()
                .map_err(invalid)?;
        }
        let quiver = load_quiver(&cli.quiver)?;
        match cli.field {
            FieldMode::Rational => run::<Rational>(&cli, &quiver),
            FieldMode::Prime => {
                set_prime(cli.prime).map_err(invalid)?;
                run::<Fp>(&cli, &quiver)
            }
        }
    })();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Invalid(m) => eprintln!("error: {m}"),
                Failure::Check(m) => eprintln!("verification failed: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
