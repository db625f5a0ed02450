//! `tiled`: batch computations on graded Gorenstein tiled orders.
//!
//! Exit status: 0 on success, 1 on a domain error (the input is well formed
//! but fails a hypothesis), 2 on an unreadable or malformed input file.
//! Errors are written to stderr as one JSON object `{code, message, witness}`.

mod dot;
mod files;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;
use tiled_core::{
    build_va, cyclic_hasse_oracle, detect_gorenstein, grothendieck_rank, hasse_quiver,
    morita_shift, normalize_mdata, conjugate_mdata, shifted_parameters, tilting_summands,
    GorensteinData, MData, Ratio,
};

use files::{LoadedOrder, MDataFile, Malformed, OrderKind, OrderSpecFile};

#[derive(Parser)]
#[command(name = "tiled", version, about = "Graded Gorenstein tiled orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the tiled-order axioms.
    Validate { order: PathBuf },
    /// Nakayama permutation and Gorenstein parameters.
    Gorenstein { order: PathBuf },
    /// Shift to an N-graded order with |p_i - p_av| < 1.
    Normalize {
        order: PathBuf,
        /// Write the shifted order here.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Summands of the tilting object and the Grothendieck rank.
    Tilting { order: PathBuf },
    /// Hasse quiver of V_A.
    Quiver {
        order: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Compare with the closed form (cyclic input only).
        #[arg(long)]
        oracle: bool,
    },
    /// Validate an m-data file.
    MdataCheck { mdata: PathBuf },
    /// Conjugate an m-data to almost constant, non-negative floor type.
    MdataNormalize {
        mdata: PathBuf,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Write the order file of a cyclic order.
    Cyclic {
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        weights: Vec<i64>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

enum Failure {
    Domain(tiled_core::Error),
    Malformed(Malformed),
    Other { code: &'static str, message: String, status: u8 },
}

impl From<tiled_core::Error> for Failure {
    fn from(e: tiled_core::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<Malformed> for Failure {
    fn from(e: Malformed) -> Self {
        Failure::Malformed(e)
    }
}

impl Failure {
    fn report(&self) -> u8 {
        let (value, status) = match self {
            Failure::Domain(e) => (
                json!({"code": e.code(), "message": e.to_string(), "witness": e.witness()}),
                1,
            ),
            Failure::Malformed(Malformed(msg)) => {
                (json!({"code": "MalformedInput", "message": msg, "witness": null}), 2)
            }
            Failure::Other { code, message, status } => {
                (json!({"code": code, "message": message, "witness": null}), *status)
            }
        };
        eprintln!("{value}");
        status
    }
}

type Outcome = Result<(), Failure>;

fn rational(r: Ratio<i64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn print_matrix(rows: &[Vec<i64>]) {
    for r in rows {
        println!("  {}", list(r));
    }
}

fn write_file(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Other {
        code: "WriteFailed",
        message: format!("cannot write {}: {e}", path.display()),
        status: 2,
    })
}

fn load(path: &Path) -> Result<LoadedOrder, Failure> {
    Ok(LoadedOrder::from_spec(files::read_order(path)?)?)
}

fn gorenstein_of(order: &LoadedOrder) -> Result<GorensteinData, Failure> {
    let g = detect_gorenstein(&order.m)?;
    if let Some(known) = &order.cyclic {
        debug_assert_eq!(&g, known);
    }
    Ok(g)
}

fn print_gorenstein(g: &GorensteinData) {
    println!("nu: {}", list(g.nu.images()));
    println!("ell: {}", list(&g.ell));
    println!("p: {}", list(&g.p));
    println!("p_av: {}", rational(g.p_av));
}

fn validate(path: &Path) -> Outcome {
    let order = load(path)?;
    let report = order.m.report()?;
    println!("triangle: {}", report.triangle_ok);
    println!("basic: {}", report.basic);
    println!("n_graded: {}", report.n_graded);
    if let Some(v) = report.first_violation {
        println!("violation: m({},{}) + m({},{}) < m({},{})", v.i, v.k, v.k, v.j, v.i, v.j);
    }
    if report.is_valid() {
        Ok(())
    } else {
        // Re-derive the structured error for the first failed axiom.
        Err(detect_gorenstein(&order.m).err().map_or(
            Failure::Other {
                code: "InvalidOrder",
                message: "not a basic tiled order".into(),
                status: 1,
            },
            Failure::Domain,
        ))
    }
}

fn normalize(path: &Path, emit: Option<&Path>) -> Outcome {
    let order = load(path)?;
    let g = gorenstein_of(&order)?;
    let md = MData::from_order(&order.m, &g)?;
    let s = normalize_mdata(&md)?;
    let shifted = morita_shift(&order.m, &s.negated()?)?;
    let g2 = detect_gorenstein(&shifted)?;
    let p = shifted_parameters(&g, &s)?;
    if g2.p != p {
        return Err(tiled_core::Error::Postcondition("shifted parameters disagree").into());
    }
    println!("shift: {s}");
    println!("m:");
    print_matrix(&shifted.to_rows());
    print_gorenstein(&g2);
    if let Some(out) = emit {
        write_file(out, &files::to_json(&OrderSpecFile::matrix(shifted.to_rows())))?;
    }
    Ok(())
}

fn tilting(path: &Path) -> Outcome {
    let order = load(path)?;
    let g = gorenstein_of(&order)?;
    let summands = tilting_summands(&order.m, &g)?;
    println!("rank: {}", grothendieck_rank(&g)?);
    println!("summands: {}", summands.len());
    for s in &summands {
        let labels: Vec<String> = s.labels.iter().map(|(i, j)| format!("({i},{j})")).collect();
        let v = if s.vector.is_zero() { "0".to_string() } else { s.vector.to_string() };
        println!("  {v}  {}", labels.join(" "));
    }
    Ok(())
}

fn quiver(path: &Path, dot_path: Option<&Path>, oracle: bool) -> Outcome {
    let order = load(path)?;
    if oracle && order.spec.kind != OrderKind::Cyclic {
        return Err(Failure::Other {
            code: "OracleNeedsCyclic",
            message: "--oracle requires a cyclic order file".into(),
            status: 2,
        });
    }
    let g = gorenstein_of(&order)?;
    let q = hasse_quiver(&build_va(&order.m, &g)?);
    let text = dot::render(&q);
    println!("vertices: {}", q.vertices.len());
    println!("arrows: {}", q.arrows.len());
    match dot_path {
        Some(p) => write_file(p, &text)?,
        None => print!("{text}"),
    }
    if oracle {
        let weights = order.spec.weights.as_deref().unwrap_or_default();
        let closed = cyclic_hasse_oracle(weights)?;
        if q.is_isomorphic_labeled(&closed.quiver) {
            println!("oracle: ISOMORPHIC");
        } else {
            println!("oracle: DIFFERENT");
            return Err(Failure::Other {
                code: "OracleMismatch",
                message: "Hasse quiver differs from the closed form".into(),
                status: 1,
            });
        }
    }
    Ok(())
}

fn print_mdata(md: &MData) {
    println!("a: {}", list(md.a()));
    println!("a_av: {}", rational(md.a_av()));
    let orbits: Vec<String> = md.orbits().iter().map(|o| list(o)).collect();
    println!("orbits: {}", orbits.join(" "));
    println!("floor_type: {}", md.is_floor_type());
    println!("almost_constant: {}", md.is_almost_constant());
    println!("non_negative: {}", md.is_non_negative());
}

fn mdata_check(path: &Path) -> Outcome {
    let md = files::read_mdata(path)?.to_mdata()?;
    print_mdata(&md);
    Ok(())
}

fn mdata_normalize(path: &Path, emit: Option<&Path>) -> Outcome {
    let md = files::read_mdata(path)?.to_mdata()?;
    let s = normalize_mdata(&md)?;
    let out = conjugate_mdata(&md, &s)?;
    println!("shift: {s}");
    println!("m:");
    print_matrix(&out.m().to_rows());
    print_mdata(&out);
    if let Some(p) = emit {
        write_file(p, &files::to_json(&MDataFile::from_mdata(&out)))?;
    }
    Ok(())
}

fn cyclic(weights: Vec<i64>, emit: Option<&Path>) -> Outcome {
    // Fail early on weights that do not define an order.
    tiled_core::cyclic_order(&weights)?;
    let text = files::to_json(&OrderSpecFile::cyclic(weights));
    match emit {
        Some(p) => write_file(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Validate { order } => validate(&order),
        Command::Gorenstein { order } => load(&order)
            .and_then(|o| gorenstein_of(&o))
            .map(|g| print_gorenstein(&g)),
        Command::Normalize { order, emit } => normalize(&order, emit.as_deref()),
        Command::Tilting { order } => tilting(&order),
        Command::Quiver { order, dot, oracle } => quiver(&order, dot.as_deref(), oracle),
        Command::MdataCheck { mdata } => mdata_check(&mdata),
        Command::MdataNormalize { mdata, emit } => mdata_normalize(&mdata, emit.as_deref()),
        Command::Cyclic { weights, emit } => cyclic(weights, emit.as_deref()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => ExitCode::from(f.report()),
    }
}
