//! `secant`: kappa vectors, membership certificates, decompositions and span
//! dimensions from the command line. Every command prints one JSON document.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use secant_core::flatten::exterior_flattening;
use secant_core::ideal::{export_text, minor_generators, pfaffian_generators, span_dimension, SparsePoly};
use secant_core::rep::{
    decompose_kappa0, decompose_kappa1_nonsym_bound, decompose_kappa1_sym, total_dimension, SchurModuleSummand,
};
use secant_core::secant::{bound_from_kappa, certify_membership, kappa, terracini_dimension};
use secant_core::tensor::{random_rank_r, random_rank_r_general, read_tensor_file, write_tensor_file};
use secant_core::DEFAULT_PRIME;

#[derive(Parser)]
#[command(
    name = "secant",
    version,
    about = "Exterior flattenings and secant-variety certificates for 3-tensors"
)]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kappa vector and border-rank lower bound of a tensor file.
    Kappa {
        file: PathBuf,
        /// Also print the flattening psi_J with its row and column labels.
        #[arg(long, value_name = "J")]
        dump_matrix: Option<usize>,
    },
    /// Membership certificate for sigma_r (symmetric tensors, m = 2 or 3).
    Certify {
        file: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// Schur-module decomposition of a degree-(r+1) generator space.
    Decompose {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Third dimension (kappa1nonsym only; defaults to n).
        #[arg(long)]
        k: Option<usize>,
        /// Rank r; for kappa1nonsym the bound c on kappa_1.
        #[arg(long, visible_alias = "c")]
        r: usize,
    },
    /// Dimension of the span of minors and/or principal Pfaffians over F_p.
    SpanDim {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Third dimension; given means general (non-symmetric) coordinates.
        #[arg(long)]
        k: Option<usize>,
        /// Flattening index, or `mixed` (psi_0 minors with Pfaffians) for `both`.
        #[arg(long, default_value = "0")]
        j: String,
        /// Minor size, Pfaffian size, or for `both` the common degree.
        #[arg(long)]
        size: usize,
        #[arg(long, env = "KAPPA_PRIME", default_value_t = DEFAULT_PRIME)]
        prime: u64,
        /// Write the generators in text form to this path.
        #[arg(long, value_name = "PATH")]
        export: Option<PathBuf>,
    },
    /// Projective dimension of sigma_r by Terracini's lemma over F_p.
    DimProbe {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "KAPPA_PRIME", default_value_t = DEFAULT_PRIME)]
        prime: u64,
    },
    /// Write a random tensor of rank at most R.
    Gen {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Third dimension for general tensors (defaults to n).
        #[arg(long, conflicts_with = "symmetric")]
        k: Option<usize>,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        symmetric: bool,
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Kappa0,
    Kappa1sym,
    Kappa1nonsym,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Minors,
    Pfaffians,
    Both,
}

type Outcome = Result<Value, String>;

fn summands_json(s: &[SchurModuleSummand]) -> Value {
    json!({
        "summands": s.iter().map(SchurModuleSummand::to_json).collect::<Vec<_>>(),
        "total_dimension": total_dimension(s).to_string(),
    })
}

fn run_kappa(file: &Path, dump: Option<usize>) -> Outcome {
    let x = read_tensor_file(file).map_err(|e| e.to_string())?;
    let k = kappa(&x);
    let mut out = json!({
        "dims": [x.m(), x.n(), x.k()],
        "symmetric": x.is_symmetric(),
        "kappa": k.values,
        "lower_bound": bound_from_kappa(&k),
    });
    if let Some(j) = dump {
        out["matrix"] = exterior_flattening(&x, j).map_err(|e| e.to_string())?.to_json();
    }
    Ok(out)
}

fn run_decompose(mode: Mode, m: usize, n: usize, k: Option<usize>, r: usize) -> Outcome {
    if r == 0 {
        return Err("--r must be at least 1".into());
    }
    let (name, summands) = match mode {
        Mode::Kappa0 => ("kappa0", decompose_kappa0(m, n, r)),
        Mode::Kappa1sym | Mode::Kappa1nonsym if m != 3 => {
            return Err("kappa1 decompositions are defined for m = 3".into());
        }
        Mode::Kappa1sym => ("kappa1sym", decompose_kappa1_sym(n, r)),
        Mode::Kappa1nonsym => {
            let s = decompose_kappa1_nonsym_bound(n, k.unwrap_or(n), r).map_err(|e| e.to_string())?;
            ("kappa1nonsym", s)
        }
    };
    let mut out = summands_json(&summands);
    out["mode"] = json!(name);
    out["parameters"] = json!({ "m": m, "n": n, "k": k, "r": r });
    Ok(out)
}

struct SpanArgs {
    which: Which,
    m: usize,
    n: usize,
    k: Option<usize>,
    j: String,
    size: usize,
    prime: u64,
    export: Option<PathBuf>,
}

fn run_span_dim(a: SpanArgs) -> Outcome {
    let symmetric = a.k.is_none();
    let k = a.k.unwrap_or(a.n);
    let j = match (a.j.as_str(), a.which) {
        ("mixed", Which::Both) => 0,
        ("mixed", _) => return Err("--j mixed is only meaningful with --which both".into()),
        (s, _) => s
            .parse::<usize>()
            .map_err(|_| format!("--j: expected an integer or `mixed`, got {s:?}"))?,
    };
    let need_sym = || {
        if symmetric && a.m == 3 {
            Ok(())
        } else {
            Err("Pfaffians need m = 3 and symmetric coordinates (omit --k)".to_string())
        }
    };
    let minors = |size| minor_generators(a.m, a.n, k, symmetric, j, size).map_err(|e| e.to_string());
    let pfaffians = |size| pfaffian_generators(a.n, size).map_err(|e| e.to_string());
    let (polys, counts): (Vec<SparsePoly>, Value) = match a.which {
        Which::Minors => {
            let p = minors(a.size)?;
            let c = json!({ "minors": p.len() });
            (p, c)
        }
        Which::Pfaffians => {
            need_sym()?;
            let p = pfaffians(a.size)?;
            let c = json!({ "pfaffians": p.len() });
            (p, c)
        }
        Which::Both => {
            need_sym()?;
            let mut p = minors(a.size)?;
            let q = pfaffians(2 * a.size)?;
            let c = json!({ "minors": p.len(), "pfaffians": q.len() });
            p.extend(q);
            (p, c)
        }
    };
    let dim = span_dimension(&polys, a.prime).map_err(|e| e.to_string())?;
    if let Some(path) = &a.export {
        std::fs::write(path, export_text(&polys)).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(json!({
        "span_dim": dim,
        "generators": polys.len(),
        "counts": counts,
        "degree": polys.first().and_then(SparsePoly::degree),
        "prime": a.prime,
        "coordinates": if symmetric { "symmetric" } else { "general" },
        "j": j,
    }))
}

fn run_dim_probe(m: usize, n: usize, r: usize, trials: usize, seed: u64, prime: u64) -> Outcome {
    let dim = terracini_dimension(m, n, r, trials, seed, prime).map_err(|e| e.to_string())?;
    let ambient = m * n * (n + 1) / 2 - 1;
    let expected = ambient.min(r * (m + n - 1) - 1);
    Ok(json!({
        "dimension": dim,
        "expected": expected,
        "ambient": ambient,
        "deficiency": expected - dim.min(expected),
        "trials": trials,
        "seed": seed,
        "prime": prime,
    }))
}

fn run_gen(m: usize, n: usize, k: Option<usize>, rank: usize, seed: u64, symmetric: bool, output: &Path) -> Outcome {
    if m == 0 || n == 0 || k == Some(0) {
        return Err("dimensions must be positive".into());
    }
    let x = if symmetric {
        random_rank_r(m, n, rank, seed, true)
    } else {
        random_rank_r_general(m, n, k.unwrap_or(n), rank, seed)
    };
    write_tensor_file(output, &x).map_err(|e| e.to_string())?;
    Ok(json!({
        "path": output.display().to_string(),
        "dims": [x.m(), x.n(), x.k()],
        "symmetric": symmetric,
        "rank": rank,
        "seed": seed,
    }))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Kappa { file, dump_matrix } => run_kappa(&file, dump_matrix),
        Command::Certify { file, r } => {
            let x = read_tensor_file(&file).map_err(|e| e.to_string())?;
            Ok(certify_membership(&x, r).map_err(|e| e.to_string())?.to_json())
        }
        Command::Decompose { mode, m, n, k, r } => run_decompose(mode, m, n, k, r),
        Command::SpanDim {
            which,
            m,
            n,
            k,
            j,
            size,
            prime,
            export,
        } => run_span_dim(SpanArgs {
            which,
            m,
            n,
            k,
            j,
            size,
            prime,
            export,
        }),
        Command::DimProbe {
            m,
            n,
            r,
            trials,
            seed,
            prime,
        } => run_dim_probe(m, n, r, trials, seed, prime),
        Command::Gen {
            m,
            n,
            k,
            rank,
            seed,
            symmetric,
            output,
        } => run_gen(m, n, k, rank, seed, symmetric, &output),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    match run(cli) {
        Ok(v) => {
            let text = if pretty {
                serde_json::to_string_pretty(&v)
            } else {
                serde_json::to_string(&v)
            };
            println!("{}", text.expect("serializable"));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
