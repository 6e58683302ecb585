use crate::{Command, ConstructArgs, Family, FamilyName, InsertionArgs, MseArgs, SweepArgs, EXIT_BELOW_THRESHOLD};
use czcp_core::barker::{barker, theorem4_pair, theorem6_extend};
use czcp_core::gbf::{parse_permutation, theorem1_expected_z, theorem1_pair};
use czcp_core::golay::{build_gcp, is_gcp};
use czcp_core::insertion::{theorem2_pair, theorem3_pair, InsertionPair, DEFAULT_MAX_N};
use czcp_core::numfmt::round_significant;
use czcp_core::training::{demo_training, is_optimal_training, ls_mse, mse_lower_bound, TrainingMatrix};
use czcp_core::verify::{catalog, catalog_lookup, SEARCHED_BEST_Z};
use czcp_core::{profile, verify, GcpRecipe, InsertionSpec, OddFamily, SequencePair};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::fs;
use std::path::{Path, PathBuf};

pub const MAX_N_VAR: &str = "CZCP_MAX_N";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] czcp_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(msg.into()))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })
}

fn read_pair(path: &Path) -> Result<SequencePair> {
    Ok(SequencePair::from_text(&read(path)?)?)
}

fn max_n() -> Result<usize> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .or_else(|_| usage(format!("{MAX_N_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

pub fn run(command: Command) -> Result<u8> {
    match command {
        Command::Construct(args) => construct(args),
        Command::Verify { pair, min_z, output } => {
            let report = verify(&read_pair(&pair)?);
            let text = report.to_json_string();
            match output {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(if report.z >= min_z { 0 } else { EXIT_BELOW_THRESHOLD })
        }
        Command::Profile { pair, output } => {
            let csv = profile(&read_pair(&pair)?).to_csv();
            match output {
                Some(path) => write(&path, &csv)?,
                None => print!("{csv}"),
            }
            Ok(0)
        }
        Command::Catalog { length, json } => {
            print!("{}", render_catalog(length, json));
            Ok(0)
        }
        Command::Mse(args) => mse(args),
    }
}

fn render_catalog(length: Option<usize>, as_json: bool) -> String {
    let advisory = length.and_then(|n| SEARCHED_BEST_Z.iter().find(|(len, _)| *len == n));
    if as_json {
        let mut v = match length {
            Some(n) => json!({ "length": n, "rows": catalog_lookup(n) }),
            None => json!({ "rows": catalog() }),
        };
        if let Some((n, z)) = advisory {
            v["advisory"] = json!(format!("exhaustive search reports Z = {z} for binary length {n}"));
        }
        return serde_json::to_string_pretty(&v).expect("catalog serializes") + "\n";
    }
    let mut out = String::new();
    match length {
        Some(n) => {
            for m in catalog_lookup(n) {
                out.push_str(&format!(
                    "{}\tN={}\tZ={}\tratio {}\t{}\n",
                    m.row.source, m.n, m.z, m.row.czc_ratio, m.row.remarks
                ));
            }
            if let Some((n, z)) = advisory {
                out.push_str(&format!("# exhaustive search reports Z = {z} for binary length {n}\n"));
            }
        }
        None => {
            out.push_str("source\tlength\tZ\tratio\tremarks\n");
            for r in catalog() {
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\n",
                    r.source, r.length, r.z, r.czc_ratio, r.remarks
                ));
            }
        }
    }
    out
}

fn construct(args: ConstructArgs) -> Result<u8> {
    let limit = max_n()?;
    let (pair, expected) = match args.family {
        Family::Gbf { m, q, pi, c, sweep } => {
            if sweep.sweep {
                return gbf_sweep(m, &q, c, sweep);
            }
            let [q] = q[..] else {
                return usage("--q takes a single value unless --sweep is set");
            };
            let pi = match pi {
                Some(s) => parse_permutation(&s)?,
                None => (0..m.saturating_sub(2)).collect(),
            };
            (theorem1_pair(m, q, &pi, c)?, theorem1_expected_z(&pi))
        }
        Family::Insertion(ins) => {
            if ins.sweep.sweep {
                return insertion_sweep(&ins, limit);
            }
            let built = insertion_point(&ins, ins.alpha, ins.beta, ins.gamma, limit)?;
            (built.pair, built.expected_z)
        }
        Family::Barker {
            m,
            n,
            m_variant,
            n_variant,
        } => {
            let pick = |len: usize, variant: usize| -> Result<_> {
                barker(len)?
                    .into_iter()
                    .nth(variant)
                    .map_or_else(|| usage(format!("Barker length {len} has no variant {variant}")), Ok)
            };
            (theorem4_pair(&pick(m, m_variant)?, &pick(n, n_variant)?)?, m)
        }
        Family::TurynExtend { gcp, czcp } => {
            let gcp = if Path::new(&gcp).is_file() {
                read_pair(Path::new(&gcp))?
            } else {
                build_recipe(&gcp, limit)?
            };
            let czcp = read_pair(&czcp)?;
            let expected = verify(&czcp).z * gcp.len();
            (theorem6_extend(&gcp, &czcp)?, expected)
        }
        Family::Gcp { recipe } => {
            let p = build_recipe(&recipe, limit)?;
            if !is_gcp(&p) {
                return usage(format!("recipe {recipe} did not produce a GCP"));
            }
            (p, 1)
        }
    };
    emit(&pair, expected, args.output.as_deref(), args.report.as_deref())
}

fn build_recipe(text: &str, limit: usize) -> Result<SequencePair> {
    let recipe: GcpRecipe = text.parse()?;
    if recipe.length() > limit {
        return usage(format!("recipe length {} exceeds the bound {limit}", recipe.length()));
    }
    Ok(build_gcp(&recipe)?)
}

fn emit(pair: &SequencePair, expected: usize, output: Option<&Path>, report_path: Option<&Path>) -> Result<u8> {
    let report = verify(pair);
    if report.z < expected {
        eprintln!(
            "czcp: constructed pair has zone width {} below the expected {expected}",
            report.z
        );
        return Ok(EXIT_BELOW_THRESHOLD);
    }
    let json = report.to_json_string();
    match output {
        Some(out) => {
            write(out, &pair.to_text())?;
            let default_report = PathBuf::from(format!("{}.json", out.display()));
            write(report_path.unwrap_or(&default_report), &json)?;
            print!("{json}");
        }
        None => {
            print!("{}", pair.to_text());
            if let Some(path) = report_path {
                write(path, &json)?;
            }
        }
    }
    Ok(0)
}

fn symbol(text: &str, q: u32) -> Result<u32> {
    match text {
        "+" => Ok(0),
        "-" if q.is_multiple_of(2) => Ok(q / 2),
        "-" => usage(format!("'-' is not a root of unity of order {q}")),
        t => match t.parse::<u32>() {
            Ok(e) if e < q => Ok(e),
            _ => usage(format!(
                "inserted symbol {t:?} must be '+', '-' or an exponent below {q}"
            )),
        },
    }
}

fn insertion_point(args: &InsertionArgs, alpha: u32, beta: u32, gamma: u32, limit: usize) -> Result<InsertionPair> {
    let q = args.q;
    let spec = InsertionSpec {
        q,
        x0: symbol(&args.x0, q)?,
        x1: symbol(&args.x1, q)?,
        y0: symbol(&args.y0, q)?,
        y1: symbol(&args.y1, q)?,
    };
    Ok(match args.family {
        None => theorem2_pair(alpha, beta, gamma, &spec, limit)?,
        Some(f) => {
            let family = match f {
                FamilyName::Tens => OddFamily::Tens,
                FamilyName::TwentySixes => OddFamily::TwentySixes,
                FamilyName::Mixed => OddFamily::Mixed,
            };
            theorem3_pair(family, beta, gamma, &spec, limit)?
        }
    })
}

fn pool(sweep: SweepArgs) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(sweep.jobs.unwrap_or(0))
        .build()
        .or_else(|e| usage(format!("cannot start worker pool: {e}")))
}

/// Prints the summaries in parameter order; status 1 if any point falls short.
fn finish_sweep(lines: Vec<Result<Value>>) -> Result<u8> {
    let mut code = 0;
    for line in lines {
        let v = line?;
        if v["z"].as_u64() < v["expected_z"].as_u64() {
            code = EXIT_BELOW_THRESHOLD;
        }
        println!("{v}");
    }
    Ok(code)
}

fn summary(pair: &SequencePair, expected: usize, params: Value) -> Value {
    let r = verify(pair);
    json!({
        "params": params,
        "n": r.n,
        "q": r.q,
        "z": r.z,
        "expected_z": expected,
        "classification": r.classification.as_str(),
    })
}

fn gbf_sweep(m_max: usize, qs: &[u32], c: u32, sweep: SweepArgs) -> Result<u8> {
    let mut points = Vec::new();
    for m in 4..=m_max {
        let identity: Vec<usize> = (0..m - 2).collect();
        let reversal: Vec<usize> = identity.iter().rev().copied().collect();
        for pi in [identity, reversal] {
            for &q in qs {
                for c in [c % q, q - 1] {
                    let p = (m, q, pi.clone(), c);
                    if !points.contains(&p) {
                        points.push(p);
                    }
                }
            }
        }
    }
    let lines = pool(sweep)?.install(|| {
        points
            .par_iter()
            .map(|(m, q, pi, c)| {
                let pair = theorem1_pair(*m, *q, pi, *c)?;
                Ok(summary(
                    &pair,
                    theorem1_expected_z(pi),
                    json!({ "m": m, "q": q, "pi": pi, "c": c }),
                ))
            })
            .collect()
    });
    finish_sweep(lines)
}

fn insertion_sweep(args: &InsertionArgs, limit: usize) -> Result<u8> {
    let mut points = Vec::new();
    match args.family {
        None => {
            for a in 1..=args.alpha {
                for b in 0..=args.beta {
                    for g in 0..=args.gamma {
                        points.push((a, b, g));
                    }
                }
            }
        }
        Some(FamilyName::Tens) => points.extend((1..=args.beta).map(|b| (0, b, 0))),
        Some(FamilyName::TwentySixes) => points.extend((1..=args.gamma).map(|g| (0, 0, g))),
        Some(FamilyName::Mixed) => {
            for b in 0..=args.beta {
                points.extend((1..=args.gamma).map(|g| (0, b, g)));
            }
        }
    }
    let fits = |&(a, b, g): &(u32, u32, u32)| GcpRecipe::from_exponents(a, b, g).is_ok_and(|r| r.length() <= limit);
    points.retain(fits);
    let lines = pool(args.sweep)?.install(|| {
        points
            .par_iter()
            .map(|&(a, b, g)| {
                let built = insertion_point(args, a, b, g, limit)?;
                Ok(summary(
                    &built.pair,
                    built.expected_z,
                    json!({ "alpha": a, "beta": b, "gamma": g }),
                ))
            })
            .collect()
    });
    finish_sweep(lines)
}

fn mse(args: MseArgs) -> Result<u8> {
    let (x, layout) = match (&args.matrix, &args.pair) {
        (Some(path), _) => (
            TrainingMatrix::parse_csv(&read(path)?, args.nt, args.lambda, args.q_nonzero)?,
            None,
        ),
        (None, Some(path)) => {
            let pair = read_pair(path)?;
            (
                demo_training(&pair, args.nt, args.lambda)?,
                Some("cyclic-shift demonstration layout: antenna t sends a in slot t and b in slot nt+t"),
            )
        }
        (None, None) => return usage("either --matrix or --pair is required"),
    };
    if args.sigma2.is_nan() || args.sigma2 <= 0.0 {
        return usage("--sigma2 must be positive");
    }
    let mse = ls_mse(&x, args.sigma2)?;
    let bound = mse_lower_bound(args.sigma2, x.q_nonzero());
    let mut v = json!({
        "mse": round_significant(mse),
        "lower_bound": round_significant(bound),
        "optimal": is_optimal_training(&x, args.tol),
        "q_nonzero": x.q_nonzero(),
        "nt": x.nt(),
        "lambda": x.lambda(),
        "rows": x.entries().nrows(),
        "cols": x.entries().ncols(),
        "sigma2": round_significant(args.sigma2),
    });
    if let Some(layout) = layout {
        v["layout"] = json!(layout);
    }
    println!("{}", serde_json::to_string_pretty(&v).expect("json"));
    Ok(0)
}
