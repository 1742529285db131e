//! `polyradii` command-line front end.
//!
//! Every subcommand prints one JSON run report on stdout. Exit status 0
//! means computed/verified, 1 a violated property (the report carries a
//! counterexample), 2 an input error.

mod report;
mod suites;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polyradii::bodies::{BodyFile, VPolytope};
use polyradii::certificates::{extract, validate};
use polyradii::constructions::{
    corollary47_gauge, example43, example44, random_vpolytope, ExamplePair, Family, Sampler, Variant,
};
use polyradii::exact::Rational;
use polyradii::radii::{asymmetry, circumradius, diameter, inradius, jung_ratio};

use report::{digest, InputDigest, RunReport};
use suites::{Instance, Suite};

#[derive(Parser)]
#[command(
    name = "polyradii",
    version,
    about = "Exact generalized radii and concentricity checks for rational polytopes"
)]
struct Cli {
    /// append decimal approximations (non-normative) to the report
    #[arg(long, global = true)]
    approx: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Example43Min,
    Example43Max,
    Example44,
    Cor47,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Radii, asymmetry and Jung ratio of a body with respect to a gauge
    Compute {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        gauge: Option<PathBuf>,
        /// comma separated subset of R, r, D, s, center, jung
        #[arg(long, value_delimiter = ',', default_value = "R,r,D,s,center,jung")]
        which: Vec<String>,
    },
    /// Check a suite of inequalities or equivalences on files or a family
    Verify {
        suite: Suite,
        #[arg(long)]
        body: Option<PathBuf>,
        #[arg(long)]
        gauge: Option<PathBuf>,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long)]
        lambda: Option<Rational>,
        #[arg(long)]
        mu: Option<Rational>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// use -K in place of the body read from --body
        #[arg(long)]
        negate: bool,
    },
    /// Build an example pair and write it as JSON
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        lambda: Option<Rational>,
        #[arg(long)]
        mu: Option<Rational>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Optimal containment certificate for K in R(K,C) C + t
    Certify {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        gauge: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search simplex/gauge pairs that are complete and concentric but not extremal
    Explore {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
}

/// A loaded input: either a bare body or an example pair.
enum Loaded {
    Body(VPolytope),
    Pair(ExamplePair),
}

fn load(path: &Path, inputs: &mut Vec<InputDigest>, role: &str) -> Result<Loaded> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    inputs.push(InputDigest { role: role.into(), source: path.display().to_string(), sha256: digest(&bytes) });
    let value: Value = serde_json::from_slice(&bytes).with_context(|| format!("parsing {}", path.display()))?;
    if value.get("simplex").is_some() && value.get("gauge").is_some() {
        let pair: ExamplePair =
            serde_json::from_value(value).with_context(|| format!("reading pair {}", path.display()))?;
        return Ok(Loaded::Pair(pair));
    }
    let file: BodyFile = serde_json::from_value(value).with_context(|| format!("reading body {}", path.display()))?;
    Ok(Loaded::Body(file.into_vpolytope().with_context(|| format!("building body {}", path.display()))?.canonical()))
}

/// Body and gauge from `--body`/`--gauge`; a pair file supplies whichever
/// side is missing.
fn load_pair(
    body: Option<&Path>,
    gauge: Option<&Path>,
    inputs: &mut Vec<InputDigest>,
) -> Result<(Option<VPolytope>, VPolytope)> {
    let mut pair_gauge = None;
    let k = match body {
        Some(p) => Some(match load(p, inputs, "body")? {
            Loaded::Body(k) => k,
            Loaded::Pair(pair) => {
                pair_gauge = Some(pair.gauge);
                pair.simplex
            }
        }),
        None => None,
    };
    let c = match gauge {
        Some(p) => match load(p, inputs, "gauge")? {
            Loaded::Body(c) => c,
            Loaded::Pair(pair) => pair.gauge,
        },
        None => pair_gauge.ok_or_else(|| anyhow!("--gauge is required unless --body is a pair file"))?,
    };
    if let Some(k) = &k {
        if k.dim() != c.dim() {
            bail!("body has dimension {} but gauge has dimension {}", k.dim(), c.dim());
        }
    }
    Ok((k, c))
}

fn build_family(
    family: FamilyArg,
    dim: Option<usize>,
    lambda: Option<Rational>,
    mu: Option<Rational>,
    seed: u64,
) -> Result<ExamplePair> {
    Ok(match family {
        FamilyArg::Example43Min | FamilyArg::Example43Max => {
            let variant = if family == FamilyArg::Example43Min { Variant::Min } else { Variant::Max };
            let lambda = lambda.unwrap_or_else(Rational::one);
            let mu = mu.unwrap_or_else(|| polyradii::exact::rat(1, 2));
            example43(dim.unwrap_or(2), &lambda, &mu, variant)?
        }
        FamilyArg::Example44 => example44(dim.unwrap_or(3), None)?,
        FamilyArg::Cor47 => {
            if dim.is_some_and(|d| d != 2) {
                bail!("the cor47 family is planar");
            }
            corollary47_gauge(&lambda.unwrap_or_else(|| polyradii::exact::rat(1, 2)))?
        }
        FamilyArg::Random => {
            let dim = dim.unwrap_or(2);
            let simplex = suites::random_simplex(dim, &mut Sampler::new(seed))?;
            let gauge = random_vpolytope(dim, 2 * dim + 2, 3, seed ^ 0x9e37_79b9)?.canonical();
            let mut parameters = std::collections::BTreeMap::new();
            parameters.insert("n".into(), Rational::integer(dim as i64));
            parameters.insert("seed".into(), seed.to_string().parse()?);
            ExamplePair { family: Family::Random, simplex, gauge, parameters }
        }
    })
}

fn generated_digest(label: &str, value: &impl serde::Serialize) -> InputDigest {
    let bytes = serde_json::to_vec(value).expect("serializable");
    InputDigest { role: "generated".into(), source: label.into(), sha256: digest(&bytes) }
}

fn cmd_compute(body: &Path, gauge: Option<&Path>, which: &[String], report: &mut RunReport) -> Result<()> {
    let (k, c) = load_pair(Some(body), gauge, &mut report.inputs)?;
    let k = k.expect("body given");
    let mut out = serde_json::Map::new();
    for w in which {
        let v = match w.as_str() {
            "R" => serde_json::to_value(circumradius(&k, &c)?.finite()?)?,
            "r" => serde_json::to_value(inradius(&k, &c)?)?,
            "D" => serde_json::to_value(diameter(&k, &c)?)?,
            "s" => json!({ "body": asymmetry(&k)?.s, "gauge": asymmetry(&c)?.s }),
            "center" => json!({ "body": asymmetry(&k)?.center, "gauge": asymmetry(&c)?.center }),
            "jung" => serde_json::to_value(jung_ratio(&k, &c)?)?,
            other => bail!("unknown functional {other:?}; expected R, r, D, s, center or jung"),
        };
        out.insert(w.clone(), v);
    }
    report.results = Value::Object(out);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: Suite,
    body: Option<&Path>,
    gauge: Option<&Path>,
    family: Option<FamilyArg>,
    lambda: Option<Rational>,
    mu: Option<Rational>,
    dim: Option<usize>,
    trials: usize,
    seed: u64,
    negate: bool,
    report: &mut RunReport,
) -> Result<()> {
    let instances: Vec<Instance> = match family {
        Some(FamilyArg::Random) => {
            if body.is_some() || gauge.is_some() {
                bail!("--family random does not take input files");
            }
            let dim = dim.unwrap_or(2);
            report.inputs.push(InputDigest {
                role: "generated".into(),
                source: format!("random dim={dim} trials={trials} seed={seed}"),
                sha256: String::new(),
            });
            (0..trials).map(|i| suites::random_instance(suite, dim, seed, i)).collect::<Result<_>>()?
        }
        Some(f) => {
            if body.is_some() || gauge.is_some() {
                bail!("--family does not take input files");
            }
            let pair = build_family(f, dim, lambda.clone(), mu, seed)?;
            report
                .inputs
                .push(generated_digest(serde_json::to_value(pair.family)?.as_str().unwrap_or("family"), &pair));
            let neg = pair.simplex.negate();
            vec![
                Instance { label: "S".into(), body: pair.simplex.clone(), gauge: pair.gauge.clone() },
                Instance { label: "-S".into(), body: neg, gauge: pair.gauge },
            ]
        }
        None => {
            let needs_body = suite != Suite::Lemma32;
            if needs_body && body.is_none() {
                bail!("--body (or --family) is required");
            }
            let (k, c) = load_pair(body, gauge, &mut report.inputs)?;
            let k = k.unwrap_or_else(|| c.clone());
            let k = if negate { k.negate() } else { k };
            vec![Instance { label: "input".into(), body: k, gauge: c }]
        }
    };
    let r = lambda.unwrap_or_else(|| polyradii::exact::rat(1, 2));
    suites::run(suite, &instances, &r, report)
}

fn cmd_construct(
    family: FamilyArg,
    dim: Option<usize>,
    lambda: Option<Rational>,
    mu: Option<Rational>,
    seed: u64,
    out: Option<&Path>,
    report: &mut RunReport,
) -> Result<()> {
    let pair = build_family(family, dim, lambda, mu, seed)?;
    let text = serde_json::to_string_pretty(&pair)?;
    if let Some(out) = out {
        fs::write(out, format!("{text}\n")).with_context(|| format!("writing {}", out.display()))?;
    }
    report.results = json!({
        "written": out.map(|p| p.display().to_string()),
        "sha256": digest(text.as_bytes()),
        "pair": pair,
    });
    Ok(())
}

fn cmd_certify(body: &Path, gauge: Option<&Path>, out: Option<&Path>, report: &mut RunReport) -> Result<()> {
    let (k, c) = load_pair(Some(body), gauge, &mut report.inputs)?;
    let k = k.expect("body given");
    let ex = extract(&k, &c)?;
    let valid = validate(&k, &ex.container(&c)?, &ex.certificate);
    if let Some(out) = out {
        let text = serde_json::to_string_pretty(&ex.certificate)?;
        fs::write(out, format!("{text}\n")).with_context(|| format!("writing {}", out.display()))?;
    }
    report.results = json!({ "extracted": ex, "valid": valid });
    if !valid {
        report.fail(json!({ "body": k, "gauge": c, "reason": "certificate failed validation" }));
    }
    Ok(())
}

fn run(cli: &Cli, report: &mut RunReport) -> Result<()> {
    match &cli.command {
        Command::Compute { body, gauge, which } => cmd_compute(body, gauge.as_deref(), which, report),
        Command::Verify { suite, body, gauge, family, lambda, mu, dim, trials, seed, negate } => cmd_verify(
            *suite,
            body.as_deref(),
            gauge.as_deref(),
            *family,
            lambda.clone(),
            mu.clone(),
            *dim,
            *trials,
            *seed,
            *negate,
            report,
        ),
        Command::Construct { family, lambda, mu, dim, seed, out } => {
            cmd_construct(*family, *dim, lambda.clone(), mu.clone(), *seed, out.as_deref(), report)
        }
        Command::Certify { body, gauge, out } => cmd_certify(body, gauge.as_deref(), out.as_deref(), report),
        Command::Explore { trials, seed, dim } => suites::explore(*trials, *seed, *dim, report),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = RunReport::new(std::env::args().skip(1).collect());
    if let Err(e) = run(&cli, &mut report) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if cli.approx {
        report.add_approx();
    }
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    // a closed pipe downstream is not an error of ours
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(report.exit_status as u8)
}
