use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use amub_core::combinatorics::{
    hadamard_paley, hadamard_sylvester, is_mutually_orthogonal, mols_for_order, mols_lower_bound, HadamardMatrix,
};
use amub_core::constructions::HadamardSource;
use amub_core::io::{bounds_report, read_bundle, table1, verify_bundle, write_bundle, Bundle, VerifyStatus};
use amub_core::bases::realify_collection_with;
use amub_core::{tensor_collections, BasisCollection, ConstructionSpec, FieldTag, GammaReport, Tolerance};

#[derive(Parser)]
#[command(name = "amub", version)]
#[command(about = "Build and certify mutually unbiased and approximately mutually unbiased bases")]
struct Cli {
    /// Absolute tolerance for all checks (default: 1e-9 * max(1, sqrt(d)))
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    C,
    R,
}

impl From<FieldArg> for FieldTag {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::C => FieldTag::C,
            FieldArg::R => FieldTag::R,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a collection and write it as a certified bundle
    Construct(ConstructArgs),
    /// Recompute a bundle's certificate and compare (exit 0 match, 1 mismatch, 2 malformed)
    Verify {
        path: PathBuf,
    },
    /// Double a complex bundle into a real one in twice the dimension
    Realify {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Tensor two bundles of the same field
    Tensor {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Real AMUB parameter table with measured coherence
    Table1 {
        #[arg(long, default_value_t = 13)]
        max_q: u64,
        #[arg(long, default_value_t = 13)]
        max_p: u64,
    },
    /// Welch bounds, MUB caps and MOLS bounds for a dimension
    Bounds {
        #[arg(long)]
        d: u64,
        /// Collection size for the Welch bound (default d + 1)
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, value_enum, default_value_t = FieldArg::C)]
        field: FieldArg,
    },
    /// Mutually orthogonal Latin squares of a given order
    Mols {
        #[arg(long)]
        order: u64,
    },
    /// Sylvester or Paley Hadamard matrix
    Hadamard {
        #[arg(long, conflicts_with = "paley", required_unless_present = "paley")]
        sylvester: Option<u32>,
        #[arg(long)]
        paley: Option<u64>,
    },
}

#[derive(Args)]
struct ConstructArgs {
    /// standard, mub-pp, amub-gauss, amub-jacobi, amub-ec, realify, hadamard-pair
    #[arg(long)]
    family: String,
    /// Inner family for realify
    #[arg(long)]
    inner: Option<String>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    /// Sylvester exponent for hadamard-pair
    #[arg(long)]
    k: Option<u32>,
    /// Dimension for standard
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_enum, default_value_t = FieldArg::C)]
    field: FieldArg,
    #[arg(long)]
    out: PathBuf,
}

/// Bad input: printed to stderr, exit 2.
struct Fail(String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

type Outcome = Result<u8, Fail>;

fn need<T>(value: Option<T>, family: &str, flag: &str) -> Result<T, Fail> {
    value.ok_or_else(|| Fail(format!("{family} needs --{flag}")))
}

fn spec_for(family: &str, args: &ConstructArgs) -> Result<ConstructionSpec, Fail> {
    Ok(match family {
        "standard" => ConstructionSpec::Standard { d: need(args.d, family, "d")?, field: args.field.into() },
        "mub-pp" => ConstructionSpec::MubPp { q: need(args.q, family, "q")? },
        "amub-gauss" => ConstructionSpec::AmubGauss { q: need(args.q, family, "q")? },
        "amub-jacobi" => ConstructionSpec::AmubJacobi { q: need(args.q, family, "q")? },
        "amub-ec" => ConstructionSpec::AmubEc {
            p: need(args.p, family, "p")?,
            a: need(args.a, family, "a")?,
            b: need(args.b, family, "b")?,
            m: need(args.m, family, "m")?,
        },
        "hadamard-pair" => {
            let source = match (args.k, args.q) {
                (Some(k), None) => HadamardSource::Sylvester { k },
                (None, Some(q)) => HadamardSource::Paley { q },
                _ => return Err(Fail("hadamard-pair needs exactly one of --k (Sylvester) or --q (Paley)".into())),
            };
            ConstructionSpec::HadamardPair { source }
        }
        "realify" => {
            let inner = need(args.inner.as_deref(), family, "inner")?;
            if inner == "realify" {
                return Err(Fail("realify cannot wrap realify".into()));
            }
            ConstructionSpec::Realify { inner: Box::new(spec_for(inner, args)?) }
        }
        "tensor" => return Err(Fail("build tensor products with the `tensor` command from two bundles".into())),
        other => return Err(Fail(format!("unknown family {other:?}"))),
    })
}

fn certify_and_write(coll: &BasisCollection, tol: Tolerance, out: &Path) -> Result<Bundle, Fail> {
    let bundle = Bundle::certified(coll, tol)?;
    write_bundle(out, &bundle).map_err(|e| Fail(format!("{}: {e}", out.display())))?;
    Ok(bundle)
}

fn print_written(bundle: &Bundle, out: &Path, format: Format) {
    let id = bundle.construction.as_ref().map(|c| c.id());
    match format {
        Format::Json => println!(
            "{}",
            json!({
                "path": out.display().to_string(),
                "construction": id,
                "field": bundle.field,
                "dimension": bundle.dimension,
                "basis_count": bundle.basis_count(),
                "certificate": bundle.certificate,
            })
        ),
        Format::Text => {
            println!(
                "wrote {}: {} field {}, d = {}, n = {}",
                out.display(),
                id.unwrap_or("bundle"),
                bundle.field,
                bundle.dimension,
                bundle.basis_count()
            );
            if let Some(cert) = &bundle.certificate {
                println!("gamma = {:.7}, verdict {}", cert.gamma, cert.verdict);
            }
        }
    }
}

fn certificate_text(r: &GammaReport) -> String {
    let w = r.witness;
    let mut s = format!(
        "field {}, d = {}, n = {}\ngamma = {:.7} at (basis {}, vector {}) x (basis {}, vector {})\nmin cross modulus = {:.7}\n",
        r.field, r.dimension, r.basis_count, r.gamma, w.basis_a, w.vector_a, w.basis_b, w.vector_b, r.min_cross
    );
    for e in &r.welch {
        s += &format!(
            "welch t={}: gamma^{} = {:.10}, bound {:.10}, slack {:.3e}{}\n",
            e.t,
            2 * e.t,
            e.gamma_pow,
            e.bound,
            e.slack,
            if e.tight { " (tight)" } else { "" }
        );
    }
    let yes = |b: bool| if b { "yes" } else { "no" };
    s += &format!(
        "spherical 1-design: {}, 2-design: {}\nverdict: {}\ntolerance: {:.3e}\n",
        yes(r.design.spherical_1_design),
        yes(r.design.spherical_2_design),
        r.verdict,
        r.tolerance
    );
    s
}

fn load_collection(path: &Path, tol: Tolerance) -> Result<BasisCollection, Fail> {
    let bundle = read_bundle(path)?;
    bundle.to_collection(tol).map_err(|e| Fail(format!("{}: {e}", path.display())))
}

fn verify(path: &Path, tol: Tolerance, format: Format) -> Outcome {
    let bundle = read_bundle(path)?;
    let outcome = verify_bundle(&bundle, tol);
    let (status, problems) = match &outcome.status {
        VerifyStatus::Match => ("match", Vec::new()),
        VerifyStatus::Mismatch(p) => ("mismatch", p.clone()),
        VerifyStatus::NotOrthonormal(e) => ("not-orthonormal", vec![e.clone()]),
    };
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "path": path.display().to_string(),
                "status": status,
                "problems": problems,
                "report": outcome.report,
            }))?
        ),
        Format::Text => {
            println!("{}", path.display());
            if let Some(r) = &outcome.report {
                print!("{}", certificate_text(r));
            }
            println!("status: {status}");
            for p in &problems {
                println!("  {p}");
            }
        }
    }
    Ok(outcome.exit_code() as u8)
}

fn matrix_text(h: &HadamardMatrix) -> String {
    h.rows()
        .map(|r| r.iter().map(|&x| if x > 0 { '+' } else { '-' }).collect::<String>() + "\n")
        .collect()
}

fn run(cli: Cli) -> Outcome {
    let tol = match cli.tol {
        Some(t) if t.is_finite() && t > 0.0 => Tolerance::Absolute(t),
        Some(t) => return Err(Fail(format!("--tol must be a positive number, got {t}"))),
        None => Tolerance::Scaled,
    };
    let format = cli.format;
    match cli.command {
        Command::Construct(args) => {
            let spec = spec_for(&args.family, &args)?;
            let coll = spec.build()?;
            let bundle = certify_and_write(&coll, tol, &args.out)?;
            print_written(&bundle, &args.out, format);
            Ok(0)
        }
        Command::Verify { path } => verify(&path, tol, format),
        Command::Realify { input, out } => {
            let coll = load_collection(&input, tol)?;
            let real = realify_collection_with(&coll, tol)?;
            let bundle = certify_and_write(&real, tol, &out)?;
            print_written(&bundle, &out, format);
            Ok(0)
        }
        Command::Tensor { left, right, out } => {
            let l = load_collection(&left, tol)?;
            let r = load_collection(&right, tol)?;
            let coll = tensor_collections(&l, &r)?;
            let bundle = certify_and_write(&coll, tol, &out)?;
            print_written(&bundle, &out, format);
            Ok(0)
        }
        Command::Table1 { max_q, max_p } => {
            let report = table1(max_q, max_p, tol)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(if report.all_within_bound() { 0 } else { 1 })
        }
        Command::Bounds { d, n, field } => {
            let report = bounds_report(d, n, field.into())?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(0)
        }
        Command::Mols { order } => {
            let family = mols_for_order(order)?;
            let orthogonal = is_mutually_orthogonal(&family);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "order": order,
                        "lower_bound": mols_lower_bound(order),
                        "mutually_orthogonal": orthogonal,
                        "squares": family.iter().map(|s| s.rows().map(<[u32]>::to_vec).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    }))?
                ),
                Format::Text => {
                    println!(
                        "{} MOLS of order {order} (lower bound M({order}) >= {}), mutually orthogonal: {orthogonal}",
                        family.len(),
                        mols_lower_bound(order)
                    );
                    let width = order.to_string().len();
                    for (i, sq) in family.iter().enumerate() {
                        println!("L{}:", i + 1);
                        for row in sq.rows() {
                            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
                            println!("  {}", cells.join(" "));
                        }
                    }
                }
            }
            Ok(if orthogonal { 0 } else { 1 })
        }
        Command::Hadamard { sylvester, paley } => {
            let h = match (sylvester, paley) {
                (Some(k), _) => hadamard_sylvester(k)?,
                (None, Some(q)) => hadamard_paley(q)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string(&json!({
                        "order": h.order(),
                        "rows": h.rows().map(<[i8]>::to_vec).collect::<Vec<_>>(),
                    }))?
                ),
                Format::Text => {
                    println!("Hadamard matrix of order {} (H H^T = {} I verified)", h.order(), h.order());
                    print!("{}", matrix_text(&h));
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
