//! Command-line surface: Verlinde dimension tables, the dimension-identity
//! suite, octonion verification, and Dynkin indices.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 certification failure.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use g2theta::error::Error;
use g2theta::octonion::{
    build_structure_constants, derivation_algebra, trilinear_omega, BasisId, Lemma, Octonion,
    ProductEntry,
};
use g2theta::rootsystem::{AlgebraType, RootSystem};
use g2theta::trilinear::AlternatingForm3;
use g2theta::verlinde::{
    identity_suite_with_cap, verlinde_dim_with_cap, IdentityReport, DEFAULT_PRECISION_CAP,
};

#[derive(Parser)]
#[command(name = "g2theta", version, about = "Verlinde dimensions and octonion verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certified Verlinde dimensions for a genus or genus range
    Verlinde(VerlindeArgs),
    /// Dimension-identity suite over a genus range
    Identities(IdentitiesArgs),
    /// Structure-table, lemma, Engel-pairing and derivation checks
    OctonionVerify(OctonionVerifyArgs),
    /// Dynkin index of an irreducible highest-weight representation
    Dynkin(DynkinArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args)]
struct VerlindeArgs {
    /// Algebra: A<n> (n >= 1) or G2
    #[arg(long)]
    algebra: String,
    /// Level, at least 1
    #[arg(long)]
    level: u64,
    /// Single genus, at least 2
    #[arg(long, conflicts_with = "genus_range")]
    genus: Option<u64>,
    /// Inclusive genus range lo..hi
    #[arg(long, value_name = "LO..HI")]
    genus_range: Option<String>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct IdentitiesArgs {
    /// Inclusive genus range lo..hi, lo >= 2
    #[arg(long, value_name = "LO..HI")]
    genus_range: String,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct OctonionVerifyArgs {
    /// Emit a structured JSON report
    #[arg(long)]
    json: bool,
    /// Corrupt one B2 table entry before verification (negative-control hook)
    #[arg(long, hide = true, value_name = "I,J")]
    tamper: Option<String>,
}

#[derive(Args)]
struct DynkinArgs {
    /// Algebra: A<n> (n >= 1) or G2
    #[arg(long)]
    algebra: String,
    /// Fundamental-weight coordinates, comma separated nonnegative integers
    #[arg(long)]
    weight: String,
}

/// Row of the verlinde subcommand output.
#[derive(Serialize)]
struct OutputRecord {
    algebra: String,
    level: u64,
    genus: u64,
    dimension: String,
    method: &'static str,
    residual: f64,
    precision_bits: usize,
}

const CSV_HEADER: &str = "algebra,level,genus,dimension,method,residual,precision_bits";

const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CERTIFICATION: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verlinde(args) => cmd_verlinde(args),
        Command::Identities(args) => cmd_identities(args),
        Command::OctonionVerify(args) => cmd_octonion_verify(args),
        Command::Dynkin(args) => cmd_dynkin(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Certification { .. } => EXIT_CERTIFICATION,
                Error::InvalidArgument(_) => EXIT_USAGE,
                _ => EXIT_VERIFICATION,
            })
        }
    }
}

fn precision_cap() -> Result<usize, Error> {
    match std::env::var("THETA_PRECISION_CAP") {
        Err(_) => Ok(DEFAULT_PRECISION_CAP),
        Ok(s) => s
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad THETA_PRECISION_CAP value {s:?}"))),
    }
}

fn parse_genus_range(s: &str) -> Result<(u64, u64), Error> {
    let parsed = s.split_once("..").and_then(|(lo, hi)| {
        Some((lo.trim().parse::<u64>().ok()?, hi.trim().parse::<u64>().ok()?))
    });
    parsed.ok_or_else(|| Error::InvalidArgument(format!("bad genus range {s:?}, expected lo..hi")))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        None => {
            std::io::stdout()
                .write_all(content.as_bytes())
                .map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))
        }
        Some(path) => fs::write(path, content)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
    }
}

fn cmd_verlinde(args: VerlindeArgs) -> Result<u8, Error> {
    let algebra: AlgebraType = args.algebra.parse()?;
    let (lo, hi) = match (args.genus, &args.genus_range) {
        (Some(g), None) => (g, g),
        (None, Some(r)) => parse_genus_range(r)?,
        _ => {
            return Err(Error::InvalidArgument(
                "exactly one of --genus and --genus-range is required".into(),
            ))
        }
    };
    if lo < 2 || lo > hi {
        return Err(Error::InvalidArgument(format!(
            "genus range must satisfy 2 <= lo <= hi, got {lo}..{hi}"
        )));
    }
    let cap = precision_cap()?;
    let mut records = Vec::new();
    for genus in lo..=hi {
        let r = verlinde_dim_with_cap(algebra, args.level, genus, cap)?;
        records.push(OutputRecord {
            algebra: algebra.to_string(),
            level: r.level,
            genus: r.genus,
            dimension: r.dimension.to_string(),
            method: "verlinde",
            residual: r.residual,
            precision_bits: r.precision_bits,
        });
    }
    let content = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&records)
                .map_err(|e| Error::InternalArithmetic(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for r in &records {
                s.push_str(&format!(
                    "{},{},{},{},{},{:e},{}\n",
                    r.algebra, r.level, r.genus, r.dimension, r.method, r.residual, r.precision_bits
                ));
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "{:<8} {:>5} {:>5} {:>20} {:>10} {:>14}\n",
                "algebra", "level", "genus", "dimension", "method", "precision"
            );
            for r in &records {
                s.push_str(&format!(
                    "{:<8} {:>5} {:>5} {:>20} {:>10} {:>14}\n",
                    r.algebra, r.level, r.genus, r.dimension, r.method, r.precision_bits
                ));
            }
            s
        }
    };
    emit(&args.out, &content)?;
    Ok(0)
}

fn cmd_identities(args: IdentitiesArgs) -> Result<u8, Error> {
    let (lo, hi) = parse_genus_range(&args.genus_range)?;
    if lo < 2 || lo > hi {
        return Err(Error::InvalidArgument(format!(
            "genus range must satisfy 2 <= lo <= hi, got {lo}..{hi}"
        )));
    }
    let report: IdentityReport = identity_suite_with_cap(lo, hi, precision_cap()?)?;
    match args.format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report)
                    .map_err(|e| Error::InternalArithmetic(e.to_string()))?
            );
        }
        Format::Csv => {
            println!("genus,identity,left,right,passed");
            for r in &report.records {
                println!("{},{},{},{},{}", r.genus, r.name, r.left, r.right, r.passed);
            }
        }
        Format::Table => {
            for r in &report.records {
                let mark = if r.passed { "pass" } else { "FAIL" };
                println!("g={:<3} {:<40} {} = {}  [{mark}]", r.genus, r.name, r.left, r.right);
            }
        }
    }
    if report.passed {
        Ok(0)
    } else {
        let first = report.records.iter().find(|r| !r.passed).expect("failing record");
        eprintln!("identity failed at genus {}: {}", first.genus, first.name);
        Ok(EXIT_VERIFICATION)
    }
}

#[derive(Serialize)]
struct OctonionReport {
    tables_consistent: bool,
    lemma22_passed: bool,
    lemma23_passed: bool,
    engel_proportional: bool,
    engel_nondegenerate: bool,
    derivation_dimension: usize,
    sl3_stabilizer_dimension: usize,
    so4_stabilizer_dimension: usize,
    failures: Vec<String>,
}

fn octonion_report(tamper: Option<(usize, usize)>) -> Result<OctonionReport, Error> {
    let mut failures = Vec::new();
    let mut tables_consistent = true;
    for basis in [BasisId::B0, BasisId::B1, BasisId::B2, BasisId::B3] {
        let mut sc = build_structure_constants(basis)?;
        if basis == BasisId::B2 {
            if let Some((i, j)) = tamper {
                let mut bogus = ProductEntry::zero();
                bogus.real = g2theta::numfield::GaussSqrt2::from_int(7);
                sc = sc.with_product(i, j, bogus);
            }
        }
        if let Err(e) = sc.verify_against_source() {
            tables_consistent = false;
            failures.push(e.to_string());
        }
    }
    let lemma22 = g2theta::octonion::verify_lemma_tables(Lemma::Lemma22)?;
    let lemma23 = g2theta::octonion::verify_lemma_tables(Lemma::Lemma23)?;
    for f in lemma22.failures.iter().chain(&lemma23.failures) {
        failures.push(format!(
            "omega mismatch on triple {:?}: expected {}, computed {}",
            f.triple, f.expected, f.computed
        ));
    }
    // Engel pairing: exactly proportional to the Gram matrix of Q
    let omega = AlternatingForm3::from_octonion_omega(BasisId::B1)?;
    let engel = omega.engel_pairing()?;
    let mut gram = vec![vec![g2theta::numfield::GaussSqrt2::zero(); 7]; 7];
    for a in 1..=7 {
        for b in 1..=7 {
            gram[a - 1][b - 1] = Octonion::basis_vector(BasisId::B1, a)
                .quadratic_form(&Octonion::basis_vector(BasisId::B1, b))?;
        }
    }
    // Q(y1, y4) = 1 fixes the scalar
    let lambda = engel.at(0, 3).clone();
    let mut engel_proportional = true;
    for (r, row) in gram.iter().enumerate() {
        for (c, q) in row.iter().enumerate() {
            if engel.at(r, c) != &(lambda.clone() * q.clone()) {
                engel_proportional = false;
                failures.push(format!("Engel pairing not proportional to Q at ({r}, {c})"));
            }
        }
    }
    let engel_nondegenerate = omega.is_nondegenerate()?;
    if !engel_nondegenerate {
        failures.push("Engel pairing is degenerate".into());
    }
    let sc2 = build_structure_constants(BasisId::B2)?;
    let der = derivation_algebra(&sc2);
    der.leibniz_holds()?;
    if !der.closed_under_bracket() {
        failures.push("derivations do not close under bracket".into());
    }
    let sl3 = der.stabilizer_subalgebra(&[vec![1, 2, 3], vec![4, 5, 6]]);
    let sc3 = build_structure_constants(BasisId::B3)?;
    let der3 = derivation_algebra(&sc3);
    let so4 = der3.stabilizer_subalgebra(&[vec![1, 2, 3, 4], vec![5, 6, 7]]);
    for (name, got, want) in [
        ("derivation algebra", der.dimension(), 14),
        ("sl3 stabilizer", sl3.dimension(), 8),
        ("so4 stabilizer", so4.dimension(), 6),
    ] {
        if got != want {
            failures.push(format!("{name} has dimension {got}, expected {want}"));
        }
    }
    // cross-check omega is defined identically through the raw product
    let check = trilinear_omega(
        &Octonion::basis_vector(BasisId::B1, 2),
        &Octonion::basis_vector(BasisId::B1, 3),
        &Octonion::basis_vector(BasisId::B1, 4),
    )?;
    if check != omega.evaluate(2, 3, 4) {
        failures.push("trilinear form disagrees with the product definition".into());
    }
    Ok(OctonionReport {
        tables_consistent,
        lemma22_passed: lemma22.passed,
        lemma23_passed: lemma23.passed,
        engel_proportional,
        engel_nondegenerate,
        derivation_dimension: der.dimension(),
        sl3_stabilizer_dimension: sl3.dimension(),
        so4_stabilizer_dimension: so4.dimension(),
        failures,
    })
}

fn cmd_octonion_verify(args: OctonionVerifyArgs) -> Result<u8, Error> {
    let tamper = match &args.tamper {
        None => None,
        Some(s) => {
            let pair = s.split_once(',').and_then(|(i, j)| {
                Some((i.trim().parse::<usize>().ok()?, j.trim().parse::<usize>().ok()?))
            });
            let (i, j) = pair.ok_or_else(|| {
                Error::InvalidArgument(format!("bad tamper spec {s:?}, expected i,j"))
            })?;
            if !(1..=7).contains(&i) || !(1..=7).contains(&j) {
                return Err(Error::InvalidArgument("tamper indices must be 1..=7".into()));
            }
            Some((i, j))
        }
    };
    let report = octonion_report(tamper)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report)
                .map_err(|e| Error::InternalArithmetic(e.to_string()))?
        );
    } else {
        let lemmas = if report.lemma22_passed && report.lemma23_passed { "pass" } else { "FAIL" };
        println!(
            "derivations: {}, sl3-stabilizer: {}, so4-stabilizer: {}, lemmas: {}",
            report.derivation_dimension,
            report.sl3_stabilizer_dimension,
            report.so4_stabilizer_dimension,
            lemmas
        );
        for f in &report.failures {
            println!("FAIL: {f}");
        }
    }
    if report.failures.is_empty() {
        Ok(0)
    } else {
        Ok(EXIT_VERIFICATION)
    }
}

fn cmd_dynkin(args: DynkinArgs) -> Result<u8, Error> {
    let algebra: AlgebraType = args.algebra.parse()?;
    let system = RootSystem::new(algebra)?;
    let coeffs: Vec<i64> = args
        .weight
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .ok()
                .filter(|&n| n >= 0)
                .ok_or_else(|| Error::InvalidArgument(format!("bad weight coordinate {c:?}")))
        })
        .collect::<Result<_, _>>()?;
    let weight = system.weight_from_fundamental(&coeffs)?;
    let index = system.dynkin_index(&weight)?;
    println!("{index}");
    Ok(0)
}
