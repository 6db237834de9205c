//! `loophopf`: build, verify and classify Hopf structures on `k↻_N`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input.

use clap::{Parser, Subcommand, ValueEnum};
use loop_hopf::scalars::{carry_count, legendre_sum, lucas_binom};
use loop_hopf::table_file::{from_json, to_json};
use loop_hopf::{
    antipode, build_dual_cyclic, build_graded, build_lnd, build_nc2, integral, verify, Classification, Error,
    FamilyParams, Field, FieldElement, HopfReport, LambdaSeq, LoopElement, MultTable, Prime,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "loophopf", version, about = "Hopf structures on truncated loop path coalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Ld,
    Graded,
    DualCyclic,
    Nc2,
}

#[derive(Subcommand)]
enum Command {
    /// C(m+n, n) mod p with its Legendre sums and carry count
    Binom {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Write the table of a named family
    Build {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 1)]
        ext: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the Hopf axioms
    Verify {
        file: PathBuf,
        #[arg(long)]
        report: bool,
    },
    /// Print L(n,d) for a commutative Hopf table
    Classify { file: PathBuf },
    /// Coalgebra endomorphism given by a λ-sequence
    Endo {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        ext: usize,
        #[arg(long = "N")]
        bound: usize,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        lambda: Vec<u32>,
        #[arg(long, group = "mode")]
        apply: Option<usize>,
        #[arg(long, group = "mode", value_delimiter = ',', num_args = 1..)]
        compose: Option<Vec<u32>>,
        #[arg(long, group = "mode")]
        invert: bool,
    },
    /// Antipode matrix, column m = S(a_m)
    Antipode { file: PathBuf },
    /// The explicit product t, its counit, and the dimension of the integrals
    Integral { file: PathBuf },
}

enum Failure {
    Invalid(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::VerificationFailed(msg) => Failure::Verification(msg),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

type CliResult = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Binom { p, m, n } => binom(p, m, n),
        Command::Build { family, p, n, d, ext, out } => build(family, p, n, d, ext, &out),
        Command::Verify { file, report } => verify_cmd(&file, report),
        Command::Classify { file } => classify_cmd(&file),
        Command::Endo { p, ext, bound, lambda, apply, compose, invert } => {
            endo(p, ext, bound, &lambda, apply, compose.as_deref(), invert)
        }
        Command::Antipode { file } => antipode_cmd(&file),
        Command::Integral { file } => integral_cmd(&file),
    }
}

fn binom(p: u64, m: u64, n: u64) -> CliResult {
    let prime = Prime::new(p)?;
    if m == 0 || n == 0 {
        return Err(Failure::Invalid("m and n must be positive".into()));
    }
    let c = lucas_binom(m + n, n, prime)?;
    println!("binom={c} carries={}", carry_count(m, n, prime));
    println!(
        "legendre m+n={} m={} n={}",
        legendre_sum(m + n, prime),
        legendre_sum(m, prime),
        legendre_sum(n, prime)
    );
    Ok(())
}

fn required<T>(v: Option<T>, flag: &str) -> std::result::Result<T, Failure> {
    v.ok_or_else(|| Failure::Invalid(format!("--{flag} is required for this family")))
}

fn build(family: Family, p: Option<u64>, n: Option<usize>, d: Option<usize>, ext: usize, out: &Path) -> CliResult {
    let table = match family {
        Family::Ld => {
            let params = FamilyParams::new(Prime::new(required(p, "p")?)?, required(n, "n")?, required(d, "d")?, ext)?;
            build_lnd(&params)?
        }
        Family::Graded => {
            let field = field(required(p, "p")?, ext)?;
            build_graded(&field, required(n, "n")?)?
        }
        Family::DualCyclic => {
            let field = field(required(p, "p")?, ext)?;
            build_dual_cyclic(&field, required(n, "n")?)?
        }
        Family::Nc2 => {
            if n.is_some_and(|n| n != 2) || d.is_some() {
                return Err(Failure::Invalid("nc2 takes no --d and has n = 2".into()));
            }
            build_nc2(&field(p.unwrap_or(2), ext)?)?
        }
    };
    std::fs::write(out, to_json(&table)).map_err(|e| Failure::Invalid(format!("{}: {e}", out.display())))?;
    let report = verify(&table);
    if !report.is_hopf() {
        return Err(Failure::Verification(format!("constructed table is not a Hopf algebra\n{report}")));
    }
    Ok(())
}

fn field(p: u64, ext: usize) -> std::result::Result<Field, Failure> {
    Ok(Field::builtin(Prime::new(p)?, ext)?)
}

fn load(path: &Path) -> std::result::Result<MultTable, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    Ok(from_json(&text)?)
}

fn first_failure(report: &HopfReport) -> String {
    let checks = [
        ("associativity", &report.bialgebra.associativity),
        ("unit", &report.bialgebra.unit),
        ("comult-multiplicative", &report.bialgebra.comult_multiplicative),
        ("counit-multiplicative", &report.bialgebra.counit_multiplicative),
        ("antipode-left", &report.antipode_left),
        ("antipode-right", &report.antipode_right),
    ];
    checks
        .iter()
        .find(|(_, c)| !c.passed())
        .map(|(name, c)| format!("not a Hopf algebra: {name} {c}"))
        .unwrap_or_default()
}

fn verify_cmd(path: &Path, full: bool) -> CliResult {
    let table = load(path)?;
    let report = verify(&table);
    if full {
        print!("{report}");
    } else {
        println!("hopf: {}", if report.is_hopf() { "PASS" } else { "FAIL" });
    }
    if report.is_hopf() {
        Ok(())
    } else {
        Err(Failure::Verification(first_failure(&report)))
    }
}

fn classify_cmd(path: &Path) -> CliResult {
    let table = load(path)?;
    let report = verify(&table);
    if !report.is_hopf() {
        return Err(Failure::Verification(first_failure(&report)));
    }
    match report.classification.expect("computed for Hopf tables") {
        c @ Classification::Lnd { .. } => {
            println!("{c}");
            Ok(())
        }
        other => Err(Failure::Verification(other.to_string())),
    }
}

fn elements(field: &Field, values: &[u32]) -> std::result::Result<Vec<FieldElement>, Failure> {
    values.iter().map(|&v| field.element(v).map_err(Failure::from)).collect()
}

fn render_seq(seq: &LambdaSeq, bound: usize) -> String {
    let mut shown: Vec<String> = (1..bound.max(2)).map(|i| seq.lambda(i).to_string()).collect();
    while shown.len() > 1 && shown.last().is_some_and(|s| s == "0") {
        shown.pop();
    }
    shown.join(",")
}

fn endo(
    p: u64,
    ext: usize,
    bound: usize,
    lambda: &[u32],
    apply: Option<usize>,
    compose: Option<&[u32]>,
    invert: bool,
) -> CliResult {
    let field = field(p, ext)?;
    if bound == 0 {
        return Err(Failure::Invalid("N must be positive".into()));
    }
    let seq = LambdaSeq::new(&field, elements(&field, lambda)?)?;
    if let Some(m) = apply {
        let x = LoopElement::basis(&field, bound, m)?;
        println!("{}", seq.apply(&x));
    } else if let Some(other) = compose {
        let g = LambdaSeq::new(&field, elements(&field, other)?)?;
        println!("{}", render_seq(&seq.compose(&g)?, bound));
    } else if invert {
        match seq.invert(bound) {
            Ok(inv) => println!("{}", render_seq(&inv, bound)),
            Err(Error::NotInvertible) => {
                return Err(Failure::Verification("not an automorphism: λ_1 = 0".into()));
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        print!("{}", seq.matrix(bound));
    }
    Ok(())
}

fn antipode_cmd(path: &Path) -> CliResult {
    let table = load(path)?;
    let report = verify(&table);
    if !report.bialgebra.passed() {
        return Err(Failure::Verification(first_failure(&report)));
    }
    let s = antipode(&table);
    if !s.is_two_sided() {
        return Err(Failure::Verification(format!(
            "no antipode: left {}, right {}",
            s.left, s.right
        )));
    }
    print!("{}", s.matrix());
    Ok(())
}

fn integral_cmd(path: &Path) -> CliResult {
    let table = load(path)?;
    let report = verify(&table);
    if !report.is_hopf() {
        return Err(Failure::Verification(first_failure(&report)));
    }
    let data = integral(&table);
    println!("t = {}, eps(t) = {}, dim ∫ = {}", data.explicit, data.explicit_counit, data.dim());
    println!("semisimple: {}", if data.has_nonzero_counit() { "yes" } else { "no" });
    Ok(())
}
