use clap::{Parser, Subcommand, ValueEnum};
use linfty_core::bch::{self, BchError};
use linfty_core::dold_kan::dold_kan_compare;
use linfty_core::dupont::{self, increasing_sequences, Dupont, IdentityCheck};
use linfty_core::io::{self, fixtures, IoError};
use linfty_core::linfty::{GVector, Presentation};
use linfty_core::mc::{is_thin, top_integral, Horn, Solver};
use linfty_core::nilmatrix::Representation;
use linfty_core::sample;
use linfty_core::suite::{self, SuiteConfig};
use std::fmt::Display;
use std::path::Path;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "linfty", version, about = "Exact Lie theory for nilpotent L-infinity algebras")]
struct Cli {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Polynomial degree bound for form identities.
    #[arg(long, global = true, default_value_t = 4)]
    max_degree: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the n-Jacobi rules and report the nilpotency index.
    CheckJacobi {
        /// Presentation file, or the name of a bundled fixture.
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Check ds+sd = Id-P, the Poincaré identities, Ps = 0 and sP = 0.
    VerifyContraction {
        /// Simplex dimension; all of 1..=3 when omitted.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check s² = 0, h^ih^j + h^jh^i = 0, the integration lemma and that
    /// gaugeification fixes the Dupont homotopy.
    VerifyGauge {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Fill a horn in the gauge-fixed nerve with its thin filler.
    FillHorn {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        missing: usize,
        /// Simplex files for the faces j != missing, in increasing j. A
        /// sampled horn is used when omitted.
        #[arg(long, num_args = 1..)]
        faces: Vec<String>,
    },
    /// Compare the gauge-fixed simplices of an abelian algebra with
    /// normalized cochain cocycles.
    DoldKan {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
    },
    /// Evaluate the generalized Campbell–Hausdorff series ρ_n.
    Bch {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
        /// JSON list of {symbol, coeff}; zero when omitted.
        #[arg(long)]
        mu: Option<String>,
        /// JSON list of {slot, value} entries; slots are increasing subsets
        /// of 1..=n.
        #[arg(long)]
        inputs: String,
    },
    /// Compose sampled edges through thin fillers.
    ComposeTable {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Check the flatness identity of ρ_2 in a matrix representation.
    VerifyMonodromy {
        #[arg(long, value_parser = ["heisenberg", "ut4"])]
        rep: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Run the acceptance criteria.
    RunAll {
        /// Restrict to these criteria (number or name).
        #[arg(long, num_args = 1..)]
        only: Vec<String>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

/// A usage or input problem (exit 2), as opposed to a failed check (exit 1).
struct UsageError(String);

impl<E: Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Outcome = Result<bool, UsageError>;

fn read(path: &str) -> Result<String, UsageError> {
    std::fs::read_to_string(path).map_err(|e| UsageError(format!("{path}: {e}")))
}

fn load_algebra(spec: &str) -> Result<Presentation, UsageError> {
    if Path::new(spec).exists() {
        return Ok(io::load_presentation(Path::new(spec))?);
    }
    fixtures::load(spec).map_err(|e| match e {
        IoError::UnknownFixture(_) => UsageError(format!("{spec}: no such file or bundled fixture")),
        other => other.into(),
    })
}

fn print_check(c: &IdentityCheck) -> bool {
    let status = if c.passed() { "PASS" } else { "FAIL" };
    println!("{status}  {}  ({} cases)", c.name, c.cases);
    for f in &c.failures {
        println!("      {} -> {}", f.input, f.residual);
    }
    c.passed()
}

fn dims(n: Option<usize>) -> Result<Vec<usize>, UsageError> {
    match n {
        Some(0) => Err(UsageError("--n must be at least 1".into())),
        Some(n) => Ok(vec![n]),
        None => Ok(vec![1, 2, 3]),
    }
}

fn check_jacobi(algebra: &str, n_max: Option<usize>) -> Outcome {
    let alg = load_algebra(algebra)?;
    let bound = n_max.unwrap_or_else(|| alg.default_jacobi_bound());
    let report = alg.check_jacobi(bound);
    match &report.failure {
        None => println!("PASS  {}: n-Jacobi for n <= {bound} ({} tuples)", alg.name(), report.tuples_checked),
        Some(f) => {
            let args: Vec<&str> = f.tuple.iter().map(|&i| alg.generators()[i].symbol.as_str()).collect();
            println!("FAIL  {}: Jacobi rule at ({}) has residual {}", alg.name(), args.join(", "), f.residual.render(&alg));
        }
    }
    let filtration = alg.lower_central(64);
    match filtration.index {
        Some(ix) => println!("nilpotency index {ix}, filtration dimensions {:?}", filtration.dims()),
        None => println!("not nilpotent within {} steps", filtration.cap),
    }
    Ok(report.passed())
}

fn verify_contraction(n: Option<usize>, d: u32) -> Outcome {
    let mut ok = true;
    for n in dims(n)? {
        ok &= print_check(&dupont::check_contraction(&Dupont, n, d)?);
        for i in 0..=n {
            ok &= print_check(&dupont::check_poincare(n, i, d)?);
        }
        ok &= print_check(&dupont::check_ps_zero(n, d)?);
        ok &= print_check(&dupont::check_sp_zero(n, d)?);
    }
    Ok(ok)
}

fn verify_gauge(n: Option<usize>, d: u32) -> Outcome {
    let mut ok = true;
    for n in dims(n)? {
        ok &= print_check(&dupont::check_s_squared(&Dupont, n, d)?);
        for i in 0..=n {
            for j in i..=n {
                ok &= print_check(&dupont::check_anticommutation(n, i, j, d)?);
            }
        }
        for len in 1..=3.min(n + 1) {
            for seq in increasing_sequences(n, len) {
                ok &= print_check(&dupont::check_lemma_i(n, &seq, d)?);
            }
        }
        ok &= print_check(&dupont::check_gaugeify_fixes(&Dupont, n, d)?);
    }
    Ok(ok)
}

fn fill_horn(algebra: &str, n: usize, missing: usize, faces: &[String], seed: u64) -> Outcome {
    let alg = load_algebra(algebra)?;
    let solver = Solver::new(&alg)?;
    let horn = if faces.is_empty() {
        let alpha = sample::gamma_simplex(&solver, n, &mut sample::rng(seed))?;
        Horn::from_simplex(&alpha, missing)?
    } else {
        let parsed = faces
            .iter()
            .map(|path| Ok(io::parse_simplex(&alg, &read(path)?, path)?))
            .collect::<Result<Vec<_>, UsageError>>()?;
        Horn::new(n, missing, parsed)?
    };
    let filler = solver.fill_horn_gamma(&horn)?;
    println!("{}", io::render_simplex(&alg, &filler));
    let thin = is_thin(&filler)?;
    let matches = Horn::from_simplex(&filler, missing)? == horn;
    let gauge = solver.is_gamma_simplex(&filler)?;
    println!("thin: {thin} (top integral {})", top_integral(&filler)?.render(&alg));
    println!("faces match: {matches}");
    println!("gauge-fixed Maurer-Cartan: {gauge}");
    Ok(thin && matches && gauge)
}

fn dold_kan(algebra: &str, n: usize, d: u32) -> Outcome {
    let alg = load_algebra(algebra)?;
    let r = dold_kan_compare(&alg, n, d.min(2))?;
    println!("n = {n}: brute-force dimension {}, Whitney dimension {}, cocycle dimension {}", r.brute_dim, r.gamma_dim, r.cocycle_dim);
    println!("all solutions Whitney: {}; integration bijective: {}", r.all_whitney, r.bijective);
    for (alpha, cochain) in &r.basis {
        let entries: Vec<String> = cochain
            .iter()
            .map(|(seq, v)| format!("I{}={}", seq.iter().map(|s| s.to_string()).collect::<String>(), v.render(&alg)))
            .collect();
        println!("  {}  ->  {}", alpha.render(&alg), entries.join(", "));
    }
    println!("{}", if r.passed() { "PASS" } else { "FAIL" });
    Ok(r.passed())
}

fn run_bch(algebra: &str, n: usize, mu: Option<&str>, inputs: &str) -> Outcome {
    let alg = load_algebra(algebra)?;
    let solver = Solver::new(&alg)?;
    let mu = match mu {
        Some(path) => io::parse_vector_json(&alg, &read(path)?, path)?,
        None => GVector::zero(),
    };
    let inputs = io::parse_ch_inputs(&alg, &read(inputs)?, inputs)?;
    if n == 0 {
        return Err(UsageError("--n must be at least 1".into()));
    }
    let result = bch::generalized_ch(&solver, n, &mu, &inputs)?;
    println!("{}", result.value.render(&alg));
    Ok(true)
}

fn compose_table(algebra: &str, samples: usize, seed: u64) -> Outcome {
    let alg = load_algebra(algebra)?;
    let solver = Solver::new(&alg)?;
    let rep = Representation::standard(alg.name(), &alg).ok();
    let mut rng = sample::rng(seed);
    let mut ok = true;
    for _ in 0..samples {
        let x = sample::vector_of_degree(&alg, 0, &mut rng);
        let y = sample::vector_of_degree(&alg, 0, &mut rng);
        let z = sample::vector_of_degree(&alg, 0, &mut rng);
        let zero = GVector::zero();
        let xy = bch::compose(&solver, &zero, &x, &y).map_err(|e| match e {
            BchError::NegativeDegrees => UsageError("compose-table needs an algebra without negative degrees".into()),
            other => other.into(),
        })?;
        let assoc = bch::compose(&solver, &zero, &bch::compose(&solver, &zero, &z, &x)?, &y)?
            == bch::compose(&solver, &zero, &z, &xy)?;
        let group = rep.as_ref().map(|r| r.apply(&xy).exp() == r.apply(&y).exp().mul(&r.apply(&x).exp()));
        println!("compose({}, {}) = {}", x.render(&alg), y.render(&alg), xy.render(&alg));
        match group {
            Some(g) => println!("  associative: {assoc}; matrix group law: {g}"),
            None => println!("  associative: {assoc}"),
        }
        ok &= assoc && group.unwrap_or(true);
    }
    Ok(ok)
}

fn verify_monodromy(rep: &str, samples: usize, seed: u64) -> Outcome {
    let report = bch::verify_monodromy(rep, samples, seed)?;
    for f in &report.failures {
        println!("FAIL  {f}");
    }
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!("{status}  {rep}: exp(x2) = exp(x1) exp(rho2(x1, x2, 0)) on {} samples", report.samples);
    Ok(report.passed())
}

fn run_all(only: &[String], samples: usize, seed: u64, max_degree: u32) -> Outcome {
    let ids = if only.is_empty() {
        suite::CRITERIA.iter().map(|(id, _)| *id).collect()
    } else {
        only.iter().map(|s| suite::criterion_id(s)).collect::<Result<Vec<_>, _>>()?
    };
    let cfg = SuiteConfig { seed, max_degree, samples };
    let mut ok = true;
    for id in ids {
        let outcome = suite::run_criterion(id, &cfg)?;
        println!("{}", outcome.render());
        ok &= outcome.passed();
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Format::Text = cli.format;
    let (seed, d) = (cli.seed, cli.max_degree);
    let outcome = match &cli.command {
        Command::CheckJacobi { algebra, n_max } => check_jacobi(algebra, *n_max),
        Command::VerifyContraction { n } => verify_contraction(*n, d),
        Command::VerifyGauge { n } => verify_gauge(*n, d),
        Command::FillHorn { algebra, n, missing, faces } => fill_horn(algebra, *n, *missing, faces, seed),
        Command::DoldKan { algebra, n } => dold_kan(algebra, *n, d),
        Command::Bch { algebra, n, mu, inputs } => run_bch(algebra, *n, mu.as_deref(), inputs),
        Command::ComposeTable { algebra, samples } => compose_table(algebra, *samples, seed),
        Command::VerifyMonodromy { rep, samples } => verify_monodromy(rep, *samples, seed),
        Command::RunAll { only, samples } => run_all(only, *samples, seed, d),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
