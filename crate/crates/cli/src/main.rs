use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use confspace::algebra::GradedAlgebra;
use confspace::groebner::{buchberger_check_with_fallback, gb_hilbert, TermOrder};
use confspace::models::{
    arnold_algebra, b_presentation, punctured_plane_algebra, so3_mod2_presentation, sphere_mod2_presentation,
    surface_cohomology, torus_reduced_presentation, torus_xy_ideal, totaro_presentation, Coordinates,
};
use confspace::presentation::{quotient_with, AlgebraPresentation, PresentationFile, QuotientOptions};
use confspace::tc::{sweep, tc_report, LowerMethod, Status, TcOptions};
use confspace::zcl::{
    genus_certificate, punctured_mod_ideal_certificate, punctured_mod_ideal_quotient, sphere_certificate,
    torus_certificate, zcl_exact, BoundReport, ZclOptions,
};
use confspace::{Error, Field, FieldKind, Gf2, Rational};

#[derive(Parser)]
#[command(name = "confspace", version, about = "Cohomology models and topological complexity of surface configuration spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a model algebra and print its Hilbert series.
    Build {
        #[command(flatten)]
        model: ModelArgs,
        /// Print the presentation as JSON instead of the summary.
        #[arg(long)]
        dump: bool,
        #[arg(long)]
        json: bool,
    },
    /// Zero-divisor cup length of a model algebra.
    Zcl {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum, default_value = "exact")]
        method: ZclMethod,
        #[arg(long, default_value_t = 64)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check that the torus ideal generators form an exterior Gröbner basis.
    GroebnerCheck {
        #[arg(long, value_enum, default_value = "torus-ideal")]
        model: GbModel,
        #[arg(long)]
        n: usize,
        /// `default`, `reverse`, or generator names from lowest to highest priority.
        #[arg(long, default_value = "default")]
        order: String,
        #[arg(long)]
        json: bool,
    },
    /// Topological complexity report.
    Tc {
        #[arg(long, default_value_t = 0)]
        g: u32,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, value_enum, default_value = "certificate")]
        method: ZclMethod,
        /// Report every (g, n, m) up to the given maxima.
        #[arg(long, num_args = 3, value_names = ["GMAX", "NMAX", "MMAX"])]
        sweep: Option<Vec<u32>>,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelKind {
    Surface,
    Arnold,
    PuncturedPlane,
    Totaro,
    BSigma,
    SphereMod2,
    So3Mod2,
    PuncturedModIdeal,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Q,
    Gf2,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoordArg {
    Standard,
    Reduced,
}

#[derive(Clone, Copy, ValueEnum)]
enum ZclMethod {
    Exact,
    Certificate,
}

#[derive(Clone, Copy, ValueEnum)]
enum GbModel {
    TorusIdeal,
}

#[derive(Args)]
struct ModelArgs {
    #[arg(long, value_enum, required_unless_present = "presentation")]
    model: Option<ModelKind>,
    /// Load a presentation from a JSON file instead of a named model.
    #[arg(long, conflicts_with = "model")]
    presentation: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    g: u32,
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Number of punctures for the punctured plane.
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, value_enum, default_value = "q")]
    field: FieldArg,
    #[arg(long, value_enum, default_value = "reduced")]
    coords: CoordArg,
    /// Largest number of free monomials per degree.
    #[arg(long, default_value_t = confspace::presentation::DEFAULT_MONOMIAL_BUDGET)]
    budget: usize,
}

enum AnyPresentation {
    Q(AlgebraPresentation<Rational>),
    Gf2(AlgebraPresentation<Gf2>),
}

fn by_field(
    field: FieldArg,
    q: impl FnOnce() -> confspace::Result<AlgebraPresentation<Rational>>,
    f2: impl FnOnce() -> confspace::Result<AlgebraPresentation<Gf2>>,
) -> confspace::Result<AnyPresentation> {
    Ok(match field {
        FieldArg::Q => AnyPresentation::Q(q()?),
        FieldArg::Gf2 => AnyPresentation::Gf2(f2()?),
    })
}

fn presentation(args: &ModelArgs) -> confspace::Result<AnyPresentation> {
    if let Some(path) = &args.presentation {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let file = PresentationFile::parse(&text)?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        return Ok(match file.field {
            FieldKind::Rational => AnyPresentation::Q(file.to_presentation(&name)?),
            FieldKind::Gf2 => AnyPresentation::Gf2(file.to_presentation(&name)?),
        });
    }
    let coords = match args.coords {
        CoordArg::Standard => Coordinates::Standard,
        CoordArg::Reduced => Coordinates::Reduced,
    };
    let (g, n, k) = (args.g, args.n, args.k);
    match args.model.expect("clap requires a model") {
        ModelKind::Surface => by_field(args.field, || surface_cohomology(g), || surface_cohomology(g)),
        ModelKind::Arnold => by_field(args.field, || arnold_algebra(n), || arnold_algebra(n)),
        ModelKind::PuncturedPlane => by_field(args.field, || punctured_plane_algebra(n, k), || punctured_plane_algebra(n, k)),
        ModelKind::Totaro => {
            if g == 1 && matches!(coords, Coordinates::Reduced) {
                Ok(AnyPresentation::Q(torus_reduced_presentation(n)?))
            } else {
                Ok(AnyPresentation::Q(totaro_presentation(g, n)?.0.presentation))
            }
        }
        ModelKind::BSigma => Ok(AnyPresentation::Q(b_presentation(g.max(2), n, coords)?)),
        ModelKind::SphereMod2 => Ok(AnyPresentation::Gf2(sphere_mod2_presentation(n)?)),
        ModelKind::So3Mod2 => Ok(AnyPresentation::Gf2(so3_mod2_presentation()?)),
        ModelKind::PuncturedModIdeal => {
            Ok(AnyPresentation::Q(punctured_mod_ideal_quotient(n, QuotientOptions { monomial_budget: args.budget })?.presentation))
        }
    }
}

fn summary<F: Field>(p: &AlgebraPresentation<F>, a: &GradedAlgebra<F>) -> serde_json::Value {
    serde_json::json!({
        "name": p.name,
        "field": F::KIND,
        "generators": p.generators.iter().map(|g| serde_json::json!({"name": g.name, "degree": g.degree})).collect::<Vec<_>>(),
        "relations": p.relations.len(),
        "hilbert_series": a.hilbert_series(),
        "dimension": a.dim(),
    })
}

fn build<F: Field>(p: &AlgebraPresentation<F>, budget: usize, dump: bool, json: bool) -> confspace::Result<()> {
    if dump {
        println!("{}", PresentationFile::from_presentation(p).to_json());
        return Ok(());
    }
    let q = quotient_with(p, QuotientOptions { monomial_budget: budget })?;
    let a = q.algebra();
    if json {
        println!("{}", serde_json::to_string_pretty(&summary(p, a))?);
    } else {
        println!("model: {}", p.name);
        println!("field: {}", if F::KIND == FieldKind::Rational { "Q" } else { "GF2" });
        println!("generators: {}", p.generators.len());
        println!("relations: {}", p.relations.len());
        println!("hilbert series: {:?}", a.hilbert_series());
        println!("dimension: {}", a.dim());
    }
    Ok(())
}

fn exact<F: Field>(p: &AlgebraPresentation<F>, budget: usize, cap: usize) -> confspace::Result<BoundReport> {
    let q = quotient_with(p, QuotientOptions { monomial_budget: budget })?;
    let a: &Arc<GradedAlgebra<F>> = q.algebra();
    zcl_exact(a, ZclOptions { cap, ..Default::default() })
}

fn certificate(args: &ModelArgs) -> confspace::Result<BoundReport> {
    let opts = QuotientOptions { monomial_budget: args.budget };
    let n = args.n;
    match args.model {
        Some(ModelKind::Totaro) if args.g == 1 => Ok(torus_certificate(n, opts)?.report()),
        Some(ModelKind::BSigma) => Ok(genus_certificate(args.g.max(2), n, opts)?.report()),
        Some(ModelKind::SphereMod2) => Ok(sphere_certificate(n, opts)?.report()),
        Some(ModelKind::PuncturedModIdeal) => Ok(punctured_mod_ideal_certificate(n, opts)?.report()),
        _ => Err(Error::Unsupported(
            "certificates exist for totaro (g=1), b-sigma, sphere-mod2 and punctured-mod-ideal".into(),
        )),
    }
}

fn print_bound(r: &BoundReport, json: bool) -> confspace::Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(r)?);
        return Ok(());
    }
    let quantity = serde_json::to_value(r.quantity)?;
    println!("algebra: {}", r.algebra);
    println!("{}: {}{}", quantity.as_str().unwrap_or("zcl"), if r.exact { "" } else { "≥ " }, r.value);
    println!("method: {}", r.method);
    if let Some(w) = &r.witness {
        println!("witness: {w}");
    }
    if let Some(f) = &r.factors {
        for (i, x) in f.iter().enumerate() {
            println!("factor {}: {x}", i + 1);
        }
    }
    Ok(())
}

fn run(cli: Cli) -> confspace::Result<ExitCode> {
    match cli.command {
        Command::Build { model, dump, json } => {
            match presentation(&model)? {
                AnyPresentation::Q(p) => build(&p, model.budget, dump, json)?,
                AnyPresentation::Gf2(p) => build(&p, model.budget, dump, json)?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Zcl { model, method, cap, json } => {
            let report = match method {
                ZclMethod::Certificate => certificate(&model)?,
                ZclMethod::Exact => match presentation(&model)? {
                    AnyPresentation::Q(p) => exact(&p, model.budget, cap)?,
                    AnyPresentation::Gf2(p) => exact(&p, model.budget, cap)?,
                },
            };
            print_bound(&report, json)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::GroebnerCheck { model: GbModel::TorusIdeal, n, order, json } => {
            let p = torus_reduced_presentation(n)?;
            let rels = torus_xy_ideal::<Rational>(&p.generators, n)?;
            let order = TermOrder::parse(&order, &p.generators)?;
            let report = buchberger_check_with_fallback(&p.generators, &rels, &order)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("order: {}", report.order);
                println!("leading monomials: {}", report.leading_monomials.join(", "));
                println!("s-pairs: {} ({} nonzero)", report.spair_log.len(), report.spair_log.iter().filter(|e| !e.zero).count());
                for e in report.spair_log.iter().filter(|e| !e.zero) {
                    println!("  {} -> {}", e.pair, e.remainder);
                }
                println!("groebner basis: {}", report.is_groebner);
                println!("normal monomials per degree: {:?}", report.normal_monomial_counts);
            }
            if report.is_groebner {
                gb_hilbert(&report)?;
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Tc { g, n, m, method, sweep: sweep_args, json, table } => {
            let method = match method {
                ZclMethod::Exact => LowerMethod::Exact,
                ZclMethod::Certificate => LowerMethod::Certificate,
            };
            let opts = TcOptions::default();
            if let Some(s) = sweep_args {
                let rows = sweep(s[0], s[1], s[2], method, &opts)?;
                if json {
                    println!("{}", serde_json::to_string_pretty(&rows)?);
                } else {
                    println!("{:>3} {:>3} {:>3} {:>6} {:>6} {:>8}  status", "g", "n", "m", "lower", "upper", "theorem");
                    for r in &rows {
                        let show = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
                        print!("{:>3} {:>3} {:>3} {:>6} {:>6} {:>8}  {}", r.g, r.n, r.m, show(r.lower), show(r.upper), r.theorem, r.status);
                        if let Some(e) = &r.error {
                            print!(" ({e})");
                        }
                        println!();
                    }
                }
                let failed = rows.iter().any(|r| r.failed());
                return Ok(if failed { ExitCode::FAILURE } else { ExitCode::SUCCESS });
            }
            let r = tc_report(g, n, m, method, &opts)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else if table {
                let lower = r.lower.as_ref().map_or("-".to_string(), |l| l.value.to_string());
                println!("{} {} {} {} {} {} {}", r.g, r.n, r.m, lower, r.upper.value, r.theorem, r.status);
            } else {
                println!("space: F(Σ{g} - Q{m}, {n})");
                match &r.lower {
                    Some(l) => println!(
                        "lower bound: {} (zcl {}{} by {} over {}; {})",
                        l.value,
                        if l.zcl.exact { "" } else { "≥ " },
                        l.zcl.value,
                        l.zcl.method,
                        if l.field == FieldKind::Rational { "Q" } else { "GF2" },
                        l.model_note
                    ),
                    None => println!("lower bound: unverified"),
                }
                println!("upper bound: {}", r.upper.value);
                for f in &r.upper.chain {
                    println!("  {} = {} [{}]", f.description, f.value, f.basis);
                }
                println!("theorem: {}", r.theorem);
                println!("tc of the product of surfaces: {}", r.product_tc);
                println!("status: {}", r.status);
            }
            Ok(if r.status == Status::Gap { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
