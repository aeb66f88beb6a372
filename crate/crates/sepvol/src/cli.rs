//! Command-line front end: argument model, dispatch and report formatting.
//! Every run echoes its full configuration so any report can be replayed.

use crate::matrix::{BlockState4, Field};
use crate::psep;
use crate::sampling::{self, ChiTable, Measure, SeededStream};
use crate::special::chi1_tilde_fast;
use crate::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Read;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    /// Separable fraction of the flat ensemble (sampler + PPT test).
    SepFraction,
    /// Conditional separability probability at fixed reduced state.
    PsepGivenD,
    /// χ̃_d(ε) for one ε.
    Chi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadTarget {
    PsepRealHs,
    PsepSqrtxReal,
    PsepComplexHs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleMethod {
    /// Gaussian-matrix construction of the flat ensemble.
    Gaussian,
    /// Literal rejection from a coordinate box (real field only).
    Rejection,
}

/// Compute geometric separability probabilities of 4×4 (two-qubit /
/// two-rebit) states and the volume constants of their state body.
#[derive(Debug, Parser)]
#[command(name = "sepvol", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a state file as PPT (= separable for 2⊗2) or not.
    Ppt {
        /// Path to a JSON state file {"field", "d1", "d2", "c"}.
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
    },
    /// Draw states from the flat ensemble and print them.
    Sample {
        #[arg(long, value_enum, default_value = "real")]
        field: Field,
        #[arg(short, long, default_value_t = 1)]
        n: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "gaussian")]
        method: SampleMethod,
    },
    /// Monte Carlo estimators with seeded, thread-invariant streams.
    Estimate {
        #[arg(long, value_enum)]
        quantity: Quantity,
        #[arg(long, value_enum, default_value = "real")]
        field: Field,
        #[arg(long, value_enum, default_value = "hs")]
        measure: Measure,
        #[arg(short, long, default_value_t = 1_000_000)]
        n: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// ε argument (chi quantity only).
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Grid size of the χ̃₂ table backing complex estimates.
        #[arg(long, default_value_t = 65)]
        table_points: usize,
        /// Opt into the unproven η̃₂ = χ̃₂ identity (complex √x only).
        #[arg(long, default_value_t = false)]
        assume_eta2_equals_chi2: bool,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
        #[arg(long, value_enum, default_value = "gaussian")]
        method: SampleMethod,
    },
    /// Deterministic quadrature of the probability formulas.
    Quad {
        #[arg(long, value_enum)]
        target: QuadTarget,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Seed for the χ̃₂ table (complex target only).
        #[arg(long)]
        seed: Option<u64>,
        /// Ball draws per table node (complex target only).
        #[arg(short, long, default_value_t = 200_000)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Tabulate χ̃ on a uniform ε grid.
    Chi {
        #[arg(long, value_enum, default_value = "real")]
        field: Field,
        /// Grid spacing of the table.
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        /// Ball draws per node (complex field only).
        #[arg(short, long, default_value_t = 100_000)]
        n: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 65)]
        table_points: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value = "csv")]
        output: OutputFormat,
    },
    /// Volume and moment integrals of the 4×4 state body.
    Volumes {
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Separable fraction at fixed reduced states across Bloch radii.
    MilzStrunz {
        #[arg(long, value_enum, default_value = "real")]
        field: Field,
        /// Comma-separated Bloch radii in [0, 1).
        #[arg(long, value_delimiter = ',', default_values_t = [0.0, 0.3, 0.6, 0.9])]
        radii: Vec<f64>,
        #[arg(short, long, default_value_t = 1_000_000)]
        n: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Run the deterministic identity suite and report pass/fail per item.
    Verify {
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

/// Outcome of a dispatched run: the serialized report plus the process exit
/// code (0 success, 1 failed verification items, 2 validation, 3 quadrature
/// non-convergence, 4 I/O).
pub struct RunOutcome {
    pub report: String,
    pub exit_code: i32,
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::NoConvergence { .. } | Error::NoConvergenceEig { .. } => 3,
        Error::Io(_) => 4,
        Error::InvalidInput(_)
        | Error::Domain { .. }
        | Error::Unsupported(_)
        | Error::TableTooCoarse { .. }
        | Error::SingularBlock
        | Error::SingularInput
        | Error::NotPositive => 2,
    }
}

/// Seed resolution: explicit flag, else the SEPVOL_SEED environment
/// variable, else 0.
pub fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("SEPVOL_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(0)
}

/// Round to 15 significant digits for report output.
fn sig15(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    format!("{x:.14e}").parse().unwrap()
}

fn json_report<C: Serialize, R: Serialize>(config: &C, result: &R) -> String {
    serde_json::json!({ "config": config, "result": result }).to_string()
}

pub fn run(cli: Cli) -> Result<RunOutcome, Error> {
    match cli.command {
        Command::Ppt { input, output } => run_ppt(&input, output),
        Command::Sample {
            field,
            n,
            seed,
            method,
        } => run_sample(field, n, resolve_seed(seed), method),
        Command::Estimate {
            quantity,
            field,
            measure,
            n,
            seed,
            epsilon,
            threads,
            table_points,
            assume_eta2_equals_chi2,
            output,
            method,
        } => run_estimate(EstimateArgs {
            quantity,
            field,
            measure,
            n,
            seed: resolve_seed(seed),
            epsilon,
            threads: threads.max(1),
            table_points,
            assume_eta2_equals_chi2,
            output,
            method,
        }),
        Command::Quad {
            target,
            tol,
            seed,
            n,
            threads,
        } => run_quad(target, tol, resolve_seed(seed), n, threads.max(1)),
        Command::Chi {
            field,
            step,
            n,
            seed,
            table_points,
            threads,
            output,
        } => run_chi(
            field,
            step,
            n,
            resolve_seed(seed),
            table_points,
            threads.max(1),
            output,
        ),
        Command::Volumes { tol } => run_volumes(tol),
        Command::MilzStrunz {
            field,
            radii,
            n,
            seed,
            threads,
        } => run_milz_strunz(field, &radii, n, resolve_seed(seed), threads.max(1)),
        Command::Verify { tol } => run_verify(tol),
    }
}

fn validate(cond: bool, msg: &str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidInput(msg.to_string()))
    }
}

fn run_ppt(input: &str, output: OutputFormat) -> Result<RunOutcome, Error> {
    validate(output == OutputFormat::Json, "ppt reports are json only")?;
    let mut text = String::new();
    std::fs::File::open(input)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|e| Error::Io(format!("cannot read {input}: {e}")))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("malformed json in {input}: {e}")))?;
    let rho = BlockState4::from_json(&value)?;

    // eigenvalue route so boundary (non-faithful) states classify cleanly
    let scale = rho.assemble().hs_norm2().sqrt();
    let band = 1e-12 * scale.max(1.0);
    let ev_state = rho.assemble().eigenvalues()?;
    let ev_pt = rho.partial_transpose().assemble().eigenvalues()?;
    let ppt = ev_state[0] >= -band && ev_pt[0] >= -band;

    #[derive(Serialize)]
    struct PptReport {
        ppt: bool,
        min_eigenvalue: f64,
        min_eigenvalue_partial_transpose: f64,
        trace: f64,
    }
    let config = serde_json::json!({ "subcommand": "ppt", "input": input });
    let report = json_report(
        &config,
        &PptReport {
            ppt,
            min_eigenvalue: ev_state[0],
            min_eigenvalue_partial_transpose: ev_pt[0],
            trace: rho.trace(),
        },
    );
    Ok(RunOutcome {
        report,
        exit_code: 0,
    })
}

fn run_sample(field: Field, n: u64, seed: u64, method: SampleMethod) -> Result<RunOutcome, Error> {
    validate(n >= 1, "n must be at least 1")?;
    validate(
        !(method == SampleMethod::Rejection && field == Field::Complex),
        "the rejection sampler is implemented for the real field only",
    )?;
    let mut rng = SeededStream::new(seed, 0).rng();
    let states: Vec<serde_json::Value> = (0..n)
        .map(|_| match method {
            SampleMethod::Gaussian => sampling::sample_hs_state4(field, &mut rng).to_json(),
            SampleMethod::Rejection => sampling::sample_hs_state4_rejection(&mut rng).0.to_json(),
        })
        .collect();
    let config = serde_json::json!({
        "subcommand": "sample", "field": field, "n": n, "seed": seed, "method": method,
    });
    Ok(RunOutcome {
        report: json_report(&config, &states),
        exit_code: 0,
    })
}

struct EstimateArgs {
    quantity: Quantity,
    field: Field,
    measure: Measure,
    n: u64,
    seed: u64,
    epsilon: Option<f64>,
    threads: usize,
    table_points: usize,
    assume_eta2_equals_chi2: bool,
    output: OutputFormat,
    method: SampleMethod,
}

#[derive(Serialize)]
struct EstimateReport {
    quantity: Quantity,
    field: Field,
    measure: Measure,
    n: u64,
    seed: u64,
    mean: f64,
    std_error: f64,
    acceptance_rate: f64,
}

fn run_estimate(a: EstimateArgs) -> Result<RunOutcome, Error> {
    validate(a.n >= 1, "n must be at least 1")?;
    validate(
        !(a.field == Field::Complex && a.measure == Measure::SqrtX && !a.assume_eta2_equals_chi2),
        "the complex sqrt-x probability rests on an unproven identity; \
         pass --assume-eta2-equals-chi2 to compute it anyway",
    )?;
    let stream = SeededStream::new(a.seed, 0);
    let est = match a.quantity {
        Quantity::SepFraction => {
            validate(
                !(a.method == SampleMethod::Rejection && a.field == Field::Complex),
                "the rejection sampler is implemented for the real field only",
            )?;
            validate(
                a.measure == Measure::Hs,
                "sep-fraction samples the flat ensemble; use psep-given-d for sqrt-x",
            )?;
            match a.method {
                SampleMethod::Gaussian => {
                    sampling::sep_fraction_mc(a.field, a.n, stream, a.threads)
                }
                SampleMethod::Rejection => {
                    sampling::sep_fraction_mc_rejection(a.n, stream, a.threads)
                }
            }
        }
        Quantity::PsepGivenD => {
            let table = if a.field == Field::Complex {
                Some(build_chi2_table(a.table_points, a.n, a.seed, a.threads)?)
            } else {
                None
            };
            sampling::psep_mc_given_d(
                a.field,
                a.measure,
                a.n,
                stream,
                a.threads,
                table.as_ref(),
                a.assume_eta2_equals_chi2,
            )?
        }
        Quantity::Chi => {
            let eps = a.epsilon.ok_or_else(|| {
                Error::InvalidInput("--epsilon is required for the chi quantity".into())
            })?;
            sampling::chi_mc(a.field, eps, a.n, stream, a.threads)?
        }
    };
    let report = EstimateReport {
        quantity: a.quantity,
        field: a.field,
        measure: a.measure,
        n: est.n,
        seed: est.seed,
        mean: est.mean,
        std_error: est.std_error,
        acceptance_rate: est.acceptance_rate,
    };
    let text = match a.output {
        OutputFormat::Json => {
            let config = serde_json::json!({
                "subcommand": "estimate", "quantity": a.quantity, "field": a.field,
                "measure": a.measure, "n": a.n, "seed": a.seed, "epsilon": a.epsilon,
                "threads": a.threads, "table_points": a.table_points,
                "assume_eta2_equals_chi2": a.assume_eta2_equals_chi2, "method": a.method,
            });
            json_report(&config, &report)
        }
        OutputFormat::Csv => {
            let quantity = serde_json::to_value(a.quantity).unwrap();
            format!(
                "quantity,field,measure,n,seed,mean,std_error,acceptance_rate\n{},{},{},{},{},{},{},{}\n",
                quantity.as_str().unwrap(),
                a.field,
                a.measure,
                report.n,
                report.seed,
                report.mean,
                report.std_error,
                report.acceptance_rate,
            )
        }
    };
    Ok(RunOutcome {
        report: text,
        exit_code: 0,
    })
}

/// χ̃₂ table used by complex estimates; dedicated stream range far from the
/// estimator blocks.
fn build_chi2_table(
    points: usize,
    n_total: u64,
    seed: u64,
    threads: usize,
) -> Result<ChiTable, Error> {
    let per_node = (n_total / points.max(1) as u64).max(20_000);
    ChiTable::build_mc(
        Field::Complex,
        points,
        per_node,
        SeededStream::new(seed ^ 0xc2b2_ae3d_27d4_eb4f, u64::MAX / 2),
        threads,
    )
}

fn run_quad(
    target: QuadTarget,
    tol: f64,
    seed: u64,
    n: u64,
    threads: usize,
) -> Result<RunOutcome, Error> {
    validate(tol > 0.0, "tol must be positive")?;
    let config = serde_json::json!({
        "subcommand": "quad", "target": target, "tol": tol, "seed": seed, "n": n,
        "threads": threads,
    });
    let result = match target {
        QuadTarget::PsepRealHs => {
            let r = psep::psep_real_hs(tol)?;
            serde_json::json!({
                "value": sig15(r.probability.value),
                "abs_error_estimate": sig15(r.probability.abs_error_estimate),
                "evaluations": r.probability.evaluations,
                "converged": r.probability.converged,
                "quarter_identity": sig15(r.quarter_identity),
                "direct_2d": sig15(r.direct_2d),
                "route_residual": sig15(r.route_residual),
            })
        }
        QuadTarget::PsepSqrtxReal => {
            let r = psep::psep_sqrtx_real(tol)?;
            serde_json::json!({
                "value": sig15(r.probability.value),
                "abs_error_estimate": sig15(r.probability.abs_error_estimate),
                "evaluations": r.probability.evaluations,
                "converged": r.probability.converged,
                "numerator": sig15(r.numerator),
                "denominator": sig15(r.denominator.value),
            })
        }
        QuadTarget::PsepComplexHs => {
            let (report, table) = psep_complex_adaptive(tol, seed, n, threads)?;
            serde_json::json!({
                "value": sig15(report.value),
                "quad_error": sig15(report.quad_error),
                "table_sigma": sig15(report.table_sigma),
                "combined_sigma": sig15(report.sigma()),
                "normalization_check": sig15(report.normalization_check),
                "evaluations": report.evaluations,
                "table_points": table.eps.len(),
                "table_samples_per_point": table.n_per_point,
            })
        }
    };
    Ok(RunOutcome {
        report: serde_json::json!({ "config": config, "result": result }).to_string(),
        exit_code: 0,
    })
}

/// Build the χ̃₂ table, refining the grid until the hybrid result moves by
/// less than one combined σ, then report.
pub fn psep_complex_adaptive(
    tol: f64,
    seed: u64,
    n_per_point: u64,
    threads: usize,
) -> Result<(psep::HybridReport, ChiTable), Error> {
    let mut points = 33usize;
    let mut table = build_chi2_table(points, n_per_point * points as u64, seed, threads)?;
    let mut report = psep::psep_complex_hs(&table, tol)?;
    for _ in 0..2 {
        points = 2 * (points - 1) + 1;
        let refined = build_chi2_table(points, n_per_point * points as u64, seed ^ 0x9e37, threads)?;
        let refined_report = psep::psep_complex_hs(&refined, tol)?;
        let moved = (refined_report.value - report.value).abs();
        let sigma = refined_report.sigma().max(report.sigma());
        table = refined;
        report = refined_report;
        if moved < sigma {
            break;
        }
    }
    Ok((report, table))
}

fn run_chi(
    field: Field,
    step: f64,
    n: u64,
    seed: u64,
    table_points: usize,
    threads: usize,
    output: OutputFormat,
) -> Result<RunOutcome, Error> {
    validate(step > 0.0 && step <= 0.5, "step must lie in (0, 0.5]")?;
    let m = (1.0 / step).round() as usize;
    let table = match field {
        Field::Real => None,
        Field::Complex => Some(build_chi2_table(table_points, n * table_points as u64, seed, threads)?),
    };
    let value = |e: f64| match &table {
        None => chi1_tilde_fast(e),
        Some(t) => t.eval(e),
    };
    match output {
        OutputFormat::Csv => {
            let mut text = String::from("epsilon,chi_tilde\n");
            for i in 0..=m {
                let e = i as f64 * step;
                // 12 significant digits
                text.push_str(&format!("{:.*},{:.11e}\n", digits_for(step), e, value(e)));
            }
            Ok(RunOutcome {
                report: text,
                exit_code: 0,
            })
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = (0..=m)
                .map(|i| {
                    let e = i as f64 * step;
                    serde_json::json!({ "epsilon": e, "chi_tilde": sig15(value(e)) })
                })
                .collect();
            let config = serde_json::json!({
                "subcommand": "chi", "field": field, "step": step, "n": n, "seed": seed,
                "table_points": table_points,
            });
            Ok(RunOutcome {
                report: json_report(&config, &rows),
                exit_code: 0,
            })
        }
    }
}

fn digits_for(step: f64) -> usize {
    let mut d = (-step.log10()).ceil().max(1.0) as usize;
    // widen until the label resolves the step (e.g. 0.25 needs two decimals)
    while d < 12 && (step * 10f64.powi(d as i32)).fract().abs() > 1e-9 {
        d += 1;
    }
    d
}

fn run_volumes(tol: f64) -> Result<RunOutcome, Error> {
    validate(tol > 0.0, "tol must be positive")?;
    let reports = psep::section5_volumes(tol)?;
    let rows: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            serde_json::json!({
                "name": r.name,
                "computed": sig15(r.computed),
                "reference": sig15(r.reference),
                "rel_error": sig15(r.rel_error),
            })
        })
        .collect();
    let config = serde_json::json!({ "subcommand": "volumes", "tol": tol });
    let result = serde_json::json!({
        "reports": rows,
        "sqrtx_volume": psep::sqrtx_total_volume(Field::Real),
    });
    Ok(RunOutcome {
        report: serde_json::json!({ "config": config, "result": result }).to_string(),
        exit_code: 0,
    })
}

fn run_milz_strunz(
    field: Field,
    radii: &[f64],
    n: u64,
    seed: u64,
    threads: usize,
) -> Result<RunOutcome, Error> {
    validate(n >= 1, "n must be at least 1")?;
    for &r in radii {
        validate((0.0..1.0).contains(&r), "radii must lie in [0, 1)")?;
    }
    let rows = sampling::milz_strunz_scan(field, radii, n, SeededStream::new(seed, 0), threads)?;
    let out: Vec<serde_json::Value> = rows
        .iter()
        .map(|(r, est)| {
            serde_json::json!({
                "r": r,
                "mean": est.mean,
                "std_error": est.std_error,
                "n": est.n,
                "acceptance_rate": est.acceptance_rate,
                "seed": est.seed,
            })
        })
        .collect();
    let config = serde_json::json!({
        "subcommand": "milz-strunz", "field": field, "radii": radii, "n": n,
        "seed": seed, "threads": threads,
    });
    Ok(RunOutcome {
        report: json_report(&config, &out),
        exit_code: 0,
    })
}

#[derive(Serialize)]
struct VerifyItem {
    name: String,
    computed: f64,
    reference: f64,
    tolerance: f64,
    abs_error: f64,
    pass: bool,
}

impl VerifyItem {
    fn new(name: &str, computed: f64, reference: f64, tolerance: f64) -> Self {
        let abs_error = (computed - reference).abs();
        VerifyItem {
            name: name.to_string(),
            computed,
            reference,
            tolerance,
            abs_error,
            pass: abs_error <= tolerance,
        }
    }
}

/// The deterministic identity suite: defect/χ consistency, the quarter
/// identity, both probabilities, the volume constants and the boundary
/// identity. One pass/fail row per item.
fn run_verify(tol: f64) -> Result<RunOutcome, Error> {
    use std::f64::consts::PI;
    let mut items = Vec::new();

    for delta in [0.1, 0.5, 1.0, 2.0, 5.0] {
        let lhs = crate::special::defect(delta)
            + psep::CHI1_NORMALIZATION * chi1_tilde_fast((-delta).exp());
        items.push(VerifyItem::new(
            &format!("defect-chi-identity-delta-{delta}"),
            lhs,
            psep::CHI1_NORMALIZATION,
            1e-9,
        ));
    }

    let real = psep::psep_real_hs(1e-9f64.min(tol.max(1e-12)))?;
    items.push(VerifyItem::new(
        "quarter-identity",
        real.quarter_identity,
        0.25,
        1e-8,
    ));
    items.push(VerifyItem::new(
        "psep-real-hs",
        real.probability.value,
        29.0 / 64.0,
        1e-8,
    ));

    let sqrtx = psep::psep_sqrtx_real(1e-9)?;
    items.push(VerifyItem::new(
        "psep-sqrtx-real",
        sqrtx.probability.value,
        0.26223,
        5e-5,
    ));
    items.push(VerifyItem::new(
        "psep-sqrtx-numerator",
        sqrtx.numerator,
        0.549213,
        5e-5,
    ));

    for r in psep::section5_volumes(1e-12)? {
        let tolerance = match r.name.as_str() {
            "chi1-normalization" | "chi2-normalization" => 1e-10 * r.reference,
            _ => 1e-9 * r.reference.abs(),
        };
        items.push(VerifyItem::new(
            &format!("volume-{}", r.name),
            r.computed,
            r.reference,
            tolerance,
        ));
    }

    let surf = psep::surface_volume(1e-9)?;
    items.push(VerifyItem::new(
        "surface-volume",
        surf.value,
        4.0 * PI * PI / 3.0,
        1e-6,
    ));
    for (eps, eta, chi) in psep::eta_chi_identity(&[0.1, 0.2, 0.5, 0.8, 0.95], 1e-9)? {
        items.push(VerifyItem::new(
            &format!("eta-chi-identity-eps-{eps}"),
            eta,
            chi,
            1e-6,
        ));
    }

    let all_pass = items.iter().all(|i| i.pass);
    let config = serde_json::json!({ "subcommand": "verify", "tol": tol });
    let result = serde_json::json!({
        "items": items,
        "all_pass": all_pass,
    });
    Ok(RunOutcome {
        report: serde_json::json!({ "config": config, "result": result }).to_string(),
        exit_code: if all_pass { 0 } else { 1 },
    })
}
