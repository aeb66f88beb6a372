//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `--nocapture`; failures always print).
//!
//! Two sub-checks are expected to fail and are kept as stated rather than
//! loosened, because the constants they assert are mutually inconsistent
//! with the rest of the reference set:
//! - criterion 8: the traditional closed form for the assembled complex
//!   4×4 volume disagrees with the product of its own printed factors by
//!   exactly 2¹⁰/3 (the product form is what the computation defines);
//! - criterion 9: the complex cube-rejection acceptance rate equals
//!   (true ball volume)/2⁸ = (π⁴/12)/2⁸; the doubled π⁴/6 normalization
//!   belongs to the double-covering angular parametrization, which no
//!   uniform sampler can reproduce.
//!
//! Companion assertions pin the consistent values in both cases.

use sepvol::matrix::{Density2, Field};
use sepvol::psep::{self, CHI1_NORMALIZATION};
use sepvol::sampling::{self, ChiTable, Measure, SeededStream, STREAM_SPAN};
use sepvol::special::{chi1_tilde_fast, defect};
use std::f64::consts::PI;
use std::time::Instant;

const THREADS: usize = 4;

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}

#[test]
fn criterion_01_quadrature_reproduces_29_64() {
    let t0 = Instant::now();
    let r = psep::psep_real_hs(1e-9).unwrap();
    let elapsed = t0.elapsed().as_secs_f64();
    let err = (r.probability.value - 29.0 / 64.0).abs();
    let pass = err < 1e-8 && elapsed < 60.0;
    report(
        "1",
        pass,
        &format!(
            "P_sep(R) = {:.12} vs 29/64, |err| = {err:.2e}, routes differ by {:.2e}, {elapsed:.2} s",
            r.probability.value, r.route_residual
        ),
    );
    assert!(err < 1e-8, "P_sep(R) = {} off by {err:e}", r.probability.value);
    assert!(elapsed < 60.0, "runtime {elapsed} s exceeds 60 s");
    assert!(r.route_residual < 1e-7, "1D and 2D routes disagree");
}

#[test]
fn criterion_02_quarter_identity() {
    let r = psep::psep_real_hs(1e-9).unwrap();
    let err = (r.quarter_identity - 0.25).abs();
    report(
        "2",
        err < 1e-8,
        &format!("(64/3)∫ w χ̃₁′ = {:.12}, |err| = {err:.2e}", r.quarter_identity),
    );
    assert!(err < 1e-8, "quarter identity off by {err:e}");
}

#[test]
fn criterion_03_sqrtx_probability() {
    let r = psep::psep_sqrtx_real(1e-9).unwrap();
    let ep = (r.probability.value - 0.26223).abs();
    let en = (r.numerator - 0.549213).abs();
    let pass = ep < 5e-5 && en < 5e-5;
    report(
        "3",
        pass,
        &format!(
            "P_sep,√x(R) = {:.9} (|err| {ep:.1e}), numerator = {:.9} (|err| {en:.1e})",
            r.probability.value, r.numerator
        ),
    );
    assert!(ep < 5e-5 && en < 5e-5);
}

#[test]
fn criterion_04_real_monte_carlo() {
    let t0 = Instant::now();
    let est = sampling::sep_fraction_mc(Field::Real, 1_000_000, SeededStream::new(101, 0), THREADS);
    let elapsed = t0.elapsed().as_secs_f64();
    let err = (est.mean - 29.0 / 64.0).abs();
    let pass = err < 3.0 * est.std_error && elapsed < 120.0;
    report(
        "4",
        pass,
        &format!(
            "real separable fraction {:.6} ± {:.6} vs 0.453125 ({:.2} SE), {elapsed:.1} s",
            est.mean,
            est.std_error,
            err / est.std_error
        ),
    );
    assert!(err < 3.0 * est.std_error, "{} vs 29/64 at {} SE", est.mean, err / est.std_error);
    assert!(elapsed < 120.0, "runtime {elapsed} s exceeds 2 min");
}

#[test]
fn criterion_05_complex_monte_carlo() {
    let est =
        sampling::sep_fraction_mc(Field::Complex, 1_000_000, SeededStream::new(102, 0), THREADS);
    let err = (est.mean - 8.0 / 33.0).abs();
    report(
        "5",
        err < 3.0 * est.std_error,
        &format!(
            "complex separable fraction {:.6} ± {:.6} vs 8/33 = {:.6} ({:.2} SE)",
            est.mean,
            est.std_error,
            8.0 / 33.0,
            err / est.std_error
        ),
    );
    assert!(err < 3.0 * est.std_error, "{} vs 8/33 at {} SE", est.mean, err / est.std_error);
}

#[test]
fn criterion_06_hybrid_complex_integral_formula() {
    let (h, table) = sepvol::cli::psep_complex_adaptive(1e-4, 103, 200_000, THREADS).unwrap();
    let err = (h.value - 8.0 / 33.0).abs();
    let pass = err < 3.0 * h.sigma();
    report(
        "6",
        pass,
        &format!(
            "hybrid = {:.6} ± {:.6} (table {} nodes × {}) vs 8/33 ({:.2}σ); normalization check {:.12}",
            h.value,
            h.sigma(),
            table.eps.len(),
            table.n_per_point,
            err / h.sigma(),
            h.normalization_check
        ),
    );
    assert!((h.normalization_check - 1.0).abs() < 1e-7);
    assert!(pass, "hybrid {} vs 8/33 at {}σ", h.value, err / h.sigma());
}

#[test]
fn criterion_07_milz_strunz_constancy() {
    let radii = [0.0, 0.3, 0.6, 0.9];
    let mut all_pass = true;
    let mut detail = String::new();
    for field in [Field::Real, Field::Complex] {
        let target = match field {
            Field::Real => 29.0 / 64.0,
            Field::Complex => 8.0 / 33.0,
        };
        let rows = sampling::milz_strunz_scan(
            field,
            &radii,
            1_000_000,
            SeededStream::new(104 + field.dim_r() as u64, 0),
            THREADS,
        )
        .unwrap();
        for (r, est) in &rows {
            let ok = (est.mean - target).abs() < 3.0 * est.std_error;
            all_pass &= ok;
            detail.push_str(&format!("{field} r={r}: {:.5}±{:.5}; ", est.mean, est.std_error));
            assert!(
                ok,
                "{field} r = {r}: {} vs {target} at {} SE",
                est.mean,
                (est.mean - target).abs() / est.std_error
            );
        }
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let se = (rows[i].1.std_error.powi(2) + rows[j].1.std_error.powi(2)).sqrt();
                let ok = (rows[i].1.mean - rows[j].1.mean).abs() < 3.0 * se;
                all_pass &= ok;
                assert!(ok, "{field}: radii {} and {} differ beyond 3σ", radii[i], radii[j]);
            }
        }
    }
    // deterministic real-case constancy of the conditional-volume ratio
    let mut ratios = Vec::new();
    for r in radii {
        let d = Density2::from_bloch_real(0.3, r).unwrap();
        let v = psep::conditional_volume(&d, Field::Real, Measure::Hs, None, 1e-10).unwrap()
            / psep::conditional_whole_volume(&d, Field::Real, 1e-10).unwrap();
        ratios.push(v);
    }
    for v in &ratios {
        let ok = (v - ratios[0]).abs() < 1e-8;
        all_pass &= ok;
        assert!(ok, "deterministic constancy violated: {ratios:?}");
    }
    report("7", all_pass, &format!("{detail}deterministic ratios {ratios:?}"));
}

#[test]
fn criterion_08_section5_constants() {
    let reports = psep::section5_volumes(1e-12).unwrap();
    let mut lines = String::new();
    let mut pass = true;
    for name in [
        "moment-real",
        "interval-real",
        "moment-complex",
        "interval-complex",
        "vol-d4-real",
        "vol-d4-complex",
    ] {
        let r = reports.iter().find(|r| r.name == name).unwrap();
        let ok = r.rel_error < 1e-9;
        pass &= ok;
        lines.push_str(&format!("{name}: rel {:.2e}{}; ", r.rel_error, if ok { "" } else { " (!)" }));
    }
    report("8", pass, &lines);

    for name in [
        "moment-real",
        "interval-real",
        "moment-complex",
        "interval-complex",
        "vol-d4-real",
    ] {
        let r = reports.iter().find(|r| r.name == name).unwrap();
        assert!(r.rel_error < 1e-9, "{name}: rel error {:e}", r.rel_error);
    }
    // companion check: the assembled complex volume equals the product of
    // its own factors (the self-consistent reference) to full precision
    let f = reports
        .iter()
        .find(|r| r.name == "vol-d4-complex-factored")
        .unwrap();
    assert!(f.rel_error < 1e-12, "factored reference: {:e}", f.rel_error);

    // stated criterion, kept as written: the traditional constant
    // π⁶/(√2·2¹⁴·3⁴·5³·7²·11·13) is 3/2¹⁰ of the factored product and no
    // quadrature of the defining integrals can reproduce it
    let c = reports.iter().find(|r| r.name == "vol-d4-complex").unwrap();
    assert!(
        c.rel_error < 1e-9,
        "vol-d4-complex: computed {:.12e} vs traditional reference {:.12e} \
         (rel error {:.4}); the reference is mutually inconsistent with the \
         printed component factors by exactly 2^10/3 — see vol-d4-complex-factored, \
         which matches to {:.1e}",
        c.computed,
        c.reference,
        c.rel_error,
        f.rel_error
    );
}

#[test]
fn criterion_09_chi_normalizations() {
    let reports = psep::section5_volumes(1e-12).unwrap();
    let chi1 = reports.iter().find(|r| r.name == "chi1-normalization").unwrap();
    let chi2 = reports.iter().find(|r| r.name == "chi2-normalization").unwrap();
    let quad_pass = chi1.rel_error < 1e-10 && chi2.rel_error < 1e-10;

    let n = 1_000_000;
    let real = sampling::chi_mc(Field::Real, 1.0, n, SeededStream::new(105, 0), THREADS).unwrap();
    let want_real = CHI1_NORMALIZATION / 16.0;
    let se_real = (want_real * (1.0 - want_real) / (n as f64 / want_real)).sqrt();
    let real_pass = (real.acceptance_rate - want_real).abs() < 3.0 * se_real;

    let complex =
        sampling::chi_mc(Field::Complex, 1.0, n, SeededStream::new(105, STREAM_SPAN), THREADS)
            .unwrap();
    let want_complex_stated = PI.powi(4) / 6.0 / 256.0;
    let want_complex_true = PI.powi(4) / 12.0 / 256.0;
    let se_c = (want_complex_true * (1.0 - want_complex_true) / (n as f64 / want_complex_true))
        .sqrt();
    let complex_true_pass = (complex.acceptance_rate - want_complex_true).abs() < 3.0 * se_c;
    let complex_stated_pass = (complex.acceptance_rate - want_complex_stated).abs() < 3.0 * se_c;

    report(
        "9",
        quad_pass && real_pass && complex_stated_pass,
        &format!(
            "χ₁(1) rel {:.1e}, χ₂(1) rel {:.1e}; real rate {:.5} vs {want_real:.5}; \
             complex rate {:.5} vs stated {want_complex_stated:.5} / true-volume {want_complex_true:.5}",
            chi1.rel_error, chi2.rel_error, real.acceptance_rate, complex.acceptance_rate
        ),
    );

    assert!(quad_pass, "χ(1) quadrature outside 1e-10");
    assert!(real_pass, "real acceptance {} vs {want_real}", real.acceptance_rate);
    assert!(
        complex_true_pass,
        "complex acceptance {} vs true-volume rate {want_complex_true}",
        complex.acceptance_rate
    );
    // stated criterion, kept as written: the doubled normalization cannot be
    // produced by a uniform cube-rejection sampler, whose acceptance equals
    // (Lebesgue ball volume)/2⁸ = (π⁴/12)/2⁸
    assert!(
        complex_stated_pass,
        "complex acceptance rate {:.6} vs stated (π⁴/6)/2⁸ = {:.6}: the measured \
         rate matches the Lebesgue ball volume π⁴/12 (companion check above) to \
         within noise; the stated constant is the double-covering normalization",
        complex.acceptance_rate, want_complex_stated
    );
}

#[test]
fn criterion_10_appendix_identities() {
    let mut pass = true;
    let mut detail = String::new();
    for delta in [0.1, 0.5, 1.0, 2.0, 5.0] {
        let resid = defect(delta) + CHI1_NORMALIZATION * chi1_tilde_fast((-delta).exp())
            - CHI1_NORMALIZATION;
        let ok = resid.abs() < 1e-9;
        pass &= ok;
        detail.push_str(&format!("Δ({delta}) resid {:.1e}; ", resid));
        assert!(ok, "defect identity at delta = {delta}: residual {resid:e}");
    }
    let rows = psep::eta_chi_identity(&[0.1, 0.3, 0.5, 0.7, 0.9], 1e-9).unwrap();
    for (eps, eta, chi) in rows {
        let ok = (eta - chi).abs() < 1e-6;
        pass &= ok;
        assert!(ok, "eta-chi at {eps}: {eta} vs {chi}");
    }
    let surf = psep::surface_volume(1e-9).unwrap();
    let serr = (surf.value - 4.0 * PI * PI / 3.0).abs();
    pass &= serr < 1e-6;
    detail.push_str(&format!("η̃₁ = χ̃₁ on 5-pt grid ≤ 1e-6; Vol(∂B) err {serr:.1e}"));
    report("10", pass, &detail);
    assert!(serr < 1e-6, "surface volume off by {serr:e}");
}

#[test]
fn criterion_11_property_suites() {
    let mut detail = String::new();

    // boolean agreement of the Schur test with the eigenvalue oracle on
    // 10⁴ seeded random block matrices, regenerating draws inside the
    // 1e-10 degeneracy band
    {
        use sepvol::matrix::{schur_positive, BlockState4, Herm2, Mat2, Scalar};
        let mut rng = SeededStream::new(108, 0).rng();
        let mut done = 0u32;
        let mut mismatches = 0u32;
        while done < 10_000 {
            let herm = |rng: &mut sepvol::sampling::StreamRng| {
                Herm2::new(
                    rng.uniform_in(0.0, 1.5),
                    rng.uniform_in(0.0, 1.5),
                    Scalar::real(rng.uniform_in(-0.6, 0.6)),
                )
            };
            let d1 = herm(&mut rng);
            let d2 = herm(&mut rng);
            let mut c = Mat2::zero();
            for i in 0..2 {
                for j in 0..2 {
                    c.e[i][j] = Scalar::real(rng.uniform_in(-0.5, 0.5));
                }
            }
            if d2.det() == 0.0 {
                continue;
            }
            let rho = BlockState4::new(Field::Real, d1, d2, c);
            let ev = rho.assemble().eigenvalues().unwrap();
            if ev[0].abs() < 1e-10 {
                continue;
            }
            if schur_positive(&d1, &d2, &c).unwrap() != (ev[0] > 0.0) {
                mismatches += 1;
            }
            done += 1;
        }
        assert_eq!(mismatches, 0, "oracle disagreement");
        detail.push_str("oracle agreement 10⁴/10⁴; ");
    }

    // seeded determinism and k-thread invariance across estimator kinds
    let s = SeededStream::new(106, 0);
    let a = sampling::chi_mc(Field::Real, 0.4, 50_000, s, 1).unwrap();
    for k in [2, 8] {
        let b = sampling::chi_mc(Field::Real, 0.4, 50_000, s, k).unwrap();
        assert_eq!(a.mean.to_bits(), b.mean.to_bits(), "chi_mc at {k} threads");
        assert_eq!(a.std_error.to_bits(), b.std_error.to_bits());
    }
    let a = sampling::sep_fraction_mc(Field::Complex, 50_000, s, 1);
    for k in [2, 8] {
        let b = sampling::sep_fraction_mc(Field::Complex, 50_000, s, k);
        assert_eq!(a.mean.to_bits(), b.mean.to_bits(), "sep_fraction at {k} threads");
    }
    let a = sampling::psep_mc_given_d(Field::Real, Measure::SqrtX, 50_000, s, 1, None, false)
        .unwrap();
    for k in [3, 8] {
        let b = sampling::psep_mc_given_d(Field::Real, Measure::SqrtX, 50_000, s, k, None, false)
            .unwrap();
        assert_eq!(a.mean.to_bits(), b.mean.to_bits(), "psep_given_d at {k} threads");
    }
    detail.push_str("bit-identical across 1/2/3/8 threads; ");

    // conditional-volume scalings
    let d0r = Density2::from_bloch_real(0.0, 0.0).unwrap();
    let drr = Density2::from_bloch_real(0.9, 0.5).unwrap();
    let ratio_r = psep::conditional_volume(&drr, Field::Real, Measure::Hs, None, 1e-10).unwrap()
        / psep::conditional_volume(&d0r, Field::Real, Measure::Hs, None, 1e-10).unwrap();
    let err_r = (ratio_r - 0.75f64.powf(3.5)).abs();
    assert!(err_r < 1e-6, "real exponent-7/2 scaling: {ratio_r}");

    let table = ChiTable::build_mc(Field::Complex, 17, 20_000, SeededStream::new(107, 0), THREADS)
        .unwrap();
    let d0c = Density2::from_bloch_complex(0.0, 0.0, 0.0).unwrap();
    let drc = Density2::from_bloch_complex(1.0, 2.0, 0.5).unwrap();
    let ratio_c =
        psep::conditional_volume(&drc, Field::Complex, Measure::Hs, Some(&table), 1e-8).unwrap()
            / psep::conditional_volume(&d0c, Field::Complex, Measure::Hs, Some(&table), 1e-8)
                .unwrap();
    let err_c = (ratio_c - 0.75f64.powi(6)).abs();
    assert!(err_c < 1e-6, "complex (1-r²)^6 scaling: {ratio_c}");
    detail.push_str(&format!(
        "scaling errors: real {err_r:.1e}, complex {err_c:.1e}"
    ));

    report("11", true, &detail);
}
