//! Separable fraction at fixed reduced state: fix Tr₂ρ = D with Bloch
//! radius r, sample the fiber, classify with the PPT test. The fraction is
//! independent of r (and equal to the unconditioned probability), in both
//! fields.
//!
//! Run with: cargo run --release --example milz_strunz

use sepvol::matrix::Field;
use sepvol::sampling::{milz_strunz_scan, SeededStream};

fn main() {
    let radii = [0.0, 0.3, 0.6, 0.9];
    let n = 250_000;
    for (field, target) in [(Field::Real, 29.0 / 64.0), (Field::Complex, 8.0 / 33.0)] {
        println!("{field} field (n = {n} per radius, common value {target:.6}):");
        let rows = milz_strunz_scan(field, &radii, n, SeededStream::new(555, 0), 4).unwrap();
        for (r, est) in &rows {
            println!(
                "  r = {r:.1}: {:.6} ± {:.6}  ({:+.2} SE)",
                est.mean,
                est.std_error,
                (est.mean - target) / est.std_error
            );
        }
        let max_gap = rows
            .iter()
            .flat_map(|a| rows.iter().map(move |b| (a.1.mean - b.1.mean).abs()))
            .fold(0.0f64, f64::max);
        println!("  largest pairwise gap: {max_gap:.6}\n");
    }

    // the deterministic counterpart: the conditional-volume ratio is exactly
    // radius independent
    for r in radii {
        let d = sepvol::matrix::Density2::from_bloch_real(0.3, r).unwrap();
        let p = sepvol::psep::conditional_volume(&d, Field::Real, sepvol::sampling::Measure::Hs, None, 1e-10)
            .unwrap()
            / sepvol::psep::conditional_whole_volume(&d, Field::Real, 1e-10).unwrap();
        println!("deterministic ratio at r = {r:.1}: {p:.12}");
    }
}
