//! The boundary-concentrated measure behind the √x case: the surface volume
//! of the real operator-norm unit ball and the identity η̃₁ = χ̃₁ relating
//! the boundary overlap function to the bulk one through the defect
//! function Δ.
//!
//! Run with: cargo run --release --example boundary_measure

use sepvol::sampling::{eta_boundary_check, surface_volume_mc, SeededStream};
use sepvol::special::{chi1_tilde_fast, defect};

fn main() {
    let quad = sepvol::psep::surface_volume(1e-9).unwrap();
    let mc = surface_volume_mc(400_000, SeededStream::new(99, 0), 4);
    let exact = 4.0 * std::f64::consts::PI.powi(2) / 3.0;
    println!("surface volume of the unit ball (boundary measure):");
    println!("  quadrature : {:.12}", quad.value);
    println!("  monte carlo: {:.6} ± {:.6}", mc.mean, mc.std_error);
    println!("  4π²/3      : {exact:.12}");
    println!("  (= twice the ball volume 2π²/3, which forces η̃₁ = χ̃₁)\n");

    println!("defect function: Δ(δ) + (2π²/3)·χ̃₁(e^{{-δ}}) = 2π²/3");
    for delta in [0.25, 1.0, 3.0] {
        let resid = defect(delta) + exact / 2.0 * chi1_tilde_fast((-delta).exp()) - exact / 2.0;
        println!("  δ = {delta}: residual {resid:+.2e}");
    }

    println!("\nη̃₁(ε) vs χ̃₁(ε) with the Monte Carlo surface volume:");
    for (eps, est) in eta_boundary_check(&[0.2, 0.5, 0.8], 400_000, SeededStream::new(99, 1), 4)
        .unwrap()
    {
        println!(
            "  ε = {eps}: η̃₁ = {:.6} ± {:.6}, χ̃₁ = {:.6}",
            est.mean,
            est.std_error,
            chi1_tilde_fast(eps)
        );
    }
}
