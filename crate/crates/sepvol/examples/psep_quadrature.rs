//! Deterministic evaluation of the real Hilbert–Schmidt separability
//! probability: two independent quadrature routes that both give 29/64,
//! plus the exact inner identity (64/3)·∫ w χ̃₁′ = 1/4.
//!
//! Run with: cargo run --release --example psep_quadrature

fn main() {
    let r = sepvol::psep::psep_real_hs(1e-10).unwrap();
    println!("reduced 1-D route : {:.15}", r.probability.value);
    println!("direct 2-D route  : {:.15}", r.direct_2d);
    println!("route residual    : {:.2e}", r.route_residual);
    println!("29/64             : {:.15}", 29.0 / 64.0);
    println!();
    println!("inner identity (64/3)·∫ w(t) χ̃₁'(t) dt = {:.15}  (exact value 1/4)", r.quarter_identity);
    println!(
        "evaluations: {}, error estimate {:.1e}, converged: {}",
        r.probability.evaluations, r.probability.abs_error_estimate, r.probability.converged
    );
}
