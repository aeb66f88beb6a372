//! Adaptive one- and two-dimensional quadrature built on the 15-point
//! Gauss–Kronrod rule with globally prioritized bisection.
//!
//! Semi-infinite integrals are folded to (0, 1) with s = u/(1−u); mild
//! endpoint singularities (logarithmic, |x|^α with α > −1) can be softened
//! with the variable-doubling transforms before the adaptive pass.

use crate::Error;
use std::collections::BinaryHeap;

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: u64,
    pub converged: bool,
}

/// Abscissae of the 15-point Kronrod rule on [-1, 1] (positive half).
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];

/// Weights of the 15-point Kronrod rule.
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];

/// Weights of the embedded 7-point Gauss rule.
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// One Gauss–Kronrod panel: returns (kronrod value, error estimate).
fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut res_g = fc * WG[3];
    let mut res_k = fc * WGK[7];
    let mut res_abs = fc.abs() * WGK[7];
    let mut fv = [0.0f64; 15];
    fv[7] = fc;

    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv[j] = f1;
        fv[14 - j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = res_k * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }

    let err = ((res_k - res_g) * half).abs();
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();

    // QUADPACK error rescaling
    let mut scaled = err;
    if res_asc != 0.0 && scaled != 0.0 {
        let t = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if t < 1.0 { res_asc * t } else { res_asc };
    }
    let tiny = f64::MIN_POSITIVE / (50.0 * f64::EPSILON);
    if res_abs > tiny {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }

    (res_k * half, scaled)
}

#[derive(Debug)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(std::cmp::Ordering::Equal)
    }
}

pub const DEFAULT_EVAL_BUDGET: u64 = 20_000_000;

/// Adaptive integral of `f` over (a, b) to absolute tolerance `tol`.
pub fn integrate_1d<F: FnMut(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult, Error> {
    integrate_1d_budget(f, a, b, tol, DEFAULT_EVAL_BUDGET)
}

/// As [`integrate_1d`] with an explicit evaluation budget; exceeding it
/// yields [`Error::NoConvergence`] carrying the partial result.
pub fn integrate_1d_budget<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
    budget: u64,
) -> Result<QuadResult, Error> {
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            abs_error_estimate: 0.0,
            evaluations: 0,
            converged: true,
        });
    }

    let mut evals = 0u64;
    let mut panel = |lo: f64, hi: f64, evals: &mut u64| {
        *evals += 15;
        let (value, error) = gk15(&mut f, lo, hi);
        Segment {
            a: lo,
            b: hi,
            value,
            error,
        }
    };

    let mut heap = BinaryHeap::new();
    // segments narrowed to floating-point resolution are retired here
    let mut floor_val = 0.0f64;
    let mut floor_err = 0.0f64;

    heap.push(panel(a, b, &mut evals));
    let mut heap_val: f64 = heap.peek().unwrap().value;
    let mut heap_err: f64 = heap.peek().unwrap().error;
    let mut iterations = 0u64;

    loop {
        iterations += 1;
        // resummation guards drift in the incremental totals
        if iterations.is_multiple_of(2048) {
            heap_val = heap.iter().map(|s| s.value).sum();
            heap_err = heap.iter().map(|s| s.error).sum();
        }
        let total_err = heap_err + floor_err;
        let total_val = heap_val + floor_val;
        if total_err <= tol || heap.is_empty() {
            return Ok(QuadResult {
                value: total_val,
                abs_error_estimate: total_err,
                evaluations: evals,
                converged: total_err <= tol,
            });
        }
        if evals >= budget {
            return Err(Error::NoConvergence {
                value: total_val,
                abs_error: total_err,
                evaluations: evals,
                budget,
            });
        }
        let worst = heap.pop().expect("heap cannot be empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            floor_val += worst.value;
            floor_err += worst.error;
            heap_val -= worst.value;
            heap_err -= worst.error;
            continue;
        }
        let left = panel(worst.a, mid, &mut evals);
        let right = panel(mid, worst.b, &mut evals);
        heap_val += left.value + right.value - worst.value;
        heap_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
}

/// ∫₀^∞ f(s) ds via the fold s = u/(1−u).
pub fn integrate_0_inf<F: FnMut(f64) -> f64>(mut f: F, tol: f64) -> Result<QuadResult, Error> {
    integrate_1d(
        move |u| {
            let one_m = 1.0 - u;
            f(u / one_m) / (one_m * one_m)
        },
        0.0,
        1.0,
        tol,
    )
}

/// ∫ₐᵇ f(x) dx with the lower endpoint softened by x = a + (b−a)u².
pub fn integrate_soft_lower<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadResult, Error> {
    let len = b - a;
    integrate_1d(move |u| f(a + len * u * u) * 2.0 * len * u, 0.0, 1.0, tol)
}

/// Iterated adaptive integral over the region a < x < b, lo(x) < y < hi(x).
/// The inner pass runs at tol/10 per unit of outer length.
pub fn integrate_2d<F, L, H>(
    mut f: F,
    a: f64,
    b: f64,
    lo: L,
    hi: H,
    tol: f64,
) -> Result<QuadResult, Error>
where
    F: FnMut(f64, f64) -> f64,
    L: Fn(f64) -> f64,
    H: Fn(f64) -> f64,
{
    let inner_tol = tol / (10.0 * (b - a).abs().max(1.0));
    let inner_evals = std::cell::Cell::new(0u64);
    let inner_failed = std::cell::Cell::new(false);
    let outer = integrate_1d(
        |x| {
            let r = integrate_1d(|y| f(x, y), lo(x), hi(x), inner_tol);
            match r {
                Ok(q) => {
                    inner_evals.set(inner_evals.get() + q.evaluations);
                    q.value
                }
                Err(Error::NoConvergence { value, .. }) => {
                    inner_failed.set(true);
                    value
                }
                Err(_) => unreachable!("inner integration only fails by budget"),
            }
        },
        a,
        b,
        0.8 * tol,
    );
    match outer {
        Ok(mut q) => {
            q.evaluations += inner_evals.get();
            q.abs_error_estimate += (b - a).abs() * inner_tol;
            q.converged = q.converged && !inner_failed.get();
            if inner_failed.get() {
                return Err(Error::NoConvergence {
                    value: q.value,
                    abs_error: q.abs_error_estimate,
                    evaluations: q.evaluations,
                    budget: DEFAULT_EVAL_BUDGET,
                });
            }
            Ok(q)
        }
        Err(Error::NoConvergence {
            value,
            abs_error,
            evaluations,
            budget,
        }) => Err(Error::NoConvergence {
            value,
            abs_error,
            evaluations: evaluations + inner_evals.get(),
            budget,
        }),
        Err(e) => Err(e),
    }
}
