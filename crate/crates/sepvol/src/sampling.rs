//! Seeded random generation of states and matrix ensembles, rejection
//! samplers for the eigenvalue densities, and Monte Carlo estimators for
//! χ̃, separability fractions and the fixed-subsystem scan.
//!
//! Reproducibility contract: a (seed, stream_id) pair determines the draw
//! sequence exactly. Estimators consume one stream per 4096-sample block,
//! with block b on stream `base + b`, and merge block statistics in block
//! order, so results are bit-identical for any thread count.

use crate::matrix::{
    epsilon_of_eigs, herm_sqrt, is_ppt, BlockState4, Density2, Field, Herm2, Mat2,
    OperatorIntervalPoint, Scalar,
};
use crate::special::{chi1_tilde_fast, defect};
use crate::Error;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Mutex, OnceLock};

/// Handle for a reproducible random stream: a 64-bit seed selecting the key
/// of the counter-based generator and a 64-bit stream id selecting an
/// independent stream under that key.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeededStream {
    pub seed: u64,
    pub stream_id: u64,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl SeededStream {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        SeededStream { seed, stream_id }
    }

    /// Materialize the generator for this stream.
    pub fn rng(&self) -> StreamRng {
        let mut state = self.seed;
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        let mut rng = ChaCha8Rng::from_seed(key);
        rng.set_stream(self.stream_id);
        StreamRng { rng, spare: None }
    }
}

/// Uniform/normal variate generator over one stream. The integer-to-float
/// conversion is fixed as division of the top 53 bits by 2⁵³, so sequences
/// are identical across platforms.
pub struct StreamRng {
    rng: ChaCha8Rng,
    spare: Option<f64>,
}

impl StreamRng {
    /// Uniform in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / 9007199254740992.0; // 2^-53
        (self.rng.next_u64() >> 11) as f64 * SCALE
    }

    pub fn uniform_in(&mut self, a: f64, b: f64) -> f64 {
        a + (b - a) * self.uniform()
    }

    /// Standard normal via Box–Muller (pairs cached).
    pub fn normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1 = 1.0 - self.uniform(); // (0, 1]
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (std::f64::consts::TAU * u2).sin_cos();
        self.spare = Some(r * s);
        r * c
    }
}

/// Monte Carlo estimate: sample mean, standard error s/√n, sample count,
/// acceptance rate of the underlying rejection stages and the seed that
/// reproduces it.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MCEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub n: u64,
    pub acceptance_rate: f64,
    pub seed: u64,
}

/// Welford running statistics with exact pairwise merging.
#[derive(Debug, Clone, Copy, Default)]
struct RunningStats {
    n: u64,
    mean: f64,
    m2: f64,
}

impl RunningStats {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let d = x - self.mean;
        self.mean += d / self.n as f64;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, other: RunningStats) -> RunningStats {
        if self.n == 0 {
            return other;
        }
        if other.n == 0 {
            return self;
        }
        let n = self.n + other.n;
        let d = other.mean - self.mean;
        let mean = self.mean + d * (other.n as f64 / n as f64);
        let m2 = self.m2 + other.m2 + d * d * (self.n as f64 * other.n as f64 / n as f64);
        RunningStats { n, mean, m2 }
    }

    fn std_error(&self) -> f64 {
        if self.n < 2 {
            return f64::NAN;
        }
        (self.m2 / (self.n - 1) as f64).sqrt() / (self.n as f64).sqrt()
    }
}

const BLOCK: u64 = 4096;

/// Span of stream ids reserved per sub-estimate, so composite drivers can
/// give every internal estimator its own disjoint block-stream range.
pub const STREAM_SPAN: u64 = 1 << 32;

/// Run `n` samples of `f` split into 4096-sample blocks, block b drawing
/// from stream `stream.stream_id + b`. Blocks may be computed on any number
/// of threads; statistics are merged in block order, so the result does not
/// depend on `threads`.
fn run_mc<F>(n: u64, stream: SeededStream, threads: usize, f: F) -> MCEstimate
where
    F: Fn(&mut StreamRng) -> (f64, u64) + Sync,
{
    assert!(n > 0, "sample count must be positive");
    let nblocks = n.div_ceil(BLOCK);
    let results: Mutex<Vec<Option<(RunningStats, u64)>>> =
        Mutex::new(vec![None; nblocks as usize]);

    let work = |b: u64| {
        let mut rng = SeededStream::new(stream.seed, stream.stream_id.wrapping_add(b)).rng();
        let count = if b == nblocks - 1 { n - b * BLOCK } else { BLOCK };
        let mut stats = RunningStats::default();
        let mut proposals = 0u64;
        for _ in 0..count {
            let (x, p) = f(&mut rng);
            stats.push(x);
            proposals += p;
        }
        results.lock().unwrap()[b as usize] = Some((stats, proposals));
    };

    if threads <= 1 {
        for b in 0..nblocks {
            work(b);
        }
    } else {
        let next = AtomicU64::new(0);
        std::thread::scope(|scope| {
            for _ in 0..threads.min(nblocks as usize) {
                scope.spawn(|| loop {
                    let b = next.fetch_add(1, Ordering::Relaxed);
                    if b >= nblocks {
                        break;
                    }
                    work(b);
                });
            }
        });
    }

    let results = results.into_inner().unwrap();
    let mut total = RunningStats::default();
    let mut proposals = 0u64;
    for r in results {
        let (stats, p) = r.expect("all blocks completed");
        total = total.merge(stats);
        proposals += p;
    }
    MCEstimate {
        mean: total.mean,
        std_error: total.std_error(),
        n: total.n,
        acceptance_rate: total.n as f64 / proposals.max(1) as f64,
        seed: stream.seed,
    }
}

/// ‖X‖ < 1 without forming singular values: σ₁ < 1 ⇔ ‖X‖²_HS < 2 and
/// ‖X‖²_HS − |det X|² < 1.
fn inside_unit_ball(m: &Mat2) -> bool {
    let hs2 = m.hs_norm2();
    hs2 < 2.0 && hs2 - m.det().abs2() < 1.0
}

fn draw_mat2(field: Field, rng: &mut StreamRng) -> Mat2 {
    let mut m = Mat2::zero();
    for i in 0..2 {
        for j in 0..2 {
            m.e[i][j] = match field {
                Field::Real => Scalar::real(rng.uniform_in(-1.0, 1.0)),
                Field::Complex => {
                    Scalar::new(rng.uniform_in(-1.0, 1.0), rng.uniform_in(-1.0, 1.0))
                }
            };
        }
    }
    m
}

/// Uniform draw from the operator-norm unit ball, by rejection from the
/// entrywise cube [−1, 1]^{4d}. Returns the draw and the number of
/// candidates consumed.
pub fn sample_unit_ball(field: Field, rng: &mut StreamRng) -> (Mat2, u64) {
    let mut proposals = 0u64;
    loop {
        proposals += 1;
        let m = draw_mat2(field, rng);
        if inside_unit_ball(&m) {
            return (m, proposals);
        }
    }
}

/// χ̃_d(ε) as the probability that a uniform unit-ball draw X keeps
/// ‖V_ε⁻¹ X V_ε‖ < 1, with V_ε = diag(1, ε).
pub fn chi_mc(
    field: Field,
    eps: f64,
    n: u64,
    stream: SeededStream,
    threads: usize,
) -> Result<MCEstimate, Error> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::Domain {
            what: "epsilon",
            value: eps,
            domain: "(0, 1]",
        });
    }
    Ok(chi_mc_any(field, eps, n, stream, threads))
}

/// As [`chi_mc`] without the ε ≤ 1 restriction (the function is reciprocal
/// symmetric, which the tests exercise directly).
pub(crate) fn chi_mc_any(
    field: Field,
    eps: f64,
    n: u64,
    stream: SeededStream,
    threads: usize,
) -> MCEstimate {
    run_mc(n, stream, threads, move |rng| {
        let (x, p) = sample_unit_ball(field, rng);
        let mut w = x;
        w.e[0][1] = w.e[0][1] * eps;
        w.e[1][0] = w.e[1][0] * (1.0 / eps);
        ((inside_unit_ball(&w)) as u64 as f64, p)
    })
}

/// One state from the flat (Hilbert–Schmidt) ensemble: ρ = GG*/Tr(GG*) with
/// G a 4×5 real or 4×4 complex standard Gaussian matrix. The rectangular
/// real shape is what makes the induced measure flat.
pub fn sample_hs_state4(field: Field, rng: &mut StreamRng) -> BlockState4 {
    match field {
        Field::Real => {
            let mut g = [[0.0f64; 5]; 4];
            for row in &mut g {
                for x in row.iter_mut() {
                    *x = rng.normal();
                }
            }
            let mut w = [[0.0f64; 4]; 4];
            for i in 0..4 {
                for j in i..4 {
                    let mut s = 0.0;
                    for k in 0..5 {
                        s += g[i][k] * g[j][k];
                    }
                    w[i][j] = s;
                    w[j][i] = s;
                }
            }
            let tr = w[0][0] + w[1][1] + w[2][2] + w[3][3];
            let t = 1.0 / tr;
            let d1 = Herm2::new(w[0][0] * t, w[1][1] * t, Scalar::real(w[0][1] * t));
            let d2 = Herm2::new(w[2][2] * t, w[3][3] * t, Scalar::real(w[2][3] * t));
            let c = Mat2::from_real([[w[0][2] * t, w[0][3] * t], [w[1][2] * t, w[1][3] * t]]);
            BlockState4::new(field, d1, d2, c)
        }
        Field::Complex => {
            let mut g = [[Scalar::ZERO; 4]; 4];
            for row in &mut g {
                for x in row.iter_mut() {
                    *x = Scalar::new(rng.normal(), rng.normal());
                }
            }
            let mut w = [[Scalar::ZERO; 4]; 4];
            for i in 0..4 {
                for j in i..4 {
                    let mut s = Scalar::ZERO;
                    for k in 0..4 {
                        s = s + g[i][k] * g[j][k].conj();
                    }
                    w[i][j] = s;
                    w[j][i] = s.conj();
                }
            }
            let tr = w[0][0].re + w[1][1].re + w[2][2].re + w[3][3].re;
            let t = 1.0 / tr;
            let d1 = Herm2::new(w[0][0].re * t, w[1][1].re * t, w[0][1] * t);
            let d2 = Herm2::new(w[2][2].re * t, w[3][3].re * t, w[2][3] * t);
            let mut c = Mat2::zero();
            for i in 0..2 {
                for j in 0..2 {
                    c.e[i][j] = w[i][j + 2] * t;
                }
            }
            BlockState4::new(field, d1, d2, c)
        }
    }
}

/// Flat-measure state by literal rejection: uniform coordinates in a
/// bounding box, accepted iff positive definite. Real field only; kept as
/// the cross-check oracle for the Gaussian construction.
pub fn sample_hs_state4_rejection(rng: &mut StreamRng) -> (BlockState4, u64) {
    let mut proposals = 0u64;
    loop {
        proposals += 1;
        let a = rng.uniform();
        let b = rng.uniform();
        let c = rng.uniform();
        let d = 1.0 - a - b - c;
        if d <= 0.0 {
            continue;
        }
        let mut m = [[0.0f64; 4]; 4];
        m[0][0] = a;
        m[1][1] = b;
        m[2][2] = c;
        m[3][3] = d;
        for i in 0..4 {
            for j in i + 1..4 {
                let x = rng.uniform_in(-0.5, 0.5);
                m[i][j] = x;
                m[j][i] = x;
            }
        }
        if !sym4_positive(&m) {
            continue;
        }
        let d1 = Herm2::new(m[0][0], m[1][1], Scalar::real(m[0][1]));
        let d2 = Herm2::new(m[2][2], m[3][3], Scalar::real(m[2][3]));
        let cm = Mat2::from_real([[m[0][2], m[0][3]], [m[1][2], m[1][3]]]);
        return (BlockState4::new(Field::Real, d1, d2, cm), proposals);
    }
}

/// Positive definiteness of a symmetric 4×4 via leading principal minors.
fn sym4_positive(m: &[[f64; 4]; 4]) -> bool {
    if m[0][0] <= 0.0 {
        return false;
    }
    let m2 = m[0][0] * m[1][1] - m[0][1] * m[0][1];
    if m2 <= 0.0 {
        return false;
    }
    let m3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[1][2])
        - m[0][1] * (m[0][1] * m[2][2] - m[1][2] * m[0][2])
        + m[0][2] * (m[0][1] * m[1][2] - m[1][1] * m[0][2]);
    if m3 <= 0.0 {
        return false;
    }
    det4(m) > 0.0
}

fn det4(m: &[[f64; 4]; 4]) -> f64 {
    let det3 = |r: [usize; 3], c: [usize; 3]| -> f64 {
        m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]])
            - m[r[0]][c[1]] * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]])
            + m[r[0]][c[2]] * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]])
    };
    m[0][0] * det3([1, 2, 3], [1, 2, 3]) - m[0][1] * det3([1, 2, 3], [0, 2, 3])
        + m[0][2] * det3([1, 2, 3], [0, 1, 3])
        - m[0][3] * det3([1, 2, 3], [0, 1, 2])
}

/// Measure on the state space.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    /// Flat Hilbert–Schmidt measure.
    Hs,
    /// Measure induced by the √x monotone metric.
    #[value(name = "sqrtx")]
    #[serde(rename = "sqrtx")]
    SqrtX,
}

impl std::fmt::Display for Measure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Measure::Hs => write!(f, "hs"),
            Measure::SqrtX => write!(f, "sqrtx"),
        }
    }
}

/// Eigenvalue-pair density for the HS measure on the operator interval:
/// |x−y|^d (1−x²)^d (1−y²)^d on (−1,1)².
fn hs_pair_density(field: Field, x: f64, y: f64) -> f64 {
    let f = (x - y).abs() * (1.0 - x * x) * (1.0 - y * y);
    match field {
        Field::Real => f,
        Field::Complex => f * f,
    }
}

/// Rejection envelope constants, found once by grid search.
fn pair_envelope(field: Field, measure: Measure) -> f64 {
    static HS_R: OnceLock<f64> = OnceLock::new();
    static HS_C: OnceLock<f64> = OnceLock::new();
    static SX_R: OnceLock<f64> = OnceLock::new();
    let grid_max = |f: &dyn Fn(f64, f64) -> f64, lo: f64, hi: f64| -> f64 {
        let mut m = 0.0f64;
        for i in 0..=400 {
            for j in 0..=400 {
                let x = lo + (hi - lo) * i as f64 / 400.0;
                let y = lo + (hi - lo) * j as f64 / 400.0;
                m = m.max(f(x, y));
            }
        }
        1.05 * m
    };
    match (field, measure) {
        (Field::Real, Measure::Hs) => {
            *HS_R.get_or_init(|| grid_max(&|x, y| hs_pair_density(Field::Real, x, y), -1.0, 1.0))
        }
        (Field::Complex, Measure::Hs) => {
            *HS_C.get_or_init(|| grid_max(&|x, y| hs_pair_density(Field::Complex, x, y), -1.0, 1.0))
        }
        (Field::Real, Measure::SqrtX) => *SX_R.get_or_init(|| {
            grid_max(
                &|u: f64, v: f64| (u.sin() - v.sin()).abs() * (u.cos() * v.cos()).sqrt(),
                -std::f64::consts::FRAC_PI_2,
                std::f64::consts::FRAC_PI_2,
            )
        }),
        // density reduces to (x−y)² when the eta2 = chi2 conjecture is assumed
        (Field::Complex, Measure::SqrtX) => 4.2,
    }
}

/// Ordered eigenvalue pair (hi, lo) from the measure-appropriate density.
/// Draws with an eigenvalue within 1e-12 of ±1 are regenerated: they are
/// measure zero and poison downstream acosh evaluations.
pub fn sample_eigen_pair(
    field: Field,
    measure: Measure,
    rng: &mut StreamRng,
) -> ((f64, f64), u64) {
    let env = pair_envelope(field, measure);
    let mut proposals = 0u64;
    loop {
        proposals += 1;
        let (x, y) = match (field, measure) {
            (_, Measure::Hs) => {
                let x = rng.uniform_in(-1.0, 1.0);
                let y = rng.uniform_in(-1.0, 1.0);
                if rng.uniform_in(0.0, env) >= hs_pair_density(field, x, y) {
                    continue;
                }
                (x, y)
            }
            (Field::Real, Measure::SqrtX) => {
                // substitute x = sin u to bound the (1−x²)^{-1/4} density
                let u = rng.uniform_in(-std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2);
                let v = rng.uniform_in(-std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2);
                let f = (u.sin() - v.sin()).abs() * (u.cos() * v.cos()).sqrt();
                if rng.uniform_in(0.0, env) >= f {
                    continue;
                }
                (u.sin(), v.sin())
            }
            (Field::Complex, Measure::SqrtX) => {
                let x = rng.uniform_in(-1.0, 1.0);
                let y = rng.uniform_in(-1.0, 1.0);
                if rng.uniform_in(0.0, env) >= (x - y) * (x - y) {
                    continue;
                }
                (x, y)
            }
        };
        if 1.0 - x.abs() < 1e-12 || 1.0 - y.abs() < 1e-12 {
            continue;
        }
        return ((x.max(y), x.min(y)), proposals);
    }
}

/// A point Y of the operator interval from the HS eigenvalue density, with
/// the angular parameters drawn uniformly from the eigenbasis parametrization.
pub fn sample_interval_point(field: Field, rng: &mut StreamRng) -> (OperatorIntervalPoint, u64) {
    let ((x, y), proposals) = sample_eigen_pair(field, Measure::Hs, rng);
    let m = 0.5 * (x + y);
    let r = 0.5 * (x - y);
    let yh = match field {
        Field::Real => {
            let theta = rng.uniform_in(0.0, std::f64::consts::TAU);
            let (s, c) = theta.sin_cos();
            Herm2::new(m + r * s, m - r * s, Scalar::real(r * c))
        }
        Field::Complex => {
            let theta = rng.uniform_in(0.0, std::f64::consts::TAU);
            let cos_phi = rng.uniform_in(-1.0, 1.0);
            let sin_phi = (1.0 - cos_phi * cos_phi).sqrt();
            let nx = theta.cos() * sin_phi;
            let ny = theta.sin() * sin_phi;
            Herm2::new(
                m + r * cos_phi,
                m - r * cos_phi,
                Scalar::new(r * nx, -r * ny),
            )
        }
    };
    (
        OperatorIntervalPoint {
            y: yh,
            eigs: (y, x),
        },
        proposals,
    )
}

/// Monte Carlo estimate of the conditional (fixed reduced state)
/// separability probability: the mean of χ̃_d over the measure-appropriate
/// eigenvalue density of the operator interval.
///
/// The complex HS case consumes a sampled χ̃₂ table; the complex √x case is
/// defined only under the η̃₂ = χ̃₂ conjecture and must be requested
/// explicitly through `assume_eta2_equals_chi2`.
pub fn psep_mc_given_d(
    field: Field,
    measure: Measure,
    n: u64,
    stream: SeededStream,
    threads: usize,
    chi2: Option<&ChiTable>,
    assume_eta2_equals_chi2: bool,
) -> Result<MCEstimate, Error> {
    if field == Field::Complex && measure == Measure::SqrtX && !assume_eta2_equals_chi2 {
        return Err(Error::Unsupported(
            "complex sqrt-x separability rests on the eta2 = chi2 conjecture; \
             pass assume_eta2_equals_chi2 to opt in",
        ));
    }
    if field == Field::Complex && chi2.is_none() {
        return Err(Error::InvalidInput(
            "complex estimates need a sampled chi2 table".into(),
        ));
    }
    Ok(run_mc(n, stream, threads, move |rng| {
        let ((x, y), p) = sample_eigen_pair(field, measure, rng);
        let eps = epsilon_of_eigs(x, y);
        let v = match field {
            Field::Real => chi1_tilde_fast(eps),
            Field::Complex => chi2.expect("checked above").eval(eps),
        };
        (v, p)
    }))
}

/// Separable fraction of the flat ensemble by direct sampling + PPT test.
pub fn sep_fraction_mc(field: Field, n: u64, stream: SeededStream, threads: usize) -> MCEstimate {
    run_mc(n, stream, threads, move |rng| {
        let rho = sample_hs_state4(field, rng);
        let sep = is_ppt(&rho).expect("faithful draws have invertible blocks");
        (sep as u64 as f64, 1)
    })
}

/// Separable fraction using the literal rejection sampler (real field),
/// the cross-check oracle for [`sep_fraction_mc`].
pub fn sep_fraction_mc_rejection(n: u64, stream: SeededStream, threads: usize) -> MCEstimate {
    run_mc(n, stream, threads, move |rng| {
        let (rho, p) = sample_hs_state4_rejection(rng);
        let sep = is_ppt(&rho).expect("accepted draws are positive definite");
        (sep as u64 as f64, p)
    })
}

/// Fixed-subsystem scan: for each Bloch radius r, fix the reduced state
/// D = D(0, r), sample full conditional states
/// (Y from the interval density, A = D^{1/2} Y D^{1/2}, D₁ = (D+A)/2,
/// D₂ = (D−A)/2, X uniform in the unit ball, C = D₁^{1/2} X D₂^{1/2})
/// and classify with the PPT test. The separable fraction is independent
/// of r.
pub fn milz_strunz_scan(
    field: Field,
    radii: &[f64],
    n_per_radius: u64,
    stream: SeededStream,
    threads: usize,
) -> Result<Vec<(f64, MCEstimate)>, Error> {
    let mut out = Vec::with_capacity(radii.len());
    for (i, &r) in radii.iter().enumerate() {
        let d = reduced_state(field, r)?;
        let sub = SeededStream::new(stream.seed, stream.stream_id + i as u64 * STREAM_SPAN);
        let est = run_mc(n_per_radius, sub, threads, move |rng| {
            let (rho, p) = sample_conditional_state(field, &d, rng);
            (is_ppt(&rho).expect("conditional draws are faithful") as u64 as f64, p)
        });
        out.push((r, est));
    }
    Ok(out)
}

/// Reduced state of Bloch radius r used by the scan.
pub fn reduced_state(field: Field, r: f64) -> Result<Density2, Error> {
    match field {
        Field::Real => Density2::from_bloch_real(0.0, r),
        Field::Complex => Density2::from_bloch_complex(0.0, 0.0, r),
    }
}

/// One full state with Tr₂ ρ = D, distributed per the conditional flat
/// measure on that fiber.
pub fn sample_conditional_state(
    field: Field,
    d: &Density2,
    rng: &mut StreamRng,
) -> (BlockState4, u64) {
    let d_sqrt = herm_sqrt(&d.matrix).expect("reduced state is faithful");
    let (yp, p1) = sample_interval_point(field, rng);
    let a = crate::matrix::sandwich(&d_sqrt, &yp.y);
    let d1 = d.matrix.add(&a).scale(0.5);
    let d2 = d.matrix.sub(&a).scale(0.5);
    let (x, p2) = sample_unit_ball(field, rng);
    let s1 = herm_sqrt(&d1).expect("d1 > 0 since -D < A < D");
    let s2 = herm_sqrt(&d2).expect("d2 > 0 since -D < A < D");
    let c = s1.to_mat2().mul(&x).mul(&s2.to_mat2());
    (BlockState4::new(field, d1, d2, c), p1 + p2)
}

/// Monte Carlo estimate of the boundary-measure surface volume of the real
/// unit ball, by importance sampling of the parametrized surface integral
/// 4·∭ exp(−2 acosh(ρ + |ρ sinφ − 1| cosh 2t)) dρ dφ dt.
pub fn surface_volume_mc(n: u64, stream: SeededStream, threads: usize) -> MCEstimate {
    run_mc(n, stream, threads, move |rng| {
        // proposals: rho from density 1/(1+rho)², t Laplace(0, 1/2), phi uniform
        let u = rng.uniform();
        let rho = u / (1.0 - u);
        let t = {
            let sign = if rng.uniform() < 0.5 { -1.0 } else { 1.0 };
            sign * 0.5 * -rng.uniform().max(1e-300).ln()
        };
        let phi = rng.uniform_in(0.0, std::f64::consts::TAU);
        let x = rho + (rho * phi.sin() - 1.0).abs() * (2.0 * t).cosh();
        let f = (-2.0 * x.max(1.0).acosh()).exp();
        let weight = f * (1.0 + rho) * (1.0 + rho) * (2.0 * t.abs()).exp() * std::f64::consts::TAU;
        (4.0 * weight, 1)
    })
}

/// Boundary-measure check: η̃₁(ε) = 1 − 2Δ(−log ε)/Vol(∂B) computed with a
/// Monte Carlo surface volume, for comparison against χ̃₁(ε). The returned
/// standard error propagates the surface-volume uncertainty.
pub fn eta_boundary_check(
    eps_grid: &[f64],
    n: u64,
    stream: SeededStream,
    threads: usize,
) -> Result<Vec<(f64, MCEstimate)>, Error> {
    let vol = surface_volume_mc(n, stream, threads);
    let mut out = Vec::with_capacity(eps_grid.len());
    for &eps in eps_grid {
        if !(eps > 0.0 && eps <= 1.0) {
            return Err(Error::Domain {
                what: "epsilon",
                value: eps,
                domain: "(0, 1]",
            });
        }
        let delta = defect(-eps.ln());
        let mean = 1.0 - 2.0 * delta / vol.mean;
        let std_error = 2.0 * delta * vol.std_error / (vol.mean * vol.mean);
        out.push((
            eps,
            MCEstimate {
                mean,
                std_error,
                n: vol.n,
                acceptance_rate: vol.acceptance_rate,
                seed: vol.seed,
            },
        ));
    }
    Ok(out)
}

/// Sampled, spline-interpolated representation of ε ↦ χ̃_d(ε).
///
/// Endpoint values are pinned exactly (χ̃(0) = 0, χ̃(1) = 1); interior nodes
/// are Monte Carlo estimates. Interpolation is a natural cubic spline, a
/// linear operator of the node values, so table noise propagates linearly
/// into anything integrated against the table.
#[derive(Debug, Clone)]
pub struct ChiTable {
    pub field: Field,
    pub eps: Vec<f64>,
    pub values: Vec<f64>,
    pub std_errors: Vec<f64>,
    pub n_per_point: u64,
    pub seed: u64,
    second_derivs: Vec<f64>,
}

impl ChiTable {
    /// Build from `points` equispaced nodes on [0, 1] with `n_per_point`
    /// ball draws per interior node.
    pub fn build_mc(
        field: Field,
        points: usize,
        n_per_point: u64,
        stream: SeededStream,
        threads: usize,
    ) -> Result<ChiTable, Error> {
        if points < 5 {
            return Err(Error::InvalidInput("chi table needs at least 5 nodes".into()));
        }
        let m = points - 1;
        let mut eps = Vec::with_capacity(points);
        let mut values = vec![0.0; points];
        let mut std_errors = vec![0.0; points];
        for i in 0..points {
            eps.push(i as f64 / m as f64);
        }
        values[m] = 1.0;
        for i in 1..m {
            let sub = SeededStream::new(stream.seed, stream.stream_id + i as u64 * STREAM_SPAN);
            let est = chi_mc(field, eps[i], n_per_point, sub, threads)?;
            values[i] = est.mean;
            std_errors[i] = est.std_error;
        }
        let mut table = ChiTable {
            field,
            eps,
            values,
            std_errors,
            n_per_point,
            seed: stream.seed,
            second_derivs: Vec::new(),
        };
        table.rebuild_spline();
        Ok(table)
    }

    /// Natural cubic spline second derivatives (tridiagonal solve).
    pub(crate) fn rebuild_spline(&mut self) {
        let n = self.eps.len();
        let h = self.eps[1] - self.eps[0];
        let mut rhs = vec![0.0; n];
        let mut diag = vec![2.0; n];
        let mut upper = vec![0.0; n];
        for i in 1..n - 1 {
            upper[i] = 0.5;
            rhs[i] = 3.0 * (self.values[i + 1] - 2.0 * self.values[i] + self.values[i - 1])
                / (h * h);
        }
        // forward sweep (lower coefficients are also 0.5 on the uniform grid)
        for i in 2..n - 1 {
            let w = 0.5 / diag[i - 1];
            diag[i] -= w * upper[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        let mut m = vec![0.0; n];
        for i in (1..n - 1).rev() {
            m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
        }
        self.second_derivs = m;
    }

    /// Spline evaluation, clamped into [0, 1].
    pub fn eval(&self, e: f64) -> f64 {
        if e <= 0.0 {
            return 0.0;
        }
        if e >= 1.0 {
            return 1.0;
        }
        let n = self.eps.len();
        let h = self.eps[1] - self.eps[0];
        let i = ((e / h) as usize).min(n - 2);
        let a = self.eps[i];
        let t = e - a;
        let s = h - t;
        let (ya, yb) = (self.values[i], self.values[i + 1]);
        let (ma, mb) = (self.second_derivs[i], self.second_derivs[i + 1]);
        let v = (ma * s * s * s + mb * t * t * t) / (6.0 * h)
            + (ya / h - ma * h / 6.0) * s
            + (yb / h - mb * h / 6.0) * t;
        v.clamp(0.0, 1.0)
    }

    /// Median standard error of the interior nodes: the statistical noise
    /// floor of anything interpolated from this table.
    pub fn median_std_error(&self) -> f64 {
        let mut se = self.std_errors[1..self.std_errors.len() - 1].to_vec();
        se.sort_by(|a, b| a.partial_cmp(b).unwrap());
        se[se.len() / 2]
    }

    /// Deterministic interpolation-error bound h²·|χ″|/8 with the curvature
    /// taken as the median absolute second difference (robust to node noise).
    pub fn interpolation_error_estimate(&self) -> f64 {
        let h = self.eps[1] - self.eps[0];
        let mut curv: Vec<f64> = (1..self.eps.len() - 1)
            .map(|i| {
                ((self.values[i + 1] - 2.0 * self.values[i] + self.values[i - 1]) / (h * h)).abs()
            })
            .collect();
        curv.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = curv[curv.len() / 2];
        h * h * median / 8.0
    }

    /// Copy with each interior node jittered by its own standard error,
    /// for propagating table noise through downstream quadrature.
    pub fn jittered(&self, rng: &mut StreamRng) -> ChiTable {
        let mut t = self.clone();
        for i in 1..t.values.len() - 1 {
            t.values[i] = (t.values[i] + t.std_errors[i] * rng.normal()).clamp(0.0, 1.0);
        }
        t.rebuild_spline();
        t
    }
}
