//! Small-matrix algebra over ℝ and ℂ: 2×2 scalars and matrices, self-adjoint
//! types with hermiticity guaranteed by construction, Schur-complement
//! positivity, singular values, the block form of 4×4 states and a cyclic
//! Jacobi eigensolver used as the positivity oracle.

use crate::Error;

/// Scalar field of the underlying Hilbert space.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    /// Real dimension d of the field: 1 for ℝ, 2 for ℂ.
    pub fn dim_r(self) -> u32 {
        match self {
            Field::Real => 1,
            Field::Complex => 2,
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Real => write!(f, "real"),
            Field::Complex => write!(f, "complex"),
        }
    }
}

/// Complex scalar as an explicit (re, im) pair. Real-field data keeps im = 0.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Scalar {
    pub re: f64,
    pub im: f64,
}

impl Scalar {
    pub const ZERO: Scalar = Scalar { re: 0.0, im: 0.0 };
    pub const ONE: Scalar = Scalar { re: 1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: f64) -> Self {
        Scalar { re, im: 0.0 }
    }

    pub fn conj(self) -> Self {
        Scalar {
            re: self.re,
            im: -self.im,
        }
    }

    /// |z|²
    pub fn abs2(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> f64 {
        self.abs2().sqrt()
    }
}

impl std::ops::Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        Scalar::new(self.re + o.re, self.im + o.im)
    }
}

impl std::ops::Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        Scalar::new(self.re - o.re, self.im - o.im)
    }
}

impl std::ops::Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        Scalar::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl std::ops::Mul<f64> for Scalar {
    type Output = Scalar;
    fn mul(self, t: f64) -> Scalar {
        Scalar::new(self.re * t, self.im * t)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

/// General 2×2 matrix over the active field, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat2 {
    pub e: [[Scalar; 2]; 2],
}

impl Mat2 {
    pub fn zero() -> Self {
        Mat2::default()
    }

    pub fn identity() -> Self {
        Mat2::diag_real(1.0, 1.0)
    }

    pub fn diag_real(a: f64, b: f64) -> Self {
        Mat2 {
            e: [
                [Scalar::real(a), Scalar::ZERO],
                [Scalar::ZERO, Scalar::real(b)],
            ],
        }
    }

    pub fn from_real(rows: [[f64; 2]; 2]) -> Self {
        Mat2 {
            e: [
                [Scalar::real(rows[0][0]), Scalar::real(rows[0][1])],
                [Scalar::real(rows[1][0]), Scalar::real(rows[1][1])],
            ],
        }
    }

    /// Counter-clockwise rotation by `phi` (real orthogonal).
    pub fn rotation(phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        Mat2::from_real([[c, -s], [s, c]])
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let mut r = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                r.e[i][j] = self.e[i][0] * o.e[0][j] + self.e[i][1] * o.e[1][j];
            }
        }
        r
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.e[i][j] = r.e[i][j] + o.e[i][j];
            }
        }
        r
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.e[i][j] = r.e[i][j] - o.e[i][j];
            }
        }
        r
    }

    pub fn scale(&self, t: f64) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.e[i][j] = r.e[i][j] * t;
            }
        }
        r
    }

    pub fn scale_c(&self, s: Scalar) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.e[i][j] = r.e[i][j] * s;
            }
        }
        r
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat2 {
        Mat2 {
            e: [
                [self.e[0][0].conj(), self.e[1][0].conj()],
                [self.e[0][1].conj(), self.e[1][1].conj()],
            ],
        }
    }

    pub fn trace(&self) -> Scalar {
        self.e[0][0] + self.e[1][1]
    }

    pub fn det(&self) -> Scalar {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    /// Squared Hilbert–Schmidt (Frobenius) norm.
    pub fn hs_norm2(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                s += self.e[i][j].abs2();
            }
        }
        s
    }
}

/// Singular values (σ₁ ≥ σ₂ ≥ 0) of a 2×2 matrix.
///
/// Uses the closed form σ₁,₂ = √|det A| · exp(±½ acosh(‖A‖²_HS / (2|det A|)));
/// for det A = 0 the nonzero singular value equals the HS norm.
pub fn singular_values(a: &Mat2) -> (f64, f64) {
    let det = a.det().abs();
    let hs2 = a.hs_norm2();
    if det == 0.0 {
        return (hs2.sqrt(), 0.0);
    }
    let h = hs2 / (2.0 * det);
    if h <= 1.0 {
        // equal singular values; h < 1 can only happen through rounding
        let s = det.sqrt();
        return (s, s);
    }
    let half = 0.5 * h.acosh();
    let root = det.sqrt();
    (root * half.exp(), root * (-half).exp())
}

/// Operator (spectral) norm: the largest singular value.
pub fn op_norm(a: &Mat2) -> f64 {
    singular_values(a).0
}

/// Singular-value ratio σ₂/σ₁ ∈ [0, 1] of an invertible 2×2 matrix.
///
/// Computed as exp(−acosh(‖A‖²_HS / (2|det A|))). When the acosh argument
/// dips below 1 + 1e-12 the ratio is clamped to 1: that happens only by
/// rounding, exactly when σ₁ = σ₂.
pub fn sv_ratio(a: &Mat2) -> Result<f64, Error> {
    let det = a.det().abs();
    if det == 0.0 {
        return Err(Error::SingularInput);
    }
    let h = a.hs_norm2() / (2.0 * det);
    if h < 1.0 + 1e-12 {
        return Ok(1.0);
    }
    Ok((-h.acosh()).exp())
}

/// 2×2 self-adjoint matrix [[a, c], [c*, d]]; hermiticity holds by
/// construction (a, d real, the off-diagonal pair conjugate).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Herm2 {
    a: f64,
    d: f64,
    c: Scalar,
}

impl Herm2 {
    pub fn new(a: f64, d: f64, c: Scalar) -> Self {
        Herm2 { a, d, c }
    }

    pub fn diag(a: f64, d: f64) -> Self {
        Herm2::new(a, d, Scalar::ZERO)
    }

    pub fn identity() -> Self {
        Herm2::diag(1.0, 1.0)
    }

    pub fn zero() -> Self {
        Herm2::default()
    }

    /// Self-adjoint part of an (up to rounding) self-adjoint product.
    pub fn from_mat2_symmetrized(m: &Mat2) -> Self {
        Herm2::new(
            m.e[0][0].re,
            m.e[1][1].re,
            (m.e[0][1] + m.e[1][0].conj()) * 0.5,
        )
    }

    pub fn to_mat2(&self) -> Mat2 {
        Mat2 {
            e: [[Scalar::real(self.a), self.c], [self.c.conj(), Scalar::real(self.d)]],
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        match (i, j) {
            (0, 0) => Scalar::real(self.a),
            (1, 1) => Scalar::real(self.d),
            (0, 1) => self.c,
            (1, 0) => self.c.conj(),
            _ => panic!("index out of range"),
        }
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.c.abs2()
    }

    pub fn add(&self, o: &Herm2) -> Herm2 {
        Herm2::new(self.a + o.a, self.d + o.d, self.c + o.c)
    }

    pub fn sub(&self, o: &Herm2) -> Herm2 {
        Herm2::new(self.a - o.a, self.d - o.d, self.c - o.c)
    }

    pub fn scale(&self, t: f64) -> Herm2 {
        Herm2::new(self.a * t, self.d * t, self.c * t)
    }

    pub fn hs_norm2(&self) -> f64 {
        self.a * self.a + self.d * self.d + 2.0 * self.c.abs2()
    }

    /// Strict positive definiteness (both eigenvalues > 0, no tolerance band).
    pub fn is_positive_definite(&self) -> bool {
        self.a > 0.0 && self.det() > 0.0
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let m = 0.5 * (self.a + self.d);
        let h = 0.5 * (self.a - self.d);
        let r = (h * h + self.c.abs2()).sqrt();
        (m - r, m + r)
    }

    /// Inverse of an invertible self-adjoint matrix.
    pub fn inverse(&self) -> Result<Herm2, Error> {
        let det = self.det();
        if det == 0.0 {
            return Err(Error::SingularInput);
        }
        Ok(Herm2::new(self.d / det, self.a / det, -self.c * (1.0 / det)))
    }
}

/// Positive square root of a positive definite 2×2 self-adjoint matrix,
/// via √H = (H + √det·I) / √(tr + 2√det).
pub fn herm_sqrt(h: &Herm2) -> Result<Herm2, Error> {
    if !h.is_positive_definite() {
        return Err(Error::NotPositive);
    }
    let s = h.det().sqrt();
    let denom = (h.trace() + 2.0 * s).sqrt();
    Ok(Herm2::new(
        (h.a + s) / denom,
        (h.d + s) / denom,
        h.c * (1.0 / denom),
    ))
}

/// Inverse positive square root H^{-1/2} of a positive definite matrix.
pub fn herm_inv_sqrt(h: &Herm2) -> Result<Herm2, Error> {
    herm_sqrt(h)?.inverse()
}

/// Sandwich product X M X with X, M self-adjoint. The result is self-adjoint
/// exactly; rounding asymmetry is removed by construction.
pub fn sandwich(x: &Herm2, m: &Herm2) -> Herm2 {
    let xm = x.to_mat2().mul(&m.to_mat2());
    Herm2::from_mat2_symmetrized(&xm.mul(&x.to_mat2()))
}

/// Schur-complement positivity test for the 4×4 block matrix
/// [[d1, c], [c*, d2]]: positive definite iff d2 > 0 and d1 − c d2⁻¹ c* > 0.
///
/// Errors with [`Error::SingularBlock`] when det(d2) = 0, where the
/// complement cannot be formed.
pub fn schur_positive(d1: &Herm2, d2: &Herm2, c: &Mat2) -> Result<bool, Error> {
    if d2.det() == 0.0 {
        return Err(Error::SingularBlock);
    }
    if !d2.is_positive_definite() {
        return Ok(false);
    }
    let inv = d2.inverse()?;
    let m = c.mul(&inv.to_mat2()).mul(&c.adjoint());
    let schur = d1.sub(&Herm2::from_mat2_symmetrized(&m));
    Ok(schur.is_positive_definite())
}

/// A 2×2 density matrix in the Bloch parametrization
/// D = ½(I + r n̂·σ), with det D = (1−r²)/4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Density2 {
    pub matrix: Herm2,
    pub theta: f64,
    pub phi: f64,
    pub r: f64,
}

impl Density2 {
    /// Real Bloch parametrization D(θ, r) = ½(I + r(cosθ σ₁ + sinθ σ₃)).
    pub fn from_bloch_real(theta: f64, r: f64) -> Result<Self, Error> {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::Domain {
                what: "r",
                value: r,
                domain: "[0, 1)",
            });
        }
        let (s, c) = theta.sin_cos();
        let matrix = Herm2::new(
            0.5 * (1.0 + r * s),
            0.5 * (1.0 - r * s),
            Scalar::real(0.5 * r * c),
        );
        Ok(Density2 {
            matrix,
            theta,
            phi: 0.0,
            r,
        })
    }

    /// Complex Bloch parametrization
    /// D(θ, φ, r) = ½(I + r(cosθ sinφ σ₁ + sinθ sinφ σ₂ + cosφ σ₃)).
    pub fn from_bloch_complex(theta: f64, phi: f64, r: f64) -> Result<Self, Error> {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::Domain {
                what: "r",
                value: r,
                domain: "[0, 1)",
            });
        }
        let nx = theta.cos() * phi.sin();
        let ny = theta.sin() * phi.sin();
        let nz = phi.cos();
        // σ₂ carries -i in the (0,1) entry
        let matrix = Herm2::new(
            0.5 * (1.0 + r * nz),
            0.5 * (1.0 - r * nz),
            Scalar::new(0.5 * r * nx, -0.5 * r * ny),
        );
        Ok(Density2 {
            matrix,
            theta,
            phi,
            r,
        })
    }
}

/// Two-qubit state in block form ρ(D₁, D₂, C) = [[D₁, C], [C*, D₂]].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockState4 {
    pub field: Field,
    pub d1: Herm2,
    pub d2: Herm2,
    pub c: Mat2,
}

impl BlockState4 {
    pub fn new(field: Field, d1: Herm2, d2: Herm2, c: Mat2) -> Self {
        BlockState4 { field, d1, d2, c }
    }

    /// Partial trace over the second factor: Tr₂ ρ = D₁ + D₂.
    pub fn reduced(&self) -> Herm2 {
        self.d1.add(&self.d2)
    }

    /// The partial-transpose involution ρ(D₁, D₂, C) ↦ ρ(D₁, D₂, C*).
    pub fn partial_transpose(&self) -> BlockState4 {
        BlockState4 {
            c: self.c.adjoint(),
            ..*self
        }
    }

    pub fn trace(&self) -> f64 {
        self.d1.trace() + self.d2.trace()
    }

    /// Full 4×4 self-adjoint matrix.
    pub fn assemble(&self) -> SelfAdjoint4 {
        let mut e = [[Scalar::ZERO; 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                e[i][j] = self.d1.entry(i, j);
                e[i + 2][j + 2] = self.d2.entry(i, j);
                e[i][j + 2] = self.c.e[i][j];
                e[i + 2][j] = self.c.e[j][i].conj();
            }
        }
        SelfAdjoint4 {
            field: self.field,
            e,
        }
    }

    /// JSON object per the state-file schema:
    /// `{"field": "real"|"complex", "d1": [[..]], "d2": [[..]], "c": [[..]]}`,
    /// row-major, complex entries as `[re, im]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        let enc = |s: Scalar| -> serde_json::Value {
            match self.field {
                Field::Real => serde_json::json!(s.re),
                Field::Complex => serde_json::json!([s.re, s.im]),
            }
        };
        let mat = |rows: [[Scalar; 2]; 2]| -> serde_json::Value {
            serde_json::json!([
                [enc(rows[0][0]), enc(rows[0][1])],
                [enc(rows[1][0]), enc(rows[1][1])]
            ])
        };
        serde_json::json!({
            "field": self.field,
            "d1": mat(self.d1.to_mat2().e),
            "d2": mat(self.d2.to_mat2().e),
            "c": mat(self.c.e),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let bad = |msg: &str| Error::InvalidInput(msg.to_string());
        let field = match v.get("field").and_then(|f| f.as_str()) {
            Some("real") => Field::Real,
            Some("complex") => Field::Complex,
            _ => return Err(bad("field must be \"real\" or \"complex\"")),
        };
        let scalar = |e: &serde_json::Value| -> Result<Scalar, Error> {
            match field {
                Field::Real => e
                    .as_f64()
                    .map(Scalar::real)
                    .ok_or_else(|| bad("real entries must be numbers")),
                Field::Complex => {
                    let pair = e
                        .as_array()
                        .filter(|a| a.len() == 2)
                        .ok_or_else(|| bad("complex entries must be [re, im] pairs"))?;
                    Ok(Scalar::new(
                        pair[0].as_f64().ok_or_else(|| bad("re must be a number"))?,
                        pair[1].as_f64().ok_or_else(|| bad("im must be a number"))?,
                    ))
                }
            }
        };
        let mat = |key: &str| -> Result<Mat2, Error> {
            let rows = v
                .get(key)
                .and_then(|m| m.as_array())
                .filter(|r| r.len() == 2)
                .ok_or_else(|| bad("expected a 2x2 row-major array"))?;
            let mut m = Mat2::zero();
            for (i, row) in rows.iter().enumerate() {
                let cols = row
                    .as_array()
                    .filter(|c| c.len() == 2)
                    .ok_or_else(|| bad("expected a 2x2 row-major array"))?;
                for (j, e) in cols.iter().enumerate() {
                    m.e[i][j] = scalar(e)?;
                }
            }
            Ok(m)
        };
        let herm = |key: &str| -> Result<Herm2, Error> {
            let m = mat(key)?;
            let asym = (m.e[0][1] - m.e[1][0].conj()).abs()
                + m.e[0][0].im.abs()
                + m.e[1][1].im.abs();
            if asym > 1e-12 {
                return Err(bad(&format!("{key} is not self-adjoint")));
            }
            Ok(Herm2::from_mat2_symmetrized(&m))
        };
        Ok(BlockState4 {
            field,
            d1: herm("d1")?,
            d2: herm("d2")?,
            c: mat("c")?,
        })
    }
}

/// Positive-partial-transpose test for a two-qubit block state: true iff both
/// ρ(D₁, D₂, C) > 0 and ρ(D₁, D₂, C*) > 0, decided through the Schur
/// complement. For 2⊗2 systems this is exactly separability.
pub fn is_ppt(rho: &BlockState4) -> Result<bool, Error> {
    Ok(schur_positive(&rho.d1, &rho.d2, &rho.c)?
        && schur_positive(&rho.d1, &rho.d2, &rho.c.adjoint())?)
}

/// A point Y of the operator interval −I < Y < I with its eigenvalue pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorIntervalPoint {
    pub y: Herm2,
    /// Eigenvalues ordered (low, high), both strictly inside (−1, 1).
    pub eigs: (f64, f64),
}

impl OperatorIntervalPoint {
    pub fn new(y: Herm2) -> Result<Self, Error> {
        let eigs = y.eigenvalues();
        if eigs.0 <= -1.0 || eigs.1 >= 1.0 {
            return Err(Error::Domain {
                what: "eigenvalue",
                value: if eigs.0 <= -1.0 { eigs.0 } else { eigs.1 },
                domain: "(-1, 1)",
            });
        }
        Ok(OperatorIntervalPoint { y, eigs })
    }
}

/// The similarity parameter ε ∈ (0, 1] of a point of the operator interval:
/// the singular-value ratio of √((I−Y)/(I+Y)).
///
/// With ordered eigenvalues x ≥ y of Y this is
/// √((1−x)(1+y) / ((1+x)(1−y))), clamped into (0, 1] via min(ε, 1/ε).
pub fn epsilon_of(p: &OperatorIntervalPoint) -> f64 {
    epsilon_of_eigs(p.eigs.1, p.eigs.0)
}

/// ε from an eigenvalue pair (any order).
pub fn epsilon_of_eigs(x: f64, y: f64) -> f64 {
    let e = ((1.0 - x) * (1.0 + y) / ((1.0 + x) * (1.0 - y))).sqrt();
    if e > 1.0 {
        1.0 / e
    } else {
        e
    }
}

/// 4×4 self-adjoint matrix (the assembled block state or its partial
/// transpose), used as the eigenvalue-based positivity oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelfAdjoint4 {
    pub field: Field,
    pub e: [[Scalar; 4]; 4],
}

impl SelfAdjoint4 {
    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        let mut e = [[Scalar::ZERO; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                e[i][j] = Scalar::real(rows[i][j]);
            }
        }
        SelfAdjoint4 {
            field: Field::Real,
            e,
        }
    }

    pub fn hs_norm2(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                s += self.e[i][j].abs2();
            }
        }
        s
    }

    /// Eigenvalues in ascending order, by cyclic Jacobi iteration. The
    /// complex case runs on the 8×8 real embedding [[Re, −Im], [Im, Re]],
    /// whose doubled spectrum is collapsed back to four values.
    pub fn eigenvalues(&self) -> Result<[f64; 4], Error> {
        match self.field {
            Field::Real => {
                let mut a = [[0.0; 4]; 4];
                for i in 0..4 {
                    for j in 0..4 {
                        a[i][j] = self.e[i][j].re;
                    }
                }
                jacobi_eigenvalues::<4>(a)
            }
            Field::Complex => {
                let mut a = [[0.0; 8]; 8];
                for i in 0..4 {
                    for j in 0..4 {
                        a[i][j] = self.e[i][j].re;
                        a[i + 4][j + 4] = self.e[i][j].re;
                        a[i][j + 4] = -self.e[i][j].im;
                        a[i + 4][j] = self.e[i][j].im;
                    }
                }
                let all = jacobi_eigenvalues::<8>(a)?;
                // doubled spectrum: take every other of the sorted list
                Ok([all[0], all[2], all[4], all[6]])
            }
        }
    }
}

const JACOBI_SWEEP_BUDGET: u32 = 40;

/// Cyclic Jacobi eigenvalues of an N×N symmetric matrix, ascending.
/// Converges when the off-diagonal HS norm drops below 1e-14 ‖m‖_HS.
fn jacobi_eigenvalues<const N: usize>(mut a: [[f64; N]; N]) -> Result<[f64; N], Error> {
    let mut norm2 = 0.0;
    for i in 0..N {
        for j in 0..N {
            norm2 += a[i][j] * a[i][j];
        }
    }
    if norm2 == 0.0 {
        return Ok([0.0; N]);
    }
    let target2 = 1e-28 * norm2;

    for _ in 0..JACOBI_SWEEP_BUDGET {
        let mut off2 = 0.0;
        for p in 0..N - 1 {
            for q in p + 1..N {
                off2 += 2.0 * a[p][q] * a[p][q];
            }
        }
        if off2 <= target2 {
            let mut ev = [0.0; N];
            for i in 0..N {
                ev[i] = a[i][i];
            }
            ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
            return Ok(ev);
        }
        for p in 0..N - 1 {
            for q in p + 1..N {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
                let t = {
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let apq = a[p][q];
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for k in 0..N {
                    if k != p && k != q {
                        let akp = a[k][p];
                        let akq = a[k][q];
                        a[k][p] = akp - s * (akq + tau * akp);
                        a[p][k] = a[k][p];
                        a[k][q] = akq + s * (akp - tau * akq);
                        a[q][k] = a[k][q];
                    }
                }
            }
        }
    }
    Err(Error::NoConvergenceEig {
        sweeps: JACOBI_SWEEP_BUDGET,
    })
}
