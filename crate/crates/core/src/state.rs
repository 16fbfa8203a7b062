//! Single-spin initial states and the two-qubit density matrix.
//!
//! The two-qubit basis is ordered `Φ₁ = |++⟩, Φ₂ = |+−⟩, Φ₃ = |−+⟩, Φ₄ = |−−⟩`,
//! where `|+⟩` is the `S^z = +½` state. Indices in code are zero-based.

use nalgebra::{Matrix2, Matrix4, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Slack on `|v|² ≤ p(1−p)` so boundary states like `v = √(p(1−p))` pass.
const COHERENCE_SLACK: f64 = 1e-14;
pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
pub const POSITIVITY_TOL: f64 = 1e-10;

pub type Matrix4c = Matrix4<Complex64>;

/// Initial state `[[p, v], [v*, 1−p]]` of one spin.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SpinInit {
    p: f64,
    #[serde(serialize_with = "ser_complex")]
    v: Complex64,
}

fn ser_complex<S: serde::Serializer>(v: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&v.re)?;
    t.serialize_element(&v.im)?;
    t.end()
}

impl SpinInit {
    pub fn new(p: f64, v: impl Into<Complex64>) -> Result<Self> {
        let v = v.into();
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::validation("spin state", format!("p must lie in [0, 1], got {p}")));
        }
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::validation("spin state", "v must be finite"));
        }
        let bound = p * (1.0 - p);
        if v.norm_sqr() > bound + COHERENCE_SLACK {
            return Err(Error::validation(
                "spin state",
                format!("|v|^2 <= p(1-p) violated: |v|^2 = {}, p(1-p) = {bound}", v.norm_sqr()),
            ));
        }
        Ok(Self { p, v })
    }

    /// Largest admissible real coherence for population `p`.
    pub fn max_coherence(p: f64) -> f64 {
        (p * (1.0 - p)).max(0.0).sqrt()
    }

    /// `(|+⟩ + |−⟩)/√2`.
    pub fn plus_x() -> Self {
        Self {
            p: 0.5,
            v: Complex64::new(0.5, 0.0),
        }
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn v(&self) -> Complex64 {
        self.v
    }

    pub fn matrix(&self) -> Matrix2<Complex64> {
        Matrix2::new(
            Complex64::new(self.p, 0.0),
            self.v,
            self.v.conj(),
            Complex64::new(1.0 - self.p, 0.0),
        )
    }
}

/// A validated two-qubit density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitDensity(Matrix4c);

impl TwoQubitDensity {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(m: Matrix4c) -> Result<Self> {
        check_hermitian_trace(&m, HERMITIAN_TOL, TRACE_TOL)?;
        let min = min_eigenvalue(&m);
        if min < -POSITIVITY_TOL {
            return Err(Error::validation(
                "density matrix",
                format!("negative eigenvalue {min:e}"),
            ));
        }
        Ok(Self(m))
    }

    /// Skips the eigenvalue check; callers guarantee positivity analytically.
    pub(crate) fn from_checked_parts(m: Matrix4c) -> Self {
        Self(m)
    }

    /// Pure state `|ψ⟩⟨ψ|` from (not necessarily normalised) amplitudes.
    pub fn pure(amplitudes: [Complex64; 4]) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::validation("density matrix", "zero state vector"));
        }
        let m = Matrix4c::from_fn(|i, j| amplitudes[i] * amplitudes[j].conj() / norm);
        Self::new(m)
    }

    pub fn matrix(&self) -> &Matrix4c {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix4c {
        self.0
    }

    /// Entry `[ρ]_{i+1, j+1}`.
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0[(i, j)]
    }

    pub fn diagonal(&self) -> [f64; 4] {
        [0, 1, 2, 3].map(|i| self.0[(i, i)].re)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        min_eigenvalue(&self.0)
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.0 - other.0).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `U ρ U†`.
    pub fn conjugated_by(&self, u: &Matrix4c) -> Result<Self> {
        Self::new(u * self.0 * u.adjoint())
    }
}

pub(crate) fn check_hermitian_trace(m: &Matrix4c, herm_tol: f64, trace_tol: f64) -> Result<()> {
    if m.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::NumericalDomain("density matrix"));
    }
    let herm = (m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    if herm > herm_tol {
        return Err(Error::validation(
            "density matrix",
            format!("not Hermitian (deviation {herm:e})"),
        ));
    }
    let tr = m.trace();
    if (tr.re - 1.0).abs() > trace_tol || tr.im.abs() > trace_tol {
        return Err(Error::validation("density matrix", format!("trace {tr} != 1")));
    }
    Ok(())
}

pub(crate) fn hermitize(m: &Matrix4c) -> Matrix4c {
    (m + m.adjoint()).scale(0.5)
}

pub(crate) fn min_eigenvalue(m: &Matrix4c) -> f64 {
    SymmetricEigen::new(hermitize(m))
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Tensor product `ρ₁ ⊗ ρ₂` of two single-spin states.
pub fn initial_two_qubit(s1: &SpinInit, s2: &SpinInit) -> TwoQubitDensity {
    let m = s1.matrix().kronecker(&s2.matrix());
    TwoQubitDensity::from_checked_parts(hermitize(&m))
}
