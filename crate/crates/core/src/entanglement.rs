//! Two-qubit entanglement measures.
//!
//! Concurrence uses the spin-flip construction: with `ρ̃ = (Y⊗Y) ρ* (Y⊗Y)`,
//! the `λ_i` are the square roots of the eigenvalues of `ρρ̃`. They are
//! computed as singular values of `τ = W†(Y⊗Y)W*` for a decomposition
//! `ρ = WW†`, which keeps separable states at zero to rounding precision.

use nalgebra::{SymmetricEigen, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{hermitize, Matrix4c, SpinInit, TwoQubitDensity, POSITIVITY_TOL};

/// Eigenvalues of ρ at or below this are treated as exact zeros.
const RANK_FLOOR: f64 = 64.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceResult {
    pub value: f64,
    /// Decreasing.
    pub lambdas: [f64; 4],
}

/// `Y ⊗ Y` in the `|++⟩, |+−⟩, |−+⟩, |−−⟩` basis.
pub fn spin_flip() -> Matrix4c {
    let c = |x: f64| Complex64::new(x, 0.0);
    let z = c(0.0);
    Matrix4c::from_row_slice(&[
        z, z, z, c(-1.0),
        z, z, c(1.0), z,
        z, c(1.0), z, z,
        c(-1.0), z, z, z,
    ])
}

/// `ρ̃ = (Y⊗Y) ρ* (Y⊗Y)`.
pub fn spin_flipped(rho: &Matrix4c) -> Matrix4c {
    let yy = spin_flip();
    yy * rho.map(|z| z.conj()) * yy
}

pub fn concurrence(rho: &TwoQubitDensity) -> Result<ConcurrenceResult> {
    let m = hermitize(rho.matrix());
    let eig = SymmetricEigen::try_new(m, f64::EPSILON, 0)
        .ok_or(Error::NumericalDomain("eigendecomposition of rho"))?;
    let min = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    if min < -POSITIVITY_TOL {
        return Err(Error::validation("density matrix", format!("negative eigenvalue {min:e}")));
    }
    // ρ = W W† with columns √μ_k u_k; eigenvalues at rounding level are
    // dropped so that exact zeros do not leak in as O(√ε) noise.
    let weights: Vector4<Complex64> = eig
        .eigenvalues
        .map(|mu| Complex64::new(if mu > RANK_FLOOR { mu.sqrt() } else { 0.0 }, 0.0));
    let w = eig.eigenvectors * Matrix4c::from_diagonal(&weights);
    // The λ_i are the singular values of τ = W† (Y⊗Y) W*.
    let tau = w.adjoint() * spin_flip() * w.map(|z| z.conj());
    let sv = tau
        .try_svd(false, false, f64::EPSILON, 0)
        .ok_or(Error::NumericalDomain("singular values of the spin-flip overlap"))?
        .singular_values;

    let mut lambdas = [0.0; 4];
    for (l, &s) in lambdas.iter_mut().zip(sv.iter()) {
        if !s.is_finite() {
            return Err(Error::NumericalDomain("spin-flip spectrum"));
        }
        *l = s;
    }
    lambdas.sort_by(|a, b| b.total_cmp(a));
    let value = (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).clamp(0.0, 1.0);
    Ok(ConcurrenceResult { value, lambdas })
}

/// Closed-form concurrence of the X-state that the two spins approach for `0 < η < 1/4`:
/// `max{0, −2[√(p₁(1−p₁)p₂(1−p₂)) − |v₁||v₂| e^{−2γ}]}` with `γ = ϰ_ℓ²Γ_ℓ(t)`.
pub fn x_state_concurrence(p1: f64, p2: f64, v1: Complex64, v2: Complex64, gamma_l: f64) -> Result<f64> {
    SpinInit::new(p1, v1)?;
    SpinInit::new(p2, v2)?;
    if !(gamma_l >= 0.0) {
        return Err(Error::validation("decay", format!("gamma_l must be >= 0, got {gamma_l}")));
    }
    let mixed = (p1 * (1.0 - p1) * p2 * (1.0 - p2)).sqrt();
    let coherent = v1.norm() * v2.norm() * (-2.0 * gamma_l).exp();
    Ok((-2.0 * (mixed - coherent)).max(0.0))
}

/// Partial transpose over the second qubit.
pub fn partial_transpose(rho: &Matrix4c) -> Matrix4c {
    Matrix4c::from_fn(|r, c| {
        let (i1, i2) = (r / 2, r % 2);
        let (j1, j2) = (c / 2, c % 2);
        rho[(2 * i1 + j2, 2 * j1 + i2)]
    })
}

/// `true` iff the partial transpose has an eigenvalue below `−1e-10`.
pub fn ppt_negative(rho: &TwoQubitDensity) -> Result<bool> {
    let pt = hermitize(&partial_transpose(rho.matrix()));
    let eig = SymmetricEigen::try_new(pt, f64::EPSILON, 0)
        .ok_or(Error::NumericalDomain("eigendecomposition of partial transpose"))?;
    Ok(eig.eigenvalues.iter().any(|&l| l < -POSITIVITY_TOL))
}
