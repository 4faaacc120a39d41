//! Frame quantization of functions on a finite set.
//!
//! A normalized Parseval frame `{(κᵢ, uᵢ)}` indexed by `X = {a₁, …, a_M}`
//! turns a real function `f` on `X` into the Hermitian operator
//! `A_f = Σ κᵢ f(aᵢ) |uᵢ⟩⟨uᵢ|`. Its lower symbol `f̌(a_k) = ⟨u_k|A_f|u_k⟩`
//! equals `P f` for the stochastic matrix `P = U K` of the frame, and
//! `P^k f` tends to the classical average `Σ κᵢ f(aᵢ) / N`.
//!
//! Four frame families come with closed forms: DFT subspace frames, Weyl
//! (discrete Heisenberg) coherent frames, the cluster frame of a square
//! tight-binding crystal, and the simplex frame.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::frames::NormalizedFrame;
use crate::numlin::{cabs, cis, hermitian_eig, Matrix, Vector, EIGEN_TOL};
use crate::{Error, Result};

/// Real values of a function on the index set of a frame.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    values: Vec<f64>,
}

impl Observable {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { values })
    }

    pub fn constant(len: usize, c: f64) -> Self {
        Self {
            values: alloc::vec![c; len],
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// `max f − min f`.
    pub fn oscillation(&self) -> f64 {
        let lo = self.values.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = self
            .values
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max);
        if self.values.is_empty() {
            0.0
        } else {
            hi - lo
        }
    }
}

impl From<Vec<f64>> for Observable {
    /// Panics on non-finite values.
    fn from(values: Vec<f64>) -> Self {
        Observable::new(values).expect("finite observable")
    }
}

#[derive(Debug, Clone)]
pub struct QuantizationResult {
    /// `A_f` in the orthonormal basis of the frame's space.
    pub a_f: Matrix,
    /// `f̌(a_k) = ⟨u_k|A_f|u_k⟩`.
    pub lower_symbol: Vec<f64>,
    /// Eigenvalues of `A_f`, ascending.
    pub spectrum: Vec<f64>,
    /// `Σ κᵢ f(aᵢ) / N`.
    pub classical_avg: f64,
}

fn check_len(nf: &NormalizedFrame, f: &Observable) -> Result<()> {
    if f.len() != nf.len() {
        return Err(Error::DimMismatch {
            expected: nf.len(),
            found: f.len(),
        });
    }
    Ok(())
}

/// `A_f = Σ κᵢ f(aᵢ) |uᵢ⟩⟨uᵢ|`.
pub fn operator(nf: &NormalizedFrame, f: &Observable) -> Result<Matrix> {
    check_len(nf, f)?;
    let mut a = Matrix::zeros(nf.dim(), nf.dim());
    for ((u, k), v) in nf.units().iter().zip(nf.weights()).zip(f.values()) {
        a.add_outer(k * v, u, u);
    }
    Ok(a)
}

pub fn quantize(nf: &NormalizedFrame, f: &Observable) -> Result<QuantizationResult> {
    let a_f = operator(nf, f)?;
    let lower_symbol = nf
        .units()
        .iter()
        .map(|u| Ok(u.dot(&a_f.mat_vec(u)?).re))
        .collect::<Result<Vec<_>>>()?;
    let spectrum = hermitian_eig(&a_f, EIGEN_TOL)?.values;
    let classical_avg = classical_average(nf, f)?;
    Ok(QuantizationResult {
        a_f,
        lower_symbol,
        spectrum,
        classical_avg,
    })
}

/// `Σ κᵢ f(aᵢ) / N`.
pub fn classical_average(nf: &NormalizedFrame, f: &Observable) -> Result<f64> {
    check_len(nf, f)?;
    let s: f64 = nf
        .weights()
        .iter()
        .zip(f.values())
        .map(|(k, v)| k * v)
        .sum();
    Ok(s / nf.dim() as f64)
}

/// Row-stochastic `P_kj = |⟨u_k|u_j⟩|² κ_j` as dense rows.
pub fn transition_rows(nf: &NormalizedFrame) -> Vec<Vec<f64>> {
    let m = nf.len();
    (0..m)
        .map(|k| {
            (0..m)
                .map(|j| {
                    if j == k {
                        nf.weights()[j]
                    } else {
                        nf.overlap(k, j).norm_sqr() * nf.weights()[j]
                    }
                })
                .collect()
        })
        .collect()
}

fn apply_rows(p: &[Vec<f64>], f: &[f64]) -> Vec<f64> {
    p.iter()
        .map(|row| row.iter().zip(f).map(|(a, b)| a * b).sum())
        .collect()
}

/// `P f`, computed from overlaps without forming `A_f`.
pub fn stochastic_lower_symbol(nf: &NormalizedFrame, f: &Observable) -> Result<Vec<f64>> {
    check_len(nf, f)?;
    Ok(apply_rows(&transition_rows(nf), f.values()))
}

/// `‖f̌ − P f‖∞` with `f̌` taken from the operator `A_f`.
pub fn lower_symbol_matrix_identity_check(nf: &NormalizedFrame, f: &Observable) -> Result<f64> {
    let direct = quantize(nf, f)?.lower_symbol;
    let via_p = stochastic_lower_symbol(nf, f)?;
    Ok(direct
        .iter()
        .zip(&via_p)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

/// `P^k f`; `k = 0` returns `f`.
pub fn iterate_lower_symbol(nf: &NormalizedFrame, f: &Observable, k: usize) -> Result<Observable> {
    Ok(iterate_trace(nf, f, k)?.pop().unwrap_or_else(|| f.clone()))
}

/// `[P f, P² f, …, P^k f]`.
pub fn iterate_trace(nf: &NormalizedFrame, f: &Observable, k: usize) -> Result<Vec<Observable>> {
    check_len(nf, f)?;
    let p = transition_rows(nf);
    let mut cur = f.values.clone();
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        cur = apply_rows(&p, &cur);
        out.push(Observable {
            values: cur.clone(),
        });
    }
    Ok(out)
}

/// How far the lower symbol can drift from the function itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceBounds {
    /// `1 − min κ`.
    pub zeta: f64,
    /// `‖I − P‖∞ ‖f‖∞ = 2ζ‖f‖∞`.
    pub bound_stochastic: f64,
    /// `max f − min f`.
    pub bound_oscillation: f64,
    /// `‖f̌ − f‖∞`.
    pub actual: f64,
}

pub fn classical_distance_bounds(nf: &NormalizedFrame, f: &Observable) -> Result<DistanceBounds> {
    let lower = stochastic_lower_symbol(nf, f)?;
    let zeta = 1.0 - nf.weights().iter().cloned().fold(f64::INFINITY, f64::min);
    let actual = lower
        .iter()
        .zip(f.values())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(DistanceBounds {
        zeta,
        bound_stochastic: 2.0 * zeta * f.sup_norm(),
        bound_oscillation: f.oscillation(),
        actual,
    })
}

/// Lower symbol of `[A_f, A_g]`, computed from the two operators.
pub fn commutator_lower_symbol(
    nf: &NormalizedFrame,
    f: &Observable,
    g: &Observable,
) -> Result<Vec<Complex64>> {
    let a = operator(nf, f)?;
    let b = operator(nf, g)?;
    let c = a.mul(&b)?.sub(&b.mul(&a)?)?;
    nf.units()
        .iter()
        .map(|u| Ok(u.dot(&c.mat_vec(u)?)))
        .collect()
}

// DFT subspace frames

fn reduce(k: i64, m: usize) -> usize {
    k.rem_euclid(m as i64) as usize
}

/// `u_j = (1/√N) Σ_{k<N} e^{2πijk/M} φ_k` for `j ∈ Z_M`, weights `N/M`.
pub fn dft_frame(m: usize, n: usize) -> Result<NormalizedFrame> {
    if n == 0 || n > m {
        return Err(Error::BadDims {
            what: "DFT frame needs 1 <= N <= M",
        });
    }
    let s = 1.0 / libm::sqrt(n as f64);
    let units = (0..m)
        .map(|j| {
            Vector::new(
                (0..n)
                    .map(|k| cis(2.0 * PI * ((j * k) % m) as f64 / m as f64) * s)
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    NormalizedFrame::new(n, units, alloc::vec![n as f64 / m as f64; m])
}

/// `⟨u_j|u_k⟩` of the DFT frame from the Dirichlet-kernel formula.
pub fn dft_overlap(m: usize, n: usize, j: i64, k: i64) -> Complex64 {
    let d = reduce(k - j, m);
    if d == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let d = d as f64;
    let mf = m as f64;
    let nf = n as f64;
    cis(PI * d * (nf - 1.0) / mf) * (libm::sin(nf * PI * d / mf) / (nf * libm::sin(PI * d / mf)))
}

/// `⟨φ_p|A_f|φ_q⟩ = (1/M) Σ_k e^{2πik(p−q)/M} f(k)`, with `M = f.len()`.
pub fn dft_matrix_element(n: usize, f: &[f64], p: usize, q: usize) -> Result<Complex64> {
    let m = f.len();
    for i in [p, q] {
        if i >= n {
            return Err(Error::IndexRange { index: i, len: n });
        }
    }
    if n > m {
        return Err(Error::BadDims {
            what: "DFT frame needs 1 <= N <= M",
        });
    }
    let d = reduce(p as i64 - q as i64, m);
    let sum: Complex64 = f
        .iter()
        .enumerate()
        .map(|(k, v)| cis(2.0 * PI * ((k * d) % m) as f64 / m as f64) * *v)
        .sum();
    Ok(sum / m as f64)
}

fn dft_phase(m: usize, p: usize, q: usize) -> Complex64 {
    cis(2.0 * PI * reduce(p as i64 - q as i64, m) as f64 / m as f64)
}

/// Closed form of the matrix element for `f(k) = a^k`.
pub fn dft_element_power(m: usize, a: f64, p: usize, q: usize) -> Complex64 {
    let z = dft_phase(m, p, q);
    (1.0 - libm::pow(a, m as f64)) / ((Complex64::new(1.0, 0.0) - z * a) * m as f64)
}

/// Closed form of the matrix element for `f(k) = C(M−1, k)`.
pub fn dft_element_binomial(m: usize, p: usize, q: usize) -> Complex64 {
    let z = dft_phase(m, p, q);
    (z + 1.0).powu(m as u32 - 1) / m as f64
}

/// Closed form of the matrix element for `f(k) = k`.
pub fn dft_element_linear(m: usize, p: usize, q: usize) -> Complex64 {
    if reduce(p as i64 - q as i64, m) == 0 {
        Complex64::new((m as f64 - 1.0) / 2.0, 0.0)
    } else {
        (dft_phase(m, p, q) - 1.0).inv()
    }
}

/// `C(M−1, k)` for `k = 0, …, M−1`.
pub fn binomial_row(m: usize) -> Vec<f64> {
    let mut row = alloc::vec![1.0; m];
    for k in 1..m {
        row[k] = row[k - 1] * (m - k) as f64 / k as f64;
    }
    row
}

/// Physicists' Hermite polynomial `H_j(x)`.
pub fn hermite(j: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * x);
    if j == 0 {
        return prev;
    }
    for i in 1..j {
        let next = 2.0 * x * cur - 2.0 * i as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Largest Hermite degree accepted by [`hermite_dft_eigenfunction`].
pub const MAX_HERMITE_DEGREE: usize = 8;
/// Default truncation of the periodizing sum.
pub const HERMITE_TRUNCATION: usize = 10;

/// `f_j(k) = Σ_{|l|≤L} e^{−π(lM+k)²/M} H_j(√(2π/M)(lM+k))`, an eigenvector
/// of the unitary DFT with eigenvalue `i^j`.
pub fn hermite_dft_eigenfunction(m: usize, j: usize, truncation: usize) -> Result<Vec<f64>> {
    if m == 0 {
        return Err(Error::BadDims {
            what: "empty index set",
        });
    }
    if j > MAX_HERMITE_DEGREE {
        return Err(Error::OutOfRange {
            what: "Hermite degree",
            value: j as f64,
        });
    }
    if truncation == 0 {
        return Err(Error::OutOfRange {
            what: "truncation",
            value: 0.0,
        });
    }
    let mf = m as f64;
    let scale = libm::sqrt(2.0 * PI / mf);
    let l = truncation as i64;
    Ok((0..m)
        .map(|k| {
            (-l..=l)
                .map(|l| {
                    let t = (l * m as i64 + k as i64) as f64;
                    libm::exp(-PI * t * t / mf) * hermite(j, scale * t)
                })
                .sum()
        })
        .collect())
}

/// `(1/√M) Σ_p e^{2πipk/M} f(p)`.
pub fn unitary_dft(f: &[Complex64]) -> Vec<Complex64> {
    let m = f.len();
    let s = 1.0 / libm::sqrt(m as f64);
    (0..m)
        .map(|k| {
            f.iter()
                .enumerate()
                .map(|(p, v)| cis(2.0 * PI * ((p * k) % m) as f64 / m as f64) * v)
                .sum::<Complex64>()
                * s
        })
        .collect()
}

/// `i^j`.
pub fn i_pow(j: usize) -> Complex64 {
    [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, -1.0),
    ][j % 4]
}

// Weyl coherent frames

/// A Weyl frame and its diagnostics.
#[derive(Debug, Clone)]
pub struct WeylFrame {
    /// Vectors `|α,β⟩` at index `α·n + β`, weights `1/n`.
    pub frame: NormalizedFrame,
    /// Some nontrivial translate `A^α B^β` fixes the fiducial up to phase.
    pub stationary_degenerate: bool,
    /// `‖(1/n) Σ |α,β⟩⟨α,β| − I‖_F`.
    pub resolution_residual: f64,
}

/// `|α,β⟩ = Σ_k e^{2πiβk/n} μ_{k+α} |k⟩` over `Z_n × Z_n`.
pub fn weyl_frame(n: usize, fiducial: &Vector) -> Result<WeylFrame> {
    if fiducial.dim() != n || n == 0 {
        return Err(Error::DimMismatch {
            expected: n,
            found: fiducial.dim(),
        });
    }
    let norm = fiducial.norm();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::NotUnit { norm });
    }
    let mut units = Vec::with_capacity(n * n);
    for alpha in 0..n {
        for beta in 0..n {
            units.push(weyl_vector(n, fiducial, alpha as i64, beta as i64));
        }
    }
    let mut resolution = Matrix::zeros(n, n);
    for u in &units {
        resolution.add_outer(1.0 / n as f64, u, u);
    }
    let resolution_residual = resolution.identity_residual();
    let stationary_degenerate = units
        .iter()
        .skip(1)
        .any(|u| cabs(fiducial.dot(u)) >= 1.0 - 1e-10);
    Ok(WeylFrame {
        frame: NormalizedFrame::new(n, units, alloc::vec![1.0 / n as f64; n * n])?,
        stationary_degenerate,
        resolution_residual,
    })
}

fn weyl_vector(n: usize, mu: &Vector, alpha: i64, beta: i64) -> Vector {
    let data = (0..n)
        .map(|k| {
            cis(2.0 * PI * reduce(beta * k as i64, n) as f64 / n as f64)
                * mu[reduce(k as i64 + alpha, n)]
        })
        .collect();
    Vector::new(data).expect("finite fiducial")
}

/// Shift `A|j⟩ = |j−1⟩` and modulation `B|j⟩ = e^{2πij/n}|j⟩`.
pub fn weyl_operators(n: usize) -> (Matrix, Matrix) {
    let a = Matrix::from_fn(n, n, |r, c| {
        if r == reduce(c as i64 - 1, n) {
            1.0.into()
        } else {
            0.0.into()
        }
    });
    let b = Matrix::from_fn(n, n, |r, c| {
        if r == c {
            cis(2.0 * PI * r as f64 / n as f64)
        } else {
            0.0.into()
        }
    });
    (a, b)
}

/// The four lower symbols of the `n = 2` frame with fiducial `(3/5, 4/5)`,
/// for `f` listed as `[f(0,0), f(0,1), f(1,0), f(1,1)]`.
pub fn weyl_lower_symbols(f: [f64; 4]) -> [f64; 4] {
    let a = 49.0 / 625.0;
    let b = 576.0 / 625.0;
    let [f00, f01, f10, f11] = f;
    [
        0.5 * (f00 + f01 * a + f10 * b),
        0.5 * (f00 * a + f01 + f11 * b),
        0.5 * (f00 * b + f10 + f11 * a),
        0.5 * (f01 * b + f10 * a + f11),
    ]
}

// Cluster frame of the square tight-binding crystal

/// Cluster offsets, in basis order.
pub const CLUSTER: [(i64, i64); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

/// `|k₁,k₂⟩ = ½ Σ_{c∈C} e^{2πi(k₁c₁+k₂c₂)/N} |δ_c⟩` at index `k₁·N + k₂`,
/// weights `4/N²`.
pub fn cluster_frame(n: usize) -> Result<NormalizedFrame> {
    if n < 3 {
        return Err(Error::BadDims {
            what: "cluster frame needs N >= 3",
        });
    }
    let mut units = Vec::with_capacity(n * n);
    for k1 in 0..n as i64 {
        for k2 in 0..n as i64 {
            let data = CLUSTER
                .iter()
                .map(|&(c1, c2)| {
                    cis(2.0 * PI * reduce(k1 * c1 + k2 * c2, n) as f64 / n as f64) * 0.5
                })
                .collect();
            units.push(Vector::new(data)?);
        }
    }
    let w = 4.0 / (n * n) as f64;
    NormalizedFrame::new(4, units, alloc::vec![w; n * n])
}

/// `⟨k|k'⟩ = ½[cos(2π(k'₁−k₁)/N) + cos(2π(k'₂−k₂)/N)]`.
pub fn cluster_overlap(n: usize, k: (i64, i64), kp: (i64, i64)) -> f64 {
    let w = 2.0 * PI / n as f64;
    0.5 * (libm::cos(w * reduce(kp.0 - k.0, n) as f64)
        + libm::cos(w * reduce(kp.1 - k.1, n) as f64))
}

/// `E_k = 2cos(2πk₁/N) + 2cos(2πk₂/N)`.
pub fn band_energy(n: usize, k: (i64, i64)) -> f64 {
    let w = 2.0 * PI / n as f64;
    2.0 * libm::cos(w * reduce(k.0, n) as f64) + 2.0 * libm::cos(w * reduce(k.1, n) as f64)
}

/// `(Hψ)(m) = Σ_{c∈C} ψ(m + c)` on `Z_N × Z_N`, site `(m₁,m₂)` at index `m₁·N + m₂`.
pub fn tight_binding_hamiltonian(n: usize) -> Matrix {
    let mut h = Matrix::zeros(n * n, n * n);
    for m1 in 0..n as i64 {
        for m2 in 0..n as i64 {
            let row = reduce(m1, n) * n + reduce(m2, n);
            for &(c1, c2) in &CLUSTER {
                let col = reduce(m1 + c1, n) * n + reduce(m2 + c2, n);
                h[(row, col)] += 1.0;
            }
        }
    }
    h
}

/// `ψ_k(m) = e^{2πi(k₁m₁+k₂m₂)/N}`.
pub fn plane_wave(n: usize, k: (i64, i64)) -> Vector {
    let mut data = Vec::with_capacity(n * n);
    for m1 in 0..n as i64 {
        for m2 in 0..n as i64 {
            data.push(cis(
                2.0 * PI * reduce(k.0 * m1 + k.1 * m2, n) as f64 / n as f64
            ));
        }
    }
    Vector::new(data).expect("finite")
}

/// Closed-form lower symbol `(1/N²) Σ_{k'} f(k') [cos + cos]²` of the cluster frame.
pub fn cluster_lower_symbol(n: usize, f: &Observable) -> Result<Vec<f64>> {
    if f.len() != n * n {
        return Err(Error::DimMismatch {
            expected: n * n,
            found: f.len(),
        });
    }
    let w = 2.0 * PI / n as f64;
    let cosines: Vec<f64> = (0..n).map(|d| libm::cos(w * d as f64)).collect();
    let nn = (n * n) as f64;
    let mut out = Vec::with_capacity(n * n);
    for k1 in 0..n as i64 {
        for k2 in 0..n as i64 {
            let mut s = 0.0;
            for q1 in 0..n as i64 {
                for q2 in 0..n as i64 {
                    let c = cosines[reduce(q1 - k1, n)] + cosines[reduce(q2 - k2, n)];
                    s += f.values[q1 as usize * n + q2 as usize] * c * c;
                }
            }
            out.push(s / nn);
        }
    }
    Ok(out)
}

// Simplex frame

/// `n+1` unit vectors in `R^n` with pairwise overlaps `−1/n`, weights `n/(n+1)`.
///
/// Coordinates are taken in the Helmert basis `h_m = (1,…,1,−m,0,…)/√(m(m+1))`
/// of the hyperplane `x₀ + ⋯ + x_n = 0`; vector `k` is the normalized
/// projection of `e_k`.
pub fn simplex_frame(n: usize) -> Result<NormalizedFrame> {
    if n == 0 {
        return Err(Error::BadDims {
            what: "simplex frame needs n >= 1",
        });
    }
    let scale = libm::sqrt((n + 1) as f64 / n as f64);
    let units = (0..=n)
        .map(|k| {
            let coords: Vec<f64> = (1..=n)
                .map(|m| {
                    let h = 1.0 / libm::sqrt((m * (m + 1)) as f64);
                    let entry = match k.cmp(&m) {
                        core::cmp::Ordering::Less => h,
                        core::cmp::Ordering::Equal => -(m as f64) * h,
                        core::cmp::Ordering::Greater => 0.0,
                    };
                    entry * scale
                })
                .collect();
            Vector::try_from_real(&coords)
        })
        .collect::<Result<Vec<_>>>()?;
    NormalizedFrame::new(n, units, alloc::vec![n as f64 / (n + 1) as f64; n + 1])
}

/// `f̌_n(j) = ((n−1)/n) f(j) + Σ f / (n(n+1))`.
pub fn simplex_lower_symbol(n: usize, f: &Observable) -> Result<Vec<f64>> {
    if f.len() != n + 1 || n == 0 {
        return Err(Error::DimMismatch {
            expected: n + 1,
            found: f.len(),
        });
    }
    let nf = n as f64;
    let total: f64 = f.values.iter().sum();
    Ok(f.values
        .iter()
        .map(|v| (nf - 1.0) / nf * v + total / (nf * (nf + 1.0)))
        .collect())
}

/// The double-sum expression `−(1/(n(n+1)²)) Σ_{k,l} (f(k)g(l) − f(l)g(k))`
/// for the commutator lower symbol, at every `j`. The summand is
/// antisymmetric in `(k, l)`, so the value is zero up to rounding; use
/// [`commutator_lower_symbol`] for the operator computation.
pub fn simplex_commutator_symbol(n: usize, f: &Observable, g: &Observable) -> Result<Vec<f64>> {
    for h in [f, g] {
        if h.len() != n + 1 || n == 0 {
            return Err(Error::DimMismatch {
                expected: n + 1,
                found: h.len(),
            });
        }
    }
    let nf = n as f64;
    let mut s = 0.0;
    for k in 0..=n {
        for l in 0..=n {
            s += f.values[k] * g.values[l] - f.values[l] * g.values[k];
        }
    }
    Ok(alloc::vec![-s / (nf * (nf + 1.0) * (nf + 1.0)); n + 1])
}
