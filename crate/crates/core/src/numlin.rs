//! Dense complex vectors and matrices.
//!
//! Everything downstream works over `Complex64`; real data is stored with a
//! zero imaginary part. Matrices are row-major.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::{Error, Result};

/// Absolute tolerance for checks that hold exactly in exact arithmetic.
pub const EXACT_TOL: f64 = 1e-12;
/// Relative tolerance for eigen-residuals.
pub const EIGEN_TOL: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `e^{iθ}`.
pub fn cis(theta: f64) -> Complex64 {
    Complex64::new(libm::cos(theta), libm::sin(theta))
}

/// Modulus of a complex number.
pub fn cabs(z: Complex64) -> f64 {
    libm::hypot(z.re, z.im)
}

/// A dense column vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    data: Vec<Complex64>,
}

impl Vector {
    /// Wraps complex entries, rejecting NaN or infinite values.
    pub fn new(data: Vec<Complex64>) -> Result<Self> {
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { data })
    }

    /// Builds a vector from real entries.
    ///
    /// # Panics
    ///
    /// Panics on non-finite entries; use [`Vector::try_from_real`] for
    /// untrusted input.
    pub fn from_real(values: &[f64]) -> Self {
        Self::try_from_real(values).expect("non-finite vector entry")
    }

    pub fn try_from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            data: vec![ZERO; dim],
        }
    }

    /// Canonical basis vector `e_i` of `K^dim`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.data[i] = ONE;
        v
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn into_inner(self) -> Vec<Complex64> {
        self.data
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Complex64> {
        self.data.iter()
    }

    /// Real parts of the entries.
    pub fn re(&self) -> Vec<f64> {
        self.data.iter().map(|z| z.re).collect()
    }

    /// True when every imaginary part is at most `tol` in magnitude.
    pub fn is_real(&self, tol: f64) -> bool {
        self.data.iter().all(|z| z.im.abs() <= tol)
    }

    /// Inner product `⟨self|other⟩`, antilinear in `self`.
    pub fn dot(&self, other: &Vector) -> Complex64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.data
            .iter()
            .zip(&other.data)
            .fold(ZERO, |acc, (a, b)| acc + a.conj() * b)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|&z| cabs(z)).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: Complex64) -> Vector {
        Vector {
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Vector {
        Vector {
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Euclidean distance to `other`.
    pub fn distance(&self, other: &Vector) -> f64 {
        self.sub(other).norm()
    }

    /// Outer product `|self⟩⟨other|`.
    pub fn outer(&self, other: &Vector) -> Matrix {
        Matrix::from_fn(self.dim(), other.dim(), |i, j| {
            self.data[i] * other.data[j].conj()
        })
    }
}

impl Index<usize> for Vector {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.data[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Complex64 {
        &mut self.data[i]
    }
}

/// A dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ONE } else { ZERO })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a real matrix from its rows.
    ///
    /// # Panics
    ///
    /// Panics if the rows are ragged.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| Complex64::new(rows[i][j], 0.0))
    }

    /// Real diagonal matrix.
    pub fn diag(values: &[f64]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(values[i], 0.0)
            } else {
                ZERO
            }
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vector]) -> Self {
        let rows = columns.first().map_or(0, Vector::dim);
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector {
            data: (0..self.rows).map(|i| self[(i, j)]).collect(),
        }
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector {
            data: self.data[i * self.cols..(i + 1) * self.cols].to_vec(),
        }
    }

    /// Real parts, row by row.
    pub fn re_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].re).collect())
            .collect()
    }

    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.data[k * other.cols + j];
                }
            }
        }
        Ok(out)
    }

    pub fn mat_vec(&self, v: &Vector) -> Result<Vector> {
        if self.cols != v.dim() {
            return Err(Error::DimMismatch {
                expected: self.cols,
                found: v.dim(),
            });
        }
        let data = (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v.iter())
                    .fold(ZERO, |acc, (a, b)| acc + a * b)
            })
            .collect();
        Ok(Vector { data })
    }

    /// Row vector times matrix: `v^T · self`.
    pub fn vec_mat(&self, v: &Vector) -> Result<Vector> {
        if self.rows != v.dim() {
            return Err(Error::DimMismatch {
                expected: self.rows,
                found: v.dim(),
            });
        }
        let mut out = Vector::zeros(self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j] += v[i] * self[(i, j)];
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Matrix,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, s: Complex64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Matrix {
        self.scale(Complex64::new(s, 0.0))
    }

    /// Adds `s · |a⟩⟨b|` in place.
    pub fn add_outer(&mut self, s: f64, a: &Vector, b: &Vector) {
        debug_assert_eq!(self.rows, a.dim());
        debug_assert_eq!(self.cols, b.dim());
        for i in 0..self.rows {
            let ai = a[i] * s;
            for j in 0..self.cols {
                self.data[i * self.cols + j] += ai * b[j].conj();
            }
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum())
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|&z| cabs(z)).fold(0.0, f64::max)
    }

    /// Frobenius distance to the identity.
    pub fn identity_residual(&self) -> f64 {
        let n = self.rows;
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..self.cols {
                let target = if i == j { ONE } else { ZERO };
                acc += (self[(i, j)] - target).norm_sqr();
            }
        }
        libm::sqrt(acc)
    }

    /// `‖self − self†‖_F`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                acc += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        libm::sqrt(acc)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Maximum absolute row sum, the operator norm induced by `‖·‖∞`.
pub fn inf_norm(m: &Matrix) -> f64 {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| cabs(m[(i, j)])).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `m^k v`, by `k` successive applications of `m`.
pub fn mat_apply_pow(m: &Matrix, v: &Vector, k: usize) -> Result<Vector> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.cols() != v.dim() {
        return Err(Error::DimMismatch {
            expected: m.cols(),
            found: v.dim(),
        });
    }
    let mut out = v.clone();
    for _ in 0..k {
        out = m.mat_vec(&out)?;
    }
    Ok(out)
}

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors, one per column, aligned with `values`.
    pub vectors: Matrix,
}

impl HermitianEigen {
    pub fn vector(&self, k: usize) -> Vector {
        self.vectors.column(k)
    }

    /// Largest eigenvalue modulus.
    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// `tol` bounds the accepted asymmetry `‖m − m†‖_F ≤ tol·‖m‖_F`. Each pivot is
/// annihilated by a phase change followed by a real plane rotation, so real
/// symmetric input stays real throughout.
pub fn hermitian_eig(m: &Matrix, tol: f64) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let scale = m.frobenius_norm();
    let deviation = m.hermitian_deviation();
    if deviation > tol * scale {
        return Err(Error::NotHermitian {
            deviation: if scale > 0.0 {
                deviation / scale
            } else {
                deviation
            },
        });
    }

    // symmetrize away the admissible asymmetry
    let mut a = Matrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
    let mut v = Matrix::identity(n);
    let threshold = f64::EPSILON * scale;

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum();
        if libm::sqrt(off) <= threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let beta = cabs(apq);
                if beta == 0.0 || beta <= threshold * 1e-3 {
                    continue;
                }
                let phase = apq / beta;
                let alpha = a[(p, p)].re;
                let gamma = a[(q, q)].re;
                let tau = (gamma - alpha) / (2.0 * beta);
                let t = if tau >= 0.0 {
                    1.0 / (tau + libm::sqrt(1.0 + tau * tau))
                } else {
                    -1.0 / (-tau + libm::sqrt(1.0 + tau * tau))
                };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = t * c;
                // G = diag(1, conj(phase)) · [[c, s], [-s, c]]
                let g_pp = Complex64::new(c, 0.0);
                let g_pq = Complex64::new(s, 0.0);
                let g_qp = phase.conj() * (-s);
                let g_qq = phase.conj() * c;
                rotate(&mut a, &mut v, p, q, [g_pp, g_pq, g_qp, g_qq]);
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = Matrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(HermitianEigen { values, vectors })
}

// A <- G† A G, V <- V G, with G acting on coordinates p, q.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize, g: [Complex64; 4]) {
    let [g_pp, g_pq, g_qp, g_qq] = g;
    let n = a.rows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }
}

/// Flips the phase of `v` so that its first entry with modulus above `tol`
/// is real and positive.
pub fn canonical_phase(v: &Vector, tol: f64) -> Vector {
    match v.iter().find(|z| cabs(**z) > tol) {
        Some(&z) => v.scale(z.conj() / cabs(z)),
        None => v.clone(),
    }
}

/// Gram–Schmidt rank test: true when `candidate` is not in the span of the
/// orthonormal set `basis` (up to `tol`), in which case the normalized
/// remainder is appended to `basis`.
pub fn extend_orthonormal(basis: &mut Vec<Vector>, candidate: &Vector, tol: f64) -> bool {
    let mut r = candidate.clone();
    for _ in 0..2 {
        for b in basis.iter() {
            let c = b.dot(&r);
            r = r.sub(&b.scale(c));
        }
    }
    let norm = r.norm();
    if norm <= tol * candidate.norm().max(1.0) {
        return false;
    }
    basis.push(r.scale_real(1.0 / norm));
    true
}
