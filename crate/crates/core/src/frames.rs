//! Frame algebra: frame operators and bounds, Parseval checks, normalized
//! Parseval frames, frames obtained by projection, the Naimark embedding into
//! the superspace `K^M`, complementary frames, and the stochastic profile
//! `(U, K, P, r, η, ζ, ϖ)` of a normalized Parseval frame.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::numlin::{cabs, canonical_phase, hermitian_eig, Matrix, Vector, EIGEN_TOL};
use crate::{Error, Result};

/// Smallest frame-operator eigenvalue that still counts as spanning.
pub const SPAN_TOL: f64 = 1e-10;
/// Default Frobenius tolerance on `‖S − I‖_F` for operations that require a
/// Parseval frame.
pub const PARSEVAL_TOL: f64 = 1e-10;
/// Vectors shorter than this are treated as zero by [`normalize`].
pub const ZERO_TOL: f64 = 1e-12;
/// Tolerance for unit norms and weight sums of a [`NormalizedFrame`].
pub const NORMALIZED_TOL: f64 = 1e-10;

/// Scalar field of a frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    fn of(vectors: &[Vector]) -> Field {
        if vectors.iter().all(|v| v.iter().all(|z| z.im == 0.0)) {
            Field::Real
        } else {
            Field::Complex
        }
    }
}

/// An ordered family of `M` vectors in `K^N`.
///
/// Construction only checks shapes; whether the vectors span is reported by
/// [`frame_bounds`].
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    field: Field,
    dim: usize,
    vectors: Vec<Vector>,
}

impl Frame {
    pub fn new(dim: usize, vectors: Vec<Vector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::BadDims {
                what: "frame dimension must be positive",
            });
        }
        if let Some(v) = vectors.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimMismatch {
                expected: dim,
                found: v.dim(),
            });
        }
        if vectors.len() < dim {
            return Err(Error::NotAFrame { lower_bound: 0.0 });
        }
        Ok(Self {
            field: Field::of(&vectors),
            dim,
            vectors,
        })
    }

    /// Real frame from rows of coordinates.
    pub fn from_real(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.first().map_or(0, |r| r.len());
        let vectors = rows
            .iter()
            .map(|r| Vector::try_from_real(r))
            .collect::<Result<_>>()?;
        Self::new(dim, vectors)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Ambient dimension `N`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of vectors `M`.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &Vector {
        &self.vectors[i]
    }

    /// Multiplies every vector by `s`.
    pub fn scaled(&self, s: f64) -> Frame {
        Frame {
            field: self.field,
            dim: self.dim,
            vectors: self.vectors.iter().map(|v| v.scale_real(s)).collect(),
        }
    }

    /// Gram matrix `G_ij = ⟨w_i|w_j⟩`.
    pub fn gram(&self) -> Matrix {
        let m = self.len();
        Matrix::from_fn(m, m, |i, j| self.vectors[i].dot(&self.vectors[j]))
    }

    /// Matrix with the frame vectors as columns (N×M).
    pub fn as_columns(&self) -> Matrix {
        Matrix::from_columns(&self.vectors)
    }
}

/// Unit vectors with positive weights resolving the identity,
/// `Σ κ_i |u_i⟩⟨u_i| = I`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedFrame {
    dim: usize,
    units: Vec<Vector>,
    weights: Vec<f64>,
}

impl NormalizedFrame {
    /// Validates unit norms, positive weights, `Σκ_i = N` and the resolution
    /// of the identity.
    pub fn new(dim: usize, units: Vec<Vector>, weights: Vec<f64>) -> Result<Self> {
        if units.len() != weights.len() {
            return Err(Error::DimMismatch {
                expected: units.len(),
                found: weights.len(),
            });
        }
        Frame::new(dim, units.clone())?;
        if weights
            .iter()
            .any(|&k| k.is_nan() || k <= 0.0 || !k.is_finite())
        {
            return Err(Error::BadDims {
                what: "weights must be positive",
            });
        }
        for (i, u) in units.iter().enumerate() {
            let n = u.norm();
            if (n - 1.0).abs() > NORMALIZED_TOL {
                return if n <= ZERO_TOL {
                    Err(Error::ZeroVector { index: i })
                } else {
                    Err(Error::NotUnit { norm: n })
                };
            }
        }
        let nf = Self {
            dim,
            units,
            weights,
        };
        let residual = nf.resolution().identity_residual();
        if residual > PARSEVAL_TOL {
            return Err(Error::NotParseval { residual });
        }
        Ok(nf)
    }

    /// Equal weights `N/M`.
    pub fn equal_weights(dim: usize, units: Vec<Vector>) -> Result<Self> {
        let w = dim as f64 / units.len() as f64;
        let weights = alloc::vec![w; units.len()];
        Self::new(dim, units, weights)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    pub fn units(&self) -> &[Vector] {
        &self.units
    }

    pub fn unit(&self, i: usize) -> &Vector {
        &self.units[i]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight_sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// `Σ κ_i |u_i⟩⟨u_i|`.
    pub fn resolution(&self) -> Matrix {
        let mut s = Matrix::zeros(self.dim, self.dim);
        for (u, &k) in self.units.iter().zip(&self.weights) {
            s.add_outer(k, u, u);
        }
        s
    }

    /// The Parseval frame `{√κ_i u_i}`.
    pub fn to_frame(&self) -> Frame {
        let vectors = self
            .units
            .iter()
            .zip(&self.weights)
            .map(|(u, &k)| u.scale_real(libm::sqrt(k)))
            .collect();
        Frame::new(self.dim, vectors).expect("normalized frame has valid shape")
    }

    /// Overlap `⟨u_i|u_j⟩`.
    pub fn overlap(&self, i: usize, j: usize) -> Complex64 {
        self.units[i].dot(&self.units[j])
    }
}

/// `S = Σ |w_i⟩⟨w_i|`.
pub fn frame_operator(f: &Frame) -> Matrix {
    let mut s = Matrix::zeros(f.dim, f.dim);
    for w in &f.vectors {
        s.add_outer(1.0, w, w);
    }
    s
}

/// Optimal frame bounds `(A, B)`: extreme eigenvalues of the frame operator.
pub fn frame_bounds(f: &Frame) -> Result<(f64, f64)> {
    let eig = hermitian_eig(&frame_operator(f), EIGEN_TOL)?;
    let lower = eig.values[0];
    let upper = *eig.values.last().expect("dim > 0");
    if lower <= SPAN_TOL {
        return Err(Error::NotAFrame { lower_bound: lower });
    }
    Ok((lower, upper))
}

/// Outcome of [`is_parseval`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParsevalCheck {
    pub is_parseval: bool,
    /// `‖S − I‖_F`.
    pub residual: f64,
}

pub fn is_parseval(f: &Frame, tol: f64) -> ParsevalCheck {
    let residual = frame_operator(f).identity_residual();
    ParsevalCheck {
        is_parseval: residual <= tol,
        residual,
    }
}

fn require_parseval(f: &Frame) -> Result<()> {
    let check = is_parseval(f, PARSEVAL_TOL);
    if check.is_parseval {
        Ok(())
    } else {
        Err(Error::NotParseval {
            residual: check.residual,
        })
    }
}

/// Splits a Parseval frame into unit vectors and weights `κ_i = ‖w_i‖²`.
pub fn normalize(f: &Frame) -> Result<NormalizedFrame> {
    if let Some(index) = f.vectors.iter().position(|w| w.norm() <= ZERO_TOL) {
        return Err(Error::ZeroVector { index });
    }
    require_parseval(f)?;
    let weights: Vec<f64> = f.vectors.iter().map(Vector::norm_sqr).collect();
    let units = f
        .vectors
        .iter()
        .zip(&weights)
        .map(|(w, &k)| w.scale_real(1.0 / libm::sqrt(k)))
        .collect();
    NormalizedFrame::new(f.dim, units, weights)
}

/// Parseval frame obtained by projecting the canonical basis of `K^M` onto
/// the span of an orthonormal system `φ_1..φ_N`.
///
/// The vectors are expressed in the `φ` coordinates: `w_i[j] = ⟨φ_j|e_i⟩`.
/// Zero projections are kept.
pub fn from_projection(phi: &[Vector]) -> Result<Frame> {
    let n = phi.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let m = phi[0].dim();
    if let Some(p) = phi.iter().find(|p| p.dim() != m) {
        return Err(Error::DimMismatch {
            expected: m,
            found: p.dim(),
        });
    }
    let gram = Matrix::from_fn(n, n, |j, k| phi[j].dot(&phi[k]));
    let residual = gram.identity_residual();
    if residual > 1e-10 {
        return Err(Error::NotOrthonormal { residual });
    }
    let vectors = (0..m)
        .map(|i| Vector::new((0..n).map(|j| phi[j][i].conj()).collect()))
        .collect::<Result<Vec<_>>>()?;
    Frame::new(n, vectors)
}

/// Coefficients `(⟨w_1|v⟩, …, ⟨w_M|v⟩)`.
pub fn analysis(f: &Frame, v: &Vector) -> Result<Vector> {
    if v.dim() != f.dim {
        return Err(Error::DimMismatch {
            expected: f.dim,
            found: v.dim(),
        });
    }
    Vector::new(f.vectors.iter().map(|w| w.dot(v)).collect())
}

/// `Σ x_i w_i`.
pub fn synthesis(f: &Frame, x: &Vector) -> Result<Vector> {
    if x.dim() != f.len() {
        return Err(Error::DimMismatch {
            expected: f.len(),
            found: x.dim(),
        });
    }
    let mut out = Vector::zeros(f.dim);
    for (w, &xi) in f.vectors.iter().zip(x.iter()) {
        out = out.add(&w.scale(xi));
    }
    Ok(out)
}

/// `L_{ji} = √κ_i ⟨j|u_i⟩` (N×M); `L L† = I`.
pub fn synthesis_matrix(nf: &NormalizedFrame) -> Matrix {
    Matrix::from_fn(nf.dim, nf.len(), |j, i| {
        nf.units[i][j] * libm::sqrt(nf.weights[i])
    })
}

/// A Parseval frame viewed inside the superspace `K^M`.
#[derive(Debug, Clone)]
pub struct NaimarkEmbedding {
    frame: Frame,
    /// `φ_j = (⟨w_1|j⟩, …, ⟨w_M|j⟩)`, an orthonormal system in `K^M`.
    pub phi: Vec<Vector>,
    /// Orthogonal projector onto `span{φ_j}`; `π_{ik} = ⟨w_i|w_k⟩`.
    pub pi: Matrix,
}

impl NaimarkEmbedding {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// The isometry `v ↦ ṽ = (⟨w_1|v⟩, …, ⟨w_M|v⟩)`.
    pub fn lift(&self, v: &Vector) -> Result<Vector> {
        analysis(&self.frame, v)
    }

    /// `w̃_i = π e_i`.
    pub fn lifted_vector(&self, i: usize) -> Vector {
        self.pi.column(i)
    }
}

pub fn naimark_embed(f: &Frame) -> Result<NaimarkEmbedding> {
    require_parseval(f)?;
    let m = f.len();
    let phi: Vec<Vector> = (0..f.dim)
        .map(|j| Vector::new((0..m).map(|i| f.vectors[i][j].conj()).collect()))
        .collect::<Result<_>>()?;
    let mut pi = Matrix::zeros(m, m);
    for p in &phi {
        pi.add_outer(1.0, p, p);
    }
    Ok(NaimarkEmbedding {
        frame: f.clone(),
        phi,
        pi,
    })
}

/// Complementary frame together with its superspace picture.
#[derive(Debug, Clone)]
pub struct ComplementaryFrame {
    /// Parseval frame in `K^{M−N}`, coordinates relative to `basis`.
    pub frame: Frame,
    /// Orthonormal basis of `ker π` used for the coordinates.
    pub basis: Vec<Vector>,
    /// `w̃⊥_i = (I − π) e_i` in superspace coordinates.
    pub superspace: Vec<Vector>,
}

/// Orthonormal basis of `ker π` from the eigenvalue-0 eigenvectors of `π`,
/// each with its first significant entry made real and positive.
pub(crate) fn kernel_basis(pi: &Matrix, rank: usize) -> Result<Vec<Vector>> {
    let eig = hermitian_eig(pi, EIGEN_TOL)?;
    let m = pi.rows();
    Ok((0..m - rank)
        .map(|k| canonical_phase(&eig.vector(k), 1e-9))
        .collect())
}

pub fn complementary_frame(f: &Frame) -> Result<ComplementaryFrame> {
    let emb = naimark_embed(f)?;
    let m = f.len();
    if m == f.dim {
        return Err(Error::NoComplement);
    }
    let basis = kernel_basis(&emb.pi, f.dim)?;
    let vectors = (0..m)
        .map(|i| Vector::new(basis.iter().map(|b| b[i].conj()).collect()))
        .collect::<Result<Vec<_>>>()?;
    let identity = Matrix::identity(m);
    let pi_perp = identity.sub(&emb.pi)?;
    let superspace = (0..m).map(|i| pi_perp.column(i)).collect();
    Ok(ComplementaryFrame {
        frame: Frame::new(m - f.dim, vectors)?,
        basis,
        superspace,
    })
}

/// Overlap statistics of a normalized Parseval frame.
#[derive(Debug, Clone)]
pub struct StochasticProfile {
    /// `U_ij = |⟨u_i|u_j⟩|²`.
    pub overlap: Matrix,
    /// `K = diag(κ)`.
    pub weights: Matrix,
    /// Row-stochastic `P = U K`.
    pub transition: Matrix,
    /// Spectral radius `r` of `U`.
    pub perron_radius: f64,
    /// Normalized eigenvector of `U` for `r`, with positive orientation.
    pub perron_vector: Vec<f64>,
    /// `η = r − 1`.
    pub eta: f64,
    /// `ζ = 1 − min κ_i`.
    pub zeta: f64,
    /// Stationary row vector `ϖ = κ/N`.
    pub stationary: Vec<f64>,
    /// Spectral radius of `P`, from the symmetric `K^{1/2} U K^{1/2}`.
    pub transition_radius: f64,
    /// Some pair of frame vectors is orthogonal, so Perron–Frobenius
    /// simplicity of `r` is not guaranteed.
    pub has_orthogonal_pairs: bool,
}

pub fn stochastic_profile(nf: &NormalizedFrame) -> Result<StochasticProfile> {
    let m = nf.len();
    let n = nf.dim as f64;
    let overlap = Matrix::from_fn(m, m, |i, j| {
        if i == j {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(nf.overlap(i, j).norm_sqr(), 0.0)
        }
    });
    let weights = Matrix::diag(&nf.weights);
    let transition = overlap.mul(&weights)?;

    let eig = hermitian_eig(&overlap, EIGEN_TOL)?;
    let top = m - 1;
    let perron_radius = eig.spectral_radius();
    let mut perron_vector = eig.vector(top).re();
    if perron_vector.iter().sum::<f64>() < 0.0 {
        perron_vector.iter_mut().for_each(|x| *x = -*x);
    }

    let sqrt_k: Vec<f64> = nf.weights.iter().map(|&k| libm::sqrt(k)).collect();
    let symmetric = Matrix::from_fn(m, m, |i, j| overlap[(i, j)] * (sqrt_k[i] * sqrt_k[j]));
    let transition_radius = hermitian_eig(&symmetric, EIGEN_TOL)?.spectral_radius();

    let min_weight = nf.weights.iter().copied().fold(f64::INFINITY, f64::min);
    let has_orthogonal_pairs =
        (0..m).any(|i| (0..m).any(|j| i != j && cabs(overlap[(i, j)]) <= 1e-14));

    Ok(StochasticProfile {
        overlap,
        weights,
        transition,
        perron_radius,
        perron_vector,
        eta: perron_radius - 1.0,
        zeta: 1.0 - min_weight,
        stationary: nf.weights.iter().map(|k| k / n).collect(),
        transition_radius,
        has_orthogonal_pairs,
    })
}
