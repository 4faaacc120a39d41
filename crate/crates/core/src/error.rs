use core::fmt;

/// Errors produced by the frame toolkit.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Matrix is not square.
    NotSquare { rows: usize, cols: usize },
    /// Matrix fails the Hermitian symmetry check.
    NotHermitian { deviation: f64 },
    /// Operand dimensions do not agree.
    DimMismatch { expected: usize, found: usize },
    /// A value is NaN or infinite.
    NonFinite,
    /// The vectors do not span the space (smallest frame bound too small).
    NotAFrame { lower_bound: f64 },
    /// A frame vector is (numerically) zero.
    ZeroVector { index: usize },
    /// The frame operator is not the identity.
    NotParseval { residual: f64 },
    /// The input system is not orthonormal.
    NotOrthonormal { residual: f64 },
    /// M = N: there is no orthocomplement.
    NoComplement,
    /// Cyclic group order below 3.
    BadOrder(usize),
    /// Orbit closure exceeded the element cap.
    OrbitOverflow { cap: usize },
    /// Orbit seed is the zero vector.
    ZeroSeed,
    /// Unknown frame or lattice name.
    BadName(alloc::string::String),
    /// Parameter outside its admissible range.
    OutOfRange { what: &'static str, value: f64 },
    /// Integer tuple violates the lattice coordinate-sum constraint.
    InvalidNode,
    /// Neighbor or matrix index out of range.
    IndexRange { index: usize, len: usize },
    /// Unknown symmetry generator id.
    BadGenerator(usize),
    /// The operation only supports a few small dimensions.
    DimUnsupported { dim: usize },
    /// The integer box to enumerate exceeds the enumeration cap.
    BoxTooLarge { points: u128, cap: u128 },
    /// Empty input where at least one element is required.
    EmptyInput,
    /// Inconsistent size parameters.
    BadDims { what: &'static str },
    /// Fiducial vector is not a unit vector.
    NotUnit { norm: f64 },
    /// The operation needs a real frame.
    RealFieldRequired,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            Error::NotHermitian { deviation } => {
                write!(
                    f,
                    "matrix is not Hermitian (relative deviation {deviation:e})"
                )
            }
            Error::DimMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NonFinite => f.write_str("non-finite value"),
            Error::NotAFrame { lower_bound } => {
                write!(
                    f,
                    "vectors do not span the space (lower frame bound {lower_bound:e})"
                )
            }
            Error::ZeroVector { index } => write!(f, "frame vector {index} is zero"),
            Error::NotParseval { residual } => {
                write!(f, "frame is not Parseval (residual {residual:e})")
            }
            Error::NotOrthonormal { residual } => {
                write!(f, "system is not orthonormal (residual {residual:e})")
            }
            Error::NoComplement => f.write_str("frame has no orthocomplement (M = N)"),
            Error::BadOrder(n) => write!(f, "cyclic group order {n} is below 3"),
            Error::OrbitOverflow { cap } => write!(f, "orbit exceeds {cap} elements"),
            Error::ZeroSeed => f.write_str("orbit seed is zero"),
            Error::BadName(name) => write!(f, "unknown name `{name}`"),
            Error::OutOfRange { what, value } => write!(f, "{what} = {value} is out of range"),
            Error::InvalidNode => f.write_str("coordinate sum must be 0 or 1"),
            Error::IndexRange { index, len } => write!(f, "index {index} out of range 0..{len}"),
            Error::BadGenerator(id) => write!(f, "unknown symmetry generator {id}"),
            Error::DimUnsupported { dim } => write!(f, "dimension {dim} is not supported"),
            Error::BoxTooLarge { points, cap } => {
                write!(f, "box has {points} points, enumeration cap is {cap}")
            }
            Error::EmptyInput => f.write_str("empty input"),
            Error::BadDims { what } => write!(f, "bad dimensions: {what}"),
            Error::NotUnit { norm } => write!(f, "fiducial norm is {norm}, expected 1"),
            Error::RealFieldRequired => f.write_str("operation requires a real frame"),
        }
    }
}

impl core::error::Error for Error {}
