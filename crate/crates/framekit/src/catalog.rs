//! Frames addressable by name.
//!
//! | name            | frame                                                   |
//! |-----------------|---------------------------------------------------------|
//! | `honeycomb`     | three vectors in R², Parseval                           |
//! | `diamond`       | four vectors in R³, Parseval                            |
//! | `icosahedral6`  | six icosahedron vertices in R³, Parseval                |
//! | `cN`            | `N ≥ 3` unit vectors at angles `2πk/N`, scaled to Parseval |
//! | `fibN`          | twelve-vector Fibonacci approximant, scaled to Parseval |
//! | `simplexN`      | `N+1` unit vectors in R^N, weights `N/(N+1)`            |
//! | `dftM_N`        | DFT subspace frame, `1 ≤ N ≤ M`                          |
//! | `weyl2`         | Weyl frame with fiducial `(3/5, 4/5)`                   |
//! | `weyl3`         | Weyl frame with fiducial `(1/√2, 1/√2, 0)`              |
//! | `clusterN`      | cluster frame of the `N×N` crystal, `N ≥ 3`             |

use framekit_core::frames::{normalize, Frame, NormalizedFrame};
use framekit_core::groupframes::{cn_parseval, fibonacci_frame, named_frame, NamedFrame};
use framekit_core::numlin::Vector;
use framekit_core::quantize::{cluster_frame, dft_frame, simplex_frame, weyl_frame};

use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    Honeycomb,
    Diamond,
    Icosahedral6,
    Cn(usize),
    Fibonacci(usize),
    Simplex(usize),
    Dft(usize, usize),
    Weyl(usize),
    Cluster(usize),
}

fn number(s: &str, prefix: &str) -> Option<usize> {
    s.strip_prefix(prefix)?.parse().ok()
}

/// Parses a frame name; `None` when the string is not a name at all.
pub fn parse_name(s: &str) -> Option<Named> {
    match s {
        "honeycomb" => return Some(Named::Honeycomb),
        "diamond" => return Some(Named::Diamond),
        "icosahedral6" => return Some(Named::Icosahedral6),
        "weyl2" => return Some(Named::Weyl(2)),
        "weyl3" => return Some(Named::Weyl(3)),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("dft") {
        let (m, n) = rest.split_once('_')?;
        return Some(Named::Dft(m.parse().ok()?, n.parse().ok()?));
    }
    None.or_else(|| number(s, "simplex").map(Named::Simplex))
        .or_else(|| number(s, "cluster").map(Named::Cluster))
        .or_else(|| number(s, "fib").map(Named::Fibonacci))
        .or_else(|| number(s, "c").map(Named::Cn))
}

/// A frame together with its normalized form when it is Parseval.
#[derive(Debug, Clone)]
pub struct FrameSource {
    pub frame: Frame,
    pub normalized: Option<NormalizedFrame>,
    /// Write unit vectors plus weights instead of the raw vectors.
    pub weighted: bool,
}

impl FrameSource {
    pub fn from_frame(frame: Frame) -> Self {
        let normalized = normalize(&frame).ok();
        FrameSource {
            frame,
            normalized,
            weighted: false,
        }
    }

    pub fn from_normalized(nf: NormalizedFrame) -> Self {
        FrameSource {
            frame: nf.to_frame(),
            normalized: Some(nf),
            weighted: true,
        }
    }

    /// The normalized frame, or the reason there is none.
    pub fn require_normalized(&self) -> Result<&NormalizedFrame> {
        match &self.normalized {
            Some(nf) => Ok(nf),
            None => Err(normalize(&self.frame)
                .expect_err("normalization failed before")
                .into()),
        }
    }
}

pub fn build(named: Named) -> Result<FrameSource> {
    Ok(match named {
        Named::Honeycomb => FrameSource::from_frame(named_frame(NamedFrame::Honeycomb)?),
        Named::Diamond => FrameSource::from_frame(named_frame(NamedFrame::Diamond)?),
        Named::Icosahedral6 => FrameSource::from_frame(named_frame(NamedFrame::Icosahedral6)?),
        Named::Cn(n) => FrameSource::from_frame(cn_parseval(n)?),
        Named::Fibonacci(n) => {
            let f = fibonacci_frame(n)?;
            let tight = f.len() as f64 * f.vector(0).norm_sqr() / f.dim() as f64;
            FrameSource::from_frame(f.scaled(1.0 / tight.sqrt()))
        }
        Named::Simplex(n) => FrameSource::from_normalized(simplex_frame(n)?),
        Named::Dft(m, n) => FrameSource::from_normalized(dft_frame(m, n)?),
        Named::Weyl(2) => {
            FrameSource::from_normalized(weyl_frame(2, &Vector::from_real(&[0.6, 0.8]))?.frame)
        }
        Named::Weyl(3) => {
            let s = 0.5f64.sqrt();
            FrameSource::from_normalized(weyl_frame(3, &Vector::from_real(&[s, s, 0.0]))?.frame)
        }
        Named::Weyl(n) => return Err(framekit_core::Error::BadName(format!("weyl{n}")).into()),
        Named::Cluster(n) => FrameSource::from_normalized(cluster_frame(n)?),
    })
}
