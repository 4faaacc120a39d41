//! Integer models of the honeycomb lattice and the diamond structure.
//!
//! A honeycomb node is a triple `n ∈ Z³` with `n₁+n₂+n₃ ∈ {0, 1}`; a diamond
//! node is a quadruple in `Z⁴` with the same constraint. The physical site is
//! `Σ nᵢ wᵢ` for the honeycomb (resp. diamond) Parseval frame. Nearest
//! neighbours are `nⁱ = n + ν(n)eᵢ` with `ν(n) = (−1)^{Σnᵢ}`, and the word
//! metric is the ℓ¹ distance.

use alloc::vec::Vec;

use crate::groupframes::{named_frame, NamedFrame};
use crate::{Error, Result};

/// Largest radius accepted by [`generate_patch`].
pub const MAX_PATCH_RADIUS: u32 = 50;

/// A lattice node in `Z^D` whose coordinates sum to 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node<const D: usize>([i64; D]);

/// Honeycomb lattice node.
pub type HoneycombNode = Node<3>;
/// Diamond structure node.
pub type DiamondNode = Node<4>;

impl<const D: usize> Node<D> {
    pub fn new(coords: [i64; D]) -> Result<Self> {
        if D != 3 && D != 4 {
            return Err(Error::DimUnsupported { dim: D });
        }
        match coords.iter().sum::<i64>() {
            0 | 1 => Ok(Node(coords)),
            _ => Err(Error::InvalidNode),
        }
    }

    pub fn origin() -> Self {
        Node([0; D])
    }

    pub fn coords(&self) -> [i64; D] {
        self.0
    }

    /// `ν(n) = (−1)^{Σnᵢ}`.
    pub fn parity(&self) -> i64 {
        if self.0.iter().sum::<i64>() == 0 {
            1
        } else {
            -1
        }
    }

    /// Neighbour `nⁱ`, with `i` 1-based.
    pub fn neighbor(&self, i: usize) -> Result<Self> {
        if i == 0 || i > D {
            return Err(Error::IndexRange { index: i, len: D });
        }
        let mut c = self.0;
        c[i - 1] += self.parity();
        Ok(Node(c))
    }

    /// All `D` nearest neighbours, in index order.
    pub fn neighbors(&self) -> Vec<Self> {
        (1..=D)
            .map(|i| self.neighbor(i).expect("index in range"))
            .collect()
    }

    /// Iterated neighbour `n^{i₁…i_k}`.
    pub fn compose_neighbor(&self, path: &[usize]) -> Result<Self> {
        path.iter().try_fold(*self, |n, &i| n.neighbor(i))
    }

    /// ℓ¹ distance.
    pub fn dist(&self, other: &Self) -> u64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.abs_diff(*b))
            .sum()
    }

    /// Symmetry generator `which ∈ {1, 2, 3}`: two coordinate permutations and
    /// the point flip `n ↦ e₁ − n`.
    pub fn symmetry_apply(&self, which: usize) -> Result<Self> {
        let n = self.0;
        let mut out = n;
        match (D, which) {
            (3, 1) => {
                out[0] = n[1];
                out[1] = n[2];
                out[2] = n[0];
            }
            (3, 2) => {
                out[1] = n[2];
                out[2] = n[1];
            }
            (4, 1) => {
                out[0] = n[2];
                out[1] = n[3];
                out[2] = n[1];
                out[3] = n[0];
            }
            (4, 2) => {
                out[0] = n[3];
                out[3] = n[0];
            }
            (_, 3) => {
                for (o, x) in out.iter_mut().zip(n.iter()) {
                    *o = -x;
                }
                out[0] += 1;
            }
            _ => return Err(Error::BadGenerator(which)),
        }
        Ok(Node(out))
    }

    /// Physical position `Σ nᵢ wᵢ` in `R^{D−1}`.
    pub fn embed(&self) -> Vec<f64> {
        let name = if D == 3 {
            NamedFrame::Honeycomb
        } else {
            NamedFrame::Diamond
        };
        let frame = named_frame(name).expect("named frame");
        let mut x = alloc::vec![0.0; D - 1];
        for (n, w) in self.0.iter().zip(frame.vectors()) {
            for (xk, wk) in x.iter_mut().zip(w.iter()) {
                *xk += *n as f64 * wk.re;
            }
        }
        x
    }
}

/// All nodes within ℓ¹ distance `radius` of the origin, in lexicographic order.
pub fn generate_patch<const D: usize>(radius: u32) -> Result<Vec<Node<D>>> {
    if D != 3 && D != 4 {
        return Err(Error::DimUnsupported { dim: D });
    }
    if radius > MAX_PATCH_RADIUS {
        return Err(Error::OutOfRange {
            what: "patch radius",
            value: radius as f64,
        });
    }
    let mut out = Vec::new();
    let mut coords = [0i64; D];
    fill(&mut coords, 0, radius as i64, &mut out);
    Ok(out)
}

fn fill<const D: usize>(coords: &mut [i64; D], k: usize, budget: i64, out: &mut Vec<Node<D>>) {
    if k == D {
        if matches!(coords.iter().sum::<i64>(), 0 | 1) {
            out.push(Node(*coords));
        }
        return;
    }
    for c in -budget..=budget {
        coords[k] = c;
        fill(coords, k + 1, budget - c.abs(), out);
    }
}
