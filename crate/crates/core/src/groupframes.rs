//! Tight frames generated by finite groups.
//!
//! The orbit `{g·w : g ∈ G}` of any nonzero vector under an irreducible
//! orthogonal (or unitary) representation is an equal-norm tight frame with
//! frame operator `(M‖w‖²/N)·I`. This module provides the cyclic, tetrahedral
//! and icosahedral representations, orbit closure, the frames used as worked
//! examples elsewhere in the crate, and the Fibonacci approximants of the
//! icosahedral frame.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::str::FromStr;

use crate::frames::Frame;
use crate::numlin::{canonical_phase, Matrix, Vector};
use crate::{Error, Result};

/// Golden ratio `τ = (1 + √5)/2`.
pub fn golden_ratio() -> f64 {
    (1.0 + libm::sqrt(5.0)) / 2.0
}

/// Default dedup tolerance for orbit traversal.
pub const DEDUP_TOL: f64 = 1e-9;
/// Default cap on orbit size.
pub const ORBIT_CAP: usize = 10_000;

/// Generators of an orthogonal or unitary representation.
#[derive(Debug, Clone)]
pub struct OrthogonalRep {
    generators: Vec<Matrix>,
    relations_checked: bool,
}

impl OrthogonalRep {
    /// Checks `g†g = I` (within 1e-12) for every generator.
    pub fn new(generators: Vec<Matrix>) -> Result<Self> {
        let dim = generators.first().ok_or(Error::EmptyInput)?.rows();
        for g in &generators {
            if !g.is_square() {
                return Err(Error::NotSquare {
                    rows: g.rows(),
                    cols: g.cols(),
                });
            }
            if g.rows() != dim {
                return Err(Error::DimMismatch {
                    expected: dim,
                    found: g.rows(),
                });
            }
            let residual = g.adjoint().mul(g)?.identity_residual();
            if residual > 1e-12 {
                return Err(Error::NotOrthonormal { residual });
            }
        }
        Ok(Self {
            generators,
            relations_checked: false,
        })
    }

    pub fn dim(&self) -> usize {
        self.generators[0].rows()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// True when the defining relations were verified at construction.
    pub fn relations_checked(&self) -> bool {
        self.relations_checked
    }

    /// Product of generators in word order, e.g. `[0, 1]` is `g₀ g₁`.
    pub fn word(&self, word: &[usize]) -> Result<Matrix> {
        let mut out = Matrix::identity(self.dim());
        for &k in word {
            let g = self.generators.get(k).ok_or(Error::IndexRange {
                index: k,
                len: self.generators.len(),
            })?;
            out = out.mul(g)?;
        }
        Ok(out)
    }

    /// `‖w^power − I‖_F` for the word `w`.
    pub fn relation_residual(&self, word: &[usize], power: usize) -> Result<f64> {
        let w = self.word(word)?;
        let mut acc = Matrix::identity(self.dim());
        for _ in 0..power {
            acc = acc.mul(&w)?;
        }
        Ok(acc.identity_residual())
    }

    fn with_relations(mut self, relations: &[(&[usize], usize)]) -> Result<Self> {
        for &(word, power) in relations {
            let residual = self.relation_residual(word, power)?;
            if residual > 1e-12 {
                return Err(Error::NotOrthonormal { residual });
            }
        }
        self.relations_checked = true;
        Ok(self)
    }
}

/// Rotation of the plane by `2π/n`, generating `C_n`.
pub fn cyclic_rep(n: usize) -> Result<OrthogonalRep> {
    if n < 3 {
        return Err(Error::BadOrder(n));
    }
    let th = 2.0 * PI / n as f64;
    let (c, s) = (libm::cos(th), libm::sin(th));
    let g = Matrix::from_real_rows(&[&[c, -s], &[s, c]]);
    // rounding in c, s accumulates over n multiplications
    let rep = OrthogonalRep::new(alloc::vec![g])?;
    let residual = rep.relation_residual(&[0], n)?;
    if residual > 1e-12 * n as f64 {
        return Err(Error::NotOrthonormal { residual });
    }
    Ok(OrthogonalRep {
        relations_checked: true,
        ..rep
    })
}

/// Tetrahedral rotation group: `g = diag(−1, −1, 1)` and the cyclic
/// coordinate shift `h(a₁, a₂, a₃) = (a₂, a₃, a₁)`.
pub fn tetrahedral_rep() -> OrthogonalRep {
    let g = Matrix::diag(&[-1.0, -1.0, 1.0]);
    let h = Matrix::from_real_rows(&[&[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0], &[1.0, 0.0, 0.0]]);
    OrthogonalRep::new(alloc::vec![g, h])
        .and_then(|rep| rep.with_relations(&[(&[0], 2), (&[1], 3), (&[0, 1], 3)]))
        .expect("tetrahedral relations hold")
}

/// Icosahedral rotation group generated by the five-fold rotation `r` and the
/// half-turn `s = diag(−1, −1, 1)`.
pub fn icosahedral_rep() -> OrthogonalRep {
    let t = golden_ratio();
    let r = Matrix::from_real_rows(&[
        &[(t - 1.0) / 2.0, -t / 2.0, 0.5],
        &[t / 2.0, 0.5, (t - 1.0) / 2.0],
        &[-0.5, (t - 1.0) / 2.0, t / 2.0],
    ]);
    let s = Matrix::diag(&[-1.0, -1.0, 1.0]);
    OrthogonalRep::new(alloc::vec![r, s])
        .and_then(|rep| rep.with_relations(&[(&[0], 5), (&[1], 2), (&[0, 1], 3)]))
        .expect("icosahedral relations hold")
}

/// An orbit frame and how it was obtained.
#[derive(Debug, Clone)]
pub struct OrbitFrame {
    pub frame: Frame,
    pub seed: Vector,
    /// Number of distinct orbit vectors visited before any quotient.
    pub group_order_traversed: usize,
    pub quotient_by_scalar: bool,
}

impl OrbitFrame {
    /// Tightness constant `M‖w‖²/N` predicted for the orbit.
    pub fn tight_constant(&self) -> f64 {
        self.frame.len() as f64 * self.seed.norm_sqr() / self.frame.dim() as f64
    }
}

/// Breadth-first closure of `seed` under the generators.
///
/// With `quotient_by_scalar`, one vector is kept per class of scalar
/// multiples: the member whose first nonzero coordinate is real and positive.
pub fn orbit_frame(
    rep: &OrthogonalRep,
    seed: &Vector,
    quotient_by_scalar: bool,
    dedup_tol: f64,
) -> Result<OrbitFrame> {
    orbit_frame_capped(rep, seed, quotient_by_scalar, dedup_tol, ORBIT_CAP)
}

pub fn orbit_frame_capped(
    rep: &OrthogonalRep,
    seed: &Vector,
    quotient_by_scalar: bool,
    dedup_tol: f64,
    cap: usize,
) -> Result<OrbitFrame> {
    if seed.dim() != rep.dim() {
        return Err(Error::DimMismatch {
            expected: rep.dim(),
            found: seed.dim(),
        });
    }
    if seed.norm() <= dedup_tol {
        return Err(Error::ZeroSeed);
    }
    let mut orbit = alloc::vec![seed.clone()];
    let mut next = 0;
    while next < orbit.len() {
        for g in &rep.generators {
            let image = g.mat_vec(&orbit[next])?;
            if !contains(&orbit, &image, dedup_tol) {
                if orbit.len() == cap {
                    return Err(Error::OrbitOverflow { cap });
                }
                orbit.push(image);
            }
        }
        next += 1;
    }
    let traversed = orbit.len();
    let vectors = if quotient_by_scalar {
        let mut reps: Vec<Vector> = Vec::new();
        for v in &orbit {
            let canonical = canonical_phase(v, dedup_tol);
            if !contains(&reps, &canonical, dedup_tol) {
                reps.push(canonical);
            }
        }
        reps
    } else {
        orbit
    };
    Ok(OrbitFrame {
        frame: Frame::new(rep.dim(), vectors)?,
        seed: seed.clone(),
        group_order_traversed: traversed,
        quotient_by_scalar,
    })
}

fn contains(set: &[Vector], v: &Vector, tol: f64) -> bool {
    set.iter().any(|o| o.distance(v) <= tol)
}

/// Frames referred to by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFrame {
    /// Three vectors of norm √(2/3) at 120°: Parseval in R².
    Honeycomb,
    /// Four vectors `(±½, ±½, ±½)` with an odd number of minus signs flipped
    /// pairwise: Parseval in R³.
    Diamond,
    /// Six icosahedron vertices (one per antipodal pair), scaled to Parseval.
    Icosahedral6,
    /// `n` unit vectors at angles `2πk/n`; tight with constant `n/2`.
    Cn(usize),
}

impl FromStr for NamedFrame {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "honeycomb" => Ok(NamedFrame::Honeycomb),
            "diamond" => Ok(NamedFrame::Diamond),
            "icosahedral6" => Ok(NamedFrame::Icosahedral6),
            _ => s
                .strip_prefix("cn")
                .or_else(|| s.strip_prefix('c'))
                .and_then(|n| n.parse().ok())
                .filter(|&n: &usize| n >= 3)
                .map(NamedFrame::Cn)
                .ok_or_else(|| Error::BadName(s.to_string())),
        }
    }
}

/// The literal vectors of a named frame, in their conventional order.
pub fn named_frame(name: NamedFrame) -> Result<Frame> {
    match name {
        NamedFrame::Honeycomb => {
            let a = libm::sqrt(2.0 / 3.0);
            let b = 1.0 / libm::sqrt(6.0);
            let c = 1.0 / libm::sqrt(2.0);
            Frame::from_real(&[&[a, 0.0], &[-b, c], &[-b, -c]])
        }
        NamedFrame::Diamond => Frame::from_real(&[
            &[-0.5, 0.5, 0.5],
            &[0.5, -0.5, 0.5],
            &[0.5, 0.5, -0.5],
            &[-0.5, -0.5, -0.5],
        ]),
        NamedFrame::Icosahedral6 => {
            let t = golden_ratio();
            let s = 1.0 / libm::sqrt(2.0 * (t + 2.0));
            let rows = [
                [1.0, t, 0.0],
                [-1.0, t, 0.0],
                [-t, 0.0, 1.0],
                [0.0, -1.0, t],
                [t, 0.0, 1.0],
                [0.0, 1.0, t],
            ];
            let scaled: Vec<[f64; 3]> = rows.iter().map(|r| r.map(|x| x * s)).collect();
            let refs: Vec<&[f64]> = scaled.iter().map(|r| &r[..]).collect();
            Frame::from_real(&refs)
        }
        NamedFrame::Cn(n) => {
            if n < 3 {
                return Err(Error::BadOrder(n));
            }
            let vectors = (0..n)
                .map(|k| {
                    let th = 2.0 * PI * k as f64 / n as f64;
                    Vector::from_real(&[libm::cos(th), libm::sin(th)])
                })
                .collect();
            Frame::new(2, vectors)
        }
    }
}

/// `C_n(1,0)` with every vector scaled by `√(2/n)`, which makes it Parseval.
pub fn cn_parseval(n: usize) -> Result<Frame> {
    Ok(named_frame(NamedFrame::Cn(n))?.scaled(libm::sqrt(2.0 / n as f64)))
}

/// `τ_n = f_{n+1}/f_n` with `f₀ = f₁ = 1`.
pub fn fibonacci_ratio(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "fibonacci index",
            value: 0.0,
        });
    }
    let (mut prev, mut cur) = (1.0f64, 1.0f64);
    for _ in 1..=n {
        let next = prev + cur;
        prev = cur;
        cur = next;
    }
    Ok(cur / prev)
}

/// Tetrahedral orbit of `(1, τ_n, 0)`: twelve vectors, tight, periodic.
pub fn fibonacci_frame(n: usize) -> Result<Frame> {
    let tau_n = fibonacci_ratio(n)?;
    tetrahedral_orbit(&[1.0, tau_n, 0.0])
}

/// Tetrahedral orbit of `(1−t)(1,2,0) + t(1,τ,0)` for `t ∈ [0, 1]`.
pub fn deform_frame(t: f64) -> Result<Frame> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::OutOfRange {
            what: "deformation parameter",
            value: t,
        });
    }
    tetrahedral_orbit(&[1.0, (1.0 - t) * 2.0 + t * golden_ratio(), 0.0])
}

fn tetrahedral_orbit(seed: &[f64]) -> Result<Frame> {
    let seed = Vector::try_from_real(seed)?;
    Ok(orbit_frame(&tetrahedral_rep(), &seed, false, DEDUP_TOL)?.frame)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{frame_bounds, frame_operator, is_parseval};
    use proptest::prelude::*;

    fn tight_residual(f: &Frame, constant: f64) -> f64 {
        frame_operator(f)
            .sub(&Matrix::identity(f.dim()).scale_real(constant))
            .unwrap()
            .frobenius_norm()
    }

    fn same_set(a: &Frame, b: &Frame, tol: f64) -> bool {
        a.len() == b.len()
            && a.vectors()
                .iter()
                .all(|v| b.vectors().iter().any(|w| v.distance(w) <= tol))
            && b.vectors()
                .iter()
                .all(|v| a.vectors().iter().any(|w| v.distance(w) <= tol))
    }

    #[test]
    fn cyclic_rep_examples() {
        let rep4 = cyclic_rep(4).unwrap();
        let g = &rep4.generators()[0];
        let quarter = Matrix::from_real_rows(&[&[0.0, -1.0], &[1.0, 0.0]]);
        assert!(g.sub(&quarter).unwrap().max_abs() < 1e-15);
        for n in 3..=12 {
            let rep = cyclic_rep(n).unwrap();
            assert!(rep.relations_checked());
            assert!(rep.relation_residual(&[0], n).unwrap() <= 1e-12);
            let tr = rep.generators()[0].trace().re;
            assert!((tr - 2.0 * libm::cos(2.0 * PI / n as f64)).abs() < 1e-15);
        }
        assert_eq!(cyclic_rep(2).unwrap_err(), Error::BadOrder(2));
    }

    #[test]
    fn cyclic_orbit_is_honeycomb() {
        let rep = cyclic_rep(3).unwrap();
        let seed = Vector::from_real(&[libm::sqrt(2.0 / 3.0), 0.0]);
        let orbit = orbit_frame(&rep, &seed, false, DEDUP_TOL).unwrap();
        let honeycomb = named_frame(NamedFrame::Honeycomb).unwrap();
        for (a, b) in orbit.frame.vectors().iter().zip(honeycomb.vectors()) {
            assert!(a.distance(b) < 1e-12);
        }
        assert!(is_parseval(&orbit.frame, 1e-12).is_parseval);
    }

    #[test]
    fn group_relations() {
        let t = tetrahedral_rep();
        assert!(t.relations_checked());
        // h is a permutation matrix: exact
        assert_eq!(t.relation_residual(&[1], 3).unwrap(), 0.0);
        let i = icosahedral_rep();
        for (word, power) in [(&[0usize][..], 5), (&[1], 2), (&[0, 1], 3)] {
            assert!(i.relation_residual(word, power).unwrap() <= 1e-12);
        }
        let tau = golden_ratio();
        let image = i.generators()[1]
            .mat_vec(&Vector::from_real(&[1.0, tau, 0.0]))
            .unwrap();
        assert!(image.sub(&Vector::from_real(&[-1.0, -tau, 0.0])).max_abs() == 0.0);
    }

    #[test]
    fn tetrahedral_orbit_is_diamond() {
        let seed = Vector::from_real(&[-0.5, 0.5, 0.5]);
        let orbit = orbit_frame(&tetrahedral_rep(), &seed, false, DEDUP_TOL).unwrap();
        let diamond = named_frame(NamedFrame::Diamond).unwrap();
        assert!(same_set(&orbit.frame, &diamond, 1e-15));
        assert!(is_parseval(&orbit.frame, 1e-12).is_parseval);
    }

    #[test]
    fn icosahedral_quotient_orbit() {
        let tau = golden_ratio();
        let s = 1.0 / libm::sqrt(2.0 * (tau + 2.0));
        let seed = Vector::from_real(&[s, tau * s, 0.0]);
        let orbit = orbit_frame(&icosahedral_rep(), &seed, true, DEDUP_TOL).unwrap();
        assert_eq!(orbit.group_order_traversed, 12);
        assert_eq!(orbit.frame.len(), 6);
        assert!(is_parseval(&orbit.frame, 1e-12).is_parseval);
        let named = named_frame(NamedFrame::Icosahedral6).unwrap();
        for w in named.vectors() {
            let hit = orbit
                .frame
                .vectors()
                .iter()
                .any(|v| v.distance(w) < 1e-12 || v.add(w).norm() < 1e-12);
            assert!(hit);
        }
    }

    #[test]
    fn orbit_errors() {
        let rep = tetrahedral_rep();
        assert_eq!(
            orbit_frame(&rep, &Vector::zeros(3), false, DEDUP_TOL).unwrap_err(),
            Error::ZeroSeed
        );
        let seed = Vector::from_real(&[1.0, 2.0, 0.0]);
        assert_eq!(
            orbit_frame_capped(&rep, &seed, false, DEDUP_TOL, 5).unwrap_err(),
            Error::OrbitOverflow { cap: 5 }
        );
        // an irrational rotation has an infinite orbit
        let th: f64 = 1.0;
        let g = Matrix::from_real_rows(&[
            &[libm::cos(th), -libm::sin(th)],
            &[libm::sin(th), libm::cos(th)],
        ]);
        let rep = OrthogonalRep::new(alloc::vec![g]).unwrap();
        assert!(matches!(
            orbit_frame(&rep, &Vector::from_real(&[1.0, 0.0]), false, DEDUP_TOL),
            Err(Error::OrbitOverflow { .. })
        ));
        let not_orthogonal = Matrix::from_real_rows(&[&[2.0, 0.0], &[0.0, 1.0]]);
        assert!(OrthogonalRep::new(alloc::vec![not_orthogonal]).is_err());
    }

    #[test]
    fn named_frames() {
        let h = named_frame(NamedFrame::Honeycomb).unwrap();
        assert!((h.vector(1)[1].re - 1.0 / libm::sqrt(2.0)).abs() < 1e-16);
        assert!(is_parseval(&named_frame(NamedFrame::Diamond).unwrap(), 1e-12).is_parseval);
        assert!(is_parseval(&named_frame(NamedFrame::Icosahedral6).unwrap(), 1e-12).is_parseval);
        let c8 = named_frame(NamedFrame::Cn(8)).unwrap();
        assert_eq!(c8.len(), 8);
        assert!(tight_residual(&c8, 4.0) < 1e-12);
        let (a, b) = frame_bounds(&c8).unwrap();
        assert!((a - 4.0).abs() < 1e-12 && (b - 4.0).abs() < 1e-12);
        assert_eq!("c7".parse::<NamedFrame>().unwrap(), NamedFrame::Cn(7));
        assert_eq!("cn12".parse::<NamedFrame>().unwrap(), NamedFrame::Cn(12));
        assert!(matches!(
            "square".parse::<NamedFrame>(),
            Err(Error::BadName(_))
        ));
        assert!(matches!("c2".parse::<NamedFrame>(), Err(Error::BadName(_))));
    }

    #[test]
    fn weighted_cn_resolves_identity() {
        for n in 3..=64 {
            assert!(
                is_parseval(&cn_parseval(n).unwrap(), 1e-12).is_parseval,
                "n = {n}"
            );
        }
    }

    #[test]
    fn fibonacci_ratios() {
        assert_eq!(fibonacci_ratio(1).unwrap(), 2.0);
        assert_eq!(fibonacci_ratio(2).unwrap(), 1.5);
        assert!((fibonacci_ratio(3).unwrap() - 5.0 / 3.0).abs() < 1e-16);
        assert!(fibonacci_ratio(0).is_err());
    }

    #[test]
    fn fibonacci_frames_approach_icosahedral() {
        let tau = golden_ratio();
        let ico = orbit_frame(
            &icosahedral_rep(),
            &Vector::from_real(&[1.0, tau, 0.0]),
            false,
            DEDUP_TOL,
        )
        .unwrap()
        .frame;
        for n in 1..=20 {
            let f = fibonacci_frame(n).unwrap();
            assert_eq!(f.len(), 12);
            let constant = 12.0 * f.vector(0).norm_sqr() / 3.0;
            assert!(tight_residual(&f, constant) <= 1e-10 * constant);
            let gap = (fibonacci_ratio(n).unwrap() - tau).abs();
            let worst = f
                .vectors()
                .iter()
                .map(|v| {
                    ico.vectors()
                        .iter()
                        .map(|w| v.distance(w))
                        .fold(f64::INFINITY, f64::min)
                })
                .fold(0.0, f64::max);
            assert!(worst <= 12.0 * gap + 1e-15, "n = {n}");
        }
    }

    #[test]
    fn deformation_endpoints() {
        let tau = golden_ratio();
        let start = deform_frame(0.0).unwrap();
        let periodic = tetrahedral_orbit(&[1.0, 2.0, 0.0]).unwrap();
        assert!(same_set(&start, &periodic, 0.0));
        let end = deform_frame(1.0).unwrap();
        let ico = orbit_frame(
            &icosahedral_rep(),
            &Vector::from_real(&[1.0, tau, 0.0]),
            false,
            DEDUP_TOL,
        )
        .unwrap()
        .frame;
        assert!(same_set(&end, &ico, 1e-12));
        assert!(deform_frame(1.5).is_err());
        assert!(deform_frame(-0.1).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn deformation_stays_tight(t in 0.0f64..=1.0) {
            let f = deform_frame(t).unwrap();
            let seed_norm = 1.0 + libm::pow((1.0 - t) * 2.0 + t * golden_ratio(), 2.0);
            prop_assert!(tight_residual(&f, 12.0 * seed_norm / 3.0) <= 1e-10 * seed_norm);
        }

        #[test]
        fn orbits_are_equal_norm_tight(
            x in -2.0f64..2.0, y in -2.0f64..2.0, z in -2.0f64..2.0,
            ico in proptest::bool::ANY,
        ) {
            let seed = Vector::from_real(&[x, y, z]);
            prop_assume!(seed.norm() > 1e-3);
            let rep = if ico { icosahedral_rep() } else { tetrahedral_rep() };
            let orbit = orbit_frame(&rep, &seed, false, DEDUP_TOL).unwrap();
            let f = &orbit.frame;
            let first = f.vector(0).norm();
            for v in f.vectors() {
                prop_assert!((v.norm() - first).abs() <= 1e-12);
            }
            prop_assert!(tight_residual(f, orbit.tight_constant()) <= 1e-10 * orbit.tight_constant().max(1.0));

            // union of two orbits is tight
            let other = orbit_frame(&rep, &Vector::from_real(&[y, z + 1.0, x]), false, DEDUP_TOL).unwrap();
            let mut all = f.vectors().to_vec();
            all.extend(other.frame.vectors().iter().cloned());
            let union = Frame::new(3, all).unwrap();
            let s = frame_operator(&union);
            let c = s.trace().re / 3.0;
            prop_assert!(tight_residual(&union, c) <= 1e-10 * c.max(1.0));
        }
    }
}
