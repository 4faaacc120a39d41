//! Cut-and-project point sets from a real Parseval frame.
//!
//! A Parseval frame `{w_i}` of `M` vectors in `R^N` embeds `R^N` in the
//! superspace `R^M` as the range of `π = (⟨w_i|w_j⟩)`. Integer points
//! `n ∈ Z^M` project to `π n` (physical, coordinates `Σ nᵢ wᵢ`) and to
//! `π⊥ n` (internal, the star map). The set
//!
//! ```text
//! Q = { π n : n ∈ Z^M, π⊥ n ∈ π⊥([0,1]^M) }
//! ```
//!
//! is periodic or quasiperiodic depending on the frame. Points are kept as
//! integer preimages throughout, so the star map is never inverted.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::frames::{kernel_basis, naimark_embed, Field, Frame};
use crate::numlin::{Matrix, Vector};
use crate::{Error, Result};

/// Default cap on the number of integer points enumerated.
pub const ENUMERATION_CAP: u128 = 100_000_000;
/// Window membership slack, toward inclusion.
pub const WINDOW_TOL: f64 = 1e-10;
/// Rejected points closer than this to the window are reported.
pub const NEAR_MISS_TOL: f64 = 1e-6;
/// Physical points closer than this are merged.
pub const MERGE_TOL: f64 = 1e-9;
/// Projections shorter than this count as zero in witness searches.
pub const WITNESS_TOL: f64 = 1e-9;

/// Superspace picture of a real Parseval frame with `M > N`.
#[derive(Debug, Clone)]
pub struct CutProjectScheme {
    pub frame: Frame,
    /// `π_{ij} = ⟨w_i|w_j⟩`.
    pub pi: Matrix,
    /// `I − π`.
    pub pi_perp: Matrix,
    /// Orthonormal basis of `range π`; `physical_basis[j][i] = w_i[j]`.
    pub physical_basis: Vec<Vector>,
    /// Orthonormal basis of `range π⊥`.
    pub internal_basis: Vec<Vector>,
    physical_gen: Vec<Vec<f64>>,
    internal_gen: Vec<Vec<f64>>,
}

/// An integer point with its physical and internal coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectedPoint {
    pub preimage: Vec<i64>,
    pub physical: Vec<f64>,
    pub internal: Vec<f64>,
}

pub fn build_scheme(f: &Frame) -> Result<CutProjectScheme> {
    if f.field() == Field::Complex {
        return Err(Error::RealFieldRequired);
    }
    let emb = naimark_embed(f)?;
    let (m, n) = (f.len(), f.dim());
    if m == n {
        return Err(Error::NoComplement);
    }
    let internal_basis = kernel_basis(&emb.pi, n)?;
    let pi_perp = Matrix::identity(m).sub(&emb.pi)?;
    let physical_gen = (0..m)
        .map(|i| emb.phi.iter().map(|p| p[i].re).collect())
        .collect();
    let internal_gen = (0..m)
        .map(|i| internal_basis.iter().map(|b| b[i].re).collect())
        .collect();
    Ok(CutProjectScheme {
        frame: f.clone(),
        pi: emb.pi,
        pi_perp,
        physical_basis: emb.phi,
        internal_basis,
        physical_gen,
        internal_gen,
    })
}

impl CutProjectScheme {
    /// Superspace dimension `M`.
    pub fn superspace_dim(&self) -> usize {
        self.frame.len()
    }

    pub fn physical_dim(&self) -> usize {
        self.frame.dim()
    }

    pub fn internal_dim(&self) -> usize {
        self.frame.len() - self.frame.dim()
    }

    /// Internal coordinates of `π⊥ eᵢ`.
    pub fn internal_generator(&self, i: usize) -> &[f64] {
        &self.internal_gen[i]
    }

    /// Physical coordinates of `π eᵢ`, i.e. `wᵢ`.
    pub fn physical_generator(&self, i: usize) -> &[f64] {
        &self.physical_gen[i]
    }

    pub fn physical_of(&self, n: &[i64]) -> Vec<f64> {
        combine(&self.physical_gen, n, self.physical_dim())
    }

    pub fn internal_of(&self, n: &[i64]) -> Vec<f64> {
        combine(&self.internal_gen, n, self.internal_dim())
    }

    /// Superspace vector `Σ xⱼ φⱼ + Σ sₖ bₖ` rebuilt from the two coordinate sets.
    pub fn recompose(&self, physical: &[f64], internal: &[f64]) -> Vec<f64> {
        let m = self.superspace_dim();
        (0..m)
            .map(|i| {
                let a: f64 = physical
                    .iter()
                    .zip(&self.physical_gen[i])
                    .map(|(x, g)| x * g)
                    .sum();
                let b: f64 = internal
                    .iter()
                    .zip(&self.internal_gen[i])
                    .map(|(x, g)| x * g)
                    .sum();
                a + b
            })
            .collect()
    }
}

fn combine(gens: &[Vec<f64>], n: &[i64], dim: usize) -> Vec<f64> {
    let mut out = alloc::vec![0.0; dim];
    for (&c, g) in n.iter().zip(gens) {
        if c != 0 {
            for (o, x) in out.iter_mut().zip(g) {
                *o += c as f64 * x;
            }
        }
    }
    out
}

pub fn project_integer(scheme: &CutProjectScheme, n: &[i64]) -> Result<ProjectedPoint> {
    if n.len() != scheme.superspace_dim() {
        return Err(Error::DimMismatch {
            expected: scheme.superspace_dim(),
            found: n.len(),
        });
    }
    Ok(ProjectedPoint {
        preimage: n.to_vec(),
        physical: scheme.physical_of(n),
        internal: scheme.internal_of(n),
    })
}

/// Convex polytope `{s : ⟨normal, s⟩ ≤ offset for every halfspace}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Window {
    pub halfspaces: Vec<(Vec<f64>, f64)>,
}

impl Window {
    /// Largest `⟨normal, s⟩ − offset`; nonpositive inside.
    pub fn violation(&self, s: &[f64]) -> f64 {
        self.halfspaces
            .iter()
            .map(|(nrm, h)| dot(nrm, s) - h)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn contains(&self, s: &[f64]) -> bool {
        self.violation(s) <= WINDOW_TOL
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

/// Halfspace form of `π⊥([0,1]^M)`.
///
/// The window is the zonotope spanned by the generators `gᵢ = π⊥ eᵢ`. Its
/// facet normals are orthogonal to `d − 1` independent generators and the
/// support value in direction `u` is `Σ max(0, ⟨u, gᵢ⟩)`.
pub fn build_window(scheme: &CutProjectScheme) -> Result<Window> {
    let d = scheme.internal_dim();
    let gens: Vec<&[f64]> = scheme
        .internal_gen
        .iter()
        .map(|g| g.as_slice())
        .filter(|g| norm(g) > WITNESS_TOL)
        .collect();
    let mut normals: Vec<Vec<f64>> = Vec::new();
    match d {
        1 => normals.push(alloc::vec![1.0]),
        2 => {
            for g in &gens {
                let l = norm(g);
                normals.push(alloc::vec![-g[1] / l, g[0] / l]);
            }
        }
        3 => {
            for (i, a) in gens.iter().enumerate() {
                for b in &gens[i + 1..] {
                    let c = [
                        a[1] * b[2] - a[2] * b[1],
                        a[2] * b[0] - a[0] * b[2],
                        a[0] * b[1] - a[1] * b[0],
                    ];
                    let l = norm(&c);
                    if l > 1e-9 * norm(a) * norm(b) {
                        normals.push(c.iter().map(|x| x / l).collect());
                    }
                }
            }
        }
        _ => return Err(Error::DimUnsupported { dim: d }),
    }
    let mut halfspaces: Vec<(Vec<f64>, f64)> = Vec::new();
    for u in normals {
        for sign in [1.0, -1.0] {
            let u: Vec<f64> = u.iter().map(|x| sign * x).collect();
            if halfspaces.iter().any(|(v, _)| dist(v, &u) < 1e-9) {
                continue;
            }
            let h = gens.iter().map(|g| dot(&u, g).max(0.0)).sum();
            halfspaces.push((u, h));
        }
    }
    Ok(Window { halfspaces })
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    libm::sqrt(a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum())
}

/// `(2B+1)^M`, saturating.
pub fn box_size(m: usize, radius: u32) -> u128 {
    let side = 2 * radius as u128 + 1;
    (0..m)
        .try_fold(1u128, |acc, _| acc.checked_mul(side))
        .unwrap_or(u128::MAX)
}

fn check_box(m: usize, radius: u32) -> Result<()> {
    let points = box_size(m, radius);
    if points > ENUMERATION_CAP {
        return Err(Error::BoxTooLarge {
            points,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

/// Calls `f` on each `n` with `n[0] = first` and `|nᵢ| ≤ radius`, in lexicographic order.
fn for_each_in_slab(m: usize, radius: i64, first: i64, mut f: impl FnMut(&[i64])) {
    let mut n = alloc::vec![-radius; m];
    n[0] = first;
    loop {
        f(&n);
        let mut k = m;
        loop {
            if k == 1 {
                return;
            }
            k -= 1;
            if n[k] < radius {
                n[k] += 1;
                break;
            }
            n[k] = -radius;
        }
    }
}

/// Accepted points and near misses from one slab `n[0] = first` of the box.
#[derive(Debug, Clone, Default)]
pub struct SlabScan {
    pub accepted: Vec<ProjectedPoint>,
    pub near_misses: Vec<Vec<i64>>,
}

pub fn scan_slab(scheme: &CutProjectScheme, window: &Window, radius: u32, first: i64) -> SlabScan {
    let mut scan = SlabScan::default();
    for_each_in_slab(scheme.superspace_dim(), radius as i64, first, |n| {
        let s = scheme.internal_of(n);
        let v = window.violation(&s);
        if v <= WINDOW_TOL {
            scan.accepted.push(ProjectedPoint {
                preimage: n.to_vec(),
                physical: scheme.physical_of(n),
                internal: s,
            });
        } else if v <= NEAR_MISS_TOL {
            scan.near_misses.push(n.to_vec());
        }
    });
    scan
}

/// A point of `Q`, together with other accepted preimages of the same
/// physical point.
#[derive(Debug, Clone, PartialEq)]
pub struct QuasicrystalPoint {
    pub point: ProjectedPoint,
    pub merged: Vec<Vec<i64>>,
}

impl QuasicrystalPoint {
    pub fn multiplicity(&self) -> usize {
        1 + self.merged.len()
    }
}

/// The finite patch of `Q` with preimages in `[−B, B]^M`.
#[derive(Debug, Clone)]
pub struct PointSet {
    pub radius: u32,
    pub points: Vec<QuasicrystalPoint>,
    /// Rejected preimages whose internal image misses the window by at most
    /// [`NEAR_MISS_TOL`].
    pub near_misses: Vec<Vec<i64>>,
}

impl PointSet {
    /// Every accepted preimage, merged ones included, in lexicographic order.
    pub fn preimages(&self) -> Vec<Vec<i64>> {
        let mut all: Vec<Vec<i64>> = self
            .points
            .iter()
            .flat_map(|p| {
                core::iter::once(p.point.preimage.clone()).chain(p.merged.iter().cloned())
            })
            .collect();
        all.sort();
        all
    }
}

/// Merges slab scans given in increasing order of their first coordinate.
pub fn assemble(radius: u32, slabs: Vec<SlabScan>) -> PointSet {
    let mut points: Vec<QuasicrystalPoint> = Vec::new();
    let mut near_misses = Vec::new();
    let mut cells: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for slab in slabs {
        near_misses.extend(slab.near_misses);
        for p in slab.accepted {
            let cell: Vec<i64> = p
                .physical
                .iter()
                .map(|x| libm::floor(x / MERGE_TOL) as i64)
                .collect();
            match find_close(&cells, &points, &cell, &p.physical) {
                Some(k) => points[k].merged.push(p.preimage),
                None => {
                    cells.entry(cell).or_default().push(points.len());
                    points.push(QuasicrystalPoint {
                        point: p,
                        merged: Vec::new(),
                    });
                }
            }
        }
    }
    PointSet {
        radius,
        points,
        near_misses,
    }
}

fn find_close(
    cells: &BTreeMap<Vec<i64>, Vec<usize>>,
    points: &[QuasicrystalPoint],
    cell: &[i64],
    x: &[f64],
) -> Option<usize> {
    let d = cell.len();
    let mut probe = cell.to_vec();
    // all 3^d neighbouring cells
    for code in 0..3usize.pow(d as u32) {
        let mut c = code;
        for k in 0..d {
            probe[k] = cell[k] + (c % 3) as i64 - 1;
            c /= 3;
        }
        if let Some(ids) = cells.get(&probe) {
            if let Some(&k) = ids
                .iter()
                .find(|&&k| dist(&points[k].point.physical, x) <= MERGE_TOL)
            {
                return Some(k);
            }
        }
    }
    None
}

pub fn generate_quasicrystal(
    scheme: &CutProjectScheme,
    window: &Window,
    radius: u32,
) -> Result<PointSet> {
    check_box(scheme.superspace_dim(), radius)?;
    let r = radius as i64;
    let slabs = (-r..=r)
        .map(|first| scan_slab(scheme, window, radius, first))
        .collect();
    Ok(assemble(radius, slabs))
}

/// Checks the enumeration cap without scanning.
pub fn check_enumeration(scheme: &CutProjectScheme, radius: u32) -> Result<()> {
    check_box(scheme.superspace_dim(), radius)
}

/// Nonzero `n` in `[−r, r]^M` with `max|nᵢ| = r` and first nonzero entry
/// positive, for `r = 1, …, B`, lexicographic within each shell.
fn search_shells(m: usize, radius: u32, mut f: impl FnMut(&[i64]) -> bool) {
    for r in 1..=radius as i64 {
        for first in 0..=r {
            let mut stop = false;
            for_each_in_slab(m, r, first, |n| {
                if stop {
                    return;
                }
                let leading = n.iter().find(|&&c| c != 0);
                let on_shell = n.iter().any(|c| c.abs() == r);
                if on_shell && leading.is_some_and(|&c| c > 0) {
                    stop = f(n);
                }
            });
            if stop {
                return;
            }
        }
    }
}

/// Result of searching for a nonzero integer point in the kernel of `π`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Injectivity {
    Witness(Vec<i64>),
    NoWitness(u32),
}

/// Looks for `n ≠ 0` with `‖π n‖ ≤ 1e-9`, by increasing `max|nᵢ|`.
pub fn injectivity_witness(scheme: &CutProjectScheme, radius: u32) -> Result<Injectivity> {
    check_box(scheme.superspace_dim(), radius)?;
    let mut found = None;
    search_shells(scheme.superspace_dim(), radius, |n| {
        if norm(&scheme.physical_of(n)) <= WITNESS_TOL {
            found = Some(n.to_vec());
            true
        } else {
            false
        }
    });
    Ok(found.map_or(Injectivity::NoWitness(radius), Injectivity::Witness))
}

/// Result of searching for a basis of `Z^M ∩ range π`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Periodicity {
    /// `N` independent integer points of the physical space.
    Periodic(Vec<Vec<i64>>),
    /// Fewer than `N` found within the radius.
    Insufficient { radius: u32, found: Vec<Vec<i64>> },
}

/// Collects independent `n` with `‖π⊥ n‖ ≤ 1e-9`, by increasing `max|nᵢ|`.
pub fn periodicity_witness(scheme: &CutProjectScheme, radius: u32) -> Result<Periodicity> {
    check_box(scheme.superspace_dim(), radius)?;
    let target = scheme.physical_dim();
    let mut found = Vec::new();
    let mut span: Vec<Vector> = Vec::new();
    search_shells(scheme.superspace_dim(), radius, |n| {
        if norm(&scheme.internal_of(n)) <= WITNESS_TOL {
            let x = Vector::from_real(&scheme.physical_of(n));
            if crate::numlin::extend_orthonormal(&mut span, &x, 1e-9) {
                found.push(n.to_vec());
            }
        }
        found.len() == target
    });
    Ok(if found.len() == target {
        Periodicity::Periodic(found)
    } else {
        Periodicity::Insufficient { radius, found }
    })
}

/// `I(q) = |Σₓ e^{−i q·x}|² / count²` for each `q`.
pub fn diffraction(points: &[Vec<f64>], q_grid: &[Vec<f64>]) -> Result<Vec<f64>> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let n = first.len();
    if n != 2 && n != 3 {
        return Err(Error::DimUnsupported { dim: n });
    }
    if let Some(bad) = points.iter().chain(q_grid).find(|v| v.len() != n) {
        return Err(Error::DimMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    let count = points.len() as f64;
    Ok(q_grid
        .iter()
        .map(|q| {
            let (mut re, mut im) = (0.0, 0.0);
            for x in points {
                let phase = dot(q, x);
                re += libm::cos(phase);
                im -= libm::sin(phase);
            }
            (re * re + im * im) / (count * count)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupframes::{icosahedral_rep, named_frame, NamedFrame};
    use core::f64::consts::PI;
    use proptest::prelude::*;

    fn scheme(name: NamedFrame) -> CutProjectScheme {
        build_scheme(&named_frame(name).unwrap()).unwrap()
    }

    /// Plain loop over the box, testing membership against the hull of the
    /// projected cube vertices directly.
    fn oracle(s: &CutProjectScheme, radius: i64) -> Vec<Vec<i64>> {
        let m = s.superspace_dim();
        let hull = hull_halfspaces(&vertices(s));
        let mut out = Vec::new();
        let side = (2 * radius + 1) as usize;
        for idx in 0..side.pow(m as u32) {
            let mut n = alloc::vec![0i64; m];
            let mut c = idx;
            for k in (0..m).rev() {
                n[k] = (c % side) as i64 - radius;
                c /= side;
            }
            let p = s.internal_of(&n);
            if hull.iter().all(|(u, h)| dot(u, &p) <= h + WINDOW_TOL) {
                out.push(n);
            }
        }
        out
    }

    /// Every facet normal of a hull in dimension ≤ 3 is perpendicular to one
    /// (2D) or two (3D) differences of vertices; collect all such unit
    /// directions and their support values.
    fn hull_halfspaces(vertices: &[Vec<f64>]) -> Vec<(Vec<f64>, f64)> {
        let d = vertices[0].len();
        let mut diffs: Vec<Vec<f64>> = Vec::new();
        for (i, a) in vertices.iter().enumerate() {
            for b in &vertices[i + 1..] {
                let e: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
                if norm(&e) > 1e-9 {
                    diffs.push(e);
                }
            }
        }
        let mut dirs: Vec<Vec<f64>> = Vec::new();
        match d {
            1 => dirs.push(alloc::vec![1.0]),
            2 => dirs.extend(diffs.iter().map(|e| alloc::vec![-e[1], e[0]])),
            _ => {
                for (i, a) in diffs.iter().enumerate() {
                    for b in &diffs[i + 1..] {
                        dirs.push(alloc::vec![
                            a[1] * b[2] - a[2] * b[1],
                            a[2] * b[0] - a[0] * b[2],
                            a[0] * b[1] - a[1] * b[0]
                        ]);
                    }
                }
            }
        }
        let mut unique: BTreeMap<Vec<i64>, Vec<f64>> = BTreeMap::new();
        for u in dirs {
            let l = norm(&u);
            if l < 1e-9 {
                continue;
            }
            for sign in [1.0, -1.0] {
                let u: Vec<f64> = u.iter().map(|x| sign * x / l).collect();
                unique
                    .entry(u.iter().map(|x| libm::round(x * 1e7) as i64).collect())
                    .or_insert(u);
            }
        }
        unique
            .into_values()
            .map(|u| {
                let h = vertices
                    .iter()
                    .map(|v| dot(&u, v))
                    .fold(f64::NEG_INFINITY, f64::max);
                (u, h)
            })
            .collect()
    }
    #[test]
    fn honeycomb_scheme() {
        let s = scheme(NamedFrame::Honeycomb);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 2.0 / 3.0 } else { -1.0 / 3.0 };
                assert!((s.pi[(i, j)].re - want).abs() < 1e-15);
            }
        }
        assert_eq!(s.internal_dim(), 1);
        let p = project_integer(&s, &[1, 0, 0]).unwrap();
        assert!((p.physical[0] - libm::sqrt(2.0 / 3.0)).abs() < 1e-15 && p.physical[1] == 0.0);
        assert!((p.internal[0].abs() - 1.0 / libm::sqrt(3.0)).abs() < 1e-12);
        let o = project_integer(&s, &[0, 0, 0]).unwrap();
        assert!(o.physical.iter().chain(&o.internal).all(|&x| x == 0.0));
        assert!(project_integer(&s, &[1, 0]).is_err());
    }

    #[test]
    fn icosahedral_scheme() {
        let s = scheme(NamedFrame::Icosahedral6);
        let eig = crate::numlin::hermitian_eig(&s.pi, 1e-12).unwrap();
        for (k, v) in eig.values.iter().enumerate() {
            let want = if k < 3 { 0.0 } else { 1.0 };
            assert!((v - want).abs() < 1e-10);
        }
        let p = project_integer(&s, &[1, 0, 0, 0, 0, 0]).unwrap();
        let w1 = s.frame.vector(0).re();
        assert!(dist(&p.physical, &w1) < 1e-15);
        assert!(
            (dot(&p.physical, &p.physical) + dot(&p.internal, &p.internal) - 1.0).abs() < 1e-12
        );
    }

    #[test]
    fn scheme_errors() {
        let onb = Frame::from_real(&[&[1.0, 0.0], &[0.0, 1.0]]).unwrap();
        assert_eq!(build_scheme(&onb).unwrap_err(), Error::NoComplement);
        let c4 = named_frame(NamedFrame::Cn(4)).unwrap();
        assert!(matches!(build_scheme(&c4), Err(Error::NotParseval { .. })));
        let complex = Frame::new(
            1,
            alloc::vec![
                Vector::new(alloc::vec![num_complex::Complex64::new(
                    0.0,
                    libm::sqrt(0.5)
                )])
                .unwrap(),
                Vector::from_real(&[libm::sqrt(0.5)]),
            ],
        )
        .unwrap();
        assert_eq!(
            build_scheme(&complex).unwrap_err(),
            Error::RealFieldRequired
        );
    }

    fn projector_residuals(s: &CutProjectScheme) -> [f64; 4] {
        let pp = s.pi.mul(&s.pi).unwrap().sub(&s.pi).unwrap().max_abs();
        let cross = s.pi.mul(&s.pi_perp).unwrap().max_abs();
        let herm = s.pi.hermitian_deviation();
        let sum = s.pi.add(&s.pi_perp).unwrap().identity_residual();
        [pp, cross, herm, sum]
    }

    #[test]
    fn projector_algebra() {
        for name in [
            NamedFrame::Honeycomb,
            NamedFrame::Diamond,
            NamedFrame::Icosahedral6,
        ] {
            let s = scheme(name);
            assert!(
                projector_residuals(&s).iter().all(|&r| r <= 1e-12),
                "{name:?}"
            );
            assert_eq!(
                s.physical_basis.len() + s.internal_basis.len(),
                s.superspace_dim()
            );
            let all: Vec<&Vector> = s.physical_basis.iter().chain(&s.internal_basis).collect();
            for (i, a) in all.iter().enumerate() {
                for (j, b) in all.iter().enumerate() {
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((a.dot(b).re - want).abs() < 1e-12);
                }
            }
        }
    }

    fn vertices(s: &CutProjectScheme) -> Vec<Vec<f64>> {
        let m = s.superspace_dim();
        (0..1usize << m)
            .map(|mask| {
                s.internal_of(&(0..m).map(|i| ((mask >> i) & 1) as i64).collect::<Vec<_>>())
            })
            .collect()
    }

    #[test]
    fn honeycomb_window_is_subset_sum_interval() {
        let s = scheme(NamedFrame::Honeycomb);
        let w = build_window(&s).unwrap();
        let sums: Vec<f64> = vertices(&s).iter().map(|v| v[0]).collect();
        let lo = sums.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = sums.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert_eq!(w.halfspaces.len(), 2);
        assert!((hi - lo - libm::sqrt(3.0)).abs() < 1e-12);
        assert!(w.contains(&[lo]) && w.contains(&[hi]));
        assert!(!w.contains(&[hi + 1e-8]) && !w.contains(&[lo - 1e-8]));
    }

    fn check_window(s: &CutProjectScheme, facets: usize) {
        let w = build_window(s).unwrap();
        assert_eq!(w.halfspaces.len(), facets);
        let vs = vertices(s);
        for v in &vs {
            assert!(w.violation(v) <= 1e-10);
        }
        let d = s.internal_dim();
        // each halfspace is supported by at least d vertices
        for (u, h) in &w.halfspaces {
            let touching = vs.iter().filter(|v| (dot(u, v) - h).abs() < 1e-9).count();
            assert!(touching >= d);
        }
        let half = alloc::vec![1i64; s.superspace_dim()];
        let center: Vec<f64> = s.internal_of(&half).iter().map(|x| x / 2.0).collect();
        assert!(w.violation(&center) < -1e-3);
    }

    #[test]
    fn windows() {
        check_window(&scheme(NamedFrame::Honeycomb), 2);
        check_window(&scheme(NamedFrame::Diamond), 2);
        // rhombic triacontahedron
        check_window(&scheme(NamedFrame::Icosahedral6), 30);
        let c5 = crate::groupframes::cn_parseval(5).unwrap();
        check_window(&build_scheme(&c5).unwrap(), 20);
        let c4 = crate::groupframes::cn_parseval(4).unwrap();
        check_window(&build_scheme(&c4).unwrap(), 4);
        let c6 = crate::groupframes::cn_parseval(6).unwrap();
        assert_eq!(
            build_window(&build_scheme(&c6).unwrap()).unwrap_err(),
            Error::DimUnsupported { dim: 4 }
        );
    }

    #[test]
    fn origin_patch() {
        for name in [
            NamedFrame::Honeycomb,
            NamedFrame::Diamond,
            NamedFrame::Icosahedral6,
        ] {
            let s = scheme(name);
            let w = build_window(&s).unwrap();
            let q = generate_quasicrystal(&s, &w, 0).unwrap();
            assert_eq!(q.points.len(), 1);
            assert!(q.points[0].point.preimage.iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn patches_match_oracle() {
        for (name, max_b) in [
            (NamedFrame::Honeycomb, 3),
            (NamedFrame::Diamond, 3),
            (NamedFrame::Icosahedral6, 2),
        ] {
            let s = scheme(name);
            let w = build_window(&s).unwrap();
            for b in 0..=max_b {
                let q = generate_quasicrystal(&s, &w, b).unwrap();
                assert_eq!(q.preimages(), oracle(&s, b as i64), "{name:?} B = {b}");
            }
        }
    }

    #[test]
    fn honeycomb_duplicates_are_merged() {
        let s = scheme(NamedFrame::Honeycomb);
        let q = generate_quasicrystal(&s, &build_window(&s).unwrap(), 2).unwrap();
        let origin = q
            .points
            .iter()
            .find(|p| p.point.physical.iter().all(|x| x.abs() < 1e-12))
            .unwrap();
        assert_eq!(origin.multiplicity(), 2);
        assert_eq!(origin.point.preimage, [0, 0, 0]);
        assert_eq!(origin.merged, [alloc::vec![1, 1, 1]]);
        for (i, a) in q.points.iter().enumerate() {
            for b in &q.points[i + 1..] {
                assert!(dist(&a.point.physical, &b.point.physical) > MERGE_TOL);
            }
        }
    }

    #[test]
    fn icosahedral_patch_is_uniformly_discrete() {
        let s = scheme(NamedFrame::Icosahedral6);
        let q = generate_quasicrystal(&s, &build_window(&s).unwrap(), 3).unwrap();
        assert!(q.points.len() > 1);
        assert!(q.points.iter().all(|p| p.multiplicity() == 1));
        let mut min = f64::INFINITY;
        for (i, a) in q.points.iter().enumerate() {
            for b in &q.points[i + 1..] {
                min = min.min(dist(&a.point.physical, &b.point.physical));
            }
        }
        assert!(min > 0.3, "min distance {min}");
        for p in &q.points {
            let back = s.recompose(&p.point.physical, &p.point.internal);
            let err = back
                .iter()
                .zip(&p.point.preimage)
                .map(|(x, &n)| (x - n as f64).abs())
                .fold(0.0, f64::max);
            assert!(err <= 1e-10);
        }
    }

    #[test]
    fn box_cap() {
        let s = scheme(NamedFrame::Icosahedral6);
        let w = build_window(&s).unwrap();
        assert_eq!(
            generate_quasicrystal(&s, &w, 11).unwrap_err(),
            Error::BoxTooLarge {
                points: 23u128.pow(6),
                cap: ENUMERATION_CAP
            }
        );
        assert!(injectivity_witness(&s, 11).is_err());
        assert!(periodicity_witness(&s, 11).is_err());
        assert_eq!(box_size(6, 1), 729);
    }

    #[test]
    fn witnesses() {
        let h = scheme(NamedFrame::Honeycomb);
        assert_eq!(
            injectivity_witness(&h, 2).unwrap(),
            Injectivity::Witness(alloc::vec![1, 1, 1])
        );
        assert_eq!(
            periodicity_witness(&h, 2).unwrap(),
            Periodicity::Periodic(alloc::vec![alloc::vec![0, 1, -1], alloc::vec![1, -1, 0]])
        );
        let d = scheme(NamedFrame::Diamond);
        assert_eq!(
            injectivity_witness(&d, 2).unwrap(),
            Injectivity::Witness(alloc::vec![1, 1, 1, 1])
        );
        match periodicity_witness(&d, 2).unwrap() {
            Periodicity::Periodic(ws) => {
                assert_eq!(ws.len(), 3);
                for w in ws {
                    assert_eq!(w.iter().sum::<i64>(), 0);
                }
            }
            other => panic!("{other:?}"),
        }
        let ico = scheme(NamedFrame::Icosahedral6);
        assert_eq!(
            injectivity_witness(&ico, 3).unwrap(),
            Injectivity::NoWitness(3)
        );
        assert_eq!(
            periodicity_witness(&ico, 3).unwrap(),
            Periodicity::Insufficient {
                radius: 3,
                found: Vec::new()
            }
        );
    }

    #[test]
    fn diffraction_basics() {
        let one = [alloc::vec![0.3, -1.2]];
        let qs = [
            alloc::vec![0.0, 0.0],
            alloc::vec![1.0, 2.0],
            alloc::vec![-7.0, 0.5],
        ];
        for v in diffraction(&one, &qs).unwrap() {
            assert!((v - 1.0).abs() < 1e-15);
        }
        let many: Vec<Vec<f64>> = (0..20)
            .map(|k| alloc::vec![k as f64 * 0.37, libm::sin(k as f64)])
            .collect();
        assert!((diffraction(&many, &[alloc::vec![0.0, 0.0]]).unwrap()[0] - 1.0).abs() < 1e-15);
        assert_eq!(diffraction(&[], &qs).unwrap_err(), Error::EmptyInput);
        assert_eq!(
            diffraction(&[alloc::vec![1.0]], &[alloc::vec![1.0]]).unwrap_err(),
            Error::DimUnsupported { dim: 1 }
        );
    }

    #[test]
    fn five_fold_peaks() {
        let s = scheme(NamedFrame::Icosahedral6);
        let q = generate_quasicrystal(&s, &build_window(&s).unwrap(), 3).unwrap();
        let xs: Vec<Vec<f64>> = q.points.iter().map(|p| p.point.physical.clone()).collect();
        let r = icosahedral_rep().generators()[0].re_rows();
        let rotate = |v: &[f64]| -> Vec<f64> { r.iter().map(|row| dot(row, v)).collect() };
        let axis = {
            let eig = crate::numlin::hermitian_eig(
                &Matrix::from_fn(3, 3, |i, j| (r[i][j] + r[j][i]).into()),
                1e-12,
            )
            .unwrap();
            eig.vector(2).re()
        };
        // strongest off-axis candidate among small reciprocal vectors
        let mut best: Option<(f64, Vec<f64>)> = None;
        for_each_in_slab(6, 1, 0, |k| consider(&s, &xs, &axis, k, &mut best));
        for_each_in_slab(6, 1, 1, |k| consider(&s, &xs, &axis, k, &mut best));
        let (peak, q0) = best.unwrap();
        assert!(peak > 0.1);
        let mut qj = q0.clone();
        for _ in 0..5 {
            let v = diffraction(&xs, core::slice::from_ref(&qj)).unwrap()[0];
            assert!((v - peak).abs() <= 0.1 * peak, "{v} vs {peak}");
            qj = rotate(&qj);
        }
        assert!(dist(&qj, &q0) < 1e-9);
    }

    fn consider(
        s: &CutProjectScheme,
        xs: &[Vec<f64>],
        axis: &[f64],
        k: &[i64],
        best: &mut Option<(f64, Vec<f64>)>,
    ) {
        let q: Vec<f64> = s.physical_of(k).iter().map(|x| 2.0 * PI * x).collect();
        let along = dot(&q, axis);
        let off = dot(&q, &q) - along * along;
        if off < 1.0 {
            return;
        }
        let v = diffraction(xs, core::slice::from_ref(&q)).unwrap()[0];
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            *best = Some((v, q));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn star_map_recomposes(n in proptest::collection::vec(-50i64..50, 6)) {
            let s = scheme(NamedFrame::Icosahedral6);
            let p = project_integer(&s, &n).unwrap();
            let back = s.recompose(&p.physical, &p.internal);
            for (x, &c) in back.iter().zip(&n) {
                prop_assert!((x - c as f64).abs() <= 1e-10);
            }
        }

        #[test]
        fn patches_grow_with_radius(which in 0usize..3, b in 0u32..3) {
            let name = [NamedFrame::Honeycomb, NamedFrame::Diamond, NamedFrame::Icosahedral6][which];
            let s = scheme(name);
            let w = build_window(&s).unwrap();
            let small = generate_quasicrystal(&s, &w, b).unwrap().preimages();
            let large = generate_quasicrystal(&s, &w, b + 1).unwrap();
            let large_pre = large.preimages();
            for n in &small {
                prop_assert!(large_pre.binary_search(n).is_ok());
            }
            for p in &large.points {
                prop_assert!(w.violation(&p.point.internal) <= 1e-10);
            }
            for n in &large.near_misses {
                let v = w.violation(&s.internal_of(n));
                prop_assert!(v > WINDOW_TOL && v <= NEAR_MISS_TOL);
            }
        }
    }
}
