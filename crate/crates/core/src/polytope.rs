//! Lattice-polytope combinatorics: dual descriptions, face lattice,
//! reflexivity, polar duality and exact lattice-point enumeration.
//!
//! A polytope is stored in both representations at once: the deduplicated
//! vertex list (lex-sorted, so indices are canonical) and the irredundant
//! facet list `<m, normal> >= -offset` with primitive inward normals in
//! canonical (lexicographic-by-normal) order. All divisor coefficient vectors
//! elsewhere in the crate are indexed in that facet order.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use crate::linalg::{self, Int, Rat};
use crate::{Error, Result};

/// One inequality `<m, normal> >= -offset` of the H-representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// Primitive inward-pointing conormal in the dual lattice.
    pub normal: Vec<Int>,
    /// For a reflexive polytope every offset is 1.
    pub offset: Int,
}

/// A face of the polytope, identified by the vertices lying on it and the
/// exact set of facets containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    /// Indices into [`LatticePolytope::vertices`], sorted.
    pub vertices: Vec<usize>,
    /// Indices into [`LatticePolytope::facets`], sorted.
    pub facets: Vec<usize>,
    pub(crate) polytope_hash: u64,
}

/// Full-dimensional lattice polytope with computed facets and face lattice.
#[derive(Debug, Clone)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<Int>>,
    facets: Vec<Facet>,
    /// Faces grouped by dimension 0..dim-1.
    faces: Vec<Vec<Face>>,
    /// Input points that were inside the hull rather than vertices of it.
    dropped_points: Vec<Vec<Int>>,
    hash: u64,
}

impl LatticePolytope {
    /// Build a polytope from integer points. Duplicates are silently merged;
    /// points that are not vertices of the hull are dropped and reported via
    /// [`LatticePolytope::dropped_points`].
    pub fn from_vertices(dim: usize, points: Vec<Vec<Int>>) -> Result<Self> {
        let unique: Vec<Vec<Int>> = points
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if dim == 0 || unique.iter().any(|p| p.len() != dim) {
            return Err(Error::NotFullDimensional { dim, rank: 0 });
        }
        let facets = compute_facets(dim, &unique)?;

        // A point is a vertex exactly when its tight facet normals span R^n.
        let mut vertices = Vec::new();
        let mut dropped_points = Vec::new();
        for point in unique {
            let tight: Vec<Vec<Int>> = facets
                .iter()
                .filter(|f| linalg::dot(&point, &f.normal) == -f.offset.clone())
                .map(|f| f.normal.clone())
                .collect();
            if linalg::rank(&tight) == dim {
                vertices.push(point);
            } else {
                dropped_points.push(point);
            }
        }

        let hash = fnv1a_hash(dim, &vertices);
        let faces = face_lattice(dim, &vertices, &facets, hash);
        Ok(Self {
            dim,
            vertices,
            facets,
            faces,
            dropped_points,
            hash,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices in canonical (lexicographic) order.
    pub fn vertices(&self) -> &[Vec<Int>] {
        &self.vertices
    }

    /// Facets in canonical (lexicographic-by-normal) order.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Faces grouped by dimension 0..dim-1; entry `d` lists the d-faces.
    pub fn faces(&self) -> &[Vec<Face>] {
        &self.faces
    }

    /// Number of faces per dimension 0..dim-1 (the f-vector).
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Input points that were dropped because they are not hull vertices.
    pub fn dropped_points(&self) -> &[Vec<Int>] {
        &self.dropped_points
    }

    /// FNV-1a hash of the canonical vertex list; identifies the polytope in
    /// reports and ties faces to the fan built from it.
    pub fn hash(&self) -> u64 {
        self.hash
    }

    /// The polytope itself viewed as its unique codimension-0 face (maps to
    /// the zero cone of the normal fan).
    pub fn full_face(&self) -> Face {
        Face {
            dim: self.dim,
            vertices: (0..self.vertices.len()).collect(),
            facets: Vec::new(),
            polytope_hash: self.hash,
        }
    }

    /// True when every facet offset equals 1. The implied statement that the
    /// origin is then the only interior lattice point is re-checked, not
    /// assumed.
    pub fn is_reflexive(&self) -> bool {
        let reflexive = self.facets.iter().all(|f| f.offset.is_one());
        if reflexive {
            let system: Vec<(Vec<Int>, Rat)> = self
                .facets
                .iter()
                .map(|f| (f.normal.clone(), Rat::from_integer(f.offset.clone())))
                .collect();
            let points = lattice_points(&system)
                .expect("a bounded polytope cannot have a recession direction");
            assert_eq!(
                points.interior,
                vec![vec![Int::zero(); self.dim]],
                "reflexive polytope must have the origin as its only interior lattice point"
            );
        }
        reflexive
    }

    /// Polar dual of a reflexive polytope: vertices are the facet normals.
    pub fn dual(&self) -> Result<Self> {
        if let Some((idx, facet)) = self
            .facets
            .iter()
            .enumerate()
            .find(|(_, f)| !f.offset.is_one())
        {
            return Err(Error::NotReflexive {
                facet: idx,
                offset: facet.offset.to_string(),
            });
        }
        Self::from_vertices(
            self.dim,
            self.facets.iter().map(|f| f.normal.clone()).collect(),
        )
    }
}

/// Complete irredundant inward facet list of `conv(points)`, found by testing
/// every hyperplane through `dim` affinely independent points for
/// one-sidedness. Quadratic-ish and happy at desk scale.
pub fn compute_facets(dim: usize, points: &[Vec<Int>]) -> Result<Vec<Facet>> {
    if points.len() < dim + 1 {
        return Err(Error::NotFullDimensional {
            dim,
            rank: affine_rank(points),
        });
    }
    let rank = affine_rank(points);
    if rank != dim {
        return Err(Error::NotFullDimensional { dim, rank });
    }

    let mut found: BTreeSet<(Vec<Int>, Int)> = BTreeSet::new();
    let mut subset: Vec<usize> = (0..dim).collect();
    loop {
        // directions spanned by the current point subset
        let base = &points[subset[0]];
        let dirs: Vec<Vec<Int>> = subset[1..]
            .iter()
            .map(|&i| sub(&points[i], base))
            .collect();
        if dirs.is_empty() || linalg::rank(&dirs) == dim - 1 {
            if let Some(normal) = linalg::kernel_vector(&dirs, dim) {
                let level = linalg::dot(base, &normal);
                let mut lower = true;
                let mut upper = true;
                for p in points {
                    let v = linalg::dot(p, &normal);
                    lower &= v >= level;
                    upper &= v <= level;
                }
                if lower {
                    found.insert((normal.clone(), -level.clone()));
                }
                if upper {
                    let flipped: Vec<Int> = normal.iter().map(|v| -v).collect();
                    found.insert((flipped, level));
                }
            }
        }
        if !advance(&mut subset, points.len(), dim) {
            break;
        }
    }

    Ok(found
        .into_iter()
        .map(|(normal, offset)| Facet { normal, offset })
        .collect())
}

fn sub(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn affine_rank(points: &[Vec<Int>]) -> usize {
    match points.split_first() {
        None => 0,
        Some((base, rest)) => {
            let dirs: Vec<Vec<Int>> = rest.iter().map(|p| sub(p, base)).collect();
            linalg::rank(&dirs)
        }
    }
}

/// Advance `subset` to the next k-combination of `0..len`; false when done.
fn advance(subset: &mut [usize], len: usize, k: usize) -> bool {
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] != i + len - k {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All proper faces, computed as closures of facet intersections.
fn face_lattice(
    dim: usize,
    vertices: &[Vec<Int>],
    facets: &[Facet],
    polytope_hash: u64,
) -> Vec<Vec<Face>> {
    let tight_sets: Vec<BTreeSet<usize>> = facets
        .iter()
        .map(|f| {
            vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| linalg::dot(v, &f.normal) == -f.offset.clone())
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    let mut seen: BTreeMap<BTreeSet<usize>, BTreeSet<usize>> = BTreeMap::new();
    let mut queue: Vec<BTreeSet<usize>> = tight_sets.clone();
    while let Some(vset) = queue.pop() {
        if vset.is_empty() || seen.contains_key(&vset) {
            continue;
        }
        let closure: BTreeSet<usize> = tight_sets
            .iter()
            .enumerate()
            .filter(|(_, t)| vset.is_subset(t))
            .map(|(j, _)| j)
            .collect();
        for t in &tight_sets {
            let meet: BTreeSet<usize> = vset.intersection(t).copied().collect();
            if !meet.is_empty() && !seen.contains_key(&meet) {
                queue.push(meet);
            }
        }
        seen.insert(vset, closure);
    }

    let mut by_dim: Vec<Vec<Face>> = vec![Vec::new(); dim];
    for (vset, fset) in seen {
        let coords: Vec<Vec<Int>> = vset.iter().map(|&i| vertices[i].clone()).collect();
        let face_dim = affine_rank(&coords);
        debug_assert!(face_dim < dim, "a proper face cannot be full-dimensional");
        by_dim[face_dim].push(Face {
            dim: face_dim,
            vertices: vset.into_iter().collect(),
            facets: fset.into_iter().collect(),
            polytope_hash,
        });
    }
    for faces in &mut by_dim {
        faces.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    }
    by_dim
}

/// Exact enumeration of the integer points of a bounded halfspace
/// intersection `{m : <m, normal> >= -offset}`, split into all points and
/// strictly interior points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePoints {
    pub all: Vec<Vec<Int>>,
    pub interior: Vec<Vec<Int>>,
}

impl LatticePoints {
    pub fn boundary_count(&self) -> usize {
        self.all.len() - self.interior.len()
    }
}

/// Enumerate the lattice points of `{m : <m, v_i> >= -a_i}`.
///
/// Boundedness is decided first by a recession-cone test (the system is
/// unbounded iff some nonzero direction satisfies every homogeneous
/// inequality); the scan box then comes from the basic feasible solutions of
/// the inequality system, which contain every vertex of the polytope.
pub fn lattice_points(halfspaces: &[(Vec<Int>, Rat)]) -> Result<LatticePoints> {
    let dim = halfspaces
        .first()
        .map(|(n, _)| n.len())
        .ok_or(Error::Unbounded { direction: vec![] })?;
    let normals: Vec<Vec<Int>> = halfspaces.iter().map(|(n, _)| n.clone()).collect();

    if let Some(direction) = recession_direction(&normals, dim) {
        return Err(Error::Unbounded {
            direction: direction
                .iter()
                .map(|v| i64::try_from(v).unwrap_or_default())
                .collect(),
        });
    }

    // basic solutions of dim-subsets of tight constraints; the feasible ones
    // lie in the polytope and include all its vertices, so they span the box
    let mut lo: Option<Vec<Rat>> = None;
    let mut hi: Option<Vec<Rat>> = None;
    let mut subset: Vec<usize> = (0..dim).collect();
    if halfspaces.len() >= dim {
        loop {
            let a: Vec<Vec<Rat>> = subset
                .iter()
                .map(|&i| {
                    halfspaces[i]
                        .0
                        .iter()
                        .map(|v| Rat::from_integer(v.clone()))
                        .collect()
                })
                .collect();
            let b: Vec<Rat> = subset.iter().map(|&i| -halfspaces[i].1.clone()).collect();
            if let Some(candidate) = linalg::solve(&a, &b) {
                if is_feasible(&candidate, halfspaces) {
                    match (&mut lo, &mut hi) {
                        (Some(lo), Some(hi)) => {
                            for (c, v) in candidate.iter().enumerate() {
                                if *v < lo[c] {
                                    lo[c] = v.clone();
                                }
                                if *v > hi[c] {
                                    hi[c] = v.clone();
                                }
                            }
                        }
                        _ => {
                            lo = Some(candidate.clone());
                            hi = Some(candidate);
                        }
                    }
                }
            }
            if !advance(&mut subset, halfspaces.len(), dim) {
                break;
            }
        }
    }

    let (Some(lo), Some(hi)) = (lo, hi) else {
        // infeasible system: empty polytope
        return Ok(LatticePoints {
            all: vec![],
            interior: vec![],
        });
    };
    let lo: Vec<Int> = lo.iter().map(|v| v.ceil().to_integer()).collect();
    let hi: Vec<Int> = hi.iter().map(|v| v.floor().to_integer()).collect();

    // integer comparisons only in the hot loop: q * <m, v> >= -p
    let scaled: Vec<(Vec<Int>, Int, Int)> = halfspaces
        .iter()
        .map(|(n, a)| (n.clone(), a.denom().clone(), a.numer().clone()))
        .collect();

    let mut all = Vec::new();
    let mut interior = Vec::new();
    let mut point = lo.clone();
    'scan: loop {
        let mut inside = true;
        let mut strict = true;
        for (normal, denom, numer) in &scaled {
            let value = linalg::dot(&point, normal) * denom;
            if value < -numer.clone() {
                inside = false;
                strict = false;
                break;
            }
            if value == -numer.clone() {
                strict = false;
            }
        }
        if inside {
            all.push(point.clone());
            if strict {
                interior.push(point.clone());
            }
        }
        // odometer over the box
        for c in (0..dim).rev() {
            if point[c] < hi[c] {
                point[c] += 1;
                for later in point.iter_mut().skip(c + 1).zip(lo.iter().skip(c + 1)) {
                    *later.0 = later.1.clone();
                }
                continue 'scan;
            }
            if c == 0 {
                break 'scan;
            }
        }
        break;
    }
    Ok(LatticePoints { all, interior })
}

fn is_feasible(point: &[Rat], halfspaces: &[(Vec<Int>, Rat)]) -> bool {
    halfspaces.iter().all(|(normal, offset)| {
        let value: Rat = point
            .iter()
            .zip(normal)
            .map(|(x, v)| x * Rat::from_integer(v.clone()))
            .sum();
        value >= -offset.clone()
    })
}

/// A nonzero direction in the recession cone `{v : <v, n_i> >= 0}`, if any.
///
/// Rank deficiency yields a line; otherwise every extreme ray of the pointed
/// recession cone is the kernel of some (dim-1)-subset of the normals, so
/// enumerating those kernels is a complete test.
fn recession_direction(normals: &[Vec<Int>], dim: usize) -> Option<Vec<Int>> {
    if let Some(direction) = linalg::kernel_vector(normals, dim) {
        return Some(direction);
    }
    if dim == 1 {
        // full rank in dimension 1 means both signs are cut off
        return None;
    }
    let mut subset: Vec<usize> = (0..dim - 1).collect();
    if normals.len() < dim - 1 {
        return None;
    }
    loop {
        let rows: Vec<Vec<Int>> = subset.iter().map(|&i| normals[i].clone()).collect();
        if let Some(direction) = linalg::kernel_vector(&rows, dim) {
            for candidate in [direction.clone(), direction.iter().map(|v| -v).collect()] {
                if normals
                    .iter()
                    .all(|n| !linalg::dot(n, &candidate).is_negative())
                {
                    return Some(candidate);
                }
            }
        }
        if !advance(&mut subset, normals.len(), dim - 1) {
            break;
        }
    }
    None
}

fn fnv1a_hash(dim: usize, vertices: &[Vec<Int>]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |bytes: &[u8]| {
        for b in bytes {
            hash ^= u64::from(*b);
            hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    eat(&(dim as u64).to_le_bytes());
    for vertex in vertices {
        for coord in vertex {
            eat(coord.to_string().as_bytes());
            eat(b";");
        }
        eat(b"|");
    }
    hash
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat_int};

    fn points(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    fn polytope(dim: usize, rows: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_vertices(dim, points(rows)).unwrap()
    }

    fn square() -> LatticePolytope {
        polytope(2, &[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]])
    }

    fn small_p2_triangle() -> LatticePolytope {
        polytope(2, &[&[1, 0], &[0, 1], &[-1, -1]])
    }

    fn small_simplex(n: usize) -> LatticePolytope {
        let mut rows: Vec<Vec<Int>> = (0..n)
            .map(|i| (0..n).map(|j| int(i64::from(i == j))).collect())
            .collect();
        rows.push(vec![int(-1); n]);
        LatticePolytope::from_vertices(n, rows).unwrap()
    }

    #[test]
    fn square_facets_are_the_four_axis_halfspaces() {
        let p = square();
        let normals: Vec<Vec<Int>> = p.facets().iter().map(|f| f.normal.clone()).collect();
        assert_eq!(
            normals,
            points(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]]),
            "canonical order is lexicographic on normals"
        );
        assert!(p.facets().iter().all(|f| f.offset.is_one()));
    }

    #[test]
    fn small_4_simplex_has_five_unit_facets() {
        let p = small_simplex(4);
        assert_eq!(p.facets().len(), 5);
        assert!(p.facets().iter().all(|f| f.offset.is_one()));
        // every vertex supports at least n facets with equality
        for v in p.vertices() {
            let tight = p
                .facets()
                .iter()
                .filter(|f| linalg::dot(v, &f.normal) == -f.offset.clone())
                .count();
            assert!(tight >= 4);
        }
    }

    #[test]
    fn doubled_triangle_has_offset_two_facets() {
        let p = polytope(2, &[&[2, 0], &[0, 2], &[-2, -2]]);
        let offsets: Vec<Int> = p.facets().iter().map(|f| f.offset.clone()).collect();
        assert_eq!(offsets, vec![int(2), int(2), int(2)]);
        assert!(!p.is_reflexive());
    }

    #[test]
    fn face_lattice_counts() {
        assert_eq!(square().f_vector(), vec![4, 4]);
        assert_eq!(small_simplex(4).f_vector(), vec![5, 10, 10, 5]);
        // codimension-2 faces of the 3-simplex are its six edges
        let p3 = small_simplex(3);
        assert_eq!(p3.faces()[1].len(), 6);
    }

    #[test]
    fn facet_faces_match_facets() {
        let p = small_simplex(4);
        let top_faces = &p.faces()[3];
        assert_eq!(top_faces.len(), p.facets().len());
        for face in top_faces {
            assert_eq!(face.facets.len(), 1);
        }
    }

    #[test]
    fn reflexivity_examples() {
        assert!(square().is_reflexive());
        assert!(small_p2_triangle().is_reflexive());
        assert!(!polytope(2, &[&[2, 0], &[0, 2], &[-2, -2]]).is_reflexive());
    }

    #[test]
    fn dual_of_square_is_diamond() {
        let d = square().dual().unwrap();
        assert_eq!(
            d.vertices(),
            points(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]])
        );
        assert!(d.is_reflexive());
    }

    #[test]
    fn dual_is_an_involution() {
        for p in [
            small_p2_triangle(),
            square(),
            small_simplex(3),
            small_simplex(4),
        ] {
            let double_dual = p.dual().unwrap().dual().unwrap();
            assert_eq!(double_dual.vertices(), p.vertices());
        }
    }

    #[test]
    fn dual_rejects_non_reflexive() {
        let p = polytope(2, &[&[2, 0], &[0, 2], &[-2, -2]]);
        assert!(matches!(p.dual(), Err(Error::NotReflexive { .. })));
    }

    #[test]
    fn non_vertex_points_are_dropped_with_a_flag() {
        let p = LatticePolytope::from_vertices(
            2,
            points(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1], &[0, 0], &[1, 0], &[1, 1]]),
        )
        .unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.dropped_points(), points(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn degenerate_input_is_rejected() {
        let err = LatticePolytope::from_vertices(2, points(&[&[0, 0], &[1, 1], &[2, 2]]))
            .unwrap_err();
        assert_eq!(err, Error::NotFullDimensional { dim: 2, rank: 1 });
    }

    fn standard_simplex_halfspaces(n: usize, t: i64) -> Vec<(Vec<Int>, Rat)> {
        let mut hs: Vec<(Vec<Int>, Rat)> = (0..n)
            .map(|i| {
                let mut normal = vec![int(0); n];
                normal[i] = int(1);
                (normal, rat_int(0))
            })
            .collect();
        hs.push((vec![int(-1); n], rat_int(t)));
        hs
    }

    #[test]
    fn lattice_point_counts_for_simplices() {
        let unit = lattice_points(&standard_simplex_halfspaces(4, 1)).unwrap();
        assert_eq!(unit.all.len(), 5);
        assert_eq!(unit.interior.len(), 0);

        let dilated = lattice_points(&standard_simplex_halfspaces(4, 5)).unwrap();
        assert_eq!(dilated.all.len(), 126);
        assert_eq!(dilated.interior.len(), 1);
        assert_eq!(dilated.interior[0], points(&[&[1, 1, 1, 1]])[0]);
    }

    #[test]
    fn lattice_points_of_the_square() {
        let hs: Vec<(Vec<Int>, Rat)> = square()
            .facets()
            .iter()
            .map(|f| (f.normal.clone(), Rat::from_integer(f.offset.clone())))
            .collect();
        let pts = lattice_points(&hs).unwrap();
        assert_eq!(pts.all.len(), 9);
        assert_eq!(pts.interior, points(&[&[0, 0]]));
        assert_eq!(pts.boundary_count(), 8);
    }

    #[test]
    fn simplex_ehrhart_values() {
        // |t * simplex| = C(n + t, n) for the P^n simplex
        for n in 1..=4usize {
            for t in 0..=2i64 {
                let count = lattice_points(&standard_simplex_halfspaces(n, t))
                    .unwrap()
                    .all
                    .len();
                let expected = crate::oracle::binomial(n + t as usize, n);
                assert_eq!(Int::from(count), expected, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn unbounded_systems_are_rejected() {
        let hs = vec![
            (points(&[&[1, 0]])[0].clone(), rat_int(0)),
            (points(&[&[0, 1]])[0].clone(), rat_int(0)),
        ];
        assert!(matches!(lattice_points(&hs), Err(Error::Unbounded { .. })));
    }

    #[test]
    fn infeasible_system_yields_no_points() {
        let hs = vec![
            (points(&[&[1]])[0].clone(), rat_int(-2)), // x >= 2
            (points(&[&[-1]])[0].clone(), rat_int(1)), // x <= 1
        ];
        let pts = lattice_points(&hs).unwrap();
        assert!(pts.all.is_empty());
    }

    #[test]
    fn rational_offsets_are_exact() {
        // [-1/2, 3/2] contains the integers 0 and 1, neither interior-excluded
        let hs = vec![
            (points(&[&[1]])[0].clone(), Rat::new(int(1), int(2))),
            (points(&[&[-1]])[0].clone(), Rat::new(int(3), int(2))),
        ];
        let pts = lattice_points(&hs).unwrap();
        assert_eq!(pts.all, points(&[&[0], &[1]]));
        assert_eq!(pts.interior.len(), 2);
    }

    #[test]
    fn every_vertex_satisfies_every_facet() {
        for p in [square(), small_p2_triangle(), small_simplex(4)] {
            for v in p.vertices() {
                for f in p.facets() {
                    assert!(linalg::dot(v, &f.normal) >= -f.offset.clone());
                }
            }
            // each facet carries n affinely independent vertices
            for f in p.facets() {
                let tight: Vec<Vec<Int>> = p
                    .vertices()
                    .iter()
                    .filter(|v| linalg::dot(v, &f.normal) == -f.offset.clone())
                    .cloned()
                    .collect();
                assert!(tight.len() >= p.dim());
                assert_eq!(super::affine_rank(&tight), p.dim() - 1);
            }
        }
    }
}
