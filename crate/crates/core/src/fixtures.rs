//! Reflexive polytopes whose normal fans are the standard smooth varieties
//! used throughout the tests and the documentation: projective spaces,
//! products of projective lines and the degree-6 del Pezzo surface.
//!
//! Each polytope here is Delta = {m : <m, u_rho> >= -1} for the rays of the
//! named fan, so its facet normals are exactly the rays of that fan.

use crate::linalg::Int;
use crate::polytope::LatticePolytope;

fn build(dim: usize, vertices: &[&[i64]]) -> LatticePolytope {
    let points = vertices
        .iter()
        .map(|v| v.iter().map(|&c| Int::from(c)).collect())
        .collect();
    LatticePolytope::from_vertices(dim, points).expect("fixture polytope is valid")
}

/// Simplex with vertices -1 and (n+1)e_i - 1; its normal fan is the fan of
/// P^n with rays e_1..e_n and -(e_1+..+e_n).
pub fn projective_space(n: usize) -> LatticePolytope {
    let mut vertices: Vec<Vec<Int>> = vec![vec![Int::from(-1); n]];
    for i in 0..n {
        let mut v = vec![Int::from(-1); n];
        v[i] = Int::from(n as i64);
        vertices.push(v);
    }
    LatticePolytope::from_vertices(n, vertices).expect("fixture polytope is valid")
}

/// The cube [-1, 1]^n, normal fan of (P^1)^n.
pub fn cube(n: usize) -> LatticePolytope {
    let mut vertices = Vec::with_capacity(1 << n);
    for mask in 0u32..1 << n {
        vertices.push(
            (0..n)
                .map(|i| Int::from(if mask & (1 << i) != 0 { 1 } else { -1 }))
                .collect(),
        );
    }
    LatticePolytope::from_vertices(n, vertices).expect("fixture polytope is valid")
}

pub fn p2() -> LatticePolytope {
    projective_space(2)
}

pub fn p1xp1() -> LatticePolytope {
    cube(2)
}

/// Hexagon {|x| <= 1, |y| <= 1, |x + y| <= 1}, normal fan of the del Pezzo
/// surface of degree 6 (P^2 blown up in the three torus fixed points).
pub fn del_pezzo6() -> LatticePolytope {
    build(2, &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, -1], &[-1, 1]])
}

pub fn p3() -> LatticePolytope {
    projective_space(3)
}

pub fn p1p1p1() -> LatticePolytope {
    cube(3)
}

pub fn p4() -> LatticePolytope {
    projective_space(4)
}

/// Product of the segment [-1, 1] with the P^3 simplex; normal fan of
/// P^1 x P^3.
pub fn p1xp3() -> LatticePolytope {
    let simplex = p3();
    let mut vertices = Vec::new();
    for sign in [-1i64, 1] {
        for v in simplex.vertices() {
            let mut point = vec![Int::from(sign)];
            point.extend(v.iter().cloned());
            vertices.push(point);
        }
    }
    LatticePolytope::from_vertices(4, vertices).expect("fixture polytope is valid")
}

/// Every smooth reflexive fixture of dimension 2 and 3, with labels.
pub fn surfaces_and_threefolds() -> Vec<(&'static str, LatticePolytope)> {
    vec![
        ("P2", p2()),
        ("P1xP1", p1xp1()),
        ("dP6", del_pezzo6()),
        ("P3", p3()),
        ("P1xP1xP1", p1p1p1()),
    ]
}

/// The full fixture list used by the acceptance suite.
pub fn all_smooth_reflexive() -> Vec<(&'static str, LatticePolytope)> {
    let mut out = surfaces_and_threefolds();
    out.push(("P4", p4()));
    out.push(("P1xP3", p1xp3()));
    out
}
