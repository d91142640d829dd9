//! The normal fan of a lattice polytope and fan-level predicates:
//! smoothness, completeness, cone lookup and the face-to-cone dictionary.

use std::collections::BTreeSet;

use num_traits::{One, Signed};

use crate::linalg::{self, Int};
use crate::polytope::{Face, LatticePolytope};
use crate::{Error, Result};

/// A cone of the fan, stored as the sorted set of its ray indices. Cones of
/// the fans built here are simplicial whenever the fan is smooth, so the ray
/// set determines the cone.
pub type RaySet = Vec<usize>;

/// A rational polyhedral fan with primitive ray generators.
#[derive(Debug, Clone)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<Int>>,
    /// Cones grouped by dimension 0..=dim; `cones[0]` is the zero cone.
    cones: Vec<BTreeSet<RaySet>>,
    polytope_hash: u64,
    from_reflexive: bool,
}

impl Fan {
    /// Normal fan of a full-dimensional lattice polytope: rays are the facet
    /// normals in canonical order, and the cone over a face of codimension k
    /// is spanned by the normals of the facets containing it.
    pub fn normal_fan(polytope: &LatticePolytope) -> Self {
        let dim = polytope.dim();
        let rays: Vec<Vec<Int>> = polytope.facets().iter().map(|f| f.normal.clone()).collect();

        let mut cones: Vec<BTreeSet<RaySet>> = vec![BTreeSet::new(); dim + 1];
        cones[0].insert(Vec::new());
        for faces in polytope.faces() {
            for face in faces {
                let cone_dim = dim - face.dim;
                cones[cone_dim].insert(face.facets.clone());
            }
        }

        Fan {
            dim,
            rays,
            cones,
            polytope_hash: polytope.hash(),
            from_reflexive: polytope.is_reflexive(),
        }
    }

    /// Assemble a simplicial fan directly from rays and maximal cones,
    /// closing each maximal cone under ray subsets (its faces). Meant for
    /// hand-built test fans; normal fans of polytopes should use
    /// [`Fan::normal_fan`].
    pub fn from_max_cones(dim: usize, rays: Vec<Vec<Int>>, max_cones: Vec<RaySet>) -> Self {
        let mut cones: Vec<BTreeSet<RaySet>> = vec![BTreeSet::new(); dim + 1];
        cones[0].insert(Vec::new());
        for max_cone in &max_cones {
            let mut sorted = max_cone.clone();
            sorted.sort_unstable();
            for mask in 1u32..1 << sorted.len() {
                let subset: RaySet = sorted
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| mask & (1 << bit) != 0)
                    .map(|(_, &ray)| ray)
                    .collect();
                let coords: Vec<Vec<Int>> = subset.iter().map(|&i| rays[i].clone()).collect();
                let cone_dim = linalg::rank(&coords);
                cones[cone_dim].insert(subset);
            }
        }
        Fan {
            dim,
            rays,
            cones,
            polytope_hash: 0,
            from_reflexive: false,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Primitive ray generators in canonical facet order.
    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    /// Cones of dimension `d`, each a sorted set of ray indices.
    pub fn cones(&self, d: usize) -> impl Iterator<Item = &RaySet> {
        self.cones[d].iter()
    }

    pub fn cone_count(&self, d: usize) -> usize {
        self.cones[d].len()
    }

    pub fn max_cones(&self) -> impl Iterator<Item = &RaySet> {
        self.cones[self.dim].iter()
    }

    /// Hash of the defining polytope (0 for hand-built fans).
    pub fn polytope_hash(&self) -> u64 {
        self.polytope_hash
    }

    /// Whether the defining polytope was reflexive. Gates the charge and
    /// hypersurface-oracle formulas.
    pub fn from_reflexive(&self) -> bool {
        self.from_reflexive
    }

    /// The cone of the fan whose ray set equals `rays`, if any.
    pub fn minimal_cone_over(&self, rays: &[usize]) -> Option<&RaySet> {
        let mut key: RaySet = rays.to_vec();
        key.sort_unstable();
        key.dedup();
        if key.len() > self.dim {
            return None;
        }
        self.cones.iter().find_map(|level| level.get(&key))
    }

    /// True when every maximal cone is spanned by a lattice basis.
    pub fn is_smooth(&self) -> bool {
        self.check_smooth().is_ok()
    }

    /// Like [`Fan::is_smooth`] but reporting the offending cone.
    pub fn check_smooth(&self) -> Result<()> {
        for cone in self.max_cones() {
            if cone.len() != self.dim {
                return Err(Error::NotSmooth {
                    cone: cone.clone(),
                    determinant: "undefined (non-simplicial cone)".into(),
                });
            }
            let rows: Vec<Vec<Int>> = cone.iter().map(|&i| self.rays[i].clone()).collect();
            let det = linalg::det(&rows);
            if det.abs() != Int::one() {
                return Err(Error::NotSmooth {
                    cone: cone.clone(),
                    determinant: det.to_string(),
                });
            }
        }
        Ok(())
    }

    /// True when every wall (codimension-1 cone) lies in exactly two maximal
    /// cones and the maximal cones are connected through walls.
    pub fn is_complete(&self) -> bool {
        if self.dim == 0 || self.cones[self.dim].is_empty() {
            return false;
        }
        let max_cones: Vec<&RaySet> = self.max_cones().collect();
        for wall in self.cones(self.dim - 1) {
            let containing = max_cones.iter().filter(|c| is_subset(wall, c)).count();
            if containing != 2 {
                return false;
            }
        }
        // wall-connectivity of the max-cone adjacency graph
        let mut visited = vec![false; max_cones.len()];
        let mut stack = vec![0];
        visited[0] = true;
        while let Some(at) = stack.pop() {
            for (j, other) in max_cones.iter().enumerate() {
                if !visited[j]
                    && self.cones(self.dim - 1).any(|wall| {
                        is_subset(wall, max_cones[at]) && is_subset(wall, other)
                    })
                {
                    visited[j] = true;
                    stack.push(j);
                }
            }
        }
        visited.into_iter().all(|v| v)
    }

    /// The cone corresponding to a face of the defining polytope: spanned by
    /// the normals of all facets containing the face. A face of codimension k
    /// maps to a cone of dimension k.
    pub fn face_to_cone(&self, face: &Face) -> Result<&RaySet> {
        if face.polytope_hash != self.polytope_hash {
            return Err(Error::FaceNotOfThisPolytope);
        }
        let cone_dim = self.dim - face.dim;
        self.cones[cone_dim]
            .get(&face.facets)
            .ok_or(Error::FaceNotOfThisPolytope)
    }
}

fn is_subset(smaller: &[usize], larger: &[usize]) -> bool {
    smaller.iter().all(|i| larger.binary_search(i).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::int;

    fn rays_of(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn normal_fan_of_p2_polytope() {
        let p = fixtures::p2();
        let fan = Fan::normal_fan(&p);
        assert_eq!(fan.rays(), &rays_of(&[&[-1, -1], &[0, 1], &[1, 0]])[..]);
        assert_eq!(fan.cone_count(2), 3);
        assert_eq!(fan.cone_count(2), p.vertices().len());
        assert!(fan.from_reflexive());
    }

    #[test]
    fn normal_fan_of_square_is_p1xp1() {
        let fan = Fan::normal_fan(&fixtures::p1xp1());
        assert_eq!(
            fan.rays(),
            &rays_of(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]])[..]
        );
        assert_eq!(fan.cone_count(2), 4);
        assert!(fan.is_smooth());
    }

    #[test]
    fn normal_fan_of_p4_polytope() {
        let fan = Fan::normal_fan(&fixtures::p4());
        assert_eq!(fan.rays().len(), 5);
        assert_eq!(fan.cone_count(4), 5);
        assert!(fan.is_smooth());
        assert!(fan.is_complete());
    }

    #[test]
    fn smoothness_examples() {
        assert!(Fan::normal_fan(&fixtures::p2()).is_smooth());

        // max cone spanned by (1,0) and (1,2) has determinant 2
        let fan = Fan::from_max_cones(2, rays_of(&[&[1, 0], &[1, 2]]), vec![vec![0, 1]]);
        assert!(!fan.is_smooth());
        match fan.check_smooth() {
            Err(Error::NotSmooth { determinant, .. }) => assert_eq!(determinant, "2"),
            other => panic!("expected NotSmooth, got {other:?}"),
        }

        // the simplex conv{e_i, -sum e_i} has a singular normal fan
        let small = LatticePolytope::from_vertices(
            2,
            rays_of(&[&[1, 0], &[0, 1], &[-1, -1]]),
        )
        .unwrap();
        assert!(!Fan::normal_fan(&small).is_smooth());
    }

    #[test]
    fn weighted_projective_fan_is_complete_but_singular() {
        // P(1,1,2): rays e1, e2, -e1-2e2
        let fan = Fan::from_max_cones(
            2,
            rays_of(&[&[-1, -2], &[0, 1], &[1, 0]]),
            vec![vec![1, 2], vec![0, 1], vec![0, 2]],
        );
        assert!(fan.is_complete());
        assert!(!fan.is_smooth());
    }

    #[test]
    fn completeness_examples() {
        for (_, p) in fixtures::all_smooth_reflexive() {
            assert!(Fan::normal_fan(&p).is_complete());
        }
        // dropping a max cone breaks the two-cones-per-wall condition
        let partial = Fan::from_max_cones(
            2,
            rays_of(&[&[-1, -1], &[0, 1], &[1, 0]]),
            vec![vec![0, 1], vec![0, 2]],
        );
        assert!(!partial.is_complete());
    }

    #[test]
    fn minimal_cone_lookup() {
        let p2 = Fan::normal_fan(&fixtures::p2());
        assert_eq!(p2.minimal_cone_over(&[0, 1]), Some(&vec![0, 1]));
        assert_eq!(p2.minimal_cone_over(&[1]), Some(&vec![1]));
        assert_eq!(p2.minimal_cone_over(&[0, 1, 2]), None);

        // opposite rays of P1xP1 span no cone: rays sorted as
        // (-1,0), (0,-1), (0,1), (1,0) so the pairs are {0,3} and {1,2}
        let quadric = Fan::normal_fan(&fixtures::p1xp1());
        assert_eq!(quadric.minimal_cone_over(&[0, 3]), None);
        assert_eq!(quadric.minimal_cone_over(&[1, 2]), None);
        assert!(quadric.minimal_cone_over(&[1, 3]).is_some());
    }

    #[test]
    fn face_to_cone_is_a_graded_bijection() {
        let p = fixtures::p4();
        let fan = Fan::normal_fan(&p);
        for (face_dim, faces) in p.faces().iter().enumerate() {
            let cone_dim = fan.dim() - face_dim;
            let mut images = BTreeSet::new();
            for face in faces {
                let cone = fan.face_to_cone(face).unwrap();
                assert_eq!(cone.len(), cone_dim);
                images.insert(cone.clone());
            }
            assert_eq!(images.len(), fan.cone_count(cone_dim));
        }
        // the ten codimension-2 faces hit the ten 2-cones
        assert_eq!(p.faces()[2].len(), 10);
        assert_eq!(fan.cone_count(2), 10);

        // a facet maps to its own ray
        let facet_face = &p.faces()[3][0];
        assert_eq!(fan.face_to_cone(facet_face).unwrap(), &facet_face.facets);

        // the whole polytope maps to the zero cone
        assert_eq!(fan.face_to_cone(&p.full_face()).unwrap(), &Vec::new());
    }

    #[test]
    fn foreign_faces_are_rejected() {
        let p3 = fixtures::p3();
        let p4_fan = Fan::normal_fan(&fixtures::p4());
        let err = p4_fan.face_to_cone(&p3.faces()[0][0]).unwrap_err();
        assert_eq!(err, Error::FaceNotOfThisPolytope);
    }

    #[test]
    fn cone_faces_stay_in_the_fan() {
        for (_, p) in fixtures::all_smooth_reflexive() {
            let fan = Fan::normal_fan(&p);
            for d in 1..=fan.dim() {
                for cone in fan.cones(d) {
                    for drop in 0..cone.len() {
                        let sub: RaySet = cone
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| *i != drop)
                            .map(|(_, &r)| r)
                            .collect();
                        assert!(fan.minimal_cone_over(&sub).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn max_cones_meet_in_common_faces() {
        for (_, p) in fixtures::all_smooth_reflexive() {
            let fan = Fan::normal_fan(&p);
            let max_cones: Vec<_> = fan.max_cones().cloned().collect();
            for (i, a) in max_cones.iter().enumerate() {
                for b in &max_cones[i + 1..] {
                    let meet: RaySet = a.iter().filter(|r| b.contains(r)).copied().collect();
                    if !meet.is_empty() {
                        assert!(fan.minimal_cone_over(&meet).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn max_cones_match_vertices() {
        for (_, p) in fixtures::all_smooth_reflexive() {
            let fan = Fan::normal_fan(&p);
            assert_eq!(fan.cone_count(fan.dim()), p.vertices().len());
        }
    }
}
