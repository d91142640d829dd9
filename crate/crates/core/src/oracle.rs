//! Independent combinatorial Euler characteristics via lattice-point
//! counting. These numbers never touch the intersection-theoretic reduction,
//! which is what makes them usable as cross-checks for it.

use num_traits::One;

use crate::fan::Fan;
use crate::intersection::{ChowRing, DivisorClass};
use crate::linalg::{Int, Rat};
use crate::polytope::{lattice_points, LatticePoints};
use crate::{Error, Result};

/// Lattice-point data of a divisor polytope together with the Euler
/// characteristics read off from it.
#[derive(Debug, Clone)]
pub struct OracleResult {
    /// Dense divisor coefficients in canonical facet order.
    pub divisor: Vec<Rat>,
    pub nef: bool,
    /// chi(X, O(D)) = number of lattice points of P_D (Demazure vanishing).
    pub chi_x: Int,
    /// chi(Y, O(D)|_Y) for the anticanonical hypersurface Y: boundary count.
    pub chi_y: Int,
    pub total_points: usize,
    pub interior_points: usize,
}

/// The divisor polytope P_D = {m : <m, u_rho> >= -a_rho}.
pub fn divisor_polytope_points(fan: &Fan, divisor: &DivisorClass) -> Result<LatticePoints> {
    let halfspaces: Vec<(Vec<Int>, Rat)> = fan
        .rays()
        .iter()
        .enumerate()
        .map(|(i, ray)| (ray.clone(), divisor.coefficient(i)))
        .collect();
    lattice_points(&halfspaces)
}

/// chi(X, O(D)) for a nef integral divisor on a smooth complete toric
/// variety: all higher cohomology vanishes, so chi is the section count,
/// i.e. the number of lattice points of P_D.
pub fn chi_toric_nef(ring: &ChowRing, divisor: &DivisorClass) -> Result<Int> {
    if !ring.is_nef(divisor)? {
        return Err(Error::NotNef);
    }
    let points = divisor_polytope_points(ring.fan(), divisor)?;
    Ok(Int::from(points.all.len()))
}

/// chi(Y, O(D)|_Y) for the anticanonical hypersurface Y of a smooth toric
/// variety from a reflexive polytope and a nef integral D. The restriction
/// sequence 0 -> O(D + K) -> O(D) -> O(D)|_Y -> 0 plus Serre duality turn
/// this into the boundary lattice-point count of P_D.
pub fn chi_hypersurface(ring: &ChowRing, divisor: &DivisorClass) -> Result<Int> {
    if !ring.fan().from_reflexive() {
        return Err(Error::NotReflexive {
            facet: 0,
            offset: "unknown (fan not built from a reflexive polytope)".into(),
        });
    }
    if !ring.is_nef(divisor)? {
        return Err(Error::NotNef);
    }
    let points = divisor_polytope_points(ring.fan(), divisor)?;
    Ok(Int::from(points.boundary_count()))
}

/// Topological Euler characteristic of the toric variety: the number of
/// maximal cones (torus fixed points).
pub fn euler_characteristic_top(fan: &Fan) -> Result<usize> {
    if !fan.is_complete() {
        return Err(Error::NotComplete);
    }
    Ok(fan.cone_count(fan.dim()))
}

/// Bundle the point counts and both Euler characteristics for a nef divisor.
pub fn oracle_report(ring: &ChowRing, divisor: &DivisorClass) -> Result<OracleResult> {
    let nef = ring.is_nef(divisor)?;
    if !nef {
        return Err(Error::NotNef);
    }
    let points = divisor_polytope_points(ring.fan(), divisor)?;
    let chi_y = if ring.fan().from_reflexive() {
        Int::from(points.boundary_count())
    } else {
        // without the reflexive hypothesis the boundary count has no
        // hypersurface interpretation; report chi_X again
        Int::from(points.all.len())
    };
    Ok(OracleResult {
        divisor: divisor.dense(ring.fan().rays().len()),
        nef,
        chi_x: Int::from(points.all.len()),
        chi_y,
        total_points: points.all.len(),
        interior_points: points.interior.len(),
    })
}

/// Binomial coefficient as an exact integer, for frozen oracle values.
pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::from(0);
    }
    let mut out = Int::one();
    for i in 0..k.min(n - k) {
        out = out * Int::from(n - i) / Int::from(i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::Fan;
    use crate::fixtures;
    use crate::intersection::DivisorClass;

    #[test]
    fn section_counts_on_p2() {
        let fan = Fan::normal_fan(&fixtures::p2());
        let ring = ChowRing::new(&fan).unwrap();
        for (d, expected) in [(0, 1), (1, 3), (2, 6)] {
            let divisor = DivisorClass::from_integers(&[d, 0, 0]);
            assert_eq!(chi_toric_nef(&ring, &divisor).unwrap(), Int::from(expected));
        }
    }

    #[test]
    fn section_counts_on_p1xp1_are_box_counts() {
        let fan = Fan::normal_fan(&fixtures::p1xp1());
        let ring = ChowRing::new(&fan).unwrap();
        // rays sorted (-1,0), (0,-1), (0,1), (1,0): pick one ray per factor
        let divisor = DivisorClass::from_integers(&[0, 0, 3, 2]);
        assert_eq!(chi_toric_nef(&ring, &divisor).unwrap(), Int::from(12));
    }

    #[test]
    fn trivial_bundle_has_one_section_everywhere() {
        for (name, p) in fixtures::all_smooth_reflexive() {
            let fan = Fan::normal_fan(&p);
            let ring = ChowRing::new(&fan).unwrap();
            assert_eq!(
                chi_toric_nef(&ring, &DivisorClass::zero()).unwrap(),
                Int::from(1),
                "{name}"
            );
        }
    }

    #[test]
    fn hypersurface_counts() {
        let p4_fan = Fan::normal_fan(&fixtures::p4());
        let p4 = ChowRing::new(&p4_fan).unwrap();
        let h = DivisorClass::ray(0);
        assert_eq!(chi_hypersurface(&p4, &h).unwrap(), Int::from(5));

        let p3_fan = Fan::normal_fan(&fixtures::p3());
        let p3 = ChowRing::new(&p3_fan).unwrap();
        let four_h = DivisorClass::ray(0).scaled(&Rat::from_integer(Int::from(4)));
        assert_eq!(chi_hypersurface(&p3, &four_h).unwrap(), Int::from(34));
    }

    #[test]
    fn anticanonical_hypersurface_count_is_total_minus_one() {
        for (name, p) in fixtures::all_smooth_reflexive() {
            let fan = Fan::normal_fan(&p);
            let ring = ChowRing::new(&fan).unwrap();
            let anti = DivisorClass::anticanonical(&fan);
            let boundary = chi_hypersurface(&ring, &anti).unwrap();
            let total = chi_toric_nef(&ring, &anti).unwrap();
            assert_eq!(boundary, total - Int::from(1), "{name}: one interior point");
        }
    }

    #[test]
    fn non_nef_divisors_are_refused() {
        let fan = Fan::normal_fan(&fixtures::p2());
        let ring = ChowRing::new(&fan).unwrap();
        let negative = DivisorClass::ray(0).scaled(&Rat::from_integer(Int::from(-1)));
        assert_eq!(chi_toric_nef(&ring, &negative), Err(Error::NotNef));
        assert_eq!(chi_hypersurface(&ring, &negative), Err(Error::NotNef));
        assert!(oracle_report(&ring, &negative).is_err());
    }

    #[test]
    fn euler_characteristic_counts_max_cones() {
        assert_eq!(
            euler_characteristic_top(&Fan::normal_fan(&fixtures::p2())).unwrap(),
            3
        );
        assert_eq!(
            euler_characteristic_top(&Fan::normal_fan(&fixtures::p4())).unwrap(),
            5
        );
        assert_eq!(
            euler_characteristic_top(&Fan::normal_fan(&fixtures::p1xp1())).unwrap(),
            4
        );
        let partial = Fan::from_max_cones(
            2,
            vec![
                vec![Int::from(-1), Int::from(-1)],
                vec![Int::from(0), Int::from(1)],
                vec![Int::from(1), Int::from(0)],
            ],
            vec![vec![0, 1]],
        );
        assert_eq!(euler_characteristic_top(&partial), Err(Error::NotComplete));
    }

    #[test]
    fn oracle_report_bundles_counts() {
        let fan = Fan::normal_fan(&fixtures::p3());
        let ring = ChowRing::new(&fan).unwrap();
        let anti = DivisorClass::anticanonical(&fan);
        let report = oracle_report(&ring, &anti).unwrap();
        assert!(report.nef);
        assert_eq!(report.total_points, 35);
        assert_eq!(report.interior_points, 1);
        assert_eq!(report.chi_x, Int::from(35));
        assert_eq!(report.chi_y, Int::from(34));
    }
}
