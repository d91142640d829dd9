//! Exact intersection theory on a smooth complete toric variety.
//!
//! Cycle classes are stored in the orbit-closure basis: a graded class keeps,
//! for each codimension k, a rational coefficient per k-dimensional cone
//! [V(sigma)]. The only primitive product is divisor-times-cycle, which the
//! standard smooth-toric reduction makes exact: a ray transverse to the cone
//! moves to the spanned cone (or dies), a ray inside the cone is rewritten
//! through the character that is 1 on it and 0 on the rest of the cone.
//! Every formula in the crate is arranged as an iterated divisor product, so
//! no quotient-ring machinery is needed.
//!
//! Two coefficient maps can represent the same rational-equivalence class,
//! so class comparisons go through [`ChowRing::class_eq`], which pairs
//! against the orbit closures of complementary dimension; that pairing is
//! perfect on a smooth complete toric variety.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::fan::{Fan, RaySet};
use crate::linalg::{self, Int, Rat};
use crate::{Error, Result};

/// Formal rational combination of the torus-invariant ray divisors D_rho.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DivisorClass {
    coefficients: BTreeMap<usize, Rat>,
}

impl DivisorClass {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single ray divisor D_rho.
    pub fn ray(index: usize) -> Self {
        let mut coefficients = BTreeMap::new();
        coefficients.insert(index, Rat::one());
        Self { coefficients }
    }

    /// Dense coefficient vector in canonical facet order.
    pub fn from_dense(coefficients: &[Rat]) -> Self {
        Self {
            coefficients: coefficients
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn from_integers(coefficients: &[i64]) -> Self {
        Self::from_dense(
            &coefficients
                .iter()
                .map(|&c| linalg::rat_int(c))
                .collect::<Vec<_>>(),
        )
    }

    /// K_X = -sum of all ray divisors.
    pub fn canonical(fan: &Fan) -> Self {
        Self {
            coefficients: (0..fan.rays().len())
                .map(|i| (i, -Rat::one()))
                .collect(),
        }
    }

    /// -K_X = sum of all ray divisors; equals c_1(X) as a class.
    pub fn anticanonical(fan: &Fan) -> Self {
        Self {
            coefficients: (0..fan.rays().len()).map(|i| (i, Rat::one())).collect(),
        }
    }

    /// The principal divisor div(chi^m) = sum <m, u_rho> D_rho.
    pub fn principal(fan: &Fan, m: &[Int]) -> Self {
        Self {
            coefficients: fan
                .rays()
                .iter()
                .enumerate()
                .map(|(i, u)| (i, Rat::from_integer(linalg::dot(m, u))))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn coefficient(&self, ray: usize) -> Rat {
        self.coefficients.get(&ray).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.coefficients.iter().map(|(&i, c)| (i, c))
    }

    pub fn dense(&self, ray_count: usize) -> Vec<Rat> {
        (0..ray_count).map(|i| self.coefficient(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.coefficients.values().all(|c| c.is_integer())
    }

    pub fn scaled(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            coefficients: self
                .coefficients
                .iter()
                .map(|(&i, c)| (i, c * factor))
                .collect(),
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut coefficients = self.coefficients.clone();
        for (&i, c) in &other.coefficients {
            let entry = coefficients.entry(i).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                coefficients.remove(&i);
            }
        }
        Self { coefficients }
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scaled(&-Rat::one()))
    }
}

/// Rational cycle class graded by codimension, in the cone basis of a fixed
/// fan. `parts[k]` maps each k-dimensional cone to the coefficient of its
/// orbit closure; `parts[0]` holds the multiple of the fundamental class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedClass {
    dim: usize,
    parts: Vec<BTreeMap<RaySet, Rat>>,
}

impl GradedClass {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            parts: vec![BTreeMap::new(); dim + 1],
        }
    }

    /// The fundamental class [X].
    pub fn unit(dim: usize) -> Self {
        let mut class = Self::zero(dim);
        class.parts[0].insert(Vec::new(), Rat::one());
        class
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn part(&self, codim: usize) -> &BTreeMap<RaySet, Rat> {
        &self.parts[codim]
    }

    pub fn add_term(&mut self, codim: usize, cone: RaySet, coefficient: Rat) {
        if coefficient.is_zero() {
            return;
        }
        match self.parts[codim].entry(cone) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Self, factor: &Rat) {
        debug_assert_eq!(self.dim, other.dim);
        if factor.is_zero() {
            return;
        }
        for (codim, part) in other.parts.iter().enumerate() {
            for (cone, coefficient) in part {
                self.add_term(codim, cone.clone(), coefficient * factor);
            }
        }
    }

    pub fn scaled(&self, factor: &Rat) -> Self {
        let mut out = Self::zero(self.dim);
        out.add_assign_scaled(self, factor);
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &Rat::one());
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &-Rat::one());
        out
    }

    /// Just the codimension-k component.
    pub fn only_part(&self, codim: usize) -> Self {
        let mut out = Self::zero(self.dim);
        out.parts[codim] = self.parts[codim].clone();
        out
    }

    /// Drop components of codimension greater than `up_to`.
    pub fn truncated(&self, up_to: usize) -> Self {
        let mut out = self.clone();
        for part in out.parts.iter_mut().skip(up_to + 1) {
            part.clear();
        }
        out
    }

    /// True when every stored coefficient is zero (a much stronger statement
    /// than being zero in the Chow group).
    pub fn is_zero_map(&self) -> bool {
        self.parts.iter().all(BTreeMap::is_empty)
    }

    /// The degree map: sum of the top-codimension (point class)
    /// coefficients. Point classes all have degree 1 on a smooth complete
    /// toric variety; lower gradings are ignored.
    pub fn degree(&self) -> Rat {
        self.parts[self.dim].values().sum()
    }

    /// Sum of coefficients per codimension 0..=dim. On a variety whose
    /// cone classes of one dimension are all rationally equivalent (such as
    /// projective space) this is the multiple of that common class.
    pub fn coefficient_sums(&self) -> Vec<Rat> {
        self.parts
            .iter()
            .map(|part| part.values().sum())
            .collect()
    }
}

/// One term of a formal polynomial in ray divisors.
#[derive(Debug, Clone)]
pub struct Monomial {
    pub coefficient: Rat,
    pub factors: Vec<DivisorClass>,
}

/// Which containing maximal cone supplies the rewriting character in the
/// self-intersection branch. Any valid choice yields the same Chow class;
/// the default is fixed for reproducible coefficient maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum DualChoice {
    FirstMaxCone,
    #[allow(dead_code)]
    LastMaxCone,
}

/// Exact Chow arithmetic for a validated smooth complete fan.
#[derive(Debug)]
pub struct ChowRing<'a> {
    fan: &'a Fan,
    max_cones: Vec<RaySet>,
    /// Row i of `dual_bases[k]` is the dual-basis vector of ray
    /// `max_cones[k][i]`: 1 on that ray, 0 on the others of the cone.
    dual_bases: Vec<Vec<Vec<Int>>>,
}

impl<'a> ChowRing<'a> {
    pub fn new(fan: &'a Fan) -> Result<Self> {
        fan.check_smooth()?;
        if !fan.is_complete() {
            return Err(Error::NotComplete);
        }
        let n = fan.dim();
        let max_cones: Vec<RaySet> = fan.max_cones().cloned().collect();
        let mut dual_bases = Vec::with_capacity(max_cones.len());
        for cone in &max_cones {
            let mut matrix = vec![vec![Int::zero(); n]; n];
            for (j, &ray) in cone.iter().enumerate() {
                for (i, row) in matrix.iter_mut().enumerate() {
                    row[j] = fan.rays()[ray][i].clone();
                }
            }
            let inverse = linalg::inverse_unimodular(&matrix)
                .expect("max cone is unimodular after the smoothness check");
            dual_bases.push(inverse);
        }
        Ok(Self {
            fan,
            max_cones,
            dual_bases,
        })
    }

    pub fn fan(&self) -> &Fan {
        self.fan
    }

    pub fn dim(&self) -> usize {
        self.fan.dim()
    }

    fn dual_vector(&self, cone: &RaySet, ray: usize, choice: DualChoice) -> Vec<Int> {
        let found = match choice {
            DualChoice::FirstMaxCone => self
                .max_cones
                .iter()
                .enumerate()
                .find(|(_, mc)| is_subset(cone, mc)),
            DualChoice::LastMaxCone => self
                .max_cones
                .iter()
                .enumerate()
                .rev()
                .find(|(_, mc)| is_subset(cone, mc)),
        };
        let (idx, max_cone) =
            found.expect("complete fan: every cone is a face of a maximal cone");
        let position = max_cone
            .iter()
            .position(|&r| r == ray)
            .expect("ray belongs to the cone");
        self.dual_bases[idx][position].clone()
    }

    fn mul_ray_cone(
        &self,
        ray: usize,
        cone: &RaySet,
        factor: &Rat,
        out: &mut GradedClass,
        depth: usize,
        choice: DualChoice,
    ) -> Result<()> {
        if depth > 10 * self.dim() {
            return Err(Error::InternalNonTermination);
        }
        if cone.binary_search(&ray).is_ok() {
            // self-intersection: D_ray ~ -sum_{rho outside cone} <m, u_rho> D_rho
            // for the character m dual to `ray` inside a containing max cone
            let m = self.dual_vector(cone, ray, choice);
            for (other, generator) in self.fan.rays().iter().enumerate() {
                if cone.binary_search(&other).is_ok() {
                    continue;
                }
                let pairing = linalg::dot(&m, generator);
                if pairing.is_zero() {
                    continue;
                }
                let scaled = factor * Rat::from_integer(-pairing);
                self.mul_ray_cone(other, cone, &scaled, out, depth + 1, choice)?;
            }
        } else {
            let mut key = cone.clone();
            key.push(ray);
            key.sort_unstable();
            if let Some(target) = self.fan.minimal_cone_over(&key) {
                out.add_term(cone.len() + 1, target.clone(), factor.clone());
            }
        }
        Ok(())
    }

    fn mul_divisor_with(
        &self,
        class: &GradedClass,
        divisor: &DivisorClass,
        choice: DualChoice,
    ) -> Result<GradedClass> {
        let n = self.dim();
        let mut out = GradedClass::zero(n);
        for codim in 0..n {
            // the top grading is annihilated: no cone of dimension n+1 exists
            for (cone, coefficient) in class.part(codim) {
                for (ray, divisor_coefficient) in divisor.coefficients() {
                    let factor = coefficient * divisor_coefficient;
                    if factor.is_zero() {
                        continue;
                    }
                    self.mul_ray_cone(ray, cone, &factor, &mut out, 0, choice)?;
                }
            }
        }
        Ok(out)
    }

    /// Multiply a graded class by a divisor: each codimension-k component
    /// moves to codimension k+1, linearly in both arguments.
    pub fn mul_divisor(
        &self,
        class: &GradedClass,
        divisor: &DivisorClass,
    ) -> Result<GradedClass> {
        self.mul_divisor_with(class, divisor, DualChoice::FirstMaxCone)
    }

    /// D . [V(sigma)] for a single cone of the fan.
    pub fn mul_divisor_cycle(
        &self,
        divisor: &DivisorClass,
        cone: &RaySet,
    ) -> Result<GradedClass> {
        debug_assert!(
            self.fan.minimal_cone_over(cone).is_some(),
            "cycle must be an orbit closure of this fan"
        );
        let mut class = GradedClass::zero(self.dim());
        class.add_term(cone.len(), cone.clone(), Rat::one());
        self.mul_divisor(&class, divisor)
    }

    /// Left-to-right product of the factors of each monomial applied to
    /// [X], summed with the monomial coefficients. The result is a class,
    /// so it does not depend on the expansion order.
    pub fn evaluate(&self, polynomial: &[Monomial]) -> Result<GradedClass> {
        let mut out = GradedClass::zero(self.dim());
        for monomial in polynomial {
            if monomial.coefficient.is_zero() {
                continue;
            }
            let mut class = GradedClass::unit(self.dim());
            for factor in &monomial.factors {
                class = self.mul_divisor(&class, factor)?;
                if class.is_zero_map() {
                    break;
                }
            }
            out.add_assign_scaled(&class, &monomial.coefficient);
        }
        Ok(out)
    }

    /// `start` multiplied by the given divisors in order.
    pub fn mul_chain(
        &self,
        start: &GradedClass,
        factors: &[&DivisorClass],
    ) -> Result<GradedClass> {
        let mut class = start.clone();
        for factor in factors {
            class = self.mul_divisor(&class, factor)?;
        }
        Ok(class)
    }

    /// sum_k coefficients[k] * D^k * class, truncated at the top grading.
    pub fn apply_series(
        &self,
        class: &GradedClass,
        divisor: &DivisorClass,
        coefficients: &[Rat],
    ) -> Result<GradedClass> {
        let mut out = GradedClass::zero(self.dim());
        let mut power = class.clone();
        for (k, coefficient) in coefficients.iter().enumerate() {
            if k > 0 {
                power = self.mul_divisor(&power, divisor)?;
                if power.is_zero_map() {
                    break;
                }
            }
            out.add_assign_scaled(&power, coefficient);
        }
        Ok(out)
    }

    /// Total Chern class of the tangent bundle as the ordered product of
    /// (1 + D_rho) over all rays. Every partial product is transverse, so
    /// the codimension-k component comes out as the sum of all k-cone
    /// classes with coefficient exactly 1.
    pub fn chern_total(&self) -> Result<GradedClass> {
        let mut total = GradedClass::unit(self.dim());
        for ray in 0..self.fan.rays().len() {
            let bump = self.mul_divisor(&total, &DivisorClass::ray(ray))?;
            total.add_assign_scaled(&bump, &Rat::one());
        }
        Ok(total)
    }

    /// c_2(X) written directly as the sum of the wall classes [V(sigma)]
    /// over all 2-dimensional cones. Kept independent of
    /// [`ChowRing::chern_total`] so the two routes cross-check each other.
    pub fn c2_wall_sum(&self) -> GradedClass {
        let mut out = GradedClass::zero(self.dim());
        if self.dim() < 2 {
            return out;
        }
        for cone in self.fan.cones(2) {
            out.add_term(2, cone.clone(), Rat::one());
        }
        out
    }

    /// Todd class of the tangent bundle, the product over rays of the Todd
    /// series of D_rho, truncated at codimension `up_to`.
    pub fn todd_class(&self, up_to: usize) -> Result<GradedClass> {
        let bound = up_to.min(self.dim());
        let series = todd_series(bound);
        let mut total = GradedClass::unit(self.dim());
        for ray in 0..self.fan.rays().len() {
            total = self.apply_series(&total, &DivisorClass::ray(ray), &series)?;
        }
        Ok(total.truncated(bound))
    }

    /// Chern character of the line bundle O(D): sum_k D^k / k!.
    pub fn chern_character(
        &self,
        divisor: &DivisorClass,
        up_to: usize,
    ) -> Result<GradedClass> {
        let bound = up_to.min(self.dim());
        let series = exp_series(bound);
        Ok(self
            .apply_series(&GradedClass::unit(self.dim()), divisor, &series)?
            .truncated(bound))
    }

    /// Nefness of an integral divisor: on each maximal cone the support
    /// function is the character m_sigma with <m_sigma, u_rho> = -a_rho for
    /// the rays of the cone; the divisor is nef when every m_sigma satisfies
    /// the remaining inequalities.
    pub fn is_nef(&self, divisor: &DivisorClass) -> Result<bool> {
        if !divisor.is_integral() {
            return Err(Error::NonIntegerCoefficients);
        }
        let n = self.dim();
        for (idx, max_cone) in self.max_cones.iter().enumerate() {
            let mut support = vec![Rat::zero(); n];
            for (i, &ray) in max_cone.iter().enumerate() {
                let a = divisor.coefficient(ray);
                if a.is_zero() {
                    continue;
                }
                for (c, entry) in support.iter_mut().enumerate() {
                    *entry -= &a * Rat::from_integer(self.dual_bases[idx][i][c].clone());
                }
            }
            for (ray, generator) in self.fan.rays().iter().enumerate() {
                let value: Rat = support
                    .iter()
                    .zip(generator)
                    .map(|(s, g)| s * Rat::from_integer(g.clone()))
                    .sum();
                if value < -divisor.coefficient(ray) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Pair the codimension-k component of a class against every cone of the
    /// complementary dimension: deg(class_k . prod_{rho in tau} D_rho).
    pub fn cone_pairings(
        &self,
        class: &GradedClass,
        codim: usize,
    ) -> Result<Vec<(RaySet, Rat)>> {
        let n = self.dim();
        let component = class.only_part(codim);
        let mut out = Vec::new();
        for cone in self.fan.cones(n - codim) {
            let mut product = component.clone();
            for &ray in cone {
                product = self.mul_divisor(&product, &DivisorClass::ray(ray))?;
            }
            out.push((cone.clone(), product.degree()));
        }
        Ok(out)
    }

    /// deg(class_k . divisor^(n-k)) for k = 0..=n.
    pub fn divisor_power_pairings(
        &self,
        class: &GradedClass,
        divisor: &DivisorClass,
    ) -> Result<Vec<Rat>> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n + 1);
        for codim in 0..=n {
            let mut product = class.only_part(codim);
            for _ in codim..n {
                product = self.mul_divisor(&product, divisor)?;
            }
            out.push(product.degree());
        }
        Ok(out)
    }

    /// Zero test in the Chow group. The orbit closures of complementary
    /// dimension span, and the intersection pairing is perfect on a smooth
    /// complete toric variety, so vanishing of every pairing is equivalent
    /// to rational equivalence with zero.
    pub fn is_zero_class(&self, class: &GradedClass) -> Result<bool> {
        for codim in 0..=self.dim() {
            if class.part(codim).is_empty() {
                continue;
            }
            for (_, pairing) in self.cone_pairings(class, codim)? {
                if !pairing.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Equality in the Chow group (per codimension, via pairings).
    pub fn class_eq(&self, a: &GradedClass, b: &GradedClass) -> Result<bool> {
        self.is_zero_class(&a.minus(b))
    }
}

fn is_subset(smaller: &[usize], larger: &[usize]) -> bool {
    smaller.iter().all(|i| larger.binary_search(i).is_ok())
}

/// Coefficients 1/k! of the exponential series up to degree `up_to`.
pub fn exp_series(up_to: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(up_to + 1);
    let mut factorial = Int::one();
    for k in 0..=up_to {
        if k > 0 {
            factorial *= Int::from(k);
        }
        out.push(Rat::new(Int::one(), factorial.clone()));
    }
    out
}

/// Like [`exp_series`] with the constant term removed: e^t - 1.
pub fn exp_minus_one_series(up_to: usize) -> Vec<Rat> {
    let mut out = exp_series(up_to);
    out[0] = Rat::zero();
    out
}

/// Coefficients of t / (1 - e^{-t}) up to degree `up_to`, generated from the
/// Bernoulli recurrence: 1, 1/2, 1/12, 0, -1/720, ...
pub fn todd_series(up_to: usize) -> Vec<Rat> {
    let bernoulli = bernoulli_minus(up_to + 1);
    let mut factorial = Int::one();
    bernoulli
        .into_iter()
        .enumerate()
        .map(|(k, b)| {
            if k > 0 {
                factorial *= Int::from(k);
            }
            // second-kind convention: B+_k = (-1)^k B-_k
            let plus = if k % 2 == 1 { -b } else { b };
            plus / Rat::from_integer(factorial.clone())
        })
        .collect()
}

/// First-kind Bernoulli numbers B_0..B_{count-1} (B_1 = -1/2) by the exact
/// recurrence sum_{j<=m} C(m+1, j) B_j = 0.
fn bernoulli_minus(count: usize) -> Vec<Rat> {
    let mut numbers: Vec<Rat> = Vec::with_capacity(count);
    for m in 0..count {
        if m == 0 {
            numbers.push(Rat::one());
            continue;
        }
        let mut acc = Rat::zero();
        for (j, b) in numbers.iter().enumerate() {
            acc += Rat::from_integer(binomial(m + 1, j)) * b;
        }
        numbers.push(-acc / Rat::from_integer(Int::from(m + 1)));
    }
    numbers
}

fn binomial(n: usize, k: usize) -> Int {
    let mut out = Int::one();
    for i in 0..k.min(n - k) {
        out = out * Int::from(n - i) / Int::from(i + 1);
    }
    out
}
