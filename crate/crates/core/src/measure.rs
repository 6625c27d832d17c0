//! Finitely supported signed measures on finite carrier sets: Hahn and
//! Jordan decomposition, total variation, pushforward, integration, the
//! boundary of measure chains, and the norm-preserving inclusion of
//! ordinary chains.
//!
//! Carriers are finite, so every subset is measurable and sigma-additivity
//! is automatic; all measure-theoretic statements here are exhaustively
//! checkable.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::chain::{RationalChain, RationalCochain};
use crate::delta_complex::DeltaComplex;
use crate::error::{ComplexId, Error, Result};
use crate::rational::{abs, Rational};

pub type Atom = usize;

/// A finite carrier set: an identity plus its cardinality. Atoms are
/// `0..size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Carrier {
    id: u64,
    size: usize,
}

impl Carrier {
    pub fn new(id: u64, size: usize) -> Self {
        Carrier { id, size }
    }

    /// The k-cells of a complex as a carrier.
    pub fn cells(cx: &DeltaComplex, k: usize) -> Result<Self> {
        if k > cx.dim() {
            return Err(Error::DimensionOutOfRange { dim: k, top: cx.dim() });
        }
        // Mix the dimension into the id so carriers of different degrees on
        // the same complex never collide.
        let id = cx.id() ^ (0x9e3779b97f4a7c15u64).wrapping_mul(k as u64 + 1);
        Ok(Carrier { id, size: cx.count(k) })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

/// Finitely supported signed measure; zero weights are never stored, so
/// structural equality is measure equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMeasure {
    carrier: Carrier,
    weights: BTreeMap<Atom, Rational>,
}

impl SignedMeasure {
    pub fn zero(carrier: Carrier) -> Self {
        SignedMeasure { carrier, weights: BTreeMap::new() }
    }

    pub fn from_weights<I>(carrier: Carrier, weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Atom, Rational)>,
    {
        let mut map: BTreeMap<Atom, Rational> = BTreeMap::new();
        for (atom, q) in weights {
            if atom >= carrier.size {
                return Err(Error::AtomOutOfRange { atom, size: carrier.size });
            }
            let entry = map.entry(atom).or_insert_with(Rational::zero);
            *entry += q;
        }
        map.retain(|_, q| !q.is_zero());
        Ok(SignedMeasure { carrier, weights: map })
    }

    /// Unit atomic measure concentrated on one atom.
    pub fn dirac(carrier: Carrier, atom: Atom) -> Result<Self> {
        Self::from_weights(carrier, [(atom, Rational::from_integer(1.into()))])
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn weight(&self, atom: Atom) -> Rational {
        self.weights.get(&atom).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (Atom, &Rational)> {
        self.weights.iter().map(|(&a, q)| (a, q))
    }

    pub fn support_len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    /// mu(A) for a subset of the carrier (duplicates are ignored).
    pub fn mass<I>(&self, atoms: I) -> Rational
    where
        I: IntoIterator<Item = Atom>,
    {
        let set: BTreeSet<Atom> = atoms.into_iter().collect();
        set.iter().map(|a| self.weight(*a)).sum()
    }

    /// mu(carrier).
    pub fn total_mass(&self) -> Rational {
        self.weights.values().sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch);
        }
        let mut weights = self.weights.clone();
        for (&atom, q) in &other.weights {
            let entry = weights.entry(atom).or_insert_with(Rational::zero);
            *entry += q;
        }
        weights.retain(|_, q| !q.is_zero());
        Ok(SignedMeasure { carrier: self.carrier, weights })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return SignedMeasure::zero(self.carrier);
        }
        let weights = self.weights.iter().map(|(&a, v)| (a, v * q)).collect();
        SignedMeasure { carrier: self.carrier, weights }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rational::from_integer((-1).into()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }
}

/// Total variation: the sum of absolute weights, which equals
/// sup_A mu(A) - inf_B mu(B) over subsets of the carrier.
pub fn total_variation(mu: &SignedMeasure) -> Rational {
    mu.weights.values().map(abs).sum()
}

/// Hahn decomposition of the carrier plus the induced Jordan decomposition
/// of the measure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HahnJordan {
    pub positive_part: SignedMeasure,
    pub negative_part: SignedMeasure,
    /// Atoms of strictly positive weight, ascending.
    pub p: Vec<Atom>,
    /// The complement of `p` in the carrier, ascending; atoms of weight
    /// zero land here (deterministic tie-break).
    pub n: Vec<Atom>,
}

pub fn hahn_decompose(mu: &SignedMeasure) -> HahnJordan {
    let mut positive = BTreeMap::new();
    let mut negative = BTreeMap::new();
    for (&atom, q) in &mu.weights {
        if q > &Rational::zero() {
            positive.insert(atom, q.clone());
        } else {
            negative.insert(atom, -q.clone());
        }
    }
    let p: Vec<Atom> = positive.keys().copied().collect();
    let p_set: BTreeSet<Atom> = p.iter().copied().collect();
    let n: Vec<Atom> = (0..mu.carrier.size).filter(|a| !p_set.contains(a)).collect();
    HahnJordan {
        positive_part: SignedMeasure { carrier: mu.carrier, weights: positive },
        negative_part: SignedMeasure { carrier: mu.carrier, weights: negative },
        p,
        n,
    }
}

/// Pushforward along a map of carriers: weight'(y) = sum of weight(x) over
/// f(x) = y. The map need only be defined on the support; cancellations
/// are pruned, so total variation never increases.
pub fn pushforward<F>(mu: &SignedMeasure, f: F, target: Carrier) -> Result<SignedMeasure>
where
    F: Fn(Atom) -> Option<Atom>,
{
    let mut weights: BTreeMap<Atom, Rational> = BTreeMap::new();
    for (atom, q) in mu.support() {
        let image = f(atom).ok_or(Error::PartialMap { atom })?;
        if image >= target.size {
            return Err(Error::AtomOutOfRange { atom: image, size: target.size });
        }
        let entry = weights.entry(image).or_insert_with(Rational::zero);
        *entry += q;
    }
    weights.retain(|_, q| !q.is_zero());
    Ok(SignedMeasure { carrier: target, weights })
}

/// Integral of a rational function against the measure; the function need
/// only be defined on the support.
pub fn integrate<F>(f: F, mu: &SignedMeasure) -> Result<Rational>
where
    F: Fn(Atom) -> Option<Rational>,
{
    let mut acc = Rational::zero();
    for (atom, q) in mu.support() {
        let value = f(atom).ok_or(Error::PartialFunction { atom })?;
        acc += value * q;
    }
    Ok(acc)
}

/// A signed measure on the k-cells of a complex. Deliberately a distinct
/// type from `RationalChain`, so the inclusion of chains stays a genuine,
/// testable map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureChain {
    complex: ComplexId,
    dim: usize,
    measure: SignedMeasure,
}

impl MeasureChain {
    pub fn new<I>(cx: &DeltaComplex, dim: usize, weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Atom, Rational)>,
    {
        let carrier = Carrier::cells(cx, dim)?;
        Ok(MeasureChain {
            complex: cx.id(),
            dim,
            measure: SignedMeasure::from_weights(carrier, weights)?,
        })
    }

    pub fn complex(&self) -> ComplexId {
        self.complex
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn measure(&self) -> &SignedMeasure {
        &self.measure
    }

    pub fn total_variation(&self) -> Rational {
        total_variation(&self.measure)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.complex != other.complex || self.dim != other.dim {
            return Err(Error::MismatchedComplexOrDimension {
                left_dim: self.dim,
                right_dim: other.dim,
            });
        }
        Ok(MeasureChain {
            complex: self.complex,
            dim: self.dim,
            measure: self.measure.add(&other.measure)?,
        })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        MeasureChain { complex: self.complex, dim: self.dim, measure: self.measure.scale(q) }
    }

    pub fn is_zero(&self) -> bool {
        self.measure.is_zero()
    }
}

/// Norm-preserving inclusion of chains into measure chains: c maps to the
/// combination of atomic measures with the same coefficients.
pub fn include_chain(cx: &DeltaComplex, c: &RationalChain) -> Result<MeasureChain> {
    if c.complex() != cx.id() {
        return Err(Error::WrongComplex { expected: cx.id(), found: c.complex() });
    }
    MeasureChain::new(cx, c.dim(), c.support().map(|(cell, q)| (cell, q.clone())))
}

/// Reads a measure chain back as an ordinary chain (the inverse of
/// `include_chain` on its image).
pub fn chain_from_measure(cx: &DeltaComplex, mu: &MeasureChain) -> Result<RationalChain> {
    if mu.complex != cx.id() {
        return Err(Error::WrongComplex { expected: cx.id(), found: mu.complex });
    }
    RationalChain::from_terms(cx, mu.dim, mu.measure.support().map(|(a, q)| (a, q.clone())))
}

/// Boundary of a measure chain: the alternating sum over face slots of the
/// pushforward along sigma -> face_j(sigma).
pub fn measure_boundary(cx: &DeltaComplex, mu: &MeasureChain) -> Result<MeasureChain> {
    if mu.complex != cx.id() {
        return Err(Error::WrongComplex { expected: cx.id(), found: mu.complex });
    }
    let k = mu.dim;
    if k == 0 {
        return Err(Error::DimensionOutOfRange { dim: 0, top: cx.dim() });
    }
    let target = Carrier::cells(cx, k - 1)?;
    let mut acc = SignedMeasure::zero(target);
    for j in 0..=k {
        let pushed = pushforward(&mu.measure, |cell| Some(cx.faces_of(k, cell)[j]), target)?;
        acc = if j % 2 == 0 { acc.add(&pushed)? } else { acc.sub(&pushed)? };
    }
    Ok(MeasureChain { complex: mu.complex, dim: k - 1, measure: acc })
}

/// Kronecker product of a cochain with a measure chain: the integral of
/// the cochain against the measure.
pub fn measure_kronecker(f: &RationalCochain, mu: &MeasureChain) -> Result<Rational> {
    if f.complex() != mu.complex || f.dim() != mu.dim {
        return Err(Error::MismatchedComplexOrDimension {
            left_dim: f.dim(),
            right_dim: mu.dim,
        });
    }
    integrate(|atom| Some(f.value(atom)), &mu.measure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{boundary, coboundary, l1_norm, sup_norm};
    use crate::delta_complex::{build_polygon_surface, build_single_triangle, build_sphere};
    use crate::rational::{rat, ratio};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn test_carrier(size: usize) -> Carrier {
        Carrier::new(0xc0ffee, size)
    }

    fn random_measure(rng: &mut ChaCha8Rng, carrier: Carrier, density: f64) -> SignedMeasure {
        let mut weights = Vec::new();
        for a in 0..carrier.size() {
            if rng.gen_bool(density) {
                let n = rng.gen_range(-9i64..=9);
                let d = rng.gen_range(1i64..=9);
                weights.push((a, ratio(n, d)));
            }
        }
        SignedMeasure::from_weights(carrier, weights).unwrap()
    }

    #[test]
    fn hahn_on_two_atoms() {
        let carrier = test_carrier(3);
        let mu =
            SignedMeasure::from_weights(carrier, [(0, rat(3)), (1, rat(-2))]).unwrap();
        let hj = hahn_decompose(&mu);
        assert_eq!(hj.p, vec![0]);
        assert_eq!(hj.n, vec![1, 2]);
        assert_eq!(hj.positive_part.weight(0), rat(3));
        assert_eq!(hj.negative_part.weight(1), rat(2));
        assert_eq!(hj.positive_part.add(&hj.negative_part.neg()).unwrap(), mu);
    }

    #[test]
    fn hahn_on_zero_measure() {
        let carrier = test_carrier(4);
        let hj = hahn_decompose(&SignedMeasure::zero(carrier));
        assert!(hj.p.is_empty());
        assert_eq!(hj.n, vec![0, 1, 2, 3]);
        assert!(hj.positive_part.is_zero());
        assert!(hj.negative_part.is_zero());
    }

    #[test]
    fn hahn_parts_are_nonnegative_on_random_subsets() {
        let carrier = test_carrier(20);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mu = random_measure(&mut rng, carrier, 0.6);
            let hj = hahn_decompose(&mu);
            for _ in 0..50 {
                let subset: Vec<Atom> =
                    (0..20).filter(|_| rng.gen_bool(0.5)).collect();
                let plus = hj.positive_part.mass(subset.iter().copied());
                let minus = hj.negative_part.mass(subset.iter().copied());
                assert!(plus >= rat(0));
                assert!(minus >= rat(0));
                assert_eq!(mu.mass(subset.iter().copied()), plus - minus);
            }
        }
    }

    #[test]
    fn total_variation_basics() {
        let carrier = test_carrier(2);
        let mu =
            SignedMeasure::from_weights(carrier, [(0, rat(3)), (1, rat(-2))]).unwrap();
        assert_eq!(total_variation(&mu), rat(5));
        assert_eq!(total_variation(&SignedMeasure::zero(carrier)), rat(0));
    }

    #[test]
    fn total_variation_equals_sup_minus_inf_over_all_subsets() {
        let carrier = test_carrier(12);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let mu = random_measure(&mut rng, carrier, 0.7);
            let mut sup = rat(0);
            let mut inf = rat(0);
            for mask in 0u32..(1 << 12) {
                let mass = mu.mass((0..12).filter(|a| mask >> a & 1 == 1));
                if mass > sup {
                    sup = mass.clone();
                }
                if mass < inf {
                    inf = mass;
                }
            }
            assert_eq!(total_variation(&mu), sup - inf);
        }
    }

    #[test]
    fn total_variation_is_a_norm() {
        let carrier = test_carrier(15);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let mu = random_measure(&mut rng, carrier, 0.5);
            let nu = random_measure(&mut rng, carrier, 0.5);
            let sum = mu.add(&nu).unwrap();
            assert!(total_variation(&sum) <= total_variation(&mu) + total_variation(&nu));
            assert_eq!(total_variation(&mu).is_zero(), mu.is_zero());
            let q = ratio(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=5));
            assert_eq!(
                total_variation(&mu.scale(&q)),
                crate::rational::abs(&q) * total_variation(&mu)
            );
        }
    }

    #[test]
    fn jordan_is_the_minimal_decomposition() {
        let carrier = test_carrier(10);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..30 {
            let mu = random_measure(&mut rng, carrier, 0.5);
            let hj = hahn_decompose(&mu);
            // Any other nonnegative decomposition mu = alpha - beta is
            // fatter: alpha = mu+ + slack, beta = mu- + slack.
            let slack = random_measure(&mut rng, carrier, 0.4);
            let slack = {
                let h = hahn_decompose(&slack);
                h.positive_part.add(&h.negative_part).unwrap()
            };
            let alpha = hj.positive_part.add(&slack).unwrap();
            let beta = hj.negative_part.add(&slack).unwrap();
            assert_eq!(alpha.sub(&beta).unwrap(), mu);
            assert!(
                total_variation(&mu)
                    <= total_variation(&alpha) + total_variation(&beta)
            );
            assert_eq!(
                total_variation(&mu),
                total_variation(&hj.positive_part) + total_variation(&hj.negative_part)
            );
        }
    }

    #[test]
    fn pushforward_examples() {
        let carrier = test_carrier(3);
        let point = test_carrier(1);
        let mu =
            SignedMeasure::from_weights(carrier, [(0, rat(3)), (1, rat(-2))]).unwrap();

        let injective = pushforward(&mu, |a| Some(a), carrier).unwrap();
        assert_eq!(total_variation(&injective), total_variation(&mu));

        let collapsed = pushforward(&mu, |_| Some(0), point).unwrap();
        assert_eq!(collapsed.weight(0), rat(1));
        assert_eq!(total_variation(&collapsed), rat(1));

        let cancel =
            SignedMeasure::from_weights(carrier, [(0, rat(1)), (1, rat(-1))]).unwrap();
        let merged = pushforward(&cancel, |_| Some(0), point).unwrap();
        assert!(merged.is_zero());

        let partial = pushforward(&mu, |a| if a == 0 { Some(0) } else { None }, point);
        assert!(matches!(partial, Err(Error::PartialMap { atom: 1 })));
    }

    #[test]
    fn pushforward_is_functorial_and_transforms_integrals() {
        let a = test_carrier(12);
        let b = test_carrier(7);
        let c = test_carrier(4);
        let f = |x: Atom| Some(x % 7);
        let g = |y: Atom| Some((y * y) % 4);
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..30 {
            let mu = random_measure(&mut rng, a, 0.6);
            let step = pushforward(&pushforward(&mu, f, b).unwrap(), g, c).unwrap();
            let composed = pushforward(&mu, |x| g(f(x).unwrap()), c).unwrap();
            assert_eq!(step, composed);
            assert!(total_variation(&step) <= total_variation(&mu));

            let h = |z: Atom| Some(ratio(z as i64 + 1, 3));
            let lhs = integrate(h, &pushforward(&mu, f, b).unwrap()).unwrap();
            let rhs = integrate(|x| h(f(x).unwrap()), &mu).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn integrate_examples() {
        let carrier = test_carrier(5);
        let dirac = SignedMeasure::dirac(carrier, 3).unwrap();
        let f = |a: Atom| Some(ratio(2 * a as i64 + 1, 3));
        assert_eq!(integrate(f, &dirac).unwrap(), ratio(7, 3));

        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mu = random_measure(&mut rng, carrier, 0.8);
        assert_eq!(integrate(|_| Some(rat(1)), &mu).unwrap(), mu.total_mass());

        let bound: Rational = (0..5).map(|a| abs(&f(a).unwrap())).max().unwrap();
        let value = integrate(f, &mu).unwrap();
        assert!(abs(&value) <= bound * total_variation(&mu));

        let partial = integrate(|a| if a == 0 { Some(rat(1)) } else { None }, &mu);
        assert!(matches!(partial, Err(Error::PartialFunction { .. })));
    }

    #[test]
    fn measure_boundary_of_a_triangle_dirac() {
        let cx = build_single_triangle();
        let mu = MeasureChain::new(&cx, 2, [(0, rat(1))]).unwrap();
        let b = measure_boundary(&cx, &mu).unwrap();
        assert_eq!(b.measure().weight(0), rat(1));
        assert_eq!(b.measure().weight(1), rat(-1));
        assert_eq!(b.measure().weight(2), rat(1));
    }

    #[test]
    fn measure_boundary_squares_to_zero_and_commutes_with_inclusion() {
        let cx = build_sphere();
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..20 {
            let mut terms: Vec<(usize, Rational)> = Vec::new();
            for t in 0..cx.count(2) {
                if rng.gen_bool(0.7) {
                    terms.push((t, ratio(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=4))));
                }
            }
            let c = RationalChain::from_terms(&cx, 2, terms).unwrap();
            let mu = include_chain(&cx, &c).unwrap();

            let bb = measure_boundary(&cx, &measure_boundary(&cx, &mu).unwrap()).unwrap();
            assert!(bb.is_zero());

            let lhs = measure_boundary(&cx, &mu).unwrap();
            let rhs = include_chain(&cx, &boundary(&cx, &c).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn include_chain_is_an_isometry() {
        let cx = build_single_triangle();
        let c = RationalChain::from_terms(&cx, 1, [(0, rat(3)), (1, rat(-2))]).unwrap();
        let mu = include_chain(&cx, &c).unwrap();
        assert_eq!(mu.measure().weight(0), rat(3));
        assert_eq!(mu.measure().weight(1), rat(-2));
        assert_eq!(mu.total_variation(), rat(5));
        assert_eq!(mu.total_variation(), l1_norm(&c));
        assert_eq!(chain_from_measure(&cx, &mu).unwrap(), c);

        let zero = include_chain(&cx, &RationalChain::zero(&cx, 1).unwrap()).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn genus2_fundamental_cycle_as_measure() {
        let cx = build_polygon_surface(2).unwrap();
        let z = cx.fundamental_cycle().unwrap();
        let mu = include_chain(&cx, &z).unwrap();
        assert_eq!(mu.total_variation(), rat(6));
        assert!(measure_boundary(&cx, &mu).unwrap().is_zero());
    }

    #[test]
    fn kronecker_adjunction_with_the_coboundary_twist() {
        // <delta f, mu> = (-1)^{k+1} <f, boundary mu>: the twist sits in
        // the coboundary, matching the chain-level pairing exactly.
        let cx = build_polygon_surface(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..20 {
            let f = RationalCochain::from_values(
                &cx,
                1,
                (0..9).map(|i| (i, ratio(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=4)))),
            )
            .unwrap();
            let mu = MeasureChain::new(
                &cx,
                2,
                (0..6).map(|t| (t, ratio(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=4)))),
            )
            .unwrap();
            let lhs = measure_kronecker(&coboundary(&cx, &f).unwrap(), &mu).unwrap();
            let rhs = measure_kronecker(&f, &measure_boundary(&cx, &mu).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "k = 1, twist (-1)^2 = +1");
        }

        let sphere = build_sphere();
        let f0 = RationalCochain::from_values(&sphere, 0, [(0, rat(2)), (3, rat(-1))]).unwrap();
        let mu1 = MeasureChain::new(&sphere, 1, [(0, rat(1)), (4, ratio(1, 2))]).unwrap();
        let lhs = measure_kronecker(&coboundary(&sphere, &f0).unwrap(), &mu1).unwrap();
        let rhs = measure_kronecker(&f0, &measure_boundary(&sphere, &mu1).unwrap()).unwrap();
        assert_eq!(lhs, -rhs, "k = 0, twist (-1)^1 = -1");
    }

    #[test]
    fn measure_kronecker_is_bounded_by_sup_times_tov() {
        let cx = build_sphere();
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..30 {
            let f = RationalCochain::from_values(
                &cx,
                2,
                (0..4).map(|i| (i, ratio(rng.gen_range(-8i64..=8), rng.gen_range(1i64..=5)))),
            )
            .unwrap();
            let mu = MeasureChain::new(
                &cx,
                2,
                (0..4).map(|t| (t, ratio(rng.gen_range(-8i64..=8), rng.gen_range(1i64..=5)))),
            )
            .unwrap();
            let pairing = measure_kronecker(&f, &mu).unwrap();
            assert!(abs(&pairing) <= sup_norm(&f) * mu.total_variation());
        }
    }

    #[test]
    fn measure_boundary_rejects_dimension_zero() {
        let cx = build_single_triangle();
        let mu = MeasureChain::new(&cx, 0, [(0, rat(1))]).unwrap();
        assert!(matches!(
            measure_boundary(&cx, &mu),
            Err(Error::DimensionOutOfRange { dim: 0, .. })
        ));
    }
}
