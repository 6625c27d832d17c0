//! Smearing across a tower of cyclic covers: averaging chains from one
//! finite quotient over deck translates into measure chains on another,
//! and the volume bookkeeping that turns the averages back into homology
//! classes.
//!
//! The tower fixes a base, a mod-d edge cocycle, and for every divisor e
//! of d the quotient Q_e built from the same labels reduced mod e; Q_d is
//! the common cover and Q_1 is the base itself. Smearing a simplex of Q_e
//! into Q_m lifts it to the common cover, translates the lift by a full
//! set of deck-coset representatives of the Q_m deck subgroup, projects,
//! and weights each translate 1/m. The result is independent of the lift,
//! is a chain map, never increases mass, and multiplies top homology
//! classes by the volume ratio e/m.
//!
//! Combinatorial volume gives every top cell volume one, so the volume of
//! a quotient is its top cell count and the volume cochain records the
//! orientation sign of each top cell.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::chain::{
    homology_class_decompose, RationalChain, RationalCochain, SimplicialMap,
};
use crate::covering::{build_cyclic_cover, CoveringMap, EdgeCocycle};
use crate::delta_complex::DeltaComplex;
use crate::error::{ComplexId, Error, Result};
use crate::measure::{chain_from_measure, integrate, MeasureChain};
use crate::rational::Rational;
use crate::seminorm::class_norm;

/// A base complex with one quotient cover per divisor of the sheet count.
#[derive(Debug, Clone)]
pub struct CoverTower {
    base: DeltaComplex,
    sheets: u64,
    divisors: Vec<u64>,
    quotients: BTreeMap<u64, CoveringMap>,
}

impl CoverTower {
    /// Builds every quotient of the mod-d cover described by the cocycle,
    /// one per divisor, by reducing the same labels mod e.
    pub fn new(base: &DeltaComplex, cocycle: &EdgeCocycle) -> Result<Self> {
        if cocycle.complex() != base.id() {
            return Err(Error::WrongComplex { expected: base.id(), found: cocycle.complex() });
        }
        let d = cocycle.sheets();
        let divisors: Vec<u64> = (1..=d).filter(|e| d % e == 0).collect();
        let mut quotients = BTreeMap::new();
        for &e in &divisors {
            let labels = cocycle.labels().iter().map(|&w| w % e).collect();
            let reduced = EdgeCocycle::new(base, e, labels)?;
            quotients.insert(e, build_cyclic_cover(base, &reduced)?);
        }
        Ok(CoverTower { base: base.clone(), sheets: d, divisors, quotients })
    }

    pub fn base(&self) -> &DeltaComplex {
        &self.base
    }

    pub fn sheets(&self) -> u64 {
        self.sheets
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    /// The covering Q_e -> base for a divisor e.
    pub fn quotient(&self, e: u64) -> Result<&CoveringMap> {
        self.quotients.get(&e).ok_or(Error::NotDivisors { value: e, sheets: self.sheets })
    }

    /// The common cover Q_d on top of the tower.
    pub fn common_cover(&self) -> &DeltaComplex {
        self.quotients[&self.sheets].total()
    }

    /// The projection from the common cover onto Q_e: reduce sheets mod e.
    /// A d/e-sheeted covering; composing it with Q_e -> base recovers the
    /// projection of the common cover.
    pub fn connecting_projection(&self, e: u64) -> Result<SimplicialMap> {
        let qe = self.quotient(e)?;
        let u = self.common_cover();
        let d = self.sheets as usize;
        let e = e as usize;
        let cell_map = (0..=u.dim())
            .map(|k| {
                (0..u.count(k)).map(|cell| (cell / d) * e + (cell % d) % e).collect()
            })
            .collect();
        SimplicialMap::new(u, qe.total(), cell_map)
    }
}

/// The top-dimensional cochain assigning each cell its orientation sign in
/// the fundamental cycle, the combinatorial volume form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeCochain {
    cochain: RationalCochain,
}

impl VolumeCochain {
    pub fn new(cx: &DeltaComplex) -> Result<Self> {
        let fund = cx.fundamental_cycle()?;
        let n = cx.dim();
        let values = (0..cx.count(n)).map(|t| {
            let c = fund.coefficient(t);
            (t, if c.is_negative() { -Rational::one() } else { Rational::one() })
        });
        Ok(VolumeCochain { cochain: RationalCochain::from_values(cx, n, values)? })
    }

    pub fn cochain(&self) -> &RationalCochain {
        &self.cochain
    }

    pub fn complex(&self) -> ComplexId {
        self.cochain.complex()
    }

    pub fn dim(&self) -> usize {
        self.cochain.dim()
    }
}

/// Combinatorial volume: every top cell has volume one.
pub fn volume(cx: &DeltaComplex) -> Rational {
    Rational::from_integer(cx.count(cx.dim()).into())
}

/// Smears a chain on Q_e into a measure chain on Q_m: each simplex is
/// lifted to the common cover, translated by the m deck-coset
/// representatives, projected to Q_m, and weighted 1/m. Uniform weights
/// make the answer independent of the lift.
pub fn smear(
    tower: &CoverTower,
    from: u64,
    to: u64,
    c: &RationalChain,
) -> Result<MeasureChain> {
    let qe = tower.quotient(from)?;
    let qm = tower.quotient(to)?;
    if c.complex() != qe.total().id() {
        return Err(Error::WrongComplex { expected: qe.total().id(), found: c.complex() });
    }
    let e = from as usize;
    let m = to as usize;
    let share = Rational::one() / Rational::from_integer(m.into());
    let mut weights: BTreeMap<usize, Rational> = BTreeMap::new();
    for (cell, a) in c.support() {
        // Lift (b, r) of Q_e to sheet r of the common cover, translate by
        // the coset reps t = 0..m of the Q_m deck subgroup, project mod m.
        let b = cell / e;
        let r = cell % e;
        let portion = a * &share;
        for t in 0..m {
            *weights.entry(b * m + (r + t) % m).or_insert_with(Rational::zero) +=
                portion.clone();
        }
    }
    MeasureChain::new(qm.total(), c.dim(), weights)
}

/// Integrates the volume cochain against a top-dimensional measure chain:
/// the weighted sum of per-cell volumes.
pub fn integrate_volume(mu: &MeasureChain, vol: &VolumeCochain) -> Result<Rational> {
    if mu.complex() != vol.complex() {
        return Err(Error::WrongComplex { expected: vol.complex(), found: mu.complex() });
    }
    if mu.dim() != vol.dim() {
        return Err(Error::MismatchedComplexOrDimension {
            left_dim: mu.dim(),
            right_dim: vol.dim(),
        });
    }
    integrate(|cell| Some(vol.cochain.value(cell)), mu.measure())
}

/// Reads the homology class of a top-dimensional measure cycle off its
/// volume integral: class = (integral / volume) * fundamental class. The
/// ratio is verified against a direct decomposition of the underlying
/// chain; a disagreement would falsify the representation and reports
/// Inconsistent.
pub fn class_from_integration(cx: &DeltaComplex, mu: &MeasureChain) -> Result<Rational> {
    let vol = VolumeCochain::new(cx)?;
    let ratio = integrate_volume(mu, &vol)? / volume(cx);
    let z = chain_from_measure(cx, mu)?;
    let fund = cx.fundamental_cycle()?;
    let (lambda, _) = homology_class_decompose(cx, &z, &[fund])?;
    if lambda[0] != ratio {
        return Err(Error::Inconsistent);
    }
    Ok(ratio)
}

/// Norms and volumes of two tower quotients, with the proportionality
/// identity norm/volume = norm/volume checked exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProportionalityReport {
    pub norm_from: Rational,
    pub norm_to: Rational,
    pub volume_from: Rational,
    pub volume_to: Rational,
}

/// Computes class norms and volumes of the fundamental cycles of Q_e and
/// Q_m and asserts the exact proportionality norm_e/vol_e = norm_m/vol_m.
pub fn proportionality_check(
    tower: &CoverTower,
    e: u64,
    m: u64,
) -> Result<ProportionalityReport> {
    let qe = tower.quotient(e)?;
    let qm = tower.quotient(m)?;
    let norm_from = class_norm(qe.total(), &qe.total().fundamental_cycle()?)?.class_norm;
    let norm_to = class_norm(qm.total(), &qm.total().fundamental_cycle()?)?.class_norm;
    let volume_from = volume(qe.total());
    let volume_to = volume(qm.total());
    if &norm_from / &volume_from != &norm_to / &volume_to {
        return Err(Error::Inconsistent);
    }
    Ok(ProportionalityReport { norm_from, norm_to, volume_from, volume_to })
}
