//! The l1-seminorm of a homology class, computed exactly by linear
//! programming, together with the dual sup-norm certificate.
//!
//! `class_norm` minimizes the l1 norm over all representatives of the
//! class of a cycle: min |z0 + d(b)|_1 over (k+1)-chains b, linearized by
//! the positive/negative split. The equality-row duals of the same LP give
//! a cochain phi that vanishes on boundaries, pairs to 1 with the class,
//! and has sup norm exactly 1/norm; weak duality is Hoelder's inequality
//! and strong duality closes the gap with no tolerance.

use num_traits::{One, Signed, Zero};

use crate::chain::{boundary, kronecker, l1_norm, sup_norm, RationalChain, RationalCochain};
use crate::delta_complex::DeltaComplex;
use crate::error::{Error, Result};
use crate::lp::{solve, LpOutcome, StandardForm};
use crate::rational::Rational;

/// Exact optimum plus both sides of the duality gap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpCertificate {
    /// The class norm r >= 0.
    pub class_norm: Rational,
    /// A minimizing representative z* of the class, |z*|_1 = r.
    pub optimal_cycle: RationalChain,
    /// Witness chain b with z0 - z* = d(b); when r = 0 this exhibits z0 =
    /// d(b). In top dimension there are no (k+1)-chains and the witness is
    /// the zero k-chain.
    pub boundary_witness: RationalChain,
    /// Present iff r > 0: phi with phi(boundaries) = 0, <phi, z0> = 1,
    /// sup norm exactly 1/r.
    pub dual_cochain: Option<RationalCochain>,
}

/// Optimal value of the dual program, or its infeasibility (exactly the
/// boundary-class case).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualNorm {
    Value(Rational),
    Infeasible,
}

/// Reason a certificate failed re-verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateIssue {
    /// Fields disagree about the complex or dimension.
    ShapeMismatch,
    /// The optimal cycle has nonzero boundary.
    OptimumNotACycle,
    /// z0 - z* differs from the boundary of the stored witness.
    WitnessGap,
    /// |z*|_1 differs from the stated norm.
    NormMismatch,
    /// Dual cochain present/absent on the wrong side of r = 0.
    DualPresenceWrong,
    /// The dual cochain fails to annihilate some elementary boundary.
    NotOnAnnihilator,
    /// <phi, z0> != 1 or r * sup(phi) != 1.
    DualityGap,
}

impl std::fmt::Display for CertificateIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            CertificateIssue::ShapeMismatch => "ShapeMismatch",
            CertificateIssue::OptimumNotACycle => "OptimumNotACycle",
            CertificateIssue::WitnessGap => "WitnessGap",
            CertificateIssue::NormMismatch => "NormMismatch",
            CertificateIssue::DualPresenceWrong => "DualPresenceWrong",
            CertificateIssue::NotOnAnnihilator => "NotOnAnnihilator",
            CertificateIssue::DualityGap => "DualityGap",
        };
        f.write_str(name)
    }
}

fn require_cycle(cx: &DeltaComplex, z0: &RationalChain) -> Result<()> {
    if z0.complex() != cx.id() {
        return Err(Error::WrongComplex { expected: cx.id(), found: z0.complex() });
    }
    if z0.dim() >= 1 && !boundary(cx, z0)?.is_zero() {
        return Err(Error::NotACycle);
    }
    Ok(())
}

/// Columns of the boundary matrix from dimension k+1, as dense rational
/// columns; empty when k is the top dimension.
fn boundary_columns(cx: &DeltaComplex, k: usize) -> Result<Vec<Vec<Rational>>> {
    if k >= cx.dim() {
        return Ok(Vec::new());
    }
    let d = cx.boundary_matrix(k + 1)?;
    let n_k = cx.count(k);
    Ok((0..cx.count(k + 1))
        .map(|t| {
            let mut col = vec![Rational::zero(); n_k];
            for &(i, v) in d.column(t) {
                col[i] = Rational::from_integer(v.into());
            }
            col
        })
        .collect())
}

/// Computes the class norm and a full primal/dual certificate.
///
/// Variables (u, v, p, q) >= 0 encode z* = u - v = z0 + d(p - q); the
/// constraints are u - v - Dp + Dq = z0 per k-cell and the objective is
/// the coordinate sum of u + v. Bland's rule fixes the optimal basis, so
/// output is deterministic.
pub fn class_norm(cx: &DeltaComplex, z0: &RationalChain) -> Result<LpCertificate> {
    require_cycle(cx, z0)?;
    let k = z0.dim();
    let n_k = cx.count(k);
    let cols_d = boundary_columns(cx, k)?;
    let bc = cols_d.len();
    let n = 2 * n_k + 2 * bc;

    let mut constraints = Vec::with_capacity(n_k);
    for i in 0..n_k {
        let mut row = vec![Rational::zero(); n];
        row[i] = Rational::one();
        row[n_k + i] = -Rational::one();
        for (t, col) in cols_d.iter().enumerate() {
            if !col[i].is_zero() {
                row[2 * n_k + t] = -col[i].clone();
                row[2 * n_k + bc + t] = col[i].clone();
            }
        }
        constraints.push(row);
    }
    let rhs = z0.to_dense(cx)?;
    let mut objective = vec![Rational::zero(); n];
    for c in objective.iter_mut().take(2 * n_k) {
        *c = Rational::one();
    }

    let outcome = solve(&StandardForm { constraints, rhs, objective })?;
    let LpOutcome::Optimal(sol) = outcome else {
        return Err(Error::LpFailure(
            "norm program must be feasible and bounded".into(),
        ));
    };

    let r = sol.value.clone();
    let optimal_cycle = RationalChain::from_terms(
        cx,
        k,
        (0..n_k).map(|i| (i, &sol.x[i] - &sol.x[n_k + i])),
    )?;
    debug_assert_eq!(l1_norm(&optimal_cycle), r);
    let boundary_witness = if bc > 0 {
        RationalChain::from_terms(
            cx,
            k + 1,
            (0..bc).map(|t| (t, &sol.x[2 * n_k + bc + t] - &sol.x[2 * n_k + t])),
        )?
    } else {
        RationalChain::zero(cx, k)?
    };

    let dual_cochain = if r.is_positive() {
        // The row duals satisfy |y_i| <= 1, yD = 0, and <y, z0> = r by LP
        // duality; phi = y / r is the normalized certificate.
        let phi = RationalCochain::from_values(
            cx,
            k,
            sol.dual.iter().enumerate().map(|(i, y)| (i, y / &r)),
        )?;
        debug_assert_eq!(kronecker(&phi, z0).unwrap(), Rational::one());
        Some(phi)
    } else {
        None
    };

    Ok(LpCertificate { class_norm: r, optimal_cycle, boundary_witness, dual_cochain })
}

/// Solves the dual program directly and independently of `class_norm`:
/// minimize sup|phi| subject to <phi, z0> = 1 and phi(d(b)) = 0 for all b.
/// Infeasibility is exactly the boundary-class case.
pub fn dual_norm(cx: &DeltaComplex, z0: &RationalChain) -> Result<DualNorm> {
    require_cycle(cx, z0)?;
    let k = z0.dim();
    let n_k = cx.count(k);
    let cols_d = boundary_columns(cx, k)?;
    let z0_dense = z0.to_dense(cx)?;

    // Variables: s, phi+ (n_k), phi- (n_k), slack t (n_k), slack t' (n_k).
    let n = 1 + 4 * n_k;
    let phi_p = |i: usize| 1 + i;
    let phi_m = |i: usize| 1 + n_k + i;
    let slack_lo = |i: usize| 1 + 2 * n_k + i;
    let slack_hi = |i: usize| 1 + 3 * n_k + i;

    let mut constraints = Vec::new();
    let mut rhs = Vec::new();

    let mut norm_row = vec![Rational::zero(); n];
    for i in 0..n_k {
        norm_row[phi_p(i)] = z0_dense[i].clone();
        norm_row[phi_m(i)] = -z0_dense[i].clone();
    }
    constraints.push(norm_row);
    rhs.push(Rational::one());

    for col in &cols_d {
        let mut row = vec![Rational::zero(); n];
        for i in 0..n_k {
            if !col[i].is_zero() {
                row[phi_p(i)] = col[i].clone();
                row[phi_m(i)] = -col[i].clone();
            }
        }
        constraints.push(row);
        rhs.push(Rational::zero());
    }

    for i in 0..n_k {
        // s - phi_i >= 0 and s + phi_i >= 0, written with slacks.
        let mut lo = vec![Rational::zero(); n];
        lo[0] = Rational::one();
        lo[phi_p(i)] = -Rational::one();
        lo[phi_m(i)] = Rational::one();
        lo[slack_lo(i)] = -Rational::one();
        constraints.push(lo);
        rhs.push(Rational::zero());

        let mut hi = vec![Rational::zero(); n];
        hi[0] = Rational::one();
        hi[phi_p(i)] = Rational::one();
        hi[phi_m(i)] = -Rational::one();
        hi[slack_hi(i)] = -Rational::one();
        constraints.push(hi);
        rhs.push(Rational::zero());
    }

    let mut objective = vec![Rational::zero(); n];
    objective[0] = Rational::one();

    match solve(&StandardForm { constraints, rhs, objective })? {
        LpOutcome::Optimal(sol) => Ok(DualNorm::Value(sol.value)),
        LpOutcome::Infeasible => Ok(DualNorm::Infeasible),
        LpOutcome::Unbounded => {
            Err(Error::LpFailure("dual program is bounded below by zero".into()))
        }
    }
}

/// Re-checks every certificate invariant by direct evaluation, with no LP
/// re-solve. `Ok(())` means the certificate is internally consistent and
/// matches z0.
pub fn verify_certificate(
    cx: &DeltaComplex,
    z0: &RationalChain,
    cert: &LpCertificate,
) -> std::result::Result<(), CertificateIssue> {
    let k = z0.dim();
    let z = &cert.optimal_cycle;
    if z0.complex() != cx.id() || z.complex() != cx.id() || z.dim() != k {
        return Err(CertificateIssue::ShapeMismatch);
    }
    if cert.class_norm.is_negative() {
        return Err(CertificateIssue::NormMismatch);
    }
    if k >= 1 {
        match boundary(cx, z) {
            Ok(b) if b.is_zero() => {}
            _ => return Err(CertificateIssue::OptimumNotACycle),
        }
    }
    let diff = match z0.sub(z) {
        Ok(d) => d,
        Err(_) => return Err(CertificateIssue::ShapeMismatch),
    };
    let w = &cert.boundary_witness;
    if w.complex() != cx.id() {
        return Err(CertificateIssue::ShapeMismatch);
    }
    if w.dim() == k + 1 {
        match boundary(cx, w) {
            Ok(dw) if dw == diff => {}
            _ => return Err(CertificateIssue::WitnessGap),
        }
    } else if !(k == cx.dim() && w.dim() == k && w.is_zero() && diff.is_zero()) {
        return Err(CertificateIssue::WitnessGap);
    }
    if l1_norm(z) != cert.class_norm {
        return Err(CertificateIssue::NormMismatch);
    }
    match (&cert.dual_cochain, cert.class_norm.is_positive()) {
        (None, false) => Ok(()),
        (None, true) | (Some(_), false) => Err(CertificateIssue::DualPresenceWrong),
        (Some(phi), true) => {
            if phi.complex() != cx.id() || phi.dim() != k {
                return Err(CertificateIssue::ShapeMismatch);
            }
            if k < cx.dim() {
                for t in 0..cx.count(k + 1) {
                    let cell = RationalChain::delta(cx, k + 1, t)
                        .and_then(|c| boundary(cx, &c))
                        .map_err(|_| CertificateIssue::ShapeMismatch)?;
                    let pairing =
                        kronecker(phi, &cell).map_err(|_| CertificateIssue::ShapeMismatch)?;
                    if !pairing.is_zero() {
                        return Err(CertificateIssue::NotOnAnnihilator);
                    }
                }
            }
            let pairing = kronecker(phi, z0).map_err(|_| CertificateIssue::ShapeMismatch)?;
            if pairing != Rational::one() {
                return Err(CertificateIssue::DualityGap);
            }
            if &cert.class_norm * sup_norm(phi) != Rational::one() {
                return Err(CertificateIssue::DualityGap);
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::push_chain;
    use crate::delta_complex::{build_circle, build_polygon_surface, DeltaComplex};
    use crate::rational::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn zero_cycle_has_norm_zero() {
        let cx = build_polygon_surface(1).unwrap();
        let z = RationalChain::zero(&cx, 1).unwrap();
        let cert = class_norm(&cx, &z).unwrap();
        assert_eq!(cert.class_norm, rat(0));
        assert!(cert.optimal_cycle.is_zero());
        assert!(cert.boundary_witness.is_zero());
        assert!(cert.dual_cochain.is_none());
        assert!(verify_certificate(&cx, &z, &cert).is_ok());
    }

    #[test]
    fn torus_fundamental_class_has_norm_two() {
        let cx = build_polygon_surface(1).unwrap();
        let z = cx.fundamental_cycle().unwrap();
        let cert = class_norm(&cx, &z).unwrap();
        assert_eq!(cert.class_norm, rat(2));
        // No 3-cells: the representative is unique, so z* = z0.
        assert_eq!(cert.optimal_cycle, z);
        let phi = cert.dual_cochain.as_ref().unwrap();
        assert_eq!(sup_norm(phi), ratio(1, 2));
        assert!(verify_certificate(&cx, &z, &cert).is_ok());
        assert_eq!(dual_norm(&cx, &z).unwrap(), DualNorm::Value(ratio(1, 2)));
    }

    #[test]
    fn genus2_fundamental_class_has_norm_six() {
        let cx = build_polygon_surface(2).unwrap();
        let z = cx.fundamental_cycle().unwrap();
        let cert = class_norm(&cx, &z).unwrap();
        assert_eq!(cert.class_norm, rat(6));
        let phi = cert.dual_cochain.as_ref().unwrap();
        assert_eq!(&cert.class_norm * sup_norm(phi), rat(1));
        assert!(verify_certificate(&cx, &z, &cert).is_ok());
        assert_eq!(dual_norm(&cx, &z).unwrap(), DualNorm::Value(ratio(1, 6)));
    }

    #[test]
    fn torus_edge_class_norm_is_one() {
        // [a] on the torus: representatives are a + s(a + b - c), and s =
        // 0 is the unique minimizer.
        let cx = build_polygon_surface(1).unwrap();
        let a = RationalChain::delta(&cx, 1, 0).unwrap();
        let cert = class_norm(&cx, &a).unwrap();
        assert_eq!(cert.class_norm, rat(1));
        assert_eq!(cert.optimal_cycle, a);
        assert!(verify_certificate(&cx, &a, &cert).is_ok());
        assert_eq!(dual_norm(&cx, &a).unwrap(), DualNorm::Value(rat(1)));
    }

    #[test]
    fn boundary_class_has_norm_zero_and_infeasible_dual() {
        let cx = build_polygon_surface(1).unwrap();
        let u = RationalChain::delta(&cx, 2, 0).unwrap();
        let z = boundary(&cx, &u).unwrap();
        assert_eq!(l1_norm(&z), rat(3));
        let cert = class_norm(&cx, &z).unwrap();
        assert_eq!(cert.class_norm, rat(0));
        assert!(cert.optimal_cycle.is_zero());
        assert_eq!(boundary(&cx, &cert.boundary_witness).unwrap(), z);
        assert!(cert.dual_cochain.is_none());
        assert!(verify_certificate(&cx, &z, &cert).is_ok());
        assert_eq!(dual_norm(&cx, &z).unwrap(), DualNorm::Infeasible);
    }

    #[test]
    fn circle_fundamental_class() {
        let cx = build_circle(5).unwrap();
        let z = cx.fundamental_cycle().unwrap();
        let cert = class_norm(&cx, &z).unwrap();
        assert_eq!(cert.class_norm, rat(5));
        assert!(verify_certificate(&cx, &z, &cert).is_ok());
        assert_eq!(dual_norm(&cx, &z).unwrap(), DualNorm::Value(ratio(1, 5)));
    }

    #[test]
    fn homogeneity_of_the_class_norm() {
        let cx = build_polygon_surface(2).unwrap();
        let z = cx.fundamental_cycle().unwrap();
        for q in [ratio(-3, 2), ratio(1, 7), rat(4)] {
            let scaled = z.scale(&q);
            let cert = class_norm(&cx, &scaled).unwrap();
            assert_eq!(cert.class_norm, crate::rational::abs(&q) * rat(6));
            // The argmin is unique here, so the optimal cycle scales too.
            assert_eq!(cert.optimal_cycle, z.scale(&q));
            assert!(verify_certificate(&cx, &scaled, &cert).is_ok());
        }
    }

    #[test]
    fn pushforward_never_increases_the_class_norm() {
        // Collapsing two parallel loops onto one: e0 - e1 dies, e0 + e1
        // doubles up; both push norms stay <= the source norms.
        let two = DeltaComplex::new(
            vec![1, 2],
            vec![Vec::new(), vec![vec![0, 0], vec![0, 0]]],
        )
        .unwrap();
        let one = DeltaComplex::new(vec![1, 1], vec![Vec::new(), vec![vec![0, 0]]]).unwrap();
        let collapse =
            crate::chain::SimplicialMap::new(&two, &one, vec![vec![0], vec![0, 0]]).unwrap();
        for (terms, _name) in [
            (vec![(0usize, rat(1)), (1, rat(-1))], "difference"),
            (vec![(0, rat(1)), (1, rat(1))], "sum"),
        ] {
            let z = RationalChain::from_terms(&two, 1, terms).unwrap();
            let src = class_norm(&two, &z).unwrap().class_norm;
            let pushed = push_chain(&collapse, &one, &z).unwrap();
            let dst = class_norm(&one, &pushed).unwrap().class_norm;
            assert!(dst <= src);
        }
    }

    #[test]
    fn tampered_certificates_are_rejected_with_reasons() {
        let cx = build_polygon_surface(1).unwrap();
        let z = cx.fundamental_cycle().unwrap();
        let cert = class_norm(&cx, &z).unwrap();

        let mut gap = cert.clone();
        gap.dual_cochain = Some(gap.dual_cochain.unwrap().scale(&rat(2)));
        assert_eq!(verify_certificate(&cx, &z, &gap), Err(CertificateIssue::DualityGap));

        let a = RationalChain::delta(&cx, 1, 0).unwrap();
        let cert_a = class_norm(&cx, &a).unwrap();
        let mut off = cert_a.clone();
        // phi = indicator of edge a pairs to 1 with z0 = a but fails to
        // annihilate the boundary of the upper triangle.
        off.dual_cochain =
            Some(RationalCochain::from_values(&cx, 1, [(0, rat(1))]).unwrap());
        assert_eq!(
            verify_certificate(&cx, &a, &off),
            Err(CertificateIssue::NotOnAnnihilator)
        );

        let mut wrong_norm = cert.clone();
        wrong_norm.class_norm = rat(3);
        assert_eq!(
            verify_certificate(&cx, &z, &wrong_norm),
            Err(CertificateIssue::NormMismatch)
        );

        let mut missing = cert.clone();
        missing.dual_cochain = None;
        assert_eq!(
            verify_certificate(&cx, &z, &missing),
            Err(CertificateIssue::DualPresenceWrong)
        );

        let mut bad_witness = cert_a;
        bad_witness.boundary_witness = RationalChain::delta(&cx, 2, 0).unwrap();
        assert_eq!(
            verify_certificate(&cx, &a, &bad_witness),
            Err(CertificateIssue::WitnessGap)
        );
    }

    #[test]
    fn non_cycles_are_rejected() {
        let cx = build_polygon_surface(1).unwrap();
        let c = RationalChain::delta(&cx, 2, 0).unwrap();
        // A single triangle is not a 2-cycle on the torus fan.
        assert!(matches!(class_norm(&cx, &c), Err(Error::NotACycle)));
        assert!(matches!(dual_norm(&cx, &c), Err(Error::NotACycle)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn strong_duality_and_minimality_on_random_torus_one_cycles(
            coeffs in proptest::collection::vec((-4i64..=4, 1i64..=3), 3),
            rep in proptest::collection::vec((-3i64..=3, 1i64..=2), 2),
        ) {
            // Every 1-chain on the one-vertex torus is a cycle.
            let cx = build_polygon_surface(1).unwrap();
            let z0 = RationalChain::from_terms(
                &cx,
                1,
                coeffs.iter().enumerate().map(|(i, &(n, d))| (i, ratio(n, d))),
            )
            .unwrap();
            let cert = class_norm(&cx, &z0).unwrap();
            prop_assert!(verify_certificate(&cx, &z0, &cert).is_ok());

            match dual_norm(&cx, &z0).unwrap() {
                DualNorm::Value(s) => {
                    prop_assert!(cert.class_norm.is_positive());
                    prop_assert_eq!(&cert.class_norm * s, rat(1));
                }
                DualNorm::Infeasible => prop_assert!(cert.class_norm.is_zero()),
            }

            // Any other representative z0 + d(b) is at least as long.
            let b = RationalChain::from_terms(
                &cx,
                2,
                rep.iter().enumerate().map(|(t, &(n, d))| (t, ratio(n, d))),
            )
            .unwrap();
            let other = z0.add(&boundary(&cx, &b).unwrap()).unwrap();
            prop_assert!(l1_norm(&other) >= cert.class_norm);
        }
    }
}
