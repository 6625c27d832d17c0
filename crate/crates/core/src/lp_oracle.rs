//! Independent cross-check for `class_norm`: exhaustive rational vertex
//! enumeration of the representative polyhedron, with no simplex code in
//! common with the LP path.
//!
//! The function b -> |z0 + D b|_1 is piecewise-linear, convex, and proper
//! on the column space of D (restricting D to a column basis makes it
//! coercive), so its minimum is attained at a point where the active
//! coordinates (z0 + D b)_i = 0 pin b down: some support set S of size
//! rank(D) with a solvable linear system. Enumerating all size-rank(D)
//! row subsets therefore visits an optimizer. Intended for complexes with
//! at most a dozen cells per dimension; cost grows binomially.

use num_traits::Zero;

use crate::chain::{boundary, l1_norm, RationalChain};
use crate::delta_complex::DeltaComplex;
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rational::{abs, Rational};

/// Smallest l1 norm over the homology class of `z0`, by enumeration.
pub fn class_norm_by_enumeration(cx: &DeltaComplex, z0: &RationalChain) -> Result<Rational> {
    if z0.complex() != cx.id() {
        return Err(Error::WrongComplex { expected: cx.id(), found: z0.complex() });
    }
    if z0.dim() >= 1 && !boundary(cx, z0)?.is_zero() {
        return Err(Error::NotACycle);
    }
    let k = z0.dim();
    let n_k = cx.count(k);
    let z0_dense = z0.to_dense(cx)?;

    // Dense boundary block restricted to a column basis of the image.
    let columns: Vec<Vec<Rational>> = if k < cx.dim() {
        let d = cx.boundary_matrix(k + 1)?;
        let mut dense = QMatrix::zero(n_k, cx.count(k + 1));
        for t in 0..cx.count(k + 1) {
            for &(i, v) in d.column(t) {
                dense.set(i, t, Rational::from_integer(v.into()));
            }
        }
        dense
            .column_basis()
            .into_iter()
            .map(|t| (0..n_k).map(|i| dense.get(i, t).clone()).collect())
            .collect()
    } else {
        Vec::new()
    };
    let p = columns.len();
    if p == 0 {
        return Ok(l1_norm(z0));
    }

    let mut best: Option<Rational> = None;
    let mut subset: Vec<usize> = (0..p).collect();
    loop {
        // Solve (z0 + D w)|_S = 0 for w over the basis columns.
        let mut system = QMatrix::zero(p, p);
        for (row, &i) in subset.iter().enumerate() {
            for (col, column) in columns.iter().enumerate() {
                system.set(row, col, column[i].clone());
            }
        }
        let rhs: Vec<Rational> = subset.iter().map(|&i| -z0_dense[i].clone()).collect();
        if let Some(w) = system.solve(&rhs) {
            let mut value = Rational::zero();
            for i in 0..n_k {
                let mut coord = z0_dense[i].clone();
                for (col, column) in columns.iter().enumerate() {
                    if !column[i].is_zero() {
                        coord += &column[i] * &w[col];
                    }
                }
                value += abs(&coord);
            }
            if best.as_ref().is_none_or(|b| value < *b) {
                best = Some(value);
            }
        }
        if !advance(&mut subset, n_k) {
            break;
        }
    }
    best.ok_or_else(|| {
        Error::LpFailure("enumeration found no solvable active set".into())
    })
}

/// Advances a sorted combination of fixed size within 0..limit; false when
/// exhausted.
fn advance(subset: &mut [usize], limit: usize) -> bool {
    let p = subset.len();
    let mut slot = p;
    while slot > 0 {
        slot -= 1;
        if subset[slot] < limit - (p - slot) {
            subset[slot] += 1;
            for j in slot + 1..p {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
