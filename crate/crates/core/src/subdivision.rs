//! Barycentric subdivision of delta-complexes of dimension at most two, as
//! a chain-level operation.
//!
//! Target vertices are the cells of the source (original vertices, then
//! edge barycenters, then triangle barycenters). Small cells are flags,
//! ordered by descending generating-cell dimension, so a subdivided
//! triangle is [triangle barycenter, edge barycenter, original vertex] and
//! its faces read straight off the face tables:
//!
//!   A(e) = half-edge toward the head of e, faces (head(e), b_e)
//!   B(e) = half-edge toward the tail of e, faces (tail(e), b_e)
//!   C(t,j) = spoke from b_t to the barycenter of edge face j
//!   D(t,p) = spoke from b_t to vertex p of t
//!   T(t,j,s) = flag triangle over edge face j, endpoint s, with faces
//!              (A or B of the face edge, D(t, p), C(t,j))
//!
//! The chain map sends e to A(e) - B(e) and t to the alternating sum
//! (-1)^{j+s} T(t,j,s); the spoke contributions telescope away, so it
//! commutes with the boundary exactly.

use std::collections::BTreeSet;

use num_traits::One;

use crate::chain::RationalChain;
use crate::delta_complex::DeltaComplex;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A subdivision with its chain-level cell images.
#[derive(Debug, Clone)]
pub struct Subdivision {
    source: DeltaComplex,
    target: DeltaComplex,
    /// chain_map[k][cell] = image of the source k-cell in the target.
    chain_map: Vec<Vec<RationalChain>>,
    /// For each target vertex, the (dimension, index) of the source cell
    /// whose barycenter it is; dimension 0 entries are original vertices.
    vertex_origin: Vec<(usize, usize)>,
}

impl Subdivision {
    pub fn source(&self) -> &DeltaComplex {
        &self.source
    }

    pub fn target(&self) -> &DeltaComplex {
        &self.target
    }

    pub fn cell_image(&self, k: usize, cell: usize) -> &RationalChain {
        &self.chain_map[k][cell]
    }

    pub fn vertex_origin(&self, vertex: usize) -> (usize, usize) {
        self.vertex_origin[vertex]
    }

    /// Linear extension of the cell images to arbitrary chains.
    pub fn map_chain(&self, c: &RationalChain) -> Result<RationalChain> {
        if c.complex() != self.source.id() {
            return Err(Error::WrongComplex { expected: self.source.id(), found: c.complex() });
        }
        let mut acc = RationalChain::zero(&self.target, c.dim())?;
        for (cell, q) in c.support() {
            acc = acc.add(&self.chain_map[c.dim()][cell].scale(q))?;
        }
        Ok(acc)
    }
}

/// Builds the barycentric subdivision; dimensions above two are rejected.
pub fn barycentric_subdivide(cx: &DeltaComplex) -> Result<Subdivision> {
    if cx.dim() > 2 {
        return Err(Error::UnsupportedDimension { dim: cx.dim(), max: 2 });
    }
    // Spoke endpoints read vertices out of face tables, which requires the
    // simplicial identities, not just a chain complex.
    cx.check_coherence()?;
    let dim = cx.dim();
    let c0 = cx.count(0);
    let c1 = if dim >= 1 { cx.count(1) } else { 0 };
    let c2 = if dim >= 2 { cx.count(2) } else { 0 };

    let mut vertex_origin: Vec<(usize, usize)> = Vec::with_capacity(c0 + c1 + c2);
    vertex_origin.extend((0..c0).map(|v| (0, v)));
    vertex_origin.extend((0..c1).map(|e| (1, e)));
    vertex_origin.extend((0..c2).map(|t| (2, t)));

    let mut counts = vec![c0 + c1 + c2];
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new()];

    let a = |e: usize| e;
    let b = |e: usize| c1 + e;
    let c_spoke = |t: usize, j: usize| 2 * c1 + 3 * t + j;
    let d_spoke = |t: usize, p: usize| 2 * c1 + 3 * c2 + 3 * t + p;

    if dim >= 1 {
        counts.push(2 * c1 + 6 * c2);
        let mut table = Vec::with_capacity(2 * c1 + 6 * c2);
        for e in 0..c1 {
            table.push(vec![cx.faces_of(1, e)[0], c0 + e]);
        }
        for e in 0..c1 {
            table.push(vec![cx.faces_of(1, e)[1], c0 + e]);
        }
        for t in 0..c2 {
            for j in 0..3 {
                table.push(vec![c0 + cx.faces_of(2, t)[j], c0 + c1 + t]);
            }
        }
        for t in 0..c2 {
            for p in 0..3 {
                table.push(vec![cx.vertex_at(2, t, p)?, c0 + c1 + t]);
            }
        }
        faces.push(table);
    }

    if dim >= 2 {
        counts.push(6 * c2);
        let mut table = Vec::with_capacity(6 * c2);
        for t in 0..c2 {
            for j in 0..3 {
                let e = cx.faces_of(2, t)[j];
                let others: Vec<usize> = (0..3).filter(|&p| p != j).collect();
                let (p_min, p_max) = (others[0], others[1]);
                // s = 0 takes the half-edge toward the head of e, which is
                // the higher vertex position; s = 1 the tail.
                table.push(vec![a(e), d_spoke(t, p_max), c_spoke(t, j)]);
                table.push(vec![b(e), d_spoke(t, p_min), c_spoke(t, j)]);
            }
        }
        faces.push(table);
    }

    let target = DeltaComplex::new(counts, faces)?;

    let one = Rational::one();
    let mut chain_map: Vec<Vec<RationalChain>> = Vec::with_capacity(dim + 1);
    chain_map.push(
        (0..c0)
            .map(|v| RationalChain::from_terms(&target, 0, [(v, one.clone())]))
            .collect::<Result<_>>()?,
    );
    if dim >= 1 {
        chain_map.push(
            (0..c1)
                .map(|e| {
                    RationalChain::from_terms(
                        &target,
                        1,
                        [(a(e), one.clone()), (b(e), -one.clone())],
                    )
                })
                .collect::<Result<_>>()?,
        );
    }
    if dim >= 2 {
        chain_map.push(
            (0..c2)
                .map(|t| {
                    let terms = (0..3).flat_map(|j| {
                        (0..2).map(move |s| {
                            let sign = if (j + s) % 2 == 0 { 1 } else { -1 };
                            (6 * t + 2 * j + s, Rational::from_integer(sign.into()))
                        })
                    });
                    RationalChain::from_terms(&target, 2, terms)
                })
                .collect::<Result<_>>()?,
        );
    }

    Ok(Subdivision { source: cx.clone(), target, chain_map, vertex_origin })
}

/// True iff the complex is a simplicial complex in the strict sense: every
/// cell has pairwise-distinct vertices and no two cells of a dimension
/// share a vertex set. Incoherent face tables are never simplicial.
pub fn is_simplicial(cx: &DeltaComplex) -> bool {
    if cx.check_coherence().is_err() {
        return false;
    }
    for k in 1..=cx.dim() {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for cell in 0..cx.count(k) {
            let mut vs: Vec<usize> = (0..=k)
                .map(|p| cx.vertex_at(k, cell, p).expect("positions in range"))
                .collect();
            vs.sort_unstable();
            if vs.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
            if !seen.insert(vs) {
                return false;
            }
        }
    }
    true
}
