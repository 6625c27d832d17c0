//! Cyclic covering spaces: d-sheeted covers of a delta-complex built from
//! Z/d-valued edge labels satisfying the cocycle condition, with lift
//! tables, deck action, transfer, and the covering-multiplicativity check
//! for class norms.
//!
//! Cover cells are pairs (sigma, m) indexed as sigma * d + m. Face j of
//! (sigma, m) is (face_j(sigma), m + w_j) where the sheet shift w_j is 0
//! whenever face j contains vertex 0 (j >= 1), and w_0 is the label of the
//! edge of sigma from vertex 0 to vertex 1. Coherence of these shifts is
//! exactly the cocycle condition on 2-cells.

use num_traits::One;

use crate::chain::{push_chain, RationalChain, SimplicialMap};
use crate::delta_complex::DeltaComplex;
use crate::error::{ComplexId, Error, Result};
use crate::rational::Rational;
use crate::seminorm::class_norm;

/// Z/d-valued edge labeling satisfying the cocycle condition on every
/// 2-cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCocycle {
    complex: ComplexId,
    d: u64,
    labels: Vec<u64>,
}

impl EdgeCocycle {
    /// Validates shape and the cocycle condition; labels are reduced
    /// modulo d.
    pub fn new(cx: &DeltaComplex, d: u64, labels: Vec<u64>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("sheet count must be at least 1".into()));
        }
        let n1 = if cx.dim() >= 1 { cx.count(1) } else { 0 };
        if labels.len() != n1 {
            return Err(Error::FaceTableShape { dim: 1, expected: n1, found: labels.len() });
        }
        let labels: Vec<u64> = labels.into_iter().map(|v| v % d).collect();
        if cx.dim() >= 2 {
            for t in 0..cx.count(2) {
                let f = cx.faces_of(2, t);
                if (labels[f[0]] + labels[f[2]]) % d != labels[f[1]] {
                    return Err(Error::NotACocycle { cell: t });
                }
            }
        }
        Ok(EdgeCocycle { complex: cx.id(), d, labels })
    }

    /// All-zero labels: the d-fold disjoint cover.
    pub fn trivial(cx: &DeltaComplex, d: u64) -> Result<Self> {
        let n1 = if cx.dim() >= 1 { cx.count(1) } else { 0 };
        Self::new(cx, d, vec![0; n1])
    }

    pub fn complex(&self) -> ComplexId {
        self.complex
    }

    pub fn sheets(&self) -> u64 {
        self.d
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }
}

/// True iff the cover induced by the cocycle is connected, decided on the
/// 1-skeleton without building the total complex.
pub fn cover_is_connected(cx: &DeltaComplex, cocycle: &EdgeCocycle) -> Result<bool> {
    if cocycle.complex != cx.id() {
        return Err(Error::WrongComplex { expected: cx.id(), found: cocycle.complex });
    }
    let d = cocycle.d as usize;
    let nodes = cx.count(0) * d;
    let mut parent: Vec<usize> = (0..nodes).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut [usize], a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    if cx.dim() >= 1 {
        for e in 0..cx.count(1) {
            let f = cx.faces_of(1, e);
            let (head, tail) = (f[0], f[1]);
            let w = cocycle.labels[e] as usize;
            for m in 0..d {
                union(&mut parent, tail * d + m, head * d + (m + w) % d);
            }
        }
    }
    let root = find(&mut parent, 0);
    Ok((1..nodes).all(|x| find(&mut parent, x) == root))
}

/// Lexicographically smallest cocycle whose cover is connected, found by
/// depth-first search over edge labels in index order with ascending
/// values, pruning as soon as a fully labeled 2-cell violates the cocycle
/// condition.
pub fn auto_cocycle(cx: &DeltaComplex, d: u64) -> Result<EdgeCocycle> {
    if d == 0 {
        return Err(Error::InvalidParameter("sheet count must be at least 1".into()));
    }
    let n1 = if cx.dim() >= 1 { cx.count(1) } else { 0 };
    // triangles_by_last_edge[e] = 2-cells whose highest face index is e.
    let mut by_last: Vec<Vec<usize>> = vec![Vec::new(); n1];
    if cx.dim() >= 2 {
        for t in 0..cx.count(2) {
            let f = cx.faces_of(2, t);
            let last = *f.iter().max().expect("triangle has faces");
            by_last[last].push(t);
        }
    }
    let mut labels: Vec<u64> = Vec::with_capacity(n1);
    if dfs(cx, d, &by_last, &mut labels)? {
        return EdgeCocycle::new(cx, d, labels);
    }
    return Err(Error::NoSurjectiveCocycle { modulus: d });

    fn dfs(
        cx: &DeltaComplex,
        d: u64,
        by_last: &[Vec<usize>],
        labels: &mut Vec<u64>,
    ) -> Result<bool> {
        let e = labels.len();
        if e == by_last.len() {
            let candidate = EdgeCocycle {
                complex: cx.id(),
                d,
                labels: labels.clone(),
            };
            return cover_is_connected(cx, &candidate);
        }
        for v in 0..d {
            labels.push(v);
            let consistent = by_last[e].iter().all(|&t| {
                let f = cx.faces_of(2, t);
                (labels[f[0]] + labels[f[2]]) % d == labels[f[1]]
            });
            if consistent && dfs(cx, d, by_last, labels)? {
                return Ok(true);
            }
            labels.pop();
        }
        Ok(false)
    }
}

/// A d-sheeted cyclic cover with its projection and deck generator.
#[derive(Debug, Clone)]
pub struct CoveringMap {
    base: DeltaComplex,
    total: DeltaComplex,
    cocycle: EdgeCocycle,
    projection: SimplicialMap,
    deck: SimplicialMap,
}

impl CoveringMap {
    pub fn base(&self) -> &DeltaComplex {
        &self.base
    }

    pub fn total(&self) -> &DeltaComplex {
        &self.total
    }

    pub fn sheets(&self) -> u64 {
        self.cocycle.d
    }

    pub fn cocycle(&self) -> &EdgeCocycle {
        &self.cocycle
    }

    pub fn projection(&self) -> &SimplicialMap {
        &self.projection
    }

    /// Generator of the deck action, (sigma, m) -> (sigma, m + 1).
    pub fn deck(&self) -> &SimplicialMap {
        &self.deck
    }

    /// The d lifts of a base cell, in ascending sheet order.
    pub fn lifts(&self, k: usize, cell: usize) -> Vec<usize> {
        debug_assert!(k <= self.base.dim() && cell < self.base.count(k));
        let d = self.cocycle.d as usize;
        (0..d).map(|m| cell * d + m).collect()
    }

    pub fn lift(&self, k: usize, cell: usize, sheet: u64) -> usize {
        debug_assert!(k <= self.base.dim() && cell < self.base.count(k));
        cell * self.cocycle.d as usize + (sheet % self.cocycle.d) as usize
    }
}

/// Builds the cyclic cover determined by the cocycle.
pub fn build_cyclic_cover(cx: &DeltaComplex, cocycle: &EdgeCocycle) -> Result<CoveringMap> {
    if cocycle.complex != cx.id() {
        return Err(Error::WrongComplex { expected: cx.id(), found: cocycle.complex });
    }
    // Sheet shifts read edge labels through vertex positions, which is
    // only well-defined on coherent face tables.
    cx.check_coherence()?;
    let d = cocycle.d as usize;
    let dim = cx.dim();
    let mut counts = Vec::with_capacity(dim + 1);
    let mut faces = Vec::with_capacity(dim + 1);
    counts.push(cx.count(0) * d);
    faces.push(Vec::new());
    for k in 1..=dim {
        counts.push(cx.count(k) * d);
        let mut table = Vec::with_capacity(cx.count(k) * d);
        for cell in 0..cx.count(k) {
            let base_faces = cx.faces_of(k, cell);
            let w0 = cocycle.labels[cx.edge_at(k, cell, 0, 1)?] as usize;
            for m in 0..d {
                let mut row = Vec::with_capacity(k + 1);
                row.push(base_faces[0] * d + (m + w0) % d);
                for &f in &base_faces[1..] {
                    row.push(f * d + m);
                }
                table.push(row);
            }
        }
        faces.push(table);
    }
    let total = DeltaComplex::new(counts, faces)?;

    let projection_map: Vec<Vec<usize>> =
        (0..=dim).map(|k| (0..cx.count(k) * d).map(|i| i / d).collect()).collect();
    let projection = SimplicialMap::new(&total, cx, projection_map)?;
    let deck_map: Vec<Vec<usize>> = (0..=dim)
        .map(|k| {
            (0..cx.count(k))
                .flat_map(|cell| (0..d).map(move |m| cell * d + (m + 1) % d))
                .collect()
        })
        .collect();
    let deck = SimplicialMap::new(&total, &total, deck_map)?;

    Ok(CoveringMap { base: cx.clone(), total, cocycle: cocycle.clone(), projection, deck })
}

/// Transfer: sums all d lifts of each simplex. A chain map that multiplies
/// the l1 norm by exactly d and carries the base fundamental cycle to the
/// total one.
pub fn transfer(cm: &CoveringMap, a: &RationalChain) -> Result<RationalChain> {
    if a.complex() != cm.base.id() {
        return Err(Error::WrongComplex { expected: cm.base.id(), found: a.complex() });
    }
    let d = cm.cocycle.d as usize;
    let terms = a
        .support()
        .flat_map(|(cell, q)| (0..d).map(move |m| (cell * d + m, q.clone())));
    RationalChain::from_terms(&cm.total, a.dim(), terms)
}

/// Pushes a chain on the total space down along the projection.
pub fn project_chain(cm: &CoveringMap, c: &RationalChain) -> Result<RationalChain> {
    push_chain(&cm.projection, &cm.base, c)
}

/// Computes the fundamental-class norms of base and total space and checks
/// covering multiplicativity, r_total = d * r_base, exactly.
pub fn covering_multiplicativity_check(cm: &CoveringMap) -> Result<(Rational, Rational)> {
    let base_fund = cm.base.fundamental_cycle()?;
    let total_fund = cm.total.fundamental_cycle()?;
    let r_base = class_norm(&cm.base, &base_fund)?.class_norm;
    let r_total = class_norm(&cm.total, &total_fund)?.class_norm;
    let d = Rational::from_integer(cm.cocycle.d.into());
    if r_total != d * &r_base {
        return Err(Error::Inconsistent);
    }
    Ok((r_base, r_total))
}

/// Degree of a simplicial map between complexes with rank-1 top homology:
/// the coefficient of the target fundamental class in the pushed source
/// fundamental class.
pub fn degree(m: &SimplicialMap, src: &DeltaComplex, tgt: &DeltaComplex) -> Result<Rational> {
    let fund_src = src.fundamental_cycle()?;
    let fund_tgt = tgt.fundamental_cycle()?;
    let pushed = push_chain(m, tgt, &fund_src)?;
    let (lambda, _) = crate::chain::homology_class_decompose(tgt, &pushed, &[fund_tgt])?;
    debug_assert_eq!(lambda.len(), 1);
    Ok(lambda.into_iter().next().unwrap_or_else(|| Rational::one()))
}
