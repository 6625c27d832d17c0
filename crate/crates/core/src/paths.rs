//! Closed edge paths on graphs, rational combinations of them, and norm
//! bounds for the classes they represent.
//!
//! A path is a closed walk in the 1-skeleton, stored as (edge, forward)
//! steps and kept in a canonical rotation so that re-entering the same
//! loop at a different point yields an equal value. A path combination
//! represents a 1-cycle: each edge receives the net signed traversal
//! count, weighted by the coefficients.
//!
//! Norm bounds come in two exact flavors. On the standard circle the
//! optimum over combinations of paths of length at most L has the closed
//! form |w| / floor(L/n). On a general graph with few edges the search
//! enumerates the net vectors of all closed walks up to the length cap and
//! minimizes total |coefficient| by linear programming; anything larger is
//! rejected rather than approximated.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::{One, Signed, Zero};

use crate::chain::RationalChain;
use crate::delta_complex::{is_standard_circle, DeltaComplex};
use crate::error::{ComplexId, Error, Result};
use crate::lp::{solve, LpOutcome, StandardForm};
use crate::rational::Rational;

/// Largest graph the exhaustive bound search accepts.
pub const MAX_SEARCH_EDGES: usize = 8;
/// Largest walk length the exhaustive bound search accepts.
pub const MAX_SEARCH_LEN: usize = 10;

/// A closed walk in a 1-dimensional complex, canonicalized up to rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgePath {
    steps: Vec<(usize, bool)>,
}

fn step_start(cx: &DeltaComplex, step: (usize, bool)) -> usize {
    let f = cx.faces_of(1, step.0);
    if step.1 {
        f[1]
    } else {
        f[0]
    }
}

fn step_end(cx: &DeltaComplex, step: (usize, bool)) -> usize {
    let f = cx.faces_of(1, step.0);
    if step.1 {
        f[0]
    } else {
        f[1]
    }
}

fn validate_steps(cx: &DeltaComplex, steps: &[(usize, bool)]) -> Result<()> {
    if cx.dim() != 1 {
        return Err(Error::UnsupportedDimension { dim: cx.dim(), max: 1 });
    }
    if steps.is_empty() {
        return Err(Error::InvalidParameter("a closed path needs at least one step".into()));
    }
    for &(e, _) in steps {
        if e >= cx.count(1) {
            return Err(Error::CellIndexOutOfRange { dim: 1, cell: e, count: cx.count(1) });
        }
    }
    for i in 0..steps.len() {
        let next = steps[(i + 1) % steps.len()];
        if step_end(cx, steps[i]) != step_start(cx, next) {
            return Err(Error::InvalidParameter(format!(
                "path is not closed: step {i} ends at vertex {} but step {} starts at {}",
                step_end(cx, steps[i]),
                (i + 1) % steps.len(),
                step_start(cx, next)
            )));
        }
    }
    Ok(())
}

fn canonical_rotation(steps: Vec<(usize, bool)>) -> Vec<(usize, bool)> {
    let n = steps.len();
    let mut best = 0;
    for r in 1..n {
        for k in 0..n {
            let a = steps[(r + k) % n];
            let b = steps[(best + k) % n];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    best = r;
                    break;
                }
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&steps[best..]);
    out.extend_from_slice(&steps[..best]);
    out
}

impl EdgePath {
    pub fn new(cx: &DeltaComplex, steps: Vec<(usize, bool)>) -> Result<Self> {
        validate_steps(cx, &steps)?;
        Ok(EdgePath { steps: canonical_rotation(steps) })
    }

    pub fn steps(&self) -> &[(usize, bool)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The same loop traversed backwards.
    pub fn reversed(&self) -> Self {
        let steps: Vec<(usize, bool)> =
            self.steps.iter().rev().map(|&(e, fwd)| (e, !fwd)).collect();
        EdgePath { steps: canonical_rotation(steps) }
    }

    fn net_chain(&self, cx: &DeltaComplex) -> Result<RationalChain> {
        let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
        for &(e, fwd) in &self.steps {
            *counts.entry(e).or_insert(0) += if fwd { 1 } else { -1 };
        }
        RationalChain::from_terms(
            cx,
            1,
            counts.into_iter().map(|(e, n)| (e, Rational::from_integer(n.into()))),
        )
    }
}

/// A rational combination of closed paths on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathChain {
    complex: ComplexId,
    terms: BTreeMap<EdgePath, Rational>,
}

impl PathChain {
    pub fn new<I>(cx: &DeltaComplex, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (EdgePath, Rational)>,
    {
        let mut merged: BTreeMap<EdgePath, Rational> = BTreeMap::new();
        for (path, q) in terms {
            validate_steps(cx, path.steps())?;
            let entry = merged.entry(path).or_insert_with(Rational::zero);
            *entry += q;
        }
        merged.retain(|_, q| !q.is_zero());
        Ok(PathChain { complex: cx.id(), terms: merged })
    }

    pub fn complex(&self) -> ComplexId {
        self.complex
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EdgePath, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            for (p, c) in &self.terms {
                terms.insert(p.clone(), c * q);
            }
        }
        PathChain { complex: self.complex, terms }
    }

    /// Total combined length, |coefficient|-weighted step count.
    pub fn weighted_length(&self) -> Rational {
        self.terms
            .iter()
            .map(|(p, q)| q.abs() * Rational::from_integer(p.len().into()))
            .sum()
    }
}

fn expect_complex(cx: &DeltaComplex, p: &PathChain) -> Result<()> {
    if p.complex != cx.id() {
        return Err(Error::WrongComplex { expected: cx.id(), found: p.complex });
    }
    Ok(())
}

/// The 1-cycle a path combination represents: net signed traversal per
/// edge, weighted by coefficients.
pub fn path_class(cx: &DeltaComplex, p: &PathChain) -> Result<RationalChain> {
    expect_complex(cx, p)?;
    let mut acc = RationalChain::zero(cx, 1)?;
    for (path, q) in &p.terms {
        acc = acc.add(&path.net_chain(cx)?.scale(q))?;
    }
    Ok(acc)
}

/// The winding number of a path combination on the standard circle. Closed
/// walks traverse every circle edge the same net number of times, so the
/// class is determined by one coordinate.
pub fn circle_winding(cx: &DeltaComplex, p: &PathChain) -> Result<Rational> {
    if !is_standard_circle(cx) {
        return Err(Error::NotACircle);
    }
    let class = path_class(cx, p)?;
    let w = class.coefficient(0);
    debug_assert!((0..cx.count(1)).all(|e| class.coefficient(e) == w));
    Ok(w)
}

/// The length d*n path wrapping the standard n-circle d times.
pub fn wrap_path(cx: &DeltaComplex, d: usize) -> Result<PathChain> {
    if !is_standard_circle(cx) {
        return Err(Error::NotACircle);
    }
    if d == 0 {
        return Err(Error::InvalidParameter("wrapping degree must be positive".into()));
    }
    let n = cx.count(1);
    let steps: Vec<(usize, bool)> = (0..d * n).map(|i| (i % n, true)).collect();
    PathChain::new(cx, [(EdgePath::new(cx, steps)?, Rational::one())])
}

/// Least total |coefficient| of a path combination of winding `w` on the
/// standard n-circle using paths of length at most `max_len`: the longest
/// usable path wraps floor(max_len/n) times, and splitting mass across
/// shorter paths never helps, so the optimum is |w| / floor(max_len/n).
pub fn path_norm_bound(cx: &DeltaComplex, winding: &Rational, max_len: usize) -> Result<Rational> {
    if !is_standard_circle(cx) {
        return Err(Error::NotACircle);
    }
    let n = cx.count(1);
    if max_len < n {
        return Err(Error::LengthTooShort { needed: n, got: max_len });
    }
    if winding.is_zero() {
        return Ok(Rational::zero());
    }
    Ok(winding.abs() / Rational::from_integer((max_len / n).into()))
}

/// Exhaustive version of the bound on a general graph: enumerates the net
/// traversal vectors of every closed walk of length at most `max_len`,
/// then minimizes total |coefficient| subject to hitting `target` exactly.
/// Graphs beyond MAX_SEARCH_EDGES edges or caps beyond MAX_SEARCH_LEN are
/// rejected; targets outside the span of closed walks report NotInSpan.
pub fn path_norm_bound_search(
    cx: &DeltaComplex,
    target: &RationalChain,
    max_len: usize,
) -> Result<Rational> {
    if cx.dim() != 1 {
        return Err(Error::UnsupportedDimension { dim: cx.dim(), max: 1 });
    }
    if target.complex() != cx.id() {
        return Err(Error::WrongComplex { expected: cx.id(), found: target.complex() });
    }
    if target.dim() != 1 {
        return Err(Error::MismatchedComplexOrDimension { left_dim: 1, right_dim: target.dim() });
    }
    let edges = cx.count(1);
    if edges > MAX_SEARCH_EDGES || max_len > MAX_SEARCH_LEN {
        return Err(Error::SearchTooLarge {
            max_edges: MAX_SEARCH_EDGES,
            max_len: MAX_SEARCH_LEN,
            edges,
            len: max_len,
        });
    }
    if target.is_zero() {
        return Ok(Rational::zero());
    }

    // Directed adjacency: (other endpoint, edge, net increment).
    let mut out: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); cx.count(0)];
    for e in 0..edges {
        let f = cx.faces_of(1, e);
        out[f[1]].push((f[0], e, 1));
        out[f[0]].push((f[1], e, -1));
    }

    // Breadth-first over (position, net-so-far) states from each start;
    // a revisit of the start records the walk's net vector. Deduplicating
    // states keeps the frontier polynomial in the caps.
    let mut nets: BTreeSet<Vec<i64>> = BTreeSet::new();
    for start in 0..cx.count(0) {
        let mut frontier: HashSet<(usize, Vec<i64>)> = HashSet::new();
        frontier.insert((start, vec![0; edges]));
        for _ in 0..max_len {
            let mut next: HashSet<(usize, Vec<i64>)> = HashSet::new();
            for (v, net) in &frontier {
                for &(to, e, inc) in &out[*v] {
                    let mut nn = net.clone();
                    nn[e] += inc;
                    if to == start && nn.iter().any(|&x| x != 0) {
                        nets.insert(nn.clone());
                    }
                    next.insert((to, nn));
                }
            }
            frontier = next;
        }
    }

    // min sum |r| subject to sum r_k N_k = target, split r = p - q >= 0.
    let cols: Vec<&Vec<i64>> = nets.iter().collect();
    let mut constraints = vec![vec![Rational::zero(); 2 * cols.len()]; edges];
    for (k, net) in cols.iter().enumerate() {
        for (e, &c) in net.iter().enumerate() {
            let q = Rational::from_integer(c.into());
            constraints[e][2 * k] = q.clone();
            constraints[e][2 * k + 1] = -q;
        }
    }
    let lp = StandardForm {
        constraints,
        rhs: target.to_dense(cx)?,
        objective: vec![Rational::one(); 2 * cols.len()],
    };
    match solve(&lp)? {
        LpOutcome::Optimal(sol) => Ok(sol.value),
        LpOutcome::Infeasible => Err(Error::NotInSpan),
        LpOutcome::Unbounded => {
            Err(Error::LpFailure("norm search reported unbounded".into()))
        }
    }
}
