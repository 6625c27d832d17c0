//! Exact-rational chains and cochains on a delta-complex, with the
//! alternating-sign boundary, the `(-1)^{k+1}`-twisted coboundary, the l1
//! and sup norms, the Kronecker pairing, and pushforward along simplicial
//! maps.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::delta_complex::DeltaComplex;
use crate::error::{ComplexId, Error, Result};
use crate::linalg::QMatrix;
use crate::rational::{abs, Rational};

/// Sparse k-chain; zero coefficients are never stored, so structural
/// equality is chain equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalChain {
    complex: ComplexId,
    dim: usize,
    coeffs: BTreeMap<usize, Rational>,
}

/// Sparse k-cochain (absent cells evaluate to 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCochain {
    complex: ComplexId,
    dim: usize,
    values: BTreeMap<usize, Rational>,
}

impl RationalChain {
    pub fn zero(cx: &DeltaComplex, dim: usize) -> Result<Self> {
        check_dim(cx, dim)?;
        Ok(RationalChain { complex: cx.id(), dim, coeffs: BTreeMap::new() })
    }

    pub fn from_terms<I>(cx: &DeltaComplex, dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        check_dim(cx, dim)?;
        let mut coeffs: BTreeMap<usize, Rational> = BTreeMap::new();
        for (cell, q) in terms {
            if cell >= cx.count(dim) {
                return Err(Error::CellIndexOutOfRange { dim, cell, count: cx.count(dim) });
            }
            let entry = coeffs.entry(cell).or_insert_with(Rational::zero);
            *entry += q;
        }
        coeffs.retain(|_, q| !q.is_zero());
        Ok(RationalChain { complex: cx.id(), dim, coeffs })
    }

    /// Unit chain on a single cell.
    pub fn delta(cx: &DeltaComplex, dim: usize, cell: usize) -> Result<Self> {
        Self::from_terms(cx, dim, [(cell, Rational::from_integer(1.into()))])
    }

    pub fn complex(&self) -> ComplexId {
        self.complex
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coefficient(&self, cell: usize) -> Rational {
        self.coeffs.get(&cell).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&c, q)| (c, q))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.complex != other.complex || self.dim != other.dim {
            return Err(Error::MismatchedComplexOrDimension {
                left_dim: self.dim,
                right_dim: other.dim,
            });
        }
        let mut coeffs = self.coeffs.clone();
        for (&cell, q) in &other.coeffs {
            let entry = coeffs.entry(cell).or_insert_with(Rational::zero);
            *entry += q;
        }
        coeffs.retain(|_, q| !q.is_zero());
        Ok(RationalChain { complex: self.complex, dim: self.dim, coeffs })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return RationalChain { complex: self.complex, dim: self.dim, coeffs: BTreeMap::new() };
        }
        let coeffs = self.coeffs.iter().map(|(&c, v)| (c, v * q)).collect();
        RationalChain { complex: self.complex, dim: self.dim, coeffs }
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rational::from_integer((-1).into()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Dense coefficient vector of length `cx.count(dim)`.
    pub fn to_dense(&self, cx: &DeltaComplex) -> Result<Vec<Rational>> {
        expect_complex(cx, self.complex)?;
        let mut v = vec![Rational::zero(); cx.count(self.dim)];
        for (&cell, q) in &self.coeffs {
            v[cell] = q.clone();
        }
        Ok(v)
    }
}

impl RationalCochain {
    pub fn zero(cx: &DeltaComplex, dim: usize) -> Result<Self> {
        check_dim(cx, dim)?;
        Ok(RationalCochain { complex: cx.id(), dim, values: BTreeMap::new() })
    }

    pub fn from_values<I>(cx: &DeltaComplex, dim: usize, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        check_dim(cx, dim)?;
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (cell, q) in values {
            if cell >= cx.count(dim) {
                return Err(Error::CellIndexOutOfRange { dim, cell, count: cx.count(dim) });
            }
            map.insert(cell, q);
        }
        map.retain(|_, q| !q.is_zero());
        Ok(RationalCochain { complex: cx.id(), dim, values: map })
    }

    pub fn complex(&self) -> ComplexId {
        self.complex
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn value(&self, cell: usize) -> Rational {
        self.values.get(&cell).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.values.iter().map(|(&c, q)| (c, q))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return RationalCochain { complex: self.complex, dim: self.dim, values: BTreeMap::new() };
        }
        let values = self.values.iter().map(|(&c, v)| (c, v * q)).collect();
        RationalCochain { complex: self.complex, dim: self.dim, values }
    }
}

fn check_dim(cx: &DeltaComplex, dim: usize) -> Result<()> {
    if dim > cx.dim() {
        return Err(Error::DimensionOutOfRange { dim, top: cx.dim() });
    }
    Ok(())
}

fn expect_complex(cx: &DeltaComplex, id: ComplexId) -> Result<()> {
    if cx.id() != id {
        return Err(Error::WrongComplex { expected: cx.id(), found: id });
    }
    Ok(())
}

/// Alternating face sum, extended linearly: the boundary of a k-chain.
pub fn boundary(cx: &DeltaComplex, c: &RationalChain) -> Result<RationalChain> {
    expect_complex(cx, c.complex)?;
    if c.dim == 0 {
        return Err(Error::DimensionOutOfRange { dim: 0, top: cx.dim() });
    }
    let k = c.dim;
    let mut terms: Vec<(usize, Rational)> = Vec::new();
    for (cell, q) in c.support() {
        for (j, &f) in cx.faces_of(k, cell).iter().enumerate() {
            let signed = if j % 2 == 0 { q.clone() } else { -q.clone() };
            terms.push((f, signed));
        }
    }
    RationalChain::from_terms(cx, k - 1, terms)
}

/// Coboundary with the sign twist: (delta f)(t) = (-1)^{k+1} * f(boundary t).
pub fn coboundary(cx: &DeltaComplex, f: &RationalCochain) -> Result<RationalCochain> {
    expect_complex(cx, f.complex)?;
    let k = f.dim;
    if k + 1 > cx.dim() {
        return Err(Error::DimensionOutOfRange { dim: k + 1, top: cx.dim() });
    }
    let twist: Rational = if (k + 1) % 2 == 0 {
        Rational::from_integer(1.into())
    } else {
        Rational::from_integer((-1).into())
    };
    let values = crate::par::map_range(cx.count(k + 1), |t| {
        let mut acc = Rational::zero();
        for (j, &face) in cx.faces_of(k + 1, t).iter().enumerate() {
            if let Some(v) = f.values.get(&face) {
                if j % 2 == 0 {
                    acc += v;
                } else {
                    acc -= v;
                }
            }
        }
        (t, &twist * acc)
    });
    RationalCochain::from_values(cx, k + 1, values)
}

/// Sum of absolute values of the coefficients.
pub fn l1_norm(c: &RationalChain) -> Rational {
    c.coeffs.values().map(abs).sum()
}

/// Maximum absolute value over the (finite) cell set; 0 for empty support.
pub fn sup_norm(f: &RationalCochain) -> Rational {
    f.values.values().map(abs).max().unwrap_or_else(Rational::zero)
}

/// Kronecker pairing of a cochain with a chain of the same dimension.
pub fn kronecker(f: &RationalCochain, c: &RationalChain) -> Result<Rational> {
    if f.complex != c.complex || f.dim != c.dim {
        return Err(Error::MismatchedComplexOrDimension { left_dim: f.dim, right_dim: c.dim });
    }
    let mut acc = Rational::zero();
    for (cell, q) in c.support() {
        if let Some(v) = f.values.get(&cell) {
            acc += v * q;
        }
    }
    Ok(acc)
}

/// Dimension-wise cell map commuting with the face tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    source: ComplexId,
    target: ComplexId,
    source_dim: usize,
    cell_map: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn new(src: &DeltaComplex, tgt: &DeltaComplex, cell_map: Vec<Vec<usize>>) -> Result<Self> {
        if cell_map.len() != src.dim() + 1 {
            return Err(Error::FaceTableShape {
                dim: cell_map.len(),
                expected: src.dim() + 1,
                found: cell_map.len(),
            });
        }
        for (k, layer) in cell_map.iter().enumerate() {
            if layer.len() != src.count(k) {
                return Err(Error::FaceTableShape {
                    dim: k,
                    expected: src.count(k),
                    found: layer.len(),
                });
            }
            if k > tgt.dim() {
                return Err(Error::DimensionOutOfRange { dim: k, top: tgt.dim() });
            }
            for (cell, &image) in layer.iter().enumerate() {
                if image >= tgt.count(k) {
                    return Err(Error::CellIndexOutOfRange { dim: k, cell: image, count: tgt.count(k) });
                }
                if k >= 1 {
                    for (slot, &f) in src.faces_of(k, cell).iter().enumerate() {
                        if tgt.faces_of(k, image)[slot] != cell_map[k - 1][f] {
                            return Err(Error::NotASimplicialMap { dim: k, cell, slot });
                        }
                    }
                }
            }
        }
        Ok(SimplicialMap { source: src.id(), target: tgt.id(), source_dim: src.dim(), cell_map })
    }

    pub fn identity(cx: &DeltaComplex) -> Self {
        let cell_map = (0..=cx.dim()).map(|k| (0..cx.count(k)).collect()).collect();
        SimplicialMap { source: cx.id(), target: cx.id(), source_dim: cx.dim(), cell_map }
    }

    pub fn source(&self) -> ComplexId {
        self.source
    }

    pub fn target(&self) -> ComplexId {
        self.target
    }

    pub fn apply(&self, k: usize, cell: usize) -> usize {
        self.cell_map[k][cell]
    }
}

/// Pushforward of a chain along a simplicial map (no sign bookkeeping: the
/// map preserves vertex order by construction). Cancellation only shrinks
/// the l1 norm.
pub fn push_chain(m: &SimplicialMap, tgt: &DeltaComplex, c: &RationalChain) -> Result<RationalChain> {
    if c.complex != m.source {
        return Err(Error::WrongComplex { expected: m.source, found: c.complex });
    }
    expect_complex(tgt, m.target)?;
    let terms = c.support().map(|(cell, q)| (m.cell_map[c.dim][cell], q.clone()));
    RationalChain::from_terms(tgt, c.dim, terms)
}

/// Pullback of a cochain along a simplicial map: (m* f)(t) = f(m(t)).
pub fn pull_cochain(m: &SimplicialMap, src: &DeltaComplex, f: &RationalCochain) -> Result<RationalCochain> {
    if f.complex != m.target {
        return Err(Error::WrongComplex { expected: m.target, found: f.complex });
    }
    expect_complex(src, m.source)?;
    let k = f.dim;
    if k > m.source_dim {
        return Err(Error::DimensionOutOfRange { dim: k, top: m.source_dim });
    }
    let values = (0..src.count(k)).map(|t| (t, f.value(m.cell_map[k][t])));
    RationalCochain::from_values(src, k, values)
}

/// Expresses a cycle as a rational combination of basis cycles plus a
/// boundary: z = sum(lambda_i * basis_i) + d(b). Solved by exact Gaussian
/// elimination; free variables are pinned to zero, so the witness is
/// deterministic.
pub fn homology_class_decompose(
    cx: &DeltaComplex,
    z: &RationalChain,
    basis: &[RationalChain],
) -> Result<(Vec<Rational>, RationalChain)> {
    expect_complex(cx, z.complex)?;
    let k = z.dim;
    if k >= 1 && !boundary(cx, z)?.is_zero() {
        return Err(Error::NotACycle);
    }
    for b in basis {
        if b.complex != z.complex || b.dim != k {
            return Err(Error::MismatchedComplexOrDimension { left_dim: k, right_dim: b.dim });
        }
        if k >= 1 && !boundary(cx, b)?.is_zero() {
            return Err(Error::NotACycle);
        }
    }
    let rows = cx.count(k);
    let boundary_cols = if k + 1 <= cx.dim() { cx.count(k + 1) } else { 0 };
    let cols = basis.len() + boundary_cols;
    let mut a = QMatrix::zero(rows, cols);
    for (j, b) in basis.iter().enumerate() {
        for (cell, q) in b.support() {
            a.set(cell, j, q.clone());
        }
    }
    if boundary_cols > 0 {
        let d = cx.boundary_matrix(k + 1)?;
        for t in 0..boundary_cols {
            for &(i, v) in d.column(t) {
                a.set(i, basis.len() + t, Rational::from_integer(v.into()));
            }
        }
    }
    let rhs = z.to_dense(cx)?;
    let Some(x) = a.solve(&rhs) else {
        return Err(Error::NotInSpan);
    };
    let lambdas = x[..basis.len()].to_vec();
    let witness = if boundary_cols > 0 {
        RationalChain::from_terms(
            cx,
            k + 1,
            x[basis.len()..].iter().enumerate().map(|(t, q)| (t, q.clone())),
        )?
    } else {
        RationalChain::zero(cx, k.min(cx.dim()))?
    };
    Ok((lambdas, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta_complex::{
        build_circle, build_polygon_surface, build_single_triangle, build_solid_simplex,
    };
    use crate::rational::{rat, ratio};

    #[test]
    fn triangle_boundary_has_alternating_signs() {
        let cx = build_single_triangle();
        let t = RationalChain::delta(&cx, 2, 0).unwrap();
        let b = boundary(&cx, &t).unwrap();
        assert_eq!(b.coefficient(0), rat(1));
        assert_eq!(b.coefficient(1), rat(-1));
        assert_eq!(b.coefficient(2), rat(1));
    }

    #[test]
    fn boundary_of_boundary_vanishes_on_random_octagon_chains() {
        let cx = build_polygon_surface(2).unwrap();
        let mut state = 0x243f6a8885a308d3u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..100 {
            let terms: Vec<(usize, Rational)> = (0..6)
                .map(|t| {
                    let n = (next() % 19) as i64 - 9;
                    let d = (next() % 9) as i64 + 1;
                    (t, ratio(n, d))
                })
                .collect();
            let c = RationalChain::from_terms(&cx, 2, terms).unwrap();
            let bb = boundary(&cx, &boundary(&cx, &c).unwrap()).unwrap();
            assert!(bb.is_zero());
        }
    }

    #[test]
    fn fundamental_cycle_kills_boundary() {
        let cx = build_polygon_surface(1).unwrap();
        let z = cx.fundamental_cycle().unwrap();
        assert!(boundary(&cx, &z).unwrap().is_zero());
    }

    #[test]
    fn coboundary_indicator_on_triangle() {
        let cx = build_single_triangle();
        // Indicator of edge e0; k = 1 so the twist is (-1)^2 = +1 and
        // delta(f)(t) = coefficient of e0 in the boundary of t = +1.
        let f = RationalCochain::from_values(&cx, 1, [(0, rat(1))]).unwrap();
        let df = coboundary(&cx, &f).unwrap();
        assert_eq!(df.value(0), rat(1));
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let cx = build_solid_simplex(3);
        for cell in 0..4 {
            let f = RationalCochain::from_values(&cx, 1, [(cell, rat(3)), (5 - cell, rat(-2))])
                .unwrap();
            let ddf = coboundary(&cx, &coboundary(&cx, &f).unwrap()).unwrap();
            assert!(ddf.is_zero());
        }
    }

    #[test]
    fn constant_zero_cochain_on_connected_complex() {
        let cx = build_polygon_surface(2).unwrap();
        let f = RationalCochain::from_values(&cx, 0, [(0, rat(5))]).unwrap();
        // One vertex only, and every edge is a loop: both faces agree, so
        // the alternating sum vanishes.
        assert!(coboundary(&cx, &f).unwrap().is_zero());
    }

    #[test]
    fn norms() {
        let cx = build_single_triangle();
        let c = RationalChain::from_terms(&cx, 1, [(0, rat(3)), (1, rat(-2))]).unwrap();
        assert_eq!(l1_norm(&c), rat(5));
        assert_eq!(l1_norm(&RationalChain::zero(&cx, 1).unwrap()), rat(0));
        let f = RationalCochain::from_values(&cx, 1, [(0, rat(1)), (1, rat(-3)), (2, rat(2))])
            .unwrap();
        assert_eq!(sup_norm(&f), rat(3));
        assert_eq!(sup_norm(&RationalCochain::zero(&cx, 1).unwrap()), rat(0));
        let z = build_polygon_surface(2).unwrap().fundamental_cycle().unwrap();
        assert_eq!(l1_norm(&z), rat(6));
    }

    #[test]
    fn homogeneity_of_l1() {
        let cx = build_single_triangle();
        let c = RationalChain::from_terms(&cx, 1, [(0, ratio(2, 3)), (2, rat(-4))]).unwrap();
        let q = ratio(-7, 5);
        assert_eq!(l1_norm(&c.scale(&q)), crate::rational::abs(&q) * l1_norm(&c));
    }

    #[test]
    fn kronecker_pairing_and_adjunction() {
        let cx = build_single_triangle();
        let f = RationalCochain::from_values(&cx, 2, [(0, rat(1))]).unwrap();
        let c = RationalChain::from_terms(&cx, 2, [(0, rat(5))]).unwrap();
        assert_eq!(kronecker(&f, &c).unwrap(), rat(5));

        // <delta f, c> = (-1)^{k+1} <f, boundary c> with k = deg f.
        let cx2 = build_polygon_surface(2).unwrap();
        let f1 = RationalCochain::from_values(&cx2, 1, [(0, rat(2)), (4, ratio(1, 3))]).unwrap();
        let c2 = RationalChain::from_terms(&cx2, 2, [(1, rat(3)), (5, ratio(-2, 7))]).unwrap();
        let lhs = kronecker(&coboundary(&cx2, &f1).unwrap(), &c2).unwrap();
        let rhs = kronecker(&f1, &boundary(&cx2, &c2).unwrap()).unwrap();
        assert_eq!(lhs, rat(1) * rhs, "k = 1: twist (-1)^2 = +1");

        let f0 = RationalCochain::from_values(&cx, 0, [(0, rat(1)), (1, rat(-1))]).unwrap();
        let c1 = RationalChain::from_terms(&cx, 1, [(0, rat(2)), (1, rat(5))]).unwrap();
        let lhs = kronecker(&coboundary(&cx, &f0).unwrap(), &c1).unwrap();
        let rhs = kronecker(&f0, &boundary(&cx, &c1).unwrap()).unwrap();
        assert_eq!(lhs, rat(-1) * rhs, "k = 0: twist (-1)^1 = -1");
    }

    #[test]
    fn hoelder_inequality_on_samples() {
        let cx = build_polygon_surface(2).unwrap();
        let f = RationalCochain::from_values(&cx, 1, (0..9).map(|i| (i, ratio(i as i64 - 4, 3))))
            .unwrap();
        let c = RationalChain::from_terms(&cx, 1, (0..9).map(|i| (i, ratio(7 - i as i64, 5))))
            .unwrap();
        let pair = kronecker(&f, &c).unwrap();
        assert!(crate::rational::abs(&pair) <= sup_norm(&f) * l1_norm(&c));
    }

    #[test]
    fn push_chain_identity_and_cancellation() {
        let cx = build_circle(4).unwrap();
        let c = RationalChain::from_terms(&cx, 1, [(0, rat(1)), (2, rat(-2))]).unwrap();
        let id = SimplicialMap::identity(&cx);
        assert_eq!(push_chain(&id, &cx, &c).unwrap(), c);

        // Two parallel edges collapsing onto one loop: e0 - e1 cancels.
        let two = crate::delta_complex::DeltaComplex::new(
            vec![1, 2],
            vec![Vec::new(), vec![vec![0, 0], vec![0, 0]]],
        )
        .unwrap();
        let one = crate::delta_complex::DeltaComplex::new(
            vec![1, 1],
            vec![Vec::new(), vec![vec![0, 0]]],
        )
        .unwrap();
        let collapse = SimplicialMap::new(&two, &one, vec![vec![0], vec![0, 0]]).unwrap();
        let diff = RationalChain::from_terms(&two, 1, [(0, rat(1)), (1, rat(-1))]).unwrap();
        let image = push_chain(&collapse, &one, &diff).unwrap();
        assert!(image.is_zero());
        assert_eq!(l1_norm(&diff), rat(2));
    }

    #[test]
    fn push_chain_commutes_with_boundary() {
        let cx = build_single_triangle();
        let point = crate::delta_complex::DeltaComplex::new(
            vec![1, 1, 1],
            vec![Vec::new(), vec![vec![0, 0]], vec![vec![0, 0, 0]]],
        )
        .unwrap();
        let m = SimplicialMap::new(&cx, &point, vec![vec![0, 0, 0], vec![0, 0, 0], vec![0]])
            .unwrap();
        let c = RationalChain::from_terms(&cx, 2, [(0, ratio(3, 2))]).unwrap();
        let lhs = boundary(&point, &push_chain(&m, &point, &c).unwrap()).unwrap();
        let rhs = push_chain(&m, &point, &boundary(&cx, &c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn simplicial_map_rejects_noncommuting_tables() {
        let cx = build_circle(2).unwrap();
        let tgt = build_circle(1).unwrap();
        // Edge 0 of the source runs v0 -> v1 but the collapsed loop demands
        // both endpoints map to vertex 0; sending vertex 1 to itself is out
        // of range, and swapping the edge map breaks commutation.
        let err = SimplicialMap::new(&cx, &tgt, vec![vec![0, 0], vec![0, 0]]);
        assert!(err.is_ok(), "collapsing both vertices commutes");
        let bad = SimplicialMap::new(&cx, &cx, vec![vec![0, 0], vec![0, 1]]);
        assert!(matches!(bad, Err(Error::NotASimplicialMap { .. })));
    }

    #[test]
    fn decompose_fundamental_against_itself() {
        let cx = build_polygon_surface(2).unwrap();
        let z = cx.fundamental_cycle().unwrap();
        let (lambda, witness) = homology_class_decompose(&cx, &z, &[z.clone()]).unwrap();
        assert_eq!(lambda, vec![rat(1)]);
        assert!(witness.is_zero());
    }

    #[test]
    fn decompose_boundary_with_empty_basis() {
        let cx = build_solid_simplex(3);
        let b = RationalChain::from_terms(&cx, 3, [(0, ratio(5, 3))]).unwrap();
        let z = boundary(&cx, &b).unwrap();
        let (lambda, witness) = homology_class_decompose(&cx, &z, &[]).unwrap();
        assert!(lambda.is_empty());
        let recovered = boundary(&cx, &witness).unwrap();
        assert_eq!(recovered, z);
    }

    #[test]
    fn decompose_rejects_non_cycles_and_off_span_cycles() {
        let cx = build_single_triangle();
        let edge = RationalChain::delta(&cx, 1, 0).unwrap();
        assert!(matches!(
            homology_class_decompose(&cx, &edge, &[]),
            Err(Error::NotACycle)
        ));
        let circle = build_circle(3).unwrap();
        let z = circle.fundamental_cycle().unwrap();
        assert!(matches!(
            homology_class_decompose(&circle, &z, &[]),
            Err(Error::NotInSpan)
        ));
    }
}
