//! Finite delta-complexes: per-dimension cell counts plus ordered face
//! tables. The j-th face of a k-cell corresponds to omitting vertex j, so
//! the boundary of a cell is the alternating face sum. Repeated faces are
//! permitted; gluings live entirely in the tables.

use std::collections::BTreeMap;

use crate::chain::RationalChain;
use crate::error::{ComplexId, Error, Result};
use crate::linalg::SparseIntMatrix;
use crate::par;
use crate::rational::rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaComplex {
    /// counts[k] = number of k-cells.
    counts: Vec<usize>,
    /// faces[k][t] = ordered face list of k-cell t (k+1 entries); faces[0] is empty.
    faces: Vec<Vec<Vec<usize>>>,
    /// Structural fingerprint; equal complexes get equal ids.
    id: ComplexId,
}

/// Invariants of a validated complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexReport {
    pub dim: usize,
    pub counts: Vec<usize>,
    pub euler_char: i64,
    /// Rational homology ranks b_0..b_n.
    pub betti: Vec<usize>,
    pub orientable_top: bool,
    pub components: usize,
    /// Present iff the complex is a closed orientable pseudo-manifold in top
    /// dimension; a +-1 cycle covering every top cell, +1 on the lowest cell
    /// of each component.
    pub fundamental_cycle: Option<RationalChain>,
}

impl DeltaComplex {
    /// Builds a complex from raw tables, checking shape and index ranges.
    pub fn new(counts: Vec<usize>, faces: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if counts.is_empty() || counts[0] == 0 {
            return Err(Error::EmptyComplex);
        }
        if faces.len() != counts.len() {
            return Err(Error::FaceTableShape {
                dim: faces.len(),
                expected: counts.len(),
                found: faces.len(),
            });
        }
        if !faces[0].is_empty() {
            return Err(Error::FaceTableShape { dim: 0, expected: 0, found: faces[0].len() });
        }
        for k in 1..counts.len() {
            if faces[k].len() != counts[k] {
                return Err(Error::FaceTableShape {
                    dim: k,
                    expected: counts[k],
                    found: faces[k].len(),
                });
            }
            for (t, row) in faces[k].iter().enumerate() {
                if row.len() != k + 1 {
                    return Err(Error::FaceTableShape { dim: k, expected: k + 1, found: row.len() });
                }
                for (slot, &f) in row.iter().enumerate() {
                    if f >= counts[k - 1] {
                        return Err(Error::FaceIndexOutOfRange {
                            dim: k,
                            cell: t,
                            slot,
                            face: f,
                            count: counts[k - 1],
                        });
                    }
                }
            }
        }
        let id = fingerprint(&counts, &faces);
        Ok(DeltaComplex { counts, faces, id })
    }

    pub fn dim(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, k: usize) -> usize {
        self.counts.get(k).copied().unwrap_or(0)
    }

    /// Ordered face list of k-cell `t`; panics on bad indices (callers
    /// validate dimensions first).
    pub fn faces_of(&self, k: usize, t: usize) -> &[usize] {
        &self.faces[k][t]
    }

    pub fn id(&self) -> ComplexId {
        self.id
    }

    /// Sparse boundary matrix in dimension k: column t holds the alternating
    /// face sum of k-cell t, with repeated faces accumulated.
    pub fn boundary_matrix(&self, k: usize) -> Result<SparseIntMatrix> {
        if k < 1 || k > self.dim() {
            return Err(Error::DimensionOutOfRange { dim: k, top: self.dim() });
        }
        let columns = par::map_range(self.counts[k], |t| {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (j, &f) in self.faces[k][t].iter().enumerate() {
                *acc.entry(f).or_insert(0) += if j % 2 == 0 { 1 } else { -1 };
            }
            acc.into_iter().filter(|&(_, v)| v != 0).collect()
        });
        Ok(SparseIntMatrix { rows: self.counts[k - 1], cols: self.counts[k], columns })
    }

    /// Checks the chain-complex identity and computes the report.
    pub fn validate(&self) -> Result<ComplexReport> {
        let n = self.dim();
        let matrices: Vec<SparseIntMatrix> =
            (1..=n).map(|k| self.boundary_matrix(k)).collect::<Result<_>>()?;
        for k in 1..n {
            // Column t of the product is the boundary of the boundary of
            // (k+1)-cell t; the first nonzero column names the offender.
            let product = matrices[k - 1].multiply(&matrices[k]);
            if let Some(t) = par::first_violation(product.cols, |t| !product.columns[t].is_empty())
            {
                return Err(Error::NotAChainComplex { dim: k + 1, cell: t });
            }
        }
        let ranks: Vec<usize> = {
            let mut r = vec![0usize; n + 2];
            let computed = par::map_slice(&matrices, |m| m.to_dense().rank());
            r[1..=n].clone_from_slice(&computed);
            r
        };
        let betti: Vec<usize> =
            (0..=n).map(|k| self.counts[k] - ranks[k] - ranks[k + 1]).collect();
        let euler_char = self
            .counts
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        let fundamental = match self.fundamental_cycle() {
            Ok(z) => Some(z),
            Err(Error::NotClosed { .. }) | Err(Error::NotOrientable { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(ComplexReport {
            dim: n,
            counts: self.counts.clone(),
            euler_char,
            betti,
            orientable_top: fundamental.is_some(),
            components: self.components(),
            fundamental_cycle: fundamental,
        })
    }

    /// Number of connected components of the underlying space (union-find
    /// over vertices through edges; higher cells attach along their edges).
    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.counts[0]).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        if self.dim() >= 1 {
            for e in 0..self.counts[1] {
                let (a, b) = (self.faces[1][e][0], self.faces[1][e][1]);
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        (0..self.counts[0]).filter(|&v| find(&mut parent, v) == v).count()
    }

    /// Fundamental cycle of a closed orientable top-dimensional
    /// pseudo-manifold: every (n-1)-cell must lie in exactly two top-cell
    /// face slots, and the induced signs must propagate consistently. The
    /// lowest-index cell of each component is normalized to +1.
    pub fn fundamental_cycle(&self) -> Result<RationalChain> {
        let n = self.dim();
        if n == 0 {
            let terms = (0..self.counts[0]).map(|v| (v, rat(1)));
            return RationalChain::from_terms(self, 0, terms);
        }
        let mut incidence: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.counts[n - 1]];
        for t in 0..self.counts[n] {
            for (j, &f) in self.faces[n][t].iter().enumerate() {
                incidence[f].push((t, j));
            }
        }
        if let Some(f) = incidence.iter().position(|v| v.len() != 2) {
            return Err(Error::NotClosed { dim: n - 1, cell: f, incidences: incidence[f].len() });
        }
        // Sign constraints: a shared face cancels in the boundary iff the two
        // incident slots carry opposite signed coefficients.
        let mut neighbors: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.counts[n]];
        for pairs in &incidence {
            let (t, j) = pairs[0];
            let (t2, j2) = pairs[1];
            if t == t2 {
                if (j + j2) % 2 == 0 {
                    return Err(Error::NotOrientable { cell: t });
                }
                continue;
            }
            let factor: i64 = if (j + j2) % 2 == 0 { -1 } else { 1 };
            neighbors[t].push((t2, factor));
            neighbors[t2].push((t, factor));
        }
        let mut sign: Vec<i64> = vec![0; self.counts[n]];
        for root in 0..self.counts[n] {
            if sign[root] != 0 {
                continue;
            }
            sign[root] = 1;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(t) = queue.pop_front() {
                for &(t2, factor) in &neighbors[t] {
                    let expected = factor * sign[t];
                    if sign[t2] == 0 {
                        sign[t2] = expected;
                        queue.push_back(t2);
                    } else if sign[t2] != expected {
                        return Err(Error::NotOrientable { cell: t2 });
                    }
                }
            }
        }
        let z = RationalChain::from_terms(self, n, (0..self.counts[n]).map(|t| (t, rat(sign[t]))))?;
        debug_assert!(crate::chain::boundary(self, &z).unwrap().is_zero());
        Ok(z)
    }

    /// The vertex at position `pos` of a k-cell, read off by iterated face
    /// maps along the canonical descending drop order.
    pub fn vertex_at(&self, k: usize, cell: usize, pos: usize) -> Result<usize> {
        self.iterated_face(k, cell, &[pos])
    }

    /// The edge spanned by positions `p < q` of a k-cell (k >= 1).
    pub fn edge_at(&self, k: usize, cell: usize, p: usize, q: usize) -> Result<usize> {
        self.iterated_face(k, cell, &[p, q])
    }

    /// Iterated face of a k-cell keeping only the sorted positions `keep`.
    /// Positions are dropped from the top, so each drop of original position
    /// r happens at face index r.
    fn iterated_face(&self, k: usize, cell: usize, keep: &[usize]) -> Result<usize> {
        if cell >= self.count(k) {
            return Err(Error::CellIndexOutOfRange { dim: k, cell, count: self.count(k) });
        }
        if keep.iter().any(|&p| p > k) {
            return Err(Error::InvalidParameter(format!(
                "position out of range for a {k}-cell: {keep:?}"
            )));
        }
        let mut dim = k;
        let mut cur = cell;
        for r in (0..=k).rev() {
            if keep.contains(&r) {
                continue;
            }
            cur = self.faces[dim][cur][r];
            dim -= 1;
        }
        Ok(cur)
    }

    /// Full simplicial-identity coherence of the face tables; stronger than
    /// the boundary-of-boundary check and needed wherever vertices of cells
    /// are read off (subdivision, simpliciality, covers above dimension 2).
    pub fn check_coherence(&self) -> Result<()> {
        for k in 2..=self.dim() {
            for t in 0..self.counts[k] {
                for j in 1..=k {
                    for i in 0..j {
                        let lhs = self.faces[k - 1][self.faces[k][t][j]][i];
                        let rhs = self.faces[k - 1][self.faces[k][t][i]][j - 1];
                        if lhs != rhs {
                            return Err(Error::FaceIncoherent { dim: k, cell: t, i, j });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_coherent(&self) -> bool {
        self.check_coherence().is_ok()
    }
}

fn fingerprint(counts: &[usize], faces: &[Vec<Vec<usize>>]) -> ComplexId {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |x: u64| {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(counts.len() as u64);
    for &c in counts {
        eat(c as u64);
    }
    for table in faces {
        eat(0xffff_ffff_ffff_fffe);
        for row in table {
            eat(0xffff_ffff_ffff_fffd);
            for &f in row {
                eat(f as u64);
            }
        }
    }
    h
}

/// Closed orientable genus-g surface from the regular 4g-gon with the
/// standard a1 b1 a1' b1' ... identification, triangulated as a fan from
/// polygon vertex 0. Cells: 1 vertex, 6g-3 edges (2g identified sides plus
/// 4g-3 diagonals), 4g-2 triangles.
///
/// Each side pair is oriented along its first occurrence on the polygon
/// boundary; fan triangles whose boundary side is a second occurrence list
/// their vertices so the face direction matches the identified edge.
pub fn build_polygon_surface(genus: usize) -> Result<DeltaComplex> {
    if genus == 0 {
        return Err(Error::InvalidParameter(
            "genus must be at least 1 (the sphere has no 4g-gon model here)".into(),
        ));
    }
    let g = genus;
    // Edge indexing: pair cells first (a_k = 2(k-1), b_k = 2k-1), then fan
    // diagonals d_i = 2g + (i-2) for i in 2..=4g-2.
    let side_cell = |s: usize| -> usize {
        let k = s / 4;
        match s % 4 {
            0 | 2 => 2 * k,
            _ => 2 * k + 1,
        }
    };
    let diag = |i: usize| -> usize { 2 * g + (i - 2) };
    let forward = |s: usize| s % 4 < 2;
    let edge_count = 6 * g - 3;
    let triangle_count = 4 * g - 2;
    let edge_faces = vec![vec![0usize, 0]; edge_count];
    let mut tri_faces = Vec::with_capacity(triangle_count);
    for i in 1..=triangle_count {
        let row = if i == 1 {
            // Spans sides 0 and 1, both first occurrences.
            vec![side_cell(1), diag(2), side_cell(0)]
        } else if i == 4 * g - 2 {
            // Spans sides 4g-2 and 4g-1, both second occurrences.
            vec![side_cell(4 * g - 2), diag(4 * g - 2), side_cell(4 * g - 1)]
        } else if forward(i) {
            vec![side_cell(i), diag(i + 1), diag(i)]
        } else {
            vec![side_cell(i), diag(i), diag(i + 1)]
        };
        tri_faces.push(row);
    }
    DeltaComplex::new(vec![1, edge_count, triangle_count], vec![Vec::new(), edge_faces, tri_faces])
}

/// Oriented circle with n vertices and n edges; edge i runs from vertex i to
/// vertex (i+1) mod n, so its face list is ((i+1) mod n, i).
pub fn build_circle(n: usize) -> Result<DeltaComplex> {
    if n == 0 {
        return Err(Error::InvalidParameter("circle needs at least one edge".into()));
    }
    let edge_faces = (0..n).map(|i| vec![(i + 1) % n, i]).collect();
    DeltaComplex::new(vec![n, n], vec![Vec::new(), edge_faces])
}

/// 2-sphere as the boundary of the 3-simplex: 4 vertices, 6 edges, 4
/// triangles, all simplicial with lexicographic indexing.
pub fn build_sphere() -> DeltaComplex {
    let (counts, mut faces) = simplex_skeleton(3);
    counts_and_faces_truncate(counts, &mut faces)
}

fn counts_and_faces_truncate(
    mut counts: Vec<usize>,
    faces: &mut Vec<Vec<Vec<usize>>>,
) -> DeltaComplex {
    counts.pop();
    faces.pop();
    DeltaComplex::new(counts, std::mem::take(faces)).expect("simplex boundary is valid")
}

/// Solid k-simplex for small k: all faces of one top cell, lexicographically
/// indexed per dimension. Used as test geometry (k <= 3 in practice).
pub fn build_solid_simplex(k: usize) -> DeltaComplex {
    let (counts, faces) = simplex_skeleton(k);
    DeltaComplex::new(counts, faces).expect("solid simplex is valid")
}

/// Single 2-simplex with three distinct vertices.
pub fn build_single_triangle() -> DeltaComplex {
    build_solid_simplex(2)
}

/// Full face lattice of the k-simplex: cells of dimension d are the
/// (d+1)-subsets of {0..k} in lexicographic order; face j of a cell omits
/// its j-th vertex.
fn simplex_skeleton(k: usize) -> (Vec<usize>, Vec<Vec<Vec<usize>>>) {
    let mut subsets_by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); k + 1];
    let verts = k + 1;
    for mask in 1u32..(1 << verts) {
        let set: Vec<usize> = (0..verts).filter(|&v| mask & (1 << v) != 0).collect();
        subsets_by_dim[set.len() - 1].push(set);
    }
    for sets in &mut subsets_by_dim {
        sets.sort();
    }
    let index: Vec<BTreeMap<Vec<usize>, usize>> = subsets_by_dim
        .iter()
        .map(|sets| sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
        .collect();
    let counts: Vec<usize> = subsets_by_dim.iter().map(|s| s.len()).collect();
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); k + 1];
    for d in 1..=k {
        for set in &subsets_by_dim[d] {
            let row: Vec<usize> = (0..=d)
                .map(|j| {
                    let mut sub = set.clone();
                    sub.remove(j);
                    index[d - 1][&sub]
                })
                .collect();
            faces[d].push(row);
        }
    }
    (counts, faces)
}

/// True when `cx` is structurally the output of `build_circle(n)` for some n.
pub fn is_standard_circle(cx: &DeltaComplex) -> bool {
    if cx.dim() != 1 || cx.count(0) != cx.count(1) || cx.count(0) == 0 {
        return false;
    }
    let n = cx.count(0);
    (0..n).all(|i| cx.faces_of(1, i) == [(i + 1) % n, i])
}

/// Coefficient-level check used by reports: does the chain cover every top
/// cell with +-1 entries?
pub fn covers_top_with_unit_signs(cx: &DeltaComplex, z: &RationalChain) -> bool {
    let n = cx.dim();
    z.dim() == n
        && (0..cx.count(n)).all(|t| {
            let c = z.coefficient(t);
            c == rat(1) || c == rat(-1)
        })
}
