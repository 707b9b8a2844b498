//! Finite abstract simplicial complexes.
//!
//! A complex is stored as the full, closed set of its nonempty cells in
//! canonical order (dimension first, then lexicographic vertex order).
//! Every constructor returns a fresh value; nothing is mutated in place.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Largest facet (in vertices) accepted by [`SimplicialComplex::from_facets`].
///
/// The closure of a facet with `k` vertices has `2^k - 1` cells.
pub const MAX_FACET_VERTICES: usize = 24;

/// Opaque vertex label. Only equality and order are meaningful.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// A simplex, kept as a strictly increasing vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell(Vec<VertexId>);

impl Cell {
    /// Builds a cell from arbitrary-order vertices, rejecting empty input and repeats.
    pub fn new<I, V>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut vs: Vec<VertexId> = vertices.into_iter().map(Into::into).collect();
        if vs.is_empty() {
            return Err(Error::Malformed("empty cell".into()));
        }
        vs.sort_unstable();
        if let Some((a, _)) = vs.iter().tuple_windows().find(|(a, b)| a == b) {
            return Err(Error::Malformed(format!("vertex {a} repeated in one cell")));
        }
        Ok(Cell(vs))
    }

    /// Caller guarantees `vertices` is nonempty and strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Cell(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// `true` iff every vertex of `self` is a vertex of `other`.
    pub fn is_face_of(&self, other: &Cell) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.by_ref().any(|w| w == v))
    }

    /// `true` iff the two cells share no vertex.
    pub fn is_disjoint(&self, other: &Cell) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// All nonempty subsets of the vertex set, this cell included.
    pub fn faces(&self) -> impl Iterator<Item = Cell> + '_ {
        let k = self.0.len();
        (1u32..(1u32 << k)).map(move |mask| {
            Cell(
                (0..k)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    fn with_vertex(&self, v: VertexId) -> Cell {
        let mut vs = self.0.clone();
        let pos = vs.binary_search(&v).unwrap_err();
        vs.insert(pos, v);
        Cell(vs)
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// Number of cells per dimension, `f_0, f_1, ..., f_d`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn euler_char(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

/// A finite abstract simplicial complex, closed under taking nonempty faces.
///
/// Equality compares cell sets only; the name is a label.
#[derive(Clone, Debug, Default)]
pub struct SimplicialComplex {
    cells: BTreeSet<Cell>,
    name: Option<String>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Closure of a facet list. Facets may overlap or be faces of each other.
    pub fn from_facets<F, V>(facets: impl IntoIterator<Item = F>) -> Result<Self>
    where
        F: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut cells = BTreeSet::new();
        for facet in facets {
            let cell = Cell::new(facet)?;
            if cell.0.len() > MAX_FACET_VERTICES {
                return Err(Error::Malformed(format!(
                    "facet with {} vertices exceeds the limit of {MAX_FACET_VERTICES}",
                    cell.0.len()
                )));
            }
            insert_closure(&mut cells, &cell);
        }
        Ok(Self { cells, name: None })
    }

    /// Takes an already face-closed cell set.
    fn from_closed(cells: BTreeSet<Cell>) -> Self {
        Self { cells, name: None }
    }

    /// Closure of a collection of cells built internally.
    fn from_generators(generators: impl IntoIterator<Item = Cell>) -> Self {
        let mut cells = BTreeSet::new();
        for g in generators {
            insert_closure(&mut cells, &g);
        }
        Self::from_closed(cells)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Cells in canonical order: by dimension, then lexicographically.
    pub fn cells(&self) -> impl ExactSizeIterator<Item = &Cell> + Clone {
        self.cells.iter()
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.cells.contains(cell)
    }

    /// `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.cells.last().map(Cell::dim)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.cells
            .iter()
            .take_while(|c| c.0.len() == 1)
            .map(|c| c.0[0])
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices().count()
    }

    /// First id not used by any vertex (`max + 1`, or 0 when empty).
    pub fn next_vertex_id(&self) -> VertexId {
        self.vertices()
            .last()
            .map_or(VertexId(0), |v| VertexId(v.0 + 1))
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = Vec::new();
        for c in &self.cells {
            let d = c.dim();
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        FVector(counts)
    }

    pub fn euler_char(&self) -> i64 {
        self.f_vector().euler_char()
    }

    /// Maximal cells in canonical order.
    pub fn facets(&self) -> Vec<Cell> {
        let mut covered: BTreeSet<&Cell> = BTreeSet::new();
        let mut facets = Vec::new();
        // Walking from the top dimension down, a cell is maximal iff no
        // larger cell already listed contains it.
        for c in self.cells.iter().rev() {
            if covered.contains(c) {
                continue;
            }
            facets.push(c.clone());
            for f in c.faces() {
                if let Some(existing) = self.cells.get(&f) {
                    covered.insert(existing);
                }
            }
        }
        facets.reverse();
        facets
    }

    /// Facet list as plain integers, the form used for serialization and memo keys.
    pub fn facet_lists(&self) -> Vec<Vec<u32>> {
        self.facets()
            .into_iter()
            .map(|c| c.0.iter().map(|v| v.0).collect())
            .collect()
    }

    fn require(&self, sigma: &Cell) -> Result<()> {
        if self.contains(sigma) {
            Ok(())
        } else {
            Err(Error::UnknownCell(sigma.clone()))
        }
    }

    /// Cells strictly containing `sigma`.
    fn cofaces<'a>(&'a self, sigma: &'a Cell) -> impl Iterator<Item = &'a Cell> + 'a {
        self.cells
            .iter()
            .filter(move |t| t.0.len() > sigma.0.len() && sigma.is_face_of(t))
    }

    /// The link `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ X}`.
    pub fn link(&self, sigma: &Cell) -> Result<SimplicialComplex> {
        self.require(sigma)?;
        Ok(Self::from_closed(
            self.cofaces(sigma).map(|t| difference(t, sigma)).collect(),
        ))
    }

    /// Cone with apex `next_vertex_id()`. The cone over the empty complex is a point.
    pub fn cone(&self) -> SimplicialComplex {
        let apex = self.next_vertex_id();
        let mut cells = self.cells.clone();
        cells.insert(Cell(vec![apex]));
        cells.extend(self.cells.iter().map(|c| c.with_vertex(apex)));
        Self::from_closed(cells)
    }

    /// Unreduced suspension: two cones glued along `self`.
    pub fn suspension(&self) -> SimplicialComplex {
        let north = self.next_vertex_id();
        let south = VertexId(north.0 + 1);
        let mut cells = self.cells.clone();
        for apex in [north, south] {
            cells.insert(Cell(vec![apex]));
            cells.extend(self.cells.iter().map(|c| c.with_vertex(apex)));
        }
        Self::from_closed(cells)
    }

    /// Staircase triangulation of `|self| × |other|`.
    ///
    /// Vertex `(x, y)` gets id `rank(x) * |V(other)| + rank(y)`, ranks taken in
    /// increasing vertex order. A simplex of the product is a chain in the
    /// componentwise order on `σ × τ` for cells `σ`, `τ`.
    pub fn product(&self, other: &SimplicialComplex) -> SimplicialComplex {
        if self.is_empty() || other.is_empty() {
            return Self::empty();
        }
        let rank_x: HashMap<VertexId, u32> = ranks(self);
        let rank_y: HashMap<VertexId, u32> = ranks(other);
        let ny = rank_y.len() as u32;
        let fx = self.facets();
        let fy = other.facets();
        let mut generators = Vec::new();
        for s in &fx {
            let xs: Vec<u32> = s.0.iter().map(|v| rank_x[v]).collect();
            for t in &fy {
                let ys: Vec<u32> = t.0.iter().map(|v| rank_y[v]).collect();
                let (p, q) = (xs.len() - 1, ys.len() - 1);
                // Each lattice path from (0,0) to (p,q) is a top simplex.
                for x_steps in (0..p + q).combinations(p) {
                    let (mut i, mut j) = (0, 0);
                    let mut verts = vec![VertexId(xs[0] * ny + ys[0])];
                    for step in 0..p + q {
                        if x_steps.contains(&step) {
                            i += 1;
                        } else {
                            j += 1;
                        }
                        verts.push(VertexId(xs[i] * ny + ys[j]));
                    }
                    verts.sort_unstable();
                    generators.push(Cell::from_sorted(verts));
                }
            }
        }
        Self::from_generators(generators)
    }

    /// Disjoint union; `other`'s ids are shifted by `self.next_vertex_id()`.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.next_vertex_id().0;
        let mut cells = self.cells.clone();
        cells.extend(
            other
                .cells
                .iter()
                .map(|c| Cell(c.0.iter().map(|v| VertexId(v.0 + shift)).collect())),
        );
        Self::from_closed(cells)
    }

    /// Barycentric subdivision. The vertex for cell `σ` is `σ`'s index in
    /// canonical order; cells are chains of faces.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        self.barycentric_with_labels().0
    }

    fn barycentric_with_labels(&self) -> (SimplicialComplex, HashMap<&Cell, VertexId>) {
        let label: HashMap<&Cell, VertexId> = self
            .cells
            .iter()
            .enumerate()
            .map(|(i, c)| (c, VertexId(i as u32)))
            .collect();
        let mut generators = Vec::new();
        for facet in self.facets() {
            // Maximal chains in a facet correspond to vertex orderings.
            for order in facet.0.iter().copied().permutations(facet.0.len()) {
                let mut prefix: Vec<VertexId> = Vec::with_capacity(order.len());
                let mut chain = Vec::with_capacity(order.len());
                for v in order {
                    let pos = prefix.binary_search(&v).unwrap_err();
                    prefix.insert(pos, v);
                    let face = self
                        .cells
                        .get(&Cell(prefix.clone()))
                        .expect("faces of a facet are cells");
                    chain.push(label[face]);
                }
                chain.sort_unstable();
                generators.push(Cell::from_sorted(chain));
            }
        }
        (Self::from_generators(generators), label)
    }

    /// Stellar subdivision at `sigma`; returns the new complex and its apex.
    ///
    /// For a vertex the complex is returned unchanged and the apex is that vertex.
    pub fn stellar_subdivision_with_apex(
        &self,
        sigma: &Cell,
    ) -> Result<(SimplicialComplex, VertexId)> {
        self.require(sigma)?;
        if sigma.dim() == 0 {
            return Ok((Self::from_closed(self.cells.clone()), sigma.0[0]));
        }
        let apex = self.next_vertex_id();
        let mut cells: BTreeSet<Cell> = self
            .cells
            .iter()
            .filter(|c| !sigma.is_face_of(c))
            .cloned()
            .collect();
        cells.insert(Cell(vec![apex]));
        for tau in self.cells.iter().filter(|c| sigma.is_face_of(c)) {
            for face in tau.faces().filter(|f| !sigma.is_face_of(f)) {
                cells.insert(face.with_vertex(apex));
            }
        }
        Ok((Self::from_closed(cells), apex))
    }

    pub fn stellar_subdivision(&self, sigma: &Cell) -> Result<SimplicialComplex> {
        self.stellar_subdivision_with_apex(sigma).map(|(x, _)| x)
    }

    /// A complex homeomorphic to `self` minus a small open ball around the
    /// barycenter of `sigma`.
    ///
    /// Stellar subdivision puts a vertex `b` at the barycenter, one barycentric
    /// subdivision makes the star of `b` a regular neighbourhood, and removing
    /// every cell that contains `b` deletes its interior. Skipping the
    /// barycentric step would only give a deformation retract.
    pub fn puncture(&self, sigma: &Cell) -> Result<SimplicialComplex> {
        let (stellar, apex) = self.stellar_subdivision_with_apex(sigma)?;
        let (sd, label) = stellar.barycentric_with_labels();
        let centre = label[&Cell(vec![apex])];
        let cells = sd
            .cells
            .into_iter()
            .filter(|c| !c.contains(centre))
            .collect();
        Ok(Self::from_closed(cells))
    }
}

fn insert_closure(cells: &mut BTreeSet<Cell>, cell: &Cell) {
    if cells.contains(cell) {
        return;
    }
    cells.extend(cell.faces());
}

fn difference(tau: &Cell, sigma: &Cell) -> Cell {
    Cell(
        tau.0
            .iter()
            .copied()
            .filter(|v| !sigma.contains(*v))
            .collect(),
    )
}

fn ranks(x: &SimplicialComplex) -> HashMap<VertexId, u32> {
    x.vertices()
        .enumerate()
        .map(|(i, v)| (v, i as u32))
        .collect()
}

/// Coface lookup used when many links of one complex are needed.
pub(crate) struct CofaceIndex<'a> {
    cells: Vec<&'a Cell>,
    by_vertex: HashMap<VertexId, Vec<usize>>,
}

impl<'a> CofaceIndex<'a> {
    pub(crate) fn new(x: &'a SimplicialComplex) -> Self {
        let cells: Vec<&Cell> = x.cells.iter().collect();
        let mut by_vertex: HashMap<VertexId, Vec<usize>> = HashMap::new();
        for (i, c) in cells.iter().enumerate() {
            for v in &c.0 {
                by_vertex.entry(*v).or_default().push(i);
            }
        }
        Self { cells, by_vertex }
    }

    pub(crate) fn cells(&self) -> &[&'a Cell] {
        &self.cells
    }

    /// Euler characteristic of the link of `sigma`, counted from its cofaces.
    pub(crate) fn link_euler_char(&self, sigma: &Cell) -> i64 {
        let pivot = sigma
            .0
            .iter()
            .min_by_key(|v| self.by_vertex.get(v).map_or(0, Vec::len))
            .expect("cells are nonempty");
        let Some(candidates) = self.by_vertex.get(pivot) else {
            return 0;
        };
        candidates
            .iter()
            .map(|&i| self.cells[i])
            .filter(|t| t.0.len() > sigma.0.len() && sigma.is_face_of(t))
            .map(|t| {
                let link_dim = t.0.len() - sigma.0.len() - 1;
                if link_dim.is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn cell(vs: &[u32]) -> Cell {
        Cell::new(vs.iter().copied()).unwrap()
    }

    fn tetra_boundary() -> SimplicialComplex {
        cx(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])
    }

    #[test]
    fn closure_counts() {
        assert_eq!(cx(&[&[0, 1]]).num_cells(), 3);
        assert_eq!(
            cx(&[&[0, 1, 2], &[2, 3]]).f_vector(),
            FVector(vec![4, 4, 1])
        );
        assert_eq!(cx(&[]).num_cells(), 0);
    }

    #[test]
    fn malformed_facets() {
        let empty: [&[u32]; 1] = [&[]];
        assert!(matches!(
            SimplicialComplex::from_facets(empty.iter().map(|f| f.iter().copied())),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            SimplicialComplex::from_facets([[3u32, 1, 3]]),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn facets_round_trip() {
        let x = cx(&[&[0, 1, 2], &[2, 3], &[1, 2]]);
        assert_eq!(x.facet_lists(), vec![vec![2, 3], vec![0, 1, 2]]);
        assert_eq!(SimplicialComplex::from_facets(x.facet_lists()).unwrap(), x);
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(tetra_boundary().euler_char(), 2);
        assert_eq!(cx(&[&[7]]).euler_char(), 1);
        assert_eq!(SimplicialComplex::empty().euler_char(), 0);
    }

    #[test]
    fn links() {
        let s = tetra_boundary();
        let l = s.link(&cell(&[0])).unwrap();
        assert_eq!(l, cx(&[&[1, 2], &[1, 3], &[2, 3]]));
        assert_eq!(l.euler_char(), 0);
        let l = s.link(&cell(&[0, 1])).unwrap();
        assert_eq!(l, cx(&[&[2], &[3]]));
        let e = cx(&[&[0, 1]]);
        assert!(e.link(&cell(&[0, 1])).unwrap().is_empty());
        assert!(matches!(e.link(&cell(&[5])), Err(Error::UnknownCell(_))));
    }

    #[test]
    fn coface_index_agrees_with_link() {
        let s = tetra_boundary().barycentric_subdivision();
        let idx = CofaceIndex::new(&s);
        for c in s.cells() {
            assert_eq!(idx.link_euler_char(c), s.link(c).unwrap().euler_char());
        }
    }

    #[test]
    fn cones() {
        let s0 = cx(&[&[0], &[1]]);
        assert_eq!(s0.cone(), cx(&[&[0, 2], &[1, 2]]));
        assert_eq!(SimplicialComplex::empty().cone(), cx(&[&[0]]));
        let c = cx(&[&[0, 1], &[1, 2], &[0, 2]]).cone();
        assert_eq!(c.f_vector(), FVector(vec![4, 6, 3]));
        assert_eq!(c.euler_char(), 1);
    }

    #[test]
    fn suspensions() {
        let s0 = cx(&[&[0], &[1]]);
        let s = s0.suspension();
        assert_eq!(s.f_vector(), FVector(vec![4, 4]));
        assert_eq!(s.euler_char(), 0);
        assert_eq!(SimplicialComplex::empty().suspension(), s0);
        let oct = cx(&[&[0, 1], &[1, 2], &[0, 2]]).suspension();
        assert_eq!(oct.f_vector(), FVector(vec![5, 9, 6]));
        assert_eq!(oct.euler_char(), 2);
    }

    #[test]
    fn products() {
        let e = cx(&[&[0, 1]]);
        let sq = e.product(&e);
        assert_eq!(sq.f_vector(), FVector(vec![4, 5, 2]));
        assert_eq!(sq.euler_char(), 1);

        let x = cx(&[&[3, 5], &[5, 9, 11]]);
        let xp = x.product(&cx(&[&[4]]));
        assert_eq!(xp, cx(&[&[0, 1], &[1, 2, 3]]));
        assert_eq!(xp.f_vector(), x.f_vector());

        let c3 = cx(&[&[0, 1], &[1, 2], &[0, 2]]);
        let torus = c3.product(&c3);
        assert_eq!(torus.f_vector(), FVector(vec![9, 27, 18]));
        assert_eq!(torus.euler_char(), 0);
        assert!(x.product(&SimplicialComplex::empty()).is_empty());
    }

    #[test]
    fn disjoint_unions() {
        let pt = cx(&[&[0]]);
        assert_eq!(pt.disjoint_union(&pt), cx(&[&[0], &[1]]));
        let e = cx(&[&[0, 1]]);
        assert_eq!(e.disjoint_union(&SimplicialComplex::empty()), e);
        let c3 = cx(&[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(e.disjoint_union(&c3).euler_char(), 1);
    }

    #[test]
    fn barycentric() {
        let e = cx(&[&[0, 1]]);
        assert_eq!(e.barycentric_subdivision().f_vector(), FVector(vec![3, 2]));
        let tri = cx(&[&[0, 1, 2]]);
        let sd = tri.barycentric_subdivision();
        assert_eq!(sd.f_vector(), FVector(vec![7, 12, 6]));
        assert!(SimplicialComplex::empty()
            .barycentric_subdivision()
            .is_empty());
        let tet = cx(&[&[0, 1, 2, 3]]).barycentric_subdivision();
        assert_eq!(tet.f_vector().0[3], 24);
    }

    #[test]
    fn stellar() {
        let e = cx(&[&[0, 1]]);
        assert_eq!(
            e.stellar_subdivision(&cell(&[0, 1])).unwrap(),
            cx(&[&[0, 2], &[1, 2]])
        );
        let tri = cx(&[&[0, 1, 2]]);
        let st = tri.stellar_subdivision(&cell(&[0, 1, 2])).unwrap();
        assert_eq!(st.f_vector(), FVector(vec![4, 6, 3]));
        assert_eq!(st.euler_char(), 1);
        assert_eq!(tri.stellar_subdivision(&cell(&[1])).unwrap(), tri);
        // Starring an edge of a triangle splits the triangle in two.
        let st = tri.stellar_subdivision(&cell(&[0, 1])).unwrap();
        assert_eq!(st, cx(&[&[0, 2, 3], &[1, 2, 3]]));
    }

    #[test]
    fn punctures() {
        let e = cx(&[&[0, 1]]);
        let p = e.puncture(&cell(&[0])).unwrap();
        assert_eq!(p.f_vector(), FVector(vec![2, 1]));
        let p = e.puncture(&cell(&[0, 1])).unwrap();
        assert_eq!(p.f_vector(), FVector(vec![4, 2]));
        assert_eq!(p.euler_char(), 2);
        let s = tetra_boundary();
        let p = s.puncture(&cell(&[0, 1, 2])).unwrap();
        assert_eq!(p.euler_char(), 1);
        assert!(matches!(
            s.puncture(&cell(&[0, 9])),
            Err(Error::UnknownCell(_))
        ));
    }

    #[test]
    fn sphere_links() {
        for d in 1..=4usize {
            let verts: Vec<u32> = (0..=(d as u32 + 1)).collect();
            let s =
                SimplicialComplex::from_facets(verts.iter().copied().combinations(d + 1)).unwrap();
            for c in s.cells() {
                let m = d as i64 - c.dim() as i64 - 1;
                let expected = 1 + if m.rem_euclid(2) == 0 { 1 } else { -1 };
                assert_eq!(s.link(c).unwrap().euler_char(), expected);
            }
        }
    }
}
