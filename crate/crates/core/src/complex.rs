//! Simplicial complexes and simple graphs on a 1-based ground set `[n]`.
//!
//! A complex is stored through its facets. The *void* complex has no faces at
//! all; the *empty* complex has exactly one face, `∅`. Ground-set elements that
//! lie in no face are allowed, so induced subcomplexes on arbitrary vertex sets
//! stay well defined.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A face as an ascending, duplicate-free list of 1-based vertices.
pub type Face = Vec<usize>;

/// True if sorted `a` is a subset of sorted `b`.
pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

fn normalize_face(mut f: Face) -> Face {
    f.sort_unstable();
    f.dedup();
    f
}

/// Keeps inclusion-maximal faces and sorts them lexicographically.
fn maximal_faces(faces: impl IntoIterator<Item = Face>) -> Vec<Face> {
    let mut faces: Vec<Face> = faces.into_iter().map(normalize_face).collect();
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    // only strictly larger faces can absorb a face once duplicates are gone
    let mut larger_end = 0;
    for (idx, f) in faces.iter().enumerate() {
        if idx > 0 && faces[idx - 1].len() != f.len() {
            larger_end = kept.len();
        }
        if !kept[..larger_end].iter().any(|g| is_subset(f, g)) {
            kept.push(f.clone());
        }
    }
    kept.sort_unstable();
    kept
}

/// All faces of a complex grouped by dimension, each group sorted lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FacePoset {
    nonvoid: bool,
    by_dim: Vec<Vec<Face>>,
}

impl FacePoset {
    fn build(facets: &[Face]) -> Self {
        let nonvoid = !facets.is_empty();
        let top = facets.iter().map(Vec::len).max().unwrap_or(0);
        let mut sets: Vec<HashSet<Face>> = vec![HashSet::new(); top];
        for facet in facets {
            for k in 1..=facet.len() {
                for face in facet.iter().copied().combinations(k) {
                    sets[k - 1].insert(face);
                }
            }
        }
        let by_dim = sets
            .into_iter()
            .map(|s| {
                let mut v: Vec<Face> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        FacePoset { nonvoid, by_dim }
    }

    /// Faces of dimension `dim` (`dim = -1` yields `∅` for a nonvoid complex).
    pub fn faces(&self, dim: isize) -> &[Face] {
        static EMPTY_FACE: OnceLock<Vec<Face>> = OnceLock::new();
        match dim {
            -1 if self.nonvoid => EMPTY_FACE.get_or_init(|| vec![Vec::new()]),
            d if d >= 0 => self.by_dim.get(d as usize).map_or(&[], Vec::as_slice),
            _ => &[],
        }
    }

    /// Highest dimension with a face; `-1` for the empty complex, `None` when void.
    pub fn dim(&self) -> Option<isize> {
        self.nonvoid.then(|| self.by_dim.len() as isize - 1)
    }

    /// `(f_{-1}, f_0, f_1, ...)`.
    pub fn f_vector(&self) -> Vec<usize> {
        std::iter::once(usize::from(self.nonvoid)).chain(self.by_dim.iter().map(Vec::len)).collect()
    }

    /// Index of `face` within its dimension group.
    pub fn index_of(&self, face: &[usize]) -> Option<usize> {
        if face.is_empty() {
            return self.nonvoid.then_some(0);
        }
        self.by_dim.get(face.len() - 1)?.binary_search_by(|f| f.as_slice().cmp(face)).ok()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        self.index_of(face).is_some()
    }

    pub fn len(&self) -> usize {
        self.f_vector().iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        !self.nonvoid
    }

    /// Reduced Euler characteristic `Σ_{i≥-1} (-1)^i f_i`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { -(f as i64) } else { f as i64 })
            .sum()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct FacetList {
    n: usize,
    facets: Vec<Face>,
}

/// A finite abstract simplicial complex on the ground set `[n]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "FacetList", into = "FacetList")]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
    poset: OnceLock<FacePoset>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl TryFrom<FacetList> for SimplicialComplex {
    type Error = Error;
    fn try_from(f: FacetList) -> Result<Self> {
        SimplicialComplex::from_facets(f.n, f.facets)
    }
}

impl From<SimplicialComplex> for FacetList {
    fn from(c: SimplicialComplex) -> Self {
        FacetList { n: c.n, facets: c.facets }
    }
}

impl SimplicialComplex {
    /// Builds a complex from arbitrary faces; duplicates and non-maximal faces are dropped.
    pub fn from_facets(n: usize, facets: impl IntoIterator<Item = Face>) -> Result<Self> {
        let facets: Vec<Face> = facets.into_iter().collect();
        for &v in facets.iter().flatten() {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(Self::from_valid(n, facets))
    }

    fn from_valid(n: usize, facets: impl IntoIterator<Item = Face>) -> Self {
        SimplicialComplex { n, facets: maximal_faces(facets), poset: OnceLock::new() }
    }

    /// The complex with no faces.
    pub fn void(n: usize) -> Self {
        Self::from_valid(n, [])
    }

    /// The complex `{∅}`.
    pub fn empty(n: usize) -> Self {
        Self::from_valid(n, [Vec::new()])
    }

    /// The full simplex on `[n]`.
    pub fn simplex(n: usize) -> Self {
        Self::from_valid(n, [(1..=n).collect()])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// The face poset, computed on first use.
    pub fn faces(&self) -> &FacePoset {
        self.poset.get_or_init(|| FacePoset::build(&self.facets))
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces().f_vector()
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let face = normalize_face(face.to_vec());
        self.facets.iter().any(|f| is_subset(&face, f))
    }

    /// Vertices of `[n]` that are faces.
    pub fn vertices(&self) -> Vec<usize> {
        self.facets.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    /// Same faces on a larger ground set.
    pub fn with_ground_size(&self, n: usize) -> Result<Self> {
        Self::from_facets(n, self.facets.clone())
    }

    /// Faces contained in `w`, on the ground set `w` relabelled `1..=|w|` in ascending order.
    pub fn induced(&self, w: &[usize]) -> Self {
        let w = normalize_face(w.to_vec());
        let relabel: HashMap<usize, usize> = w.iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().filter_map(|v| relabel.get(v).copied()).collect::<Face>());
        Self::from_valid(w.len(), facets.collect::<Vec<_>>())
    }

    /// Faces contained in `w`, keeping the original labels and ground set.
    pub fn restrict(&self, w: &[usize]) -> Self {
        let keep: HashSet<usize> = w.iter().copied().collect();
        let facets = self.facets.iter().map(|f| f.iter().copied().filter(|v| keep.contains(v)).collect::<Face>());
        Self::from_valid(self.n, facets.collect::<Vec<_>>())
    }

    /// `Δ - x`: faces avoiding vertex `x`, original labels kept.
    pub fn delete_vertex(&self, x: usize) -> Self {
        let facets = self.facets.iter().map(|f| f.iter().copied().filter(|&v| v != x).collect::<Face>());
        Self::from_valid(self.n, facets.collect::<Vec<_>>())
    }

    /// `{G : G ∪ face ∈ Δ, G ∩ face = ∅}` on the same ground set.
    pub fn link(&self, face: &[usize]) -> Result<Self> {
        let face = normalize_face(face.to_vec());
        if !self.contains_face(&face) {
            return Err(Error::NotAFace(face));
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| is_subset(&face, f))
            .map(|f| f.iter().copied().filter(|v| face.binary_search(v).is_err()).collect::<Face>());
        Ok(Self::from_valid(self.n, facets.collect::<Vec<_>>()))
    }

    /// Join with `other`, whose vertices are shifted by `self.n()`.
    pub fn join(&self, other: &Self) -> Self {
        let shift = self.n;
        let facets = self
            .facets
            .iter()
            .cartesian_product(&other.facets)
            .map(|(f, g)| f.iter().copied().chain(g.iter().map(|v| v + shift)).collect::<Face>());
        Self::from_valid(self.n + other.n, facets.collect::<Vec<_>>())
    }

    /// Union of face sets on the larger of the two ground sets.
    pub fn union(&self, other: &Self) -> Self {
        let facets = self.facets.iter().chain(&other.facets).cloned().collect::<Vec<_>>();
        Self::from_valid(self.n.max(other.n), facets)
    }

    /// Inclusion-minimal non-faces, sorted by size and then lexicographically.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![Vec::new()];
        }
        let poset = self.faces();
        let vertices = self.vertices();
        let mut out: Vec<Face> =
            (1..=self.n).filter(|v| vertices.binary_search(v).is_err()).map(|v| vec![v]).collect();
        let adj = self.one_skeleton().adjacency_matrix();
        for (&u, &v) in vertices.iter().tuple_combinations() {
            if !adj[u][v] {
                out.push(vec![u, v]);
            }
        }
        // a minimal non-face of size k ≥ 3 is F = G ∪ {v} with G = F - max(F) a face
        let top = poset.dim().unwrap_or(-1);
        for k in 3..=(top + 2).max(0) as usize {
            for g in poset.faces(k as isize - 2) {
                let last = *g.last().expect("face of dimension ≥ 1");
                for v in (last + 1)..=self.n {
                    if !g.iter().all(|&u| adj[u][v]) {
                        continue;
                    }
                    let mut f = g.clone();
                    f.push(v);
                    if poset.contains(&f) {
                        continue;
                    }
                    let all_proper_faces = (0..f.len() - 1).all(|skip| {
                        let sub: Face = f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
                        poset.contains(&sub)
                    });
                    if all_proper_faces {
                        out.push(f);
                    }
                }
            }
        }
        out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// `{[n] \ F : F ∉ Δ}`, whose facets are the complements of the minimal non-faces.
    pub fn alexander_dual(&self) -> Self {
        let facets = self
            .minimal_nonfaces()
            .into_iter()
            .map(|f| (1..=self.n).filter(|v| f.binary_search(v).is_err()).collect::<Face>());
        Self::from_valid(self.n, facets.collect::<Vec<_>>())
    }

    /// Flagness with a minimal non-face of size ≥ 3 as witness when it fails.
    pub fn is_flag(&self) -> FlagCheck {
        let witness = self.minimal_nonfaces().into_iter().find(|f| f.len() >= 3);
        FlagCheck { flag: witness.is_none(), witness }
    }

    /// Flagness via the clique characterization: every maximal clique of the
    /// 1-skeleton must be a face.
    pub fn is_flag_by_cliques(&self) -> bool {
        if self.is_void() {
            return true;
        }
        let skeleton = self.one_skeleton();
        let vertices = self.vertices();
        skeleton
            .maximal_cliques()
            .into_iter()
            .filter(|c| c.len() > 1 || c.first().is_some_and(|v| vertices.binary_search(v).is_ok()))
            .all(|c| self.contains_face(&c))
    }

    pub fn one_skeleton(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for f in &self.facets {
            for (&u, &v) in f.iter().tuple_combinations() {
                edges.insert((u, v));
            }
        }
        Graph { n: self.n, edges }
    }

    /// Boundary of the `d`-simplex on vertices `1..=d+1`, a `(d-1)`-sphere.
    pub fn boundary_of_simplex(d: usize) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidDimension { dim: d, reason: "simplex boundary needs d >= 1" });
        }
        let facets = (1..=d + 1).combinations(d).collect::<Vec<_>>();
        Ok(Self::from_valid(d + 1, facets))
    }

    /// Order complex of the nonempty faces. Vertex `k` of the result is the
    /// `k`-th nonempty face in (dimension, lexicographic) order.
    pub fn barycentric_subdivision(&self) -> Self {
        if self.is_void() {
            return Self::void(0);
        }
        let poset = self.faces();
        let labels: HashMap<&[usize], usize> = (0..=poset.dim().unwrap_or(-1))
            .flat_map(|d| poset.faces(d))
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i + 1))
            .collect();
        let mut chains = Vec::new();
        for facet in &self.facets {
            for order in facet.iter().copied().permutations(facet.len()) {
                let chain = (1..=order.len())
                    .map(|k| {
                        let f = normalize_face(order[..k].to_vec());
                        labels[f.as_slice()]
                    })
                    .collect::<Face>();
                chains.push(chain);
            }
        }
        if chains.is_empty() {
            return Self::empty(0);
        }
        Self::from_valid(labels.len(), chains)
    }

    /// Boundary of the `(dim+1)`-cross-polytope: faces meet every pair in at most one vertex.
    pub fn octahedral_sphere(dim: usize, pairing: &[(usize, usize)]) -> Result<Self> {
        if pairing.len() != dim + 1 {
            return Err(Error::MalformedPairing(format!(
                "a {dim}-dimensional octahedral sphere needs {} pairs, got {}",
                dim + 1,
                pairing.len()
            )));
        }
        let mut seen = HashSet::new();
        for &(a, b) in pairing {
            for v in [a, b] {
                if v == 0 {
                    return Err(Error::MalformedPairing("vertices are 1-based".into()));
                }
                if !seen.insert(v) {
                    return Err(Error::MalformedPairing(format!("vertex {v} repeated")));
                }
            }
        }
        let n = seen.into_iter().max().unwrap_or(0);
        let facets = pairing.iter().map(|&(a, b)| [a, b]).multi_cartesian_product().collect::<Vec<_>>();
        Ok(Self::from_valid(n, facets))
    }

    /// Faces are the independent sets of `g`.
    pub fn independence_complex(g: &Graph) -> Self {
        Self::clique_complex(&g.complement())
    }

    /// Faces are the cliques of `g`.
    pub fn clique_complex(g: &Graph) -> Self {
        if g.n == 0 {
            return Self::empty(0);
        }
        Self::from_valid(g.n, g.maximal_cliques())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagCheck {
    pub flag: bool,
    pub witness: Option<Face>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// A simple graph on `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EdgeList", into = "EdgeList")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;
    fn try_from(e: EdgeList) -> Result<Self> {
        Graph::new(e.n, e.edges)
    }
}

impl From<Graph> for EdgeList {
    fn from(g: Graph) -> Self {
        EdgeList { n: g.n, edges: g.edges.into_iter().collect() }
    }
}

impl Graph {
    /// Duplicate edges collapse; loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Self {
        Graph { n, edges: (1..=n).tuple_combinations().collect() }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph { n, edges: (1..=n).map(|i| (i.min(i % n + 1), i.max(i % n + 1))).collect() }
    }

    pub fn path(n: usize) -> Self {
        Graph { n, edges: (1..n).map(|i| (i, i + 1)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn complement(&self) -> Self {
        Graph { n: self.n, edges: (1..=self.n).tuple_combinations().filter(|e| !self.edges.contains(e)).collect() }
    }

    /// Row and column 0 are unused.
    pub fn adjacency_matrix(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.n + 1]; self.n + 1];
        for &(u, v) in &self.edges {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        adj
    }

    /// Sorted neighbour lists; index 0 is unused.
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut nbrs = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.edges {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        nbrs.iter_mut().for_each(|l| l.sort_unstable());
        nbrs
    }

    /// BFS distances from `source`; `None` marks unreachable vertices. Index 0 is unused.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        self.bfs(source, &self.neighbours())
    }

    fn bfs(&self, source: usize, nbrs: &[Vec<usize>]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n + 1];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have a distance");
            for &v in &nbrs[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Graph metric; `None` stands for ∞.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    /// Greedy farthest-point selection of `k` vertices, starting from vertex 1 and
    /// breaking ties by lowest index. Returns the vertices in discovery order, or
    /// `None` if some pair ends up closer than `min_dist`.
    pub fn spread_subset(&self, k: usize, min_dist: usize) -> Option<Vec<usize>> {
        if k == 0 || k > self.n {
            return None;
        }
        let nbrs = self.neighbours();
        let mut chosen = vec![1];
        // usize::MAX encodes ∞
        let mut nearest: Vec<usize> =
            self.bfs(1, &nbrs).into_iter().map(|d| d.unwrap_or(usize::MAX)).collect();
        while chosen.len() < k {
            let (best, score) = (1..=self.n)
                .filter(|v| !chosen.contains(v))
                .map(|v| (v, nearest[v]))
                .fold((0, 0), |acc, (v, s)| if acc.0 == 0 || s > acc.1 { (v, s) } else { acc });
            if score < min_dist {
                return None;
            }
            chosen.push(best);
            for (slot, d) in nearest.iter_mut().zip(self.bfs(best, &nbrs)) {
                *slot = (*slot).min(d.unwrap_or(usize::MAX));
            }
        }
        Some(chosen)
    }

    /// Maximal cliques (Bron–Kerbosch with pivoting), each sorted, in lexicographic order.
    pub fn maximal_cliques(&self) -> Vec<Face> {
        let adj = self.adjacency_matrix();
        let mut out = Vec::new();
        let candidates: Vec<usize> = (1..=self.n).collect();
        bron_kerbosch(&adj, &mut Vec::new(), candidates, Vec::new(), &mut out);
        out.iter_mut().for_each(|c| c.sort_unstable());
        out.sort_unstable();
        out
    }
}

fn bron_kerbosch(adj: &[Vec<bool>], r: &mut Vec<usize>, mut p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Face>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| (p.iter().filter(|&&v| adj[u][v]).count(), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    let branch: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in branch {
        r.push(v);
        let p_next = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let x_next = x.iter().copied().filter(|&u| adj[v][u]).collect();
        bron_kerbosch(adj, r, p_next, x_next, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn from_facets_dedups_and_maximalizes() {
        assert_eq!(c(3, &[&[1, 2], &[2, 3], &[1, 2]]).facets(), &[vec![1, 2], vec![2, 3]]);
        assert_eq!(c(3, &[&[1, 2, 3], &[1, 2]]).facets(), &[vec![1, 2, 3]]);
        let empty = c(2, &[&[]]);
        assert_eq!(empty.facets(), &[Vec::<usize>::new()]);
        assert_ne!(empty, SimplicialComplex::void(2));
        assert_eq!(empty.dim(), Some(-1));
        assert_eq!(SimplicialComplex::void(2).dim(), None);
        assert!(matches!(
            SimplicialComplex::from_facets(2, [vec![1, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 2 })
        ));
    }

    #[test]
    fn independence_complexes() {
        let g = Graph::new(2, [(1, 2)]).unwrap();
        assert_eq!(SimplicialComplex::independence_complex(&g).facets(), &[vec![1], vec![2]]);
        assert_eq!(SimplicialComplex::independence_complex(&Graph::empty(3)).facets(), &[vec![1, 2, 3]]);
        // brute force over all subsets of C5
        let c5 = Graph::cycle(5);
        let ind = SimplicialComplex::independence_complex(&c5);
        let expected: Vec<Face> = (1..=5usize)
            .tuple_combinations()
            .filter(|&(u, v)| !c5.has_edge(u, v))
            .map(|(u, v)| vec![u, v])
            .collect();
        assert_eq!(ind.facets(), expected.as_slice());
        assert_eq!(expected.len(), 5);
    }

    #[test]
    fn induced_subcomplexes() {
        let c5 = SimplicialComplex::clique_complex(&Graph::cycle(5));
        let path = c5.induced(&[2, 3, 4]);
        assert_eq!(path.facets(), &[vec![1, 2], vec![2, 3]]);
        assert_eq!(c5.induced(&[]), SimplicialComplex::empty(0));
        assert_eq!(c5.induced(&[1, 3]).facets(), &[vec![1], vec![2]]);
    }

    #[test]
    fn links() {
        let tri = SimplicialComplex::boundary_of_simplex(2).unwrap();
        assert_eq!(tri.link(&[]).unwrap(), tri);
        assert_eq!(tri.link(&[1]).unwrap().facets(), &[vec![2], vec![3]]);
        assert!(matches!(tri.link(&[1, 2, 3]), Err(Error::NotAFace(_))));
        let oct = SimplicialComplex::octahedral_sphere(2, &[(1, 2), (3, 4), (5, 6)]).unwrap();
        let lk = oct.link(&[1]).unwrap();
        // a 4-cycle on 3,5,4,6
        assert_eq!(lk.facets(), &[vec![3, 5], vec![3, 6], vec![4, 5], vec![4, 6]]);
    }

    #[test]
    fn joins() {
        let c3 = SimplicialComplex::boundary_of_simplex(2).unwrap();
        let c6 = c3.barycentric_subdivision();
        let j = c3.join(&c6);
        assert_eq!(j.n(), 9);
        assert_eq!(j.facets().len(), 18);
        assert!(j.facets().iter().all(|f| f.len() == 4));
        let point = c(1, &[&[1]]);
        let cone = point.join(&c3);
        assert!(cone.facets().iter().all(|f| f[0] == 1));
        assert_eq!(SimplicialComplex::empty(0).join(&SimplicialComplex::empty(0)), SimplicialComplex::empty(0));
    }

    #[test]
    fn simplex_boundaries() {
        assert_eq!(SimplicialComplex::boundary_of_simplex(1).unwrap().facets(), &[vec![1], vec![2]]);
        assert_eq!(SimplicialComplex::boundary_of_simplex(2).unwrap().facets().len(), 3);
        let tet = SimplicialComplex::boundary_of_simplex(3).unwrap();
        assert_eq!(tet.f_vector(), vec![1, 4, 6, 4]);
        assert!(SimplicialComplex::boundary_of_simplex(0).is_err());
    }

    #[test]
    fn subdivisions() {
        let c3 = SimplicialComplex::boundary_of_simplex(2).unwrap();
        let sd = c3.barycentric_subdivision();
        assert_eq!(sd.f_vector(), vec![1, 6, 6]);
        assert_eq!(sd.one_skeleton(), Graph::new(6, [(1, 4), (1, 5), (2, 4), (2, 6), (3, 5), (3, 6)]).unwrap());
        let oct = SimplicialComplex::octahedral_sphere(2, &[(1, 2), (3, 4), (5, 6)]).unwrap();
        assert_eq!(oct.f_vector(), vec![1, 6, 12, 8]);
        assert_eq!(oct.barycentric_subdivision().f_vector(), vec![1, 26, 72, 48]);
        assert_eq!(c(1, &[&[1]]).barycentric_subdivision(), c(1, &[&[1]]));
    }

    #[test]
    fn octahedral_spheres() {
        let sq = SimplicialComplex::octahedral_sphere(1, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(sq, SimplicialComplex::clique_complex(&Graph::new(4, [(1, 3), (3, 2), (2, 4), (4, 1)]).unwrap()));
        let o3 = SimplicialComplex::octahedral_sphere(3, &[(1, 2), (3, 4), (5, 6), (7, 8)]).unwrap();
        assert_eq!(o3.facets().len(), 16);
        // k-faces: 2^(k+1) C(d+1, k+1)
        assert_eq!(o3.f_vector(), vec![1, 8, 24, 32, 16]);
        assert!(o3.is_flag().flag);
        assert!(SimplicialComplex::octahedral_sphere(3, &[(1, 2), (3, 4)]).is_err());
        assert!(SimplicialComplex::octahedral_sphere(1, &[(1, 2), (2, 3)]).is_err());
    }

    #[test]
    fn alexander_duals() {
        let two_points = c(2, &[&[1], &[2]]);
        // the only non-face is {1,2}, whose complement is ∅
        assert_eq!(two_points.alexander_dual(), SimplicialComplex::empty(2));
        let c4 = SimplicialComplex::clique_complex(&Graph::cycle(4));
        let dual = c4.alexander_dual();
        for mask in 0u32..16 {
            let f: Face = (1..=4).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            let comp: Face = (1..=4).filter(|v| mask >> (v - 1) & 1 == 0).collect();
            assert_eq!(dual.contains_face(&f), !c4.contains_face(&comp), "{f:?}");
        }
        assert_eq!(dual.facets(), &[vec![1, 3], vec![2, 4]]);
        assert!(SimplicialComplex::simplex(3).alexander_dual().is_void());
        assert_eq!(SimplicialComplex::void(3).alexander_dual(), SimplicialComplex::simplex(3));
    }

    #[test]
    fn flagness() {
        let c3 = SimplicialComplex::boundary_of_simplex(2).unwrap();
        assert_eq!(c3.is_flag(), FlagCheck { flag: false, witness: Some(vec![1, 2, 3]) });
        assert!(!c3.is_flag_by_cliques());
        let c6 = SimplicialComplex::clique_complex(&Graph::cycle(6));
        assert!(c6.is_flag().flag);
        assert!(SimplicialComplex::boundary_of_simplex(3).unwrap().barycentric_subdivision().is_flag().flag);
    }

    #[test]
    fn minimal_nonfaces_of_join() {
        let c3 = SimplicialComplex::boundary_of_simplex(2).unwrap();
        let j = c3.join(&c3.barycentric_subdivision());
        let mnf = j.minimal_nonfaces();
        assert_eq!(mnf.iter().filter(|f| f.len() == 3).collect::<Vec<_>>(), vec![&vec![1, 2, 3]]);
        // C6 has 15 - 6 = 9 non-edges
        assert_eq!(mnf.iter().filter(|f| f.len() == 2).count(), 9);
        assert_eq!(mnf.len(), 10);
        assert!(SimplicialComplex::simplex(4).minimal_nonfaces().is_empty());
    }

    #[test]
    fn ghost_vertices_are_nonfaces() {
        let d = c(3, &[&[1, 2]]);
        assert_eq!(d.minimal_nonfaces(), vec![vec![3]]);
    }

    #[test]
    fn distances_and_spread() {
        let p4 = Graph::path(4);
        assert_eq!(p4.distance(1, 4), Some(3));
        let split = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(split.distance(1, 4), None);
        assert_eq!(Graph::cycle(6).spread_subset(2, 3), Some(vec![1, 4]));
        assert_eq!(Graph::cycle(6).spread_subset(3, 3), None);
        assert_eq!(split.spread_subset(2, 5), Some(vec![1, 3]));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
            let m = pairs.len();
            prop::collection::vec(any::<bool>(), m).prop_map(move |bits| {
                Graph::new(n, pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| *e)).unwrap()
            })
        })
    }

    fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::btree_set(1..=n, 0..=n), 1..6).prop_map(move |fs| {
                SimplicialComplex::from_facets(n, fs.into_iter().map(|s| s.into_iter().collect())).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn independence_faces_are_independent_sets(g in arb_graph(8)) {
            let d = SimplicialComplex::independence_complex(&g);
            for mask in 0u32..(1 << g.n()) {
                let f: Face = (1..=g.n()).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                let independent = f.iter().tuple_combinations().all(|(&u, &v)| !g.has_edge(u, v));
                prop_assert_eq!(d.contains_face(&f), independent);
            }
            let mnf = d.minimal_nonfaces();
            let edges: Vec<Face> = g.edges().map(|(u, v)| vec![u, v]).collect();
            prop_assert_eq!(mnf, edges);
        }

        #[test]
        fn induced_composes(d in arb_complex(7), mask in any::<u32>(), sub in any::<u32>()) {
            let w: Face = (1..=d.n()).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            let picks: Vec<usize> = (1..=w.len()).filter(|i| sub >> (i - 1) & 1 == 1).collect();
            let w2: Face = picks.iter().map(|&i| w[i - 1]).collect();
            prop_assert_eq!(d.induced(&w).induced(&picks), d.induced(&w2));
        }

        #[test]
        fn dual_is_involution(d in arb_complex(7)) {
            let dual = d.alexander_dual();
            prop_assume!(!d.is_void() && !dual.is_void());
            prop_assert_eq!(dual.alexander_dual(), d.clone());
            for mask in 0u32..(1 << d.n()) {
                let f: Face = (1..=d.n()).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                let comp: Face = (1..=d.n()).filter(|v| mask >> (v - 1) & 1 == 0).collect();
                prop_assert_eq!(dual.contains_face(&f), !d.contains_face(&comp));
            }
        }

        #[test]
        fn minimal_nonfaces_by_brute_force(d in arb_complex(7)) {
            let mut expected = Vec::new();
            for mask in 0u32..(1 << d.n()) {
                let f: Face = (1..=d.n()).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                let minimal = !d.contains_face(&f)
                    && (0..f.len()).all(|s| {
                        let sub: Face = f.iter().enumerate().filter(|&(i, _)| i != s).map(|(_, &x)| x).collect();
                        d.contains_face(&sub)
                    });
                if minimal {
                    expected.push(f);
                }
            }
            expected.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            prop_assert_eq!(d.minimal_nonfaces(), expected);
        }

        #[test]
        fn flag_checks_agree(d in arb_complex(7)) {
            prop_assert_eq!(d.is_flag().flag, d.is_flag_by_cliques());
        }

        #[test]
        fn subdivisions_are_flag(d in arb_complex(5)) {
            let sd = d.barycentric_subdivision();
            prop_assert!(sd.is_flag().flag);
            prop_assert!(sd.is_flag_by_cliques());
        }
    }
}
