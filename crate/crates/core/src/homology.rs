//! Reduced simplicial homology with field coefficients.
//!
//! Chain groups run from degree -1 (spanned by `∅`) up to the dimension of the
//! complex. The boundary of a face drops its `k`-th smallest vertex with sign
//! `(-1)^k`; the augmentation `∂_0` sends every vertex to `∅`.

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::linalg::{rank, FieldSpec, SparseMatrix};

/// Complexes of higher dimension are refused.
pub const MAX_HOMOLOGY_DIM: isize = 32;

/// A simplex representation that can list its codimension-one faces.
pub(crate) trait Simplex: Ord + Clone {
    /// Faces obtained by dropping the `k`-th smallest vertex, with sign `(-1)^k`.
    fn boundary_terms(&self) -> Vec<(Self, i64)>;
}

impl Simplex for Face {
    fn boundary_terms(&self) -> Vec<(Self, i64)> {
        (0..self.len())
            .map(|k| {
                let mut sub = self.clone();
                sub.remove(k);
                (sub, if k % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    }
}

impl Simplex for u64 {
    fn boundary_terms(&self) -> Vec<(Self, i64)> {
        let mut out = Vec::with_capacity(self.count_ones() as usize);
        let mut rest = *self;
        let mut k = 0;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            out.push((self ^ bit, if k % 2 == 0 { 1 } else { -1 }));
            rest ^= bit;
            k += 1;
        }
        out
    }
}

fn field_sign(sign: i64, field: FieldSpec) -> i64 {
    match field {
        FieldSpec::Prime(p) => sign.rem_euclid(p as i64),
        FieldSpec::Rationals => sign,
    }
}

/// Boundary map from `upper` (faces of one size) to `lower` (faces one smaller).
/// Both lists must be sorted, and `lower` must contain every boundary face.
pub(crate) fn boundary_between<F: Simplex>(lower: &[F], upper: &[F], field: FieldSpec) -> SparseMatrix {
    let mut entries = Vec::new();
    for (col, face) in upper.iter().enumerate() {
        for (sub, sign) in face.boundary_terms() {
            let row = lower.binary_search(&sub).expect("face list closed under taking subfaces");
            entries.push((row, col, field_sign(sign, field)));
        }
    }
    entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
    SparseMatrix::from_trusted(lower.len(), upper.len(), entries)
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, ...` for degree-indexed face lists,
/// `groups[k]` holding the faces of dimension `k - 1`.
pub(crate) fn betti_of_groups<F: Simplex>(groups: &[Vec<F>], field: FieldSpec) -> ReducedBetti {
    if groups.is_empty() || groups[0].is_empty() {
        return ReducedBetti::default();
    }
    assert!(
        groups.len() as isize - 2 <= MAX_HOMOLOGY_DIM,
        "complex of dimension {} exceeds the homology cap {MAX_HOMOLOGY_DIM}",
        groups.len() as isize - 2
    );
    let boundaries: Vec<SparseMatrix> =
        groups.windows(2).map(|w| boundary_between(&w[0], &w[1], field)).collect();
    if cfg!(debug_assertions) {
        for pair in boundaries.windows(2) {
            assert!(pair[0].mul(&pair[1]).is_zero_in(field), "boundary of a boundary is nonzero");
        }
    }
    // ranks[k] = rank of the map out of groups[k]
    let mut ranks: Vec<usize> = std::iter::once(0).chain(boundaries.iter().map(|b| rank(b, field))).collect();
    ranks.push(0);
    let values: Vec<usize> = groups
        .iter()
        .enumerate()
        .map(|(k, g)| g.len() - ranks[k] - ranks[k + 1])
        .collect();
    let betti = ReducedBetti { values };
    let euler: i64 = groups.iter().enumerate().map(|(k, g)| alternating(k, g.len())).sum();
    assert_eq!(betti.euler_characteristic(), euler, "Euler-Poincare identity violated");
    betti
}

/// `(-1)^(k-1) * x` for the group at offset `k` (dimension `k - 1`).
fn alternating(k: usize, x: usize) -> i64 {
    if k % 2 == 0 {
        -(x as i64)
    } else {
        x as i64
    }
}

/// Reduced Betti numbers indexed from degree -1; missing degrees are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedBetti {
    values: Vec<usize>,
}

impl ReducedBetti {
    pub fn get(&self, degree: isize) -> usize {
        usize::try_from(degree + 1).ok().and_then(|i| self.values.get(i).copied()).unwrap_or(0)
    }

    /// `(degree, β̃_degree)` for degrees -1 and up.
    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.values.iter().enumerate().map(|(i, &b)| (i as isize - 1, b))
    }

    /// `(degree, β̃)` for nonzero entries.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.iter().filter(|&(_, b)| b != 0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.values.iter().all(|&b| b == 0)
    }

    /// `Σ (-1)^i β̃_i`, equal to the reduced Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.values.iter().enumerate().map(|(k, &b)| alternating(k, b)).sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.values
    }
}

/// Faces of `d` grouped from dimension -1 upward.
fn face_groups(d: &SimplicialComplex) -> Vec<Vec<Face>> {
    let poset = d.faces();
    match poset.dim() {
        None => Vec::new(),
        Some(top) => (-1..=top).map(|k| poset.faces(k).to_vec()).collect(),
    }
}

/// Augmented chain complex of a simplicial complex over a field.
#[derive(Clone, Debug)]
pub struct ChainComplexData {
    field: FieldSpec,
    groups: Vec<Vec<Face>>,
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplexData {
    pub fn new(d: &SimplicialComplex, field: FieldSpec) -> Self {
        let groups = face_groups(d);
        let boundaries = groups.windows(2).map(|w| boundary_between(&w[0], &w[1], field)).collect();
        ChainComplexData { field, groups, boundaries }
    }

    /// Faces of dimension `dim`, `dim >= -1`.
    pub fn faces(&self, dim: isize) -> &[Face] {
        usize::try_from(dim + 1).ok().and_then(|i| self.groups.get(i)).map_or(&[], Vec::as_slice)
    }

    /// `∂_i : C_i → C_{i-1}` for `i >= 0`.
    pub fn boundary(&self, i: usize) -> SparseMatrix {
        self.boundaries
            .get(i)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zeros(self.faces(i as isize - 1).len(), self.faces(i as isize).len()))
    }

    /// True if every composite `∂_{i-1} ∘ ∂_i` vanishes in the coefficient field.
    pub fn is_chain_complex(&self) -> bool {
        self.boundaries.windows(2).all(|p| p[0].mul(&p[1]).is_zero_in(self.field))
    }
}

/// Boundary map `∂_i` of `d` with rows indexed by `(i-1)`-faces and columns by `i`-faces,
/// both in lexicographic order.
pub fn boundary_matrix(d: &SimplicialComplex, i: usize, field: FieldSpec) -> SparseMatrix {
    let poset = d.faces();
    boundary_between(poset.faces(i as isize - 1), poset.faces(i as isize), field)
}

/// `β̃_i(d; field)`.
pub fn reduced_betti(d: &SimplicialComplex, i: isize, field: FieldSpec) -> usize {
    all_reduced_betti(d, field).get(i)
}

/// Every reduced Betti number of `d`, each boundary rank computed once.
pub fn all_reduced_betti(d: &SimplicialComplex, field: FieldSpec) -> ReducedBetti {
    betti_of_groups(&face_groups(d), field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Graph;
    use proptest::prelude::*;

    const FIELDS: [FieldSpec; 3] = [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Q];

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn augmentation_and_edge_boundary() {
        let pts = cx(3, &[&[1], &[2], &[3]]);
        let d0 = boundary_matrix(&pts, 0, FieldSpec::Q);
        assert_eq!((d0.rows(), d0.cols()), (1, 3));
        assert_eq!(d0.entries(), &[(0, 0, 1), (0, 1, 1), (0, 2, 1)]);
        let edge = cx(2, &[&[1, 2]]);
        let d1 = boundary_matrix(&edge, 1, FieldSpec::Q);
        assert_eq!(d1.entries(), &[(0, 0, -1), (1, 0, 1)]);
        let d1 = boundary_matrix(&edge, 1, FieldSpec::GF2);
        assert_eq!(d1.entries(), &[(0, 0, 1), (1, 0, 1)]);
    }

    #[test]
    fn chain_condition_on_solid_tetrahedron() {
        let tet = SimplicialComplex::simplex(4);
        for f in FIELDS {
            let cc = ChainComplexData::new(&tet, f);
            assert!(cc.is_chain_complex());
            assert!(cc.boundary(1).mul(&cc.boundary(2)).is_zero_in(f));
            assert_eq!(cc.boundary(2).cols(), 4);
        }
    }

    #[test]
    fn circles_and_spheres() {
        let c5 = SimplicialComplex::clique_complex(&Graph::cycle(5));
        let oct = SimplicialComplex::octahedral_sphere(3, &[(1, 2), (3, 4), (5, 6), (7, 8)]).unwrap();
        for f in FIELDS {
            assert_eq!(reduced_betti(&c5, 0, f), 0);
            assert_eq!(reduced_betti(&c5, 1, f), 1);
            let b = all_reduced_betti(&oct, f);
            assert_eq!(b.nonzero().collect::<Vec<_>>(), vec![(3, 1)]);
        }
    }

    #[test]
    fn conventions_for_degenerate_complexes() {
        let empty = SimplicialComplex::empty(2);
        assert_eq!(reduced_betti(&empty, -1, FieldSpec::GF2), 1);
        assert_eq!(reduced_betti(&empty, 0, FieldSpec::GF2), 0);
        assert!(all_reduced_betti(&SimplicialComplex::void(2), FieldSpec::Q).is_acyclic());
        assert!(all_reduced_betti(&cx(1, &[&[1]]), FieldSpec::Q).is_acyclic());
        let two = all_reduced_betti(&cx(2, &[&[1], &[2]]), FieldSpec::GF2);
        assert_eq!(two.as_slice(), &[0, 1]);
    }

    #[test]
    fn join_of_triangle_and_hexagon_is_a_three_sphere() {
        let c3 = SimplicialComplex::boundary_of_simplex(2).unwrap();
        let j = c3.join(&c3.barycentric_subdivision());
        for f in FIELDS {
            let b = all_reduced_betti(&j, f);
            assert_eq!(b.nonzero().collect::<Vec<_>>(), vec![(3, 1)]);
            assert_eq!(b.euler_characteristic(), j.faces().reduced_euler_characteristic());
        }
        // unreduced: χ = Σ_{i≥0} (-1)^i f_i = 1 + Σ (-1)^i β̃_i
        let f = j.f_vector();
        let chi: i64 = f[1..].iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        assert_eq!(chi, 0);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex RP^2
        let rp2 = cx(
            6,
            &[
                &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
                &[2, 3, 5], &[2, 4, 5], &[2, 4, 6], &[3, 4, 6], &[3, 5, 6],
            ],
        );
        assert_eq!(all_reduced_betti(&rp2, FieldSpec::GF2).as_slice(), &[0, 0, 1, 1]);
        assert!(all_reduced_betti(&rp2, FieldSpec::GF3).is_acyclic());
        assert!(all_reduced_betti(&rp2, FieldSpec::Q).is_acyclic());
    }

    #[test]
    fn mask_and_vector_faces_agree() {
        let c5 = SimplicialComplex::clique_complex(&Graph::cycle(5));
        let groups: Vec<Vec<u64>> = face_groups(&c5)
            .iter()
            .map(|g| {
                let mut v: Vec<u64> = g.iter().map(|f| f.iter().map(|&x| 1u64 << (x - 1)).sum()).collect();
                v.sort_unstable();
                v
            })
            .collect();
        for f in FIELDS {
            assert_eq!(betti_of_groups(&groups, f), all_reduced_betti(&c5, f));
        }
    }

    fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::btree_set(1..=n, 0..=n), 1..7).prop_map(move |fs| {
                SimplicialComplex::from_facets(n, fs.into_iter().map(|s| s.into_iter().collect())).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn cones_are_acyclic(d in arb_complex(6)) {
            let apex = cx(1, &[&[1]]);
            let cone = apex.join(&d);
            for f in FIELDS {
                prop_assert!(all_reduced_betti(&cone, f).is_acyclic());
            }
        }

        #[test]
        fn euler_poincare(d in arb_complex(7)) {
            for f in FIELDS {
                let b = all_reduced_betti(&d, f);
                prop_assert_eq!(b.euler_characteristic(), d.faces().reduced_euler_characteristic());
            }
        }

        #[test]
        fn chain_condition(d in arb_complex(7)) {
            for f in FIELDS {
                prop_assert!(ChainComplexData::new(&d, f).is_chain_complex());
            }
        }

        #[test]
        fn join_shifts_homology(a in arb_complex(4), b in arb_complex(4)) {
            // Künneth for joins over a field: β̃_{k+1}(A*B) = Σ_{i+j=k} β̃_i(A) β̃_j(B)
            let j = a.join(&b);
            for f in FIELDS {
                let (ba, bb, bj) = (all_reduced_betti(&a, f), all_reduced_betti(&b, f), all_reduced_betti(&j, f));
                for k in -1..8isize {
                    let expected: usize = (-1..=k + 1).map(|i| ba.get(i) * bb.get(k - i)).sum();
                    prop_assert_eq!(bj.get(k + 1), expected);
                }
            }
        }
    }
}
