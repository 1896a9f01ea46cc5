//! A deliberately naive Hochster computation, sharing no code with the library:
//! faces are enumerated as bitmasks, boundary matrices are dense, and ranks come
//! from textbook Gaussian elimination mod a prime. Rationals are approximated by
//! a large prime, which is exact for the tiny matrices used here.

use std::collections::BTreeMap;

use proptest::prelude::*;
use strandlab::{hochster_table, t_vector, Convention, FieldSpec, Graph, MonomialIdeal, SimplicialComplex};

const BIG_PRIME: u64 = 1_000_003;

fn naive_rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] % p != 0) else { continue };
        rows.swap(rank, pivot);
        let inv = pow(rows[rank][c], p - 2, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c] * inv % p;
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Reduced Betti numbers of the independence complex of `g` restricted to `w`.
fn naive_reduced_betti(g: &Graph, w: u32, p: u64) -> BTreeMap<i32, usize> {
    let independent = |s: u32| g.edges().all(|(u, v)| s >> (u - 1) & 1 == 0 || s >> (v - 1) & 1 == 0);
    let faces: Vec<u32> = (0..=w).filter(|&s| s & !w == 0 && independent(s)).collect();
    let by_dim = |d: i32| -> Vec<u32> { faces.iter().copied().filter(|s| s.count_ones() as i32 == d + 1).collect() };
    let top = faces.iter().map(|s| s.count_ones() as i32 - 1).max().unwrap_or(-1);
    let rank_of = |d: i32| -> usize {
        // ∂_d : C_d → C_{d-1}
        if d < 0 {
            return 0;
        }
        let (hi, lo) = (by_dim(d), by_dim(d - 1));
        let rows = lo
            .iter()
            .map(|&f| {
                hi.iter()
                    .map(|&s| {
                        if s & f != f {
                            return 0;
                        }
                        let dropped = (s ^ f).trailing_zeros();
                        let below = (s & ((1 << dropped) - 1)).count_ones();
                        if below % 2 == 0 { 1 } else { p - 1 }
                    })
                    .collect()
            })
            .collect();
        naive_rank(rows, p)
    };
    (-1..=top)
        .map(|d| (d, by_dim(d).len() - rank_of(d) - rank_of(d + 1)))
        .filter(|&(_, b)| b > 0)
        .collect()
}

/// Ideal-side table `(i, j) → β_{i,j}` by summing over all vertex subsets.
fn naive_table(g: &Graph, p: u64) -> BTreeMap<(usize, usize), u64> {
    let mut out = BTreeMap::new();
    for w in 0u32..1 << g.n() {
        let j = w.count_ones() as i32;
        for (d, b) in naive_reduced_betti(g, w, p) {
            let i = j - d - 2;
            if i >= 0 {
                *out.entry((i as usize, j as usize)).or_insert(0) += b as u64;
            }
        }
    }
    out
}

fn library_table(g: &Graph, field: FieldSpec) -> BTreeMap<(usize, usize), u64> {
    let t = hochster_table(&SimplicialComplex::independence_complex(g), field, 16).unwrap();
    t.entries(Convention::Ideal).into_iter().map(|(i, j, v)| ((i, j), v)).collect()
}

#[test]
fn frozen_small_tables() {
    let k3 = naive_table(&Graph::complete(3), 2);
    assert_eq!(k3, BTreeMap::from([((0, 2), 3), ((1, 3), 2)]));
    let c5 = naive_table(&Graph::cycle(5), 2);
    assert_eq!(c5, BTreeMap::from([((0, 2), 5), ((1, 3), 5), ((2, 5), 1)]));
    for field in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Q] {
        assert_eq!(library_table(&Graph::complete(3), field), k3);
        assert_eq!(library_table(&Graph::cycle(5), field), c5);
    }
}

#[test]
fn frozen_shift_vectors() {
    let t = |g: &Graph| {
        let table = hochster_table(&SimplicialComplex::independence_complex(g), FieldSpec::GF2, 16).unwrap();
        t_vector(&table).as_slice().to_vec()
    };
    assert_eq!(t(&Graph::complete(3)), vec![Some(0), Some(2), Some(3)]);
    assert_eq!(t(&Graph::cycle(5)), vec![Some(0), Some(2), Some(3), Some(5)]);
}

#[test]
fn stanley_reisner_route_matches_edge_route() {
    let g = Graph::cycle(6);
    let via_ideal = strandlab::complex_of_squarefree_ideal(&MonomialIdeal::edge_ideal(&g)).unwrap();
    assert_eq!(via_ideal, SimplicialComplex::independence_complex(&g));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            Graph::new(n, pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn library_matches_naive_oracle(g in arb_graph(7)) {
        prop_assert_eq!(library_table(&g, FieldSpec::GF2), naive_table(&g, 2));
        prop_assert_eq!(library_table(&g, FieldSpec::GF3), naive_table(&g, 3));
        prop_assert_eq!(library_table(&g, FieldSpec::Q), naive_table(&g, BIG_PRIME));
    }
}
