//! Graded Betti tables of squarefree monomial ideals.
//!
//! Two independent routes compute `β_{i,j}(I_Δ)`:
//!
//! * [`hochster_table`] sums `β̃_{j-i-2}(Δ[W])` over all vertex sets `W` with `|W| = j`;
//! * [`eagon_reiner_table`] sums `β̃_{i-1}(lk_{Δ∨} F)` over faces `F` of the Alexander
//!   dual with `|F| = n - j`.
//!
//! Tables are stored for the ideal `I`. The quotient view `S/I` is obtained by
//! shifting the homological index by one and adding `β_{0,0}(S/I) = 1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, Graph, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{all_reduced_betti, betti_of_groups, ReducedBetti};
use crate::linalg::FieldSpec;

/// Default limit on the ground-set size for full subset sweeps.
pub const DEFAULT_CAP: usize = 16;

/// Hard ceiling for any cap: sweeps keep a membership bitmap over all `2^n` subsets.
pub const MAX_CAP: usize = 30;

/// Which index convention a table view uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `β_{i,j}(I)`.
    Ideal,
    /// `β_{i,j}(S/I)`.
    Quotient,
}

/// Which combinatorial formula computes a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Oracle {
    Hochster,
    Dual,
}

/// Sparse graded Betti numbers `β_{i,j}(I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    n: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(n: usize, field: FieldSpec) -> Self {
        BettiTable { n, field, entries: BTreeMap::new() }
    }

    /// Builds from ideal-convention triples `(i, j, value)`; zero values are dropped.
    pub fn from_entries(n: usize, field: FieldSpec, entries: impl IntoIterator<Item = (usize, usize, u64)>) -> Self {
        let mut t = BettiTable::new(n, field);
        for (i, j, v) in entries {
            t.add(i, j, v);
        }
        t
    }

    fn add(&mut self, i: usize, j: usize, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    fn merge(mut self, other: BettiTable) -> BettiTable {
        for ((i, j), v) in other.entries {
            self.add(i, j, v);
        }
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// `β_{i,j}(I)`.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_{i,j}(S/I)`.
    pub fn quotient(&self, i: usize, j: usize) -> u64 {
        match i {
            0 => u64::from(j == 0),
            _ => self.get(i - 1, j),
        }
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest `i` with some `β_{i,j}(I) ≠ 0`.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Projective dimension of `S/I`.
    pub fn projective_dimension(&self) -> usize {
        self.max_index().map_or(0, |i| i + 1)
    }

    /// Nonzero entries `(i, j, value)` in the given convention, sorted.
    pub fn entries(&self, convention: Convention) -> Vec<(usize, usize, u64)> {
        let ideal = self.entries.iter().map(|(&(i, j), &v)| (i, j, v));
        match convention {
            Convention::Ideal => ideal.collect(),
            Convention::Quotient => std::iter::once((0, 0, 1)).chain(ideal.map(|(i, j, v)| (i + 1, j, v))).collect(),
        }
    }

    /// Entries only, ignoring ground-set size and field.
    pub fn same_entries(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }

    /// Total Betti numbers `Σ_j β_{i,j}` for `i = 0..=max`.
    pub fn totals(&self, convention: Convention) -> Vec<u64> {
        let entries = self.entries(convention);
        let width = entries.iter().map(|e| e.0 + 1).max().unwrap_or(0);
        let mut totals = vec![0; width];
        for (i, _, v) in entries {
            totals[i] += v;
        }
        totals
    }

    /// `{"convention": ..., "entries": [[i, j, v], ...]}`.
    pub fn to_json(&self, convention: Convention) -> serde_json::Value {
        serde_json::json!({
            "convention": convention,
            "entries": self.entries(convention).into_iter().map(|(i, j, v)| [i as u64, j as u64, v]).collect::<Vec<_>>(),
        })
    }

    /// Parses the JSON produced by [`BettiTable::to_json`].
    pub fn from_json(value: &serde_json::Value, n: usize, field: FieldSpec) -> Result<Self> {
        #[derive(Deserialize)]
        struct Wire {
            convention: Convention,
            entries: Vec<(usize, usize, u64)>,
        }
        let wire: Wire = serde_json::from_value(value.clone())?;
        let entries = wire.entries.into_iter().filter_map(|(i, j, v)| match wire.convention {
            Convention::Ideal => Some((i, j, v)),
            Convention::Quotient => (i > 0).then(|| (i - 1, j, v)),
        });
        Ok(BettiTable::from_entries(n, field, entries))
    }

    pub fn to_csv(&self, convention: Convention) -> String {
        let mut out = String::from("i,j,value\n");
        for (i, j, v) in self.entries(convention) {
            let _ = writeln!(out, "{i},{j},{v}");
        }
        out
    }

    /// Betti diagram with columns `i` and rows `j - i`, zeros shown as `.`.
    pub fn to_text(&self, convention: Convention) -> String {
        let entries = self.entries(convention);
        if entries.is_empty() {
            return "(zero ideal)\n".to_string();
        }
        let width = entries.iter().map(|e| e.0).max().unwrap_or(0) + 1;
        let lo = entries.iter().map(|e| e.1 - e.0).min().unwrap_or(0);
        let hi = entries.iter().map(|e| e.1 - e.0).max().unwrap_or(0);
        let lookup: BTreeMap<(usize, usize), u64> = entries.iter().map(|&(i, j, v)| ((i, j - i), v)).collect();
        let totals = self.totals(convention);
        let cell = entries.iter().map(|e| e.2.to_string().len()).chain(totals.iter().map(|t| t.to_string().len())).max().unwrap_or(1);
        let mut out = String::new();
        let _ = write!(out, "{:>7}", "");
        for i in 0..width {
            let _ = write!(out, " {i:>cell$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>7}", "total:");
        for t in &totals {
            let _ = write!(out, " {t:>cell$}");
        }
        out.push('\n');
        for row in lo..=hi {
            let _ = write!(out, "{:>7}", format!("{row}:"));
            for i in 0..width {
                match lookup.get(&(i, row)) {
                    Some(v) => {
                        let _ = write!(out, " {v:>cell$}");
                    }
                    None => {
                        let _ = write!(out, " {:>cell$}", ".");
                    }
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Maximal shifts `t_i = max{j : β_{i,j}(S/I) ≠ 0}` for `i = 0..=pd(S/I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TVector(Vec<Option<usize>>);

impl TVector {
    pub fn new(values: Vec<Option<usize>>) -> Self {
        TVector(values)
    }

    pub fn get(&self, i: usize) -> Option<usize> {
        self.0.get(i).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.0
    }

    /// Defined entries as `(i, t_i)`.
    pub fn defined(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().filter_map(|(i, t)| t.map(|t| (i, t)))
    }
}

pub fn t_vector(table: &BettiTable) -> TVector {
    let mut t = vec![None; table.projective_dimension() + 1];
    t[0] = Some(0);
    for (i, j, _) in table.entries(Convention::Quotient) {
        if i > 0 {
            t[i] = Some(t[i].map_or(j, |x: usize| x.max(j)));
        }
    }
    TVector(t)
}

/// A monomial ideal given by exponent vectors of a minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IdealWire", into = "IdealWire")]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct IdealWire {
    n: usize,
    generators: Vec<Vec<u32>>,
}

impl TryFrom<IdealWire> for MonomialIdeal {
    type Error = Error;
    fn try_from(w: IdealWire) -> Result<Self> {
        MonomialIdeal::new(w.n, w.generators)
    }
}

impl From<MonomialIdeal> for IdealWire {
    fn from(m: MonomialIdeal) -> Self {
        IdealWire { n: m.n, generators: m.generators }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    /// Reduces `generators` to a minimal generating set. An empty list is the zero ideal.
    pub fn new(n: usize, generators: Vec<Vec<u32>>) -> Result<Self> {
        for g in &generators {
            if g.len() != n {
                return Err(Error::Precondition(format!("exponent vector {g:?} has length {} but n = {n}", g.len())));
            }
            if g.iter().all(|&e| e == 0) {
                return Err(Error::UnitIdeal);
            }
        }
        let mut gens = generators;
        gens.sort_by(|a, b| deg(a).cmp(&deg(b)).then_with(|| b.cmp(a)));
        gens.dedup();
        let mut minimal: Vec<Vec<u32>> = Vec::new();
        for g in gens {
            if !minimal.iter().any(|m| divides(m, &g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal { n, generators: minimal })
    }

    /// The edge ideal `(x_u x_v : uv ∈ E(g))`.
    pub fn edge_ideal(g: &Graph) -> Self {
        let gens = g
            .edges()
            .map(|(u, v)| {
                let mut e = vec![0; g.n()];
                e[u - 1] = 1;
                e[v - 1] = 1;
                e
            })
            .collect();
        MonomialIdeal::new(g.n(), gens).expect("edge monomials are valid")
    }

    /// The squarefree ideal generated by `x_F` for each listed support.
    pub fn from_supports(n: usize, supports: &[Face]) -> Result<Self> {
        let mut gens = Vec::with_capacity(supports.len());
        for s in supports {
            let mut e = vec![0; n];
            for &v in s {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                e[v - 1] = 1;
            }
            gens.push(e);
        }
        MonomialIdeal::new(n, gens)
    }

    /// Stanley–Reisner ideal of `d`: generated by its minimal non-faces.
    pub fn stanley_reisner(d: &SimplicialComplex) -> Result<Self> {
        if d.is_void() {
            return Err(Error::UnitIdeal);
        }
        MonomialIdeal::from_supports(d.n(), &d.minimal_nonfaces())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().flatten().all(|&e| e <= 1)
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| deg(g)).collect()
    }

    pub fn is_generated_in_degree(&self, d: u32) -> bool {
        self.generators.iter().all(|g| deg(g) == d)
    }

    /// Sorted supports of the generators.
    pub fn supports(&self) -> Vec<Face> {
        let mut s: Vec<Face> = self
            .generators
            .iter()
            .map(|g| g.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i + 1).collect())
            .collect();
        s.sort_by(|a: &Face, b: &Face| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        s
    }
}

fn deg(g: &[u32]) -> u32 {
    g.iter().sum()
}

/// Result of polarizing a monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    /// `variables[k] = (i, p)`: new variable `k + 1` stands for the `p`-th copy of `x_i`.
    pub variables: Vec<(usize, u32)>,
}

impl Polarization {
    pub fn is_identity(&self) -> bool {
        self.variables.iter().enumerate().all(|(k, &(i, p))| i == k + 1 && p == 1)
    }
}

/// Replaces each `x_i^a` by `x_{i,1} ⋯ x_{i,a}`. The first copy of `x_i` keeps index
/// `i`; further copies are appended after the original variables in `(i, p)` order.
pub fn polarize(m: &MonomialIdeal) -> Polarization {
    let max_exp: Vec<u32> = (0..m.n).map(|i| m.generators.iter().map(|g| g[i]).max().unwrap_or(0)).collect();
    let mut variables: Vec<(usize, u32)> = (1..=m.n).map(|i| (i, 1)).collect();
    for (i, &e) in max_exp.iter().enumerate() {
        variables.extend((2..=e).map(|p| (i + 1, p)));
    }
    let index: BTreeMap<(usize, u32), usize> = variables.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let gens = m
        .generators
        .iter()
        .map(|g| {
            let mut e = vec![0; variables.len()];
            for (i, &a) in g.iter().enumerate() {
                for p in 1..=a {
                    e[index[&(i + 1, p)]] = 1;
                }
            }
            e
        })
        .collect();
    let ideal = MonomialIdeal::new(variables.len(), gens).expect("polarization preserves validity");
    Polarization { ideal, variables }
}

/// The complex `Δ` with `I_Δ = m`: faces are the sets containing no generator support.
pub fn complex_of_squarefree_ideal(m: &MonomialIdeal) -> Result<SimplicialComplex> {
    if let Some(g) = m.generators.iter().find(|g| g.iter().any(|&e| e > 1)) {
        return Err(Error::NotSquarefree(g.clone()));
    }
    let supports = m.supports();
    if supports.iter().all(|s| s.len() == 2) {
        let g = Graph::new(m.n, supports.iter().map(|s| (s[0], s[1])))?;
        return Ok(SimplicialComplex::independence_complex(&g));
    }
    let mut facets = Vec::new();
    let mut current = Vec::new();
    maximal_independent(&supports, 1, m.n, &mut current, &mut facets);
    SimplicialComplex::from_facets(m.n, facets)
}

/// Depth-first search for the maximal sets avoiding every support.
fn maximal_independent(supports: &[Face], v: usize, n: usize, current: &mut Face, out: &mut Vec<Face>) {
    if v > n {
        let maximal = (1..=n)
            .filter(|x| current.binary_search(x).is_err())
            .all(|x| supports.iter().any(|s| s.contains(&x) && s.iter().all(|y| *y == x || current.contains(y))));
        if maximal {
            out.push(current.clone());
        }
        return;
    }
    let blocked = supports
        .iter()
        .any(|s| s.contains(&v) && s.iter().all(|y| *y == v || current.contains(y)));
    if !blocked {
        current.push(v);
        maximal_independent(supports, v + 1, n, current, out);
        current.pop();
    }
    maximal_independent(supports, v + 1, n, current, out);
}

/// Membership bitmap over all subsets of `[n]`, bit `v - 1` standing for vertex `v`.
struct MaskComplex {
    member: Vec<bool>,
}

impl MaskComplex {
    fn new(d: &SimplicialComplex) -> Self {
        let n = d.n();
        let mut member = vec![false; 1 << n];
        for facet in d.facets() {
            let mask = face_mask(facet);
            let mut sub = mask;
            loop {
                member[sub as usize] = true;
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        MaskComplex { member }
    }

    /// Homology of the complex formed by the submasks `s` of `within` with
    /// `member[s | offset]`.
    fn homology(&self, within: u64, offset: u64, field: FieldSpec) -> ReducedBetti {
        let mut groups: Vec<Vec<u64>> = vec![Vec::new(); within.count_ones() as usize + 1];
        let mut sub = within;
        loop {
            if self.member[(sub | offset) as usize] {
                groups[sub.count_ones() as usize].push(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & within;
        }
        while groups.last().is_some_and(Vec::is_empty) {
            groups.pop();
        }
        groups.iter_mut().for_each(|g| g.reverse());
        betti_of_groups(&groups, field)
    }
}

fn face_mask(face: &[usize]) -> u64 {
    face.iter().fold(0, |m, &v| m | 1 << (v - 1))
}

fn check_cap(d: &SimplicialComplex, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_CAP);
    if d.n() > cap {
        return Err(Error::CapExceeded { n: d.n(), cap });
    }
    if d.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(())
}

/// `β_{i,j}(I_Δ) = Σ_{|W|=j} β̃_{j-i-2}(Δ[W])`, summed over all `2^n` vertex sets.
pub fn hochster_table(d: &SimplicialComplex, field: FieldSpec, cap: usize) -> Result<BettiTable> {
    check_cap(d, cap)?;
    let masks = MaskComplex::new(d);
    let n = d.n();
    let table = (0..1u64 << n)
        .into_par_iter()
        .fold(
            || BettiTable::new(n, field),
            |mut t, w| {
                let j = w.count_ones() as isize;
                for (r, b) in masks.homology(w, 0, field).nonzero() {
                    let i = j - r - 2;
                    if i >= 0 {
                        t.add(i as usize, j as usize, b as u64);
                    }
                }
                t
            },
        )
        .reduce(|| BettiTable::new(n, field), BettiTable::merge);
    Ok(table)
}

/// `β_{i,j}(I_Δ) = Σ_{F ∈ Δ∨, |F| = n-j} β̃_{i-1}(lk_{Δ∨} F)`.
pub fn eagon_reiner_table(d: &SimplicialComplex, field: FieldSpec, cap: usize) -> Result<BettiTable> {
    check_cap(d, cap)?;
    let n = d.n();
    let dual = d.alexander_dual();
    let masks = MaskComplex::new(&dual);
    let full = (1u64 << n) - 1;
    let table = (0..1u64 << n)
        .into_par_iter()
        .filter(|&f| masks.member[f as usize])
        .fold(
            || BettiTable::new(n, field),
            |mut t, f| {
                let j = n - f.count_ones() as usize;
                for (r, b) in masks.homology(full & !f, f, field).nonzero() {
                    let i = (r + 1) as usize;
                    debug_assert!(j > i, "dual contribution outside j >= i + 1");
                    t.add(i, j, b as u64);
                }
                t
            },
        )
        .reduce(|| BettiTable::new(n, field), BettiTable::merge);
    Ok(table)
}

pub fn betti_table(d: &SimplicialComplex, field: FieldSpec, cap: usize, oracle: Oracle) -> Result<BettiTable> {
    match oracle {
        Oracle::Hochster => hochster_table(d, field, cap),
        Oracle::Dual => eagon_reiner_table(d, field, cap),
    }
}

/// Number of `j`-subsets of `[n]`, saturating.
fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// A single entry `β_{i,j}(I_Δ)`, summing only over `j`-subsets. Refused when
/// there are more than `2^cap` of them.
pub fn betti_entry(d: &SimplicialComplex, i: usize, j: usize, field: FieldSpec, cap: usize) -> Result<u64> {
    if d.is_void() {
        return Err(Error::VoidComplex);
    }
    if j > d.n() {
        return Err(Error::Precondition(format!("j = {j} exceeds n = {}", d.n())));
    }
    if j < i + 1 {
        return Ok(0);
    }
    let budget = 1u128 << cap.min(MAX_CAP);
    if binomial(d.n(), j) > budget {
        return Err(Error::CapExceeded { n: d.n(), cap });
    }
    let degree = (j - i - 2) as isize;
    let subsets: Vec<Face> = (1..=d.n()).combinations(j).collect();
    Ok(subsets
        .par_iter()
        .map(|w| all_reduced_betti(&d.restrict(w), field).get(degree) as u64)
        .sum())
}

/// The part of `β_{i,j}(I_Δ)` contributed by the given vertex sets, all of size `j`;
/// a lower bound for the full entry.
pub fn betti_entry_lower_bound(d: &SimplicialComplex, i: usize, subsets: &[Face], field: FieldSpec) -> Result<u64> {
    let Some(j) = subsets.first().map(Vec::len) else { return Ok(0) };
    if subsets.iter().any(|w| w.len() != j) {
        return Err(Error::Precondition("all vertex sets must have the same size".into()));
    }
    if j < i + 2 {
        return Ok(0);
    }
    let degree = (j - i - 2) as isize;
    Ok(subsets.iter().map(|w| all_reduced_betti(&d.restrict(w), field).get(degree) as u64).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIELDS: [FieldSpec; 3] = [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Q];

    fn table(entries: &[(usize, usize, u64)]) -> Vec<(usize, usize, u64)> {
        entries.to_vec()
    }

    #[test]
    fn triangle_and_pentagon() {
        let k3 = SimplicialComplex::independence_complex(&Graph::complete(3));
        let c5 = SimplicialComplex::independence_complex(&Graph::cycle(5));
        for f in FIELDS {
            for oracle in [Oracle::Hochster, Oracle::Dual] {
                let t = betti_table(&k3, f, DEFAULT_CAP, oracle).unwrap();
                assert_eq!(t.entries(Convention::Ideal), table(&[(0, 2, 3), (1, 3, 2)]));
                let t = betti_table(&c5, f, DEFAULT_CAP, oracle).unwrap();
                assert_eq!(t.entries(Convention::Ideal), table(&[(0, 2, 5), (1, 3, 5), (2, 5, 1)]));
            }
        }
    }

    #[test]
    fn full_simplex_has_zero_ideal() {
        let s = SimplicialComplex::simplex(4);
        assert!(hochster_table(&s, FieldSpec::GF2, DEFAULT_CAP).unwrap().is_zero_ideal());
        assert!(eagon_reiner_table(&s, FieldSpec::GF2, DEFAULT_CAP).unwrap().is_zero_ideal());
        let t = hochster_table(&s, FieldSpec::GF2, DEFAULT_CAP).unwrap();
        assert_eq!(t.entries(Convention::Quotient), vec![(0, 0, 1)]);
        assert_eq!(t_vector(&t), TVector::new(vec![Some(0)]));
    }

    #[test]
    fn cap_and_void_are_refused() {
        let big = SimplicialComplex::simplex(17);
        assert!(matches!(hochster_table(&big, FieldSpec::GF2, DEFAULT_CAP), Err(Error::CapExceeded { n: 17, cap: 16 })));
        assert!(matches!(eagon_reiner_table(&big, FieldSpec::GF2, 16), Err(Error::CapExceeded { .. })));
        let points = SimplicialComplex::from_facets(17, (1..=17).map(|v| vec![v])).unwrap();
        assert!(hochster_table(&points, FieldSpec::GF2, 17).is_ok());
        assert!(matches!(hochster_table(&SimplicialComplex::void(2), FieldSpec::GF2, 16), Err(Error::VoidComplex)));
    }

    #[test]
    fn ghost_vertex_is_a_linear_generator() {
        let d = SimplicialComplex::from_facets(3, [vec![1, 2]]).unwrap();
        let t = hochster_table(&d, FieldSpec::GF2, DEFAULT_CAP).unwrap();
        assert_eq!(t.entries(Convention::Ideal), vec![(0, 1, 1)]);
        assert!(t.same_entries(&eagon_reiner_table(&d, FieldSpec::GF2, DEFAULT_CAP).unwrap()));
    }

    #[test]
    fn t_vectors() {
        let k3 = hochster_table(&SimplicialComplex::independence_complex(&Graph::complete(3)), FieldSpec::GF2, 16).unwrap();
        assert_eq!(t_vector(&k3).as_slice(), &[Some(0), Some(2), Some(3)]);
        let c5 = hochster_table(&SimplicialComplex::independence_complex(&Graph::cycle(5)), FieldSpec::GF2, 16).unwrap();
        assert_eq!(t_vector(&c5).as_slice(), &[Some(0), Some(2), Some(3), Some(5)]);
        assert_eq!(c5.totals(Convention::Quotient), vec![1, 5, 5, 1]);
    }

    #[test]
    fn single_entries() {
        let c5 = SimplicialComplex::independence_complex(&Graph::cycle(5));
        assert_eq!(betti_entry(&c5, 2, 5, FieldSpec::GF2, 16).unwrap(), 1);
        assert_eq!(betti_entry(&c5, 1, 3, FieldSpec::GF2, 16).unwrap(), 5);
        assert_eq!(betti_entry(&c5, 1, 4, FieldSpec::GF2, 16).unwrap(), 0);
        assert_eq!(betti_entry_lower_bound(&c5, 1, &[vec![1, 2, 3]], FieldSpec::GF2).unwrap(), 1);
        assert!(betti_entry(&SimplicialComplex::simplex(40), 0, 20, FieldSpec::GF2, 16).is_err());
    }

    #[test]
    fn ideal_normalization() {
        let m = MonomialIdeal::new(2, vec![vec![1, 1], vec![1, 0], vec![1, 0]]).unwrap();
        assert_eq!(m.generators(), &[vec![1, 0]]);
        assert!(matches!(MonomialIdeal::new(2, vec![vec![0, 0]]), Err(Error::UnitIdeal)));
        assert!(MonomialIdeal::new(2, vec![vec![1]]).is_err());
    }

    #[test]
    fn polarizations() {
        let sq = MonomialIdeal::new(3, vec![vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let p = polarize(&sq);
        assert!(p.is_identity());
        assert_eq!(p.ideal, sq);

        let x1sq = MonomialIdeal::new(1, vec![vec![2]]).unwrap();
        let p = polarize(&x1sq);
        assert_eq!(p.variables, vec![(1, 1), (1, 2)]);
        assert_eq!(p.ideal.generators(), &[vec![1, 1]]);

        let m = MonomialIdeal::new(2, vec![vec![2, 0], vec![1, 1]]).unwrap();
        let p = polarize(&m);
        assert!(p.ideal.is_squarefree());
        assert_eq!(p.variables, vec![(1, 1), (2, 1), (1, 2)]);
        let mut gens = p.ideal.supports();
        gens.sort();
        assert_eq!(gens, vec![vec![1, 2], vec![1, 3]]);
        let d = complex_of_squarefree_ideal(&p.ideal).unwrap();
        assert_eq!(d.facets(), &[vec![1], vec![2, 3]]);
        let t = hochster_table(&d, FieldSpec::Q, 16).unwrap();
        // (x1^2, x1 x2): two quadrics with one cubic syzygy
        assert_eq!(t.entries(Convention::Ideal), vec![(0, 2, 2), (1, 3, 1)]);
    }

    #[test]
    fn stanley_reisner_round_trip() {
        let g = Graph::cycle(6);
        let ei = MonomialIdeal::edge_ideal(&g);
        assert_eq!(complex_of_squarefree_ideal(&ei).unwrap(), SimplicialComplex::independence_complex(&g));
        let cubic = MonomialIdeal::new(3, vec![vec![1, 1, 1]]).unwrap();
        let hollow = complex_of_squarefree_ideal(&cubic).unwrap();
        assert_eq!(hollow, SimplicialComplex::boundary_of_simplex(2).unwrap());
        let mixed = MonomialIdeal::from_supports(5, &[vec![1, 2, 3], vec![3, 4], vec![5]]).unwrap();
        let d = complex_of_squarefree_ideal(&mixed).unwrap();
        assert_eq!(d.minimal_nonfaces(), mixed.supports());
        assert_eq!(MonomialIdeal::stanley_reisner(&d).unwrap(), mixed);
        assert!(matches!(complex_of_squarefree_ideal(&MonomialIdeal::new(1, vec![vec![2]]).unwrap()), Err(Error::NotSquarefree(_))));
    }

    #[test]
    fn json_and_csv() {
        let c5 = hochster_table(&SimplicialComplex::independence_complex(&Graph::cycle(5)), FieldSpec::GF2, 16).unwrap();
        let j = c5.to_json(Convention::Quotient);
        assert_eq!(j.to_string(), r#"{"convention":"quotient","entries":[[0,0,1],[1,2,5],[2,3,5],[3,5,1]]}"#);
        assert_eq!(BettiTable::from_json(&j, 5, FieldSpec::GF2).unwrap(), c5);
        assert_eq!(BettiTable::from_json(&c5.to_json(Convention::Ideal), 5, FieldSpec::GF2).unwrap(), c5);
        assert_eq!(c5.to_csv(Convention::Ideal), "i,j,value\n0,2,5\n1,3,5\n2,5,1\n");
        let text = c5.to_text(Convention::Quotient);
        assert_eq!(text, "        0 1 2 3\n total: 1 5 5 1\n     0: 1 . . .\n     1: . 5 5 .\n     2: . . . 1\n");
    }
}
