//! Exact rank computation over prime fields and the rationals.
//!
//! Matrices carry integer entries. Over GF(p) they are read modulo `p`, over
//! the rationals as-is; every field with characteristic zero or `p` accepts an
//! integer matrix, so boundary maps never need a field-specific carrier.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Above this many bits the GF(2) path switches from dense bit-packed rows to
/// sparse elimination.
pub const DENSE_GF2_LIMIT_BITS: usize = 1 << 26;

/// Largest characteristic accepted for GF(p).
pub const MAX_PRIME: u64 = 1 << 31;

/// Coefficient field for homology: GF(p) or the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Prime(u32),
    Rationals,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);
    pub const GF3: FieldSpec = FieldSpec::Prime(3);
    pub const Q: FieldSpec = FieldSpec::Rationals;

    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::GF2
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "gf{p}"),
            FieldSpec::Rationals => write!(f, "q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "q" || lower == "qq" || lower == "rationals" {
            return Ok(FieldSpec::Rationals);
        }
        match lower.strip_prefix("gf").map(str::parse::<u64>) {
            Some(Ok(p)) => FieldSpec::prime(p),
            _ => Err(Error::UnknownField(s.to_string())),
        }
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Integer matrix in coordinate form. No duplicate positions, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: Vec::new() }
    }

    pub fn new(rows: usize, cols: usize, entries: Vec<(usize, usize, i64)>) -> Result<Self> {
        let mut entries: Vec<_> = entries.into_iter().filter(|e| e.2 != 0).collect();
        for &(row, col, _) in &entries {
            if row >= rows || col >= cols {
                return Err(Error::EntryOutOfBounds { row, col, rows, cols });
            }
        }
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        if let Some(w) = entries.windows(2).find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(Error::DuplicateEntry { row: w[0].0, col: w[0].1 });
        }
        Ok(SparseMatrix { rows, cols, entries })
    }

    /// Builds from entries the caller guarantees to be in range and duplicate-free.
    pub(crate) fn from_trusted(rows: usize, cols: usize, entries: Vec<(usize, usize, i64)>) -> Self {
        debug_assert!(entries.iter().all(|&(r, c, v)| r < rows && c < cols && v != 0));
        SparseMatrix { rows, cols, entries }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let entries = rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().filter(|(_, v)| **v != 0).map(move |(c, v)| (r, c, *v)))
            .collect();
        SparseMatrix { rows: rows.len(), cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> Self {
        let mut entries: Vec<_> = self.entries.iter().map(|&(r, c, v)| (c, r, v)).collect();
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        SparseMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// Applies `row_perm[r]` and `col_perm[c]` as the new positions.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let entries = self.entries.iter().map(|&(r, c, v)| (row_perm[r], col_perm[c], v)).collect();
        SparseMatrix::new(self.rows, self.cols, entries).expect("permutation keeps entries distinct")
    }

    /// Integer product `self * other`, with zero entries dropped.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut by_row: Vec<Vec<(usize, i64)>> = vec![Vec::new(); other.rows];
        for &(r, c, v) in &other.entries {
            by_row[r].push((c, v));
        }
        let mut acc = std::collections::BTreeMap::<(usize, usize), i64>::new();
        for &(r, k, v) in &self.entries {
            for &(c, w) in &by_row[k] {
                *acc.entry((r, c)).or_insert(0) += v * w;
            }
        }
        let entries = acc.into_iter().filter(|(_, v)| *v != 0).map(|((r, c), v)| (r, c, v)).collect();
        SparseMatrix { rows: self.rows, cols: other.cols, entries }
    }

    /// True if every entry vanishes in `field`.
    pub fn is_zero_in(&self, field: FieldSpec) -> bool {
        match field {
            FieldSpec::Prime(p) => self.entries.iter().all(|e| e.2.rem_euclid(p as i64) == 0),
            FieldSpec::Rationals => self.entries.is_empty(),
        }
    }
}

/// Exact rank of `m` over `field`.
pub fn rank(m: &SparseMatrix, field: FieldSpec) -> usize {
    if m.rows == 0 || m.cols == 0 || m.entries.is_empty() {
        return 0;
    }
    match field {
        FieldSpec::Prime(2) if m.rows.saturating_mul(m.cols) <= DENSE_GF2_LIMIT_BITS => rank_gf2_dense(m),
        FieldSpec::Prime(p) => rank_mod_p(m, p as u64),
        FieldSpec::Rationals => rank_rational(m),
    }
}

fn rank_gf2_dense(m: &SparseMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; m.rows];
    for &(r, c, v) in &m.entries {
        if v & 1 == 1 {
            rows[r][c / 64] |= 1 << (c % 64);
        }
    }
    let mut rank = 0;
    for col in 0..m.cols {
        if rank == rows.len() {
            break;
        }
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (done, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &done[rank];
        for row in rest.iter_mut().filter(|row| row[w] & bit != 0) {
            for (x, y) in row[w..].iter_mut().zip(&pivot_row[w..]) {
                *x ^= y;
            }
        }
        rank += 1;
    }
    rank
}

/// Rows sorted by fill so sparse rows become pivots first.
fn grouped_rows<T>(m: &SparseMatrix, mut conv: impl FnMut(i64) -> Option<T>) -> Vec<Vec<(usize, T)>> {
    let mut rows: Vec<Vec<(usize, T)>> = (0..m.rows).map(|_| Vec::new()).collect();
    for &(r, c, v) in &m.entries {
        if let Some(x) = conv(v) {
            rows[r].push((c, x));
        }
    }
    rows.retain(|r| !r.is_empty());
    rows.sort_by_key(Vec::len);
    rows
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    let rows = grouped_rows(m, |v| {
        let x = v.rem_euclid(p as i64) as u64;
        (x != 0).then_some(x)
    });
    let mut pivots: Vec<Option<Vec<(usize, u64)>>> = vec![None; m.cols];
    let mut rank = 0;
    for mut row in rows {
        while let Some(&(lead, coeff)) = row.first() {
            match &pivots[lead] {
                Some(pivot) => {
                    // row -= coeff * pivot; pivot leads with 1
                    let scale = p - coeff;
                    row = merge_rows(&row, pivot, |a, b| (a + scale * b) % p);
                }
                None => {
                    let inv = pow_mod(coeff, p - 2, p);
                    row.iter_mut().for_each(|(_, x)| *x = *x * inv % p);
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Merges two column-sorted rows entrywise with `combine`, missing entries read as zero.
fn merge_rows(a: &[(usize, u64)], b: &[(usize, u64)], combine: impl Fn(u64, u64) -> u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (col, x) = match (a.get(i), b.get(j)) {
            (Some(&(ca, va)), Some(&(cb, vb))) if ca == cb => {
                i += 1;
                j += 1;
                (ca, combine(va, vb))
            }
            (Some(&(ca, va)), Some(&(cb, _))) if ca < cb => {
                i += 1;
                (ca, combine(va, 0))
            }
            (Some(&(ca, va)), None) => {
                i += 1;
                (ca, combine(va, 0))
            }
            (_, Some(&(cb, vb))) => {
                j += 1;
                (cb, combine(0, vb))
            }
            (None, None) => unreachable!(),
        };
        if x != 0 {
            out.push((col, x));
        }
    }
    out
}

/// Fraction-free elimination over the integers; each reduced row is divided by
/// its content so entries stay small.
fn rank_rational(m: &SparseMatrix) -> usize {
    let rows = grouped_rows(m, |v| Some(BigInt::from(v)));
    let mut pivots: Vec<Option<Vec<(usize, BigInt)>>> = vec![None; m.cols];
    let mut rank = 0;
    for mut row in rows {
        make_primitive(&mut row);
        while let Some((lead, coeff)) = row.first().map(|(c, v)| (*c, v.clone())) {
            match &pivots[lead] {
                Some(pivot) => {
                    // row <- (p/g) * row - (c/g) * pivot, leading term cancels
                    let g = coeff.gcd(&pivot[0].1);
                    let row_scale = &pivot[0].1 / &g;
                    let piv_scale = &coeff / &g;
                    row = combine_big(&row, &row_scale, pivot, &piv_scale);
                    make_primitive(&mut row);
                }
                None => {
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn combine_big(
    a: &[(usize, BigInt)],
    a_scale: &BigInt,
    b: &[(usize, BigInt)],
    b_scale: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (col, x) = match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                i += 1;
                j += 1;
                (*ca, va * a_scale - vb * b_scale)
            }
            (Some((ca, va)), Some((cb, _))) if ca < cb => {
                i += 1;
                (*ca, va * a_scale)
            }
            (Some((ca, va)), None) => {
                i += 1;
                (*ca, va * a_scale)
            }
            (_, Some((cb, vb))) => {
                j += 1;
                (*cb, -(vb * b_scale))
            }
            (None, None) => unreachable!(),
        };
        if !x.is_zero() {
            out.push((col, x));
        }
    }
    out
}

fn make_primitive(row: &mut [(usize, BigInt)]) {
    let Some(first) = row.first() else { return };
    let mut content = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if content.is_one() {
            break;
        }
        content = content.gcd(v);
    }
    let negate = first.1.is_negative();
    if content.is_one() && !negate {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v = &*v / &content;
        if negate {
            *v = -&*v;
        }
    }
}
