//! Strand connectivity, vanishing tables, subadditivity of maximal shifts, and
//! the structural properties every edge-ideal table must satisfy.
//!
//! Strands are indexed on the ideal: strand `j` is `β_{i,i+j}(I)` for `i ≥ 0`.
//! The corresponding strand of `S/I` is strand `j - 1` after shifting `i` by one
//! and is never stored separately.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::betti::{BettiTable, Convention, TVector};
use crate::error::{Error, Result};

/// Strand `j` of an ideal's Betti table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandReport {
    pub j: usize,
    /// `β_{i,i+j}(I)` for `i = 0, 1, ...`, trailing zeros dropped.
    pub values: Vec<u64>,
    pub connected: bool,
    /// `(i, i + k)`: both entries nonzero with only zeros strictly between.
    pub gap_witness: Option<(usize, usize)>,
}

pub fn strand(table: &BettiTable, j: usize) -> StrandReport {
    let width = table.max_index().map_or(0, |m| m + 1);
    let mut values: Vec<u64> = (0..width).map(|i| table.get(i, i + j)).collect();
    while values.last() == Some(&0) {
        values.pop();
    }
    let gap_witness = values.windows(2).position(|w| w[0] != 0 && w[1] == 0).and_then(|i| {
        values[i + 1..].iter().position(|&v| v != 0).map(|k| (i, i + 1 + k))
    });
    StrandReport { j, connected: gap_witness.is_none(), gap_witness, values }
}

/// `X` where `β_{i,i+j}(I) ≠ 0`, `0` elsewhere; rows `j`, columns `i = 0..=pd(S/I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingTable {
    pub width: usize,
    pub rows: Vec<(usize, Vec<bool>)>,
}

pub fn vanishing_table(table: &BettiTable) -> VanishingTable {
    let entries = table.entries(Convention::Ideal);
    if entries.is_empty() {
        return VanishingTable { width: 0, rows: Vec::new() };
    }
    let width = table.projective_dimension() + 1;
    let lo = entries.iter().map(|e| e.1 - e.0).min().unwrap_or(0);
    let hi = entries.iter().map(|e| e.1 - e.0).max().unwrap_or(0);
    let rows = (lo..=hi).map(|j| (j, (0..width).map(|i| table.get(i, i + j) != 0).collect())).collect();
    VanishingTable { width, rows }
}

impl VanishingTable {
    pub fn row(&self, j: usize) -> Option<&[bool]> {
        self.rows.iter().find(|r| r.0 == j).map(|r| r.1.as_slice())
    }

    /// Row `j` as `"X X 0 0"`.
    pub fn row_string(&self, j: usize) -> Option<String> {
        self.row(j).map(|r| r.iter().map(|&x| if x { "X" } else { "0" }).collect::<Vec<_>>().join(" "))
    }

    /// Pattern scan for `X 0 ... 0 X` in row `j`.
    pub fn has_internal_zero(&self, j: usize) -> bool {
        let Some(row) = self.row_string(j) else { return false };
        let compact: String = row.split(' ').collect();
        compact.find("X0").is_some_and(|p| compact[p..].contains("0X"))
    }
}

impl fmt::Display for VanishingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = self.rows.iter().map(|r| r.0.to_string().len()).max().unwrap_or(1);
        for (j, _) in &self.rows {
            writeln!(f, "{j:>label$}: {}", self.row_string(*j).unwrap_or_default())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandTheoremReport {
    pub passed: bool,
    pub strands: Vec<StrandReport>,
}

/// Strands 2 and 3 of an ideal generated in degree 2 must be connected.
pub fn check_strand_theorem(table: &BettiTable) -> Result<StrandTheoremReport> {
    if let Some((_, j, _)) = table.entries(Convention::Ideal).into_iter().find(|&(i, j, _)| i == 0 && j != 2) {
        return Err(Error::Precondition(format!("ideal has a minimal generator of degree {j}, not 2")));
    }
    let strands = vec![strand(table, 2), strand(table, 3)];
    Ok(StrandTheoremReport { passed: strands.iter().all(|s| s.connected), strands })
}

/// Which pairs `(a, b)`, `1 ≤ b ≤ a`, a subadditivity check covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubadditivityMode {
    /// `b ≤ max`; violations with `b ≤ 3` contradict a proved result.
    BMax(usize),
    /// Every pair; violations would contradict an open conjecture.
    AllPairs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubadditivityViolation {
    pub a: usize,
    pub b: usize,
    pub t_sum_index: usize,
    pub t_a_plus_t_b: usize,
}

impl SubadditivityViolation {
    /// Violations with `min(a, b) ≤ 3` contradict the proved cases for edge ideals.
    pub fn in_proved_range(&self) -> bool {
        self.a.min(self.b) <= 3
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubadditivityReport {
    pub mode: SubadditivityMode,
    pub t: TVector,
    pub checked: Vec<(usize, usize)>,
    pub violations: Vec<SubadditivityViolation>,
}

impl SubadditivityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn proved_case_violations(&self) -> impl Iterator<Item = &SubadditivityViolation> {
        self.violations.iter().filter(|v| v.in_proved_range())
    }
}

/// Checks `t_{a+b} ≤ t_a + t_b` over every pair allowed by `mode` with all three shifts defined.
pub fn check_subadditivity(t: &TVector, mode: SubadditivityMode) -> SubadditivityReport {
    let p = t.len().saturating_sub(1);
    let b_max = match mode {
        SubadditivityMode::BMax(k) => k,
        SubadditivityMode::AllPairs => p,
    };
    let mut checked = Vec::new();
    let mut violations = Vec::new();
    for b in 1..=b_max.min(p) {
        for a in b..=p.saturating_sub(b) {
            let (Some(tab), Some(ta), Some(tb)) = (t.get(a + b), t.get(a), t.get(b)) else { continue };
            checked.push((a, b));
            if tab > ta + tb {
                violations.push(SubadditivityViolation { a, b, t_sum_index: tab, t_a_plus_t_b: ta + tb });
            }
        }
    }
    SubadditivityReport { mode, t: t.clone(), checked, violations }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedStats {
    pub projective_dimension: usize,
    pub regularity: usize,
}

/// `pd = max{i : t_i defined}`, `reg = max(t_i - i)`.
pub fn derived_stats(t: &TVector) -> DerivedStats {
    let projective_dimension = t.defined().map(|(i, _)| i).max().unwrap_or(0);
    let regularity = t.defined().map(|(i, ti)| ti.saturating_sub(i)).max().unwrap_or(0);
    DerivedStats { projective_dimension, regularity }
}

/// Positions `(i, j)` in the `S/I` view where `β_{i,j} = β_{i,j+1} = 0` but
/// `β_{i+1,j+2} ≠ 0`. Empty for every edge ideal.
pub fn corner_violations(table: &BettiTable) -> Vec<(usize, usize)> {
    table
        .entries(Convention::Quotient)
        .into_iter()
        .filter(|&(i, j, _)| i >= 1 && j >= 2)
        .map(|(i, j, _)| (i - 1, j - 2))
        .filter(|&(i, j)| table.quotient(i, j) == 0 && table.quotient(i, j + 1) == 0)
        .collect()
}

/// Indices `i ≥ 1` where a defined shift leaves `i + 1 ≤ t_i ≤ 2i`.
pub fn taylor_violations(t: &TVector) -> Vec<usize> {
    t.defined().filter(|&(i, ti)| i >= 1 && !(i + 1 <= ti && ti <= 2 * i)).map(|(i, _)| i).collect()
}

/// Ideal-side entries outside `i + 1 ≤ j ≤ 2(i + 1)`.
pub fn taylor_entry_violations(table: &BettiTable) -> Vec<(usize, usize)> {
    table
        .entries(Convention::Ideal)
        .into_iter()
        .filter(|&(i, j, _)| !(i + 1 <= j && j <= 2 * (i + 1)))
        .map(|(i, j, _)| (i, j))
        .collect()
}

/// First index where strand 2 turns zero and later becomes nonzero again.
pub fn first_strand_violation(table: &BettiTable) -> Option<usize> {
    let s = strand(table, 2);
    s.values.iter().position(|&v| v == 0).filter(|_| s.values.first().is_some_and(|&v| v != 0))
}

/// β_{0,j}(I) equals the number of minimal generators of degree j.
pub fn generator_count_matches(table: &BettiTable, degrees: &[u32]) -> bool {
    let width = degrees.iter().max().map_or(0, |&d| d as usize + 1).max(table.n() + 1);
    (0..width).all(|j| table.get(0, j) == degrees.iter().filter(|&&d| d as usize == j).count() as u64)
}

/// Compares the graded Euler characteristic `Σ_i (-1)^i β_{i,j}(S/I)` with the
/// coefficient of `t^j` in `Σ_k f_{k-1} t^k (1 - t)^{n-k}`, the numerator of the
/// Hilbert series of the Stanley–Reisner ring. Returns the first degree where
/// they differ. `f_vector` starts with `f_{-1}`.
pub fn k_polynomial_mismatch(table: &BettiTable, f_vector: &[usize]) -> Option<usize> {
    let n = table.n();
    let top = table.entries(Convention::Quotient).iter().map(|e| e.1).max().unwrap_or(0).max(n);
    let mut lhs = vec![0i128; top + 1];
    for (i, j, v) in table.entries(Convention::Quotient) {
        lhs[j] += if i % 2 == 0 { v as i128 } else { -(v as i128) };
    }
    let binom = |a: usize, b: usize| -> i128 { (0..b).fold(1i128, |acc, r| acc * (a - r) as i128 / (r + 1) as i128) };
    (0..=top).find(|&j| {
        let rhs: i128 = f_vector
            .iter()
            .enumerate()
            .filter(|&(k, _)| k <= j && k <= n)
            .map(|(k, &f)| {
                let sign = if (j - k) % 2 == 0 { 1 } else { -1 };
                sign * f as i128 * if j - k <= n - k { binom(n - k, j - k) } else { 0 }
            })
            .sum();
        rhs != lhs[j]
    })
}
