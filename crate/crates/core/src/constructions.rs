//! Complexes whose Betti tables have disconnected strands.
//!
//! * [`remark_complex`]: the join of `∂Δ^{j-1}` with its barycentric subdivision.
//!   Its Stanley–Reisner ideal has a disconnected `j`-strand, but it is not flag.
//! * [`build_counterexample`]: a flag complex `Δ = S ∪ O`, where `S` is a flag
//!   `i`-sphere and `O` an `(i+1)`-dimensional octahedral sphere on `2i+4`
//!   vertices of `S` that are pairwise at distance at least 3. The edge ideal of
//!   its 1-skeleton complement has a disconnected `(i+2)`-strand.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{strand, StrandReport};
use crate::betti::{hochster_table, BettiTable};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::all_reduced_betti;
use crate::linalg::FieldSpec;

/// `∂Δ^{j-1} * sd(∂Δ^{j-1})`.
pub fn remark_complex(j: usize) -> Result<SimplicialComplex> {
    if j < 3 {
        return Err(Error::InvalidDimension { dim: j, reason: "the join construction needs j >= 3" });
    }
    let boundary = SimplicialComplex::boundary_of_simplex(j - 1)?;
    Ok(boundary.join(&boundary.barycentric_subdivision()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkReport {
    pub j: usize,
    pub n: usize,
    pub field: FieldSpec,
    pub strand: StrandReport,
    /// Strand positions where the two join factors contribute.
    pub expected_nonzero: (usize, usize),
    pub strand2_connected: bool,
    pub passed: bool,
    pub table: BettiTable,
}

/// Computes the full table of the join complex and checks that strand `j` is
/// nonzero exactly at the two factors' positions.
pub fn verify_remark(j: usize, field: FieldSpec, cap: usize) -> Result<RemarkReport> {
    let d = remark_complex(j)?;
    let table = hochster_table(&d, field, cap)?;
    let s = strand(&table, j);
    // |W| = j for the simplex boundary, |W| = 2^j - 2 for its subdivision
    let expected_nonzero = (0, (1usize << j) - 2 - j);
    let nonzero: Vec<usize> = s.values.iter().positions(|&v| v != 0).collect();
    let strand2_connected = strand(&table, 2).connected;
    let passed = nonzero == [expected_nonzero.0, expected_nonzero.1] && !s.connected;
    Ok(RemarkReport { j, n: d.n(), field, strand: s, expected_nonzero, strand2_connected, passed, table })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleOptions {
    pub initial_subdivisions: usize,
    pub max_subdivisions: usize,
    /// Permit `i > 2`, where matrices grow quickly.
    pub allow_large: bool,
}

impl Default for CounterexampleOptions {
    fn default() -> Self {
        CounterexampleOptions { initial_subdivisions: 2, max_subdivisions: 4, allow_large: false }
    }
}

/// The pieces of `Δ = S ∪ O` plus, once verified, the check results.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleCertificate {
    pub i: usize,
    pub subdivisions: usize,
    pub complex: SimplicialComplex,
    pub sphere: SimplicialComplex,
    pub octahedral: SimplicialComplex,
    /// `A`, in the order the spread search found it.
    pub spread: Vec<usize>,
    pub pairing: Vec<(usize, usize)>,
    pub antipodal: (usize, usize),
    pub checks: Option<CounterexampleChecks>,
}

/// Where the `(i+2)`-strand of `I_Δ` is pinned down: positive at `slice_index`
/// (lower bound from `W = A \ {a, b}`) and at `top_index` (`W = [n]`), zero at
/// `gap_index` (all `W` of size `n - 1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandWitness {
    pub j: usize,
    pub slice_index: usize,
    pub slice_lower_bound: u64,
    pub gap_index: usize,
    pub gap_value: u64,
    pub top_index: usize,
    pub top_value: u64,
    pub disconnected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleChecks {
    pub field: FieldSpec,
    pub flag: bool,
    pub flag_witness: Option<Face>,
    pub flag_by_cliques: bool,
    /// `None` means some pair is disconnected (distance ∞).
    pub min_pairwise_distance: Option<usize>,
    pub distance_ok: bool,
    pub skeleton_on_spread_is_octahedral: bool,
    /// `β̃_i(Δ)`.
    pub betti_complex: usize,
    /// `β̃_i(Δ[A \ {a, b}])`.
    pub betti_slice: usize,
    pub deletions_checked: usize,
    /// `(x, β̃_i(Δ - x))` for every `x` where it is nonzero.
    pub nonzero_deletions: Vec<(usize, usize)>,
    pub strand: StrandWitness,
    pub valid: bool,
    pub failures: Vec<String>,
}

/// Builds `Δ = S ∪ O` with `S` an iterated barycentric subdivision of the boundary
/// of the `(i+1)`-cross-polytope, subdividing further until the spread search
/// finds `2i + 4` vertices pairwise at distance ≥ 3.
pub fn build_counterexample(i: usize, options: CounterexampleOptions) -> Result<CounterexampleCertificate> {
    if i < 2 {
        return Err(Error::InvalidDimension { dim: i, reason: "the construction needs i >= 2" });
    }
    if i > 2 && !options.allow_large {
        return Err(Error::Precondition(format!("i = {i} > 2 needs the large option")));
    }
    let pairs: Vec<(usize, usize)> = (0..=i).map(|k| (2 * k + 1, 2 * k + 2)).collect();
    let mut sphere = SimplicialComplex::octahedral_sphere(i, &pairs)?;
    for _ in 0..options.initial_subdivisions {
        sphere = sphere.barycentric_subdivision();
    }
    let mut subdivisions = options.initial_subdivisions;
    let k = 2 * i + 4;
    let spread = loop {
        if let Some(a) = sphere.one_skeleton().spread_subset(k, 3) {
            break a;
        }
        if subdivisions >= options.max_subdivisions {
            return Err(Error::SpreadFailed { k, min_dist: 3, subdivisions });
        }
        sphere = sphere.barycentric_subdivision();
        subdivisions += 1;
    };
    let pairing: Vec<(usize, usize)> = spread.iter().copied().tuples().collect();
    let octahedral = SimplicialComplex::octahedral_sphere(i + 1, &pairing)?.with_ground_size(sphere.n())?;
    let complex = sphere.union(&octahedral);
    Ok(CounterexampleCertificate {
        i,
        subdivisions,
        complex,
        sphere,
        octahedral,
        spread,
        antipodal: pairing[0],
        pairing,
        checks: None,
    })
}

impl CounterexampleCertificate {
    /// Consistency of the stored pieces, independent of any homology.
    pub fn structural_problems(&self) -> Vec<String> {
        let mut problems = Vec::new();
        if self.spread.len() != 2 * self.i + 4 {
            problems.push(format!("|A| = {} but 2i + 4 = {}", self.spread.len(), 2 * self.i + 4));
        }
        let expected_pairing: Vec<(usize, usize)> = self.spread.iter().copied().tuples().collect();
        if self.pairing != expected_pairing {
            problems.push("pairing does not follow the discovery order of A".into());
        }
        if self.pairing.first() != Some(&self.antipodal) {
            problems.push("antipodal pair is not the first pair".into());
        }
        if self.sphere.union(&self.octahedral) != self.complex {
            problems.push("complex differs from the union of sphere and octahedral sphere".into());
        }
        problems
    }
}

/// Runs every check on `Δ` over `field` and fills in `checks`.
pub fn verify_counterexample(mut cert: CounterexampleCertificate, field: FieldSpec) -> CounterexampleCertificate {
    let d = &cert.complex;
    let i = cert.i;
    let deg = i as isize;
    let mut failures = cert.structural_problems();

    let flag = d.is_flag();
    let flag_by_cliques = d.is_flag_by_cliques();
    if !flag.flag || !flag_by_cliques {
        failures.push(format!("complex is not flag (witness {:?})", flag.witness));
    }

    let skeleton = cert.sphere.one_skeleton();
    let mut min_pairwise_distance = Some(usize::MAX);
    for (idx, &a) in cert.spread.iter().enumerate() {
        let dist = skeleton.distances_from(a);
        for &b in &cert.spread[idx + 1..] {
            min_pairwise_distance = match (min_pairwise_distance, dist[b]) {
                (Some(m), Some(x)) => Some(m.min(x)),
                _ => min_pairwise_distance,
            };
        }
    }
    let distance_ok = min_pairwise_distance.is_some_and(|m| m >= 3);
    if !distance_ok {
        failures.push(format!("minimum pairwise distance in A is {min_pairwise_distance:?}"));
    }

    let full_skeleton = d.one_skeleton();
    let oct_skeleton = cert.octahedral.one_skeleton();
    let skeleton_on_spread_is_octahedral = cert
        .spread
        .iter()
        .tuple_combinations()
        .all(|(&u, &v)| full_skeleton.has_edge(u, v) == oct_skeleton.has_edge(u, v));
    if !skeleton_on_spread_is_octahedral {
        failures.push("1-skeleton of the complex on A differs from the octahedral sphere".into());
    }

    let betti_complex = all_reduced_betti(d, field).get(deg);
    if betti_complex == 0 {
        failures.push(format!("reduced homology of the complex vanishes in degree {i}"));
    }
    let (a, b) = cert.antipodal;
    let slice: Face = cert.spread.iter().copied().filter(|&v| v != a && v != b).sorted().collect();
    let betti_slice = all_reduced_betti(&d.restrict(&slice), field).get(deg);
    if betti_slice == 0 {
        failures.push(format!("reduced homology of the slice A - {{a, b}} vanishes in degree {i}"));
    }

    let ground: Vec<usize> = (1..=d.n()).collect();
    let deletions: Vec<(usize, usize)> =
        ground.par_iter().map(|&x| (x, all_reduced_betti(&d.delete_vertex(x), field).get(deg))).collect();
    let nonzero_deletions: Vec<(usize, usize)> = deletions.iter().copied().filter(|&(_, b)| b != 0).collect();
    if !nonzero_deletions.is_empty() {
        failures.push(format!("{} vertex deletions keep degree-{i} homology", nonzero_deletions.len()));
    }

    let n = d.n();
    let gap_value: u64 = deletions.iter().map(|&(_, b)| b as u64).sum();
    let strand = StrandWitness {
        j: i + 2,
        slice_index: i,
        slice_lower_bound: betti_slice as u64,
        gap_index: n - i - 3,
        gap_value,
        top_index: n - i - 2,
        top_value: betti_complex as u64,
        disconnected: betti_slice > 0 && gap_value == 0 && betti_complex > 0,
    };

    let valid = failures.is_empty();
    cert.checks = Some(CounterexampleChecks {
        field,
        flag: flag.flag,
        flag_witness: flag.witness,
        flag_by_cliques,
        min_pairwise_distance: min_pairwise_distance.filter(|&m| m != usize::MAX),
        distance_ok,
        skeleton_on_spread_is_octahedral,
        betti_complex,
        betti_slice,
        deletions_checked: deletions.len(),
        nonzero_deletions,
        strand,
        valid,
        failures,
    });
    cert
}

/// Outcome of re-running the checks on a stored certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recheck {
    pub valid: bool,
    /// The recomputed checks equal the stored ones.
    pub matches_stored: bool,
    pub checks: CounterexampleChecks,
}

pub fn recheck_counterexample(stored: &CounterexampleCertificate, field: Option<FieldSpec>) -> Recheck {
    let field = field.or(stored.checks.as_ref().map(|c| c.field)).unwrap_or_default();
    let fresh = verify_counterexample(CounterexampleCertificate { checks: None, ..stored.clone() }, field);
    let checks = fresh.checks.expect("verification fills in checks");
    Recheck { valid: checks.valid, matches_stored: stored.checks.as_ref() == Some(&checks), checks }
}
