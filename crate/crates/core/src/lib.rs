//! Graded Betti tables of squarefree monomial ideals computed combinatorially,
//! with strand-connectivity and subadditivity checks and certified
//! constructions of disconnected strands.

pub mod analysis;
pub mod betti;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod harness;
pub mod homology;
pub mod io;
pub mod linalg;

pub use analysis::{
    check_strand_theorem, check_subadditivity, derived_stats, strand, vanishing_table, DerivedStats, StrandReport,
    StrandTheoremReport, SubadditivityMode, SubadditivityReport, SubadditivityViolation, VanishingTable,
};
pub use betti::{
    betti_entry, betti_entry_lower_bound, betti_table, complex_of_squarefree_ideal, eagon_reiner_table,
    hochster_table, polarize, t_vector, BettiTable, Convention, MonomialIdeal, Oracle, Polarization, TVector,
    DEFAULT_CAP,
};
pub use complex::{Face, FacePoset, FlagCheck, Graph, SimplicialComplex};
pub use constructions::{
    build_counterexample, recheck_counterexample, remark_complex, verify_counterexample, verify_remark,
    CounterexampleCertificate, CounterexampleOptions, RemarkReport,
};
pub use error::{Error, Result};
pub use harness::{generate_corpus, run_harness, CorpusSpec, HarnessReport, RunConfig};
pub use homology::{all_reduced_betti, boundary_matrix, reduced_betti, ChainComplexData, ReducedBetti};
pub use io::{parse_input, Input, Prepared};
pub use linalg::{rank, FieldSpec, SparseMatrix};
