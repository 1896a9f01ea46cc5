use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),

    #[error("invalid dimension {dim}: {reason}")]
    InvalidDimension { dim: usize, reason: &'static str },

    #[error("malformed pairing: {0}")]
    MalformedPairing(String),

    #[error("ground set of size {n} exceeds the subset-enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("generator {0:?} is not squarefree")]
    NotSquarefree(Vec<u32>),

    #[error("the void complex corresponds to the unit ideal, which has no Betti table here")]
    VoidComplex,

    #[error("the unit ideal (a generator equal to 1) is not supported")]
    UnitIdeal,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("unknown field {0:?}, expected gf2, gf<p> or q")]
    UnknownField(String),

    #[error("duplicate matrix entry at ({row}, {col})")]
    DuplicateEntry { row: usize, col: usize },

    #[error("matrix entry ({row}, {col}) outside {rows}x{cols}")]
    EntryOutOfBounds { row: usize, col: usize, rows: usize, cols: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no {k} vertices pairwise at distance >= {min_dist} after {subdivisions} subdivisions")]
    SpreadFailed { k: usize, min_dist: usize, subdivisions: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
