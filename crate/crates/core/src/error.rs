use thiserror::Error;

/// Crate-wide error type. Shape and field mismatches are contract violations
/// surfaced as values, never silently coerced.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),

    #[error("modulus {0} exceeds the supported bound 2^31")]
    ModulusTooLarge(u64),

    #[error("entry {value} is not a canonical residue mod {p}")]
    EntryOutOfRange { value: u64, p: u64 },

    #[error("matrix data has length {len}, expected {rows}x{cols}")]
    BadMatrixData { len: usize, rows: usize, cols: usize },

    #[error("shape mismatch in {op}: left is {lrows}x{lcols}, right is {rrows}x{rcols}")]
    ShapeMismatch {
        op: &'static str,
        lrows: usize,
        lcols: usize,
        rrows: usize,
        rcols: usize,
    },

    #[error("field mismatch: F_{left} vs F_{right}")]
    FieldMismatch { left: u64, right: u64 },

    #[error("algebra axiom violated: {0}")]
    AlgebraAxiom(String),

    #[error("module axiom violated: {0}")]
    ModuleAxiom(String),

    #[error("operands live over different algebras: {0}")]
    AlgebraMismatch(String),

    #[error("path basis exceeded the cap of {cap} paths; a cycle is not bounded by the relations")]
    InfiniteDimensional { cap: usize },

    #[error("malformed relation: {0}")]
    MalformedRelation(String),

    #[error("bimodule tensor powers did not vanish within cap {cap}")]
    NotNilpotentWithinCap { cap: usize },

    #[error("bimodule is not 1-nilpotent: M(x)M has dimension {dim}")]
    NotOneNilpotent { dim: usize },

    #[error("Morita context products are nonzero: dim U(x)V = {uv}, dim V(x)U = {vu}")]
    NonzeroContextProducts { uv: usize, vu: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("document error: {0}")]
    Document(String),
}
