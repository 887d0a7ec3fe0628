use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("matrix is not Hermitian: entry ({row},{col}) deviates from conjugate symmetry by {deviation:e}")]
    NotHermitian {
        row: usize,
        col: usize,
        deviation: f64,
    },

    #[error(
        "eigensolver did not converge after {sweeps} sweeps (off-diagonal residual {residual:e})"
    )]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("interlacing violated: {0}")]
    Interlacing(String),

    #[error(
        "unsupported spectrum: {repeated} distinct eigenvalues are repeated, at most one repeated eigenvalue is supported"
    )]
    UnsupportedSpectrum { repeated: usize },

    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),

    #[error(
        "degenerate pair ({p},{q}): diagonal entries coincide, the sphere collapses to a point"
    )]
    DegeneratePair { p: usize, q: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}
