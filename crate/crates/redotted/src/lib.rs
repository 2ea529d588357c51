//! Exact computations with the redotted Webster algebra `W(n,1)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: exact fields, polynomials and the modules `V_{n,m}`.
//! * [`gradedla`]: degreewise linear algebra and graded dimensions.
//! * [`webster`]: the algebra `W(n,1)`, its relations, grading and center.
//! * [`websterp`]: the thick-strand subalgebras `W^p(n,1)` and their embeddings.
//! * [`soergel`]: the singular Soergel bimodules `P_i` and their morphisms.
//! * [`zigzag`]: the quiver algebra `A_n^!` and its Hochschild cohomology.
//! * [`braidcx`]: bimodules over `W(n,1)`, Rouquier complexes and the Burau action.
//! * [`cli`]: the expression language and command implementations.

pub mod braidcx;
pub mod cli;
pub mod exactalg;
pub mod gradedla;
pub mod soergel;
pub mod webster;
pub mod websterp;
pub mod zigzag;

/// Errors raised across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("not in the algebra image: {0}")]
    NotInImage(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("color mismatch at token {token}: {msg}")]
    Color { token: usize, msg: String },
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
