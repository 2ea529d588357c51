//! Exact arithmetic: coefficient fields, multivariate polynomials over them,
//! polynomials in the black-dot variable `y`, and the quotient modules `V_{n,m}`.

pub mod field;
pub mod poly;
pub mod quot;
pub mod text;
pub mod ypoly;

pub use field::{Field, Fp, Q, SUPPORTED_PRIMES};
pub use poly::{elementary_symmetric, esym_range, Mono, Poly};
pub use quot::{modulus, quot_reduce, QuotElem};
pub use text::{parse_poly, parse_ypoly};
pub use ypoly::{linear_product, YPoly};
