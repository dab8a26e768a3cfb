//! Finite fields `GF(p^n)` built from first principles, and the Paley family of
//! Cayley graphs over them, with exhaustive checkers for the properties those
//! graphs are known to have.
//!
//! - [`field`]: polynomials over `Z_p`, irreducibility, field arithmetic,
//!   primitive elements, power tables and residue subgroups.
//! - [`graph`]: Cayley graphs on `(F_q, +)` for the Paley, cubic, quadruple,
//!   generalized, `m`-Paley and P* families, plus DOT / edge-list / JSON export.
//! - [`properties`]: regularity, strong regularity, connectivity,
//!   self-complementarity, affine symmetry, n-existential closure and `P(m,n,k)`.
//! - [`cli`]: the `paleylab` command surface (`field`, `graph`, `check`, `survey`).
//!
//! ```
//! use paleylab::graph::{build_family, Family, FamilySpec};
//! use paleylab::field::Field;
//! use paleylab::properties::srg_check;
//!
//! let field = Field::with_order(13).unwrap();
//! let g = build_family(&FamilySpec::new(Family::Paley, field)).unwrap();
//! let params = srg_check(&g).unwrap();
//! assert_eq!((params.n, params.k, params.lambda, params.mu), (13, 6, 2, 3));
//! ```

pub mod arith;
pub mod bitset;
pub mod cli;
pub mod error;
pub mod field;
pub mod graph;
pub mod properties;

pub use error::{Error, Result};
