//! Construction and verification of wild Galois points on projective
//! hypersurfaces over finite fields.
//!
//! The crate is layered bottom-up: [`field`] and [`linalg`] provide exact
//! arithmetic, [`group`] and [`lift`] handle finite matrix groups, [`forms`]
//! handles homogeneous polynomials, and [`construct`], [`verify`] and
//! [`ramify`] implement the synthesis and classification pipelines used by
//! the `wildgalois` command-line tool.

pub mod cli;
pub mod construct;
pub mod error;
pub mod factor;
pub mod field;
pub mod forms;
pub mod group;
pub mod lift;
pub mod ramify;
pub mod report;
pub mod linalg;
pub mod text;
pub mod upoly;
pub mod verify;

pub use error::{Error, Result};
pub use field::{make_field, parse_field, Elem, FieldSpec, FqElement};
pub use forms::HomogeneousForm;
pub use group::{closure, MatrixGroup};
pub use linalg::{Matrix, ProjectiveClass};
