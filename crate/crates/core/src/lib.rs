//! Dynnikov coordinates for integral laminations on a genus-one surface
//! with `n >= 2` punctures and one boundary component.
//!
//! A lamination is measured by its intersection numbers with a fixed system
//! of arcs (`alpha_1..alpha_2n`, `beta_1..beta_{n+1}`, `gamma`) and the
//! longitude `c`. Those numbers, together with the direction of twisting,
//! compress into `2n + 2` integers `(a; b; T; c)`, and every integer vector
//! outside a small excluded set arises from exactly one lamination.
//!
//! All arithmetic is exact and generic over [`Scalar`]; the aliases at the
//! crate root fix the scalar to `i64` or [`BigInt`].

pub mod census;
pub mod coordinates;
pub mod error;
pub mod intersection;
pub mod oracle;
pub mod render;
pub mod scalar;
pub mod validate;

pub use census::{coordinates_from_decomposition, decompose, twist_split, TwistSign};
pub use coordinates::{coordinates_from_intersections, intersections_from_coordinates, kappa};
pub use error::Error;
pub use oracle::{enumerate_small, oracle_intersections, random_census, GeneratorConfig};
pub use render::{render_ascii, render_svg, schematic};
pub use scalar::{cplus, Scalar};
pub use validate::{validate_intersections, Condition, ValidationReport, Violation};

pub use num_bigint::BigInt;

pub use census::Decomposition as DecompositionOf;
pub use census::TwistSplit as TwistSplitOf;
pub use coordinates::DynnikovCoordinates as DynnikovCoordinatesOf;
pub use intersection::IntersectionVector as IntersectionVectorOf;

pub type IntersectionVector = intersection::IntersectionVector<i64>;
pub type DynnikovCoordinates = coordinates::DynnikovCoordinates<i64>;
pub type Decomposition = census::Decomposition<i64>;
pub type TwistSplit = census::TwistSplit<i64>;

pub type BigIntersectionVector = intersection::IntersectionVector<BigInt>;
pub type BigDynnikovCoordinates = coordinates::DynnikovCoordinates<BigInt>;
pub type BigDecomposition = census::Decomposition<BigInt>;
