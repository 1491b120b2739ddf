//! Exact classes of ordered configuration spaces `F_n(X)` and of sum-zero
//! configurations `F_n^0(E)` on an elliptic curve, in the Grothendieck ring
//! of varieties and as virtual Poincaré polynomials.
//!
//! The coefficients are (signed) Stirling numbers of the first kind and a
//! gcd²-weighted variant. Each is computed along two independent routes and
//! checked against brute-force counts in finite models.

pub mod classes;
pub mod error;
pub mod oracles;
pub mod partitions;
pub mod poly;
pub mod poset;
pub mod reference;
pub mod stirling;
pub mod verify;

pub use classes::{
    class_fn, class_fn0, elliptic_curve_poincare, render_row, table_rows, virtual_poincare,
    ClassPolynomial, OutputFormat, Space,
};
pub use error::{Error, Result};
pub use partitions::{set_partitions, shapes_of, SetPartition, Shape};
pub use poly::{ExactInt, IntPoly, Var};
pub use stirling::StirlingTable;
