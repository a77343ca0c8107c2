//! Exact computation of algebraic winding numbers of complex rational
//! functions on rectangle boundaries, and what they buy you: weighted
//! zero/pole counting (interior 1, edge 1/2, vertex 1/4) and certified
//! complex root isolation, all in rational arithmetic.
//!
//! The building blocks are Cauchy indices of real rational functions over
//! intervals ([`cauchy`]), assembled into the winding numbers `w` and `W`
//! over the four edges of a rectangle ([`winding`]). `W` tolerates zeros and
//! poles on the boundary, which makes it a robust counting oracle for the
//! subdivision-based root isolation in [`isolation`].

pub mod cauchy;
pub mod error;
pub mod isolation;
pub mod oracle;
pub mod poly;
pub mod product_formula;
pub mod root_count;
pub mod scalars;
pub mod winding;

pub use cauchy::{ind_interval, ind_point, inversion_residual, HalfInt, PolyPair, Side};
pub use error::{Error, Result};
pub use isolation::{isolate, root_bound, IsolatingBox};
pub use poly::{
    embed_bivariate, isolate_real_roots, val, val_complex, AlgebraicRoot, BivarComplexPoly,
    ComplexPoly, RealPoly, Valuation,
};
pub use product_formula::{aux_product_sides, bad_number_report, BadNumberReport, Variant};
pub use root_count::{
    classify_point, count_in, count_weighted, count_weighted_even, vertex_valuations, PointClass,
    WeightedCount,
};
pub use scalars::{GaussianRational, Rational};
pub use winding::{
    wind_w, wind_w_big, wind_w_raw_sum, QuarterInt, RationalFunction, Rectangle,
};
