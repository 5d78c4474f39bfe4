//! Exact arithmetic: integer and Laurent polynomials, dense matrices over
//! Z and Q, Gaussian rationals on the unit circle, and real-root counting.

mod gaussian;
mod intpoly;
mod laurent;
mod matrix;
pub(crate) mod modular;
mod polydet;
mod roots;
mod symmetric;

pub use gaussian::{GaussQ, UnitCirclePoint};
pub use intpoly::IntPoly;
pub use laurent::LaurentPoly;
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use polydet::{pencil_det, seifert_det};
pub use roots::{count_real_roots, isolate_real_roots, real_rooted_sign_counts, root_bound, RootInterval, SturmSequence};
pub use symmetric::{char_poly, inertia, signature_of_symmetric, signature_of_symmetric_int};


