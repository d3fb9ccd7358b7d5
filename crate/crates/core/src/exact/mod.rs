//! Exact arithmetic: rationals, Laurent polynomials, cyclotomic quotients.

pub mod arith;
pub mod bilaurent;
pub mod cyclotomic;
pub mod laurent;
pub mod residue;
pub mod resultant;
pub mod scalar;
pub mod text;

pub use arith::{h1_of_surgery, mod_inverse, H1Summary, PresentationMatrix2};
pub use bilaurent::BiLaurentPoly;
pub use cyclotomic::cyclotomic_poly;
pub use laurent::LaurentPoly;
pub use residue::{Modulus, Residue};
pub use resultant::resultant;
pub use scalar::Scalar;
