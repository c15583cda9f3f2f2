//! Matrix builders, closed-form characteristic polynomials of the products,
//! and the verification engine comparing them with direct computation.

pub mod closed;
pub mod matrices;
pub mod verify;

pub use closed::{
    charpoly_edge_corona, charpoly_normalized, charpoly_senc, charpoly_svnc, closed_form, FormVariant,
    ProductForm,
};
pub use matrices::build_matrix;
pub use verify::{direct_charpoly, report, verify_theorem, VerificationReport};
