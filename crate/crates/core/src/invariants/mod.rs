//! Tristram-Levine signatures, cyclic branched-cover homology and the
//! satellite formulas relating them to pattern and companion.

mod homology;
mod litherland;
mod signature;

pub use homology::{branched_cover_homology, branched_cover_presentation, homology_order_oracle};
pub use litherland::{
    litherland_homology_check, litherland_signature_check, LitherlandHomologyReport, LitherlandSignatureReport,
    SignatureSample,
};
pub use signature::{signature_at, signature_profile, z_of_param, SignatureArc, SignatureProfile};
