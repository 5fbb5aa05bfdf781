//! Shellability, vertex decomposability and the per-vertex refutation of
//! vertex decomposability for the 26-vertex counterexample.

pub mod refute;
pub mod shelling;
pub mod vd;

pub use refute::{refute_vd_g26, refute_vd_g26_with, G26Refutation, RefuteOptions};
pub use shelling::{find_shelling, verify_shelling, ShellingCertificate, ShellingOptions, ShellingSearch};
pub use vd::{is_shedding_vertex, is_vertex_decomposable, replay_vd_trace, VdOptions, VdTrace, VdVerdict};
