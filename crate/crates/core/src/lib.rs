//! Exact computations with coadjoint orbits of the mirabolic group P_n over
//! R and C: normal forms, moment-map images of GL_n orbits, and symbolic
//! representation labels.

pub mod classify;
pub mod corpus;
pub mod enumeration;
pub mod error;
pub mod linalg;
pub mod moment;
pub mod orbit;
pub mod partition;
pub mod rep;

pub use classify::{
    centralizer_dim, classify, classify_auto, classify_with_certificate, point_stabilizer_dim,
    reduce, stabilizer_dim,
};
pub use enumeration::{
    build_g_i, build_v_i, dense_selection, enumerate_selections, IndexSelection,
};
pub use error::{Error, Result};
pub use linalg::{ExactMatrix, Field, Scalar};
pub use moment::{check_geometry, oracle_image, symbolic_image, GeometryReport};
pub use orbit::{project_to_p_star, Eigenvalue, EigenvalueClass, MirabolicOrbitDatum, OrbitDatum};
pub use partition::Partition;
pub use rep::{attach_rep_gl, attach_rep_p, verify_duflo, Factor, PRepLabel, RepLabel};
