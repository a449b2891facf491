//! Foundational 3D geometry for grasp planning.
//!
//! Everything here operates on plain `f64` data and is a pure function of its
//! inputs (plus an explicit seed where randomness is involved), so all
//! operations are safe to call concurrently and reproduce bit-identically for
//! the same `(input, seed)` pair.

pub mod cloud;
pub mod grid;
pub mod hull;
pub mod icp;
pub mod io;
pub mod mesh;
pub mod plane;
pub mod primitives;
pub mod raycast;
pub mod sample;
pub mod seeded;
pub mod transform;

pub use cloud::PointCloud;
pub use grid::PointGrid;
pub use hull::{convex_hull, ConvexHull, HullFacet};
pub use icp::{icp_rigid, IcpResult};
pub use mesh::TriMesh;
pub use plane::{fit_plane_ransac, Plane};
pub use primitives::{make_primitive, Primitive};
pub use raycast::{raycast_depth, Intrinsics};
pub use sample::sample_surface;
pub use transform::{euler_to_rotation, rotation_to_euler, RigidTransform};

/// 3D point or direction, meters (unitless for directions).
pub type Vec3 = nalgebra::Vector3<f64>;
/// 3x3 real matrix, row-major accessors via nalgebra.
pub type Mat3 = nalgebra::Matrix3<f64>;

/// Errors produced by the geometry layer.
#[derive(Debug, thiserror::Error)]
pub enum GeomError {
    #[error("mesh has no faces")]
    EmptyMesh,
    #[error("face {face} is degenerate (cross product norm {norm:.3e} < 1e-12)")]
    DegenerateFace { face: usize, norm: f64 },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("insufficient points: have {have}, need {need}")]
    InsufficientPoints { have: usize, need: usize },
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),
    #[error("parse error at {at}: {msg}")]
    Parse { at: String, msg: String },
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, GeomError>;
