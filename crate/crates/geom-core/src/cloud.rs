//! Point clouds with optional per-point unit normals.

use crate::transform::RigidTransform;
use crate::{GeomError, Result, Vec3};

const NORMAL_UNIT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PointCloud {
    pub points: Vec<Vec3>,
    pub normals: Option<Vec<Vec3>>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec3>) -> Self {
        Self {
            points,
            normals: None,
        }
    }

    pub fn with_normals(points: Vec<Vec3>, normals: Vec<Vec3>) -> Result<Self> {
        if normals.len() != points.len() {
            return Err(GeomError::InvalidData(format!(
                "{} normals for {} points",
                normals.len(),
                points.len()
            )));
        }
        for (i, n) in normals.iter().enumerate() {
            if (n.norm() - 1.0).abs() > NORMAL_UNIT_TOL {
                return Err(GeomError::InvalidData(format!(
                    "normal {i} has norm {}",
                    n.norm()
                )));
            }
        }
        Ok(Self {
            points,
            normals: Some(normals),
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Apply a rigid transform to points (and rotate normals when present).
    pub fn transformed(&self, t: &RigidTransform) -> PointCloud {
        PointCloud {
            points: self.points.iter().map(|p| t.apply(p)).collect(),
            normals: self
                .normals
                .as_ref()
                .map(|ns| ns.iter().map(|n| t.apply_dir(n)).collect()),
        }
    }

    /// Union of clouds. Normals are kept only if every part carries them.
    pub fn merged<'a>(parts: impl IntoIterator<Item = &'a PointCloud>) -> PointCloud {
        let mut points = Vec::new();
        let mut normals: Option<Vec<Vec3>> = Some(Vec::new());
        for part in parts {
            points.extend_from_slice(&part.points);
            match (&mut normals, &part.normals) {
                (Some(acc), Some(ns)) => acc.extend_from_slice(ns),
                _ => normals = None,
            }
        }
        PointCloud { points, normals }
    }

    /// Keep the points at `indices`, preserving order.
    pub fn select(&self, indices: &[usize]) -> PointCloud {
        PointCloud {
            points: indices.iter().map(|&i| self.points[i]).collect(),
            normals: self
                .normals
                .as_ref()
                .map(|ns| indices.iter().map(|&i| ns[i]).collect()),
        }
    }
}
