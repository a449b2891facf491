//! Rigid transforms and Euler angle conversions.
//!
//! Euler convention is fixed as extrinsic XYZ: `R = Rz(rz) * Ry(ry) * Rx(rx)`.

use crate::{Mat3, Vec3};

/// A proper rigid transform: `x -> R x + t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidTransform {
    pub rotation: Mat3,
    pub translation: Vec3,
}

impl RigidTransform {
    pub fn identity() -> Self {
        Self {
            rotation: Mat3::identity(),
            translation: Vec3::zeros(),
        }
    }

    pub fn new(rotation: Mat3, translation: Vec3) -> Self {
        Self {
            rotation,
            translation,
        }
    }

    pub fn from_translation(translation: Vec3) -> Self {
        Self {
            rotation: Mat3::identity(),
            translation,
        }
    }

    pub fn apply(&self, p: &Vec3) -> Vec3 {
        self.rotation * p + self.translation
    }

    /// Rotate a direction (ignores translation).
    pub fn apply_dir(&self, d: &Vec3) -> Vec3 {
        self.rotation * d
    }

    pub fn inverse(&self) -> Self {
        let rt = self.rotation.transpose();
        Self {
            rotation: rt,
            translation: -(rt * self.translation),
        }
    }

    /// Composition: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            rotation: self.rotation * other.rotation,
            translation: self.rotation * other.translation + self.translation,
        }
    }

    /// Orthonormality and orientation check: `R^T R = I` and `det R = +1`
    /// within `tol`.
    pub fn is_valid(&self, tol: f64) -> bool {
        rotation_is_valid(&self.rotation, tol)
    }

    /// Rotation angle (radians) separating the rotations of two transforms.
    pub fn rotation_angle_to(&self, other: &Self) -> f64 {
        rotation_angle(&(self.rotation.transpose() * other.rotation))
    }
}

pub fn rotation_is_valid(r: &Mat3, tol: f64) -> bool {
    let gram = r.transpose() * r;
    let mut err: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let want = if i == j { 1.0 } else { 0.0 };
            err = err.max((gram[(i, j)] - want).abs());
        }
    }
    err <= tol && (r.determinant() - 1.0).abs() <= tol
}

/// Angle of a rotation matrix, from the trace.
pub fn rotation_angle(r: &Mat3) -> f64 {
    let c = ((r.trace() - 1.0) / 2.0).clamp(-1.0, 1.0);
    c.acos()
}

/// Extrinsic XYZ Euler angles to rotation matrix: `Rz(rz) * Ry(ry) * Rx(rx)`.
pub fn euler_to_rotation(r: Vec3) -> Mat3 {
    let (sx, cx) = r.x.sin_cos();
    let (sy, cy) = r.y.sin_cos();
    let (sz, cz) = r.z.sin_cos();
    let rx = Mat3::new(1.0, 0.0, 0.0, 0.0, cx, -sx, 0.0, sx, cx);
    let ry = Mat3::new(cy, 0.0, sy, 0.0, 1.0, 0.0, -sy, 0.0, cy);
    let rz = Mat3::new(cz, -sz, 0.0, sz, cz, 0.0, 0.0, 0.0, 1.0);
    rz * ry * rx
}

/// Inverse of [`euler_to_rotation`]. Near gimbal lock (`|ry| = pi/2`) the
/// x/z split is not unique; `rz = 0` is returned and `rx` absorbs the rest.
pub fn rotation_to_euler(m: &Mat3) -> Vec3 {
    let sy = -m[(2, 0)];
    if sy.abs() < 1.0 - 1e-12 {
        let ry = sy.asin();
        let rx = m[(2, 1)].atan2(m[(2, 2)]);
        let rz = m[(1, 0)].atan2(m[(0, 0)]);
        Vec3::new(rx, ry, rz)
    } else {
        let ry = if sy > 0.0 {
            std::f64::consts::FRAC_PI_2
        } else {
            -std::f64::consts::FRAC_PI_2
        };
        // R reduces to a single rotation about x combined with z; pin rz = 0.
        let rx = (-m[(0, 1)]).atan2(m[(1, 1)]);
        Vec3::new(rx, ry, 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;

    #[test]
    fn identity_euler() {
        let r = euler_to_rotation(Vec3::zeros());
        assert_abs_diff_eq!(r, Mat3::identity(), epsilon = 0.0);
    }

    #[test]
    fn quarter_turn_about_z() {
        let r = euler_to_rotation(Vec3::new(0.0, 0.0, std::f64::consts::FRAC_PI_2));
        let want = Mat3::new(0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0);
        assert_abs_diff_eq!(r, want, epsilon = 1e-12);
    }

    #[test]
    fn euler_round_trip_recovers_rotation() {
        // Oracle: compose-and-invert; compare matrices via relative rotation
        // angle so gimbal ambiguity in the triple does not matter.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let r = Vec3::new(
                rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
                rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
                rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
            );
            let m = euler_to_rotation(r);
            let back = euler_to_rotation(rotation_to_euler(&m));
            assert!(rotation_angle(&(m.transpose() * back)) < 1e-9);
        }
    }

    #[test]
    fn rotations_are_orthonormal() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let r = Vec3::new(
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
            );
            let m = euler_to_rotation(r);
            assert!(rotation_is_valid(&m, 1e-12));
        }
    }

    #[test]
    fn gimbal_lock_round_trip() {
        let r = Vec3::new(0.3, std::f64::consts::FRAC_PI_2, -0.8);
        let m = euler_to_rotation(r);
        let back = euler_to_rotation(rotation_to_euler(&m));
        assert!(rotation_angle(&(m.transpose() * back)) < 1e-9);
    }

    #[test]
    fn inverse_and_compose() {
        let t = RigidTransform::new(
            euler_to_rotation(Vec3::new(0.2, -0.4, 1.1)),
            Vec3::new(1.0, -2.0, 0.5),
        );
        let p = Vec3::new(0.3, 0.7, -0.2);
        let q = t.inverse().apply(&t.apply(&p));
        assert_abs_diff_eq!(p, q, epsilon = 1e-12);
        let c = t.compose(&t.inverse());
        assert!(c.is_valid(1e-12));
        assert_abs_diff_eq!(c.translation, Vec3::zeros(), epsilon = 1e-12);
        assert!(rotation_angle(&c.rotation) < 1e-12);
    }
}
