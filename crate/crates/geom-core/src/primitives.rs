//! Watertight primitive meshes used as a desk-scale object corpus.

use crate::{GeomError, Result, TriMesh, Vec3};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Primitive {
    /// Axis-aligned box centered at the origin, full extents `size`.
    Box { size: Vec3 },
    /// Cylinder along Z centered at the origin.
    Cylinder { radius: f64, height: f64 },
    Sphere { radius: f64 },
}

/// Tessellate a primitive. `resolution` is the number of segments around the
/// axis for curved shapes (ignored for boxes). All outputs are watertight
/// with outward winding.
pub fn make_primitive(p: &Primitive, resolution: usize) -> Result<TriMesh> {
    match *p {
        Primitive::Box { size } => {
            if size.x <= 0.0 || size.y <= 0.0 || size.z <= 0.0 {
                return Err(GeomError::InvalidDimensions(format!("box size {size:?}")));
            }
            make_box(size)
        }
        Primitive::Cylinder { radius, height } => {
            if radius <= 0.0 || height <= 0.0 {
                return Err(GeomError::InvalidDimensions(format!(
                    "cylinder r={radius} h={height}"
                )));
            }
            if resolution < 3 {
                return Err(GeomError::InvalidDimensions(format!(
                    "cylinder resolution {resolution} < 3"
                )));
            }
            make_cylinder(radius, height, resolution)
        }
        Primitive::Sphere { radius } => {
            if radius <= 0.0 {
                return Err(GeomError::InvalidDimensions(format!("sphere r={radius}")));
            }
            if resolution < 4 {
                return Err(GeomError::InvalidDimensions(format!(
                    "sphere resolution {resolution} < 4"
                )));
            }
            make_sphere(radius, resolution)
        }
    }
}

fn make_box(size: Vec3) -> Result<TriMesh> {
    let h = size / 2.0;
    let v = |x: f64, y: f64, z: f64| Vec3::new(x * h.x, y * h.y, z * h.z);
    let vertices = vec![
        v(-1.0, -1.0, -1.0), // 0
        v(1.0, -1.0, -1.0),  // 1
        v(1.0, 1.0, -1.0),   // 2
        v(-1.0, 1.0, -1.0),  // 3
        v(-1.0, -1.0, 1.0),  // 4
        v(1.0, -1.0, 1.0),   // 5
        v(1.0, 1.0, 1.0),    // 6
        v(-1.0, 1.0, 1.0),   // 7
    ];
    let faces = vec![
        // -z
        [0, 2, 1],
        [0, 3, 2],
        // +z
        [4, 5, 6],
        [4, 6, 7],
        // -y
        [0, 1, 5],
        [0, 5, 4],
        // +y
        [2, 3, 7],
        [2, 7, 6],
        // -x
        [0, 4, 7],
        [0, 7, 3],
        // +x
        [1, 2, 6],
        [1, 6, 5],
    ];
    TriMesh::new(vertices, faces)
}

fn make_cylinder(radius: f64, height: f64, segments: usize) -> Result<TriMesh> {
    let hz = height / 2.0;
    let mut vertices = Vec::with_capacity(2 * segments + 2);
    for &z in &[-hz, hz] {
        for i in 0..segments {
            let a = 2.0 * std::f64::consts::PI * i as f64 / segments as f64;
            vertices.push(Vec3::new(radius * a.cos(), radius * a.sin(), z));
        }
    }
    let bottom_center = vertices.len();
    vertices.push(Vec3::new(0.0, 0.0, -hz));
    let top_center = vertices.len();
    vertices.push(Vec3::new(0.0, 0.0, hz));

    let mut faces = Vec::with_capacity(4 * segments);
    for i in 0..segments {
        let j = (i + 1) % segments;
        let (b0, b1) = (i, j);
        let (t0, t1) = (segments + i, segments + j);
        // side, outward
        faces.push([b0, b1, t1]);
        faces.push([b0, t1, t0]);
        // bottom cap faces -z
        faces.push([bottom_center, b1, b0]);
        // top cap faces +z
        faces.push([top_center, t0, t1]);
    }
    TriMesh::new(vertices, faces)
}

fn make_sphere(radius: f64, segments: usize) -> Result<TriMesh> {
    let rings = (segments / 2).max(2);
    let mut vertices = Vec::new();
    vertices.push(Vec3::new(0.0, 0.0, radius)); // north pole = 0
    for r in 1..rings {
        let phi = std::f64::consts::PI * r as f64 / rings as f64;
        let (sp, cp) = phi.sin_cos();
        for s in 0..segments {
            let theta = 2.0 * std::f64::consts::PI * s as f64 / segments as f64;
            vertices.push(Vec3::new(
                radius * sp * theta.cos(),
                radius * sp * theta.sin(),
                radius * cp,
            ));
        }
    }
    let south = vertices.len();
    vertices.push(Vec3::new(0.0, 0.0, -radius));

    let ring_start = |r: usize| 1 + (r - 1) * segments;
    let mut faces = Vec::new();
    // polar caps
    for s in 0..segments {
        let t = (s + 1) % segments;
        faces.push([0, ring_start(1) + s, ring_start(1) + t]);
        let last = ring_start(rings - 1);
        faces.push([south, last + t, last + s]);
    }
    // bands
    for r in 1..rings - 1 {
        let a = ring_start(r);
        let b = ring_start(r + 1);
        for s in 0..segments {
            let t = (s + 1) % segments;
            faces.push([a + s, b + s, b + t]);
            faces.push([a + s, b + t, a + t]);
        }
    }
    TriMesh::new(vertices, faces)
}
