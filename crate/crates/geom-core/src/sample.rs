//! Area-weighted uniform surface sampling.

use rand::Rng;

use crate::seeded::rng_for;
use crate::{GeomError, PointCloud, Result, TriMesh};

/// Draw `count` points uniformly over the mesh surface (area-weighted face
/// choice, uniform barycentric placement). Each point carries its face's
/// outward normal. Deterministic per seed; draws exactly three uniforms per
/// sample (face selector, two barycentric coordinates) in that order.
pub fn sample_surface(mesh: &TriMesh, count: usize, seed: u64) -> Result<PointCloud> {
    if mesh.is_empty() {
        return Err(GeomError::EmptyMesh);
    }
    let nf = mesh.faces().len();
    let mut cumulative = Vec::with_capacity(nf);
    let mut total = 0.0;
    for f in 0..nf {
        total += mesh.face_area(f);
        cumulative.push(total);
    }
    let normals: Vec<_> = (0..nf).map(|f| mesh.face_normal(f)).collect::<Result<_>>()?;

    let mut rng = rng_for(seed, 0);
    let mut points = Vec::with_capacity(count);
    let mut point_normals = Vec::with_capacity(count);
    for _ in 0..count {
        let u = rng.gen::<f64>() * total;
        let face = cumulative.partition_point(|&c| c <= u).min(nf - 1);
        let mut a = rng.gen::<f64>();
        let mut b = rng.gen::<f64>();
        if a + b > 1.0 {
            a = 1.0 - a;
            b = 1.0 - b;
        }
        let [v0, v1, v2] = mesh.face_vertices(face);
        points.push(v0 + (v1 - v0) * a + (v2 - v0) * b);
        point_normals.push(normals[face]);
    }
    PointCloud::with_normals(points, point_normals)
}
