//! Incremental quickhull for 3D point sets.
//!
//! Facets carry outward unit normals and plane offsets, so the hull doubles
//! as a half-space representation: a point `x` is inside iff
//! `n . x <= offset + eps` for every facet.

use std::collections::HashMap;

use crate::{GeomError, Result, Vec3};

/// Coplanarity threshold for visibility and containment tests.
pub const PLANE_EPS: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct HullFacet {
    /// Indices into the input point list, wound counter-clockwise seen from
    /// outside.
    pub vertices: [usize; 3],
    /// Outward unit normal.
    pub normal: Vec3,
    /// Plane offset; the facet plane is `{x : normal . x = offset}`.
    pub offset: f64,
}

impl HullFacet {
    pub fn signed_distance(&self, p: &Vec3) -> f64 {
        self.normal.dot(p) - self.offset
    }
}

#[derive(Debug, Clone)]
pub struct ConvexHull {
    /// Indices of input points that lie on the hull.
    pub vertices: Vec<usize>,
    pub facets: Vec<HullFacet>,
}

impl ConvexHull {
    pub fn contains(&self, p: &Vec3, tol: f64) -> bool {
        self.facets.iter().all(|f| f.signed_distance(p) <= tol)
    }

    /// Signed distance of the origin to the nearest facet plane; positive
    /// when the origin is strictly inside.
    pub fn origin_clearance(&self) -> f64 {
        self.facets
            .iter()
            .map(|f| f.offset)
            .fold(f64::INFINITY, f64::min)
    }

    /// Enclosed volume via the divergence theorem.
    pub fn volume(&self, points: &[Vec3]) -> f64 {
        self.facets
            .iter()
            .map(|f| {
                let [a, b, c] = f.vertices.map(|i| points[i]);
                a.dot(&b.cross(&c)) / 6.0
            })
            .sum()
    }
}

struct Face {
    verts: [usize; 3],
    normal: Vec3,
    offset: f64,
    outside: Vec<(usize, f64)>,
    alive: bool,
}

impl Face {
    fn new(verts: [usize; 3], points: &[Vec3], interior: &Vec3) -> Result<Self> {
        let [a, b, c] = verts.map(|i| points[i]);
        let cross = (b - a).cross(&(c - a));
        let norm = cross.norm();
        if norm < 1e-14 {
            return Err(GeomError::Degenerate(
                "hull facet collapsed to zero area".into(),
            ));
        }
        let mut normal = cross / norm;
        let mut verts = verts;
        if normal.dot(interior) - normal.dot(&a) > 0.0 {
            verts.swap(1, 2);
            normal = -normal;
        }
        let offset = normal.dot(&a);
        Ok(Self {
            verts,
            normal,
            offset,
            outside: Vec::new(),
            alive: true,
        })
    }

    fn signed_distance(&self, p: &Vec3) -> f64 {
        self.normal.dot(p) - self.offset
    }
}

/// Convex hull of at least four affinely independent points.
///
/// Returns `Degenerate` when the input has affine rank < 3 (coincident,
/// collinear or coplanar points).
pub fn convex_hull(points: &[Vec3]) -> Result<ConvexHull> {
    let simplex = initial_simplex(points)?;
    let interior = simplex
        .iter()
        .fold(Vec3::zeros(), |acc, &i| acc + points[i])
        / 4.0;

    let [i0, i1, i2, i3] = simplex;
    let mut faces = vec![
        Face::new([i0, i1, i2], points, &interior)?,
        Face::new([i0, i1, i3], points, &interior)?,
        Face::new([i0, i2, i3], points, &interior)?,
        Face::new([i1, i2, i3], points, &interior)?,
    ];

    // initial conflict assignment: each point goes to the face it is
    // farthest outside of
    for (idx, p) in points.iter().enumerate() {
        if simplex.contains(&idx) {
            continue;
        }
        assign_point(&mut faces, &[0, 1, 2, 3], idx, p);
    }

    let mut pending: Vec<usize> = (0..4).filter(|&f| !faces[f].outside.is_empty()).collect();

    while let Some(fid) = pending.pop() {
        if !faces[fid].alive || faces[fid].outside.is_empty() {
            continue;
        }
        let eye = faces[fid]
            .outside
            .iter()
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .map(|&(i, _)| i)
            .unwrap();
        let eye_p = points[eye];

        // visible set by flood fill over the live adjacency
        let adjacency = edge_map(&faces);
        let mut visible = vec![fid];
        let mut seen: HashMap<usize, ()> = HashMap::new();
        seen.insert(fid, ());
        let mut cursor = 0;
        while cursor < visible.len() {
            let f = visible[cursor];
            cursor += 1;
            let verts = faces[f].verts;
            for k in 0..3 {
                let a = verts[k];
                let b = verts[(k + 1) % 3];
                if let Some(&other) = neighbor(&adjacency, f, a, b) {
                    if !seen.contains_key(&other) && faces[other].signed_distance(&eye_p) > PLANE_EPS
                    {
                        seen.insert(other, ());
                        visible.push(other);
                    }
                }
            }
        }

        // horizon: directed edges of visible faces whose neighbor is hidden
        let mut horizon = Vec::new();
        for &f in &visible {
            let verts = faces[f].verts;
            for k in 0..3 {
                let a = verts[k];
                let b = verts[(k + 1) % 3];
                match neighbor(&adjacency, f, a, b) {
                    Some(&other) if seen.contains_key(&other) => {}
                    _ => horizon.push((a, b)),
                }
            }
        }

        // orphaned conflict points from all retired faces
        let mut orphans = Vec::new();
        for &f in &visible {
            faces[f].alive = false;
            orphans.append(&mut faces[f].outside);
        }

        let mut new_ids = Vec::with_capacity(horizon.len());
        for (a, b) in horizon {
            let face = Face::new([a, b, eye], points, &interior)?;
            new_ids.push(faces.len());
            faces.push(face);
        }
        for (idx, _) in orphans {
            if idx == eye {
                continue;
            }
            assign_point(&mut faces, &new_ids, idx, &points[idx]);
        }
        for id in new_ids {
            if !faces[id].outside.is_empty() {
                pending.push(id);
            }
        }
    }

    let mut facets = Vec::new();
    let mut vertex_set = Vec::new();
    for face in faces.iter().filter(|f| f.alive) {
        facets.push(HullFacet {
            vertices: face.verts,
            normal: face.normal,
            offset: face.offset,
        });
        vertex_set.extend_from_slice(&face.verts);
    }
    vertex_set.sort_unstable();
    vertex_set.dedup();
    Ok(ConvexHull {
        vertices: vertex_set,
        facets,
    })
}

fn assign_point(faces: &mut [Face], candidates: &[usize], idx: usize, p: &Vec3) {
    let mut best: Option<(usize, f64)> = None;
    for &f in candidates {
        if !faces[f].alive {
            continue;
        }
        let d = faces[f].signed_distance(p);
        if d > PLANE_EPS && best.map_or(true, |(_, bd)| d > bd) {
            best = Some((f, d));
        }
    }
    if let Some((f, d)) = best {
        faces[f].outside.push((idx, d));
    }
}

type EdgeMap = HashMap<(usize, usize), [Option<usize>; 2]>;

fn edge_map(faces: &[Face]) -> EdgeMap {
    let mut map: EdgeMap = HashMap::new();
    for (fid, face) in faces.iter().enumerate() {
        if !face.alive {
            continue;
        }
        for k in 0..3 {
            let a = face.verts[k];
            let b = face.verts[(k + 1) % 3];
            let key = (a.min(b), a.max(b));
            let slot = map.entry(key).or_insert([None, None]);
            if slot[0].is_none() {
                slot[0] = Some(fid);
            } else {
                slot[1] = Some(fid);
            }
        }
    }
    map
}

fn neighbor<'a>(map: &'a EdgeMap, fid: usize, a: usize, b: usize) -> Option<&'a usize> {
    let key = (a.min(b), a.max(b));
    let slot = map.get(&key)?;
    match slot {
        [Some(x), Some(y)] if *x == fid => Some(y),
        [Some(x), Some(_)] if *x != fid => slot[0].as_ref(),
        _ => None,
    }
}

fn initial_simplex(points: &[Vec3]) -> Result<[usize; 4]> {
    if points.len() < 4 {
        return Err(GeomError::Degenerate(format!(
            "{} points cannot span a 3D hull",
            points.len()
        )));
    }
    // extreme points along each axis
    let mut extremes = [0usize; 6];
    for (k, e) in extremes.iter_mut().enumerate() {
        let axis = k / 2;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        *e = (0..points.len())
            .max_by(|&a, &b| (sign * points[a][axis]).total_cmp(&(sign * points[b][axis])))
            .unwrap();
    }
    let (mut i0, mut i1, mut best) = (0, 0, -1.0);
    for &a in &extremes {
        for &b in &extremes {
            let d = (points[a] - points[b]).norm();
            if d > best {
                best = d;
                i0 = a;
                i1 = b;
            }
        }
    }
    if best < PLANE_EPS {
        return Err(GeomError::Degenerate("points are coincident".into()));
    }
    let dir = (points[i1] - points[i0]).normalize();
    let line_dist = |p: &Vec3| {
        let v = p - points[i0];
        (v - dir * v.dot(&dir)).norm()
    };
    let i2 = (0..points.len())
        .max_by(|&a, &b| line_dist(&points[a]).total_cmp(&line_dist(&points[b])))
        .unwrap();
    if line_dist(&points[i2]) < PLANE_EPS {
        return Err(GeomError::Degenerate("points are collinear".into()));
    }
    let normal = (points[i1] - points[i0])
        .cross(&(points[i2] - points[i0]))
        .normalize();
    let plane_dist = |p: &Vec3| (normal.dot(&(p - points[i0]))).abs();
    let i3 = (0..points.len())
        .max_by(|&a, &b| plane_dist(&points[a]).total_cmp(&plane_dist(&points[b])))
        .unwrap();
    if plane_dist(&points[i3]) < PLANE_EPS {
        return Err(GeomError::Degenerate(
            "points are coplanar (affine rank < 3)".into(),
        ));
    }
    Ok([i0, i1, i2, i3])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;

    fn octahedron() -> Vec<Vec3> {
        vec![
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(-1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.0, -1.0, 0.0),
            Vec3::new(0.0, 0.0, 1.0),
            Vec3::new(0.0, 0.0, -1.0),
        ]
    }

    #[test]
    fn octahedron_has_eight_facets_at_known_offset() {
        let pts = octahedron();
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.facets.len(), 8);
        assert_eq!(hull.vertices.len(), 6);
        let expect = 1.0 / 3f64.sqrt();
        for f in &hull.facets {
            assert!(
                (f.offset - expect).abs() < 1e-12,
                "offset {} != 1/sqrt(3)",
                f.offset
            );
            assert!((f.normal.norm() - 1.0).abs() < 1e-12);
        }
        assert!((hull.origin_clearance() - expect).abs() < 1e-12);
    }

    #[test]
    fn interior_point_not_on_hull() {
        let mut pts = vec![
            Vec3::new(0.0, 0.0, 0.0),
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(1.0, 1.0, 0.0),
            Vec3::new(0.0, 0.0, 1.0),
            Vec3::new(1.0, 0.0, 1.0),
            Vec3::new(0.0, 1.0, 1.0),
            Vec3::new(1.0, 1.0, 1.0),
        ];
        pts.push(Vec3::new(0.5, 0.5, 0.5));
        let hull = convex_hull(&pts).unwrap();
        assert!(!hull.vertices.contains(&8));
        assert_eq!(hull.facets.len(), 12);
        for f in &hull.facets {
            assert!(!f.vertices.contains(&8));
        }
    }

    #[test]
    fn random_points_all_contained() {
        // Oracle: half-space containment of every input point.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for case in 0..20 {
            let n = 100;
            let pts: Vec<Vec3> = (0..n)
                .map(|_| {
                    Vec3::new(
                        rng.gen_range(-1.0..1.0),
                        rng.gen_range(-1.0..1.0),
                        rng.gen_range(-1.0..1.0),
                    )
                })
                .collect();
            let hull = convex_hull(&pts).unwrap();
            for (i, p) in pts.iter().enumerate() {
                assert!(
                    hull.contains(p, PLANE_EPS),
                    "case {case}: point {i} outside hull"
                );
            }
        }
    }

    #[test]
    fn volume_invariant_under_permutation() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let pts: Vec<Vec3> = (0..60)
            .map(|_| {
                Vec3::new(
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                )
            })
            .collect();
        let v0 = convex_hull(&pts).unwrap().volume(&pts);
        for k in 0..5 {
            let mut permuted = pts.clone();
            // deterministic rotation of the list
            permuted.rotate_left(7 + k);
            let v = convex_hull(&permuted).unwrap().volume(&permuted);
            assert!((v - v0).abs() < 1e-9, "volume {v} != {v0}");
        }
    }

    #[test]
    fn degenerate_inputs_rejected() {
        let coplanar: Vec<Vec3> = (0..10)
            .map(|i| Vec3::new(i as f64, (i * i) as f64, 0.0))
            .collect();
        assert!(matches!(
            convex_hull(&coplanar),
            Err(GeomError::Degenerate(_))
        ));
        let collinear: Vec<Vec3> = (0..5).map(|i| Vec3::new(i as f64, 0.0, 0.0)).collect();
        assert!(matches!(
            convex_hull(&collinear),
            Err(GeomError::Degenerate(_))
        ));
        assert!(matches!(
            convex_hull(&[Vec3::zeros(), Vec3::new(1.0, 0.0, 0.0)]),
            Err(GeomError::Degenerate(_))
        ));
    }

    #[test]
    fn duplicated_points_are_harmless() {
        let mut pts = octahedron();
        pts.extend(octahedron());
        pts.push(Vec3::new(0.1, 0.1, 0.1));
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.facets.len(), 8);
        for p in &pts {
            assert!(hull.contains(p, PLANE_EPS));
        }
    }
}
