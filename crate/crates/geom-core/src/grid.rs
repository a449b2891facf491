//! Uniform hash grid for nearest-neighbor and radius queries.

use std::collections::HashMap;

use crate::Vec3;

/// Spatial hash over a fixed point set. Queries are deterministic: ties in
/// nearest-neighbor distance resolve to the lowest point index, and radius
/// queries return indices in ascending order.
pub struct PointGrid {
    cell: f64,
    cells: HashMap<[i64; 3], Vec<usize>>,
    points: Vec<Vec3>,
}

impl PointGrid {
    pub fn new(points: &[Vec3], cell: f64) -> Self {
        assert!(cell > 0.0, "cell size must be positive");
        let mut cells: HashMap<[i64; 3], Vec<usize>> = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            cells.entry(Self::key(p, cell)).or_default().push(i);
        }
        Self {
            cell,
            cells,
            points: points.to_vec(),
        }
    }

    /// Heuristic cell size: bounding-box diagonal scaled by point count.
    pub fn with_auto_cell(points: &[Vec3]) -> Self {
        let mut lo = Vec3::repeat(f64::INFINITY);
        let mut hi = Vec3::repeat(f64::NEG_INFINITY);
        for p in points {
            for k in 0..3 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        let diag = (hi - lo).norm().max(1e-9);
        let cell = diag / (points.len() as f64).cbrt().max(1.0);
        Self::new(points, cell.max(1e-9))
    }

    fn key(p: &Vec3, cell: f64) -> [i64; 3] {
        [
            (p.x / cell).floor() as i64,
            (p.y / cell).floor() as i64,
            (p.z / cell).floor() as i64,
        ]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of the nearest point to `q`, or `None` for an empty grid.
    pub fn nearest(&self, q: &Vec3) -> Option<usize> {
        if self.points.is_empty() {
            return None;
        }
        let center = Self::key(q, self.cell);
        let mut best: Option<(f64, usize)> = None;
        let mut ring = 0i64;
        loop {
            // scan the shell of cells at Chebyshev distance `ring`
            for dx in -ring..=ring {
                for dy in -ring..=ring {
                    for dz in -ring..=ring {
                        if dx.abs().max(dy.abs()).max(dz.abs()) != ring {
                            continue;
                        }
                        let key = [center[0] + dx, center[1] + dy, center[2] + dz];
                        if let Some(ids) = self.cells.get(&key) {
                            for &i in ids {
                                let d = (self.points[i] - q).norm_squared();
                                let better = match best {
                                    None => true,
                                    Some((bd, bi)) => d < bd || (d == bd && i < bi),
                                };
                                if better {
                                    best = Some((d, i));
                                }
                            }
                        }
                    }
                }
            }
            if let Some((d, i)) = best {
                // a hit in shell r guarantees the true nearest lies within
                // shell ceil(sqrt(d)/cell); stop once we have searched it
                let safe_ring = (d.sqrt() / self.cell).ceil() as i64 + 1;
                if ring >= safe_ring {
                    return Some(i);
                }
            }
            ring += 1;
            if ring > 2 && best.is_none() && self.ring_exceeds_bounds(&center, ring) {
                // grid exhausted; fall back to linear scan
                return (0..self.points.len())
                    .min_by(|&a, &b| {
                        (self.points[a] - q)
                            .norm_squared()
                            .total_cmp(&(self.points[b] - q).norm_squared())
                            .then(a.cmp(&b))
                    })
                    .map(Some)
                    .unwrap();
            }
        }
    }

    fn ring_exceeds_bounds(&self, center: &[i64; 3], ring: i64) -> bool {
        let mut lo = [i64::MAX; 3];
        let mut hi = [i64::MIN; 3];
        for key in self.cells.keys() {
            for k in 0..3 {
                lo[k] = lo[k].min(key[k]);
                hi[k] = hi[k].max(key[k]);
            }
        }
        (0..3).all(|k| center[k] - ring < lo[k] && center[k] + ring > hi[k])
    }

    /// Ascending indices of all points within `radius` of `q`.
    pub fn within_radius(&self, q: &Vec3, radius: f64) -> Vec<usize> {
        let r2 = radius * radius;
        let span = (radius / self.cell).ceil() as i64;
        let center = Self::key(q, self.cell);
        let mut out = Vec::new();
        for dx in -span..=span {
            for dy in -span..=span {
                for dz in -span..=span {
                    let key = [center[0] + dx, center[1] + dy, center[2] + dz];
                    if let Some(ids) = self.cells.get(&key) {
                        for &i in ids {
                            if (self.points[i] - q).norm_squared() <= r2 {
                                out.push(i);
                            }
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}
