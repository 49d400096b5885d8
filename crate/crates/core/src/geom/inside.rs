use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Bvh, Mesh, Point3, Ray, Real, Vec3};

/// Parity test against a closed mesh along the given direction. Pick a
/// direction oblique to the mesh's faces so edge grazing stays a
/// measure-zero event.
pub fn point_in_mesh<S: Real>(bvh: &Bvh<S>, p: Point3<S>, direction: Vec3<S>) -> bool {
    let ray = match Ray::new(p, direction) {
        Ok(r) => r,
        Err(_) => return false,
    };
    bvh.count_hits(&ray) % 2 == 1
}

/// Deliberately irrational-looking probe direction, oblique to the
/// axis-aligned and revolved faces this kernel produces.
fn probe_direction<S: Real>() -> Vec3<S> {
    Vec3::new(
        super::real(0.540_302_305),
        super::real(0.678_600_712),
        super::real(0.497_364_413),
    )
}

/// Monte-Carlo estimate of the overlap volume between two closed meshes,
/// returned as a fraction of the smaller mesh's volume. Exact zero when
/// the bounding boxes are disjoint.
pub fn overlap_fraction<S: Real>(a: &Mesh<S>, b: &Mesh<S>, samples: u32, seed: u64) -> f64 {
    let box_a = a.aabb();
    let box_b = b.aabb();
    let common = box_a.intersection(&box_b);
    if common.is_empty() {
        return 0.0;
    }
    let bvh_a = Bvh::from_mesh(a);
    let bvh_b = Bvh::from_mesh(b);
    let dir = probe_direction::<S>();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut in_both = 0u32;
    for _ in 0..samples {
        let p = Point3::new(
            sample_range(&mut rng, common.min.x, common.max.x),
            sample_range(&mut rng, common.min.y, common.max.y),
            sample_range(&mut rng, common.min.z, common.max.z),
        );
        if point_in_mesh(&bvh_a, p, dir) && point_in_mesh(&bvh_b, p, dir) {
            in_both += 1;
        }
    }
    let ext = common.extents();
    let box_volume = (ext.x * ext.y * ext.z).to_f64().unwrap_or(0.0);
    let overlap = box_volume * in_both as f64 / samples as f64;
    let vol_a = a.signed_volume().to_f64().unwrap_or(0.0).abs();
    let vol_b = b.signed_volume().to_f64().unwrap_or(0.0).abs();
    let smaller = vol_a.min(vol_b);
    if smaller == 0.0 {
        return 0.0;
    }
    overlap / smaller
}

fn sample_range<S: Real>(rng: &mut ChaCha8Rng, lo: S, hi: S) -> S {
    if lo == hi {
        return lo;
    }
    let t: f64 = rng.random_range(0.0..1.0);
    lo + (hi - lo) * super::real(t)
}

#[cfg(test)]
mod tests {
    use super::super::make_cylinder;
    use super::*;

    #[test]
    fn inside_and_outside_cylinder() {
        let m = make_cylinder(0.5f64, 1.0, 32).unwrap();
        let bvh = Bvh::from_mesh(&m);
        let dir = probe_direction::<f64>();
        assert!(point_in_mesh(&bvh, Point3::new(0.0, 0.0, 0.5), dir));
        assert!(point_in_mesh(&bvh, Point3::new(0.3, 0.1, 0.9), dir));
        assert!(!point_in_mesh(&bvh, Point3::new(0.0, 0.0, 1.5), dir));
        assert!(!point_in_mesh(&bvh, Point3::new(0.6, 0.0, 0.5), dir));
    }

    #[test]
    fn disjoint_parts_have_zero_overlap() {
        let a = make_cylinder(0.5f64, 1.0, 16).unwrap();
        let mut b = make_cylinder(0.5f64, 1.0, 16).unwrap();
        for v in &mut b.vertices {
            v.z += 2.0;
        }
        assert_eq!(overlap_fraction(&a, &b, 1000, 7), 0.0);
    }

    #[test]
    fn self_overlap_is_total() {
        let a = make_cylinder(0.5f64, 1.0, 32).unwrap();
        let f = overlap_fraction(&a, &a, 4000, 7);
        assert!(f > 0.95, "self overlap fraction {f}");
    }

    #[test]
    fn half_embedded_cylinder() {
        let a = make_cylinder(0.5f64, 1.0, 32).unwrap();
        let mut b = make_cylinder(0.5f64, 1.0, 32).unwrap();
        for v in &mut b.vertices {
            v.z += 0.5;
        }
        let f = overlap_fraction(&a, &b, 8000, 3);
        assert!((f - 0.5).abs() < 0.08, "expected about half, got {f}");
    }
}
