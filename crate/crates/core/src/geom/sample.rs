use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{real, Point3, Real};

/// Area-weighted uniform surface samples over a triangle soup.
///
/// Deterministic in the passed RNG; sqrt-warped barycentric sampling
/// keeps the density uniform within each triangle.
pub fn sample_surface<S: Real>(
    triangles: &[[Point3<S>; 3]],
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Point3<S>> {
    if triangles.is_empty() || count == 0 {
        return Vec::new();
    }
    let areas: Vec<f64> = triangles
        .iter()
        .map(|[a, b, c]| {
            let area = (b - a).cross(&(c - a)).norm() * real::<S>(0.5);
            area.to_f64().unwrap_or(0.0)
        })
        .collect();
    let mut cumulative = Vec::with_capacity(areas.len());
    let mut total = 0.0;
    for a in &areas {
        total += a;
        cumulative.push(total);
    }
    if total <= 0.0 {
        return Vec::new();
    }

    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let pick = rng.random_range(0.0..total);
        let idx = cumulative.partition_point(|&c| c <= pick).min(areas.len() - 1);
        let [a, b, c] = triangles[idx];
        let r1: f64 = rng.random_range(0.0..1.0);
        let r2: f64 = rng.random_range(0.0..1.0);
        let sqrt_r1 = r1.sqrt();
        let u = real::<S>(1.0 - sqrt_r1);
        let v = real::<S>(r2 * sqrt_r1);
        let w = S::one() - u - v;
        out.push(Point3::from(a.coords * u + b.coords * v + c.coords * w));
    }
    out
}
