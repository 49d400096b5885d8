use super::{real, GeomError, Mesh, Point2, Point3, Real};

/// Closed circle loop with `segments` vertices, counter-clockwise.
pub fn circle_loop<S: Real>(center: Point2<S>, radius: S, segments: u32) -> Vec<Point2<S>> {
    let n = segments as usize;
    (0..n)
        .map(|i| {
            let a = S::two_pi() * real::<S>(i as f64) / real(n as f64);
            Point2::new(center.x + radius * a.cos(), center.y + radius * a.sin())
        })
        .collect()
}

/// Signed area of a simple polygon (positive = counter-clockwise).
pub(crate) fn signed_area<S: Real>(poly: &[Point2<S>]) -> S {
    let mut two_a = S::zero();
    for i in 0..poly.len() {
        let p = poly[i];
        let q = poly[(i + 1) % poly.len()];
        two_a += p.x * q.y - q.x * p.y;
    }
    two_a * real(0.5)
}

fn ensure_winding<S: Real>(mut poly: Vec<Point2<S>>, ccw: bool) -> Vec<Point2<S>> {
    if (signed_area(&poly) > S::zero()) != ccw {
        poly.reverse();
    }
    poly
}

/// Even-odd test; points on the boundary are unspecified.
pub(crate) fn point_in_polygon<S: Real>(p: Point2<S>, poly: &[Point2<S>]) -> bool {
    let mut inside = false;
    let mut j = poly.len() - 1;
    for i in 0..poly.len() {
        let (pi, pj) = (poly[i], poly[j]);
        if (pi.y > p.y) != (pj.y > p.y) {
            let x = pi.x + (p.y - pi.y) / (pj.y - pi.y) * (pj.x - pi.x);
            if p.x < x {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

fn orient<S: Real>(a: Point2<S>, b: Point2<S>, c: Point2<S>) -> S {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Proper crossing of open segments (shared endpoints not counted).
fn segments_cross<S: Real>(a: Point2<S>, b: Point2<S>, c: Point2<S>, d: Point2<S>) -> bool {
    let d1 = orient(a, b, c);
    let d2 = orient(a, b, d);
    let d3 = orient(c, d, a);
    let d4 = orient(c, d, b);
    (d1 * d2 < S::zero()) && (d3 * d4 < S::zero())
}

fn check_simple<S: Real>(poly: &[Point2<S>]) -> Result<(), GeomError> {
    if poly.len() < 3 {
        return Err(GeomError::DegenerateLoop(poly.len()));
    }
    let n = poly.len();
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        for j in i + 1..n {
            // skip adjacent edges, including the wrap-around pair
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let (c, d) = (poly[j], poly[(j + 1) % n]);
            if segments_cross(a, b, c, d) {
                return Err(GeomError::SelfIntersectingLoop(i, j));
            }
        }
    }
    Ok(())
}

fn edges_cross_loops<S: Real>(a: &[Point2<S>], b: &[Point2<S>]) -> bool {
    for i in 0..a.len() {
        let (p, q) = (a[i], a[(i + 1) % a.len()]);
        for j in 0..b.len() {
            let (r, s) = (b[j], b[(j + 1) % b.len()]);
            if segments_cross(p, q, r, s) {
                return true;
            }
        }
    }
    false
}

/// Triangulate a polygon with holes; returns CCW triangles indexing the
/// concatenated (outer + holes) vertex list.
fn triangulate<S: Real>(
    outer: &[Point2<S>],
    holes: &[Vec<Point2<S>>],
) -> Result<Vec<[u32; 3]>, GeomError> {
    let mut coords: Vec<f64> = Vec::new();
    let mut hole_starts = Vec::new();
    for p in outer {
        coords.push(p.x.to_f64().unwrap());
        coords.push(p.y.to_f64().unwrap());
    }
    for hole in holes {
        hole_starts.push(coords.len() / 2);
        for p in hole {
            coords.push(p.x.to_f64().unwrap());
            coords.push(p.y.to_f64().unwrap());
        }
    }
    let tris =
        earcutr::earcut(&coords, &hole_starts, 2).map_err(|_| GeomError::Triangulation)?;
    if tris.is_empty() || tris.len() % 3 != 0 {
        return Err(GeomError::Triangulation);
    }
    let all: Vec<Point2<S>> = outer
        .iter()
        .chain(holes.iter().flatten())
        .copied()
        .collect();
    let mut out = Vec::with_capacity(tris.len() / 3);
    for t in tris.chunks_exact(3) {
        let (a, b, c) = (t[0] as u32, t[1] as u32, t[2] as u32);
        if orient(all[t[0]], all[t[1]], all[t[2]]) >= S::zero() {
            out.push([a, b, c]);
        } else {
            out.push([a, c, b]);
        }
    }
    Ok(out)
}

/// Extrude a polygon (with optional holes) from z = 0 to z = thickness.
///
/// The result is a closed mesh of genus equal to the number of holes.
pub fn extrude_polygon<S: Real>(
    outer: &[Point2<S>],
    holes: &[Vec<Point2<S>>],
    thickness: S,
) -> Result<Mesh<S>, GeomError> {
    if thickness <= S::zero() {
        return Err(GeomError::NonPositiveDimension {
            name: "thickness",
            value: thickness.to_f64().unwrap_or(f64::NAN),
        });
    }
    check_simple(outer)?;
    let outer = ensure_winding(outer.to_vec(), true);
    let mut fixed_holes = Vec::with_capacity(holes.len());
    for (h, hole) in holes.iter().enumerate() {
        check_simple(hole)?;
        let hole = ensure_winding(hole.clone(), false);
        let inside = hole.iter().all(|&p| point_in_polygon(p, &outer));
        if !inside || edges_cross_loops(&hole, &outer) {
            return Err(GeomError::HoleOutsideOuter(h));
        }
        fixed_holes.push(hole);
    }
    let cap = triangulate(&outer, &fixed_holes)?;

    let loops: Vec<&[Point2<S>]> = std::iter::once(outer.as_slice())
        .chain(fixed_holes.iter().map(|h| h.as_slice()))
        .collect();
    let nv: usize = loops.iter().map(|l| l.len()).sum();

    let mut vertices = Vec::with_capacity(2 * nv);
    for l in &loops {
        for p in l.iter() {
            vertices.push(Point3::new(p.x, p.y, S::zero()));
        }
    }
    for l in &loops {
        for p in l.iter() {
            vertices.push(Point3::new(p.x, p.y, thickness));
        }
    }

    let mut triangles = Vec::new();
    let top = nv as u32;
    for &[a, b, c] in &cap {
        triangles.push([a, c, b]); // bottom cap, -z
        triangles.push([top + a, top + b, top + c]); // top cap, +z
    }
    // side walls; outer is CCW and holes are CW, so one winding rule
    // yields outward normals for both
    let mut base = 0u32;
    for l in &loops {
        let n = l.len() as u32;
        for i in 0..n {
            let j = (i + 1) % n;
            let (b0, b1) = (base + i, base + j);
            let (t0, t1) = (top + base + i, top + base + j);
            triangles.push([b0, b1, t1]);
            triangles.push([b0, t1, t0]);
        }
        base += n;
    }
    Ok(Mesh {
        vertices,
        triangles,
    })
}

/// Closed cylinder along +z with its base at z = 0: two rings of
/// `segments` vertices plus the two cap centers.
pub fn make_cylinder<S: Real>(radius: S, height: S, segments: u32) -> Result<Mesh<S>, GeomError> {
    if radius <= S::zero() {
        return Err(GeomError::NonPositiveDimension {
            name: "radius",
            value: radius.to_f64().unwrap_or(f64::NAN),
        });
    }
    if height <= S::zero() {
        return Err(GeomError::NonPositiveDimension {
            name: "height",
            value: height.to_f64().unwrap_or(f64::NAN),
        });
    }
    if segments < 3 {
        return Err(GeomError::TooFewSegments {
            min: 3,
            got: segments,
        });
    }
    let n = segments as usize;
    let mut vertices = Vec::with_capacity(2 * n + 2);
    for i in 0..n {
        let a = S::two_pi() * real::<S>(i as f64) / real(n as f64);
        vertices.push(Point3::new(radius * a.cos(), radius * a.sin(), S::zero()));
    }
    for i in 0..n {
        let a = S::two_pi() * real::<S>(i as f64) / real(n as f64);
        vertices.push(Point3::new(radius * a.cos(), radius * a.sin(), height));
    }
    let bottom_center = (2 * n) as u32;
    let top_center = (2 * n + 1) as u32;
    vertices.push(Point3::new(S::zero(), S::zero(), S::zero()));
    vertices.push(Point3::new(S::zero(), S::zero(), height));

    let mut triangles = Vec::with_capacity(4 * n);
    for i in 0..n as u32 {
        let j = (i + 1) % n as u32;
        let (b0, b1) = (i, j);
        let (t0, t1) = (n as u32 + i, n as u32 + j);
        triangles.push([b0, b1, t1]);
        triangles.push([b0, t1, t0]);
        triangles.push([bottom_center, b1, b0]);
        triangles.push([top_center, t0, t1]);
    }
    Ok(Mesh {
        vertices,
        triangles,
    })
}

/// Revolve a polyline profile in the (radial, z) half-plane about +z.
///
/// Accepted profiles: endpoints on the axis (r = 0), which become pole
/// vertices, or a closed loop (first point equal to last) entirely off
/// the axis. The profile must be ordered counter-clockwise in the (r, z)
/// plane for outward normals; clockwise input is reversed automatically.
pub fn revolve_profile<S: Real>(profile: &[Point2<S>], segments: u32) -> Result<Mesh<S>, GeomError> {
    if segments < 3 {
        return Err(GeomError::TooFewSegments {
            min: 3,
            got: segments,
        });
    }
    // radii within the snap band count as on-axis; catches sin(pi) dust
    let snap: S = real(1e-12);
    let mut profile = profile.to_vec();
    for (i, p) in profile.iter_mut().enumerate() {
        if p.x < -snap {
            return Err(GeomError::NegativeRadius(i));
        }
        if p.x.abs() <= snap {
            p.x = S::zero();
        }
    }
    if profile.len() < 3 {
        return Err(GeomError::DegenerateLoop(profile.len()));
    }

    let closed_loop = profile.first() == profile.last();
    let mut pts: Vec<Point2<S>> = if closed_loop {
        profile[..profile.len() - 1].to_vec()
    } else {
        profile.clone()
    };
    if closed_loop {
        if pts.len() < 3 {
            return Err(GeomError::DegenerateLoop(pts.len()));
        }
        if pts.iter().any(|p| p.x == S::zero()) {
            return Err(GeomError::InteriorAxisPoint(0));
        }
    } else {
        if pts[0].x != S::zero() || pts[pts.len() - 1].x != S::zero() {
            return Err(GeomError::OpenProfile);
        }
        for (i, p) in pts.iter().enumerate().skip(1).take(pts.len() - 2) {
            if p.x == S::zero() {
                return Err(GeomError::InteriorAxisPoint(i));
            }
        }
    }
    // normalize to CCW cross-section so band normals face outward
    if signed_area(&pts) < S::zero() {
        pts.reverse();
    }

    let n = segments as usize;
    let ring_angle = |k: usize| S::two_pi() * real::<S>(k as f64) / real(n as f64);

    // vertex layout: rings for off-axis points, single vertex for poles
    let mut vertices = Vec::new();
    let mut start: Vec<u32> = Vec::with_capacity(pts.len()); // first vertex per profile point
    let mut is_pole: Vec<bool> = Vec::with_capacity(pts.len());
    for p in &pts {
        start.push(vertices.len() as u32);
        if p.x == S::zero() {
            is_pole.push(true);
            vertices.push(Point3::new(S::zero(), S::zero(), p.y));
        } else {
            is_pole.push(false);
            for k in 0..n {
                let a = ring_angle(k);
                vertices.push(Point3::new(p.x * a.cos(), p.x * a.sin(), p.y));
            }
        }
    }

    let mut triangles = Vec::new();
    let count = pts.len();
    let bands = if closed_loop { count } else { count - 1 };
    for b in 0..bands {
        let i = b;
        let j = (b + 1) % count;
        for k in 0..n {
            let k1 = (k + 1) % n;
            let p0 = if is_pole[i] { start[i] } else { start[i] + k as u32 };
            let p1 = if is_pole[i] { start[i] } else { start[i] + k1 as u32 };
            let q0 = if is_pole[j] { start[j] } else { start[j] + k as u32 };
            let q1 = if is_pole[j] { start[j] } else { start[j] + k1 as u32 };
            if p0 != p1 && p1 != q1 && q1 != p0 {
                triangles.push([p0, p1, q1]);
            }
            if p0 != q1 && q1 != q0 && q0 != p0 {
                triangles.push([p0, q1, q0]);
            }
        }
    }
    Ok(Mesh {
        vertices,
        triangles,
    })
}

/// Trapezoidal-tooth gear outline: four vertices per tooth, tips exactly
/// at `outer`, valleys on the root circle with one midpoint each.
pub fn gear_outline<S: Real>(teeth: u32, outer: S, root: S) -> Vec<Point2<S>> {
    let pitch = S::two_pi() / real(teeth as f64);
    let mut pts = Vec::with_capacity(5 * teeth as usize);
    let at = |r: S, a: S| Point2::new(r * a.cos(), r * a.sin());
    for t in 0..teeth {
        let base = pitch * real(t as f64);
        pts.push(at(root, base));
        pts.push(at(outer, base + pitch * real(0.15)));
        pts.push(at(outer, base + pitch * real(0.35)));
        pts.push(at(root, base + pitch * real(0.5)));
        pts.push(at(root, base + pitch * real(0.75)));
    }
    pts
}

/// Extruded spur gear with trapezoidal teeth and an optional central bore.
pub fn make_gear<S: Real>(
    teeth: u32,
    outer_radius: S,
    root_radius: S,
    bore_radius: S,
    thickness: S,
) -> Result<Mesh<S>, GeomError> {
    if teeth < 4 {
        return Err(GeomError::TooFewSegments {
            min: 4,
            got: teeth,
        });
    }
    if bore_radius < S::zero()
        || bore_radius >= root_radius
        || root_radius >= outer_radius
    {
        return Err(GeomError::RadiusOrdering);
    }
    if thickness <= S::zero() {
        return Err(GeomError::NonPositiveDimension {
            name: "thickness",
            value: thickness.to_f64().unwrap_or(f64::NAN),
        });
    }
    let outline = gear_outline(teeth, outer_radius, root_radius);
    let holes: Vec<Vec<Point2<S>>> = if bore_radius > S::zero() {
        let bore_segments = teeth.max(16);
        vec![circle_loop(Point2::origin(), bore_radius, bore_segments)]
    } else {
        Vec::new()
    };
    extrude_polygon(&outline, &holes, thickness)
}

#[cfg(test)]
mod tests {
    use super::super::validate_mesh;
    use super::*;
    use approx::assert_relative_eq;

    fn euler(mesh: &Mesh<f64>) -> i64 {
        validate_mesh(mesh).euler_characteristic
    }

    #[test]
    fn cylinder_counts_and_euler() {
        let m = make_cylinder(1.0f64, 2.0, 4).unwrap();
        assert_eq!(m.vertices.len(), 10);
        assert_eq!(m.triangles.len(), 16);
        assert_eq!(euler(&m), 2);
    }

    #[test]
    fn cylinder_radii_exact() {
        let m = make_cylinder(1.0f64, 1.0, 64).unwrap();
        for v in &m.vertices {
            let r = (v.x * v.x + v.y * v.y).sqrt();
            assert!(r < 1e-12 || (r - 1.0).abs() < 1e-12, "r = {r}");
        }
    }

    #[test]
    fn cylinder_volume_matches_prism_formula() {
        let (r, h, n) = (0.5f64, 0.1, 32u32);
        let m = make_cylinder(r, h, n).unwrap();
        let exact = 0.5 * n as f64 * r * r * (2.0 * std::f64::consts::PI / n as f64).sin() * h;
        assert_relative_eq!(m.signed_volume(), exact, max_relative = 1e-12);
        let analytic = std::f64::consts::PI * r * r * h;
        assert!((m.signed_volume() - analytic).abs() / analytic < 0.01);
    }

    #[test]
    fn cylinder_rejects_bad_args() {
        assert!(matches!(
            make_cylinder(-1.0f64, 1.0, 8),
            Err(GeomError::NonPositiveDimension { name: "radius", .. })
        ));
        assert!(matches!(
            make_cylinder(1.0f64, 0.0, 8),
            Err(GeomError::NonPositiveDimension { name: "height", .. })
        ));
        assert!(matches!(
            make_cylinder(1.0f64, 1.0, 2),
            Err(GeomError::TooFewSegments { .. })
        ));
    }

    #[test]
    fn extruded_box() {
        let square = vec![
            Point2::new(0.0f64, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        let m = extrude_polygon(&square, &[], 1.0).unwrap();
        let report = validate_mesh(&m);
        assert!(report.closed && report.orientable);
        assert_eq!(report.euler_characteristic, 2);
        assert_relative_eq!(m.signed_volume(), 1.0, epsilon = 1e-9);
    }

    #[test]
    fn extruded_square_with_hole_is_genus_one() {
        let outer = vec![
            Point2::new(-1.0f64, -1.0),
            Point2::new(1.0, -1.0),
            Point2::new(1.0, 1.0),
            Point2::new(-1.0, 1.0),
        ];
        let hole = vec![
            Point2::new(-0.3f64, -0.3),
            Point2::new(0.3, -0.3),
            Point2::new(0.3, 0.3),
            Point2::new(-0.3, 0.3),
        ];
        let m = extrude_polygon(&outer, &[hole], 0.1).unwrap();
        let report = validate_mesh(&m);
        assert!(report.closed && report.orientable);
        assert_eq!(report.euler_characteristic, 0);
        assert_eq!(report.genus, 1);
    }

    #[test]
    fn extruded_l_shape_volume_is_shoelace_area_times_thickness() {
        let l_shape = vec![
            Point2::new(0.0f64, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 2.0),
            Point2::new(0.0, 2.0),
        ];
        let area = signed_area(&l_shape);
        assert_relative_eq!(area, 3.0, epsilon = 1e-12);
        let m = extrude_polygon(&l_shape, &[], 0.2).unwrap();
        assert_relative_eq!(m.signed_volume(), area * 0.2, epsilon = 1e-9);
        assert!(validate_mesh(&m).closed);
    }

    #[test]
    fn extrude_rejects_self_intersection_and_stray_hole() {
        let bowtie = vec![
            Point2::new(0.0f64, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ];
        assert!(matches!(
            extrude_polygon(&bowtie, &[], 0.1),
            Err(GeomError::SelfIntersectingLoop(..))
        ));
        let outer = vec![
            Point2::new(0.0f64, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ];
        let outside = vec![
            Point2::new(2.0f64, 2.0),
            Point2::new(3.0, 2.0),
            Point2::new(3.0, 3.0),
            Point2::new(2.0, 3.0),
        ];
        assert!(matches!(
            extrude_polygon(&outer, &[outside], 0.1),
            Err(GeomError::HoleOutsideOuter(0))
        ));
    }

    #[test]
    fn revolved_rectangle_matches_cylinder_volume() {
        let (r, h, n) = (0.4f64, 1.3, 24u32);
        let profile = vec![
            Point2::new(0.0, 0.0),
            Point2::new(r, 0.0),
            Point2::new(r, h),
            Point2::new(0.0, h),
        ];
        let m = revolve_profile(&profile, n).unwrap();
        let cyl = make_cylinder(r, h, n).unwrap();
        assert_relative_eq!(m.signed_volume(), cyl.signed_volume(), max_relative = 1e-12);
        assert!(validate_mesh(&m).closed);
    }

    #[test]
    fn revolved_half_circle_is_a_sphere() {
        let radius = 0.7f64;
        let n = 64;
        let profile: Vec<Point2<f64>> = (0..=n)
            .map(|i| {
                let phi = std::f64::consts::PI * i as f64 / n as f64;
                Point2::new(radius * phi.sin(), -radius * phi.cos())
            })
            .collect();
        let m = revolve_profile(&profile, 64).unwrap();
        let report = validate_mesh(&m);
        assert!(report.closed && report.orientable);
        assert_eq!(report.genus, 0);
        let v = 4.0 / 3.0 * std::f64::consts::PI * radius.powi(3);
        assert!((m.signed_volume() - v).abs() / v < 0.02);
    }

    #[test]
    fn revolve_minimal_segments() {
        let profile = vec![
            Point2::new(0.0f64, 0.0),
            Point2::new(0.5, 0.0),
            Point2::new(0.5, 0.5),
            Point2::new(0.0, 0.5),
        ];
        let m = revolve_profile(&profile, 3).unwrap();
        let report = validate_mesh(&m);
        assert!(report.closed && report.orientable);
        assert_eq!(report.euler_characteristic, 2);
    }

    #[test]
    fn revolve_closed_loop_is_a_torus() {
        let profile = vec![
            Point2::new(1.0f64, -0.2),
            Point2::new(1.4, -0.2),
            Point2::new(1.4, 0.2),
            Point2::new(1.0, 0.2),
            Point2::new(1.0, -0.2),
        ];
        let m = revolve_profile(&profile, 16).unwrap();
        let report = validate_mesh(&m);
        assert!(report.closed && report.orientable);
        assert_eq!(report.genus, 1);
    }

    #[test]
    fn revolve_rejects_bad_profiles() {
        let negative = vec![
            Point2::new(0.0f64, 0.0),
            Point2::new(-0.5, 0.5),
            Point2::new(0.0, 1.0),
        ];
        assert!(matches!(
            revolve_profile(&negative, 8),
            Err(GeomError::NegativeRadius(1))
        ));
        let open = vec![
            Point2::new(0.2f64, 0.0),
            Point2::new(0.5, 0.5),
            Point2::new(0.3, 1.0),
        ];
        assert!(matches!(revolve_profile(&open, 8), Err(GeomError::OpenProfile)));
    }

    #[test]
    fn gear_tip_clusters_and_genus() {
        let m = make_gear(8, 0.03f64, 0.025, 0.0, 0.01).unwrap();
        let report = validate_mesh(&m);
        assert!(report.closed && report.orientable);
        assert_eq!(report.genus, 0);
        // count angular clusters of vertices at the outer radius
        let mut tip_angles: Vec<f64> = m
            .vertices
            .iter()
            .filter(|v| ((v.x * v.x + v.y * v.y).sqrt() - 0.03).abs() < 1e-12)
            .map(|v| v.y.atan2(v.x))
            .collect();
        tip_angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
        tip_angles.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        // two distinct tip corners per tooth, each shared by both z layers
        assert_eq!(tip_angles.len(), 16);
        let mut clusters = 0;
        let pitch = std::f64::consts::TAU / 8.0;
        let mut last = f64::NEG_INFINITY;
        for a in tip_angles {
            if a - last > pitch * 0.4 {
                clusters += 1;
            }
            last = a;
        }
        assert_eq!(clusters, 8);
    }

    #[test]
    fn gear_with_bore_is_genus_one() {
        let m = make_gear(12, 0.03f64, 0.025, 0.002, 0.01).unwrap();
        let report = validate_mesh(&m);
        assert!(report.closed && report.orientable);
        assert_eq!(report.euler_characteristic, 0);
        assert_eq!(report.genus, 1);
    }

    #[test]
    fn gear_volume_between_annulus_bounds() {
        let (outer, root, bore, t) = (0.03f64, 0.025, 0.005, 0.01);
        let m = make_gear(20, outer, root, bore, t).unwrap();
        let v = m.signed_volume();
        let lo = std::f64::consts::PI * (root * root - bore * bore) * t;
        let hi = std::f64::consts::PI * (outer * outer - bore * bore) * t;
        assert!(lo < v && v < hi, "volume {v} outside ({lo}, {hi})");
    }

    #[test]
    fn gear_rejects_radius_disorder() {
        assert!(matches!(
            make_gear(10, 0.02f64, 0.025, 0.001, 0.01),
            Err(GeomError::RadiusOrdering)
        ));
        assert!(matches!(
            make_gear(10, 0.03f64, 0.025, 0.026, 0.01),
            Err(GeomError::RadiusOrdering)
        ));
    }

    #[test]
    fn kernel_is_scalar_generic() {
        // f32 instantiation of the same constructors
        let m = make_cylinder(0.5f32, 0.1f32, 32).unwrap();
        let report = validate_mesh(&m);
        assert!(report.closed && report.orientable);
        assert_eq!(report.genus, 0);
        let v = m.signed_volume();
        let analytic = std::f32::consts::PI * 0.25 * 0.1;
        assert!((v - analytic).abs() / analytic < 0.02);
    }
}
