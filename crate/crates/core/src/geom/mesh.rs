use super::{real, Aabb, GeomError, Point3, Real, RigidTransform, Vec3};

/// Indexed triangle mesh. Triangles wind counter-clockwise seen from
/// outside the solid; vertices are in meters.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh<S: Real> {
    pub vertices: Vec<Point3<S>>,
    pub triangles: Vec<[u32; 3]>,
}

impl<S: Real> Mesh<S> {
    /// Build a mesh, checking that every triangle index is in bounds.
    pub fn new(vertices: Vec<Point3<S>>, triangles: Vec<[u32; 3]>) -> Result<Self, GeomError> {
        let count = vertices.len();
        for (t, tri) in triangles.iter().enumerate() {
            for &i in tri {
                if i as usize >= count {
                    return Err(GeomError::IndexOutOfBounds {
                        triangle: t,
                        index: i,
                        count,
                    });
                }
            }
        }
        Ok(Self {
            vertices,
            triangles,
        })
    }

    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
            triangles: Vec::new(),
        }
    }

    #[inline]
    pub fn triangle(&self, i: usize) -> [Point3<S>; 3] {
        let [a, b, c] = self.triangles[i];
        [
            self.vertices[a as usize],
            self.vertices[b as usize],
            self.vertices[c as usize],
        ]
    }

    pub fn triangle_area(&self, i: usize) -> S {
        let [a, b, c] = self.triangle(i);
        (b - a).cross(&(c - a)).norm() * real(0.5)
    }

    pub fn surface_area(&self) -> S {
        (0..self.triangles.len()).map(|i| self.triangle_area(i)).sum()
    }

    /// Signed volume via the divergence theorem; positive for outward
    /// orientation, only meaningful for closed meshes.
    pub fn signed_volume(&self) -> S {
        let mut six_v = S::zero();
        for i in 0..self.triangles.len() {
            let [a, b, c] = self.triangle(i);
            six_v += a.coords.dot(&b.coords.cross(&c.coords));
        }
        six_v / real(6.0)
    }

    /// Area-weighted surface centroid.
    pub fn centroid(&self) -> Point3<S> {
        let third: S = real(3.0);
        let mut acc: Vec3<S> = Vec3::zeros();
        let mut total = S::zero();
        for i in 0..self.triangles.len() {
            let [a, b, c] = self.triangle(i);
            let area = self.triangle_area(i);
            let center = (a.coords + b.coords + c.coords) / third;
            acc += center * area;
            total += area;
        }
        if total == S::zero() {
            Point3::origin()
        } else {
            Point3::from(acc / total)
        }
    }

    pub fn aabb(&self) -> Aabb<S> {
        Aabb::from_points(self.vertices.iter().copied())
    }

    pub fn transformed(&self, t: &RigidTransform<S>) -> Self {
        transform_mesh(self, t)
    }
}

/// Apply a rigid transform to every vertex; topology and winding are
/// untouched.
pub fn transform_mesh<S: Real>(mesh: &Mesh<S>, t: &RigidTransform<S>) -> Mesh<S> {
    Mesh {
        vertices: mesh.vertices.iter().map(|v| t * v).collect(),
        triangles: mesh.triangles.clone(),
    }
}

/// Triangle soup with one tag per triangle; produced by [`merge_labeled`].
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledMesh<S: Real, L: Copy> {
    pub vertices: Vec<Point3<S>>,
    pub triangles: Vec<[u32; 3]>,
    /// One tag per triangle, parallel to `triangles`.
    pub tags: Vec<L>,
}

impl<S: Real, L: Copy> LabeledMesh<S, L> {
    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
            triangles: Vec::new(),
            tags: Vec::new(),
        }
    }

    #[inline]
    pub fn triangle(&self, i: usize) -> [Point3<S>; 3] {
        let [a, b, c] = self.triangles[i];
        [
            self.vertices[a as usize],
            self.vertices[b as usize],
            self.vertices[c as usize],
        ]
    }

    pub fn surface_area(&self) -> S {
        (0..self.triangles.len())
            .map(|i| {
                let [a, b, c] = self.triangle(i);
                (b - a).cross(&(c - a)).norm() * real(0.5)
            })
            .sum()
    }

    /// Extract the triangles whose tag matches, re-indexing vertices.
    pub fn filter(&self, mut keep: impl FnMut(&L) -> bool) -> Mesh<S> {
        let mut remap = vec![u32::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        let mut triangles = Vec::new();
        for (tri, tag) in self.triangles.iter().zip(&self.tags) {
            if !keep(tag) {
                continue;
            }
            let mut out = [0u32; 3];
            for (slot, &i) in out.iter_mut().zip(tri) {
                if remap[i as usize] == u32::MAX {
                    remap[i as usize] = vertices.len() as u32;
                    vertices.push(self.vertices[i as usize]);
                }
                *slot = remap[i as usize];
            }
            triangles.push(out);
            }
        Mesh {
            vertices,
            triangles,
        }
    }
}

/// Concatenate meshes into a tagged triangle soup. Each output triangle
/// carries the tag of its source mesh; vertex data is copied verbatim.
pub fn merge_labeled<'a, S, L, I>(parts: I) -> LabeledMesh<S, L>
where
    S: Real,
    L: Copy,
    I: IntoIterator<Item = (&'a Mesh<S>, L)>,
{
    let mut out = LabeledMesh::empty();
    for (mesh, tag) in parts {
        let base = out.vertices.len() as u32;
        out.vertices.extend_from_slice(&mesh.vertices);
        out.triangles
            .extend(mesh.triangles.iter().map(|[a, b, c]| [a + base, b + base, c + base]));
        out.tags.extend(std::iter::repeat(tag).take(mesh.triangles.len()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{make_cylinder, validate_mesh};
    use super::*;
    use approx::assert_relative_eq;
    use nalgebra::{UnitQuaternion, Vector3};

    #[test]
    fn transform_identity_is_bitwise() {
        let m = make_cylinder(0.5f64, 1.0, 16).unwrap();
        let t = RigidTransform::identity();
        assert_eq!(m, transform_mesh(&m, &t));
    }

    #[test]
    fn translation_composes() {
        let m = make_cylinder(0.5f64, 1.0, 16).unwrap();
        let t1 = RigidTransform::translation(1.0, 0.0, 0.0);
        let t2 = RigidTransform::translation(2.0, 0.0, 0.0);
        let twice = transform_mesh(&transform_mesh(&m, &t1), &t1);
        let once = transform_mesh(&m, &t2);
        for (a, b) in twice.vertices.iter().zip(&once.vertices) {
            assert_relative_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn quarter_turns_return_home() {
        let m = make_cylinder(0.3f64, 0.7, 12).unwrap();
        let rot = RigidTransform::from_parts(
            nalgebra::Translation3::identity(),
            UnitQuaternion::from_axis_angle(&Vector3::z_axis(), std::f64::consts::FRAC_PI_2),
        );
        let mut spun = m.clone();
        for _ in 0..4 {
            spun = transform_mesh(&spun, &rot);
        }
        for (a, b) in spun.vertices.iter().zip(&m.vertices) {
            assert_relative_eq!(a, b, epsilon = 1e-9);
        }
    }

    #[test]
    fn rigid_transform_preserves_pairwise_distances() {
        let m = make_cylinder(0.2f64, 0.9, 20).unwrap();
        let t = RigidTransform::from_parts(
            nalgebra::Translation3::new(0.3, -1.2, 2.0),
            UnitQuaternion::from_axis_angle(
                &nalgebra::Unit::new_normalize(Vector3::new(1.0, 2.0, -0.5)),
                1.1,
            ),
        );
        let moved = transform_mesh(&m, &t);
        for i in (0..m.vertices.len()).step_by(5) {
            for j in (i + 1..m.vertices.len()).step_by(7) {
                let before = (m.vertices[i] - m.vertices[j]).norm();
                let after = (moved.vertices[i] - moved.vertices[j]).norm();
                assert_relative_eq!(before, after, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn merge_counts_and_area() {
        let a = make_cylinder(0.5f64, 1.0, 4).unwrap();
        let b = make_cylinder(0.2f64, 0.4, 4).unwrap();
        let total_area = a.surface_area() + b.surface_area();
        let soup = merge_labeled([(&a, 1u8), (&b, 2u8)]);
        assert_eq!(soup.triangles.len(), 32);
        assert_eq!(soup.tags.iter().filter(|&&t| t == 1).count(), 16);
        assert_eq!(soup.tags.iter().filter(|&&t| t == 2).count(), 16);
        assert_relative_eq!(soup.surface_area(), total_area, max_relative = 1e-9);
    }

    #[test]
    fn merge_empty_is_empty() {
        let soup: LabeledMesh<f64, u8> = merge_labeled([]);
        assert!(soup.triangles.is_empty());
        assert!(soup.vertices.is_empty());
    }

    #[test]
    fn merge_then_filter_recovers_parts() {
        let a = make_cylinder(0.5f64, 1.0, 8).unwrap();
        let b = make_cylinder(0.25f64, 2.0, 6).unwrap();
        let soup = merge_labeled([(&a, 0u8), (&b, 1u8)]);
        for (tag, source) in [(0u8, &a), (1u8, &b)] {
            let got = soup.filter(|&t| t == tag);
            assert_eq!(got.triangles.len(), source.triangles.len());
            let report = validate_mesh(&got);
            assert!(report.closed);
            assert_relative_eq!(
                got.surface_area(),
                source.surface_area(),
                max_relative = 1e-12
            );
            assert_relative_eq!(
                got.signed_volume(),
                source.signed_volume(),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn bad_index_rejected() {
        let verts = vec![Point3::new(0.0f64, 0.0, 0.0), Point3::new(1.0, 0.0, 0.0)];
        let err = Mesh::new(verts, vec![[0, 1, 2]]).unwrap_err();
        assert!(matches!(err, GeomError::IndexOutOfBounds { index: 2, .. }));
    }
}
