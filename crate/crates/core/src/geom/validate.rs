use std::collections::HashMap;

use super::{real, Mesh, Real};

/// Area below which a triangle counts as degenerate (m²).
pub const DEGENERATE_AREA: f64 = 1e-12;

/// Diagnostic report from [`validate_mesh`]; never fails.
#[derive(Debug, Clone, PartialEq)]
pub struct MeshReport<S: Real> {
    /// Every undirected edge is shared by exactly two triangles.
    pub closed: bool,
    /// No undirected edge carries two triangles with the same direction.
    pub orientable: bool,
    /// From V − E + F = 2·components − 2·genus; meaningful when the mesh
    /// is closed and orientable.
    pub genus: i64,
    pub components: usize,
    pub euler_characteristic: i64,
    pub min_triangle_area: S,
    pub degenerate_count: usize,
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n as u32).collect())
    }
    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            self.0[x as usize] = self.0[self.0[x as usize] as usize];
            x = self.0[x as usize];
        }
        x
    }
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra as usize] = rb;
        }
    }
}

/// Exact topology and quality diagnostics via edge-incidence counting.
pub fn validate_mesh<S: Real>(mesh: &Mesh<S>) -> MeshReport<S> {
    // (forward, backward) directed-use counts per canonical undirected edge
    let mut edges: HashMap<(u32, u32), (u32, u32)> = HashMap::new();
    let mut referenced = vec![false; mesh.vertices.len()];
    let mut uf = UnionFind::new(mesh.vertices.len());

    let mut min_area = S::max_value().unwrap_or_else(S::one);
    let mut degenerate = 0usize;
    let threshold: S = real(DEGENERATE_AREA);

    for i in 0..mesh.triangles.len() {
        let tri = mesh.triangles[i];
        let area = mesh.triangle_area(i);
        if area < min_area {
            min_area = area;
        }
        if area < threshold {
            degenerate += 1;
        }
        for k in 0..3 {
            let a = tri[k];
            let b = tri[(k + 1) % 3];
            referenced[a as usize] = true;
            uf.union(a, b);
            let entry = edges.entry((a.min(b), a.max(b))).or_insert((0, 0));
            if a < b {
                entry.0 += 1;
            } else {
                entry.1 += 1;
            }
        }
    }

    let mut closed = true;
    let mut orientable = true;
    for &(fwd, bwd) in edges.values() {
        if fwd + bwd != 2 {
            closed = false;
        }
        if fwd > 1 || bwd > 1 {
            orientable = false;
        }
    }

    let v_used = referenced.iter().filter(|&&r| r).count() as i64;
    let e = edges.len() as i64;
    let f = mesh.triangles.len() as i64;
    let euler = v_used - e + f;

    let mut roots: Vec<u32> = (0..mesh.vertices.len() as u32)
        .filter(|&i| referenced[i as usize])
        .map(|i| uf.find(i))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    let components = roots.len();

    let genus = (2 * components as i64 - euler) / 2;

    if mesh.triangles.is_empty() {
        min_area = S::zero();
    }

    MeshReport {
        closed,
        orientable,
        genus,
        components,
        euler_characteristic: euler,
        min_triangle_area: min_area,
        degenerate_count: degenerate,
    }
}

#[cfg(test)]
mod tests {
    use super::super::{make_cylinder, make_gear};
    use super::*;

    #[test]
    fn cylinder_is_closed_genus_zero() {
        let m = make_cylinder(0.5f64, 1.0, 16).unwrap();
        let r = validate_mesh(&m);
        assert!(r.closed && r.orientable);
        assert_eq!(r.genus, 0);
        assert_eq!(r.components, 1);
        assert_eq!(r.degenerate_count, 0);
    }

    #[test]
    fn missing_triangle_breaks_closedness() {
        let mut m = make_cylinder(0.5f64, 1.0, 16).unwrap();
        m.triangles.pop();
        let r = validate_mesh(&m);
        assert!(!r.closed);
    }

    #[test]
    fn bored_gear_reports_genus_one() {
        let m = make_gear(10, 0.03f64, 0.024, 0.004, 0.008).unwrap();
        let r = validate_mesh(&m);
        assert!(r.closed && r.orientable);
        assert_eq!(r.genus, 1);
    }

    #[test]
    fn two_disjoint_cylinders_are_two_components() {
        let a = make_cylinder(0.5f64, 1.0, 8).unwrap();
        let b = {
            let mut b = make_cylinder(0.5f64, 1.0, 8).unwrap();
            for v in &mut b.vertices {
                v.x += 10.0;
            }
            b
        };
        let mut merged = a.clone();
        let base = merged.vertices.len() as u32;
        merged.vertices.extend(b.vertices);
        merged
            .triangles
            .extend(b.triangles.iter().map(|[x, y, z]| [x + base, y + base, z + base]));
        let r = validate_mesh(&merged);
        assert!(r.closed);
        assert_eq!(r.components, 2);
        assert_eq!(r.euler_characteristic, 4);
        assert_eq!(r.genus, 0);
    }

    #[test]
    fn flipped_triangle_breaks_orientability() {
        let mut m = make_cylinder(0.5f64, 1.0, 8).unwrap();
        let [a, b, c] = m.triangles[0];
        m.triangles[0] = [a, c, b];
        let r = validate_mesh(&m);
        assert!(!r.orientable);
    }

    #[test]
    fn empty_mesh_report() {
        let m: Mesh<f64> = Mesh::empty();
        let r = validate_mesh(&m);
        assert!(r.closed);
        assert_eq!(r.components, 0);
        assert_eq!(r.euler_characteristic, 0);
    }
}
