use super::{real, GeomError, Point3, Real, Vec3};

/// Minimum hit distance; intersections closer than this are ignored.
pub const MIN_HIT_DISTANCE: f64 = 1e-9;

/// Ray with unit direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ray<S: Real> {
    pub origin: Point3<S>,
    pub direction: Vec3<S>,
}

impl<S: Real> Ray<S> {
    /// Normalizes the direction; errors on a zero vector.
    pub fn new(origin: Point3<S>, direction: Vec3<S>) -> Result<Self, GeomError> {
        let n = direction.norm();
        if n == S::zero() {
            return Err(GeomError::ZeroDirection);
        }
        Ok(Self {
            origin,
            direction: direction / n,
        })
    }

    #[inline]
    pub fn at(&self, t: S) -> Point3<S> {
        self.origin + self.direction * t
    }
}

/// Axis-aligned bounding box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aabb<S: Real> {
    pub min: Point3<S>,
    pub max: Point3<S>,
}

impl<S: Real> Aabb<S> {
    pub fn empty() -> Self {
        let huge = S::max_value().unwrap_or_else(S::one);
        Self {
            min: Point3::new(huge, huge, huge),
            max: Point3::new(-huge, -huge, -huge),
        }
    }

    pub fn from_points(points: impl IntoIterator<Item = Point3<S>>) -> Self {
        let mut b = Self::empty();
        for p in points {
            b.grow(p);
        }
        b
    }

    #[inline]
    pub fn grow(&mut self, p: Point3<S>) {
        for i in 0..3 {
            if p[i] < self.min[i] {
                self.min[i] = p[i];
            }
            if p[i] > self.max[i] {
                self.max[i] = p[i];
            }
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut b = *self;
        b.grow(other.min);
        b.grow(other.max);
        b
    }

    pub fn center(&self) -> Point3<S> {
        nalgebra::center(&self.min, &self.max)
    }

    pub fn extents(&self) -> Vec3<S> {
        self.max - self.min
    }

    pub fn is_empty(&self) -> bool {
        (0..3).any(|i| self.min[i] > self.max[i])
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut min = self.min;
        let mut max = self.max;
        for i in 0..3 {
            min[i] = min[i].max(other.min[i]);
            max[i] = max[i].min(other.max[i]);
        }
        Self { min, max }
    }

    pub fn contains(&self, p: &Point3<S>) -> bool {
        (0..3).all(|i| p[i] >= self.min[i] && p[i] <= self.max[i])
    }

    /// Inflate by `margin` on all sides.
    pub fn inflated(&self, margin: S) -> Self {
        let m = Vec3::new(margin, margin, margin);
        Self {
            min: self.min - m,
            max: self.max + m,
        }
    }

    /// Slab test: entry distance if the ray hits within `t_max`.
    #[inline]
    fn hit(&self, origin: &Point3<S>, inv_dir: &Vec3<S>, t_max: S) -> Option<S> {
        let mut t_enter = S::zero();
        let mut t_exit = t_max;
        for i in 0..3 {
            let t0 = (self.min[i] - origin[i]) * inv_dir[i];
            let t1 = (self.max[i] - origin[i]) * inv_dir[i];
            let (lo, hi) = if t0 < t1 { (t0, t1) } else { (t1, t0) };
            // NaN from 0 * inf means the origin sits on a degenerate slab;
            // min/max with NaN keeps the previous bound, which is safe here
            if lo > t_enter {
                t_enter = lo;
            }
            if hi < t_exit {
                t_exit = hi;
            }
            if t_enter > t_exit {
                return None;
            }
        }
        Some(t_enter)
    }
}

/// Nearest-hit result of a ray cast.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayHit<S: Real> {
    /// Distance from the ray origin (meters, since directions are unit).
    pub distance: S,
    /// Index of the hit triangle in the source triangle list.
    pub triangle: u32,
    /// Barycentric weights of the second and third triangle vertices.
    pub barycentric: [S; 2],
    /// Geometric unit normal, flipped to face the ray origin.
    pub normal: Vec3<S>,
}

/// Möller–Trumbore ray/triangle intersection.
///
/// Returns (t, u, v) with t > [`MIN_HIT_DISTANCE`]. Shared by the BVH
/// traversal and the brute-force oracle so both make identical
/// floating-point decisions.
#[inline]
pub fn intersect_triangle<S: Real>(
    v0: Point3<S>,
    v1: Point3<S>,
    v2: Point3<S>,
    ray: &Ray<S>,
) -> Option<(S, S, S)> {
    let e1 = v1 - v0;
    let e2 = v2 - v0;
    let p = ray.direction.cross(&e2);
    let det = e1.dot(&p);
    if det == S::zero() {
        return None;
    }
    let inv_det = S::one() / det;
    let s = ray.origin - v0;
    let u = s.dot(&p) * inv_det;
    if !(u >= S::zero() && u <= S::one()) {
        return None;
    }
    let q = s.cross(&e1);
    let v = ray.direction.dot(&q) * inv_det;
    if !(v >= S::zero() && u + v <= S::one()) {
        return None;
    }
    let t = e2.dot(&q) * inv_det;
    if t > real(MIN_HIT_DISTANCE) {
        Some((t, u, v))
    } else {
        None
    }
}

#[derive(Debug, Clone)]
struct Node<S: Real> {
    aabb: Aabb<S>,
    /// Leaf when `count > 0`: `start..start+count` indexes `order`.
    /// Inner node otherwise: children at `left` and `left + 1`.
    left: u32,
    start: u32,
    count: u32,
}

/// Bounding-volume hierarchy over a fixed triangle set; immutable after
/// construction and safe for concurrent queries.
#[derive(Debug, Clone)]
pub struct Bvh<S: Real> {
    nodes: Vec<Node<S>>,
    order: Vec<u32>,
    tris: Vec<[Point3<S>; 3]>,
}

const LEAF_SIZE: usize = 4;

impl<S: Real> Bvh<S> {
    pub fn build(vertices: &[Point3<S>], triangles: &[[u32; 3]]) -> Self {
        let tris: Vec<[Point3<S>; 3]> = triangles
            .iter()
            .map(|&[a, b, c]| {
                [
                    vertices[a as usize],
                    vertices[b as usize],
                    vertices[c as usize],
                ]
            })
            .collect();
        let mut boxes: Vec<Aabb<S>> = tris
            .iter()
            .map(|t| Aabb::from_points(t.iter().copied()))
            .collect();
        let centers: Vec<Point3<S>> = boxes.iter().map(|b| b.center()).collect();
        let mut order: Vec<u32> = (0..tris.len() as u32).collect();
        let mut nodes = Vec::new();
        if tris.is_empty() {
            nodes.push(Node {
                aabb: Aabb::empty(),
                left: 0,
                start: 0,
                count: 0,
            });
            boxes.clear();
            return Self { nodes, order, tris };
        }
        nodes.push(Node {
            aabb: Aabb::empty(),
            left: 0,
            start: 0,
            count: 0,
        });
        Self::split(&mut nodes, 0, &mut order, 0, tris.len(), &boxes, &centers);
        Self { nodes, order, tris }
    }

    pub fn from_mesh(mesh: &super::Mesh<S>) -> Self {
        Self::build(&mesh.vertices, &mesh.triangles)
    }

    pub fn triangle_count(&self) -> usize {
        self.tris.len()
    }

    fn split(
        nodes: &mut Vec<Node<S>>,
        node: usize,
        order: &mut [u32],
        start: usize,
        end: usize,
        boxes: &[Aabb<S>],
        centers: &[Point3<S>],
    ) {
        let mut aabb = Aabb::empty();
        for &i in &order[start..end] {
            aabb = aabb.union(&boxes[i as usize]);
        }
        nodes[node].aabb = aabb;

        let len = end - start;
        if len <= LEAF_SIZE {
            nodes[node].start = start as u32;
            nodes[node].count = len as u32;
            return;
        }

        let mut center_box = Aabb::empty();
        for &i in &order[start..end] {
            center_box.grow(centers[i as usize]);
        }
        let ext = center_box.extents();
        let axis = if ext.x >= ext.y && ext.x >= ext.z {
            0
        } else if ext.y >= ext.z {
            1
        } else {
            2
        };

        let mid = len / 2;
        // deterministic total order: coordinate, then original index
        order[start..end].select_nth_unstable_by(mid, |&a, &b| {
            let ca = centers[a as usize][axis];
            let cb = centers[b as usize][axis];
            ca.partial_cmp(&cb)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.cmp(&b))
        });

        let left = nodes.len();
        nodes[node].left = left as u32;
        nodes[node].count = 0;
        nodes.push(Node {
            aabb: Aabb::empty(),
            left: 0,
            start: 0,
            count: 0,
        });
        nodes.push(Node {
            aabb: Aabb::empty(),
            left: 0,
            start: 0,
            count: 0,
        });
        Self::split(nodes, left, order, start, start + mid, boxes, centers);
        Self::split(nodes, left + 1, order, start + mid, end, boxes, centers);
    }

    /// Nearest intersection; ties on distance go to the lower triangle
    /// index so results match the brute-force ordering exactly.
    pub fn raycast(&self, ray: &Ray<S>) -> Option<RayHit<S>> {
        if self.tris.is_empty() {
            return None;
        }
        let inv_dir = Vec3::new(
            S::one() / ray.direction.x,
            S::one() / ray.direction.y,
            S::one() / ray.direction.z,
        );
        let mut best_t = S::max_value().unwrap_or_else(S::one);
        let mut best: Option<(S, u32, S, S)> = None;

        let mut stack = [0u32; 64];
        let mut top = 0usize;
        stack[top] = 0;
        top += 1;

        while top > 0 {
            top -= 1;
            let node = &self.nodes[stack[top] as usize];
            if node.aabb.hit(&ray.origin, &inv_dir, best_t).is_none() {
                continue;
            }
            if node.count > 0 {
                for &i in &self.order[node.start as usize..(node.start + node.count) as usize] {
                    let [v0, v1, v2] = self.tris[i as usize];
                    if let Some((t, u, v)) = intersect_triangle(v0, v1, v2, ray) {
                        let better = match best {
                            None => t <= best_t,
                            Some((bt, bi, _, _)) => t < bt || (t == bt && i < bi),
                        };
                        if better {
                            best_t = t;
                            best = Some((t, i, u, v));
                        }
                    }
                }
            } else {
                let l = node.left as usize;
                let hit_l = self.nodes[l].aabb.hit(&ray.origin, &inv_dir, best_t);
                let hit_r = self.nodes[l + 1].aabb.hit(&ray.origin, &inv_dir, best_t);
                // push the nearer child last so it pops first
                match (hit_l, hit_r) {
                    (Some(tl), Some(tr)) => {
                        if tl <= tr {
                            stack[top] = (l + 1) as u32;
                            stack[top + 1] = l as u32;
                        } else {
                            stack[top] = l as u32;
                            stack[top + 1] = (l + 1) as u32;
                        }
                        top += 2;
                    }
                    (Some(_), None) => {
                        stack[top] = l as u32;
                        top += 1;
                    }
                    (None, Some(_)) => {
                        stack[top] = (l + 1) as u32;
                        top += 1;
                    }
                    (None, None) => {}
                }
            }
        }

        best.map(|(t, i, u, v)| {
            let [v0, v1, v2] = self.tris[i as usize];
            let mut normal = (v1 - v0).cross(&(v2 - v0)).normalize();
            if normal.dot(&ray.direction) > S::zero() {
                normal = -normal;
            }
            RayHit {
                distance: t,
                triangle: i,
                barycentric: [u, v],
                normal,
            }
        })
    }

    /// Number of intersections with t > [`MIN_HIT_DISTANCE`]; used for
    /// parity-based inside tests.
    pub fn count_hits(&self, ray: &Ray<S>) -> usize {
        if self.tris.is_empty() {
            return 0;
        }
        let inv_dir = Vec3::new(
            S::one() / ray.direction.x,
            S::one() / ray.direction.y,
            S::one() / ray.direction.z,
        );
        let t_max = S::max_value().unwrap_or_else(S::one);
        let mut count = 0;
        let mut stack = [0u32; 64];
        let mut top = 0usize;
        stack[top] = 0;
        top += 1;
        while top > 0 {
            top -= 1;
            let node = &self.nodes[stack[top] as usize];
            if node.aabb.hit(&ray.origin, &inv_dir, t_max).is_none() {
                continue;
            }
            if node.count > 0 {
                for &i in &self.order[node.start as usize..(node.start + node.count) as usize] {
                    let [v0, v1, v2] = self.tris[i as usize];
                    if intersect_triangle(v0, v1, v2, ray).is_some() {
                        count += 1;
                    }
                }
            } else {
                stack[top] = node.left;
                stack[top + 1] = node.left + 1;
                top += 2;
            }
        }
        count
    }

    pub fn aabb(&self) -> Aabb<S> {
        self.nodes[0].aabb
    }
}

/// Free-function form of [`Bvh::raycast`].
pub fn raycast<S: Real>(bvh: &Bvh<S>, ray: &Ray<S>) -> Option<RayHit<S>> {
    bvh.raycast(ray)
}
