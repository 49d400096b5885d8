//! Geometry kernel: meshes, primitives, rigid transforms, validation and
//! BVH ray casting. Everything here is generic over the scalar type; the
//! crate root pins `f64` aliases for the dataset pipeline.

mod bvh;
mod inside;
mod mesh;
mod primitives;
mod sample;
mod scalar;
mod validate;

pub use bvh::{intersect_triangle, raycast, Aabb, Bvh, Ray, RayHit};
pub use inside::{overlap_fraction, point_in_mesh};
pub use mesh::{merge_labeled, transform_mesh, LabeledMesh, Mesh};
pub use primitives::{
    circle_loop, extrude_polygon, gear_outline, make_cylinder, make_gear, revolve_profile,
};
pub use sample::sample_surface;
pub use scalar::{real, Real};
pub use validate::{validate_mesh, MeshReport};

pub type Point2<S> = nalgebra::Point2<S>;
pub type Point3<S> = nalgebra::Point3<S>;
pub type Vec2<S> = nalgebra::Vector2<S>;
pub type Vec3<S> = nalgebra::Vector3<S>;

/// Rigid motion: unit-quaternion rotation plus translation.
pub type RigidTransform<S> = nalgebra::Isometry3<S>;

use thiserror::Error;

/// Errors from mesh constructors and primitive generators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("triangle {triangle} references vertex {index}, mesh has {count} vertices")]
    IndexOutOfBounds {
        triangle: usize,
        index: u32,
        count: usize,
    },
    #[error("{name} must be positive, got {value}")]
    NonPositiveDimension { name: &'static str, value: f64 },
    #[error("need at least {min} segments, got {got}")]
    TooFewSegments { min: u32, got: u32 },
    #[error("loop needs at least 3 vertices, got {0}")]
    DegenerateLoop(usize),
    #[error("self-intersecting loop (edges {0} and {1})")]
    SelfIntersectingLoop(usize, usize),
    #[error("hole {0} is not strictly inside the outer loop")]
    HoleOutsideOuter(usize),
    #[error("profile point {0} has a negative radial coordinate")]
    NegativeRadius(usize),
    #[error("open profile without caps: endpoints must lie on the axis or the profile must close")]
    OpenProfile,
    #[error("interior profile point {0} lies on the axis")]
    InteriorAxisPoint(usize),
    #[error("gear radii must satisfy bore < root < outer")]
    RadiusOrdering,
    #[error("ray direction must be nonzero")]
    ZeroDirection,
    #[error("triangulation failed on a degenerate polygon")]
    Triangulation,
}
