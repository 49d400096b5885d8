//! Procedural generation of labeled small-electric-motor assemblies plus
//! a virtual-sensor pipeline that renders them into synthetic datasets:
//! depth/normal/segmentation images, labeled point clouds, 2D boxes and
//! registration pairs.
//!
//! The geometry kernel in [`geom`] is generic over its scalar type; the
//! aliases below pin the `f64` instantiation used by the whole pipeline.

pub mod geom;

/// Scalar used by the dataset pipeline.
pub type Scalar = f64;

pub type Point2 = geom::Point2<Scalar>;
pub type Point3 = geom::Point3<Scalar>;
pub type Vec3 = geom::Vec3<Scalar>;
pub type Mesh = geom::Mesh<Scalar>;
pub type RigidTransform = geom::RigidTransform<Scalar>;
pub type Ray = geom::Ray<Scalar>;
pub type RayHit = geom::RayHit<Scalar>;
pub type Aabb = geom::Aabb<Scalar>;
pub type Bvh = geom::Bvh<Scalar>;
pub type MeshReport = geom::MeshReport<Scalar>;
