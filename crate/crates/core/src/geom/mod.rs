//! Exact rational polyhedral geometry.

mod dd;
pub mod distance;
pub mod lp;
pub mod polyhedron;

pub use dd::{cone_generators, ConeGenerators};
pub use distance::{hausdorff_sq, point_polytope_sqdist, sqrt_triangle_holds};
pub use lp::{lp_feasible, maximize, Feasibility, LpOutcome, LpProblem};
pub use polyhedron::{
    enumerate_vertices, hull, minkowski_sum, support_min, HPolyhedron, HalfSpace, VPolyhedron,
};
