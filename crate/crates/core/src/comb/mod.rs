//! Classes, slopes, the coefficient maps s and u, vertex configurations and
//! their spanning trees.

pub mod class;
pub mod coeff;
pub mod config;
pub mod trees;

pub use class::{slope_of, KClass, Slope};
pub use coeff::{s_coeff, u_coeff, u_pieces};
pub use config::{compositions, enumerate_configs, Color, Vertex, VertexConfig};
pub use trees::{enumerate_trees, tree_sum, tree_sum_enumerated, TreeGraph};

/// Empties the u and tree-sum memo tables.
pub fn clear_caches() {
    coeff::clear_u_cache();
    trees::clear_tree_cache();
}
