//! Daisy cubes and other partial cubes as sets of bit-labeled hypercube
//! vertices, with their Wiener and Mostar indices computed two ways: from
//! per-direction semicube counts in O(n·|V|), and by an all-pairs BFS oracle.
//!
//! ```
//! use daisycube::{direction_profile, fibonacci_cube, wiener_semicube, mostar_semicube};
//!
//! let g = fibonacci_cube(4).unwrap();
//! let p = direction_profile(&g);
//! assert_eq!(wiener_semicube(&p).unwrap(), 54);
//! assert_eq!(mostar_semicube(&p).unwrap(), 28);
//! // 2W - Mo = |V||E|
//! assert_eq!(2 * 54 - 28, g.vertex_count() as u128 * g.edge_count() as u128);
//! ```

pub mod analysis;
pub mod cli;
pub mod daisy;
pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod label;
pub mod oracle;

pub use daisy::{daisy_closure, daisy_closure_with, maximal_antichain, GeneratorSet};
pub use error::{Error, Result};
pub use families::{
    fibonacci_cube, fibonacci_number, generalized_fibonacci_cube, hypercube, lucas_cube,
    vertex_deleted_cube, Family,
};
pub use graph::{CubeSubgraph, Limits, DEFAULT_MAX_VERTICES};
pub use invariants::{
    direction_profile, indices_from_profile, mostar_semicube, verify_difference_identity,
    verify_relation, wiener_semicube, DirectionProfile, IndexReport, Method,
};
pub use label::VertexLabel;
pub use oracle::{
    bfs_distances, build_adjacency, edge_side_counts, is_isometric, mostar_bruteforce,
    wiener_bruteforce, AdjacencyView, EdgeSideCount,
};
