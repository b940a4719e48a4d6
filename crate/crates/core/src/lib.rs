//! Exact duality machinery for site percolation on the unit-square tiling.
//!
//! The library provides the grid model (cells, star/plus adjacency,
//! components), corner-graph topology (cycles, interior tests, outermost
//! boundaries), the surrounding vacant envelope of a finite star component,
//! rectangle crossing events with constructive witnesses, and an
//! independent brute-force oracle.

#![forbid(unsafe_code)]

pub mod crossings;
pub mod dualization;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod topology;

pub use crossings::{
    construct_vacant_plus_td, construct_vacant_star_td, duality_report, find_crossing,
    label_from_left, validate_witness, CrossingSpec, CrossingWitness, DualityReport, Label,
    LabelField, Orientation, Rect,
};
pub use dualization::{
    boundary_dual_cover, dual_outer_cycle, maximize_skeleton, skeleton_of_scycle,
    surrounding_vacant_cycle, vacant_frontier, verify_envelope, DualSkeleton, EnvelopeResult,
    PropertyCheck, PropertyReport, SCycle,
};
pub use error::{Error, Result};
pub use lattice::{
    adjacent, complement, connected_component, connected_component_within, neighbors,
    parse_configuration, AdjacencyKind, Cell, CellSet, CellState, Configuration, CornerPoint,
};
pub use oracle::{
    crossing_count, enumerate_configs, enumerate_configs_with_cap, enumerate_surrounding_scycles,
    exhaustive_exclusivity, naive_crossing_exists, random_config, Violation, ViolationList,
    ENUMERATION_CELL_CAP, EXHAUSTIVE_CELL_CAP,
};
pub use topology::{
    cell_edges, cell_in_interior, cells_in_interior, component_edge_graph, edge_in_interior,
    merge_cycle_square, outermost_boundary, point_in_cycle, Cycle, EdgePath, GridEdge,
    OutermostBoundary, Region,
};
