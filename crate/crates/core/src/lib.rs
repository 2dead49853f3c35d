//! Cospectral bipartite graphs with different short-cycle counts.
//!
//! The crate builds graph pairs by Godsil-McKay switching, decides
//! cospectrality exactly through integer characteristic polynomials, and
//! counts simple cycles up to a length cap.
//!
//! ```
//! use cospec_core::{apply_switching, build_gt, char_poly, count_cycles};
//!
//! let g = build_gt(2).unwrap();
//! let h = apply_switching(&g.graph, &g.partition).unwrap();
//! assert_eq!(char_poly(&g.graph), char_poly(&h));
//! assert_eq!(count_cycles(&g.graph, 20).total(), 1);
//! assert_eq!(count_cycles(&h, 20).total(), 0);
//! ```

pub mod census;
pub mod constructions;
pub mod graph;
pub mod io;
pub mod recipe;
pub mod spectral;
pub mod switching;
pub mod tables;

pub use census::{
    census_cross_check, count_cycles, count_cycles_with, enumerate_cycles, CanonicalCycle,
    CensusError, CensusOptions, CrossCheck, CycleCensus,
};
pub use constructions::{
    build_cal_g, build_cal_g_prime, build_cal_gtk, build_cal_gtk_prime, build_di, build_di_prime,
    build_fjk, build_fjk_prime, build_g4k_pair, build_g_sec3, build_g_sec3_prime, build_gt,
    build_gt_prime, build_gtk, build_gtk_prime, build_halfreg_gcycle_pair, build_pair_6cycle,
    Built, ConstructionError, Family, Labeled, Pair, Switchable,
};
pub use graph::{
    classify_regularity, degree_sequences, Bipartition, DegreeSequences, Girth, Graph, GraphError,
    RegularityClass, Side,
};
pub use io::FormatError;
pub use recipe::{recipe_assertions, ConstructionRecipe, Fact, Verdict};
pub use spectral::{
    char_poly, closed_walk_counts, cospectral, float_spectrum, power_sums_from_charpoly, CharPoly,
    SpectralError, WalkCounts,
};
pub use switching::{
    apply_switching, check_structural_properties, classify_cells, induced_bipartition,
    switch_and_verify, switching_is_involution, validate_partition, verify_degree_preservation,
    CellType, Property, StructuralReport, SwitchingError, SwitchingPartition, ValidationReport,
    Violation,
};
pub use tables::{verify_table, TableId, TableReport};
