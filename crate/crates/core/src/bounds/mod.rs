//! Genus intervals from every available obstruction and certificate, the
//! trivial-block search, and closed-form tables for iterated 2-cables.

mod report;
mod search;
mod tables;

pub use report::{
    bounds_report, galg_upper, satellite_bounds, BoundsOptions, GenusBounds, Interval, Invariant, ProvenanceEntry,
    SatelliteBoundsOptions, Side, Source,
};
pub use search::{search_trivial_block, SearchBudget};
pub use tables::{
    cable2q_row, cable2q_table, iterated_cable_arithmetic, schubert_g3, tightness_equivalence_holds, CableTableRow,
    IteratedCableReport, IteratedLevel,
};
