//! Discrete universality scans: sup-norm distances of vertically shifted
//! zeta values to target functions on grids, and the density of shifts
//! that approximate every target within `epsilon`.

mod grid;
mod scan;
mod target;

pub use grid::{grid_compact, CompactSetGrid, Shape, DEFAULT_RESOLUTION};
pub use scan::{
    component_difference, hurwitz_ambient, scan_density, scan_profile, ComponentEcho, ComponentSetup, DensityLevel,
    GridEvaluator, Histogram, HitDetail, PhiMethod, ScanOptions, ScanResult, DEFAULT_EPSILONS, DEFAULT_N,
    MAX_HIT_DETAIL,
};
pub use target::{make_target, sup_distance, ComponentId, TargetFunction, TargetKind, NONVANISHING_MARGIN};
