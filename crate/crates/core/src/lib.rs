//! Exact symbolic dynamics for homoclinic orbits of the Smale horseshoe.
//!
//! Points of the horseshoe are bi-infinite binary sequences; the crate works
//! with the eventually periodic ones, compares them in the unimodal order,
//! builds the pruning regions of three families of homoclinic orbits and
//! lists the periodic orbits each of them forces.

pub mod cli;
pub mod error;
pub mod forcing;
pub mod nbt;
pub mod orbit;
pub mod region;
pub mod report;
pub mod symbolic;

pub use error::{Error, Result};
pub use forcing::{
    forced_periodic, forces_pair, forcing_report, orbit_avoids, sufficient_order_check, AnyOrbit,
    ForcingReport, OrderQuery, Sufficient,
};
pub use nbt::{nbt_code, NbtCode, Rational};
pub use orbit::{
    build_homoclinic, canonical_code, enumerate_periodic, orbit_points, Family, Generator,
    HomoclinicOrbit, PeriodicOrbit,
};
pub use region::{
    limiting_structure, rect_contains, region_maximal, region_plist, region_star, unstable_anchor,
    verify_pruning_domain, PList, PruningRegion, Rectangle, Verdict,
};
pub use symbolic::{
    cmp_unimodal, embed_coordinate, is_maximal_decoration, is_shift_maximal, PlanePoint, TailSeq,
    Word,
};
