//! Lower-bound formulas for Hilbert-Kunz multiplicity.
//!
//! Every function here is a pure exact evaluation. The ring-theoretic
//! hypotheses behind each inequality are the caller's responsibility; the
//! ring itself only enters through the numeric invariants it is summarized by
//! (dimension, multiplicity, generator counts, valuations and so on).

mod duality;
mod quadratic;
mod quadric;
mod radical;
mod volume;

pub use duality::{duality_bound_cm, duality_bound_gorenstein, gorenstein_threshold, minimal_multiplicity_bound};
pub use quadratic::{certify_interval, quadratic_apex, quadratic_g, IntervalCertRow, IntervalShape};
pub use quadric::{quadric_ehk, QuadricParams};
pub use radical::{
    final_theorem_bound, radical_iterate, radical_recursion_bound, radical_step_bound, GapCase,
    RadicalParams,
};
pub use volume::{optimize_slice, wy_volume_bound, BoundQuery, Generators, SliceOptimum};
