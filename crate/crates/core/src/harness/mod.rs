//! Instance generation, empirical checks and export.

mod probe;
mod random;
mod run;
mod svg;
mod winding;

pub use probe::{
    annulus_continuity_probe, disc_continuity_probe, partition_check, path_deviation, perturb_annulus_pair,
    perturb_disc_pair, PartitionReport, ProbeReport,
};
pub use random::{
    annulus_pair, disc_pair, random_annulus, random_configuration, random_disc, seeded, SurfaceConfiguration,
    DISC_RADIUS, HEIGHT_RANGE, MIN_SEPARATION,
};
pub use run::{ConfigFile, PlannerRun, Sample};
pub use svg::render_svg;
pub use winding::{annulus_to_plane, braid_of_motion, winding_number};
