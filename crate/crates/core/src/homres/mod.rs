//! Minimal free resolutions, Tor and Ext, and the invariants derived from them.

mod invariants;
mod resolution;
mod tor;

pub use invariants::{
    depth, depth_with, ext_dims_into_ring, free_locus_height, is_mcm, pd, pd_of, rank_of, residue_resolution,
    serre_check, serre_from_ext_dims, status_flags, support_contained, ProjDim, SerreReport, StatusFlags,
};
pub use resolution::{BettiTable, Resolution};
pub use tor::{ext_hilbert, ext_module, tor_hilbert, tor_module, tor_profile, tor_profile_with, Periodicity, TorProfile};

#[cfg(test)]
mod tests;
