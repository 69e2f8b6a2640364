//! Toric log del Pezzo surfaces with exactly one singularity.
//!
//! The crate works purely with exact integer and rational arithmetic on lattice
//! polygons: cone invariants and Hirzebruch-Jung data ([`cones`]), complete fans and
//! their desingularizations ([`fans`]), weighted circular graphs deciding surface
//! isomorphism ([`graphs`]), recognition and classification of one-singularity
//! LDP-polygons ([`delpezzo`]), and the quadric equations of the anticanonical
//! embedding ([`embedding`]).

pub mod cli;
pub mod cones;
pub mod delpezzo;
pub mod embedding;
mod error;
pub mod fans;
pub mod graphs;
pub mod lattice;
pub mod report;

pub use error::{Error, Result};
