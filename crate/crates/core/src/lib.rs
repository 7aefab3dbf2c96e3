//! Conditional denoising diffusion on 3D voxel grids for 2D-to-3D single-cell
//! shape reconstruction, with geometric baselines, mesh morphometrics, and a
//! feature-based random-forest classification/augmentation pipeline.
//!
//! The crate is organised around the stages of the reconstruction workflow:
//!
//! - [`voxgrid`] — voxel/image data types, the `VOX3` file format, dataset
//!   manifests, and a synthetic cell-shape generator for desk-scale runs.
//! - [`schedule`] — diffusion noise schedules (beta, alpha, alpha-bar, sigma).
//! - [`diffuse`] — the forward noising process and training-pair generation.
//! - [`denoise`] — the noise predictor: a trainable 3D conv net with manual
//!   backprop, an analytic Gaussian oracle, and the Adam training loop.
//! - [`sample`] — reverse ancestral sampling conditioned on a 2D prior.
//! - [`morpho`] — isosurface extraction and morphological measurements.
//! - [`baseline`] — naive cylinder/ellipsoid extrusions from a 2D mask.
//! - [`evalkit`] — relative-error metrics, folds, and report aggregation.
//! - [`forest`] — a from-scratch random forest and the augmentation study.

pub mod baseline;
pub mod denoise;
pub mod diffuse;
mod error;
pub mod evalkit;
pub mod forest;
pub mod morpho;
pub mod sample;
pub mod schedule;
pub mod seeding;
pub mod voxgrid;

pub use error::{Error, Result};
