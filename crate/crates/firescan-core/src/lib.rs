//! Wildfire localization on 12-band aerial imagery.
//!
//! The crate covers the full desk pipeline: radiometric preprocessing of
//! multi-band rasters, 256x256 patch dataset construction, from-scratch
//! shallow classification and segmentation networks with deterministic
//! training, a color-rule baseline, pixel metrics, and a two-tier streaming
//! inference simulator with spectral-ablation and benchmark harnesses.
//!
//! All randomness is seeded (`rand_chacha`), all kernels are order
//! deterministic, and every on-disk format is a fixed little-endian layout
//! (see [`raster`] and [`checkpoint`]).

pub mod checkpoint;
pub mod dataset;
pub mod error;
pub mod experiments;
pub mod metrics;
pub mod models;
pub mod nn;
pub mod pipeline;
pub mod preprocess;
pub mod raster;
pub mod rules;
pub mod synthgen;

pub use dataset::{DatasetSplit, MaskPatch, Patch, PatchLabel, Split};
pub use error::{Error, Result};
pub use metrics::{ConfusionCounts, EvalReport};
pub use nn::Tensor;
pub use raster::{BandKind, BandSpec, MaskImage, RasterImage, UnitsState};
