//! Crate-wide error type.

use std::fmt;
use std::io;

/// Errors produced by every fallible operation in this crate.
#[derive(Debug)]
pub enum Error {
    /// Voxel file does not start with the `VOX3` magic bytes.
    BadMagic,
    /// Voxel file ended before the header or payload was complete.
    TruncatedFile,
    /// A header dimension exceeds the 1024 limit (or is zero).
    DimOverflow,
    /// Underlying I/O failure.
    IoFailure(io::Error),
    /// The central slice of a volume has no foreground.
    EmptySlice,
    /// Requested synthetic grid side is outside [16, 64].
    SizeOutOfRange,
    /// Invalid beta range for a noise schedule.
    BadRange,
    /// Diffusion step index outside 1..=T.
    StepOutOfRange,
    /// Channel or grid dimensions do not agree.
    DimMismatch,
    /// A sample that needs a ground-truth volume has none.
    MissingTarget,
    /// A denoiser produced NaN or infinite values.
    NonFiniteOutput,
    /// The sampling chain state became NaN or infinite.
    NonFiniteState,
    /// Isosurface extraction found no crossing.
    EmptySurface,
    /// A mesh operation requires a closed mesh but got an open one.
    OpenMesh,
    /// Feature extraction on a grid with no foreground voxels.
    EmptyForeground,
    /// 2D mask has too few foreground pixels for a stable ellipse fit.
    DegenerateMask,
    /// Fitted extrusion extent exceeds the target grid depth.
    ExtentExceedsGrid,
    /// Relative error against a non-positive ground-truth value.
    ZeroGroundTruth,
    /// Fewer samples than folds.
    TooFewSamples,
    /// A prediction id has no matching ground-truth sample.
    MissingGroundTruth(String),
    /// Forest training needs at least two classes.
    SingleClass,
    /// Label vectors of unequal length.
    LengthMismatch,
    /// Manifest or config file is malformed.
    BadFormat(String),
    /// Duplicate sample id in a manifest.
    DuplicateId(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadMagic => write!(f, "file does not start with VOX3 magic"),
            Error::TruncatedFile => write!(f, "file is truncated"),
            Error::DimOverflow => write!(f, "dimension out of range (must be 1..=1024)"),
            Error::IoFailure(e) => write!(f, "i/o failure: {e}"),
            Error::EmptySlice => write!(f, "central slice has no foreground"),
            Error::SizeOutOfRange => write!(f, "grid side must be in [16, 64]"),
            Error::BadRange => write!(f, "invalid schedule parameters"),
            Error::StepOutOfRange => write!(f, "step index outside 1..=T"),
            Error::DimMismatch => write!(f, "dimension mismatch"),
            Error::MissingTarget => write!(f, "sample has no target volume"),
            Error::NonFiniteOutput => write!(f, "denoiser output is not finite"),
            Error::NonFiniteState => write!(f, "sampling chain diverged to non-finite values"),
            Error::EmptySurface => write!(f, "no isosurface crossing in grid"),
            Error::OpenMesh => write!(f, "mesh is not closed"),
            Error::EmptyForeground => write!(f, "grid has no foreground voxels"),
            Error::DegenerateMask => write!(f, "mask too degenerate for an ellipse fit"),
            Error::ExtentExceedsGrid => write!(f, "fitted extent exceeds grid depth"),
            Error::ZeroGroundTruth => write!(f, "ground-truth value must be positive"),
            Error::TooFewSamples => write!(f, "fewer samples than folds"),
            Error::MissingGroundTruth(id) => write!(f, "no ground truth for prediction id {id:?}"),
            Error::SingleClass => write!(f, "need at least two classes to train"),
            Error::LengthMismatch => write!(f, "label vectors have different lengths"),
            Error::BadFormat(msg) => write!(f, "bad format: {msg}"),
            Error::DuplicateId(id) => write!(f, "duplicate sample id {id:?}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::IoFailure(e) => Some(e),
            _ => None,
        }
    }
}

impl From<io::Error> for Error {
    fn from(e: io::Error) -> Self {
        Error::IoFailure(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
