use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension must be at least 1")]
    ZeroDimension,

    #[error("coordinate {0} is outside the supported range |x| <= 2^61")]
    CoordinateOutOfRange(i64),

    #[error("direction entries must be -1, 0 or 1 (found {0})")]
    InvalidDirection(i8),

    #[error("requested {requested}-cells of a {dim}-cell")]
    FaceDimensionOutOfRange { requested: usize, dim: usize },

    #[error("cell {0} is already an n-voxel and bounds no voxel")]
    AlreadyVoxel(String),

    #[error("indices must satisfy 0 <= i < j <= n (got i={i}, j={j}, n={n})")]
    IndexOrder { i: usize, j: usize, n: usize },

    #[error("voxel {0} is not part of the object")]
    VoxelNotInObject(String),

    #[error("adjacency index {k} out of range for ambient dimension {n}")]
    AdjacencyOutOfRange { k: usize, n: usize },

    #[error("gap dimension {i} out of range: need 0 <= i <= n - 2 with n = {n}")]
    GapDimensionOutOfRange { i: usize, n: usize },

    #[error("operation requires ambient dimension {expected}, object has {found}")]
    WrongAmbientDimension { expected: usize, found: usize },

    #[error("duplicate voxel {0}")]
    DuplicateVoxel(String),

    #[error("vertex {0} falls into more than one classification class")]
    ClassificationOverlap(String),

    #[error("relation pair refers to a point or block outside the structure")]
    RelationOutsideDomain,

    #[error("curve length must be at least 2 (got {0})")]
    InvalidLength(usize),

    #[error("could not grow a curve after {0} attempts")]
    GenerationFailed(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
