use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("field mismatch: sqrt({left}) vs sqrt({right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not square-free and > 1")]
    NotSquareFree(u32),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("dimension {0} outside 1..=8")]
    UnsupportedDimension(usize),
    #[error("grade {grade} out of range for Cl({dim})")]
    GradeOutOfRange { grade: usize, dim: usize },
    #[error("expected a grade-{expected} multivector")]
    WrongGrade { expected: usize },
    #[error("multivector mixes even and odd grades")]
    MixedParity,
    #[error("versor is not normalized")]
    NonUnitVersor,
    #[error("bivector does not square to -1")]
    NotARotationPlane,
    #[error("zero root")]
    ZeroRoot,
    #[error("root has zero reduced norm")]
    ZeroReducedNorm,
    #[error("operation needs exact Q(sqrt 5) scalars")]
    NeedsGoldenField,
    #[error("no square root of {0} in the chosen field")]
    NoSquareRoot(String),
    #[error("closure exceeded {cap} elements (affine or invalid input?)")]
    ClosureCap { cap: usize },
    #[error("simple roots must be non-zero and pairwise distinct")]
    DegenerateSimpleRoots,
    #[error("unrecognised bond: A_ij*A_ji = {0}")]
    UnrecognizedAngle(f64),
    #[error("diagram contains a cycle")]
    CyclicDiagram,
    #[error("Perron-Frobenius vector has a non-positive entry (not finite type)")]
    NonPositivePerronFrobenius,
    #[error("versor order not found within {cap} powers")]
    OrderNotFound { cap: usize },
    #[error("factorisation residual {0:e} exceeds tolerance")]
    ResidualTooLarge(f64),
    #[error("rotation angle gives non-integer exponent {0}")]
    NonIntegerExponent(f64),
    #[error("Coxeter element fixes a non-zero vector")]
    FixedVector,
    #[error("simple roots {0} and {1} are not orthogonal")]
    NonOrthogonalPair(usize, usize),
    #[error("degenerate projection plane")]
    DegeneratePlane,
    #[error("invalid simple-root order {0:?}")]
    InvalidOrder(Vec<usize>),
    #[error("unknown system `{0}`")]
    UnknownSystem(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("format `{0}` is not available for this command")]
    UnsupportedFormat(String),
    #[error("pipeline check failed: {0}")]
    Pipeline(String),
    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable tag used in CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::FieldMismatch { .. } => "field_mismatch",
            Error::DivisionByZero => "division_by_zero",
            Error::NotSquareFree(_) => "not_square_free",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::UnsupportedDimension(_) => "unsupported_dimension",
            Error::GradeOutOfRange { .. } => "grade_out_of_range",
            Error::WrongGrade { .. } => "wrong_grade",
            Error::MixedParity => "mixed_parity",
            Error::NonUnitVersor => "non_unit_versor",
            Error::NotARotationPlane => "not_a_rotation_plane",
            Error::ZeroRoot => "zero_root",
            Error::ZeroReducedNorm => "zero_reduced_norm",
            Error::NeedsGoldenField => "needs_golden_field",
            Error::NoSquareRoot(_) => "no_square_root",
            Error::ClosureCap { .. } => "closure_cap",
            Error::DegenerateSimpleRoots => "degenerate_simple_roots",
            Error::UnrecognizedAngle(_) => "unrecognized_angle",
            Error::CyclicDiagram => "cyclic_diagram",
            Error::NonPositivePerronFrobenius => "non_positive_perron_frobenius",
            Error::OrderNotFound { .. } => "order_not_found",
            Error::ResidualTooLarge(_) => "residual_too_large",
            Error::NonIntegerExponent(_) => "non_integer_exponent",
            Error::FixedVector => "fixed_vector",
            Error::NonOrthogonalPair(..) => "non_orthogonal_pair",
            Error::DegeneratePlane => "degenerate_plane",
            Error::InvalidOrder(_) => "invalid_order",
            Error::UnknownSystem(_) => "unknown_system",
            Error::Parse { .. } => "parse",
            Error::UnsupportedFormat(_) => "unsupported_format",
            Error::Pipeline(_) => "pipeline",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
