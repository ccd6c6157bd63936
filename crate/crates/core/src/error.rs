use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report. Each variant has a stable
/// machine-readable code (see [`Error::code`]) used in JSON error objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of size {p}^{k} exceeds the size bound {bound}")]
    SizeBoundExceeded { p: u64, k: u32, bound: u64 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("no primitive {l}-th root of unity in a field of size {q}")]
    NoSuchRoot { l: u64, q: u64 },
    #[error("no embedding of F_{{{p}^{from}}} into F_{{{p2}^{to}}}")]
    NoEmbedding { p: u32, from: u32, p2: u32, to: u32 },

    #[error("class has no UT(*,I) representative")]
    NotUTStarClass,
    #[error("matrix is unipotent; the (1,1)-entry must differ from 1")]
    UnipotentInput,
    #[error("characteristic polynomial does not split within {s_max} extension levels")]
    EigenvalueOutsideSweep { s_max: u32 },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix or vector sizes do not match")]
    SizeMismatch,

    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generator is singular")]
    SingularGenerator,
    #[error("group contains an element outside UT(*,I)")]
    NotUTStar,
    #[error("p-elements do not form a subgroup")]
    NotNormalSylow,
    #[error("group structure not recognized: {0}")]
    NotRecognized(String),

    #[error("class does not satisfy g^p = e")]
    NotPPower,
    #[error("needed root of a scalar not found within {s_max} extension levels")]
    RootOutsideSweep { s_max: u32 },
    #[error("matrices do not commute")]
    NotCommuting,
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("matrix is the identity")]
    Identity,

    #[error("cone over a lower-dimensional variety: the center has multiplicity equal to the degree")]
    DegenerateCone,
    #[error("zero form")]
    ZeroForm,
    #[error("{what}: search space {size} exceeds the bound {bound}")]
    SearchSpaceExceeded { what: String, size: u128, bound: u128 },

    #[error("{l} does not divide {p}^{u} - 1")]
    DivisibilityFail { p: u64, u: u32, l: u64 },
    #[error("liftability conditions fail: {0}")]
    ConditionsFail(String),
    #[error("no irreducible choice found: {0}")]
    IrreducibleSearchFail(String),
    #[error("characteristic {p} divides the projection degree {degree}")]
    WildDegree { p: u64, degree: u32 },

    #[error("form is not invariant under the group")]
    NotInvariant,
    #[error("orbit-product division failed: {0}")]
    DivisionFails(String),
    #[error("fixture requires characteristic {expected}, got {found}")]
    WrongCharacteristic { expected: u64, found: u64 },
    #[error("parameter violation: {0}")]
    ParameterViolation(String),

    #[error("the hyperplane is a component of the hypersurface")]
    HyperplaneInsideX,
    #[error("stabilizers are not supported for unfactored sections in dimension n = {0}")]
    UnsupportedDimension(usize),

    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Stable identifier of the variant.
    pub fn code(&self) -> &'static str {
        use Error::*;
        match self {
            NotPrime(_) => "NotPrime",
            SizeBoundExceeded { .. } => "SizeBoundExceeded",
            FieldMismatch => "FieldMismatch",
            DivisionByZero => "DivisionByZero",
            NoSuchRoot { .. } => "NoSuchRoot",
            NoEmbedding { .. } => "NoEmbedding",
            NotUTStarClass => "NotUTStarClass",
            UnipotentInput => "UnipotentInput",
            EigenvalueOutsideSweep { .. } => "EigenvalueOutsideSweep",
            SingularMatrix => "SingularMatrix",
            SizeMismatch => "SizeMismatch",
            CapExceeded { .. } => "CapExceeded",
            SingularGenerator => "SingularGenerator",
            NotUTStar => "NotUTStar",
            NotNormalSylow => "NotNormalSylow",
            NotRecognized(_) => "NotRecognized",
            NotPPower => "NotPPower",
            RootOutsideSweep { .. } => "RootOutsideSweep",
            NotCommuting => "NotCommuting",
            NotUnipotent => "NotUnipotent",
            Identity => "Identity",
            DegenerateCone => "DegenerateCone",
            ZeroForm => "ZeroForm",
            SearchSpaceExceeded { .. } => "SearchSpaceExceeded",
            DivisibilityFail { .. } => "DivisibilityFail",
            ConditionsFail(_) => "ConditionsFail",
            IrreducibleSearchFail(_) => "IrreducibleSearchFail",
            WildDegree { .. } => "WildDegree",
            NotInvariant => "NotInvariant",
            DivisionFails(_) => "DivisionFails",
            WrongCharacteristic { .. } => "WrongCharacteristic",
            ParameterViolation(_) => "ParameterViolation",
            HyperplaneInsideX => "HyperplaneInsideX",
            UnsupportedDimension(_) => "UnsupportedDimension",
            Syntax(_) => "SyntaxError",
            NotHomogeneous => "NotHomogeneous",
            UnknownVariable(_) => "UnknownVariable",
            InvariantViolation(_) => "InvariantViolation",
            Usage(_) => "UsageError",
            Io(_) => "IoError",
        }
    }

    /// Process exit code: 3 for cap or sweep exhaustion, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            CapExceeded { .. }
            | SearchSpaceExceeded { .. }
            | EigenvalueOutsideSweep { .. }
            | RootOutsideSweep { .. }
            | SizeBoundExceeded { .. }
            | IrreducibleSearchFail(_) => 3,
            _ => 2,
        }
    }
}
