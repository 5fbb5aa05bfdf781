use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("vertex x{label} is out of range for a ground set of size {n}")]
    VertexOutOfRange { label: usize, n: usize },
    #[error("loop at vertex x{0}")]
    Loop(usize),
    #[error("duplicate edge {{x{0}, x{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("{{x{0}, x{1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("edges share an endpoint; 3-disjointness needs four distinct vertices")]
    SharedEndpoint,
    #[error("circulant C_{n}: distance {d} is outside 1..={max}", max = n / 2)]
    BadCirculantDistance { n: usize, d: usize },
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("the void complex has no reduced homology")]
    VoidComplex,
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,
    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,
    #[error("generators have mixed degrees {0:?}; use the componentwise test")]
    MixedDegrees(Vec<usize>),
    #[error("{what} has size {size}, above the cap of {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("{0} is not a supported prime characteristic")]
    UnsupportedCharacteristic(u64),
    #[error("ring has {0} variables; Hochster enumeration is capped at 16, use a shelling certificate instead")]
    UseCertificate(usize),
    #[error("order is not a permutation of the facets: {0}")]
    NotAPermutation(String),
    #[error("input does not match the expected fixture: {0}")]
    FixtureMismatch(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
