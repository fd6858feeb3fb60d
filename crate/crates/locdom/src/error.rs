use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge endpoint {v} out of range for graph on {n} vertices")]
    EndpointOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v} is not allowed")]
    SelfLoop { v: usize },
    #[error("graph order {n} exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("graph is disconnected: vertex {a} and vertex {b} lie in different components")]
    Disconnected { a: usize, b: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge-list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("invalid family parameters: {0}")]
    FamilyParams(String),
    #[error("closed form not defined for these parameters: {0}")]
    ClosedFormRange(String),
    #[error("enumeration order {n} exceeds the cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("set is not a locating-dominating set of the graph")]
    NotLdSet,
    #[error("vertex {v} is not a member of the code")]
    NotCodeVertex { v: usize },
    #[error("label {label} has only {count} edges; two are required")]
    LabelTooFewEdges { label: usize, count: usize },
    #[error("graph is not a cactus: a block has more edges than vertices")]
    NotCactus,
    #[error("construction parameters out of range: {0}")]
    ConstructionRange(String),
    #[error("construction failed certification: {0}")]
    CertificationFailed(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
