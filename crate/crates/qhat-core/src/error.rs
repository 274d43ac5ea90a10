use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("ideal not detected admissible: some path of length {bound} survives reduction")]
    NotAdmissible { bound: usize },
    #[error("relation violated: {0}")]
    Relation(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("complex is not degreewise projective")]
    NotProjective,
    #[error("object is not exceptional")]
    NotExceptional,
    #[error("object is not in the right orthogonal of the exceptional object")]
    NotOrthogonal,
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("fixture `{name}`: {msg}")]
    Fixture { name: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
