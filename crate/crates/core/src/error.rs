use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator index {index} out of range for alphabet of size {rank}")]
    GeneratorOutOfRange { index: u32, rank: usize },
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("presentation is not ascending (fixed relators present)")]
    NotAscending,
    #[error("generator `{0}` cannot be removed: it is not an iterated relator")]
    NotARelator(String),
    #[error("unsupported case: {0}")]
    Unsupported(String),
    #[error("inconsistent coset data: {0}")]
    InconsistentAction(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("coset enumeration overflow: more than {0} cosets")]
    CosetOverflow(usize),
    #[error("contraction violated at table scale by word `{word}` (section of length {section_len} > {bound})")]
    ContractionViolation {
        word: String,
        section_len: usize,
        bound: usize,
    },
    #[error("word-problem recursion exceeded depth {0}; the contraction constant is probably wrong")]
    RecursionLimit(usize),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
}
