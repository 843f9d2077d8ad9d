use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("letter {0} appears more than once")]
    Duplicate(u32),
    #[error("letter {letter} is out of range 1..={n}")]
    OutOfRange { letter: u32, n: usize },
    #[error("invalid box word: {0}")]
    InvalidBoxWord(String),
    #[error("invalid box cycle: {0}")]
    InvalidBoxCycle(String),
    #[error("input is not in the required class: {0}")]
    WrongClass(String),
    #[error("even cycle of length {0} in an odd order permutation")]
    EvenCycle(usize),
    #[error("no factor matches the box between {0} and {1}")]
    UnmatchedBox(u32, u32),
    #[error("maximal factors overlap: {0}")]
    Overlap(String),
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("size {n} exceeds the guard {guard} for {what}")]
    Guard { what: &'static str, n: usize, guard: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
