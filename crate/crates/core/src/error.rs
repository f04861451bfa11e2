use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("carrier size mismatch: expected {expected}, got {got}")]
    CarrierMismatch { expected: usize, got: usize },

    #[error("index {index} out of range for carrier of size {carrier}")]
    IndexOutOfRange { index: usize, carrier: usize },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("map is not monotone: {x} <= {y} in the domain but the images are unordered")]
    NotMonotone { x: usize, y: usize },

    #[error("{what}: input must be {requirement}")]
    NotClosed {
        what: &'static str,
        requirement: &'static str,
    },

    #[error("capacity exceeded: {what} needs {needed} but the cap is {cap}")]
    Capacity {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
