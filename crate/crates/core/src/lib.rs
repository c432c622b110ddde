//! Exact computation of Wronskian Hermite polynomials and their relatives
//! through partition combinatorics.

pub mod algebra;
pub mod appell;
pub mod asymptotics;
pub mod characters;
pub mod error;
pub mod hermite;
pub mod identity;
pub mod laguerre;
pub mod maya;
pub mod partitions;
pub mod quotient;

pub use error::{Result, WhpError};
pub use partitions::Partition;
