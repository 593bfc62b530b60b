pub mod cli;
pub mod error;
pub mod expr;
pub mod identities;
pub mod inequalities;
pub mod partitions;
pub mod series;
pub mod theta;

pub use error::{Error, Result};
pub use series::{Comparison, TruncSeries};
