pub mod alternative;
pub mod certificates;
pub mod error;
pub mod game;
pub mod infeasibility;
pub mod linalg;
pub mod problem;
pub mod rat;
pub mod reductions;
pub mod report;
pub mod simplex;

pub use alternative::{Alternative, Side};
pub use error::{Error, Result};
pub use linalg::{Matrix, Vector};
pub use rat::Rat;
