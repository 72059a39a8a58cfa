pub mod binforms;
pub mod cli;
pub mod error;
pub mod gf;
pub mod forget;
pub mod kronrep;
pub mod linearise;
pub mod pathalg;
pub mod poly;
pub mod quiver;

pub use error::{Error, Result};
