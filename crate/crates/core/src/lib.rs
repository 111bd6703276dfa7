pub mod arith;
pub mod bivar;
pub mod criteria;
pub mod error;
pub mod fieldpoly;
pub mod oracle;
mod serde_num;
pub mod unipoly;

pub use error::{Error, Result};
