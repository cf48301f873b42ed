pub mod cli;
pub mod conj;
pub mod crosslat;
pub mod error;
pub mod export;
pub mod parse;
pub mod partialinj;
pub mod partitions;
pub mod renner;
pub mod rootsys;
pub mod unionfind;

pub use error::{Error, Result};
