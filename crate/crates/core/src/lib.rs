pub mod census;
pub mod cli;
pub mod embed;
pub mod error;
pub mod invariant;
pub mod moves;
pub mod pattern;
pub mod render;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use word::{parse_gauss_word, GaussWord};
