//! Contact algebras, local contact algebras, their dual spaces and the
//! extension conditions for maps between local compactifications, decided
//! exhaustively on finite carriers and by seeded sampling on the rational
//! interval line.

pub mod carrier;
pub mod commands;
pub mod contact;
pub mod dot;
pub mod duality;
pub mod error;
pub mod extensions;
pub mod format;
pub mod output;
pub mod registry;
pub mod report;
pub mod sampling;
pub mod spaces;
pub mod suites;

pub use error::{Error, Result};
