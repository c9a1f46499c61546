//! Two-level skein invariants of link diagrams.

pub mod catalog;
pub mod classic;
pub mod combin;
pub mod diagram;
pub mod poly;
pub mod select;
pub mod skeinx;
pub mod statesum;
pub mod verify;
