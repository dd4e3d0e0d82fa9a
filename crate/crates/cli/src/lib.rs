//! Command surface of `ncreflect`: input files, the analysis pipeline,
//! reports, and the fixtures of the preset catalogue.

pub mod analysis;
pub mod commands;
pub mod fixtures;
pub mod report;
pub mod specfile;
