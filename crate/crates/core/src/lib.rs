pub mod exactpoly;
pub mod graph;
pub mod matchpoly;
pub mod structure;
