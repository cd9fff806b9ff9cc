pub mod graph;
pub mod linalg;
pub mod split;
