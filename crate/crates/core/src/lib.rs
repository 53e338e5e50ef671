//! Constructions and exact verification for cyclic and dihedral covers of
//! pentavalent symmetric graphs.

pub mod acceptance;
pub mod cli;
pub mod graph;
pub mod construct;
pub mod covers;
pub mod groups;
pub mod modarith;
pub mod symmetry;
