pub mod cert;
pub mod cli;
pub mod corpus;
pub mod definability;
pub mod lie;
pub mod linalg;
pub mod reps;
pub mod structure;
