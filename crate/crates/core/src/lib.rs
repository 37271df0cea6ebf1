pub mod arith;
pub mod braid;
pub mod cli;
pub mod bratteli;
pub mod hecke;
pub mod interp;
pub mod linalg;
pub mod modp;
pub mod rmatrix;
pub mod trace;
pub mod verify;
