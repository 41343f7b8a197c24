//! Exact cohomology rings of flag manifolds and generalised symmetric spaces,
//! presented as quotients of polynomial rings over the rationals.

pub mod cli;
pub mod groebner;
pub mod poly;
pub mod quotient;
pub mod spaces;
pub mod symfun;
pub mod verify;
