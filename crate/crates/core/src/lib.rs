pub mod algebra;
pub mod braiding;
pub mod cohomology;
pub mod commands;
pub mod differential;
pub mod expr;
pub mod linalg;
pub mod qcl;
pub mod qext;
mod render;
pub mod repn;
pub mod scalar;
pub mod uq;
pub mod verify;
