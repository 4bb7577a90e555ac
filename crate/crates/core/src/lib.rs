//! Exact computations with pointed rank-one Hopf algebras over finite fields.

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod error;
pub mod families;
pub mod field;
pub mod grid;
pub mod group;
pub mod hopfcore;
pub mod io;
pub mod linalg;
pub mod qcomb;
pub mod rep;

pub use error::{Error, Result};
pub use field::{Elem, Field, Poly};
