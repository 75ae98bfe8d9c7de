//! Exact local cohomology of finitely generated bigraded modules over
//! `S = K[x_1..x_m, y_1..y_n]`, `K = F_p`.
//!
//! Modules are given by presentations. Local cohomology with respect to
//! `P = (x)`, `Q = (y)` and `R+ = P + Q` is computed degreewise through graded
//! local duality on single-graded strands, with a Čech complex computation as
//! an independent cross-check.

pub mod arith;
pub mod cohomology;
pub mod duality;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod poly;
pub mod resolve;
pub mod strand;
pub mod table;
pub mod tame;

pub use error::{Error, Result};
