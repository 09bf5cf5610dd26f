//! Exact computation with coalgebroids, bialgebroids and Hopf algebroids over
//! a finite-dimensional algebra, and Tannaka-Krein reconstruction of a Hopf
//! algebroid from a finite monoidal presentation with a fiber functor into
//! bimodules.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod antipode;
pub mod bialgebroid;
pub mod coalgebroid;
pub mod comodule;
pub mod dual;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod io;
pub mod linalg;
pub mod module;
pub mod par;
pub mod report;
pub mod tags;
pub mod tannaka;
pub mod tensor;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use linalg::{quotient, Mat, QuotientPresentation};
pub use par::ExecMode;
