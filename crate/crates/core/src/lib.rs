//! Exact computer algebra for nilpotent L∞-algebras: polynomial forms on
//! simplices, the Dupont contraction, Maurer–Cartan solvers, horn fillers
//! and generalized Campbell–Hausdorff series.

pub mod bch;
pub mod dold_kan;
pub mod dupont;
pub mod forms;
pub mod groupoid;
pub mod io;
pub mod linalg;
pub mod linfty;
pub mod mc;
pub mod nilmatrix;
pub mod rational;
pub mod sample;
pub mod simplicial;
pub mod suite;

pub use forms::{Form, FormError};
pub use rational::Rational;
pub use simplicial::SimplicialMap;
