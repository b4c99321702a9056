//! Finitely presented L∞-algebras and their tensor products with forms.

mod algebra;
mod filtration;
mod free;
mod tensor;

pub use algebra::{
    all_tuples, koszul_sign, AlgebraError, GVector, Generator, JacobiFailure, JacobiReport, Presentation,
};
pub use filtration::FiltrationReport;
pub use free::free_nilpotent_dg_lie;
pub use tensor::{Piece, TensorElement};

/// Exponent `e` with `l_k = (-1)^e [·,…,·]` relating the Lada–Markl
/// operations to the brackets used here: `e = k(k+1)/2`.
pub fn lada_markl_exponent(k: usize) -> usize {
    k * (k + 1) / 2
}
