//! Verification oracles: coset enumeration and abelian invariants.

mod snf;
mod todd_coxeter;

pub use snf::{abelianization, abelianization_series, smith_normal_form, bigint_matrix, AbelianInvariants, Abelianization, EchelonLattice};
pub use todd_coxeter::{order_from_presentation, todd_coxeter, CosetTable};
