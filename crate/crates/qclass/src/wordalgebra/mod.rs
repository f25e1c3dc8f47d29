//! Weight-graded realization of `U_q(g_±)` as words modulo the Serre
//! ideal, decorated elements with Cartan factors, and the special root
//! vectors `f_γ`, `f̃_γ`, `f_δ`, `φ_i`, `ψ_i`.

mod element;
mod serre;
mod special;
mod tower;

pub use element::{Algebra, Element, Sign, Term};
pub use serre::{sub_weights, words_of_weight, QuotientSlice, SerreElement, WordError};
pub use special::*;
pub use tower::{Block, Derivation, Relation, Slice, Tower};
