//! Artin braid words, the Garside left normal form, Mikado braids and simple dual braids.

mod braid;
mod dual;
mod nf;

pub use braid::{delta, mikado_lift, mikado_lift_word, positive_lift, BraidJson, BraidWord};
pub use dual::{
    check_dual_lemmas, check_simple_duals, coxeter_lift_matches, dual_atoms, dual_word,
    mikado_word, simple_dual, simple_dual_nf, verify_main_theorem, DualAtomTable,
};
pub use nf::{braid_equal, is_left_weighted, is_mikado, leq_prefix, nf, GarsideJson, GarsideNF};

#[cfg(test)]
mod tests;
