//! Generator words for the Hecke-type algebra generated by `T0, T1, X, U0`,
//! their images as q-difference operators, Dehn-twist automorphisms and the
//! `φ_n` polynomial family.
//!
//! Equalities between abstract elements are always decided through the
//! operator representation.

mod auto;
mod phi;
mod rep;
mod suite;
mod word;

pub use auto::{automorphism, automorphism_apply, Automorphism};
pub use phi::{phi, phi_hat, PhiPoly};
pub use rep::{e_sided, gen_operator, idempotent, spherical_eq, u_n, u_n_explicit, u_n_word, word_eval};
pub use suite::{differ_check, eq_check, verify_automorphisms, verify_daha, verify_hecke, verify_u_n};
pub use word::{word_ch, word_sh, Gen, GenPoly, Letter, Unit, Word};

#[cfg(test)]
mod tests;
