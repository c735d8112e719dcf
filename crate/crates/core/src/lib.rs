//! Canonical forms for the hyperoctahedral group `B_n`.
//!
//! Elements of `B_n` are signed permutations of `{±1, …, ±n}`. Every element
//! has a unique presentation `tau_1^{i_1} · tau_2^{i_2} ⋯ tau_n^{i_n}` with
//! `-k <= i_k < k`, where `tau_k = s_0 · s_1 ⋯ s_{k-1}`. This crate computes
//! that form and builds the rest of the toolkit on top of it:
//!
//! * [`perm`]: signed-permutation arithmetic and Coxeter words,
//! * [`ogs`]: `tau_k` powers, canonicalization and the pairwise exchange laws,
//! * [`sn`]: the parabolic subgroup generated by `s_1, …, s_{n-1}` (a copy of
//!   `S_n`), the `t_k` canonical form, elementary elements and factorizations,
//! * [`factor`]: the alternating `u · v` factorization of arbitrary elements,
//! * [`metrics`]: Coxeter length, normal forms and descent sets,
//! * [`oracle`]: Cayley-graph BFS and exhaustive verification drivers,
//! * [`cli`]: expression parsing and the `bn-ogs` command line.
//!
//! Products are always read left to right: `(a · b)(j) = b(a(j))`.

pub mod cli;
mod error;
pub mod factor;
pub mod metrics;
pub mod ogs;
pub mod oracle;
pub mod perm;
pub mod sn;

pub use error::{Error, Result};
pub use factor::{uv_factorize, UvFactorization, UvPart};
pub use metrics::{
    check_descent_law, descents, greedy_reduce, length, length_sdot, normal_form, DescentLaw,
    DescentSet, NormalForm,
};
pub use ogs::{
    exchange_tau, from_ogs, tau_apply, to_ogs, ExchangeCase, ExchangeLaw, OgsExponents, TauPower,
};
pub use perm::{CoxeterWord, SignedPermutation};
pub use sn::{
    elementary_factorize, exchange_t, is_elementary, is_in_sdot, t_to_tau, tau_to_t,
    ElementaryFactorization, SnExchangeCase, SnExchangeLaw, SnOgsExponents,
};
