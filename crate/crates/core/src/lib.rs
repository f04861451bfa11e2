//! Alternating automata, the order-theoretic monads behind them, and
//! determinization by the generalized subset construction.
//!
//! The crate is organized bottom-up:
//!
//! - [`order`]: finite posets, bitset subsets, closures, antichains;
//! - [`monad`]: powerset, upset/downset (with their distributive law), the
//!   alternation monad, rejected candidate structures, and a law-checking
//!   harness;
//! - [`automata`]: DFA/NFA/AFA with direct acceptance semantics;
//! - [`semantics`]: algebras on the two-element set, determinization, and
//!   the correspondence between determinized and direct semantics;
//! - [`suite`]: bundled check suites behind the `check-laws` command.

pub mod automata;
pub mod error;
pub mod monad;
pub mod order;
pub mod semantics;
pub mod suite;

pub use automata::{
    afa_accepts, dfa_accepts, dfa_equiv, lang_derivative, nfa_accepts_existential,
    nfa_accepts_universal, parity_afa, random_nfa, Afa, Dfa, Nfa, Symbol, Word,
};
pub use error::{Error, Result};
pub use monad::alt::{
    alt_bind, alt_map, alt_mult, alt_unit, composite_mult_via_pipeline, enumerate_alt,
    AltElement, AltMonad,
};
pub use monad::candidates::{
    cnf_atleast, cnf_exact, find_cnf_exact_naturality_witness, PpAtLeast, SetFamily,
};
pub use monad::laws::{
    check_family_naturality, check_monad_laws, CheckConfig, LawReport, Mode, Witness,
};
pub use monad::updown::{
    check_dist_law, check_dist_naturality, check_dn_monad_laws, check_up_monad_laws, dist_dn_up,
    dn_map, dn_mult, dn_unit, up_map, up_mult, up_unit,
};
pub use monad::{pow_map, pow_mult, pow_unit, FiniteFunction, Powerset, SetMonad};
pub use order::{
    expand_antichain, minimal_elements, Antichain, FinitePoset, Layer, MonotoneMap, StateSet,
};
pub use semantics::{
    beh1_afa, beh1_nfa, beta_alt, beta_pow_max, beta_pow_min, check_free_algebra_identity,
    check_semantics_correspondence_afa, check_semantics_correspondence_nfa, determinize_afa,
    determinize_nfa, dist_from_algebra, pointwise_algebra, strength, Determinized, PowAlgebra,
    StateDecode,
};
pub use suite::{
    distlaw_suite, full_suite, lemma_suite, monad_suite, negative_suite, semantics_suite,
    suite_passes, SuiteItem,
};
