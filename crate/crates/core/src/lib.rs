//! Gibonacci (order 2) and Tribonacci (order 3) sequences modulo `m`.
//!
//! - [`recurrence`]: seeds, windows, periods.
//! - [`cycle`]: canonical cycles, equivalence, complete systems.
//! - [`completeness`]: residue coverage, the `a^2 + ab - b^2` invariant and
//!   the Fibonacci/Lucas classification, plus executable theorem checks.
//! - [`survey`]: completeness over the first `n` primes, CSV/JSON export.
//! - [`verify`]: the reproduction suite behind `gibtool verify`.

pub mod completeness;
pub mod cycle;
pub mod error;
pub mod golden;
pub mod recurrence;
pub mod survey;
pub mod verify;

pub use completeness::{
    check_burr_lemma3, check_descent, check_wall_thm2, check_wall_thm9, classify,
    gibonacci_invariant, is_complete, mf_contains, ml_contains, predicted_complete,
    CompletenessReport, FiveAdicLength, InvariantValue, SequenceClass,
};
pub use cycle::{
    canonical_rotation, complete_system, complete_system_within, equivalent, extract_cycle,
    fibonacci_multiple_of, CompleteSystem, Cycle, DEFAULT_STATE_BUDGET,
};
pub use error::{Error, Result};
pub use recurrence::{
    next_state, period, period_within, prev_state, terms_one_period, validate_seed, Modulus, Order, Seed,
    StateVector, DEFAULT_ITERATION_BUDGET,
};
pub use survey::{bucketize, first_n_primes, run_survey, SurveyRecord, SurveyTable};
