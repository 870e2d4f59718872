//! Choosing `n` of `N` indices to minimize `Σ a_i / Σ b_i` over the chosen indices.
//!
//! The crate provides
//!
//! * a greedy solver ([`greedy_select`]) that grows the index set one element
//!   at a time at `O(N)` per iteration,
//! * exact reference solvers ([`brute_force_min`], [`reduced_search_min`],
//!   [`dinkelbach_min`]) on arbitrary-precision integers,
//! * executable checks of the greedy method's guarantees and seeded sweeps
//!   over random instances ([`verify`]),
//! * a sensor-selection adapter for gappy reconstruction ([`gappy`]).
//!
//! Brute force over all `C(N, n)` subsets grows roughly like `c^N / √N` when
//! `n` is proportional to `N`, which is what makes the greedy method and the
//! reduced search interesting.

pub mod combinations;
pub mod decimal;
pub mod error;
pub mod gappy;
pub mod greedy;
pub mod model;
pub mod oracles;
pub mod theory;
pub mod verify;

pub use error::{Array, Error, Result};
pub use greedy::{greedy_select, greedy_step, Step};
pub use model::{
    compare_ratios, ExactInstance, ExactRatio, FloatInstance, GreedyTrace, ProblemInstance, RatioValue,
    Scalar, Selection, SolverKind,
};
pub use oracles::{
    brute_force_min, dinkelbach_min, reduced_search_min, search_space_counts, DinkelbachOutcome,
    OracleResult, DEFAULT_ENUMERATION_CAP,
};
pub use theory::{
    check_intersection_theorem, check_monotone_trace, check_n2_exactness, random_instance, z_array,
    TheoremVerdict, ZClassification,
};
pub use verify::{SweepConfig, VerificationReport};

pub use num_bigint::BigInt;
