//! Quasi-shuffle Hopf algebra over a bracket semigroup and the
//! iterated-sums signature of multidimensional discrete time series.
//!
//! The crate provides:
//!
//! - exact algebra on words of brackets: quasi-shuffle and shuffle products,
//!   half-shuffles, deconcatenation coproduct, counit and antipode
//!   ([`hopf`]);
//! - Hoffman's exponential and logarithm between the shuffle and
//!   quasi-shuffle algebras, with the remainder splitting and the adjoint on
//!   dual functionals ([`hoffman`]);
//! - truncated dual functionals with convolution, exponential, logarithm and
//!   the adjoint Eulerian projection ([`dual`]);
//! - the iterated-sums signature of a time series, its Chen merging and a
//!   parallel chunked form, the time-warping operator, and the
//!   iterated-integrals signature of the piecewise-linear lifted path
//!   ([`signature`], [`series`]);
//! - monomial quasisymmetric functions of level `d` and the weight-graded
//!   dimension counts ([`qsym`]);
//! - area and discrete-area operations with exact span checking ([`area`]).
//!
//! Exact rationals are the default scalars; floats are confined to numeric
//! signature evaluation. All values are immutable after construction and all
//! operations are pure functions, so everything can be shared freely across
//! threads.

pub mod area;
pub mod combinat;
pub mod dual;
pub mod error;
pub mod hoffman;
pub mod hopf;
pub mod linalg;
pub mod poly;
pub mod qsym;
pub mod scalar;
pub mod series;
pub mod signature;
pub mod word;

pub use area::{area, area_poly, area_space_basis, darea, darea_poly, span_membership, AreaKind};
pub use dual::{convolve, eulerian_projection, exp_conv, log_conv, DualFunctional};
pub use error::{Error, Result};
pub use hoffman::{
    composition_apply, hoffman_adjoint, hoffman_exp, hoffman_exp_poly, hoffman_log,
    hoffman_log_poly, hoffman_remainder,
};
pub use hopf::{
    antipode, antipode_poly, coproduct, coproduct_poly, counit, half_shuffle_qsh, half_shuffle_sh,
    quasi_shuffle, quasi_shuffle_poly, shuffle, shuffle_poly, QshHalf, ShHalf, TensorPoly,
};
pub use poly::Polynomial;
pub use qsym::{
    enumerate_words, hilbert_dim, hilbert_series_coeffs, monomial_eval, monomial_eval_poly,
    product_as_quasi_shuffle_check, words_up_to_weight,
};
pub use scalar::{rat, rat_int, rat_string, Rat, Scalar, ScalarKind};
pub use series::TimeSeries;
pub use signature::{
    chen_merge, iterated_integrals_signature_pl, iterated_sums_signature, parallel_signature,
    parallel_signature_window, single_step_signature, Signature,
};
pub use word::{canonical_bracket, parse_word, parse_word_any, Bracket, Word};
