//! Exact computations on lecture hall cones.
//!
//! For a sequence `s` of positive integers the lecture hall cone is
//! `0 <= l_1/s_1 <= l_2/s_2 <= ... <= l_n/s_n`. This crate decides when the
//! cone is Gorenstein and finds its Gorenstein point, studies the gcd
//! structure of second-order recurrences `s_j = l s_{j-1} + b s_{j-2}`, and
//! counts lattice points directly to check every closed-form answer.
//!
//! All arithmetic is exact: integers are [`num_bigint::BigInt`] and
//! rationals are [`num_rational::BigRational`].

pub mod arith;
pub mod enumeration;
pub mod gcd_structure;
pub mod gorenstein;
pub mod sequences;

pub use arith::{
    is_palindromic, is_unimodal, product_form_series, series_mul_poly, ArithError, DensePoly,
    ExactInt, ExactRat, TruncatedSeries,
};
pub use enumeration::{
    cross_check_gorenstein, detect_product_form, ehrhart_counts, h_star, numerator_h,
    weight_series, Budget, CrossCheckReport, EnumerationError, Enumerator, HStarVector, Numerator,
    WeightSeries,
};
pub use gcd_structure::{
    corollary_311_check, f_sequence, find_n0, gcd_profile, ratio_table, Cor311Verdict, GcdError,
    GcdProfile, RatioTable,
};
pub use gorenstein::{
    ell_sequence_point, gorenstein_fail_index, greedy_interior_point, is_gorenstein_point,
    lecture_hall_gorenstein, simple_cone_gorenstein, u_generated_point, GorensteinError,
    GorensteinResult, RatMatrix, TriangularCone,
};
pub use sequences::{
    generate_from_u, generate_kl, generate_one_mod_k, generate_recurrence, kl_product_exponents,
    recognize_u_generated, validate_positivity, SequenceError, SequenceKind, SequenceSpec,
    UGeneration, URecognition,
};
