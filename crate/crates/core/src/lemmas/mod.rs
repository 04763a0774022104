//! Executable checks of the combinatorial lemmas behind the window and
//! discrepancy bounds.

mod fibonacci;
mod matching;
mod ordering;
mod report;
mod split;

pub use fibonacci::{
    fibonacci, fibonacci_approximation_holds, fibonacci_coprime, fibonacci_prefix_deviation, zeckendorf,
    ZeckendorfDecomposition,
};
pub use matching::{build_element_matching, ElementMatching};
pub use ordering::{
    main_lemma_equality_positions, main_lemma_violations_with, self_similarity_failures_with,
    shift_lemma_support, shift_lemma_violations_with, sorted_numerators, verify_main_lemma,
    verify_self_similarity, verify_shift_lemma, DyadicGenerator, VanDerCorput, WindowViolation,
};
pub use report::{
    all_passed, check_flip_order, check_main_lemma, check_matchings, check_self_similarity,
    check_shift_lemma, check_split_index, check_fibonacci, check_zeckendorf, verify_all, verify_all_with,
    Counterexample, VerificationReport, MAX_COUNTEREXAMPLES,
};
pub use split::{flip_order_failures, split_index, verify_flip_order, CanonicalInterval};
