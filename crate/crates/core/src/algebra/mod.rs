//! Integer polynomials, Hilbert series, squarefree monomial ideals and
//! their graded Betti numbers.

mod betti;
mod hilbert;
mod ideal;
mod poly;

pub use betti::{
    check_colon_sum_additivity, graded_betti, regularity_ideal, regularity_quotient, BettiTable,
    ColonSumReport, HOCHSTER_MAX_AMBIENT,
};
pub use hilbert::{hilbert_series_of_complex, HilbertSeries};
pub use ideal::SquarefreeMonomialIdeal;
pub use poly::IntegerPolynomial;
