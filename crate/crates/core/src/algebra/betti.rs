use alloc::collections::BTreeMap;
use alloc::format;
use core::fmt;

use super::{hilbert_series_of_complex, HilbertSeries, SquarefreeMonomialIdeal};
use crate::complex::{reduced_homology_ranks, FieldSpec};
use crate::graph::VertexSet;
use crate::{Error, Result};

/// Largest ambient dimension accepted by the subset scan.
pub const HOCHSTER_MAX_AMBIENT: usize = 24;

/// Graded Betti numbers `β_{i,j}` of `R/I` for `i >= 1`; `β_{0,0} = 1` is
/// left implicit. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`, counting `β_{0,0}`.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    fn add(&mut self, i: usize, j: usize, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay2-style table: row `j - i`, column `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.projective_dimension();
        for row in 0..=self.regularity() {
            write!(f, "{row:>3}:")?;
            for i in 0..=pd {
                let v = if i == 0 {
                    u64::from(row == 0)
                } else {
                    self.get(i, i + row)
                };
                if v == 0 {
                    write!(f, " {:>4}", ".")?;
                } else {
                    write!(f, " {v:>4}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check_scannable(i: &SquarefreeMonomialIdeal) -> Result<()> {
    if i.is_zero() {
        return Err(Error::IdealZero);
    }
    if i.ambient() > HOCHSTER_MAX_AMBIENT {
        return Err(Error::CapacityExceeded {
            what: "ambient for the subset scan",
            got: i.ambient(),
            limit: HOCHSTER_MAX_AMBIENT,
        });
    }
    Ok(())
}

/// Whether the restriction of the Stanley–Reisner complex to `w` is a cone,
/// i.e. some vertex of `w` lies in no generator contained in `w`.
fn restriction_is_cone(gens: &[u64], w: u64) -> bool {
    let covered = gens
        .iter()
        .filter(|&&g| g & !w == 0)
        .fold(0u64, |a, &g| a | g);
    w & !covered != 0
}

/// Graded Betti numbers of `R/I` by summing reduced homology of restricted
/// Stanley–Reisner complexes over all vertex subsets, skipping cones.
pub fn graded_betti(i: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    check_scannable(i)?;
    let delta = i.stanley_reisner_complex()?;
    let gens = i.generator_bits();
    let mut table = BettiTable::default();
    let n = i.ambient();
    for w in 1u64..(1u64 << n) {
        if restriction_is_cone(gens, w) {
            continue;
        }
        let j = w.count_ones() as usize;
        let ranks = reduced_homology_ranks(&delta.restrict(VertexSet::from_bits(w)), field)?;
        // ranks[c] is H̃ in dimension c - 1, contributing to β_{j-c, j}
        for (c, &r) in ranks.iter().enumerate() {
            if r > 0 {
                table.add(j - c, j, r as u64);
            }
        }
    }
    Ok(table)
}

pub fn regularity_quotient(i: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<usize> {
    Ok(graded_betti(i, field)?.regularity())
}

/// `reg(I) = reg(R/I) + 1`.
pub fn regularity_ideal(i: &SquarefreeMonomialIdeal, field: FieldSpec) -> Result<usize> {
    Ok(regularity_quotient(i, field)? + 1)
}

/// Outcome of [`check_colon_sum_additivity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonSumReport {
    pub variable: usize,
    pub series: HilbertSeries,
    pub sum_series: HilbertSeries,
    pub colon_series: HilbertSeries,
    pub reg_ideal: usize,
    pub reg_sum: usize,
    pub reg_colon: usize,
}

fn series_of(i: &SquarefreeMonomialIdeal) -> Result<HilbertSeries> {
    hilbert_series_of_complex(&i.stanley_reisner_complex()?)
}

/// Checks `H(R/I) = H(R/(I + x_v)) + λ H(R/(I : x_v))` and that
/// `reg(I) = reg(I : x_v) + 1` or `reg(I) = reg(I + x_v)`.
pub fn check_colon_sum_additivity(
    i: &SquarefreeMonomialIdeal,
    v: usize,
    field: FieldSpec,
) -> Result<ColonSumReport> {
    check_scannable(i)?;
    let colon = i.colon_by_variable(v)?;
    let sum = i.add_variable(v)?;
    let report = ColonSumReport {
        variable: v,
        series: series_of(i)?,
        sum_series: series_of(&sum)?,
        colon_series: series_of(&colon)?,
        reg_ideal: regularity_ideal(i, field)?,
        reg_sum: regularity_ideal(&sum, field)?,
        reg_colon: regularity_ideal(&colon, field)?,
    };
    let predicted = report.sum_series.add(&report.colon_series.shift(1));
    if predicted != report.series {
        return Err(Error::VerificationFailed(format!(
            "Hilbert additivity fails for {i:?} at x{v}: {} != {} + λ·{}",
            report.series, report.sum_series, report.colon_series
        )));
    }
    if report.reg_ideal != report.reg_colon + 1 && report.reg_ideal != report.reg_sum {
        return Err(Error::VerificationFailed(format!(
            "colon/sum regularity fails for {i:?} at x{v}: reg(I)={}, reg(I:x)={}, reg(I+x)={}",
            report.reg_ideal, report.reg_colon, report.reg_sum
        )));
    }
    Ok(report)
}
