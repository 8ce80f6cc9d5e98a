//! Bounded difference-of-squares search over odd non-square inputs.
//!
//! For odd non-square `P` the scan takes `b = ceil(sqrt(P)), ceil(sqrt(P))+1,
//! ...` and tests whether `b^2 - P` is a perfect square `c^2`; a hit gives
//! `P = (b + c)(b - c)`. The representation with `c = b - 1` is the trivial
//! `P = P * 1`, reached at `b = (P + 1) / 2` and at no other `b`, so the scan
//! always terminates and a first hit on the trivial representation proves `P`
//! prime. The first qualifying `b` (the smallest) decides the outcome.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{check_square, isqrt, residue_mod_100, SQUARE_RESIDUE_TABLE};
use crate::{Error, Natural, Result};

/// Inclusive search interval for `b`, plus the cap on `c`.
///
/// `b_max = (P + 1) / 2` is the `b` of the trivial representation
/// (`2 * b_max - 1 = P`), and `c_max = b_max - 1` caps the companion `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    pub b_min: Natural,
    pub b_max: Natural,
    pub c_max: Natural,
}

/// Work counters for one or more scans; the currency of the benchmarks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Number of `b` values examined.
    pub candidates_tested: u64,
    /// Candidates where `b^2 - P` was rejected by the last-two-digit filter.
    pub filter_rejections: u64,
    /// Candidates where an integer square root was actually computed.
    pub isqrt_confirmations: u64,
}

impl SearchStats {
    /// Fold another scan's counters into this one.
    pub fn merge(&mut self, other: &SearchStats) {
        self.candidates_tested += other.candidates_tested;
        self.filter_rejections += other.filter_rejections;
        self.isqrt_confirmations += other.isqrt_confirmations;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitKind {
    NontrivialSplit,
    Prime,
}

/// Result of one scan: a nontrivial factor pair, or a primality verdict when
/// the only representation found is the trivial `P = P * 1` (`c = b - 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitOutcome {
    pub kind: SplitKind,
    pub b: Natural,
    pub c: Natural,
    /// `b + c`; equals `P` itself for a prime verdict.
    pub factor_hi: Natural,
    /// `b - c`; equals 1 for a prime verdict.
    pub factor_lo: Natural,
    pub stats: SearchStats,
}

fn require_odd_at_least_3(p: &Natural) -> Result<()> {
    if *p < Natural::from(3u32) {
        return Err(Error::invalid(format!("{p} is below 3")));
    }
    if p.is_even() {
        return Err(Error::invalid(format!(
            "{p} is even; extract powers of 2 first"
        )));
    }
    Ok(())
}

/// Search interval for odd `P >= 3`: `b` runs from `ceil(sqrt(P))` to
/// `(P + 1) / 2`, and `c` may reach `(P - 1) / 2`.
pub fn search_bounds(p: &Natural) -> Result<SearchBounds> {
    require_odd_at_least_3(p)?;
    let root = isqrt(p);
    let b_min = if &root * &root == *p { root } else { root + 1u32 };
    Ok(SearchBounds {
        b_min,
        b_max: (p + 1u32) >> 1u32,
        c_max: (p - 1u32) >> 1u32,
    })
}

/// Scan `b` upward from `ceil(sqrt(P))` until `b^2 - P` is a perfect square.
///
/// `P` must be odd, at least 3 and not a perfect square (reduce squares
/// first). The first qualifying `b` decides: `c != b - 1` is a nontrivial
/// split into `(b + c)(b - c)`, `c = b - 1` (possible only at `b = b_max`)
/// certifies `P` prime. Each candidate difference goes through the
/// last-two-digit filter first; an integer square root is computed only for
/// candidates the filter lets through, and both events are counted in the
/// returned [`SearchStats`].
///
/// `budget` caps the number of candidates tested; exceeding it aborts with
/// [`Error::BudgetExhausted`], never with a wrong verdict. `None` means
/// unbounded, which for a prime `P` is a Theta(P) scan.
pub fn fermat_split(p: &Natural, budget: Option<u64>) -> Result<SplitOutcome> {
    let bounds = search_bounds(p)?;
    let b_min_squared = &bounds.b_min * &bounds.b_min;
    if b_min_squared == *p {
        return Err(Error::invalid(format!(
            "{p} is a perfect square; reduce it before splitting"
        )));
    }

    let mut b = bounds.b_min.clone();
    let mut diff = b_min_squared - p; // b^2 - P, maintained incrementally
    let mut step = (&b << 1u32) + 1u32; // (b+1)^2 = b^2 + (2b + 1)
    // Residues mod 100 of diff and step, kept in machine words so the digit
    // filter costs no big-integer division per candidate.
    let mut diff_mod = residue_mod_100(&diff);
    let mut step_mod = residue_mod_100(&step);
    let mut stats = SearchStats::default();

    loop {
        if let Some(limit) = budget {
            if stats.candidates_tested == limit {
                return Err(Error::BudgetExhausted {
                    unresolved: p.clone(),
                    budget: limit,
                });
            }
        }
        stats.candidates_tested += 1;
        debug_assert!(b <= bounds.b_max);

        if SQUARE_RESIDUE_TABLE[diff_mod as usize] {
            stats.isqrt_confirmations += 1;
            if diff.is_zero() {
                // Unreachable after the entry check; guards a square slipping in.
                return Err(Error::invalid(format!(
                    "{b}^2 - {p} = 0; {p} is a perfect square"
                )));
            }
            let c = isqrt(&diff);
            if &c * &c == diff {
                let factor_hi = &b + &c;
                let factor_lo = &b - &c;
                let kind = if factor_lo.is_one() {
                    SplitKind::Prime
                } else {
                    SplitKind::NontrivialSplit
                };
                return Ok(SplitOutcome {
                    kind,
                    b,
                    c,
                    factor_hi,
                    factor_lo,
                    stats,
                });
            }
        } else {
            stats.filter_rejections += 1;
        }

        diff += &step;
        diff_mod = (diff_mod + step_mod) % 100;
        step += 2u32;
        step_mod = (step_mod + 2) % 100;
        b += 1u32;
    }
}

/// Primality by exhausted search: `n` is prime iff the scan over the odd,
/// non-square reduction of `n` finds nothing but the trivial representation.
///
/// 2 is prime, every other even number is composite, and an odd perfect
/// square is composite outright (its root divides it), so only odd
/// non-squares reach [`fermat_split`].
pub fn is_prime(n: &Natural, budget: Option<u64>) -> Result<bool> {
    let two = Natural::from(2u32);
    if *n < two {
        return Err(Error::invalid(format!(
            "primality is defined for n >= 2, got {n}"
        )));
    }
    if *n == two {
        return Ok(true);
    }
    if n.is_even() {
        return Ok(false);
    }
    if check_square(n).root.is_some() {
        return Ok(false);
    }
    Ok(fermat_split(n, budget)?.kind == SplitKind::Prime)
}
