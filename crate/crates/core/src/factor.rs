//! Recursive factorization pipeline: extract powers of 2, reduce perfect
//! squares to their roots, split what remains by the difference-of-squares
//! scan, and recurse until every factor is prime.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Pow, Zero};

use crate::arith::check_square;
use crate::fermat::{fermat_split, SearchStats, SplitKind};
use crate::{Error, Natural, Result};

/// One `prime^exponent` entry of a [`Factorization`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePower {
    pub prime: Natural,
    pub exponent: u64,
}

/// Complete prime factorization of `input`, primes strictly increasing.
/// The empty list is the factorization of 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub input: Natural,
    pub factors: Vec<PrimePower>,
}

impl Factorization {
    /// Multiply the factorization back together.
    pub fn product(&self) -> Natural {
        let mut acc = Natural::one();
        for pp in &self.factors {
            acc *= Pow::pow(&pp.prime, pp.exponent);
        }
        acc
    }
}

impl fmt::Display for Factorization {
    /// Renders as `2^4 * 3^2 * 5^2 * 7^2`, omitting `^1`; `1` for the empty
    /// product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, pp) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if pp.exponent == 1 {
                write!(f, "{}", pp.prime)?;
            } else {
                write!(f, "{}^{}", pp.prime, pp.exponent)?;
            }
        }
        Ok(())
    }
}

/// Write `n = 2^m * P` with `P` odd; `m = 0` iff `n` is odd.
pub fn extract_twos(n: &Natural) -> Result<(u64, Natural)> {
    let m = n
        .trailing_zeros()
        .ok_or_else(|| Error::invalid("0 has no factorization"))?;
    Ok((m, n >> m))
}

/// Replace `p` by its square root for as long as it stays a perfect square.
///
/// Returns the final non-square (or 1) base together with `2^j` where `j`
/// roots were taken, so that `base^multiplier = p`.
pub fn reduce_square(p: &Natural) -> (Natural, u64) {
    let mut base = p.clone();
    let mut multiplier = 1u64;
    while base > Natural::one() {
        match check_square(&base).root {
            Some(root) => {
                base = root;
                multiplier *= 2;
            }
            None => break,
        }
    }
    (base, multiplier)
}

/// Complete prime factorization via the difference-of-squares pipeline.
///
/// Same as [`factorize_with_stats`] without the scan counters.
pub fn factorize(n: &Natural, budget: Option<u64>) -> Result<Factorization> {
    factorize_with_stats(n, budget).map(|(f, _)| f)
}

/// Complete prime factorization, plus the [`SearchStats`] summed over every
/// scan the recursion performed.
///
/// Powers of 2 come off first, then each odd part is square-reduced (its
/// exponent weight doubling per root taken) and split; both halves of a split
/// are processed the same way, `factor_lo` first, until everything is prime.
/// `budget` caps the candidates of each individual scan; exhaustion aborts
/// the whole factorization with the unresolved cofactor in the error.
pub fn factorize_with_stats(
    n: &Natural,
    budget: Option<u64>,
) -> Result<(Factorization, SearchStats)> {
    if n.is_zero() {
        return Err(Error::invalid("0 has no factorization"));
    }
    let (twos, odd) = extract_twos(n)?;
    let mut exponents: BTreeMap<Natural, u64> = BTreeMap::new();
    if twos > 0 {
        exponents.insert(Natural::from(2u32), twos);
    }
    let mut stats = SearchStats::default();
    factor_odd(&odd, 1, &mut exponents, &mut stats, budget)?;
    let factors = exponents
        .into_iter()
        .map(|(prime, exponent)| PrimePower { prime, exponent })
        .collect();
    Ok((
        Factorization {
            input: n.clone(),
            factors,
        },
        stats,
    ))
}

fn factor_odd(
    p: &Natural,
    weight: u64,
    acc: &mut BTreeMap<Natural, u64>,
    stats: &mut SearchStats,
    budget: Option<u64>,
) -> Result<()> {
    if p.is_one() {
        return Ok(());
    }
    let (base, multiplier) = reduce_square(p);
    let weight = weight * multiplier;
    let outcome = fermat_split(&base, budget)?;
    stats.merge(&outcome.stats);
    match outcome.kind {
        SplitKind::Prime => {
            *acc.entry(base).or_insert(0) += weight;
        }
        SplitKind::NontrivialSplit => {
            factor_odd(&outcome.factor_lo, weight, acc, stats, budget)?;
            factor_odd(&outcome.factor_hi, weight, acc, stats, budget)?;
        }
    }
    Ok(())
}
