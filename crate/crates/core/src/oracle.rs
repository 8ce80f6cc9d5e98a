//! Naive trial-division baseline.
//!
//! This is the trust anchor the difference-of-squares pipeline is verified
//! against, and the comparator in benchmarks. It divides by 2 and then by the
//! odd candidates 3, 5, 7, ... up to the square root; no wheel, no sieve.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::factor::{Factorization, PrimePower};
use crate::{Error, Natural, Result};

fn next_candidate(d: Natural) -> Natural {
    if d == Natural::from(2u32) {
        Natural::from(3u32)
    } else {
        d + 2u32
    }
}

/// True iff no `d` with `2 <= d <= sqrt(n)` divides `n`.
pub fn trial_division_is_prime(n: &Natural) -> Result<bool> {
    if *n < Natural::from(2u32) {
        return Err(Error::invalid(format!(
            "primality is defined for n >= 2, got {n}"
        )));
    }
    let mut d = Natural::from(2u32);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return Ok(false);
        }
        d = next_candidate(d);
    }
    Ok(true)
}

/// Complete prime factorization by ascending trial division.
pub fn trial_division_factorize(n: &Natural) -> Result<Factorization> {
    trial_division_factorize_with_count(n).map(|(f, _)| f)
}

/// Trial-division factorization that also reports how many divisibility
/// tests were performed (one per `div_rem` against a candidate divisor).
pub fn trial_division_factorize_with_count(n: &Natural) -> Result<(Factorization, u64)> {
    if n.is_zero() {
        return Err(Error::invalid("0 has no factorization"));
    }
    let mut remaining = n.clone();
    let mut factors: Vec<PrimePower> = Vec::new();
    let mut divisions = 0u64;
    let mut d = Natural::from(2u32);
    while &d * &d <= remaining {
        let mut exponent = 0u64;
        loop {
            divisions += 1;
            let (quotient, rem) = remaining.div_rem(&d);
            if rem.is_zero() {
                exponent += 1;
                remaining = quotient;
            } else {
                break;
            }
        }
        if exponent > 0 {
            factors.push(PrimePower {
                prime: d.clone(),
                exponent,
            });
        }
        d = next_candidate(d);
    }
    if !remaining.is_one() {
        factors.push(PrimePower {
            prime: remaining,
            exponent: 1,
        });
    }
    Ok((
        Factorization {
            input: n.clone(),
            factors,
        },
        divisions,
    ))
}
