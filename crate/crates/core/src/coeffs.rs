//! Invariants of a finite coefficient set.
//!
//! For a finite set I of positive rationals, e is its minimum and gamma is
//! the least positive value of (sum of elements of I with repetition) - 1.
//! Both feed the explicit bounds on the log discrepancy of a witness divisor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::geom::Rat;

/// A nonempty set of strictly positive rationals, stored sorted and
/// deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSet {
    values: Vec<Rat>,
}

impl CoefficientSet {
    pub fn new(mut values: Vec<Rat>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySet);
        }
        if values.iter().any(|v| !v.is_positive()) {
            return Err(Error::NonPositiveCoefficient);
        }
        values.sort();
        values.dedup();
        Ok(CoefficientSet { values })
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    /// The invariant e: the minimum of the set.
    pub fn min_value(&self) -> &Rat {
        &self.values[0]
    }

    pub fn contains(&self, value: &Rat) -> bool {
        self.values.binary_search(value).is_ok()
    }
}

/// gamma together with a certifying combination summing to 1 + gamma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaResult {
    pub e: Rat,
    pub gamma: Rat,
    /// (value, multiplicity) pairs with positive multiplicity, sorted by
    /// value; the combination sums to exactly 1 + gamma.
    pub witness: Vec<(Rat, u64)>,
}

/// Computes gamma by a reachability table over the common denominator d:
/// the smallest monoid element strictly above d is at most d plus the
/// smallest scaled coefficient, so the table is bounded.
pub fn gamma_of(set: &CoefficientSet) -> GammaResult {
    let den = set
        .values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let d = den
        .to_u64()
        .expect("common denominator too large for the gamma table");
    let coins: Vec<u64> = set
        .values
        .iter()
        .map(|v| {
            (v * Rat::from_integer(den.clone()))
                .to_integer()
                .to_u64()
                .expect("scaled coefficient too large for the gamma table")
        })
        .collect();
    let min_coin = *coins.iter().min().expect("set is nonempty");
    let limit = (d + min_coin) as usize;
    let mut parent: Vec<Option<usize>> = vec![None; limit + 1];
    let mut reachable = vec![false; limit + 1];
    reachable[0] = true;
    for s in 1..=limit {
        for (idx, &coin) in coins.iter().enumerate() {
            let coin = coin as usize;
            if coin <= s && reachable[s - coin] {
                reachable[s] = true;
                parent[s] = Some(idx);
                break;
            }
        }
    }
    let target = ((d as usize + 1)..=limit)
        .find(|&s| reachable[s])
        .expect("a multiple of the smallest coin lands in (d, d + min_coin]");
    let mut counts = vec![0u64; coins.len()];
    let mut s = target;
    while s > 0 {
        let idx = parent[s].expect("reachable states have a parent");
        counts[idx] += 1;
        s -= coins[idx] as usize;
    }
    let gamma = Rat::new(BigInt::from(target as u64 - d), BigInt::from(d));
    let witness = set
        .values
        .iter()
        .zip(counts)
        .filter(|(_, c)| *c > 0)
        .map(|(v, c)| (v.clone(), c))
        .collect();
    GammaResult {
        e: set.min_value().clone(),
        gamma,
        witness,
    }
}

fn bound_quotients(e: &Rat, gamma: &Rat) -> Result<(BigInt, BigInt)> {
    if !gamma.is_positive() || e < gamma {
        return Err(Error::InvariantViolation);
    }
    let excess = gamma + Rat::one();
    let q1 = (&excess / (e * gamma)).floor().to_integer();
    let q2 = (&excess / e).ceil().to_integer();
    Ok((q1, q2))
}

fn to_u64(n: BigInt) -> u64 {
    u64::try_from(n).expect("bound exceeds u64")
}

/// max { floor((gamma+1)/(e*gamma)) + ceil((gamma+1)/e), 2 }: the witness
/// bound when the minimal log discrepancy is nonnegative.
pub fn bound_nonneg(e: &Rat, gamma: &Rat) -> Result<u64> {
    let (q1, q2) = bound_quotients(e, gamma)?;
    Ok(to_u64(q1 + q2).max(2))
}

/// floor((gamma+1)/(e*gamma)) + ceil((gamma+1)/e) + 1: the witness bound
/// when the minimal log discrepancy is minus infinity.
pub fn bound_minus_inf(e: &Rat, gamma: &Rat) -> Result<u64> {
    let (q1, q2) = bound_quotients(e, gamma)?;
    Ok(to_u64(q1 + q2) + 1)
}
