//! Brute-force counts in finite models.
//!
//! Evaluating `[F_n(X)]` at `[X] = x` must give the number of injective
//! `n`-tuples from an `x`-element set. Evaluating `[F_n^0(E)]` at
//! `[E] = N²` must give the number of distinct `n`-tuples in `(Z/NZ)²`
//! summing to zero, provided the group has full `d`-torsion `(Z/dZ)²` for
//! every `d <= n`, i.e. `lcm(1..n)` divides `N`.
//!
//! Costs are counted in visited tuples and checked against a budget before
//! any work starts.

use num_integer::Integer;
use num_traits::Zero;

use crate::classes::{class_fn, class_fn0};
use crate::error::{Error, Result};
use crate::poly::ExactInt;

/// Default tuple-visit budget.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 100_000_000;

/// The group `(Z/NZ)²` with componentwise addition. Elements are encoded
/// as `a * N + b` for `0 <= a, b < N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteGroup {
    modulus: u64,
}

impl FiniteGroup {
    pub fn new(modulus: u64) -> Result<FiniteGroup> {
        if modulus == 0 {
            return Err(Error::OutOfRange {
                what: "N",
                value: 0,
                expected: "N >= 1".to_string(),
            });
        }
        Ok(FiniteGroup { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.modulus * self.modulus
    }

    fn split(&self, z: u64) -> (u64, u64) {
        (z / self.modulus, z % self.modulus)
    }

    fn join(&self, a: u64, b: u64) -> u64 {
        a * self.modulus + b
    }

    pub fn add(&self, y: u64, z: u64) -> u64 {
        let (ya, yb) = self.split(y);
        let (za, zb) = self.split(z);
        self.join((ya + za) % self.modulus, (yb + zb) % self.modulus)
    }

    pub fn neg(&self, z: u64) -> u64 {
        let (a, b) = self.split(z);
        let m = self.modulus;
        self.join((m - a) % m, (m - b) % m)
    }

    pub fn scale(&self, d: u64, z: u64) -> u64 {
        let (a, b) = self.split(z);
        let m = self.modulus;
        self.join((d % m) * a % m, (d % m) * b % m)
    }

    /// Number of `z` with `d·z = 0`, by enumeration.
    pub fn torsion_count(&self, d: u64) -> u64 {
        (0..self.order()).filter(|&z| self.scale(d, z) == 0).count() as u64
    }
}

fn budget_check(what: &'static str, cost: u128, budget: u128) -> Result<()> {
    // Every enumeration visits at least one tuple.
    let cost = cost.max(1);
    if cost > budget {
        return Err(Error::ResourceBound {
            what,
            requested: cost,
            limit: budget,
        });
    }
    Ok(())
}

fn pow_saturating(base: u128, exp: usize) -> u128 {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .unwrap_or(u128::MAX)
}

fn all_distinct(values: &[u64]) -> bool {
    values
        .iter()
        .enumerate()
        .all(|(i, v)| !values[i + 1..].contains(v))
}

/// Advances `digits` as a base-`radix` counter; `false` after wrapping.
fn odometer(digits: &mut [u64], radix: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// Number of `n`-tuples of pairwise-distinct elements of an `x`-element
/// set, by visiting all `x^n` tuples.
pub fn count_distinct_tuples(n: usize, x: u64) -> Result<ExactInt> {
    count_distinct_tuples_budget(n, x, DEFAULT_ENUMERATION_BUDGET)
}

pub fn count_distinct_tuples_budget(n: usize, x: u64, budget: u128) -> Result<ExactInt> {
    budget_check(
        "distinct-tuple enumeration (x^n)",
        pow_saturating(x as u128, n),
        budget,
    )?;
    if n == 0 {
        return Ok(ExactInt::from(1));
    }
    if x == 0 {
        return Ok(ExactInt::zero());
    }
    let mut tuple = vec![0u64; n];
    let mut count: u64 = 0;
    loop {
        if all_distinct(&tuple) {
            count += 1;
        }
        if !odometer(&mut tuple, x) {
            break;
        }
    }
    Ok(ExactInt::from(count))
}

/// Number of `n`-tuples of pairwise-distinct elements of `(Z/NZ)²` with
/// sum zero. The first `n - 1` entries range freely; the last is forced.
pub fn count_sumzero_tuples(n: usize, modulus: u64) -> Result<ExactInt> {
    count_sumzero_tuples_budget(n, modulus, DEFAULT_ENUMERATION_BUDGET)
}

pub fn count_sumzero_tuples_budget(n: usize, modulus: u64, budget: u128) -> Result<ExactInt> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            expected: "n >= 1".to_string(),
        });
    }
    let group = FiniteGroup::new(modulus)?;
    budget_check(
        "sum-zero tuple enumeration (N^(2(n-1)))",
        pow_saturating(group.order() as u128, n - 1),
        budget,
    )?;
    let mut tuple = vec![0u64; n];
    let mut count: u64 = 0;
    loop {
        let sum = tuple[..n - 1].iter().fold(0, |acc, &z| group.add(acc, z));
        tuple[n - 1] = group.neg(sum);
        if all_distinct(&tuple) {
            count += 1;
        }
        if !odometer(&mut tuple[..n - 1], group.order()) {
            break;
        }
    }
    Ok(ExactInt::from(count))
}

/// `count_distinct_tuples(n, x) == [F_n(X)]` evaluated at `x`.
pub fn fn_oracle_identity(n: usize, x: u64) -> Result<bool> {
    fn_oracle_identity_budget(n, x, DEFAULT_ENUMERATION_BUDGET)
}

pub fn fn_oracle_identity_budget(n: usize, x: u64, budget: u128) -> Result<bool> {
    let counted = count_distinct_tuples_budget(n, x, budget)?;
    let predicted = class_fn(n)?.poly.eval(&ExactInt::from(x));
    Ok(counted == predicted)
}

/// `lcm(1..n)`, the smallest modulus with full `d`-torsion for all `d <= n`.
pub fn full_torsion_modulus(n: usize) -> u64 {
    (1..=n as u64).fold(1, |acc, d| acc.lcm(&d))
}

/// `count_sumzero_tuples(n, N) == [F_n^0(E)]` evaluated at `N²`.
///
/// Requires `lcm(1..n) | N`; otherwise the finite model lacks the torsion
/// the formula counts and a [`Error::Precondition`] is returned.
pub fn fn0_oracle_identity(n: usize, modulus: u64) -> Result<bool> {
    fn0_oracle_identity_budget(n, modulus, DEFAULT_ENUMERATION_BUDGET)
}

pub fn fn0_oracle_identity_budget(n: usize, modulus: u64, budget: u128) -> Result<bool> {
    let needed = full_torsion_modulus(n);
    if modulus == 0 || !modulus.is_multiple_of(needed) {
        return Err(Error::Precondition(format!(
            "lcm(1..{n}) = {needed} does not divide N = {modulus}"
        )));
    }
    let counted = count_sumzero_tuples_budget(n, modulus, budget)?;
    let order = ExactInt::from(modulus) * ExactInt::from(modulus);
    let predicted = class_fn0(n)?.poly.eval(&order);
    Ok(counted == predicted)
}
