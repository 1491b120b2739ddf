//! Unsigned Stirling numbers of the first kind `s(n, k)` and their
//! gcd²-weighted variant `s_m(n, k)`.
//!
//! Each quantity has two independent routes:
//!
//! * `s`: the recurrence `s(n,k) = s(n-1,k-1) + (n-1) s(n-1,k)`, and the
//!   shape sum `Σ_λ mult(λ) Π (λ_i - 1)!` over integer partitions with `k` parts.
//! * `s_m`: the shape sum weighted by `gcd(λ)²`, and the same weight summed
//!   over an explicit set-partition enumeration.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{factorial, set_partitions_with_limit, shapes_of, Shape};
use crate::poly::{ExactInt, IntPoly, Var};

/// Default upper bound on `n` for table construction and direct queries.
pub const DEFAULT_N_MAX: usize = 64;

/// Largest `n` for [`stirling_mod_oracle`] unless overridden.
pub const DEFAULT_MOD_ORACLE_LIMIT: usize = 10;

/// Bounds for [`burnside_multiset_check`]; it visits all `n!` permutations.
pub const BURNSIDE_MAX_N: usize = 7;
pub const BURNSIDE_MAX_X: usize = 6;

/// `Π (λ_i - 1)!`, the number of ways to arrange each block as one cycle.
pub fn cycle_weight(parts: &[usize]) -> ExactInt {
    parts
        .iter()
        .fold(ExactInt::one(), |acc, &p| acc * factorial(p - 1))
}

fn gcd_squared(shape: &Shape) -> ExactInt {
    let g = ExactInt::from(shape.gcd().expect("non-empty shape"));
    &g * &g
}

fn check_n(n: usize, n_max: usize) -> Result<()> {
    if n == 0 || n > n_max {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as u64,
            expected: format!("1 <= n <= {n_max}"),
        });
    }
    Ok(())
}

fn entry(row: &[ExactInt], k: usize) -> ExactInt {
    row.get(k).cloned().unwrap_or_default()
}

/// Rows `0..=n_max` of `s` by the recurrence; row `i` has entries `k = 0..=i`.
fn recurrence_rows(n_max: usize) -> Vec<Vec<ExactInt>> {
    let mut rows: Vec<Vec<ExactInt>> = vec![vec![ExactInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let left = if k == 0 {
                    ExactInt::zero()
                } else {
                    entry(prev, k - 1)
                };
                left + entry(prev, k) * (n - 1)
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Per-length, per-gcd sums `A[k][g] = Σ n! / z_λ` over shapes `λ ⊢ n` with
/// `k` parts and gcd `g`, where `n! / z_λ = mult(λ) · Π(λ_i - 1)!` and
/// `z_λ = Π_j j^(m_j) m_j!`.
///
/// Shapes are walked depth-first by distinct part size, largest first.
/// Taking `m` parts of size `j` out of `r` remaining elements contributes
/// the integer factor `r! / ((r - jm)! j^m m!)`, so the weight is carried
/// down the walk instead of being recomputed at every leaf.
fn shape_sums_by_gcd(n: usize) -> Vec<Vec<ExactInt>> {
    struct Walk {
        // steps[r][size][m - 1] = r! / ((r - size·m)! size^m m!)
        steps: Vec<Vec<Vec<ExactInt>>>,
        sums: Vec<Vec<ExactInt>>,
    }

    impl Walk {
        fn visit(
            &mut self,
            remaining: usize,
            max_part: usize,
            len: usize,
            g: usize,
            weight: &ExactInt,
        ) {
            if remaining == 0 {
                self.sums[len][g] += weight;
                return;
            }
            for size in (1..=max_part.min(remaining)).rev() {
                let g_next = num_integer::gcd(g, size);
                for m in 1..=remaining / size {
                    let next = weight * &self.steps[remaining][size][m - 1];
                    self.visit(remaining - size * m, size - 1, len + m, g_next, &next);
                }
            }
        }
    }

    let factorials: Vec<ExactInt> = (0..=n).map(factorial).collect();
    let steps = (0..=n)
        .map(|r| {
            (0..=r)
                .map(|size| {
                    if size == 0 {
                        return Vec::new();
                    }
                    let mut power = ExactInt::one();
                    (1..=r / size)
                        .map(|m| {
                            power *= size;
                            &factorials[r] / (&factorials[r - size * m] * &power * &factorials[m])
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut walk = Walk {
        steps,
        sums: vec![vec![ExactInt::zero(); n + 1]; n + 1],
    };
    walk.visit(n, n, 0, 0, &ExactInt::one());
    walk.sums
}

/// `s(n, k)` by the recurrence. Returns 0 outside `1 <= k <= n`.
pub fn stirling_first(n: usize, k: usize) -> Result<ExactInt> {
    check_n(n, DEFAULT_N_MAX)?;
    Ok(entry(&recurrence_rows(n)[n], k))
}

/// `s(n, k)` as a sum over shapes with `k` parts.
pub fn stirling_first_by_shapes(n: usize, k: usize) -> Result<ExactInt> {
    check_n(n, DEFAULT_N_MAX)?;
    if k > n {
        return Ok(ExactInt::zero());
    }
    Ok(shapes_of(n)
        .filter(|s| s.len() == k)
        .map(|s| s.multiplicity() * cycle_weight(s.parts()))
        .sum())
}

/// `s_m(n, k) = Σ_{λ ⊢ n, l(λ) = k} mult(λ) · gcd(λ)² · Π(λ_i - 1)!`.
pub fn stirling_mod(n: usize, k: usize) -> Result<ExactInt> {
    check_n(n, DEFAULT_N_MAX)?;
    if k > n {
        return Ok(ExactInt::zero());
    }
    Ok(shapes_of(n)
        .filter(|s| s.len() == k)
        .map(|s| s.multiplicity() * gcd_squared(&s) * cycle_weight(s.parts()))
        .sum())
}

/// `s_m(n, k)` by enumerating set partitions with `k` blocks.
pub fn stirling_mod_oracle(n: usize, k: usize) -> Result<ExactInt> {
    stirling_mod_oracle_with_limit(n, k, DEFAULT_MOD_ORACLE_LIMIT)
}

pub fn stirling_mod_oracle_with_limit(n: usize, k: usize, limit: usize) -> Result<ExactInt> {
    if n > limit {
        return Err(Error::ResourceBound {
            what: "s_m set-partition enumeration (n)",
            requested: n as u128,
            limit: limit as u128,
        });
    }
    check_n(n, limit)?;
    if k == 0 || k > n {
        return Ok(ExactInt::zero());
    }
    let mut total = ExactInt::zero();
    for sigma in set_partitions_with_limit(n, Some(k), limit)? {
        let sizes = sigma.block_sizes();
        let g = sizes.iter().fold(0usize, |g, &b| num_integer::gcd(g, b));
        total += ExactInt::from(g * g) * cycle_weight(&sizes);
    }
    Ok(total)
}

/// `x(x+1)⋯(x+n-1)` in the variable `x`.
pub fn rising_factorial(n: usize) -> IntPoly {
    (0..n).fold(IntPoly::one(Var::Lower), |acc, i| {
        &acc * &IntPoly::from_i64s(Var::Lower, &[i as i64, 1])
    })
}

/// `x(x-1)⋯(x-n+1)` in the variable `x`.
pub fn falling_factorial(n: usize) -> IntPoly {
    (0..n).fold(IntPoly::one(Var::Lower), |acc, i| {
        &acc * &IntPoly::from_i64s(Var::Lower, &[-(i as i64), 1])
    })
}

/// Counts fixed points over `S_n` acting on functions `{1..n} → {1..x}`:
/// checks `Σ_τ x^cycles(τ) = x(x+1)⋯(x+n-1)` exactly.
pub fn burnside_multiset_check(n: usize, x: usize) -> Result<bool> {
    if n > BURNSIDE_MAX_N || x > BURNSIDE_MAX_X {
        return Err(Error::ResourceBound {
            what: "Burnside permutation enumeration (n, x)",
            requested: n.max(x) as u128,
            limit: if n > BURNSIDE_MAX_N {
                BURNSIDE_MAX_N as u128
            } else {
                BURNSIDE_MAX_X as u128
            },
        });
    }
    let base = ExactInt::from(x);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut fixed = ExactInt::zero();
    loop {
        fixed += base.pow(cycle_count(&perm) as u32);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let multisets = (0..n).fold(ExactInt::one(), |acc, i| acc * (x + i));
    Ok(fixed == multisets)
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&e| e > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Triangles of `s` and `s_m` for `0 <= k <= n <= n_max`. Row 0 holds the
/// convention `s(0,0) = s_m(0,0) = 1`.
///
/// `s` is filled at construction. Each `s_m` row is computed on first use
/// and never changes afterwards; concurrent readers are safe.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    n_max: usize,
    s: Vec<Vec<ExactInt>>,
    s_mod: Vec<OnceLock<Vec<ExactInt>>>,
}

fn s_mod_row_by_shapes(n: usize) -> Vec<ExactInt> {
    if n == 0 {
        return vec![ExactInt::one()];
    }
    shape_sums_by_gcd(n)
        .into_iter()
        .map(|by_gcd| {
            by_gcd
                .into_iter()
                .enumerate()
                .map(|(g, a)| a * (g * g))
                .sum()
        })
        .collect()
}

impl StirlingTable {
    pub fn new(n_max: usize) -> StirlingTable {
        StirlingTable {
            n_max,
            s: recurrence_rows(n_max),
            s_mod: (0..=n_max).map(|_| OnceLock::new()).collect(),
        }
    }

    fn s_mod_full(&self, n: usize) -> &[ExactInt] {
        self.s_mod[n].get_or_init(|| s_mod_row_by_shapes(n))
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.n_max {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as u64,
                expected: format!("n <= {}", self.n_max),
            });
        }
        Ok(())
    }

    /// `s(n, k)`; zero outside the triangle.
    pub fn s(&self, n: usize, k: usize) -> Result<ExactInt> {
        self.check(n)?;
        Ok(entry(&self.s[n], k))
    }

    /// `s_m(n, k)`; zero outside the triangle.
    pub fn s_mod(&self, n: usize, k: usize) -> Result<ExactInt> {
        self.check(n)?;
        Ok(entry(self.s_mod_full(n), k))
    }

    /// Row `n` of `s` for `k = 1..=n`.
    pub fn s_row(&self, n: usize) -> Result<&[ExactInt]> {
        self.check(n)?;
        Ok(self.s[n].get(1..).unwrap_or(&[]))
    }

    /// Row `n` of `s_m` for `k = 1..=n`.
    pub fn s_mod_row(&self, n: usize) -> Result<&[ExactInt]> {
        self.check(n)?;
        Ok(self.s_mod_full(n).get(1..).unwrap_or(&[]))
    }
}
