//! Refinement order on set partitions and its Möbius function `μ(0, σ)`.
//!
//! `mobius_closed` is the product formula; `mobius_recursive` solves the
//! defining relation `Σ_{0 ≤ τ ≤ σ} μ(0, τ) = δ(0, σ)` directly over the
//! interval below `σ`, memoized by shape.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{factorial, set_partitions, SetPartition, Shape};
use crate::poly::ExactInt;

/// Largest `n` accepted by [`mobius_recursive`] unless overridden.
pub const DEFAULT_MOBIUS_LIMIT: usize = 8;

/// Default cap on the number of functions visited by
/// [`count_functions_with_kernel`].
pub const DEFAULT_KERNEL_BUDGET: u128 = 10_000_000;

/// `true` iff every block of `finer` lies inside a block of `coarser`.
pub fn refines(finer: &SetPartition, coarser: &SetPartition) -> Result<bool> {
    if finer.n() != coarser.n() {
        return Err(Error::Precondition(format!(
            "cannot compare partitions of {} and {} elements",
            finer.n(),
            coarser.n()
        )));
    }
    // Each block label of `finer` must map to a single label of `coarser`.
    let mut image: Vec<Option<usize>> = vec![None; finer.num_blocks()];
    for (&f, &c) in finer.rgs().iter().zip(coarser.rgs()) {
        match image[f] {
            None => image[f] = Some(c),
            Some(prev) if prev != c => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

/// All set partitions of `{1..n}` under refinement.
#[derive(Debug, Clone)]
pub struct PartitionLattice {
    n: usize,
    elements: Vec<SetPartition>,
}

impl PartitionLattice {
    pub fn new(n: usize) -> Result<PartitionLattice> {
        let elements = set_partitions(n, None)?.collect();
        Ok(PartitionLattice { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[SetPartition] {
        &self.elements
    }

    pub fn bottom(&self) -> SetPartition {
        SetPartition::finest(self.n)
    }

    pub fn top(&self) -> SetPartition {
        SetPartition::coarsest(self.n)
    }

    pub fn leq(&self, a: &SetPartition, b: &SetPartition) -> bool {
        refines(a, b).unwrap_or(false)
    }

    /// Elements `τ` with `τ ≤ π`.
    pub fn below<'a>(&'a self, pi: &'a SetPartition) -> impl Iterator<Item = &'a SetPartition> {
        self.elements.iter().filter(move |t| self.leq(t, pi))
    }
}

/// `(-1)^(n - l) * Π (|block| - 1)!`
pub fn mobius_closed(sigma: &SetPartition) -> ExactInt {
    mobius_of_shape(&sigma.shape())
}

pub(crate) fn mobius_of_shape(shape: &Shape) -> ExactInt {
    let magnitude = shape
        .parts()
        .iter()
        .fold(ExactInt::one(), |acc, &p| acc * factorial(p - 1));
    if (shape.n() - shape.len()).is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    }
}

/// `μ(0, σ)` from the defining recursion, for `n` up to [`DEFAULT_MOBIUS_LIMIT`].
pub fn mobius_recursive(sigma: &SetPartition) -> Result<ExactInt> {
    MobiusMemo::new(DEFAULT_MOBIUS_LIMIT).mobius(sigma)
}

/// Memo table for the recursive Möbius computation.
///
/// The interval `[0, σ]` is the product of the partition lattices of the
/// blocks of `σ`, so `μ(0, σ)` depends only on `shape(σ)`; entries are keyed
/// by shape. One memo per thread; it is not shared.
#[derive(Debug, Default)]
pub struct MobiusMemo {
    limit: usize,
    table: HashMap<Shape, ExactInt>,
}

impl MobiusMemo {
    pub fn new(limit: usize) -> MobiusMemo {
        MobiusMemo {
            limit,
            table: HashMap::new(),
        }
    }

    pub fn mobius(&mut self, sigma: &SetPartition) -> Result<ExactInt> {
        if sigma.n() > self.limit {
            return Err(Error::ResourceBound {
                what: "recursive Möbius function (n)",
                requested: sigma.n() as u128,
                limit: self.limit as u128,
            });
        }
        Ok(self.of_shape(&sigma.shape()))
    }

    fn of_shape(&mut self, shape: &Shape) -> ExactInt {
        if let Some(v) = self.table.get(shape) {
            return v.clone();
        }
        let value = if shape.parts().iter().all(|&p| p == 1) {
            ExactInt::one()
        } else {
            // μ(0, σ) = -Σ_{τ < σ} μ(0, τ), τ ranging over the interval.
            let mut sum = ExactInt::zero();
            for below in interval_shapes(shape) {
                if &below != shape {
                    sum += self.of_shape(&below);
                }
            }
            -sum
        };
        self.table.insert(shape.clone(), value.clone());
        value
    }
}

/// Shapes of every element of `[0, σ]`, one entry per element (with
/// repetition): each block of `σ` is refined independently.
fn interval_shapes(shape: &Shape) -> Vec<Shape> {
    let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
    for &block in shape.parts() {
        let refinements: Vec<Vec<usize>> = set_partitions(block, None)
            .expect("block size within enumeration limit")
            .map(|p| p.block_sizes())
            .collect();
        acc = acc
            .iter()
            .flat_map(|prefix| {
                refinements.iter().map(move |r| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(r);
                    v
                })
            })
            .collect();
    }
    acc.into_iter()
        .map(|parts| Shape::new(parts).expect("positive parts"))
        .collect()
}

/// Brute-force count of functions `{1..n} → {1..x}` whose kernel is `σ`.
pub fn count_functions_with_kernel(sigma: &SetPartition, x: usize) -> Result<ExactInt> {
    count_functions_with_kernel_budget(sigma, x, DEFAULT_KERNEL_BUDGET)
}

pub fn count_functions_with_kernel_budget(
    sigma: &SetPartition,
    x: usize,
    budget: u128,
) -> Result<ExactInt> {
    let n = sigma.n();
    let total = (x as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::ResourceBound {
            what: "functions enumerated for kernel count",
            requested: total,
            limit: budget,
        });
    }
    if x == 0 {
        return Ok(ExactInt::zero());
    }
    let mut values = vec![0usize; n];
    let mut count: u64 = 0;
    loop {
        if SetPartition::canonical(&values) == *sigma {
            count += 1;
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(ExactInt::from(count));
            }
            values[pos] += 1;
            if values[pos] < x {
                break;
            }
            values[pos] = 0;
            pos += 1;
        }
    }
}
