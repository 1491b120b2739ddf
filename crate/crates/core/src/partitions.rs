//! Integer-partition shapes and set partitions of `{1..n}`.
//!
//! Every sum over set partitions in this crate has a summand that depends
//! only on the block sizes, so the main computational path runs over
//! [`Shape`]s weighted by [`Shape::multiplicity`]. Set-partition enumeration
//! is kept for cross-checking and is bounded by an explicit limit.

use std::fmt;

use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::ExactInt;

/// Largest ground set accepted by [`set_partitions`] unless overridden.
pub const DEFAULT_SET_PARTITION_LIMIT: usize = 12;

pub fn factorial(n: usize) -> ExactInt {
    (2..=n).fold(ExactInt::one(), |acc, i| acc * i)
}

/// Integer partition of `n`: block sizes in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    /// Builds a shape from block sizes in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Shape> {
        if parts.contains(&0) {
            return Err(Error::Precondition(
                "shape parts must be positive".to_string(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Shape { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Gcd of all parts. The empty shape has no gcd.
    pub fn gcd(&self) -> Result<usize> {
        let (first, rest) = self
            .parts
            .split_first()
            .ok_or_else(|| Error::Precondition("gcd of the empty shape".to_string()))?;
        Ok(rest.iter().fold(*first, |g, &p| g.gcd(&p)))
    }

    /// `(part size, multiplicity)` pairs, largest size first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((size, count)) if *size == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Number of set partitions of `{1..n}` whose block sizes form this
    /// shape: `n! / (prod parts! * prod multiplicities!)`.
    pub fn multiplicity(&self) -> ExactInt {
        let denom = self
            .parts
            .iter()
            .map(|&p| factorial(p))
            .chain(self.multiplicities().into_iter().map(|(_, m)| factorial(m)))
            .fold(ExactInt::one(), |acc, f| acc * f);
        factorial(self.n()) / denom
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// All integer partitions of `n` in reverse-lexicographic order, starting
/// with `[n]` and ending with `[1,...,1]`. `n = 0` yields the empty shape.
pub fn shapes_of(n: usize) -> Shapes {
    Shapes {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct Shapes {
    next: Option<Vec<usize>>,
}

impl Iterator for Shapes {
    type Item = Shape;

    fn next(&mut self) -> Option<Shape> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Shape { parts: current })
    }
}

fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let pivot = parts.iter().rposition(|&p| p > 1)?;
    let size = parts[pivot] - 1;
    let mut rest = parts.len() - pivot;
    let mut next = parts[..pivot].to_vec();
    next.push(size);
    while rest > 0 {
        let take = rest.min(size);
        next.push(take);
        rest -= take;
    }
    Some(next)
}

/// A set partition of `{1..n}` stored as a restricted growth string:
/// `rgs[0] = 0` and `rgs[i] <= 1 + max(rgs[..i])`. Element `i + 1` lies in
/// block `rgs[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    rgs: Vec<usize>,
}

impl SetPartition {
    pub fn from_rgs(rgs: Vec<usize>) -> Result<SetPartition> {
        let mut max: Option<usize> = None;
        for &label in &rgs {
            let bound = max.map_or(0, |m| m + 1);
            if label > bound {
                return Err(Error::Precondition(format!(
                    "not a restricted growth string: {rgs:?}"
                )));
            }
            max = Some(max.map_or(label, |m| m.max(label)));
        }
        Ok(SetPartition { rgs })
    }

    /// Builds a partition from blocks of 1-based elements covering `1..=n`.
    pub fn from_blocks(n: usize, blocks: &[&[usize]]) -> Result<SetPartition> {
        let mut owner = vec![None; n];
        for (b, block) in blocks.iter().enumerate() {
            for &e in block.iter() {
                if e == 0 || e > n || owner[e - 1].is_some() {
                    return Err(Error::Precondition(format!(
                        "blocks do not partition 1..{n}"
                    )));
                }
                owner[e - 1] = Some(b);
            }
        }
        let owner: Vec<usize> = owner
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Precondition(format!("blocks do not cover 1..{n}")))?;
        Ok(Self::canonical(&owner))
    }

    /// Relabels arbitrary labels by first occurrence, i.e. the kernel of
    /// the map `i -> labels[i]`.
    pub fn canonical<T: PartialEq>(labels: &[T]) -> SetPartition {
        let mut seen: Vec<&T> = Vec::new();
        let rgs = labels
            .iter()
            .map(|l| match seen.iter().position(|s| *s == l) {
                Some(i) => i,
                None => {
                    seen.push(l);
                    seen.len() - 1
                }
            })
            .collect();
        SetPartition { rgs }
    }

    /// The partition into singletons.
    pub fn finest(n: usize) -> SetPartition {
        SetPartition {
            rgs: (0..n).collect(),
        }
    }

    /// The partition with a single block.
    pub fn coarsest(n: usize) -> SetPartition {
        SetPartition { rgs: vec![0; n] }
    }

    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    pub fn n(&self) -> usize {
        self.rgs.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().max().map_or(0, |m| m + 1)
    }

    /// Blocks as lists of 0-based elements, ordered by smallest element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_blocks()];
        for &b in &self.rgs {
            sizes[b] += 1;
        }
        sizes
    }

    pub fn shape(&self) -> Shape {
        Shape::new(self.block_sizes()).expect("blocks are non-empty")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|e| (e + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{{{}}}", blocks.join("|"))
    }
}

/// Set partitions of `{1..n}` (with exactly `k` blocks if given) in
/// lexicographic order of their restricted growth strings.
pub fn set_partitions(n: usize, k: Option<usize>) -> Result<SetPartitions> {
    set_partitions_with_limit(n, k, DEFAULT_SET_PARTITION_LIMIT)
}

pub fn set_partitions_with_limit(
    n: usize,
    k: Option<usize>,
    limit: usize,
) -> Result<SetPartitions> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            expected: "n >= 1".to_string(),
        });
    }
    if n > limit {
        return Err(Error::ResourceBound {
            what: "set partition enumeration (n)",
            requested: n as u128,
            limit: limit as u128,
        });
    }
    if let Some(k) = k {
        if k == 0 || k > n {
            return Err(Error::OutOfRange {
                what: "k",
                value: k as u64,
                expected: format!("1 <= k <= {n}"),
            });
        }
    }
    let mut rgs = vec![0; n];
    complete(&mut rgs, 0, 1, k);
    Ok(SetPartitions {
        rgs,
        target: k,
        pending: true,
    })
}

pub struct SetPartitions {
    rgs: Vec<usize>,
    target: Option<usize>,
    pending: bool,
}

/// Lexicographically smallest completion of `rgs[..=pos]` (which uses
/// `blocks` labels) reaching the target block count.
fn complete(rgs: &mut [usize], pos: usize, blocks: usize, target: Option<usize>) {
    let tail = &mut rgs[pos + 1..];
    tail.fill(0);
    if let Some(k) = target {
        let fresh = k - blocks;
        let start = tail.len() - fresh;
        for (offset, slot) in tail[start..].iter_mut().enumerate() {
            *slot = blocks + offset;
        }
    }
}

fn feasible(blocks: usize, remaining: usize, target: Option<usize>) -> bool {
    target.is_none_or(|k| blocks <= k && blocks + remaining >= k)
}

impl SetPartitions {
    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        for pos in (1..n).rev() {
            let prefix_max = *self.rgs[..pos].iter().max().expect("pos >= 1");
            for label in self.rgs[pos] + 1..=prefix_max + 1 {
                let blocks = prefix_max.max(label) + 1;
                if feasible(blocks, n - 1 - pos, self.target) {
                    self.rgs[pos] = label;
                    complete(&mut self.rgs, pos, blocks, self.target);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if !self.pending {
            return None;
        }
        let out = SetPartition {
            rgs: self.rgs.clone(),
        };
        self.pending = self.advance();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn shape(parts: &[usize]) -> Shape {
        Shape::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn shapes_of_four_in_order() {
        let got: Vec<Vec<usize>> = shapes_of(4).map(|s| s.parts().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn shapes_small_cases() {
        assert_eq!(shapes_of(1).collect::<Vec<_>>(), vec![shape(&[1])]);
        let empty: Vec<Shape> = shapes_of(0).collect();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_empty());
    }

    // Independent count: p(n, max part <= m) recursion.
    fn partition_count(n: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|p| partition_count(n - p, p)).sum()
    }

    #[test]
    fn shape_counts_match_partition_numbers() {
        assert_eq!(shapes_of(8).count(), 22);
        for n in 1..=20 {
            let all: Vec<Shape> = shapes_of(n).collect();
            assert_eq!(all.len(), partition_count(n, n), "n = {n}");
            assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
            assert!(all.iter().all(|s| s.n() == n));
        }
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(shape(&[2, 2]).multiplicity(), ExactInt::from(3));
        assert_eq!(shape(&[3, 1]).multiplicity(), ExactInt::from(4));
        assert_eq!(shape(&[2, 2, 1, 1]).multiplicity(), ExactInt::from(45));
    }

    #[test]
    fn multiplicity_of_2211_by_enumeration() {
        let target = shape(&[2, 2, 1, 1]);
        let count = set_partitions(6, None)
            .unwrap()
            .filter(|p| p.shape() == target)
            .count();
        assert_eq!(count, 45);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(shape(&[2, 2]).gcd().unwrap(), 2);
        assert_eq!(shape(&[3, 1]).gcd().unwrap(), 1);
        assert_eq!(shape(&[6, 4, 2]).gcd().unwrap(), 2);
        assert!(Shape::new(vec![]).unwrap().gcd().is_err());
    }

    #[test]
    fn shape_rejects_zero_and_sorts() {
        assert!(Shape::new(vec![2, 0]).is_err());
        assert_eq!(shape(&[1, 3, 2]).parts(), &[3, 2, 1]);
    }

    #[test]
    fn multiplicities_grouping() {
        assert_eq!(
            shape(&[3, 3, 2, 1, 1, 1]).multiplicities(),
            vec![(3, 2), (2, 1), (1, 3)]
        );
    }

    #[test]
    fn set_partition_counts() {
        assert_eq!(set_partitions(3, None).unwrap().count(), 5);
        assert_eq!(set_partitions(8, None).unwrap().count(), 4140);
        assert_eq!(set_partitions(1, None).unwrap().count(), 1);
    }

    #[test]
    fn three_into_two_blocks() {
        let got: Vec<String> = set_partitions(3, Some(2))
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(got, vec!["{1,2|3}", "{1,3|2}", "{1|2,3}"]);
    }

    #[test]
    fn restricted_stream_equals_filtered_stream() {
        for n in 1..=7 {
            for k in 1..=n {
                let direct: Vec<SetPartition> = set_partitions(n, Some(k)).unwrap().collect();
                let filtered: Vec<SetPartition> = set_partitions(n, None)
                    .unwrap()
                    .filter(|p| p.num_blocks() == k)
                    .collect();
                assert_eq!(direct, filtered, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn stream_is_lexicographic_and_valid() {
        let all: Vec<SetPartition> = set_partitions(6, None).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].rgs() < w[1].rgs()));
        for p in &all {
            let again = SetPartition::from_rgs(p.rgs().to_vec()).unwrap();
            assert_eq!(&again, p);
            let sizes = p.block_sizes();
            assert_eq!(sizes.len(), p.num_blocks());
            let sh = p.shape();
            assert_eq!(sh.n(), 6);
            assert_eq!(sh.len(), p.num_blocks());
            let from_blocks: Vec<Vec<usize>> = p.blocks();
            let refs: Vec<Vec<usize>> = from_blocks
                .iter()
                .map(|b| b.iter().map(|e| e + 1).collect())
                .collect();
            let slices: Vec<&[usize]> = refs.iter().map(Vec::as_slice).collect();
            assert_eq!(&SetPartition::from_blocks(6, &slices).unwrap(), p);
        }
    }

    #[test]
    fn limits_and_range_errors() {
        assert!(matches!(
            set_partitions(13, None),
            Err(Error::ResourceBound { limit: 12, .. })
        ));
        assert!(set_partitions_with_limit(13, Some(13), 13).is_ok());
        assert!(matches!(
            set_partitions(0, None),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            set_partitions(3, Some(4)),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            set_partitions(3, Some(0)),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn invalid_rgs_rejected() {
        assert!(SetPartition::from_rgs(vec![1, 0]).is_err());
        assert!(SetPartition::from_rgs(vec![0, 2]).is_err());
        assert!(SetPartition::from_rgs(vec![0, 1, 0, 2]).is_ok());
        assert!(SetPartition::from_blocks(3, &[&[1, 2]]).is_err());
        assert!(SetPartition::from_blocks(3, &[&[1, 2], &[2, 3]]).is_err());
    }

    #[test]
    fn shape_aggregation_is_lossless() {
        for n in 1..=9 {
            let mut tally: BTreeMap<Shape, usize> = BTreeMap::new();
            for p in set_partitions(n, None).unwrap() {
                *tally.entry(p.shape()).or_default() += 1;
            }
            for k in 1..=n {
                let by_shapes: ExactInt = shapes_of(n)
                    .filter(|s| s.len() == k)
                    .map(|s| s.multiplicity())
                    .sum();
                let streamed = set_partitions(n, Some(k)).unwrap().count();
                assert_eq!(by_shapes, ExactInt::from(streamed), "n = {n}, k = {k}");
            }
            for (s, count) in tally {
                assert_eq!(s.multiplicity(), ExactInt::from(count), "shape {s}");
            }
        }
    }

    #[test]
    fn part_of_size_one_forces_unit_gcd() {
        for n in 1..=16 {
            for s in shapes_of(n).filter(|s| s.parts().contains(&1)) {
                assert_eq!(s.gcd().unwrap(), 1);
            }
        }
    }
}
