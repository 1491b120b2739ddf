//! Self-check suite run by the `verify` command.

use std::fmt;

use num_traits::One;

use crate::classes::{ClassPolynomial, OutputFormat, Space};
use crate::error::{Error, Result};
use crate::oracles::{fn0_oracle_identity_budget, fn_oracle_identity_budget, FiniteGroup};
use crate::partitions::factorial;
use crate::poly::{ExactInt, IntPoly, Var};
use crate::poset::{mobius_closed, MobiusMemo, PartitionLattice, DEFAULT_MOBIUS_LIMIT};
use crate::reference::{strip_whitespace, FN0_ROWS, FN_ROWS};
use crate::stirling::{
    burnside_multiset_check, falling_factorial, rising_factorial, stirling_first_by_shapes,
    stirling_mod_oracle, StirlingTable,
};

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub oracle_budget: u128,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 20,
            oracle_budget: crate::oracles::DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub outcome: Outcome,
}

impl CheckResult {
    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "PASS {}", self.name),
            Outcome::Fail(why) => write!(f, "FAIL {}: {why}", self.name),
            Outcome::Skip(why) => write!(f, "SKIP {}: {why}", self.name),
        }
    }
}

fn outcome(res: Result<Option<String>>) -> Outcome {
    match res {
        Ok(None) => Outcome::Pass,
        Ok(Some(why)) => Outcome::Fail(why),
        Err(Error::ResourceBound {
            what,
            requested,
            limit,
        }) => Outcome::Skip(format!("{what}: {requested} exceeds budget {limit}")),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn first_failure<I: IntoIterator<Item = Result<Option<String>>>>(it: I) -> Result<Option<String>> {
    for r in it {
        if let Some(why) = r? {
            return Ok(Some(why));
        }
    }
    Ok(None)
}

fn mismatch<T: PartialEq + fmt::Display>(label: String, got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("{label}: got {got}, expected {want}"))
}

/// Runs every check; `n_max` bounds the table-driven checks, the budget
/// bounds the counting oracles (over-budget checks are skipped).
pub fn run_suite(config: &VerifyConfig) -> Vec<CheckResult> {
    let n_max = config.n_max.max(1);
    let table = StirlingTable::new(n_max);
    let budget = config.oracle_budget;
    let mut out = Vec::new();
    let mut push = |name: &str, res: Result<Option<String>>| {
        out.push(CheckResult {
            name: name.to_string(),
            outcome: outcome(res),
        })
    };

    let parity = |space: Space, rows: &[(usize, &str)]| {
        first_failure(rows.iter().filter(|(n, _)| *n <= n_max).map(|&(n, want)| {
            let got =
                ClassPolynomial::from_table(&table, space, n)?.render_row(OutputFormat::Latex);
            Ok(mismatch(
                format!("n = {n}"),
                strip_whitespace(&got),
                strip_whitespace(want),
            ))
        }))
    };
    push(
        "table parity [F_n(E)], n = 2..8",
        parity(Space::Fn, &FN_ROWS),
    );
    push(
        "table parity [F_n^0(E)], n = 2..8",
        parity(Space::Fn0, &FN0_ROWS),
    );

    let s_limit = n_max.min(12);
    push(
        &format!("s(n,k): recurrence = shape sum, n <= {s_limit}"),
        first_failure(
            (1..=s_limit)
                .flat_map(|n| (1..=n).map(move |k| (n, k)))
                .map(|(n, k)| {
                    Ok(mismatch(
                        format!("s({n},{k})"),
                        stirling_first_by_shapes(n, k)?,
                        table.s(n, k)?,
                    ))
                }),
        ),
    );
    let m_limit = n_max.min(10);
    push(
        &format!("s_m(n,k): shape sum = set-partition sum, n <= {m_limit}"),
        first_failure(
            (1..=m_limit)
                .flat_map(|n| (1..=n).map(move |k| (n, k)))
                .map(|(n, k)| {
                    Ok(mismatch(
                        format!("s_m({n},{k})"),
                        stirling_mod_oracle(n, k)?,
                        table.s_mod(n, k)?,
                    ))
                }),
        ),
    );

    let mu_limit = n_max.min(5);
    push(
        &format!("Möbius: recursive = closed on Part(n), n <= {mu_limit}"),
        {
            let mut memo = MobiusMemo::new(DEFAULT_MOBIUS_LIMIT);
            first_failure((1..=mu_limit).map(|n| {
                let lat = PartitionLattice::new(n)?;
                first_failure(lat.elements().iter().map(|s| {
                    Ok(mismatch(
                        format!("μ(0, {s})"),
                        memo.mobius(s)?,
                        mobius_closed(s),
                    ))
                }))
            }))
        },
    );
    push(
        &format!("Möbius: defining relation on Part(n), n <= {mu_limit}"),
        first_failure((1..=mu_limit).map(|n| {
            let lat = PartitionLattice::new(n)?;
            let bottom = lat.bottom();
            Ok(lat.elements().iter().find_map(|pi| {
                let total: ExactInt = lat.below(pi).map(mobius_closed).sum();
                let want = ExactInt::from(i32::from(*pi == bottom));
                mismatch(format!("Σ μ below {pi}"), total, want)
            }))
        })),
    );

    push(
        &format!("generating identities: rising and falling factorials, n <= {s_limit}"),
        first_failure((1..=s_limit).map(|n| {
            let row = table.s_row(n)?;
            let mut rising = vec![ExactInt::from(0)];
            rising.extend(row.iter().cloned());
            let signed: Vec<ExactInt> = std::iter::once(ExactInt::from(0))
                .chain(row.iter().enumerate().map(|(i, v)| {
                    if (n - i - 1) % 2 == 0 {
                        v.clone()
                    } else {
                        -v
                    }
                }))
                .collect();
            Ok(mismatch(
                format!("rising n = {n}"),
                rising_factorial(n),
                IntPoly::new(Var::Lower, rising),
            )
            .or_else(|| {
                mismatch(
                    format!("falling n = {n}"),
                    falling_factorial(n),
                    IntPoly::new(Var::Lower, signed),
                )
            }))
        })),
    );
    push(
        "Burnside multiset count, n <= 6, x <= 5",
        first_failure(
            (1..=6)
                .flat_map(|n| (1..=5).map(move |x| (n, x)))
                .map(|(n, x)| {
                    Ok((!burnside_multiset_check(n, x)?).then(|| format!("n = {n}, x = {x}")))
                }),
        ),
    );

    let st_limit = n_max.min(20);
    push(
        &format!("structure: s = s_m for k > n/2, s(n,1), s_m(n,1), n <= {st_limit}"),
        first_failure((1..=st_limit).map(|n| {
            let nn = ExactInt::from(n * n);
            let mut why = mismatch(format!("s({n},1)"), table.s(n, 1)?, factorial(n - 1));
            why = why.or(mismatch(
                format!("s_m({n},1)"),
                table.s_mod(n, 1)?,
                factorial(n - 1) * nn,
            ));
            for k in (n / 2 + 1)..=n {
                why = why.or(mismatch(
                    format!("s_m({n},{k})"),
                    table.s_mod(n, k)?,
                    table.s(n, k)?,
                ));
            }
            Ok(why)
        })),
    );
    push(
        "structure: prime rows, s(p,k) = s_m(p,k) for k > 1",
        first_failure(
            [2usize, 3, 5, 7, 11, 13]
                .into_iter()
                .filter(|&p| p <= n_max)
                .map(|p| {
                    first_failure((2..=p).map(|k| {
                        Ok(mismatch(
                            format!("s_m({p},{k})"),
                            table.s_mod(p, k)?,
                            table.s(p, k)?,
                        ))
                    }))
                }),
        ),
    );

    push(
        "counting oracle [F_n(X)](x), n <= 5, x <= 8",
        first_failure(
            (1..=5usize.min(n_max))
                .flat_map(|n| (0..=8u64).map(move |x| (n, x)))
                .map(|(n, x)| {
                    Ok((!fn_oracle_identity_budget(n, x, budget)?)
                        .then(|| format!("n = {n}, x = {x}")))
                }),
        ),
    );
    push(
        "counting oracle [F_n^0(E)](N²) in (Z/NZ)²",
        first_failure(
            [(1usize, 1u64), (2, 2), (2, 4), (3, 6), (4, 12)]
                .into_iter()
                .filter(|&(n, _)| n <= n_max)
                .map(|(n, m)| {
                    Ok((!fn0_oracle_identity_budget(n, m, budget)?)
                        .then(|| format!("n = {n}, N = {m}")))
                }),
        ),
    );
    push("torsion: d·z = 0 has d² solutions in (Z/12Z)², d <= 4", {
        let cost: u128 = 4 * 144;
        if cost > budget {
            Err(Error::ResourceBound {
                what: "torsion enumeration",
                requested: cost,
                limit: budget,
            })
        } else {
            let g = FiniteGroup::new(12).expect("nonzero modulus");
            Ok((1..=4u64).find_map(|d| mismatch(format!("d = {d}"), g.torsion_count(d), d * d)))
        }
    });
    push("convention: s(0,0) = s_m(0,0) = 1", {
        Ok(mismatch(
            "s(0,0)".to_string(),
            table.s(0, 0).unwrap_or_default(),
            ExactInt::one(),
        )
        .or(mismatch(
            "s_m(0,0)".to_string(),
            table.s_mod(0, 0).unwrap_or_default(),
            ExactInt::one(),
        )))
    });
    out
}
