//! Acceptance criteria. Run with
//! `cargo test -p sumzero-core --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use sumzero_core::oracles::{count_sumzero_tuples, fn0_oracle_identity, fn_oracle_identity};
use sumzero_core::partitions::factorial;
use sumzero_core::poset::{mobius_closed, mobius_recursive, PartitionLattice};
use sumzero_core::stirling::{
    burnside_multiset_check, falling_factorial, rising_factorial, stirling_first,
    stirling_first_by_shapes, stirling_mod, stirling_mod_oracle,
};
use sumzero_core::{class_fn, class_fn0, ExactInt, IntPoly, StirlingTable, Var};

/// Published rows of `[F_n(E)]`, lowest degree first.
const FN_TABLE: [(usize, &[i64]); 7] = [
    (2, &[0, -1, 1]),
    (3, &[0, 2, -3, 1]),
    (4, &[0, -6, 11, -6, 1]),
    (5, &[0, 24, -50, 35, -10, 1]),
    (6, &[0, -120, 274, -225, 85, -15, 1]),
    (7, &[0, 720, -1764, 1624, -735, 175, -21, 1]),
    (8, &[0, -5040, 13068, -13132, 6769, -1960, 322, -28, 1]),
];

/// Published rows of `[F_n^0(E)]`, lowest degree first.
const FN0_TABLE: [(usize, &[i64]); 7] = [
    (2, &[-4, 1]),
    (3, &[18, -3, 1]),
    (4, &[-96, 20, -6, 1]),
    (5, &[600, -50, 35, -10, 1]),
    (6, &[-4320, 864, -270, 85, -15, 1]),
    (7, &[35280, -1764, 1624, -735, 175, -21, 1]),
    (8, &[-322560, 42048, -16912, 7084, -1960, 322, -28, 1]),
];

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(label: &str, got: T, want: T) -> Check {
    ensure(got == want, || {
        format!("{label}: got {got:?}, expected {want:?}")
    })
}

fn timed(limit: Duration, body: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    body()?;
    let elapsed = start.elapsed();
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

fn ac1_table_fn() -> Check {
    timed(Duration::from_secs(1), || {
        for (n, coeffs) in FN_TABLE {
            let got = class_fn(n).map_err(|e| e.to_string())?.poly;
            eq(&format!("[F_{n}]"), got, IntPoly::from_i64s(Var::X, coeffs))?;
        }
        Ok(())
    })
}

fn ac2_table_fn0() -> Check {
    timed(Duration::from_secs(1), || {
        for (n, coeffs) in FN0_TABLE {
            let got = class_fn0(n).map_err(|e| e.to_string())?.poly;
            eq(
                &format!("[F_{n}^0]"),
                got,
                IntPoly::from_i64s(Var::E, coeffs),
            )?;
        }
        Ok(())
    })
}

fn ac3_dual_path_stirling() -> Check {
    timed(Duration::from_secs(30), || {
        for n in 1..=12 {
            for k in 1..=n {
                eq(
                    &format!("s({n},{k})"),
                    stirling_first_by_shapes(n, k).unwrap(),
                    stirling_first(n, k).unwrap(),
                )?;
            }
        }
        for n in 1..=10 {
            for k in 1..=n {
                eq(
                    &format!("s_m({n},{k})"),
                    stirling_mod_oracle(n, k).unwrap(),
                    stirling_mod(n, k).unwrap(),
                )?;
            }
        }
        Ok(())
    })
}

fn ac4_mobius() -> Check {
    timed(Duration::from_secs(5), || {
        for n in 1..=5 {
            let lat = PartitionLattice::new(n).unwrap();
            if n == 5 {
                eq("|Part(5)|", lat.elements().len(), 52)?;
            }
            let bottom = lat.bottom();
            for sigma in lat.elements() {
                eq(
                    &format!("μ(0,{sigma})"),
                    mobius_recursive(sigma).unwrap(),
                    mobius_closed(sigma),
                )?;
                let total: ExactInt = lat.below(sigma).map(mobius_closed).sum();
                let delta = ExactInt::from(i32::from(*sigma == bottom));
                eq(&format!("Σ μ below {sigma}"), total, delta)?;
            }
        }
        Ok(())
    })
}

fn ac5_generating_identities() -> Check {
    timed(Duration::from_secs(5), || {
        for n in 1..=12 {
            let rising = rising_factorial(n);
            let falling = falling_factorial(n);
            for k in 0..=n {
                let s = if k == 0 {
                    ExactInt::from(0)
                } else {
                    stirling_first(n, k).unwrap()
                };
                let signed = if (n - k) % 2 == 0 {
                    s.clone()
                } else {
                    -s.clone()
                };
                eq(&format!("rising[{n}] x^{k}"), rising.coeff(k), s)?;
                eq(&format!("falling[{n}] x^{k}"), falling.coeff(k), signed)?;
            }
            eq(&format!("deg rising[{n}]"), rising.degree(), Some(n))?;
            eq(&format!("deg falling[{n}]"), falling.degree(), Some(n))?;
        }
        for n in 1..=6 {
            for x in 1..=5 {
                ensure(burnside_multiset_check(n, x).unwrap(), || {
                    format!("Burnside n = {n}, x = {x}")
                })?;
            }
        }
        Ok(())
    })
}

fn ac6_counting_oracles() -> Check {
    timed(Duration::from_secs(60), || {
        for n in 1..=5 {
            for x in 0..=8 {
                ensure(fn_oracle_identity(n, x).unwrap(), || {
                    format!("F_n oracle n = {n}, x = {x}")
                })?;
            }
        }
        for (n, m) in [(1, 1), (2, 2), (2, 4), (3, 6), (4, 12)] {
            ensure(fn0_oracle_identity(n, m).unwrap(), || {
                format!("F_n^0 oracle n = {n}, N = {m}")
            })?;
        }
        let counted = count_sumzero_tuples(4, 12).unwrap();
        let predicted = class_fn0(4).unwrap().poly.eval(&ExactInt::from(144));
        eq("(4,12) count", counted, predicted)
    })
}

fn ac7_structure() -> Check {
    timed(Duration::from_secs(5), || {
        let table = StirlingTable::new(20);
        for n in 1..=20 {
            for k in (n / 2 + 1)..=n {
                eq(
                    &format!("s vs s_m ({n},{k})"),
                    table.s_mod(n, k).unwrap(),
                    table.s(n, k).unwrap(),
                )?;
            }
            eq(
                &format!("s({n},1)"),
                table.s(n, 1).unwrap(),
                factorial(n - 1),
            )?;
            eq(
                &format!("s_m({n},1)"),
                table.s_mod(n, 1).unwrap(),
                ExactInt::from(n * n) * factorial(n - 1),
            )?;
        }
        for p in [2, 3, 5, 7, 11, 13] {
            for k in 2..=p {
                eq(
                    &format!("prime s vs s_m ({p},{k})"),
                    table.s_mod(p, k).unwrap(),
                    table.s(p, k).unwrap(),
                )?;
            }
            eq(
                &format!("s_m({p},1)"),
                table.s_mod(p, 1).unwrap(),
                ExactInt::from(p * p) * factorial(p - 1),
            )?;
        }
        Ok(())
    })
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 7] = [
        ("AC1 table parity [F_n(E)], n = 2..8", ac1_table_fn),
        ("AC2 table parity [F_n^0(E)], n = 2..8", ac2_table_fn0),
        (
            "AC3 dual-path s (n <= 12) and s_m (n <= 10)",
            ac3_dual_path_stirling,
        ),
        (
            "AC4 Möbius recursive = closed, defining relation, n <= 5",
            ac4_mobius,
        ),
        (
            "AC5 rising/falling factorials n <= 12, Burnside n <= 6, x <= 5",
            ac5_generating_identities,
        ),
        (
            "AC6 counting oracles for [F_n] and [F_n^0]",
            ac6_counting_oracles,
        ),
        (
            "AC7 s = s_m for k > n/2, prime rows, k = 1 values",
            ac7_structure,
        ),
    ];
    let mut failures = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS {name} ({:.2?})", start.elapsed()),
            Err(why) => {
                println!("FAIL {name}: {why}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
