//! Exit criteria. Every comparison is exact rational equality.
//!
//! Run with `cargo test -p mirror-series-core --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use mirror_series::enumerative::{add_covers, strip_covers};
use mirror_series::mirror::holomorphic_remainder;
use mirror_series::picard_fuchs::{apply_operator, solve_basis, yukawa};
use mirror_series::{Pipeline, PowerSeries, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

const RANDOM_CASES: u32 = 128;
const TIME_BUDGET: Duration = Duration::from_secs(10);

fn rationals(values: &[&str]) -> Vec<Rational> {
    values.iter().map(|s| s.parse().unwrap()).collect()
}

fn ints(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

fn compare<T: PartialEq + std::fmt::Debug>(label: &str, got: &[T], want: &[T]) -> Outcome {
    if got == want {
        Ok(format!("{label} exact through degree {}", want.len()))
    } else {
        Err(format!("{label}: got {got:?}, want {want:?}"))
    }
}

fn f_coefficients() -> Outcome {
    let basis = solve_basis(8).map_err(|e| e.to_string())?;
    let want = rationals(&[
        "6",
        "45",
        "560",
        "17325/2",
        "756756/5",
        "2858856",
        "399072960/7",
        "4732755885/4",
    ]);
    compare("f", &basis.f().coeffs()[1..], &want)
}

fn g_coefficients() -> Outcome {
    let basis = solve_basis(8).map_err(|e| e.to_string())?;
    let want = rationals(&[
        "9",
        "423/4",
        "1486",
        "389415/16",
        "21981393/50",
        "16973929/2",
        "8421450228/49",
        "1616340007953/448",
    ]);
    compare("g", &basis.g().coeffs()[1..], &want)
}

fn remainder_coefficients() -> Outcome {
    let basis = solve_basis(8).map_err(|e| e.to_string())?;
    let h = holomorphic_remainder(&basis).map_err(|e| e.to_string())?;
    let want = rationals(&[
        "9",
        "351/4",
        "1216",
        "319455/16",
        "18122643/50",
        "35161224/5",
        "7009518168/49",
        "1350681750297/448",
    ]);
    compare("I3 - I2^2/2", &h.coeffs()[1..], &want)
}

fn q_coefficients() -> Outcome {
    let p = Pipeline::run(8).map_err(|e| e.to_string())?;
    if !p.q.has_log_head || !p.q.coeff(0).is_zero() {
        return Err("missing head term or nonzero q^0 coefficient".into());
    }
    let want = rationals(&[
        "-9",
        "135/4",
        "-244",
        "36999/16",
        "-635634/25",
        "307095",
        "-193919175/49",
        "3422490759/64",
    ]);
    compare("c", p.q.coefficients(), &want)
}

fn m_counts() -> Outcome {
    let p = Pipeline::run(8).map_err(|e| e.to_string())?;
    compare(
        "m",
        &p.table.m(),
        &ints(&[1, 1, 3, 16, 113, 948, 8974, 92840]),
    )
}

fn n_invariants() -> Outcome {
    let p = Pipeline::run(8).map_err(|e| e.to_string())?;
    compare(
        "n",
        &p.table.n(),
        &ints(&[3, -6, 27, -192, 1695, -17064, 188454, -2228160]),
    )
}

fn yukawa_identity() -> Outcome {
    let order = 30;
    let k = yukawa(&solve_basis(order).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let product = k.mul(&PowerSeries::from_ints(&[1, -27], order));
    if product == PowerSeries::one(order) {
        Ok(format!("(1 - 27z) K = 1 through z^{order}"))
    } else {
        Err(format!("(1 - 27z) K = {product}"))
    }
}

fn identity_chain() -> Outcome {
    let p = Pipeline::run(16).map_err(|e| e.to_string())?;
    if p.table.rows.len() != 16 {
        return Err(format!("only {} rows", p.table.rows.len()));
    }
    for row in &p.table.rows {
        let d = BigInt::from(row.degree);
        let sign = if row.degree % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        if row.c != -(&row.k * Rational::from_integer(BigInt::from(3) * &d)) {
            return Err(format!("c_{d} != -3d K_{d}"));
        }
        if row.c != &row.r * sign {
            return Err(format!("c_{d} != (-1)^d R_{d}"));
        }
    }
    Ok("c_d = -3d K_d = (-1)^d R_d for all d <= 16".into())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn random_series(min_order: usize, max_order: usize) -> impl Strategy<Value = Vec<Rational>> {
    (min_order..=max_order).prop_flat_map(|n| prop::collection::vec(small_rational(), n + 1))
}

fn run_random<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: RANDOM_CASES,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn property_suites() -> Outcome {
    let basis = solve_basis(32).map_err(|e| e.to_string())?;
    for (j, element) in basis.elements().into_iter().enumerate() {
        if !apply_operator(element).is_zero() {
            return Err(format!("I{} not annihilated through order 32", j + 1));
        }
    }

    run_random(random_series(0, 10), |mut c| {
        c[0] = Rational::zero();
        let a = PowerSeries::from_coeffs(c);
        prop_assert_eq!(a.exp().unwrap().ln().unwrap(), a);
        Ok(())
    })?;

    run_random(random_series(1, 10), |mut c| {
        c[0] = Rational::zero();
        c[1] = Rational::one();
        let f = PowerSeries::from_coeffs(c);
        let id = PowerSeries::var(f.order());
        prop_assert_eq!(f.compose(&f.revert().unwrap()).unwrap(), id);
        Ok(())
    })?;

    run_random(prop::collection::vec(small_rational(), 1..48), |v| {
        prop_assert_eq!(add_covers(&strip_covers(&v)), v.clone());
        prop_assert_eq!(strip_covers(&add_covers(&v)), v);
        Ok(())
    })?;

    Ok(format!(
        "annihilation through order 32; {RANDOM_CASES} random cases each for exp/log, compose/revert, Möbius"
    ))
}

/// Hard failure only for d <= 8; anything above is reported as evidence.
fn high_degree_probe() -> Outcome {
    let p = Pipeline::run(32).map_err(|e| e.to_string())?;
    if p.table.rows.iter().take(8).any(|r| !r.m.is_positive()) {
        return Err("m_d not a positive integer for some d <= 8".into());
    }
    if p.table.rows.len() == 32 && p.table.anomalies.is_empty() && p.q.anomalies.is_empty() {
        Ok("m_1..m_32 are all positive integers".into())
    } else {
        let notes: Vec<String> =
            p.q.anomalies
                .iter()
                .map(ToString::to_string)
                .chain(p.table.anomalies.iter().map(ToString::to_string))
                .collect();
        Ok(format!("reported above degree 8: {}", notes.join("; ")))
    }
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, Criterion); 10] = [
        ("1  I2 holomorphic part through z^8", f_coefficients),
        ("2  I3 holomorphic part through z^8", g_coefficients),
        ("3  I3 - I2^2/2 through z^8", remainder_coefficients),
        ("4  q-expansion c_1..c_8", q_coefficients),
        ("5  m_1..m_8 integral and exact", m_counts),
        ("6  n_1..n_8", n_invariants),
        ("7  (1 - 27z) K = 1 through order 30", yukawa_identity),
        ("8  c_d = -3d K_d = (-1)^d R_d, d <= 16", identity_chain),
        ("9  property suites", property_suites),
        ("10 high-degree probe at order 32", high_degree_probe),
    ];
    let mut failed = Vec::new();
    for (name, criterion) in criteria {
        let start = Instant::now();
        let outcome = criterion();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > TIME_BUDGET => Err(format!("{detail}, but took {elapsed:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} ({elapsed:.2?})"),
            Err(detail) => {
                println!("FAIL  {name}: {detail} ({elapsed:.2?})");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
