//! Self-check suite: every structural identity of the pipeline, evaluated at
//! one truncation order.

use num_traits::Zero;

use crate::enumerative::{add_covers, strip_covers, PROVEN_THROUGH};
use crate::error::{Error, Result};
use crate::mirror::holomorphic_remainder;
use crate::picard_fuchs::{apply_operator, solve_basis, yukawa};
use crate::reference;
use crate::series::{rat, PowerSeries};
use crate::Pipeline;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn(&Pipeline) -> std::result::Result<String, String>;

const CHECKS: [(&str, Check); 11] = [
    ("operator-annihilation", operator_annihilation),
    ("basis-truncation", basis_truncation),
    ("yukawa", yukawa_identity),
    ("exp-log-round-trip", exp_log_round_trip),
    ("reversion-round-trip", reversion_round_trip),
    ("log-cancellation", log_cancellation),
    ("moebius-round-trip", moebius_round_trip),
    ("identity-chain", identity_chain),
    ("published-series", published_series),
    ("published-counts", published_counts),
    ("high-degree-counts", high_degree_counts),
];

/// Runs every check at `order` (at least 2). A failure of the pipeline itself
/// is reported as a single failed check.
pub fn run_checks(order: usize) -> Result<Vec<CheckOutcome>> {
    if order < 2 {
        return Err(Error::InvalidOrder { got: order, min: 2 });
    }
    let pipeline = match Pipeline::run(order) {
        Ok(p) => p,
        Err(e) => {
            return Ok(vec![CheckOutcome {
                name: "pipeline",
                passed: false,
                detail: e.to_string(),
            }])
        }
    };
    Ok(CHECKS
        .iter()
        .map(|(name, check)| match check(&pipeline) {
            Ok(detail) => CheckOutcome {
                name,
                passed: true,
                detail,
            },
            Err(detail) => CheckOutcome {
                name,
                passed: false,
                detail,
            },
        })
        .collect())
}

pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.passed)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn operator_annihilation(p: &Pipeline) -> std::result::Result<String, String> {
    for (j, element) in p.basis.elements().into_iter().enumerate() {
        ensure(apply_operator(element).is_zero(), || {
            format!("operator does not annihilate I{}", j + 1)
        })?;
    }
    Ok(format!(
        "I1, I2, I3 annihilated through z^{}",
        p.basis.order()
    ))
}

fn basis_truncation(p: &Pipeline) -> std::result::Result<String, String> {
    let lower = p.basis.order() - 1;
    let direct = solve_basis(lower).map_err(|e| e.to_string())?;
    ensure(p.basis.truncate(lower) == direct, || {
        format!("basis at order {lower} differs")
    })?;
    Ok(format!(
        "order {} restricts to order {lower}",
        p.basis.order()
    ))
}

fn yukawa_identity(p: &Pipeline) -> std::result::Result<String, String> {
    let k = yukawa(&p.basis).map_err(|e| e.to_string())?;
    let one_minus = PowerSeries::from_ints(&[1, -27], k.order());
    ensure(k.mul(&one_minus) == PowerSeries::one(k.order()), || {
        "(1 - 27z) K differs from 1".to_string()
    })?;
    Ok(format!("(1 - 27z) K = 1 through z^{}", k.order()))
}

fn exp_log_round_trip(p: &Pipeline) -> std::result::Result<String, String> {
    let f = p.basis.f();
    let back = f.exp().and_then(|e| e.ln()).map_err(|e| e.to_string())?;
    ensure(&back == f, || "log(exp(f)) differs from f".to_string())?;
    Ok("log(exp(f)) = f".to_string())
}

fn reversion_round_trip(p: &Pipeline) -> std::result::Result<String, String> {
    let id = PowerSeries::var(p.map.order());
    let fwd = p
        .map
        .w_of_z
        .compose(&p.map.z_of_w)
        .map_err(|e| e.to_string())?;
    let back = p
        .map
        .z_of_w
        .compose(&p.map.w_of_z)
        .map_err(|e| e.to_string())?;
    ensure(fwd == id && back == id, || {
        "w(z(w)) or z(w(z)) is not the identity".to_string()
    })?;
    Ok("w(z(w)) = w and z(w(z)) = z".to_string())
}

fn log_cancellation(p: &Pipeline) -> std::result::Result<String, String> {
    holomorphic_remainder(&p.basis).map_err(|e| e.to_string())?;
    ensure(p.q.coeff(0).is_zero() && p.q.has_log_head, || {
        "bad q-expansion head".to_string()
    })?;
    Ok("I3 - I2^2/2 is holomorphic; q^0 coefficient is 0".to_string())
}

fn moebius_round_trip(p: &Pipeline) -> std::result::Result<String, String> {
    let c = p.q.coefficients();
    ensure(add_covers(&strip_covers(c)) == c, || {
        "cover sum of stripped c_d differs".to_string()
    })?;
    ensure(strip_covers(&add_covers(c)) == c, || {
        "stripped cover sum differs".to_string()
    })?;
    Ok(format!("both directions exact through degree {}", c.len()))
}

fn identity_chain(p: &Pipeline) -> std::result::Result<String, String> {
    for row in &p.table.rows {
        let d = row.degree as i64;
        let sign = if d % 2 == 0 { rat(1) } else { rat(-1) };
        ensure(row.c == &row.k * rat(-3 * d), || {
            format!("c_{d} != -3d K_{d}")
        })?;
        ensure(row.c == &row.r * &sign, || format!("c_{d} != (-1)^d R_{d}"))?;
    }
    Ok(format!(
        "c_d = -3d K_d = (-1)^d R_d for d <= {}",
        p.table.rows.len()
    ))
}

fn published_series(p: &Pipeline) -> std::result::Result<String, String> {
    let upto = p.basis.order().min(8);
    let h = holomorphic_remainder(&p.basis).map_err(|e| e.to_string())?;
    let series = [
        ("f", reference::F_COEFFS, p.basis.f().coeffs()),
        ("g", reference::G_COEFFS, p.basis.g().coeffs()),
        ("I3 - I2^2/2", reference::H_COEFFS, h.coeffs()),
        ("c", reference::Q_COEFFS, p.q.all_coeffs()),
    ];
    for (label, published, computed) in series {
        let expected = reference::rationals(&published[..upto]);
        ensure(computed[1..=upto] == expected[..], || {
            format!("{label} differs from published values")
        })?;
    }
    Ok(format!(
        "f, g, I3 - I2^2/2 and c match through degree {upto}"
    ))
}

fn published_counts(p: &Pipeline) -> std::result::Result<String, String> {
    let upto = p.q.order().min(PROVEN_THROUGH);
    let m = p.table.m();
    ensure(
        m.len() >= upto && m[..upto] == reference::counts()[..upto],
        || "m_d differs from published table".to_string(),
    )?;
    Ok(format!("m_1..m_{upto} match"))
}

fn high_degree_counts(p: &Pipeline) -> std::result::Result<String, String> {
    if p.table.anomalies.is_empty() && p.q.anomalies.is_empty() {
        return Ok(format!(
            "m_d positive integers for all d <= {}",
            p.table.rows.len()
        ));
    }
    // reported, not failed: only degrees <= 8 are established
    let found: Vec<String> =
        p.q.anomalies
            .iter()
            .map(ToString::to_string)
            .chain(p.table.anomalies.iter().map(ToString::to_string))
            .collect();
    Ok(format!("anomalies: {}", found.join("; ")))
}
