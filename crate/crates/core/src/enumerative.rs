//! Curve counts from the `q`-expansion of `I3`.
//!
//! Sequences here are indexed by degree starting at `d = 1`, so element `i`
//! of a slice belongs to degree `i + 1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::mirror::QExpansion;
use crate::series::{rat, Rational};

/// Degrees for which the counts `m_d` are established; anomalies above this
/// are reported instead of rejected.
pub const PROVEN_THROUGH: usize = 8;

/// Möbius function by trial division.
pub fn moebius(k: u64) -> i64 {
    assert!(k >= 1, "moebius is defined on positive integers");
    let mut n = k;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n.is_multiple_of(k) {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn pow_rat(k: usize, e: u32) -> Rational {
    rat((k as i64).pow(e))
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Multiple-cover sum `c_d = Σ_{k|d} b_{d/k} / k²`.
pub fn add_covers(b: &[Rational]) -> Vec<Rational> {
    (1..=b.len())
        .map(|d| {
            divisors(d)
                .into_iter()
                .map(|k| &b[d / k - 1] / pow_rat(k, 2))
                .sum()
        })
        .collect()
}

/// Inverse of [`add_covers`]: `b_d = Σ_{k|d} μ(k) c_{d/k} / k²`.
pub fn strip_covers(c: &[Rational]) -> Vec<Rational> {
    (1..=c.len())
        .map(|d| {
            divisors(d)
                .into_iter()
                .filter_map(|k| match moebius(k as u64) {
                    0 => None,
                    mu => Some(&c[d / k - 1] * rat(mu) / pow_rat(k, 2)),
                })
                .sum()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountAnomalyKind {
    NonIntegral,
    NotPositive,
}

/// Unexpected value of `m_d` at a degree above [`PROVEN_THROUGH`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountAnomaly {
    pub degree: usize,
    pub value: Rational,
    pub kind: CountAnomalyKind,
}

impl fmt::Display for CountAnomaly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            CountAnomalyKind::NonIntegral => "is not an integer",
            CountAnomalyKind::NotPositive => "is not positive",
        };
        write!(f, "m_{} = {} {}", self.degree, self.value, what)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Extraction {
    /// `m_1..`; stops before the first non-integral degree.
    pub counts: Vec<BigInt>,
    pub anomalies: Vec<CountAnomaly>,
}

/// `m_d = (−1)^d b_d / (3d)²`.
pub fn extract_m(b: &[Rational]) -> Result<Extraction> {
    let mut out = Extraction::default();
    for (i, bd) in b.iter().enumerate() {
        let d = i + 1;
        let value = bd * rat(sign(d)) / pow_rat(3 * d, 2);
        let integral = value.is_integer();
        if d <= PROVEN_THROUGH && (!integral || value.is_negative()) {
            return Err(Error::IntegralityFailure { degree: d, value });
        }
        if !integral {
            out.anomalies.push(CountAnomaly {
                degree: d,
                value,
                kind: CountAnomalyKind::NonIntegral,
            });
            break;
        }
        if !value.is_positive() {
            out.anomalies.push(CountAnomaly {
                degree: d,
                value: value.clone(),
                kind: CountAnomalyKind::NotPositive,
            });
        }
        out.counts.push(value.to_integer());
    }
    Ok(out)
}

/// Local invariants `n_d = (−1)^{d−1} 3d m_d`.
pub fn derive_n(m: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .enumerate()
        .map(|(i, md)| {
            let d = i + 1;
            md * BigInt::from(-sign(d) * 3 * d as i64)
        })
        .collect()
}

/// Chern numbers `K_d = Σ_{k|d} n_{d/k} / k³`.
pub fn derive_k(n: &[BigInt]) -> Vec<Rational> {
    (1..=n.len())
        .map(|d| {
            divisors(d)
                .into_iter()
                .map(|k| Rational::from_integer(n[d / k - 1].clone()) / pow_rat(k, 3))
                .sum()
        })
        .collect()
}

/// Relative numbers `R_d = (3d)² Σ_{k|d} (−1)^{d−d/k} m_{d/k} / k⁴`.
pub fn derive_r(m: &[BigInt]) -> Vec<Rational> {
    (1..=m.len())
        .map(|d| {
            let sum: Rational = divisors(d)
                .into_iter()
                .map(|k| {
                    let e = d / k;
                    Rational::from_integer(m[e - 1].clone()) * rat(sign(d - e)) / pow_rat(k, 4)
                })
                .sum();
            sum * pow_rat(3 * d, 2)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRow {
    pub degree: usize,
    /// `q`-coefficient of `I3`.
    pub c: Rational,
    /// Cover-stripped coefficient.
    pub b: Rational,
    pub m: BigInt,
    pub n: BigInt,
    pub k: Rational,
    pub r: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable {
    pub rows: Vec<InvariantRow>,
    pub anomalies: Vec<CountAnomaly>,
}

impl InvariantTable {
    pub fn m(&self) -> Vec<BigInt> {
        self.rows.iter().map(|r| r.m.clone()).collect()
    }

    pub fn n(&self) -> Vec<BigInt> {
        self.rows.iter().map(|r| r.n.clone()).collect()
    }
}

/// Runs the whole extraction and checks every identity between the columns:
/// `b_d = (−1)^d (3d)² m_d`, `c_d = −3d K_d`, `c_d = (−1)^d R_d`.
pub fn build_table(q: &QExpansion) -> Result<InvariantTable> {
    if !q.has_log_head {
        return Err(Error::MissingLogHead);
    }
    let c = q.coefficients();
    let b = strip_covers(c);
    if add_covers(&b) != c {
        return Err(Error::ConsistencyFailure {
            degree: 0,
            identity: "Möbius round trip",
        });
    }
    let Extraction {
        counts: m,
        anomalies,
    } = extract_m(&b)?;
    let n = derive_n(&m);
    let k = derive_k(&n);
    let r = derive_r(&m);

    let mut rows = Vec::with_capacity(m.len());
    for (i, md) in m.iter().enumerate() {
        let d = i + 1;
        let md_rat = Rational::from_integer(md.clone());
        if b[i] != md_rat * rat(sign(d)) * pow_rat(3 * d, 2) {
            return Err(Error::ConsistencyFailure {
                degree: d,
                identity: "b_d = (-1)^d (3d)^2 m_d",
            });
        }
        if n[i] != md * BigInt::from(-sign(d) * 3 * d as i64) {
            return Err(Error::ConsistencyFailure {
                degree: d,
                identity: "n_d = (-1)^(d-1) 3d m_d",
            });
        }
        if c[i] != &k[i] * rat(-3 * d as i64) {
            return Err(Error::ConsistencyFailure {
                degree: d,
                identity: "c_d = -3d K_d",
            });
        }
        if c[i] != &r[i] * rat(sign(d)) {
            return Err(Error::ConsistencyFailure {
                degree: d,
                identity: "c_d = (-1)^d R_d",
            });
        }
        rows.push(InvariantRow {
            degree: d,
            c: c[i].clone(),
            b: b[i].clone(),
            m: md.clone(),
            n: n[i].clone(),
            k: k[i].clone(),
            r: r[i].clone(),
        });
    }
    Ok(InvariantTable { rows, anomalies })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(12), 0);
        assert_eq!(moebius(2), -1);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(49), 0);
    }

    #[test]
    fn moebius_sums_vanish() {
        // Σ_{k|n} μ(k) = [n = 1]
        for n in 1..200 {
            let s: i64 = divisors(n).into_iter().map(|k| moebius(k as u64)).sum();
            assert_eq!(s, i64::from(n == 1), "n = {n}");
        }
    }

    #[test]
    fn divisors_are_sorted_and_complete() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(16), vec![1, 2, 4, 8, 16]);
        for n in 1..100 {
            let brute: Vec<usize> = (1..=n).filter(|k| n % k == 0).collect();
            assert_eq!(divisors(n), brute);
        }
    }

    #[test]
    fn strip_first_two() {
        let c = vec![rat(-9), ratio(135, 4)];
        let b = strip_covers(&c);
        assert_eq!(b, vec![rat(-9), rat(36)]);
    }

    #[test]
    fn extract_small() {
        let e = extract_m(&[rat(-9), rat(36)]).unwrap();
        assert_eq!(e.counts, ints(&[1, 1]));
        assert!(e.anomalies.is_empty());
    }

    #[test]
    fn extract_rejects_fraction_in_proven_range() {
        let err = extract_m(&[rat(-9), rat(35)]).unwrap_err();
        assert_eq!(
            err,
            Error::IntegralityFailure {
                degree: 2,
                value: ratio(35, 36)
            }
        );
    }

    #[test]
    fn extract_rejects_negative_in_proven_range() {
        assert!(matches!(
            extract_m(&[rat(9)]),
            Err(Error::IntegralityFailure { degree: 1, .. })
        ));
    }

    #[test]
    fn extract_reports_above_proven_range() {
        let mut b: Vec<Rational> = (1..=8)
            .map(|d| rat(sign(d) * (3 * d as i64).pow(2)))
            .collect();
        b.push(rat(0)); // d = 9: m = 0
        b.push(rat(1)); // d = 10: not integral
        b.push(rat(0)); // never reached
        let e = extract_m(&b).unwrap();
        assert_eq!(e.counts.len(), 9);
        assert_eq!(e.anomalies.len(), 2);
        assert_eq!(e.anomalies[0].kind, CountAnomalyKind::NotPositive);
        assert_eq!(e.anomalies[1].kind, CountAnomalyKind::NonIntegral);
        assert_eq!(e.anomalies[1].degree, 10);
    }

    #[test]
    fn n_from_m() {
        assert_eq!(
            derive_n(&ints(&[1, 1, 3, 16, 113])),
            ints(&[3, -6, 27, -192, 1695])
        );
    }

    #[test]
    fn k_from_n() {
        let k = derive_k(&ints(&[3, -6, 27]));
        assert_eq!(k, vec![rat(3), ratio(-45, 8), ratio(244, 9)]);
    }

    #[test]
    fn r_from_m() {
        let r = derive_r(&ints(&[1, 1, 3]));
        assert_eq!(r, vec![rat(9), ratio(135, 4), rat(244)]);
    }

    #[test]
    fn table_requires_head() {
        let q = QExpansion::new(false, vec![rat(0), rat(-9)]).unwrap();
        assert_eq!(build_table(&q), Err(Error::MissingLogHead));
    }
}
