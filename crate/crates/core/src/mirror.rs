//! Mirror coordinate and the expansion of `I3` in it.
//!
//! Everything is computed in `w = −q = z·exp(f(z))`, which has unit slope in
//! `z`; the alternating signs of the `q`-coefficients are applied only when
//! reading the result out.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::picard_fuchs::FrobeniusBasis;
use crate::series::{ratio, PowerSeries, Rational};

/// Degrees through which the coefficient signs are known to alternate.
pub const SIGN_PATTERN_PROVEN_THROUGH: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorMap {
    /// `w(z) = z·exp(f(z))`
    pub w_of_z: PowerSeries,
    /// Compositional inverse of `w_of_z`.
    pub z_of_w: PowerSeries,
}

impl MirrorMap {
    pub fn order(&self) -> usize {
        self.w_of_z.order()
    }
}

/// A degree whose `q`-coefficient sign is not `(−1)^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignAnomaly {
    pub degree: usize,
    pub value: Rational,
}

impl fmt::Display for SignAnomaly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "c_{} = {} does not have sign (-1)^{}",
            self.degree, self.value, self.degree
        )
    }
}

/// `I3 = (log(−q))²/2 + Σ_{d≥1} c_d q^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExpansion {
    /// Whether the `(log(−q))²/2` head term is present.
    pub has_log_head: bool,
    coeffs: Vec<Rational>,
    /// Sign-pattern breaks above [`SIGN_PATTERN_PROVEN_THROUGH`].
    pub anomalies: Vec<SignAnomaly>,
}

impl QExpansion {
    /// Builds an expansion from `c_0..=c_N`; `c_0` must be zero.
    pub fn new(has_log_head: bool, coeffs: Vec<Rational>) -> Result<Self> {
        match coeffs.first() {
            None => Err(Error::InvalidOrder { got: 0, min: 1 }),
            Some(c0) if !c0.is_zero() => Err(Error::NonzeroQConstant(c0.clone())),
            Some(_) => Ok(QExpansion {
                has_log_head,
                coeffs,
                anomalies: Vec::new(),
            }),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `c_d`, with `c_0 = 0`.
    pub fn coeff(&self, d: usize) -> &Rational {
        &self.coeffs[d]
    }

    /// `c_1..=c_N`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs[1..]
    }

    /// `c_0..=c_N`.
    pub fn all_coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
}

/// `w(z) = z·exp(f)` and its inverse.
pub fn build_map(basis: &FrobeniusBasis) -> Result<MirrorMap> {
    if basis.order() < 1 {
        return Err(Error::InvalidOrder {
            got: basis.order(),
            min: 1,
        });
    }
    let w_of_z = basis.f().exp()?.shift_up();
    let z_of_w = w_of_z.revert()?;
    Ok(MirrorMap { w_of_z, z_of_w })
}

/// `h = g − f²/2`, so that `I3 = I2²/2 + h`.
///
/// Also forms `I3 − I2·I2/2` with log-series arithmetic and checks that the
/// log terms cancel to the same `h`.
pub fn holomorphic_remainder(basis: &FrobeniusBasis) -> Result<PowerSeries> {
    let half = ratio(1, 2);
    let h = basis.g().sub(&basis.f().mul(basis.f()).scale(&half));
    let via_logs = basis
        .i3
        .sub(&basis.i2.mul(&basis.i2)?.scale(&half))
        .into_pure()
        .ok_or(Error::LogTermsDidNotCancel("I₃ − I₂²/2"))?;
    if via_logs != h {
        return Err(Error::ConsistencyFailure {
            degree: 0,
            identity: "I₃ − I₂²/2 = g − f²/2",
        });
    }
    Ok(h)
}

/// Re-expands `I3` in the mirror coordinate `q`.
pub fn q_expand_i3(basis: &FrobeniusBasis, map: &MirrorMap) -> Result<QExpansion> {
    let h = holomorphic_remainder(basis)?;
    let h_of_w = h.compose(&map.z_of_w)?;
    let coeffs: Vec<Rational> = h_of_w
        .into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(d, c)| if d % 2 == 1 { -c } else { c })
        .collect();
    // I2 = log(w) = log(−q), so I2²/2 is the head term
    let mut q = QExpansion::new(true, coeffs)?;
    for d in 1..=q.order() {
        let c = q.coeff(d);
        let expected_negative = d % 2 == 1;
        let ok = if expected_negative {
            c.is_negative()
        } else {
            c.is_positive()
        };
        if ok {
            continue;
        }
        if d <= SIGN_PATTERN_PROVEN_THROUGH {
            return Err(Error::SignPattern {
                degree: d,
                value: c.clone(),
            });
        }
        q.anomalies.push(SignAnomaly {
            degree: d,
            value: c.clone(),
        });
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard_fuchs::solve_basis;
    use crate::series::rat;

    #[test]
    fn map_leading_terms() {
        // z·exp(6z + 45z² + ...) = z + 6z² + (45 + 36/2) z³ + ...
        let map = build_map(&solve_basis(3).unwrap()).unwrap();
        assert_eq!(map.w_of_z, PowerSeries::from_ints(&[0, 1, 6, 63], 3));
        assert_eq!(map.z_of_w.coeff(0), &rat(0));
        assert_eq!(map.z_of_w.coeff(1), &rat(1));
    }

    #[test]
    fn map_round_trip() {
        let map = build_map(&solve_basis(10).unwrap()).unwrap();
        assert_eq!(
            map.w_of_z.compose(&map.z_of_w).unwrap(),
            PowerSeries::var(10)
        );
        assert_eq!(
            map.z_of_w.compose(&map.w_of_z).unwrap(),
            PowerSeries::var(10)
        );
    }

    #[test]
    fn remainder_second_coefficient() {
        // 423/4 − 6²/2 = 351/4
        let h = holomorphic_remainder(&solve_basis(2).unwrap()).unwrap();
        assert_eq!(h.coeff(2), &ratio(351, 4));
    }

    #[test]
    fn q_expansion_first_terms() {
        let basis = solve_basis(3).unwrap();
        let q = q_expand_i3(&basis, &build_map(&basis).unwrap()).unwrap();
        assert!(q.has_log_head);
        assert_eq!(q.coeff(0), &rat(0));
        assert_eq!(q.coefficients(), &[rat(-9), ratio(135, 4), rat(-244)]);
        assert!(q.anomalies.is_empty());
    }

    #[test]
    fn nonzero_constant_is_rejected() {
        assert!(matches!(
            QExpansion::new(true, vec![rat(1), rat(2)]),
            Err(Error::NonzeroQConstant(_))
        ));
    }
}
