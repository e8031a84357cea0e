//! Frobenius basis of `θ³ − 3zθ(3θ+1)(3θ+2)` at the point of maximally
//! unipotent monodromy `z = 0`, and the Yukawa coupling built from it.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{rat, ratio, LogSeries, PowerSeries, Rational};

/// `I1 = 1`, `I2 = λ + f`, `I3 = λ²/2 + fλ + g` with `f(0) = g(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusBasis {
    pub i1: LogSeries,
    pub i2: LogSeries,
    pub i3: LogSeries,
}

impl FrobeniusBasis {
    pub fn order(&self) -> usize {
        self.i1.order()
    }

    /// Holomorphic part `f` of `I2`.
    pub fn f(&self) -> &PowerSeries {
        self.i2.part(0)
    }

    /// Holomorphic part `g` of `I3`.
    pub fn g(&self) -> &PowerSeries {
        self.i3.part(0)
    }

    pub fn elements(&self) -> [&LogSeries; 3] {
        [&self.i1, &self.i2, &self.i3]
    }

    /// The same basis at a lower truncation order.
    pub fn truncate(&self, order: usize) -> Self {
        FrobeniusBasis {
            i1: self.i1.truncate(order),
            i2: self.i2.truncate(order),
            i3: self.i3.truncate(order),
        }
    }
}

/// Applies `θ³ − 3z θ(3θ+1)(3θ+2)` to `s`, keeping its truncation order.
pub fn apply_operator(s: &LogSeries) -> LogSeries {
    let t1 = s.theta();
    let t2 = t1.theta();
    let t3 = t2.theta();
    // θ(3θ+1)(3θ+2) = 9θ³ + 9θ² + 2θ
    let inner = t3
        .scale(&rat(9))
        .add(&t2.scale(&rat(9)))
        .add(&t1.scale(&rat(2)));
    t3.sub(&inner.shift_up().scale(&rat(3)))
}

/// Solves for the Frobenius basis through `z^order`.
pub fn solve_basis(order: usize) -> Result<FrobeniusBasis> {
    if order < 1 {
        return Err(Error::InvalidOrder { got: order, min: 1 });
    }
    let one = PowerSeries::one(order);
    let zero = PowerSeries::zero(order);
    let f = holomorphic_period(order);
    let g = solve_holomorphic_part(&f, &PowerSeries::constant(ratio(1, 2), order));
    Ok(FrobeniusBasis {
        i1: LogSeries::pure(one.clone()),
        i2: LogSeries::new(f.clone(), one, zero),
        i3: LogSeries::new(g, f, PowerSeries::constant(ratio(1, 2), order)),
    })
}

/// `f` from `n³ f_n = 3(n−1)(3n−2)(3n−1) f_{n−1}` with `f_1 = 6`.
fn holomorphic_period(order: usize) -> PowerSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[1] = rat(6);
    for n in 2..=order {
        let m = n as i64;
        let num = 3 * (m - 1) * (3 * m - 2) * (3 * m - 1);
        coeffs[n] = &coeffs[n - 1] * ratio(num, m * m * m);
    }
    PowerSeries::from_coeffs(coeffs)
}

/// Given the `λ` and `λ²` parts of a solution, finds the holomorphic part
/// vanishing at 0 that makes the operator annihilate the `λ⁰` component.
///
/// The operator only couples `z^n` with `z^{n-1}`, so each coefficient is
/// fixed by the one below it: `n³ p_n + (rest) = 0`.
pub(crate) fn solve_holomorphic_part(p1: &PowerSeries, p2: &PowerSeries) -> PowerSeries {
    let order = p1.order().min(p2.order());
    let mut p0 = vec![Rational::zero(); order + 1];
    for n in 1..=order {
        let current = [Rational::zero(), p1.coeff(n).clone(), p2.coeff(n).clone()];
        let previous = [
            p0[n - 1].clone(),
            p1.coeff(n - 1).clone(),
            p2.coeff(n - 1).clone(),
        ];
        let residual = operator_coefficient(n, &current, &previous);
        let cube = rat((n * n * n) as i64);
        p0[n] = -&residual[0] / cube;
    }
    PowerSeries::from_coeffs(p0)
}

/// `θ` on the monomials `z^m λ^j` of a single degree `m`.
fn theta_at(m: usize, a: &[Rational; 3]) -> [Rational; 3] {
    let m = rat(m as i64);
    [&a[0] * &m + &a[1], &a[1] * &m + &a[2] * rat(2), &a[2] * &m]
}

/// Coefficient of `z^n` in the operator image, from the `λ`-coefficient
/// triples at degrees `n` and `n−1`.
fn operator_coefficient(
    n: usize,
    current: &[Rational; 3],
    previous: &[Rational; 3],
) -> [Rational; 3] {
    let c1 = theta_at(n, current);
    let c2 = theta_at(n, &c1);
    let c3 = theta_at(n, &c2);
    let p1 = theta_at(n - 1, previous);
    let p2 = theta_at(n - 1, &p1);
    let p3 = theta_at(n - 1, &p2);
    std::array::from_fn(|j| {
        let inner = &p3[j] * rat(9) + &p2[j] * rat(9) + &p1[j] * rat(2);
        &c3[j] - inner * rat(3)
    })
}

/// `K = (θI₂)³ d²I₃/dI₂²`, evaluated as `(θI₂)² · θ(θI₃ / θI₂)`.
///
/// `θI₂` is holomorphic and `θI₃ / θI₂ = λ + u(z)`, so the outer `θ` removes
/// the log; both cancellations are checked rather than assumed.
pub fn yukawa(basis: &FrobeniusBasis) -> Result<PowerSeries> {
    if basis.order() < 2 {
        return Err(Error::InvalidOrder {
            got: basis.order(),
            min: 2,
        });
    }
    let d_i2 = basis
        .i2
        .theta()
        .into_pure()
        .ok_or(Error::LogTermsDidNotCancel("θI₂"))?;
    let d_i3 = basis.i3.theta();
    let first = d_i3.div_series(&d_i2)?;
    let second = first
        .theta()
        .into_pure()
        .ok_or(Error::LogTermsDidNotCancel("θ(θI₃/θI₂)"))?;
    Ok(d_i2.mul(&d_i2).mul(&second))
}
