//! Published low-degree values, used by `check` and the tests.

use num_bigint::BigInt;

use crate::series::Rational;

/// Coefficients of `z^1..z^8` in the holomorphic part `f` of `I2`.
pub const F_COEFFS: [&str; 8] = [
    "6",
    "45",
    "560",
    "17325/2",
    "756756/5",
    "2858856",
    "399072960/7",
    "4732755885/4",
];

/// Coefficients of `z^1..z^8` in the holomorphic part `g` of `I3`.
pub const G_COEFFS: [&str; 8] = [
    "9",
    "423/4",
    "1486",
    "389415/16",
    "21981393/50",
    "16973929/2",
    "8421450228/49",
    "1616340007953/448",
];

/// Coefficients of `z^1..z^8` in `I3 − I2²/2`.
pub const H_COEFFS: [&str; 8] = [
    "9",
    "351/4",
    "1216",
    "319455/16",
    "18122643/50",
    "35161224/5",
    "7009518168/49",
    "1350681750297/448",
];

/// `c_1..c_8`, the `q`-expansion coefficients of `I3`.
pub const Q_COEFFS: [&str; 8] = [
    "-9",
    "135/4",
    "-244",
    "36999/16",
    "-635634/25",
    "307095",
    "-193919175/49",
    "3422490759/64",
];

/// Counts `m_1..m_8`.
pub const M_COUNTS: [i64; 8] = [1, 1, 3, 16, 113, 948, 8974, 92840];

pub fn rationals(values: &[&str]) -> Vec<Rational> {
    values
        .iter()
        .map(|s| s.parse().expect("reference values are valid rationals"))
        .collect()
}

pub fn counts() -> Vec<BigInt> {
    M_COUNTS.iter().map(|&m| BigInt::from(m)).collect()
}
