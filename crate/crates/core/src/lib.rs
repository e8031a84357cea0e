//! Exact power-series computation of the mirror map for local `P²`.
//!
//! The pipeline solves the Picard–Fuchs equation
//! `{θ³ − 3zθ(3θ+1)(3θ+2)} I = 0` in Frobenius form, builds the mirror
//! coordinate `q = −z·exp(f(z))`, re-expands the double-log period `I3` in
//! `q`, and strips multiple covers to recover integer curve counts.
//! All arithmetic is exact.

pub mod checks;
pub mod enumerative;
mod error;
pub mod mirror;
pub mod picard_fuchs;
pub mod reference;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use series::{LogSeries, PowerSeries, Rational};

use enumerative::InvariantTable;
use mirror::{MirrorMap, QExpansion};
use picard_fuchs::FrobeniusBasis;

/// Every intermediate result of one run at a fixed truncation order.
#[derive(Clone, Debug)]
pub struct Pipeline {
    pub basis: FrobeniusBasis,
    pub map: MirrorMap,
    pub q: QExpansion,
    pub table: InvariantTable,
}

impl Pipeline {
    pub fn run(order: usize) -> Result<Self> {
        let basis = picard_fuchs::solve_basis(order)?;
        let map = mirror::build_map(&basis)?;
        let q = mirror::q_expand_i3(&basis, &map)?;
        let table = enumerative::build_table(&q)?;
        Ok(Pipeline {
            basis,
            map,
            q,
            table,
        })
    }
}
