//! Fraction-free row echelon keyed by leading (lowest nonzero) column.
//!
//! Rows are cleared of denominators and kept content-free over the integers.
//! A new row is reduced against the stored row with the same leading column
//! by the cross-multiplication `p * row - row[lead] * pivot`, then divided by
//! its content. The set of leading columns reached is exactly the set of
//! leading exponents attained by the row space.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::scalar::FractionField;

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    width: usize,
    pivots: BTreeMap<usize, Vec<BigInt>>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Self { width, pivots: BTreeMap::new() }
    }

    /// Clears denominators of a row of field elements.
    pub fn integer_row<F: FractionField>(row: &[F]) -> Vec<BigInt> {
        let lcm = row
            .iter()
            .filter(|c| !c.is_zero())
            .fold(BigInt::from(1), |acc, c| acc.lcm(&c.denom_big()));
        row.iter()
            .map(|c| {
                if c.is_zero() {
                    BigInt::zero()
                } else {
                    c.numer_big() * (&lcm / c.denom_big())
                }
            })
            .collect()
    }

    /// Reduces `row` and stores it if it opens a new leading column, which is
    /// returned. Rows that reduce to zero return `None`.
    pub fn insert(&mut self, mut row: Vec<BigInt>) -> Option<usize> {
        row.resize(self.width, BigInt::zero());
        normalize(&mut row);
        loop {
            let lead = row.iter().position(|c| !c.is_zero())?;
            let Some(pivot) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, row);
                return Some(lead);
            };
            let p = pivot[lead].clone();
            let r = row[lead].clone();
            let g = p.gcd(&r);
            let (p, r) = (&p / &g, &r / &g);
            for (x, y) in row.iter_mut().zip(pivot).skip(lead) {
                *x = &p * &*x - &r * y;
            }
            normalize(&mut row);
        }
    }

    /// Leading columns, ascending.
    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn normalize(row: &mut [BigInt]) {
    let content = row.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return;
    }
    let lead_neg = row.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
    let content = if lead_neg { -content } else { content };
    if content != BigInt::from(1) {
        for c in row.iter_mut() {
            *c = &*c / &content;
        }
    }
}
