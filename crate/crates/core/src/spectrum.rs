//! Spectral numbers of semiquasihomogeneous branches `<v0, v1>`.
//!
//! The spectrum is `{ ±δ/(v0 v1) : δ a gap of <v0, v1> }`. The Newton-order
//! grid `{ (i+1)/v1 + (j+1)/v0 - 1 }` over the monomial basis of the Milnor
//! algebra gives the same set; both are provided so each can check the other.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::differentials::LambdaSet;
use crate::error::{Error, Result};
use crate::semigroup::NumSemigroup;
use crate::{Poly, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    v0: u64,
    v1: u64,
    values: Vec<Rat>,
}

impl Spectrum {
    pub fn v0(&self) -> u64 {
        self.v0
    }

    pub fn v1(&self) -> u64 {
        self.v1
    }

    /// Sorted ascending.
    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> Option<&Rat> {
        self.values.first()
    }

    pub fn sum(&self) -> Rat {
        self.values.iter().cloned().fold(zero(), |a, b| a + b)
    }

    /// `k / (v0 v1)`.
    pub fn scaled(&self, k: i64) -> Rat {
        Rat::new(k.into(), ((self.v0 * self.v1) as i64).into())
    }
}

fn zero() -> Rat {
    Rat::from_integer(0.into())
}

fn check_pair(v0: u64, v1: u64) -> Result<()> {
    if v0 < 2 || v1 <= v0 {
        return Err(Error::InvalidGenerators(format!("need 2 <= v0 < v1, got ({v0}, {v1})")));
    }
    if v0.gcd(&v1) != 1 {
        return Err(Error::NotCoprime { v0, v1 });
    }
    Ok(())
}

/// `{ ±δ/(v0 v1) : δ gap }`.
pub fn spectrum(v0: u64, v1: u64) -> Result<Spectrum> {
    check_pair(v0, v1)?;
    let gamma = NumSemigroup::from_generators(&[v0, v1])?;
    let n = (v0 * v1) as i64;
    let mut values: Vec<Rat> = gamma
        .gaps()
        .into_iter()
        .flat_map(|d| [Rat::new((-(d as i64)).into(), n.into()), Rat::new((d as i64).into(), n.into())])
        .collect();
    values.sort();
    Ok(Spectrum { v0, v1, values })
}

/// `{ (i+1)/v1 + (j+1)/v0 - 1 : 0 <= i < v1 - 1, 0 <= j < v0 - 1 }`.
pub fn spectrum_grid(v0: u64, v1: u64) -> Result<Spectrum> {
    check_pair(v0, v1)?;
    let n = (v0 * v1) as i64;
    let mut values = Vec::with_capacity(((v0 - 1) * (v1 - 1)) as usize);
    for i in 0..v1 - 1 {
        for j in 0..v0 - 1 {
            let num = ((i + 1) * v0 + (j + 1) * v1) as i64 - n;
            values.push(Rat::new(num.into(), n.into()));
        }
    }
    values.sort();
    Ok(Spectrum { v0, v1, values })
}

/// `min { i/v1 + j/v0 : c_ij != 0 }`; `None` for the zero polynomial.
pub fn newton_order(h: &Poly, v0: u64, v1: u64) -> Option<Rat> {
    h.terms()
        .map(|((i, j), _)| Rat::new(((i as u64 * v0 + j as u64 * v1) as i64).into(), ((v0 * v1) as i64).into()))
        .min()
}

/// `S = S_{-1} ∪ S~ ∪ S_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumPartition {
    /// `σ < λ1/(v0 v1)`.
    pub s_minus1: Vec<Rat>,
    /// `δ/(v0 v1)` for `δ` in `G`.
    pub s_tilde: Vec<Rat>,
    /// `λ/(v0 v1)` for `λ` in `Λ \ Γ`.
    pub s0: Vec<Rat>,
}

pub fn partition(sp: &Spectrum, l: &LambdaSet) -> Result<SpectrumPartition> {
    if l.generators() != [sp.v0, sp.v1] {
        return Err(Error::SemigroupMismatch);
    }
    let scale = |xs: &BTreeSet<u64>| -> Vec<Rat> { xs.iter().map(|&x| sp.scaled(x as i64)).collect() };
    let Some(l1) = l.lambda1() else {
        return Ok(SpectrumPartition { s_minus1: sp.values.clone(), s_tilde: vec![], s0: vec![] });
    };
    let threshold = sp.scaled(l1 as i64);
    let s_minus1 = sp.values.iter().filter(|s| **s < threshold).cloned().collect();
    Ok(SpectrumPartition {
        s_minus1,
        s_tilde: scale(&l.g_set()?),
        s0: scale(l.lambda_minus_gamma()),
    })
}
