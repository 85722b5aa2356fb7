//! Value set of Kähler differentials and the invariants read from it.
//!
//! The values below the conductor are computed by order saturation: pull back
//! every monomial form `x1^a x2^b dx_k` whose initial value is at most
//! `c - 1`, truncate to T-exponents `0..=c-2`, and take the leading columns
//! of an exact row echelon. Values `>= c` are always present, higher-value
//! monomials cannot touch the window, and the leading exponents of a row
//! space are exactly the orders its elements attain.

mod echelon;

use std::collections::BTreeSet;

use rayon::prelude::*;

pub use echelon::Echelon;

use crate::branch::Parameterization;
use crate::error::{Error, Result};
use crate::semigroup::NumSemigroup;
use crate::{Rat, Series};

/// `Lambda ∩ [1, c-1]` and everything derived from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSet {
    gamma: NumSemigroup,
    generators: Vec<u64>,
    conductor: u64,
    small: BTreeSet<u64>,
    lambda_minus_gamma: BTreeSet<u64>,
    lambda1: Option<u64>,
    lambda_c: u64,
}

impl LambdaSet {
    /// Assembles the derived fields from `Lambda ∩ [1, c-1]`.
    pub fn from_small(gamma: &NumSemigroup, small: BTreeSet<u64>) -> Self {
        let c = gamma.conductor();
        let lambda_minus_gamma: BTreeSet<u64> =
            small.iter().copied().filter(|&l| !gamma.contains(l as i64)).collect();
        let lambda1 = lambda_minus_gamma.iter().next().copied();
        let mut lambda_c = c;
        while lambda_c > 1 && small.contains(&(lambda_c - 1)) {
            lambda_c -= 1;
        }
        Self {
            gamma: gamma.clone(),
            generators: gamma.generators().to_vec(),
            conductor: c,
            small,
            lambda_minus_gamma,
            lambda1,
            lambda_c,
        }
    }

    pub fn semigroup(&self) -> &NumSemigroup {
        &self.gamma
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn milnor(&self) -> u64 {
        self.conductor
    }

    /// `Lambda ∩ [1, c-1]`.
    pub fn small(&self) -> &BTreeSet<u64> {
        &self.small
    }

    pub fn contains(&self, l: u64) -> bool {
        l >= self.conductor || self.small.contains(&l)
    }

    pub fn lambda_minus_gamma(&self) -> &BTreeSet<u64> {
        &self.lambda_minus_gamma
    }

    /// `min(Lambda \ Gamma)`; `None` stands for infinity.
    pub fn lambda1(&self) -> Option<u64> {
        self.lambda1
    }

    /// Zariski invariant `lambda1 - v0`.
    pub fn lambda0(&self) -> Option<u64> {
        self.lambda1.map(|l| l - self.generators[0])
    }

    /// `min { l in Lambda : l + N ⊆ Lambda }`.
    pub fn lambda_c(&self) -> u64 {
        self.lambda_c
    }

    /// `{ l > lambda1 : l not in Lambda }`.
    pub fn g_set(&self) -> Result<BTreeSet<u64>> {
        let l1 = self.lambda1.ok_or(Error::LambdaEmpty)?;
        Ok((l1 + 1..self.conductor).filter(|l| !self.small.contains(l)).collect())
    }

    /// `g_set`, empty when `Lambda \ Gamma` is empty.
    pub fn g_set_or_empty(&self) -> BTreeSet<u64> {
        self.g_set().unwrap_or_default()
    }

    /// `mu - #(Lambda \ Gamma)`.
    pub fn tjurina(&self) -> u64 {
        self.conductor - self.lambda_minus_gamma.len() as u64
    }

    /// Structural properties every value set of a plane branch satisfies.
    /// Returns a description of each one that fails.
    pub fn violations(&self) -> Vec<String> {
        let gamma = &self.gamma;
        let c = self.conductor;
        let v0 = self.generators[0];
        let v1 = self.generators[1];
        let mut out = Vec::new();
        for z in 1..c {
            if gamma.contains(z as i64) && !self.small.contains(&z) {
                out.push(format!("semigroup element {z} missing from the value set"));
            }
        }
        for &l in &self.small {
            for z in 1..c.saturating_sub(l) {
                if gamma.contains(z as i64) && !self.small.contains(&(l + z)) {
                    out.push(format!("{l} + {z} not in the value set"));
                }
            }
        }
        if let Some(l1) = self.lambda1 {
            if l1 <= v0 + v1 {
                out.push(format!("lambda1 = {l1} is not above v0 + v1 = {}", v0 + v1));
            }
            for &l in &self.lambda_minus_gamma {
                if l1 < l && l < l1 + v0 {
                    out.push(format!("{l} lies strictly between lambda1 and lambda1 + v0"));
                }
            }
        }
        for &vi in &self.generators[1..] {
            if self.contains(vi - v0) {
                out.push(format!("{} = v_i - v0 is in the value set", vi - v0));
            }
        }
        let bound = dim_lower_bound(gamma);
        let count = Rat::from_integer((self.lambda_minus_gamma.len() as i64).into());
        if count < bound {
            out.push(format!("#(Lambda \\ Gamma) = {count} is below the bound {bound}"));
        }
        out
    }
}

/// Computes `Lambda ∩ [1, c-1]` for a parameterization.
pub fn lambda_set(p: &Parameterization) -> Result<LambdaSet> {
    let gamma = p.semigroup().clone();
    let needed = p.required_precision();
    if p.precision() < needed {
        return Err(Error::PrecisionExhausted { needed, available: p.precision() });
    }
    let c = gamma.conductor() as usize;
    if c < 2 {
        return Ok(LambdaSet::from_small(&gamma, BTreeSet::new()));
    }
    let window = c - 2; // T-exponents 0..=c-2, i.e. values 1..=c-1
    let v0 = p.v0() as usize;
    let v1 = p.v1() as usize;

    let d1 = p.x1().derivative()?.with_precision(window);
    let d2 = p.x2().derivative()?.with_precision(window);
    let x2 = p.x2().with_precision(window);
    let max_b = (c - 1) / v1;
    let mut x2_pows: Vec<Series> = vec![Series::one(window)];
    for b in 1..=max_b {
        let next = &x2_pows[b - 1] * &x2;
        x2_pows.push(next);
    }

    // (initial value, a, b, k)
    let mut monomials = Vec::new();
    for (k, vk, dk) in [(1usize, v0, &d1), (2, v1, &d2)] {
        for b in 0..=max_b {
            let mut a = 0;
            while a * v0 + b * v1 + vk < c {
                monomials.push((a * v0 + b * v1 + vk, a, b, dk, k));
                a += 1;
            }
        }
    }
    monomials.sort_by_key(|&(val, a, b, _, k)| (val, k, a, b));

    let rows: Vec<_> = monomials
        .par_iter()
        .map(|&(_, a, b, dk, _)| {
            let form = (&x2_pows[b] * dk).shift_up(a * v0);
            Echelon::integer_row(form.coeffs())
        })
        .collect();

    let mut echelon = Echelon::new(window + 1);
    for row in rows {
        echelon.insert(row);
    }
    let small = echelon.pivot_columns().map(|k| k as u64 + 1).collect();
    Ok(LambdaSet::from_small(&gamma, small))
}

/// `mu - #(Lambda \ Gamma)`.
pub fn tjurina_of(l: &LambdaSet) -> u64 {
    l.tjurina()
}

/// Topological lower bound for `mu - tau`:
/// `(3 n_g - 2)/4 * (sum_{i<g} (n_i - 1) v_i / n_g - v0 / n_g + 1)`.
/// Zero for two-generator semigroups.
pub fn dim_lower_bound(s: &NumSemigroup) -> Rat {
    let g = s.genus();
    if g < 2 {
        return Rat::from_integer(0.into());
    }
    let n = s.n();
    let ng = n[g - 1] as i64;
    let r = |num: i64, den: i64| Rat::new(num.into(), den.into());
    let mut inner = r(1, 1) - r(s.v(0) as i64, ng);
    for i in 1..g {
        inner += r((n[i - 1] as i64 - 1) * s.v(i) as i64, ng);
    }
    r(3 * ng - 2, 4) * inner
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch::{puiseux, BranchEquation};
    use crate::scalar::Field;
    use crate::Poly;

    fn param(v0: u64, terms: &[(usize, i64)]) -> Parameterization {
        let t: Vec<_> = terms.iter().map(|&(k, c)| (k, Rat::from_int(c))).collect();
        Parameterization::from_terms(v0, &t, None).unwrap()
    }

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    #[test]
    fn quasihomogeneous_five_seven() {
        let l = lambda_set(&param(5, &[(7, 1)])).unwrap();
        assert!(l.lambda_minus_gamma().is_empty());
        assert_eq!(l.lambda1(), None);
        assert_eq!(l.tjurina(), 24);
        assert_eq!(l.g_set(), Err(Error::LambdaEmpty));
        assert!(l.violations().is_empty());
    }

    #[test]
    fn six_seven_first_stratum() {
        let f = Poly::from_terms([
            ((0, 6), Rat::from_int(1)),
            ((7, 0), Rat::from_int(1)),
            ((5, 2), Rat::from_int(1)),
        ]);
        let eq = BranchEquation::from_poly(&f).unwrap();
        let p = puiseux(&eq, eq.default_precision()).unwrap();
        let l = lambda_set(&p).unwrap();
        assert_eq!(l.lambda_minus_gamma(), &set(&[15, 22, 23, 29]));
        assert_eq!(l.tjurina(), 26);
        assert_eq!(l.lambda1(), Some(15));
        assert_eq!(l.lambda0(), Some(9));
        assert_eq!(l.g_set().unwrap(), set(&[16, 17]));
        assert!(l.violations().is_empty());
    }

    #[test]
    fn six_nine_nineteen() {
        let l = lambda_set(&param(6, &[(9, 1), (10, 1)])).unwrap();
        assert!(l.lambda_minus_gamma().is_superset(&set(&[16, 22, 35, 41])));
        assert!(l.lambda_minus_gamma().len() >= 5);
        assert!(l.violations().is_empty());
    }

    #[test]
    fn g_set_empty_cases() {
        // <5,7> with lambda1 = 23: lambda0 = 18
        let l = lambda_set(&param(5, &[(7, 1), (18, 1)])).unwrap();
        assert_eq!(l.lambda_minus_gamma(), &set(&[23]));
        assert!(l.g_set().unwrap().is_empty());
        assert_eq!(l.lambda_c(), 19);

        let l = lambda_set(&param(4, &[(6, 1), (7, 1)])).unwrap();
        assert_eq!(l.lambda_minus_gamma(), &set(&[11, 15]));
        assert!(l.g_set().unwrap().is_empty());
        assert_eq!(tjurina_of(&l), 14);
    }

    #[test]
    fn lambda_c_scan() {
        let gamma = NumSemigroup::from_generators(&[6, 7]).unwrap();
        let mut small: BTreeSet<u64> = (1..30u64).filter(|&z| gamma.contains(z as i64)).collect();
        small.extend([15, 22, 23, 29]);
        let l = LambdaSet::from_small(&gamma, small);
        assert_eq!(l.lambda_c(), 18);
        let bare: BTreeSet<u64> = (1..30u64).filter(|&z| gamma.contains(z as i64)).collect();
        assert_eq!(LambdaSet::from_small(&gamma, bare).lambda_c(), 30);
    }

    #[test]
    fn lower_bounds() {
        let r = |n: i64, d: i64| Rat::new(n.into(), d.into());
        let s = NumSemigroup::from_generators(&[6, 9, 19]).unwrap();
        assert_eq!(dim_lower_bound(&s), r(7, 2));
        let s = NumSemigroup::from_generators(&[4, 6, 13]).unwrap();
        assert_eq!(dim_lower_bound(&s), r(2, 1));
        let s = NumSemigroup::from_generators(&[6, 7]).unwrap();
        assert_eq!(dim_lower_bound(&s), r(0, 1));
    }

    #[test]
    fn insufficient_precision() {
        let p = Parameterization::new(5, Series::monomial(Rat::from_int(1), 7, 31)).unwrap();
        assert!(lambda_set(&p).is_ok());
    }
}
