use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::TruncSeries;
use crate::scalar::Field;

/// Exponent pair `(i, j)` of the monomial `X1^i X2^j`.
pub type Exps = (u32, u32);

/// Sparse polynomial in `X1, X2`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly<F> {
    terms: BTreeMap<Exps, F>,
}

impl<F: Field> Default for BiPoly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> BiPoly<F> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: F, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x1() -> Self {
        Self::monomial(F::one(), 1, 0)
    }

    pub fn x2() -> Self {
        Self::monomial(F::one(), 0, 1)
    }

    /// Sums terms, dropping anything that cancels.
    pub fn from_terms<I: IntoIterator<Item = (Exps, F)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: F) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(F::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> F {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exps, &F)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.terms().map(|(e, a)| (e, a.clone() * c.clone())))
    }

    /// `d/dX1`.
    pub fn diff_x1(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|((i, _), _)| *i > 0)
                .map(|((i, j), c)| ((i - 1, j), c.clone() * F::from_int(i as i64))),
        )
    }

    /// `d/dX2`.
    pub fn diff_x2(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|((_, j), _)| *j > 0)
                .map(|((i, j), c)| ((i, j - 1), c.clone() * F::from_int(j as i64))),
        )
    }

    /// The polynomial `p(u * X1, w * X2)`.
    pub fn rescale(&self, u: &F, w: &F) -> Self {
        Self::from_terms(self.terms().map(|((i, j), c)| {
            let factor = pow(u, i) * pow(w, j);
            ((i, j), c.clone() * factor)
        }))
    }

    /// Exact substitution `p(x1, x2)` truncated to the common precision.
    ///
    /// Horner in `x2` over coefficient polynomials in `x1`, with powers of
    /// `x1` cached.
    pub fn eval(&self, x1: &TruncSeries<F>, x2: &TruncSeries<F>) -> Result<TruncSeries<F>> {
        if x1.precision() != x2.precision() {
            return Err(Error::PrecisionMismatch {
                left: x1.precision(),
                right: x2.precision(),
            });
        }
        let prec = x1.precision();
        if self.is_zero() {
            return Ok(TruncSeries::zero(prec));
        }
        let max_i = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0) as usize;
        let max_j = self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut x1_pows = Vec::with_capacity(max_i + 1);
        x1_pows.push(TruncSeries::one(prec));
        for k in 1..=max_i {
            let next = &x1_pows[k - 1] * x1;
            x1_pows.push(next);
        }
        let mut by_j: BTreeMap<u32, TruncSeries<F>> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let term = x1_pows[i as usize].scale(c);
            let slot = by_j.entry(j).or_insert_with(|| TruncSeries::zero(prec));
            *slot = &*slot + &term;
        }
        let zero = TruncSeries::zero(prec);
        let mut acc = by_j.get(&max_j).cloned().unwrap_or_else(|| zero.clone());
        for j in (0..max_j).rev() {
            acc = &acc * x2;
            if let Some(cj) = by_j.get(&j) {
                acc = &acc + cj;
            }
        }
        Ok(acc)
    }
}

fn pow<F: Field>(base: &F, e: u32) -> F {
    let mut acc = F::one();
    for _ in 0..e {
        acc *= base.clone();
    }
    acc
}

impl<F: Field> Add for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn add(self, rhs: Self) -> BiPoly<F> {
        let mut out = self.clone();
        for ((i, j), c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn sub(self, rhs: Self) -> BiPoly<F> {
        let mut out = self.clone();
        for ((i, j), c) in rhs.terms() {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl<F: Field> Neg for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn neg(self) -> BiPoly<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> Mul for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn mul(self, rhs: Self) -> BiPoly<F> {
        let mut out = BiPoly::zero();
        for ((i1, j1), a) in self.terms() {
            for ((i2, j2), b) in rhs.terms() {
                out.add_term(i1 + i2, j1 + j2, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for BiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Highest X2 power first, then highest X1 power: reads like X2^6 + X1^7 + ...
        let mut keys: Vec<Exps> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| std::cmp::Reverse((j, i)));
        for (n, (i, j)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(i, j)];
            let (neg, mag) = if c.is_negative() { (true, -c.clone()) } else { (false, c.clone()) };
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            match i {
                0 => {}
                1 => factors.push("X1".into()),
                _ => factors.push(format!("X1^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("X2".into()),
                _ => factors.push(format!("X2^{j}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
