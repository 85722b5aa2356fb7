use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Field;

/// T-adic order of a truncated series.
///
/// `OverPrecision` means every stored coefficient vanishes: the true order is
/// larger than the precision, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(usize),
    OverPrecision,
}

impl Order {
    pub fn finite(self) -> Option<usize> {
        match self {
            Order::Finite(k) => Some(k),
            Order::OverPrecision => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::OverPrecision => f.write_str("over-precision"),
        }
    }
}

/// Dense power series in `T` known modulo `T^(N+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries<F> {
    coeffs: Vec<F>,
}

impl<F: Field> TruncSeries<F> {
    /// The zero series at precision `prec`.
    pub fn zero(prec: usize) -> Self {
        Self { coeffs: vec![F::zero(); prec + 1] }
    }

    pub fn one(prec: usize) -> Self {
        Self::monomial(F::one(), 0, prec)
    }

    /// `c * T^k`, truncated (so `k > prec` yields zero).
    pub fn monomial(c: F, k: usize, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        if k <= prec {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from its first `prec + 1` coefficients; missing
    /// trailing coefficients are zero and extra ones are dropped.
    pub fn from_coeffs(mut coeffs: Vec<F>, prec: usize) -> Self {
        coeffs.resize(prec + 1, F::zero());
        Self { coeffs }
    }

    /// Builds a series from sparse `(exponent, coefficient)` terms. Terms with
    /// the same exponent are summed.
    pub fn from_terms<I: IntoIterator<Item = (usize, F)>>(terms: I, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        for (k, c) in terms {
            if k <= prec {
                s.coeffs[k] += c;
            }
        }
        s
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn order(&self) -> Order {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(k) => Order::Finite(k),
            None => Order::OverPrecision,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.order() == Order::OverPrecision
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn support(&self) -> impl Iterator<Item = (usize, &F)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Re-truncates or zero-pads to a new precision.
    pub fn with_precision(&self, prec: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), prec)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// Formal derivative; precision drops by one.
    pub fn derivative(&self) -> Result<Self> {
        let n = self.precision();
        if n == 0 {
            return Err(Error::PrecisionExhausted { needed: 1, available: 0 });
        }
        let coeffs = (1..=n).map(|k| F::from_int(k as i64) * self.coeffs[k].clone()).collect();
        Ok(Self { coeffs })
    }

    /// Divides by `T^k` (the first `k` coefficients must vanish).
    /// The precision drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        let n = self.precision();
        if k > n {
            return Err(Error::PrecisionExhausted { needed: k, available: n });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible { shift: k });
        }
        Ok(Self { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Multiplies by `T^k` keeping the precision.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.precision();
        let mut s = Self::zero(n);
        for i in 0..=n.saturating_sub(k) {
            if i + k <= n {
                s.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        s
    }

    /// Inverse of a unit (nonzero constant term) by the usual recursion
    /// `b_k = -(1/a_0) * sum_{j=1..k} a_j b_{k-j}`.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = self.coeffs[0].clone();
        if a0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let n = self.precision();
        let inv0 = F::one() / a0;
        let mut b: Vec<F> = Vec::with_capacity(n + 1);
        b.push(inv0.clone());
        for k in 1..=n {
            let mut acc = F::zero();
            for j in 1..=k {
                let aj = &self.coeffs[j];
                if !aj.is_zero() {
                    acc += aj.clone() * b[k - j].clone();
                }
            }
            b.push(-(acc * inv0.clone()));
        }
        Ok(Self { coeffs: b })
    }

    /// `self^e` at the current precision.
    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.precision());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl<F: Field> Add for &TruncSeries<F> {
    type Output = TruncSeries<F>;
    fn add(self, rhs: Self) -> TruncSeries<F> {
        let n = self.precision().min(rhs.precision());
        let coeffs = (0..=n).map(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone()).collect();
        TruncSeries { coeffs }
    }
}

impl<F: Field> Sub for &TruncSeries<F> {
    type Output = TruncSeries<F>;
    fn sub(self, rhs: Self) -> TruncSeries<F> {
        let n = self.precision().min(rhs.precision());
        let coeffs = (0..=n).map(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone()).collect();
        TruncSeries { coeffs }
    }
}

impl<F: Field> Neg for &TruncSeries<F> {
    type Output = TruncSeries<F>;
    fn neg(self) -> TruncSeries<F> {
        TruncSeries { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<F: Field> Mul for &TruncSeries<F> {
    type Output = TruncSeries<F>;
    fn mul(self, rhs: Self) -> TruncSeries<F> {
        let n = self.precision().min(rhs.precision());
        let mut out = TruncSeries::zero(n);
        for (p, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (q, b) in rhs.coeffs.iter().enumerate().take(n + 1 - p) {
                if !b.is_zero() {
                    out.coeffs[p + q] += a.clone() * b.clone();
                }
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for TruncSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.support() {
            let (neg, mag) = if c.is_negative() { (true, -c.clone()) } else { (false, c.clone()) };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("T")?,
                (_, true) => write!(f, "T^{k}")?,
                (1, false) => write!(f, "{mag}*T")?,
                (_, false) => write!(f, "{mag}*T^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(T^{})", self.precision() + 1)
    }
}
