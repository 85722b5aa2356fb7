//! Plane branches: parameterizations, semiquasihomogeneous equations, Newton
//! lifting from one to the other, and valuations of functions and 1-forms.

use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::Order;
use crate::semigroup::NumSemigroup;
use crate::{Poly, Rat, Series};

/// A primitive parameterization `(T^v0, x2(T))` with `x2 = T^v1 + ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct Parameterization {
    v0: u64,
    x1: Series,
    x2: Series,
    gamma: NumSemigroup,
}

impl Parameterization {
    /// Validates `(T^v0, x2)` at the precision carried by `x2`.
    ///
    /// The leading coefficient of `x2` is scaled to 1 (a linear change of the
    /// `X2` coordinate). The precision must cover `c + v1`.
    pub fn new(v0: u64, x2: Series) -> Result<Self> {
        let p = Self::build(v0, x2)?;
        let needed = p.required_precision();
        if p.precision() < needed {
            return Err(Error::PrecisionExhausted { needed, available: p.precision() });
        }
        Ok(p)
    }

    /// Builds `(T^v0, sum c_k T^k)` from sparse terms. Without an explicit
    /// precision the default `c + v1 + 1` is used; an explicit one may not go
    /// below `c + v1`.
    pub fn from_terms(v0: u64, terms: &[(usize, Rat)], precision: Option<usize>) -> Result<Self> {
        let max_k = terms.iter().map(|(k, _)| *k).max().unwrap_or(0);
        // first pass only needs to see every supplied exponent
        let probe = Self::build(v0, Series::from_terms(terms.iter().cloned(), max_k.max(1)))?;
        let prec = precision.unwrap_or_else(|| probe.default_precision());
        Self::new(v0, Series::from_terms(terms.iter().cloned(), prec))
    }

    fn build(v0: u64, x2: Series) -> Result<Self> {
        if v0 < 2 {
            return Err(Error::InvalidParameterization(format!("v0 = {v0} must be at least 2")));
        }
        let v1 = match x2.order() {
            Order::Finite(k) => k as u64,
            Order::OverPrecision => {
                return Err(Error::InvalidParameterization("x2 vanishes".into()));
            }
        };
        if v1 <= v0 {
            return Err(Error::InvalidParameterization(format!(
                "order of x2 ({v1}) must exceed v0 ({v0})"
            )));
        }
        if v1 % v0 == 0 {
            return Err(Error::InvalidParameterization(format!("v0 = {v0} divides v1 = {v1}")));
        }
        let lead = x2.coeff(v1 as usize);
        let x2 = if lead.is_one() { x2 } else { x2.scale(&(Rat::one() / lead)) };
        let gamma = semigroup_from_support(v0, &x2)?;
        let x1 = Series::monomial(Rat::one(), v0 as usize, x2.precision());
        Ok(Self { v0, x1, x2, gamma })
    }

    pub fn v0(&self) -> u64 {
        self.v0
    }

    pub fn v1(&self) -> u64 {
        self.gamma.v(1)
    }

    pub fn x1(&self) -> &Series {
        &self.x1
    }

    pub fn x2(&self) -> &Series {
        &self.x2
    }

    pub fn precision(&self) -> usize {
        self.x2.precision()
    }

    /// Value semigroup read off the characteristic exponents of `x2`.
    pub fn semigroup(&self) -> &NumSemigroup {
        &self.gamma
    }

    /// `c + v1`, the least precision at which every invariant here is exact.
    pub fn required_precision(&self) -> usize {
        (self.gamma.conductor() + self.v1()) as usize
    }

    /// `c + v1 + 1`.
    pub fn default_precision(&self) -> usize {
        self.required_precision() + 1
    }

    /// `nu(h) = ord_T h(phi(T))`.
    pub fn value(&self, h: &Poly) -> Result<Order> {
        Ok(h.eval(&self.x1, &self.x2)?.order())
    }

    /// Pullback `A(phi) phi1' + B(phi) phi2'` of `A dx1 + B dx2`.
    pub fn pullback(&self, a: &Poly, b: &Poly) -> Result<Series> {
        let d1 = self.x1.derivative()?;
        let d2 = self.x2.derivative()?;
        let pa = a.eval(&self.x1, &self.x2)?;
        let pb = b.eval(&self.x1, &self.x2)?;
        Ok(&(&pa * &d1) + &(&pb * &d2))
    }

    /// `nu(A dx1 + B dx2) = ord_T(pullback) + 1`.
    pub fn value_form(&self, a: &Poly, b: &Poly) -> Result<Order> {
        Ok(match self.pullback(a, b)?.order() {
            Order::Finite(k) => Order::Finite(k + 1),
            Order::OverPrecision => Order::OverPrecision,
        })
    }
}

/// Characteristic exponents by the gcd chain over the support of `x2`, then
/// generators by the usual recursion.
fn semigroup_from_support(v0: u64, x2: &Series) -> Result<NumSemigroup> {
    let mut beta = vec![v0];
    let mut e = v0;
    for (k, _) in x2.support() {
        let k = k as u64;
        if e == 1 {
            break;
        }
        if !k.is_multiple_of(e) {
            beta.push(k);
            e = e.gcd(&k);
        }
    }
    if e != 1 {
        return Err(Error::NotPrimitive { gcd: e });
    }
    NumSemigroup::from_char_exponents(&beta)
}

/// `X2^v0 - X1^v1 + sum_{(i,j) in Theta} a_ij X1^i X2^j` with
/// `Theta = {1 <= i < v1 - 1, 1 <= j < v0 - 1, i v0 + j v1 > v0 v1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchEquation {
    v0: u64,
    v1: u64,
    /// Terms on `Theta` only.
    coeffs: Poly,
    /// `(u, w)` with `normalized = original(u X1, w X2) / const`.
    scaling: (Rat, Rat),
}

impl BranchEquation {
    /// Builds the equation from its `Theta` coefficients.
    pub fn new(v0: u64, v1: u64, coeffs: Poly) -> Result<Self> {
        if v0 < 2 || v1 <= v0 {
            return Err(Error::NotShortForm(format!("need 2 <= v0 < v1, got ({v0}, {v1})")));
        }
        if v0.gcd(&v1) != 1 {
            return Err(Error::NotCoprime { v0, v1 });
        }
        for ((i, j), _) in coeffs.terms() {
            if !in_theta(v0, v1, i as u64, j as u64) {
                return Err(Error::NotShortForm(format!(
                    "monomial X1^{i}*X2^{j} is outside the admissible region"
                )));
            }
        }
        Ok(Self { v0, v1, coeffs, scaling: (Rat::one(), Rat::one()) })
    }

    /// Recognises `p X2^v0 + q X1^v1 + (terms on Theta)` and rescales the
    /// coordinates so the leading part becomes `X2^v0 - X1^v1`.
    pub fn from_poly(f: &Poly) -> Result<Self> {
        let pure_x2: Vec<_> = f.terms().filter(|((i, _), _)| *i == 0).collect();
        let pure_x1: Vec<_> = f.terms().filter(|((_, j), _)| *j == 0).collect();
        let [((_, v0), p)] = pure_x2.as_slice() else {
            return Err(Error::NotShortForm("need exactly one pure power of X2".into()));
        };
        let [((v1, _), q)] = pure_x1.as_slice() else {
            return Err(Error::NotShortForm("need exactly one pure power of X1".into()));
        };
        let (v0, v1) = (*v0 as u64, *v1 as u64);
        if v0 < 2 || v1 <= v0 {
            return Err(Error::NotShortForm(format!(
                "need X2^v0 and X1^v1 with 2 <= v0 < v1, got v0 = {v0}, v1 = {v1}"
            )));
        }
        if v0.gcd(&v1) != 1 {
            return Err(Error::NotCoprime { v0, v1 });
        }
        // c = -q/p; pick a with v0 | 1 + a*v1, b = (1 + a*v1)/v0 and scale
        // X1 -> c^a X1, X2 -> c^b X2, then divide by p c^(b v0).
        let c = -((*q).clone() / (*p).clone());
        let a = (0..v0).find(|a| (1 + a * v1) % v0 == 0).expect("v1 invertible mod v0");
        let b = (1 + a * v1) / v0;
        let u = rat_pow(&c, a);
        let w = rat_pow(&c, b);
        let norm = (*p).clone() * rat_pow(&w, v0);
        let scaled = f.rescale(&u, &w).scale(&(Rat::one() / norm));
        debug_assert_eq!(scaled.coeff(0, v0 as u32), Rat::one());
        debug_assert_eq!(scaled.coeff(v1 as u32, 0), -Rat::one());
        let rest = Poly::from_terms(
            scaled.terms().filter(|((i, j), _)| *i != 0 && *j != 0).map(|(e, c)| (e, c.clone())),
        );
        let mut eq = Self::new(v0, v1, rest)?;
        eq.scaling = (u, w);
        Ok(eq)
    }

    pub fn v0(&self) -> u64 {
        self.v0
    }

    pub fn v1(&self) -> u64 {
        self.v1
    }

    /// The `Theta` part.
    pub fn coeffs(&self) -> &Poly {
        &self.coeffs
    }

    /// `(u, w)` such that the stored equation is proportional to
    /// `original(u X1, w X2)`.
    pub fn scaling(&self) -> &(Rat, Rat) {
        &self.scaling
    }

    pub fn is_quasihomogeneous(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn semigroup(&self) -> NumSemigroup {
        NumSemigroup::from_generators(&[self.v0, self.v1]).expect("coprime pair")
    }

    /// The full normalized polynomial.
    pub fn poly(&self) -> Poly {
        let mut f = self.coeffs.clone();
        f.add_term(0, self.v0 as u32, Rat::one());
        f.add_term(self.v1 as u32, 0, -Rat::one());
        f
    }

    /// `(v0 - 1)(v1 - 1) + v1 + 1`, the default lifting precision.
    pub fn default_precision(&self) -> usize {
        ((self.v0 - 1) * (self.v1 - 1) + self.v1 + 1) as usize
    }
}

fn in_theta(v0: u64, v1: u64, i: u64, j: u64) -> bool {
    i >= 1 && i + 1 < v1 && j >= 1 && j + 1 < v0 && i * v0 + j * v1 > v0 * v1
}

fn rat_pow(base: &Rat, e: u64) -> Rat {
    (0..e).fold(Rat::one(), |acc, _| acc * base.clone())
}

/// Newton lifting of `eq(T^v0, y) = 0` from `y = T^v1`.
///
/// Each step `y <- y - f(T^v0, y) / f_X2(T^v0, y)` with the division done
/// exactly: `f_X2(T^v0, y)` has order `(v0 - 1) v1`, so numerator and
/// denominator are shifted down by that much and the unit part inverted.
/// A step from residual order `r` is only accurate to about `2r`, so each
/// step runs at that precision (capped at the final one).
/// Returns `x2` correct modulo `T^(target + 1)`.
pub fn puiseux(eq: &BranchEquation, target: usize) -> Result<Parameterization> {
    let f = eq.poly();
    let fy = f.diff_x2();
    let v0 = eq.v0() as usize;
    let v1 = eq.v1() as usize;
    let shift = (v0 - 1) * v1;
    let work = target + shift;
    let mut y = Series::monomial(Rat::one(), v1, work);
    let mut prec = work.min(2 * (shift + v1));
    let mut last = 0usize;
    loop {
        let x1 = Series::monomial(Rat::one(), v0, prec);
        let yp = y.with_precision(prec);
        let residual = f.eval(&x1, &yp)?;
        let ord = match residual.order() {
            Order::OverPrecision if prec == work => break,
            Order::OverPrecision => {
                prec = work.min(2 * prec);
                continue;
            }
            Order::Finite(k) => k,
        };
        if ord <= last {
            return Err(Error::NoConvergence { order: ord });
        }
        last = ord;
        let denom = fy.eval(&x1, &yp)?.shift_down(shift)?.inverse()?;
        let step = &residual.shift_down(shift)? * &denom;
        y = &y - &step.with_precision(work);
        prec = work.min(prec.max(2 * ord));
    }
    let x2 = y.with_precision(target.max(v1));
    let p = Parameterization::build(eq.v0(), x2)?;
    debug_assert!(f.eval(p.x1(), p.x2())?.is_zero());
    Ok(p)
}

/// `f1 = f - X1 f_X1 / v1 - X2 f_X2 / v0`, which for the short form is
/// `-sum (w(i, j) - 1) a_ij X1^i X2^j` with weighted degree
/// `w(i, j) = i / v1 + j / v0`.
pub fn f1_of(eq: &BranchEquation) -> Poly {
    let (v0, v1) = (eq.v0() as i64, eq.v1() as i64);
    Poly::from_terms(eq.coeffs().terms().map(|((i, j), a)| {
        let weight = Rat::new((i as i64 * v0 + j as i64 * v1).into(), (v0 * v1).into());
        ((i, j), -(weight - Rat::one()) * a.clone())
    }))
}

/// Weighted degree of the lowest term of the `Theta` part, minus
/// `mu - 1`. This is the `lambda_1` a short-form equation predicts;
/// `None` for the quasihomogeneous equation.
pub fn predicted_lambda1(eq: &BranchEquation) -> Option<u64> {
    let mu = (eq.v0() - 1) * (eq.v1() - 1);
    eq.coeffs()
        .terms()
        .map(|((i, j), _)| i as u64 * eq.v0() + j as u64 * eq.v1())
        .min()
        .map(|w| w - (mu - 1))
}
