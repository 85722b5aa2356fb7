//! Coefficient fields.
//!
//! Everything in this crate needs exact zero tests (leading-term cancellation
//! decides every invariant), so only exact fields implement [`Field`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, NumAssign, Signed};

/// An exact field usable as a series or polynomial coefficient.
pub trait Field:
    Clone + Debug + Display + PartialEq + Num + NumAssign + Signed + FromPrimitive + Send + Sync
{
    /// Embed a machine integer.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer embedding")
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone + Debug + Display + Integer + Signed + FromPrimitive + NumAssign + Send + Sync,
    Ratio<T>: FromPrimitive,
{
}

/// Fields with an integer ring whose elements can be cleared of denominators.
///
/// Used by the fraction-free echelon, which works over the integers.
pub trait FractionField: Field {
    fn numer_big(&self) -> BigInt;
    fn denom_big(&self) -> BigInt;
}

impl FractionField for Ratio<BigInt> {
    fn numer_big(&self) -> BigInt {
        self.numer().clone()
    }
    fn denom_big(&self) -> BigInt {
        self.denom().clone()
    }
}

impl FractionField for Ratio<i64> {
    fn numer_big(&self) -> BigInt {
        BigInt::from(*self.numer())
    }
    fn denom_big(&self) -> BigInt {
        BigInt::from(*self.denom())
    }
}
