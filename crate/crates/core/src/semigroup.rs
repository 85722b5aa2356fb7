//! Value semigroups of plane branches.
//!
//! A plane-branch semigroup `<v0, ..., vg>` carries the gcd chain
//! `e_i = gcd(e_{i-1}, v_i)`, the ratios `n_i = e_{i-1} / e_i`, and the
//! conductor `c = sum_{i=1..g} (n_i - 1) v_i - v0 + 1`, which is also the
//! Milnor number. Membership is decided by the unique representation
//! `z = s_0 v_0 + ... + s_g v_g` with `0 <= s_i < n_i` for `i >= 1`:
//! `z` is in the semigroup iff `s_0 >= 0`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumSemigroup {
    gens: Vec<u64>,
    /// `e[0] = v0`, `e[i] = gcd(e[i-1], v_i)`.
    e: Vec<u64>,
    /// `n[i-1] = e[i-1] / e[i]` for `1 <= i <= g`.
    n: Vec<u64>,
    conductor: u64,
}

impl NumSemigroup {
    /// Validates a minimal generating set of a plane-branch semigroup.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        let Some(&v0) = gens.first() else {
            return Err(Error::InvalidGenerators("empty generator list".into()));
        };
        if v0 < 2 {
            return Err(Error::InvalidGenerators(format!("v0 = {v0} must be at least 2")));
        }
        if let Some(w) = gens.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGenerators(format!(
                "generators must be strictly increasing ({} >= {})",
                w[0], w[1]
            )));
        }
        let gcd = gens.iter().fold(0u64, |acc, &v| acc.gcd(&v));
        if gcd != 1 {
            return Err(Error::NotPrimitive { gcd });
        }
        for i in 1..gens.len() {
            if generated_by(&gens[..i], gens[i]) {
                return Err(Error::NotMinimal { generator: gens[i] });
            }
        }

        let mut e = vec![v0];
        let mut n = Vec::with_capacity(gens.len() - 1);
        for (i, &v) in gens.iter().enumerate().skip(1) {
            let prev = e[i - 1];
            let next = prev.gcd(&v);
            if next == prev {
                return Err(Error::NotPlaneBranch(format!(
                    "n_{i} = 1: gcd chain does not drop at v_{i} = {v}"
                )));
            }
            e.push(next);
            n.push(prev / next);
        }
        for i in 1..gens.len() {
            let ni = n[i - 1];
            let vi = gens[i];
            if i + 1 < gens.len() && ni * vi >= gens[i + 1] {
                return Err(Error::NotPlaneBranch(format!(
                    "n_{i} * v_{i} = {} is not below v_{} = {}",
                    ni * vi,
                    i + 1,
                    gens[i + 1]
                )));
            }
            if !generated_by(&gens[..i], ni * vi) {
                return Err(Error::NotPlaneBranch(format!(
                    "n_{i} * v_{i} = {} is not generated by the smaller generators",
                    ni * vi
                )));
            }
        }

        let sum: u64 = gens.iter().skip(1).zip(&n).map(|(&v, &ni)| (ni - 1) * v).sum();
        let conductor = sum + 1 - v0;
        Ok(Self { gens: gens.to_vec(), e, n, conductor })
    }

    /// Builds the semigroup from characteristic exponents via
    /// `v_{i+1} = n_i v_i + beta_{i+1} - beta_i`.
    pub fn from_char_exponents(beta: &[u64]) -> Result<Self> {
        if beta.len() < 2 {
            return Err(Error::InvalidGenerators(
                "need at least two characteristic exponents".into(),
            ));
        }
        if beta[0] < 2 {
            return Err(Error::InvalidGenerators(format!("beta_0 = {} must be at least 2", beta[0])));
        }
        if let Some(w) = beta.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGenerators(format!(
                "characteristic exponents must be strictly increasing ({} >= {})",
                w[0], w[1]
            )));
        }
        let mut e = vec![beta[0]];
        for (i, &b) in beta.iter().enumerate().skip(1) {
            let next = e[i - 1].gcd(&b);
            if next == e[i - 1] {
                return Err(Error::NotPlaneBranch(format!(
                    "gcd chain does not drop at beta_{i} = {b}"
                )));
            }
            e.push(next);
        }
        if *e.last().unwrap() != 1 {
            return Err(Error::NotPrimitive { gcd: *e.last().unwrap() });
        }
        let mut gens = vec![beta[0], beta[1]];
        for i in 1..beta.len() - 1 {
            let ni = e[i - 1] / e[i];
            gens.push(ni * gens[i] + beta[i + 1] - beta[i]);
        }
        Self::from_generators(&gens)
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    /// Number of generators minus one.
    pub fn genus(&self) -> usize {
        self.gens.len() - 1
    }

    pub fn v(&self, i: usize) -> u64 {
        self.gens[i]
    }

    pub fn e(&self) -> &[u64] {
        &self.e
    }

    /// `n_1, ..., n_g`.
    pub fn n(&self) -> &[u64] {
        &self.n
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Equal to the conductor for plane branches.
    pub fn milnor(&self) -> u64 {
        self.conductor
    }

    /// Inverse of [`Self::from_char_exponents`].
    pub fn char_exponents(&self) -> Vec<u64> {
        let mut beta = vec![self.gens[0], self.gens[1]];
        for i in 1..self.genus() {
            beta.push(self.gens[i + 1] + beta[i] - self.n[i - 1] * self.gens[i]);
        }
        beta
    }

    /// Unique `(s_0, s_1, ..., s_g)` with `z = sum s_i v_i`, `0 <= s_i < n_i`.
    pub fn represent(&self, z: i64) -> Vec<i64> {
        let g = self.genus();
        let mut s = vec![0i64; g + 1];
        let mut rest = z;
        for i in (1..=g).rev() {
            // rest is a multiple of e_i here; solve modulo n_i = e_{i-1}/e_i.
            let ei = self.e[i] as i64;
            let ni = self.n[i - 1] as i64;
            let vi = self.gens[i] as i64;
            let target = (rest / ei).rem_euclid(ni);
            let step = (vi / ei).rem_euclid(ni);
            let si = (0..ni)
                .find(|&k| (k * step).rem_euclid(ni) == target)
                .expect("v_i / e_i is a unit modulo n_i");
            s[i] = si;
            rest -= si * vi;
        }
        debug_assert_eq!(rest.rem_euclid(self.gens[0] as i64), 0);
        s[0] = rest / self.gens[0] as i64;
        s
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= 0 && self.represent(z)[0] >= 0
    }

    /// Positive integers outside the semigroup, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        (1..self.conductor).filter(|&z| !self.contains(z as i64)).collect()
    }
}

impl fmt::Display for NumSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(u64::to_string).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

/// Whether `target` is a nonnegative integer combination of `gens`.
fn generated_by(gens: &[u64], target: u64) -> bool {
    let t = target as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for z in 1..=t {
        reach[z] = gens.iter().any(|&v| (v as usize) <= z && reach[z - v as usize]);
    }
    reach[t]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_seven() {
        let s = NumSemigroup::from_generators(&[6, 7]).unwrap();
        assert_eq!(s.conductor(), 30);
        assert_eq!(s.milnor(), 30);
        assert_eq!(s.gaps(), vec![1, 2, 3, 4, 5, 8, 9, 10, 11, 15, 16, 17, 22, 23, 29]);
    }

    #[test]
    fn six_nine_nineteen() {
        let s = NumSemigroup::from_generators(&[6, 9, 19]).unwrap();
        assert_eq!(s.e(), &[6, 3, 1]);
        assert_eq!(s.n(), &[2, 3]);
        assert_eq!(s.milnor(), 42);
    }

    #[test]
    fn rejects_bad_generators() {
        assert_eq!(
            NumSemigroup::from_generators(&[4, 6]).unwrap_err(),
            Error::NotPrimitive { gcd: 2 }
        );
        // the gcd chain is already 1 after v1
        assert!(matches!(
            NumSemigroup::from_generators(&[3, 5, 7]),
            Err(Error::NotPlaneBranch(_))
        ));
        assert!(matches!(
            NumSemigroup::from_generators(&[3, 6, 7]),
            Err(Error::NotMinimal { generator: 6 })
        ));
        // n_1 v_1 = 12 is not below v_2 = 11
        assert!(matches!(
            NumSemigroup::from_generators(&[4, 6, 11]),
            Err(Error::NotPlaneBranch(_))
        ));
        assert!(matches!(
            NumSemigroup::from_generators(&[6, 10, 14, 15]),
            Err(Error::NotPlaneBranch(_))
        ));
        assert!(matches!(
            NumSemigroup::from_generators(&[1, 2]),
            Err(Error::InvalidGenerators(_))
        ));
        assert!(matches!(
            NumSemigroup::from_generators(&[7, 5]),
            Err(Error::InvalidGenerators(_))
        ));
        assert!(NumSemigroup::from_generators(&[]).is_err());
    }

    #[test]
    fn representations() {
        let s = NumSemigroup::from_generators(&[6, 7]).unwrap();
        assert_eq!(s.represent(29), vec![-1, 5]);
        assert!(!s.contains(29));
        assert!(s.contains(12));
        assert_eq!(s.represent(0), vec![0, 0]);
        assert!(!s.contains(-6));

        let t = NumSemigroup::from_generators(&[6, 9, 19]).unwrap();
        assert_eq!(t.represent(43), vec![4, 0, 1]);
        assert!(t.contains(43));
        assert!(!t.contains(26));
        assert_eq!(t.represent(0), vec![0, 0, 0]);
    }

    #[test]
    fn characteristic_exponents() {
        let s = NumSemigroup::from_char_exponents(&[4, 6, 7]).unwrap();
        assert_eq!(s.generators(), &[4, 6, 13]);
        assert_eq!(s.char_exponents(), vec![4, 6, 7]);
        let t = NumSemigroup::from_char_exponents(&[6, 9, 10]).unwrap();
        assert_eq!(t.generators(), &[6, 9, 19]);
        assert_eq!(t.char_exponents(), vec![6, 9, 10]);
        let u = NumSemigroup::from_char_exponents(&[5, 7]).unwrap();
        assert_eq!(u.generators(), &[5, 7]);
        assert_eq!(u.char_exponents(), vec![5, 7]);
        assert!(matches!(
            NumSemigroup::from_char_exponents(&[4, 6]),
            Err(Error::NotPrimitive { gcd: 2 })
        ));
        assert!(matches!(
            NumSemigroup::from_char_exponents(&[4, 8, 9]),
            Err(Error::NotPlaneBranch(_))
        ));
    }
}
