//! Sweeps over the family `X2^v0 + X1^v1 + sum a_k m_k`, where `m_k` runs
//! over the admissible monomials in increasing weighted degree.

use rayon::prelude::*;

use crate::branch::{puiseux, BranchEquation};
use crate::differentials::lambda_set;
use crate::error::{Error, Result};
use crate::{Poly, Rat};

use super::parse::parse_rational;
use super::report::StrataRow;

#[derive(Clone, Debug)]
pub struct Family {
    pub v0: u64,
    pub v1: u64,
    /// Admissible exponents `(i, j)`, sorted by `(i v0 + j v1, j)`.
    pub monomials: Vec<(u32, u32)>,
}

impl Family {
    pub fn new(v0: u64, v1: u64) -> Result<Self> {
        // validates the pair
        BranchEquation::new(v0, v1, Poly::zero())?;
        let mut monomials = Vec::new();
        for i in 1..v1.saturating_sub(1) {
            for j in 1..v0 - 1 {
                if i * v0 + j * v1 > v0 * v1 {
                    monomials.push((i as u32, j as u32));
                }
            }
        }
        monomials.sort_by_key(|&(i, j)| (i as u64 * v0 + j as u64 * v1, j));
        Ok(Self { v0, v1, monomials })
    }

    /// `"6-7"`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Parse { pos: 0, msg: format!("family must look like 6-7, got '{text}'") };
        let (a, b) = text.split_once('-').ok_or_else(bad)?;
        let v0 = a.trim().parse().map_err(|_| bad())?;
        let v1 = b.trim().parse().map_err(|_| bad())?;
        Self::new(v0, v1)
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// `X2^v0 + X1^v1 + sum a_k m_k`.
    pub fn poly(&self, a: &[Rat]) -> Poly {
        let mut f = Poly::monomial(Rat::from_integer(1.into()), 0, self.v0 as u32);
        f.add_term(self.v1 as u32, 0, Rat::from_integer(1.into()));
        for (&(i, j), c) in self.monomials.iter().zip(a) {
            f.add_term(i, j, c.clone());
        }
        f
    }
}

fn parse_list(text: &str, n: usize, what: &str) -> Result<Vec<Rat>> {
    let vals = text.split(',').map(|t| parse_rational(t.trim())).collect::<Result<Vec<_>>>()?;
    if vals.len() != n {
        return Err(Error::Parse { pos: 0, msg: format!("{what}: expected {n} values, got {}", vals.len()) });
    }
    Ok(vals)
}

/// Reads coefficient tuples from a CSV file (one tuple per line; blank lines,
/// `#` comments and an `a1,...` header are skipped) or, when `spec` is not a
/// file, from a grid `l1;l2;...;ln` whose Cartesian product is enumerated in
/// lexicographic order.
pub fn read_tuples(spec: &str, n: usize) -> Result<Vec<Vec<Rat>>> {
    let path = std::path::Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse { pos: 0, msg: format!("cannot read {spec}: {e}") })?;
        let mut out = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with('a') {
                continue;
            }
            out.push(parse_list(line, n, &format!("line {}", no + 1))?);
        }
        return Ok(out);
    }
    let lists: Vec<&str> = spec.split(';').collect();
    if lists.len() != n {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("grid needs {n} ';'-separated lists, got {}", lists.len()),
        });
    }
    let mut out: Vec<Vec<Rat>> = vec![vec![]];
    for (k, list) in lists.iter().enumerate() {
        let vals = list
            .split(',')
            .map(|t| parse_rational(t.trim()))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Parse { pos: 0, msg: format!("grid list {}: {e}", k + 1) })?;
        out = out
            .into_iter()
            .flat_map(|prefix| {
                vals.iter().map(move |v| {
                    let mut t = prefix.clone();
                    t.push(v.clone());
                    t
                })
            })
            .collect();
    }
    Ok(out)
}

pub fn analyze_point(family: &Family, a: &[Rat]) -> Result<StrataRow> {
    let eq = BranchEquation::from_poly(&family.poly(a))?;
    let p = puiseux(&eq, eq.default_precision())?;
    StrataRow::new(a, &lambda_set(&p)?)
}

/// Evaluates every tuple independently; rows come back in input order.
pub fn sweep(family: &Family, tuples: &[Vec<Rat>]) -> Result<Vec<StrataRow>> {
    tuples.par_iter().map(|a| analyze_point(family, a)).collect()
}
