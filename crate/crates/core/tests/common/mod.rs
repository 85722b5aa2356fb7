//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use planebranch::{Field, Parameterization, Poly, Rat, Series};

fn q(n: i64) -> Rat {
    Rat::from_int(n)
}

/// Membership by dynamic programming over `[0, limit]`.
pub fn dp_members(gens: &[u64], limit: usize) -> Vec<bool> {
    let mut m = vec![false; limit + 1];
    m[0] = true;
    for z in 1..=limit {
        m[z] = gens.iter().any(|&g| g as usize <= z && m[z - g as usize]);
    }
    m
}

/// Rank over Q by plain Gaussian elimination on the first `cols` columns.
pub fn rank(rows: &[Vec<Rat>], cols: usize) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| r[..cols].to_vec()).collect();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][col] != q(0)) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][col] != q(0) {
                let f = m[i][col].clone() / m[r][col].clone();
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot).skip(col) {
                    *x -= f.clone() * y.clone();
                }
            }
        }
        r += 1;
    }
    r
}

/// Pullbacks of `x1^a x2^b dx_k` that can reach below the conductor.
pub fn monomial_forms(p: &Parameterization) -> Vec<Series> {
    let c = p.semigroup().conductor();
    let (v0, v1) = (p.v0(), p.v1());
    let mut out = Vec::new();
    for b in 0..=c / v1 {
        for a in 0..=c / v0 {
            let m = Poly::monomial(q(1), a as u32, b as u32);
            let base = a * v0 + b * v1;
            if base + v0 < c {
                out.push(p.pullback(&m, &Poly::zero()).unwrap());
            }
            if base + v1 < c {
                out.push(p.pullback(&Poly::zero(), &m).unwrap());
            }
        }
    }
    out
}

/// `Λ ∩ [1, c-1]` from ranks of column prefixes: `k` is a leading exponent
/// of the row space iff adding column `k` raises the prefix rank.
pub fn lambda_by_ranks(p: &Parameterization) -> BTreeSet<u64> {
    let c = p.semigroup().conductor() as usize;
    if c < 2 {
        return BTreeSet::new();
    }
    let rows: Vec<Vec<Rat>> = monomial_forms(p).iter().map(|s| s.coeffs()[..c - 1].to_vec()).collect();
    let mut prev = 0;
    let mut out = BTreeSet::new();
    for k in 0..c - 1 {
        let r = rank(&rows, k + 1);
        if r > prev {
            out.insert(k as u64 + 1);
        }
        prev = r;
    }
    out
}
