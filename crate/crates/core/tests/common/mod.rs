//! Independent computations over the rationals.
//!
//! Forms have integer coefficients; derivatives are taken over the integers
//! and ranks come from fraction-free (Bareiss) elimination. Instances built
//! over a prime field are rebuilt over Q from the same random data, so that
//! their structure (powers of linear forms, spans of derivatives) survives.

#![allow(dead_code)]

use std::collections::BTreeMap;

use apolarity_lab::{Form, LinearForm, PowerSumSpec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type IntForm = BTreeMap<Vec<u32>, BigInt>;

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `a (a-1) ... (a-b+1)`.
fn falling(a: u32, b: u32) -> BigInt {
    (a - b + 1..=a).fold(BigInt::one(), |acc, k| acc * k)
}

/// All exponent vectors of length `r` summing to `d`, largest first entry first.
pub fn exponents(r: usize, d: u32) -> Vec<Vec<u32>> {
    if r == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for mut rest in exponents(r - 1, d - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

/// Rank over Q of an integer matrix.
pub fn rank_over_q(mut a: Vec<Vec<BigInt>>) -> usize {
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in rank + 1..a.len() {
            for j in col + 1..cols {
                let v = (&a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Reduced row echelon form over Q of the nonzero row space, with pivot columns.
pub fn rref_over_q(rows: Vec<Vec<BigInt>>) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<BigRational>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].recip();
        for x in a[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..a.len() {
            if i != rank && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in col..cols {
                    let delta = &f * &a[rank][j];
                    a[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    a.truncate(rank);
    (a, pivots)
}

/// `q mod p` for a rational whose denominator is a unit mod `p`.
pub fn reduce_mod(q: &BigRational, p: u64) -> u64 {
    let p_big = BigInt::from(p);
    let n = q.numer().mod_floor(&p_big);
    let d = q.denom().mod_floor(&p_big);
    let d_inv = d.modpow(&(&p_big - 2u32), &p_big);
    (n * d_inv).mod_floor(&p_big).to_u64().expect("reduced below p")
}

/// All `d^b g / dy^b` with `|b| = e - i`, as rows indexed by [`exponents`]`(r, i)`.
pub fn derivative_rows(gens: &[IntForm], r: usize, e: u32, i: u32) -> Vec<Vec<BigInt>> {
    let targets = exponents(r, i);
    let position: BTreeMap<&Vec<u32>, usize> = targets.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut rows = Vec::new();
    for g in gens {
        for b in exponents(r, e - i) {
            let mut row = vec![BigInt::zero(); targets.len()];
            for (a, c) in g {
                if a.iter().zip(&b).all(|(x, y)| x >= y) {
                    let rest: Vec<u32> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
                    let scale: BigInt = a.iter().zip(&b).map(|(&x, &y)| falling(x, y)).product();
                    row[position[&rest]] += c * scale;
                }
            }
            rows.push(row);
        }
    }
    rows
}

/// h-vector over Q of the algebra generated by integer forms of degree `e`.
pub fn oracle_hvector(r: usize, e: u32, gens: &[IntForm]) -> Vec<usize> {
    (0..=e).map(|i| rank_over_q(derivative_rows(gens, r, e, i))).collect()
}

/// Integer lift of a form over a prime field, coefficients in `[0, p)`.
/// Only meaningful for forms without special structure.
pub fn lift(form: &Form) -> IntForm {
    form.terms()
        .map(|(m, c)| (m.exponents().to_vec(), BigInt::from(c.value())))
        .collect()
}

/// Generators of a power-sum spec with fixed linear forms, expanded over Z.
pub fn power_sums_over_z(spec: &PowerSumSpec) -> Vec<IntForm> {
    let (r, e) = (spec.num_vars, spec.degree);
    spec.generators
        .iter()
        .map(|summands| {
            let mut acc = IntForm::new();
            for l in summands {
                let LinearForm::Fixed(c) = l else {
                    panic!("power sum spec has unresolved linear forms")
                };
                for a in exponents(r, e) {
                    // (sum c_j y_j)^e has coefficient e!/a! prod c_j^a_j at y^a.
                    let mut coeff = factorial(e);
                    for (j, &aj) in a.iter().enumerate() {
                        coeff = coeff / factorial(aj) * BigInt::from(c[j]).pow(aj);
                    }
                    *acc.entry(a).or_insert_with(BigInt::zero) += coeff;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            acc
        })
        .collect()
}

/// Rebuilds quotient generators over Q: each prime-field generator is a
/// combination of the reduced basis of the degree-`d` derivatives, with its
/// coefficients sitting at the pivot columns. The same combination of the
/// reduced basis over Q is scaled to integer coefficients.
pub fn quotient_over_q(basis: &[Vec<BigRational>], pivots: &[usize], r: usize, d: u32, generators: &[Form]) -> Vec<IntForm> {
    let monomials = exponents(r, d);
    generators
        .iter()
        .map(|g| {
            let lift = self::lift(g);
            let mut combo = vec![BigRational::zero(); monomials.len()];
            for (row, &col) in basis.iter().zip(pivots) {
                let lambda = lift.get(&monomials[col]).cloned().unwrap_or_default();
                if lambda.is_zero() {
                    continue;
                }
                for (x, b) in combo.iter_mut().zip(row) {
                    *x += b * BigRational::from_integer(lambda.clone());
                }
            }
            let denom = combo.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            monomials
                .iter()
                .zip(&combo)
                .filter(|(_, x)| !x.is_zero())
                .map(|(m, x)| (m.clone(), (x * BigRational::from_integer(denom.clone())).to_integer()))
                .collect()
        })
        .collect()
}
