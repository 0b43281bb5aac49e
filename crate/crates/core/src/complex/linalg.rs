//! Exact rank computations for integer boundary matrices.
//!
//! Matrices are given column-wise as sparse `(row, value)` lists. Two
//! independent rank routes exist over the rationals: fraction-free column
//! reduction ([`rank_rational`]) and the integer Smith normal form
//! ([`smith_invariants`]). [`rank_mod_p`] covers prime fields.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type SparseColumn = Vec<(usize, i64)>;

/// Rank over `Q` by fraction-free elimination with content removal.
pub(crate) fn rank_rational(columns: &[SparseColumn]) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    let mut rank = 0;
    for col in columns {
        let mut cur: Vec<(usize, BigInt)> = col
            .iter()
            .filter(|(_, v)| *v != 0)
            .map(|&(r, v)| (r, BigInt::from(v)))
            .collect();
        cur.sort_by_key(|e| e.0);
        while let Some((low, _)) = cur.last() {
            let Some(p) = pivots.get(low) else { break };
            let a = p.last().expect("pivot column is nonzero").1.clone();
            let b = cur.last().expect("cur is nonzero").1.clone();
            cur = combine(&cur, &a, p, &b);
            remove_content(&mut cur);
        }
        if let Some((low, _)) = cur.last() {
            pivots.insert(*low, cur);
            rank += 1;
        }
    }
    rank
}

/// `a * x - b * y` on sorted sparse vectors, dropping zeros.
fn combine(
    x: &[(usize, BigInt)],
    a: &BigInt,
    y: &[(usize, BigInt)],
    b: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn remove_content(v: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g > BigInt::one() {
        for (_, x) in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Rank over `F_p` by column reduction.
pub(crate) fn rank_mod_p(columns: &[SparseColumn], p: u64) -> usize {
    let reduce = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    let mut rank = 0;
    for col in columns {
        let mut cur: Vec<(usize, u64)> = col
            .iter()
            .map(|&(r, v)| (r, reduce(v)))
            .filter(|&(_, v)| v != 0)
            .collect();
        cur.sort_by_key(|e| e.0);
        while let Some(&(low, b)) = cur.last() {
            let Some(piv) = pivots.get(&low) else { break };
            let a = piv.last().expect("pivot column is nonzero").1;
            // cur <- cur - (b / a) * piv
            let factor = mul_mod(b, inv_mod(a, p), p);
            cur = axpy_mod(&cur, piv, factor, p);
        }
        if let Some(&(low, _)) = cur.last() {
            pivots.insert(low, cur);
            rank += 1;
        }
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    result
}

/// `x - f * y` over `F_p`.
fn axpy_mod(x: &[(usize, u64)], y: &[(usize, u64)], f: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            let v = (p - mul_mod(f, y[j].1, p)) % p;
            if v != 0 {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = (x[i].1 + p - mul_mod(f, y[j].1, p)) % p;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of the Smith normal form of
/// an integer matrix with `rows` rows. Their count is the rank over `Q`.
pub(crate) fn smith_invariants(rows: usize, columns: &[SparseColumn]) -> Vec<BigInt> {
    let ncols = columns.len();
    if rows == 0 || ncols == 0 {
        return Vec::new();
    }
    let mut a = vec![vec![BigInt::zero(); ncols]; rows];
    for (j, col) in columns.iter().enumerate() {
        for &(i, v) in col {
            a[i][j] += v;
        }
    }
    let mut factors = Vec::new();
    for t in 0..rows.min(ncols) {
        loop {
            let Some((pi, pj)) = min_abs_entry(&a, t) else {
                return factors;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let pivot_row = a[t].clone();
                for j in t..ncols {
                    let delta = &q * &pivot_row[j];
                    a[i][j] -= delta;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let delta = &q * &row[t];
                    row[j] -= delta;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = a[t][t].clone();
            let offender =
                (t + 1..rows).find(|&i| a[i][t + 1..].iter().any(|x| !(x % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    let row = a[i][t..ncols].to_vec();
                    for (dst, x) in a[t][t..ncols].iter_mut().zip(row) {
                        *dst += x;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
    }
    factors
}

fn min_abs_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if x.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}
