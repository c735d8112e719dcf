//! Independent reference implementations shared by the integration tests.
//!
//! Everything here works on raw windows (`Vec<i32>`) and never calls the
//! library's formulas.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

pub type Window = Vec<i32>;

pub fn apply(w: &[i32], j: i32) -> i32 {
    let v = w[j.unsigned_abs() as usize - 1];
    if j > 0 {
        v
    } else {
        -v
    }
}

/// Left-to-right product: `j ↦ b(a(j))`.
pub fn compose(a: &[i32], b: &[i32]) -> Window {
    a.iter().map(|&v| apply(b, v)).collect()
}

pub fn identity(n: usize) -> Window {
    (1..=n as i32).collect()
}

/// `s_i` as a window.
pub fn generator(n: usize, i: usize) -> Window {
    let mut w = identity(n);
    if i == 0 {
        w[0] = -1;
    } else {
        w.swap(i - 1, i);
    }
    w
}

pub fn word(n: usize, letters: &[usize]) -> Window {
    letters
        .iter()
        .fold(identity(n), |acc, &l| compose(&acc, &generator(n, l)))
}

pub fn inverse(w: &[i32]) -> Window {
    let mut out = vec![0; w.len()];
    for (j, &v) in w.iter().enumerate() {
        let j = j as i32 + 1;
        out[v.unsigned_abs() as usize - 1] = if v > 0 { j } else { -j };
    }
    out
}

pub fn power(w: &[i32], e: i64) -> Window {
    let base = if e < 0 { inverse(w) } else { w.to_vec() };
    (0..e.unsigned_abs()).fold(identity(w.len()), |acc, _| compose(&acc, &base))
}

/// `tau_k = s_0 s_1 ⋯ s_{k-1}` built from its word.
pub fn tau(n: usize, k: usize) -> Window {
    word(n, &(0..k).collect::<Vec<_>>())
}

/// `t_m = s_1 ⋯ s_{m-1}` built from its word.
pub fn t(n: usize, m: usize) -> Window {
    word(n, &(1..m).collect::<Vec<_>>())
}

/// `tau_1^{e_1} ⋯ tau_n^{e_n}` by repeated multiplication.
pub fn tau_product(exps: &[i32]) -> Window {
    let n = exps.len();
    exps.iter().enumerate().fold(identity(n), |acc, (i, &e)| {
        compose(&acc, &power(&tau(n, i + 1), e as i64))
    })
}

/// Product of `tau_k^e` factors given as `(k, e)` in rank `n`.
pub fn tau_factors(n: usize, factors: &[(usize, i32)]) -> Window {
    factors.iter().fold(identity(n), |acc, &(k, e)| {
        compose(&acc, &power(&tau(n, k), e as i64))
    })
}

/// Exponent vectors `(e_1, …, e_n)` with `-k <= e_k < k`.
pub fn all_exponents(n: usize) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for k in 1..=n as i32 {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-k..k).map(move |e| {
                    let mut v = v.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

/// Unsigned permutations of `1..=n`, by insertion.
pub fn all_unsigned(n: usize) -> Vec<Window> {
    let mut out = vec![vec![]];
    for m in 1..=n as i32 {
        out = out
            .into_iter()
            .flat_map(|v: Window| {
                (0..=v.len()).map(move |pos| {
                    let mut v = v.clone();
                    v.insert(pos, m);
                    v
                })
            })
            .collect();
    }
    out
}

/// Lengths of all elements of `B_n` by breadth-first search.
pub fn bfs(n: usize) -> HashMap<Window, u32> {
    let mut dist = HashMap::new();
    dist.insert(identity(n), 0);
    let mut queue = VecDeque::from([identity(n)]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for i in 0..n {
            let x = compose(&generator(n, i), &w);
            if !dist.contains_key(&x) {
                dist.insert(x.clone(), d + 1);
                queue.push_back(x);
            }
        }
    }
    dist
}

/// Inversions of an unsigned permutation (its length in `S_n`).
pub fn inversions(w: &[i32]) -> u32 {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

/// `{0 <= i < n : w(i) > w(i+1)}` with `w(0) = 0`.
pub fn descent_set(w: &[i32]) -> Vec<usize> {
    let mut ext = vec![0];
    ext.extend_from_slice(w);
    (0..w.len()).filter(|&i| ext[i] > ext[i + 1]).collect()
}
