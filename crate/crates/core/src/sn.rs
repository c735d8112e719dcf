//! The copy of `S_n` inside `B_n` generated by `s_1, …, s_{n-1}`.
//!
//! On the `S_n` side the canonical form uses `t_m = s_1 · s_2 ⋯ s_{m-1}`
//! (window `[m, 1, 2, …, m-1]`, order `m`) with exponents `0 <= i_k < k`.
//! Elements of the subgroup can equally be written in the `tau` form of
//! [`crate::ogs`]; this module converts between the two and implements the
//! elementary factorization.

use std::fmt;

use crate::ogs::{from_ogs, to_ogs, OgsExponents, TauPower};
use crate::perm::SignedPermutation;
use crate::{Error, Result};

/// Exponents `(i_2, …, i_n)` of `t_2^{i_2} ⋯ t_n^{i_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SnOgsExponents {
    n: usize,
    exps: Vec<i32>,
}

impl SnOgsExponents {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            exps: vec![0; n.saturating_sub(1)],
        }
    }

    /// Builds the form from `(i_2, …, i_n)`, checking `0 <= i_k < k`.
    pub fn new(n: usize, exps: Vec<i32>) -> Result<Self> {
        if n == 0 || exps.len() != n - 1 {
            return Err(Error::Precondition(format!(
                "rank {n} needs {} exponents, got {}",
                n.saturating_sub(1),
                exps.len()
            )));
        }
        for (idx, &e) in exps.iter().enumerate() {
            let k = idx + 2;
            if e < 0 || e >= k as i32 {
                return Err(Error::SnExponentOutOfRange { k, e });
            }
        }
        Ok(Self { n, exps })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Exponent of `t_k` for `2 <= k <= n`.
    pub fn get(&self, k: usize) -> i32 {
        self.exps[k - 2]
    }

    fn set(&mut self, k: usize, e: i64) {
        self.exps[k - 2] = e.rem_euclid(k as i64) as i32;
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Nonzero `(k, i_k)` pairs in increasing `k`.
    pub fn factors(&self) -> impl Iterator<Item = (usize, i32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i + 2, e))
    }

    pub fn to_permutation(&self) -> SignedPermutation {
        let window = (1..=self.n as i32)
            .map(|j| self.factors().fold(j, |x, (k, e)| t_apply(k, e, x)))
            .collect();
        SignedPermutation::from_window_unchecked(window)
    }

    /// The `t` form of an element with all-positive window.
    pub fn from_permutation(w: &SignedPermutation) -> Result<Self> {
        if !w.is_unsigned() {
            return Err(Error::NotInSdot);
        }
        let n = w.rank();
        let mut rho = w.window().to_vec();
        let mut out = Self::identity(n);
        for k in (2..=n).rev() {
            let i = k as i32 - rho[k - 1];
            out.exps[k - 2] = i;
            let inv = (-i).rem_euclid(k as i32);
            for v in &mut rho {
                *v = t_apply(k, inv, *v);
            }
            debug_assert_eq!(rho[k - 1], k as i32);
        }
        Ok(out)
    }
}

impl fmt::Display for SnOgsExponents {
    /// `t<k>^<e>` factors joined by `*`; the identity prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, e) in self.factors() {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "t{k}^{e}")?;
            first = false;
        }
        if first {
            write!(f, "e")?;
        }
        Ok(())
    }
}

/// Image of the signed point `j` under `t_m^e` (`t_m`: `1 ↦ m`, `j ↦ j - 1`).
pub fn t_apply(m: usize, e: i32, j: i32) -> i32 {
    if j < 0 {
        return -t_apply(m, e, -j);
    }
    let m = m as i32;
    if j > m || m <= 1 {
        return j;
    }
    (j - 1 - e).rem_euclid(m) + 1
}

/// The subcases of the `S_n` exchange table for `t_q^{i_q} · t_p^{i_p}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum SnExchangeCase {
    /// `q - i_q >= p`.
    A,
    /// `i_p <= q - i_q <= p`.
    B,
    /// `q - i_q <= i_p`.
    C,
}

impl SnExchangeCase {
    pub fn select(q: usize, i_q: i32, p: usize, i_p: i32) -> Self {
        let d = q as i32 - i_q;
        if d >= p as i32 {
            Self::A
        } else if i_p <= d {
            Self::B
        } else {
            Self::C
        }
    }

    /// Table product as `(index, exponent)` pairs; indices `<= 1` are trivial.
    pub fn formula(self, q: usize, i_q: i32, p: usize, i_p: i32) -> Vec<(i32, i32)> {
        let (q, p, iq, ip) = (q as i32, p as i32, i_q, i_p);
        match self {
            Self::A => vec![(iq + ip, iq), (p + iq, ip), (q, iq)],
            Self::B => vec![(iq, p + iq - q), (iq + ip, q - p), (q, iq + ip)],
            Self::C => vec![(p + iq - q, iq + ip - q), (iq, p - ip), (q, iq + ip - p)],
        }
    }
}

/// Result of rewriting `t_q^{i_q} · t_p^{i_p}` into canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnExchangeLaw {
    /// Canonical form from composing the two permutations.
    pub canonical: SnOgsExponents,
    pub case: SnExchangeCase,
    /// The table row's product after reduction mod `k`, if it assembles.
    pub formula: Option<SnOgsExponents>,
}

impl SnExchangeLaw {
    pub fn formula_agrees(&self) -> bool {
        self.formula.as_ref() == Some(&self.canonical)
    }
}

/// Rewrites `t_q^{i_q} · t_p^{i_p}` (with `2 <= p < q`) in rank `q`.
pub fn exchange_t(q: usize, i_q: i32, p: usize, i_p: i32) -> Result<SnExchangeLaw> {
    exchange_t_in(q, q, i_q, p, i_p)
}

/// [`exchange_t`] in an explicit rank `n >= q`.
pub fn exchange_t_in(n: usize, q: usize, i_q: i32, p: usize, i_p: i32) -> Result<SnExchangeLaw> {
    if !(2 <= p && p < q && q <= n) {
        return Err(Error::Precondition(format!(
            "exchange needs 2 <= p < q <= n, got p = {p}, q = {q}, n = {n}"
        )));
    }
    if !(1 <= i_p && i_p < p as i32) {
        return Err(Error::SnExponentOutOfRange { k: p, e: i_p });
    }
    if !(1 <= i_q && i_q < q as i32) {
        return Err(Error::SnExponentOutOfRange { k: q, e: i_q });
    }
    let window = (1..=n as i32)
        .map(|j| t_apply(p, i_p, t_apply(q, i_q, j)))
        .collect();
    let canonical =
        SnOgsExponents::from_permutation(&SignedPermutation::from_window_unchecked(window))?;
    let case = SnExchangeCase::select(q, i_q, p, i_p);
    let mut formula = Some(SnOgsExponents::identity(n));
    let mut last = 0;
    for (k, e) in case.formula(q, i_q, p, i_p) {
        if k <= 1 {
            continue;
        }
        if k < last || k as usize > n {
            formula = None;
            break;
        }
        last = k;
        if let Some(f) = formula.as_mut() {
            let k = k as usize;
            f.set(k, f.get(k) as i64 + e as i64);
        }
    }
    Ok(SnExchangeLaw {
        canonical,
        case,
        formula,
    })
}

/// Membership of the `tau` form in the subgroup generated by `s_1..s_{n-1}`.
///
/// With nonzero positions `k_1 < … < k_m`: the exponents sum to zero and
/// every suffix sum from position `r >= 2` lies in `[0, k_{r-1}]`.
pub fn is_in_sdot(e: &OgsExponents) -> bool {
    let f: Vec<TauPower> = e.factors().collect();
    let mut suffix = 0i64;
    for r in (1..f.len()).rev() {
        suffix += f[r].e as i64;
        if suffix < 0 || suffix > f[r - 1].k as i64 {
            return false;
        }
    }
    f.iter().map(|t| t.e as i64).sum::<i64>() == 0
}

/// Converts a `tau` form of the subgroup into `t` form: `i' = i` for
/// `i >= 0`, else `k + i`.
pub fn tau_to_t(e: &OgsExponents) -> Result<SnOgsExponents> {
    if !is_in_sdot(e) {
        return Err(Error::NotInSdot);
    }
    let n = e.rank();
    let mut out = SnOgsExponents::identity(n);
    for t in e.factors() {
        // t_1 is trivial
        if t.k == 1 {
            continue;
        }
        out.set(t.k, t.e as i64);
    }
    debug_assert_eq!(out.to_permutation(), from_ogs(e));
    Ok(out)
}

/// The `tau` form of a `t` form, through its window.
pub fn t_to_tau(e: &SnOgsExponents) -> OgsExponents {
    to_ogs(&e.to_permutation())
}

/// Nonzero exponents are: first negative, the rest positive, total zero.
/// The identity counts as elementary.
pub fn is_elementary(e: &OgsExponents) -> bool {
    let mut it = e.factors();
    let Some(first) = it.next() else {
        return true;
    };
    if first.e >= 0 {
        return false;
    }
    let mut sum = first.e as i64;
    for t in it {
        if t.e <= 0 {
            return false;
        }
        sum += t.e as i64;
    }
    sum == 0
}

/// Decomposition of a subgroup element into elementary factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryFactorization {
    pub factors: Vec<OgsExponents>,
    /// Shared index between consecutive factors: factor `α` ends with a
    /// positive power of `tau_b` and factor `α + 1` starts with a negative one.
    pub boundaries: Vec<usize>,
    /// Number of negative exponents in the source form.
    pub z: usize,
}

impl ElementaryFactorization {
    pub fn product(&self) -> SignedPermutation {
        let mut it = self.factors.iter().map(from_ogs);
        let first = it.next().expect("at least one factor");
        it.fold(first, |acc, f| &acc * &f)
    }
}

/// Splits a subgroup element at its negative exponents.
///
/// Negative exponents sit at positions `r_1 < … < r_z`. Factor `α` keeps the
/// positive exponents strictly between `r_α` and `r_{α+1}`, ends with
/// `tau_{k_{r_{α+1}}}^{i'}` where `i'` is the suffix sum from `r_{α+1}`, and
/// starts with the negative power that makes its exponents sum to zero.
pub fn elementary_factorize(e: &OgsExponents) -> Result<ElementaryFactorization> {
    if !is_in_sdot(e) {
        return Err(Error::NotInSdot);
    }
    let n = e.rank();
    let f: Vec<TauPower> = e.factors().collect();
    let negs: Vec<usize> = (0..f.len()).filter(|&x| f[x].e < 0).collect();
    if negs.is_empty() {
        return Ok(ElementaryFactorization {
            factors: vec![OgsExponents::identity(n)],
            boundaries: Vec::new(),
            z: 0,
        });
    }
    let suffix = |from: usize| f[from..].iter().map(|t| t.e as i64).sum::<i64>();
    let mut factors = Vec::with_capacity(negs.len());
    let mut boundaries = Vec::new();
    for (alpha, &start) in negs.iter().enumerate() {
        let end = negs.get(alpha + 1).copied().unwrap_or(f.len());
        let mut out = OgsExponents::identity(n);
        let mut total = 0i64;
        for t in &f[start + 1..end] {
            out.set(t.k, t.e as i64);
            total += t.e as i64;
        }
        if end < f.len() {
            let tail = suffix(end);
            out.set(f[end].k, tail);
            total += tail;
            boundaries.push(f[end].k);
        }
        out.set(f[start].k, -total);
        factors.push(out);
    }
    Ok(ElementaryFactorization {
        factors,
        boundaries,
        z: negs.len(),
    })
}
