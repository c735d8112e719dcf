//! The `tau_k` generators of `B_n` and the canonical form
//! `tau_1^{i_1} · tau_2^{i_2} ⋯ tau_n^{i_n}` with `-k <= i_k < k`.
//!
//! `tau_k = s_0 · s_1 ⋯ s_{k-1}` sends `1 ↦ -k` and `j ↦ j - 1` for
//! `2 <= j <= k`; it has order `2k`, so exponents are kept in `[-k, k)`.

use std::fmt;

use crate::perm::SignedPermutation;
use crate::{Error, Result};

/// Reduces `e` modulo `2k` into `[-k, k)`.
pub fn normalize_exponent(k: usize, e: i64) -> i32 {
    let k = k as i64;
    ((e + k).rem_euclid(2 * k) - k) as i32
}

/// A single factor `tau_k^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TauPower {
    pub k: usize,
    pub e: i32,
}

impl TauPower {
    pub fn new(k: usize, e: i32) -> Result<Self> {
        if k == 0 {
            return Err(Error::IndexOutOfRange { k, n: 0 });
        }
        if e < -(k as i32) || e >= k as i32 {
            return Err(Error::ExponentOutOfRange { k, e });
        }
        Ok(Self { k, e })
    }

    /// `tau_k^e` with `e` reduced modulo the order of `tau_k`.
    pub fn normalized(k: usize, e: i64) -> Self {
        Self {
            k,
            e: normalize_exponent(k, e),
        }
    }

    /// The `tau_k^k` block (equal to `tau_k^{-k}`), the longest element of
    /// the parabolic subgroup on `1..=k`.
    pub fn longest(k: usize) -> Self {
        Self { k, e: -(k as i32) }
    }

    pub fn to_permutation(self, n: usize) -> SignedPermutation {
        let window = (1..=n as i32)
            .map(|j| tau_apply_unchecked(self.k, self.e, j))
            .collect();
        SignedPermutation::from_window_unchecked(window)
    }
}

impl fmt::Display for TauPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tau{}^{}", self.k, self.e)
    }
}

/// Exponent vector `(i_1, …, i_n)` of the canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OgsExponents {
    exps: Vec<i32>,
}

impl OgsExponents {
    pub fn identity(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// Builds the vector from `(i_1, …, i_n)`, checking `-k <= i_k < k`.
    pub fn new(exps: Vec<i32>) -> Result<Self> {
        for (idx, &e) in exps.iter().enumerate() {
            TauPower::new(idx + 1, e)?;
        }
        Ok(Self { exps })
    }

    /// The single factor `tau_k^e` in rank `n`, with `e` normalized.
    pub fn single(n: usize, k: usize, e: i64) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { k, n });
        }
        let mut out = Self::identity(n);
        out.exps[k - 1] = normalize_exponent(k, e);
        Ok(out)
    }

    /// Every exponent vector of rank `n`, in lexicographic order
    /// (`2^n · n!` of them).
    pub fn all(n: usize) -> impl Iterator<Item = Self> {
        let mut next = Some((1..=n as i32).map(|k| -k).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut v = cur.clone();
            for k in (1..=n).rev() {
                if v[k - 1] + 1 < k as i32 {
                    v[k - 1] += 1;
                    next = Some(v);
                    break;
                }
                v[k - 1] = -(k as i32);
            }
            Some(Self { exps: cur })
        })
    }

    pub(crate) fn from_vec_unchecked(exps: Vec<i32>) -> Self {
        debug_assert!(Self::new(exps.clone()).is_ok(), "{exps:?}");
        Self { exps }
    }

    pub fn rank(&self) -> usize {
        self.exps.len()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.exps
    }

    /// Exponent of `tau_k` (1-based).
    pub fn get(&self, k: usize) -> i32 {
        self.exps[k - 1]
    }

    pub(crate) fn set(&mut self, k: usize, e: i64) {
        self.exps[k - 1] = normalize_exponent(k, e);
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Nonzero factors in increasing index order.
    pub fn factors(&self) -> impl Iterator<Item = TauPower> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| TauPower { k: i + 1, e })
    }

    /// Indices `k_1 < … < k_m` with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.factors().map(|t| t.k).collect()
    }

    pub fn to_permutation(&self) -> SignedPermutation {
        from_ogs(self)
    }

    /// Pads with zero exponents up to rank `m`.
    pub fn embed(&self, m: usize) -> Result<Self> {
        if m < self.rank() {
            return Err(Error::Precondition(format!(
                "cannot embed rank {} into smaller rank {m}",
                self.rank()
            )));
        }
        let mut exps = self.exps.clone();
        exps.resize(m, 0);
        Ok(Self { exps })
    }
}

impl fmt::Display for OgsExponents {
    /// `tau<k>^<e>` factors joined by `*`; the identity prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in self.factors() {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{t}")?;
            first = false;
        }
        if first {
            write!(f, "e")?;
        }
        Ok(())
    }
}

fn tau_apply_unchecked(k: usize, e: i32, j: i32) -> i32 {
    if j < 0 {
        return -tau_apply_unchecked(k, e, -j);
    }
    let (k, e) = (k as i32, e);
    if e == 0 || j > k {
        return j;
    }
    if e == -k {
        return -j;
    }
    if e > 0 {
        if j <= e {
            -(j - e + k)
        } else {
            j - e
        }
    } else if j <= e + k {
        j - e
    } else {
        -(j - e - k)
    }
}

/// Image of the signed point `j` under `tau_k^e`, by the closed form.
pub fn tau_apply(k: usize, e: i32, j: i32) -> Result<i32> {
    TauPower::new(k, e)?;
    if j == 0 {
        return Err(Error::Precondition("point 0 is not in the domain".into()));
    }
    Ok(tau_apply_unchecked(k, e, j))
}

/// Evaluates `tau_1^{i_1} ⋯ tau_n^{i_n}` point by point.
pub fn from_ogs(e: &OgsExponents) -> SignedPermutation {
    let n = e.rank();
    let window = (1..=n as i32)
        .map(|j| e.factors().fold(j, |x, t| tau_apply_unchecked(t.k, t.e, x)))
        .collect();
    SignedPermutation::from_window_unchecked(window)
}

/// Left-to-right product of arbitrary `tau` powers in rank `n`, canonicalized.
pub fn from_product(n: usize, factors: &[TauPower]) -> Result<OgsExponents> {
    let mut window: Vec<i32> = (1..=n as i32).collect();
    for t in factors {
        if t.k == 0 || t.k > n {
            return Err(Error::IndexOutOfRange { k: t.k, n });
        }
        let e = normalize_exponent(t.k, t.e as i64);
        for v in &mut window {
            *v = tau_apply_unchecked(t.k, e, *v);
        }
    }
    Ok(to_ogs(&SignedPermutation::from_window_unchecked(window)))
}

/// Canonical form of `w`, by peeling right cosets of `<tau_1..tau_{k-1}>`
/// from `k = n` down to `1`.
pub fn to_ogs(w: &SignedPermutation) -> OgsExponents {
    let n = w.rank();
    let mut rho = w.window().to_vec();
    let mut exps = vec![0; n];
    for k in (1..=n).rev() {
        let c = rho[k - 1];
        let i = if c > 0 { k as i32 - c } else { c };
        exps[k - 1] = i;
        let inv = normalize_exponent(k, -(i as i64));
        for v in &mut rho {
            *v = tau_apply_unchecked(k, inv, *v);
        }
        assert_eq!(
            rho[k - 1],
            k as i32,
            "coset peeling failed at k = {k} for {w}"
        );
    }
    OgsExponents::from_vec_unchecked(exps)
}

/// The subcases of the exchange table for `tau_q^{r_q} · tau_p^{r_p}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ExchangeCase {
    /// `0 < r_p < p`, `q - r_q >= p`.
    PositiveA,
    /// `0 < r_p < p`, `r_p <= q - r_q <= p`.
    PositiveB,
    /// `0 < r_p < p`, `q - r_q <= r_p`.
    PositiveC,
    /// `r_p = -p`, `q - r_q >= p`.
    FullA,
    /// `r_p = -p`, `q - r_q < p`.
    FullB,
    /// `-p < r_p < 0`, `q - r_q >= p`.
    NegativeA,
    /// `-p < r_p < 0`, `r_p + p <= q - r_q <= p`.
    NegativeB,
    /// `-p < r_p < 0`, `q - r_q <= r_p + p`.
    NegativeC,
}

impl ExchangeCase {
    pub const ALL: [ExchangeCase; 8] = [
        Self::PositiveA,
        Self::PositiveB,
        Self::PositiveC,
        Self::FullA,
        Self::FullB,
        Self::NegativeA,
        Self::NegativeB,
        Self::NegativeC,
    ];

    /// Whether the subcase's condition holds. Only defined for `r_q > 0`;
    /// the table has no rows for negative `r_q`.
    pub fn applies(self, q: usize, r_q: i32, p: usize, r_p: i32) -> bool {
        if r_q <= 0 {
            return false;
        }
        let (q, p) = (q as i32, p as i32);
        let d = q - r_q;
        match self {
            Self::PositiveA => 0 < r_p && r_p < p && d >= p,
            Self::PositiveB => 0 < r_p && r_p < p && r_p <= d && d <= p,
            Self::PositiveC => 0 < r_p && r_p < p && d <= r_p,
            Self::FullA => r_p == -p && d >= p,
            Self::FullB => r_p == -p && d < p,
            Self::NegativeA => -p < r_p && r_p < 0 && d >= p,
            Self::NegativeB => -p < r_p && r_p < 0 && r_p + p <= d && d <= p,
            Self::NegativeC => -p < r_p && r_p < 0 && d <= r_p + p,
        }
    }

    /// The product the table prescribes, as `(index, exponent)` pairs before
    /// normalization. Index `0` stands for the identity.
    pub fn formula(self, q: usize, r_q: i32, p: usize, r_p: i32) -> Vec<(i32, i32)> {
        let (q, p, rq, rp) = (q as i32, p as i32, r_q, r_p);
        match self {
            Self::PositiveA => vec![(rq, -rq), (rq + rp, rq), (p + rq, rp), (q, rq)],
            Self::PositiveB => vec![(rq, p - q), (rq + rp, q - p), (q, rq + rp)],
            Self::PositiveC => vec![
                (p + rq - q, rq + rp - q),
                (rq, p - rp - rq),
                (q, rq + rp - p - q),
            ],
            Self::FullA => vec![(rq, -rq), (p + rq, -p - rq), (q, rq)],
            Self::FullB => vec![(p + rq - q, -p - rq + q), (rq, -rq), (q, rq - q)],
            Self::NegativeA => vec![(rq + rp + p, rq), (p + rq, rp - rq), (q, rq)],
            Self::NegativeB => vec![
                (p + rq - q, -p - rq + q),
                (rq, p + rq - q),
                (rq + rp + p, q - p),
                (q, p + rp - q + rq),
            ],
            Self::NegativeC => vec![(p + rq - q, rp), (rq, -rp), (q, rq + rp)],
        }
    }
}

/// Assembles a table product into canonical form: normalize each exponent,
/// merge equal indices, drop index `0`. Returns `None` when the indices are
/// out of range or not in nondecreasing order.
fn assemble(n: usize, factors: &[(i32, i32)]) -> Option<OgsExponents> {
    let mut out = OgsExponents::identity(n);
    let mut last = 0;
    for &(k, e) in factors {
        if k == 0 {
            continue;
        }
        if k < last || k < 0 || k as usize > n {
            return None;
        }
        last = k;
        let k = k as usize;
        out.set(k, out.get(k) as i64 + e as i64);
    }
    Some(out)
}

/// Result of rewriting `tau_q^{r_q} · tau_p^{r_p}` into canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeLaw {
    /// The canonical form, computed by composing the two permutations.
    pub canonical: OgsExponents,
    /// The first matching row of the table, if any.
    pub case: Option<ExchangeCase>,
    /// What that row's formula produces after normalization, if it could be
    /// assembled.
    pub formula: Option<OgsExponents>,
}

impl ExchangeLaw {
    /// True when no table row applies or the row agrees with `canonical`.
    pub fn formula_agrees(&self) -> bool {
        match self.case {
            None => true,
            Some(_) => self.formula.as_ref() == Some(&self.canonical),
        }
    }
}

/// Rewrites `tau_q^{r_q} · tau_p^{r_p}` (with `p < q`) in rank `q`.
///
/// Zero exponents are allowed and give the trivial product. The canonical
/// form always comes from composition; the table row is reported next to it.
pub fn exchange_tau(q: usize, r_q: i32, p: usize, r_p: i32) -> Result<ExchangeLaw> {
    exchange_tau_in(q, q, r_q, p, r_p)
}

/// [`exchange_tau`] in an explicit rank `n >= q`.
pub fn exchange_tau_in(n: usize, q: usize, r_q: i32, p: usize, r_p: i32) -> Result<ExchangeLaw> {
    if !(1 <= p && p < q && q <= n) {
        return Err(Error::Precondition(format!(
            "exchange needs 1 <= p < q <= n, got p = {p}, q = {q}, n = {n}"
        )));
    }
    TauPower::new(q, r_q)?;
    TauPower::new(p, r_p)?;
    let canonical = from_product(n, &[TauPower { k: q, e: r_q }, TauPower { k: p, e: r_p }])?;
    let case = if r_p == 0 {
        None
    } else {
        ExchangeCase::ALL
            .into_iter()
            .find(|c| c.applies(q, r_q, p, r_p))
    };
    let formula = case.and_then(|c| assemble(n, &c.formula(q, r_q, p, r_p)));
    Ok(ExchangeLaw {
        canonical,
        case,
        formula,
    })
}

/// Every table row whose condition holds (rows overlap on boundaries).
pub fn exchange_cases(q: usize, r_q: i32, p: usize, r_p: i32) -> Vec<ExchangeCase> {
    ExchangeCase::ALL
        .into_iter()
        .filter(|c| c.applies(q, r_q, p, r_p))
        .collect()
}

/// Evaluates a row of the table in rank `n`, or `None` if it cannot be assembled.
pub fn exchange_formula(
    n: usize,
    case: ExchangeCase,
    q: usize,
    r_q: i32,
    p: usize,
    r_p: i32,
) -> Option<OgsExponents> {
    assemble(n, &case.formula(q, r_q, p, r_p))
}
