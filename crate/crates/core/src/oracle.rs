//! Brute-force ground truth: Cayley-graph search and exhaustive checks.
//!
//! Nothing here relies on the closed formulas it verifies. Lengths come from
//! breadth-first search over left multiplication by the generators, products
//! from window composition.

use std::collections::{HashMap, HashSet, VecDeque};

use itertools::Itertools;
use serde::Serialize;

use crate::factor::uv_factorize;
use crate::metrics::{
    check_descent_law, descents, greedy_reduce, length, normal_form, DescentLaw, DescentSet,
};
use crate::ogs::{
    exchange_cases, exchange_formula, exchange_tau_in, from_ogs, to_ogs, OgsExponents, TauPower,
};
use crate::perm::{CoxeterWord, SignedPermutation};
use crate::sn::{
    elementary_factorize, exchange_t_in, is_elementary, is_in_sdot, t_to_tau, tau_to_t,
    SnOgsExponents,
};
use crate::{Error, Result};

/// Largest rank accepted by [`CayleyTable::bfs`] (`2^7 · 7! = 645120`).
pub const MAX_BFS_RANK: usize = 7;

const MAX_RECORDED_FAILURES: usize = 16;

/// Distances from the identity in the Cayley graph of `B_n`.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    n: usize,
    /// Length and the generator `s_i` with `w = s_i · parent` on a geodesic.
    entries: HashMap<SignedPermutation, (u32, Option<usize>)>,
}

impl CayleyTable {
    pub fn bfs(n: usize) -> Result<Self> {
        if n > MAX_BFS_RANK {
            return Err(Error::RankTooLarge {
                n,
                max: MAX_BFS_RANK,
            });
        }
        if n == 0 {
            return Err(Error::Precondition("rank must be positive".into()));
        }
        let id = SignedPermutation::identity(n);
        let mut entries = HashMap::new();
        entries.insert(id.clone(), (0, None));
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            let d = entries[&w].0;
            for i in 0..n {
                let mut next = w.clone();
                next.left_mul_generator(i);
                entries.entry(next).or_insert_with_key(|k| {
                    queue.push_back(k.clone());
                    (d + 1, Some(i))
                });
            }
        }
        Ok(Self { n, entries })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn length(&self, w: &SignedPermutation) -> Option<u32> {
        self.entries.get(w).map(|e| e.0)
    }

    /// A shortest word for `w`.
    pub fn witness(&self, w: &SignedPermutation) -> Option<CoxeterWord> {
        let mut cur = w.clone();
        let mut letters = Vec::new();
        loop {
            let (_, first) = *self.entries.get(&cur)?;
            let Some(i) = first else { break };
            letters.push(i);
            cur.left_mul_generator(i);
        }
        CoxeterWord::new(self.n, letters).ok()
    }

    pub fn max_length(&self) -> u32 {
        self.entries.values().map(|e| e.0).max().unwrap_or(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = (&SignedPermutation, u32)> {
        self.entries.iter().map(|(w, e)| (w, e.0))
    }

    /// The elements sorted by window, for deterministic iteration.
    pub fn sorted_elements(&self) -> Vec<(SignedPermutation, u32)> {
        let mut v: Vec<_> = self.elements().map(|(w, l)| (w.clone(), l)).collect();
        v.sort();
        v
    }
}

/// A counterexample in a [`Report`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of a verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    pub n: usize,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    fn new(check: &str, n: usize) -> Self {
        Self {
            check: check.to_string(),
            n,
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records a failure if `expected != actual`. Does not count a case.
    fn check<E: PartialEq + ToString>(
        &mut self,
        input: impl FnOnce() -> String,
        expected: E,
        actual: E,
    ) {
        if expected != actual && self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure {
                input: input(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }
}

fn guard(n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::RankTooLarge { n, max });
    }
    if n == 0 {
        return Err(Error::Precondition("rank must be positive".into()));
    }
    Ok(())
}

/// All unsigned permutations of rank `n`, as signed permutations.
pub fn unsigned_permutations(n: usize) -> impl Iterator<Item = SignedPermutation> {
    (1..=n as i32)
        .permutations(n)
        .map(SignedPermutation::from_window_unchecked)
}

/// Canonical forms of every element of the subgroup generated by `s_1..s_{n-1}`.
pub fn sdot_elements(n: usize) -> Vec<OgsExponents> {
    unsigned_permutations(n).map(|w| to_ogs(&w)).collect()
}

/// Canonical form enumeration: every exponent vector gives a distinct
/// element, all `2^n · n!` elements are hit, and the round trips hold.
/// Also checks subgroup membership against window positivity and the
/// `tau`/`t` conversions on the subgroup.
pub fn verify_bijection(n: usize) -> Result<Report> {
    guard(n, 6)?;
    let mut r = Report::new("bijection", n);
    let mut seen = HashSet::new();
    for e in OgsExponents::all(n) {
        r.cases += 1;
        let w = from_ogs(&e);
        r.check(|| e.to_string(), true, seen.insert(w.clone()));
        r.check(|| e.to_string(), e.clone(), to_ogs(&w));
        r.check(
            || format!("membership of {e}"),
            w.is_unsigned(),
            is_in_sdot(&e),
        );
        if w.is_unsigned() {
            let t = match tau_to_t(&e) {
                Ok(t) => t,
                Err(err) => {
                    r.check(
                        || format!("t form of {e}"),
                        "ok".to_string(),
                        err.to_string(),
                    );
                    continue;
                }
            };
            r.check(|| format!("t form of {e}"), w.clone(), t.to_permutation());
            r.check(|| format!("round trip of {t}"), e.clone(), t_to_tau(&t));
        }
    }
    let total: usize = (1..=n).map(|k| 2 * k).product();
    r.check(|| "element count".into(), total, seen.len());
    let unsigned = unsigned_permutations(n).collect::<Vec<_>>();
    r.check(
        || "signed elements with all-positive window".into(),
        unsigned.len(),
        seen.iter().filter(|w| w.is_unsigned()).count(),
    );
    Ok(r)
}

/// Exchange laws. For every `1 <= p < q <= n` and nonzero `r_p`, `r_q`, the
/// canonical form of `tau_q^{r_q} · tau_p^{r_p}` is compared with composition
/// and every applicable table row. On the `S_n` side every
/// `t_q^{i_q} · t_p^{i_p}` with `2 <= p < q <= n` is checked the same way.
pub fn verify_exchange(n: usize) -> Result<Report> {
    guard(n, 8)?;
    let mut r = Report::new("exchange", n);
    for q in 2..=n {
        for p in 1..q {
            for rq in (-(q as i32)..q as i32).filter(|&x| x != 0) {
                for rp in (-(p as i32)..p as i32).filter(|&x| x != 0) {
                    r.cases += 1;
                    let input = || format!("tau{q}^{rq}*tau{p}^{rp}");
                    let law = exchange_tau_in(n, q, rq, p, rp)?;
                    let a = from_ogs(&OgsExponents::single(n, q, rq as i64)?);
                    let b = from_ogs(&OgsExponents::single(n, p, rp as i64)?);
                    let truth = to_ogs(&(&a * &b));
                    r.check(input, truth.clone(), law.canonical.clone());
                    for c in exchange_cases(q, rq, p, rp) {
                        let got = exchange_formula(n, c, q, rq, p, rp)
                            .map_or_else(|| "unassemblable".to_string(), |f| f.to_string());
                        r.check(|| format!("{} ({c:?})", input()), truth.to_string(), got);
                    }
                }
            }
        }
    }
    for q in 3..=n {
        for p in 2..q {
            for iq in 1..q as i32 {
                for ip in 1..p as i32 {
                    r.cases += 1;
                    let law = exchange_t_in(n, q, iq, p, ip)?;
                    let tq = SignedPermutation::identity(n)
                        .window()
                        .iter()
                        .map(|&j| t_point(q, iq, j))
                        .collect();
                    let tp = SignedPermutation::identity(n)
                        .window()
                        .iter()
                        .map(|&j| t_point(p, ip, j))
                        .collect();
                    let prod =
                        &SignedPermutation::from_window(tq)? * &SignedPermutation::from_window(tp)?;
                    let truth = SnOgsExponents::from_permutation(&prod)?;
                    let input = || format!("t{q}^{iq}*t{p}^{ip} ({:?})", law.case);
                    r.check(input, truth.to_string(), law.canonical.to_string());
                    let got = law
                        .formula
                        .as_ref()
                        .map_or_else(|| "unassemblable".to_string(), |f| f.to_string());
                    r.check(input, truth.to_string(), got);
                }
            }
        }
    }
    Ok(r)
}

/// `t_m^e` evaluated as an explicit power of the cycle `1 -> m -> m-1 -> … -> 2 -> 1`.
fn t_point(m: usize, e: i32, j: i32) -> i32 {
    let m = m as i32;
    let mut x = j;
    for _ in 0..e {
        x = if x == 1 {
            m
        } else if x <= m {
            x - 1
        } else {
            x
        };
    }
    x
}

/// Coxeter length four ways: the alternating formula, the normal form, greedy
/// reduction and the Cayley-graph distance. Also checks that every edge of the
/// graph changes length by exactly one and that `tau_k^{-k}` has length `k²`.
pub fn verify_lengths(n: usize) -> Result<Report> {
    guard(n, 6)?;
    let table = CayleyTable::bfs(n)?;
    lengths_with(&table)
}

fn lengths_with(table: &CayleyTable) -> Result<Report> {
    let n = table.rank();
    let mut r = Report::new("lengths", n);
    for (w, d) in table.sorted_elements() {
        r.cases += 1;
        let d = d as u64;
        r.check(|| format!("{w} alternating"), d, length(&to_ogs(&w)));
        let nf = normal_form(&w);
        r.check(|| format!("{w} normal form"), d, nf.length() as u64);
        r.check(
            || format!("{w} normal form word"),
            w.clone(),
            nf.word.eval(),
        );
        let g = greedy_reduce(&w);
        r.check(|| format!("{w} greedy"), d, g.len() as u64);
        r.check(|| format!("{w} greedy word"), w.clone(), g.eval());
        for i in 0..n {
            let mut x = w.clone();
            x.left_mul_generator(i);
            let dx = table.length(&x).unwrap_or(u32::MAX) as u64;
            r.check(|| format!("{w} edge s{i}"), 1, d.abs_diff(dx));
        }
    }
    for k in 1..=n {
        r.cases += 1;
        let w = TauPower::longest(k).to_permutation(n);
        r.check(
            || format!("tau{k}^-{k}"),
            (k * k) as u64,
            table.length(&w).unwrap_or(0) as u64,
        );
    }
    Ok(r)
}

/// Descent characterizations. Over all of `B_n`: `des(w)` equals the set of
/// generators shortening `w` from the left. Over the subgroup: descents are
/// the negative exponents, and the `tau_a^{-a} · u` and `u · tau_b^b` laws
/// hold for every admissible pair.
pub fn verify_descents(n: usize) -> Result<Report> {
    guard(n, 6)?;
    let table = CayleyTable::bfs(n)?;
    let mut r = Report::new("descents", n);
    for (w, d) in table.sorted_elements() {
        r.cases += 1;
        let shortening = (0..n).filter(|&i| {
            let mut x = w.clone();
            x.left_mul_generator(i);
            table.length(&x).is_some_and(|dx| dx < d)
        });
        r.check(
            || w.to_string(),
            DescentSet::from_indices(shortening).to_string(),
            descents(&w).to_string(),
        );
    }
    for k in 1..=n {
        r.cases += 1;
        let w = TauPower::longest(k).to_permutation(n);
        r.check(
            || format!("tau{k}^-{k}"),
            (0..k).map(|i| i.to_string()).join(" "),
            descents(&w).to_string(),
        );
    }
    let sdot = sdot_elements(n);
    let law = |r: &mut Report, input: String, l: DescentLaw| {
        r.cases += 1;
        match check_descent_law(&l) {
            Ok(ok) => r.check(|| input, true, ok),
            Err(e) => r.check(|| input, "ok".to_string(), e.to_string()),
        }
    };
    for u in &sdot {
        law(&mut r, format!("sdot {u}"), DescentLaw::Sdot(u.clone()));
        let lo = u.factors().next().map_or(n, |t| t.k);
        let hi = u.factors().last().map_or(1, |t| t.k);
        for a in 1..=lo {
            law(
                &mut r,
                format!("tau{a}^-{a} * ({u})"),
                DescentLaw::VThenU { a, u: u.clone() },
            );
        }
        for b in hi..=n {
            law(
                &mut r,
                format!("({u}) * tau{b}^{b}"),
                DescentLaw::UThenV { u: u.clone(), b },
            );
        }
    }
    Ok(r)
}

/// Factorizations. The alternating `u · v` factorization of every element
/// of `B_n` reconstructs it and satisfies its structural conditions; the
/// elementary factorization of every subgroup element has one elementary
/// factor per negative exponent and reconstructs it.
pub fn verify_factorizations(n: usize) -> Result<Report> {
    guard(n, 6)?;
    let mut r = Report::new("factorizations", n);
    for e in OgsExponents::all(n) {
        r.cases += 1;
        check_uv(&mut r, &e);
    }
    for e in sdot_elements(n) {
        r.cases += 1;
        check_elementary(&mut r, &e);
    }
    Ok(r)
}

fn check_uv(r: &mut Report, e: &OgsExponents) {
    let fz = uv_factorize(e);
    r.check(|| format!("uv product of {e}"), from_ogs(e), fz.product());
    let cond = fz
        .check_window_conditions()
        .map_or_else(|x| x.to_string(), |_| "ok".into());
    r.check(
        || format!("uv conditions of {e} = {fz}"),
        "ok".to_string(),
        cond,
    );
}

fn check_elementary(r: &mut Report, e: &OgsExponents) {
    let input = || e.to_string();
    let fz = match elementary_factorize(e) {
        Ok(fz) => fz,
        Err(x) => return r.check(input, "ok".to_string(), x.to_string()),
    };
    let negs = e.factors().filter(|t| t.e < 0).count();
    r.check(input, negs, fz.z);
    r.check(input, negs.max(1), fz.factors.len());
    r.check(input, true, fz.factors.iter().all(is_elementary));
    r.check(input, from_ogs(e), fz.product());
}

/// Runs one named check (`bijection`, `exchange`, `lengths`, `descents`,
/// `factorizations`) or all of them.
pub fn verify(check: &str, n: usize) -> Result<Vec<Report>> {
    let one = |c: &str| -> Result<Report> {
        match c {
            "bijection" => verify_bijection(n),
            "exchange" => verify_exchange(n),
            "lengths" => verify_lengths(n),
            "descents" => verify_descents(n),
            "factorizations" => verify_factorizations(n),
            other => Err(Error::Precondition(format!("unknown check {other:?}"))),
        }
    };
    if check == "all" {
        CHECKS.iter().map(|c| one(c)).collect()
    } else {
        Ok(vec![one(check)?])
    }
}

pub const CHECKS: [&str; 5] = [
    "bijection",
    "exchange",
    "lengths",
    "descents",
    "factorizations",
];
