//! Coxeter length, normal forms and descent sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::factor::uv_factorize;
use crate::ogs::{from_ogs, OgsExponents, TauPower};
use crate::perm::{CoxeterWord, SignedPermutation};
use crate::sn::is_in_sdot;
use crate::{Error, Result};

/// Left descents `{0 <= i < n : π(i) > π(i+1)}` with `π(0) = 0`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DescentSet {
    indices: BTreeSet<usize>,
}

impl DescentSet {
    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        Self {
            indices: indices.into_iter().collect(),
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for DescentSet {
    /// Space-separated indices in increasing order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

pub fn descents(w: &SignedPermutation) -> DescentSet {
    let win = w.window();
    let mut prev = 0;
    let mut out = BTreeSet::new();
    for (i, &v) in win.iter().enumerate() {
        if prev > v {
            out.insert(i);
        }
        prev = v;
    }
    DescentSet { indices: out }
}

/// `Σ k · i_k` for an element of the subgroup generated by `s_1..s_{n-1}`.
pub fn length_sdot(e: &OgsExponents) -> Result<u64> {
    if !is_in_sdot(e) {
        return Err(Error::NotInSdot);
    }
    let l: i64 = e.factors().map(|t| t.k as i64 * t.e as i64).sum();
    debug_assert!(l >= 0);
    Ok(l as u64)
}

/// Coxeter length from the alternating factorization:
/// `ℓ = ℓ(u_r) + Σ_{j<r} (-1)^{r-1-j} (p_j² - ℓ(u_j))`.
pub fn length(e: &OgsExponents) -> u64 {
    let fz = uv_factorize(e);
    let r = fz.us.len();
    let lu = |u: &OgsExponents| length_sdot(u).expect("u parts lie in the subgroup") as i64;
    let mut total = lu(&fz.us[r - 1]);
    for j in 0..r - 1 {
        let p = fz.ps[j] as i64;
        let term = p * p - lu(&fz.us[j]);
        // 0-based j: sign (-1)^{r-2-j}
        if (r - 2 - j).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    debug_assert!(total >= 0);
    total as u64
}

/// The normal form `∏_{i=0}^{n-1} ∏_{j=0}^{y_i-1} s_{|i-j|}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub y: Vec<usize>,
    pub word: CoxeterWord,
}

impl NormalForm {
    /// Builds the form from a `y` vector, checking `0 <= y_i <= 2i + 1`.
    pub fn from_y(y: Vec<usize>) -> Result<Self> {
        let n = y.len();
        let mut letters = Vec::new();
        for (i, &yi) in y.iter().enumerate() {
            if yi > 2 * i + 1 {
                return Err(Error::Precondition(format!(
                    "y_{i} = {yi} exceeds {}",
                    2 * i + 1
                )));
            }
            letters.extend(block(i, yi));
        }
        Ok(Self {
            word: CoxeterWord::new(n, letters)?,
            y,
        })
    }

    pub fn length(&self) -> usize {
        self.y.iter().sum()
    }
}

fn block(i: usize, y: usize) -> impl Iterator<Item = usize> {
    (0..y).map(move |j| i.abs_diff(j))
}

/// Peels the parabolic cosets top-down, choosing at level `i` the unique
/// block `u_y` (out of `2i + 2`) with `u_y(i+1) = ρ(i+1)`.
pub fn normal_form(w: &SignedPermutation) -> NormalForm {
    let n = w.rank();
    let mut rho = w.clone();
    let mut y = vec![0; n];
    for i in (0..n).rev() {
        let target = rho.apply(i as i32 + 1);
        let mut cand = SignedPermutation::identity(n);
        let mut found = None;
        for yi in 0..=2 * i + 1 {
            if yi > 0 {
                cand.right_mul_generator(i.abs_diff(yi - 1));
            }
            if cand.apply(i as i32 + 1) == target {
                assert!(
                    found.is_none(),
                    "two coset representatives at level {i} for {w}"
                );
                found = Some((yi, cand.clone()));
            }
        }
        let (yi, u) =
            found.unwrap_or_else(|| panic!("no coset representative at level {i} for {w}"));
        y[i] = yi;
        rho = &rho * &u.inverse();
    }
    debug_assert!(rho.is_identity());
    NormalForm::from_y(y).expect("peeled y vector is in range")
}

/// A reduced word for `w`, found by repeatedly removing the smallest left
/// descent. The letters are in the order they were removed, which is also
/// the order of the word: `w = s_{a_1} · s_{a_2} ⋯`.
pub fn greedy_reduce(w: &SignedPermutation) -> CoxeterWord {
    let n = w.rank();
    let mut cur = w.clone();
    let mut letters = Vec::new();
    let guard = 2 * n * n;
    while let Some(i) = descents(&cur).iter().next() {
        assert!(
            letters.len() < guard,
            "greedy reduction of {w} did not terminate"
        );
        cur.left_mul_generator(i);
        letters.push(i);
    }
    CoxeterWord::new(n, letters).expect("letters are below the rank")
}

/// The descent characterizations that can be checked on a composite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DescentLaw {
    /// `e` in the subgroup: `des = {k : i_k < 0}`.
    Sdot(OgsExponents),
    /// `tau_a^{-a} · u` where every index of `u` is `>= a`:
    /// below `a` the descents of `u` flip, above `a` they persist, `a` is not
    /// a descent.
    VThenU { a: usize, u: OgsExponents },
    /// `u · tau_b^b` where every index of `u` is `<= b`: with `i_m` the
    /// largest index of `u`, below `i_m` the descents flip, `[i_m, b)` are
    /// all descents and nothing from `b` on is.
    UThenV { u: OgsExponents, b: usize },
}

impl DescentLaw {
    /// The composite permutation and the predicted descent set.
    pub fn prediction(&self) -> Result<(SignedPermutation, DescentSet)> {
        match self {
            Self::Sdot(e) => {
                if !is_in_sdot(e) {
                    return Err(Error::HypothesisViolated(format!(
                        "{e} is not in the subgroup"
                    )));
                }
                let pred = e.factors().filter(|t| t.e < 0).map(|t| t.k);
                Ok((from_ogs(e), DescentSet::from_indices(pred)))
            }
            Self::VThenU { a, u } => {
                let (a, n) = (*a, u.rank());
                check_sdot_block(u, a, n)?;
                if let Some(t) = u.factors().next().filter(|t| t.k < a) {
                    return Err(Error::HypothesisViolated(format!(
                        "u uses tau{} below {a}",
                        t.k
                    )));
                }
                let du = descents(&from_ogs(u));
                let pred =
                    (0..n).filter(|&j| (j < a && !du.contains(j)) || (j > a && du.contains(j)));
                let w = &TauPower::longest(a).to_permutation(n) * &from_ogs(u);
                Ok((w, DescentSet::from_indices(pred)))
            }
            Self::UThenV { u, b } => {
                let (b, n) = (*b, u.rank());
                check_sdot_block(u, b, n)?;
                let im = u.factors().last().map_or(0, |t| t.k);
                if im > b {
                    return Err(Error::HypothesisViolated(format!(
                        "u uses tau{im} above {b}"
                    )));
                }
                let du = descents(&from_ogs(u));
                let pred = (0..n).filter(|&j| (j < im && !du.contains(j)) || (im <= j && j < b));
                let w = &from_ogs(u) * &TauPower::longest(b).to_permutation(n);
                Ok((w, DescentSet::from_indices(pred)))
            }
        }
    }
}

fn check_sdot_block(u: &OgsExponents, k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { k, n });
    }
    if !is_in_sdot(u) {
        return Err(Error::HypothesisViolated(format!(
            "{u} is not in the subgroup"
        )));
    }
    Ok(())
}

/// True iff the law's predicted descent set equals the actual one.
pub fn check_descent_law(law: &DescentLaw) -> Result<bool> {
    let (w, pred) = law.prediction()?;
    Ok(descents(&w) == pred)
}
