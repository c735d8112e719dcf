//! Alternating factorization `π = u_1 · v_1 · u_2 ⋯ v_{r-1} · u_r`.
//!
//! Each `u_j` lies in the subgroup generated by `s_1..s_{n-1}` and each
//! `v_j = tau_{p_j}^{p_j}` is the longest element of the parabolic subgroup
//! on `1..=p_j`, with `p_1 < p_2 < … < p_{r-1}`.

use std::fmt;

use crate::ogs::{from_ogs, OgsExponents, TauPower};
use crate::perm::SignedPermutation;
use crate::sn::is_in_sdot;
use crate::{Error, Result};

/// One factor of a [`UvFactorization`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UvPart {
    U(OgsExponents),
    /// `tau_p^p`.
    V(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UvFactorization {
    /// `u_1, …, u_r`.
    pub us: Vec<OgsExponents>,
    /// `p_1, …, p_{r-1}`.
    pub ps: Vec<usize>,
}

impl UvFactorization {
    pub fn rank(&self) -> usize {
        self.us[0].rank()
    }

    /// Number of `u` parts.
    pub fn r(&self) -> usize {
        self.us.len()
    }

    /// The interleaved sequence `u_1, v_1, …, u_r`.
    pub fn parts(&self) -> Vec<UvPart> {
        let mut out = Vec::with_capacity(2 * self.us.len());
        for (j, u) in self.us.iter().enumerate() {
            if j > 0 {
                out.push(UvPart::V(self.ps[j - 1]));
            }
            out.push(UvPart::U(u.clone()));
        }
        out
    }

    pub fn product(&self) -> SignedPermutation {
        let n = self.rank();
        let mut acc = SignedPermutation::identity(n);
        for part in self.parts() {
            let w = match part {
                UvPart::U(u) => from_ogs(&u),
                UvPart::V(p) => TauPower::longest(p).to_permutation(n),
            };
            acc = &acc * &w;
        }
        acc
    }

    /// Checks the structural conditions: every `u_j` is in the subgroup,
    /// the `p_j` increase strictly, and the nonzero indices of `u_j` lie in
    /// `[p_{j-1}, p_j]` (with `p_0 = 1`, `p_r = n`).
    pub fn check_window_conditions(&self) -> Result<()> {
        if self.us.len() != self.ps.len() + 1 {
            return Err(Error::HypothesisViolated(
                "part counts do not alternate".into(),
            ));
        }
        if self.ps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::HypothesisViolated(format!(
                "block sizes {:?} are not strictly increasing",
                self.ps
            )));
        }
        let n = self.rank();
        for (j, u) in self.us.iter().enumerate() {
            if !is_in_sdot(u) {
                return Err(Error::HypothesisViolated(format!(
                    "u{} = {u} is not in the subgroup",
                    j + 1
                )));
            }
            let lo = if j == 0 { 1 } else { self.ps[j - 1] };
            let hi = self.ps.get(j).copied().unwrap_or(n);
            if let Some(t) = u.factors().find(|t| t.k < lo || t.k > hi) {
                return Err(Error::HypothesisViolated(format!(
                    "u{} uses tau{} outside [{lo}, {hi}]",
                    j + 1,
                    t.k
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for UvFactorization {
    /// Parts joined by `·`, `v` blocks written as `tau<p>^<p>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts().iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            match part {
                UvPart::U(u) => write!(f, "{u}")?,
                UvPart::V(p) => write!(f, "tau{p}^{p}")?,
            }
        }
        Ok(())
    }
}

/// Computes the alternating factorization, peeling from the right.
///
/// With nonzero positions `k_1 < … < k_m` (and `k_0 = 0`) and suffix sums
/// `ρ_x = i_{k_x} + … + i_{k_m}`, scan `x` from `m` down. The first `x` with
/// `ρ_x ∉ [0, k_{x-1}]` is a cut:
///
/// * `ρ_x >= k_x` or `ρ_x < 0`: `u = tau_{k_x}^{-ρ_{x+1}} · (tail after x)`,
///   `v = tau_{k_x}^{k_x}`, and `ρ_x - k_x` stays at position `k_x`;
/// * `k_{x-1} < ρ_x < k_x`: `u = tau_{ρ_x}^{-ρ_x} · (tail from x)`,
///   `v = tau_{ρ_x}^{ρ_x}`.
///
/// When no cut exists the remainder is in the subgroup and becomes `u_1`.
pub fn uv_factorize(e: &OgsExponents) -> UvFactorization {
    let n = e.rank();
    let mut cur = e.clone();
    let mut us = Vec::new();
    let mut ps = Vec::new();
    loop {
        let f: Vec<TauPower> = cur.factors().collect();
        let m = f.len();
        let k = |x: usize| if x == 0 { 0 } else { f[x - 1].k as i64 };
        let mut rho = vec![0i64; m + 2];
        for x in (1..=m).rev() {
            rho[x] = rho[x + 1] + f[x - 1].e as i64;
        }
        let cut = (1..=m)
            .rev()
            .find(|&x| !(0 <= rho[x] && rho[x] <= k(x - 1)));
        let Some(x) = cut else {
            us.push(cur);
            break;
        };
        let mut u = OgsExponents::identity(n);
        let p;
        if rho[x] >= k(x) || rho[x] < 0 {
            p = f[x - 1].k;
            for t in &f[x..] {
                u.set(t.k, t.e as i64);
            }
            u.set(p, -rho[x + 1]);
            for t in &f[x - 1..] {
                cur.set(t.k, 0);
            }
            cur.set(p, rho[x] - p as i64);
        } else {
            p = rho[x] as usize;
            for t in &f[x - 1..] {
                u.set(t.k, t.e as i64);
                cur.set(t.k, 0);
            }
            u.set(p, -(p as i64));
        }
        us.push(u);
        ps.push(p);
    }
    us.reverse();
    ps.reverse();
    UvFactorization { us, ps }
}
