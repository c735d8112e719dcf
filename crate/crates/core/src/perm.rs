//! Signed permutations and words in the Coxeter generators of `B_n`.
//!
//! A [`SignedPermutation`] stores only its window `[π(1), …, π(n)]`; the
//! values on negative points follow from `π(-j) = -π(j)`.
//!
//! Multiplication is left to right: `a.compose(b)` maps `j` to `b(a(j))`.
//! Under this convention the left descents of `π` are read directly off the
//! window, and left multiplication `s_i · π` permutes window positions.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::{Error, Result};

/// An element of `B_n` in window notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n as i32).collect(),
        }
    }

    /// Builds an element from its window, checking that the absolute values
    /// form a permutation of `1..=n`.
    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidWindow("empty window".into()));
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::InvalidWindow(format!(
                    "entry {v} is outside ±1..=±{n}"
                )));
            }
            if std::mem::replace(&mut seen[a - 1], true) {
                return Err(Error::InvalidWindow(format!("|{v}| appears twice")));
            }
        }
        Ok(Self { window })
    }

    /// Builds an element from a window that is already known to be valid.
    pub(crate) fn from_window_unchecked(window: Vec<i32>) -> Self {
        debug_assert!(Self::from_window(window.clone()).is_ok(), "{window:?}");
        Self { window }
    }

    /// The Coxeter generator `s_i`: `s_0` negates 1, `s_i` swaps `i` and `i + 1`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::LetterOutOfRange { letter: i, n });
        }
        let mut w = Self::identity(n);
        w.left_mul_generator(i);
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Image of a signed point `j` with `1 <= |j| <= n`.
    pub fn apply(&self, j: i32) -> i32 {
        let v = self.window[j.unsigned_abs() as usize - 1];
        if j > 0 {
            v
        } else {
            -v
        }
    }

    /// Left-to-right product: the result maps `j` to `other(self(j))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(Self {
            window: self.window.iter().map(|&v| other.apply(v)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.rank()];
        for (j, &v) in self.window.iter().enumerate() {
            let j = j as i32 + 1;
            window[v.unsigned_abs() as usize - 1] = if v > 0 { j } else { -j };
        }
        Self { window }
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.rank());
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Widens the rank to `m` by fixing the new points `n+1..=m`.
    pub fn embed(&self, m: usize) -> Result<Self> {
        if m < self.rank() {
            return Err(Error::Precondition(format!(
                "cannot embed rank {} into smaller rank {m}",
                self.rank()
            )));
        }
        let mut window = self.window.clone();
        window.extend(self.rank() as i32 + 1..=m as i32);
        Ok(Self { window })
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(j, &v)| v == j as i32 + 1)
    }

    /// True when no entry of the window is negative, i.e. the element lies
    /// in the copy of `S_n` generated by `s_1, …, s_{n-1}`.
    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }

    /// The unsigned permutation `[|π(1)|, …, |π(n)|]`.
    pub fn abs_permutation(&self) -> Self {
        Self {
            window: self.window.iter().map(|v| v.abs()).collect(),
        }
    }

    /// In-place left multiplication `π ← s_i · π`.
    ///
    /// With left-to-right products, `(s_i · π)(j) = π(s_i(j))`, so this
    /// permutes window positions: `s_0` negates position 1, `s_i` swaps
    /// positions `i` and `i + 1`.
    pub fn left_mul_generator(&mut self, i: usize) {
        if i == 0 {
            self.window[0] = -self.window[0];
        } else {
            self.window.swap(i - 1, i);
        }
    }

    /// In-place right multiplication `π ← π · s_i` (acts on values).
    pub fn right_mul_generator(&mut self, i: usize) {
        for v in &mut self.window {
            if i == 0 {
                if v.abs() == 1 {
                    *v = -*v;
                }
            } else {
                let a = v.unsigned_abs() as usize;
                let s = v.signum();
                if a == i {
                    *v = s * (i as i32 + 1);
                } else if a == i + 1 {
                    *v = s * i as i32;
                }
            }
        }
    }
}

impl Mul for &SignedPermutation {
    type Output = SignedPermutation;

    /// Left-to-right product. Panics on rank mismatch; use
    /// [`SignedPermutation::compose`] for a checked version.
    fn mul(self, rhs: Self) -> SignedPermutation {
        self.compose(rhs).expect("rank mismatch in product")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses `[a1,a2,...,an]` with optional signs and whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: "window must be enclosed in [ ]".into(),
            })?;
        let mut window = Vec::new();
        let mut offset = s.find('[').unwrap_or(0) + 1;
        for tok in inner.split([',', ';']) {
            let v = tok.trim().parse::<i32>().map_err(|_| Error::Parse {
                pos: offset,
                msg: format!("invalid window entry {:?}", tok.trim()),
            })?;
            window.push(v);
            offset += tok.len() + 1;
        }
        Self::from_window(window)
    }
}

/// A word in the generators `s_0, …, s_{n-1}` of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterWord {
    n: usize,
    letters: Vec<usize>,
}

impl CoxeterWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&letter) = letters.iter().find(|&&l| l >= n) {
            return Err(Error::LetterOutOfRange { letter, n });
        }
        Ok(Self { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            letters: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { n: self.n, letters })
    }

    /// Left-to-right product of the generators; the empty word is the identity.
    pub fn eval(&self) -> SignedPermutation {
        let mut w = SignedPermutation::identity(self.n);
        for &l in &self.letters {
            w.right_mul_generator(l);
        }
        w
    }
}

/// Evaluates a word (free-function form of [`CoxeterWord::eval`]).
pub fn eval_word(word: &CoxeterWord) -> SignedPermutation {
    word.eval()
}

impl fmt::Display for CoxeterWord {
    /// Whitespace-separated `s<k>` tokens; the empty word prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}
