//! Braid words in the Artin generators.
//!
//! The text format used everywhere is whitespace-separated signed integers:
//! `"1 2 -1"` is σ1 σ2 σ1⁻¹. The strand count is supplied separately and every
//! letter `l` must satisfy `1 <= |l| <= n-1`. Words act on the right: reading a
//! word left to right is composing mapping classes first to last.

use crate::error::BraidError;
use std::fmt;

/// Hard cap on strand counts; inputs beyond this fail loudly.
pub const MAX_STRANDS: usize = 64;

pub(crate) fn check_strands(n: usize) -> Result<(), BraidError> {
    if (2..=MAX_STRANDS).contains(&n) {
        Ok(())
    } else {
        Err(BraidError::StrandCount(n))
    }
}

/// A word in the generators σ_i^{±1} of the braid group B_n.
///
/// Letters are nonzero integers: `i > 0` means σ_i, `i < 0` means σ_{|i|}⁻¹.
/// The empty word is the identity braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i64>) -> Result<Self, BraidError> {
        check_strands(n)?;
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > n - 1 {
                return Err(BraidError::Letter { n, letter: l });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Result<Self, BraidError> {
        Self::new(n, Vec::new())
    }

    /// Parse the whitespace-separated signed integer format.
    pub fn parse(n: usize, text: &str) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let l: i64 = tok.parse().map_err(|_| BraidError::Parse(tok.to_string()))?;
            letters.push(l);
        }
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of letter signs; a conjugacy and equality invariant (the image in Z).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    /// The inverse word: letters reversed and negated.
    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        if self.n != other.n {
            return Err(BraidError::StrandMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// The standard positive word for the half twist Δ:
    /// (σ1 … σ_{n-1})(σ1 … σ_{n-2}) ⋯ (σ1).
    pub fn delta(n: usize) -> Result<Self, BraidError> {
        check_strands(n)?;
        let mut letters = Vec::new();
        for k in (1..n).rev() {
            letters.extend((1..=k as i64).map(|i| i));
        }
        Ok(BraidWord { n, letters })
    }

    /// A word for the full twist Δ², the generator of the center.
    pub fn delta_squared(n: usize) -> Result<Self, BraidError> {
        let d = Self::delta(n)?;
        d.concat(&d)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}
