//! Simple elements of the classical Garside structure on B_n.
//!
//! A simple element (permutation braid) is a left divisor of the half twist Δ;
//! these are in bijection with permutations of the n strands, and the Garside
//! word length of a simple equals the inversion count of its permutation.
//!
//! Composition convention, fixed once for the whole crate: braids act on the
//! RIGHT, so permutation composition matches word concatenation read left to
//! right. Concretely `(a·b).image(i) = b.image(a.image(i))`, and σ1 followed by
//! σ2 sends strand 1 to position 3.

use crate::error::BraidError;
use crate::word::{check_strands, BraidWord};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A set of atom indices (1-based σ_i indices), backed by a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AtomSet(u64);

impl AtomSet {
    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && (self.0 >> (i - 1)) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(&self, other: &AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(&self, other: &AtomSet) -> AtomSet {
        AtomSet(self.0 & other.0)
    }

    /// Smallest atom index in the set, if any.
    pub fn min(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.0;
        (1..=64usize).filter(move |i| (bits >> (i - 1)) & 1 == 1)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// A simple element of B_n, stored as the permutation of strand positions.
///
/// `perm[i]` is the (0-indexed) position where strand `i` ends up.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleElement {
    n: usize,
    perm: Vec<u8>,
}

impl SimpleElement {
    pub fn from_perm(n: usize, perm: Vec<u8>) -> Result<Self, BraidError> {
        check_strands(n)?;
        if perm.len() != n {
            return Err(BraidError::Permutation(format!(
                "table has {} entries for n={n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &perm {
            let v = v as usize;
            if v >= n || seen[v] {
                return Err(BraidError::Permutation(format!("not a bijection: {perm:?}")));
            }
            seen[v] = true;
        }
        Ok(SimpleElement { n, perm })
    }

    pub fn identity(n: usize) -> Self {
        SimpleElement {
            n,
            perm: (0..n as u8).collect(),
        }
    }

    /// The half twist Δ: the order-reversing permutation i ↦ n+1−i.
    pub fn delta(n: usize) -> Self {
        SimpleElement {
            n,
            perm: (0..n as u8).rev().collect(),
        }
    }

    /// The atom σ_i (1-based, 1 <= i <= n-1).
    pub fn atom(n: usize, i: usize) -> Result<Self, BraidError> {
        check_strands(n)?;
        if i == 0 || i > n - 1 {
            return Err(BraidError::Letter { n, letter: i as i64 });
        }
        let mut perm: Vec<u8> = (0..n as u8).collect();
        perm.swap(i - 1, i);
        Ok(SimpleElement { n, perm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn image(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    pub fn is_delta(&self) -> bool {
        self.perm
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == self.n - 1 - i)
    }

    /// Garside word length: the inversion count of the permutation.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.perm[i] > self.perm[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `self` then `other`, as permutations (word concatenation left to right).
    /// The product braid need not be simple; this is the bare permutation part.
    pub fn perm_product(&self, other: &SimpleElement) -> SimpleElement {
        debug_assert_eq!(self.n, other.n);
        let perm = self.perm.iter().map(|&v| other.perm[v as usize]).collect();
        SimpleElement { n: self.n, perm }
    }

    pub fn inverse_perm(&self) -> SimpleElement {
        let mut perm = vec![0u8; self.n];
        for (i, &v) in self.perm.iter().enumerate() {
            perm[v as usize] = i as u8;
        }
        SimpleElement { n: self.n, perm }
    }

    /// Left descents: { i : σ_i left-divides self }.
    pub fn starting_set(&self) -> AtomSet {
        let mut bits = 0u64;
        for i in 0..self.n - 1 {
            if self.perm[i] > self.perm[i + 1] {
                bits |= 1 << i;
            }
        }
        AtomSet(bits)
    }

    /// Right descents: { i : σ_i right-divides self }.
    pub fn finishing_set(&self) -> AtomSet {
        self.inverse_perm().starting_set()
    }

    /// Does `self` left-divide `other` in the prefix order on simples?
    pub fn left_divides(&self, other: &SimpleElement) -> bool {
        debug_assert_eq!(self.n, other.n);
        let quot = self.inverse_perm().perm_product(other);
        self.inversions() + quot.inversions() == other.inversions()
    }

    /// τ: conjugation by Δ. An involution on simples preserving inversions.
    pub fn tau(&self) -> SimpleElement {
        let d = SimpleElement::delta(self.n);
        d.perm_product(self).perm_product(&d)
    }

    /// The unique simple c with self·c = Δ.
    pub fn right_complement(&self) -> SimpleElement {
        self.inverse_perm().perm_product(&SimpleElement::delta(self.n))
    }

    /// The lexicographically smallest reduced word for this simple.
    pub fn canonical_word(&self) -> BraidWord {
        let mut cur = self.clone();
        let mut letters = Vec::with_capacity(self.inversions());
        while let Some(i) = cur.starting_set().min() {
            letters.push(i as i64);
            // peel σ_i from the left
            let atom = SimpleElement::atom(self.n, i).expect("atom index from descent");
            cur = atom.perm_product(&cur);
        }
        BraidWord::new(self.n, letters).expect("descent letters are in range")
    }
}

impl fmt::Display for SimpleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, ".")
        } else if self.is_delta() {
            write!(f, "D")
        } else {
            write!(f, "{}", self.canonical_word())
        }
    }
}

/// Meet of two simples in the prefix order (maximal common left divisor).
///
/// Greedy peeling of common starting atoms; correct because the divisor
/// lattice lets the meet factor through any common atom.
pub fn left_gcd_simple(a: &SimpleElement, b: &SimpleElement) -> Result<SimpleElement, BraidError> {
    if a.n() != b.n() {
        return Err(BraidError::StrandMismatch(a.n(), b.n()));
    }
    let n = a.n();
    let mut x = a.clone();
    let mut y = b.clone();
    let mut g = SimpleElement::identity(n);
    loop {
        let common = x.starting_set().intersection(&y.starting_set());
        match common.min() {
            None => return Ok(g),
            Some(i) => {
                let atom = SimpleElement::atom(n, i)?;
                x = atom.perm_product(&x);
                y = atom.perm_product(&y);
                g = g.perm_product(&atom);
            }
        }
    }
}

/// The product a·b as a braid word (concatenation of canonical reduced words).
/// The result is in general not simple.
pub fn compose_simples(a: &SimpleElement, b: &SimpleElement) -> Result<BraidWord, BraidError> {
    if a.n() != b.n() {
        return Err(BraidError::StrandMismatch(a.n(), b.n()));
    }
    a.canonical_word().concat(&b.canonical_word())
}

/// Is the pair (s, t) left-weighted, i.e. does every starting atom of t
/// already finish s?
pub fn is_left_weighted(s: &SimpleElement, t: &SimpleElement) -> Result<bool, BraidError> {
    if s.n() != t.n() {
        return Err(BraidError::StrandMismatch(s.n(), t.n()));
    }
    Ok(t.starting_set().is_subset_of(&s.finishing_set()))
}

/// All n! simples of B_n in lexicographic order of their permutation tables.
/// Exhaustive enumeration; callers are responsible for keeping n small.
pub fn all_simples(n: usize) -> Vec<SimpleElement> {
    fn rec(n: usize, prefix: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<SimpleElement>) {
        if prefix.len() == n {
            out.push(SimpleElement {
                n,
                perm: prefix.clone(),
            });
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u8);
                rec(n, prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All simples except the identity and Δ: the letters of normal-form factors.
pub fn proper_simples(n: usize) -> Vec<SimpleElement> {
    all_simples(n)
        .into_iter()
        .filter(|s| !s.is_identity() && !s.is_delta())
        .collect()
}
