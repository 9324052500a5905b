//! Curves on the n-punctured disk in Dynnikov coordinates and the braid action.
//!
//! A multicurve is encoded by 2n−4 integers (a_1..a_{n-2}, b_1..b_{n-2});
//! the pair (a_k, b_k) sits at puncture k+1. The zero vector encodes the empty
//! lamination and is not a valid `Curve`. Coordinates are arbitrary-precision:
//! they grow exponentially under long words and overflow would be a
//! correctness bug, not an edge case.
//!
//! The generator action is the standard piecewise-linear max-plus update. Edge
//! generators are handled by embedding the disk in one with a phantom puncture
//! on each side, so a single interior rule covers every σ_i; the phantom pairs
//! are reconstructed from the minimal crossing count of the leftmost gap.
//! Correctness is established by the invariant suite in the tests (braid
//! relations, inverse law, Δ² acting trivially, faithfulness spot checks), not
//! by citation.

use crate::error::CurveError;
use crate::word::BraidWord;
use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;

/// An isotopy class of essential multicurve on the n-punctured disk.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Curve {
    n: usize,
    a: Vec<BigInt>,
    b: Vec<BigInt>,
}

fn pos(x: &BigInt) -> BigInt {
    if x.sign() == num_bigint::Sign::Plus {
        x.clone()
    } else {
        BigInt::from(0)
    }
}

fn neg(x: &BigInt) -> BigInt {
    if x.sign() == num_bigint::Sign::Minus {
        x.clone()
    } else {
        BigInt::from(0)
    }
}

impl Curve {
    /// Build from the coordinate vector (a_1..a_{n-2}, b_1..b_{n-2}).
    pub fn from_coords(n: usize, coords: Vec<BigInt>) -> Result<Self, CurveError> {
        if n < 3 {
            return Err(CurveError::TooFewPunctures(n));
        }
        crate::word::check_strands(n)?;
        if coords.len() != 2 * n - 4 {
            return Err(CurveError::Braid(crate::error::BraidError::Permutation(
                format!("expected {} coordinates, got {}", 2 * n - 4, coords.len()),
            )));
        }
        let zero = BigInt::from(0);
        if coords.iter().all(|c| *c == zero) {
            return Err(CurveError::BoundaryParallel(n));
        }
        let (a, b) = coords.split_at(n - 2);
        Ok(Curve {
            n,
            a: a.to_vec(),
            b: b.to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The coordinate vector, a's first then b's.
    pub fn coords(&self) -> Vec<BigInt> {
        let mut v = self.a.clone();
        v.extend(self.b.iter().cloned());
        v
    }

    /// Apply one generator σ_letter (letter < 0 for the inverse).
    pub fn act(&self, letter: i64) -> Result<Curve, CurveError> {
        let i = letter.unsigned_abs() as usize;
        if letter == 0 || i > self.n - 1 {
            return Err(CurveError::Braid(crate::error::BraidError::Letter {
                n: self.n,
                letter,
            }));
        }
        if letter < 0 {
            // reflection across the puncture line conjugates σ_i to σ_i⁻¹
            let mirrored = Curve {
                n: self.n,
                a: self.a.iter().map(|x| -x).collect(),
                b: self.b.clone(),
            };
            let image = mirrored.act(-letter)?;
            return Ok(Curve {
                n: image.n,
                a: image.a.iter().map(|x| -x).collect(),
                b: image.b,
            });
        }
        let (mut ea, mut eb) = self.embed();
        // pairs about punctures i and i+1 sit at embedded indices i-1, i
        let (a1, b1, a2, b2) = interior_update(&ea[i - 1], &eb[i - 1], &ea[i], &eb[i]);
        ea[i - 1] = a1;
        eb[i - 1] = b1;
        ea[i] = a2;
        eb[i] = b2;
        Ok(Curve {
            n: self.n,
            a: ea[1..self.n - 1].to_vec(),
            b: eb[1..self.n - 1].to_vec(),
        })
    }

    /// Embedded chart with a phantom puncture on each side: one coordinate
    /// pair for every real puncture 1..n.
    fn embed(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        // m = ν_1/2, the minimal crossing count of the gap left of puncture 2,
        // reconstructed as the least value consistent with the switch conditions
        let zero = BigInt::from(0);
        let mut m = zero.clone();
        let mut s = zero.clone();
        for k in 0..self.a.len() {
            let abs_a: BigInt = self.a[k].magnitude().clone().into();
            let cand = abs_a + pos(&self.b[k]) + &s;
            if cand > m {
                m = cand;
            }
            s += &self.b[k];
        }
        if s > m {
            m = s.clone();
        }
        let mut ea = Vec::with_capacity(self.n);
        let mut eb = Vec::with_capacity(self.n);
        ea.push(zero.clone());
        eb.push(-&m);
        ea.extend(self.a.iter().cloned());
        eb.extend(self.b.iter().cloned());
        ea.push(zero);
        eb.push(m - s);
        (ea, eb)
    }
}

/// The max-plus update for an interior σ on the two coordinate pairs
/// (A,B), (C,D) at the punctures it swaps.
fn interior_update(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> (BigInt, BigInt, BigInt, BigInt) {
    let z = a - neg(b) - c + pos(d);
    let a2 = a + pos(b) + pos(&(pos(d) - &z));
    let b2 = d - pos(&z);
    let c2 = c + neg(d) + neg(&(neg(b) + &z));
    let d2 = b + pos(&z);
    (a2, b2, c2, d2)
}

/// Left-to-right action of a whole word: equal braids act equally, which is
/// what makes this usable as an equality oracle.
pub fn act_braid(w: &BraidWord, c: &Curve) -> Result<Curve, CurveError> {
    if w.n() != c.n() {
        return Err(CurveError::Braid(crate::error::BraidError::StrandMismatch(
            w.n(),
            c.n(),
        )));
    }
    let mut cur = c.clone();
    for &l in w.letters() {
        cur = cur.act(l)?;
    }
    Ok(cur)
}

/// The standard circle around the consecutive punctures i..j.
///
/// Distinct (i,j) give distinct vectors; (1,n) is boundary-parallel (its
/// coordinate vector would be zero) and is rejected.
pub fn round_curve(i: usize, j: usize, n: usize) -> Result<Curve, CurveError> {
    if n < 3 {
        return Err(CurveError::TooFewPunctures(n));
    }
    if !(1 <= i && i < j && j <= n) {
        return Err(CurveError::RoundIndices { i, j, n });
    }
    if (i, j) == (1, n) {
        return Err(CurveError::BoundaryParallel(n));
    }
    let mut coords = vec![BigInt::from(0); 2 * n - 4];
    // b_k block starts at n-2; b_{i-1} = -1 when i >= 2, b_{j-1} = +1 when j <= n-1
    if i >= 2 {
        coords[n - 2 + i - 2] = BigInt::from(-1);
    }
    if j <= n - 1 {
        coords[n - 2 + j - 2] = BigInt::from(1);
    }
    Curve::from_coords(n, coords)
}

/// All round curves of D_n, in (i, j) lexicographic order.
pub fn all_round_curves(n: usize) -> Vec<((usize, usize), Curve)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if (i, j) == (1, n) {
                continue;
            }
            out.push(((i, j), round_curve(i, j, n).expect("valid round tag")));
        }
    }
    out
}

/// A pseudo-random curve: small random coordinates, never the zero vector.
pub fn random_curve<R: rand::Rng>(n: usize, rng: &mut R) -> Result<Curve, CurveError> {
    if n < 3 {
        return Err(CurveError::TooFewPunctures(n));
    }
    loop {
        let coords: Vec<BigInt> = (0..2 * n - 4)
            .map(|_| BigInt::from(rng.gen_range(-5i64..=5)))
            .collect();
        if let Ok(c) = Curve::from_coords(n, coords) {
            return Ok(c);
        }
    }
}

/// Equality oracle for braid words, independent of normal forms: two words are
/// declared equal when they act identically on every round curve and on
/// `random_checks` pseudo-random curves, and have equal exponent sums. The
/// exponent sum resolves the central ⟨Δ²⟩ kernel of the curve action.
pub fn words_equal_by_curve_action<R: rand::Rng>(
    w1: &BraidWord,
    w2: &BraidWord,
    random_checks: usize,
    rng: &mut R,
) -> Result<bool, CurveError> {
    if w1.n() != w2.n() {
        return Err(CurveError::Braid(crate::error::BraidError::StrandMismatch(
            w1.n(),
            w2.n(),
        )));
    }
    if w1.exponent_sum() != w2.exponent_sum() {
        return Ok(false);
    }
    let n = w1.n();
    for (_, c) in all_round_curves(n) {
        if act_braid(w1, &c)? != act_braid(w2, &c)? {
            return Ok(false);
        }
    }
    for _ in 0..random_checks {
        let c = random_curve(n, rng)?;
        if act_braid(w1, &c)? != act_braid(w2, &c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", strs.join(", "))
    }
}

// serialize coordinates as a plain JSON integer array, arbitrary precision
impl Serialize for Curve {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coords = self.coords();
        let mut seq = serializer.serialize_seq(Some(coords.len()))?;
        for c in &coords {
            let num: serde_json::Number = c
                .to_string()
                .parse()
                .map_err(serde::ser::Error::custom)?;
            seq.serialize_element(&num)?;
        }
        seq.end()
    }
}
