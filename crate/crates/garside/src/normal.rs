//! Left-weighted (Garside) normal forms Δ^p s_1 ⋯ s_k and group operations.
//!
//! The normal form is the canonical representative of a braid: no factor is
//! trivial or Δ, and every adjacent pair (s_i, s_{i+1}) is left-weighted.
//! inf = p, sup = p + k, canonical length = k.

use crate::error::BraidError;
use crate::simple::{is_left_weighted, left_gcd_simple, SimpleElement};
use crate::word::{check_strands, BraidWord};
use std::fmt;

/// The unique left-weighted form Δ^p s_1 ⋯ s_k of a braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    n: usize,
    p: i64,
    factors: Vec<SimpleElement>,
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm {
            n,
            p: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(n: usize, p: i64) -> Self {
        NormalForm {
            n,
            p,
            factors: Vec::new(),
        }
    }

    /// Normal form of a single simple element.
    pub fn from_simple(s: &SimpleElement) -> Self {
        normalize(s.n(), 0, vec![s.clone()])
    }

    /// Build from arbitrary parts; the factor list is renormalized.
    pub fn from_parts(n: usize, p: i64, factors: Vec<SimpleElement>) -> Result<Self, BraidError> {
        check_strands(n)?;
        for f in &factors {
            if f.n() != n {
                return Err(BraidError::StrandMismatch(n, f.n()));
            }
        }
        Ok(normalize(n, p, factors))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The infimum p.
    pub fn inf(&self) -> i64 {
        self.p
    }

    /// The supremum p + k.
    pub fn sup(&self) -> i64 {
        self.p + self.factors.len() as i64
    }

    /// Canonical length k.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[SimpleElement] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.p == 0 && self.factors.is_empty()
    }

    /// Positive braids are exactly those with inf >= 0.
    pub fn is_positive(&self) -> bool {
        self.p >= 0
    }

    /// Image in Z under σ_i ↦ 1.
    pub fn exponent_sum(&self) -> i64 {
        let delta_sum = (self.n * (self.n - 1) / 2) as i64;
        self.p * delta_sum + self.factors.iter().map(|f| f.inversions() as i64).sum::<i64>()
    }

    /// Word length over the Garside generators (simples and their inverses).
    /// Equals exact BFS distance in Cay(B_n, S_Gar); see the geodesic tests.
    pub fn garside_geodesic_length(&self) -> u64 {
        let sup = self.sup().max(0);
        let inf = self.inf().min(0);
        (sup - inf) as u64
    }

    /// A braid word representing this element: Δ^p, then canonical factor words.
    pub fn to_word(&self) -> BraidWord {
        let n = self.n;
        let mut w = BraidWord::identity(n).expect("n validated");
        if self.p != 0 {
            let d = BraidWord::delta(n).expect("n validated");
            let step = if self.p > 0 { d } else { d.inverse() };
            for _ in 0..self.p.unsigned_abs() {
                w = w.concat(&step).expect("same n");
            }
        }
        for f in &self.factors {
            w = w.concat(&f.canonical_word()).expect("same n");
        }
        w
    }

    /// The initial factor ι = τ^{-p}(s_1), the part cycled to the back.
    pub fn initial_factor(&self) -> Option<SimpleElement> {
        self.factors.first().map(|s| tau_pow(s, -self.p))
    }

    /// The final factor s_k.
    pub fn final_factor(&self) -> Option<SimpleElement> {
        self.factors.last().cloned()
    }

    /// τ applied to the whole braid: Δ^{-1} x Δ.
    pub fn tau(&self) -> NormalForm {
        NormalForm {
            n: self.n,
            p: self.p,
            factors: self.factors.iter().map(|f| f.tau()).collect(),
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.p)?;
        for s in &self.factors {
            write!(f, " . {s}")?;
        }
        Ok(())
    }
}

pub(crate) fn tau_pow(s: &SimpleElement, p: i64) -> SimpleElement {
    if p.rem_euclid(2) == 0 {
        s.clone()
    } else {
        s.tau()
    }
}

/// Greedy pairwise left-weighting to a fixpoint.
///
/// Identity factors are dropped, Δ factors are commuted to the front (twisting
/// everything they pass by τ) and absorbed into p, and every adjacent pair is
/// slid until left-weighted. Quadratic in the number of factors.
fn normalize(n: usize, mut p: i64, mut fs: Vec<SimpleElement>) -> NormalForm {
    loop {
        let mut changed = false;

        // sweep out identities and deltas
        let mut i = 0;
        while i < fs.len() {
            if fs[i].is_identity() {
                fs.remove(i);
                changed = true;
            } else if fs[i].is_delta() {
                for f in fs[..i].iter_mut() {
                    *f = f.tau();
                }
                fs.remove(i);
                p += 1;
                changed = true;
            } else {
                i += 1;
            }
        }

        // left-weighting sweep: slide the head of each pair as far left as it goes
        let mut i = 0;
        while fs.len() >= 2 && i + 1 < fs.len() {
            let u = left_gcd_simple(&fs[i].right_complement(), &fs[i + 1])
                .expect("factors share n");
            if u.is_identity() {
                i += 1;
                continue;
            }
            changed = true;
            fs[i] = fs[i].perm_product(&u);
            let t = u.inverse_perm().perm_product(&fs[i + 1]);
            if t.is_identity() {
                fs.remove(i + 1);
            } else {
                fs[i + 1] = t;
            }
            // the enlarged factor may now accept more from the left
            i = i.saturating_sub(1);
        }

        if !changed {
            break;
        }
    }
    debug_assert!(fs.iter().all(|f| !f.is_identity() && !f.is_delta()));
    debug_assert!(fs
        .windows(2)
        .all(|w| is_left_weighted(&w[0], &w[1]).unwrap()));
    NormalForm { n, p, factors: fs }
}

/// Normal form of a braid word. Every word normalizes; this is the main
/// entry point for turning raw input into canonical braids.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let n = w.n();
    let delta = SimpleElement::delta(n);
    let mut p: i64 = 0;
    let mut fs: Vec<SimpleElement> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        let atom = SimpleElement::atom(n, i).expect("letter validated by BraidWord");
        if l > 0 {
            fs.push(atom);
        } else {
            // x·σ_i⁻¹ = Δ^{p-1} τ(x-factors) (Δ σ_i⁻¹), and Δ σ_i⁻¹ is simple
            p -= 1;
            for f in fs.iter_mut() {
                *f = f.tau();
            }
            fs.push(delta.perm_product(&atom));
        }
    }
    normalize(n, p, fs)
}

/// Product of two normal forms.
pub fn multiply(a: &NormalForm, b: &NormalForm) -> Result<NormalForm, BraidError> {
    if a.n != b.n {
        return Err(BraidError::StrandMismatch(a.n, b.n));
    }
    let mut fs: Vec<SimpleElement> = a.factors.iter().map(|f| tau_pow(f, b.p)).collect();
    fs.extend(b.factors.iter().cloned());
    Ok(normalize(a.n, a.p + b.p, fs))
}

/// Inverse of a normal form.
pub fn invert(a: &NormalForm) -> NormalForm {
    let n = a.n;
    let delta = SimpleElement::delta(n);
    let k = a.factors.len() as i64;
    // (Δ^p s_1⋯s_k)⁻¹ = Δ^{-p-k} · τ^{p+k-1}(Δ s_k⁻¹) ⋯ τ^{p+1}(Δ s_2⁻¹) τ^p(Δ s_1⁻¹)
    let mut fs = Vec::with_capacity(a.factors.len());
    for (j, s) in a.factors.iter().enumerate().rev() {
        let g = delta.perm_product(&s.inverse_perm());
        fs.push(tau_pow(&g, a.p + j as i64));
    }
    normalize(n, -a.p - k, fs)
}

/// First factor in the Δ-positive sense: Δ if inf > 0, else s_1, else identity.
fn alpha_one(a: &NormalForm) -> SimpleElement {
    if a.p > 0 {
        SimpleElement::delta(a.n)
    } else if let Some(s) = a.factors.first() {
        s.clone()
    } else {
        SimpleElement::identity(a.n)
    }
}

/// Quotient u⁻¹·a for a simple u left-dividing a (a positive with u <= α1(a)).
fn left_quotient_by_simple(u: &SimpleElement, a: &NormalForm) -> NormalForm {
    let n = a.n;
    if a.p > 0 {
        // u⁻¹ Δ^p F = Δ^{p-1} τ^{p-1}(∂u) F
        let mut fs = vec![tau_pow(&u.right_complement(), a.p - 1)];
        fs.extend(a.factors.iter().cloned());
        normalize(n, a.p - 1, fs)
    } else {
        debug_assert!(a.p == 0 && !a.factors.is_empty());
        let mut fs = a.factors.clone();
        fs[0] = u.inverse_perm().perm_product(&fs[0]);
        normalize(n, 0, fs)
    }
}

/// Maximal common left divisor (prefix-order meet) of two braids.
pub fn gcd(a: &NormalForm, b: &NormalForm) -> Result<NormalForm, BraidError> {
    if a.n != b.n {
        return Err(BraidError::StrandMismatch(a.n, b.n));
    }
    let n = a.n;
    let m = a.p.min(b.p).min(0);
    // shift both into the positive monoid, take the positive gcd, shift back
    let mut x = multiply(&NormalForm::delta_power(n, -m), a)?;
    let mut y = multiply(&NormalForm::delta_power(n, -m), b)?;
    let mut parts: Vec<SimpleElement> = Vec::new();
    loop {
        let u = left_gcd_simple(&alpha_one(&x), &alpha_one(&y))?;
        if u.is_identity() {
            break;
        }
        x = left_quotient_by_simple(&u, &x);
        y = left_quotient_by_simple(&u, &y);
        parts.push(u);
    }
    multiply(&NormalForm::delta_power(n, m), &normalize(n, 0, parts))
}

/// Does d left-divide a (is d a prefix of a)?
pub fn left_divides_nf(d: &NormalForm, a: &NormalForm) -> Result<bool, BraidError> {
    Ok(&gcd(d, a)? == d)
}

/// Conjugate c⁻¹ · a · c.
pub fn conjugate(a: &NormalForm, c: &NormalForm) -> Result<NormalForm, BraidError> {
    multiply(&multiply(&invert(c), a)?, c)
}
