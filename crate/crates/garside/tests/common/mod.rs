//! Shared test oracles, independent of the library's computation paths.
//!
//! The main oracle is the Artin action of B_n on the free group F_n =
//! π₁ of the punctured disk: it is faithful, exact, and implemented here with
//! nothing but word substitution and free reduction, so it cross-checks both
//! the normal forms and the Dynnikov curve action from a different direction.

// each test target uses its own subset of these helpers
#![allow(dead_code)]

use garside::normal::NormalForm;
use garside::simple::{is_left_weighted, proper_simples, SimpleElement};
use garside::word::BraidWord;

/// Words in F_n: nonzero i32 letters, generator indices 1..=n.
pub type FreeWord = Vec<i32>;

pub fn free_reduce(w: &[i32]) -> FreeWord {
    let mut out: FreeWord = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn free_inverse(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|&x| -x).collect()
}

/// One Artin generator acting on a free word:
/// σ_i: g_i ↦ g_i g_{i+1} g_i⁻¹, g_{i+1} ↦ g_i.
fn artin_letter(letter: i64, w: &[i32]) -> FreeWord {
    let i = letter.unsigned_abs() as i32;
    let mut out: FreeWord = Vec::with_capacity(3 * w.len());
    for &x in w {
        let g = x.abs();
        let image: FreeWord = if letter > 0 {
            if g == i {
                vec![i, i + 1, -i]
            } else if g == i + 1 {
                vec![i]
            } else {
                vec![g]
            }
        } else if g == i {
            vec![i + 1]
        } else if g == i + 1 {
            vec![-(i + 1), i, i + 1]
        } else {
            vec![g]
        };
        if x > 0 {
            out.extend(image);
        } else {
            out.extend(free_inverse(&image));
        }
    }
    free_reduce(&out)
}

pub fn artin_apply(braid: &BraidWord, w: &[i32]) -> FreeWord {
    let mut cur = free_reduce(w);
    for &l in braid.letters() {
        cur = artin_letter(l, &cur);
    }
    cur
}

/// Faithful equality of braid words: equal images of every basis generator.
pub fn pi1_words_equal(w1: &BraidWord, w2: &BraidWord) -> bool {
    assert_eq!(w1.n(), w2.n());
    (1..=w1.n() as i32).all(|g| artin_apply(w1, &[g]) == artin_apply(w2, &[g]))
}

fn cyclic_reduce(w: &[i32]) -> FreeWord {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w = w[1..w.len() - 1].to_vec();
    }
    w
}

/// Canonical form of an unoriented conjugacy class: minimal rotation over the
/// cyclically reduced word and its inverse.
pub fn canonical_class(w: &[i32]) -> FreeWord {
    let w = cyclic_reduce(w);
    if w.is_empty() {
        return w;
    }
    let mut best: Option<FreeWord> = None;
    for u in [w.clone(), free_inverse(&w)] {
        for r in 0..u.len() {
            let mut cand = u[r..].to_vec();
            cand.extend_from_slice(&u[..r]);
            if best.as_ref().map(|b| &cand < b).unwrap_or(true) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// Does the braid stabilize the (unoriented) curve about punctures i..j,
/// which is the class of g_i g_{i+1} ⋯ g_j?
pub fn pi1_stabilizes_round(braid: &BraidWord, i: usize, j: usize) -> bool {
    let base: FreeWord = (i as i32..=j as i32).collect();
    canonical_class(&artin_apply(braid, &base)) == canonical_class(&base)
}

/// All left-weighted factor sequences of the exact length (inf-zero braids).
pub fn inf_zero_braids(n: usize, len: usize) -> Vec<NormalForm> {
    garside::allength::positive_inf_zero_braids(n, len)
}

/// Normal forms Δ^p s_1..s_k for p in the range and k <= max_len.
pub fn normal_forms_with(n: usize, p_range: std::ops::RangeInclusive<i64>, max_len: usize) -> Vec<NormalForm> {
    let mut out = Vec::new();
    for p in p_range {
        for k in 0..=max_len {
            for b in inf_zero_braids(n, k) {
                let shifted = garside::normal::multiply(&NormalForm::delta_power(n, p), &b)
                    .expect("same n");
                debug_assert_eq!(shifted.inf(), p);
                out.push(shifted);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Conjugators Δ^j · P with j in {0, 1} and P positive of canonical length
/// <= max_len. Conjugation by Δ² is trivial (it is central), so these exhaust
/// conjugation by everything positive with canonical length <= max_len.
pub fn conjugator_family(n: usize, max_len: usize) -> Vec<NormalForm> {
    let mut out = Vec::new();
    for j in 0..=1i64 {
        for k in 0..=max_len {
            for b in inf_zero_braids(n, k) {
                out.push(
                    garside::normal::multiply(&NormalForm::delta_power(n, j), &b).expect("same n"),
                );
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Sanity helper: every adjacent factor pair of a normal form is left-weighted.
pub fn assert_left_weighted(a: &NormalForm) {
    for w in a.factors().windows(2) {
        assert!(is_left_weighted(&w[0], &w[1]).unwrap(), "pair in {a}");
    }
    for f in a.factors() {
        assert!(!f.is_identity() && !f.is_delta());
    }
}

#[allow(dead_code)]
pub fn simples_of(n: usize) -> Vec<SimpleElement> {
    proper_simples(n)
}
