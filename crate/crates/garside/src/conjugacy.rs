//! Conjugacy machinery: cycling, decycling, cyclic sliding, rigidity,
//! exhaustive enumeration of rigid conjugates, and the conjugacy decision.
//!
//! A braid is rigid when its normal form is cyclically left-weighted: the
//! wrap-around pair (s_k, τ^{-p}(s_1)) is left-weighted. Pure Δ-powers (k = 0)
//! are taken to be rigid by convention; cyclic sliding fixes them and the
//! definition is vacuous there.
//!
//! Every budget here counts conjugation steps and exhaustion is an explicit
//! outcome carrying whatever was found, never silently truncated data.

use crate::error::BraidError;
use crate::normal::{conjugate, invert, multiply, NormalForm};
use crate::simple::{all_simples, is_left_weighted, left_gcd_simple, SimpleElement};
use std::collections::{BTreeMap, HashMap, VecDeque};

/// Step-counting budget shared by the conjugacy searches.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    remaining: u64,
}

impl Budget {
    pub fn new(steps: u64) -> Self {
        Budget { remaining: steps }
    }
    fn spend(&mut self) -> bool {
        if self.remaining == 0 {
            false
        } else {
            self.remaining -= 1;
            true
        }
    }
    pub fn remaining(&self) -> u64 {
        self.remaining
    }
}

/// Cycling: conjugate by the initial factor ι(a) = τ^{-p}(s_1), moving the
/// first factor to the back. Pure Δ-powers are returned unchanged.
pub fn cycling(a: &NormalForm) -> NormalForm {
    match a.initial_factor() {
        None => a.clone(),
        Some(iota) => conjugate(a, &NormalForm::from_simple(&iota)).expect("same n"),
    }
}

/// Decycling: conjugate by s_k⁻¹, moving the final factor to the front.
pub fn decycling(a: &NormalForm) -> NormalForm {
    match a.final_factor() {
        None => a.clone(),
        Some(phi) => conjugate(a, &invert(&NormalForm::from_simple(&phi))).expect("same n"),
    }
}

/// The preferred prefix 𝔭(a) = ι(a) ∧ ∂(φ(a)); trivial exactly on rigid
/// braids and on Δ-powers.
pub fn preferred_prefix(a: &NormalForm) -> SimpleElement {
    let n = a.n();
    match (a.initial_factor(), a.final_factor()) {
        (Some(iota), Some(phi)) => {
            left_gcd_simple(&iota, &phi.right_complement()).expect("same n")
        }
        _ => SimpleElement::identity(n),
    }
}

/// Cyclic sliding: conjugation by the preferred prefix. Reaches a periodic
/// orbit (the sliding circuit) in finitely many steps; fixes rigid braids.
pub fn cyclic_sliding(a: &NormalForm) -> NormalForm {
    cyclic_sliding_with_conjugator(a).0
}

pub fn cyclic_sliding_with_conjugator(a: &NormalForm) -> (NormalForm, NormalForm) {
    let p = NormalForm::from_simple(&preferred_prefix(a));
    (conjugate(a, &p).expect("same n"), p)
}

/// Is the normal form cyclically left-weighted?
pub fn is_rigid(a: &NormalForm) -> bool {
    match (a.final_factor(), a.initial_factor()) {
        (Some(phi), Some(iota)) => is_left_weighted(&phi, &iota).expect("same n"),
        _ => true, // Δ-powers: rigid by convention
    }
}

/// A sliding circuit reached from a base element, with the conjugator that
/// got there.
#[derive(Debug, Clone)]
pub struct SlidingCircuit {
    pub representative: NormalForm,
    /// c with c⁻¹ · base · c = representative.
    pub conjugator: NormalForm,
    /// The full periodic orbit of the representative under sliding.
    pub circuit: Vec<NormalForm>,
}

/// Iterate cyclic sliding until the trajectory revisits an element; the tail
/// from the first revisit on is the circuit.
pub fn sliding_circuit(a: &NormalForm, budget: &mut Budget) -> Result<SlidingCircuit, BraidError> {
    let n = a.n();
    let mut seen: HashMap<NormalForm, usize> = HashMap::new();
    let mut trajectory: Vec<(NormalForm, NormalForm)> = Vec::new(); // (element, cumulative conjugator)
    let mut cur = a.clone();
    let mut conj = NormalForm::identity(n);
    loop {
        if let Some(&start) = seen.get(&cur) {
            let circuit: Vec<NormalForm> =
                trajectory[start..].iter().map(|(e, _)| e.clone()).collect();
            let (representative, conjugator) = trajectory[start].clone();
            return Ok(SlidingCircuit {
                representative,
                conjugator,
                circuit,
            });
        }
        seen.insert(cur.clone(), trajectory.len());
        trajectory.push((cur.clone(), conj.clone()));
        if !budget.spend() {
            return Err(BraidError::Permutation(format!(
                "sliding budget exhausted after {} steps",
                trajectory.len()
            )));
        }
        let (next, prefix) = cyclic_sliding_with_conjugator(&cur);
        conj = multiply(&conj, &prefix)?;
        cur = next;
    }
}

/// The set of rigid conjugates of a base element, each with a conjugator
/// witness from the base point.
#[derive(Debug, Clone)]
pub struct ConjugacyOrbit {
    pub base: NormalForm,
    /// element -> c with c⁻¹ · base · c = element; deterministic order.
    pub elements: BTreeMap<NormalForm, NormalForm>,
}

impl ConjugacyOrbit {
    pub fn len(&self) -> usize {
        self.elements.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Budget exhaustion carrying the partial orbit found so far.
#[derive(Debug, Clone)]
pub struct OrbitBudgetExhausted {
    pub partial: ConjugacyOrbit,
}

/// Enumerate all rigid conjugates of `a`.
///
/// The base is first driven to its sliding circuit; if the circuit is not
/// rigid, `a` has no rigid conjugates and the orbit is empty. Otherwise the
/// rigid set is the closure of the circuit representative under conjugation by
/// nontrivial simples, keeping rigid results. Minimal simple conjugators
/// connect the rigid set through rigid elements, so this closure is complete;
/// the small-scale brute-force suite cross-checks that claim rather than
/// citing it.
pub fn rigid_conjugates(
    a: &NormalForm,
    budget: u64,
) -> Result<ConjugacyOrbit, OrbitBudgetExhausted> {
    let n = a.n();
    let mut budget = Budget::new(budget);
    let empty = ConjugacyOrbit {
        base: a.clone(),
        elements: BTreeMap::new(),
    };
    let sc = match sliding_circuit(a, &mut budget) {
        Ok(sc) => sc,
        Err(_) => {
            return Err(OrbitBudgetExhausted { partial: empty });
        }
    };
    if !is_rigid(&sc.representative) {
        return Ok(empty);
    }
    let simples: Vec<NormalForm> = all_simples(n)
        .into_iter()
        .filter(|s| !s.is_identity())
        .map(|s| NormalForm::from_simple(&s))
        .collect();
    let mut elements: BTreeMap<NormalForm, NormalForm> = BTreeMap::new();
    elements.insert(sc.representative.clone(), sc.conjugator.clone());
    let mut queue: VecDeque<NormalForm> = VecDeque::new();
    queue.push_back(sc.representative.clone());
    while let Some(e) = queue.pop_front() {
        let c_e = elements[&e].clone();
        for s in &simples {
            if !budget.spend() {
                return Err(OrbitBudgetExhausted {
                    partial: ConjugacyOrbit {
                        base: a.clone(),
                        elements,
                    },
                });
            }
            let e2 = conjugate(&e, s).expect("same n");
            if !is_rigid(&e2) || elements.contains_key(&e2) {
                continue;
            }
            let c2 = multiply(&c_e, s).expect("same n");
            debug_assert_eq!(conjugate(a, &c2).expect("same n"), e2);
            elements.insert(e2.clone(), c2);
            queue.push_back(e2);
        }
    }
    Ok(ConjugacyOrbit {
        base: a.clone(),
        elements,
    })
}

/// Tri-state conjugacy answer; indeterminate is explicitly distinct from "no".
#[derive(Debug, Clone)]
pub enum ConjugacyAnswer {
    /// With c satisfying c⁻¹ · a · c = b, verified before returning.
    Conjugate { conjugator: NormalForm },
    NotConjugate,
    /// The budget ran out before the search settled the question.
    Indeterminate,
}

/// Is this element inside its own sliding circuit?
fn in_own_circuit(e: &NormalForm, budget: &mut Budget) -> Option<bool> {
    let mut cur = cyclic_sliding(e);
    let mut seen: HashMap<NormalForm, ()> = HashMap::new();
    loop {
        if &cur == e {
            return Some(true);
        }
        if seen.contains_key(&cur) {
            return Some(false);
        }
        if !budget.spend() {
            return None;
        }
        seen.insert(cur.clone(), ());
        cur = cyclic_sliding(&cur);
    }
}

/// Decide conjugacy by driving both elements to sliding circuits and closing
/// the set of sliding circuits of `a` under conjugation by nontrivial simples.
pub fn are_conjugate(
    a: &NormalForm,
    b: &NormalForm,
    budget: u64,
) -> Result<ConjugacyAnswer, BraidError> {
    if a.n() != b.n() {
        return Err(BraidError::StrandMismatch(a.n(), b.n()));
    }
    let n = a.n();
    if a.exponent_sum() != b.exponent_sum() {
        return Ok(ConjugacyAnswer::NotConjugate);
    }
    let mut budget = Budget::new(budget);
    let sc_a = match sliding_circuit(a, &mut budget) {
        Ok(sc) => sc,
        Err(_) => return Ok(ConjugacyAnswer::Indeterminate),
    };
    let sc_b = match sliding_circuit(b, &mut budget) {
        Ok(sc) => sc,
        Err(_) => return Ok(ConjugacyAnswer::Indeterminate),
    };
    let ra = &sc_a.representative;
    let rb = &sc_b.representative;
    // inf, sup and rigidity agree across the set of sliding circuits
    if ra.inf() != rb.inf() || ra.canonical_length() != rb.canonical_length() {
        return Ok(ConjugacyAnswer::NotConjugate);
    }
    let rigid_class = is_rigid(ra);
    if rigid_class != is_rigid(rb) {
        return Ok(ConjugacyAnswer::NotConjugate);
    }

    let simples: Vec<NormalForm> = all_simples(n)
        .into_iter()
        .filter(|s| !s.is_identity())
        .map(|s| NormalForm::from_simple(&s))
        .collect();
    let mut elements: BTreeMap<NormalForm, NormalForm> = BTreeMap::new();
    elements.insert(ra.clone(), NormalForm::identity(n));
    let mut queue: VecDeque<NormalForm> = VecDeque::new();
    queue.push_back(ra.clone());

    let finish = |w: &NormalForm| -> ConjugacyAnswer {
        // b = cb rb cb⁻¹ and rb = w⁻¹ ra w, ra = ca⁻¹ a ca
        let c = multiply(&multiply(&sc_a.conjugator, w).expect("n"), &invert(&sc_b.conjugator))
            .expect("n");
        debug_assert_eq!(&conjugate(a, &c).expect("n"), b);
        ConjugacyAnswer::Conjugate { conjugator: c }
    };
    if let Some(w) = elements.get(rb) {
        return Ok(finish(w));
    }
    while let Some(e) = queue.pop_front() {
        let c_e = elements[&e].clone();
        for s in &simples {
            if !budget.spend() {
                return Ok(ConjugacyAnswer::Indeterminate);
            }
            let e2 = conjugate(&e, s)?;
            if elements.contains_key(&e2) {
                continue;
            }
            // keep only elements lying in their own sliding circuit
            let keep = if rigid_class {
                is_rigid(&e2)
            } else {
                match in_own_circuit(&e2, &mut budget) {
                    Some(k) => k,
                    None => return Ok(ConjugacyAnswer::Indeterminate),
                }
            };
            if !keep {
                continue;
            }
            let c2 = multiply(&c_e, s)?;
            if &e2 == rb {
                return Ok(finish(&c2));
            }
            elements.insert(e2.clone(), c2);
            queue.push_back(e2);
        }
    }
    Ok(ConjugacyAnswer::NotConjugate)
}
