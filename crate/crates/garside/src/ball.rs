//! Bounded breadth-first exploration of Cayley balls.
//!
//! All the graph experiments (geodesic checks, additional-length distances,
//! electrified distances) reduce to BFS over a finite, explicitly truncated
//! generator list, keyed by normal forms. Balls are grown from the identity;
//! left-invariance turns any pair query into a query against x⁻¹y.

use crate::normal::{multiply, NormalForm};
use std::collections::{HashMap, VecDeque};

#[derive(Debug, Clone, Copy)]
pub struct BallLimits {
    pub radius: u32,
    /// Hard cap on distinct vertices; exceeding it is reported, never silent.
    pub node_cap: usize,
}

#[derive(Debug)]
pub struct BallOutcome {
    /// Exact distances from the identity within the truncated generating set.
    pub dist: HashMap<NormalForm, u32>,
    /// True when the node cap stopped expansion before the radius was done.
    pub cap_hit: bool,
    /// Distance at which the target was found, if one was given and found.
    pub target_distance: Option<u32>,
}

/// BFS over right multiplication by `gens`, up to `limits.radius`.
///
/// If `target` is given the walk stops as soon as the target is generated;
/// BFS order makes that distance exact for the truncated graph.
pub fn cayley_ball(
    n: usize,
    gens: &[NormalForm],
    limits: BallLimits,
    target: Option<&NormalForm>,
) -> BallOutcome {
    let start = NormalForm::identity(n);
    let mut dist: HashMap<NormalForm, u32> = HashMap::new();
    dist.insert(start.clone(), 0);
    if let Some(t) = target {
        if t.is_identity() {
            return BallOutcome {
                dist,
                cap_hit: false,
                target_distance: Some(0),
            };
        }
    }
    let mut queue: VecDeque<(NormalForm, u32)> = VecDeque::new();
    queue.push_back((start, 0));
    let mut cap_hit = false;
    while let Some((v, d)) = queue.pop_front() {
        if d >= limits.radius {
            continue;
        }
        for g in gens {
            let w = multiply(&v, g).expect("generators share the strand count");
            if dist.contains_key(&w) {
                continue;
            }
            if dist.len() >= limits.node_cap {
                cap_hit = true;
                return BallOutcome {
                    dist,
                    cap_hit,
                    target_distance: None,
                };
            }
            dist.insert(w.clone(), d + 1);
            if let Some(t) = target {
                if &w == t {
                    return BallOutcome {
                        dist,
                        cap_hit,
                        target_distance: Some(d + 1),
                    };
                }
            }
            queue.push_back((w, d + 1));
        }
    }
    BallOutcome {
        dist,
        cap_hit,
        target_distance: None,
    }
}

/// The inverse-closed Garside generating set: all nontrivial simples and
/// their inverses (Δ and Δ⁻¹ included).
pub fn garside_generators(n: usize) -> Vec<NormalForm> {
    let mut gens = Vec::new();
    for s in crate::simple::all_simples(n) {
        if s.is_identity() {
            continue;
        }
        let nf = NormalForm::from_simple(&s);
        gens.push(crate::normal::invert(&nf));
        gens.push(nf);
    }
    gens.sort();
    gens.dedup();
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal::normal_form;
    use crate::word::BraidWord;

    #[test]
    fn ball_counts_small() {
        let gens = garside_generators(3);
        assert_eq!(gens.len(), 10);
        let out = cayley_ball(
            3,
            &gens,
            BallLimits {
                radius: 2,
                node_cap: 100_000,
            },
            None,
        );
        assert!(!out.cap_hit);
        assert_eq!(out.dist[&NormalForm::identity(3)], 0);
        // every generator is at distance 1
        for g in &gens {
            assert_eq!(out.dist[g], 1);
        }
    }

    #[test]
    fn target_distance_matches_geodesic_length() {
        let gens = garside_generators(3);
        for w in ["1 -2", "1 1", "1 2 1", "-1 -2 -1 1 1"] {
            let t = normal_form(&BraidWord::parse(3, w).unwrap());
            let out = cayley_ball(
                3,
                &gens,
                BallLimits {
                    radius: 6,
                    node_cap: 1_000_000,
                },
                Some(&t),
            );
            assert_eq!(
                out.target_distance,
                Some(t.garside_geodesic_length() as u32),
                "word {w}"
            );
        }
    }

    #[test]
    fn node_cap_is_reported() {
        let gens = garside_generators(3);
        let out = cayley_ball(
            3,
            &gens,
            BallLimits {
                radius: 4,
                node_cap: 20,
            },
            None,
        );
        assert!(out.cap_hit);
        assert!(out.dist.len() <= 20);
    }
}
