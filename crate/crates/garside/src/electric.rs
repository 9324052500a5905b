//! The electrified Cayley graph Cay(B_n, S_NP) and shadows of normal-form paths.
//!
//! S_NP extends the Garside generators by every element of the normalizer of
//! every standard parabolic ⟨σ_i,…,σ_j⟩ (realized as the stabilizer of the
//! round curve about punctures i..j+1) and by the cyclic subgroup ⟨Δ²⟩. The
//! generating set is infinite, so distance queries materialize an explicitly
//! truncated generator list; every truncation shows up in the report.

use crate::ball::{cayley_ball, garside_generators, BallLimits};
use crate::curves::{act_braid, round_curve, Curve};
use crate::error::CurveError;
use crate::normal::{invert, multiply, normal_form, NormalForm};
use crate::word::BraidWord;
use serde::Serialize;
use std::collections::BTreeSet;

/// Tags (i, j) of the standard parabolics ⟨σ_i,…,σ_j⟩, 1 <= i <= j < n.
/// The full-group tag (1, n−1) is skipped: its enclosing curve is the
/// boundary-parallel one and the "parabolic" would be all of B_n.
pub fn parabolic_tags(n: usize) -> Vec<(usize, usize)> {
    let mut tags = Vec::new();
    for i in 1..n {
        for j in i..n {
            if (i, j) == (1, n - 1) {
                continue;
            }
            tags.push((i, j));
        }
    }
    tags
}

/// Does g normalize ⟨σ_i,…,σ_j⟩, i.e. stabilize the round curve about
/// punctures i..j+1?
pub fn stabilizes_round_curve(g: &BraidWord, i: usize, j: usize) -> Result<bool, CurveError> {
    let n = g.n();
    if !(1 <= i && i <= j && j < n) || (i, j) == (1, n - 1) {
        return Err(CurveError::ParabolicTag { i, j, n });
    }
    let c = round_curve(i, j + 1, n)?;
    Ok(act_braid(g, &c)? == c)
}

/// Which clause admitted a braid into S_NP.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NpClause {
    /// A nontrivial simple or the inverse of one.
    GarsideGenerator,
    /// A nonzero power of the full twist Δ².
    DeltaSquaredPower,
    /// Normalizes the parabolic ⟨σ_i,…,σ_j⟩.
    ParabolicNormalizer { i: usize, j: usize },
}

pub(crate) fn garside_generator_class(nf: &NormalForm) -> bool {
    let (p, k) = (nf.inf(), nf.canonical_length() as i64);
    // simple: (0,1) or (1,0); inverse of simple: (-1,1) or (-1,0)
    matches!((p, k), (0, 1) | (1, 0) | (-1, 1) | (-1, 0))
}

/// Membership in the electrified generating set, reporting the clause that
/// fired (simples first, then the Δ² cone, then normalizers). The identity is
/// not a generator.
pub fn np_generator_member(g: &BraidWord) -> Result<Option<NpClause>, CurveError> {
    let nf = normal_form(g);
    if nf.is_identity() {
        return Ok(None);
    }
    if garside_generator_class(&nf) {
        return Ok(Some(NpClause::GarsideGenerator));
    }
    if nf.canonical_length() == 0 && nf.inf() % 2 == 0 {
        return Ok(Some(NpClause::DeltaSquaredPower));
    }
    for (i, j) in parabolic_tags(g.n()) {
        if stabilizes_round_curve(g, i, j)? {
            return Ok(Some(NpClause::ParabolicNormalizer { i, j }));
        }
    }
    Ok(None)
}

/// Truncation caps for materializing the electrified graph.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ElectrifiedCaps {
    /// Normalizer elements are harvested from the S_Gar ball of this radius.
    pub normalizer_word_radius: u32,
    /// Node cap for that harvest ball.
    pub normalizer_ball_cap: usize,
    /// Δ^{2k} jump generators are added for 0 < |k| <= this.
    pub delta_power_cap: i64,
    /// Node cap for the distance ball itself.
    pub ball_cap: usize,
}

impl ElectrifiedCaps {
    pub fn for_strands(n: usize) -> Self {
        // desk-scale defaults; everything is echoed into reports
        let normalizer_word_radius = match n {
            0..=3 => 4,
            4 => 3,
            _ => 2,
        };
        ElectrifiedCaps {
            normalizer_word_radius,
            normalizer_ball_cap: 200_000,
            delta_power_cap: 4,
            ball_cap: 400_000,
        }
    }
}

/// The materialized, truncated S_NP generator list.
#[derive(Debug)]
pub struct NpGeneratorSet {
    pub n: usize,
    pub generators: Vec<NormalForm>,
    pub normalizer_elements: usize,
    /// The harvest ball hit its node cap, so normalizer coverage is partial.
    pub truncated: bool,
}

/// Enumerate the truncated S_NP: Garside generators, Δ^{2k} jumps, and every
/// braid in the S_Gar ball of the configured radius that stabilizes a round
/// curve.
pub fn np_generators(n: usize, caps: &ElectrifiedCaps) -> Result<NpGeneratorSet, CurveError> {
    let sgar = garside_generators(n);
    let ball = cayley_ball(
        n,
        &sgar,
        BallLimits {
            radius: caps.normalizer_word_radius,
            node_cap: caps.normalizer_ball_cap,
        },
        None,
    );
    let tags = parabolic_tags(n);
    let mut gens: BTreeSet<NormalForm> = sgar.iter().cloned().collect();
    let mut normalizer_elements = 0;
    let mut candidates: Vec<&NormalForm> = ball.dist.keys().collect();
    candidates.sort();
    for nf in candidates {
        if nf.is_identity() || gens.contains(nf) {
            continue;
        }
        let w = nf.to_word();
        for &(i, j) in &tags {
            if stabilizes_round_curve(&w, i, j)? {
                gens.insert(nf.clone());
                normalizer_elements += 1;
                break;
            }
        }
    }
    for k in 1..=caps.delta_power_cap {
        gens.insert(NormalForm::delta_power(n, 2 * k));
        gens.insert(NormalForm::delta_power(n, -2 * k));
    }
    Ok(NpGeneratorSet {
        n,
        generators: gens.into_iter().collect(),
        normalizer_elements,
        truncated: ball.cap_hit,
    })
}

/// Outcome of a truncated-graph distance query.
#[derive(Debug, Clone, Serialize)]
pub struct NpDistanceReport {
    pub distance: Option<u32>,
    pub radius: u32,
    pub ball_size: usize,
    pub ball_cap_hit: bool,
    pub generator_count: usize,
    pub normalizer_elements: usize,
    pub generators_truncated: bool,
    pub caps: ElectrifiedCaps,
}

/// Exact distance from x to y in the truncated electrified graph, if at most
/// `radius`; `None` means "greater than radius as far as the truncated graph
/// can tell". A hit node cap is an explicit resource condition in the report.
pub fn np_distance(
    x: &BraidWord,
    y: &BraidWord,
    radius: u32,
    caps: &ElectrifiedCaps,
) -> Result<NpDistanceReport, CurveError> {
    if x.n() != y.n() {
        return Err(CurveError::Braid(crate::error::BraidError::StrandMismatch(
            x.n(),
            y.n(),
        )));
    }
    let n = x.n();
    let target = multiply(&invert(&normal_form(x)), &normal_form(y))
        .expect("strand counts checked");
    let gens = np_generators(n, caps)?;
    let out = cayley_ball(
        n,
        &gens.generators,
        BallLimits {
            radius,
            node_cap: caps.ball_cap,
        },
        Some(&target),
    );
    Ok(NpDistanceReport {
        distance: out.target_distance,
        radius,
        ball_size: out.dist.len(),
        ball_cap_hit: out.cap_hit,
        generator_count: gens.generators.len(),
        normalizer_elements: gens.normalizer_elements,
        generators_truncated: gens.truncated,
        caps: *caps,
    })
}

/// One vertex of a shadow: the normal-form path prefix and the image of the
/// base curve under it.
#[derive(Debug, Clone, Serialize)]
pub struct ShadowStep {
    pub prefix: String,
    pub curve: Curve,
    /// The edge into this vertex is an S_NP generator (always true for
    /// normal-form paths; recorded as the Lipschitz witness).
    pub edge_in_np: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ShadowReport {
    pub n: usize,
    pub base: (usize, usize),
    pub steps: Vec<ShadowStep>,
    /// Number of edges of the normal-form path (= |p| + canonical length).
    pub path_length: u64,
    pub endpoint_distance: Option<u32>,
    /// path_length / endpoint_distance; 1.0 for the empty path.
    pub ratio: Option<f64>,
    /// path_length − endpoint_distance.
    pub defect: Option<i64>,
    pub lipschitz_ok: bool,
    pub distance_report: NpDistanceReport,
}

/// Walk the normal-form path of `a` (Δ steps first, then the factors), record
/// the image of the base round curve at every prefix, and compare the path
/// length against the electrified distance between its endpoints.
pub fn shadow_path(
    a: &NormalForm,
    base: (usize, usize),
    radius: u32,
    caps: &ElectrifiedCaps,
) -> Result<ShadowReport, CurveError> {
    let n = a.n();
    let base_curve = round_curve(base.0, base.1, n)?;
    let mut prefixes: Vec<NormalForm> = vec![NormalForm::identity(n)];
    for m in 1..=a.inf().abs() {
        prefixes.push(NormalForm::delta_power(n, a.inf().signum() * m));
    }
    let mut cur = NormalForm::delta_power(n, a.inf());
    for f in a.factors() {
        cur = multiply(&cur, &NormalForm::from_simple(f)).expect("same n");
        prefixes.push(cur.clone());
    }
    debug_assert_eq!(&prefixes[prefixes.len() - 1], a);
    debug_assert_eq!(
        prefixes.len(),
        a.canonical_length() + a.inf().unsigned_abs() as usize + 1
    );

    let mut steps = Vec::with_capacity(prefixes.len());
    let mut lipschitz_ok = true;
    for (idx, pre) in prefixes.iter().enumerate() {
        let curve = act_braid(&pre.to_word(), &base_curve)?;
        let edge_in_np = if idx == 0 {
            None
        } else {
            let quot = multiply(&invert(&prefixes[idx - 1]), pre).expect("same n");
            let member = np_generator_member(&quot.to_word())?.is_some();
            lipschitz_ok &= member;
            Some(member)
        };
        steps.push(ShadowStep {
            prefix: pre.to_word().to_string(),
            curve,
            edge_in_np,
        });
    }

    let path_length = (prefixes.len() - 1) as u64;
    let id_word = BraidWord::identity(n)?;
    let report = np_distance(&id_word, &a.to_word(), radius, caps)?;
    let (ratio, defect) = match report.distance {
        Some(0) | None if path_length == 0 => (Some(1.0), Some(0)),
        Some(d) if d > 0 => (
            Some(path_length as f64 / d as f64),
            Some(path_length as i64 - d as i64),
        ),
        Some(_) => (Some(1.0), Some(path_length as i64)),
        None => (None, None),
    };
    Ok(ShadowReport {
        n,
        base,
        steps,
        path_length,
        endpoint_distance: report.distance,
        ratio,
        defect,
        lipschitz_ok,
        distance_report: report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabolic_tags_exclude_whole_group() {
        assert_eq!(parabolic_tags(3), vec![(1, 1), (2, 2)]);
        assert_eq!(parabolic_tags(4), vec![(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)]);
    }

    #[test]
    fn stabilizer_examples() {
        // σ1 preserves the curve about punctures {1,2}
        let s1 = BraidWord::parse(3, "1").unwrap();
        assert!(stabilizes_round_curve(&s1, 1, 1).unwrap());
        // σ2 moves it
        let s2 = BraidWord::parse(3, "2").unwrap();
        assert!(!stabilizes_round_curve(&s2, 1, 1).unwrap());
        // Δ² stabilizes every tag
        let dd = BraidWord::delta_squared(4).unwrap();
        for (i, j) in parabolic_tags(4) {
            assert!(stabilizes_round_curve(&dd, i, j).unwrap());
        }
        // out-of-range tag
        assert!(stabilizes_round_curve(&s1, 1, 2).is_err());
    }

    #[test]
    fn np_membership_examples() {
        let w = |s: &str| BraidWord::parse(3, s).unwrap();
        assert_eq!(
            np_generator_member(&w("1")).unwrap(),
            Some(NpClause::GarsideGenerator)
        );
        assert_eq!(
            np_generator_member(&w("1 2 1 1 2 1")).unwrap(),
            Some(NpClause::DeltaSquaredPower)
        );
        // σ1² is not simple and not central, but normalizes ⟨σ1⟩
        assert_eq!(
            np_generator_member(&w("1 1")).unwrap(),
            Some(NpClause::ParabolicNormalizer { i: 1, j: 1 })
        );
        // a pseudo-Anosov representative is in no clause
        assert_eq!(np_generator_member(&w("1 -2")).unwrap(), None);
        assert_eq!(np_generator_member(&w("")).unwrap(), None);
    }

    #[test]
    fn distance_one_to_generators() {
        let caps = ElectrifiedCaps::for_strands(3);
        let id = BraidWord::identity(3).unwrap();
        for target in ["1", "2 1", "1 2 1", "1 1 2 1 1 2", "1 2 1 1 2 1 1 2 1 1 2 1"] {
            let t = BraidWord::parse(3, target).unwrap();
            let r = np_distance(&id, &t, 3, &caps).unwrap();
            assert_eq!(r.distance, Some(1), "target {target}");
        }
    }

    #[test]
    fn shadow_of_delta_powers() {
        let caps = ElectrifiedCaps::for_strands(3);
        // even powers live on the ⟨Δ²⟩ cone
        let rep = shadow_path(&NormalForm::delta_power(3, 4), (1, 2), 3, &caps).unwrap();
        assert_eq!(rep.steps.len(), 5);
        assert_eq!(rep.path_length, 4);
        assert!(rep.lipschitz_ok);
        assert_eq!(rep.endpoint_distance, Some(1));
        // odd powers in B_3 need one more step (Δ³ = Δ²·Δ, and Δ³ is no generator)
        let rep = shadow_path(&NormalForm::delta_power(3, 3), (1, 2), 3, &caps).unwrap();
        assert_eq!(rep.steps.len(), 4);
        assert_eq!(rep.endpoint_distance, Some(2));
    }

    #[test]
    fn shadow_identity_is_single_point() {
        let caps = ElectrifiedCaps::for_strands(3);
        let a = NormalForm::identity(3);
        let rep = shadow_path(&a, (1, 2), 2, &caps).unwrap();
        assert_eq!(rep.steps.len(), 1);
        assert_eq!(rep.ratio, Some(1.0));
        assert_eq!(rep.defect, Some(0));
        assert!(rep.lipschitz_ok);
    }
}
