//! The rigid-conjugate census: sample random positive braids, count their
//! rigid conjugates, and fit the growth of the largest orbit against length.
//!
//! The random model: each sample is a product of ℓ uniformly random
//! nontrivial non-Δ simples, renormalized; draws whose canonical length
//! drops below ℓ are rejected and redrawn. The model, the PRNG and the seed
//! are echoed into the report, and a fixed seed reproduces the report
//! byte for byte.

use crate::conjugacy::{is_rigid, rigid_conjugates, sliding_circuit, Budget};
use crate::electric::{np_distance, ElectrifiedCaps};
use crate::error::BraidError;
use crate::normal::{multiply, NormalForm};
use crate::randmodel::{random_positive_braid, stream_rng, RNG_SPEC};
use crate::word::BraidWord;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize)]
pub struct CensusParams {
    pub n: usize,
    /// Canonical lengths to sweep; a single-length census is a one-entry sweep.
    pub lens: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
    /// Conjugation-step budget per sample.
    pub budget: u64,
    /// Record electrified-distance proxies for samples whose orbit exceeds 2ℓ.
    pub curve_proxy: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleRecord {
    pub index: usize,
    /// The sampled braid, as a word (reproducibility aid, not the contract).
    pub word: String,
    /// Whether the sample itself is rigid as drawn (cyclically left-weighted).
    pub rigid: bool,
    /// Size of the rigid-conjugate set, present whenever the sample has rigid
    /// conjugates at all (its sliding circuit is rigid).
    pub orbit_size: Option<usize>,
    pub budget_exhausted: bool,
    /// np_distance(1, x^m) for m = 1, 2 at a small radius; a translation-length
    /// proxy recorded only for orbits larger than 2ℓ.
    pub np_proxy: Option<Vec<Option<u32>>>,
}

/// Aggregate statistics. The histogram and max run over every sample with a
/// rigid conjugate; the modal size and the 2ℓ fraction are computed over the
/// samples that are themselves rigid, whose orbits the 2ℓ genericity claim is
/// about (non-rigid samples typically slide to shorter summit representatives
/// and contribute orbits of 2·(summit length) instead).
#[derive(Debug, Clone, Serialize)]
pub struct CensusAggregate {
    pub samples: usize,
    /// Samples that are rigid as drawn.
    pub rigid_samples: usize,
    /// Samples with a nonempty rigid-conjugate set.
    pub samples_with_orbit: usize,
    pub histogram: BTreeMap<usize, usize>,
    pub histogram_rigid: BTreeMap<usize, usize>,
    pub max_orbit: Option<usize>,
    pub modal_orbit_rigid: Option<usize>,
    pub fraction_exactly_two_len: Option<f64>,
    pub budget_exhaustions: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRun {
    pub len: usize,
    pub records: Vec<SampleRecord>,
    pub aggregate: CensusAggregate,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub params: CensusParams,
    pub rng: &'static str,
    pub runs: Vec<CensusRun>,
    /// Least-squares slope of ln(max orbit) vs ln(ℓ) across the sweep.
    pub fitted_exponent: Option<f64>,
}

/// Least-squares slope of ln y against ln x over points with positive values.
pub fn fit_log_log_exponent(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let m = logs.len() as f64;
    let sx: f64 = logs.iter().map(|(x, _)| x).sum();
    let sy: f64 = logs.iter().map(|(_, y)| y).sum();
    let sxx: f64 = logs.iter().map(|(x, _)| x * x).sum();
    let sxy: f64 = logs.iter().map(|(x, y)| x * y).sum();
    let denom = m * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        return None;
    }
    Some((m * sxy - sx * sy) / denom)
}

fn aggregate(records: &[SampleRecord], len: usize) -> CensusAggregate {
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut histogram_rigid: BTreeMap<usize, usize> = BTreeMap::new();
    for r in records {
        if let Some(k) = r.orbit_size {
            *histogram.entry(k).or_insert(0) += 1;
            if r.rigid {
                *histogram_rigid.entry(k).or_insert(0) += 1;
            }
        }
    }
    let max_orbit = histogram.keys().max().copied();
    let modal_orbit_rigid = histogram_rigid
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .map(|(k, _)| *k);
    let rigid_with_orbit: usize = histogram_rigid.values().sum();
    let fraction_exactly_two_len = if rigid_with_orbit > 0 {
        Some(histogram_rigid.get(&(2 * len)).copied().unwrap_or(0) as f64 / rigid_with_orbit as f64)
    } else {
        None
    };
    CensusAggregate {
        samples: records.len(),
        rigid_samples: records.iter().filter(|r| r.rigid).count(),
        samples_with_orbit: histogram.values().sum(),
        histogram,
        histogram_rigid,
        max_orbit,
        modal_orbit_rigid,
        fraction_exactly_two_len,
        budget_exhaustions: records.iter().filter(|r| r.budget_exhausted).count(),
    }
}

/// Run the census. Deterministic given the seed: sample i of the run at
/// length ℓ draws from the stream keyed by (ℓ << 32) | i.
pub fn rigid_census(params: &CensusParams) -> Result<CensusReport, BraidError> {
    if params.n < 3 {
        return Err(BraidError::StrandCount(params.n));
    }
    if params.samples == 0 || params.lens.is_empty() || params.lens.iter().any(|&l| l == 0) {
        return Err(BraidError::Permutation(
            "census needs samples >= 1 and lengths >= 1".into(),
        ));
    }
    let np_caps = ElectrifiedCaps {
        ball_cap: 60_000,
        ..ElectrifiedCaps::for_strands(params.n)
    };
    let mut runs = Vec::new();
    for &len in &params.lens {
        let mut records = Vec::with_capacity(params.samples);
        for index in 0..params.samples {
            let mut rng = stream_rng(params.seed, ((len as u64) << 32) | index as u64);
            let x = random_positive_braid(params.n, len, &mut rng)?;
            let rigid = is_rigid(&x);
            let mut budget = Budget::new(params.budget);
            let (orbit_size, budget_exhausted) = match sliding_circuit(&x, &mut budget) {
                Err(_) => (None, true),
                Ok(sc) => {
                    if !is_rigid(&sc.representative) {
                        (None, false)
                    } else {
                        match rigid_conjugates(&x, budget.remaining()) {
                            Ok(orbit) => (Some(orbit.len()), false),
                            Err(partial) => (Some(partial.partial.len()), true),
                        }
                    }
                }
            };
            let np_proxy = if params.curve_proxy
                && orbit_size.map(|k| k > 2 * len).unwrap_or(false)
            {
                let id = BraidWord::identity(params.n)?;
                let mut proxies = Vec::new();
                let mut power = NormalForm::identity(params.n);
                for _ in 0..2 {
                    power = multiply(&power, &x)?;
                    let d = np_distance(&id, &power.to_word(), 3, &np_caps)
                        .map(|r| r.distance)
                        .unwrap_or(None);
                    proxies.push(d);
                }
                Some(proxies)
            } else {
                None
            };
            records.push(SampleRecord {
                index,
                word: x.to_word().to_string(),
                rigid,
                orbit_size,
                budget_exhausted,
                np_proxy,
            });
        }
        let aggregate = aggregate(&records, len);
        runs.push(CensusRun {
            len,
            records,
            aggregate,
        });
    }
    let points: Vec<(f64, f64)> = runs
        .iter()
        .filter_map(|r| {
            r.aggregate
                .max_orbit
                .map(|m| (r.len as f64, m as f64))
        })
        .collect();
    let fitted_exponent = if points.len() >= 2 {
        fit_log_log_exponent(&points)
    } else {
        None
    };
    Ok(CensusReport {
        params: params.clone(),
        rng: RNG_SPEC,
        runs,
        fitted_exponent,
    })
}
