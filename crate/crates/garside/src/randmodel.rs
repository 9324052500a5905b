//! Deterministic random generation for experiments.
//!
//! Every stochastic experiment derives its randomness from a u64 seed through
//! ChaCha8 streams, one stream per sample, so reports are byte-identical given
//! the seed and sample schedules cannot leak between samples.

use crate::error::BraidError;
use crate::normal::NormalForm;
use crate::simple::SimpleElement;
use crate::word::{check_strands, BraidWord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Pinned PRNG identity, echoed into every report.
pub const RNG_SPEC: &str =
    "ChaCha8 (rand_chacha 0.3); stream seed = splitmix64(seed ^ splitmix64(index + 0x9E3779B97F4A7C15))";

pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Independent RNG stream for sample `index` of a run seeded with `seed`.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(index)))
}

/// Uniform nontrivial non-Δ simple element (rejection over uniform permutations).
pub fn random_proper_simple<R: Rng>(n: usize, rng: &mut R) -> Result<SimpleElement, BraidError> {
    check_strands(n)?;
    if n < 3 {
        // B_2 has no simples besides 1 and Δ
        return Err(BraidError::StrandCount(n));
    }
    loop {
        let mut perm: Vec<u8> = (0..n as u8).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            perm.swap(i, j);
        }
        let s = SimpleElement::from_perm(n, perm)?;
        if !s.is_identity() && !s.is_delta() {
            return Ok(s);
        }
    }
}

/// A pseudo-random positive braid of canonical length exactly `len`:
/// a product of `len` uniform nontrivial non-Δ simples, redrawn whenever
/// normalization shortens it. The result always has inf = 0.
pub fn random_positive_braid<R: Rng>(
    n: usize,
    len: usize,
    rng: &mut R,
) -> Result<NormalForm, BraidError> {
    check_strands(n)?;
    if len == 0 {
        return Ok(NormalForm::identity(n));
    }
    loop {
        let mut factors = Vec::with_capacity(len);
        for _ in 0..len {
            factors.push(random_proper_simple(n, rng)?);
        }
        let nf = NormalForm::from_parts(n, 0, factors)?;
        if nf.canonical_length() == len {
            debug_assert_eq!(nf.inf(), 0);
            return Ok(nf);
        }
    }
}

/// Seed-deterministic variant returning the braid as a word.
pub fn random_positive_braid_word(n: usize, len: usize, seed: u64) -> Result<BraidWord, BraidError> {
    let mut rng = stream_rng(seed, 0);
    Ok(random_positive_braid(n, len, &mut rng)?.to_word())
}

/// Uniform random braid word of the given letter length.
pub fn random_word<R: Rng>(n: usize, len: usize, rng: &mut R) -> Result<BraidWord, BraidError> {
    check_strands(n)?;
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n) as i64;
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters)
}
