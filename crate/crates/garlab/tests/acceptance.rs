//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured numbers (visible with `--nocapture`). Thresholds are pinned
//! here, not tuned at runtime.
//!
//! Run with: cargo test -p garlab --test acceptance -- --nocapture

use garside::allength::{al_distance, al_generators, is_telescoping_triple, AlCaps};
use garside::ball::{cayley_ball, garside_generators, BallLimits};
use garside::census::{rigid_census, CensusParams};
use garside::conjugacy::{is_rigid, rigid_conjugates};
use garside::curves::{act_braid, all_round_curves, random_curve, words_equal_by_curve_action};
use garside::electric::{np_distance, shadow_path, ElectrifiedCaps};
use garside::normal::{conjugate, invert, multiply, normal_form, NormalForm};
use garside::randmodel::{random_word, stream_rng};
use garside::simple::proper_simples;
use garside::word::BraidWord;
use std::collections::BTreeSet;
use std::process::Command;

fn pass(criterion: &str, details: String) {
    println!("ACCEPTANCE {criterion}: PASS ({details})");
}

fn nf(n: usize, s: &str) -> NormalForm {
    normal_form(&BraidWord::parse(n, s).unwrap())
}

/// All normal forms Δ^p s_1..s_k with p in range, k <= max_len.
fn enumerate_braids(n: usize, ps: std::ops::RangeInclusive<i64>, max_len: usize) -> Vec<NormalForm> {
    let mut out = Vec::new();
    for p in ps {
        for k in 0..=max_len {
            for b in garside::allength::positive_inf_zero_braids(n, k) {
                out.push(multiply(&NormalForm::delta_power(n, p), &b).unwrap());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Criterion 1: normal-form equality agrees exactly with the curve-action
/// equality oracle on 1,000 random word pairs in each of B_3 and B_4,
/// word length <= 12. Tolerance: 0 mismatches.
#[test]
fn criterion_01_normal_form_oracle_equivalence() {
    let mut checked = 0usize;
    for n in [3usize, 4] {
        let mut rng = stream_rng(0xC1, n as u64);
        for trial in 0..1000 {
            let len1 = trial % 13;
            let w1 = random_word(n, len1, &mut rng).unwrap();
            let w2 = if trial % 2 == 0 {
                // an equality-preserving rewrite of w1: splice a cancelling pair
                let mut letters = w1.letters().to_vec();
                let g = ((trial / 2) % (n - 1) + 1) as i64;
                let pos = trial % (letters.len() + 1);
                letters.splice(pos..pos, [-g, g]);
                BraidWord::new(n, letters).unwrap()
            } else {
                random_word(n, (trial + 7) % 13, &mut rng).unwrap()
            };
            let by_nf = normal_form(&w1) == normal_form(&w2);
            let by_curves = words_equal_by_curve_action(&w1, &w2, 15, &mut rng).unwrap();
            assert_eq!(by_nf, by_curves, "mismatch on n={n}: '{w1}' vs '{w2}'");
            checked += 1;
        }
    }
    pass("C1 normal-form/curve oracle", format!("{checked} pairs, 0 mismatches"));
}

/// Criterion 2: garside_geodesic_length equals exact BFS distance in
/// Cay(B_3, S_Gar) for every braid with canonical length <= 3 and |inf| <= 2.
/// Tolerance: 0 mismatches.
#[test]
fn criterion_02_geodesic_property() {
    let braids = enumerate_braids(3, -2..=2, 3);
    let gens = garside_generators(3);
    let ball = cayley_ball(
        3,
        &gens,
        BallLimits {
            radius: 5,
            node_cap: 5_000_000,
        },
        None,
    );
    assert!(!ball.cap_hit, "ground-truth ball must complete");
    let mut checked = 0usize;
    for a in &braids {
        let bfs = *ball
            .dist
            .get(a)
            .unwrap_or_else(|| panic!("braid {a} outside radius-5 ball"));
        assert_eq!(
            bfs as u64,
            a.garside_geodesic_length(),
            "geodesic mismatch at {a}"
        );
        checked += 1;
    }
    pass(
        "C2 geodesic property",
        format!("{checked} braids vs BFS ball of {} nodes, 0 mismatches", ball.dist.len()),
    );
}

/// Criterion 3: census at n=4, ℓ=8 with >= 200 rigid samples; at least 50% of
/// rigid samples have orbit size exactly 2ℓ = 16 and the modal orbit size
/// among them is 16.
#[test]
fn criterion_03_generic_rigid_count() {
    let params = CensusParams {
        n: 4,
        lens: vec![8],
        samples: 5000,
        seed: 2024,
        budget: 5_000_000,
        curve_proxy: false,
    };
    let report = rigid_census(&params).unwrap();
    let agg = &report.runs[0].aggregate;
    assert!(
        agg.rigid_samples >= 200,
        "need >= 200 rigid samples, got {}",
        agg.rigid_samples
    );
    let frac = agg.fraction_exactly_two_len.unwrap();
    assert!(frac >= 0.5, "2l fraction {frac} below the 0.5 floor");
    assert_eq!(agg.modal_orbit_rigid, Some(16), "modal orbit size");
    assert_eq!(agg.budget_exhaustions, 0);
    pass(
        "C3 generic rigid count",
        format!(
            "{} rigid samples, fraction at 16: {:.4}, modal 16",
            agg.rigid_samples, frac
        ),
    );
}

/// Criterion 4: census sweep at n=3 over ℓ in {4,6,8,10,12}; the log-log fit
/// of max orbit size against ℓ has exponent <= 1.5 (hypothesis value 1).
#[test]
fn criterion_04_growth_exponent() {
    let params = CensusParams {
        n: 3,
        lens: vec![4, 6, 8, 10, 12],
        samples: 300,
        seed: 99,
        budget: 5_000_000,
        curve_proxy: false,
    };
    let report = rigid_census(&params).unwrap();
    let exponent = report.fitted_exponent.expect("sweep must fit");
    assert!(
        exponent <= 1.5,
        "fitted exponent {exponent} exceeds 1.5; investigate"
    );
    let maxes: Vec<Option<usize>> = report.runs.iter().map(|r| r.aggregate.max_orbit).collect();
    pass(
        "C4 growth exponent",
        format!("max orbits {maxes:?}, fitted exponent {exponent:.3} <= 1.5"),
    );
}

/// Criterion 5: rigid_conjugates equals brute-force enumeration over
/// conjugators of canonical length <= 6, for every positive braid of
/// canonical length <= 4 in B_3. Tolerance: 0 mismatches.
///
/// Conjugation by Δ² is central, so conjugators Δ^j·P with j in {0,1} and P
/// positive exhaust all conjugators of the given canonical length, and
/// braids are enumerated with inf in {0,1} for the same reason.
#[test]
fn criterion_05_rigid_set_completeness() {
    let braids = enumerate_braids(3, 0..=1, 4);
    let mut conjugators = Vec::new();
    for j in 0..=1i64 {
        for k in 0..=6usize {
            for b in garside::allength::positive_inf_zero_braids(3, k) {
                conjugators.push(multiply(&NormalForm::delta_power(3, j), &b).unwrap());
            }
        }
    }
    let mut checked = 0usize;
    for a in &braids {
        let orbit = rigid_conjugates(a, 50_000_000).unwrap();
        let enumerated: BTreeSet<NormalForm> = orbit.elements.keys().cloned().collect();
        let mut brute: BTreeSet<NormalForm> = BTreeSet::new();
        for c in &conjugators {
            let e = conjugate(a, c).unwrap();
            if is_rigid(&e) {
                brute.insert(e);
            }
        }
        assert_eq!(enumerated, brute, "rigid set mismatch at {a}");
        for (e, c) in &orbit.elements {
            assert_eq!(&conjugate(a, c).unwrap(), e, "conjugator witness at {a}");
        }
        checked += 1;
    }
    pass(
        "C5 rigid-set completeness",
        format!(
            "{checked} braids against {} conjugators, 0 mismatches",
            conjugators.len()
        ),
    );
}

/// Criterion 6: the disjoint-support pair certifies; d_AL(1, Δ^k) = 1 for
/// k in {±1, ±5}; d_AL(1, σ1σ3) = 1; and d_AL <= S_Gar distance on 100
/// random pairs within BFS radius 4. Tolerance: exact.
#[test]
fn criterion_06_telescoping_and_al_graph() {
    // certificate for (σ1, σ3) in B_4
    let cert = is_telescoping_triple(&nf(4, "1"), &nf(4, "3"))
        .unwrap()
        .expect("disjoint-support pair certifies");
    assert_eq!(cert.canonical_length, 1);

    let caps = AlCaps::default();
    let e4 = NormalForm::identity(4);
    for k in [1i64, -1, 5, -5] {
        let d = al_distance(&e4, &NormalForm::delta_power(4, k), 2, &caps)
            .unwrap()
            .distance;
        assert_eq!(d, Some(1), "d_AL(1, Delta^{k})");
    }
    assert_eq!(
        al_distance(&e4, &nf(4, "1 3"), 2, &caps).unwrap().distance,
        Some(1)
    );

    // subordination on 100 random pairs in B_3, via one shared ball at the
    // identity (d_AL is left-invariant, so d(x,y) = d(1, x⁻¹y))
    let set = al_generators(3, &caps);
    let mut gens = set.generators.clone();
    for k in 1..=13i64 {
        gens.push(NormalForm::delta_power(3, k));
        gens.push(NormalForm::delta_power(3, -k));
    }
    gens.sort();
    gens.dedup();
    let ball = cayley_ball(
        3,
        &gens,
        BallLimits {
            radius: 4,
            node_cap: 2_000_000,
        },
        None,
    );
    assert!(!ball.cap_hit);
    let mut rng = stream_rng(0xC6, 0);
    let mut checked = 0usize;
    while checked < 100 {
        let x = normal_form(&random_word(3, 6, &mut rng).unwrap());
        let m = checked % 5;
        let mut y = x.clone();
        for _ in 0..m {
            let step = normal_form(&random_word(3, 1, &mut rng).unwrap());
            y = multiply(&y, &step).unwrap();
        }
        let target = multiply(&invert(&x), &y).unwrap();
        let dgar = target.garside_geodesic_length();
        if dgar > 4 {
            continue;
        }
        let dal = *ball
            .dist
            .get(&target)
            .unwrap_or_else(|| panic!("target {target} missing from radius-4 ball"));
        assert!(
            (dal as u64) <= dgar || (dgar == 0 && dal == 0),
            "d_AL {dal} > d_Gar {dgar} at {target}"
        );
        checked += 1;
    }
    pass(
        "C6 telescoping / C_AL",
        format!(
            "certificate ok, Delta-powers and σ1σ3 at distance 1, {checked} pairs subordinate (ball {} nodes)",
            ball.dist.len()
        ),
    );
}

/// Criterion 7: braid relations, inverse law, and Δ²-acts-trivially on all
/// round curves and 100 random curves for n in {3,4,5}. Tolerance: exact.
#[test]
fn criterion_07_curve_action_invariants() {
    let mut checked = 0usize;
    for n in [3usize, 4, 5] {
        let mut rng = stream_rng(0xC7, n as u64);
        let mut curves: Vec<_> = all_round_curves(n).into_iter().map(|(_, c)| c).collect();
        for _ in 0..100 {
            curves.push(random_curve(n, &mut rng).unwrap());
        }
        let dd = BraidWord::delta_squared(n).unwrap();
        for c in &curves {
            for i in 1..n as i64 {
                assert_eq!(c.act(i).unwrap().act(-i).unwrap(), c.clone(), "inverse law");
            }
            for i in 1..n - 1 {
                let w1 = BraidWord::new(n, vec![i as i64, i as i64 + 1, i as i64]).unwrap();
                let w2 = BraidWord::new(n, vec![i as i64 + 1, i as i64, i as i64 + 1]).unwrap();
                assert_eq!(act_braid(&w1, c).unwrap(), act_braid(&w2, c).unwrap(), "braid relation");
            }
            for i in 1..n {
                for j in i + 2..n {
                    let w1 = BraidWord::new(n, vec![i as i64, j as i64]).unwrap();
                    let w2 = BraidWord::new(n, vec![j as i64, i as i64]).unwrap();
                    assert_eq!(act_braid(&w1, c).unwrap(), act_braid(&w2, c).unwrap(), "far commutation");
                }
            }
            assert_eq!(act_braid(&dd, c).unwrap(), c.clone(), "Delta^2 must act trivially");
            checked += 1;
        }
    }
    pass("C7 curve-action invariants", format!("{checked} curves across n=3,4,5"));
}

/// Criterion 8: np_distance(1, g) = 1 for every nontrivial simple of B_3 and
/// for Δ², Δ⁴; np_distance(1, ("1 -2")^m) is non-decreasing for m = 1..4 and
/// exceeds 1 by m = 4 within radius 5. Exact values recorded.
#[test]
fn criterion_08_electrification() {
    let caps = ElectrifiedCaps {
        ball_cap: 600_000,
        ..ElectrifiedCaps::for_strands(3)
    };
    let id = BraidWord::identity(3).unwrap();
    for s in proper_simples(3) {
        let d = np_distance(&id, &s.canonical_word(), 2, &caps).unwrap().distance;
        assert_eq!(d, Some(1), "simple {}", s.canonical_word());
    }
    let delta = BraidWord::delta(3).unwrap();
    let d1 = np_distance(&id, &delta, 2, &caps).unwrap().distance;
    assert_eq!(d1, Some(1), "Delta is itself a Garside generator");
    for k in [2usize, 4] {
        let mut w = BraidWord::identity(3).unwrap();
        for _ in 0..k {
            w = w.concat(&delta).unwrap();
        }
        let d = np_distance(&id, &w, 2, &caps).unwrap().distance;
        assert_eq!(d, Some(1), "Delta^{k}");
    }
    let mut previous = 0u32;
    let mut recorded = Vec::new();
    for m in 1..=4usize {
        let letters: Vec<i64> = std::iter::repeat([1i64, -2]).take(m).flatten().collect();
        let w = BraidWord::new(3, letters).unwrap();
        let d = np_distance(&id, &w, 5, &caps)
            .unwrap()
            .distance
            .expect("pA powers stay within radius 5 here");
        assert!(d >= previous, "distance dropped at m={m}: {d} < {previous}");
        previous = d;
        recorded.push(d);
    }
    assert!(previous > 1, "(\"1 -2\")^4 must exceed distance 1");
    pass(
        "C8 electrification",
        format!("simples and Delta^2, Delta^4 at distance 1; pA distances {recorded:?}"),
    );
}

/// Criterion 9: every ShadowReport has consecutive shadow points at
/// np_distance <= 1 (each normal-form edge is an S_NP generator).
#[test]
fn criterion_09_shadow_lipschitz() {
    let caps = ElectrifiedCaps {
        ball_cap: 600_000,
        ..ElectrifiedCaps::for_strands(3)
    };
    let mut reports = 0usize;
    let mut words = vec![
        String::new(),
        "1 2 1".into(),
        "1 -2 1 -2".into(),
        "1 -2 1 -2 1 -2 1 -2".into(),
        "-1 -1 2 2 1".into(),
    ];
    let mut rng = stream_rng(0xC9, 0);
    for _ in 0..5 {
        words.push(random_word(3, 7, &mut rng).unwrap().to_string());
    }
    for w in &words {
        let a = nf(3, w);
        let rep = shadow_path(&a, (1, 2), 5, &caps).unwrap();
        assert!(rep.lipschitz_ok, "Lipschitz violated for '{w}'");
        assert_eq!(
            rep.steps.len(),
            a.canonical_length() + a.inf().unsigned_abs() as usize + 1
        );
        if let Some(r) = rep.ratio {
            assert!(r >= 1.0, "ratio below 1 for '{w}'");
        }
        reports += 1;
    }
    // a B_4 shadow too, with its default truncation caps
    let caps4 = ElectrifiedCaps::for_strands(4);
    let rep = shadow_path(&nf(4, "1 -3 2 1"), (1, 2), 2, &caps4).unwrap();
    assert!(rep.lipschitz_ok);
    reports += 1;
    pass("C9 shadow Lipschitz", format!("{reports} shadow reports, all steps within distance 1"));
}

/// Criterion 10: two runs of any seeded subcommand produce byte-identical
/// manifests (stdout and --out file both).
#[test]
fn criterion_10_reproducibility() {
    let bin = env!("CARGO_BIN_EXE_garlab");
    let cases: Vec<Vec<&str>> = vec![
        vec!["census", "-n", "3", "-l", "3", "--samples", "25", "--seed", "7", "--json"],
        vec!["nf", "-n", "3", "1 -2", "--json"],
        vec!["al-dist", "-n", "4", "", "1 3", "--radius", "2", "--json"],
        vec!["shadow", "-n", "3", "1 -2", "--radius", "3", "--json"],
    ];
    for args in &cases {
        let run = |suffix: &str| {
            let out_path = std::env::temp_dir().join(format!(
                "garlab-accept-{}-{suffix}.json",
                args[0]
            ));
            let output = Command::new(bin)
                .args(args.iter())
                .arg("--out")
                .arg(&out_path)
                .output()
                .expect("binary runs");
            assert!(output.status.success(), "{:?} failed", args);
            let file = std::fs::read(&out_path).expect("manifest written");
            std::fs::remove_file(&out_path).ok();
            (output.stdout, file)
        };
        let (stdout_a, file_a) = run("a");
        let (stdout_b, file_b) = run("b");
        assert_eq!(stdout_a, stdout_b, "stdout differs for {:?}", args);
        assert_eq!(file_a, file_b, "manifest file differs for {:?}", args);
    }
    pass("C10 reproducibility", format!("{} subcommands byte-identical across reruns", cases.len()));
}
