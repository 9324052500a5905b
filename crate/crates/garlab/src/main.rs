//! garlab: experiments with the Garside structure on braid groups.
//!
//! One binary, six subcommands: `nf`, `conjugate`, `census`, `al-dist`,
//! `np-dist`, `shadow`. Every run emits a manifest that echoes the full
//! configuration, the pinned PRNG, and the payload; re-running the same
//! configuration reproduces the manifest byte for byte (timings go to stderr,
//! never into the manifest).
//!
//! Exit codes: 0 success, 2 bad input, 3 resource cap hit without an answer,
//! 4 indeterminate conjugacy.

use clap::{Args, Parser, Subcommand};
use garside::allength::{al_distance, AlCaps};
use garside::census::{rigid_census, CensusParams, CensusReport};
use garside::conjugacy::ConjugacyAnswer;
use garside::electric::{np_distance, shadow_path, ElectrifiedCaps};
use garside::normal::{normal_form, NormalForm};
use garside::randmodel::RNG_SPEC;
use garside::word::BraidWord;
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

const EXIT_OK: u8 = 0;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_INDETERMINATE: u8 = 4;

#[derive(Parser)]
#[command(name = "garlab", version, about = "Garside-structure experiments on braid groups")]
struct Cli {
    /// Print the JSON manifest on stdout instead of the human summary
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON manifest to this path
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Cmd {
    /// Left-weighted normal form of a braid word
    Nf(NfArgs),
    /// Decide whether two braids are conjugate
    Conjugate(ConjugateArgs),
    /// Rigid-conjugate census over random positive braids
    Census(CensusArgs),
    /// Distance in the truncated additional length graph
    AlDist(AlDistArgs),
    /// Distance in the truncated electrified graph
    NpDist(NpDistArgs),
    /// Shadow of a normal-form path in the electrified graph
    Shadow(ShadowArgs),
}

#[derive(Args, Serialize)]
struct NfArgs {
    /// Strand count
    #[arg(short = 'n', long = "strands")]
    n: usize,
    /// Braid word: whitespace-separated signed integers, e.g. "1 2 -1"
    word: String,
}

#[derive(Args, Serialize)]
struct ConjugateArgs {
    #[arg(short = 'n', long = "strands")]
    n: usize,
    word1: String,
    word2: String,
    /// Conjugation-step budget
    #[arg(long, default_value_t = 2_000_000)]
    budget: u64,
}

#[derive(Args, Serialize)]
struct CensusArgs {
    #[arg(short = 'n', long = "strands")]
    n: usize,
    /// Canonical length of the sampled braids
    #[arg(short = 'l', long)]
    len: usize,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sweep lengths "l1..l2" (inclusive) instead of the single -l value
    #[arg(long)]
    sweep: Option<String>,
    /// Step between sweep lengths
    #[arg(long, default_value_t = 2)]
    sweep_step: usize,
    /// Conjugation-step budget per sample
    #[arg(long, default_value_t = 5_000_000)]
    budget: u64,
    /// Record electrified-distance proxies for orbits above 2ℓ (slow)
    #[arg(long)]
    curve_proxy: bool,
    /// Also write per-sample CSV rows to this path
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args, Serialize)]
struct AlDistArgs {
    #[arg(short = 'n', long = "strands")]
    n: usize,
    word1: String,
    word2: String,
    #[arg(long, default_value_t = 3)]
    radius: u32,
    /// Node cap for the DFS searches behind telescoping discovery
    #[arg(long, default_value_t = 200_000)]
    bound: u64,
    /// Telescoping triples are searched up to this canonical length
    #[arg(long, default_value_t = 2)]
    telescope_len: usize,
    /// Node cap for the BFS ball
    #[arg(long, default_value_t = 400_000)]
    ball_cap: usize,
}

#[derive(Args, Serialize)]
struct NpDistArgs {
    #[arg(short = 'n', long = "strands")]
    n: usize,
    word1: String,
    word2: String,
    #[arg(long, default_value_t = 3)]
    radius: u32,
    /// Normalizer elements are harvested from the S_Gar ball of this radius
    #[arg(long)]
    norm_radius: Option<u32>,
    #[arg(long, default_value_t = 400_000)]
    ball_cap: usize,
}

#[derive(Args, Serialize)]
struct ShadowArgs {
    #[arg(short = 'n', long = "strands")]
    n: usize,
    word: String,
    #[arg(long, default_value_t = 3)]
    radius: u32,
    /// Base round curve "i,j" (defaults to the curve about punctures 1 and 2)
    #[arg(long, default_value = "1,2")]
    base: String,
    #[arg(long)]
    norm_radius: Option<u32>,
    #[arg(long, default_value_t = 400_000)]
    ball_cap: usize,
}

#[derive(Serialize)]
struct Manifest<P: Serialize> {
    tool: ToolInfo,
    rng: &'static str,
    command: &'static str,
    config: serde_json::Value,
    payload: P,
}

#[derive(Serialize)]
struct ToolInfo {
    name: &'static str,
    version: &'static str,
}

fn manifest<P: Serialize>(command: &'static str, config: serde_json::Value, payload: P) -> Manifest<P> {
    Manifest {
        tool: ToolInfo {
            name: "garlab",
            version: env!("CARGO_PKG_VERSION"),
        },
        rng: RNG_SPEC,
        command,
        config,
        payload,
    }
}

struct Output {
    json: bool,
    out: Option<PathBuf>,
}

impl Output {
    fn emit<P: Serialize>(&self, m: &Manifest<P>, human: String) -> anyhow::Result<()> {
        let text = serde_json::to_string_pretty(m)?;
        if let Some(path) = &self.out {
            std::fs::write(path, format!("{text}\n"))?;
        }
        if self.json {
            println!("{text}");
        } else {
            println!("{human}");
        }
        Ok(())
    }
}

fn parse_word(n: usize, s: &str) -> anyhow::Result<BraidWord> {
    Ok(BraidWord::parse(n, s)?)
}

fn factor_words(a: &NormalForm) -> Vec<String> {
    a.factors()
        .iter()
        .map(|f| f.canonical_word().to_string())
        .collect()
}

#[derive(Serialize)]
struct NfPayload {
    n: usize,
    word: String,
    inf: i64,
    sup: i64,
    canonical_length: usize,
    factors: Vec<String>,
    geodesic_length: u64,
    exponent_sum: i64,
}

fn run_nf(args: &NfArgs, out: &Output) -> anyhow::Result<u8> {
    let w = parse_word(args.n, &args.word)?;
    let a = normal_form(&w);
    let payload = NfPayload {
        n: args.n,
        word: args.word.clone(),
        inf: a.inf(),
        sup: a.sup(),
        canonical_length: a.canonical_length(),
        factors: factor_words(&a),
        geodesic_length: a.garside_geodesic_length(),
        exponent_sum: a.exponent_sum(),
    };
    let human = format!(
        "normal form: {}\ninf (p): {}\nsup: {}\ncanonical length: {}\nfactors: [{}]\ngeodesic length over S_Gar: {}\nexponent sum: {}",
        a,
        a.inf(),
        a.sup(),
        a.canonical_length(),
        payload.factors.join(" | "),
        payload.geodesic_length,
        payload.exponent_sum,
    );
    out.emit(&manifest("nf", serde_json::to_value(args)?, payload), human)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ConjugatePayload {
    answer: &'static str,
    conjugator: Option<String>,
    budget: u64,
}

fn run_conjugate(args: &ConjugateArgs, out: &Output) -> anyhow::Result<u8> {
    let a = normal_form(&parse_word(args.n, &args.word1)?);
    let b = normal_form(&parse_word(args.n, &args.word2)?);
    let (answer, conjugator, code) = match garside::conjugacy::are_conjugate(&a, &b, args.budget)? {
        ConjugacyAnswer::Conjugate { conjugator } => {
            ("YES", Some(conjugator.to_word().to_string()), EXIT_OK)
        }
        ConjugacyAnswer::NotConjugate => ("NO", None, EXIT_OK),
        ConjugacyAnswer::Indeterminate => ("UNKNOWN", None, EXIT_INDETERMINATE),
    };
    let payload = ConjugatePayload {
        answer,
        conjugator: conjugator.clone(),
        budget: args.budget,
    };
    let human = match &conjugator {
        Some(c) => format!("{answer}\nconjugator: {c}"),
        None => answer.to_string(),
    };
    out.emit(&manifest("conjugate", serde_json::to_value(args)?, payload), human)?;
    Ok(code)
}

fn sweep_lens(args: &CensusArgs) -> anyhow::Result<Vec<usize>> {
    match &args.sweep {
        None => Ok(vec![args.len]),
        Some(spec) => {
            let (lo, hi) = spec
                .split_once("..")
                .ok_or_else(|| anyhow::anyhow!("sweep must look like l1..l2"))?;
            let lo: usize = lo.trim().parse()?;
            let hi: usize = hi.trim().parse()?;
            if lo == 0 || hi < lo || args.sweep_step == 0 {
                anyhow::bail!("invalid sweep range {spec}");
            }
            Ok((lo..=hi).step_by(args.sweep_step).collect())
        }
    }
}

fn census_csv(report: &CensusReport) -> String {
    let mut csv = String::from("len,sample,rigid,orbit_size\n");
    for run in &report.runs {
        for r in &run.records {
            csv.push_str(&format!(
                "{},{},{},{}\n",
                run.len,
                r.index,
                r.rigid,
                r.orbit_size.map(|k| k.to_string()).unwrap_or_default()
            ));
        }
    }
    csv
}

fn run_census(args: &CensusArgs, out: &Output) -> anyhow::Result<u8> {
    let params = CensusParams {
        n: args.n,
        lens: sweep_lens(args)?,
        samples: args.samples,
        seed: args.seed,
        budget: args.budget,
        curve_proxy: args.curve_proxy,
    };
    let report = rigid_census(&params)?;
    if let Some(path) = &args.csv {
        std::fs::write(path, census_csv(&report))?;
    }
    let mut human = String::new();
    for run in &report.runs {
        let a = &run.aggregate;
        human.push_str(&format!(
            "len {}: {} samples, {} rigid as drawn, {} with orbits; max orbit {:?}, rigid modal {:?}, rigid fraction at 2l {:?}\n",
            run.len, a.samples, a.rigid_samples, a.samples_with_orbit, a.max_orbit,
            a.modal_orbit_rigid, a.fraction_exactly_two_len
        ));
    }
    if let Some(e) = report.fitted_exponent {
        human.push_str(&format!("fitted exponent of max orbit vs length: {e:.3}\n"));
    }
    out.emit(
        &manifest("census", serde_json::to_value(args)?, &report),
        human.trim_end().to_string(),
    )?;
    Ok(EXIT_OK)
}

fn run_al_dist(args: &AlDistArgs, out: &Output) -> anyhow::Result<u8> {
    let x = normal_form(&parse_word(args.n, &args.word1)?);
    let y = normal_form(&parse_word(args.n, &args.word2)?);
    let caps = AlCaps {
        telescope_len: args.telescope_len,
        search_cap: args.bound,
        ball_cap: args.ball_cap,
    };
    let report = al_distance(&x, &y, args.radius, &caps)?;
    let human = match report.distance {
        Some(d) => format!("distance: {d}"),
        None => format!(
            "distance: >= {} (ball size {}, cap hit: {})",
            args.radius + 1,
            report.ball_size,
            report.ball_cap_hit
        ),
    };
    let code = if report.distance.is_none() && report.ball_cap_hit {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    };
    out.emit(&manifest("al-dist", serde_json::to_value(args)?, &report), human)?;
    Ok(code)
}

fn electrified_caps(n: usize, norm_radius: Option<u32>, ball_cap: usize) -> ElectrifiedCaps {
    let mut caps = ElectrifiedCaps::for_strands(n);
    if let Some(r) = norm_radius {
        caps.normalizer_word_radius = r;
    }
    caps.ball_cap = ball_cap;
    caps
}

fn run_np_dist(args: &NpDistArgs, out: &Output) -> anyhow::Result<u8> {
    let w1 = parse_word(args.n, &args.word1)?;
    let w2 = parse_word(args.n, &args.word2)?;
    let caps = electrified_caps(args.n, args.norm_radius, args.ball_cap);
    let report = np_distance(&w1, &w2, args.radius, &caps)?;
    let human = match report.distance {
        Some(d) => format!("distance: {d}"),
        None => format!(
            "distance: >= {} (ball size {}, cap hit: {})",
            args.radius + 1,
            report.ball_size,
            report.ball_cap_hit
        ),
    };
    let code = if report.distance.is_none() && report.ball_cap_hit {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    };
    out.emit(&manifest("np-dist", serde_json::to_value(args)?, &report), human)?;
    Ok(code)
}

fn run_shadow(args: &ShadowArgs, out: &Output) -> anyhow::Result<u8> {
    let w = parse_word(args.n, &args.word)?;
    let a = normal_form(&w);
    let (i, j) = args
        .base
        .split_once(',')
        .ok_or_else(|| anyhow::anyhow!("base must look like i,j"))?;
    let base = (i.trim().parse()?, j.trim().parse()?);
    let caps = electrified_caps(args.n, args.norm_radius, args.ball_cap);
    let report = shadow_path(&a, base, args.radius, &caps)?;
    let human = format!(
        "prefixes: {}\npath length: {}\nendpoint distance: {}\nratio: {}\ndefect: {}\nlipschitz ok: {}",
        report.steps.len(),
        report.path_length,
        report
            .endpoint_distance
            .map(|d| d.to_string())
            .unwrap_or_else(|| format!(">= {}", args.radius + 1)),
        report.ratio.map(|r| format!("{r:.3}")).unwrap_or_else(|| "n/a".into()),
        report.defect.map(|d| d.to_string()).unwrap_or_else(|| "n/a".into()),
        report.lipschitz_ok,
    );
    let code = if report.endpoint_distance.is_none() && report.distance_report.ball_cap_hit {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    };
    out.emit(&manifest("shadow", serde_json::to_value(args)?, &report), human)?;
    Ok(code)
}

fn dispatch(cli: &Cli, out: &Output) -> anyhow::Result<u8> {
    match &cli.cmd {
        Cmd::Nf(a) => run_nf(a, out),
        Cmd::Conjugate(a) => run_conjugate(a, out),
        Cmd::Census(a) => run_census(a, out),
        Cmd::AlDist(a) => run_al_dist(a, out),
        Cmd::NpDist(a) => run_np_dist(a, out),
        Cmd::Shadow(a) => run_shadow(a, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output {
        json: cli.json,
        out: cli.out.clone(),
    };
    let started = Instant::now();
    let result = dispatch(&cli, &out);
    // wall clock stays out of the manifest so reruns stay byte-identical
    eprintln!("completed in {} ms", started.elapsed().as_millis());
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_BAD_INPUT)
        }
    }
}
