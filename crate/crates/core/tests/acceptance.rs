//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;

use lampsep::cayley::{self, Ball, VertexSubset};
use lampsep::groups::{self, conjugates_commute_check, LamplighterElement, MpqParams};
use lampsep::numbers::Valuation;
use lampsep::regmaps::{self, AffineEmbeddingParams, AffineMap, MpqMap};
use lampsep::report;
use lampsep::seed;
use lampsep::separation::{self, CutCertificate, TnDescriptor};

struct Outcome {
    pass: bool,
    detail: String,
    /// Report bodies, compared across reruns for the determinism criterion.
    bodies: Vec<String>,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail, bodies: Vec::new() }
}

fn criterion_1() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    let mut bodies = Vec::new();
    for (n, bound) in [(1u32, 216u64), (2, 2400)] {
        let start = Instant::now();
        let desc = TnDescriptor::new(n, 2).unwrap();
        let stats = separation::congestion_stats(desc, u128::MAX).unwrap();
        let elapsed = start.elapsed();
        // the bound, recomputed from its definition
        let t = desc.vertex_count() as u64;
        assert_eq!(3 * t * t % (1 << (2 * n + 1)), 0);
        let expected = 3 * t * t / (1 << (2 * n + 1));
        let ok = expected == bound
            && stats.congestion_bound == bound.to_string()
            && stats.total_paths == t * t
            && stats.max_congestion <= bound
            && stats.within_bound
            && elapsed < Duration::from_secs(60);
        pass &= ok;
        detail.push(format!("T_{n}: max {} <= {bound} in {:.2?}", stats.max_congestion, elapsed));
        bodies.push(report::to_json(&stats));
    }
    Outcome { pass, detail: detail.join("; "), bodies }
}

fn criterion_2() -> (Outcome, Vec<VertexSubset>) {
    let start = Instant::now();
    let desc = TnDescriptor::new(1, 2).unwrap();
    let t1 = separation::tn_graph(desc, 100).unwrap();
    let stats = separation::congestion_stats(desc, u128::MAX).unwrap();
    let lb = separation::congestion_lower_bound(desc, &stats);
    let exact = separation::cut_exact(&t1).unwrap();
    let positions = separation::positions_from_labels(&t1, 2).unwrap();
    let upper = separation::separator_from_positions(&t1, &positions, 2).unwrap();
    let minimum = separation::minimum_cutsets(&t1).unwrap();
    let elapsed = start.elapsed();
    let formula: BigRational = lb.formula_bound.parse().unwrap();
    let pass = formula == BigRational::new(4.into(), 3.into())
        && lb.cut_at_least >= 2
        && exact.valid
        && upper.valid
        && lb.cut_at_least <= exact.cut_size as u64
        && exact.cut_size <= upper.cut_size
        && elapsed < Duration::from_secs(120);
    let detail = format!(
        "lower {} <= exact {} <= constructive {} ({} minimum cutsets) in {:.2?}",
        lb.cut_at_least,
        exact.cut_size,
        upper.cut_size,
        minimum.len(),
        elapsed
    );
    let bodies = vec![report::to_json(&lb), report::to_json(&exact), report::to_json(&upper)];
    (Outcome { pass, detail, bodies }, minimum)
}

/// Subgraph sizes spread geometrically over [50, 2000].
fn criterion_3_sizes() -> Vec<usize> {
    (0..100).map(|k| (50.0 * 40f64.powf(k as f64 / 99.0)).round() as usize).collect()
}

/// Connected subgraphs for criteria 3 and 9: each drawn from the smallest
/// ball of radius at least 8 holding enough vertices.
fn criterion_3_samples(balls: &[Ball<LamplighterElement>]) -> Vec<(usize, VertexSubset)> {
    criterion_3_sizes()
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            let b = balls.iter().position(|b| b.len() >= v).expect("a ball large enough");
            let mut rng = seed::stream(k as u64, "acceptance/separator");
            (b, cayley::sample_connected_subgraph(&balls[b].graph, v, &mut rng).unwrap())
        })
        .collect()
}

/// `c <= 8 v / log2 v` checked through floating point bounds on both sides of
/// the exact decision, as an independent cross-check.
fn within_8v_over_log(c: usize, v: usize) -> bool {
    let exact = BigUint::from(v).pow(c as u32) <= BigUint::from(1u8) << (8 * v);
    let approx = c as f64 <= 8.0 * v as f64 / (v as f64).log2();
    assert_eq!(exact, approx, "c = {c}, v = {v}");
    exact
}

fn criterion_3(balls: &[Ball<LamplighterElement>], samples: &[(usize, VertexSubset)]) -> (Outcome, Vec<CutCertificate>) {
    let mut passed = 0;
    let mut certs = Vec::new();
    let mut bodies = Vec::new();
    for (b, subset) in samples {
        let ball = &balls[*b];
        let cert = separation::lamplighter_separator(ball, subset).unwrap();
        let f = cayley::induced_subgraph(&ball.graph, subset).unwrap();
        let sizes = cayley::component_sizes_without(&f, &cert.cutset.mask(f.len()));
        let valid = sizes.iter().all(|&s| 2 * s <= f.len());
        if cert.valid && valid && cert.revalidate(&f) && within_8v_over_log(cert.cut_size, f.len()) {
            passed += 1;
        }
        bodies.push(report::to_json(&cert));
        certs.push(cert);
    }
    let sizes = criterion_3_sizes();
    let detail = format!(
        "{passed}/{} valid with |C| <= 8v/log2 v, sizes {}..{}, balls of radius {:?}",
        samples.len(),
        sizes[0],
        sizes[sizes.len() - 1],
        samples.iter().map(|(b, _)| 8 + *b).collect::<BTreeSet<_>>()
    );
    (Outcome { pass: passed == samples.len(), detail, bodies }, certs)
}

fn criterion_4(minimum: &[VertexSubset]) -> Outcome {
    let desc = TnDescriptor::new(1, 2).unwrap();
    let half = BigRational::new(1.into(), 2.into());
    let mut worst: Option<BigRational> = None;
    let mut bodies = Vec::new();
    let mut pass = !minimum.is_empty();
    for w in minimum {
        let report = separation::verify_crossing(desc, w).unwrap();
        let fraction = BigRational::new(report.crossing.into(), report.pairs.into());
        pass &= fraction >= half && report.at_least_half && report.pairs == 576;
        if worst.as_ref().is_none_or(|x| fraction < *x) {
            worst = Some(fraction);
        }
        bodies.push(report::to_json(&report));
    }
    let worst = worst.map_or("none".into(), |w| w.to_string());
    Outcome { pass, detail: format!("{} minimum cutsets, smallest crossing fraction {worst}", minimum.len()), bodies }
}

fn criterion_5() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    let mut bodies = Vec::new();
    let domain = cayley::ball(&groups::lamplighter_generators(2).unwrap(), 6, 1 << 20).unwrap().len();
    for (p, q) in [(2, 1), (3, 2)] {
        let r = regmaps::verify_regular_map(&MpqMap(MpqParams::new(p, q).unwrap()), 6).unwrap();
        let ok = r.domain_size == domain && r.injective && r.max_fiber == 1 && r.lipschitz && r.lipschitz_constant == Some(1);
        pass &= ok;
        detail.push(format!("({p},{q}): {} elements, max fibre {}, K = {:?}", r.domain_size, r.max_fiber, r.lipschitz_constant));
        bodies.push(report::to_json(&r));
    }
    Outcome { pass, detail: detail.join("; "), bodies }
}

fn criterion_6() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    let mut bodies = Vec::new();
    for (val, a, b) in [(Valuation::Archimedean, "2", "1"), (Valuation::p_adic(3).unwrap(), "1/3", "1")] {
        let params = AffineEmbeddingParams::parse(val, a, b).unwrap();
        let r = regmaps::verify_regular_map(&AffineMap(params.clone()), 6).unwrap();
        let fact = regmaps::verify_factorization(&params, 6).unwrap();
        let commute = conjugates_commute_check(&params.d(), &params.delta(), 10).unwrap();
        let ok = r.injective && r.max_fiber == 1 && fact.first_mismatch.is_none() && fact.checked == r.domain_size && commute;
        pass &= ok;
        detail.push(format!("{val} a={a}: injective {}, factorization on {} elements, commute {commute}", r.injective, fact.checked));
        bodies.push(report::to_json(&r));
    }
    Outcome { pass, detail: detail.join("; "), bodies }
}

fn criterion_7() -> Outcome {
    let arch2 = AffineEmbeddingParams::parse(Valuation::Archimedean, "2", "1").unwrap();
    let adic = AffineEmbeddingParams::parse(Valuation::p_adic(3).unwrap(), "1/3", "1").unwrap();
    let arch3 = AffineEmbeddingParams::parse(Valuation::Archimedean, "3", "1").unwrap();
    let s2 = regmaps::gap_survey(&arch2, -3, 3).unwrap();
    let sp = regmaps::gap_survey(&adic, -3, 3).unwrap();
    let s3 = regmaps::gap_survey(&arch3, -3, 3).unwrap();
    let pairs = s2.pairs_total == 1 << 14 && sp.pairs_total == 1 << 14 && s3.pairs_total == 1 << 14;
    let pass = pairs && s2.all_nonzero && sp.all_nonzero && sp.equality_all && s3.all_nonzero && s3.half_bound_all;
    let detail = format!(
        "2^14 pairs each; Delta != 0 everywhere; 3-adic ratio always 1: {}; a=3 min ratio {} >= 1/2; a=2 min ratio {} (reported)",
        sp.equality_all, s3.min_ratio, s2.min_ratio
    );
    Outcome { pass, detail, bodies: vec![report::to_json(&s2), report::to_json(&sp), report::to_json(&s3)] }
}

fn criterion_8() -> Outcome {
    let ball = cayley::ball(&groups::lamplighter_generators(2).unwrap(), 8, 1 << 20).unwrap();
    let mismatches = ball.elements.iter().zip(&ball.depth).filter(|(x, d)| groups::lamp_word_length(x) != **d as u64).count();
    let body: String = ball.elements.iter().map(|x| format!("{x} {}\n", groups::lamp_word_length(x))).collect();
    Outcome { pass: mismatches == 0, detail: format!("{} elements, {mismatches} mismatches", ball.len()), bodies: vec![body] }
}

fn criterion_9(balls: &[Ball<LamplighterElement>], samples: &[(usize, VertexSubset)], certs: &[CutCertificate]) -> Outcome {
    let mut holds = 0;
    for ((b, subset), cert) in samples.iter().zip(certs) {
        let positions: BTreeSet<i64> = subset.indices().iter().map(|&k| balls[*b].elements[k].pos()).collect();
        let r = positions.len();
        let v = subset.len();
        let bound = BigUint::from(r) << r;
        let recorded = cert.bounds.iter().find(|x| x.name == "v <= r*m^r").is_some_and(|x| x.satisfied && x.low == bound.to_string());
        if BigUint::from(v) <= bound && recorded {
            holds += 1;
        }
    }
    outcome(holds == samples.len(), format!("{holds}/{} subgraphs satisfy v <= r 2^r", samples.len()))
}

fn run_cli(args: &[&str]) -> bool {
    Command::new(env!("CARGO_BIN_EXE_lampsep")).args(args).status().map(|s| s.success()).unwrap_or(false)
}

fn same_files(a: &Path, b: &Path, names: &[String]) -> bool {
    names.iter().all(|n| fs::read(a.join(n)).ok().is_some_and(|x| Some(x) == fs::read(b.join(n)).ok()))
}

/// Criterion 10: every report above again under a different worker count,
/// and the CLI's manifests replayed byte for byte.
fn criterion_10(first: &[Vec<String>], balls: &[Ball<LamplighterElement>], samples: &[(usize, VertexSubset)]) -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let second: Vec<Vec<String>> = pool.install(|| {
        let (c2, minimum) = criterion_2();
        let (c3, _) = criterion_3(balls, samples);
        vec![
            criterion_1().bodies,
            c2.bodies,
            c3.bodies,
            criterion_4(&minimum).bodies,
            criterion_5().bodies,
            criterion_6().bodies,
            criterion_7().bodies,
            criterion_8().bodies,
        ]
    });
    let library_same = first == second.as_slice();
    let resampled = criterion_3_samples(balls);
    let samples_same = resampled.iter().zip(samples).all(|(a, b)| a == b);

    let tmp = tempfile::tempdir().unwrap();
    let commands: Vec<Vec<String>> = [
        "paths --n 1",
        "paths --n 2",
        "cut --tn 1",
        "crossing --n 1",
        "separator --radius 8 --size 300 --seed 3",
        "separator --radius 11 --size 2000 --seed 99",
        "verify-map mpq --p 2 --q 1 --radius 6",
        "verify-map mpq --p 3 --q 2 --radius 6",
        "verify-map affine --val arch --a 2 --b 1 --radius 6",
        "verify-map affine --val 3adic --a 1/3 --b 1 --radius 6",
        "gap --val arch --a 2 --b 1",
        "gap --val 3adic --a 1/3 --b 1",
        "gap --val arch --a 3 --b 1",
        "ball lamplighter --radius 8",
        "profile lamplighter --radius 8 --sizes 1,2,8,24,64 --samples 2",
    ]
    .iter()
    .map(|c| c.split(' ').map(String::from).collect())
    .collect();
    let mut replayed = 0;
    for (k, cmd) in commands.iter().enumerate() {
        let (a, b) = (tmp.path().join(format!("run{k}")), tmp.path().join(format!("replay{k}")));
        let mut args: Vec<&str> = cmd.iter().map(String::as_str).collect();
        let a_str = a.display().to_string();
        args.extend(["--out", &a_str]);
        if !run_cli(&args) {
            continue;
        }
        let manifest = a.join(report::MANIFEST_FILE);
        let b_str = b.display().to_string();
        if !run_cli(&["--jobs", "1", "replay", &manifest.display().to_string(), "--out", &b_str]) {
            continue;
        }
        let outputs = report::RunManifest::read(&manifest).unwrap().outputs;
        if !outputs.is_empty() && same_files(&a, &b, &outputs) {
            replayed += 1;
        }
    }
    let pass = library_same && samples_same && replayed == commands.len();
    outcome(
        pass,
        format!(
            "library reports identical on 1 thread: {library_same}; samples identical: {samples_same}; {replayed}/{} CLI manifests replayed byte for byte",
            commands.len()
        ),
    )
}

fn main() {
    let start = Instant::now();
    let balls: Vec<Ball<LamplighterElement>> =
        (8..=11).map(|r| cayley::lamplighter_ball_direct(2, r, cayley::DEFAULT_MAX_VERTICES).unwrap()).collect();
    let samples = criterion_3_samples(&balls);

    let c1 = criterion_1();
    let (c2, minimum) = criterion_2();
    let (c3, certs) = criterion_3(&balls, &samples);
    let c4 = criterion_4(&minimum);
    let c5 = criterion_5();
    let c6 = criterion_6();
    let c7 = criterion_7();
    let c8 = criterion_8();
    let c9 = criterion_9(&balls, &samples, &certs);
    let first: Vec<Vec<String>> =
        [&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8].iter().map(|o| o.bodies.clone()).collect();
    let c10 = criterion_10(&first, &balls, &samples);

    let names = [
        "congestion certificate on T_1 and T_2",
        "lower <= exact <= constructive cut on T_1",
        "constructive separator on 100 sampled subgraphs",
        "crossing fraction of minimum cutsets of T_1",
        "M_{p,q} maps injective with K = 1",
        "affine embeddings injective and factorized",
        "injectivity gap over the window [-3, 3]",
        "closed-form word length equals BFS distance",
        "v <= r 2^r on sampled subgraphs",
        "deterministic reports and manifest replay",
    ];
    let results = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10];
    let mut failures = 0;
    println!();
    for (k, (name, o)) in names.iter().zip(&results).enumerate() {
        println!("{} criterion {:>2}: {name} -- {}", if o.pass { "PASS" } else { "FAIL" }, k + 1, o.detail);
        failures += usize::from(!o.pass);
    }
    println!("acceptance: {}/{} passed in {:.2?}", results.len() - failures, results.len(), start.elapsed());
    if failures > 0 {
        std::process::exit(1);
    }
}
