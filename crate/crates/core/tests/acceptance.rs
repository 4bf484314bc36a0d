//! One line per acceptance criterion: `PASS`/`FAIL`, elapsed time against
//! the limit, and the first failures. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::num::NonZeroUsize;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gibonacci::cycle::check_three_power_structure;
use gibonacci::golden;
use gibonacci::survey::{run_survey_with, SurveyOptions};
use gibonacci::{
    bucketize, canonical_rotation, check_burr_lemma3, check_wall_thm2, check_wall_thm9,
    complete_system, extract_cycle, fibonacci_multiple_of, gibonacci_invariant, is_complete,
    mf_contains, ml_contains, predicted_complete, Error, FiveAdicLength, Modulus, Order, Seed,
    SurveyRecord,
};
use rand::{Rng, SeedableRng};

type Outcome = Result<(), Vec<String>>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

const SECOND: Duration = Duration::from_secs(1);

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "golden cycles", limit: Some(SECOND), run: golden_cycles },
    Criterion { id: 2, name: "term-count law", limit: Some(Duration::from_secs(10)), run: term_count },
    Criterion { id: 3, name: "golden complete systems", limit: None, run: golden_systems },
    Criterion { id: 4, name: "Lucas sweep m <= 2200", limit: Some(Duration::from_secs(30)), run: lucas_sweep },
    Criterion { id: 5, name: "Fibonacci sweep m <= 1000", limit: Some(Duration::from_secs(30)), run: fibonacci_sweep },
    Criterion { id: 6, name: "classification oracle", limit: Some(Duration::from_secs(300)), run: classification },
    Criterion { id: 7, name: "dominance / minimality", limit: None, run: dominance_minimality },
    Criterion { id: 8, name: "3^j structure j = 2..4", limit: None, run: three_power },
    Criterion { id: 9, name: "period lcm law and 5^k ratio", limit: None, run: wall },
    Criterion { id: 10, name: "lifting m -> 5m", limit: None, run: lifting },
    Criterion { id: 11, name: "Tribonacci 300-prime survey (1 job)", limit: Some(Duration::from_secs(300)), run: survey },
    Criterion { id: 12, name: "Tribonacci spot facts", limit: None, run: spot_facts },
    Criterion { id: 13, name: "zero iff Fibonacci multiple", limit: None, run: zero_multiple },
];

fn modulus(m: u64) -> Modulus {
    Modulus::new(m).unwrap()
}

fn seed(terms: &[i64]) -> Seed {
    Seed::new(terms).unwrap()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn coprime_pairs(max: i64) -> Vec<Seed> {
    let mut out = vec![];
    for a in 0..=max {
        for b in 0..=max {
            if gcd(a, b) == 1 {
                out.push(seed(&[a, b]));
            }
        }
    }
    out
}

fn collect(failures: Vec<String>) -> Outcome {
    if failures.is_empty() { Ok(()) } else { Err(failures) }
}

/// Residue coverage by direct iteration until the seed window returns.
fn covers_all(terms: &[i64], m: u64) -> bool {
    let mut window: Vec<u64> = terms.iter().map(|t| t.rem_euclid(m as i64) as u64).collect();
    let start = window.clone();
    let mut seen = vec![false; m as usize];
    loop {
        seen[window[0] as usize] = true;
        let next = window.iter().sum::<u64>() % m;
        window.remove(0);
        window.push(next);
        if window == start {
            return seen.iter().all(|&s| s);
        }
    }
}

fn golden_cycles() -> Outcome {
    let mut failures = vec![];
    let expected_lengths = [
        ("Lucas mod 4", 6),
        ("Lucas mod 5", 4),
        ("Lucas mod 6", 15),
        ("Lucas mod 14", 48),
        ("Fibonacci mod 4", 6),
        ("Fibonacci mod 14", 48),
        ("A_n mod 2", 1),
        ("B_n mod 2", 4),
        ("A_n mod 9", 39),
        ("B_n mod 9", 39),
    ];
    for (listing, (name, len)) in golden::CYCLES.iter().zip(expected_lengths) {
        assert_eq!(listing.name, name);
        assert_eq!(listing.residues.len(), len, "{name} transcription");
        let got = extract_cycle(&seed(listing.seed), modulus(listing.modulus));
        if got.residues() != canonical_rotation(listing.residues).as_slice() {
            failures.push(format!("{name}: printed {len} terms, computed {} terms {got}", got.len()));
        }
    }
    collect(failures)
}

fn term_count() -> Outcome {
    let mut failures = vec![];
    for m in 1..=40u64 {
        let s = complete_system(modulus(m), Order::Two).unwrap();
        let sum: u64 = s.cycles().iter().map(|c| c.len() as u64).sum();
        if s.term_count() != m * m || sum != m * m {
            failures.push(format!("order 2 mod {m}: {sum}"));
        }
    }
    for m in 1..=12u64 {
        let s = complete_system(modulus(m), Order::Three).unwrap();
        let sum: u64 = s.cycles().iter().map(|c| c.len() as u64).sum();
        if s.term_count() != m * m * m || sum != m * m * m {
            failures.push(format!("order 3 mod {m}: {sum}"));
        }
    }
    collect(failures)
}

fn golden_systems() -> Outcome {
    let mut failures = vec![];
    for listing in golden::SYSTEMS {
        let m = modulus(listing.modulus);
        let order = Order::from_arity(listing.order).unwrap();
        let fib = extract_cycle(&Seed::fibonacci(), m);
        let mut want: Vec<Vec<u64>> = listing.cycles.iter().map(|c| canonical_rotation(c)).collect();
        want.extend(listing.fibonacci_multiples.iter().map(|&k| fib.scaled(k).residues().to_vec()));
        want.sort();
        let mut got: Vec<Vec<u64>> = complete_system(m, order)
            .unwrap()
            .cycles()
            .iter()
            .map(|c| c.residues().to_vec())
            .collect();
        got.sort();
        if got != want {
            let missing: Vec<String> = got
                .iter()
                .filter(|c| !want.contains(c))
                .map(|c| format!("{c:?}"))
                .collect();
            failures.push(format!(
                "order {} mod {m}: listing {} terms, computed {} terms, unmatched computed {}",
                listing.order,
                want.iter().map(Vec::len).sum::<usize>(),
                got.iter().map(Vec::len).sum::<usize>(),
                missing.join(" ")
            ));
        }
    }
    let s14 = complete_system(modulus(14), Order::Two).unwrap();
    let long: usize = s14.cycles().iter().filter(|c| c.len() == 48).map(|c| c.len()).sum();
    let rest = s14.term_count() as usize - long;
    if (s14.term_count(), long, rest) != (196, 144, 52) {
        failures.push(format!("mod 14: {} = {long} + {rest}", s14.term_count()));
    }
    collect(failures)
}

fn lucas_sweep() -> Outcome {
    let want: BTreeSet<u64> = [2, 4, 6, 7, 14, 3, 9, 27, 81, 243, 729, 2187].into();
    let got: BTreeSet<u64> = (2..=2200).filter(|&m| is_complete(&Seed::lucas(), modulus(m)).complete).collect();
    collect(
        got.symmetric_difference(&want)
            .map(|m| format!("m = {m}"))
            .collect(),
    )
}

fn fibonacci_sweep() -> Outcome {
    collect(
        (2..=1000u64)
            .filter(|&m| is_complete(&Seed::fibonacci(), modulus(m)).complete != mf_contains(m))
            .map(|m| format!("m = {m}"))
            .collect(),
    )
}

fn classification() -> Outcome {
    let mut failures = vec![];
    for s in coprime_pairs(12) {
        for m in 2..=500u64 {
            let predicted = predicted_complete(&s, modulus(m)).unwrap();
            if predicted != is_complete(&s, modulus(m)).complete {
                failures.push(format!("{s} mod {m}: predicted {predicted}"));
            }
        }
    }
    collect(failures)
}

fn dominance_minimality() -> Outcome {
    let seeds: Vec<[i64; 2]> = (0..=12)
        .flat_map(|a| (0..=12).map(move |b| [a, b]))
        .filter(|&[a, b]| gcd(a, b) == 1)
        .collect();
    let mut failures = vec![];
    for m in 2..=500u64 {
        if !covers_all(&[1, 1], m) {
            for s in &seeds {
                if is_complete(&seed(s), modulus(m)).complete {
                    failures.push(format!("{s:?} complete mod {m}"));
                }
            }
        }
    }
    for m in (2..=2187u64).filter(|&m| ml_contains(m)) {
        for s in &seeds {
            if !is_complete(&seed(s), modulus(m)).complete {
                failures.push(format!("{s:?} defective mod {m}"));
            }
        }
    }
    collect(failures)
}

fn three_power() -> Outcome {
    collect(
        (2..=4)
            .filter(|&j| !check_three_power_structure(j).unwrap())
            .map(|j| format!("j = {j}"))
            .collect(),
    )
}

fn wall() -> Outcome {
    let mut failures = vec![];
    for a in -8..=8i64 {
        for b in -8..=8i64 {
            if gcd(a, b) != 1 {
                continue;
            }
            for m in 1..=300u64 {
                if !check_wall_thm2(&seed(&[a, b]), modulus(m)) {
                    failures.push(format!("({a}, {b}) mod {m}"));
                }
            }
        }
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    let mut drawn = 0;
    while drawn < 50 {
        let Ok(s) = Seed::new(&[rng.gen_range(-500..=500), rng.gen_range(-500..=500)]) else { continue };
        drawn += 1;
        let lucas_like = gibonacci_invariant(&s).unwrap().residue_mod_5 == 0;
        for k in 1..=4 {
            let want = if lucas_like { FiveAdicLength::FifthLength } else { FiveAdicLength::FullLength };
            match check_wall_thm9(&s, k) {
                Ok(got) if got == want => {}
                other => failures.push(format!("{s} at 5^{k}: {other:?}")),
            }
        }
    }
    collect(failures)
}

fn lifting() -> Outcome {
    let mut failures = vec![];
    let mut held = 0;
    for m in [5u64, 7, 25, 35] {
        for n in 1..=20 {
            match check_burr_lemma3(modulus(m), n) {
                Ok(true) => held += 1,
                Err(Error::HypothesisNotMet(_)) => {}
                other => failures.push(format!("m = {m}, n = {n}: {other:?}")),
            }
        }
    }
    if held == 0 {
        failures.push("hypothesis never held".into());
    }
    for m in [2u64, 4] {
        match check_burr_lemma3(modulus(m), 1) {
            Err(Error::HypothesisNotMet(_)) => {}
            other => failures.push(format!("m = {m}: {other:?}")),
        }
    }
    collect(failures)
}

fn counts(records: &[SurveyRecord], size: usize) -> Vec<usize> {
    bucketize(records, NonZeroUsize::new(size).unwrap())
        .buckets
        .iter()
        .map(|b| b.complete)
        .collect()
}

fn survey() -> Outcome {
    let options = SurveyOptions {
        jobs: NonZeroUsize::new(1),
        ..Default::default()
    };
    let mut failures = vec![];
    let cases = [
        ("A_n", Seed::tribonacci_a(), 184, [62, 59, 63], golden::SURVEY_A_BY_20),
        ("B_n", Seed::tribonacci_b(), 184, [64, 59, 61], golden::SURVEY_B_BY_20),
    ];
    for (name, s, total, by100, by20) in cases {
        let records = run_survey_with(&s, 300, &options).unwrap();
        let primes: Vec<u64> = records.iter().map(|r| r.prime).collect();
        let table = bucketize(&records, NonZeroUsize::new(20).unwrap());
        for (bucket, (lo, hi)) in table.buckets.iter().zip(golden::SURVEY_BUCKET_RANGES) {
            if (bucket.first_prime, bucket.last_prime) != (lo, hi) {
                failures.push(format!("{name}: bucket {}..{} vs {lo}..{hi}", bucket.first_prime, bucket.last_prime));
            }
        }
        assert_eq!(primes.len(), 300);
        if table.total_complete != total {
            failures.push(format!("{name} total {} (published {total})", table.total_complete));
        }
        let pct = table.buckets.last().unwrap().cumulative_percent;
        if (pct - 61.3).abs() > 0.05 {
            failures.push(format!("{name} {pct}% (published 61.3%)"));
        }
        let got100 = counts(&records, 100);
        if got100 != by100 {
            failures.push(format!("{name} by 100: {got100:?} (published {by100:?})"));
        }
        let got20 = counts(&records, 20);
        if got20 != by20 {
            failures.push(format!("{name} by 20: {got20:?} (published {by20:?})"));
        }
    }
    collect(failures)
}

fn spot_facts() -> Outcome {
    let mut failures = vec![];
    let mut expect = |terms: &[i64], m: u64, complete: bool| {
        let got = is_complete(&seed(terms), modulus(m)).complete;
        if got != complete || covers_all(terms, m) != complete {
            failures.push(format!("{terms:?} mod {m}: {got}"));
        }
    };
    expect(&[1, 2, 3], 2, true);
    expect(&[1, 2, 3], 9, true);
    expect(&[1, 2, 3], 67, false);
    for terms in [[1, 1, 1], [1, 1, 2]] {
        expect(&terms, 67, true);
        for j in 1..=5 {
            expect(&terms, 5u64.pow(j), true);
        }
    }
    collect(failures)
}

fn zero_multiple() -> Outcome {
    let mut failures = vec![];
    for m in 1..=30u64 {
        let fib = extract_cycle(&Seed::fibonacci(), modulus(m));
        for c in complete_system(modulus(m), Order::Two).unwrap().cycles() {
            let k = fibonacci_multiple_of(c).unwrap();
            let ok = match k {
                Some(k) => {
                    let scaled: Vec<u64> = fib.residues().iter().map(|r| r * k % m).collect();
                    c.contains(0) && canonical_rotation(&scaled[..c.len()]) == c.residues()
                }
                None => !c.contains(0),
            };
            if !ok {
                failures.push(format!("{c} mod {m}: {k:?}"));
            }
        }
    }
    collect(failures)
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let late = c.limit.is_some_and(|l| elapsed > l);
        let limit = c.limit.map_or("none".to_string(), |l| format!("{}s", l.as_secs()));
        let status = if outcome.is_ok() && !late { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {:>2}: {} [{:.2}s, limit {limit}]",
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
        if late {
            println!("    over time limit");
        }
        if let Err(failures) = outcome {
            for f in failures.iter().take(8) {
                println!("    {f}");
            }
            if failures.len() > 8 {
                println!("    ... {} more", failures.len() - 8);
            }
        }
        if status == "FAIL" {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
