//! Reproduction suite: recomputes every published cycle, system, theorem
//! sweep and survey table and compares against [`crate::golden`].

use std::num::NonZeroUsize;

use num_integer::Integer;

use crate::completeness::{
    check_burr_lemma3, check_wall_thm2, check_wall_thm9, classify, is_complete, mf_contains,
    ml_contains, SequenceClass,
};
use crate::cycle::{
    canonical_rotation, check_three_power_structure, complete_system, extract_cycle,
    fibonacci_multiple_of,
};
use crate::error::Error;
use crate::golden;
use crate::recurrence::{Modulus, Order, Seed};
use crate::survey::{bucketize, run_survey, SurveyRecord};

/// The membership rules the suite checks observations against. Swapping in
/// a deliberately wrong rule must make the suite fail.
#[derive(Clone, Copy)]
pub struct MembershipRules {
    pub fibonacci: fn(u64) -> bool,
    pub lucas: fn(u64) -> bool,
}

impl Default for MembershipRules {
    fn default() -> Self {
        MembershipRules {
            fibonacci: mf_contains,
            lucas: ml_contains,
        }
    }
}

impl MembershipRules {
    fn predicts(&self, seed: &Seed, m: u64) -> bool {
        match classify(seed).expect("order-2 seed") {
            SequenceClass::FibonacciClass => (self.fibonacci)(m),
            SequenceClass::LucasClass => (self.lucas)(m),
        }
    }
}

pub type CheckResult = std::result::Result<(), String>;

pub struct Check {
    pub id: &'static str,
    pub title: &'static str,
    pub run: fn(&MembershipRules) -> CheckResult,
}

pub struct Outcome {
    pub id: &'static str,
    pub title: &'static str,
    pub result: CheckResult,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

pub fn suite(name: &str) -> Option<&'static [Check]> {
    match name {
        "paper" => Some(PAPER_SUITE),
        _ => None,
    }
}

pub fn run(checks: &[Check], rules: &MembershipRules) -> Vec<Outcome> {
    checks
        .iter()
        .map(|c| Outcome {
            id: c.id,
            title: c.title,
            result: (c.run)(rules),
        })
        .collect()
}

pub const PAPER_SUITE: &[Check] = &[
    Check { id: "golden-cycles", title: "explicit Lucas, Fibonacci, A_n and B_n cycles", run: golden_cycles },
    Check { id: "term-count", title: "complete systems hold m^2 / m^3 terms", run: term_count },
    Check { id: "golden-systems", title: "explicit complete systems mod 2, 4, 5, 6, 14 and order 3 mod 2", run: golden_systems },
    Check { id: "lucas-sweep", title: "Lucas completeness for 2 <= m <= 2200", run: lucas_sweep },
    Check { id: "fibonacci-sweep", title: "Fibonacci completeness for 2 <= m <= 1000", run: fibonacci_sweep },
    Check { id: "classification", title: "invariant classification predicts completeness", run: classification_oracle },
    Check { id: "dominance-minimality", title: "Fibonacci dominance and Lucas minimality", run: dominance_minimality },
    Check { id: "three-power", title: "inductive 3^j system construction for j = 2..4", run: three_power },
    Check { id: "wall", title: "period lcm law and 5^k period ratio", run: wall },
    Check { id: "burr-lemma3", title: "lifting residues from m to 5m", run: burr_lemma3 },
    Check { id: "tribonacci-survey", title: "A_n / B_n completeness over the first 300 primes", run: tribonacci_survey },
    Check { id: "spot-facts", title: "individual Tribonacci completeness facts", run: spot_facts },
    Check { id: "zero-multiple", title: "zero in a cycle iff Fibonacci multiple", run: zero_multiple },
];

fn modulus(m: u64) -> Modulus {
    Modulus::new(m).expect("suite moduli are valid")
}

fn seed(terms: &[i64]) -> Seed {
    Seed::new(terms).expect("suite seeds are coprime")
}

/// Coprime pairs with both entries in `0..=max`.
pub fn coprime_pairs(max: i64) -> Vec<Seed> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            if a.gcd(&b) == 1 {
                out.push(seed(&[a, b]));
            }
        }
    }
    out
}

fn ensure(failures: Vec<String>) -> CheckResult {
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures.join("; "))
    }
}

fn golden_cycles(_: &MembershipRules) -> CheckResult {
    let mut failures = Vec::new();
    for listing in golden::CYCLES {
        let got = extract_cycle(&seed(listing.seed), modulus(listing.modulus));
        if got.residues() != canonical_rotation(listing.residues) {
            failures.push(format!(
                "{}: listed {} terms, computed {} terms {}",
                listing.name,
                listing.residues.len(),
                got.len(),
                got
            ));
        }
    }
    ensure(failures)
}

fn term_count(_: &MembershipRules) -> CheckResult {
    let mut failures = Vec::new();
    for (order, max) in [(Order::Two, 40u64), (Order::Three, 12)] {
        for m in 1..=max {
            let system = complete_system(modulus(m), order).map_err(|e| e.to_string())?;
            let want = m.pow(order.get() as u32);
            if system.term_count() != want {
                failures.push(format!("order {order} mod {m}: {} terms", system.term_count()));
            }
        }
    }
    ensure(failures)
}

fn golden_systems(_: &MembershipRules) -> CheckResult {
    let mut failures = Vec::new();
    for listing in golden::SYSTEMS {
        let m = modulus(listing.modulus);
        let order = Order::from_arity(listing.order).map_err(|e| e.to_string())?;
        let system = complete_system(m, order).map_err(|e| e.to_string())?;

        let fib = extract_cycle(&Seed::fibonacci(), m);
        let mut expected: Vec<Vec<u64>> = listing
            .cycles
            .iter()
            .map(|c| canonical_rotation(c))
            .chain(listing.fibonacci_multiples.iter().map(|&k| fib.scaled(k).residues().to_vec()))
            .collect();
        expected.sort();
        let mut got: Vec<Vec<u64>> = system.cycles().iter().map(|c| c.residues().to_vec()).collect();
        got.sort();
        if got != expected {
            let listed: usize = expected.iter().map(Vec::len).sum();
            failures.push(format!(
                "order {order} mod {m}: listing has {} cycles / {listed} terms, computed {} cycles / {} terms",
                expected.len(),
                got.len(),
                system.term_count()
            ));
        }
    }

    // mod 14: three Fibonacci multiples of length 48 plus 52 other terms
    let system = complete_system(modulus(14), Order::Two).map_err(|e| e.to_string())?;
    let long: u64 = system.cycles().iter().filter(|c| c.len() == 48).map(|c| c.len() as u64).sum();
    if (long, system.term_count() - long) != (144, 52) {
        failures.push(format!("mod 14 split {long} + {}", system.term_count() - long));
    }
    ensure(failures)
}

fn lucas_sweep(rules: &MembershipRules) -> CheckResult {
    let lucas = Seed::lucas();
    let failures = (2..=2200u64)
        .filter(|&m| is_complete(&lucas, modulus(m)).complete != (rules.lucas)(m))
        .map(|m| format!("m = {m}"))
        .collect();
    ensure(failures)
}

fn fibonacci_sweep(rules: &MembershipRules) -> CheckResult {
    let fib = Seed::fibonacci();
    let failures = (2..=1000u64)
        .filter(|&m| is_complete(&fib, modulus(m)).complete != (rules.fibonacci)(m))
        .map(|m| format!("m = {m}"))
        .collect();
    ensure(failures)
}

fn classification_oracle(rules: &MembershipRules) -> CheckResult {
    let mut failures = Vec::new();
    for s in coprime_pairs(12) {
        for m in 2..=500u64 {
            if rules.predicts(&s, m) != is_complete(&s, modulus(m)).complete {
                failures.push(format!("{s} mod {m}"));
            }
        }
    }
    ensure(failures)
}

fn dominance_minimality(rules: &MembershipRules) -> CheckResult {
    let seeds = coprime_pairs(12);
    let mut failures = Vec::new();
    for m in 2..=500u64 {
        if !is_complete(&Seed::fibonacci(), modulus(m)).complete {
            for s in &seeds {
                if is_complete(s, modulus(m)).complete {
                    failures.push(format!("{s} complete mod {m} where Fibonacci is not"));
                }
            }
        }
    }
    for m in (2..=2187u64).filter(|&m| (rules.lucas)(m)) {
        for s in &seeds {
            if !is_complete(s, modulus(m)).complete {
                failures.push(format!("{s} defective mod {m} where Lucas is complete"));
            }
        }
    }
    ensure(failures)
}

fn three_power(_: &MembershipRules) -> CheckResult {
    let mut failures = Vec::new();
    for j in 2..=4 {
        if !check_three_power_structure(j).map_err(|e| e.to_string())? {
            failures.push(format!("j = {j}"));
        }
    }
    ensure(failures)
}

fn wall(_: &MembershipRules) -> CheckResult {
    let mut failures = Vec::new();
    for s in coprime_pairs(8) {
        for m in 2..=300u64 {
            if !check_wall_thm2(&s, modulus(m)) {
                failures.push(format!("lcm law fails for {s} mod {m}"));
            }
        }
    }
    // 50 fixed pseudo-random seeds from a small LCG
    let mut state = 0x2545_f491_u64;
    let mut draw = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) % 201) as i64 - 100
    };
    let mut seeds = Vec::new();
    while seeds.len() < 50 {
        if let Ok(s) = Seed::new(&[draw(), draw()]) {
            seeds.push(s);
        }
    }
    for s in &seeds {
        for k in 1..=4 {
            if let Err(e) = check_wall_thm9(s, k) {
                failures.push(format!("5^{k}: {e}"));
            }
        }
    }
    ensure(failures)
}

fn burr_lemma3(_: &MembershipRules) -> CheckResult {
    let mut failures = Vec::new();
    for m in [5u64, 7, 25, 35] {
        for n in 1..=20 {
            match check_burr_lemma3(modulus(m), n) {
                Ok(true) | Err(Error::HypothesisNotMet(_)) => {}
                Ok(false) => failures.push(format!("m = {m}, n = {n}")),
                Err(e) => failures.push(format!("m = {m}, n = {n}: {e}")),
            }
        }
    }
    for m in [2u64, 4] {
        if !matches!(check_burr_lemma3(modulus(m), 1), Err(Error::HypothesisNotMet(_))) {
            failures.push(format!("m = {m} should not meet the hypothesis"));
        }
    }
    ensure(failures)
}

fn bucket_counts(records: &[SurveyRecord], size: usize) -> Vec<usize> {
    bucketize(records, NonZeroUsize::new(size).unwrap())
        .buckets
        .iter()
        .map(|b| b.complete)
        .collect()
}

fn tribonacci_survey(_: &MembershipRules) -> CheckResult {
    let mut failures = Vec::new();
    let cases = [
        ("A_n", Seed::tribonacci_a(), &golden::SURVEY_A_BY_20, &golden::SURVEY_A_BY_100, &golden::SURVEY_A_CUMULATIVE),
        ("B_n", Seed::tribonacci_b(), &golden::SURVEY_B_BY_20, &golden::SURVEY_B_BY_100, &golden::SURVEY_B_CUMULATIVE),
    ];
    for (name, s, by20, by100, cumulative) in cases {
        let records = run_survey(&s, 300).map_err(|e| e.to_string())?;
        let table = bucketize(&records, NonZeroUsize::new(100).unwrap());
        let got20 = bucket_counts(&records, 20);
        let got100 = bucket_counts(&records, 100);
        let got_cumulative: Vec<usize> = table.buckets.iter().map(|b| b.cumulative_complete).collect();
        if got20 != by20 {
            failures.push(format!("{name} by 20s: {got20:?}, published {by20:?}"));
        }
        if got100 != by100 {
            failures.push(format!("{name} by 100s: {got100:?}, published {by100:?}"));
        }
        if got_cumulative != cumulative {
            failures.push(format!("{name} cumulative: {got_cumulative:?}, published {cumulative:?}"));
        }
        let pct = table.buckets.last().map(|b| b.cumulative_percent);
        if pct != Some(golden::SURVEY_TOTAL_PERCENT) {
            failures.push(format!("{name} overall {pct:?}%, published {}%", golden::SURVEY_TOTAL_PERCENT));
        }
    }
    ensure(failures)
}

fn spot_facts(_: &MembershipRules) -> CheckResult {
    let mut failures = Vec::new();
    let mut expect = |s: Seed, m: u64, complete: bool| {
        if is_complete(&s, modulus(m)).complete != complete {
            failures.push(format!("{s} mod {m} should be {}", if complete { "complete" } else { "defective" }));
        }
    };
    let t123 = seed(&[1, 2, 3]);
    expect(t123, 2, true);
    expect(t123, 9, true);
    expect(t123, 67, false);
    for s in [Seed::tribonacci_a(), Seed::tribonacci_b()] {
        expect(s, 67, true);
        for j in 1..=5 {
            expect(s, 5u64.pow(j), true);
        }
    }
    ensure(failures)
}

fn zero_multiple(_: &MembershipRules) -> CheckResult {
    let mut failures = Vec::new();
    for m in 1..=30u64 {
        let m = modulus(m);
        let fib = extract_cycle(&Seed::fibonacci(), m);
        let system = complete_system(m, Order::Two).map_err(|e| e.to_string())?;
        for c in system.cycles() {
            let k = fibonacci_multiple_of(c).map_err(|e| e.to_string())?;
            match k {
                Some(k) if c.contains(0) && fib.scaled(k) == *c => {}
                None if !c.contains(0) => {}
                _ => failures.push(format!("{c} mod {m}: multiplier {k:?}")),
            }
        }
    }
    ensure(failures)
}
