//! Completeness of a sequence mod `m` and the invariant-based classification.
//!
//! A sequence is complete mod `m` when every residue appears in its cycle.
//! For order 2 the set of such `m` depends only on `a^2 + ab - b^2 (mod 5)`:
//! zero puts the seed in the Lucas class, anything else in the Fibonacci
//! class. The `check_*` functions recompute the supporting facts directly so
//! they can be probed for counterexamples.

use std::collections::BTreeSet;
use std::fmt;

use bitvec::prelude::*;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::recurrence::{
    period, terms_one_period, walk_orbit, Modulus, Order, Seed,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletenessReport {
    pub seed: Seed,
    pub modulus: Modulus,
    pub complete: bool,
    pub covered: BTreeSet<u64>,
    pub missing: BTreeSet<u64>,
    pub cycle_length: u64,
}

pub fn is_complete(seed: &Seed, m: Modulus) -> CompletenessReport {
    completeness_within(seed, m, u64::MAX).expect("unbounded walk")
}

/// [`is_complete`] with a cap on the number of recurrence steps.
pub fn completeness_within(seed: &Seed, m: Modulus, max_steps: u64) -> Result<CompletenessReport> {
    if m.get() > max_steps {
        return Err(Error::ResourceLimit {
            what: "residue table",
            needed: m.get() as u128,
            budget: max_steps,
        });
    }
    let mut seen = bitvec![0; m.get() as usize];
    let cycle_length = walk_orbit(&seed.state(m), max_steps, |r| seen.set(r as usize, true))?;
    let (mut covered, mut missing) = (BTreeSet::new(), BTreeSet::new());
    for (r, hit) in seen.iter().enumerate() {
        if *hit {
            covered.insert(r as u64);
        } else {
            missing.insert(r as u64);
        }
    }
    Ok(CompletenessReport {
        seed: *seed,
        modulus: m,
        complete: missing.is_empty(),
        covered,
        missing,
        cycle_length,
    })
}

/// `|a^2 + ab - b^2|` together with the signed value reduced mod 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantValue {
    pub magnitude: u128,
    pub residue_mod_5: u8,
}

pub fn gibonacci_invariant(seed: &Seed) -> Result<InvariantValue> {
    seed.expect_order(Order::Two)?;
    let (a, b) = (seed.terms()[0] as i128, seed.terms()[1] as i128);
    // |a^2 - b^2| and |ab| are both at most 2^126 and cannot peak together.
    let value = (a * a - b * b) + a * b;
    Ok(InvariantValue {
        magnitude: value.unsigned_abs(),
        residue_mod_5: value.rem_euclid(5) as u8,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SequenceClass {
    /// Complete exactly where the Fibonacci sequence is.
    FibonacciClass,
    /// Complete exactly where the Lucas numbers are.
    LucasClass,
}

impl SequenceClass {
    pub fn contains(self, m: u64) -> bool {
        match self {
            SequenceClass::FibonacciClass => mf_contains(m),
            SequenceClass::LucasClass => ml_contains(m),
        }
    }
}

impl fmt::Display for SequenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SequenceClass::FibonacciClass => "M_F",
            SequenceClass::LucasClass => "M_L",
        })
    }
}

pub fn classify(seed: &Seed) -> Result<SequenceClass> {
    Ok(if gibonacci_invariant(seed)?.residue_mod_5 == 0 {
        SequenceClass::LucasClass
    } else {
        SequenceClass::FibonacciClass
    })
}

fn is_power_of_three(mut n: u64) -> bool {
    if n < 3 {
        return false;
    }
    while n % 3 == 0 {
        n /= 3;
    }
    n == 1
}

/// Moduli where the Fibonacci sequence is complete:
/// `5^k`, `2*5^k`, `4*5^k`, `3^j*5^k`, `6*5^k`, `7*5^k`, `14*5^k`.
pub fn mf_contains(m: u64) -> bool {
    if m == 0 {
        return false;
    }
    let mut rest = m;
    while rest % 5 == 0 {
        rest /= 5;
    }
    matches!(rest, 1 | 2 | 4 | 6 | 7 | 14) || is_power_of_three(rest)
}

/// Moduli where the Lucas numbers are complete: 2, 4, 6, 7, 14 and `3^j`.
/// `m = 1` is included since every sequence is complete mod 1.
pub fn ml_contains(m: u64) -> bool {
    matches!(m, 1 | 2 | 4 | 6 | 7 | 14) || is_power_of_three(m)
}

/// Completeness predicted from the classification alone.
pub fn predicted_complete(seed: &Seed, m: Modulus) -> Result<bool> {
    Ok(classify(seed)?.contains(m.get()))
}

/// Complete mod `t*m` implies complete mod `m`.
pub fn check_descent(seed: &Seed, m: Modulus, t: u64) -> Result<bool> {
    if t == 0 {
        return Err(Error::InvalidArgument("multiplier t must be at least 1".into()));
    }
    let tm = m
        .get()
        .checked_mul(t)
        .ok_or_else(|| Error::InvalidArgument(format!("{t} * {m} overflows")))
        .and_then(Modulus::new)?;
    Ok(!is_complete(seed, tm).complete || is_complete(seed, m).complete)
}

/// Prime factorization by trial division, as `(p, e)` pairs ascending.
pub fn prime_power_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The period mod `m` equals the lcm of the periods mod its prime powers.
pub fn check_wall_thm2(seed: &Seed, m: Modulus) -> bool {
    let combined = prime_power_factors(m.get())
        .into_iter()
        .map(|(p, e)| period(seed, Modulus::new(p.pow(e)).expect("factor of a valid modulus")))
        .fold(1u64, |acc, h| acc.lcm(&h));
    combined == period(seed, m)
}

/// How the period of a seed mod `5^k` compares to the Fibonacci period.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FiveAdicLength {
    FullLength,
    FifthLength,
}

/// Observes the period ratio against the Fibonacci sequence mod `5^k` and
/// checks it against the invariant criterion (fifth length iff 5 divides
/// the invariant).
pub fn check_wall_thm9(seed: &Seed, k: u32) -> Result<FiveAdicLength> {
    let invariant = gibonacci_invariant(seed)?;
    if k == 0 {
        return Err(Error::InvalidArgument("exponent k must be at least 1".into()));
    }
    let m = 5u64
        .checked_pow(k)
        .ok_or_else(|| Error::InvalidArgument(format!("5^{k} overflows")))
        .and_then(Modulus::new)?;
    let own = period(seed, m);
    let fib = period(&Seed::fibonacci(), m);
    let observed = if own == fib {
        FiveAdicLength::FullLength
    } else if own * 5 == fib {
        FiveAdicLength::FifthLength
    } else {
        return Err(Error::TheoremViolated(format!(
            "period of {seed} mod {m} is {own}, Fibonacci period is {fib}"
        )));
    };
    let predicted = if invariant.residue_mod_5 == 0 {
        FiveAdicLength::FifthLength
    } else {
        FiveAdicLength::FullLength
    };
    if observed != predicted {
        return Err(Error::TheoremViolated(format!(
            "{seed} mod {m}: observed {observed:?}, invariant predicts {predicted:?}"
        )));
    }
    Ok(observed)
}

/// With `k` the Fibonacci period mod `m` and `5k` the period mod `5m`, the
/// terms `F_n, F_{n+k}, .., F_{n+4k} (mod 5m)` are exactly
/// `a, a+m, .., a+4m` where `a = F_n mod m`. Indices are 1-based.
pub fn check_burr_lemma3(m: Modulus, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("term index n is 1-based".into()));
    }
    let five_m = m
        .get()
        .checked_mul(5)
        .ok_or_else(|| Error::InvalidArgument(format!("5 * {m} overflows")))
        .and_then(Modulus::new)?;
    let fib = Seed::fibonacci();
    let k = period(&fib, m);
    let k5 = period(&fib, five_m);
    if k5 != 5 * k {
        return Err(Error::HypothesisNotMet(format!(
            "Fibonacci period mod {five_m} is {k5}, not 5 * {k}"
        )));
    }
    let cycle = terms_one_period(&fib, five_m);
    let term = |index: u64| cycle[((index - 1) % k5) as usize];
    let a = term(n) % m.get();
    let found: BTreeSet<u64> = (0..5).map(|i| term(n + i * k)).collect();
    let expected: BTreeSet<u64> = (0..5).map(|i| a + i * m.get()).collect();
    Ok(found == expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn modulus(m: u64) -> Modulus {
        Modulus::new(m).unwrap()
    }

    fn seed(t: &[i64]) -> Seed {
        Seed::new(t).unwrap()
    }

    #[test]
    fn is_complete_examples() {
        let r = is_complete(&Seed::lucas(), modulus(5));
        assert!(!r.complete);
        assert_eq!(r.missing, BTreeSet::from([0]));
        assert_eq!(r.cycle_length, 4);

        assert!(is_complete(&Seed::lucas(), modulus(14)).complete);

        let r = is_complete(&Seed::tribonacci_b(), modulus(9));
        assert!(!r.complete);
        assert!(r.missing.contains(&3));
    }

    #[test]
    fn report_partitions_residues() {
        let r = is_complete(&seed(&[2, 5]), modulus(11));
        let all: BTreeSet<u64> = r.covered.union(&r.missing).copied().collect();
        assert_eq!(all, (0..11).collect());
        assert!(r.covered.len() as u64 <= r.cycle_length);
    }

    #[test]
    fn modulus_one_is_complete() {
        for s in [Seed::fibonacci(), Seed::lucas(), Seed::tribonacci_a()] {
            assert!(is_complete(&s, modulus(1)).complete);
        }
        assert!(mf_contains(1) && ml_contains(1));
    }

    #[test]
    fn completeness_budget() {
        assert!(matches!(
            completeness_within(&Seed::fibonacci(), modulus(10), 10),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn invariant_examples() {
        assert_eq!(gibonacci_invariant(&Seed::fibonacci()).unwrap().magnitude, 1);
        assert_eq!(gibonacci_invariant(&Seed::lucas()).unwrap().magnitude, 5);
        // (4, 0) is not coprime, so the value is computed on the raw pair.
        let (a, b) = (4i128, 0i128);
        assert_eq!((a * a + a * b - b * b).unsigned_abs(), 16);
        let v = gibonacci_invariant(&seed(&[4, 1])).unwrap();
        assert_eq!(v.magnitude, 19);
        assert_eq!(v.residue_mod_5, 4);
        assert!(gibonacci_invariant(&Seed::tribonacci_a()).is_err());
    }

    #[test]
    fn invariant_extremes_do_not_overflow() {
        let v = gibonacci_invariant(&seed(&[i64::MIN, 1])).unwrap();
        let a = i64::MIN as i128;
        assert_eq!(v.magnitude, (a * a + a - 1).unsigned_abs());
        assert!(gibonacci_invariant(&seed(&[i64::MAX, i64::MIN])).is_ok());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&Seed::lucas()).unwrap(), SequenceClass::LucasClass);
        assert_eq!(classify(&Seed::fibonacci()).unwrap(), SequenceClass::FibonacciClass);
        let s = seed(&[2, 3]);
        assert_eq!(classify(&s).unwrap(), SequenceClass::FibonacciClass);
        assert!(is_complete(&s, modulus(5)).complete);
        assert_eq!(SequenceClass::LucasClass.to_string(), "M_L");
    }

    #[test]
    fn membership_examples() {
        assert!(mf_contains(175));
        assert!(!ml_contains(45));
        assert!(ml_contains(81));
        assert!(!mf_contains(0) && !ml_contains(0));
        assert!(!mf_contains(8) && !mf_contains(11) && !mf_contains(28));
        assert!(mf_contains(3 * 3 * 3 * 125));
        assert!(!ml_contains(10) && !ml_contains(18));
    }

    #[test]
    fn predicted_complete_examples() {
        assert!(!predicted_complete(&Seed::lucas(), modulus(10)).unwrap());
        let s = seed(&[11, 7]);
        assert_eq!(gibonacci_invariant(&s).unwrap().residue_mod_5, 4);
        assert!(predicted_complete(&s, modulus(25)).unwrap());
        assert!(is_complete(&s, modulus(25)).complete);
        for t in [[1, 1], [1, 3], [2, 9], [-4, 7]] {
            assert!(predicted_complete(&seed(&t), modulus(3)).unwrap());
        }
    }

    #[test]
    fn descent_examples() {
        assert!(check_descent(&Seed::lucas(), modulus(5), 9).unwrap());
        assert!(check_descent(&Seed::fibonacci(), modulus(7), 2).unwrap());
        assert!(is_complete(&Seed::fibonacci(), modulus(14)).complete);
        assert!(check_descent(&Seed::tribonacci_b(), modulus(3), 3).unwrap());
        assert!(check_descent(&Seed::fibonacci(), modulus(7), 0).is_err());
    }

    #[test]
    fn factorization() {
        assert_eq!(prime_power_factors(1), []);
        assert_eq!(prime_power_factors(360), [(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_power_factors(97), [(97, 1)]);
    }

    #[test]
    fn wall_thm2_examples() {
        let f = Seed::fibonacci();
        assert_eq!(period(&f, modulus(2)), 3);
        assert_eq!(period(&f, modulus(5)), 20);
        assert!(check_wall_thm2(&f, modulus(10)));
        assert_eq!(period(&f, modulus(7)), 16);
        assert_eq!(period(&f, modulus(35)), 80);
        assert!(check_wall_thm2(&f, modulus(35)));
        assert!(check_wall_thm2(&Seed::lucas(), modulus(45)));
    }

    #[test]
    fn wall_thm9_examples() {
        assert_eq!(
            check_wall_thm9(&Seed::lucas(), 1).unwrap(),
            FiveAdicLength::FifthLength
        );
        assert_eq!(
            check_wall_thm9(&Seed::fibonacci(), 2).unwrap(),
            FiveAdicLength::FullLength
        );
        assert_eq!(period(&Seed::lucas(), modulus(25)), 20);
        assert_eq!(period(&Seed::fibonacci(), modulus(25)), 100);
        assert_eq!(
            check_wall_thm9(&Seed::lucas(), 2).unwrap(),
            FiveAdicLength::FifthLength
        );
        assert!(check_wall_thm9(&Seed::lucas(), 0).is_err());
    }

    /// Oracle for the lemma: plain integer Fibonacci numbers reduced mod 5m.
    fn fib_mod(index: u64, m: u64) -> u64 {
        let (mut a, mut b) = (1u64, 1u64);
        for _ in 1..index {
            (a, b) = (b, (a + b) % m);
        }
        a
    }

    #[test]
    fn burr_lemma3_examples() {
        let terms: Vec<u64> = [1, 17, 33, 49, 65].iter().map(|&i| fib_mod(i, 35)).collect();
        let mut sorted = terms.clone();
        sorted.sort();
        assert_eq!(sorted, [1, 8, 15, 22, 29]);
        assert!(check_burr_lemma3(modulus(7), 1).unwrap());

        let mut terms: Vec<u64> = [1, 21, 41, 61, 81].iter().map(|&i| fib_mod(i, 25)).collect();
        terms.sort();
        assert_eq!(terms, [1, 6, 11, 16, 21]);
        assert!(check_burr_lemma3(modulus(5), 1).unwrap());

        assert!(matches!(
            check_burr_lemma3(modulus(2), 1),
            Err(Error::HypothesisNotMet(_))
        ));
        assert!(check_burr_lemma3(modulus(7), 0).is_err());
    }
}
