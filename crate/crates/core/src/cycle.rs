//! Canonical cycles, cycle equivalence and complete systems.
//!
//! Two cycles are equivalent when one is a rotation of the other, so every
//! cycle is stored in its lexicographically least rotation and equivalence
//! becomes plain equality. A complete system is the orbit decomposition of
//! the window map on all `m^order` windows.

use std::cmp::Ordering;
use std::fmt;

use bitvec::prelude::*;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::recurrence::{terms_one_period, Modulus, Order, Seed, StateVector};

/// Default number of windows `complete_system` may enumerate.
pub const DEFAULT_STATE_BUDGET: u64 = 100_000_000;

/// Start index of the lexicographically least rotation.
fn least_rotation_start<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        match s[(i + k) % n].cmp(&s[(j + k) % n]) {
            Ordering::Equal => {
                k += 1;
                continue;
            }
            Ordering::Greater => i += k + 1,
            Ordering::Less => j += k + 1,
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

pub fn canonical_rotation<T: Ord + Clone>(residues: &[T]) -> Vec<T> {
    if residues.is_empty() {
        return Vec::new();
    }
    let start = least_rotation_start(residues);
    let mut out = Vec::with_capacity(residues.len());
    out.extend_from_slice(&residues[start..]);
    out.extend_from_slice(&residues[..start]);
    out
}

/// Smallest `d` such that the cyclic list is invariant under rotation by `d`.
fn least_period<T: Eq>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    // prefix function
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    let p = n - pi[n - 1];
    if n % p == 0 {
        p
    } else {
        n
    }
}

/// A residue cycle of a recurrence mod `m`, in canonical rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cycle {
    modulus: Modulus,
    order: Order,
    residues: Vec<u64>,
}

impl Cycle {
    /// Checks that `residues` closes up under the recurrence (with
    /// wraparound) and is not a repetition of a shorter cycle.
    pub fn new(modulus: Modulus, order: Order, residues: &[u64]) -> Result<Self> {
        if residues.is_empty() {
            return Err(Error::InvalidCycle("empty residue list"));
        }
        let m = modulus.get();
        if let Some(&r) = residues.iter().find(|&&r| r >= m) {
            return Err(Error::ResidueOutOfRange {
                residue: r,
                modulus: m,
            });
        }
        let h = residues.len();
        let k = order.get();
        for i in 0..h {
            let sum = (0..k).fold(0u64, |acc, j| (acc + residues[(i + j) % h]) % m);
            if sum != residues[(i + k) % h] {
                return Err(Error::InvalidCycle("recurrence does not hold"));
            }
        }
        if least_period(residues) != h {
            return Err(Error::InvalidCycle("repeats a shorter cycle"));
        }
        Ok(Self::from_orbit(modulus, order, residues))
    }

    /// `residues` must already be a primitive cycle.
    pub(crate) fn from_orbit(modulus: Modulus, order: Order, residues: &[u64]) -> Self {
        Cycle {
            modulus,
            order,
            residues: canonical_rotation(residues),
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        self.residues == [0]
    }

    pub fn contains(&self, residue: u64) -> bool {
        self.residues.contains(&residue)
    }

    /// Entrywise `k * self (mod m)`, collapsed to its primitive cycle.
    pub fn scaled(&self, k: u64) -> Cycle {
        let m = self.modulus.get();
        let k = k % m;
        let raw: Vec<u64> = self
            .residues
            .iter()
            .map(|&r| ((r as u128 * k as u128) % m as u128) as u64)
            .collect();
        let p = least_period(&raw);
        Self::from_orbit(self.modulus, self.order, &raw[..p])
    }

    /// Ordering used for reports: longer cycles first, then lexicographic.
    pub fn report_cmp(&self, other: &Cycle) -> Ordering {
        other
            .len()
            .cmp(&self.len())
            .then_with(|| self.residues.cmp(&other.residues))
    }

    fn ensure_compatible(&self, other: &Cycle) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                expected: self.order,
                found: other.order,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_residues(f, &self.residues)
    }
}

/// Renders residues as `(1, 3, 4, 2)`.
pub fn format_residues(residues: &[u64]) -> String {
    struct Show<'a>(&'a [u64]);
    impl fmt::Display for Show<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_residues(f, self.0)
        }
    }
    Show(residues).to_string()
}

fn write_residues(f: &mut fmt::Formatter<'_>, residues: &[u64]) -> fmt::Result {
    f.write_str("(")?;
    for (i, r) in residues.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{r}")?;
    }
    f.write_str(")")
}

/// The cycle traced by `seed` mod `m`.
pub fn extract_cycle(seed: &Seed, m: Modulus) -> Cycle {
    Cycle::from_orbit(m, seed.order(), &terms_one_period(seed, m))
}

pub fn equivalent(c1: &Cycle, c2: &Cycle) -> Result<bool> {
    c1.ensure_compatible(c2)?;
    Ok(c1.residues == c2.residues)
}

/// All inequivalent cycles mod `m` for one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompleteSystem {
    modulus: Modulus,
    order: Order,
    cycles: Vec<Cycle>,
    term_count: u64,
}

impl CompleteSystem {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn order(&self) -> Order {
        self.order
    }

    /// Sorted longest first, ties broken lexicographically.
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn term_count(&self) -> u64 {
        self.term_count
    }

    pub fn contains(&self, cycle: &Cycle) -> bool {
        self.cycles.iter().any(|c| c == cycle)
    }

    /// The member equivalent to the cycle of `seed`.
    pub fn cycle_of(&self, seed: &Seed) -> Result<&Cycle> {
        if seed.order() != self.order {
            return Err(Error::OrderMismatch {
                expected: self.order,
                found: seed.order(),
            });
        }
        let target = extract_cycle(seed, self.modulus);
        Ok(self
            .cycles
            .iter()
            .find(|c| **c == target)
            .expect("a complete system contains every cycle"))
    }
}

pub fn complete_system(m: Modulus, order: Order) -> Result<CompleteSystem> {
    complete_system_within(m, order, DEFAULT_STATE_BUDGET)
}

/// Decomposes the window map on `m^order` windows into orbits, refusing to
/// start when there are more than `state_budget` windows.
pub fn complete_system_within(
    m: Modulus,
    order: Order,
    state_budget: u64,
) -> Result<CompleteSystem> {
    let states = match m.state_count(order) {
        Some(n) if n <= state_budget => n,
        _ => {
            return Err(Error::ResourceLimit {
                what: "complete system enumeration",
                needed: (m.get() as u128).saturating_pow(order.get() as u32),
                budget: state_budget,
            })
        }
    };

    let mut visited = bitvec![0; states as usize];
    let mut cycles = Vec::new();
    let mut term_count = 0u64;
    for idx in 0..states {
        if visited[idx as usize] {
            continue;
        }
        let start = StateVector::from_index(idx, order, m);
        let mut residues = Vec::new();
        let mut s = start;
        loop {
            visited.set(s.index() as usize, true);
            residues.push(s.window()[0]);
            s = s.next();
            if s == start {
                break;
            }
        }
        term_count += residues.len() as u64;
        cycles.push(Cycle::from_orbit(m, order, &residues));
    }
    cycles.sort_by(Cycle::report_cmp);

    Ok(CompleteSystem {
        modulus: m,
        order,
        cycles,
        term_count,
    })
}

/// For an order-2 cycle containing 0, the residue right after a 0. Scaling
/// the Fibonacci cycle by it reproduces the cycle. `None` when 0 is absent.
pub fn fibonacci_multiple_of(c: &Cycle) -> Result<Option<u64>> {
    if c.order != Order::Two {
        return Err(Error::OrderMismatch {
            expected: Order::Two,
            found: c.order,
        });
    }
    let r = &c.residues;
    Ok(r.iter()
        .position(|&x| x == 0)
        .map(|i| r[(i + 1) % r.len()]))
}

/// Builds the complete system mod `3^j` inductively: multiples `k * F` for
/// `k < 3^j` prime to 3, plus three times every cycle mod `3^(j-1)`.
pub fn three_power_system(j: u32) -> Result<Vec<Cycle>> {
    let modulus = 3u64
        .checked_pow(j)
        .ok_or_else(|| Error::InvalidArgument(format!("3^{j} overflows")))
        .and_then(Modulus::new)?;
    if j == 0 {
        return Ok(vec![Cycle::from_orbit(modulus, Order::Two, &[0])]);
    }

    let fib = extract_cycle(&Seed::fibonacci(), modulus);
    let mut cycles: Vec<Cycle> = Vec::new();
    for k in (1..modulus.get()).filter(|k| k.gcd(&3) == 1) {
        let c = fib.scaled(k);
        if !cycles.contains(&c) {
            cycles.push(c);
        }
    }
    for lower in three_power_system(j - 1)? {
        let tripled: Vec<u64> = lower.residues().iter().map(|r| 3 * r).collect();
        cycles.push(Cycle::new(modulus, Order::Two, &tripled)?);
    }
    cycles.sort_by(Cycle::report_cmp);
    Ok(cycles)
}

/// Whether the inductive construction mod `3^j` equals the enumerated system.
pub fn check_three_power_structure(j: u32) -> Result<bool> {
    let built = three_power_system(j)?;
    let m = Modulus::new(3u64.pow(j))?;
    let system = complete_system(m, Order::Two)?;
    Ok(built == system.cycles)
}
