//! Gibonacci (order 2) and Tribonacci (order 3) recurrences modulo `m`.
//!
//! A sequence is driven by a sliding window of `order` consecutive residues.
//! The window map `(x_1, .., x_k) -> (x_2, .., x_k, x_1 + .. + x_k)` is a
//! bijection on `(Z/m)^k`, so every orbit is purely periodic and the period
//! is found by iterating until the starting window comes back.

use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Default number of steps a single period search may take.
pub const DEFAULT_ITERATION_BUDGET: u64 = 1_000_000_000;

/// Largest supported modulus. Keeps `3 * (m - 1)` inside a `u64`.
pub const MAX_MODULUS: u64 = 1 << 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Two = 2,
    Three = 3,
}

impl Order {
    pub fn from_arity(len: usize) -> Result<Self> {
        match len {
            2 => Ok(Order::Two),
            3 => Ok(Order::Three),
            n => Err(Error::WrongArity(n)),
        }
    }

    pub fn get(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.get())
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(*self as u8)
    }
}

/// Validated initial terms of a sequence: two or three integers with gcd 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed {
    terms: [i64; 3],
    order: Order,
}

impl Seed {
    pub fn new(terms: &[i64]) -> Result<Self> {
        let order = Order::from_arity(terms.len())?;
        let gcd = terms
            .iter()
            .fold(0u64, |acc, t| acc.gcd(&t.unsigned_abs()));
        if gcd != 1 {
            return Err(Error::NonCoprimeSeed {
                terms: terms.to_vec(),
                gcd,
            });
        }
        let mut buf = [0i64; 3];
        buf[..terms.len()].copy_from_slice(terms);
        Ok(Seed { terms: buf, order })
    }

    /// F_n = G_n(1, 1).
    pub fn fibonacci() -> Self {
        Seed::new(&[1, 1]).unwrap()
    }

    /// L_n = G_n(1, 3).
    pub fn lucas() -> Self {
        Seed::new(&[1, 3]).unwrap()
    }

    /// A_n = T_n(1, 1, 1).
    pub fn tribonacci_a() -> Self {
        Seed::new(&[1, 1, 1]).unwrap()
    }

    /// B_n = T_n(1, 1, 2).
    pub fn tribonacci_b() -> Self {
        Seed::new(&[1, 1, 2]).unwrap()
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms[..self.order.get()]
    }

    /// The seed window reduced into `[0, m)`.
    pub fn state(&self, m: Modulus) -> StateVector {
        let mut window = [0u64; 3];
        for (slot, &t) in window.iter_mut().zip(self.terms()) {
            *slot = reduce(t, m.get());
        }
        StateVector {
            window,
            order: self.order,
            modulus: m,
        }
    }

    pub(crate) fn expect_order(&self, expected: Order) -> Result<()> {
        if self.order == expected {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                expected,
                found: self.order,
            })
        }
    }
}

impl fmt::Debug for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Seed{:?}", self.terms())
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.terms().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Seed {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms().serialize(serializer)
    }
}

/// Validates raw seed terms.
pub fn validate_seed(terms: &[i64]) -> Result<Seed> {
    Seed::new(terms)
}

fn reduce(value: i64, m: u64) -> u64 {
    (value as i128).rem_euclid(m as i128) as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 || m > MAX_MODULUS {
            return Err(Error::InvalidModulus {
                value: m,
                max: MAX_MODULUS,
            });
        }
        Ok(Modulus(m))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Number of windows of the given order, `m^order`, if it fits.
    pub fn state_count(self, order: Order) -> Option<u64> {
        self.0.checked_pow(order.get() as u32)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A window of `order` consecutive residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StateVector {
    window: [u64; 3],
    order: Order,
    modulus: Modulus,
}

impl StateVector {
    pub fn new(window: &[u64], modulus: Modulus) -> Result<Self> {
        let order = Order::from_arity(window.len())?;
        let mut buf = [0u64; 3];
        for (slot, &r) in buf.iter_mut().zip(window) {
            if r >= modulus.get() {
                return Err(Error::ResidueOutOfRange {
                    residue: r,
                    modulus: modulus.get(),
                });
            }
            *slot = r;
        }
        Ok(StateVector {
            window: buf,
            order,
            modulus,
        })
    }

    pub fn window(&self) -> &[u64] {
        &self.window[..self.order.get()]
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Lexicographic rank of the window in `0..m^order`.
    pub(crate) fn index(&self) -> u64 {
        let m = self.modulus.get();
        self.window().iter().fold(0, |acc, &r| acc * m + r)
    }

    pub(crate) fn from_index(mut index: u64, order: Order, modulus: Modulus) -> Self {
        let m = modulus.get();
        let mut window = [0u64; 3];
        for slot in window[..order.get()].iter_mut().rev() {
            *slot = index % m;
            index /= m;
        }
        StateVector {
            window,
            order,
            modulus,
        }
    }

    pub fn next(&self) -> Self {
        let m = self.modulus.get();
        let mut window = self.window;
        match self.order {
            Order::Two => {
                let [a, b, _] = window;
                window = [b, add_mod(a, b, m), 0];
            }
            Order::Three => {
                let [a, b, c] = window;
                window = [b, c, add_mod(add_mod(a, b, m), c, m)];
            }
        }
        StateVector { window, ..*self }
    }

    pub fn prev(&self) -> Self {
        let m = self.modulus.get();
        let mut window = self.window;
        match self.order {
            Order::Two => {
                let [a, b, _] = window;
                window = [sub_mod(b, a, m), a, 0];
            }
            Order::Three => {
                let [a, b, c] = window;
                window = [sub_mod(sub_mod(c, a, m), b, m), a, b];
            }
        }
        StateVector { window, ..*self }
    }
}

#[inline]
fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

pub fn next_state(s: &StateVector) -> StateVector {
    s.next()
}

pub fn prev_state(s: &StateVector) -> StateVector {
    s.prev()
}

/// Walks the orbit of `start`, calling `visit` with the leading residue of
/// every window, and returns the period. Fails if the orbit is longer than
/// `max_steps`.
pub(crate) fn walk_orbit<F: FnMut(u64)>(
    start: &StateVector,
    max_steps: u64,
    mut visit: F,
) -> Result<u64> {
    let m = start.modulus.get();
    let mut steps = 0u64;
    match start.order {
        Order::Two => {
            let [a0, b0, _] = start.window;
            let (mut a, mut b) = (a0, b0);
            loop {
                visit(a);
                (a, b) = (b, add_mod(a, b, m));
                steps += 1;
                if a == a0 && b == b0 {
                    break;
                }
                if steps >= max_steps {
                    return Err(over_budget(max_steps));
                }
            }
        }
        Order::Three => {
            let [a0, b0, c0] = start.window;
            let (mut a, mut b, mut c) = (a0, b0, c0);
            loop {
                visit(a);
                (a, b, c) = (b, c, add_mod(add_mod(a, b, m), c, m));
                steps += 1;
                if a == a0 && b == b0 && c == c0 {
                    break;
                }
                if steps >= max_steps {
                    return Err(over_budget(max_steps));
                }
            }
        }
    }
    Ok(steps)
}

fn over_budget(max_steps: u64) -> Error {
    Error::ResourceLimit {
        what: "period search",
        needed: max_steps as u128 + 1,
        budget: max_steps,
    }
}

/// Least `h >= 1` with `G_{n+h} = G_n (mod m)` for all `n`.
pub fn period(seed: &Seed, m: Modulus) -> u64 {
    walk_orbit(&seed.state(m), u64::MAX, |_| {}).expect("unbounded walk")
}

/// Like [`period`], but gives up after `max_steps` iterations.
pub fn period_within(seed: &Seed, m: Modulus, max_steps: u64) -> Result<u64> {
    walk_orbit(&seed.state(m), max_steps, |_| {})
}

/// `G_1, .., G_h (mod m)` for one full period, starting at the seed.
pub fn terms_one_period(seed: &Seed, m: Modulus) -> Vec<u64> {
    let mut out = Vec::new();
    walk_orbit(&seed.state(m), u64::MAX, |r| out.push(r)).expect("unbounded walk");
    out
}

/// The infinite sequence `G_1, G_2, .. (mod m)`.
pub fn terms(seed: &Seed, m: Modulus) -> Terms {
    Terms {
        state: seed.state(m),
    }
}

#[derive(Clone, Debug)]
pub struct Terms {
    state: StateVector,
}

impl Iterator for Terms {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let head = self.state.window[0];
        self.state = self.state.next();
        Some(head)
    }
}
