//! Published cycles, complete systems and survey tables, transcribed as
//! printed. Listings are in the order they were printed, not canonical
//! rotation; compare them through [`crate::cycle::canonical_rotation`].

/// A printed cycle listing for `seed` mod `modulus`.
#[derive(Clone, Copy, Debug)]
pub struct CycleListing {
    pub name: &'static str,
    pub seed: &'static [i64],
    pub modulus: u64,
    pub residues: &'static [u64],
}

pub const FIBONACCI_MOD_4: &[u64] = &[1, 1, 2, 3, 1, 0];

pub const FIBONACCI_MOD_14: &[u64] = &[
    1, 1, 2, 3, 5, 8, 13, 7, //
    6, 13, 5, 4, 9, 13, 8, 7, //
    1, 8, 9, 3, 12, 1, 13, 0, //
    13, 13, 12, 11, 9, 6, 1, 7, //
    8, 1, 9, 10, 5, 1, 6, 7, //
    13, 6, 5, 11, 2, 13, 1, 0,
];

pub const LUCAS_MOD_4: &[u64] = &[1, 3, 0, 3, 3, 2];

pub const LUCAS_MOD_5: &[u64] = &[1, 3, 4, 2];

/// Printed with 15 terms.
pub const LUCAS_MOD_6: &[u64] = &[1, 3, 4, 1, 5, 0, 5, 5, 4, 3, 1, 4, 5, 3, 2];

pub const LUCAS_MOD_14: &[u64] = &[
    1, 3, 4, 7, 11, 4, 1, 5, //
    6, 11, 3, 0, 3, 3, 6, 9, //
    1, 10, 11, 7, 4, 11, 1, 12, //
    13, 11, 10, 7, 3, 10, 13, 9, //
    8, 3, 11, 0, 11, 11, 8, 5, //
    13, 4, 3, 7, 10, 3, 13, 2,
];

pub const TRIBONACCI_A_MOD_2: &[u64] = &[1];

pub const TRIBONACCI_B_MOD_2: &[u64] = &[1, 1, 0, 0];

pub const TRIBONACCI_A_MOD_9: &[u64] = &[
    1, 1, 1, 3, 5, 0, 8, 4, 3, 6, 4, 4, 5, //
    4, 4, 4, 3, 2, 0, 5, 7, 3, 6, 7, 7, 2, //
    7, 7, 7, 3, 8, 0, 2, 1, 3, 6, 1, 1, 8,
];

pub const TRIBONACCI_B_MOD_9: &[u64] = &[
    1, 1, 2, 4, 7, 4, 6, 8, 0, 5, 4, 0, 0, //
    4, 4, 8, 7, 1, 7, 6, 5, 0, 2, 7, 0, 0, //
    7, 7, 5, 1, 4, 1, 6, 2, 0, 8, 1, 0, 0,
];

pub const CYCLES: &[CycleListing] = &[
    CycleListing { name: "Lucas mod 4", seed: &[1, 3], modulus: 4, residues: LUCAS_MOD_4 },
    CycleListing { name: "Lucas mod 5", seed: &[1, 3], modulus: 5, residues: LUCAS_MOD_5 },
    CycleListing { name: "Lucas mod 6", seed: &[1, 3], modulus: 6, residues: LUCAS_MOD_6 },
    CycleListing { name: "Lucas mod 14", seed: &[1, 3], modulus: 14, residues: LUCAS_MOD_14 },
    CycleListing { name: "Fibonacci mod 4", seed: &[1, 1], modulus: 4, residues: FIBONACCI_MOD_4 },
    CycleListing { name: "Fibonacci mod 14", seed: &[1, 1], modulus: 14, residues: FIBONACCI_MOD_14 },
    CycleListing { name: "A_n mod 2", seed: &[1, 1, 1], modulus: 2, residues: TRIBONACCI_A_MOD_2 },
    CycleListing { name: "B_n mod 2", seed: &[1, 1, 2], modulus: 2, residues: TRIBONACCI_B_MOD_2 },
    CycleListing { name: "A_n mod 9", seed: &[1, 1, 1], modulus: 9, residues: TRIBONACCI_A_MOD_9 },
    CycleListing { name: "B_n mod 9", seed: &[1, 1, 2], modulus: 9, residues: TRIBONACCI_B_MOD_9 },
];

/// A printed complete system. `fibonacci_multiples` lists the `k` for which
/// the system is said to contain `k * F mod m` without printing it.
#[derive(Clone, Copy, Debug)]
pub struct SystemListing {
    pub modulus: u64,
    pub order: usize,
    pub cycles: &'static [&'static [u64]],
    pub fibonacci_multiples: &'static [u64],
}

pub const SYSTEMS: &[SystemListing] = &[
    SystemListing {
        modulus: 2,
        order: 2,
        cycles: &[&[1, 1, 0], &[0]],
        fibonacci_multiples: &[],
    },
    SystemListing {
        modulus: 4,
        order: 2,
        cycles: &[&[1, 1, 2, 3, 1, 0], &[3, 3, 2, 1, 3, 0], &[2, 2, 0], &[0]],
        fibonacci_multiples: &[],
    },
    SystemListing {
        modulus: 5,
        order: 2,
        cycles: &[
            &[1, 1, 2, 3, 0, 3, 3, 1, 4, 0, 4, 4, 3, 2, 0, 2, 2, 4, 1, 0],
            &[1, 3, 4, 2],
            &[0],
        ],
        fibonacci_multiples: &[],
    },
    SystemListing {
        modulus: 6,
        order: 2,
        cycles: &[
            &[1, 1, 2, 3, 5, 2, 1, 3, 4, 1, 5, 0, 5, 5, 4, 3, 1, 4, 5, 3, 2, 5, 1, 0],
            &[2, 2, 4, 0, 4, 4, 2, 0],
            &[3, 3, 0],
            &[0],
        ],
        fibonacci_multiples: &[],
    },
    SystemListing {
        modulus: 14,
        order: 2,
        cycles: &[
            FIBONACCI_MOD_14,
            &[2, 2, 4, 6, 10, 2, 12, 0, 12, 12, 10, 8, 4, 12, 2, 0],
            &[4, 4, 8, 12, 6, 4, 10, 0, 10, 10, 6, 2, 8, 10, 4, 0],
            // printed with 15 terms
            &[6, 6, 12, 4, 2, 6, 8, 0, 8, 8, 2, 10, 12, 8, 6],
            &[7, 7, 0],
            &[0],
        ],
        fibonacci_multiples: &[3, 5],
    },
    SystemListing {
        modulus: 2,
        order: 3,
        cycles: &[&[0], &[1], &[1, 1, 0, 0], &[1, 0]],
        fibonacci_multiples: &[],
    },
];

/// Complete system mod 3, the base of the inductive `3^j` construction.
pub const SYSTEM_MOD_3: &[&[u64]] = &[&[0, 1, 1, 2, 0, 2, 2, 1], &[0]];

/// Survey tables over the first 300 primes, buckets of 20.
pub const SURVEY_BUCKET_RANGES: [(u64, u64); 15] = [
    (2, 71),
    (73, 173),
    (179, 281),
    (283, 409),
    (419, 541),
    (547, 659),
    (661, 809),
    (811, 941),
    (947, 1069),
    (1087, 1223),
    (1229, 1373),
    (1381, 1511),
    (1523, 1657),
    (1663, 1811),
    (1823, 1987),
];

pub const SURVEY_A_BY_20: [usize; 15] = [12, 11, 11, 14, 14, 12, 12, 11, 16, 8, 10, 14, 9, 15, 15];
pub const SURVEY_B_BY_20: [usize; 15] = [16, 12, 12, 12, 12, 12, 11, 12, 14, 10, 11, 12, 12, 12, 14];
pub const SURVEY_A_BY_100: [usize; 3] = [62, 59, 63];
pub const SURVEY_B_BY_100: [usize; 3] = [64, 59, 61];
pub const SURVEY_A_CUMULATIVE: [usize; 3] = [62, 121, 184];
pub const SURVEY_B_CUMULATIVE: [usize; 3] = [64, 123, 184];
pub const SURVEY_TOTAL_PERCENT: f64 = 61.3;
