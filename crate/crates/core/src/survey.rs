//! Completeness surveys over the first `n` primes.
//!
//! Each prime is an independent work item. Results are always returned in
//! ascending prime order regardless of how many worker threads ran them.

use std::fmt;
use std::io::Write;
use std::num::NonZeroUsize;

use rayon::prelude::*;
use serde::Serialize;

use crate::completeness::completeness_within;
use crate::error::{Error, Result};
use crate::recurrence::{Modulus, Order, Seed, DEFAULT_ITERATION_BUDGET};

/// The first `n` primes, ascending.
pub fn first_n_primes(n: usize) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    // Rosser's bound p_n < n (ln n + ln ln n) holds for n >= 6.
    let mut limit = if n < 6 {
        15
    } else {
        let x = n as f64;
        (x * (x.ln() + x.ln().ln())) as usize + 3
    };
    loop {
        let primes = sieve(limit);
        if primes.len() >= n {
            return primes.into_iter().take(n).collect();
        }
        limit *= 2;
    }
}

fn sieve(limit: usize) -> Vec<u64> {
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRecord {
    pub prime: u64,
    pub complete: bool,
    pub cycle_length: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct SurveyOptions {
    /// Worker threads; `None` uses every available core.
    pub jobs: Option<NonZeroUsize>,
    /// Per-prime cap on recurrence steps.
    pub max_steps: u64,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            jobs: None,
            max_steps: DEFAULT_ITERATION_BUDGET,
        }
    }
}

pub fn run_survey(seed: &Seed, n_primes: usize) -> Result<Vec<SurveyRecord>> {
    run_survey_with(seed, n_primes, &SurveyOptions::default())
}

pub fn run_survey_with(
    seed: &Seed,
    n_primes: usize,
    options: &SurveyOptions,
) -> Result<Vec<SurveyRecord>> {
    let primes = first_n_primes(n_primes);
    let survey_one = |&p: &u64| -> Result<SurveyRecord> {
        let report = completeness_within(seed, Modulus::new(p)?, options.max_steps)?;
        Ok(SurveyRecord {
            prime: p,
            complete: report.complete,
            cycle_length: report.cycle_length,
        })
    };

    if options.jobs.map(NonZeroUsize::get) == Some(1) {
        return primes.iter().map(survey_one).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs.map_or(0, NonZeroUsize::get))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    // Indexed collect keeps prime order.
    pool.install(|| primes.par_iter().map(survey_one).collect())
}

/// One row of a bucketed survey, with running totals up to its last prime.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Bucket {
    pub first_prime: u64,
    pub last_prime: u64,
    pub primes: usize,
    pub complete: usize,
    pub percent: f64,
    pub cumulative_primes: usize,
    pub cumulative_complete: usize,
    pub cumulative_percent: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurveyTable {
    pub bucket_size: usize,
    pub buckets: Vec<Bucket>,
    pub total: usize,
    pub total_complete: usize,
}

/// `count / size` as a percentage rounded half-up to one decimal.
pub fn percent(count: usize, size: usize) -> f64 {
    if size == 0 {
        return 0.0;
    }
    let permille = (count as u128 * 2000 + size as u128) / (2 * size as u128);
    permille as f64 / 10.0
}

/// Groups records by prime count; a trailing partial bucket is kept as is.
pub fn bucketize(records: &[SurveyRecord], bucket_size: NonZeroUsize) -> SurveyTable {
    let mut buckets = Vec::new();
    let (mut seen, mut complete_so_far) = (0, 0);
    for chunk in records.chunks(bucket_size.get()) {
        let complete = chunk.iter().filter(|r| r.complete).count();
        seen += chunk.len();
        complete_so_far += complete;
        buckets.push(Bucket {
            first_prime: chunk[0].prime,
            last_prime: chunk[chunk.len() - 1].prime,
            primes: chunk.len(),
            complete,
            percent: percent(complete, chunk.len()),
            cumulative_primes: seen,
            cumulative_complete: complete_so_far,
            cumulative_percent: percent(complete_so_far, seen),
        });
    }
    SurveyTable {
        bucket_size: bucket_size.get(),
        buckets,
        total: seen,
        total_complete: complete_so_far,
    }
}

impl fmt::Display for SurveyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<13} {:>8} {:>7}   {:<13} {:>8} {:>7}",
            "primes", "complete", "%", "cumulative", "complete", "%"
        )?;
        for b in &self.buckets {
            let range = format!("{} - {}", b.first_prime, b.last_prime);
            let first = self.buckets[0].first_prime;
            let running = format!("{} - {}", first, b.last_prime);
            writeln!(
                f,
                "{:<13} {:>8} {:>6.1}%   {:<13} {:>8} {:>6.1}%",
                range, b.complete, b.percent, running, b.cumulative_complete, b.cumulative_percent
            )?;
        }
        Ok(())
    }
}

/// A finished survey: the seed, its per-prime records and their buckets.
#[derive(Clone, Debug, PartialEq)]
pub struct SurveyReport {
    pub seed: Seed,
    pub records: Vec<SurveyRecord>,
    pub table: SurveyTable,
}

impl SurveyReport {
    pub fn new(seed: Seed, records: Vec<SurveyRecord>, bucket_size: NonZeroUsize) -> Self {
        let table = bucketize(&records, bucket_size);
        SurveyReport {
            seed,
            records,
            table,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Json,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    seed: &'a Seed,
    order: Order,
    records: &'a [SurveyRecord],
    buckets: &'a [Bucket],
    total_complete: usize,
}

pub fn export<W: Write>(report: &SurveyReport, format: ExportFormat, out: W) -> Result<()> {
    match format {
        ExportFormat::Csv => write_csv(&report.records, out),
        ExportFormat::Json => write_json(report, out),
    }
}

/// `prime,complete,cycle_length` rows sorted by prime, LF line endings.
pub fn write_csv<W: Write>(records: &[SurveyRecord], out: W) -> Result<()> {
    let mut sorted = records.to_vec();
    sorted.sort_by_key(|r| r.prime);
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(["prime", "complete", "cycle_length"])
        .map_err(std::io::Error::from)?;
    for r in &sorted {
        w.serialize(r).map_err(std::io::Error::from)?;
    }
    w.flush()?;
    Ok(())
}

fn write_json<W: Write>(report: &SurveyReport, mut out: W) -> Result<()> {
    let mut records = report.records.clone();
    records.sort_by_key(|r| r.prime);
    let doc = JsonReport {
        seed: &report.seed,
        order: report.seed.order(),
        records: &records,
        buckets: &report.table.buckets,
        total_complete: report.table.total_complete,
    };
    serde_json::to_writer_pretty(&mut out, &doc).map_err(std::io::Error::from)?;
    out.write_all(b"\n")?;
    Ok(())
}
