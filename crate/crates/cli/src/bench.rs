//! Wall-clock comparison of the direct enumerator against permutation
//! filtering.

use std::io::Write;
use std::thread;
use std::time::{Duration, Instant};

use fpfi::oracle::{naive_run, DEFAULT_SIZE_LIMIT};
use fpfi::{enumerate_prefix, ChoiceSequence, Rank};

use crate::commands::pair_count;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchOptions {
    pub size: usize,
    pub compare_oracle: bool,
    pub reps: usize,
    pub jobs: usize,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            size: 8,
            compare_oracle: false,
            reps: 3,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measurement {
    pub method: &'static str,
    pub size: usize,
    pub outputs: u64,
    /// Candidates inspected: permutations for the oracle, outputs otherwise.
    pub examined: u64,
    /// Median over the timed repetitions.
    pub wall: Duration,
    pub checksum: u64,
}

impl Measurement {
    pub fn outputs_per_second(&self) -> f64 {
        self.outputs as f64 / self.wall.as_secs_f64().max(1e-12)
    }
}

/// Order-independent digest of a run: the wrapping sum of a per-involution
/// polynomial hash over its slots.
#[derive(Debug, Clone)]
pub struct Checksum {
    powers: Vec<u64>,
}

impl Checksum {
    const BASE: u64 = 0x9e37_79b9_7f4a_7c15;

    pub fn new(size: usize) -> Self {
        let mut powers = Vec::with_capacity(size);
        let mut p = 1u64;
        for _ in 0..size {
            p = p.wrapping_mul(Self::BASE);
            powers.push(p);
        }
        Checksum { powers }
    }

    #[inline]
    pub fn digest(&self, slots: &[usize]) -> u64 {
        let h = slots
            .iter()
            .zip(&self.powers)
            .fold(0u64, |acc, (&v, &p)| acc.wrapping_add((v as u64).wrapping_mul(p)));
        h ^ (h >> 31)
    }
}

/// Runs the direct enumerator over `{1..2n}`, split across `jobs` threads by
/// choice-digit prefix. Returns `(outputs, checksum)`.
pub fn run_direct(n: usize, jobs: usize) -> (u64, u64) {
    let hasher = Checksum::new(2 * n);
    let jobs = jobs.max(1);
    // Shallowest prefix depth giving every worker several subtrees.
    let target = if jobs == 1 { 1 } else { 4 * jobs as u128 };
    let mut depth = 0;
    while depth < n && prefix_count(depth) < target {
        depth += 1;
    }
    let prefixes = prefix_count(depth) as usize;
    let run_range = |lo: usize, hi: usize| {
        let (mut outputs, mut sum) = (0u64, 0u64);
        for r in lo..hi {
            let prefix = ChoiceSequence::from_rank(depth, Rank::new(r as u128))
                .expect("prefix rank in range");
            enumerate_prefix(n, prefix.digits(), |v| {
                outputs += 1;
                sum = sum.wrapping_add(hasher.digest(v.slots()));
            })
            .expect("valid prefix");
        }
        (outputs, sum)
    };
    if jobs == 1 {
        return run_range(0, prefixes);
    }
    thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                let (lo, hi) = (w * prefixes / jobs, (w + 1) * prefixes / jobs);
                s.spawn(move || run_range(lo, hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("bench worker panicked"))
            .fold((0u64, 0u64), |(o, c), (wo, wc)| (o + wo, c.wrapping_add(wc)))
    })
}

/// Distinct digit prefixes of length `depth`.
fn prefix_count(depth: usize) -> u128 {
    fpfi::count(depth).unwrap_or(u128::MAX)
}

/// Permutation-filter baseline. Returns `(outputs, permutations, checksum)`.
pub fn run_oracle(n: usize) -> Result<(u64, u64, u64), CliError> {
    let run = naive_run(n, DEFAULT_SIZE_LIMIT).map_err(|e| CliError::Range(e.to_string()))?;
    let hasher = Checksum::new(2 * n);
    let sum = run
        .involutions
        .iter()
        .fold(0u64, |acc, inv| acc.wrapping_add(hasher.digest(inv.slots())));
    Ok((run.involutions.len() as u64, run.permutations_examined, sum))
}

/// One discarded warm-up call, then the median of `reps` timed calls.
pub fn time_median<T, F: FnMut() -> T>(reps: usize, mut f: F) -> (T, Duration) {
    let mut last = f();
    let mut times = Vec::with_capacity(reps);
    for _ in 0..reps {
        let t = Instant::now();
        last = f();
        times.push(t.elapsed());
    }
    times.sort_unstable();
    (last, times[times.len() / 2])
}

pub fn run(opts: &BenchOptions) -> Result<Vec<Measurement>, CliError> {
    let n = pair_count(opts.size)?;
    if opts.reps == 0 {
        return Err(CliError::Range("--reps must be at least 1".into()));
    }
    if opts.jobs == 0 {
        return Err(CliError::Range("--jobs must be at least 1".into()));
    }
    if opts.compare_oracle && opts.size > DEFAULT_SIZE_LIMIT {
        return Err(CliError::Range(format!(
            "oracle refuses size {} (limit {})",
            opts.size, DEFAULT_SIZE_LIMIT
        )));
    }
    let mut rows = Vec::new();
    let ((outputs, checksum), wall) = time_median(opts.reps, || run_direct(n, opts.jobs));
    rows.push(Measurement {
        method: "direct",
        size: opts.size,
        outputs,
        examined: outputs,
        wall,
        checksum,
    });
    if opts.compare_oracle {
        let (result, wall) = time_median(opts.reps, || run_oracle(n));
        let (outputs, examined, checksum) = result?;
        rows.push(Measurement {
            method: "oracle",
            size: opts.size,
            outputs,
            examined,
            wall,
            checksum,
        });
    }
    Ok(rows)
}

/// Tab-separated rows; with two rows a trailing `speedup` line gives
/// oracle time over direct time.
pub fn write_report<W: Write>(rows: &[Measurement], out: &mut W) -> std::io::Result<()> {
    writeln!(out, "method\tsize\toutputs\texamined\twall_s\toutputs_per_s\tchecksum")?;
    for r in rows {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{:.9}\t{:.0}\t{:016x}",
            r.method,
            r.size,
            r.outputs,
            r.examined,
            r.wall.as_secs_f64(),
            r.outputs_per_second(),
            r.checksum
        )?;
    }
    if let [direct, oracle] = rows {
        let ratio = oracle.wall.as_secs_f64() / direct.wall.as_secs_f64().max(1e-12);
        writeln!(out, "speedup\t{ratio:.2}")?;
    }
    Ok(())
}
