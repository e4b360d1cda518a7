use std::io::{BufRead, Write};

use fpfi::{count as count_involutions, unrank as unrank_involution, Enumerator, Error, Rank};

use crate::format::{parse_line, rank_of, write_line};
use crate::{CliError, OutputFormat};

/// Ground sizes on the command line are `2n`; this returns `n`.
pub fn pair_count(size: usize) -> Result<usize, CliError> {
    if size.is_multiple_of(2) {
        Ok(size / 2)
    } else {
        Err(CliError::OddSize(size))
    }
}

fn exact_count(n: usize) -> Result<u128, CliError> {
    count_involutions(n).map_err(|_| {
        CliError::Overflow(format!("count for {} elements exceeds 128 bits", 2 * n))
    })
}

pub fn count<W: Write>(size: usize, out: &mut W) -> Result<(), CliError> {
    let n = pair_count(size)?;
    writeln!(out, "{}", exact_count(n)?)?;
    Ok(())
}

/// Prints involutions in rank order from `start`, at most `limit` lines.
pub fn list<W: Write>(
    size: usize,
    format: OutputFormat,
    start: Option<u128>,
    limit: Option<u64>,
    out: &mut W,
) -> Result<(), CliError> {
    let n = pair_count(size)?;
    let start = start.unwrap_or(0);
    let mut cursor = Enumerator::starting_at(n, Rank::new(start)).map_err(range_error)?;
    let mut rank = start;
    let mut emitted = 0u64;
    let mut line = String::new();
    while let Some(inv) = cursor.current() {
        if limit.is_some_and(|l| emitted >= l) {
            break;
        }
        line.clear();
        write_line(&mut line, format, inv, Rank::new(rank));
        line.push('\n');
        out.write_all(line.as_bytes())?;
        emitted += 1;
        cursor.advance();
        rank = match rank.checked_add(1) {
            Some(r) => r,
            None if cursor.current().is_none() => rank,
            None => return Err(CliError::Overflow("rank exceeds 128 bits".into())),
        };
    }
    Ok(())
}

/// Checks every line; prints `OK <lines>` or fails on the first bad line.
pub fn verify<R: BufRead, W: Write>(
    input: R,
    format: OutputFormat,
    out: &mut W,
) -> Result<(), CliError> {
    let mut checked = 0usize;
    for (idx, text) in input.lines().enumerate() {
        parse_line(format, &text?, idx + 1)?;
        checked += 1;
    }
    writeln!(out, "OK {checked}")?;
    Ok(())
}

/// Prints the rank of each input line.
pub fn rank<R: BufRead, W: Write>(
    input: R,
    format: OutputFormat,
    out: &mut W,
) -> Result<(), CliError> {
    for (idx, text) in input.lines().enumerate() {
        let inv = parse_line(format, &text?, idx + 1)?;
        writeln!(out, "{}", rank_of(&inv)?)?;
    }
    Ok(())
}

pub fn unrank<W: Write>(
    size: usize,
    rank: u128,
    format: OutputFormat,
    out: &mut W,
) -> Result<(), CliError> {
    let n = pair_count(size)?;
    let inv = unrank_involution(n, Rank::new(rank)).map_err(range_error)?;
    let mut line = String::new();
    write_line(&mut line, format, inv.view(), Rank::new(rank));
    writeln!(out, "{line}")?;
    Ok(())
}

fn range_error(e: Error) -> CliError {
    match e {
        Error::Overflow => CliError::Overflow(e.to_string()),
        other => CliError::Range(other.to_string()),
    }
}
