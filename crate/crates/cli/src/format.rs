use std::fmt::Write as _;

use clap::ValueEnum;
use fpfi::{Involution, InvolutionRef, Rank};
use serde::Deserialize;

use crate::CliError;

/// One involution per line.
///
/// * `pairs`: `1-5 2-4 3-6`, blocks ascending by minimum
/// * `array`: `3 6 2 4 1 5`, the raw slot layout
/// * `jsonl`: `{"n": 3, "rank": 8, "pairs": [[1,5],[2,4],[3,6]]}`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Pairs,
    Array,
    Jsonl,
}

/// Appends one line (without the newline) to `buf`.
pub fn write_line(buf: &mut String, format: OutputFormat, inv: InvolutionRef<'_>, rank: Rank) {
    match format {
        OutputFormat::Pairs => {
            for (k, p) in inv.pairs_iter().enumerate() {
                if k > 0 {
                    buf.push(' ');
                }
                let _ = write!(buf, "{}-{}", p.lo(), p.hi());
            }
        }
        OutputFormat::Array => {
            for (k, v) in inv.slots().iter().enumerate() {
                if k > 0 {
                    buf.push(' ');
                }
                let _ = write!(buf, "{v}");
            }
        }
        OutputFormat::Jsonl => {
            let _ = write!(buf, "{{\"n\": {}, \"rank\": {}, \"pairs\": [", inv.pair_count(), rank);
            for (k, p) in inv.pairs_iter().enumerate() {
                if k > 0 {
                    buf.push(',');
                }
                let _ = write!(buf, "[{},{}]", p.lo(), p.hi());
            }
            buf.push_str("]}");
        }
    }
}

pub fn format_line(format: OutputFormat, inv: &Involution) -> Result<String, CliError> {
    let rank = rank_of(inv)?;
    let mut s = String::new();
    write_line(&mut s, format, inv.view(), rank);
    Ok(s)
}

pub(crate) fn rank_of(inv: &Involution) -> Result<Rank, CliError> {
    inv.rank().map_err(|_| {
        CliError::Overflow(format!("rank on {} elements exceeds 128 bits", inv.ground_size()))
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonLine {
    n: usize,
    rank: u128,
    pairs: Vec<[usize; 2]>,
}

/// Parses one line. Syntax problems are [`CliError::Parse`]; well-formed input
/// describing something other than a fixed-point-free involution is
/// [`CliError::Invalid`] or [`CliError::Inconsistent`]. `line` is 1-based and
/// only used for reporting.
pub fn parse_line(format: OutputFormat, text: &str, line: usize) -> Result<Involution, CliError> {
    let parse_err = |message: String| CliError::Parse { line, message };
    let invalid = |source| CliError::Invalid { line, source };
    match format {
        OutputFormat::Pairs => {
            let mut pairs = Vec::new();
            for token in text.split_whitespace() {
                let (a, b) = token
                    .split_once('-')
                    .ok_or_else(|| parse_err(format!("expected lo-hi, got {token:?}")))?;
                let a = a
                    .parse::<usize>()
                    .map_err(|e| parse_err(format!("{token:?}: {e}")))?;
                let b = b
                    .parse::<usize>()
                    .map_err(|e| parse_err(format!("{token:?}: {e}")))?;
                pairs.push((a, b));
            }
            Involution::from_pairs(pairs).map_err(invalid)
        }
        OutputFormat::Array => {
            let slots = text
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|e| parse_err(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            Involution::validate(slots).map_err(invalid)
        }
        OutputFormat::Jsonl => {
            let record: JsonLine =
                serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
            let inv = Involution::from_pairs(record.pairs.iter().map(|p| (p[0], p[1])))
                .map_err(invalid)?;
            if record.n != inv.pair_count() {
                return Err(CliError::Inconsistent {
                    line,
                    kind: "pair-count-mismatch",
                    detail: format!("n is {} but {} pairs given", record.n, inv.pair_count()),
                });
            }
            let rank = rank_of(&inv)?;
            if rank.value() != record.rank {
                return Err(CliError::Inconsistent {
                    line,
                    kind: "rank-mismatch",
                    detail: format!("rank is {} but the pairs have rank {}", record.rank, rank),
                });
            }
            Ok(inv)
        }
    }
}
