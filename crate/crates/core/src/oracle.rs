//! Brute-force ground truth: walk every permutation of `{1..2n}` and keep the
//! ones that are fixed-point-free involutions.
//!
//! Deliberately unoptimised. It shares nothing with the enumerator beyond the
//! canonical layout produced by [`Involution::from_pairs`].

use alloc::vec::Vec;

use crate::{Error, Involution, ValidationError};

/// Largest ground size accepted without an explicit override (12! tables).
pub const DEFAULT_SIZE_LIMIT: usize = 12;

/// A permutation `π` of `{1..size}`, stored as `map[e - 1] = π(e)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationTable {
    map: Vec<usize>,
}

impl PermutationTable {
    pub fn new(map: Vec<usize>) -> Result<Self, ValidationError> {
        let max = map.len();
        let mut seen = alloc::vec![false; max + 1];
        for (position, &value) in map.iter().enumerate() {
            if value == 0 || value > max {
                return Err(ValidationError::OutOfRange {
                    position,
                    value,
                    max,
                });
            }
            if core::mem::replace(&mut seen[value], true) {
                return Err(ValidationError::Repeated { value });
            }
        }
        Ok(PermutationTable { map })
    }

    pub fn identity(size: usize) -> Self {
        PermutationTable {
            map: (1..=size).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, e: usize) -> usize {
        self.map[e - 1]
    }

    /// Lexicographic successor in place; `false` (and unchanged) at the last
    /// permutation.
    pub fn next_lexicographic(&mut self) -> bool {
        let m = &mut self.map;
        if m.len() < 2 {
            return false;
        }
        let mut i = m.len() - 1;
        while i > 0 && m[i - 1] >= m[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = m.len() - 1;
        while m[j] <= m[i - 1] {
            j -= 1;
        }
        m.swap(i - 1, j);
        m[i..].reverse();
        true
    }
}

/// `π(π(e)) = e` and `π(e) ≠ e` for every `e`.
pub fn is_fpfi(p: &PermutationTable) -> bool {
    (1..=p.size()).all(|e| {
        let image = p.apply(e);
        image != e && p.apply(image) == e
    })
}

/// Calls `f` on each of the `size!` permutations in lexicographic order.
pub fn for_each_permutation<F>(size: usize, mut f: F)
where
    F: FnMut(&PermutationTable),
{
    let mut p = PermutationTable::identity(size);
    loop {
        f(&p);
        if !p.next_lexicographic() {
            break;
        }
    }
}

/// Result of one brute-force pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveRun {
    /// Canonical involutions sorted by rank.
    pub involutions: Vec<Involution>,
    pub permutations_examined: u64,
}

/// All involutions on `{1..2n}` by permutation filtering, refusing ground
/// sizes above [`DEFAULT_SIZE_LIMIT`].
pub fn naive_enumerate(n: usize) -> Result<Vec<Involution>, Error> {
    Ok(naive_run(n, DEFAULT_SIZE_LIMIT)?.involutions)
}

/// [`naive_enumerate`] with an explicit ground-size limit.
pub fn naive_run(n: usize, size_limit: usize) -> Result<NaiveRun, Error> {
    let size = 2 * n;
    if size > size_limit {
        return Err(Error::OracleLimit {
            size,
            limit: size_limit,
        });
    }
    let mut found = Vec::new();
    let mut examined = 0u64;
    for_each_permutation(size, |p| {
        examined += 1;
        if is_fpfi(p) {
            let pairs = (1..=size)
                .filter(|&e| p.apply(e) > e)
                .map(|e| (e, p.apply(e)));
            let inv = Involution::from_pairs(pairs).expect("filtered permutation is a matching");
            found.push(inv);
        }
    });
    let mut keyed: Vec<(u128, Involution)> = found
        .into_iter()
        .map(|inv| (inv.rank().expect("rank fits for oracle sizes").value(), inv))
        .collect();
    keyed.sort_unstable_by_key(|(r, _)| *r);
    assert!(
        keyed.windows(2).all(|w| w[0].0 != w[1].0),
        "two permutations produced the same involution"
    );
    Ok(NaiveRun {
        involutions: keyed.into_iter().map(|(_, inv)| inv).collect(),
        permutations_examined: examined,
    })
}
