use core::fmt;

use crate::{ChoiceSequence, Error, Involution};

/// Position of an involution in enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rank(u128);

impl Rank {
    pub const fn new(value: u128) -> Self {
        Rank(value)
    }

    pub const fn value(self) -> u128 {
        self.0
    }
}

impl From<u128> for Rank {
    fn from(v: u128) -> Self {
        Rank(v)
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `(2n-1)!!`, the number of fixed-point-free involutions on `2n` elements.
///
/// Fails with [`Error::Overflow`] once the value leaves `u128` (from `n = 29`).
pub fn count(n: usize) -> Result<u128, Error> {
    subtree_width(0, n)
}

/// Number of leaves below a node whose first `fixed` digits are set, i.e.
/// `Π_{j in fixed+1..=n} (2j-1)`. Rank intervals of this width partition the
/// search space by prefix.
pub fn subtree_width(fixed: usize, n: usize) -> Result<u128, Error> {
    (fixed.min(n)..n).try_fold(1u128, |acc, level| {
        acc.checked_mul(2 * level as u128 + 1).ok_or(Error::Overflow)
    })
}

/// The involution at position `rank` among all involutions on `2n` elements.
pub fn unrank(n: usize, rank: Rank) -> Result<Involution, Error> {
    Ok(ChoiceSequence::from_rank(n, rank)?.to_involution())
}
