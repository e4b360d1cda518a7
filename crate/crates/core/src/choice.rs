use alloc::vec::Vec;

use crate::shift::{shift_down, shift_up};
use crate::{Error, Involution, InvolutionRef, Rank};

/// The extension index chosen at each level of the recursion tree.
///
/// `digits[k]` (0-based) is the `i` used when growing from `2k` to `2k + 2`
/// elements, so it lies in `2..=2k+2`; the first digit is always `2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ChoiceSequence {
    digits: Vec<usize>,
}

impl ChoiceSequence {
    pub fn new(digits: Vec<usize>) -> Result<Self, Error> {
        for (level, &digit) in digits.iter().enumerate() {
            check_digit(level, digit)?;
        }
        Ok(ChoiceSequence { digits })
    }

    /// All-`2` digits: the first involution in enumeration order.
    pub fn first(n: usize) -> Self {
        ChoiceSequence {
            digits: alloc::vec![2; n],
        }
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn into_digits(self) -> Vec<usize> {
        self.digits
    }

    /// Number of levels, i.e. pairs in the addressed involution.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Folds `extend` over the digits starting from the empty involution.
    pub fn to_involution(&self) -> Involution {
        let mut slots = Vec::with_capacity(2 * self.digits.len());
        for &i in &self.digits {
            for s in slots.iter_mut() {
                *s = shift_up(i, *s);
            }
            slots.push(1);
            slots.push(i);
        }
        Involution::from_slots_unchecked(slots)
    }

    /// Reads the digits back off an involution: the last digit is `I(1)`;
    /// dropping that pair and undoing the shift leaves the parent.
    pub fn from_involution<'a>(inv: impl Into<InvolutionRef<'a>>) -> Self {
        let inv = inv.into();
        let mut slots = inv.slots().to_vec();
        let mut digits = alloc::vec![0; inv.pair_count()];
        while let Some(i) = slots.pop() {
            let one = slots.pop();
            debug_assert_eq!(one, Some(1));
            digits[slots.len() / 2] = i;
            for s in slots.iter_mut() {
                *s = shift_down(i, *s);
            }
        }
        ChoiceSequence { digits }
    }

    /// Mixed-radix value with radices `1, 3, 5, …`, earlier digits more
    /// significant.
    pub fn rank(&self) -> Result<Rank, Error> {
        let mut acc: u128 = 0;
        for (level, &digit) in self.digits.iter().enumerate() {
            let radix = 2 * level as u128 + 1;
            acc = acc
                .checked_mul(radix)
                .and_then(|v| v.checked_add((digit - 2) as u128))
                .ok_or(Error::Overflow)?;
        }
        Ok(Rank::new(acc))
    }

    /// Inverse of [`ChoiceSequence::rank`] for `n` levels.
    pub fn from_rank(n: usize, rank: Rank) -> Result<Self, Error> {
        // An overflowing count exceeds every u128 rank.
        if let Ok(count) = crate::count(n) {
            if rank.value() >= count {
                return Err(Error::RankOutOfRange {
                    rank: rank.value(),
                    pairs: n,
                    count,
                });
            }
        }
        let mut rest = rank.value();
        let mut digits = alloc::vec![0; n];
        for level in (0..n).rev() {
            let radix = 2 * level as u128 + 1;
            digits[level] = 2 + (rest % radix) as usize;
            rest /= radix;
        }
        Ok(ChoiceSequence { digits })
    }
}

pub(crate) fn check_digit(level: usize, digit: usize) -> Result<(), Error> {
    let max = 2 * level + 2;
    if (2..=max).contains(&digit) {
        Ok(())
    } else {
        Err(Error::DigitOutOfRange { level, digit, max })
    }
}
