use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::shift::shift_up;
use crate::{ChoiceSequence, Error, Rank, ValidationError};

/// An unordered pair `{lo, hi}` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    lo: usize,
    hi: usize,
}

impl Pair {
    /// Builds the pair `{a, b}` in either order. `a == b` is a fixed point.
    pub fn new(a: usize, b: usize) -> Result<Self, ValidationError> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Ok(Pair { lo: a, hi: b }),
            core::cmp::Ordering::Greater => Ok(Pair { lo: b, hi: a }),
            core::cmp::Ordering::Equal => Err(ValidationError::FixedPoint { element: a }),
        }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }
}

impl From<Pair> for (usize, usize) {
    fn from(p: Pair) -> Self {
        (p.lo, p.hi)
    }
}

/// A fixed-point-free involution on `{1..2n}` in canonical slot layout.
///
/// `slots[2k]` is the minimum of the `k`-th pair and `slots[2k+1]` its
/// partner; minima strictly decrease left to right, so the array always ends
/// with `(1, I(1))`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Involution {
    slots: Vec<usize>,
}

/// Borrowed view of a canonical slot array.
///
/// The enumerator hands these out over its working buffer; call
/// [`InvolutionRef::to_involution`] to keep one past the callback.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct InvolutionRef<'a> {
    slots: &'a [usize],
}

impl<'a> InvolutionRef<'a> {
    /// Caller guarantees `slots` satisfies every layout invariant.
    pub(crate) fn new_unchecked(slots: &'a [usize]) -> Self {
        InvolutionRef { slots }
    }

    pub fn slots(&self) -> &'a [usize] {
        self.slots
    }

    pub fn pair_count(&self) -> usize {
        self.slots.len() / 2
    }

    pub fn ground_size(&self) -> usize {
        self.slots.len()
    }

    /// Pairs in ascending order of their minimum.
    pub fn pairs_iter(&self) -> impl DoubleEndedIterator<Item = Pair> + ExactSizeIterator + 'a {
        self.slots.chunks_exact(2).rev().map(|p| Pair { lo: p[0], hi: p[1] })
    }

    pub fn pairs(&self) -> Vec<Pair> {
        self.pairs_iter().collect()
    }

    /// The partner `I(e)` of `e`.
    pub fn apply(&self, e: usize) -> Result<usize, Error> {
        let max = self.slots.len();
        if e == 0 || e > max {
            return Err(Error::ElementOutOfRange { value: e, max });
        }
        let at = self
            .slots
            .iter()
            .position(|&v| v == e)
            .expect("canonical slots hold every element");
        Ok(self.slots[at ^ 1])
    }

    pub fn to_involution(&self) -> Involution {
        Involution {
            slots: self.slots.to_vec(),
        }
    }

    pub fn choices(&self) -> ChoiceSequence {
        ChoiceSequence::from_involution(*self)
    }

    pub fn rank(&self) -> Result<Rank, Error> {
        self.choices().rank()
    }
}

impl Involution {
    /// The unique involution on the empty set.
    pub fn empty() -> Self {
        Involution { slots: Vec::new() }
    }

    /// Accepts `slots` iff it is a canonical slot array; otherwise reports the
    /// first violated invariant.
    pub fn validate(slots: Vec<usize>) -> Result<Self, ValidationError> {
        check_slots(&slots)?;
        Ok(Involution { slots })
    }

    /// Canonical form of a perfect matching given as pairs covering `{1..2n}`,
    /// where `n` is the number of pairs.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, ValidationError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<Pair> = Vec::new();
        for (a, b) in pairs {
            list.push(Pair::new(a, b)?);
        }
        let max = 2 * list.len();
        let mut seen = vec![false; max + 1];
        for (idx, p) in list.iter().enumerate() {
            for (offset, value) in [(0, p.lo), (1, p.hi)] {
                if value == 0 || value > max {
                    return Err(ValidationError::OutOfRange {
                        position: 2 * idx + offset,
                        value,
                        max,
                    });
                }
                if core::mem::replace(&mut seen[value], true) {
                    return Err(ValidationError::Repeated { value });
                }
            }
        }
        list.sort_unstable_by_key(|p| core::cmp::Reverse(p.lo));
        let slots = list.iter().flat_map(|p| [p.lo, p.hi]).collect();
        Ok(Involution { slots })
    }

    pub(crate) fn from_slots_unchecked(slots: Vec<usize>) -> Self {
        debug_assert!(check_slots(&slots).is_ok());
        Involution { slots }
    }

    pub fn view(&self) -> InvolutionRef<'_> {
        InvolutionRef { slots: &self.slots }
    }

    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    pub fn into_slots(self) -> Vec<usize> {
        self.slots
    }

    pub fn pair_count(&self) -> usize {
        self.slots.len() / 2
    }

    pub fn ground_size(&self) -> usize {
        self.slots.len()
    }

    pub fn pairs(&self) -> Vec<Pair> {
        self.view().pairs()
    }

    pub fn apply(&self, e: usize) -> Result<usize, Error> {
        self.view().apply(e)
    }

    pub fn choices(&self) -> ChoiceSequence {
        self.view().choices()
    }

    pub fn rank(&self) -> Result<Rank, Error> {
        self.view().rank()
    }

    /// Grows the involution by one pair: relabels every element through
    /// `B_i` and appends `(1, i)`.
    pub fn extend(&self, i: usize) -> Result<Involution, Error> {
        let ground = self.slots.len();
        let max = ground + 2;
        if !(2..=max).contains(&i) {
            return Err(Error::ShiftIndexOutOfRange { index: i, max });
        }
        let mut slots = Vec::with_capacity(max);
        slots.extend(self.slots.iter().map(|&x| shift_up(i, x)));
        slots.push(1);
        slots.push(i);
        Ok(Involution { slots })
    }
}

fn check_slots(slots: &[usize]) -> Result<(), ValidationError> {
    let len = slots.len();
    if !len.is_multiple_of(2) {
        return Err(ValidationError::OddLength { len });
    }
    let mut seen = vec![false; len + 1];
    for (position, &value) in slots.iter().enumerate() {
        if value == 0 || value > len {
            return Err(ValidationError::OutOfRange {
                position,
                value,
                max: len,
            });
        }
        if core::mem::replace(&mut seen[value], true) {
            return Err(ValidationError::Repeated { value });
        }
    }
    for (pair, p) in slots.chunks_exact(2).enumerate() {
        if p[0] > p[1] {
            return Err(ValidationError::PairMinimum {
                pair,
                first: p[0],
                second: p[1],
            });
        }
    }
    for k in 0..(len / 2).saturating_sub(1) {
        let (current, next) = (slots[2 * k], slots[2 * k + 2]);
        if current < next {
            return Err(ValidationError::MinimaNotDecreasing {
                pair: k,
                current,
                next,
            });
        }
    }
    Ok(())
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.view().fmt(f)
    }
}

impl fmt::Debug for InvolutionRef<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.pairs_iter().map(|p| (p.lo, p.hi)))
            .finish()
    }
}

impl<'a> From<&'a Involution> for InvolutionRef<'a> {
    fn from(inv: &'a Involution) -> Self {
        inv.view()
    }
}

impl PartialEq<InvolutionRef<'_>> for Involution {
    fn eq(&self, other: &InvolutionRef<'_>) -> bool {
        self.slots == other.slots
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(pairs: &[(usize, usize)]) -> Involution {
        Involution::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn from_pairs_lays_out_descending_minima() {
        assert_eq!(inv(&[(2, 5), (3, 4), (6, 1)]).slots(), &[3, 4, 2, 5, 1, 6]);
        assert_eq!(inv(&[(1, 2)]).slots(), &[1, 2]);
        assert_eq!(inv(&[]).slots(), &[] as &[usize]);
    }

    #[test]
    fn from_pairs_rejects_repeats_and_range() {
        assert_eq!(
            Involution::from_pairs([(1, 2), (2, 3)]),
            Err(ValidationError::Repeated { value: 2 })
        );
        assert_eq!(
            Involution::from_pairs([(1, 1), (2, 3)]),
            Err(ValidationError::FixedPoint { element: 1 })
        );
        assert_eq!(
            Involution::from_pairs([(1, 5), (2, 3)]),
            Err(ValidationError::OutOfRange {
                position: 1,
                value: 5,
                max: 4
            })
        );
        assert!(matches!(
            Involution::from_pairs([(0, 1)]),
            Err(ValidationError::OutOfRange { value: 0, .. })
        ));
    }

    #[test]
    fn pairs_ascending_by_minimum() {
        let i = Involution::validate(std::vec![3, 4, 2, 5, 1, 6]).unwrap();
        let got: Vec<(usize, usize)> = i.pairs().into_iter().map(Into::into).collect();
        assert_eq!(got, [(1, 6), (2, 5), (3, 4)]);
        let i = Involution::validate(std::vec![3, 6, 2, 4, 1, 5]).unwrap();
        let got: Vec<(usize, usize)> = i.pairs().into_iter().map(Into::into).collect();
        assert_eq!(got, [(1, 5), (2, 4), (3, 6)]);
    }

    #[test]
    fn apply_finds_partner() {
        let i = Involution::validate(std::vec![3, 4, 2, 5, 1, 6]).unwrap();
        for e in 1..=6 {
            assert_eq!(i.apply(e), Ok(7 - e));
        }
        assert_eq!(inv(&[(1, 2)]).apply(1), Ok(2));
        assert_eq!(
            i.apply(7),
            Err(Error::ElementOutOfRange { value: 7, max: 6 })
        );
        assert!(i.apply(0).is_err());
    }

    #[test]
    fn validate_reports_first_violation() {
        assert!(Involution::validate(std::vec![3, 4, 2, 5, 1, 6]).is_ok());
        assert!(Involution::validate(std::vec![]).is_ok());
        let e = Involution::validate(std::vec![4, 3, 2, 5, 1, 6]).unwrap_err();
        assert_eq!(e.kind(), "pair-minimum-violation");
        let e = Involution::validate(std::vec![1, 2, 3, 4]).unwrap_err();
        assert_eq!(
            e,
            ValidationError::MinimaNotDecreasing {
                pair: 0,
                current: 1,
                next: 3
            }
        );
        let e = Involution::validate(std::vec![1, 2, 3]).unwrap_err();
        assert_eq!(e, ValidationError::OddLength { len: 3 });
        let e = Involution::validate(std::vec![1, 1]).unwrap_err();
        assert_eq!(e, ValidationError::Repeated { value: 1 });
        assert_eq!(e.kind(), "not-a-permutation");
        let e = Involution::validate(std::vec![0, 2]).unwrap_err();
        assert_eq!(e.kind(), "not-a-permutation");
    }

    #[test]
    fn extend_matches_worked_example() {
        let base = inv(&[(1, 3), (2, 4)]);
        assert_eq!(base.extend(5).unwrap(), inv(&[(1, 5), (2, 4), (3, 6)]));
        assert_eq!(Involution::empty().extend(2).unwrap(), inv(&[(1, 2)]));
        assert_eq!(inv(&[(1, 2)]).extend(4).unwrap(), inv(&[(1, 4), (2, 3)]));
        assert_eq!(
            base.extend(7),
            Err(Error::ShiftIndexOutOfRange { index: 7, max: 6 })
        );
        assert!(base.extend(1).is_err());
    }

    #[test]
    fn tree_children_of_worked_example() {
        let base = inv(&[(1, 3), (2, 4)]);
        let children: Vec<Involution> = (2..=6).map(|i| base.extend(i).unwrap()).collect();
        let expected = [
            inv(&[(1, 2), (3, 5), (4, 6)]),
            inv(&[(1, 3), (2, 5), (4, 6)]),
            inv(&[(1, 4), (2, 5), (3, 6)]),
            inv(&[(1, 5), (2, 4), (3, 6)]),
            inv(&[(1, 6), (2, 4), (3, 5)]),
        ];
        assert_eq!(children, expected);
    }
}
