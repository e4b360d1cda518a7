use alloc::vec;
use alloc::vec::Vec;

use crate::choice::check_digit;
use crate::shift::shift_up;
use crate::{ChoiceSequence, Error, Involution, InvolutionRef, Rank};

/// Streaming cursor over the involutions on `{1..2n}` in rank order.
///
/// Holds one `2n`-slot working buffer that is edited in place between
/// positions. Moving level `k` from choice `i` to `i + 1` only swaps where
/// the values `i` and `i + 1` sit (`B_i` and `B_{i+1}` differ at a single
/// point), so the innermost level costs O(1) per step; outer levels shift
/// their prefix once on entry and once on exit.
#[derive(Debug, Clone)]
pub struct Enumerator {
    slots: Vec<usize>,
    /// `pos[v]` is the slot currently holding `v`.
    pos: Vec<usize>,
    digits: Vec<usize>,
    /// Levels below this index are pinned.
    frozen: usize,
    done: bool,
}

impl Enumerator {
    pub fn new(n: usize) -> Self {
        Self::build(ChoiceSequence::first(n).into_digits(), 0)
    }

    /// Resumes at `rank`, continuing to the end of the enumeration.
    pub fn starting_at(n: usize, rank: Rank) -> Result<Self, Error> {
        Ok(Self::from_choices(&ChoiceSequence::from_rank(n, rank)?))
    }

    pub fn from_choices(choices: &ChoiceSequence) -> Self {
        Self::build(choices.digits().to_vec(), 0)
    }

    /// Visits only the subtree whose leading digits equal `prefix`. Disjoint
    /// prefixes of equal length cover the whole space without overlap.
    pub fn with_prefix(n: usize, prefix: &[usize]) -> Result<Self, Error> {
        if prefix.len() > n {
            return Err(Error::PrefixTooLong {
                prefix: prefix.len(),
                levels: n,
            });
        }
        for (level, &digit) in prefix.iter().enumerate() {
            check_digit(level, digit)?;
        }
        let mut digits = vec![2; n];
        digits[..prefix.len()].copy_from_slice(prefix);
        Ok(Self::build(digits, prefix.len()))
    }

    fn build(digits: Vec<usize>, frozen: usize) -> Self {
        let n = digits.len();
        let mut slots = vec![0; 2 * n];
        for (level, &i) in digits.iter().enumerate() {
            for s in &mut slots[..2 * level] {
                *s = shift_up(i, *s);
            }
            slots[2 * level] = 1;
            slots[2 * level + 1] = i;
        }
        let mut e = Enumerator {
            slots,
            pos: vec![0; 2 * n + 1],
            digits,
            frozen,
            done: false,
        };
        e.reindex(2 * n);
        e
    }

    fn reindex(&mut self, len: usize) {
        for (s, &v) in self.slots[..len].iter().enumerate() {
            self.pos[v] = s;
        }
    }

    pub fn pair_count(&self) -> usize {
        self.digits.len()
    }

    /// The involution under the cursor, or `None` once exhausted.
    pub fn current(&self) -> Option<InvolutionRef<'_>> {
        (!self.done).then(|| InvolutionRef::new_unchecked(&self.slots))
    }

    /// Choice digits of the current involution.
    pub fn current_digits(&self) -> Option<&[usize]> {
        (!self.done).then_some(&self.digits[..])
    }

    /// Steps to the next involution in rank order. Returns `false` when the
    /// enumeration (or the pinned subtree) is exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let n = self.digits.len();
        let mut level = n;
        loop {
            if level == self.frozen {
                self.done = true;
                return false;
            }
            level -= 1;
            let top = 2 * level + 2;
            if self.digits[level] < top {
                break;
            }
            // B_{2k+2} is x + 1 on the whole prefix.
            for s in &mut self.slots[..2 * level] {
                *s -= 1;
            }
            self.reindex(2 * level);
        }

        self.step(level);

        for deeper in level + 1..n {
            for s in &mut self.slots[..2 * deeper] {
                *s += 2;
            }
            self.slots[2 * deeper] = 1;
            self.slots[2 * deeper + 1] = 2;
            self.digits[deeper] = 2;
            self.reindex(2 * deeper + 2);
        }
        true
    }

    /// Moves `level` from choice `i` to `i + 1`: values `i` and `i + 1`
    /// trade places.
    #[inline(always)]
    fn step(&mut self, level: usize) {
        let i = self.digits[level];
        let p = self.pos[i + 1];
        let q = 2 * level + 1;
        self.slots[p] = i;
        self.slots[q] = i + 1;
        self.pos[i] = p;
        self.pos[i + 1] = q;
        self.digits[level] = i + 1;
    }

    /// Calls `visit` on every remaining involution, including the current one.
    pub fn for_each<F>(&mut self, mut visit: F)
    where
        F: FnMut(InvolutionRef<'_>),
    {
        let n = self.digits.len();
        while !self.done {
            visit(InvolutionRef::new_unchecked(&self.slots));
            // Innermost level inline; `advance` handles the carries.
            if n > self.frozen {
                let leaf = n - 1;
                while self.digits[leaf] < 2 * n {
                    self.step(leaf);
                    visit(InvolutionRef::new_unchecked(&self.slots));
                }
            }
            self.advance();
        }
    }
}

/// Visits every fixed-point-free involution on `{1..2n}` in rank order.
///
/// The view passed to `visit` borrows the working buffer and is only valid for
/// the duration of the call.
pub fn enumerate<F>(n: usize, visit: F)
where
    F: FnMut(InvolutionRef<'_>),
{
    Enumerator::new(n).for_each(visit)
}

/// Like [`enumerate`], restricted to the subtree with leading digits `prefix`.
pub fn enumerate_prefix<F>(n: usize, prefix: &[usize], visit: F) -> Result<(), Error>
where
    F: FnMut(InvolutionRef<'_>),
{
    Enumerator::with_prefix(n, prefix)?.for_each(visit);
    Ok(())
}

/// Owning iterator adapter; clones each involution out of the buffer.
#[derive(Debug, Clone)]
pub struct Involutions(Enumerator);

impl Involutions {
    pub fn new(n: usize) -> Self {
        Involutions(Enumerator::new(n))
    }
}

impl From<Enumerator> for Involutions {
    fn from(e: Enumerator) -> Self {
        Involutions(e)
    }
}

impl Iterator for Involutions {
    type Item = Involution;

    fn next(&mut self) -> Option<Involution> {
        let out = self.0.current()?.to_involution();
        self.0.advance();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn inv(pairs: &[(usize, usize)]) -> Involution {
        Involution::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(Involutions::new(0).collect::<Vec<_>>(), [Involution::empty()]);
        assert_eq!(Involutions::new(1).collect::<Vec<_>>(), [inv(&[(1, 2)])]);
        assert_eq!(
            Involutions::new(2).collect::<Vec<_>>(),
            [
                inv(&[(1, 2), (3, 4)]),
                inv(&[(1, 3), (2, 4)]),
                inv(&[(1, 4), (2, 3)])
            ]
        );
    }

    #[test]
    fn matches_naive_fold_of_extend() {
        // Reference: rebuild each node from scratch with extend, in digit order.
        fn expand(n: usize, cur: Involution, out: &mut Vec<Involution>) {
            if cur.pair_count() == n {
                out.push(cur);
                return;
            }
            for i in 2..=cur.ground_size() + 2 {
                expand(n, cur.extend(i).unwrap(), out);
            }
        }
        for n in 0..=6 {
            let mut expected = Vec::new();
            expand(n, Involution::empty(), &mut expected);
            let got: Vec<Involution> = Involutions::new(n).collect();
            assert_eq!(got, expected, "n = {n}");
        }
    }

    #[test]
    fn ranks_are_consecutive() {
        for n in 0..=5 {
            let mut next = 0u128;
            enumerate(n, |v| {
                assert_eq!(v.rank().unwrap().value(), next);
                next += 1;
            });
            assert_eq!(next, crate::count(n).unwrap());
        }
    }

    #[test]
    fn resume_from_rank() {
        let all: Vec<Involution> = Involutions::new(4).collect();
        for r in [0usize, 1, 17, 104] {
            let e = Enumerator::starting_at(4, Rank::new(r as u128)).unwrap();
            let tail: Vec<Involution> = Involutions::from(e).collect();
            assert_eq!(tail, all[r..]);
        }
        assert!(Enumerator::starting_at(4, Rank::new(105)).is_err());
    }

    #[test]
    fn prefixes_partition_the_space() {
        let n = 4;
        let mut seen = HashSet::new();
        let mut total = 0;
        for d2 in 2..=4 {
            for d3 in 2..=6 {
                let mut local = Vec::new();
                enumerate_prefix(n, &[2, d2, d3], |v| local.push(v.to_involution())).unwrap();
                assert_eq!(local.len(), 7);
                for i in local {
                    assert_eq!(&i.choices().digits()[..3], &[2, d2, d3]);
                    assert!(seen.insert(i));
                    total += 1;
                }
            }
        }
        assert_eq!(total, 105);
    }

    #[test]
    fn prefix_errors() {
        assert_eq!(
            Enumerator::with_prefix(1, &[2, 2]).unwrap_err(),
            Error::PrefixTooLong {
                prefix: 2,
                levels: 1
            }
        );
        assert!(Enumerator::with_prefix(3, &[2, 5]).is_err());
        let mut count = 0;
        enumerate_prefix(3, &[2, 3, 5], |_| count += 1).unwrap();
        assert_eq!(count, 1);
    }
}
