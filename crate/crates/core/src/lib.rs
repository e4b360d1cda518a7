//! Fixed-point-free involutions on `{1, …, 2n}`.
//!
//! An involution is stored as a flat array of `2n` slots: pairs laid out as
//! `(min, max)`, ordered by strictly decreasing minimum, so the last pair is
//! always `(1, I(1))`. The enumerator builds every involution on `2k + 2`
//! elements from one on `2k` elements by relabelling it through a monotone
//! shift bijection and appending the new pair `(1, i)`, which keeps the array
//! canonical without any sorting.
//!
//! Everything here is `no_std` with `alloc`. The [`oracle`] module holds the
//! brute-force permutation filter used as ground truth in tests and benches.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod choice;
mod conjugate;
mod enumerate;
mod error;
mod involution;
pub mod oracle;
mod rank;
mod shift;

pub use choice::ChoiceSequence;
pub use conjugate::Bijection;
pub use enumerate::{enumerate, enumerate_prefix, Enumerator, Involutions};
pub use error::{Error, ValidationError};
pub use involution::{Involution, InvolutionRef, Pair};
pub use rank::{count, subtree_width, unrank, Rank};
pub use shift::{shift_bijection, shift_bijection_inv, ShiftBijection};
