use alloc::vec::Vec;

use crate::{Error, Involution, ValidationError};

/// A relabelling of `{1..size}`, stored as `table[x - 1] = B(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bijection {
    table: Vec<usize>,
}

impl Bijection {
    pub fn new(table: Vec<usize>) -> Result<Self, ValidationError> {
        let max = table.len();
        let mut seen = alloc::vec![false; max + 1];
        for (position, &value) in table.iter().enumerate() {
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
        Ok(Bijection { table })
    }

    pub fn identity(size: usize) -> Self {
        Bijection {
            table: (1..=size).collect(),
        }
    }

    /// The transposition exchanging `a` and `b`.
    pub fn swap(size: usize, a: usize, b: usize) -> Result<Self, Error> {
        for v in [a, b] {
            if v == 0 || v > size {
                return Err(Error::ElementOutOfRange {
                    value: v,
                    max: size,
                });
            }
        }
        let mut table: Vec<usize> = (1..=size).collect();
        table.swap(a - 1, b - 1);
        Ok(Bijection { table })
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// `B(x)`; panics if `x` is outside `1..=size`.
    pub fn apply(&self, x: usize) -> usize {
        self.table[x - 1]
    }

    pub fn inverse(&self) -> Bijection {
        let mut table = alloc::vec![0; self.table.len()];
        for (x, &y) in self.table.iter().enumerate() {
            table[y - 1] = x + 1;
        }
        Bijection { table }
    }
}

impl Involution {
    /// `B ∘ I ∘ B⁻¹`, returned in canonical form.
    pub fn conjugate(&self, b: &Bijection) -> Result<Involution, Error> {
        if b.size() != self.ground_size() {
            return Err(Error::SizeMismatch {
                involution: self.ground_size(),
                bijection: b.size(),
            });
        }
        let image = self
            .view()
            .pairs_iter()
            .map(|p| (b.apply(p.lo()), b.apply(p.hi())));
        Ok(Involution::from_pairs(image)?)
    }
}
