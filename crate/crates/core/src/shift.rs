use crate::Error;

/// The monotone bijection `B_i : {1..2k} -> {2..2k+2} \ {i}`.
///
/// Every element is shifted up by one, or by two once it reaches `i - 1`,
/// which leaves both `1` and `i` free for the pair `{1, i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftBijection {
    ground: usize,
    index: usize,
}

impl ShiftBijection {
    /// `ground` is the domain size `2k`; `index` must lie in `2..=2k+2`.
    pub fn new(ground: usize, index: usize) -> Result<Self, Error> {
        if !ground.is_multiple_of(2) {
            return Err(Error::OddGroundSet(ground));
        }
        let max = ground + 2;
        if !(2..=max).contains(&index) {
            return Err(Error::ShiftIndexOutOfRange { index, max });
        }
        Ok(ShiftBijection { ground, index })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn apply(&self, x: usize) -> Result<usize, Error> {
        if x == 0 || x > self.ground {
            return Err(Error::ElementOutOfRange {
                value: x,
                max: self.ground,
            });
        }
        Ok(shift_up(self.index, x))
    }

    pub fn invert(&self, y: usize) -> Result<usize, Error> {
        let max = self.ground + 2;
        if y < 2 || y > max || y == self.index {
            return Err(Error::NotInShiftImage {
                value: y,
                index: self.index,
                max,
            });
        }
        Ok(shift_down(self.index, y))
    }
}

/// `B_i(x)` for `x` in `1..=ground`.
pub fn shift_bijection(ground: usize, i: usize, x: usize) -> Result<usize, Error> {
    ShiftBijection::new(ground, i)?.apply(x)
}

/// `B_i⁻¹(y)` for `y` in `{2..=ground+2} \ {i}`.
pub fn shift_bijection_inv(ground: usize, i: usize, y: usize) -> Result<usize, Error> {
    ShiftBijection::new(ground, i)?.invert(y)
}

#[inline]
pub(crate) fn shift_up(i: usize, x: usize) -> usize {
    if x + 1 >= i {
        x + 2
    } else {
        x + 1
    }
}

#[inline]
pub(crate) fn shift_down(i: usize, y: usize) -> usize {
    if y < i {
        y - 1
    } else {
        y - 2
    }
}
