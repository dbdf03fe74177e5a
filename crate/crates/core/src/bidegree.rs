use core::fmt;
use core::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

/// Cohomological degree `p` and weight `q`.
///
/// Single-graded rings keep `q = 0` on every generator; their pieces are
/// addressed with `q = 0`. Ordering is lexicographic, `p` first.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Bidegree {
    pub p: i64,
    pub q: i64,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { p: 0, q: 0 };

    pub const fn new(p: i64, q: i64) -> Self {
        Bidegree { p, q }
    }

    /// Degree of a single-graded ring.
    pub const fn single(p: i64) -> Self {
        Bidegree { p, q: 0 }
    }

    /// Componentwise `self <= other`.
    pub fn fits_in(self, other: Bidegree) -> bool {
        self.p <= other.p && self.q <= other.q
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.p + rhs.p, self.q + rhs.q)
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.p - rhs.p, self.q - rhs.q)
    }
}

impl Mul<i64> for Bidegree {
    type Output = Bidegree;
    fn mul(self, rhs: i64) -> Bidegree {
        Bidegree::new(self.p * rhs, self.q * rhs)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_componentwise() {
        let a = Bidegree::new(3, 2);
        let b = Bidegree::new(4, 3);
        assert_eq!(a + b, Bidegree::new(7, 5));
        assert_eq!(b - a, Bidegree::new(1, 1));
        assert_eq!(a * 3, Bidegree::new(9, 6));
    }

    #[test]
    fn ordering_is_p_then_q() {
        let mut v = [Bidegree::new(4, 1), Bidegree::new(3, 9), Bidegree::new(4, 0)];
        v.sort();
        assert_eq!(v, [Bidegree::new(3, 9), Bidegree::new(4, 0), Bidegree::new(4, 1)]);
    }
}
