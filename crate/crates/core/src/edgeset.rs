use std::fmt;

/// Fixed-width bit-vector over segment indices; bit `k` is segment `k`.
///
/// 128 bits cover the `n(n-1)/2` segments of up to 16 points.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(pub u128);

impl EdgeSet {
    pub const CAPACITY: usize = 128;
    pub const EMPTY: EdgeSet = EdgeSet(0);

    /// The set `{0, .., len - 1}`.
    pub fn full(len: usize) -> Self {
        debug_assert!(len <= Self::CAPACITY);
        if len == Self::CAPACITY {
            EdgeSet(u128::MAX)
        } else {
            EdgeSet((1u128 << len) - 1)
        }
    }

    pub fn singleton(k: usize) -> Self {
        EdgeSet(1u128 << k)
    }

    #[inline]
    pub fn contains(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, k: usize) {
        self.0 |= 1u128 << k;
    }

    #[inline]
    pub fn remove(&mut self, k: usize) {
        self.0 &= !(1u128 << k);
    }

    #[inline]
    pub fn with(self, k: usize) -> Self {
        EdgeSet(self.0 | 1u128 << k)
    }

    #[inline]
    pub fn without(self, k: usize) -> Self {
        EdgeSet(self.0 & !(1u128 << k))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn intersects(self, other: EdgeSet) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    /// Lowercase hex, least-significant bit = segment 0.
    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        u128::from_str_radix(s, 16).ok().map(EdgeSet)
    }
}

impl std::ops::BitOr for EdgeSet {
    type Output = EdgeSet;
    fn bitor(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | rhs.0)
    }
}

impl std::ops::BitOrAssign for EdgeSet {
    fn bitor_assign(&mut self, rhs: EdgeSet) {
        self.0 |= rhs.0;
    }
}

impl std::ops::BitAnd for EdgeSet {
    type Output = EdgeSet;
    fn bitand(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & rhs.0)
    }
}

impl std::ops::BitAndAssign for EdgeSet {
    fn bitand_assign(&mut self, rhs: EdgeSet) {
        self.0 &= rhs.0;
    }
}

impl std::ops::Not for EdgeSet {
    type Output = EdgeSet;
    fn not(self) -> EdgeSet {
        EdgeSet(!self.0)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSet::EMPTY;
        for k in iter {
            s.insert(k);
        }
        s
    }
}

/// Iterator over set bits in increasing order.
pub struct Bits(u128);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let k = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(k)
    }
}
