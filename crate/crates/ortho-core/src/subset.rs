use std::fmt;

/// A subset of the carrier of an orthoset, stored as a bitmask.
///
/// Bit `i` set means element `i` is a member. Element 0 is always the
/// falsity, so "proper" members are the bits above bit 0.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < 64);
        Subset(1 << i)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n < 64);
        Subset((1u64 << n) - 1)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = Subset::EMPTY;
        for i in it {
            s = s.with(i);
        }
        s
    }

    pub fn contains(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn inter(self, other: Self) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members above the falsity bit.
    pub fn proper(self) -> Self {
        Subset(self.0 & !1)
    }

    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All submasks of `self`, the empty set included.
    pub fn submasks(self) -> impl Iterator<Item = Subset> {
        let m = self.0;
        let mut cur = m;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Subset(cur);
            if cur == 0 {
                done = true;
            } else {
                cur = (cur - 1) & m;
            }
            Some(out)
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
