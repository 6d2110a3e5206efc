//! Fixed-width bitsets for the three identifier spaces: observations,
//! actions, and world states. Keeping them as distinct newtypes prevents
//! accidental mixing of the namespaces.

use std::fmt;

macro_rules! bitset {
    ($name:ident, $doc:expr) => {
        #[doc = $doc]
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
        pub struct $name(pub u64);

        impl $name {
            pub const EMPTY: Self = Self(0);

            pub fn singleton(i: u32) -> Self {
                debug_assert!(i < 64);
                Self(1 << i)
            }

            pub fn from_iter(items: impl IntoIterator<Item = u32>) -> Self {
                let mut s = Self::EMPTY;
                for i in items {
                    s.insert(i);
                }
                s
            }

            /// All indices below `n` set.
            pub fn full(n: u32) -> Self {
                debug_assert!(n <= 64);
                if n == 64 {
                    Self(u64::MAX)
                } else {
                    Self((1u64 << n) - 1)
                }
            }

            pub fn insert(&mut self, i: u32) {
                debug_assert!(i < 64);
                self.0 |= 1 << i;
            }

            pub fn remove(&mut self, i: u32) {
                self.0 &= !(1 << i);
            }

            pub fn contains(self, i: u32) -> bool {
                i < 64 && self.0 & (1 << i) != 0
            }

            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            pub fn len(self) -> u32 {
                self.0.count_ones()
            }

            pub fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            pub fn inter(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            pub fn minus(self, other: Self) -> Self {
                Self(self.0 & !other.0)
            }

            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            pub fn intersects(self, other: Self) -> bool {
                self.0 & other.0 != 0
            }

            pub fn min(self) -> Option<u32> {
                if self.0 == 0 {
                    None
                } else {
                    Some(self.0.trailing_zeros())
                }
            }

            pub fn iter(self) -> impl Iterator<Item = u32> {
                let mut bits = self.0;
                std::iter::from_fn(move || {
                    if bits == 0 {
                        None
                    } else {
                        let i = bits.trailing_zeros();
                        bits &= bits - 1;
                        Some(i)
                    }
                })
            }

            /// Non-empty subsets, ascending by raw mask value.
            pub fn nonempty_subsets(self) -> impl Iterator<Item = Self> {
                let mask = self.0;
                let mut sub = 0u64;
                let mut done = mask == 0;
                std::iter::from_fn(move || {
                    if done {
                        return None;
                    }
                    sub = sub.wrapping_sub(mask) & mask;
                    if sub == mask {
                        done = true;
                    }
                    Some(Self(sub))
                })
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{{")?;
                for (k, i) in self.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", i)?;
                }
                write!(f, "}}")
            }
        }

        impl FromIterator<u32> for $name {
            fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
                Self::from_iter(iter)
            }
        }
    };
}

bitset!(ObsSet, "A set of observation identifiers (bit indices into the observation alphabet).");
bitset!(ActSet, "A set of action identifiers (bit indices into the action alphabet).");
bitset!(StateSet, "A set of p-graph vertex identifiers; used for initial/goal regions and beliefs.");

impl ObsSet {
    /// Reserved marker bit used by the goal-leaf identity cover; never a real
    /// observation (alphabets are capped below it).
    pub const EPSILON_BIT: u32 = 63;
    pub const EPSILON: ObsSet = ObsSet(1 << 63);
}

/// Blocks are ordered by size first, then lexicographically by their ascending
/// member lists. For equal sizes the lowest differing bit decides: whichever
/// set holds it has the smaller first-differing member.
impl Ord for ObsSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            if self.0 == other.0 {
                std::cmp::Ordering::Equal
            } else {
                let diff = self.0 ^ other.0;
                let low = diff & diff.wrapping_neg();
                if self.0 & low != 0 {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            }
        })
    }
}

impl PartialOrd for ObsSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! numeric_ord {
    ($name:ident) => {
        impl Ord for $name {
            fn cmp(&self, other: &Self) -> std::cmp::Ordering {
                self.0.cmp(&other.0)
            }
        }
        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
                Some(self.cmp(other))
            }
        }
    };
}

numeric_ord!(ActSet);
numeric_ord!(StateSet);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration_counts() {
        let d = ObsSet::full(4);
        assert_eq!(d.nonempty_subsets().count(), 15);
        assert_eq!(ObsSet::EMPTY.nonempty_subsets().count(), 0);
        for s in d.nonempty_subsets() {
            assert!(s.is_subset(d));
            assert!(!s.is_empty());
        }
    }

    #[test]
    fn block_order_is_size_then_lex() {
        let a = ObsSet::from_iter([0]);
        let b = ObsSet::from_iter([1]);
        let ab = ObsSet::from_iter([0, 1]);
        let ac = ObsSet::from_iter([0, 2]);
        let bc = ObsSet::from_iter([1, 2]);
        let ad = ObsSet::from_iter([0, 3]);
        assert!(a < b && b < ab);
        assert!(ab < ac && ac < bc);
        // {0,3} precedes {1,2}: first members 0 < 1.
        assert!(ad < bc);
    }

    #[test]
    fn iter_matches_contents() {
        let s = StateSet::from_iter([0, 5, 63]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 5, 63]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(63) && !s.contains(4));
    }
}
