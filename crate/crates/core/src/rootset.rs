use std::fmt;

/// Largest number of positive roots a [`RootSet`] can index.
pub const MAX_ROOTS: usize = 256;

/// A set of root indices, stored as a fixed-width bitset.
///
/// Root indices refer to positions in the canonical positive-root order of an
/// [`Algebra`](crate::Algebra), so a `RootSet` doubles as the canonical key of a
/// wide subcategory.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RootSet([u64; 4]);

impl RootSet {
    pub const fn empty() -> Self {
        RootSet([0; 4])
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty();
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1 << (i & 63));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < MAX_ROOTS && self.0[i >> 6] & (1 << (i & 63)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
        out
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
        out
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.intersection(other) == *self
    }

    pub fn is_disjoint(&self, other: &RootSet) -> bool {
        self.intersection(other).is_empty()
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_ROOTS).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for RootSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
