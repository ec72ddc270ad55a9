//! Edge sets as 64-bit masks.
//!
//! The enumeration kernels (cycle space, subset oracles, cover searches) all
//! operate on graphs with at most 64 edges; this module is their shared
//! representation. Public APIs hand out sorted `Vec<EdgeId>` instead.

use crate::graph::EdgeId;

pub const MAX_EDGES: usize = 64;

/// A set of edge ids over a host graph with at most [`MAX_EDGES`] edges.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn full(m: usize) -> EdgeSet {
        assert!(m <= MAX_EDGES);
        if m == 64 {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << m) - 1)
        }
    }

    pub fn from_ids<I: IntoIterator<Item = EdgeId>>(ids: I) -> EdgeSet {
        let mut mask = 0u64;
        for e in ids {
            assert!(e < MAX_EDGES);
            mask |= 1u64 << e;
        }
        EdgeSet(mask)
    }

    pub fn contains(self, e: EdgeId) -> bool {
        e < MAX_EDGES && self.0 & (1u64 << e) != 0
    }

    pub fn insert(&mut self, e: EdgeId) {
        assert!(e < MAX_EDGES);
        self.0 |= 1u64 << e;
    }

    pub fn remove(&mut self, e: EdgeId) {
        assert!(e < MAX_EDGES);
        self.0 &= !(1u64 << e);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & other.0)
    }

    pub fn xor(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ other.0)
    }

    pub fn minus(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = EdgeId> {
        let mut rem = self.0;
        std::iter::from_fn(move || {
            if rem == 0 {
                None
            } else {
                let e = rem.trailing_zeros() as usize;
                rem &= rem - 1;
                Some(e)
            }
        })
    }

    /// Sorted edge ids.
    pub fn to_vec(self) -> Vec<EdgeId> {
        self.iter().collect()
    }
}
