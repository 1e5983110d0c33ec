use std::fmt;

/// Subset of a fixed vertex universe `{0, .., n-1}`, stored as a bit vector.
///
/// The member count is cached, so [`VertexSet::len`] is O(1). Mutation steps
/// clone and toggle these sets in a hot loop; `n / 64` words keep that cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    blocks: Vec<u64>,
    universe: usize,
    count: usize,
}

impl VertexSet {
    /// Empty subset of a universe with `universe` vertices.
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            blocks: vec![0; universe.div_ceil(64)],
            universe,
            count: 0,
        }
    }

    /// Subset holding the given members.
    ///
    /// Panics if a member is outside the universe; intended for fixtures and
    /// tests where the members are known constants.
    pub fn from_members(universe: usize, members: &[usize]) -> Self {
        let mut set = VertexSet::empty(universe);
        for &v in members {
            set.insert(v);
        }
        set
    }

    /// Number of vertices in the underlying universe, not the member count.
    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.blocks[v / 64] & (1 << (v % 64)) != 0
    }

    /// Adds `v`; returns whether the set changed.
    pub fn insert(&mut self, v: usize) -> bool {
        if self.contains(v) {
            return false;
        }
        self.blocks[v / 64] |= 1 << (v % 64);
        self.count += 1;
        true
    }

    /// Removes `v`; returns whether the set changed.
    pub fn remove(&mut self, v: usize) -> bool {
        if !self.contains(v) {
            return false;
        }
        self.blocks[v / 64] &= !(1 << (v % 64));
        self.count -= 1;
        true
    }

    /// Flips membership of `v`.
    pub fn toggle(&mut self, v: usize) {
        if !self.insert(v) {
            self.remove(v);
        }
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + bit)
            })
        })
    }

    /// Members as a vector, smallest first.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
