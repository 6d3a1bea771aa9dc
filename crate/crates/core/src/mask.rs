//! Subsets of the ground set as bitmasks.
//!
//! Every exhaustive scan in the crate walks masks in ascending numeric order,
//! which is what makes all reported witnesses deterministic.

/// Hard cap on the ground-set size for any representation.
pub const MAX_GROUND_SET: usize = 30;

/// An n-bit subset of the ground set; bit i set means element i is present.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mask(pub u32);

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    pub fn full(n: usize) -> Mask {
        debug_assert!(n <= MAX_GROUND_SET);
        Mask(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Mask {
        Mask(1 << i)
    }

    pub fn from_elements(elements: &[usize]) -> Mask {
        let mut bits = 0u32;
        for &e in elements {
            bits |= 1 << e;
        }
        Mask(bits)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Mask {
        Mask(self.0 | 1 << i)
    }

    pub fn remove(self, i: usize) -> Mask {
        Mask(self.0 & !(1 << i))
    }

    pub fn union(self, other: Mask) -> Mask {
        Mask(self.0 | other.0)
    }

    pub fn intersect(self, other: Mask) -> Mask {
        Mask(self.0 & other.0)
    }

    pub fn minus(self, other: Mask) -> Mask {
        Mask(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Mask {
        Mask::full(n).minus(self)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_full(self, n: usize) -> bool {
        self == Mask::full(n)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    /// Present elements in ascending order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
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

    pub fn to_sorted_vec(self) -> Vec<usize> {
        self.elements().collect()
    }

    /// Index into a 2^n table.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Validity for a ground set of size n: no bits at positions >= n.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset_of(Mask::full(n))
    }
}

impl std::fmt::Debug for Mask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

/// All 2^n masks in ascending numeric order.
pub fn all_masks(n: usize) -> impl Iterator<Item = Mask> {
    debug_assert!(n <= MAX_GROUND_SET);
    (0..(1u64 << n)).map(|bits| Mask(bits as u32))
}

/// All submasks of `space`, ascending numeric order, starting at the empty
/// mask and ending at `space` itself.
pub fn submasks(space: Mask) -> impl Iterator<Item = Mask> {
    let m = space.0;
    let mut cur = Some(0u32);
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == m { None } else { Some(s.wrapping_sub(m) & m) };
        Some(Mask(s))
    })
}
