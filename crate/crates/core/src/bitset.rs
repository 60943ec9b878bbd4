//! Fixed-width bitsets over dense element ids.
//!
//! Annihilators, principal ideals, and adjacency rows are all subsets of a
//! ring (or vertex set) addressed by dense indices, so a flat `u64` word
//! vector with word-parallel intersection is the workhorse representation.

use crate::ring::ElementId;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    nbits: u32,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn new(nbits: u32) -> Self {
        let nwords = (nbits as usize).div_ceil(64);
        ElementSet {
            nbits,
            words: vec![0; nwords],
        }
    }

    /// The full set {0, .., nbits-1}.
    pub fn full(nbits: u32) -> Self {
        let mut set = ElementSet::new(nbits);
        for w in &mut set.words {
            *w = u64::MAX;
        }
        set.mask_tail();
        set
    }

    pub fn from_ids<I: IntoIterator<Item = ElementId>>(nbits: u32, ids: I) -> Self {
        let mut set = ElementSet::new(nbits);
        for id in ids {
            set.insert(id);
        }
        set
    }

    fn mask_tail(&mut self) {
        let tail = self.nbits % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn capacity(&self) -> u32 {
        self.nbits
    }

    pub fn insert(&mut self, id: ElementId) {
        debug_assert!(id.0 < self.nbits);
        self.words[id.idx() / 64] |= 1u64 << (id.idx() % 64);
    }

    pub fn remove(&mut self, id: ElementId) {
        debug_assert!(id.0 < self.nbits);
        self.words[id.idx() / 64] &= !(1u64 << (id.idx() % 64));
    }

    pub fn contains(&self, id: ElementId) -> bool {
        debug_assert!(id.0 < self.nbits);
        self.words[id.idx() / 64] >> (id.idx() % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Word-parallel intersection, in place.
    pub fn intersect_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).all(|(w, o)| w & !o == 0)
    }

    pub fn is_proper_subset(&self, other: &ElementSet) -> bool {
        self.is_subset(other) && self != other
    }

    /// True when the two sets share at least one member.
    pub fn intersects(&self, other: &ElementSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).any(|(w, o)| w & o != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros();
                w &= w - 1;
                Some(ElementId(wi as u32 * 64 + bit))
            })
        })
    }

    pub fn first(&self) -> Option<ElementId> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|id| id.0)).finish()
    }
}
