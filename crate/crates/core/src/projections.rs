//! Projections, the lattice of central projections, and central covers.
//!
//! A projection is a self-adjoint idempotent; central projections commute
//! with everything and form a lattice under e <= f iff e = ef = fe, with
//! meet ef and join e + f - ef.

use crate::bitset::ElementSet;
use crate::ring::{ElementId, FiniteStarRing};
use std::sync::Arc;
use thiserror::Error;

/// All e with e^2 = e and e* = e; with `central_only`, additionally
/// ex = xe for every x.
pub fn projections(ring: &FiniteStarRing, central_only: bool) -> ElementSet {
    let mut out = ElementSet::new(ring.order());
    'cand: for e in ring.elements() {
        if ring.mul(e, e) != e || ring.star(e) != e {
            continue;
        }
        if central_only && !ring.is_commutative() {
            for x in ring.elements() {
                if ring.mul(e, x) != ring.mul(x, e) {
                    continue 'cand;
                }
            }
        }
        out.insert(e);
    }
    out
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("element {0:?} has no central cover")]
pub struct NoCentralCover(pub ElementId);

pub struct CentralProjectionLattice {
    ring: Arc<FiniteStarRing>,
    elements: Vec<ElementId>,
    member: ElementSet,
    atoms: Vec<ElementId>,
}

impl CentralProjectionLattice {
    pub fn build(ring: Arc<FiniteStarRing>) -> Self {
        let member = projections(&ring, true);
        let elements: Vec<ElementId> = member.iter().collect();
        let mut lat = CentralProjectionLattice {
            ring,
            elements,
            member,
            atoms: Vec::new(),
        };
        lat.atoms = lat
            .elements
            .iter()
            .copied()
            .filter(|&e| lat.is_atom_inner(e))
            .collect();
        debug_assert!(lat.verify_closure());
        lat
    }

    fn is_atom_inner(&self, e: ElementId) -> bool {
        if e == self.bottom() {
            return false;
        }
        self.elements
            .iter()
            .all(|&f| f == self.bottom() || f == e || !self.leq(f, e))
    }

    /// Meets and joins of central projections land back in the set; replay
    /// this rather than assume it.
    fn verify_closure(&self) -> bool {
        for &e in &self.elements {
            for &f in &self.elements {
                if !self.member.contains(self.meet(e, f)) || !self.member.contains(self.join(e, f))
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn ring(&self) -> &Arc<FiniteStarRing> {
        &self.ring
    }

    /// Members in ascending id order.
    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: ElementId) -> bool {
        self.member.contains(e)
    }

    pub fn bottom(&self) -> ElementId {
        self.ring.zero()
    }

    pub fn top(&self) -> ElementId {
        self.ring.one()
    }

    /// Members other than 0 and 1.
    pub fn nontrivial(&self) -> impl Iterator<Item = ElementId> + '_ {
        let (zero, one) = (self.bottom(), self.top());
        self.elements
            .iter()
            .copied()
            .filter(move |&e| e != zero && e != one)
    }

    /// e <= f iff e = ef = fe.
    pub fn leq(&self, e: ElementId, f: ElementId) -> bool {
        self.ring.mul(e, f) == e && self.ring.mul(f, e) == e
    }

    pub fn meet(&self, e: ElementId, f: ElementId) -> ElementId {
        self.ring.mul(e, f)
    }

    pub fn join(&self, e: ElementId, f: ElementId) -> ElementId {
        self.ring
            .sub(self.ring.add(e, f), self.ring.mul(e, f))
    }

    /// Minimal nonzero members.
    pub fn atoms(&self) -> &[ElementId] {
        &self.atoms
    }

    pub fn is_atom(&self, e: ElementId) -> bool {
        self.atoms.contains(&e)
    }

    /// The smallest central projection h with ha = a. On a finite unital
    /// ring the set of fixers is closed under meet and contains 1, so the
    /// meet of all fixers is the cover; the final check replays that.
    pub fn central_cover(&self, a: ElementId) -> Result<ElementId, NoCentralCover> {
        let mut acc = self.top();
        for &h in &self.elements {
            if self.ring.mul(h, a) == a {
                acc = self.meet(acc, h);
            }
        }
        if self.ring.mul(acc, a) == a {
            Ok(acc)
        } else {
            Err(NoCentralCover(a))
        }
    }
}
