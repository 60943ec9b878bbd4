//! Right/left annihilators, principal right ideals, and the per-ring
//! annihilator table.
//!
//! The table stores, for every element a, the bitsets r_R(a) and r_R(aR).
//! r_R(aR) is the word-parallel AND of r_R(s) over s in aR, which keeps the
//! total cost at O(order^2) ring products plus O(order^3 / 64) word ops
//! instead of a cubic number of products.

use crate::bitset::ElementSet;
use crate::ring::{ElementId, FiniteStarRing};

pub struct AnnihilatorTable {
    order: u32,
    /// r_R(a) = { x : ax = 0 }
    ann_elem: Vec<ElementSet>,
    /// r_R(aR) = { x : arx = 0 for all r }
    ann_principal: Vec<ElementSet>,
    /// aR = { ar : r in R }
    principal_right: Vec<ElementSet>,
}

impl AnnihilatorTable {
    pub fn build(ring: &FiniteStarRing) -> Self {
        let n = ring.order();
        let mut ann_elem = Vec::with_capacity(n as usize);
        let mut principal_right = Vec::with_capacity(n as usize);
        for a in ring.elements() {
            let mut ann = ElementSet::new(n);
            let mut ideal = ElementSet::new(n);
            for x in ring.elements() {
                let p = ring.mul(a, x);
                if p == ring.zero() {
                    ann.insert(x);
                }
                ideal.insert(p);
            }
            ann_elem.push(ann);
            principal_right.push(ideal);
        }
        let ann_principal = (0..n as usize)
            .map(|a| {
                let mut acc = ElementSet::full(n);
                for s in principal_right[a].iter() {
                    acc.intersect_with(&ann_elem[s.idx()]);
                }
                acc
            })
            .collect();
        AnnihilatorTable {
            order: n,
            ann_elem,
            ann_principal,
            principal_right,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// r_R(a)
    pub fn right_ann_of_element(&self, a: ElementId) -> &ElementSet {
        &self.ann_elem[a.idx()]
    }

    /// r_R(aR)
    pub fn right_ann_of_principal(&self, a: ElementId) -> &ElementSet {
        &self.ann_principal[a.idx()]
    }

    /// aR
    pub fn principal_right_ideal(&self, a: ElementId) -> &ElementSet {
        &self.principal_right[a.idx()]
    }

    /// r_R(aR) != {0}, the strong zero-divisor condition on a nonzero a.
    pub fn has_nonzero_principal_ann(&self, a: ElementId) -> bool {
        self.ann_principal[a.idx()].len() > 1
    }

    /// Whether a is a nonzero left zero-divisor (ab = 0 for some b != 0).
    pub fn is_left_zero_divisor(&self, a: ElementId) -> bool {
        self.ann_elem[a.idx()].len() > 1
    }
}

/// r_R(B) = { x : bx = 0 for all b in B }; r_R(empty) = R.
pub fn right_annihilator(ring: &FiniteStarRing, set: &ElementSet) -> ElementSet {
    let n = ring.order();
    let mut out = ElementSet::new(n);
    'next: for x in ring.elements() {
        for b in set.iter() {
            if ring.mul(b, x) != ring.zero() {
                continue 'next;
            }
        }
        out.insert(x);
    }
    out
}

/// l_R(B) = { x : xb = 0 for all b in B }; the mirror of `right_annihilator`.
pub fn left_annihilator(ring: &FiniteStarRing, set: &ElementSet) -> ElementSet {
    let n = ring.order();
    let mut out = ElementSet::new(n);
    'next: for x in ring.elements() {
        for b in set.iter() {
            if ring.mul(x, b) != ring.zero() {
                continue 'next;
            }
        }
        out.insert(x);
    }
    out
}

/// Whether S is a two-sided ideal: contains 0, closed under addition and
/// negation, and absorbs multiplication on both sides.
pub fn is_ideal(ring: &FiniteStarRing, set: &ElementSet) -> bool {
    if !set.contains(ring.zero()) {
        return false;
    }
    let members: Vec<ElementId> = set.iter().collect();
    for &x in &members {
        if !set.contains(ring.neg(x)) {
            return false;
        }
        for &y in &members {
            if !set.contains(ring.add(x, y)) {
                return false;
            }
        }
        for r in ring.elements() {
            if !set.contains(ring.mul(r, x)) || !set.contains(ring.mul(x, r)) {
                return false;
            }
        }
    }
    true
}

/// Whether r_R(aR) is properly maximal: no b outside {0, a} has a strictly
/// larger principal annihilator. Distinct generators of one principal
/// ideal share their annihilator (e.g. 2 and 4 in Z_6), so equality does
/// not disqualify -- only proper containment does.
pub fn is_properly_maximal(ring: &FiniteStarRing, table: &AnnihilatorTable, a: ElementId) -> bool {
    debug_assert_ne!(a, ring.zero());
    let ann_a = table.right_ann_of_principal(a);
    for b in ring.elements() {
        if b == ring.zero() || b == a {
            continue;
        }
        if ann_a.is_proper_subset(table.right_ann_of_principal(b)) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FiniteStarRing, RingSpec, DEFAULT_MAX_ORDER};
    use std::sync::Arc;

    fn z(n: u32) -> Arc<FiniteStarRing> {
        FiniteStarRing::zmod(n, DEFAULT_MAX_ORDER).unwrap()
    }

    fn set_of(ring: &FiniteStarRing, labels: &[&str]) -> ElementSet {
        ElementSet::from_ids(
            ring.order(),
            labels.iter().map(|l| ring.element_by_label(l).unwrap()),
        )
    }

    #[test]
    fn right_annihilator_z6() {
        let r = z(6);
        let got = right_annihilator(&r, &set_of(&r, &["4"]));
        assert_eq!(got, set_of(&r, &["0", "3"]));
        let unit = right_annihilator(&r, &set_of(&r, &["1"]));
        assert_eq!(unit, set_of(&r, &["0"]));
    }

    #[test]
    fn right_annihilator_z2xz4_brute_force() {
        let spec = RingSpec::product_of(&[2, 4]);
        let r = spec.build_default().unwrap();
        let got = right_annihilator(&r, &set_of(&r, &["(0,2)"]));
        // independent oracle: direct scan of all 8 elements
        let b = r.element_by_label("(0,2)").unwrap();
        let expect = ElementSet::from_ids(
            r.order(),
            r.elements().filter(|&x| r.mul(b, x) == r.zero()),
        );
        assert_eq!(got, expect);
        assert_eq!(got, set_of(&r, &["(0,0)", "(1,0)", "(0,2)", "(1,2)"]));
    }

    #[test]
    fn annihilator_of_empty_set_is_whole_ring() {
        let r = z(5);
        let empty = ElementSet::new(r.order());
        assert_eq!(right_annihilator(&r, &empty), ElementSet::full(r.order()));
        assert_eq!(left_annihilator(&r, &empty), ElementSet::full(r.order()));
    }

    #[test]
    fn left_annihilator_matches_right_on_commutative() {
        let r = z(6);
        let b = set_of(&r, &["4"]);
        assert_eq!(left_annihilator(&r, &b), right_annihilator(&r, &b));
    }

    #[test]
    fn left_annihilator_in_a_matrix_ring() {
        use crate::ring::MatrixInvolution;
        let base = z(6);
        let r = FiniteStarRing::matrix_ring(base, 2, MatrixInvolution::Transpose, 2048).unwrap();
        let c = r.element_by_label("[[3,3],[3,3]]").unwrap();
        let got = left_annihilator(&r, &ElementSet::from_ids(r.order(), [c]));
        // brute force over all 1296 elements
        let expect = ElementSet::from_ids(
            r.order(),
            r.elements().filter(|&x| r.mul(x, c) == r.zero()),
        );
        assert_eq!(got, expect);
        let probe = r.element_by_label("[[2,0],[0,0]]").unwrap();
        assert!(got.contains(probe));
    }

    #[test]
    fn principal_right_ideals_z6() {
        let r = z(6);
        let t = AnnihilatorTable::build(&r);
        let two = r.element_by_label("2").unwrap();
        assert_eq!(*t.principal_right_ideal(two), set_of(&r, &["0", "2", "4"]));
        assert_eq!(
            *t.principal_right_ideal(r.one()),
            ElementSet::full(r.order())
        );
    }

    #[test]
    fn principal_right_ideal_z2xz4() {
        let r = RingSpec::product_of(&[2, 4]).build_default().unwrap();
        let t = AnnihilatorTable::build(&r);
        let a = r.element_by_label("(1,0)").unwrap();
        assert_eq!(*t.principal_right_ideal(a), set_of(&r, &["(0,0)", "(1,0)"]));
    }

    #[test]
    fn principal_annihilators() {
        let r6 = z(6);
        let t6 = AnnihilatorTable::build(&r6);
        assert_eq!(
            *t6.right_ann_of_principal(ElementId(2)),
            set_of(&r6, &["0", "3"])
        );
        assert_eq!(
            *t6.right_ann_of_principal(r6.one()),
            set_of(&r6, &["0"])
        );

        let r4 = z(4);
        let t4 = AnnihilatorTable::build(&r4);
        assert_eq!(
            *t4.right_ann_of_principal(ElementId(2)),
            set_of(&r4, &["0", "2"])
        );
    }

    #[test]
    fn principal_ann_replays_defining_predicate() {
        let r = RingSpec::product_of(&[2, 4]).build_default().unwrap();
        let t = AnnihilatorTable::build(&r);
        for a in r.elements() {
            for x in t.right_ann_of_principal(a).iter() {
                for s in r.elements() {
                    assert_eq!(r.mul3(a, s, x), r.zero());
                }
            }
            // and the table is exactly the predicate, not an under-approximation
            let direct = ElementSet::from_ids(
                r.order(),
                r.elements()
                    .filter(|&x| r.elements().all(|s| r.mul3(a, s, x) == r.zero())),
            );
            assert_eq!(*t.right_ann_of_principal(a), direct);
        }
    }

    #[test]
    fn ideal_checks() {
        let r = RingSpec::product_of(&[2, 4]).build_default().unwrap();
        assert!(is_ideal(&r, &set_of(&r, &["(0,0)", "(1,0)"])));
        assert!(is_ideal(
            &r,
            &set_of(&r, &["(0,0)", "(1,0)", "(0,2)", "(1,2)"])
        ));
        let r6 = z(6);
        assert!(!is_ideal(&r6, &set_of(&r6, &["0", "1"])));
    }

    #[test]
    fn properly_maximal_examples() {
        let r = z(6);
        let t = AnnihilatorTable::build(&r);
        assert!(is_properly_maximal(&r, &t, ElementId(4)));
        assert!(!is_properly_maximal(&r, &t, r.one()));

        let r24 = RingSpec::product_of(&[2, 4]).build_default().unwrap();
        let t24 = AnnihilatorTable::build(&r24);
        let a = r24.element_by_label("(1,0)").unwrap();
        assert!(is_properly_maximal(&r24, &t24, a));
    }
}
