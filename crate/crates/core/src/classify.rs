//! Annihilator-based ring classification.
//!
//! All five predicates reduce to "is this annihilator of the form eR for a
//! projection e". Baer and quasi-Baer quantify over arbitrary subsets and
//! ideals; since r_R(B) is the intersection of the r_R(b), closing the
//! element (resp. principal) annihilator family under pairwise
//! intersection reaches every annihilator that can occur, with no need to
//! enumerate 2^order subsets.

use crate::annihilators::AnnihilatorTable;
use crate::bitset::ElementSet;
use crate::projections::projections;
use crate::ring::{ElementId, FiniteStarRing};
use std::collections::{HashMap, HashSet};

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub is_rickart: bool,
    pub is_baer: bool,
    pub is_quasi_baer: bool,
    pub is_pq_baer: bool,
    pub is_semiproper: bool,
    /// Smallest a whose r_R(a) is not of the form eR.
    pub rickart_witness: Option<ElementId>,
    /// Smallest a whose r_R(aR) is not of the form eR.
    pub pq_witness: Option<ElementId>,
    /// An achievable r_R(B) that no projection generates.
    pub baer_witness: Option<ElementSet>,
    /// An achievable ideal annihilator that no projection generates.
    pub quasi_baer_witness: Option<ElementSet>,
    /// Nonzero a with aRa* = {0}.
    pub semiproper_witness: Option<ElementId>,
}

pub fn classify(ring: &FiniteStarRing, table: &AnnihilatorTable) -> ClassificationReport {
    let projs = projections(ring, false);
    // eR for each projection e, keyed for O(words) membership tests.
    let generated: HashSet<ElementSet> = projs
        .iter()
        .map(|e| table.principal_right_ideal(e).clone())
        .collect();

    let mut rickart_witness = None;
    let mut pq_witness = None;
    for a in ring.elements() {
        if rickart_witness.is_none() && !generated.contains(table.right_ann_of_element(a)) {
            rickart_witness = Some(a);
        }
        if pq_witness.is_none() && !generated.contains(table.right_ann_of_principal(a)) {
            pq_witness = Some(a);
        }
        if rickart_witness.is_some() && pq_witness.is_some() {
            break;
        }
    }

    let baer_witness = closure_escapee(
        ring,
        &generated,
        ring.elements().map(|a| table.right_ann_of_element(a)),
    );
    let quasi_baer_witness = closure_escapee(
        ring,
        &generated,
        ring.elements().map(|a| table.right_ann_of_principal(a)),
    );

    let mut semiproper_witness = None;
    'outer: for a in ring.elements() {
        if a == ring.zero() {
            continue;
        }
        let astar = ring.star(a);
        for r in ring.elements() {
            if ring.mul3(a, r, astar) != ring.zero() {
                continue 'outer;
            }
        }
        semiproper_witness = Some(a);
        break;
    }

    ClassificationReport {
        is_rickart: rickart_witness.is_none(),
        is_baer: baer_witness.is_none(),
        is_quasi_baer: quasi_baer_witness.is_none(),
        is_pq_baer: pq_witness.is_none(),
        is_semiproper: semiproper_witness.is_none(),
        rickart_witness,
        pq_witness,
        baer_witness,
        quasi_baer_witness,
        semiproper_witness,
    }
}

/// Close `seeds` under pairwise intersection; return the first member of
/// the closure that is not projection-generated, if any.
fn closure_escapee<'a>(
    ring: &FiniteStarRing,
    generated: &HashSet<ElementSet>,
    seeds: impl Iterator<Item = &'a ElementSet>,
) -> Option<ElementSet> {
    let n = ring.order();
    let mut family: Vec<ElementSet> = Vec::new();
    let mut seen: HashMap<ElementSet, ()> = HashMap::new();
    // r_R(empty subset) = R is achievable and must be generated too.
    let mut queue: Vec<ElementSet> = vec![ElementSet::full(n)];
    for s in seeds {
        queue.push(s.clone());
    }
    while let Some(s) = queue.pop() {
        if seen.contains_key(&s) {
            continue;
        }
        if !generated.contains(&s) {
            return Some(s);
        }
        for t in &family {
            let u = s.intersection(t);
            if !seen.contains_key(&u) {
                queue.push(u);
            }
        }
        seen.insert(s.clone(), ());
        family.push(s);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FiniteStarRing, MatrixInvolution, RingSpec, DEFAULT_MAX_ORDER};
    use std::sync::Arc;

    fn classify_spec(spec: RingSpec) -> (Arc<FiniteStarRing>, ClassificationReport) {
        let ring = spec.build_default().unwrap();
        let table = AnnihilatorTable::build(&ring);
        let report = classify(&ring, &table);
        (ring, report)
    }

    #[test]
    fn z6_is_pq_baer_rickart_semiproper() {
        let (_, c) = classify_spec(RingSpec::Zmod(6));
        assert!(c.is_pq_baer);
        assert!(c.is_rickart);
        assert!(c.is_semiproper);
        assert!(c.is_baer);
        assert!(c.is_quasi_baer);
    }

    #[test]
    fn z4_fails_pq_baer_and_semiproper_with_witnesses() {
        let (ring, c) = classify_spec(RingSpec::Zmod(4));
        assert!(!c.is_pq_baer);
        assert_eq!(c.pq_witness, Some(ElementId(2)));
        assert!(!c.is_semiproper);
        assert_eq!(c.semiproper_witness, Some(ElementId(2)));
        // replay both witnesses
        let table = AnnihilatorTable::build(&ring);
        let ann = table.right_ann_of_principal(ElementId(2));
        for e in projections(&ring, false).iter() {
            assert_ne!(table.principal_right_ideal(e), ann);
        }
        for r in ring.elements() {
            assert_eq!(ring.mul3(ElementId(2), r, ElementId(2)), ring.zero());
        }
    }

    #[test]
    fn m2_z6_identity_is_pq_baer() {
        let base = FiniteStarRing::zmod(6, DEFAULT_MAX_ORDER).unwrap();
        let ring =
            FiniteStarRing::matrix_ring(base, 2, MatrixInvolution::Identity, DEFAULT_MAX_ORDER)
                .unwrap();
        let table = AnnihilatorTable::build(&ring);
        let c = classify(&ring, &table);
        assert!(c.is_pq_baer);
    }

    #[test]
    fn m2_z4_is_not_pq_baer() {
        let base = FiniteStarRing::zmod(4, DEFAULT_MAX_ORDER).unwrap();
        let ring =
            FiniteStarRing::matrix_ring(base, 2, MatrixInvolution::Transpose, DEFAULT_MAX_ORDER)
                .unwrap();
        let table = AnnihilatorTable::build(&ring);
        let c = classify(&ring, &table);
        assert!(!c.is_pq_baer);
    }

    #[test]
    fn baer_matrix_rings_match_the_known_characterization() {
        // M_2(Z_m) with the transpose involution is a Baer *-ring exactly
        // when m is squarefree with every prime factor congruent to
        // 3 mod 4; hence yes for m = 3, no for m in {2, 4, 6}.
        for (m, expect_baer) in [(3u32, true), (2, false), (4, false), (6, false)] {
            let base = FiniteStarRing::zmod(m, DEFAULT_MAX_ORDER).unwrap();
            let ring = FiniteStarRing::matrix_ring(
                base,
                2,
                MatrixInvolution::Transpose,
                DEFAULT_MAX_ORDER,
            )
            .unwrap();
            let table = AnnihilatorTable::build(&ring);
            let c = classify(&ring, &table);
            assert_eq!(c.is_baer, expect_baer, "M2(Z{m})");
        }
    }

    #[test]
    fn implication_ladder_on_a_sample() {
        for spec in [
            RingSpec::Zmod(4),
            RingSpec::Zmod(6),
            RingSpec::Zmod(8),
            RingSpec::Zmod(12),
            RingSpec::Zmod(30),
            RingSpec::product_of(&[2, 4]),
            RingSpec::product_of(&[2, 2, 2]),
            RingSpec::product_of(&[3, 3]),
            RingSpec::product_of(&[2, 6]),
        ] {
            let (ring, c) = classify_spec(spec);
            let tag = ring.spec().canonical_text();
            if c.is_baer {
                assert!(c.is_quasi_baer, "{tag}: Baer must imply quasi-Baer");
                assert!(c.is_rickart, "{tag}: Baer must imply Rickart");
            }
            if c.is_quasi_baer {
                assert!(c.is_pq_baer, "{tag}: quasi-Baer must imply p.q.-Baer");
            }
        }
    }
}
