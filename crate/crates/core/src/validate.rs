//! Exhaustive (or sampled) replay of the ring and involution axioms.
//!
//! Constructors are correct by construction, so this is a safety net: pair
//! axioms are always checked exhaustively, while the O(order^3) triple
//! axioms (associativity, distributivity) switch to uniform sampling above
//! a size threshold. M_2(Z_6) alone would need ~2*10^9 triples.

use crate::ring::{ElementId, FiniteStarRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Orders up to this bound get exhaustive triple checks.
pub const EXHAUSTIVE_TRIPLE_LIMIT: u32 = 64;

/// Triples sampled per axiom above the exhaustive limit.
pub const DEFAULT_TRIPLE_SAMPLES: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub holds: bool,
    /// The elements of the first failing instance, in axiom order.
    pub witness: Option<Vec<ElementId>>,
}

impl AxiomCheck {
    fn pass() -> Self {
        AxiomCheck {
            holds: true,
            witness: None,
        }
    }

    fn fail(w: Vec<ElementId>) -> Self {
        AxiomCheck {
            holds: false,
            witness: Some(w),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    /// Associativity of + and * over triples.
    pub associativity: AxiomCheck,
    /// Left and right distributivity over triples.
    pub distributivity: AxiomCheck,
    /// Additive identity/inverse/commutativity and two-sided unit (pairs).
    pub identity: AxiomCheck,
    /// (a + b)* = a* + b*
    pub star_additive: AxiomCheck,
    /// a** = a
    pub star_period_two: AxiomCheck,
    /// (ab)* = b* a*
    pub star_anti_multiplicative: AxiomCheck,
    /// Whether triple axioms were replayed exhaustively.
    pub exhaustive_triples: bool,
}

impl ValidationReport {
    pub fn ring_axioms_hold(&self) -> bool {
        self.associativity.holds && self.distributivity.holds && self.identity.holds
    }

    pub fn all_hold(&self) -> bool {
        self.ring_axioms_hold()
            && self.star_additive.holds
            && self.star_period_two.holds
            && self.star_anti_multiplicative.holds
    }
}

pub fn validate_star_ring(ring: &FiniteStarRing) -> ValidationReport {
    validate_star_ring_with(ring, DEFAULT_TRIPLE_SAMPLES)
}

pub fn validate_star_ring_with(ring: &FiniteStarRing, triple_samples: u64) -> ValidationReport {
    let n = ring.order();
    let exhaustive = n <= EXHAUSTIVE_TRIPLE_LIMIT;

    let mut associativity = AxiomCheck::pass();
    let mut distributivity = AxiomCheck::pass();
    let check_triple = |a: ElementId, b: ElementId, c: ElementId,
                            assoc: &mut AxiomCheck,
                            dist: &mut AxiomCheck| {
        if assoc.holds {
            let mul_ok = ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c));
            let add_ok = ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c));
            if !mul_ok || !add_ok {
                *assoc = AxiomCheck::fail(vec![a, b, c]);
            }
        }
        if dist.holds {
            let left = ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c));
            let right = ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c));
            if left || right {
                *dist = AxiomCheck::fail(vec![a, b, c]);
            }
        }
    };

    if exhaustive {
        'outer: for a in ring.elements() {
            for b in ring.elements() {
                for c in ring.elements() {
                    check_triple(a, b, c, &mut associativity, &mut distributivity);
                    if !associativity.holds && !distributivity.holds {
                        break 'outer;
                    }
                }
            }
        }
    } else {
        // Fixed seed keeps reports reproducible run to run.
        let mut rng = ChaCha8Rng::seed_from_u64(0x5a17_0000 ^ n as u64);
        for _ in 0..triple_samples {
            let a = ElementId(rng.gen_range(0..n));
            let b = ElementId(rng.gen_range(0..n));
            let c = ElementId(rng.gen_range(0..n));
            check_triple(a, b, c, &mut associativity, &mut distributivity);
            if !associativity.holds && !distributivity.holds {
                break;
            }
        }
    }

    let mut identity = AxiomCheck::pass();
    for a in ring.elements() {
        let ok = ring.add(a, ring.zero()) == a
            && ring.add(a, ring.neg(a)) == ring.zero()
            && ring.mul(a, ring.one()) == a
            && ring.mul(ring.one(), a) == a;
        if !ok {
            identity = AxiomCheck::fail(vec![a]);
            break;
        }
    }
    if identity.holds {
        'pairs: for a in ring.elements() {
            for b in ring.elements() {
                if ring.add(a, b) != ring.add(b, a) {
                    identity = AxiomCheck::fail(vec![a, b]);
                    break 'pairs;
                }
            }
        }
    }

    let mut star_period_two = AxiomCheck::pass();
    for a in ring.elements() {
        if ring.star(ring.star(a)) != a {
            star_period_two = AxiomCheck::fail(vec![a]);
            break;
        }
    }

    let mut star_additive = AxiomCheck::pass();
    let mut star_anti_multiplicative = AxiomCheck::pass();
    'star: for a in ring.elements() {
        for b in ring.elements() {
            if star_additive.holds
                && ring.star(ring.add(a, b)) != ring.add(ring.star(a), ring.star(b))
            {
                star_additive = AxiomCheck::fail(vec![a, b]);
            }
            if star_anti_multiplicative.holds
                && ring.star(ring.mul(a, b)) != ring.mul(ring.star(b), ring.star(a))
            {
                star_anti_multiplicative = AxiomCheck::fail(vec![a, b]);
            }
            if !star_additive.holds && !star_anti_multiplicative.holds {
                break 'star;
            }
        }
    }

    ValidationReport {
        associativity,
        distributivity,
        identity,
        star_additive,
        star_period_two,
        star_anti_multiplicative,
        exhaustive_triples: exhaustive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FiniteStarRing, MatrixInvolution, DEFAULT_MAX_ORDER};

    #[test]
    fn zmod_six_passes_everything() {
        let r = FiniteStarRing::zmod(6, DEFAULT_MAX_ORDER).unwrap();
        let report = validate_star_ring(&r);
        assert!(report.all_hold());
        assert!(report.exhaustive_triples);
    }

    #[test]
    fn matrix_identity_involution_fails_anti_multiplicativity() {
        let base = FiniteStarRing::zmod(6, DEFAULT_MAX_ORDER).unwrap();
        let r =
            FiniteStarRing::matrix_ring(base, 2, MatrixInvolution::Identity, DEFAULT_MAX_ORDER)
                .unwrap();
        let report = validate_star_ring_with(&r, 20_000);
        assert!(report.ring_axioms_hold());
        assert!(report.star_additive.holds);
        assert!(report.star_period_two.holds);
        assert!(!report.star_anti_multiplicative.holds);
        // the witness must replay
        let w = report.star_anti_multiplicative.witness.unwrap();
        let (x, y) = (w[0], w[1]);
        assert_ne!(
            r.star(r.mul(x, y)),
            r.mul(r.star(y), r.star(x)),
            "anti-multiplicativity witness must replay"
        );
    }

    #[test]
    fn matrix_transpose_involution_passes() {
        let base = FiniteStarRing::zmod(6, DEFAULT_MAX_ORDER).unwrap();
        let r =
            FiniteStarRing::matrix_ring(base, 2, MatrixInvolution::Transpose, DEFAULT_MAX_ORDER)
                .unwrap();
        let report = validate_star_ring_with(&r, 20_000);
        assert!(report.all_hold());
        assert!(!report.exhaustive_triples);
    }
}
