//! Finite unital rings with involution.
//!
//! Elements are addressed by dense ids in `[0, order)`. Operations are
//! computed from the structural form of the ring (residue, tuple, or matrix
//! arithmetic); full `order x order` operation tables are materialized
//! lazily for small rings only -- the 2x2 matrices over Z_6 already have
//! 1296 elements, and a square table at that size buys nothing. Id 0 is
//! always the additive zero.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};
use thiserror::Error;

/// Largest ring order accepted by default. Overridable per call site; the
/// CLI reads `STARRING_MAX_ORDER`.
pub const DEFAULT_MAX_ORDER: u32 = 2048;

/// Orders up to this bound get full add/mul tables on first use.
const TABLE_LIMIT: u32 = 256;

/// Dense index of a ring element. Only meaningful relative to one ring
/// instance; id 0 is the additive identity.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(pub u32);

impl ElementId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum MatrixInvolution {
    /// Transpose with entrywise star; a genuine involution over a
    /// commutative base.
    Transpose,
    /// The identity map. Not an anti-automorphism on a noncommutative
    /// ring; kept because such pseudo-involutions appear in practice and
    /// the flag `involution_proper` records the defect.
    Identity,
}

impl MatrixInvolution {
    pub fn tag(self) -> &'static str {
        match self {
            MatrixInvolution::Transpose => "transpose",
            MatrixInvolution::Identity => "id",
        }
    }
}

impl FromStr for MatrixInvolution {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s.to_ascii_lowercase().as_str() {
            "transpose" => Ok(MatrixInvolution::Transpose),
            "id" => Ok(MatrixInvolution::Identity),
            _ => Err(()),
        }
    }
}

/// Construction descriptor for a ring: Z_n, a direct product, or a full
/// matrix ring over a commutative base.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RingSpec {
    Zmod(u32),
    Product(Box<RingSpec>, Box<RingSpec>),
    Matrix {
        dim: u32,
        base: Box<RingSpec>,
        involution: MatrixInvolution,
    },
}

impl RingSpec {
    pub fn product_of(factors: &[u32]) -> RingSpec {
        assert!(!factors.is_empty());
        let mut it = factors.iter().rev();
        let mut spec = RingSpec::Zmod(*it.next().unwrap());
        for &n in it {
            spec = RingSpec::Product(Box::new(RingSpec::Zmod(n)), Box::new(spec));
        }
        spec
    }

    /// Number of elements, before any order cap is applied.
    pub fn order(&self) -> u128 {
        match self {
            RingSpec::Zmod(n) => *n as u128,
            RingSpec::Product(l, r) => l.order().saturating_mul(r.order()),
            RingSpec::Matrix { dim, base, .. } => {
                let mut out: u128 = 1;
                for _ in 0..dim * dim {
                    out = out.saturating_mul(base.order());
                }
                out
            }
        }
    }

    pub fn build(&self, max_order: u32) -> Result<Arc<FiniteStarRing>, RingError> {
        match self {
            RingSpec::Zmod(n) => FiniteStarRing::zmod(*n, max_order),
            RingSpec::Product(l, r) => {
                let left = l.build(max_order)?;
                let right = r.build(max_order)?;
                FiniteStarRing::product(left, right, max_order)
            }
            RingSpec::Matrix {
                dim,
                base,
                involution,
            } => {
                let base = base.build(max_order)?;
                FiniteStarRing::matrix_ring(base, *dim, *involution, max_order)
            }
        }
    }

    pub fn build_default(&self) -> Result<Arc<FiniteStarRing>, RingError> {
        self.build(DEFAULT_MAX_ORDER)
    }

    /// Canonical text form, re-parsable by the ring-spec grammar.
    pub fn canonical_text(&self) -> String {
        match self {
            RingSpec::Zmod(n) => format!("Z{n}"),
            RingSpec::Product(l, r) => {
                let left = match **l {
                    RingSpec::Product(..) => format!("({})", l.canonical_text()),
                    _ => l.canonical_text(),
                };
                format!("{left} x {}", r.canonical_text())
            }
            RingSpec::Matrix {
                dim,
                base,
                involution,
            } => format!("M{dim}({})@{}", base.canonical_text(), involution.tag()),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("ring order {requested} exceeds the configured maximum {max}")]
    OrderLimit { requested: u128, max: u32 },
    #[error("Z_n requires n >= 2, got {0}")]
    ModulusTooSmall(u32),
    #[error("matrix dimension must be at least 1")]
    MatrixDimZero,
    #[error("matrix base ring must be commutative")]
    NoncommutativeBase,
}

enum Repr {
    Zmod {
        n: u32,
    },
    Product {
        left: Arc<FiniteStarRing>,
        right: Arc<FiniteStarRing>,
    },
    Matrix {
        base: Arc<FiniteStarRing>,
        dim: u32,
        /// Row-major decode cache: `entries[id*dim*dim ..][..dim*dim]` are
        /// the base-ring ids of the matrix with this id.
        entries: Vec<u32>,
    },
}

/// A finite unital ring with an involution map. Immutable after
/// construction; all operations are pure reads, so instances are freely
/// shareable across worker threads.
pub struct FiniteStarRing {
    spec: RingSpec,
    order: u32,
    one: ElementId,
    commutative: bool,
    involution_proper: bool,
    /// A pair (x, y) with (xy)* != y*x*, present iff the involution is
    /// improper.
    improper_witness: Option<(ElementId, ElementId)>,
    neg_tab: Vec<u32>,
    star_tab: Vec<u32>,
    repr: Repr,
    add_tab: OnceLock<Vec<u32>>,
    mul_tab: OnceLock<Vec<u32>>,
}

impl FiniteStarRing {
    /// Z_n with the identity involution (the only involution offered for
    /// residue rings).
    pub fn zmod(n: u32, max_order: u32) -> Result<Arc<Self>, RingError> {
        if n < 2 {
            return Err(RingError::ModulusTooSmall(n));
        }
        if n > max_order {
            return Err(RingError::OrderLimit {
                requested: n as u128,
                max: max_order,
            });
        }
        let neg_tab = (0..n).map(|a| (n - a) % n).collect();
        let star_tab = (0..n).collect();
        Ok(Arc::new(FiniteStarRing {
            spec: RingSpec::Zmod(n),
            order: n,
            one: ElementId(1 % n),
            commutative: true,
            involution_proper: true,
            improper_witness: None,
            neg_tab,
            star_tab,
            repr: Repr::Zmod { n },
            add_tab: OnceLock::new(),
            mul_tab: OnceLock::new(),
        }))
    }

    /// Direct product with componentwise operations and componentwise star.
    pub fn product(
        left: Arc<Self>,
        right: Arc<Self>,
        max_order: u32,
    ) -> Result<Arc<Self>, RingError> {
        let requested = left.order as u128 * right.order as u128;
        if requested > max_order as u128 {
            return Err(RingError::OrderLimit {
                requested,
                max: max_order,
            });
        }
        let order = requested as u32;
        let rn = right.order;
        let encode = |l: u32, r: u32| l * rn + r;
        let mut neg_tab = Vec::with_capacity(order as usize);
        let mut star_tab = Vec::with_capacity(order as usize);
        for id in 0..order {
            let (l, r) = (id / rn, id % rn);
            neg_tab.push(encode(left.neg_tab[l as usize], right.neg_tab[r as usize]));
            star_tab.push(encode(
                left.star_tab[l as usize],
                right.star_tab[r as usize],
            ));
        }
        let one = ElementId(encode(left.one.0, right.one.0));
        let commutative = left.commutative && right.commutative;
        let involution_proper = left.involution_proper && right.involution_proper;
        let improper_witness = if involution_proper {
            None
        } else {
            // Lift a witness from the improper factor.
            left.improper_witness
                .map(|(x, y)| {
                    (
                        ElementId(encode(x.0, right.one.0)),
                        ElementId(encode(y.0, right.one.0)),
                    )
                })
                .or_else(|| {
                    right.improper_witness.map(|(x, y)| {
                        (
                            ElementId(encode(left.one.0, x.0)),
                            ElementId(encode(left.one.0, y.0)),
                        )
                    })
                })
        };
        let spec = RingSpec::Product(Box::new(left.spec.clone()), Box::new(right.spec.clone()));
        Ok(Arc::new(FiniteStarRing {
            spec,
            order,
            one,
            commutative,
            involution_proper,
            improper_witness,
            neg_tab,
            star_tab,
            repr: Repr::Product { left, right },
            add_tab: OnceLock::new(),
            mul_tab: OnceLock::new(),
        }))
    }

    /// Full `dim x dim` matrix ring over a commutative base, under either
    /// the transpose involution or the identity pseudo-involution.
    pub fn matrix_ring(
        base: Arc<Self>,
        dim: u32,
        involution: MatrixInvolution,
        max_order: u32,
    ) -> Result<Arc<Self>, RingError> {
        if dim == 0 {
            return Err(RingError::MatrixDimZero);
        }
        if !base.commutative {
            return Err(RingError::NoncommutativeBase);
        }
        let cells = (dim * dim) as usize;
        let mut requested: u128 = 1;
        for _ in 0..cells {
            requested = requested.saturating_mul(base.order as u128);
        }
        if requested > max_order as u128 {
            return Err(RingError::OrderLimit {
                requested,
                max: max_order,
            });
        }
        let order = requested as u32;
        let bn = base.order as u64;

        // Mixed-radix decode cache, row-major, most significant cell first.
        let mut entries = vec![0u32; order as usize * cells];
        for id in 0..order {
            let mut acc = id as u64;
            let row = &mut entries[id as usize * cells..(id as usize + 1) * cells];
            for cell in row.iter_mut().rev() {
                *cell = (acc % bn) as u32;
                acc /= bn;
            }
        }
        let encode = |cells_ids: &[u32]| -> u32 {
            let mut acc = 0u64;
            for &c in cells_ids {
                acc = acc * bn + c as u64;
            }
            acc as u32
        };

        let mut one_cells = vec![0u32; cells];
        for i in 0..dim as usize {
            one_cells[i * dim as usize + i] = base.one.0;
        }
        let one = ElementId(encode(&one_cells));

        let mut neg_tab = Vec::with_capacity(order as usize);
        let mut star_tab = Vec::with_capacity(order as usize);
        let mut scratch = vec![0u32; cells];
        for id in 0..order {
            let row = &entries[id as usize * cells..(id as usize + 1) * cells];
            for (s, &c) in scratch.iter_mut().zip(row) {
                *s = base.neg_tab[c as usize];
            }
            neg_tab.push(encode(&scratch));
            match involution {
                MatrixInvolution::Transpose => {
                    for i in 0..dim as usize {
                        for j in 0..dim as usize {
                            scratch[i * dim as usize + j] =
                                base.star_tab[row[j * dim as usize + i] as usize];
                        }
                    }
                    star_tab.push(encode(&scratch));
                }
                MatrixInvolution::Identity => star_tab.push(id),
            }
        }

        let commutative = dim == 1;
        let (involution_proper, improper_witness) = match involution {
            MatrixInvolution::Transpose => (base.involution_proper, None),
            MatrixInvolution::Identity if dim == 1 => (base.involution_proper, None),
            MatrixInvolution::Identity => {
                // E_12 * E_21 = E_11 but E_21 * E_12 = E_22, so the identity
                // map fails (xy)* = y*x* on any dim >= 2 matrix ring.
                let mut e12 = vec![0u32; cells];
                e12[1] = base.one.0;
                let mut e21 = vec![0u32; cells];
                e21[dim as usize] = base.one.0;
                (false, Some((ElementId(encode(&e12)), ElementId(encode(&e21)))))
            }
        };

        let spec = RingSpec::Matrix {
            dim,
            base: Box::new(base.spec.clone()),
            involution,
        };
        Ok(Arc::new(FiniteStarRing {
            spec,
            order,
            one,
            commutative,
            involution_proper,
            improper_witness,
            neg_tab,
            star_tab,
            repr: Repr::Matrix { base, dim, entries },
            add_tab: OnceLock::new(),
            mul_tab: OnceLock::new(),
        }))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order).map(ElementId)
    }

    #[inline]
    pub fn zero(&self) -> ElementId {
        ElementId(0)
    }

    #[inline]
    pub fn one(&self) -> ElementId {
        self.one
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// True iff the star map passed full anti-automorphism validation at
    /// construction time.
    pub fn involution_proper(&self) -> bool {
        self.involution_proper
    }

    /// A pair (x, y) with (xy)* != y*x*, recorded when the involution is a
    /// pseudo-involution.
    pub fn improper_witness(&self) -> Option<(ElementId, ElementId)> {
        self.improper_witness
    }

    #[inline]
    pub fn neg(&self, a: ElementId) -> ElementId {
        ElementId(self.neg_tab[a.idx()])
    }

    #[inline]
    pub fn star(&self, a: ElementId) -> ElementId {
        ElementId(self.star_tab[a.idx()])
    }

    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        if self.order <= TABLE_LIMIT {
            let tab = self
                .add_tab
                .get_or_init(|| self.materialize(|x, y| self.add_structural(x, y)));
            return ElementId(tab[a.idx() * self.order as usize + b.idx()]);
        }
        self.add_structural(a, b)
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        if self.order <= TABLE_LIMIT {
            let tab = self
                .mul_tab
                .get_or_init(|| self.materialize(|x, y| self.mul_structural(x, y)));
            return ElementId(tab[a.idx() * self.order as usize + b.idx()]);
        }
        self.mul_structural(a, b)
    }

    pub fn sub(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add(a, self.neg(b))
    }

    /// a * r * b, the basic probe for `aRb* = 0` style conditions.
    pub fn mul3(&self, a: ElementId, r: ElementId, b: ElementId) -> ElementId {
        self.mul(self.mul(a, r), b)
    }

    /// Additive order of 1, i.e. the characteristic of the ring.
    pub fn characteristic(&self) -> u32 {
        let mut acc = self.one;
        let mut k = 1;
        while acc != self.zero() {
            acc = self.add(acc, self.one);
            k += 1;
        }
        k
    }

    fn materialize(&self, op: impl Fn(ElementId, ElementId) -> ElementId) -> Vec<u32> {
        let n = self.order as usize;
        let mut tab = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                tab[a * n + b] = op(ElementId(a as u32), ElementId(b as u32)).0;
            }
        }
        tab
    }

    fn add_structural(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.repr {
            Repr::Zmod { n } => ElementId((a.0 + b.0) % n),
            Repr::Product { left, right } => {
                let rn = right.order;
                let (al, ar) = (a.0 / rn, a.0 % rn);
                let (bl, br) = (b.0 / rn, b.0 % rn);
                let l = left.add(ElementId(al), ElementId(bl));
                let r = right.add(ElementId(ar), ElementId(br));
                ElementId(l.0 * rn + r.0)
            }
            Repr::Matrix { base, entries, .. } => {
                let cells = self.cells();
                let ra = &entries[a.idx() * cells..(a.idx() + 1) * cells];
                let rb = &entries[b.idx() * cells..(b.idx() + 1) * cells];
                let bn = base.order as u64;
                let mut acc = 0u64;
                for (&x, &y) in ra.iter().zip(rb) {
                    acc = acc * bn + base.add(ElementId(x), ElementId(y)).0 as u64;
                }
                ElementId(acc as u32)
            }
        }
    }

    fn mul_structural(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.repr {
            Repr::Zmod { n } => ElementId((a.0 as u64 * b.0 as u64 % *n as u64) as u32),
            Repr::Product { left, right } => {
                let rn = right.order;
                let (al, ar) = (a.0 / rn, a.0 % rn);
                let (bl, br) = (b.0 / rn, b.0 % rn);
                let l = left.mul(ElementId(al), ElementId(bl));
                let r = right.mul(ElementId(ar), ElementId(br));
                ElementId(l.0 * rn + r.0)
            }
            Repr::Matrix { base, dim, entries, .. } => {
                let k = *dim as usize;
                let cells = k * k;
                let ra = &entries[a.idx() * cells..(a.idx() + 1) * cells];
                let rb = &entries[b.idx() * cells..(b.idx() + 1) * cells];
                let bn = base.order as u64;
                let mut acc = 0u64;
                for i in 0..k {
                    for j in 0..k {
                        let mut cell = ElementId(0);
                        for t in 0..k {
                            let prod = base.mul(ElementId(ra[i * k + t]), ElementId(rb[t * k + j]));
                            cell = base.add(cell, prod);
                        }
                        acc = acc * bn + cell.0 as u64;
                    }
                }
                ElementId(acc as u32)
            }
        }
    }

    fn cells(&self) -> usize {
        match &self.repr {
            Repr::Matrix { dim, .. } => (*dim as usize) * (*dim as usize),
            _ => 0,
        }
    }

    /// Human-readable element label: residue, flattened tuple, or row-major
    /// matrix. Injective over ids.
    pub fn label(&self, a: ElementId) -> String {
        match &self.repr {
            Repr::Zmod { .. } => a.0.to_string(),
            Repr::Product { .. } => {
                let mut parts = Vec::new();
                self.label_parts(a, &mut parts);
                format!("({})", parts.join(","))
            }
            Repr::Matrix { base, dim, entries, .. } => {
                let k = *dim as usize;
                let row = &entries[a.idx() * k * k..(a.idx() + 1) * k * k];
                let rows: Vec<String> = (0..k)
                    .map(|i| {
                        let cells: Vec<String> = (0..k)
                            .map(|j| base.label(ElementId(row[i * k + j])))
                            .collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
        }
    }

    fn label_parts(&self, a: ElementId, out: &mut Vec<String>) {
        match &self.repr {
            Repr::Product { left, right } => {
                let rn = right.order;
                left.label_parts(ElementId(a.0 / rn), out);
                right.label_parts(ElementId(a.0 % rn), out);
            }
            _ => out.push(self.label(a)),
        }
    }

    /// Parse an element from its label form; the inverse of `label`.
    /// Only needed by tests and diagnostics, so a linear scan is fine.
    pub fn element_by_label(&self, label: &str) -> Option<ElementId> {
        let wanted: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.elements().find(|&a| self.label(a) == wanted)
    }
}

impl fmt::Debug for FiniteStarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteStarRing({}, order {})", self.spec, self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32) -> Arc<FiniteStarRing> {
        FiniteStarRing::zmod(n, DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn zmod_basics() {
        let r = z(6);
        assert_eq!(r.order(), 6);
        assert_eq!(r.one(), ElementId(1));
        assert_eq!(r.star(ElementId(4)), ElementId(4));
        assert!(r.involution_proper());
        // brute-force modular products
        assert_eq!(r.mul(ElementId(2), ElementId(3)), ElementId(0));
        assert_eq!(r.mul(ElementId(4), ElementId(3)), ElementId(0));
        for a in 0..6u32 {
            for b in 0..6u32 {
                assert_eq!(r.mul(ElementId(a), ElementId(b)).0, a * b % 6);
                assert_eq!(r.add(ElementId(a), ElementId(b)).0, (a + b) % 6);
            }
        }
    }

    #[test]
    fn zmod_4_square_of_two() {
        let r = z(4);
        assert_eq!(r.mul(ElementId(2), ElementId(2)), ElementId(0));
    }

    #[test]
    fn zmod_rejects_small_and_oversized() {
        assert!(matches!(
            FiniteStarRing::zmod(1, 2048),
            Err(RingError::ModulusTooSmall(1))
        ));
        assert!(matches!(
            FiniteStarRing::zmod(100, 64),
            Err(RingError::OrderLimit { .. })
        ));
    }

    #[test]
    fn product_componentwise() {
        let r = FiniteStarRing::product(z(2), z(4), 2048).unwrap();
        assert_eq!(r.order(), 8);
        let a = r.element_by_label("(1,0)").unwrap();
        let b = r.element_by_label("(0,2)").unwrap();
        assert_eq!(r.mul(a, b), r.zero());

        let r33 = FiniteStarRing::product(z(3), z(3), 2048).unwrap();
        assert_eq!(r33.order(), 9);
        assert_eq!(r33.label(r33.one()), "(1,1)");
    }

    #[test]
    fn nested_product_flattens_labels() {
        let inner = FiniteStarRing::product(z(2), z(2), 2048).unwrap();
        let r = FiniteStarRing::product(z(2), inner, 2048).unwrap();
        let a = r.element_by_label("(1,0,0)").unwrap();
        let b = r.element_by_label("(0,1,0)").unwrap();
        assert_eq!(r.mul(a, b), r.zero());
        assert_eq!(r.label(r.one()), "(1,1,1)");
    }

    #[test]
    fn matrix_ring_m2_z6_examples() {
        let r =
            FiniteStarRing::matrix_ring(z(6), 2, MatrixInvolution::Transpose, 2048).unwrap();
        assert_eq!(r.order(), 1296);
        assert!(r.involution_proper());
        let a = r.element_by_label("[[0,2],[0,2]]").unwrap();
        let b = r.element_by_label("[[2,0],[2,0]]").unwrap();
        let c = r.element_by_label("[[3,3],[3,3]]").unwrap();
        // aRc* = 0 and bRc* = 0
        for x in r.elements() {
            assert_eq!(r.mul3(a, x, r.star(c)), r.zero());
            assert_eq!(r.mul3(b, x, r.star(c)), r.zero());
        }
        // ab* = 0 yet aRb* != 0
        assert_eq!(r.mul(a, r.star(b)), r.zero());
        assert!(r.elements().any(|x| r.mul3(a, x, r.star(b)) != r.zero()));
    }

    #[test]
    fn matrix_identity_involution_flagged_improper() {
        let r = FiniteStarRing::matrix_ring(z(6), 2, MatrixInvolution::Identity, 2048).unwrap();
        assert!(!r.involution_proper());
        let (x, y) = r.improper_witness().unwrap();
        let lhs = r.star(r.mul(x, y));
        let rhs = r.mul(r.star(y), r.star(x));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn one_by_one_matrix_ring_is_proper() {
        let r = FiniteStarRing::matrix_ring(z(2), 1, MatrixInvolution::Identity, 2048).unwrap();
        assert_eq!(r.order(), 2);
        assert!(r.involution_proper());
        assert_eq!(r.mul(r.one(), r.one()), r.one());
    }

    #[test]
    fn matrix_ring_rejects_noncommutative_base() {
        let m2 = FiniteStarRing::matrix_ring(z(2), 2, MatrixInvolution::Transpose, 2048).unwrap();
        assert!(matches!(
            FiniteStarRing::matrix_ring(m2, 2, MatrixInvolution::Transpose, 1 << 20),
            Err(RingError::NoncommutativeBase)
        ));
    }

    #[test]
    fn transpose_of_matrix_units() {
        let r = FiniteStarRing::matrix_ring(z(2), 2, MatrixInvolution::Transpose, 2048).unwrap();
        let e12 = r.element_by_label("[[0,1],[0,0]]").unwrap();
        let e21 = r.element_by_label("[[0,0],[1,0]]").unwrap();
        assert_eq!(r.star(e12), e21);
        assert_eq!(r.star(r.star(e12)), e12);
    }

    #[test]
    fn spec_round_trip() {
        let spec = RingSpec::Product(
            Box::new(RingSpec::Zmod(2)),
            Box::new(RingSpec::Product(
                Box::new(RingSpec::Zmod(2)),
                Box::new(RingSpec::Zmod(2)),
            )),
        );
        assert_eq!(spec.canonical_text(), "Z2 x Z2 x Z2");
        assert_eq!(spec.order(), 8);
        let ring = spec.build_default().unwrap();
        assert_eq!(ring.order(), 8);
        assert_eq!(ring.spec(), &spec);
    }

    #[test]
    fn characteristic() {
        assert_eq!(z(6).characteristic(), 6);
        let r33 = FiniteStarRing::product(z(3), z(3), 2048).unwrap();
        assert_eq!(r33.characteristic(), 3);
    }
}
