//! Finite posets, bitset subsets, upward/downward closures, and antichains.
//!
//! Everything here is plain finite order theory: carriers are index ranges
//! `0..n`, subsets are 64-bit masks, and posets store their full relation as
//! one mask per element. Values are immutable after construction.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest carrier a [`StateSet`] can index.
pub const MAX_CARRIER: usize = 64;

/// Largest carrier for which subset families are enumerated by filtering all
/// `2^n` masks (up-set/down-set enumeration, antichain expansion).
pub const ENUM_BOUND: usize = 20;

/// A subset of a fixed finite carrier, with bitset semantics.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct StateSet {
    carrier: usize,
    bits: u64,
}

fn check_carrier(carrier: usize) -> Result<()> {
    if carrier > MAX_CARRIER {
        return Err(Error::Capacity {
            what: "StateSet carrier",
            needed: carrier as u128,
            cap: MAX_CARRIER as u128,
        });
    }
    Ok(())
}

fn mask(carrier: usize) -> u64 {
    if carrier == 64 {
        u64::MAX
    } else {
        (1u64 << carrier) - 1
    }
}

impl StateSet {
    pub fn empty(carrier: usize) -> Result<Self> {
        check_carrier(carrier)?;
        Ok(StateSet { carrier, bits: 0 })
    }

    pub fn full(carrier: usize) -> Result<Self> {
        check_carrier(carrier)?;
        Ok(StateSet {
            carrier,
            bits: mask(carrier),
        })
    }

    pub fn singleton(carrier: usize, x: usize) -> Result<Self> {
        check_carrier(carrier)?;
        if x >= carrier {
            return Err(Error::IndexOutOfRange { index: x, carrier });
        }
        Ok(StateSet {
            carrier,
            bits: 1u64 << x,
        })
    }

    pub fn from_bits(carrier: usize, bits: u64) -> Result<Self> {
        check_carrier(carrier)?;
        if bits & !mask(carrier) != 0 {
            return Err(Error::Invalid(format!(
                "bits {bits:#x} exceed carrier of size {carrier}"
            )));
        }
        Ok(StateSet { carrier, bits })
    }

    pub fn from_indices(carrier: usize, indices: &[usize]) -> Result<Self> {
        let mut s = StateSet::empty(carrier)?;
        for &x in indices {
            if x >= carrier {
                return Err(Error::IndexOutOfRange { index: x, carrier });
            }
            s.bits |= 1u64 << x;
        }
        Ok(s)
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.carrier && self.bits >> x & 1 == 1
    }

    pub fn with(&self, x: usize) -> Self {
        debug_assert!(x < self.carrier);
        StateSet {
            carrier: self.carrier,
            bits: self.bits | 1u64 << x,
        }
    }

    /// Panics on carrier mismatch; mixing carriers is a programming error.
    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.carrier, other.carrier, "carrier mismatch in union");
        StateSet {
            carrier: self.carrier,
            bits: self.bits | other.bits,
        }
    }

    pub fn inter(&self, other: &Self) -> Self {
        assert_eq!(self.carrier, other.carrier, "carrier mismatch in inter");
        StateSet {
            carrier: self.carrier,
            bits: self.bits & other.bits,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.bits & !other.bits == 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let carrier = self.carrier;
        (0..carrier).filter(move |&x| self.bits >> x & 1 == 1)
    }
}

/// Canonical ordering: cardinality first, then numeric bitset value.
impl Ord for StateSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.carrier, self.len(), self.bits).cmp(&(other.carrier, other.len(), other.bits))
    }
}

impl PartialOrd for StateSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for x in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite partial order on `0..size`, stored as a full relation.
///
/// Construction validates reflexivity, antisymmetry, and transitivity and
/// rejects invalid input rather than repairing it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePoset {
    size: usize,
    /// `up[x]` is the mask of `{ y | x <= y }`.
    up: Vec<u64>,
    /// `dn[x]` is the mask of `{ y | y <= x }`.
    dn: Vec<u64>,
}

impl FinitePoset {
    pub fn from_leq(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        check_carrier(size)?;
        let mut up = vec![0u64; size];
        let mut dn = vec![0u64; size];
        for x in 0..size {
            for y in 0..size {
                if leq(x, y) {
                    up[x] |= 1 << y;
                    dn[y] |= 1 << x;
                }
            }
        }
        for x in 0..size {
            if up[x] >> x & 1 == 0 {
                return Err(Error::InvalidPoset(format!("not reflexive at {x}")));
            }
            for y in 0..size {
                if x != y && up[x] >> y & 1 == 1 && up[y] >> x & 1 == 1 {
                    return Err(Error::InvalidPoset(format!(
                        "not antisymmetric at {x}, {y}"
                    )));
                }
                if up[x] >> y & 1 == 1 && up[y] & !up[x] != 0 {
                    return Err(Error::InvalidPoset(format!("not transitive at {x}, {y}")));
                }
            }
        }
        Ok(FinitePoset { size, up, dn })
    }

    /// The discrete order: only equal elements are comparable.
    pub fn discrete(size: usize) -> Self {
        FinitePoset::from_leq(size, |x, y| x == y).expect("discrete order is valid")
    }

    /// The total order `0 < 1 < ... < size-1`.
    pub fn chain(size: usize) -> Self {
        FinitePoset::from_leq(size, |x, y| x <= y).expect("chain is valid")
    }

    /// One bottom below two incomparable tops: `0 < 1`, `0 < 2`.
    pub fn vee() -> Self {
        FinitePoset::from_leq(3, |x, y| x == y || (x == 0 && y > 0)).expect("valid")
    }

    /// Two incomparable bottoms below one top: `0 < 2`, `1 < 2`.
    pub fn wedge() -> Self {
        FinitePoset::from_leq(3, |x, y| x == y || (x < 2 && y == 2)).expect("valid")
    }

    /// Bottom `0`, incomparable middles `1`, `2`, top `3`.
    pub fn diamond() -> Self {
        FinitePoset::from_leq(4, |x, y| x == y || (x == 0 && y > 0) || (x > 0 && y == 3))
            .expect("valid")
    }

    /// The subsets of `0..n` ordered by inclusion. Needs `2^n <= 64`.
    pub fn powerset(n: usize) -> Result<Self> {
        if n > 6 {
            return Err(Error::Capacity {
                what: "powerset poset base",
                needed: n as u128,
                cap: 6,
            });
        }
        FinitePoset::from_leq(1 << n, |x, y| x & !y == 0)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        x < self.size && y < self.size && self.up[x] >> y & 1 == 1
    }

    fn check_set(&self, p: &StateSet) -> Result<()> {
        if p.carrier() != self.size {
            return Err(Error::CarrierMismatch {
                expected: self.size,
                got: p.carrier(),
            });
        }
        Ok(())
    }

    /// `{ x | exists y in p, y <= x }`.
    pub fn up_closure(&self, p: &StateSet) -> Result<StateSet> {
        self.check_set(p)?;
        let mut bits = 0u64;
        for y in p.iter() {
            bits |= self.up[y];
        }
        StateSet::from_bits(self.size, bits)
    }

    /// `{ x | exists y in p, x <= y }`.
    pub fn down_closure(&self, p: &StateSet) -> Result<StateSet> {
        self.check_set(p)?;
        let mut bits = 0u64;
        for y in p.iter() {
            bits |= self.dn[y];
        }
        StateSet::from_bits(self.size, bits)
    }

    pub fn is_up_closed(&self, p: &StateSet) -> Result<bool> {
        Ok(self.up_closure(p)? == *p)
    }

    pub fn is_down_closed(&self, p: &StateSet) -> Result<bool> {
        Ok(self.down_closure(p)? == *p)
    }

    /// All up-closed subsets, in ascending mask order.
    pub fn enumerate_up_sets(&self) -> Result<Vec<StateSet>> {
        self.enumerate_closed(&self.up)
    }

    /// All down-closed subsets, in ascending mask order.
    pub fn enumerate_down_sets(&self) -> Result<Vec<StateSet>> {
        self.enumerate_closed(&self.dn)
    }

    fn enumerate_closed(&self, rows: &[u64]) -> Result<Vec<StateSet>> {
        if self.size > ENUM_BOUND {
            return Err(Error::Capacity {
                what: "closed-set enumeration",
                needed: self.size as u128,
                cap: ENUM_BOUND as u128,
            });
        }
        let m = mask(self.size);
        let mut out = Vec::new();
        for bits in 0..=m {
            let mut closure = 0u64;
            for x in 0..self.size {
                if bits >> x & 1 == 1 {
                    closure |= rows[x];
                }
            }
            if closure == bits {
                out.push(StateSet { carrier: self.size, bits });
            }
            if bits == m {
                break;
            }
        }
        Ok(out)
    }

    /// Every labeled poset on `0..n`, by brute-force filtering. Test and
    /// harness support; keep `n` tiny.
    pub fn all_posets(n: usize) -> Vec<FinitePoset> {
        assert!(n <= 4, "poset enumeration is for tiny carriers");
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
            .collect();
        let mut out = Vec::new();
        for choice in 0u32..1 << pairs.len() {
            let rel: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| choice >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            if let Ok(p) =
                FinitePoset::from_leq(n, |x, y| x == y || rel.contains(&(x, y)))
            {
                out.push(p);
            }
        }
        out
    }

    /// Every monotone map between two posets (tables enumerated brute-force).
    pub fn monotone_maps(dom: &FinitePoset, cod: &FinitePoset) -> Vec<MonotoneMap> {
        let n = dom.size();
        let m = cod.size();
        if n == 0 {
            return vec![MonotoneMap::new(dom.clone(), cod.clone(), vec![]).expect("empty map")];
        }
        let mut out = Vec::new();
        let total = (m as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut table = Vec::with_capacity(n);
            for _ in 0..n {
                table.push((c % m as u64) as usize);
                c /= m as u64;
            }
            if let Ok(f) = MonotoneMap::new(dom.clone(), cod.clone(), table) {
                out.push(f);
            }
        }
        out
    }
}

/// An order-preserving map between two finite posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneMap {
    domain: FinitePoset,
    codomain: FinitePoset,
    table: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(domain: FinitePoset, codomain: FinitePoset, table: Vec<usize>) -> Result<Self> {
        if table.len() != domain.size() {
            return Err(Error::CarrierMismatch {
                expected: domain.size(),
                got: table.len(),
            });
        }
        for &v in &table {
            if v >= codomain.size() {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    carrier: codomain.size(),
                });
            }
        }
        for x in 0..domain.size() {
            for y in 0..domain.size() {
                if domain.leq(x, y) && !codomain.leq(table[x], table[y]) {
                    return Err(Error::NotMonotone { x, y });
                }
            }
        }
        Ok(MonotoneMap {
            domain,
            codomain,
            table,
        })
    }

    pub fn domain(&self) -> &FinitePoset {
        &self.domain
    }

    pub fn codomain(&self) -> &FinitePoset {
        &self.codomain
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Direct image of a subset of the domain.
    pub fn image(&self, p: &StateSet) -> Result<StateSet> {
        if p.carrier() != self.domain.size() {
            return Err(Error::CarrierMismatch {
                expected: self.domain.size(),
                got: p.carrier(),
            });
        }
        let mut out = StateSet::empty(self.codomain.size())?;
        for x in p.iter() {
            out = out.with(self.table[x]);
        }
        Ok(out)
    }
}

/// A canonical antichain: pairwise `⊆`-incomparable sets, sorted by
/// (cardinality, numeric bitset value).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Antichain {
    sets: Vec<StateSet>,
}

impl Antichain {
    /// The empty antichain (denotes the empty family).
    pub fn empty() -> Self {
        Antichain { sets: Vec::new() }
    }

    /// Builds an antichain from already minimal, canonically sorted members.
    pub fn from_canonical(sets: Vec<StateSet>) -> Result<Self> {
        let rebuilt = minimal_elements(&sets);
        if rebuilt.sets != sets {
            return Err(Error::Invalid(
                "sets are not a canonical antichain".to_string(),
            ));
        }
        Ok(rebuilt)
    }

    pub fn sets(&self) -> &[StateSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &StateSet> {
        self.sets.iter()
    }
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Keeps exactly the `⊆`-minimal members of a family, canonically sorted.
pub fn minimal_elements(family: &[StateSet]) -> Antichain {
    let mut sets: Vec<StateSet> = Vec::new();
    for s in family {
        if sets.contains(s) {
            continue;
        }
        sets.push(*s);
    }
    let mut minimal: Vec<StateSet> = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let dominated = sets
            .iter()
            .enumerate()
            .any(|(j, t)| j != i && t.is_subset_of(s) && t != s);
        if !dominated {
            minimal.push(*s);
        }
    }
    minimal.sort();
    Antichain { sets: minimal }
}

/// All supersets (within the carrier) of members of `a`: the `⊆`-upward
/// closure of the antichain, in ascending mask order.
pub fn expand_antichain(carrier: usize, a: &Antichain) -> Result<Vec<StateSet>> {
    if carrier > ENUM_BOUND {
        return Err(Error::Capacity {
            what: "antichain expansion",
            needed: carrier as u128,
            cap: ENUM_BOUND as u128,
        });
    }
    for s in a.iter() {
        if s.carrier() != carrier {
            return Err(Error::CarrierMismatch {
                expected: carrier,
                got: s.carrier(),
            });
        }
    }
    let m = mask(carrier);
    let mut out = Vec::new();
    if a.is_empty() {
        return Ok(out);
    }
    for bits in 0..=m {
        if a.iter().any(|s| s.bits() & !bits == 0) {
            out.push(StateSet { carrier, bits });
        }
        if bits == m {
            break;
        }
    }
    Ok(out)
}

/// One functor layer over a base poset: the enumerated carrier of up-sets
/// (ordered by reversed inclusion) or down-sets (ordered by inclusion),
/// together with the induced poset on them.
#[derive(Clone, Debug)]
pub struct Layer {
    pub base_size: usize,
    pub elems: Vec<StateSet>,
    pub poset: FinitePoset,
    index: HashMap<u64, usize>,
}

impl Layer {
    /// Up-sets of `base`, ordered by reversed inclusion.
    pub fn up(base: &FinitePoset) -> Result<Layer> {
        let elems = base.enumerate_up_sets()?;
        Layer::build(base.size(), elems, true)
    }

    /// Down-sets of `base`, ordered by inclusion.
    pub fn dn(base: &FinitePoset) -> Result<Layer> {
        let elems = base.enumerate_down_sets()?;
        Layer::build(base.size(), elems, false)
    }

    fn build(base_size: usize, elems: Vec<StateSet>, reversed: bool) -> Result<Layer> {
        check_carrier(elems.len())?;
        let poset = FinitePoset::from_leq(elems.len(), |i, j| {
            if reversed {
                elems[j].is_subset_of(&elems[i])
            } else {
                elems[i].is_subset_of(&elems[j])
            }
        })?;
        let index = elems.iter().enumerate().map(|(i, s)| (s.bits(), i)).collect();
        Ok(Layer {
            base_size,
            elems,
            poset,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn index_of(&self, s: &StateSet) -> Option<usize> {
        if s.carrier() != self.base_size {
            return None;
        }
        self.index.get(&s.bits()).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(carrier: usize, xs: &[usize]) -> StateSet {
        StateSet::from_indices(carrier, xs).unwrap()
    }

    // Independent oracle: direct enumeration of the closure definition.
    fn up_closure_oracle(p: &FinitePoset, s: &StateSet) -> StateSet {
        let mut out = StateSet::empty(p.size()).unwrap();
        for x in 0..p.size() {
            if s.iter().any(|y| p.leq(y, x)) {
                out = out.with(x);
            }
        }
        out
    }

    #[test]
    fn up_closure_discrete_is_identity() {
        let p = FinitePoset::discrete(3);
        let s = set(3, &[1]);
        assert_eq!(p.up_closure(&s).unwrap(), s);
    }

    #[test]
    fn up_closure_chain() {
        let p = FinitePoset::chain(3);
        // Frozen from the enumeration oracle.
        assert_eq!(p.up_closure(&set(3, &[1])).unwrap(), set(3, &[1, 2]));
        assert_eq!(
            p.up_closure(&set(3, &[1])).unwrap(),
            up_closure_oracle(&p, &set(3, &[1]))
        );
    }

    #[test]
    fn up_closure_empty() {
        let p = FinitePoset::diamond();
        assert_eq!(
            p.up_closure(&StateSet::empty(4).unwrap()).unwrap(),
            StateSet::empty(4).unwrap()
        );
    }

    #[test]
    fn down_closure_examples() {
        let d = FinitePoset::discrete(2);
        assert_eq!(d.down_closure(&set(2, &[0])).unwrap(), set(2, &[0]));
        let c = FinitePoset::chain(3);
        assert_eq!(c.down_closure(&set(3, &[1])).unwrap(), set(3, &[0, 1]));
        let full = StateSet::full(3).unwrap();
        assert_eq!(c.down_closure(&full).unwrap(), full);
    }

    #[test]
    fn closure_carrier_mismatch_is_domain_error() {
        let p = FinitePoset::chain(3);
        let s = set(2, &[0]);
        assert!(matches!(
            p.up_closure(&s),
            Err(Error::CarrierMismatch { .. })
        ));
    }

    #[test]
    fn is_up_closed_examples() {
        let c = FinitePoset::chain(2);
        assert!(c.is_up_closed(&set(2, &[1])).unwrap());
        assert!(!c.is_up_closed(&set(2, &[0])).unwrap());
        assert_eq!(c.up_closure(&set(2, &[0])).unwrap(), set(2, &[0, 1]));
        let empty = StateSet::empty(2).unwrap();
        assert!(c.is_up_closed(&empty).unwrap());
        assert!(c.is_down_closed(&empty).unwrap());
    }

    #[test]
    fn invalid_posets_rejected() {
        assert!(FinitePoset::from_leq(2, |_, _| false).is_err()); // not reflexive
        assert!(FinitePoset::from_leq(2, |_, _| true).is_err()); // not antisymmetric
        // 0<=1, 1<=2 but not 0<=2
        assert!(
            FinitePoset::from_leq(3, |x, y| x == y || (x == 0 && y == 1) || (x == 1 && y == 2))
                .is_err()
        );
    }

    #[test]
    fn minimal_elements_examples() {
        let a = minimal_elements(&[set(4, &[1]), set(4, &[1, 2])]);
        assert_eq!(a.sets(), &[set(4, &[1])]);

        let b = minimal_elements(&[set(4, &[1, 2]), set(4, &[2, 3])]);
        assert_eq!(b.sets(), &[set(4, &[1, 2]), set(4, &[2, 3])]);

        assert!(minimal_elements(&[]).is_empty());

        // idempotent
        let again = minimal_elements(b.sets());
        assert_eq!(again, b);
    }

    #[test]
    fn expand_antichain_examples() {
        let a = minimal_elements(&[set(2, &[0])]);
        assert_eq!(
            expand_antichain(2, &a).unwrap(),
            vec![set(2, &[0]), set(2, &[0, 1])]
        );

        assert!(expand_antichain(3, &Antichain::empty()).unwrap().is_empty());

        let b = minimal_elements(&[StateSet::empty(1).unwrap()]);
        assert_eq!(
            expand_antichain(1, &b).unwrap(),
            vec![StateSet::empty(1).unwrap(), set(1, &[0])]
        );
    }

    #[test]
    fn minimal_of_expansion_is_identity() {
        let a = minimal_elements(&[set(3, &[0]), set(3, &[1, 2])]);
        let expanded = expand_antichain(3, &a).unwrap();
        assert_eq!(minimal_elements(&expanded), a);
    }

    #[test]
    fn enumerate_up_sets_examples() {
        let d = FinitePoset::discrete(2);
        assert_eq!(d.enumerate_up_sets().unwrap().len(), 4);
        assert_eq!(d.enumerate_down_sets().unwrap().len(), 4);

        let c = FinitePoset::chain(2);
        let ups = c.enumerate_up_sets().unwrap();
        assert_eq!(ups, vec![set(2, &[]), set(2, &[1]), set(2, &[0, 1])]);

        let one = FinitePoset::discrete(1);
        assert_eq!(one.enumerate_up_sets().unwrap().len(), 2);
    }

    #[test]
    fn enumeration_bound_is_capacity_error() {
        let p = FinitePoset::discrete(21);
        assert!(matches!(
            p.enumerate_up_sets(),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn all_posets_counts() {
        assert_eq!(FinitePoset::all_posets(1).len(), 1);
        assert_eq!(FinitePoset::all_posets(2).len(), 3);
        assert_eq!(FinitePoset::all_posets(3).len(), 19);
    }

    #[test]
    fn monotone_map_rejects_order_violation() {
        let c = FinitePoset::chain(2);
        let d = FinitePoset::chain(2);
        assert!(MonotoneMap::new(c.clone(), d.clone(), vec![1, 0]).is_err());
        assert!(MonotoneMap::new(c, d, vec![0, 1]).is_ok());
    }

    #[test]
    fn layer_orders() {
        let c = FinitePoset::chain(2);
        let up = Layer::up(&c).unwrap();
        // Up(chain2) has 3 elements ordered by reversed inclusion.
        assert_eq!(up.len(), 3);
        let full = up.index_of(&set(2, &[0, 1])).unwrap();
        let top = up.index_of(&set(2, &[1])).unwrap();
        assert!(up.poset.leq(full, top));
        assert!(!up.poset.leq(top, full));

        let dn = Layer::dn(&c).unwrap();
        let e = dn.index_of(&set(2, &[])).unwrap();
        let z = dn.index_of(&set(2, &[0])).unwrap();
        assert!(dn.poset.leq(e, z));
    }
}
