//! The monad of up-closed families of subsets, represented by antichains of
//! minimal sets. Its multiplication is computed two ways: directly by
//! minimal unions over fork choices, and by the staged composite through
//! the upset/downset distributive law; the two must agree.

use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monad::{FiniteFunction, SetMonad};
use crate::order::{
    expand_antichain, minimal_elements, Antichain, FinitePoset, Layer, StateSet,
};

use super::updown::{image_then_close, DistCtx};

/// An up-closed family of subsets of `0..carrier`, stored as its antichain
/// of minimal members ("forks").
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AltElement {
    carrier: usize,
    forks: Antichain,
}

impl AltElement {
    pub fn new(carrier: usize, forks: Antichain) -> Result<Self> {
        for s in forks.iter() {
            if s.carrier() != carrier {
                return Err(Error::CarrierMismatch {
                    expected: carrier,
                    got: s.carrier(),
                });
            }
        }
        Ok(AltElement { carrier, forks })
    }

    /// Builds from arbitrary family members, keeping the minimal ones.
    pub fn from_sets(carrier: usize, sets: &[StateSet]) -> Result<Self> {
        AltElement::new(carrier, minimal_elements(sets))
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn forks(&self) -> &Antichain {
        &self.forks
    }

    /// The full up-closed family this antichain denotes.
    pub fn expand(&self) -> Result<Vec<StateSet>> {
        expand_antichain(self.carrier, &self.forks)
    }
}

impl fmt::Display for AltElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.forks, f)
    }
}

impl fmt::Debug for AltElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Encodes the expanded family as a subset of the `2^carrier` subset masks.
pub fn family_bits(e: &AltElement) -> Result<StateSet> {
    let mut out = StateSet::empty(1usize << e.carrier)?;
    for s in e.expand()? {
        out = out.with(s.bits() as usize);
    }
    Ok(out)
}

/// Inverse of [`family_bits`]: recovers the antichain from subset-mask bits.
pub fn from_family_bits(carrier: usize, bits: &StateSet) -> Result<AltElement> {
    let members: Vec<StateSet> = bits
        .iter()
        .map(|m| StateSet::from_bits(carrier, m as u64))
        .collect::<Result<_>>()?;
    AltElement::from_sets(carrier, &members)
}

/// All elements over `0..carrier`, in ascending family-mask order. The
/// counts are the Dedekind numbers: 2, 3, 6, 20, 168 for carriers 0..=4.
pub fn enumerate_alt(carrier: usize) -> Result<Vec<AltElement>> {
    let px = FinitePoset::powerset(carrier).map_err(|_| Error::Capacity {
        what: "alternation-layer enumeration",
        needed: carrier as u128,
        cap: 4,
    })?;
    let families = px.enumerate_up_sets()?;
    families
        .iter()
        .map(|f| from_family_bits(carrier, f))
        .collect()
}

/// `x |-> {{x}}`.
pub fn alt_unit(carrier: usize, x: usize) -> Result<AltElement> {
    AltElement::from_sets(carrier, &[StateSet::singleton(carrier, x)?])
}

/// Functor action: minimal images of the forks.
pub fn alt_map(f: &FiniteFunction, e: &AltElement) -> Result<AltElement> {
    if e.carrier != f.domain() {
        return Err(Error::CarrierMismatch {
            expected: f.domain(),
            got: e.carrier,
        });
    }
    let images: Vec<StateSet> = e
        .forks
        .iter()
        .map(|s| crate::monad::pow_map(f, s))
        .collect::<Result<_>>()?;
    AltElement::from_sets(f.codomain(), &images)
}

/// Kleisli extension: substitutes `decode[q]` for each state `q` and keeps
/// the minimal unions over one fork choice per state.
///
/// Partial unions that already dominate another partial are pruned as the
/// product is built; a dominated partial can only complete to a dominated
/// union, so this is lossless.
pub fn alt_bind(out_carrier: usize, decode: &[AltElement], e: &AltElement) -> Result<AltElement> {
    if e.carrier != decode.len() {
        return Err(Error::CarrierMismatch {
            expected: decode.len(),
            got: e.carrier,
        });
    }
    for d in decode {
        if d.carrier != out_carrier {
            return Err(Error::CarrierMismatch {
                expected: out_carrier,
                got: d.carrier,
            });
        }
    }
    let mut collected: Vec<StateSet> = Vec::new();
    for fork in e.forks.iter() {
        let mut partials = vec![StateSet::empty(out_carrier)?];
        for q in fork.iter() {
            let mut next = Vec::new();
            for p in &partials {
                for u in decode[q].forks.iter() {
                    next.push(p.union(u));
                }
            }
            partials = minimal_elements(&next).sets().to_vec();
            if partials.is_empty() {
                break;
            }
        }
        collected.extend(partials);
    }
    AltElement::from_sets(out_carrier, &collected)
}

/// Multiplication: flattens an element over the enumerated layer
/// `0..|Alt(0..inner)|` down to `0..inner`.
pub fn alt_mult(inner: usize, e: &AltElement) -> Result<AltElement> {
    let decode = enumerate_alt(inner)?;
    alt_bind(inner, &decode, e)
}

/// The same multiplication computed through the staged composite: expand,
/// reinterpret members as down-sets of the upset layer, distribute, then
/// collapse the two remaining layers by unions. Only feasible for very
/// small `inner`; agreement with [`alt_mult`] is what makes the composite a
/// monad structure.
pub fn composite_mult_via_pipeline(inner: usize, e: &AltElement) -> Result<AltElement> {
    let alts = enumerate_alt(inner)?;
    if e.carrier != alts.len() {
        return Err(Error::CarrierMismatch {
            expected: alts.len(),
            got: e.carrier,
        });
    }
    let px = FinitePoset::powerset(inner)?; // index i is the subset with mask i
    let ctx = DistCtx::new(&px)?; // up: families (Alt layer); dn: down-closed families
    let l_dn_up = Layer::dn(&ctx.up.poset)?;
    let l_up_dn = Layer::up(&ctx.dn.poset)?;

    // Layer index of each enumerated element's family bits.
    let conv: Vec<usize> = alts
        .iter()
        .map(|a| {
            ctx.up
                .index_of(&family_bits(a)?)
                .ok_or(Error::Invalid("family bits missing from layer".to_string()))
        })
        .collect::<Result<_>>()?;

    // Each expanded member, a discrete set of layer elements, becomes a
    // down-set of the upset layer; the family of those is closed upward.
    let mut fam = StateSet::empty(l_dn_up.len())?;
    for s in e.expand()? {
        let mut members = StateSet::empty(ctx.up.len())?;
        for i in s.iter() {
            members = members.with(conv[i]);
        }
        let closed = ctx.up.poset.down_closure(&members)?;
        let idx = l_dn_up
            .index_of(&closed)
            .ok_or(Error::Invalid("down-closure missing from layer".to_string()))?;
        fam = fam.with(idx);
    }
    let fam = l_dn_up.poset.up_closure(&fam)?;

    // Distribute memberwise, then close the image upward.
    let mut dist_table = Vec::with_capacity(l_dn_up.len());
    for d in &l_dn_up.elems {
        let image = ctx.dist(d)?;
        dist_table.push(l_up_dn.index_of(&image).ok_or(Error::Invalid(
            "distributed family missing from layer".to_string(),
        ))?);
    }
    let distributed = image_then_close(&dist_table, &l_up_dn.poset, &fam, true)?;

    // Collapse: union of upset-layer members, then union inside each
    // down-closed family, closed upward in the subset order.
    let mut upsets = StateSet::empty(ctx.dn.len())?;
    for k in distributed.iter() {
        upsets = upsets.union(&l_up_dn.elems[k]);
    }
    let mut union_table = Vec::with_capacity(ctx.dn.len());
    for d in &ctx.dn.elems {
        let mut bits = 0u64;
        for m in d.iter() {
            bits |= m as u64;
        }
        union_table.push(bits as usize);
    }
    let family = image_then_close(&union_table, &px, &upsets, true)?;
    from_family_bits(inner, &family)
}

/// [`SetMonad`] instance for the law harness.
pub struct AltMonad;

impl SetMonad for AltMonad {
    type Elem = AltElement;

    fn name(&self) -> &'static str {
        "alt"
    }

    fn enumerate(&self, carrier: usize) -> Result<Vec<AltElement>> {
        enumerate_alt(carrier)
    }

    fn unit(&self, carrier: usize, x: usize) -> Result<AltElement> {
        alt_unit(carrier, x)
    }

    fn map(&self, f: &FiniteFunction, e: &AltElement) -> Result<AltElement> {
        alt_map(f, e)
    }

    fn mult(&self, inner: usize, decode: &[AltElement], e: &AltElement) -> Result<AltElement> {
        alt_bind(inner, decode, e)
    }

    fn sample(&self, carrier: usize, rng: &mut ChaCha8Rng) -> AltElement {
        let k = rng.gen_range(0..=4usize);
        let mut forks = Vec::with_capacity(k);
        for _ in 0..k {
            let bits = if carrier == 0 {
                0
            } else {
                rng.gen::<u64>() & ((1u64 << carrier) - 1)
            };
            forks.push(StateSet::from_bits(carrier, bits).expect("masked bits fit"));
        }
        AltElement::from_sets(carrier, &forks).expect("carriers match")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(carrier: usize, xs: &[usize]) -> StateSet {
        StateSet::from_indices(carrier, xs).unwrap()
    }

    fn alt(carrier: usize, forks: &[&[usize]]) -> AltElement {
        let sets: Vec<StateSet> = forks.iter().map(|f| set(carrier, f)).collect();
        AltElement::from_sets(carrier, &sets).unwrap()
    }

    #[test]
    fn layer_sizes_are_dedekind_numbers() {
        for (n, count) in [(0, 2), (1, 3), (2, 6), (3, 20), (4, 168)] {
            assert_eq!(enumerate_alt(n).unwrap().len(), count, "carrier {n}");
        }
        assert!(matches!(enumerate_alt(5), Err(Error::Capacity { .. })));
    }

    #[test]
    fn unit_is_double_singleton() {
        let e = alt_unit(3, 1).unwrap();
        assert_eq!(e, alt(3, &[&[1]]));
        assert_eq!(e.to_string(), "{{1}}");
    }

    #[test]
    fn map_keeps_minimal_images() {
        // 0,1 |-> 0 collapses the forks {0} and {1}.
        let f = FiniteFunction::new(2, 2, vec![0, 0]).unwrap();
        let e = alt(2, &[&[0], &[1]]);
        assert_eq!(alt_map(&f, &e).unwrap(), alt(2, &[&[0]]));
    }

    #[test]
    fn family_bits_round_trip() {
        for e in enumerate_alt(3).unwrap() {
            let bits = family_bits(&e).unwrap();
            assert_eq!(from_family_bits(3, &bits).unwrap(), e);
        }
    }

    #[test]
    fn bind_substitutes_minimal_unions() {
        // e = {{0,1}} over two inner elements; decode picks disjunctions.
        let e = alt(2, &[&[0, 1]]);
        let decode = [alt(3, &[&[0], &[1]]), alt(3, &[&[2]])];
        // choices: {0}∪{2} and {1}∪{2}
        assert_eq!(
            alt_bind(3, &decode, &e).unwrap(),
            alt(3, &[&[0, 2], &[1, 2]])
        );

        // empty family anywhere in a fork kills the fork
        let decode2 = [alt(3, &[]), alt(3, &[&[2]])];
        assert_eq!(alt_bind(3, &decode2, &e).unwrap(), alt(3, &[]));

        // empty fork accepts everything
        let top = alt(2, &[&[]]);
        assert_eq!(alt_bind(3, &decode, &top).unwrap(), alt(3, &[&[]]));
    }

    #[test]
    fn mult_agrees_with_pipeline_exhaustively_on_one_state() {
        let layer = enumerate_alt(1).unwrap();
        let outer = enumerate_alt(layer.len()).unwrap();
        assert_eq!(outer.len(), 20);
        for e in &outer {
            assert_eq!(
                alt_mult(1, e).unwrap(),
                composite_mult_via_pipeline(1, e).unwrap(),
                "at {e}"
            );
        }
    }

    #[test]
    fn pipeline_rejects_oversized_inner_carrier() {
        // the staged pipeline outgrows the layer bounds at three states
        let e = alt_unit(20, 0).unwrap();
        assert!(matches!(
            composite_mult_via_pipeline(3, &e),
            Err(Error::Capacity { .. })
        ));
    }
}
