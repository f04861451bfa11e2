//! Monads on finite carriers: powerset, upset/downset, their distributive
//! law, the composite monad behind alternating automata, and the
//! law-checking harness.

pub mod alt;
pub mod candidates;
pub mod laws;
pub mod updown;

use std::fmt;

use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::order::StateSet;

/// An arrow of the category of finite sets: a total function between two
/// index ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFunction {
    domain: usize,
    codomain: usize,
    table: Vec<usize>,
}

impl FiniteFunction {
    pub fn new(domain: usize, codomain: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != domain {
            return Err(Error::CarrierMismatch {
                expected: domain,
                got: table.len(),
            });
        }
        for &v in &table {
            if v >= codomain {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    carrier: codomain,
                });
            }
        }
        Ok(FiniteFunction {
            domain,
            codomain,
            table,
        })
    }

    pub fn identity(n: usize) -> Self {
        FiniteFunction {
            domain: n,
            codomain: n,
            table: (0..n).collect(),
        }
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }
}

/// Direct image of a subset: the powerset functor on arrows.
pub fn pow_map(f: &FiniteFunction, s: &StateSet) -> Result<StateSet> {
    if s.carrier() != f.domain() {
        return Err(Error::CarrierMismatch {
            expected: f.domain(),
            got: s.carrier(),
        });
    }
    let mut out = StateSet::empty(f.codomain())?;
    for x in s.iter() {
        out = out.with(f.apply(x));
    }
    Ok(out)
}

/// `x |-> {x}`.
pub fn pow_unit(carrier: usize, x: usize) -> Result<StateSet> {
    StateSet::singleton(carrier, x)
}

/// Union of a collection of same-carrier subsets.
pub fn pow_mult(carrier: usize, sets: &[StateSet]) -> Result<StateSet> {
    let mut out = StateSet::empty(carrier)?;
    for s in sets {
        if s.carrier() != carrier {
            return Err(Error::CarrierMismatch {
                expected: carrier,
                got: s.carrier(),
            });
        }
        out = out.union(s);
    }
    Ok(out)
}

/// A monad on finite sets, presented concretely: carriers are index ranges
/// and `T(X)` is enumerable (up to a capacity bound) for small `X`.
///
/// `mult` takes its outer argument over an explicit decode table: the
/// element `e` lives over the carrier `0..decode.len()` and `decode[i]` is
/// the `T`-element (over `0..inner`) that index `i` stands for. Passing the
/// full enumeration of `T(inner)` as `decode` gives the usual
/// multiplication; passing a sampled list lets the harness check laws on
/// layers too large to enumerate.
pub trait SetMonad {
    type Elem: Clone + Eq + std::hash::Hash + fmt::Display;

    fn name(&self) -> &'static str;

    /// All elements of `T(0..carrier)`, in a fixed deterministic order.
    fn enumerate(&self, carrier: usize) -> Result<Vec<Self::Elem>>;

    fn unit(&self, carrier: usize, x: usize) -> Result<Self::Elem>;

    fn map(&self, f: &FiniteFunction, e: &Self::Elem) -> Result<Self::Elem>;

    fn mult(&self, inner: usize, decode: &[Self::Elem], e: &Self::Elem) -> Result<Self::Elem>;

    /// A random element of `T(0..carrier)`, for sampled law checks.
    fn sample(&self, carrier: usize, rng: &mut ChaCha8Rng) -> Self::Elem;
}

/// The powerset monad on finite sets.
pub struct Powerset;

impl SetMonad for Powerset {
    type Elem = StateSet;

    fn name(&self) -> &'static str {
        "powerset"
    }

    fn enumerate(&self, carrier: usize) -> Result<Vec<StateSet>> {
        if carrier > crate::order::ENUM_BOUND {
            return Err(Error::Capacity {
                what: "powerset enumeration",
                needed: carrier as u128,
                cap: crate::order::ENUM_BOUND as u128,
            });
        }
        (0..1u64 << carrier)
            .map(|bits| StateSet::from_bits(carrier, bits))
            .collect()
    }

    fn unit(&self, carrier: usize, x: usize) -> Result<StateSet> {
        pow_unit(carrier, x)
    }

    fn map(&self, f: &FiniteFunction, e: &StateSet) -> Result<StateSet> {
        pow_map(f, e)
    }

    fn mult(&self, inner: usize, decode: &[StateSet], e: &StateSet) -> Result<StateSet> {
        if e.carrier() != decode.len() {
            return Err(Error::CarrierMismatch {
                expected: decode.len(),
                got: e.carrier(),
            });
        }
        let members: Vec<StateSet> = e.iter().map(|i| decode[i]).collect();
        pow_mult(inner, &members)
    }

    fn sample(&self, carrier: usize, rng: &mut ChaCha8Rng) -> StateSet {
        use rand::Rng;
        let bits = if carrier == 0 {
            0
        } else {
            rng.gen::<u64>() & if carrier == 64 { u64::MAX } else { (1 << carrier) - 1 }
        };
        StateSet::from_bits(carrier, bits).expect("masked bits fit the carrier")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(carrier: usize, xs: &[usize]) -> StateSet {
        StateSet::from_indices(carrier, xs).unwrap()
    }

    #[test]
    fn pow_map_examples() {
        let id = FiniteFunction::identity(3);
        let s = set(3, &[0, 2]);
        assert_eq!(pow_map(&id, &s).unwrap(), s);

        let constant = FiniteFunction::new(2, 2, vec![0, 0]).unwrap();
        assert_eq!(
            pow_map(&constant, &set(2, &[0, 1])).unwrap(),
            set(2, &[0])
        );

        let swap = FiniteFunction::new(2, 2, vec![1, 0]).unwrap();
        assert_eq!(pow_map(&swap, &set(2, &[0])).unwrap(), set(2, &[1]));
    }

    #[test]
    fn pow_unit_and_mult() {
        assert_eq!(pow_unit(3, 2).unwrap(), set(3, &[2]));
        assert_eq!(
            pow_mult(2, &[set(2, &[0]), set(2, &[1])]).unwrap(),
            set(2, &[0, 1])
        );
        assert_eq!(pow_mult(3, &[]).unwrap(), set(3, &[]));
    }

    #[test]
    fn powerset_functor_laws() {
        let p = Powerset;
        let f = FiniteFunction::new(3, 2, vec![0, 1, 1]).unwrap();
        let g = FiniteFunction::new(2, 2, vec![1, 0]).unwrap();
        let gf = FiniteFunction::new(3, 2, vec![g.apply(0), g.apply(1), g.apply(1)]).unwrap();
        for e in p.enumerate(3).unwrap() {
            let via_comp = p.map(&gf, &e).unwrap();
            let step = p.map(&g, &p.map(&f, &e).unwrap()).unwrap();
            assert_eq!(via_comp, step);
            assert_eq!(p.map(&FiniteFunction::identity(3), &e).unwrap(), e);
        }
    }
}
