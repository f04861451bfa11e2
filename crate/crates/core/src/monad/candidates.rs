//! Rejected candidate structure on plain families of subsets.
//!
//! `cnf_exact` (members hit exactly once) is not even natural, and
//! `cnf_atleast` (members hit at least once) is natural but the
//! multiplication it induces on double families breaks the left unit law.
//! Both live here so the law harness can demonstrate the failures.

use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monad::{FiniteFunction, SetMonad};
use crate::order::StateSet;

fn union_of(carrier: usize, family: &[StateSet]) -> Result<StateSet> {
    let mut u = StateSet::empty(carrier)?;
    for s in family {
        if s.carrier() != carrier {
            return Err(Error::CarrierMismatch {
                expected: carrier,
                got: s.carrier(),
            });
        }
        u = u.union(s);
    }
    Ok(u)
}

fn cnf(carrier: usize, family: &[StateSet], exact: bool) -> Result<Vec<StateSet>> {
    let u = union_of(carrier, family)?;
    let mut out = Vec::new();
    // all submasks of the union, including the empty one
    let mut sub = u.bits();
    loop {
        let v = StateSet::from_bits(carrier, sub)?;
        let ok = family.iter().all(|s| {
            let hits = (s.bits() & sub).count_ones();
            if exact {
                hits == 1
            } else {
                hits >= 1
            }
        });
        if ok {
            out.push(v);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & u.bits();
    }
    out.sort();
    Ok(out)
}

/// Subsets of the union hitting every member exactly once.
pub fn cnf_exact(carrier: usize, family: &[StateSet]) -> Result<Vec<StateSet>> {
    cnf(carrier, family, true)
}

/// Subsets of the union hitting every member at least once.
pub fn cnf_atleast(carrier: usize, family: &[StateSet]) -> Result<Vec<StateSet>> {
    cnf(carrier, family, false)
}

/// Searches exhaustively (all functions and families on carriers up to
/// `max`) for a naturality failure of [`cnf_exact`]; returns the first one.
pub fn find_cnf_exact_naturality_witness(max: usize) -> Result<Option<crate::monad::laws::LawReport>> {
    for n in 0..=max {
        for m in 0..=max {
            let report =
                crate::monad::laws::check_family_naturality("cnf_exact", &cnf_exact, n, m)?;
            if !report.is_pass() {
                return Ok(Some(report));
            }
        }
    }
    Ok(None)
}

/// A plain finite family of subsets, in canonical sorted order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    carrier: usize,
    sets: Vec<StateSet>,
}

impl SetFamily {
    pub fn new(carrier: usize, mut sets: Vec<StateSet>) -> Result<Self> {
        for s in &sets {
            if s.carrier() != carrier {
                return Err(Error::CarrierMismatch {
                    expected: carrier,
                    got: s.carrier(),
                });
            }
        }
        sets.sort();
        sets.dedup();
        Ok(SetFamily { carrier, sets })
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn sets(&self) -> &[StateSet] {
        &self.sets
    }
}

impl fmt::Display for SetFamily {
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

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Double powerset with the multiplication induced by [`cnf_atleast`]:
/// transform each member family, union the results, then collapse each
/// produced family by union. Fails the left unit law.
pub struct PpAtLeast;

impl SetMonad for PpAtLeast {
    type Elem = SetFamily;

    fn name(&self) -> &'static str {
        "pp-atleast"
    }

    fn enumerate(&self, carrier: usize) -> Result<Vec<SetFamily>> {
        if carrier > 4 {
            return Err(Error::Capacity {
                what: "double-powerset enumeration",
                needed: carrier as u128,
                cap: 4,
            });
        }
        let subsets: Vec<StateSet> = (0..1u64 << carrier)
            .map(|b| StateSet::from_bits(carrier, b))
            .collect::<Result<_>>()?;
        let mut out = Vec::with_capacity(1 << subsets.len());
        for fam_mask in 0..1u64 << subsets.len() {
            let sets: Vec<StateSet> = subsets
                .iter()
                .enumerate()
                .filter(|(i, _)| fam_mask >> i & 1 == 1)
                .map(|(_, s)| *s)
                .collect();
            out.push(SetFamily::new(carrier, sets)?);
        }
        Ok(out)
    }

    fn unit(&self, carrier: usize, x: usize) -> Result<SetFamily> {
        Ok(SetFamily::new(
            carrier,
            vec![StateSet::singleton(carrier, x)?],
        )?)
    }

    fn map(&self, f: &FiniteFunction, e: &SetFamily) -> Result<SetFamily> {
        if e.carrier != f.domain() {
            return Err(Error::CarrierMismatch {
                expected: f.domain(),
                got: e.carrier,
            });
        }
        let images: Vec<StateSet> = e
            .sets
            .iter()
            .map(|s| crate::monad::pow_map(f, s))
            .collect::<Result<_>>()?;
        SetFamily::new(f.codomain(), images)
    }

    fn mult(&self, inner: usize, decode: &[SetFamily], e: &SetFamily) -> Result<SetFamily> {
        if e.carrier != decode.len() {
            return Err(Error::CarrierMismatch {
                expected: decode.len(),
                got: e.carrier,
            });
        }
        for d in decode {
            if d.carrier != inner {
                return Err(Error::CarrierMismatch {
                    expected: inner,
                    got: d.carrier,
                });
            }
        }
        // Collect, over every member family of families, the clause sets of
        // subsets meeting each family at least once.
        let mut produced: Vec<Vec<StateSet>> = Vec::new();
        for s in &e.sets {
            let members: Vec<&[StateSet]> = s.iter().map(|i| decode[i].sets()).collect();
            // universe of distinct subsets appearing across the members
            let mut universe: Vec<StateSet> = members.iter().flat_map(|m| m.iter().copied()).collect();
            universe.sort();
            universe.dedup();
            if universe.len() > crate::order::ENUM_BOUND {
                return Err(Error::Capacity {
                    what: "clause-transform universe",
                    needed: universe.len() as u128,
                    cap: crate::order::ENUM_BOUND as u128,
                });
            }
            for vmask in 0..1u64 << universe.len() {
                let v: Vec<StateSet> = universe
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| vmask >> i & 1 == 1)
                    .map(|(_, s)| *s)
                    .collect();
                let hits_all = members
                    .iter()
                    .all(|m| v.iter().any(|x| m.contains(x)));
                if hits_all {
                    produced.push(v);
                }
            }
        }
        // collapse each produced family by union
        let collapsed: Vec<StateSet> = produced
            .iter()
            .map(|v| union_of(inner, v))
            .collect::<Result<_>>()?;
        SetFamily::new(inner, collapsed)
    }

    fn sample(&self, carrier: usize, rng: &mut ChaCha8Rng) -> SetFamily {
        let k = rng.gen_range(0..=3usize);
        let sets: Vec<StateSet> = (0..k)
            .map(|_| {
                let bits = if carrier == 0 {
                    0
                } else {
                    rng.gen::<u64>() & if carrier == 64 { u64::MAX } else { (1 << carrier) - 1 }
                };
                StateSet::from_bits(carrier, bits).expect("masked bits fit")
            })
            .collect();
        SetFamily::new(carrier, sets).expect("carriers match")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(carrier: usize, xs: &[usize]) -> StateSet {
        StateSet::from_indices(carrier, xs).unwrap()
    }

    #[test]
    fn cnf_examples() {
        // family {{0,1},{1,2}} over 3
        let fam = [set(3, &[0, 1]), set(3, &[1, 2])];
        // exact: hit each exactly once: {1} hits both once; {0,2} hits each once
        assert_eq!(
            cnf_exact(3, &fam).unwrap(),
            vec![set(3, &[1]), set(3, &[0, 2])]
        );
        // at-least includes supersets inside the union
        let atleast = cnf_atleast(3, &fam).unwrap();
        assert!(atleast.contains(&set(3, &[1])));
        assert!(atleast.contains(&set(3, &[0, 1, 2])));
        assert!(!atleast.contains(&set(3, &[0])));
    }

    #[test]
    fn cnf_of_empty_family_is_empty_set_only() {
        assert_eq!(cnf_exact(2, &[]).unwrap(), vec![set(2, &[])]);
        assert_eq!(cnf_atleast(2, &[]).unwrap(), vec![set(2, &[])]);
    }

    #[test]
    fn cnf_with_empty_member_is_empty() {
        // no set can hit the empty member
        let fam = [set(2, &[]), set(2, &[0])];
        assert!(cnf_exact(2, &fam).unwrap().is_empty());
        assert!(cnf_atleast(2, &fam).unwrap().is_empty());
    }

    #[test]
    fn exact_naturality_fails_with_known_witness() {
        // f collapses 1 and 2; the family {{0,1},{2}} transforms differently
        // on the two routes.
        let f = FiniteFunction::new(3, 2, vec![0, 1, 1]).unwrap();
        let fam = [set(3, &[0, 1]), set(3, &[2])];
        let transformed_then_mapped: Vec<StateSet> = cnf_exact(3, &fam)
            .unwrap()
            .iter()
            .map(|s| crate::monad::pow_map(&f, s).unwrap())
            .collect();
        let mapped: Vec<StateSet> = fam
            .iter()
            .map(|s| crate::monad::pow_map(&f, s).unwrap())
            .collect();
        let mapped_then_transformed = cnf_exact(2, &mapped).unwrap();
        let mut a = transformed_then_mapped;
        a.sort();
        a.dedup();
        assert_ne!(a, mapped_then_transformed);
    }

    #[test]
    fn atleast_left_unit_fails_at_two_states() {
        // eta_{T X} of {{0},{1}} flattens to its closure under unions.
        let m = PpAtLeast;
        let e = SetFamily::new(2, vec![set(2, &[0]), set(2, &[1])]).unwrap();
        let unit = m.unit(1, 0).unwrap();
        let flat = m.mult(2, std::slice::from_ref(&e), &unit).unwrap();
        let expected =
            SetFamily::new(2, vec![set(2, &[0]), set(2, &[1]), set(2, &[0, 1])]).unwrap();
        assert_eq!(flat, expected);
        assert_ne!(flat, e);
    }
}
