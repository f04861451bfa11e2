//! Determinization via the generalized subset construction: macro-states
//! are monad elements over the original state space, outputs come from an
//! algebra on the two-element set, and transitions from the Kleisli
//! extension of the transition map. The correspondence checks compare the
//! determinized machine against the direct acceptance semantics word by
//! word.

use std::collections::HashMap;

use crate::automata::{
    afa_accepts, dfa_accepts, nfa_accepts_existential, nfa_accepts_universal, Afa, Dfa, Nfa,
    Symbol, Word,
};
use crate::error::{Error, Result};
use crate::monad::alt::{alt_bind, alt_map, alt_unit, AltElement};
use crate::monad::laws::{Chase, LawReport, Mode};
use crate::monad::{FiniteFunction, SetMonad};
use crate::order::StateSet;

/// The two algebra structures of the powerset monad on `{0,1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowAlgebra {
    /// join: a set evaluates to 1 when it contains 1 (empty set to 0)
    Max,
    /// meet: a set evaluates to 1 when it does not contain 0 (empty set to 1)
    Min,
}

impl PowAlgebra {
    pub fn eval_bools(&self, vals: impl Iterator<Item = bool>) -> bool {
        match self {
            PowAlgebra::Max => {
                let mut vals = vals;
                vals.any(|b| b)
            }
            PowAlgebra::Min => {
                let mut vals = vals;
                vals.all(|b| b)
            }
        }
    }
}

/// join algebra on a subset of `{0,1}`
pub fn beta_pow_max(s: &StateSet) -> Result<bool> {
    expect_two(s.carrier())?;
    Ok(s.contains(1))
}

/// meet algebra on a subset of `{0,1}`
pub fn beta_pow_min(s: &StateSet) -> Result<bool> {
    expect_two(s.carrier())?;
    Ok(!s.contains(0))
}

/// The algebra on `{0,1}` for up-closed families: true exactly when the
/// family contains `{1}`, i.e. some fork avoids 0.
pub fn beta_alt(e: &AltElement) -> Result<bool> {
    expect_two(e.carrier())?;
    let one = StateSet::singleton(2, 1)?;
    Ok(e.forks().iter().any(|f| f.is_subset_of(&one)))
}

fn expect_two(carrier: usize) -> Result<()> {
    if carrier != 2 {
        return Err(Error::CarrierMismatch {
            expected: 2,
            got: carrier,
        });
    }
    Ok(())
}

/// `T(eval-at-y)`: pushes an element over function tables down to one over
/// the functions' values at `y`. Tables all have the same length and values
/// below `inner`; the carrier of `e` indexes `funcs`.
pub fn strength<M: SetMonad>(
    m: &M,
    inner: usize,
    funcs: &[Vec<usize>],
    e: &M::Elem,
    y: usize,
) -> Result<M::Elem> {
    let table: Vec<usize> = funcs
        .iter()
        .map(|f| {
            f.get(y).copied().ok_or(Error::IndexOutOfRange {
                index: y,
                carrier: f.len(),
            })
        })
        .collect::<Result<_>>()?;
    let eval = FiniteFunction::new(funcs.len(), inner, table)?;
    m.map(&eval, e)
}

/// The pointwise algebra on boolean tables: evaluate at `y`, then apply the
/// algebra on `{0,1}`.
pub fn pointwise_algebra<M: SetMonad>(
    m: &M,
    beta: &dyn Fn(&M::Elem) -> Result<bool>,
    funcs: &[Vec<usize>],
    e: &M::Elem,
    y: usize,
) -> Result<bool> {
    beta(&strength(m, 2, funcs, e, y)?)
}

/// The distributive law over the deterministic-automaton functor
/// `2 x (-)^A`, built from an algebra on `{0,1}` and the strength: an
/// element over output/successor pairs becomes one output plus one element
/// per symbol.
pub fn dist_from_algebra<M: SetMonad>(
    m: &M,
    beta: &dyn Fn(&M::Elem) -> Result<bool>,
    inner: usize,
    alphabet: usize,
    pairs: &[(bool, Vec<usize>)],
    e: &M::Elem,
) -> Result<(bool, Vec<M::Elem>)> {
    for (_, succ) in pairs {
        if succ.len() != alphabet {
            return Err(Error::CarrierMismatch {
                expected: alphabet,
                got: succ.len(),
            });
        }
    }
    let out_table: Vec<usize> = pairs.iter().map(|(b, _)| *b as usize).collect();
    let out = beta(&m.map(&FiniteFunction::new(pairs.len(), 2, out_table)?, e)?)?;
    let mut successors = Vec::with_capacity(alphabet);
    for a in 0..alphabet {
        let table: Vec<usize> = pairs.iter().map(|(_, s)| s[a]).collect();
        successors.push(m.map(&FiniteFunction::new(pairs.len(), inner, table)?, e)?);
    }
    Ok((out, successors))
}

/// What each determinized state stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StateDecode {
    Pow(Vec<StateSet>),
    Alt(Vec<AltElement>),
}

impl StateDecode {
    pub fn len(&self) -> usize {
        match self {
            StateDecode::Pow(v) => v.len(),
            StateDecode::Alt(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn describe(&self, i: usize) -> String {
        match self {
            StateDecode::Pow(v) => v[i].to_string(),
            StateDecode::Alt(v) => v[i].to_string(),
        }
    }
}

/// A determinized machine plus the meaning of its states.
#[derive(Clone, Debug)]
pub struct Determinized {
    pub dfa: Dfa,
    pub start: usize,
    pub decode: StateDecode,
}

/// Breadth-first closure of a transition relation on macro-states.
fn explore<E: Clone + Eq + std::hash::Hash>(
    start: E,
    cap: usize,
    out_of: &dyn Fn(&E) -> Result<bool>,
    step: &dyn Fn(&E, Symbol) -> Result<E>,
    alphabet: usize,
) -> Result<(Dfa, usize, Vec<E>)> {
    let mut elems = vec![start.clone()];
    let mut index: HashMap<E, usize> = HashMap::from([(start, 0)]);
    let mut delta: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < elems.len() {
        let cur = elems[i].clone();
        let mut row = Vec::with_capacity(alphabet);
        for a in 0..alphabet {
            let next = step(&cur, a)?;
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    if elems.len() >= cap {
                        return Err(Error::Capacity {
                            what: "determinized state space",
                            needed: elems.len() as u128 + 1,
                            cap: cap as u128,
                        });
                    }
                    let j = elems.len();
                    elems.push(next.clone());
                    index.insert(next, j);
                    j
                }
            };
            row.push(j);
        }
        delta.push(row);
        i += 1;
    }
    let output: Vec<bool> = elems.iter().map(|e| out_of(e)).collect::<Result<_>>()?;
    let dfa = Dfa::new(elems.len(), alphabet, output, delta)?;
    Ok((dfa, 0, elems))
}

/// Subset construction for a nondeterministic automaton, with the output
/// algebra deciding existential (`Max`) or universal (`Min`) acceptance.
pub fn determinize_nfa(
    n: &Nfa,
    alg: PowAlgebra,
    start: &StateSet,
    cap: usize,
) -> Result<Determinized> {
    if start.carrier() != n.states() {
        return Err(Error::CarrierMismatch {
            expected: n.states(),
            got: start.carrier(),
        });
    }
    let (dfa, s, elems) = explore(
        *start,
        cap,
        &|e: &StateSet| Ok(alg.eval_bools(e.iter().map(|q| n.output(q)))),
        &|e: &StateSet, a: Symbol| n.step_set(e, a),
        n.alphabet(),
    )?;
    Ok(Determinized {
        dfa,
        start: s,
        decode: StateDecode::Pow(elems),
    })
}

/// Determinization of an alternating automaton: macro-states are antichains
/// over the original states, started at the unit of `start`, advanced by
/// the Kleisli extension of the transition column.
pub fn determinize_afa(a: &Afa, start: usize, cap: usize) -> Result<Determinized> {
    let states = a.states();
    let init = alt_unit(states, start)?;
    let out_table: Vec<usize> = (0..states).map(|q| a.output(q) as usize).collect();
    let to_bool = FiniteFunction::new(states, 2, out_table)?;
    let (dfa, s, elems) = explore(
        init,
        cap,
        &|e: &AltElement| beta_alt(&alt_map(&to_bool, e)?),
        &|e: &AltElement, sym: Symbol| {
            let column: Vec<AltElement> = (0..states).map(|q| a.step(q, sym).clone()).collect();
            alt_bind(states, &column, e)
        },
        a.alphabet(),
    )?;
    Ok(Determinized {
        dfa,
        start: s,
        decode: StateDecode::Alt(elems),
    })
}

/// Direct semantics of a set of nondeterministic states on one word,
/// computed backwards over suffixes — independent of both the forward
/// subset run and the determinization.
pub fn beh1_nfa(n: &Nfa, alg: PowAlgebra, start: &StateSet, w: &[Symbol]) -> Result<bool> {
    if start.carrier() != n.states() {
        return Err(Error::CarrierMismatch {
            expected: n.states(),
            got: start.carrier(),
        });
    }
    let mut val: Vec<bool> = (0..n.states()).map(|q| n.output(q)).collect();
    for &sym in w.iter().rev() {
        if sym >= n.alphabet() {
            return Err(Error::IndexOutOfRange {
                index: sym,
                carrier: n.alphabet(),
            });
        }
        val = (0..n.states())
            .map(|q| alg.eval_bools(n.step(q, sym).iter().map(|p| val[p])))
            .collect();
    }
    Ok(alg.eval_bools(start.iter().map(|q| val[q])))
}

/// Direct alternating semantics; alias for the backward induction.
pub fn beh1_afa(a: &Afa, start: usize, w: &[Symbol]) -> Result<bool> {
    afa_accepts(a, start, w)
}

fn render_word(w: &[Symbol]) -> String {
    if w.is_empty() {
        "eps".to_string()
    } else {
        w.iter().map(|s| s.to_string()).collect()
    }
}

fn all_words(alphabet: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for a in 0..alphabet {
                let mut nw = w.clone();
                nw.push(a);
                next.push(nw);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Word-by-word agreement between the determinized machine and the direct
/// semantics of a nondeterministic automaton (both the forward subset run
/// and the backward induction).
pub fn check_semantics_correspondence_nfa(
    label: &str,
    n: &Nfa,
    alg: PowAlgebra,
    start: &StateSet,
    max_len: usize,
    cap: usize,
) -> Result<LawReport> {
    let det = determinize_nfa(n, alg, start, cap)?;
    let mut chase = Chase::new(format!("semantics.nfa-{:?}.{label}", alg).to_lowercase());
    for w in all_words(n.alphabet(), max_len) {
        let via_det = dfa_accepts(&det.dfa, det.start, &w)?;
        let direct = match alg {
            PowAlgebra::Max => nfa_accepts_existential(n, start, &w)?,
            PowAlgebra::Min => nfa_accepts_universal(n, start, &w)?,
        };
        let backward = beh1_nfa(n, alg, start, &w)?;
        let agree = via_det == direct && direct == backward;
        chase.case(&render_word(&w), &agree, &true);
    }
    Ok(chase.report(Mode::Exhaustive))
}

/// Word-by-word agreement between the determinized machine and the direct
/// alternating semantics.
pub fn check_semantics_correspondence_afa(
    label: &str,
    a: &Afa,
    start: usize,
    max_len: usize,
    cap: usize,
) -> Result<LawReport> {
    let det = determinize_afa(a, start, cap)?;
    let mut chase = Chase::new(format!("semantics.afa.{label}"));
    for w in all_words(a.alphabet(), max_len) {
        let via_det = dfa_accepts(&det.dfa, det.start, &w)?;
        let direct = beh1_afa(a, start, &w)?;
        chase.case(&render_word(&w), &via_det, &direct);
    }
    Ok(chase.report(Mode::Exhaustive))
}

/// The layer over the empty carrier is the two-element algebra and its
/// structure map is the multiplication: flattening a family over it agrees
/// with evaluating the family as a disjunction of conjunctions.
pub fn check_free_algebra_identity() -> Result<LawReport> {
    let base = crate::monad::alt::enumerate_alt(0)?;
    let truth: Vec<bool> = base
        .iter()
        .map(|e| !e.forks().is_empty()) // only fork can be the empty set
        .collect();
    let mut chase = Chase::new("alt.free-algebra-on-empty".to_string());
    if truth != [false, true] {
        chase.case(&"layer-order", &format!("{truth:?}"), &"[false, true]".to_string());
    }
    for e in crate::monad::alt::enumerate_alt(base.len())? {
        let flattened = crate::monad::alt::alt_mult(0, &e)?;
        let lhs = !flattened.forks().is_empty();
        let rhs = e
            .forks()
            .iter()
            .any(|fork| fork.iter().all(|i| truth[i]));
        chase.case(&e, &lhs, &rhs);
    }
    Ok(chase.report(Mode::Exhaustive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::parity_afa;
    use crate::monad::Powerset;

    fn set(carrier: usize, xs: &[usize]) -> StateSet {
        StateSet::from_indices(carrier, xs).unwrap()
    }

    #[test]
    fn algebra_values_on_two() {
        assert!(!beta_pow_max(&set(2, &[])).unwrap());
        assert!(beta_pow_max(&set(2, &[1])).unwrap());
        assert!(!beta_pow_max(&set(2, &[0])).unwrap());
        assert!(beta_pow_min(&set(2, &[])).unwrap());
        assert!(beta_pow_min(&set(2, &[1])).unwrap());
        assert!(!beta_pow_min(&set(2, &[0, 1])).unwrap());

        let t = AltElement::from_sets(2, &[set(2, &[1])]).unwrap();
        assert!(beta_alt(&t).unwrap());
        let f = AltElement::from_sets(2, &[set(2, &[0, 1])]).unwrap();
        assert!(!beta_alt(&f).unwrap());
        let top = AltElement::from_sets(2, &[set(2, &[])]).unwrap();
        assert!(beta_alt(&top).unwrap());
        let bottom = AltElement::from_sets(2, &[]).unwrap();
        assert!(!beta_alt(&bottom).unwrap());
    }

    #[test]
    fn strength_evaluates_pointwise() {
        let m = Powerset;
        // two boolean tables of width 2
        let funcs = vec![vec![0, 1], vec![1, 1]];
        let e = set(2, &[0, 1]); // both tables
        assert_eq!(strength(&m, 2, &funcs, &e, 0).unwrap(), set(2, &[0, 1]));
        assert_eq!(strength(&m, 2, &funcs, &e, 1).unwrap(), set(2, &[1]));
        assert!(pointwise_algebra(&m, &beta_pow_max, &funcs, &e, 0).unwrap());
        assert!(!pointwise_algebra(&m, &beta_pow_min, &funcs, &e, 0).unwrap());
        assert!(pointwise_algebra(&m, &beta_pow_min, &funcs, &e, 1).unwrap());
    }

    #[test]
    fn dist_from_algebra_projects_outputs_and_successors() {
        let m = Powerset;
        // pairs over X = {0,1}, one symbol
        let pairs = vec![(false, vec![0]), (true, vec![1])];
        let e = set(2, &[0, 1]);
        let (out, succ) = dist_from_algebra(&m, &beta_pow_max, 2, 1, &pairs, &e).unwrap();
        assert!(out);
        assert_eq!(succ, vec![set(2, &[0, 1])]);
        let (out_min, _) = dist_from_algebra(&m, &beta_pow_min, 2, 1, &pairs, &e).unwrap();
        assert!(!out_min);
    }

    #[test]
    fn determinize_parity_fixture() {
        let (a, start) = parity_afa();
        let det = determinize_afa(&a, start, 50_000).unwrap();
        // determinized machine must agree with the direct semantics
        let report = check_semantics_correspondence_afa("parity", &a, start, 8, 50_000).unwrap();
        assert!(report.is_pass(), "{report}");
        // ... and reject the empty word
        assert!(!dfa_accepts(&det.dfa, det.start, &[]).unwrap());
    }

    #[test]
    fn determinize_capacity_is_reported() {
        let (a, start) = parity_afa();
        assert!(matches!(
            determinize_afa(&a, start, 2),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn nfa_correspondence_both_algebras() {
        use crate::automata::Nfa;
        let n = Nfa::new(
            2,
            2,
            vec![false, true],
            vec![
                vec![set(2, &[0, 1]), set(2, &[0])],
                vec![set(2, &[]), set(2, &[1])],
            ],
        )
        .unwrap();
        let start = set(2, &[0]);
        for alg in [PowAlgebra::Max, PowAlgebra::Min] {
            let r = check_semantics_correspondence_nfa("toy", &n, alg, &start, 7, 50_000).unwrap();
            assert!(r.is_pass(), "{r}");
        }
    }

    #[test]
    fn free_algebra_identity_holds() {
        let r = check_free_algebra_identity().unwrap();
        assert!(r.is_pass(), "{r}");
        assert_eq!(r.cases, 6);
    }
}
