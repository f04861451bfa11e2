//! Deterministic, nondeterministic, and alternating automata over numeric
//! alphabets, with direct acceptance semantics for each flavor.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monad::alt::{AltElement, alt_unit};
use crate::order::StateSet;

pub type Symbol = usize;
pub type Word = Vec<Symbol>;

fn check_shape<T>(states: usize, alphabet: usize, output: &[bool], delta: &[Vec<T>]) -> Result<()> {
    if output.len() != states {
        return Err(Error::CarrierMismatch {
            expected: states,
            got: output.len(),
        });
    }
    if delta.len() != states {
        return Err(Error::CarrierMismatch {
            expected: states,
            got: delta.len(),
        });
    }
    for row in delta {
        if row.len() != alphabet {
            return Err(Error::CarrierMismatch {
                expected: alphabet,
                got: row.len(),
            });
        }
    }
    Ok(())
}

fn check_state(states: usize, q: usize) -> Result<()> {
    if q >= states {
        return Err(Error::IndexOutOfRange {
            index: q,
            carrier: states,
        });
    }
    Ok(())
}

fn check_word(alphabet: usize, w: &[Symbol]) -> Result<()> {
    for &a in w {
        if a >= alphabet {
            return Err(Error::IndexOutOfRange {
                index: a,
                carrier: alphabet,
            });
        }
    }
    Ok(())
}

/// Deterministic automaton: one successor per state and symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    states: usize,
    alphabet: usize,
    output: Vec<bool>,
    delta: Vec<Vec<usize>>,
}

impl Dfa {
    pub fn new(
        states: usize,
        alphabet: usize,
        output: Vec<bool>,
        delta: Vec<Vec<usize>>,
    ) -> Result<Self> {
        check_shape(states, alphabet, &output, &delta)?;
        for row in &delta {
            for &q in row {
                check_state(states, q)?;
            }
        }
        Ok(Dfa {
            states,
            alphabet,
            output,
            delta,
        })
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn output(&self, q: usize) -> bool {
        self.output[q]
    }

    pub fn step(&self, q: usize, a: Symbol) -> usize {
        self.delta[q][a]
    }
}

pub fn dfa_accepts(d: &Dfa, start: usize, w: &[Symbol]) -> Result<bool> {
    Ok(d.output(lang_derivative(d, start, w)?))
}

/// The state whose language is the residual of `start`'s language by `w`.
pub fn lang_derivative(d: &Dfa, start: usize, w: &[Symbol]) -> Result<usize> {
    check_state(d.states, start)?;
    check_word(d.alphabet, w)?;
    Ok(w.iter().fold(start, |q, &a| d.step(q, a)))
}

/// Shortest word distinguishing two DFA states, or `None` if their
/// languages agree. Breadth-first over the product, so the empty word is
/// tried first and witnesses are minimal-length.
pub fn dfa_equiv(d1: &Dfa, s1: usize, d2: &Dfa, s2: usize) -> Result<Option<Word>> {
    if d1.alphabet != d2.alphabet {
        return Err(Error::CarrierMismatch {
            expected: d1.alphabet,
            got: d2.alphabet,
        });
    }
    check_state(d1.states, s1)?;
    check_state(d2.states, s2)?;
    let mut seen = vec![false; d1.states * d2.states];
    let mut queue = std::collections::VecDeque::new();
    seen[s1 * d2.states + s2] = true;
    queue.push_back((s1, s2, Vec::new()));
    while let Some((q1, q2, w)) = queue.pop_front() {
        if d1.output(q1) != d2.output(q2) {
            return Ok(Some(w));
        }
        for a in 0..d1.alphabet {
            let (n1, n2) = (d1.step(q1, a), d2.step(q2, a));
            if !seen[n1 * d2.states + n2] {
                seen[n1 * d2.states + n2] = true;
                let mut nw = w.clone();
                nw.push(a);
                queue.push_back((n1, n2, nw));
            }
        }
    }
    Ok(None)
}

/// Nondeterministic automaton: a set of successors per state and symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    states: usize,
    alphabet: usize,
    output: Vec<bool>,
    delta: Vec<Vec<StateSet>>,
}

impl Nfa {
    pub fn new(
        states: usize,
        alphabet: usize,
        output: Vec<bool>,
        delta: Vec<Vec<StateSet>>,
    ) -> Result<Self> {
        check_shape(states, alphabet, &output, &delta)?;
        for row in &delta {
            for s in row {
                if s.carrier() != states {
                    return Err(Error::CarrierMismatch {
                        expected: states,
                        got: s.carrier(),
                    });
                }
            }
        }
        Ok(Nfa {
            states,
            alphabet,
            output,
            delta,
        })
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn output(&self, q: usize) -> bool {
        self.output[q]
    }

    pub fn step(&self, q: usize, a: Symbol) -> &StateSet {
        &self.delta[q][a]
    }

    /// Successor set of a set of states.
    pub fn step_set(&self, s: &StateSet, a: Symbol) -> Result<StateSet> {
        if s.carrier() != self.states {
            return Err(Error::CarrierMismatch {
                expected: self.states,
                got: s.carrier(),
            });
        }
        let mut out = StateSet::empty(self.states)?;
        for q in s.iter() {
            out = out.union(&self.delta[q][a]);
        }
        Ok(out)
    }
}

fn nfa_run(n: &Nfa, start: &StateSet, w: &[Symbol]) -> Result<StateSet> {
    check_word(n.alphabet, w)?;
    let mut s = *start;
    if s.carrier() != n.states {
        return Err(Error::CarrierMismatch {
            expected: n.states,
            got: s.carrier(),
        });
    }
    for &a in w {
        s = n.step_set(&s, a)?;
    }
    Ok(s)
}

/// Accepts when some reached state accepts.
pub fn nfa_accepts_existential(n: &Nfa, start: &StateSet, w: &[Symbol]) -> Result<bool> {
    Ok(nfa_run(n, start, w)?.iter().any(|q| n.output(q)))
}

/// Accepts when every reached state accepts (vacuously on the empty set).
pub fn nfa_accepts_universal(n: &Nfa, start: &StateSet, w: &[Symbol]) -> Result<bool> {
    Ok(nfa_run(n, start, w)?.iter().all(|q| n.output(q)))
}

/// Alternating automaton: each transition is an up-closed family of state
/// sets, read as a disjunction of conjunctions over its minimal forks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Afa {
    states: usize,
    alphabet: usize,
    output: Vec<bool>,
    delta: Vec<Vec<AltElement>>,
}

impl Afa {
    pub fn new(
        states: usize,
        alphabet: usize,
        output: Vec<bool>,
        delta: Vec<Vec<AltElement>>,
    ) -> Result<Self> {
        check_shape(states, alphabet, &output, &delta)?;
        for row in &delta {
            for e in row {
                if e.carrier() != states {
                    return Err(Error::CarrierMismatch {
                        expected: states,
                        got: e.carrier(),
                    });
                }
            }
        }
        Ok(Afa {
            states,
            alphabet,
            output,
            delta,
        })
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn output(&self, q: usize) -> bool {
        self.output[q]
    }

    pub fn step(&self, q: usize, a: Symbol) -> &AltElement {
        &self.delta[q][a]
    }
}

/// Backward induction over the word: the value of a state on a suffix is
/// "some fork has all members true on the shorter suffix".
pub fn afa_accepts(a: &Afa, start: usize, w: &[Symbol]) -> Result<bool> {
    check_state(a.states, start)?;
    check_word(a.alphabet, w)?;
    let mut val: Vec<bool> = (0..a.states).map(|q| a.output(q)).collect();
    for &sym in w.iter().rev() {
        val = (0..a.states)
            .map(|q| {
                a.delta[q][sym]
                    .forks()
                    .iter()
                    .any(|fork| fork.iter().all(|v| val[v]))
            })
            .collect();
    }
    Ok(val[start])
}

/// Five-state fixture whose language (on nonempty words over `{0,1}`) is
/// "symbol counts have equal parity"; the empty word is rejected.
///
/// State 0 forks into (1 and 3) or (2 and 4) on either symbol; 1/2 track
/// the parity of symbol 1, 3/4 the parity of symbol 0.
pub fn parity_afa() -> (Afa, usize) {
    let one = |q: usize| alt_unit(5, q).expect("in range");
    let fork = AltElement::from_sets(
        5,
        &[
            StateSet::from_indices(5, &[1, 3]).unwrap(),
            StateSet::from_indices(5, &[2, 4]).unwrap(),
        ],
    )
    .unwrap();
    let delta = vec![
        vec![fork.clone(), fork],
        vec![one(1), one(2)],
        vec![one(2), one(1)],
        vec![one(4), one(3)],
        vec![one(3), one(4)],
    ];
    let output = vec![false, false, true, true, false];
    (Afa::new(5, 2, output, delta).unwrap(), 0)
}

/// Seeded random automaton for differential tests.
pub fn random_nfa(states: usize, alphabet: usize, rng: &mut ChaCha8Rng) -> Nfa {
    assert!(states >= 1 && states <= 16);
    let output = (0..states).map(|_| rng.gen_bool(0.5)).collect();
    let delta = (0..states)
        .map(|_| {
            (0..alphabet)
                .map(|_| {
                    let bits = rng.gen::<u64>() & ((1u64 << states) - 1);
                    StateSet::from_bits(states, bits).expect("masked bits fit")
                })
                .collect()
        })
        .collect();
    Nfa::new(states, alphabet, output, delta).expect("shape is valid by construction")
}
