//! Text format for automata and helpers shared by the command-line tool.
//!
//! A document looks like:
//!
//! ```text
//! # parity of both letters
//! kind: afa
//! alphabet: a b
//! states: q0 q1 q2
//! accepting: q2
//! trans q0 a: {q1 q2} {q0}
//! trans q0 b: q1
//! ```
//!
//! `trans` right-hand sides depend on the kind: one state for a DFA, a
//! (possibly empty) list of states for an NFA, and for an AFA a list of
//! brace-delimited groups read as a disjunction of conjunctions (a bare
//! state list is shorthand for singleton groups). Missing NFA transitions
//! default to the empty set, missing AFA transitions to the empty family
//! (reject); a DFA must be total.

use std::fmt;

use altdet_core::{Afa, AltElement, Dfa, Nfa, StateSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Dfa,
    Nfa,
    Afa,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Dfa => "dfa",
            Kind::Nfa => "nfa",
            Kind::Afa => "afa",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetSpec {
    One(String),
    Set(Vec<String>),
    Forks(Vec<Vec<String>>),
}

#[derive(Debug, Clone)]
pub struct TransLine {
    pub state: String,
    pub symbol: String,
    pub target: TargetSpec,
}

#[derive(Debug, Clone)]
pub struct Document {
    pub kind: Kind,
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub accepting: Vec<String>,
    pub trans: Vec<TransLine>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Parses the text format; line numbers in errors are 1-based.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut kind = None;
    let mut alphabet: Option<Vec<String>> = None;
    let mut states: Option<Vec<String>> = None;
    let mut accepting: Option<Vec<String>> = None;
    let mut trans: Vec<TransLine> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (head, rest) = match line.split_once(':') {
            Some(p) => p,
            None => return err(ln, "expected `key: value`"),
        };
        let head_tokens: Vec<&str> = head.split_whitespace().collect();
        let rest = rest.trim();
        match head_tokens.as_slice() {
            ["kind"] => {
                if kind.is_some() {
                    return err(ln, "duplicate `kind`");
                }
                kind = Some(match rest {
                    "dfa" => Kind::Dfa,
                    "nfa" => Kind::Nfa,
                    "afa" => Kind::Afa,
                    other => return err(ln, format!("unknown kind `{other}`")),
                });
            }
            ["alphabet"] => {
                if alphabet.is_some() {
                    return err(ln, "duplicate `alphabet`");
                }
                alphabet = Some(rest.split_whitespace().map(str::to_string).collect());
            }
            ["states"] => {
                if states.is_some() {
                    return err(ln, "duplicate `states`");
                }
                states = Some(rest.split_whitespace().map(str::to_string).collect());
            }
            ["accepting"] => {
                if accepting.is_some() {
                    return err(ln, "duplicate `accepting`");
                }
                accepting = Some(rest.split_whitespace().map(str::to_string).collect());
            }
            ["trans", state, symbol] => {
                let k = match kind {
                    Some(k) => k,
                    None => return err(ln, "`kind` must come before `trans`"),
                };
                let target = parse_target(k, rest, ln)?;
                trans.push(TransLine {
                    state: state.to_string(),
                    symbol: symbol.to_string(),
                    target,
                });
            }
            _ => return err(ln, format!("unrecognized directive `{head}`")),
        }
    }

    let kind = match kind {
        Some(k) => k,
        None => return err(0, "missing `kind`"),
    };
    let alphabet = match alphabet {
        Some(a) if !a.is_empty() => a,
        _ => return err(0, "missing or empty `alphabet`"),
    };
    let states = match states {
        Some(s) if !s.is_empty() => s,
        _ => return err(0, "missing or empty `states`"),
    };
    Ok(Document {
        kind,
        alphabet,
        states,
        accepting: accepting.unwrap_or_default(),
        trans,
    })
}

fn parse_target(kind: Kind, rest: &str, ln: usize) -> Result<TargetSpec, ParseError> {
    match kind {
        Kind::Dfa => {
            let tokens: Vec<&str> = rest.split_whitespace().collect();
            match tokens.as_slice() {
                [one] => Ok(TargetSpec::One(one.to_string())),
                _ => err(ln, "a dfa transition needs exactly one target state"),
            }
        }
        Kind::Nfa => {
            if rest.contains('{') || rest.contains('}') {
                return err(ln, "groups are only valid for afa transitions");
            }
            Ok(TargetSpec::Set(
                rest.split_whitespace().map(str::to_string).collect(),
            ))
        }
        Kind::Afa => {
            if !rest.contains('{') {
                // bare states: each its own singleton group
                return Ok(TargetSpec::Forks(
                    rest.split_whitespace()
                        .map(|s| vec![s.to_string()])
                        .collect(),
                ));
            }
            let mut forks = Vec::new();
            let mut chars = rest.char_indices().peekable();
            while let Some((pos, c)) = chars.next() {
                if c.is_whitespace() {
                    continue;
                }
                if c != '{' {
                    return err(ln, format!("unexpected `{c}` at column {}", pos + 1));
                }
                let mut inner = String::new();
                let mut closed = false;
                for (_, c2) in chars.by_ref() {
                    if c2 == '}' {
                        closed = true;
                        break;
                    }
                    if c2 == '{' {
                        return err(ln, "nested `{` in group");
                    }
                    inner.push(c2);
                }
                if !closed {
                    return err(ln, "unterminated `{` group");
                }
                forks.push(inner.split_whitespace().map(str::to_string).collect());
            }
            Ok(TargetSpec::Forks(forks))
        }
    }
}

/// A built automaton of any kind.
#[derive(Debug, Clone)]
pub enum Machine {
    Dfa(Dfa),
    Nfa(Nfa),
    Afa(Afa),
}

impl Document {
    fn state_index(&self, name: &str, what: &str) -> Result<usize, ParseError> {
        self.states
            .iter()
            .position(|s| s == name)
            .ok_or(ParseError {
                line: 0,
                message: format!("unknown state `{name}` in {what}"),
            })
    }

    pub fn symbol_index(&self, name: &str) -> Result<usize, ParseError> {
        self.alphabet
            .iter()
            .position(|s| s == name)
            .ok_or(ParseError {
                line: 0,
                message: format!("unknown symbol `{name}`"),
            })
    }

    /// Validates names and totality, producing the numeric machine.
    pub fn build(&self) -> Result<Machine, ParseError> {
        let n = self.states.len();
        let a = self.alphabet.len();
        for names in [&self.states, &self.alphabet] {
            for (i, x) in names.iter().enumerate() {
                if names[..i].contains(x) {
                    return err(0, format!("duplicate name `{x}`"));
                }
            }
        }
        let mut output = vec![false; n];
        for acc in &self.accepting {
            output[self.state_index(acc, "accepting")?] = true;
        }

        let mut seen = vec![vec![false; a]; n];
        let mut targets: Vec<Vec<Option<&TargetSpec>>> = vec![vec![None; a]; n];
        for t in &self.trans {
            let q = self.state_index(&t.state, "trans")?;
            let s = self.symbol_index(&t.symbol)?;
            if seen[q][s] {
                return err(
                    0,
                    format!("duplicate transition for `{} {}`", t.state, t.symbol),
                );
            }
            seen[q][s] = true;
            targets[q][s] = Some(&t.target);
        }

        let to_err = |m: altdet_core::Error| ParseError {
            line: 0,
            message: m.to_string(),
        };
        match self.kind {
            Kind::Dfa => {
                let mut delta = vec![vec![0usize; a]; n];
                for q in 0..n {
                    for s in 0..a {
                        match targets[q][s] {
                            Some(TargetSpec::One(name)) => {
                                delta[q][s] = self.state_index(name, "trans")?;
                            }
                            Some(_) => unreachable!("parser enforces dfa target shape"),
                            None => {
                                return err(
                                    0,
                                    format!(
                                        "missing dfa transition for `{} {}`",
                                        self.states[q], self.alphabet[s]
                                    ),
                                )
                            }
                        }
                    }
                }
                Ok(Machine::Dfa(Dfa::new(n, a, output, delta).map_err(to_err)?))
            }
            Kind::Nfa => {
                let mut delta = vec![vec![StateSet::empty(n).map_err(to_err)?; a]; n];
                for q in 0..n {
                    for s in 0..a {
                        if let Some(TargetSpec::Set(names)) = targets[q][s] {
                            let idx: Vec<usize> = names
                                .iter()
                                .map(|x| self.state_index(x, "trans"))
                                .collect::<Result<_, _>>()?;
                            delta[q][s] = StateSet::from_indices(n, &idx).map_err(to_err)?;
                        }
                    }
                }
                Ok(Machine::Nfa(Nfa::new(n, a, output, delta).map_err(to_err)?))
            }
            Kind::Afa => {
                let bottom = AltElement::from_sets(n, &[]).map_err(to_err)?;
                let mut delta = vec![vec![bottom; a]; n];
                for q in 0..n {
                    for s in 0..a {
                        if let Some(TargetSpec::Forks(groups)) = targets[q][s] {
                            let sets: Vec<StateSet> = groups
                                .iter()
                                .map(|g| {
                                    let idx: Vec<usize> = g
                                        .iter()
                                        .map(|x| self.state_index(x, "trans"))
                                        .collect::<Result<_, _>>()?;
                                    StateSet::from_indices(n, &idx).map_err(to_err)
                                })
                                .collect::<Result<_, _>>()?;
                            delta[q][s] = AltElement::from_sets(n, &sets).map_err(to_err)?;
                        }
                    }
                }
                Ok(Machine::Afa(Afa::new(n, a, output, delta).map_err(to_err)?))
            }
        }
    }

    /// Canonical rendering in the same format `parse_document` reads.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("kind: {}\n", self.kind.name()));
        out.push_str(&format!("alphabet: {}\n", self.alphabet.join(" ")));
        out.push_str(&format!("states: {}\n", self.states.join(" ")));
        out.push_str(&format!("accepting: {}\n", self.accepting.join(" ")));
        for t in &self.trans {
            let rhs = match &t.target {
                TargetSpec::One(x) => x.clone(),
                TargetSpec::Set(xs) => xs.join(" "),
                TargetSpec::Forks(groups) => groups
                    .iter()
                    .map(|g| format!("{{{}}}", g.join(" ")))
                    .collect::<Vec<_>>()
                    .join(" "),
            };
            out.push_str(&format!("trans {} {}: {}\n", t.state, t.symbol, rhs));
        }
        out
    }

    /// Wraps a numeric DFA back into a document with the given names.
    pub fn from_dfa(dfa: &Dfa, alphabet: &[String], state_names: &[String]) -> Document {
        let mut trans = Vec::new();
        let mut accepting = Vec::new();
        for q in 0..dfa.states() {
            if dfa.output(q) {
                accepting.push(state_names[q].clone());
            }
            for (s, sym) in alphabet.iter().enumerate() {
                trans.push(TransLine {
                    state: state_names[q].clone(),
                    symbol: sym.clone(),
                    target: TargetSpec::One(state_names[dfa.step(q, s)].clone()),
                });
            }
        }
        Document {
            kind: Kind::Dfa,
            alphabet: alphabet.to_vec(),
            states: state_names.to_vec(),
            accepting,
            trans,
        }
    }
}

/// Parses a word over the document's alphabet. The empty string and `eps`
/// denote the empty word; symbols are single characters when every alphabet
/// entry is one character, otherwise comma-separated tokens.
pub fn parse_word(doc: &Document, input: &str) -> Result<Vec<usize>, ParseError> {
    if input.is_empty() || input == "eps" {
        return Ok(Vec::new());
    }
    if doc.alphabet.iter().all(|s| s.chars().count() == 1) && !input.contains(',') {
        input
            .chars()
            .map(|c| doc.symbol_index(&c.to_string()))
            .collect()
    } else {
        input.split(',').map(|t| doc.symbol_index(t.trim())).collect()
    }
}

/// Renders a numeric word back through the alphabet names.
pub fn render_word(alphabet: &[String], w: &[usize]) -> String {
    if w.is_empty() {
        return "eps".to_string();
    }
    if alphabet.iter().all(|s| s.chars().count() == 1) {
        w.iter().map(|&s| alphabet[s].clone()).collect()
    } else {
        w.iter()
            .map(|&s| alphabet[s].clone())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering. Alternating transitions route through a diamond
/// node per group so conjunction is visible.
pub fn to_dot(doc: &Document, machine: &Machine) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
    for (q, name) in doc.states.iter().enumerate() {
        let accepting = match machine {
            Machine::Dfa(d) => d.output(q),
            Machine::Nfa(n) => n.output(q),
            Machine::Afa(a) => a.output(q),
        };
        let shape = if accepting { "doublecircle" } else { "circle" };
        out.push_str(&format!(
            "  \"{}\" [shape={shape}];\n",
            dot_escape(name)
        ));
    }
    match machine {
        Machine::Dfa(d) => {
            for q in 0..d.states() {
                for s in 0..d.alphabet() {
                    out.push_str(&format!(
                        "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                        dot_escape(&doc.states[q]),
                        dot_escape(&doc.states[d.step(q, s)]),
                        dot_escape(&doc.alphabet[s])
                    ));
                }
            }
        }
        Machine::Nfa(n) => {
            for q in 0..n.states() {
                for s in 0..n.alphabet() {
                    for t in n.step(q, s).iter() {
                        out.push_str(&format!(
                            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                            dot_escape(&doc.states[q]),
                            dot_escape(&doc.states[t]),
                            dot_escape(&doc.alphabet[s])
                        ));
                    }
                }
            }
        }
        Machine::Afa(a) => {
            let mut fresh = 0usize;
            for q in 0..a.states() {
                for s in 0..a.alphabet() {
                    for fork in a.step(q, s).forks().iter() {
                        let mid = format!("and{fresh}");
                        fresh += 1;
                        out.push_str(&format!(
                            "  \"{mid}\" [shape=diamond,label=\"\",width=0.2,height=0.2];\n"
                        ));
                        out.push_str(&format!(
                            "  \"{}\" -> \"{mid}\" [label=\"{}\"];\n",
                            dot_escape(&doc.states[q]),
                            dot_escape(&doc.alphabet[s])
                        ));
                        for t in fork.iter() {
                            out.push_str(&format!(
                                "  \"{mid}\" -> \"{}\";\n",
                                dot_escape(&doc.states[t])
                            ));
                        }
                    }
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const NFA_DOC: &str = "\
# toy
kind: nfa
alphabet: a b
states: q0 q1
accepting: q1
trans q0 a: q0 q1
trans q1 b: q1
";

    #[test]
    fn parse_and_rebuild_round_trip() {
        let doc = parse_document(NFA_DOC).unwrap();
        assert_eq!(doc.kind, Kind::Nfa);
        assert_eq!(doc.alphabet, ["a", "b"]);
        let again = parse_document(&doc.to_text()).unwrap();
        assert_eq!(again.to_text(), doc.to_text());
        assert!(matches!(doc.build().unwrap(), Machine::Nfa(_)));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = parse_document("kind: dfa\nbogus line\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_document("kind: zfa\n").unwrap_err();
        assert_eq!(e.line, 1);
        // trans before kind
        let e = parse_document("trans q0 a: q1\n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn afa_groups_parse() {
        let doc = parse_document(
            "kind: afa\nalphabet: a\nstates: p q r\naccepting: r\ntrans p a: {q r} {p}\n",
        )
        .unwrap();
        match &doc.trans[0].target {
            TargetSpec::Forks(groups) => {
                assert_eq!(groups.len(), 2);
                assert_eq!(groups[0], ["q", "r"]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(doc.build().unwrap(), Machine::Afa(_)));
        // empty group means an always-true fork
        let doc2 = parse_document(
            "kind: afa\nalphabet: a\nstates: p\naccepting:\ntrans p a: {}\n",
        )
        .unwrap();
        match doc2.build().unwrap() {
            Machine::Afa(a) => assert_eq!(a.step(0, 0).forks().len(), 1),
            _ => unreachable!(),
        }
    }

    #[test]
    fn dfa_must_be_total() {
        let e = parse_document("kind: dfa\nalphabet: a\nstates: p q\naccepting: q\ntrans p a: q\n")
            .unwrap()
            .build()
            .unwrap_err();
        assert!(e.message.contains("missing dfa transition"));
    }

    #[test]
    fn word_parsing_and_rendering() {
        let doc = parse_document(NFA_DOC).unwrap();
        assert_eq!(parse_word(&doc, "aab").unwrap(), vec![0, 0, 1]);
        assert_eq!(parse_word(&doc, "eps").unwrap(), Vec::<usize>::new());
        assert!(parse_word(&doc, "ax").is_err());
        assert_eq!(render_word(&doc.alphabet, &[0, 0, 1]), "aab");
        assert_eq!(render_word(&doc.alphabet, &[]), "eps");
    }
}
