//! Diagram-chasing harness: checks monad laws and naturality either
//! exhaustively or by seeded sampling, and reports results in a stable
//! one-line-per-diagram format.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monad::{FiniteFunction, SetMonad};
use crate::order::StateSet;

/// How a diagram was checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { seed: u64 },
}

/// First mismatch found while chasing a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub input: String,
    pub left: String,
    pub right: String,
}

/// Outcome of checking one commuting diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub diagram: String,
    pub cases: usize,
    pub mode: Mode,
    pub counterexample: Option<Witness>,
}

impl LawReport {
    pub fn is_pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DIAGRAM {} {} checked={} mode=",
            self.diagram,
            if self.is_pass() { "pass" } else { "fail" },
            self.cases
        )?;
        match self.mode {
            Mode::Exhaustive => write!(f, "exhaustive")?,
            Mode::Sampled { seed } => write!(f, "sampled seed={seed:#x}")?,
        }
        if let Some(w) = &self.counterexample {
            write!(f, " witness=input={};left={};right={}", w.input, w.left, w.right)?;
        }
        Ok(())
    }
}

/// Bounds and seeds for the checks.
#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    /// Largest layer the harness will enumerate; above it, sample.
    pub enumeration_cap: usize,
    pub sample_count: usize,
    pub seed: u64,
    /// Skip exhaustive enumeration even when it would fit.
    pub force_sample: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            enumeration_cap: 1_000_000,
            sample_count: 1000,
            seed: 0xC0A1,
            force_sample: false,
        }
    }
}

impl CheckConfig {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    pub fn mode(&self, exhaustive: bool) -> Mode {
        if exhaustive && !self.force_sample {
            Mode::Exhaustive
        } else {
            Mode::Sampled { seed: self.seed }
        }
    }
}

/// Tracks cases and the first mismatch for one diagram.
pub(crate) struct Chase {
    diagram: String,
    cases: usize,
    counterexample: Option<Witness>,
}

impl Chase {
    pub fn new(diagram: impl Into<String>) -> Self {
        Chase {
            diagram: diagram.into(),
            cases: 0,
            counterexample: None,
        }
    }

    pub fn done(&self) -> bool {
        self.counterexample.is_some()
    }

    pub fn case<T: PartialEq + fmt::Display>(&mut self, input: &dyn fmt::Display, left: &T, right: &T) {
        self.cases += 1;
        if self.counterexample.is_none() && left != right {
            self.counterexample = Some(Witness {
                input: input.to_string(),
                left: left.to_string(),
                right: right.to_string(),
            });
        }
    }

    pub fn report(self, mode: Mode) -> LawReport {
        LawReport {
            diagram: self.diagram,
            cases: self.cases,
            mode,
            counterexample: self.counterexample,
        }
    }
}

fn render_decode<E: fmt::Display>(decode: &[E]) -> String {
    let parts: Vec<String> = decode.iter().map(|e| e.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Checks the three monad laws for `m` at carrier `n`.
///
/// Unit laws run over the full first layer `T(X)`. Associativity runs
/// exhaustively when `T(T(T(X)))` is enumerable within the configured cap
/// and otherwise over sampled inputs: short random decode tables standing
/// in for the second and third layers plus a random outer element, so huge
/// layers never need to be materialized.
pub fn check_monad_laws<M: SetMonad>(
    m: &M,
    n: usize,
    cfg: &CheckConfig,
) -> Result<Vec<LawReport>> {
    let t1 = m.enumerate(n)?;
    let mut reports = Vec::new();

    // mult . unit_{TX} = id
    let mut chase = Chase::new(format!("{}.unit-left.n{}", m.name(), n));
    let inner_unit = m.unit(1, 0)?;
    let unit_inputs: Vec<M::Elem> = if cfg.force_sample {
        let mut rng = cfg.rng();
        (0..cfg.sample_count).map(|_| m.sample(n, &mut rng)).collect()
    } else {
        t1.clone()
    };
    for e in &unit_inputs {
        let lhs = m.mult(n, std::slice::from_ref(e), &inner_unit)?;
        chase.case(e, &lhs, e);
    }
    reports.push(chase.report(cfg.mode(true)));

    // mult . T(unit_X) = id
    let mut chase = Chase::new(format!("{}.unit-right.n{}", m.name(), n));
    let units: Vec<M::Elem> = (0..n).map(|x| m.unit(n, x)).collect::<Result<_>>()?;
    for e in &unit_inputs {
        let lhs = m.mult(n, &units, e)?;
        chase.case(e, &lhs, e);
    }
    reports.push(chase.report(cfg.mode(true)));

    // mult . T(mult) = mult . mult_{TX}
    reports.push(check_assoc(m, n, &t1, cfg)?);

    Ok(reports)
}

fn check_assoc<M: SetMonad>(
    m: &M,
    n: usize,
    t1: &[M::Elem],
    cfg: &CheckConfig,
) -> Result<LawReport> {
    let mut chase = Chase::new(format!("{}.assoc.n{}", m.name(), n));

    // Both associativity routes for `e` over explicit decode tables:
    // `decode1` holds first-layer elements, `decode2` holds elements over
    // `decode1`'s index set, and `e` ranges over `decode2`'s index set.
    let run = |decode1: &[M::Elem], decode2: &[M::Elem], e: &M::Elem, chase: &mut Chase| -> Result<()> {
        // T(mult): replace each decode entry by its flattening, then flatten.
        let flattened: Vec<M::Elem> = decode2
            .iter()
            .map(|d| m.mult(n, decode1, d))
            .collect::<Result<_>>()?;
        let lhs = m.mult(n, &flattened, e)?;
        // mult_{TX}: flatten the outer two layers first.
        let mid = m.mult(decode1.len(), decode2, e)?;
        let rhs = m.mult(n, decode1, &mid)?;
        let input = format!(
            "decode1={};decode2={};e={}",
            render_decode(decode1),
            render_decode(decode2),
            e
        );
        chase.case(&input, &lhs, &rhs);
        Ok(())
    };

    let exhaustive = if cfg.force_sample {
        None
    } else {
        match m.enumerate(t1.len()) {
            Ok(t2) => {
                let t3_size = m
                    .enumerate(t2.len())
                    .map(|t3| t3.len())
                    .unwrap_or(usize::MAX);
                if t3_size <= cfg.enumeration_cap {
                    Some(t2)
                } else {
                    None
                }
            }
            Err(Error::Capacity { .. }) => None,
            Err(e) => return Err(e),
        }
    };

    match exhaustive {
        Some(t2) => {
            for e in m.enumerate(t2.len())? {
                run(t1, &t2, &e, &mut chase)?;
                if chase.done() {
                    break;
                }
            }
            Ok(chase.report(Mode::Exhaustive))
        }
        None => {
            let mut rng = cfg.rng();
            for _ in 0..cfg.sample_count {
                let j = rng.gen_range(1..=4usize);
                let decode1: Vec<M::Elem> = (0..j).map(|_| m.sample(n, &mut rng)).collect();
                let k = rng.gen_range(1..=4usize);
                let decode2: Vec<M::Elem> = (0..k).map(|_| m.sample(j, &mut rng)).collect();
                let e = m.sample(k, &mut rng);
                run(&decode1, &decode2, &e, &mut chase)?;
            }
            Ok(chase.report(Mode::Sampled { seed: cfg.seed }))
        }
    }
}

/// Naturality of a family-valued transformation on subsets:
/// image-then-transform equals transform-then-image, for every function
/// `0..n -> 0..m` and every family of subsets of `0..n`.
pub fn check_family_naturality(
    name: &str,
    t: &dyn Fn(usize, &[StateSet]) -> Result<Vec<StateSet>>,
    n: usize,
    m: usize,
) -> Result<LawReport> {
    let mut chase = Chase::new(format!("{name}.naturality.n{n}m{m}"));
    let subsets_n: Vec<StateSet> = (0..1u64 << n)
        .map(|b| StateSet::from_bits(n, b))
        .collect::<Result<_>>()?;
    let fn_count = (m as u64).pow(n as u32);
    for code in 0..fn_count {
        let mut c = code;
        let mut table = Vec::with_capacity(n);
        for _ in 0..n {
            table.push((c % m as u64) as usize);
            c /= m as u64;
        }
        let f = FiniteFunction::new(n, m, table)?;
        for fam_mask in 0..1u64 << subsets_n.len() {
            let family: Vec<StateSet> = subsets_n
                .iter()
                .enumerate()
                .filter(|(i, _)| fam_mask >> i & 1 == 1)
                .map(|(_, s)| *s)
                .collect();
            let image_family = canonical_image(&f, &family)?;
            let lhs = canonical(t(m, &image_family)?);
            let rhs = canonical_image(&f, &t(n, &family)?)?;
            let input = format!(
                "f={:?};S={}",
                f.table(),
                render_family(&family)
            );
            chase.case(&input, &render_family(&lhs), &render_family(&rhs));
            if chase.done() {
                break;
            }
        }
        if chase.done() {
            break;
        }
    }
    Ok(chase.report(Mode::Exhaustive))
}

fn canonical(mut v: Vec<StateSet>) -> Vec<StateSet> {
    v.sort();
    v.dedup();
    v
}

fn canonical_image(f: &FiniteFunction, family: &[StateSet]) -> Result<Vec<StateSet>> {
    let mapped: Vec<StateSet> = family
        .iter()
        .map(|s| crate::monad::pow_map(f, s))
        .collect::<Result<_>>()?;
    Ok(canonical(mapped))
}

fn render_family(family: &[StateSet]) -> String {
    let parts: Vec<String> = family.iter().map(|s| s.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_line_format() {
        let pass = LawReport {
            diagram: "powerset.assoc.n2".into(),
            cases: 16,
            mode: Mode::Exhaustive,
            counterexample: None,
        };
        assert_eq!(
            pass.to_string(),
            "DIAGRAM powerset.assoc.n2 pass checked=16 mode=exhaustive"
        );

        let fail = LawReport {
            diagram: "x.y".into(),
            cases: 3,
            mode: Mode::Sampled { seed: 0xC0A1 },
            counterexample: Some(Witness {
                input: "{0}".into(),
                left: "{0}".into(),
                right: "{1}".into(),
            }),
        };
        assert_eq!(
            fail.to_string(),
            "DIAGRAM x.y fail checked=3 mode=sampled seed=0xc0a1 witness=input={0};left={0};right={1}"
        );
        // witness must stay a single whitespace-free token
        assert_eq!(fail.to_string().split_whitespace().count(), 7);
    }

    #[test]
    fn identity_transform_is_natural() {
        let ident = |_n: usize, s: &[StateSet]| Ok(s.to_vec());
        let report = check_family_naturality("identity", &ident, 2, 2).unwrap();
        assert!(report.is_pass(), "{report}");
        assert!(report.cases > 0);
    }
}
