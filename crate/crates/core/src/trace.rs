//! States, steps, traces and the bounded trace universe.
//!
//! A trace is an initial state plus a finite sequence of labelled steps.
//! Program/environment steps carry a target state; program abort, environment
//! abort and termination are terminal-only labels. The canonical ordering is
//! lexicographic on (initial state, step sequence) with the step kind order
//! Prog < Env < ProgAbort < EnvAbort < Term, then target index; this falls
//! out of the derive order below.

use std::collections::BTreeSet;
use std::fmt;

use smallvec::SmallVec;

use crate::config::ModelConfig;
use crate::error::{ModelError, Result};

pub type State = u8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// Program step to a target state.
    Prog(State),
    /// Environment step to a target state.
    Env(State),
    /// Program abort; terminal only.
    ProgAbort,
    /// Environment abort; terminal only.
    EnvAbort,
    /// Successful termination; terminal only.
    Term,
}

impl Step {
    pub fn is_terminal_kind(&self) -> bool {
        matches!(self, Step::ProgAbort | Step::EnvAbort | Step::Term)
    }

    pub fn target(&self) -> Option<State> {
        match self {
            Step::Prog(s) | Step::Env(s) => Some(*s),
            _ => None,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Prog(s) => write!(f, "p{s}"),
            Step::Env(s) => write!(f, "e{s}"),
            Step::ProgAbort => write!(f, "pX"),
            Step::EnvAbort => write!(f, "eX"),
            Step::Term => write!(f, "!"),
        }
    }
}

pub type Steps = SmallVec<[Step; 8]>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trace {
    pub init: State,
    pub steps: Steps,
}

impl Trace {
    pub fn new(init: State, steps: impl IntoIterator<Item = Step>) -> Trace {
        Trace {
            init,
            steps: steps.into_iter().collect(),
        }
    }

    pub fn empty(init: State) -> Trace {
        Trace {
            init,
            steps: Steps::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Ends in a termination step.
    pub fn is_terminated(&self) -> bool {
        matches!(self.steps.last(), Some(Step::Term))
    }

    /// Ends in a program abort step.
    pub fn ends_in_prog_abort(&self) -> bool {
        matches!(self.steps.last(), Some(Step::ProgAbort))
    }

    /// State after the last state-bearing step, or the initial state.
    pub fn final_state(&self) -> State {
        self.steps
            .iter()
            .rev()
            .find_map(|s| s.target())
            .unwrap_or(self.init)
    }

    /// The length-`k` prefix.
    pub fn prefix(&self, k: usize) -> Trace {
        Trace {
            init: self.init,
            steps: self.steps[..k].iter().copied().collect(),
        }
    }

    /// The trace with its final step removed.
    pub fn drop_last(&self) -> Trace {
        self.prefix(self.len().saturating_sub(1))
    }
}

/// `<init>:[<step>,...]` rendering, e.g. `0:[p1,e0,!]`.
impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[", self.init)?;
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

/// Parses the textual trace format, e.g. `0:[p1,e0,!]`.
pub fn parse_trace(text: &str) -> Result<Trace> {
    let err = |offset: usize, expected: &str| ModelError::Parse {
        offset,
        expected: expected.to_string(),
    };
    let colon = text.find(':').ok_or_else(|| err(text.len(), "':'"))?;
    let init: State = text[..colon]
        .trim()
        .parse()
        .map_err(|_| err(0, "state index"))?;
    let rest = text[colon + 1..].trim();
    let inner = rest
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| err(colon + 1, "'[...]'"))?;
    let mut steps = Steps::new();
    for tok in inner.split(',').map(str::trim) {
        if tok.is_empty() {
            continue;
        }
        let step = match tok {
            "!" => Step::Term,
            "pX" => Step::ProgAbort,
            "eX" => Step::EnvAbort,
            _ => {
                let (kind, idx) = tok.split_at(1);
                let target: State = idx.parse().map_err(|_| err(colon, "step target"))?;
                match kind {
                    "p" => Step::Prog(target),
                    "e" => Step::Env(target),
                    _ => return Err(err(colon, "step kind p/e/pX/eX/!")),
                }
            }
        };
        steps.push(step);
    }
    Ok(Trace { init, steps })
}

/// A raw (pre-closure) deduplicated set of traces, canonically ordered.
pub type TraceSet = BTreeSet<Trace>;

/// Total validity predicate for a trace under a configuration.
pub fn valid_trace(t: &Trace, cfg: &ModelConfig) -> bool {
    if t.init >= cfg.state_count {
        return false;
    }
    if t.len() > cfg.length_bound as usize {
        return false;
    }
    for (i, s) in t.steps.iter().enumerate() {
        if s.is_terminal_kind() && i + 1 != t.len() {
            return false;
        }
        if let Some(target) = s.target() {
            if target >= cfg.state_count {
                return false;
            }
        }
    }
    true
}

/// Every valid continuation (possibly empty) of length at most `budget`.
pub(crate) fn continuations(cfg: &ModelConfig, budget: usize) -> Vec<Steps> {
    let mut out: Vec<Steps> = vec![Steps::new()];
    let mut frontier: Vec<Steps> = vec![Steps::new()];
    for _ in 0..budget {
        let mut next = Vec::new();
        for seq in &frontier {
            for term in [Step::ProgAbort, Step::EnvAbort, Step::Term] {
                let mut s = seq.clone();
                s.push(term);
                out.push(s);
            }
            for target in 0..cfg.state_count {
                for step in [Step::Prog(target), Step::Env(target)] {
                    let mut s = seq.clone();
                    s.push(step);
                    out.push(s.clone());
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    out
}

/// Enumerates every valid trace under `cfg`.
///
/// This is the bounded interpretation of the full trace set (and hence of the
/// lattice bottom). Rejects configurations whose universe would exceed the
/// size ceiling.
pub fn enumerate_universe(cfg: &ModelConfig) -> Result<TraceSet> {
    cfg.check_capacity()?;
    let mut out = TraceSet::new();
    for init in 0..cfg.state_count {
        for steps in continuations(cfg, cfg.length_bound as usize) {
            out.insert(Trace { init, steps });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: u8, l: u8) -> ModelConfig {
        ModelConfig::new(n, l).unwrap()
    }

    #[test]
    fn validity_basics() {
        let c = cfg(1, 2);
        assert!(valid_trace(&parse_trace("0:[p0,!]").unwrap(), &c));
        // terminal step not last
        assert!(!valid_trace(&parse_trace("0:[!,p0]").unwrap(), &c));
        // over the length bound
        assert!(!valid_trace(&parse_trace("0:[p0,p0,p0]").unwrap(), &c));
        // bad target
        assert!(!valid_trace(&parse_trace("0:[p1]").unwrap(), &c));
        // bad initial state
        assert!(!valid_trace(&parse_trace("1:[]").unwrap(), &c));
    }

    #[test]
    fn universe_small_counts() {
        let u = enumerate_universe(&cfg(1, 1)).unwrap();
        let expect: TraceSet = ["0:[]", "0:[!]", "0:[p0]", "0:[e0]", "0:[pX]", "0:[eX]"]
            .iter()
            .map(|s| parse_trace(s).unwrap())
            .collect();
        assert_eq!(u, expect);

        let u0 = enumerate_universe(&cfg(1, 0)).unwrap();
        assert_eq!(u0.len(), 1);
        assert!(u0.contains(&Trace::empty(0)));

        // golden count from direct enumeration
        assert_eq!(enumerate_universe(&cfg(2, 1)).unwrap().len(), 16);
    }

    #[test]
    fn universe_size_matches_enumeration() {
        for (n, l) in [(1u8, 1u8), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2)] {
            let c = cfg(n, l);
            assert_eq!(
                c.universe_size(),
                enumerate_universe(&c).unwrap().len() as u64,
                "config {c:?}"
            );
        }
    }

    #[test]
    fn capacity_guard() {
        let c = cfg(10, 9);
        assert!(matches!(
            enumerate_universe(&c),
            Err(crate::error::ModelError::Capacity { .. })
        ));
    }

    #[test]
    fn trace_text_round_trip() {
        for s in ["0:[]", "1:[p0,e1,!]", "0:[pX]", "2:[e0,eX]"] {
            assert_eq!(parse_trace(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn canonical_ordering_kind_order() {
        let c = cfg(2, 1);
        let mut v: Vec<Trace> = ["0:[e0]", "0:[!]", "0:[p1]", "0:[pX]", "0:[p0]", "0:[eX]"]
            .iter()
            .map(|s| parse_trace(s).unwrap())
            .collect();
        v.sort();
        let rendered: Vec<String> = v.iter().map(|t| t.to_string()).collect();
        assert_eq!(
            rendered,
            vec!["0:[p0]", "0:[p1]", "0:[e0]", "0:[pX]", "0:[eX]", "0:[!]"]
        );
        let _ = c;
    }
}
