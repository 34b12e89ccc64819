//! Commands built from state relations and predicates: atomic steps, guards,
//! preconditions, environment assumptions, guarantees and specifications.

use std::collections::BTreeMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::closure::close;
use crate::config::ModelConfig;
use crate::error::{ModelError, Result};
use crate::lattice::Command;
use crate::operators::{nil, omega, omega_skip, seq, star_skip};
use crate::trace::{State, Step, Trace, TraceSet};

/// A set of states over a fixed finite state space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StatePredicate {
    state_count: u8,
    members: Vec<State>,
}

impl StatePredicate {
    pub fn new(state_count: u8, members: impl IntoIterator<Item = State>) -> Result<Self> {
        let mut ms: Vec<State> = members.into_iter().collect();
        ms.sort_unstable();
        ms.dedup();
        if ms.iter().any(|&s| s >= state_count) {
            return Err(ModelError::Invalid(format!(
                "predicate member out of range for {state_count} states"
            )));
        }
        Ok(StatePredicate {
            state_count,
            members: ms,
        })
    }

    pub fn all(state_count: u8) -> Self {
        StatePredicate {
            state_count,
            members: (0..state_count).collect(),
        }
    }

    pub fn none(state_count: u8) -> Self {
        StatePredicate {
            state_count,
            members: Vec::new(),
        }
    }

    pub fn state_count(&self) -> u8 {
        self.state_count
    }

    pub fn contains(&self, s: State) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = State> + '_ {
        self.members.iter().copied()
    }

    pub fn complement(&self) -> Self {
        StatePredicate {
            state_count: self.state_count,
            members: (0..self.state_count).filter(|&s| !self.contains(s)).collect(),
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        StatePredicate {
            state_count: self.state_count,
            members: self.members.iter().copied().filter(|&s| other.contains(s)).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut ms = self.members.clone();
        ms.extend(other.members.iter().copied());
        ms.sort_unstable();
        ms.dedup();
        StatePredicate {
            state_count: self.state_count,
            members: ms,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.members.iter().all(|&s| other.contains(s))
    }

    /// All `2^N` predicates, in a fixed order.
    pub fn enumerate(state_count: u8) -> Vec<Self> {
        let n = state_count as u32;
        (0..(1u32 << n))
            .map(|bits| StatePredicate {
                state_count,
                members: (0..state_count).filter(|s| bits >> s & 1 == 1).collect(),
            })
            .collect()
    }
}

/// A binary relation on states over a fixed finite state space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StateRelation {
    state_count: u8,
    pairs: Vec<(State, State)>,
}

impl StateRelation {
    pub fn new(
        state_count: u8,
        pairs: impl IntoIterator<Item = (State, State)>,
    ) -> Result<Self> {
        let mut ps: Vec<(State, State)> = pairs.into_iter().collect();
        ps.sort_unstable();
        ps.dedup();
        if ps.iter().any(|&(a, b)| a >= state_count || b >= state_count) {
            return Err(ModelError::Invalid(format!(
                "relation pair out of range for {state_count} states"
            )));
        }
        Ok(StateRelation {
            state_count,
            pairs: ps,
        })
    }

    pub fn id(state_count: u8) -> Self {
        StateRelation {
            state_count,
            pairs: (0..state_count).map(|s| (s, s)).collect(),
        }
    }

    pub fn univ(state_count: u8) -> Self {
        let mut pairs = Vec::new();
        for a in 0..state_count {
            for b in 0..state_count {
                pairs.push((a, b));
            }
        }
        StateRelation { state_count, pairs }
    }

    pub fn none(state_count: u8) -> Self {
        StateRelation {
            state_count,
            pairs: Vec::new(),
        }
    }

    pub fn state_count(&self) -> u8 {
        self.state_count
    }

    pub fn contains(&self, a: State, b: State) -> bool {
        self.pairs.binary_search(&(a, b)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (State, State)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn complement(&self) -> Self {
        let mut pairs = Vec::new();
        for a in 0..self.state_count {
            for b in 0..self.state_count {
                if !self.contains(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        StateRelation {
            state_count: self.state_count,
            pairs,
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        StateRelation {
            state_count: self.state_count,
            pairs: self
                .pairs
                .iter()
                .copied()
                .filter(|&(a, b)| other.contains(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut pairs = self.pairs.clone();
        pairs.extend(other.pairs.iter().copied());
        pairs.sort_unstable();
        pairs.dedup();
        StateRelation {
            state_count: self.state_count,
            pairs,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.pairs.iter().all(|&(a, b)| other.contains(a, b))
    }

    /// The image of a single state.
    pub fn image(&self, s: State) -> StatePredicate {
        StatePredicate {
            state_count: self.state_count,
            members: self
                .pairs
                .iter()
                .copied()
                .filter(|&(a, _)| a == s)
                .map(|(_, b)| b)
                .collect(),
        }
    }

    /// All `2^(N²)` relations, in a fixed order.
    pub fn enumerate(state_count: u8) -> Vec<Self> {
        let n = state_count as u32;
        let all: Vec<(State, State)> = Self::univ(state_count).pairs;
        (0..(1u64 << (n * n)))
            .map(|bits| StateRelation {
                state_count,
                pairs: all
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect(),
            })
            .collect()
    }
}

fn check_states(cfg: &ModelConfig, state_count: u8) -> Result<()> {
    if cfg.state_count != state_count {
        return Err(ModelError::ConfigMismatch(
            format!("{} states", cfg.state_count),
            format!("relation or predicate over {state_count} states"),
        ));
    }
    Ok(())
}

/// A single program step related by `r`, then termination.
pub fn pstep(cfg: ModelConfig, r: &StateRelation) -> Result<Command> {
    check_states(&cfg, r.state_count)?;
    let set: TraceSet = r
        .iter()
        .map(|(a, b)| Trace::new(a, [Step::Prog(b), Step::Term]))
        .collect();
    Ok(Command::from_closed(cfg, close(&set, &cfg)))
}

/// A single environment step related by `r`, then termination.
pub fn estep(cfg: ModelConfig, r: &StateRelation) -> Result<Command> {
    check_states(&cfg, r.state_count)?;
    let set: TraceSet = r
        .iter()
        .map(|(a, b)| Trace::new(a, [Step::Env(b), Step::Term]))
        .collect();
    Ok(Command::from_closed(cfg, close(&set, &cfg)))
}

/// An environment step related by `r`, or an aborting environment step.
pub fn estep_abort(cfg: ModelConfig, r: &StateRelation) -> Result<Command> {
    let base = estep(cfg, r)?;
    let aborts: TraceSet = (0..cfg.state_count)
        .map(|s| Trace::new(s, [Step::EnvAbort]))
        .collect();
    Ok(base.nondet(&Command::from_closed(cfg, close(&aborts, &cfg)))?)
}

/// Terminate immediately, but only from states satisfying `p`.
pub fn guard(cfg: ModelConfig, p: &StatePredicate) -> Result<Command> {
    check_states(&cfg, p.state_count)?;
    let set: TraceSet = p.iter().map(|s| Trace::new(s, [Step::Term])).collect();
    Ok(Command::from_closed(cfg, close(&set, &cfg)))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum CacheKey {
    Skip,
    Chaos,
    Term,
    Atomic(Vec<(State, State)>),
    FinGuar(Vec<(State, State)>),
    InfGuar(Vec<(State, State)>),
    EnvAssume(Vec<(State, State)>),
    Spec(Vec<(State, State)>),
}

static CACHE: Lazy<Mutex<BTreeMap<(ModelConfig, CacheKey), Command>>> =
    Lazy::new(|| Mutex::new(BTreeMap::new()));

fn cached(
    cfg: ModelConfig,
    key: CacheKey,
    build: impl FnOnce() -> Result<Command>,
) -> Result<Command> {
    if let Some(c) = CACHE.lock().unwrap().get(&(cfg, key.clone())) {
        return Ok(c.clone());
    }
    let built = build()?;
    CACHE
        .lock()
        .unwrap()
        .entry((cfg, key))
        .or_insert_with(|| built.clone());
    Ok(built)
}

/// The identity of parallel composition: no program steps, any environment
/// steps, including an aborting one.
pub fn skip(cfg: ModelConfig) -> Result<Command> {
    cached(cfg, CacheKey::Skip, || {
        omega(&estep_abort(cfg, &StateRelation::univ(cfg.state_count))?)
    })
}

/// `skip ; ⟨r⟩ ; skip`: one program step related by `r`, with arbitrary
/// environment steps around it.
pub fn atomic(cfg: ModelConfig, r: &StateRelation) -> Result<Command> {
    check_states(&cfg, r.state_count)?;
    let key = CacheKey::Atomic(r.iter().collect());
    let r = r.clone();
    cached(cfg, key, move || {
        seq(&seq(&skip(cfg)?, &pstep(cfg, &r)?)?, &skip(cfg)?)
    })
}

/// The precondition command: behave as `nil` from states satisfying `p`,
/// abort from the rest.
pub fn precond(cfg: ModelConfig, p: &StatePredicate) -> Result<Command> {
    let ok = guard(cfg, p)?;
    let fail = seq(&guard(cfg, &p.complement())?, &Command::bottom(cfg)?)?;
    ok.nondet(&fail)
}

/// The environment assumption: any behaviour while the environment stays
/// within `r`, aborting blame-free on the first environment step outside it.
pub fn envc(cfg: ModelConfig, r: &StateRelation) -> Result<Command> {
    check_states(&cfg, r.state_count)?;
    let key = CacheKey::EnvAssume(r.iter().collect());
    let r = r.clone();
    cached(cfg, key, move || {
        let any_prog = pstep(cfg, &StateRelation::univ(cfg.state_count))?;
        let body = omega(&any_prog.nondet(&estep_abort(cfg, &r)?)?)?;
        let breach = seq(&estep(cfg, &r.complement())?, &Command::bottom(cfg)?)?;
        seq(&body, &nil(cfg).nondet(&breach)?)
    })
}

/// Finitely many atomic program steps satisfying `g`, any environment steps.
pub fn fin_guar(cfg: ModelConfig, g: &StateRelation) -> Result<Command> {
    check_states(&cfg, g.state_count)?;
    let key = CacheKey::FinGuar(g.iter().collect());
    let g = g.clone();
    cached(cfg, key, move || star_skip(&atomic(cfg, &g)?))
}

/// As `fin_guar` but not required to stop iterating.
pub fn inf_guar(cfg: ModelConfig, g: &StateRelation) -> Result<Command> {
    check_states(&cfg, g.state_count)?;
    let key = CacheKey::InfGuar(g.iter().collect());
    let g = g.clone();
    cached(cfg, key, move || omega_skip(&atomic(cfg, &g)?))
}

/// Any non-aborting behaviour.
pub fn chaos(cfg: ModelConfig) -> Result<Command> {
    cached(cfg, CacheKey::Chaos, || {
        inf_guar(cfg, &StateRelation::univ(cfg.state_count))
    })
}

/// Any non-aborting behaviour with finitely many program steps.
pub fn term(cfg: ModelConfig) -> Result<Command> {
    cached(cfg, CacheKey::Term, || {
        fin_guar(cfg, &StateRelation::univ(cfg.state_count))
    })
}

/// The postcondition specification: terminate with initial and final states
/// related by `q`, assuming the environment does not change the state.
pub fn spec(cfg: ModelConfig, q: &StateRelation) -> Result<Command> {
    check_states(&cfg, q.state_count)?;
    let key = CacheKey::Spec(q.iter().collect());
    let q = q.clone();
    cached(cfg, key, move || {
        let end = term(cfg)?;
        let mut acc = Command::top(cfg);
        for s in 0..cfg.state_count {
            let here = guard(cfg, &StatePredicate::new(cfg.state_count, [s])?)?;
            let post = guard(cfg, &q.image(s))?;
            acc = acc.nondet(&seq(&seq(&here, &end)?, &post)?)?;
        }
        crate::operators::conj(&acc, &envc(cfg, &StateRelation::id(cfg.state_count))?)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{conj, par};
    use crate::trace::parse_trace;

    fn cfg(n: u8, l: u8) -> ModelConfig {
        ModelConfig::new(n, l).unwrap()
    }

    fn has(c: &Command, t: &str) -> bool {
        c.traces().contains(&parse_trace(t).unwrap())
    }

    #[test]
    fn single_step_commands() {
        let c = cfg(2, 2);
        let r = StateRelation::new(2, [(0, 1)]).unwrap();
        let p = pstep(c, &r).unwrap();
        assert!(has(&p, "0:[p1,!]") && has(&p, "0:[p1]") && has(&p, "0:[]"));
        assert!(!has(&p, "1:[p1,!]") && !has(&p, "0:[p0,!]"));
        let e = estep(c, &r).unwrap();
        assert!(has(&e, "0:[e1,!]") && !has(&e, "0:[p1,!]"));
        let ex = estep_abort(c, &r).unwrap();
        assert!(has(&ex, "0:[e1,!]") && has(&ex, "0:[eX]") && has(&ex, "1:[eX]"));
        // environment abort does not trigger abort closure
        assert!(!has(&ex, "1:[p0]"));
    }

    #[test]
    fn guard_and_nil() {
        let c = cfg(2, 2);
        let p = StatePredicate::new(2, [0]).unwrap();
        let g = guard(c, &p).unwrap();
        assert!(has(&g, "0:[!]") && !has(&g, "1:[!]") && has(&g, "1:[]"));
        assert_eq!(guard(c, &StatePredicate::all(2)).unwrap(), nil(c));
    }

    #[test]
    fn skip_is_environment_only() {
        let c = cfg(2, 2);
        let s = skip(c).unwrap();
        for t in ["0:[]", "0:[e1]", "0:[e1,e0]", "0:[e1,!]", "0:[!]", "1:[eX]", "0:[e0,eX]"] {
            assert!(has(&s, t), "{t}");
        }
        assert!(s.traces().iter().all(|t| t
            .steps
            .iter()
            .all(|st| !matches!(st, Step::Prog(_) | Step::ProgAbort))));
        // parallel identity
        let r = StateRelation::new(2, [(0, 1), (1, 1)]).unwrap();
        let a = atomic(c, &r).unwrap();
        assert_eq!(par(&a, &s).unwrap(), a);
    }

    #[test]
    fn atomic_allows_surrounding_interference() {
        let c = cfg(2, 3);
        let r = StateRelation::new(2, [(0, 1)]).unwrap();
        let a = atomic(c, &r).unwrap();
        assert!(has(&a, "0:[p1,!]"));
        assert!(has(&a, "1:[e0,p1,!]"));
        assert!(has(&a, "0:[p1,e0,!]"));
        assert!(!has(&a, "0:[p0,!]"));
        // program step before termination is mandatory
        assert!(!has(&a, "0:[!]"));
    }

    #[test]
    fn precondition_aborts_outside_p() {
        let c = cfg(2, 2);
        let p = StatePredicate::new(2, [0]).unwrap();
        let pre = precond(c, &p).unwrap();
        assert!(has(&pre, "0:[!]") && !has(&pre, "0:[p1,!]"));
        // from state 1 anything goes
        assert!(has(&pre, "1:[p0,pX]") && has(&pre, "1:[!]"));
        assert_eq!(precond(c, &StatePredicate::all(2)).unwrap(), nil(c));
        assert_eq!(
            precond(c, &StatePredicate::none(2)).unwrap(),
            Command::bottom(c).unwrap()
        );
    }

    #[test]
    fn envc_blames_environment_breach() {
        let c = cfg(2, 2);
        let e = envc(c, &StateRelation::id(2)).unwrap();
        // stays within the assumption: program free, environment stuttering
        assert!(has(&e, "0:[p1,p0]") && has(&e, "0:[e0,p1]") && has(&e, "0:[!]"));
        // a breaching environment step opens all behaviour
        assert!(has(&e, "0:[e1,p0]") && has(&e, "0:[e1,pX]"));
        // but nothing forces a breach that has not happened
        assert!(!has(&e, "0:[pX]"));
    }

    #[test]
    fn guarantees_and_chaos() {
        let c = cfg(2, 2);
        let g = StateRelation::id(2);
        let fin = fin_guar(c, &g).unwrap();
        assert!(has(&fin, "0:[p0,!]") && has(&fin, "0:[p0,p0]") && has(&fin, "0:[e1,!]"));
        assert!(!has(&fin, "0:[p1]"));
        let ch = chaos(c).unwrap();
        assert!(has(&ch, "0:[p1,p0]") && !has(&ch, "0:[pX]"));
        // conjunction identity
        let r = StateRelation::new(2, [(0, 1)]).unwrap();
        let a = atomic(c, &r).unwrap();
        assert_eq!(conj(&a, &ch).unwrap(), a);
        // term refines chaos
        assert!(ch.refines_to(&term(c).unwrap()).unwrap());
    }

    #[test]
    fn spec_relates_initial_to_final_state() {
        let c = cfg(2, 2);
        let q = StateRelation::new(2, [(0, 1)]).unwrap();
        let sp = spec(c, &q).unwrap();
        assert!(has(&sp, "0:[p1,!]"));
        assert!(!has(&sp, "0:[p0,!]") && !has(&sp, "1:[p0,!]"));
        // stuttering environment steps are tolerated
        assert!(has(&sp, "0:[e0,p1]"));
        // infeasible unterminated traces from any start
        assert!(has(&sp, "1:[p0]") && has(&sp, "1:[]"));
    }
}
