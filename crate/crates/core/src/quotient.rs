//! The rely quotient `c // i`: the weakest command that, run in parallel
//! with the interference `i`, refines `c`.

use crate::config::ModelConfig;
use crate::error::Result;
use crate::lattice::Command;
use crate::operators::{par, seq};
use crate::relcmds::{fin_guar, precond, spec, StatePredicate, StateRelation};
use crate::trace::{enumerate_universe, Trace, TraceSet};

fn keeps_within(t: &Trace, i: &Command, c: &Command) -> bool {
    for u in i.traces().range(Trace::empty(t.init)..) {
        if u.init != t.init {
            break;
        }
        if let Some(m) = crate::operators::match_traces(t, u) {
            if !c.traces().contains(&m) {
                return false;
            }
        }
        if let Some(m) = crate::operators::match_preempt(t, u) {
            if !c.traces().contains(&m) {
                return false;
            }
        }
        if let Some(m) = crate::operators::match_preempt(u, t) {
            if !c.traces().contains(&m) {
                return false;
            }
        }
    }
    true
}

/// Greatest closed subset of `keep`: repeatedly delete traces whose prefix
/// is gone, and program-abort endings whose mandated extensions are gone.
pub(crate) fn prune_to_closed(mut keep: TraceSet, cfg: &ModelConfig) -> TraceSet {
    loop {
        let mut drop: Vec<Trace> = Vec::new();
        for t in &keep {
            if t.len() > 0 && !keep.contains(&t.drop_last()) {
                drop.push(t.clone());
                continue;
            }
            if t.ends_in_prog_abort() {
                let body = t.drop_last();
                let budget = cfg.length_bound as usize - body.len();
                let mandated = crate::trace::continuations(cfg, budget)
                    .into_iter()
                    .all(|cont| {
                        let mut steps = body.steps.clone();
                        steps.extend(cont);
                        keep.contains(&Trace {
                            init: body.init,
                            steps,
                        })
                    });
                if !mandated {
                    drop.push(t.clone());
                }
            }
        }
        if drop.is_empty() {
            return keep;
        }
        for t in drop {
            keep.remove(&t);
        }
    }
}

/// `c // i`: the least command `d` (in the refinement order) such that
/// `c ⊑ d ∥ i`. Computed by pruning the universe down to the traces all of
/// whose matches against `i` stay within `c`, then restoring closure by
/// deletion.
pub fn quotient(c: &Command, i: &Command) -> Result<Command> {
    c.config().same_as(i.config())?;
    let cfg = *c.config();
    let mut keep: TraceSet = enumerate_universe(&cfg)?
        .into_iter()
        .filter(|t| keeps_within(t, i, c))
        .collect();
    keep = prune_to_closed(keep, &cfg);
    // When `i` aborts immediately the pre-emption rule puts an immediate
    // program abort into every composition, so for `c` short of the aborting
    // command no `d` satisfies `c ⊑ d ∥ i` at that initial state: the pruning
    // removes even the empty trace. The join over an empty set of solutions
    // is the top of the lattice, so restore the empty traces rather than
    // return a set that is not a command.
    for s in 0..cfg.state_count {
        keep.insert(Trace::empty(s));
    }
    Ok(Command::from_closed(cfg, keep))
}

/// The defining equivalence: `c // i ⊑ d` exactly when `c ⊑ d ∥ i`.
pub fn galois_check(c: &Command, d: &Command, i: &Command) -> Result<bool> {
    let lhs = quotient(c, i)?.refines_to(d)?;
    let rhs = c.refines_to(&par(d, i)?)?;
    Ok(lhs == rhs)
}

/// `{p} ; (fin_guar g ⋒ (spec q // fin_guar r)) ⊑ c`: the rely-guarantee
/// quintuple judgement expressed as a refinement.
pub fn jones_quintuple(
    cfg: ModelConfig,
    p: &StatePredicate,
    r: &StateRelation,
    g: &StateRelation,
    q: &StateRelation,
    c: &Command,
) -> Result<bool> {
    let divided = quotient(&spec(cfg, q)?, &fin_guar(cfg, r)?)?;
    let body = crate::operators::conj(&fin_guar(cfg, g)?, &divided)?;
    seq(&precond(cfg, p)?, &body)?.refines_to(c)
}

/// Exhaustive reference: the union of every closed subset `d` of the
/// universe whose matches against `i` all land inside `c`.
pub fn quotient_oracle(c: &Command, i: &Command) -> Result<Command> {
    c.config().same_as(i.config())?;
    let cfg = *c.config();
    let universe = enumerate_universe(&cfg)?;
    let pool: Vec<Trace> = universe.iter().filter(|t| t.len() > 0).cloned().collect();
    assert!(
        pool.len() <= 21,
        "oracle is exponential in the universe size"
    );
    let empties: TraceSet = (0..cfg.state_count).map(Trace::empty).collect();
    let mut best = empties.clone();
    for mask in 0u32..(1 << pool.len()) {
        let mut cand = empties.clone();
        for (idx, t) in pool.iter().enumerate() {
            if mask >> idx & 1 == 1 {
                cand.insert(t.clone());
            }
        }
        if !crate::closure::is_closed(&cand, &cfg) {
            continue;
        }
        if cand.iter().all(|t| keeps_within(t, i, c)) {
            best.extend(cand);
        }
    }
    Ok(Command::from_closed(cfg, best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ModelConfig;
    use crate::operators::{conj, nil};
    use crate::relcmds::{atomic, chaos, guard, skip};

    fn cfg(n: u8, l: u8) -> ModelConfig {
        ModelConfig::new(n, l).unwrap()
    }

    #[test]
    fn quotient_by_skip_is_identity_like() {
        let c = cfg(2, 2);
        // i = skip contributes only environment steps, so d must carry all of
        // c's program steps itself
        let r = StateRelation::new(2, [(0, 1)]).unwrap();
        let a = atomic(c, &r).unwrap();
        let q = quotient(&a, &skip(c).unwrap()).unwrap();
        assert!(q.refines_to(&a).unwrap());
        // the quotient is the weakest such command
        assert!(a.refines_to(&par(&q, &skip(c).unwrap()).unwrap()).unwrap());
    }

    #[test]
    fn quotient_extremes() {
        let c = cfg(1, 2);
        let bot = Command::bottom(c).unwrap();
        let top = Command::top(c);
        // anything serves against an unconstrained target
        assert_eq!(quotient(&bot, &bot).unwrap(), bot);
        assert_eq!(quotient(&bot, &top).unwrap(), bot);
        // nothing helps reach magic when i can act
        assert_eq!(quotient(&top, &skip(c).unwrap()).unwrap(), top);
    }

    #[test]
    fn galois_equivalence_on_samples() {
        let c = cfg(1, 2);
        let samples = [
            Command::bottom(c).unwrap(),
            Command::top(c),
            nil(c),
            skip(c).unwrap(),
            chaos(c).unwrap(),
            atomic(c, &StateRelation::id(1)).unwrap(),
            guard(c, &StatePredicate::none(1)).unwrap(),
        ];
        for a in &samples {
            for d in &samples {
                for i in &samples {
                    assert!(galois_check(a, d, i).unwrap());
                }
            }
        }
    }

    #[test]
    fn matches_oracle_exhaustively_at_the_smallest_model() {
        let c = cfg(1, 1);
        // all closed commands over the 6-trace universe
        let universe = enumerate_universe(&c).unwrap();
        let pool: Vec<Trace> = universe.iter().filter(|t| t.len() > 0).cloned().collect();
        let mut all = Vec::new();
        for mask in 0u32..(1 << pool.len()) {
            let mut set: TraceSet = [Trace::empty(0)].into_iter().collect();
            for (idx, t) in pool.iter().enumerate() {
                if mask >> idx & 1 == 1 {
                    set.insert(t.clone());
                }
            }
            if crate::closure::is_closed(&set, &c) {
                all.push(Command::from_closed(c, set));
            }
        }
        assert!(all.len() > 4);
        for a in &all {
            for i in &all {
                assert_eq!(
                    quotient(a, i).unwrap(),
                    quotient_oracle(a, i).unwrap(),
                    "quotient of {:?} by {:?}",
                    a.traces(),
                    i.traces()
                );
            }
        }
    }

    #[test]
    fn matches_oracle_on_structured_pairs() {
        let c = cfg(1, 2);
        let pool = [
            Command::bottom(c).unwrap(),
            nil(c),
            skip(c).unwrap(),
            chaos(c).unwrap(),
            atomic(c, &StateRelation::id(1)).unwrap(),
            fin_guar(c, &StateRelation::id(1)).unwrap(),
        ];
        for a in &pool {
            for i in &pool {
                assert_eq!(quotient(a, i).unwrap(), quotient_oracle(a, i).unwrap());
            }
        }
    }

    #[test]
    fn quintuple_judgement() {
        let c = cfg(2, 2);
        let p = StatePredicate::all(2);
        let id = StateRelation::id(2);
        let univ = StateRelation::univ(2);
        let q = StateRelation::new(2, [(0, 1), (1, 1)]).unwrap();
        // the specification itself satisfies its own quintuple with the
        // stuttering rely
        let target = conj(
            &fin_guar(c, &univ).unwrap(),
            &quotient(&spec(c, &q).unwrap(), &fin_guar(c, &id).unwrap()).unwrap(),
        )
        .unwrap();
        assert!(jones_quintuple(c, &p, &id, &univ, &q, &target).unwrap());
        // chaos does not satisfy a non-trivial postcondition
        assert!(!jones_quintuple(c, &p, &id, &univ, &q, &chaos(c).unwrap()).unwrap());
    }
}
