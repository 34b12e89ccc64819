//! Sequential composition, parallel composition, weak conjunction and the
//! iteration operators.

use crate::closure::close;
use crate::config::ModelConfig;
use crate::error::Result;
use crate::lattice::{gfp, lfp, Command};
use crate::trace::{Step, Trace, TraceSet};

/// The identity of sequential composition: terminate immediately.
pub fn nil(cfg: ModelConfig) -> Command {
    let set: TraceSet = (0..cfg.state_count)
        .map(|s| Trace::new(s, [Step::Term]))
        .collect();
    Command::from_closed(cfg, close(&set, &cfg))
}

/// `c ; d`: behaviours of `c`, with terminated ones continued by a behaviour
/// of `d` starting in the final state. Splices longer than the length bound
/// are truncated, which leaves them unterminated.
pub fn seq(c: &Command, d: &Command) -> Result<Command> {
    c.config().same_as(d.config())?;
    let cfg = *c.config();
    let bound = cfg.length_bound as usize;
    let mut by_init: Vec<Vec<&Trace>> = vec![Vec::new(); cfg.state_count as usize];
    for u in d.traces() {
        by_init[u.init as usize].push(u);
    }
    let mut out = TraceSet::new();
    for t in c.traces() {
        if !t.is_terminated() {
            out.insert(t.clone());
            continue;
        }
        let body = t.drop_last();
        for u in &by_init[body.final_state() as usize] {
            let mut steps = body.steps.clone();
            steps.extend(u.steps.iter().cloned());
            // a terminal only occupies the last position of `u`, so a strict
            // truncation can never leave one stranded mid-trace
            steps.truncate(bound);
            out.insert(Trace {
                init: body.init,
                steps,
            });
        }
    }
    Ok(Command::from_closed(cfg, close(&out, &cfg)))
}

/// A program step of one process interleaves as an environment step of the
/// other; two environment steps agree; abort propagates from either side.
fn match_step(a: &Step, b: &Step) -> Option<Step> {
    use Step::*;
    match (a, b) {
        (Prog(s), Env(s2)) | (Env(s2), Prog(s)) if s == s2 => Some(Prog(*s)),
        (ProgAbort, EnvAbort) | (EnvAbort, ProgAbort) => Some(ProgAbort),
        (Env(s), Env(s2)) if s == s2 => Some(Env(*s)),
        (EnvAbort, EnvAbort) => Some(EnvAbort),
        (Term, Term) => Some(Term),
        _ => None,
    }
}

pub(crate) fn match_traces(t: &Trace, u: &Trace) -> Option<Trace> {
    if t.init != u.init || t.len() != u.len() {
        return None;
    }
    let mut steps = crate::trace::Steps::new();
    for (a, b) in t.steps.iter().zip(u.steps.iter()) {
        steps.push(match_step(a, b)?);
    }
    Some(Trace {
        init: t.init,
        steps,
    })
}

/// Pre-emption: when `t` aborts, the abort takes effect against any
/// partner that has survived the same number of steps, regardless of what
/// (if anything) the partner offers at the abort point. `u` must be the
/// partner's matched body: all internal steps and exactly one step shorter
/// than `t`.
///
/// Requiring instead that the partner offer a simultaneous environment
/// abort (the equal-length `π⊥`/`ε⊥` case of `match_traces`) is not
/// associative on arbitrary closed sets: the abort closure of a nested
/// composition erases the abort marker and its post-abort behaviours then
/// match a third process that never agreed to (or observed) the abort.
/// Step-for-step consent is restored by viewing every process as willing
/// to let its environment abort after any of its internal bodies, which is
/// exactly this rule. A consequence embraced here is that an aborting
/// process annihilates the whole composition — including the empty
/// process, since the zero-length body also consents.
pub(crate) fn match_preempt(t: &Trace, u: &Trace) -> Option<Trace> {
    if t.init != u.init || !t.ends_in_prog_abort() {
        return None;
    }
    let body_len = t.len() - 1;
    if u.len() != body_len || u.steps.iter().any(Step::is_terminal_kind) {
        return None;
    }
    let mut steps = crate::trace::Steps::new();
    for (a, b) in t.steps.iter().zip(u.steps.iter()) {
        steps.push(match_step(a, b)?);
    }
    steps.push(Step::ProgAbort);
    Some(Trace {
        init: t.init,
        steps,
    })
}

/// `c ∥ d`: pointwise matches of equal-length behaviours, plus pre-emptive
/// aborts of either side against the other's matched bodies.
pub fn par(c: &Command, d: &Command) -> Result<Command> {
    c.config().same_as(d.config())?;
    let cfg = *c.config();
    let mut out = TraceSet::new();
    for t in c.traces() {
        for u in d.traces().range(Trace::empty(t.init)..) {
            if u.init != t.init {
                break;
            }
            if let Some(m) = match_traces(t, u) {
                out.insert(m);
            }
            if let Some(m) = match_preempt(t, u) {
                out.insert(m);
            }
            if let Some(m) = match_preempt(u, t) {
                out.insert(m);
            }
        }
    }
    Ok(Command::from_closed(cfg, close(&out, &cfg)))
}

/// `c ⋒ d`: behaviours both agree on, except that a program abort of either
/// side pre-empts the other.
pub fn conj(c: &Command, d: &Command) -> Result<Command> {
    c.config().same_as(d.config())?;
    let cfg = *c.config();
    let mut out: TraceSet = c.traces().intersection(d.traces()).cloned().collect();
    for (a, b) in [(c, d), (d, c)] {
        for t in a.traces() {
            if t.ends_in_prog_abort() && b.traces().contains(&t.drop_last()) {
                out.insert(t.clone());
            }
        }
    }
    Ok(Command::from_closed(cfg, close(&out, &cfg)))
}

/// Finite iteration `c⋆`: greatest fixed point of `x ↦ nil ⊓ c;x`.
pub fn star(c: &Command) -> Result<Command> {
    let cfg = *c.config();
    let unit = nil(cfg);
    gfp(cfg, |x| unit.nondet(&seq(c, x)?))
}

/// Possibly-infinite iteration `c°`: least fixed point of the same function.
pub fn omega(c: &Command) -> Result<Command> {
    let cfg = *c.config();
    let unit = nil(cfg);
    lfp(cfg, |x| unit.nondet(&seq(c, x)?))
}

/// `c⋆ ; skip`: finite iteration absorbing trailing environment steps.
pub fn star_skip(c: &Command) -> Result<Command> {
    seq(&star(c)?, &crate::relcmds::skip(*c.config())?)
}

/// `c° ; skip`: iteration absorbing trailing environment steps.
pub fn omega_skip(c: &Command) -> Result<Command> {
    seq(&omega(c)?, &crate::relcmds::skip(*c.config())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::parse_trace;

    fn cfg(n: u8, l: u8) -> ModelConfig {
        ModelConfig::new(n, l).unwrap()
    }

    fn cmd(c: ModelConfig, ts: &[&str]) -> Command {
        let set = ts.iter().map(|s| parse_trace(s).unwrap()).collect();
        Command::from_traces(c, &set).unwrap()
    }

    #[test]
    fn seq_splices_at_termination() {
        let c = cfg(2, 3);
        let a = cmd(c, &["0:[p1,!]"]);
        let b = cmd(c, &["1:[p0,!]", "0:[p1,!]"]);
        let ab = seq(&a, &b).unwrap();
        assert!(ab.traces().contains(&parse_trace("0:[p1,p0,!]").unwrap()));
        // no splice from a non-matching final state
        assert!(!ab.traces().contains(&parse_trace("0:[p1,p1,!]").unwrap()));
    }

    #[test]
    fn seq_identity_and_annihilators() {
        let c = cfg(2, 2);
        let unit = nil(c);
        let a = cmd(c, &["0:[p1,!]", "1:[e0]"]);
        assert_eq!(seq(&a, &unit).unwrap(), a);
        assert_eq!(seq(&unit, &a).unwrap(), a);
        let bot = Command::bottom(c).unwrap();
        let top = Command::top(c);
        // abort is a left annihilator, via abort closure of the splice
        assert_eq!(seq(&bot, &top).unwrap(), bot);
        assert_eq!(seq(&bot, &a).unwrap(), bot);
        // magic never terminates, so nothing follows it
        assert_eq!(seq(&top, &bot).unwrap(), top);
    }

    #[test]
    fn seq_truncates_at_the_bound() {
        let c = cfg(1, 2);
        let a = cmd(c, &["0:[p0,!]"]);
        let ab = seq(&a, &a).unwrap();
        // the spliced [p0,p0,!] exceeds the bound; its truncation remains
        assert!(ab.traces().contains(&parse_trace("0:[p0,p0]").unwrap()));
        assert!(!ab.traces().iter().any(|t| t.len() > 2));
    }

    #[test]
    fn par_matches_program_with_environment() {
        let c = cfg(2, 2);
        let prog = cmd(c, &["0:[p1,!]"]);
        let env = cmd(c, &["0:[e1,!]"]);
        let both = par(&prog, &env).unwrap();
        assert!(both.traces().contains(&parse_trace("0:[p1,!]").unwrap()));
        // two program steps cannot synchronise
        let clash = par(&prog, &prog).unwrap();
        assert!(!clash.traces().iter().any(|t| t.len() > 0));
    }

    #[test]
    fn conj_agrees_except_for_abort() {
        let c = cfg(1, 2);
        let a = cmd(c, &["0:[p0,!]"]);
        let b = cmd(c, &["0:[p0,!]", "0:[e0,!]"]);
        assert_eq!(conj(&a, &b).unwrap(), a);
        let aborting = cmd(c, &["0:[p0,pX]"]);
        let joined = conj(&aborting, &a).unwrap();
        // abort in one side pre-empts the other once both agree up to it
        assert!(joined.traces().contains(&parse_trace("0:[p0,pX]").unwrap()));
        assert!(joined.traces().contains(&parse_trace("0:[p0,e0]").unwrap()));
    }

    #[test]
    fn iteration_of_a_single_step() {
        let c = cfg(1, 2);
        let step = cmd(c, &["0:[p0,!]"]);
        let fin = star(&step).unwrap();
        for t in ["0:[!]", "0:[p0,!]", "0:[p0,p0]"] {
            assert!(fin.traces().contains(&parse_trace(t).unwrap()), "{t}");
        }
        // in the bounded model every infinite behaviour is truncated, so the
        // two iteration operators coincide on this command
        assert_eq!(omega(&step).unwrap(), fin);
    }

    #[test]
    fn iteration_units() {
        let c = cfg(2, 2);
        let top = Command::top(c);
        assert_eq!(star(&top).unwrap(), nil(c));
        assert_eq!(omega(&top).unwrap(), nil(c));
        let bot = Command::bottom(c).unwrap();
        assert_eq!(star(&bot).unwrap(), nil(c).nondet(&seq(&bot, &bot).unwrap()).unwrap());
    }
}
