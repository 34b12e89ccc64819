//! The complete lattice of commands under the refinement order.
//!
//! A command is a closed trace set. Refinement `c ⊑ d` holds when every trace
//! of `d` is a trace of `c`: the more refined command allows fewer behaviours.
//! Consequently the lattice bottom is the universe of all traces and the top
//! is the infeasible command holding only empty traces.

use crate::closure::{close, is_closed};
use crate::config::ModelConfig;
use crate::error::{ModelError, Result};
use crate::trace::{enumerate_universe, Trace, TraceSet};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Command {
    cfg: ModelConfig,
    traces: TraceSet,
}

impl Command {
    /// Close `traces` and wrap the result.
    pub fn from_traces(cfg: ModelConfig, traces: &TraceSet) -> Result<Command> {
        for t in traces {
            if !crate::trace::valid_trace(t, &cfg) {
                return Err(ModelError::Invalid(format!(
                    "trace {t} is not valid for the configuration"
                )));
            }
        }
        Ok(Command {
            cfg,
            traces: close(traces, &cfg),
        })
    }

    /// Wrap an already-closed set without re-closing (debug-asserted).
    pub(crate) fn from_closed(cfg: ModelConfig, traces: TraceSet) -> Command {
        debug_assert!(is_closed(&traces, &cfg));
        Command { cfg, traces }
    }

    /// The lattice bottom: every valid trace. Refined by everything.
    pub fn bottom(cfg: ModelConfig) -> Result<Command> {
        Ok(Command {
            traces: enumerate_universe(&cfg)?,
            cfg,
        })
    }

    /// The lattice top: the infeasible command, only empty traces.
    pub fn top(cfg: ModelConfig) -> Command {
        let traces = (0..cfg.state_count).map(Trace::empty).collect();
        Command { cfg, traces }
    }

    pub fn config(&self) -> &ModelConfig {
        &self.cfg
    }

    pub fn traces(&self) -> &TraceSet {
        &self.traces
    }

    pub fn trace_count(&self) -> usize {
        self.traces.len()
    }

    /// `self ⊑ other`: every behaviour of `other` is a behaviour of `self`.
    pub fn refines_to(&self, other: &Command) -> Result<bool> {
        self.cfg.same_as(&other.cfg)?;
        Ok(other.traces.is_subset(&self.traces))
    }

    /// Binary non-deterministic choice `⊓`: union of behaviours.
    pub fn nondet(&self, other: &Command) -> Result<Command> {
        self.cfg.same_as(&other.cfg)?;
        let mut traces = self.traces.clone();
        traces.extend(other.traces.iter().cloned());
        // union of closed sets is closed
        Ok(Command::from_closed(self.cfg, traces))
    }

    /// Binary supremum `⊔`: intersection of behaviours.
    pub fn supremum(&self, other: &Command) -> Result<Command> {
        self.cfg.same_as(&other.cfg)?;
        let traces: TraceSet = self.traces.intersection(&other.traces).cloned().collect();
        // intersection of closed sets is closed
        Ok(Command::from_closed(self.cfg, traces))
    }

    /// Choice over a set of commands; empty choice is the top.
    pub fn nondet_all<'a, I>(cfg: ModelConfig, cs: I) -> Result<Command>
    where
        I: IntoIterator<Item = &'a Command>,
    {
        let mut acc = Command::top(cfg);
        for c in cs {
            acc = acc.nondet(c)?;
        }
        Ok(acc)
    }

    /// Supremum of a set of commands; empty supremum is the bottom.
    pub fn supremum_all<'a, I>(cfg: ModelConfig, cs: I) -> Result<Command>
    where
        I: IntoIterator<Item = &'a Command>,
    {
        let mut acc = Command::bottom(cfg)?;
        for c in cs {
            acc = acc.supremum(c)?;
        }
        Ok(acc)
    }
}

/// True iff `f` preserves refinement on every ordered pair drawn from `pool`.
pub fn is_monotone_on_pool<F>(f: F, pool: &[Command]) -> Result<bool>
where
    F: Fn(&Command) -> Result<Command>,
{
    for c in pool {
        for d in pool {
            if c.refines_to(d)? && !f(c)?.refines_to(&f(d)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Kleene iteration to the least fixed point of `f`, starting from the
/// lattice bottom. Errors if `f` is not ascending (not monotone) or the
/// iteration fails to stabilise within `|universe| + 1` steps.
pub fn lfp<F>(cfg: ModelConfig, f: F) -> Result<Command>
where
    F: Fn(&Command) -> Result<Command>,
{
    iterate(Command::bottom(cfg)?, f, true)
}

/// Kleene iteration to the greatest fixed point of `f`, from the top.
pub fn gfp<F>(cfg: ModelConfig, f: F) -> Result<Command>
where
    F: Fn(&Command) -> Result<Command>,
{
    iterate(Command::top(cfg), f, false)
}

fn iterate<F>(start: Command, f: F, ascending: bool) -> Result<Command>
where
    F: Fn(&Command) -> Result<Command>,
{
    let bound = start.cfg.universe_size() as usize + 1;
    let mut cur = start;
    for _ in 0..bound {
        let next = f(&cur)?;
        if next == cur {
            return Ok(cur);
        }
        let ok = if ascending {
            cur.refines_to(&next)?
        } else {
            next.refines_to(&cur)?
        };
        if !ok {
            return Err(ModelError::MonotonicityViolation { bound });
        }
        cur = next;
    }
    Err(ModelError::MonotonicityViolation { bound })
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
    fn order_extremes() {
        let c = cfg(2, 2);
        let bot = Command::bottom(c).unwrap();
        let top = Command::top(c);
        let mid = cmd(c, &["0:[p1,!]"]);
        for x in [&bot, &top, &mid] {
            assert!(bot.refines_to(x).unwrap());
            assert!(x.refines_to(&top).unwrap());
            assert!(x.refines_to(x).unwrap());
        }
        assert!(!top.refines_to(&bot).unwrap());
        assert!(!mid.refines_to(&bot).unwrap());
    }

    #[test]
    fn choice_and_supremum_are_lattice_ops() {
        let c = cfg(2, 2);
        let a = cmd(c, &["0:[p1,!]", "1:[e0]"]);
        let b = cmd(c, &["0:[p1]", "0:[p0]"]);
        let join = a.nondet(&b).unwrap();
        let meet = a.supremum(&b).unwrap();
        // infimum is the greatest lower bound
        assert!(join.refines_to(&a).unwrap());
        assert!(join.refines_to(&b).unwrap());
        // supremum is the least upper bound
        assert!(a.refines_to(&meet).unwrap());
        assert!(b.refines_to(&meet).unwrap());
        // both stay closed (construction would panic in debug otherwise)
        assert_eq!(a.nondet(&a).unwrap(), a);
        assert_eq!(a.supremum(&a).unwrap(), a);
        assert_eq!(meet.nondet(&join).unwrap(), join);
    }

    #[test]
    fn empty_quantified_forms() {
        let c = cfg(1, 2);
        assert_eq!(
            Command::nondet_all(c, std::iter::empty()).unwrap(),
            Command::top(c)
        );
        assert_eq!(
            Command::supremum_all(c, std::iter::empty()).unwrap(),
            Command::bottom(c).unwrap()
        );
    }

    #[test]
    fn fixed_points_of_constant_and_identity() {
        let c = cfg(1, 2);
        let k = cmd(c, &["0:[p0,!]"]);
        let k2 = k.clone();
        assert_eq!(lfp(c, |_| Ok(k.clone())).unwrap(), k2);
        assert_eq!(gfp(c, |_| Ok(k.clone())).unwrap(), k2);
        // identity: lfp is bottom, gfp is top
        assert_eq!(lfp(c, |x| Ok(x.clone())).unwrap(), Command::bottom(c).unwrap());
        assert_eq!(gfp(c, |x| Ok(x.clone())).unwrap(), Command::top(c));
    }

    #[test]
    fn config_mismatch_is_rejected() {
        let a = Command::top(cfg(1, 2));
        let b = Command::top(cfg(2, 2));
        assert!(a.nondet(&b).is_err());
        assert!(a.refines_to(&b).is_err());
    }
}
