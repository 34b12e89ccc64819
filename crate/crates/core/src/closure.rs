//! Prefix and abort closure of trace sets.
//!
//! A command is a trace set closed under both operators. Abort closure is
//! computed within the bounded universe: a trace ending in a program abort
//! forces every valid bounded extension of its body into the set. Environment
//! abort does not trigger closure.

use crate::config::ModelConfig;
use crate::trace::{continuations, Trace, TraceSet};

/// Smallest prefix-closed superset: all `(σ,[])` plus every trace prefix.
pub fn prefix_close(s: &TraceSet, cfg: &ModelConfig) -> TraceSet {
    let mut out = TraceSet::new();
    for init in 0..cfg.state_count {
        out.insert(Trace::empty(init));
    }
    for t in s {
        for k in (1..=t.len()).rev() {
            if !out.insert(t.prefix(k)) {
                break;
            }
        }
        out.insert(Trace::empty(t.init));
    }
    out
}

/// Smallest abort-closed superset within the bounded universe.
pub fn abort_close(s: &TraceSet, cfg: &ModelConfig) -> TraceSet {
    let mut out = s.clone();
    for t in s {
        if !t.ends_in_prog_abort() {
            continue;
        }
        let body = t.drop_last();
        let budget = cfg.length_bound as usize - body.len();
        for cont in continuations(cfg, budget) {
            let mut steps = body.steps.clone();
            steps.extend(cont);
            out.insert(Trace {
                init: body.init,
                steps,
            });
        }
    }
    out
}

/// Least fixed point of alternating prefix and abort closure.
pub fn close(s: &TraceSet, cfg: &ModelConfig) -> TraceSet {
    let mut cur = prefix_close(&abort_close(s, cfg), cfg);
    loop {
        let next = prefix_close(&abort_close(&cur, cfg), cfg);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Both closure invariants hold.
pub fn is_closed(s: &TraceSet, cfg: &ModelConfig) -> bool {
    for init in 0..cfg.state_count {
        if !s.contains(&Trace::empty(init)) {
            return false;
        }
    }
    for t in s {
        if t.len() > 0 && !s.contains(&t.drop_last()) {
            return false;
        }
    }
    // abort condition: delegate to a single closure pass
    abort_close(s, cfg).len() == s.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::{enumerate_universe, parse_trace, valid_trace};

    fn cfg(n: u8, l: u8) -> ModelConfig {
        ModelConfig::new(n, l).unwrap()
    }

    fn set(ts: &[&str]) -> TraceSet {
        ts.iter().map(|s| parse_trace(s).unwrap()).collect()
    }

    #[test]
    fn prefix_close_examples() {
        assert_eq!(prefix_close(&set(&[]), &cfg(2, 2)), set(&["0:[]", "1:[]"]));
        assert_eq!(
            prefix_close(&set(&["0:[p0,!]"]), &cfg(1, 2)),
            set(&["0:[]", "0:[p0]", "0:[p0,!]"])
        );
        assert_eq!(
            prefix_close(&set(&["0:[e1]"]), &cfg(2, 2)),
            set(&["0:[]", "1:[]", "0:[e1]"])
        );
    }

    #[test]
    fn abort_close_examples() {
        let c = cfg(1, 1);
        let closed = abort_close(&set(&["0:[pX]"]), &c);
        assert_eq!(closed, enumerate_universe(&c).unwrap());

        let no_abort = set(&["0:[p0,!]", "0:[p0]", "0:[]"]);
        assert_eq!(abort_close(&no_abort, &cfg(1, 2)), no_abort);

        let c3 = cfg(1, 3);
        let closed3 = abort_close(&set(&["0:[p0,pX]"]), &c3);
        for t in &closed3 {
            assert!(valid_trace(t, &c3));
            if t.to_string() != "0:[p0,pX]" {
                assert!(t.steps.first() == Some(&crate::trace::Step::Prog(0)));
            }
        }
        // every continuation of `0:[p0,...]` up to length 3 is present
        assert!(closed3.contains(&parse_trace("0:[p0,e0,eX]").unwrap()));
        assert!(closed3.contains(&parse_trace("0:[p0,p0,!]").unwrap()));
        assert!(closed3.contains(&parse_trace("0:[p0]").unwrap()));
    }

    #[test]
    fn close_examples() {
        let c = cfg(2, 2);
        // close of the empty set is the magic command
        assert_eq!(close(&set(&[]), &c), set(&["0:[]", "1:[]"]));
        // the universe is already closed
        let u = enumerate_universe(&c).unwrap();
        assert_eq!(close(&u, &c), u);
        // no aborts: prefix closure only
        assert_eq!(
            close(&set(&["0:[p0,!]"]), &cfg(1, 2)),
            set(&["0:[]", "0:[p0]", "0:[p0,!]"])
        );
    }

    #[test]
    fn closure_properties() {
        let c = cfg(2, 2);
        let samples = [
            set(&["0:[pX]"]),
            set(&["0:[p1,pX]", "1:[e0,!]"]),
            set(&["1:[eX]", "0:[p0,e1]"]),
        ];
        for s in &samples {
            let once = close(s, &c);
            // extensive, idempotent, closed
            assert!(once.is_superset(s));
            assert_eq!(close(&once, &c), once);
            assert!(is_closed(&once, &c));
            for t in &once {
                assert!(valid_trace(t, &c));
            }
        }
        // monotone
        let small = close(&samples[0], &c);
        let mut union = samples[0].clone();
        union.extend(samples[1].iter().cloned());
        assert!(close(&union, &c).is_superset(&small));
    }
}
