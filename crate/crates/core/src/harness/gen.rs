//! Deterministic generation of the value pools that law checking draws from.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::config::ModelConfig;
use crate::closure::close;
use crate::error::Result;
use crate::lang::{eval, parse, Binding, Value};
use crate::lattice::Command;
use crate::relcmds::{StatePredicate, StateRelation};
use crate::trace::{enumerate_universe, Trace, TraceSet};

/// What goes into the command pool. Case budgets are decided separately:
/// exhaustive when the case product is small enough, sampled otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Mode {
    /// Every term of the expression language up to the depth bound.
    #[serde(rename = "exhaustive-pool")]
    ExhaustivePool,
    /// The term pool plus seeded random closed trace sets.
    #[serde(rename = "random")]
    Random,
}

/// Parameters controlling pool construction and case budgets.
#[derive(Debug, Clone)]
pub struct GenConfig {
    pub cfg: ModelConfig,
    /// Maximum operator nesting depth of generated terms.
    pub term_depth: u32,
    /// Relations used to instantiate the relational atoms of generated terms.
    pub relation_alphabet: Vec<StateRelation>,
    /// Samples per law when not exhaustive.
    pub sample_count: u64,
    pub seed: u64,
    pub mode: Mode,
}

/// Case spaces at most this large are enumerated exhaustively in `Auto` mode.
pub const EXHAUSTIVE_BUDGET: u128 = 200_000;

/// Number of seeded random closed commands added to the pool.
const RANDOM_COMMANDS: usize = 8;

impl GenConfig {
    /// A sensible default alphabet: the identity, the universal relation, and
    /// one asymmetric relation when there are at least two states.
    pub fn default_for(cfg: ModelConfig, sample_count: u64, seed: u64) -> Self {
        let n = cfg.state_count;
        let mut relation_alphabet = vec![StateRelation::id(n), StateRelation::univ(n)];
        if n >= 2 {
            relation_alphabet.push(StateRelation::new(n, [(0, 1)]).unwrap());
        } else {
            relation_alphabet.push(StateRelation::none(n));
        }
        GenConfig {
            cfg,
            term_depth: 2,
            relation_alphabet,
            sample_count,
            seed,
            mode: Mode::Random,
        }
    }
}

/// One pooled command: a human-readable origin and its denotation.
#[derive(Debug, Clone)]
pub struct PoolItem {
    pub text: String,
    pub value: Command,
}

/// The instantiation domains for metavariables of each sort.
#[derive(Debug, Clone)]
pub struct Pool {
    pub commands: Vec<PoolItem>,
    pub relations: Vec<StateRelation>,
    pub predicates: Vec<StatePredicate>,
}

fn atom_texts(gc: &GenConfig) -> Vec<String> {
    let mut texts: Vec<String> = ["bot", "top", "nil", "skip", "chaos", "term"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for (k, _) in gc.relation_alphabet.iter().enumerate() {
        for f in ["pi", "eps", "epsx", "atomic", "envc", "spec", "fin", "inf"] {
            texts.push(format!("{f}(R{k})"));
        }
    }
    let preds = predicate_domain(gc.cfg.state_count);
    for (k, _) in preds.iter().enumerate() {
        texts.push(format!("guard(P{k})"));
        texts.push(format!("pre(P{k})"));
    }
    texts
}

fn predicate_domain(n: u8) -> Vec<StatePredicate> {
    if n <= 3 {
        StatePredicate::enumerate(n)
    } else {
        let mut v = vec![StatePredicate::all(n), StatePredicate::none(n)];
        for s in 0..n {
            v.push(StatePredicate::new(n, [s]).unwrap());
        }
        v
    }
}

fn relation_domain(gc: &GenConfig) -> Vec<StateRelation> {
    let n = gc.cfg.state_count;
    if n <= 2 {
        StateRelation::enumerate(n)
    } else {
        let mut v = gc.relation_alphabet.clone();
        for r in [StateRelation::id(n), StateRelation::univ(n), StateRelation::none(n)] {
            if !v.contains(&r) {
                v.push(r);
            }
        }
        v
    }
}

/// The binding that interprets the `R{k}`/`P{k}` names used in pool texts.
fn alphabet_binding(gc: &GenConfig) -> Binding {
    let mut b = Binding::new();
    for (k, r) in gc.relation_alphabet.iter().enumerate() {
        b = b.bind(&format!("R{k}"), Value::Relation(r.clone()));
    }
    for (k, p) in predicate_domain(gc.cfg.state_count).iter().enumerate() {
        b = b.bind(&format!("P{k}"), Value::Predicate(p.clone()));
    }
    b
}

/// A seeded random closed command: the closure of a few random traces.
fn random_command(cfg: ModelConfig, universe: &[Trace], rng: &mut ChaCha8Rng) -> Command {
    let picks = rng.gen_range(1..=4usize);
    let mut set = TraceSet::new();
    for _ in 0..picks {
        set.insert(universe[rng.gen_range(0..universe.len())].clone());
    }
    Command::from_closed(cfg, close(&set, &cfg))
}

/// Build the pool: every distinct denotation of a term of depth at most
/// `term_depth` over the alphabet, plus a few seeded random closed commands.
pub fn build_pool(gc: &GenConfig) -> Result<Pool> {
    let cfg = gc.cfg;
    cfg.check_capacity()?;
    let binding = alphabet_binding(gc);

    // Each entry keeps the first (shallowest) text producing its denotation.
    let mut items: Vec<PoolItem> = Vec::new();
    let mut seen: std::collections::BTreeSet<TraceSet> = Default::default();
    let mut push = |text: String, value: Command, items: &mut Vec<PoolItem>| {
        if seen.insert(value.traces().clone()) {
            items.push(PoolItem { text, value });
        }
    };

    let mut frontier: Vec<usize> = Vec::new(); // indices added in the last depth
    for text in atom_texts(gc) {
        let value = eval(&parse(&text)?, &binding, cfg)?;
        let before = items.len();
        push(text, value, &mut items);
        if items.len() > before {
            frontier.push(items.len() - 1);
        }
    }

    for _depth in 1..=gc.term_depth {
        let upto = items.len();
        let mut added: Vec<PoolItem> = Vec::new();
        let mut texts_vals: Vec<(String, Command)> = Vec::new();
        for i in 0..upto {
            let (ta, va) = (items[i].text.clone(), items[i].value.clone());
            for (post, f) in [
                ("^*", crate::operators::star as fn(&Command) -> Result<Command>),
                ("^o", crate::operators::omega),
                ("^*!", crate::operators::star_skip),
                ("^o!", crate::operators::omega_skip),
            ] {
                texts_vals.push((format!("({ta}){post}"), f(&va)?));
            }
            for j in 0..upto {
                // Only combine pairs where one side is from the newest layer,
                // so each pass adds exactly the next depth.
                if !frontier.contains(&i) && !frontier.contains(&j) {
                    continue;
                }
                let (tb, vb) = (items[j].text.clone(), items[j].value.clone());
                texts_vals.push((format!("({ta}) |-| ({tb})"), va.nondet(&vb)?));
                texts_vals.push((format!("({ta}) |+| ({tb})"), va.supremum(&vb)?));
                texts_vals.push((format!("({ta}) ; ({tb})"), crate::operators::seq(&va, &vb)?));
                texts_vals.push((format!("({ta}) || ({tb})"), crate::operators::par(&va, &vb)?));
                texts_vals.push((format!("({ta}) && ({tb})"), crate::operators::conj(&va, &vb)?));
                texts_vals.push((format!("({ta}) // ({tb})"), crate::quotient::quotient(&va, &vb)?));
            }
        }
        let mut new_frontier = Vec::new();
        for (t, v) in texts_vals {
            let before = items.len() + added.len();
            if seen.insert(v.traces().clone()) {
                added.push(PoolItem { text: t, value: v });
            }
            if items.len() + added.len() > before {
                new_frontier.push(items.len() + added.len() - 1);
            }
        }
        items.extend(added);
        frontier = new_frontier;
        if frontier.is_empty() {
            break;
        }
    }

    if gc.mode == Mode::Random {
        let universe: Vec<Trace> = enumerate_universe(&cfg)?.into_iter().collect();
        let mut rng =
            ChaCha8Rng::seed_from_u64(gc.seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1));
        for k in 0..RANDOM_COMMANDS {
            let value = random_command(cfg, &universe, &mut rng);
            if seen.insert(value.traces().clone()) {
                items.push(PoolItem {
                    text: format!("random-{k}"),
                    value,
                });
            }
        }
    }

    Ok(Pool {
        commands: items,
        relations: relation_domain(gc),
        predicates: predicate_domain(cfg.state_count),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pool_is_deduplicated_and_contains_guarantees() {
        let gc = GenConfig::default_for(ModelConfig::new(1, 2).unwrap(), 100, 0);
        let pool = build_pool(&gc).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for item in &pool.commands {
            assert!(seen.insert(item.value.traces().clone()), "duplicate: {}", item.text);
        }
        assert!(pool.commands.iter().any(|i| i.text == "bot"));
        assert!(pool.commands.iter().any(|i| i.text == "top"));
        assert!(pool.relations.len() == 2); // one state: two relations
        assert!(pool.predicates.len() == 2);

        // With two states the finite guarantee of `id` is distinct from every
        // plainer atom, so its text survives deduplication.
        let mut gc2 = GenConfig::default_for(ModelConfig::new(2, 2).unwrap(), 100, 0);
        gc2.term_depth = 0;
        let pool2 = build_pool(&gc2).unwrap();
        assert!(pool2.commands.iter().any(|i| i.text.starts_with("fin(")));
    }

    #[test]
    fn pool_is_deterministic() {
        let gc = GenConfig::default_for(ModelConfig::new(1, 2).unwrap(), 100, 7);
        let a = build_pool(&gc).unwrap();
        let b = build_pool(&gc).unwrap();
        let ta: Vec<&String> = a.commands.iter().map(|i| &i.text).collect();
        let tb: Vec<&String> = b.commands.iter().map(|i| &i.text).collect();
        assert_eq!(ta, tb);
    }
}
