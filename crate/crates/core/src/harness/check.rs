//! The law-checking engine: instantiates catalogue entries over generated
//! pools, judges each case, and shrinks counterexamples.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

use super::catalogue::{law_catalogue, negative_catalogue, Cond, Derived, LawKind, LawSpec, Sort};
use super::gen::{build_pool, GenConfig, Pool, EXHAUSTIVE_BUDGET};
use super::report::{Counterexample, LawReport, Report, ReportConfig, Status};
use crate::config::ModelConfig;
use crate::error::{ModelError, Result};
use crate::lang::{eval, parse, Binding, Expr, Value};
use crate::lattice::Command;
use crate::operators::{par, seq};
use crate::quotient::prune_to_closed;
use crate::relcmds::{StatePredicate, StateRelation};
use crate::trace::Trace;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

// ---------------------------------------------------------------- rendering

pub fn render_relation(r: &StateRelation) -> String {
    let body: Vec<String> = r.iter().map(|(a, b)| format!("({a},{b})")).collect();
    format!("{{{}}}", body.join(","))
}

pub fn render_predicate(p: &StatePredicate) -> String {
    let body: Vec<String> = p.iter().map(|s| s.to_string()).collect();
    format!("{{{}}}", body.join(","))
}

pub fn render_command(c: &Command) -> String {
    let body: Vec<String> = c.traces().iter().map(|t| t.to_string()).collect();
    format!("{{{}}}", body.join(", "))
}

fn render_value(v: &Value) -> String {
    match v {
        Value::Command(c) => render_command(c),
        Value::Relation(r) => render_relation(r),
        Value::Predicate(p) => render_predicate(p),
    }
}

fn render_binding(b: &Binding) -> BTreeMap<String, String> {
    b.0.iter()
        .map(|(k, v)| (k.clone(), render_value(v)))
        .collect()
}

// ------------------------------------------------------------ case plumbing

pub(crate) fn law_rng(seed: u64, name: &str, salt: u64) -> ChaCha8Rng {
    let mut h = 0xcbf29ce484222325u64;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    ChaCha8Rng::seed_from_u64(h ^ seed ^ salt.wrapping_mul(0x9e3779b97f4a7c15))
}

/// Size of the command slice used for laws marked `small_command_pool`, and
/// of the quantification pool for sampled `∀`-provisos.
const SMALL_POOL: usize = 8;

fn command_domain_len(spec: &LawSpec, pool: &Pool) -> usize {
    if spec.small_command_pool {
        pool.commands.len().min(SMALL_POOL)
    } else {
        pool.commands.len()
    }
}

fn domain_sizes(spec: &LawSpec, pool: &Pool) -> Vec<usize> {
    spec.metavars
        .iter()
        .map(|(_, sort)| match sort {
            Sort::Command => command_domain_len(spec, pool),
            Sort::Relation => pool.relations.len(),
            Sort::Predicate => pool.predicates.len(),
        })
        .collect()
}

/// Deterministic case list: exhaustive mixed-radix enumeration when the
/// product fits the budget, seeded sampling otherwise.
fn case_assignments(spec: &LawSpec, pool: &Pool, gc: &GenConfig) -> (Vec<Vec<usize>>, bool) {
    let sizes = domain_sizes(spec, pool);
    if sizes.is_empty() {
        return (vec![Vec::new()], true);
    }
    let product: u128 = sizes.iter().map(|&s| s as u128).product();
    if product <= EXHAUSTIVE_BUDGET {
        let mut cases = Vec::with_capacity(product as usize);
        let mut idx = vec![0usize; sizes.len()];
        loop {
            cases.push(idx.clone());
            let mut k = sizes.len();
            loop {
                if k == 0 {
                    return (cases, true);
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < sizes[k] {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
    let mut rng = law_rng(gc.seed, spec.name, 0);
    let cases = (0..gc.sample_count)
        .map(|_| sizes.iter().map(|&s| rng.gen_range(0..s)).collect())
        .collect();
    (cases, false)
}

fn binding_for(spec: &LawSpec, pool: &Pool, assignment: &[usize]) -> Result<Binding> {
    let mut b = Binding::new();
    for ((name, sort), &k) in spec.metavars.iter().zip(assignment) {
        let v = match sort {
            Sort::Command => Value::Command(pool.commands[k].value.clone()),
            Sort::Relation => Value::Relation(pool.relations[k].clone()),
            Sort::Predicate => Value::Predicate(pool.predicates[k].clone()),
        };
        b = b.bind(name, v);
    }
    add_derived(spec, b)
}

fn add_derived(spec: &LawSpec, mut b: Binding) -> Result<Binding> {
    for d in spec.derived {
        let (out, x, y, union) = match d {
            Derived::RelIntersect(o, x, y) => (*o, *x, *y, false),
            Derived::RelUnion(o, x, y) => (*o, *x, *y, true),
        };
        let rx = rel_of(&b, x)?;
        let ry = rel_of(&b, y)?;
        let v = if union { rx.union(&ry) } else { rx.intersect(&ry) };
        b = b.bind(out, Value::Relation(v));
    }
    Ok(b)
}

fn rel_of(b: &Binding, name: &str) -> Result<StateRelation> {
    match b.0.get(name) {
        Some(Value::Relation(r)) => Ok(r.clone()),
        _ => Err(ModelError::UnboundVar(name.to_string())),
    }
}

fn pred_of(b: &Binding, name: &str) -> Result<StatePredicate> {
    match b.0.get(name) {
        Some(Value::Predicate(p)) => Ok(p.clone()),
        _ => Err(ModelError::UnboundVar(name.to_string())),
    }
}

fn cmd_of(b: &Binding, name: &str) -> Result<Command> {
    match b.0.get(name) {
        Some(Value::Command(c)) => Ok(c.clone()),
        _ => Err(ModelError::UnboundVar(name.to_string())),
    }
}

// ------------------------------------------------------- condition checking

/// Pre-parsed templates for a law, keyed by template text.
struct Templates(BTreeMap<&'static str, Expr>);

impl Templates {
    fn for_spec(spec: &LawSpec) -> Result<Templates> {
        let mut map = BTreeMap::new();
        let mut conds: Vec<&Cond> = spec.provisos.iter().collect();
        if let Some(c) = &spec.claim {
            conds.push(c);
        }
        for cond in conds {
            if let Cond::Refines(a, b) | Cond::NotRefines(a, b) | Cond::Eq(a, b) = cond {
                for t in [a, b] {
                    if !map.contains_key(t) {
                        map.insert(*t, parse(t)?);
                    }
                }
            }
        }
        Ok(Templates(map))
    }

    fn eval(&self, t: &str, b: &Binding, cfg: ModelConfig) -> Result<Command> {
        eval(&self.0[t], b, cfg)
    }
}

struct CondVerdict {
    holds: bool,
    /// `(side, trace)` where `side` names the side the trace is missing from.
    witness: Option<(String, Trace)>,
}

fn check_cond(
    cond: &Cond,
    tpl: &Templates,
    b: &Binding,
    cfg: ModelConfig,
    quant: &[Command],
) -> Result<CondVerdict> {
    match cond {
        Cond::Refines(a, bb) => {
            let ca = tpl.eval(a, b, cfg)?;
            let cb = tpl.eval(bb, b, cfg)?;
            if ca.refines_to(&cb)? {
                Ok(CondVerdict { holds: true, witness: None })
            } else {
                let t = cb
                    .traces()
                    .iter()
                    .find(|t| !ca.traces().contains(*t))
                    .cloned();
                Ok(CondVerdict {
                    holds: false,
                    witness: t.map(|t| ("lhs".to_string(), t)),
                })
            }
        }
        Cond::NotRefines(a, bb) => {
            let ca = tpl.eval(a, b, cfg)?;
            let cb = tpl.eval(bb, b, cfg)?;
            Ok(CondVerdict { holds: !ca.refines_to(&cb)?, witness: None })
        }
        Cond::Eq(a, bb) => {
            let ca = tpl.eval(a, b, cfg)?;
            let cb = tpl.eval(bb, b, cfg)?;
            if ca.traces() == cb.traces() {
                return Ok(CondVerdict { holds: true, witness: None });
            }
            // Name the side that lacks the witness trace.
            let witness = ca
                .traces()
                .iter()
                .find(|t| !cb.traces().contains(*t))
                .map(|t| ("rhs".to_string(), t.clone()))
                .or_else(|| {
                    cb.traces()
                        .iter()
                        .find(|t| !ca.traces().contains(*t))
                        .map(|t| ("lhs".to_string(), t.clone()))
                });
            Ok(CondVerdict { holds: false, witness })
        }
        Cond::RelSub(x, y) => Ok(CondVerdict {
            holds: rel_of(b, x)?.is_subset(&rel_of(b, y)?),
            witness: None,
        }),
        Cond::PredSub(x, y) => Ok(CondVerdict {
            holds: pred_of(b, x)?.is_subset(&pred_of(b, y)?),
            witness: None,
        }),
        Cond::SeqParAssumption(name) => {
            let i = cmd_of(b, name)?;
            for c0 in quant {
                for c1 in quant {
                    let lhs = seq(&par(c0, &i)?, &par(c1, &i)?)?;
                    let rhs = par(&seq(c0, c1)?, &i)?;
                    if !lhs.refines_to(&rhs)? {
                        return Ok(CondVerdict { holds: false, witness: None });
                    }
                }
            }
            Ok(CondVerdict { holds: true, witness: None })
        }
    }
}

enum CaseOutcome {
    Pass,
    Skipped,
    Failed { witness: Option<(String, Trace)> },
}

/// Judge one fully-bound case. The returned witness accompanies a failure.
fn judge(
    spec: &LawSpec,
    tpl: &Templates,
    b: &Binding,
    cfg: ModelConfig,
    quant: &[Command],
) -> Result<CaseOutcome> {
    let claim = spec.claim.as_ref().expect("template law has a claim");
    match spec.kind {
        LawKind::Iff => {
            let mut left = true;
            for p in spec.provisos {
                // In an iff the provisos form the left-hand side, except that
                // a `NotRefines` entry gates the case instead.
                if matches!(p, Cond::NotRefines(..)) {
                    if !check_cond(p, tpl, b, cfg, quant)?.holds {
                        return Ok(CaseOutcome::Skipped);
                    }
                    continue;
                }
                if !check_cond(p, tpl, b, cfg, quant)?.holds {
                    left = false;
                    break;
                }
            }
            let right = check_cond(claim, tpl, b, cfg, quant)?;
            if left == right.holds {
                Ok(CaseOutcome::Pass)
            } else {
                Ok(CaseOutcome::Failed { witness: right.witness })
            }
        }
        _ => {
            for p in spec.provisos {
                if !check_cond(p, tpl, b, cfg, quant)?.holds {
                    return Ok(CaseOutcome::Skipped);
                }
            }
            let v = check_cond(claim, tpl, b, cfg, quant)?;
            if v.holds {
                Ok(CaseOutcome::Pass)
            } else {
                Ok(CaseOutcome::Failed { witness: v.witness })
            }
        }
    }
}

// ----------------------------------------------------------- minimization

/// Greedy shrink: repeatedly delete one trace from a bound command (repairing
/// closure by pruning) while the case keeps failing.
fn minimize(
    spec: &LawSpec,
    tpl: &Templates,
    binding: &Binding,
    cfg: ModelConfig,
    quant: &[Command],
) -> Binding {
    let still_fails = |b: &Binding| -> bool {
        matches!(judge(spec, tpl, b, cfg, quant), Ok(CaseOutcome::Failed { .. }))
    };
    let mut current = binding.clone();
    let mut budget = 2000usize;
    loop {
        let mut improved = false;
        let names: Vec<String> = current
            .0
            .iter()
            .filter(|(_, v)| matches!(v, Value::Command(_)))
            .map(|(k, _)| k.clone())
            .collect();
        'outer: for name in names {
            let cur_cmd = match current.0.get(&name) {
                Some(Value::Command(c)) => c.clone(),
                _ => continue,
            };
            for t in cur_cmd.traces().iter().rev() {
                if t.len() == 0 {
                    // Every command keeps its empty traces.
                    continue;
                }
                if budget == 0 {
                    return current;
                }
                budget -= 1;
                let mut keep = cur_cmd.traces().clone();
                keep.remove(t);
                let pruned = prune_to_closed(keep, &cfg);
                if pruned.len() >= cur_cmd.trace_count() {
                    continue;
                }
                let candidate_cmd = Command::from_closed(cfg, pruned);
                let mut candidate = current.clone();
                candidate.0.insert(name.clone(), Value::Command(candidate_cmd));
                // Re-derive any relation bindings? Derived bindings are over
                // relations only, so command shrinking leaves them valid.
                if still_fails(&candidate) {
                    current = candidate;
                    improved = true;
                    continue 'outer;
                }
            }
        }
        if !improved {
            return current;
        }
    }
}

// -------------------------------------------------------------- map helper

fn map_cases<T, F>(cases: &[Vec<usize>], f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&[usize]) -> Result<T> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        cases.par_iter().map(|a| f(a)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        cases.iter().map(|a| f(a)).collect()
    }
}

// ----------------------------------------------------------------- engine

/// Check one law against the pool.
pub fn check_law(spec: &LawSpec, pool: &Pool, gc: &GenConfig) -> Result<LawReport> {
    if spec.kind == LawKind::Special {
        return super::special::check_special(spec, pool, gc);
    }
    let cfg = gc.cfg;
    let tpl = Templates::for_spec(spec)?;
    let (cases, exhaustive) = case_assignments(spec, pool, gc);
    let uses_quant = spec
        .provisos
        .iter()
        .any(|p| matches!(p, Cond::SeqParAssumption(_)));
    let quant: Vec<Command> = if uses_quant {
        pool.commands
            .iter()
            .take(SMALL_POOL)
            .map(|i| i.value.clone())
            .collect()
    } else {
        Vec::new()
    };

    let outcomes = map_cases(&cases, |assignment| {
        let b = binding_for(spec, pool, assignment)?;
        judge(spec, &tpl, &b, cfg, &quant)
    })?;

    let mut checked = 0u64;
    let mut skipped = 0u64;
    let mut first_fail: Option<usize> = None;
    for (k, o) in outcomes.iter().enumerate() {
        match o {
            CaseOutcome::Pass => checked += 1,
            CaseOutcome::Skipped => skipped += 1,
            CaseOutcome::Failed { .. } => {
                checked += 1;
                if first_fail.is_none() {
                    first_fail = Some(k);
                }
            }
        }
    }

    let mut counterexamples = Vec::new();
    if let Some(k) = first_fail {
        let b = binding_for(spec, pool, &cases[k])?;
        let shrunk = minimize(spec, &tpl, &b, cfg, &quant);
        let (side, witness) = match judge(spec, &tpl, &shrunk, cfg, &quant)? {
            CaseOutcome::Failed { witness: Some((s, t)) } => (s, t.to_string()),
            CaseOutcome::Failed { witness: None } => ("condition".to_string(), String::new()),
            _ => unreachable!("minimized case must still fail"),
        };
        counterexamples.push(Counterexample {
            bindings: render_binding(&shrunk),
            witness_trace: witness,
            side,
        });
    }

    let status = if !counterexamples.is_empty() {
        Status::Fail
    } else if checked == 0 && skipped > 0 {
        Status::SkippedAll
    } else {
        Status::Pass
    };
    let mut notes = Vec::new();
    if uses_quant {
        notes.push("quantified proviso sampled over the pool, not proven".to_string());
    }
    if !exhaustive {
        notes.push(format!("sampled {} of a larger case space", cases.len()));
    }
    Ok(LawReport {
        name: spec.name.to_string(),
        provenance: spec.provenance.to_string(),
        status,
        cases_checked: checked,
        cases_proviso_skipped: skipped,
        counterexamples,
        notes,
    })
}

fn glob_match(pattern: &str, name: &str) -> bool {
    // Tiny '*'-only glob.
    let parts: Vec<&str> = pattern.split('*').collect();
    if parts.len() == 1 {
        return pattern == name;
    }
    let mut pos = 0usize;
    for (k, part) in parts.iter().enumerate() {
        if part.is_empty() {
            continue;
        }
        if k == 0 {
            if !name.starts_with(part) {
                return false;
            }
            pos = part.len();
        } else if k == parts.len() - 1 {
            return name.len() >= pos && name[pos..].ends_with(part);
        } else {
            match name[pos..].find(part) {
                Some(off) => pos += off + part.len(),
                None => return false,
            }
        }
    }
    // Pattern ends in '*'.
    true
}

fn suite(gc: &GenConfig, filter: Option<&str>, laws: &[LawSpec]) -> Result<Report> {
    let pool = build_pool(gc)?;
    let mut reports = Vec::new();
    for spec in laws {
        if let Some(pat) = filter {
            if !glob_match(pat, spec.name) {
                continue;
            }
        }
        reports.push(check_law(spec, &pool, gc)?);
    }
    Ok(Report {
        config: ReportConfig::from_gen(gc),
        laws: reports,
    })
}

/// Check every catalogue law whose name matches the filter (all by default).
pub fn run_suite(gc: &GenConfig, filter: Option<&str>) -> Result<Report> {
    suite(gc, filter, &law_catalogue())
}

/// Check the proviso-stripped variants; every law here should FAIL.
pub fn negative_suite(gc: &GenConfig) -> Result<Report> {
    suite(gc, None, &negative_catalogue())
}
