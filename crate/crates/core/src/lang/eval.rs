//! Evaluation of expressions to commands under a metavariable binding.

use std::collections::BTreeMap;

use super::ast::{Expr, PredLit, RelLit};
use crate::config::ModelConfig;
use crate::error::{ModelError, Result};
use crate::lattice::Command;
use crate::operators;
use crate::quotient::quotient;
use crate::relcmds::{self, StatePredicate, StateRelation};

/// A value a metavariable can be bound to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Command(Command),
    Relation(StateRelation),
    Predicate(StatePredicate),
}

impl Value {
    fn sort(&self) -> &'static str {
        match self {
            Value::Command(_) => "command",
            Value::Relation(_) => "relation",
            Value::Predicate(_) => "predicate",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Binding(pub BTreeMap<String, Value>);

impl Binding {
    pub fn new() -> Self {
        Binding(BTreeMap::new())
    }

    pub fn bind(mut self, name: &str, v: Value) -> Self {
        self.0.insert(name.to_string(), v);
        self
    }

    fn lookup(&self, name: &str) -> Result<&Value> {
        self.0
            .get(name)
            .ok_or_else(|| ModelError::UnboundVar(name.to_string()))
    }
}

fn resolve_rel(r: &RelLit, b: &Binding, cfg: &ModelConfig) -> Result<StateRelation> {
    let n = cfg.state_count;
    match r {
        RelLit::Id => Ok(StateRelation::id(n)),
        RelLit::Univ => Ok(StateRelation::univ(n)),
        RelLit::Empty => Ok(StateRelation::none(n)),
        RelLit::Pairs(ps) => StateRelation::new(n, ps.iter().copied()),
        RelLit::Var(v) => match b.lookup(v)? {
            Value::Relation(rel) => Ok(rel.clone()),
            other => Err(ModelError::IllSorted(
                v.clone(),
                other.sort().to_string(),
                "relation".to_string(),
            )),
        },
    }
}

fn resolve_pred(p: &PredLit, b: &Binding, cfg: &ModelConfig) -> Result<StatePredicate> {
    let n = cfg.state_count;
    match p {
        PredLit::All => Ok(StatePredicate::all(n)),
        PredLit::Empty => Ok(StatePredicate::none(n)),
        PredLit::States(ss) => StatePredicate::new(n, ss.iter().copied()),
        PredLit::Var(v) => match b.lookup(v)? {
            Value::Predicate(pred) => Ok(pred.clone()),
            other => Err(ModelError::IllSorted(
                v.clone(),
                other.sort().to_string(),
                "predicate".to_string(),
            )),
        },
    }
}

pub fn eval(e: &Expr, b: &Binding, cfg: ModelConfig) -> Result<Command> {
    use Expr::*;
    match e {
        Bot => Command::bottom(cfg),
        Top => Ok(Command::top(cfg)),
        Nil => Ok(operators::nil(cfg)),
        Skip => relcmds::skip(cfg),
        Chaos => relcmds::chaos(cfg),
        Term => relcmds::term(cfg),
        PStep(r) => relcmds::pstep(cfg, &resolve_rel(r, b, &cfg)?),
        EStep(r) => relcmds::estep(cfg, &resolve_rel(r, b, &cfg)?),
        EStepAbort(r) => relcmds::estep_abort(cfg, &resolve_rel(r, b, &cfg)?),
        Guard(p) => relcmds::guard(cfg, &resolve_pred(p, b, &cfg)?),
        Pre(p) => relcmds::precond(cfg, &resolve_pred(p, b, &cfg)?),
        Atomic(r) => relcmds::atomic(cfg, &resolve_rel(r, b, &cfg)?),
        EnvC(r) => relcmds::envc(cfg, &resolve_rel(r, b, &cfg)?),
        Spec(r) => relcmds::spec(cfg, &resolve_rel(r, b, &cfg)?),
        FinG(r) => relcmds::fin_guar(cfg, &resolve_rel(r, b, &cfg)?),
        InfG(r) => relcmds::inf_guar(cfg, &resolve_rel(r, b, &cfg)?),
        Nondet(l, r) => eval(l, b, cfg)?.nondet(&eval(r, b, cfg)?),
        Sup(l, r) => eval(l, b, cfg)?.supremum(&eval(r, b, cfg)?),
        Par(l, r) => operators::par(&eval(l, b, cfg)?, &eval(r, b, cfg)?),
        Conj(l, r) => operators::conj(&eval(l, b, cfg)?, &eval(r, b, cfg)?),
        Quot(l, r) => quotient(&eval(l, b, cfg)?, &eval(r, b, cfg)?),
        Seq(l, r) => operators::seq(&eval(l, b, cfg)?, &eval(r, b, cfg)?),
        Star(x) => operators::star(&eval(x, b, cfg)?),
        Omega(x) => operators::omega(&eval(x, b, cfg)?),
        StarSkip(x) => operators::star_skip(&eval(x, b, cfg)?),
        OmegaSkip(x) => operators::omega_skip(&eval(x, b, cfg)?),
        MetaVar(v) => match b.lookup(v)? {
            Value::Command(c) => {
                cfg.same_as(c.config())?;
                Ok(c.clone())
            }
            other => Err(ModelError::IllSorted(
                v.clone(),
                other.sort().to_string(),
                "command".to_string(),
            )),
        },
        Hole => Err(ModelError::HoleCount(1)),
    }
}

/// A function from commands to commands given by an expression with one hole.
#[derive(Debug, Clone)]
pub struct CommandTransformer {
    expr: Expr,
    binding: Binding,
    cfg: ModelConfig,
}

impl CommandTransformer {
    pub fn apply(&self, x: &Command) -> Result<Command> {
        self.cfg.same_as(x.config())?;
        let name = "__hole";
        let filled = self.expr.fill_hole(&Expr::MetaVar(name.to_string()));
        let b = self
            .binding
            .clone()
            .bind(name, Value::Command(x.clone()));
        eval(&filled, &b, self.cfg)
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }
}

/// Builds the transformer `x ↦ eval(e[_ := x])`; `e` must have exactly one
/// hole.
pub fn to_transformer(e: &Expr, b: &Binding, cfg: ModelConfig) -> Result<CommandTransformer> {
    let holes = e.hole_count();
    if holes != 1 {
        return Err(ModelError::HoleCount(holes));
    }
    Ok(CommandTransformer {
        expr: e.clone(),
        binding: b.clone(),
        cfg,
    })
}

#[cfg(test)]
mod tests {
    use super::super::parse::parse;
    use super::*;
    use crate::lattice::{gfp, lfp};
    use crate::relcmds::atomic;

    fn cfg(n: u8, l: u8) -> ModelConfig {
        ModelConfig::new(n, l).unwrap()
    }

    fn run(text: &str, b: &Binding, c: ModelConfig) -> Command {
        eval(&parse(text).unwrap(), b, c).unwrap()
    }

    #[test]
    fn atoms_agree_with_module_calls() {
        let c = cfg(2, 2);
        let b = Binding::new();
        assert_eq!(run("nil", &b, c), operators::nil(c));
        assert_eq!(
            run("pi({(0,1)})", &b, c),
            relcmds::pstep(c, &StateRelation::new(2, [(0, 1)]).unwrap()).unwrap()
        );
        assert_eq!(
            run("guard(all)", &b, c),
            relcmds::guard(c, &StatePredicate::all(2)).unwrap()
        );
        assert_eq!(run("bot // bot", &b, c), Command::bottom(c).unwrap());
    }

    #[test]
    fn metavariables_and_sorts() {
        let c = cfg(2, 2);
        let rel = StateRelation::id(2);
        let cmd = atomic(c, &rel).unwrap();
        let b = Binding::new()
            .bind("x", Value::Command(cmd.clone()))
            .bind("g", Value::Relation(rel.clone()));
        assert_eq!(run("x || skip", &b, c), cmd);
        assert_eq!(run("atomic(g)", &b, c), cmd);
        assert!(matches!(
            eval(&parse("atomic(x)").unwrap(), &b, c),
            Err(ModelError::IllSorted(..))
        ));
        assert!(matches!(
            eval(&parse("y").unwrap(), &b, c),
            Err(ModelError::UnboundVar(..))
        ));
    }

    #[test]
    fn transformer_generates_iteration() {
        let c = cfg(1, 2);
        let step = atomic(c, &StateRelation::id(1)).unwrap();
        let b = Binding::new().bind("c", Value::Command(step.clone()));
        let f = to_transformer(&parse("nil |-| (c ; _)").unwrap(), &b, c).unwrap();
        assert_eq!(lfp(c, |x| f.apply(x)).unwrap(), operators::omega(&step).unwrap());
        assert_eq!(gfp(c, |x| f.apply(x)).unwrap(), operators::star(&step).unwrap());
        // identity transformer
        let ident = to_transformer(&parse("_").unwrap(), &b, c).unwrap();
        assert_eq!(ident.apply(&step).unwrap(), step);
        // hole arity is enforced
        assert!(matches!(
            to_transformer(&parse("k").unwrap(), &b, c),
            Err(ModelError::HoleCount(0))
        ));
        assert!(matches!(
            to_transformer(&parse("_ ; _").unwrap(), &b, c),
            Err(ModelError::HoleCount(2))
        ));
    }
}
