use serde::{Deserialize, Serialize};

/// A relation argument: a symbolic constant, an explicit pair set, or a
/// relation-sorted metavariable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RelLit {
    Id,
    Univ,
    Empty,
    Pairs(Vec<(u8, u8)>),
    Var(String),
}

/// A predicate argument: a symbolic constant, an explicit state set, or a
/// predicate-sorted metavariable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PredLit {
    All,
    Empty,
    States(Vec<u8>),
    Var(String),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Expr {
    Bot,
    Top,
    Nil,
    Skip,
    Chaos,
    Term,
    PStep(RelLit),
    EStep(RelLit),
    EStepAbort(RelLit),
    Guard(PredLit),
    Pre(PredLit),
    Atomic(RelLit),
    EnvC(RelLit),
    Spec(RelLit),
    FinG(RelLit),
    InfG(RelLit),
    Nondet(Box<Expr>, Box<Expr>),
    Sup(Box<Expr>, Box<Expr>),
    Par(Box<Expr>, Box<Expr>),
    Conj(Box<Expr>, Box<Expr>),
    Quot(Box<Expr>, Box<Expr>),
    Seq(Box<Expr>, Box<Expr>),
    Star(Box<Expr>),
    Omega(Box<Expr>),
    StarSkip(Box<Expr>),
    OmegaSkip(Box<Expr>),
    MetaVar(String),
    Hole,
}

impl Expr {
    pub fn nondet(l: Expr, r: Expr) -> Expr {
        Expr::Nondet(Box::new(l), Box::new(r))
    }
    pub fn sup(l: Expr, r: Expr) -> Expr {
        Expr::Sup(Box::new(l), Box::new(r))
    }
    pub fn par(l: Expr, r: Expr) -> Expr {
        Expr::Par(Box::new(l), Box::new(r))
    }
    pub fn conj(l: Expr, r: Expr) -> Expr {
        Expr::Conj(Box::new(l), Box::new(r))
    }
    pub fn quot(l: Expr, r: Expr) -> Expr {
        Expr::Quot(Box::new(l), Box::new(r))
    }
    pub fn seq(l: Expr, r: Expr) -> Expr {
        Expr::Seq(Box::new(l), Box::new(r))
    }
    pub fn var(name: &str) -> Expr {
        Expr::MetaVar(name.to_string())
    }

    /// Number of holes in the expression.
    pub fn hole_count(&self) -> usize {
        use Expr::*;
        match self {
            Hole => 1,
            Nondet(l, r) | Sup(l, r) | Par(l, r) | Conj(l, r) | Quot(l, r) | Seq(l, r) => {
                l.hole_count() + r.hole_count()
            }
            Star(e) | Omega(e) | StarSkip(e) | OmegaSkip(e) => e.hole_count(),
            _ => 0,
        }
    }

    /// Free metavariable names of every sort, in first-use order.
    pub fn free_vars(&self) -> Vec<String> {
        fn push(v: &str, out: &mut Vec<String>) {
            if !out.iter().any(|x| x == v) {
                out.push(v.to_string());
            }
        }
        fn walk(e: &Expr, out: &mut Vec<String>) {
            use Expr::*;
            match e {
                MetaVar(v) => push(v, out),
                PStep(r) | EStep(r) | EStepAbort(r) | Atomic(r) | EnvC(r) | Spec(r)
                | FinG(r) | InfG(r) => {
                    if let RelLit::Var(v) = r {
                        push(v, out);
                    }
                }
                Guard(p) | Pre(p) => {
                    if let PredLit::Var(v) = p {
                        push(v, out);
                    }
                }
                Nondet(l, r) | Sup(l, r) | Par(l, r) | Conj(l, r) | Quot(l, r) | Seq(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
                Star(e) | Omega(e) | StarSkip(e) | OmegaSkip(e) => walk(e, out),
                _ => {}
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// The expression with every hole replaced by `fill`.
    pub fn fill_hole(&self, fill: &Expr) -> Expr {
        use Expr::*;
        match self {
            Hole => fill.clone(),
            Nondet(l, r) => Expr::nondet(l.fill_hole(fill), r.fill_hole(fill)),
            Sup(l, r) => Expr::sup(l.fill_hole(fill), r.fill_hole(fill)),
            Par(l, r) => Expr::par(l.fill_hole(fill), r.fill_hole(fill)),
            Conj(l, r) => Expr::conj(l.fill_hole(fill), r.fill_hole(fill)),
            Quot(l, r) => Expr::quot(l.fill_hole(fill), r.fill_hole(fill)),
            Seq(l, r) => Expr::seq(l.fill_hole(fill), r.fill_hole(fill)),
            Star(e) => Star(Box::new(e.fill_hole(fill))),
            Omega(e) => Omega(Box::new(e.fill_hole(fill))),
            StarSkip(e) => StarSkip(Box::new(e.fill_hole(fill))),
            OmegaSkip(e) => OmegaSkip(Box::new(e.fill_hole(fill))),
            other => other.clone(),
        }
    }
}
