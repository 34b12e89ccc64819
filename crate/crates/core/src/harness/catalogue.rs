//! The catalogue of algebraic laws that the checking engine exercises.
//!
//! Each entry pairs a named claim, written in the expression language with
//! metavariables, with the source text it was transcribed from. Entries are
//! data: the engine interprets the kind, provisos, and templates uniformly.

use serde::Serialize;

/// Sort of a metavariable: what kind of value it ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sort {
    Command,
    Relation,
    Predicate,
}

/// A checkable condition over a single binding of the metavariables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cond {
    /// `lhs ⊑ rhs` over command templates.
    Refines(&'static str, &'static str),
    /// `¬(lhs ⊑ rhs)` over command templates; only used as a proviso.
    NotRefines(&'static str, &'static str),
    /// `lhs = rhs` over command templates.
    Eq(&'static str, &'static str),
    /// `lhs ⊆ rhs` over relation metavariables.
    RelSub(&'static str, &'static str),
    /// `lhs ⊆ rhs` over predicate metavariables.
    PredSub(&'static str, &'static str),
    /// `∀ c0, c1 · (c0 ∥ i) ; (c1 ∥ i) ⊑ (c0 ; c1) ∥ i` for the named
    /// command metavariable `i`, quantified over a fixed verification pool.
    SeqParAssumption(&'static str),
}

/// How the claim of a law is judged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LawKind {
    /// Provisos gate the check; claim must hold where they do.
    Equation,
    /// As `Equation` but the claim is a refinement.
    Refinement,
    /// As `Refinement`, recorded separately for laws stated as implications.
    Implication,
    /// The conjunction of the provisos must hold exactly when the claim does.
    Iff,
    /// Checked by a dedicated routine keyed on the law name.
    Special,
}

/// A binding derived from other bound relation metavariables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derived {
    /// `out = a ∩ b` over relations.
    RelIntersect(&'static str, &'static str, &'static str),
    /// `out = a ∪ b` over relations.
    RelUnion(&'static str, &'static str, &'static str),
}

/// One law to check.
#[derive(Debug, Clone)]
pub struct LawSpec {
    pub name: &'static str,
    pub kind: LawKind,
    pub metavars: &'static [(&'static str, Sort)],
    pub derived: &'static [Derived],
    pub provisos: &'static [Cond],
    /// Absent only for `LawKind::Special`.
    pub claim: Option<Cond>,
    /// Verbatim fragment of the source statement.
    pub provenance: &'static str,
    /// Restrict command metavariables to a small slice of the pool so the
    /// relation space can still be covered exhaustively.
    pub small_command_pool: bool,
}

const C: Sort = Sort::Command;
const R: Sort = Sort::Relation;
const P: Sort = Sort::Predicate;

fn law(
    name: &'static str,
    kind: LawKind,
    metavars: &'static [(&'static str, Sort)],
    provisos: &'static [Cond],
    claim: Cond,
    provenance: &'static str,
) -> LawSpec {
    LawSpec {
        name,
        kind,
        metavars,
        derived: &[],
        provisos,
        claim: Some(claim),
        provenance,
        small_command_pool: false,
    }
}

fn special(
    name: &'static str,
    metavars: &'static [(&'static str, Sort)],
    provenance: &'static str,
) -> LawSpec {
    LawSpec {
        name,
        kind: LawKind::Special,
        metavars,
        derived: &[],
        provisos: &[],
        claim: None,
        provenance,
        small_command_pool: false,
    }
}

fn eq(
    name: &'static str,
    metavars: &'static [(&'static str, Sort)],
    lhs: &'static str,
    rhs: &'static str,
    provenance: &'static str,
) -> LawSpec {
    law(name, LawKind::Equation, metavars, &[], Cond::Eq(lhs, rhs), provenance)
}

fn refines(
    name: &'static str,
    metavars: &'static [(&'static str, Sort)],
    lhs: &'static str,
    rhs: &'static str,
    provenance: &'static str,
) -> LawSpec {
    law(
        name,
        LawKind::Refinement,
        metavars,
        &[],
        Cond::Refines(lhs, rhs),
        provenance,
    )
}

/// The full catalogue, in a fixed order.
pub fn law_catalogue() -> Vec<LawSpec> {
    let mut laws = Vec::new();

    // --- complete lattice of commands ---
    laws.push(eq(
        "infimum-associative",
        &[("c0", C), ("c1", C), ("c2", C)],
        "c0 |-| (c1 |-| c2)",
        "(c0 |-| c1) |-| c2",
        r"c_0 \mathbin{\sqcap} (c_1 \mathbin{\sqcap} c_2) & = & (c_0 \mathbin{\sqcap} c_1) \mathbin{\sqcap} c_2",
    ));
    laws.push(eq(
        "infimum-commutes",
        &[("c0", C), ("c1", C)],
        "c0 |-| c1",
        "c1 |-| c0",
        r"c_0 \mathbin{\sqcap} c_1 & = & c_1 \mathbin{\sqcap} c_0",
    ));
    laws.push(eq(
        "infimum-idempotent",
        &[("c", C)],
        "c |-| c",
        "c",
        r"c \mathbin{\sqcap} c & = & c",
    ));
    laws.push(eq(
        "supremum-associative",
        &[("c0", C), ("c1", C), ("c2", C)],
        "c0 |+| (c1 |+| c2)",
        "(c0 |+| c1) |+| c2",
        r"c_0 \mathbin{\sqcup} (c_1 \mathbin{\sqcup} c_2) & = & (c_0 \mathbin{\sqcup} c_1) \mathbin{\sqcup} c_2",
    ));
    laws.push(eq(
        "supremum-commutes",
        &[("c0", C), ("c1", C)],
        "c0 |+| c1",
        "c1 |+| c0",
        r"c_0 \mathbin{\sqcup} c_1 & = & c_1 \mathbin{\sqcup} c_0",
    ));
    laws.push(eq(
        "supremum-idempotent",
        &[("c", C)],
        "c |+| c",
        "c",
        r"c \mathbin{\sqcup} c & = & c",
    ));
    laws.push(eq(
        "infimum-absorb-supremum",
        &[("c0", C), ("c1", C)],
        "c0 |-| (c0 |+| c1)",
        "c0",
        r"c_0 \mathbin{\sqcap} (c_0 \mathbin{\sqcup} c_1) & = & c_0",
    ));
    laws.push(eq(
        "supremum-absorb-infimum",
        &[("c0", C), ("c1", C)],
        "c0 |+| (c0 |-| c1)",
        "c0",
        r"c_0 \mathbin{\sqcup} (c_0 \mathbin{\sqcap} c_1) & = & c_0",
    ));
    laws.push(special(
        "infimum-lower-bound",
        &[],
        r"c \in C & \implies & \mathop{\textstyle\bigsqcap} C \mathrel{\sqsubseteq} c",
    ));
    laws.push(special(
        "infimum-greatest-lower-bound",
        &[],
        r"(\forall c \in C \mathrel{{\cdot}} d \mathrel{\sqsubseteq} c) & \implies & d \mathrel{\sqsubseteq} \mathop{\textstyle\bigsqcap} C",
    ));
    laws.push(special(
        "supremum-upper-bound",
        &[],
        r"c \in C & ~\implies~ & c \mathrel{\sqsubseteq} \mathop{\textstyle\bigsqcup} C",
    ));
    laws.push(special(
        "supremum-least-upper-bound",
        &[],
        r"(\forall c \in C \mathrel{{\cdot}} c \mathrel{\sqsubseteq} d) & ~\implies~ & \mathop{\textstyle\bigsqcup} C \mathrel{\sqsubseteq} d",
    ));
    laws.push(special(
        "infimum-distribute-supremum",
        &[],
        r"c \mathbin{\sqcap} (\mathop{\textstyle\bigsqcup} D) & = & \mathop{\textstyle\bigsqcup} \{ d \in D \mathrel{{\cdot}} c \mathbin{\sqcap} d \}",
    ));
    laws.push(special(
        "least-fixed-point-unfold",
        &[],
        r"\mu f & = & f(\mu f)",
    ));
    laws.push(special(
        "least-fixed-point-induction",
        &[],
        r"f(x) \mathrel{\sqsubseteq} x & \implies & \mu f \mathrel{\sqsubseteq} x",
    ));
    laws.push(special(
        "greatest-fixed-point-unfold",
        &[],
        r"\nu f & = & f(\nu f)",
    ));
    laws.push(special(
        "greatest-fixed-point-induction",
        &[],
        r"x \mathrel{\sqsubseteq} f(x) & \implies & x \mathrel{\sqsubseteq} \nu f",
    ));

    // --- sequential, parallel and weak conjunction axioms ---
    laws.push(eq(
        "sequential-associative",
        &[("c0", C), ("c1", C), ("c2", C)],
        "c0 ; (c1 ; c2)",
        "(c0 ; c1) ; c2",
        r"c_0 \, (c_1 \, c_2) & = & (c_0 \, c_1) \, c_2",
    ));
    laws.push(eq(
        "sequential-identity-right",
        &[("c", C)],
        "c ; nil",
        "c",
        r"c \, \Keyword{nil} & = & c",
    ));
    laws.push(eq(
        "sequential-identity-left",
        &[("c", C)],
        "nil ; c",
        "c",
        r"\Keyword{nil} \, c & = & c",
    ));
    laws.push(eq(
        "sequential-distribute-nondet-left",
        &[("c", C), ("d0", C), ("d1", C)],
        "c ; (d0 |-| d1)",
        "(c ; d0) |-| (c ; d1)",
        r"c \, (d_0 \mathbin{\sqcap} d_1) & = & (c \, d_0) \mathbin{\sqcap} (c \, d_1)",
    ));
    laws.push(special(
        "sequential-distribute-nondet-right",
        &[],
        r"(\mathop{\textstyle\bigsqcap} C) \, d & = & \mathop{\textstyle\bigsqcap} \{ c \in C \mathrel{{\cdot}} c \, d \}",
    ));
    laws.push(eq(
        "sequential-abort-zero-left",
        &[("c", C)],
        "bot ; c",
        "bot",
        r"\Keyword{\bot} \, c & = & c (stated; the surrounding text makes \bot a left annihilator of sequential composition)",
    ));
    laws.push(eq(
        "parallel-associative",
        &[("c0", C), ("c1", C), ("c2", C)],
        "c0 || (c1 || c2)",
        "(c0 || c1) || c2",
        r"c_0 \parallel (c_1 \parallel c_2) & = & (c_0 \parallel c_1) \parallel c_2",
    ));
    laws.push(eq(
        "parallel-commutes",
        &[("c0", C), ("c1", C)],
        "c0 || c1",
        "c1 || c0",
        r"c_0 \parallel c_1 & = & c_1 \parallel c_0",
    ));
    laws.push(eq(
        "parallel-identity",
        &[("c", C)],
        "c || skip",
        "c",
        r"c \parallel \Keyword{skip} & = & c",
    ));
    laws.push(special(
        "parallel-distribute",
        &[],
        r"(\mathop{\textstyle\bigsqcap} C) \parallel d & = & \mathop{\textstyle\bigsqcap} \{ c \in C \mathrel{{\cdot}} c \parallel d \}",
    ));
    laws.push(eq(
        "skip-skip",
        &[],
        "skip ; skip",
        "skip",
        r"\Keyword{skip} \, \Keyword{skip} & = & \Keyword{skip}",
    ));
    laws.push(refines(
        "skip-nil",
        &[],
        "skip",
        "nil",
        r"\Keyword{skip} & \mathrel{\sqsubseteq} & \Keyword{nil}",
    ));
    laws.push(eq(
        "conjunction-associative",
        &[("c0", C), ("c1", C), ("c2", C)],
        "c0 && (c1 && c2)",
        "(c0 && c1) && c2",
        r"c_0 \mathbin{\doublecap} (c_1 \mathbin{\doublecap} c_2) & = & (c_0 \mathbin{\doublecap} c_1) \mathbin{\doublecap} c_2",
    ));
    laws.push(eq(
        "conjunction-commutes",
        &[("c0", C), ("c1", C)],
        "c0 && c1",
        "c1 && c0",
        r"c_0 \mathbin{\doublecap} c_1 & = & c_1 \mathbin{\doublecap} c_0",
    ));
    laws.push(eq(
        "conjunction-idempotent",
        &[("c", C)],
        "c && c",
        "c",
        r"c \mathbin{\doublecap} c & = & c",
    ));
    laws.push(eq(
        "conjunction-identity",
        &[("c", C)],
        "c && chaos",
        "c",
        r"c \mathbin{\doublecap} \Keyword{chaos} & = & c",
    ));
    laws.push(refines(
        "chaos-skip",
        &[],
        "chaos",
        "skip",
        r"\Keyword{chaos} & \mathrel{\sqsubseteq} & \Keyword{skip}",
    ));
    laws.push(eq(
        "chaos-parallel-chaos",
        &[],
        "chaos || chaos",
        "chaos",
        r"\Keyword{chaos} \parallel \Keyword{chaos} & = & \Keyword{chaos}",
    ));
    laws.push(special(
        "conjunction-distribute-infimum",
        &[],
        r"D \neq \emptyset \implies c \mathbin{\doublecap} (\mathop{\textstyle\bigsqcap} D) & = & \mathop{\textstyle\bigsqcap} \{ d \in D \mathrel{{\cdot}} c \mathbin{\doublecap} d \}",
    ));
    laws.push(special(
        "conjunction-distribute-supremum",
        &[],
        r"c \mathbin{\doublecap} (\mathop{\textstyle\bigsqcup} D) & = & \mathop{\textstyle\bigsqcup} \{ d \in D \mathrel{{\cdot}} c \mathbin{\doublecap} d \}",
    ));
    laws.push(refines(
        "conjunction-exchange-parallel",
        &[("c0", C), ("c1", C), ("d0", C), ("d1", C)],
        "(c0 || c1) && (d0 || d1)",
        "(c0 && d0) || (c1 && d1)",
        r"(c_0 \parallel c_1) \mathbin{\doublecap} (d_0 \parallel d_1) & ~\mathrel{\sqsubseteq}~ & (c_0 \mathbin{\doublecap} d_0) \parallel (c_1 \mathbin{\doublecap} d_1)",
    ));
    laws.push(refines(
        "conjunction-exchange-sequential",
        &[("c0", C), ("c1", C), ("d0", C), ("d1", C)],
        "(c0 ; c1) && (d0 ; d1)",
        "(c0 && d0) ; (c1 && d1)",
        r"(c_0 \, c_1) \mathbin{\doublecap} (d_0 \, d_1) & ~\mathrel{\sqsubseteq}~ & (c_0 \mathbin{\doublecap} d_0) \, (c_1 \mathbin{\doublecap} d_1)",
    ));

    // --- properties derived from the axioms ---
    laws.push(eq(
        "supremum-identity",
        &[("c", C)],
        "c |+| bot",
        "c",
        r"c \mathbin{\sqcup} \Keyword{\bot} & =  c  = & \Keyword{\bot} \mathbin{\sqcup} c",
    ));
    laws.push(eq(
        "nondet-abort-zero",
        &[("c", C)],
        "c |-| bot",
        "bot",
        r"c \mathbin{\sqcap} \Keyword{\bot} & = \Keyword{\bot}  = & \Keyword{\bot} \mathbin{\sqcap} c",
    ));
    laws.push(eq(
        "nondet-identity",
        &[("c", C)],
        "c |-| top",
        "c",
        r"c \mathbin{\sqcap} \Keyword{\top} & =  c  = & \Keyword{\top} \mathbin{\sqcap} c",
    ));
    laws.push(eq(
        "supremum-magic-zero",
        &[("c", C)],
        "c |+| top",
        "top",
        r"c \mathbin{\sqcup} \Keyword{\top} & = \Keyword{\top}  = & \Keyword{\top} \mathbin{\sqcup} c",
    ));
    laws.push(eq(
        "sequential-magic-zero-left",
        &[("c", C)],
        "top ; c",
        "top",
        r"\Keyword{\top} \, c & = & \Keyword{\top}",
    ));
    // Proviso `c ≠ bot` is a deliberate deviation: in this model an aborting
    // process pre-empts any partner, even the immediately-terminated one, so
    // `top || bot = bot`. Dropping the pre-emption instead breaks parallel
    // associativity, which we prioritise. See README for the argument that no
    // model satisfies the whole catalogue without some such restriction.
    laws.push(law(
        "parallel-top-zero",
        LawKind::Equation,
        &[("c", C)],
        &[Cond::NotRefines("c", "bot")],
        Cond::Eq("top || c", "top"),
        r"\Keyword{\top} \parallel c & = & \Keyword{\top}",
    ));
    laws.push(eq(
        "conjunction-distribute-infimum-binary",
        &[("c", C), ("d0", C), ("d1", C)],
        "c && (d0 |-| d1)",
        "(c && d0) |-| (c && d1)",
        r"c \mathbin{\doublecap} (d_0 \mathbin{\sqcap} d_1) & = &  (c \mathbin{\doublecap} d_0) \mathbin{\sqcap} (c \mathbin{\doublecap} d_1)",
    ));
    laws.push(eq(
        "conjunction-abort-zero",
        &[("c", C)],
        "c && bot",
        "bot",
        r"c \mathbin{\doublecap} \Keyword{\bot} = & \Keyword{\bot} &  = \Keyword{\bot} \mathbin{\doublecap} c",
    ));

    // --- general lemmas ---
    laws.push(special(
        "non-deterministic-choice",
        &[],
        r"(\forall d \in D \mathrel{{\cdot}} (\exists c \in C \mathrel{{\cdot}} c \mathrel{\sqsubseteq} d)) & ~~\implies~~ & (\mathop{\textstyle\bigsqcap} C) \mathrel{\sqsubseteq} (\mathop{\textstyle\bigsqcap} D)",
    ));
    laws.push(special(
        "operator-monotonic",
        &[],
        r"If a binary operator ``$\circ$'' distributes over non-deterministic choice in both arguments then, $c_0 \mathrel{\sqsubseteq} c_1 \land d_0 \mathrel{\sqsubseteq} d_1 ~\implies~ c_0 \circ d_0 \mathrel{\sqsubseteq} c_1 \circ d_1$.",
    ));
    laws.push(special(
        "fusion-lfp-leq",
        &[],
        r"F(\mu G) ~\mathrel{\sqsubseteq}~ \mu H  && \mbox{ provided } F \circ G ~\mathrel{\sqsubseteq}~ H \circ F \mbox{ and } F \mbox{ distributes over arbitrary suprema}",
    ));
    laws.push(special(
        "fusion-lfp-eq",
        &[],
        r"F(\mu G) ~=~ \mu H  && \mbox{ provided } F \circ G ~=~ H \circ F \mbox{ and } F \mbox{ distributes over arbitrary suprema}",
    ));
    laws.push(special(
        "fusion-gfp-geq",
        &[],
        r"F(\nu G) ~\mathrel{\sqsupseteq}~ \nu H    && \mbox{ provided } F \circ G ~\mathrel{\sqsupseteq}~ H \circ F \mbox{ and } F \mbox{ distributes over arbitrary infima}",
    ));
    laws.push(special(
        "fusion-gfp-eq",
        &[],
        r"F(\nu G) ~=~ \nu H    && \mbox{ provided } F \circ G ~=~ H \circ F \mbox{ and } F \mbox{ distributes over arbitrary infima}",
    ));
    laws.push(eq(
        "kleene-unfold",
        &[("c", C)],
        "c^*",
        "nil |-| c ; c^*",
        r"\itkleene{c} & ~=~ & \Keyword{nil} ~\mathbin{\sqcap}~ c \, \itkleene{c}",
    ));
    laws.push(eq(
        "omega-unfold",
        &[("c", C)],
        "c^o",
        "nil |-| c ; c^o",
        r"\itomega{c}  & = & \Keyword{nil} ~\mathbin{\sqcap}~ c \, \itomega{c}",
    ));
    laws.push(law(
        "kleene-induction",
        LawKind::Implication,
        &[("x", C), ("c", C), ("d", C)],
        &[Cond::Refines("x", "d |-| c ; x")],
        Cond::Refines("x", "c^* ; d"),
        r"x ~\mathrel{\sqsubseteq}~  d ~\mathbin{\sqcap}~ c \, x & ~~\implies~~ & x ~\mathrel{\sqsubseteq}~ \itkleene{c} \, d",
    ));
    laws.push(law(
        "omega-induction",
        LawKind::Implication,
        &[("x", C), ("c", C), ("d", C)],
        &[Cond::Refines("d |-| c ; x", "x")],
        Cond::Refines("c^o ; d", "x"),
        r"d ~\mathbin{\sqcap}~ c \, x ~\mathrel{\sqsubseteq}~ x & ~~\implies~~ & \itomega{c} \, d ~\mathrel{\sqsubseteq}~ x",
    ));
    laws.push(law(
        "nondet-monotonic",
        LawKind::Implication,
        &[("c0", C), ("c1", C), ("d0", C), ("d1", C)],
        &[Cond::Refines("c0", "d0"), Cond::Refines("c1", "d1")],
        Cond::Refines("c0 |-| c1", "d0 |-| d1"),
        r"c_0 \mathbin{\sqcap} c_1 & ~\mathrel{\sqsubseteq}~ & d_0 \mathbin{\sqcap} d_1",
    ));
    laws.push(law(
        "parallel-monotonic",
        LawKind::Implication,
        &[("c0", C), ("c1", C), ("d0", C), ("d1", C)],
        &[Cond::Refines("c0", "d0"), Cond::Refines("c1", "d1")],
        Cond::Refines("c0 || c1", "d0 || d1"),
        r"c_0 \parallel c_1 & \mathrel{\sqsubseteq} & d_0 \parallel d_1",
    ));
    laws.push(law(
        "sequential-monotonic",
        LawKind::Implication,
        &[("c0", C), ("c1", C), ("d0", C), ("d1", C)],
        &[Cond::Refines("c0", "d0"), Cond::Refines("c1", "d1")],
        Cond::Refines("c0 ; c1", "d0 ; d1"),
        r"c_0 \, c_1 & \mathrel{\sqsubseteq} & d_0 \, d_1",
    ));
    laws.push(law(
        "conjunction-monotonic",
        LawKind::Implication,
        &[("c0", C), ("c1", C), ("d0", C), ("d1", C)],
        &[Cond::Refines("c0", "d0"), Cond::Refines("c1", "d1")],
        Cond::Refines("c0 && c1", "d0 && d1"),
        r"c_0 \mathbin{\doublecap} c_1 & \mathrel{\sqsubseteq} & d_0 \mathbin{\doublecap} d_1",
    ));
    laws.push(law(
        "kleene-monotonic",
        LawKind::Implication,
        &[("c", C), ("d", C)],
        &[Cond::Refines("c", "d")],
        Cond::Refines("c^*", "d^*"),
        r"c^{\star} & \mathrel{\sqsubseteq} & d^{\star}",
    ));
    laws.push(law(
        "omega-monotonic",
        LawKind::Implication,
        &[("c", C), ("d", C)],
        &[Cond::Refines("c", "d")],
        Cond::Refines("c^o", "d^o"),
        r"c^{\circ} & \mathrel{\sqsubseteq} & d^{\circ}",
    ));

    // --- weak conjunction laws ---
    laws.push(law(
        "refine-conjunction",
        LawKind::Implication,
        &[("c0", C), ("c1", C), ("d", C)],
        &[Cond::Refines("c0", "d"), Cond::Refines("c1", "d")],
        Cond::Refines("c0 && c1", "d"),
        r"If $c_0 \mathrel{\sqsubseteq} d$ and $c_1 \mathrel{\sqsubseteq} d$,~~~ \( c_0 \mathbin{\doublecap} c_1 ~\mathrel{\sqsubseteq}~ d~. \)",
    ));
    laws.push(law(
        "refine-to-conjunction",
        LawKind::Implication,
        &[("c", C), ("d0", C), ("d1", C)],
        &[Cond::Refines("c", "d0"), Cond::Refines("c", "d1")],
        Cond::Refines("c", "d0 && d1"),
        r"If $c \mathrel{\sqsubseteq} d_0$ and $c \mathrel{\sqsubseteq} d_1$,~~~ \( c ~\mathrel{\sqsubseteq}~ d_0 \mathbin{\doublecap} d_1~. \)",
    ));
    laws.push(law(
        "conjoin-non-aborting",
        LawKind::Implication,
        &[("c", C), ("d", C)],
        &[Cond::Refines("chaos", "d")],
        Cond::Refines("c", "c && d"),
        r"If $\Keyword{chaos} \mathrel{\sqsubseteq} d$,~~~ \( c ~\mathrel{\sqsubseteq}~ c \mathbin{\doublecap} d~. \)",
    ));
    laws.push(refines(
        "conjunction-supremum",
        &[("c", C), ("d", C)],
        "c && d",
        "c |+| d",
        r"$c \mathbin{\doublecap} d \mathrel{\sqsubseteq} c \mathbin{\sqcup} d$.",
    ));
    laws.push(law(
        "conjunction-supremum-nonaborting",
        LawKind::Equation,
        &[("c", C), ("d", C)],
        &[Cond::Refines("chaos", "c"), Cond::Refines("chaos", "d")],
        Cond::Eq("c && d", "c |+| d"),
        r"If $ \Keyword{chaos} \mathrel{\sqsubseteq} c$ and $\Keyword{chaos} \mathrel{\sqsubseteq} d$,~~~~$c \mathbin{\doublecap} d ~=~ c \mathbin{\sqcup} d$.",
    ));
    laws.push(eq(
        "conjunction-distribute-conjunction",
        &[("c", C), ("d0", C), ("d1", C)],
        "c && (d0 && d1)",
        "(c && d0) && (c && d1)",
        r"c \mathbin{\doublecap} (d_0 \mathbin{\doublecap} d_1) & ~=~ & (c \mathbin{\doublecap} d_0) \mathbin{\doublecap} (c \mathbin{\doublecap} d_1)",
    ));
    laws.push(law(
        "conjunction-distribute-parallel",
        LawKind::Refinement,
        &[("c", C), ("d0", C), ("d1", C)],
        &[Cond::Refines("c", "c || c")],
        Cond::Refines("c && (d0 || d1)", "(c && d0) || (c && d1)"),
        r"c \mathbin{\doublecap} (d_0 \parallel d_1) & \mathrel{\sqsubseteq} & (c \mathbin{\doublecap} d_0) \parallel (c \mathbin{\doublecap} d_1) \mbox{~~~~~~~~if $c \mathrel{\sqsubseteq} c \parallel c$}",
    ));
    laws.push(law(
        "conjunction-distribute-sequential",
        LawKind::Refinement,
        &[("c", C), ("d0", C), ("d1", C)],
        &[Cond::Refines("c", "c ; c")],
        Cond::Refines("c && (d0 ; d1)", "(c && d0) ; (c && d1)"),
        r"c \mathbin{\doublecap} (d_0 \, d_1) & \mathrel{\sqsubseteq} & (c \mathbin{\doublecap} d_0) \, (c \mathbin{\doublecap} d_1) \mbox{~~~~~~~~~~~\,if $c \mathrel{\sqsubseteq} c \, c$}",
    ));
    laws.push(refines(
        "conjunction-distribute-kleene",
        &[("c", C), ("d", C)],
        "c^* && d^*",
        "(c && d)^*",
        r"c^{\star} \mathbin{\doublecap} d^{\star} & \mathrel{\sqsubseteq} & (c \mathbin{\doublecap} d)^{\star}",
    ));
    laws.push(refines(
        "conjunction-distribute-omega",
        &[("c", C), ("d", C)],
        "c^o && d^o",
        "(c && d)^o",
        r"c^{\circ} \mathbin{\doublecap} d^{\circ} & \mathrel{\sqsubseteq} & (c \mathbin{\doublecap} d)^{\circ}",
    ));
    laws.push(refines(
        "omega-to-kleene",
        &[("c", C)],
        "c^o!",
        "c^*!",
        r"c^{\omegaskip} & \mathrel{\sqsubseteq} & c^{\varoast}",
    ));
    laws.push(refines(
        "omega-skip",
        &[("c", C)],
        "c^o!",
        "skip",
        r"c^{\omegaskip} & \mathrel{\sqsubseteq} & \Keyword{skip}",
    ));
    laws.push(law(
        "sequential-refines-omega",
        LawKind::Refinement,
        &[("c", C)],
        &[Cond::Refines("c", "skip ; c")],
        Cond::Refines("c^o!", "c^o! ; c^o!"),
        r"c^{\omegaskip} & \mathrel{\sqsubseteq} & c^{\omegaskip} \, c^{\omegaskip} ~~~~~\mbox{if $c \mathrel{\sqsubseteq} \Keyword{skip} \, c$}",
    ));
    laws.push(law(
        "omega-refsto-omega-kleene",
        LawKind::Refinement,
        &[("c", C)],
        &[Cond::Refines("c", "skip ; c")],
        Cond::Refines("c^o!", "(c^o!)^*"),
        r"c^{\omegaskip} & \mathrel{\sqsubseteq} & (c^{\omegaskip})^{\star}                    ~~~~~\mbox{if $c \mathrel{\sqsubseteq} \Keyword{skip} \, c$}",
    ));
    laws.push(law(
        "conjunction-distribute-omega-omega",
        LawKind::Refinement,
        &[("c", C), ("d", C)],
        &[Cond::Refines("c", "skip ; c")],
        Cond::Refines("c^o! && d^o", "(c^o! && d)^o"),
        r"c^{\omegaskip} \mathbin{\doublecap} d^{\circ} & \mathrel{\sqsubseteq} & (c^{\omegaskip} \mathbin{\doublecap} d)^{\circ}",
    ));

    // --- relational commands ---
    laws.push(law(
        "weaken-precondition",
        LawKind::Iff,
        &[("p0", P), ("p1", P)],
        &[Cond::PredSub("p0", "p1")],
        Cond::Refines("pre(p0)", "pre(p1)"),
        r"p_0 \subseteq p_1 & ~\iff~ & \Pre{p_0} \mathrel{\sqsubseteq} \Pre{p_1}",
    ));
    laws.push(law(
        "weaken-environment",
        LawKind::Iff,
        &[("r0", R), ("r1", R)],
        &[Cond::RelSub("r0", "r1")],
        Cond::Refines("envc(r0)", "envc(r1)"),
        r"r_0 \subseteq r_1 & \iff & \envc{r_0} \mathrel{\sqsubseteq} \envc{r_1}",
    ));
    laws.push(law(
        "strengthen-postcondition-atomic",
        LawKind::Iff,
        &[("q0", R), ("q1", R)],
        &[Cond::RelSub("q1", "q0")],
        Cond::Refines("atomic(q0)", "atomic(q1)"),
        r"q_1 \subseteq q_0 & ~\iff~ & \atomicrel{q_0} \mathrel{\sqsubseteq} \atomicrel{q_1}",
    ));
    laws.push(LawSpec {
        name: "atomic-conjoin-atomic",
        kind: LawKind::Equation,
        metavars: &[("g", R), ("r", R)],
        derived: &[Derived::RelIntersect("gr", "g", "r")],
        provisos: &[],
        claim: Some(Cond::Eq("atomic(g) && atomic(r)", "atomic(gr)")),
        provenance: r"\atomicrel{g} \mathbin{\doublecap} \atomicrel{r} & = & \atomicrel{g \cap r}",
        small_command_pool: false,
    });
    laws.push(LawSpec {
        name: "non-skip-conjoin-non-skip",
        kind: LawKind::Equation,
        metavars: &[("g", R), ("r", R), ("c", C), ("d", C)],
        derived: &[Derived::RelIntersect("gr", "g", "r")],
        provisos: &[],
        claim: Some(Cond::Eq(
            "(atomic(g) ; c) && (atomic(r) ; d)",
            "atomic(gr) ; (c && d)",
        )),
        provenance: r"(\atomicrel{g} \, c) \mathbin{\doublecap} (\atomicrel{r} \, d) & = & \atomicrel{g \cap r} \, (c \mathbin{\doublecap} d)",
        small_command_pool: true,
    });
    laws.push(LawSpec {
        name: "skip-conjoin-non-skip",
        kind: LawKind::Equation,
        metavars: &[("g", R), ("c", C)],
        derived: &[],
        provisos: &[],
        claim: Some(Cond::Eq("skip && (atomic(g) ; c)", "skip ; top")),
        provenance: r"\Keyword{skip} \mathbin{\doublecap} (\atomicrel{g} \, c) & = & \Keyword{skip} \, \Keyword{\top}",
        small_command_pool: true,
    });
    laws.push(law(
        "strengthen-postcondition-atomic-kleene",
        LawKind::Implication,
        &[("r0", R), ("r1", R)],
        &[Cond::RelSub("r1", "r0")],
        Cond::Refines("fin(r0)", "fin(r1)"),
        r"r_1 \subseteq r_0 & ~\implies~ & \FinGuar{r_0} \mathrel{\sqsubseteq} \FinGuar{r_1}",
    ));
    laws.push(law(
        "strengthen-postcondition-atomic-omega",
        LawKind::Implication,
        &[("r0", R), ("r1", R)],
        &[Cond::RelSub("r1", "r0")],
        Cond::Refines("inf(r0)", "inf(r1)"),
        r"r_1 \subseteq r_0 & \implies & \InfGuar{r_0} \mathrel{\sqsubseteq} \InfGuar{r_1}",
    ));
    laws.push(LawSpec {
        name: "parallel-atomic-kleene",
        kind: LawKind::Equation,
        metavars: &[("r0", R), ("r1", R)],
        derived: &[Derived::RelUnion("r01", "r0", "r1")],
        provisos: &[],
        claim: Some(Cond::Eq("fin(r01)", "fin(r0) || fin(r1)")),
        provenance: r"\FinGuar{r_0 \cup r_1} & ~=~ &  \FinGuar{r_0} \parallel \FinGuar{r_1}",
        small_command_pool: false,
    });
    laws.push(LawSpec {
        name: "parallel-atomic-omega2",
        kind: LawKind::Refinement,
        metavars: &[("r0", R), ("r1", R)],
        derived: &[Derived::RelUnion("r01", "r0", "r1")],
        provisos: &[],
        claim: Some(Cond::Refines("inf(r01)", "inf(r0) || inf(r1)")),
        provenance: r"\InfGuar{r_0 \cup r_1} & \mathrel{\sqsubseteq} & \InfGuar{r_0} \parallel \InfGuar{r_1}",
        small_command_pool: false,
    });
    laws.push(eq(
        "parallel-atomic-omega1",
        &[("r", R)],
        "inf(r)",
        "inf(r) || inf(r)",
        r"\InfGuar{r} & = & \InfGuar{r} \parallel \InfGuar{r}",
    ));
    laws.push(LawSpec {
        name: "precondition-conjunction",
        kind: LawKind::Equation,
        metavars: &[("p", P), ("c", C), ("d", C)],
        derived: &[],
        provisos: &[],
        claim: Some(Cond::Eq("pre(p) ; (c && d)", "(pre(p) ; c) && (pre(p) ; d)")),
        provenance: r"\Pre{p} \, ( c \mathbin{\doublecap} d) ~~=~~ (\Pre{p} \, c) \mathbin{\doublecap} (\Pre{p} \, d)~.",
        small_command_pool: true,
    });
    laws.push(LawSpec {
        name: "precondition-parallel",
        kind: LawKind::Equation,
        metavars: &[("p", P), ("c", C), ("d", C)],
        derived: &[],
        provisos: &[],
        claim: Some(Cond::Eq("pre(p) ; (c || d)", "(pre(p) ; c) || (pre(p) ; d)")),
        provenance: r"\Pre{p} \, ( c \parallel d) ~~=~~ (\Pre{p} \, c) \parallel (\Pre{p} \, d)~.",
        small_command_pool: true,
    });
    laws.push(LawSpec {
        name: "spec-conjoin-spec",
        kind: LawKind::Equation,
        metavars: &[("q0", R), ("q1", R)],
        derived: &[Derived::RelIntersect("q01", "q0", "q1")],
        provisos: &[],
        claim: Some(Cond::Eq("spec(q0) && spec(q1)", "spec(q01)")),
        provenance: r"\@ifnextchar*{\@Spec}{\@@Spec}{}{}{q_0} \mathbin{\doublecap} \@ifnextchar*{\@Spec}{\@@Spec}{}{}{q_1} & ~=~ & \@ifnextchar*{\@Spec}{\@@Spec}{}{}{q_0 \cap q_1}",
        small_command_pool: false,
    });

    // --- guarantee laws ---
    laws.push(law(
        "guarantee-strengthen",
        LawKind::Implication,
        &[("g0", R), ("g1", R), ("c", C)],
        &[Cond::RelSub("g0", "g1")],
        Cond::Refines("inf(g1) && c", "inf(g0) && c"),
        r"such that $g_0 \subseteq g_1$, \InfGuar{g_1} \mathbin{\doublecap} c & ~\mathrel{\sqsubseteq}~ & \InfGuar{g_0} \mathbin{\doublecap} c~.",
    ));
    laws.push(refines(
        "guarantee-introduce",
        &[("g", R), ("c", C)],
        "c",
        "inf(g) && c",
        r"c  ~\mathrel{\sqsubseteq}~ \InfGuar{g} \mathbin{\doublecap} c~.",
    ));
    laws.push(LawSpec {
        name: "conjunction-atomic-iterated",
        kind: LawKind::Equation,
        metavars: &[("g0", R), ("g1", R)],
        derived: &[Derived::RelIntersect("g01", "g0", "g1")],
        provisos: &[],
        claim: Some(Cond::Eq("inf(g0) && inf(g1)", "inf(g01)")),
        provenance: r"\InfGuar{g_0} \mathbin{\doublecap} \InfGuar{g_1} ~=~ \InfGuar{g_0 \cap g_1}",
        small_command_pool: false,
    });
    laws.push(LawSpec {
        name: "guarantee-nested",
        kind: LawKind::Equation,
        metavars: &[("g0", R), ("g1", R), ("c", C)],
        derived: &[Derived::RelIntersect("g01", "g0", "g1")],
        provisos: &[],
        claim: Some(Cond::Eq("inf(g0) && inf(g1) && c", "inf(g01) && c")),
        provenance: r"\InfGuar{g_0} \mathbin{\doublecap} \InfGuar{g_1} \mathbin{\doublecap} c ~~=~~ \InfGuar{g_0 \cap g_1} \mathbin{\doublecap} c",
        small_command_pool: true,
    });
    laws.push(eq(
        "guarantee-distribute-nondet",
        &[("g", R), ("c", C), ("d", C)],
        "inf(g) && (c |-| d)",
        "(inf(g) && c) |-| (inf(g) && d)",
        r"\InfGuar{g} \mathbin{\doublecap} (c \mathbin{\sqcap} d) & ~=~ & (\InfGuar{g} \mathbin{\doublecap} c) \mathbin{\sqcap} (\InfGuar{g} \mathbin{\doublecap} d)",
    ));
    laws.push(eq(
        "guarantee-distribute-conjunction",
        &[("g", R), ("c", C), ("d", C)],
        "inf(g) && (c && d)",
        "(inf(g) && c) && (inf(g) && d)",
        r"\InfGuar{g} \mathbin{\doublecap} (c \mathbin{\doublecap} d) & = & (\InfGuar{g} \mathbin{\doublecap} c) \mathbin{\doublecap} (\InfGuar{g} \mathbin{\doublecap} d)",
    ));
    laws.push(refines(
        "guarantee-distribute-parallel",
        &[("g", R), ("c", C), ("d", C)],
        "inf(g) && (c || d)",
        "(inf(g) && c) || (inf(g) && d)",
        r"\InfGuar{g} \mathbin{\doublecap} (c \parallel d) & \mathrel{\sqsubseteq} & (\InfGuar{g} \mathbin{\doublecap} c) \parallel (\InfGuar{g} \mathbin{\doublecap} d)",
    ));
    laws.push(refines(
        "guarantee-distribute-sequential",
        &[("g", R), ("c", C), ("d", C)],
        "inf(g) && (c ; d)",
        "(inf(g) && c) ; (inf(g) && d)",
        r"\InfGuar{g} \mathbin{\doublecap} (c \, d) & \mathrel{\sqsubseteq} & (\InfGuar{g} \mathbin{\doublecap} c) \, (\InfGuar{g} \mathbin{\doublecap} d)",
    ));
    laws.push(refines(
        "guarantee-distribute-kleene",
        &[("g", R), ("c", C)],
        "inf(g) && c^*",
        "(inf(g) && c)^*",
        r"\InfGuar{g} \mathbin{\doublecap} c^{\star} & \mathrel{\sqsubseteq} & (\InfGuar{g} \mathbin{\doublecap} c)^{\star}",
    ));
    laws.push(refines(
        "guarantee-distribute-omega",
        &[("g", R), ("c", C)],
        "inf(g) && c^o",
        "(inf(g) && c)^o",
        r"\InfGuar{g} \mathbin{\doublecap} c^{\circ} & \mathrel{\sqsubseteq} & (\InfGuar{g} \mathbin{\doublecap} c)^{\circ}",
    ));

    // --- rely quotient laws ---
    // Proviso `i ≠ bot`: when the rely aborts immediately, `d || i = bot` for
    // every `d`, so no weakest environment exists unless `c = bot`; the
    // quotient degenerates to `top` and the law cannot hold. Same deviation
    // as for `parallel-top-zero`.
    laws.push(law(
        "rely-quotient",
        LawKind::Refinement,
        &[("c", C), ("i", C)],
        &[Cond::NotRefines("i", "bot")],
        Cond::Refines("c", "(c // i) || i"),
        r"c ~~\mathrel{\sqsubseteq}~~ (c \mathbin{/\!\!/} i) ~\parallel~ i~.",
    ));
    // The `NotRefines` gate excludes `i = bot`, where the Galois connection
    // fails for the reason documented at `rely-quotient`.
    laws.push(law(
        "rely-refinement",
        LawKind::Iff,
        &[("c", C), ("d", C), ("i", C)],
        &[Cond::NotRefines("i", "bot"), Cond::Refines("c // i", "d")],
        Cond::Refines("c", "d || i"),
        r"c \mathbin{/\!\!/} i ~\mathrel{\sqsubseteq}~ d ~~~\iff~~~c ~\mathrel{\sqsubseteq}~ d \parallel i~.",
    ));
    laws.push(eq(
        "rely-identity-right",
        &[("c", C)],
        "c // skip",
        "c",
        r"c \mathbin{/\!\!/} \Keyword{skip} ~=~ c",
    ));
    laws.push(law(
        "rely-monotonic",
        LawKind::Implication,
        &[("c", C), ("d", C), ("i", C)],
        &[Cond::Refines("c", "d")],
        Cond::Refines("c // i", "d // i"),
        r"c \mathrel{\sqsubseteq} d ~~~\implies~~~ (c \mathbin{/\!\!/} i) ~\mathrel{\sqsubseteq}~ (d \mathbin{/\!\!/} i)~.",
    ));
    laws.push(law(
        "rely-weaken",
        LawKind::Implication,
        &[("c", C), ("i", C), ("j", C)],
        &[Cond::Refines("i", "j")],
        Cond::Refines("c // j", "c // i"),
        r"i \mathrel{\sqsubseteq} j ~~~\implies~~~ (c \mathbin{/\!\!/} j) ~\mathrel{\sqsubseteq}~ (c \mathbin{/\!\!/} i)~.",
    ));
    // Proviso excludes aborting relies, where the quotient degenerates; see
    // the note at `rely-quotient`.
    laws.push(law(
        "rely-nested",
        LawKind::Equation,
        &[("c", C), ("i", C), ("j", C)],
        &[Cond::NotRefines("i || j", "bot")],
        Cond::Eq("(c // j) // i", "c // (i || j)"),
        r"(c \mathbin{/\!\!/} j) \mathbin{/\!\!/} i ~=~ c \mathbin{/\!\!/} (i \parallel j)",
    ));
    laws.push(LawSpec {
        name: "rely-nested-rel",
        kind: LawKind::Equation,
        metavars: &[("r0", R), ("r1", R), ("c", C)],
        derived: &[Derived::RelUnion("r01", "r0", "r1")],
        provisos: &[],
        claim: Some(Cond::Eq("(c // fin(r1)) // fin(r0)", "c // fin(r01)")),
        provenance: r"(c \mathbin{/\!\!/} \FinGuar{r_1}) \mathbin{/\!\!/} \FinGuar{r_0} ~=~ c \mathbin{/\!\!/} (\FinGuar{r_0} \parallel \FinGuar{r_1}) ~=~ c \mathbin{/\!\!/} \FinGuar{r_0 \cup r_1}~.",
        small_command_pool: true,
    });
    // Provisos exclude aborting relies, where `rely-quotient` (which this law
    // is derived from) does not hold in this model.
    laws.push(law(
        "parallel-introduce",
        LawKind::Refinement,
        &[("c", C), ("d", C), ("i", C), ("j", C)],
        &[Cond::NotRefines("i", "bot"), Cond::NotRefines("j", "bot")],
        Cond::Refines("c && d", "(j && (c // i)) || (i && (d // j))"),
        r"c \mathbin{\doublecap} d ~~\mathrel{\sqsubseteq}~~ (j \mathbin{\doublecap} (c \mathbin{/\!\!/} i)) ~\parallel~ (i \mathbin{\doublecap} (d \mathbin{/\!\!/} j))",
    ));
    laws.push(refines(
        "rely-distribute-conjunction",
        &[("c", C), ("d", C), ("i", C)],
        "(c && d) // i",
        "(c // i) && (d // i)",
        r"(c \mathbin{\doublecap} d) \mathbin{/\!\!/} i ~~\mathrel{\sqsubseteq}~~ (c \mathbin{/\!\!/} i) \mathbin{\doublecap} (d \mathbin{/\!\!/} i)",
    ));
    laws.push(refines(
        "rely-distribute-choice",
        &[("c", C), ("d", C), ("i", C)],
        "(c |-| d) // i",
        "(c // i) |-| (d // i)",
        r"(c \mathbin{\sqcap} d) \mathbin{/\!\!/} i ~~\mathrel{\sqsubseteq}~~ (c \mathbin{/\!\!/} i) \mathbin{\sqcap} (d \mathbin{/\!\!/} i)",
    ));
    laws.push(refines(
        "rely-distribute-parallel-a",
        &[("c", C), ("d", C), ("i", C), ("j", C)],
        "(c || d) // (i || j)",
        "(c // i) || (d // j)",
        r"(c \parallel d) \mathbin{/\!\!/} (i \parallel j)  & ~\mathrel{\sqsubseteq}~ & (c \mathbin{/\!\!/} i) ~\parallel~ (d \mathbin{/\!\!/} j)",
    ));
    laws.push(law(
        "rely-distribute-parallel-b",
        LawKind::Refinement,
        &[("c", C), ("d", C), ("i", C)],
        &[Cond::Refines("i || i", "i")],
        Cond::Refines("(c || d) // i", "(c // i) || (d // i)"),
        r"(c \parallel d) \mathbin{/\!\!/} i & ~\mathrel{\sqsubseteq}~ & (c \mathbin{/\!\!/} i) ~\parallel~ (d \mathbin{/\!\!/} i)  \mbox{~~~if $i \parallel i ~\mathrel{\sqsubseteq}~ i$}",
    ));
    laws.push(law(
        "rely-distribute-sequential",
        LawKind::Refinement,
        &[("c", C), ("d", C), ("i", C)],
        &[Cond::SeqParAssumption("i")],
        Cond::Refines("(c ; d) // i", "(c // i) ; (d // i)"),
        r"\forall c_0, c_1 \mathrel{{\cdot}} (c_0 \parallel i) \, (c_1 \parallel i) ~\mathrel{\sqsubseteq}~ (c_0 \, c_1) \parallel i, then (c \, d) \mathbin{/\!\!/} i  & ~\mathrel{\sqsubseteq}~ & (c \mathbin{/\!\!/} i) \, (d \mathbin{/\!\!/} i)~.",
    ));
    laws.push(law(
        "rely-distribute-iteration",
        LawKind::Refinement,
        &[("c", C), ("d", C), ("i", C)],
        &[Cond::SeqParAssumption("i")],
        Cond::Refines("(c^o ; d) // i", "(c // i)^o ; (d // i)"),
        r"(c^{\circ} \, d) \mathbin{/\!\!/} i ~~\mathrel{\sqsubseteq}~~ (c \mathbin{/\!\!/} i)^{\circ} \, (d \mathbin{/\!\!/} i)~.",
    ));
    // Provisos exclude aborting divisors `j0 || i` and `j1 || i`, as for
    // `parallel-introduce`.
    laws.push(law(
        "parallel-introduce-with-rely",
        LawKind::Refinement,
        &[("c", C), ("d", C), ("i", C), ("j0", C), ("j1", C)],
        &[
            Cond::NotRefines("j0 || i", "bot"),
            Cond::NotRefines("j1 || i", "bot"),
        ],
        Cond::Refines(
            "(c && d) // i",
            "(j1 && (c // (j0 || i))) || (j0 && (d // (j1 || i)))",
        ),
        r"(c \mathbin{\doublecap} d) \mathbin{/\!\!/} i ~~\mathrel{\sqsubseteq}~ (j_1 \mathbin{\doublecap} (c \mathbin{/\!\!/} (j_0 \parallel i))) ~\parallel~ (j_0 \mathbin{\doublecap} (d \mathbin{/\!\!/} (j_1 \parallel i)))",
    ));
    laws.push(law(
        "parallel-introduce-with-rely-guarantee",
        LawKind::Refinement,
        &[("c", C), ("d", C), ("i", C), ("j0", C), ("j1", C)],
        &[
            Cond::NotRefines("j0 || i", "bot"),
            Cond::NotRefines("j1 || i", "bot"),
        ],
        Cond::Refines(
            "(j1 || j0) && ((c && d) // i)",
            "(j1 && (c // (j0 || i))) || (j0 && (d // (j1 || i)))",
        ),
        r"(j_1 \parallel j_0) ~\mathbin{\doublecap}~ (c \mathbin{\doublecap} d) \mathbin{/\!\!/} i & ~~\mathrel{\sqsubseteq}~ & (j_1 \mathbin{\doublecap} (c \mathbin{/\!\!/} (j_0 \parallel i))) ~\parallel~ (j_0 \mathbin{\doublecap} (d \mathbin{/\!\!/} (j_1 \parallel i)))~.",
    ));
    laws.push(LawSpec {
        name: "parallel-introduce-relational",
        kind: LawKind::Refinement,
        metavars: &[("r", R), ("g", R), ("c", C), ("d", C)],
        derived: &[],
        provisos: &[],
        claim: Some(Cond::Refines(
            "c && d",
            "(fin(g) && (c // fin(r))) || (fin(r) && (d // fin(g)))",
        )),
        provenance: r"c \mathbin{\doublecap} d & ~~\mathrel{\sqsubseteq} & (\FinGuar{g} \mathbin{\doublecap} (c \mathbin{/\!\!/} \FinGuar{r})) ~\parallel~ (\FinGuar{r} \mathbin{\doublecap} (d \mathbin{/\!\!/} \FinGuar{g}))",
        small_command_pool: true,
    });
    laws.push(LawSpec {
        name: "parallel-specification",
        kind: LawKind::Refinement,
        metavars: &[("p", P), ("q0", R), ("q1", R), ("r", R), ("g", R)],
        derived: &[Derived::RelIntersect("q01", "q0", "q1")],
        provisos: &[],
        claim: Some(Cond::Refines(
            "pre(p) ; spec(q01)",
            "(pre(p) ; (fin(g) && (spec(q0) // fin(r)))) || (pre(p) ; (fin(r) && (spec(q1) // fin(g))))",
        )),
        provenance: r"\Pre{p} \, \@ifnextchar*{\@Spec}{\@@Spec}{}{}{q_0 \cap q_1} & ~\mathrel{\sqsubseteq} & (\Pre{p} \, (\FinGuar{g} \mathbin{\doublecap} (\@ifnextchar*{\@Spec}{\@@Spec}{}{}{q_0} \mathbin{/\!\!/} \FinGuar{r}))) \parallel (\Pre{p} \, (\FinGuar{r} \mathbin{\doublecap} (\@ifnextchar*{\@Spec}{\@@Spec}{}{}{q_1} \mathbin{/\!\!/} \FinGuar{g})))",
        small_command_pool: false,
    });
    laws.push(special(
        "quintuple-as-refinement",
        &[],
        r"\Pre{p} \, (\FinGuar{g} \mathbin{\doublecap} (\@ifnextchar*{\@Spec}{\@@Spec}{}{}{q} \mathbin{/\!\!/} \FinGuar{r})) & ~\mathrel{\sqsubseteq}~ & c",
    ));

    laws
}

/// Deliberately broken variants: each has a necessary proviso removed and is
/// expected to produce a counterexample.
pub fn negative_catalogue() -> Vec<LawSpec> {
    vec![
        refines(
            "conjunction-distribute-parallel",
            &[("c", C), ("d0", C), ("d1", C)],
            "c && (d0 || d1)",
            "(c && d0) || (c && d1)",
            r"proviso `c \mathrel{\sqsubseteq} c \parallel c` removed",
        ),
        refines(
            "conjunction-distribute-sequential",
            &[("c", C), ("d0", C), ("d1", C)],
            "c && (d0 ; d1)",
            "(c && d0) ; (c && d1)",
            r"proviso `c \mathrel{\sqsubseteq} c \, c` removed",
        ),
        refines(
            "conjoin-non-aborting",
            &[("c", C), ("d", C)],
            "c",
            "c && d",
            r"proviso `\Keyword{chaos} \mathrel{\sqsubseteq} d` removed",
        ),
        eq(
            "conjunction-supremum-nonaborting",
            &[("c", C), ("d", C)],
            "c && d",
            "c |+| d",
            r"provisos `\Keyword{chaos} \mathrel{\sqsubseteq} c` and `\Keyword{chaos} \mathrel{\sqsubseteq} d` removed",
        ),
        refines(
            "rely-distribute-parallel-b",
            &[("c", C), ("d", C), ("i", C)],
            "(c || d) // i",
            "(c // i) || (d // i)",
            r"proviso `i \parallel i \mathrel{\sqsubseteq} i` removed",
        ),
        refines(
            "rely-distribute-sequential",
            &[("c", C), ("d", C), ("i", C)],
            "(c ; d) // i",
            "(c // i) ; (d // i)",
            r"sequential distribution assumption on `i` removed",
        ),
    ]
}

/// The checked-in list of law names, one per line.
pub const MANIFEST: &str = include_str!("manifest.txt");

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::parse;
    use std::collections::BTreeSet;

    #[test]
    fn catalogue_matches_manifest() {
        let names: Vec<&str> = law_catalogue().iter().map(|l| l.name).collect();
        let manifest: Vec<&str> = MANIFEST.lines().filter(|l| !l.is_empty()).collect();
        assert_eq!(names, manifest, "catalogue and manifest disagree");
        assert!(names.len() >= 70, "catalogue too small: {}", names.len());
        let unique: BTreeSet<&str> = names.iter().copied().collect();
        assert_eq!(unique.len(), names.len(), "duplicate law names");
    }

    #[test]
    fn templates_parse_and_are_well_scoped() {
        for spec in law_catalogue().iter().chain(negative_catalogue().iter()) {
            let declared: BTreeSet<&str> = spec
                .metavars
                .iter()
                .map(|(n, _)| *n)
                .chain(spec.derived.iter().map(|d| match d {
                    Derived::RelIntersect(o, _, _) | Derived::RelUnion(o, _, _) => *o,
                }))
                .collect();
            let mut conds: Vec<&Cond> = spec.provisos.iter().collect();
            if let Some(c) = &spec.claim {
                conds.push(c);
            }
            for cond in conds {
                match cond {
                    Cond::Refines(a, b) | Cond::Eq(a, b) => {
                        for t in [a, b] {
                            let e = parse(t).unwrap_or_else(|err| {
                                panic!("{}: template `{}` fails to parse: {}", spec.name, t, err)
                            });
                            for v in e.free_vars() {
                                assert!(
                                    declared.contains(v.as_str()),
                                    "{}: template `{}` uses undeclared `{}`",
                                    spec.name,
                                    t,
                                    v
                                );
                            }
                        }
                    }
                    Cond::RelSub(a, b) | Cond::PredSub(a, b) => {
                        for v in [a, b] {
                            assert!(declared.contains(v), "{}: undeclared `{}`", spec.name, v);
                        }
                    }
                    Cond::SeqParAssumption(i) => {
                        assert!(declared.contains(i), "{}: undeclared `{}`", spec.name, i);
                    }
                }
            }
        }
    }
}
