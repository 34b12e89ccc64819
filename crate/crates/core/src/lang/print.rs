//! Minimal-parentheses pretty printer; `parse(print(e)) = e`.

use std::fmt::Write;

use super::ast::{Expr, PredLit, RelLit};

/// Binding strength of an expression's top node; larger binds tighter.
fn level(e: &Expr) -> u8 {
    use Expr::*;
    match e {
        Nondet(..) | Sup(..) => 1,
        Par(..) => 2,
        Conj(..) => 3,
        Quot(..) => 4,
        Seq(..) => 5,
        Star(..) | Omega(..) | StarSkip(..) | OmegaSkip(..) => 6,
        _ => 7,
    }
}

fn rel_text(r: &RelLit) -> String {
    match r {
        RelLit::Id => "id".to_string(),
        RelLit::Univ => "univ".to_string(),
        RelLit::Empty => "none".to_string(),
        RelLit::Var(v) => v.clone(),
        RelLit::Pairs(ps) => {
            let mut s = String::from("{");
            for (i, (a, b)) in ps.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                write!(s, "({a},{b})").unwrap();
            }
            s.push('}');
            s
        }
    }
}

fn pred_text(p: &PredLit) -> String {
    match p {
        PredLit::All => "all".to_string(),
        PredLit::Empty => "none".to_string(),
        PredLit::Var(v) => v.clone(),
        PredLit::States(ss) => {
            let mut s = String::from("{");
            for (i, st) in ss.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                write!(s, "{st}").unwrap();
            }
            s.push('}');
            s
        }
    }
}

fn render(e: &Expr, min: u8, out: &mut String) {
    use Expr::*;
    let lv = level(e);
    if lv < min {
        out.push('(');
        render(e, 0, out);
        out.push(')');
        return;
    }
    match e {
        Bot => out.push_str("bot"),
        Top => out.push_str("top"),
        Nil => out.push_str("nil"),
        Skip => out.push_str("skip"),
        Chaos => out.push_str("chaos"),
        Term => out.push_str("term"),
        Hole => out.push('_'),
        MetaVar(v) => out.push_str(v),
        PStep(r) => write!(out, "pi({})", rel_text(r)).unwrap(),
        EStep(r) => write!(out, "eps({})", rel_text(r)).unwrap(),
        EStepAbort(r) => write!(out, "epsx({})", rel_text(r)).unwrap(),
        Atomic(r) => write!(out, "atomic({})", rel_text(r)).unwrap(),
        EnvC(r) => write!(out, "envc({})", rel_text(r)).unwrap(),
        Spec(r) => write!(out, "spec({})", rel_text(r)).unwrap(),
        FinG(r) => write!(out, "fin({})", rel_text(r)).unwrap(),
        InfG(r) => write!(out, "inf({})", rel_text(r)).unwrap(),
        Guard(p) => write!(out, "guard({})", pred_text(p)).unwrap(),
        Pre(p) => write!(out, "pre({})", pred_text(p)).unwrap(),
        Nondet(l, r) | Sup(l, r) | Par(l, r) | Conj(l, r) | Quot(l, r) | Seq(l, r) => {
            let op = match e {
                Nondet(..) => "|-|",
                Sup(..) => "|+|",
                Par(..) => "||",
                Conj(..) => "&&",
                Quot(..) => "//",
                _ => ";",
            };
            render(l, lv, out);
            write!(out, " {op} ").unwrap();
            render(r, lv + 1, out);
        }
        Star(x) | Omega(x) | StarSkip(x) | OmegaSkip(x) => {
            let op = match e {
                Star(..) => "^*",
                Omega(..) => "^o",
                StarSkip(..) => "^*!",
                _ => "^o!",
            };
            render(x, lv, out);
            out.push_str(op);
        }
    }
}

pub fn print(e: &Expr) -> String {
    let mut out = String::new();
    render(e, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::super::parse::parse;
    use super::*;

    fn round(text: &str) -> String {
        print(&parse(text).unwrap())
    }

    #[test]
    fn minimal_parentheses() {
        assert_eq!(round("(a ; b) || c"), "a ; b || c");
        assert_eq!(round("a |-| b"), "a |-| b");
        assert_eq!(round("a ; (b ; c)"), "a ; (b ; c)");
        assert_eq!(round("(a |-| b) ; c"), "(a |-| b) ; c");
        assert_eq!(round("atomic(id)^*"), "atomic(id)^*");
        assert_eq!(round("(a ; b)^o"), "(a ; b)^o");
        assert_eq!(round("a^*^o!"), "a^*^o!");
    }

    #[test]
    fn literal_rendering() {
        assert_eq!(round("pi({(0,1),(1,0)})"), "pi({(0,1),(1,0)})");
        assert_eq!(round("guard({0})"), "guard({0})");
        assert_eq!(round("pre(all)"), "pre(all)");
        assert_eq!(round("spec(univ) && envc(r)"), "spec(univ) && envc(r)");
    }

    #[test]
    fn reparse_is_identity() {
        for text in [
            "a ; b || c && d // e |-| f |+| g",
            "((a |-| b) && c)^o! ; skip",
            "fin(id) || inf(univ) // pre({0,1})",
        ] {
            let e = parse(text).unwrap();
            assert_eq!(parse(&print(&e)).unwrap(), e);
        }
    }
}
