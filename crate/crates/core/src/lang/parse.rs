//! Recursive-descent parser for the command expression language.
//!
//! Precedence, lowest binding first: `|-|` and `|+|` (one level), `||`,
//! `&&`, `//`, `;`. All binary operators associate to the left and the
//! iteration postfixes bind tighter than `;`.

use super::ast::{Expr, PredLit, RelLit};
use crate::error::{ModelError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    NondetOp,
    SupOp,
    ParOp,
    ConjOp,
    QuotOp,
    SeqOp,
    Star,
    Omega,
    StarSkip,
    OmegaSkip,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Number(u8),
    Ident(String),
    End,
}

fn err(offset: usize, expected: &str) -> ModelError {
    ModelError::Parse {
        offset,
        expected: expected.to_string(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut toks = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (off, c) = chars[i];
        let rest = &text[off..];
        let mut take = |n: usize, t: Tok, toks: &mut Vec<(usize, Tok)>| {
            toks.push((off, t));
            i += n;
        };
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '#' => {
                while i < chars.len() && chars[i].1 != '\n' {
                    i += 1;
                }
            }
            _ if rest.starts_with("|-|") => take(3, Tok::NondetOp, &mut toks),
            _ if rest.starts_with("|+|") => take(3, Tok::SupOp, &mut toks),
            _ if rest.starts_with("||") => take(2, Tok::ParOp, &mut toks),
            _ if rest.starts_with("&&") => take(2, Tok::ConjOp, &mut toks),
            _ if rest.starts_with("//") => take(2, Tok::QuotOp, &mut toks),
            '⊓' => take(1, Tok::NondetOp, &mut toks),
            '⊔' => take(1, Tok::SupOp, &mut toks),
            '∥' => take(1, Tok::ParOp, &mut toks),
            '⋓' => take(1, Tok::ConjOp, &mut toks),
            ';' => take(1, Tok::SeqOp, &mut toks),
            _ if rest.starts_with("^*!") => take(3, Tok::StarSkip, &mut toks),
            _ if rest.starts_with("^o!") => take(3, Tok::OmegaSkip, &mut toks),
            _ if rest.starts_with("^*") => take(2, Tok::Star, &mut toks),
            _ if rest.starts_with("^o") => take(2, Tok::Omega, &mut toks),
            '(' => take(1, Tok::LParen, &mut toks),
            ')' => take(1, Tok::RParen, &mut toks),
            '{' => take(1, Tok::LBrace, &mut toks),
            '}' => take(1, Tok::RBrace, &mut toks),
            ',' => take(1, Tok::Comma, &mut toks),
            '0'..='9' => {
                let mut j = i;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                let s = &text[off..chars.get(j).map_or(text.len(), |&(o, _)| o)];
                let n: u8 = s
                    .parse()
                    .map_err(|_| err(off, "a state number below 256"))?;
                toks.push((off, Tok::Number(n)));
                i = j;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len()
                    && (chars[j].1.is_ascii_alphanumeric() || chars[j].1 == '_')
                {
                    j += 1;
                }
                let s = &text[off..chars.get(j).map_or(text.len(), |&(o, _)| o)];
                toks.push((off, Tok::Ident(s.to_string())));
                i = j;
            }
            _ => return Err(err(off, "an operator, identifier or literal")),
        }
    }
    toks.push((text.len(), Tok::End));
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.peek() == &t {
            self.bump();
            Ok(())
        } else {
            Err(err(self.offset(), what))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.par()?;
        loop {
            match self.peek() {
                Tok::NondetOp => {
                    self.bump();
                    lhs = Expr::nondet(lhs, self.par()?);
                }
                Tok::SupOp => {
                    self.bump();
                    lhs = Expr::sup(lhs, self.par()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn par(&mut self) -> Result<Expr> {
        let mut lhs = self.conj()?;
        while self.peek() == &Tok::ParOp {
            self.bump();
            lhs = Expr::par(lhs, self.conj()?);
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> Result<Expr> {
        let mut lhs = self.quot()?;
        while self.peek() == &Tok::ConjOp {
            self.bump();
            lhs = Expr::conj(lhs, self.quot()?);
        }
        Ok(lhs)
    }

    fn quot(&mut self) -> Result<Expr> {
        let mut lhs = self.seq()?;
        while self.peek() == &Tok::QuotOp {
            self.bump();
            lhs = Expr::quot(lhs, self.seq()?);
        }
        Ok(lhs)
    }

    fn seq(&mut self) -> Result<Expr> {
        let mut lhs = self.postfix()?;
        while self.peek() == &Tok::SeqOp {
            self.bump();
            lhs = Expr::seq(lhs, self.postfix()?);
        }
        Ok(lhs)
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        loop {
            e = match self.peek() {
                Tok::Star => Expr::Star(Box::new(e)),
                Tok::Omega => Expr::Omega(Box::new(e)),
                Tok::StarSkip => Expr::StarSkip(Box::new(e)),
                Tok::OmegaSkip => Expr::OmegaSkip(Box::new(e)),
                _ => return Ok(e),
            };
            self.bump();
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let off = self.offset();
        match self.bump() {
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Ident(name) => self.named(off, name),
            _ => Err(err(off, "an atom, identifier or `(`")),
        }
    }

    fn named(&mut self, off: usize, name: String) -> Result<Expr> {
        match name.as_str() {
            "bot" => return Ok(Expr::Bot),
            "top" => return Ok(Expr::Top),
            "nil" => return Ok(Expr::Nil),
            "skip" => return Ok(Expr::Skip),
            "chaos" => return Ok(Expr::Chaos),
            "term" => return Ok(Expr::Term),
            "_" => return Ok(Expr::Hole),
            _ => {}
        }
        let rel = |p: &mut Parser| p.rel_lit();
        let pred = |p: &mut Parser| p.pred_lit();
        macro_rules! unary {
            ($ctor:path, $arg:expr) => {{
                self.expect(Tok::LParen, "`(`")?;
                let lit = $arg(self)?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok($ctor(lit));
            }};
        }
        match name.as_str() {
            "pi" => unary!(Expr::PStep, rel),
            "eps" => unary!(Expr::EStep, rel),
            "epsx" => unary!(Expr::EStepAbort, rel),
            "atomic" => unary!(Expr::Atomic, rel),
            "envc" => unary!(Expr::EnvC, rel),
            "spec" => unary!(Expr::Spec, rel),
            "fin" => unary!(Expr::FinG, rel),
            "inf" => unary!(Expr::InfG, rel),
            "guard" => unary!(Expr::Guard, pred),
            "pre" => unary!(Expr::Pre, pred),
            _ => {
                if self.peek() == &Tok::LParen {
                    return Err(err(off, "a primitive command name before `(`"));
                }
                Ok(Expr::MetaVar(name))
            }
        }
    }

    fn rel_lit(&mut self) -> Result<RelLit> {
        let off = self.offset();
        match self.bump() {
            Tok::Ident(s) => match s.as_str() {
                "id" => Ok(RelLit::Id),
                "univ" => Ok(RelLit::Univ),
                "none" => Ok(RelLit::Empty),
                _ => Ok(RelLit::Var(s)),
            },
            Tok::LBrace => {
                let mut pairs = Vec::new();
                while self.peek() != &Tok::RBrace {
                    if !pairs.is_empty() {
                        self.expect(Tok::Comma, "`,` or `}`")?;
                    }
                    self.expect(Tok::LParen, "`(`")?;
                    let a = self.number()?;
                    self.expect(Tok::Comma, "`,`")?;
                    let b = self.number()?;
                    self.expect(Tok::RParen, "`)`")?;
                    pairs.push((a, b));
                }
                self.bump();
                Ok(RelLit::Pairs(pairs))
            }
            _ => Err(err(off, "a relation literal")),
        }
    }

    fn pred_lit(&mut self) -> Result<PredLit> {
        let off = self.offset();
        match self.bump() {
            Tok::Ident(s) => match s.as_str() {
                "all" => Ok(PredLit::All),
                "none" => Ok(PredLit::Empty),
                _ => Ok(PredLit::Var(s)),
            },
            Tok::LBrace => {
                let mut states = Vec::new();
                while self.peek() != &Tok::RBrace {
                    if !states.is_empty() {
                        self.expect(Tok::Comma, "`,` or `}`")?;
                    }
                    states.push(self.number()?);
                }
                self.bump();
                Ok(PredLit::States(states))
            }
            _ => Err(err(off, "a predicate literal")),
        }
    }

    fn number(&mut self) -> Result<u8> {
        let off = self.offset();
        match self.bump() {
            Tok::Number(n) => Ok(n),
            _ => Err(err(off, "a state number")),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(err(p.offset(), "end of input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::ast::Expr::*;

    #[test]
    fn precedence_chain() {
        // `;` binds tightest among the binary operators
        assert_eq!(
            parse("a ; b || c").unwrap(),
            Expr::par(Expr::seq(Expr::var("a"), Expr::var("b")), Expr::var("c"))
        );
        // quotient sits between conjunction and sequence
        assert_eq!(
            parse("a && b // c ; d").unwrap(),
            Expr::conj(
                Expr::var("a"),
                Expr::quot(Expr::var("b"), Expr::seq(Expr::var("c"), Expr::var("d")))
            )
        );
        // choice and supremum share the loosest level, left-associated
        assert_eq!(
            parse("a |-| b |+| c").unwrap(),
            Expr::sup(Expr::nondet(Expr::var("a"), Expr::var("b")), Expr::var("c"))
        );
    }

    #[test]
    fn left_associativity_and_parens() {
        assert_eq!(
            parse("a ; b ; c").unwrap(),
            Expr::seq(Expr::seq(Expr::var("a"), Expr::var("b")), Expr::var("c"))
        );
        assert_eq!(
            parse("a ; (b ; c)").unwrap(),
            Expr::seq(Expr::var("a"), Expr::seq(Expr::var("b"), Expr::var("c")))
        );
    }

    #[test]
    fn postfix_binds_tighter_than_seq() {
        assert_eq!(
            parse("a ; b^*").unwrap(),
            Expr::seq(Expr::var("a"), Star(Box::new(Expr::var("b"))))
        );
        assert_eq!(
            parse("atomic(id)^*").unwrap(),
            Star(Box::new(Atomic(super::RelLit::Id)))
        );
        assert_eq!(
            parse("a^*^o!").unwrap(),
            OmegaSkip(Box::new(Star(Box::new(Expr::var("a")))))
        );
    }

    #[test]
    fn atoms_and_literals() {
        assert_eq!(parse("skip").unwrap(), Skip);
        assert_eq!(parse("_").unwrap(), Hole);
        assert_eq!(
            parse("pi({(0,1)})").unwrap(),
            PStep(super::RelLit::Pairs(vec![(0, 1)]))
        );
        assert_eq!(
            parse("guard({0,1})").unwrap(),
            Guard(super::PredLit::States(vec![0, 1]))
        );
        assert_eq!(parse("fin(r)").unwrap(), FinG(super::RelLit::Var("r".into())));
        assert_eq!(parse("pre(none)").unwrap(), Pre(super::PredLit::Empty));
        assert_eq!(parse("envc(none)").unwrap(), EnvC(super::RelLit::Empty));
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(parse("a ⊓ b").unwrap(), parse("a |-| b").unwrap());
        assert_eq!(parse("a ⊔ b").unwrap(), parse("a |+| b").unwrap());
        assert_eq!(parse("a ∥ b").unwrap(), parse("a || b").unwrap());
        assert_eq!(parse("a ⋓ b").unwrap(), parse("a && b").unwrap());
    }

    #[test]
    fn comments_and_errors() {
        assert_eq!(parse("skip # trailing note").unwrap(), Skip);
        match parse("pi(").unwrap_err() {
            crate::error::ModelError::Parse { offset, .. } => assert_eq!(offset, 3),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse("").is_err());
        assert!(parse("a b").is_err());
        assert!(parse("mystery(id)").is_err());
    }
}
