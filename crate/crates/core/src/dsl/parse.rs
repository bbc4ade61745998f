use std::collections::HashSet;

use thiserror::Error;

use super::{Condition, Cone, Formula, Operator, Relation, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: unbound variable `{name}`")]
    UnboundVariable {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("{line}:{column}: variable `{name}` quantified twice")]
    DuplicateVariable {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("{line}:{column}: {op} takes 2 arguments, got {found}")]
    Arity {
        line: usize,
        column: usize,
        op: char,
        found: usize,
    },
}

impl ParseError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, column, .. }
            | ParseError::UnboundVariable { line, column, .. }
            | ParseError::DuplicateVariable { line, column, .. }
            | ParseError::Arity { line, column, .. } => (*line, *column),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Zero,
    One,
    LParen,
    RParen,
    Comma,
    Colon,
    Prime,
    Join,
    Meet,
    Eq,
    Le,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("`{w}`"),
            Tok::Zero => "`0`".into(),
            Tok::One => "`1`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Prime => "`'`".into(),
            Tok::Join => "`v`".into(),
            Tok::Meet => "`^`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Le => "`<=`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 0);
    let mut chars = src.chars().peekable();
    while let Some(c) = chars.next() {
        column += 1;
        let (l, col) = (line, column);
        let tok = match c {
            '\n' => {
                line += 1;
                column = 0;
                continue;
            }
            c if c.is_whitespace() => continue,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            '\'' | '′' => Tok::Prime,
            '∨' => Tok::Join,
            '^' | '∧' => Tok::Meet,
            '=' | '≈' => Tok::Eq,
            '≤' | '⊆' => Tok::Le,
            '∀' => Tok::Word("forall".into()),
            '0' => Tok::Zero,
            '1' => Tok::One,
            '<' => {
                if chars.peek() == Some(&'=') {
                    chars.next();
                    column += 1;
                    Tok::Le
                } else {
                    return Err(syntax(l, col, "expected `<=`"));
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut w = String::from(c);
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        w.push(d);
                        chars.next();
                        column += 1;
                    } else {
                        break;
                    }
                }
                if w == "v" {
                    Tok::Join
                } else {
                    Tok::Word(w)
                }
            }
            other => return Err(syntax(l, col, format!("unexpected character `{other}`"))),
        };
        out.push(Token {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column: column + 1,
    });
    Ok(out)
}

fn is_cone_word(w: &str) -> bool {
    !w.is_empty() && w.chars().all(|c| c == 'L' || c == 'U')
}

fn is_reserved(w: &str) -> bool {
    is_cone_word(w) || matches!(w, "M" | "R" | "forall" | "where")
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    bound: HashSet<String>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> &Token {
        let t = &self.toks[self.pos];
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, expected: &str) -> ParseError {
        let t = self.peek();
        syntax(
            t.line,
            t.column,
            format!("expected {expected}, found {}", t.tok.describe()),
        )
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.peek().tok == tok {
            self.next();
            Ok(())
        } else {
            Err(self.error_here(&tok.describe()))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        match &self.peek().tok {
            Tok::Word(w) if w == "forall" => {
                self.next();
            }
            _ => return Err(self.error_here("`forall`")),
        }
        let mut vars = Vec::new();
        loop {
            let t = self.peek();
            let (line, column) = (t.line, t.column);
            match &t.tok {
                Tok::Word(w) if !is_reserved(w) => {
                    let w = w.clone();
                    if !self.bound.insert(w.clone()) {
                        return Err(ParseError::DuplicateVariable {
                            line,
                            column,
                            name: w,
                        });
                    }
                    vars.push(w);
                    self.next();
                }
                _ => break,
            }
        }
        if vars.is_empty() {
            return Err(self.error_here("a variable name"));
        }
        let mut conditions = Vec::new();
        if matches!(&self.peek().tok, Tok::Word(w) if w == "where") {
            self.next();
            loop {
                let lhs = self.term()?;
                self.expect(Tok::Le)?;
                let rhs = self.term()?;
                conditions.push(Condition { lhs, rhs });
                if self.peek().tok == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::Colon)?;
        let lhs = self.term()?;
        let relation = match self.peek().tok {
            Tok::Eq => Relation::Equal,
            Tok::Le => Relation::SubsetEq,
            _ => return Err(self.error_here("`=` or `<=`")),
        };
        self.next();
        let rhs = self.term()?;
        if self.peek().tok != Tok::End {
            return Err(self.error_here("end of input"));
        }
        Ok(Formula {
            vars,
            conditions,
            relation,
            lhs,
            rhs,
        })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut parts = vec![self.meet()?];
        while self.peek().tok == Tok::Join {
            self.next();
            parts.push(self.meet()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Term::Join(parts)
        })
    }

    fn meet(&mut self) -> Result<Term, ParseError> {
        let mut parts = vec![self.postfix()?];
        while self.peek().tok == Tok::Meet {
            self.next();
            parts.push(self.postfix()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Term::Meet(parts)
        })
    }

    fn postfix(&mut self) -> Result<Term, ParseError> {
        let mut t = self.atom()?;
        while self.peek().tok == Tok::Prime {
            self.next();
            t = Term::Prime(Box::new(t));
        }
        Ok(t)
    }

    fn args(&mut self) -> Result<Vec<Term>, ParseError> {
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        if self.peek().tok == Tok::RParen {
            self.next();
            return Ok(args);
        }
        loop {
            args.push(self.term()?);
            match self.peek().tok {
                Tok::Comma => {
                    self.next();
                }
                Tok::RParen => {
                    self.next();
                    return Ok(args);
                }
                _ => return Err(self.error_here("`,` or `)`")),
            }
        }
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        let t = self.peek();
        let (line, column) = (t.line, t.column);
        match t.tok.clone() {
            Tok::Zero => {
                self.next();
                Ok(Term::Zero)
            }
            Tok::One => {
                self.next();
                Ok(Term::One)
            }
            Tok::LParen => {
                self.next();
                let inner = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Word(w) if w == "M" || w == "R" => {
                self.next();
                let mut args = self.args()?;
                if args.len() != 2 {
                    return Err(ParseError::Arity {
                        line,
                        column,
                        op: w.chars().next().unwrap(),
                        found: args.len(),
                    });
                }
                let b = args.pop().unwrap();
                let a = args.pop().unwrap();
                let op = if w == "M" { Operator::M } else { Operator::R };
                Ok(Term::Op(op, Box::new(a), Box::new(b)))
            }
            Tok::Word(w) if is_cone_word(&w) => {
                self.next();
                let mut term = None;
                let args = self.args()?;
                for c in w.chars().rev() {
                    let cone = if c == 'L' { Cone::Lower } else { Cone::Upper };
                    term = Some(match term {
                        None => Term::Cone(cone, args.clone()),
                        Some(inner) => Term::Cone(cone, vec![inner]),
                    });
                }
                Ok(term.unwrap())
            }
            Tok::Word(w) if !is_reserved(&w) => {
                if !self.bound.contains(&w) {
                    return Err(ParseError::UnboundVariable {
                        line,
                        column,
                        name: w,
                    });
                }
                self.next();
                Ok(Term::Var(w))
            }
            _ => Err(self.error_here("a term")),
        }
    }
}

/// Parses one formula.
pub fn parse(src: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        bound: HashSet::new(),
    };
    p.formula()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Term {
        Term::Var(s.into())
    }

    #[test]
    fn modularity() {
        let f = parse("forall x y z where x <= z : L(U(x,y),z) = LU(x,L(y,z))").unwrap();
        assert_eq!(f.vars, ["x", "y", "z"]);
        assert_eq!(
            f.conditions,
            vec![Condition {
                lhs: v("x"),
                rhs: v("z")
            }]
        );
        assert_eq!(f.relation, Relation::Equal);
        assert_eq!(
            f.lhs,
            Term::Cone(
                Cone::Lower,
                vec![Term::Cone(Cone::Upper, vec![v("x"), v("y")]), v("z")]
            )
        );
        assert_eq!(
            f.rhs,
            Term::Cone(
                Cone::Lower,
                vec![Term::Cone(
                    Cone::Upper,
                    vec![v("x"), Term::Cone(Cone::Lower, vec![v("y"), v("z")])]
                )]
            )
        );
    }

    #[test]
    fn involution_and_unicode() {
        let a = parse("forall x : x'' = x").unwrap();
        let b = parse("∀ x : x′′ ≈ x").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.lhs, Term::Prime(Box::new(Term::Prime(Box::new(v("x"))))));
    }

    #[test]
    fn divisibility() {
        let f = parse("forall x y : M(R(x,y),x) = L(x,y)").unwrap();
        let r = Term::Op(Operator::R, Box::new(v("x")), Box::new(v("y")));
        assert_eq!(f.lhs, Term::Op(Operator::M, Box::new(r), Box::new(v("x"))));
    }

    #[test]
    fn meet_binds_tighter_than_join() {
        let f = parse("forall x y : x v y ^ x' = x").unwrap();
        assert_eq!(
            f.lhs,
            Term::Join(vec![
                v("x"),
                Term::Meet(vec![v("y"), Term::Prime(Box::new(v("x")))])
            ])
        );
        let g = parse("forall x y : x ∨ ((x ∨ y) ∧ x′) ⊆ x v y").unwrap();
        assert_eq!(g.relation, Relation::SubsetEq);
    }

    #[test]
    fn empty_cone_and_constants() {
        let f = parse("forall x : L() = U(0, 1)").unwrap();
        assert_eq!(f.lhs, Term::Cone(Cone::Lower, vec![]));
        assert_eq!(f.rhs, Term::Cone(Cone::Upper, vec![Term::Zero, Term::One]));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("forall x : L(x,y) = x").unwrap_err();
        assert_eq!(
            e,
            ParseError::UnboundVariable {
                line: 1,
                column: 16,
                name: "y".into()
            }
        );
        let e = parse("forall x\n  : M(x) = x").unwrap_err();
        assert!(matches!(
            e,
            ParseError::Arity {
                line: 2,
                column: 5,
                op: 'M',
                found: 1
            }
        ));
        let e = parse("forall x x : x = x").unwrap_err();
        assert!(matches!(
            e,
            ParseError::DuplicateVariable { column: 10, .. }
        ));
        let e = parse("forall x : L(x = x").unwrap_err();
        assert_eq!(e.position(), (1, 16));
        assert!(e.to_string().contains("expected `,` or `)`"), "{e}");
        let e = parse("forall x : x # x").unwrap_err();
        assert_eq!(e.position(), (1, 14));
        assert!(parse("forall : x = x").is_err());
        assert!(parse("forall x : x = x x").is_err());
        assert!(parse("forall x : x < x").is_err());
    }

    #[test]
    fn reserved_words_are_not_variables() {
        assert!(parse("forall L : L = L").is_err());
        assert!(parse("forall v : v = v").is_err());
    }
}
