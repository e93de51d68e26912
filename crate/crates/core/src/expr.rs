//! Boolean expressions over the outputs of several automata, used by
//! `combine`.
//!
//! ```text
//! expr    := and ('|' and)*
//! and     := unary ('&' unary)*
//! unary   := ('!' | '~') unary | '(' expr ')' | operand cmp operand
//! operand := a | b | … | integer | #
//! cmp     := = | != | < | > | <= | >=
//! ```
//!
//! Variable `a` is the output of the first automaton, `b` of the second, and
//! so on.

use crate::error::{Error, Result};
use crate::{Symbol, HASH};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operand {
    Var(usize),
    Const(Symbol),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Eq,
    Ne,
    Lt,
    Gt,
    Le,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Or(Box<Expr>, Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Not(Box<Expr>),
    Compare(Operand, Cmp, Operand),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Or,
    And,
    Not,
    Open,
    Close,
    Cmp(Cmp),
    Operand(Operand),
}

fn err(msg: impl Into<String>) -> Error {
    Error::parse(1, msg)
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let next = chars.get(i + 1).copied();
        i += 1;
        let tok = match c {
            ' ' | '\t' => continue,
            '|' => Token::Or,
            '&' => Token::And,
            '(' => Token::Open,
            ')' => Token::Close,
            '#' => Token::Operand(Operand::Const(HASH)),
            '!' if next == Some('=') => {
                i += 1;
                Token::Cmp(Cmp::Ne)
            }
            '!' | '~' => Token::Not,
            '=' => Token::Cmp(Cmp::Eq),
            '<' | '>' => {
                let or_equal = next == Some('=');
                if or_equal {
                    i += 1;
                }
                Token::Cmp(match (c, or_equal) {
                    ('<', false) => Cmp::Lt,
                    ('<', true) => Cmp::Le,
                    ('>', false) => Cmp::Gt,
                    _ => Cmp::Ge,
                })
            }
            'a'..='z' => Token::Operand(Operand::Var(c as usize - 'a' as usize)),
            '0'..='9' => {
                let start = i - 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let v = text
                    .parse::<Symbol>()
                    .ok()
                    .filter(|&v| v != HASH)
                    .ok_or_else(|| err(format!("constant {text} is out of range")))?;
                Token::Operand(Operand::Const(v))
            }
            other => return Err(err(format!("unexpected `{other}` at column {i}"))),
        };
        out.push(tok);
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn or(&mut self) -> Result<Expr> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.bump();
            lhs = Expr::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.bump();
            lhs = Expr::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.bump() {
            Some(Token::Not) => Ok(Expr::Not(Box::new(self.unary()?))),
            Some(Token::Open) => {
                let e = self.or()?;
                match self.bump() {
                    Some(Token::Close) => Ok(e),
                    _ => Err(err("missing `)`")),
                }
            }
            Some(Token::Operand(lhs)) => {
                let cmp = match self.bump() {
                    Some(Token::Cmp(c)) => c,
                    _ => return Err(err("expected a comparison")),
                };
                match self.bump() {
                    Some(Token::Operand(rhs)) => Ok(Expr::Compare(lhs, cmp, rhs)),
                    _ => Err(err("expected a variable or constant")),
                }
            }
            Some(t) => Err(err(format!("unexpected {t:?}"))),
            None => Err(err("unexpected end of expression")),
        }
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let mut p = Parser {
            tokens: tokenize(src)?,
            pos: 0,
        };
        let e = p.or()?;
        if p.pos != p.tokens.len() {
            return Err(err("trailing input"));
        }
        Ok(e)
    }

    /// Number of automata the expression refers to.
    pub fn arity(&self) -> usize {
        let var = |o: &Operand| match o {
            Operand::Var(i) => i + 1,
            Operand::Const(_) => 0,
        };
        match self {
            Expr::Or(a, b) | Expr::And(a, b) => a.arity().max(b.arity()),
            Expr::Not(a) => a.arity(),
            Expr::Compare(l, _, r) => var(l).max(var(r)),
        }
    }

    pub fn eval(&self, outputs: &[Symbol]) -> bool {
        let value = |o: &Operand| match *o {
            Operand::Var(i) => outputs[i],
            Operand::Const(c) => c,
        };
        match self {
            Expr::Or(a, b) => a.eval(outputs) || b.eval(outputs),
            Expr::And(a, b) => a.eval(outputs) && b.eval(outputs),
            Expr::Not(a) => !a.eval(outputs),
            Expr::Compare(l, cmp, r) => {
                let (l, r) = (value(l), value(r));
                match cmp {
                    Cmp::Eq => l == r,
                    Cmp::Ne => l != r,
                    Cmp::Lt => l < r,
                    Cmp::Gt => l > r,
                    Cmp::Le => l <= r,
                    Cmp::Ge => l >= r,
                }
            }
        }
    }
}
