//! Expressions in `x` and ring constants.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' nat]
//! atom   := literal | 'x' | '(' expr ')' | '-' atom
//! ```
//!
//! `*` is mandatory: `2x` is a syntax error. Literals are non-negative
//! integers, plus `t` when the ring is a truncated polynomial ring. Products
//! keep their source order, so `x*3` and `3*x` stay distinct until evaluation.

use std::fmt;
use std::sync::Arc;

use skewring::ring::Carrier;
use skewring::{RingContext, SeriesRing, SkewPoly, TruncatedSeries};

/// Exponents above this are rejected before any arithmetic happens.
pub const MAX_EXPONENT: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Literal {
    Int(u64),
    /// The indeterminate `t` of `F_p[t]/(tᵐ)`.
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(Literal),
    X,
    /// Signed terms; the first sign is always `Plus`.
    Sum(Vec<(Sign, Expr)>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
    Neg(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownLiteral(String),
    ExponentOverflow(String),
}

/// A parse failure at a 1-based character column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    /// The same error with the column moved right by `offset`, for input
    /// embedded in a larger string.
    pub fn shifted(mut self, offset: usize) -> Self {
        self.column += offset;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error at column {}: {msg}", self.column),
            ParseErrorKind::UnknownLiteral(lit) => {
                write!(f, "unknown literal {lit:?} at column {}", self.column)
            }
            ParseErrorKind::ExponentOverflow(digits) => write!(
                f,
                "exponent overflow at column {}: {digits} exceeds {MAX_EXPONENT}",
                self.column
            ),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {n}"),
            Tok::Ident(s) => format!("{s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn syntax(column: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        column,
        kind: ParseErrorKind::Syntax(msg.into()),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((tok, column));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(chars[start..i].iter().collect()), column));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), column));
        } else {
            return Err(syntax(column, format!("unexpected character {c:?}")));
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ctx: &'a RingContext,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![(Sign::Plus, self.term()?)];
        loop {
            let sign = match self.peek() {
                Tok::Plus => Sign::Plus,
                Tok::Minus => Sign::Minus,
                _ => break,
            };
            self.bump();
            terms.push((sign, self.term()?));
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap().1
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        while *self.peek() == Tok::Star {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let column = self.column();
        match self.bump().0 {
            Tok::Num(digits) => match digits.parse::<u64>() {
                Ok(e) if e <= MAX_EXPONENT => Ok(Expr::Power(Box::new(base), e as u32)),
                _ => Err(ParseError {
                    column,
                    kind: ParseErrorKind::ExponentOverflow(digits),
                }),
            },
            other => Err(syntax(
                column,
                format!("expected a natural number after '^', found {}", other.describe()),
            )),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let column = self.column();
        match self.bump().0 {
            Tok::Num(digits) => digits
                .parse::<u64>()
                .map(|v| Expr::Const(Literal::Int(v)))
                .map_err(|_| ParseError {
                    column,
                    kind: ParseErrorKind::UnknownLiteral(digits),
                }),
            Tok::Ident(name) => match name.as_str() {
                "x" => Ok(Expr::X),
                "t" if matches!(self.ctx.carrier(), Carrier::TruncPoly { .. }) => Ok(Expr::Const(Literal::T)),
                _ => Err(ParseError {
                    column,
                    kind: ParseErrorKind::UnknownLiteral(name),
                }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.column();
                match self.bump().0 {
                    Tok::RParen => Ok(inner),
                    other => Err(syntax(close, format!("expected ')', found {}", other.describe()))),
                }
            }
            Tok::Minus => Ok(Expr::Neg(Box::new(self.atom()?))),
            other => Err(syntax(column, format!("expected an operand, found {}", other.describe()))),
        }
    }
}

/// Parses `text`, validating literals against `ctx`.
pub fn parse_expression(text: &str, ctx: &RingContext) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, ctx };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        other => Err(syntax(
            p.column(),
            format!("expected an operator or end of input, found {}", other.describe()),
        )),
    }
}

impl Expr {
    fn needs_parens_in(&self, parent: Parent) -> bool {
        match (self, parent) {
            (Expr::Sum(_), _) => true,
            (Expr::Product(_), Parent::Sum) => false,
            (Expr::Product(_), _) => true,
            (Expr::Power(..), Parent::Sum | Parent::Product) => false,
            (Expr::Power(..), _) => true,
            _ => false,
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, parent: Parent) -> fmt::Result {
        if self.needs_parens_in(parent) {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

#[derive(Clone, Copy)]
enum Parent {
    Sum,
    Product,
    Atom,
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(Literal::Int(v)) => write!(f, "{v}"),
            Expr::Const(Literal::T) => f.write_str("t"),
            Expr::X => f.write_str("x"),
            Expr::Sum(terms) => {
                for (i, (sign, term)) in terms.iter().enumerate() {
                    match (i, sign) {
                        (0, _) => {}
                        (_, Sign::Plus) => f.write_str(" + ")?,
                        (_, Sign::Minus) => f.write_str(" - ")?,
                    }
                    term.write_child(f, Parent::Sum)?;
                }
                Ok(())
            }
            Expr::Product(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    factor.write_child(f, Parent::Product)?;
                }
                Ok(())
            }
            Expr::Power(base, e) => {
                base.write_child(f, Parent::Atom)?;
                write!(f, "^{e}")
            }
            Expr::Neg(inner) => {
                f.write_str("-")?;
                inner.write_child(f, Parent::Atom)
            }
        }
    }
}

fn literal_value(ctx: &RingContext, lit: &Literal) -> skewring::RingElem {
    match lit {
        Literal::Int(v) => {
            let modulus = ctx.size() as u64;
            ctx.from_integer((v % modulus) as i64)
        }
        Literal::T => ctx.indeterminate().expect("t only parses for truncated polynomial rings"),
    }
}

/// Evaluates to a skew polynomial in left normal form.
pub fn eval_poly(e: &Expr, ctx: &Arc<RingContext>) -> SkewPoly {
    match e {
        Expr::Const(lit) => SkewPoly::constant(ctx.clone(), literal_value(ctx, lit)),
        Expr::X => SkewPoly::x(ctx.clone()),
        Expr::Sum(terms) => terms.iter().fold(SkewPoly::zero(ctx.clone()), |acc, (sign, t)| {
            let v = eval_poly(t, ctx);
            match sign {
                Sign::Plus => acc.add(&v),
                Sign::Minus => acc.sub(&v),
            }
            .expect("one ring")
        }),
        Expr::Product(factors) => factors.iter().fold(SkewPoly::one(ctx.clone()), |acc, t| {
            acc.mul(&eval_poly(t, ctx)).expect("one ring")
        }),
        Expr::Power(base, n) => eval_poly(base, ctx).pow(*n),
        Expr::Neg(inner) => eval_poly(inner, ctx).neg(),
    }
}

/// Evaluates to a class in `S/G_N`.
pub fn eval_series(e: &Expr, ring: &SeriesRing) -> TruncatedSeries {
    match e {
        Expr::Const(lit) => ring.constant(literal_value(ring.ctx(), lit)),
        Expr::X => ring.x(),
        Expr::Sum(terms) => terms.iter().fold(ring.zero(), |acc, (sign, t)| {
            let v = eval_series(t, ring);
            match sign {
                Sign::Plus => acc.add(&v),
                Sign::Minus => acc.sub(&v),
            }
            .expect("one ring")
        }),
        Expr::Product(factors) => factors
            .iter()
            .fold(ring.one(), |acc, t| acc.mul(&eval_series(t, ring)).expect("one ring")),
        Expr::Power(base, n) => eval_series(base, ring).pow(u64::from(*n)),
        Expr::Neg(inner) => eval_series(inner, ring).neg(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(spec: &str) -> Arc<RingContext> {
        Arc::new(RingContext::from_preset(spec).unwrap())
    }

    #[test]
    fn keeps_coefficient_placement() {
        let r = ctx("zmod:2^3");
        let e = parse_expression("x*3 + 2*x^2", &r).unwrap();
        assert_eq!(
            e,
            Expr::Sum(vec![
                (Sign::Plus, Expr::Product(vec![Expr::X, Expr::Const(Literal::Int(3))])),
                (
                    Sign::Plus,
                    Expr::Product(vec![
                        Expr::Const(Literal::Int(2)),
                        Expr::Power(Box::new(Expr::X), 2)
                    ])
                ),
            ])
        );
    }

    #[test]
    fn evaluates_commutation() {
        let r = ctx("truncpoly:3:3:c=2");
        let e = parse_expression("x*t", &r).unwrap();
        assert_eq!(eval_poly(&e, &r).render(), "t^2 + 2*t*x");
        let sq = parse_expression("(x + t)*(x + t)", &r).unwrap();
        let f = eval_poly(&parse_expression("x + t", &r).unwrap(), &r);
        assert_eq!(eval_poly(&sq, &r), f.mul(&f).unwrap());
        let s = SeriesRing::new(r.clone(), 3).unwrap();
        assert!(eval_series(&parse_expression("x^3", &r).unwrap(), &s).is_zero());
        assert_eq!(eval_poly(&parse_expression("1", &r).unwrap(), &r), SkewPoly::one(r.clone()));
    }

    #[test]
    fn reports_columns() {
        let r = ctx("zmod:2^3");
        let err = parse_expression("x^^2", &r).unwrap_err();
        assert_eq!(err.column, 3);
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
        assert_eq!(parse_expression("2x", &r).unwrap_err().column, 2);
        assert_eq!(parse_expression("x + t", &r).unwrap_err().kind, ParseErrorKind::UnknownLiteral("t".into()));
        assert_eq!(parse_expression("(x + 1", &r).unwrap_err().column, 7);
        let err = parse_expression("x^5000", &r).unwrap_err();
        assert_eq!((err.column, err.kind), (3, ParseErrorKind::ExponentOverflow("5000".into())));
        assert_eq!(parse_expression("", &r).unwrap_err().column, 1);
    }

    #[test]
    fn render_round_trips() {
        let r = ctx("truncpoly:3:3:c=2");
        for text in [
            "x*3 + 2*x^2",
            "-x^2",
            "-(x^2)",
            "(x + t)*(x - t)",
            "x - (t - 1)",
            "((x*t)*x)^3",
            "--t",
            "(-x)^2*2 - 1 + t^0",
            "x*(t*x)",
        ] {
            let e = parse_expression(text, &r).unwrap();
            let rendered = e.to_string();
            assert_eq!(parse_expression(&rendered, &r).unwrap(), e, "{text} -> {rendered}");
        }
    }
}
