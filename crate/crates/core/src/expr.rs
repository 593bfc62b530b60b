//! A small expression language over the named q-series.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' INT)*
//! primary := INT | 'q' ['^' INT] | '(' expr ')'
//!          | ('E' | 'phi' | 'psi' | 'sigma' | 'omega') '(' qpow ')'
//!          | 'chi' '(' '-' qpow ')'
//!          | 'f' '(' targ ',' targ ')'
//!          | ('even' | 'odd' | 'T2' | 'altq') '(' expr ')'
//! qpow    := 'q' ['^' INT]            (exponent >= 1)
//! targ    := ['-'] (qpow | 'q^0' | '1')
//! ```
//!
//! Unary minus binds tighter than `*` and looser than `^`, so `-q^2` is
//! `-(q^2)`. `T2` evaluates its operand at twice the requested order so the
//! result keeps the full order.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{EvalError, ParseError};
use crate::identities::hecke_t2;
use crate::series::TruncSeries;
use crate::theta::{self, Sign, ThetaArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Euler,
    Phi,
    Psi,
    ChiNeg,
    Sigma,
    Omega,
}

impl Atom {
    fn name(self) -> &'static str {
        match self {
            Atom::Euler => "E",
            Atom::Phi => "phi",
            Atom::Psi => "psi",
            Atom::ChiNeg => "chi",
            Atom::Sigma => "sigma",
            Atom::Omega => "omega",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Unary {
    Even,
    Odd,
    T2,
    AltQ,
}

impl Unary {
    fn name(self) -> &'static str {
        match self {
            Unary::Even => "even",
            Unary::Odd => "odd",
            Unary::T2 => "T2",
            Unary::AltQ => "altq",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigInt),
    /// `q^k`
    QPow(usize),
    /// A named series at argument `q^k`; for `ChiNeg` the argument is `-q^k`.
    Named(Atom, usize),
    Theta(ThetaArgs),
    Apply(Unary, Box<Expr>),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    pub fn apply(op: Unary, inner: Expr) -> Expr {
        Expr::Apply(op, Box::new(inner))
    }

    /// Binding strength used by the printer: 1 additive, 2 multiplicative,
    /// 3 unary minus, 4 power, 5 primary.
    fn strength(&self) -> u8 {
        match self {
            Expr::Binary(op, ..) => op.precedence(),
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }
}

// ---------------------------------------------------------------------------
// printing

fn write_qpow(f: &mut fmt::Formatter<'_>, k: usize) -> fmt::Result {
    if k == 1 {
        write!(f, "q")
    } else {
        write!(f, "q^{k}")
    }
}

fn write_theta_arg(f: &mut fmt::Formatter<'_>, sign: Sign, k: usize) -> fmt::Result {
    if sign == Sign::Minus {
        write!(f, "-")?;
    }
    if k == 0 {
        write!(f, "1")
    } else {
        write_qpow(f, k)
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, child: &Expr, needs_parens: bool) -> fmt::Result {
    if needs_parens {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::QPow(k) => write_qpow(f, *k),
            Expr::Named(Atom::ChiNeg, k) => {
                write!(f, "chi(-")?;
                write_qpow(f, *k)?;
                write!(f, ")")
            }
            Expr::Named(atom, k) => {
                write!(f, "{}(", atom.name())?;
                write_qpow(f, *k)?;
                write!(f, ")")
            }
            Expr::Theta(args) => {
                write!(f, "f(")?;
                write_theta_arg(f, args.sign_a(), args.r())?;
                write!(f, ", ")?;
                write_theta_arg(f, args.sign_b(), args.s())?;
                write!(f, ")")
            }
            Expr::Apply(op, inner) => write!(f, "{}({inner})", op.name()),
            Expr::Neg(inner) => {
                write!(f, "-")?;
                write_child(f, inner, inner.strength() < 3)
            }
            Expr::Pow(base, e) => {
                // `q^k` must stay a single atom, so a q-power base is parenthesized
                let parens = base.strength() < 4 || matches!(**base, Expr::QPow(_));
                write_child(f, base, parens)?;
                write!(f, "^{e}")
            }
            Expr::Binary(op, lhs, rhs) => {
                let p = op.precedence();
                write_child(f, lhs, lhs.strength() < p)?;
                write!(f, " {} ", op.symbol())?;
                write_child(f, rhs, rhs.strength() <= p)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// parsing

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("integer {v}"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let value: BigInt = text[start..i].parse().expect("digits");
            out.push((start, Tok::Int(value)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*/^(),".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            let found = text[i..].chars().next().unwrap_or(c);
            return Err(ParseError::Syntax {
                offset: i + 1,
                expected: "an expression token".to_string(),
                found: format!("`{found}`"),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].1
    }

    /// One-based byte position of the current token.
    fn offset(&self) -> usize {
        self.tokens[self.pos].0 + 1
    }

    fn bump(&mut self) -> Tok {
        let tok = self.tokens[self.pos].1.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        tok
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError::Syntax {
            offset: self.offset(),
            expected: expected.to_string(),
            found: self.peek().describe(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("`{c}`")))
        }
    }

    fn int(&mut self, what: &str) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(v)
            }
            _ => Err(self.error(what)),
        }
    }

    fn small_int<T: TryFrom<BigInt>>(&mut self, what: &str) -> Result<T, ParseError> {
        let offset = self.offset();
        let v = self.int(what)?;
        T::try_from(v.clone()).map_err(|_| ParseError::Syntax {
            offset,
            expected: format!("{what} that fits in a machine word"),
            found: format!("integer {v}"),
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('+') => BinOp::Add,
                Tok::Sym('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('*') => BinOp::Mul,
                Tok::Sym('/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.primary()?;
        while self.eat('^') {
            let e: u32 = self.small_int("a nonnegative integer exponent")?;
            base = Expr::Pow(Box::new(base), e);
        }
        Ok(base)
    }

    /// `q` or `q^k`, returning `k`.
    fn qpow(&mut self) -> Result<usize, ParseError> {
        match self.peek() {
            Tok::Ident(s) if s == "q" => {
                self.bump();
            }
            _ => return Err(self.error("`q`")),
        }
        if self.eat('^') {
            self.small_int("an integer exponent")
        } else {
            Ok(1)
        }
    }

    fn positive_qpow(&mut self) -> Result<usize, ParseError> {
        let offset = self.offset();
        let k = self.qpow()?;
        if k == 0 {
            return Err(ParseError::Syntax {
                offset,
                expected: "a positive power of q".to_string(),
                found: "q^0".to_string(),
            });
        }
        Ok(k)
    }

    fn theta_arg(&mut self) -> Result<(Sign, usize), ParseError> {
        let sign = if self.eat('-') {
            Sign::Minus
        } else {
            Sign::Plus
        };
        if let Tok::Int(v) = self.peek() {
            if *v == BigInt::from(1) {
                self.bump();
                return Ok((sign, 0));
            }
            return Err(self.error("`q^k` or `1`"));
        }
        Ok((sign, self.qpow()?))
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Expr::Int(v))
            }
            Tok::Sym('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Tok::Ident(name) if name == "q" => Ok(Expr::QPow(self.qpow()?)),
            Tok::Ident(name) => {
                self.bump();
                let atom = match name.as_str() {
                    "E" => Some(Atom::Euler),
                    "phi" => Some(Atom::Phi),
                    "psi" => Some(Atom::Psi),
                    "chi" => Some(Atom::ChiNeg),
                    "sigma" => Some(Atom::Sigma),
                    "omega" => Some(Atom::Omega),
                    _ => None,
                };
                let unary = match name.as_str() {
                    "even" => Some(Unary::Even),
                    "odd" => Some(Unary::Odd),
                    "T2" => Some(Unary::T2),
                    "altq" => Some(Unary::AltQ),
                    _ => None,
                };
                if atom.is_none() && unary.is_none() && name != "f" {
                    return Err(ParseError::UnknownAtom { name, offset });
                }
                self.expect('(')?;
                let node = if let Some(atom) = atom {
                    if atom == Atom::ChiNeg {
                        self.expect('-')?;
                    }
                    Expr::Named(atom, self.positive_qpow()?)
                } else if let Some(op) = unary {
                    Expr::apply(op, self.expr()?)
                } else {
                    let arg_offset = self.offset();
                    let (sa, r) = self.theta_arg()?;
                    self.expect(',')?;
                    let (sb, s) = self.theta_arg()?;
                    let args = ThetaArgs::new(sa, r, sb, s).map_err(|e| ParseError::Syntax {
                        offset: arg_offset,
                        expected: "theta arguments with r + s >= 1".to_string(),
                        found: e.to_string(),
                    })?;
                    Expr::Theta(args)
                };
                self.expect(')')?;
                Ok(node)
            }
            _ => Err(self.error("an integer, `q`, an atom, or `(`")),
        }
    }
}

/// Parses an expression; whitespace is insignificant.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let expr = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.error("an operator or end of input"));
    }
    Ok(expr)
}

// ---------------------------------------------------------------------------
// evaluation

/// Evaluates bottom-up at truncation order `order`.
pub fn eval(expr: &Expr, order: usize) -> Result<TruncSeries, EvalError> {
    Ok(match expr {
        Expr::Int(v) => TruncSeries::constant(v.clone(), order),
        Expr::QPow(k) => TruncSeries::monomial(*k, order),
        Expr::Named(atom, k) => match atom {
            Atom::Euler => theta::euler_e(*k, order),
            Atom::Phi => theta::phi(*k, order),
            Atom::Psi => theta::psi(*k, order),
            Atom::ChiNeg => theta::chi_neg(*k, order),
            Atom::Sigma => theta::sigma(*k, order),
            Atom::Omega => theta::omega(*k, order),
        },
        Expr::Theta(args) => theta::theta_f(*args, order),
        Expr::Apply(op, inner) => match op {
            Unary::Even => eval(inner, order)?.even_part(),
            Unary::Odd => eval(inner, order)?.odd_part(),
            Unary::AltQ => eval(inner, order)?.alternate(),
            Unary::T2 => hecke_t2(&eval(inner, 2 * order)?),
        },
        Expr::Neg(inner) => eval(inner, order)?.neg(),
        Expr::Pow(base, e) => eval(base, order)?.pow(*e),
        Expr::Binary(op, lhs, rhs) => {
            let a = eval(lhs, order)?;
            let b = eval(rhs, order)?;
            match op {
                BinOp::Add => &a + &b,
                BinOp::Sub => &a - &b,
                BinOp::Mul => &a * &b,
                BinOp::Div => a.div(&b).map_err(|source| EvalError::Division {
                    denominator: rhs.to_string(),
                    source,
                })?,
            }
        }
    })
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, order: usize) -> crate::Result<TruncSeries> {
    Ok(eval(&parse(text)?, order)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(atom: Atom, k: usize) -> Expr {
        Expr::Named(atom, k)
    }

    fn pow(e: Expr, k: u32) -> Expr {
        Expr::Pow(Box::new(e), k)
    }

    #[test]
    fn parses_core_generating_function() {
        let ast = parse("E(q^7)^7 / E(q)").unwrap();
        assert_eq!(
            ast,
            Expr::binary(
                BinOp::Div,
                pow(named(Atom::Euler, 7), 7),
                named(Atom::Euler, 1)
            )
        );
    }

    #[test]
    fn parses_sigma_definition() {
        let ast = parse("phi(q)*phi(q^7) + 4*q^2*psi(q^2)*psi(q^14)").unwrap();
        let left = Expr::binary(BinOp::Mul, named(Atom::Phi, 1), named(Atom::Phi, 7));
        let right = Expr::binary(
            BinOp::Mul,
            Expr::binary(
                BinOp::Mul,
                Expr::binary(BinOp::Mul, Expr::Int(4.into()), Expr::QPow(2)),
                named(Atom::Psi, 2),
            ),
            named(Atom::Psi, 14),
        );
        assert_eq!(ast, Expr::binary(BinOp::Add, left, right));
    }

    #[test]
    fn unclosed_paren_reports_offset() {
        let err = parse("E(q^7").unwrap_err();
        match &err {
            ParseError::Syntax {
                offset, expected, ..
            } => {
                assert_eq!(*offset, 6);
                assert_eq!(expected, "`)`");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_atom_rejected() {
        assert_eq!(
            parse("1 + zeta(q)").unwrap_err(),
            ParseError::UnknownAtom {
                name: "zeta".into(),
                offset: 5
            }
        );
    }

    #[test]
    fn precedence_rules() {
        assert_eq!(parse("-q^2").unwrap(), Expr::Neg(Box::new(Expr::QPow(2))));
        assert_eq!(parse("q").unwrap(), parse("q^1").unwrap());
        assert_eq!(
            parse("1 - 2 - 3").unwrap(),
            Expr::binary(
                BinOp::Sub,
                Expr::binary(BinOp::Sub, Expr::Int(1.into()), Expr::Int(2.into())),
                Expr::Int(3.into())
            )
        );
        assert_eq!(parse("(q)^2^3").unwrap(), pow(pow(Expr::QPow(1), 2), 3));
        assert_eq!(parse(" E ( q ^ 7 ) ").unwrap(), named(Atom::Euler, 7));
        assert!(parse("E(q)^-1").is_err());
        assert!(parse("E(q^0)").is_err());
        assert!(parse("f(1, 1)").is_err());
    }

    #[test]
    fn theta_and_unary_syntax() {
        let ast = parse("f(-q^2, q^12) + altq(psi(q)) + chi(-q^7)").unwrap();
        assert_eq!(ast.to_string(), "f(-q^2, q^12) + altq(psi(q)) + chi(-q^7)");
        assert!(parse("chi(q)").is_err());
    }

    #[test]
    fn evaluates_core_counts() {
        let s = eval_str("E(q^7)^7/E(q)", 6).unwrap();
        assert_eq!(s, TruncSeries::from_i64s(6, &[1, 1, 2, 3, 5, 7, 11]));
        let zero = eval_str("sigma(q) - sigma(q^2) - 2*q*psi(q)*psi(q^7)", 100).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn division_error_names_denominator() {
        let err = eval_str("1/ (1 - 1)", 5).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("1 - 1"), "{msg}");
        assert!(msg.contains("constant term 0"), "{msg}");
    }

    #[test]
    fn q_has_single_coefficient() {
        for n in [1, 2, 17] {
            let s = eval_str("q", n).unwrap();
            assert_eq!(s, TruncSeries::monomial(1, n));
        }
    }

    #[test]
    fn printer_keeps_qpow_atoms() {
        for text in [
            "(q)^3",
            "(q^2)^3",
            "-(1 + q)",
            "2^3",
            "(-q)^2",
            "1 - (2 - 3)",
            "q / (q * q)",
            "--q",
        ] {
            let ast = parse(text).unwrap();
            assert_eq!(parse(&ast.to_string()).unwrap(), ast, "{text} -> {ast}");
        }
    }
}
