//! Grammar symbols: operators, variables, the constant placeholder `C`,
//! and numeric literals.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Binary operators (arity 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinaryOp {
    pub const ALL: [BinaryOp; 5] = [
        BinaryOp::Add,
        BinaryOp::Sub,
        BinaryOp::Mul,
        BinaryOp::Div,
        BinaryOp::Pow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Mul => "*",
            BinaryOp::Div => "/",
            BinaryOp::Pow => "pow",
        }
    }
}

/// Unary operators (arity 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnaryOp {
    Neg,
    Sin,
    Cos,
    Tan,
    Log,
    Sqrt,
    Exp,
    Abs,
    Sinh,
    Cosh,
    Tanh,
    Arcsin,
    Arctan,
    /// Partial harmonic sum `sum_{k=1}^{floor(x)} 1/k`; used by one of the
    /// registered benchmark targets.
    Harmonic,
}

impl UnaryOp {
    pub const ALL: [UnaryOp; 14] = [
        UnaryOp::Neg,
        UnaryOp::Sin,
        UnaryOp::Cos,
        UnaryOp::Tan,
        UnaryOp::Log,
        UnaryOp::Sqrt,
        UnaryOp::Exp,
        UnaryOp::Abs,
        UnaryOp::Sinh,
        UnaryOp::Cosh,
        UnaryOp::Tanh,
        UnaryOp::Arcsin,
        UnaryOp::Arctan,
        UnaryOp::Harmonic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            UnaryOp::Neg => "neg",
            UnaryOp::Sin => "sin",
            UnaryOp::Cos => "cos",
            UnaryOp::Tan => "tan",
            UnaryOp::Log => "log",
            UnaryOp::Sqrt => "sqrt",
            UnaryOp::Exp => "exp",
            UnaryOp::Abs => "abs",
            UnaryOp::Sinh => "sinh",
            UnaryOp::Cosh => "cosh",
            UnaryOp::Tanh => "tanh",
            UnaryOp::Arcsin => "arcsin",
            UnaryOp::Arctan => "arctan",
            UnaryOp::Harmonic => "harmonic",
        }
    }

    /// Plain trigonometric functions, for the no-nested-trig generation rule.
    pub fn is_trig(self) -> bool {
        matches!(self, UnaryOp::Sin | UnaryOp::Cos | UnaryOp::Tan)
    }

    /// Operators whose argument must not be negative.
    pub fn requires_nonnegative_arg(self) -> bool {
        matches!(self, UnaryOp::Log | UnaryOp::Sqrt)
    }
}

/// One grammar symbol. Generated expressions use [`Token::Const`] for every
/// numeric constant; literals appear only in trees loaded from benchmark
/// definitions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Token {
    Binary(BinaryOp),
    Unary(UnaryOp),
    /// Zero-based variable index; displays as `x1`, `x2`, ...
    Variable(usize),
    /// The constant placeholder `C`.
    Const,
    Literal(f64),
}

impl Token {
    pub fn arity(self) -> usize {
        match self {
            Token::Binary(_) => 2,
            Token::Unary(_) => 1,
            Token::Variable(_) | Token::Const | Token::Literal(_) => 0,
        }
    }

    pub fn is_terminal(self) -> bool {
        self.arity() == 0
    }

    /// Canonical text form used in preorder sequences and corpus files.
    pub fn name(self) -> String {
        match self {
            Token::Binary(op) => op.name().to_string(),
            Token::Unary(op) => op.name().to_string(),
            Token::Variable(i) => format!("x{}", i + 1),
            Token::Const => "C".to_string(),
            Token::Literal(v) => format!("{v}"),
        }
    }

    /// Parse a single symbol name. Accepts the unicode operator spellings
    /// that appear in printed tables (`×`, `÷`, `−`, `√`) along with the
    /// ASCII canonical forms, bare `x` as `x1`, and numbers as literals.
    pub fn parse_name(s: &str) -> Result<Token, UnknownToken> {
        let s = s.trim();
        match s {
            "+" => return Ok(Token::Binary(BinaryOp::Add)),
            "-" | "−" => return Ok(Token::Binary(BinaryOp::Sub)),
            "*" | "×" | "·" => return Ok(Token::Binary(BinaryOp::Mul)),
            "/" | "÷" => return Ok(Token::Binary(BinaryOp::Div)),
            "pow" | "^" => return Ok(Token::Binary(BinaryOp::Pow)),
            "C" | "c" => return Ok(Token::Const),
            "x" => return Ok(Token::Variable(0)),
            "pi" | "π" => return Ok(Token::Literal(std::f64::consts::PI)),
            _ => {}
        }
        for op in UnaryOp::ALL {
            if s == op.name() {
                return Ok(Token::Unary(op));
            }
        }
        if s == "ln" {
            return Ok(Token::Unary(UnaryOp::Log));
        }
        if s == "√" {
            return Ok(Token::Unary(UnaryOp::Sqrt));
        }
        if let Some(rest) = s.strip_prefix('x') {
            if let Ok(i) = rest.parse::<usize>() {
                if i >= 1 {
                    return Ok(Token::Variable(i - 1));
                }
            }
        }
        if let Ok(v) = s.parse::<f64>() {
            return Ok(Token::Literal(v));
        }
        Err(UnknownToken(s.to_string()))
    }
}

// Literals compare by bit pattern so tokens can key hash maps.
impl Eq for Token {}

impl std::hash::Hash for Token {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        std::mem::discriminant(self).hash(state);
        match self {
            Token::Binary(op) => op.hash(state),
            Token::Unary(op) => op.hash(state),
            Token::Variable(i) => i.hash(state),
            Token::Const => {}
            Token::Literal(v) => v.to_bits().hash(state),
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl Serialize for Token {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for Token {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Token, D::Error> {
        let s = String::deserialize(deserializer)?;
        Token::parse_name(&s).map_err(D::Error::custom)
    }
}

/// Error for a symbol name outside the registered grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownToken(pub String);

impl fmt::Display for UnknownToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown symbol: {:?}", self.0)
    }
}

impl std::error::Error for UnknownToken {}

/// Look up an operator token by name, rejecting terminals. Used when
/// validating operator registries in run configs.
pub fn operator_by_name(name: &str) -> Result<Token, UnknownToken> {
    match Token::parse_name(name)? {
        t @ (Token::Binary(_) | Token::Unary(_)) => Ok(t),
        _ => Err(UnknownToken(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_matches_kind() {
        for op in BinaryOp::ALL {
            assert_eq!(Token::Binary(op).arity(), 2);
        }
        for op in UnaryOp::ALL {
            assert_eq!(Token::Unary(op).arity(), 1);
        }
        assert_eq!(Token::Variable(0).arity(), 0);
        assert_eq!(Token::Const.arity(), 0);
        assert_eq!(Token::Literal(1.5).arity(), 0);
    }

    #[test]
    fn name_round_trip() {
        let tokens = [
            Token::Binary(BinaryOp::Add),
            Token::Binary(BinaryOp::Pow),
            Token::Unary(UnaryOp::Sin),
            Token::Unary(UnaryOp::Arcsin),
            Token::Variable(0),
            Token::Variable(4),
            Token::Const,
            Token::Literal(4.2),
        ];
        for t in tokens {
            assert_eq!(Token::parse_name(&t.name()).unwrap(), t);
        }
    }

    #[test]
    fn unicode_spellings() {
        assert_eq!(
            Token::parse_name("×").unwrap(),
            Token::Binary(BinaryOp::Mul)
        );
        assert_eq!(Token::parse_name("√").unwrap(), Token::Unary(UnaryOp::Sqrt));
        assert_eq!(Token::parse_name("x").unwrap(), Token::Variable(0));
        assert_eq!(Token::parse_name("ln").unwrap(), Token::Unary(UnaryOp::Log));
    }

    #[test]
    fn rejects_unknown_names() {
        assert!(Token::parse_name("frobnicate").is_err());
        assert!(operator_by_name("x1").is_err());
        assert!(operator_by_name("sin").is_ok());
    }
}
