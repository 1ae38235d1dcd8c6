use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,
    #[error("cannot parse number {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("degree of the zero polynomial is undefined")]
    EmptySupport,
    #[error("division is not exact")]
    NonExactDivision,
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at offset {offset}")]
    UnexpectedChar { found: char, offset: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected token {0:?}")]
    UnexpectedToken(String),
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("coefficient of z^{exponent} keeps an odd power of q^(1/2): {coeff}")]
    HalfPowerResidue { exponent: i64, coeff: String },
    #[error("index must be positive, got {0}")]
    InvalidIndex(i64),
    #[error("support of E_{index} leaves the window [{low}, {high}]")]
    SupportOutsideWindow { index: i64, low: i64, high: i64 },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("operator does not preserve Laurent polynomials (input {input})")]
    OperatorNotPolynomial { input: String },
    #[error("T1 has no inverse in {0} (T1(T1+1) = 0)")]
    T1InvUnavailable(&'static str),
    #[error("token {token} is not available in {algebra}")]
    UnknownToken { token: String, algebra: &'static str },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
