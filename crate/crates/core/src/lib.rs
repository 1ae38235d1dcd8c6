//! Exact computation with the basic representations of the confluent
//! Cherednik algebras `H_V`, `H_III`, `H_III^D7` and `H_III^D8` on Laurent
//! polynomials, the non-symmetric basic hypergeometric polynomials that
//! diagonalize them, and a verifier for the identities relating the two.

pub mod error;
pub mod expr;
pub mod field;
pub mod hecke;
pub mod laurent;
pub mod param;
pub mod qpoly;
pub mod rat;
pub mod verify;

pub use error::{ArithmeticError, FamilyError, HeckeError, LaurentError, ParseError, VerifyError};
pub use field::{Field, Params};
pub use hecke::{AlgebraId, DifferenceOperator, NCExpression, Representation, Token};
pub use laurent::{Direction, LaurentPoly, Substitution};
pub use qpoly::{Family, FamilyCache, FamilyKind, LeadingData};
pub use param::{Monomial, Param, ParamPoly, ParamRat, Point};
pub use rat::Rat;
pub use verify::{CheckConfig, CheckKind, CheckReport, Mode, RunReport, Status, Suite};
