//! Ideals of monomial curves: determinantal constructions, Groebner bases,
//! leading ideals, exact quotient lengths, and verification suites.

pub mod curve;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod matrix;
pub mod monideal;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod sset;
pub mod verify;
pub mod witness;

pub use curve::{CurveCache, CurveParams, WeightedComposition};
pub use error::{Error, Result};
pub use field::{Coeff, FieldChoice, Fp, Rational};
pub use groebner::{buchberger, hilbert_oracle, leading_ideal, normal_form, quotient_length_poly, GroebnerBasis, PolyIdeal};
pub use matrix::PolyMatrix;
pub use monideal::MonomialIdeal;
pub use monomial::Monomial;
pub use order::{Grevelex, MonomialOrder};
pub use poly::Polynomial;
pub use verify::{Case, Suite, SuiteRequest, VerificationReport, Verifier};
pub use witness::{colon_witness, quotient_recursion, ColonWitness, QuotientRecursion};
