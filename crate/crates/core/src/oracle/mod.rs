//! Independent ground truth for small inputs: Kronecker factorization over
//! the integers and exhaustive factor search for bivariate polynomials over
//! small prime fields. The certification code never calls into this module.

mod bivar;
mod kronecker;

pub use bivar::{exhaustive_bivar_factor, BivarSearch, DEFAULT_BIVAR_BUDGET};
pub use kronecker::{
    factor_integer_poly, kronecker_factor, FactorizationResult, IntPolyFactorization, OracleStatus, SearchStats,
    DEFAULT_BUDGET,
};
