//! Univariate criteria: the quotient bounds `q` and `q_u`, Apollonius disk
//! containment, factorization patterns that pin `q` to one, and the
//! certificate-producing drivers.

mod apollonius;
mod certificate;
mod certify;
mod pattern;
mod quotient;
mod search;
mod theorems;

pub use apollonius::{apollonius_margin, disk_in_apollonius};
pub use certificate::{
    bound_is_valid, Attempt, Certificate, CheckRecord, CriterionId, MethodNotes, Relation, Values, Verdict,
};
pub use certify::{certify, certify_prime_value, is_prime_value, CertifyOptions, Certifier, DivisorMode};
pub use pattern::{match_pattern, Binding, PatternId, PatternWitness};
pub use quotient::{
    compute_quotient_bound, max_quotient, quotient_from_factorizations, QuotientBound, QuotientKind, QuotientSource,
};
pub use search::search;
