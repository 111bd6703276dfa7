//! The JSON certificate document. Field order is fixed and every exact value
//! is a decimal string, so identical inputs give byte-identical output.

use irreducibility::arith::RHO_SEED;
use irreducibility::criteria::CheckRecord;
use irreducibility::fieldpoly::FACTOR_SEED;
use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Seeds {
    pub rho_seed: u64,
    pub factor_seed: u64,
}

impl Default for Seeds {
    fn default() -> Self {
        Seeds { rho_seed: RHO_SEED, factor_seed: FACTOR_SEED }
    }
}

/// A check tagged with the criterion that made it (`precondition` for the
/// shared hypotheses).
#[derive(Clone, Debug, Serialize)]
pub struct TaggedCheck {
    pub criterion: String,
    #[serde(flatten)]
    pub check: CheckRecord,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateDocument {
    pub schema_version: u32,
    pub command: String,
    pub input: BTreeMap<String, String>,
    pub verdict: String,
    pub criterion: Option<String>,
    pub q: Option<String>,
    pub divisors: Option<Value>,
    pub bound: Option<Value>,
    pub checks: Vec<TaggedCheck>,
    pub factorizations: Option<BTreeMap<String, String>>,
    /// Microseconds per phase; only present when requested.
    pub timings: Option<BTreeMap<String, u64>>,
    pub seeds: Seeds,
    pub oracle: Option<Value>,
    pub certificate: Value,
}

impl CertificateDocument {
    pub fn new(command: &str, input: BTreeMap<String, String>, verdict: String, certificate: Value) -> Self {
        CertificateDocument {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            input,
            verdict,
            criterion: None,
            q: None,
            divisors: None,
            bound: None,
            checks: Vec::new(),
            factorizations: None,
            timings: None,
            seeds: Seeds::default(),
            oracle: None,
            certificate,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}
