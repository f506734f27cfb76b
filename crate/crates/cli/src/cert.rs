//! Machine-readable conjugacy certificates.
//!
//! A certificate records a decided question — which group, which two
//! elements — together with the answer and, for a positive answer, the
//! conjugating element and the results of re-checking it.  For a negative
//! answer the check fields are vacuously true: there is no witness whose
//! checks could fail, and `verify` re-runs the decision instead.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    /// Group family: `B` for the full braid group, otherwise the
    /// `--group` name the certificate was produced with.
    pub group: String,
    /// Strand count of the ambient braid group.
    pub strands: usize,
    /// Fixed strands for `Bn-X`; `null` elsewhere.
    pub x: Option<Vec<usize>>,
    /// Puncture count for `IBn`; absent elsewhere.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub punctures: Option<usize>,
    /// The two input words exactly as given on the command line.
    pub a: String,
    pub b: String,
    pub conjugate: bool,
    /// Braid word `h` with `h^-1 a h = b`, in ambient-generator letters;
    /// `null` when not conjugate.
    pub conjugator: Option<String>,
    pub checks: Checks,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Checks {
    /// `h^-1 a h = b` holds as braids.
    pub word_problem: bool,
    /// `h` lies in the subgroup the question was asked in.
    #[serde(rename = "image_in_Kprime")]
    pub image_in_kprime: bool,
}

impl Checks {
    pub fn passed(&self) -> bool {
        self.word_problem && self.image_in_kprime
    }
}
