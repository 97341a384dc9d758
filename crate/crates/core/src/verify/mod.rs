//! Verification suites comparing computed ideals and lengths with closed forms.

pub mod formulas;
pub mod report;
pub mod socle;
pub mod suites;

use std::fmt;
use std::str::FromStr;

pub use report::{Case, Params, Summary, VerificationReport};
pub use socle::{socle_dimension_artinian_reduction, SocleResult};
pub use suites::{Verifier, MAX_GROEBNER_D};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Colon,
    Regseq,
    Length,
    Alternating,
    Leading,
    Scounts,
    Gscolon,
    Socle,
    Sanity,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Colon,
        Suite::Regseq,
        Suite::Length,
        Suite::Alternating,
        Suite::Leading,
        Suite::Scounts,
        Suite::Gscolon,
        Suite::Socle,
        Suite::Sanity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Colon => "colon",
            Suite::Regseq => "regseq",
            Suite::Length => "length",
            Suite::Alternating => "alternating",
            Suite::Leading => "leading",
            Suite::Scounts => "scounts",
            Suite::Gscolon => "gscolon",
            Suite::Socle => "socle",
            Suite::Sanity => "sanity",
        }
    }

    /// Suites that compute Groebner bases.
    pub fn uses_groebner(&self) -> bool {
        matches!(self, Suite::Leading | Suite::Sanity)
    }

    /// Default `n_max` for this suite at embedding dimension `d`.
    pub fn default_n_max(&self, d: usize) -> u32 {
        match (self.uses_groebner(), d) {
            (_, 0..=4) => 6,
            (true, 5) => 4,
            (false, 5) => 8,
            _ => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Range(format!("unknown suite {s:?}")))
    }
}

/// Parameters of one suite run; `None` fields fall back to defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteRequest {
    pub suite: Suite,
    pub d: usize,
    pub m: usize,
    pub n_max: Option<u32>,
    pub k: Option<usize>,
    pub with_f: bool,
}

impl SuiteRequest {
    pub fn new(suite: Suite, d: usize) -> Self {
        SuiteRequest { suite, d, m: 1, n_max: None, k: None, with_f: false }
    }
}

impl Verifier {
    /// Runs the requested suite. Groebner suites with `d > MAX_GROEBNER_D` are refused with a range error.
    pub fn run(&self, req: &SuiteRequest) -> Result<VerificationReport> {
        let n_max = req.n_max.unwrap_or_else(|| req.suite.default_n_max(req.d));
        match req.suite {
            Suite::Colon => self.check_colon_identity(req.d, n_max),
            Suite::Regseq => self.check_assoc_graded_regseq(req.d, n_max),
            Suite::Length => self.check_length_formula(req.d, n_max),
            Suite::Alternating => self.check_alternating_lengths(req.d, n_max, req.k),
            Suite::Leading => self.check_leading_ideal_equality(req.d, n_max, req.with_f, req.k),
            Suite::Scounts => self.check_s_counts_and_spanning(req.d, n_max),
            Suite::Gscolon => self.check_gs_colon_chain(req.d, n_max, req.k),
            Suite::Socle => self.socle_report(req.d).map(|(_, r)| r),
            Suite::Sanity => self.check_construction_sanity(req.d, req.m, n_max),
        }
    }
}
