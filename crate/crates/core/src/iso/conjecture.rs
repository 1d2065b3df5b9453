//! Evidence for the open question whether every SL(2, Z) generator is
//! conjugate to its inverse in GL(2, Z).
//!
//! Nothing here asserts the conjecture: "unknown" stays unknown.

use rayon::prelude::*;

use super::conjugacy::{gl2_conjugate, ConjugacyVerdict};
use crate::autgroup::{synthesize_with, AutError};
use crate::matrix::GlMatrix;
use crate::pell::{Direct, FundamentalSource};
use crate::quad::QuadraticIrrational;
use crate::scalar::IntScalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjectureOutcome<T: IntScalar> {
    /// The generator has determinant `-1`; the question concerns SL(2, Z).
    NotApplicable,
    Verdict(ConjugacyVerdict<T>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureEntry<T: IntScalar> {
    pub alpha: QuadraticIrrational<T>,
    pub generator: GlMatrix<T>,
    pub outcome: ConjectureOutcome<T>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport<T: IntScalar> {
    pub entries: Vec<ConjectureEntry<T>>,
    pub yes: usize,
    pub no: usize,
    pub unknown: usize,
    pub not_applicable: usize,
}

/// Test `A0 ~ A0^-1` for every corpus entry, in parallel; entries keep the
/// corpus order.
pub fn conjecture_scan<T: IntScalar>(
    corpus: &[QuadraticIrrational<T>],
    bound: u64,
) -> Result<ConjectureReport<T>, AutError> {
    conjecture_scan_with(corpus, bound, &Direct)
}

/// [`conjecture_scan`] with Pell solutions drawn from `source`.
pub fn conjecture_scan_with<T: IntScalar, S: FundamentalSource<T> + Sync>(
    corpus: &[QuadraticIrrational<T>],
    bound: u64,
    source: &S,
) -> Result<ConjectureReport<T>, AutError> {
    let entries = corpus
        .par_iter()
        .map(|alpha| {
            let a0 = synthesize_with(alpha, source)?.matrix;
            let outcome = if a0.det().is_one() {
                ConjectureOutcome::Verdict(gl2_conjugate(&a0, &a0.inverse(), bound))
            } else {
                ConjectureOutcome::NotApplicable
            };
            Ok(ConjectureEntry {
                alpha: alpha.clone(),
                generator: a0,
                outcome,
            })
        })
        .collect::<Result<Vec<_>, AutError>>()?;
    let mut report = ConjectureReport {
        entries: Vec::new(),
        yes: 0,
        no: 0,
        unknown: 0,
        not_applicable: 0,
    };
    for e in &entries {
        match &e.outcome {
            ConjectureOutcome::NotApplicable => report.not_applicable += 1,
            ConjectureOutcome::Verdict(ConjugacyVerdict::Yes(_)) => report.yes += 1,
            ConjectureOutcome::Verdict(ConjugacyVerdict::No(_)) => report.no += 1,
            ConjectureOutcome::Verdict(ConjugacyVerdict::Unknown { .. }) => report.unknown += 1,
        }
    }
    report.entries = entries;
    Ok(report)
}
