use qmath::{ComplexMatrix, PauliFrame};

use crate::dataset::{ProbMap, WeightMap};
use crate::mle::{mle_solve, tomography_terms, MleResult, MleTerm};

/// One conditional dataset group for the feedforward reconstruction: its
/// Bayesian probabilities, likelihood weights, the memory group's Bell-form
/// rotation U, and the Pauli correction frame of its ion outcome.
#[derive(Debug, Clone)]
pub struct FeedforwardGroup {
    pub probs: ProbMap,
    pub weights: WeightMap,
    pub unitary: ComplexMatrix,
    pub frame: PauliFrame,
}

/// Reconstructs the single feedforward-corrected state from all conditional
/// groups at once: group projectors are rotated into the corrected frame as
/// (S U) O (S U)^dag and one concatenated MLE is run.
pub fn feedforward_reconstruct(groups: &[FeedforwardGroup]) -> MleResult {
    assert!(!groups.is_empty(), "at least one group required");
    let mut terms: Vec<MleTerm> = Vec::with_capacity(groups.len() * 36);
    for group in groups {
        let su = group.frame.operator().mul(&group.unitary);
        for term in tomography_terms(&group.probs, &group.weights) {
            terms.push(MleTerm { op: term.op.conjugate_by(&su), count: term.count });
        }
    }
    mle_solve(&terms)
}
