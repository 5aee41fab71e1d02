use qmath::{ComplexMatrix, DensityMatrix};

use crate::dataset::{ProbMap, WeightMap};
use crate::setting::{projector_order, ProjectorSetting};

pub const MLE_TOL: f64 = 1e-10;
pub const MLE_MAX_ITERS: usize = 10_000;

#[derive(Debug, Clone)]
pub struct MleResult {
    pub rho: DensityMatrix,
    pub converged: bool,
    pub iterations: usize,
    pub log_likelihood: f64,
}

/// One measurement operator with its observed effective count.
#[derive(Debug, Clone)]
pub struct MleTerm {
    pub op: ComplexMatrix,
    pub count: f64,
}

/// Iterative R-rho-R maximum-likelihood reconstruction.
///
/// The likelihood is multinomial over the measurement operators with the
/// given effective counts; each iteration applies rho <- R rho R / Tr with
/// R = sum_j (n_j / p_j) O_j, which never decreases the likelihood.
pub fn mle_solve(terms: &[MleTerm]) -> MleResult {
    let dim = terms.first().map(|t| t.op.rows()).unwrap_or(4);
    let total: f64 = terms.iter().map(|t| t.count).sum();
    assert!(total > 0.0, "MLE requires positive total counts");
    let mut rho = ComplexMatrix::identity(dim).scale_re(1.0 / dim as f64);

    let log_likelihood = |rho: &ComplexMatrix| -> f64 {
        terms
            .iter()
            .map(|t| {
                let p = t.op.mul(rho).trace().re.max(1e-300);
                t.count / total * p.ln()
            })
            .sum()
    };

    let mut prev = log_likelihood(&rho);
    let mut converged = false;
    let mut iterations = 0;
    for iter in 1..=MLE_MAX_ITERS {
        iterations = iter;
        let mut r = ComplexMatrix::zeros(dim, dim);
        for t in terms {
            let p = t.op.mul(&rho).trace().re.max(1e-300);
            r = r.add(&t.op.scale_re(t.count / total / p));
        }
        let next = r.mul(&rho).mul(&r);
        let tr = next.trace().re;
        rho = next.scale_re(1.0 / tr);
        let ll = log_likelihood(&rho);
        debug_assert!(ll >= prev - 1e-9, "likelihood decreased: {prev} -> {ll}");
        if ll - prev < MLE_TOL {
            prev = ll;
            converged = true;
            break;
        }
        prev = ll;
    }
    MleResult {
        rho: DensityMatrix::new(rho).expect("MLE iterate is a valid state"),
        converged,
        iterations,
        log_likelihood: prev,
    }
}

/// Builds the 36-projector likelihood terms from per-basis-pair probabilities
/// and effective sample sizes.
pub fn tomography_terms(probs: &ProbMap, weights: &WeightMap) -> Vec<MleTerm> {
    let mut terms = Vec::with_capacity(36);
    for (&pair, p) in probs {
        let w = weights.get(&pair).copied().unwrap_or(1.0).max(1e-12);
        for (idx, &(proj_a, proj_b)) in projector_order().iter().enumerate() {
            let setting = ProjectorSetting {
                basis_a: pair.0,
                basis_b: pair.1,
                proj_a,
                proj_b,
            };
            terms.push(MleTerm { op: setting.operator(), count: w * p[idx] });
        }
    }
    terms
}

/// Maximum-likelihood state reconstruction from Bayesian probabilities.
pub fn mle_reconstruct(probs: &ProbMap, weights: &WeightMap) -> MleResult {
    mle_solve(&tomography_terms(probs, weights))
}
