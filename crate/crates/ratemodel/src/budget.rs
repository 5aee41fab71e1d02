/// Product of independent efficiency factors with first-order error
/// propagation: sigma = product * sqrt(sum (sigma_i / v_i)^2).
pub fn efficiency_budget(factors: &[(f64, f64)]) -> Result<(f64, f64), String> {
    let mut product = 1.0;
    let mut rel_var = 0.0;
    for &(v, sigma) in factors {
        if !(0.0..=1.0).contains(&v) {
            return Err(format!("efficiency {v} outside [0,1]"));
        }
        if v == 0.0 && sigma != 0.0 {
            return Err("zero efficiency with nonzero uncertainty".into());
        }
        product *= v;
        if v > 0.0 {
            rel_var += (sigma / v) * (sigma / v);
        }
    }
    Ok((product, product * rel_var.sqrt()))
}

/// Loop-1 detection efficiency budget for Node A: (value, sigma) per stage,
/// photon generation through detection. Unstated uncertainties are half the
/// last significant digit; the beam-splitter 0.5 is theoretical and exact.
pub const NODE_A_BUDGET: [(f64, f64); 10] = [
    (0.52, 0.005),
    (0.78, 0.02),
    (0.96, 0.01),
    (0.81, 0.03),
    (0.23, 0.01),
    (0.55, 0.005),
    (0.36, 0.005),
    (0.5, 0.0),
    (0.71, 0.005),
    (0.75, 0.02),
];

/// Loop-1 detection efficiency budget for Node B.
pub const NODE_B_BUDGET: [(f64, f64); 10] = [
    (0.52, 0.005),
    (0.78, 0.02),
    (0.96, 0.01),
    (0.81, 0.03),
    (0.23, 0.01),
    (0.46, 0.005),
    (0.42, 0.005),
    (0.5, 0.0),
    (0.56, 0.005),
    (0.75, 0.02),
];
