use crate::bell::{bell_vector, BellLabel, PauliFrame};
use crate::density::DensityMatrix;
use crate::error::{QmathError, Result};
use crate::matrix::{id2, sigma_x, sigma_y, sigma_z};

fn check_dim4(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(QmathError::DimensionMismatch { expected: 4, got: rho.dim() });
    }
    Ok(())
}

/// One-sided depolarizing channel M(rho, F) = F rho + (1-F)/3 (Sz rho Sz + Sy rho Sy + Sx rho Sx),
/// S_i acting on the second qubit.
pub fn depolarize(rho: &DensityMatrix, f: f64) -> Result<DensityMatrix> {
    check_dim4(rho)?;
    if !(0.0..=1.0).contains(&f) {
        return Err(QmathError::ParamOutOfRange(format!("depolarize fidelity {f} not in [0,1]")));
    }
    let mut acc = rho.matrix().scale_re(f);
    for frame in [PauliFrame::Z, PauliFrame::Y, PauliFrame::X] {
        let s = frame.operator();
        acc = acc.add(&rho.matrix().conjugate_by(&s).scale_re((1.0 - f) / 3.0));
    }
    DensityMatrix::new(acc)
}

/// Gaussian dephasing of the ion (first) qubit over hold time t:
/// (1-p) rho + p (sz x I) rho (sz x I), p = (1 - e^{-t^2/tau^2})/2.
pub fn dephase_gaussian(rho: &DensityMatrix, t: f64, tau: f64) -> Result<DensityMatrix> {
    check_dim4(rho)?;
    if tau <= 0.0 {
        return Err(QmathError::ParamOutOfRange(format!("dephasing time tau {tau} must be positive")));
    }
    if t < 0.0 {
        return Err(QmathError::ParamOutOfRange(format!("hold time t {t} must be nonnegative")));
    }
    let p = (1.0 - (-(t * t) / (tau * tau)).exp()) / 2.0;
    let sz = sigma_z().kron(&id2());
    let acc = rho
        .matrix()
        .scale_re(1.0 - p)
        .add(&rho.matrix().conjugate_by(&sz).scale_re(p));
    DensityMatrix::new(acc)
}

/// Quantum bit error rates (eX, eY, eZ) relative to a target Bell state:
/// e_b = (1 - s_b <sigma_b x sigma_b>)/2 with s_b = <target|sigma_b x sigma_b|target>.
pub fn qber(rho: &DensityMatrix, target: BellLabel) -> Result<(f64, f64, f64)> {
    check_dim4(rho)?;
    let tv = bell_vector(target);
    let mut e = [0.0; 3];
    for (k, sigma) in [sigma_x(), sigma_y(), sigma_z()].into_iter().enumerate() {
        let obs = sigma.kron(&sigma);
        let s = tv.dagger().mul(&obs).mul(&tv).get(0, 0).re;
        let expect = obs.mul(rho.matrix()).trace().re;
        e[k] = (1.0 - s * expect) / 2.0;
    }
    Ok((e[0], e[1], e[2]))
}
