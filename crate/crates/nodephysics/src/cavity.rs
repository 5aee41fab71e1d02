use serde::{Deserialize, Serialize};

use crate::error::NodeError;

/// Cavity and two-ion string geometry.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CavityGeometry {
    /// Maximum single-ion coupling strength, rad/s.
    pub g_max_rad_per_s: f64,
    /// Gaussian mode waist at the ions, micrometers.
    pub waist_um: f64,
    /// Cavity wavelength, nanometers.
    pub wavelength_nm: f64,
    /// Ion-ion separation along the string, micrometers.
    pub ion_separation_um: f64,
    /// Angle between string axis and cavity axis, degrees.
    pub axis_angle_deg: f64,
}

impl Default for CavityGeometry {
    fn default() -> Self {
        Self {
            g_max_rad_per_s: 2.0 * std::f64::consts::PI * 1.53e6,
            waist_um: 12.31,
            wavelength_nm: 854.0,
            ion_separation_um: 5.8,
            axis_angle_deg: 85.5,
        }
    }
}

impl CavityGeometry {
    pub fn validate(&self) -> Result<(), NodeError> {
        if self.waist_um <= 0.0 || self.wavelength_nm <= 0.0 || self.ion_separation_um <= 0.0 {
            return Err(NodeError::InvalidParam(
                "waist, wavelength and separation must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Ion separation projected onto the cavity axis, nanometers.
    pub fn projected_separation_nm(&self) -> f64 {
        1e3 * self.ion_separation_um * self.axis_angle_deg.to_radians().cos()
    }

    /// Distance of each ion from the cavity axis, micrometers.
    pub fn transverse_offset_um(&self) -> f64 {
        self.ion_separation_um / 2.0
    }
}

/// Relative coupling |cos(2 pi z / lambda)| * exp(-r^2 / w^2) as a fraction
/// of g_max; z is the axial offset from an antinode, r the transverse offset.
pub fn cavity_coupling(axial_offset_nm: f64, transverse_offset_um: f64, geom: &CavityGeometry) -> f64 {
    let standing = (2.0 * std::f64::consts::PI * axial_offset_nm / geom.wavelength_nm)
        .cos()
        .abs();
    let radial = (-transverse_offset_um * transverse_offset_um / (geom.waist_um * geom.waist_um))
        .exp();
    standing * radial
}

/// Cavity offset (nm, position of the first ion relative to an antinode) at
/// which both ions couple equally and maximally, with the common coupling.
///
/// Equal coupling requires 2z = -p mod lambda/2 (p the projected separation),
/// giving two candidate placements per period; the one nearer the antinode is
/// returned. A projection that is an exact multiple of lambda/2 makes the
/// couplings equal at every offset and the antinode placement is returned.
pub fn equalize_coupling(geom: &CavityGeometry) -> Result<(f64, f64), NodeError> {
    geom.validate()?;
    let p = geom.projected_separation_nm();
    let r = geom.transverse_offset_um();
    let quarter = geom.wavelength_nm / 4.0;
    let mut best: Option<(f64, f64)> = None;
    for k in -2..=2 {
        let z = -p / 2.0 + k as f64 * quarter;
        let g1 = cavity_coupling(z, r, geom);
        let g2 = cavity_coupling(z + p, r, geom);
        if (g1 - g2).abs() > 1e-9 {
            continue;
        }
        if best.as_ref().map_or(true, |&(_, g)| g1 > g) {
            best = Some((z, g1));
        }
    }
    best.ok_or_else(|| NodeError::InvalidParam("no equal-coupling placement found".into()))
}
