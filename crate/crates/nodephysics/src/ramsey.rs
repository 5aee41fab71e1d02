/// Gaussian Ramsey fringe decay C0 * exp(-t^2 / tau^2).
pub fn ramsey_amplitude(t: f64, tau: f64, c0: f64) -> f64 {
    assert!(tau > 0.0, "tau must be positive");
    c0 * (-(t * t) / (tau * tau)).exp()
}
