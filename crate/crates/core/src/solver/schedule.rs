/// Upper cap on the evaporation parameter.
pub const RHO_CAP: f64 = 0.95;

/// Selection exponent for iteration `t` (1-based): 1 up to 100, 2 up to 400,
/// 3 up to 800, 4 afterwards.
pub fn alpha_schedule(t: usize) -> u32 {
    match t {
        0..=100 => 1,
        101..=400 => 2,
        401..=800 => 3,
        _ => 4,
    }
}

/// Next evaporation parameter: `min((1 - phi) * rho, 0.95)`.
pub fn rho_schedule(rho: f64, phi: f64) -> f64 {
    ((1.0 - phi) * rho).min(RHO_CAP)
}
