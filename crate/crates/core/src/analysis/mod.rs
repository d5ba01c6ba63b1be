//! Checks tying computed approximants to potential theory: interpolation
//! nodes, alternation, convergence rates, orthogonality and asymptotics.

mod nodes;
mod ortho;
mod rates;

pub use nodes::{alternation_check, clustered_grid, interpolation_nodes, AlternationReport, NodeSet, RealTarget};
pub use ortho::{jacobi_asymptotics_check, orthogonality_residual, AsymptoticsRow, OrthoRow, Orthogonality};
pub use rates::{
    approximation_errors, fraction_near_complement, nonreal_fraction, nuttall_uniform_check, one_sided_hausdorff, rate_map, zeros_c64,
    Family, NuttallRow, Predictor, RateMap, RatePoint,
};

use crate::potential::{Condenser, DensityRef};

/// `ln w_n(x)` for `w_n(x) = e^{2n G_F^{eta_E}(x)} (3/2) ((1-x)/(1+x))^{1/3}`.
pub fn alternation_log_weight(n: usize, condenser: Condenser, eta_e: DensityRef) -> impl Fn(f64) -> f64 {
    move |x| {
        let g = condenser.green_potential_f(&eta_e, num_complex::Complex64::new(x, 0.0));
        2.0 * n as f64 * g + 1.5f64.ln() + ((1.0 - x) / (1.0 + x)).ln() / 3.0
    }
}

#[cfg(test)]
mod tests;
