//! Observed convergence rates against potential-theoretic predictions.
use hpade::analysis::{approximation_errors, rate_map, Family, Predictor};
use hpade::arith::{Num, PrecisionPolicy};
use hpade::germ::Germ;
use hpade::hermite::SignConvention;
use hpade::potential::{paper_densities, Condenser};
use num_complex::Complex64;

fn main() -> hpade::Result<()> {
    let g = Germ::jacobi(Num::ratio(1, 3))?;
    let pol = PrecisionPolicy::default();
    let grid = [Complex64::new(2.0, 0.0), Complex64::new(0.0, 2.0), Complex64::new(-1.5, 1.0)];
    let e = approximation_errors(&Family::Pade, &g, &[20, 40], &grid, &pol)?;
    let rm = rate_map(&e, &grid, &Predictor::StahlGe(vec![(-1.0, 1.0)]), -1e9)?;
    let d = paper_densities(1.0 / 3.0)?;
    // the Hermite-Pade error is taken off the real axis, away from F
    let grid2 = [Complex64::new(0.0, 2.0), Complex64::new(-1.5, 1.0)];
    let e2 = approximation_errors(&Family::Hermite(SignConvention::Definition), &g, &[20, 40], &grid2, &pol)?;
    let pred = Predictor::Theorem1Gf { condenser: Condenser::new(&[(-1.0, 1.0)])?, eta_e: d.eta_e };
    let rm2 = rate_map(&e2, &grid2, &pred, -1e9)?;
    for (name, m) in [("Pade", rm), ("Hermite-Pade", rm2)] {
        for p in &m.points {
            println!("{name:>12} z = {:?}: observed {:.5?} predicted {:.5?}", p.z, p.observed, p.predicted);
        }
    }
    Ok(())
}
