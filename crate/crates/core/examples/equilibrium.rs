//! Equilibrium measure of several intervals and the condenser identities.
use hpade::potential::{equilibrium_intervals, equilibrium_residual, grid, paper_densities, Condenser};
use num_complex::Complex64;

fn main() -> hpade::Result<()> {
    let eq = equilibrium_intervals(&[(-2.5, -1.3), (-0.8, 0.8), (1.3, 2.5)])?;
    println!("Robin constant {:.10}, capacity {:.10}", eq.robin, (-eq.robin).exp());
    println!("g_E(2i) = {:.10}", eq.green_inf(Complex64::new(0.0, 2.0)));
    let d = paper_densities(1.0 / 3.0)?;
    let k = Condenser::new(&[(-1.0, 1.0)])?;
    let r = equilibrium_residual(&k, &d.eta_e, &d.eta_f, &grid(-0.99, 0.99, 50), &grid(1.01, 10.0, 50));
    println!("condenser identities: spread on E {:.2e}, on F {:.2e}", r.on_e.spread, r.on_f.spread);
    println!("predicted rate at 2i {:.6}", k.predicted_rate(&d.eta_e, Complex64::new(0.0, 2.0)));
    Ok(())
}
