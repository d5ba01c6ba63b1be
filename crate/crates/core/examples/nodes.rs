//! Interpolation nodes of the Hermite approximant on the cut.
use hpade::analysis::{interpolation_nodes, RealTarget};
use hpade::arith::{Num, Prec, PrecisionPolicy};
use hpade::germ::Germ;
use hpade::hermite::{hermite_approximants, hp_for_germ, Normalization, SignConvention};
use hpade::potential::paper_densities;
use hpade::roots::{kolmogorov_distance, EmpiricalMeasure};
use num_complex::Complex64;

fn main() -> hpade::Result<()> {
    let n = 30;
    let g = Germ::jacobi(Num::ratio(1, 3))?;
    let t = hp_for_germ(&g, n, &PrecisionPolicy::default(), Normalization::LastFree)?;
    let h = hermite_approximants(&t, SignConvention::Definition)?;
    let rt = RealTarget::new(&g, Prec::digits(t.cert.digits))?;
    let ns = interpolation_nodes(&h, &rt, n, None)?;
    let pts: Vec<Complex64> = ns.nodes.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let d = paper_densities(1.0 / 3.0)?;
    let ks = kolmogorov_distance(&EmpiricalMeasure::from_points(&pts, 2 * n), &d.eta_e, None)?;
    println!("{} nodes for n = {n}, KS to eta_E {:.4}", ns.count, ks.distance);
    Ok(())
}
