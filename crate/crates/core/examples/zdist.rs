//! Zero distribution of Padé and Hermite–Padé denominators against reference densities.
use hpade::arith::{Num, PrecisionPolicy};
use hpade::germ::Germ;
use hpade::hermite::{hp_for_germ, Normalization};
use hpade::pade::pade_for_germ;
use hpade::potential::paper_densities;
use hpade::roots::{counting_measure, find_roots, kolmogorov_distance, DensityRef, EmpiricalMeasure};

fn main() -> hpade::Result<()> {
    let g = Germ::jacobi(Num::ratio(1, 3))?;
    let pol = PrecisionPolicy::default();
    let pp = pade_for_germ(&g, 40, &pol)?;
    let ks = kolmogorov_distance(&counting_measure(&find_roots(pp.denominator()), 40), &DensityRef::arcsine(), None)?;
    println!("Pade n = 40: KS to arcsine {:.4}", ks.distance);
    let t = hp_for_germ(&g, 40, &pol, Normalization::LastFree)?;
    let d = paper_densities(1.0 / 3.0)?;
    let m = EmpiricalMeasure::from_points(&find_roots(&t.q2).to_c64(), 40);
    let ks = kolmogorov_distance(&m, &d.eta_f, Some(10.0))?;
    println!("Hermite-Pade n = 40: windowed KS to eta_F {:.4}, mass outside window {:.3}", ks.distance, ks.outside_mass);
    Ok(())
}
