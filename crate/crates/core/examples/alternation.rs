//! Weighted alternation of the Hermite approximant error on (-1, 1).
use hpade::analysis::{alternation_check, alternation_log_weight, interpolation_nodes, RealTarget};
use hpade::arith::{Num, Prec, PrecisionPolicy};
use hpade::germ::Germ;
use hpade::hermite::{hermite_approximants, hp_for_germ, Normalization, SignConvention};
use hpade::potential::{paper_densities, Condenser};

fn main() -> hpade::Result<()> {
    let n = 30;
    let g = Germ::jacobi(Num::ratio(1, 3))?;
    let t = hp_for_germ(&g, n, &PrecisionPolicy::default(), Normalization::LastFree)?;
    let h = hermite_approximants(&t, SignConvention::Definition)?;
    let rt = RealTarget::new(&g, Prec::digits(t.cert.digits))?;
    let ns = interpolation_nodes(&h, &rt, n, None)?;
    let d = paper_densities(1.0 / 3.0)?;
    let k = Condenser::new(&[(-1.0, 1.0)])?;
    let rep = alternation_check(&h, &rt, &ns, n, 0.1, alternation_log_weight(n, k, d.eta_e))?;
    println!("alternating run {} (required {}), central magnitudes {:.3?}", rep.run, rep.required, rep.central_range);
    Ok(())
}
