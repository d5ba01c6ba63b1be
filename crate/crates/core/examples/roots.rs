//! Simultaneous root finding with per-root residuals.
use hpade::arith::{Poly, Prec};
use hpade::roots::find_roots;

fn main() {
    let prec = Prec::digits(50);
    let roots: Vec<_> = [(1.0, 0.0), (1.0, 0.0), (-0.5, 2.0), (3.0, -1.0)].iter().map(|&(a, b)| prec.c(a, b)).collect();
    let p = Poly::from_roots(&roots, prec);
    let zs = find_roots(&p);
    println!("converged {}  worst residual 1e{:.1}", zs.all_converged(), zs.max_residual_log10());
    for z in zs.to_c64() {
        println!("  {z:.12}");
    }
}
