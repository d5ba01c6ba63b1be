//! Orthogonality residuals of Padé and Hermite–Padé denominators on the cut.
use hpade::analysis::{orthogonality_residual, Orthogonality};
use hpade::arith::{Num, PrecisionPolicy};
use hpade::germ::Germ;
use hpade::pade::pade_for_germ;

fn main() -> hpade::Result<()> {
    let n = 10;
    let g = Germ::jacobi(Num::ratio(1, 3))?;
    let pp = pade_for_germ(&g, n, &PrecisionPolicy::default())?;
    let ks: Vec<usize> = (0..=n).collect();
    for row in orthogonality_residual(pp.denominator(), &g, &ks, &Orthogonality::PadeEq65)? {
        println!("k = {:>2}: log10 residual {:.1}", row.k, row.residual_log10);
    }
    Ok(())
}
