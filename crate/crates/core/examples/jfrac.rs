//! J-fraction by the functional Euclid algorithm; its denominators are the Padé denominators.
use hpade::arith::{fmt_complex, Num, Prec};
use hpade::germ::Germ;
use hpade::pade::{collinearity_defect_log10, jacobi_oracle, jfraction_coeffs};

fn main() -> hpade::Result<()> {
    let g = Germ::jacobi(Num::ratio(1, 3))?;
    let prec = Prec::digits(80);
    let jf = jfraction_coeffs(&g.expand_at_infinity(24, prec)?, 12)?;
    for k in 0..4 {
        println!("A{} = {}  B{} = {}", k + 1, fmt_complex(&jf.a[k], 20), k + 1, fmt_complex(&jf.b[k], 20));
    }
    let q = jf.denominators(12);
    let oracle = jacobi_oracle(12, &Num::ratio(1, 3), prec);
    println!("log10 collinearity defect of Q_12 vs Jacobi: {:.1}", collinearity_defect_log10(&q[12], &oracle));
    Ok(())
}
