//! Diagonal Padé approximant at infinity, its certificate and its error.
use hpade::arith::{abs_f64, Num, Prec, PrecisionPolicy};
use hpade::germ::Germ;
use hpade::pade::pade_for_germ;

fn main() -> hpade::Result<()> {
    let g = Germ::jacobi(Num::ratio(1, 3))?;
    let z = Prec::digits(60).c(2.0, 0.0);
    let exact = g.eval(&z)?;
    for n in [5, 10, 20, 40] {
        let pp = pade_for_germ(&g, n, &PrecisionPolicy::default())?;
        let err = abs_f64(&(pp.eval(&z)? - &exact));
        println!("n = {n:>2}  digits {}  residual 1e{:.0}  |f - [n/n]|(2) = {err:.3e}", pp.cert.digits, pp.cert.residual_log10);
    }
    Ok(())
}
