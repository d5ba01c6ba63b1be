//! Strong asymptotics of Jacobi polynomials off [-1, 1].
use hpade::analysis::jacobi_asymptotics_check;
use hpade::arith::{Num, Prec};
use num_complex::Complex64;

fn main() -> hpade::Result<()> {
    for row in jacobi_asymptotics_check(&[25, 50, 100], &Num::ratio(1, 3), Complex64::new(2.0, 0.0), Prec::digits(60))? {
        println!("n = {:>3}: |ratio - 1| = {:.3e}", row.n, row.defect);
    }
    Ok(())
}
