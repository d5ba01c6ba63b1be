//! Type I Hermite–Padé polynomials for [1, f, f^2] and the Hermite approximants.
use hpade::arith::{fmt_complex, Num, Prec, PrecisionPolicy};
use hpade::germ::Germ;
use hpade::hermite::{hermite_approximants, hp_for_germ, Normalization, SignConvention};

fn main() -> hpade::Result<()> {
    let g = Germ::jacobi(Num::ratio(1, 3))?;
    let t = hp_for_germ(&g, 20, &PrecisionPolicy::default(), Normalization::LastFree)?;
    println!("digits {}  residual 1e{:.0}  nullity {}", t.cert.digits, t.cert.residual_log10, t.cert.nullity);
    let h = hermite_approximants(&t, SignConvention::Definition)?;
    let z = Prec::digits(t.cert.digits).c(0.0, 2.0);
    println!("H0(2i) = {}", fmt_complex(&h.eval_h0(&z)?, 20));
    println!("H1(2i) = {}", fmt_complex(&h.eval_h1(&z)?, 20));
    Ok(())
}
