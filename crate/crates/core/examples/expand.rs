//! Laurent coefficients at infinity and Taylor coefficients at a point.
use hpade::arith::{fmt_complex, Prec};
use hpade::cli::parse_germ;
use hpade::germ::Expansion;

fn main() -> hpade::Result<()> {
    let prec = Prec::digits(40);
    for text in ["prod(-1:1/3, 1:-1/3)", "prod(1/2:-1/2, 2:-1/2) @ 0"] {
        let g = parse_germ(text)?;
        println!("{g}");
        let coeffs = match g.expand(6, prec)? {
            Expansion::Infinity(s) => s.coeffs().to_vec(),
            Expansion::Point(t) => t.coeffs().to_vec(),
        };
        for (k, c) in coeffs.iter().enumerate() {
            println!("  c{k} = {}", fmt_complex(c, 25));
        }
    }
    Ok(())
}
