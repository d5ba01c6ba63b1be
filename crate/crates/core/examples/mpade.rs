//! Multipoint Padé approximant with conditions at 0, at 3 and at infinity.
use hpade::arith::{abs_f64, Num, Prec, PrecisionPolicy};
use hpade::cli::parse_germ;
use hpade::pade::{multipoint_pade, MultipointSpec, Node};

fn main() -> hpade::Result<()> {
    // ((z+1)/(z-1))^(1/3) at each node; a product germ at a finite centre
    // is normalized to 1 there, so the weight carries f(centre)
    let at = |c: &str| parse_germ(&format!("prod(-1:1/3, 1:-1/3){c}"));
    let at3 = parse_germ("2^(1/3) * prod(-1:1/3, 1:-1/3) @ 3")?;
    let atm3 = parse_germ("2^(-1/3) * prod(-1:1/3, 1:-1/3) @ -3")?;
    let spec = MultipointSpec {
        nodes: vec![(Node::Infinity, 11, at("")?), (Node::Point(Num::int(3)), 6, at3), (Node::Point(Num::int(-3)), 4, atm3)],
    };
    let mp = multipoint_pade(&spec, 10, &PrecisionPolicy::default())?;
    println!("residual per node (log10): {:?}", mp.node_residuals);
    let g = at("")?;
    println!("f(3) check: {:.3e}", abs_f64(&(mp.eval(&Prec::digits(60).c(3.0, 0.0))? - g.eval(&Prec::digits(60).c(3.0, 0.0))?)));
    let z = Prec::digits(60).c(0.5, 1.0);
    println!("|f - B_10|(0.5+i) = {:.3e}", abs_f64(&(mp.eval(&z)? - g.eval(&z)?)));
    Ok(())
}
