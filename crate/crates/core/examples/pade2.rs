//! Two-point Padé approximant interpolating one germ at 0 and another at infinity.
use hpade::arith::PrecisionPolicy;
use hpade::cli::preset;
use hpade::pade::{two_point_pade, TwoPointOrders};
use hpade::roots::{find_roots, froissart_pairs, LimitSet};

fn main() -> hpade::Result<()> {
    let p = preset("figure5")?;
    let (finf, f0) = (p.germ()?, p.germ0()?.expect("two-point preset"));
    let mp = two_point_pade(&f0, &finf, 30, TwoPointOrders::Displayed, &PrecisionPolicy::default())?;
    println!("node residuals (log10): {:?}", mp.node_residuals);
    let zeros = find_roots(&mp.p).to_c64();
    let poles = find_roots(&mp.q).to_c64();
    let pairs = froissart_pairs(&zeros, &poles, 1e-3, &LimitSet::default());
    println!("{} zeros, {} poles, {} doublets", zeros.len(), poles.len(), pairs.len());
    Ok(())
}
