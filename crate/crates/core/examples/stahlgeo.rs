//! Chebotarev point and Stahl arcs for three branch points.
use hpade::arith::Prec;
use hpade::potential::{arc_potential_max, chebotarev_point, trace_stahl_arcs};
use num_complex::Complex64;

fn main() -> hpade::Result<()> {
    let tri = [Complex64::new(-1.2, 0.8), Complex64::new(0.9, 1.5), Complex64::new(0.5, -1.2)];
    let (ch, _) = chebotarev_point(tri, Prec::digits(60))?;
    println!("v = {}", ch.v_text);
    println!("period residual 1e{:.1}, recheck 1e{:.1}", ch.residual_log10, ch.recheck_log10);
    let geo = trace_stahl_arcs(tri, ch.v)?;
    println!("{} arcs, max |Re integral| along arcs {:.2e}", geo.arcs.len(), arc_potential_max(&geo));
    Ok(())
}
