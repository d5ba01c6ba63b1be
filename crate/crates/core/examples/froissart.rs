//! Froissart doublets of a Padé approximant away from the limit set.
use hpade::arith::PrecisionPolicy;
use hpade::cli::preset;
use hpade::pade::pade_for_germ;
use hpade::potential::{chebotarev_point, trace_stahl_arcs};
use hpade::roots::{find_roots, froissart_pairs, LimitPiece, LimitSet};
use num_complex::Complex64;

fn main() -> hpade::Result<()> {
    let g = preset("figure1")?.germ()?;
    let pp = pade_for_germ(&g, 40, &PrecisionPolicy::default())?;
    let zeros = find_roots(&pp.numerator()).to_c64();
    let poles = find_roots(pp.denominator()).to_c64();
    let tri = [Complex64::new(-1.2, 0.8), Complex64::new(0.9, 1.5), Complex64::new(0.5, -1.2)];
    let (ch, _) = chebotarev_point(tri, hpade::arith::Prec::digits(40))?;
    let geo = trace_stahl_arcs(tri, ch.v)?;
    let pieces = geo.arcs.iter().flat_map(|a| a.windows(2).map(|w| LimitPiece::Segment(w[0], w[1])).collect::<Vec<_>>()).collect();
    let limit = LimitSet { pieces, margin: 0.05 };
    let pairs = froissart_pairs(&zeros, &poles, 1e-3, &limit);
    println!("{} doublets among {} poles", pairs.len(), poles.len());
    for p in pairs {
        println!("  zero {:.6} pole {:.6} distance {:.2e}", zeros[p.zero], poles[p.pole], p.distance);
    }
    Ok(())
}
