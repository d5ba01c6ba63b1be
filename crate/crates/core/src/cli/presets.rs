use super::spec::parse_germ;
use crate::error::{Error, Result};
use crate::germ::Germ;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresetKind {
    /// Diagonal Padé at infinity.
    Pade,
    /// Two-point Padé; the germ at 0 is `germ0`.
    TwoPoint,
    /// Type I Hermite–Padé for `[1, f, f^2]`.
    Hermite,
}

/// A figure or experiment setup: the exact formula text, the germs it is
/// computed with and the published degree.
#[derive(Clone, Copy, Debug)]
pub struct Preset {
    pub id: &'static str,
    pub formula: &'static str,
    pub kind: PresetKind,
    /// Compact germ at infinity (see [`parse_germ`]).
    pub germ: &'static str,
    /// Compact germ at 0, for two-point presets.
    pub germ0: Option<&'static str>,
    pub paper_n: usize,
    /// Real segments drawn in the plot.
    pub segments: &'static [(f64, f64)],
    pub note: Option<&'static str>,
}

impl Preset {
    /// `paper_n`, or half of it at desk scale.
    pub fn n(&self, paper_scale: bool) -> usize {
        if paper_scale {
            self.paper_n
        } else {
            self.paper_n / 2
        }
    }

    pub fn germ(&self) -> Result<Germ> {
        parse_germ(self.germ)
    }

    pub fn germ0(&self) -> Result<Option<Germ>> {
        self.germ0.map(parse_germ).transpose()
    }
}

const CASE1: &str = "prod(-2.5:1/3, -1.3:-1/3, -0.8:1/3, 0.8:-1/3, 1.3:1/3, 2.5:-1/3)";
const CASE2: &str = "prod(-2.5:1/3, -1.3:-1/3, -0.8:-1/3, 0.8:1/3, 1.3:1/3, 2.5:-1/3)";
const CASE3: &str = "prod(-2.5:1/3, -1.3:-1/3, -0.3:1/2, 0.3:-1/2, 1.3:1/3, 2.5:-1/3)";
const THREE: &[(f64, f64)] = &[(-2.5, -1.3), (-0.8, 0.8), (1.3, 2.5)];
const CASE3_EQ: &str = "prod(-2.5:1/3, -1.3:-1/3, -0.3:1/2, 0.3:-1/2, 1.3:-1/3, 2.5:1/3)";
const CASE3_SEGS: &[(f64, f64)] = &[(-2.5, -1.3), (-0.3, 0.3), (1.3, 2.5)];

const F1: &str = r"f(z) = (z - (-1.2 + 0.8i))^{1/3} (z - (0.9 + 1.5i))^{1/3} (z - (0.5 - 1.2i))^{-2/3}";
const F2: &str = r"f(z) = \{(z + (4.3 + 1.0i))(z - (2.0 + 0.5i))(z + (2.0 + 2.0i))(z + (1.0 - 3.0i))(z - (4.0 + 2.0i))(z - (3.0 + 5.0i))\}^{-1/6}";
const F3: &str = r"f(z) = \left(\frac{z - (-1.0 + 0.8i)}{z - (1.0 + 1.2i)}\right)^{1/2} + \left(\frac{z - (-1.0 + 1.5i)}{z - (-1.0 - 1.5i)}\right)^{1/2}";
const F4: &str = r"f(z) = \log\left(\frac{z - (-1.0 + 0.8i)}{z - (1.0 + 1.2i)}\right) + \log\left(\frac{z - (-1.0 + 1.5i)}{z - (-1.0 - 1.5i)}\right)";
const F5: &str = r"f_0 = ((1 - 2z)(2 - z))^{-1/2}$, $f_0 \in \mathcal{H}(0)$, $f_\infty = ((2z - 1)(z - 2))^{-1/2} + 1";
const F6: &str = r"f(z) = \sqrt[4]{(z - a_1)/(z - a_2)}$, where $a_1 = 0.9 - 1.1i$ and $a_2 = 0.1 + 0.2i";
const F78: &str = r"f(z) = \left(\frac{z+2.5}{z+1.3}\right)^{1/3} \left(\frac{z+0.8}{z-0.8}\right)^{1/3} \left(\frac{z-1.3}{z-2.5}\right)^{1/3}";
const F9: &str = r"f(z) = \left(\frac{z+2.5}{z+1.3}\right)^{1/3} \left(\frac{z+.8}{z-.8}\right)^{-1/3} \left(\frac{z-1.3}{z-2.5}\right)^{1/3}";
const F10: &str = r"f(z) = \left(\frac{z+2.5}{z+1.3}\right)^{1/3} \left(\frac{z+0.8}{z-.08}\right)^{-1/3} \left(\frac{z-1.3}{z-2.5}\right)^{1/3}";
const F11: &str = r"f(z) = \left(\frac{z+2.5}{z+1.3}\right)^{1/3} \left(\frac{z+0.3}{z-0.3}\right)^{1/2} \left(\frac{z-1.3}{z-2.5}\right)^{1/3}";
const C3: &str = r"f(z) = \left(\frac{z+2.5}{z+1.3}\right)^{1/3} \left(\frac{z+0.3}{z-0.3}\right)^{1/2} \left(\frac{z-1.3}{z-2.5}\right)^{-1/3}";
const C2: &str = r"f(z) = \left(\frac{z+2.5}{z+1.3}\right)^{1/3} \left(\frac{z+0.8}{z-0.8}\right)^{-1/3} \left(\frac{z-1.3}{z-2.5}\right)^{1/3}";

const fn pade(id: &'static str, formula: &'static str, germ: &'static str, n: usize) -> Preset {
    Preset { id, formula, kind: PresetKind::Pade, germ, germ0: None, paper_n: n, segments: &[], note: None }
}

const fn hermite(id: &'static str, formula: &'static str, germ: &'static str, n: usize, segments: &'static [(f64, f64)]) -> Preset {
    Preset { id, formula, kind: PresetKind::Hermite, germ, germ0: None, paper_n: n, segments, note: None }
}

pub const PRESETS: &[Preset] = &[
    pade("figure1", F1, "prod(-1.2+0.8i:1/3, 0.9+1.5i:1/3, 0.5-1.2i:-2/3)", 130),
    pade(
        "figure2",
        F2,
        "prod(-4.3-1.0i:-1/6, 2.0+0.5i:-1/6, -2.0-2.0i:-1/6, -1.0+3.0i:-1/6, 4.0+2.0i:-1/6, 3.0+5.0i:-1/6)",
        267,
    ),
    pade("figure3", F3, "prod(-1.0+0.8i:1/2, 1.0+1.2i:-1/2); prod(-1.0+1.5i:1/2, -1.0-1.5i:-1/2)", 300),
    pade("figure4", F4, "log(-1.0+0.8i, 1.0+1.2i); log(-1.0+1.5i, -1.0-1.5i)", 300),
    Preset {
        id: "figure5",
        formula: F5,
        kind: PresetKind::TwoPoint,
        germ: "2^(-1/2) * prod(1/2:-1/2, 2:-1/2); const",
        germ0: Some("2^(-1/2) * prod(1/2:-1/2, 2:-1/2) @ 0"),
        paper_n: 120,
        segments: &[],
        note: None,
    },
    Preset {
        id: "figure6",
        formula: F6,
        kind: PresetKind::TwoPoint,
        germ: "-1 * prod(0.9-1.1i:1/4, 0.1+0.2i:-1/4)",
        germ0: Some("((0.9-1.1i)/(0.1+0.2i))^(1/4) * prod(0.9-1.1i:1/4, 0.1+0.2i:-1/4) @ 0"),
        paper_n: 195,
        segments: &[],
        note: None,
    },
    hermite("figure7", F78, CASE1, 200, THREE),
    hermite("figure8", F78, CASE1, 200, THREE),
    hermite("figure9", F9, CASE2, 320, THREE),
    Preset {
        note: Some("the formula text shows z-.08 in the middle factor; computed with z-0.8, the case2 germ"),
        ..hermite("figure10", F10, CASE2, 320, THREE)
    },
    hermite("figure11", F11, CASE3, 320, CASE3_SEGS),
    hermite("figure12", F11, CASE3, 320, CASE3_SEGS),
    hermite("figure13", F11, CASE3, 320, CASE3_SEGS),
    hermite("figure14", F11, CASE3, 320, CASE3_SEGS),
    hermite("case1", F78, CASE1, 200, THREE),
    hermite("case2", C2, CASE2, 320, THREE),
    Preset {
        note: Some("the figure 11-14 captions show exponent 1/3 on the last factor and n = 320; this setup uses -1/3 and n = 200 as in the formula"),
        ..hermite("case3", C3, CASE3_EQ, 200, CASE3_SEGS)
    },
];

pub fn preset(id: &str) -> Result<&'static Preset> {
    PRESETS
        .iter()
        .find(|p| p.id == id)
        .ok_or_else(|| Error::Config(format!("unknown preset '{id}'; known: {}", PRESETS.iter().map(|p| p.id).collect::<Vec<_>>().join(", "))))
}
