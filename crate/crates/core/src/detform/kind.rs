use serde::{Deserialize, Serialize};

/// The determinant families with a known closed form.
///
/// Shift-generic kinds (the first nine) use the shift `s` of their
/// [`DeterminantSpec`](super::DeterminantSpec); the gamma and binomial kinds fix `s = 1` or
/// `s = -1` internally and ignore it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DetKind {
    /// `(z_j)_{s;i}`
    SShifted,
    /// `(b_i + z_j)_{s;i}`
    SShiftedOffsets,
    /// `(z_j)_{s;t+i}`
    SShiftedComplexIndex,
    /// `1 / (z_j)_{s;i}`
    InvSShifted,
    /// `(z_j)_{s;i} / (a z_j + b)_{s;i}`
    RatioSShifted,
    /// `(z_j)_{s;-i}`
    NegIndex,
    /// `1 / (z_j)_{s;-i}`
    InvNegIndex,
    /// `(a z_j + b)_{s;-i} / (z_j)_{s;-i}`
    RatioNegIndex,
    /// `(z_i + w_j)_{s;n-1}`
    TwoSetSymmetric,
    /// `Γ(z_j + i)`
    GammaShift,
    /// `C(z_j, i)`
    BinomialElem,
    /// `1 / Γ(z_j + i)`
    InvGamma,
    /// `1 / C(z_j, i)`
    InvBinomial,
    /// `Γ(z_j + i) / Γ(a z_j + b + i)`
    GammaRatio,
    /// `C(z_j, i) / C(a z_j + b, i)`
    BinomialRatio,
    /// `Γ(z_j - i)`
    GammaNegShift,
    /// `1 / Γ(z_j - i)`
    InvGammaNeg,
    /// `Γ(a z_j + b - i) / Γ(z_j - i)`
    GammaRatioNeg,
    /// `Γ(z_i + w_j + n - 1) / Γ(z_i + w_j)`
    TwoSetGammaRatio,
    /// `C(z_i + w_j, n - 1)`
    TwoSetBinomial,
}

impl DetKind {
    pub const ALL: [DetKind; 20] = [
        DetKind::SShifted,
        DetKind::SShiftedOffsets,
        DetKind::SShiftedComplexIndex,
        DetKind::InvSShifted,
        DetKind::RatioSShifted,
        DetKind::NegIndex,
        DetKind::InvNegIndex,
        DetKind::RatioNegIndex,
        DetKind::TwoSetSymmetric,
        DetKind::GammaShift,
        DetKind::BinomialElem,
        DetKind::InvGamma,
        DetKind::InvBinomial,
        DetKind::GammaRatio,
        DetKind::BinomialRatio,
        DetKind::GammaNegShift,
        DetKind::InvGammaNeg,
        DetKind::GammaRatioNeg,
        DetKind::TwoSetGammaRatio,
        DetKind::TwoSetBinomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DetKind::SShifted => "SShifted",
            DetKind::SShiftedOffsets => "SShiftedOffsets",
            DetKind::SShiftedComplexIndex => "SShiftedComplexIndex",
            DetKind::InvSShifted => "InvSShifted",
            DetKind::RatioSShifted => "RatioSShifted",
            DetKind::NegIndex => "NegIndex",
            DetKind::InvNegIndex => "InvNegIndex",
            DetKind::RatioNegIndex => "RatioNegIndex",
            DetKind::TwoSetSymmetric => "TwoSetSymmetric",
            DetKind::GammaShift => "GammaShift",
            DetKind::BinomialElem => "BinomialElem",
            DetKind::InvGamma => "InvGamma",
            DetKind::InvBinomial => "InvBinomial",
            DetKind::GammaRatio => "GammaRatio",
            DetKind::BinomialRatio => "BinomialRatio",
            DetKind::GammaNegShift => "GammaNegShift",
            DetKind::InvGammaNeg => "InvGammaNeg",
            DetKind::GammaRatioNeg => "GammaRatioNeg",
            DetKind::TwoSetGammaRatio => "TwoSetGammaRatio",
            DetKind::TwoSetBinomial => "TwoSetBinomial",
        }
    }

    pub fn from_name(name: &str) -> Option<DetKind> {
        DetKind::ALL.into_iter().find(|k| k.name().eq_ignore_ascii_case(name))
    }

    /// Takes a second node set `w`.
    pub fn two_sets(self) -> bool {
        matches!(self, DetKind::TwoSetSymmetric | DetKind::TwoSetGammaRatio | DetKind::TwoSetBinomial)
    }

    /// Uses the parameters `a` and `b`.
    pub fn uses_ab(self) -> bool {
        matches!(
            self,
            DetKind::RatioSShifted
                | DetKind::RatioNegIndex
                | DetKind::GammaRatio
                | DetKind::BinomialRatio
                | DetKind::GammaRatioNeg
        )
    }

    /// Depends on the shift `s` of the determinant specification.
    pub fn uses_shift(self) -> bool {
        matches!(
            self,
            DetKind::SShifted
                | DetKind::SShiftedOffsets
                | DetKind::SShiftedComplexIndex
                | DetKind::InvSShifted
                | DetKind::RatioSShifted
                | DetKind::NegIndex
                | DetKind::InvNegIndex
                | DetKind::RatioNegIndex
                | DetKind::TwoSetSymmetric
        )
    }

    /// Both the element and the closed form are rational functions of the inputs, so the
    /// whole evaluation runs exactly on rationals.
    pub fn exact_path(self) -> bool {
        !matches!(
            self,
            DetKind::SShiftedComplexIndex
                | DetKind::GammaShift
                | DetKind::InvGamma
                | DetKind::GammaRatio
                | DetKind::GammaNegShift
                | DetKind::InvGammaNeg
                | DetKind::GammaRatioNeg
                | DetKind::TwoSetGammaRatio
        )
    }
}

impl std::fmt::Display for DetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for k in DetKind::ALL {
            assert_eq!(DetKind::from_name(k.name()), Some(k));
        }
        assert_eq!(DetKind::from_name("gammashift"), Some(DetKind::GammaShift));
        assert_eq!(DetKind::from_name("nope"), None);
    }

    #[test]
    fn exact_kinds_count() {
        assert_eq!(DetKind::ALL.iter().filter(|k| k.exact_path()).count(), 12);
        assert_eq!(DetKind::ALL.iter().filter(|k| k.two_sets()).count(), 3);
    }
}
