//! Every tag a report may carry. Scoped reports prefix a registered tag with
//! one of [`SCOPES`].

/// Equations and lemmas of the theory, one tag per checked identity.
pub const IDENTITIES: &[&str] = &[
    // dual bases and zigzags, left and right
    "Eq.1.6",
    "Eq.1.9/dual",
    "Eq.1.9/base",
    "Eq.1.10",
    "Eq.1.11/dual",
    "Eq.1.11/base",
    "Eq.1.6r",
    "Eq.1.9r/dual",
    "Eq.1.9r/base",
    "Eq.1.10r",
    "Eq.1.11r/dual",
    "Eq.1.11r/base",
    // coalgebroids
    "Eq.9",
    "Eq.10",
    "Eq.11",
    "Eq.12",
    "Eq.13",
    "Lemma1.3.2",
    "Lemma1.3.2/left",
    // comodules
    "Eq.17",
    "Eq.17/induced",
    "Eq.18",
    "Eq.19",
    // bialgebroids
    "Eq.24",
    "Eq.25",
    "Eq.26",
    "Eq.27",
    "Eq.29",
    "Eq.30",
    "Eq.31",
    // antipodes
    "Eq.341",
    "Eq.342",
    "Eq.35.0",
    "Eq.35",
    "Eq.39",
    "Eq.41",
    "Lemma7.1/41b",
    "Lemma7.1/41c",
    "OpAntipode/1",
    "OpAntipode/2",
    "Lemma7.2/i",
    "Lemma7.2/ii",
    "Lemma7.2/iii",
    // dual comodules
    "Eq.43b",
    "Eq.45",
    "Eq.47",
    "Prop7.2/ev",
    "Prop7.2/db",
    // reconstruction
    "Eq.rt9",
    "Eq.rt10",
    "Eq.rt13",
    "Eq.rt14",
];

/// Structural checks that carry no equation number.
pub const STRUCTURAL: &[&str] = &[
    "Algebra/assoc",
    "Algebra/unit",
    "Bimodule/left/hom",
    "Bimodule/left/unit",
    "Bimodule/right/hom",
    "Bimodule/right/unit",
    "Bimodule/commute/left/right",
    "Bimodule/sigma_left/hom",
    "Bimodule/sigma_left/unit",
    "Bimodule/sigma_right/hom",
    "Bimodule/sigma_right/unit",
    "Bimodule/tau_left/hom",
    "Bimodule/tau_left/unit",
    "Bimodule/tau_right/hom",
    "Bimodule/tau_right/unit",
    "Bimodule/commute/sigma_left/sigma_right",
    "Bimodule/commute/sigma_left/tau_left",
    "Bimodule/commute/sigma_left/tau_right",
    "Bimodule/commute/sigma_right/tau_left",
    "Bimodule/commute/sigma_right/tau_right",
    "Bimodule/commute/tau_left/tau_right",
    "Coalgebroid/coassoc",
    "Coalgebroid/eps-linear",
    "Coalgebroid/iii",
    "Anchor/morphism",
    "Morphism/actions",
    "Morphism/counit",
    "Morphism/coproduct",
    "Comodule/coassoc",
    "Comodule/counit",
    "Comodule/linear",
    "Bialgebroid/product-descends",
    "Bialgebroid/source",
    "Bialgebroid/target",
    "Antipode/unique",
    "OpAntipode/unique",
    "Presentation/modules",
    "Presentation/projective",
    "Presentation/typing",
    "Presentation/closure",
    "Presentation/theta",
    "Presentation/strict",
    "Presentation/unit-iso",
    "Presentation/zigzag",
    "Presentation/zigzag-right",
    "Coend/coproduct-descends",
    "Coend/counit-descends",
    "Coend/basis-independent",
    "Coend/colinear",
    "Coend/product-descends",
    "Coend/antipode-descends",
    "Coend/opposite-antipode-descends",
    "Coend/monoidal",
    "Roundtrip/descends",
    "Roundtrip/iso",
];

pub const SCOPES: &[&str] = &["Roundtrip/", "Prop7.2/left/"];

/// Whether `tag`, after stripping any scopes, is registered.
pub fn is_registered(tag: &str) -> bool {
    if IDENTITIES.contains(&tag) || STRUCTURAL.contains(&tag) {
        return true;
    }
    SCOPES
        .iter()
        .any(|s| tag.strip_prefix(s).is_some_and(is_registered))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scopes_nest() {
        assert!(is_registered("Eq.10"));
        assert!(is_registered("Roundtrip/Morphism/counit"));
        assert!(is_registered("Prop7.2/left/Eq.17"));
        assert!(!is_registered("Eq.999"));
        assert!(!is_registered("Roundtrip/"));
    }

    #[test]
    fn no_duplicates() {
        let mut all: Vec<&str> = IDENTITIES.iter().chain(STRUCTURAL).copied().collect();
        let n = all.len();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), n);
    }
}
