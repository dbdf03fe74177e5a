//! The bundled homomorphisms.

use alloc::vec::Vec;

use crate::bidegree::Bidegree;
use crate::maps::spec::{GeneratorImage, MapKind, MapSpec};
use crate::presentations::catalog::{
    CHOW, CLASSICAL_Z, CLASSICAL_Z2, MOTIVIC_Z, MOTIVIC_Z2,
};
use crate::presentations::Template;

pub const MU_C: &str = "mu_c";
pub const MU_M: &str = "mu_m";
pub const BETA_TILDE_C: &str = "beta_tilde_c";
pub const BOCKSTEIN_C: &str = "bockstein_c";
pub const BOCKSTEIN_M: &str = "bockstein_m";
pub const T: &str = "t";
pub const T2: &str = "t2";
pub const CYCLE: &str = "cl";

/// Name of the closed-form rule used by the classical integral Bockstein.
pub const BETA_TILDE_FORMULA: &str = "beta-tilde-classical";

fn images(pairs: &[(&str, &str)]) -> Vec<GeneratorImage> {
    pairs
        .iter()
        .map(|(g, t)| GeneratorImage {
            generator: (*g).into(),
            image: Template::parse(t).expect("bundled image parses"),
        })
        .collect()
}

fn map(
    name: &str,
    source: &str,
    target: &str,
    kind: MapKind,
    shift: Bidegree,
    forget_weight: bool,
    pairs: &[(&str, &str)],
) -> MapSpec {
    MapSpec {
        name: name.into(),
        source: source.into(),
        target: target.into(),
        kind,
        shift,
        forget_weight,
        images: images(pairs),
        formula: None,
    }
}

pub fn bundled_maps() -> Vec<MapSpec> {
    let zero = Bidegree::ZERO;
    let up = Bidegree::new(1, 0);
    let mut beta_tilde = map(BETA_TILDE_C, CLASSICAL_Z2, CLASSICAL_Z, MapKind::MonomialFormula, up, false, &[]);
    beta_tilde.formula = Some(BETA_TILDE_FORMULA.into());
    alloc::vec![
        map(
            MU_C,
            CLASSICAL_Z,
            CLASSICAL_Z2,
            MapKind::RingMap,
            zero,
            false,
            &[("bw2", "w3"), ("p1", "w2^2"), ("sqrt_p2", "w4")],
        ),
        beta_tilde,
        map(
            BOCKSTEIN_C,
            CLASSICAL_Z2,
            CLASSICAL_Z2,
            MapKind::Derivation,
            up,
            false,
            &[("w2", "w3"), ("w3", "0"), ("w4", "0")],
        ),
        map(
            BOCKSTEIN_M,
            MOTIVIC_Z2,
            MOTIVIC_Z2,
            MapKind::Derivation,
            up,
            false,
            &[("τ", "0"), ("w2", "w3"), ("w3", "0"), ("w4", "0"), ("y02", "0")],
        ),
        map(
            T,
            MOTIVIC_Z,
            CLASSICAL_Z,
            MapKind::RingMap,
            zero,
            true,
            &[
                ("d2", "-p1"),
                ("d3", "bw2^2"),
                ("d4", "sqrt_p2^2"),
                ("y2", "2·sqrt_p2"),
                ("A", "bw2"),
                ("B", "sqrt_p2·bw2"),
            ],
        ),
        map(
            T2,
            MOTIVIC_Z2,
            CLASSICAL_Z2,
            MapKind::RingMap,
            zero,
            true,
            &[("τ", "1"), ("w2", "w2"), ("w3", "w3"), ("w4", "w4"), ("y02", "0")],
        ),
        map(
            MU_M,
            MOTIVIC_Z,
            MOTIVIC_Z2,
            MapKind::RingMap,
            zero,
            false,
            &[
                ("d2", "τ^-2·w2^2"),
                ("d3", "τ^-1·w3^2"),
                ("d4", "τ^-2·w4^2"),
                ("y2", "y02"),
                ("A", "τ^(k)·w3"),
                ("B", "τ^(k-1)·w3·w4"),
            ],
        ),
        map(
            CYCLE,
            CHOW,
            MOTIVIC_Z,
            MapKind::RingMap,
            zero,
            false,
            &[("d2", "d2"), ("d3", "d3"), ("d4", "d4"), ("y2", "y2")],
        ),
    ]
}
