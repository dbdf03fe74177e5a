//! The bundled presentations.

use alloc::vec;
use alloc::vec::Vec;

use crate::bidegree::Bidegree;
use crate::monomial::Coefficients;
use crate::presentations::spec::{
    GeneratorSpec, Grading, LaurentSpec, PairWeight, RelationTemplate, RingPresentation,
};
use crate::presentations::template::Template;

pub const CLASSICAL_Z2: &str = "classical-z2";
pub const CLASSICAL_Z: &str = "classical-z";
pub const CLASSICAL_Z_MOD2: &str = "classical-z-mod2";
pub const CHOW: &str = "chow";
pub const MOTIVIC_Z2: &str = "motivic-z2";
pub const MOTIVIC_Z: &str = "motivic-z";

fn b(p: i64, q: i64) -> Bidegree {
    Bidegree::new(p, q)
}

fn s(p: i64) -> Bidegree {
    Bidegree::single(p)
}

/// `Z/2[w2, w3, w4]`.
pub fn classical_z2() -> RingPresentation {
    RingPresentation {
        name: CLASSICAL_Z2.into(),
        coefficients: Coefficients::Mod2,
        grading: Grading::Single,
        generators: vec![
            GeneratorSpec::atomic("w2", s(2)),
            GeneratorSpec::atomic("w3", s(3)),
            GeneratorSpec::atomic("w4", s(4)),
        ],
        relations: Vec::new(),
        laurent: None,
    }
}

fn classical_generators() -> Vec<GeneratorSpec> {
    vec![
        GeneratorSpec::atomic("bw2", s(3)),
        GeneratorSpec::atomic("p1", s(4)),
        GeneratorSpec::atomic("sqrt_p2", s(4)),
    ]
}

/// `Z[bw2, p1, sqrt_p2] / (2·bw2)`, where `bw2` is the integral Bockstein of
/// `w2` and `sqrt_p2` the Euler class.
pub fn classical_z() -> RingPresentation {
    RingPresentation {
        name: CLASSICAL_Z.into(),
        coefficients: Coefficients::Integers,
        grading: Grading::Single,
        generators: classical_generators(),
        relations: vec![RelationTemplate::element("2bw2", "2·bw2")],
        laurent: None,
    }
}

/// The integral ring tensored with `Z/2`: `Z/2[bw2, p1, sqrt_p2]`.
pub fn classical_z_mod2() -> RingPresentation {
    RingPresentation {
        name: CLASSICAL_Z_MOD2.into(),
        coefficients: Coefficients::Mod2,
        grading: Grading::Single,
        generators: classical_generators(),
        relations: Vec::new(),
        laurent: None,
    }
}

fn chow_generators() -> Vec<GeneratorSpec> {
    vec![
        GeneratorSpec::atomic("d2", b(4, 2)),
        GeneratorSpec::atomic("d3", b(6, 3)),
        GeneratorSpec::atomic("d4", b(8, 4)),
        GeneratorSpec::atomic("y2", b(4, 2)),
    ]
}

fn chow_relations() -> Vec<RelationTemplate> {
    vec![
        RelationTemplate::element("2d3", "2·d3"),
        RelationTemplate::element("y2d3", "y2·d3"),
        RelationTemplate::element("y2^2-4d4", "y2^2 - 4·d4"),
    ]
}

/// `Z[d2, d3, d4, y2] / (2d3, y2·d3, y2^2 - 4d4)`, codimension `i` placed in
/// bidegree `(2i, i)`.
pub fn chow() -> RingPresentation {
    RingPresentation {
        name: CHOW.into(),
        coefficients: Coefficients::Integers,
        grading: Grading::Bigraded,
        generators: chow_generators(),
        relations: chow_relations(),
        laurent: None,
    }
}

/// Mod 2 motivic cohomology as the Laurent subring of `Z/2[τ^±1, w2, w3, w4]`
/// spanned by `τ^e·w2^a·w3^b·w4^c` with `e >= -δ(a, b, c)`, plus the
/// square-zero classes `y02·(τ^-2·w2^2)^i·(τ^-2·w4^2)^j`.
pub fn motivic_z2() -> RingPresentation {
    let pw = |a: &str, b: &str, weight| PairWeight { a: a.into(), b: b.into(), weight };
    RingPresentation {
        name: MOTIVIC_Z2.into(),
        coefficients: Coefficients::Mod2,
        grading: Grading::Bigraded,
        generators: vec![
            GeneratorSpec::atomic("τ", b(0, 1)),
            GeneratorSpec::atomic("w2", b(2, 2)),
            GeneratorSpec::atomic("w3", b(3, 2)),
            GeneratorSpec::atomic("w4", b(4, 3)),
            GeneratorSpec::atomic("y02", b(4, 2)),
        ],
        relations: Vec::new(),
        laurent: Some(LaurentSpec {
            unit: "τ".into(),
            letters: vec!["w2".into(), "w3".into(), "w4".into()],
            pair_weights: vec![
                pw("w2", "w2", 2),
                pw("w3", "w3", 1),
                pw("w4", "w4", 2),
                pw("w2", "w3", 1),
                pw("w2", "w4", 1),
                pw("w3", "w4", 1),
            ],
            socle: "y02".into(),
            socle_multipliers: vec![
                Template::parse("τ^-2·w2^2").expect("parses"),
                Template::parse("τ^-2·w4^2").expect("parses"),
            ],
        }),
    }
}

/// Integral motivic cohomology: the Chow generators plus the torsion
/// families `A(k)` in `(3, 2+k)` and `B(k)` in `(7, 4+k)`.
pub fn motivic_z() -> RingPresentation {
    let mut generators = chow_generators();
    generators.push(GeneratorSpec::family("A", b(3, 2), b(0, 1)));
    generators.push(GeneratorSpec::family("B", b(7, 4), b(0, 1)));
    let mut relations = chow_relations();
    relations.extend([
        RelationTemplate::element("2A", "2·A(k)"),
        RelationTemplate::element("2B", "2·B(k)"),
        RelationTemplate::element("y2A", "y2·A(k)"),
        RelationTemplate::element("y2B", "y2·B(k)"),
        RelationTemplate::sum_identification("A", "A"),
        RelationTemplate::sum_identification("B", "B"),
        RelationTemplate::sum_identification("A", "B"),
        RelationTemplate::element("B^2-d4A^2", "B(k)^2 - d4·A(k)^2"),
        RelationTemplate::element("A^3-d3A", "A(k)^3 - d3·A(3k+1)"),
    ]);
    RingPresentation {
        name: MOTIVIC_Z.into(),
        coefficients: Coefficients::Integers,
        grading: Grading::Bigraded,
        generators,
        relations,
        laurent: None,
    }
}

pub fn bundled_rings() -> Vec<RingPresentation> {
    vec![classical_z2(), classical_z(), classical_z_mod2(), chow(), motivic_z2(), motivic_z()]
}
