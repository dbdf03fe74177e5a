//! Degree-wise checks.

mod families;
mod invariants;
mod report;
mod squares;
mod uct;
pub(crate) mod util;

pub use families::{
    check_lift_roundtrip, check_no_lift_family9, classify_family, order_modulo_realization,
    FamilyClassification,
};
pub use invariants::{
    check_bockstein_factorization, check_bockstein_membership, check_bockstein_square, check_chow_slice,
    check_hilbert_series, check_mu_torsion_injective, check_relation_images, check_torsion_generators,
    check_torsion_pattern, check_two_torsion, two_torsion_expected,
};
pub use report::{CheckBox, CheckReport, Finding, ReportBuilder, Status};
pub use squares::{
    check_ker_t2, check_no_square_root, check_no_square_root_suite, check_squares, square_root_instances,
    SQUARE_ROOT_CAP,
};
pub use uct::{check_presentation_vs_uct, check_uct_classical, check_uct_motivic, forced_structure};

use alloc::string::ToString;

use crate::context::Context;
use crate::error::{Error, Result};

type CheckFn = fn(&Context, CheckBox) -> Result<CheckReport>;

/// Every registered check, in the default run order.
pub const CHECKS: &[(&str, CheckFn)] = &[
    ("uct-classical", check_uct_classical),
    ("uct-motivic", check_uct_motivic),
    ("chow-slice", check_chow_slice),
    ("two-torsion", check_two_torsion),
    ("hilbert-series", check_hilbert_series),
    ("torsion-pattern", check_torsion_pattern),
    ("squares", check_squares),
    ("ker-t2", check_ker_t2),
    ("no-square-root", check_no_square_root_suite),
    ("lift-roundtrip", check_lift_roundtrip),
    ("no-lift-family9", check_no_lift_family9),
    ("bockstein-square", check_bockstein_square),
    ("bockstein-factorization", check_bockstein_factorization),
    ("bockstein-membership", check_bockstein_membership),
    ("relation-images", check_relation_images),
    ("torsion-generators", check_torsion_generators),
    ("mu-torsion-injective", check_mu_torsion_injective),
    ("presentation-vs-uct", check_presentation_vs_uct),
];

pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|(n, _)| *n)
}

pub fn run_check(ctx: &Context, name: &str, bounds: CheckBox) -> Result<CheckReport> {
    let (_, f) = CHECKS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
    f(ctx, bounds)
}

/// Rings a check reads, used to select checks by ring.
pub fn check_rings(name: &str) -> &'static [&'static str] {
    use crate::presentations::catalog::*;
    match name {
        "uct-classical" => &[CLASSICAL_Z, CLASSICAL_Z2, CLASSICAL_Z_MOD2],
        "uct-motivic" | "mu-torsion-injective" | "presentation-vs-uct" | "torsion-generators" => {
            &[MOTIVIC_Z, MOTIVIC_Z2]
        }
        "chow-slice" => &[CHOW, MOTIVIC_Z],
        "two-torsion" => &[CLASSICAL_Z, CHOW, MOTIVIC_Z],
        "hilbert-series" | "bockstein-factorization" => &[CLASSICAL_Z2, CLASSICAL_Z],
        "torsion-pattern" => &[CLASSICAL_Z],
        "squares" | "lift-roundtrip" | "no-lift-family9" => &[MOTIVIC_Z, MOTIVIC_Z2, CLASSICAL_Z, CLASSICAL_Z2],
        "ker-t2" | "no-square-root" | "bockstein-membership" => &[MOTIVIC_Z2],
        "bockstein-square" => &[CLASSICAL_Z2, MOTIVIC_Z2],
        "relation-images" => &[CLASSICAL_Z, CLASSICAL_Z2, CHOW, MOTIVIC_Z, MOTIVIC_Z2],
        _ => &[],
    }
}
