//! Acceptance gate: one test per criterion. Every test prints a single
//! `PASS`/`FAIL` line with the pinned tolerance before asserting.
//!
//! All tolerances are exact (group structures, dimensions and ranks are
//! integers). Runtime limits are generous multiples of the release timings
//! so that debug builds stay within them.

use std::time::{Duration, Instant};

use mrv_core::context::Catalog;
use mrv_core::presentations::catalog::{CHOW, CLASSICAL_Z, CLASSICAL_Z2, MOTIVIC_Z, MOTIVIC_Z2};
use mrv_core::presentations::polynomial_hilbert_series;
use mrv_core::verify::*;
use mrv_core::{Bidegree, Context};

fn report(id: &str, what: &str, tolerance: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("[acceptance {id}] {verdict} {what} (tolerance: {tolerance}) {detail}");
}

fn gate(id: &str, what: &str, tolerance: &str, ok: bool, detail: String) {
    report(id, what, tolerance, ok, &detail);
    assert!(ok, "criterion {id} failed: {detail}");
}

fn summary(r: &CheckReport) -> String {
    let shown: Vec<String> = r
        .findings
        .iter()
        .take(8)
        .map(|f| format!("({},{}) {} vs {} {:?}", f.bidegree[0], f.bidegree[1], f.expected, f.computed, f.witness))
        .collect();
    format!("{}: {} finding(s) {}", r.check, r.findings.len(), shown.join("; "))
}

fn within(start: Instant, limit: Duration) -> (bool, String) {
    let t = start.elapsed();
    (t <= limit, format!("[{:.3}s <= {}s]", t.as_secs_f64(), limit.as_secs()))
}

fn dim(ctx: &Context, ring: &str, p: i64, q: i64) -> usize {
    ctx.piece(ring, Bidegree::new(p, q)).unwrap().dim()
}

#[test]
fn criterion_01_mod2_motivic_dimensions() {
    let ctx = Context::bundled();
    let start = Instant::now();
    let mut got = vec![(4, 2, dim(&ctx, MOTIVIC_Z2, 4, 2), 2), (8, 4, dim(&ctx, MOTIVIC_Z2, 8, 4), 3)];
    got.extend((5..=12).map(|q| (8, q, dim(&ctx, MOTIVIC_Z2, 8, q), 4)));
    let (fast, t) = within(start, Duration::from_secs(1));
    let ok = got.iter().all(|&(_, _, d, want)| d == want) && fast;
    gate("1", "dim H^{4,2}=2, H^{8,4}=3, H^{8,q}=4 for 5<=q<=12", "exact; < 1 s", ok, format!("{got:?} {t}"));
}

#[test]
fn criterion_02_classical_rows() {
    let ctx = Context::bundled();
    let start = Instant::now();
    let dims: Vec<usize> = (0..=6).map(|m| dim(&ctx, CLASSICAL_Z2, m, 0)).collect();
    let z = ctx.ring(CLASSICAL_Z).unwrap();
    let torsion = |n: i64| -> Vec<String> {
        let piece = ctx.piece(CLASSICAL_Z, Bidegree::single(n)).unwrap();
        piece
            .basis()
            .iter()
            .filter(|b| b.order.as_ref().is_some_and(|o| *o == 2.into()))
            .map(|b| z.render_monomial(&b.monomial))
            .collect()
    };
    let targets: Vec<(i64, Vec<String>)> = (0..=6).map(|m| (m, torsion(m + 1))).filter(|(_, t)| !t.is_empty()).collect();
    let want: Vec<(i64, Vec<String>)> = vec![
        (2, vec!["bw2".into()]),
        (5, vec!["bw2^2".into()]),
        (6, vec!["bw2·p1".into(), "bw2·sqrt_p2".into()]),
    ];
    let (fast, t) = within(start, Duration::from_secs(1));
    let ok = dims == [1, 0, 1, 1, 2, 1, 3] && targets == want && fast;
    gate("2", "classical UCT rows m=0..6", "exact; < 1 s", ok, format!("dims {dims:?}, torsion targets {targets:?} {t}"));
}

#[test]
fn criterion_03a_uct_classical() {
    let ctx = Context::bundled();
    let start = Instant::now();
    let r = check_uct_classical(&ctx, CheckBox::new(0, 0, 24)).unwrap();
    let (fast, t) = within(start, Duration::from_secs(60));
    gate("3a", "check_uct_classical for m <= 24", "exact; < 60 s", r.passed() && fast, format!("{} {t}", summary(&r)));
}

/// Expected to fail: see the decisions ledger. The bundled presentations
/// carry no integral classes for the τ-towers at (0,q), the w4/τ towers at
/// (4,q>=3) and (8,q>=5), and μ_M is not injective from (9,7) on.
#[test]
fn criterion_03b_uct_motivic() {
    let ctx = Context::bundled();
    let start = Instant::now();
    let r = check_uct_motivic(&ctx, CheckBox::new(20, 12, 0)).unwrap();
    let (fast, t) = within(start, Duration::from_secs(60));
    gate("3b", "check_uct_motivic for p <= 20, q <= 12", "exact; < 60 s", r.passed() && fast, format!("{} {t}", summary(&r)));
}

#[test]
fn criterion_04_hilbert_series() {
    let ctx = Context::bundled();
    let start = Instant::now();
    let series = polynomial_hilbert_series(&[2, 3, 4], 40);
    let dims: Vec<u64> = (0..=40).map(|n| dim(&ctx, CLASSICAL_Z2, n, 0) as u64).collect();
    let r = check_hilbert_series(&ctx, CheckBox::new(0, 0, 40)).unwrap();
    let (fast, t) = within(start, Duration::from_secs(1));
    let ok = dims == series && r.passed() && fast;
    gate("4", "Z/2[w2,w3,w4] against 1/((1-t^2)(1-t^3)(1-t^4)) to degree 40", "exact; < 1 s", ok, format!("{} {t}", summary(&r)));
}

#[test]
fn criterion_05_torsion_pattern() {
    let ctx = Context::bundled();
    let r = check_torsion_pattern(&ctx, CheckBox::new(0, 0, 39)).unwrap();
    gate("5", "2-torsion of H^{m+1}(Z) nonzero iff m+1 in {3,6,7} or >= 9, to m+1 = 40", "exact", r.passed(), summary(&r));
}

#[test]
fn criterion_06_no_square_root() {
    let ctx = Context::bundled();
    let start = Instant::now();
    let target = ctx.apply("mu_m", &ctx.parse(MOTIVIC_Z, "d4").unwrap()).unwrap();
    let base = check_no_square_root(&ctx, &target, Bidegree::new(4, 2), SQUARE_ROOT_CAP).unwrap();
    let general = check_no_square_root_suite(&ctx, CheckBox::DEFAULT).unwrap();
    let (fast, t) = within(start, Duration::from_secs(1));
    let ok = base.passed() && general.passed() && fast;
    gate(
        "6",
        "no x in H^{4,2}(Z/2) with x^2 = μ(d4); generalized instances μ(d2)^2μ(d4), μ(d4)^3",
        "exact, exhaustive over 2^dim; < 1 s",
        ok,
        format!("{}; {} {t}", summary(&base), summary(&general)),
    );
}

#[test]
fn criterion_07_nine_families() {
    let ctx = Context::bundled();
    let start = Instant::now();
    let lifts = check_lift_roundtrip(&ctx, CheckBox::new(0, 0, 24)).unwrap();
    let no_lift = check_no_lift_family9(&ctx, CheckBox::new(16, 12, 0)).unwrap();
    let (fast, t) = within(start, Duration::from_secs(60));
    let ok = lifts.passed() && no_lift.passed() && fast;
    gate(
        "7",
        "t(lift) = input for families 1-8 to degree 24; family 9 unliftable to degree 16, q <= 12",
        "exact; < 60 s",
        ok,
        format!("{}; {} {t}", summary(&lifts), summary(&no_lift)),
    );
}

#[test]
fn criterion_08_ker_t2() {
    let ctx = Context::bundled();
    let r = check_ker_t2(&ctx, CheckBox::new(20, 12, 0)).unwrap();
    gate("8", "ker(t2) = y-part span for p <= 20, q <= 12", "exact", r.passed(), summary(&r));
}

#[test]
fn criterion_09_chow_slice() {
    let ctx = Context::bundled();
    let r = check_chow_slice(&ctx, CheckBox::new(16, 8, 0)).unwrap();
    let ch4 = ctx.piece(CHOW, Bidegree::new(8, 4)).unwrap();
    let relation = ctx.parse(CHOW, "y2^2 - 4·d4").unwrap();
    let rel_zero = ctx.is_zero(CHOW, &relation).unwrap();
    let ok = r.passed() && ch4.group().to_string() == "Z^3" && rel_zero;
    gate(
        "9",
        "H^{2n,n}(Z) = CH^n for n <= 8; CH^4 = Z^3 with y2^2 = 4d4",
        "exact",
        ok,
        format!("{}; CH^4 = {}; y2^2 - 4d4 = 0: {rel_zero}", summary(&r), ch4.group()),
    );
}

#[test]
fn criterion_10_two_torsion() {
    let ctx = Context::bundled();
    let r = check_two_torsion(&ctx, CheckBox::DEFAULT).unwrap();
    gate("10", "every torsion coefficient equals 2", "exact", r.passed(), summary(&r));
}

/// Expected to fail: the p <= 12 discrepancies are the same missing towers
/// as in 3b. Findings at p >= 13 are printed verbatim.
#[test]
fn criterion_11_presentation_vs_uct() {
    let ctx = Context::bundled();
    let first = check_presentation_vs_uct(&ctx, CheckBox::DEFAULT).unwrap();
    let second = check_presentation_vs_uct(&Context::bundled(), CheckBox::DEFAULT).unwrap();
    let deterministic = first == second && first.is_report_only();
    let low: Vec<&Finding> = first.findings.iter().filter(|f| f.bidegree[0] <= 12).collect();
    for f in first.findings.iter().filter(|f| f.bidegree[0] >= 13) {
        println!(
            "    ({},{}) forced {} presented {} {:?}",
            f.bidegree[0], f.bidegree[1], f.expected, f.computed, f.witness
        );
    }
    let low_text: Vec<String> =
        low.iter().map(|f| format!("({},{}) {} vs {}", f.bidegree[0], f.bidegree[1], f.expected, f.computed)).collect();
    gate(
        "11",
        "deterministic report over p <= 20, q <= 12 with no discrepancy at p <= 12",
        "exact",
        deterministic && low.is_empty(),
        format!("deterministic: {deterministic}; {} finding(s) at p <= 12: {}", low.len(), low_text.join("; ")),
    );
}

#[test]
fn criterion_12_mutation_sensitivity() {
    let mut catalog = Catalog::bundled();
    let removed = catalog.ring_mut(CHOW).unwrap().remove_relation("2d3");
    let ctx = Context::new(catalog).unwrap();
    let slice = check_chow_slice(&ctx, CheckBox::DEFAULT).unwrap();
    let classical = check_uct_classical(&ctx, CheckBox::DEFAULT).unwrap();
    let caught = [&slice, &classical]
        .iter()
        .flat_map(|r| r.findings.iter())
        .any(|f| f.bidegree[0] == 6 && f.witness.iter().any(|w| w == "d3"));
    let ok = removed == 1 && !slice.passed() && caught;
    gate("12", "removing 2d3 from the Chow data is caught at degree 6", "exact", ok, summary(&slice));
}
