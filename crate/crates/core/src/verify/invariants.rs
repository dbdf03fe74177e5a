//! Structural invariants: Chow slice, torsion, Bockstein identities,
//! relation images and the definitions of the torsion families.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::bidegree::Bidegree;
use crate::context::Context;
use crate::error::Result;
use crate::maps::catalog::{BETA_TILDE_C, BOCKSTEIN_C, BOCKSTEIN_M, CYCLE, MU_C, MU_M, T};
use crate::monomial::Monomial;
use crate::presentations::catalog::{CHOW, CLASSICAL_Z, CLASSICAL_Z2, MOTIVIC_Z, MOTIVIC_Z2};
use crate::presentations::polynomial_hilbert_series;
use crate::verify::report::{CheckBox, CheckReport, ReportBuilder};
use crate::verify::util::{basis_at, column, compose, order_two_indices, witnesses};

/// `H^{2n,n}(Z) ≅ CH^n` for `2n <= p_max`, `n <= q_max`, with the cycle map
/// bijective mod 2.
pub fn check_chow_slice(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("chow-slice", bounds);
    let chow = ctx.ring(CHOW)?;
    let mut n = 0;
    while 2 * n <= bounds.p_max && n <= bounds.q_max {
        let d = Bidegree::new(2 * n, n);
        let ch = ctx.piece(CHOW, d)?;
        let hz = ctx.piece(MOTIVIC_Z, d)?;
        if ch.group() != hz.group() {
            rb.add(d, hz.group().to_string(), ch.group().to_string(), witnesses(chow, ch.basis_monomials()));
        } else {
            let rank = ctx.map_matrix(CYCLE, d)?.rank_mod2();
            let dim = hz.group().mod2_dimension();
            if rank != dim {
                rb.add(
                    d,
                    format!("cycle map bijective mod 2 (rank {dim})"),
                    format!("rank {rank}"),
                    witnesses(chow, ch.basis_monomials()),
                );
            }
        }
        n += 1;
    }
    Ok(rb.finish())
}

/// Every torsion coefficient of every computed piece is 2.
pub fn check_two_torsion(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("two-torsion", bounds);
    let mut degrees: Vec<(&str, Bidegree)> =
        (0..=bounds.m_max + 1).map(|m| (CLASSICAL_Z, Bidegree::single(m))).collect();
    for d in bounds.bidegrees() {
        degrees.push((CHOW, d));
        degrees.push((MOTIVIC_Z, d));
    }
    for (ring, d) in degrees {
        let piece = ctx.piece(ring, d)?;
        let bad: Vec<&Monomial> = piece
            .basis()
            .iter()
            .filter(|b| b.order.as_ref().is_some_and(|o| *o != 2.into()))
            .map(|b| &b.monomial)
            .collect();
        if !bad.is_empty() {
            rb.add(
                d,
                format!("{ring}: torsion 2 only"),
                piece.group().to_string(),
                witnesses(ctx.ring(ring)?, bad),
            );
        }
    }
    Ok(rb.finish())
}

/// Dimensions of `Z/2[w2, w3, w4]` against `1/((1−t²)(1−t³)(1−t⁴))` up to `m_max`.
pub fn check_hilbert_series(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("hilbert-series", bounds);
    let n_max = bounds.m_max.max(0) as usize;
    let series = polynomial_hilbert_series(&[2, 3, 4], n_max);
    for (n, want) in series.iter().enumerate() {
        let d = Bidegree::single(n as i64);
        let piece = ctx.piece(CLASSICAL_Z2, d)?;
        if piece.dim() as u64 != *want {
            rb.add(
                d,
                format!("dim {want}"),
                format!("dim {}", piece.dim()),
                witnesses(ctx.ring(CLASSICAL_Z2)?, piece.basis_monomials()),
            );
        }
    }
    Ok(rb.finish())
}

/// Whether `₂H^n(BSO(4); Z)` is predicted nonzero.
pub fn two_torsion_expected(n: i64) -> bool {
    matches!(n, 3 | 6 | 7) || n >= 9
}

/// `₂H^n(Z) ≠ 0` iff `n ∈ {3, 6, 7} ∪ [9, ∞)`, for `n <= m_max + 1`.
pub fn check_torsion_pattern(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("torsion-pattern", bounds);
    for n in 0..=bounds.m_max + 1 {
        let d = Bidegree::single(n);
        let piece = ctx.piece(CLASSICAL_Z, d)?;
        let s = order_two_indices(&piece).len();
        if (s > 0) != two_torsion_expected(n) {
            rb.add(
                d,
                if two_torsion_expected(n) { "₂H nonzero" } else { "₂H zero" },
                piece.group().to_string(),
                witnesses(ctx.ring(CLASSICAL_Z)?, piece.basis_monomials()),
            );
        }
    }
    Ok(rb.finish())
}

fn classical_and_motivic(bounds: CheckBox) -> Vec<(&'static str, &'static str, Bidegree)> {
    let mut out: Vec<_> =
        (0..=bounds.m_max).map(|m| (CLASSICAL_Z2, BOCKSTEIN_C, Bidegree::single(m))).collect();
    out.extend(bounds.bidegrees().map(|d| (MOTIVIC_Z2, BOCKSTEIN_M, d)));
    out
}

/// `β∘β = 0` on both mod 2 rings.
pub fn check_bockstein_square(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("bockstein-square", bounds);
    for (ring, beta, d) in classical_and_motivic(bounds) {
        let first = ctx.map_matrix(beta, d)?.mod2();
        let second = ctx.map_matrix(beta, ctx.target_degree(beta, d)?)?.mod2();
        let both = compose(&second, &first);
        let piece = ctx.piece(ring, d)?;
        let bad: Vec<&Monomial> =
            basis_at(&piece, (0..piece.dim()).filter(|&j| !column(&both, j).is_zero()));
        if !bad.is_empty() {
            rb.add(d, format!("{ring}: β∘β = 0"), "nonzero", witnesses(ctx.ring(ring)?, bad));
        }
    }
    Ok(rb.finish())
}

/// `β = μ_C∘β̃_C` on every basis monomial of the classical mod 2 ring.
pub fn check_bockstein_factorization(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("bockstein-factorization", bounds);
    let z2 = ctx.ring(CLASSICAL_Z2)?;
    for m in 0..=bounds.m_max {
        let d = Bidegree::single(m);
        let piece = ctx.piece(CLASSICAL_Z2, d)?;
        let target = ctx.piece(CLASSICAL_Z2, Bidegree::single(m + 1))?;
        for b in piece.basis() {
            let x = z2.monomial_element(b.monomial.clone());
            let beta = ctx.apply(BOCKSTEIN_C, &x)?;
            let via = ctx.apply(MU_C, &ctx.apply(BETA_TILDE_C, &x)?)?;
            if !target.is_zero(&beta.sub(&via))? {
                rb.add(
                    d,
                    format!("β(x) = {}", z2.render_element(&beta)),
                    format!("μ_C(β̃_C(x)) = {}", z2.render_element(&via)),
                    witnesses(z2, [&b.monomial]),
                );
            }
        }
    }
    Ok(rb.finish())
}

/// Bockstein images of members of the Laurent model are members.
pub fn check_bockstein_membership(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("bockstein-membership", bounds);
    let z2 = ctx.ring(MOTIVIC_Z2)?;
    for d in bounds.bidegrees() {
        let piece = ctx.piece(MOTIVIC_Z2, d)?;
        for b in piece.basis() {
            let image = ctx.apply(BOCKSTEIN_M, &z2.monomial_element(b.monomial.clone()))?;
            let outside: Vec<String> =
                image.monomials().filter(|m| !z2.is_member(m)).map(|m| z2.render_monomial(m)).collect();
            if !outside.is_empty() {
                rb.add(
                    d,
                    "β(x) in the Laurent model",
                    format!("outside: {}", outside.join(", ")),
                    witnesses(z2, [&b.monomial]),
                );
            }
        }
    }
    Ok(rb.finish())
}

/// Every relation instance maps to zero under every map out of its ring.
pub fn check_relation_images(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("relation-images", bounds);
    let plan: [(&str, &[&str]); 3] = [(CLASSICAL_Z, &[MU_C]), (CHOW, &[CYCLE]), (MOTIVIC_Z, &[T, MU_M])];
    for (ring_name, maps) in plan {
        let ring = ctx.ring(ring_name)?;
        let (bound, inside): (i64, &dyn Fn(Bidegree) -> bool) = if ring.is_bigraded() {
            (bounds.q_max, &|d: Bidegree| d.p <= bounds.p_max && d.q <= bounds.q_max)
        } else {
            (bounds.m_max, &|d: Bidegree| d.p <= bounds.m_max)
        };
        for inst in ring.relation_instances(bound.max(0) as u32)? {
            if !inside(inst.degree) {
                continue;
            }
            for &map in maps {
                let h = ctx.map(map)?;
                let image = ctx.apply(map, &inst.element)?;
                if !ctx.is_zero(h.target(), &image)? {
                    rb.add(
                        inst.degree,
                        format!("{map}({}) = 0", inst.label),
                        ctx.render(h.target(), &image)?,
                        witnesses(ring, inst.element.monomials()),
                    );
                }
            }
        }
    }
    Ok(rb.finish())
}

/// `β(τ^k·w2) = μ_M(A(k))` and `β(τ^(k−1)·w2·w4) = μ_M(B(k))`.
pub fn check_torsion_generators(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("torsion-generators", bounds);
    let z = ctx.ring(MOTIVIC_Z)?;
    let z2 = ctx.ring(MOTIVIC_Z2)?;
    let mut cases: Vec<(String, String)> = Vec::new();
    for k in 0..=bounds.q_max.max(0) {
        if 2 + k <= bounds.q_max && 3 <= bounds.p_max {
            cases.push((format!("A({k})"), format!("τ^{k}·w2")));
        }
        if 4 + k <= bounds.q_max && 7 <= bounds.p_max {
            cases.push((format!("B({k})"), format!("τ^{}·w2·w4", k - 1)));
        }
    }
    for (gen, pre) in cases {
        let g = z.parse(&gen)?;
        let d = z.element_degree(&g)?.unwrap_or_default();
        let reduced = ctx.apply(MU_M, &g)?;
        let beta = ctx.apply(BOCKSTEIN_M, &z2.parse(&pre)?)?;
        if !ctx.is_zero(MOTIVIC_Z2, &reduced.sub(&beta))? {
            rb.add(
                d,
                format!("β({pre}) = μ_M({gen})"),
                format!("{} vs {}", z2.render_element(&beta), z2.render_element(&reduced)),
                alloc::vec![gen.clone()],
            );
        }
    }
    Ok(rb.finish())
}

/// `μ_M` restricted to the torsion summand of each integral piece has full
/// rank over `Z/2`.
pub fn check_mu_torsion_injective(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("mu-torsion-injective", bounds);
    let z = ctx.ring(MOTIVIC_Z)?;
    for d in bounds.bidegrees() {
        let hz = ctx.piece(MOTIVIC_Z, d)?;
        let torsion = order_two_indices(&hz);
        if torsion.is_empty() {
            continue;
        }
        let mu = ctx.map_matrix(MU_M, d)?.select_columns(&torsion).mod2();
        let rank = mu.rank();
        if rank < torsion.len() {
            let kernel = crate::linalg::f2_row_reduce(&mu).kernel;
            let support: Vec<&Monomial> = kernel
                .iter()
                .flat_map(|v| basis_at(&hz, v.ones().map(|j| torsion[j])))
                .collect();
            rb.add(
                d,
                format!("rank {}", torsion.len()),
                format!("rank {rank}"),
                witnesses(z, support),
            );
        }
    }
    Ok(rb.finish())
}
