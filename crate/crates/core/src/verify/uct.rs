//! Universal coefficient bookkeeping, classical and motivic.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::bidegree::Bidegree;
use crate::context::Context;
use crate::error::Result;
use crate::linalg::{f2_row_reduce, AbelianGroupStructure, BitMatrix};
use crate::maps::catalog::{BETA_TILDE_C, BOCKSTEIN_M, MU_C, MU_M};
use crate::presentations::catalog::{CLASSICAL_Z, CLASSICAL_Z2, CLASSICAL_Z_MOD2, MOTIVIC_Z, MOTIVIC_Z2};
use crate::presentations::GradedPiece;
use crate::verify::report::{CheckBox, CheckReport, ReportBuilder};
use crate::verify::util::{basis_at, column, order_two_indices, select_rows, tensor_indices, witnesses};

/// Source monomials in the support of the kernel of `m` (columns indexed by `cols`).
fn kernel_support<'a>(piece: &'a GradedPiece, m: &BitMatrix, cols: &[usize]) -> Vec<&'a crate::Monomial> {
    let red = f2_row_reduce(m);
    let mut out = Vec::new();
    for v in &red.kernel {
        out.extend(basis_at(piece, v.ones().map(|j| cols[j])));
    }
    out
}

/// `0 → H^m(Z)⊗Z/2 → H^m(Z/2) → ₂H^{m+1}(Z) → 0` via `μ_C` and `β̃_C`.
pub fn check_uct_classical(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("uct-classical", bounds);
    let z = ctx.ring(CLASSICAL_Z)?;
    let z2 = ctx.ring(CLASSICAL_Z2)?;
    for m in 0..=bounds.m_max {
        let d = Bidegree::single(m);
        let hz = ctx.piece(CLASSICAL_Z, d)?;
        let hz1 = ctx.piece(CLASSICAL_Z, Bidegree::single(m + 1))?;
        let h2 = ctx.piece(CLASSICAL_Z2, d)?;
        let cols = tensor_indices(&hz);
        let mu = ctx.map_matrix(MU_C, d)?.select_columns(&cols).mod2();
        let rank_mu = mu.rank();
        if rank_mu < cols.len() {
            rb.add(
                d,
                format!("μ_C injective (rank {})", cols.len()),
                format!("rank {rank_mu}"),
                witnesses(z, kernel_support(&hz, &mu, &cols)),
            );
        }
        let reduced = ctx.piece(CLASSICAL_Z_MOD2, d)?;
        if reduced.dim() != cols.len() {
            rb.add(
                d,
                format!("dim H⊗Z/2 = {}", cols.len()),
                format!("{} has dim {}", CLASSICAL_Z_MOD2, reduced.dim()),
                witnesses(z, hz.basis_monomials()),
            );
        }

        let bt = ctx.map_matrix(BETA_TILDE_C, d)?;
        let full = bt.mod2();
        for i in hz1.free_indices() {
            if !bt.matrix.row(i).iter().all(num_traits::Zero::is_zero) {
                rb.add(
                    d,
                    "β̃_C lands in torsion",
                    format!("free coordinate on {}", z.render_monomial(&hz1.basis()[i].monomial)),
                    witnesses(z2, h2.basis_monomials()),
                );
            }
        }
        let two = order_two_indices(&hz1);
        let b = select_rows(&full, &two);
        let rank_b = b.rank();
        let composite_nonzero: Vec<usize> =
            (0..mu.cols()).filter(|&j| !b.apply(&column(&mu, j)).is_zero()).collect();
        if rank_mu + rank_b != h2.dim() || !composite_nonzero.is_empty() {
            rb.add(
                d,
                format!("image μ_C = ker β̃_C (dim {})", h2.dim() - rank_b.min(h2.dim())),
                format!("rank μ_C = {rank_mu}, β̃_C∘μ_C nonzero on {} columns", composite_nonzero.len()),
                witnesses(z, basis_at(&hz, composite_nonzero.iter().map(|&j| cols[j]))),
            );
        }
        if rank_b != two.len() {
            rb.add(
                Bidegree::single(m + 1),
                format!("β̃_C onto ₂H^{} (dim {})", m + 1, two.len()),
                format!("rank {rank_b}"),
                witnesses(z, basis_at(&hz1, two.iter().copied())),
            );
        }
    }
    Ok(rb.finish())
}

/// `μ_M` injective on `H^{p,q}(Z)⊗Z/2` and
/// `dim H^{p,q}(Z/2) = (r + s)(p, q) + s(p+1, q)`.
pub fn check_uct_motivic(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("uct-motivic", bounds);
    let z = ctx.ring(MOTIVIC_Z)?;
    let z2 = ctx.ring(MOTIVIC_Z2)?;
    for d in bounds.bidegrees() {
        let hz = ctx.piece(MOTIVIC_Z, d)?;
        let hz1 = ctx.piece(MOTIVIC_Z, Bidegree::new(d.p + 1, d.q))?;
        let h2 = ctx.piece(MOTIVIC_Z2, d)?;
        let cols = tensor_indices(&hz);
        let mu = ctx.map_matrix(MU_M, d)?.select_columns(&cols).mod2();
        let rank = mu.rank();
        if rank < cols.len() {
            rb.add(
                d,
                format!("μ_M injective (rank {})", cols.len()),
                format!("rank {rank}"),
                witnesses(z, kernel_support(&hz, &mu, &cols)),
            );
        }
        let s1 = order_two_indices(&hz1).len();
        let expected = cols.len() + s1;
        if h2.dim() != expected {
            rb.add(
                d,
                format!("dim H(Z/2) = {} + {} = {expected}", cols.len(), s1),
                format!("dim {}", h2.dim()),
                witnesses(z2, h2.basis_monomials()),
            );
        }
    }
    Ok(rb.finish())
}

fn bockstein_rank(ctx: &Context, d: Bidegree) -> Result<usize> {
    if d.p < 0 {
        return Ok(0);
    }
    Ok(ctx.map_matrix(BOCKSTEIN_M, d)?.rank_mod2())
}

/// The groups forced by the mod 2 ring: `s(p,q) = rank β(p−1,q)` and
/// `r(p,q) = dim(p,q) − rank β(p,q) − s(p,q)`.
pub fn forced_structure(ctx: &Context, d: Bidegree) -> Result<AbelianGroupStructure> {
    let dim = ctx.piece(MOTIVIC_Z2, d)?.dim();
    let s = bockstein_rank(ctx, Bidegree::new(d.p - 1, d.q))?;
    let here = bockstein_rank(ctx, d)?;
    Ok(AbelianGroupStructure::two_torsion(dim - here - s, s))
}

/// Report-only comparison of the presented integral ring with the groups the
/// mod 2 ring forces.
pub fn check_presentation_vs_uct(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("presentation-vs-uct", bounds).report_only();
    let z = ctx.ring(MOTIVIC_Z)?;
    for d in bounds.bidegrees() {
        let forced = forced_structure(ctx, d)?;
        let hz = ctx.piece(MOTIVIC_Z, d)?;
        if hz.group() != &forced {
            let cols = tensor_indices(&hz);
            let mu = ctx.map_matrix(MU_M, d)?.select_columns(&cols).mod2();
            let mut w = kernel_support(&hz, &mu, &cols);
            if w.is_empty() {
                w = hz.basis_monomials().collect();
            }
            rb.add(d, forced.to_string(), hz.group().to_string(), witnesses(z, w));
        }
    }
    Ok(rb.finish())
}
