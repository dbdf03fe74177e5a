//! Commuting squares between the four rings, the kernel of `t2`, and the
//! exhaustive square-root search.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::bidegree::Bidegree;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::linalg::{f2_row_reduce, BitMatrix, BitVec};
use crate::maps::catalog::{MU_C, MU_M, T, T2};
use crate::monomial::{Element, Monomial};
use crate::presentations::catalog::{CLASSICAL_Z, CLASSICAL_Z2, MOTIVIC_Z, MOTIVIC_Z2};
use crate::verify::report::{CheckBox, CheckReport, ReportBuilder};
use crate::verify::util::{basis_at, column, from_columns, select_rows, tensor_indices, witnesses};

/// `t2∘μ_M = μ_C∘t` on every basis element, and `ker(t⊗Z/2) = ker(t2∘μ_M)`
/// as a rank identity.
pub fn check_squares(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("squares", bounds);
    let z = ctx.ring(MOTIVIC_Z)?;
    let c2 = ctx.ring(CLASSICAL_Z2)?;
    for d in bounds.bidegrees() {
        let hz = ctx.piece(MOTIVIC_Z, d)?;
        if hz.dim() == 0 {
            continue;
        }
        let cd = Bidegree::single(d.p);
        let target = ctx.piece(CLASSICAL_Z2, cd)?;
        for b in hz.basis() {
            let x = z.monomial_element(b.monomial.clone());
            let right = ctx.apply(T2, &ctx.apply(MU_M, &x)?)?;
            let down = ctx.apply(MU_C, &ctx.apply(T, &x)?)?;
            if !target.is_zero(&right.sub(&down))? {
                rb.add(
                    d,
                    format!("μ_C(t(x)) = {}", c2.render_element(&down)),
                    format!("t2(μ_M(x)) = {}", c2.render_element(&right)),
                    witnesses(z, [&b.monomial]),
                );
            }
        }

        let cols = tensor_indices(&hz);
        let hc = ctx.piece(CLASSICAL_Z, cd)?;
        let t1 = select_rows(&ctx.map_matrix(T, d)?.select_columns(&cols).mod2(), &tensor_indices(&hc));
        let mu = ctx.map_matrix(MU_M, d)?.select_columns(&cols).mod2();
        let t2 = ctx.map_matrix(T2, d)?.mod2();
        let t2mu: Vec<BitVec> = (0..mu.cols()).map(|j| t2.apply(&column(&mu, j))).collect();
        let t2mu = from_columns(t2.rows().len(), &t2mu);
        let stacked = BitMatrix::new(
            cols.len(),
            t1.rows().iter().chain(t2mu.rows()).cloned().collect(),
        );
        let (r1, r2, r12) = (t1.rank(), t2mu.rank(), stacked.rank());
        if r1 != r12 || r2 != r12 {
            let ker = f2_row_reduce(&t1).kernel;
            let bad: Vec<&Monomial> = ker
                .iter()
                .filter(|v| !t2mu.apply(v).is_zero())
                .flat_map(|v| basis_at(&hz, v.ones().map(|j| cols[j])))
                .collect();
            rb.add(
                d,
                format!("ker(t⊗Z/2) = ker(t2∘μ_M), rank {r12}"),
                format!("ranks {r1} and {r2}"),
                witnesses(z, if bad.is_empty() { hz.basis_monomials().collect() } else { bad }),
            );
        }
    }
    Ok(rb.finish())
}

/// The kernel of `t2` is spanned by the `y02` monomials.
pub fn check_ker_t2(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("ker-t2", bounds);
    let z2 = ctx.ring(MOTIVIC_Z2)?;
    let socle = z2.laurent().map(|l| l.socle).ok_or_else(|| {
        Error::InvalidCatalog(format!("{MOTIVIC_Z2} is not a Laurent model"))
    })?;
    for d in bounds.bidegrees() {
        let h2 = ctx.piece(MOTIVIC_Z2, d)?;
        if h2.dim() == 0 {
            continue;
        }
        let t2 = ctx.map_matrix(T2, d)?.mod2();
        let y: Vec<usize> =
            (0..h2.dim()).filter(|&i| h2.basis()[i].monomial.exponent(socle) == 1).collect();
        let outside: Vec<&Monomial> =
            basis_at(&h2, y.iter().copied().filter(|&i| !column(&t2, i).is_zero()));
        let kernel_dim = h2.dim() - t2.rank();
        if !outside.is_empty() || kernel_dim != y.len() {
            let extra: Vec<&Monomial> = f2_row_reduce(&t2)
                .kernel
                .iter()
                .filter(|v| v.ones().any(|i| !y.contains(&i)))
                .flat_map(|v| basis_at(&h2, v.ones()))
                .collect();
            rb.add(
                d,
                format!("ker t2 = y-part (dim {})", y.len()),
                format!("dim {kernel_dim}"),
                witnesses(z2, outside.into_iter().chain(extra)),
            );
        }
    }
    Ok(rb.finish())
}

/// Default exhaustion cap for [`check_no_square_root`].
pub const SQUARE_ROOT_CAP: usize = 20;

/// Searches all `2^dim` elements `x` of the mod 2 motivic piece at `search`
/// for `x² = target`. Squares are expanded bilinearly from the products of
/// basis elements, so every element is covered exactly.
pub fn check_no_square_root(
    ctx: &Context,
    target: &Element,
    search: Bidegree,
    cap: usize,
) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("no-square-root", CheckBox::new(search.p, search.q, 0));
    square_root_search(ctx, &mut rb, target, search, cap)?;
    Ok(rb.finish())
}

pub(crate) fn square_root_search(
    ctx: &Context,
    rb: &mut ReportBuilder,
    target: &Element,
    search: Bidegree,
    cap: usize,
) -> Result<()> {
    let z2 = ctx.ring(MOTIVIC_Z2)?;
    let piece = ctx.piece(MOTIVIC_Z2, search)?;
    let n = piece.dim();
    if n > cap {
        return Err(Error::CapExceeded { dim: n, cap });
    }
    let sq_deg = search * 2;
    let tp = ctx.piece(MOTIVIC_Z2, sq_deg)?;
    if let Some(d) = z2.element_degree(target)? {
        if d != sq_deg {
            return Err(Error::BadDegree { ring: z2.name().into(), deg: d });
        }
    }
    let goal = tp.mod2_coordinates(target)?;
    let basis: Vec<Element> = piece.basis_monomials().map(|m| z2.monomial_element(m.clone())).collect();
    // (Σ x_i b_i)² = Σ x_i b_i² + Σ_{i<j} 2 x_i x_j b_i b_j; the cross terms
    // are computed and reduced like the rest.
    let squares: Vec<BitVec> =
        basis.iter().map(|b| tp.mod2_coordinates(&z2.mul(b, b))).collect::<Result<_>>()?;
    let mut cross: Vec<Vec<BitVec>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let prod = if j > i {
                z2.mul(&basis[i], &basis[j]).scale(&BigInt::from(2))
            } else {
                z2.zero()
            };
            row.push(tp.mod2_coordinates(&prod)?);
        }
        cross.push(row);
    }
    let mut best: Option<Vec<&Monomial>> = None;
    for mask in 0u64..(1u64 << n) {
        let mut acc = BitVec::zeros(tp.dim());
        for i in (0..n).filter(|i| mask >> i & 1 == 1) {
            acc.xor_assign(&squares[i]);
            for j in (i + 1..n).filter(|j| mask >> j & 1 == 1) {
                acc.xor_assign(&cross[i][j]);
            }
        }
        if acc == goal {
            let mut support = basis_at(&piece, (0..n).filter(|i| mask >> i & 1 == 1));
            support.sort();
            if best.as_ref().is_none_or(|b| support < *b) {
                best = Some(support);
            }
        }
    }
    if let Some(root) = best {
        let root_el = root.iter().fold(z2.zero(), |acc, m| acc.add(&z2.monomial_element((*m).clone())));
        rb.add(
            search,
            format!("no x with x² = {}", z2.render_element(target)),
            format!("x = {}", if root_el.is_zero() { "0".into() } else { z2.render_element(&root_el) }),
            if root.is_empty() { alloc::vec!["0".into()] } else { witnesses(z2, root) },
        );
    }
    Ok(())
}

/// Instances `μ(d2)^{2a}·μ(d4)^{2b+1}` with square roots sought at
/// `(4a + 8b + 4, 2a + 4b + 2)`.
pub fn square_root_instances(ctx: &Context) -> Result<Vec<(Element, Bidegree)>> {
    let z = ctx.ring(MOTIVIC_Z)?;
    let mut out = Vec::new();
    for (a, b) in [(0u32, 0u32), (1, 0), (0, 1)] {
        let lift = z.mul(
            &z.pow(&z.parse("d2")?, 2 * a),
            &z.pow(&z.parse("d4")?, 2 * b + 1),
        );
        let target = ctx.apply(MU_M, &lift)?;
        out.push((target, Bidegree::new(i64::from(4 * a + 8 * b + 4), i64::from(2 * a + 4 * b + 2))));
    }
    Ok(out)
}

pub fn check_no_square_root_suite(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("no-square-root", bounds);
    for (target, search) in square_root_instances(ctx)? {
        square_root_search(ctx, &mut rb, &target, search, SQUARE_ROOT_CAP)?;
    }
    Ok(rb.finish())
}
