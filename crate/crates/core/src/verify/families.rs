//! The nine families of classical monomials and their motivic lifts.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::bidegree::Bidegree;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::linalg::EchelonLattice;
use crate::maps::catalog::{MU_M, T};
use crate::monomial::Element;
use crate::presentations::catalog::{CLASSICAL_Z, MOTIVIC_Z, MOTIVIC_Z2};
use crate::verify::report::{CheckBox, CheckReport, ReportBuilder};

/// Classification of `λ·p1^k·sqrt_p2^j·bw2^l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyClassification {
    /// Normalized coefficient: `1` whenever `l > 0`.
    pub lambda: i64,
    pub k: u32,
    pub j: u32,
    pub l: u32,
    pub family: u8,
    /// Rendered normal form of the lift, if any.
    pub lift: Option<String>,
    /// The `τ`-parameter chosen for torsion lifts (always the minimal one, 0).
    pub weight_parameter: Option<u32>,
    #[serde(skip)]
    pub lift_element: Option<Element>,
}

fn product(factors: &[(&str, u32)]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(g, e)| if *e == 1 { String::from(*g) } else { format!("{g}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("·")
    }
}

pub fn classify_family(ctx: &Context, lambda: i64, k: u32, j: u32, l: u32) -> Result<FamilyClassification> {
    if lambda == 0 || (l > 0 && lambda.is_even()) {
        return Err(Error::ZeroElement);
    }
    let lambda = if l > 0 { 1 } else { lambda };
    let (family, text, coefficient): (u8, Option<String>, i64) = if l > 0 {
        let (fam, f) = match (j, l.is_odd()) {
            (0, true) => (1, product(&[("d2", k), ("d3", (l - 1) / 2), ("A(0)", 1)])),
            (0, false) => (2, product(&[("d2", k), ("d3", l / 2)])),
            (j, true) if j.is_odd() => {
                (3, product(&[("d2", k), ("d3", (l - 1) / 2), ("d4", (j - 1) / 2), ("B(0)", 1)]))
            }
            (j, false) if j.is_odd() => (
                4,
                product(&[("d2", k), ("d3", (l - 2) / 2), ("d4", (j - 1) / 2), ("A(0)", 1), ("B(0)", 1)]),
            ),
            (j, true) => (5, product(&[("d2", k), ("d3", (l - 1) / 2), ("d4", j / 2), ("A(0)", 1)])),
            (j, false) => (6, product(&[("d2", k), ("d3", l / 2), ("d4", j / 2)])),
        };
        (fam, Some(f), 1)
    } else if j.is_even() {
        // (−d2)^k carries the sign of t(d2) = −p1.
        let sign = if k.is_odd() { -1 } else { 1 };
        (7, Some(product(&[("d2", k), ("d4", j / 2)])), sign * lambda)
    } else if lambda.is_even() {
        let sign = if k.is_odd() { -1 } else { 1 };
        (8, Some(product(&[("y2", 1), ("d2", k), ("d4", (j - 1) / 2)])), sign * lambda / 2)
    } else {
        (9, None, 0)
    };
    let z = ctx.ring(MOTIVIC_Z)?;
    let lift_element = match &text {
        Some(t) => Some(ctx.normal_form(MOTIVIC_Z, &z.parse(t)?.scale(&BigInt::from(coefficient)))?),
        None => None,
    };
    Ok(FamilyClassification {
        lambda,
        k,
        j,
        l,
        family,
        lift: lift_element.as_ref().map(|e| z.render_element(e)),
        weight_parameter: (family <= 6).then_some(0),
        lift_element,
    })
}

fn classical_element(ctx: &Context, lambda: i64, k: u32, j: u32, l: u32) -> Result<Element> {
    let c = ctx.ring(CLASSICAL_Z)?;
    Ok(c.parse(&product(&[("p1", k), ("sqrt_p2", j), ("bw2", l)]))?.scale(&BigInt::from(lambda)))
}

fn exponents(ctx: &Context, m: &crate::Monomial) -> Result<(u32, u32, u32)> {
    let c = ctx.ring(CLASSICAL_Z)?;
    let e = |n: &str| -> Result<u32> { Ok(m.exponent(c.key(n, None)?) as u32) };
    Ok((e("p1")?, e("sqrt_p2")?, e("bw2")?))
}

/// `t(lift) = input` for every classical monomial of degree `<= m_max` in
/// families 1–8, and `μ_M(lift)` is a valid mod 2 class.
pub fn check_lift_roundtrip(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("lift-roundtrip", bounds);
    let c = ctx.ring(CLASSICAL_Z)?;
    for m in 0..=bounds.m_max {
        let d = Bidegree::single(m);
        for mono in c.enumerate_monomials(d)? {
            let (k, j, l) = exponents(ctx, &mono)?;
            let mut lambdas = alloc::vec![if l == 0 && j.is_odd() { 2 } else { 1 }];
            if l == 0 && j.is_even() {
                lambdas.push(-3);
            }
            for lambda in lambdas {
                let fc = classify_family(ctx, lambda, k, j, l)?;
                let input = classical_element(ctx, lambda, k, j, l)?;
                let Some(lift) = &fc.lift_element else {
                    rb.add(d, "a lift", format!("family {}", fc.family), alloc::vec![c.render_monomial(&mono)]);
                    continue;
                };
                let image = ctx.apply(T, lift)?;
                if !ctx.is_zero(CLASSICAL_Z, &image.sub(&input))? {
                    rb.add(
                        d,
                        format!("t(lift) = {}", c.render_element(&input)),
                        format!("t({}) = {}", fc.lift.clone().unwrap_or_default(), c.render_element(&image)),
                        alloc::vec![c.render_monomial(&mono)],
                    );
                }
                let reduced = ctx.apply(MU_M, lift)?;
                if let Err(e) = ctx.is_zero(MOTIVIC_Z2, &reduced) {
                    rb.add(
                        d,
                        "μ_M(lift) in the mod 2 ring",
                        format!("{e}"),
                        alloc::vec![c.render_monomial(&mono)],
                    );
                }
            }
        }
    }
    Ok(rb.finish())
}

/// Order of `target` modulo the image of `t` in `H^p(Z)`, from bidegree
/// `(p, q)`; `None` means infinite order.
pub fn order_modulo_realization(ctx: &Context, target: &Element, d: Bidegree) -> Result<Option<BigInt>> {
    let hc = ctx.piece(CLASSICAL_Z, Bidegree::single(d.p))?;
    let n = hc.dim();
    let tm = ctx.map_matrix(T, d)?;
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for (i, b) in hc.basis().iter().enumerate() {
        if let Some(o) = &b.order {
            let mut v = alloc::vec![BigInt::from(0); n];
            v[i] = o.clone();
            gens.push(v);
        }
    }
    for jj in 0..tm.matrix.cols() {
        gens.push(tm.matrix.column(jj));
    }
    let lattice = EchelonLattice::new(n, gens);
    Ok(lattice.order_of(&hc.coordinates(target)?))
}

/// Family 9 (`odd·p1^k·sqrt_p2^(odd)`) has no lift: at every `(p, q)` with
/// `p <= p_max`, `q <= q_max`, no odd multiple lies in the image of `t`.
pub fn check_no_lift_family9(ctx: &Context, bounds: CheckBox) -> Result<CheckReport> {
    let mut rb = ReportBuilder::new("no-lift-family9", bounds);
    let c = ctx.ring(CLASSICAL_Z)?;
    for p in 0..=bounds.p_max {
        for mono in c.enumerate_monomials(Bidegree::single(p))? {
            let (_, j, l) = exponents(ctx, &mono)?;
            if l > 0 || j.is_even() {
                continue;
            }
            let target = c.monomial_element(mono.clone());
            for q in 0..=bounds.q_max {
                let d = Bidegree::new(p, q);
                if let Some(order) = order_modulo_realization(ctx, &target, d)? {
                    if order.is_odd() {
                        rb.add(
                            d,
                            "no odd multiple in the image of t",
                            format!("order {order} modulo the image"),
                            alloc::vec![c.render_monomial(&mono)],
                        );
                    }
                }
            }
        }
    }
    Ok(rb.finish())
}
