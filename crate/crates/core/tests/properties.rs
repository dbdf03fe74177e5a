use mrv_core::linalg::{smith_normal_form, IntegerMatrix};
use mrv_core::presentations::catalog::{CLASSICAL_Z, CLASSICAL_Z2, MOTIVIC_Z, MOTIVIC_Z2};
use mrv_core::presentations::deficit;
use mrv_core::{Context, Element};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-20i64..=20, cols), rows)
}

fn to_matrix(cols: usize, rows: &[Vec<i64>]) -> IntegerMatrix {
    IntegerMatrix::from_rows(cols, rows.iter().map(|r| r.iter().copied()))
}

fn classical_monomial() -> impl Strategy<Value = String> {
    (0u32..4, 0u32..4, 0u32..4).prop_map(|(a, b, c)| format!("p1^{a}·sqrt_p2^{b}·bw2^{c}"))
}

fn classical_z2_element() -> impl Strategy<Value = String> {
    prop::collection::vec((0u32..4, 0u32..3, 0u32..3), 1..4)
        .prop_map(|ts| ts.iter().map(|(a, b, c)| format!("w2^{a}·w3^{b}·w4^{c}")).collect::<Vec<_>>().join(" + "))
}

fn motivic_monomial() -> impl Strategy<Value = String> {
    (0u32..3, 0u32..2, 0u32..2, 0u32..2, prop::option::of(0u32..3), prop::option::of(0u32..3)).prop_map(
        |(d2, d3, d4, y2, a, b)| {
            let mut s = format!("d2^{d2}·d3^{d3}·d4^{d4}·y2^{y2}");
            if let Some(k) = a {
                s += &format!("·A({k})");
            }
            if let Some(k) = b {
                s += &format!("·B({k})");
            }
            s
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_diagonal_divides_and_transforms_are_exact(rows in matrix(3, 4)) {
        let m = to_matrix(4, &rows);
        let s = smith_normal_form(&m);
        let nz: Vec<&BigInt> = s.nonzero().collect();
        for w in nz.windows(2) {
            prop_assert!((w[1] % w[0]).is_zero());
        }
        prop_assert!(nz.iter().all(|d| d.is_positive()));
        let d = s.left.mul(&m).mul(&s.right);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j { s.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(&d[(i, j)], &want);
            }
        }
        prop_assert_eq!(s.left.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(s.right.determinant().abs(), BigInt::from(1));
    }

    #[test]
    fn smith_product_is_the_determinant(rows in matrix(3, 3)) {
        let m = to_matrix(3, &rows);
        let s = smith_normal_form(&m);
        let product = s.diagonal.iter().fold(BigInt::from(1), |a, d| a * d);
        prop_assert_eq!(product, m.determinant().abs());
    }

    #[test]
    fn deficit_is_superadditive(
        (a, b, c, x, y, z) in (0u32..=10, 0u32..=10, 0u32..=10)
            .prop_filter("total at most 10", |(a, b, c)| a + b + c <= 10)
            .prop_flat_map(|(a, b, c)| (Just(a), Just(b), Just(c), 0..=a, 0..=b, 0..=c))
            .prop_map(|(a, b, c, x, y, z)| (a - x, b - y, c - z, x, y, z))
    ) {
        prop_assert!(deficit(a + x, b + y, c + z) >= deficit(a, b, c) + deficit(x, y, z));
    }

    #[test]
    fn classical_products_commute_and_associate(x in classical_monomial(), y in classical_monomial(), z in classical_monomial()) {
        let ctx = Context::bundled();
        let r = ctx.ring(CLASSICAL_Z).unwrap();
        let (x, y, z) = (r.parse(&x).unwrap(), r.parse(&y).unwrap(), r.parse(&z).unwrap());
        prop_assert_eq!(r.mul(&x, &y), r.mul(&y, &x));
        prop_assert_eq!(r.mul(&r.mul(&x, &y), &z), r.mul(&x, &r.mul(&y, &z)));
    }

    #[test]
    fn realization_is_multiplicative(x in motivic_monomial(), y in motivic_monomial()) {
        let ctx = Context::bundled();
        let z = ctx.ring(MOTIVIC_Z).unwrap();
        let c = ctx.ring(CLASSICAL_Z).unwrap();
        let (x, y) = (z.parse(&x).unwrap(), z.parse(&y).unwrap());
        let lhs = ctx.apply("t", &z.mul(&x, &y)).unwrap();
        let rhs = c.mul(&ctx.apply("t", &x).unwrap(), &ctx.apply("t", &y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn motivic_reduction_is_multiplicative(x in motivic_monomial(), y in motivic_monomial()) {
        let ctx = Context::bundled();
        let z = ctx.ring(MOTIVIC_Z).unwrap();
        let z2 = ctx.ring(MOTIVIC_Z2).unwrap();
        let (x, y) = (z.parse(&x).unwrap(), z.parse(&y).unwrap());
        let lhs = ctx.apply("mu_m", &z.mul(&x, &y)).unwrap();
        let rhs = z2.mul(&ctx.apply("mu_m", &x).unwrap(), &ctx.apply("mu_m", &y).unwrap());
        prop_assert!(ctx.is_zero(MOTIVIC_Z2, &lhs.sub(&rhs)).unwrap());
    }

    #[test]
    fn mod2_reduction_is_multiplicative_classically(x in classical_monomial(), y in classical_monomial()) {
        let ctx = Context::bundled();
        let r = ctx.ring(CLASSICAL_Z).unwrap();
        let r2 = ctx.ring(CLASSICAL_Z2).unwrap();
        let (x, y) = (r.parse(&x).unwrap(), r.parse(&y).unwrap());
        let lhs = ctx.apply("mu_c", &r.mul(&x, &y)).unwrap();
        let rhs = r2.mul(&ctx.apply("mu_c", &x).unwrap(), &ctx.apply("mu_c", &y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bockstein_is_a_derivation_that_squares_to_zero(x in classical_z2_element(), y in classical_z2_element()) {
        let ctx = Context::bundled();
        let r = ctx.ring(CLASSICAL_Z2).unwrap();
        let (x, y) = (r.parse(&x).unwrap(), r.parse(&y).unwrap());
        let beta = |e: &Element| ctx.apply("bockstein_c", e).unwrap();
        let leibniz = r.mul(&beta(&x), &y).add(&r.mul(&x, &beta(&y)));
        prop_assert_eq!(beta(&r.mul(&x, &y)), leibniz);
        prop_assert!(beta(&beta(&x)).is_zero());
    }
}
