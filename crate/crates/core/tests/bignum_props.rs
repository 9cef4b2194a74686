use feigenbaum::bignum::{
    binomial_exact, cheb_even_values, cheb_sum_halved, cheb_t, cheb_t_prime, common_prefix_digits,
    BigReal, Decimal, Precision,
};
use proptest::prelude::*;

fn prec() -> Precision {
    Precision::with_target(30).unwrap()
}

fn real(v: f64) -> BigReal {
    prec().parse(&format!("{v:.15}")).unwrap()
}

fn trimmed(text: &str) -> &str {
    if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.')
    } else {
        text
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recurrence_matches_trigonometric_form(n in 0usize..60, u in -1.0f64..1.0) {
        let u = real(u);
        let closed = u.acos().mul_i64(n as i64).cos();
        prop_assert!((cheb_t(n, &u) - closed).abs() < prec().epsilon(40));
    }

    #[test]
    fn derivative_matches_finite_difference(n in 1usize..40, u in -0.99f64..0.99) {
        let u = real(u);
        let h = prec().epsilon(16);
        let fd = (cheb_t(n, &(&u + &h)) - cheb_t(n, &(&u - &h))) / h.mul_i64(2);
        let exact = cheb_t_prime(n, &u);
        prop_assert!((fd - &exact).abs() < prec().epsilon(24) * (exact.abs() + prec().int(1)));
    }

    #[test]
    fn even_values_match_recurrence(count in 1usize..30, u in -1.5f64..1.5) {
        let u = real(u);
        for (i, v) in cheb_even_values(&u, count).iter().enumerate() {
            let direct = cheb_t(2 * i, &u);
            prop_assert!((v - &direct).abs() < prec().epsilon(40) * (direct.abs() + prec().int(1)));
        }
    }

    #[test]
    fn halved_sum_is_linear(
        a in prop::collection::vec(-5i64..5, 1..12),
        b in prop::collection::vec(-5i64..5, 1..12),
        u in -1.0f64..1.0,
    ) {
        let n = a.len().min(b.len());
        let p = prec();
        let ca: Vec<BigReal> = a[..n].iter().map(|v| p.int(*v)).collect();
        let cb: Vec<BigReal> = b[..n].iter().map(|v| p.int(*v)).collect();
        let sum: Vec<BigReal> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
        let u = real(u);
        for derivative in [false, true] {
            let lhs = cheb_sum_halved(&sum, &u, derivative);
            let rhs = cheb_sum_halved(&ca, &u, derivative) + cheb_sum_halved(&cb, &u, derivative);
            prop_assert!((lhs - rhs).abs() < p.epsilon(35));
        }
    }

    #[test]
    fn halved_sum_matches_term_by_term(c in prop::collection::vec(-3i64..3, 1..10), u in -1.2f64..1.2) {
        let p = prec();
        let u = real(u);
        let coeffs: Vec<BigReal> = c.iter().map(|v| p.int(*v)).collect();
        let mut direct = coeffs[0].half();
        let mut slope = p.zero();
        for (i, t) in coeffs.iter().enumerate().skip(1) {
            direct += t * &cheb_t(2 * i, &u);
            slope += t * &cheb_t_prime(2 * i, &u);
        }
        prop_assert!((cheb_sum_halved(&coeffs, &u, false) - direct).abs() < p.epsilon(35));
        prop_assert!((cheb_sum_halved(&coeffs, &u, true) - slope).abs() < p.epsilon(33));
    }

    #[test]
    fn pascal_identity(a in 1u64..200, b in 1u64..200) {
        prop_assume!(b <= a);
        let lhs = binomial_exact(a, b).unwrap();
        let rhs = binomial_exact(a - 1, b - 1).unwrap()
            + if b < a { binomial_exact(a - 1, b).unwrap() } else { 0u32.into() };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn decimal_round_trip(int in -99999i64..99999, frac in 0u64..10_000_000, exp in -40i32..40) {
        let text = format!("{int}.{frac:07}e{exp}");
        let d = Decimal::parse(&text).unwrap();
        let back = Decimal::parse(&d.to_real(prec().bits()).to_decimal(30).to_fixed()).unwrap();
        let (a, b) = (back.to_fixed(), d.to_fixed());
        prop_assert_eq!(trimmed(&a), trimmed(&b));
    }

    #[test]
    fn prefix_is_shared_and_symmetric(a in -10.0f64..10.0, delta in -1e-6f64..1e-6) {
        let x = real(a);
        let y = real(a + delta);
        let ab = common_prefix_digits(&x, &y);
        prop_assert_eq!(&ab, &common_prefix_digits(&y, &x));
        prop_assert!(x.to_string().starts_with(&ab));
        prop_assert!(y.to_string().starts_with(&ab));
    }
}

#[test]
fn prefix_examples() {
    let p = prec();
    let a = p.parse("0.12345").unwrap();
    let b = p.parse("0.12346").unwrap();
    assert_eq!(common_prefix_digits(&a, &b), "0.1234");
    let a = p.parse("-2.857124").unwrap();
    let b = p.parse("-2.857131").unwrap();
    assert_eq!(common_prefix_digits(&a, &b), "-2.8571");
    let a = p.parse("0.9999999").unwrap();
    let b = p.parse("1.0000001").unwrap();
    assert_eq!(common_prefix_digits(&a, &b), "");
}
