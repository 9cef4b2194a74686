mod common;

use feigenbaum::bignum::{BigReal, Precision};
use feigenbaum::refdata;
use feigenbaum::series::FeigenbaumSeries;
use feigenbaum::solver::{
    assemble, default_tolerance, linear_solve, make_grid, newton_solve, residual, seed_series,
    solve_with_continuation, Branch, BranchSpec, ContinuationConfig, NewtonSystem,
};
use feigenbaum::Error;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn reference_series(z: u32, branch: Branch, precision: Precision) -> FeigenbaumSeries {
    refdata::lookup(z, branch)
        .unwrap()
        .series(precision)
        .unwrap()
}

#[test]
fn published_z2_table_is_a_fixed_point() {
    let p = Precision::with_target(100).unwrap();
    let s = reference_series(2, Branch::Principal, p);
    let x = p.parse("0.5").unwrap();
    assert!(residual(&s, &x).abs() < p.epsilon(85));
}

#[test]
fn residual_scales_with_coefficient_truncation() {
    let p = Precision::with_target(40).unwrap();
    let entry = refdata::lookup(2, Branch::Principal).unwrap();
    let coeffs = entry
        .t_table
        .iter()
        .map(|(_, v)| p.parse(v).unwrap().to_string_digits(10))
        .map(|v| p.parse(&v).unwrap())
        .collect();
    let s = FeigenbaumSeries::new(2, coeffs, p).unwrap();
    let f = residual(&s, &p.parse("0.5").unwrap()).abs();
    assert!(
        f < p.epsilon(8) && f > p.epsilon(14),
        "{}",
        f.to_sci_string(3)
    );
}

#[test]
fn jacobian_matches_finite_differences() {
    let mut rng = StdRng::seed_from_u64(11);
    let p = Precision::with_target(30).unwrap();
    for z in [2, 4, 6] {
        for _ in 0..5 {
            let n = rng.gen_range(4..=16);
            let s = common::perturbed_reference(&mut rng, z, n, p);
            let x = p
                .parse(&format!("{:.10}", rng.gen_range(0.0..1.0)))
                .unwrap();
            let agree = common::jacobian_agreement(&s, &x);
            assert!(
                agree >= (p.working_digits() / 3) as f64,
                "z={z} n={n}: {agree}"
            );
        }
    }
}

#[test]
fn random_dense_system_solves_to_working_precision() {
    let mut rng = StdRng::seed_from_u64(20);
    let p = Precision::with_target(40).unwrap();
    let rand_real = |rng: &mut StdRng| {
        p.parse(&format!("{:.15}", rng.gen_range(-1.0..1.0)))
            .unwrap()
    };
    let matrix: Vec<Vec<BigReal>> = (0..20)
        .map(|_| (0..20).map(|_| rand_real(&mut rng)).collect())
        .collect();
    let rhs: Vec<BigReal> = (0..20).map(|_| rand_real(&mut rng)).collect();
    let system = NewtonSystem {
        matrix,
        rhs,
        precision: p,
    };
    let sol = linear_solve(&system).unwrap();
    assert!(sol.within_tolerance);
    assert!(system.residual_norm(&sol.delta) < p.epsilon(50));
}

#[test]
fn one_newton_step_reduces_residual() {
    let p = Precision::with_target(30).unwrap();
    let spec = BranchSpec::new(2, Branch::Principal).unwrap();
    let mut s = seed_series(&spec, p, 12).unwrap();
    let grid = make_grid(12, 1, p).unwrap();
    let before = assemble(&s, &grid).unwrap();
    let delta = linear_solve(&before).unwrap().delta;
    let coeffs: Vec<BigReal> = s.coeffs().iter().zip(&delta).map(|(c, d)| c + d).collect();
    s = FeigenbaumSeries::new(2, coeffs, p).unwrap();
    let after = assemble(&s, &grid).unwrap();
    let max_f = |sys: &NewtonSystem| BigReal::max_abs(&sys.rhs[1..], p.bits());
    assert!(max_f(&after) < max_f(&before));
}

#[test]
fn z2_newton_converges_quadratically() {
    let p = Precision::with_target(60).unwrap();
    let spec = BranchSpec::new(2, Branch::Principal).unwrap();
    let seed = seed_series(&spec, p, 40).unwrap();
    let grid = make_grid(40, 1, p).unwrap();
    let out = newton_solve(&seed, &grid, &p.epsilon(60), 50).unwrap();
    assert!(out
        .series
        .inverse_lambda()
        .to_string()
        .starts_with("2.5029078"));
    // the correction norms estimate the error of each iterate
    let e: Vec<f64> = out
        .step_history
        .iter()
        .map(|s| {
            s.to_sci_string(3)
                .split('e')
                .nth(1)
                .unwrap()
                .parse::<f64>()
                .unwrap()
        })
        .collect();
    let tail = &e[e.len().saturating_sub(4)..];
    for w in tail.windows(2) {
        // log10 e_{k+1} <= 2 log10 e_k + C
        assert!(w[1] <= 2.0 * w[0] + 3.0, "{e:?}");
    }
}

#[test]
fn trivial_seed_is_left_alone() {
    let p = Precision::with_target(20).unwrap();
    let s = FeigenbaumSeries::constant(4, 10, p).unwrap();
    let out = newton_solve(&s, &make_grid(10, 2, p).unwrap(), &default_tolerance(p), 50).unwrap();
    assert_eq!(out.iterations, 0);
}

#[test]
fn non_convergence_carries_history() {
    let p = Precision::with_target(30).unwrap();
    let spec = BranchSpec::new(2, Branch::Principal).unwrap();
    let seed = seed_series(&spec, p, 16).unwrap();
    match newton_solve(
        &seed,
        &make_grid(16, 1, p).unwrap(),
        &default_tolerance(p),
        1,
    ) {
        Err(Error::NonConvergence {
            iterations,
            history,
            last,
        }) => {
            assert_eq!(iterations, 1);
            assert_eq!(history.len(), 2);
            assert_eq!(last.order_n(), 16);
        }
        other => panic!("expected non-convergence, got {other:?}"),
    }
}

#[test]
fn every_branch_keeps_its_identity() {
    let p = Precision::with_target(15).unwrap();
    let config = ContinuationConfig::default();
    for entry in refdata::entries() {
        let spec = BranchSpec::new(entry.z, entry.branch).unwrap();
        let r = solve_with_continuation(&spec, p, &config).unwrap();
        let lambda = r.lambda();
        // far from the trivial fixed point λ = −1
        assert!(
            (&lambda + &p.int(1)).abs() > p.parse("0.5").unwrap(),
            "z={}",
            entry.z
        );
        let g1 = r.series.eval_g(&p.int(1));
        match entry.branch {
            Branch::Principal => assert!(g1.is_negative()),
            Branch::Extra => assert!(!g1.is_negative()),
        }
        let counts: Vec<usize> = r.orders.iter().filter_map(|o| o.stable_digits).collect();
        assert!(
            counts.windows(2).all(|w| w[0] <= w[1]),
            "z={}: {counts:?}",
            entry.z
        );
        // sum rules hold at the converged order
        let tol = default_tolerance(p);
        assert!(r.series.g0_defect().abs() <= tol);
        assert!((&g1 + &lambda).abs() <= tol);
    }
}

#[test]
fn z12_reaches_published_constant() {
    let spec = BranchSpec::new(12, Branch::Principal).unwrap();
    let p = Precision::with_target(20).unwrap();
    let r = solve_with_continuation(&spec, p, &ContinuationConfig::default()).unwrap();
    assert!(r.feigenbaum_constant.starts_with("1.2465277517207492954"));
}

#[test]
fn low_target_taylor_rows_are_not_overstated() {
    // At a low target the padded iterate can already meet the tolerance;
    // the reported rows must still agree with the published table.
    let spec = BranchSpec::new(2, Branch::Extra).unwrap();
    let p = Precision::with_target(15).unwrap();
    let r = solve_with_continuation(&spec, p, &ContinuationConfig::default()).unwrap();
    assert!(r.orders.iter().skip(1).all(|o| o.iterations >= 1));
    let entry = refdata::lookup(2, Branch::Extra).unwrap();
    for e in &r.taylor.entries {
        if let Some((_, published)) = entry.b_table.iter().find(|(n, _)| *n == e.exponent) {
            let (_, places, sign) = refdata::compare_digits(&e.stable_digits, published);
            let shown = e.stable_digits.split('.').nth(1).map_or(0, str::len);
            assert!(
                !sign && places + 1 >= shown.min(published.split('.').nth(1).map_or(0, str::len)),
                "b{} {} vs {}",
                e.exponent,
                e.stable_digits,
                published
            );
        }
    }
}
