use feigenbaum::bignum::Precision;
use feigenbaum::refdata::{self, compare, ComputedTables, ItemKind};
use feigenbaum::solver::{solve_with_continuation, Branch, BranchSpec, ContinuationConfig};

#[test]
fn z2_solve_agrees_with_published_tables() {
    let spec = BranchSpec::new(2, Branch::Principal).unwrap();
    let p = Precision::with_target(40).unwrap();
    let r = solve_with_continuation(&spec, p, &ContinuationConfig::default()).unwrap();
    let entry = refdata::lookup(2, Branch::Principal).unwrap();
    let report = compare(&ComputedTables::from(&r), entry).unwrap();
    assert!(report.sign_mismatches().next().is_none());
    let tiny = p.epsilon(35);
    for item in report
        .items
        .iter()
        .filter(|i| i.kind == ItemKind::Chebyshev)
    {
        if p.parse(&item.reference).unwrap().abs() > tiny {
            assert!(
                item.matching_places >= 30,
                "{}: {}",
                item.label(),
                item.matching_places
            );
        }
    }
    assert!(report.meets(40), "{:?}", report.worst(40));
}

#[test]
fn references_parse_at_any_precision() {
    for entry in refdata::entries() {
        for digits in [20, 80] {
            let s = entry
                .series(Precision::with_target(digits).unwrap())
                .unwrap();
            assert_eq!(s.order_n(), entry.t_table.len());
        }
    }
}
