use confspace::tc::*;

fn opts() -> TcOptions {
    TcOptions::default()
}

#[test]
fn theorem_matches_golden_table() {
    let table = include_str!("data/tc_theorem.txt");
    let mut rows = 0;
    for line in table.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let v: Vec<u32> = line.split_whitespace().map(|x| x.parse().unwrap()).collect();
        assert_eq!(tc_theorem(v[0], v[1], v[2]).unwrap(), v[3] as usize, "{line}");
        rows += 1;
    }
    assert_eq!(rows, 4 * 6 * 5);
}

#[test]
fn torus_two_points() {
    let r = tc_report(1, 2, 0, LowerMethod::Exact, &opts()).unwrap();
    assert_eq!(r.lower.as_ref().unwrap().value, 5);
    assert_eq!(r.upper.value, 5);
    assert_eq!(r.upper.chain[1].value, 3);
    assert_eq!(r.upper.chain[2].value, 3);
    assert_eq!(r.theorem, 5);
    assert_eq!(r.status, Status::Tight);
    assert_eq!(r.product_tc, 5);
}

#[test]
fn sphere_four_points() {
    let r = tc_report(0, 4, 0, LowerMethod::Certificate, &opts()).unwrap();
    let l = r.lower.as_ref().unwrap();
    assert_eq!((l.value, l.zcl.value), (6, 5));
    assert_eq!(r.upper.value, 6);
    assert_eq!(r.status, Status::Tight);
}

#[test]
fn genus_two_two_points() {
    let r = tc_report(2, 2, 0, LowerMethod::Certificate, &opts()).unwrap();
    assert_eq!(r.lower.as_ref().unwrap().value, 7);
    assert_eq!(r.upper.value, 7);
    assert_eq!(r.theorem, 7);
    assert_eq!(r.status, Status::Tight);
    assert_eq!(r.product_tc, 9);
}

#[test]
fn exact_and_certificate_agree() {
    for (g, n) in [(0, 3), (0, 4), (1, 2), (1, 3), (2, 1), (2, 2)] {
        let e = tc_report(g, n, 0, LowerMethod::Exact, &opts()).unwrap();
        let c = tc_report(g, n, 0, LowerMethod::Certificate, &opts()).unwrap();
        assert!(e.lower.as_ref().unwrap().zcl.exact);
        assert_eq!(e.lower.unwrap().value, c.lower.unwrap().value, "g={g} n={n}");
    }
}

#[test]
fn punctured_cases() {
    for m in 1..=4 {
        for n in 1..=3 {
            let r = tc_report(0, n, m, LowerMethod::Exact, &opts()).unwrap();
            assert_eq!(r.status, Status::Tight, "m={m} n={n}: {r:?}");
        }
    }
    let r = tc_report(1, 2, 5, LowerMethod::Exact, &opts()).unwrap();
    assert_eq!(r.theorem, 5);
    assert_eq!(r.status, Status::Unverified);
    assert!(r.lower.is_none());
}

#[test]
fn higher_genus_uses_b_quotient() {
    let r = tc_report(3, 2, 0, LowerMethod::Certificate, &opts()).unwrap();
    assert_eq!(r.status, Status::Tight);
}

#[test]
fn small_sweep() {
    let rows = sweep(1, 3, 2, LowerMethod::Certificate, &opts()).unwrap();
    assert_eq!(rows.len(), 2 * 3 * 3);
    assert!(rows.iter().all(|r| !r.failed()));
    let json = serde_json::to_string(&rows).unwrap();
    assert!(json.contains("\"status\":\"tight\""));
}

#[test]
fn resource_errors_become_unverified_rows() {
    let tiny = TcOptions { zcl: confspace::zcl::ZclOptions { cap: 64, max_tensor_dim: 4 }, ..Default::default() };
    let rows = sweep(1, 2, 0, LowerMethod::Exact, &tiny).unwrap();
    assert!(rows.iter().any(|r| r.error.is_some() && r.status == Status::Unverified));
    assert!(rows.iter().all(|r| !r.failed()));
}
