//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use confspace::algebra::{diagonal_class, duality_data, subalgebra, tensor_product, tensor_square, GradedAlgebra};
use confspace::groebner::{buchberger_check, gb_hilbert, TermOrder};
use confspace::models::*;
use confspace::presentation::{quotient, QuotientOptions};
use confspace::tc::{sweep, tc_report, LowerMethod, Status, TcOptions};
use confspace::zcl::*;
use confspace::{Field, FieldKind, Gf2, Rational};

/// Wall-clock limit for the theorem-table sweep.
const SWEEP_TIME_LIMIT: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn opts() -> QuotientOptions {
    QuotientOptions::default()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let rows = sweep(2, 5, 0, LowerMethod::Certificate, &TcOptions::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let required: Vec<(u32, u32)> =
        [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (1, 3), (2, 1), (2, 2)].to_vec();
    for (g, n) in &required {
        let row = rows.iter().find(|r| r.g == *g && r.n == *n && r.m == 0).ok_or(format!("missing row g={g} n={n}"))?;
        check(row.status == Status::Tight, || format!("g={g} n={n} is {} ({:?})", row.status, row.error))?;
        check(row.lower == Some(row.theorem) && row.upper == Some(row.theorem), || format!("g={g} n={n} bounds differ"))?;
        let report = tc_report(*g, *n, 0, LowerMethod::Certificate, &TcOptions::default()).map_err(|e| e.to_string())?;
        let want_field = if *g == 0 && *n >= 3 { FieldKind::Gf2 } else { FieldKind::Rational };
        check(report.lower.as_ref().map(|l| l.field) == Some(want_field), || format!("g={g} n={n} computed over the wrong field"))?;
    }
    check(rows.iter().all(|r| !r.failed()), || "a computed sweep row is not tight".into())?;
    check(elapsed <= SWEEP_TIME_LIMIT, || format!("sweep took {elapsed:?}"))?;
    let table: Vec<String> = required
        .iter()
        .map(|(g, n)| format!("({g},{n})={}", rows.iter().find(|r| r.g == *g && r.n == *n).unwrap().theorem))
        .collect();
    Ok(format!("{} tight, sweep of {} rows in {:.1}s", table.join(" "), rows.len(), elapsed.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let z = |r: confspace::Result<BoundReport>| r.map_err(|e| e.to_string());
    let so3 = quotient(&so3_mod2_presentation().unwrap()).unwrap();
    let r = z(zcl_exact(so3.algebra(), ZclOptions::default()))?;
    check(r.exact && r.value == 3, || format!("Z2[a]/(a^4): {r:?}"))?;
    let mut parts = vec!["Z2[a]/(a^4)=3".to_string()];
    for n in [2, 3] {
        let at = torus_reduced_algebra(n, opts()).map_err(|e| e.to_string())?;
        let r = z(zcl_exact(at.algebra(), ZclOptions::default()))?;
        check(r.exact && r.value == 2 * n, || format!("A_T n={n}: {r:?}"))?;
        parts.push(format!("A_T(n={n})={}", r.value));
    }
    let b = genus2_b_algebra(2, Coordinates::Reduced, opts()).map_err(|e| e.to_string())?;
    let r = z(zcl_exact(b.quotient.algebra(), ZclOptions::default()))?;
    check(r.exact && r.value >= 6, || format!("B_Σ n=2: {r:?}"))?;
    parts.push(format!("B_Σ(n=2)={} (≥ 6)", r.value));
    Ok(parts.join(", "))
}

fn criterion_3() -> Outcome {
    let mut parts = Vec::new();
    let mut run = |case: CertificateFamily, ns: std::ops::RangeInclusive<usize>, len: fn(usize) -> usize| -> Result<(), String> {
        for n in ns {
            let c = family_certificates(case, n, opts()).map_err(|e| format!("{case:?} n={n}: {e}"))?;
            check(c.certified_length() == len(n), || format!("{case:?} n={n}: length {}", c.certified_length()))?;
            check(c.coefficient() != "0", || format!("{case:?} n={n}: zero coefficient"))?;
            parts.push(format!("{case:?}(n={n}):{}", c.coefficient()));
        }
        Ok(())
    };
    run(CertificateFamily::Torus, 1..=5, |n| 2 * n)?;
    run(CertificateFamily::Genus2, 1..=3, |n| 2 * n + 2)?;
    run(CertificateFamily::Sphere, 3..=6, |n| 2 * n - 3)?;
    run(CertificateFamily::PuncturedModIdeal, 1..=4, |n| 2 * n)?;
    for n in 1..=4 {
        let q = punctured_mod_ideal_quotient(n, opts()).map_err(|e| e.to_string())?;
        let ks = mod_ideal_monomials(&q, n).map_err(|e| e.to_string())?;
        check(ks.iter().all(|(_, nz)| *nz), || format!("mod-ideal n={n}: {ks:?}"))?;
    }
    // ā b̄ c̄ d̄ = 2 ω ⊗ ω in H*(Σ₂) ⊗ H*(Σ₂).
    let m = surface_model::<Rational>(2).map_err(|e| e.to_string())?;
    let a = m.quotient.algebra();
    let aa = tensor_square(a);
    let mut prod = aa.unit();
    for g in ["a", "b", "c", "d"] {
        prod = aa.mul(&prod, &aa.bar(&m.quotient.generator_image(g).unwrap()).unwrap());
    }
    let target = aa.tensor_elements(&m.omega, &m.omega).unwrap().scale(&Rational::from_i64(2));
    check(prod == target, || format!("seed product is {}", aa.format(&prod)))?;
    Ok(format!("{} certificates nonzero; seed = {}", parts.len(), aa.format(&prod)))
}

fn xy_basis_series(n: usize) -> Vec<usize> {
    let mut h = vec![0; n + 2];
    for (j, k) in ordered_subset_pairs(n) {
        for extra in [0, 1, 1, 2] {
            h[j.len() + k.len() + extra] += 1;
        }
    }
    while h.last() == Some(&0) {
        h.pop();
    }
    h
}

fn product_of_linear(factors: impl IntoIterator<Item = usize>) -> Vec<usize> {
    factors.into_iter().fold(vec![1], |acc, f| convolve(&acc, &[1, f]))
}

fn criterion_4() -> Outcome {
    for n in 1..=5u32 {
        let t = totaro_algebra(&SurfaceSpec::closed(1, n).unwrap()).map_err(|e| e.to_string())?;
        let h = t.quotient.hilbert_series();
        check(h == xy_basis_series(n as usize), || format!("A_T n={n}: {h:?}"))?;
    }
    for n in 1..=5 {
        let h = quotient(&arnold_algebra::<Rational>(n).unwrap()).unwrap().hilbert_series();
        check(h == product_of_linear(1..n), || format!("Arnold n={n}: {h:?}"))?;
    }
    for n in 1..=4 {
        let h = quotient(&punctured_plane_algebra::<Rational>(n, 2).unwrap()).unwrap().hilbert_series();
        check(h == product_of_linear((0..n).map(|j| j + 2)), || format!("punctured n={n}: {h:?}"))?;
    }
    let mut checked = 0;
    for g in 0..=3 {
        let m = surface_model::<Rational>(g).map_err(|e| e.to_string())?;
        let a = m.quotient.algebra();
        let aa = tensor_square(a);
        let data = duality_data(a, 2, &m.omega).map_err(|e| e.to_string())?;
        let delta = diagonal_class(&aa, &data).map_err(|e| e.to_string())?;
        for x in a.generators() {
            let p = aa.mul(&aa.bar(x).unwrap(), &delta);
            check(p.is_zero(), || format!("genus {g}: (x⊗1−1⊗x)Δ = {}", aa.format(&p)))?;
            checked += 1;
        }
    }
    Ok(format!("A_T n≤5, Arnold n≤5, punctured n≤4 match; Δ annihilated by {checked} generators, g≤3"))
}

fn criterion_5() -> Outcome {
    let mut out = Vec::new();
    for n in 1..=6 {
        let p = torus_reduced_presentation(n).map_err(|e| e.to_string())?;
        let rels = torus_xy_ideal::<Rational>(&p.generators, n).map_err(|e| e.to_string())?;
        let r = buchberger_check(&p.generators, &rels, &TermOrder::identity(p.generators.len())).map_err(|e| e.to_string())?;
        check(r.is_groebner, || format!("n={n} not a Gröbner basis under {}", r.order))?;
        let h = gb_hilbert(&r).map_err(|e| e.to_string())?;
        let expected = totaro_algebra(&SurfaceSpec::closed(1, n as u32).unwrap()).map_err(|e| e.to_string())?.quotient.hilbert_series();
        check(h == expected, || format!("n={n}: {h:?} vs {expected:?}"))?;
        out.push(format!("n={n}:{h:?}"));
    }
    Ok(out.join(" "))
}

fn zcl_of<F: Field>(a: &Arc<GradedAlgebra<F>>) -> Result<usize, String> {
    let r = zcl_exact(a, ZclOptions::default()).map_err(|e| e.to_string())?;
    check(r.exact, || format!("{} not exact", a.name()))?;
    Ok(r.value)
}

fn criterion_6() -> Outcome {
    let mut parts = Vec::new();
    // Subalgebras.
    let at = torus_reduced_algebra(2, opts()).map_err(|e| e.to_string())?;
    let t_sub = subalgebra(at.algebra(), &[at.generator_image("x_1").unwrap(), at.generator_image("y_1").unwrap()], "H*(T)")
        .map_err(|e| e.to_string())?;
    let (zs, za) = (zcl_of(&Arc::new(t_sub.algebra))?, zcl_of(at.algebra())?);
    check(zs <= za, || format!("H*(T) ⊂ A_T: {zs} > {za}"))?;
    parts.push(format!("H*(T)⊂A_T: {zs}≤{za}"));
    let b = genus2_b_algebra(2, Coordinates::Reduced, opts()).map_err(|e| e.to_string())?;
    let bq = &b.quotient;
    let xy: Vec<_> = ["x_1", "y_1", "x_2", "y_2"].iter().map(|s| bq.generator_image(s).unwrap()).collect();
    let s = subalgebra(bq.algebra(), &xy, "⟨x,y⟩⊂B_Σ").map_err(|e| e.to_string())?;
    let (zs, zb) = (zcl_of(&Arc::new(s.algebra))?, zcl_of(bq.algebra())?);
    check(zs <= zb, || format!("⟨x,y⟩ ⊂ B_Σ: {zs} > {zb}"))?;
    parts.push(format!("⟨x,y⟩⊂B_Σ: {zs}≤{zb}"));
    // Epimorphic images.
    let asig = totaro_algebra(&SurfaceSpec::closed(2, 2).unwrap()).map_err(|e| e.to_string())?;
    let zasig = zcl_of(asig.algebra())?;
    check(zb <= zasig, || format!("A_Σ → B_Σ: {zb} > {zasig}"))?;
    parts.push(format!("A_Σ↠B_Σ: {zb}≤{zasig}"));
    let so3 = quotient(&so3_mod2_presentation().unwrap()).unwrap();
    let trunc = so3.presentation.with_relations("Z2[a]/(a^2)", vec![so3.presentation.word(&["alpha", "alpha"]).unwrap()], None).unwrap();
    let zt = zcl_of(quotient(&trunc).unwrap().algebra())?;
    let z4 = zcl_of(so3.algebra())?;
    check(zt <= z4, || format!("Z2[a]/(a^4) → Z2[a]/(a^2): {zt} > {z4}"))?;
    parts.push(format!("Z2[a]/(a^4)↠Z2[a]/(a^2): {zt}≤{z4}"));
    // Tensor products.
    let so3a = so3.algebra().clone();
    for k in 1..=2 {
        let p = quotient(&punctured_plane_algebra::<Gf2>(k, 2).unwrap()).unwrap().algebra().clone();
        let prod = Arc::new(tensor_product(&so3a, &p));
        let (zp, zx, zy) = (zcl_of(&prod)?, zcl_of(&so3a)?, zcl_of(&p)?);
        check(zp >= zx + zy, || format!("tensor with punctured n={k}: {zp} < {zx}+{zy}"))?;
        let sphere = sphere_mod2_model(k + 3, opts()).map_err(|e| e.to_string())?;
        let zsph = zcl_of(sphere.algebra())?;
        check(zsph >= zx + zy, || format!("sphere n={}: {zsph} < {zx}+{zy}", k + 3))?;
        parts.push(format!("S⊗P(n={k}): {zp}≥{zx}+{zy}, sphere(n={}) {zsph}", k + 3));
    }
    Ok(parts.join("; "))
}

fn criterion_7() -> Outcome {
    let mut parts = Vec::new();
    for n in 2..=4 {
        let r = e2_probe(n).map_err(|e| e.to_string())?;
        check(r.dim_v == r.dim_w - r.relation_rank, || format!("n={n}: {r:?}"))?;
        check(r.dim_v - r.rank_d == r.kernel_dim, || format!("n={n}: {r:?}"))?;
        check(e2_kernel_dim(n).map_err(|e| e.to_string())? == r.kernel_dim, || format!("n={n}: mismatch"))?;
        parts.push(format!("n={n}: dim V={} rank d={} ker={}", r.dim_v, r.rank_d, r.kernel_dim));
    }
    let (v2, v3) = (e2_probe(2).unwrap().dim_v, e2_probe(3).unwrap().dim_v);
    check(v2 == 2 && v3 == 12, || format!("dim V: {v2}, {v3}"))?;
    Ok(parts.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("theorem table", criterion_1),
        ("zcl exactness", criterion_2),
        ("certificate suite", criterion_3),
        ("model cross-checks", criterion_4),
        ("groebner", criterion_5),
        ("monotonicity", criterion_6),
        ("E2 probe", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS [{secs:.1}s] {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{secs:.1}s] {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
