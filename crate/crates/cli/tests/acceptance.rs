//! Acceptance suite: one test per exit criterion, every comparison exact
//! (integer equality). Each test prints a single PASS/FAIL line; run with
//! `--nocapture --test-threads=1` to see them in order.
//!
//! Criterion 4 is expected to fail for n = 2, 3: the quoted closed form
//! for dim H^2 of the 4n+2-dimensional family does not match the exact
//! kernel count (see the failure message, which includes the two
//! independent computations that agree with each other).

use quadlie::algebra::{inner_derivations, skew_derivation_space, symplectic_ad_derivation, symplectic_check};
use quadlie::cohomology::{
    degree2_spaces, quadratic_differential, quadratic_differential_capped,
    standard_ce_differential, standard_ce_differential_capped, BettiTable,
};
use quadlie::exterior::{masks_of_weight, super_poisson, three_form, ExteriorForm};
use quadlie::families::{make_f, make_g2n2, make_g4n2, make_jordan};
use quadlie::formulas::{
    betti_f_closed_table, betti_g2n2_cor25_table, betti_g2n2_pouseele_table,
    betti_g2n2_theorem2, betti_g2n2_theorem2_table, h2_g4n2_closed, k_closed_m1, k_recursive,
    phi_kernel_oracle, KernelQuery,
};
use quadlie::scalar::int;
use quadlie_cli::verify::{check_image_spans_f, check_image_spans_g2n2, suite_symplectic};

fn pass(criterion: usize, what: &str) {
    println!("ACCEPTANCE {criterion}: PASS — {what}");
}

fn fail(criterion: usize, what: &str) {
    println!("ACCEPTANCE {criterion}: FAIL — {what}");
}

#[test]
fn acceptance_1_b2_of_the_solvable_family() {
    for n in 1..=5usize {
        let (g, b) = make_g2n2(n).unwrap();
        let std = standard_ce_differential_capped(&g, 3);
        let quad = quadratic_differential_capped(&g, &b, 3).unwrap();
        let expected = (n * n - 1) as u64;
        assert_eq!(std.betti(2), expected, "standard b_2, n={n}");
        assert_eq!(quad.betti(2), expected, "quadratic b_2, n={n}");
        assert_eq!(betti_g2n2_theorem2(n, 2).unwrap(), expected, "formula, n={n}");
    }
    pass(1, "b_2(g2n2) = n^2 - 1 for n = 1..5, brute force (both differentials) vs formula");
}

#[test]
fn acceptance_2_full_tables_four_ways() {
    for n in 1..=4usize {
        let (g, b) = make_g2n2(n).unwrap();
        let label = format!("g2n2(n={n})");
        let std = standard_ce_differential(&g).betti_table(&label).unwrap();
        let quad = quadratic_differential(&g, &b)
            .unwrap()
            .betti_table(&label)
            .unwrap();
        let t2 = betti_g2n2_theorem2_table(n).unwrap();
        let pl = betti_g2n2_pouseele_table(n).unwrap();
        assert_eq!(std.values(), quad.values(), "standard vs quadratic, n={n}");
        assert_eq!(std.values(), t2.values(), "closed form, n={n}");
        assert_eq!(std.values(), pl.values(), "lift of the f table, n={n}");
        // cor25 route agrees as well
        assert_eq!(
            std.values(),
            betti_g2n2_cor25_table(n).unwrap().values(),
            "kernel-count form, n={n}"
        );
        match n {
            1 => assert_eq!(std.values(), &[1, 1, 0, 1, 1]),
            2 => assert_eq!(std.values(), &[1, 1, 3, 6, 3, 1, 1]),
            _ => {}
        }
    }
    pass(2, "g2n2 tables for n = 1..4 identical across both brute-force routes and both closed routes; spot tables verified");
}

#[test]
fn acceptance_3_f_closed_form() {
    for n in 1..=4usize {
        let f = make_f(n).unwrap();
        let brute = standard_ce_differential(&f)
            .betti_table(&format!("f(n={n})"))
            .unwrap();
        let closed = betti_f_closed_table(n).unwrap();
        assert_eq!(brute.values(), &closed[..], "f(n={n})");
    }
    pass(3, "b_k(f) = C(n, floor(k/2))^2 for all k, n = 1..4, brute force vs closed form");
}

#[test]
fn acceptance_4_h2_of_the_double_extensions() {
    let expected: Vec<u64> = (1..=3).map(|n| h2_g4n2_closed(n).unwrap()).collect();
    assert_eq!(expected, vec![8, 22, 48]);
    let mut computed = Vec::new();
    for n in 1..=3usize {
        let (g, b) = make_g4n2(n).unwrap();
        let h2 = degree2_spaces(&g, &b).unwrap().h2_dim as u64;
        // second, independent route inside the engine: Der_a(g,B)/ad(g)
        if n <= 2 {
            let dera = skew_derivation_space(&g, &b).unwrap().dim();
            let inner = inner_derivations(&g).dim();
            assert_eq!((dera - inner) as u64, h2, "derivation route, n={n}");
        }
        computed.push(h2);
    }
    if computed == expected {
        pass(4, "dim H^2(g4n2) = 8, 22, 48 for n = 1, 2, 3");
    } else {
        fail(
            4,
            &format!(
                "dim H^2(g4n2) computed = {computed:?}, quoted closed form = {expected:?}. \
                 The exact kernel count (confirmed for n <= 2 by the independent \
                 Der_a/ad route) gives 2n(2n+1) for n > 1; the quoted 5n^2+n \
                 over-counts two symmetric span families by n^2 - n. n = 1 agrees."
            ),
        );
        assert_eq!(computed, expected, "quoted closed form vs exact computation");
    }
}

#[test]
fn acceptance_5_kernel_dimension_machinery() {
    for n in 0..=6usize {
        for k in 0..=n {
            assert_eq!(
                k_closed_m1(k, n).unwrap() as usize,
                phi_kernel_oracle(1, k, k, n).unwrap(),
                "closed form at (1,{k},{k},{n})"
            );
        }
    }
    for n in 1..=4usize {
        for m in 1..=3usize {
            for k1 in 0..=n {
                for k2 in 0..=n {
                    assert_eq!(
                        k_recursive(KernelQuery::new(m as i64, k1 as i64, k2 as i64, n as i64)),
                        phi_kernel_oracle(m, k1, k2, n).unwrap() as i64,
                        "recursion at ({m},{k1},{k2},{n})"
                    );
                }
            }
        }
    }
    pass(5, "K closed form = oracle for k <= n <= 6; K recursion = oracle for m <= 3, n <= 4, all k1,k2");
}

#[test]
fn acceptance_6_differentials_square_to_zero_and_agree() {
    // every family instance used by the other criteria
    let mut quadratic_cases = Vec::new();
    for n in 1..=4 {
        let (g, b) = make_g2n2(n).unwrap();
        quadratic_cases.push((format!("g2n2(n={n})"), g, b, None));
    }
    {
        let (g, b) = make_g2n2(5).unwrap();
        quadratic_cases.push(("g2n2(n=5)".into(), g, b, Some(3)));
    }
    for p in 2..=5 {
        let (g, b, _) = make_jordan(p).unwrap();
        quadratic_cases.push((format!("jordan(p={p})"), g, b, None));
    }
    for n in 1..=2 {
        let (g, b) = make_g4n2(n).unwrap();
        quadratic_cases.push((format!("g4n2(n={n})"), g, b, None));
    }
    {
        let (g, b) = make_g4n2(3).unwrap();
        quadratic_cases.push(("g4n2(n=3)".into(), g, b, Some(3)));
    }
    for (label, g, b, cap) in &quadratic_cases {
        let cap = cap.unwrap_or(g.dim());
        let std = standard_ce_differential_capped(g, cap);
        let quad = quadratic_differential_capped(g, b, cap).unwrap();
        assert!(std.d_squared_is_zero(), "{label} standard");
        assert!(quad.d_squared_is_zero(), "{label} quadratic");
        for k in 0..=cap {
            assert_eq!(std.rank(k), quad.rank(k), "{label} rank at {k}");
            assert_eq!(std.kernel_dim(k), quad.kernel_dim(k), "{label} kernel at {k}");
        }
    }
    for n in 1..=4 {
        let f = make_f(n).unwrap();
        assert!(standard_ce_differential(&f).d_squared_is_zero(), "f(n={n})");
    }
    pass(6, "d^2 = 0 for both differentials on every instance used; per-degree kernel/image dimensions coincide");
}

#[test]
fn acceptance_7_symplectic_suite() {
    for p in 2..=5usize {
        let (g, b, w) = make_jordan(p).unwrap();
        assert!(symplectic_check(&g, &w).unwrap(), "jordan(p={p})");
        let d = symplectic_ad_derivation(&g, &b, &w).unwrap();
        assert!(d.is_invertible(), "jordan(p={p}) invertibility");
        let check_eigen = |endo: &quadlie::algebra::LinearEndo, lambda: i64| {
            if endo.is_zero() {
                return; // central generator, nothing to check
            }
            let coords = d.coords_of(endo).unwrap();
            let expect: Vec<_> = coords.iter().map(|c| c * int(lambda)).collect();
            assert_eq!(d.apply(&coords), expect, "p={p}, lambda={lambda}");
        };
        check_eigen(&g.ad_basis(p + 1), -1);
        for i in 1..=p {
            check_eigen(&g.ad_basis(i), i as i64);
            check_eigen(&g.ad_basis(p + 1 + i), -(i as i64));
        }
    }
    // the Leibniz rule on ad(g) is asserted inside symplectic_ad_derivation;
    // the full suite re-checks it together with the negatives
    assert!(suite_symplectic(5).passed());
    pass(7, "(jordan, B, omega) symplectic for p = 2..5; induced map on ad(g) invertible with the expected eigen action");
}

#[test]
fn acceptance_8_structural_properties() {
    // Euler characteristic and Poincare symmetry on every computed
    // quadratic-family table
    let mut tables: Vec<BettiTable> = Vec::new();
    for n in 1..=4 {
        let (g, b) = make_g2n2(n).unwrap();
        tables.push(
            quadratic_differential(&g, &b)
                .unwrap()
                .betti_table(&format!("g2n2(n={n})"))
                .unwrap(),
        );
    }
    for p in 2..=5 {
        let (g, b, _) = make_jordan(p).unwrap();
        tables.push(
            quadratic_differential(&g, &b)
                .unwrap()
                .betti_table(&format!("jordan(p={p})"))
                .unwrap(),
        );
    }
    for n in 1..=2 {
        let (g, b) = make_g4n2(n).unwrap();
        tables.push(
            quadratic_differential(&g, &b)
                .unwrap()
                .betti_table(&format!("g4n2(n={n})"))
                .unwrap(),
        );
    }
    for t in &tables {
        // BettiTable construction already verified the Euler characteristic
        assert!(t.is_poincare_symmetric(), "{}", t.label());
    }

    // contraction corollary on all basis pairs (exact orientation:
    // {iota_X(I), iota_Y(I)} = iota_{[Y,X]}(I); the quoted form reverses
    // the bracket -- see the verify suite diagnostics)
    let mut cases = Vec::new();
    for n in 1..=3 {
        let (g, b) = make_g2n2(n).unwrap();
        cases.push((g, b));
    }
    for p in 2..=3 {
        let (g, b, _) = make_jordan(p).unwrap();
        cases.push((g, b));
    }
    for n in 1..=2 {
        let (g, b) = make_g4n2(n).unwrap();
        cases.push((g, b));
    }
    for (g, b) in &cases {
        let dim = g.dim();
        let i_form = three_form(g, b).unwrap();
        let basis = |i: usize| {
            let mut v = vec![int(0); dim];
            v[i] = int(1);
            v
        };
        for x in 0..dim {
            let ix = i_form.contract(&basis(x)).unwrap();
            for y in 0..dim {
                let iy = i_form.contract(&basis(y)).unwrap();
                let lhs = super_poisson(b, &ix, &iy).unwrap();
                let rhs = i_form.contract(&g.bracket(&basis(y), &basis(x)).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "dim {dim} pair ({x},{y})");
            }
        }
    }

    // the scalar-action lemma for {Omega_n, .}
    for n in 1..=4usize {
        let (_, b) = make_g2n2(n).unwrap();
        let dim = 2 * n + 2;
        let mut omega_n = ExteriorForm::zero(dim);
        for i in 1..=n {
            omega_n = omega_n.add(&ExteriorForm::monomial(dim, &[i, n + 1 + i]));
        }
        for k in 0..=n {
            for m in 0..=n {
                for am in masks_of_weight(n, k) {
                    for bm in masks_of_weight(n, m) {
                        let f =
                            ExteriorForm::from_terms(dim, [((am << 1) | (bm << (n + 2)), int(1))]);
                        assert_eq!(
                            super_poisson(&b, &omega_n, &f).unwrap(),
                            f.scale(&int(k as i64 - m as i64)),
                            "scalar action n={n} ({k},{m})"
                        );
                    }
                }
            }
        }
    }

    // differential-image span structure at n <= 3
    for n in 1..=3 {
        let (ok, detail) = check_image_spans_g2n2(n);
        assert!(ok, "g2n2(n={n}) spans: {detail}");
        let (ok, detail) = check_image_spans_f(n);
        assert!(ok, "f(n={n}) spans: {detail}");
    }
    pass(8, "Euler/Poincare on all computed quadratic tables; contraction corollary (exact orientation) on all basis pairs; scalar-action lemma; differential-image span equalities at n <= 3");
}

#[test]
fn acceptance_9_desk_scale_totality() {
    // the closed forms stay total and mutually consistent far beyond the
    // brute-force range used above (n = 30 keeps every entry inside u64;
    // the middle binomials square past 2^64 around n = 35)
    for n in 5..=30usize {
        let t2 = betti_g2n2_theorem2_table(n).unwrap();
        let c25 = betti_g2n2_cor25_table(n).unwrap();
        let pl = betti_g2n2_pouseele_table(n).unwrap();
        assert_eq!(t2.values(), c25.values(), "n={n}");
        assert_eq!(t2.values(), pl.values(), "n={n}");
        assert!(t2.is_poincare_symmetric(), "n={n}");
        assert_eq!(t2.values()[2], (n * n - 1) as u64, "n={n}");
        assert_eq!(t2.values()[2 * n + 2], 1, "n={n}");
    }
    for n in 0..=30usize {
        for k in 0..=n {
            let _ = k_closed_m1(k, n).unwrap();
        }
    }
    pass(9, "closed forms are total and mutually consistent for n = 5..30 (tables) and k <= n <= 30 (kernel counts); brute-force agreement holds on the full reachable range (criteria 1-3, 5)");
}
