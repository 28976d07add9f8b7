//! Golden identities for the associated 3-form, the interior product and
//! the super Poisson bracket on the shipped family frames.

mod common;

use common::basis_vec;
use quadlie::algebra::BilinearForm;
use quadlie::error::Error;
use quadlie::exterior::{masks_of_weight, super_poisson, three_form, ExteriorForm};
use quadlie::families::{make_g2n2, make_g4n2, make_jordan};
use quadlie::scalar::int;

fn mono(dim: usize, idx: &[usize]) -> ExteriorForm {
    ExteriorForm::monomial(dim, idx)
}

/// Ω_n = Σ α_i∧β_i on the g2n2(n) frame (α_i at i, β_i at n+1+i).
fn omega_n(n: usize) -> ExteriorForm {
    let dim = 2 * n + 2;
    let mut f = ExteriorForm::zero(dim);
    for i in 1..=n {
        f = f.add(&mono(dim, &[i, n + 1 + i]));
    }
    f
}

#[test]
fn three_form_goldens() {
    // g2n2(n): I = beta ^ sum alpha_i ^ beta_i
    for n in 1..=3 {
        let (g, b) = make_g2n2(n).unwrap();
        let dim = 2 * n + 2;
        let i_form = three_form(&g, &b).unwrap();
        let expect = mono(dim, &[n + 1]).wedge(&omega_n(n));
        assert_eq!(i_form, expect, "g2n2({n})");
    }
    // jordan(p): I = beta ^ sum_{i=1}^{p-1} alpha_{i+1} ^ beta_i
    for p in 2..=4 {
        let (g, b, _) = make_jordan(p).unwrap();
        let dim = 2 * p + 2;
        let i_form = three_form(&g, &b).unwrap();
        let mut sum = ExteriorForm::zero(dim);
        for i in 1..p {
            sum = sum.add(&mono(dim, &[i + 1]).wedge(&mono(dim, &[p + 1 + i])));
        }
        let expect = mono(dim, &[p + 1]).wedge(&sum);
        assert_eq!(i_form, expect, "jordan({p})");
    }
    // g4n2(n): I = beta ^ (beta_1^beta_2 + ... + beta_{2n-1}^beta_{2n})
    for n in 1..=2 {
        let (g, b) = make_g4n2(n).unwrap();
        let dim = 4 * n + 2;
        let beta = 2 * n + 1;
        let i_form = three_form(&g, &b).unwrap();
        let mut sum = ExteriorForm::zero(dim);
        for i in 1..=n {
            sum = sum.add(&mono(dim, &[beta + 2 * i - 1, beta + 2 * i]));
        }
        let expect = mono(dim, &[beta]).wedge(&sum);
        assert_eq!(i_form, expect, "g4n2({n})");
    }
}

#[test]
fn three_form_of_abelian_vanishes() {
    let g = quadlie::algebra::build_lie_algebra(
        3,
        vec!["a".into(), "b".into(), "c".into()],
        Vec::new(),
    )
    .unwrap();
    let b = BilinearForm::symmetric(
        (0..3)
            .map(|i| (0..3).map(|j| if i == j { int(1) } else { int(0) }).collect())
            .collect(),
    )
    .unwrap();
    assert!(three_form(&g, &b).unwrap().is_zero());
}

#[test]
fn three_form_requires_invariance() {
    let (g, _) = make_g2n2(1).unwrap();
    let identity = BilinearForm::symmetric(
        (0..4)
            .map(|i| (0..4).map(|j| if i == j { int(1) } else { int(0) }).collect())
            .collect(),
    )
    .unwrap();
    assert!(matches!(
        three_form(&g, &identity),
        Err(Error::FormNotInvariant)
    ));
}

#[test]
fn contractions_of_i() {
    for n in 1..=3 {
        let (g, b) = make_g2n2(n).unwrap();
        let dim = 2 * n + 2;
        let i_form = three_form(&g, &b).unwrap();
        // iota_{X_0}(I) = 0; iota_{Y_0}(I) = Omega_n
        assert!(i_form.contract(&basis_vec(dim, 0)).unwrap().is_zero());
        assert_eq!(
            i_form.contract(&basis_vec(dim, n + 1)).unwrap(),
            omega_n(n)
        );
    }
}

#[test]
fn poisson_identities_on_g2n2() {
    let n = 2;
    let (g, b) = make_g2n2(n).unwrap();
    let dim = 2 * n + 2;
    let i_form = three_form(&g, &b).unwrap();
    let alpha = |i: usize| mono(dim, &[i]);
    let beta_i = |i: usize| mono(dim, &[n + 1 + i]);
    let beta = mono(dim, &[n + 1]);
    let om = omega_n(n);

    // {I, alpha ^ beta} = I
    let ab = alpha(0).wedge(&beta);
    assert_eq!(super_poisson(&b, &i_form, &ab).unwrap(), i_form);

    // {I, alpha_i ^ alpha_j} = 2 beta ^ alpha_i ^ alpha_j
    let a12 = alpha(1).wedge(&alpha(2));
    assert_eq!(
        super_poisson(&b, &i_form, &a12).unwrap(),
        beta.wedge(&a12).scale(&int(2))
    );
    // {I, beta_i ^ beta_j} = -2 beta ^ beta_i ^ beta_j
    let b12 = beta_i(1).wedge(&beta_i(2));
    assert_eq!(
        super_poisson(&b, &i_form, &b12).unwrap(),
        beta.wedge(&b12).scale(&int(-2))
    );
    // {I, alpha ^ alpha_i} = alpha_i ^ Omega_n - alpha ^ beta ^ alpha_i
    for i in 1..=n {
        let lhs = super_poisson(&b, &i_form, &alpha(0).wedge(&alpha(i))).unwrap();
        let rhs = alpha(i)
            .wedge(&om)
            .sub(&alpha(0).wedge(&beta).wedge(&alpha(i)));
        assert_eq!(lhs, rhs);
        // {I, alpha ^ beta_i} = beta_i ^ Omega_n + alpha ^ beta ^ beta_i
        let lhs = super_poisson(&b, &i_form, &alpha(0).wedge(&beta_i(i))).unwrap();
        let rhs = beta_i(i)
            .wedge(&om)
            .add(&alpha(0).wedge(&beta).wedge(&beta_i(i)));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn omega_scalar_action() {
    // {Omega_n, .} multiplies Lambda^k(V) ⊗ Lambda^m(W) by k - m
    for n in 1..=4usize {
        let (_, b) = make_g2n2(n).unwrap();
        let dim = 2 * n + 2;
        let om = omega_n(n);
        for k in 0..=n {
            for m in 0..=n {
                for am in masks_of_weight(n, k) {
                    for bm in masks_of_weight(n, m) {
                        let mask = (am << 1) | (bm << (n + 2));
                        let f = ExteriorForm::from_terms(dim, [(mask, int(1))]);
                        let got = super_poisson(&b, &om, &f).unwrap();
                        let want = f.scale(&int(k as i64 - m as i64));
                        assert_eq!(got, want, "n={n}, k={k}, m={m}");
                    }
                }
            }
        }
    }
}

#[test]
fn poisson_graded_antisymmetry() {
    // {a,b} = -(-1)^{|a||b|} {b,a}: the bracket is symmetric on degree-1
    // pairs ({w_i, w_j} = B(Y_i, Y_j)) and antisymmetric whenever |a||b|
    // is even. Checked on all monomial pairs of the g2n2(2) frame.
    let (_, b) = make_g2n2(2).unwrap();
    let dim = 6;
    for ka in 0..=3usize {
        for kb in 0..=3usize {
            for ma in masks_of_weight(dim, ka) {
                for mb in masks_of_weight(dim, kb) {
                    let fa = ExteriorForm::from_terms(dim, [(ma, int(1))]);
                    let fb = ExteriorForm::from_terms(dim, [(mb, int(1))]);
                    let ab = super_poisson(&b, &fa, &fb).unwrap();
                    let ba = super_poisson(&b, &fb, &fa).unwrap();
                    let sign = if (ka * kb) % 2 == 1 { 1 } else { -1 };
                    assert_eq!(ab, ba.scale(&int(sign)), "deg {ka},{kb}");
                }
            }
        }
    }
}

#[test]
fn poisson_mixed_degree_inputs_split_into_slices() {
    // the bracket of a mixed-degree form is the sum of the brackets of
    // its homogeneous slices (the sign prefactor is per-degree)
    let (g, b) = make_g2n2(2).unwrap();
    let i_form = three_form(&g, &b).unwrap();
    let ab = mono(6, &[0, 4]);
    let mixed = i_form.add(&ab).add(&ExteriorForm::covector(6, 2));
    let whole = super_poisson(&b, &mixed, &mono(6, &[1, 4])).unwrap();
    let mut parts = ExteriorForm::zero(6);
    for k in mixed.degrees() {
        parts = parts
            .add(&super_poisson(&b, &mixed.degree_slice(k), &mono(6, &[1, 4])).unwrap());
    }
    assert_eq!(whole, parts);
    assert!(!whole.is_zero());
}

#[test]
fn contraction_corollary_all_families() {
    // {iota_X(I), iota_Y(I)} = iota_{[X,Y]}(I) on all basis pairs
    let mut cases: Vec<(quadlie::algebra::LieAlgebra, BilinearForm)> = Vec::new();
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
        for x in 0..dim {
            let ix = i_form.contract(&basis_vec(dim, x)).unwrap();
            for y in 0..dim {
                let iy = i_form.contract(&basis_vec(dim, y)).unwrap();
                let lhs = super_poisson(b, &ix, &iy).unwrap();
                // the exact orientation under the bracket convention in
                // use: {iota_X(I), iota_Y(I)} = iota_{[Y,X]}(I)
                let bracket = g.bracket(&basis_vec(dim, y), &basis_vec(dim, x)).unwrap();
                let rhs = i_form.contract(&bracket).unwrap();
                assert_eq!(lhs, rhs, "dim {dim}, pair ({x},{y})");
            }
        }
    }
}

#[test]
fn g4n2_bracket_table_identities() {
    // the eight nonzero super Poisson bracket families of the 2-nilpotent
    // double extensions, n = 1 and 2
    for n in 1..=2usize {
        let (g, b) = make_g4n2(n).unwrap();
        let dim = 4 * n + 2;
        let i_form = three_form(&g, &b).unwrap();
        let al = |i: usize| mono(dim, &[i]);
        let al0 = mono(dim, &[0]);
        let be0 = mono(dim, &[2 * n + 1]);
        let be = |i: usize| mono(dim, &[2 * n + 1 + i]);
        let mut om = ExteriorForm::zero(dim);
        for i in 1..=n {
            om = om.add(&be(2 * i - 1).wedge(&be(2 * i)));
        }
        let sp = |f: &ExteriorForm| super_poisson(&b, &i_form, f).unwrap();

        // (1) vanishing brackets
        for i in 1..=2 * n {
            assert!(sp(&be0.wedge(&al(i))).is_zero());
        }
        for i in 1..=n {
            assert!(sp(&al(2 * i - 1).wedge(&be(2 * i))).is_zero());
            assert!(sp(&al(2 * i).wedge(&be(2 * i - 1))).is_zero());
        }
        // (2) {I, alpha ^ beta} = I
        assert_eq!(sp(&al0.wedge(&be0)), i_form);
        // (3) {I, alpha ^ beta_k} = beta_k ^ Omega
        for k in 1..=2 * n {
            assert_eq!(sp(&al0.wedge(&be(k))), be(k).wedge(&om));
        }
        // (4) {I, alpha ^ alpha_{2i-1}} = alpha_{2i-1} ^ Omega + beta ^ beta_{2i} ^ alpha
        for i in 1..=n {
            assert_eq!(
                sp(&al0.wedge(&al(2 * i - 1))),
                al(2 * i - 1)
                    .wedge(&om)
                    .add(&be0.wedge(&be(2 * i)).wedge(&al0))
            );
            assert_eq!(
                sp(&al0.wedge(&al(2 * i))),
                al(2 * i)
                    .wedge(&om)
                    .sub(&be0.wedge(&be(2 * i - 1)).wedge(&al0))
            );
        }
        for i in 1..=n {
            for j in 1..=n {
                // (5) alpha-alpha brackets
                assert_eq!(
                    sp(&al(2 * i - 1).wedge(&al(2 * j))),
                    be0.wedge(&be(2 * i))
                        .wedge(&al(2 * j))
                        .neg()
                        .sub(&be0.wedge(&be(2 * j - 1)).wedge(&al(2 * i - 1)))
                );
                assert_eq!(
                    sp(&al(2 * i).wedge(&al(2 * j))),
                    be0.wedge(&be(2 * i - 1))
                        .wedge(&al(2 * j))
                        .sub(&be0.wedge(&be(2 * j - 1)).wedge(&al(2 * i)))
                );
                // (7) odd-odd pairings share an image
                let rhs = be0.wedge(&be(2 * i)).wedge(&be(2 * j - 1)).neg();
                assert_eq!(sp(&al(2 * i - 1).wedge(&be(2 * j - 1))), rhs);
                assert_eq!(sp(&al(2 * j).wedge(&be(2 * i))), rhs);
                if i != j {
                    // (6) and (8), antisymmetric pairs
                    let rhs = be0.wedge(&be(2 * i)).wedge(&be(2 * j)).neg();
                    assert_eq!(sp(&al(2 * i - 1).wedge(&be(2 * j))), rhs);
                    assert_eq!(sp(&al(2 * j - 1).wedge(&be(2 * i))), rhs.neg());
                    let rhs = be0.wedge(&be(2 * i - 1)).wedge(&be(2 * j - 1));
                    assert_eq!(sp(&al(2 * i).wedge(&be(2 * j - 1))), rhs);
                    assert_eq!(sp(&al(2 * j).wedge(&be(2 * i - 1))), rhs.neg());
                }
            }
        }
        // {I, w} = 0 for w in V ^ V, V = span{beta, beta_1..beta_2n}
        for a in 0..=2 * n {
            for c in a + 1..=2 * n {
                let w = mono(dim, &[2 * n + 1 + a, 2 * n + 1 + c]);
                assert!(sp(&w).is_zero());
            }
        }
    }
}
