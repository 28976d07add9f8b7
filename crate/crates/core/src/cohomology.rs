//! Chevalley-Eilenberg cochain complexes with trivial coefficients and
//! their Betti numbers, built two ways.
//!
//! The standard differential extends d(ω_l) = −Σ_{i<j} c^l_{ij} ω_i∧ω_j as
//! an antiderivation. For a quadratic algebra the same cohomology is
//! computed from the super Poisson bracket as ∂ = −{I,·}; both routes
//! must produce equal per-degree kernel and image dimensions.
//!
//! Degree-k monomials are ordered colexicographically (ascending bitmask),
//! so every matrix and echelon basis is deterministic.

use std::collections::HashMap;

use crate::algebra::{BilinearForm, LieAlgebra};
use crate::error::Error;
use crate::exterior::{masks_of_weight, merge_sign, super_poisson, three_form, ExteriorForm};
use crate::linalg::{SparseMat, Subspace};
use crate::Result;

/// Which construction produced a complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DifferentialKind {
    /// Textbook Chevalley-Eilenberg differential from structure constants.
    Standard,
    /// ∂ = −{I,·} from the super Poisson bracket of a quadratic structure.
    Quadratic,
}

/// Per-degree differential matrices ∂_k : Λᵏ → Λᵏ⁺¹ together with their
/// exact ranks. `max_degree` caps how far the complex was built (the full
/// complex has `max_degree == dim`).
#[derive(Debug, Clone)]
pub struct CochainComplex {
    dim: usize,
    kind: DifferentialKind,
    max_degree: usize,
    diffs: Vec<SparseMat>,
    ranks: Vec<usize>,
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k.min(n - k) {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// d of each dual covector: d(ω_l) = −Σ_{i<j} c^l_{ij} ω_i∧ω_j.
fn covector_differentials(g: &LieAlgebra) -> Vec<ExteriorForm> {
    let n = g.dim();
    let mut out = vec![ExteriorForm::zero(n); n];
    for ((i, j), value) in g.bracket_table() {
        let sign = merge_sign(1 << i, 1 << j).expect("i < j");
        debug_assert_eq!(sign, 1);
        for (l, c) in value {
            out[*l].add_term((1 << i) | (1 << j), -c.clone());
        }
    }
    out
}

fn build_complex(
    dim: usize,
    kind: DifferentialKind,
    max_degree: usize,
    mut column_image: impl FnMut(usize, u64) -> ExteriorForm,
) -> CochainComplex {
    let max_degree = max_degree.min(dim);
    let mut diffs = Vec::with_capacity(max_degree + 1);
    for k in 0..=max_degree {
        let cols = masks_of_weight(dim, k);
        let rows = masks_of_weight(dim, k + 1);
        let row_index: HashMap<u64, usize> =
            rows.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut mat = SparseMat::zero(rows.len(), cols.len());
        for (ci, mask) in cols.iter().enumerate() {
            let image = column_image(k, *mask);
            for (m, c) in image.terms() {
                mat.add(row_index[&m], ci, c.clone());
            }
        }
        diffs.push(mat);
    }
    // d^2 = 0 on every consecutive pair that was built
    for k in 0..max_degree {
        assert!(
            diffs[k + 1].mul(&diffs[k]).is_zero(),
            "differential does not square to zero at degree {k}"
        );
    }
    let ranks = diffs.iter().map(SparseMat::rank).collect();
    CochainComplex {
        dim,
        kind,
        max_degree,
        diffs,
        ranks,
    }
}

/// The standard Chevalley-Eilenberg complex of g (trivial coefficients).
pub fn standard_ce_differential(g: &LieAlgebra) -> CochainComplex {
    standard_ce_differential_capped(g, g.dim())
}

/// Standard complex built only for degrees `0..=max_degree`.
pub fn standard_ce_differential_capped(g: &LieAlgebra, max_degree: usize) -> CochainComplex {
    let n = g.dim();
    let d1 = covector_differentials(g);
    build_complex(n, DifferentialKind::Standard, max_degree, |_, mask| {
        let mut image = ExteriorForm::zero(n);
        let mut rest = mask;
        let mut pos = 0u32;
        while rest != 0 {
            let l = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let others = mask & !(1u64 << l);
            for (abmask, c) in d1[l].terms() {
                if let Some(sign) = merge_sign(abmask, others) {
                    let v = if (pos % 2 == 1) ^ (sign < 0) {
                        -c.clone()
                    } else {
                        c.clone()
                    };
                    image.add_term(abmask | others, v);
                }
            }
            pos += 1;
        }
        image
    })
}

/// The quadratic differential ∂ = −{I,·} of a quadratic Lie algebra.
pub fn quadratic_differential(g: &LieAlgebra, b: &BilinearForm) -> Result<CochainComplex> {
    quadratic_differential_capped(g, b, g.dim())
}

/// Quadratic complex built only for degrees `0..=max_degree`.
pub fn quadratic_differential_capped(
    g: &LieAlgebra,
    b: &BilinearForm,
    max_degree: usize,
) -> Result<CochainComplex> {
    let n = g.dim();
    if !b.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let i_form = three_form(g, b)?;
    let mut failure: Option<Error> = None;
    let complex = build_complex(n, DifferentialKind::Quadratic, max_degree, |_, mask| {
        let monomial = ExteriorForm::from_terms(n, [(mask, crate::scalar::one())]);
        match super_poisson(b, &i_form, &monomial) {
            Ok(f) => f.neg(),
            Err(e) => {
                failure = Some(e);
                ExteriorForm::zero(n)
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(complex),
    }
}

impl CochainComplex {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> DifferentialKind {
        self.kind
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn is_full(&self) -> bool {
        self.max_degree == self.dim
    }

    /// Matrix of ∂_k (C(dim,k) columns, C(dim,k+1) rows).
    pub fn differential(&self, k: usize) -> &SparseMat {
        &self.diffs[k]
    }

    pub fn space_dim(&self, k: usize) -> usize {
        binom(self.dim, k)
    }

    pub fn rank(&self, k: usize) -> usize {
        if k > self.max_degree {
            panic!("degree {k} beyond computed cap {}", self.max_degree);
        }
        self.ranks[k]
    }

    pub fn kernel_dim(&self, k: usize) -> usize {
        self.space_dim(k) - self.rank(k)
    }

    /// Recomputes the ∂² products; true when all vanish.
    pub fn d_squared_is_zero(&self) -> bool {
        (0..self.max_degree).all(|k| self.diffs[k + 1].mul(&self.diffs[k]).is_zero())
    }

    /// b_k = dim ker ∂_k − rank ∂_{k−1}.
    pub fn betti(&self, k: usize) -> u64 {
        let ker = self.kernel_dim(k);
        let prev = if k == 0 { 0 } else { self.rank(k - 1) };
        debug_assert!(ker >= prev, "image not contained in kernel");
        (ker - prev) as u64
    }

    /// Betti numbers for all computed degrees (the full table when the
    /// complex is full).
    pub fn betti_values(&self) -> Vec<u64> {
        (0..=self.max_degree).map(|k| self.betti(k)).collect()
    }

    pub fn betti_table(&self, label: &str) -> Result<BettiTable> {
        if !self.is_full() {
            return Err(Error::BadParameter(format!(
                "complex capped at degree {} of {}; full table unavailable",
                self.max_degree, self.dim
            )));
        }
        BettiTable::new(label.to_string(), BettiMethod::Bruteforce, self.betti_values())
    }

    /// Echelon basis of ker ∂_k in degree-k monomial coordinates.
    pub fn kernel_subspace(&self, k: usize) -> Subspace {
        let sub = Subspace::from_spanning(self.space_dim(k), &self.diffs[k].kernel_basis());
        debug_assert_eq!(sub.dim(), self.kernel_dim(k));
        sub
    }

    /// Echelon basis of im ∂_k in degree-(k+1) monomial coordinates.
    pub fn image_subspace(&self, k: usize) -> Subspace {
        let rows = self.space_dim(k + 1);
        let cols = self.space_dim(k);
        let mut vectors = Vec::with_capacity(cols);
        let t = self.diffs[k].transpose();
        for c in 0..cols {
            let mut v = vec![crate::scalar::zero(); rows];
            for (r, val) in t.row_entries(c) {
                v[*r] = val.clone();
            }
            vectors.push(v);
        }
        let sub = Subspace::from_spanning(rows, &vectors);
        debug_assert_eq!(sub.dim(), self.rank(k));
        sub
    }
}

/// Betti table computed by the brute-force complex (quadratic route when a
/// form is supplied, standard route otherwise).
pub fn betti_bruteforce(
    g: &LieAlgebra,
    label: &str,
    b: Option<&BilinearForm>,
) -> Result<BettiTable> {
    let complex = match b {
        Some(b) => quadratic_differential(g, b)?,
        None => standard_ce_differential(g),
    };
    complex.betti_table(label)
}

/// Provenance of a Betti table. The string forms double as the CLI
/// `--method` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BettiMethod {
    Bruteforce,
    Theorem2,
    Pouseele,
    Cor25,
}

impl BettiMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            BettiMethod::Bruteforce => "bruteforce",
            BettiMethod::Theorem2 => "theorem2",
            BettiMethod::Pouseele => "pouseele",
            BettiMethod::Cor25 => "cor25",
        }
    }
}

impl std::str::FromStr for BettiMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bruteforce" => Ok(BettiMethod::Bruteforce),
            "theorem2" => Ok(BettiMethod::Theorem2),
            "pouseele" => Ok(BettiMethod::Pouseele),
            "cor25" => Ok(BettiMethod::Cor25),
            other => Err(Error::BadParameter(format!("unknown method {other:?}"))),
        }
    }
}

/// Degree-indexed Betti numbers b_0..b_N with provenance. Construction
/// checks b_0 = 1 and the vanishing of the Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    label: String,
    method: BettiMethod,
    values: Vec<u64>,
}

impl BettiTable {
    pub fn new(label: String, method: BettiMethod, values: Vec<u64>) -> Result<Self> {
        if values.is_empty() || values[0] != 1 {
            return Err(Error::BadParameter("Betti table must start with b_0 = 1".into()));
        }
        if values.len() > 1 {
            let euler: i128 = values
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    let v = *v as i128;
                    if k % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                })
                .sum();
            if euler != 0 {
                return Err(Error::BadParameter(format!(
                    "Euler characteristic {euler} nonzero"
                )));
            }
        }
        Ok(BettiTable {
            label,
            method,
            values,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn method(&self) -> BettiMethod {
        self.method
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Top degree N (table covers 0..=N).
    pub fn top_degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_poincare_symmetric(&self) -> bool {
        let n = self.values.len();
        (0..n).all(|k| self.values[k] == self.values[n - 1 - k])
    }
}

/// Degree-2 cocycles, coboundaries and the quotient dimension of a
/// quadratic Lie algebra, in colex Λ² coordinates.
#[derive(Debug, Clone)]
pub struct Degree2Spaces {
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    pub h2_dim: usize,
}

pub fn degree2_spaces(g: &LieAlgebra, b: &BilinearForm) -> Result<Degree2Spaces> {
    let complex = quadratic_differential_capped(g, b, 3.min(g.dim()))?;
    let cocycles = complex.kernel_subspace(2);
    let coboundaries = complex.image_subspace(1);
    assert!(
        cocycles.contains_all(&coboundaries),
        "coboundaries must be cocycles"
    );
    let h2_dim = cocycles.dim() - coboundaries.dim();
    Ok(Degree2Spaces {
        cocycles,
        coboundaries,
        h2_dim,
    })
}
