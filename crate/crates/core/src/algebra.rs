//! Finite-dimensional Lie algebras over ℚ given by structure constants,
//! bilinear forms, derivation spaces and the symplectic machinery of
//! quadratic Lie algebras.
//!
//! A quadratic Lie algebra is a pair (g, B) with B nondegenerate,
//! symmetric and invariant: B([X,Y],Z) = B(X,[Y,Z]). Throughout, skew
//! symmetry of a derivation D means B(DX,Y) = −B(X,DY).

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::Error;
use crate::exterior::ExteriorForm;
use crate::linalg::{solve_columns, SparseMat, Subspace};
use crate::scalar::Scalar;
use crate::Result;

/// Sparse coefficient vector of a bracket value.
pub type BracketValue = Vec<(usize, Scalar)>;

/// A Lie algebra over ℚ: a basis with labels and the table of brackets
/// [e_i, e_j] for i < j (antisymmetry supplies the rest). Construction via
/// [`build_lie_algebra`] guarantees the Jacobi identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), BracketValue>,
}

/// Validates and canonicalizes a bracket table into a [`LieAlgebra`].
///
/// Pairs may come in any order; (j, i) entries are folded into (i, j) with
/// a sign flip. The Jacobi identity is checked exactly on every basis
/// triple and the offending residual is reported on failure.
pub fn build_lie_algebra(
    dim: usize,
    labels: Vec<String>,
    brackets: impl IntoIterator<Item = ((usize, usize), BracketValue)>,
) -> Result<LieAlgebra> {
    if labels.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: labels.len(),
        });
    }
    let mut table: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
    for ((i, j), value) in brackets {
        for idx in [i, j] {
            if idx >= dim {
                return Err(Error::IndexOutOfRange { index: idx, dim });
            }
        }
        if i == j {
            if value.iter().any(|(_, c)| !c.is_zero()) {
                return Err(Error::BadParameter(format!(
                    "bracket [e{i},e{i}] must vanish"
                )));
            }
            continue;
        }
        let (key, flip) = if i < j { ((i, j), false) } else { ((j, i), true) };
        let entry = table.entry(key).or_default();
        for (k, c) in value {
            if k >= dim {
                return Err(Error::IndexOutOfRange { index: k, dim });
            }
            let v = if flip { -c } else { c };
            let slot = entry.entry(k).or_insert_with(crate::scalar::zero);
            *slot += v;
        }
    }
    let brackets = table
        .into_iter()
        .map(|(k, v)| {
            (
                k,
                v.into_iter().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>(),
            )
        })
        .filter(|(_, v)| !v.is_empty())
        .collect();
    let g = LieAlgebra {
        dim,
        labels,
        brackets,
    };
    g.check_jacobi()?;
    Ok(g)
}

impl LieAlgebra {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Stored bracket table, keys (i, j) with i < j.
    pub fn bracket_table(&self) -> &BTreeMap<(usize, usize), BracketValue> {
        &self.brackets
    }

    /// [e_i, e_j] as a sparse coefficient vector, any index order.
    pub fn bracket_basis(&self, i: usize, j: usize) -> BracketValue {
        if i == j {
            return Vec::new();
        }
        let (key, flip) = if i < j { ((i, j), false) } else { ((j, i), true) };
        match self.brackets.get(&key) {
            None => Vec::new(),
            Some(v) if !flip => v.clone(),
            Some(v) => v.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, v: &[Scalar], w: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.dim || w.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: if v.len() != self.dim { v.len() } else { w.len() },
            });
        }
        let mut out = vec![crate::scalar::zero(); self.dim];
        for ((i, j), value) in &self.brackets {
            let coeff = &v[*i] * &w[*j] - &v[*j] * &w[*i];
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in value {
                out[*k] += &coeff * c;
            }
        }
        Ok(out)
    }

    fn check_jacobi(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let mut residual = vec![crate::scalar::zero(); self.dim];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (l, cl) in self.bracket_basis(b, c) {
                            for (m, cm) in self.bracket_basis(a, l) {
                                residual[m] += &cl * &cm;
                            }
                        }
                    }
                    if residual.iter().any(|x| !x.is_zero()) {
                        return Err(Error::JacobiViolation { i, j, k, residual });
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of ad(e_i): column j holds [e_i, e_j].
    pub fn ad_basis(&self, i: usize) -> LinearEndo {
        let mut mat = vec![vec![crate::scalar::zero(); self.dim]; self.dim];
        for j in 0..self.dim {
            for (k, c) in self.bracket_basis(i, j) {
                mat[k][j] = c;
            }
        }
        LinearEndo::new(mat)
    }

    /// Matrix of ad(x) for an arbitrary vector x.
    pub fn ad_of(&self, x: &[Scalar]) -> Result<LinearEndo> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut mat = vec![vec![crate::scalar::zero(); self.dim]; self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.bracket_basis(i, j) {
                    mat[k][j] += xi * &c;
                }
            }
        }
        Ok(LinearEndo::new(mat))
    }

    /// Span of all bracket values [g, g].
    pub fn derived_subalgebra(&self) -> Subspace {
        let vectors: Vec<Vec<Scalar>> = self
            .brackets
            .values()
            .map(|value| {
                let mut v = vec![crate::scalar::zero(); self.dim];
                for (k, c) in value {
                    v[*k] = c.clone();
                }
                v
            })
            .collect();
        Subspace::from_spanning(self.dim, &vectors)
    }

    /// Kernel of x ↦ ad(x).
    pub fn center(&self) -> Subspace {
        let mut m = SparseMat::zero(self.dim * self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.bracket_basis(i, j) {
                    m.add(j * self.dim + k, i, c);
                }
            }
        }
        Subspace::from_spanning(self.dim, &m.kernel_basis())
    }

    /// Invariance of a symmetric form: B([X,Y],Z) = B(X,[Y,Z]) on all
    /// basis triples.
    pub fn is_invariant_form(&self, b: &BilinearForm) -> bool {
        if b.dim() != self.dim {
            return false;
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let bij = self.bracket_basis(i, j);
                for k in 0..self.dim {
                    let mut lhs = crate::scalar::zero();
                    for (l, c) in &bij {
                        lhs += c * &b.entry(*l, k);
                    }
                    let mut rhs = crate::scalar::zero();
                    for (l, c) in self.bracket_basis(j, k) {
                        rhs += &c * &b.entry(i, l);
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A linear endomorphism in basis coordinates; `mat[a][b]` is the
/// coefficient of e_a in the image of e_b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearEndo {
    mat: Vec<Vec<Scalar>>,
}

impl LinearEndo {
    pub fn new(mat: Vec<Vec<Scalar>>) -> Self {
        let n = mat.len();
        assert!(mat.iter().all(|r| r.len() == n), "endomorphism not square");
        LinearEndo { mat }
    }

    pub fn zero(dim: usize) -> Self {
        LinearEndo {
            mat: vec![vec![crate::scalar::zero(); dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.len()
    }

    pub fn matrix(&self) -> &Vec<Vec<Scalar>> {
        &self.mat
    }

    pub fn entry(&self, a: usize, b: usize) -> &Scalar {
        &self.mat[a][b]
    }

    pub fn is_zero(&self) -> bool {
        self.mat.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim());
        self.mat
            .iter()
            .map(|row| {
                let mut s = crate::scalar::zero();
                for (c, v) in row.iter().enumerate() {
                    if !v.is_zero() && !x[c].is_zero() {
                        s += v * &x[c];
                    }
                }
                s
            })
            .collect()
    }

    pub fn compose(&self, other: &LinearEndo) -> LinearEndo {
        let n = self.dim();
        assert_eq!(n, other.dim());
        let mut mat = vec![vec![crate::scalar::zero(); n]; n];
        for a in 0..n {
            for k in 0..n {
                if self.mat[a][k].is_zero() {
                    continue;
                }
                for b in 0..n {
                    if !other.mat[k][b].is_zero() {
                        mat[a][b] += &self.mat[a][k] * &other.mat[k][b];
                    }
                }
            }
        }
        LinearEndo { mat }
    }

    pub fn commutator(&self, other: &LinearEndo) -> LinearEndo {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn add(&self, other: &LinearEndo) -> LinearEndo {
        let n = self.dim();
        assert_eq!(n, other.dim());
        let mat = (0..n)
            .map(|a| (0..n).map(|b| &self.mat[a][b] + &other.mat[a][b]).collect())
            .collect();
        LinearEndo { mat }
    }

    pub fn sub(&self, other: &LinearEndo) -> LinearEndo {
        let n = self.dim();
        assert_eq!(n, other.dim());
        let mat = (0..n)
            .map(|a| (0..n).map(|b| &self.mat[a][b] - &other.mat[a][b]).collect())
            .collect();
        LinearEndo { mat }
    }

    pub fn scale(&self, s: &Scalar) -> LinearEndo {
        let mat = self
            .mat
            .iter()
            .map(|r| r.iter().map(|v| v * s).collect())
            .collect();
        LinearEndo { mat }
    }

    /// Row-major vectorization, the coordinate system used by derivation
    /// subspaces.
    pub fn to_vec(&self) -> Vec<Scalar> {
        self.mat.iter().flat_map(|r| r.iter().cloned()).collect()
    }

    pub fn from_vec(dim: usize, v: &[Scalar]) -> Self {
        assert_eq!(v.len(), dim * dim);
        let mat = (0..dim)
            .map(|a| v[a * dim..(a + 1) * dim].to_vec())
            .collect();
        LinearEndo { mat }
    }
}

/// A bilinear form on g as a dense Gram matrix. Houses both the invariant
/// symmetric form B of a quadratic structure and antisymmetric 2-form
/// candidates ω; the `symmetric` flag records which discipline the matrix
/// was validated under. The inverse Gram matrix is cached on first use.
#[derive(Debug)]
pub struct BilinearForm {
    gram: Vec<Vec<Scalar>>,
    symmetric: bool,
    inverse: OnceLock<Option<Vec<Vec<Scalar>>>>,
}

impl Clone for BilinearForm {
    fn clone(&self) -> Self {
        BilinearForm {
            gram: self.gram.clone(),
            symmetric: self.symmetric,
            inverse: OnceLock::new(),
        }
    }
}

impl PartialEq for BilinearForm {
    fn eq(&self, other: &Self) -> bool {
        self.gram == other.gram && self.symmetric == other.symmetric
    }
}
impl Eq for BilinearForm {}

impl BilinearForm {
    /// A validated symmetric form.
    pub fn symmetric(gram: Vec<Vec<Scalar>>) -> Result<Self> {
        Self::check_square(&gram)?;
        let n = gram.len();
        for i in 0..n {
            for j in i + 1..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(BilinearForm {
            gram,
            symmetric: true,
            inverse: OnceLock::new(),
        })
    }

    /// A validated antisymmetric form (ω candidates).
    pub fn antisymmetric(gram: Vec<Vec<Scalar>>) -> Result<Self> {
        Self::check_square(&gram)?;
        let n = gram.len();
        for i in 0..n {
            for j in i..n {
                if gram[i][j] != -gram[j][i].clone() {
                    return Err(Error::NotAntisymmetric);
                }
            }
        }
        Ok(BilinearForm {
            gram,
            symmetric: false,
            inverse: OnceLock::new(),
        })
    }

    fn check_square(gram: &[Vec<Scalar>]) -> Result<()> {
        let n = gram.len();
        for row in gram {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn gram(&self) -> &Vec<Vec<Scalar>> {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.gram[i][j].clone()
    }

    pub fn apply(&self, v: &[Scalar], w: &[Scalar]) -> Scalar {
        assert_eq!(v.len(), self.dim());
        assert_eq!(w.len(), self.dim());
        let mut s = crate::scalar::zero();
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, wj) in w.iter().enumerate() {
                if !wj.is_zero() && !self.gram[i][j].is_zero() {
                    s += vi * &self.gram[i][j] * wj;
                }
            }
        }
        s
    }

    pub fn inverse_gram(&self) -> Option<&Vec<Vec<Scalar>>> {
        self.inverse
            .get_or_init(|| crate::linalg::invert_dense(&self.gram))
            .as_ref()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.inverse_gram().is_some()
    }

    /// The 2-form Σ_{i<j} M_ij ω_i∧ω_j of an antisymmetric Gram matrix.
    pub fn to_two_form(&self) -> ExteriorForm {
        let n = self.dim();
        let mut f = ExteriorForm::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                f.add_term((1 << i) | (1 << j), self.gram[i][j].clone());
            }
        }
        f
    }
}

fn require_quadratic(g: &LieAlgebra, b: &BilinearForm) -> Result<()> {
    if b.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: b.dim(),
        });
    }
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !g.is_invariant_form(b) {
        return Err(Error::FormNotInvariant);
    }
    if !b.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    Ok(())
}

/// Constraint rows expressing "D is a derivation", over row-major
/// vectorized endomorphisms.
fn derivation_constraints(g: &LieAlgebra) -> SparseMat {
    let n = g.dim();
    let mut m = SparseMat::zero(n * n * (n - 1) / 2, n * n);
    let mut row = 0;
    for i in 0..n {
        for j in i + 1..n {
            let bij = g.bracket_basis(i, j);
            for k in 0..n {
                // D([e_i,e_j])_k = [D e_i, e_j]_k + [e_i, D e_j]_k
                for (l, c) in &bij {
                    m.add(row + k, k * n + l, c.clone());
                }
                for a in 0..n {
                    for (kk, c) in g.bracket_basis(a, j) {
                        if kk == k {
                            m.add(row + k, a * n + i, -c);
                        }
                    }
                    for (kk, c) in g.bracket_basis(i, a) {
                        if kk == k {
                            m.add(row + k, a * n + j, -c);
                        }
                    }
                }
            }
            row += n;
        }
    }
    m
}

/// All derivations of g, as a subspace of vectorized endomorphisms.
pub fn derivation_space(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    if n < 2 {
        // no bracket constraints at all
        return Subspace::from_spanning(
            n * n,
            &(0..n * n)
                .map(|i| {
                    let mut v = vec![crate::scalar::zero(); n * n];
                    v[i] = crate::scalar::one();
                    v
                })
                .collect::<Vec<_>>(),
        );
    }
    let m = derivation_constraints(g);
    Subspace::from_spanning(n * n, &m.kernel_basis())
}

/// Skew-symmetric derivations of a quadratic (g, B):
/// D[X,Y] = [DX,Y] + [X,DY] and B(DX,Y) = −B(X,DY).
pub fn skew_derivation_space(g: &LieAlgebra, b: &BilinearForm) -> Result<Subspace> {
    require_quadratic(g, b)?;
    let n = g.dim();
    let base = if n < 2 {
        SparseMat::zero(0, n * n)
    } else {
        derivation_constraints(g)
    };
    let skew_rows = n * (n + 1) / 2;
    let mut m = SparseMat::zero(base.rows() + skew_rows, n * n);
    for r in 0..base.rows() {
        for (c, v) in base.row_entries(r) {
            m.add(r, *c, v.clone());
        }
    }
    let mut row = base.rows();
    for i in 0..n {
        for j in i..n {
            // B(D e_i, e_j) + B(e_i, D e_j) = 0
            for a in 0..n {
                let baj = b.entry(a, j);
                if !baj.is_zero() {
                    m.add(row, a * n + i, baj);
                }
                let bia = b.entry(i, a);
                if !bia.is_zero() {
                    m.add(row, a * n + j, bia);
                }
            }
            row += 1;
        }
    }
    Ok(Subspace::from_spanning(n * n, &m.kernel_basis()))
}

/// Span of the adjoint maps {ad(e_i)}; its dimension is
/// dim g − dim center(g).
pub fn inner_derivations(g: &LieAlgebra) -> Subspace {
    let vectors: Vec<Vec<Scalar>> = (0..g.dim()).map(|i| g.ad_basis(i).to_vec()).collect();
    Subspace::from_spanning(g.dim() * g.dim(), &vectors)
}

fn is_derivation(g: &LieAlgebra, d: &LinearEndo) -> bool {
    let n = g.dim();
    for i in 0..n {
        for j in i + 1..n {
            let mut lhs = vec![crate::scalar::zero(); n];
            for (l, c) in g.bracket_basis(i, j) {
                for (a, row) in d.matrix().iter().enumerate() {
                    if !row[l].is_zero() {
                        lhs[a] += &c * &row[l];
                    }
                }
            }
            let dei: Vec<Scalar> = (0..n).map(|a| d.entry(a, i).clone()).collect();
            let dej: Vec<Scalar> = (0..n).map(|a| d.entry(a, j).clone()).collect();
            let ei: Vec<Scalar> = (0..n)
                .map(|a| if a == i { crate::scalar::one() } else { crate::scalar::zero() })
                .collect();
            let ej: Vec<Scalar> = (0..n)
                .map(|a| if a == j { crate::scalar::one() } else { crate::scalar::zero() })
                .collect();
            let rhs1 = g.bracket(&dei, &ej).expect("dims agree");
            let rhs2 = g.bracket(&ei, &dej).expect("dims agree");
            for a in 0..n {
                if lhs[a] != &rhs1[a] + &rhs2[a] {
                    return false;
                }
            }
        }
    }
    true
}

fn is_skew_for(b: &BilinearForm, d: &LinearEndo) -> bool {
    let n = b.dim();
    for i in 0..n {
        for j in i..n {
            let mut s = crate::scalar::zero();
            for a in 0..n {
                if !d.entry(a, i).is_zero() {
                    s += d.entry(a, i) * &b.entry(a, j);
                }
                if !d.entry(a, j).is_zero() {
                    s += &b.entry(i, a) * d.entry(a, j);
                }
            }
            if !s.is_zero() {
                return false;
            }
        }
    }
    true
}

/// The 2-form Ω(X,Y) = B(D(X),Y) of a skew-symmetric derivation D.
///
/// This is one direction of the isomorphism between Der_a(g,B) and the
/// degree-2 cocycles {Ω | {I,Ω} = 0}; inner derivations land on the
/// contractions ι_X(I).
pub fn skew_derivation_to_two_form(
    g: &LieAlgebra,
    b: &BilinearForm,
    d: &LinearEndo,
) -> Result<ExteriorForm> {
    require_quadratic(g, b)?;
    if d.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: d.dim(),
        });
    }
    if !is_derivation(g, d) || !is_skew_for(b, d) {
        return Err(Error::NotSkewDerivation);
    }
    let n = g.dim();
    let mut f = ExteriorForm::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            // Omega(e_i, e_j) = B(D e_i, e_j)
            let mut v = crate::scalar::zero();
            for a in 0..n {
                if !d.entry(a, i).is_zero() {
                    v += d.entry(a, i) * &b.entry(a, j);
                }
            }
            f.add_term((1 << i) | (1 << j), v);
        }
    }
    Ok(f)
}

/// Inverse of [`skew_derivation_to_two_form`]: D = −G⁻¹M where M is the
/// coefficient matrix of the 2-form. Errors with `NotSkewDerivation` when
/// the form is not in the image (i.e. not a cocycle).
pub fn two_form_to_skew_derivation(
    g: &LieAlgebra,
    b: &BilinearForm,
    omega: &ExteriorForm,
) -> Result<LinearEndo> {
    require_quadratic(g, b)?;
    if omega.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: omega.dim(),
        });
    }
    if !omega.is_zero() && omega.homogeneous_degree() != Some(2) {
        return Err(Error::BadParameter("expected a 2-form".into()));
    }
    let n = g.dim();
    let ginv = b.inverse_gram().ok_or(Error::DegenerateForm)?;
    let mut mat = vec![vec![crate::scalar::zero(); n]; n];
    for a in 0..n {
        for c in 0..n {
            // M[l][c] = Omega(e_l, e_c), D = -G^{-1} M
            let mut v = crate::scalar::zero();
            for l in 0..n {
                if ginv[a][l].is_zero() {
                    continue;
                }
                let m_lc = if l < c {
                    omega.coeff((1 << l) | (1 << c))
                } else if c < l {
                    -omega.coeff((1 << c) | (1 << l))
                } else {
                    crate::scalar::zero()
                };
                if !m_lc.is_zero() {
                    v -= &ginv[a][l] * m_lc;
                }
            }
            mat[a][c] = v;
        }
    }
    let d = LinearEndo::new(mat);
    if !is_derivation(g, &d) || !is_skew_for(b, &d) {
        return Err(Error::NotSkewDerivation);
    }
    Ok(d)
}

/// Whether ω is a symplectic structure on g: nondegenerate, antisymmetric
/// and a 2-cocycle, ω([X,Y],Z) + ω([Y,Z],X) + ω([Z,X],Y) = 0 on all basis
/// triples. (For quadratic g this is equivalent to {I, ω} = 0.)
pub fn symplectic_check(g: &LieAlgebra, omega: &BilinearForm) -> Result<bool> {
    if omega.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: omega.dim(),
        });
    }
    if omega.is_symmetric() {
        return Err(Error::NotAntisymmetric);
    }
    if !omega.is_nondegenerate() {
        return Ok(false);
    }
    let n = g.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut s = crate::scalar::zero();
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for (l, coeff) in g.bracket_basis(a, b) {
                        s += &coeff * &omega.entry(l, c);
                    }
                }
                if !s.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The invertible derivation 𝒟 of ad(g) attached to a symplectic
/// quadratic Lie algebra (g, B, ω):
/// 𝒟(ad X) = ad(φ⁻¹(ι_X ω)) with φ(X) = B(X,·).
///
/// The returned matrix acts on coordinates in the echelon basis of ad(g).
/// Construction verifies well-definedness (constancy on fibers of
/// X ↦ ad X), the Leibniz rule on ad(g) and invertibility.
#[derive(Debug, Clone)]
pub struct SymplecticDerivation {
    ad_basis: Subspace,
    matrix: Vec<Vec<Scalar>>,
    commutator_matrix: Vec<Vec<Scalar>>,
}

impl SymplecticDerivation {
    /// Echelon basis of ad(g) in vectorized endomorphism coordinates.
    pub fn ad_basis(&self) -> &Subspace {
        &self.ad_basis
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// Matrix of 𝒟 in the echelon ad(g) basis.
    pub fn matrix(&self) -> &Vec<Vec<Scalar>> {
        &self.matrix
    }

    /// Matrix of A ↦ [A, D_ω] on the same basis, where D_ω is the skew
    /// derivation with ω(X,Y) = B(D_ω X, Y). Kept as a diagnostic: it
    /// equals −𝒟.
    pub fn commutator_matrix(&self) -> &Vec<Vec<Scalar>> {
        &self.commutator_matrix
    }

    /// Coordinates of an endomorphism in the echelon ad(g) basis, if it
    /// lies in ad(g).
    pub fn coords_of(&self, endo: &LinearEndo) -> Option<Vec<Scalar>> {
        self.ad_basis.coordinates(&endo.to_vec())
    }

    pub fn apply(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        self.matrix
            .iter()
            .map(|row| {
                let mut s = crate::scalar::zero();
                for (c, v) in row.iter().enumerate() {
                    if !v.is_zero() && !coords[c].is_zero() {
                        s += v * &coords[c];
                    }
                }
                s
            })
            .collect()
    }

    pub fn det(&self) -> Scalar {
        crate::linalg::det_dense(&self.matrix)
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }
}

pub fn symplectic_ad_derivation(
    g: &LieAlgebra,
    b: &BilinearForm,
    omega: &BilinearForm,
) -> Result<SymplecticDerivation> {
    require_quadratic(g, b)?;
    if !symplectic_check(g, omega)? {
        return Err(Error::NotSymplectic);
    }
    let n = g.dim();
    let ginv = b.inverse_gram().ok_or(Error::DegenerateForm)?;

    // D_omega(X) = phi^{-1}(iota_X omega) = -G^{-1} W X
    let mut dmat = vec![vec![crate::scalar::zero(); n]; n];
    for a in 0..n {
        for c in 0..n {
            let mut v = crate::scalar::zero();
            for l in 0..n {
                if !ginv[a][l].is_zero() && !omega.entry(l, c).is_zero() {
                    v -= &ginv[a][l] * &omega.entry(l, c);
                }
            }
            dmat[a][c] = v;
        }
    }
    let d_omega = LinearEndo::new(dmat);

    // well-definedness: the center must be stable under D_omega
    let center = g.center();
    for z in center.basis() {
        let y = d_omega.apply(z);
        let ad_y = g.ad_of(&y)?;
        if !ad_y.is_zero() {
            return Err(Error::WellDefinedness(
                "a central element maps to a non-central one".into(),
            ));
        }
    }

    let ad_basis = inner_derivations(g);
    let r = ad_basis.dim();
    // lift each echelon basis element of ad(g) to some X with ad(X) = A_t
    let mut ad_cols = SparseMat::zero(n * n, n);
    for i in 0..n {
        for (row, v) in g.ad_basis(i).to_vec().into_iter().enumerate() {
            if !v.is_zero() {
                ad_cols.add(row, i, v);
            }
        }
    }
    let targets: Vec<Vec<Scalar>> = ad_basis.basis().to_vec();
    let lifts = solve_columns(&ad_cols, &targets)
        .expect("echelon basis of ad(g) lies in the image of X -> ad(X)");

    let mut matrix = vec![vec![crate::scalar::zero(); r]; r];
    let mut comm = vec![vec![crate::scalar::zero(); r]; r];
    for (t, x) in lifts.iter().enumerate() {
        let y = d_omega.apply(x);
        let image = g.ad_of(&y)?;
        let coords = ad_basis
            .coordinates(&image.to_vec())
            .expect("iota_X(omega) corresponds to an inner derivation");
        for (s, v) in coords.into_iter().enumerate() {
            matrix[s][t] = v;
        }
        let a_t = g.ad_of(x)?;
        let comm_image = a_t.commutator(&d_omega);
        let coords = ad_basis
            .coordinates(&comm_image.to_vec())
            .expect("[ad X, D_omega] is inner");
        for (s, v) in coords.into_iter().enumerate() {
            comm[s][t] = v;
        }
    }
    let result = SymplecticDerivation {
        ad_basis,
        matrix,
        commutator_matrix: comm,
    };

    // Leibniz rule of D on ad(g), and invertibility; both are guaranteed
    // for genuine symplectic quadratic input, so failure means a bug.
    let basis_endos: Vec<LinearEndo> = result
        .ad_basis
        .basis()
        .iter()
        .map(|v| LinearEndo::from_vec(n, v))
        .collect();
    for (s, a) in basis_endos.iter().enumerate() {
        let mut ea = vec![crate::scalar::zero(); r];
        ea[s] = crate::scalar::one();
        let da = endo_from_coords(&basis_endos, &result.apply(&ea));
        for (t, bb) in basis_endos.iter().enumerate() {
            let mut eb = vec![crate::scalar::zero(); r];
            eb[t] = crate::scalar::one();
            let db = endo_from_coords(&basis_endos, &result.apply(&eb));
            let lhs_endo = a.commutator(bb);
            let lhs = result
                .coords_of(&lhs_endo)
                .expect("ad(g) is closed under the commutator");
            let rhs_endo = da.commutator(bb).add(&a.commutator(&db));
            let rhs = result.coords_of(&rhs_endo).expect("closed under commutator");
            assert_eq!(
                result.apply(&lhs),
                rhs,
                "derivation property of the symplectic map failed"
            );
        }
    }
    assert!(
        result.is_invertible(),
        "symplectic map on ad(g) must be invertible"
    );
    Ok(result)
}

fn endo_from_coords(basis: &[LinearEndo], coords: &[Scalar]) -> LinearEndo {
    let dim = basis.first().map_or(0, LinearEndo::dim);
    let mut acc = LinearEndo::zero(dim);
    for (b, c) in basis.iter().zip(coords) {
        if !c.is_zero() {
            acc = acc.add(&b.scale(c));
        }
    }
    acc
}
