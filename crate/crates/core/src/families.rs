//! Constructors for the concrete Lie algebra families the engine ships
//! with, each with its canonical bilinear form where one exists.
//!
//! Basis orders are fixed once and for all (they pin every sign in the
//! golden tests):
//!   g2n2(n):      X_0..X_n, Y_0..Y_n, dim 2n+2
//!   jordan(p):    X_0..X_p, Y_0..Y_p, dim 2p+2
//!   heisenberg(n): x_0, x_1..x_n, y_1..y_n, dim 2n+1
//!   f(n):         y, x_1..x_n, y_1..y_n, dim 2n+1
//!   g4n2(n):      X, X_1..X_2n, Y, Y_1..Y_2n, dim 4n+2

use crate::algebra::{build_lie_algebra, BilinearForm, LieAlgebra};
use crate::error::Error;
use crate::scalar::{int, Scalar};
use crate::Result;

/// Identifiers for the shipped families; the two six-dimensional "g"
/// families stay distinct ids throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    G2n2,
    Jordan,
    Heisenberg,
    F,
    G4n2,
}

impl FamilyId {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyId::G2n2 => "g2n2",
            FamilyId::Jordan => "jordan",
            FamilyId::Heisenberg => "heisenberg",
            FamilyId::F => "f",
            FamilyId::G4n2 => "g4n2",
        }
    }

    /// Name of the size parameter ("n" or "p").
    pub fn param_name(&self) -> &'static str {
        match self {
            FamilyId::Jordan => "p",
            _ => "n",
        }
    }
}

impl std::str::FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g2n2" => Ok(FamilyId::G2n2),
            "jordan" => Ok(FamilyId::Jordan),
            "heisenberg" => Ok(FamilyId::Heisenberg),
            "f" => Ok(FamilyId::F),
            "g4n2" => Ok(FamilyId::G4n2),
            other => Err(Error::BadParameter(format!("unknown family {other:?}"))),
        }
    }
}

/// A family together with its size parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub id: FamilyId,
    pub param: usize,
}

/// A constructed family member: the algebra, its invariant form when the
/// family is quadratic, and the symplectic form when one is canonical.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub label: String,
    pub algebra: LieAlgebra,
    pub form: Option<BilinearForm>,
    pub omega: Option<BilinearForm>,
}

impl FamilySpec {
    pub fn new(id: FamilyId, param: usize) -> Self {
        FamilySpec { id, param }
    }

    pub fn label(&self) -> String {
        format!("{}({}={})", self.id.as_str(), self.id.param_name(), self.param)
    }

    pub fn build(&self) -> Result<FamilyInstance> {
        let label = self.label();
        match self.id {
            FamilyId::G2n2 => {
                let (g, b) = make_g2n2(self.param)?;
                Ok(FamilyInstance {
                    label,
                    algebra: g,
                    form: Some(b),
                    omega: None,
                })
            }
            FamilyId::Jordan => {
                let (g, b, w) = make_jordan(self.param)?;
                Ok(FamilyInstance {
                    label,
                    algebra: g,
                    form: Some(b),
                    omega: Some(w),
                })
            }
            FamilyId::Heisenberg => Ok(FamilyInstance {
                label,
                algebra: make_heisenberg(self.param)?,
                form: None,
                omega: None,
            }),
            FamilyId::F => Ok(FamilyInstance {
                label,
                algebra: make_f(self.param)?,
                form: None,
                omega: None,
            }),
            FamilyId::G4n2 => {
                let (g, b) = make_g4n2(self.param)?;
                Ok(FamilyInstance {
                    label,
                    algebra: g,
                    form: Some(b),
                    omega: None,
                })
            }
        }
    }
}

fn zero_gram(dim: usize) -> Vec<Vec<Scalar>> {
    vec![vec![crate::scalar::zero(); dim]; dim]
}

/// The solvable quadratic family of dimension 2n+2: nonzero brackets
/// [Y_0,X_i] = X_i, [Y_0,Y_i] = −Y_i, [X_i,Y_i] = X_0 (1 ≤ i ≤ n), with
/// B(X_i,Y_i) = 1 for 0 ≤ i ≤ n and zero otherwise.
pub fn make_g2n2(n: usize) -> Result<(LieAlgebra, BilinearForm)> {
    if n < 1 {
        return Err(Error::BadParameter("g2n2 requires n >= 1".into()));
    }
    let dim = 2 * n + 2;
    let x = |i: usize| i;
    let y = |i: usize| n + 1 + i;
    let mut labels = Vec::with_capacity(dim);
    labels.extend((0..=n).map(|i| format!("X{i}")));
    labels.extend((0..=n).map(|i| format!("Y{i}")));
    let mut brackets = Vec::new();
    for i in 1..=n {
        brackets.push(((y(0), x(i)), vec![(x(i), int(1))]));
        brackets.push(((y(0), y(i)), vec![(y(i), int(-1))]));
        brackets.push(((x(i), y(i)), vec![(x(0), int(1))]));
    }
    let g = build_lie_algebra(dim, labels, brackets)?;
    let mut gram = zero_gram(dim);
    for i in 0..=n {
        gram[x(i)][y(i)] = int(1);
        gram[y(i)][x(i)] = int(1);
    }
    let b = BilinearForm::symmetric(gram)?;
    assert!(g.is_invariant_form(&b));
    Ok((g, b))
}

/// The nilpotent Jordan-type family of dimension 2p+2. The map C acts as
/// the Jordan block on the X-block and its negated transpose on the
/// Y-block; brackets are [Y_0, Z] = C(Z) and [Z, W] = B(C(Z), W)·X_0 on
/// the span of X_1..X_p, Y_1..Y_p. Returned with the invariant form B and
/// the symplectic form ω = α∧β + Σ i·α_i∧β_i.
pub fn make_jordan(p: usize) -> Result<(LieAlgebra, BilinearForm, BilinearForm)> {
    if p < 2 {
        return Err(Error::BadParameter("jordan requires p >= 2".into()));
    }
    let dim = 2 * p + 2;
    let x = |i: usize| i;
    let y = |i: usize| p + 1 + i;
    let mut labels = Vec::with_capacity(dim);
    labels.extend((0..=p).map(|i| format!("X{i}")));
    labels.extend((0..=p).map(|i| format!("Y{i}")));
    let mut brackets = Vec::new();
    for j in 2..=p {
        // C(X_j) = X_{j-1}
        brackets.push(((y(0), x(j)), vec![(x(j - 1), int(1))]));
    }
    for j in 1..p {
        // C(Y_j) = -Y_{j+1}
        brackets.push(((y(0), y(j)), vec![(y(j + 1), int(-1))]));
        // [X_{j+1}, Y_j] = B(C(X_{j+1}), Y_j) X_0 = X_0
        brackets.push(((x(j + 1), y(j)), vec![(x(0), int(1))]));
    }
    let g = build_lie_algebra(dim, labels, brackets)?;
    let mut gram = zero_gram(dim);
    for i in 0..=p {
        gram[x(i)][y(i)] = int(1);
        gram[y(i)][x(i)] = int(1);
    }
    let b = BilinearForm::symmetric(gram)?;
    assert!(g.is_invariant_form(&b));
    let mut w = zero_gram(dim);
    w[x(0)][y(0)] = int(1);
    w[y(0)][x(0)] = int(-1);
    for i in 1..=p {
        w[x(i)][y(i)] = int(i as i64);
        w[y(i)][x(i)] = int(-(i as i64));
    }
    let omega = BilinearForm::antisymmetric(w)?;
    Ok((g, b, omega))
}

/// The Heisenberg algebra of dimension 2n+1: [x_i, y_i] = x_0.
pub fn make_heisenberg(n: usize) -> Result<LieAlgebra> {
    if n < 1 {
        return Err(Error::BadParameter("heisenberg requires n >= 1".into()));
    }
    let dim = 2 * n + 1;
    let mut labels = vec!["x0".to_string()];
    labels.extend((1..=n).map(|i| format!("x{i}")));
    labels.extend((1..=n).map(|i| format!("y{i}")));
    let brackets = (1..=n)
        .map(|i| ((i, n + i), vec![(0, int(1))]))
        .collect::<Vec<_>>();
    build_lie_algebra(dim, labels, brackets)
}

/// The solvable algebra of dimension 2n+1 with [y, x_i] = x_i and
/// [y, y_i] = −y_i; the quotient of `g2n2(n)` by its center.
pub fn make_f(n: usize) -> Result<LieAlgebra> {
    if n < 1 {
        return Err(Error::BadParameter("f requires n >= 1".into()));
    }
    let dim = 2 * n + 1;
    let mut labels = vec!["y".to_string()];
    labels.extend((1..=n).map(|i| format!("x{i}")));
    labels.extend((1..=n).map(|i| format!("y{i}")));
    let mut brackets = Vec::new();
    for i in 1..=n {
        brackets.push(((0, i), vec![(i, int(1))]));
        brackets.push(((0, n + i), vec![(n + i, int(-1))]));
    }
    build_lie_algebra(dim, labels, brackets)
}

/// The 2-step nilpotent quadratic family of dimension 4n+2:
/// [Y,Y_{2i−1}] = X_{2i}, [Y,Y_{2i}] = −X_{2i−1}, [Y_{2i−1},Y_{2i}] = X,
/// with B(X,Y) = B(X_i,Y_i) = 1 and zero otherwise.
pub fn make_g4n2(n: usize) -> Result<(LieAlgebra, BilinearForm)> {
    if n < 1 {
        return Err(Error::BadParameter("g4n2 requires n >= 1".into()));
    }
    let dim = 4 * n + 2;
    let x = |i: usize| i; // X = x(0), X_i = x(i)
    let y = |i: usize| 2 * n + 1 + i; // Y = y(0), Y_i = y(i)
    let mut labels = Vec::with_capacity(dim);
    labels.push("X".to_string());
    labels.extend((1..=2 * n).map(|i| format!("X{i}")));
    labels.push("Y".to_string());
    labels.extend((1..=2 * n).map(|i| format!("Y{i}")));
    let mut brackets = Vec::new();
    for i in 1..=n {
        brackets.push(((y(0), y(2 * i - 1)), vec![(x(2 * i), int(1))]));
        brackets.push(((y(0), y(2 * i)), vec![(x(2 * i - 1), int(-1))]));
        brackets.push(((y(2 * i - 1), y(2 * i)), vec![(x(0), int(1))]));
    }
    let g = build_lie_algebra(dim, labels, brackets)?;
    let mut gram = zero_gram(dim);
    for i in 0..=2 * n {
        gram[x(i)][y(i)] = int(1);
        gram[y(i)][x(i)] = int(1);
    }
    let b = BilinearForm::symmetric(gram)?;
    assert!(g.is_invariant_form(&b));
    Ok((g, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::symplectic_check;

    #[test]
    fn parameter_bounds() {
        assert!(make_g2n2(0).is_err());
        assert!(make_jordan(1).is_err());
        assert!(make_heisenberg(0).is_err());
        assert!(make_f(0).is_err());
        assert!(make_g4n2(0).is_err());
    }

    #[test]
    fn g2n2_shape() {
        let (g, b) = make_g2n2(1).unwrap();
        assert_eq!(g.dim(), 4);
        assert_eq!(g.derived_subalgebra().dim(), 3);
        assert!(g.is_invariant_form(&b));
    }

    #[test]
    fn jordan_p2_bracket_table() {
        // X0 X1 X2 Y0 Y1 Y2 at indices 0..6
        let (g, _, w) = make_jordan(2).unwrap();
        assert_eq!(g.dim(), 6);
        // [Y0, X2] = X1
        assert_eq!(g.bracket_basis(3, 2), vec![(1, int(1))]);
        // [Y0, Y1] = -Y2
        assert_eq!(g.bracket_basis(3, 4), vec![(5, int(-1))]);
        // [X2, Y1] = X0
        assert_eq!(g.bracket_basis(2, 4), vec![(0, int(1))]);
        // [Y0, X1] = 0 and X0 is central
        assert!(g.bracket_basis(3, 1).is_empty());
        assert!(g.ad_basis(0).is_zero());
        assert!(symplectic_check(&g, &w).unwrap());
    }

    #[test]
    fn g4n2_bracket_examples() {
        let (g, b) = make_g4n2(1).unwrap();
        assert_eq!(g.dim(), 6);
        // bracket(Y, Y_1) = X_2 at indices Y=3, Y1=4, X2=2
        let ey = |i: usize| {
            let mut v = vec![crate::scalar::zero(); 6];
            v[i] = int(1);
            v
        };
        let out = g.bracket(&ey(3), &ey(4)).unwrap();
        assert_eq!(out[2], int(1));
        assert!(out.iter().enumerate().all(|(k, c)| k == 2 || c == &int(0)));
        assert!(g.is_invariant_form(&b));
    }

    #[test]
    fn f_has_no_center() {
        for n in 1..=3 {
            let f = make_f(n).unwrap();
            assert_eq!(f.center().dim(), 0);
            assert_eq!(f.derived_subalgebra().dim(), 2 * n);
        }
        assert_eq!(make_f(1).unwrap().dim(), 3);
    }

    #[test]
    fn heisenberg_center_is_one_dimensional() {
        for n in 1..=3 {
            let h = make_heisenberg(n).unwrap();
            assert_eq!(h.dim(), 2 * n + 1);
            assert_eq!(h.center().dim(), 1);
            assert_eq!(h.derived_subalgebra().dim(), 1);
        }
    }

    #[test]
    fn family_spec_roundtrip() {
        let spec = FamilySpec::new("jordan".parse().unwrap(), 3);
        assert_eq!(spec.label(), "jordan(p=3)");
        let inst = spec.build().unwrap();
        assert_eq!(inst.algebra.dim(), 8);
        assert!(inst.form.is_some() && inst.omega.is_some());
        assert!("nosuch".parse::<FamilyId>().is_err());
    }
}
