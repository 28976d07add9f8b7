//! The exterior algebra Λ(g*) over a dual basis, with the interior product
//! and the super Poisson bracket of a quadratic Lie algebra.
//!
//! Forms are sparse: a term is a strictly increasing index subset encoded
//! as a bitmask (bit i = dual covector i), mapped to a nonzero rational
//! coefficient. Iterating masks in numeric order enumerates each degree in
//! colexicographic order, which fixes all matrix layouts downstream.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{BilinearForm, LieAlgebra};
use crate::error::Error;
use crate::scalar::{format_scalar, Scalar};
use crate::Result;

/// All bitmasks of `weight` bits drawn from `0..n`, in increasing numeric
/// (= colexicographic) order.
pub fn masks_of_weight(n: usize, weight: usize) -> Vec<u64> {
    assert!(n <= 63, "frame dimension too large for bitmask encoding");
    if weight > n {
        return Vec::new();
    }
    if weight == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let limit = 1u64 << n;
    let mut m = (1u64 << weight) - 1;
    while m < limit {
        out.push(m);
        // Gosper's hack: next mask with the same popcount
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

/// Sign of concatenating sorted monomials `a` and `b` into the sorted
/// monomial `a ∪ b`; `None` when they share an index.
pub fn merge_sign(a: u64, b: u64) -> Option<i8> {
    if a & b != 0 {
        return None;
    }
    let mut sign = 1i8;
    let mut bb = b;
    while bb != 0 {
        let i = bb.trailing_zeros();
        if (a >> (i + 1)).count_ones() % 2 == 1 {
            sign = -sign;
        }
        bb &= bb - 1;
    }
    Some(sign)
}

/// Element of Λ(g*) with rational coefficients, possibly of mixed degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorForm {
    dim: usize,
    terms: BTreeMap<u64, Scalar>,
}

impl ExteriorForm {
    pub fn zero(dim: usize) -> Self {
        ExteriorForm {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Scalar) -> Self {
        let mut f = ExteriorForm::zero(dim);
        f.add_term(0, c);
        f
    }

    /// The dual covector of basis vector `i`.
    pub fn covector(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        let mut f = ExteriorForm::zero(dim);
        f.add_term(1 << i, crate::scalar::one());
        f
    }

    /// Monomial ω_{i1}∧…∧ω_{ik} for strictly increasing indices.
    pub fn monomial(dim: usize, indices: &[usize]) -> Self {
        let mut mask = 0u64;
        for &i in indices {
            assert!(i < dim, "index {i} out of range");
            assert!(mask & (1 << i) == 0 && mask < (1 << i), "indices must be strictly increasing");
            mask |= 1 << i;
        }
        let mut f = ExteriorForm::zero(dim);
        f.add_term(mask, crate::scalar::one());
        f
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (u64, Scalar)>) -> Self {
        let mut f = ExteriorForm::zero(dim);
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: u64) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_else(crate::scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mask: u64, c: Scalar) {
        assert!(mask < (1u64 << self.dim), "term outside frame");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(crate::scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, other: &ExteriorForm) -> ExteriorForm {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ExteriorForm) -> ExteriorForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ExteriorForm {
        ExteriorForm {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> ExteriorForm {
        if s.is_zero() {
            return ExteriorForm::zero(self.dim);
        }
        ExteriorForm {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// Degree of the form when homogeneous; `None` for 0 or mixed degree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let first = it.next()?.count_ones() as usize;
        it.all(|m| m.count_ones() as usize == first).then_some(first)
    }

    /// Terms of degree exactly `k`.
    pub fn degree_slice(&self, k: usize) -> ExteriorForm {
        ExteriorForm {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() as usize == k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|m| m.count_ones() as usize).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Exterior product.
    pub fn wedge(&self, other: &ExteriorForm) -> ExteriorForm {
        assert_eq!(self.dim, other.dim, "wedge of forms over different frames");
        let mut out = ExteriorForm::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some(sign) = merge_sign(*ma, *mb) {
                    let mut v = ca * cb;
                    if sign < 0 {
                        v = -v;
                    }
                    out.add_term(ma | mb, v);
                }
            }
        }
        out
    }

    /// Interior product ι_x: the degree −1 antiderivation plugging the
    /// vector `x` into the first slot.
    pub fn contract(&self, x: &[Scalar]) -> Result<ExteriorForm> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut out = ExteriorForm::zero(self.dim);
        for (m, c) in &self.terms {
            let mut rest = *m;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if x[i].is_zero() {
                    continue;
                }
                let below = (m & ((1u64 << i) - 1)).count_ones();
                let mut v = c * &x[i];
                if below % 2 == 1 {
                    v = -v;
                }
                out.add_term(m & !(1u64 << i), v);
            }
        }
        Ok(out)
    }

    /// ι of the basis vector `i`.
    pub fn contract_basis(&self, i: usize) -> ExteriorForm {
        assert!(i < self.dim);
        let mut out = ExteriorForm::zero(self.dim);
        let bit = 1u64 << i;
        for (m, c) in &self.terms {
            if m & bit == 0 {
                continue;
            }
            let below = (m & (bit - 1)).count_ones();
            let v = if below % 2 == 1 { -c.clone() } else { c.clone() };
            out.add_term(m & !bit, v);
        }
        out
    }
}

/// Labels for the dual basis of an algebra, used to print forms.
#[derive(Debug, Clone)]
pub struct DualBasisFrame {
    labels: Vec<String>,
}

impl DualBasisFrame {
    pub fn of(algebra: &LieAlgebra) -> Self {
        DualBasisFrame {
            labels: algebra.labels().iter().map(|l| format!("{l}*")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn display<'a>(&'a self, form: &'a ExteriorForm) -> FormDisplay<'a> {
        assert_eq!(self.labels.len(), form.dim());
        FormDisplay { frame: self, form }
    }
}

pub struct FormDisplay<'a> {
    frame: &'a DualBasisFrame,
    form: &'a ExteriorForm,
}

impl fmt::Display for FormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.form.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.form.terms().enumerate() {
            let cs = format_scalar(c);
            let neg = cs.starts_with('-');
            if idx > 0 {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mag = if idx > 0 && neg { &cs[1..] } else { &cs[..] };
            let mono: Vec<&str> = (0..self.frame.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| self.frame.labels[i].as_str())
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", mono.join("^"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("^"))?;
            }
        }
        Ok(())
    }
}

/// Super Poisson bracket {a, b} over a nondegenerate symmetric form:
/// for homogeneous a of degree k,
/// {a, b} = (−1)^{k+1} Σ_{i,j} G⁻¹_{ij} ι_{e_i}(a) ∧ ι_{e_j}(b),
/// extended to mixed-degree a by summing over its degree slices. The
/// inverse Gram matrix realizes the metric duals of the dual basis.
pub fn super_poisson(b: &BilinearForm, a: &ExteriorForm, rhs: &ExteriorForm) -> Result<ExteriorForm> {
    let dim = a.dim();
    if b.dim() != dim || rhs.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: if b.dim() != dim { b.dim() } else { rhs.dim() },
        });
    }
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let ginv = b.inverse_gram().ok_or(Error::DegenerateForm)?;
    let rhs_contr: Vec<ExteriorForm> = (0..dim).map(|j| rhs.contract_basis(j)).collect();
    let mut out = ExteriorForm::zero(dim);
    for k in a.degrees() {
        let slice = a.degree_slice(k);
        let negate = (k + 1) % 2 == 1;
        let a_contr: Vec<ExteriorForm> = (0..dim).map(|i| slice.contract_basis(i)).collect();
        for i in 0..dim {
            if a_contr[i].is_zero() {
                continue;
            }
            for j in 0..dim {
                if ginv[i][j].is_zero() || rhs_contr[j].is_zero() {
                    continue;
                }
                let w = a_contr[i].wedge(&rhs_contr[j]);
                let scaled = if negate {
                    w.scale(&-ginv[i][j].clone())
                } else {
                    w.scale(&ginv[i][j])
                };
                out = out.add(&scaled);
            }
        }
    }
    Ok(out)
}

/// The associated 3-form I(X,Y,Z) = B([X,Y],Z) of a quadratic Lie algebra,
/// totally antisymmetric because B is invariant.
pub fn three_form(g: &LieAlgebra, b: &BilinearForm) -> Result<ExteriorForm> {
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
    let n = g.dim();
    let mut out = ExteriorForm::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let br = g.bracket_basis(i, j);
            if br.is_empty() {
                continue;
            }
            for k in j + 1..n {
                let mut v = crate::scalar::zero();
                for (l, c) in &br {
                    let blk = b.entry(*l, k);
                    if !blk.is_zero() {
                        v += c * &blk;
                    }
                }
                out.add_term((1 << i) | (1 << j) | (1 << k), v);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn masks_enumerate_colex() {
        assert_eq!(masks_of_weight(4, 2), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(masks_of_weight(3, 0), vec![0]);
        assert_eq!(masks_of_weight(3, 4), Vec::<u64>::new());
        assert_eq!(masks_of_weight(10, 3).len(), 120);
    }

    #[test]
    fn wedge_kills_repeats() {
        let a = ExteriorForm::covector(4, 1);
        assert!(a.wedge(&a).is_zero());
    }

    #[test]
    fn omega2_squared() {
        // frame order a1, b1, a2, b2; (a1^b1 + a2^b2)^2 = 2 a1^b1^a2^b2
        let om = ExteriorForm::from_terms(4, [(0b0011, int(1)), (0b1100, int(1))]);
        let sq = om.wedge(&om);
        assert_eq!(sq, ExteriorForm::from_terms(4, [(0b1111, int(2))]));
    }

    #[test]
    fn contraction_of_scalar_vanishes() {
        let c = ExteriorForm::constant(3, int(5));
        let x = vec![int(1), int(2), int(3)];
        assert!(c.contract(&x).unwrap().is_zero());
    }

    #[test]
    fn contraction_basic_sign() {
        // iota_{e1}(w0 ^ w1) = -w0
        let w01 = ExteriorForm::monomial(3, &[0, 1]);
        let got = w01.contract_basis(1);
        assert_eq!(got, ExteriorForm::covector(3, 0).neg());
    }

    #[test]
    fn contraction_dimension_mismatch() {
        let w = ExteriorForm::covector(3, 0);
        assert!(matches!(
            w.contract(&[int(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        const DIM: usize = 6;

        fn arb_homogeneous(k: usize) -> impl Strategy<Value = ExteriorForm> {
            let masks = masks_of_weight(DIM, k);
            proptest::collection::vec((0..masks.len(), -4i64..=4), 0..5).prop_map(move |terms| {
                let mut f = ExteriorForm::zero(DIM);
                for (idx, c) in terms {
                    f.add_term(masks[idx], int(c));
                }
                f
            })
        }

        fn arb_vector() -> impl Strategy<Value = Vec<Scalar>> {
            proptest::collection::vec(-3i64..=3, DIM)
                .prop_map(|v| v.into_iter().map(int).collect())
        }

        proptest! {
            #[test]
            fn graded_commutativity(a in (0usize..4).prop_flat_map(arb_homogeneous),
                                    b in (0usize..4).prop_flat_map(arb_homogeneous)) {
                let (Some(da), Some(db)) = (a.homogeneous_degree(), b.homogeneous_degree()) else {
                    return Ok(());
                };
                let ab = a.wedge(&b);
                let ba = b.wedge(&a);
                let expect = if (da * db) % 2 == 1 { ba.neg() } else { ba };
                prop_assert_eq!(ab, expect);
            }

            #[test]
            fn wedge_associative(a in (0usize..3).prop_flat_map(arb_homogeneous),
                                 b in (0usize..3).prop_flat_map(arb_homogeneous),
                                 c in (0usize..3).prop_flat_map(arb_homogeneous)) {
                prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
            }

            #[test]
            fn contraction_is_antiderivation(x in arb_vector(),
                                             a in (0usize..4).prop_flat_map(arb_homogeneous),
                                             b in (0usize..4).prop_flat_map(arb_homogeneous)) {
                let Some(da) = a.homogeneous_degree() else { return Ok(()); };
                let lhs = a.wedge(&b).contract(&x).unwrap();
                let mut rhs = a.contract(&x).unwrap().wedge(&b);
                let second = a.wedge(&b.contract(&x).unwrap());
                rhs = if da % 2 == 1 { rhs.sub(&second) } else { rhs.add(&second) };
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
