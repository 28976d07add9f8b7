//! Shared helpers for the integration suites.
#![allow(dead_code)] // each test binary uses a different subset

use quadlie::exterior::{masks_of_weight, ExteriorForm};
use quadlie::linalg::Subspace;
use quadlie::scalar::{int, Scalar};

pub fn basis_vec(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![int(0); dim];
    v[i] = int(1);
    v
}

/// Flattens a homogeneous degree-k form to coordinates over the colex
/// Λᵏ basis.
pub fn form_to_coords(f: &ExteriorForm, k: usize) -> Vec<Scalar> {
    let masks = masks_of_weight(f.dim(), k);
    masks.iter().map(|m| f.coeff(*m)).collect()
}

/// Span of degree-k forms as a subspace of Λᵏ coordinates.
pub fn span_of_forms(dim: usize, k: usize, forms: &[ExteriorForm]) -> Subspace {
    let ambient = masks_of_weight(dim, k).len();
    let vectors: Vec<Vec<Scalar>> = forms
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| {
            assert!(f.is_zero() || f.homogeneous_degree() == Some(k));
            form_to_coords(f, k)
        })
        .collect();
    Subspace::from_spanning(ambient, &vectors)
}

/// Textbook dense Gaussian elimination over ℚ, written independently of
/// the library's sparse elimination; used to cross-check reported ranks.
pub fn naive_rank(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> Scalar) -> usize {
    use num_traits::Zero;
    let mut m: Vec<Vec<Scalar>> = (0..rows)
        .map(|r| (0..cols).map(|c| entry(r, c)).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].clone().recip();
        for j in c..cols {
            let v = &m[rank][j] * &inv;
            m[rank][j] = v;
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in c..cols {
                    let sub = &f * &m[rank][j];
                    m[r][j] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
