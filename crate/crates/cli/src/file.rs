//! The algebra description file: a JSON document carrying dimension,
//! labels, sparse structure constants, and optional Gram matrices for the
//! invariant form and a symplectic candidate.
//!
//! Every number is an exact rational string ("p" or "p/q"); floats are
//! rejected. Unknown fields are rejected. Exporting a family and parsing
//! the result reproduces the algebra bit-exactly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use quadlie::algebra::{build_lie_algebra, BilinearForm, LieAlgebra};
use quadlie::scalar::{format_scalar, parse_scalar, Scalar};

use crate::{CliError, CliResult};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub labels: Vec<String>,
    pub brackets: Vec<BracketRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<Vec<String>>>,
}

/// One bracket [e_i, e_j] = Σ coeffs[k]·e_k, stored with i < j.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, String>,
}

/// A parsed and validated description: the Lie algebra plus whatever
/// forms the file carried.
#[derive(Debug, Clone)]
pub struct AlgebraInput {
    pub algebra: LieAlgebra,
    pub form: Option<BilinearForm>,
    pub omega: Option<BilinearForm>,
}

fn parse_matrix(dim: usize, rows: &[Vec<String>], what: &str) -> CliResult<Vec<Vec<Scalar>>> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(CliError::Input(format!(
            "{what} matrix must be {dim}x{dim}"
        )));
    }
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|s| parse_scalar(s).map_err(|e| CliError::Parse(e.to_string())))
                .collect()
        })
        .collect()
}

/// Parses the JSON text of an [`AlgebraFile`] and validates everything:
/// the Jacobi identity, index ranges, record ordering (i < j) and the
/// symmetry disciplines of the optional matrices.
pub fn parse_algebra_file(text: &str) -> CliResult<AlgebraInput> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    let AlgebraFile {
        dim,
        labels,
        brackets,
        form,
        omega,
    } = file;
    if dim > 60 {
        return Err(CliError::Input(format!(
            "dimension {dim} too large (limit 60)"
        )));
    }
    let mut table = Vec::with_capacity(brackets.len());
    for rec in &brackets {
        if rec.i >= rec.j {
            return Err(CliError::Input(format!(
                "bracket record must have i < j, got i={}, j={}",
                rec.i, rec.j
            )));
        }
        let mut value = Vec::with_capacity(rec.coeffs.len());
        for (key, coeff) in &rec.coeffs {
            let k: usize = key
                .parse()
                .map_err(|_| CliError::Parse(format!("bad basis index {key:?}")))?;
            let c = parse_scalar(coeff).map_err(|e| CliError::Parse(e.to_string()))?;
            value.push((k, c));
        }
        table.push(((rec.i, rec.j), value));
    }
    let algebra = build_lie_algebra(dim, labels, table)?;
    let form = match &form {
        Some(rows) => Some(BilinearForm::symmetric(parse_matrix(dim, rows, "form")?)?),
        None => None,
    };
    let omega = match &omega {
        Some(rows) => Some(BilinearForm::antisymmetric(parse_matrix(
            dim, rows, "omega",
        )?)?),
        None => None,
    };
    Ok(AlgebraInput {
        algebra,
        form,
        omega,
    })
}

fn matrix_strings(b: &BilinearForm) -> Vec<Vec<String>> {
    b.gram()
        .iter()
        .map(|row| row.iter().map(format_scalar).collect())
        .collect()
}

/// Serializable description of an algebra and its forms.
pub fn export_algebra(
    g: &LieAlgebra,
    form: Option<&BilinearForm>,
    omega: Option<&BilinearForm>,
) -> AlgebraFile {
    let brackets = g
        .bracket_table()
        .iter()
        .map(|((i, j), value)| BracketRecord {
            i: *i,
            j: *j,
            coeffs: value
                .iter()
                .map(|(k, c)| (k.to_string(), format_scalar(c)))
                .collect(),
        })
        .collect();
    AlgebraFile {
        dim: g.dim(),
        labels: g.labels().to_vec(),
        brackets,
        form: form.map(matrix_strings),
        omega: omega.map(matrix_strings),
    }
}

pub fn to_json(file: &AlgebraFile) -> String {
    serde_json::to_string_pretty(file).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use quadlie::families::{make_g2n2, make_jordan};

    #[test]
    fn export_parse_roundtrip() {
        let (g, b) = make_g2n2(2).unwrap();
        let text = to_json(&export_algebra(&g, Some(&b), None));
        let parsed = parse_algebra_file(&text).unwrap();
        assert_eq!(parsed.algebra, g);
        assert_eq!(parsed.form.as_ref().map(|f| f.gram().clone()), Some(b.gram().clone()));
        // bit-exact: re-export produces identical text
        let text2 = to_json(&export_algebra(
            &parsed.algebra,
            parsed.form.as_ref(),
            None,
        ));
        assert_eq!(text, text2);
    }

    #[test]
    fn roundtrip_with_omega_and_fractions() {
        let (g, b, w) = make_jordan(2).unwrap();
        let text = to_json(&export_algebra(&g, Some(&b), Some(&w)));
        let parsed = parse_algebra_file(&text).unwrap();
        assert_eq!(parsed.algebra, g);
        assert!(parsed.omega.is_some());
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = r#"{"dim":1,"labels":["e0"],"brackets":[],"extra":1}"#;
        assert!(matches!(parse_algebra_file(text), Err(CliError::Parse(_))));
    }

    #[test]
    fn bad_rational_rejected() {
        let text = r#"{"dim":2,"labels":["a","b"],"brackets":[{"i":0,"j":1,"coeffs":{"0":"1.5"}}]}"#;
        assert!(parse_algebra_file(text).is_err());
    }

    #[test]
    fn wrong_record_order_rejected() {
        let text = r#"{"dim":2,"labels":["a","b"],"brackets":[{"i":1,"j":0,"coeffs":{"0":"1"}}]}"#;
        let err = parse_algebra_file(text).unwrap_err();
        assert!(err.to_string().contains("i < j"), "{err}");
    }

    #[test]
    fn jacobi_failure_surfaces() {
        // [Y0,X1]=X1, [Y0,Y1]=+Y1, [X1,Y1]=X0 violates Jacobi
        let text = r#"{
            "dim": 4,
            "labels": ["X0", "X1", "Y0", "Y1"],
            "brackets": [
                {"i": 1, "j": 2, "coeffs": {"1": "-1"}},
                {"i": 1, "j": 3, "coeffs": {"0": "1"}},
                {"i": 2, "j": 3, "coeffs": {"3": "1"}}
            ]
        }"#;
        let err = parse_algebra_file(text).unwrap_err();
        assert!(err.to_string().contains("Jacobi"), "{err}");
    }
}
