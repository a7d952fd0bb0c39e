//! Structure-constant tables: every basis pair in bidegree (p, q) together
//! with the expansion of the chosen product, as reproducible JSON.

use serde_json::json;

use crate::combinatorics::{compositions, partitions};
use crate::error::{Error, Result};
use crate::expr::{render_composition_sum, render_partition_sum};
use crate::formal::FormalSum;
use crate::{nsym, sym};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableOp {
    Smash,
    Conv,
    Internal,
}

impl TableOp {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "smash" => Ok(TableOp::Smash),
            "conv" => Ok(TableOp::Conv),
            "internal" => Ok(TableOp::Internal),
            _ => Err(Error::Table(format!(
                "unknown op `{name}` (expected smash, conv, or internal)"
            ))),
        }
    }

    fn name(self) -> &'static str {
        match self {
            TableOp::Smash => "smash",
            TableOp::Conv => "conv",
            TableOp::Internal => "internal",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableAlgebra {
    Nsym,
    Sym,
}

impl TableAlgebra {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "nsym" => Ok(TableAlgebra::Nsym),
            "sym" => Ok(TableAlgebra::Sym),
            _ => Err(Error::Table(format!(
                "unknown algebra `{name}` (expected nsym or sym)"
            ))),
        }
    }

    fn name(self) -> &'static str {
        match self {
            TableAlgebra::Nsym => "nsym",
            TableAlgebra::Sym => "sym",
        }
    }
}

fn term_list<K: Ord + Clone>(
    sum: &FormalSum<K>,
    mut key_fmt: impl FnMut(&K) -> String,
) -> serde_json::Value {
    let items: Vec<serde_json::Value> = sum
        .terms()
        .map(|(k, c)| json!({"key": key_fmt(k), "coeff": c.to_string()}))
        .collect();
    json!(items)
}

/// Computes the full structure-constant table for one product in one
/// algebra at bidegree (p, q). The internal product needs p = q.
pub fn table(op: TableOp, algebra: TableAlgebra, p: usize, q: usize) -> Result<serde_json::Value> {
    if op == TableOp::Internal && p != q {
        return Err(Error::Table(format!(
            "internal table needs equal degrees, got {p} and {q}"
        )));
    }
    let mut entries = Vec::new();
    match algebra {
        TableAlgebra::Nsym => {
            let mut lefts = compositions(p);
            let mut rights = compositions(q);
            lefts.sort();
            rights.sort();
            for alpha in &lefts {
                for beta in &rights {
                    let value = match op {
                        TableOp::Smash => nsym::smash(alpha, beta),
                        TableOp::Conv => nsym::convolve(alpha, beta),
                        TableOp::Internal => nsym::internal(alpha, beta)?,
                    };
                    entries.push(json!({
                        "left": format!("X{alpha}"),
                        "right": format!("X{beta}"),
                        "value": render_composition_sum("X", &value),
                        "terms": term_list(&value, |k| format!("X{k}")),
                    }));
                }
            }
        }
        TableAlgebra::Sym => {
            let mut lefts = partitions(p);
            let mut rights = partitions(q);
            lefts.sort();
            rights.sort();
            for lambda in &lefts {
                for mu in &rights {
                    let value = match op {
                        TableOp::Smash => sym::smash(lambda, mu),
                        TableOp::Conv => sym::external(lambda, mu),
                        TableOp::Internal => sym::internal(lambda, mu)?,
                    };
                    let schur = sym::schur_expand(&value);
                    entries.push(json!({
                        "left": format!("h{lambda}"),
                        "right": format!("h{mu}"),
                        "value": render_partition_sum("h", &value),
                        "schur": render_partition_sum("s", &schur),
                        "terms": term_list(&value, |k| format!("h{k}")),
                    }));
                }
            }
        }
    }
    Ok(json!({
        "op": op.name(),
        "algebra": algebra.name(),
        "degrees": [p, q],
        "entries": entries,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr;

    #[test]
    fn smash_nsym_1_1() {
        let t = table(TableOp::Smash, TableAlgebra::Nsym, 1, 1).unwrap();
        assert_eq!(t["entries"][0]["left"], "X[1]");
        assert_eq!(t["entries"][0]["right"], "X[1]");
        assert_eq!(t["entries"][0]["value"], "X[1] + X[1,1]");
    }

    #[test]
    fn smash_sym_3_3_contains_intro_row() {
        let t = table(TableOp::Smash, TableAlgebra::Sym, 3, 3).unwrap();
        let entries = t["entries"].as_array().unwrap();
        let row = entries
            .iter()
            .find(|e| e["left"] == "h[2,1]" && e["right"] == "h[3]")
            .unwrap();
        assert_eq!(
            row["value"],
            "h[1,1,1,1] + h[2,1] + h[2,1,1] + h[2,1,1,1] + h[2,2,1] + h[3,2,1]"
        );
        assert!(row["schur"].as_str().unwrap().starts_with("s["));
    }

    #[test]
    fn internal_needs_equal_degrees() {
        assert!(table(TableOp::Internal, TableAlgebra::Nsym, 2, 3).is_err());
        let t = table(TableOp::Internal, TableAlgebra::Nsym, 2, 2).unwrap();
        let entries = t["entries"].as_array().unwrap();
        assert_eq!(entries.len(), 4);
        let row = entries
            .iter()
            .find(|e| e["left"] == "X[1,1]" && e["right"] == "X[1,1]")
            .unwrap();
        assert_eq!(row["value"], "2*X[1,1]");
    }

    #[test]
    fn rendered_entries_round_trip() {
        for op in [TableOp::Smash, TableOp::Conv] {
            for (algebra, pq) in [(TableAlgebra::Nsym, (2, 3)), (TableAlgebra::Sym, (2, 3))] {
                let t = table(op, algebra, pq.0, pq.1).unwrap();
                for entry in t["entries"].as_array().unwrap() {
                    for field in ["left", "right", "value"] {
                        let text = entry[field].as_str().unwrap();
                        let reparsed = expr::render_text(&expr::run(text).unwrap());
                        assert_eq!(reparsed, text, "{op:?} {field}");
                    }
                }
            }
        }
    }

    #[test]
    fn unknown_names_rejected() {
        assert!(TableOp::from_name("kronecker").is_err());
        assert!(TableAlgebra::from_name("qsym").is_err());
    }
}
