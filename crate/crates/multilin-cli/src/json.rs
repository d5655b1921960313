//! JSON schemas for every value the tool reads or writes.
//!
//! Scalars travel as strings `"num/den"` (integer shorthand `"5"` and
//! plain JSON integers are accepted on input). Matrices are emitted
//! canonically: keys sorted, entry lists in storage rank order, zero
//! entries omitted, so equal values always serialize to equal bytes.

use multilin::multiindex::{MultiIndex, StrictIndex};
use multilin::{
    AltMatrix, AltMultiMap, BilinearMap, DenseMatrix, PolyMap, Rational, SymMatrix, SymMultiMap,
};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CliError;

/// A rational in transit. Serializes as `"num/den"` (or `"num"` for
/// integers); deserializes from a string or a bare integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QValue(pub Rational);

impl Serialize for QValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for QValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl serde::de::Visitor<'_> for Visitor {
            type Value = QValue;

            fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str("a rational string like \"-3/7\" or an integer")
            }

            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<QValue, E> {
                v.parse::<Rational>()
                    .map(QValue)
                    .map_err(|e| E::custom(e.to_string()))
            }

            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<QValue, E> {
                Ok(QValue(Rational::from(v)))
            }

            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<QValue, E> {
                i64::try_from(v)
                    .map(|v| QValue(Rational::from(v)))
                    .map_err(|_| E::custom("integer literal out of range"))
            }
        }
        deserializer.deserialize_any(Visitor)
    }
}

#[derive(Serialize, Deserialize)]
struct EntryDto {
    col: Vec<usize>,
    row: Vec<usize>,
    value: QValue,
}

#[derive(Serialize, Deserialize)]
struct StratumDto {
    entries: Vec<EntryDto>,
    kind: String,
    n: usize,
    n_prime: usize,
    p: usize,
    p_prime: usize,
}

#[derive(Serialize, Deserialize)]
struct DenseDto {
    cols: usize,
    entries: Vec<Vec<QValue>>,
    rows: usize,
}

#[derive(Serialize, Deserialize)]
struct PolyMapDto {
    blocks: Vec<StratumDto>,
    n_in: usize,
    n_out: usize,
}

#[derive(Serialize, Deserialize)]
struct MultiMapDto {
    arity: usize,
    matrix: StratumDto,
}

#[derive(Serialize, Deserialize)]
struct BilinearDto {
    left_dim: usize,
    matrix: StratumDto,
}

fn schema<T>(msg: String) -> Result<T, CliError> {
    Err(CliError::Schema(msg))
}

fn parse_dto<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))
}

fn render<T: Serialize>(dto: &T) -> String {
    let mut s = serde_json::to_string_pretty(dto).expect("serialization is infallible");
    s.push('\n');
    s
}

// --- symmetric stratum matrices ---

fn sym_to_dto(m: &SymMatrix) -> StratumDto {
    let rows = m.row_stratum();
    let cols = m.col_stratum();
    let mut entries = Vec::new();
    for (ri, row) in rows.iter().enumerate() {
        for (ci, col) in cols.iter().enumerate() {
            let value = m.entry_at_rank(ri, ci);
            if value.is_zero() {
                continue;
            }
            entries.push(EntryDto {
                col: col.entries().to_vec(),
                row: row.entries().to_vec(),
                value: QValue(value.clone()),
            });
        }
    }
    StratumDto {
        entries,
        kind: "sym".into(),
        n: m.n(),
        n_prime: m.n_prime(),
        p: m.p(),
        p_prime: m.p_prime(),
    }
}

fn sym_from_dto(dto: &StratumDto, context: &str) -> Result<SymMatrix, CliError> {
    if dto.kind != "sym" {
        return schema(format!(
            "{context}kind: expected \"sym\", got \"{}\"",
            dto.kind
        ));
    }
    let mut m = SymMatrix::zeros(dto.n, dto.n_prime, dto.p, dto.p_prime);
    let mut seen = std::collections::BTreeSet::new();
    for (i, entry) in dto.entries.iter().enumerate() {
        let row = MultiIndex::new(entry.row.clone());
        if row.dim() != dto.n || row.weight() != dto.p {
            return schema(format!(
                "{context}entries[{i}].row: {:?} is not a weight-{} multi-index of dimension {}",
                entry.row, dto.p, dto.n
            ));
        }
        let col = MultiIndex::new(entry.col.clone());
        if col.dim() != dto.n_prime || col.weight() != dto.p_prime {
            return schema(format!(
                "{context}entries[{i}].col: {:?} is not a weight-{} multi-index of dimension {}",
                entry.col, dto.p_prime, dto.n_prime
            ));
        }
        if !seen.insert((entry.row.clone(), entry.col.clone())) {
            return schema(format!("{context}entries[{i}]: duplicate index pair"));
        }
        m.set_entry(&row, &col, entry.value.0.clone())
            .map_err(|e| CliError::Schema(format!("{context}entries[{i}]: {e}")))?;
    }
    Ok(m)
}

pub fn parse_sym_matrix(text: &str) -> Result<SymMatrix, CliError> {
    sym_from_dto(&parse_dto(text)?, "")
}

pub fn sym_matrix_to_json(m: &SymMatrix) -> String {
    render(&sym_to_dto(m))
}

// --- antisymmetric stratum matrices ---

fn alt_to_dto(m: &AltMatrix) -> StratumDto {
    let rows = m.row_stratum();
    let cols = m.col_stratum();
    let mut entries = Vec::new();
    for (ri, row) in rows.iter().enumerate() {
        for (ci, col) in cols.iter().enumerate() {
            let value = m.entry_at_rank(ri, ci);
            if value.is_zero() {
                continue;
            }
            entries.push(EntryDto {
                col: col.entries().to_vec(),
                row: row.entries().to_vec(),
                value: QValue(value.clone()),
            });
        }
    }
    StratumDto {
        entries,
        kind: "alt".into(),
        n: m.n(),
        n_prime: m.n_prime(),
        p: m.p(),
        p_prime: m.p_prime(),
    }
}

fn alt_from_dto(dto: &StratumDto, context: &str) -> Result<AltMatrix, CliError> {
    if dto.kind != "alt" {
        return schema(format!(
            "{context}kind: expected \"alt\", got \"{}\"",
            dto.kind
        ));
    }
    let mut m = AltMatrix::zeros(dto.n, dto.n_prime, dto.p, dto.p_prime);
    let mut seen = std::collections::BTreeSet::new();
    for (i, entry) in dto.entries.iter().enumerate() {
        let row = StrictIndex::new(entry.row.clone(), dto.n)
            .map_err(|e| CliError::Schema(format!("{context}entries[{i}].row: {e}")))?;
        if row.len() != dto.p {
            return schema(format!(
                "{context}entries[{i}].row: expected {} entries, got {}",
                dto.p,
                row.len()
            ));
        }
        let col = StrictIndex::new(entry.col.clone(), dto.n_prime)
            .map_err(|e| CliError::Schema(format!("{context}entries[{i}].col: {e}")))?;
        if col.len() != dto.p_prime {
            return schema(format!(
                "{context}entries[{i}].col: expected {} entries, got {}",
                dto.p_prime,
                col.len()
            ));
        }
        if !seen.insert((entry.row.clone(), entry.col.clone())) {
            return schema(format!("{context}entries[{i}]: duplicate index pair"));
        }
        m.set_entry(&row, &col, entry.value.0.clone())
            .map_err(|e| CliError::Schema(format!("{context}entries[{i}]: {e}")))?;
    }
    Ok(m)
}

pub fn parse_alt_matrix(text: &str) -> Result<AltMatrix, CliError> {
    alt_from_dto(&parse_dto(text)?, "")
}

pub fn alt_matrix_to_json(m: &AltMatrix) -> String {
    render(&alt_to_dto(m))
}

// --- ordinary dense matrices ---

pub fn parse_dense_matrix(text: &str) -> Result<DenseMatrix, CliError> {
    let dto: DenseDto = parse_dto(text)?;
    if dto.entries.len() != dto.rows {
        return schema(format!(
            "entries: expected {} rows, got {}",
            dto.rows,
            dto.entries.len()
        ));
    }
    for (i, row) in dto.entries.iter().enumerate() {
        if row.len() != dto.cols {
            return schema(format!(
                "entries[{i}]: expected {} columns, got {}",
                dto.cols,
                row.len()
            ));
        }
    }
    let flat = dto.entries.into_iter().flatten().map(|q| q.0).collect();
    DenseMatrix::from_entries(dto.rows, dto.cols, flat).map_err(crate::from_core)
}

pub fn dense_matrix_to_json(m: &DenseMatrix) -> String {
    let entries = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| QValue(m.at(r, c).clone())).collect())
        .collect();
    render(&DenseDto {
        cols: m.cols(),
        entries,
        rows: m.rows(),
    })
}

// --- polynomial maps ---

pub fn parse_polymap(text: &str) -> Result<PolyMap, CliError> {
    let dto: PolyMapDto = parse_dto(text)?;
    polymap_from_dto(&dto)
}

fn polymap_from_dto(dto: &PolyMapDto) -> Result<PolyMap, CliError> {
    let mut blocks = Vec::with_capacity(dto.blocks.len());
    for (i, block) in dto.blocks.iter().enumerate() {
        let context = format!("blocks[{i}].");
        let m = sym_from_dto(block, &context)?;
        if m.n() != dto.n_out || m.n_prime() != dto.n_in {
            return schema(format!(
                "blocks[{i}]: base dimensions ({}, {}) do not match map dimensions \
                 (n_out={}, n_in={})",
                m.n(),
                m.n_prime(),
                dto.n_out,
                dto.n_in
            ));
        }
        if m.p() != 1 || m.p_prime() != i {
            return schema(format!(
                "blocks[{i}]: expected weights (1, {i}), got ({}, {})",
                m.p(),
                m.p_prime()
            ));
        }
        blocks.push(m);
    }
    PolyMap::from_blocks(dto.n_in, dto.n_out, blocks)
        .map_err(|e| CliError::Schema(format!("blocks: {e}")))
}

pub fn polymap_to_json(m: &PolyMap) -> String {
    let blocks = m.blocks().iter().map(sym_to_dto).collect();
    render(&PolyMapDto {
        blocks,
        n_in: m.n_in(),
        n_out: m.n_out(),
    })
}

// --- multilinear maps ---

pub fn parse_sym_multimap(text: &str) -> Result<SymMultiMap, CliError> {
    let dto: MultiMapDto = parse_dto(text)?;
    let matrix = sym_from_dto(&dto.matrix, "matrix.")?;
    if matrix.p_prime() != dto.arity {
        return schema(format!(
            "arity: {} does not match matrix column weight {}",
            dto.arity,
            matrix.p_prime()
        ));
    }
    SymMultiMap::from_matrix(matrix).map_err(|e| CliError::Schema(format!("matrix: {e}")))
}

pub fn sym_multimap_to_json(m: &SymMultiMap) -> String {
    render(&MultiMapDto {
        arity: m.arity(),
        matrix: sym_to_dto(m.matrix()),
    })
}

pub fn parse_alt_multimap(text: &str) -> Result<AltMultiMap, CliError> {
    let dto: MultiMapDto = parse_dto(text)?;
    let matrix = alt_from_dto(&dto.matrix, "matrix.")?;
    if matrix.p_prime() != dto.arity {
        return schema(format!(
            "arity: {} does not match matrix column weight {}",
            dto.arity,
            matrix.p_prime()
        ));
    }
    AltMultiMap::from_matrix(matrix).map_err(|e| CliError::Schema(format!("matrix: {e}")))
}

pub fn alt_multimap_to_json(m: &AltMultiMap) -> String {
    render(&MultiMapDto {
        arity: m.arity(),
        matrix: alt_to_dto(m.matrix()),
    })
}

// --- bilinear pairings ---

pub fn parse_bilinear(text: &str) -> Result<BilinearMap, CliError> {
    let dto: BilinearDto = parse_dto(text)?;
    let matrix = sym_from_dto(&dto.matrix, "matrix.")?;
    BilinearMap::new(matrix, dto.left_dim).map_err(|e| CliError::Schema(format!("matrix: {e}")))
}

pub fn bilinear_to_json(m: &BilinearMap) -> String {
    render(&BilinearDto {
        left_dim: m.left_dim(),
        matrix: sym_to_dto(m.matrix()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn sym_matrix_roundtrip() {
        let dense = DenseMatrix::from_rows(vec![
            vec![q(1), Rational::new(-3, 7).unwrap()],
            vec![q(0), q(4)],
        ])
        .unwrap();
        let m = SymMatrix::from_dense(2, 2, 1, 1, &dense).unwrap();
        let text = sym_matrix_to_json(&m);
        assert_eq!(parse_sym_matrix(&text).unwrap(), m);
        // Zero entries are omitted from the wire form.
        assert!(!text.contains("\"0\""));
    }

    #[test]
    fn sym_matrix_accepts_integer_shorthand() {
        let text = r#"{
            "entries": [{"col": [1, 0], "row": [0, 1], "value": 5}],
            "kind": "sym", "n": 2, "n_prime": 2, "p": 1, "p_prime": 1
        }"#;
        let m = parse_sym_matrix(text).unwrap();
        let row = MultiIndex::new(vec![0, 1]);
        let col = MultiIndex::new(vec![1, 0]);
        assert_eq!(m.entry(&row, &col).unwrap(), &q(5));
    }

    #[test]
    fn sym_matrix_rejects_bad_weight() {
        let text = r#"{
            "entries": [{"col": [1, 0], "row": [2, 1], "value": "5"}],
            "kind": "sym", "n": 2, "n_prime": 2, "p": 1, "p_prime": 1
        }"#;
        let err = parse_sym_matrix(text).unwrap_err();
        assert!(matches!(err, CliError::Schema(_)));
        assert!(err.to_string().contains("entries[0].row"));
    }

    #[test]
    fn alt_matrix_roundtrip_and_validation() {
        let m = AltMatrix::from_fn(3, 3, 2, 1, |row, col| {
            q((row.entries()[0] * 3 + col.entries()[0]) as i64)
        });
        let text = alt_matrix_to_json(&m);
        assert_eq!(parse_alt_matrix(&text).unwrap(), m);

        let bad = r#"{
            "entries": [{"col": [1], "row": [2, 1], "value": "1"}],
            "kind": "alt", "n": 3, "n_prime": 3, "p": 2, "p_prime": 1
        }"#;
        let err = parse_alt_matrix(bad).unwrap_err();
        assert!(err.to_string().contains("entries[0].row"));
    }

    #[test]
    fn duplicate_entries_rejected() {
        let text = r#"{
            "entries": [
                {"col": [1], "row": [1], "value": "1"},
                {"col": [1], "row": [1], "value": "2"}
            ],
            "kind": "sym", "n": 1, "n_prime": 1, "p": 1, "p_prime": 1
        }"#;
        let err = parse_sym_matrix(text).unwrap_err();
        assert!(err.to_string().contains("duplicate"));
    }

    #[test]
    fn dense_matrix_roundtrip() {
        let m = DenseMatrix::from_rows(vec![
            vec![q(1), q(2)],
            vec![Rational::new(1, 3).unwrap(), q(0)],
        ])
        .unwrap();
        let text = dense_matrix_to_json(&m);
        assert_eq!(parse_dense_matrix(&text).unwrap(), m);
    }

    #[test]
    fn polymap_roundtrip() {
        let m = PolyMap::linear(
            &DenseMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(3), q(4)]]).unwrap(),
        );
        let text = polymap_to_json(&m);
        assert_eq!(parse_polymap(&text).unwrap(), m);
    }

    #[test]
    fn polymap_rejects_wrong_block_weight() {
        let text = r#"{
            "blocks": [
                {"entries": [], "kind": "sym", "n": 1, "n_prime": 1, "p": 1, "p_prime": 1}
            ],
            "n_in": 1, "n_out": 1
        }"#;
        let err = parse_polymap(text).unwrap_err();
        assert!(err.to_string().contains("blocks[0]"));
    }

    #[test]
    fn multimap_arity_must_match() {
        let text = r#"{
            "arity": 3,
            "matrix": {"entries": [], "kind": "sym", "n": 1, "n_prime": 2, "p": 1, "p_prime": 2}
        }"#;
        let err = parse_sym_multimap(text).unwrap_err();
        assert!(err.to_string().contains("arity"));
    }

    #[test]
    fn bilinear_roundtrip() {
        let coeffs = vec![q(1), q(-2), q(3), q(4)];
        let c = BilinearMap::from_coefficients(1, 2, 2, &coeffs).unwrap();
        let text = bilinear_to_json(&c);
        let parsed = parse_bilinear(&text).unwrap();
        assert_eq!(parsed.matrix(), c.matrix());
        assert_eq!(parsed.left_dim(), 2);
    }
}
