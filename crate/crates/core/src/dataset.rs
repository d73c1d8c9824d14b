//! Tabular output shared by the CLI and the figure emitters.
//!
//! CSV: comma separated, LF line endings, header row always present.
//! JSON: one object per file.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};

/// One table cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i128),
    Real(f64),
    Missing,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Real(v) => write!(f, "{v}"),
            Cell::Missing => Ok(()),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Cell::Int(v) => s.serialize_i128(v),
            Cell::Real(v) if v.is_finite() => s.serialize_f64(v),
            _ => s.serialize_none(),
        }
    }
}

macro_rules! cell_from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Cell {
            fn from(v: $t) -> Self {
                Cell::Int(v as i128)
            }
        }
    )*};
}
cell_from_int!(u32, u64, i64, i128, usize, u128);

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Missing, Into::into)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Column {
    pub name: String,
    pub values: Vec<Cell>,
}

impl Column {
    pub fn new<T: Into<Cell>>(name: &str, values: impl IntoIterator<Item = T>) -> Self {
        Column {
            name: name.to_owned(),
            values: values.into_iter().map(Into::into).collect(),
        }
    }
}

/// Figure identifiers; figure 4 has a sequence panel and a histogram panel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3,
    Fig4a,
    Fig4b,
    Fig5,
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FigureId::Fig1 => "1",
            FigureId::Fig2 => "2",
            FigureId::Fig3 => "3",
            FigureId::Fig4a => "4a",
            FigureId::Fig4b => "4b",
            FigureId::Fig5 => "5",
        })
    }
}

impl Serialize for FigureId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Column-labelled data behind one figure panel.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureDataset {
    pub figure_id: FigureId,
    pub columns: Vec<Column>,
    pub metadata: BTreeMap<String, String>,
    /// Suffix after `fig<id>_L`, e.g. `10` or `4-20`.
    pub range_label: String,
}

impl FigureDataset {
    pub fn new(
        figure_id: FigureId,
        range_label: String,
        columns: Vec<Column>,
        metadata: BTreeMap<String, String>,
    ) -> Result<Self> {
        if let Some(first) = columns.first() {
            if let Some(bad) = columns
                .iter()
                .find(|c| c.values.len() != first.values.len())
            {
                return Err(Error::LengthMismatch {
                    expected: first.values.len(),
                    found: bad.values.len(),
                });
            }
        }
        Ok(FigureDataset {
            figure_id,
            columns,
            metadata,
            range_label,
        })
    }

    pub fn rows(&self) -> usize {
        self.columns.first().map_or(0, |c| c.values.len())
    }

    pub fn column(&self, name: &str) -> Option<&Column> {
        self.columns.iter().find(|c| c.name == name)
    }

    /// `fig<id>_L<range>`, plus a frame suffix for non-default frames.
    pub fn file_stem(&self) -> String {
        let mut stem = format!("fig{}_L{}", self.figure_id, self.range_label);
        if self.metadata.get("frame_mode").map(String::as_str) == Some("fixed") {
            stem.push_str("_fixed");
        }
        stem
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<&str> = self.columns.iter().map(|c| c.name.as_str()).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in 0..self.rows() {
            for (i, col) in self.columns.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{}", col.values[row]);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("dataset serializes");
        s.push('\n');
        s
    }
}

impl Serialize for FigureDataset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FigureDataset", 3)?;
        st.serialize_field("figure_id", &self.figure_id)?;
        st.serialize_field("metadata", &self.metadata)?;
        st.serialize_field("columns", &self.columns)?;
        st.end()
    }
}

/// Single-column CSV with the sequence name as header.
pub fn sequence_to_csv<T: fmt::Display>(name: &str, values: &[T]) -> String {
    let mut out = String::with_capacity(values.len() * 4 + name.len() + 1);
    out.push_str(name);
    out.push('\n');
    for v in values {
        let _ = writeln!(out, "{v}");
    }
    out
}

#[derive(Serialize)]
struct SequenceDoc<'a, T> {
    sequence: &'a str,
    length: usize,
    values: &'a [T],
}

/// `{"sequence": name, "length": n, "values": [...]}`.
pub fn sequence_to_json<T: Serialize>(name: &str, values: &[T]) -> String {
    let doc = SequenceDoc {
        sequence: name,
        length: values.len(),
        values,
    };
    let mut s = serde_json::to_string(&doc).expect("sequence serializes");
    s.push('\n');
    s
}

/// Two-column `value,count` CSV.
pub fn histogram_to_csv<K: fmt::Display, V: fmt::Display>(hist: &BTreeMap<K, V>) -> String {
    let mut out = String::from("value,count\n");
    for (k, v) in hist {
        let _ = writeln!(out, "{k},{v}");
    }
    out
}

/// JSON object keyed by value.
pub fn histogram_to_json<K: fmt::Display, V: Serialize>(hist: &BTreeMap<K, V>) -> String {
    let map: serde_json::Map<String, serde_json::Value> = hist
        .iter()
        .map(|(k, v)| {
            (
                k.to_string(),
                serde_json::to_value(v).expect("count serializes"),
            )
        })
        .collect();
    let mut s = serde_json::to_string(&map).expect("histogram serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let ds = FigureDataset::new(
            FigureId::Fig1,
            "2".into(),
            vec![Column::new("x", [1u32, 2]), Column::new("y", [0.5f64, 2.0])],
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(ds.to_csv(), "x,y\n1,0.5\n2,2\n");
        assert_eq!(ds.file_stem(), "fig1_L2");
        let json: serde_json::Value = serde_json::from_str(&ds.to_json()).unwrap();
        assert_eq!(json["figure_id"], "1");
        assert_eq!(json["columns"][1]["values"][0], 0.5);
    }

    #[test]
    fn ragged_columns_rejected() {
        let err = FigureDataset::new(
            FigureId::Fig2,
            "1".into(),
            vec![Column::new("a", [1u32]), Column::new("b", [1u32, 2])],
            BTreeMap::new(),
        );
        assert!(err.is_err());
    }

    #[test]
    fn missing_cells() {
        let c: Cell = None::<f64>.into();
        assert_eq!(c.to_string(), "");
        assert_eq!(serde_json::to_string(&c).unwrap(), "null");
        assert_eq!(
            serde_json::to_string(&Cell::Real(f64::NAN)).unwrap(),
            "null"
        );
        assert_eq!(
            serde_json::to_string(&Cell::Int(1 << 100)).unwrap(),
            (1i128 << 100).to_string()
        );
    }

    #[test]
    fn sequences_and_histograms() {
        assert_eq!(sequence_to_csv("rld", &[1, 2, 1]), "rld\n1\n2\n1\n");
        assert_eq!(
            sequence_to_json("rld", &[1, 2]),
            "{\"sequence\":\"rld\",\"length\":2,\"values\":[1,2]}\n"
        );
        let h = BTreeMap::from([(1u32, 2u64), (2, 2)]);
        assert_eq!(histogram_to_csv(&h), "value,count\n1,2\n2,2\n");
        assert_eq!(histogram_to_json(&h), "{\"1\":2,\"2\":2}\n");
    }
}
