//! Algebra definition files (JSON).
//!
//! Schema:
//! ```json
//! {
//!   "name": "N3",
//!   "dim": 4,
//!   "degrees": [0, 0, 0, 0],
//!   "unit": ["1", "0", "0", "0"],
//!   "table": [[0, 0, 0, "1"], ...]
//! }
//! ```
//! Indices are 0-based; constants are reduced `num/den` strings (integers
//! without denominator). Catalog entries export to this format with the
//! table sorted by `(i, j, k)`, so exports are byte-stable.

use super::SuperAlgebra;
use crate::linalg::{format_rational, parse_rational};
use crate::Result;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub degrees: Vec<u8>,
    pub unit: Option<Vec<String>>,
    pub table: Vec<(usize, usize, usize, String)>,
}

impl SuperAlgebra {
    pub fn to_file(&self) -> AlgebraFile {
        AlgebraFile {
            name: self.name().to_string(),
            dim: self.dim(),
            degrees: self.degrees().to_vec(),
            unit: self
                .unit()
                .map(|u| u.iter().map(format_rational).collect()),
            table: self
                .table_entries()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, format_rational(&c)))
                .collect(),
        }
    }

    /// Rebuilds an algebra from a definition file. The unit is re-derived
    /// from the table (and must agree with a declared one).
    pub fn from_file(file: &AlgebraFile) -> Result<SuperAlgebra> {
        if file.degrees.len() != file.dim {
            return Err(crate::Error::InvalidAlgebra(format!(
                "{}: {} degrees for dim {}",
                file.name,
                file.degrees.len(),
                file.dim
            )));
        }
        let mut entries = Vec::with_capacity(file.table.len());
        for (i, j, k, c) in &file.table {
            entries.push((*i, *j, *k, parse_rational(c)?));
        }
        let alg = SuperAlgebra::new(file.name.clone(), file.degrees.clone(), &entries, None)?;
        if let Some(declared) = &file.unit {
            let parsed: Result<Vec<_>> = declared.iter().map(|s| parse_rational(s)).collect();
            let parsed = parsed?;
            if alg.unit() != Some(&parsed) {
                return Err(crate::Error::InvalidAlgebra(format!(
                    "{}: declared unit does not act as identity",
                    file.name
                )));
            }
        }
        Ok(alg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::resolve;

    #[test]
    fn export_import_round_trip() {
        for name in ["UT2", "N3gr", "G2gr", "Dgr"] {
            let a = resolve(name).unwrap();
            let f = a.to_file();
            let json = serde_json::to_string(&f).unwrap();
            let f2: AlgebraFile = serde_json::from_str(&json).unwrap();
            let b = SuperAlgebra::from_file(&f2).unwrap();
            assert_eq!(b.to_file().table, f.table, "{name}");
            assert_eq!(b.degrees(), a.degrees());
            assert_eq!(b.unit(), a.unit());
            // export is byte-stable
            assert_eq!(serde_json::to_string(&b.to_file()).unwrap(), json);
        }
    }

    #[test]
    fn bad_unit_rejected() {
        let a = resolve("UT2").unwrap();
        let mut f = a.to_file();
        f.unit = Some(vec!["1".into(), "0".into(), "0".into()]);
        assert!(SuperAlgebra::from_file(&f).is_err());
    }
}
