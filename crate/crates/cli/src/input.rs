//! The JSON input document.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

use wes_core::abelian::{FgAbGroup, IntMatrix};
use wes_core::wes::{homology_of_complex, Homology, WesData};

use crate::CliError;

/// An arbitrary-size integer carried as a plain JSON number.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Number::from_str(&self.0.to_string())
            .expect("an integer is a valid JSON number")
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = Number::deserialize(d)?;
        BigInt::from_str(&n.to_string())
            .map(Int)
            .map_err(|_| D::Error::custom(format!("expected an integer, got {n}")))
    }
}

impl From<&BigInt> for Int {
    fn from(x: &BigInt) -> Self {
        Int(x.clone())
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub type Rows = Vec<Vec<Int>>;

pub fn rows_of(m: &IntMatrix) -> Rows {
    m.to_rows().iter().map(|r| r.iter().map(Int::from).collect()).collect()
}

pub fn matrix_from_rows(name: &str, cols: usize, rows: &Rows) -> Result<IntMatrix, CliError> {
    let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect();
    if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
        return Err(CliError::shape(format!(
            "{name}: row of length {} where {cols} columns are expected",
            bad.len()
        )));
    }
    let n = rows.len();
    IntMatrix::from_entries(n, cols, rows.into_iter().flatten().collect()).map_err(|e| CliError::shape(format!("{name}: {e}")))
}

/// `{ "rank": r, "torsion": [d₁, …] }`; the torsion list must already be a
/// divisibility chain of factors ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub rank: usize,
    #[serde(default)]
    pub torsion: Vec<Int>,
}

impl GroupSpec {
    pub fn to_group(&self, name: &str) -> Result<FgAbGroup, CliError> {
        FgAbGroup::new(self.torsion.iter().map(|x| x.0.clone()).collect(), self.rank)
            .map_err(|e| CliError::shape(format!("{name}: {e}")))
    }
}

impl From<&FgAbGroup> for GroupSpec {
    fn from(g: &FgAbGroup) -> Self {
        GroupSpec {
            rank: g.rank(),
            torsion: g.torsion().iter().map(Int::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Groups {
    #[serde(rename = "H3")]
    pub h3: GroupSpec,
    #[serde(rename = "H4")]
    pub h4: GroupSpec,
    #[serde(rename = "H5")]
    pub h5: GroupSpec,
    #[serde(rename = "H6")]
    pub h6: GroupSpec,
}

impl From<&Homology> for Groups {
    fn from(h: &Homology) -> Self {
        Groups {
            h3: (&h.h3).into(),
            h4: (&h.h4).into(),
            h5: (&h.h5).into(),
            h6: (&h.h6).into(),
        }
    }
}

/// Cellular chain complex in degrees 3 to 6. `cells` gives the ranks of
/// `C₃ … C₆`; `dₖ` has one row per `(k−1)`-cell and one column per `k`-cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainComplex {
    pub cells: [usize; 4],
    #[serde(default)]
    pub d4: Rows,
    #[serde(default)]
    pub d5: Rows,
    #[serde(default)]
    pub d6: Rows,
}

impl ChainComplex {
    pub fn homology(&self) -> Result<Homology, CliError> {
        let [c3, c4, c5, c6] = self.cells;
        let d4 = matrix_from_rows("d4", c4, &self.d4)?;
        let d5 = matrix_from_rows("d5", c5, &self.d5)?;
        let d6 = matrix_from_rows("d6", c6, &self.d6)?;
        for (name, m, rows) in [("d4", &d4, c3), ("d5", &d5, c4), ("d6", &d6, c5)] {
            if m.rows() != rows {
                return Err(CliError::shape(format!("{name} has {} rows, expected {rows}", m.rows())));
            }
        }
        Ok(homology_of_complex(&d4, &d5, &d6)?)
    }
}

/// The input document. Either `groups` or `chain_complex` (or both, in
/// which case they must agree) determines `H₃ … H₆`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default)]
    pub groups: Option<Groups>,
    /// Rows indexed by the generators of `H₄ ⊗ Z₂` then those of `Λ²H₃`,
    /// columns by the generators of `H₆`.
    #[serde(default)]
    pub b6: Option<Rows>,
    #[serde(default)]
    pub pi5_class: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain_complex: Option<ChainComplex>,
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::parse(format!("invalid input document: {e}")))
    }

    pub fn groups(&self) -> Result<Groups, CliError> {
        match (&self.groups, &self.chain_complex) {
            (Some(g), None) => Ok(g.clone()),
            (None, Some(c)) => Ok(Groups::from(&c.homology()?)),
            (Some(g), Some(c)) => {
                let from_complex = Groups::from(&c.homology()?);
                if &from_complex != g {
                    return Err(CliError::shape(
                        "groups disagree with the homology of chain_complex".to_string(),
                    ));
                }
                Ok(g.clone())
            }
            (None, None) => Err(CliError::parse("either groups or chain_complex is required".to_string())),
        }
    }

    pub fn to_wes_data(&self) -> Result<WesData, CliError> {
        let g = self.groups()?;
        let h3 = g.h3.to_group("H3")?;
        let h4 = g.h4.to_group("H4")?;
        let h5 = g.h5.to_group("H5")?;
        let h6 = g.h6.to_group("H6")?;
        let b6 = self
            .b6
            .as_ref()
            .ok_or_else(|| CliError::parse("b6 is missing".to_string()))?;
        let b6 = matrix_from_rows("b6", h6.num_gens(), b6)?;
        let pi5_class = self
            .pi5_class
            .as_ref()
            .ok_or_else(|| CliError::parse("pi5_class is missing".to_string()))?
            .iter()
            .map(|v| v.iter().map(|x| x.0.clone()).collect())
            .collect();
        Ok(WesData {
            h3,
            h4,
            h5,
            h6,
            b6,
            pi5_class,
        })
    }
}
