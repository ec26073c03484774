//! JSON descriptors for every object the toolkit reads or writes.
//!
//! The formats, with elements as integers in the tower encoding:
//!
//! - field: `{"q": 2, "m": 4, "modulus": [1,1,0,0,1]}` with little-endian
//!   coefficients (constant term first). Optional `"s"` and `"modulus2"`
//!   add a tower top level, optional `"alpha"` pins a custom basis.
//! - code: `{"field": {...}, "n": 4, "kind": "ext"|"matrix",
//!   "basis_used": "alpha"|"alpha_prime", "generators": [...]}`. Ext
//!   generators are vectors over F_{q^m}; matrix generators are arrays of
//!   row arrays over F_q.
//! - pair: the constituent code descriptors plus `{"kind": "I"|"II",
//!   "t": 1}`. Type I stores the effective length-m B, so a parsed pair
//!   reproduces the products exactly regardless of how B was first built.
//! - linearized polynomial: `{"r": 1, "coeffs": [a0, a1, ...]}`.
//! - construction specs: gabidulin `{"k","m","n","r","b"}` and skew
//!   `{"m","s","normal","I","J"}`.
//!
//! Descriptors parse back to the objects they came from, so shipped files
//! round-trip parse -> serialize -> parse. [`Bundle`] is the envelope the
//! command-line tool pipes between construction, encoding, corruption, and
//! decoding steps.

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::code::{ExtCode, MatrixCode};
use crate::decoder::{
    BaseDecode, BasePair, Certificate, DecodeStatus, ExtDecode, ExtPair, PairGrade,
};
use crate::field::{Basis, El, FieldTower};
use crate::hamming::HammingDecode;
use crate::linalg::Mat;
use crate::linpoly::LinPoly;
use crate::{Error, Result};

/// Serialize any descriptor as pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Inconsistent(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

/// Parse a descriptor, keeping serde's line/column diagnostics in the error.
pub fn from_json<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parameter(format!("json: {e}")))
}

/// Tower descriptor. `q` and `m` with the mid-level modulus always; `s` and
/// `modulus2` only for three-level towers; `alpha` only when the basis is
/// not the polynomial basis (1, y, ..., y^(m-1)).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDesc {
    pub q: u64,
    pub m: usize,
    pub modulus: Vec<El>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus2: Option<Vec<El>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<El>>,
}

impl FieldDesc {
    pub fn from_tower(t: &FieldTower) -> FieldDesc {
        let default_alpha: Vec<El> = (0..t.m() as u32).map(|i| t.q().pow(i)).collect();
        FieldDesc {
            q: t.q(),
            m: t.m(),
            modulus: t.mid().modulus().to_vec(),
            s: (t.s() > 1).then(|| t.s()),
            modulus2: t.top().ok().map(|f| f.modulus().to_vec()),
            alpha: (t.alpha() != default_alpha).then(|| t.alpha().to_vec()),
        }
    }

    pub fn to_tower(&self) -> Result<FieldTower> {
        let mut t = FieldTower::new(self.q, self.m, Some(self.modulus.clone()))?;
        if let Some(alpha) = &self.alpha {
            t = t.with_basis(alpha.clone())?;
        }
        if let Some(s) = self.s {
            t = t.with_top_level(s, self.modulus2.clone())?;
        }
        Ok(t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeKind {
    Ext,
    Matrix,
}

/// Generator lists: vectors for ext codes, matrices (arrays of row arrays)
/// for matrix codes. The untagged encoding is unambiguous because the two
/// shapes differ in nesting depth; an empty list reads as either and means
/// the zero code under both kinds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Generators {
    Ext(Vec<Vec<El>>),
    Matrix(Vec<Vec<Vec<El>>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDesc {
    pub field: FieldDesc,
    pub n: usize,
    pub kind: CodeKind,
    /// Which basis expanded an extension code into this matrix code, when
    /// that is where it came from. Informational.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_used: Option<Basis>,
    pub generators: Generators,
}

fn mat_rows(m: &Mat) -> Vec<Vec<El>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

impl CodeDesc {
    pub fn from_ext(t: &FieldTower, code: &ExtCode) -> CodeDesc {
        CodeDesc {
            field: FieldDesc::from_tower(t),
            n: code.n(),
            kind: CodeKind::Ext,
            basis_used: None,
            generators: Generators::Ext(mat_rows(code.generator())),
        }
    }

    pub fn from_matrix(t: &FieldTower, code: &MatrixCode, basis_used: Option<Basis>) -> CodeDesc {
        CodeDesc {
            field: FieldDesc::from_tower(t),
            n: code.cols_n(),
            kind: CodeKind::Matrix,
            basis_used,
            generators: Generators::Matrix(
                code.basis_matrices().iter().map(mat_rows).collect(),
            ),
        }
    }

    pub fn to_ext(&self) -> Result<(FieldTower, ExtCode)> {
        if self.kind != CodeKind::Ext {
            return Err(Error::Parameter("descriptor kind is not \"ext\"".into()));
        }
        let t = self.field.to_tower()?;
        let rows = match &self.generators {
            Generators::Ext(rows) => rows.clone(),
            Generators::Matrix(mats) if mats.is_empty() => Vec::new(),
            Generators::Matrix(_) => {
                return Err(Error::Parameter("ext generators must be vectors".into()))
            }
        };
        let code = ExtCode::from_rows(t.mid(), self.n, rows)?;
        Ok((t, code))
    }

    /// Matrix codes take their row count from the generators; an empty list
    /// falls back to m rows (the shape every expansion of an ext code has).
    pub fn to_matrix(&self) -> Result<(FieldTower, MatrixCode)> {
        if self.kind != CodeKind::Matrix {
            return Err(Error::Parameter("descriptor kind is not \"matrix\"".into()));
        }
        let t = self.field.to_tower()?;
        let mats = match &self.generators {
            Generators::Matrix(mats) => mats.clone(),
            Generators::Ext(rows) if rows.is_empty() => Vec::new(),
            Generators::Ext(_) => {
                return Err(Error::Parameter("matrix generators must be matrices".into()))
            }
        };
        let code = match mats.first() {
            None => MatrixCode::zero(t.m(), self.n),
            Some(first) => {
                let rows_m = first.len();
                let mats: Result<Vec<Mat>> = mats
                    .into_iter()
                    .map(|rows| Mat::from_rows(rows_m, self.n, rows))
                    .collect();
                MatrixCode::from_matrices(t.base(), rows_m, self.n, mats?)?
            }
        };
        Ok((t, code))
    }
}

/// Construction parameters for a Gabidulin code: dimension k, tower degree
/// m, length n, Frobenius stride r, evaluation points b.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GabidulinSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub b: Vec<El>,
}

/// Construction parameters for a skew-cyclic locating pair over the tower
/// F_q ⊆ F_{q^m} ⊆ F_{q^{ms}}: the normal element and the exponent sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    pub m: usize,
    pub s: usize,
    pub normal: El,
    #[serde(rename = "I")]
    pub i_set: Vec<usize>,
    #[serde(rename = "J")]
    pub j_set: Vec<usize>,
}

/// Linearized polynomial with Frobenius stride r.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDesc {
    pub r: usize,
    pub coeffs: Vec<El>,
}

impl PolyDesc {
    pub fn from_poly(p: &LinPoly) -> PolyDesc {
        PolyDesc { r: p.stride(), coeffs: p.coeffs().to_vec() }
    }

    pub fn to_poly(&self) -> Result<LinPoly> {
        LinPoly::new(self.r, self.coeffs.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairKind {
    #[serde(rename = "I")]
    I,
    #[serde(rename = "II")]
    II,
}

/// A pair descriptor: kind I holds ext codes (B in its effective length-m
/// form), kind II holds matrix codes under the trace pairing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDesc {
    pub kind: PairKind,
    pub t: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grade: Option<PairGrade>,
    pub a: CodeDesc,
    pub b: CodeDesc,
    pub c: CodeDesc,
}

impl PairDesc {
    pub fn from_ext_pair(t: &FieldTower, pair: &ExtPair) -> PairDesc {
        PairDesc {
            kind: PairKind::I,
            t: pair.radius(),
            grade: Some(pair.grade()),
            a: CodeDesc::from_ext(t, pair.a()),
            b: CodeDesc::from_ext(t, pair.b_eff()),
            c: CodeDesc::from_ext(t, pair.c()),
        }
    }

    pub fn from_base_pair(t: &FieldTower, pair: &BasePair) -> PairDesc {
        PairDesc {
            kind: PairKind::II,
            t: pair.radius(),
            grade: Some(pair.grade()),
            a: CodeDesc::from_matrix(t, pair.a(), None),
            b: CodeDesc::from_matrix(t, pair.b(), None),
            c: CodeDesc::from_matrix(t, pair.c(), None),
        }
    }

    fn check_fields_agree(&self) -> Result<()> {
        if self.a.field != self.b.field || self.a.field != self.c.field {
            return Err(Error::Parameter("pair codes disagree on the field".into()));
        }
        Ok(())
    }

    /// A missing grade reads as correcting; `validate-pair` tells the truth
    /// either way.
    pub fn to_ext_pair(&self) -> Result<(FieldTower, ExtPair)> {
        if self.kind != PairKind::I {
            return Err(Error::Parameter("pair kind is not \"I\"".into()));
        }
        self.check_fields_agree()?;
        let (t, a) = self.a.to_ext()?;
        let (_, b) = self.b.to_ext()?;
        let (_, c) = self.c.to_ext()?;
        let grade = self.grade.unwrap_or(PairGrade::Correcting);
        let pair = ExtPair::new(&t, a, b, c, self.t, grade)?;
        Ok((t, pair))
    }

    pub fn to_base_pair(&self) -> Result<(FieldTower, BasePair)> {
        if self.kind != PairKind::II {
            return Err(Error::Parameter("pair kind is not \"II\"".into()));
        }
        self.check_fields_agree()?;
        let (t, a) = self.a.to_matrix()?;
        let (_, b) = self.b.to_matrix()?;
        let (_, c) = self.c.to_matrix()?;
        let grade = self.grade.unwrap_or(PairGrade::Correcting);
        let pair = BasePair::new(a, b, c, self.t, grade)?;
        Ok((t, pair))
    }
}

/// A codeword, error, or received word: a vector over F_{q^m} or a matrix
/// over F_q, self-describing by nesting depth.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WordDesc {
    Vector(Vec<El>),
    Matrix(Vec<Vec<El>>),
}

impl WordDesc {
    pub fn from_mat(m: &Mat) -> WordDesc {
        WordDesc::Matrix(mat_rows(m))
    }

    pub fn as_vector(&self) -> Result<&[El]> {
        match self {
            WordDesc::Vector(v) => Ok(v),
            WordDesc::Matrix(_) => Err(Error::Parameter(
                "expected a vector over the extension field, got a matrix".into(),
            )),
        }
    }

    pub fn to_mat(&self) -> Result<Mat> {
        match self {
            WordDesc::Matrix(rows) => {
                let m = rows.len();
                let n = rows.first().map_or(0, |r| r.len());
                Mat::from_rows(m, n, rows.clone())
            }
            WordDesc::Vector(_) => Err(Error::Parameter(
                "expected a matrix over the base field, got a vector".into(),
            )),
        }
    }
}

/// Decode outcome in one shape for all three decoders. `support` is a basis
/// of the located row-support candidate (rank decoders); `positions` lists
/// located coordinates (the Hamming demo decoder).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeDesc {
    pub status: DecodeStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codeword: Option<WordDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<WordDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<Vec<El>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positions: Option<Vec<usize>>,
    pub dim_kernel: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl From<&ExtDecode> for OutcomeDesc {
    fn from(d: &ExtDecode) -> OutcomeDesc {
        OutcomeDesc {
            status: d.status,
            codeword: d.codeword.clone().map(WordDesc::Vector),
            error: d.error.clone().map(WordDesc::Vector),
            support: d.support.as_ref().map(|s| mat_rows(s.basis())),
            positions: None,
            dim_kernel: d.dim_kernel,
            reason: d.reason.clone(),
        }
    }
}

impl From<&BaseDecode> for OutcomeDesc {
    fn from(d: &BaseDecode) -> OutcomeDesc {
        OutcomeDesc {
            status: d.status,
            codeword: d.codeword.as_ref().map(WordDesc::from_mat),
            error: d.error.as_ref().map(WordDesc::from_mat),
            support: d.support.as_ref().map(|s| mat_rows(s.basis())),
            positions: None,
            dim_kernel: d.dim_kernel,
            reason: d.reason.clone(),
        }
    }
}

impl From<&HammingDecode> for OutcomeDesc {
    fn from(d: &HammingDecode) -> OutcomeDesc {
        OutcomeDesc {
            status: d.status,
            codeword: d.codeword.clone().map(WordDesc::Vector),
            error: d.error.clone().map(WordDesc::Vector),
            support: None,
            positions: d.positions.clone(),
            dim_kernel: d.dim_kernel,
            reason: d.reason.clone(),
        }
    }
}

/// The envelope piped between command-line steps. Every key is optional;
/// each step reads the keys it needs, passes the rest through, and adds
/// what it produced. Unknown keys are rejected so typos fail loudly.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bundle {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gabidulin: Option<GabidulinSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skew: Option<SkewSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code: Option<CodeDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<Vec<El>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codeword: Option<WordDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<WordDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub received: Option<WordDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcome: Option<OutcomeDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distance: Option<usize>,
}
