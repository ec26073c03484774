//! Error-correcting pairs in the rank metric and their decoders.
//!
//! Two flavors mirror the two inner products. An [`ExtPair`] holds
//! F_{q^m}-linear codes and works with the extension dot product: A and C
//! have length n, B has length m (a length-n B is passed through the
//! length adapter phi_n first). A [`BasePair`] holds F_q-linear matrix
//! codes paired under the trace form, with A, C of shape m×n and B of
//! shape m×m.
//!
//! Decoding follows the locate-then-erase recipe: compute the kernel space
//! K(r) inside A, take its first canonical basis element a, read off the
//! candidate support as the orthogonal complement of the rank support of a,
//! then solve the erasure system. Out-of-radius inputs surface as statuses,
//! never as panics or errors.

use serde::{Deserialize, Serialize};

use crate::code::{to_matrix_code, ExtCode, MatrixCode};
use crate::field::{Basis, El, Field, FieldTower};
use crate::linalg::{dot, rank_support, trace_pairing, Mat, Subspace};
use crate::star::{phi_n, space_product_base, space_product_ext, star};
use crate::{Error, Result};

/// How much the pair promises: a correcting pair satisfies all four
/// defining conditions, a locating pair only the first three (enough to
/// bound the error support, not to finish decoding in general).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairGrade {
    Correcting,
    Locating,
}

/// Pair of F_{q^m}-linear codes (A, B) targeting C under the extension dot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtPair {
    radius: usize,
    a: ExtCode,
    b: ExtCode,
    b_eff: ExtCode,
    c: ExtCode,
    grade: PairGrade,
}

impl ExtPair {
    /// B may have length m (used as is) or length n (each generator runs
    /// through phi_n, which preserves the span's role in the product).
    pub fn new(
        t: &FieldTower,
        a: ExtCode,
        b: ExtCode,
        c: ExtCode,
        radius: usize,
        grade: PairGrade,
    ) -> Result<ExtPair> {
        let n = c.n();
        let m = t.m();
        let b_eff = if b.n() == m {
            b.clone()
        } else if b.n() == n {
            let f = t.mid();
            let rows: Result<Vec<Vec<El>>> =
                (0..b.dim()).map(|i| phi_n(t, b.generator().row(i))).collect();
            ExtCode::from_rows(f, m, rows?)?
        } else {
            return Err(Error::Parameter(format!(
                "B has length {}, expected {m} or {n}",
                b.n()
            )));
        };
        Self::assemble(t, a, b, b_eff, c, radius, grade)
    }

    /// Length-n B with an explicit first-argument adapter: the effective B
    /// is { b·S : b ∈ B } with S an n×m matrix over F_{q^m}. Constructions
    /// whose products expand along a basis other than the standard one (the
    /// q-cyclic pairs fold along a normal basis of F_{q^n}) pass their S
    /// here instead of relying on the default phi_n.
    pub fn with_adapter(
        t: &FieldTower,
        a: ExtCode,
        b: ExtCode,
        adapter: &Mat,
        c: ExtCode,
        radius: usize,
        grade: PairGrade,
    ) -> Result<ExtPair> {
        let m = t.m();
        if adapter.rows() != b.n() || adapter.cols() != m {
            return Err(Error::Parameter(format!(
                "adapter must be {}x{m}, got {}x{}",
                b.n(),
                adapter.rows(),
                adapter.cols()
            )));
        }
        let f = t.mid();
        let b_eff = ExtCode::from_mat(f, b.generator().mul(f, adapter)?);
        Self::assemble(t, a, b, b_eff, c, radius, grade)
    }

    fn assemble(
        t: &FieldTower,
        a: ExtCode,
        b: ExtCode,
        b_eff: ExtCode,
        c: ExtCode,
        radius: usize,
        grade: PairGrade,
    ) -> Result<ExtPair> {
        if a.n() != c.n() {
            return Err(Error::Parameter("A and C must share a length".into()));
        }
        if b_eff.n() != t.m() {
            return Err(Error::Parameter("effective B must have length m".into()));
        }
        if radius == 0 {
            return Err(Error::Parameter("radius must be positive".into()));
        }
        Ok(ExtPair { radius, a, b, b_eff, c, grade })
    }

    pub fn n(&self) -> usize {
        self.c.n()
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn a(&self) -> &ExtCode {
        &self.a
    }

    /// B exactly as constructed (possibly length n).
    pub fn b(&self) -> &ExtCode {
        &self.b
    }

    /// The length-m code actually used in products.
    pub fn b_eff(&self) -> &ExtCode {
        &self.b_eff
    }

    pub fn c(&self) -> &ExtCode {
        &self.c
    }

    pub fn grade(&self) -> PairGrade {
        self.grade
    }
}

/// Pair of F_q-linear matrix codes (A, B) targeting C under ⟨X, Y⟩ = Tr(XYᵀ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasePair {
    radius: usize,
    a: MatrixCode,
    b: MatrixCode,
    c: MatrixCode,
    grade: PairGrade,
}

impl BasePair {
    pub fn new(
        a: MatrixCode,
        b: MatrixCode,
        c: MatrixCode,
        radius: usize,
        grade: PairGrade,
    ) -> Result<BasePair> {
        let (m, n) = (c.rows_m(), c.cols_n());
        if a.rows_m() != m || a.cols_n() != n {
            return Err(Error::Parameter("A and C must share the m×n shape".into()));
        }
        if b.rows_m() != m || b.cols_n() != m {
            return Err(Error::Parameter("B must be an m×m matrix code".into()));
        }
        if radius == 0 {
            return Err(Error::Parameter("radius must be positive".into()));
        }
        Ok(BasePair { radius, a, b, c, grade })
    }

    pub fn rows_m(&self) -> usize {
        self.c.rows_m()
    }

    pub fn cols_n(&self) -> usize {
        self.c.cols_n()
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn a(&self) -> &MatrixCode {
        &self.a
    }

    pub fn b(&self) -> &MatrixCode {
        &self.b
    }

    pub fn c(&self) -> &MatrixCode {
        &self.c
    }

    pub fn grade(&self) -> PairGrade {
        self.grade
    }
}

/// K(r) = { a ∈ A : (b ⋆ a)·r = 0 for all b ∈ B }, an F_q-subspace of A.
///
/// Solved as an F_q system: a = Σ x_{jl} (α_l a_j) over the F_q-basis built
/// from A's generators, each F_{q^m} condition expanded into m coordinate
/// equations. Returns a canonical F_q-basis (rows), so equal spaces yield
/// identical bases.
pub fn kernel_space_ext(t: &FieldTower, pair: &ExtPair, r: &[El]) -> Result<Vec<Vec<El>>> {
    if r.len() != pair.n() {
        return Err(Error::Parameter("received length mismatch".into()));
    }
    let f = t.mid();
    let fq = t.base();
    let m = t.m();
    let ka = pair.a.dim();
    let kb = pair.b_eff.dim();
    // F_q-basis of A: alpha_l * a_j, column index j*m + l
    let mut basis_vecs = Vec::with_capacity(ka * m);
    for j in 0..ka {
        for &al in t.alpha() {
            let v: Vec<El> =
                pair.a.generator().row(j).iter().map(|&x| f.mul(al, x)).collect();
            basis_vecs.push(v);
        }
    }
    let mut sys = Mat::zero(kb * m, ka * m);
    for i in 0..kb {
        for (col, v) in basis_vecs.iter().enumerate() {
            let prod = star(t, pair.b_eff.generator().row(i), v)?;
            let val = dot(f, &prod, r);
            for (u, d) in f.digits(val).into_iter().enumerate() {
                sys.set(i * m + u, col, d);
            }
        }
    }
    let kernel = sys.right_kernel(fq);
    let mut out = Vec::with_capacity(kernel.rows());
    for row in 0..kernel.rows() {
        let mut v = vec![0; pair.n()];
        for (col, bv) in basis_vecs.iter().enumerate() {
            let x = kernel.get(row, col);
            if x != 0 {
                for i in 0..pair.n() {
                    v[i] = f.add(v[i], f.mul(x, bv[i]));
                }
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// K(R) = { A ∈ 𝓐 : ⟨BA, R⟩ = 0 for all B ∈ 𝓑 }, canonical F_q-basis.
pub fn kernel_space_base(fq: &Field, pair: &BasePair, r: &Mat) -> Result<Vec<Mat>> {
    if r.rows() != pair.rows_m() || r.cols() != pair.cols_n() {
        return Err(Error::Parameter("received shape mismatch".into()));
    }
    let ka = pair.a.dim_fq();
    let kb = pair.b.dim_fq();
    let a_mats = pair.a.basis_matrices();
    let b_mats = pair.b.basis_matrices();
    let mut sys = Mat::zero(kb, ka);
    for (i, bm) in b_mats.iter().enumerate() {
        for (u, am) in a_mats.iter().enumerate() {
            sys.set(i, u, trace_pairing(fq, &bm.mul(fq, am)?, r));
        }
    }
    let kernel = sys.right_kernel(fq);
    let mut out = Vec::with_capacity(kernel.rows());
    for row in 0..kernel.rows() {
        let mut acc = Mat::zero(pair.rows_m(), pair.cols_n());
        for (u, am) in a_mats.iter().enumerate() {
            let x = kernel.get(row, u);
            if x != 0 {
                acc = acc.add(fq, &am.scale(fq, x))?;
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Erasure decoding: given that the error's rank support lies in L with
/// dim L < d_R(C), recover (codeword, error) from the parity system
/// e·Hᵀ = r·Hᵀ with e = Σ λ_j g_j, λ_j ∈ F_{q^m}, g_j the rows of L.
///
/// dim L ≥ d_R(C) is a precondition error (uniqueness lost); an unsolvable
/// system is an inconsistency error (r breaks the support promise).
pub fn erasure_decode(
    t: &FieldTower,
    c: &ExtCode,
    r: &[El],
    l: &Subspace,
) -> Result<(Vec<El>, Vec<El>)> {
    let n = c.n();
    if r.len() != n || l.ambient() != n {
        return Err(Error::Parameter("length mismatch".into()));
    }
    let f = t.mid();
    let d = c.min_rank_distance(t)?;
    if l.dim() >= d {
        return Err(Error::Precondition(format!(
            "support dimension {} is not below the code distance {}",
            l.dim(),
            d
        )));
    }
    let parity = c.dual(f);
    let rows = parity.dim();
    let mut sys = Mat::zero(rows, l.dim());
    let mut rhs = vec![0; rows];
    for i in 0..rows {
        let h = parity.generator().row(i);
        for j in 0..l.dim() {
            sys.set(i, j, dot(f, l.basis().row(j), h));
        }
        rhs[i] = dot(f, r, h);
    }
    let (lambda, kernel) = crate::linalg::solve_linear(f, &sys, &rhs)
        .ok_or_else(|| Error::Inconsistent("no error with the promised support".into()))?;
    if kernel.rows() > 0 {
        // cannot happen once dim L < d_R(C): the kernel is the shortened code
        return Err(Error::Inconsistent("support admits multiple completions".into()));
    }
    let mut e = vec![0; n];
    for (j, &lam) in lambda.iter().enumerate() {
        if lam != 0 {
            for i in 0..n {
                e[i] = f.add(e[i], f.mul(lam, l.basis().get(j, i)));
            }
        }
    }
    let cw: Vec<El> = r.iter().zip(&e).map(|(&x, &y)| f.sub(x, y)).collect();
    Ok((cw, e))
}

/// Matrix-side erasure decoding: E = Z·G with Z ∈ F_q^{m×dim L} unknown,
/// solved against a basis of the trace-pairing dual of 𝓒.
pub fn erasure_decode_base(
    fq: &Field,
    c: &MatrixCode,
    r: &Mat,
    l: &Subspace,
) -> Result<(Mat, Mat)> {
    let (m, n) = (c.rows_m(), c.cols_n());
    if r.rows() != m || r.cols() != n || l.ambient() != n {
        return Err(Error::Parameter("shape mismatch".into()));
    }
    let d = c.min_rank_distance(fq)?;
    if l.dim() >= d {
        return Err(Error::Precondition(format!(
            "support dimension {} is not below the code distance {}",
            l.dim(),
            d
        )));
    }
    let dual = c.dual(fq);
    let ldim = l.dim();
    let mut sys = Mat::zero(dual.dim_fq(), m * ldim);
    let mut rhs = vec![0; dual.dim_fq()];
    for (eq, p) in dual.basis_matrices().into_iter().enumerate() {
        // ⟨ZG, P⟩ = Σ_{i,u} Z_{iu} (G_u · P_i)
        for i in 0..m {
            for u in 0..ldim {
                sys.set(eq, i * ldim + u, dot(fq, l.basis().row(u), p.row(i)));
            }
        }
        rhs[eq] = trace_pairing(fq, r, &p);
    }
    let (z, kernel) = crate::linalg::solve_linear(fq, &sys, &rhs)
        .ok_or_else(|| Error::Inconsistent("no error with the promised support".into()))?;
    if kernel.rows() > 0 {
        return Err(Error::Inconsistent("support admits multiple completions".into()));
    }
    let zmat = Mat::from_fn(m, ldim, |i, u| z[i * ldim + u]);
    let e = zmat.mul(fq, l.basis())?;
    let cw = r.sub(fq, &e)?;
    Ok((cw, e))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecodeStatus {
    Success,
    LocatedOnly,
    Failure,
}

/// Outcome of a full decode attempt on an extension vector.
#[derive(Debug, Clone)]
pub struct ExtDecode {
    pub status: DecodeStatus,
    pub codeword: Option<Vec<El>>,
    pub error: Option<Vec<El>>,
    /// The located support candidate L′ (present whenever a locator was found).
    pub support: Option<Subspace>,
    pub dim_kernel: usize,
    pub reason: Option<String>,
}

/// Outcome of a full decode attempt on a base matrix.
#[derive(Debug, Clone)]
pub struct BaseDecode {
    pub status: DecodeStatus,
    pub codeword: Option<Mat>,
    pub error: Option<Mat>,
    pub support: Option<Subspace>,
    pub dim_kernel: usize,
    pub reason: Option<String>,
}

/// Locate-then-erase decoding with an extension pair. Corrects every error
/// of rank weight up to the pair radius when the pair is correcting.
pub fn decode_ext(t: &FieldTower, pair: &ExtPair, r: &[El]) -> Result<ExtDecode> {
    let kb = kernel_space_ext(t, pair, r)?;
    let dim_kernel = kb.len();
    if kb.is_empty() {
        return Ok(ExtDecode {
            status: DecodeStatus::Failure,
            codeword: None,
            error: None,
            support: None,
            dim_kernel,
            reason: Some("locator space is zero (weight above radius or pair invalid)".into()),
        });
    }
    let support = rank_support(t, &kb[0]).perp(t.base());
    match erasure_decode(t, &pair.c, r, &support) {
        Ok((codeword, error)) => Ok(ExtDecode {
            status: DecodeStatus::Success,
            codeword: Some(codeword),
            error: Some(error),
            support: Some(support),
            dim_kernel,
            reason: None,
        }),
        Err(Error::Precondition(msg)) => Ok(ExtDecode {
            status: DecodeStatus::LocatedOnly,
            codeword: None,
            error: None,
            support: Some(support),
            dim_kernel,
            reason: Some(msg),
        }),
        Err(Error::Inconsistent(msg)) => Ok(ExtDecode {
            status: DecodeStatus::Failure,
            codeword: None,
            error: None,
            support: Some(support),
            dim_kernel,
            reason: Some(msg),
        }),
        Err(other) => Err(other),
    }
}

/// Locate-then-erase decoding with a base pair.
pub fn decode_base(fq: &Field, pair: &BasePair, r: &Mat) -> Result<BaseDecode> {
    let kb = kernel_space_base(fq, pair, r)?;
    let dim_kernel = kb.len();
    if kb.is_empty() {
        return Ok(BaseDecode {
            status: DecodeStatus::Failure,
            codeword: None,
            error: None,
            support: None,
            dim_kernel,
            reason: Some("locator space is zero (weight above radius or pair invalid)".into()),
        });
    }
    let support = Subspace::from_mat(fq, kb[0].clone()).perp(fq);
    match erasure_decode_base(fq, &pair.c, r, &support) {
        Ok((codeword, error)) => Ok(BaseDecode {
            status: DecodeStatus::Success,
            codeword: Some(codeword),
            error: Some(error),
            support: Some(support),
            dim_kernel,
            reason: None,
        }),
        Err(Error::Precondition(msg)) => Ok(BaseDecode {
            status: DecodeStatus::LocatedOnly,
            codeword: None,
            error: None,
            support: Some(support),
            dim_kernel,
            reason: Some(msg),
        }),
        Err(Error::Inconsistent(msg)) => Ok(BaseDecode {
            status: DecodeStatus::Failure,
            codeword: None,
            error: None,
            support: Some(support),
            dim_kernel,
            reason: Some(msg),
        }),
        Err(other) => Err(other),
    }
}

/// Support location only (the first three pair conditions suffice): returns
/// L′ ⊇ RSupp(e) whenever wt_R(e) ≤ radius, or None when no locator exists.
pub fn locate_support_ext(
    t: &FieldTower,
    pair: &ExtPair,
    r: &[El],
) -> Result<Option<Subspace>> {
    let kb = kernel_space_ext(t, pair, r)?;
    Ok(kb.first().map(|a| rank_support(t, a).perp(t.base())))
}

pub fn locate_support_base(
    fq: &Field,
    pair: &BasePair,
    r: &Mat,
) -> Result<Option<Subspace>> {
    let kb = kernel_space_base(fq, pair, r)?;
    Ok(kb.first().map(|a| Subspace::from_mat(fq, a.clone()).perp(fq)))
}

/// One defining condition, brute-verified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// Per-condition validation result for a pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: String,
    pub conditions: Vec<ConditionCheck>,
    /// Conditions 1 to 3 hold: the pair can bound error supports.
    pub locating: bool,
    /// All four conditions hold: the pair decodes up to its radius.
    pub correcting: bool,
}

fn check(name: &str, holds: bool, detail: String) -> ConditionCheck {
    ConditionCheck { name: name.into(), holds, detail }
}

fn min_weight_witness_ext(t: &FieldTower, code: &ExtCode, d: usize) -> Option<Vec<El>> {
    let f = t.mid();
    for idx in 1..code.size(f) {
        let w = code.codeword_at(f, idx);
        if crate::linalg::rank_weight(t, &w) == d {
            return Some(w);
        }
    }
    None
}

fn min_weight_witness_base(fq: &Field, code: &MatrixCode, d: usize) -> Option<Mat> {
    for idx in 1..code.size(fq) {
        let w = code.element_at(fq, idx);
        if w.rank(fq) == d {
            return Some(w);
        }
    }
    None
}

/// Brute-force verification of the four extension-pair conditions.
pub fn validate_ext_pair(t: &FieldTower, pair: &ExtPair) -> Result<Certificate> {
    let f = t.mid();
    let n = pair.n();
    let radius = pair.radius;
    let mut conditions = Vec::with_capacity(4);

    let prod = space_product_ext(t, &pair.b_eff, &pair.a)?;
    let c_perp = pair.c.dual(f);
    let perp_space = Subspace::from_mat(f, c_perp.generator().clone());
    let mut witness = None;
    for i in 0..prod.dim() {
        if !perp_space.contains(f, prod.generator().row(i)) {
            witness = Some(prod.generator().row(i).to_vec());
            break;
        }
    }
    conditions.push(check(
        "B*A inside C-perp",
        witness.is_none(),
        match &witness {
            None => format!("dim(B*A) = {} within dim(C-perp) = {}", prod.dim(), c_perp.dim()),
            Some(w) => format!("product vector {w:?} escapes C-perp"),
        },
    ));

    let dim_a = pair.a.dim();
    conditions.push(check(
        "dim(A) exceeds radius",
        dim_a > radius,
        format!("dim(A) = {dim_a}, radius = {radius}"),
    ));

    let b_perp = pair.b_eff.dual(f);
    let db = b_perp.min_rank_distance(t)?;
    conditions.push(check(
        "d_R(B-perp) exceeds radius",
        db > radius,
        if db > radius {
            format!("d_R(B-perp) = {db}, radius = {radius}")
        } else {
            format!(
                "d_R(B-perp) = {db} realized by {:?}",
                min_weight_witness_ext(t, &b_perp, db)
            )
        },
    ));

    let da = pair.a.min_rank_distance(t)?;
    let dc = pair.c.min_rank_distance(t)?;
    conditions.push(check(
        "d_R(A) + d_R(C) exceeds length",
        da + dc > n,
        format!("d_R(A) = {da}, d_R(C) = {dc}, length = {n}"),
    ));

    let locating = conditions[..3].iter().all(|c| c.holds);
    let correcting = locating && conditions[3].holds;
    Ok(Certificate { kind: "I".into(), conditions, locating, correcting })
}

/// Brute-force verification of the four base-pair conditions.
pub fn validate_base_pair(fq: &Field, pair: &BasePair) -> Result<Certificate> {
    let (m, n) = (pair.rows_m(), pair.cols_n());
    let radius = pair.radius;
    let mut conditions = Vec::with_capacity(4);

    let prod = space_product_base(fq, &pair.b, &pair.a)?;
    let c_dual = pair.c.dual(fq);
    let dual_space = Subspace::from_mat(fq, c_dual.basis_flat().clone());
    let mut witness = None;
    for i in 0..prod.dim_fq() {
        if !dual_space.contains(fq, prod.basis_flat().row(i)) {
            witness = Some(prod.basis_matrices()[i].clone());
            break;
        }
    }
    conditions.push(check(
        "B*A inside C-dual",
        witness.is_none(),
        match &witness {
            None => format!(
                "dim(B*A) = {} within dim(C-dual) = {}",
                prod.dim_fq(),
                c_dual.dim_fq()
            ),
            Some(w) => format!("product matrix {w:?} escapes the dual"),
        },
    ));

    let dim_a = pair.a.dim_fq();
    conditions.push(check(
        "dim(A) exceeds m*radius",
        dim_a > m * radius,
        format!("dim(A) = {dim_a}, m*radius = {}", m * radius),
    ));

    let b_dual = pair.b.dual(fq);
    let db = b_dual.min_rank_distance(fq)?;
    conditions.push(check(
        "d_R(B-dual) exceeds radius",
        db > radius,
        if db > radius {
            format!("d_R(B-dual) = {db}, radius = {radius}")
        } else {
            format!(
                "d_R(B-dual) = {db} realized by {:?}",
                min_weight_witness_base(fq, &b_dual, db)
            )
        },
    ));

    let da = pair.a.min_rank_distance(fq)?;
    let dc = pair.c.min_rank_distance(fq)?;
    conditions.push(check(
        "d_R(A) + d_R(C) exceeds length",
        da + dc > n,
        format!("d_R(A) = {da}, d_R(C) = {dc}, length = {n}"),
    ));

    let locating = conditions[..3].iter().all(|c| c.holds);
    let correcting = locating && conditions[3].holds;
    Ok(Certificate { kind: "II".into(), conditions, locating, correcting })
}

/// Extension pair to base pair: representations in the α basis for A and B,
/// in the dual basis for the target C. Duality swaps the bases, so every
/// condition carries over with the same radius.
pub fn convert_pair(t: &FieldTower, pair: &ExtPair) -> Result<BasePair> {
    let a = to_matrix_code(t, &pair.a, Basis::Alpha)?;
    let b = to_matrix_code(t, &pair.b_eff, Basis::Alpha)?;
    let c = to_matrix_code(t, &pair.c, Basis::AlphaPrime)?;
    BasePair::new(a, b, c, pair.radius, pair.grade)
}
