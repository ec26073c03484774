//! Verified bounds on the minimum rank distance.
//!
//! Every bound here is a verifier, not a prover: the premises of each
//! statement are established by brute force over the given codes, and the
//! asserted conclusion is then compared against the brute-forced actual
//! value. A report with `premises_hold` and `pass` both true is a checked
//! instance of the underlying theorem; a failed premise makes the conclusion
//! unsupported (though `pass` still records whether it happens to hold).
//!
//! Covered: the Singleton sum d_R(D) + d_R(D*) ≤ n + 2, the two product
//! bounds (on d_R(C) and on d_R(A)), the rank analogue of the Roos bound,
//! the rank-HT bound for q-cyclic codes cut out by a normal orbit, and MRD
//! certification with explicit transposition handling for wide codes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::code::MatrixCode;
use crate::families::{frobenius_orbit, skew_cyclic_code};
use crate::field::{El, Field, FieldTower};
use crate::linalg::Subspace;
use crate::star::space_product_base;
use crate::{Error, Result};

/// One premise of a bound, brute-verified.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PremiseCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// Outcome of checking one bound on one instance. `pass` states whether the
/// brute-forced actual value satisfies the asserted conclusion; `verified`
/// additionally requires every premise, and is the only field that certifies
/// an instance of the theorem.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    /// Bound-specific integer parameters (a, b, c, delta, w as applicable).
    pub params: BTreeMap<String, usize>,
    pub premises: Vec<PremiseCheck>,
    pub premises_hold: bool,
    pub conclusion: String,
    /// The brute-forced quantity the conclusion constrains.
    pub actual: usize,
    pub pass: bool,
    pub verified: bool,
}

fn premise(name: &str, holds: bool, detail: String) -> PremiseCheck {
    PremiseCheck { name: name.into(), holds, detail }
}

fn finish(
    name: &str,
    params: BTreeMap<String, usize>,
    premises: Vec<PremiseCheck>,
    conclusion: String,
    actual: usize,
    pass: bool,
) -> BoundReport {
    let premises_hold = premises.iter().all(|p| p.holds);
    BoundReport {
        name: name.into(),
        params,
        premises,
        premises_hold,
        conclusion,
        actual,
        pass,
        verified: premises_hold && pass,
    }
}

/// Checks B·A ⊆ C-dual on basis elements, the shared first premise of the
/// product-style bounds.
fn product_containment(
    f: &Field,
    a: &MatrixCode,
    b: &MatrixCode,
    c: &MatrixCode,
) -> Result<PremiseCheck> {
    let prod = space_product_base(f, b, a)?;
    let c_dual = c.dual(f);
    let dual_space = Subspace::from_mat(f, c_dual.basis_flat().clone());
    for i in 0..prod.dim_fq() {
        if !dual_space.contains(f, prod.basis_flat().row(i)) {
            return Ok(premise(
                "products inside C-dual",
                false,
                format!("product matrix {:?} escapes the dual", prod.basis_matrices()[i]),
            ));
        }
    }
    Ok(premise(
        "products inside C-dual",
        true,
        format!("dim(B*A) = {} within dim(C-dual) = {}", prod.dim_fq(), c_dual.dim_fq()),
    ))
}

/// Singleton sum: d_R(D) + d_R(D*) ≤ n + 2 for every code D ⊆ F_q^{m×n}.
/// Equality forces both D and its dual to be MRD.
pub fn singleton_sum(f: &Field, d: &MatrixCode) -> Result<BoundReport> {
    let n = d.cols_n();
    let dd = d.min_rank_distance(f)?;
    let ddual = d.dual(f).min_rank_distance(f)?;
    let actual = dd + ddual;
    let pass = actual <= n + 2;
    let mut report = finish(
        "singleton-sum",
        BTreeMap::new(),
        Vec::new(),
        format!("d_R(D) + d_R(D*) <= {}", n + 2),
        actual,
        pass,
    );
    if pass && actual == n + 2 {
        report.conclusion.push_str(" (equality: the code and its dual are both MRD)");
    }
    Ok(report)
}

/// First product bound: B·A ⊆ C-dual, d_R(A*) > a > 0 and d_R(B*) > b > 0
/// force d_R(C) ≥ a + b.
pub fn bound_product(
    f: &Field,
    a_code: &MatrixCode,
    b_code: &MatrixCode,
    c_code: &MatrixCode,
    a: usize,
    b: usize,
) -> Result<BoundReport> {
    let mut premises = vec![product_containment(f, a_code, b_code, c_code)?];
    let da = a_code.dual(f).min_rank_distance(f)?;
    premises.push(premise(
        "d_R(A-dual) > a > 0",
        da > a && a > 0,
        format!("d_R(A-dual) = {da}, a = {a}"),
    ));
    let db = b_code.dual(f).min_rank_distance(f)?;
    premises.push(premise(
        "d_R(B-dual) > b > 0",
        db > b && b > 0,
        format!("d_R(B-dual) = {db}, b = {b}"),
    ));
    let actual = c_code.min_rank_distance(f)?;
    // the zero code satisfies any distance lower bound vacuously, even when
    // its sentinel distance ties or undershoots the claimed bound
    Ok(finish(
        "product",
        BTreeMap::from([("a".into(), a), ("b".into(), b)]),
        premises,
        format!("d_R(C) >= {}", a + b),
        actual,
        c_code.dim_fq() == 0 || actual >= a + b,
    ))
}

/// Dual product bound: B·A ⊆ C-dual, d_R(B*) > b > 0 and d_R(C*) > c > 0
/// force d_R(A) ≥ b + c.
pub fn bound_dual_product(
    f: &Field,
    a_code: &MatrixCode,
    b_code: &MatrixCode,
    c_code: &MatrixCode,
    b: usize,
    c: usize,
) -> Result<BoundReport> {
    let mut premises = vec![product_containment(f, a_code, b_code, c_code)?];
    let db = b_code.dual(f).min_rank_distance(f)?;
    premises.push(premise(
        "d_R(B-dual) > b > 0",
        db > b && b > 0,
        format!("d_R(B-dual) = {db}, b = {b}"),
    ));
    let dc = c_code.dual(f).min_rank_distance(f)?;
    premises.push(premise(
        "d_R(C-dual) > c > 0",
        dc > c && c > 0,
        format!("d_R(C-dual) = {dc}, c = {c}"),
    ));
    let actual = a_code.min_rank_distance(f)?;
    Ok(finish(
        "dual-product",
        BTreeMap::from([("b".into(), b), ("c".into(), c)]),
        premises,
        format!("d_R(A) >= {}", b + c),
        actual,
        a_code.dim_fq() == 0 || actual >= b + c,
    ))
}

/// Rank analogue of the Roos bound. Premises, for a, b > 0:
/// (1) B·A ⊆ C-dual, (2) dim(A) > m·a, (3) d_R(B*) > b,
/// (4) d_R(A) + a + b > n, (5) d_R(A*) > 1.
/// Conclusion: d_R(C) > a + b.
pub fn roos_bound(
    f: &Field,
    a_code: &MatrixCode,
    b_code: &MatrixCode,
    c_code: &MatrixCode,
    a: usize,
    b: usize,
) -> Result<BoundReport> {
    let m = a_code.rows_m();
    let n = a_code.cols_n();
    let mut premises = vec![product_containment(f, a_code, b_code, c_code)?];
    let dim_a = a_code.dim_fq();
    premises.push(premise(
        "dim(A) > m*a with a > 0",
        dim_a > m * a && a > 0,
        format!("dim(A) = {dim_a}, m*a = {}", m * a),
    ));
    let db = b_code.dual(f).min_rank_distance(f)?;
    premises.push(premise(
        "d_R(B-dual) > b > 0",
        db > b && b > 0,
        format!("d_R(B-dual) = {db}, b = {b}"),
    ));
    let da = a_code.min_rank_distance(f)?;
    premises.push(premise(
        "d_R(A) + a + b > n",
        da + a + b > n,
        format!("d_R(A) = {da}, a + b = {}, n = {n}", a + b),
    ));
    let da_dual = a_code.dual(f).min_rank_distance(f)?;
    premises.push(premise(
        "d_R(A-dual) > 1",
        da_dual > 1,
        format!("d_R(A-dual) = {da_dual}"),
    ));
    let actual = c_code.min_rank_distance(f)?;
    Ok(finish(
        "roos",
        BTreeMap::from([("a".into(), a), ("b".into(), b)]),
        premises,
        format!("d_R(C) > {}", a + b),
        actual,
        c_code.dim_fq() == 0 || actual > a + b,
    ))
}

/// Rank-HT bound for the q-cyclic code cut out by the parity exponents
/// `i_set` of a normal orbit. Premises: δ + w ≤ m, gcd(c, n) < δ, and the
/// orbit elements at exponents b + i + jc (0 ≤ i ≤ δ-2, 0 ≤ j ≤ w) are
/// independent and lie in the root space. Conclusion: d_R ≥ δ + w.
/// The choice w = 0, c = 1 is the BCH-style case.
pub fn rank_ht_bound(
    t: &FieldTower,
    normal: El,
    i_set: &[usize],
    b: usize,
    c: usize,
    delta: usize,
    w: usize,
) -> Result<BoundReport> {
    if delta < 2 || b == 0 || c == 0 {
        return Err(Error::Parameter("need delta >= 2 and positive b, c".into()));
    }
    let code = skew_cyclic_code(t, normal, i_set)?;
    let n = t.n_top();
    let m = t.m();
    let base = t.base();
    let orbit = frobenius_orbit(t, normal)?;
    let params = BTreeMap::from([
        ("b".into(), b),
        ("c".into(), c),
        ("delta".into(), delta),
        ("w".into(), w),
    ]);

    let mut premises = Vec::with_capacity(4);
    premises.push(premise(
        "delta + w within m",
        delta + w <= m,
        format!("delta + w = {}, m = {m}", delta + w),
    ));
    let d = gcd(c, n);
    premises.push(premise(
        "gcd(c, n) below delta",
        d < delta,
        format!("gcd({c}, {n}) = {d}, delta = {delta}"),
    ));

    // exponents b + i + jc, with multiplicity: a repeat is already a
    // dependence, so rank is compared against the full count
    let mut exps = Vec::new();
    for j in 0..=w {
        for i in 0..=delta.saturating_sub(2) {
            exps.push((b + i + j * c) % n);
        }
    }
    let mut coord_rows = Vec::with_capacity(exps.len());
    for &e in &exps {
        coord_rows.push(t.top_coords_q(orbit[e])?);
    }
    let coords = crate::linalg::Mat::from_rows(exps.len(), n, coord_rows.clone())?;
    let rank = coords.rank(base);
    premises.push(premise(
        "orbit exponents independent",
        rank == exps.len(),
        format!("exponents {exps:?} span rank {rank} of {}", exps.len()),
    ));

    let root_rows: Result<Vec<Vec<El>>> =
        i_set.iter().map(|&i| t.top_coords_q(orbit[i])).collect();
    let root_space = Subspace::from_rows(base, n, root_rows?)?;
    let outside: Vec<usize> = exps
        .iter()
        .enumerate()
        .filter(|&(k, _)| !root_space.contains(base, &coord_rows[k]))
        .map(|(_, &e)| e)
        .collect();
    premises.push(premise(
        "orbit exponents inside the root space",
        outside.is_empty(),
        if outside.is_empty() {
            format!("all {} exponents lie in the root space", exps.len())
        } else {
            format!("exponents {outside:?} fall outside the root space")
        },
    ));

    let actual = code.min_rank_distance(t)?;
    Ok(finish(
        "rank-ht",
        params,
        premises,
        format!("d_R(C) >= {}", delta + w),
        actual,
        actual >= delta + w,
    ))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Singleton equality test: true iff dim(code) = rows·(cols − d + 1) after
/// orienting the code so that cols ≤ rows. Codes with more columns than rows
/// must be passed with `transpose_first` (rank is invariant, so MRD of the
/// transposed code is the right notion); the zero code is vacuously MRD
/// under the sentinel distance.
pub fn mrd_check(f: &Field, code: &MatrixCode, transpose_first: bool) -> Result<bool> {
    let oriented;
    let code = if transpose_first {
        oriented = code.transposed(f)?;
        &oriented
    } else {
        code
    };
    let (m, n) = (code.rows_m(), code.cols_n());
    if n > m {
        return Err(Error::Parameter(format!(
            "{m}x{n} code has more columns than rows; set transpose_first"
        )));
    }
    let d = code.min_rank_distance(f)?;
    Ok(code.dim_fq() == m * (n + 1 - d))
}
