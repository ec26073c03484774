//! Star products on extension vectors and their matrix-space counterpart.
//!
//! For b ∈ F_{q^m}^m and a ∈ F_{q^m}^n, the product b ⋆ a multiplies matrix
//! representations: M(b ⋆ a) = M(b) M(a), where column j of M(v) holds the
//! α-coordinates of v_j. Concretely b ⋆ a = Σ_i b_i u_i with u_i the i-th
//! coordinate row of M(a), entries read back as field constants.
//!
//! The companion pairing c(d), with M(c(d)) = M(c) M(d)ᵀ, detects rank
//! support containment: c(d) = 0 exactly when the support of c lies in the
//! orthogonal complement of the support of d.

use crate::code::{ExtCode, MatrixCode};
use crate::field::{Basis, El, Field, FieldTower};
use crate::linalg::{mat_rep, rep_inverse};
use crate::linpoly::interpolate_moore;
use crate::{Error, Result};

pub fn star(t: &FieldTower, b: &[El], a: &[El]) -> Result<Vec<El>> {
    if b.len() != t.m() {
        return Err(Error::Parameter(format!(
            "left factor length {} must equal extension degree {}",
            b.len(),
            t.m()
        )));
    }
    let f = t.mid();
    let ma = mat_rep(t, a, Basis::Alpha);
    let mut out = vec![0; a.len()];
    for i in 0..t.m() {
        if b[i] == 0 {
            continue;
        }
        for j in 0..a.len() {
            let u = ma.get(i, j);
            if u != 0 {
                out[j] = f.add(out[j], f.mul(b[i], u));
            }
        }
    }
    Ok(out)
}

/// Length adapter onto F_{q^m}^m: truncation for n ≥ m; for n < m the
/// evaluation at the full basis of the unique q-degree < n interpolant
/// through (α_i, c_i). Linear over F_{q^m}, identity at n = m, and fixes
/// the basis prefix: phi_n(α_1..α_n) = α.
pub fn phi_n(t: &FieldTower, c: &[El]) -> Result<Vec<El>> {
    let m = t.m();
    let n = c.len();
    if n == 0 {
        return Err(Error::Parameter("empty vector".into()));
    }
    if n >= m {
        return Ok(c[..m].to_vec());
    }
    let f = t.mid();
    let poly = interpolate_moore(f, t.q(), &t.alpha()[..n], c)?;
    poly.eval_vec(f, t.q(), t.alpha())
}

/// Star product of two length-n vectors: the left one passes through phi_n.
pub fn star_phi(t: &FieldTower, c: &[El], d: &[El]) -> Result<Vec<El>> {
    if c.len() != d.len() {
        return Err(Error::Parameter("factors must share a length".into()));
    }
    star(t, &phi_n(t, c)?, d)
}

/// The pairing c(d) ∈ F_{q^m}^m for c, d ∈ F_{q^m}^n: component i is the
/// dot product of c with the i-th coordinate row of M(d).
pub fn transposed_pairing(t: &FieldTower, c: &[El], d: &[El]) -> Result<Vec<El>> {
    if c.len() != d.len() {
        return Err(Error::Parameter("pairing needs equal lengths".into()));
    }
    let f = t.mid();
    let md = mat_rep(t, d, Basis::Alpha);
    let mut out = vec![0; t.m()];
    for i in 0..t.m() {
        let mut acc = 0;
        for j in 0..c.len() {
            let u = md.get(i, j);
            if u != 0 {
                acc = f.add(acc, f.mul(c[j], u));
            }
        }
        out[i] = acc;
    }
    Ok(out)
}

/// Vector whose matrix representation is M(b)ᵀ.
pub fn vec_transpose(t: &FieldTower, b: &[El]) -> Result<Vec<El>> {
    if b.len() != t.m() {
        return Err(Error::Parameter("transpose needs a length-m vector".into()));
    }
    rep_inverse(t, &mat_rep(t, b, Basis::Alpha).transpose(), Basis::Alpha)
}

/// F_{q^m}-span of { b ⋆ a : b ∈ B, a ∈ A }. The right factor only enters
/// F_q-linearly, so a runs over the F_q-generating set { α_l a_j }.
pub fn space_product_ext(t: &FieldTower, b: &ExtCode, a: &ExtCode) -> Result<ExtCode> {
    if b.n() != t.m() {
        return Err(Error::Parameter("left factor code must have length m".into()));
    }
    let f = t.mid();
    let mut rows = Vec::with_capacity(b.dim() * a.dim() * t.m());
    for i in 0..b.dim() {
        for j in 0..a.dim() {
            for &al in t.alpha() {
                let scaled: Vec<El> =
                    a.generator().row(j).iter().map(|&x| f.mul(al, x)).collect();
                rows.push(star(t, b.generator().row(i), &scaled)?);
            }
        }
    }
    ExtCode::from_rows(f, a.n(), rows)
}

/// F_q-span of the pairwise matrix products of two matrix codes.
pub fn space_product_base(f: &Field, b: &MatrixCode, a: &MatrixCode) -> Result<MatrixCode> {
    if b.cols_n() != a.rows_m() {
        return Err(Error::Parameter("inner matrix dimensions must agree".into()));
    }
    let mut mats = Vec::with_capacity(b.dim_fq() * a.dim_fq());
    for bu in b.basis_matrices() {
        for av in a.basis_matrices() {
            mats.push(bu.mul(f, &av)?);
        }
    }
    MatrixCode::from_matrices(f, b.rows_m(), a.cols_n(), mats)
}

/// Image of the pairing over whole codes: span of { c(d) : c ∈ C, d ∈ D }.
/// Both arguments enter only F_q-linearly through d, and F_{q^m}-linearly
/// through c, so d runs over an F_q-generating set.
pub fn pairing_space(t: &FieldTower, c: &ExtCode, d: &ExtCode) -> Result<ExtCode> {
    if c.n() != d.n() {
        return Err(Error::Parameter("pairing needs equal lengths".into()));
    }
    let f = t.mid();
    let mut rows = Vec::new();
    for i in 0..c.dim() {
        for j in 0..d.dim() {
            for &al in t.alpha() {
                let scaled: Vec<El> =
                    d.generator().row(j).iter().map(|&x| f.mul(al, x)).collect();
                rows.push(transposed_pairing(t, c.generator().row(i), &scaled)?);
            }
        }
    }
    ExtCode::from_rows(f, t.m(), rows)
}
