//! Linear codes in the two rank-metric guises: F_{q^m}-linear codes in
//! F_{q^m}^n and F_q-linear spaces of m×n matrices over F_q. Both carry
//! canonical (reduced echelon) generators, so equal codes compare equal.
//!
//! Distances and the maximum-likelihood decoder are deliberately brute force:
//! they enumerate the code (capped at [`crate::BRUTE_FORCE_CAP`]) and serve
//! as the ground truth that the structured decoders are tested against.

use std::sync::OnceLock;

use rand::Rng;

use crate::field::{Basis, El, Field, FieldTower};
use crate::linalg::{dot, mat_rep, rank_weight, Mat, Subspace};
use crate::{Error, Result, BRUTE_FORCE_CAP};

/// F_{q^m}-linear code of length n, generators in canonical form.
#[derive(Clone)]
pub struct ExtCode {
    n: usize,
    gen: Mat,
    dist: OnceLock<usize>,
}

impl PartialEq for ExtCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.gen == other.gen
    }
}
impl Eq for ExtCode {}

impl std::fmt::Debug for ExtCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ExtCode[{},{}] {:?}", self.n, self.dim(), self.gen)
    }
}

impl ExtCode {
    pub fn from_rows(f: &Field, n: usize, rows: Vec<Vec<El>>) -> Result<ExtCode> {
        let m = Mat::from_rows(rows.len(), n, rows)?;
        Ok(Self::from_mat(f, m))
    }

    pub fn from_mat(f: &Field, m: Mat) -> ExtCode {
        let n = m.cols();
        let space = Subspace::from_mat(f, m);
        ExtCode { n, gen: space.basis().clone(), dist: OnceLock::new() }
    }

    pub fn zero(n: usize) -> ExtCode {
        ExtCode { n, gen: Mat::zero(0, n), dist: OnceLock::new() }
    }

    pub fn full(n: usize) -> ExtCode {
        ExtCode { n, gen: Mat::identity(n), dist: OnceLock::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &Mat {
        &self.gen
    }

    pub fn contains(&self, f: &Field, v: &[El]) -> bool {
        let s = Subspace::from_mat(f, self.gen.clone());
        s.contains(f, v)
    }

    pub fn dual(&self, f: &Field) -> ExtCode {
        ExtCode { n: self.n, gen: self.gen.right_kernel(f), dist: OnceLock::new() }
    }

    /// Number of codewords, saturating at u128::MAX (which is far beyond
    /// [`BRUTE_FORCE_CAP`], so enumeration guards still fire).
    pub fn size(&self, f: &Field) -> u128 {
        (f.order() as u128).checked_pow(self.dim() as u32).unwrap_or(u128::MAX)
    }

    /// Codeword for a message index (base-|F| digits select the message).
    pub fn codeword_at(&self, f: &Field, idx: u128) -> Vec<El> {
        let mut out = vec![0; self.n];
        let mut v = idx;
        for j in 0..self.dim() {
            let d = (v % f.order() as u128) as El;
            v /= f.order() as u128;
            if d == 0 {
                continue;
            }
            for c in 0..self.n {
                out[c] = f.add(out[c], f.mul(d, self.gen.get(j, c)));
            }
        }
        out
    }

    pub fn encode(&self, f: &Field, message: &[El]) -> Result<Vec<El>> {
        if message.len() != self.dim() {
            return Err(Error::Parameter(format!(
                "message length {} != dimension {}",
                message.len(),
                self.dim()
            )));
        }
        let mut out = vec![0; self.n];
        for (j, &d) in message.iter().enumerate() {
            for c in 0..self.n {
                out[c] = f.add(out[c], f.mul(d, self.gen.get(j, c)));
            }
        }
        Ok(out)
    }

    fn check_size(&self, f: &Field) -> Result<u128> {
        let size = self.size(f);
        if size > BRUTE_FORCE_CAP {
            return Err(Error::TooLarge { size, cap: BRUTE_FORCE_CAP });
        }
        Ok(size)
    }

    /// Minimum rank distance by enumeration; the zero code returns the
    /// sentinel n+1. Cached per code.
    pub fn min_rank_distance(&self, t: &FieldTower) -> Result<usize> {
        if let Some(&d) = self.dist.get() {
            return Ok(d);
        }
        let f = t.mid();
        let size = self.check_size(f)?;
        let mut best = self.n + 1;
        for idx in 1..size {
            let c = self.codeword_at(f, idx);
            best = best.min(rank_weight(t, &c));
            if best == 1 {
                break;
            }
        }
        let _ = self.dist.set(best);
        Ok(best)
    }

    /// Exact nearest-codeword decoding in the rank metric. Ties are broken
    /// toward the lexicographically smallest codeword (element encodings
    /// compared left to right) and reported via the flag.
    pub fn ml_decode(&self, t: &FieldTower, r: &[El]) -> Result<MlOutcome> {
        if r.len() != self.n {
            return Err(Error::Parameter("received length mismatch".into()));
        }
        let f = t.mid();
        let size = self.check_size(f)?;
        let mut best: Option<(usize, Vec<El>)> = None;
        let mut tie = false;
        for idx in 0..size {
            let c = self.codeword_at(f, idx);
            let e: Vec<El> = r.iter().zip(&c).map(|(&a, &b)| f.sub(a, b)).collect();
            let d = rank_weight(t, &e);
            match &mut best {
                None => best = Some((d, c)),
                Some((bd, bc)) => {
                    if d < *bd {
                        *bd = d;
                        *bc = c;
                        tie = false;
                    } else if d == *bd {
                        tie = true;
                        if c < *bc {
                            *bc = c;
                        }
                    }
                }
            }
        }
        let (distance, codeword) = best.expect("code has at least the zero word");
        Ok(MlOutcome { codeword, distance, tie })
    }

    /// Shortening at L: the subcode { a : a·v = 0 for all v ∈ L }, i.e. the
    /// words whose rank support lies in L-perp. L is a space of F_q rows.
    pub fn shorten(&self, t: &FieldTower, l: &Subspace) -> Result<ExtCode> {
        if l.ambient() != self.n {
            return Err(Error::Parameter("support ambient mismatch".into()));
        }
        let f = t.mid();
        let k = self.dim();
        // message x satisfies, per support generator v: Σ_j x_j (g_j · v) = 0
        let mut sys = Mat::zero(l.dim(), k);
        for i in 0..l.dim() {
            let v = l.basis().row(i);
            for j in 0..k {
                sys.set(i, j, dot(f, self.gen.row(j), v));
            }
        }
        let kernel = sys.right_kernel(f);
        let new_gen = kernel.mul(f, &self.gen)?;
        Ok(ExtCode::from_mat(f, new_gen))
    }

    pub fn sum(&self, f: &Field, other: &ExtCode) -> Result<ExtCode> {
        if self.n != other.n {
            return Err(Error::Parameter("length mismatch".into()));
        }
        Ok(ExtCode::from_mat(f, self.gen.vstack(&other.gen)?))
    }

    pub fn intersect(&self, f: &Field, other: &ExtCode) -> Result<ExtCode> {
        // (C ∩ D)-perp = C-perp + D-perp under the nondegenerate standard form.
        Ok(self.dual(f).sum(f, &other.dual(f))?.dual(f))
    }

    /// Entrywise q^j-power image: a code again, since Frobenius is a field
    /// automorphism and scalars pass through semilinearly.
    pub fn frobenius_image(&self, f: &Field, q: u64, j: usize) -> Result<ExtCode> {
        let mut rows = Vec::with_capacity(self.dim());
        for r in 0..self.dim() {
            let row: Result<Vec<El>> =
                self.gen.row(r).iter().map(|&x| f.frobenius(q, x, j)).collect();
            rows.push(row?);
        }
        ExtCode::from_rows(f, self.n, rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MlOutcome {
    pub codeword: Vec<El>,
    pub distance: usize,
    /// Another codeword achieved the same distance.
    pub tie: bool,
}

/// F_q-linear space of m×n matrices, basis rows = flattened matrices
/// (row-major), in canonical form.
#[derive(Clone)]
pub struct MatrixCode {
    m: usize,
    n: usize,
    basis: Mat,
    dist: OnceLock<usize>,
}

impl PartialEq for MatrixCode {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.n == other.n && self.basis == other.basis
    }
}
impl Eq for MatrixCode {}

impl std::fmt::Debug for MatrixCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MatrixCode[{}x{}, dim {}] {:?}", self.m, self.n, self.dim_fq(), self.basis)
    }
}

impl MatrixCode {
    pub fn from_flat_rows(f: &Field, m: usize, n: usize, rows: Vec<Vec<El>>) -> Result<MatrixCode> {
        let mat = Mat::from_rows(rows.len(), m * n, rows)?;
        Self::from_flat_mat(f, m, n, mat)
    }

    pub fn from_flat_mat(f: &Field, m: usize, n: usize, mat: Mat) -> Result<MatrixCode> {
        if mat.cols() != m * n {
            return Err(Error::Parameter("flattened width must be m*n".into()));
        }
        let space = Subspace::from_mat(f, mat);
        Ok(MatrixCode { m, n, basis: space.basis().clone(), dist: OnceLock::new() })
    }

    pub fn from_matrices(f: &Field, m: usize, n: usize, mats: Vec<Mat>) -> Result<MatrixCode> {
        let rows: Result<Vec<Vec<El>>> = mats
            .into_iter()
            .map(|mt| {
                if mt.rows() != m || mt.cols() != n {
                    Err(Error::Parameter("generator matrix shape mismatch".into()))
                } else {
                    Ok(mt.flatten().to_vec())
                }
            })
            .collect();
        Self::from_flat_rows(f, m, n, rows?)
    }

    pub fn zero(m: usize, n: usize) -> MatrixCode {
        MatrixCode { m, n, basis: Mat::zero(0, m * n), dist: OnceLock::new() }
    }

    pub fn rows_m(&self) -> usize {
        self.m
    }

    pub fn cols_n(&self) -> usize {
        self.n
    }

    pub fn dim_fq(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis_flat(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_matrices(&self) -> Vec<Mat> {
        (0..self.dim_fq()).map(|r| self.matrix_at_row(r)).collect()
    }

    fn matrix_at_row(&self, r: usize) -> Mat {
        Mat::from_fn(self.m, self.n, |i, j| self.basis.get(r, i * self.n + j))
    }

    pub fn contains(&self, f: &Field, mat: &Mat) -> bool {
        let s = Subspace::from_mat(f, self.basis.clone());
        s.contains(f, mat.flatten())
    }

    /// Dual under the trace pairing ⟨C, D⟩ = Tr(C Dᵀ), which is the standard
    /// dot product of flattenings.
    pub fn dual(&self, f: &Field) -> MatrixCode {
        MatrixCode { m: self.m, n: self.n, basis: self.basis.right_kernel(f), dist: OnceLock::new() }
    }

    pub fn size(&self, f: &Field) -> u128 {
        (f.order() as u128).checked_pow(self.dim_fq() as u32).unwrap_or(u128::MAX)
    }

    pub fn element_at(&self, f: &Field, idx: u128) -> Mat {
        let mut flat = vec![0; self.m * self.n];
        let mut v = idx;
        for r in 0..self.dim_fq() {
            let d = (v % f.order() as u128) as El;
            v /= f.order() as u128;
            if d == 0 {
                continue;
            }
            for c in 0..flat.len() {
                flat[c] = f.add(flat[c], f.mul(d, self.basis.get(r, c)));
            }
        }
        Mat::from_rows(self.m, self.n, flat.chunks(self.n).map(|ch| ch.to_vec()).collect())
            .expect("shape by construction")
    }

    fn check_size(&self, f: &Field) -> Result<u128> {
        let size = self.size(f);
        if size > BRUTE_FORCE_CAP {
            return Err(Error::TooLarge { size, cap: BRUTE_FORCE_CAP });
        }
        Ok(size)
    }

    /// Minimum rank over the nonzero elements; the zero code returns the
    /// sentinel n+1 (n = column count).
    pub fn min_rank_distance(&self, f: &Field) -> Result<usize> {
        if let Some(&d) = self.dist.get() {
            return Ok(d);
        }
        let size = self.check_size(f)?;
        let mut best = self.n + 1;
        for idx in 1..size {
            let m = self.element_at(f, idx);
            best = best.min(m.rank(f));
            if best == 1 {
                break;
            }
        }
        let _ = self.dist.set(best);
        Ok(best)
    }

    /// Exact nearest-element decoding in rank distance, lexicographic
    /// tie-break on the flattened element.
    pub fn ml_decode(&self, f: &Field, r: &Mat) -> Result<(Mat, usize, bool)> {
        if r.rows() != self.m || r.cols() != self.n {
            return Err(Error::Parameter("received shape mismatch".into()));
        }
        let size = self.check_size(f)?;
        let mut best: Option<(usize, Mat)> = None;
        let mut tie = false;
        for idx in 0..size {
            let c = self.element_at(f, idx);
            let d = r.sub(f, &c)?.rank(f);
            match &mut best {
                None => best = Some((d, c)),
                Some((bd, bc)) => {
                    if d < *bd {
                        *bd = d;
                        *bc = c;
                        tie = false;
                    } else if d == *bd {
                        tie = true;
                        if c.flatten() < bc.flatten() {
                            *bc = c;
                        }
                    }
                }
            }
        }
        let (distance, element) = best.expect("nonempty");
        Ok((element, distance, tie))
    }

    /// The code of transposed elements, an n×m code with the same distance.
    pub fn transposed(&self, f: &Field) -> Result<MatrixCode> {
        let mats = self.basis_matrices().into_iter().map(|m| m.transpose()).collect();
        MatrixCode::from_matrices(f, self.n, self.m, mats)
    }

    /// { A ∈ 𝓐 : A vᵀ = 0 for all v ∈ L }, the elements whose row space
    /// avoids L (lies in L-perp).
    pub fn shorten(&self, f: &Field, l: &Subspace) -> Result<MatrixCode> {
        if l.ambient() != self.n {
            return Err(Error::Parameter("support ambient mismatch".into()));
        }
        let k = self.dim_fq();
        let mut sys = Mat::zero(l.dim() * self.m, k);
        for (li, eq_block) in (0..l.dim()).map(|i| (i, i * self.m)) {
            let v = l.basis().row(li);
            for u in 0..k {
                let a = self.matrix_at_row(u);
                for row in 0..self.m {
                    sys.set(eq_block + row, u, dot(f, a.row(row), v));
                }
            }
        }
        let kernel = sys.right_kernel(f);
        let new_basis = kernel.mul(f, &self.basis)?;
        MatrixCode::from_flat_mat(f, self.m, self.n, new_basis)
    }
}

/// Image of an extension code under the matrix representation: the F_q-span
/// of M(α_l · g) over generators g and the chosen basis elements α_l.
pub fn to_matrix_code(t: &FieldTower, code: &ExtCode, which: Basis) -> Result<MatrixCode> {
    let f = t.mid();
    let mut rows = Vec::with_capacity(t.m() * code.dim());
    for j in 0..code.dim() {
        for l in 0..t.m() {
            let scaled: Vec<El> =
                code.generator().row(j).iter().map(|&x| f.mul(t.alpha()[l], x)).collect();
            rows.push(mat_rep(t, &scaled, which).flatten().to_vec());
        }
    }
    MatrixCode::from_flat_rows(&t.base(), t.m(), code.n(), rows)
}

/// Uniform rank-t matrix: X·Y with X uniform among full-rank m×t and Y
/// uniform among full-rank t×n matrices over F_q.
pub fn random_rank_error(f: &Field, m: usize, n: usize, t: usize, rng: &mut impl Rng) -> Result<Mat> {
    if t > m.min(n) {
        return Err(Error::Parameter(format!("rank {t} exceeds min({m}, {n})")));
    }
    if t == 0 {
        return Ok(Mat::zero(m, n));
    }
    let sample_full_rank = |rows: usize, cols: usize, rng: &mut dyn rand::RngCore| -> Result<Mat> {
        for _ in 0..10_000 {
            let m = Mat::from_fn(rows, cols, |_, _| rng.gen_range(0..f.order()));
            if m.rank(f) == rows.min(cols) {
                return Ok(m);
            }
        }
        Err(Error::SearchExhausted("full-rank factor sampling".into()))
    };
    let x = sample_full_rank(m, t, rng)?;
    let y = sample_full_rank(t, n, rng)?;
    x.mul(f, &y)
}

/// Rank-t error as an extension vector over the tower's middle level.
pub fn random_rank_error_ext(
    t: &FieldTower,
    n: usize,
    rank: usize,
    rng: &mut impl Rng,
) -> Result<Vec<El>> {
    let e = random_rank_error(&t.base(), t.m(), n, rank, rng)?;
    crate::linalg::rep_inverse(t, &e, Basis::Alpha)
}
