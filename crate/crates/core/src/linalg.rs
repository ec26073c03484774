//! Dense matrices, canonical row spaces, and the representation maps between
//! extension-field vectors and matrices over the base field.
//!
//! Vectors are rows throughout. Reduction always picks the first nonzero
//! pivot, so reduced forms (and everything derived from them: subspaces,
//! kernels, code generators) are canonical: two spaces are equal iff their
//! reduced bases are identical.

use crate::field::{Basis, El, Field, FieldTower};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<El>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<Vec<El>>) -> Result<Mat> {
        if data.len() != rows || data.iter().any(|r| r.len() != cols) {
            return Err(Error::Parameter(format!(
                "expected {rows}x{cols} row data, got {} rows",
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data: data.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> El) -> Mat {
        let mut m = Mat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> El {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: El) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[El] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<El>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Consumes a 1×n matrix into its single row.
    pub fn into_row(self) -> Vec<El> {
        debug_assert_eq!(self.rows, 1);
        self.data
    }

    pub fn flatten(&self) -> &[El] {
        &self.data
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.cols && self.rows != 0 && other.rows != 0 {
            return Err(Error::Parameter("vstack: column mismatch".into()));
        }
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat { rows: self.rows + other.rows, cols, data })
    }

    pub fn add(&self, f: &Field, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Parameter("matrix add: shape mismatch".into()));
        }
        let mut out = self.clone();
        for i in 0..self.data.len() {
            out.data[i] = f.add(self.data[i], other.data[i]);
        }
        Ok(out)
    }

    pub fn sub(&self, f: &Field, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Parameter("matrix sub: shape mismatch".into()));
        }
        let mut out = self.clone();
        for i in 0..self.data.len() {
            out.data[i] = f.sub(self.data[i], other.data[i]);
        }
        Ok(out)
    }

    pub fn scale(&self, f: &Field, c: El) -> Mat {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = f.mul(*v, c);
        }
        out
    }

    pub fn mul(&self, f: &Field, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::Parameter(format!(
                "matrix mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// In-place reduced row echelon form; returns the pivot columns
    /// (strictly increasing). First-nonzero pivot selection.
    pub fn rref_in_place(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for col in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(hit) = (pr..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if hit != pr {
                for c in 0..self.cols {
                    let tmp = self.get(pr, c);
                    self.set(pr, c, self.get(hit, c));
                    self.set(hit, c, tmp);
                }
            }
            let inv = f.inv(self.get(pr, col)).expect("pivot is nonzero");
            for c in 0..self.cols {
                self.set(pr, c, f.mul(self.get(pr, c), inv));
            }
            for r in 0..self.rows {
                if r == pr {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in 0..self.cols {
                    let v = f.sub(self.get(r, c), f.mul(factor, self.get(pr, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &Field) -> usize {
        let mut m = self.clone();
        m.rref_in_place(f).len()
    }

    /// Basis (rows, canonical) of { x : self · xᵀ = 0 }.
    pub fn right_kernel(&self, f: &Field) -> Mat {
        let mut r = self.clone();
        let pivots = r.rref_in_place(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zero(free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, f.neg(r.get(pr, fc)));
            }
        }
        let mut canon = out;
        canon.rref_in_place(f);
        canon
    }

    pub fn inverse(&self, f: &Field) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref_in_place(f);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| aug.get(i, n + j)))
    }
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

/// One solution of A·x = b together with a canonical basis of the solution
/// space of A·x = 0, or None when the system is inconsistent.
pub fn solve_linear(f: &Field, a: &Mat, b: &[El]) -> Option<(Vec<El>, Mat)> {
    assert_eq!(b.len(), a.rows());
    let mut aug = Mat::zero(a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug.set(i, j, a.get(i, j));
        }
        aug.set(i, a.cols(), b[i]);
    }
    let pivots = aug.rref_in_place(f);
    if pivots.contains(&a.cols()) {
        return None; // a pivot in the constant column: 0 = 1
    }
    let mut x = vec![0; a.cols()];
    for (pr, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.get(pr, a.cols());
    }
    Some((x, a.right_kernel(f)))
}

/// An F-linear row space in canonical (reduced echelon, zero rows dropped)
/// form. Equality of values is equality of spaces.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::zero(0, ambient) }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::identity(ambient) }
    }

    pub fn from_mat(f: &Field, m: Mat) -> Subspace {
        let ambient = m.cols();
        let mut r = m;
        let pivots = r.rref_in_place(f);
        let basis = Mat::from_rows(pivots.len(), ambient, r.row_vecs().into_iter().take(pivots.len()).collect())
            .expect("echelon rows");
        Subspace { ambient, basis }
    }

    pub fn from_rows(f: &Field, ambient: usize, rows: Vec<Vec<El>>) -> Result<Subspace> {
        let m = Mat::from_rows(rows.len(), ambient, rows)?;
        Ok(Subspace::from_mat(f, m))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn contains(&self, f: &Field, v: &[El]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        for r in 0..self.basis.rows() {
            let pivot = (0..self.ambient).find(|&c| self.basis.get(r, c) != 0).unwrap();
            let factor = v[pivot];
            if factor != 0 {
                for c in 0..self.ambient {
                    v[c] = f.sub(v[c], f.mul(factor, self.basis.get(r, c)));
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, f: &Field, other: &Subspace) -> bool {
        (0..other.dim()).all(|r| self.contains(f, other.basis.row(r)))
    }

    pub fn sum(&self, f: &Field, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::Parameter("subspace sum: ambient mismatch".into()));
        }
        Ok(Subspace::from_mat(f, self.basis.vstack(&other.basis)?))
    }

    /// Orthogonal complement w.r.t. the standard dot product.
    pub fn perp(&self, f: &Field) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        Subspace { ambient: self.ambient, basis: self.basis.right_kernel(f) }
    }

    pub fn intersect(&self, f: &Field, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::Parameter("subspace intersect: ambient mismatch".into()));
        }
        // (U ∩ W)ᗮ = Uᗮ + Wᗮ for the nondegenerate standard form.
        Ok(self.perp(f).sum(f, &other.perp(f))?.perp(f))
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of {}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

// --- representation maps ---

/// M(c): the m×n matrix over F_q whose i-th row holds the i-th coordinates,
/// i.e. column j is the coordinate vector of c_j over the chosen basis.
pub fn mat_rep(t: &FieldTower, c: &[El], which: Basis) -> Mat {
    let m = t.m();
    let mut out = Mat::zero(m, c.len());
    for (j, &cj) in c.iter().enumerate() {
        let coords = t.coords(cj, which);
        for i in 0..m {
            out.set(i, j, coords[i]);
        }
    }
    out
}

/// Inverse of [`mat_rep`]: c_j = Σ_i basis_i · M_ij.
pub fn rep_inverse(t: &FieldTower, m: &Mat, which: Basis) -> Result<Vec<El>> {
    if m.rows() != t.m() {
        return Err(Error::Parameter(format!(
            "matrix has {} rows, tower degree is {}",
            m.rows(),
            t.m()
        )));
    }
    let basis = t.basis(which);
    let mid = t.mid();
    let mut out = vec![0; m.cols()];
    for j in 0..m.cols() {
        let mut acc = 0;
        for i in 0..t.m() {
            acc = mid.add(acc, mid.mul(basis[i], m.get(i, j)));
        }
        out[j] = acc;
    }
    Ok(out)
}

/// Rank weight wt_R(c) = rank of M(c). Independent of the basis choice.
pub fn rank_weight(t: &FieldTower, c: &[El]) -> usize {
    mat_rep(t, c, Basis::Alpha).rank(&t.base())
}

/// Rank support: the row space of M(c) inside F_q^n. Basis-independent.
pub fn rank_support(t: &FieldTower, c: &[El]) -> Subspace {
    Subspace::from_mat(&t.base(), mat_rep(t, c, Basis::Alpha))
}

/// D(c): diagonal embedding of a length-n vector into n×n matrices.
pub fn diag_embed(c: &[El]) -> Mat {
    let n = c.len();
    Mat::from_fn(n, n, |i, j| if i == j { c[i] } else { 0 })
}

/// E(c) = (α_1 c_1, ..., α_n c_n): embeds F_q^n into F_{q^n}^n using the
/// tower's basis. Requires the tower's extension degree to equal the length.
/// Satisfies E = M⁻¹ ∘ D, so wt_R(E(c)) = wt_H(c).
pub fn extension_embed(t: &FieldTower, c: &[El]) -> Result<Vec<El>> {
    if c.len() != t.m() {
        return Err(Error::Parameter(format!(
            "length {} does not match the tower degree {}; E needs a basis of F_q^n",
            c.len(),
            t.m()
        )));
    }
    if c.iter().any(|&x| x >= t.q()) {
        return Err(Error::Parameter("entries must lie in F_q".into()));
    }
    let mid = t.mid();
    Ok(c.iter().zip(t.alpha()).map(|(&ci, &ai)| mid.mul(ai, ci)).collect())
}

/// Hamming weight of a vector over any level.
pub fn hamming_weight(c: &[El]) -> usize {
    c.iter().filter(|&&x| x != 0).count()
}

/// Extension-field dot product c·d.
pub fn dot(f: &Field, c: &[El], d: &[El]) -> El {
    debug_assert_eq!(c.len(), d.len());
    let mut acc = 0;
    for (&a, &b) in c.iter().zip(d) {
        acc = f.add(acc, f.mul(a, b));
    }
    acc
}

/// Trace form ⟨C, D⟩ = Tr(C Dᵀ) = standard dot product of the flattenings.
pub fn trace_pairing(f: &Field, c: &Mat, d: &Mat) -> El {
    debug_assert_eq!((c.rows(), c.cols()), (d.rows(), d.cols()));
    dot(f, c.flatten(), d.flatten())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeding::stream_rng;
    use rand::Rng;

    fn t4() -> FieldTower {
        FieldTower::new(2, 2, None).unwrap()
    }

    fn random_mat(f: &Field, rows: usize, cols: usize, rng: &mut impl Rng) -> Mat {
        Mat::from_fn(rows, cols, |_, _| rng.gen_range(0..f.order()))
    }

    #[test]
    fn rref_is_canonical() {
        let t = t4();
        let f = t.mid();
        let mut rng = stream_rng(11, "rref");
        for _ in 0..50 {
            let m = random_mat(f, 4, 5, &mut rng);
            let mut r = m.clone();
            let pivots = r.rref_in_place(f);
            assert!(pivots.windows(2).all(|w| w[0] < w[1]));
            for (pr, &pc) in pivots.iter().enumerate() {
                assert_eq!(r.get(pr, pc), 1);
                for row in 0..r.rows() {
                    if row != pr {
                        assert_eq!(r.get(row, pc), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn subspace_equality_iff_double_inclusion() {
        let t = t4();
        let f = t.mid();
        let mut rng = stream_rng(13, "subspace");
        for _ in 0..50 {
            let a = Subspace::from_mat(f, random_mat(f, 3, 4, &mut rng));
            let b = Subspace::from_mat(f, random_mat(f, 3, 4, &mut rng));
            let double = a.contains_space(f, &b) && b.contains_space(f, &a);
            assert_eq!(a == b, double);
            // A space rebuilt from shuffled combinations of its rows is itself.
            let mut gens = a.basis().row_vecs();
            if gens.len() >= 2 {
                let extra: Vec<El> = (0..4)
                    .map(|c| f.add(gens[0][c], f.mul(2 % f.order(), gens[1][c])))
                    .collect();
                gens.push(extra);
                gens.reverse();
            }
            let rebuilt = Subspace::from_rows(f, 4, gens).unwrap();
            assert_eq!(a, rebuilt);
        }
    }

    #[test]
    fn solve_linear_round_trip_and_inconsistency() {
        let t = FieldTower::new(3, 2, None).unwrap();
        let f = t.mid();
        let mut rng = stream_rng(17, "solve");
        for _ in 0..50 {
            let a = random_mat(f, 3, 4, &mut rng);
            let x: Vec<El> = (0..4).map(|_| rng.gen_range(0..f.order())).collect();
            let b: Vec<El> = (0..3).map(|i| dot(f, a.row(i), &x)).collect();
            let (part, kernel) = solve_linear(f, &a, &b).expect("consistent by construction");
            for i in 0..3 {
                assert_eq!(dot(f, a.row(i), &part), b[i]);
            }
            for r in 0..kernel.rows() {
                for i in 0..3 {
                    assert_eq!(dot(f, a.row(i), kernel.row(r)), 0);
                }
            }
            // rank-nullity
            assert_eq!(a.rank(f) + kernel.rows(), a.cols());
        }
        // x + y = 0 and x + y = 1 cannot both hold.
        let a = Mat::from_rows(2, 2, vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert!(solve_linear(f, &a, &[0, 1]).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let t = t4();
        let f = t.mid();
        let mut rng = stream_rng(19, "inverse");
        let mut found = 0;
        while found < 20 {
            let m = random_mat(f, 3, 3, &mut rng);
            if let Some(inv) = m.inverse(f) {
                assert_eq!(m.mul(f, &inv).unwrap(), Mat::identity(3));
                assert_eq!(inv.mul(f, &m).unwrap(), Mat::identity(3));
                found += 1;
            }
        }
        assert!(Mat::zero(2, 2).inverse(f).is_none());
    }

    #[test]
    fn mat_rep_example_and_round_trip() {
        let t = t4();
        // Basis (1, ω): the vector (ω, ω+1) represents as [[0,1],[1,1]].
        let m = mat_rep(&t, &[2, 3], Basis::Alpha);
        assert_eq!(m, Mat::from_rows(2, 2, vec![vec![0, 1], vec![1, 1]]).unwrap());
        for a in 0..4u64 {
            for b in 0..4u64 {
                let c = vec![a, b];
                let rep = mat_rep(&t, &c, Basis::Alpha);
                assert_eq!(rep_inverse(&t, &rep, Basis::Alpha).unwrap(), c);
                let rep2 = mat_rep(&t, &c, Basis::AlphaPrime);
                assert_eq!(rep_inverse(&t, &rep2, Basis::AlphaPrime).unwrap(), c);
            }
        }
    }

    #[test]
    fn mat_rep_is_q_linear() {
        let t = FieldTower::new(2, 4, None).unwrap();
        let f = t.mid().clone();
        let mut rng = stream_rng(23, "matrep");
        for _ in 0..100 {
            let c: Vec<El> = (0..3).map(|_| rng.gen_range(0..f.order())).collect();
            let d: Vec<El> = (0..3).map(|_| rng.gen_range(0..f.order())).collect();
            let sum: Vec<El> = c.iter().zip(&d).map(|(&a, &b)| f.add(a, b)).collect();
            let ms = mat_rep(&t, &sum, Basis::Alpha);
            let expect = mat_rep(&t, &c, Basis::Alpha)
                .add(&t.base(), &mat_rep(&t, &d, Basis::Alpha))
                .unwrap();
            assert_eq!(ms, expect);
        }
    }

    #[test]
    fn rank_weight_examples() {
        let t = t4();
        assert_eq!(rank_weight(&t, &[0, 0]), 0);
        assert_eq!(rank_weight(&t, &[2, 2]), 1); // (ω, ω)
        assert_eq!(rank_weight(&t, &[1, 2]), 2); // (1, ω)
        let sup = rank_support(&t, &[2, 2]);
        assert_eq!(sup, Subspace::from_rows(&t.base(), 2, vec![vec![1, 1]]).unwrap());
    }

    #[test]
    fn rank_weight_at_most_hamming_weight_exhaustive() {
        let t = t4();
        for a in 0..4u64 {
            for b in 0..4u64 {
                let c = vec![a, b];
                assert!(rank_weight(&t, &c) <= hamming_weight(&c));
            }
        }
    }

    #[test]
    fn rank_support_is_basis_independent() {
        let t = FieldTower::new(2, 3, None).unwrap();
        let f = t.mid().clone();
        let newb: Vec<El> = t.alpha().iter().map(|&a| f.mul(a, f.generator())).collect();
        let t2 = FieldTower::new(2, 3, None).unwrap().with_basis(newb).unwrap();
        for x in 0..8u64 {
            for y in 0..8u64 {
                let c = vec![x, y];
                assert_eq!(rank_support(&t, &c), rank_support(&t2, &c));
            }
        }
    }

    #[test]
    fn extension_embed_matches_diagonal_route() {
        let t = t4();
        // E((1,1)) = (1, ω)
        assert_eq!(extension_embed(&t, &[1, 1]).unwrap(), vec![1, 2]);
        for a in 0..2u64 {
            for b in 0..2u64 {
                let c = vec![a, b];
                let e = extension_embed(&t, &c).unwrap();
                // E = M⁻¹ ∘ D
                assert_eq!(e, rep_inverse(&t, &diag_embed(&c), Basis::Alpha).unwrap());
                assert_eq!(rank_weight(&t, &e), hamming_weight(&c));
            }
        }
        assert!(extension_embed(&t, &[1, 1, 0]).is_err());
    }

    #[test]
    fn perp_dimensions_and_involution() {
        let t = t4();
        let f = t.mid();
        let s = Subspace::from_rows(f, 3, vec![vec![1, 2, 0], vec![0, 1, 1]]).unwrap();
        let p = s.perp(f);
        assert_eq!(p.dim(), 1);
        assert_eq!(p.perp(f), s);
        for r in 0..p.dim() {
            for g in 0..s.dim() {
                assert_eq!(dot(f, p.basis().row(r), s.basis().row(g)), 0);
            }
        }
    }
}
