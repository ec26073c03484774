//! Linearized polynomials: F(x) = Σ a_i x^(q^(i·r)) with coefficients in an
//! extension of F_q and a stride r ≥ 1 on the Frobenius exponents.
//!
//! The symbolic product is composition, F ⊗ G = F ∘ G; on coefficients
//! (a x^(q^i)) ∘ (b x^(q^j)) = a·b^(q^i) x^(q^(i+j)). Interpolation through
//! values at F_q-independent points comes in two independent routes, a Moore
//! system solve and an annihilator-chain construction; they must agree and
//! tests hold them to that.

use crate::field::{El, Field};
use crate::linalg::{solve_linear, Mat};
use crate::{Error, Result};

#[derive(Clone, Eq)]
pub struct LinPoly {
    stride: usize,
    /// Little-endian: coeffs[i] multiplies x^(q^(i·stride)). Empty = zero.
    coeffs: Vec<El>,
}

impl PartialEq for LinPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return true; // the zero polynomial is stride-agnostic
        }
        self.stride == other.stride && self.coeffs == other.coeffs
    }
}

impl LinPoly {
    pub fn new(stride: usize, mut coeffs: Vec<El>) -> Result<LinPoly> {
        if stride == 0 {
            return Err(Error::Parameter("stride must be >= 1".into()));
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(LinPoly { stride, coeffs })
    }

    pub fn zero(stride: usize) -> LinPoly {
        LinPoly { stride, coeffs: Vec::new() }
    }

    /// The identity map x.
    pub fn identity() -> LinPoly {
        LinPoly { stride: 1, coeffs: vec![1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn coeffs(&self) -> &[El] {
        &self.coeffs
    }

    /// Largest i with a_i ≠ 0 (the q-degree is then i·stride); None for zero.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1).map(|d| d * self.stride)
    }

    pub fn add(&self, f: &Field, other: &LinPoly) -> Result<LinPoly> {
        if self.stride != other.stride && !self.is_zero() && !other.is_zero() {
            return Err(Error::Parameter("stride mismatch".into()));
        }
        let stride = if self.is_zero() { other.stride } else { self.stride };
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0; len];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *c = f.add(a, b);
        }
        LinPoly::new(stride, coeffs)
    }

    pub fn scale(&self, f: &Field, c: El) -> LinPoly {
        let coeffs = self.coeffs.iter().map(|&a| f.mul(a, c)).collect();
        LinPoly::new(self.stride, coeffs).expect("stride unchanged")
    }

    /// Evaluate at a point of `f` (coefficients embed upward unchanged, so
    /// `f` may be a proper extension of the coefficient field).
    pub fn eval(&self, f: &Field, q: u64, x: El) -> Result<El> {
        let mut acc = 0;
        let mut fx = x;
        let mut step = 0usize;
        for (i, &a) in self.coeffs.iter().enumerate() {
            let want = i * self.stride;
            while step < want {
                fx = f.pow(fx, q);
                step += 1;
            }
            acc = f.add(acc, f.mul(a, fx));
        }
        let _ = f.degree_over(q)?; // q must cut out a subfield
        Ok(acc)
    }

    pub fn eval_vec(&self, f: &Field, q: u64, xs: &[El]) -> Result<Vec<El>> {
        xs.iter().map(|&x| self.eval(f, q, x)).collect()
    }

    /// Symbolic product self ∘ other. Strides must match; the result keeps it.
    pub fn compose(&self, f: &Field, q: u64, other: &LinPoly) -> Result<LinPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(LinPoly::zero(self.stride));
        }
        if self.stride != other.stride {
            return Err(Error::Parameter("stride mismatch".into()));
        }
        let mut coeffs = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let shifted = f.frobenius(q, b, i * self.stride)?;
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, shifted));
            }
        }
        LinPoly::new(self.stride, coeffs)
    }

    /// Fold exponents modulo x^(q^d) = x where q^d = |f|. The result has
    /// stride 1 and q-degree < d. Sound for evaluation on `f` only: on a
    /// proper extension of `f` the folded polynomial is a different map.
    pub fn reduce(&self, f: &Field, q: u64) -> Result<LinPoly> {
        let d = f.degree_over(q)?;
        let mut coeffs = vec![0; d];
        for (i, &a) in self.coeffs.iter().enumerate() {
            let e = (i * self.stride) % d;
            coeffs[e] = f.add(coeffs[e], a);
        }
        LinPoly::new(1, coeffs)
    }
}

impl std::fmt::Debug for LinPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| format!("{a}·x^[{}]", i * self.stride))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Moore matrix of the elements: entry (i, j) = β_i^(q^(j·stride)),
/// j = 0..width. Full rank iff the elements are F_q-independent (for
/// width ≥ #elements and gcd(stride, degree) = 1).
pub fn moore_matrix(f: &Field, q: u64, elements: &[El], width: usize, stride: usize) -> Result<Mat> {
    let mut m = Mat::zero(elements.len(), width);
    for (i, &b) in elements.iter().enumerate() {
        let mut fx = b;
        for j in 0..width {
            m.set(i, j, fx);
            fx = f.frobenius(q, fx, stride)?;
        }
    }
    Ok(m)
}

/// Checks that the points are linearly independent over F_q.
fn check_points(f: &Field, q: u64, points: &[El]) -> Result<()> {
    let d = f.degree_over(q)?;
    if points.len() > d {
        return Err(Error::Parameter(format!(
            "{} points exceed the extension degree {d} over F_{q}",
            points.len()
        )));
    }
    let rows: Result<Vec<Vec<El>>> = points.iter().map(|&p| f.q_coords(q, p)).collect();
    let m = Mat::from_rows(points.len(), d, rows?)?;
    // The coordinates are F_q constants and F_q is closed under f's
    // arithmetic, so the rank computation never leaves the subfield.
    if m.rank(f) != points.len() {
        return Err(Error::Parameter(
            "evaluation points are linearly dependent over F_q".into(),
        ));
    }
    Ok(())
}

/// Unique F of q-degree < #points (stride 1) with F(points[i]) = values[i],
/// found by solving the Moore system. Reference route.
pub fn interpolate_moore(f: &Field, q: u64, points: &[El], values: &[El]) -> Result<LinPoly> {
    if points.len() != values.len() {
        return Err(Error::Parameter("points/values length mismatch".into()));
    }
    check_points(f, q, points)?;
    let n = points.len();
    let m = moore_matrix(f, q, points, n, 1)?;
    let (coeffs, kernel) = solve_linear(f, &m, values)
        .ok_or_else(|| Error::Inconsistent("Moore system unsolvable".into()))?;
    if kernel.rows() != 0 {
        return Err(Error::Inconsistent("Moore system is singular".into()));
    }
    LinPoly::new(1, coeffs)
}

/// Same interpolation by the annihilator chain: for each i build
/// G_i = Π-style composition of factors x^[1] − (β^[1]/β)x, where each β is
/// the image of the next point under the chain so far (skipping point i);
/// then F = Σ values[i] · G_i / G_i(points[i]). O(n) symbolic products per
/// basis polynomial instead of a dense solve.
pub fn interpolate_chain(f: &Field, q: u64, points: &[El], values: &[El]) -> Result<LinPoly> {
    if points.len() != values.len() {
        return Err(Error::Parameter("points/values length mismatch".into()));
    }
    check_points(f, q, points)?;
    let n = points.len();
    let mut total = LinPoly::zero(1);
    for i in 0..n {
        let mut chain = LinPoly::identity();
        for (j, &pt) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let beta = chain.eval(f, q, pt)?;
            debug_assert_ne!(beta, 0, "independent points cannot be annihilated early");
            let ratio = f.div(f.pow(beta, q), beta)?;
            let factor = LinPoly::new(1, vec![f.neg(ratio), 1])?;
            chain = factor.compose(f, q, &chain)?;
        }
        let at_i = chain.eval(f, q, points[i])?;
        let lead = f.div(values[i], at_i)?;
        total = total.add(f, &chain.scale(f, lead))?;
    }
    Ok(total)
}
