//! Code constructions: generalized Gabidulin codes with their correcting
//! pairs, normal bases, and q-cyclic codes cut out by Moore parity rows.

use std::collections::BTreeSet;

use rand::Rng;

use crate::code::ExtCode;
use crate::decoder::{ExtPair, PairGrade};
use crate::field::{El, Field, FieldTower, Level};
use crate::linalg::Mat;
use crate::seeding::stream_rng;
use crate::{Error, Result};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Gab_{k,m,n}(r, b): evaluations of the q-polynomials of stride r and
/// q-degree below k at the points b. Generated by the Moore rows b^{[jr]},
/// j = 0..k-1. Requires n ≤ m, 1 ≤ k ≤ n, gcd(r, m) = 1 and b independent
/// over F_q. MRD: d_R = n - k + 1.
pub fn gabidulin(t: &FieldTower, k: usize, r: usize, b: &[El]) -> Result<ExtCode> {
    let f = t.mid();
    let q = t.q();
    let m = t.m();
    let n = b.len();
    if n == 0 || n > m {
        return Err(Error::Parameter(format!(
            "need 1 <= n <= m, got n = {n}, m = {m}"
        )));
    }
    if k == 0 || k > n {
        return Err(Error::Parameter(format!("need 1 <= k <= n, got k = {k}")));
    }
    if r == 0 || gcd(r, m) != 1 {
        return Err(Error::Parameter(format!(
            "stride {r} is not coprime to the extension degree {m}"
        )));
    }
    let coords: Vec<Vec<El>> = b.iter().map(|&x| f.digits(x)).collect();
    if Mat::from_rows(n, m, coords)?.rank(t.base()) != n {
        return Err(Error::Parameter(
            "evaluation points are not independent over the base field".into(),
        ));
    }
    let mut rows = Vec::with_capacity(k);
    for j in 0..k {
        let row: Result<Vec<El>> = b.iter().map(|&x| f.frobenius(q, x, j * r)).collect();
        rows.push(row?);
    }
    ExtCode::from_rows(f, n, rows)
}

/// Recover a point vector for a code that is claimed to be stride-r
/// Gabidulin, by intersecting the code with its own Frobenius image until a
/// line remains, then undoing the accumulated Frobenius power. Fails with an
/// inconsistency error when the intersection chain does not step down one
/// dimension at a time or the recovered points do not regenerate the code.
/// The recovered vector is unique up to a scalar, which spans the same code.
pub fn gabidulin_points(t: &FieldTower, code: &ExtCode, r: usize) -> Result<Vec<El>> {
    let f = t.mid();
    let q = t.q();
    let m = t.m();
    let k = code.dim();
    let n = code.n();
    if r == 0 || gcd(r, m) != 1 {
        return Err(Error::Parameter(format!(
            "stride {r} is not coprime to the extension degree {m}"
        )));
    }
    if k == 0 {
        return Err(Error::Parameter("the zero code has no point vector".into()));
    }
    if k == n {
        return Err(Error::Parameter(
            "the full space is generated by every independent point vector".into(),
        ));
    }
    let mut chain = code.clone();
    for _ in 0..k - 1 {
        let shifted = chain.frobenius_image(f, q, r)?;
        let next = chain.intersect(f, &shifted)?;
        if next.dim() + 1 != chain.dim() {
            return Err(Error::Inconsistent(
                "intersection chain stalls; not a stride-r Moore code".into(),
            ));
        }
        chain = next;
    }
    // the chain bottom is span{ b^{[(k-1) r]} }
    let back = ((k - 1) * r) % m;
    let inv = (m - back) % m;
    let b: Result<Vec<El>> =
        chain.generator().row(0).iter().map(|&x| f.frobenius(q, x, inv)).collect();
    let b = b?;
    match gabidulin(t, k, r, &b) {
        Ok(regen) if regen == *code => Ok(b),
        _ => Err(Error::Inconsistent(
            "recovered points do not regenerate the code".into(),
        )),
    }
}

/// Dual of Gab_{k,m,n}(r, b), computed generically and then verified to be
/// itself a stride-r Gabidulin code (no closed form for the dual points is
/// used; the structure check is by point recovery and regeneration).
pub fn gabidulin_dual(t: &FieldTower, k: usize, r: usize, b: &[El]) -> Result<ExtCode> {
    let code = gabidulin(t, k, r, b)?;
    let dual = code.dual(t.mid());
    if dual.dim() > 0 && dual.dim() < dual.n() {
        gabidulin_points(t, &dual, r)?;
    }
    Ok(dual)
}

/// Correcting pair around a Gabidulin code: A = Gab_{t+1}(r, b),
/// B = Gab_{t,m,m}(r, boldα), C = Gab_{2t}(r, b)^⊥, correcting radius t.
/// With `b_over_prefix` (stride 1 only) B is instead built over the basis
/// prefix boldα_n and passed through the length adapter.
pub fn gabidulin_recp(
    t: &FieldTower,
    r: usize,
    b: &[El],
    radius: usize,
    b_over_prefix: bool,
) -> Result<ExtPair> {
    let n = b.len();
    if radius == 0 || 2 * radius >= n {
        return Err(Error::Parameter(format!(
            "radius {radius} needs 0 < 2*radius < n = {n}"
        )));
    }
    if b_over_prefix && r != 1 {
        return Err(Error::Parameter(
            "the basis-prefix form of B requires stride 1".into(),
        ));
    }
    let a = gabidulin(t, radius + 1, r, b)?;
    let b_code = if b_over_prefix {
        gabidulin(t, radius, 1, &t.alpha()[..n])?
    } else {
        gabidulin(t, radius, r, t.alpha())?
    };
    let c = gabidulin(t, 2 * radius, r, b)?.dual(t.mid());
    ExtPair::new(t, a, b_code, c, radius, PairGrade::Correcting)
}

/// Frobenius orbit β, β^{[1]}, ..., β^{[n-1]} in the top field.
pub fn frobenius_orbit(t: &FieldTower, beta: El) -> Result<Vec<El>> {
    (0..t.n_top()).map(|j| t.frobenius(Level::Top, beta, j)).collect()
}

/// Whether the Frobenius orbit of beta is an F_q-basis of the top field.
pub fn is_normal(t: &FieldTower, beta: El) -> Result<bool> {
    let n = t.n_top();
    let orbit = frobenius_orbit(t, beta)?;
    let rows: Result<Vec<Vec<El>>> = orbit.iter().map(|&x| t.top_coords_q(x)).collect();
    Ok(Mat::from_rows(n, n, rows?)?.rank(t.base()) == n)
}

/// Seeded random search for a normal element of the top field over F_q.
/// Normal elements are plentiful, so the attempt cap is never reached at
/// tractable sizes.
pub fn find_normal_element(t: &FieldTower, seed: u64) -> Result<El> {
    let order = t.top()?.order();
    let mut rng = stream_rng(seed, "normal-element");
    for _ in 0..10_000 {
        let cand = rng.gen_range(1..order);
        if is_normal(t, cand)? {
            return Ok(cand);
        }
    }
    Err(Error::SearchExhausted(
        "no normal element found within the attempt budget".into(),
    ))
}

/// The q-shift (c_{n-1}^q, c_0^q, ..., c_{n-2}^q).
pub fn q_shift(f: &Field, q: u64, c: &[El]) -> Vec<El> {
    let n = c.len();
    let mut out = Vec::with_capacity(n);
    out.push(f.pow(c[n - 1], q));
    for &x in &c[..n - 1] {
        out.push(f.pow(x, q));
    }
    out
}

/// Intersection with F_{q^m}^n of a code over F_{q^n} given by parity rows:
/// every top-field equation splits into s mid-field equations along the
/// degree-s basis, because the unknowns are constrained to the mid field.
pub fn subfield_subcode(t: &FieldTower, parity_top: &Mat) -> Result<ExtCode> {
    let top = t.top()?;
    let f = t.mid();
    let s = t.s();
    let n = parity_top.cols();
    if parity_top.rows() == 0 {
        return Ok(ExtCode::full(n));
    }
    let mut sys = Mat::zero(parity_top.rows() * s, n);
    for i in 0..parity_top.rows() {
        for j in 0..n {
            for (d, digit) in top.digits(parity_top.get(i, j)).into_iter().enumerate() {
                sys.set(i * s + d, j, digit);
            }
        }
    }
    Ok(ExtCode::from_mat(f, sys.right_kernel(f)))
}

/// Checked index set for q-root spaces: entries distinct, below n, closed
/// under adding m modulo n (so the cut is stable under the mid-field Galois
/// group and dimensions do not collapse).
fn checked_index_set(t: &FieldTower, set: &[usize]) -> Result<BTreeSet<usize>> {
    let n = t.n_top();
    let m = t.m();
    let mut out = BTreeSet::new();
    for &i in set {
        if i >= n {
            return Err(Error::Parameter(format!("index {i} outside 0..{n}")));
        }
        if !out.insert(i) {
            return Err(Error::Parameter(format!("repeated index {i}")));
        }
    }
    for &i in &out {
        if !out.contains(&((i + m) % n)) {
            return Err(Error::Parameter(format!(
                "index set is not closed under +{m} mod {n} (missing {})",
                (i + m) % n
            )));
        }
    }
    Ok(out)
}

fn checked_normal(t: &FieldTower, normal: El) -> Result<()> {
    if !is_normal(t, normal)? {
        return Err(Error::Parameter(
            "the chosen element does not generate a normal basis".into(),
        ));
    }
    Ok(())
}

/// Moore rows of { β^{[i]} : i ∈ I } over the top field: entry (i, j) is
/// β^{[(i+j) mod n]}.
fn moore_rows(t: &FieldTower, normal: El, set: &BTreeSet<usize>) -> Result<Mat> {
    let n = t.n_top();
    let mut rows = Vec::with_capacity(set.len());
    for &i in set {
        let row: Result<Vec<El>> =
            (0..n).map(|j| t.frobenius(Level::Top, normal, i + j)).collect();
        rows.push(row?);
    }
    Mat::from_rows(set.len(), n, rows)
}

/// q-cyclic code over F_{q^m} with parity-check rows the Moore rows of
/// { β^{[i]} : i ∈ I }: codewords are the coefficient vectors of the
/// q-polynomials vanishing on the root space spanned by that orbit slice.
/// Dimension n - #I; q-cyclicity of the result is verified.
pub fn skew_cyclic_code(t: &FieldTower, normal: El, i_set: &[usize]) -> Result<ExtCode> {
    let n = t.n_top();
    checked_normal(t, normal)?;
    let set = checked_index_set(t, i_set)?;
    if set.is_empty() {
        return Ok(ExtCode::full(n));
    }
    let code = subfield_subcode(t, &moore_rows(t, normal, &set)?)?;
    if code.dim() != n - set.len() {
        return Err(Error::Inconsistent(format!(
            "expected dimension {}, got {}",
            n - set.len(),
            code.dim()
        )));
    }
    let f = t.mid();
    for i in 0..code.dim() {
        if !code.contains(f, &q_shift(f, t.q(), code.generator().row(i))) {
            return Err(Error::Inconsistent("code is not q-cyclic".into()));
        }
    }
    Ok(code)
}

/// Subfield subcode (over F_{q^m}) of the top-field code generated by the
/// Moore rows of { β^{[i]} : i ∈ I }. Galois closure of I keeps the full
/// dimension #I when cutting down to the mid field.
pub fn skew_generated_code(t: &FieldTower, normal: El, i_set: &[usize]) -> Result<ExtCode> {
    let n = t.n_top();
    checked_normal(t, normal)?;
    let set = checked_index_set(t, i_set)?;
    if set.is_empty() {
        return Ok(ExtCode::zero(n));
    }
    let top = t.top()?;
    let parity = moore_rows(t, normal, &set)?.right_kernel(top);
    let code = subfield_subcode(t, &parity)?;
    if code.dim() != set.len() {
        return Err(Error::Inconsistent(format!(
            "expected dimension {}, got {}",
            set.len(),
            code.dim()
        )));
    }
    Ok(code)
}

/// Matrix S (n×m over F_q) whose column l holds the coordinates of the
/// standard mid-field basis vector α_l in the normal basis
/// β, β^{[1]}, ..., β^{[n-1]} of the top field.
///
/// Folding a length-n vector through S (b ↦ b·S) turns the star product
/// expanded along the normal basis into the standard length-m star product:
/// the rows of the n×n representation of a over the normal basis combine
/// with coefficients b_i exactly as the rows of the m×n representation
/// combine with (b·S)_l.
pub fn normal_basis_adapter(t: &FieldTower, normal: El) -> Result<Mat> {
    let n = t.n_top();
    let m = t.m();
    checked_normal(t, normal)?;
    let orbit = frobenius_orbit(t, normal)?;
    let rows: Result<Vec<Vec<El>>> = orbit.iter().map(|&x| t.top_coords_q(x)).collect();
    let p_t = Mat::from_rows(n, n, rows?)?.transpose();
    let mut s = Mat::zero(n, m);
    for (l, &al) in t.alpha().iter().enumerate() {
        // mid encodings are valid top encodings, so α_l can be expanded
        // directly in the top field
        let target = t.top_coords_q(al)?;
        let (y, _) = crate::linalg::solve_linear(t.base(), &p_t, &target)
            .expect("a normal basis spans the top field");
        for i in 0..n {
            s.set(i, l, y[i]);
        }
    }
    Ok(s)
}

/// Longest run of cyclically consecutive residues present in the set.
fn longest_cyclic_run(n: usize, set: &BTreeSet<usize>) -> usize {
    if set.len() == n {
        return n;
    }
    let mut best = 0;
    let mut run = 0;
    // doubling the range handles wraparound; capped by the early full-set return
    for i in 0..2 * n {
        if set.contains(&(i % n)) {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best
}

/// Locating pair from q-root spaces: A and B are the subfield subcodes of
/// the codes generated by the Moore rows of I and J, and the target C is
/// parity-checked by the Moore rows of the sumset I + J. Needs #I > radius
/// and a run of at least `radius` cyclically consecutive indices in J. The
/// pair is graded correcting when d_R(A) + d_R(C) > n holds as well.
pub fn skew_cyclic_locating_pair(
    t: &FieldTower,
    normal: El,
    i_set: &[usize],
    j_set: &[usize],
    radius: usize,
) -> Result<ExtPair> {
    let n = t.n_top();
    checked_normal(t, normal)?;
    let iset = checked_index_set(t, i_set)?;
    let jset = checked_index_set(t, j_set)?;
    if radius == 0 {
        return Err(Error::Parameter("radius must be positive".into()));
    }
    if iset.len() <= radius {
        return Err(Error::Parameter(format!(
            "dimension condition fails: #I = {} must exceed the radius {radius}",
            iset.len()
        )));
    }
    let run = longest_cyclic_run(n, &jset);
    if run < radius {
        return Err(Error::Parameter(format!(
            "consecutive condition fails: J's longest run {run} is below the radius {radius}"
        )));
    }
    let a = skew_generated_code(t, normal, i_set)?;
    let b = skew_generated_code(t, normal, j_set)?;
    let sumset: BTreeSet<usize> = iset
        .iter()
        .flat_map(|&i| jset.iter().map(move |&j| (i + j) % n))
        .collect();
    let sum_vec: Vec<usize> = sumset.into_iter().collect();
    let c = skew_cyclic_code(t, normal, &sum_vec)?;
    let da = a.min_rank_distance(t)?;
    let dc = c.min_rank_distance(t)?;
    let grade = if da + dc > n { PairGrade::Correcting } else { PairGrade::Locating };
    // products here expand along the normal basis, so B folds through the
    // adapter rather than the default truncation
    let adapter = normal_basis_adapter(t, normal)?;
    ExtPair::with_adapter(t, a, b, &adapter, c, radius, grade)
}
