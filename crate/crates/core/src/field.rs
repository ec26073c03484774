//! Finite fields and two-level extension towers.
//!
//! A [`Field`] is F_Q[y]/(modulus) over an immediate subfield of order Q.
//! Elements are plain integers: the base-Q digits of the encoding are the
//! little-endian coefficients over the subfield. Constants encode as
//! themselves at every level, so embedding upward through a tower is the
//! identity on encodings.
//!
//! A [`FieldTower`] pins the chain F_q ⊆ F_{q^m} (optionally ⊆ F_{q^n},
//! n = s·m) together with a distinguished basis α of F_{q^m} over F_q and its
//! trace-dual basis. Default moduli are the lexicographically smallest monic
//! irreducibles (ordered by integer encoding), so towers are reproducible
//! from (q, m, s) alone.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::linalg::Mat;
use crate::{Error, Result};

/// Encoded field element. Valid values are below the order of the field the
/// element belongs to; operations are meaningful only through that field.
pub type El = u64;

/// Multiplication tables are built up to this order; larger fields fall back
/// to schoolbook polynomial arithmetic.
const TABLE_LIMIT: u64 = 1 << 16;

/// Maximum supported bottom field size.
pub const MAX_Q: u64 = 16;

pub struct Field {
    base: Option<Arc<Field>>,
    p: u64,
    subfield_order: u64,
    degree: usize,
    order: u64,
    modulus: Vec<El>,
    exp: Vec<El>,
    log: Vec<u32>,
    generator: El,
}

impl Field {
    pub fn prime(p: u64) -> Result<Arc<Field>> {
        if !is_prime(p) {
            return Err(Error::Construction(format!("{p} is not prime")));
        }
        let mut f = Field {
            base: None,
            p,
            subfield_order: p,
            degree: 1,
            order: p,
            modulus: vec![0, 1],
            exp: Vec::new(),
            log: Vec::new(),
            generator: 1,
        };
        f.build_tables();
        Ok(Arc::new(f))
    }

    /// Extension of `base` by a monic irreducible `modulus` (little-endian
    /// coefficients over `base`, length degree+1).
    pub fn extension(base: Arc<Field>, modulus: Vec<El>) -> Result<Arc<Field>> {
        if modulus.len() < 2 {
            return Err(Error::Construction("modulus must have degree >= 1".into()));
        }
        let degree = modulus.len() - 1;
        if modulus[degree] != 1 {
            return Err(Error::Construction("modulus must be monic".into()));
        }
        if modulus.iter().any(|&c| c >= base.order) {
            return Err(Error::Parameter(
                "modulus coefficient out of range for the coefficient field".into(),
            ));
        }
        if let Some(factor) = irreducibility_witness(&base, &modulus) {
            return Err(Error::Construction(format!(
                "reducible modulus {:?}: divisible by {:?}",
                modulus, factor
            )));
        }
        let order = base
            .order
            .checked_pow(degree as u32)
            .filter(|&o| o <= 1 << 32)
            .ok_or_else(|| Error::Unsupported("field order exceeds 2^32".into()))?;
        let mut f = Field {
            base: Some(base.clone()),
            p: base.p,
            subfield_order: base.order,
            degree,
            order,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            generator: 0,
        };
        f.build_tables();
        Ok(Arc::new(f))
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Order of the immediate subfield the modulus is written over.
    pub fn subfield_order(&self) -> u64 {
        self.subfield_order
    }

    /// Extension degree over the immediate subfield.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[El] {
        &self.modulus
    }

    /// A fixed multiplicative generator (the least one in encoding order).
    pub fn generator(&self) -> El {
        self.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = El> {
        0..self.order
    }

    /// Little-endian base-Q digits of `x`, length = degree.
    pub fn digits(&self, x: El) -> Vec<El> {
        debug_assert!(x < self.order);
        let mut out = Vec::with_capacity(self.degree);
        let mut v = x;
        for _ in 0..self.degree {
            out.push(v % self.subfield_order);
            v /= self.subfield_order;
        }
        out
    }

    pub fn from_digits(&self, digits: &[El]) -> El {
        debug_assert!(digits.len() <= self.degree);
        let mut v = 0;
        for &d in digits.iter().rev() {
            debug_assert!(d < self.subfield_order);
            v = v * self.subfield_order + d;
        }
        v
    }

    pub fn add(&self, a: El, b: El) -> El {
        debug_assert!(a < self.order && b < self.order);
        if self.p == 2 {
            // All levels of a char-2 tower encode as nested power-of-two digit
            // strings, so addition is xor throughout.
            return a ^ b;
        }
        match &self.base {
            None => (a + b) % self.p,
            Some(base) => {
                let mut v = 0;
                let mut pw = 1;
                let (mut x, mut y) = (a, b);
                for _ in 0..self.degree {
                    v += base.add(x % self.subfield_order, y % self.subfield_order) * pw;
                    x /= self.subfield_order;
                    y /= self.subfield_order;
                    pw *= self.subfield_order;
                }
                v
            }
        }
    }

    pub fn neg(&self, a: El) -> El {
        if self.p == 2 {
            return a;
        }
        match &self.base {
            None => (self.p - a) % self.p,
            Some(base) => {
                let mut v = 0;
                let mut pw = 1;
                let mut x = a;
                for _ in 0..self.degree {
                    v += base.neg(x % self.subfield_order) * pw;
                    x /= self.subfield_order;
                    pw *= self.subfield_order;
                }
                v
            }
        }
    }

    pub fn sub(&self, a: El, b: El) -> El {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: El, b: El) -> El {
        debug_assert!(a < self.order && b < self.order);
        if a == 0 || b == 0 {
            return 0;
        }
        if !self.exp.is_empty() {
            let la = self.log[a as usize] as u64;
            let lb = self.log[b as usize] as u64;
            return self.exp[((la + lb) % (self.order - 1)) as usize];
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: El, b: El) -> El {
        match &self.base {
            None => (a as u128 * b as u128 % self.p as u128) as u64,
            Some(base) => {
                let da = self.digits(a);
                let db = self.digits(b);
                let prod = poly_mul(base, &da, &db);
                let rem = poly_rem(base, &prod, &self.modulus);
                self.from_digits(&rem)
            }
        }
    }

    pub fn inv(&self, a: El) -> Result<El> {
        debug_assert!(a < self.order);
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        if !self.exp.is_empty() {
            let la = self.log[a as usize] as u64;
            return Ok(self.exp[((self.order - 1 - la) % (self.order - 1)) as usize]);
        }
        Ok(self.pow(a, self.order - 2))
    }

    pub fn div(&self, a: El, b: El) -> Result<El> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, x: El, e: u64) -> El {
        if e == 0 {
            return 1;
        }
        if x == 0 {
            return 0;
        }
        let mut acc = 1;
        let mut b = x;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    /// Orders of the fields in the coefficient chain, smallest first,
    /// ending with this field's own order.
    pub fn chain_orders(&self) -> Vec<u64> {
        let mut orders = match &self.base {
            Some(b) => b.chain_orders(),
            None => Vec::new(),
        };
        orders.push(self.order);
        orders
    }

    /// F_q-coordinates of `x` w.r.t. the nested polynomial product basis:
    /// the base-q digits of the encoding. Linear in `x`, so valid for
    /// independence checks. Requires q to be the order of a chain field
    /// (digit boundaries must align with an actual subfield).
    pub fn q_coords(&self, q: u64, x: El) -> Result<Vec<El>> {
        if !self.chain_orders().contains(&q) {
            return Err(Error::Parameter(format!(
                "order {q} is not a level of this field's coefficient chain"
            )));
        }
        let d = self.degree_over(q)?;
        let mut out = Vec::with_capacity(d);
        let mut v = x;
        for _ in 0..d {
            out.push(v % q);
            v /= q;
        }
        Ok(out)
    }

    /// Degree of this field over the subfield of order `q`, i.e. d with
    /// q^d = order. Errors when the order is not a power of q.
    pub fn degree_over(&self, q: u64) -> Result<usize> {
        let mut pw = 1u64;
        let mut d = 0usize;
        while pw < self.order {
            pw = pw
                .checked_mul(q)
                .ok_or_else(|| Error::Parameter(format!("{} is not a power of {q}", self.order)))?;
            d += 1;
        }
        if pw == self.order && d > 0 {
            Ok(d)
        } else {
            Err(Error::Parameter(format!("{} is not a power of {q}", self.order)))
        }
    }

    /// x^(q^j): the j-th power of the q-Frobenius. `q` must cut out a subfield.
    pub fn frobenius(&self, q: u64, x: El, j: usize) -> Result<El> {
        let d = self.degree_over(q)?;
        let mut y = x;
        for _ in 0..(j % d) {
            y = self.pow(y, q);
        }
        Ok(y)
    }

    /// Trace into the subfield of order `sub_order`: sum of x^(Q^i) over the
    /// relative Galois orbit. The result encodes as an element of that subfield.
    pub fn trace_to(&self, sub_order: u64, x: El) -> Result<El> {
        let d = self.degree_over(sub_order)?;
        let mut acc = 0;
        let mut y = x;
        for _ in 0..d {
            acc = self.add(acc, y);
            y = self.pow(y, sub_order);
        }
        debug_assert!(acc < sub_order, "trace landed outside the subfield");
        Ok(acc)
    }

    fn build_tables(&mut self) {
        if self.order > TABLE_LIMIT {
            return;
        }
        let n = self.order;
        let mut factors = Vec::new();
        let mut rem = n - 1;
        let mut d = 2;
        while d * d <= rem {
            if rem % d == 0 {
                factors.push(d);
                while rem % d == 0 {
                    rem /= d;
                }
            }
            d += 1;
        }
        if rem > 1 {
            factors.push(rem);
        }
        let mut generator = 1;
        'outer: for g in 1..n {
            for &r in &factors {
                if self.pow_slow(g, (n - 1) / r) == 1 {
                    continue 'outer;
                }
            }
            generator = g;
            break;
        }
        self.generator = generator;
        let mut exp = Vec::with_capacity((n - 1) as usize);
        let mut log = vec![0u32; n as usize];
        let mut acc = 1;
        for i in 0..(n - 1) {
            exp.push(acc);
            log[acc as usize] = i as u32;
            acc = self.mul_slow(acc, generator);
        }
        debug_assert_eq!(acc, 1, "generator order mismatch");
        self.exp = exp;
        self.log = log;
    }

    fn pow_slow(&self, x: El, e: u64) -> El {
        let mut acc = 1;
        let mut b = x;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        acc
    }
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Field(order {}, degree {} over {})",
            self.order, self.degree, self.subfield_order
        )
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// (p, e) with q = p^e, p prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut e = 0;
            let mut v = q;
            while v % p == 0 {
                v /= p;
                e += 1;
            }
            return (v == 1).then_some((p, e));
        }
        p += 1;
    }
    (q >= 2).then_some((q, 1))
}

// --- polynomial helpers over an explicit coefficient field (little-endian) ---

fn poly_trim(a: &mut Vec<El>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mul(f: &Field, a: &[El], b: &[El]) -> Vec<El> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo monic `m`.
fn poly_rem(f: &Field, a: &[El], m: &[El]) -> Vec<El> {
    let mut r: Vec<El> = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    debug_assert_eq!(m[dm], 1, "divisor must be monic");
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for i in 0..dm {
                r[shift + i] = f.sub(r[shift + i], f.mul(lead, m[i]));
            }
        }
        r.pop();
        poly_trim(&mut r);
    }
    r
}

/// Some(factor) when `modulus` has a monic factor of degree in 1..=deg/2,
/// None when irreducible. Degree-1 moduli are always irreducible.
fn irreducibility_witness(f: &Field, modulus: &[El]) -> Option<Vec<El>> {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (f.order() as u128).pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut v = code;
            for _ in 0..d {
                g.push((v % f.order() as u128) as El);
                v /= f.order() as u128;
            }
            g.push(1);
            if poly_rem(f, modulus, &g).is_empty() {
                return Some(g);
            }
        }
    }
    None
}

/// Lexicographically smallest monic irreducible of the given degree over `f`,
/// ordering candidates by the integer encoding of their low coefficients.
/// This rule is part of the external format: towers built without an explicit
/// modulus are reproducible from (q, m) alone.
pub fn default_modulus(f: &Field, degree: usize) -> Vec<El> {
    assert!(degree >= 1);
    let count = (f.order() as u128).pow(degree as u32);
    for code in 0..count {
        let mut g = Vec::with_capacity(degree + 1);
        let mut v = code;
        for _ in 0..degree {
            g.push((v % f.order() as u128) as El);
            v /= f.order() as u128;
        }
        g.push(1);
        if irreducibility_witness(f, &g).is_none() {
            return g;
        }
    }
    unreachable!("irreducibles of every degree exist over a finite field");
}

/// Which of the two distinguished bases of F_{q^m} over F_q to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    Alpha,
    AlphaPrime,
}

/// Tower level selector for trace/Frobenius entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Mid,
    Top,
}

/// F_q ⊆ F_{q^m} ⊆ F_{q^n} (top level optional, n = s·m) with a pinned basis
/// α of F_{q^m}/F_q and its trace-dual α'.
pub struct FieldTower {
    q: u64,
    m: usize,
    s: usize,
    base: Arc<Field>,
    mid: Arc<Field>,
    top: Option<Arc<Field>>,
    alpha: Vec<El>,
    alpha_dual: Vec<El>,
    /// Inverses of the digit matrices (row i = digits(basis_i)): applying one
    /// to a digit vector yields coordinates over the corresponding basis.
    alpha_inv: Mat,
    dual_inv: Mat,
}

impl FieldTower {
    /// F_q ⊆ F_{q^m} with the polynomial basis (1, y, ..., y^(m-1)).
    /// `modulus` defaults to the lexicographically smallest irreducible.
    pub fn new(q: u64, m: usize, modulus: Option<Vec<El>>) -> Result<FieldTower> {
        if m == 0 {
            return Err(Error::Parameter("extension degree m must be >= 1".into()));
        }
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::Construction(format!("q = {q} is not a prime power")))?;
        if q > MAX_Q {
            return Err(Error::Unsupported(format!("q = {q} exceeds the cap {MAX_Q}")));
        }
        let prime = Field::prime(p)?;
        let base = if e == 1 {
            prime
        } else {
            let md = default_modulus(&prime, e as usize);
            Field::extension(prime, md)?
        };
        let md = match modulus {
            Some(md) => md,
            None => default_modulus(&base, m),
        };
        if md.len() != m + 1 {
            return Err(Error::Parameter(format!(
                "modulus degree {} does not match m = {m}",
                md.len().saturating_sub(1)
            )));
        }
        let mid = Field::extension(base.clone(), md)?;
        let alpha: Vec<El> = (0..m as u32).map(|i| q.pow(i)).collect();
        Self::assemble(q, m, base, mid, None, alpha)
    }

    /// Same tower with a custom basis α of F_{q^m} over F_q.
    pub fn with_basis(self, alpha: Vec<El>) -> Result<FieldTower> {
        if alpha.len() != self.m {
            return Err(Error::Parameter(format!(
                "basis has {} elements, expected m = {}",
                alpha.len(),
                self.m
            )));
        }
        Self::assemble(self.q, self.m, self.base, self.mid, self.top, alpha)
    }

    /// Adds the top level F_{q^n} = F_{q^m}[z]/(modulus), n = s·m.
    pub fn with_top_level(mut self, s: usize, modulus: Option<Vec<El>>) -> Result<FieldTower> {
        if s < 2 {
            return Err(Error::Parameter("second-level degree s must be >= 2".into()));
        }
        let md = match modulus {
            Some(md) => md,
            None => default_modulus(&self.mid, s),
        };
        if md.len() != s + 1 {
            return Err(Error::Parameter(format!(
                "second-level modulus degree {} does not match s = {s}",
                md.len().saturating_sub(1)
            )));
        }
        let top = Field::extension(self.mid.clone(), md)?;
        self.s = s;
        self.top = Some(top);
        Ok(self)
    }

    fn assemble(
        q: u64,
        m: usize,
        base: Arc<Field>,
        mid: Arc<Field>,
        top: Option<Arc<Field>>,
        alpha: Vec<El>,
    ) -> Result<FieldTower> {
        if alpha.iter().any(|&a| a >= mid.order()) {
            return Err(Error::Parameter("basis element out of range".into()));
        }
        let alpha_rows = Mat::from_rows(m, m, alpha.iter().map(|&a| mid.digits(a)).collect())?;
        let alpha_inv = alpha_rows.inverse(&base).ok_or_else(|| {
            Error::Construction("basis elements are linearly dependent over F_q".into())
        })?;
        // Dual basis via the Gram matrix of the trace form: with
        // G_ij = Tr(α_i α_j), the rows of G^{-1} give α'_j = Σ_k (G^{-1})_jk α_k.
        let mut gram = Mat::zero(m, m);
        for i in 0..m {
            for j in 0..m {
                let t = mid.trace_to(q, mid.mul(alpha[i], alpha[j]))?;
                gram.set(i, j, t);
            }
        }
        let gram_inv = gram
            .inverse(&base)
            .ok_or_else(|| Error::Construction("degenerate trace form".into()))?;
        let mut alpha_dual = Vec::with_capacity(m);
        for j in 0..m {
            let mut acc = 0;
            for k in 0..m {
                acc = mid.add(acc, mid.mul(gram_inv.get(j, k), alpha[k]));
            }
            alpha_dual.push(acc);
        }
        let dual_rows = Mat::from_rows(m, m, alpha_dual.iter().map(|&a| mid.digits(a)).collect())?;
        let dual_inv = dual_rows
            .inverse(&base)
            .ok_or_else(|| Error::Construction("degenerate dual basis".into()))?;
        Ok(FieldTower {
            q,
            m,
            s: 1,
            base,
            mid,
            top,
            alpha,
            alpha_dual,
            alpha_inv,
            dual_inv,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Degree of the top level over F_{q^m}; 1 when there is no top level.
    pub fn s(&self) -> usize {
        self.s
    }

    /// Total degree of the top level over F_q (= m when there is no top level).
    pub fn n_top(&self) -> usize {
        self.m * self.s
    }

    pub fn base(&self) -> &Arc<Field> {
        &self.base
    }

    pub fn mid(&self) -> &Arc<Field> {
        &self.mid
    }

    pub fn top(&self) -> Result<&Arc<Field>> {
        self.top
            .as_ref()
            .ok_or_else(|| Error::Parameter("tower has no top level".into()))
    }

    pub fn alpha(&self) -> &[El] {
        &self.alpha
    }

    pub fn alpha_dual(&self) -> &[El] {
        &self.alpha_dual
    }

    pub fn basis(&self, which: Basis) -> &[El] {
        match which {
            Basis::Alpha => &self.alpha,
            Basis::AlphaPrime => &self.alpha_dual,
        }
    }

    fn level(&self, level: Level) -> Result<&Arc<Field>> {
        match level {
            Level::Mid => Ok(&self.mid),
            Level::Top => self.top(),
        }
    }

    /// x^(q^j) at the chosen level.
    pub fn frobenius(&self, level: Level, x: El, j: usize) -> Result<El> {
        self.level(level)?.frobenius(self.q, x, j)
    }

    /// Coordinates of x ∈ F_{q^m} over the chosen distinguished basis.
    pub fn coords(&self, x: El, which: Basis) -> Vec<El> {
        let digits = self.mid.digits(x);
        let inv = match which {
            Basis::Alpha => &self.alpha_inv,
            Basis::AlphaPrime => &self.dual_inv,
        };
        let row = Mat::from_rows(1, self.m, vec![digits]).unwrap();
        row.mul(&self.base, inv).unwrap().into_row()
    }

    /// Inverse of [`coords`]: Σ basis_i · c_i.
    pub fn combine(&self, coords: &[El], which: Basis) -> El {
        debug_assert_eq!(coords.len(), self.m);
        let basis = self.basis(which);
        let mut acc = 0;
        for (i, &c) in coords.iter().enumerate() {
            acc = self.mid.add(acc, self.mid.mul(basis[i], c));
        }
        acc
    }

    pub fn trace_mid_to_base(&self, x: El) -> Result<El> {
        self.mid.trace_to(self.q, x)
    }

    pub fn trace_top_to_mid(&self, x: El) -> Result<El> {
        self.top()?.trace_to(self.mid.order(), x)
    }

    pub fn trace_top_to_base(&self, x: El) -> Result<El> {
        self.top()?.trace_to(self.q, x)
    }

    /// F_q-coordinates of a top-level element w.r.t. the polynomial product
    /// basis (length n = s·m): simply its base-q digit string.
    pub fn top_coords_q(&self, x: El) -> Result<Vec<El>> {
        let top = self.top()?;
        let mut out = Vec::with_capacity(self.n_top());
        let mut v = x;
        for _ in 0..self.n_top() {
            out.push(v % self.q);
            v /= self.q;
        }
        debug_assert!(v == 0 && x < top.order());
        Ok(out)
    }

    /// Trace-dual basis of an arbitrary F_q-basis at the chosen level
    /// (length must be the level's degree over F_q).
    pub fn dual_basis_in(&self, level: Level, basis: &[El]) -> Result<Vec<El>> {
        let f = self.level(level)?.clone();
        let d = f.degree_over(self.q)?;
        if basis.len() != d {
            return Err(Error::Parameter(format!(
                "basis has {} elements, level degree is {d}",
                basis.len()
            )));
        }
        let mut gram = Mat::zero(d, d);
        for i in 0..d {
            for j in 0..d {
                gram.set(i, j, f.trace_to(self.q, f.mul(basis[i], basis[j]))?);
            }
        }
        let inv = gram
            .inverse(&self.base)
            .ok_or_else(|| Error::Construction("basis is linearly dependent over F_q".into()))?;
        let mut dual = Vec::with_capacity(d);
        for j in 0..d {
            let mut acc = 0;
            for k in 0..d {
                acc = f.add(acc, f.mul(inv.get(j, k), basis[k]));
            }
            dual.push(acc);
        }
        Ok(dual)
    }
}

impl std::fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FieldTower(q={}, m={}, s={})", self.q, self.m, self.s)
    }
}
