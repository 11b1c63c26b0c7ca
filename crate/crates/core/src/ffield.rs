//! Exact arithmetic in F_p and F_{p^n}, polynomial arithmetic over those
//! fields, and the constructive polynomial searches used by the formula
//! synthesizers (trace polynomials, rootless polynomials, product coverage).
//!
//! Elements are stored as mixed-radix indices into the power basis of the
//! field's defining modulus, so an `FqElem` is a bare `u32` and all scans
//! over a field are cheap table walks. Multiplication and inversion go
//! through discrete-log tables built once per field.

use std::fmt;

use thiserror::Error;

/// Hard cap on field size, q = p^n.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// Separate guard for the quadratic product-coverage scan.
pub const MAX_PRODUCT_SCAN_FIELD: u64 = 1 << 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field size {0} exceeds the bound {1}")]
    SizeBound(u64, u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("polynomial must be monic")]
    NonMonic,
    #[error("zero polynomial has no roots to scan")]
    ZeroPolynomial,
    #[error("legendre symbol requires an odd prime, got {0}")]
    NotOddPrime(u64),
    #[error("field of size {0} too large for the product scan (bound {1})")]
    ProductScanBound(u64, u64),
}

pub type Result<T> = std::result::Result<T, FieldError>;

/// Deterministic trial-division primality check; fine at desk scale.
pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x % 2 == 0 {
        return x == 2;
    }
    let mut d = 3u64;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// An element of F_{p^n}, stored as its mixed-radix index
/// `sum coords[i] * p^i` with respect to the power basis of the modulus.
/// All arithmetic goes through the owning [`FieldDesc`].
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem(pub(crate) u32);

impl FqElem {
    pub fn index(self) -> u32 {
        self.0
    }
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A finite field F_{p^n} with a fixed monic irreducible modulus of degree n
/// over F_p. Construction precomputes discrete-log tables, so `make_field`
/// does O(q) work up front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldDesc {
    p: u64,
    n: usize,
    q: u64,
    /// Monic modulus over F_p, length n+1, lowest degree first. For n = 1
    /// this is X itself.
    modulus: Vec<u64>,
    /// exp[i] = index of g^i for a fixed generator g, i in 0..q-1.
    exp: Vec<u32>,
    /// log[idx] for idx in 1..q; log[0] unused.
    log: Vec<u32>,
}

impl FieldDesc {
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn degree(&self) -> usize {
        self.n
    }
    pub fn size(&self) -> u64 {
        self.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FqElem {
        FqElem(0)
    }
    pub fn one(&self) -> FqElem {
        FqElem(1)
    }

    pub fn elem(&self, index: u32) -> FqElem {
        debug_assert!((index as u64) < self.q);
        FqElem(index)
    }

    /// Embed an integer through Z -> F_p -> F_{p^n}.
    pub fn from_int(&self, c: i64) -> FqElem {
        let p = self.p as i64;
        FqElem(c.rem_euclid(p) as u32)
    }

    /// Coordinates with respect to the power basis, lowest power first.
    pub fn coords(&self, e: FqElem) -> Vec<u64> {
        let mut v = e.0 as u64;
        let mut out = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    pub fn from_coords(&self, coords: &[u64]) -> FqElem {
        assert!(coords.len() <= self.n, "too many coordinates");
        let mut idx = 0u64;
        for &c in coords.iter().rev() {
            debug_assert!(c < self.p);
            idx = idx * self.p + c;
        }
        FqElem(idx as u32)
    }

    /// Element printed as its coordinate vector, e.g. `[1,0,1]`.
    pub fn format_elem(&self, e: FqElem) -> String {
        let coords = self.coords(e);
        let inner: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
        format!("[{}]", inner.join(","))
    }

    pub fn iter(&self) -> impl Iterator<Item = FqElem> {
        (0..self.q as u32).map(FqElem)
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.n == 1 {
            return FqElem(((a.0 as u64 + b.0 as u64) % self.p) as u32);
        }
        let (mut av, mut bv) = (a.0 as u64, b.0 as u64);
        let mut idx = 0u64;
        let mut mult = 1u64;
        for _ in 0..self.n {
            let s = (av % self.p + bv % self.p) % self.p;
            idx += s * mult;
            mult *= self.p;
            av /= self.p;
            bv /= self.p;
        }
        FqElem(idx as u32)
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        if self.n == 1 {
            return FqElem(((self.p - a.0 as u64) % self.p) as u32);
        }
        let mut av = a.0 as u64;
        let mut idx = 0u64;
        let mut mult = 1u64;
        for _ in 0..self.n {
            let s = (self.p - av % self.p) % self.p;
            idx += s * mult;
            mult *= self.p;
            av /= self.p;
        }
        FqElem(idx as u32)
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.0 == 0 || b.0 == 0 {
            return FqElem(0);
        }
        let la = self.log[a.0 as usize] as u64;
        let lb = self.log[b.0 as usize] as u64;
        FqElem(self.exp[((la + lb) % (self.q - 1)) as usize])
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: FqElem) -> FqElem {
        assert!(a.0 != 0, "inversion of zero");
        let la = self.log[a.0 as usize] as u64;
        FqElem(self.exp[((self.q - 1 - la) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: FqElem, e: u64) -> FqElem {
        if a.0 == 0 {
            return if e == 0 { FqElem(1) } else { FqElem(0) };
        }
        let la = self.log[a.0 as usize] as u64;
        let le = (la % (self.q - 1)) * (e % (self.q - 1)) % (self.q - 1);
        FqElem(self.exp[le as usize])
    }

    // ---- raw coordinate-vector arithmetic, used only while the discrete-log
    // tables are being built ----

    fn raw_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.n;
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % self.p;
            }
        }
        // reduce modulo the monic modulus
        for d in (n..2 * n - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for k in 0..n {
                let m = self.modulus[k];
                if m != 0 {
                    let sub = c * m % self.p;
                    prod[d - n + k] = (prod[d - n + k] + self.p - sub) % self.p;
                }
            }
        }
        prod.truncate(n);
        prod
    }

    fn raw_index(&self, coords: &[u64]) -> u64 {
        let mut idx = 0u64;
        for &c in coords.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    fn raw_pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut base = a.to_vec();
        let mut acc = vec![0u64; self.n];
        acc[0] = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(&acc, &base);
            }
            base = self.raw_mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let group = q - 1;
        let mut prime_factors = Vec::new();
        let mut rest = group;
        let mut d = 2u64;
        while d * d <= rest {
            if rest % d == 0 {
                prime_factors.push(d);
                while rest % d == 0 {
                    rest /= d;
                }
            }
            d += 1;
        }
        if rest > 1 {
            prime_factors.push(rest);
        }

        let mut gen_coords = None;
        'cand: for idx in 1..q {
            let mut coords = Vec::with_capacity(self.n);
            let mut v = idx;
            for _ in 0..self.n {
                coords.push(v % self.p);
                v /= self.p;
            }
            for &ell in &prime_factors {
                let pw = self.raw_pow(&coords, group / ell);
                if self.raw_index(&pw) == 1 {
                    continue 'cand;
                }
            }
            gen_coords = Some(coords);
            break;
        }
        let g = gen_coords.expect("multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u32; group as usize];
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![0u64; self.n];
        cur[0] = 1;
        for i in 0..group {
            let idx = self.raw_index(&cur) as u32;
            exp[i as usize] = idx;
            log[idx as usize] = i as u32;
            cur = self.raw_mul(&cur, &g);
        }
        debug_assert_eq!(self.raw_index(&cur), 1, "generator order mismatch");
        self.exp = exp;
        self.log = log;
    }
}

/// A dense polynomial over one field, lowest degree first, trimmed so the
/// leading coefficient is nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FqPoly {
    coeffs: Vec<FqElem>,
}

impl FqPoly {
    pub fn new(mut coeffs: Vec<FqElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FqPoly { coeffs }
    }

    pub fn zero() -> Self {
        FqPoly { coeffs: Vec::new() }
    }

    pub fn from_ints(field: &FieldDesc, coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 by convention of callers
    /// that have already excluded it.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).copied().unwrap_or(FqElem(0))
    }

    pub fn is_monic(&self, field: &FieldDesc) -> bool {
        self.coeffs.last() == Some(&field.one())
    }

    pub fn eval(&self, field: &FieldDesc, x: FqElem) -> FqElem {
        let mut acc = field.zero();
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, x), c);
        }
        acc
    }

    pub fn derivative(&self, field: &FieldDesc) -> FqPoly {
        if self.coeffs.len() <= 1 {
            return FqPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| field.mul(field.from_int(i as i64), c))
            .collect();
        FqPoly::new(coeffs)
    }

    pub fn add(&self, field: &FieldDesc, other: &FqPoly) -> FqPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| field.add(self.coeff(i), other.coeff(i)))
            .collect();
        FqPoly::new(coeffs)
    }

    pub fn mul(&self, field: &FieldDesc, other: &FqPoly) -> FqPoly {
        if self.is_zero() || other.is_zero() {
            return FqPoly::zero();
        }
        let mut coeffs = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = field.add(coeffs[i + j], field.mul(a, b));
            }
        }
        FqPoly::new(coeffs)
    }

    /// Remainder of self divided by a nonzero divisor.
    pub fn rem(&self, field: &FieldDesc, divisor: &FqPoly) -> FqPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let d = divisor.degree();
        let lead_inv = field.inv(*divisor.coeffs.last().unwrap());
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let k = rem.len() - 1;
            let factor = field.mul(rem[k], lead_inv);
            if !factor.is_zero() {
                for i in 0..=d {
                    let sub = field.mul(factor, divisor.coeff(i));
                    rem[k - d + i] = field.sub(rem[k - d + i], sub);
                }
            }
            rem.pop();
        }
        FqPoly::new(rem)
    }

    pub fn divides(&self, field: &FieldDesc, dividend: &FqPoly) -> bool {
        dividend.rem(field, self).is_zero()
    }

    pub fn gcd(&self, field: &FieldDesc, other: &FqPoly) -> FqPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        a
    }

    /// Map a polynomial over F_p into an extension of F_p via the constant
    /// embedding of coordinates.
    pub fn embed(&self, _from: &FieldDesc, _into: &FieldDesc) -> FqPoly {
        FqPoly {
            coeffs: self.coeffs.clone(),
        }
    }

    /// Integer-coefficient rendering, e.g. `X^2+X+1`, using the canonical
    /// representatives of the prime-subfield coordinates.
    pub fn display(&self, field: &FieldDesc) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cv = c.index() as u64;
            let term = match (i, cv) {
                (0, v) => v.to_string(),
                (1, 1) => "X".to_string(),
                (1, v) => format!("{v}X"),
                (d, 1) => format!("X^{d}"),
                (d, v) => format!("{v}X^{d}"),
            };
            parts.push(term);
        }
        parts.join("+")
    }
}

/// Iterate monic polynomials of a fixed degree over a field, in counting
/// order of the non-leading coefficient tuple: draw the value
/// `sum c_i * q^i` for i < degree upward from 0. This is the canonical
/// "lexicographically smallest first" order used by all searches here.
pub fn monic_polys(field: &FieldDesc, degree: usize) -> impl Iterator<Item = FqPoly> + '_ {
    let q = field.size();
    let count = q.pow(degree as u32);
    (0..count).map(move |mut v| {
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            coeffs.push(FqElem((v % q) as u32));
            v /= q;
        }
        coeffs.push(field.one());
        FqPoly { coeffs }
    })
}

/// Construct F_{p^n} with the first monic irreducible modulus of degree n in
/// counting order.
pub fn make_field(p: u64, n: usize) -> Result<FieldDesc> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if n == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let mut q = 1u64;
    for _ in 0..n {
        q = q.saturating_mul(p);
        if q > MAX_FIELD_SIZE {
            return Err(FieldError::SizeBound(q, MAX_FIELD_SIZE));
        }
    }

    let modulus = if n == 1 {
        vec![0, 1]
    } else {
        let prime = make_field(p, 1)?;
        let found = monic_polys(&prime, n)
            .find(|f| poly_is_irreducible(f, &prime).unwrap_or(false))
            .expect("irreducible polynomials of every degree exist over F_p");
        found.coeffs.iter().map(|c| c.index() as u64).collect()
    };

    let mut field = FieldDesc {
        p,
        n,
        q,
        modulus,
        exp: Vec::new(),
        log: Vec::new(),
    };
    field.build_tables();
    Ok(field)
}

/// Exhaustive trial-division irreducibility test: divide by every monic
/// polynomial of degree up to deg(f)/2.
pub fn poly_is_irreducible(f: &FqPoly, field: &FieldDesc) -> Result<bool> {
    if !f.is_monic(field) {
        return Err(FieldError::NonMonic);
    }
    let deg = f.degree();
    assert!(deg >= 1, "irreducibility needs degree >= 1");
    for d in 1..=deg / 2 {
        for g in monic_polys(field, d) {
            if g.divides(field, f) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Find the first monic irreducible polynomial of degree m over F_p with
/// nonzero derivative at 0, scanning in counting order. Existence is
/// guaranteed (minimal polynomial of the inverse of a normal-basis element),
/// so the scan terminates.
pub fn find_trace_poly(p: u64, m: usize) -> Result<FqPoly> {
    let prime = make_field(p, 1)?;
    for f in monic_polys(&prime, m) {
        if f.derivative(&prime).eval(&prime, prime.zero()).is_zero() {
            continue;
        }
        if poly_is_irreducible(&f, &prime)? {
            return Ok(f);
        }
    }
    unreachable!("a separable irreducible polynomial of degree m with f'(0) != 0 always exists")
}

/// For a finite field F = F_{p^n}, produce a monic irreducible f over F_p
/// with no root in F together with a point a where f' does not vanish.
/// Picks the smallest degree m >= 2 that does not divide n; an irreducible
/// polynomial of that degree has all roots in F_{p^m}, none in F.
pub fn find_nonroot_poly(field: &FieldDesc) -> Result<(FqPoly, FqElem)> {
    let n = field.degree();
    let m = (2..).find(|m| n % m != 0).expect("some integer fails to divide n");
    let f = find_trace_poly(field.p(), m)?;
    Ok((f, field.zero()))
}

/// True iff the exhaustive scan over all q elements finds no root of f.
pub fn residue_no_root(f: &FqPoly, field: &FieldDesc) -> Result<bool> {
    if f.is_zero() {
        return Err(FieldError::ZeroPolynomial);
    }
    Ok(field.iter().all(|x| !f.eval(field, x).is_zero()))
}

/// True iff f is square-free over the algebraic closure: gcd(f, f') is a
/// nonzero constant. A vanishing derivative means an inseparable p-th power,
/// hence not square-free.
pub fn is_squarefree(f: &FqPoly, field: &FieldDesc) -> bool {
    assert!(f.degree() >= 1, "square-freeness needs degree >= 1");
    let fd = f.derivative(field);
    if fd.is_zero() {
        return false;
    }
    f.gcd(field, &fd).degree() == 0
}

/// Exhaustively decide whether f(F)·f(F) ∪ {0} covers all of F.
pub fn product_cover_check(f: &FqPoly, field: &FieldDesc) -> Result<bool> {
    if field.size() > MAX_PRODUCT_SCAN_FIELD {
        return Err(FieldError::ProductScanBound(
            field.size(),
            MAX_PRODUCT_SCAN_FIELD,
        ));
    }
    Ok(product_cover_missing(f, field).is_empty())
}

/// The elements of F not hit by f(F)·f(F) ∪ {0}.
pub fn product_cover_missing(f: &FqPoly, field: &FieldDesc) -> Vec<FqElem> {
    let q = field.size() as usize;
    let mut in_image = vec![false; q];
    for x in field.iter() {
        in_image[f.eval(field, x).index() as usize] = true;
    }
    let image: Vec<FqElem> = (0..q as u32)
        .filter(|&i| in_image[i as usize])
        .map(FqElem)
        .collect();
    let mut covered = vec![false; q];
    covered[0] = true;
    for &u in &image {
        for &v in &image {
            covered[field.mul(u, v).index() as usize] = true;
        }
    }
    (0..q as u32)
        .filter(|&i| !covered[i as usize])
        .map(FqElem)
        .collect()
}

/// Legendre symbol via the Euler criterion: n^((p-1)/2) mod p mapped to
/// {-1, 0, +1}.
pub fn legendre(n: i64, p: u64) -> Result<i32> {
    if p == 2 || !is_prime(p) {
        return Err(FieldError::NotOddPrime(p));
    }
    let r = n.rem_euclid(p as i64) as u64;
    if r == 0 {
        return Ok(0);
    }
    let e = mod_pow(r, (p - 1) / 2, p);
    Ok(if e == 1 { 1 } else { -1 })
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{}", self.p, self.n)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(field: &FieldDesc, coeffs: &[i64]) -> FqPoly {
        FqPoly::from_ints(field, coeffs)
    }

    #[test]
    fn make_field_moduli() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(f2.modulus(), &[0, 1]);
        // X^2+X+1 is the only irreducible monic quadratic over F_2.
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        // -1 is a non-square mod 3, so the counting scan stops at X^2+1.
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn make_field_rejects_bad_input() {
        assert_eq!(make_field(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert!(matches!(
            make_field(2, 21).unwrap_err(),
            FieldError::SizeBound(..)
        ));
        assert_eq!(make_field(5, 0).unwrap_err(), FieldError::ZeroDegree);
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        // Exhaustive tables for q <= 16.
        for (p, n) in [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (2, 2), (2, 3), (2, 4), (3, 2)] {
            let f = make_field(p, n).unwrap();
            for a in f.iter() {
                assert_eq!(f.add(a, f.zero()), a);
                assert_eq!(f.mul(a, f.one()), a);
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a)), f.one());
                }
                for b in f.iter() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.iter() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn irreducibility_examples() {
        let f2 = make_field(2, 1).unwrap();
        assert!(poly_is_irreducible(&poly(&f2, &[1, 1, 1]), &f2).unwrap());
        // X^2+1 = (X+1)^2 over F_2.
        assert!(!poly_is_irreducible(&poly(&f2, &[1, 0, 1]), &f2).unwrap());
        let f3 = make_field(3, 1).unwrap();
        assert!(poly_is_irreducible(&poly(&f3, &[2, 1, 1]), &f3).unwrap());
        assert_eq!(
            poly_is_irreducible(&poly(&f3, &[1, 1, 2]), &f3).unwrap_err(),
            FieldError::NonMonic
        );
    }

    #[test]
    fn trace_poly_examples() {
        let f2 = make_field(2, 1).unwrap();
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(find_trace_poly(2, 2).unwrap(), poly(&f2, &[1, 1, 1]));
        assert_eq!(find_trace_poly(3, 2).unwrap(), poly(&f3, &[2, 1, 1]));
        assert_eq!(find_trace_poly(2, 3).unwrap(), poly(&f2, &[1, 1, 0, 1]));
    }

    #[test]
    fn nonroot_poly_examples() {
        let f2 = make_field(2, 1).unwrap();
        let (f, a) = find_nonroot_poly(&f2).unwrap();
        assert_eq!(f.degree(), 2);
        assert!(a.is_zero());

        let f4 = make_field(2, 2).unwrap();
        let (f, _) = find_nonroot_poly(&f4).unwrap();
        assert_eq!(f.degree(), 3);

        let f64 = make_field(2, 6).unwrap();
        let (f, _) = find_nonroot_poly(&f64).unwrap();
        assert_eq!(f.degree(), 4);
    }

    #[test]
    fn nonroot_poly_contract() {
        // For every output (f, a): no root in F and f'(a) != 0.
        for (p, n) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (2, 6)] {
            let field = make_field(p, n).unwrap();
            let prime = make_field(p, 1).unwrap();
            let (f, a) = find_nonroot_poly(&field).unwrap();
            let f_ext = f.embed(&prime, &field);
            assert!(residue_no_root(&f_ext, &field).unwrap());
            assert!(!f_ext.derivative(&field).eval(&field, a).is_zero());
        }
    }

    #[test]
    fn no_root_examples() {
        let f2 = make_field(2, 1).unwrap();
        assert!(residue_no_root(&poly(&f2, &[1, 1, 1]), &f2).unwrap());
        let f4 = make_field(2, 2).unwrap();
        // F_4 contains both roots of its own defining quadratic.
        let f = poly(&f2, &[1, 1, 1]).embed(&f2, &f4);
        assert!(!residue_no_root(&f, &f4).unwrap());
        let f5 = make_field(5, 1).unwrap();
        assert!(residue_no_root(&poly(&f5, &[-2, 0, 1]), &f5).unwrap());
        assert_eq!(
            residue_no_root(&FqPoly::zero(), &f5).unwrap_err(),
            FieldError::ZeroPolynomial
        );
    }

    #[test]
    fn squarefree_examples() {
        let f5 = make_field(5, 1).unwrap();
        assert!(is_squarefree(&poly(&f5, &[-2, 0, 1]), &f5));
        let f3 = make_field(3, 1).unwrap();
        // (X+1)^2 = X^2+2X+1
        assert!(!is_squarefree(&poly(&f3, &[1, 2, 1]), &f3));
        let f2 = make_field(2, 1).unwrap();
        // X^2+1 over F_2 has zero derivative.
        assert!(!is_squarefree(&poly(&f2, &[1, 0, 1]), &f2));
    }

    #[test]
    fn product_cover_examples() {
        let f83 = make_field(83, 1).unwrap();
        assert!(product_cover_check(&poly(&f83, &[-2, 0, 1]), &f83).unwrap());
        // f = X covers: f(F)f(F) contains every product of two elements.
        for q in [3u64, 7, 9] {
            let (p, n) = if q == 9 { (3, 2) } else { (q, 1) };
            let field = make_field(p, n).unwrap();
            assert!(product_cover_check(&poly(&field, &[0, 1]), &field).unwrap());
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(2, 7).unwrap(), 1); // 3^2 = 2 mod 7
        assert_eq!(legendre(3, 7).unwrap(), -1);
        assert_eq!(legendre(7, 7).unwrap(), 0);
        assert_eq!(legendre(5, 2).unwrap_err(), FieldError::NotOddPrime(2));
        assert_eq!(legendre(5, 9).unwrap_err(), FieldError::NotOddPrime(9));
    }

    #[test]
    fn legendre_properties() {
        // Complete multiplicativity in n and periodicity mod p.
        for p in [3u64, 5, 7, 11, 13] {
            for n in -6i64..=6 {
                for m in -6i64..=6 {
                    assert_eq!(
                        legendre(n * m, p).unwrap(),
                        legendre(n, p).unwrap() * legendre(m, p).unwrap()
                    );
                }
                assert_eq!(legendre(n + p as i64, p).unwrap(), legendre(n, p).unwrap());
            }
        }
    }

    #[test]
    fn trace_poly_contract_sweep() {
        // Irreducible of the right degree with f'(0) != 0 for p <= 7, m <= 4
        // (the full p <= 13, m <= 6 sweep is the acceptance suite's job).
        for p in [2u64, 3, 5, 7] {
            let prime = make_field(p, 1).unwrap();
            for m in 2..=4 {
                let f = find_trace_poly(p, m).unwrap();
                assert_eq!(f.degree(), m);
                assert!(poly_is_irreducible(&f, &prime).unwrap());
                assert!(!f.derivative(&prime).eval(&prime, prime.zero()).is_zero());
            }
        }
    }

    #[test]
    fn format_and_coords_roundtrip() {
        let f9 = make_field(3, 2).unwrap();
        for e in f9.iter() {
            let c = f9.coords(e);
            assert_eq!(f9.from_coords(&c), e);
        }
        assert_eq!(f9.format_elem(f9.from_coords(&[2, 1])), "[2,1]");
    }

    #[test]
    fn poly_display() {
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(poly(&f5, &[1, 1, 1]).display(&f5), "X^2+X+1");
        assert_eq!(poly(&f5, &[-2, 0, 1]).display(&f5), "X^2+3");
        assert_eq!(poly(&f5, &[0, 1]).display(&f5), "X");
        assert_eq!(FqPoly::zero().display(&f5), "0");
    }
}
