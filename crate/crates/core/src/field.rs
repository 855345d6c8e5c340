//! Two-level tower 𝔽_p ⊆ 𝔽_q ⊆ 𝔽_{q^n}.
//!
//! Elements of 𝔽_q are packed into a [`Fq`] holding their canonical index:
//! the coefficient vector over 𝔽_p read as a base-p integer, constant term
//! least significant. Elements of 𝔽_{q^n} are [`FieldElem`] coefficient
//! vectors over 𝔽_q modulo a monic irreducible of degree n. Both levels
//! enumerate their elements in that base-q integer order.

use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::nt;
use crate::poly::{Poly, PolyRing};

const MAX_K: usize = 32;

/// An element of 𝔽_q, meaningful only together with its [`FieldCtx`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq(u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Canonical index in `0..q`.
    pub fn index(self) -> u32 {
        self.0
    }
}

/// Structural fingerprint of a field context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CtxId(u64);

/// 𝔽_q = 𝔽_p[a]/(m(a)); cheap to clone.
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<FieldInner>,
}

struct FieldInner {
    p: u32,
    k: usize,
    q: u32,
    /// monic modulus over 𝔽_p, low coefficient first; empty when k = 1
    modulus: Vec<u32>,
    id: CtxId,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p())
            .field("k", &self.k())
            .field("q", &self.q())
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.inner.id == other.inner.id
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// The prime field 𝔽_p.
    pub fn prime(p: u64) -> Result<Self> {
        if !nt::is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::OrderOverflow { base: p, exp: 1 });
        }
        Ok(Self::build(p as u32, 1, Vec::new()))
    }

    /// 𝔽_{p^k}. Without a modulus the lexicographically smallest monic
    /// irreducible of degree k over 𝔽_p is used. A supplied modulus is given
    /// low coefficient first and must be monic of degree k.
    pub fn new(p: u64, k: usize, modulus: Option<&[u32]>) -> Result<Self> {
        let prime = Self::prime(p)?;
        if k == 0 {
            return Err(Error::InvalidArgument("extension degree must be at least 1".into()));
        }
        nt::checked_pow(p, k as u64)
            .filter(|&q| q <= u32::MAX as u64 && k <= MAX_K)
            .ok_or(Error::OrderOverflow { base: p, exp: k as u64 })?;
        if k == 1 && modulus.is_none() {
            return Ok(prime);
        }
        let ring = prime.poly_ring();
        let m = match modulus {
            Some(coeffs) => {
                let m = Poly::new(coeffs.iter().map(|&c| prime.from_int(c as i64)).collect());
                if m.degree() != Some(k) || !m.is_monic() || !irreducible_by_trial_division(&ring, &m) {
                    return Err(Error::NotIrreducible { degree: k });
                }
                m
            }
            None => smallest_irreducible_by_trial_division(&ring, k),
        };
        if k == 1 {
            // a degree-one modulus adds nothing over the prime field
            return Ok(prime);
        }
        Ok(Self::build(p as u32, k, m.coeffs().iter().map(|c| c.index()).collect()))
    }

    /// 𝔽_q for a prime power q with the default modulus.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, k) = nt::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, k as usize, None)
    }

    fn build(p: u32, k: usize, modulus: Vec<u32>) -> Self {
        let q = (p as u64).pow(k as u32) as u32;
        let mut h = DefaultHasher::new();
        ("Fq", p, k, &modulus).hash(&mut h);
        FieldCtx {
            inner: Arc::new(FieldInner {
                p,
                k,
                q,
                modulus,
                id: CtxId(h.finish()),
            }),
        }
    }

    pub fn p(&self) -> u64 {
        self.inner.p as u64
    }

    pub fn k(&self) -> usize {
        self.inner.k
    }

    pub fn q(&self) -> u64 {
        self.inner.q as u64
    }

    pub fn id(&self) -> CtxId {
        self.inner.id
    }

    /// Modulus over 𝔽_p (low coefficient first), absent for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        (self.inner.k > 1).then_some(self.inner.modulus.as_slice())
    }

    pub fn poly_ring(&self) -> PolyRing<'_> {
        PolyRing::new(self)
    }

    /// Element with canonical index `i` (`i < q`).
    pub fn element(&self, i: u32) -> Fq {
        assert!(i < self.inner.q, "index {i} out of range for q = {}", self.inner.q);
        Fq(i)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        (0..self.inner.q).map(Fq)
    }

    /// Image of an integer under ℤ → 𝔽_p ⊆ 𝔽_q.
    pub fn from_int(&self, c: i64) -> Fq {
        Fq(c.rem_euclid(self.inner.p as i64) as u32)
    }

    /// Coefficient of `a^i` for `i < k`.
    pub fn digits(&self, x: Fq) -> Vec<u32> {
        let mut d = [0u32; MAX_K];
        self.unpack(x, &mut d);
        d[..self.inner.k].to_vec()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Fq {
        let p = self.inner.p;
        let mut v = 0u32;
        for &c in digits.iter().take(self.inner.k).rev() {
            v = v * p + c % p;
        }
        Fq(v)
    }

    fn unpack(&self, x: Fq, out: &mut [u32; MAX_K]) {
        let p = self.inner.p;
        let mut v = x.0;
        for slot in out.iter_mut().take(self.inner.k) {
            *slot = v % p;
            v /= p;
        }
    }

    fn pack(&self, d: &[u32]) -> Fq {
        let p = self.inner.p;
        Fq(d[..self.inner.k].iter().rev().fold(0, |acc, &c| acc * p + c))
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let p = self.inner.p;
        if self.inner.k == 1 {
            let s = a.0 as u64 + b.0 as u64;
            return Fq((s % p as u64) as u32);
        }
        let (mut x, mut y) = ([0; MAX_K], [0; MAX_K]);
        self.unpack(a, &mut x);
        self.unpack(b, &mut y);
        for i in 0..self.inner.k {
            x[i] = (x[i] + y[i]) % p;
        }
        self.pack(&x)
    }

    pub fn neg(&self, a: Fq) -> Fq {
        let p = self.inner.p;
        if self.inner.k == 1 {
            return Fq((p - a.0) % p);
        }
        let mut x = [0; MAX_K];
        self.unpack(a, &mut x);
        for c in x.iter_mut().take(self.inner.k) {
            *c = (p - *c) % p;
        }
        self.pack(&x)
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        let p = self.inner.p as u64;
        if self.inner.k == 1 {
            return Fq((a.0 as u64 * b.0 as u64 % p) as u32);
        }
        if a.is_zero() || b.is_zero() {
            return Fq::ZERO;
        }
        let k = self.inner.k;
        let (mut x, mut y) = ([0; MAX_K], [0; MAX_K]);
        self.unpack(a, &mut x);
        self.unpack(b, &mut y);
        let mut prod = [0u64; 2 * MAX_K];
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + x[i] as u64 * y[j] as u64) % p;
            }
        }
        let m = &self.inner.modulus;
        for top in (k..2 * k - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            // subtract c * a^(top-k) * m(a); m is monic
            for (j, &mj) in m.iter().enumerate() {
                let idx = top - k + j;
                prod[idx] = (prod[idx] + (p - c) * mj as u64) % p;
            }
        }
        let mut out = [0u32; MAX_K];
        for i in 0..k {
            out[i] = prod[i] as u32;
        }
        self.pack(&out)
    }

    /// Multiplicative inverse by extended Euclid against the modulus.
    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.inner.k == 1 {
            return Ok(Fq(inv_mod_prime(a.0 as i64, self.inner.p as i64) as u32));
        }
        let prime = Self::build(self.inner.p, 1, Vec::new());
        let ring = prime.poly_ring();
        let as_poly = Poly::new(self.digits(a).into_iter().map(Fq).collect());
        let m = Poly::new(self.inner.modulus.iter().map(|&c| Fq(c)).collect());
        let inv = ring.inv_mod(&as_poly, &m)?;
        let d: Vec<u32> = inv.padded(self.inner.k).iter().map(|c| c.0).collect();
        Ok(self.pack(&d))
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fq, mut e: u64) -> Fq {
        let mut base = a;
        let mut acc = Fq::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Decimal for prime fields, a polynomial in `a` otherwise.
    pub fn format(&self, x: Fq) -> String {
        if self.inner.k == 1 {
            return x.0.to_string();
        }
        if x.is_zero() {
            return "0".into();
        }
        let d = self.digits(x);
        let mut terms = Vec::new();
        for (i, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}a"),
                _ => format!("{coef}a^{i}"),
            });
        }
        terms.join("+")
    }
}

fn inv_mod_prime(a: i64, p: i64) -> i64 {
    let (mut r0, mut r1) = (p, a.rem_euclid(p));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(p)
}

/// Monic polynomials of degree `d` over the ring's field, in canonical order.
fn monic_of_degree<'a>(ring: &'a PolyRing<'a>, d: usize) -> impl Iterator<Item = Poly> + 'a {
    let q = ring.field().q();
    let count = q.pow(d as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(ring.field().element((idx % q) as u32));
            idx /= q;
        }
        coeffs.push(Fq::ONE);
        Poly::new(coeffs)
    })
}

fn irreducible_by_trial_division(ring: &PolyRing<'_>, m: &Poly) -> bool {
    let k = match m.degree() {
        Some(k) if k >= 1 => k,
        _ => return false,
    };
    (1..=k / 2).all(|d| monic_of_degree(ring, d).all(|cand| !ring.rem(m, &cand).expect("monic divisor").is_zero()))
}

fn smallest_irreducible_by_trial_division(ring: &PolyRing<'_>, k: usize) -> Poly {
    monic_of_degree(ring, k)
        .find(|m| irreducible_by_trial_division(ring, m))
        .expect("irreducible polynomials exist in every degree")
}

/// 𝔽_{q^n} = 𝔽_q[x]/(M(x)) together with the data derived from n:
/// `e = v_p(n)`, `τ = p^e` and `n₀ = n/τ`.
#[derive(Clone)]
pub struct ExtCtx {
    inner: Arc<ExtInner>,
}

struct ExtInner {
    base: FieldCtx,
    n: usize,
    modulus: Poly,
    e: u32,
    tau: u64,
    n0: u64,
    /// frob[i] = coordinates of x^(i q) mod M, so that (Σ a_i x^i)^q = Σ a_i frob[i]
    frob: Vec<Vec<Fq>>,
    id: CtxId,
}

impl fmt::Debug for ExtCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtCtx")
            .field("q", &self.base().q())
            .field("n", &self.n())
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

/// An element of 𝔽_{q^n}: coefficients over 𝔽_q of `1, x, …, x^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    coeffs: Vec<Fq>,
    ctx: CtxId,
}

impl FieldElem {
    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn ctx(&self) -> CtxId {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl ExtCtx {
    /// Degree-`n` extension of `base`. Without a modulus the lexicographically
    /// smallest monic irreducible of degree n is selected.
    pub fn new(base: &FieldCtx, n: usize, modulus: Option<Poly>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("extension degree must be at least 1".into()));
        }
        let ring = base.poly_ring();
        let modulus = match modulus {
            Some(m) => {
                if m.degree() != Some(n) || !m.is_monic() || !ring.is_irreducible(&m) {
                    return Err(Error::NotIrreducible { degree: n });
                }
                m
            }
            None => ring.smallest_irreducible(n),
        };
        let p = base.p();
        let e = nt::valuation(n as u64, p);
        let tau = p.pow(e);
        let q = BigUint::from(base.q());
        let xq = ring.pow_mod(&ring.x(), &q, &modulus);
        let mut frob = Vec::with_capacity(n);
        let mut cur = ring.rem(&ring.one(), &modulus).expect("nonzero modulus");
        for _ in 0..n {
            frob.push(cur.padded(n));
            cur = ring.mul_mod(&cur, &xq, &modulus);
        }
        let mut h = DefaultHasher::new();
        ("Fqn", base.id(), n, &modulus).hash(&mut h);
        Ok(ExtCtx {
            inner: Arc::new(ExtInner {
                base: base.clone(),
                n,
                modulus,
                e,
                tau,
                n0: n as u64 / tau,
                frob,
                id: CtxId(h.finish()),
            }),
        })
    }

    pub fn base(&self) -> &FieldCtx {
        &self.inner.base
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn modulus(&self) -> &Poly {
        &self.inner.modulus
    }

    /// `v_p(n)`.
    pub fn e(&self) -> u32 {
        self.inner.e
    }

    /// `τ = p^{v_p(n)}`.
    pub fn tau(&self) -> u64 {
        self.inner.tau
    }

    /// `n₀ = n / τ`.
    pub fn n0(&self) -> u64 {
        self.inner.n0
    }

    pub fn id(&self) -> CtxId {
        self.inner.id
    }

    /// `q^n` when it fits in a `u64`.
    pub fn order(&self) -> Option<u64> {
        nt::checked_pow(self.base().q(), self.n() as u64)
    }

    fn wrap(&self, coeffs: Vec<Fq>) -> FieldElem {
        debug_assert_eq!(coeffs.len(), self.n());
        FieldElem {
            coeffs,
            ctx: self.inner.id,
        }
    }

    fn check(&self, a: &FieldElem) -> Result<()> {
        if a.ctx == self.inner.id {
            Ok(())
        } else {
            Err(Error::CtxMismatch)
        }
    }

    fn expect_own(&self, a: &FieldElem) {
        assert_eq!(a.ctx, self.inner.id, "element from a different field context");
    }

    /// Element with the given 𝔽_q coordinates (padded or rejected by length).
    pub fn from_coeffs(&self, mut coeffs: Vec<Fq>) -> Result<FieldElem> {
        if coeffs.len() > self.n() {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients for a degree-{} extension",
                coeffs.len(),
                self.n()
            )));
        }
        if coeffs.iter().any(|c| c.index() as u64 >= self.base().q()) {
            return Err(Error::InvalidArgument("coefficient outside the base field".into()));
        }
        coeffs.resize(self.n(), Fq::ZERO);
        Ok(self.wrap(coeffs))
    }

    /// Element represented by `g(x) mod M(x)`.
    pub fn from_poly(&self, g: &Poly) -> FieldElem {
        let r = self.base().poly_ring().rem(g, self.modulus()).expect("nonzero modulus");
        self.wrap(r.padded(self.n()))
    }

    pub fn to_poly(&self, a: &FieldElem) -> Poly {
        Poly::new(a.coeffs.clone())
    }

    pub fn zero(&self) -> FieldElem {
        self.wrap(vec![Fq::ZERO; self.n()])
    }

    pub fn one(&self) -> FieldElem {
        self.from_base(Fq::ONE)
    }

    /// The residue class of x, a generator of 𝔽_{q^n} over 𝔽_q.
    pub fn generator(&self) -> FieldElem {
        self.from_poly(&self.base().poly_ring().x())
    }

    pub fn from_base(&self, c: Fq) -> FieldElem {
        let mut v = vec![Fq::ZERO; self.n()];
        v[0] = c;
        self.wrap(v)
    }

    /// Element at canonical position `index` (base-q digits, low coefficient least significant).
    pub fn element(&self, mut index: u64) -> FieldElem {
        let q = self.base().q();
        let v = (0..self.n())
            .map(|_| {
                let d = (index % q) as u32;
                index /= q;
                self.base().element(d)
            })
            .collect();
        self.wrap(v)
    }

    pub fn index_of(&self, a: &FieldElem) -> u64 {
        let q = self.base().q();
        a.coeffs.iter().rev().fold(0u64, |acc, c| acc * q + c.index() as u64)
    }

    /// All elements in canonical order.
    ///
    /// # Panics
    /// When `q^n` does not fit in a `u64`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let order = self.order().expect("field order fits in u64");
        (0..order).map(move |i| self.element(i))
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub(crate) fn add_unchecked(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let f = self.base();
        self.wrap(a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.add(x, y)).collect())
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub_unchecked(a, b))
    }

    pub(crate) fn sub_unchecked(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let f = self.base();
        self.wrap(a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        let f = self.base();
        Ok(self.wrap(a.coeffs.iter().map(|&x| f.neg(x)).collect()))
    }

    /// `c · a` for `c ∈ 𝔽_q`.
    pub fn scale(&self, c: Fq, a: &FieldElem) -> FieldElem {
        self.expect_own(a);
        let f = self.base();
        self.wrap(a.coeffs.iter().map(|&x| f.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    fn mul_unchecked(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let ring = self.base().poly_ring();
        let prod = ring.mul_mod(&self.to_poly(a), &self.to_poly(b), self.modulus());
        self.wrap(prod.padded(self.n()))
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = self.base().poly_ring();
        let inv = ring.inv_mod(&self.to_poly(a), self.modulus())?;
        Ok(self.wrap(inv.padded(self.n())))
    }

    pub fn pow(&self, a: &FieldElem, exp: &BigUint) -> Result<FieldElem> {
        self.check(a)?;
        let ring = self.base().poly_ring();
        let r = ring.pow_mod(&self.to_poly(a), exp, self.modulus());
        Ok(self.wrap(r.padded(self.n())))
    }

    /// `a^q`, applied as the 𝔽_q-linear map `x^i ↦ x^{iq}`.
    ///
    /// # Panics
    /// When `a` belongs to another context.
    pub fn frobenius(&self, a: &FieldElem) -> FieldElem {
        self.expect_own(a);
        let f = self.base();
        let n = self.n();
        let mut out = vec![Fq::ZERO; n];
        for (ai, col) in a.coeffs.iter().zip(&self.inner.frob) {
            if ai.is_zero() {
                continue;
            }
            for (o, &c) in out.iter_mut().zip(col) {
                *o = f.add(*o, f.mul(*ai, c));
            }
        }
        self.wrap(out)
    }

    /// `a^{q^i}`.
    pub fn frobenius_pow(&self, a: &FieldElem, i: usize) -> FieldElem {
        let mut cur = a.clone();
        for _ in 0..i % self.n() {
            cur = self.frobenius(&cur);
        }
        cur
    }

    /// `a, a^q, …, a^{q^{n-1}}`.
    pub fn conjugates(&self, a: &FieldElem) -> Vec<FieldElem> {
        let mut out = Vec::with_capacity(self.n());
        let mut cur = a.clone();
        for _ in 0..self.n() {
            let next = self.frobenius(&cur);
            out.push(cur);
            cur = next;
        }
        out
    }

    /// Relative trace `Σ_{i<n} a^{q^i}`, an element of 𝔽_q.
    pub fn trace_to_base(&self, a: &FieldElem) -> Fq {
        let sum = self
            .conjugates(a)
            .iter()
            .fold(self.zero(), |acc, c| self.add_unchecked(&acc, c));
        debug_assert!(sum.coeffs[1..].iter().all(|c| c.is_zero()));
        sum.coeffs[0]
    }

    /// Returns the 𝔽_q value of an element lying in the base field.
    pub fn as_base(&self, a: &FieldElem) -> Option<Fq> {
        a.coeffs[1..].iter().all(|c| c.is_zero()).then(|| a.coeffs[0])
    }

    pub fn format(&self, a: &FieldElem) -> String {
        self.base().poly_ring().format(&self.to_poly(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ext(q: u64, n: usize) -> ExtCtx {
        ExtCtx::new(&FieldCtx::with_order(q).unwrap(), n, None).unwrap()
    }

    #[test]
    fn prime_fields() {
        let f7 = FieldCtx::prime(7).unwrap();
        assert_eq!((f7.p(), f7.k(), f7.q()), (7, 1, 7));
        assert!(f7.modulus().is_none());
        assert_eq!(FieldCtx::prime(4).unwrap_err(), Error::NonPrime(4));
        assert_eq!(FieldCtx::prime(13).unwrap().q(), 13);
        assert_eq!(f7.inv(f7.from_int(2)).unwrap(), f7.from_int(4));
        assert_eq!(f7.inv(Fq::ZERO).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn small_extension_of_prime_field() {
        let f4 = FieldCtx::with_order(4).unwrap();
        assert_eq!(f4.modulus(), Some(&[1, 1, 1][..]));
        assert_eq!(
            FieldCtx::new(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            Error::NotIrreducible { degree: 2 }
        );
        for a in f4.elements().skip(1) {
            assert_eq!(f4.mul(a, f4.inv(a).unwrap()), Fq::ONE);
        }
        // a^2 = a + 1
        let a = f4.element(2);
        assert_eq!(f4.mul(a, a), f4.element(3));
        assert_eq!(f4.format(f4.element(3)), "a+1");
    }

    #[test]
    fn ext_modulus_selection() {
        let f2 = FieldCtx::prime(2).unwrap();
        let e = ExtCtx::new(&f2, 2, None).unwrap();
        assert_eq!(e.modulus(), &f2.poly_ring().from_ints(&[1, 1, 1]));
        let bad = f2.poly_ring().from_ints(&[1, 0, 1]);
        assert_eq!(
            ExtCtx::new(&f2, 2, Some(bad)).unwrap_err(),
            Error::NotIrreducible { degree: 2 }
        );
        let f3 = FieldCtx::prime(3).unwrap();
        let e = ExtCtx::new(&f3, 3, None).unwrap();
        let r = f3.poly_ring();
        assert_eq!(e.modulus().degree(), Some(3));
        assert!(f3.elements().all(|a| !r.eval(e.modulus(), a).is_zero()));
    }

    #[test]
    fn inverses_in_f16() {
        let e = ext(2, 4);
        let one = e.one();
        let mut count = 0;
        for a in e.elements().filter(|a| !a.is_zero()) {
            assert_eq!(e.mul(&a, &e.inv(&a).unwrap()).unwrap(), one);
            count += 1;
        }
        assert_eq!(count, 15);
        assert_eq!(e.inv(&e.zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn mixed_contexts_are_rejected() {
        let a = ext(2, 3);
        let b = ext(3, 2);
        assert_eq!(a.add(&a.one(), &b.one()).unwrap_err(), Error::CtxMismatch);
        assert_eq!(a.mul(&b.one(), &a.one()).unwrap_err(), Error::CtxMismatch);
    }

    #[test]
    fn frobenius_in_f8_squares() {
        let f2 = FieldCtx::prime(2).unwrap();
        let m = f2.poly_ring().from_ints(&[1, 1, 0, 1]);
        let e = ExtCtx::new(&f2, 3, Some(m)).unwrap();
        let theta = e.generator();
        assert_eq!(e.frobenius(&theta), e.mul(&theta, &theta).unwrap());
    }

    #[test]
    fn frobenius_fixes_base_and_has_order_n() {
        let e = ext(3, 4);
        for c in e.base().elements() {
            let a = e.from_base(c);
            assert_eq!(e.frobenius(&a), a);
        }
        for i in (0..81).map(|i| i * 997 % 81) {
            let a = e.element(i);
            assert_eq!(e.frobenius_pow(&a, 4), a);
            let q = BigUint::from(3u32);
            assert_eq!(e.pow(&a, &q).unwrap(), e.frobenius(&a));
        }
    }

    #[test]
    fn trace_examples() {
        let e = ext(2, 3);
        let images: std::collections::BTreeSet<_> = e.elements().map(|a| e.trace_to_base(&a)).collect();
        assert_eq!(images.len(), 2);
        let e = ext(5, 3);
        assert_eq!(e.trace_to_base(&e.one()), e.base().from_int(3));
        let e = ext(3, 3);
        assert_eq!(e.trace_to_base(&e.one()), Fq::ZERO);
    }

    #[test]
    fn element_indexing_round_trips() {
        let e = ext(4, 3);
        for i in 0..64 {
            assert_eq!(e.index_of(&e.element(i)), i);
        }
    }
}
