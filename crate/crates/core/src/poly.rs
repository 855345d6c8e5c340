//! Dense univariate polynomials over 𝔽_q.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, Fq};
use crate::nt;

/// Dense polynomial, `coeffs[i]` is the coefficient of `x^i`.
///
/// Always normalized: the top coefficient is nonzero and the zero polynomial
/// has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Fq>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Fq>) -> Self {
        trim(&mut coeffs);
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fq> {
        self.coeffs
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.coeffs.get(i).copied().unwrap_or(Fq::ZERO)
    }

    pub fn leading(&self) -> Option<Fq> {
        self.coeffs.last().copied()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Fq::ONE
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Fq::ONE)
    }

    /// Coefficients padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<Fq> {
        let mut v = self.coeffs.clone();
        v.resize(len.max(v.len()), Fq::ZERO);
        v
    }
}

fn trim(v: &mut Vec<Fq>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Arithmetic on [`Poly`] with coefficients in a fixed field.
#[derive(Clone, Copy)]
pub struct PolyRing<'a> {
    field: &'a FieldCtx,
}

impl<'a> PolyRing<'a> {
    pub fn new(field: &'a FieldCtx) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &'a FieldCtx {
        self.field
    }

    pub fn one(&self) -> Poly {
        Poly::new(vec![Fq::ONE])
    }

    pub fn constant(&self, c: Fq) -> Poly {
        Poly::new(vec![c])
    }

    pub fn x(&self) -> Poly {
        self.monomial(Fq::ONE, 1)
    }

    pub fn monomial(&self, c: Fq, deg: usize) -> Poly {
        let mut v = vec![Fq::ZERO; deg + 1];
        v[deg] = c;
        Poly::new(v)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(&self, n: usize) -> Poly {
        let mut v = vec![Fq::ZERO; n + 1];
        v[n] = Fq::ONE;
        v[0] = self.field.sub(v[0], Fq::ONE);
        Poly::new(v)
    }

    /// Builds a polynomial from integer coefficients reduced into the prime subfield.
    pub fn from_ints(&self, coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| self.field.from_int(c)).collect())
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let f = self.field;
        let len = a.coeffs.len().max(b.coeffs.len());
        Poly::new((0..len).map(|i| f.add(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let f = self.field;
        let len = a.coeffs.len().max(b.coeffs.len());
        Poly::new((0..len).map(|i| f.sub(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        Poly::new(a.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }

    pub fn scale(&self, c: Fq, a: &Poly) -> Poly {
        Poly::new(a.coeffs.iter().map(|&x| self.field.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let f = self.field;
        let mut out = vec![Fq::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, a: &Poly, mut e: u64) -> Poly {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn divmod(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        let lead = b.leading().ok_or(Error::DivisionByZero)?;
        let f = self.field;
        let inv_lead = f.inv(lead)?;
        let db = b.coeffs.len() - 1;
        let mut r = a.coeffs.clone();
        if r.len() <= db {
            return Ok((Poly::zero(), Poly::new(r)));
        }
        let mut quot = vec![Fq::ZERO; r.len() - db];
        for i in (db..r.len()).rev() {
            let c = f.mul(r[i], inv_lead);
            if c.is_zero() {
                continue;
            }
            quot[i - db] = c;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                let k = i - db + j;
                r[k] = f.sub(r[k], f.mul(c, bj));
            }
        }
        r.truncate(db);
        Ok((Poly::new(quot), Poly::new(r)))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = a.coeffs.clone();
        self.rem_in_place(&mut r, &b.coeffs)?;
        Ok(Poly::new(r))
    }

    /// Reduces `r` modulo the nonzero normalized `m` in place; `r` ends up trimmed.
    fn rem_in_place(&self, r: &mut Vec<Fq>, m: &[Fq]) -> Result<()> {
        let f = self.field;
        let lead = *m.last().ok_or(Error::DivisionByZero)?;
        let dm = m.len() - 1;
        let inv_lead = if lead == Fq::ONE { Fq::ONE } else { f.inv(lead)? };
        trim(r);
        while r.len() > dm {
            let top = r.len() - 1;
            let c = f.mul(r[top], inv_lead);
            let shift = top - dm;
            for (j, &mj) in m.iter().enumerate() {
                r[shift + j] = f.sub(r[shift + j], f.mul(c, mj));
            }
            trim(r);
        }
        Ok(())
    }

    pub fn monic(&self, a: &Poly) -> Poly {
        match a.leading() {
            None => Poly::zero(),
            Some(l) if l == Fq::ONE => a.clone(),
            Some(l) => {
                let inv = self.field.inv(l).expect("nonzero leading coefficient");
                self.scale(inv, a)
            }
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let mut x = a.coeffs.clone();
        let mut y = b.coeffs.clone();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            self.rem_in_place(&mut x, &y).expect("nonzero divisor");
            std::mem::swap(&mut x, &mut y);
        }
        self.monic(&Poly::new(x))
    }

    /// `gcd(a, b) == 1` without normalizing intermediate remainders.
    pub fn is_coprime(&self, a: &Poly, b: &Poly) -> bool {
        let mut x = a.coeffs.clone();
        let mut y = b.coeffs.clone();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            self.rem_in_place(&mut x, &y).expect("nonzero divisor");
            std::mem::swap(&mut x, &mut y);
        }
        x.len() == 1
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g` and `g` monic (or zero).
    pub fn ext_gcd(&self, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divmod(&r0, &r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = self.field.inv(l).expect("nonzero leading coefficient");
                (self.scale(inv, &r0), self.scale(inv, &s0), self.scale(inv, &t0))
            }
        }
    }

    /// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
    pub fn inv_mod(&self, a: &Poly, m: &Poly) -> Result<Poly> {
        let (g, s, _) = self.ext_gcd(a, m);
        if !g.is_one() {
            return Err(Error::DivisionByZero);
        }
        self.rem(&s, m)
    }

    pub fn mul_mod(&self, a: &Poly, b: &Poly, m: &Poly) -> Poly {
        self.rem(&self.mul(a, b), m).expect("nonzero modulus")
    }

    pub fn pow_mod(&self, a: &Poly, exp: &BigUint, m: &Poly) -> Poly {
        let mut acc = self.rem(&self.one(), m).expect("nonzero modulus");
        let base = self.rem(a, m).expect("nonzero modulus");
        for i in (0..exp.bits()).rev() {
            acc = self.mul_mod(&acc, &acc, m);
            if exp.bit(i) {
                acc = self.mul_mod(&acc, &base, m);
            }
        }
        acc
    }

    pub fn eval(&self, a: &Poly, x: Fq) -> Fq {
        let f = self.field;
        a.coeffs.iter().rev().fold(Fq::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Rabin's irreducibility test for a polynomial of positive degree.
    pub fn is_irreducible(&self, m: &Poly) -> bool {
        let d = match m.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(d) => d,
        };
        if m.coeff(0).is_zero() {
            return false;
        }
        let q = BigUint::from(self.field.q());
        let x = self.x();
        // frob[i] = x^(q^i) mod m
        let mut frob = Vec::with_capacity(d + 1);
        frob.push(self.rem(&x, m).expect("nonzero modulus"));
        for i in 1..=d {
            let next = self.pow_mod(&frob[i - 1], &q, m);
            frob.push(next);
        }
        if frob[d] != frob[0] {
            return false;
        }
        for l in nt::prime_factors(d as u64) {
            let h = self.sub(&frob[d / l as usize], &x);
            if !self.gcd(&h, m).is_one() {
                return false;
            }
        }
        true
    }

    /// Lexicographically smallest monic irreducible of degree `d`, comparing the
    /// non-leading coefficients as a base-q integer with the constant term least
    /// significant.
    pub fn smallest_irreducible(&self, d: usize) -> Poly {
        assert!(d >= 1);
        let q = self.field.q();
        let mut digits = vec![0u32; d];
        loop {
            let mut coeffs: Vec<Fq> = digits.iter().map(|&i| self.field.element(i)).collect();
            coeffs.push(Fq::ONE);
            let cand = Poly::new(coeffs);
            if self.is_irreducible(&cand) {
                return cand;
            }
            // odometer increment; an irreducible always exists so this terminates
            let mut i = 0;
            loop {
                digits[i] += 1;
                if u64::from(digits[i]) < q {
                    break;
                }
                digits[i] = 0;
                i += 1;
                assert!(i < d, "no irreducible polynomial of degree {d}");
            }
        }
    }

    /// Human-readable form such as `x^2 + 6x + 1`.
    pub fn format(&self, a: &Poly) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in a.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = self.field.format(c);
            let compound = cs.contains('+');
            let coef = match (i, c == Fq::ONE) {
                (0, _) => cs,
                (_, true) => String::new(),
                _ if compound => format!("({cs})"),
                _ => cs,
            };
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            terms.push(format!("{coef}{mono}"));
        }
        terms.join(" + ")
    }
}

/// `q^e` as an exact integer.
pub(crate) fn big_pow(q: u64, e: u64) -> BigUint {
    let mut acc = BigUint::one();
    let base = BigUint::from(q);
    for _ in 0..e {
        acc *= &base;
    }
    acc
}
