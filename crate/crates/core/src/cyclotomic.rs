//! Primary factorization `x^n - 1 = (f_1 ⋯ f_r)^τ` over 𝔽_q via q-cyclotomic cosets.

use num_bigint::BigUint;
use serde::Serialize;

use crate::field::{ExtCtx, FieldCtx, FieldElem, Fq};
use crate::nt;
use crate::poly::{big_pow, Poly, PolyRing};

/// One irreducible factor `f_i = Π_{j ∈ coset} (x - θ^j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclotomicFactor {
    #[serde(skip)]
    pub poly: Poly,
    /// Sorted exponents `j mod n₀` of the coset.
    pub coset: Vec<u64>,
    pub degree: usize,
    /// Multiplicative order of the roots, `n₀ / gcd(j, n₀)`.
    pub root_order: u64,
}

#[derive(Clone, Debug)]
pub struct CyclotomicFactorization {
    field: FieldCtx,
    pub n: u64,
    pub tau: u64,
    pub n0: u64,
    /// Ordered by smallest coset representative, so `x - 1` comes first.
    pub factors: Vec<CyclotomicFactor>,
}

impl CyclotomicFactorization {
    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn r(&self) -> usize {
        self.factors.len()
    }

    /// `f_i^τ` for every factor.
    pub fn primary_parts(&self) -> Vec<Poly> {
        let ring = self.field.poly_ring();
        self.factors.iter().map(|f| ring.pow(&f.poly, self.tau)).collect()
    }

    /// `x^n - 1` rebuilt from the factors.
    pub fn product(&self) -> Poly {
        let ring = self.field.poly_ring();
        self.primary_parts().iter().fold(ring.one(), |acc, f| ring.mul(&acc, f))
    }
}

/// A primitive `n₀`-th root of unity in 𝔽_{q^d}, `d = ord_{n₀}(q)`.
///
/// Tries `x^((q^d - 1)/n₀)` in 𝔽_q[x]/(m) first and otherwise takes the first
/// element, in canonical order, of exact multiplicative order n₀.
fn primitive_root_of_unity(ext: &ExtCtx, n0: u64) -> FieldElem {
    let qd = big_pow(ext.base().q(), ext.n() as u64);
    let cofactor = (&qd - 1u32) / n0;
    let primes = nt::prime_factors(n0);
    let has_exact_order = |t: &FieldElem| {
        ext.pow(t, &BigUint::from(n0)).unwrap() == ext.one()
            && primes
                .iter()
                .all(|&l| ext.pow(t, &BigUint::from(n0 / l)).unwrap() != ext.one())
    };
    let candidate = ext.pow(&ext.generator(), &cofactor).unwrap();
    if has_exact_order(&candidate) {
        return candidate;
    }
    let order = ext.order().expect("splitting field order fits in u64");
    (1..order)
        .map(|i| ext.element(i))
        .find(|t| has_exact_order(t))
        .expect("the multiplicative group of the splitting field is cyclic of order divisible by n0")
}

/// Factors `x^n - 1` over `field`.
///
/// # Panics
/// When `n = 0`.
pub fn factor_xn_minus_1(field: &FieldCtx, n: u64) -> CyclotomicFactorization {
    assert!(n >= 1, "x^0 - 1 is the zero polynomial");
    let p = field.p();
    let q = field.q();
    let tau = p.pow(nt::valuation(n, p));
    let n0 = n / tau;
    let d = nt::multiplicative_order(q % n0, n0).expect("gcd(q, n0) = 1") as usize;
    let split = ExtCtx::new(field, d, None).expect("degree is positive");
    let theta = primitive_root_of_unity(&split, n0);

    let mut seen = vec![false; n0 as usize];
    let mut factors = Vec::new();
    for j0 in 0..n0 {
        if seen[j0 as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut j = j0;
        while !seen[j as usize] {
            seen[j as usize] = true;
            coset.push(j);
            j = ((j as u128 * q as u128) % n0 as u128) as u64;
        }
        coset.sort_unstable();
        // Π (x - θ^j), with coefficients in 𝔽_{q^d} stored as polys in 𝔽_q[y]/(m)
        let mut prod: Vec<FieldElem> = vec![split.one()];
        for &j in &coset {
            let root = split.pow(&theta, &BigUint::from(j)).unwrap();
            let mut next = vec![split.zero(); prod.len() + 1];
            for (i, c) in prod.iter().enumerate() {
                next[i + 1] = split.add(&next[i + 1], c).unwrap();
                let t = split.mul(c, &root).unwrap();
                next[i] = split.sub(&next[i], &t).unwrap();
            }
            prod = next;
        }
        let coeffs: Vec<Fq> = prod
            .iter()
            .map(|c| {
                split
                    .as_base(c)
                    .expect("coset products have coefficients in the base field")
            })
            .collect();
        factors.push(CyclotomicFactor {
            poly: Poly::new(coeffs),
            degree: coset.len(),
            root_order: n0 / nt::gcd(j0, n0),
            coset,
        });
    }
    CyclotomicFactorization {
        field: field.clone(),
        n,
        tau,
        n0,
        factors,
    }
}

/// Euler's totient over 𝔽_q: the number of residues mod `x^n - 1` coprime to it,
/// `Π_i (q^{d_i τ} - q^{d_i (τ-1)})`.
pub fn euler_phi_q(fact: &CyclotomicFactorization) -> BigUint {
    let q = fact.q();
    fact.factors
        .iter()
        .map(|f| {
            let d = f.degree as u64;
            big_pow(q, d * fact.tau) - big_pow(q, d * (fact.tau - 1))
        })
        .product()
}

/// `g mod f_i`, i.e. `g(θ_i)` in 𝔽_q[x]/(f_i) with θ_i the class of x.
pub fn eval_mod_factor(ring: &PolyRing<'_>, g: &Poly, f_i: &Poly) -> Poly {
    ring.rem(g, f_i).expect("factor is nonzero")
}
