//! 𝔽_{q^n} as a module over 𝔽_q[x], with x acting as the Frobenius map.
//!
//! For a normal element α the map φ_α: g ↦ g∘α identifies 𝔽_q[x]/(xⁿ − 1)
//! with 𝔽_{q^n}; under it β^q corresponds to x·g. The primary decomposition
//! splits 𝔽_{q^n} into the components V_i = ker(f_i^τ), one per irreducible
//! factor f_i of xⁿ − 1.

use crate::cyclotomic::{factor_xn_minus_1, CyclotomicFactorization};
use crate::error::{Error, Result};
use crate::field::{ExtCtx, FieldElem, Fq};
use crate::linalg::{DependencyFinder, Matrix};
use crate::poly::Poly;

/// `f ∘ β = Σ a_i β^{q^i}`.
pub fn circle_action(ext: &ExtCtx, f: &Poly, beta: &FieldElem) -> FieldElem {
    let mut acc = ext.zero();
    let mut conj = beta.clone();
    for (i, &a) in f.coeffs().iter().enumerate() {
        if i > 0 {
            conj = ext.frobenius(&conj);
        }
        if !a.is_zero() {
            acc = ext.add_unchecked(&acc, &ext.scale(a, &conj));
        }
    }
    acc
}

/// Minimal-degree monic `f` with `f ∘ β = 0`, found as the first linear
/// dependency among `β, β^q, β^{q^2}, …`. The zero element gets the constant 1.
pub fn annihilator(ext: &ExtCtx, beta: &FieldElem) -> Poly {
    let field = ext.base();
    let mut finder = DependencyFinder::new(field);
    let mut conj = beta.clone();
    for m in 0..=ext.n() {
        if let Some(comb) = finder.push(conj.coeffs()) {
            // β^{q^m} = Σ c_i β^{q^i}  =>  x^m - Σ c_i x^i
            let mut coeffs: Vec<Fq> = comb.iter().map(|&c| field.neg(c)).collect();
            coeffs.push(Fq::ONE);
            debug_assert_eq!(coeffs.len(), m + 1);
            return Poly::new(coeffs);
        }
        conj = ext.frobenius(&conj);
    }
    unreachable!("n + 1 vectors in an n-dimensional space are dependent")
}

/// Rank test: the n conjugates of β are linearly independent over 𝔽_q.
pub fn is_normal(ext: &ExtCtx, beta: &FieldElem) -> bool {
    let columns: Vec<Vec<Fq>> = ext.conjugates(beta).into_iter().map(|c| c.coeffs().to_vec()).collect();
    let normal = Matrix::from_columns(&columns).rank(ext.base()) == ext.n();
    debug_assert_eq!(
        normal,
        annihilator(ext, beta) == ext.base().poly_ring().x_pow_minus_one(ext.n())
    );
    normal
}

/// Which trace the normal element α is scaled to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TraceNormalization {
    /// `Tr(α) = n/τ = n₀ mod p`; makes `φ_α⁻¹(1) = (τ/n)(xⁿ − 1)/(x − 1)`.
    NOverTau,
    /// `Tr(α) = τ/n = n₀⁻¹ mod p`.
    TauOverN,
}

impl TraceNormalization {
    pub fn target(self, ext: &ExtCtx) -> Fq {
        let f = ext.base();
        let n0 = f.from_int((ext.n0() % f.p()) as i64);
        match self {
            TraceNormalization::NOverTau => n0,
            TraceNormalization::TauOverN => f.inv(n0).expect("n0 is prime to p"),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TraceNormalization::NOverTau => "Tr(alpha) = n/tau",
            TraceNormalization::TauOverN => "Tr(alpha) = tau/n",
        }
    }
}

/// A normal element α with the matrices of φ_α and φ_α⁻¹.
#[derive(Clone, Debug)]
pub struct NormalBasisMap {
    ext: ExtCtx,
    alpha: FieldElem,
    /// column i = coordinates of α^{q^i}
    basis: Matrix,
    inverse: Matrix,
    xn_minus_1: Poly,
}

impl NormalBasisMap {
    /// Builds the map for a given normal α, as is.
    pub fn from_alpha(ext: &ExtCtx, alpha: FieldElem) -> Result<Self> {
        if alpha.ctx() != ext.id() {
            return Err(Error::CtxMismatch);
        }
        let columns: Vec<Vec<Fq>> = ext
            .conjugates(&alpha)
            .into_iter()
            .map(|c| c.coeffs().to_vec())
            .collect();
        let basis = Matrix::from_columns(&columns);
        let inverse = basis
            .inverse(ext.base())
            .ok_or_else(|| Error::NotNormal(ext.format(&alpha)))?;
        Ok(NormalBasisMap {
            ext: ext.clone(),
            alpha,
            basis,
            inverse,
            xn_minus_1: ext.base().poly_ring().x_pow_minus_one(ext.n()),
        })
    }

    /// Rescales the normal element `seed` by an 𝔽_q constant so its trace hits
    /// the normalization target.
    pub fn normalized(ext: &ExtCtx, seed: &FieldElem, normalization: TraceNormalization) -> Result<Self> {
        let f = ext.base();
        let tr = ext.trace_to_base(seed);
        if tr.is_zero() {
            // a normal element never has trace zero
            return Err(Error::NotNormal(ext.format(seed)));
        }
        let scale = f.div(normalization.target(ext), tr)?;
        Self::from_alpha(ext, ext.scale(scale, seed))
    }

    /// First normal element at or after canonical index `start` (wrapping),
    /// trace-normalized.
    pub fn search_from(ext: &ExtCtx, start: u64, normalization: TraceNormalization) -> Result<Self> {
        let order = ext.order().ok_or_else(|| Error::CapExceeded {
            size: format!("{}^{}", ext.base().q(), ext.n()),
            cap: u64::MAX,
        })?;
        let start = start % order;
        let seed = (start..order)
            .chain(0..start)
            .map(|i| ext.element(i))
            .find(|b| is_normal(ext, b))
            .expect("normal elements exist in every finite extension");
        Self::normalized(ext, &seed, normalization)
    }

    pub fn ext(&self) -> &ExtCtx {
        &self.ext
    }

    pub fn alpha(&self) -> &FieldElem {
        &self.alpha
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn inverse_matrix(&self) -> &Matrix {
        &self.inverse
    }

    /// `xⁿ − 1`.
    pub fn modulus(&self) -> &Poly {
        &self.xn_minus_1
    }

    /// `φ_α(g) = g ∘ α`, after reducing g modulo `xⁿ − 1`.
    pub fn phi(&self, g: &Poly) -> FieldElem {
        let ring = self.ext.base().poly_ring();
        let g = ring.rem(g, &self.xn_minus_1).expect("nonzero modulus");
        let v = self.basis.mul_vec(self.ext.base(), &g.padded(self.ext.n()));
        self.ext.from_coeffs(v).expect("length n")
    }

    /// `φ_α⁻¹(β)` as a polynomial of degree < n.
    pub fn phi_inverse(&self, beta: &FieldElem) -> Poly {
        Poly::new(self.phi_inverse_coeffs(beta.coeffs()))
    }

    /// Coordinates of β in the normal basis.
    pub fn phi_inverse_coeffs(&self, beta: &[Fq]) -> Vec<Fq> {
        self.inverse.mul_vec(self.ext.base(), beta)
    }

    /// Normality through `gcd(xⁿ − 1, φ_α⁻¹(β)) = 1`.
    pub fn is_normal_gcd(&self, beta: &FieldElem) -> bool {
        self.ext
            .base()
            .poly_ring()
            .is_coprime(&self.xn_minus_1, &self.phi_inverse(beta))
    }
}

/// First normal element in canonical order, scaled to `Tr(α) = n/τ`.
pub fn find_normal_element(ext: &ExtCtx) -> NormalBasisMap {
    NormalBasisMap::search_from(ext, 0, TraceNormalization::NOverTau)
        .expect("canonical search succeeds for enumerable fields")
}

/// CRT idempotents `e_i ≡ 1 (mod f_i^τ)`, `e_i ≡ 0 (mod f_j^τ)` for `j ≠ i`.
#[derive(Clone, Debug)]
pub struct PrimaryDecomposition {
    parts: Vec<Poly>,
    idempotents: Vec<Poly>,
    modulus: Poly,
}

impl PrimaryDecomposition {
    pub fn new(fact: &CyclotomicFactorization) -> Self {
        let ring = fact.field().poly_ring();
        let modulus = ring.x_pow_minus_one(fact.n as usize);
        let parts = fact.primary_parts();
        let idempotents = parts
            .iter()
            .map(|part| {
                let (cofactor, r) = ring.divmod(&modulus, part).expect("nonzero part");
                debug_assert!(r.is_zero());
                let (g, _s, t) = ring.ext_gcd(part, &cofactor);
                debug_assert!(g.is_one());
                ring.rem(&ring.mul(&t, &cofactor), &modulus).expect("nonzero modulus")
            })
            .collect();
        PrimaryDecomposition {
            parts,
            idempotents,
            modulus,
        }
    }

    pub fn idempotents(&self) -> &[Poly] {
        &self.idempotents
    }

    /// `f_i^τ` in factor order.
    pub fn parts(&self) -> &[Poly] {
        &self.parts
    }

    /// Residue picture `(g mod f_1^τ, …, g mod f_r^τ)`.
    pub fn residues(&self, ext: &ExtCtx, g: &Poly) -> Vec<Poly> {
        let ring = ext.base().poly_ring();
        self.parts
            .iter()
            .map(|part| ring.rem(g, part).expect("nonzero part"))
            .collect()
    }

    /// Components `β_i = e_i ∘ β ∈ V_i`.
    pub fn components(&self, ext: &ExtCtx, beta: &FieldElem) -> Vec<FieldElem> {
        self.idempotents.iter().map(|e| circle_action(ext, e, beta)).collect()
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }
}

/// Independently evaluated characterizations of "β is normal".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalEquivalences {
    /// conjugates of β have full rank
    pub rank: bool,
    /// `gcd(xⁿ − 1, g) = 1`
    pub gcd_full: bool,
    /// `gcd(f_i, g mod f_i^τ) = 1` for every i
    pub gcd_factors: bool,
    /// `ann(β_i) = f_i^τ` for every i
    pub annihilators: bool,
    /// `β_i ∈ ker(f_i^τ) \ ker(f_i^{τ−1})` for every i
    pub kernels: bool,
}

impl NormalEquivalences {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.rank,
            self.gcd_full,
            self.gcd_factors,
            self.annihilators,
            self.kernels,
        ]
    }

    pub fn agree(&self) -> bool {
        let v = self.as_array();
        v.iter().all(|&b| b == v[0])
    }
}

/// Everything needed to work with one 𝔽_{q^n}: the field, the factorization of
/// xⁿ − 1, a normal basis map and the primary decomposition.
#[derive(Clone, Debug)]
pub struct FrobeniusModule {
    pub ext: ExtCtx,
    pub fact: CyclotomicFactorization,
    pub map: NormalBasisMap,
    pub decomposition: PrimaryDecomposition,
}

impl FrobeniusModule {
    /// Uses the canonical normal element.
    pub fn new(ext: &ExtCtx) -> Self {
        Self::with_map(find_normal_element(ext))
    }

    pub fn with_map(map: NormalBasisMap) -> Self {
        let ext = map.ext().clone();
        let fact = factor_xn_minus_1(ext.base(), ext.n() as u64);
        let decomposition = PrimaryDecomposition::new(&fact);
        FrobeniusModule {
            ext,
            fact,
            map,
            decomposition,
        }
    }

    /// 𝔽_{q^n} with default moduli and canonical α.
    pub fn from_order(q: u64, n: usize) -> Result<Self> {
        let base = crate::field::FieldCtx::with_order(q)?;
        let ext = ExtCtx::new(&base, n, None)?;
        Ok(Self::new(&ext))
    }

    pub fn q(&self) -> u64 {
        self.ext.base().q()
    }

    pub fn n(&self) -> usize {
        self.ext.n()
    }

    /// Evaluates all five normality characterizations for β.
    pub fn check_normal_equivalences(&self, beta: &FieldElem) -> NormalEquivalences {
        let ext = &self.ext;
        let ring = ext.base().poly_ring();
        let g = self.map.phi_inverse(beta);
        let residues = self.decomposition.residues(ext, &g);
        let components = self.decomposition.components(ext, beta);
        let gcd_factors = self
            .fact
            .factors
            .iter()
            .zip(&residues)
            .all(|(f, gi)| ring.gcd(&f.poly, gi).is_one());
        let annihilators = components
            .iter()
            .zip(self.decomposition.parts())
            .all(|(bi, part)| &annihilator(ext, bi) == part);
        let kernels = self.fact.factors.iter().zip(&components).all(|(f, bi)| {
            let full = ring.pow(&f.poly, self.fact.tau);
            let below = ring.pow(&f.poly, self.fact.tau - 1);
            circle_action(ext, &full, bi).is_zero() && !circle_action(ext, &below, bi).is_zero()
        });
        NormalEquivalences {
            rank: is_normal(ext, beta),
            gcd_full: ring.gcd(self.map.modulus(), &g).is_one(),
            gcd_factors,
            annihilators,
            kernels,
        }
    }
}
