//! Normal α-depth: β has depth b when β − cα is normal for c = 0, …, b − 1.
//!
//! Under φ_α this is `gcd(xⁿ − 1, g − c) = 1` for `g = φ_α⁻¹(β)`, which is
//! the path used for counting. The direct path tests each β − cα by rank.

use serde::Serialize;

use crate::enumerate::{EnumOptions, Tally};
use crate::error::{Error, Result};
use crate::field::{ExtCtx, FieldCtx, FieldElem, Fq};
use crate::frobenius::{is_normal, NormalBasisMap, TraceNormalization};
use crate::poly::{Poly, PolyRing};

/// A depth parameter `1 ≤ b ≤ p` together with its shifts `0, 1, …, b − 1 ∈ 𝔽_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthQuery {
    b: u32,
    shifts: Vec<Fq>,
}

impl DepthQuery {
    pub fn new(field: &FieldCtx, b: u32) -> Result<Self> {
        if b == 0 || u64::from(b) > field.p() {
            return Err(Error::BOutOfRange { b, p: field.p() });
        }
        let shifts = (0..b).map(|c| field.from_int(i64::from(c))).collect();
        Ok(DepthQuery { b, shifts })
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn shifts(&self) -> &[Fq] {
        &self.shifts
    }
}

/// `gcd(xⁿ − 1, g − c) = 1` for every shift c.
pub(crate) fn residue_has_depth(ring: &PolyRing<'_>, xn1: &Poly, g: &Poly, query: &DepthQuery) -> bool {
    query
        .shifts()
        .iter()
        .all(|&c| ring.is_coprime(xn1, &ring.sub(g, &ring.constant(c))))
}

/// Depth test through the gcd criterion; cross-checked against the direct
/// path in debug builds.
pub fn has_alpha_depth(map: &NormalBasisMap, beta: &FieldElem, b: u32) -> Result<bool> {
    let ext = map.ext();
    if beta.ctx() != ext.id() {
        return Err(Error::CtxMismatch);
    }
    let query = DepthQuery::new(ext.base(), b)?;
    let ring = ext.base().poly_ring();
    let fast = residue_has_depth(&ring, map.modulus(), &map.phi_inverse(beta), &query);
    debug_assert_eq!(Ok(fast), has_alpha_depth_direct(map, beta, b));
    Ok(fast)
}

/// Depth test straight from the definition: rank of the conjugates of each β − cα.
pub fn has_alpha_depth_direct(map: &NormalBasisMap, beta: &FieldElem, b: u32) -> Result<bool> {
    let ext = map.ext();
    let query = DepthQuery::new(ext.base(), b)?;
    for &c in query.shifts() {
        let shifted = ext.sub(beta, &ext.scale(c, map.alpha()))?;
        if !is_normal(ext, &shifted) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest `b ≤ p` for which β has α-depth b; 0 when β is not normal.
pub fn max_alpha_depth(map: &NormalBasisMap, beta: &FieldElem) -> u32 {
    let ext = map.ext();
    let field = ext.base();
    let ring = field.poly_ring();
    let g = map.phi_inverse(beta);
    let mut depth = 0;
    for c in 0..field.p() {
        let shifted = ring.sub(&g, &ring.constant(field.from_int(c as i64)));
        if !ring.is_coprime(map.modulus(), &shifted) {
            break;
        }
        depth += 1;
    }
    depth
}

/// `Φ_b(xⁿ − 1)`: residues g of degree < n with `g − c` coprime to xⁿ − 1
/// for every `c < b`, counted exhaustively.
pub fn count_phi_b(ext: &ExtCtx, b: u32, opts: &EnumOptions) -> Result<u64> {
    let field = ext.base();
    let query = DepthQuery::new(field, b)?;
    let total = opts.check_size(field.q(), ext.n() as u64)?;
    let ring = field.poly_ring();
    let xn1 = ring.x_pow_minus_one(ext.n());
    opts.fold(total, |i, acc: &mut u64| {
        let g = Poly::new(ext.element(i).coeffs().to_vec());
        if residue_has_depth(&ring, &xn1, &g, &query) {
            *acc += 1;
        }
    })
}

/// One normal β and shift c violating the expected normality of β − c.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneDepthCounterexample {
    /// canonical index of β
    pub beta: u64,
    /// canonical index of c in 𝔽_q
    pub c: u32,
    /// canonical index of g(1) in 𝔽_q
    pub g_at_one: u32,
    pub shifted_is_normal: bool,
}

/// Outcome of checking the constant-shift behaviour of every normal β.
///
/// For `e > 0` every `β − c` (c ∈ 𝔽_q) must be normal; for `e = 0`,
/// `β − c` must be normal exactly when `g(1) ≠ c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneDepthReport {
    pub q: u64,
    pub n: usize,
    pub e: u32,
    pub normalization: &'static str,
    pub normal_elements: u64,
    pub pairs_checked: u64,
    pub failures: u64,
    /// first failures in canonical order, at most [`OneDepthReport::MAX_COUNTEREXAMPLES`]
    pub counterexamples: Vec<OneDepthCounterexample>,
}

impl OneDepthReport {
    pub const MAX_COUNTEREXAMPLES: usize = 16;

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn branch(&self) -> &'static str {
        if self.e > 0 {
            "e>0"
        } else {
            "e=0"
        }
    }
}

#[derive(Default)]
struct OneDepthTally {
    normal: u64,
    pairs: u64,
    failures: u64,
    examples: Vec<OneDepthCounterexample>,
}

impl Tally for OneDepthTally {
    fn merge(&mut self, later: Self) {
        self.normal += later.normal;
        self.pairs += later.pairs;
        self.failures += later.failures;
        self.examples.extend(later.examples);
        self.examples.truncate(OneDepthReport::MAX_COUNTEREXAMPLES);
    }
}

/// Checks the constant-shift statement for every normal β in 𝔽_{q^n}, with α
/// the canonical normal element scaled by `normalization`.
pub fn verify_one_depth_theorem(
    ext: &ExtCtx,
    normalization: TraceNormalization,
    opts: &EnumOptions,
) -> Result<OneDepthReport> {
    opts.check_size(ext.base().q(), ext.n() as u64)?;
    let map = NormalBasisMap::search_from(ext, 0, normalization)?;
    verify_one_depth_for_map(&map, normalization, opts)
}

/// Same check for a caller-chosen α, already scaled to `normalization`.
pub fn verify_one_depth_for_map(
    map: &NormalBasisMap,
    normalization: TraceNormalization,
    opts: &EnumOptions,
) -> Result<OneDepthReport> {
    let ext = map.ext();
    let field = ext.base();
    let total = opts.check_size(field.q(), ext.n() as u64)?;
    let ring = field.poly_ring();
    let e = ext.e();
    let tally = opts.fold(total, |i, acc: &mut OneDepthTally| {
        let beta = ext.element(i);
        if !is_normal(ext, &beta) {
            return;
        }
        acc.normal += 1;
        let g_at_one = ring.eval(&map.phi_inverse(&beta), Fq::ONE);
        for c in field.elements() {
            acc.pairs += 1;
            let shifted_is_normal = is_normal(ext, &ext.sub_unchecked(&beta, &ext.from_base(c)));
            let expected = e > 0 || g_at_one != c;
            if shifted_is_normal != expected {
                acc.failures += 1;
                if acc.examples.len() < OneDepthReport::MAX_COUNTEREXAMPLES {
                    acc.examples.push(OneDepthCounterexample {
                        beta: i,
                        c: c.index(),
                        g_at_one: g_at_one.index(),
                        shifted_is_normal,
                    });
                }
            }
        }
    })?;
    Ok(OneDepthReport {
        q: field.q(),
        n: ext.n(),
        e,
        normalization: normalization.label(),
        normal_elements: tally.normal,
        pairs_checked: tally.pairs,
        failures: tally.failures,
        counterexamples: tally.examples,
    })
}
