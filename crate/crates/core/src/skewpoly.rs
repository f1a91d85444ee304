//! Skew polynomials `A[x; σ]` and their quotients by two-sided ideals `Sf`.
//!
//! Polynomials are coefficient vectors, constant term first, multiplied with
//! the commutation rule `x·a = σ(a)·x`. For a monic `f` of degree `m` with
//! `Sf = fS` and unit constant term, [`SkewQuotient`] realizes `S/Sf` as a
//! [`FiniteRing`] whose additive basis is `{e_i x^j}`: the element with
//! coefficients `g_0, …, g_{m-1}` is stored as the concatenation of the
//! coefficient coordinates, which is also its coordinate vector in `A^m`.
//!
//! The form `⟨g, h⟩ = ε((gh)_0)` built from a Frobenius functional `ε` of `A`
//! is a Frobenius functional of the quotient; [`SkewQuotient::frobenius_form`]
//! builds it and re-verifies nondegeneracy.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::finring::FiniteRing;
use crate::frobenius::{FrobeniusFunctional, KernelSide};
use crate::znmod::{enumerate_module, ModElement, ZnLinearForm};

/// A ring automorphism of `A`, stored by the images of the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingAutomorphism {
    ring: FiniteRing,
    // powers[p][i] = σ^p(e_i) for 0 <= p < order
    powers: Vec<Vec<ModElement>>,
}

impl RingAutomorphism {
    pub fn new(ring: &FiniteRing, images: Vec<ModElement>) -> Result<Self> {
        let shape = ring.shape();
        if images.len() != ring.rank() {
            return Err(Error::InvalidAutomorphism(format!(
                "expected {} basis images, got {}",
                ring.rank(),
                images.len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            shape.check(img)?;
            if !shape.scale(shape.orders()[i], img).is_zero() {
                return Err(Error::InvalidAutomorphism(format!(
                    "image of basis element {i} has order not dividing {}",
                    shape.orders()[i]
                )));
            }
        }
        let apply = |table: &[ModElement], a: &ModElement| apply_table(ring, table, a);
        if &apply(&images, ring.one()) != ring.one() {
            return Err(Error::InvalidAutomorphism("does not fix 1".into()));
        }
        let basis = shape.basis_elements();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let lhs = apply(&images, &ring.mul(a, b));
                let rhs = ring.mul(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::InvalidAutomorphism(format!(
                        "not multiplicative on basis pair ({i}, {j})"
                    )));
                }
            }
        }
        let image_set: BTreeSet<ModElement> =
            enumerate_module(shape)?.map(|a| apply(&images, &a)).collect();
        if image_set.len() as u128 != ring.cardinality() {
            return Err(Error::InvalidAutomorphism("not bijective".into()));
        }
        let mut powers = vec![basis.clone()];
        let mut current = images.clone();
        while current != basis {
            let next = current.iter().map(|c| apply(&images, c)).collect();
            powers.push(std::mem::replace(&mut current, next));
        }
        Ok(RingAutomorphism { ring: ring.clone(), powers })
    }

    pub fn identity(ring: &FiniteRing) -> Self {
        RingAutomorphism { ring: ring.clone(), powers: vec![ring.shape().basis_elements()] }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    /// Basis images `σ(e_i)`.
    pub fn images(&self) -> &[ModElement] {
        &self.powers[1 % self.powers.len()]
    }

    /// Least `r ≥ 1` with `σ^r = id`.
    pub fn order(&self) -> usize {
        self.powers.len()
    }

    pub fn apply(&self, a: &ModElement) -> ModElement {
        self.apply_power(1, a)
    }

    /// `σ^j(a)`, with `j` reduced modulo the order.
    pub fn apply_power(&self, j: usize, a: &ModElement) -> ModElement {
        apply_table(&self.ring, &self.powers[j % self.order()], a)
    }

    /// `σ^{-j}(a)`.
    pub fn apply_inverse_power(&self, j: usize, a: &ModElement) -> ModElement {
        let r = self.order();
        self.apply_power((r - j % r) % r, a)
    }

    pub fn power_is_identity(&self, j: usize) -> bool {
        j % self.order() == 0
    }
}

fn apply_table(ring: &FiniteRing, table: &[ModElement], a: &ModElement) -> ModElement {
    let shape = ring.shape();
    a.coords()
        .iter()
        .zip(table)
        .fold(ring.zero(), |acc, (&c, img)| shape.add(&acc, &shape.scale(c, img)))
}

/// Product in `A[x; σ]`: `(Σ g_i x^i)(Σ h_j x^j) = Σ g_i σ^i(h_j) x^{i+j}`.
pub fn skew_mul(sigma: &RingAutomorphism, g: &[ModElement], h: &[ModElement]) -> Vec<ModElement> {
    let ring = sigma.ring();
    if g.is_empty() || h.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ring.zero(); g.len() + h.len() - 1];
    for (i, gi) in g.iter().enumerate() {
        if gi.is_zero() {
            continue;
        }
        for (j, hj) in h.iter().enumerate() {
            if hj.is_zero() {
                continue;
            }
            let term = ring.mul(gi, &sigma.apply_power(i, hj));
            out[i + j] = ring.add(&out[i + j], &term);
        }
    }
    out
}

/// Why `Sf` fails to be two-sided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoSidedViolation {
    /// `f_i σ^i(e_b) ≠ σ^m(e_b) f_i`.
    Commutation { basis: usize, degree: usize },
    /// `f·x ≠ (x + c)·f` at the coefficient of `x^degree`.
    ShiftMismatch { degree: usize, expected: ModElement, found: ModElement },
}

impl fmt::Display for TwoSidedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoSidedViolation::Commutation { basis, degree } => write!(
                f,
                "f·e_{basis} is not σ^m(e_{basis})·f: coefficient of x^{degree} differs"
            ),
            TwoSidedViolation::ShiftMismatch { degree, expected, found } => write!(
                f,
                "f·x is not in Sf: coefficient of x^{degree} is {expected:?} in f·x but {found:?} in (x + c)·f"
            ),
        }
    }
}

/// Decide `fS ⊆ Sf` for monic `f` by degree comparison.
///
/// `f·a` has degree `m` and leading coefficient `σ^m(a)`, so it lies in `Sf`
/// iff it equals `σ^m(a)·f`; `f·x` is monic of degree `m + 1`, so it lies in
/// `Sf` iff it equals `(x + c)·f` for the single `c` matching the `x^m`
/// coefficient.
pub fn check_two_sided(sigma: &RingAutomorphism, f: &[ModElement]) -> Result<std::result::Result<(), TwoSidedViolation>> {
    let ring = sigma.ring();
    let m = monic_degree(ring, f)?;
    for (b, a) in ring.shape().basis_elements().iter().enumerate() {
        let shifted = sigma.apply_power(m, a);
        for (i, fi) in f.iter().enumerate() {
            if ring.mul(fi, &sigma.apply_power(i, a)) != ring.mul(&shifted, fi) {
                return Ok(Err(TwoSidedViolation::Commutation { basis: b, degree: i }));
            }
        }
    }
    // f·x = Σ f_i x^{i+1}
    let mut fx = vec![ring.zero()];
    fx.extend(f.iter().cloned());
    let c = ring.sub(&f[m - 1], &sigma.apply(&f[m - 1]));
    let x_plus_c = vec![c, ring.one().clone()];
    let candidate = skew_mul(sigma, &x_plus_c, f);
    for (degree, (expected, found)) in fx.iter().zip(&candidate).enumerate() {
        if expected != found {
            return Ok(Err(TwoSidedViolation::ShiftMismatch {
                degree,
                expected: expected.clone(),
                found: found.clone(),
            }));
        }
    }
    Ok(Ok(()))
}

fn monic_degree(ring: &FiniteRing, f: &[ModElement]) -> Result<usize> {
    if f.len() < 2 || f.last() != Some(ring.one()) {
        return Err(Error::NotMonic);
    }
    for c in f {
        ring.shape().check(c)?;
    }
    Ok(f.len() - 1)
}

/// The quotient `A[x; σ]/Sf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewQuotient {
    sigma: RingAutomorphism,
    f: Vec<ModElement>,
}

impl SkewQuotient {
    /// Validate `f` (monic, `Sf` two-sided, `f_0` a unit) and build the quotient.
    pub fn new(sigma: RingAutomorphism, f: Vec<ModElement>) -> Result<Self> {
        let ring = sigma.ring();
        monic_degree(ring, &f)?;
        if let Err(violation) = check_two_sided(&sigma, &f)? {
            return Err(Error::NotTwoSided(violation.to_string()));
        }
        if !ring.is_unit(&f[0])? {
            return Err(Error::ConstantNotUnit(f[0].clone()));
        }
        Ok(SkewQuotient { sigma, f })
    }

    /// `A[x; σ]/(x^m − 1)`.
    pub fn x_pow_minus_one(sigma: RingAutomorphism, m: usize) -> Result<Self> {
        let ring = sigma.ring();
        let mut f = vec![ring.zero(); m + 1];
        f[0] = ring.neg(ring.one());
        f[m] = ring.one().clone();
        SkewQuotient::new(sigma, f)
    }

    pub fn base(&self) -> &FiniteRing {
        self.sigma.ring()
    }

    pub fn sigma(&self) -> &RingAutomorphism {
        &self.sigma
    }

    pub fn modulus(&self) -> &[ModElement] {
        &self.f
    }

    /// Degree of `f`.
    pub fn degree(&self) -> usize {
        self.f.len() - 1
    }

    /// Remainder of left division by `f`, padded to length `m`.
    pub fn reduce(&self, poly: &[ModElement]) -> Vec<ModElement> {
        let ring = self.base();
        let m = self.degree();
        let mut p = poly.to_vec();
        if p.len() < m {
            p.resize(m, ring.zero());
        }
        for d in (m..p.len()).rev() {
            let c = p[d].clone();
            if c.is_zero() {
                continue;
            }
            // subtract c x^{d-m} f = Σ c σ^{d-m}(f_i) x^{i+d-m}
            let shift = d - m;
            for (i, fi) in self.f.iter().enumerate() {
                let term = ring.mul(&c, &self.sigma.apply_power(shift, fi));
                p[i + shift] = ring.sub(&p[i + shift], &term);
            }
        }
        p.truncate(m);
        p
    }

    pub fn mul(&self, g: &[ModElement], h: &[ModElement]) -> Vec<ModElement> {
        self.reduce(&skew_mul(&self.sigma, g, h))
    }

    /// `(gh)_0 = g_0 h_0 − Σ_{i=1}^{m−1} g_{m−i} σ^{m−i}(h_i) f_0`.
    pub fn constant_term_formula(&self, g: &[ModElement], h: &[ModElement]) -> ModElement {
        let ring = self.base();
        let m = self.degree();
        let mut acc = ring.mul(&g[0], &h[0]);
        for i in 1..m {
            let term = ring.mul(
                &ring.mul(&g[m - i], &self.sigma.apply_power(m - i, &h[i])),
                &self.f[0],
            );
            acc = ring.sub(&acc, &term);
        }
        acc
    }

    /// Coefficient list of a quotient-ring element.
    pub fn to_poly(&self, element: &ModElement) -> Vec<ModElement> {
        element.blocks(self.base().rank())
    }

    pub fn from_poly(&self, poly: &[ModElement]) -> ModElement {
        ModElement::concat(poly)
    }

    /// The quotient as a [`FiniteRing`] on the basis `{e_i x^j}`, index `j·k + i`.
    pub fn as_finite_ring(&self) -> Result<FiniteRing> {
        let base = self.base();
        let k = base.rank();
        let m = self.degree();
        let shape = base.shape().repeat(m);
        crate::znmod::check_cap(shape.cardinality())?;
        let basis_poly = |idx: usize| -> Vec<ModElement> {
            let mut p = vec![base.zero(); m];
            p[idx / k] = base.basis(idx % k);
            p
        };
        let rank = shape.rank();
        let table = (0..rank)
            .map(|a| {
                (0..rank)
                    .map(|b| self.from_poly(&self.mul(&basis_poly(a), &basis_poly(b))))
                    .collect()
            })
            .collect();
        let mut one = vec![base.zero(); m];
        one[0] = base.one().clone();
        FiniteRing::from_table(shape, table, self.from_poly(&one))
    }

    /// `g ↦ ε_A(g_0)` as a Frobenius functional of the quotient ring.
    pub fn frobenius_form(&self, epsilon: &FrobeniusFunctional) -> Result<FrobeniusFunctional> {
        if epsilon.ring() != self.base() {
            return Err(Error::Invalid("functional is not defined on the base ring".into()));
        }
        let ring = self.as_finite_ring()?;
        let mut weights = epsilon.form().weights().to_vec();
        weights.resize(ring.rank(), 0);
        let form = ZnLinearForm::new(ring.shape(), weights)?;
        match FrobeniusFunctional::new(&ring, form) {
            Ok(f) => Ok(f),
            Err(Error::DegenerateForm) => Err(Error::Internal(
                "ε((gh)_0) is degenerate on the quotient".into(),
            )),
            Err(e) => Err(e),
        }
    }

    /// Whether `f = x^m − 1` and `σ^m = id`.
    pub fn is_x_pow_minus_one(&self) -> bool {
        let ring = self.base();
        let m = self.degree();
        self.f[0] == ring.neg(ring.one())
            && self.f[1..m].iter().all(|c| c.is_zero())
            && self.sigma.power_is_identity(m)
    }

    /// `θ(Σ g_i x^i) = Σ σ^{−i}(g_i) x^{m−i}` (exponents mod `m`).
    pub fn theta(&self, g: &[ModElement]) -> Result<Vec<ModElement>> {
        if !self.is_x_pow_minus_one() {
            return Err(Error::UnsupportedModulus);
        }
        let m = self.degree();
        let mut out = vec![self.base().zero(); m];
        for (i, gi) in g.iter().enumerate() {
            out[(m - i) % m] = self.sigma.apply_inverse_power(i, gi);
        }
        Ok(out)
    }

    /// [`Self::theta`] on flat quotient-ring elements.
    pub fn theta_element(&self, element: &ModElement) -> Result<ModElement> {
        Ok(self.from_poly(&self.theta(&self.to_poly(element))?))
    }
}

/// `ε_A(g_0)` as a verified functional, given the base functional; see
/// [`SkewQuotient::frobenius_form`].
pub fn frobenius_form_on_quotient(
    quotient: &SkewQuotient,
    epsilon: &FrobeniusFunctional,
) -> Result<FrobeniusFunctional> {
    quotient.frobenius_form(epsilon)
}

/// Whether `ε((gh)_0)` is nondegenerate on the given side, computed straight
/// from quotient multiplication.
pub fn quotient_form_is_nondegenerate(
    quotient: &SkewQuotient,
    epsilon: &FrobeniusFunctional,
    side: KernelSide,
) -> Result<bool> {
    let ring = quotient.as_finite_ring()?;
    let pairing = |g: &ModElement, h: &ModElement| {
        let prod = quotient.mul(&quotient.to_poly(g), &quotient.to_poly(h));
        epsilon.eval(&prod[0])
    };
    crate::frobenius::is_nondegenerate(pairing, ring.shape(), ring.shape(), side)
}
