//! Frobenius functionals, the bilinear forms they induce, annihilators and
//! orthogonals.
//!
//! Characters of a finite ring of characteristic `n` are represented
//! additively, as `Z_n`-linear forms: `Hom_Z(R, C^×) = Hom(R, Z_n)`. A
//! *Frobenius functional* (generating character) is a form `ε` whose pairing
//! `(a, b) ↦ ε(ab)` has trivial kernel on both sides. A finite ring admits one
//! exactly when it is a Frobenius ring, which [`find_frobenius_functional`]
//! decides by exhaustive search.
//!
//! Kernel conventions follow the maps `α(a) = ⟨a, −⟩` and `β(b) = ⟨−, b⟩`: a
//! pairing is *right* nondegenerate when `α` is injective (no nonzero `a` with
//! `⟨a, −⟩ ≡ 0`) and *left* nondegenerate when `β` is injective.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::finring::{FiniteRing, Ideal, IdealSide, Side};
use crate::znmod::{enumerate_forms, enumerate_module, ModElement, ModuleShape, ZnLinearForm};

/// Which kernel(s) of a pairing must vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelSide {
    /// `{a : ⟨a, −⟩ ≡ 0} = {0}`
    Right,
    /// `{b : ⟨−, b⟩ ≡ 0} = {0}`
    Left,
    Both,
}

/// Kernel of `α: a ↦ ⟨a, −⟩`, tested against the basis of the right shape.
///
/// Exact for bilinear pairings: `⟨a, y⟩` is a `Z`-combination of the values
/// on basis vectors.
pub fn right_kernel<F>(pairing: F, left: &ModuleShape, right: &ModuleShape) -> Result<BTreeSet<ModElement>>
where
    F: Fn(&ModElement, &ModElement) -> u64,
{
    let basis = right.basis_elements();
    Ok(enumerate_module(left)?
        .filter(|a| basis.iter().all(|e| pairing(a, e) == 0))
        .collect())
}

/// Kernel of `β: b ↦ ⟨−, b⟩`.
pub fn left_kernel<F>(pairing: F, left: &ModuleShape, right: &ModuleShape) -> Result<BTreeSet<ModElement>>
where
    F: Fn(&ModElement, &ModElement) -> u64,
{
    let basis = left.basis_elements();
    Ok(enumerate_module(right)?
        .filter(|b| basis.iter().all(|e| pairing(e, b) == 0))
        .collect())
}

pub fn is_nondegenerate<F>(
    pairing: F,
    left: &ModuleShape,
    right: &ModuleShape,
    side: KernelSide,
) -> Result<bool>
where
    F: Fn(&ModElement, &ModElement) -> u64,
{
    let right_ok = || -> Result<bool> { Ok(right_kernel(&pairing, left, right)?.len() == 1) };
    let left_ok = || -> Result<bool> { Ok(left_kernel(&pairing, left, right)?.len() == 1) };
    match side {
        KernelSide::Right => right_ok(),
        KernelSide::Left => left_ok(),
        KernelSide::Both => Ok(right_ok()? && left_ok()?),
    }
}

/// Gram matrix `(ε(e_i e_j))` over `Z_n`.
pub fn gram_of_functional(ring: &FiniteRing, form: &ZnLinearForm) -> Vec<Vec<u64>> {
    let k = ring.rank();
    (0..k)
        .map(|i| (0..k).map(|j| form.eval(&ring.mul(&ring.basis(i), &ring.basis(j)))).collect())
        .collect()
}

/// A basis triple `(b, b', b'')` with `⟨bb', b''⟩ ≠ ⟨b, b'b''⟩`, if any.
pub fn associativity_witness<F>(ring: &FiniteRing, pairing: F) -> Option<[ModElement; 3]>
where
    F: Fn(&ModElement, &ModElement) -> u64,
{
    let basis = ring.shape().basis_elements();
    for a in &basis {
        for b in &basis {
            let ab = ring.mul(a, b);
            for c in &basis {
                if pairing(&ab, c) != pairing(a, &ring.mul(b, c)) {
                    return Some([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    None
}

pub fn is_associative<F>(ring: &FiniteRing, pairing: F) -> bool
where
    F: Fn(&ModElement, &ModElement) -> u64,
{
    associativity_witness(ring, pairing).is_none()
}

/// A linear form `ε: R → Z_n` whose pairing `ε(ab)` is nondegenerate on
/// both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusFunctional {
    ring: FiniteRing,
    form: ZnLinearForm,
}

impl FrobeniusFunctional {
    /// Wrap `form`, verifying both-sided nondegeneracy.
    pub fn new(ring: &FiniteRing, form: ZnLinearForm) -> Result<Self> {
        if form.weights().len() != ring.rank() || form.n() != ring.n() {
            return Err(Error::InvalidLinearForm);
        }
        if !functional_is_nondegenerate(ring, &form, KernelSide::Both)? {
            return Err(Error::DegenerateForm);
        }
        Ok(FrobeniusFunctional { ring: ring.clone(), form })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn form(&self) -> &ZnLinearForm {
        &self.form
    }

    pub fn eval(&self, a: &ModElement) -> u64 {
        self.form.eval(a)
    }

    /// `⟨a, b⟩_ε = ε(ab)`.
    pub fn pairing(&self, a: &ModElement, b: &ModElement) -> u64 {
        self.form.eval(&self.ring.mul(a, b))
    }
}

/// Nondegeneracy of `(a, b) ↦ ε(ab)`.
pub fn functional_is_nondegenerate(
    ring: &FiniteRing,
    form: &ZnLinearForm,
    side: KernelSide,
) -> Result<bool> {
    let gram = gram_of_functional(ring, form);
    let n = ring.n();
    let shape = ring.shape();
    // ε(ab) = Σ a_i b_j gram[i][j]
    let pairing = |a: &ModElement, b: &ModElement| {
        let mut acc = 0;
        for (i, &ai) in a.coords().iter().enumerate() {
            for (j, &bj) in b.coords().iter().enumerate() {
                acc = (acc + (ai * bj % n) * gram[i][j]) % n;
            }
        }
        acc
    };
    is_nondegenerate(pairing, shape, shape, side)
}

/// First form, in [`enumerate_forms`] order, that is a Frobenius functional;
/// `None` means the ring is not Frobenius.
pub fn find_frobenius_functional(ring: &FiniteRing) -> Result<Option<FrobeniusFunctional>> {
    for form in enumerate_forms(ring.shape())? {
        if functional_is_nondegenerate(ring, &form, KernelSide::Both)? {
            return Ok(Some(FrobeniusFunctional { ring: ring.clone(), form }));
        }
    }
    Ok(None)
}

/// The form with the given values on the basis.
fn form_from_basis_values(shape: &ModuleShape, values: Vec<u64>) -> ZnLinearForm {
    ZnLinearForm::new(shape, values).expect("values of a linear form on a basis are admissible")
}

/// Outcome of checking the five structures that a Frobenius functional
/// determines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorReport {
    /// `{x ↦ ε(bx)} = R*`
    pub right_orbit_is_dual: bool,
    /// `{x ↦ ε(xb)} = R*`
    pub left_orbit_is_dual: bool,
    /// `b ↦ ε(b·−)` is a bijection `R → R*`
    pub alpha_bijective: bool,
    /// `b ↦ ε(−·b)` is a bijection `R → R*`
    pub beta_bijective: bool,
    /// `ε(ab)` is associative and nondegenerate
    pub associative_nondegenerate: bool,
}

impl GeneratorReport {
    pub fn items(&self) -> [bool; 5] {
        [
            self.right_orbit_is_dual,
            self.left_orbit_is_dual,
            self.alpha_bijective,
            self.beta_bijective,
            self.associative_nondegenerate,
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.items().iter().all(|&b| b)
    }

    pub fn all_fail(&self) -> bool {
        self.items().iter().all(|&b| !b)
    }
}

pub fn verify_generator_equivalences(ring: &FiniteRing, form: &ZnLinearForm) -> Result<GeneratorReport> {
    let shape = ring.shape();
    let basis = shape.basis_elements();
    let all_forms: BTreeSet<ZnLinearForm> = enumerate_forms(shape)?.collect();
    let elements = ring.elements()?;

    let translate = |side: Side| -> Vec<ZnLinearForm> {
        elements
            .iter()
            .map(|b| {
                let values = basis
                    .iter()
                    .map(|e| match side {
                        Side::Right => form.eval(&ring.mul(b, e)),
                        Side::Left => form.eval(&ring.mul(e, b)),
                    })
                    .collect();
                form_from_basis_values(shape, values)
            })
            .collect()
    };
    let alpha = translate(Side::Right);
    let beta = translate(Side::Left);
    let alpha_image: BTreeSet<ZnLinearForm> = alpha.iter().cloned().collect();
    let beta_image: BTreeSet<ZnLinearForm> = beta.iter().cloned().collect();

    let associative = is_associative(ring, |a, b| form.eval(&ring.mul(a, b)));
    Ok(GeneratorReport {
        right_orbit_is_dual: alpha_image == all_forms,
        left_orbit_is_dual: beta_image == all_forms,
        alpha_bijective: alpha_image.len() == alpha.len() && alpha_image == all_forms,
        beta_bijective: beta_image.len() == beta.len() && beta_image == all_forms,
        associative_nondegenerate: associative
            && functional_is_nondegenerate(ring, form, KernelSide::Both)?,
    })
}

/// `{a : as = 0 for all s ∈ S}`, a left ideal.
pub fn left_annihilator<'a>(
    ring: &FiniteRing,
    set: impl IntoIterator<Item = &'a ModElement>,
) -> Result<Ideal> {
    let set: Vec<&ModElement> = set.into_iter().collect();
    let elements = ring
        .elements()?
        .into_iter()
        .filter(|a| set.iter().all(|s| ring.mul(a, s).is_zero()))
        .collect();
    Ok(Ideal::unchecked(IdealSide::Left, elements))
}

/// `{b : tb = 0 for all t ∈ T}`, a right ideal.
pub fn right_annihilator<'a>(
    ring: &FiniteRing,
    set: impl IntoIterator<Item = &'a ModElement>,
) -> Result<Ideal> {
    let set: Vec<&ModElement> = set.into_iter().collect();
    let elements = ring
        .elements()?
        .into_iter()
        .filter(|b| set.iter().all(|t| ring.mul(t, b).is_zero()))
        .collect();
    Ok(Ideal::unchecked(IdealSide::Right, elements))
}

/// The `A`-valued form `⟨x, y⟩ = Σ x_i Q_ij y_j` on `A^m × A^m`.
///
/// Vectors of `A^m` are stored as flat [`ModElement`]s over
/// `A.shape().repeat(m)`; component `i` occupies coordinates
/// `i·k .. (i+1)·k` where `k` is the rank of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientForm {
    ring: FiniteRing,
    m: usize,
    q: Vec<Vec<ModElement>>,
}

impl AmbientForm {
    pub fn new(ring: &FiniteRing, q: Vec<Vec<ModElement>>) -> Result<Self> {
        let m = q.len();
        if m == 0 || q.iter().any(|row| row.len() != m) {
            return Err(Error::Invalid("form matrix must be square and nonempty".into()));
        }
        for entry in q.iter().flatten() {
            ring.shape().check(entry)?;
        }
        Ok(AmbientForm { ring: ring.clone(), m, q })
    }

    /// The Euclidean form `Σ x_i y_i`.
    pub fn identity(ring: &FiniteRing, m: usize) -> Result<Self> {
        let q = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| if i == j { ring.one().clone() } else { ring.zero() })
                    .collect()
            })
            .collect();
        AmbientForm::new(ring, q)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.m
    }

    /// `Q = (⟨e_i, e_j⟩)`.
    pub fn matrix(&self) -> &[Vec<ModElement>] {
        &self.q
    }

    pub fn ambient_shape(&self) -> ModuleShape {
        self.ring.shape().repeat(self.m)
    }

    pub fn pair(&self, x: &ModElement, y: &ModElement) -> ModElement {
        let k = self.ring.rank();
        let xs = x.blocks(k);
        let ys = y.blocks(k);
        let mut acc = self.ring.zero();
        for (i, xi) in xs.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in ys.iter().enumerate() {
                if yj.is_zero() || self.q[i][j].is_zero() {
                    continue;
                }
                let term = self.ring.mul(&self.ring.mul(xi, &self.q[i][j]), yj);
                acc = self.ring.add(&acc, &term);
            }
        }
        acc
    }

    /// Unit vector with `a` in component `i`.
    pub fn unit_vector(&self, i: usize, a: &ModElement) -> ModElement {
        let zero = self.ring.zero();
        let parts: Vec<&ModElement> = (0..self.m).map(|j| if j == i { a } else { &zero }).collect();
        ModElement::concat(parts)
    }

    /// `{x : ⟨x, −⟩ ≡ 0}` (side right) or `{y : ⟨−, y⟩ ≡ 0}` (side left).
    pub fn kernel(&self, side: Side) -> Result<BTreeSet<ModElement>> {
        let units: Vec<ModElement> =
            (0..self.m).map(|i| self.unit_vector(i, self.ring.one())).collect();
        Ok(enumerate_module(&self.ambient_shape())?
            .filter(|v| {
                units.iter().all(|e| match side {
                    Side::Right => self.pair(v, e).is_zero(),
                    Side::Left => self.pair(e, v).is_zero(),
                })
            })
            .collect())
    }

    pub fn is_nondegenerate(&self, side: KernelSide) -> Result<bool> {
        Ok(match side {
            KernelSide::Right => self.kernel(Side::Right)?.len() == 1,
            KernelSide::Left => self.kernel(Side::Left)?.len() == 1,
            KernelSide::Both => {
                self.kernel(Side::Right)?.len() == 1 && self.kernel(Side::Left)?.len() == 1
            }
        })
    }
}

/// `⊥S = {x : ⟨x, s⟩ = 0 ∀s ∈ S}` (side left) or
/// `S⊥ = {y : ⟨s, y⟩ = 0 ∀s ∈ S}` (side right), by exhaustive filtering.
pub fn orthogonal(form: &AmbientForm, set: &BTreeSet<ModElement>, side: Side) -> Result<BTreeSet<ModElement>> {
    Ok(enumerate_module(&form.ambient_shape())?
        .filter(|v| {
            set.iter().all(|s| match side {
                Side::Left => form.pair(v, s).is_zero(),
                Side::Right => form.pair(s, v).is_zero(),
            })
        })
        .collect())
}

/// `^εS = {x : ε(⟨x, s⟩) = 0 ∀s ∈ S}` (side left) or `S^ε` (side right).
pub fn epsilon_orthogonal(
    form: &AmbientForm,
    epsilon: &FrobeniusFunctional,
    set: &BTreeSet<ModElement>,
    side: Side,
) -> Result<BTreeSet<ModElement>> {
    if epsilon.ring() != form.ring() {
        return Err(Error::Invalid("functional and form live on different rings".into()));
    }
    Ok(enumerate_module(&form.ambient_shape())?
        .filter(|v| {
            set.iter().all(|s| {
                let value = match side {
                    Side::Left => form.pair(v, s),
                    Side::Right => form.pair(s, v),
                };
                epsilon.eval(&value) == 0
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{ring_matrix, ring_product, ring_zn, GroupAlgebra};
    use crate::znmod::kernel_elements;

    fn el(c: &[u64]) -> ModElement {
        ModElement::new(c.to_vec())
    }

    fn set(v: &[&[u64]]) -> BTreeSet<ModElement> {
        v.iter().map(|c| el(c)).collect()
    }

    fn z2z4() -> FiniteRing {
        ring_product(&ring_zn(2).unwrap(), &ring_zn(4).unwrap()).unwrap()
    }

    fn r8() -> FiniteRing {
        let shape = ModuleShape::new(2, vec![2, 2, 2]).unwrap();
        let z = el(&[0, 0, 0]);
        let table = vec![
            vec![el(&[1, 0, 0]), el(&[0, 1, 0]), el(&[0, 0, 1])],
            vec![el(&[0, 1, 0]), z.clone(), z.clone()],
            vec![el(&[0, 0, 1]), z.clone(), z],
        ];
        FiniteRing::from_table(shape, table, el(&[1, 0, 0])).unwrap()
    }

    #[test]
    fn gram_matrices() {
        let z4 = ring_zn(4).unwrap();
        let id = ZnLinearForm::new(z4.shape(), vec![1]).unwrap();
        assert_eq!(gram_of_functional(&z4, &id), vec![vec![1]]);

        let r = z2z4();
        let eps = ZnLinearForm::new(r.shape(), vec![2, 1]).unwrap();
        assert_eq!(gram_of_functional(&r, &eps), vec![vec![2, 0], vec![0, 1]]);

        let ga = GroupAlgebra::cyclic(2, 2).unwrap();
        let coeff_e = ZnLinearForm::new(ga.ring().shape(), vec![1, 0]).unwrap();
        assert_eq!(gram_of_functional(ga.ring(), &coeff_e), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn nondegeneracy_examples() {
        let z4 = ring_zn(4).unwrap();
        let s = z4.shape();
        let mul = |a: &ModElement, b: &ModElement| z4.mul(a, b).coords()[0];
        assert!(is_nondegenerate(mul, s, s, KernelSide::Both).unwrap());
        let zero = ZnLinearForm::zero(s);
        assert!(!functional_is_nondegenerate(&z4, &zero, KernelSide::Left).unwrap());

        let r = r8();
        let eps = ZnLinearForm::new(r.shape(), vec![1, 0, 0]).unwrap();
        assert!(!functional_is_nondegenerate(&r, &eps, KernelSide::Right).unwrap());
        let pairing = |a: &ModElement, b: &ModElement| eps.eval(&r.mul(a, b));
        let kernel = right_kernel(pairing, r.shape(), r.shape()).unwrap();
        assert!(kernel.contains(&el(&[0, 1, 0])));
    }

    #[test]
    fn basis_kernels_match_brute_force() {
        for ring in [ring_zn(4).unwrap(), z2z4(), r8(), ring_zn(6).unwrap()] {
            for form in enumerate_forms(ring.shape()).unwrap() {
                let pairing = |a: &ModElement, b: &ModElement| form.eval(&ring.mul(a, b));
                let fast = right_kernel(pairing, ring.shape(), ring.shape()).unwrap();
                let brute = kernel_elements(pairing, ring.shape(), ring.shape()).unwrap();
                assert_eq!(fast, brute);
                let swapped = |a: &ModElement, b: &ModElement| form.eval(&ring.mul(b, a));
                let fast = left_kernel(pairing, ring.shape(), ring.shape()).unwrap();
                let brute = kernel_elements(swapped, ring.shape(), ring.shape()).unwrap();
                assert_eq!(fast, brute);
            }
        }
    }

    #[test]
    fn associativity_checks() {
        let r = z2z4();
        let eps = ZnLinearForm::new(r.shape(), vec![2, 1]).unwrap();
        assert!(is_associative(&r, |a, b| eps.eval(&r.mul(a, b))));

        // trace pairing with reversed product on M_2(F_2)
        let m2 = ring_matrix(&ring_zn(2).unwrap(), 2).unwrap();
        let trace = ZnLinearForm::new(m2.shape(), vec![1, 0, 0, 1]).unwrap();
        assert!(is_associative(&m2, |a, b| trace.eval(&m2.mul(b, a))));

        // ε(a)ε(b) on Z_4 with ε = id is the multiplication pairing itself
        let z4 = ring_zn(4).unwrap();
        assert!(is_associative(&z4, |a, b| (a.coords()[0] * b.coords()[0]) % 4));

        // ε(a)ε(b) on Z_2 x Z_4 with ε(a, b) = 2a + b is not associative
        let witness = associativity_witness(&r, |a, b| (eps.eval(a) * eps.eval(b)) % 4).unwrap();
        let [a, b, c] = witness;
        let lhs = (eps.eval(&r.mul(&a, &b)) * eps.eval(&c)) % 4;
        let rhs = (eps.eval(&a) * eps.eval(&r.mul(&b, &c))) % 4;
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn functional_search() {
        let z4 = ring_zn(4).unwrap();
        let eps = find_frobenius_functional(&z4).unwrap().unwrap();
        assert_eq!(eps.form().weights(), &[1]);

        let r = z2z4();
        let found = find_frobenius_functional(&r).unwrap().unwrap();
        assert!(FrobeniusFunctional::new(&r, found.form().clone()).is_ok());
        let pinned = ZnLinearForm::new(r.shape(), vec![2, 1]).unwrap();
        assert!(FrobeniusFunctional::new(&r, pinned).is_ok());

        assert!(find_frobenius_functional(&r8()).unwrap().is_none());
    }

    #[test]
    fn generator_equivalences() {
        let z4 = ring_zn(4).unwrap();
        let id = ZnLinearForm::new(z4.shape(), vec![1]).unwrap();
        assert!(verify_generator_equivalences(&z4, &id).unwrap().all_pass());
        let r = z2z4();
        let eps = ZnLinearForm::new(r.shape(), vec![2, 1]).unwrap();
        assert!(verify_generator_equivalences(&r, &eps).unwrap().all_pass());
        let twice = ZnLinearForm::new(z4.shape(), vec![2]).unwrap();
        assert!(verify_generator_equivalences(&z4, &twice).unwrap().all_fail());
    }

    #[test]
    fn annihilators() {
        let z4 = ring_zn(4).unwrap();
        assert_eq!(left_annihilator(&z4, [&el(&[2])]).unwrap().elements(), &set(&[&[0], &[2]]));
        for r in [z4.clone(), z2z4(), r8()] {
            assert_eq!(left_annihilator(&r, [r.one()]).unwrap().len(), 1);
        }
        let m2 = ring_matrix(&ring_zn(2).unwrap(), 2).unwrap();
        let e11 = el(&[1, 0, 0, 0]);
        let rann = right_annihilator(&m2, [&e11]).unwrap();
        assert_eq!(rann.len(), 4);
        assert!(rann.iter().all(|x| x.coords()[0] == 0 && x.coords()[1] == 0));
        assert!(m2.is_ideal(rann.elements(), IdealSide::Right));
    }

    #[test]
    fn orthogonals() {
        let f2 = ring_zn(2).unwrap();
        let id = AmbientForm::identity(&f2, 2).unwrap();
        let eps = find_frobenius_functional(&f2).unwrap().unwrap();
        let c = set(&[&[0, 0], &[1, 0]]);
        assert_eq!(epsilon_orthogonal(&id, &eps, &c, Side::Left).unwrap(), set(&[&[0, 0], &[0, 1]]));
        assert_eq!(orthogonal(&id, &c, Side::Left).unwrap(), set(&[&[0, 0], &[0, 1]]));
        assert_eq!(epsilon_orthogonal(&id, &eps, &set(&[&[0, 0]]), Side::Left).unwrap().len(), 4);

        let z4 = ring_zn(4).unwrap();
        let form = AmbientForm::identity(&z4, 1).unwrap();
        let eps4 = find_frobenius_functional(&z4).unwrap().unwrap();
        let s = set(&[&[0], &[2]]);
        assert_eq!(epsilon_orthogonal(&form, &eps4, &s, Side::Left).unwrap(), s);
        assert_eq!(orthogonal(&form, &s, Side::Left).unwrap(), s);

        let all = enumerate_module(&id.ambient_shape()).unwrap().collect();
        assert_eq!(orthogonal(&id, &all, Side::Right).unwrap().len(), 1);

        let q = AmbientForm::new(&f2, vec![vec![el(&[1]), el(&[1])], vec![el(&[0]), el(&[1])]]).unwrap();
        assert!(q.is_nondegenerate(KernelSide::Both).unwrap());
        assert_eq!(orthogonal(&q, &c, Side::Right).unwrap(), set(&[&[0, 0], &[1, 1]]));
        assert_eq!(orthogonal(&q, &c, Side::Left).unwrap(), set(&[&[0, 0], &[0, 1]]));
    }

    #[test]
    fn ambient_kernel_matches_brute_force() {
        let z4 = ring_zn(4).unwrap();
        let q = AmbientForm::new(&z4, vec![vec![el(&[2]), el(&[0])], vec![el(&[1]), el(&[2])]]).unwrap();
        let all: Vec<ModElement> = enumerate_module(&q.ambient_shape()).unwrap().collect();
        let brute: BTreeSet<ModElement> = all
            .iter()
            .filter(|x| all.iter().all(|y| q.pair(x, y).is_zero()))
            .cloned()
            .collect();
        assert_eq!(q.kernel(Side::Right).unwrap(), brute);
    }
}
