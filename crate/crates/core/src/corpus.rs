//! Named rings used throughout the tests, the guide and the CLI examples.

use crate::finring::{ring_matrix, ring_product, ring_zn, FiniteRing, GroupAlgebra};
use crate::frobenius::FrobeniusFunctional;
use crate::skewpoly::{RingAutomorphism, SkewQuotient};
use crate::znmod::{ModElement, ModuleShape, ZnLinearForm};

fn el(c: &[u64]) -> ModElement {
    ModElement::new(c.to_vec())
}

/// `F_4 = F_2[ω]/(ω² + ω + 1)` on the basis `{1, ω}`.
pub fn f4() -> FiniteRing {
    let shape = ModuleShape::new(2, vec![2, 2]).expect("valid shape");
    let table = vec![vec![el(&[1, 0]), el(&[0, 1])], vec![el(&[0, 1]), el(&[1, 1])]];
    FiniteRing::from_table(shape, table, el(&[1, 0])).expect("F_4 is a ring")
}

/// The Frobenius automorphism `a ↦ a²` of [`f4`].
pub fn f4_frobenius() -> RingAutomorphism {
    RingAutomorphism::new(&f4(), vec![el(&[1, 0]), el(&[1, 1])]).expect("Frobenius map")
}

/// The trace `a ↦ a + a²` of [`f4`]: `tr(1) = 0`, `tr(ω) = 1`.
pub fn f4_trace() -> FrobeniusFunctional {
    let ring = f4();
    let form = ZnLinearForm::new(ring.shape(), vec![0, 1]).expect("admissible weights");
    FrobeniusFunctional::new(&ring, form).expect("trace form is nondegenerate")
}

/// `span{1, u, v}` over `Z_2` with `u² = uv = vu = v² = 0`: a local ring
/// whose socle is too large for it to be Frobenius.
pub fn r8() -> FiniteRing {
    let shape = ModuleShape::new(2, vec![2, 2, 2]).expect("valid shape");
    let z = el(&[0, 0, 0]);
    let table = vec![
        vec![el(&[1, 0, 0]), el(&[0, 1, 0]), el(&[0, 0, 1])],
        vec![el(&[0, 1, 0]), z.clone(), z.clone()],
        vec![el(&[0, 0, 1]), z.clone(), z],
    ];
    FiniteRing::from_table(shape, table, el(&[1, 0, 0])).expect("R8 is a ring")
}

pub fn zn(n: u64) -> FiniteRing {
    ring_zn(n).expect("n is positive")
}

pub fn z2_times_z4() -> FiniteRing {
    ring_product(&zn(2), &zn(4)).expect("product ring")
}

pub fn z2_times_z2() -> FiniteRing {
    ring_product(&zn(2), &zn(2)).expect("product ring")
}

pub fn m2_f2() -> FiniteRing {
    ring_matrix(&zn(2), 2).expect("matrix ring")
}

pub fn z2_c2() -> GroupAlgebra {
    GroupAlgebra::cyclic(2, 2).expect("cyclic group")
}

pub fn z3_c3() -> GroupAlgebra {
    GroupAlgebra::cyclic(3, 3).expect("cyclic group")
}

/// `F_4[x; Frobenius]/(x² − 1)`.
pub fn f4_skew_quotient() -> SkewQuotient {
    SkewQuotient::x_pow_minus_one(f4_frobenius(), 2).expect("x² − 1 is central")
}

/// `Z_4[x]/(x² − 1)`.
pub fn z4_x2_minus_1() -> SkewQuotient {
    SkewQuotient::x_pow_minus_one(RingAutomorphism::identity(&zn(4)), 2).expect("central")
}

/// `Z_2[x]/(x³ − 1)`, the ambient ring of binary cyclic codes of length 3.
pub fn z2_x3_minus_1() -> SkewQuotient {
    SkewQuotient::x_pow_minus_one(RingAutomorphism::identity(&zn(2)), 3).expect("central")
}

/// The rings on which the two Frobenius tests are compared.
pub fn frobenius_corpus() -> Vec<(String, FiniteRing)> {
    let mut rings: Vec<(String, FiniteRing)> =
        (1..=12).map(|n| (format!("Z_{n}"), zn(n))).collect();
    rings.push(("Z_2 x Z_4".into(), z2_times_z4()));
    rings.push(("Z_2 x Z_2".into(), z2_times_z2()));
    rings.push(("M_2(F_2)".into(), m2_f2()));
    rings.push(("Z_2 C_2".into(), z2_c2().into_ring()));
    rings.push(("Z_3 C_3".into(), z3_c3().into_ring()));
    rings.push(("F_4[x;Frob]/(x^2-1)".into(), f4_skew_quotient().as_finite_ring().expect("16 elements")));
    rings.push(("Z_4[x]/(x^2-1)".into(), z4_x2_minus_1().as_finite_ring().expect("16 elements")));
    rings.push(("R8".into(), r8()));
    rings
}
