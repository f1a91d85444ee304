//! Finite unital rings presented as `Z_n`-algebras by structure constants.
//!
//! A [`FiniteRing`] is an additive [`ModuleShape`] together with the products
//! `e_i · e_j` of its basis vectors and the coordinates of the identity. The
//! characteristic `n` of the shape is required to be the additive order of
//! `1`, so every ring is an algebra over its characteristic subring `Z_n`.
//!
//! Everything that depends on the ring structure as a whole (units, the
//! Jacobson radical, socles, ideal lattices) is computed by exhaustive search.
//! That is exact and cheap for the ring orders this crate targets, and keeps
//! each result independently auditable.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::znmod::{enumerate_module, extend_span, span, ModElement, ModuleShape};

/// Left or right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdealSide {
    Left,
    Right,
    TwoSided,
}

impl From<Side> for IdealSide {
    fn from(side: Side) -> Self {
        match side {
            Side::Left => IdealSide::Left,
            Side::Right => IdealSide::Right,
        }
    }
}

/// A finite unital ring.
#[derive(Clone)]
pub struct FiniteRing {
    shape: ModuleShape,
    // table[(i * k + j) * k + l] is coordinate l of e_i · e_j
    table: Vec<u64>,
    one: ModElement,
    units: OnceLock<BTreeSet<ModElement>>,
    radical: OnceLock<BTreeSet<ModElement>>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.table == other.table && self.one == other.one
    }
}

impl Eq for FiniteRing {}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("n", &self.shape.n())
            .field("orders", &self.shape.orders())
            .field("one", &self.one)
            .finish()
    }
}

impl FiniteRing {
    /// Build and validate a ring from its multiplication table.
    ///
    /// `mul_table[i][j]` holds the coordinates of `e_i · e_j`. The table must
    /// extend to a well-defined bilinear product, be associative on basis
    /// triples, admit `one` as a two-sided identity, and `one` must have
    /// additive order `shape.n()`.
    pub fn from_table(
        shape: ModuleShape,
        mul_table: Vec<Vec<ModElement>>,
        one: ModElement,
    ) -> Result<FiniteRing> {
        let k = shape.rank();
        if mul_table.len() != k || mul_table.iter().any(|row| row.len() != k) {
            return Err(Error::Invalid(format!("multiplication table must be {k}x{k}")));
        }
        shape.check(&one)?;
        let mut table = Vec::with_capacity(k * k * k);
        for row in &mul_table {
            for entry in row {
                shape.check(entry)?;
                table.extend_from_slice(entry.coords());
            }
        }
        let ring = FiniteRing {
            shape,
            table,
            one,
            units: OnceLock::new(),
            radical: OnceLock::new(),
        };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<()> {
        let k = self.rank();
        let orders = self.shape.orders();
        for i in 0..k {
            for j in 0..k {
                let entry = self.basis_product(i, j);
                for (l, &c) in entry.iter().enumerate() {
                    if (orders[i] * c) % orders[l] != 0 || (orders[j] * c) % orders[l] != 0 {
                        return Err(Error::IllDefinedProduct { i, j });
                    }
                }
            }
        }
        let basis = self.shape.basis_elements();
        for i in 0..k {
            for j in 0..k {
                let ij = self.mul(&basis[i], &basis[j]);
                for l in 0..k {
                    let left = self.mul(&ij, &basis[l]);
                    let right = self.mul(&basis[i], &self.mul(&basis[j], &basis[l]));
                    if left != right {
                        return Err(Error::NotAssociative(i, j, l));
                    }
                }
            }
        }
        for (i, e) in basis.iter().enumerate() {
            if &self.mul(&self.one, e) != e || &self.mul(e, &self.one) != e {
                return Err(Error::UnitLaw(i));
            }
        }
        let found = self.shape.additive_order(&self.one);
        if found != self.shape.n() {
            return Err(Error::Characteristic { expected: self.shape.n(), found });
        }
        Ok(())
    }

    fn basis_product(&self, i: usize, j: usize) -> &[u64] {
        let k = self.rank();
        &self.table[(i * k + j) * k..(i * k + j + 1) * k]
    }

    pub fn shape(&self) -> &ModuleShape {
        &self.shape
    }

    /// Characteristic of the ring.
    pub fn n(&self) -> u64 {
        self.shape.n()
    }

    pub fn rank(&self) -> usize {
        self.shape.rank()
    }

    pub fn cardinality(&self) -> u128 {
        self.shape.cardinality()
    }

    pub fn one(&self) -> &ModElement {
        &self.one
    }

    pub fn zero(&self) -> ModElement {
        self.shape.zero()
    }

    pub fn basis(&self, i: usize) -> ModElement {
        self.shape.basis(i)
    }

    /// The table `e_i · e_j` as ring elements.
    pub fn mul_table(&self) -> Vec<Vec<ModElement>> {
        let k = self.rank();
        (0..k)
            .map(|i| (0..k).map(|j| ModElement::new(self.basis_product(i, j).to_vec())).collect())
            .collect()
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Result<Vec<ModElement>> {
        Ok(enumerate_module(&self.shape)?.collect())
    }

    pub fn add(&self, a: &ModElement, b: &ModElement) -> ModElement {
        self.shape.add(a, b)
    }

    pub fn sub(&self, a: &ModElement, b: &ModElement) -> ModElement {
        self.shape.sub(a, b)
    }

    pub fn neg(&self, a: &ModElement) -> ModElement {
        self.shape.neg(a)
    }

    /// Product by bilinear extension of the structure constants.
    pub fn mul(&self, a: &ModElement, b: &ModElement) -> ModElement {
        debug_assert!(self.shape.contains(a) && self.shape.contains(b));
        let k = self.rank();
        let orders = self.shape.orders();
        let mut out = vec![0u64; k];
        for (i, &ai) in a.coords().iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coords().iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = ai * bj;
                for (l, &t) in self.basis_product(i, j).iter().enumerate() {
                    if t != 0 {
                        let d = orders[l];
                        out[l] = (out[l] + (c % d) * t) % d;
                    }
                }
            }
        }
        ModElement::new(out)
    }

    pub fn checked_mul(&self, a: &ModElement, b: &ModElement) -> Result<ModElement> {
        self.shape.check(a)?;
        self.shape.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn checked_add(&self, a: &ModElement, b: &ModElement) -> Result<ModElement> {
        self.shape.check(a)?;
        self.shape.check(b)?;
        Ok(self.add(a, b))
    }

    /// The group of units, found by brute force.
    pub fn units(&self) -> Result<&BTreeSet<ModElement>> {
        if let Some(u) = self.units.get() {
            return Ok(u);
        }
        let all = self.elements()?;
        let units: BTreeSet<ModElement> = all
            .iter()
            .filter(|a| {
                all.iter()
                    .any(|b| self.mul(a, b) == self.one && self.mul(b, a) == self.one)
            })
            .cloned()
            .collect();
        Ok(self.units.get_or_init(|| units))
    }

    pub fn is_unit(&self, a: &ModElement) -> Result<bool> {
        self.shape.check(a)?;
        Ok(self.units()?.contains(a))
    }

    /// Two-sided inverse of `a`, if any.
    pub fn inverse(&self, a: &ModElement) -> Result<Option<ModElement>> {
        if !self.is_unit(a)? {
            return Ok(None);
        }
        Ok(self.units()?.iter().find(|b| self.mul(a, b) == self.one).cloned())
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.rank();
        (0..k).all(|i| (0..k).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// `{x : 1 − a·x is a unit for every a}`.
    pub fn jacobson_radical(&self) -> Result<Ideal> {
        if let Some(j) = self.radical.get() {
            return Ok(Ideal { side: IdealSide::TwoSided, elements: j.clone() });
        }
        let all = self.elements()?;
        let units = self.units()?;
        let radical: BTreeSet<ModElement> = all
            .iter()
            .filter(|x| {
                all.iter()
                    .all(|a| units.contains(&self.sub(&self.one, &self.mul(a, x))))
            })
            .cloned()
            .collect();
        debug_assert!(self.is_ideal(&radical, IdealSide::TwoSided));
        let radical = self.radical.get_or_init(|| radical).clone();
        Ok(Ideal { side: IdealSide::TwoSided, elements: radical })
    }

    /// Right socle `{x : xJ = 0}` or left socle `{x : Jx = 0}`.
    pub fn socle(&self, side: Side) -> Result<Ideal> {
        let radical = self.jacobson_radical()?;
        let elements = self
            .elements()?
            .into_iter()
            .filter(|x| {
                radical.elements.iter().all(|j| match side {
                    Side::Right => self.mul(x, j).is_zero(),
                    Side::Left => self.mul(j, x).is_zero(),
                })
            })
            .collect();
        Ok(Ideal { side: side.into(), elements })
    }

    /// `x·R` (side right) or `R·x` (side left).
    pub fn principal_set(&self, x: &ModElement, side: Side) -> Result<BTreeSet<ModElement>> {
        Ok(self
            .elements()?
            .iter()
            .map(|r| match side {
                Side::Right => self.mul(x, r),
                Side::Left => self.mul(r, x),
            })
            .collect())
    }

    /// Decide the Frobenius property from the socle isomorphisms
    /// `Soc(R_R) ≅ (R/J)_R` and `Soc(_R R) ≅ _R(R/J)`.
    ///
    /// A module map `R/J → Soc` is fixed by the image `s` of `1 + J`; it is
    /// onto when `sR = Soc` (resp. `Rs = Soc`) and one-to-one when
    /// `|Soc|·|J| = |R|`. Both sides are checked.
    pub fn frobenius_socle_certificate(&self) -> Result<SocleCertificate> {
        let radical = self.jacobson_radical()?;
        let total = self.cardinality();
        let quotient = total / radical.len() as u128;
        let mut witness = [None, None];
        let mut sizes = [0usize; 2];
        for (slot, side) in [Side::Right, Side::Left].into_iter().enumerate() {
            let soc = self.socle(side)?;
            sizes[slot] = soc.len();
            if soc.len() as u128 != quotient {
                continue;
            }
            for s in soc.iter() {
                if self.principal_set(s, side)? == soc.elements {
                    witness[slot] = Some(s.clone());
                    break;
                }
            }
        }
        let [right_witness, left_witness] = witness;
        Ok(SocleCertificate {
            radical_size: radical.len(),
            right_socle_size: sizes[0],
            left_socle_size: sizes[1],
            right_witness,
            left_witness,
        })
    }

    pub fn is_frobenius_socle(&self) -> Result<bool> {
        Ok(self.frobenius_socle_certificate()?.is_frobenius())
    }

    /// Whether `set` is an additive subgroup closed under the given action.
    pub fn is_ideal(&self, set: &BTreeSet<ModElement>, side: IdealSide) -> bool {
        if !set.contains(&self.zero()) {
            return false;
        }
        let basis = self.shape.basis_elements();
        set.iter().all(|x| {
            set.iter().all(|y| set.contains(&self.add(x, y)))
                && basis.iter().all(|e| match side {
                    IdealSide::Left => set.contains(&self.mul(e, x)),
                    IdealSide::Right => set.contains(&self.mul(x, e)),
                    IdealSide::TwoSided => {
                        set.contains(&self.mul(e, x)) && set.contains(&self.mul(x, e))
                    }
                })
        })
    }

    /// The ideal of the given side generated by `gens`.
    pub fn ideal_generated<'a>(
        &self,
        gens: impl IntoIterator<Item = &'a ModElement>,
        side: IdealSide,
    ) -> Ideal {
        let basis = self.shape.basis_elements();
        let mut products = Vec::new();
        for g in gens {
            products.push(g.clone());
            for e in &basis {
                match side {
                    IdealSide::Left => products.push(self.mul(e, g)),
                    IdealSide::Right => products.push(self.mul(g, e)),
                    IdealSide::TwoSided => {
                        for f in &basis {
                            products.push(self.mul(&self.mul(e, g), f));
                        }
                    }
                }
            }
        }
        Ideal { side, elements: span(&products, &self.shape) }
    }

    /// Every ideal of the given side: cyclic ideals closed under sums.
    pub fn enumerate_ideals(&self, side: IdealSide) -> Result<Vec<Ideal>> {
        let all = self.elements()?;
        let cyclic: BTreeSet<BTreeSet<ModElement>> = all
            .iter()
            .map(|a| self.ideal_generated([a], side).elements)
            .collect();
        let lattice = close_under_sums(&cyclic, &self.shape);
        Ok(lattice.into_iter().map(|elements| Ideal { side, elements }).collect())
    }

    /// Additive span of `{a·b : a ∈ x, b ∈ y}`.
    pub fn product_span(&self, x: &BTreeSet<ModElement>, y: &BTreeSet<ModElement>) -> BTreeSet<ModElement> {
        let products: Vec<ModElement> =
            x.iter().flat_map(|a| y.iter().map(move |b| self.mul(a, b))).collect();
        span(&products, &self.shape)
    }
}

/// Closure of a family of subgroups under pairwise sums.
pub(crate) fn close_under_sums(
    generators: &BTreeSet<BTreeSet<ModElement>>,
    shape: &ModuleShape,
) -> BTreeSet<BTreeSet<ModElement>> {
    let mut lattice = generators.clone();
    lattice.insert([shape.zero()].into_iter().collect());
    let mut frontier: Vec<BTreeSet<ModElement>> = lattice.iter().cloned().collect();
    while let Some(current) = frontier.pop() {
        for g in generators {
            if g.is_subset(&current) {
                continue;
            }
            let mut sum = current.clone();
            extend_span(&mut sum, g, shape);
            if lattice.insert(sum.clone()) {
                frontier.push(sum);
            }
        }
    }
    lattice
}

/// Witnesses for the socle isomorphisms, when they exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleCertificate {
    pub radical_size: usize,
    pub right_socle_size: usize,
    pub left_socle_size: usize,
    /// `s` with `sR = Soc(R_R)`.
    pub right_witness: Option<ModElement>,
    /// `s` with `Rs = Soc(_R R)`.
    pub left_witness: Option<ModElement>,
}

impl SocleCertificate {
    pub fn is_frobenius(&self) -> bool {
        self.right_witness.is_some() && self.left_witness.is_some()
    }
}

/// An ideal, stored as its full element set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ideal {
    side: IdealSide,
    elements: BTreeSet<ModElement>,
}

impl Ideal {
    /// Wrap `elements`, verifying closure for the declared side.
    pub fn new(ring: &FiniteRing, side: IdealSide, elements: BTreeSet<ModElement>) -> Result<Ideal> {
        if !ring.is_ideal(&elements, side) {
            return Err(Error::Invalid(format!("set is not a {side:?} ideal")));
        }
        Ok(Ideal { side, elements })
    }

    pub(crate) fn unchecked(side: IdealSide, elements: BTreeSet<ModElement>) -> Ideal {
        Ideal { side, elements }
    }

    pub fn side(&self) -> IdealSide {
        self.side
    }

    pub fn elements(&self) -> &BTreeSet<ModElement> {
        &self.elements
    }

    pub fn into_elements(self) -> BTreeSet<ModElement> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &ModElement) -> bool {
        self.elements.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ModElement> {
        self.elements.iter()
    }
}

/// `Z_n`.
pub fn ring_zn(n: u64) -> Result<FiniteRing> {
    let shape = ModuleShape::cyclic(n)?;
    let one = ModElement::new(vec![1 % n]);
    FiniteRing::from_table(shape, vec![vec![one.clone()]], one)
}

/// Direct product with componentwise operations.
pub fn ring_product(r1: &FiniteRing, r2: &FiniteRing) -> Result<FiniteRing> {
    let shape = r1.shape.concat(&r2.shape);
    let (k1, k2) = (r1.rank(), r2.rank());
    let k = k1 + k2;
    let mut table = vec![vec![shape.zero(); k]; k];
    for i in 0..k1 {
        for j in 0..k1 {
            let mut c = r1.basis_product(i, j).to_vec();
            c.resize(k, 0);
            table[i][j] = ModElement::new(c);
        }
    }
    for i in 0..k2 {
        for j in 0..k2 {
            let mut c = vec![0; k1];
            c.extend_from_slice(r2.basis_product(i, j));
            table[k1 + i][k1 + j] = ModElement::new(c);
        }
    }
    let one = ModElement::concat([&r1.one, &r2.one]);
    FiniteRing::from_table(shape, table, one)
}

/// `t × t` matrices over `r`. Basis element `E_pq ⊗ e_i` has index
/// `(p·t + q)·k + i`.
pub fn ring_matrix(r: &FiniteRing, t: usize) -> Result<FiniteRing> {
    if t == 0 {
        return Err(Error::Invalid("matrix size must be at least 1".into()));
    }
    let k = r.rank();
    let shape = r.shape.repeat(t * t);
    crate::znmod::check_cap(shape.cardinality())?;
    let rank = shape.rank();
    let index = |p: usize, q: usize, i: usize| (p * t + q) * k + i;
    let mut table = vec![vec![shape.zero(); rank]; rank];
    for p in 0..t {
        for q in 0..t {
            for i in 0..k {
                for s in 0..t {
                    for j in 0..k {
                        // E_pq e_i · E_qs e_j = E_ps (e_i e_j)
                        let mut c = vec![0; rank];
                        for (l, &v) in r.basis_product(i, j).iter().enumerate() {
                            c[index(p, s, l)] = v;
                        }
                        table[index(p, q, i)][index(q, s, j)] = ModElement::new(c);
                    }
                }
            }
        }
    }
    let mut one = vec![0; rank];
    for p in 0..t {
        for (i, &v) in r.one.coords().iter().enumerate() {
            one[index(p, p, i)] = v;
        }
    }
    FiniteRing::from_table(shape, table, ModElement::new(one))
}

/// Build a ring from a user-supplied table; alias for [`FiniteRing::from_table`].
pub fn ring_from_table(
    shape: ModuleShape,
    mul_table: Vec<Vec<ModElement>>,
    one: ModElement,
) -> Result<FiniteRing> {
    FiniteRing::from_table(shape, mul_table, one)
}

/// The group algebra `Z_n G` of a group given by its Cayley table.
pub fn ring_group_algebra(n: u64, cayley: Vec<Vec<usize>>) -> Result<FiniteRing> {
    Ok(GroupAlgebra::new(n, cayley)?.into_ring())
}

/// A group algebra `Z_n G` that remembers its group, so that the involution
/// `g ↦ g⁻¹` is available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebra {
    ring: FiniteRing,
    cayley: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GroupAlgebra {
    pub fn new(n: u64, cayley: Vec<Vec<usize>>) -> Result<GroupAlgebra> {
        let g = cayley.len();
        if g == 0 {
            return Err(Error::InvalidGroup("empty group".into()));
        }
        if cayley.iter().any(|row| row.len() != g || row.iter().any(|&x| x >= g)) {
            return Err(Error::InvalidGroup("table is not a square table on 0..g".into()));
        }
        let identity = (0..g)
            .find(|&e| (0..g).all(|x| cayley[e][x] == x && cayley[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        for a in 0..g {
            for b in 0..g {
                for c in 0..g {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(g);
        for a in 0..g {
            let inv = (0..g)
                .find(|&b| cayley[a][b] == identity && cayley[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
            inverses.push(inv);
        }
        let shape = ModuleShape::new(n, vec![n; g])?;
        let table = (0..g)
            .map(|a| (0..g).map(|b| shape.basis(cayley[a][b])).collect())
            .collect();
        let ring = FiniteRing::from_table(shape.clone(), table, shape.basis(identity))?;
        Ok(GroupAlgebra { ring, cayley, identity, inverses })
    }

    /// The cyclic group `C_g` with `a · b = a + b mod g`.
    pub fn cyclic(n: u64, g: usize) -> Result<GroupAlgebra> {
        let cayley = (0..g).map(|a| (0..g).map(|b| (a + b) % g).collect()).collect();
        GroupAlgebra::new(n, cayley)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn into_ring(self) -> FiniteRing {
        self.ring
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse_of(&self, g: usize) -> usize {
        self.inverses[g]
    }

    /// `Σ a_g g ↦ Σ a_g g⁻¹`.
    pub fn theta(&self, a: &ModElement) -> ModElement {
        let mut out = vec![0; a.len()];
        for (g, &c) in a.coords().iter().enumerate() {
            out[self.inverses[g]] = c;
        }
        ModElement::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(c: &[u64]) -> ModElement {
        ModElement::new(c.to_vec())
    }

    fn set(v: &[&[u64]]) -> BTreeSet<ModElement> {
        v.iter().map(|c| el(c)).collect()
    }

    /// span{1, u, v} over Z_2 with all products of u, v zero.
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
    fn zn_basics() {
        let z4 = ring_zn(4).unwrap();
        assert_eq!(z4.one(), &el(&[1]));
        assert_eq!(z4.mul(&el(&[2]), &el(&[2])), el(&[0]));
        let z1 = ring_zn(1).unwrap();
        assert_eq!(z1.one(), &el(&[0]));
        assert_eq!(z1.cardinality(), 1);
        assert_eq!(ring_zn(2).unwrap().cardinality(), 2);
    }

    #[test]
    fn product_rings() {
        let r = ring_product(&ring_zn(2).unwrap(), &ring_zn(4).unwrap()).unwrap();
        assert_eq!(r.n(), 4);
        assert_eq!(r.shape().orders(), &[2, 4]);
        assert!(r.is_unit(&el(&[1, 1])).unwrap());
        assert!(!r.is_unit(&el(&[1, 2])).unwrap());
        // brute force: units of Z_2 x Z_4 are (1,1) and (1,3)
        assert_eq!(r.units().unwrap(), &set(&[&[1, 1], &[1, 3]]));

        let r3 = ring_product(&r, &ring_zn(3).unwrap()).unwrap();
        assert_eq!(r3.n(), 12);
        assert_eq!(r3.shape().orders(), &[2, 4, 3]);
    }

    #[test]
    fn matrix_ring() {
        let f2 = ring_zn(2).unwrap();
        let m2 = ring_matrix(&f2, 2).unwrap();
        assert_eq!(m2.cardinality(), 16);
        assert_eq!(m2.n(), 2);
        // basis order E11, E12, E21, E22
        let e11 = el(&[1, 0, 0, 0]);
        let e12 = el(&[0, 1, 0, 0]);
        assert_eq!(m2.mul(&e11, &e12), e12);
        assert_eq!(m2.mul(&e12, &e11), el(&[0, 0, 0, 0]));
        assert_eq!(ring_matrix(&ring_zn(4).unwrap(), 1).unwrap(), ring_zn(4).unwrap());
    }

    /// Oracle: a 2x2 matrix over F_2 is invertible iff ad - bc = 1.
    #[test]
    fn matrix_units_match_determinant() {
        let m2 = ring_matrix(&ring_zn(2).unwrap(), 2).unwrap();
        let by_det: BTreeSet<ModElement> = m2
            .elements()
            .unwrap()
            .into_iter()
            .filter(|m| {
                let c = m.coords();
                (c[0] * c[3] + c[1] * c[2]) % 2 == 1
            })
            .collect();
        assert_eq!(by_det.len(), 6);
        assert_eq!(m2.units().unwrap(), &by_det);
    }

    #[test]
    fn group_algebra_c2() {
        let ga = GroupAlgebra::cyclic(2, 2).unwrap();
        let r = ga.ring();
        let g = el(&[0, 1]);
        assert_eq!(r.mul(&g, &g), el(&[1, 0]));
        let one_plus_g = el(&[1, 1]);
        assert_eq!(r.mul(&one_plus_g, &one_plus_g), el(&[0, 0]));
        let trivial = ring_group_algebra(3, vec![vec![0]]).unwrap();
        assert_eq!(trivial, ring_zn(3).unwrap());
    }

    #[test]
    fn invalid_group_tables() {
        assert!(GroupAlgebra::new(2, vec![vec![0, 0], vec![0, 1]]).is_err());
        assert!(GroupAlgebra::new(2, vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(GroupAlgebra::new(2, vec![]).is_err());
    }

    #[test]
    fn table_validation() {
        assert_eq!(r8().cardinality(), 8);
        // e1·e1 = e2, e2·e2 = e2, others zero, identity e0: (e1 e1) e1 = e2 e1 = 0
        // while e1 (e1 e1) = e1 e2 = ... make e1 e2 = e1 to break associativity.
        let shape = ModuleShape::new(2, vec![2, 2, 2]).unwrap();
        let z = el(&[0, 0, 0]);
        let table = vec![
            vec![el(&[1, 0, 0]), el(&[0, 1, 0]), el(&[0, 0, 1])],
            vec![el(&[0, 1, 0]), el(&[0, 0, 1]), el(&[0, 1, 0])],
            vec![el(&[0, 0, 1]), z.clone(), z],
        ];
        let err = FiniteRing::from_table(shape, table, el(&[1, 0, 0])).unwrap_err();
        assert!(matches!(err, Error::NotAssociative(..)));

        let redundant = FiniteRing::from_table(
            ModuleShape::new(4, vec![4]).unwrap(),
            vec![vec![el(&[1])]],
            el(&[1]),
        )
        .unwrap();
        assert_eq!(redundant, ring_zn(4).unwrap());
    }

    #[test]
    fn characteristic_is_enforced() {
        // Z_2 presented with n = 4
        let err = FiniteRing::from_table(
            ModuleShape::new(4, vec![2]).unwrap(),
            vec![vec![el(&[1])]],
            el(&[1]),
        )
        .unwrap_err();
        assert_eq!(err, Error::Characteristic { expected: 4, found: 2 });
    }

    #[test]
    fn ill_defined_products_are_rejected() {
        // e0 of order 2 squaring to an element of order 4
        let err = FiniteRing::from_table(
            ModuleShape::new(4, vec![2, 4]).unwrap(),
            vec![vec![el(&[0, 1]), el(&[0, 0])], vec![el(&[0, 0]), el(&[0, 1])]],
            el(&[0, 1]),
        )
        .unwrap_err();
        assert_eq!(err, Error::IllDefinedProduct { i: 0, j: 0 });
    }

    #[test]
    fn radicals() {
        let z4 = ring_zn(4).unwrap();
        assert_eq!(z4.jacobson_radical().unwrap().elements(), &set(&[&[0], &[2]]));
        assert_eq!(ring_zn(2).unwrap().jacobson_radical().unwrap().len(), 1);
        let m2 = ring_matrix(&ring_zn(2).unwrap(), 2).unwrap();
        assert_eq!(m2.jacobson_radical().unwrap().len(), 1);
        assert_eq!(
            r8().jacobson_radical().unwrap().elements(),
            &set(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 1, 1]])
        );
    }

    #[test]
    fn socles() {
        let z4 = ring_zn(4).unwrap();
        assert_eq!(z4.socle(Side::Right).unwrap().elements(), &set(&[&[0], &[2]]));
        let f2 = ring_zn(2).unwrap();
        assert_eq!(f2.socle(Side::Left).unwrap().len(), 2);
        assert_eq!(f2.socle(Side::Right).unwrap().len(), 2);
        assert_eq!(
            r8().socle(Side::Right).unwrap().elements(),
            &set(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1], &[0, 1, 1]])
        );
    }

    #[test]
    fn socle_frobenius_test() {
        let cert = ring_zn(4).unwrap().frobenius_socle_certificate().unwrap();
        assert!(cert.is_frobenius());
        assert_eq!(cert.right_witness, Some(el(&[2])));
        assert_eq!(cert.left_witness, Some(el(&[2])));

        let cert = r8().frobenius_socle_certificate().unwrap();
        assert!(!cert.is_frobenius());
        assert_eq!(cert.right_socle_size, 4);
        assert_eq!(cert.radical_size, 4);

        let r = ring_product(&ring_zn(2).unwrap(), &ring_zn(4).unwrap()).unwrap();
        assert!(r.is_frobenius_socle().unwrap());
        assert!(ring_zn(1).unwrap().is_frobenius_socle().unwrap());
    }

    #[test]
    fn ideal_enumeration() {
        let z4 = ring_zn(4).unwrap();
        let ideals = z4.enumerate_ideals(IdealSide::Right).unwrap();
        assert_eq!(ideals.len(), 3);
        // F_2 x F_2 has four ideals
        let f2 = ring_zn(2).unwrap();
        let ff = ring_product(&f2, &f2).unwrap();
        assert_eq!(ff.enumerate_ideals(IdealSide::TwoSided).unwrap().len(), 4);
        // M_2(F_2): right ideals are 0, the whole ring, and one per line of F_2^2
        let m2 = ring_matrix(&f2, 2).unwrap();
        assert_eq!(m2.enumerate_ideals(IdealSide::Right).unwrap().len(), 5);
        assert_eq!(m2.enumerate_ideals(IdealSide::TwoSided).unwrap().len(), 2);
        for side in [IdealSide::Left, IdealSide::Right] {
            for ideal in m2.enumerate_ideals(side).unwrap() {
                assert!(m2.is_ideal(ideal.elements(), side));
            }
        }
    }

    #[test]
    fn radical_is_nilpotent() {
        for r in [ring_zn(8).unwrap(), r8(), ring_zn(12).unwrap()] {
            let j = r.jacobson_radical().unwrap().into_elements();
            let mut power = j.clone();
            let mut steps = 0;
            while power.len() > 1 {
                power = r.product_span(&power, &j);
                steps += 1;
                assert!(steps <= 8);
            }
            for x in &j {
                assert!(r.is_unit(&r.add(r.one(), x)).unwrap());
            }
        }
    }
}
