//! Exact arithmetic on finite modules `Z_{d_1} ⊕ … ⊕ Z_{d_k}` over `Z_n`.
//!
//! Every module that appears in this crate (rings, their duals, ambient code
//! spaces `A^m`) is presented as such a direct sum with a distinguished basis.
//! Elements are dense coordinate vectors. Enumeration is lexicographic in the
//! coordinates, first coordinate most significant, so that the position of an
//! element in [`enumerate_module`] equals [`ModuleShape::index_of`].

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the number of elements any exhaustive scan may visit.
pub const DEFAULT_CAP: usize = 1 << 20;

static CAP: AtomicUsize = AtomicUsize::new(DEFAULT_CAP);

/// Current enumeration cap.
pub fn enumeration_cap() -> usize {
    CAP.load(Ordering::Relaxed)
}

/// Replace the process-wide enumeration cap.
pub fn set_enumeration_cap(cap: usize) {
    CAP.store(cap, Ordering::Relaxed);
}

pub(crate) fn check_cap(size: u128) -> Result<()> {
    let cap = enumeration_cap();
    if size > cap as u128 {
        Err(Error::EnumerationTooLarge { size, cap })
    } else {
        Ok(())
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Coordinates of an element of a [`ModuleShape`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModElement {
    coords: Vec<u64>,
}

impl ModElement {
    pub fn new(coords: Vec<u64>) -> Self {
        ModElement { coords }
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Consecutive blocks of `width` coordinates, e.g. the components of a
    /// vector in `A^m` when `width` is the rank of `A`.
    pub fn blocks(&self, width: usize) -> Vec<ModElement> {
        if width == 0 {
            return Vec::new();
        }
        self.coords
            .chunks(width)
            .map(|c| ModElement::new(c.to_vec()))
            .collect()
    }

    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a ModElement>) -> ModElement {
        ModElement::new(parts.into_iter().flat_map(|p| p.coords.iter().copied()).collect())
    }
}

impl fmt::Debug for ModElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl From<Vec<u64>> for ModElement {
    fn from(coords: Vec<u64>) -> Self {
        ModElement::new(coords)
    }
}

impl<const K: usize> From<[u64; K]> for ModElement {
    fn from(coords: [u64; K]) -> Self {
        ModElement::new(coords.to_vec())
    }
}

/// The additive group `Z_{d_1} ⊕ … ⊕ Z_{d_k}` with each `d_i | n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleShape {
    n: u64,
    orders: Vec<u64>,
}

impl ModuleShape {
    pub fn new(n: u64, orders: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidShape("characteristic must be positive".into()));
        }
        if n > u32::MAX as u64 {
            return Err(Error::InvalidShape(format!("characteristic {n} is too large")));
        }
        for &d in &orders {
            if d == 0 || n % d != 0 {
                return Err(Error::InvalidShape(format!("order {d} does not divide {n}")));
            }
        }
        Ok(ModuleShape { n, orders })
    }

    /// `Z_n` itself.
    pub fn cyclic(n: u64) -> Result<Self> {
        ModuleShape::new(n, vec![n])
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn cardinality(&self) -> u128 {
        self.orders.iter().map(|&d| d as u128).product()
    }

    /// Direct sum of `m` copies of this shape.
    pub fn repeat(&self, m: usize) -> ModuleShape {
        let mut orders = Vec::with_capacity(self.rank() * m);
        for _ in 0..m {
            orders.extend_from_slice(&self.orders);
        }
        ModuleShape { n: self.n, orders }
    }

    /// Direct sum with another shape; the characteristic becomes the lcm.
    pub fn concat(&self, other: &ModuleShape) -> ModuleShape {
        let mut orders = self.orders.clone();
        orders.extend_from_slice(&other.orders);
        ModuleShape { n: lcm(self.n, other.n), orders }
    }

    pub fn zero(&self) -> ModElement {
        ModElement::new(vec![0; self.rank()])
    }

    /// The `i`-th basis vector.
    pub fn basis(&self, i: usize) -> ModElement {
        let mut c = vec![0; self.rank()];
        c[i] = 1 % self.orders[i];
        ModElement::new(c)
    }

    pub fn basis_elements(&self) -> Vec<ModElement> {
        (0..self.rank()).map(|i| self.basis(i)).collect()
    }

    pub fn contains(&self, x: &ModElement) -> bool {
        x.len() == self.rank() && x.coords.iter().zip(&self.orders).all(|(&c, &d)| c < d)
    }

    pub fn check(&self, x: &ModElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch { element: x.coords.clone(), orders: self.orders.clone() })
        }
    }

    /// Reduce arbitrary integer coordinates into the shape.
    pub fn reduce(&self, coords: &[i64]) -> Result<ModElement> {
        if coords.len() != self.rank() {
            return Err(Error::ShapeMismatch {
                element: coords.iter().map(|&c| c as u64).collect(),
                orders: self.orders.clone(),
            });
        }
        Ok(ModElement::new(
            coords
                .iter()
                .zip(&self.orders)
                .map(|(&c, &d)| c.rem_euclid(d as i64) as u64)
                .collect(),
        ))
    }

    pub fn add(&self, a: &ModElement, b: &ModElement) -> ModElement {
        ModElement::new(
            a.coords
                .iter()
                .zip(&b.coords)
                .zip(&self.orders)
                .map(|((&x, &y), &d)| (x + y) % d)
                .collect(),
        )
    }

    pub fn neg(&self, a: &ModElement) -> ModElement {
        ModElement::new(a.coords.iter().zip(&self.orders).map(|(&x, &d)| (d - x) % d).collect())
    }

    pub fn sub(&self, a: &ModElement, b: &ModElement) -> ModElement {
        self.add(a, &self.neg(b))
    }

    /// Integer multiple `c · a`.
    pub fn scale(&self, c: u64, a: &ModElement) -> ModElement {
        ModElement::new(
            a.coords
                .iter()
                .zip(&self.orders)
                .map(|(&x, &d)| ((c % d) * x) % d)
                .collect(),
        )
    }

    /// Additive order of `a`.
    pub fn additive_order(&self, a: &ModElement) -> u64 {
        a.coords
            .iter()
            .zip(&self.orders)
            .fold(1, |acc, (&x, &d)| lcm(acc, d / gcd(x, d)))
    }

    /// Position of `a` in lexicographic enumeration order.
    pub fn index_of(&self, a: &ModElement) -> usize {
        a.coords
            .iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&x, &d)| acc * d as usize + x as usize)
    }

    pub fn element_at(&self, mut index: usize) -> ModElement {
        let mut coords = vec![0; self.rank()];
        for (c, &d) in coords.iter_mut().zip(&self.orders).rev() {
            *c = (index % d as usize) as u64;
            index /= d as usize;
        }
        ModElement::new(coords)
    }

    /// All elements, lexicographically; fails if the shape exceeds the cap.
    pub fn elements(&self) -> Result<ModuleIter> {
        enumerate_module(self)
    }
}

/// Lexicographic iterator over a [`ModuleShape`].
#[derive(Clone, Debug)]
pub struct ModuleIter {
    orders: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl Iterator for ModuleIter {
    type Item = ModElement;

    fn next(&mut self) -> Option<ModElement> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.orders[i] {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(ModElement::new(current))
    }
}

/// Every element of the shape exactly once, in lexicographic order.
pub fn enumerate_module(shape: &ModuleShape) -> Result<ModuleIter> {
    check_cap(shape.cardinality())?;
    Ok(ModuleIter { orders: shape.orders.clone(), next: Some(vec![0; shape.rank()]) })
}

/// A `Z_n`-linear form `x ↦ Σ weights[i]·x_i mod n`.
///
/// Well defined exactly when `weights[i]·d_i ≡ 0 (mod n)` for every `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ZnLinearForm {
    n: u64,
    weights: Vec<u64>,
}

impl ZnLinearForm {
    pub fn new(shape: &ModuleShape, weights: Vec<u64>) -> Result<Self> {
        let n = shape.n();
        if weights.len() != shape.rank() {
            return Err(Error::InvalidLinearForm);
        }
        for (&w, &d) in weights.iter().zip(shape.orders()) {
            if w >= n || (w * d) % n != 0 {
                return Err(Error::InvalidLinearForm);
            }
        }
        Ok(ZnLinearForm { n, weights })
    }

    pub fn zero(shape: &ModuleShape) -> Self {
        ZnLinearForm { n: shape.n(), weights: vec![0; shape.rank()] }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn eval(&self, x: &ModElement) -> u64 {
        self.weights
            .iter()
            .zip(x.coords())
            .fold(0, |acc, (&w, &c)| (acc + w * c) % self.n)
    }
}

impl fmt::Debug for ZnLinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZnLinearForm{:?} mod {}", self.weights, self.n)
    }
}

/// Every linear form `shape → Z_n`, lexicographic in the weight vector.
///
/// The weights at position `i` run over the multiples of `n / d_i`, so the
/// count equals the cardinality of the shape.
pub fn enumerate_forms(shape: &ModuleShape) -> Result<impl Iterator<Item = ZnLinearForm>> {
    let steps: Vec<u64> = shape.orders().iter().map(|&d| shape.n() / d).collect();
    let n = shape.n();
    Ok(enumerate_module(shape)?.map(move |t| ZnLinearForm {
        n,
        weights: t.coords().iter().zip(&steps).map(|(&c, &s)| c * s).collect(),
    }))
}

/// The subgroup generated by `gens`.
pub fn span<'a>(
    gens: impl IntoIterator<Item = &'a ModElement>,
    shape: &ModuleShape,
) -> BTreeSet<ModElement> {
    let mut group: BTreeSet<ModElement> = BTreeSet::new();
    group.insert(shape.zero());
    extend_span(&mut group, gens, shape);
    group
}

/// Grow the subgroup `group` in place until it contains every generator.
pub fn extend_span<'a>(
    group: &mut BTreeSet<ModElement>,
    gens: impl IntoIterator<Item = &'a ModElement>,
    shape: &ModuleShape,
) {
    for g in gens {
        if group.contains(g) {
            continue;
        }
        // group + <g> is the union of the cosets group + t·g, t < r, where r
        // is the least positive integer with r·g in group.
        let base: Vec<ModElement> = group.iter().cloned().collect();
        let mut multiple = g.clone();
        while !group.contains(&multiple) {
            for s in &base {
                group.insert(shape.add(s, &multiple));
            }
            multiple = shape.add(&multiple, g);
        }
    }
}

/// All `x` in `left` with `pairing(x, y) = 0` for every `y` in `right`.
pub fn kernel_elements<F>(
    pairing: F,
    left: &ModuleShape,
    right: &ModuleShape,
) -> Result<BTreeSet<ModElement>>
where
    F: Fn(&ModElement, &ModElement) -> u64,
{
    let rights: Vec<ModElement> = enumerate_module(right)?.collect();
    Ok(enumerate_module(left)?
        .filter(|x| rights.iter().all(|y| pairing(x, y) == 0))
        .collect())
}
