//! Ring-linear codes in `A^m`.
//!
//! Codes are stored fully enumerated. A code remembers which module structure
//! it was generated with ([`CodeSide`]), and duality keeps that bookkeeping
//! strict: the right orthogonal `C⊥ = {y : ⟨c, y⟩ = 0}` of a left code is a
//! right code, the left orthogonal `⊥C` of a right code is a left code, and
//! asking for the other side is an error rather than a silent convention
//! switch.
//!
//! Hamming weight enumerators are kept as integer count arrays
//! `a_w = #{c : wt(c) = w}`, and the MacWilliams transform
//! `W(X + (q − 1)Y, X − Y) / |C|` is expanded exactly on those counts.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finring::{close_under_sums, FiniteRing, GroupAlgebra, Ideal, Side};
use crate::frobenius::{orthogonal, AmbientForm, FrobeniusFunctional, KernelSide};
use crate::skewpoly::SkewQuotient;
use crate::znmod::{enumerate_module, span, ModElement, ModuleShape};

/// Module structure a code is closed under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeSide {
    Left,
    Right,
    Additive,
}

impl fmt::Display for CodeSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeSide::Left => "left",
            CodeSide::Right => "right",
            CodeSide::Additive => "additive",
        })
    }
}

impl From<Side> for CodeSide {
    fn from(side: Side) -> Self {
        match side {
            Side::Left => CodeSide::Left,
            Side::Right => CodeSide::Right,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    alphabet: FiniteRing,
    m: usize,
    side: CodeSide,
    generators: Vec<ModElement>,
    codewords: BTreeSet<ModElement>,
}

/// Scalar action of `a` on a vector of `A^m`, componentwise from `side`.
fn act(ring: &FiniteRing, side: Side, a: &ModElement, v: &ModElement) -> ModElement {
    let parts: Vec<ModElement> = v
        .blocks(ring.rank())
        .iter()
        .map(|c| match side {
            Side::Left => ring.mul(a, c),
            Side::Right => ring.mul(c, a),
        })
        .collect();
    ModElement::concat(&parts)
}

fn is_closed(ring: &FiniteRing, m: usize, side: CodeSide, set: &BTreeSet<ModElement>) -> bool {
    let shape = ring.shape().repeat(m);
    if !set.contains(&shape.zero()) {
        return false;
    }
    let additive = set.iter().all(|x| set.iter().all(|y| set.contains(&shape.add(x, y))));
    let basis = ring.shape().basis_elements();
    additive
        && match side {
            CodeSide::Additive => true,
            CodeSide::Left | CodeSide::Right => {
                let s = if side == CodeSide::Left { Side::Left } else { Side::Right };
                set.iter().all(|v| basis.iter().all(|a| set.contains(&act(ring, s, a, v))))
            }
        }
}

impl LinearCode {
    /// The submodule (or subgroup, for [`CodeSide::Additive`]) of `A^m`
    /// generated by `gens`.
    pub fn generate(
        alphabet: &FiniteRing,
        m: usize,
        gens: Vec<ModElement>,
        side: CodeSide,
    ) -> Result<LinearCode> {
        let shape = alphabet.shape().repeat(m);
        crate::znmod::check_cap(shape.cardinality())?;
        for g in &gens {
            shape.check(g)?;
        }
        let basis = alphabet.shape().basis_elements();
        let mut spanning = Vec::new();
        for g in &gens {
            spanning.push(g.clone());
            match side {
                CodeSide::Left => spanning.extend(basis.iter().map(|a| act(alphabet, Side::Left, a, g))),
                CodeSide::Right => spanning.extend(basis.iter().map(|a| act(alphabet, Side::Right, a, g))),
                CodeSide::Additive => {}
            }
        }
        let codewords = span(&spanning, &shape);
        Ok(LinearCode { alphabet: alphabet.clone(), m, side, generators: gens, codewords })
    }

    /// Wrap an enumerated set, verifying closure for `side`.
    pub fn from_codewords(
        alphabet: &FiniteRing,
        m: usize,
        side: CodeSide,
        codewords: BTreeSet<ModElement>,
    ) -> Result<LinearCode> {
        let shape = alphabet.shape().repeat(m);
        for c in &codewords {
            shape.check(c)?;
        }
        if !is_closed(alphabet, m, side, &codewords) {
            return Err(Error::Invalid(format!("codeword set is not a {side} code")));
        }
        let generators = codewords.iter().cloned().collect();
        Ok(LinearCode { alphabet: alphabet.clone(), m, side, generators, codewords })
    }

    /// An ideal of `A` as a code of length 1.
    pub fn from_ideal(alphabet: &FiniteRing, ideal: &Ideal) -> Result<LinearCode> {
        let side = match ideal.side() {
            crate::finring::IdealSide::Left => CodeSide::Left,
            crate::finring::IdealSide::Right => CodeSide::Right,
            crate::finring::IdealSide::TwoSided => CodeSide::Left,
        };
        LinearCode::from_codewords(alphabet, 1, side, ideal.elements().clone())
    }

    /// Retag the code with another side after verifying closure.
    pub fn coerce(&self, side: CodeSide) -> Result<LinearCode> {
        LinearCode::from_codewords(&self.alphabet, self.m, side, self.codewords.clone())
    }

    pub fn alphabet(&self) -> &FiniteRing {
        &self.alphabet
    }

    pub fn length(&self) -> usize {
        self.m
    }

    pub fn side(&self) -> CodeSide {
        self.side
    }

    pub fn generators(&self) -> &[ModElement] {
        &self.generators
    }

    pub fn codewords(&self) -> &BTreeSet<ModElement> {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn contains(&self, v: &ModElement) -> bool {
        self.codewords.contains(v)
    }

    pub fn ambient_shape(&self) -> ModuleShape {
        self.alphabet.shape().repeat(self.m)
    }

    /// Equality of codeword sets; refuses to compare codes of different sides.
    pub fn same_code(&self, other: &LinearCode) -> Result<bool> {
        if self.side != other.side {
            return Err(Error::SideMismatch(format!(
                "cannot compare a {} code with a {} code",
                self.side, other.side
            )));
        }
        Ok(self.alphabet == other.alphabet && self.m == other.m && self.codewords == other.codewords)
    }
}

/// Number of nonzero components of a vector of `A^m`.
pub fn hamming_weight(alphabet: &FiniteRing, v: &ModElement) -> usize {
    v.blocks(alphabet.rank()).iter().filter(|c| !c.is_zero()).count()
}

/// Counts `a_0..a_m` of codewords by Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEnumerator {
    counts: Vec<u128>,
}

impl WeightEnumerator {
    pub fn from_counts(counts: Vec<u128>) -> Self {
        WeightEnumerator { counts }
    }

    pub fn length(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }
}

/// Prints as a polynomial in `X` and `Y`, e.g. `X^2 + XY`.
impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.length();
        let mut terms = Vec::new();
        for (w, &a) in self.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let mut term = String::new();
            if a != 1 || (m == 0) {
                term.push_str(&a.to_string());
            }
            for (var, exp) in [("X", m - w), ("Y", w)] {
                match exp {
                    0 => {}
                    1 => term.push_str(var),
                    e => term.push_str(&format!("{var}^{e}")),
                }
            }
            if term.is_empty() {
                term.push('1');
            }
            terms.push(term);
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

pub fn weight_enumerator(code: &LinearCode) -> WeightEnumerator {
    let mut counts = vec![0u128; code.m + 1];
    for c in &code.codewords {
        counts[hamming_weight(&code.alphabet, c)] += 1;
    }
    WeightEnumerator { counts }
}

/// The orthogonal of `code` on `side` with respect to `form`.
///
/// `Side::Right` gives `C⊥ = {y : ⟨c, y⟩ = 0}`, a right code, and is the
/// dual of left and additive codes; `Side::Left` gives `⊥C`, a left code,
/// for right and additive codes.
pub fn dual(code: &LinearCode, form: &AmbientForm, side: Side) -> Result<LinearCode> {
    check_form(code, form)?;
    match (code.side, side) {
        (CodeSide::Left, Side::Left) | (CodeSide::Right, Side::Right) => {
            return Err(Error::SideMismatch(format!(
                "the {side:?} orthogonal is not the dual of a {} code",
                code.side
            )))
        }
        _ => {}
    }
    if !form.is_nondegenerate(KernelSide::Both)? {
        return Err(Error::DegenerateForm);
    }
    let codewords = orthogonal(form, &code.codewords, side)?;
    let generators = codewords.iter().cloned().collect();
    Ok(LinearCode {
        alphabet: code.alphabet.clone(),
        m: code.m,
        side: side.into(),
        generators,
        codewords,
    })
}

/// [`dual`] on the side determined by the code: right for left and additive
/// codes, left for right codes.
pub fn natural_dual(code: &LinearCode, form: &AmbientForm) -> Result<LinearCode> {
    dual(code, form, natural_side(code))
}

/// Side of the orthogonal that serves as the dual of `code`.
pub fn natural_side(code: &LinearCode) -> Side {
    match code.side {
        CodeSide::Right => Side::Left,
        CodeSide::Left | CodeSide::Additive => Side::Right,
    }
}

/// Dual under `[x, y] = Σ x_i y_i`.
pub fn euclidean_dual(code: &LinearCode) -> Result<LinearCode> {
    natural_dual(code, &AmbientForm::identity(&code.alphabet, code.m)?)
}

fn check_form(code: &LinearCode, form: &AmbientForm) -> Result<()> {
    if form.ring() != code.alphabet() || form.length() != code.m {
        return Err(Error::Invalid("form does not match the code's alphabet and length".into()));
    }
    Ok(())
}

/// Exactly one nonzero entry per row and per column, each a unit.
pub fn is_monomial(ring: &FiniteRing, q: &[Vec<ModElement>]) -> Result<bool> {
    let m = q.len();
    let mut column_hits = vec![0usize; m];
    for row in q {
        if row.len() != m {
            return Err(Error::Invalid("matrix is not square".into()));
        }
        let mut hits = 0;
        for (j, entry) in row.iter().enumerate() {
            if !entry.is_zero() {
                if !ring.is_unit(entry)? {
                    return Ok(false);
                }
                hits += 1;
                column_hits[j] += 1;
            }
        }
        if hits != 1 {
            return Ok(false);
        }
    }
    Ok(column_hits.iter().all(|&h| h == 1))
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// `W(X + (q − 1)Y, X − Y) / c`, expanded exactly.
pub fn macwilliams_transform(w: &WeightEnumerator, q: u128, c: u128) -> Result<WeightEnumerator> {
    if c == 0 {
        return Err(Error::Invalid("code size must be positive".into()));
    }
    let m = w.length();
    let q1 = q as i128 - 1;
    let mut out = vec![0i128; m + 1];
    for (wt, &a) in w.counts.iter().enumerate() {
        if a == 0 {
            continue;
        }
        // (X + (q-1)Y)^{m-wt} (X - Y)^wt
        for s in 0..=(m - wt) {
            let left = binomial(m - wt, s) * q1.pow(s as u32);
            for t in 0..=wt {
                let sign = if t % 2 == 0 { 1 } else { -1 };
                out[s + t] += a as i128 * left * sign * binomial(wt, t);
            }
        }
    }
    let counts = out
        .into_iter()
        .map(|v| {
            if v % c as i128 != 0 || v < 0 {
                Err(Error::NotIntegral { coefficient: v, divisor: c })
            } else {
                Ok((v / c as i128) as u128)
            }
        })
        .collect::<Result<Vec<u128>>>()?;
    Ok(WeightEnumerator { counts })
}

/// Both sides of the MacWilliams identity for one code and form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacWilliamsCheck {
    pub holds: bool,
    pub monomial: bool,
    pub code: WeightEnumerator,
    /// Enumerator of the dual, computed directly.
    pub dual: WeightEnumerator,
    /// `W_C(X + (|A| − 1)Y, X − Y) / |C|`; `None` when not integral.
    pub transformed: Option<WeightEnumerator>,
    pub dual_size: usize,
}

pub fn macwilliams_holds(code: &LinearCode, form: &AmbientForm) -> Result<MacWilliamsCheck> {
    macwilliams_holds_on(code, form, natural_side(code))
}

/// [`macwilliams_holds`] against the orthogonal on an explicit side.
pub fn macwilliams_holds_on(code: &LinearCode, form: &AmbientForm, side: Side) -> Result<MacWilliamsCheck> {
    let d = dual(code, form, side)?;
    let w_code = weight_enumerator(code);
    let w_dual = weight_enumerator(&d);
    let transformed =
        match macwilliams_transform(&w_code, code.alphabet.cardinality(), code.len() as u128) {
            Ok(t) => Some(t),
            Err(Error::NotIntegral { .. }) => None,
            Err(e) => return Err(e),
        };
    Ok(MacWilliamsCheck {
        holds: transformed.as_ref() == Some(&w_dual),
        monomial: is_monomial(&code.alphabet, form.matrix())?,
        code: w_code,
        dual: w_dual,
        transformed,
        dual_size: d.len(),
    })
}

/// Every left (or right, or additive) code of length `m` over `alphabet`.
pub fn enumerate_codes(alphabet: &FiniteRing, m: usize, side: CodeSide) -> Result<Vec<LinearCode>> {
    let shape = alphabet.shape().repeat(m);
    let cyclic: BTreeSet<BTreeSet<ModElement>> = enumerate_module(&shape)?
        .map(|v| Ok(LinearCode::generate(alphabet, m, vec![v], side)?.codewords))
        .collect::<Result<_>>()?;
    Ok(close_under_sums(&cyclic, &shape)
        .into_iter()
        .map(|codewords| LinearCode {
            alphabet: alphabet.clone(),
            m,
            side,
            generators: codewords.iter().cloned().collect(),
            codewords,
        })
        .collect())
}

fn check_quotient(code: &LinearCode, quotient: &SkewQuotient) -> Result<()> {
    if code.alphabet() != quotient.base() || code.length() != quotient.degree() {
        return Err(Error::Invalid("code does not live in the quotient ring".into()));
    }
    Ok(())
}

/// Closure under the left `A`-action and left multiplication by `x`.
fn closed_under_x(code: &LinearCode, quotient: &SkewQuotient) -> bool {
    let base = quotient.base();
    let m = quotient.degree();
    let mut x = vec![base.zero(); m];
    if m > 1 {
        x[1] = base.one().clone();
    } else {
        // x ≡ −f_0 when m = 1
        x[0] = base.neg(&quotient.modulus()[0]);
    }
    is_closed(base, m, CodeSide::Left, &code.codewords)
        && code.codewords.iter().all(|c| {
            let xc = quotient.from_poly(&quotient.mul(&x, &quotient.to_poly(c)));
            code.codewords.contains(&xc)
        })
}

/// Closure under left multiplication by every element of the quotient ring.
fn is_left_ideal_of_quotient(code: &LinearCode, quotient: &SkewQuotient) -> Result<bool> {
    let ring = quotient.as_finite_ring()?;
    Ok(ring.is_ideal(&code.codewords, crate::finring::IdealSide::Left))
}

/// Whether `code`, read as a set of quotient-ring elements, is a left ideal
/// of `A[x; σ]/Sf`.
///
/// Decided twice, by `A`-linearity plus `x`-closure and by closure under the
/// whole quotient ring; disagreement is reported as an internal error.
pub fn is_sigma_cyclic(code: &LinearCode, quotient: &SkewQuotient) -> Result<bool> {
    check_quotient(code, quotient)?;
    let by_x = closed_under_x(code, quotient);
    let by_ring = is_left_ideal_of_quotient(code, quotient)?;
    if by_x != by_ring {
        return Err(Error::Internal(format!(
            "x-closure ({by_x}) and left-ideal closure ({by_ring}) disagree"
        )));
    }
    Ok(by_x)
}

/// Result of comparing the Euclidean dual of a σ-cyclic code with the
/// orthogonal of its θ-image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaCyclicReport {
    /// `V⊥ = ⊥θ(V)` under `⟨g, h⟩ = ε((gh)_0)`.
    pub dual_matches_theta_orthogonal: bool,
    pub dual_is_sigma_cyclic: bool,
    pub code_size: usize,
    pub dual: BTreeSet<ModElement>,
}

impl SigmaCyclicReport {
    pub fn passed(&self) -> bool {
        self.dual_matches_theta_orthogonal && self.dual_is_sigma_cyclic
    }
}

pub fn sigma_cyclic_dual_check(
    code: &LinearCode,
    quotient: &SkewQuotient,
    epsilon: &FrobeniusFunctional,
) -> Result<SigmaCyclicReport> {
    check_quotient(code, quotient)?;
    if !quotient.is_x_pow_minus_one() {
        return Err(Error::UnsupportedModulus);
    }
    if epsilon.ring() != quotient.base() {
        return Err(Error::Invalid("functional is not defined on the base ring".into()));
    }
    if !is_sigma_cyclic(code, quotient)? {
        return Err(Error::Invalid("code is not σ-cyclic".into()));
    }
    let base = quotient.base();
    let m = quotient.degree();
    // V⊥ = {f : [f, v] = 0 for all v}
    let euclid = AmbientForm::identity(base, m)?;
    let dual = orthogonal(&euclid, &code.codewords, Side::Left)?;

    let theta_image: Vec<ModElement> = code
        .codewords
        .iter()
        .map(|v| quotient.theta_element(v))
        .collect::<Result<_>>()?;
    let theta_orth: BTreeSet<ModElement> = enumerate_module(&code.ambient_shape())?
        .filter(|f| {
            let fp = quotient.to_poly(f);
            theta_image
                .iter()
                .all(|t| epsilon.eval(&quotient.mul(&fp, &quotient.to_poly(t))[0]) == 0)
        })
        .collect();

    let dual_code = LinearCode::from_codewords(base, m, CodeSide::Additive, dual.clone())?;
    let dual_is_sigma_cyclic = is_sigma_cyclic(&dual_code, quotient)?;
    Ok(SigmaCyclicReport {
        dual_matches_theta_orthogonal: dual == theta_orth,
        dual_is_sigma_cyclic,
        code_size: code.len(),
        dual,
    })
}

/// Result of the group-algebra duality check `S⊥ = θ(S^{⊥_r})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraReport {
    pub dual_matches_theta_rorth: bool,
    pub dual_is_left_ideal: bool,
    pub dual: BTreeSet<ModElement>,
}

impl GroupAlgebraReport {
    pub fn passed(&self) -> bool {
        self.dual_matches_theta_rorth && self.dual_is_left_ideal
    }
}

/// For a left ideal `C` of `Z_n G`: the Euclidean dual over `Z_n` on the
/// group basis equals `θ` applied to the right orthogonal of `C` under
/// `⟨a, b⟩ = (ab)_e = Σ a_g b_{g⁻¹}`, and is again a left ideal.
pub fn group_algebra_dual_check(algebra: &GroupAlgebra, code: &LinearCode) -> Result<GroupAlgebraReport> {
    let ring = algebra.ring();
    if code.alphabet() != ring || code.length() != 1 {
        return Err(Error::NotGroupAlgebra);
    }
    if !ring.is_ideal(code.codewords(), crate::finring::IdealSide::Left) {
        return Err(Error::Invalid("code is not a left ideal".into()));
    }
    let n = ring.n();
    let identity = algebra.identity();
    let elements = ring.elements()?;
    let euclidean_dual: BTreeSet<ModElement> = elements
        .iter()
        .filter(|b| {
            code.codewords().iter().all(|s| {
                s.coords().iter().zip(b.coords()).fold(0, |acc, (&x, &y)| (acc + x * y) % n) == 0
            })
        })
        .cloned()
        .collect();
    let rorth: Vec<&ModElement> = elements
        .iter()
        .filter(|b| code.codewords().iter().all(|s| ring.mul(s, b).coords()[identity] == 0))
        .collect();
    let theta_rorth: BTreeSet<ModElement> = rorth.into_iter().map(|b| algebra.theta(b)).collect();
    Ok(GroupAlgebraReport {
        dual_matches_theta_rorth: euclidean_dual == theta_rorth,
        dual_is_left_ideal: ring.is_ideal(&euclidean_dual, crate::finring::IdealSide::Left),
        dual: euclidean_dual,
    })
}
