//! JSON definition files for rings, codes and ambient forms.
//!
//! A ring file is one JSON object whose `kind` selects the construction:
//!
//! ```json
//! { "kind": "zn", "n": 4 }
//! { "kind": "table", "orders": [2, 4], "mul": [[[1,0],[0,0]],[[0,0],[0,1]]], "one": [1,1] }
//! { "kind": "product", "factors": [{ "kind": "zn", "n": 2 }, { "kind": "zn", "n": 4 }] }
//! { "kind": "matrix", "base": { "kind": "zn", "n": 2 }, "size": 2 }
//! { "kind": "group_algebra", "n": 2, "cayley": [[0,1],[1,0]] }
//! { "kind": "skew_quotient", "base": { ... }, "sigma_images": [[1,0],[1,1]], "f_coeffs": [[1,0],[0,0],[1,0]] }
//! ```
//!
//! Elements are coordinate arrays, `mul[i][j]` is the product of basis
//! elements `i` and `j`, `sigma_images[i]` is the image of basis element `i`,
//! and `f_coeffs` lists `f_0, ..., f_m` from the constant term up, leading
//! coefficient included. A `table` may give `n` explicitly; otherwise it is
//! the lcm of `orders`.
//!
//! Code files hold `length`, `side` and `generators`, each generator being an
//! array of `length` elements. Form files hold a square `matrix` of elements.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::codes::{CodeSide, LinearCode};
use crate::error::{Error, Result};
use crate::finring::{ring_matrix, ring_product, ring_zn, FiniteRing, GroupAlgebra};
use crate::frobenius::AmbientForm;
use crate::skewpoly::{RingAutomorphism, SkewQuotient};
use crate::znmod::{lcm, ModElement, ModuleShape};

/// Parse a JSON document, reporting syntax and schema errors with their
/// line and column.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let mut message = e.to_string();
        if let Some(idx) = message.rfind(" at line ") {
            message.truncate(idx);
        }
        Error::Parse { line: e.line(), column: e.column(), message }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingSpec {
    Zn {
        n: u64,
    },
    Table {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<u64>,
        orders: Vec<u64>,
        mul: Vec<Vec<Vec<u64>>>,
        one: Vec<u64>,
    },
    Product {
        factors: Vec<RingSpec>,
    },
    Matrix {
        base: Box<RingSpec>,
        size: usize,
    },
    GroupAlgebra {
        n: u64,
        cayley: Vec<Vec<usize>>,
    },
    SkewQuotient {
        base: Box<RingSpec>,
        sigma_images: Vec<Vec<u64>>,
        f_coeffs: Vec<Vec<u64>>,
    },
}

fn elements(raw: &[Vec<u64>]) -> Vec<ModElement> {
    raw.iter().map(|c| ModElement::new(c.clone())).collect()
}

impl RingSpec {
    pub fn from_json(text: &str) -> Result<RingSpec> {
        parse_json(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ring specs always serialize")
    }

    /// Build and validate the ring.
    pub fn build(&self) -> Result<FiniteRing> {
        match self {
            RingSpec::Zn { n } => ring_zn(*n),
            RingSpec::Table { n, orders, mul, one } => {
                let n = n.unwrap_or_else(|| orders.iter().fold(1, |acc, &d| lcm(acc, d)));
                let shape = ModuleShape::new(n, orders.clone())?;
                let table = mul.iter().map(|row| elements(row)).collect();
                FiniteRing::from_table(shape, table, ModElement::new(one.clone()))
            }
            RingSpec::Product { factors } => {
                let mut iter = factors.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| Error::Invalid("a product needs at least one factor".into()))?
                    .build()?;
                iter.try_fold(first, |acc, spec| ring_product(&acc, &spec.build()?))
            }
            RingSpec::Matrix { base, size } => ring_matrix(&base.build()?, *size),
            RingSpec::GroupAlgebra { .. } => Ok(self.group_algebra().expect("kind checked")?.into_ring()),
            RingSpec::SkewQuotient { .. } => {
                let (sigma, f) = self.skew_parts()?;
                SkewQuotient::new(sigma, f)?.as_finite_ring()
            }
        }
    }

    /// The group algebra with its group, for `group_algebra` specs.
    pub fn group_algebra(&self) -> Option<Result<GroupAlgebra>> {
        match self {
            RingSpec::GroupAlgebra { n, cayley } => Some(GroupAlgebra::new(*n, cayley.clone())),
            _ => None,
        }
    }

    /// The automorphism and modulus of a `skew_quotient` spec, validated as
    /// an automorphism but not yet checked for two-sidedness.
    pub fn skew_parts(&self) -> Result<(RingAutomorphism, Vec<ModElement>)> {
        match self {
            RingSpec::SkewQuotient { base, sigma_images, f_coeffs } => {
                let ring = base.build()?;
                let sigma = RingAutomorphism::new(&ring, elements(sigma_images))?;
                let f = elements(f_coeffs);
                for c in &f {
                    ring.shape().check(c)?;
                }
                Ok((sigma, f))
            }
            _ => Err(Error::Invalid("expected a skew_quotient ring spec".into())),
        }
    }

    /// A `table` spec presenting `ring`.
    pub fn from_ring(ring: &FiniteRing) -> RingSpec {
        RingSpec::Table {
            n: Some(ring.n()),
            orders: ring.shape().orders().to_vec(),
            mul: ring
                .mul_table()
                .into_iter()
                .map(|row| row.into_iter().map(ModElement::into_coords).collect())
                .collect(),
            one: ring.one().coords().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub length: usize,
    #[serde(default = "default_side")]
    pub side: CodeSide,
    pub generators: Vec<Vec<Vec<u64>>>,
}

fn default_side() -> CodeSide {
    CodeSide::Left
}

impl CodeSpec {
    pub fn from_json(text: &str) -> Result<CodeSpec> {
        parse_json(text)
    }

    pub fn build(&self, alphabet: &FiniteRing) -> Result<LinearCode> {
        let gens = self
            .generators
            .iter()
            .map(|g| {
                if g.len() != self.length {
                    return Err(Error::Invalid(format!(
                        "generator has {} components, expected {}",
                        g.len(),
                        self.length
                    )));
                }
                let v = ModElement::concat(&elements(g));
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        LinearCode::generate(alphabet, self.length, gens, self.side)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormSpec {
    pub matrix: Vec<Vec<Vec<u64>>>,
}

impl FormSpec {
    pub fn from_json(text: &str) -> Result<FormSpec> {
        parse_json(text)
    }

    pub fn build(&self, ring: &FiniteRing) -> Result<AmbientForm> {
        AmbientForm::new(ring, self.matrix.iter().map(|row| elements(row)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn every_kind_builds() {
        let cases = [
            (r#"{"kind":"zn","n":4}"#, 4u128),
            (
                r#"{"kind":"table","orders":[2,4],"mul":[[[1,0],[0,0]],[[0,0],[0,1]]],"one":[1,1]}"#,
                8,
            ),
            (r#"{"kind":"product","factors":[{"kind":"zn","n":2},{"kind":"zn","n":4}]}"#, 8),
            (r#"{"kind":"matrix","base":{"kind":"zn","n":2},"size":2}"#, 16),
            (r#"{"kind":"group_algebra","n":3,"cayley":[[0,1,2],[1,2,0],[2,0,1]]}"#, 27),
            (
                r#"{"kind":"skew_quotient","base":{"kind":"zn","n":2},"sigma_images":[[1]],"f_coeffs":[[1],[0],[0],[1]]}"#,
                8,
            ),
        ];
        for (text, size) in cases {
            let ring = RingSpec::from_json(text).unwrap().build().unwrap();
            assert_eq!(ring.cardinality(), size, "{text}");
        }
        let table = RingSpec::from_json(cases[1].0).unwrap().build().unwrap();
        assert_eq!(table, corpus::z2_times_z4());
    }

    #[test]
    fn table_export_round_trips() {
        for (name, ring) in corpus::frobenius_corpus() {
            let spec = RingSpec::from_ring(&ring);
            let back = RingSpec::from_json(&spec.to_json()).unwrap();
            assert_eq!(back.build().unwrap(), ring, "{name}");
        }
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = RingSpec::from_json("{\n  \"kind\": \"zn\",\n  \"n\": 4,,\n}").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(RingSpec::from_json(r#"{"kind":"ring"}"#), Err(Error::Parse { .. })));
    }

    #[test]
    fn broken_table_reports_triple() {
        // (e_2 e_2) e_2 = e_1 but e_2 (e_2 e_2) = 0
        let text = r#"{"kind":"table","n":2,"orders":[2,2,2],
            "mul":[[[1,0,0],[0,1,0],[0,0,1]],[[0,1,0],[0,0,0],[0,1,0]],[[0,0,1],[0,0,0],[0,1,0]]],
            "one":[1,0,0]}"#;
        assert!(matches!(
            RingSpec::from_json(text).unwrap().build(),
            Err(Error::NotAssociative(..))
        ));
    }

    #[test]
    fn codes_and_forms() {
        let f2 = ring_zn(2).unwrap();
        let code = CodeSpec::from_json(r#"{"length":2,"side":"left","generators":[[[1],[0]]]}"#)
            .unwrap()
            .build(&f2)
            .unwrap();
        assert_eq!(code.len(), 2);
        let form = FormSpec::from_json(r#"{"matrix":[[[1],[1]],[[0],[1]]]}"#).unwrap().build(&f2).unwrap();
        assert_eq!(form.length(), 2);
        let bad = CodeSpec::from_json(r#"{"length":2,"generators":[[[1]]]}"#).unwrap();
        assert!(bad.build(&f2).is_err());
    }
}
