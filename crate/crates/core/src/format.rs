//! JSON input format for spaces, structures, maps and extension scenarios.
//!
//! Wherever a space or structure is expected, a registry name (a JSON
//! string) may be given instead of an object.
//!
//! ```text
//! space     {"points": ["a", "b"], "opens": [["a"], ["a", "b"]]}
//!           {"points": ["a", "b", "c"], "preorder": [["b", "a"], ["c", "a"]]}
//! structure {"kind": "finite", "atoms": 3, "edges": [[0, 1]], "bounded": [0, 2]}
//!           {"kind": "line", "relation": "two_point", "ideal": "bounded"}
//!           {"kind": "regular_closed", "space": "circle4"}
//! map       {"domain": "discrete2", "codomain": "discrete1", "pairs": [["0", "0"], ["1", "0"]]}
//! scenario  {"x1": "discrete2", "x2": "discrete2", "map": [["0", "0"], ["1", "0"]],
//!            "structures": [{"edges": [], "bounded": null}, {"edges": []}],
//!            "conditions": ["REQ1", "P"]}
//! ```
//!
//! `edges` lists unordered pairs of distinct atoms; every atom is in
//! contact with itself. `bounded` lists the atoms generating the ideal and
//! defaults to all of them. `opens` may omit the empty set and the whole
//! space. A preorder pair `[x, y]` puts `x` in the closure of `y`.

use serde::{Deserialize, Serialize};

use crate::carrier::{full_mask, mask_atoms, Carrier};
use crate::contact::{
    alexandroff_extension, beta_rho, AtomGraph, ContactRelation, ContactStructure, Ideal,
};
use crate::error::{Error, Result};
use crate::extensions::AdmissibleStructure;
use crate::registry;
use crate::spaces::{regular_closed_algebra, FiniteSpace, SpaceMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpec {
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub opens: Vec<Vec<String>>,
    /// Pairs `[x, y]` with `x` in the closure of `y`; replaces `opens`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preorder: Option<Vec<(String, String)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    Name(String),
    Spec(SpaceSpec),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LineRelation {
    Standard,
    TwoPoint,
    Alexandroff,
    BetaRho,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum LineIdeal {
    #[default]
    Bounded,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StructureSpec {
    Finite {
        atoms: usize,
        #[serde(default)]
        edges: Vec<(usize, usize)>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bounded: Option<Vec<usize>>,
    },
    Line {
        relation: LineRelation,
        #[serde(default)]
        ideal: LineIdeal,
    },
    /// A structure on `RC(X)`; the standard contact `ρ_X` unless `edges` is
    /// given over the atoms of `RC(X)`.
    RegularClosed {
        space: SpaceRef,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        edges: Option<Vec<(usize, usize)>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bounded: Option<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StructureRef {
    Name(String),
    Spec(StructureSpec),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub domain: SpaceRef,
    pub codomain: SpaceRef,
    pub pairs: Vec<(String, String)>,
}

/// Graph and ideal over the atoms of `RC(X)` for a scenario side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdmissibleSpec {
    #[serde(default)]
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounded: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSpec {
    pub x1: SpaceRef,
    pub x2: SpaceRef,
    pub map: Vec<(String, String)>,
    /// Structures on `RC(X1)` and `RC(X2)`; every admissible pair when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structures: Option<(AdmissibleSpec, AdmissibleSpec)>,
    /// Condition ids to report; all when empty.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<String>,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_space(text: &str) -> Result<SpaceRef> {
    parse(text)
}

pub fn parse_structure(text: &str) -> Result<StructureRef> {
    parse(text)
}

pub fn parse_map(text: &str) -> Result<MapSpec> {
    parse(text)
}

pub fn parse_scenario(text: &str) -> Result<ScenarioSpec> {
    parse(text)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("spec serializes")
}

fn names_to_set(space_names: &[String], names: &[String]) -> Result<u64> {
    names.iter().try_fold(0u64, |acc, n| {
        let i = space_names
            .iter()
            .position(|p| p == n)
            .ok_or_else(|| Error::UnknownPoint(n.clone()))?;
        Ok(acc | 1 << i)
    })
}

impl SpaceSpec {
    pub fn build(&self) -> Result<FiniteSpace> {
        if let Some(pairs) = &self.preorder {
            if !self.opens.is_empty() {
                return Err(Error::InvalidTopology(
                    "give either opens or preorder".into(),
                ));
            }
            let index = |n: &String| {
                self.points
                    .iter()
                    .position(|p| p == n)
                    .ok_or_else(|| Error::UnknownPoint(n.clone()))
            };
            let leq = pairs
                .iter()
                .map(|(x, y)| Ok((index(x)?, index(y)?)))
                .collect::<Result<Vec<_>>>()?;
            return FiniteSpace::from_preorder(self.points.clone(), &leq);
        }
        let full = full_mask(self.points.len());
        let mut opens = vec![0, full];
        for o in &self.opens {
            opens.push(names_to_set(&self.points, o)?);
        }
        opens.sort_unstable();
        opens.dedup();
        FiniteSpace::from_opens(self.points.clone(), opens)
    }

    pub fn of(space: &FiniteSpace) -> Self {
        SpaceSpec {
            points: space.names().to_vec(),
            opens: space
                .opens()
                .iter()
                .filter(|&&o| o != 0 && o != space.full())
                .map(|&o| space.set_names(o))
                .collect(),
            preorder: None,
        }
    }
}

impl SpaceRef {
    pub fn resolve(&self) -> Result<FiniteSpace> {
        match self {
            SpaceRef::Name(n) => registry::space(n),
            SpaceRef::Spec(s) => s.build(),
        }
    }
}

fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<AtomGraph> {
    AtomGraph::with_edges(n, edges)
}

fn generator(n: usize, bounded: &Option<Vec<usize>>) -> Result<Option<u64>> {
    match bounded {
        None => Ok(None),
        Some(atoms) => {
            let mut m = 0u64;
            for &a in atoms {
                if a >= n {
                    return Err(Error::InvalidElement(format!("atom {a} out of range")));
                }
                m |= 1 << a;
            }
            Ok(Some(m))
        }
    }
}

fn off_diagonal_edges(g: &AtomGraph) -> Vec<(usize, usize)> {
    g.edges().into_iter().filter(|(i, j)| i != j).collect()
}

fn bounded_atoms(s: &ContactStructure, n: usize) -> Result<Option<Vec<usize>>> {
    let g = s.ib.generator_mask(n)?;
    Ok((g != full_mask(n)).then(|| mask_atoms(g).collect()))
}

impl StructureSpec {
    pub fn build(&self) -> Result<ContactStructure> {
        match self {
            StructureSpec::Finite {
                atoms,
                edges,
                bounded,
            } => ContactStructure::finite(
                graph_from_edges(*atoms, edges)?,
                generator(*atoms, bounded)?,
            ),
            StructureSpec::Line { relation, ideal } => {
                let ib = match ideal {
                    LineIdeal::Bounded => Ideal::Bounded,
                    LineIdeal::All => Ideal::All,
                };
                let base = ContactStructure::line(ContactRelation::Standard, ib)?;
                let rho = match relation {
                    LineRelation::Standard => ContactRelation::Standard,
                    LineRelation::TwoPoint => ContactRelation::TwoPoint,
                    LineRelation::Alexandroff => alexandroff_extension(&base),
                    LineRelation::BetaRho => beta_rho(&base),
                };
                base.with_relation(rho)
            }
            StructureSpec::RegularClosed {
                space,
                edges,
                bounded,
            } => Ok(self
                .admissible_parts(space, edges, bounded)?
                .structure()
                .clone()),
        }
    }

    fn admissible_parts(
        &self,
        space: &SpaceRef,
        edges: &Option<Vec<(usize, usize)>>,
        bounded: &Option<Vec<usize>>,
    ) -> Result<AdmissibleStructure> {
        let x = space.resolve()?;
        let rc = regular_closed_algebra(&x)?;
        let n = rc.atom_count();
        let graph = match edges {
            Some(e) => graph_from_edges(n, e)?,
            None => rc.contact_graph(),
        };
        AdmissibleStructure::from_graph(&x, graph, generator(n, bounded)?)
    }

    /// The structure on `RC(X)` for a `regular_closed` spec.
    pub fn build_admissible(&self) -> Result<AdmissibleStructure> {
        match self {
            StructureSpec::RegularClosed {
                space,
                edges,
                bounded,
            } => self.admissible_parts(space, edges, bounded),
            _ => Err(Error::Precondition("structure is not over a space".into())),
        }
    }

    /// Spec for a structure on `P(n)` or the interval line.
    pub fn of(s: &ContactStructure) -> Result<Self> {
        match (&s.carrier, &s.rho) {
            (Carrier::Atoms(a), ContactRelation::AtomGraph(g))
                if s.carrier == Carrier::atoms(a.atom_count())? =>
            {
                let n = a.atom_count();
                Ok(StructureSpec::Finite {
                    atoms: n,
                    edges: off_diagonal_edges(g),
                    bounded: bounded_atoms(s, n)?,
                })
            }
            (Carrier::Line(_), rho) => {
                let ideal = match s.ib {
                    Ideal::Bounded => LineIdeal::Bounded,
                    Ideal::All => LineIdeal::All,
                    Ideal::Generated(_) => {
                        return Err(Error::Format(
                            "generated ideals on the line have no spec".into(),
                        ))
                    }
                };
                let relation = match rho {
                    ContactRelation::Standard => LineRelation::Standard,
                    ContactRelation::TwoPoint => LineRelation::TwoPoint,
                    ContactRelation::Alexandroff(_) => LineRelation::Alexandroff,
                    ContactRelation::BetaRho(_) => LineRelation::BetaRho,
                    other => {
                        return Err(Error::Format(format!(
                            "{} relation has no spec",
                            other.kind()
                        )))
                    }
                };
                let spec = StructureSpec::Line { relation, ideal };
                if spec.build()? != *s {
                    return Err(Error::Format(
                        "relation base differs from the spec's".into(),
                    ));
                }
                Ok(spec)
            }
            _ => Err(Error::Format(format!(
                "{} relation has no spec",
                s.rho.kind()
            ))),
        }
    }

    pub fn of_admissible(adm: &AdmissibleStructure) -> Result<Self> {
        let n = adm.rc().atom_count();
        let edges = match &adm.structure().rho {
            ContactRelation::AtomGraph(g) => off_diagonal_edges(g),
            other => {
                return Err(Error::Format(format!(
                    "{} relation has no spec",
                    other.kind()
                )))
            }
        };
        Ok(StructureSpec::RegularClosed {
            space: SpaceRef::Spec(SpaceSpec::of(adm.space())),
            edges: Some(edges),
            bounded: bounded_atoms(adm.structure(), n)?,
        })
    }
}

impl StructureRef {
    pub fn resolve(&self) -> Result<ContactStructure> {
        match self {
            StructureRef::Name(n) => registry::structure(n),
            StructureRef::Spec(s) => s.build(),
        }
    }
}

impl MapSpec {
    pub fn build(&self) -> Result<SpaceMap> {
        SpaceMap::from_names(
            self.domain.resolve()?,
            self.codomain.resolve()?,
            &self.pairs,
        )
    }

    pub fn of(f: &SpaceMap) -> Self {
        MapSpec {
            domain: SpaceRef::Spec(SpaceSpec::of(f.domain())),
            codomain: SpaceRef::Spec(SpaceSpec::of(f.codomain())),
            pairs: f.name_pairs(),
        }
    }
}

impl AdmissibleSpec {
    pub fn build(&self, space: &FiniteSpace) -> Result<AdmissibleStructure> {
        let n = regular_closed_algebra(space)?.atom_count();
        AdmissibleStructure::from_graph(
            space,
            graph_from_edges(n, &self.edges)?,
            generator(n, &self.bounded)?,
        )
    }
}

impl ScenarioSpec {
    pub fn spaces(&self) -> Result<(FiniteSpace, FiniteSpace)> {
        Ok((self.x1.resolve()?, self.x2.resolve()?))
    }

    pub fn map(&self, x1: &FiniteSpace, x2: &FiniteSpace) -> Result<SpaceMap> {
        SpaceMap::from_names(x1.clone(), x2.clone(), &self.map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_error_has_position() {
        let e = parse_structure("{\n  \"kind\": \"finite\",\n  \"atoms\": x\n}").unwrap_err();
        match e {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn names_and_specs() {
        let s = parse_structure("\"p3_overlap\"")
            .unwrap()
            .resolve()
            .unwrap();
        assert_eq!(s, registry::structure("p3_overlap").unwrap());
        let t = parse_structure(r#"{"kind": "line", "relation": "two_point"}"#)
            .unwrap()
            .resolve()
            .unwrap();
        assert_eq!(t, registry::structure("interval_two_point").unwrap());
        let c = parse_space(r#"{"points": ["a","b"], "opens": [["a"]]}"#)
            .unwrap()
            .resolve()
            .unwrap();
        assert_eq!(c.opens().len(), 3);
        let v = parse_space(r#"{"points": ["a","b","c"], "preorder": [["b","a"], ["c","a"]]}"#)
            .unwrap()
            .resolve()
            .unwrap();
        assert!(v.specialization_leq(1, 0) && !v.specialization_leq(0, 1));
        assert!(parse_space(r#"{"points": ["a"], "opens": [["z"]]}"#)
            .unwrap()
            .resolve()
            .is_err());
    }

    #[test]
    fn line_and_admissible_roundtrip() {
        for name in [
            "interval_standard",
            "interval_two_point",
            "interval_alexandroff",
            "interval_beta_rho",
        ] {
            let s = registry::structure(name).unwrap();
            let spec = StructureSpec::of(&s).unwrap();
            let back: StructureSpec = serde_json::from_str(&to_json(&spec)).unwrap();
            assert_eq!(back.build().unwrap(), s);
        }
        let adm = AdmissibleStructure::standard(&FiniteSpace::circle4()).unwrap();
        let spec = StructureSpec::of_admissible(&adm).unwrap();
        let back: StructureSpec = serde_json::from_str(&to_json(&spec)).unwrap();
        assert_eq!(back.build_admissible().unwrap(), adm);
    }

    #[test]
    fn scenario_roundtrip() {
        for n in registry::SCENARIOS {
            let s = registry::scenario(n).unwrap();
            assert_eq!(parse_scenario(&to_json(&s)).unwrap(), s);
        }
    }

    proptest! {
        #[test]
        fn finite_structure_roundtrip(n in 1usize..=5, bits in any::<u64>(), gen in any::<u64>(), all in any::<bool>()) {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .enumerate()
                .filter(|(k, _)| bits >> k & 1 == 1)
                .map(|(_, e)| e)
                .collect();
            let g = if all { None } else { Some(gen & full_mask(n)) };
            let s = ContactStructure::finite(AtomGraph::with_edges(n, &edges).unwrap(), g).unwrap();
            let text = to_json(&StructureSpec::of(&s).unwrap());
            let back = parse_structure(&text).unwrap().resolve().unwrap();
            prop_assert_eq!(back.finite_view().unwrap().contact, s.finite_view().unwrap().contact);
            prop_assert_eq!(back.finite_view().unwrap().ideal, s.finite_view().unwrap().ideal);
        }

        #[test]
        fn space_and_map_roundtrip(idx in 0usize..29, jdx in 0usize..29, seed in any::<u64>()) {
            let tops = FiniteSpace::all_topologies(3).unwrap();
            let (x, y) = (&tops[idx], &tops[jdx]);
            let back = parse_space(&to_json(&SpaceSpec::of(x))).unwrap();
            prop_assert_eq!(&back.resolve().unwrap(), x);
            let mapping: Vec<usize> = (0..3).map(|i| ((seed >> (2 * i)) % 3) as usize).collect();
            let f = SpaceMap::new(x.clone(), y.clone(), mapping).unwrap();
            let spec = parse_map(&to_json(&MapSpec::of(&f))).unwrap();
            prop_assert_eq!(spec.build().unwrap(), f);
        }
    }
}
