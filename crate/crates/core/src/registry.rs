//! Built-in named examples.

use crate::contact::{
    alexandroff_extension, beta_rho, AtomGraph, ContactRelation, ContactStructure, Ideal,
};
use crate::error::{Error, Result};
use crate::format::ScenarioSpec;
use crate::spaces::FiniteSpace;

pub const STRUCTURES: &[&str] = &[
    "p1_overlap",
    "p2_overlap",
    "p3_overlap",
    "p4_overlap",
    "p2_complete",
    "path3",
    "p3_bounded_atom",
    "interval_standard",
    "interval_two_point",
    "interval_alexandroff",
    "interval_beta_rho",
];

pub const SPACES: &[&str] = &[
    "discrete1",
    "discrete2",
    "discrete3",
    "discrete4",
    "indiscrete2",
    "sierpinski",
    "circle4",
];

pub const SCENARIOS: &[&str] = &[
    "discrete_identity",
    "discrete_constant",
    "discrete_swap",
    "discrete_inclusion",
    "discrete_fold",
];

fn sized(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

pub fn space(name: &str) -> Result<FiniteSpace> {
    if let Some(n) = sized(name, "discrete") {
        return FiniteSpace::discrete(n);
    }
    if let Some(n) = sized(name, "indiscrete") {
        return FiniteSpace::indiscrete(n);
    }
    match name {
        "sierpinski" => Ok(FiniteSpace::sierpinski()),
        "circle4" => Ok(FiniteSpace::circle4()),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

fn interval_standard() -> ContactStructure {
    ContactStructure::line(ContactRelation::Standard, Ideal::Bounded).expect("line structure")
}

/// Named structures. A space name gives `(RC(X), ρ_X, RC(X))`.
pub fn structure(name: &str) -> Result<ContactStructure> {
    if let Some(n) = name
        .strip_prefix('p')
        .and_then(|r| r.strip_suffix("_overlap"))
        .and_then(|r| r.parse().ok())
    {
        return ContactStructure::finite(AtomGraph::loops_only(n), None);
    }
    match name {
        "p2_complete" => ContactStructure::finite(AtomGraph::complete(2), None),
        "path3" => ContactStructure::finite(AtomGraph::path(3), None),
        "p3_bounded_atom" => ContactStructure::finite(AtomGraph::loops_only(3), Some(0b001)),
        "interval_standard" => Ok(interval_standard()),
        "interval_two_point" => interval_standard().with_relation(ContactRelation::TwoPoint),
        "interval_alexandroff" => {
            let s = interval_standard();
            s.with_relation(alexandroff_extension(&s))
        }
        "interval_beta_rho" => {
            let s = interval_standard();
            s.with_relation(beta_rho(&s))
        }
        _ => match space(name) {
            Ok(x) => crate::duality::psi_t(&x),
            Err(_) => Err(Error::UnknownName(name.to_string())),
        },
    }
}

pub fn scenario(name: &str) -> Result<ScenarioSpec> {
    let text = match name {
        "discrete_identity" => {
            r#"{"x1": "discrete2", "x2": "discrete2", "map": [["0", "0"], ["1", "1"]]}"#
        }
        "discrete_constant" => {
            r#"{"x1": "discrete2", "x2": "discrete2", "map": [["0", "0"], ["1", "0"]]}"#
        }
        "discrete_swap" => {
            r#"{"x1": "discrete2", "x2": "discrete2", "map": [["0", "1"], ["1", "0"]]}"#
        }
        "discrete_inclusion" => r#"{"x1": "discrete1", "x2": "discrete3", "map": [["0", "1"]]}"#,
        "discrete_fold" => {
            r#"{"x1": "discrete3", "x2": "discrete2", "map": [["0", "0"], ["1", "1"], ["2", "0"]], "conditions": ["REQ1", "REQ2", "P", "I", "OI"]}"#
        }
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    crate::format::parse_scenario(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_name_resolves() {
        for n in STRUCTURES {
            structure(n).unwrap();
        }
        for n in SPACES {
            space(n).unwrap();
            structure(n).unwrap();
        }
        for n in SCENARIOS {
            scenario(n).unwrap();
        }
        assert!(matches!(structure("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn overlap_sizes() {
        assert_eq!(
            structure("p4_overlap").unwrap().carrier.atom_count(),
            Some(4)
        );
    }
}
