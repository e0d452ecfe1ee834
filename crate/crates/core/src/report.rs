//! Verdicts shared by the axiom and condition checkers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::carrier::Element;

/// Identifier of a checked axiom or condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    BC1,
    BC2,
    BC3,
    K1,
    K2,
    K3,
    RC1,
    RC2,
    A1,
    A2,
    LA1,
    LA2,
    LA3,
    DLC1,
    DLC2,
    DLC3,
    DLC3S,
    DLC4,
    DLC5,
    LO,
    REQ1,
    REQ2,
    EQ1,
    EQ2,
    O,
    O1,
    O2,
    P,
    I,
    OI,
    OC,
    OB,
    /// Poljakov's sufficient condition for openness of the Stone-Čech extension.
    Poljakov,
    /// Separation of a local proximity: contact on singletons is equality.
    Separated,
    /// The topology induced by a local proximity equals the given one.
    InducesTopology,
    /// `f(X1)` is dense in `X2`.
    DenseImage,
    Skeletal,
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A value appearing in a counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Element(Element),
    Points(Vec<String>),
    Note(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element(e) => write!(f, "{e}"),
            Witness::Points(p) => write!(f, "{{{}}}", p.join(",")),
            Witness::Note(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail {
        counterexample: Vec<(String, Witness)>,
    },
    SampledPass {
        samples: usize,
    },
}

impl Verdict {
    pub fn fail<I, S>(bindings: I) -> Self
    where
        I: IntoIterator<Item = (S, Witness)>,
        S: Into<String>,
    {
        Verdict::Fail {
            counterexample: bindings.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        }
    }

    pub fn is_pass(&self) -> bool {
        !matches!(self, Verdict::Fail { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: CheckId,
    pub verdict: Verdict,
}

impl AxiomReport {
    pub fn new(axiom: CheckId, verdict: Verdict) -> Self {
        AxiomReport { axiom, verdict }
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Pass => write!(f, "{}: pass", self.axiom),
            Verdict::SampledPass { samples } => {
                write!(f, "{}: sampled-pass ({samples} samples)", self.axiom)
            }
            Verdict::Fail { counterexample } => {
                write!(f, "{}: FAIL", self.axiom)?;
                for (i, (k, v)) in counterexample.iter().enumerate() {
                    f.write_str(if i == 0 { " at " } else { ", " })?;
                    write!(f, "{k}={v}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn all_pass(reports: &[AxiomReport]) -> bool {
    reports.iter().all(AxiomReport::passed)
}

pub fn find(reports: &[AxiomReport], id: CheckId) -> Option<&AxiomReport> {
    reports.iter().find(|r| r.axiom == id)
}
