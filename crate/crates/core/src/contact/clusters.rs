//! Clusters: the points of the dual space.

use std::fmt;

use num_rational::BigRational;

use super::{ContactStructure, Ideal, RelTable};
use crate::carrier::{full_mask, Carrier, Element, Value};
use crate::error::{Error, Result};
use crate::report::{AxiomReport, CheckId, Verdict, Witness};

/// Largest carrier for which every subset of elements is enumerated.
const EXHAUSTIVE_CLUSTER_ATOMS: usize = 4;

/// A set of elements of a finite carrier, one bit per mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MaskSet {
    bits: Vec<u64>,
}

impl MaskSet {
    pub fn empty(n: usize) -> Self {
        MaskSet {
            bits: vec![0; (1usize << n).div_ceil(64)],
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(u64) -> bool) -> Self {
        let mut s = Self::empty(n);
        for m in 0..=full_mask(n) {
            if f(m) {
                s.insert(m);
            }
        }
        s
    }

    pub fn insert(&mut self, m: u64) {
        self.bits[m as usize / 64] |= 1 << (m % 64);
    }

    pub fn contains(&self, m: u64) -> bool {
        self.bits
            .get(m as usize / 64)
            .is_some_and(|w| w >> (m % 64) & 1 == 1)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.iter().enumerate().flat_map(|(i, &w)| {
            (0..64)
                .filter(move |b| w >> b & 1 == 1)
                .map(move |b| (i * 64 + b) as u64)
        })
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Members lying below `ideal`.
    pub fn trace(&self, ideal: u64) -> MaskSet {
        let mut out = MaskSet {
            bits: vec![0; self.bits.len()],
        };
        for m in self.iter().filter(|m| m & !ideal == 0) {
            out.insert(m);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClusterWitness {
    /// `σ_u` for the principal ultrafilter at this atom.
    Ultrafilter(usize),
    /// `σ_x` on the interval line.
    Point(BigRational),
    /// `σ_∞`, the unbounded elements.
    Infinity,
    /// A named point of a finite space.
    SpacePoint(String),
}

impl fmt::Display for ClusterWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClusterWitness::Ultrafilter(i) => write!(f, "σ_{i}"),
            ClusterWitness::Point(x) => write!(f, "σ_{x}"),
            ClusterWitness::Infinity => f.write_str("σ_∞"),
            ClusterWitness::SpacePoint(p) => write!(f, "σ_{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Membership {
    Finite { set: MaskSet, ideal: u64 },
    LinePoint(BigRational),
    Unbounded(Ideal),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    carrier: Carrier,
    witness: ClusterWitness,
    bounded: bool,
    membership: Membership,
}

impl Cluster {
    pub(crate) fn finite(
        carrier: Carrier,
        witness: ClusterWitness,
        set: MaskSet,
        ideal: u64,
    ) -> Self {
        let bounded = !set.trace(ideal).is_empty();
        Cluster {
            carrier,
            witness,
            bounded,
            membership: Membership::Finite { set, ideal },
        }
    }

    pub fn witness(&self) -> &ClusterWitness {
        &self.witness
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    /// Meets the ideal.
    pub fn is_bounded(&self) -> bool {
        self.bounded
    }

    pub fn contains(&self, a: &Element) -> Result<bool> {
        self.carrier.own(a)?;
        Ok(match (&self.membership, a.value()) {
            (Membership::Finite { set, .. }, Value::Atoms(m)) => set.contains(*m),
            (Membership::LinePoint(x), Value::Intervals(s)) => s.contains_point(x),
            (Membership::Unbounded(ib), Value::Intervals(s)) => !ib.contains_line(s),
            (Membership::Unbounded(ib), Value::Atoms(m)) => {
                let g = ib.generator_mask(self.carrier.atom_count().unwrap_or(0))?;
                m & !g != 0
            }
            _ => unreachable!("carrier id fixes the backend"),
        })
    }

    /// Member set on a finite carrier.
    pub fn members(&self) -> Option<&MaskSet> {
        match &self.membership {
            Membership::Finite { set, .. } => Some(set),
            _ => None,
        }
    }

    /// `σ ∩ IB` on a finite carrier.
    pub fn bounded_trace(&self) -> Option<MaskSet> {
        match &self.membership {
            Membership::Finite { set, ideal } => Some(set.trace(*ideal)),
            _ => None,
        }
    }
}

impl fmt::Display for Cluster {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.witness)
    }
}

fn designated_table(s: &ContactStructure) -> Result<RelTable> {
    s.designated_relation().table(&s.carrier)
}

/// K1-K3 for `set` under the designated relation of `s`.
pub fn check_cluster(s: &ContactStructure, set: &MaskSet) -> Result<Vec<AxiomReport>> {
    let n = s.carrier.finite_atoms("cluster check")?;
    let t = designated_table(s)?;
    Ok(cluster_reports(&s.carrier, n, &t, set))
}

fn cluster_reports(carrier: &Carrier, n: usize, t: &RelTable, set: &MaskSet) -> Vec<AxiomReport> {
    let full = full_mask(n);
    let el = |m: u64| Witness::Element(carrier.element_from_mask(m).expect("in range"));
    let k1 = set
        .iter()
        .flat_map(|a| set.iter().map(move |b| (a, b)))
        .find(|&(a, b)| !t.get(a, b))
        .map(|(a, b)| Verdict::fail([("a", el(a)), ("b", el(b))]))
        .unwrap_or(Verdict::Pass);
    let mut k2 = Verdict::Pass;
    'k2: for a in 0..=full {
        for b in 0..=full {
            if set.contains(a | b) && !set.contains(a) && !set.contains(b) {
                k2 = Verdict::fail([("a", el(a)), ("b", el(b))]);
                break 'k2;
            }
        }
    }
    let k3 = (0..=full)
        .find(|&a| !set.contains(a) && set.iter().all(|b| t.get(a, b)))
        .map(|a| Verdict::fail([("a", el(a))]))
        .unwrap_or(Verdict::Pass);
    let k1 = if set.is_empty() {
        Verdict::fail([("σ", Witness::Note("empty set".into()))])
    } else {
        k1
    };
    vec![
        AxiomReport::new(CheckId::K1, k1),
        AxiomReport::new(CheckId::K2, k2),
        AxiomReport::new(CheckId::K3, k3),
    ]
}

/// Clusters of a finite structure, one `σ_u = {a | aCb for all b ∈ u}` per
/// principal ultrafilter, deduplicated and filtered by K1-K3. Uses `C_ρ` when
/// `1 ∉ IB`.
pub fn clusters(s: &ContactStructure) -> Result<Vec<Cluster>> {
    let n = s.carrier.finite_atoms("cluster enumeration")?;
    let full = full_mask(n);
    let t = designated_table(s)?;
    let ideal = s.ib.generator_mask(n)?;
    let mut out: Vec<Cluster> = Vec::new();
    for i in 0..n {
        let ultra = (0..=full).filter(|b| b >> i & 1 == 1).collect::<Vec<_>>();
        let set = MaskSet::from_fn(n, |a| ultra.iter().all(|&b| t.get(a, b)));
        if out.iter().any(|c| c.members() == Some(&set)) {
            continue;
        }
        if !cluster_reports(&s.carrier, n, &t, &set)
            .iter()
            .all(AxiomReport::passed)
        {
            continue;
        }
        out.push(Cluster::finite(
            s.carrier.clone(),
            ClusterWitness::Ultrafilter(i),
            set,
            ideal,
        ));
    }
    Ok(out)
}

/// Every subset of the carrier satisfying K1-K3, found by brute force over
/// all `2^(2^n)` subsets. Limited to four atoms.
pub fn enumerate_clusters_exhaustive(s: &ContactStructure) -> Result<Vec<MaskSet>> {
    let n = s.carrier.finite_atoms("exhaustive cluster search")?;
    if n > EXHAUSTIVE_CLUSTER_ATOMS {
        return Err(Error::BoundExceeded {
            atoms: n,
            bound: EXHAUSTIVE_CLUSTER_ATOMS,
        });
    }
    let t = designated_table(s)?;
    let size = 1u64 << n;
    let mut out = Vec::new();
    for bits in 1..1u64 << size {
        let set = MaskSet::from_fn(n, |m| bits >> m & 1 == 1);
        // K1 needs every member in contact with itself, so 0 is never a member.
        if set.contains(0) {
            continue;
        }
        if cluster_reports(&s.carrier, n, &t, &set)
            .iter()
            .all(AxiomReport::passed)
        {
            out.push(set);
        }
    }
    Ok(out)
}

/// `σ_∞ = {a | a ∉ IB}`; requires `1 ∉ IB`.
pub fn sigma_infinity(s: &ContactStructure) -> Result<Cluster> {
    if s.one_in_ideal() {
        return Err(Error::Precondition(
            "σ_∞ is defined only when 1 is not bounded".into(),
        ));
    }
    let membership = match &s.carrier {
        Carrier::Atoms(_) => {
            let n = s.carrier.finite_atoms("σ_∞")?;
            let ideal = s.ib.generator_mask(n)?;
            Membership::Finite {
                set: MaskSet::from_fn(n, |m| m & !ideal != 0),
                ideal,
            }
        }
        Carrier::Line(_) => Membership::Unbounded(s.ib.clone()),
    };
    Ok(Cluster {
        carrier: s.carrier.clone(),
        witness: ClusterWitness::Infinity,
        bounded: false,
        membership,
    })
}

/// `σ_x = {a | x ∈ a}` on the interval line.
pub fn point_cluster_line(s: &ContactStructure, x: BigRational) -> Result<Cluster> {
    if s.carrier.is_finite() {
        return Err(Error::WrongBackend {
            op: "point cluster",
            expected: "interval-line",
        });
    }
    Ok(Cluster {
        carrier: s.carrier.clone(),
        witness: ClusterWitness::Point(x.clone()),
        bounded: true,
        membership: Membership::LinePoint(x),
    })
}

/// Equality of `σ ∩ IB` for two clusters of the same finite structure.
pub fn bounded_trace_equal(c1: &Cluster, c2: &Cluster) -> Result<bool> {
    if c1.carrier.id() != c2.carrier.id() {
        return Err(Error::MixedCarrier {
            left: c1.carrier.label(),
            right: c2.carrier.label(),
        });
    }
    match (c1.bounded_trace(), c2.bounded_trace()) {
        (Some(a), Some(b)) => Ok(a == b),
        _ => Err(Error::WrongBackend {
            op: "bounded trace",
            expected: "finite",
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::super::AtomGraph;
    use super::*;
    use crate::carrier::IntervalSet;

    fn finite(g: AtomGraph) -> ContactStructure {
        ContactStructure::finite(g, None).unwrap()
    }

    #[test]
    fn overlap_two_atoms_has_principal_clusters() {
        let s = finite(AtomGraph::loops_only(2));
        let cs = clusters(&s).unwrap();
        assert_eq!(cs.len(), 2);
        for (i, c) in cs.iter().enumerate() {
            for m in 0..4u64 {
                assert_eq!(c.members().unwrap().contains(m), m >> i & 1 == 1);
            }
        }
    }

    #[test]
    fn complete_two_atoms_has_one_cluster() {
        let s = finite(AtomGraph::complete(2));
        let cs = clusters(&s).unwrap();
        assert_eq!(cs.len(), 1);
        let members: Vec<_> = cs[0].members().unwrap().iter().collect();
        assert_eq!(members, vec![1, 2, 3]);
    }

    #[test]
    fn exhaustive_search_agrees_with_ultrafilter_construction() {
        for n in 1..=3 {
            let s = finite(AtomGraph::loops_only(n));
            let mut a: Vec<_> = clusters(&s)
                .unwrap()
                .into_iter()
                .map(|c| c.members().unwrap().clone())
                .collect();
            a.sort();
            let mut b = enumerate_clusters_exhaustive(&s).unwrap();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn distinct_clusters_have_distinct_traces() {
        let s = finite(AtomGraph::loops_only(3));
        let cs = clusters(&s).unwrap();
        assert!(bounded_trace_equal(&cs[0], &cs[0]).unwrap());
        assert!(!bounded_trace_equal(&cs[0], &cs[1]).unwrap());
    }

    #[test]
    fn sigma_infinity_on_line() {
        let s = ContactStructure::line(super::super::ContactRelation::Standard, Ideal::Bounded)
            .unwrap();
        let inf = sigma_infinity(&s).unwrap();
        let e = |p| s.carrier.interval(IntervalSet::ints(p)).unwrap();
        assert!(inf.contains(&e(&[(Some(0), None)])).unwrap());
        assert!(!inf.contains(&e(&[(Some(0), Some(1))])).unwrap());
        assert!(!inf.is_bounded());
    }

    #[test]
    fn sigma_infinity_needs_proper_ideal() {
        let s = finite(AtomGraph::loops_only(2));
        assert!(matches!(sigma_infinity(&s), Err(Error::Precondition(_))));
    }

    #[test]
    fn line_rejected_for_enumeration() {
        let s = ContactStructure::line(super::super::ContactRelation::Standard, Ideal::Bounded)
            .unwrap();
        assert!(clusters(&s).is_err());
    }
}
