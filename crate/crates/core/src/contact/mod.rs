//! Contact relations, ideals and local contact structures.
//!
//! Relations are intensional evaluators. On finite carriers every check
//! materializes a [`RelTable`] first; on the interval line the evaluators
//! are decided symbolically from intersections, gaps and unbounded ends.

mod axioms;
mod clusters;
mod family;

pub use axioms::{
    check_ca, check_ka_membership, check_lca, check_nca, compare_relations, relation_contained,
};
pub use clusters::{
    bounded_trace_equal, check_cluster, clusters, enumerate_clusters_exhaustive,
    point_cluster_line, sigma_infinity, Cluster, ClusterWitness, MaskSet,
};
pub use family::{explicit_family, family_interpolates, DyadicFamily};

use crate::carrier::{full_mask, mask_atoms, Carrier, Element, IntervalSet, Value};
use crate::error::{Error, Result};
pub use crate::report::{AxiomReport, CheckId, Verdict, Witness};

/// Reflexive-symmetric adjacency over atoms, one bitmask row per atom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AtomGraph {
    n: usize,
    adj: Vec<u64>,
}

impl AtomGraph {
    /// Validates reflexivity and symmetry.
    pub fn from_adjacency(n: usize, adj: Vec<u64>) -> Result<Self> {
        let g = Self::from_adjacency_unchecked(n, adj)?;
        for i in 0..n {
            if g.adj[i] >> i & 1 == 0 {
                return Err(Error::InvalidGraph(format!("atom {i} has no loop")));
            }
            for j in mask_atoms(g.adj[i]) {
                if g.adj[j] >> i & 1 == 0 {
                    return Err(Error::InvalidGraph(format!(
                        "edge {i}-{j} is not symmetric"
                    )));
                }
            }
        }
        Ok(g)
    }

    /// Skips the reflexive/symmetric validation. Used to build deliberately
    /// broken relations for mutation tests.
    pub fn from_adjacency_unchecked(n: usize, adj: Vec<u64>) -> Result<Self> {
        if adj.len() != n {
            return Err(Error::InvalidGraph(format!(
                "expected {n} adjacency rows, got {}",
                adj.len()
            )));
        }
        if adj.iter().any(|row| row & !full_mask(n) != 0) {
            return Err(Error::InvalidGraph("adjacency outside atom range".into()));
        }
        Ok(AtomGraph { n, adj })
    }

    /// Loops on every atom plus the given undirected edges.
    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::InvalidGraph(format!("edge {i}-{j} out of range")));
            }
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Ok(AtomGraph { n, adj })
    }

    /// Loops only: the overlap relation `ρ_s`.
    pub fn loops_only(n: usize) -> Self {
        Self::with_edges(n, &[]).expect("in range")
    }

    /// Complete graph with loops: `ρ_l`.
    pub fn complete(n: usize) -> Self {
        AtomGraph {
            n,
            adj: vec![full_mask(n); n],
        }
    }

    /// Path `0-1-...-(n-1)` with loops.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::with_edges(n, &edges).expect("in range")
    }

    pub fn atom_count(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    /// Undirected edges `(i, j)` with `i <= j`, loops included.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in mask_atoms(self.adj[i]) {
                if i <= j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_loops_only(&self) -> bool {
        (0..self.n).all(|i| self.adj[i] == 1 << i)
    }

    /// `aCb` iff some atom of `a` is adjacent to some atom of `b`.
    pub fn holds(&self, a: u64, b: u64) -> bool {
        a != 0 && b != 0 && mask_atoms(a).any(|i| self.adj[i] & b != 0)
    }

    /// Every reflexive-symmetric graph on `n` atoms, in edge-bitmask order.
    pub fn all(n: usize) -> Vec<AtomGraph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        (0..1u64 << pairs.len())
            .map(|bits| {
                let edges: Vec<_> = mask_atoms(bits).map(|k| pairs[k]).collect();
                Self::with_edges(n, &edges).expect("in range")
            })
            .collect()
    }
}

/// Dense truth table of a binary relation on a finite carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelTable {
    n: usize,
    size: usize,
    bits: Vec<u64>,
}

impl RelTable {
    pub fn empty(n: usize) -> Self {
        let size = 1usize << n;
        RelTable {
            n,
            size,
            bits: vec![0; (size * size).div_ceil(64)],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(u64, u64) -> bool) -> Self {
        let mut t = Self::empty(n);
        for a in 0..t.size as u64 {
            for b in 0..t.size as u64 {
                if f(a, b) {
                    t.set(a, b, true);
                }
            }
        }
        t
    }

    pub fn atom_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: u64, b: u64) -> bool {
        let idx = a as usize * self.size + b as usize;
        self.bits[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn set(&mut self, a: u64, b: u64, v: bool) {
        let idx = a as usize * self.size + b as usize;
        if v {
            self.bits[idx / 64] |= 1 << (idx % 64);
        } else {
            self.bits[idx / 64] &= !(1 << (idx % 64));
        }
    }

    pub fn pairs(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for a in 0..self.size as u64 {
            for b in 0..self.size as u64 {
                if self.get(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Presentation of a contact relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContactRelation {
    /// Atom-determined relation on a finite carrier.
    AtomGraph(AtomGraph),
    /// Explicit truth table on a finite carrier; may violate any axiom.
    Table(RelTable),
    /// Interval line: point-set intersection is non-empty.
    Standard,
    /// Interval line: intersection non-empty, or both unbounded on the same side.
    TwoPoint,
    /// `aCb` iff `aρb` or neither `a` nor `b` is in the ideal.
    Alexandroff(Box<ContactStructure>),
    /// Separation by an interpolating dyadic family under the base `≪_ρ`.
    BetaRho(Box<ContactStructure>),
    /// Separation by a family interpolating under every member simultaneously.
    Supremum(Vec<ContactRelation>),
}

impl ContactRelation {
    pub fn kind(&self) -> &'static str {
        match self {
            ContactRelation::AtomGraph(_) => "atom_graph",
            ContactRelation::Table(_) => "table",
            ContactRelation::Standard => "standard",
            ContactRelation::TwoPoint => "two_point",
            ContactRelation::Alexandroff(_) => "alexandroff",
            ContactRelation::BetaRho(_) => "beta_rho",
            ContactRelation::Supremum(_) => "supremum",
        }
    }

    /// Verifies the presentation can be evaluated on `carrier`.
    pub fn validate_on(&self, carrier: &Carrier) -> Result<()> {
        match (self, carrier) {
            (ContactRelation::AtomGraph(g), Carrier::Atoms(a)) if g.n == a.atom_count() => Ok(()),
            (ContactRelation::Table(t), Carrier::Atoms(a)) if t.n == a.atom_count() => Ok(()),
            (ContactRelation::AtomGraph(_) | ContactRelation::Table(_), _) => {
                Err(Error::WrongBackend {
                    op: "atom-determined relation",
                    expected: "finite carrier of matching size",
                })
            }
            (ContactRelation::Standard | ContactRelation::TwoPoint, Carrier::Line(_)) => Ok(()),
            (ContactRelation::Standard | ContactRelation::TwoPoint, _) => {
                Err(Error::WrongBackend {
                    op: "standard/two-point relation",
                    expected: "interval-line",
                })
            }
            (ContactRelation::Alexandroff(base) | ContactRelation::BetaRho(base), c) => {
                if base.carrier.id() != c.id() {
                    return Err(Error::MixedCarrier {
                        left: c.label(),
                        right: base.carrier.label(),
                    });
                }
                Ok(())
            }
            (ContactRelation::Supremum(ms), c) => {
                if ms.is_empty() {
                    return Err(Error::EmptyRelationList);
                }
                ms.iter().try_for_each(|m| m.validate_on(c))
            }
        }
    }

    /// Decides `aCb`.
    pub fn holds(&self, carrier: &Carrier, a: &Element, b: &Element) -> Result<bool> {
        carrier.own(a)?;
        carrier.own(b)?;
        match (a.value(), b.value()) {
            (Value::Atoms(x), Value::Atoms(y)) => self.holds_mask(carrier, *x, *y),
            (Value::Intervals(x), Value::Intervals(y)) => self.holds_line(x, y),
            _ => unreachable!("carrier id fixes the backend"),
        }
    }

    fn holds_mask(&self, carrier: &Carrier, a: u64, b: u64) -> Result<bool> {
        match self {
            ContactRelation::AtomGraph(g) => Ok(g.holds(a, b)),
            ContactRelation::Table(t) => Ok(t.get(a, b)),
            _ => Ok(self.table(carrier)?.get(a, b)),
        }
    }

    /// Materializes the relation on a finite carrier.
    pub fn table(&self, carrier: &Carrier) -> Result<RelTable> {
        let n = carrier.finite_atoms("relation table")?;
        self.validate_on(carrier)?;
        let full = full_mask(n);
        Ok(match self {
            ContactRelation::AtomGraph(g) => RelTable::from_fn(n, |a, b| g.holds(a, b)),
            ContactRelation::Table(t) => t.clone(),
            ContactRelation::Standard | ContactRelation::TwoPoint => unreachable!("validated"),
            ContactRelation::Alexandroff(base) => {
                let v = base.finite_view()?;
                RelTable::from_fn(n, |a, b| {
                    v.contact(a, b) || (!v.in_ideal(a) && !v.in_ideal(b))
                })
            }
            ContactRelation::BetaRho(base) => {
                let v = base.finite_view()?;
                separation_table(n, &[v.contact])
            }
            ContactRelation::Supremum(ms) => {
                let tables = ms
                    .iter()
                    .map(|m| m.table(carrier))
                    .collect::<Result<Vec<_>>>()?;
                separation_table(n, &tables)
            }
        })
        .map(|t| {
            debug_assert_eq!(t.size as u64, full + 1);
            t
        })
    }

    fn holds_line(&self, a: &IntervalSet, b: &IntervalSet) -> Result<bool> {
        match self {
            ContactRelation::Standard => Ok(a.intersects(b)),
            ContactRelation::TwoPoint => Ok(a.intersects(b)
                || (a.unbounded_below() && b.unbounded_below())
                || (a.unbounded_above() && b.unbounded_above())),
            ContactRelation::Alexandroff(base) => Ok(base.rho.holds_line(a, b)?
                || (!base.ib.contains_line(a) && !base.ib.contains_line(b))),
            ContactRelation::BetaRho(base) => match base.rho {
                // Disjoint finite unions have a positive gap, so a family of
                // closed neighbourhoods interpolates; intersecting sets cannot
                // be separated at all.
                ContactRelation::Standard | ContactRelation::TwoPoint => Ok(a.intersects(b)),
                _ => Ok(!family::family_separates(&[&base.rho], a, b)?),
            },
            ContactRelation::Supremum(ms) => {
                let refs: Vec<&ContactRelation> = ms.iter().collect();
                Ok(!family::family_separates(&refs, a, b)?)
            }
            ContactRelation::AtomGraph(_) | ContactRelation::Table(_) => Err(Error::WrongBackend {
                op: "atom-determined relation",
                expected: "finite",
            }),
        }
    }

    /// `a ≪ b` on the interval line: `a` not in contact with `cl(R \ b)`.
    fn way_below_line(&self, a: &IntervalSet, b: &IntervalSet) -> Result<bool> {
        Ok(!self.holds_line(a, &b.complement())?)
    }
}

/// `a(-C)b` iff some `c` with `c ≪ c` interpolates `a ≪ c ≪ b*` in every
/// table. A dyadic-indexed family in a finite algebra repeats a value, which
/// forces `c ≪ c`; a constant family on such a `c` is a valid family.
fn separation_table(n: usize, tables: &[RelTable]) -> RelTable {
    let full = full_mask(n);
    let wb = |t: &RelTable, a: u64, b: u64| !t.get(a, !b & full);
    let idempotent: Vec<u64> = (0..=full)
        .filter(|&c| tables.iter().all(|t| wb(t, c, c)))
        .collect();
    RelTable::from_fn(n, |a, b| {
        !idempotent
            .iter()
            .any(|&c| tables.iter().all(|t| wb(t, a, c) && wb(t, c, !b & full)))
    })
}

/// Ideal of "bounded" elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ideal {
    /// The non-proper ideal.
    All,
    /// Principal ideal `{a | a ≤ g}`.
    Generated(Element),
    /// Interval line: elements with no unbounded component.
    Bounded,
}

impl Ideal {
    fn contains_line(&self, a: &IntervalSet) -> bool {
        match self {
            Ideal::All => true,
            Ideal::Bounded => a.is_bounded(),
            Ideal::Generated(g) => g.intervals().is_some_and(|g| a.leq(g)),
        }
    }

    /// Generator mask on a carrier with `n` atoms.
    pub fn generator_mask(&self, n: usize) -> Result<u64> {
        match self {
            Ideal::All => Ok(full_mask(n)),
            Ideal::Generated(g) => g.mask().ok_or(Error::WrongBackend {
                op: "generated ideal",
                expected: "finite",
            }),
            Ideal::Bounded => Err(Error::WrongBackend {
                op: "bounded ideal",
                expected: "interval-line",
            }),
        }
    }
}

/// A carrier with a contact relation and an ideal. Axioms are not enforced
/// at construction; use the `check_*` functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactStructure {
    pub carrier: Carrier,
    pub rho: ContactRelation,
    pub ib: Ideal,
}

impl ContactStructure {
    pub fn new(carrier: Carrier, rho: ContactRelation, ib: Ideal) -> Result<Self> {
        rho.validate_on(&carrier)?;
        match (&ib, &carrier) {
            (Ideal::Generated(g), c) => c.own(g)?,
            (Ideal::Bounded, Carrier::Atoms(_)) => {
                return Err(Error::WrongBackend {
                    op: "bounded ideal",
                    expected: "interval-line",
                })
            }
            _ => {}
        }
        Ok(ContactStructure { carrier, rho, ib })
    }

    /// `(P(n), graph, ideal generated by g)`, or `All` when `g` is `None`.
    pub fn finite(graph: AtomGraph, generator: Option<u64>) -> Result<Self> {
        let carrier = Carrier::atoms(graph.atom_count())?;
        let ib = match generator {
            None => Ideal::All,
            Some(g) => Ideal::Generated(carrier.element_from_mask(g)?),
        };
        Self::new(carrier, ContactRelation::AtomGraph(graph), ib)
    }

    /// `(interval line, rel, ib)`.
    pub fn line(rho: ContactRelation, ib: Ideal) -> Result<Self> {
        Self::new(Carrier::line(), rho, ib)
    }

    /// Same carrier and ideal, different relation.
    pub fn with_relation(&self, rho: ContactRelation) -> Result<Self> {
        Self::new(self.carrier.clone(), rho, self.ib.clone())
    }

    pub fn contact(&self, a: &Element, b: &Element) -> Result<bool> {
        self.rho.holds(&self.carrier, a, b)
    }

    /// `a ≪_ρ b` iff `a(-ρ)b*`.
    pub fn way_below(&self, a: &Element, b: &Element) -> Result<bool> {
        let bc = self.carrier.complement(b)?;
        Ok(!self.contact(a, &bc)?)
    }

    pub fn in_ideal(&self, a: &Element) -> Result<bool> {
        self.carrier.own(a)?;
        Ok(match (&self.ib, a.value()) {
            (Ideal::All, _) => true,
            (ib, Value::Intervals(s)) => ib.contains_line(s),
            (Ideal::Generated(g), Value::Atoms(m)) => m & !g.mask().expect("finite generator") == 0,
            (Ideal::Bounded, Value::Atoms(_)) => unreachable!("validated at construction"),
        })
    }

    pub fn one_in_ideal(&self) -> bool {
        self.in_ideal(&self.carrier.one()).expect("own element")
    }

    /// The relation clusters are taken in: `C_ρ` when `1 ∉ IB`, else `ρ`.
    pub fn designated_relation(&self) -> ContactRelation {
        if self.one_in_ideal() {
            self.rho.clone()
        } else {
            alexandroff_extension(self)
        }
    }

    pub fn finite_view(&self) -> Result<FiniteView> {
        let n = self.carrier.finite_atoms("finite view")?;
        Ok(FiniteView {
            n,
            full: full_mask(n),
            contact: self.rho.table(&self.carrier)?,
            ideal: self.ib.generator_mask(n)?,
        })
    }
}

/// Materialized relation and ideal of a finite structure, on raw masks.
#[derive(Clone, Debug)]
pub struct FiniteView {
    pub n: usize,
    pub full: u64,
    pub contact: RelTable,
    pub ideal: u64,
}

impl FiniteView {
    #[inline]
    pub fn contact(&self, a: u64, b: u64) -> bool {
        self.contact.get(a, b)
    }

    #[inline]
    pub fn way_below(&self, a: u64, b: u64) -> bool {
        !self.contact.get(a, !b & self.full)
    }

    #[inline]
    pub fn in_ideal(&self, a: u64) -> bool {
        a & !self.ideal == 0
    }

    pub fn elements(&self) -> std::ops::RangeInclusive<u64> {
        0..=self.full
    }
}

/// Wraps a validated reflexive-symmetric atom graph.
pub fn contact_from_atom_graph(graph: AtomGraph) -> Result<ContactRelation> {
    let AtomGraph { n, adj } = graph;
    AtomGraph::from_adjacency(n, adj).map(ContactRelation::AtomGraph)
}

pub fn way_below(structure: &ContactStructure, a: &Element, b: &Element) -> Result<bool> {
    structure.way_below(a, b)
}

/// `C_ρ`: `a C_ρ b` iff `aρb` or `a, b ∉ IB`.
pub fn alexandroff_extension(structure: &ContactStructure) -> ContactRelation {
    ContactRelation::Alexandroff(Box::new(structure.clone()))
}

/// `C_βρ`, the relation of complete separation.
pub fn beta_rho(structure: &ContactStructure) -> ContactRelation {
    ContactRelation::BetaRho(Box::new(structure.clone()))
}

/// Relation defined by simultaneous interpolation under every member.
pub fn supremum_relation(
    base: &ContactStructure,
    relations: Vec<ContactRelation>,
) -> Result<ContactRelation> {
    if relations.is_empty() {
        return Err(Error::EmptyRelationList);
    }
    let rel = ContactRelation::Supremum(relations);
    rel.validate_on(&base.carrier)?;
    Ok(rel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn overlap(a: u64, b: u64) -> bool {
        a & b != 0
    }

    #[test]
    fn loops_only_is_overlap() {
        let rel = contact_from_atom_graph(AtomGraph::loops_only(3)).unwrap();
        let c = Carrier::atoms(3).unwrap();
        let t = rel.table(&c).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(t.get(a, b), overlap(a, b));
            }
        }
    }

    #[test]
    fn complete_graph_is_largest_relation() {
        let rel = contact_from_atom_graph(AtomGraph::complete(2)).unwrap();
        let c = Carrier::atoms(2).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let e = |m| c.element_from_mask(m).unwrap();
                assert_eq!(rel.holds(&c, &e(a), &e(b)).unwrap(), a != 0 && b != 0);
            }
        }
    }

    #[test]
    fn zero_never_in_contact() {
        for g in AtomGraph::all(3) {
            for b in 0..8 {
                assert!(!g.holds(0, b));
            }
        }
    }

    #[test]
    fn invalid_graphs_rejected() {
        let no_loop = AtomGraph::from_adjacency_unchecked(2, vec![0b01, 0b00]).unwrap();
        assert!(matches!(
            contact_from_atom_graph(no_loop),
            Err(Error::InvalidGraph(_))
        ));
        let asym = AtomGraph::from_adjacency_unchecked(2, vec![0b11, 0b10]).unwrap();
        assert!(contact_from_atom_graph(asym).is_err());
    }

    #[test]
    fn graph_enumeration_size() {
        assert_eq!(AtomGraph::all(1).len(), 1);
        assert_eq!(AtomGraph::all(3).len(), 8);
        assert_eq!(AtomGraph::all(4).len(), 64);
    }

    #[test]
    fn way_below_overlap_is_inclusion() {
        let s = ContactStructure::finite(AtomGraph::loops_only(3), None).unwrap();
        let els: Vec<_> = s.carrier.elements().unwrap().collect();
        for a in &els {
            for b in &els {
                assert_eq!(s.way_below(a, b).unwrap(), s.carrier.leq(a, b).unwrap());
            }
        }
    }

    #[test]
    fn way_below_standard_line() {
        let s = ContactStructure::line(ContactRelation::Standard, Ideal::Bounded).unwrap();
        let e = |p| s.carrier.interval(IntervalSet::ints(p)).unwrap();
        let a = e(&[(Some(0), Some(1))]);
        assert!(s.way_below(&a, &e(&[(Some(-1), Some(2))])).unwrap());
        assert!(!s.way_below(&a, &e(&[(Some(0), Some(2))])).unwrap());
    }

    #[test]
    fn alexandroff_on_line() {
        let s = ContactStructure::line(ContactRelation::Standard, Ideal::Bounded).unwrap();
        let c = alexandroff_extension(&s);
        let e = |p| s.carrier.interval(IntervalSet::ints(p)).unwrap();
        let up = e(&[(Some(1), None)]);
        let down = e(&[(None, Some(-1))]);
        assert!(c.holds(&s.carrier, &up, &down).unwrap());
        assert!(!c
            .holds(
                &s.carrier,
                &e(&[(Some(0), Some(1))]),
                &e(&[(Some(2), Some(3))])
            )
            .unwrap());
        let b = beta_rho(&s);
        assert!(!b.holds(&s.carrier, &up, &down).unwrap());
    }

    #[test]
    fn alexandroff_with_all_ideal_is_rho() {
        for g in AtomGraph::all(3) {
            let s = ContactStructure::finite(g, None).unwrap();
            let c = alexandroff_extension(&s).table(&s.carrier).unwrap();
            assert_eq!(c, s.rho.table(&s.carrier).unwrap());
        }
    }

    #[test]
    fn beta_rho_of_overlap_is_overlap() {
        for n in 1..=4 {
            let s = ContactStructure::finite(AtomGraph::loops_only(n), None).unwrap();
            let b = beta_rho(&s).table(&s.carrier).unwrap();
            assert_eq!(b, s.rho.table(&s.carrier).unwrap());
        }
    }

    #[test]
    fn beta_rho_contains_rho() {
        for g in AtomGraph::all(3) {
            let s = ContactStructure::finite(g, None).unwrap();
            let rho = s.rho.table(&s.carrier).unwrap();
            let b = beta_rho(&s).table(&s.carrier).unwrap();
            for (a, c) in rho.pairs() {
                assert!(b.get(a, c));
            }
        }
    }

    #[test]
    fn supremum_rejects_empty_list() {
        let s = ContactStructure::finite(AtomGraph::loops_only(2), None).unwrap();
        assert!(matches!(
            supremum_relation(&s, vec![]),
            Err(Error::EmptyRelationList)
        ));
    }

    #[test]
    fn structure_rejects_mismatched_pieces() {
        assert!(ContactStructure::new(
            Carrier::atoms(2).unwrap(),
            ContactRelation::Standard,
            Ideal::All
        )
        .is_err());
        assert!(ContactStructure::new(
            Carrier::atoms(2).unwrap(),
            ContactRelation::AtomGraph(AtomGraph::loops_only(2)),
            Ideal::Bounded
        )
        .is_err());
        assert!(ContactStructure::new(
            Carrier::line(),
            ContactRelation::AtomGraph(AtomGraph::loops_only(2)),
            Ideal::All
        )
        .is_err());
    }
}
