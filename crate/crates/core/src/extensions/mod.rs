//! Local compactifications of finite spaces through admissible contact
//! structures on their regular closed algebras, and the extension of maps
//! over them.

mod conditions;
mod proximity;

pub use conditions::{
    check_compactification_conditions, check_main_conditions, check_req, continuous_extensions,
    extend_map, ClauseAgreement, CompactificationReport, ExtendedMap, MainReport,
};
pub use proximity::{
    bridge_to_local_proximity, check_eq, restrict_local_proximity, LocalProximity,
};

use rand::Rng;

use crate::carrier::{full_mask, Carrier, IntervalSet};
use crate::contact::{check_lca, AtomGraph, ContactRelation, ContactStructure, FiniteView, Ideal};
use crate::duality::psi_a;
use crate::error::{Error, Result};
use crate::report::{AxiomReport, CheckId, Verdict, Witness};
use crate::sampling::{anchors, random_bounded, random_element, SampleConfig};
use crate::spaces::{
    dense_restriction_iso, point_cluster, regular_closed_algebra, DenseEmbedding, FiniteSpace,
    MapProperty, PointSet, RegularClosedAlgebra, SpaceMap,
};

/// Verdict on one named condition.
pub type ConditionVerdict = AxiomReport;

/// Largest `RC(X)` atom count accepted by [`enumerate_admissible`] by default.
pub const DEFAULT_ATOM_BOUND: usize = 4;

/// A dense embedding `f: X → Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    embedding: DenseEmbedding,
}

impl Extension {
    pub fn new(embedding: DenseEmbedding) -> Self {
        Extension { embedding }
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        Extension::new(DenseEmbedding::identity(space))
    }

    pub fn base(&self) -> &FiniteSpace {
        self.embedding.base()
    }

    pub fn target(&self) -> &FiniteSpace {
        self.embedding.target()
    }

    pub fn map(&self) -> &SpaceMap {
        self.embedding.map()
    }

    pub fn embedding(&self) -> &DenseEmbedding {
        &self.embedding
    }
}

/// A contact structure on `RC(X)` for a finite space `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleStructure {
    rc: RegularClosedAlgebra,
    structure: ContactStructure,
}

impl AdmissibleStructure {
    pub fn new(rc: RegularClosedAlgebra, structure: ContactStructure) -> Result<Self> {
        if &structure.carrier != rc.carrier() {
            return Err(Error::MixedCarrier {
                left: structure.carrier.label(),
                right: rc.carrier().label(),
            });
        }
        Ok(AdmissibleStructure { rc, structure })
    }

    /// Relation given by an atom graph on the atoms of `RC(X)`, ideal
    /// generated by `generator` (all of `RC(X)` when `None`).
    pub fn from_graph(
        space: &FiniteSpace,
        graph: AtomGraph,
        generator: Option<u64>,
    ) -> Result<Self> {
        let rc = regular_closed_algebra(space)?;
        let ib = match generator {
            None => Ideal::All,
            Some(g) => Ideal::Generated(rc.carrier().element_from_mask(g)?),
        };
        let s = ContactStructure::new(rc.carrier().clone(), ContactRelation::AtomGraph(graph), ib)?;
        Self::new(rc, s)
    }

    /// `(RC(X), ρ_X, RC(X))`.
    pub fn standard(space: &FiniteSpace) -> Result<Self> {
        let rc = regular_closed_algebra(space)?;
        let s = rc.standard_structure();
        Self::new(rc, s)
    }

    pub fn space(&self) -> &FiniteSpace {
        self.rc.space()
    }

    pub fn rc(&self) -> &RegularClosedAlgebra {
        &self.rc
    }

    pub fn structure(&self) -> &ContactStructure {
        &self.structure
    }

    pub(crate) fn view(&self) -> Result<FiniteView> {
        self.structure.finite_view()
    }

    /// Same relation and ideal, whatever the presentation.
    pub fn same_as(&self, other: &Self) -> Result<bool> {
        if self.rc != other.rc {
            return Ok(false);
        }
        let (a, b) = (self.view()?, other.view()?);
        Ok(a.ideal == b.ideal && a.contact == b.contact)
    }

    /// `self ⪯_ad other`: `ρ_other ⊆ ρ_self` and `IB_other ⊆ IB_self`.
    pub fn precedes(&self, other: &Self) -> Result<bool> {
        let (a, b) = (self.view()?, other.view()?);
        let rel = (0..=a.full).all(|x| (0..=a.full).all(|y| !b.contact(x, y) || a.contact(x, y)));
        Ok(rel && b.ideal & !a.ideal == 0)
    }

    pub(crate) fn points(&self, m: u64) -> PointSet {
        self.rc.mask_to_points(m)
    }

    pub(crate) fn witness(&self, m: u64) -> Witness {
        Witness::Points(self.space().set_names(self.points(m)))
    }

    /// Ideal generator as a point set.
    pub fn bounded_points(&self) -> Result<PointSet> {
        Ok(self.points(self.view()?.ideal))
    }
}

fn point_witness(space: &FiniteSpace, x: usize) -> Witness {
    Witness::Points(vec![space.name(x).to_string()])
}

/// (A1) and (A2).
pub fn check_admissible(adm: &AdmissibleStructure) -> Result<Vec<ConditionVerdict>> {
    let v = adm.view()?;
    let space = adm.space();
    let mut a1 = Verdict::Pass;
    'a1: for f in 0..=v.full {
        for g in 0..=v.full {
            if adm.points(f) & adm.points(g) != 0 && !v.contact(f, g) {
                a1 = Verdict::fail([("F", adm.witness(f)), ("G", adm.witness(g))]);
                break 'a1;
            }
        }
    }
    let mut a2 = Verdict::Pass;
    'a2: for f in 0..=v.full {
        let int_f = space.interior(adm.points(f));
        for x in crate::carrier::mask_atoms(int_f) {
            let found = (0..=v.full).any(|g| {
                v.in_ideal(g) && space.interior(adm.points(g)) >> x & 1 == 1 && v.way_below(g, f)
            });
            if !found {
                a2 = Verdict::fail([("F", adm.witness(f)), ("x", point_witness(space, x))]);
                break 'a2;
            }
        }
    }
    Ok(vec![
        AxiomReport::new(CheckId::A1, a1),
        AxiomReport::new(CheckId::A2, a2),
    ])
}

fn require_pass(what: &str, reports: Vec<AxiomReport>) -> Result<()> {
    match reports.into_iter().find(|r| !r.passed()) {
        Some(report) => Err(Error::AxiomFailure {
            what: what.to_string(),
            report,
        }),
        None => Ok(()),
    }
}

/// `α_X` together with the transport `r: RC(Y) → RC(X), G ↦ f⁻¹(G)`.
#[derive(Clone, Debug)]
pub struct AlphaResult {
    pub admissible: AdmissibleStructure,
    /// `r` as an element table indexed by `RC(Y)` masks.
    pub transport: Vec<u64>,
}

/// `IB = f⁻¹(CR(Y))`, `F η G` iff `cl_Y f(F)` and `cl_Y f(G)` meet. Every
/// finite space is compact, so `IB` is all of `RC(X)`.
pub fn alpha(ext: &Extension) -> Result<AlphaResult> {
    let iso = dense_restriction_iso(ext.embedding())?;
    let (rc_x, rc_y) = (&iso.rc_x, &iso.rc_y);
    let f = ext.map();
    let y = ext.target();
    let closures: Vec<PointSet> = rc_x
        .atoms()
        .iter()
        .map(|&a| y.closure(f.image(a)))
        .collect();
    let n = closures.len();
    let adj = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| closures[i] & closures[j] != 0)
                .fold(0u64, |acc, j| acc | 1 << j)
        })
        .collect();
    let graph = AtomGraph::from_adjacency(n, adj)?;
    let adm = AdmissibleStructure::from_graph(ext.base(), graph, None)?;
    let eta = adm.view()?;
    let rho_y = rc_y.standard_structure().finite_view()?;
    for g in 0..=rc_y.full() {
        for h in 0..=rc_y.full() {
            if rho_y.contact(g, h) != eta.contact(iso.r[g as usize], iso.r[h as usize]) {
                return Err(Error::NotHomomorphism(
                    "restriction does not transport the contact relation".into(),
                ));
            }
        }
    }
    Ok(AlphaResult {
        admissible: adm,
        transport: iso.r,
    })
}

/// `β_X`: the cluster space with `x ↦ σ_x`.
pub fn beta(adm: &AdmissibleStructure) -> Result<Extension> {
    require_pass("admissible structure", check_admissible(adm)?)?;
    let dual = psi_a(adm.structure())?;
    let mapping = adm
        .space()
        .names()
        .iter()
        .map(|x| {
            let sx = point_cluster(adm.rc(), x)?;
            dual.point_of(sx.members().expect("finite cluster"))
                .ok_or(Error::NoMatchingCluster)
        })
        .collect::<Result<Vec<_>>>()?;
    let map = SpaceMap::new(adm.space().clone(), dual.space, mapping)?;
    Ok(Extension::new(DenseEmbedding::new(map)?))
}

/// A homeomorphism `h: Y1 → Y2` with `h ∘ f1 = f2`, by exhaustive search.
pub fn extension_equivalence(e1: &Extension, e2: &Extension) -> Result<Option<SpaceMap>> {
    if e1.base() != e2.base() {
        return Err(Error::Precondition("extensions of different spaces".into()));
    }
    if e1.target().len() != e2.target().len() {
        return Ok(None);
    }
    for h in SpaceMap::all(e1.target(), e2.target()) {
        let homeo = [
            MapProperty::Continuous,
            MapProperty::Open,
            MapProperty::Injective,
            MapProperty::Surjective,
        ]
        .into_iter()
        .all(|p| h.is(p));
        if homeo && h.after(e1.map())? == *e2.map() {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Admissible structures of a space ordered by `⪯_ad`.
#[derive(Clone, Debug)]
pub struct AdmissiblePoset {
    pub space: FiniteSpace,
    pub structures: Vec<AdmissibleStructure>,
    /// `(i, j)` for `structures[i] ⪯_ad structures[j]`, `i ≠ j`.
    pub order: Vec<(usize, usize)>,
}

impl AdmissiblePoset {
    /// Pairs `(i, j)` with `i ⪯ j` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.order
            .iter()
            .copied()
            .filter(|&(i, j)| {
                !(0..self.structures.len())
                    .any(|k| self.order.contains(&(i, k)) && self.order.contains(&(k, j)))
            })
            .collect()
    }
}

/// Every (graph, principal ideal) on `RC(X)` that is a local contact
/// algebra satisfying (A1) and (A2).
pub fn enumerate_admissible(space: &FiniteSpace, max_atoms: usize) -> Result<AdmissiblePoset> {
    let rc = regular_closed_algebra(space)?;
    let n = rc.atom_count();
    if n > max_atoms {
        return Err(Error::BoundExceeded {
            atoms: n,
            bound: max_atoms,
        });
    }
    let cfg = SampleConfig::default();
    let mut structures = Vec::new();
    for graph in AtomGraph::all(n) {
        for g in 0..=full_mask(n) {
            let generator = (g != full_mask(n)).then_some(g);
            let adm = AdmissibleStructure::from_graph(space, graph.clone(), generator)?;
            if crate::report::all_pass(&check_lca(adm.structure(), &cfg)?)
                && crate::report::all_pass(&check_admissible(&adm)?)
            {
                structures.push(adm);
            }
        }
    }
    let mut order = Vec::new();
    for (i, a) in structures.iter().enumerate() {
        for (j, b) in structures.iter().enumerate() {
            if i != j && a.precedes(b)? {
                order.push((i, j));
            }
        }
    }
    Ok(AdmissiblePoset {
        space: space.clone(),
        structures,
        order,
    })
}

/// (LA1)-(LA3) on a finite space. Every regular closed subset of a finite
/// space is compact.
pub fn check_la(adm: &AdmissibleStructure) -> Result<Vec<ConditionVerdict>> {
    let v = adm.view()?;
    let mut out = check_admissible(adm)?;
    out.truncate(1);
    out[0].axiom = CheckId::LA1;
    let la2 = match (0..=v.full).find(|&f| !v.in_ideal(f)) {
        Some(f) => Verdict::fail([("G", adm.witness(f))]),
        None => Verdict::Pass,
    };
    let mut la3 = Verdict::Pass;
    'la3: for f in 0..=v.full {
        for g in 0..=v.full {
            if v.contact(f, g) && adm.points(f) & adm.points(g) == 0 {
                la3 = Verdict::fail([("F", adm.witness(f)), ("G", adm.witness(g))]);
                break 'la3;
            }
        }
    }
    out.push(AxiomReport::new(CheckId::LA2, la2));
    out.push(AxiomReport::new(CheckId::LA3, la3));
    Ok(out)
}

/// (LA1)-(LA3) on the interval line, where `CR(ℝ)` is the bounded elements.
/// Runs every pair of anchors, then `cfg.samples` random pairs.
pub fn check_la_line(s: &ContactStructure, cfg: &SampleConfig) -> Result<Vec<ConditionVerdict>> {
    if !matches!(s.carrier, Carrier::Line(_)) {
        return Err(Error::WrongBackend {
            op: "interval LA check",
            expected: "interval-line",
        });
    }
    let line = Carrier::line();
    let el = |x: &IntervalSet| line.interval(x.clone()).expect("line element");
    let w = |x: &IntervalSet| Witness::Element(el(x));
    let base = anchors();
    let anchor_pairs: Vec<(IntervalSet, IntervalSet)> = base
        .iter()
        .flat_map(|a| base.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let verdict = |found: Option<Verdict>| {
        found.unwrap_or(Verdict::SampledPass {
            samples: cfg.samples,
        })
    };

    let mut la1 = None;
    let mut rng = cfg.rng_for("LA1");
    let random: Vec<_> = (0..cfg.samples)
        .map(|_| (random_element(&mut rng), random_element(&mut rng)))
        .collect();
    for (f, g) in anchor_pairs.iter().chain(&random) {
        if f.intersects(g) && !s.contact(&el(f), &el(g))? {
            la1 = Some(Verdict::fail([("F", w(f)), ("G", w(g))]));
            break;
        }
    }

    let mut la2 = None;
    let mut rng = cfg.rng_for("LA2");
    for g in base
        .iter()
        .filter(|g| g.is_bounded())
        .cloned()
        .chain((0..cfg.samples).map(|_| random_bounded(&mut rng)))
    {
        if !s.in_ideal(&el(&g))? {
            la2 = Some(Verdict::fail([("G", w(&g))]));
            break;
        }
    }

    let mut la3 = None;
    let mut rng = cfg.rng_for("LA3");
    let random: Vec<_> = (0..cfg.samples)
        .map(|_| {
            let f = random_element(&mut rng);
            let g = if rng.gen_bool(0.5) {
                random_bounded(&mut rng)
            } else {
                random_element(&mut rng)
            };
            (f, g)
        })
        .collect();
    for (f, g) in anchor_pairs.iter().chain(&random) {
        if g.is_bounded() && s.contact(&el(f), &el(g))? && !f.intersects(g) {
            la3 = Some(Verdict::fail([("F", w(f)), ("G", w(g))]));
            break;
        }
    }

    Ok(vec![
        AxiomReport::new(CheckId::LA1, verdict(la1)),
        AxiomReport::new(CheckId::LA2, verdict(la2)),
        AxiomReport::new(CheckId::LA3, verdict(la3)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::alexandroff_extension;
    use crate::report::{all_pass, find};

    fn discrete(n: usize) -> FiniteSpace {
        FiniteSpace::discrete(n).unwrap()
    }

    #[test]
    fn standard_discrete_is_admissible() {
        let adm = AdmissibleStructure::standard(&discrete(3)).unwrap();
        assert!(all_pass(&check_admissible(&adm).unwrap()));
        assert!(all_pass(&check_la(&adm).unwrap()));
    }

    #[test]
    fn complete_graph_passes_a1_but_not_lca() {
        let adm =
            AdmissibleStructure::from_graph(&discrete(2), AtomGraph::complete(2), None).unwrap();
        let r = check_admissible(&adm).unwrap();
        assert!(find(&r, CheckId::A1).unwrap().passed());
        let cfg = SampleConfig::default();
        assert!(!all_pass(&check_lca(adm.structure(), &cfg).unwrap()));
    }

    #[test]
    fn missing_overlap_fails_a1() {
        let g = AtomGraph::from_adjacency_unchecked(2, vec![0b00, 0b10]).unwrap();
        let adm = AdmissibleStructure::from_graph(&discrete(2), g, None).unwrap();
        let r = check_admissible(&adm).unwrap();
        let a1 = find(&r, CheckId::A1).unwrap();
        assert_eq!(a1.to_string(), "A1: FAIL at F={0}, G={0}");
    }

    #[test]
    fn alpha_of_identity_is_standard() {
        for n in 1..=3 {
            let x = discrete(n);
            let a = alpha(&Extension::identity(&x)).unwrap();
            assert!(a
                .admissible
                .same_as(&AdmissibleStructure::standard(&x).unwrap())
                .unwrap());
            assert_eq!(a.transport, (0..=full_mask(n)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn alpha_of_sierpinski_point() {
        let emb = DenseEmbedding::subspace(&FiniteSpace::sierpinski(), 0b10).unwrap();
        let a = alpha(&Extension::new(emb)).unwrap();
        assert_eq!(a.admissible.rc().atom_count(), 1);
    }

    #[test]
    fn alpha_beta_roundtrip() {
        for n in 1..=3 {
            let x = discrete(n);
            let poset = enumerate_admissible(&x, DEFAULT_ATOM_BOUND).unwrap();
            assert_eq!(poset.structures.len(), 1);
            let s = &poset.structures[0];
            let ext = beta(s).unwrap();
            assert_eq!(ext.target().len(), n);
            assert!(alpha(&ext).unwrap().admissible.same_as(s).unwrap());
            let id = Extension::identity(&x);
            assert!(extension_equivalence(&ext, &id).unwrap().is_some());
        }
    }

    #[test]
    fn enumeration_bound() {
        assert!(matches!(
            enumerate_admissible(&discrete(3), 2),
            Err(Error::BoundExceeded { atoms: 3, bound: 2 })
        ));
    }

    #[test]
    fn line_la() {
        let cfg = SampleConfig {
            samples: 300,
            seed: 7,
        };
        let s = ContactStructure::line(ContactRelation::Standard, Ideal::Bounded).unwrap();
        assert!(all_pass(&check_la_line(&s, &cfg).unwrap()));
        let alex = s.with_relation(alexandroff_extension(&s)).unwrap();
        let r = check_la_line(&alex, &cfg).unwrap();
        assert!(find(&r, CheckId::LA3).unwrap().passed());
        let two = s.with_relation(ContactRelation::TwoPoint).unwrap();
        assert!(all_pass(&check_la_line(&two, &cfg).unwrap()));
    }
}
