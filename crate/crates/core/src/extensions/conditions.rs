//! R-equicontinuity, the extension `L(f)`, and the conditions deciding
//! properties of `L(f)` from `f`.

use std::fmt;

use super::{beta, bridge_to_local_proximity, require_pass, AdmissibleStructure, Extension};
use crate::duality::{lambda_a, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::report::{AxiomReport, CheckId, Verdict, Witness};
use crate::spaces::{FiniteSpace, MapProperty, PointSet, SpaceMap};

fn require_matching(
    f: &SpaceMap,
    s1: &AdmissibleStructure,
    s2: &AdmissibleStructure,
) -> Result<()> {
    if f.domain() != s1.space() || f.codomain() != s2.space() {
        return Err(Error::Precondition(
            "map endpoints differ from the spaces of the structures".into(),
        ));
    }
    if !f.is(MapProperty::Continuous) {
        return Err(Error::NotContinuous);
    }
    Ok(())
}

/// `cl(int(S))` as an `RC(X)` mask.
fn regularize(adm: &AdmissibleStructure, s: PointSet) -> u64 {
    let x = adm.space();
    adm.rc()
        .points_to_mask(x.closure(x.interior(s)))
        .expect("closure of an open set is regular closed")
}

/// `φ_f(G) = cl_{X1}(f⁻¹(int_{X2}(G)))` indexed by `RC(X2)` masks.
fn phi_table(f: &SpaceMap, s1: &AdmissibleStructure, s2: &AdmissibleStructure) -> Vec<u64> {
    let (x1, x2) = (s1.space(), s2.space());
    (0..=s2.rc().full())
        .map(|g| {
            let pts = x1.closure(f.preimage(x2.interior(s2.points(g))));
            s1.rc()
                .points_to_mask(pts)
                .expect("closure of an open set is regular closed")
        })
        .collect()
}

/// (REQ1) and (REQ2), evaluated literally.
pub fn check_req(
    f: &SpaceMap,
    s1: &AdmissibleStructure,
    s2: &AdmissibleStructure,
) -> Result<Vec<AxiomReport>> {
    require_matching(f, s1, s2)?;
    let (v1, v2) = (s1.view()?, s2.view()?);
    let mut req1 = Verdict::Pass;
    'req1: for a in 0..=v2.full {
        for b in 0..=v2.full {
            let fa = regularize(s1, f.preimage(s2.points(a)));
            let fb = regularize(s1, f.preimage(s2.points(b)));
            if v1.contact(fa, fb) && !v2.contact(a, b) {
                req1 = Verdict::fail([("F", s2.witness(a)), ("G", s2.witness(b))]);
                break 'req1;
            }
        }
    }
    let req2 = match (0..=v1.full).filter(|&a| v1.in_ideal(a)).find(|&a| {
        let image = f.image(s1.points(a));
        !(0..=v2.full).any(|g| v2.in_ideal(g) && image & !s2.points(g) == 0)
    }) {
        Some(a) => Verdict::fail([("F", s1.witness(a))]),
        None => Verdict::Pass,
    };
    Ok(vec![
        AxiomReport::new(CheckId::REQ1, req1),
        AxiomReport::new(CheckId::REQ2, req2),
    ])
}

/// `g = L(f)` with the two extensions it connects.
#[derive(Clone, Debug)]
pub struct ExtendedMap {
    pub g: SpaceMap,
    pub e1: Extension,
    pub e2: Extension,
    /// `φ_f: RC(X2) → RC(X1)`.
    pub phi: AlgebraMorphism,
}

/// `L(f) = Λᵃ(φ_f)`, verified to satisfy `g ∘ f1 = f2 ∘ f`.
pub fn extend_map(
    f: &SpaceMap,
    s1: &AdmissibleStructure,
    s2: &AdmissibleStructure,
) -> Result<ExtendedMap> {
    require_pass("R-equicontinuity", check_req(f, s1, s2)?)?;
    let phi = AlgebraMorphism::from_table(
        s2.structure().clone(),
        s1.structure().clone(),
        phi_table(f, s1, s2),
    )?;
    let g = lambda_a(&phi)?;
    let e1 = beta(s1)?;
    let e2 = beta(s2)?;
    if g.after(e1.map())? != e2.map().after(f)? {
        return Err(Error::Precondition(
            "extension does not commute with the embeddings".into(),
        ));
    }
    Ok(ExtendedMap { g, e1, e2, phi })
}

/// Every continuous `g: Y1 → Y2` with `g ∘ f1 = f2 ∘ f`.
pub fn continuous_extensions(
    f: &SpaceMap,
    e1: &Extension,
    e2: &Extension,
) -> Result<Vec<SpaceMap>> {
    let rhs = e2.map().after(f)?;
    let mut out = Vec::new();
    for g in SpaceMap::all_continuous(e1.target(), e2.target()) {
        if g.after(e1.map())? == rhs {
            out.push(g);
        }
    }
    Ok(out)
}

/// One clause: an algebraic condition on `f` against a property of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseAgreement {
    pub clause: &'static str,
    pub statement: &'static str,
    pub condition: bool,
    pub property: bool,
}

impl ClauseAgreement {
    pub fn agrees(&self) -> bool {
        self.condition == self.property
    }
}

impl fmt::Display for ClauseAgreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) {}: condition={} property={} {}",
            self.clause,
            self.statement,
            self.condition,
            self.property,
            if self.agrees() { "agree" } else { "DISAGREE" }
        )
    }
}

#[derive(Clone, Debug)]
pub struct MainReport {
    pub conditions: Vec<AxiomReport>,
    pub extended: ExtendedMap,
    pub properties: Vec<(&'static str, bool)>,
    pub clauses: Vec<ClauseAgreement>,
    /// Both spaces are discrete, so the extensions are local
    /// compactifications of Tychonoff spaces. Otherwise the run is
    /// exploratory and agreement is not expected.
    pub hypotheses_hold: bool,
}

impl MainReport {
    pub fn all_agree(&self) -> bool {
        self.clauses.iter().all(ClauseAgreement::agrees)
    }

    pub fn condition(&self, id: CheckId) -> bool {
        self.conditions.iter().any(|r| r.axiom == id && r.passed())
    }
}

fn note(s: &str) -> Witness {
    Witness::Note(s.to_string())
}

fn subset_witness(space: &FiniteSpace, s: PointSet) -> Witness {
    Witness::Points(space.set_names(s))
}

/// Skeletal, (O), (O1), (O2), (P), (I), (OI) and density of `f(X1)`,
/// together with the properties of `g = L(f)` and the agreement of each
/// clause.
pub fn check_main_conditions(
    f: &SpaceMap,
    s1: &AdmissibleStructure,
    s2: &AdmissibleStructure,
) -> Result<MainReport> {
    let extended = extend_map(f, s1, s2)?;
    let (x1, x2) = (s1.space(), s2.space());
    let (v1, v2) = (s1.view()?, s2.view()?);
    let lp1 = bridge_to_local_proximity(s1)?;
    let lp2 = bridge_to_local_proximity(s2)?;
    let phi = extended.phi.table().expect("finite table").to_vec();
    let cl_image = |s: PointSet| x2.closure(f.image(s));
    let bounded1: Vec<u64> = (0..=v1.full).filter(|&a| v1.in_ideal(a)).collect();
    let bounded2: Vec<u64> = (0..=v2.full).filter(|&a| v2.in_ideal(a)).collect();

    let skeletal = if f.is(MapProperty::Skeletal) {
        Verdict::Pass
    } else {
        Verdict::fail([("f", note("not skeletal"))])
    };

    let mut o = Verdict::Pass;
    let mut o1 = Verdict::Pass;
    for &a in &bounded1 {
        for b in 0..=v1.full {
            if !v1.way_below(a, b) {
                continue;
            }
            let (ca, cb) = (cl_image(s1.points(a)), cl_image(s1.points(b)));
            let bind = || vec![("F", s1.witness(a)), ("G", s1.witness(b))];
            if o.is_pass() {
                match (s2.rc().points_to_mask(ca), s2.rc().points_to_mask(cb)) {
                    (Ok(ma), Ok(mb)) => {
                        if !v2.way_below(ma, mb) {
                            o = Verdict::fail(bind());
                        }
                    }
                    _ => {
                        let mut w = bind();
                        w.push(("why", note("closure of the image is not regular closed")));
                        o = Verdict::fail(w);
                    }
                }
            }
            if o1.is_pass() && !lp2.way_below(ca, cb) {
                o1 = Verdict::fail(bind());
            }
        }
    }

    let mut o2 = Verdict::Pass;
    let bound1 = s1.bounded_points()?;
    'o2: for a in 0..=x1.full() {
        if a & !bound1 != 0 {
            continue;
        }
        for b in 0..=x1.full() {
            if lp1.way_below(a, b) && !lp2.way_below(f.image(a), cl_image(b)) {
                o2 = Verdict::fail([("A", subset_witness(x1, a)), ("B", subset_witness(x1, b))]);
                break 'o2;
            }
        }
    }

    let p = match bounded2.iter().find(|&&g| !v1.in_ideal(phi[g as usize])) {
        Some(&g) => Verdict::fail([("G", s2.witness(g))]),
        None => Verdict::Pass,
    };

    let mut i = Verdict::Pass;
    'i: for &a in &bounded1 {
        for &b in &bounded1 {
            if v1.contact(a, b) {
                continue;
            }
            let found = bounded2.iter().any(|&g1| {
                bounded2.iter().any(|&g2| {
                    let h = phi[g2 as usize];
                    v2.way_below(g1, g2) && a & !h == 0 && !v1.contact(h, b)
                })
            });
            if !found {
                i = Verdict::fail([("F1", s1.witness(a)), ("F2", s1.witness(b))]);
                break 'i;
            }
        }
    }

    let oi = match (0..=v1.full).find(|&a| !phi.contains(&a)) {
        Some(a) => Verdict::fail([("F", s1.witness(a))]),
        None => Verdict::Pass,
    };

    let f_dense = x2.is_dense(f.image(x1.full()));
    let dense = if f_dense {
        Verdict::Pass
    } else {
        Verdict::fail([("f(X1)", subset_witness(x2, f.image(x1.full())))])
    };

    let conditions = vec![
        AxiomReport::new(CheckId::Skeletal, skeletal),
        AxiomReport::new(CheckId::O, o),
        AxiomReport::new(CheckId::O1, o1),
        AxiomReport::new(CheckId::O2, o2),
        AxiomReport::new(CheckId::P, p),
        AxiomReport::new(CheckId::I, i),
        AxiomReport::new(CheckId::OI, oi),
        AxiomReport::new(CheckId::DenseImage, dense),
    ];
    let holds = |id: CheckId| conditions.iter().any(|r| r.axiom == id && r.passed());

    let g = &extended.g;
    let g_skeletal = g.is(MapProperty::Skeletal);
    let g_open = g.is(MapProperty::Open);
    let g_perfect = g.is(MapProperty::Perfect);
    let g_injective = g.is(MapProperty::Injective);
    let g_dense = g.is(MapProperty::DenseImage);
    let g_surjective = g.is(MapProperty::Surjective);
    let properties = vec![
        ("skeletal", g_skeletal),
        ("open", g_open),
        ("perfect", g_perfect),
        ("injective", g_injective),
        ("open injection", g_open && g_injective),
        ("dense image", g_dense),
        ("perfect surjection", g_perfect && g_surjective),
    ];
    let clause = |clause, statement, condition, property| ClauseAgreement {
        clause,
        statement,
        condition,
        property,
    };
    let clauses = vec![
        clause(
            "a",
            "f skeletal <=> g skeletal",
            holds(CheckId::Skeletal),
            g_skeletal,
        ),
        clause(
            "b",
            "f skeletal and (O) <=> g open",
            holds(CheckId::Skeletal) && holds(CheckId::O),
            g_open,
        ),
        clause("b'", "(O1) <=> g open", holds(CheckId::O1), g_open),
        clause("b''", "(O2) <=> g open", holds(CheckId::O2), g_open),
        clause("c", "(P) <=> g perfect", holds(CheckId::P), g_perfect),
        clause("d", "f(X1) dense <=> g(Y1) dense", f_dense, g_dense),
        clause("e", "(I) <=> g injective", holds(CheckId::I), g_injective),
        clause(
            "f",
            "(O1) and (OI) <=> g open injection",
            holds(CheckId::O1) && holds(CheckId::OI),
            g_open && g_injective,
        ),
        clause(
            "g",
            "(P) and f(X1) dense <=> g perfect surjection",
            holds(CheckId::P) && f_dense,
            g_perfect && g_surjective,
        ),
    ];
    Ok(MainReport {
        conditions,
        hypotheses_hold: x1.is_discrete() && x2.is_discrete(),
        extended,
        properties,
        clauses,
    })
}

/// Connected components of a finite space.
fn components(space: &FiniteSpace) -> Vec<PointSet> {
    let n = space.len();
    let mut comp: Vec<PointSet> = (0..n).map(|x| 1 << x).collect();
    for (x, y) in space.specialization_pairs() {
        let merged = comp[x] | comp[y];
        for c in comp.iter_mut() {
            if *c & merged != 0 {
                *c = merged;
            }
        }
        for c in comp.iter_mut() {
            if *c & merged != 0 {
                *c |= merged;
            }
        }
    }
    let mut out = comp;
    out.sort_unstable();
    out.dedup();
    out
}

/// `A` and `B` are completely separated. Real-valued continuous functions
/// on a finite space are constant on components, so this holds iff no
/// component meets both sets.
pub fn completely_separated(space: &FiniteSpace, a: PointSet, b: PointSet) -> bool {
    components(space).iter().all(|&c| c & a == 0 || c & b == 0)
}

#[derive(Clone, Debug)]
pub struct CompactificationReport {
    pub conditions: Vec<AxiomReport>,
    /// Openness of the extension `g` between the compactifications.
    pub g_open: bool,
}

impl CompactificationReport {
    /// Annotation printed next to a condition.
    pub fn remark(id: CheckId) -> Option<&'static str> {
        match id {
            CheckId::Poljakov => Some("sufficient, not necessary"),
            _ => None,
        }
    }
}

/// (OC) for the proximities of compact structures, (OB) and Poljakov's
/// condition for complete separation, each quantified over `P(X1)`.
pub fn check_compactification_conditions(
    f: &SpaceMap,
    s1: &AdmissibleStructure,
    s2: &AdmissibleStructure,
) -> Result<CompactificationReport> {
    require_matching(f, s1, s2)?;
    if !s1.structure().one_in_ideal() || !s2.structure().one_in_ideal() {
        return Err(Error::Precondition(
            "compactification conditions need structures with every element bounded".into(),
        ));
    }
    let extended = extend_map(f, s1, s2)?;
    let (x1, x2) = (s1.space(), s2.space());
    let d1 = bridge_to_local_proximity(s1)?;
    let d2 = bridge_to_local_proximity(s2)?;
    let sub = |s: PointSet| subset_witness(x1, s);

    let mut oc = Verdict::Pass;
    let mut ob = Verdict::Pass;
    let mut pol = Verdict::Pass;
    for a in 0..=x1.full() {
        for b in 0..=x1.full() {
            if oc.is_pass()
                && d1.way_below(a, b)
                && !d2.way_below(f.image(a), x2.closure(f.image(b)))
            {
                oc = Verdict::fail([("A", sub(a)), ("B", sub(b))]);
            }
            if !completely_separated(x1, a, b) {
                continue;
            }
            let rest = f.image(!b & x1.full());
            if ob.is_pass() && !completely_separated(x2, f.image(a), !x2.closure(rest) & x2.full())
            {
                ob = Verdict::fail([("A", sub(a)), ("B", sub(b))]);
            }
            if pol.is_pass() && !completely_separated(x2, f.image(a), !rest & x2.full()) {
                pol = Verdict::fail([("A", sub(a)), ("B", sub(b))]);
            }
        }
    }
    Ok(CompactificationReport {
        conditions: vec![
            AxiomReport::new(CheckId::OC, oc),
            AxiomReport::new(CheckId::OB, ob),
            AxiomReport::new(CheckId::Poljakov, pol),
        ],
        g_open: extended.g.is(MapProperty::Open),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::AtomGraph;
    use crate::report::{all_pass, find};

    fn discrete(n: usize) -> FiniteSpace {
        FiniteSpace::discrete(n).unwrap()
    }

    fn standard(n: usize) -> AdmissibleStructure {
        AdmissibleStructure::standard(&discrete(n)).unwrap()
    }

    #[test]
    fn identity_passes_everything() {
        let s = standard(2);
        let f = SpaceMap::identity(s.space());
        assert!(all_pass(&check_req(&f, &s, &s).unwrap()));
        let r = check_main_conditions(&f, &s, &s).unwrap();
        assert!(all_pass(&r.conditions));
        assert!(r.properties.iter().all(|p| p.1));
        assert!(r.all_agree() && r.hypotheses_hold);
    }

    #[test]
    fn dropped_contact_pair_fails_req1() {
        let s1 = standard(2);
        let g = AtomGraph::from_adjacency_unchecked(2, vec![0b00, 0b10]).unwrap();
        let s2 = AdmissibleStructure::from_graph(&discrete(2), g, None).unwrap();
        let f = SpaceMap::identity(s1.space());
        let r = check_req(&f, &s1, &s2).unwrap();
        let req1 = find(&r, CheckId::REQ1).unwrap();
        assert_eq!(req1.to_string(), "REQ1: FAIL at F={0}, G={0}");
        assert!(matches!(
            extend_map(&f, &s1, &s2),
            Err(Error::AxiomFailure { .. })
        ));
    }

    #[test]
    fn constant_map_clauses() {
        let (s1, s2) = (standard(2), standard(2));
        let f = SpaceMap::new(discrete(2), discrete(2), vec![0, 0]).unwrap();
        let r = check_main_conditions(&f, &s1, &s2).unwrap();
        assert!(r.all_agree());
        assert!(r.condition(CheckId::P));
        assert!(!r.condition(CheckId::I));
        assert!(!r.condition(CheckId::DenseImage));
        let c = check_compactification_conditions(&f, &s1, &s2).unwrap();
        assert!(all_pass(&c.conditions) && c.g_open);
    }

    #[test]
    fn extension_is_unique() {
        let (s1, s2) = (standard(3), standard(2));
        for f in SpaceMap::all(s1.space(), s2.space()) {
            let e = extend_map(&f, &s1, &s2).unwrap();
            let all = continuous_extensions(&f, &e.e1, &e.e2).unwrap();
            assert_eq!(all, vec![e.g.clone()]);
        }
    }

    #[test]
    fn components_of_spaces() {
        assert!(completely_separated(&discrete(2), 0b01, 0b10));
        assert!(!completely_separated(
            &FiniteSpace::sierpinski(),
            0b01,
            0b10
        ));
        assert!(!completely_separated(
            &FiniteSpace::circle4(),
            0b0001,
            0b0100
        ));
    }
}
