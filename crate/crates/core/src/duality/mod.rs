//! Objects of the duality: the dual space of a local contact algebra, the
//! algebra of a space, and the comparison maps between them.

mod morphisms;

pub use morphisms::{
    atom_images, check_dhlc, check_lo, check_morphism, compose, lambda_a, lambda_a_ultrafilter,
    lambda_t, left_adjoint, AlgebraMorphism, IntervalRule, MorphismMap,
};

use crate::carrier::{full_mask, mask_atoms};
use crate::contact::{check_lca, check_nca, clusters, Cluster, ContactStructure};
use crate::error::{Error, Result};
use crate::report::Verdict;
use crate::sampling::SampleConfig;
use crate::spaces::{point_cluster, regular_closed_algebra, FiniteSpace, PointSet, SpaceMap};

/// The space of clusters of a finite local contact algebra.
#[derive(Clone, Debug)]
pub struct DualSpaceResult {
    pub structure: ContactStructure,
    pub space: FiniteSpace,
    /// Points of `space`, in order.
    pub clusters: Vec<Cluster>,
    /// `λ(a)` for every element mask `a`.
    pub lambda: Vec<PointSet>,
    /// Only bounded clusters are points (`1 ∉ IB`).
    pub bounded_only: bool,
}

impl DualSpaceResult {
    /// Index of the point whose cluster has the given members.
    pub fn point_of(&self, members: &crate::contact::MaskSet) -> Option<usize> {
        self.clusters
            .iter()
            .position(|c| c.members() == Some(members))
    }
}

fn require_pass(what: &str, reports: Vec<crate::report::AxiomReport>) -> Result<()> {
    match reports.into_iter().find(|r| !r.passed()) {
        Some(report) => Err(Error::AxiomFailure {
            what: what.to_string(),
            report,
        }),
        None => Ok(()),
    }
}

/// Checks the axioms a finite structure needs before taking its dual.
pub(crate) fn require_local_contact(s: &ContactStructure) -> Result<()> {
    let cfg = SampleConfig::default();
    if s.one_in_ideal() {
        require_pass("normal contact algebra", check_nca(s, &cfg)?)
    } else {
        require_pass("local contact algebra", check_lca(s, &cfg)?)
    }
}

/// `Ψᵃ`: clusters of `C_ρ` (bounded ones when `1 ∉ IB`) with the topology
/// whose closed base is `{λ(a)}`.
pub fn psi_a(s: &ContactStructure) -> Result<DualSpaceResult> {
    require_local_contact(s)?;
    let n = s.carrier.finite_atoms("dual space")?;
    let bounded_only = !s.one_in_ideal();
    let all = clusters(s)?;
    let pts: Vec<Cluster> = all
        .into_iter()
        .filter(|c| !bounded_only || c.is_bounded())
        .collect();
    let k = pts.len();
    let lambda: Vec<PointSet> = (0..=full_mask(n))
        .map(|a| {
            pts.iter()
                .enumerate()
                .filter(|(_, c)| c.members().expect("finite cluster").contains(a))
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    // Closed sets are the intersections of basic closed sets; the base is
    // already closed under finite unions.
    let full = full_mask(k);
    let mut closed: Vec<PointSet> = vec![full];
    for &l in &lambda {
        let extra: Vec<PointSet> = closed.iter().map(|&c| c & l).collect();
        closed.extend(extra);
        closed.sort_unstable();
        closed.dedup();
    }
    let opens = closed.iter().map(|&c| !c & full).collect();
    let names = pts.iter().map(|c| c.to_string()).collect();
    let space = FiniteSpace::from_opens(names, opens)?;
    Ok(DualSpaceResult {
        structure: s.clone(),
        space,
        clusters: pts,
        lambda,
        bounded_only,
    })
}

/// `Ψᵗ`: `(RC(X), ρ_X, CR(X))`.
pub fn psi_t(space: &FiniteSpace) -> Result<ContactStructure> {
    Ok(regular_closed_algebra(space)?.standard_structure())
}

/// `t_X: x ↦ σ_x` into `Ψᵃ(Ψᵗ(X))`.
pub fn t_map(space: &FiniteSpace) -> Result<SpaceMap> {
    let rc = regular_closed_algebra(space)?;
    let dual = psi_a(&rc.standard_structure())?;
    let mapping = space
        .names()
        .iter()
        .map(|x| {
            let sx = point_cluster(&rc, x)?;
            dual.point_of(sx.members().expect("finite cluster"))
                .ok_or(Error::NoMatchingCluster)
        })
        .collect::<Result<Vec<_>>>()?;
    SpaceMap::new(space.clone(), dual.space, mapping)
}

pub fn is_homeomorphism(f: &SpaceMap) -> bool {
    use crate::spaces::MapProperty::*;
    [Continuous, Open, Injective, Surjective]
        .into_iter()
        .all(|p| f.is(p))
}

/// A named verdict in an isomorphism check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCheck {
    pub name: &'static str,
    pub verdict: Verdict,
}

impl IsoCheck {
    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }
}

/// `λᵍ: B → RC(Ψᵃ(B))` is a Boolean isomorphism preserving contact and the
/// ideal in both directions.
pub fn lambda_g_iso_check(s: &ContactStructure) -> Result<Vec<IsoCheck>> {
    let dual = psi_a(s)?;
    check_lambda_table(s, &dual, &dual.lambda)
}

/// [`lambda_g_iso_check`] against an arbitrary table of `λ` images.
pub fn check_lambda_table(
    s: &ContactStructure,
    dual: &DualSpaceResult,
    lambda: &[PointSet],
) -> Result<Vec<IsoCheck>> {
    use crate::report::Witness;
    let n = s.carrier.finite_atoms("λ check")?;
    let full = full_mask(n);
    let view = s.finite_view()?;
    let rc = regular_closed_algebra(&dual.space)?;
    let target = rc.standard_structure().finite_view()?;
    let el = |m: u64| Witness::Element(s.carrier.element_from_mask(m).expect("in range"));
    let mut out = Vec::new();

    let masks: Vec<Option<u64>> = lambda.iter().map(|&l| rc.points_to_mask(l).ok()).collect();
    let regular = match masks.iter().position(Option::is_none) {
        Some(a) => Verdict::fail([("a", el(a as u64))]),
        None => Verdict::Pass,
    };
    let ok_regular = regular.is_pass();
    out.push(IsoCheck {
        name: "regular-closed images",
        verdict: regular,
    });
    if !ok_regular {
        return Ok(out);
    }
    let m: Vec<u64> = masks.into_iter().map(|x| x.expect("checked")).collect();

    let mut sorted = m.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let bijective = if sorted.len() == m.len() && rc.atom_count() == n {
        Verdict::Pass
    } else {
        let dup = (0..m.len()).find(|&a| m[..a].contains(&m[a])).unwrap_or(0);
        Verdict::fail([("a", el(dup as u64))])
    };
    out.push(IsoCheck {
        name: "bijective",
        verdict: bijective,
    });

    let mut joins = Verdict::Pass;
    let mut contact = Verdict::Pass;
    'pairs: for a in 0..=full {
        for b in 0..=full {
            if joins.is_pass() && m[(a | b) as usize] != m[a as usize] | m[b as usize] {
                joins = Verdict::fail([("a", el(a)), ("b", el(b))]);
            }
            if contact.is_pass()
                && view.contact(a, b) != target.contact(m[a as usize], m[b as usize])
            {
                contact = Verdict::fail([("a", el(a)), ("b", el(b))]);
            }
            if !joins.is_pass() && !contact.is_pass() {
                break 'pairs;
            }
        }
    }
    let complements =
        match (0..=full).find(|&a| m[(!a & full) as usize] != !m[a as usize] & rc.full()) {
            Some(a) => Verdict::fail([("a", el(a))]),
            None => Verdict::Pass,
        };
    // Every regular closed subset of a finite space is compact.
    let ideal = match (0..=full).find(|&a| !view.in_ideal(a) && !dual.bounded_only) {
        Some(a) => Verdict::fail([("a", el(a))]),
        None => Verdict::Pass,
    };
    out.push(IsoCheck {
        name: "joins",
        verdict: joins,
    });
    out.push(IsoCheck {
        name: "complements",
        verdict: complements,
    });
    out.push(IsoCheck {
        name: "contact",
        verdict: contact,
    });
    out.push(IsoCheck {
        name: "ideal",
        verdict: ideal,
    });
    Ok(out)
}

/// Atoms of `a` in `λ` order, for diagnostics.
pub fn lambda_points(dual: &DualSpaceResult, a: u64) -> Vec<String> {
    mask_atoms(dual.lambda[a as usize])
        .map(|i| dual.space.name(i).to_string())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::AtomGraph;

    fn overlap(n: usize) -> ContactStructure {
        ContactStructure::finite(AtomGraph::loops_only(n), None).unwrap()
    }

    #[test]
    fn overlap_dual_is_discrete() {
        let d = psi_a(&overlap(3)).unwrap();
        assert_eq!(d.space.len(), 3);
        assert!(d.space.is_discrete());
        let one = psi_a(&overlap(1)).unwrap();
        assert_eq!(one.space.len(), 1);
    }

    #[test]
    fn lambda_is_additive() {
        let d = psi_a(&overlap(3)).unwrap();
        for a in 0..8u64 {
            for b in 0..8u64 {
                assert_eq!(
                    d.lambda[(a | b) as usize],
                    d.lambda[a as usize] | d.lambda[b as usize]
                );
            }
        }
    }

    #[test]
    fn non_normal_input_rejected() {
        let s = ContactStructure::finite(AtomGraph::complete(2), None).unwrap();
        assert!(matches!(psi_a(&s), Err(Error::AxiomFailure { .. })));
    }

    #[test]
    fn t_map_is_homeomorphism_on_discrete() {
        for n in 1..=4 {
            let t = t_map(&FiniteSpace::discrete(n).unwrap()).unwrap();
            assert!(is_homeomorphism(&t));
        }
    }

    #[test]
    fn psi_t_examples() {
        let s = psi_t(&FiniteSpace::sierpinski()).unwrap();
        assert_eq!(s.carrier.atom_count(), Some(1));
        let c = psi_t(&FiniteSpace::circle4()).unwrap();
        assert_eq!(
            c.rho,
            crate::contact::ContactRelation::AtomGraph(AtomGraph::complete(2))
        );
    }

    #[test]
    fn lambda_iso_and_mutation() {
        for n in [2, 4] {
            let s = overlap(n);
            assert!(lambda_g_iso_check(&s).unwrap().iter().all(IsoCheck::passed));
        }
        let s = overlap(2);
        let d = psi_a(&s).unwrap();
        let mut bad = d.lambda.clone();
        bad.swap(0, 1);
        let r = check_lambda_table(&s, &d, &bad).unwrap();
        assert!(!r.iter().all(IsoCheck::passed));
    }
}
