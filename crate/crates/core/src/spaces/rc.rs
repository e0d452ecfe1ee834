//! Regular closed algebras of finite spaces.

use super::{DenseEmbedding, FiniteSpace, PointSet};
use crate::carrier::{full_mask, mask_atoms, AtomSetAlgebra, Carrier, Element};
use crate::contact::{
    AtomGraph, Cluster, ClusterWitness, ContactRelation, ContactStructure, Ideal, MaskSet,
};
use crate::error::{Error, Result};

/// `RC(X)` as an atom algebra: each atom is a minimal non-empty regular
/// closed set, and an element is the union of its atoms. With this encoding
/// union is the join, `cl(int(F ∩ G))` the meet and `cl(X \ F)` the
/// complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularClosedAlgebra {
    space: FiniteSpace,
    atoms: Vec<PointSet>,
    carrier: Carrier,
}

pub fn regular_closed_algebra(space: &FiniteSpace) -> Result<RegularClosedAlgebra> {
    let mut rc: Vec<PointSet> = space.opens().iter().map(|&u| space.closure(u)).collect();
    rc.sort_unstable();
    rc.dedup();
    let atoms: Vec<PointSet> = rc
        .iter()
        .copied()
        .filter(|&f| f != 0 && !rc.iter().any(|&g| g != 0 && g != f && g & !f == 0))
        .collect();
    if rc.len() != 1usize << atoms.len() {
        return Err(Error::InvalidTopology(
            "regular closed sets do not form an atomic algebra".into(),
        ));
    }
    let carrier = Carrier::Atoms(AtomSetAlgebra::labelled(
        atoms.len(),
        &format!("RC{}", space.label()),
    )?);
    Ok(RegularClosedAlgebra {
        space: space.clone(),
        atoms,
        carrier,
    })
}

impl RegularClosedAlgebra {
    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    /// Atoms as point sets, ascending.
    pub fn atoms(&self) -> &[PointSet] {
        &self.atoms
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn full(&self) -> u64 {
        full_mask(self.atoms.len())
    }

    pub fn mask_to_points(&self, m: u64) -> PointSet {
        mask_atoms(m).fold(0, |acc, i| acc | self.atoms[i])
    }

    pub fn to_points(&self, a: &Element) -> Result<PointSet> {
        self.carrier.own(a)?;
        Ok(self.mask_to_points(a.mask().expect("finite element")))
    }

    /// Element for a regular closed point set.
    pub fn points_to_mask(&self, s: PointSet) -> Result<u64> {
        let m = self
            .atoms
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a & !s == 0)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        if self.mask_to_points(m) != s {
            return Err(Error::InvalidElement(format!(
                "{} is not regular closed",
                self.space.format_set(s)
            )));
        }
        Ok(m)
    }

    pub fn element(&self, s: PointSet) -> Result<Element> {
        self.carrier.element_from_mask(self.points_to_mask(s)?)
    }

    /// Every regular closed set, in element mask order.
    pub fn rc_sets(&self) -> Vec<PointSet> {
        (0..=self.full()).map(|m| self.mask_to_points(m)).collect()
    }

    /// Closed-set form of `m`, written with point names.
    pub fn format_mask(&self, m: u64) -> String {
        self.space.format_set(self.mask_to_points(m))
    }

    /// Atom graph of `ρ_X`: atoms are adjacent iff they intersect.
    pub fn contact_graph(&self) -> AtomGraph {
        let n = self.atoms.len();
        let adj = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| self.atoms[i] & self.atoms[j] != 0)
                    .fold(0u64, |acc, j| acc | 1 << j)
            })
            .collect();
        AtomGraph::from_adjacency(n, adj).expect("intersection graph is reflexive and symmetric")
    }

    /// `(RC(X), ρ_X, CR(X))`. Every finite space is compact, so the compact
    /// regular closed sets are all of `RC(X)`.
    pub fn standard_structure(&self) -> ContactStructure {
        ContactStructure::new(
            self.carrier.clone(),
            ContactRelation::AtomGraph(self.contact_graph()),
            Ideal::All,
        )
        .expect("graph matches carrier")
    }

    /// `cl(int(F ∩ G))` computed on point sets.
    pub fn meet_points(&self, f: PointSet, g: PointSet) -> PointSet {
        self.space.closure(self.space.interior(f & g))
    }

    /// `cl(X \ F)` computed on point sets.
    pub fn complement_points(&self, f: PointSet) -> PointSet {
        self.space.closure(!f & self.space.full())
    }
}

/// `σ_x = {F | x ∈ F}`.
pub fn point_cluster(rc: &RegularClosedAlgebra, x: &str) -> Result<Cluster> {
    let p = rc.space.point(x)?;
    let set = MaskSet::from_fn(rc.atom_count(), |m| rc.mask_to_points(m) >> p & 1 == 1);
    Ok(Cluster::finite(
        rc.carrier.clone(),
        ClusterWitness::SpacePoint(x.to_string()),
        set,
        rc.full(),
    ))
}

/// `ν_x = {F | x ∈ int F}`.
pub fn point_filter(rc: &RegularClosedAlgebra, x: &str) -> Result<MaskSet> {
    let p = rc.space.point(x)?;
    Ok(MaskSet::from_fn(rc.atom_count(), |m| {
        rc.space.interior(rc.mask_to_points(m)) >> p & 1 == 1
    }))
}

/// The pair `r: RC(Y) → RC(X), F ↦ F ∩ X` and `e: RC(X) → RC(Y),
/// G ↦ cl_Y(G)` for a dense embedding, as element tables.
#[derive(Clone, Debug)]
pub struct RestrictionIso {
    pub rc_x: RegularClosedAlgebra,
    pub rc_y: RegularClosedAlgebra,
    pub r: Vec<u64>,
    pub e: Vec<u64>,
}

fn is_boolean_iso(table: &[u64], full_src: u64, full_dst: u64) -> bool {
    let bijective = {
        let mut seen: Vec<u64> = table.to_vec();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == table.len() && full_src == full_dst
    };
    bijective
        && (0..=full_src).all(|a| {
            table[(!a & full_src) as usize] == !table[a as usize] & full_dst
                && (0..=full_src)
                    .all(|b| table[(a | b) as usize] == table[a as usize] | table[b as usize])
        })
}

/// Builds `r` and `e` and verifies they are mutually inverse Boolean
/// isomorphisms.
pub fn dense_restriction_iso(emb: &DenseEmbedding) -> Result<RestrictionIso> {
    let f = emb.map();
    let rc_x = regular_closed_algebra(emb.base())?;
    let rc_y = regular_closed_algebra(emb.target())?;
    let r = (0..=rc_y.full())
        .map(|m| rc_x.points_to_mask(f.preimage(rc_y.mask_to_points(m))))
        .collect::<Result<Vec<_>>>()?;
    let e = (0..=rc_x.full())
        .map(|m| {
            let g = rc_x.mask_to_points(m);
            rc_y.points_to_mask(emb.target().closure(f.image(g)))
        })
        .collect::<Result<Vec<_>>>()?;
    let er = (0..=rc_y.full()).all(|m| e[r[m as usize] as usize] == m);
    let re = (0..=rc_x.full()).all(|m| r[e[m as usize] as usize] == m);
    if !er || !re {
        return Err(Error::Precondition(
            "restriction and closure are not mutually inverse".into(),
        ));
    }
    if !is_boolean_iso(&r, rc_y.full(), rc_x.full())
        || !is_boolean_iso(&e, rc_x.full(), rc_y.full())
    {
        return Err(Error::NotHomomorphism(
            "restriction or closure fails to preserve joins and complements".into(),
        ));
    }
    Ok(RestrictionIso { rc_x, rc_y, r, e })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::check_ca;
    use crate::report::all_pass;
    use crate::sampling::SampleConfig;

    #[test]
    fn discrete_rc_is_power_set_with_overlap() {
        let rc = regular_closed_algebra(&FiniteSpace::discrete(3).unwrap()).unwrap();
        assert_eq!(rc.atom_count(), 3);
        assert!(rc.contact_graph().is_loops_only());
    }

    #[test]
    fn sierpinski_rc_is_two_element() {
        let rc = regular_closed_algebra(&FiniteSpace::sierpinski()).unwrap();
        assert_eq!(rc.atom_count(), 1);
        assert_eq!(rc.rc_sets(), vec![0, 0b11]);
        assert!(rc.points_to_mask(0b01).is_err());
    }

    #[test]
    fn circle_rc_atoms_touch() {
        let c = FiniteSpace::circle4();
        let rc = regular_closed_algebra(&c).unwrap();
        let atoms: Vec<String> = rc.atoms().iter().map(|&a| c.format_set(a)).collect();
        assert_eq!(atoms, vec!["{a,b,d}", "{b,c,d}"]);
        assert_eq!(rc.contact_graph(), AtomGraph::complete(2));
        let sb = point_cluster(&rc, "b").unwrap();
        assert!(sb.members().unwrap().contains(0b01) && sb.members().unwrap().contains(0b10));
    }

    #[test]
    fn boolean_operations_match_point_formulas() {
        for n in 1..=3 {
            for t in FiniteSpace::all_topologies(n).unwrap() {
                let rc = regular_closed_algebra(&t).unwrap();
                for a in 0..=rc.full() {
                    let fa = rc.mask_to_points(a);
                    assert!(t.is_regular_closed(fa));
                    assert_eq!(rc.complement_points(fa), rc.mask_to_points(!a & rc.full()));
                    for b in 0..=rc.full() {
                        let fb = rc.mask_to_points(b);
                        assert_eq!(rc.meet_points(fa, fb), rc.mask_to_points(a & b));
                        assert_eq!(fa | fb, rc.mask_to_points(a | b));
                    }
                }
                let s = rc.standard_structure();
                assert!(all_pass(&check_ca(&s, &SampleConfig::default()).unwrap()));
            }
        }
    }

    #[test]
    fn point_filter_of_discrete() {
        let rc = regular_closed_algebra(&FiniteSpace::discrete(2).unwrap()).unwrap();
        let nu = point_filter(&rc, "0").unwrap();
        assert_eq!(nu.iter().collect::<Vec<_>>(), vec![1, 3]);
        assert!(point_filter(&rc, "zz").is_err());
    }

    #[test]
    fn sierpinski_restriction() {
        let emb = DenseEmbedding::subspace(&FiniteSpace::sierpinski(), 0b10).unwrap();
        let iso = dense_restriction_iso(&emb).unwrap();
        assert_eq!(iso.r, vec![0, 1]);
        assert_eq!(iso.e, vec![0, 1]);
    }

    #[test]
    fn identity_restriction() {
        let c = FiniteSpace::circle4();
        let iso = dense_restriction_iso(&DenseEmbedding::identity(&c)).unwrap();
        assert_eq!(iso.r, (0..4).collect::<Vec<_>>());
        assert_eq!(iso.e, iso.r);
    }
}
