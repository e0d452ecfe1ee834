//! Local proximities on the full power set of a finite space.

use super::{check_admissible, require_pass, AdmissibleStructure};
use crate::carrier::full_mask;
use crate::contact::{check_lca, AtomGraph};
use crate::error::{Error, Result};
use crate::report::{AxiomReport, CheckId, Verdict, Witness};
use crate::sampling::SampleConfig;
use crate::spaces::{regular_closed_algebra, FiniteSpace, PointSet, SpaceMap};

/// Largest point count for which the power-set relation is materialized.
pub const MAX_PROXIMITY_POINTS: usize = 6;

/// `(X, β, 𝓑)` with `β` and `𝓑` stored as truth tables over `P(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalProximity {
    space: FiniteSpace,
    beta: Vec<bool>,
    bounded: Vec<bool>,
}

impl LocalProximity {
    /// Validates that `bounded` is an ideal of `P(X)`.
    pub fn new(
        space: FiniteSpace,
        beta: impl Fn(PointSet, PointSet) -> bool,
        bounded: impl Fn(PointSet) -> bool,
    ) -> Result<Self> {
        let n = space.len();
        if n > MAX_PROXIMITY_POINTS {
            return Err(Error::BoundExceeded {
                atoms: n,
                bound: MAX_PROXIMITY_POINTS,
            });
        }
        let size = 1usize << n;
        let beta: Vec<bool> = (0..size * size)
            .map(|i| beta((i / size) as u64, (i % size) as u64))
            .collect();
        let bounded: Vec<bool> = (0..size as u64).map(bounded).collect();
        if !bounded[0] {
            return Err(Error::Precondition(
                "bounded family misses the empty set".into(),
            ));
        }
        for m in 0..size {
            for k in 0..size {
                if bounded[m] && k & !m == 0 && !bounded[k] {
                    return Err(Error::Precondition(
                        "bounded family is not downward closed".into(),
                    ));
                }
                if bounded[m] && bounded[k] && !bounded[m | k] {
                    return Err(Error::Precondition(
                        "bounded family is not closed under unions".into(),
                    ));
                }
            }
        }
        Ok(LocalProximity {
            space,
            beta,
            bounded,
        })
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    fn size(&self) -> usize {
        1 << self.space.len()
    }

    pub fn holds(&self, m: PointSet, n: PointSet) -> bool {
        self.beta[m as usize * self.size() + n as usize]
    }

    pub fn is_bounded(&self, m: PointSet) -> bool {
        self.bounded[m as usize]
    }

    /// `A ≪ B` iff `A(-β)(X \ B)`.
    pub fn way_below(&self, a: PointSet, b: PointSet) -> bool {
        !self.holds(a, !b & self.space.full())
    }

    fn subsets(&self) -> std::ops::RangeInclusive<u64> {
        0..=self.space.full()
    }

    fn w(&self, m: PointSet) -> Witness {
        Witness::Points(self.space.set_names(m))
    }

    /// C1-C4 for `β` on `P(X)`, BC1, BC2, separation, and that
    /// `cl(M) = {x | {x} β M}` gives back the topology of the space.
    pub fn check(&self) -> Vec<AxiomReport> {
        let pairs = |bad: &dyn Fn(u64, u64) -> bool| {
            for a in self.subsets() {
                for b in self.subsets() {
                    if bad(a, b) {
                        return Verdict::fail([("a", self.w(a)), ("b", self.w(b))]);
                    }
                }
            }
            Verdict::Pass
        };
        let c1 = match self.subsets().find(|&a| a != 0 && !self.holds(a, a)) {
            Some(a) => Verdict::fail([("a", self.w(a))]),
            None => Verdict::Pass,
        };
        let c2 = pairs(&|a, b| self.holds(a, b) && (a == 0 || b == 0));
        let c3 = pairs(&|a, b| self.holds(a, b) != self.holds(b, a));
        let mut c4 = Verdict::Pass;
        'c4: for a in self.subsets() {
            for b in self.subsets() {
                for c in self.subsets() {
                    if self.holds(a, b | c) != (self.holds(a, b) || self.holds(a, c)) {
                        c4 = Verdict::fail([("a", self.w(a)), ("b", self.w(b)), ("c", self.w(c))]);
                        break 'c4;
                    }
                }
            }
        }
        let bc1 = pairs(&|a, c| {
            self.is_bounded(a)
                && self.way_below(a, c)
                && !self
                    .subsets()
                    .any(|b| self.is_bounded(b) && self.way_below(a, b) && self.way_below(b, c))
        });
        let bc2 = pairs(&|a, b| {
            self.holds(a, b)
                && !self
                    .subsets()
                    .any(|c| self.is_bounded(c) && self.holds(a, c & b))
        });
        let separated = pairs(&|a, b| {
            a.count_ones() == 1 && b.count_ones() == 1 && self.holds(a, b) != (a == b)
        });
        let induced = match self.subsets().find(|&m| {
            let cl = (0..self.space.len())
                .filter(|&x| self.holds(1 << x, m))
                .fold(0u64, |acc, x| acc | 1 << x);
            cl != self.space.closure(m)
        }) {
            Some(m) => Verdict::fail([("M", self.w(m))]),
            None => Verdict::Pass,
        };
        vec![
            AxiomReport::new(CheckId::C1, c1),
            AxiomReport::new(CheckId::C2, c2),
            AxiomReport::new(CheckId::C3, c3),
            AxiomReport::new(CheckId::C4, c4),
            AxiomReport::new(CheckId::BC1, bc1),
            AxiomReport::new(CheckId::BC2, bc2),
            AxiomReport::new(CheckId::Separated, separated),
            AxiomReport::new(CheckId::InducesTopology, induced),
        ]
    }
}

/// The unique separated local proximity extending an admissible structure:
/// `𝓑` is the family of subsets of bounded regular closed sets, and
/// `M(-β)N` iff for every `B ∈ 𝓑` there are `F, G ∈ RC(X)` with
/// `M ∩ B ⊆ int F`, `N ∩ B ⊆ int G` and `F(-ρ)G`.
pub fn bridge_to_local_proximity(adm: &AdmissibleStructure) -> Result<LocalProximity> {
    let cfg = SampleConfig::default();
    require_pass("admissible structure", check_admissible(adm)?)?;
    require_pass("local contact algebra", check_lca(adm.structure(), &cfg)?)?;
    let space = adm.space();
    let n = space.len();
    if n > MAX_PROXIMITY_POINTS {
        return Err(Error::BoundExceeded {
            atoms: n,
            bound: MAX_PROXIMITY_POINTS,
        });
    }
    let v = adm.view()?;
    let interiors: Vec<PointSet> = (0..=v.full)
        .map(|f| space.interior(adm.points(f)))
        .collect();
    let size = 1usize << n;
    // sep[P][Q]: some F, G with P ⊆ int F, Q ⊆ int G and F(-ρ)G.
    let mut sep = vec![false; size * size];
    for p in 0..size as u64 {
        let fs: Vec<u64> = (0..=v.full)
            .filter(|&f| p & !interiors[f as usize] == 0)
            .collect();
        for q in 0..size as u64 {
            sep[p as usize * size + q as usize] = fs.iter().any(|&f| {
                (0..=v.full).any(|g| q & !interiors[g as usize] == 0 && !v.contact(f, g))
            });
        }
    }
    let bound = adm.points(v.ideal);
    let bounded = move |m: PointSet| m & !bound == 0;
    let family: Vec<PointSet> = (0..size as u64).filter(|&m| bounded(m)).collect();
    let beta = |m: PointSet, k: PointSet| {
        family
            .iter()
            .any(|&b| !sep[(m & b) as usize * size + (k & b) as usize])
    };
    LocalProximity::new(space.clone(), beta, bounded)
}

/// `(RC(X), β|RC(X), 𝓑 ∩ RC(X))`.
pub fn restrict_local_proximity(lp: &LocalProximity) -> Result<AdmissibleStructure> {
    let rc = regular_closed_algebra(lp.space())?;
    let atoms = rc.atoms();
    let n = atoms.len();
    let adj = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| lp.holds(atoms[i], atoms[j]))
                .fold(0u64, |acc, j| acc | 1 << j)
        })
        .collect();
    let graph = AtomGraph::from_adjacency(n, adj)?;
    let full = full_mask(n);
    let all_rc = |f: u64| rc.mask_to_points(f);
    for a in 0..=full {
        for b in 0..=full {
            if graph.holds(a, b) != lp.holds(all_rc(a), all_rc(b)) {
                return Err(Error::Precondition(
                    "proximity restricted to RC(X) is not determined by atoms".into(),
                ));
            }
        }
    }
    let generator = (0..=full)
        .filter(|&f| lp.is_bounded(all_rc(f)))
        .fold(0u64, |acc, f| acc | f);
    if !lp.is_bounded(all_rc(generator)) {
        return Err(Error::Precondition(
            "bounded regular closed sets have no largest element".into(),
        ));
    }
    let generator = (generator != full).then_some(generator);
    AdmissibleStructure::from_graph(lp.space(), graph, generator)
}

/// (EQ1) and (EQ2) for `f: (X1, β1, 𝓑1) → (X2, β2, 𝓑2)`.
pub fn check_eq(
    f: &SpaceMap,
    lp1: &LocalProximity,
    lp2: &LocalProximity,
) -> Result<Vec<AxiomReport>> {
    if f.domain() != lp1.space() || f.codomain() != lp2.space() {
        return Err(Error::Precondition(
            "map does not match the proximity spaces".into(),
        ));
    }
    let mut eq1 = Verdict::Pass;
    'eq1: for a in lp1.subsets() {
        for b in lp1.subsets() {
            if lp1.holds(a, b) && !lp2.holds(f.image(a), f.image(b)) {
                eq1 = Verdict::fail([("A", lp1.w(a)), ("B", lp1.w(b))]);
                break 'eq1;
            }
        }
    }
    let eq2 = match lp1
        .subsets()
        .find(|&b| lp1.is_bounded(b) && !lp2.is_bounded(f.image(b)))
    {
        Some(b) => Verdict::fail([("B", lp1.w(b))]),
        None => Verdict::Pass,
    };
    Ok(vec![
        AxiomReport::new(CheckId::EQ1, eq1),
        AxiomReport::new(CheckId::EQ2, eq2),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::enumerate_admissible;
    use crate::report::all_pass;

    #[test]
    fn discrete_two_bridge_is_intersection() {
        let x = FiniteSpace::discrete(2).unwrap();
        let adm = AdmissibleStructure::standard(&x).unwrap();
        let lp = bridge_to_local_proximity(&adm).unwrap();
        for m in 0..4u64 {
            assert!(lp.is_bounded(m));
            for k in 0..4u64 {
                assert_eq!(lp.holds(m, k), m & k != 0, "{m} {k}");
            }
        }
        assert!(!lp.holds(0b01, 0b10));
        assert!(all_pass(&lp.check()));
    }

    #[test]
    fn restrict_after_bridge_is_identity() {
        for n in 1..=3 {
            let x = FiniteSpace::discrete(n).unwrap();
            for s in enumerate_admissible(&x, 4).unwrap().structures {
                let lp = bridge_to_local_proximity(&s).unwrap();
                assert!(all_pass(&lp.check()));
                assert!(restrict_local_proximity(&lp).unwrap().same_as(&s).unwrap());
            }
        }
    }

    #[test]
    fn ideal_validated() {
        let x = FiniteSpace::discrete(2).unwrap();
        let r = LocalProximity::new(x, |a, b| a & b != 0, |m| m == 0b11 || m == 0);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn eq_for_constant_map() {
        let x2 = FiniteSpace::discrete(2).unwrap();
        let x1 = FiniteSpace::discrete(1).unwrap();
        let lp2 = bridge_to_local_proximity(&AdmissibleStructure::standard(&x2).unwrap()).unwrap();
        let lp1 = bridge_to_local_proximity(&AdmissibleStructure::standard(&x1).unwrap()).unwrap();
        let f = SpaceMap::new(x2, x1, vec![0, 0]).unwrap();
        assert!(all_pass(&check_eq(&f, &lp2, &lp1).unwrap()));
    }
}
