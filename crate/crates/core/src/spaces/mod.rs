//! Finite topological spaces. Every finite topology is Alexandrov, so a
//! space is kept as its open family together with the minimal open
//! neighbourhood of each point.

mod maps;
mod rc;

use std::fmt;

pub use maps::{
    map_is, skeletal_equivalences, skeletal_transfer, DenseEmbedding, MapProperty, SkeletalReport,
    SpaceMap,
};
pub use rc::{
    dense_restriction_iso, point_cluster, point_filter, regular_closed_algebra,
    RegularClosedAlgebra, RestrictionIso,
};

use crate::carrier::{full_mask, mask_atoms};
use crate::error::{Error, Result};

/// Subset of the points of a space, one bit per point.
pub type PointSet = u64;

/// Largest point count accepted by the constructors.
pub const MAX_POINTS: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    names: Vec<String>,
    opens: Vec<PointSet>,
    up: Vec<PointSet>,
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSpace({})", self.label())
    }
}

fn check_names(names: &[String]) -> Result<()> {
    if names.len() > MAX_POINTS {
        return Err(Error::BoundExceeded {
            atoms: names.len(),
            bound: MAX_POINTS,
        });
    }
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() {
            return Err(Error::InvalidTopology("empty point name".into()));
        }
        if names[..i].contains(n) {
            return Err(Error::InvalidTopology(format!("duplicate point `{n}`")));
        }
    }
    Ok(())
}

impl FiniteSpace {
    /// Validates that `opens` contains `∅` and `X` and is closed under
    /// pairwise union and intersection.
    pub fn from_opens(names: Vec<String>, opens: Vec<PointSet>) -> Result<Self> {
        check_names(&names)?;
        let full = full_mask(names.len());
        let mut opens = opens;
        opens.sort_unstable();
        opens.dedup();
        if let Some(bad) = opens.iter().find(|&&u| u & !full != 0) {
            return Err(Error::InvalidTopology(format!(
                "open set {bad:#b} mentions unknown points"
            )));
        }
        let has = |u: PointSet| opens.binary_search(&u).is_ok();
        if !has(0) || !has(full) {
            return Err(Error::InvalidTopology(
                "open family must contain the empty set and the whole space".into(),
            ));
        }
        for &u in &opens {
            for &v in &opens {
                if !has(u | v) || !has(u & v) {
                    return Err(Error::InvalidTopology(format!(
                        "open family not closed under union/intersection at {} and {}",
                        fmt_set(&names, u),
                        fmt_set(&names, v)
                    )));
                }
            }
        }
        let up = (0..names.len())
            .map(|x| {
                opens
                    .iter()
                    .filter(|&&u| u >> x & 1 == 1)
                    .fold(full, |acc, &u| acc & u)
            })
            .collect();
        Ok(FiniteSpace { names, opens, up })
    }

    /// Space whose opens are the up-sets of the reflexive-transitive closure
    /// of `leq`, where `(x, y)` means `x ∈ cl{y}`.
    pub fn from_preorder(names: Vec<String>, leq: &[(usize, usize)]) -> Result<Self> {
        check_names(&names)?;
        let n = names.len();
        let mut up: Vec<PointSet> = (0..n).map(|x| 1 << x).collect();
        for &(x, y) in leq {
            if x >= n || y >= n {
                return Err(Error::InvalidTopology(format!(
                    "preorder pair ({x}, {y}) out of range"
                )));
            }
            up[x] |= 1 << y;
        }
        loop {
            let mut changed = false;
            for x in 0..n {
                let reach = mask_atoms(up[x]).fold(up[x], |acc, y| acc | up[y]);
                if reach != up[x] {
                    up[x] = reach;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let opens = (0..=full_mask(n))
            .filter(|&s| mask_atoms(s).all(|x| up[x] & !s == 0))
            .collect();
        Ok(FiniteSpace { names, opens, up })
    }

    pub fn discrete(n: usize) -> Result<Self> {
        Self::from_preorder(default_names(n), &[])
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        Self::from_opens(default_names(n), vec![0, full_mask(n)])
    }

    /// Points `0, 1` with opens `∅, {1}, X`.
    pub fn sierpinski() -> Self {
        Self::from_opens(default_names(2), vec![0, 0b10, 0b11]).expect("valid topology")
    }

    /// Four-point model of the circle: `a, c` open points, `b, d` closed points.
    pub fn circle4() -> Self {
        let names = ["a", "b", "c", "d"].map(String::from).to_vec();
        let (a, b, c, d) = (1u64, 2u64, 4u64, 8u64);
        Self::from_opens(
            names,
            vec![0, a, c, a | c, a | b | c, a | d | c, a | b | c | d],
        )
        .expect("valid topology")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn full(&self) -> PointSet {
        full_mask(self.len())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn point(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownPoint(name.to_string()))
    }

    /// Open sets in ascending mask order.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn closed_sets(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens.iter().map(|&u| !u & self.full())
    }

    /// Smallest open set containing `x`.
    pub fn min_neighbourhood(&self, x: usize) -> PointSet {
        self.up[x]
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(!s & self.full())
    }

    pub fn closure(&self, s: PointSet) -> PointSet {
        (0..self.len())
            .filter(|&x| self.up[x] & s != 0)
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn interior(&self, s: PointSet) -> PointSet {
        (0..self.len())
            .filter(|&x| self.up[x] & !s == 0)
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn is_regular_closed(&self, s: PointSet) -> bool {
        self.closure(self.interior(s)) == s
    }

    pub fn is_dense(&self, s: PointSet) -> bool {
        self.closure(s) == self.full()
    }

    /// `x ≤ y` iff `x ∈ cl{y}`.
    pub fn specialization_leq(&self, x: usize, y: usize) -> bool {
        self.up[x] >> y & 1 == 1
    }

    /// Pairs `(x, y)`, `x ≠ y`, with `x ≤ y`.
    pub fn specialization_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in 0..self.len() {
                if x != y && self.specialization_leq(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.len()).all(|x| self.up[x] == 1 << x)
    }

    /// Subspace on the points of `s`, in ascending point order.
    pub fn subspace(&self, s: PointSet) -> Result<(FiniteSpace, Vec<usize>)> {
        let pts: Vec<usize> = mask_atoms(s & self.full()).collect();
        let names = pts.iter().map(|&x| self.names[x].clone()).collect();
        let shrink = |u: PointSet| {
            pts.iter()
                .enumerate()
                .filter(|&(_, &x)| u >> x & 1 == 1)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        };
        let opens = self.opens.iter().map(|&u| shrink(u)).collect();
        Ok((FiniteSpace::from_opens(names, opens)?, pts))
    }

    /// Same topology, different point names.
    pub fn renamed(&self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.len() {
            return Err(Error::InvalidTopology(
                "rename changes the point count".into(),
            ));
        }
        check_names(&names)?;
        Ok(FiniteSpace {
            names,
            opens: self.opens.clone(),
            up: self.up.clone(),
        })
    }

    /// Deterministic description, also used to label derived carriers.
    pub fn label(&self) -> String {
        let opens: Vec<String> = self
            .opens
            .iter()
            .map(|&u| fmt_set(&self.names, u))
            .collect();
        format!("({}; {})", self.names.join(","), opens.join(" "))
    }

    pub fn format_set(&self, s: PointSet) -> String {
        fmt_set(&self.names, s)
    }

    pub fn set_names(&self, s: PointSet) -> Vec<String> {
        mask_atoms(s).map(|x| self.names[x].clone()).collect()
    }

    /// Every topology on `n` points (`n ≤ 4`), in lexicographic order of the
    /// characteristic vector over proper non-empty subsets.
    pub fn all_topologies(n: usize) -> Result<Vec<FiniteSpace>> {
        if n > 4 {
            return Err(Error::BoundExceeded { atoms: n, bound: 4 });
        }
        let full = full_mask(n);
        let middle: Vec<PointSet> = (1..full).collect();
        let names = default_names(n);
        let mut out = Vec::new();
        for bits in 0u64..1 << middle.len() {
            let mut opens = vec![0];
            opens.extend(mask_atoms(bits).map(|i| middle[i]));
            if full != 0 {
                opens.push(full);
            }
            if closed_under_lattice_ops(&opens) {
                out.push(FiniteSpace::from_opens(names.clone(), opens)?);
            }
        }
        Ok(out)
    }
}

fn closed_under_lattice_ops(opens: &[PointSet]) -> bool {
    opens.iter().all(|&u| {
        opens
            .iter()
            .all(|&v| opens.contains(&(u | v)) && opens.contains(&(u & v)))
    })
}

pub fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn fmt_set(names: &[String], s: PointSet) -> String {
    let parts: Vec<&str> = mask_atoms(s).map(|x| names[x].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_closure() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.closure(0b10), 0b11);
        assert_eq!(s.closure(0b01), 0b01);
        assert_eq!(s.interior(0b01), 0);
        assert_eq!(s.interior(s.full()), s.full());
    }

    #[test]
    fn discrete_closure_is_identity() {
        let d = FiniteSpace::discrete(3).unwrap();
        for s in 0..8 {
            assert_eq!(d.closure(s), s);
            assert_eq!(d.interior(s), s);
        }
    }

    #[test]
    fn topology_counts() {
        assert_eq!(FiniteSpace::all_topologies(1).unwrap().len(), 1);
        assert_eq!(FiniteSpace::all_topologies(2).unwrap().len(), 4);
        assert_eq!(FiniteSpace::all_topologies(3).unwrap().len(), 29);
        assert_eq!(FiniteSpace::all_topologies(4).unwrap().len(), 355);
    }

    #[test]
    fn preorder_and_opens_agree() {
        for t in FiniteSpace::all_topologies(3).unwrap() {
            let p =
                FiniteSpace::from_preorder(t.names().to_vec(), &t.specialization_pairs()).unwrap();
            assert_eq!(p, t);
        }
    }

    #[test]
    fn invalid_families_rejected() {
        let names = default_names(2);
        assert!(FiniteSpace::from_opens(names.clone(), vec![0b01, 0b11]).is_err());
        let names3 = default_names(3);
        assert!(FiniteSpace::from_opens(names3, vec![0, 0b001, 0b010, 0b111]).is_err());
        assert!(FiniteSpace::from_opens(vec!["x".into(), "x".into()], vec![0, 0b11]).is_err());
    }

    #[test]
    fn circle_neighbourhoods() {
        let c = FiniteSpace::circle4();
        let b = c.point("b").unwrap();
        assert_eq!(c.format_set(c.min_neighbourhood(b)), "{a,b,c}");
        assert!(!c.is_discrete());
    }

    #[test]
    fn subspace_topology() {
        let s = FiniteSpace::sierpinski();
        let (sub, pts) = s.subspace(0b10).unwrap();
        assert_eq!(pts, vec![1]);
        assert!(sub.is_discrete());
    }
}
