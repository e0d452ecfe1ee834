//! Maps between finite spaces and their topological properties.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{FiniteSpace, PointSet};
use crate::carrier::mask_atoms;
use crate::error::{Error, Result};

/// A total function between the points of two finite spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceMap {
    domain: FiniteSpace,
    codomain: FiniteSpace,
    mapping: Vec<usize>,
}

impl SpaceMap {
    pub fn new(domain: FiniteSpace, codomain: FiniteSpace, mapping: Vec<usize>) -> Result<Self> {
        if mapping.len() != domain.len() {
            return Err(Error::InvalidMap(format!(
                "expected {} images, got {}",
                domain.len(),
                mapping.len()
            )));
        }
        if let Some(&y) = mapping.iter().find(|&&y| y >= codomain.len()) {
            return Err(Error::InvalidMap(format!("image {y} outside the codomain")));
        }
        Ok(SpaceMap {
            domain,
            codomain,
            mapping,
        })
    }

    /// Builds a map from `(point, image)` name pairs; every domain point
    /// must appear exactly once.
    pub fn from_names(
        domain: FiniteSpace,
        codomain: FiniteSpace,
        pairs: &[(String, String)],
    ) -> Result<Self> {
        let mut mapping = vec![None; domain.len()];
        for (x, y) in pairs {
            let xi = domain.point(x)?;
            let yi = codomain.point(y)?;
            if mapping[xi].replace(yi).is_some() {
                return Err(Error::InvalidMap(format!("point `{x}` mapped twice")));
            }
        }
        let mapping = mapping
            .into_iter()
            .enumerate()
            .map(|(i, y)| {
                y.ok_or_else(|| {
                    Error::InvalidMap(format!("point `{}` has no image", domain.name(i)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(domain, codomain, mapping)
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        SpaceMap {
            domain: space.clone(),
            codomain: space.clone(),
            mapping: (0..space.len()).collect(),
        }
    }

    pub fn domain(&self) -> &FiniteSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteSpace {
        &self.codomain
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn apply(&self, x: usize) -> usize {
        self.mapping[x]
    }

    /// `(x, f(x))` name pairs in domain order.
    pub fn name_pairs(&self) -> Vec<(String, String)> {
        self.mapping
            .iter()
            .enumerate()
            .map(|(x, &y)| {
                (
                    self.domain.name(x).to_string(),
                    self.codomain.name(y).to_string(),
                )
            })
            .collect()
    }

    pub fn image(&self, s: PointSet) -> PointSet {
        mask_atoms(s).fold(0, |acc, x| acc | 1 << self.mapping[x])
    }

    pub fn preimage(&self, t: PointSet) -> PointSet {
        (0..self.mapping.len())
            .filter(|&x| t >> self.mapping[x] & 1 == 1)
            .fold(0, |acc, x| acc | 1 << x)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &SpaceMap) -> Result<SpaceMap> {
        if first.codomain != self.domain {
            return Err(Error::EndpointMismatch(
                "codomain of the first map is not the domain of the second".into(),
            ));
        }
        Ok(SpaceMap {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            mapping: first.mapping.iter().map(|&y| self.mapping[y]).collect(),
        })
    }

    /// Equal as functions on points (spaces compared too).
    pub fn same_function(&self, other: &SpaceMap) -> bool {
        self == other
    }

    /// Every function `domain → codomain`, last point varying fastest.
    pub fn all(domain: &FiniteSpace, codomain: &FiniteSpace) -> Vec<SpaceMap> {
        let (n, m) = (domain.len(), codomain.len());
        if m == 0 {
            return if n == 0 {
                vec![Self::new(domain.clone(), codomain.clone(), vec![]).expect("empty map")]
            } else {
                vec![]
            };
        }
        let total = m.pow(n as u32);
        (0..total)
            .map(|mut k| {
                let mut mapping = vec![0; n];
                for slot in mapping.iter_mut().rev() {
                    *slot = k % m;
                    k /= m;
                }
                SpaceMap {
                    domain: domain.clone(),
                    codomain: codomain.clone(),
                    mapping,
                }
            })
            .collect()
    }

    pub fn all_continuous(domain: &FiniteSpace, codomain: &FiniteSpace) -> Vec<SpaceMap> {
        Self::all(domain, codomain)
            .into_iter()
            .filter(|f| f.is(MapProperty::Continuous))
            .collect()
    }

    pub fn is(&self, p: MapProperty) -> bool {
        map_is(self, p)
    }

    fn continuous(&self) -> bool {
        self.codomain
            .opens()
            .iter()
            .all(|&v| self.domain.is_open(self.preimage(v)))
    }

    fn injective(&self) -> bool {
        let mut seen = 0u64;
        self.mapping.iter().all(|&y| {
            let fresh = seen >> y & 1 == 0;
            seen |= 1 << y;
            fresh
        })
    }

    fn surjective(&self) -> bool {
        self.image(self.domain.full()) == self.codomain.full()
    }

    fn skeletal_by_definition(&self) -> bool {
        let (x, y) = (&self.domain, &self.codomain);
        y.opens().iter().all(|&v| {
            let lhs = x.interior(self.preimage(y.closure(v)));
            let rhs = x.closure(self.preimage(v));
            lhs & !rhs == 0
        })
    }

    fn regular_closed_images(&self) -> bool {
        let (x, y) = (&self.domain, &self.codomain);
        x.opens()
            .iter()
            .map(|&u| x.closure(u))
            .all(|f| y.is_regular_closed(y.closure(self.image(f))))
    }

    fn dense_preimages(&self) -> bool {
        let (x, y) = (&self.domain, &self.codomain);
        y.opens()
            .iter()
            .filter(|&&v| y.is_dense(v))
            .all(|&v| x.is_dense(self.preimage(v)))
    }
}

impl fmt::Display for SpaceMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .name_pairs()
            .into_iter()
            .map(|(x, y)| format!("{x}->{y}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapProperty {
    Continuous,
    Open,
    Closed,
    Perfect,
    Injective,
    Surjective,
    DenseImage,
    Skeletal,
    QuasiOpen,
}

impl MapProperty {
    pub const ALL: [MapProperty; 9] = [
        MapProperty::Continuous,
        MapProperty::Open,
        MapProperty::Closed,
        MapProperty::Perfect,
        MapProperty::Injective,
        MapProperty::Surjective,
        MapProperty::DenseImage,
        MapProperty::Skeletal,
        MapProperty::QuasiOpen,
    ];
}

/// Open, closed, perfect and quasi-open maps are required to be continuous.
/// Perfect coincides with closed since point inverses of a finite space are
/// compact. Skeletal is the literal inclusion
/// `int(f⁻¹(cl V)) ⊆ cl(f⁻¹(V))` for every open `V`.
pub fn map_is(f: &SpaceMap, p: MapProperty) -> bool {
    let (x, y) = (&f.domain, &f.codomain);
    match p {
        MapProperty::Continuous => f.continuous(),
        MapProperty::Open => f.continuous() && x.opens().iter().all(|&u| y.is_open(f.image(u))),
        MapProperty::Closed | MapProperty::Perfect => {
            f.continuous() && x.closed_sets().all(|c| y.is_closed(f.image(c)))
        }
        MapProperty::Injective => f.injective(),
        MapProperty::Surjective => f.surjective(),
        MapProperty::DenseImage => y.is_dense(f.image(x.full())),
        MapProperty::Skeletal => f.skeletal_by_definition(),
        MapProperty::QuasiOpen => {
            f.continuous()
                && x.opens()
                    .iter()
                    .filter(|&&u| u != 0)
                    .all(|&u| y.interior(f.image(u)) != 0)
        }
    }
}

/// Three characterizations of skeletal continuous maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkeletalReport {
    /// `int(f⁻¹(cl V)) ⊆ cl(f⁻¹(V))` for every open `V`.
    pub definition: bool,
    /// `cl(f(F))` is regular closed for every regular closed `F`.
    pub regular_closed_images: bool,
    /// `cl(f⁻¹(V)) = X` for every open dense `V`.
    pub dense_preimages: bool,
}

impl SkeletalReport {
    pub fn agree(&self) -> bool {
        self.definition == self.regular_closed_images && self.definition == self.dense_preimages
    }
}

pub fn skeletal_equivalences(f: &SpaceMap) -> Result<SkeletalReport> {
    if !f.continuous() {
        return Err(Error::NotContinuous);
    }
    Ok(SkeletalReport {
        definition: f.skeletal_by_definition(),
        regular_closed_images: f.regular_closed_images(),
        dense_preimages: f.dense_preimages(),
    })
}

/// A homeomorphic embedding with dense image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseEmbedding {
    map: SpaceMap,
}

impl DenseEmbedding {
    pub fn new(map: SpaceMap) -> Result<Self> {
        if !map.continuous() {
            return Err(Error::NotContinuous);
        }
        let initial_topology = map
            .domain
            .opens()
            .iter()
            .all(|&u| map.codomain.opens().iter().any(|&v| map.preimage(v) == u));
        if !map.injective() || !initial_topology {
            return Err(Error::NotEmbedding);
        }
        if !map.is(MapProperty::DenseImage) {
            return Err(Error::NotDense);
        }
        Ok(DenseEmbedding { map })
    }

    /// Inclusion of the subspace on `s`.
    pub fn subspace(space: &FiniteSpace, s: PointSet) -> Result<Self> {
        let (sub, pts) = space.subspace(s)?;
        Self::new(SpaceMap::new(sub, space.clone(), pts)?)
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        DenseEmbedding {
            map: SpaceMap::identity(space),
        }
    }

    pub fn map(&self) -> &SpaceMap {
        &self.map
    }

    pub fn base(&self) -> &FiniteSpace {
        self.map.domain()
    }

    pub fn target(&self) -> &FiniteSpace {
        self.map.codomain()
    }
}

/// For `g ∘ f1 = f2 ∘ f` with dense embeddings `f1`, `f2`, returns whether
/// `f` and `g` are skeletal.
pub fn skeletal_transfer(
    f: &SpaceMap,
    g: &SpaceMap,
    f1: &DenseEmbedding,
    f2: &DenseEmbedding,
) -> Result<(bool, bool)> {
    if !f.continuous() || !g.continuous() {
        return Err(Error::NotContinuous);
    }
    let lhs = g.after(f1.map())?;
    let rhs = f2.map().after(f)?;
    if lhs != rhs {
        return Err(Error::Precondition("g ∘ f1 differs from f2 ∘ f".into()));
    }
    Ok((f.is(MapProperty::Skeletal), g.is(MapProperty::Skeletal)))
}
