//! Morphisms of local contact algebras and their translation to and from
//! continuous maps.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{psi_a, psi_t, DualSpaceResult};
use crate::carrier::{full_mask, mask_atoms, Carrier, Element, IntervalSet};
use crate::contact::{ContactStructure, FiniteView, MaskSet};
use crate::error::{Error, Result};
use crate::report::{AxiomReport, CheckId, Verdict, Witness};
use crate::sampling::{random_bounded, random_element, random_nested_pair, SampleConfig};
use crate::spaces::{regular_closed_algebra, MapProperty, SpaceMap};

/// Symbolic morphisms of the interval line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalRule {
    Identity,
    /// `a ↦ a ∧ m`.
    MeetWith(IntervalSet),
    /// `a ↦ {x | qx + r ∈ a}` for `q > 0`: the algebra map of `x ↦ qx + r`.
    Affine {
        scale: BigRational,
        shift: BigRational,
    },
}

impl IntervalRule {
    pub fn apply(&self, a: &IntervalSet) -> IntervalSet {
        match self {
            IntervalRule::Identity => a.clone(),
            IntervalRule::MeetWith(m) => a.meet(m),
            IntervalRule::Affine { scale, shift } => {
                let inv = BigRational::one() / scale;
                a.affine(&inv, &(-(shift * &inv)))
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            IntervalRule::Identity => "identity",
            IntervalRule::MeetWith(_) => "meet_with",
            IntervalRule::Affine { .. } => "affine",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismMap {
    /// Image mask of every source mask.
    Table(Vec<u64>),
    Rule(IntervalRule),
}

/// A function between the carriers of two contact structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    pub source: ContactStructure,
    pub target: ContactStructure,
    pub map: MorphismMap,
}

impl AlgebraMorphism {
    pub fn from_table(
        source: ContactStructure,
        target: ContactStructure,
        table: Vec<u64>,
    ) -> Result<Self> {
        let n = source.carrier.finite_atoms("morphism table")?;
        let m = target.carrier.finite_atoms("morphism table")?;
        if table.len() != 1usize << n {
            return Err(Error::InvalidMap(format!(
                "table has {} entries, source has {} elements",
                table.len(),
                1u64 << n
            )));
        }
        if table.iter().any(|&v| v & !full_mask(m) != 0) {
            return Err(Error::InvalidMap("table value outside the target".into()));
        }
        Ok(AlgebraMorphism {
            source,
            target,
            map: MorphismMap::Table(table),
        })
    }

    pub fn from_rule(
        source: ContactStructure,
        target: ContactStructure,
        rule: IntervalRule,
    ) -> Result<Self> {
        if source.carrier.is_finite() || target.carrier.is_finite() {
            return Err(Error::WrongBackend {
                op: "interval rule",
                expected: "interval-line",
            });
        }
        if let IntervalRule::Affine { scale, .. } = &rule {
            if !scale.is_positive() {
                return Err(Error::InvalidMap("affine scale must be positive".into()));
            }
        }
        Ok(AlgebraMorphism {
            source,
            target,
            map: MorphismMap::Rule(rule),
        })
    }

    pub fn identity(s: &ContactStructure) -> Self {
        let map = match s.carrier.atom_count() {
            Some(n) => MorphismMap::Table((0..=full_mask(n)).collect()),
            None => MorphismMap::Rule(IntervalRule::Identity),
        };
        AlgebraMorphism {
            source: s.clone(),
            target: s.clone(),
            map,
        }
    }

    pub fn table(&self) -> Option<&[u64]> {
        match &self.map {
            MorphismMap::Table(t) => Some(t),
            MorphismMap::Rule(_) => None,
        }
    }

    fn finite_table(&self, op: &'static str) -> Result<&[u64]> {
        self.table().ok_or(Error::WrongBackend {
            op,
            expected: "finite",
        })
    }

    pub fn apply(&self, a: &Element) -> Result<Element> {
        self.source.carrier.own(a)?;
        match &self.map {
            MorphismMap::Table(t) => self
                .target
                .carrier
                .element_from_mask(t[a.mask().expect("finite") as usize]),
            MorphismMap::Rule(r) => self
                .target
                .carrier
                .interval(r.apply(a.intervals().expect("line element"))),
        }
    }

    fn with_table(&self, table: Vec<u64>) -> Self {
        AlgebraMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            map: MorphismMap::Table(table),
        }
    }

    /// Whether the table preserves `0`, `1`, meets, joins and complements.
    pub fn is_boolean_homomorphism(&self) -> Result<bool> {
        let t = self.finite_table("homomorphism check")?;
        let n = self.source.carrier.finite_atoms("homomorphism check")?;
        let m = self.target.carrier.finite_atoms("homomorphism check")?;
        let (fs, ft) = (full_mask(n), full_mask(m));
        Ok(t[0] == 0
            && t[fs as usize] == ft
            && (0..=fs).all(|a| {
                t[(!a & fs) as usize] == !t[a as usize] & ft
                    && (0..=fs).all(|b| t[(a | b) as usize] == t[a as usize] | t[b as usize])
            }))
    }
}

fn el(c: &Carrier, m: u64) -> Witness {
    Witness::Element(c.element_from_mask(m).expect("mask in range"))
}

struct Views {
    src: FiniteView,
    tgt: FiniteView,
}

fn views(phi: &AlgebraMorphism) -> Result<Views> {
    Ok(Views {
        src: phi.source.finite_view()?,
        tgt: phi.target.finite_view()?,
    })
}

/// `ψ̌(a) = ⋁{ψ(b) | b ∈ IB, b ≪ a}` on a table.
fn check_table(t: &[u64], src: &FiniteView) -> Vec<u64> {
    (0..=src.full)
        .map(|a| {
            (0..=src.full)
                .filter(|&b| src.in_ideal(b) && src.way_below(b, a))
                .fold(0, |acc, b| acc | t[b as usize])
        })
        .collect()
}

/// DLC1-DLC5 and DLC3S. Exhaustive on finite carriers; on the interval line
/// the catalog rules are sampled.
pub fn check_dhlc(phi: &AlgebraMorphism, cfg: &SampleConfig) -> Result<Vec<AxiomReport>> {
    match &phi.map {
        MorphismMap::Table(t) => Ok(check_dhlc_finite(phi, t)?),
        MorphismMap::Rule(r) => check_dhlc_line(phi, r, cfg),
    }
}

fn check_dhlc_finite(phi: &AlgebraMorphism, t: &[u64]) -> Result<Vec<AxiomReport>> {
    let Views { src, tgt } = views(phi)?;
    let (sc, tc) = (&phi.source.carrier, &phi.target.carrier);
    let f = |a: u64| t[a as usize];
    let first_pair = |bad: &dyn Fn(u64, u64) -> bool| {
        for a in 0..=src.full {
            for b in 0..=src.full {
                if bad(a, b) {
                    return Verdict::fail([("a", el(sc, a)), ("b", el(sc, b))]);
                }
            }
        }
        Verdict::Pass
    };
    let dlc1 = if f(0) == 0 {
        Verdict::Pass
    } else {
        Verdict::fail([("φ(0)", el(tc, f(0)))])
    };
    let dlc2 = first_pair(&|a, b| f(a & b) != f(a) & f(b));
    let star = |a: u64| !f(!a & src.full) & tgt.full;
    let dlc3 =
        first_pair(&|a, b| src.in_ideal(a) && src.way_below(a, b) && !tgt.way_below(star(a), f(b)));
    let dlc3s = first_pair(&|a, b| src.way_below(a, b) && !tgt.way_below(star(a), f(b)));
    let dlc4 = match (0..=tgt.full)
        .filter(|&b| tgt.in_ideal(b))
        .find(|&b| !(0..=src.full).any(|a| src.in_ideal(a) && b & !f(a) == 0))
    {
        Some(b) => Verdict::fail([("b", el(tc, b))]),
        None => Verdict::Pass,
    };
    let checked = check_table(t, &src);
    let dlc5 = match (0..=src.full).find(|&a| checked[a as usize] != f(a)) {
        Some(a) => Verdict::fail([("a", el(sc, a))]),
        None => Verdict::Pass,
    };
    Ok(vec![
        AxiomReport::new(CheckId::DLC1, dlc1),
        AxiomReport::new(CheckId::DLC2, dlc2),
        AxiomReport::new(CheckId::DLC3, dlc3),
        AxiomReport::new(CheckId::DLC3S, dlc3s),
        AxiomReport::new(CheckId::DLC4, dlc4),
        AxiomReport::new(CheckId::DLC5, dlc5),
    ])
}

fn check_dhlc_line(
    phi: &AlgebraMorphism,
    rule: &IntervalRule,
    cfg: &SampleConfig,
) -> Result<Vec<AxiomReport>> {
    let (src, tgt) = (&phi.source, &phi.target);
    let line = Carrier::line();
    let w = |s: &IntervalSet| Witness::Element(line.interval(s.clone()).expect("line"));
    let elt = |s: &IntervalSet| line.interval(s.clone()).expect("line");
    let f = |a: &IntervalSet| rule.apply(a);
    let samples = cfg.samples;
    let sampled = |v: Option<Verdict>| v.unwrap_or(Verdict::SampledPass { samples });

    let dlc1 = if f(&IntervalSet::empty()).is_empty() {
        Verdict::Pass
    } else {
        Verdict::fail([("φ(0)", w(&f(&IntervalSet::empty())))])
    };

    let mut rng = cfg.rng_for("DLC2");
    let mut dlc2 = None;
    for _ in 0..samples {
        let (a, b) = (random_element(&mut rng), random_element(&mut rng));
        if f(&a.meet(&b)) != f(&a).meet(&f(&b)) {
            dlc2 = Some(Verdict::fail([("a", w(&a)), ("b", w(&b))]));
            break;
        }
    }

    let mut dlc3 = None;
    let mut dlc3s = None;
    let mut rng = cfg.rng_for("DLC3");
    for _ in 0..samples {
        let bounded = rng.gen_bool(0.75);
        let (a, b) = random_nested_pair(&mut rng, bounded);
        if !src.way_below(&elt(&a), &elt(&b))? {
            continue;
        }
        let lhs = f(&a.complement()).complement();
        if !tgt.way_below(&elt(&lhs), &elt(&f(&b)))? {
            let v = Verdict::fail([("a", w(&a)), ("b", w(&b))]);
            if src.in_ideal(&elt(&a))? && dlc3.is_none() {
                dlc3 = Some(v.clone());
            }
            if dlc3s.is_none() {
                dlc3s = Some(v);
            }
        }
    }

    let mut rng = cfg.rng_for("DLC4");
    let mut dlc4 = None;
    for _ in 0..samples {
        let b = random_bounded(&mut rng);
        if !tgt.in_ideal(&elt(&b))? {
            continue;
        }
        let candidate = match rule {
            IntervalRule::Identity | IntervalRule::MeetWith(_) => b.clone(),
            IntervalRule::Affine { scale, shift } => b.affine(scale, shift),
        };
        if !(src.in_ideal(&elt(&candidate))? && b.leq(&f(&candidate))) {
            dlc4 = Some(Verdict::fail([("b", w(&b))]));
            break;
        }
    }

    // Upper-bound half: every φ(b) with bounded b ≪ a lies below φ(a).
    // Coverage half: interior points of φ(a) are covered by φ of a bounded
    // inner approximation of a.
    let mut rng = cfg.rng_for("DLC5");
    let mut dlc5 = None;
    for _ in 0..samples {
        let (b, a) = random_nested_pair(&mut rng, true);
        if src.in_ideal(&elt(&b))? && src.way_below(&elt(&b), &elt(&a))? && !f(&b).leq(&f(&a)) {
            dlc5 = Some(Verdict::fail([("a", w(&a)), ("b", w(&b))]));
            break;
        }
        let fa = f(&a);
        if let Some(p) = fa.inner_interval().and_then(|i| midpoint(&i)) {
            let covered = inner_approximations(&a)
                .into_iter()
                .filter(|c| src.in_ideal(&elt(c)).unwrap_or(false))
                .any(|c| f(&c).contains_point(&p));
            if !covered {
                dlc5 = Some(Verdict::fail([("a", w(&a))]));
                break;
            }
        }
    }

    Ok(vec![
        AxiomReport::new(CheckId::DLC1, dlc1),
        AxiomReport::new(CheckId::DLC2, sampled(dlc2)),
        AxiomReport::new(CheckId::DLC3, sampled(dlc3)),
        AxiomReport::new(CheckId::DLC3S, sampled(dlc3s)),
        AxiomReport::new(CheckId::DLC4, sampled(dlc4)),
        AxiomReport::new(CheckId::DLC5, sampled(dlc5)),
    ])
}

fn midpoint(s: &IntervalSet) -> Option<BigRational> {
    let c = s.components().first()?;
    let two = BigRational::from_integer(2.into());
    Some((c.lo.finite()? + c.hi.finite()?) / two)
}

/// Bounded elements `b ≪ a` shrinking towards `a`: `a` clipped to `[-M, M]`
/// and pulled in by `1/k` from its complement.
fn inner_approximations(a: &IntervalSet) -> Vec<IntervalSet> {
    let mut out = Vec::new();
    let comp = a.complement();
    for k in [2i64, 8, 32, 128] {
        let eps = BigRational::new(1.into(), k.into());
        let m = a.magnitude() + BigRational::from_integer(k.into());
        let clip = IntervalSet::new([(
            crate::carrier::Endpoint::Finite(-m.clone()),
            crate::carrier::Endpoint::Finite(m),
        )])
        .expect("positive length");
        let shrunk = if comp.is_empty() {
            clip.clone()
        } else {
            comp.neighbourhood(&eps).complement().meet(&clip)
        };
        if !shrunk.is_empty() || a.is_empty() || eps.is_zero() {
            out.push(shrunk);
        }
    }
    out
}

/// `ψ̌`. Idempotent, and the identity on morphisms satisfying DLC5.
pub fn check_morphism(phi: &AlgebraMorphism) -> Result<AlgebraMorphism> {
    let t = phi.finite_table("ψ̌")?;
    let src = phi.source.finite_view()?;
    Ok(phi.with_table(check_table(t, &src)))
}

/// `φ2 ⋄ φ1 = (φ2 ∘ φ1)ˇ`.
pub fn compose(phi2: &AlgebraMorphism, phi1: &AlgebraMorphism) -> Result<AlgebraMorphism> {
    if phi1.target != phi2.source {
        return Err(Error::EndpointMismatch(
            "target of the first morphism is not the source of the second".into(),
        ));
    }
    let t1 = phi1.finite_table("composition")?;
    let t2 = phi2.finite_table("composition")?;
    let composed: Vec<u64> = t1.iter().map(|&b| t2[b as usize]).collect();
    let raw = AlgebraMorphism {
        source: phi1.source.clone(),
        target: phi2.target.clone(),
        map: MorphismMap::Table(composed),
    };
    check_morphism(&raw)
}

/// `Λᵗ(f)(G) = cl(f⁻¹(int G))`, from `Ψᵗ(Y)` to `Ψᵗ(X)`.
pub fn lambda_t(f: &SpaceMap) -> Result<AlgebraMorphism> {
    if !f.is(MapProperty::Continuous) {
        return Err(Error::NotContinuous);
    }
    let (x, y) = (f.domain(), f.codomain());
    let rx = regular_closed_algebra(x)?;
    let ry = regular_closed_algebra(y)?;
    let table = (0..=ry.full())
        .map(|g| {
            let pts = x.closure(f.preimage(y.interior(ry.mask_to_points(g))));
            rx.points_to_mask(pts)
        })
        .collect::<Result<Vec<_>>>()?;
    AlgebraMorphism::from_table(psi_t(y)?, psi_t(x)?, table)
}

/// `Λᵃ(φ)`: each cluster `σ′` of the target goes to the source cluster whose
/// bounded trace is `{a ∈ IB | a ≪ b implies φ(b) ∈ σ′}`.
pub fn lambda_a(phi: &AlgebraMorphism) -> Result<SpaceMap> {
    let t = phi.finite_table("Λᵃ")?;
    let src_dual = psi_a(&phi.source)?;
    let tgt_dual = psi_a(&phi.target)?;
    let src = phi.source.finite_view()?;
    let designated = phi
        .source
        .designated_relation()
        .table(&phi.source.carrier)?;
    let n = src.n;
    let mapping = tgt_dual
        .clusters
        .iter()
        .map(|sigma| {
            let members = sigma.members().expect("finite cluster");
            let trace = MaskSet::from_fn(n, |a| {
                src.in_ideal(a)
                    && (0..=src.full)
                        .all(|b| !src.way_below(a, b) || members.contains(t[b as usize]))
            });
            let closed = MaskSet::from_fn(n, |a| trace.iter().all(|c| designated.get(a, c)));
            src_dual
                .clusters
                .iter()
                .position(|c| {
                    c.bounded_trace().as_ref() == Some(&trace) && c.members() == Some(&closed)
                })
                .ok_or(Error::NoMatchingCluster)
        })
        .collect::<Result<Vec<_>>>()?;
    SpaceMap::new(tgt_dual.space, src_dual.space, mapping)
}

/// `Λᵃ(φ)(σ_u) = σ_{φ⁻¹(u)}` for Boolean homomorphisms.
pub fn lambda_a_ultrafilter(phi: &AlgebraMorphism) -> Result<SpaceMap> {
    if !phi.is_boolean_homomorphism()? {
        return Err(Error::NotHomomorphism(
            "ultrafilter formula needs a Boolean homomorphism".into(),
        ));
    }
    let t = phi.finite_table("Λᵃ")?;
    let src_dual = psi_a(&phi.source)?;
    let tgt_dual = psi_a(&phi.target)?;
    let n = phi.source.carrier.finite_atoms("Λᵃ")?;
    let mapping = tgt_dual
        .clusters
        .iter()
        .map(|sigma| {
            let i = match sigma.witness() {
                crate::contact::ClusterWitness::Ultrafilter(i) => *i,
                _ => return Err(Error::NoMatchingCluster),
            };
            // The preimage of the principal ultrafilter at `i` is principal
            // at the unique source atom whose image contains `i`.
            let j = (0..n)
                .find(|&j| t[1usize << j] >> i & 1 == 1)
                .ok_or(Error::NoMatchingCluster)?;
            point_with_ultrafilter(&src_dual, j)
        })
        .collect::<Result<Vec<_>>>()?;
    SpaceMap::new(tgt_dual.space, src_dual.space, mapping)
}

fn point_with_ultrafilter(dual: &DualSpaceResult, atom: usize) -> Result<usize> {
    let designated = dual
        .structure
        .designated_relation()
        .table(&dual.structure.carrier)?;
    let n = dual.structure.carrier.finite_atoms("σ_u")?;
    let full = full_mask(n);
    let sigma = MaskSet::from_fn(n, |a| {
        (0..=full)
            .filter(|b| b >> atom & 1 == 1)
            .all(|b| designated.get(a, b))
    });
    dual.point_of(&sigma).ok_or(Error::NoMatchingCluster)
}

/// `φ_Λ(b) = ⋀{a | φ(a) ≥ b}`, returned as a morphism from the target back
/// to the source. Requires a Boolean homomorphism.
pub fn left_adjoint(phi: &AlgebraMorphism) -> Result<AlgebraMorphism> {
    if !phi.is_boolean_homomorphism()? {
        return Err(Error::NotHomomorphism(
            "left adjoint needs a Boolean homomorphism".into(),
        ));
    }
    let t = phi.finite_table("left adjoint")?;
    let n = phi.source.carrier.finite_atoms("left adjoint")?;
    let m = phi.target.carrier.finite_atoms("left adjoint")?;
    let (fs, ft) = (full_mask(n), full_mask(m));
    let adj: Vec<u64> = (0..=ft)
        .map(|b| {
            (0..=fs)
                .filter(|&a| b & !t[a as usize] == 0)
                .fold(fs, |acc, a| acc & a)
        })
        .collect();
    for b in 0..=ft {
        debug_assert_eq!(b & !t[adj[b as usize] as usize], 0);
    }
    Ok(AlgebraMorphism {
        source: phi.target.clone(),
        target: phi.source.clone(),
        map: MorphismMap::Table(adj),
    })
}

/// (LO): `φ_Λ(b) ρ a` implies `b η φ(a)` for all `a` and bounded `b`.
pub fn check_lo(phi: &AlgebraMorphism) -> Result<AxiomReport> {
    let adj = left_adjoint(phi)?;
    let la = adj.finite_table("LO")?;
    let t = phi.finite_table("LO")?;
    let Views { src, tgt } = views(phi)?;
    for a in 0..=src.full {
        for b in (0..=tgt.full).filter(|&b| tgt.in_ideal(b)) {
            if src.contact(la[b as usize], a) && !tgt.contact(b, t[a as usize]) {
                return Ok(AxiomReport::new(
                    CheckId::LO,
                    Verdict::fail([
                        ("a", el(&phi.source.carrier, a)),
                        ("b", el(&phi.target.carrier, b)),
                    ]),
                ));
            }
        }
    }
    Ok(AxiomReport::new(CheckId::LO, Verdict::Pass))
}

/// Atom images of a table morphism, for diagnostics.
pub fn atom_images(phi: &AlgebraMorphism) -> Option<Vec<Vec<usize>>> {
    let t = phi.table()?;
    let n = phi.source.carrier.atom_count()?;
    Some((0..n).map(|i| mask_atoms(t[1 << i]).collect()).collect())
}
