//! Regular closed subsets of the real line that are finite unions of closed
//! intervals with rational (or infinite) endpoints.

use std::cmp::{max, min};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Endpoint of a component. `NegInf < Finite(_) < PosInf`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Endpoint {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Endpoint {
    pub fn int(v: i64) -> Self {
        Endpoint::Finite(BigRational::from_integer(v.into()))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Endpoint::Finite(BigRational::new(p.into(), q.into()))
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            Endpoint::Finite(v) => Some(v),
            _ => None,
        }
    }

    fn shifted(&self, delta: &BigRational) -> Endpoint {
        match self {
            Endpoint::Finite(v) => Endpoint::Finite(v + delta),
            other => other.clone(),
        }
    }

    /// Literal token: `-inf`, `inf`, or `p/q` (`p` when integral).
    pub fn to_token(&self) -> String {
        match self {
            Endpoint::NegInf => "-inf".to_string(),
            Endpoint::PosInf => "inf".to_string(),
            Endpoint::Finite(v) => v.to_string(),
        }
    }

    pub fn parse_token(tok: &str) -> Result<Endpoint> {
        match tok.trim() {
            "-inf" => Ok(Endpoint::NegInf),
            "inf" | "+inf" => Ok(Endpoint::PosInf),
            t => parse_rational(t).map(Endpoint::Finite),
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_token())
    }
}

pub fn parse_rational(tok: &str) -> Result<BigRational> {
    let bad = || Error::InvalidElement(format!("bad rational `{tok}`"));
    match tok.split_once('/') {
        Some((p, q)) => {
            let p: num_bigint::BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: num_bigint::BigInt = tok.trim().parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// A closed interval of positive length.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    fn contains(&self, p: &BigRational) -> bool {
        let e = Endpoint::Finite(p.clone());
        self.lo <= e && e <= self.hi
    }

    fn interior_contains(&self, p: &BigRational) -> bool {
        let e = Endpoint::Finite(p.clone());
        self.lo < e && e < self.hi
    }
}

/// Canonical finite union of closed intervals: components sorted, each of
/// positive length, consecutive components separated by a gap of positive
/// length.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IntervalSet {
    components: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    pub fn full() -> Self {
        IntervalSet {
            components: vec![Interval {
                lo: Endpoint::NegInf,
                hi: Endpoint::PosInf,
            }],
        }
    }

    /// Builds a set from closed intervals. Each pair must satisfy `lo < hi`
    /// (single points are not regular closed) and must not start at `+inf` or
    /// end at `-inf`. Overlapping and touching intervals are merged.
    pub fn new<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Endpoint, Endpoint)>,
    {
        let mut comps = Vec::new();
        for (lo, hi) in pairs {
            if lo == Endpoint::PosInf || hi == Endpoint::NegInf {
                return Err(Error::InvalidElement(format!(
                    "interval [{lo}, {hi}] has a misplaced infinite endpoint"
                )));
            }
            if lo >= hi {
                return Err(Error::InvalidElement(format!(
                    "interval [{lo}, {hi}] does not have positive length"
                )));
            }
            comps.push(Interval { lo, hi });
        }
        Ok(Self::canonical(comps))
    }

    /// Convenience constructor over integer endpoints; `None` is an infinite end.
    pub fn ints(pairs: &[(Option<i64>, Option<i64>)]) -> Self {
        let it = pairs.iter().map(|(l, h)| {
            (
                l.map_or(Endpoint::NegInf, Endpoint::int),
                h.map_or(Endpoint::PosInf, Endpoint::int),
            )
        });
        Self::new(it).expect("integer interval literal")
    }

    /// Drops degenerate pieces, sorts, merges overlapping or touching pieces.
    fn canonical(mut comps: Vec<Interval>) -> Self {
        comps.retain(|c| c.lo < c.hi);
        comps.sort();
        let mut out: Vec<Interval> = Vec::with_capacity(comps.len());
        for c in comps {
            match out.last_mut() {
                Some(last) if c.lo <= last.hi => {
                    if c.hi > last.hi {
                        last.hi = c.hi;
                    }
                }
                _ => out.push(c),
            }
        }
        IntervalSet { components: out }
    }

    pub fn components(&self) -> &[Interval] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.components.len() == 1
            && self.components[0].lo == Endpoint::NegInf
            && self.components[0].hi == Endpoint::PosInf
    }

    pub fn unbounded_below(&self) -> bool {
        self.components
            .first()
            .is_some_and(|c| c.lo == Endpoint::NegInf)
    }

    pub fn unbounded_above(&self) -> bool {
        self.components
            .last()
            .is_some_and(|c| c.hi == Endpoint::PosInf)
    }

    pub fn is_bounded(&self) -> bool {
        !self.unbounded_below() && !self.unbounded_above()
    }

    pub fn join(&self, other: &Self) -> Self {
        let mut comps = self.components.clone();
        comps.extend(other.components.iter().cloned());
        Self::canonical(comps)
    }

    /// `cl(int(F ∩ G))`: pairwise overlaps of positive length.
    pub fn meet(&self, other: &Self) -> Self {
        let mut comps = Vec::new();
        for a in &self.components {
            for b in &other.components {
                let lo = max(&a.lo, &b.lo).clone();
                let hi = min(&a.hi, &b.hi).clone();
                if lo < hi {
                    comps.push(Interval { lo, hi });
                }
            }
        }
        Self::canonical(comps)
    }

    /// `cl(R \ F)`.
    pub fn complement(&self) -> Self {
        let mut comps = Vec::new();
        let mut prev = Endpoint::NegInf;
        for c in &self.components {
            if c.lo > prev {
                comps.push(Interval {
                    lo: prev.clone(),
                    hi: c.lo.clone(),
                });
            }
            prev = c.hi.clone();
        }
        if prev < Endpoint::PosInf {
            comps.push(Interval {
                lo: prev,
                hi: Endpoint::PosInf,
            });
        }
        Self::canonical(comps)
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.components.iter().all(|a| {
            other
                .components
                .iter()
                .any(|b| b.lo <= a.lo && a.hi <= b.hi)
        })
    }

    /// Point-set intersection is non-empty (touching endpoints count).
    pub fn intersects(&self, other: &Self) -> bool {
        self.components.iter().any(|a| {
            other
                .components
                .iter()
                .any(|b| max(&a.lo, &b.lo) <= min(&a.hi, &b.hi))
        })
    }

    pub fn contains_point(&self, p: &BigRational) -> bool {
        self.components.iter().any(|c| c.contains(p))
    }

    pub fn interior_contains(&self, p: &BigRational) -> bool {
        self.components.iter().any(|c| c.interior_contains(p))
    }

    /// Distance between two point-set disjoint non-empty sets; `None` when
    /// they intersect or either is empty.
    pub fn gap(&self, other: &Self) -> Option<BigRational> {
        if self.is_empty() || other.is_empty() || self.intersects(other) {
            return None;
        }
        let mut best: Option<BigRational> = None;
        for a in &self.components {
            for b in &other.components {
                let d = if a.hi < b.lo {
                    distance(&a.hi, &b.lo)
                } else {
                    distance(&b.hi, &a.lo)
                };
                best = Some(match best {
                    Some(cur) if cur <= d => cur,
                    _ => d,
                });
            }
        }
        best
    }

    /// Closed `delta`-neighbourhood; `delta` must be positive.
    pub fn neighbourhood(&self, delta: &BigRational) -> Self {
        debug_assert!(delta.is_positive());
        let neg = -delta.clone();
        let comps = self
            .components
            .iter()
            .map(|c| Interval {
                lo: c.lo.shifted(&neg),
                hi: c.hi.shifted(delta),
            })
            .collect();
        Self::canonical(comps)
    }

    /// A bounded interval contained in the interior of `self`, if non-empty.
    pub fn inner_interval(&self) -> Option<Self> {
        let c = self.components.first()?;
        let four = BigRational::from_integer(4.into());
        let one = BigRational::one();
        let (lo, hi) = match (&c.lo, &c.hi) {
            (Endpoint::Finite(l), Endpoint::Finite(h)) => {
                let q = (h - l) / &four;
                (l + &q, h - &q)
            }
            (Endpoint::NegInf, Endpoint::Finite(h)) => (h - &one - &one, h - &one),
            (Endpoint::Finite(l), Endpoint::PosInf) => (l + &one, l + &one + &one),
            _ => (BigRational::zero(), one),
        };
        Some(IntervalSet {
            components: vec![Interval {
                lo: Endpoint::Finite(lo),
                hi: Endpoint::Finite(hi),
            }],
        })
    }

    /// Largest absolute value among finite endpoints (zero if none).
    pub fn magnitude(&self) -> BigRational {
        self.components
            .iter()
            .flat_map(|c| [c.lo.finite(), c.hi.finite()])
            .flatten()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    /// Image under `x ↦ scale·x + shift` with `scale > 0`.
    pub fn affine(&self, scale: &BigRational, shift: &BigRational) -> Self {
        let map = |e: &Endpoint| match e {
            Endpoint::Finite(v) => Endpoint::Finite(v * scale + shift),
            other => other.clone(),
        };
        let comps = self
            .components
            .iter()
            .map(|c| Interval {
                lo: map(&c.lo),
                hi: map(&c.hi),
            })
            .collect();
        Self::canonical(comps)
    }
}

fn distance(lo: &Endpoint, hi: &Endpoint) -> BigRational {
    match (lo, hi) {
        (Endpoint::Finite(a), Endpoint::Finite(b)) => b - a,
        _ => unreachable!("gap between unbounded ends"),
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("∅");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "[{}, {}]", c.lo, c.hi)?;
        }
        Ok(())
    }
}
