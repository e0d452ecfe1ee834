//! Interpolating families indexed by dyadic rationals in `(0, 1)`, decided
//! on the interval line by a small set of candidate constructions.

use num_rational::BigRational;
use num_traits::One;

use super::ContactRelation;
use crate::carrier::IntervalSet;
use crate::error::Result;

/// A family `d ↦ c_d` over dyadic indices.
#[derive(Clone, Debug)]
pub enum DyadicFamily {
    Constant(IntervalSet),
    /// `c_d = N_r(a)` with `r = g(1 + d)/3`, radii strictly inside `(0, g)`.
    Grow {
        around: IntervalSet,
        gap: BigRational,
    },
    /// `c_d = cl(R \ N_r(b))` with `r = g(2 - d)/3`.
    Shrink {
        away: IntervalSet,
        gap: BigRational,
    },
}

impl DyadicFamily {
    pub fn at(&self, d: &BigRational) -> IntervalSet {
        let three = BigRational::from_integer(3.into());
        let one = BigRational::one();
        match self {
            DyadicFamily::Constant(c) => c.clone(),
            DyadicFamily::Grow { around, gap } => {
                around.neighbourhood(&(gap * (&one + d) / &three))
            }
            DyadicFamily::Shrink { away, gap } => {
                let two = &one + &one;
                away.neighbourhood(&(gap * (two - d) / &three)).complement()
            }
        }
    }

    /// Values at `k / 2^depth` for `0 < k < 2^depth`.
    pub fn sample(&self, depth: u32) -> Vec<(BigRational, IntervalSet)> {
        let den = BigRational::from_integer((1i64 << depth).into());
        (1..1i64 << depth)
            .map(|k| {
                let d = BigRational::from_integer(k.into()) / &den;
                let c = self.at(&d);
                (d, c)
            })
            .collect()
    }
}

/// Family witnessing that `a` and `b` are separated under the standard
/// relation, or `None` when they intersect.
pub fn explicit_family(a: &IntervalSet, b: &IntervalSet) -> Option<DyadicFamily> {
    if a.is_empty() {
        return Some(DyadicFamily::Constant(IntervalSet::empty()));
    }
    if b.is_empty() {
        return Some(DyadicFamily::Constant(IntervalSet::full()));
    }
    a.gap(b).map(|gap| DyadicFamily::Grow {
        around: a.clone(),
        gap,
    })
}

/// Whether `family` interpolates between `a` and `cl(R \ b)` under `rel`
/// at the indices `k / 2^depth`.
pub fn family_interpolates(
    rel: &ContactRelation,
    family: &DyadicFamily,
    a: &IntervalSet,
    b: &IntervalSet,
    depth: u32,
) -> Result<bool> {
    let idx: Vec<BigRational> = family.sample(depth).into_iter().map(|(d, _)| d).collect();
    family_satisfies(&[rel], family, a, b, &idx)
}

fn candidates(a: &IntervalSet, b: &IntervalSet) -> Vec<DyadicFamily> {
    let mut out = vec![
        DyadicFamily::Constant(IntervalSet::empty()),
        DyadicFamily::Constant(IntervalSet::full()),
    ];
    if let Some(gap) = a.gap(b) {
        out.push(DyadicFamily::Grow {
            around: a.clone(),
            gap: gap.clone(),
        });
        out.push(DyadicFamily::Shrink {
            away: b.clone(),
            gap,
        });
    }
    out
}

fn quarters() -> Vec<BigRational> {
    (1..=3)
        .map(|k| BigRational::new(k.into(), 4.into()))
        .collect()
}

/// Clauses (1) and (2) for `family` at the given indices under every relation.
pub(crate) fn family_satisfies(
    relations: &[&ContactRelation],
    family: &DyadicFamily,
    a: &IntervalSet,
    b: &IntervalSet,
    indices: &[BigRational],
) -> Result<bool> {
    let bc = b.complement();
    let values: Vec<IntervalSet> = indices.iter().map(|d| family.at(d)).collect();
    for rel in relations {
        for (i, c) in values.iter().enumerate() {
            if !rel.way_below_line(a, c)? || !rel.way_below_line(c, &bc)? {
                return Ok(false);
            }
            for later in &values[i + 1..] {
                if !rel.way_below_line(c, later)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether some candidate family separates `a` from `b` under all relations.
///
/// The catalog relations depend only on intersection and unbounded ends,
/// which the candidates preserve across all indices, so three indices decide
/// the whole family.
pub(crate) fn family_separates(
    relations: &[&ContactRelation],
    a: &IntervalSet,
    b: &IntervalSet,
) -> Result<bool> {
    let idx = quarters();
    for fam in candidates(a, b) {
        if family_satisfies(relations, &fam, a, b, &idx)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn iv(p: &[(Option<i64>, Option<i64>)]) -> IntervalSet {
        IntervalSet::ints(p)
    }

    #[test]
    fn opposite_rays_separated_by_family() {
        let a = iv(&[(Some(1), None)]);
        let b = iv(&[(None, Some(-1))]);
        let fam = explicit_family(&a, &b).unwrap();
        let std = ContactRelation::Standard;
        let idx: Vec<_> = fam.sample(3).into_iter().map(|(d, _)| d).collect();
        assert!(family_satisfies(&[&std], &fam, &a, &b, &idx).unwrap());
    }

    #[test]
    fn touching_pair_has_no_family() {
        let a = iv(&[(Some(0), Some(1))]);
        let b = iv(&[(Some(1), Some(2))]);
        assert!(explicit_family(&a, &b).is_none());
        assert!(!family_separates(&[&ContactRelation::Standard], &a, &b).unwrap());
    }

    #[test]
    fn family_values_are_nested() {
        let a = iv(&[(Some(0), Some(1))]);
        let b = iv(&[(Some(3), Some(4))]);
        let vals = explicit_family(&a, &b).unwrap().sample(2);
        for w in vals.windows(2) {
            assert!(w[0].1.leq(&w[1].1));
        }
        assert!(!BigRational::zero().eq(&vals[0].0));
    }
}
