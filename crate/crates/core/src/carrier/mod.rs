//! Boolean-algebra carriers: finite atom-set algebras and the interval-line
//! algebra of regular closed finite unions of intervals.

mod interval;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use interval::{parse_rational, Endpoint, Interval, IntervalSet};

use crate::error::{Error, Result};

/// Default upper bound on atoms for exhaustive enumeration.
pub const DEFAULT_ATOM_BOUND: usize = 12;

/// Largest atom count representable by a `u64` mask.
pub const MAX_ATOMS: usize = 63;

/// Identity token shared by a carrier and all its elements. Derived from the
/// carrier's label, so rebuilding the same algebra gives the same token.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CarrierId(u64);

impl CarrierId {
    fn of(label: &str) -> Self {
        let mut h = DefaultHasher::new();
        label.hash(&mut h);
        CarrierId(h.finish())
    }
}

/// `P({0..n-1})` with union, intersection and set complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomSetAlgebra {
    id: CarrierId,
    atom_count: usize,
    label: Arc<str>,
}

impl AtomSetAlgebra {
    pub fn new(atom_count: usize) -> Result<Self> {
        Self::labelled(atom_count, &format!("P({atom_count})"))
    }

    /// An atom algebra whose identity is tied to `label` (e.g. the regular
    /// closed sets of a particular space).
    pub fn labelled(atom_count: usize, label: &str) -> Result<Self> {
        if atom_count > MAX_ATOMS {
            return Err(Error::BoundExceeded {
                atoms: atom_count,
                bound: MAX_ATOMS,
            });
        }
        Ok(AtomSetAlgebra {
            id: CarrierId::of(label),
            atom_count,
            label: label.into(),
        })
    }

    pub fn atom_count(&self) -> usize {
        self.atom_count
    }

    pub fn full_mask(&self) -> u64 {
        full_mask(self.atom_count)
    }
}

pub fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The regular closed finite unions of rational intervals and rays in `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalLineAlgebra {
    id: CarrierId,
}

impl Default for IntervalLineAlgebra {
    fn default() -> Self {
        IntervalLineAlgebra {
            id: CarrierId::of("interval-line"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Carrier {
    Atoms(AtomSetAlgebra),
    Line(IntervalLineAlgebra),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Atoms(u64),
    Intervals(IntervalSet),
}

/// An element of some carrier. Immutable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    carrier: CarrierId,
    value: Value,
}

impl Element {
    pub fn carrier_id(&self) -> CarrierId {
        self.carrier
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn mask(&self) -> Option<u64> {
        match self.value {
            Value::Atoms(m) => Some(m),
            Value::Intervals(_) => None,
        }
    }

    pub fn intervals(&self) -> Option<&IntervalSet> {
        match &self.value {
            Value::Intervals(s) => Some(s),
            Value::Atoms(_) => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Atoms(m) => {
                f.write_str("{")?;
                for (k, i) in mask_atoms(*m).enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{i}")?;
                }
                f.write_str("}")
            }
            Value::Intervals(s) => write!(f, "{s}"),
        }
    }
}

/// Indices of set bits in ascending order.
pub fn mask_atoms(m: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| m >> i & 1 == 1)
}

impl Carrier {
    pub fn atoms(atom_count: usize) -> Result<Self> {
        AtomSetAlgebra::new(atom_count).map(Carrier::Atoms)
    }

    pub fn line() -> Self {
        Carrier::Line(IntervalLineAlgebra::default())
    }

    pub fn id(&self) -> CarrierId {
        match self {
            Carrier::Atoms(a) => a.id,
            Carrier::Line(l) => l.id,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Carrier::Atoms(a) => a.label.to_string(),
            Carrier::Line(_) => "interval-line".to_string(),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Carrier::Atoms(_))
    }

    pub fn atom_count(&self) -> Option<usize> {
        match self {
            Carrier::Atoms(a) => Some(a.atom_count),
            Carrier::Line(_) => None,
        }
    }

    pub(crate) fn finite_atoms(&self, op: &'static str) -> Result<usize> {
        self.atom_count().ok_or(Error::WrongBackend {
            op,
            expected: "finite",
        })
    }

    fn wrap(&self, value: Value) -> Element {
        Element {
            carrier: self.id(),
            value,
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            Carrier::Atoms(_) => self.wrap(Value::Atoms(0)),
            Carrier::Line(_) => self.wrap(Value::Intervals(IntervalSet::empty())),
        }
    }

    pub fn one(&self) -> Element {
        match self {
            Carrier::Atoms(a) => self.wrap(Value::Atoms(a.full_mask())),
            Carrier::Line(_) => self.wrap(Value::Intervals(IntervalSet::full())),
        }
    }

    pub fn element_from_mask(&self, mask: u64) -> Result<Element> {
        let n = self.finite_atoms("element_from_mask")?;
        if mask & !full_mask(n) != 0 {
            return Err(Error::InvalidElement(format!(
                "mask {mask:#b} has atoms outside 0..{n}"
            )));
        }
        Ok(self.wrap(Value::Atoms(mask)))
    }

    pub fn element_from_atoms(&self, atoms: &[usize]) -> Result<Element> {
        let n = self.finite_atoms("element_from_atoms")?;
        let mut mask = 0u64;
        for &i in atoms {
            if i >= n {
                return Err(Error::InvalidElement(format!(
                    "atom {i} out of range 0..{n}"
                )));
            }
            mask |= 1 << i;
        }
        Ok(self.wrap(Value::Atoms(mask)))
    }

    pub fn atom(&self, i: usize) -> Result<Element> {
        self.element_from_atoms(&[i])
    }

    pub fn interval(&self, set: IntervalSet) -> Result<Element> {
        match self {
            Carrier::Line(_) => Ok(self.wrap(Value::Intervals(set))),
            Carrier::Atoms(_) => Err(Error::WrongBackend {
                op: "interval",
                expected: "interval-line",
            }),
        }
    }

    /// Rejects elements minted by another carrier.
    pub fn own(&self, a: &Element) -> Result<()> {
        if a.carrier != self.id() {
            return Err(Error::MixedCarrier {
                left: self.label(),
                right: format!("{:?}", a.carrier),
            });
        }
        Ok(())
    }

    fn same(&self, a: &Element, b: &Element) -> Result<()> {
        self.own(a)?;
        self.own(b)
    }

    pub fn meet(&self, a: &Element, b: &Element) -> Result<Element> {
        self.same(a, b)?;
        Ok(match (&a.value, &b.value) {
            (Value::Atoms(x), Value::Atoms(y)) => self.wrap(Value::Atoms(x & y)),
            (Value::Intervals(x), Value::Intervals(y)) => self.wrap(Value::Intervals(x.meet(y))),
            _ => unreachable!("carrier id fixes the backend"),
        })
    }

    pub fn join(&self, a: &Element, b: &Element) -> Result<Element> {
        self.same(a, b)?;
        Ok(match (&a.value, &b.value) {
            (Value::Atoms(x), Value::Atoms(y)) => self.wrap(Value::Atoms(x | y)),
            (Value::Intervals(x), Value::Intervals(y)) => self.wrap(Value::Intervals(x.join(y))),
            _ => unreachable!("carrier id fixes the backend"),
        })
    }

    pub fn complement(&self, a: &Element) -> Result<Element> {
        self.own(a)?;
        Ok(match (self, &a.value) {
            (Carrier::Atoms(c), Value::Atoms(x)) => self.wrap(Value::Atoms(!x & c.full_mask())),
            (Carrier::Line(_), Value::Intervals(x)) => self.wrap(Value::Intervals(x.complement())),
            _ => unreachable!("carrier id fixes the backend"),
        })
    }

    pub fn leq(&self, a: &Element, b: &Element) -> Result<bool> {
        self.same(a, b)?;
        Ok(match (&a.value, &b.value) {
            (Value::Atoms(x), Value::Atoms(y)) => x & !y == 0,
            (Value::Intervals(x), Value::Intervals(y)) => x.leq(y),
            _ => unreachable!("carrier id fixes the backend"),
        })
    }

    pub fn atoms_below(&self, a: &Element) -> Result<Vec<usize>> {
        self.finite_atoms("atoms_below")?;
        self.own(a)?;
        Ok(mask_atoms(a.mask().expect("finite element")).collect())
    }

    /// All `2^n` elements in mask order, for `n` up to [`DEFAULT_ATOM_BOUND`].
    pub fn elements(&self) -> Result<impl Iterator<Item = Element> + '_> {
        self.elements_bounded(DEFAULT_ATOM_BOUND)
    }

    pub fn elements_bounded(&self, bound: usize) -> Result<impl Iterator<Item = Element> + '_> {
        let n = self.finite_atoms("enumerate_elements")?;
        if n > bound {
            return Err(Error::BoundExceeded { atoms: n, bound });
        }
        Ok((0..(1u64 << n)).map(move |m| self.wrap(Value::Atoms(m))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_meet() {
        let c = Carrier::atoms(3).unwrap();
        let a = c.element_from_atoms(&[0, 1]).unwrap();
        let b = c.element_from_atoms(&[1, 2]).unwrap();
        assert_eq!(c.meet(&a, &b).unwrap(), c.atom(1).unwrap());
    }

    #[test]
    fn interval_meets() {
        let c = Carrier::line();
        let e = |p| c.interval(IntervalSet::ints(p)).unwrap();
        let m = c
            .meet(&e(&[(Some(0), Some(2))]), &e(&[(Some(1), Some(3))]))
            .unwrap();
        assert_eq!(m, e(&[(Some(1), Some(2))]));
        let m = c
            .meet(&e(&[(Some(0), Some(1))]), &e(&[(Some(1), Some(2))]))
            .unwrap();
        assert_eq!(m, c.zero());
    }

    #[test]
    fn atoms_below_examples() {
        let c = Carrier::atoms(3).unwrap();
        let a = c.element_from_atoms(&[0, 2]).unwrap();
        assert_eq!(c.atoms_below(&a).unwrap(), vec![0, 2]);
        assert!(c.atoms_below(&c.zero()).unwrap().is_empty());
        assert_eq!(c.atoms_below(&c.one()).unwrap(), vec![0, 1, 2]);
        assert!(Carrier::line()
            .atoms_below(&Carrier::line().zero())
            .is_err());
    }

    #[test]
    fn enumeration_counts() {
        for (n, count) in [(0, 1), (2, 4), (4, 16)] {
            let c = Carrier::atoms(n).unwrap();
            assert_eq!(c.elements().unwrap().count(), count);
        }
        let c = Carrier::atoms(0).unwrap();
        assert_eq!(c.zero(), c.one());
        assert!(matches!(
            Carrier::atoms(13).unwrap().elements(),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(Carrier::line().elements().is_err());
    }

    #[test]
    fn mixed_carriers_rejected() {
        let p2 = Carrier::atoms(2).unwrap();
        let p3 = Carrier::atoms(3).unwrap();
        let err = p3.meet(&p2.one(), &p3.one()).unwrap_err();
        assert!(matches!(err, Error::MixedCarrier { .. }));
        let line = Carrier::line();
        assert!(line.join(&line.one(), &p2.zero()).is_err());
    }

    #[test]
    fn boolean_laws_exhaustive_small() {
        for n in 0..=4 {
            let c = Carrier::atoms(n).unwrap();
            let els: Vec<_> = c.elements().unwrap().collect();
            for a in &els {
                let ac = c.complement(a).unwrap();
                assert_eq!(c.meet(a, &ac).unwrap(), c.zero());
                assert_eq!(c.join(a, &ac).unwrap(), c.one());
                for b in &els {
                    let leq = c.leq(a, b).unwrap();
                    assert_eq!(leq, c.meet(a, b).unwrap() == *a);
                    let dm = c.complement(&c.join(a, b).unwrap()).unwrap();
                    let rhs = c.meet(&ac, &c.complement(b).unwrap()).unwrap();
                    assert_eq!(dm, rhs);
                    for d in &els {
                        let l = c.meet(a, &c.join(b, d).unwrap()).unwrap();
                        let r = c
                            .join(&c.meet(a, b).unwrap(), &c.meet(a, d).unwrap())
                            .unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }
}
