//! Axiom checkers. Finite carriers are checked exhaustively and report the
//! first violating tuple in mask order; the interval line is sampled.

use num_rational::BigRational;
use num_traits::One;
use rand::Rng;

use super::{ContactRelation, ContactStructure, Ideal, RelTable};
use crate::carrier::{full_mask, Carrier, IntervalSet};
use crate::error::Result;
use crate::report::{AxiomReport, CheckId, Verdict, Witness};
use crate::sampling::{anchors, random_element, random_nested_pair, SampleConfig};

/// A finite relation with the ideal it is checked against.
struct Fin<'a> {
    carrier: &'a Carrier,
    full: u64,
    t: &'a RelTable,
    ideal: u64,
}

impl Fin<'_> {
    fn c(&self, a: u64, b: u64) -> bool {
        self.t.get(a, b)
    }

    fn wb(&self, a: u64, b: u64) -> bool {
        !self.t.get(a, !b & self.full)
    }

    fn ib(&self, a: u64) -> bool {
        a & !self.ideal == 0
    }

    fn all(&self) -> std::ops::RangeInclusive<u64> {
        0..=self.full
    }

    fn ideal_elements(&self) -> impl Iterator<Item = u64> + '_ {
        self.all().filter(|&a| self.ib(a))
    }

    fn fail(&self, bindings: &[(&str, u64)]) -> Verdict {
        Verdict::fail(bindings.iter().map(|&(k, m)| {
            let e = self
                .carrier
                .element_from_mask(m)
                .expect("mask within carrier");
            (k.to_string(), Witness::Element(e))
        }))
    }

    fn first_pair(&self, names: [&str; 2], bad: impl Fn(u64, u64) -> bool) -> Verdict {
        for a in self.all() {
            for b in self.all() {
                if bad(a, b) {
                    return self.fail(&[(names[0], a), (names[1], b)]);
                }
            }
        }
        Verdict::Pass
    }

    fn c1(&self) -> Verdict {
        match self.all().find(|&a| a != 0 && !self.c(a, a)) {
            Some(a) => self.fail(&[("a", a)]),
            None => Verdict::Pass,
        }
    }

    fn c2(&self) -> Verdict {
        self.first_pair(["a", "b"], |a, b| self.c(a, b) && (a == 0 || b == 0))
    }

    fn c3(&self) -> Verdict {
        self.first_pair(["a", "b"], |a, b| self.c(a, b) && !self.c(b, a))
    }

    fn c4(&self) -> Verdict {
        for a in self.all() {
            for b in self.all() {
                for c in self.all() {
                    if self.c(a, b | c) != (self.c(a, b) || self.c(a, c)) {
                        return self.fail(&[("a", a), ("b", b), ("c", c)]);
                    }
                }
            }
        }
        Verdict::Pass
    }

    fn c5(&self) -> Verdict {
        self.first_pair(["a", "b"], |a, b| {
            !self.c(a, b)
                && !self
                    .all()
                    .any(|c| !self.c(a, c) && !self.c(b, !c & self.full))
        })
    }

    fn c6(&self) -> Verdict {
        match self
            .all()
            .find(|&a| a != self.full && !self.all().any(|b| b != 0 && !self.c(b, a)))
        {
            Some(a) => self.fail(&[("a", a)]),
            None => Verdict::Pass,
        }
    }

    fn bc1(&self) -> Verdict {
        self.first_pair(["a", "c"], |a, c| {
            self.ib(a)
                && self.wb(a, c)
                && !self
                    .ideal_elements()
                    .any(|b| self.wb(a, b) && self.wb(b, c))
        })
    }

    fn bc2(&self) -> Verdict {
        self.first_pair(["a", "b"], |a, b| {
            self.c(a, b) && !self.ideal_elements().any(|c| self.c(a, c & b))
        })
    }

    fn bc3(&self) -> Verdict {
        match self
            .all()
            .find(|&a| a != 0 && !self.ideal_elements().any(|b| b != 0 && self.wb(b, a)))
        {
            Some(a) => self.fail(&[("a", a)]),
            None => Verdict::Pass,
        }
    }
}

/// Line relation with the ideal it is checked against.
struct Line<'a> {
    rel: &'a ContactRelation,
    ib: &'a Ideal,
    cfg: &'a SampleConfig,
}

enum Draw {
    Free(usize),
    /// `(a, c)` with `a` bounded and `c` often a neighbourhood of `a`.
    Nested,
}

type LineFailure = Option<Vec<(&'static str, IntervalSet)>>;

impl Line<'_> {
    fn c(&self, a: &IntervalSet, b: &IntervalSet) -> Result<bool> {
        self.rel.holds_line(a, b)
    }

    fn wb(&self, a: &IntervalSet, b: &IntervalSet) -> Result<bool> {
        self.rel.way_below_line(a, b)
    }

    fn ib(&self, a: &IntervalSet) -> bool {
        self.ib.contains_line(a)
    }

    /// Runs `check` on every tuple of anchors, then on `cfg.samples` random
    /// tuples. Reports the first failure.
    fn sample<F>(&self, tag: &str, draw: Draw, mut check: F) -> Result<Verdict>
    where
        F: FnMut(&[IntervalSet]) -> Result<LineFailure>,
    {
        let arity = match draw {
            Draw::Free(k) => k,
            Draw::Nested => 2,
        };
        let base = anchors();
        let mut tuple_idx = vec![0usize; arity];
        'anchors: loop {
            let tuple: Vec<IntervalSet> = tuple_idx.iter().map(|&i| base[i].clone()).collect();
            if let Some(f) = check(&tuple)? {
                return Ok(line_fail(f));
            }
            for slot in tuple_idx.iter_mut().rev() {
                *slot += 1;
                if *slot < base.len() {
                    continue 'anchors;
                }
                *slot = 0;
            }
            break;
        }
        let mut rng = self.cfg.rng_for(tag);
        for _ in 0..self.cfg.samples {
            let tuple = match draw {
                Draw::Free(k) => (0..k).map(|_| random_element(&mut rng)).collect(),
                Draw::Nested => {
                    let bounded = rng.gen_bool(0.75);
                    let (a, c) = random_nested_pair(&mut rng, bounded);
                    vec![a, c]
                }
            };
            if let Some(f) = check(&tuple)? {
                return Ok(line_fail(f));
            }
        }
        Ok(Verdict::SampledPass {
            samples: self.cfg.samples,
        })
    }

    fn c1(&self) -> Result<Verdict> {
        self.sample("C1", Draw::Free(1), |t| {
            let a = &t[0];
            Ok((!a.is_empty() && !self.c(a, a)?).then(|| vec![("a", a.clone())]))
        })
    }

    fn c2(&self) -> Result<Verdict> {
        self.sample("C2", Draw::Free(2), |t| {
            let (a, b) = (&t[0], &t[1]);
            Ok((self.c(a, b)? && (a.is_empty() || b.is_empty()))
                .then(|| vec![("a", a.clone()), ("b", b.clone())]))
        })
    }

    fn c3(&self) -> Result<Verdict> {
        self.sample("C3", Draw::Free(2), |t| {
            let (a, b) = (&t[0], &t[1]);
            Ok((self.c(a, b)? && !self.c(b, a)?).then(|| vec![("a", a.clone()), ("b", b.clone())]))
        })
    }

    fn c4(&self) -> Result<Verdict> {
        self.sample("C4", Draw::Free(3), |t| {
            let (a, b, c) = (&t[0], &t[1], &t[2]);
            let lhs = self.c(a, &b.join(c))?;
            let rhs = self.c(a, b)? || self.c(a, c)?;
            Ok((lhs != rhs).then(|| vec![("a", a.clone()), ("b", b.clone()), ("c", c.clone())]))
        })
    }

    fn c5(&self) -> Result<Verdict> {
        self.sample("C5", Draw::Free(2), |t| {
            let (a, b) = (&t[0], &t[1]);
            if self.c(a, b)? {
                return Ok(None);
            }
            let mut cands = vec![IntervalSet::empty(), IntervalSet::full()];
            if let Some(g) = a.gap(b) {
                let d = g / BigRational::from_integer(2.into());
                cands.push(b.neighbourhood(&d));
                cands.push(a.neighbourhood(&d).complement());
            }
            for c in &cands {
                if !self.c(a, c)? && !self.c(b, &c.complement())? {
                    return Ok(None);
                }
            }
            Ok(Some(vec![("a", a.clone()), ("b", b.clone())]))
        })
    }

    fn c6(&self) -> Result<Verdict> {
        self.sample("C6", Draw::Free(1), |t| {
            let a = &t[0];
            if a.is_full() {
                return Ok(None);
            }
            let found = match a.complement().inner_interval() {
                Some(b) => !self.c(&b, a)?,
                None => false,
            };
            Ok((!found).then(|| vec![("a", a.clone())]))
        })
    }

    fn bc1(&self) -> Result<Verdict> {
        self.sample("BC1", Draw::Nested, |t| {
            let (a, c) = (&t[0], &t[1]);
            if !self.ib(a) || !self.wb(a, c)? {
                return Ok(None);
            }
            let delta = a
                .gap(&c.complement())
                .map(|g| g / BigRational::from_integer(2.into()))
                .unwrap_or_else(BigRational::one);
            for b in [IntervalSet::empty(), a.neighbourhood(&delta)] {
                if self.ib(&b) && self.wb(a, &b)? && self.wb(&b, c)? {
                    return Ok(None);
                }
            }
            Ok(Some(vec![("a", a.clone()), ("c", c.clone())]))
        })
    }

    fn bc2(&self) -> Result<Verdict> {
        self.sample("BC2", Draw::Free(2), |t| {
            let (a, b) = (&t[0], &t[1]);
            if !self.c(a, b)? {
                return Ok(None);
            }
            let m = a.magnitude().max(b.magnitude()) + BigRational::one();
            let box_m = IntervalSet::new([(
                crate::carrier::Endpoint::Finite(-m.clone()),
                crate::carrier::Endpoint::Finite(m),
            )])?;
            let ok = self.ib(&box_m) && self.c(a, &box_m.meet(b))?;
            Ok((!ok).then(|| vec![("a", a.clone()), ("b", b.clone())]))
        })
    }

    fn bc3(&self) -> Result<Verdict> {
        self.sample("BC3", Draw::Free(1), |t| {
            let a = &t[0];
            if a.is_empty() {
                return Ok(None);
            }
            let ok = match a.inner_interval() {
                Some(b) => self.ib(&b) && !b.is_empty() && self.wb(&b, a)?,
                None => false,
            };
            Ok((!ok).then(|| vec![("a", a.clone())]))
        })
    }
}

fn line_fail(bindings: Vec<(&'static str, IntervalSet)>) -> Verdict {
    let line = Carrier::line();
    Verdict::fail(bindings.into_iter().map(|(k, s)| {
        let e = line.interval(s).expect("line element");
        (k, Witness::Element(e))
    }))
}

enum Backend<'a> {
    Fin(Fin<'a>),
    Line(Line<'a>),
}

fn with_backend<T>(
    carrier: &Carrier,
    rel: &ContactRelation,
    ib: &Ideal,
    cfg: &SampleConfig,
    f: impl FnOnce(&Backend) -> Result<T>,
) -> Result<T> {
    rel.validate_on(carrier)?;
    match carrier {
        Carrier::Atoms(_) => {
            let n = carrier.finite_atoms("axiom check")?;
            let t = rel.table(carrier)?;
            let fin = Fin {
                carrier,
                full: full_mask(n),
                t: &t,
                ideal: ib.generator_mask(n)?,
            };
            f(&Backend::Fin(fin))
        }
        Carrier::Line(_) => f(&Backend::Line(Line { rel, ib, cfg })),
    }
}

fn run(b: &Backend, ids: &[CheckId]) -> Result<Vec<AxiomReport>> {
    ids.iter()
        .map(|&id| {
            let v = match b {
                Backend::Fin(f) => match id {
                    CheckId::C1 => f.c1(),
                    CheckId::C2 => f.c2(),
                    CheckId::C3 => f.c3(),
                    CheckId::C4 => f.c4(),
                    CheckId::C5 => f.c5(),
                    CheckId::C6 => f.c6(),
                    CheckId::BC1 => f.bc1(),
                    CheckId::BC2 => f.bc2(),
                    CheckId::BC3 => f.bc3(),
                    _ => unreachable!("not a contact axiom"),
                },
                Backend::Line(l) => match id {
                    CheckId::C1 => l.c1()?,
                    CheckId::C2 => l.c2()?,
                    CheckId::C3 => l.c3()?,
                    CheckId::C4 => l.c4()?,
                    CheckId::C5 => l.c5()?,
                    CheckId::C6 => l.c6()?,
                    CheckId::BC1 => l.bc1()?,
                    CheckId::BC2 => l.bc2()?,
                    CheckId::BC3 => l.bc3()?,
                    _ => unreachable!("not a contact axiom"),
                },
            };
            Ok(AxiomReport::new(id, v))
        })
        .collect()
}

const CA: [CheckId; 4] = [CheckId::C1, CheckId::C2, CheckId::C3, CheckId::C4];
const NCA: [CheckId; 6] = [
    CheckId::C1,
    CheckId::C2,
    CheckId::C3,
    CheckId::C4,
    CheckId::C5,
    CheckId::C6,
];
const LCA: [CheckId; 7] = [
    CheckId::C1,
    CheckId::C2,
    CheckId::C3,
    CheckId::C4,
    CheckId::BC1,
    CheckId::BC2,
    CheckId::BC3,
];

/// C1-C4 for the structure's relation.
pub fn check_ca(s: &ContactStructure, cfg: &SampleConfig) -> Result<Vec<AxiomReport>> {
    with_backend(&s.carrier, &s.rho, &s.ib, cfg, |b| run(b, &CA))
}

/// C1-C6 for the structure's relation.
pub fn check_nca(s: &ContactStructure, cfg: &SampleConfig) -> Result<Vec<AxiomReport>> {
    with_backend(&s.carrier, &s.rho, &s.ib, cfg, |b| run(b, &NCA))
}

/// C1-C4 and BC1-BC3.
pub fn check_lca(s: &ContactStructure, cfg: &SampleConfig) -> Result<Vec<AxiomReport>> {
    with_backend(&s.carrier, &s.rho, &s.ib, cfg, |b| run(b, &LCA))
}

/// `r1 ⊆ r2` as relations on `carrier`. Exhaustive on finite carriers,
/// sampled on the line.
pub fn relation_contained(
    carrier: &Carrier,
    r1: &ContactRelation,
    r2: &ContactRelation,
    cfg: &SampleConfig,
) -> Result<Verdict> {
    r1.validate_on(carrier)?;
    r2.validate_on(carrier)?;
    match carrier {
        Carrier::Atoms(_) => {
            let n = carrier.finite_atoms("relation containment")?;
            let (t1, t2) = (r1.table(carrier)?, r2.table(carrier)?);
            let fin = Fin {
                carrier,
                full: full_mask(n),
                t: &t1,
                ideal: full_mask(n),
            };
            Ok(fin.first_pair(["a", "b"], |a, b| t1.get(a, b) && !t2.get(a, b)))
        }
        Carrier::Line(_) => {
            let line = Line {
                rel: r1,
                ib: &Ideal::All,
                cfg,
            };
            line.sample("contained", Draw::Free(2), |t| {
                let (a, b) = (&t[0], &t[1]);
                Ok((r1.holds_line(a, b)? && !r2.holds_line(a, b)?)
                    .then(|| vec![("a", a.clone()), ("b", b.clone())]))
            })
        }
    }
}

/// Both containments `(r1 ⊆ r2, r2 ⊆ r1)`.
pub fn compare_relations(
    carrier: &Carrier,
    r1: &ContactRelation,
    r2: &ContactRelation,
    cfg: &SampleConfig,
) -> Result<(Verdict, Verdict)> {
    Ok((
        relation_contained(carrier, r1, r2, cfg)?,
        relation_contained(carrier, r2, r1, cfg)?,
    ))
}

/// Membership of `c` in `K_a` over `base`: C1-C6 for `c`, `ρ ⊆ c` (RC1),
/// and `aCb → aρb` whenever `b ∈ IB` (RC2).
pub fn check_ka_membership(
    base: &ContactStructure,
    c: &ContactRelation,
    cfg: &SampleConfig,
) -> Result<Vec<AxiomReport>> {
    let mut out = with_backend(&base.carrier, c, &base.ib, cfg, |b| run(b, &NCA))?;
    let rc1 = relation_contained(&base.carrier, &base.rho, c, cfg)?;
    out.push(AxiomReport::new(CheckId::RC1, rc1));
    let rc2 = match &base.carrier {
        Carrier::Atoms(_) => {
            let view = base.finite_view()?;
            let ct = c.table(&base.carrier)?;
            let fin = Fin {
                carrier: &base.carrier,
                full: view.full,
                t: &ct,
                ideal: view.ideal,
            };
            fin.first_pair(["a", "b"], |a, b| {
                view.in_ideal(b) && ct.get(a, b) && !view.contact(a, b)
            })
        }
        Carrier::Line(_) => {
            let line = Line {
                rel: c,
                ib: &base.ib,
                cfg,
            };
            line.sample("RC2", Draw::Free(2), |t| {
                let (a, b) = (&t[0], &t[1]);
                Ok(
                    (line.ib(b) && c.holds_line(a, b)? && !base.rho.holds_line(a, b)?)
                        .then(|| vec![("a", a.clone()), ("b", b.clone())]),
                )
            })?
        }
    };
    out.push(AxiomReport::new(CheckId::RC2, rc2));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{alexandroff_extension, beta_rho, AtomGraph};
    use super::*;
    use crate::report::{all_pass, find};

    fn cfg() -> SampleConfig {
        SampleConfig::default()
    }

    fn finite(g: AtomGraph, gen: Option<u64>) -> ContactStructure {
        ContactStructure::finite(g, gen).unwrap()
    }

    #[test]
    fn overlap_is_normal() {
        let r = check_nca(&finite(AtomGraph::loops_only(3), None), &cfg()).unwrap();
        assert!(all_pass(&r), "{r:?}");
    }

    #[test]
    fn zero_contact_breaks_c2() {
        let mut t = RelTable::from_fn(2, |a, b| a & b != 0);
        t.set(0, 0, true);
        let s = ContactStructure::new(
            Carrier::atoms(2).unwrap(),
            ContactRelation::Table(t),
            Ideal::All,
        )
        .unwrap();
        let r = check_ca(&s, &cfg()).unwrap();
        assert_eq!(
            find(&r, CheckId::C2).unwrap().to_string(),
            "C2: FAIL at a={}, b={}"
        );
    }

    #[test]
    fn path_passes_ca_fails_c5() {
        let s = finite(AtomGraph::path(3), None);
        assert!(all_pass(&check_ca(&s, &cfg()).unwrap()));
        let r = check_nca(&s, &cfg()).unwrap();
        assert_eq!(
            find(&r, CheckId::C5).unwrap().to_string(),
            "C5: FAIL at a={0}, b={2}"
        );
    }

    #[test]
    fn complete_two_atoms_fails_c6() {
        let r = check_nca(&finite(AtomGraph::complete(2), None), &cfg()).unwrap();
        assert_eq!(
            find(&r, CheckId::C6).unwrap().to_string(),
            "C6: FAIL at a={0}"
        );
    }

    #[test]
    fn proper_ideal_fails_bc3_at_missing_atom() {
        let r = check_lca(&finite(AtomGraph::loops_only(3), Some(0b011)), &cfg()).unwrap();
        assert_eq!(
            find(&r, CheckId::BC3).unwrap().to_string(),
            "BC3: FAIL at a={2}"
        );
        let r = check_lca(&finite(AtomGraph::loops_only(3), None), &cfg()).unwrap();
        assert!(all_pass(&r));
    }

    #[test]
    fn standard_line_is_local_contact_algebra() {
        let s = ContactStructure::line(ContactRelation::Standard, Ideal::Bounded).unwrap();
        let r = check_lca(&s, &cfg()).unwrap();
        assert!(all_pass(&r), "{r:?}");
        assert!(r
            .iter()
            .all(|x| matches!(x.verdict, Verdict::SampledPass { samples: 1000 })));
    }

    #[test]
    fn complete_not_in_ka_over_overlap() {
        let base = finite(AtomGraph::loops_only(2), None);
        let r = check_ka_membership(
            &base,
            &ContactRelation::AtomGraph(AtomGraph::complete(2)),
            &cfg(),
        )
        .unwrap();
        assert_eq!(
            find(&r, CheckId::RC2).unwrap().to_string(),
            "RC2: FAIL at a={0}, b={1}"
        );
    }

    #[test]
    fn line_extensions_in_ka() {
        let small = SampleConfig {
            samples: 200,
            seed: 3,
        };
        let s = ContactStructure::line(ContactRelation::Standard, Ideal::Bounded).unwrap();
        for c in [
            alexandroff_extension(&s),
            beta_rho(&s),
            ContactRelation::TwoPoint,
        ] {
            let r = check_ka_membership(&s, &c, &small).unwrap();
            assert!(all_pass(&r), "{} {r:?}", c.kind());
        }
    }
}
