//! Reproducible verification suites. Every suite is exhaustive up to the
//! atom bound, except on the interval line where it samples with the given
//! seed.

use std::fmt;
use std::str::FromStr;

use crate::carrier::{full_mask, Carrier, IntervalSet};
use crate::contact::{
    alexandroff_extension, beta_rho, check_ca, check_ka_membership, check_lca, check_nca,
    explicit_family, family_interpolates, relation_contained, AtomGraph, ContactRelation,
    ContactStructure, Ideal, RelTable,
};
use crate::duality::{
    check_dhlc, check_lo, compose, is_homeomorphism, lambda_a, lambda_a_ultrafilter,
    lambda_g_iso_check, lambda_t, psi_t, t_map, AlgebraMorphism,
};
use crate::error::{Error, Result};
use crate::extensions::{
    alpha, beta, bridge_to_local_proximity, check_compactification_conditions, check_eq,
    check_la_line, check_main_conditions, check_req, continuous_extensions, enumerate_admissible,
    extend_map, restrict_local_proximity, AdmissibleStructure, CompactificationReport,
};
use crate::output::{Report, Section};
use crate::registry;
use crate::report::{all_pass, AxiomReport, CheckId};
use crate::sampling::{random_element, SampleConfig};
use crate::spaces::{
    dense_restriction_iso, skeletal_equivalences, skeletal_transfer, DenseEmbedding, FiniteSpace,
    MapProperty, SpaceMap,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Duality,
    Posets,
    Extensions,
    Skeletal,
    Ka,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Axioms,
        Suite::Duality,
        Suite::Posets,
        Suite::Extensions,
        Suite::Skeletal,
        Suite::Ka,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Duality => "duality",
            Suite::Posets => "posets",
            Suite::Extensions => "extensions",
            Suite::Skeletal => "skeletal",
            Suite::Ka => "ka",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownName(format!("suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    /// Largest atom count (and point count for space sweeps, capped at 3).
    pub max_atoms: usize,
    pub cfg: SampleConfig,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            max_atoms: 3,
            cfg: SampleConfig::default(),
        }
    }
}

impl SuiteParams {
    fn atoms(&self) -> usize {
        self.max_atoms.min(4)
    }

    fn points(&self) -> usize {
        self.max_atoms.min(3)
    }
}

pub fn run(suite: Suite, p: &SuiteParams) -> Result<Report> {
    let mut r = Report::new(format!("verify {suite}"));
    r.param("suite", suite)
        .param("max-atoms", p.max_atoms)
        .param("samples", p.cfg.samples)
        .param("seed", p.cfg.seed);
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    for s in suites {
        match s {
            Suite::Axioms => axioms(&mut r, p)?,
            Suite::Duality => duality(&mut r, p)?,
            Suite::Posets => posets(&mut r, p)?,
            Suite::Extensions => extensions(&mut r, p)?,
            Suite::Skeletal => skeletal(&mut r, p)?,
            Suite::Ka => ka(&mut r, p)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(r)
}

fn tally(sec: &mut Section, label: String, ok: usize, total: usize) {
    sec.check(label, ok == total, format!("{ok}/{total}"));
}

fn failing(reports: &[AxiomReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.axiom.to_string())
        .collect()
}

fn fails(reports: &[AxiomReport], id: CheckId) -> bool {
    reports.iter().any(|r| r.axiom == id && !r.passed())
}

fn table_structure(n: usize, adj: Vec<u64>) -> Result<ContactStructure> {
    let g = AtomGraph::from_adjacency_unchecked(n, adj)?;
    let t = RelTable::from_fn(n, |a, b| g.holds(a, b));
    ContactStructure::new(Carrier::atoms(n)?, ContactRelation::Table(t), Ideal::All)
}

fn adjacency(g: &AtomGraph) -> Vec<u64> {
    (0..g.atom_count()).map(|i| g.row(i)).collect()
}

/// Every `(graph, generator)` pair on `P(n)`, generator `None` for `All`.
fn finite_structures(n: usize) -> Result<Vec<ContactStructure>> {
    let mut out = Vec::new();
    for g in AtomGraph::all(n) {
        for gen in 0..=full_mask(n) {
            let gen = (gen != full_mask(n)).then_some(gen);
            out.push(ContactStructure::finite(g.clone(), gen)?);
        }
    }
    Ok(out)
}

fn axioms(r: &mut Report, p: &SuiteParams) -> Result<()> {
    let cfg = &p.cfg;
    let sec = r.section("axioms: atom graphs");
    for n in 1..=p.atoms() {
        let graphs = AtomGraph::all(n);
        let mut ca = 0;
        let mut nca = Vec::new();
        let (mut loops, mut loops_total, mut syms, mut syms_total) = (0, 0, 0, 0);
        for g in &graphs {
            let s = ContactStructure::finite(g.clone(), None)?;
            if all_pass(&check_ca(&s, cfg)?) {
                ca += 1;
            }
            if all_pass(&check_nca(&s, cfg)?) {
                nca.push(g.clone());
            }
            let adj = adjacency(g);
            for i in 0..n {
                let mut m = adj.clone();
                m[i] &= !(1 << i);
                loops_total += 1;
                if fails(&check_ca(&table_structure(n, m)?, cfg)?, CheckId::C1) {
                    loops += 1;
                }
                for j in (0..n).filter(|&j| j != i && !g.adjacent(i, j)) {
                    let mut m = adj.clone();
                    m[i] |= 1 << j;
                    syms_total += 1;
                    if fails(&check_ca(&table_structure(n, m)?, cfg)?, CheckId::C3) {
                        syms += 1;
                    }
                }
            }
        }
        tally(
            sec,
            format!("P({n}): graphs satisfy C1-C4"),
            ca,
            graphs.len(),
        );
        tally(
            sec,
            format!("P({n}): loop deletions fail C1"),
            loops,
            loops_total,
        );
        tally(
            sec,
            format!("P({n}): symmetry breaks fail C3"),
            syms,
            syms_total,
        );
        sec.check(
            format!("P({n}): only the overlap graph satisfies C5-C6"),
            nca.len() == 1 && nca[0].is_loops_only(),
            format!("{} of {}", nca.len(), graphs.len()),
        );
        let structures = finite_structures(n)?;
        let mut lca = 0;
        let mut collapsed = 0;
        for s in &structures {
            if all_pass(&check_lca(s, cfg)?) {
                lca += 1;
                let overlap = matches!(&s.rho, ContactRelation::AtomGraph(g) if g.is_loops_only());
                if overlap && s.one_in_ideal() {
                    collapsed += 1;
                }
            }
        }
        sec.check(
            format!("P({n}): local contact algebras are (overlap, all bounded)"),
            lca == 1 && collapsed == 1,
            format!("{lca} of {}", structures.len()),
        );
    }

    let sec = r.section("axioms: named structures");
    for name in registry::STRUCTURES {
        let s = registry::structure(name)?;
        if s.carrier.atom_count().is_none_or(|a| a > p.atoms()) {
            continue;
        }
        let reports = if s.one_in_ideal() {
            check_nca(&s, cfg)?
        } else {
            check_lca(&s, cfg)?
        };
        let f = failing(&reports);
        let text = if f.is_empty() {
            "all axioms hold".to_string()
        } else {
            format!("fails {}", f.join(", "))
        };
        sec.info(*name, text);
    }
    Ok(())
}

fn discrete_spaces(max: usize) -> Result<Vec<FiniteSpace>> {
    (1..=max).map(FiniteSpace::discrete).collect()
}

/// Every DHLC morphism between overlap algebras on at most `max` atoms.
fn table_morphisms(max: usize, cfg: &SampleConfig) -> Result<Vec<AlgebraMorphism>> {
    let algebras: Vec<ContactStructure> = (1..=max)
        .map(|n| ContactStructure::finite(AtomGraph::loops_only(n), None))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for src in &algebras {
        for tgt in &algebras {
            let n = src.carrier.atom_count().expect("finite");
            let m = tgt.carrier.atom_count().expect("finite");
            let size = 1usize << n;
            let base = 1u64 << m;
            for code in 0..base.pow(size as u32) {
                let table: Vec<u64> = (0..size)
                    .map(|k| code / base.pow(k as u32) % base)
                    .collect();
                let phi = AlgebraMorphism::from_table(src.clone(), tgt.clone(), table)?;
                if all_pass(&check_dhlc(&phi, cfg)?) {
                    out.push(phi);
                }
            }
        }
    }
    Ok(out)
}

fn duality(r: &mut Report, p: &SuiteParams) -> Result<()> {
    let cfg = &p.cfg;
    let sec = r.section("duality: objects");
    for x in discrete_spaces(p.atoms())? {
        sec.check(
            format!("t_X homeomorphism for discrete {}", x.len()),
            is_homeomorphism(&t_map(&x)?),
            "",
        );
    }
    for n in 1..=p.atoms() {
        let mut ok = 0;
        let mut total = 0;
        for s in finite_structures(n)? {
            let reports = if s.one_in_ideal() {
                check_nca(&s, cfg)?
            } else {
                check_lca(&s, cfg)?
            };
            if !all_pass(&reports) {
                continue;
            }
            total += 1;
            if lambda_g_iso_check(&s)?.iter().all(|c| c.passed()) {
                ok += 1;
            }
        }
        tally(
            sec,
            format!("P({n}): λᵍ isomorphism for every local contact algebra"),
            ok,
            total,
        );
    }

    let sec = r.section("duality: functors");
    let spaces = discrete_spaces(p.points())?;
    let mut maps = Vec::new();
    for x in &spaces {
        for y in &spaces {
            maps.extend(SpaceMap::all_continuous(x, y));
        }
    }
    let lts: Vec<AlgebraMorphism> = maps.iter().map(lambda_t).collect::<Result<_>>()?;
    let mut dhlc = 0;
    let mut lo = 0;
    let mut natural = 0;
    let mut ultra = 0;
    for (f, phi) in maps.iter().zip(&lts) {
        dhlc += usize::from(all_pass(&check_dhlc(phi, cfg)?));
        lo += usize::from(check_lo(phi)?.passed());
        let la = lambda_a(phi)?;
        let lhs = la.after(&t_map(f.domain())?)?;
        let rhs = t_map(f.codomain())?.after(f)?;
        natural += usize::from(lhs == rhs);
        ultra += usize::from(lambda_a_ultrafilter(phi)? == la);
    }
    tally(sec, "Λᵗ(f) satisfies DLC1-DLC5".into(), dhlc, maps.len());
    tally(sec, "Λᵗ(f) satisfies LO".into(), lo, maps.len());
    tally(sec, "Λᵃ(Λᵗ(f)) ∘ t_X = t_Y ∘ f".into(), natural, maps.len());
    tally(
        sec,
        "Λᵃ by traces equals Λᵃ by ultrafilters".into(),
        ultra,
        maps.len(),
    );

    let mut ids = 0;
    for x in &spaces {
        ids +=
            usize::from(lambda_t(&SpaceMap::identity(x))? == AlgebraMorphism::identity(&psi_t(x)?));
    }
    tally(sec, "Λᵗ(id) = id".into(), ids, spaces.len());

    let (mut comp, mut comp_total) = (0, 0);
    for (f, lf) in maps.iter().zip(&lts) {
        for (g, lg) in maps.iter().zip(&lts) {
            if f.codomain() != g.domain() {
                continue;
            }
            comp_total += 1;
            let lgf = lambda_t(&g.after(f)?)?;
            comp += usize::from(compose(lf, lg)? == lgf);
        }
    }
    tally(sec, "Λᵗ(g ∘ f) = Λᵗ(f) ⋄ Λᵗ(g)".into(), comp, comp_total);

    let morphisms = table_morphisms(p.atoms().min(2), cfg)?;
    sec.info(
        "DHLC morphisms between overlap algebras",
        morphisms.len().to_string(),
    );
    let (mut assoc, mut assoc_total, mut la_comp) = (0, 0, 0);
    for f1 in &morphisms {
        for f2 in morphisms.iter().filter(|m| m.source == f1.target) {
            let f21 = compose(f2, f1)?;
            la_comp += usize::from(lambda_a(&f21)? == lambda_a(f1)?.after(&lambda_a(f2)?)?);
            for f3 in morphisms.iter().filter(|m| m.source == f2.target) {
                assoc_total += 1;
                let left = compose(&compose(f3, f2)?, f1)?;
                let right = compose(f3, &f21)?;
                assoc += usize::from(left == right);
            }
        }
    }
    let pairs = morphisms
        .iter()
        .map(|f1| morphisms.iter().filter(|m| m.source == f1.target).count())
        .sum();
    tally(sec, "Λᵃ(φ2 ⋄ φ1) = Λᵃ(φ1) ∘ Λᵃ(φ2)".into(), la_comp, pairs);
    tally(sec, "⋄ is associative".into(), assoc, assoc_total);
    Ok(())
}

fn space_catalog(p: &SuiteParams) -> Result<Vec<(String, FiniteSpace)>> {
    let mut out = Vec::new();
    for name in registry::SPACES {
        let x = registry::space(name)?;
        if x.len() <= p.atoms() {
            out.push((name.to_string(), x));
        }
    }
    Ok(out)
}

fn posets(r: &mut Report, p: &SuiteParams) -> Result<()> {
    let sec = r.section("posets: admissible structures");
    for (name, x) in space_catalog(p)? {
        let poset = match enumerate_admissible(&x, p.atoms()) {
            Ok(poset) => poset,
            Err(Error::BoundExceeded { atoms, bound }) => {
                sec.info(name, format!("skipped: {atoms} atoms exceed bound {bound}"));
                continue;
            }
            Err(e) => return Err(e),
        };
        let detail = format!(
            "{} structure(s), {} cover(s)",
            poset.structures.len(),
            poset.covers().len()
        );
        if x.is_discrete() {
            sec.check(
                format!("{name}: exactly one admissible structure"),
                poset.structures.len() == 1,
                detail,
            );
        } else {
            sec.info(name.clone(), detail);
        }
        if poset.structures.is_empty() {
            continue;
        }
        let mut roundtrip = 0;
        let mut proximity = 0;
        let mut broken = Vec::new();
        for s in &poset.structures {
            let lp = bridge_to_local_proximity(s)?;
            let reports = lp.check();
            proximity += usize::from(all_pass(&reports));
            broken.extend(failing(&reports));
            roundtrip += usize::from(restrict_local_proximity(&lp)?.same_as(s)?);
        }
        let total = poset.structures.len();
        if x.is_discrete() {
            tally(
                sec,
                format!("{name}: bridged local proximity axioms"),
                proximity,
                total,
            );
        } else {
            broken.sort();
            broken.dedup();
            sec.info(
                format!("{name}: bridged local proximity"),
                format!(
                    "{proximity}/{total} pass; not Hausdorff, fails {}",
                    broken.join(", ")
                ),
            );
        }
        tally(
            sec,
            format!("{name}: restriction recovers the structure"),
            roundtrip,
            total,
        );
    }
    Ok(())
}

fn clause_summary(report: &crate::extensions::MainReport) -> String {
    report
        .clauses
        .iter()
        .map(|c| {
            format!(
                "{}={}",
                c.clause,
                if c.agrees() { "ok" } else { "DISAGREE" }
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn extensions(r: &mut Report, p: &SuiteParams) -> Result<()> {
    let spaces = discrete_spaces(p.points())?;
    let sec = r.section("extensions: alpha and beta");
    for x in &spaces {
        let s = AdmissibleStructure::standard(x)?;
        let back = alpha(&beta(&s)?)?.admissible;
        sec.check(
            format!("discrete {}: α(β(s)) = s", x.len()),
            back.same_as(&s)?,
            "",
        );
    }

    let sec = r.section("extensions: maps between discrete spaces");
    let (mut req, mut unique, mut eq, mut clauses, mut total) = (0, 0, 0, 0, 0);
    let (mut oc, mut ob, mut pol) = (0, 0, 0);
    let mut disagreements = Vec::new();
    for x1 in &spaces {
        for x2 in &spaces {
            let s1 = AdmissibleStructure::standard(x1)?;
            let s2 = AdmissibleStructure::standard(x2)?;
            let (e1, e2) = (beta(&s1)?, beta(&s2)?);
            let lp1 = bridge_to_local_proximity(&s1)?;
            let lp2 = bridge_to_local_proximity(&s2)?;
            for f in SpaceMap::all(x1, x2) {
                total += 1;
                let req_ok = all_pass(&check_req(&f, &s1, &s2)?);
                let found = continuous_extensions(&f, &e1, &e2)?;
                req += usize::from(req_ok == !found.is_empty());
                eq += usize::from(all_pass(&check_eq(&f, &lp1, &lp2)?) == req_ok);
                if !req_ok {
                    unique += 1;
                    clauses += 1;
                    oc += 1;
                    ob += 1;
                    pol += 1;
                    continue;
                }
                let ext = extend_map(&f, &s1, &s2)?;
                unique += usize::from(found.len() == 1 && found[0] == ext.g);
                let main = check_main_conditions(&f, &s1, &s2)?;
                if main.all_agree() {
                    clauses += 1;
                } else {
                    disagreements.push(format!("{:?}: {}", f.mapping(), clause_summary(&main)));
                }
                let CompactificationReport { conditions, g_open } =
                    check_compactification_conditions(&f, &s1, &s2)?;
                let holds = |id| conditions.iter().any(|c| c.axiom == id && c.passed());
                oc += usize::from(holds(CheckId::OC) == g_open);
                ob += usize::from(holds(CheckId::OB) == g_open);
                pol += usize::from(!holds(CheckId::Poljakov) || g_open);
            }
        }
    }
    tally(
        sec,
        "REQ1 ∧ REQ2 iff a continuous extension exists".into(),
        req,
        total,
    );
    tally(sec, "L(f) is the unique extension".into(), unique, total);
    tally(sec, "EQ1 ∧ EQ2 iff REQ1 ∧ REQ2".into(), eq, total);
    tally(sec, "clauses (a)-(g) agree".into(), clauses, total);
    tally(sec, "OC iff the extension is open".into(), oc, total);
    tally(sec, "OB iff the extension is open".into(), ob, total);
    tally(
        sec,
        "Poljakov implies the extension is open".into(),
        pol,
        total,
    );
    for d in disagreements {
        sec.info("disagreement", d);
    }

    let sec = r.section("extensions: scenarios");
    for name in registry::SCENARIOS {
        let sc = registry::scenario(name)?;
        let (x1, x2) = sc.spaces()?;
        if x1.len() > p.points() || x2.len() > p.points() {
            continue;
        }
        let f = sc.map(&x1, &x2)?;
        let s1 = AdmissibleStructure::standard(&x1)?;
        let s2 = AdmissibleStructure::standard(&x2)?;
        let main = check_main_conditions(&f, &s1, &s2)?;
        sec.check(
            format!("{name}: clauses agree"),
            main.all_agree(),
            clause_summary(&main),
        );
    }
    Ok(())
}

fn dense_embeddings(spaces: &[FiniteSpace]) -> Result<Vec<DenseEmbedding>> {
    let mut out = Vec::new();
    for y in spaces {
        for s in 1..=y.full() {
            if y.is_dense(s) {
                out.push(DenseEmbedding::subspace(y, s)?);
            }
        }
    }
    Ok(out)
}

/// The restriction of `g` to the dense subspaces, when `g` maps one into
/// the other.
fn restrict(g: &SpaceMap, e1: &DenseEmbedding, e2: &DenseEmbedding) -> Result<Option<SpaceMap>> {
    let image = e2.map().image(e2.base().full());
    let inner = e1.map().mapping();
    let mut mapping = Vec::with_capacity(inner.len());
    for &y in inner {
        let gy = g.apply(y);
        if image >> gy & 1 == 0 {
            return Ok(None);
        }
        let idx = e2
            .map()
            .mapping()
            .iter()
            .position(|&z| z == gy)
            .expect("in image");
        mapping.push(idx);
    }
    let f = SpaceMap::new(e1.base().clone(), e2.base().clone(), mapping)?;
    Ok(f.is(MapProperty::Continuous).then_some(f))
}

fn skeletal(r: &mut Report, p: &SuiteParams) -> Result<()> {
    let n = p.points();
    let tops = FiniteSpace::all_topologies(n)?;
    let sec = r.section("skeletal: maps");
    sec.info("topologies", format!("{} on {n} points", tops.len()));
    let (mut agree, mut total) = (0, 0);
    for x in &tops {
        for y in &tops {
            for f in SpaceMap::all_continuous(x, y) {
                total += 1;
                agree += usize::from(skeletal_equivalences(&f)?.agree());
            }
        }
    }
    tally(sec, "three skeletal criteria agree".into(), agree, total);

    let sec = r.section("skeletal: dense embeddings");
    let embs = dense_embeddings(&tops)?;
    let mut iso = 0;
    for e in &embs {
        iso += usize::from(dense_restriction_iso(e).is_ok());
    }
    tally(
        sec,
        "r and e are inverse isomorphisms".into(),
        iso,
        embs.len(),
    );
    let (mut transfer, mut squares) = (0, 0);
    for e1 in &embs {
        for e2 in &embs {
            for g in SpaceMap::all_continuous(e1.target(), e2.target()) {
                if let Some(f) = restrict(&g, e1, e2)? {
                    squares += 1;
                    let (fs, gs) = skeletal_transfer(&f, &g, e1, e2)?;
                    transfer += usize::from(fs == gs);
                }
            }
        }
    }
    tally(
        sec,
        "f skeletal iff its extension g is".into(),
        transfer,
        squares,
    );
    Ok(())
}

fn ka(r: &mut Report, p: &SuiteParams) -> Result<()> {
    let cfg = &p.cfg;
    let base = registry::structure("interval_standard")?;
    let sec = r.section("ka: interval line");
    sec.axioms(&check_lca(&base, cfg)?);
    sec.axioms(&check_la_line(&base, cfg)?);
    let c_rho = alexandroff_extension(&base);
    let c_beta = beta_rho(&base);
    for (name, c) in [("C_ρ", &c_rho), ("C_βρ", &c_beta)] {
        for rep in check_ka_membership(&base, c, cfg)? {
            sec.axiom_labelled(format!("{name} {}", rep.axiom), &rep);
        }
    }
    let a = base
        .carrier
        .interval(IntervalSet::ints(&[(Some(1), None)]))?;
    let b = base
        .carrier
        .interval(IntervalSet::ints(&[(None, Some(-1))]))?;
    sec.check("[1,∞) C_ρ (-∞,-1]", c_rho.holds(&base.carrier, &a, &b)?, "");
    sec.check(
        "[1,∞) not C_βρ (-∞,-1]",
        !c_beta.holds(&base.carrier, &a, &b)?,
        "",
    );
    let two = ContactRelation::TwoPoint;
    let below = relation_contained(&base.carrier, &c_beta, &two, cfg)?;
    let above = relation_contained(&base.carrier, &two, &c_rho, cfg)?;
    sec.axiom_labelled("C_βρ ⊆ TwoPoint", &AxiomReport::new(CheckId::RC1, below));
    sec.axiom_labelled("TwoPoint ⊆ C_ρ", &AxiomReport::new(CheckId::RC1, above));

    let mut rng = cfg.rng_for("dyadic family");
    let (mut ok, mut pairs) = (0, 0);
    while pairs < 100 {
        let (x, y) = (random_element(&mut rng), random_element(&mut rng));
        if x.intersects(&y) {
            continue;
        }
        pairs += 1;
        let rule = !c_beta.holds(
            &base.carrier,
            &base.carrier.interval(x.clone())?,
            &base.carrier.interval(y.clone())?,
        )?;
        let family = match explicit_family(&x, &y) {
            Some(fam) => family_interpolates(&ContactRelation::Standard, &fam, &x, &y, 3)?,
            None => false,
        };
        ok += usize::from(rule == family);
    }
    tally(
        sec,
        "C_βρ rule matches explicit dyadic families".into(),
        ok,
        pairs,
    );
    Ok(())
}
