//! The `cdual` command line.
//!
//! Inputs given to `--structure`, `--space`, `--map` and `--scenario` are
//! read from a file when the path exists, parsed as JSON when they start
//! with `{`, and looked up in the registry otherwise.

use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

use crate::contact::{
    check_ca, check_cluster, check_lca, check_nca, clusters, enumerate_clusters_exhaustive,
    ContactStructure,
};
use crate::dot;
use crate::duality::{is_homeomorphism, lambda_g_iso_check, lambda_points, psi_a, t_map};
use crate::error::{Error, Result};
use crate::extensions::{
    check_admissible, check_compactification_conditions, check_la, check_main_conditions,
    check_req, enumerate_admissible, AdmissibleStructure, CompactificationReport,
};
use crate::format::{self, MapSpec, ScenarioSpec, SpaceRef, StructureRef, StructureSpec};
use crate::output::Report;
use crate::registry;
use crate::report::{all_pass, CheckId};
use crate::sampling::{SampleConfig, DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::spaces::{FiniteSpace, SpaceMap};
use crate::suites::{self, Suite, SuiteParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Debug, clap::Args)]
pub struct Common {
    /// Largest atom count for exhaustive enumeration
    #[arg(long, default_value_t = 4)]
    pub max_atoms: usize,
    /// Samples per check on the interval line
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

impl Common {
    fn cfg(&self) -> SampleConfig {
        SampleConfig {
            samples: self.samples,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cdual",
    version,
    about = "Check contact algebras, their dual spaces and extensions of maps"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the contact axioms of a structure, or the admissibility of the
    /// standard structure of a space
    Check {
        #[arg(long, conflicts_with = "space", required_unless_present = "space")]
        structure: Option<String>,
        #[arg(long)]
        space: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Dual space of a finite structure, or the comparison map of a space
    Dual {
        #[arg(long, conflicts_with = "space", required_unless_present = "space")]
        structure: Option<String>,
        #[arg(long)]
        space: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Clusters of a finite structure
    Clusters {
        #[arg(long)]
        structure: String,
        #[command(flatten)]
        common: Common,
    },
    /// Extension conditions for a map between discrete spaces
    ExtendMap {
        #[arg(long, conflicts_with = "map", required_unless_present = "map")]
        scenario: Option<String>,
        #[arg(long)]
        map: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Admissible structures of a space, or topologies on a point count
    Enumerate {
        #[arg(
            long,
            conflicts_with = "topologies",
            required_unless_present = "topologies"
        )]
        space: Option<String>,
        #[arg(long, requires = "space")]
        admissible: bool,
        #[arg(long)]
        topologies: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// DOT for an atom graph, a specialization preorder or an admissible poset
    Render {
        #[arg(long, conflicts_with = "space", required_unless_present = "space")]
        structure: Option<String>,
        #[arg(long)]
        space: Option<String>,
        #[arg(long, requires = "space")]
        admissible: bool,
        #[command(flatten)]
        common: Common,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read_input(arg: &str) -> Result<Option<String>> {
    if Path::new(arg).is_file() {
        return Ok(Some(std::fs::read_to_string(arg)?));
    }
    Ok(arg.trim_start().starts_with('{').then(|| arg.to_string()))
}

pub fn load_structure(arg: &str) -> Result<StructureRef> {
    match read_input(arg)? {
        Some(text) => format::parse_structure(&text),
        None => Ok(StructureRef::Name(arg.to_string())),
    }
}

pub fn load_space(arg: &str) -> Result<FiniteSpace> {
    match read_input(arg)? {
        Some(text) => format::parse_space(&text)?.resolve(),
        None => SpaceRef::Name(arg.to_string()).resolve(),
    }
}

pub fn load_map(arg: &str) -> Result<SpaceMap> {
    match read_input(arg)? {
        Some(text) => format::parse_map(&text)?.build(),
        None => Err(Error::UnknownName(format!("map `{arg}`"))),
    }
}

pub fn load_scenario(arg: &str) -> Result<ScenarioSpec> {
    match read_input(arg)? {
        Some(text) => format::parse_scenario(&text),
        None => registry::scenario(arg),
    }
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv =
        std::iter::once(std::ffi::OsString::from("cdual")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok((text, passed)) => Outcome {
            code: if passed { 0 } else { 1 },
            stdout: text,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn render(report: &Report, fmt: OutputFormat) -> Result<(String, bool)> {
    let text = match fmt {
        OutputFormat::Text => report.to_text(),
        OutputFormat::Json => report.to_json(),
        OutputFormat::Dot => {
            return Err(Error::Format(
                "dot output is available for render, dual and enumerate".into(),
            ))
        }
    };
    Ok((text, report.passed()))
}

fn execute(cmd: &Command) -> Result<(String, bool)> {
    match cmd {
        Command::Check {
            structure,
            space,
            common,
        } => {
            let report = match (structure, space) {
                (Some(s), _) => check_structure(s, common)?,
                (None, Some(x)) => check_space(x)?,
                (None, None) => unreachable!("clap requires one"),
            };
            render(&report, common.format)
        }
        Command::Dual {
            structure,
            space,
            common,
        } => match (structure, space) {
            (Some(s), _) => {
                let st = load_structure(s)?.resolve()?;
                if common.format == OutputFormat::Dot {
                    return Ok((dot::space_preorder(&psi_a(&st)?.space), true));
                }
                render(&dual_report(s, &st)?, common.format)
            }
            (None, Some(x)) => {
                let space = load_space(x)?;
                let t = t_map(&space)?;
                if common.format == OutputFormat::Dot {
                    return Ok((dot::space_preorder(t.codomain()), true));
                }
                let mut r = Report::new("dual");
                r.param("space", x);
                let sec = r.section("comparison map");
                for (p, q) in t.name_pairs() {
                    sec.info(format!("t({p})"), q);
                }
                sec.check("t_X is a homeomorphism", is_homeomorphism(&t), "");
                render(&r, common.format)
            }
            (None, None) => unreachable!("clap requires one"),
        },
        Command::Clusters { structure, common } => {
            let st = load_structure(structure)?.resolve()?;
            render(&clusters_report(structure, &st, common)?, common.format)
        }
        Command::ExtendMap {
            scenario,
            map,
            common,
        } => {
            let spec = match (scenario, map) {
                (Some(s), _) => load_scenario(s)?,
                (None, Some(m)) => {
                    let f = load_map(m)?;
                    let spec = MapSpec::of(&f);
                    ScenarioSpec {
                        x1: spec.domain,
                        x2: spec.codomain,
                        map: spec.pairs,
                        structures: None,
                        conditions: Vec::new(),
                    }
                }
                (None, None) => unreachable!("clap requires one"),
            };
            let label = scenario.as_deref().or(map.as_deref()).unwrap_or_default();
            render(&extend_report(label, &spec, common)?, common.format)
        }
        Command::Enumerate {
            space,
            admissible,
            topologies,
            common,
        } => {
            if let Some(n) = topologies {
                let tops = FiniteSpace::all_topologies(*n)?;
                let mut r = Report::new("enumerate topologies");
                r.param("points", n);
                let sec = r.section("topologies");
                for (i, x) in tops.iter().enumerate() {
                    let opens: Vec<String> = x.opens().iter().map(|&o| x.format_set(o)).collect();
                    sec.info(format!("#{i}"), opens.join(" "));
                }
                sec.info(
                    "count",
                    format!(
                        "{} topolog{}",
                        tops.len(),
                        if tops.len() == 1 { "y" } else { "ies" }
                    ),
                );
                return render(&r, common.format);
            }
            let arg = space.as_deref().expect("clap requires one");
            let x = load_space(arg)?;
            if !admissible {
                return Err(Error::Precondition(
                    "enumerate --space needs --admissible".into(),
                ));
            }
            let poset = enumerate_admissible(&x, common.max_atoms)?;
            if common.format == OutputFormat::Dot {
                return Ok((dot::admissible_poset(&poset), true));
            }
            let mut r = Report::new("enumerate admissible");
            r.param("space", arg).param("max-atoms", common.max_atoms);
            let sec = r.section("structures");
            for (i, s) in poset.structures.iter().enumerate() {
                let spec = format::to_json(&StructureSpec::of_admissible(s)?);
                sec.info(format!("#{i}"), spec);
            }
            for (i, j) in poset.covers() {
                sec.info("cover", format!("#{i} ⪯ #{j}"));
            }
            let n = poset.structures.len();
            sec.info(
                "count",
                format!("{n} structure{}", if n == 1 { "" } else { "s" }),
            );
            render(&r, common.format)
        }
        Command::Verify { suite, common } => {
            let suite: Suite = suite.parse()?;
            let params = SuiteParams {
                max_atoms: common.max_atoms,
                cfg: common.cfg(),
            };
            render(&suites::run(suite, &params)?, common.format)
        }
        Command::Render {
            structure,
            space,
            admissible,
            common,
        } => {
            if common.format == OutputFormat::Json {
                return Err(Error::Format("render produces dot or text only".into()));
            }
            let text = match (structure, space) {
                (Some(s), _) => {
                    let st = load_structure(s)?.resolve()?;
                    match &st.rho {
                        crate::contact::ContactRelation::AtomGraph(g) => dot::atom_graph(g),
                        other => {
                            return Err(Error::Format(format!(
                                "cannot render a {} relation; only atom graphs",
                                other.kind()
                            )))
                        }
                    }
                }
                (None, Some(x)) => {
                    let space = load_space(x)?;
                    if *admissible {
                        dot::admissible_poset(&enumerate_admissible(&space, common.max_atoms)?)
                    } else {
                        dot::space_preorder(&space)
                    }
                }
                (None, None) => unreachable!("clap requires one"),
            };
            Ok((text, true))
        }
    }
}

fn check_structure(arg: &str, common: &Common) -> Result<Report> {
    let sref = load_structure(arg)?;
    let st = sref.resolve()?;
    let cfg = common.cfg();
    let mut r = Report::new("check");
    r.param("structure", arg)
        .param("carrier", st.carrier.label())
        .param("relation", st.rho.kind());
    if !st.carrier.is_finite() {
        r.param("samples", cfg.samples).param("seed", cfg.seed);
    }
    r.section("contact algebra").axioms(&check_ca(&st, &cfg)?);
    if st.one_in_ideal() {
        let nca = check_nca(&st, &cfg)?;
        r.section("normal contact algebra").axioms(&nca[4..]);
    } else {
        let lca = check_lca(&st, &cfg)?;
        r.section("local contact algebra").axioms(&lca[4..]);
    }
    if let StructureRef::Spec(spec @ StructureSpec::RegularClosed { .. }) = &sref {
        let adm = spec.build_admissible()?;
        r.section("admissible")
            .axioms(&check_admissible(&adm)?)
            .axioms(&check_la(&adm)?);
    }
    Ok(r)
}

fn check_space(arg: &str) -> Result<Report> {
    let x = load_space(arg)?;
    let adm = AdmissibleStructure::standard(&x)?;
    let cfg = SampleConfig::default();
    let mut r = Report::new("check");
    r.param("space", arg).param("points", x.len());
    r.section("standard contact")
        .axioms(&check_nca(adm.structure(), &cfg)?);
    r.section("admissible")
        .axioms(&check_admissible(&adm)?)
        .axioms(&check_la(&adm)?);
    Ok(r)
}

fn mask_text(st: &ContactStructure, m: u64) -> String {
    st.carrier
        .element_from_mask(m)
        .map(|e| e.to_string())
        .unwrap_or_else(|_| format!("{m:#b}"))
}

fn dual_report(arg: &str, st: &ContactStructure) -> Result<Report> {
    let dual = psi_a(st)?;
    let mut r = Report::new("dual");
    r.param("structure", arg).param("points", dual.space.len());
    let sec = r.section("points");
    for c in &dual.clusters {
        sec.info(
            c.to_string(),
            if c.is_bounded() {
                "bounded"
            } else {
                "unbounded"
            },
        );
    }
    let sec = r.section("opens");
    for &o in dual.space.opens() {
        sec.info("open", dual.space.format_set(o));
    }
    let sec = r.section("λ");
    let n = st.carrier.atom_count().expect("finite dual");
    for a in 0..n {
        sec.info(
            format!("λ({})", mask_text(st, 1 << a)),
            lambda_points(&dual, 1 << a).join(","),
        );
    }
    let sec = r.section("λᵍ isomorphism");
    for c in lambda_g_iso_check(st)? {
        let ok = c.passed();
        let detail = match &c.verdict {
            crate::report::Verdict::Fail { counterexample } => counterexample
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", "),
            _ => String::new(),
        };
        sec.check(c.name, ok, detail);
    }
    Ok(r)
}

fn clusters_report(arg: &str, st: &ContactStructure, common: &Common) -> Result<Report> {
    let n = st.carrier.finite_atoms("cluster enumeration")?;
    if n > common.max_atoms {
        return Err(Error::BoundExceeded {
            atoms: n,
            bound: common.max_atoms,
        });
    }
    let found = clusters(st)?;
    let mut r = Report::new("clusters");
    r.param("structure", arg).param("clusters", found.len());
    for c in &found {
        let members = c.members().expect("finite cluster");
        let sec = r.section(c.to_string());
        let list: Vec<String> = members.iter().map(|m| mask_text(st, m)).collect();
        sec.info("members", list.join(" "));
        sec.info("bounded", c.is_bounded().to_string());
        sec.axioms(&check_cluster(st, members)?);
    }
    if n <= 4 {
        let all = enumerate_clusters_exhaustive(st)?;
        let sec = r.section("exhaustive search");
        let matched = all
            .iter()
            .filter(|m| found.iter().any(|c| c.members() == Some(m)))
            .count();
        sec.check(
            "every cluster is some σ_u",
            matched == all.len() && all.len() == found.len(),
            format!("{} found by search", all.len()),
        );
    }
    Ok(r)
}

fn verdict_text(r: &crate::report::AxiomReport) -> String {
    match &r.verdict {
        crate::report::Verdict::Fail { counterexample } => {
            let at: Vec<String> = counterexample
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            format!("fails at {}", at.join(", "))
        }
        _ => "holds".to_string(),
    }
}

fn extend_report(label: &str, spec: &ScenarioSpec, common: &Common) -> Result<Report> {
    let (x1, x2) = spec.spaces()?;
    let f = spec.map(&x1, &x2)?;
    let wanted: Vec<String> = spec.conditions.clone();
    let keep = |id: CheckId| wanted.is_empty() || wanted.iter().any(|w| *w == id.to_string());
    let pairs: Vec<(AdmissibleStructure, AdmissibleStructure)> = match &spec.structures {
        Some((a, b)) => vec![(a.build(&x1)?, b.build(&x2)?)],
        None => {
            let p1 = enumerate_admissible(&x1, common.max_atoms)?.structures;
            let p2 = enumerate_admissible(&x2, common.max_atoms)?.structures;
            p1.iter()
                .flat_map(|a| p2.iter().map(move |b| (a.clone(), b.clone())))
                .collect()
        }
    };
    let mut r = Report::new("extend-map");
    r.param("scenario", label)
        .param("map", format::to_json(&f.name_pairs()))
        .param("structure pairs", pairs.len());
    for (k, (s1, s2)) in pairs.iter().enumerate() {
        let sec = r.section(format!("pair #{k}"));
        let req = check_req(&f, s1, s2)?;
        for rep in req.iter().filter(|x| keep(x.axiom)) {
            sec.axiom(rep);
        }
        if !all_pass(&req) {
            sec.info("L(f)", "no continuous extension");
            continue;
        }
        let main = check_main_conditions(&f, s1, s2)?;
        sec.info("L(f)", format::to_json(&main.extended.g.name_pairs()));
        for c in main.conditions.iter().filter(|c| keep(c.axiom)) {
            sec.info(c.axiom.to_string(), verdict_text(c));
        }
        for (name, v) in &main.properties {
            sec.info(format!("g {name}"), v.to_string());
        }
        for c in &main.clauses {
            let detail = format!("condition={} property={}", c.condition, c.property);
            if main.hypotheses_hold {
                sec.check(
                    format!("({}) {}", c.clause, c.statement),
                    c.agrees(),
                    detail,
                );
            } else {
                sec.info(
                    format!("({}) {} [exploratory]", c.clause, c.statement),
                    detail,
                );
            }
        }
        if s1.structure().one_in_ideal() && s2.structure().one_in_ideal() {
            let CompactificationReport { conditions, g_open } =
                check_compactification_conditions(&f, s1, s2)?;
            for c in conditions.iter().filter(|c| keep(c.axiom)) {
                let mut text = verdict_text(c);
                if let Some(remark) = CompactificationReport::remark(c.axiom) {
                    text.push_str(&format!(" ({remark})"));
                }
                sec.info(c.axiom.to_string(), text);
            }
            sec.info("compactification extension open", g_open.to_string());
        }
    }
    Ok(r)
}
