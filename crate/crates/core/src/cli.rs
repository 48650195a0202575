//! Command-line surface. Argument parsing, command execution and rendering
//! live here so that tests can drive the tool without spawning a process.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, corpus, search_order400_family, CorpusSpec, Fingerprint, SkippedEntry};
use crate::classify::{
    classify, p_subnormal, sylow_tower_supersolvable, verify_corpus, ChainSummary, ClassMembershipReport,
    PSubnormality, SubgroupSummary, SuiteReport, TowerOutcome, TowerSummary,
};
use crate::error::{GroupError, Result};
use crate::group::Caps;
use crate::perm::Permutation;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SUITE_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "psubnormal",
    version,
    about = "Prime-index subnormality and supersolvability classes of permutation groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Maximum number of group elements to enumerate.
    #[arg(long, global = true, default_value_t = crate::group::DEFAULT_ELEMENT_CAP)]
    pub cap_elements: usize,
    /// Maximum number of subgroup lattice nodes.
    #[arg(long, global = true, default_value_t = crate::group::DEFAULT_LATTICE_CAP)]
    pub cap_lattice: usize,
    /// Corpus seed, decimal or 0x-prefixed hex. Defaults to the corpus file's seed.
    #[arg(long, global = true, value_parser = parse_seed)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Record groups over a cap as skipped instead of failing with exit status 3.
    #[arg(long, global = true)]
    pub skip_oversize: bool,
    /// Worker threads for per-group work. Output does not depend on this value.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Full class membership report for one group.
    Classify { descriptor: String },
    /// Prime-index chain from a subgroup to the whole group.
    Chain {
        descriptor: String,
        /// Generators in cycle notation, e.g. "(1 2 3),(1 2)(4 5)".
        #[arg(long)]
        subgroup: String,
    },
    /// Ordered Sylow tower of supersolvable type.
    Tower { descriptor: String },
    /// Classify every group of a corpus.
    Survey {
        /// A corpus spec file, or `default`.
        #[arg(long, default_value = "default")]
        corpus: String,
    },
    /// Run every property check over a corpus.
    Verify {
        #[arg(long, default_value = "default")]
        corpus: String,
    },
    /// Search the order-400 family.
    Search400,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Tsv,
    Text,
}

fn parse_seed(text: &str) -> std::result::Result<u64, String> {
    let t = text.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{text}`: {e}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub cap_elements: usize,
    pub cap_lattice: usize,
    pub seed: u64,
    pub skip_oversize: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub group: String,
    pub subgroup: SubgroupSummary,
    pub p_subnormal: bool,
    pub chain: Option<ChainSummary>,
    /// When no chain exists: the maximal subgroups reachable by prime-index steps.
    pub obstruction: Vec<SubgroupSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReport {
    pub group: String,
    pub order: usize,
    pub tower: Option<TowerSummary>,
    pub failure_prime: Option<u64>,
    pub partial: Vec<SubgroupSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Order400Summary {
    pub name: String,
    pub descriptor: String,
    pub carrier: Vec<String>,
    pub matrices: Vec<Vec<Vec<u64>>>,
    pub merged: usize,
    pub fingerprint: Fingerprint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorEntry {
    pub group: String,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportBundle {
    pub version: String,
    pub command: String,
    pub config: ConfigEcho,
    pub groups: Vec<ClassMembershipReport>,
    pub chains: Vec<ChainReport>,
    pub towers: Vec<TowerReport>,
    pub suites: Vec<SuiteReport>,
    pub order400: Vec<Order400Summary>,
    pub skipped: Vec<SkippedEntry>,
    pub errors: Vec<ErrorEntry>,
}

impl ReportBundle {
    fn new(command: &str, config: ConfigEcho) -> Self {
        ReportBundle {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            config,
            groups: Vec::new(),
            chains: Vec::new(),
            towers: Vec::new(),
            suites: Vec::new(),
            order400: Vec::new(),
            skipped: Vec::new(),
            errors: Vec::new(),
        }
    }

    pub fn suites_passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::all_passed)
    }
}

/// Result of one invocation: exit status plus the bytes for each stream.
#[derive(Debug, Clone)]
pub struct Execution {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn execute<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Execution { status, stdout, stderr };
        }
    };
    let start = std::time::Instant::now();
    match run(&cli) {
        Ok((status, bundle)) => Execution {
            status,
            stdout: render(&bundle, cli.format),
            stderr: format!(
                "{} finished in {:.3} s\n",
                bundle.command,
                start.elapsed().as_secs_f64()
            ),
        },
        Err(e) => Execution {
            status: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Runs a parsed command. Cap errors become report entries with exit status 3
/// (or skips under `--skip-oversize`); any other error is a usage error.
pub fn run(cli: &Cli) -> Result<(i32, ReportBundle)> {
    let caps = Caps {
        elements: cli.cap_elements,
        lattice: cli.cap_lattice,
    };
    let spec = match &cli.command {
        Command::Survey { corpus } | Command::Verify { corpus } => Some(load_spec(corpus, cli.seed)?),
        _ => None,
    };
    let config = ConfigEcho {
        cap_elements: caps.elements,
        cap_lattice: caps.lattice,
        seed: spec
            .as_ref()
            .map_or(cli.seed.unwrap_or(catalog::DEFAULT_SEED), |s| s.seed),
        skip_oversize: cli.skip_oversize,
    };
    let name = match &cli.command {
        Command::Classify { .. } => "classify",
        Command::Chain { .. } => "chain",
        Command::Tower { .. } => "tower",
        Command::Survey { .. } => "survey",
        Command::Verify { .. } => "verify",
        Command::Search400 => "search400",
    };
    let mut bundle = ReportBundle::new(name, config);
    let outcome = match &cli.command {
        Command::Classify { descriptor } => catalog::build(descriptor, &caps)
            .and_then(|g| classify(&g, &caps))
            .map(|r| bundle.groups.push(r)),
        Command::Chain { descriptor, subgroup } => {
            chain_report(descriptor, subgroup, &caps).map(|r| bundle.chains.push(r))
        }
        Command::Tower { descriptor } => tower_report(descriptor, &caps).map(|r| bundle.towers.push(r)),
        Command::Survey { .. } => survey(spec.as_ref().expect("spec loaded"), &caps, cli.jobs, &mut bundle),
        Command::Verify { .. } => {
            let c = corpus(spec.as_ref().expect("spec loaded"), &caps)?;
            verify_corpus(&c, &caps, config.seed, cli.jobs).map(|(suite, reports)| {
                bundle.groups = reports;
                bundle.skipped = suite.skipped_groups.clone();
                bundle.suites.push(suite);
            })
        }
        Command::Search400 => search400(&mut bundle),
    };
    match outcome {
        Ok(()) => {}
        Err(e) if e.is_cap() => {
            let group = match &cli.command {
                Command::Classify { descriptor }
                | Command::Chain { descriptor, .. }
                | Command::Tower { descriptor } => descriptor.clone(),
                _ => name.to_string(),
            };
            if cli.skip_oversize {
                bundle.skipped.push(SkippedEntry {
                    descriptor: group,
                    reason: e.to_string(),
                });
            } else {
                bundle.errors.push(ErrorEntry {
                    group,
                    error: e.to_string(),
                });
                return Ok((EXIT_CAP, bundle));
            }
        }
        Err(e) => return Err(e),
    }
    let status = if bundle.suites_passed() {
        EXIT_OK
    } else {
        EXIT_SUITE_FAILURE
    };
    Ok((status, bundle))
}

fn load_spec(source: &str, seed: Option<u64>) -> Result<CorpusSpec> {
    let spec = if source == "default" {
        CorpusSpec::default()
    } else {
        let path = PathBuf::from(source);
        let text = std::fs::read_to_string(&path).map_err(|e| GroupError::Io(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| GroupError::Parse(format!("corpus spec {}: {e}", path.display())))?
    };
    Ok(match seed {
        Some(s) => spec.with_seed(s),
        None => spec,
    })
}

fn chain_report(descriptor: &str, subgroup: &str, caps: &Caps) -> Result<ChainReport> {
    let g = catalog::build(descriptor, caps)?;
    let perms = Permutation::parse_list(subgroup, g.degree())?;
    let h = g.subgroup_from_perms(&perms)?;
    let outcome = p_subnormal(&h, caps)?;
    let (chain, obstruction) = match &outcome {
        PSubnormality::Chain(w) => (Some(w.summary()), Vec::new()),
        PSubnormality::NotPSubnormal { reachable } => {
            let tops = reachable
                .iter()
                .filter(|k| !reachable.iter().any(|m| m != *k && k.is_subgroup_of(m)))
                .map(SubgroupSummary::of)
                .collect();
            (None, tops)
        }
    };
    Ok(ChainReport {
        group: g.label(),
        subgroup: SubgroupSummary::of(&h),
        p_subnormal: outcome.is_p_subnormal(),
        chain,
        obstruction,
    })
}

fn tower_report(descriptor: &str, caps: &Caps) -> Result<TowerReport> {
    let g = catalog::build(descriptor, caps)?;
    let order = g.order()?;
    Ok(match sylow_tower_supersolvable(&g)? {
        TowerOutcome::Tower(w) => TowerReport {
            group: g.label(),
            order,
            tower: Some(w.summary()),
            failure_prime: None,
            partial: Vec::new(),
        },
        TowerOutcome::NoTower { prime, partial } => TowerReport {
            group: g.label(),
            order,
            tower: None,
            failure_prime: Some(prime),
            partial: partial.iter().map(SubgroupSummary::of).collect(),
        },
    })
}

fn survey(spec: &CorpusSpec, caps: &Caps, jobs: usize, bundle: &mut ReportBundle) -> Result<()> {
    let c = corpus(spec, caps)?;
    bundle.skipped = c.skipped.clone();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| GroupError::InvalidParameter(format!("thread pool: {e}")))?;
    let results: Vec<(String, Result<ClassMembershipReport>)> = pool.install(|| {
        c.entries
            .par_iter()
            .map(|e| (e.descriptor.clone(), classify(&e.group, caps)))
            .collect()
    });
    for (descriptor, r) in results {
        match r {
            Ok(report) => bundle.groups.push(report),
            Err(e) if e.is_cap() => bundle.skipped.push(SkippedEntry {
                descriptor,
                reason: e.to_string(),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

fn search400(bundle: &mut ReportBundle) -> Result<()> {
    for class in search_order400_family()? {
        bundle.groups.push(class.report.clone());
        bundle.order400.push(Order400Summary {
            name: class.group.label(),
            descriptor: class.descriptor.clone(),
            carrier: class.carrier.iter().map(ToString::to_string).collect(),
            matrices: class.matrices.iter().map(|m| m.rows()).collect(),
            merged: class.merged,
            fingerprint: class.fingerprint.clone(),
        });
    }
    Ok(())
}

pub const TSV_HEADER: &str = "group\torder\tU\twU\tX\tD\tsolvable\tnilpotent";

pub fn render(bundle: &ReportBundle, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(bundle).expect("bundle serializes");
            s.push('\n');
            s
        }
        Format::Tsv => render_tsv(bundle),
        Format::Text => render_text(bundle),
    }
}

fn render_tsv(bundle: &ReportBundle) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in &bundle.groups {
        let f = &r.flags;
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.group, r.order, f.supersolvable, f.w_supersolvable, f.class_x, f.tower, f.solvable, f.nilpotent
        );
    }
    out
}

fn subgroup_text(s: &SubgroupSummary) -> String {
    if s.generators.is_empty() {
        format!("<> (order {})", s.order)
    } else {
        format!("<{}> (order {})", s.generators.join(", "), s.order)
    }
}

fn chain_text(out: &mut String, indent: &str, c: &ChainSummary) {
    for (i, s) in c.chain.iter().enumerate() {
        if i == 0 {
            let _ = writeln!(out, "{indent}{}", subgroup_text(s));
        } else {
            let _ = writeln!(out, "{indent}  ⊂[{}] {}", c.indices[i - 1], subgroup_text(s));
        }
    }
}

fn tower_text(out: &mut String, indent: &str, t: &TowerSummary) {
    let _ = writeln!(
        out,
        "{indent}primes {:?}, factor orders {:?}",
        t.primes, t.factor_orders
    );
    for s in &t.series {
        let _ = writeln!(out, "{indent}  {}", subgroup_text(s));
    }
}

fn render_text(bundle: &ReportBundle) -> String {
    let mut out = String::new();
    let c = &bundle.config;
    let _ = writeln!(
        out,
        "psubnormal {} {} (cap-elements {}, cap-lattice {}, seed {:#x})",
        bundle.version, bundle.command, c.cap_elements, c.cap_lattice, c.seed
    );
    for r in &bundle.groups {
        let f = &r.flags;
        let _ = writeln!(out, "\n{} (order {})", r.group, r.order);
        let _ = writeln!(
            out,
            "  U {}  wU {}  X {}  D {}  solvable {}  nilpotent {}",
            f.supersolvable, f.w_supersolvable, f.class_x, f.tower, f.solvable, f.nilpotent
        );
        let _ = writeln!(
            out,
            "  lattice: {} subgroups, {} classes, longest chain {}",
            r.lattice.nodes, r.lattice.classes, r.lattice.max_chain
        );
        let _ = writeln!(out, "  maximal subgroup indices {:?}", r.maximal_indices);
        match &r.tower {
            Some(t) => {
                let _ = writeln!(out, "  Sylow tower:");
                tower_text(&mut out, "    ", t);
            }
            None => {
                let p = r.counterexamples.tower_prime.map_or("?".to_string(), |p| p.to_string());
                let _ = writeln!(out, "  no Sylow tower (fails at prime {p})");
            }
        }
        for s in &r.sylow_chains {
            match &s.chain {
                Some(ch) => {
                    let _ = writeln!(out, "  Sylow {}-subgroup chain:", s.prime);
                    chain_text(&mut out, "    ", ch);
                }
                None => {
                    let _ = writeln!(
                        out,
                        "  Sylow {}-subgroup {} has no chain",
                        s.prime,
                        subgroup_text(&s.sylow)
                    );
                }
            }
        }
        let cx = &r.counterexamples;
        for (label, s) in [
            ("U", &cx.supersolvable),
            ("wU", &cx.w_supersolvable),
            ("X", &cx.class_x),
        ] {
            if let Some(s) = s {
                let _ = writeln!(out, "  not {label}: witness {}", subgroup_text(s));
            }
        }
    }
    for ch in &bundle.chains {
        let _ = writeln!(out, "\n{}: subgroup {}", ch.group, subgroup_text(&ch.subgroup));
        match &ch.chain {
            Some(c) => {
                let _ = writeln!(out, "  P-subnormal, indices {:?}", c.indices);
                chain_text(&mut out, "    ", c);
            }
            None => {
                let _ = writeln!(out, "  not P-subnormal; maximal subgroups reachable by prime indices:");
                for s in &ch.obstruction {
                    let _ = writeln!(out, "    {}", subgroup_text(s));
                }
            }
        }
    }
    for t in &bundle.towers {
        let _ = writeln!(out, "\n{} (order {})", t.group, t.order);
        match (&t.tower, t.failure_prime) {
            (Some(tw), _) => tower_text(&mut out, "  ", tw),
            (None, p) => {
                let p = p.map_or("?".to_string(), |p| p.to_string());
                let _ = writeln!(out, "  no Sylow tower: fails at prime {p}");
                for s in &t.partial {
                    let _ = writeln!(out, "    built {}", subgroup_text(s));
                }
            }
        }
    }
    for o in &bundle.order400 {
        let _ = writeln!(out, "\n{}: {} candidates, matrices {:?}", o.name, o.merged, o.matrices);
        let _ = writeln!(out, "  carrier {}", o.carrier.join(", "));
    }
    for s in &bundle.suites {
        let _ = writeln!(out, "\nsuite over {} groups (seed {:#x})", s.groups_checked, s.seed);
        for t in &s.checks {
            let status = if t.failed == 0 { "pass" } else { "FAIL" };
            let _ = writeln!(
                out,
                "  {status} {:48} passed {:6} failed {:4} skipped {:3}",
                t.name, t.passed, t.failed, t.skipped
            );
            if let Some(cx) = &t.first_counterexample {
                let _ = writeln!(out, "       first counterexample in {}: {}", cx.group, cx.detail);
            }
        }
    }
    for s in &bundle.skipped {
        let _ = writeln!(out, "skipped {}: {}", s.descriptor, s.reason);
    }
    for e in &bundle.errors {
        let _ = writeln!(out, "error {}: {}", e.group, e.error);
    }
    out
}
