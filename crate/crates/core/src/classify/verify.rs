//! Property checks over a corpus. Each group is checked independently with its
//! own seeded sampler; results are merged in corpus order, so the outcome does
//! not depend on the number of worker threads.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::structure::{is_schmidt, minimal_non_class, not_in_x_iff_shape, ClassName};
use super::theorem::verify_theorem;
use super::{p_subnormal_below, Analysis, ClassFlags, ClassMembershipReport, PChainWitness, SubgroupSummary};
use crate::catalog::{Corpus, CorpusEntry, SkippedEntry};
use crate::error::{GroupError, Result};
use crate::group::Caps;
use crate::lattice::Lattice;
use crate::series::quotient_is_supersolvable;
use crate::subgroup::{is_power_of, CosetAction, Subgroup};

macro_rules! checks {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq)]
        pub enum Check { $($variant,)* }

        impl Check {
            pub const ALL: &'static [Check] = &[$(Check::$variant,)*];

            pub fn name(self) -> &'static str {
                match self { $(Check::$variant => $name,)* }
            }
        }
    };
}

checks! {
    PrimeIndexCoreQuotient => "prime_index_core_quotient_supersolvable",
    IntersectionWithNormal => "intersection_with_normal",
    ImageInQuotient => "image_in_quotient",
    LiftFromQuotient => "lift_from_quotient",
    Transitivity => "transitivity",
    Conjugation => "conjugation",
    SolvableIntersectionWithSubgroup => "solvable_intersection_with_subgroup",
    SolvableIntersectionOfTwo => "solvable_intersection_of_two",
    SolvableSubnormal => "solvable_subnormal_is_p_subnormal",
    PSubgroupSubnormalIffInOp => "p_subgroup_subnormal_iff_in_o_p",
    PPowerNormalizerIndex => "p_power_normalizer_index_subnormal",
    LargestPrimePSubgroup => "largest_prime_p_subgroup_subnormal",
    WuHasTower => "wu_has_tower",
    SchmidtStructure => "schmidt_structure",
    MinimalNonUStructure => "minimal_non_u_structure",
    WuFrattiniDerivedLength => "wu_frattini_quotient_derived_length",
    XNormalAndQuotientCyclic => "x_normal_and_quotient_primary_cyclic",
    ClassContainments => "class_containments",
    ClassContainmentsStrict => "class_containments_strict",
    MinimalNonUXCriterion => "minimal_non_u_x_criterion",
    NormalSylowFrattini => "normal_sylow_frattini",
    BiprimaryPSubnormalSylows => "biprimary_p_subnormal_sylows_supersolvable",
    WuCharacterization => "wu_characterization",
    XCharacterization => "x_characterization",
    MinimalNonXShape => "minimal_non_x_shape",
    XSubgroupClosed => "x_subgroup_closed",
    XQuotientClosed => "x_quotient_closed",
    XSubdirectClosed => "x_subdirect_closed",
    XFrattiniSaturated => "x_frattini_saturated",
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub group: String,
    pub detail: String,
    pub subgroups: Vec<SubgroupSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    /// Groups for which the check could not run because a cap was exceeded.
    pub skipped: u64,
    pub first_counterexample: Option<Counterexample>,
}

impl CheckTally {
    fn new(check: Check) -> Self {
        CheckTally {
            name: check.name().to_string(),
            passed: 0,
            failed: 0,
            skipped: 0,
            first_counterexample: None,
        }
    }

    fn absorb(&mut self, other: &CheckTally) {
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        if self.first_counterexample.is_none() {
            self.first_counterexample = other.first_counterexample.clone();
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupVerification {
    pub descriptor: String,
    pub order: Option<usize>,
    /// Absent when the group was skipped.
    pub flags: Option<ClassFlags>,
    pub failed_checks: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub groups_checked: usize,
    pub checks: Vec<CheckTally>,
    pub groups: Vec<GroupVerification>,
    /// Corpus entries that were never built plus groups skipped during checking.
    pub skipped_groups: Vec<SkippedEntry>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn check(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Recorder {
    group: String,
    tallies: Vec<CheckTally>,
}

impl Recorder {
    fn new(group: String) -> Self {
        Recorder {
            group,
            tallies: Check::ALL.iter().map(|&c| CheckTally::new(c)).collect(),
        }
    }

    fn tally(&mut self, check: Check) -> &mut CheckTally {
        let i = Check::ALL.iter().position(|&c| c == check).expect("listed check");
        &mut self.tallies[i]
    }

    fn record(&mut self, check: Check, ok: bool, detail: &str, subgroups: &[&Subgroup]) {
        let group = self.group.clone();
        let t = self.tally(check);
        if ok {
            t.passed += 1;
        } else {
            t.failed += 1;
            if t.first_counterexample.is_none() {
                t.first_counterexample = Some(Counterexample {
                    group,
                    detail: detail.to_string(),
                    subgroups: subgroups.iter().map(|h| SubgroupSummary::of(h)).collect(),
                });
            }
        }
    }
}

/// Up to `k` items chosen without replacement, returned in their original order.
fn sample(rng: &mut ChaCha8Rng, items: &[usize], k: usize) -> Vec<usize> {
    if items.len() <= k {
        return items.to_vec();
    }
    let mut picked: Vec<usize> = items.choose_multiple(rng, k).copied().collect();
    picked.sort_unstable();
    picked
}

fn find(l: &Lattice, h: &Subgroup) -> Result<usize> {
    l.find(h)
        .ok_or_else(|| GroupError::NotASubgroup("subgroup missing from the lattice".into()))
}

struct QuotientData {
    node: usize,
    action: CosetAction,
    analysis: Analysis,
    reach: Vec<bool>,
    in_x: bool,
}

/// Runs every check on every corpus group, using `jobs` worker threads.
pub fn verify_lemmas(corpus: &Corpus, caps: &Caps, seed: u64, jobs: usize) -> Result<SuiteReport> {
    verify_corpus(corpus, caps, seed, jobs).map(|(suite, _)| suite)
}

/// As [`verify_lemmas`], also returning the membership report of every group
/// that was checked, in corpus order.
pub fn verify_corpus(
    corpus: &Corpus,
    caps: &Caps,
    seed: u64,
    jobs: usize,
) -> Result<(SuiteReport, Vec<ClassMembershipReport>)> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| GroupError::InvalidParameter(format!("thread pool: {e}")))?;
    let per_group: Vec<Result<GroupOutcome>> = pool.install(|| {
        corpus
            .entries
            .par_iter()
            .enumerate()
            .map(|(i, e)| verify_group(i, e, caps, seed))
            .collect()
    });

    let mut checks: Vec<CheckTally> = Check::ALL.iter().map(|&c| CheckTally::new(c)).collect();
    let mut groups = Vec::new();
    let mut reports = Vec::new();
    let mut skipped_groups = corpus.skipped.clone();
    for r in per_group {
        let (rec, gv, outcome) = r?;
        for (total, t) in checks.iter_mut().zip(&rec.tallies) {
            total.absorb(t);
        }
        groups.push(gv);
        match outcome {
            Ok(report) => reports.push(report),
            Err(skipped) => skipped_groups.push(skipped),
        }
    }

    let flags: Vec<ClassFlags> = reports.iter().map(|r| r.flags).collect();
    let strict = checks
        .iter_mut()
        .find(|t| t.name == Check::ClassContainmentsStrict.name())
        .expect("listed check");
    let missing: Vec<&str> = [
        ("wU \\ U", flags.iter().any(|f| f.w_supersolvable && !f.supersolvable)),
        ("X \\ wU", flags.iter().any(|f| f.class_x && !f.w_supersolvable)),
        ("D \\ X", flags.iter().any(|f| f.tower && !f.class_x)),
    ]
    .into_iter()
    .filter(|(_, found)| !found)
    .map(|(name, _)| name)
    .collect();
    if missing.is_empty() {
        strict.passed += 1;
    } else {
        strict.failed += 1;
        strict.first_counterexample = Some(Counterexample {
            group: "corpus".into(),
            detail: format!("no corpus group in {}", missing.join(", ")),
            subgroups: Vec::new(),
        });
    }

    let suite = SuiteReport {
        seed,
        groups_checked: reports.len(),
        checks,
        groups,
        skipped_groups,
    };
    Ok((suite, reports))
}

type GroupOutcome = (
    Recorder,
    GroupVerification,
    std::result::Result<ClassMembershipReport, SkippedEntry>,
);

fn verify_group(index: usize, entry: &CorpusEntry, caps: &Caps, seed: u64) -> Result<GroupOutcome> {
    let mut rec = Recorder::new(entry.descriptor.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (index as u64 + 1).wrapping_mul(0xD134_2543_DE82_EF95));
    let outcome = Analysis::new(&entry.group, caps).and_then(|an| {
        run_checks(&an, &mut rec, &mut rng)?;
        an.report()
    });
    let mut gv = GroupVerification {
        descriptor: entry.descriptor.clone(),
        order: entry.group.order().ok(),
        flags: None,
        failed_checks: Vec::new(),
    };
    match outcome {
        Ok(report) => {
            let ok = report.flags.implications_hold();
            rec.record(
                Check::ClassContainments,
                ok,
                "class flags violate U => wU => X => D => solvable",
                &[],
            );
            gv.flags = Some(report.flags);
            gv.failed_checks = rec
                .tallies
                .iter()
                .filter(|t| t.failed > 0)
                .map(|t| t.name.clone())
                .collect();
            Ok((rec, gv, Ok(report)))
        }
        Err(e) if e.is_cap() => {
            let mut skipped = Recorder::new(entry.descriptor.clone());
            for t in &mut skipped.tallies {
                t.skipped = 1;
            }
            let entry = SkippedEntry {
                descriptor: entry.descriptor.clone(),
                reason: e.to_string(),
            };
            Ok((skipped, gv, Err(entry)))
        }
        Err(e) => Err(e),
    }
}

fn run_checks(an: &Analysis, rec: &mut Recorder, rng: &mut ChaCha8Rng) -> Result<()> {
    let group = an.group();
    let whole = an.whole();
    let l = an.lattice()?;
    let top = l.top();
    let n = l.len();
    let solvable = whole.is_solvable();
    let primes = whole.primes();
    let reach = p_subnormal_below(l, top);
    let all: Vec<usize> = (0..n).collect();
    let psn: Vec<usize> = all.iter().copied().filter(|&i| reach[i]).collect();
    let normals = l.normal_nodes();
    let proper_normals: Vec<usize> = normals
        .iter()
        .copied()
        .filter(|&i| i != top && !l.node(i).is_trivial())
        .collect();
    let in_x = an.node_in_x(top)?;
    let in_wu = an.node_in_wu(top)?;
    let phi = l.frattini();
    let phi_node = find(l, &phi)?;

    // quotients by a few normal subgroups, always including the Frattini subgroup
    let mut quotient_nodes = sample(rng, &proper_normals, 3);
    if phi_node != top && !phi.is_trivial() && !quotient_nodes.contains(&phi_node) {
        quotient_nodes.push(phi_node);
    }
    let mut quotients = Vec::new();
    for &q in &quotient_nodes {
        let action = whole.quotient(l.node(q))?;
        let analysis = Analysis::new(&action.image, an.caps())?;
        let ql = analysis.lattice()?;
        let reach = p_subnormal_below(ql, ql.top());
        let in_x = analysis.node_in_x(ql.top())?;
        quotients.push(QuotientData {
            node: q,
            action,
            analysis,
            reach,
            in_x,
        });
    }

    if solvable {
        let mut seen_classes = Vec::new();
        for c in l.lower_covers(top) {
            let class = l.class_of(c.node);
            if !c.is_prime() || seen_classes.contains(&class) {
                continue;
            }
            seen_classes.push(class);
            let core = l.classes()[class]
                .iter()
                .fold(whole.clone(), |acc, &j| acc.intersection(l.node(j)));
            let ok = quotient_is_supersolvable(group, &core)?;
            rec.record(
                Check::PrimeIndexCoreQuotient,
                ok,
                "quotient by the core of a prime-index subgroup is not supersolvable",
                &[l.node(c.node)],
            );
        }
    }

    let hs = sample(rng, &psn, 8);
    for &h in &hs {
        for &m in &sample(rng, &normals, 4) {
            let i = find(l, &l.node(h).intersection(l.node(m)))?;
            rec.record(
                Check::IntersectionWithNormal,
                l.is_p_subnormal_in(i, m),
                "H ∩ N is not P-subnormal in N",
                &[l.node(h), l.node(m)],
            );
        }
    }

    for q in &quotients {
        let ql = q.analysis.lattice()?;
        let nn = l.node(q.node);
        for &h in &sample(rng, &psn, 6) {
            let img = q.action.image_of(l.node(h))?;
            let ok = q.reach[find(ql, &img)?];
            rec.record(
                Check::ImageInQuotient,
                ok,
                "HN/N is not P-subnormal in G/N",
                &[l.node(h), nn],
            );
        }
        let above: Vec<usize> = all.iter().copied().filter(|&j| l.contains(q.node, j)).collect();
        for &h in &sample(rng, &above, 6) {
            let img = q.action.image_of(l.node(h))?;
            if q.reach[find(ql, &img)?] {
                rec.record(
                    Check::LiftFromQuotient,
                    reach[h],
                    "H/N is P-subnormal in G/N but H is not P-subnormal in G",
                    &[l.node(h), nn],
                );
            }
        }
        if in_x {
            let ok = ql.primary_cyclic_nodes().into_iter().all(|c| q.reach[c]);
            rec.record(
                Check::XNormalAndQuotientCyclic,
                ok,
                "a primary cyclic subgroup of G/N is not P-subnormal",
                &[nn],
            );
            rec.record(Check::XQuotientClosed, q.in_x, "G in X but G/N is not", &[nn]);
        }
    }

    for &h in &sample(rng, &all, 8) {
        let ups: Vec<usize> = l.prime_reachable(h, top).into_iter().filter(|&k| reach[k]).collect();
        for &k in &sample(rng, &ups, 2) {
            let first = l.prime_chain(h, k).expect("k is prime-reachable from h");
            let second = l.prime_chain(k, top).expect("k is P-subnormal");
            let joined = PChainWitness::from_nodes(l, &first).then(&PChainWitness::from_nodes(l, &second));
            rec.record(
                Check::Transitivity,
                joined.validate() && reach[h],
                "composed chain is invalid or H is not P-subnormal",
                &[l.node(h), l.node(k)],
            );
        }
    }

    for &h in &hs {
        let x = rng.gen_range(0..whole.order());
        let conj = find(l, &l.node(h).conjugate(x))?;
        rec.record(
            Check::Conjugation,
            reach[conj],
            "a conjugate of H is not P-subnormal",
            &[l.node(h)],
        );
    }

    if solvable {
        for &h in &hs {
            for &k in &sample(rng, &all, 4) {
                let i = find(l, &l.node(h).intersection(l.node(k)))?;
                rec.record(
                    Check::SolvableIntersectionWithSubgroup,
                    l.is_p_subnormal_in(i, k),
                    "H ∩ K is not P-subnormal in K",
                    &[l.node(h), l.node(k)],
                );
            }
            for &h2 in &sample(rng, &psn, 3) {
                let i = find(l, &l.node(h).intersection(l.node(h2)))?;
                rec.record(
                    Check::SolvableIntersectionOfTwo,
                    reach[i],
                    "intersection of two P-subnormal subgroups is not P-subnormal",
                    &[l.node(h), l.node(h2)],
                );
            }
        }
        let mut candidates = sample(rng, &all, 8);
        candidates.extend(normals.iter().copied());
        candidates.sort_unstable();
        candidates.dedup();
        for h in candidates {
            if whole.is_subnormal(l.node(h))? {
                rec.record(
                    Check::SolvableSubnormal,
                    reach[h],
                    "subnormal subgroup of a solvable group is not P-subnormal",
                    &[l.node(h)],
                );
            }
        }
    }

    let largest = primes.last().copied();
    for &p in &primes {
        let p_nodes: Vec<usize> = all
            .iter()
            .copied()
            .filter(|&i| l.node(i).order() > 1 && is_power_of(l.node(i).order() as u64, p))
            .collect();
        let o_p = whole.o_p(p)?;
        let mut sampled = sample(rng, &p_nodes, 6);
        if let Some(s) = l.sylow_of(top, p) {
            if !sampled.contains(&s) {
                sampled.push(s);
            }
        }
        for &a in &sampled {
            let sub = whole.is_subnormal(l.node(a))?;
            rec.record(
                Check::PSubgroupSubnormalIffInOp,
                sub == l.node(a).is_subgroup_of(&o_p),
                "subnormality of a p-subgroup disagrees with containment in O_p",
                &[l.node(a)],
            );
            let index = (whole.order() / whole.normalizer(l.node(a))?.order()) as u64;
            if is_power_of(index, p) {
                rec.record(
                    Check::PPowerNormalizerIndex,
                    sub,
                    "p-subgroup with normalizer of p-power index is not subnormal",
                    &[l.node(a)],
                );
            }
        }
        if Some(p) == largest {
            for &a in &sample(rng, &p_nodes, 12) {
                if reach[a] {
                    rec.record(
                        Check::LargestPrimePSubgroup,
                        whole.is_subnormal(l.node(a))?,
                        "P-subnormal subgroup for the largest prime is not subnormal",
                        &[l.node(a)],
                    );
                }
            }
        }
        if let Some(s) = l.sylow_of(top, p) {
            if whole.is_normal(l.node(s))? {
                let phi_p = l.node(l.frattini_of(s));
                rec.record(
                    Check::NormalSylowFrattini,
                    *phi_p == phi.intersection(l.node(s)),
                    "Frattini subgroup of a normal Sylow subgroup differs from its intersection with the Frattini subgroup",
                    &[l.node(s)],
                );
            }
        }
    }

    if in_wu {
        rec.record(
            Check::WuHasTower,
            an.tower()?.exists(),
            "wU group without a Sylow tower",
            &[],
        );
        let fq = whole.quotient(&phi)?;
        let dl = fq.image.whole()?.derived_length();
        rec.record(
            Check::WuFrattiniDerivedLength,
            dl.is_some_and(|d| d <= primes.len()),
            "derived length of G/Φ(G) exceeds the number of prime divisors",
            &[&phi],
        );
    }

    if let Some(r) = is_schmidt(an)? {
        rec.record(
            Check::SchmidtStructure,
            r.all_hold(),
            "Schmidt structure check failed",
            &[],
        );
    }
    if an.is_minimal_non_u()? {
        let r = minimal_non_class(an, ClassName::U)?;
        let ok = r.non_u.as_ref().is_some_and(|x| x.all_hold());
        rec.record(
            Check::MinimalNonUStructure,
            ok,
            "minimal non-U structure check failed",
            &[],
        );
        rec.record(
            Check::MinimalNonUXCriterion,
            not_in_x_iff_shape(an)? == Some(true),
            "minimal non-U group: membership in X disagrees with the biprimary cyclic-Sylow shape",
            &[],
        );
    }

    if in_x {
        for &m in &sample(rng, &normals, 3) {
            let ok = l
                .primary_cyclic_nodes()
                .into_iter()
                .filter(|&c| l.contains(c, m))
                .all(|c| l.is_p_subnormal_in(c, m));
            rec.record(
                Check::XNormalAndQuotientCyclic,
                ok,
                "a primary cyclic subgroup of a normal subgroup N is not P-subnormal in N",
                &[l.node(m)],
            );
        }
        for &k in &sample(rng, &all, 8) {
            rec.record(
                Check::XSubgroupClosed,
                an.node_in_x(k)?,
                "subgroup of an X-group is not in X",
                &[l.node(k)],
            );
        }
    }

    let mut biprimary: Vec<usize> = all.iter().copied().filter(|&i| l.primes_of(i).len() == 2).collect();
    biprimary = sample(rng, &biprimary, 10);
    if primes.len() == 2 && !biprimary.contains(&top) {
        biprimary.push(top);
    }
    for b in biprimary {
        let sylows: Vec<usize> = l.primes_of(b).into_iter().filter_map(|p| l.sylow_of(b, p)).collect();
        if sylows.iter().all(|&s| l.is_p_subnormal_in(s, b)) {
            rec.record(
                Check::BiprimaryPSubnormalSylows,
                l.is_supersolvable_node(b),
                "biprimary group with P-subnormal Sylow subgroups is not supersolvable",
                &[l.node(b)],
            );
        }
    }

    let theorem = verify_theorem(an)?;
    rec.record(
        Check::WuCharacterization,
        theorem.wu_characterization.agree,
        "wU membership disagrees with tower plus supersolvable biprimary subgroups",
        &[],
    );
    rec.record(
        Check::XCharacterization,
        theorem.x_characterization.agree,
        "X membership disagrees with tower plus supersolvable biprimary subgroups with a cyclic Sylow subgroup",
        &[],
    );
    if let Some(ok) = theorem.minimal_non_x {
        rec.record(
            Check::MinimalNonXShape,
            ok,
            "minimal non-X group has the wrong shape",
            &[],
        );
    }

    for (i, a) in quotients.iter().enumerate() {
        for b in &quotients[i + 1..] {
            let meet = l.node(a.node).intersection(l.node(b.node));
            if meet.is_trivial() && a.in_x && b.in_x {
                rec.record(
                    Check::XSubdirectClosed,
                    in_x,
                    "G/N1 and G/N2 in X with N1 ∩ N2 = 1 but G is not in X",
                    &[l.node(a.node), l.node(b.node)],
                );
            }
        }
        if a.node == phi_node && a.in_x {
            rec.record(Check::XFrattiniSaturated, in_x, "G/Φ(G) in X but G is not", &[&phi]);
        }
    }
    Ok(())
}
