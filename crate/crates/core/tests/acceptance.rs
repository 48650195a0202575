//! Acceptance criteria. Prints one pass/fail line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{all_chains_reach, small_corpus, Oracle};
use psubnormal::catalog::{self, search_order400_family};
use psubnormal::classify::{
    is_schmidt, minimal_non_class, p_subnormal, p_subnormal_below, sylow_tower_supersolvable, Analysis, ClassName,
};
use psubnormal::cli::{execute, ReportBundle};
use psubnormal::{Caps, FiniteGroup, Lattice, Subgroup};

type Criterion<'a> = (&'a str, Box<dyn Fn() -> Result<(), String> + 'a>);

fn build(descriptor: &str) -> FiniteGroup {
    catalog::build(descriptor, &Caps::default()).unwrap()
}

fn subgroup(g: &FiniteGroup, gens: &str) -> Subgroup {
    let perms = psubnormal::Permutation::parse_list(gens, g.degree()).unwrap();
    g.subgroup_from_perms(&perms).unwrap()
}

fn is_p_subnormal(h: &Subgroup) -> bool {
    p_subnormal(h, &Caps::default()).unwrap().is_p_subnormal()
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn ensure(ok: bool, what: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn a4_in_a5() -> Result<(), String> {
    let start = Instant::now();
    let a5 = build("builtin:a5");
    let a4 = subgroup(&a5, "(1 2 3),(1 2)(3 4)");
    ensure(a4.order() == 12, "A4 generators")?;
    let outcome = p_subnormal(&a4, &Caps::default()).unwrap();
    let w = outcome.witness().ok_or("A4 is not P-subnormal in A5")?;
    ensure(w.validate() && w.indices == vec![5], "chain A4 ⊂ A5 with index 5")?;

    let listed = subgroup(&a5, "(1 2 3),(1 2)(4 5)");
    ensure(
        listed.order() == 6 && !is_p_subnormal(&listed),
        "the order-6 subgroup is maximal and not P-subnormal",
    )?;

    let a4_alone = build("builtin:a4");
    let z3 = subgroup(&a4_alone, "(1 2 3)");
    ensure(!is_p_subnormal(&z3), "Z3 should not be P-subnormal in A4")?;

    let whole = a5.whole().unwrap();
    let meet = whole
        .elements()
        .map(|x| a4.intersection(&a4.conjugate(x)))
        .find(|m| m.order() == 3)
        .ok_or("no conjugate meets A4 in order 3")?;
    ensure(!is_p_subnormal(&meet), "A4 ∩ A4^x should not be P-subnormal in A5")?;
    within(start.elapsed(), Duration::from_secs(1))
}

fn sl2_13_center() -> Result<(), String> {
    let start = Instant::now();
    let sl = build("sl2:13");
    let whole = sl.whole().unwrap();
    let center = whole.center();
    ensure(center.order() == 2, "center of SL(2,13) has order 2")?;
    ensure(whole.is_normal(&center).unwrap(), "center is normal")?;
    ensure(!is_p_subnormal(&center), "center should not be P-subnormal")?;
    let psl = build("psl2:13");
    ensure(
        !is_p_subnormal(&psl.trivial().unwrap()),
        "trivial subgroup of PSL(2,13) should not be P-subnormal",
    )?;
    within(start.elapsed(), Duration::from_secs(600))
}

fn order400_family() -> Result<(), String> {
    let start = Instant::now();
    let classes = search_order400_family().map_err(|e| e.to_string())?;
    ensure(classes.len() == 3, &format!("{} classes instead of 3", classes.len()))?;
    for c in classes {
        let an = Analysis::new(&c.group, &Caps::default()).unwrap();
        ensure(an.order() == 400, "order 400")?;
        ensure(an.is_minimal_non_u().unwrap(), "minimal non-supersolvable")?;
        let f = c.report.flags;
        ensure(f.class_x && !f.w_supersolvable, "in X and not in wU")?;
        let s = an.whole().sylow(2).unwrap();
        ensure(
            s.order() == 16 && !s.is_abelian(),
            "non-abelian Sylow 2-subgroup of order 16",
        )?;
    }
    within(start.elapsed(), Duration::from_secs(1800))
}

fn e49_s3_fixture() -> Result<(), String> {
    let start = Instant::now();
    let g = build("builtin:e49_s3");
    let an = Analysis::new(&g, &Caps::default()).unwrap();
    ensure(an.is_minimal_non_u().unwrap(), "minimal non-supersolvable")?;
    let f = an.report().unwrap().flags;
    ensure(f.w_supersolvable && !f.supersolvable, "in wU but not U")?;
    let orders: Vec<usize> = an.lattice().unwrap().nodes().iter().map(Subgroup::order).collect();
    ensure(
        orders.contains(&14) && orders.contains(&21),
        "subgroups of orders 14 and 21",
    )?;
    within(start.elapsed(), Duration::from_secs(60))
}

fn schmidt_groups_and_containments() -> Result<(), String> {
    let start = Instant::now();
    let caps = Caps::default();
    for name in ["builtin:e25_z3", "builtin:a4"] {
        let an = Analysis::new(&build(name), &caps).unwrap();
        let schmidt = is_schmidt(&an).unwrap().ok_or(format!("{name} is not Schmidt"))?;
        ensure(schmidt.all_hold(), &format!("{name}: Schmidt structure"))?;
        let f = an.report().unwrap().flags;
        ensure(
            !f.supersolvable && !f.class_x,
            &format!("{name} should be outside U and X"),
        )?;
    }
    let e25 = build("builtin:e25_z3");
    ensure(
        sylow_tower_supersolvable(&e25).unwrap().exists(),
        "e25_z3 has a Sylow tower",
    )?;
    let e25 = Analysis::new(&e25, &caps).unwrap().report().unwrap().flags;
    ensure(e25.tower && !e25.class_x, "e25_z3 in D \\ X")?;
    let e49 = Analysis::new(&build("builtin:e49_s3"), &caps)
        .unwrap()
        .report()
        .unwrap()
        .flags;
    ensure(e49.w_supersolvable && !e49.supersolvable, "e49_s3 in wU \\ U")?;
    let o400 = Analysis::new(&build("order400:0"), &caps)
        .unwrap()
        .report()
        .unwrap()
        .flags;
    ensure(o400.class_x && !o400.w_supersolvable, "order400:0 in X \\ wU")?;
    within(start.elapsed(), Duration::from_secs(60))
}

fn checks_pass(bundle: &ReportBundle, names: &[&str]) -> Result<(), String> {
    let suite = bundle.suites.first().ok_or("no suite in the verify report")?;
    for name in names {
        let t = suite.check(name).ok_or(format!("missing check {name}"))?;
        if t.failed > 0 {
            let cx = t
                .first_counterexample
                .as_ref()
                .map(|c| format!("{}: {}", c.group, c.detail));
            return Err(format!("{name}: {} failures, first {:?}", t.failed, cx));
        }
        ensure(t.passed > 0, &format!("{name} never exercised"))?;
    }
    Ok(())
}

fn property_suites(bundle: &ReportBundle, status: i32, elapsed: Duration) -> Result<(), String> {
    ensure(status == 0, &format!("verify exited with {status}"))?;
    checks_pass(
        bundle,
        &[
            "prime_index_core_quotient_supersolvable",
            "intersection_with_normal",
            "image_in_quotient",
            "lift_from_quotient",
            "transitivity",
            "conjugation",
            "solvable_intersection_with_subgroup",
            "solvable_intersection_of_two",
            "solvable_subnormal_is_p_subnormal",
            "p_subgroup_subnormal_iff_in_o_p",
            "p_power_normalizer_index_subnormal",
            "largest_prime_p_subgroup_subnormal",
            "wu_has_tower",
            "wu_frattini_quotient_derived_length",
            "x_normal_and_quotient_primary_cyclic",
            "normal_sylow_frattini",
            "biprimary_p_subnormal_sylows_supersolvable",
            "class_containments",
            "class_containments_strict",
        ],
    )?;
    let skipped = &bundle.suites[0].skipped_groups;
    ensure(
        !skipped.is_empty() && skipped == &bundle.skipped,
        "skipped groups are reported",
    )?;
    within(elapsed, Duration::from_secs(1200))
}

fn structure_suites(bundle: &ReportBundle) -> Result<(), String> {
    checks_pass(
        bundle,
        &[
            "schmidt_structure",
            "minimal_non_u_structure",
            "minimal_non_x_shape",
            "minimal_non_u_x_criterion",
        ],
    )?;
    let caps = Caps::default();
    for name in ["builtin:e25_z3", "builtin:a4"] {
        let an = Analysis::new(&build(name), &caps).unwrap();
        let r = minimal_non_class(&an, ClassName::X).unwrap();
        ensure(
            r.minimal && r.shape.is_some_and(|s| s.holds()),
            &format!("{name} is minimal non-X of the expected shape"),
        )?;
    }
    Ok(())
}

fn characterization_suites(bundle: &ReportBundle) -> Result<(), String> {
    checks_pass(
        bundle,
        &[
            "wu_characterization",
            "x_characterization",
            "x_subgroup_closed",
            "x_quotient_closed",
            "x_subdirect_closed",
            "x_frattini_saturated",
        ],
    )
}

fn oracle_equivalence() -> Result<(), String> {
    let caps = Caps::default();
    let groups = small_corpus(100);
    ensure(groups.len() > 100, "corpus has enough small groups")?;
    for (name, g) in &groups {
        let oracle = Oracle::new(g);
        let subgroups = oracle.subgroups();
        let lattice = Lattice::build(g, None, caps.lattice).unwrap();
        ensure(lattice.len() == subgroups.len(), &format!("{name}: node count"))?;
        let expected = all_chains_reach(&subgroups, oracle.elements.len());
        let reach = p_subnormal_below(&lattice, lattice.top());
        for (i, h) in subgroups.iter().enumerate() {
            let sub = g.subgroup_from_perms(&oracle.perms(h)).unwrap();
            let node = lattice.find(&sub).ok_or(format!("{name}: subgroup missing"))?;
            ensure(
                reach[node] == expected[i],
                &format!("{name}: P-subnormality of a subgroup of order {}", h.len()),
            )?;
        }
        for (i, h) in subgroups.iter().enumerate().step_by((subgroups.len() / 10).max(1)) {
            let sub = g.subgroup_from_perms(&oracle.perms(h)).unwrap();
            ensure(
                is_p_subnormal(&sub) == expected[i],
                &format!("{name}: p_subnormal on order {}", h.len()),
            )?;
        }
    }
    Ok(())
}

fn verify_json(jobs: &str) -> (i32, String) {
    let run = execute(["psubnormal", "verify", "--format", "json", "--jobs", jobs]);
    (run.status, run.stdout)
}

fn main() -> ExitCode {
    let start = Instant::now();
    let (status, json) = verify_json("1");
    let verify_elapsed = start.elapsed();
    let bundle: Option<ReportBundle> = serde_json::from_str(&json).ok();

    let criteria: Vec<Criterion> = vec![
        ("A4 in A5", Box::new(a4_in_a5)),
        ("center of SL(2,13)", Box::new(sl2_13_center)),
        ("order-400 family", Box::new(order400_family)),
        ("e49_s3", Box::new(e49_s3_fixture)),
        (
            "Schmidt groups and strict containments",
            Box::new(schmidt_groups_and_containments),
        ),
        (
            "property suites on the default corpus",
            Box::new(|| {
                property_suites(
                    bundle.as_ref().ok_or("unparseable verify output")?,
                    status,
                    verify_elapsed,
                )
            }),
        ),
        (
            "structure report suites",
            Box::new(|| structure_suites(bundle.as_ref().ok_or("unparseable verify output")?)),
        ),
        (
            "characterizations and closure properties",
            Box::new(|| characterization_suites(bundle.as_ref().ok_or("unparseable verify output")?)),
        ),
        (
            "oracle equivalence on groups of order <= 100",
            Box::new(oracle_equivalence),
        ),
        (
            "verify output independent of --jobs",
            Box::new(|| {
                let (other_status, other) = verify_json("4");
                ensure(other_status == status, "exit status differs")?;
                ensure(other == json, "JSON differs between --jobs 1 and --jobs 4")
            }),
        ),
    ];

    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = t.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:2} PASS {name} ({elapsed:.2} s)", i + 1),
            Err(e) => {
                failures += 1;
                println!("criterion {:2} FAIL {name} ({elapsed:.2} s): {e}", i + 1);
            }
        }
    }
    println!(
        "verify run on the default corpus: {:.2} s",
        verify_elapsed.as_secs_f64()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
