//! Property tests over random small permutation groups and parametrised
//! constructions.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use psubnormal::catalog::{self, fingerprint, group_file_json, parse_group_file, Matrix};
use psubnormal::classify::{p_subnormal, p_subnormal_below, sylow_tower_supersolvable, Analysis};
use psubnormal::cli::{render, Format, ReportBundle};
use psubnormal::{Caps, FiniteGroup, Lattice, Permutation, Subgroup};

const MAX_ORDER: usize = 200;

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// A two-generated subgroup of `sym(n)`, or `None` when it is larger than `MAX_ORDER`.
fn random_group(n: usize, seed: u64) -> Option<FiniteGroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = vec![random_perm(&mut rng, n), random_perm(&mut rng, n)];
    let g = FiniteGroup::with_cap(n, gens, None, MAX_ORDER).ok()?;
    g.order().ok()?;
    Some(g)
}

fn small_group() -> impl Strategy<Value = (FiniteGroup, u64)> {
    (3usize..=7, any::<u64>()).prop_filter_map("order over the cap", |(n, seed)| {
        random_group(n, seed).map(|g| (g, seed))
    })
}

fn random_subgroup(g: &FiniteGroup, seed: u64, count: usize) -> Subgroup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(17));
    let n = g.order().unwrap();
    let picks: Vec<usize> = (0..count).map(|_| rng.gen_range(0..n)).collect();
    g.subgroup(&picks).unwrap()
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn core_and_quotient_orders((g, seed) in small_group(), count in 1usize..3) {
        let whole = g.whole().unwrap();
        let h = random_subgroup(&g, seed, count);
        prop_assert_eq!(whole.order() % h.order(), 0);
        let core = whole.core(&h).unwrap();
        prop_assert!(whole.is_normal(&core).unwrap());
        prop_assert!(core.is_subgroup_of(&h));
        let q = whole.quotient(&core).unwrap();
        prop_assert_eq!(q.image.order().unwrap() * core.order(), whole.order());
    }

    #[test]
    fn p_subgroup_subnormality((g, seed) in small_group()) {
        let whole = g.whole().unwrap();
        let caps = Caps::default();
        let an = Analysis::new(&g, &caps).unwrap();
        let l = an.lattice().unwrap();
        let reach = p_subnormal_below(l, l.top());
        let largest = whole.primes().last().copied();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for &p in &whole.primes() {
            let o_p = whole.o_p(p).unwrap();
            let mut candidates = vec![whole.sylow(p).unwrap()];
            for _ in 0..6 {
                let x = rng.gen_range(0..whole.order());
                let c = g.subgroup(&[x]).unwrap();
                if c.order() > 1 && is_power_of(c.order(), p as usize) {
                    candidates.push(c);
                }
            }
            for a in candidates {
                let sub = whole.is_subnormal(&a).unwrap();
                prop_assert_eq!(sub, a.is_subgroup_of(&o_p));
                let index = whole.order() / whole.normalizer(&a).unwrap().order();
                if is_power_of(index, p as usize) {
                    prop_assert!(sub);
                }
                if Some(p) == largest && reach[l.find(&a).unwrap()] {
                    prop_assert!(sub);
                }
            }
        }
    }

    #[test]
    fn prime_edges_are_covers((g, _seed) in small_group()) {
        let l = Lattice::build(&g, None, 200_000).unwrap();
        for i in 0..l.len() {
            for c in l.upper_covers(i) {
                if c.is_prime() {
                    let between = (0..l.len()).any(|k| {
                        k != i && k != c.node && l.contains(i, k) && l.contains(k, c.node)
                    });
                    prop_assert!(!between);
                }
            }
        }
    }

    #[test]
    fn normal_sylow_frattini((g, _seed) in small_group()) {
        let whole = g.whole().unwrap();
        let l = Lattice::build(&g, None, 200_000).unwrap();
        let phi = l.frattini();
        for p in whole.primes() {
            let s = whole.sylow(p).unwrap();
            if whole.is_normal(&s).unwrap() {
                let own = s.as_group(None).unwrap();
                let own_phi = Lattice::build(&own, None, 200_000).unwrap().frattini();
                prop_assert_eq!(own_phi.order(), phi.intersection(&s).order());
                let lifted = g.subgroup_from_perms(&own_phi.generator_perms()).unwrap();
                prop_assert_eq!(lifted, phi.intersection(&s));
            }
        }
    }

    #[test]
    fn interval_lattice_matches_quotient((g, seed) in small_group()) {
        let whole = g.whole().unwrap();
        let h = random_subgroup(&g, seed, 1);
        let interval = Lattice::build(&g, Some(&h), 200_000).unwrap();
        for k in interval.nodes() {
            prop_assert!(h.is_subgroup_of(k));
        }
        let n = whole.normal_closure_of(&h).unwrap();
        let interval = Lattice::build(&g, Some(&n), 200_000).unwrap();
        let q = whole.quotient(&n).unwrap();
        let ql = Lattice::build(&q.image, None, 200_000).unwrap();
        prop_assert_eq!(interval.len(), ql.len());
        for k in interval.nodes() {
            let img = q.image_of(k).unwrap();
            prop_assert!(ql.find(&img).is_some());
            prop_assert_eq!(q.preimage(&img).unwrap(), k.clone());
        }
    }

    #[test]
    fn chain_witnesses_revalidate((g, seed) in small_group(), count in 1usize..3) {
        let h = random_subgroup(&g, seed, count);
        let outcome = p_subnormal(&h, &Caps::default()).unwrap();
        if let Some(w) = outcome.witness() {
            prop_assert!(w.validate());
            prop_assert_eq!(&w.chain[0], &h);
            prop_assert_eq!(w.chain.last().unwrap().order(), g.order().unwrap());
        }
    }

    #[test]
    fn report_invariants((g, seed) in small_group()) {
        let caps = Caps::default();
        let an = Analysis::new(&g, &caps).unwrap();
        let report = an.report().unwrap();
        prop_assert!(report.flags.implications_hold());
        if report.flags.w_supersolvable {
            prop_assert!(sylow_tower_supersolvable(&g).unwrap().exists());
        }
        let l = an.lattice().unwrap();
        let top = l.top();
        if report.flags.class_x {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..4 {
                let k = rng.gen_range(0..l.len());
                prop_assert!(an.node_in_x(k).unwrap());
            }
        }
        for b in 0..l.len() {
            let primes = l.primes_of(b);
            if primes.len() == 2 {
                let sylows_ok = primes
                    .iter()
                    .all(|&p| l.is_p_subnormal_in(l.sylow_of(b, p).unwrap(), b));
                if sylows_ok {
                    prop_assert!(l.is_supersolvable_node(b));
                }
            }
        }
        prop_assert!(l.contains(l.bottom(), top));
    }

    #[test]
    fn fingerprint_survives_relabeling((g, seed) in small_group()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5555);
        let n = g.degree();
        let x = random_perm(&mut rng, n);
        let gens: Vec<Permutation> = g.generators().iter().map(|s| s.conjugate_by(&x)).collect();
        let relabeled = FiniteGroup::new(n, gens, None).unwrap();
        let caps = Caps::default();
        prop_assert_eq!(fingerprint(&g, &caps).unwrap(), fingerprint(&relabeled, &caps).unwrap());
    }

    #[test]
    fn group_file_round_trip((g, _seed) in small_group()) {
        let text = group_file_json(&g);
        let back = parse_group_file(&text).unwrap();
        prop_assert_eq!(back.generators(), g.generators());
        prop_assert_eq!(back.order().unwrap(), g.order().unwrap());
        prop_assert_eq!(group_file_json(&back), text);
    }

    #[test]
    fn classification_is_deterministic((g, _seed) in small_group()) {
        let caps = Caps::default();
        let a = Analysis::new(&g, &caps).unwrap().report().unwrap();
        let rebuilt = FiniteGroup::new(g.degree(), g.generators().to_vec(), None).unwrap();
        let b = Analysis::new(&rebuilt, &caps).unwrap().report().unwrap();
        prop_assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn constructor_orders(n in 1usize..=6, p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let fact: usize = (1..=n).product();
        prop_assert_eq!(catalog::sym(n).unwrap().order().unwrap(), fact);
        let alt = if n >= 2 { fact / 2 } else { 1 };
        prop_assert_eq!(catalog::alt(n).unwrap().order().unwrap(), alt);
        let sl = (p * (p - 1) * (p + 1)) as usize;
        prop_assert_eq!(catalog::sl2(p).unwrap().order().unwrap(), sl);
        let psl = if p == 2 { sl } else { sl / 2 };
        prop_assert_eq!(catalog::psl2(p).unwrap().order().unwrap(), psl);
    }

    #[test]
    fn affine_order(p in prop::sample::select(vec![2u64, 3, 5]), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..3)) {
        let gl = Matrix::general_linear(p, 2);
        let mats: Vec<Matrix> = picks.iter().map(|i| i.get(&gl).clone()).collect();
        let g = catalog::affine(p, 2, &mats).unwrap();
        let translations = (p * p) as usize;
        let mut closure = vec![Matrix::identity(p, 2)];
        let mut i = 0;
        while i < closure.len() {
            for m in &mats {
                let y = closure[i].mul(m);
                if !closure.contains(&y) {
                    closure.push(y);
                }
            }
            i += 1;
        }
        prop_assert_eq!(g.order().unwrap(), translations * closure.len());
    }

    #[test]
    fn bundle_json_round_trip(descriptor in prop::sample::select(vec!["sym:3", "builtin:q8", "dihedral:10", "builtin:a4"])) {
        let bundle = run_bundle(&["classify", descriptor]);
        let text = render(&bundle, Format::Json);
        let back: ReportBundle = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, bundle);
    }
}

fn run_bundle(args: &[&str]) -> ReportBundle {
    use clap::Parser;
    let cli = psubnormal::cli::Cli::try_parse_from(std::iter::once("psubnormal").chain(args.iter().copied())).unwrap();
    psubnormal::cli::run(&cli).unwrap().1
}

#[test]
fn e49_s3_matrices_act_irreducibly() {
    let (a, b) = catalog::e49_s3_matrices();
    assert_eq!(a.order(), 3);
    assert_eq!(b.order(), 2);
    assert_ne!(a.mul(b), b.mul(a));
    assert!(!catalog::has_common_line(&[a, b]));
    let g = catalog::fixture("e49_s3").unwrap();
    let an = Analysis::new(&g, &Caps::default()).unwrap();
    let l = an.lattice().unwrap();
    let translations = l.normal_nodes().into_iter().find(|&i| l.node(i).order() == 49).unwrap();
    let minimal = l
        .normal_nodes()
        .into_iter()
        .filter(|&i| l.contains(i, translations) && i != translations && !l.node(i).is_trivial())
        .count();
    assert_eq!(minimal, 0);
}
