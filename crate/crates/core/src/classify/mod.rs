//! Decision procedures for prime-index subnormality and the classes
//! supersolvable (`U`), w-supersolvable (`wU`), `X` (all primary cyclic
//! subgroups reach the top by prime indices) and `D` (ordered Sylow tower of
//! supersolvable type).

mod structure;
mod theorem;
mod verify;

pub use structure::{
    is_schmidt, minimal_non_class, minimal_non_x_shape, multiplicative_order, not_in_x_iff_shape, ClassName,
    MinimalNonClassReport, MinimalNonUReport, MinimalNonXShape, SchmidtReport,
};
pub use theorem::{verify_theorem, PartAgreement, TheoremRecord};
pub use verify::{verify_corpus, verify_lemmas, Check, CheckTally, Counterexample, GroupVerification, SuiteReport};

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::group::{is_prime, p_part, Caps, FiniteGroup};
use crate::lattice::{cyclic_primary_subgroup_reps, Lattice, LatticeStats};
use crate::subgroup::Subgroup;

/// `H = H₀ ⊂ H₁ ⊂ … ⊂ Hₙ = G` with every `|Hᵢ : Hᵢ₋₁|` prime.
#[derive(Debug, Clone)]
pub struct PChainWitness {
    pub chain: Vec<Subgroup>,
    pub indices: Vec<u64>,
}

impl PChainWitness {
    pub fn from_nodes(lattice: &Lattice, nodes: &[usize]) -> Self {
        let chain: Vec<Subgroup> = nodes.iter().map(|&i| lattice.node(i).clone()).collect();
        Self::from_chain(chain)
    }

    pub fn from_chain(chain: Vec<Subgroup>) -> Self {
        let indices = chain.windows(2).map(|w| (w[1].order() / w[0].order()) as u64).collect();
        PChainWitness { chain, indices }
    }

    /// Recomputes containments and indices from the member sets.
    pub fn validate(&self) -> bool {
        if self.chain.is_empty() || self.indices.len() + 1 != self.chain.len() {
            return false;
        }
        self.chain.windows(2).zip(&self.indices).all(|(w, &idx)| {
            w[0].is_subgroup_of(&w[1])
                && w[0] != w[1]
                && w[1].order() % w[0].order() == 0
                && (w[1].order() / w[0].order()) as u64 == idx
                && is_prime(idx)
        })
    }

    /// Appends a chain starting where this one ends.
    pub fn then(&self, next: &PChainWitness) -> PChainWitness {
        let mut chain = self.chain.clone();
        chain.extend(next.chain.iter().skip(1).cloned());
        PChainWitness::from_chain(chain)
    }

    pub fn summary(&self) -> ChainSummary {
        ChainSummary {
            chain: self.chain.iter().map(SubgroupSummary::of).collect(),
            indices: self.indices.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub enum PSubnormality {
    Chain(PChainWitness),
    /// Every subgroup reachable from `H` by prime-index steps; none is `G`.
    NotPSubnormal {
        reachable: Vec<Subgroup>,
    },
}

impl PSubnormality {
    pub fn is_p_subnormal(&self) -> bool {
        matches!(self, PSubnormality::Chain(_))
    }

    pub fn witness(&self) -> Option<&PChainWitness> {
        match self {
            PSubnormality::Chain(w) => Some(w),
            PSubnormality::NotPSubnormal { .. } => None,
        }
    }
}

/// Decides whether `h` is P-subnormal in its ambient group using the interval
/// lattice `[h, G]`, or the quotient `G/h` when `h` is normal.
pub fn p_subnormal(h: &Subgroup, caps: &Caps) -> Result<PSubnormality> {
    let group = h.group();
    let whole = group.whole()?;
    if *h == whole {
        return Ok(PSubnormality::Chain(PChainWitness::from_chain(vec![whole])));
    }
    if !h.is_trivial() && whole.is_normal(h)? {
        let q = whole.quotient(h)?;
        let lattice = Lattice::build(&q.image, None, caps.lattice)?;
        return Ok(match lattice.prime_chain(lattice.bottom(), lattice.top()) {
            Some(path) => {
                let chain = path
                    .iter()
                    .map(|&i| q.preimage(lattice.node(i)))
                    .collect::<Result<Vec<_>>>()?;
                PSubnormality::Chain(PChainWitness::from_chain(chain))
            }
            None => PSubnormality::NotPSubnormal {
                reachable: lattice
                    .prime_reachable(lattice.bottom(), lattice.top())
                    .into_iter()
                    .map(|i| q.preimage(lattice.node(i)))
                    .collect::<Result<Vec<_>>>()?,
            },
        });
    }
    let lattice = Lattice::build(group, Some(h), caps.lattice)?;
    Ok(match lattice.prime_chain(lattice.bottom(), lattice.top()) {
        Some(path) => PSubnormality::Chain(PChainWitness::from_nodes(&lattice, &path)),
        None => PSubnormality::NotPSubnormal {
            reachable: lattice
                .prime_reachable(lattice.bottom(), lattice.top())
                .into_iter()
                .map(|i| lattice.node(i).clone())
                .collect(),
        },
    })
}

/// `1 = G₀ ⊂ … ⊂ G_k = G`, normal in `G`, with `Gᵢ/Gᵢ₋₁` a Sylow `pᵢ`-subgroup
/// and `p₁ > p₂ > … > p_k`.
#[derive(Debug, Clone)]
pub struct SylowTowerWitness {
    pub series: Vec<Subgroup>,
    pub primes: Vec<u64>,
    pub factor_orders: Vec<usize>,
}

impl SylowTowerWitness {
    pub fn summary(&self) -> TowerSummary {
        TowerSummary {
            primes: self.primes.clone(),
            factor_orders: self.factor_orders.clone(),
            series: self.series.iter().map(SubgroupSummary::of).collect(),
        }
    }

    pub fn validate(&self) -> bool {
        let Some(top) = self.series.last() else {
            return false;
        };
        let Ok(whole) = top.group().whole() else {
            return false;
        };
        let order = whole.order() as u64;
        *top == whole
            && self.series[0].is_trivial()
            && self.primes.windows(2).all(|w| w[0] > w[1])
            && self.series.iter().all(|n| whole.is_normal(n).unwrap_or(false))
            && self
                .series
                .windows(2)
                .zip(&self.primes)
                .all(|(w, &p)| w[0].is_subgroup_of(&w[1]) && (w[1].order() / w[0].order()) as u64 == p_part(order, p))
    }
}

#[derive(Debug, Clone)]
pub enum TowerOutcome {
    Tower(SylowTowerWitness),
    /// The Sylow subgroup for `prime` is not normal modulo the part built so far.
    NoTower {
        prime: u64,
        partial: Vec<Subgroup>,
    },
}

impl TowerOutcome {
    pub fn exists(&self) -> bool {
        matches!(self, TowerOutcome::Tower(_))
    }
}

/// Peels off the largest prime at each step; works inside `group` by checking
/// that `N·P` is normal for the current partial tower `N`.
pub fn sylow_tower_supersolvable(group: &FiniteGroup) -> Result<TowerOutcome> {
    let whole = group.whole()?;
    let mut primes = whole.primes();
    primes.reverse();
    let mut series = vec![group.trivial()?];
    let mut factor_orders = Vec::new();
    for &p in &primes {
        let current = series.last().unwrap().clone();
        let sylow = whole.sylow(p)?;
        let next = current.join(&sylow);
        let wanted = p_part(whole.order() as u64, p) as usize;
        if next.order() / current.order() != wanted || !whole.is_normal(&next)? {
            return Ok(TowerOutcome::NoTower {
                prime: p,
                partial: series,
            });
        }
        factor_orders.push(wanted);
        series.push(next);
    }
    Ok(TowerOutcome::Tower(SylowTowerWitness {
        series,
        primes,
        factor_orders,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralFlags {
    pub solvable: bool,
    pub nilpotent: bool,
    pub biprimary: bool,
    pub perfect: bool,
}

pub fn structural_flags(group: &FiniteGroup) -> Result<StructuralFlags> {
    let whole = group.whole()?;
    Ok(StructuralFlags {
        solvable: whole.is_solvable(),
        nilpotent: whole
            .primes()
            .iter()
            .all(|&p| whole.sylow(p).and_then(|s| whole.is_normal(&s)).unwrap_or(false)),
        biprimary: whole.primes().len() == 2,
        perfect: whole.derived_subgroup() == whole,
    })
}

#[derive(Debug, Clone)]
pub struct Supersolvability {
    pub supersolvable: bool,
    /// Indices of all maximal subgroups, in lattice order.
    pub maximal_indices: Vec<u64>,
    /// A maximal subgroup of non-prime index.
    pub offending: Option<Subgroup>,
}

/// Huppert's criterion on the full lattice.
pub fn is_supersolvable(group: &FiniteGroup, caps: &Caps) -> Result<Supersolvability> {
    Analysis::new(group, caps)?.supersolvability()
}

pub fn is_w_supersolvable(group: &FiniteGroup, caps: &Caps) -> Result<bool> {
    Ok(Analysis::new(group, caps)?
        .sylow_chains()?
        .iter()
        .all(|s| s.chain.is_some()))
}

pub fn is_in_class_x(group: &FiniteGroup, caps: &Caps) -> Result<bool> {
    Ok(Analysis::new(group, caps)?
        .primary_cyclic_chains()?
        .iter()
        .all(|s| s.chain.is_some()))
}

#[derive(Debug, Clone)]
pub struct SylowChain {
    pub prime: u64,
    pub sylow: Subgroup,
    pub chain: Option<PChainWitness>,
}

#[derive(Debug, Clone)]
pub struct PrimaryChain {
    pub subgroup: Subgroup,
    pub chain: Option<PChainWitness>,
}

/// A group together with its lazily built full subgroup lattice.
pub struct Analysis {
    group: FiniteGroup,
    whole: Subgroup,
    caps: Caps,
    lattice: OnceLock<Result<Lattice>>,
    primary_nodes: OnceLock<Vec<usize>>,
}

impl Analysis {
    pub fn new(group: &FiniteGroup, caps: &Caps) -> Result<Analysis> {
        let group = if group.element_cap() == caps.elements {
            group.clone()
        } else {
            group.recapped(caps.elements)
        };
        let whole = group.whole()?;
        Ok(Analysis {
            group,
            whole,
            caps: *caps,
            lattice: OnceLock::new(),
            primary_nodes: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn whole(&self) -> &Subgroup {
        &self.whole
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn order(&self) -> usize {
        self.whole.order()
    }

    pub fn lattice(&self) -> Result<&Lattice> {
        self.lattice
            .get_or_init(|| Lattice::build(&self.group, None, self.caps.lattice))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn node_of(&self, h: &Subgroup) -> Result<usize> {
        self.lattice()?
            .find(h)
            .ok_or_else(|| GroupError::NotASubgroup("subgroup missing from the lattice".into()))
    }

    pub fn primary_cyclic_nodes(&self) -> Result<&[usize]> {
        let l = self.lattice()?;
        Ok(self.primary_nodes.get_or_init(|| l.primary_cyclic_nodes()))
    }

    pub fn flags(&self) -> Result<StructuralFlags> {
        structural_flags(&self.group)
    }

    pub fn supersolvability(&self) -> Result<Supersolvability> {
        let l = self.lattice()?;
        let covers = l.lower_covers(l.top());
        Ok(Supersolvability {
            supersolvable: covers.iter().all(|c| c.is_prime()),
            maximal_indices: covers.iter().map(|c| c.index as u64).collect(),
            offending: covers.iter().find(|c| !c.is_prime()).map(|c| l.node(c.node).clone()),
        })
    }

    pub fn is_supersolvable(&self) -> Result<bool> {
        Ok(self.lattice()?.is_supersolvable_node(self.lattice()?.top()))
    }

    pub fn chain_to_top(&self, h: &Subgroup) -> Result<Option<PChainWitness>> {
        let l = self.lattice()?;
        let i = self.node_of(h)?;
        Ok(l.prime_chain(i, l.top()).map(|p| PChainWitness::from_nodes(l, &p)))
    }

    pub fn sylow_chains(&self) -> Result<Vec<SylowChain>> {
        self.whole
            .primes()
            .into_iter()
            .map(|p| {
                let sylow = self.whole.sylow(p)?;
                let chain = self.chain_to_top(&sylow)?;
                Ok(SylowChain { prime: p, sylow, chain })
            })
            .collect()
    }

    pub fn primary_cyclic_chains(&self) -> Result<Vec<PrimaryChain>> {
        cyclic_primary_subgroup_reps(&self.group)?
            .into_iter()
            .map(|h| {
                let chain = self.chain_to_top(&h)?;
                Ok(PrimaryChain { subgroup: h, chain })
            })
            .collect()
    }

    pub fn tower(&self) -> Result<TowerOutcome> {
        sylow_tower_supersolvable(&self.group)
    }

    /// Node `i` is in `X`: each primary cyclic node inside it reaches it by prime steps.
    pub fn node_in_x(&self, i: usize) -> Result<bool> {
        let l = self.lattice()?;
        let reach = p_subnormal_below(l, i);
        Ok(self
            .primary_cyclic_nodes()?
            .iter()
            .filter(|&&c| l.contains(c, i))
            .all(|&c| reach[c]))
    }

    /// Node `i` is in `wU`: one Sylow subgroup per prime reaches it by prime steps.
    pub fn node_in_wu(&self, i: usize) -> Result<bool> {
        let l = self.lattice()?;
        let reach = p_subnormal_below(l, i);
        Ok(l.primes_of(i)
            .into_iter()
            .all(|p| l.sylow_of(i, p).map(|s| reach[s]).unwrap_or(false)))
    }

    pub fn node_supersolvable(&self, i: usize) -> Result<bool> {
        Ok(self.lattice()?.is_supersolvable_node(i))
    }

    /// Minimal non-`U`: not supersolvable, every maximal subgroup supersolvable.
    pub fn is_minimal_non_u(&self) -> Result<bool> {
        let l = self.lattice()?;
        let top = l.top();
        Ok(!l.is_supersolvable_node(top) && l.lower_covers(top).iter().all(|c| l.is_supersolvable_node(c.node)))
    }

    pub fn report(&self) -> Result<ClassMembershipReport> {
        let flags = self.flags()?;
        let ss = self.supersolvability()?;
        let sylows = self.sylow_chains()?;
        let primaries = self.primary_cyclic_chains()?;
        let tower = self.tower()?;
        let w_supersolvable = sylows.iter().all(|s| s.chain.is_some());
        let class_x = primaries.iter().all(|s| s.chain.is_some());
        let report = ClassMembershipReport {
            group: self.group.label(),
            order: self.order(),
            flags: ClassFlags {
                supersolvable: ss.supersolvable,
                w_supersolvable,
                class_x,
                tower: tower.exists(),
                solvable: flags.solvable,
                nilpotent: flags.nilpotent,
            },
            maximal_indices: ss.maximal_indices.clone(),
            tower: match &tower {
                TowerOutcome::Tower(w) => Some(w.summary()),
                TowerOutcome::NoTower { .. } => None,
            },
            sylow_chains: sylows
                .iter()
                .map(|s| SylowChainSummary {
                    prime: s.prime,
                    sylow: SubgroupSummary::of(&s.sylow),
                    chain: s.chain.as_ref().map(PChainWitness::summary),
                })
                .collect(),
            primary_cyclic_chains: primaries
                .iter()
                .map(|s| PrimaryChainSummary {
                    subgroup: SubgroupSummary::of(&s.subgroup),
                    chain: s.chain.as_ref().map(PChainWitness::summary),
                })
                .collect(),
            counterexamples: Counterexamples {
                supersolvable: ss.offending.as_ref().map(SubgroupSummary::of),
                w_supersolvable: sylows
                    .iter()
                    .find(|s| s.chain.is_none())
                    .map(|s| SubgroupSummary::of(&s.sylow)),
                class_x: primaries
                    .iter()
                    .find(|s| s.chain.is_none())
                    .map(|s| SubgroupSummary::of(&s.subgroup)),
                tower_prime: match tower {
                    TowerOutcome::NoTower { prime, .. } => Some(prime),
                    TowerOutcome::Tower(_) => None,
                },
            },
            lattice: self.lattice()?.stats(),
        };
        Ok(report)
    }
}

/// `reach[j]` is true iff node `j ⊆ i` has a prime-index chain up to `i`.
pub fn p_subnormal_below(l: &Lattice, i: usize) -> Vec<bool> {
    let mut reach = vec![false; l.len()];
    reach[i] = true;
    let mut stack = vec![i];
    while let Some(k) = stack.pop() {
        for c in l.lower_covers(k) {
            if c.is_prime() && !reach[c.node] {
                reach[c.node] = true;
                stack.push(c.node);
            }
        }
    }
    reach
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupSummary {
    pub order: usize,
    pub generators: Vec<String>,
}

impl SubgroupSummary {
    pub fn of(h: &Subgroup) -> Self {
        SubgroupSummary {
            order: h.order(),
            generators: h.generator_strings(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainSummary {
    pub chain: Vec<SubgroupSummary>,
    pub indices: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerSummary {
    pub primes: Vec<u64>,
    pub factor_orders: Vec<usize>,
    pub series: Vec<SubgroupSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowChainSummary {
    pub prime: u64,
    pub sylow: SubgroupSummary,
    pub chain: Option<ChainSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimaryChainSummary {
    pub subgroup: SubgroupSummary,
    pub chain: Option<ChainSummary>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    #[serde(rename = "U")]
    pub supersolvable: bool,
    #[serde(rename = "wU")]
    pub w_supersolvable: bool,
    #[serde(rename = "X")]
    pub class_x: bool,
    #[serde(rename = "D")]
    pub tower: bool,
    pub solvable: bool,
    pub nilpotent: bool,
}

impl ClassFlags {
    /// `N ⇒ U ⇒ wU ⇒ X ⇒ D ⇒ solvable`.
    pub fn implications_hold(&self) -> bool {
        let imp = |a: bool, b: bool| !a || b;
        imp(self.nilpotent, self.supersolvable)
            && imp(self.supersolvable, self.w_supersolvable)
            && imp(self.w_supersolvable, self.class_x)
            && imp(self.class_x, self.tower)
            && imp(self.tower, self.solvable)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexamples {
    pub supersolvable: Option<SubgroupSummary>,
    pub w_supersolvable: Option<SubgroupSummary>,
    pub class_x: Option<SubgroupSummary>,
    pub tower_prime: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassMembershipReport {
    pub group: String,
    pub order: usize,
    pub flags: ClassFlags,
    pub maximal_indices: Vec<u64>,
    pub tower: Option<TowerSummary>,
    pub sylow_chains: Vec<SylowChainSummary>,
    pub primary_cyclic_chains: Vec<PrimaryChainSummary>,
    pub counterexamples: Counterexamples,
    pub lattice: LatticeStats,
}

pub fn classify(group: &FiniteGroup, caps: &Caps) -> Result<ClassMembershipReport> {
    Analysis::new(group, caps)?.report()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn g(degree: usize, gens: &str) -> FiniteGroup {
        FiniteGroup::new(degree, Permutation::parse_list(gens, degree).unwrap(), None).unwrap()
    }

    fn sub(grp: &FiniteGroup, gens: &str) -> Subgroup {
        grp.subgroup_from_perms(&Permutation::parse_list(gens, grp.degree()).unwrap())
            .unwrap()
    }

    #[test]
    fn example_one_chains() {
        let caps = Caps::default();
        let a5 = g(5, "(1 2 3 4 5),(1 2 3)");
        let a4 = sub(&a5, "(1 2 3),(2 3 4)");
        let out = p_subnormal(&a4, &caps).unwrap();
        let w = out.witness().unwrap();
        assert_eq!(w.indices, vec![5]);
        assert!(w.validate());

        let a4g = g(4, "(1 2 3),(2 3 4)");
        let z3 = sub(&a4g, "(1 2 3)");
        match p_subnormal(&z3, &caps).unwrap() {
            PSubnormality::NotPSubnormal { reachable } => {
                assert_eq!(reachable, vec![z3.clone()]);
            }
            _ => panic!("Z3 is not P-subnormal in A4"),
        }
    }

    #[test]
    fn trivial_chain_and_s4() {
        let caps = Caps::default();
        let s4 = g(4, "(1 2),(1 2 3 4)");
        let w = p_subnormal(&s4.whole().unwrap(), &caps).unwrap();
        assert!(w.witness().unwrap().indices.is_empty());
        let c4 = sub(&s4, "(1 2 3 4)");
        let w = p_subnormal(&c4, &caps).unwrap();
        let w = w.witness().unwrap();
        assert_eq!(w.indices, vec![2, 3]);
        assert_eq!(w.chain[1].order(), 8);
    }

    #[test]
    fn normal_shortcut_maps_back() {
        let caps = Caps::default();
        let s4 = g(4, "(1 2),(1 2 3 4)");
        let v4 = sub(&s4, "(1 2)(3 4),(1 3)(2 4)");
        let w = p_subnormal(&v4, &caps).unwrap();
        let w = w.witness().unwrap();
        assert!(w.validate());
        assert_eq!(w.chain[0], v4);
        assert_eq!(w.chain.last().unwrap().order(), 24);
    }

    #[test]
    fn supersolvability() {
        let caps = Caps::default();
        let s3 = g(3, "(1 2),(1 2 3)");
        let r = is_supersolvable(&s3, &caps).unwrap();
        assert!(r.supersolvable);
        let mut idx = r.maximal_indices.clone();
        idx.sort();
        idx.dedup();
        assert_eq!(idx, vec![2, 3]);
        let a4 = g(4, "(1 2 3),(2 3 4)");
        let r = is_supersolvable(&a4, &caps).unwrap();
        assert!(!r.supersolvable);
        assert_eq!(r.offending.unwrap().order(), 3);
    }

    #[test]
    fn flags() {
        let a5 = g(5, "(1 2 3 4 5),(1 2 3)");
        let f = structural_flags(&a5).unwrap();
        assert_eq!(
            f,
            StructuralFlags {
                solvable: false,
                nilpotent: false,
                biprimary: false,
                perfect: true
            }
        );
        let z12 = g(12, "(1 2 3 4 5 6 7 8 9 10 11 12)");
        let f = structural_flags(&z12).unwrap();
        assert!(f.solvable && f.nilpotent && f.biprimary && !f.perfect);
        let s4 = g(4, "(1 2),(1 2 3 4)");
        let f = structural_flags(&s4).unwrap();
        assert!(f.solvable && !f.nilpotent && f.biprimary);
    }

    #[test]
    fn towers() {
        let a5 = g(5, "(1 2 3 4 5),(1 2 3)");
        match sylow_tower_supersolvable(&a5).unwrap() {
            TowerOutcome::NoTower { prime, .. } => assert_eq!(prime, 5),
            _ => panic!("A5 has no tower"),
        }
        let q8 = g(8, "(1 2 4 7)(3 6 8 5),(1 3 4 8)(2 5 7 6)");
        match sylow_tower_supersolvable(&q8).unwrap() {
            TowerOutcome::Tower(w) => {
                assert!(w.validate());
                assert_eq!(w.series.len(), 2);
            }
            _ => panic!("p-groups have towers"),
        }
        let s3 = g(3, "(1 2),(1 2 3)");
        match sylow_tower_supersolvable(&s3).unwrap() {
            TowerOutcome::Tower(w) => assert_eq!(w.primes, vec![3, 2]),
            _ => panic!(),
        }
    }

    #[test]
    fn s4_not_in_x() {
        let caps = Caps::default();
        let s4 = g(4, "(1 2),(1 2 3 4)");
        let r = classify(&s4, &caps).unwrap();
        assert!(!r.flags.class_x);
        assert!(r.flags.implications_hold());
        assert_eq!(r.counterexamples.class_x.as_ref().unwrap().order, 3);
    }
}
