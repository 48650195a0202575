//! Subgroup lattices and interval lattices `[H, G]`.
//!
//! Nodes are found by closing the cyclic atoms (or `⟨H, g⟩` for an interval)
//! under extension by single elements. Only one subgroup per conjugacy class
//! is extended; the rest of each class is added as its conjugation orbit.
//! Conjugation is by `G` for the full lattice and by `N_G(H)` for an interval.

use std::collections::{HashMap, VecDeque};

use crate::bitset::MemberSet;
use crate::error::{GroupError, Result};
use crate::group::{is_prime, is_prime_power, primes_dividing, FiniteGroup};
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cover {
    pub node: usize,
    pub index: usize,
}

impl Cover {
    pub fn is_prime(&self) -> bool {
        is_prime(self.index as u64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct LatticeStats {
    pub nodes: usize,
    pub classes: usize,
    pub max_chain: usize,
}

pub struct Lattice {
    group: FiniteGroup,
    base: Option<Subgroup>,
    nodes: Vec<Subgroup>,
    lookup: HashMap<MemberSet, usize>,
    up: Vec<Vec<Cover>>,
    down: Vec<Vec<Cover>>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lattice")
            .field("group", &self.group.label())
            .field("nodes", &self.nodes.len())
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl Lattice {
    /// Full lattice when `base` is `None`, otherwise the interval `[base, G]`.
    pub fn build(group: &FiniteGroup, base: Option<&Subgroup>, node_cap: usize) -> Result<Lattice> {
        let t = group.table()?;
        let n = t.len();
        let whole = group.whole()?;
        let bottom = match base {
            Some(b) => {
                if !b.group().same_as(group) {
                    return Err(GroupError::NotASubgroup("base belongs to a different group".into()));
                }
                b.clone()
            }
            None => group.trivial()?,
        };
        let acting: Vec<usize> = match base {
            Some(b) => whole.normalizer(b)?.generators().iter().map(|&g| g as usize).collect(),
            None => whole.generators().iter().map(|&g| g as usize).collect(),
        };
        let conj_tables: Vec<Vec<u32>> = acting
            .iter()
            .map(|&x| (0..n).map(|a| t.conjugate(a, x) as u32).collect())
            .collect();

        // one extension element per distinct <bottom, g>
        let mut seen_ext: HashMap<MemberSet, ()> = HashMap::new();
        let mut ext = Vec::new();
        for g in 0..n {
            if bottom.contains(g) {
                continue;
            }
            let j = if bottom.is_trivial() {
                cyclic_members(group, g)
            } else {
                bottom.extend(g).members().clone()
            };
            if seen_ext.insert(j, ()).is_none() {
                ext.push(g);
            }
        }

        let mut nodes: Vec<Subgroup> = Vec::new();
        let mut orbit_id: Vec<usize> = Vec::new();
        let mut lookup: HashMap<MemberSet, usize> = HashMap::new();
        let mut reps: VecDeque<usize> = VecDeque::new();
        let mut orbits = 0usize;

        let mut add_orbit = |h: Subgroup,
                             nodes: &mut Vec<Subgroup>,
                             orbit_id: &mut Vec<usize>,
                             lookup: &mut HashMap<MemberSet, usize>|
         -> Result<usize> {
            let id = orbits;
            orbits += 1;
            let first = nodes.len();
            lookup.insert(h.members().clone(), first);
            nodes.push(h);
            orbit_id.push(id);
            let mut head = first;
            while head < nodes.len() {
                for table in &conj_tables {
                    let members = nodes[head].members().map(|a| table[a] as usize);
                    if lookup.contains_key(&members) {
                        continue;
                    }
                    if nodes.len() >= node_cap {
                        return Err(GroupError::CapExceeded {
                            what: "lattice node",
                            limit: node_cap,
                        });
                    }
                    let gens = nodes[head].generators().iter().map(|&g| table[g as usize]).collect();
                    lookup.insert(members.clone(), nodes.len());
                    nodes.push(Subgroup::from_parts(group.clone(), members, gens));
                    orbit_id.push(id);
                }
                head += 1;
            }
            Ok(first)
        };

        let first = add_orbit(bottom.clone(), &mut nodes, &mut orbit_id, &mut lookup)?;
        reps.push_back(first);
        while let Some(r) = reps.pop_front() {
            let k = nodes[r].clone();
            for &g in &ext {
                if k.contains(g) {
                    continue;
                }
                let j = k.extend(g);
                if lookup.contains_key(j.members()) {
                    continue;
                }
                if nodes.len() >= node_cap {
                    return Err(GroupError::CapExceeded {
                        what: "lattice node",
                        limit: node_cap,
                    });
                }
                let idx = add_orbit(j, &mut nodes, &mut orbit_id, &mut lookup)?;
                reps.push_back(idx);
            }
        }

        // canonical numbering: by order, then by member bit set
        let mut perm: Vec<usize> = (0..nodes.len()).collect();
        perm.sort_by(|&a, &b| {
            nodes[a]
                .order()
                .cmp(&nodes[b].order())
                .then_with(|| nodes[a].members().cmp(nodes[b].members()))
        });
        let nodes: Vec<Subgroup> = perm.iter().map(|&i| nodes[i].clone()).collect();
        let orbit_id: Vec<usize> = perm.iter().map(|&i| orbit_id[i]).collect();
        let lookup: HashMap<MemberSet, usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, h)| (h.members().clone(), i))
            .collect();

        let mut class_index: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; nodes.len()];
        for (i, &o) in orbit_id.iter().enumerate() {
            let c = *class_index.entry(o).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(i);
            class_of[i] = c;
        }

        let (up, down) = covers(&nodes);
        Ok(Lattice {
            group: group.clone(),
            base: base.cloned(),
            nodes,
            lookup,
            up,
            down,
            classes,
            class_of,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn base(&self) -> Option<&Subgroup> {
        self.base.as_ref()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Subgroup] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Subgroup {
        &self.nodes[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn find(&self, h: &Subgroup) -> Option<usize> {
        self.lookup.get(h.members()).copied()
    }

    pub fn find_members(&self, m: &MemberSet) -> Option<usize> {
        self.lookup.get(m).copied()
    }

    pub fn upper_covers(&self, i: usize) -> &[Cover] {
        &self.up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[Cover] {
        &self.down[i]
    }

    pub fn contains(&self, small: usize, big: usize) -> bool {
        self.nodes[small].is_subgroup_of(&self.nodes[big])
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Nodes normal in the ambient group (singleton conjugacy classes; full lattice only).
    pub fn normal_nodes(&self) -> Vec<usize> {
        self.classes.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect()
    }

    pub fn maximal_subgroups(&self) -> Vec<Subgroup> {
        self.down[self.top()]
            .iter()
            .map(|c| self.nodes[c.node].clone())
            .collect()
    }

    /// Intersection of the maximal subgroups of node `i`; `i` itself when it has none.
    pub fn frattini_of(&self, i: usize) -> usize {
        let covers = &self.down[i];
        if covers.is_empty() {
            return i;
        }
        let mut m = self.nodes[covers[0].node].members().clone();
        for c in &covers[1..] {
            m = m.intersection(self.nodes[c.node].members());
        }
        self.lookup[&m]
    }

    pub fn frattini(&self) -> Subgroup {
        self.nodes[self.frattini_of(self.top())].clone()
    }

    /// Huppert's criterion on node `i`: every maximal subgroup has prime index.
    pub fn is_supersolvable_node(&self, i: usize) -> bool {
        self.down[i].iter().all(Cover::is_prime)
    }

    /// Every maximal subgroup of node `i` is nilpotent.
    pub fn maximals_nilpotent(&self, i: usize) -> bool {
        self.down[i].iter().all(|c| self.nodes[c.node].is_nilpotent())
    }

    /// Nodes reachable from `from` by prime-index covers while staying inside `within`.
    pub fn prime_reachable(&self, from: usize, within: usize) -> Vec<usize> {
        let mut seen = vec![false; self.nodes.len()];
        let mut out = vec![from];
        seen[from] = true;
        let mut head = 0;
        while head < out.len() {
            let k = out[head];
            for c in &self.up[k] {
                if !seen[c.node] && c.is_prime() && self.contains(c.node, within) {
                    seen[c.node] = true;
                    out.push(c.node);
                }
            }
            head += 1;
        }
        out.sort_unstable();
        out
    }

    /// Shortest prime-index ascent from `from` to `to`, as node indices.
    pub fn prime_chain(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        if !self.contains(from, to) {
            return None;
        }
        let mut prev = vec![usize::MAX; self.nodes.len()];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(k) = queue.pop_front() {
            if k == to {
                let mut path = vec![to];
                let mut x = to;
                while x != from {
                    x = prev[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for c in &self.up[k] {
                if prev[c.node] == usize::MAX && c.is_prime() && self.contains(c.node, to) {
                    prev[c.node] = k;
                    queue.push_back(c.node);
                }
            }
        }
        None
    }

    pub fn is_p_subnormal_in(&self, from: usize, to: usize) -> bool {
        self.prime_chain(from, to).is_some()
    }

    /// Nodes that are cyclic of prime-power order greater than one.
    pub fn primary_cyclic_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| {
                let h = &self.nodes[i];
                h.order() > 1 && is_prime_power(h.order() as u64) && h.is_cyclic()
            })
            .collect()
    }

    /// A Sylow p-subgroup of node `i` (the first in canonical order).
    pub fn sylow_of(&self, i: usize, p: u64) -> Option<usize> {
        let target = crate::group::p_part(self.nodes[i].order() as u64, p) as usize;
        if target == 1 {
            return None;
        }
        (0..i).find(|&j| self.nodes[j].order() == target && self.contains(j, i))
    }

    pub fn primes_of(&self, i: usize) -> Vec<u64> {
        primes_dividing(self.nodes[i].order() as u64)
    }

    pub fn stats(&self) -> LatticeStats {
        // longest chain from the bottom, in cover steps
        let mut depth = vec![0usize; self.nodes.len()];
        for i in 0..self.nodes.len() {
            for c in &self.up[i] {
                depth[c.node] = depth[c.node].max(depth[i] + 1);
            }
        }
        LatticeStats {
            nodes: self.nodes.len(),
            classes: self.classes.len(),
            max_chain: depth[self.top()],
        }
    }
}

fn cyclic_members(group: &FiniteGroup, g: usize) -> MemberSet {
    let t = group.table().expect("enumerated");
    let mut m = MemberSet::new(t.len());
    let mut x = 0;
    loop {
        m.insert(x);
        x = t.mul(x, g);
        if x == 0 {
            return m;
        }
    }
}

/// Covers for nodes sorted by order: `j` covers `i` iff no cover of `i` found so far lies in `j`.
fn covers(nodes: &[Subgroup]) -> (Vec<Vec<Cover>>, Vec<Vec<Cover>>) {
    let len = nodes.len();
    let mut up: Vec<Vec<Cover>> = vec![Vec::new(); len];
    let mut down: Vec<Vec<Cover>> = vec![Vec::new(); len];
    for i in 0..len {
        let oi = nodes[i].order();
        for j in i + 1..len {
            let oj = nodes[j].order();
            if oj == oi || !oj.is_multiple_of(oi) || !nodes[i].is_subgroup_of(&nodes[j]) {
                continue;
            }
            if up[i].iter().any(|c| nodes[c.node].is_subgroup_of(&nodes[j])) {
                continue;
            }
            up[i].push(Cover {
                node: j,
                index: oj / oi,
            });
        }
        for c in up[i].clone() {
            down[c.node].push(Cover {
                node: i,
                index: c.index,
            });
        }
    }
    (up, down)
}

/// One representative per conjugacy class of nontrivial cyclic subgroups of prime-power order.
pub fn cyclic_primary_subgroup_reps(group: &FiniteGroup) -> Result<Vec<Subgroup>> {
    let t = group.table()?;
    let gens = group.whole()?.generators().to_vec();
    let mut seen: HashMap<MemberSet, ()> = HashMap::new();
    let mut reps = Vec::new();
    for g in 1..t.len() {
        if !is_prime_power(t.element_order(g)) {
            continue;
        }
        let m = cyclic_members(group, g);
        if seen.contains_key(&m) {
            continue;
        }
        // whole conjugacy orbit, marked seen
        let mut orbit = vec![m.clone()];
        seen.insert(m, ());
        let mut head = 0;
        while head < orbit.len() {
            for &x in &gens {
                let c = orbit[head].map(|a| t.conjugate(a, x as usize));
                if !seen.contains_key(&c) {
                    seen.insert(c.clone(), ());
                    orbit.push(c);
                }
            }
            head += 1;
        }
        reps.push(group.subgroup(&[g])?);
    }
    reps.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn g(degree: usize, gens: &str) -> FiniteGroup {
        FiniteGroup::new(degree, Permutation::parse_list(gens, degree).unwrap(), None).unwrap()
    }

    fn orders(l: &Lattice) -> Vec<usize> {
        l.nodes().iter().map(|h| h.order()).collect()
    }

    #[test]
    fn a4_lattice() {
        let a4 = g(4, "(1 2 3),(2 3 4)");
        let l = Lattice::build(&a4, None, 1000).unwrap();
        assert_eq!(orders(&l), vec![1, 2, 2, 2, 3, 3, 3, 3, 4, 12]);
        assert_eq!(l.classes().len(), 5);
        let max: Vec<usize> = l.maximal_subgroups().iter().map(|h| h.order()).collect();
        assert_eq!(max.iter().filter(|&&o| o == 4).count(), 1);
        assert_eq!(max.iter().filter(|&&o| o == 3).count(), 4);
        assert!(l.frattini().is_trivial());
        assert!(!l.is_supersolvable_node(l.top()));
    }

    #[test]
    fn s3_and_s4_lattices() {
        let s3 = g(3, "(1 2),(1 2 3)");
        assert_eq!(Lattice::build(&s3, None, 1000).unwrap().len(), 6);
        let s4 = g(4, "(1 2),(1 2 3 4)");
        let l = Lattice::build(&s4, None, 1000).unwrap();
        assert_eq!(l.len(), 30);
        assert_eq!(l.classes().len(), 11);
        let mut max: Vec<usize> = l.maximal_subgroups().iter().map(|h| h.order()).collect();
        max.sort();
        assert_eq!(max, vec![6, 6, 6, 6, 8, 8, 8, 12]);
    }

    #[test]
    fn frattini_examples() {
        let c4 = g(4, "(1 2 3 4)");
        assert_eq!(Lattice::build(&c4, None, 100).unwrap().frattini().order(), 2);
        let q8 = g(8, "(1 2 4 7)(3 6 8 5),(1 3 4 8)(2 5 7 6)");
        let l = Lattice::build(&q8, None, 100).unwrap();
        assert_eq!(l.frattini().order(), 2);
        assert_eq!(l.frattini(), q8.whole().unwrap().center());
        let c5 = g(5, "(1 2 3 4 5)");
        let l = Lattice::build(&c5, None, 100).unwrap();
        assert_eq!(l.maximal_subgroups().len(), 1);
        assert!(l.maximal_subgroups()[0].is_trivial());
    }

    #[test]
    fn prime_edges_are_covers() {
        let s4 = g(4, "(1 2),(1 2 3 4)");
        let l = Lattice::build(&s4, None, 1000).unwrap();
        for i in 0..l.len() {
            for j in 0..l.len() {
                if i != j && l.contains(i, j) {
                    let idx = l.node(j).order() / l.node(i).order();
                    if is_prime(idx as u64) {
                        assert!(l.upper_covers(i).iter().any(|c| c.node == j));
                    }
                }
            }
        }
    }

    #[test]
    fn interval_lattice() {
        let s4 = g(4, "(1 2),(1 2 3 4)");
        let c4 = s4
            .subgroup_from_perms(&[Permutation::parse("(1 2 3 4)", 4).unwrap()])
            .unwrap();
        let l = Lattice::build(&s4, Some(&c4), 1000).unwrap();
        assert_eq!(orders(&l), vec![4, 8, 24]);
        let chain = l.prime_chain(l.bottom(), l.top()).unwrap();
        assert_eq!(chain.len(), 3);
        for h in l.nodes() {
            assert!(c4.is_subgroup_of(h));
        }
    }

    #[test]
    fn primary_cyclic_reps() {
        let a4 = g(4, "(1 2 3),(2 3 4)");
        let r: Vec<usize> = cyclic_primary_subgroup_reps(&a4)
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(r, vec![2, 3]);
        let c4 = g(4, "(1 2 3 4)");
        let r: Vec<usize> = cyclic_primary_subgroup_reps(&c4)
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(r, vec![2, 4]);
        let s4 = g(4, "(1 2),(1 2 3 4)");
        let r: Vec<usize> = cyclic_primary_subgroup_reps(&s4)
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(r, vec![2, 2, 3, 4]);
    }

    #[test]
    fn node_cap() {
        let s4 = g(4, "(1 2),(1 2 3 4)");
        assert!(matches!(
            Lattice::build(&s4, None, 10),
            Err(GroupError::CapExceeded { .. })
        ));
    }
}
