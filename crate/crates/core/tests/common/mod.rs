//! Brute-force oracles shared by the integration tests. They work on raw
//! image vectors and share no code with the library beyond reading
//! generator images.

use std::collections::{BTreeSet, HashMap};

use psubnormal::catalog::{corpus, CorpusSpec};
use psubnormal::{Caps, FiniteGroup, Permutation};

/// Elements closed under composition, with a full multiplication table.
pub struct Oracle {
    pub elements: Vec<Vec<u32>>,
    mul: Vec<Vec<usize>>,
}

fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl Oracle {
    pub fn new(group: &FiniteGroup) -> Oracle {
        let gens: Vec<Vec<u32>> = group.generators().iter().map(|g| g.images().to_vec()).collect();
        let identity: Vec<u32> = (0..group.degree() as u32).collect();
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut i = 0;
        while i < elements.len() {
            for g in &gens {
                let y = compose(&elements[i], g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            i += 1;
        }
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        Oracle { elements, mul }
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    fn generate(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.elements.len()];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            for &g in gens {
                let y = self.mul[out[i]][g];
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Closure of the cyclic subgroups under joins. Every subgroup is the join
    /// of its cyclic subgroups, so joining with cyclic subgroups reaches all.
    pub fn subgroups(&self) -> Vec<BTreeSet<usize>> {
        let n = self.elements.len();
        let cyclic: BTreeSet<Vec<usize>> = (0..n).map(|g| self.generate(&[g])).collect();
        let cyclic_gens: Vec<(Vec<usize>, usize)> = cyclic
            .iter()
            .map(|c| {
                let g = *c.iter().find(|&&x| self.generate(&[x]) == *c).unwrap();
                (c.clone(), g)
            })
            .collect();
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for (c, g) in &cyclic_gens {
            all.insert(c.clone());
            frontier.push((c.clone(), vec![*g]));
        }
        while let Some((h, gens)) = frontier.pop() {
            for (c, g) in &cyclic_gens {
                if c.iter().all(|x| h.binary_search(x).is_ok()) {
                    continue;
                }
                let mut joined_gens = gens.clone();
                joined_gens.push(*g);
                let j = self.generate(&joined_gens);
                if all.insert(j.clone()) {
                    frontier.push((j, joined_gens));
                }
            }
        }
        all.into_iter().map(|v| v.into_iter().collect()).collect()
    }

    pub fn perms(&self, set: &BTreeSet<usize>) -> Vec<Permutation> {
        set.iter()
            .map(|&i| Permutation::from_images(self.elements[i].clone()).unwrap())
            .collect()
    }
}

/// Every chain with prime indices from each subgroup, by exhaustive recursion.
pub fn all_chains_reach(subgroups: &[BTreeSet<usize>], order: usize) -> Vec<bool> {
    fn go(i: usize, subgroups: &[BTreeSet<usize>], order: usize, memo: &mut Vec<Option<bool>>) -> bool {
        if let Some(v) = memo[i] {
            return v;
        }
        let h = &subgroups[i];
        let mut found = h.len() == order;
        for (j, k) in subgroups.iter().enumerate() {
            if found {
                break;
            }
            if k.len() > h.len() && k.len() % h.len() == 0 && is_prime(k.len() / h.len()) && h.is_subset(k) {
                found = go(j, subgroups, order, memo);
            }
        }
        memo[i] = Some(found);
        found
    }
    let mut memo = vec![None; subgroups.len()];
    (0..subgroups.len())
        .map(|i| go(i, subgroups, order, &mut memo))
        .collect()
}

/// Default corpus groups of order at most `max_order`, in corpus order.
pub fn small_corpus(max_order: usize) -> Vec<(String, FiniteGroup)> {
    let caps = Caps::default();
    corpus(&CorpusSpec::default(), &caps)
        .unwrap()
        .entries
        .into_iter()
        .filter(|e| e.group.order().unwrap() <= max_order)
        .map(|e| (e.descriptor, e.group))
        .collect()
}
