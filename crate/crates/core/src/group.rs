//! Permutation groups given by generators, with a lazily enumerated element table.
//!
//! Element indices are assigned by breadth-first closure from the identity,
//! multiplying on the right by the generators in the given order. Index 0 is
//! always the identity. Every subgroup handle is a bit set over these indices.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::bitset::MemberSet;
use crate::error::{GroupError, Result};
use crate::perm::Permutation;
use crate::subgroup::Subgroup;

pub const DEFAULT_ELEMENT_CAP: usize = 20_000;
pub const DEFAULT_LATTICE_CAP: usize = 200_000;

/// Largest order for which a full multiplication table is stored.
const MULT_TABLE_LIMIT: usize = 2_500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    pub elements: usize,
    pub lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            elements: DEFAULT_ELEMENT_CAP,
            lattice: DEFAULT_LATTICE_CAP,
        }
    }
}

pub struct ElementTable {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    /// `right_gen[i * ngens + s]` = index of `elements[i] * gen[s]`.
    right_gen: Vec<u32>,
    ngens: usize,
    inverse: Vec<u32>,
    orders: Vec<u64>,
    mult: Option<Vec<u32>>,
}

impl ElementTable {
    fn enumerate(generators: &[Permutation], degree: usize, cap: usize) -> Result<Self> {
        let ngens = generators.len();
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0u32);
        let mut right_gen = Vec::new();
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
        let mut head = 0;
        while head < elements.len() {
            for (s, g) in generators.iter().enumerate() {
                let y = elements[head].compose(g);
                let next = index.len() as u32;
                let idx = *index.entry(y.clone()).or_insert(next);
                if idx == next {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded {
                            what: "element",
                            limit: cap,
                        });
                    }
                    elements.push(y);
                    parent.push((head as u32, s as u32));
                }
                right_gen.push(idx);
            }
            head += 1;
        }
        let n = elements.len();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect::<Vec<_>>();

        let mult = if n <= MULT_TABLE_LIMIT {
            let mut m = vec![0u32; n * n];
            for i in 0..n {
                m[i * n] = i as u32;
            }
            for j in 1..n {
                let (pj, s) = parent[j];
                let (pj, s) = (pj as usize, s as usize);
                for i in 0..n {
                    let left = m[i * n + pj] as usize;
                    m[i * n + j] = right_gen[left * ngens + s];
                }
            }
            Some(m)
        } else {
            None
        };

        let mut table = ElementTable {
            elements,
            index,
            right_gen,
            ngens,
            inverse,
            orders: Vec::new(),
            mult,
        };
        table.orders = (0..n).map(|i| table.elements[i].order()).collect();
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mult {
            Some(m) => m[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    #[inline]
    pub fn times_generator(&self, a: usize, s: usize) -> usize {
        self.right_gen[a * self.ngens + s] as usize
    }

    /// `x⁻¹ a x`.
    #[inline]
    pub fn conjugate(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), a), x)
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }
}

struct GroupInner {
    degree: usize,
    generators: Vec<Permutation>,
    name: Option<String>,
    cap: usize,
    table: OnceLock<Result<ElementTable>>,
}

/// A permutation group. Cloning is cheap and clones share the element table.
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupInner>);

impl FiniteGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>, name: Option<String>) -> Result<Self> {
        Self::with_cap(degree, generators, name, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(degree: usize, generators: Vec<Permutation>, name: Option<String>, cap: usize) -> Result<Self> {
        if degree == 0 {
            return Err(GroupError::InvalidPermutation("degree must be positive".into()));
        }
        if generators.is_empty() {
            return Err(GroupError::InvalidPermutation(
                "at least one generator is required".into(),
            ));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::InvalidPermutation(format!(
                "generator {g} has degree {} but the group has degree {degree}",
                g.degree()
            )));
        }
        Ok(FiniteGroup(Arc::new(GroupInner {
            degree,
            generators,
            name,
            cap,
            table: OnceLock::new(),
        })))
    }

    /// Same generators, different element cap (fresh, uncomputed table).
    pub fn recapped(&self, cap: usize) -> FiniteGroup {
        FiniteGroup(Arc::new(GroupInner {
            degree: self.0.degree,
            generators: self.0.generators.clone(),
            name: self.0.name.clone(),
            cap,
            table: OnceLock::new(),
        }))
    }

    pub fn renamed(&self, name: impl Into<String>) -> FiniteGroup {
        FiniteGroup(Arc::new(GroupInner {
            degree: self.0.degree,
            generators: self.0.generators.clone(),
            name: Some(name.into()),
            cap: self.0.cap,
            table: OnceLock::new(),
        }))
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.0.generators
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    pub fn label(&self) -> String {
        match &self.0.name {
            Some(n) => n.clone(),
            None => format!("<{} generators on {} points>", self.0.generators.len(), self.0.degree),
        }
    }

    pub fn element_cap(&self) -> usize {
        self.0.cap
    }

    pub fn table(&self) -> Result<&ElementTable> {
        self.0
            .table
            .get_or_init(|| ElementTable::enumerate(&self.0.generators, self.0.degree, self.0.cap))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.table()?.len())
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree() {
            return Err(GroupError::InvalidPermutation(format!(
                "permutation of degree {} in a group of degree {}",
                p.degree(),
                self.degree()
            )));
        }
        Ok(())
    }

    pub fn is_member(&self, p: &Permutation) -> Result<bool> {
        self.check_degree(p)?;
        Ok(self.table()?.index_of(p).is_some())
    }

    pub fn index_of(&self, p: &Permutation) -> Result<Option<usize>> {
        self.check_degree(p)?;
        Ok(self.table()?.index_of(p))
    }

    pub fn generator_indices(&self) -> Result<Vec<usize>> {
        let t = self.table()?;
        Ok(self
            .0
            .generators
            .iter()
            .map(|g| t.index_of(g).expect("generator is a member"))
            .collect())
    }

    pub fn whole(&self) -> Result<Subgroup> {
        let n = self.order()?;
        let gens = self.generator_indices()?;
        let mut gens_dedup: Vec<u32> = Vec::new();
        for g in gens {
            if g != 0 && !gens_dedup.contains(&(g as u32)) {
                gens_dedup.push(g as u32);
            }
        }
        Ok(Subgroup::from_parts(self.clone(), MemberSet::full(n), gens_dedup))
    }

    pub fn trivial(&self) -> Result<Subgroup> {
        let n = self.order()?;
        Ok(Subgroup::from_parts(
            self.clone(),
            MemberSet::from_indices(n, [0]),
            Vec::new(),
        ))
    }

    /// Subgroup generated by the given permutations, which must be members.
    pub fn subgroup_from_perms(&self, perms: &[Permutation]) -> Result<Subgroup> {
        let mut idx = Vec::with_capacity(perms.len());
        for p in perms {
            match self.index_of(p)? {
                Some(i) => idx.push(i),
                None => {
                    return Err(GroupError::NotASubgroup(format!(
                        "{p} is not an element of {}",
                        self.label()
                    )))
                }
            }
        }
        self.subgroup(&idx)
    }

    pub fn subgroup(&self, generators: &[usize]) -> Result<Subgroup> {
        let mut h = self.trivial()?;
        for &g in generators {
            h = h.extend(g);
        }
        Ok(h)
    }

    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Element-order multiset as a sorted list of (order, count).
    pub fn element_order_histogram(&self) -> Result<Vec<(u64, usize)>> {
        let t = self.table()?;
        let mut map = std::collections::BTreeMap::new();
        for i in 0..t.len() {
            *map.entry(t.element_order(i)).or_insert(0usize) += 1;
        }
        Ok(map.into_iter().collect())
    }

    /// Conjugacy classes of elements as sorted index lists, ordered by first member.
    pub fn conjugacy_classes(&self) -> Result<Vec<Vec<usize>>> {
        let t = self.table()?;
        let gens = self.generator_indices()?;
        let n = t.len();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut class = vec![start];
            let mut head = 0;
            while head < class.len() {
                let x = class[head];
                for &g in &gens {
                    let y = t.conjugate(x, g);
                    if !seen[y] {
                        seen[y] = true;
                        class.push(y);
                    }
                }
                head += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        Ok(classes)
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.0.name)
            .field("degree", &self.0.degree)
            .field("generators", &self.0.generators)
            .finish()
    }
}

pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn primes_dividing(n: u64) -> Vec<u64> {
    prime_factors(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == vec![(n, 1)]
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut n = n;
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_prime_power(n: u64) -> bool {
    prime_factors(n).len() == 1
}
