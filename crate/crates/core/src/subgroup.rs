//! Subgroups of a fixed ambient group, stored as member bit sets.
//!
//! Most operations take `self` as the enclosing group, so `k.center()` is the
//! center of `k` and `k.normalizer(&h)` is `N_k(h)`. Use
//! [`FiniteGroup::whole`] to treat the ambient group itself this way.

use std::fmt;

use crate::bitset::MemberSet;
use crate::error::{GroupError, Result};
use crate::group::{p_part, primes_dividing, ElementTable, FiniteGroup};
use crate::perm::Permutation;

#[derive(Clone)]
pub struct Subgroup {
    group: FiniteGroup,
    members: MemberSet,
    generators: Vec<u32>,
    order: usize,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, <", self.order)?;
        for (i, p) in self.generator_perms().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(">)")
    }
}

impl Subgroup {
    pub(crate) fn from_parts(group: FiniteGroup, members: MemberSet, generators: Vec<u32>) -> Self {
        let order = members.count();
        Subgroup {
            group,
            members,
            generators,
            order,
        }
    }

    /// Subgroup with the given member set, or `NotASubgroup` if the set is not closed.
    pub fn from_members(group: &FiniteGroup, members: MemberSet) -> Result<Subgroup> {
        let n = group.order()?;
        if members.universe() != n || !members.contains(0) {
            return Err(GroupError::NotASubgroup("member set must contain the identity".into()));
        }
        let mut h = group.trivial()?;
        for x in members.iter() {
            if !h.contains(x) {
                h = h.extend(x);
                if !h.members.is_subset(&members) {
                    return Err(GroupError::NotASubgroup(
                        "member set is not closed under multiplication".into(),
                    ));
                }
            }
        }
        Ok(h)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    fn table(&self) -> &ElementTable {
        self.group.table().expect("subgroup of an enumerated group")
    }

    pub fn members(&self) -> &MemberSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn generator_perms(&self) -> Vec<Permutation> {
        let t = self.table();
        self.generators.iter().map(|&g| t.element(g as usize).clone()).collect()
    }

    /// Generators in cycle notation; the trivial subgroup is written `()`.
    pub fn generator_strings(&self) -> Vec<String> {
        if self.generators.is_empty() {
            return vec!["()".to_string()];
        }
        self.generator_perms().iter().map(|p| p.to_string()).collect()
    }

    #[inline]
    pub fn contains(&self, element: usize) -> bool {
        self.members.contains(element)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn index_in(&self, over: &Subgroup) -> usize {
        over.order / self.order
    }

    /// `⟨self, g⟩`, built coset by coset.
    pub fn extend(&self, g: usize) -> Subgroup {
        if self.contains(g) {
            return self.clone();
        }
        let t = self.table();
        let mut gens: Vec<usize> = self.generators.iter().map(|&x| x as usize).collect();
        gens.push(g);
        let base: Vec<usize> = self.members.iter().collect();
        let mut members = self.members.clone();
        let mut reps = vec![0usize];
        let mut head = 0;
        while head < reps.len() {
            let r = reps[head];
            for &s in &gens {
                let x = t.mul(r, s);
                if !members.contains(x) {
                    for &k in &base {
                        members.insert(t.mul(k, x));
                    }
                    reps.push(x);
                }
            }
            head += 1;
        }
        let mut generators = self.generators.clone();
        generators.push(g as u32);
        Subgroup::from_parts(self.group.clone(), members, generators)
    }

    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut h = self.clone();
        for &g in &other.generators {
            h = h.extend(g as usize);
        }
        h
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members = self.members.intersection(&other.members);
        Subgroup::from_members(&self.group, members).expect("intersection of subgroups")
    }

    /// `h^x = x⁻¹ h x`.
    pub fn conjugate(&self, x: usize) -> Subgroup {
        let t = self.table();
        let members = self.members.map(|a| t.conjugate(a, x));
        let generators = self
            .generators
            .iter()
            .map(|&g| t.conjugate(g as usize, x) as u32)
            .collect();
        Subgroup::from_parts(self.group.clone(), members, generators)
    }

    /// The subgroup as a permutation group in its own right.
    pub fn as_group(&self, name: Option<String>) -> Result<FiniteGroup> {
        let gens = if self.generators.is_empty() {
            vec![Permutation::identity(self.group.degree())]
        } else {
            self.generator_perms()
        };
        FiniteGroup::with_cap(self.group.degree(), gens, name, self.group.element_cap())
    }

    fn require_sub(&self, h: &Subgroup) -> Result<()> {
        if !self.group.same_as(&h.group) || !h.is_subgroup_of(self) {
            return Err(GroupError::NotASubgroup(
                "subgroup is not contained in the enclosing group".into(),
            ));
        }
        Ok(())
    }

    pub fn is_normal(&self, h: &Subgroup) -> Result<bool> {
        self.require_sub(h)?;
        let t = self.table();
        Ok(self.generators.iter().all(|&x| {
            h.generators
                .iter()
                .all(|&a| h.contains(t.conjugate(a as usize, x as usize)))
        }))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.require_sub(h)?;
        let t = self.table();
        let members = MemberSet::from_indices(
            self.members.universe(),
            self.members
                .iter()
                .filter(|&x| h.generators.iter().all(|&a| h.contains(t.conjugate(a as usize, x)))),
        );
        Subgroup::from_members(&self.group, members)
    }

    pub fn centralizer_of_element(&self, a: usize) -> Subgroup {
        let t = self.table();
        let members = MemberSet::from_indices(
            self.members.universe(),
            self.members.iter().filter(|&x| t.mul(a, x) == t.mul(x, a)),
        );
        Subgroup::from_members(&self.group, members).expect("centralizer is a subgroup")
    }

    /// Smallest normal subgroup of `self` containing the given elements.
    pub fn normal_closure(&self, elements: &[usize]) -> Result<Subgroup> {
        if let Some(&x) = elements.iter().find(|&&x| !self.contains(x)) {
            return Err(GroupError::NotASubgroup(format!(
                "element {} is not in the enclosing group",
                self.table().element(x)
            )));
        }
        let t = self.table();
        let mut n = self.group.trivial()?;
        let mut pending: Vec<usize> = elements.to_vec();
        while let Some(x) = pending.pop() {
            if n.contains(x) {
                continue;
            }
            n = n.extend(x);
            for &k in &self.generators {
                pending.push(t.conjugate(x, k as usize));
            }
        }
        Ok(n)
    }

    pub fn normal_closure_of(&self, h: &Subgroup) -> Result<Subgroup> {
        self.require_sub(h)?;
        let gens: Vec<usize> = h.generators.iter().map(|&g| g as usize).collect();
        self.normal_closure(&gens)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let t = self.table();
        let mut comms = Vec::new();
        for (i, &a) in self.generators.iter().enumerate() {
            for &b in &self.generators[i + 1..] {
                let c = t.commutator(a as usize, b as usize);
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms).expect("commutators lie in the group")
    }

    /// `G ⊇ G′ ⊇ G″ ⊇ …` up to and including the first repeated term.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.clone()];
        loop {
            let next = series.last().unwrap().derived_subgroup();
            if next == *series.last().unwrap() {
                return series;
            }
            let done = next.is_trivial();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    /// `None` when the derived series stabilizes above the identity.
    pub fn derived_length(&self) -> Option<usize> {
        let series = self.derived_series();
        if series.last().unwrap().is_trivial() {
            Some(series.len() - 1)
        } else {
            None
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_length().is_some()
    }

    pub fn center(&self) -> Subgroup {
        let t = self.table();
        let members = MemberSet::from_indices(
            self.members.universe(),
            self.members.iter().filter(|&x| {
                self.generators
                    .iter()
                    .all(|&g| t.mul(x, g as usize) == t.mul(g as usize, x))
            }),
        );
        Subgroup::from_members(&self.group, members).expect("center is a subgroup")
    }

    pub fn is_abelian(&self) -> bool {
        let t = self.table();
        self.generators.iter().enumerate().all(|(i, &a)| {
            self.generators[i + 1..]
                .iter()
                .all(|&b| t.mul(a as usize, b as usize) == t.mul(b as usize, a as usize))
        })
    }

    pub fn is_cyclic(&self) -> bool {
        let t = self.table();
        self.members.iter().any(|x| t.element_order(x) == self.order as u64)
    }

    pub fn primes(&self) -> Vec<u64> {
        primes_dividing(self.order as u64)
    }

    /// Elements whose order is a power of `p` (including the identity).
    pub fn p_elements(&self, p: u64) -> impl Iterator<Item = usize> + '_ {
        let t = self.table();
        self.members.iter().filter(move |&x| is_power_of(t.element_order(x), p))
    }

    /// Nilpotent iff, for every prime, the p-elements form a single subgroup of full p-part.
    pub fn is_nilpotent(&self) -> bool {
        self.primes()
            .into_iter()
            .all(|p| self.p_elements(p).count() as u64 == p_part(self.order as u64, p))
    }

    /// A Sylow p-subgroup, grown one p-element at a time inside normalizers.
    pub fn sylow(&self, p: u64) -> Result<Subgroup> {
        let target = p_part(self.order as u64, p) as usize;
        if target == 1 {
            return Err(GroupError::NoSuchPrime(p));
        }
        let t = self.table();
        let mut h = self.group.trivial()?;
        while h.order < target {
            let n = self.normalizer(&h)?;
            let x = n
                .members
                .iter()
                .find(|&x| !h.contains(x) && is_power_of(t.element_order(x), p))
                .expect("a p-subgroup below Sylow order has a p-element in its normalizer");
            h = h.extend(x);
        }
        Ok(h)
    }

    /// Right-coset action of `self` on the cosets of `h`.
    pub fn coset_action(&self, h: &Subgroup) -> Result<CosetAction> {
        self.require_sub(h)?;
        let t = self.table();
        let n = self.members.universe();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps: Vec<u32> = Vec::new();
        let h_elems: Vec<usize> = h.members.iter().collect();
        for x in self.members.iter() {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            for &a in &h_elems {
                coset_of[t.mul(a, x)] = c;
            }
            reps.push(x as u32);
        }
        let degree = reps.len();
        let action_of = |x: usize| -> Permutation {
            Permutation::from_images_unchecked(reps.iter().map(|&r| coset_of[t.mul(r as usize, x)]).collect())
        };
        let image_gens: Vec<Permutation> = if self.generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            self.generators.iter().map(|&g| action_of(g as usize)).collect()
        };
        let image = FiniteGroup::with_cap(degree, image_gens, None, self.group.element_cap())?;
        let it = image.table()?;
        let mut element_map = vec![u32::MAX; n];
        let mut kernel_members = MemberSet::new(n);
        for x in self.members.iter() {
            let img = action_of(x);
            let idx = it.index_of(&img).expect("image of a member lies in the image group");
            element_map[x] = idx as u32;
            if idx == 0 {
                kernel_members.insert(x);
            }
        }
        let kernel = Subgroup::from_members(&self.group, kernel_members)?;
        Ok(CosetAction {
            source: self.clone(),
            image,
            kernel,
            representatives: reps,
            element_map,
        })
    }

    /// Largest normal subgroup of `self` inside `h`.
    pub fn core(&self, h: &Subgroup) -> Result<Subgroup> {
        self.require_sub(h)?;
        let t = self.table();
        let mut members = h.members.clone();
        let mut covered = MemberSet::new(self.members.universe());
        for x in self.members.iter() {
            if covered.contains(x) {
                continue;
            }
            for a in h.members.iter() {
                covered.insert(t.mul(a, x));
            }
            members = members.intersection(&h.members.map(|a| t.conjugate(a, x)));
        }
        Subgroup::from_members(&self.group, members)
    }

    /// Faithful permutation image of `self / n`. For trivial `n` the image is `self`.
    pub fn quotient(&self, n: &Subgroup) -> Result<CosetAction> {
        if !self.is_normal(n)? {
            return Err(GroupError::NotNormal);
        }
        if n.is_trivial() {
            let image = if self.order == self.group.order()? {
                self.group.clone()
            } else {
                self.as_group(None)?
            };
            let it = image.table()?;
            let pt = self.table();
            let mut element_map = vec![u32::MAX; self.members.universe()];
            for x in self.members.iter() {
                element_map[x] = it.index_of(pt.element(x)).expect("member") as u32;
            }
            return Ok(CosetAction {
                source: self.clone(),
                image,
                kernel: n.clone(),
                representatives: self.members.iter().map(|x| x as u32).collect(),
                element_map,
            });
        }
        self.coset_action(n)
    }

    /// Largest normal p-subgroup; trivial when p does not divide the order.
    pub fn o_p(&self, p: u64) -> Result<Subgroup> {
        if !(self.order as u64).is_multiple_of(p) {
            return self.group.trivial();
        }
        let sylow = self.sylow(p)?;
        self.core(&sylow)
    }

    pub fn fitting(&self) -> Result<Subgroup> {
        let mut f = self.group.trivial()?;
        for p in self.primes() {
            f = f.join(&self.o_p(p)?);
        }
        Ok(f)
    }

    /// Descends through iterated normal closures of `h`.
    pub fn is_subnormal(&self, h: &Subgroup) -> Result<bool> {
        self.require_sub(h)?;
        let mut k = self.clone();
        loop {
            let next = k.normal_closure_of(h)?;
            if next == k {
                return Ok(k == *h);
            }
            k = next;
        }
    }

    /// Commutator subgroup `[a, b]` of two subgroups of `self`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
        self.require_sub(a)?;
        self.require_sub(b)?;
        let t = self.table();
        let mut comms = Vec::new();
        for &x in &a.generators {
            for &y in &b.generators {
                comms.push(t.commutator(x as usize, y as usize));
            }
        }
        let both = a.join(b);
        both.normal_closure(&comms)
    }
}

pub(crate) fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Result of a right-coset action of a group `K` on the cosets of `H ≤ K`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    pub source: Subgroup,
    /// Transitive group of degree `|K : H|`.
    pub image: FiniteGroup,
    /// `Core_K(H)`.
    pub kernel: Subgroup,
    pub representatives: Vec<u32>,
    element_map: Vec<u32>,
}

impl CosetAction {
    pub fn degree(&self) -> usize {
        self.image.degree()
    }

    /// Index in the image table of the image of ambient element `x`.
    pub fn map_element(&self, x: usize) -> usize {
        let i = self.element_map[x];
        assert!(i != u32::MAX, "element outside the acting group");
        i as usize
    }

    pub fn image_of(&self, h: &Subgroup) -> Result<Subgroup> {
        let gens: Vec<usize> = h.generators().iter().map(|&g| self.map_element(g as usize)).collect();
        self.image.subgroup(&gens)
    }

    /// Full preimage of a subgroup of the image.
    pub fn preimage(&self, q: &Subgroup) -> Result<Subgroup> {
        let n = self.element_map.len();
        let members = MemberSet::from_indices(
            n,
            self.source
                .elements()
                .filter(|&x| q.contains(self.element_map[x] as usize)),
        );
        Subgroup::from_members(self.source.group(), members)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(degree: usize, gens: &str) -> FiniteGroup {
        FiniteGroup::new(degree, Permutation::parse_list(gens, degree).unwrap(), None).unwrap()
    }

    fn sub(grp: &FiniteGroup, gens: &str) -> Subgroup {
        grp.subgroup_from_perms(&Permutation::parse_list(gens, grp.degree()).unwrap())
            .unwrap()
    }

    #[test]
    fn from_members_rejects_non_subgroups() {
        let s3 = g(3, "(1 2),(1 2 3)");
        let t = s3.table().unwrap();
        let a = t.index_of(&Permutation::parse("(1 2)", 3).unwrap()).unwrap();
        let b = t.index_of(&Permutation::parse("(1 3)", 3).unwrap()).unwrap();
        let set = MemberSet::from_indices(6, [0, a, b]);
        assert!(matches!(
            Subgroup::from_members(&s3, set),
            Err(GroupError::NotASubgroup(_))
        ));
    }

    #[test]
    fn coset_actions() {
        let a5 = g(5, "(1 2 3 4 5),(1 2 3)");
        let a4 = sub(&a5, "(1 2 3),(2 3 4)");
        assert_eq!(a4.order(), 12);
        let whole = a5.whole().unwrap();
        let act = whole.coset_action(&a4).unwrap();
        assert_eq!(act.degree(), 5);
        assert_eq!(act.image.order().unwrap(), 60);
        assert!(act.kernel.is_trivial());

        let act = whole.coset_action(&whole).unwrap();
        assert_eq!(act.degree(), 1);
        assert_eq!(act.image.order().unwrap(), 1);
        assert_eq!(act.kernel, whole);

        let s4 = g(4, "(1 2),(1 2 3 4)");
        let s3 = sub(&s4, "(1 2),(1 2 3)");
        let act = s4.whole().unwrap().coset_action(&s3).unwrap();
        assert_eq!(act.degree(), 4);
        assert_eq!(act.image.order().unwrap(), 24);
        assert!(act.kernel.is_trivial());
        // stabilizer of the coset of s3 pulls back to s3
        let stab = act.image.whole().unwrap();
        let pt = act.image.table().unwrap();
        let fix: Vec<usize> = stab.elements().filter(|&x| pt.element(x).image(0) == 0).collect();
        let fix = Subgroup::from_members(&act.image, MemberSet::from_indices(24, fix)).unwrap();
        assert_eq!(act.preimage(&fix).unwrap(), s3);
    }

    #[test]
    fn cores_and_quotients() {
        let a5 = g(5, "(1 2 3 4 5),(1 2 3)");
        let a4 = sub(&a5, "(1 2 3),(2 3 4)");
        let whole = a5.whole().unwrap();
        assert!(whole.core(&a4).unwrap().is_trivial());
        let s4 = g(4, "(1 2),(1 2 3 4)");
        let v4 = sub(&s4, "(1 2)(3 4),(1 3)(2 4)");
        let w = s4.whole().unwrap();
        assert_eq!(w.core(&v4).unwrap(), v4);
        let q = w.quotient(&v4).unwrap();
        assert_eq!(q.image.order().unwrap(), 6);
        let s3 = sub(&s4, "(1 2),(1 2 3)");
        assert!(matches!(w.quotient(&s3), Err(GroupError::NotNormal)));
        let q1 = w.quotient(&s4.trivial().unwrap()).unwrap();
        assert!(q1.image.same_as(&s4));
    }

    #[test]
    fn derived_series_and_center() {
        let a4 = g(4, "(1 2 3),(2 3 4)");
        let series = a4.whole().unwrap().derived_series();
        let orders: Vec<usize> = series.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![12, 4, 1]);
        assert_eq!(a4.whole().unwrap().derived_length(), Some(2));
        let a5 = g(5, "(1 2 3 4 5),(1 2 3)");
        assert_eq!(a5.whole().unwrap().derived_length(), None);
        assert!(a4.whole().unwrap().center().is_trivial());
    }

    #[test]
    fn normalizers_and_closures() {
        let s4 = g(4, "(1 2),(1 2 3 4)");
        let w = s4.whole().unwrap();
        let c4 = sub(&s4, "(1 2 3 4)");
        let n = w.normalizer(&c4).unwrap();
        assert_eq!(n.order(), 8);
        let a4 = g(4, "(1 2 3),(2 3 4)");
        let t = a4.table().unwrap();
        let c = t.index_of(&Permutation::parse("(1 2 3)", 4).unwrap()).unwrap();
        assert_eq!(a4.whole().unwrap().normal_closure(&[c]).unwrap().order(), 12);
        let v4 = sub(&a4, "(1 2)(3 4),(1 3)(2 4)");
        assert!(a4.whole().unwrap().is_normal(&v4).unwrap());
    }

    #[test]
    fn o_p_and_fitting() {
        let a4 = g(4, "(1 2 3),(2 3 4)");
        let w = a4.whole().unwrap();
        assert_eq!(w.o_p(2).unwrap().order(), 4);
        assert!(w.o_p(3).unwrap().is_trivial());
        assert!(w.o_p(5).unwrap().is_trivial());
        let s4 = g(4, "(1 2),(1 2 3 4)");
        assert_eq!(s4.whole().unwrap().fitting().unwrap().order(), 4);
        let d8 = sub(&s4, "(1 2 3 4),(1 3)");
        assert_eq!(d8.o_p(2).unwrap(), d8);
    }

    #[test]
    fn subnormality() {
        let a4 = g(4, "(1 2 3),(2 3 4)");
        let w = a4.whole().unwrap();
        assert!(w.is_subnormal(&sub(&a4, "(1 2)(3 4),(1 3)(2 4)")).unwrap());
        assert!(!w.is_subnormal(&sub(&a4, "(1 2 3)")).unwrap());
        assert!(w.is_subnormal(&w).unwrap());
        // a non-normal subnormal subgroup: <(1 2)(3 4)> in S4
        let s4 = g(4, "(1 2),(1 2 3 4)");
        assert!(s4.whole().unwrap().is_subnormal(&sub(&s4, "(1 2)(3 4)")).unwrap());
    }

    #[test]
    fn sylow_subgroups() {
        let a5 = g(5, "(1 2 3 4 5),(1 2 3)");
        assert_eq!(a5.whole().unwrap().sylow(5).unwrap().order(), 5);
        assert!(matches!(a5.whole().unwrap().sylow(7), Err(GroupError::NoSuchPrime(7))));
        let s4 = g(4, "(1 2),(1 2 3 4)");
        let p = s4.whole().unwrap().sylow(2).unwrap();
        assert_eq!(p.order(), 8);
        // D8: five involutions, two elements of order 4
        let t = s4.table().unwrap();
        let invol = p.elements().filter(|&x| t.element_order(x) == 2).count();
        assert_eq!(invol, 5);
        assert!(!p.is_abelian());
    }

    #[test]
    fn nilpotency_by_p_element_counts() {
        let q8 = g(8, "(1 2 4 7)(3 6 8 5),(1 3 4 8)(2 5 7 6)");
        assert!(q8.whole().unwrap().is_nilpotent());
        assert!(!g(3, "(1 2),(1 2 3)").whole().unwrap().is_nilpotent());
        assert!(g(12, "(1 2 3 4 5 6 7 8 9 10 11 12)").whole().unwrap().is_nilpotent());
    }
}
