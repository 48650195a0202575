//! Schmidt groups and minimal non-`U` / non-`X` groups, with structural checks.

use serde::{Deserialize, Serialize};

use super::{sylow_tower_supersolvable, Analysis, SubgroupSummary};
use crate::error::Result;
use crate::group::is_prime;
use crate::lattice::Lattice;
use crate::series::{chief_series, quotient_is_supersolvable};
use crate::subgroup::Subgroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchmidtReport {
    pub p: u64,
    pub q: u64,
    pub normal_sylow: SubgroupSummary,
    pub y: String,
    /// Multiplicative order of `p` modulo `q`.
    pub m: u32,
    pub abelianization_order: usize,
    /// Items 1–6 of the structure theorem for Schmidt groups, in order.
    pub checks: [bool; 6],
}

impl SchmidtReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|&c| c)
    }
}

pub fn multiplicative_order(p: u64, q: u64) -> u32 {
    let mut x = p % q;
    let mut m = 1;
    while x != 1 {
        x = x * p % q;
        m += 1;
        if m > q as u32 {
            return 0;
        }
    }
    m
}

/// `Some(report)` when the group is non-nilpotent with all maximal subgroups nilpotent.
pub fn is_schmidt(an: &Analysis) -> Result<Option<SchmidtReport>> {
    let l = an.lattice()?;
    let top = l.top();
    let s = an.whole();
    if s.is_nilpotent() || !l.maximals_nilpotent(top) {
        return Ok(None);
    }
    let primes = s.primes();
    let sylows: Vec<Subgroup> = primes.iter().map(|&p| s.sylow(p)).collect::<Result<_>>()?;
    let normal: Vec<bool> = sylows.iter().map(|h| s.is_normal(h)).collect::<Result<_>>()?;
    // p: the normal Sylow prime, q: the other one
    let pi = normal.iter().position(|&n| n).unwrap_or(0);
    let qi = (0..primes.len()).find(|&i| i != pi).unwrap_or(pi);
    let (p, q) = (primes[pi], primes[qi]);
    let big_p = sylows[pi].clone();
    let big_q = sylows[qi].clone();
    let t = s.group().table()?;
    let y = big_q
        .elements()
        .find(|&x| t.element_order(x) as usize == big_q.order())
        .unwrap_or(0);
    let m = multiplicative_order(p, q);
    let pm = (p as usize).pow(m);
    let center = s.center();
    let derived_p = big_p.derived_subgroup();
    let abelianization = big_p.order() / derived_p.order();
    let p_node = an.node_of(&big_p)?;
    let phi_p = l.node(l.frattini_of(p_node)).clone();
    let phi_s = l.frattini();
    let yq = t.pow(y, q);

    let check1 = primes.len() == 2 && normal[pi] && !normal[qi] && big_q.is_cyclic() && center.contains(yq);
    let check2 = abelianization == pm;
    let check3 = if big_p.is_abelian() {
        big_p.elements().all(|x| x == 0 || t.element_order(x) == p)
            && big_p.order() == pm
            && is_minimal_normal(l, &big_p)
    } else {
        true
    };
    let check4 = if big_p.is_abelian() {
        true
    } else {
        let zp = big_p.center();
        zp == derived_p && derived_p == phi_p && big_p.order() / zp.order() == pm
    };
    let yq_group = s.group().subgroup(&[yq])?;
    let check5 = center == phi_s
        && phi_s == phi_p.join(&yq_group)
        && phi_p.intersection(&yq_group).is_trivial()
        && s.derived_subgroup() == big_p
        && derived_p == phi_p;
    let check6 = l.normal_nodes().into_iter().filter(|&n| n != top).all(|n| {
        let nn = l.node(n);
        !nn.contains(y) && (big_p.is_subgroup_of(nn) || nn.is_subgroup_of(&phi_s))
    });
    Ok(Some(SchmidtReport {
        p,
        q,
        normal_sylow: SubgroupSummary::of(&big_p),
        y: t.element(y).to_string(),
        m,
        abelianization_order: abelianization,
        checks: [check1, check2, check3, check4, check5, check6],
    }))
}

/// No normal node of the ambient group strictly between 1 and `n`.
fn is_minimal_normal(l: &Lattice, n: &Subgroup) -> bool {
    l.normal_nodes().into_iter().all(|k| {
        let kk = l.node(k);
        kk.is_trivial() || kk == n || !kk.is_subgroup_of(n)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalNonUReport {
    pub solvable_and_few_primes: bool,
    pub tower_unless_schmidt: bool,
    pub normal_sylow_prime: Option<u64>,
    pub normal_sylow_is_residual: bool,
    pub frattini_quotient_large_and_minimal: bool,
    pub frattini_supersolvably_embedded: bool,
    pub complement_structure: bool,
    pub non_prime_index_maximals_conjugate: bool,
}

impl MinimalNonUReport {
    pub fn all_hold(&self) -> bool {
        self.solvable_and_few_primes
            && self.tower_unless_schmidt
            && self.normal_sylow_prime.is_some()
            && self.normal_sylow_is_residual
            && self.frattini_quotient_large_and_minimal
            && self.frattini_supersolvably_embedded
            && self.complement_structure
            && self.non_prime_index_maximals_conjugate
    }
}

fn minimal_non_u_report(an: &Analysis) -> Result<MinimalNonUReport> {
    let l = an.lattice()?;
    let g = an.whole();
    let group = an.group();
    let top = l.top();
    let primes = g.primes();
    let solvable = g.is_solvable();
    let schmidt = is_schmidt(an)?.is_some();
    let tower = sylow_tower_supersolvable(group)?.exists();

    let mut normal_sylows = Vec::new();
    for &p in &primes {
        let s = g.sylow(p)?;
        if g.is_normal(&s)? {
            normal_sylows.push((p, s));
        }
    }
    let unique = normal_sylows.len() == 1;

    // supersolvable residual: intersection of normal N with G/N supersolvable
    let mut residual = g.members().clone();
    for n in l.normal_nodes() {
        if quotient_is_supersolvable(group, l.node(n))? {
            residual = residual.intersection(l.node(n).members());
        }
    }

    let mut report = MinimalNonUReport {
        solvable_and_few_primes: solvable && primes.len() <= 3,
        tower_unless_schmidt: schmidt || tower,
        normal_sylow_prime: if unique { Some(normal_sylows[0].0) } else { None },
        normal_sylow_is_residual: false,
        frattini_quotient_large_and_minimal: false,
        frattini_supersolvably_embedded: false,
        complement_structure: false,
        non_prime_index_maximals_conjugate: false,
    };
    if !unique {
        return Ok(report);
    }
    let (p, big_p) = normal_sylows.pop().unwrap();
    report.normal_sylow_is_residual = *big_p.members() == residual;

    let p_node = an.node_of(&big_p)?;
    let phi_p = l.node(l.frattini_of(p_node)).clone();
    let phi_g = l.frattini();
    let p_phi_g = big_p.join(&phi_g);
    let no_normal_between = l.normal_nodes().into_iter().all(|k| {
        let kk = l.node(k);
        !(phi_g.is_subgroup_of(kk) && kk.is_subgroup_of(&p_phi_g)) || *kk == phi_g || *kk == p_phi_g
    });
    report.frattini_quotient_large_and_minimal =
        big_p.order() / phi_p.order() > p as usize && p_phi_g != phi_g && no_normal_between;

    let cs = chief_series(group, Some(&phi_p))?;
    report.frattini_supersolvably_embedded = cs.factors_below_through().iter().all(|&f| is_prime(f as u64));

    let q_order = g.order() / big_p.order();
    let complement = l
        .nodes()
        .iter()
        .find(|h| h.order() == q_order && h.intersection(&big_p).is_trivial())
        .cloned();
    if let Some(q) = &complement {
        report.complement_structure = complement_quotient_shape(an, q, &phi_g)?;
        let target = phi_p.join(q);
        let non_prime: Vec<usize> = l
            .lower_covers(top)
            .iter()
            .filter(|c| !c.is_prime())
            .map(|c| c.node)
            .collect();
        let target_node = l.find(&target);
        report.non_prime_index_maximals_conjugate = match target_node {
            Some(tn) => non_prime.iter().all(|&m| l.class_of(m) == l.class_of(tn)),
            None => false,
        };
    }
    Ok(report)
}

/// `Q/(Q ∩ Φ(G))` is minimal non-abelian, or cyclic of prime-power order.
fn complement_quotient_shape(an: &Analysis, q: &Subgroup, phi_g: &Subgroup) -> Result<bool> {
    let qg = q.as_group(None)?;
    let qt = qg.table()?;
    let t = an.group().table()?;
    let kernel_elems: Vec<usize> = q
        .intersection(phi_g)
        .elements()
        .map(|x| qt.index_of(t.element(x)).expect("member of Q"))
        .collect();
    let qwhole = qg.whole()?;
    let kernel = qwhole.normal_closure(&kernel_elems)?;
    let quotient = qwhole.quotient(&kernel)?;
    let img = quotient.image.whole()?;
    if img.is_cyclic() {
        return Ok(crate::group::is_prime_power(img.order() as u64));
    }
    if img.is_abelian() {
        return Ok(false);
    }
    let ql = Lattice::build(&quotient.image, None, an.caps().lattice)?;
    Ok(ql.lower_covers(ql.top()).iter().all(|c| ql.node(c.node).is_abelian()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalNonXShape {
    pub biprimary: bool,
    pub minimal_non_supersolvable: bool,
    pub non_normal_sylow_cyclic: bool,
}

impl MinimalNonXShape {
    pub fn holds(&self) -> bool {
        self.biprimary && self.minimal_non_supersolvable && self.non_normal_sylow_cyclic
    }
}

/// Biprimary, and every non-normal Sylow subgroup is cyclic (with at least one non-normal).
pub fn minimal_non_x_shape(an: &Analysis) -> Result<MinimalNonXShape> {
    let g = an.whole();
    let primes = g.primes();
    let mut non_normal = Vec::new();
    for &p in &primes {
        let s = g.sylow(p)?;
        if !g.is_normal(&s)? {
            non_normal.push(s);
        }
    }
    Ok(MinimalNonXShape {
        biprimary: primes.len() == 2,
        minimal_non_supersolvable: an.is_minimal_non_u()?,
        non_normal_sylow_cyclic: !non_normal.is_empty() && non_normal.iter().all(|s| s.is_cyclic()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassName {
    U,
    X,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalNonClassReport {
    pub class: ClassName,
    pub minimal: bool,
    pub non_u: Option<MinimalNonUReport>,
    pub shape: Option<MinimalNonXShape>,
}

/// Outside the class with every maximal subgroup inside it (both classes are subgroup-closed).
pub fn minimal_non_class(an: &Analysis, class: ClassName) -> Result<MinimalNonClassReport> {
    let l = an.lattice()?;
    let top = l.top();
    let minimal = match class {
        ClassName::U => an.is_minimal_non_u()?,
        ClassName::X => {
            let mut m = !an.node_in_x(top)?;
            if m {
                for c in l.lower_covers(top) {
                    if !an.node_in_x(c.node)? {
                        m = false;
                        break;
                    }
                }
            }
            m
        }
    };
    let non_u = if minimal && class == ClassName::U {
        Some(minimal_non_u_report(an)?)
    } else {
        None
    };
    let shape = if minimal && class == ClassName::X {
        Some(minimal_non_x_shape(an)?)
    } else {
        None
    };
    Ok(MinimalNonClassReport {
        class,
        minimal,
        non_u,
        shape,
    })
}

/// For a minimal non-`U` group: `G ∉ X` iff `G` is biprimary with cyclic non-normal Sylow subgroup.
pub fn not_in_x_iff_shape(an: &Analysis) -> Result<Option<bool>> {
    if !an.is_minimal_non_u()? {
        return Ok(None);
    }
    let shape = minimal_non_x_shape(an)?;
    let lhs = !an.node_in_x(an.lattice()?.top())?;
    let rhs = shape.biprimary && shape.non_normal_sylow_cyclic;
    Ok(Some(lhs == rhs))
}
