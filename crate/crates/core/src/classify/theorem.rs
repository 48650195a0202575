//! Both sides of the `wU` and `X` characterizations, computed independently.

use serde::{Deserialize, Serialize};

use super::structure::{minimal_non_class, ClassName};
use super::{Analysis, SubgroupSummary};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartAgreement {
    pub lhs: bool,
    pub rhs: bool,
    pub agree: bool,
    /// On disagreement: a subgroup witnessing the side that failed.
    pub witness: Option<SubgroupSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremRecord {
    /// `G ∈ wU` ⇔ tower and every biprimary subgroup supersolvable.
    pub wu_characterization: PartAgreement,
    /// `G ∈ X` ⇔ tower and every biprimary subgroup with a cyclic Sylow subgroup supersolvable.
    pub x_characterization: PartAgreement,
    /// `None` unless the group is minimal non-`X`; then whether the shape claim holds.
    pub minimal_non_x: Option<bool>,
}

impl TheoremRecord {
    pub fn all_agree(&self) -> bool {
        self.wu_characterization.agree && self.x_characterization.agree && self.minimal_non_x.unwrap_or(true)
    }
}

pub fn verify_theorem(an: &Analysis) -> Result<TheoremRecord> {
    let l = an.lattice()?;
    let top = l.top();
    let t = an.group().table()?;
    let tower = an.tower()?.exists();

    let biprimary: Vec<usize> = (0..l.len()).filter(|&i| l.primes_of(i).len() == 2).collect();
    let bad_biprimary = biprimary.iter().copied().find(|&i| !l.is_supersolvable_node(i));
    let has_cyclic_sylow = |i: usize| {
        let h = l.node(i);
        l.primes_of(i).into_iter().any(|p| {
            let full = crate::group::p_part(h.order() as u64, p);
            h.elements().any(|x| t.element_order(x) == full)
        })
    };
    let bad_cyclic_biprimary = biprimary
        .iter()
        .copied()
        .find(|&i| has_cyclic_sylow(i) && !l.is_supersolvable_node(i));

    let sylows = an.sylow_chains()?;
    let wu = sylows.iter().all(|s| s.chain.is_some());
    let rhs1 = tower && bad_biprimary.is_none();
    let wu_characterization = PartAgreement {
        lhs: wu,
        rhs: rhs1,
        agree: wu == rhs1,
        witness: if wu == rhs1 {
            None
        } else if !wu {
            sylows
                .iter()
                .find(|s| s.chain.is_none())
                .map(|s| SubgroupSummary::of(&s.sylow))
        } else {
            bad_biprimary.map(|i| SubgroupSummary::of(l.node(i)))
        },
    };

    let x = an.node_in_x(top)?;
    let rhs3 = tower && bad_cyclic_biprimary.is_none();
    let x_characterization = PartAgreement {
        lhs: x,
        rhs: rhs3,
        agree: x == rhs3,
        witness: if x == rhs3 {
            None
        } else if !x {
            an.primary_cyclic_chains()?
                .iter()
                .find(|c| c.chain.is_none())
                .map(|c| SubgroupSummary::of(&c.subgroup))
        } else {
            bad_cyclic_biprimary.map(|i| SubgroupSummary::of(l.node(i)))
        },
    };

    let mx = minimal_non_class(an, ClassName::X)?;
    let minimal_non_x = mx.shape.map(|s| s.holds());
    Ok(TheoremRecord {
        wu_characterization,
        x_characterization,
        minimal_non_x,
    })
}
