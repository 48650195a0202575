//! Isomorphism invariants. Different fingerprints prove non-isomorphism; equal
//! fingerprints are only evidence of isomorphism.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::{Caps, FiniteGroup};
use crate::lattice::Lattice;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, count)` sorted by element order.
    pub element_orders: Vec<(u64, usize)>,
    /// `(class size, number of classes)` sorted by size.
    pub class_sizes: Vec<(usize, usize)>,
    /// `(subgroup order, number of subgroups)`; absent when the lattice exceeds its cap.
    pub subgroup_orders: Option<Vec<(usize, usize)>>,
    pub center_order: usize,
    /// Orders along the derived series, starting with the group itself.
    pub derived_series: Vec<usize>,
}

pub fn fingerprint(group: &FiniteGroup, caps: &Caps) -> Result<Fingerprint> {
    let whole = group.whole()?;
    let mut class_sizes = BTreeMap::new();
    for c in group.conjugacy_classes()? {
        *class_sizes.entry(c.len()).or_insert(0) += 1;
    }
    let subgroup_orders = match Lattice::build(group, None, caps.lattice) {
        Ok(l) => {
            let mut h = BTreeMap::new();
            for n in l.nodes() {
                *h.entry(n.order()).or_insert(0) += 1;
            }
            Some(h.into_iter().collect())
        }
        Err(e) if e.is_cap() => None,
        Err(e) => return Err(e),
    };
    Ok(Fingerprint {
        order: group.order()?,
        element_orders: group.element_order_histogram()?,
        class_sizes: class_sizes.into_iter().collect(),
        subgroup_orders,
        center_order: whole.center().order(),
        derived_series: whole.derived_series().iter().map(|s| s.order()).collect(),
    })
}
