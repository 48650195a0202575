//! Chief series, built greedily from minimal normal subgroups of successive quotients.

use crate::error::{GroupError, Result};
use crate::group::{is_prime, FiniteGroup};
use crate::subgroup::Subgroup;

#[derive(Debug, Clone)]
pub struct ChiefSeries {
    /// From the trivial subgroup up to the whole group.
    pub series: Vec<Subgroup>,
    pub factor_orders: Vec<usize>,
    /// Position of the `through` subgroup in `series`, when one was requested.
    pub through_position: Option<usize>,
}

impl ChiefSeries {
    /// Factor orders of the part of the series below `through`.
    pub fn factors_below_through(&self) -> &[usize] {
        match self.through_position {
            Some(p) => &self.factor_orders[..p],
            None => &[],
        }
    }

    pub fn factors_above_through(&self) -> &[usize] {
        match self.through_position {
            Some(p) => &self.factor_orders[p..],
            None => &self.factor_orders,
        }
    }
}

/// A chief series of `group`, passing through `through` when given.
pub fn chief_series(group: &FiniteGroup, through: Option<&Subgroup>) -> Result<ChiefSeries> {
    let whole = group.whole()?;
    if let Some(t) = through {
        if !whole.is_normal(t)? {
            return Err(GroupError::NotNormal);
        }
    }
    let classes = group.conjugacy_classes()?;
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();

    let mut series = vec![group.trivial()?];
    let mut through_position = None;
    let stages: Vec<&Subgroup> = match through {
        Some(t) => vec![t, &whole],
        None => vec![&whole],
    };
    for (stage, target) in stages.into_iter().enumerate() {
        loop {
            let current = series.last().unwrap().clone();
            if current == *target {
                break;
            }
            series.push(minimal_normal_over(&whole, &current, target, &reps)?);
        }
        if stage == 0 && through.is_some() {
            through_position = Some(series.len() - 1);
        }
    }
    let factor_orders = series.windows(2).map(|w| w[1].order() / w[0].order()).collect();
    Ok(ChiefSeries {
        series,
        factor_orders,
        through_position,
    })
}

/// Smallest `⟨N, g⟩^G` with `g ∈ target ∖ N`; it is minimal normal over `N`
/// because any normal subgroup strictly between contains such a closure.
fn minimal_normal_over(
    whole: &Subgroup,
    current: &Subgroup,
    target: &Subgroup,
    class_reps: &[usize],
) -> Result<Subgroup> {
    let mut best: Option<Subgroup> = None;
    let base: Vec<usize> = current.generators().iter().map(|&g| g as usize).collect();
    for &g in class_reps {
        if current.contains(g) || !target.contains(g) {
            continue;
        }
        let mut elems = base.clone();
        elems.push(g);
        let m = whole.normal_closure(&elems)?;
        let better = match &best {
            None => true,
            Some(b) => (m.order(), m.members()) < (b.order(), b.members()),
        };
        if better {
            best = Some(m);
        }
    }
    Ok(best.expect("target strictly contains current"))
}

/// `group / n` is supersolvable iff every chief factor above `n` has prime order.
pub fn quotient_is_supersolvable(group: &FiniteGroup, n: &Subgroup) -> Result<bool> {
    let cs = chief_series(group, Some(n))?;
    Ok(cs.factors_above_through().iter().all(|&f| is_prime(f as u64)))
}
