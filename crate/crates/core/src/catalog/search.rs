//! The groups `E_{5²} ⋊ Q` of order 400 where `Q = ⟨a⟩⟨b⟩`, `|a| = |b| = 4`,
//! `⟨a⟩ ∩ ⟨b⟩ = 1`, acting on `F_5²` through a homomorphism `Q → GL(2, 5)`
//! that need not be injective. Survivors are minimal non-supersolvable and are
//! sorted into fingerprint classes.
//!
//! The abstract groups `Q` are taken from the subgroups of a Sylow 2-subgroup of
//! `sym(8)`, which contains every group of order 16 with such a factorization.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::bitset::MemberSet;
use crate::classify::{Analysis, ClassMembershipReport};
use crate::error::{GroupError, Result};
use crate::group::{Caps, FiniteGroup};
use crate::perm::Permutation;

use super::fingerprint::{fingerprint, Fingerprint};
use super::matrix::Matrix;
use super::{affine_extension, has_common_line};

#[derive(Debug, Clone)]
pub struct Order400Class {
    /// Named `order400:i`.
    pub group: FiniteGroup,
    /// A `perm:` descriptor rebuilding the same group.
    pub descriptor: String,
    /// Generators `a, b` of `Q` as permutations of 8 points.
    pub carrier: Vec<Permutation>,
    /// Images of `a, b` in `GL(2, 5)`.
    pub matrices: Vec<Matrix>,
    pub fingerprint: Fingerprint,
    pub report: ClassMembershipReport,
    /// Number of (Q, action) candidates that landed in this class.
    pub merged: usize,
}

/// Runs the search once per process; later calls return the cached result.
pub fn search_order400_family() -> Result<&'static [Order400Class]> {
    static CACHE: OnceLock<Result<Vec<Order400Class>>> = OnceLock::new();
    CACHE
        .get_or_init(run_search)
        .as_ref()
        .map(Vec::as_slice)
        .map_err(Clone::clone)
}

/// One generating pair `(a, b)` per conjugacy class of factorized subgroups `Q`.
fn factorized_sixteen() -> Result<Vec<(Permutation, Permutation)>> {
    let sylow = FiniteGroup::new(
        8,
        Permutation::parse_list("(1 2),(1 3)(2 4),(1 5)(2 6)(3 7)(4 8)", 8)?,
        None,
    )?;
    let t = sylow.table()?;
    let whole = sylow.whole()?;
    let trivial = sylow.trivial()?;
    let fours: Vec<usize> = (0..t.len()).filter(|&x| t.element_order(x) == 4).collect();
    let mut seen: BTreeSet<MemberSet> = BTreeSet::new();
    let mut out = Vec::new();
    for (i, &a) in fours.iter().enumerate() {
        let ca = trivial.extend(a);
        for &b in &fours[i + 1..] {
            let cb = trivial.extend(b);
            if !ca.intersection(&cb).is_trivial() {
                continue;
            }
            let q = ca.join(&cb);
            if q.order() != 16 || seen.contains(q.members()) {
                continue;
            }
            for x in whole.elements() {
                seen.insert(q.conjugate(x).members().clone());
            }
            out.push((t.element(a).clone(), t.element(b).clone()));
        }
    }
    Ok(out)
}

/// All `(A, B)` such that `a ↦ A, b ↦ B` extends to a homomorphism `⟨a, b⟩ → GL`.
fn homomorphisms(q: &FiniteGroup, targets: &[Matrix]) -> Result<Vec<(Matrix, Matrix)>> {
    let t = q.table()?;
    let identity = Matrix::identity(5, 2);
    let mut out = Vec::new();
    for a in targets {
        for b in targets {
            let gens = [a, b];
            let mut image: Vec<Option<Matrix>> = vec![None; t.len()];
            image[0] = Some(identity.clone());
            let mut ok = true;
            'walk: for x in 0..t.len() {
                // breadth-first numbering: every element's image is set before it is reached
                let m = image[x].clone().expect("image assigned in BFS order");
                for (s, g) in gens.iter().enumerate() {
                    let y = t.times_generator(x, s);
                    let my = m.mul(g);
                    match &image[y] {
                        Some(existing) if *existing != my => {
                            ok = false;
                            break 'walk;
                        }
                        Some(_) => {}
                        None => image[y] = Some(my),
                    }
                }
            }
            if ok {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

fn run_search() -> Result<Vec<Order400Class>> {
    let caps = Caps::default();
    let gl = Matrix::general_linear(5, 2);
    let inverses: Vec<Matrix> = gl.iter().map(Matrix::inverse).collect();
    let targets: Vec<Matrix> = gl.iter().filter(|m| 4 % m.order() == 0).cloned().collect();

    let mut classes: Vec<Order400Class> = Vec::new();
    for (a, b) in factorized_sixteen()? {
        let q = FiniteGroup::new(8, vec![a.clone(), b.clone()], None)?;
        let mut seen: BTreeSet<(Matrix, Matrix)> = BTreeSet::new();
        for (ma, mb) in homomorphisms(&q, &targets)? {
            // a reducible action of a 2-group over F_5 splits into lines, giving a supersolvable group
            if has_common_line(&[&ma, &mb]) || seen.contains(&(ma.clone(), mb.clone())) {
                continue;
            }
            for (g, gi) in gl.iter().zip(&inverses) {
                seen.insert((gi.mul(&ma).mul(g), gi.mul(&mb).mul(g)));
            }
            let carrier = vec![a.clone(), b.clone()];
            let matrices = vec![ma, mb];
            let g = affine_extension(5, 2, &matrices, &carrier)?;
            let an = Analysis::new(&g, &caps)?;
            if an.order() != 400 {
                return Err(GroupError::InvalidParameter(format!(
                    "extension has order {} instead of 400",
                    an.order()
                )));
            }
            if !an.is_minimal_non_u()? {
                continue;
            }
            let fp = fingerprint(an.group(), &caps)?;
            if let Some(c) = classes.iter_mut().find(|c| c.fingerprint == fp) {
                c.merged += 1;
                continue;
            }
            let name = format!("order400:{}", classes.len());
            let mut report = an.report()?;
            report.group = name.clone();
            let gens: Vec<String> = g.generators().iter().map(ToString::to_string).collect();
            classes.push(Order400Class {
                descriptor: format!("perm:{}:{}", g.degree(), gens.join(",")),
                group: g.renamed(name),
                carrier,
                matrices,
                fingerprint: fp,
                report,
                merged: 1,
            });
        }
    }
    Ok(classes)
}
