//! Group constructors, named fixtures, descriptor strings and the verification corpus.
//!
//! A descriptor is a short string naming a construction:
//!
//! | form | meaning |
//! |------|---------|
//! | `sym:n`, `alt:n`, `cyclic:n`, `dihedral:2n` | the usual families |
//! | `elem_abelian:p,k` | `k` disjoint `p`-cycles |
//! | `sl2:p`, `psl2:p` | on nonzero vectors / projective points of `F_p²` |
//! | `affine:p,k:M` | `E_{p^k} ⋊ ⟨M⟩`, `M` one matrix or a JSON list of matrices |
//! | `direct:A\|B\|…` | direct product on disjoint points |
//! | `perm:n:gens` | explicit generators in cycle notation |
//! | `file:path` | a JSON group file |
//! | `builtin:name` or `name` | a named fixture such as `a5` or `e49_s3` |
//! | `order400:i` | the `i`-th class found by [`search_order400_family`] |

mod corpus;
mod fingerprint;
mod io;
pub mod matrix;
mod search;

use std::path::PathBuf;
use std::sync::OnceLock;

pub use corpus::{
    corpus, default_descriptors, random_descriptors, Corpus, CorpusEntry, CorpusSpec, RandomParams, SkippedEntry,
    DEFAULT_SEED,
};
pub use fingerprint::{fingerprint, Fingerprint};
pub use io::{group_file_json, load_group, parse_group_file, save_group, GroupFile};
pub use matrix::Matrix;
pub use search::{search_order400_family, Order400Class};

use crate::error::{GroupError, Result};
use crate::group::{is_prime, Caps, FiniteGroup};
use crate::perm::Permutation;

pub const FIXTURES: &[&str] = &["a4", "a5", "s3", "s4", "q8", "d8", "e25_z3", "e49_s3"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDescriptor {
    Sym(usize),
    Alt(usize),
    Cyclic(usize),
    Dihedral(usize),
    ElemAbelian(u64, usize),
    Sl2(u64),
    Psl2(u64),
    Affine { p: u64, k: usize, matrices: Vec<Matrix> },
    Direct(Vec<GroupDescriptor>),
    Perm { degree: usize, generators: String },
    File(PathBuf),
    Fixture(String),
    Order400(usize),
}

impl GroupDescriptor {
    pub fn parse(text: &str) -> Result<GroupDescriptor> {
        let text = text.trim();
        let (kind, rest) = match text.split_once(':') {
            Some((k, r)) => (k, r),
            None => {
                return if FIXTURES.contains(&text) {
                    Ok(GroupDescriptor::Fixture(text.to_string()))
                } else {
                    Err(GroupError::UnknownBuiltin(text.to_string()))
                };
            }
        };
        let d = match kind {
            "sym" => GroupDescriptor::Sym(int(rest)?),
            "alt" => GroupDescriptor::Alt(int(rest)?),
            "cyclic" => GroupDescriptor::Cyclic(int(rest)?),
            "dihedral" => GroupDescriptor::Dihedral(int(rest)?),
            "elem_abelian" => {
                let (p, k) = pair(rest)?;
                GroupDescriptor::ElemAbelian(p as u64, k)
            }
            "sl2" => GroupDescriptor::Sl2(int(rest)? as u64),
            "psl2" => GroupDescriptor::Psl2(int(rest)? as u64),
            "affine" => {
                let (params, mats) = rest
                    .split_once(':')
                    .ok_or_else(|| GroupError::Parse(format!("expected `affine:p,k:matrices`, got `{text}`")))?;
                let (p, k) = pair(params)?;
                let p = p as u64;
                let matrices = parse_matrices(mats)?
                    .iter()
                    .map(|rows| Matrix::new(p, rows))
                    .collect::<Result<Vec<_>>>()?;
                if matrices.iter().any(|m| m.dim() != k) {
                    return Err(GroupError::InvalidParameter(format!("matrices must be {k}x{k}")));
                }
                GroupDescriptor::Affine { p, k, matrices }
            }
            "direct" => GroupDescriptor::Direct(
                rest.split('|')
                    .map(GroupDescriptor::parse)
                    .collect::<Result<Vec<_>>>()?,
            ),
            "perm" => {
                let (deg, gens) = rest
                    .split_once(':')
                    .ok_or_else(|| GroupError::Parse(format!("expected `perm:degree:generators`, got `{text}`")))?;
                let degree = int(deg)?;
                Permutation::parse_list(gens, degree)?;
                GroupDescriptor::Perm {
                    degree,
                    generators: gens.trim().to_string(),
                }
            }
            "file" => GroupDescriptor::File(PathBuf::from(rest)),
            "builtin" => {
                if !FIXTURES.contains(&rest) {
                    return Err(GroupError::UnknownBuiltin(rest.to_string()));
                }
                GroupDescriptor::Fixture(rest.to_string())
            }
            "order400" => GroupDescriptor::Order400(int(rest)?),
            _ => return Err(GroupError::UnknownBuiltin(kind.to_string())),
        };
        Ok(d)
    }

    /// Canonical text form; parsing it gives back an equal descriptor.
    pub fn canonical(&self) -> String {
        match self {
            GroupDescriptor::Sym(n) => format!("sym:{n}"),
            GroupDescriptor::Alt(n) => format!("alt:{n}"),
            GroupDescriptor::Cyclic(n) => format!("cyclic:{n}"),
            GroupDescriptor::Dihedral(n) => format!("dihedral:{n}"),
            GroupDescriptor::ElemAbelian(p, k) => format!("elem_abelian:{p},{k}"),
            GroupDescriptor::Sl2(p) => format!("sl2:{p}"),
            GroupDescriptor::Psl2(p) => format!("psl2:{p}"),
            GroupDescriptor::Affine { p, k, matrices } => {
                let rows: Vec<Vec<Vec<u64>>> = matrices.iter().map(Matrix::rows).collect();
                let body = if rows.len() == 1 {
                    serde_json::to_string(&rows[0])
                } else {
                    serde_json::to_string(&rows)
                };
                format!("affine:{p},{k}:{}", body.expect("matrices serialize"))
            }
            GroupDescriptor::Direct(parts) => format!(
                "direct:{}",
                parts
                    .iter()
                    .map(GroupDescriptor::canonical)
                    .collect::<Vec<_>>()
                    .join("|")
            ),
            GroupDescriptor::Perm { degree, generators } => format!("perm:{degree}:{generators}"),
            GroupDescriptor::File(p) => format!("file:{}", p.display()),
            GroupDescriptor::Fixture(n) => format!("builtin:{n}"),
            GroupDescriptor::Order400(i) => format!("order400:{i}"),
        }
    }

    /// Builds the group with its canonical descriptor as name.
    pub fn build(&self, caps: &Caps) -> Result<FiniteGroup> {
        let g = match self {
            GroupDescriptor::Sym(n) => sym(*n)?,
            GroupDescriptor::Alt(n) => alt(*n)?,
            GroupDescriptor::Cyclic(n) => cyclic(*n)?,
            GroupDescriptor::Dihedral(n) => dihedral(*n)?,
            GroupDescriptor::ElemAbelian(p, k) => elem_abelian(*p, *k)?,
            GroupDescriptor::Sl2(p) => sl2(*p)?,
            GroupDescriptor::Psl2(p) => psl2(*p)?,
            GroupDescriptor::Affine { p, k, matrices } => affine(*p, *k, matrices)?,
            GroupDescriptor::Direct(parts) => {
                let groups = parts.iter().map(|d| d.build(caps)).collect::<Result<Vec<_>>>()?;
                direct_product(&groups)?
            }
            GroupDescriptor::Perm { degree, generators } => {
                FiniteGroup::new(*degree, Permutation::parse_list(generators, *degree)?, None)?
            }
            GroupDescriptor::File(path) => load_group(path)?,
            GroupDescriptor::Fixture(name) => fixture(name)?,
            GroupDescriptor::Order400(i) => {
                let classes = search_order400_family()?;
                let c = classes.get(*i).ok_or_else(|| {
                    GroupError::InvalidParameter(format!("order400 index {i} out of range 0..{}", classes.len()))
                })?;
                c.group.clone()
            }
        };
        let name = match (self, g.name()) {
            (GroupDescriptor::File(_), Some(n)) => n.to_string(),
            _ => self.canonical(),
        };
        Ok(g.renamed(name).recapped(caps.elements))
    }
}

/// Parses and builds a descriptor string.
pub fn build(descriptor: &str, caps: &Caps) -> Result<FiniteGroup> {
    GroupDescriptor::parse(descriptor)?.build(caps)
}

fn int(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| GroupError::Parse(format!("expected a non-negative integer, got `{s}`")))
}

fn pair(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| GroupError::Parse(format!("expected `a,b`, got `{s}`")))?;
    Ok((int(a)?, int(b)?))
}

/// Accepts one matrix `[[..],[..]]` or a list of them.
fn parse_matrices(s: &str) -> Result<Vec<Vec<Vec<u64>>>> {
    if let Ok(one) = serde_json::from_str::<Vec<Vec<u64>>>(s) {
        return Ok(vec![one]);
    }
    let many: Vec<Vec<Vec<u64>>> =
        serde_json::from_str(s).map_err(|e| GroupError::Parse(format!("bad matrix list `{s}`: {e}")))?;
    if many.is_empty() {
        return Err(GroupError::InvalidParameter("empty matrix list".into()));
    }
    Ok(many)
}

fn perm_from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images((0..degree).map(|i| f(i) as u32).collect()).expect("constructor produces a bijection")
}

fn cycle_perm(degree: usize, points: &[usize]) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (i, &p) in points.iter().enumerate() {
        images[p] = points[(i + 1) % points.len()] as u32;
    }
    Permutation::from_images(images).expect("cycle is a bijection")
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(GroupError::InvalidParameter(format!("{what} must be positive")));
    }
    Ok(())
}

fn prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
    }
    Ok(())
}

pub fn sym(n: usize) -> Result<FiniteGroup> {
    positive(n, "degree")?;
    let gens = if n == 1 {
        vec![Permutation::identity(1)]
    } else {
        vec![cycle_perm(n, &[0, 1]), cycle_perm(n, &(0..n).collect::<Vec<_>>())]
    };
    FiniteGroup::new(n, gens, Some(format!("sym:{n}")))
}

pub fn alt(n: usize) -> Result<FiniteGroup> {
    positive(n, "degree")?;
    let gens = if n < 3 {
        vec![Permutation::identity(n)]
    } else if n % 2 == 1 {
        vec![cycle_perm(n, &(0..n).collect::<Vec<_>>()), cycle_perm(n, &[0, 1, 2])]
    } else {
        vec![cycle_perm(n, &(1..n).collect::<Vec<_>>()), cycle_perm(n, &[0, 1, 2])]
    };
    FiniteGroup::new(n, gens, Some(format!("alt:{n}")))
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    positive(n, "order")?;
    FiniteGroup::new(
        n,
        vec![cycle_perm(n, &(0..n).collect::<Vec<_>>())],
        Some(format!("cyclic:{n}")),
    )
}

/// The dihedral group of order `order` acting on `order / 2` points.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 6 || order % 2 == 1 {
        return Err(GroupError::InvalidParameter(format!(
            "dihedral order must be even and at least 6, got {order}"
        )));
    }
    let n = order / 2;
    let rotation = perm_from_fn(n, |i| (i + 1) % n);
    let reflection = perm_from_fn(n, |i| (n - i) % n);
    FiniteGroup::new(n, vec![rotation, reflection], Some(format!("dihedral:{order}")))
}

pub fn elem_abelian(p: u64, k: usize) -> Result<FiniteGroup> {
    prime(p)?;
    positive(k, "rank")?;
    let p = p as usize;
    let degree = p * k;
    let gens = (0..k)
        .map(|j| cycle_perm(degree, &(j * p..(j + 1) * p).collect::<Vec<_>>()))
        .collect();
    FiniteGroup::new(degree, gens, Some(format!("elem_abelian:{p},{k}")))
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn direct_product(factors: &[FiniteGroup]) -> Result<FiniteGroup> {
    if factors.is_empty() {
        return Err(GroupError::InvalidParameter("empty direct product".into()));
    }
    let degree: usize = factors.iter().map(FiniteGroup::degree).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for f in factors {
        let d = f.degree();
        for g in f.generators() {
            gens.push(perm_from_fn(degree, |i| {
                if (offset..offset + d).contains(&i) {
                    offset + g.image(i - offset)
                } else {
                    i
                }
            }));
        }
        offset += d;
    }
    let name = factors.iter().map(FiniteGroup::label).collect::<Vec<_>>().join(" x ");
    FiniteGroup::new(degree, gens, Some(name))
}

/// `E_{p^k} ⋊ ⟨matrices⟩` on the `p^k` vectors of `F_p^k`, vector `v` being
/// point `Σ vᵢ pⁱ`. Translations by the unit vectors come first among the generators.
pub fn affine(p: u64, k: usize, matrices: &[Matrix]) -> Result<FiniteGroup> {
    prime(p)?;
    positive(k, "dimension")?;
    if let Some(m) = matrices.iter().find(|m| m.dim() != k || m.prime() != p) {
        return Err(GroupError::InvalidParameter(format!(
            "matrix of size {} over F_{} in affine group over F_{p}^{k}",
            m.dim(),
            m.prime()
        )));
    }
    let degree = (p as usize).pow(k as u32);
    let mut gens = Vec::new();
    for j in 0..k {
        gens.push(perm_from_fn(degree, |i| {
            let mut v = matrix::vector_of_index(i, p, k);
            v[j] = (v[j] + 1) % p;
            matrix::vector_index(&v, p)
        }));
    }
    for m in matrices {
        gens.push(perm_from_fn(degree, |i| {
            matrix::vector_index(&m.apply(&matrix::vector_of_index(i, p, k)), p)
        }));
    }
    FiniteGroup::new(degree, gens, None)
}

/// `E_{p^k} ⋊ Q` where `Q = ⟨carrier⟩` acts on the vectors through `carrier[i] ↦ matrices[i]`,
/// which need not be faithful. Points `0..p^k` carry the affine action and the
/// remaining points carry `Q` itself, so the representation is faithful. The
/// caller guarantees that the assignment extends to a homomorphism.
pub fn affine_extension(p: u64, k: usize, matrices: &[Matrix], carrier: &[Permutation]) -> Result<FiniteGroup> {
    if matrices.len() != carrier.len() {
        return Err(GroupError::InvalidParameter(
            "one carrier permutation per matrix is required".into(),
        ));
    }
    let base = affine(p, k, matrices)?;
    let n = base.degree();
    let extra = carrier.first().map_or(0, Permutation::degree);
    let degree = n + extra;
    let gens = base
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let q = i.checked_sub(k).map(|j| &carrier[j]);
            perm_from_fn(degree, |x| {
                if x < n {
                    g.image(x)
                } else {
                    n + q.map_or(x - n, |q| q.image(x - n))
                }
            })
        })
        .collect();
    FiniteGroup::new(degree, gens, None)
}

fn sl2_generators(p: u64) -> Result<[Matrix; 2]> {
    prime(p)?;
    Ok([
        Matrix::new(p, &[vec![1, 1], vec![0, 1]])?,
        Matrix::new(p, &[vec![1, 0], vec![1, 1]])?,
    ])
}

/// `SL(2, p)` on the `p² − 1` nonzero row vectors.
pub fn sl2(p: u64) -> Result<FiniteGroup> {
    let mats = sl2_generators(p)?;
    let degree = (p * p - 1) as usize;
    let gens = mats
        .iter()
        .map(|m| {
            perm_from_fn(degree, |i| {
                matrix::vector_index(&m.apply(&matrix::vector_of_index(i + 1, p, 2)), p) - 1
            })
        })
        .collect();
    FiniteGroup::new(degree, gens, Some(format!("sl2:{p}")))
}

/// `PSL(2, p)` on the `p + 1` points of the projective line: `(x, 1)` is point
/// `x` and `(1, 0)` is point `p`.
pub fn psl2(p: u64) -> Result<FiniteGroup> {
    let mats = sl2_generators(p)?;
    let degree = (p + 1) as usize;
    let point = |i: usize| -> Vec<u64> {
        if i as u64 == p {
            vec![1, 0]
        } else {
            vec![i as u64, 1]
        }
    };
    let index = |v: &[u64]| -> usize {
        if v[1] == 0 {
            p as usize
        } else {
            let inv = matrix::mod_pow(v[1], p - 2, p);
            (v[0] * inv % p) as usize
        }
    };
    let gens = mats
        .iter()
        .map(|m| perm_from_fn(degree, |i| index(&m.apply(&point(i)))))
        .collect();
    FiniteGroup::new(degree, gens, Some(format!("psl2:{p}")))
}

/// The matrices `(A, B)` generating the irreducible `S₃ ≤ GL(2, 7)` used by
/// `e49_s3`: the lexicographically first pair with `|A| = 3`, `|B| = 2`,
/// `B⁻¹AB = A⁻¹` and no line of `F_7²` invariant under both.
pub fn e49_s3_matrices() -> &'static (Matrix, Matrix) {
    static PAIR: OnceLock<(Matrix, Matrix)> = OnceLock::new();
    PAIR.get_or_init(|| {
        let gl = Matrix::general_linear(7, 2);
        let threes: Vec<&Matrix> = gl.iter().filter(|m| m.order() == 3).collect();
        let twos: Vec<&Matrix> = gl.iter().filter(|m| m.order() == 2).collect();
        for a in &threes {
            let a_inv = a.mul(a);
            for b in &twos {
                // b is an involution, so b⁻¹ab = bab
                if b.mul(a).mul(b) == a_inv && !has_common_line(&[a, b]) {
                    return ((*a).clone(), (*b).clone());
                }
            }
        }
        unreachable!("GL(2,7) contains an irreducible S3")
    })
}

/// Whether some one-dimensional subspace is invariant under every matrix.
pub fn has_common_line(mats: &[&Matrix]) -> bool {
    let Some(first) = mats.first() else {
        return true;
    };
    let p = first.prime();
    let k = first.dim();
    let total = (p as usize).pow(k as u32);
    (1..total).any(|i| {
        let v = matrix::vector_of_index(i, p, k);
        mats.iter().all(|m| {
            let w = m.apply(&v);
            (1..p).any(|c| v.iter().map(|x| x * c % p).collect::<Vec<_>>() == w)
        })
    })
}

pub fn fixture(name: &str) -> Result<FiniteGroup> {
    let perm = |deg: usize, gens: &str| -> Result<FiniteGroup> {
        FiniteGroup::new(deg, Permutation::parse_list(gens, deg)?, None)
    };
    let g = match name {
        "a4" => alt(4)?,
        "a5" => perm(5, "(1 2 3 4 5),(1 2 3)")?,
        "s3" => sym(3)?,
        "s4" => sym(4)?,
        "q8" => perm(8, "(1 2 4 7)(3 6 8 5),(1 3 4 8)(2 5 7 6)")?,
        "d8" => dihedral(8)?,
        "e25_z3" => affine(5, 2, &[Matrix::new(5, &[vec![0, 4], vec![1, 4]])?])?,
        "e49_s3" => {
            let (a, b) = e49_s3_matrices();
            affine(7, 2, &[a.clone(), b.clone()])?
        }
        _ => return Err(GroupError::UnknownBuiltin(name.to_string())),
    };
    Ok(g.renamed(format!("builtin:{name}")))
}
