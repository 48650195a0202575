//! The deterministic verification corpus.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::{Caps, FiniteGroup};
use crate::perm::Permutation;

use super::{GroupDescriptor, FIXTURES};

pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Sampling of random subgroups of `sym(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomParams {
    pub min_degree: usize,
    pub max_degree: usize,
    pub max_generators: usize,
    pub per_degree: usize,
    /// Draws generating larger groups are rejected and redrawn.
    pub max_order: usize,
    /// Draws per degree before giving up on filling `per_degree`.
    pub attempts: usize,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            min_degree: 3,
            max_degree: 8,
            max_generators: 2,
            per_degree: 3,
            max_order: 200,
            attempts: 400,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusSpec {
    pub seed: u64,
    pub descriptors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub random: Option<RandomParams>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: DEFAULT_SEED,
            descriptors: default_descriptors(),
            random: Some(RandomParams::default()),
        }
    }
}

impl CorpusSpec {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

pub fn default_descriptors() -> Vec<String> {
    let mut d: Vec<String> = FIXTURES.iter().map(|f| format!("builtin:{f}")).collect();
    d.extend(["sl2:13", "psl2:13", "order400:0", "order400:1", "order400:2"].map(String::from));
    d.extend(["sym:2", "sym:5", "sl2:3", "sl2:5", "psl2:7", "sl2:7"].map(String::from));
    d.extend((1..=64).map(|n| format!("cyclic:{n}")));
    d.extend((6..=64).step_by(2).map(|n| format!("dihedral:{n}")));
    for p in [2u64, 3, 5, 7] {
        let mut k = 1;
        while p.pow(k) <= 64 {
            d.push(format!("elem_abelian:{p},{k}"));
            k += 1;
        }
    }
    d.extend(
        [
            "direct:builtin:s3|builtin:s3",
            "direct:builtin:s3|cyclic:3",
            "direct:builtin:a4|cyclic:2",
            "direct:builtin:a4|cyclic:3",
            "direct:builtin:q8|cyclic:3",
            "direct:builtin:d8|builtin:s3",
            "direct:builtin:s4|cyclic:2",
            "direct:builtin:a4|builtin:s3",
            "direct:builtin:e25_z3|cyclic:2",
            "direct:builtin:a4|builtin:a4",
            "direct:builtin:a5|cyclic:2",
            "direct:builtin:a5|builtin:a5|builtin:a5",
        ]
        .map(String::from),
    );
    d
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub descriptor: String,
    pub group: FiniteGroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedEntry {
    pub descriptor: String,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub seed: u64,
    pub entries: Vec<CorpusEntry>,
    pub skipped: Vec<SkippedEntry>,
}

/// Builds every descriptor, then appends the seeded random subgroups. Groups
/// over the element cap are recorded in `skipped`; other errors abort.
pub fn corpus(spec: &CorpusSpec, caps: &Caps) -> Result<Corpus> {
    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    let mut descriptors = spec.descriptors.clone();
    if let Some(r) = &spec.random {
        descriptors.extend(random_descriptors(spec.seed, r));
    }
    for text in descriptors {
        let built = GroupDescriptor::parse(&text)
            .and_then(|d| d.build(caps))
            .and_then(|g| g.order().map(|_| g));
        match built {
            Ok(group) => entries.push(CorpusEntry {
                descriptor: text,
                group,
            }),
            Err(e) if e.is_cap() => skipped.push(SkippedEntry {
                descriptor: text,
                reason: e.to_string(),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok(Corpus {
        seed: spec.seed,
        entries,
        skipped,
    })
}

/// `perm:` descriptors of random subgroups of `sym(n)` of order in `2..=max_order`.
pub fn random_descriptors(seed: u64, params: &RandomParams) -> Vec<String> {
    let mut out = Vec::new();
    for n in params.min_degree.max(2)..=params.max_degree {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut found = 0;
        for _ in 0..params.attempts {
            if found == params.per_degree {
                break;
            }
            let ngens = rng.gen_range(2..=params.max_generators.max(2));
            let gens: Vec<Permutation> = (0..ngens)
                .map(|_| {
                    let mut images: Vec<u32> = (0..n as u32).collect();
                    images.shuffle(&mut rng);
                    Permutation::from_images(images).expect("shuffle is a bijection")
                })
                .collect();
            let Ok(g) = FiniteGroup::with_cap(n, gens.clone(), None, params.max_order) else {
                continue;
            };
            match g.order() {
                Ok(o) if o > 1 => {}
                _ => continue,
            }
            let text = gens.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            out.push(format!("perm:{n}:{text}"));
            found += 1;
        }
    }
    out
}
