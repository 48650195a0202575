//! JSON group files: `{"degree": n, "generators": ["(1 2)", ...], "name": "..."}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl GroupFile {
    pub fn of(group: &FiniteGroup) -> GroupFile {
        GroupFile {
            degree: group.degree(),
            generators: group.generators().iter().map(ToString::to_string).collect(),
            name: group.name().map(str::to_string),
        }
    }

    pub fn to_group(&self) -> Result<FiniteGroup> {
        if self.degree == 0 {
            return Err(GroupError::Parse("degree must be at least 1".into()));
        }
        if self.generators.is_empty() {
            return Err(GroupError::Parse("generator list is empty".into()));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| Permutation::parse(g, self.degree))
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::new(self.degree, gens, self.name.clone())
    }
}

pub fn parse_group_file(text: &str) -> Result<FiniteGroup> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| GroupError::Parse(format!("group file: {e}")))?;
    file.to_group()
}

/// Canonical file contents: pretty JSON with a trailing newline.
pub fn group_file_json(group: &FiniteGroup) -> String {
    let mut s = serde_json::to_string_pretty(&GroupFile::of(group)).expect("group file serializes");
    s.push('\n');
    s
}

pub fn load_group(path: &Path) -> Result<FiniteGroup> {
    parse_group_file(&std::fs::read_to_string(path)?)
}

pub fn save_group(group: &FiniteGroup, path: &Path) -> Result<()> {
    std::fs::write(path, group_file_json(group))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_from_text() {
        let g = parse_group_file(r#"{"degree":3, "generators":["(1 2)","(1 2 3)"]}"#).unwrap();
        assert_eq!(g.order().unwrap(), 6);
    }

    #[test]
    fn rejects_bad_files() {
        for bad in [
            r#"{"degree":3, "generators":["(1 4)"]}"#,
            r#"{"degree":3, "generators":[]}"#,
            r#"{"degree":0, "generators":["()"]}"#,
            r#"{"degree":3, "generators":["()"], "extra":1}"#,
            r#"{"generators":["()"]}"#,
            "not json",
        ] {
            assert!(matches!(parse_group_file(bad), Err(GroupError::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn identity_generator() {
        let g = parse_group_file(r#"{"degree":2, "generators":["()"], "name":"one"}"#).unwrap();
        assert_eq!(g.order().unwrap(), 1);
        assert_eq!(g.name(), Some("one"));
    }

    #[test]
    fn save_load_round_trip() {
        let dir = std::env::temp_dir().join(format!("psubnormal-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("g.json");
        let g = parse_group_file(r#"{"degree":4,"generators":["(1,2,3,4)","(1 3)"],"name":"d8"}"#).unwrap();
        save_group(&g, &path).unwrap();
        let first = std::fs::read_to_string(&path).unwrap();
        let h = load_group(&path).unwrap();
        assert_eq!(h.generators(), g.generators());
        save_group(&h, &path).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), first);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
