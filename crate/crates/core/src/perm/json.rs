//! JSON interchange format for groups:
//! `{"degree": n, "generators": [[images…]…], "name": str}` with 0-indexed
//! images.

use super::group::Group;
use super::permutation::Perm;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupJson {
    pub degree: u32,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl GroupJson {
    pub fn from_group(g: &Group) -> GroupJson {
        GroupJson {
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.images().to_vec()).collect(),
            name: g.name().map(str::to_owned),
        }
    }

    pub fn into_group(self) -> Result<Group> {
        let gens: Vec<Perm> = self
            .generators
            .into_iter()
            .map(Perm::from_images)
            .collect::<Result<_>>()?;
        let g = Group::from_generators(self.degree, gens)?;
        Ok(match self.name {
            Some(name) => g.with_name(name),
            None => g,
        })
    }
}

pub fn group_to_json(g: &Group) -> String {
    serde_json::to_string_pretty(&GroupJson::from_group(g)).expect("group serializes")
}

pub fn group_from_json(text: &str) -> Result<Group> {
    let parsed: GroupJson =
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("group JSON: {e}")))?;
    parsed.into_group()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Group::from_generators(
            3,
            vec![
                Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
                Perm::from_cycles(3, &[vec![0, 1]]).unwrap(),
            ],
        )
        .unwrap()
        .with_name("S3");
        let text = group_to_json(&g);
        let h = group_from_json(&text).unwrap();
        assert_eq!(h.order(), 6);
        assert_eq!(h.name(), Some("S3"));
    }

    #[test]
    fn rejects_malformed() {
        assert!(group_from_json(r#"{"degree": 2, "generators": [[0, 0]]}"#).is_err());
        assert!(group_from_json("not json").is_err());
    }
}
