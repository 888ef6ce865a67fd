//! JSON assignment format: `{"t":T,"colors":[[...],...]}`, each inner list
//! ascending. Input may also carry `"n_vertices"`, which must then match the
//! number of lists.

use serde::{Deserialize, Serialize};

use super::{ColorSet, RainbowAssignment, MAX_COLORS};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AssignmentDoc {
    t: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n_vertices: Option<usize>,
    colors: Vec<Vec<i64>>,
}

pub fn parse_assignment(text: &str) -> Result<RainbowAssignment> {
    let doc: AssignmentDoc = serde_json::from_str(text).map_err(Error::from_json)?;
    if !(1..=MAX_COLORS).contains(&doc.t) {
        return Err(Error::parse_at("t", format!("t = {} outside 1..={MAX_COLORS}", doc.t)));
    }
    if let Some(n) = doc.n_vertices {
        if n != doc.colors.len() {
            return Err(Error::parse_at(
                "colors",
                format!("{} sets for declared n_vertices = {n}", doc.colors.len()),
            ));
        }
    }
    let mut sets = Vec::with_capacity(doc.colors.len());
    for (v, list) in doc.colors.iter().enumerate() {
        let mut set = ColorSet::EMPTY;
        for (j, &c) in list.iter().enumerate() {
            if c < 1 || c > doc.t as i64 {
                return Err(Error::parse_at(
                    format!("colors[{v}][{j}]"),
                    format!("vertex {v}: color {c} outside 1..={}", doc.t),
                ));
            }
            if set.contains(c as usize) {
                return Err(Error::parse_at(
                    format!("colors[{v}][{j}]"),
                    format!("vertex {v}: color {c} repeated"),
                ));
            }
            set.insert(c as usize);
        }
        sets.push(set);
    }
    RainbowAssignment::new(doc.t, sets)
}

pub fn serialize_assignment(a: &RainbowAssignment) -> String {
    let doc = AssignmentDoc {
        t: a.t(),
        n_vertices: None,
        colors: a
            .colors()
            .iter()
            .map(|s| s.iter().map(|c| c as i64).collect())
            .collect(),
    };
    let mut out = serde_json::to_string(&doc).expect("assignment document serializes");
    out.push('\n');
    out
}
