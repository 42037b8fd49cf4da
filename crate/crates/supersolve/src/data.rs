//! Reflection-group generators shipped with the crate.

use supersolve_core::generators::{
    reflection_arrangement, ReflectionArrangement, ReflectionGroupData,
};

use crate::format::{self, ReflectionGroupDoc};

const KLEIN: &str = include_str!("../data/klein.json");
const WIMAN: &str = include_str!("../data/wiman.json");

pub const GROUPS: [&str; 2] = ["klein", "wiman"];

/// Generators of a bundled group, by name.
pub fn group(name: &str) -> Option<ReflectionGroupData> {
    let text = match name {
        "klein" => KLEIN,
        "wiman" => WIMAN,
        _ => return None,
    };
    let doc: ReflectionGroupDoc = serde_json::from_str(text).expect("bundled data parses");
    Some(doc.build().expect("bundled data is valid"))
}

pub fn group_from_file(path: &std::path::Path) -> format::Result<ReflectionGroupData> {
    let doc: ReflectionGroupDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    doc.build()
}

pub fn klein() -> ReflectionArrangement {
    reflection_arrangement(&group("klein").expect("bundled")).expect("Klein closure")
}

pub fn wiman() -> ReflectionArrangement {
    reflection_arrangement(&group("wiman").expect("bundled")).expect("Wiman closure")
}
