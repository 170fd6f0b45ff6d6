//! JSON helpers. Big integers are written as decimal strings and objects
//! are emitted with sorted keys so identical inputs give identical bytes.

use serde::Serialize;
use serde::Serializer;

pub(crate) fn dec<T: ToString, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn dec_rows<T: ToString, S: Serializer>(v: &[Vec<T>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(
        v.iter()
            .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>()),
    )
}

/// Pretty JSON with keys sorted at every level.
pub fn to_canonical_string<T: Serialize>(value: &T) -> String {
    // serde_json::Value keeps object keys in a BTreeMap.
    let v = serde_json::to_value(value).expect("report types serialize infallibly");
    let mut s = serde_json::to_string_pretty(&v).expect("Value serializes infallibly");
    s.push('\n');
    s
}
