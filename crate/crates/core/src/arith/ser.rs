//! Serializers writing exact numbers as decimal strings.

use serde::ser::{SerializeSeq, Serializer};

use super::{ExactInt, ExactRat};

pub fn int<S: Serializer>(v: &ExactInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ints<S: Serializer>(v: &[ExactInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn rat<S: Serializer>(v: &ExactRat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
