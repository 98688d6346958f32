//! Serialization helpers shared by the report types.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::matrix::CMatrix;

/// Finite values as numbers, `+inf` as the string `"inf"`, NaN as `null`.
pub fn tagged_f64<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else if v.is_nan() {
        s.serialize_none()
    } else if *v > 0.0 {
        s.serialize_str("inf")
    } else {
        s.serialize_str("-inf")
    }
}

/// Same layout as the JSON matrix file: `{"rows", "cols", "data": [[re, im], ...]}`.
impl Serialize for CMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let data: Vec<[f64; 2]> = self.as_slice().iter().map(|z| [z.re, z.im]).collect();
        let mut st = s.serialize_struct("CMatrix", 3)?;
        st.serialize_field("rows", &self.rows())?;
        st.serialize_field("cols", &self.cols())?;
        st.serialize_field("data", &data)?;
        st.end()
    }
}
