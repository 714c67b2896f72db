use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::LaurentScalar;

#[derive(Serialize, Deserialize)]
struct Wire {
    var: String,
    coeffs: BTreeMap<String, String>,
}

impl Serialize for LaurentScalar {
    /// `{"var": "q", "coeffs": {"2": "1", "0": "-1"}}`; the `q` form is used
    /// whenever every `v`-exponent is even.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (var, step) = if self.is_even() { ("q", 2) } else { ("v", 1) };
        let coeffs = self.terms().map(|(e, c)| ((e / step).to_string(), c.to_string())).collect();
        Wire { var: var.into(), coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = Wire::deserialize(d)?;
        let step = match wire.var.as_str() {
            "q" => 2,
            "v" => 1,
            other => return Err(D::Error::custom(format!("unknown variable {other:?}"))),
        };
        let mut out = LaurentScalar::zero();
        for (e, c) in wire.coeffs {
            let e: i32 = e.parse().map_err(D::Error::custom)?;
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            out.add_term(e * step, c);
        }
        Ok(out)
    }
}
