use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{strip_data, Partition};
use crate::error::{Error, Result};
use crate::ring::LaurentScalar;

/// Which table of transition coefficients `g_{t,m}` to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GVariant {
    /// `(-q)^{m-1} f_{t,m}(q^{-1})`, the values that make the strip Pieri
    /// rule agree with direct multiplication.
    #[default]
    Oracle,
    /// The printed case list: `(-1)^m q`, `(-1)^{m-t+1}(q-1)`, `1`.
    Paper,
}

impl GVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            GVariant::Oracle => "oracle",
            GVariant::Paper => "paper",
        }
    }
}

impl fmt::Display for GVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(GVariant::Oracle),
            "paper" => Ok(GVariant::Paper),
            _ => Err(Error::Parse(format!("unknown g-variant {s:?} (expected oracle or paper)"))),
        }
    }
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `wt_{λ/ν}(q^{-1})`; zero off strips, one on the empty shape.
pub fn wtbar(lambda: &Partition, nu: &Partition) -> Result<LaurentScalar> {
    let d = strip_data(lambda, nu)?;
    if !d.is_strip {
        return Ok(LaurentScalar::zero());
    }
    if d.size == 0 {
        return Ok(LaurentScalar::one());
    }
    let mut out = LaurentScalar::q_monomial(sign(d.size - 1), 1 - d.size as i32);
    out *= &LaurentScalar::q_minus_one().pow(d.cc as u32 - 1);
    for &(ro, co) in &d.components {
        out *= &LaurentScalar::q_monomial(sign(co - 1), ro as i32 - 1);
    }
    Ok(out)
}

/// The transition coefficient `g_{t,m}(q)`.
pub fn g_coeff(t: usize, m: usize, variant: GVariant) -> Result<LaurentScalar> {
    if m == 0 || t > m {
        return Err(Error::OutOfRange(format!("g_coeff needs 0 <= t <= m and m >= 1, got t={t}, m={m}")));
    }
    let qm1 = LaurentScalar::q_minus_one();
    Ok(match variant {
        GVariant::Oracle => {
            if t == 0 {
                LaurentScalar::constant(sign(m - 1))
            } else if t < m {
                &qm1 * &LaurentScalar::q_monomial(sign(m), t as i32 - 1)
            } else {
                LaurentScalar::q_monomial(sign(m - 1), m as i32 - 1)
            }
        }
        GVariant::Paper => {
            if t == 0 {
                LaurentScalar::q_monomial(sign(m), 1)
            } else if t < m {
                qm1.scale_i64(sign(m - t + 1))
            } else {
                LaurentScalar::one()
            }
        }
    })
}
