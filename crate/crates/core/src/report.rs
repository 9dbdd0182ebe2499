//! Serialization shapes shared by reports and the command line.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize, Serializer};

use crate::graph::Graph;
use crate::graph6;
use crate::indices::Rational;

/// Exact value as numerator/denominator strings plus a decimal approximation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalRepr {
    pub num: String,
    pub den: String,
    pub decimal: f64,
}

impl From<&Rational> for RationalRepr {
    fn from(r: &Rational) -> Self {
        RationalRepr {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
            decimal: decimal(r),
        }
    }
}

pub fn decimal(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `num/den`, always with the denominator.
pub fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    RationalRepr::from(r).serialize(s)
}

pub fn ser_graph6<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&graph6::encode(g))
}
