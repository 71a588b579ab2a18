//! Serde helpers writing big integers as JSON numbers when they fit in an
//! `i64` and as decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Small(i64),
    Big(String),
}

impl Repr {
    fn from_big(x: &BigInt) -> Self {
        match x.to_i64() {
            Some(v) => Repr::Small(v),
            None => Repr::Big(x.to_string()),
        }
    }

    fn into_big<E: de::Error>(self) -> Result<BigInt, E> {
        match self {
            Repr::Small(v) => Ok(BigInt::from(v)),
            Repr::Big(s) => s.parse().map_err(|_| E::custom(format!("bad integer '{s}'"))),
        }
    }
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(Repr::from_big).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(Repr::into_big)
            .collect()
    }
}

pub mod pairs {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[(i64, BigInt)], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|(e, c)| (*e, Repr::from_big(c)))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(i64, BigInt)>, D::Error> {
        Vec::<(i64, Repr)>::deserialize(d)?
            .into_iter()
            .map(|(e, c)| Ok((e, c.into_big()?)))
            .collect()
    }
}
