use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A homological dimension: a nonnegative integer or infinity.
///
/// Serializes as a plain integer or as the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dim {
    Finite(usize),
    Infinite,
}

impl Dim {
    pub fn is_finite(self) -> bool {
        matches!(self, Dim::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Finite(d) => Some(d),
            Dim::Infinite => None,
        }
    }
}

impl From<usize> for Dim {
    fn from(d: usize) -> Self {
        Dim::Finite(d)
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(d) => write!(f, "{d}"),
            Dim::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Dim {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" => Ok(Dim::Infinite),
            t => t
                .parse::<usize>()
                .map(Dim::Finite)
                .map_err(|e| format!("bad dimension {t:?}: {e}")),
        }
    }
}

impl Serialize for Dim {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Dim::Finite(d) => serializer.serialize_u64(*d as u64),
            Dim::Infinite => serializer.serialize_str("inf"),
        }
    }
}

struct DimVisitor;

impl Visitor<'_> for DimVisitor {
    type Value = Dim;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a nonnegative integer or \"inf\"")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Dim, E> {
        Ok(Dim::Finite(v as usize))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Dim, E> {
        usize::try_from(v)
            .map(Dim::Finite)
            .map_err(|_| E::custom(format!("negative dimension {v}")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Dim, E> {
        v.parse().map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for Dim {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(DimVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_puts_infinity_last() {
        assert!(Dim::Finite(100) < Dim::Infinite);
        assert!(Dim::Finite(1) < Dim::Finite(2));
        assert_eq!(
            [Dim::Finite(3), Dim::Infinite, Dim::Finite(7)]
                .into_iter()
                .max(),
            Some(Dim::Infinite)
        );
    }

    #[test]
    fn json_encoding() {
        assert_eq!(serde_json::to_string(&Dim::Finite(3)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&Dim::Infinite).unwrap(), "\"inf\"");
        let back: Vec<Dim> = serde_json::from_str("[0, \"inf\", 12]").unwrap();
        assert_eq!(back, vec![Dim::Finite(0), Dim::Infinite, Dim::Finite(12)]);
        assert!(serde_json::from_str::<Dim>("-1").is_err());
        assert!(serde_json::from_str::<Dim>("\"infinite\"").is_err());
    }
}
