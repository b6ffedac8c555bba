//! Serde helpers for counts that may arrive as JSON numbers or decimal strings.

use serde::{de, Deserialize, Deserializer};

pub(crate) fn count<'de, D, T>(d: D) -> Result<T, D::Error>
where
    D: Deserializer<'de>,
    T: TryFrom<i64>,
{
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(i64),
        Str(String),
    }
    let n = match Raw::deserialize(d)? {
        Raw::Int(n) => n,
        Raw::Str(s) => s
            .trim()
            .parse::<i64>()
            .map_err(|_| de::Error::custom(format!("not an integer: {s:?}")))?,
    };
    T::try_from(n).map_err(|_| de::Error::custom(format!("integer {n} out of range")))
}
