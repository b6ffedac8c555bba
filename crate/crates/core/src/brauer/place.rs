use std::fmt;
use std::str::FromStr;

use crate::exactnum::intmath::is_prime;
use crate::{Error, Result};

/// A place of ℚ. The real place sorts before every prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    RealInfinite,
    Finite(u64),
}

impl Place {
    pub fn finite(p: u64) -> Result<Place> {
        if is_prime(p) {
            Ok(Place::Finite(p))
        } else {
            Err(Error::Domain(format!("{p} is not prime")))
        }
    }

    pub fn prime(&self) -> Option<u64> {
        match self {
            Place::RealInfinite => None,
            Place::Finite(p) => Some(*p),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::RealInfinite => write!(f, "inf"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    fn from_str(s: &str) -> Result<Place> {
        match s.trim() {
            "inf" | "infinity" | "oo" => Ok(Place::RealInfinite),
            t => {
                let p = t
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("not a place: {s:?}")))?;
                Place::finite(p)
            }
        }
    }
}
