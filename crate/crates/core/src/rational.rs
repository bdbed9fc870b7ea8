//! Exact rational values.
//!
//! Every theorem in this crate is an equality or inequality under `min`/`max`,
//! so values are never rounded: a `Rational` is a reduced `num/den` pair with
//! a positive denominator, compared by exact cross-multiplication. There is
//! deliberately no arithmetic beyond ordering; nothing in the library adds or
//! multiplies function values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational {input:?}: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: String,
}

/// A reduced fraction with `den > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self, ParseRationalError> {
        if den == 0 {
            return Err(ParseRationalError {
                input: format!("{num}/{den}"),
                reason: "zero denominator".into(),
            });
        }
        Ok(Self::reduced(num as i128, den as i128))
    }

    /// Integer value `n/1`.
    pub const fn int(num: i64) -> Self {
        Self { num, den: 1 }
    }

    fn reduced(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs());
        let num = sign * num / g as i128;
        let den = sign * den / g as i128;
        // Inputs come from i64 pairs, so the reduced form always fits.
        Self {
            num: i64::try_from(num).expect("reduced numerator fits i64"),
            den: i64::try_from(den).expect("reduced denominator fits i64"),
        }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a.max(1)
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for Rational {
    fn from(num: i64) -> Self {
        Self::int(num)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `"p"` and `"p/q"` with optional leading sign on `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseRationalError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(err("empty"));
        }
        match t.split_once('/') {
            None => {
                let num: i64 = t.parse().map_err(|_| err("not an integer"))?;
                Ok(Self::int(num))
            }
            Some((p, q)) => {
                let num: i64 = p.parse().map_err(|_| err("bad numerator"))?;
                let den: i64 = q.parse().map_err(|_| err("bad denominator"))?;
                if den <= 0 {
                    return Err(err("denominator must be positive"));
                }
                Ok(Self::reduced(num as i128, den as i128))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
                Ok(Rational::int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
                i64::try_from(v)
                    .map(Rational::int)
                    .map_err(|_| E::custom("integer out of range"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
                v.parse().map_err(|e| E::custom(e))
            }
        }
        deserializer.deserialize_any(V)
    }
}
