//! Exact rational arithmetic helpers.
//!
//! All measure and norm computations in this crate are carried out in
//! arbitrary-precision rationals; floating point appears only in the
//! Monte-Carlo estimators and in sign averages of Euclidean norms, where it
//! is labelled as such.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// The scalar type used throughout the crate.
pub type Rat = BigRational;

/// `p/q` as a rational. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as a rational.
pub fn rint(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// `1/2^k`.
pub fn half_pow(k: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << k)
}

/// Parse `p/q` or a plain integer, e.g. `"3/4"`, `"-2"`.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|e| format!("bad numerator {p:?}: {e}"))?;
            let q: BigInt = q.trim().parse().map_err(|e| format!("bad denominator {q:?}: {e}"))?;
            if q.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|e| format!("bad rational {s:?}: {e}"))?;
            Ok(Rat::from(p))
        }
    }
}

/// Render as `p/q` (or `p` when integral), the wire format for rationals.
pub fn rat_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Absolute value.
pub fn rabs(r: &Rat) -> Rat {
    r.abs()
}

/// Best-effort conversion to `f64` for reporting.
pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Serde adapter: rationals on the wire are `"p/q"` strings.
pub mod serde_rat {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&rat_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(de)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Option<Rat>`.
pub mod serde_rat_opt {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rat>, ser: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => ser.serialize_some(&rat_string(r)),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rat>, D::Error> {
        let s: Option<String> = Option::deserialize(de)?;
        s.map(|s| parse_rat(&s).map_err(serde::de::Error::custom)).transpose()
    }
}

/// Serde adapter for `Vec<Rat>`.
pub mod serde_rat_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &[Rat], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(r.iter().map(rat_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rat>, D::Error> {
        let v: Vec<String> = Vec::deserialize(de)?;
        v.iter().map(|s| parse_rat(s).map_err(serde::de::Error::custom)).collect()
    }
}

/// Serde adapter for `Option<Vec<Rat>>`.
pub mod serde_rat_opt_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Vec<Rat>>, ser: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(v) => ser.collect_seq(v.iter().map(rat_string).map(Some)),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Vec<Rat>>, D::Error> {
        let v: Option<Vec<String>> = Option::deserialize(de)?;
        v.map(|v| v.iter().map(|s| parse_rat(s).map_err(serde::de::Error::custom)).collect())
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["3/4", "-2", "0", "7/3"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(parse_rat(&rat_string(&r)).unwrap(), r);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn half_pow_values() {
        assert_eq!(half_pow(0), rint(1));
        assert_eq!(half_pow(3), rat(1, 8));
    }
}
