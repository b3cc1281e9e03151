//! Text-format adaptors shared by the instance and configuration files.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::zeta_kernels::RawComplex;

/// `Vec<Complex64>` as a list of bare reals or `[re, im]` pairs.
pub mod complex_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Complex64], ser: S) -> Result<S::Ok, S::Error> {
        let raw: Vec<RawComplex> = v.iter().copied().map(Into::into).collect();
        raw.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Complex64>, D::Error> {
        let raw = Vec::<RawComplex>::deserialize(de)?;
        Ok(raw.into_iter().map(Into::into).collect())
    }
}

/// Single `Complex64` as a bare real or `[re, im]` pair.
pub mod complex {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Complex64, ser: S) -> Result<S::Ok, S::Error> {
        RawComplex::from(*v).serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Complex64, D::Error> {
        Ok(RawComplex::deserialize(de)?.into())
    }
}

/// Rounds to 12 significant digits, the precision of every emitted number.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Formats with 12 significant digits.
pub fn fmt12(x: f64) -> String {
    format!("{x:.11e}")
}
