//! JSON element encodings. An element may be given in any of the three
//! forms accepted everywhere an element is an input:
//!
//! ```json
//! {"form":"disk","theta":0.5,"a":[0.1,-0.2]}
//! {"form":"su11","alpha":[1.02,0.0],"beta":[0.2,0.0]}
//! {"form":"sl2r","m":[[1.0,1.0],[0.0,1.0]]}
//! ```

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::disk::DiskAutomorphism;
use crate::error::MobiusError;
use crate::matrix::{Sl2RMatrix, Su11Matrix};

/// Serde helpers for `Complex64` as a `[re, im]` pair.
pub mod complex_pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

/// Wire form of a group element.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase", deny_unknown_fields)]
pub enum ElementInput {
    Disk { theta: f64, a: [f64; 2] },
    Su11 { alpha: [f64; 2], beta: [f64; 2] },
    Sl2r { m: [[f64; 2]; 2] },
}

impl ElementInput {
    pub fn to_disk(&self) -> Result<DiskAutomorphism, MobiusError> {
        match *self {
            ElementInput::Disk { theta, a } => {
                DiskAutomorphism::new(theta, Complex64::new(a[0], a[1]))
            }
            ElementInput::Su11 { alpha, beta } => {
                Su11Matrix::new(Complex64::new(alpha[0], alpha[1]), Complex64::new(beta[0], beta[1]))?
                    .to_disk()
            }
            ElementInput::Sl2r { m } => {
                Sl2RMatrix::new(m[0][0], m[0][1], m[1][0], m[1][1])?.to_disk()
            }
        }
    }

    pub fn from_disk(g: &DiskAutomorphism) -> Self {
        ElementInput::Disk { theta: g.theta(), a: [g.pole().re, g.pole().im] }
    }
}

/// Parse any of the three JSON element forms into a normal form.
pub fn parse_element(text: &str) -> Result<DiskAutomorphism, MobiusError> {
    let input: ElementInput =
        serde_json::from_str(text).map_err(|e| MobiusError::InvalidInput(e.to_string()))?;
    input.to_disk()
}

impl Serialize for DiskAutomorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            theta: f64,
            a: [f64; 2],
        }
        Raw { theta: self.theta(), a: [self.pole().re, self.pole().im] }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DiskAutomorphism {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            theta: f64,
            a: [f64; 2],
        }
        let raw = Raw::deserialize(d)?;
        DiskAutomorphism::new(raw.theta, Complex64::new(raw.a[0], raw.a[1]))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_three_forms_to_the_same_element() {
        let d = parse_element(r#"{"form":"disk","theta":0.0,"a":[-0.5,0.0]}"#).unwrap();
        let k = 0.75f64.sqrt();
        let su = format!(r#"{{"form":"su11","alpha":[{},0.0],"beta":[{},0.0]}}"#, 1.0 / k, 0.5 / k);
        let s = parse_element(&su).unwrap();
        assert!(crate::metric::element_distance(&d, &s) < 1e-12);

        // Same element through the half-plane: z ↦ 3z has trace 2cosh(ln3/2)
        // and the same axis, but length ln 3 matches exactly.
        let h = parse_element(r#"{"form":"sl2r","m":[[1.7320508075688772,0.0],[0.0,0.5773502691896258]]}"#)
            .unwrap();
        assert!(crate::metric::element_distance(&d, &h) < 1e-12);
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(parse_element(r#"{"form":"sl2r","m":[[2.0,0.0],[0.0,1.0]]}"#).is_err());
        assert!(parse_element(r#"{"form":"su11","alpha":[1.0,0.0],"beta":[1.0,0.0]}"#).is_err());
    }
}
