//! The `key = value` presentation file format: characteristic, variables,
//! weights, ideal generators, and optionally a parameter sequence and a
//! socle witness. Unknown keys are rejected.

use crate::error::{Error, Result};
use crate::parse::{parse_poly, print_poly};
use crate::poly::{PolyRing, Polynomial};
use crate::ring::{ParameterSequence, RingPresentation};

/// Parsed form of a presentation file.
///
/// ```text
/// char = 0
/// vars = [x, y, z]
/// weights = [1, 1, 1]
/// ideal = [x^2, x*y, x*z]
/// sop = [y, z]
/// z = x
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationFile {
    pub characteristic: u32,
    pub vars: Vec<String>,
    pub weights: Option<Vec<u32>>,
    pub ideal: Vec<String>,
    pub sop: Option<Vec<String>>,
    pub witness: Option<String>,
}

fn parse_list(value: &str, key: &str) -> Result<Vec<String>> {
    let v = value.trim();
    if !v.starts_with('[') || !v.ends_with(']') {
        return Err(Error::InvalidPresentationFile(format!(
            "{} must be a bracketed list",
            key
        )));
    }
    let inner = &v[1..v.len() - 1];
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(inner.split(',').map(|s| s.trim().to_string()).collect())
}

impl PresentationFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut characteristic: Option<u32> = None;
        let mut vars: Option<Vec<String>> = None;
        let mut weights: Option<Vec<u32>> = None;
        let mut ideal: Option<Vec<String>> = None;
        let mut sop: Option<Vec<String>> = None;
        let mut witness: Option<String> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::InvalidPresentationFile(format!(
                    "line {}: expected key = value",
                    lineno + 1
                )));
            };
            let key = key.trim();
            let value = value.trim();
            let dup = |set: bool| -> Result<()> {
                if set {
                    Err(Error::InvalidPresentationFile(format!(
                        "line {}: duplicate key {}",
                        lineno + 1,
                        key
                    )))
                } else {
                    Ok(())
                }
            };
            match key {
                "char" => {
                    dup(characteristic.is_some())?;
                    characteristic = Some(value.parse().map_err(|_| {
                        Error::InvalidPresentationFile(format!(
                            "line {}: char must be a non-negative integer",
                            lineno + 1
                        ))
                    })?);
                }
                "vars" => {
                    dup(vars.is_some())?;
                    vars = Some(parse_list(value, "vars")?);
                }
                "weights" => {
                    dup(weights.is_some())?;
                    let ws = parse_list(value, "weights")?;
                    let parsed = ws
                        .iter()
                        .map(|w| w.parse::<u32>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|_| {
                            Error::InvalidPresentationFile(format!(
                                "line {}: weights must be positive integers",
                                lineno + 1
                            ))
                        })?;
                    weights = Some(parsed);
                }
                "ideal" => {
                    dup(ideal.is_some())?;
                    ideal = Some(parse_list(value, "ideal")?);
                }
                "sop" => {
                    dup(sop.is_some())?;
                    sop = Some(parse_list(value, "sop")?);
                }
                "z" => {
                    dup(witness.is_some())?;
                    witness = Some(value.to_string());
                }
                other => {
                    return Err(Error::InvalidPresentationFile(format!(
                        "line {}: unknown key {}",
                        lineno + 1,
                        other
                    )));
                }
            }
        }
        let characteristic = characteristic
            .ok_or_else(|| Error::InvalidPresentationFile("missing key char".to_string()))?;
        let vars =
            vars.ok_or_else(|| Error::InvalidPresentationFile("missing key vars".to_string()))?;
        let ideal =
            ideal.ok_or_else(|| Error::InvalidPresentationFile("missing key ideal".to_string()))?;
        Ok(PresentationFile {
            characteristic,
            vars,
            weights,
            ideal,
            sop,
            witness,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("char = {}\n", self.characteristic));
        out.push_str(&format!("vars = [{}]\n", self.vars.join(", ")));
        if let Some(w) = &self.weights {
            let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("weights = [{}]\n", ws.join(", ")));
        }
        out.push_str(&format!("ideal = [{}]\n", self.ideal.join(", ")));
        if let Some(s) = &self.sop {
            out.push_str(&format!("sop = [{}]\n", s.join(", ")));
        }
        if let Some(z) = &self.witness {
            out.push_str(&format!("z = {}\n", z));
        }
        out
    }

    /// Build the ring presentation and any optional sections.
    pub fn build(
        &self,
    ) -> Result<(
        RingPresentation,
        Option<ParameterSequence>,
        Option<Polynomial>,
    )> {
        let weights = self
            .weights
            .clone()
            .unwrap_or_else(|| vec![1; self.vars.len()]);
        let ring = PolyRing::new(self.characteristic, self.vars.clone(), weights)?;
        let gens = self
            .ideal
            .iter()
            .map(|s| parse_poly(&ring, s))
            .collect::<Result<Vec<_>>>()?;
        let presentation = RingPresentation::new(ring, gens)?;
        let sop = match &self.sop {
            None => None,
            Some(elems) => {
                let polys = elems
                    .iter()
                    .map(|s| parse_poly(presentation.ring(), s))
                    .collect::<Result<Vec<_>>>()?;
                Some(presentation.verify_sop(polys)?)
            }
        };
        let witness = match &self.witness {
            None => None,
            Some(z) => Some(parse_poly(presentation.ring(), z)?),
        };
        Ok((presentation, sop, witness))
    }

    /// Rebuild a file description from live objects (used by adjoin-sqrt).
    pub fn from_presentation(
        presentation: &RingPresentation,
        sop: Option<&[Polynomial]>,
        witness: Option<&Polynomial>,
    ) -> PresentationFile {
        let ring = presentation.ring();
        PresentationFile {
            characteristic: ring.characteristic(),
            vars: ring.vars().to_vec(),
            weights: Some(ring.grading().weights().to_vec()),
            ideal: presentation
                .ideal_gens()
                .iter()
                .map(|g| print_poly(ring, g))
                .collect(),
            sop: sop.map(|elems| elems.iter().map(|e| print_poly(ring, e)).collect()),
            witness: witness.map(|z| print_poly(ring, z)),
        }
    }
}
