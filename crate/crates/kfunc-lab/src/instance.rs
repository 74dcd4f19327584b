//! Serializable problem instances.
//!
//! An instance is a JSON document with a version tag and a list of
//! coordinates, each one of
//!
//! ```json
//! { "scalar":  { "mu": 1.0, "a": 1.0, "b": 2.0, "x": 1.0 } }
//! { "profile": { "mu": 1.0, "k": [[0.5, 2.0], [1.0, 1.0]] } }
//! { "levels":  { "mu": 1.0, "levels": [[3.0, 1.0], [1.0, 2.0]] } }
//! ```
//!
//! `k` lists `[right_endpoint, value]` pairs with strictly increasing
//! endpoints and nonincreasing values (tail 0 implicit); `levels` lists
//! `[value, mass]` pairs. `mu` defaults to 1 for level coordinates.

use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::alloc::SimpleVectorFunction;
use crate::kfunc::{KProfile, WeightedScalarCouple};
use crate::stepfn::{StepFunction, ValueMassList};
use crate::{Error, Result};

pub const INSTANCE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub version: u32,
    pub coords: Vec<Coordinate>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coordinate {
    Scalar {
        mu: f64,
        a: f64,
        b: f64,
        x: f64,
    },
    Profile {
        mu: f64,
        k: Vec<(f64, f64)>,
    },
    Levels {
        #[serde(default = "default_mass")]
        mu: f64,
        levels: Vec<(f64, f64)>,
    },
}

fn default_mass() -> f64 {
    1.0
}

impl Instance {
    pub fn new(coords: Vec<Coordinate>) -> Self {
        Self {
            version: INSTANCE_VERSION,
            coords,
        }
    }

    /// Parses and schema-validates a JSON document.
    pub fn from_json(text: &str) -> Result<Self> {
        let instance: Instance =
            serde_json::from_str(text).map_err(|e| Error::Instance(format!("parse error: {e}")))?;
        instance.validate()?;
        Ok(instance)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Instance(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instances always serialize")
    }

    fn validate(&self) -> Result<()> {
        if self.version != INSTANCE_VERSION {
            return Err(Error::Instance(format!(
                "unsupported version {} (expected {INSTANCE_VERSION})",
                self.version
            )));
        }
        // full validation happens while building the vector function
        self.to_vector_function().map(|_| ())
    }

    /// Builds the simple vector function described by the coordinates.
    pub fn to_vector_function(&self) -> Result<SimpleVectorFunction> {
        let mut cells = Vec::with_capacity(self.coords.len());
        for (idx, coord) in self.coords.iter().enumerate() {
            let cell =
                build_cell(coord).map_err(|e| Error::Instance(format!("coordinate {idx}: {e}")))?;
            cells.push(cell);
        }
        SimpleVectorFunction::new(cells)
    }
}

fn build_cell(coord: &Coordinate) -> Result<(f64, KProfile)> {
    match coord {
        Coordinate::Scalar { mu, a, b, x } => Ok((
            *mu,
            KProfile::from_couple(&WeightedScalarCouple::new(*a, *b, *x)?),
        )),
        Coordinate::Profile { mu, k } => {
            let (breakpoints, values): (Vec<f64>, Vec<f64>) = k.iter().copied().unzip();
            let step = StepFunction::new(breakpoints, values, 0.0)?;
            Ok((*mu, KProfile::new(step)?))
        }
        Coordinate::Levels { mu, levels } => Ok((
            *mu,
            KProfile::from_levels(&ValueMassList::new(levels.clone())?),
        )),
    }
}
