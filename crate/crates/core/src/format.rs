//! Text formats for spaces and distributions.
//!
//! A space file is a JSON document
//!
//! ```text
//! {
//!   "name": "power-2",
//!   "ground": ["0", "1"],
//!   "convex": [
//!     [],
//!     [0],
//!     [0, 1],
//!     [1]
//!   ]
//! }
//! ```
//!
//! with 0-based ascending index lists. A distribution file holds
//! `{"weights": ["1/2", "1/2"]}`, one exact fraction per ground point.
//! Writers emit one canonical byte layout, so generating a space twice, or
//! parsing and re-writing a generated file, yields identical bytes.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::measure::Distribution;
use crate::set::PointSet;
use crate::space::{ConvexitySpace, GroundSet};
use crate::Rational;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceDoc {
    name: String,
    ground: Vec<String>,
    convex: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DistributionDoc {
    weights: Vec<String>,
}

/// A parsed space file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSpace {
    pub name: String,
    pub space: ConvexitySpace,
}

pub fn parse_space(text: &str) -> Result<NamedSpace> {
    let doc: SpaceDoc = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let ground = GroundSet::new(doc.ground)?;
    let mut family = Vec::with_capacity(doc.convex.len());
    for set in &doc.convex {
        if !set.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Format(format!(
                "index list {set:?} is not strictly ascending"
            )));
        }
        if let Some(&bad) = set.iter().find(|&&i| i >= ground.len()) {
            return Err(Error::Format(format!(
                "index {bad} outside ground set of {}",
                ground.len()
            )));
        }
        family.push(PointSet::from_indices(set.iter().copied()));
    }
    let space = ConvexitySpace::validate(ground, family)?;
    Ok(NamedSpace {
        name: doc.name,
        space,
    })
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

pub fn write_space(name: &str, space: &ConvexitySpace) -> String {
    let labels: Vec<String> = space
        .ground()
        .labels()
        .iter()
        .map(|l| json_string(l))
        .collect();
    let sets: Vec<String> = space
        .convex()
        .iter()
        .map(|c| {
            let idx: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            format!("    [{}]", idx.join(", "))
        })
        .collect();
    format!(
        "{{\n  \"name\": {},\n  \"ground\": [{}],\n  \"convex\": [\n{}\n  ]\n}}\n",
        json_string(name),
        labels.join(", "),
        sets.join(",\n")
    )
}

pub fn parse_distribution(text: &str, ground_size: usize) -> Result<Distribution<Rational>> {
    let doc: DistributionDoc =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if doc.weights.len() != ground_size {
        return Err(Error::WeightCount {
            expected: ground_size,
            got: doc.weights.len(),
        });
    }
    Distribution::from_strs(&doc.weights)
}

pub fn write_distribution(mu: &Distribution<Rational>) -> String {
    let weights: Vec<String> = mu.to_strs().iter().map(|w| json_string(w)).collect();
    format!("{{\n  \"weights\": [{}]\n}}\n", weights.join(", "))
}
