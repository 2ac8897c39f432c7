//! Bundled example models, embedded at compile time.

use crate::chain::GaugeModel;
use crate::error::{Error, Result};
use crate::io::ModelFile;

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../models/", $name, ".json")))),*]
    };
}

const MODELS: &[(&str, &str)] = bundled![
    "point-z3",
    "circle-z2-deg0",
    "circle-z2-deg1",
    "interval-z4z2",
    "torus-cw-z2",
    "torus-cw-z3",
    "klein-cw-z2",
    "klein-cw-z4",
    "sphere-simplicial-z2",
    "sphere-simplicial-z4",
    "rp2-simplicial-z2",
    "torus-simplicial-z2",
    "cyclic-resolution-z3",
];

/// Names of every bundled model, in library order.
pub fn names() -> impl Iterator<Item = &'static str> {
    MODELS.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Option<&'static str> {
    MODELS.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn model_file(name: &str) -> Result<ModelFile> {
    let text =
        source(name).ok_or_else(|| Error::Schema(format!("no bundled model named {name:?}")))?;
    ModelFile::from_json(text)
}

pub fn load(name: &str) -> Result<GaugeModel> {
    model_file(name)?.build()
}

/// Every bundled model file with its built model.
pub fn all() -> Vec<(ModelFile, GaugeModel)> {
    names()
        .map(|n| {
            let f = model_file(n).expect("bundled model parses");
            let m = f.build().expect("bundled model is valid");
            (f, m)
        })
        .collect()
}
