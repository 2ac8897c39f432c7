//! Resolving the model argument to a model file.

use std::path::Path;

use hgauge_core::{library, Error, ModelFile, Result};

/// Short names accepted after `builtin:`.
const ALIASES: &[(&str, &str)] = &[
    ("point", "point-z3"),
    ("torus", "torus-cw-z2"),
    ("sphere", "sphere-simplicial-z2"),
    ("rp2", "rp2-simplicial-z2"),
    ("klein-z2", "klein-cw-z2"),
    ("klein-z4", "klein-cw-z4"),
];

pub fn resolve_builtin(name: &str) -> &str {
    let name = name.strip_suffix(".json").unwrap_or(name);
    ALIASES
        .iter()
        .find(|(alias, _)| *alias == name)
        .map_or(name, |(_, full)| full)
}

pub fn load(arg: &str) -> Result<ModelFile> {
    match arg.strip_prefix("builtin:") {
        Some(name) => library::model_file(resolve_builtin(name)).map_err(|_| {
            let known: Vec<&str> = library::names().collect();
            Error::Schema(format!(
                "no bundled model {name:?}; known: {}",
                known.join(", ")
            ))
        }),
        None => ModelFile::load(Path::new(arg)),
    }
}
