//! Bracket memo persistence: a JSON object from comma-joined sorted indices
//! to rational strings, e.g. `{"0,2,4": "11/1440"}`.

use std::collections::BTreeMap;
use std::fs;
use std::io::ErrorKind;
use std::path::Path;

use socle_core::{Context, Rational};

use crate::commands::CliError;

pub fn load(ctx: &Context, path: &Path) -> Result<usize, CliError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(CliError::Io(format!("{}: {e}", path.display()))),
    };
    let raw: BTreeMap<String, Rational> =
        serde_json::from_str(&text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let mut entries = Vec::with_capacity(raw.len());
    for (key, value) in raw {
        let indices = if key.is_empty() {
            Vec::new()
        } else {
            key.split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Io(format!("{}: bad key {key:?}: {e}", path.display())))?
        };
        entries.push((indices, value));
    }
    let n = entries.len();
    ctx.brackets()
        .preload(entries)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(n)
}

pub fn save(ctx: &Context, path: &Path) -> Result<(), CliError> {
    let map: BTreeMap<String, Rational> = ctx
        .brackets()
        .snapshot()
        .into_iter()
        .map(|(k, v)| (k.iter().map(u32::to_string).collect::<Vec<_>>().join(","), v))
        .collect();
    let text = serde_json::to_string_pretty(&map).map_err(|e| CliError::Io(e.to_string()))?;
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
