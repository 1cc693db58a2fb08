//! `key = value` parameter files.
//!
//! Each key names a long flag of the chosen subcommand (or a global flag).
//! Entries are spliced into the argument list directly after the subcommand
//! name, so anything given on the command line overrides them. Keys that
//! belong only to other subcommands are ignored, which lets one file serve
//! a whole experiment.

use std::ffi::OsString;
use std::fmt;
use std::path::Path;

use clap::{ArgAction, Command};

#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

/// Parses `key = value` lines. Blank lines and lines starting with `#` are skipped.
pub fn parse(text: &str) -> Result<Vec<(String, String)>, ConfigError> {
    let mut entries = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(ConfigError(format!(
                "line {}: expected `key = value`",
                n + 1
            )));
        };
        let key = key.trim().replace('_', "-");
        if key.is_empty() {
            return Err(ConfigError(format!("line {}: empty key", n + 1)));
        }
        entries.push((key, value.trim().to_owned()));
    }
    Ok(entries)
}

/// Finds the value of `--config` in raw arguments, if present.
pub fn config_path(args: &[OsString]) -> Option<OsString> {
    let mut it = args.iter().skip(1);
    while let Some(arg) = it.next() {
        let s = arg.to_string_lossy();
        if s == "--config" {
            return it.next().cloned();
        }
        if let Some(v) = s.strip_prefix("--config=") {
            return Some(v.into());
        }
        if s == "--" {
            break;
        }
    }
    None
}

/// Returns `args` with the entries of the config file at `path` inserted
/// after the subcommand name.
pub fn splice(
    cmd: &Command,
    args: Vec<OsString>,
    path: &Path,
) -> Result<Vec<OsString>, ConfigError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError(format!("cannot read config {}: {e}", path.display())))?;
    let entries = parse(&text)?;
    let Some(pos) = args.iter().position(|a| cmd.find_subcommand(a).is_some()) else {
        // No subcommand: let clap report the usage error.
        return Ok(args);
    };
    let sub = cmd
        .find_subcommand(&args[pos])
        .expect("position points at a subcommand");
    let mut injected = Vec::new();
    for (key, value) in entries {
        if key == "config" {
            return Err(ConfigError(
                "config files cannot include other config files".into(),
            ));
        }
        let lookup = |c: &Command| {
            c.get_arguments()
                .find(|a| a.get_long() == Some(key.as_str()))
                .cloned()
        };
        let arg = match lookup(sub).or_else(|| lookup(cmd)) {
            Some(arg) => arg,
            None if cmd.get_subcommands().any(|s| lookup(s).is_some()) => continue,
            None => return Err(ConfigError(format!("unknown config key {key:?}"))),
        };
        if matches!(arg.get_action(), ArgAction::SetTrue) {
            let on = value.parse::<bool>().map_err(|_| {
                ConfigError(format!(
                    "config key {key:?} expects true or false, got {value:?}"
                ))
            })?;
            if on {
                injected.push(OsString::from(format!("--{key}")));
            }
        } else {
            injected.push(OsString::from(format!("--{key}={value}")));
        }
    }
    let mut out = args;
    out.splice(pos + 1..pos + 1, injected);
    Ok(out)
}
