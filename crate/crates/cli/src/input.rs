use std::fs::File;

use weda_core::{load_text, parse_rational, ByteText, RandomSource, Rational, Threshold};

use crate::{usage, CliError, InputArgs};

pub(crate) fn load_pair(args: &InputArgs) -> Result<(ByteText, ByteText), CliError> {
    let x = load_one(args.x_file.as_deref(), args.x_str.as_deref(), "X")?;
    let y = load_one(args.y_file.as_deref(), args.y_str.as_deref(), "Y")?;
    Ok((x, y))
}

fn load_one(file: Option<&std::path::Path>, inline: Option<&str>, name: &str) -> Result<ByteText, CliError> {
    match (file, inline) {
        (Some(path), None) => {
            let f = File::open(path).map_err(|e| CliError::Runtime(anyhow::anyhow!("{}: {e}", path.display())))?;
            Ok(load_text(f)?)
        }
        (None, Some(s)) => Ok(ByteText::new(s.as_bytes())),
        _ => usage(format!("give {name} either as a file or with --{}-str", name.to_lowercase())),
    }
}

pub(crate) fn rational(flag: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|_| CliError::Usage(format!("--{flag}: cannot parse {s:?} as a rational")))
}

pub(crate) fn threshold(k: &str, a: u64) -> Result<Threshold, CliError> {
    Ok(Threshold::new(rational("k", k)?, a)?)
}

/// The given seed, or a fresh one drawn from the clock.
pub(crate) fn seed_or_fresh(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let nanos = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map_or(0, |d| d.as_nanos() as u64);
        RandomSource::new(nanos ^ u64::from(std::process::id())).derive_seed(0)
    })
}
