use std::path::Path;

use cherednik_core::cherednik::is_simple_spectrum;
use cherednik_core::combinatorics::syt_enumerate;
use cherednik_core::{Composition, MultiPartition, ParamPoint, StandardTableau};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

/// A job as read from `--config`; command-line flags override its fields.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub shape: Option<Value>,
    pub point: Option<Value>,
    pub maxdeg: Option<u32>,
    pub pdiv: Option<u32>,
    pub mu: Option<Vec<u32>>,
    pub tableau: Option<Value>,
    pub seed: Option<u64>,
}

impl JobConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = read(path)?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("config {}: {e}", path.display())))
    }
}

/// How the point was obtained.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum PointSource {
    Given,
    Generic { seed: u64, attempts: u32 },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Inline JSON if the argument looks like JSON, otherwise a file path.
pub fn json_arg(arg: &str) -> Result<Value, CliError> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('[') || trimmed.starts_with('{') || trimmed.starts_with('"') {
        arg.to_string()
    } else {
        read(Path::new(arg))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("malformed JSON in {arg:?}: {e}")))
}

pub fn parse_shape(v: &Value) -> Result<MultiPartition, CliError> {
    let shape: MultiPartition =
        serde_json::from_value(v.clone()).map_err(|e| CliError::Input(format!("shape: {e}")))?;
    if shape.n() == 0 {
        return Err(CliError::Input("shape has no boxes".into()));
    }
    Ok(shape)
}

/// A point from JSON, or a random simple-spectrum point for `"generic"`.
pub fn parse_point(
    v: &Value,
    shape: &MultiPartition,
    seed: u64,
    kappa_one: bool,
) -> Result<(ParamPoint, PointSource), CliError> {
    if v.as_str() == Some("generic") {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for attempts in 1..=1000 {
            let p = ParamPoint::random(shape.r(), kappa_one, &mut rng);
            if is_simple_spectrum(shape, &p)?.simple {
                return Ok((p, PointSource::Generic { seed, attempts }));
            }
        }
        return Err(CliError::Input("no simple-spectrum point found in 1000 samples".into()));
    }
    let p: ParamPoint = serde_json::from_value(v.clone()).map_err(|e| CliError::Input(format!("point: {e}")))?;
    if p.r() != shape.r() {
        return Err(CliError::Input(format!("point has r = {} but the shape has r = {}", p.r(), shape.r())));
    }
    Ok((p, PointSource::Given))
}

pub fn parse_mu(mu: &[u32], shape: &MultiPartition) -> Result<Composition, CliError> {
    if mu.len() != shape.n() {
        return Err(CliError::Input(format!("μ has {} entries, expected n = {}", mu.len(), shape.n())));
    }
    Ok(Composition::new(mu.to_vec()))
}

/// A tableau given by its index in the enumeration order or by its rows.
pub fn parse_tableau(v: &Value, shape: &MultiPartition) -> Result<StandardTableau, CliError> {
    if let Some(k) = v.as_u64() {
        let all = syt_enumerate(shape);
        return all
            .get(k as usize)
            .cloned()
            .ok_or_else(|| CliError::Input(format!("tableau index {k} out of range (0..{})", all.len())));
    }
    let rows: Vec<Vec<Vec<usize>>> =
        serde_json::from_value(v.clone()).map_err(|e| CliError::Input(format!("tableau: {e}")))?;
    StandardTableau::from_rows(shape, &rows)
        .ok_or_else(|| CliError::Input("tableau is not a standard filling of the shape".into()))
}
