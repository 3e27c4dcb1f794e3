//! Text and JSON wire forms of a biquaternion.
//!
//! Text form: eight whitespace-separated decimals in the order
//! `w_r x_r y_r z_r w_i x_i y_i z_i`. JSON form: `{"qr": [4 numbers], "qi": [4 numbers]}`.

use biquat::format::format_real;
use biquat::Biquaternion;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WireError {
    #[error("expected {expected} numbers, got {got}")]
    Count { expected: usize, got: usize },
    #[error("token {position} ({token:?}) is not a number")]
    NotANumber { position: usize, token: String },
    #[error("token {position} ({token:?}) is not finite")]
    NotFinite { position: usize, token: String },
    #[error("invalid JSON biquaternion: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WireBiquaternion {
    pub qr: [f64; 4],
    pub qi: [f64; 4],
}

impl From<Biquaternion> for WireBiquaternion {
    fn from(q: Biquaternion) -> Self {
        Self {
            qr: q.qr.to_array(),
            qi: q.qi.to_array(),
        }
    }
}

impl From<WireBiquaternion> for Biquaternion {
    fn from(w: WireBiquaternion) -> Self {
        let [a, b, c, d] = w.qr;
        let [e, f, g, h] = w.qi;
        Biquaternion::from_array([a, b, c, d, e, f, g, h])
    }
}

/// Parses exactly `N` finite whitespace-separated numbers. Positions in
/// errors are 1-based.
pub fn parse_numbers<const N: usize>(text: &str) -> Result<[f64; N], WireError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != N {
        return Err(WireError::Count {
            expected: N,
            got: tokens.len(),
        });
    }
    let mut out = [0.0; N];
    for (n, token) in tokens.iter().enumerate() {
        let value: f64 = token.parse().map_err(|_| WireError::NotANumber {
            position: n + 1,
            token: token.to_string(),
        })?;
        if !value.is_finite() {
            return Err(WireError::NotFinite {
                position: n + 1,
                token: token.to_string(),
            });
        }
        out[n] = value;
    }
    Ok(out)
}

/// Accepts either wire form.
pub fn parse_biquaternion(text: &str) -> Result<Biquaternion, WireError> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let wire: WireBiquaternion = serde_json::from_str(trimmed).map_err(|e| WireError::Json(e.to_string()))?;
        return Ok(wire.into());
    }
    parse_numbers::<8>(trimmed).map(Biquaternion::from_array)
}

pub fn format_numbers(values: &[f64], digits: usize) -> String {
    values
        .iter()
        .map(|&v| format_real(v, digits))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Text wire form. Lossless at 17 digits.
pub fn format_biquaternion(q: &Biquaternion, digits: usize) -> String {
    format_numbers(&q.to_array(), digits)
}

/// Rounds to `digits` significant digits, the same values the text form shows.
pub fn round_to_digits(x: f64, digits: usize) -> f64 {
    format_real(x, digits).parse().unwrap_or(x)
}

pub fn to_json(q: &Biquaternion, digits: usize) -> serde_json::Value {
    let r = |v: [f64; 4]| v.map(|x| round_to_digits(x, digits));
    serde_json::json!({ "qr": r(q.qr.to_array()), "qi": r(q.qi.to_array()) })
}
