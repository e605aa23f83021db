//! Presentation files: the json input format and its validation.

use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;

use frobsplit::fsing::Presentation;
use frobsplit::{parse_polynomial, Ideal, Polynomial, RingCtx, TermOrder};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub p: u64,
    pub vars: Vec<String>,
    #[serde(default = "default_order")]
    pub order: String,
    #[serde(rename = "A")]
    pub a: Vec<String>,
}

fn default_order() -> String {
    "grevlex".to_string()
}

pub struct LoadedPresentation {
    pub ring: Arc<RingCtx>,
    pub presentation: Presentation,
    pub file: PresentationFile,
}

#[derive(Debug)]
pub enum LoadError {
    Io(String),
    Json(String),
    Validation(String),
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Io(m) => write!(f, "cannot read input: {m}"),
            LoadError::Json(m) => write!(f, "malformed input file: {m}"),
            LoadError::Validation(m) => write!(f, "{m}"),
        }
    }
}

pub fn load_presentation(path: &Path) -> Result<LoadedPresentation, LoadError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| LoadError::Io(format!("{path:?}: {e}")))?;
    let file: PresentationFile =
        serde_json::from_str(&text).map_err(|e| LoadError::Json(e.to_string()))?;

    let order = match file.order.as_str() {
        "grevlex" => TermOrder::GrevLex,
        "lex" => TermOrder::Lex,
        other => {
            return Err(LoadError::Validation(format!(
                "unknown term order `{other}` (expected grevlex or lex)"
            )))
        }
    };
    let ring = RingCtx::new(file.p, file.vars.clone(), order)
        .map_err(|e| LoadError::Validation(e.to_string()))?;
    let mut gens: Vec<Polynomial> = Vec::with_capacity(file.a.len());
    for (i, text) in file.a.iter().enumerate() {
        let poly = parse_polynomial(text, &ring)
            .map_err(|e| LoadError::Validation(format!("A[{i}] = `{text}`: {e}")))?;
        gens.push(poly);
    }
    let ideal = Ideal::new(&ring, gens).map_err(|e| LoadError::Validation(e.to_string()))?;
    let presentation =
        Presentation::new(&ring, ideal).map_err(|e| LoadError::Validation(e.to_string()))?;
    Ok(LoadedPresentation {
        ring,
        presentation,
        file,
    })
}

/// Parse a comma-separated generator list in the ring.
pub fn parse_ideal_arg(text: &str, ring: &Arc<RingCtx>) -> Result<Ideal, LoadError> {
    let mut gens = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() || part == "0" {
            continue;
        }
        let poly = parse_polynomial(part, ring)
            .map_err(|e| LoadError::Validation(format!("`{part}`: {e}")))?;
        gens.push(poly);
    }
    Ideal::new(ring, gens).map_err(|e| LoadError::Validation(e.to_string()))
}
