//! JSON presentation files and bundled fixtures.

use crate::forms::{parse_form, FormError};
use crate::linfty::{AlgebraError, GVector, Generator, Presentation, TensorElement};
use crate::rational::{parse_rational, render_rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{context}: JSON error at line {line}, column {column}: {message}")]
    Json { context: String, line: usize, column: usize, message: String },
    #[error("{context}: bracket entry {entry}: {source}")]
    Entry { context: String, entry: usize, source: AlgebraError },
    #[error("{context}: {source}")]
    Algebra { context: String, source: AlgebraError },
    #[error("{context}: bad coefficient {text:?}")]
    Coefficient { context: String, text: String },
    #[error("{context}: {source}")]
    Form { context: String, source: FormError },
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("{context}: simplex belongs to algebra {found:?}, expected {expected:?}")]
    AlgebraName { context: String, expected: String, found: String },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GeneratorEntry {
    pub symbol: String,
    pub degree: i32,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CoefficientEntry {
    pub symbol: String,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BracketEntry {
    pub args: Vec<String>,
    pub value: Vec<CoefficientEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PresentationFile {
    pub name: String,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_arity: Option<usize>,
}

fn json_error(context: &str, e: serde_json::Error) -> IoError {
    IoError::Json { context: context.to_string(), line: e.line(), column: e.column(), message: e.to_string() }
}

/// Parses a coefficient list `[{symbol, coeff}]` into a vector.
pub fn parse_vector(alg: &Presentation, entries: &[CoefficientEntry], context: &str) -> Result<GVector, IoError> {
    let mut v = GVector::zero();
    for e in entries {
        let i = alg
            .index_of(&e.symbol)
            .map_err(|source| IoError::Algebra { context: context.to_string(), source })?;
        let c = parse_rational(&e.coeff)
            .map_err(|_| IoError::Coefficient { context: context.to_string(), text: e.coeff.clone() })?;
        v.add_term(i, c);
    }
    Ok(v)
}

pub fn vector_entries(alg: &Presentation, v: &GVector) -> Vec<CoefficientEntry> {
    v.terms()
        .map(|(i, c)| CoefficientEntry { symbol: alg.generators()[i].symbol.clone(), coeff: render_rational(c) })
        .collect()
}

/// Parses and validates a presentation from JSON text.
pub fn parse_presentation(text: &str, context: &str) -> Result<Presentation, IoError> {
    let file: PresentationFile = serde_json::from_str(text).map_err(|e| json_error(context, e))?;
    let generators: Vec<Generator> =
        file.generators.iter().map(|g| Generator { symbol: g.symbol.clone(), degree: g.degree }).collect();
    let skeleton = Presentation::new(file.name.clone(), generators.clone(), vec![], Some(usize::MAX))
        .map_err(|source| IoError::Algebra { context: context.to_string(), source })?;
    let mut entries = Vec::new();
    for (n, b) in file.brackets.iter().enumerate() {
        let entry_ctx = format!("{context}: bracket entry {n}");
        let args = b
            .args
            .iter()
            .map(|s| skeleton.index_of(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|source| IoError::Entry { context: context.to_string(), entry: n, source })?;
        entries.push((args, parse_vector(&skeleton, &b.value, &entry_ctx)?));
    }
    let observed = entries.iter().map(|(a, _)| a.len()).max().unwrap_or(0);
    let max_arity = file.max_arity.unwrap_or(observed.max(1));
    // validate entries one at a time so the error names the offending one
    for (n, (args, value)) in entries.iter().enumerate() {
        Presentation::new(file.name.clone(), generators.clone(), vec![(args.clone(), value.clone())], Some(max_arity))
            .map_err(|source| IoError::Entry { context: context.to_string(), entry: n, source })?;
    }
    Presentation::new(file.name, generators, entries, Some(max_arity))
        .map_err(|source| IoError::Algebra { context: context.to_string(), source })
}

pub fn load_presentation(path: &std::path::Path) -> Result<Presentation, IoError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| IoError::Read { path: path.display().to_string(), source })?;
    parse_presentation(&text, &path.display().to_string())
}

/// The file form of a presentation, with brackets on sorted tuples.
pub fn presentation_file(alg: &Presentation) -> PresentationFile {
    PresentationFile {
        name: alg.name().to_string(),
        generators: alg
            .generators()
            .iter()
            .map(|g| GeneratorEntry { symbol: g.symbol.clone(), degree: g.degree })
            .collect(),
        brackets: alg
            .table()
            .map(|(args, v)| BracketEntry {
                args: args.iter().map(|&i| alg.generators()[i].symbol.clone()).collect(),
                value: vector_entries(alg, v),
            })
            .collect(),
        max_arity: Some(alg.max_arity()),
    }
}

pub fn render_presentation(alg: &Presentation) -> String {
    serde_json::to_string_pretty(&presentation_file(alg)).expect("presentation serializes")
}

/// A simplex as stored on disk: algebra name, dimension and rendered forms.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SimplexFile {
    pub algebra: String,
    pub n: usize,
    pub components: Vec<(String, String)>,
}

pub fn simplex_file(alg: &Presentation, value: &TensorElement) -> SimplexFile {
    SimplexFile {
        algebra: alg.name().to_string(),
        n: value.dim(),
        components: value.components().map(|(i, f)| (alg.generators()[i].symbol.clone(), f.to_string())).collect(),
    }
}

pub fn render_simplex(alg: &Presentation, value: &TensorElement) -> String {
    serde_json::to_string_pretty(&simplex_file(alg, value)).expect("simplex serializes")
}

pub fn parse_simplex(alg: &Presentation, text: &str, context: &str) -> Result<TensorElement, IoError> {
    let file: SimplexFile = serde_json::from_str(text).map_err(|e| json_error(context, e))?;
    if file.algebra != alg.name() {
        return Err(IoError::AlgebraName {
            context: context.to_string(),
            expected: alg.name().to_string(),
            found: file.algebra,
        });
    }
    let mut out = TensorElement::zero(file.n);
    for (symbol, form) in &file.components {
        let i = alg.index_of(symbol).map_err(|source| IoError::Algebra { context: context.to_string(), source })?;
        let f = parse_form(file.n, form).map_err(|source| IoError::Form { context: context.to_string(), source })?;
        out.add_scaled(&TensorElement::single(i, f), &num_traits::One::one());
    }
    Ok(out)
}

/// Parses a vector given as a JSON list of `{symbol, coeff}` objects.
pub fn parse_vector_json(alg: &Presentation, text: &str, context: &str) -> Result<GVector, IoError> {
    let entries: Vec<CoefficientEntry> = serde_json::from_str(text).map_err(|e| json_error(context, e))?;
    parse_vector(alg, &entries, context)
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct InputEntry {
    pub slot: Vec<usize>,
    pub value: Vec<CoefficientEntry>,
}

/// Parses Campbell–Hausdorff inputs: a JSON list of `{slot, value}` objects
/// where `slot` is an increasing subset of `1..=n`.
pub fn parse_ch_inputs(
    alg: &Presentation,
    text: &str,
    context: &str,
) -> Result<std::collections::BTreeMap<Vec<usize>, GVector>, IoError> {
    let entries: Vec<InputEntry> = serde_json::from_str(text).map_err(|e| json_error(context, e))?;
    entries
        .iter()
        .map(|e| {
            let label = e.slot.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
            Ok((e.slot.clone(), parse_vector(alg, &e.value, &format!("{context}: slot {label}"))?))
        })
        .collect()
}

/// Bundled example presentations.
pub mod fixtures {
    use super::{parse_presentation, IoError};
    use crate::linfty::Presentation;

    pub const NAMES: [&str; 8] = ["zero", "abelian_delta", "heisenberg", "ut4", "dg_pair", "dglie01", "linfty3", "linfty_tree"];

    /// Free nilpotent dg Lie algebra of class 3 on `x1, x2` (degree 0) and
    /// `x12` (degree -1); loaded on demand, not part of [`NAMES`].
    pub const FREE3: &str = "free3";

    fn source(name: &str) -> Option<&'static str> {
        Some(match name {
            "zero" => include_str!("../fixtures/zero.json"),
            "abelian_delta" => include_str!("../fixtures/abelian_delta.json"),
            "heisenberg" => include_str!("../fixtures/heisenberg.json"),
            "ut4" => include_str!("../fixtures/ut4.json"),
            "dg_pair" => include_str!("../fixtures/dg_pair.json"),
            "dglie01" => include_str!("../fixtures/dglie01.json"),
            "linfty3" => include_str!("../fixtures/linfty3.json"),
            "linfty_tree" => include_str!("../fixtures/linfty_tree.json"),
            "free3" => include_str!("../fixtures/free3.json"),
            _ => return None,
        })
    }

    pub fn text(name: &str) -> Result<&'static str, IoError> {
        source(name).ok_or_else(|| IoError::UnknownFixture(name.to_string()))
    }

    pub fn load(name: &str) -> Result<Presentation, IoError> {
        parse_presentation(text(name)?, name)
    }

    /// Loads a fixture known to be valid.
    pub fn get(name: &str) -> Presentation {
        load(name).unwrap_or_else(|e| panic!("bundled fixture {name}: {e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_load_and_round_trip() {
        for name in fixtures::NAMES {
            let alg = fixtures::get(name);
            let again = parse_presentation(&render_presentation(&alg), "render").unwrap();
            assert_eq!(alg, again, "{name}");
        }
        assert_eq!(fixtures::get("heisenberg").lower_central(64).index, Some(3));
        assert_eq!(fixtures::get("zero").dim(), 0);
    }

    #[test]
    fn free3_matches_builder() {
        let built = crate::linfty::free_nilpotent_dg_lie("free3", &[("x1", 0), ("x2", 0), ("x12", -1)], 3).unwrap();
        assert_eq!(fixtures::get("free3"), built);
    }

    #[test]
    fn wrong_degree_names_entry() {
        let text = r#"{"name":"bad","generators":[{"symbol":"x","degree":0},{"symbol":"y","degree":1}],
            "brackets":[{"args":["x","x"],"value":[]},{"args":["x","y"],"value":[{"symbol":"x","coeff":"1"}]}]}"#;
        match parse_presentation(text, "bad.json") {
            Err(IoError::Entry { entry, source: AlgebraError::DegreeMismatch { .. }, .. }) => assert_eq!(entry, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn json_errors_carry_position() {
        match parse_presentation("{\n  \"name\": 3\n}", "f.json") {
            Err(IoError::Json { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
