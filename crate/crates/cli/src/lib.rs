//! Commands behind the `hexagram` binary: JSON in, JSON or SVG out.

use std::collections::BTreeMap;

use hexagram::hexagram::{all_sixty, four_special_pascals, PascalArray, PascalLine};
use hexagram::identities::{self, CheckOutcome};
use hexagram::reconstruct::reconstruct_from_coords;
use hexagram::scalar::{format_scalar, parse_scalar};
use hexagram::{Label, Scalar, SextupleParams};
use serde::{Deserialize, Serialize};
use serde_json::json;

pub mod render;

pub use render::{render_svg, RenderOptions, Viewport};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] hexagram::Error),
    #[error("viewport excludes every element of the drawing")]
    ViewportExcludesAll,
    #[error("identity checks failed: {0}")]
    IdentityFailure(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Core(hexagram::Error::Parse(_)) => 2,
            CliError::Core(e) if e.is_degenerate_geometry() => 3,
            CliError::ViewportExcludesAll => 3,
            CliError::Core(_) => 4,
            CliError::IdentityFailure(_) => 5,
            CliError::Io(_) => 1,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "ParseError",
            CliError::Core(e) => e.code(),
            CliError::ViewportExcludesAll => "ViewportExcludesAll",
            CliError::IdentityFailure(_) => "IdentityFailure",
            CliError::Io(_) => "IoError",
        }
    }

    /// Machine-readable form written to stderr.
    pub fn to_json(&self) -> String {
        json!({ "error": { "code": self.code(), "message": self.to_string() } }).to_string()
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Parses `"a,b,c,d,e,f"` into six distinct rationals.
pub fn parse_params(text: &str) -> CliResult<SextupleParams> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 6 {
        return Err(CliError::Parse(format!(
            "expected six comma-separated rationals, got {}",
            parts.len()
        )));
    }
    let mut values = Vec::with_capacity(6);
    for p in parts {
        values.push(parse_scalar(p).map_err(|_| CliError::Parse(format!("not a rational: {p:?}")))?);
    }
    let values: [Scalar; 6] = values.try_into().expect("six values");
    Ok(SextupleParams::new(values)?)
}

/// Comma-separated array codes such as `"ADB|ECF,ABC|FDE"`. Any of the
/// twelve shuffles of an array is accepted and stored canonically.
pub fn parse_arrays(text: &str) -> CliResult<Vec<PascalArray>> {
    text.split(',')
        .map(|code| {
            code.trim().parse().map_err(|e: hexagram::Error| {
                CliError::Parse(format!("bad array code {code:?}: {e}"))
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coords {
    pub s: String,
    pub t: String,
}

impl Coords {
    fn new((s, t): &(Scalar, Scalar)) -> Self {
        Coords { s: format_scalar(s), t: format_scalar(t) }
    }

    fn parse(&self, name: &str) -> CliResult<(Scalar, Scalar)> {
        let field = |v: &str, which: &str| {
            parse_scalar(v).map_err(|_| CliError::Parse(format!("{name}.{which}: not a rational: {v:?}")))
        };
        Ok((field(&self.s, "s")?, field(&self.t, "t")?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PascalRecord {
    pub array: String,
    /// Absent when the line passes through `[1, 0, 0]` and has no `(s, t)`.
    pub s: Option<String>,
    pub t: Option<String>,
    /// Cayley coefficients of the line's quadratic.
    pub line: [String; 3],
}

impl PascalRecord {
    fn new(p: &PascalLine) -> Self {
        let [z0, z1, z2] = p.line.form().coeffs() else {
            unreachable!("lines are quadratics")
        };
        PascalRecord {
            array: p.array.to_string(),
            s: p.coords.as_ref().map(|c| format_scalar(&c.0)),
            t: p.coords.as_ref().map(|c| format_scalar(&c.1)),
            line: [z0, z1, z2].map(format_scalar),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForwardOutput {
    pub l1: Coords,
    pub l2: Coords,
    pub l3: Coords,
    pub lstar: Coords,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub all: Option<Vec<PascalRecord>>,
}

/// The reconstruction input; extra fields (such as `all`) are ignored so
/// forward output can be piped straight in.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct LinesInput {
    pub l1: Coords,
    pub l2: Coords,
    pub l3: Coords,
    pub lstar: Coords,
}

pub fn cmd_forward(params: &SextupleParams, all: bool) -> CliResult<ForwardOutput> {
    let four = four_special_pascals(params)?;
    let [l1, l2, l3, lstar] = four.coords();
    let all = if all {
        Some(all_sixty(params)?.iter().map(PascalRecord::new).collect())
    } else {
        None
    };
    Ok(ForwardOutput {
        l1: Coords::new(&l1),
        l2: Coords::new(&l2),
        l3: Coords::new(&l3),
        lstar: Coords::new(&lstar),
        all,
    })
}

pub fn parse_lines_input(text: &str) -> CliResult<LinesInput> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("invalid input JSON: {e}")))
}

pub fn cmd_reconstruct(input: &LinesInput) -> CliResult<serde_json::Value> {
    let coords = [
        input.l1.parse("l1")?,
        input.l2.parse("l2")?,
        input.l3.parse("l3")?,
        input.lstar.parse("lstar")?,
    ];
    let result = reconstruct_from_coords(&coords)?;
    let params: BTreeMap<String, String> = Label::ALL
        .iter()
        .map(|&l| (l.param_name().to_string(), format_scalar(result.get(l))))
        .collect();
    let letters: Vec<serde_json::Value> = result
        .diagnostics
        .letters
        .iter()
        .map(|d| {
            json!({
                "letter": d.letter.to_string(),
                "row_pair": [d.row_pair.0, d.row_pair.1],
                "cross_check": d.cross_check.map(|(i, j)| [i, j]),
                "rank": d.rank,
            })
        })
        .collect();
    let chords = &result.diagnostics.stage_one.chords;
    let form = |l: &hexagram::Line| -> Vec<String> {
        l.form().coeffs().iter().map(format_scalar).collect()
    };
    Ok(json!({
        "params": params,
        "diagnostics": {
            "letters": letters,
            "chords": { "ae": form(&chords.ae), "cd": form(&chords.cd), "bf": form(&chords.bf) },
        },
    }))
}

/// Runs the identity suite. The table is returned even on failure so the
/// caller can print it before exiting.
pub fn cmd_verify_identities() -> (Vec<CheckOutcome>, CliResult<()>) {
    let table = identities::run_all();
    let failed: Vec<&str> = table.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    let status = if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::IdentityFailure(failed.join(", ")))
    };
    (table, status)
}

pub fn format_table(table: &[CheckOutcome]) -> String {
    table.iter().map(|r| format!("{r}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse() {
        let p = parse_params("7,-3,2,5,-4,1/2").unwrap();
        assert_eq!(format_scalar(p.get(Label::F)), "1/2");
        assert_eq!(parse_params("1,2,3").unwrap_err().exit_code(), 2);
        assert_eq!(parse_params("1,2,3,4,5,x").unwrap_err().exit_code(), 2);
        assert_eq!(parse_params("1,1,2,3,4,5").unwrap_err().exit_code(), 3);
    }

    #[test]
    fn arrays_parse() {
        let a = parse_arrays("ADB|ECF, ECF|ADB").unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a[0], a[1]);
        assert_eq!(a[0].to_string(), "ABD|EFC");
        assert!(parse_arrays("AAB|ECF").is_err());
        assert!(parse_arrays("ABC").is_err());
    }

    #[test]
    fn error_json_shape() {
        let e = CliError::Core(hexagram::Error::RoundTripFailed);
        let v: serde_json::Value = serde_json::from_str(&e.to_json()).unwrap();
        assert_eq!(v["error"]["code"], "RoundTripFailed");
        assert_eq!(e.exit_code(), 4);
    }
}
