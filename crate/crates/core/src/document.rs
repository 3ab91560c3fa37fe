//! JSON documents for forms.
//!
//! A single form:
//!
//! ```json
//! {
//!   "num_vars": 2,
//!   "degree": 3,
//!   "prime": 2147483647,
//!   "terms": [ { "exp": [2, 1], "coeff": 1 } ]
//! }
//! ```
//!
//! A list of forms (the generators of a presentation) wraps single-form
//! documents as `{ "forms": [ ... ] }`. Parsing is strict: unknown fields,
//! exponent vectors of the wrong length or degree, duplicate exponent vectors,
//! coefficients outside `[0, p)` and composite primes are all rejected.
//! Zero coefficients are accepted and dropped. Syntax errors carry the JSON
//! parser's line and column; rejected terms are located by their `"exp"` key.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::inverse_system::LevelPresentation;
use crate::poly::{Form, Monomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub exp: Vec<u32>,
    pub coeff: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFormDoc {
    num_vars: usize,
    degree: u32,
    prime: u64,
    terms: Vec<TermDoc>,
}

/// Why a syntactically valid form document was rejected.
struct Rejection {
    term: Option<usize>,
    message: String,
}

impl Rejection {
    fn doc(message: impl Into<String>) -> Self {
        Rejection {
            term: None,
            message: message.into(),
        }
    }

    fn term(k: usize, message: impl Into<String>) -> Self {
        Rejection {
            term: Some(k),
            message: format!("term {k}: {}", message.into()),
        }
    }
}

impl From<&Form> for RawFormDoc {
    fn from(f: &Form) -> Self {
        RawFormDoc {
            num_vars: f.num_vars(),
            degree: f.degree(),
            prime: f.field().modulus(),
            terms: f
                .terms()
                .map(|(m, c)| TermDoc {
                    exp: m.exponents().to_vec(),
                    coeff: c.value(),
                })
                .collect(),
        }
    }
}

fn validate(raw: RawFormDoc) -> std::result::Result<Form, Rejection> {
    if raw.num_vars == 0 {
        return Err(Rejection::doc("num_vars must be at least 1"));
    }
    let field = PrimeField::new(raw.prime).map_err(|e| Rejection::doc(e.to_string()))?;
    let mut seen = BTreeSet::new();
    let mut form = Form::zero(field, raw.num_vars, raw.degree);
    for (k, term) in raw.terms.into_iter().enumerate() {
        if term.exp.len() != raw.num_vars {
            return Err(Rejection::term(
                k,
                format!(
                    "exponent vector has length {}, expected num_vars = {}",
                    term.exp.len(),
                    raw.num_vars
                ),
            ));
        }
        let m = Monomial::new(term.exp);
        if m.degree() != raw.degree {
            return Err(Rejection::term(
                k,
                format!(
                    "exponent vector {:?} has degree {}, expected {}",
                    m.exponents(),
                    m.degree(),
                    raw.degree
                ),
            ));
        }
        let coeff = field.canonical(term.coeff).ok_or_else(|| {
            Rejection::term(k, format!("coefficient {} is not in [0, {})", term.coeff, raw.prime))
        })?;
        if !seen.insert(m.clone()) {
            return Err(Rejection::term(k, format!("duplicate exponent vector {:?}", m.exponents())));
        }
        form.add_term(m, coeff).map_err(|e| Rejection::term(k, e.to_string()))?;
    }
    Ok(form)
}

/// Line and column (1-based) of the `n`-th `"exp"` key in `text`.
fn locate_term(text: &str, n: usize) -> Option<(usize, usize)> {
    let offset = text.match_indices("\"exp\"").nth(n)?.0;
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = offset - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    Some((line, column))
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn rejection_error(text: &str, form_index: Option<usize>, terms_before: usize, r: Rejection) -> Error {
    let prefix = form_index.map(|i| format!("form {i}, ")).unwrap_or_default();
    let position = r
        .term
        .and_then(|k| locate_term(text, terms_before + k))
        .map(|(line, col)| format!(" at line {line} column {col}"))
        .unwrap_or_default();
    Error::Parse(format!("{prefix}{}{position}", r.message))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormList {
    forms: Vec<RawFormDoc>,
}

/// Parses either a single-form document or a `{ "forms": [...] }` list.
pub fn parse_forms(text: &str) -> Result<Vec<Form>> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(json_error)?;
    let is_list = value.as_object().is_some_and(|o| o.contains_key("forms"));
    if !is_list {
        let raw: RawFormDoc = serde_json::from_str(text).map_err(json_error)?;
        return validate(raw)
            .map(|f| vec![f])
            .map_err(|r| rejection_error(text, None, 0, r));
    }
    let list: FormList = serde_json::from_str(text).map_err(json_error)?;
    if list.forms.is_empty() {
        return Err(Error::Parse("\"forms\" is empty".into()));
    }
    let mut terms_before = 0;
    let mut out = Vec::with_capacity(list.forms.len());
    for (i, raw) in list.forms.into_iter().enumerate() {
        let n = raw.terms.len();
        out.push(validate(raw).map_err(|r| rejection_error(text, Some(i), terms_before, r))?);
        terms_before += n;
    }
    Ok(out)
}

/// Parses a document and validates it as a level presentation.
pub fn parse_presentation(text: &str) -> Result<LevelPresentation> {
    LevelPresentation::new(parse_forms(text)?)
}

/// Writes one form document with one term per line.
fn write_form(out: &mut String, raw: &RawFormDoc, indent: &str) {
    let terms: Vec<String> = raw
        .terms
        .iter()
        .map(|t| format!("{indent}    {}", serde_json::to_string(t).expect("terms serialize")))
        .collect();
    out.push_str(&format!(
        "{{\n{indent}  \"num_vars\": {},\n{indent}  \"degree\": {},\n{indent}  \"prime\": {},\n{indent}  \"terms\": [",
        raw.num_vars, raw.degree, raw.prime
    ));
    if terms.is_empty() {
        out.push(']');
    } else {
        out.push_str(&format!("\n{}\n{indent}  ]", terms.join(",\n")));
    }
    out.push_str(&format!("\n{indent}}}"));
}

/// JSON for a single form, one term per line.
pub fn form_to_json(form: &Form) -> String {
    let mut out = String::new();
    write_form(&mut out, &RawFormDoc::from(form), "");
    out
}

/// JSON `{ "forms": [...] }` document, terms in monomial rank order.
pub fn forms_to_json(forms: &[Form]) -> String {
    let mut out = String::from("{\n  \"forms\": [");
    for (k, f) in forms.iter().enumerate() {
        out.push_str(if k == 0 { "\n    " } else { ",\n    " });
        write_form(&mut out, &RawFormDoc::from(f), "    ");
    }
    out.push_str("\n  ]\n}");
    out
}

pub fn presentation_to_json(p: &LevelPresentation) -> String {
    forms_to_json(p.generators())
}
