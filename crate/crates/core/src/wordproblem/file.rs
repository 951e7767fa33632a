//! Model specification files.
//!
//! ```text
//! model: finite            # finite | bicyclic | freemonoid | freeinverse | pinj
//! elements: e g            # finite only: element names, then one row per element
//! row: e g
//! row: g e
//! gen: g -> g              # generator images, one per line
//! ```
//!
//! Generator payloads use each model's own element notation: a name for
//! `finite`, `c^i b^j` for `bicyclic`, a plain word for `freemonoid`,
//! `(-l,n,m)` for `freeinverse`, and `n; i->j, ...` for `pinj`.

use std::collections::BTreeMap;

use super::{Element, GeneratedSemigroup, SemigroupModel};
use crate::algebra::{BicyclicElement, FiniteSemigroup, FreeInverseTriple, PartialInjection};
use crate::error::{Error, Result};

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn reline(e: Error, line: usize) -> Error {
    match e {
        Error::InvalidArgument(msg) => err(line, msg),
        other => other,
    }
}

pub fn parse_model_file(text: &str) -> Result<GeneratedSemigroup> {
    let mut kind: Option<(usize, String)> = None;
    let mut elements: Option<(usize, Vec<String>)> = None;
    let mut rows: Vec<(usize, Vec<String>)> = Vec::new();
    let mut gens: Vec<(usize, char, String)> = Vec::new();

    for (n, raw_line) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, rest) = content
            .split_once(':')
            .ok_or_else(|| err(line, "expected 'directive: ...'"))?;
        let rest = rest.trim();
        match head.trim() {
            "model" => {
                if kind.is_some() {
                    return Err(err(line, "duplicate 'model:' line"));
                }
                kind = Some((line, rest.to_string()));
            }
            "elements" => {
                if elements.is_some() {
                    return Err(err(line, "duplicate 'elements:' line"));
                }
                elements = Some((
                    line,
                    rest.split_whitespace().map(str::to_string).collect(),
                ));
            }
            "row" => rows.push((
                line,
                rest.split_whitespace().map(str::to_string).collect(),
            )),
            "gen" => {
                let (sym, payload) = rest
                    .split_once("->")
                    .ok_or_else(|| err(line, "expected 'gen: symbol -> element'"))?;
                let sym = sym.trim();
                let mut chars = sym.chars();
                let symbol = match (chars.next(), chars.next()) {
                    (Some(c), None) => c,
                    _ => return Err(err(line, format!("generator symbol must be one character, got '{sym}'"))),
                };
                gens.push((line, symbol, payload.trim().to_string()));
            }
            other => return Err(err(line, format!("unknown directive '{other}:'"))),
        }
    }

    let (model_line, kind) = kind.ok_or_else(|| err(0, "missing 'model:' line"))?;
    if gens.is_empty() {
        return Err(err(0, "missing 'gen:' lines"));
    }

    let model = match kind.as_str() {
        "finite" => {
            let (_, names) =
                elements.ok_or_else(|| err(model_line, "finite model needs an 'elements:' line"))?;
            if rows.len() != names.len() {
                return Err(err(
                    model_line,
                    format!("expected {} 'row:' lines, found {}", names.len(), rows.len()),
                ));
            }
            let index = |name: &str, line: usize| {
                names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| err(line, format!("unknown element '{name}'")))
            };
            let mut table = Vec::with_capacity(names.len());
            for (line, row) in &rows {
                if row.len() != names.len() {
                    return Err(err(*line, format!("row must list {} products", names.len())));
                }
                table.push(
                    row.iter()
                        .map(|name| index(name, *line))
                        .collect::<Result<Vec<usize>>>()?,
                );
            }
            SemigroupModel::Finite(
                FiniteSemigroup::new(names, table).map_err(|e| reline(e, model_line))?,
            )
        }
        "bicyclic" => SemigroupModel::Bicyclic,
        "freemonoid" => SemigroupModel::FreeMonoid,
        "freeinverse" => SemigroupModel::FreeInverse,
        "pinj" => {
            // ground size comes from the first generator payload
            let (line, _, payload) = &gens[0];
            let f: PartialInjection = payload.parse().map_err(|e| reline(e, *line))?;
            SemigroupModel::PartialInjections {
                ground: f.ground_size(),
            }
        }
        other => return Err(err(model_line, format!("unknown model kind '{other}'"))),
    };

    let mut gen_map = BTreeMap::new();
    for (line, symbol, payload) in gens {
        if gen_map.contains_key(&symbol) {
            return Err(err(line, format!("duplicate generator '{symbol}'")));
        }
        let element = match &model {
            SemigroupModel::Finite(fs) => Element::Finite(
                fs.index_of(&payload)
                    .ok_or_else(|| err(line, format!("unknown element '{payload}'")))?,
            ),
            SemigroupModel::Bicyclic => Element::Bicyclic(
                payload
                    .parse::<BicyclicElement>()
                    .map_err(|e| reline(e, line))?,
            ),
            SemigroupModel::FreeMonoid => {
                if payload.contains(char::is_whitespace) {
                    return Err(err(line, "a free-monoid element is a single word"));
                }
                Element::FreeWord(payload)
            }
            SemigroupModel::FreeInverse => Element::Triple(
                payload
                    .parse::<FreeInverseTriple>()
                    .map_err(|e| reline(e, line))?,
            ),
            SemigroupModel::PartialInjections { .. } => Element::Injection(
                payload
                    .parse::<PartialInjection>()
                    .map_err(|e| reline(e, line))?,
            ),
        };
        gen_map.insert(symbol, element);
    }

    GeneratedSemigroup::new(model, gen_map).map_err(|e| reline(e, model_line))
}
