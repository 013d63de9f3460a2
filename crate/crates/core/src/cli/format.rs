//! Line-oriented instance files.
//!
//! ```text
//! # comments run to end of line
//! bipartite 3 2 2 2
//! u1 v1 v2 u2      <- one arc per line, last token loses
//! ...
//! ```
//!
//! Uniform instances use the header `uniform n k` and bare vertex numbers.
//! Serialization is canonical: arcs sorted by support, one space between
//! tokens, `\n` line endings.

use std::collections::HashMap;
use std::fmt::Write as _;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::model::{
    Arc, BipartiteHypertournament, BipartiteParams, KHypertournament, SupportKey, UniformParams,
    VertexRef,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Bipartite(BipartiteHypertournament),
    Uniform(KHypertournament),
}

#[derive(Debug, Clone, Copy)]
enum Header {
    Bipartite(BipartiteParams),
    Uniform(UniformParams),
}

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

fn parse_header(line_no: usize, tokens: &[&str]) -> Result<Header> {
    let numbers = |expected: usize| -> Result<Vec<usize>> {
        if tokens.len() != expected + 1 {
            return Err(format_err(
                line_no,
                format!(
                    "header '{}' takes {expected} parameters, found {}",
                    tokens[0],
                    tokens.len() - 1
                ),
            ));
        }
        tokens[1..]
            .iter()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| format_err(line_no, format!("invalid parameter '{t}'")))
            })
            .collect()
    };
    let wrap = |e: Error| format_err(line_no, e.to_string());
    match tokens[0] {
        "bipartite" => {
            let v = numbers(4)?;
            BipartiteParams::new(v[0], v[1], v[2], v[3])
                .map(Header::Bipartite)
                .map_err(wrap)
        }
        "uniform" => {
            let v = numbers(2)?;
            UniformParams::new(v[0], v[1])
                .map(Header::Uniform)
                .map_err(wrap)
        }
        other => Err(format_err(
            line_no,
            format!("expected header 'bipartite m n h k' or 'uniform n k', found '{other}'"),
        )),
    }
}

fn parse_vertex(line_no: usize, token: &str, uniform: bool) -> Result<VertexRef> {
    let unknown = || format_err(line_no, format!("unknown token '{token}'"));
    let index = |digits: &str| -> Result<usize> {
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        match digits.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i),
            _ => Err(unknown()),
        }
    };
    if uniform {
        return index(token).map(VertexRef::plain);
    }
    match token.split_at(token.len().min(1)) {
        ("u", rest) => index(rest).map(VertexRef::u),
        ("v", rest) => index(rest).map(VertexRef::v),
        _ => Err(unknown()),
    }
}

fn plural(n: u64) -> &'static str {
    if n == 1 {
        "arc"
    } else {
        "arcs"
    }
}

/// Parses and validates an instance file.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, Header)> = None;
    let mut arcs: Vec<(usize, Arc)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match header {
            None => header = Some((line_no, parse_header(line_no, &tokens)?)),
            Some((_, h)) => {
                let uniform = matches!(h, Header::Uniform(_));
                let entries = tokens
                    .iter()
                    .map(|t| parse_vertex(line_no, t, uniform))
                    .collect::<Result<Vec<_>>>()?;
                arcs.push((line_no, Arc::new(entries)));
            }
        }
    }
    let Some((header_line, header)) = header else {
        return Err(format_err(
            text.lines().count().max(1),
            "missing header line",
        ));
    };

    let expected = match header {
        Header::Bipartite(p) => p.arc_count(),
        Header::Uniform(p) => p.arc_count(),
    }
    .map_err(|e| format_err(header_line, e.to_string()))?
    .get();
    let found = arcs.len() as u64;
    if found != expected {
        let line = if found > expected {
            arcs[expected as usize].0
        } else {
            header_line
        };
        return Err(format_err(
            line,
            format!("expected {expected} {}, found {found}", plural(expected)),
        ));
    }

    let mut first_line: HashMap<SupportKey, usize> = HashMap::new();
    for (pos, (line_no, arc)) in arcs.iter().enumerate() {
        let defects = match header {
            Header::Bipartite(p) => p.arc_defects(pos + 1, arc),
            Header::Uniform(p) => p.arc_defects(pos + 1, arc),
        };
        if let Some(d) = defects.first() {
            return Err(format_err(*line_no, d.to_string()));
        }
        if let Some(prev) = first_line.insert(arc.support(), *line_no) {
            return Err(format_err(
                *line_no,
                format!(
                    "duplicate support {{{}}} (first seen on line {prev})",
                    arc.support().iter().join(",")
                ),
            ));
        }
    }

    // with the count right and no duplicates, every support is present
    let arcs: Vec<Arc> = arcs.into_iter().map(|(_, a)| a).collect();
    let wrap = |e: Error| format_err(header_line, e.to_string());
    match header {
        Header::Bipartite(p) => BipartiteHypertournament::new(p, arcs)
            .map(Instance::Bipartite)
            .map_err(wrap),
        Header::Uniform(p) => KHypertournament::new(p, arcs)
            .map(Instance::Uniform)
            .map_err(wrap),
    }
}

fn write_arcs(out: &mut String, arcs: &[Arc]) {
    for arc in arcs {
        let _ = writeln!(out, "{}", arc.entries().iter().join(" "));
    }
}

/// Canonical text of a bipartite instance.
pub fn serialize_bipartite(h: &BipartiteHypertournament) -> String {
    let mut out = format!("bipartite {}\n", h.params());
    write_arcs(&mut out, h.arcs());
    out
}

/// Canonical text of a uniform instance.
pub fn serialize_uniform(h: &KHypertournament) -> String {
    let mut out = format!("uniform {}\n", h.params());
    write_arcs(&mut out, h.arcs());
    out
}

pub fn serialize_instance(instance: &Instance) -> String {
    match instance {
        Instance::Bipartite(h) => serialize_bipartite(h),
        Instance::Uniform(h) => serialize_uniform(h),
    }
}
