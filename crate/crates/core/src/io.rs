//! Input formats.
//!
//! * graph text: a header line `n m`, then `m` lines `u v` (1-based);
//! * graph JSON `{"n": .., "edges": [[u, v], ..]}`;
//! * complex JSON `{"n": .., "facets": [[..], ..]}`;
//! * ideal JSON `{"n": .., "generators": [[e1, .., en], ..]}` (exponent vectors);
//! * monomial text: monomials such as `x1*x3` or `x2^2`, separated by newlines
//!   or commas, with an optional `vars N` line fixing the variable count.
//!
//! Blank lines and `#` comments are ignored in the text formats.

use serde::{Deserialize, Serialize};

use crate::betti::{complex_of_squarefree_ideal, polarize, MonomialIdeal, Polarization};
use crate::complex::{Graph, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum Input {
    Graph(Graph),
    Complex(SimplicialComplex),
    Ideal(MonomialIdeal),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing \"n m\" header"))?;
    let nums = |line: usize, s: &str| -> Result<Vec<usize>> {
        s.split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(line, format!("not a nonnegative integer: {t:?}"))))
            .collect()
    };
    let head = nums(hline, header)?;
    let [n, m] = head[..] else {
        return Err(parse_err(hline, "header must be \"n m\""));
    };
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for (line, s) in lines {
        let pair = nums(line, s)?;
        let [u, v] = pair[..] else {
            return Err(parse_err(line, "edge line must be \"u v\""));
        };
        if u == 0 || v == 0 || u > n || v > n {
            return Err(parse_err(line, format!("vertex out of range 1..={n}")));
        }
        if u == v {
            return Err(parse_err(line, "loops are not allowed"));
        }
        edges.push((u, v));
        last = line;
    }
    if edges.len() != m {
        return Err(parse_err(last, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

fn parse_monomial(token: &str, line: usize) -> Result<Vec<(usize, u32)>> {
    token
        .split('*')
        .map(|factor| {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (v, e.trim().parse::<u32>().map_err(|_| parse_err(line, format!("bad exponent in {factor:?}")))?),
                None => (factor, 1),
            };
            let idx = var
                .trim()
                .strip_prefix('x')
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| parse_err(line, format!("expected a variable x<k>, got {var:?}")))?;
            Ok((idx, exp))
        })
        .collect()
}

pub fn parse_monomial_text(text: &str) -> Result<MonomialIdeal> {
    let mut vars = None;
    let mut monomials = Vec::new();
    for (line, s) in content_lines(text) {
        if let Some(rest) = s.strip_prefix("vars") {
            vars = Some(rest.trim().parse::<usize>().map_err(|_| parse_err(line, "expected \"vars N\""))?);
            continue;
        }
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            monomials.push((line, parse_monomial(token, line)?));
        }
    }
    if monomials.is_empty() {
        return Err(parse_err(1, "no monomials"));
    }
    let used = monomials.iter().flat_map(|(_, m)| m.iter().map(|f| f.0)).max().unwrap_or(0);
    let n = match vars {
        Some(v) if v < used => return Err(parse_err(1, format!("vars {v} but x{used} is used"))),
        Some(v) => v,
        None => used,
    };
    let generators = monomials
        .into_iter()
        .map(|(_, m)| {
            let mut e = vec![0u32; n];
            for (i, k) in m {
                e[i - 1] += k;
            }
            e
        })
        .collect();
    MonomialIdeal::new(n, generators)
}

pub fn parse_json(text: &str) -> Result<Input> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let has = |k: &str| value.get(k).is_some();
    if has("edges") {
        Ok(Input::Graph(serde_json::from_value(value)?))
    } else if has("facets") {
        Ok(Input::Complex(serde_json::from_value(value)?))
    } else if has("generators") {
        Ok(Input::Ideal(serde_json::from_value(value)?))
    } else {
        Err(parse_err(1, "JSON input needs one of \"edges\", \"facets\", \"generators\""))
    }
}

/// JSON when the text starts with `{`, monomials when it mentions a variable,
/// otherwise a graph edge list.
pub fn parse_input(text: &str) -> Result<Input> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        parse_json(trimmed)
    } else if content_lines(text).any(|(_, s)| s.contains('x')) {
        parse_monomial_text(text).map(Input::Ideal)
    } else {
        parse_graph_text(text).map(Input::Graph)
    }
}

/// An input reduced to a simplicial complex whose Stanley–Reisner ideal has the
/// same Betti table.
#[derive(Clone, Debug)]
pub struct Prepared {
    pub complex: SimplicialComplex,
    /// Degrees of the minimal generators of the original ideal.
    pub generator_degrees: Vec<u32>,
    /// Set when the input ideal was not squarefree.
    pub polarization: Option<Polarization>,
}

impl Prepared {
    pub fn generated_in_degree_two(&self) -> bool {
        self.generator_degrees.iter().all(|&d| d == 2)
    }
}

impl Input {
    pub fn prepare(&self) -> Result<Prepared> {
        match self {
            Input::Graph(g) => Ok(Prepared {
                complex: SimplicialComplex::independence_complex(g),
                generator_degrees: vec![2; g.edge_count()],
                polarization: None,
            }),
            Input::Complex(d) => {
                if d.is_void() {
                    return Err(Error::VoidComplex);
                }
                let generator_degrees = d.minimal_nonfaces().iter().map(|f| f.len() as u32).collect();
                Ok(Prepared { complex: d.clone(), generator_degrees, polarization: None })
            }
            Input::Ideal(m) => {
                let generator_degrees = m.degrees();
                if m.is_squarefree() {
                    return Ok(Prepared { complex: complex_of_squarefree_ideal(m)?, generator_degrees, polarization: None });
                }
                let p = polarize(m);
                Ok(Prepared { complex: complex_of_squarefree_ideal(&p.ideal)?, generator_degrees, polarization: Some(p) })
            }
        }
    }
}
