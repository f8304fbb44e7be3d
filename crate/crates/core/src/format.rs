//! Text input formats and certificate serialization.
//!
//! Matroid inputs start with a header line naming the kind:
//!
//! ```text
//! graph 3        uniform 2 5      linear 2 2 3      partition      bases 4
//! 0 1                             1 0 1             2 3            0 1
//! 1 2                             0 1 1             1 1            0 2
//! 2 0                                                              ...
//! ```
//!
//! `linear 0 ..` means the rationals. Blank lines and `#` comments are ignored.
//! Certificates are written either as JSON or as `key = value` lines, and both
//! forms are read back by [`parse_certificate`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::density::{Condition, Violation};
use crate::error::Error;
use crate::matroid::{Block, Field, Graph, LinearMatrix, Matroid};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    })
}

/// A whitespace-separated token with its 1-based column.
#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    column: usize,
    text: &'a str,
}

/// A non-blank, comment-stripped line with its 1-based number.
struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    fn end_column(&self) -> usize {
        self.tokens.last().map_or(1, |t| t.column + t.text.len())
    }

    fn expect_len(&self, n: usize, what: &str) -> Result<(), ParseError> {
        if self.tokens.len() == n {
            return Ok(());
        }
        let column = self.tokens.get(n).map_or(self.end_column(), |t| t.column);
        err(
            self.number,
            column,
            format!(
                "expected {what} ({n} fields), found {} fields",
                self.tokens.len()
            ),
        )
    }

    fn number_at<T: std::str::FromStr>(&self, i: usize, what: &str) -> Result<T, ParseError> {
        let t = self.tokens[i];
        t.text.parse().or_else(|_| {
            err(
                self.number,
                t.column,
                format!("expected {what}, found `{}`", t.text),
            )
        })
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices().chain([(content.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        column: content[..s].chars().count() + 1,
                        text: &content[s..pos],
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(Line {
                number: i + 1,
                tokens,
            });
        }
    }
    out
}

/// A parsed matroid input; graph inputs keep their graph.
#[derive(Clone, Debug)]
pub struct Input {
    pub matroid: Matroid,
    pub graph: Option<Graph>,
}

pub fn parse_input(text: &str) -> Result<Input, ParseError> {
    let lines = lines(text);
    let Some(header) = lines.first() else {
        return err(1, 1, "empty input");
    };
    let body = &lines[1..];
    let kind = header.tokens[0];
    let construct = |result: Result<Matroid, Error>, line: usize| {
        result.or_else(|e| err(line, 1, e.to_string()))
    };
    match kind.text {
        "graph" => {
            header.expect_len(2, "`graph n`")?;
            let n: usize = header.number_at(1, "a vertex count")?;
            let mut edges = Vec::with_capacity(body.len());
            for line in body {
                line.expect_len(2, "an edge `u v`")?;
                let (u, v): (usize, usize) = (line.number_at(0, "a vertex")?, line.number_at(1, "a vertex")?);
                for (i, x) in [u, v].into_iter().enumerate() {
                    if x >= n {
                        return err(line.number, line.tokens[i].column, format!("vertex {x} out of range 0..{n}"));
                    }
                }
                if u == v {
                    return err(line.number, line.tokens[0].column, format!("self-loop at vertex {u}"));
                }
                edges.push((u, v));
            }
            let graph = Graph::new(n, edges).or_else(|e| err(header.number, 1, e.to_string()))?;
            let matroid = construct(Matroid::graphic(graph.clone()), header.number)?;
            Ok(Input {
                matroid,
                graph: Some(graph),
            })
        }
        "uniform" => {
            header.expect_len(3, "`uniform r m`")?;
            if let Some(extra) = body.first() {
                return err(extra.number, 1, "unexpected line after `uniform r m`");
            }
            let r = header.number_at(1, "a rank")?;
            let m = header.number_at(2, "an element count")?;
            Ok(Input {
                matroid: construct(Matroid::uniform(r, m), header.number)?,
                graph: None,
            })
        }
        "linear" => {
            header.expect_len(4, "`linear p rows cols`")?;
            let p: u32 = header.number_at(1, "a prime (or 0 for the rationals)")?;
            let rows: usize = header.number_at(2, "a row count")?;
            let cols: usize = header.number_at(3, "a column count")?;
            if body.len() != rows {
                let line = body.get(rows).map_or(header.number, |l| l.number);
                return err(line, 1, format!("expected {rows} matrix rows, found {}", body.len()));
            }
            let mut matrix = Vec::with_capacity(rows);
            for line in body {
                line.expect_len(cols, "a matrix row")?;
                let row = (0..cols)
                    .map(|i| line.number_at::<i64>(i, "an integer entry"))
                    .collect::<Result<Vec<_>, _>>()?;
                matrix.push(row);
            }
            let field = if p == 0 { Field::Rationals } else { Field::Prime(p) };
            let matrix = LinearMatrix::new(field, matrix).or_else(|e| err(header.number, 1, e.to_string()))?;
            Ok(Input {
                matroid: construct(Matroid::linear(matrix), header.number)?,
                graph: None,
            })
        }
        "partition" => {
            header.expect_len(1, "`partition`")?;
            let mut blocks = Vec::with_capacity(body.len());
            for line in body {
                line.expect_len(2, "a block `cap size`")?;
                blocks.push(Block {
                    cap: line.number_at(0, "a capacity")?,
                    size: line.number_at(1, "a block size")?,
                });
            }
            Ok(Input {
                matroid: construct(Matroid::partition(&blocks), header.number)?,
                graph: None,
            })
        }
        "bases" => {
            if header.tokens.len() > 2 {
                header.expect_len(2, "`bases [m]`")?;
            }
            let declared: Option<usize> = match header.tokens.len() {
                2 => Some(header.number_at(1, "an element count")?),
                _ => None,
            };
            let mut bases = Vec::with_capacity(body.len());
            let mut top = 0;
            for line in body {
                let mut base = Subset::empty();
                for (i, t) in line.tokens.iter().enumerate() {
                    let id: usize = line.number_at(i, "an element id")?;
                    if declared.is_some_and(|m| id >= m) || id >= crate::subset::MAX_ELEMENTS {
                        return err(line.number, t.column, format!("element {id} out of range"));
                    }
                    if base.contains(id) {
                        return err(line.number, t.column, format!("element {id} repeated"));
                    }
                    base.insert(id);
                    top = top.max(id + 1);
                }
                bases.push(base);
            }
            let size = declared.unwrap_or(top);
            Ok(Input {
                matroid: construct(Matroid::from_bases(size, bases), header.number)?,
                graph: None,
            })
        }
        other => err(
            header.number,
            kind.column,
            format!("unknown input kind `{other}` (expected graph, uniform, linear, partition or bases)"),
        ),
    }
}

/// One non-negative integer per line, in element order.
pub fn parse_weights(text: &str) -> Result<Vec<usize>, ParseError> {
    lines(text)
        .iter()
        .map(|line| {
            line.expect_len(1, "one weight per line")?;
            line.number_at(0, "a non-negative integer weight")
        })
        .collect()
}

/// Space- or comma-separated element ids.
pub fn parse_id_list(text: &str) -> Result<Subset, ParseError> {
    let mut set = Subset::empty();
    for t in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        let id: usize = t
            .parse()
            .or_else(|_| err(1, 1, format!("expected an element id, found `{t}`")))?;
        if id >= crate::subset::MAX_ELEMENTS {
            return err(1, 1, format!("element {id} out of range"));
        }
        set.insert(id);
    }
    Ok(set)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub condition: String,
    pub witness: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl ViolationRecord {
    pub fn from_violation(v: &Violation) -> Self {
        ViolationRecord {
            condition: v.condition.name().to_string(),
            witness: v.witness.to_vec(),
            lhs: format_rational(&v.lhs),
            rhs: format_rational(&v.rhs),
        }
    }

    pub fn to_violation(&self) -> Result<Violation, String> {
        let condition = Condition::from_name(&self.condition)
            .ok_or_else(|| format!("unknown condition `{}`", self.condition))?;
        let witness = ids_to_subset(&self.witness)?;
        Ok(Violation {
            condition,
            witness,
            lhs: parse_rational(&self.lhs).map_err(|e| e.to_string())?,
            rhs: parse_rational(&self.rhs).map_err(|e| e.to_string())?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRecord {
    pub base: Vec<usize>,
    pub weight: String,
}

/// Every output of the command line, as a flat record of optional sections.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    #[serde(rename = "D", skip_serializing_if = "Option::is_none", default)]
    pub gon: Option<usize>,
    /// Gon position of each element, in element order.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mapping: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<String>,
    /// Circle position of each element, in element order.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub positions: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ordering: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub window: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cover: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weights: Option<Vec<WeightRecord>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub violation: Option<ViolationRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub strength: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub feasible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub found: Option<bool>,
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn ids_to_subset(ids: &[usize]) -> Result<Subset, String> {
    let mut set = Subset::empty();
    for &id in ids {
        if id >= crate::subset::MAX_ELEMENTS || set.contains(id) {
            return Err(format!("bad element id {id}"));
        }
        set.insert(id);
    }
    Ok(set)
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates always serialize")
    }

    /// `key = value` lines; `cover` and `weight` repeat once per base.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let mut put = |key: &str, value: String| {
            out.push_str(key);
            out.push_str(" =");
            if !value.is_empty() {
                out.push(' ');
                out.push_str(&value);
            }
            out.push('\n');
        };
        if let Some(v) = &self.feasible {
            put("feasible", v.to_string());
        }
        if let Some(v) = &self.found {
            put("found", v.to_string());
        }
        if let Some(v) = &self.gamma {
            put("gamma", v.clone());
        }
        if let Some(v) = &self.strength {
            put("strength", v.clone());
        }
        if let Some(v) = &self.witness {
            put("witness", join(v));
        }
        if let Some(v) = &self.gon {
            put("D", v.to_string());
        }
        if let Some(v) = &self.mapping {
            put("mapping", join(v));
        }
        if let Some(v) = &self.d {
            put("d", v.clone());
        }
        if let Some(v) = &self.positions {
            put("positions", join(v));
        }
        if let Some(v) = &self.mode {
            put("mode", v.clone());
        }
        if let Some(v) = &self.window {
            put("window", v.to_string());
        }
        if let Some(v) = &self.ordering {
            put("ordering", join(v));
        }
        for base in self.cover.iter().flatten() {
            put("cover", join(base));
        }
        for w in self.weights.iter().flatten() {
            put(
                "weight",
                format!("{} : {}", w.weight, join(&w.base))
                    .trim_end()
                    .to_string(),
            );
        }
        if let Some(v) = &self.violation {
            put(
                "violation",
                format!(
                    "condition={} witness={{{}}} lhs={} rhs={}",
                    v.condition,
                    join(&v.witness),
                    v.lhs,
                    v.rhs
                ),
            );
        }
        out
    }
}

/// Reads a certificate in either output format.
pub fn parse_certificate(text: &str) -> Result<Certificate, ParseError> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).or_else(|e| err(e.line(), e.column(), e.to_string()));
    }
    let mut cert = Certificate::default();
    for (i, raw) in text.lines().enumerate() {
        let number = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let Some((key, value)) = raw.split_once('=') else {
            return err(number, 1, "expected `key = value`");
        };
        let (key, value) = (key.trim(), value.trim());
        let column = raw.find('=').map_or(1, |c| c + 3);
        let bad = |what: &str| err::<()>(number, column, format!("bad {what} value `{value}`"));
        let ints = |what: &str| -> Result<Vec<usize>, ParseError> {
            value
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .or_else(|_| err(number, column, format!("bad {what} entry `{t}`")))
                })
                .collect()
        };
        let boolean = || match value {
            "true" => Ok(true),
            "false" => Ok(false),
            _ => err(
                number,
                column,
                format!("expected true or false, found `{value}`"),
            ),
        };
        match key {
            "feasible" => cert.feasible = Some(boolean()?),
            "found" => cert.found = Some(boolean()?),
            "gamma" => cert.gamma = Some(value.to_string()),
            "strength" => cert.strength = Some(value.to_string()),
            "witness" => cert.witness = Some(ints("witness")?),
            "D" => cert.gon = Some(value.parse().or_else(|_| bad("D").map(|_| 0))?),
            "mapping" => cert.mapping = Some(ints("mapping")?),
            "d" => cert.d = Some(value.to_string()),
            "positions" => {
                cert.positions = Some(value.split_whitespace().map(str::to_string).collect())
            }
            "mode" => cert.mode = Some(value.to_string()),
            "window" => cert.window = Some(value.parse().or_else(|_| bad("window").map(|_| 0))?),
            "ordering" => cert.ordering = Some(ints("ordering")?),
            "cover" => cert.cover.get_or_insert_with(Vec::new).push(ints("cover")?),
            "weight" => {
                let Some((x, base)) = value.split_once(':') else {
                    return err(number, column, "expected `weight = x : ids`");
                };
                let base = base
                    .split_whitespace()
                    .map(|t| {
                        t.parse()
                            .or_else(|_| err(number, column, format!("bad base entry `{t}`")))
                    })
                    .collect::<Result<Vec<usize>, _>>()?;
                cert.weights
                    .get_or_insert_with(Vec::new)
                    .push(WeightRecord {
                        base,
                        weight: x.trim().to_string(),
                    });
            }
            "violation" => {
                cert.violation =
                    Some(parse_violation_line(value).or_else(|m| err(number, column, m))?)
            }
            other => return err(number, 1, format!("unknown key `{other}`")),
        }
    }
    Ok(cert)
}

fn parse_violation_line(value: &str) -> Result<ViolationRecord, String> {
    let field = |name: &str| -> Result<&str, String> {
        let start = value
            .find(&format!("{name}="))
            .ok_or_else(|| format!("missing `{name}=`"))?
            + name.len()
            + 1;
        let rest = &value[start..];
        if let Some(inner) = rest.strip_prefix('{') {
            inner
                .split_once('}')
                .map(|(s, _)| s)
                .ok_or_else(|| "unclosed `{`".to_string())
        } else {
            Ok(rest.split_whitespace().next().unwrap_or(""))
        }
    };
    let witness = field("witness")?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| format!("bad witness entry `{t}`")))
        .collect::<Result<Vec<usize>, _>>()?;
    Ok(ViolationRecord {
        condition: field("condition")?.to_string(),
        witness,
        lhs: field("lhs")?.to_string(),
        rhs: field("rhs")?.to_string(),
    })
}

/// Helpers shared by the command line for converting certificate sections.
pub(crate) fn parse_rationals(items: &[String]) -> Result<Vec<Rational>, String> {
    items
        .iter()
        .map(|s| parse_rational(s).map_err(|e| e.to_string()))
        .collect()
}

pub(crate) fn subset_of(ids: &[usize]) -> Result<Subset, String> {
    ids_to_subset(ids)
}
