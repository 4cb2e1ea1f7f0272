//! Line-based text formats. Blank lines and everything after `#` are ignored
//! unless stated otherwise.
//!
//! ```text
//! multigraph 2          facegraph 4            reduction 4
//! edge 0 1              face T 0 1 2           contractSphere 0 1 keep=0 sideA=2,3 shared=2,3
//! loop 1                face T 0 3 1
//!                       ...
//!
//! looped 2sigma         surface 4
//! orient 0 tail=3       v 0 0 0
//! orient 1 tail=0       v 1/2 0 0
//!                       face 0 1 2 3
//!                       hole 0 3 2 1
//! ```
//!
//! A corpus archive is a sequence of face graphs, each preceded by a
//! `# class <m> <n> tight|nontight` header and separated by blank lines.

use std::fmt::Write as _;
use std::str::FromStr;

use rigidkit_core::facegraph::{Face, FaceGraph, FaceLabel, GClass, Move, MoveKind, ReductionCertificate};
use rigidkit_core::origami::{PolyhedralSurface, Rational};
use rigidkit_core::pebble::Orientation;
use rigidkit_core::{Multigraph, VertexId};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Invalid(#[from] rigidkit_core::Error),
    #[error("input is empty")]
    Empty,
}

pub type FormatResult<T> = Result<T, FormatError>;

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn number<T: FromStr>(line: usize, token: &str) -> FormatResult<T> {
    token.parse().map_err(|_| syntax(line, format!("expected a number, found `{token}`")))
}

/// The first keyword of the first content line.
pub fn detect_kind(text: &str) -> Option<&str> {
    content_lines(text).next().map(|(_, t)| t[0])
}

pub fn parse_multigraph(text: &str) -> FormatResult<Multigraph> {
    let mut lines = content_lines(text);
    let (line, tokens) = lines.next().ok_or(FormatError::Empty)?;
    let n = match tokens.as_slice() {
        ["multigraph", n] => number(line, n)?,
        _ => return Err(syntax(line, "expected `multigraph <n>`")),
    };
    let mut g = Multigraph::new(n);
    for (line, tokens) in lines {
        match tokens.as_slice() {
            ["edge", u, v] => {
                g.add_edge(number(line, u)?, number(line, v)?).map_err(|e| syntax(line, e.to_string()))?;
            }
            ["loop", v] => {
                g.add_loop(number(line, v)?).map_err(|e| syntax(line, e.to_string()))?;
            }
            _ => return Err(syntax(line, "expected `edge <u> <v>` or `loop <v>`")),
        }
    }
    Ok(g)
}

pub fn write_multigraph(g: &Multigraph) -> String {
    let mut out = format!("multigraph {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        if u == v {
            writeln!(out, "loop {u}").unwrap();
        } else {
            writeln!(out, "edge {u} {v}").unwrap();
        }
    }
    out
}

fn parse_label(line: usize, token: &str) -> FormatResult<FaceLabel> {
    match token {
        "T" => Ok(FaceLabel::T),
        "B" => Ok(FaceLabel::B),
        "H" => Ok(FaceLabel::H),
        _ => Err(syntax(line, format!("unknown face label `{token}`"))),
    }
}

/// Parses every face graph in `text`: a single file or a corpus archive.
pub fn parse_facegraphs(text: &str) -> FormatResult<Vec<FaceGraph>> {
    let mut out = Vec::new();
    let mut current: Option<(usize, usize, Vec<Face>)> = None;
    let finish = |cur: Option<(usize, usize, Vec<Face>)>, out: &mut Vec<FaceGraph>| -> FormatResult<()> {
        if let Some((line, n, faces)) = cur {
            let g = FaceGraph::new(n, faces).map_err(|e| syntax(line, format!("face graph starting here: {e}")))?;
            out.push(g);
        }
        Ok(())
    };
    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            ["facegraph", n] => {
                finish(current.take(), &mut out)?;
                current = Some((line, number(line, n)?, Vec::new()));
            }
            ["face", label, vs @ ..] => {
                let Some((_, _, faces)) = current.as_mut() else {
                    return Err(syntax(line, "face before `facegraph <n>`"));
                };
                let label = parse_label(line, label)?;
                let vertices = vs.iter().map(|v| number(line, v)).collect::<FormatResult<Vec<VertexId>>>()?;
                faces.push(Face::new(label, vertices));
            }
            _ => return Err(syntax(line, "expected `facegraph <n>` or `face <T|B|H> <v>...`")),
        }
    }
    finish(current, &mut out)?;
    if out.is_empty() {
        return Err(FormatError::Empty);
    }
    Ok(out)
}

/// Parses exactly one face graph.
pub fn parse_facegraph(text: &str) -> FormatResult<FaceGraph> {
    let mut all = parse_facegraphs(text)?;
    if all.len() != 1 {
        return Err(syntax(1, format!("expected one face graph, found {}", all.len())));
    }
    Ok(all.remove(0))
}

pub fn write_facegraph(g: &FaceGraph) -> String {
    let mut out = format!("facegraph {}\n", g.vertex_count());
    for f in g.faces() {
        write!(out, "face {}", f.label).unwrap();
        for v in &f.vertices {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn archive_header(class: &GClass) -> String {
    format!("# class {} {} {}", class.m, class.n, if class.tight { "tight" } else { "nontight" })
}

pub fn write_archive<'a>(entries: impl IntoIterator<Item = (&'a FaceGraph, &'a GClass)>) -> String {
    let mut out = String::new();
    for (i, (g, class)) in entries.into_iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&archive_header(class));
        out.push('\n');
        out.push_str(&write_facegraph(g));
    }
    out
}

pub fn write_certificate(cert: &ReductionCertificate) -> String {
    let mut out = format!("reduction {}\n", cert.vertex_count);
    for mv in &cert.moves {
        writeln!(out, "{mv}").unwrap();
    }
    out
}

fn list(line: usize, s: &str) -> FormatResult<Vec<VertexId>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| number(line, x)).collect()
}

fn field<'a>(line: usize, token: &'a str, key: &str) -> FormatResult<&'a str> {
    token
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| syntax(line, format!("expected `{key}=...`")))
}

pub fn parse_certificate(text: &str) -> FormatResult<ReductionCertificate> {
    let mut lines = content_lines(text);
    let (line, tokens) = lines.next().ok_or(FormatError::Empty)?;
    let vertex_count = match tokens.as_slice() {
        ["reduction", n] => number(line, n)?,
        _ => return Err(syntax(line, "expected `reduction <n>`")),
    };
    let mut moves = Vec::new();
    for (line, tokens) in lines {
        let [kind, u, v, keep, side_a, shared] = tokens.as_slice() else {
            return Err(syntax(line, "expected `<kind> <u> <v> keep=<w> sideA=<list> shared=<a>,<b>`"));
        };
        let kind = MoveKind::parse(kind).ok_or_else(|| syntax(line, format!("unknown move `{kind}`")))?;
        let shared = list(line, field(line, shared, "shared")?)?;
        let shared: [VertexId; 2] = shared.try_into().map_err(|_| syntax(line, "`shared` needs two vertices"))?;
        moves.push(Move {
            kind,
            u: number(line, u)?,
            v: number(line, v)?,
            keep: number(line, field(line, keep, "keep")?)?,
            side_a: list(line, field(line, side_a, "sideA")?)?,
            shared,
        });
    }
    Ok(ReductionCertificate { vertex_count, moves })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Looped {
    #[serde(rename = "2sigma")]
    TwoSigma,
    #[serde(rename = "3sigma")]
    ThreeSigma,
}

impl Looped {
    pub fn as_str(self) -> &'static str {
        match self {
            Looped::TwoSigma => "2sigma",
            Looped::ThreeSigma => "3sigma",
        }
    }
}

/// One orientation per looped graph, in file order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrientationCertificate {
    pub sections: Vec<(Looped, Orientation)>,
}

pub fn write_orientations(cert: &OrientationCertificate) -> String {
    let mut out = String::new();
    for (looped, o) in &cert.sections {
        writeln!(out, "looped {}", looped.as_str()).unwrap();
        for (i, t) in o.tails().iter().enumerate() {
            writeln!(out, "orient {i} tail={t}").unwrap();
        }
    }
    out
}

pub fn parse_orientations(text: &str) -> FormatResult<OrientationCertificate> {
    let mut sections: Vec<(Looped, Vec<Option<VertexId>>)> = Vec::new();
    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            ["looped", "2sigma"] => sections.push((Looped::TwoSigma, Vec::new())),
            ["looped", "3sigma"] => sections.push((Looped::ThreeSigma, Vec::new())),
            ["orient", i, tail] => {
                let (_, tails) = sections.last_mut().ok_or_else(|| syntax(line, "orient before `looped ...`"))?;
                let i: usize = number(line, i)?;
                let t = number(line, field(line, tail, "tail")?)?;
                if tails.len() <= i {
                    tails.resize(i + 1, None);
                }
                if tails[i].replace(t).is_some() {
                    return Err(syntax(line, format!("edge {i} oriented twice")));
                }
            }
            _ => return Err(syntax(line, "expected `looped <2sigma|3sigma>` or `orient <i> tail=<v>`")),
        }
    }
    if sections.is_empty() {
        return Err(FormatError::Empty);
    }
    let sections = sections
        .into_iter()
        .map(|(looped, tails)| {
            let tails = tails
                .into_iter()
                .enumerate()
                .map(|(i, t)| t.ok_or_else(|| syntax(0, format!("edge {i} has no orientation"))));
            Ok((looped, Orientation::new(tails.collect::<FormatResult<_>>()?)))
        })
        .collect::<FormatResult<_>>()?;
    Ok(OrientationCertificate { sections })
}

pub fn parse_surface(text: &str) -> FormatResult<PolyhedralSurface> {
    let mut lines = content_lines(text);
    let (line, tokens) = lines.next().ok_or(FormatError::Empty)?;
    let n: usize = match tokens.as_slice() {
        ["surface", n] => number(line, n)?,
        _ => return Err(syntax(line, "expected `surface <n>`")),
    };
    let mut s = PolyhedralSurface { points: Vec::with_capacity(n), faces: Vec::new(), holes: Vec::new() };
    let mut last = line;
    for (line, tokens) in lines {
        last = line;
        match tokens.as_slice() {
            ["v", x, y, z] => {
                let coord = |t: &str| {
                    t.parse::<Rational>().map_err(|_| syntax(line, format!("expected a rational, found `{t}`")))
                };
                s.points.push([coord(x)?, coord(y)?, coord(z)?]);
            }
            [kind @ ("face" | "hole"), vs @ ..] => {
                let cycle = vs.iter().map(|v| number(line, v)).collect::<FormatResult<Vec<VertexId>>>()?;
                if *kind == "face" {
                    s.faces.push(cycle)
                } else {
                    s.holes.push(cycle)
                }
            }
            _ => return Err(syntax(line, "expected `v <x> <y> <z>`, `face <v>...` or `hole <v>...`")),
        }
    }
    if s.points.len() != n {
        return Err(syntax(last, format!("expected {n} vertices, found {}", s.points.len())));
    }
    Ok(s)
}
