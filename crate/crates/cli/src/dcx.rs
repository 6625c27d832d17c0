//! The DCX text format: a line-oriented, whitespace-tokenized description
//! of complexes, chains, cochains, measures, cocycles, and towers.
//!
//! ```text
//! dcx 1
//! complex <name> dim <n>
//! cells <k> <count>                      # one line per k = 0..n
//! face <k> <cell> <f0> <f1> ... <fk>     # one line per k-cell, k >= 1
//! chain <name> on <complex> dim <k>
//! term <cell> <p>/<q>
//! cochain <name> on <complex> dim <k>
//! term <cell> <p>/<q>
//! measure <name> on <complex> dim <k>
//! term <cell> <p>/<q>
//! cocycle <name> on <complex> mod <d>
//! label <edge> <value>
//! tower <name> base <complex> cocycle <cocycle> sheets <d>
//! ```
//!
//! `#` starts a comment. The parser is purely syntactic: structural
//! problems (unknown directives, missing face rows, bad numbers) are parse
//! errors, while out-of-range face values, dangling references, and other
//! semantic defects surface when the document is resolved into library
//! values, as domain errors.

use std::fmt::Write as _;
use std::iter::Peekable;

use svlab_core::{format_rational, parse_rational, DeltaComplex, Rational};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DcxDocument {
    pub complexes: Vec<RawComplex>,
    pub chains: Vec<RawValued>,
    pub cochains: Vec<RawValued>,
    pub measures: Vec<RawValued>,
    pub cocycles: Vec<RawCocycle>,
    pub towers: Vec<RawTower>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawComplex {
    pub name: String,
    pub counts: Vec<usize>,
    /// faces[k][cell] lists the k+1 ordered faces of a k-cell; faces[0]
    /// stays empty.
    pub faces: Vec<Vec<Vec<usize>>>,
}

/// A chain, cochain, or measure section: cell/value pairs in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawValued {
    pub name: String,
    pub complex: String,
    pub dim: usize,
    pub terms: Vec<(usize, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawCocycle {
    pub name: String,
    pub complex: String,
    pub modulus: u64,
    pub labels: Vec<(usize, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTower {
    pub name: String,
    pub base: String,
    pub cocycle: String,
    pub sheets: u64,
}

impl DcxDocument {
    pub fn find_complex(&self, name: &str) -> Option<&RawComplex> {
        self.complexes.iter().find(|c| c.name == name)
    }

    pub fn find_cocycle(&self, name: &str) -> Option<&RawCocycle> {
        self.cocycles.iter().find(|c| c.name == name)
    }

    /// Resolves a named complex section into a validated face-table
    /// complex; range defects become domain errors here.
    pub fn build_complex(&self, name: &str) -> Result<DeltaComplex, CliError> {
        let raw = self
            .find_complex(name)
            .ok_or_else(|| CliError::domain(format!("complex `{name}` not found in document")))?;
        Ok(DeltaComplex::new(raw.counts.clone(), raw.faces.clone())?)
    }
}

pub fn raw_from_complex(name: &str, cx: &DeltaComplex) -> RawComplex {
    let counts: Vec<usize> = (0..=cx.dim()).map(|k| cx.count(k)).collect();
    let mut faces: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for k in 1..=cx.dim() {
        faces.push((0..cx.count(k)).map(|cell| cx.faces_of(k, cell).to_vec()).collect());
    }
    RawComplex { name: name.to_string(), counts, faces }
}

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse(format!("line {line}: {}", msg.into()))
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T, CliError> {
    tok.parse().map_err(|_| parse_err(line, format!("expected {what}, found `{tok}`")))
}

fn parse_term(line: usize, toks: &[&str]) -> Result<(usize, Rational), CliError> {
    if toks.len() != 3 {
        return Err(parse_err(line, "expected `term <cell> <p>/<q>`"));
    }
    let cell = parse_num(line, toks[1], "a cell index")?;
    let q = parse_rational(toks[2])
        .map_err(|_| parse_err(line, format!("expected a rational, found `{}`", toks[2])))?;
    Ok((cell, q))
}

type Lines<'a> = Peekable<std::vec::IntoIter<(usize, Vec<&'a str>)>>;

fn take_terms(it: &mut Lines) -> Result<Vec<(usize, Rational)>, CliError> {
    let mut terms = Vec::new();
    while let Some((ln, toks)) = it.next_if(|(_, t)| t[0] == "term") {
        terms.push(parse_term(ln, &toks)?);
    }
    Ok(terms)
}

fn parse_complex(
    header_line: usize,
    header: &[&str],
    it: &mut Lines,
) -> Result<RawComplex, CliError> {
    if header.len() != 4 || header[2] != "dim" {
        return Err(parse_err(header_line, "expected `complex <name> dim <n>`"));
    }
    let name = header[1].to_string();
    let dim: usize = parse_num(header_line, header[3], "a dimension")?;

    let mut counts = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let (ln, toks) = it
            .next_if(|(_, t)| t[0] == "cells")
            .ok_or_else(|| parse_err(header_line, format!("missing `cells {k} <count>` line")))?;
        if toks.len() != 3 {
            return Err(parse_err(ln, "expected `cells <k> <count>`"));
        }
        let got: usize = parse_num(ln, toks[1], "a dimension")?;
        if got != k {
            return Err(parse_err(ln, format!("cells lines must ascend: expected {k}, found {got}")));
        }
        counts.push(parse_num(ln, toks[2], "a count")?);
    }

    let mut faces: Vec<Vec<Option<Vec<usize>>>> =
        counts.iter().map(|&c| vec![None; c]).collect();
    while let Some((ln, toks)) = it.next_if(|(_, t)| t[0] == "face") {
        if toks.len() < 3 {
            return Err(parse_err(ln, "expected `face <k> <cell> <faces...>`"));
        }
        let k: usize = parse_num(ln, toks[1], "a dimension")?;
        if k == 0 || k > dim {
            return Err(parse_err(ln, format!("face line dimension {k} outside 1..={dim}")));
        }
        let cell: usize = parse_num(ln, toks[2], "a cell index")?;
        if cell >= counts[k] {
            return Err(parse_err(
                ln,
                format!("cell {cell} outside the declared count {} in dimension {k}", counts[k]),
            ));
        }
        if toks.len() != 3 + k + 1 {
            return Err(parse_err(
                ln,
                format!("a {k}-cell needs exactly {} face entries, found {}", k + 1, toks.len() - 3),
            ));
        }
        let fs = toks[3..]
            .iter()
            .map(|t| parse_num(ln, t, "a face index"))
            .collect::<Result<Vec<usize>, _>>()?;
        if faces[k][cell].replace(fs).is_some() {
            return Err(parse_err(ln, format!("duplicate face line for {k}-cell {cell}")));
        }
    }

    let mut table: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for k in 1..=dim {
        let mut rows = Vec::with_capacity(counts[k]);
        for (cell, row) in faces[k].iter().enumerate() {
            match row {
                Some(r) => rows.push(r.clone()),
                None => {
                    return Err(parse_err(
                        header_line,
                        format!("complex `{name}`: {k}-cell {cell} has no face line"),
                    ))
                }
            }
        }
        table.push(rows);
    }
    Ok(RawComplex { name, counts, faces: table })
}

fn parse_valued(header_line: usize, header: &[&str], it: &mut Lines) -> Result<RawValued, CliError> {
    let kw = header[0];
    if header.len() != 6 || header[2] != "on" || header[4] != "dim" {
        return Err(parse_err(header_line, format!("expected `{kw} <name> on <complex> dim <k>`")));
    }
    Ok(RawValued {
        name: header[1].to_string(),
        complex: header[3].to_string(),
        dim: parse_num(header_line, header[5], "a dimension")?,
        terms: take_terms(it)?,
    })
}

fn parse_cocycle(
    header_line: usize,
    header: &[&str],
    it: &mut Lines,
) -> Result<RawCocycle, CliError> {
    if header.len() != 6 || header[2] != "on" || header[4] != "mod" {
        return Err(parse_err(header_line, "expected `cocycle <name> on <complex> mod <d>`"));
    }
    let mut labels = Vec::new();
    while let Some((ln, toks)) = it.next_if(|(_, t)| t[0] == "label") {
        if toks.len() != 3 {
            return Err(parse_err(ln, "expected `label <edge> <value>`"));
        }
        labels.push((
            parse_num(ln, toks[1], "an edge index")?,
            parse_num(ln, toks[2], "a label value")?,
        ));
    }
    Ok(RawCocycle {
        name: header[1].to_string(),
        complex: header[3].to_string(),
        modulus: parse_num(header_line, header[5], "a modulus")?,
        labels,
    })
}

fn parse_tower(header_line: usize, header: &[&str]) -> Result<RawTower, CliError> {
    if header.len() != 8 || header[2] != "base" || header[4] != "cocycle" || header[6] != "sheets" {
        return Err(parse_err(
            header_line,
            "expected `tower <name> base <complex> cocycle <cocycle> sheets <d>`",
        ));
    }
    Ok(RawTower {
        name: header[1].to_string(),
        base: header[3].to_string(),
        cocycle: header[5].to_string(),
        sheets: parse_num(header_line, header[7], "a sheet count")?,
    })
}

pub fn parse(text: &str) -> Result<DcxDocument, CliError> {
    let mut lines: Vec<(usize, Vec<&str>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        if !toks.is_empty() {
            lines.push((i + 1, toks));
        }
    }
    let mut it: Lines = lines.into_iter().peekable();

    match it.next() {
        Some((_, t)) if t == ["dcx", "1"] => {}
        Some((ln, _)) => return Err(parse_err(ln, "expected header `dcx 1`")),
        None => return Err(CliError::Parse("empty document: expected header `dcx 1`".into())),
    }

    let mut doc = DcxDocument::default();
    while let Some((ln, toks)) = it.next() {
        match toks[0] {
            "complex" => doc.complexes.push(parse_complex(ln, &toks, &mut it)?),
            "chain" => doc.chains.push(parse_valued(ln, &toks, &mut it)?),
            "cochain" => doc.cochains.push(parse_valued(ln, &toks, &mut it)?),
            "measure" => doc.measures.push(parse_valued(ln, &toks, &mut it)?),
            "cocycle" => doc.cocycles.push(parse_cocycle(ln, &toks, &mut it)?),
            "tower" => doc.towers.push(parse_tower(ln, &toks)?),
            other => return Err(parse_err(ln, format!("unknown directive `{other}`"))),
        }
    }
    Ok(doc)
}

pub fn serialize(doc: &DcxDocument) -> String {
    let mut s = String::from("dcx 1\n");
    for c in &doc.complexes {
        let _ = writeln!(s, "complex {} dim {}", c.name, c.counts.len() - 1);
        for (k, n) in c.counts.iter().enumerate() {
            let _ = writeln!(s, "cells {k} {n}");
        }
        for k in 1..c.counts.len() {
            for (cell, fs) in c.faces[k].iter().enumerate() {
                let _ = write!(s, "face {k} {cell}");
                for f in fs {
                    let _ = write!(s, " {f}");
                }
                s.push('\n');
            }
        }
    }
    for (kw, list) in
        [("chain", &doc.chains), ("cochain", &doc.cochains), ("measure", &doc.measures)]
    {
        for v in list {
            let _ = writeln!(s, "{kw} {} on {} dim {}", v.name, v.complex, v.dim);
            for (cell, q) in &v.terms {
                let _ = writeln!(s, "term {cell} {}", format_rational(q));
            }
        }
    }
    for c in &doc.cocycles {
        let _ = writeln!(s, "cocycle {} on {} mod {}", c.name, c.complex, c.modulus);
        for (e, v) in &c.labels {
            let _ = writeln!(s, "label {e} {v}");
        }
    }
    for t in &doc.towers {
        let _ = writeln!(s, "tower {} base {} cocycle {} sheets {}", t.name, t.base, t.cocycle, t.sheets);
    }
    s
}
