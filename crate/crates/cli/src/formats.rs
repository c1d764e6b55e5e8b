//! Text formats for digraphs, matrices and factorizations.
//!
//! All vertex indices are 0-based except in Matrix Market files, which are
//! 1-based by that format's definition. Writers are deterministic: arcs and
//! nonzeros come out in canonical (row-major) order.

use std::fmt::Write as _;

use linedigraph_core::topologies::DeBruijn;
use linedigraph_core::{DicycleFactorization, Digraph, Permutation, ZeroOneMatrix};

pub const MATRIX_MARKET_HEADER: &str = "%%MatrixMarket matrix coordinate integer general";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(&'static str),
    #[error(transparent)]
    Graph(#[from] linedigraph_core::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

// (1-based line number, trimmed content) of every non-blank line
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_fields<const N: usize>(line: usize, s: &str) -> Result<[usize; N], FormatError> {
    let mut out = [0; N];
    let mut fields = s.split_whitespace();
    for slot in &mut out {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(line, format!("expected {N} integers")))?;
        *slot = tok
            .parse()
            .map_err(|_| parse_err(line, format!("not a nonnegative integer: {tok:?}")))?;
    }
    if fields.next().is_some() {
        return Err(parse_err(line, format!("expected {N} integers")));
    }
    Ok(out)
}

/// `n m`, then one `u v` line per arc.
pub fn write_edge_list(d: &Digraph) -> String {
    let mut s = format!("{} {}\n", d.vertex_count(), d.arc_count());
    for &(u, v) in d.arcs() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn read_edge_list(text: &str) -> Result<Digraph, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or(FormatError::Truncated("missing header"))?;
    let [n, m] = parse_fields(hl, header)?;
    let mut arcs = Vec::with_capacity(m);
    for (ln, l) in lines {
        if arcs.len() == m {
            return Err(parse_err(ln, format!("more than the {m} declared arcs")));
        }
        let [u, v] = parse_fields(ln, l)?;
        if u >= n || v >= n {
            return Err(parse_err(ln, format!("arc ({u}, {v}) outside 0..{n}")));
        }
        arcs.push((u, v));
    }
    if arcs.len() != m {
        return Err(FormatError::Truncated("fewer arcs than declared"));
    }
    let d = Digraph::new(n, arcs)?;
    if d.arc_count() != m {
        return Err(parse_err(hl, "duplicate arcs"));
    }
    Ok(d)
}

/// Graphviz digraph with one node statement per vertex.
pub fn write_dot(d: &Digraph) -> String {
    write_dot_labeled(d, |_| None)
}

/// DOT for a de Bruijn digraph, each node labelled with its word.
pub fn write_de_bruijn_dot(b: &DeBruijn) -> String {
    write_dot_labeled(b.digraph(), |x| Some(b.word(x).to_string()))
}

fn write_dot_labeled(d: &Digraph, label: impl Fn(usize) -> Option<String>) -> String {
    let mut s = String::from("digraph {\n");
    for v in 0..d.vertex_count() {
        match label(v) {
            Some(l) => writeln!(s, "  {v} [label=\"{l}\"];").unwrap(),
            None => writeln!(s, "  {v};").unwrap(),
        }
    }
    for &(u, v) in d.arcs() {
        writeln!(s, "  {u} -> {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Coordinate format, 1-based, nonzeros in row-major order.
pub fn write_matrix_market(m: &ZeroOneMatrix) -> String {
    let mut s = format!(
        "{MATRIX_MARKET_HEADER}\n{} {} {}\n",
        m.rows(),
        m.cols(),
        m.nnz()
    );
    for (i, j, v) in m.nonzeros() {
        writeln!(s, "{} {} {v}", i + 1, j + 1).unwrap();
    }
    s
}

/// Accepts `coordinate` files with `integer` or `pattern` fields and
/// `general` symmetry.
pub fn read_matrix_market(text: &str) -> Result<ZeroOneMatrix, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (_, banner) = lines
        .next()
        .ok_or(FormatError::Truncated("missing banner"))?;
    let words: Vec<String> = banner
        .split_whitespace()
        .map(str::to_ascii_lowercase)
        .collect();
    if words.len() != 5 || words[0] != "%%matrixmarket" || words[1] != "matrix" {
        return Err(parse_err(1, "not a Matrix Market banner"));
    }
    if words[2] != "coordinate" {
        return Err(parse_err(1, "only coordinate format is supported"));
    }
    let pattern = match words[3].as_str() {
        "integer" => false,
        "pattern" => true,
        other => return Err(parse_err(1, format!("unsupported field {other:?}"))),
    };
    if words[4] != "general" {
        return Err(parse_err(1, "only general symmetry is supported"));
    }
    let mut data = lines.filter(|(_, l)| !l.is_empty() && !l.starts_with('%'));
    let (sl, size) = data
        .next()
        .ok_or(FormatError::Truncated("missing size line"))?;
    let [rows, cols, nnz] = parse_fields(sl, size)?;
    let mut m = ZeroOneMatrix::zeros(rows, cols);
    let mut seen = 0;
    for (ln, l) in data {
        seen += 1;
        if seen > nnz {
            return Err(parse_err(
                ln,
                format!("more than the {nnz} declared entries"),
            ));
        }
        let (i, j, v) = if pattern {
            let [i, j] = parse_fields(ln, l)?;
            (i, j, 1)
        } else {
            let [i, j, v] = parse_fields(ln, l)?;
            (i, j, v)
        };
        if i == 0 || j == 0 || i > rows || j > cols {
            return Err(parse_err(
                ln,
                format!("entry ({i}, {j}) outside 1..={rows} x 1..={cols}"),
            ));
        }
        let v = u32::try_from(v).map_err(|_| parse_err(ln, "entry too large"))?;
        m.set(i - 1, j - 1, v);
    }
    if seen != nnz {
        return Err(FormatError::Truncated("fewer entries than declared"));
    }
    Ok(m)
}

pub fn read_matrix_market_digraph(text: &str) -> Result<Digraph, FormatError> {
    Ok(Digraph::from_adjacency(&read_matrix_market(text)?)?)
}

/// Rows of space-separated entries.
pub fn write_dense(m: &ZeroOneMatrix) -> String {
    m.to_string()
}

/// Header `d n`, then each factor in one-line image notation.
pub fn write_factorization(f: &DicycleFactorization) -> String {
    let mut s = format!("{} {}\n", f.degree(), f.vertex_count());
    for p in f.factors() {
        writeln!(s, "{p}").unwrap();
    }
    s
}

pub fn read_factorization(text: &str) -> Result<DicycleFactorization, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or(FormatError::Truncated("missing header"))?;
    let [d, n] = parse_fields(hl, header)?;
    let mut factors = Vec::with_capacity(d);
    for (ln, l) in lines {
        let images = l
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(ln, format!("not a nonnegative integer: {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if images.len() != n {
            return Err(parse_err(ln, format!("expected {n} images")));
        }
        factors.push(Permutation::new(images).map_err(|e| parse_err(ln, e.to_string()))?);
    }
    if factors.len() != d {
        return Err(parse_err(
            hl,
            format!("declared {d} factors, found {}", factors.len()),
        ));
    }
    Ok(DicycleFactorization::new(factors)?)
}
