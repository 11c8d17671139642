//! Text formats: graph6, plain edge lists, and DOT export.

use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_MAX_N};

/// Decodes a graph6 string: size header N(n), then the upper triangle in
/// column-major order, 6 bits per byte offset by 63. Padding bits must be zero.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes: Vec<u8> = text.trim_end_matches(['\n', '\r']).bytes().collect();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside the printable range 63..=126")));
    }
    let (n, rest) = parse_size_header(&bytes)?;
    if n > DEFAULT_MAX_N {
        return Err(Error::TooManyVertices { n, cap: DEFAULT_MAX_N });
    }
    let bits = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let need = bits.div_ceil(6);
    if rest.len() != need {
        return Err(Error::Graph6(format!(
            "expected {need} adjacency bytes for n={n}, got {}",
            rest.len()
        )));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0usize; // bit index
    for v in 1..n {
        for u in 0..v {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 != 0 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    // trailing padding must be zero for the encoding to be canonical
    if bits % 6 != 0 {
        let last = rest[need - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

fn parse_size_header(bytes: &[u8]) -> Result<(usize, &[u8])> {
    match bytes {
        [] => Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => Err(Error::Graph6("8-byte size header exceeds the supported range".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated long size header".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            if n <= 62 {
                return Err(Error::Graph6("non-canonical long size header for n <= 62".into()));
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

/// Encodes a graph in canonical graph6 form (minimal-length size header).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + (n >> 12 & 63) as u8);
        out.push(63 + (n >> 6 & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).unwrap()
}

/// Parses the edge-list format: first line `n`, then one `u v` pair per line.
/// Duplicate edges are tolerated; loops and out-of-range indices are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim);
    let first = lines
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::EdgeList("missing vertex-count line".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::EdgeList(format!("bad vertex count {first:?}")))?;
    let mut g = Graph::new(n)?;
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(Error::EdgeList(format!("expected \"u v\", got {line:?}"))),
        };
        let u: usize = u.parse().map_err(|_| Error::EdgeList(format!("bad vertex {u:?}")))?;
        let v: usize = v.parse().map_err(|_| Error::EdgeList(format!("bad vertex {v:?}")))?;
        g.add_edge(u, v)?;
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn emit_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
